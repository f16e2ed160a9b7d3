//! Interchangeable counting routes behind one trait, looked up by name.

use num_bigint::BigUint;

use crate::congruence::{
    count_eq19, count_eq20, count_general_explicit, count_general_ramanujan, count_sburlati, count_unit_coeff,
    count_via_crt, sburlati_applies, CongruenceInstance,
};
use crate::dft::count_by_convolution;
use crate::error::{Error, Result};
use crate::oracle::{oracle_count, OracleBudget};

pub trait CountingMethod: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether [`CountingMethod::count`] can handle `inst`. Routes that only
    /// cover a special family, or that have a size budget, override this.
    fn supports(&self, _inst: &CongruenceInstance) -> bool {
        true
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint>;
}

pub struct Explicit;

impl CountingMethod for Explicit {
    fn name(&self) -> &'static str {
        "explicit"
    }

    fn description(&self) -> &'static str {
        "per-prime product over m_p, r_p, e_p"
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        Ok(count_general_explicit(inst)?.count)
    }
}

pub struct GcdReducedSum;

impl CountingMethod for GcdReducedSum {
    fn name(&self) -> &'static str {
        "gcd-sum"
    }

    fn description(&self) -> &'static str {
        "divisor sum of c_{n/(t_i d_i)}(n/d) with d_i = (a_i, n/t_i)"
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        count_eq19(inst)
    }
}

pub struct MobiusSum;

impl CountingMethod for MobiusSum {
    fn name(&self) -> &'static str {
        "mobius-sum"
    }

    fn description(&self) -> &'static str {
        "divisor sum of c_d(b) Π μ(w_i)/φ(w_i)"
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        count_eq20(inst)
    }
}

pub struct RamanujanSums;

impl CountingMethod for RamanujanSums {
    fn name(&self) -> &'static str {
        "ramanujan"
    }

    fn description(&self) -> &'static str {
        "both divisor-sum forms, required to agree"
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        count_general_ramanujan(inst)
    }
}

pub struct Crt;

impl CountingMethod for Crt {
    fn name(&self) -> &'static str {
        "crt"
    }

    fn description(&self) -> &'static str {
        "product of counts modulo each prime power of n"
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        count_via_crt(inst)
    }
}

pub struct UnitCoefficient;

impl CountingMethod for UnitCoefficient {
    fn name(&self) -> &'static str {
        "unit-coefficient"
    }

    fn description(&self) -> &'static str {
        "divisor sum for x_1 + ... + x_k ≡ b"
    }

    fn supports(&self, inst: &CongruenceInstance) -> bool {
        inst.has_unit_coefficients()
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        if !self.supports(inst) {
            return Err(Error::Unsupported { method: self.name() });
        }
        count_unit_coeff(inst.target() as i64, inst.modulus(), inst.constraints())
    }
}

/// Largest modulus the convolution route accepts; it is quadratic in `n` per operand.
pub const CONVOLUTION_MAX_MODULUS: u64 = 4096;

pub struct Convolution;

impl CountingMethod for Convolution {
    fn name(&self) -> &'static str {
        "convolution"
    }

    fn description(&self) -> &'static str {
        "Cauchy convolution of gcd indicators evaluated at b"
    }

    fn supports(&self, inst: &CongruenceInstance) -> bool {
        inst.has_unit_coefficients() && inst.modulus() <= CONVOLUTION_MAX_MODULUS
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        if !self.supports(inst) {
            return Err(Error::Unsupported { method: self.name() });
        }
        let v = count_by_convolution(inst.target() as i64, inst.modulus(), inst.constraints())?;
        Ok(v.magnitude().clone())
    }
}

pub struct Sburlati;

impl CountingMethod for Sburlati {
    fn name(&self) -> &'static str {
        "sburlati"
    }

    fn description(&self) -> &'static str {
        "product formula for instances with m_p = 1 at every prime"
    }

    fn supports(&self, inst: &CongruenceInstance) -> bool {
        sburlati_applies(inst)
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        count_sburlati(inst)
    }
}

pub struct Oracle {
    pub budget: OracleBudget,
}

impl CountingMethod for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "exhaustive scan of residue tuples"
    }

    fn supports(&self, inst: &CongruenceInstance) -> bool {
        self.budget.check(inst.modulus(), inst.k()).is_ok()
    }

    fn count(&self, inst: &CongruenceInstance) -> Result<BigUint> {
        oracle_count(inst, self.budget)
    }
}

pub struct MethodRegistry {
    methods: Vec<Box<dyn CountingMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        MethodRegistry { methods: Vec::new() }
    }

    pub fn register(&mut self, method: Box<dyn CountingMethod>) -> Result<()> {
        if self.get(method.name()).is_some() {
            return Err(Error::DuplicateMethod(method.name().to_owned()));
        }
        self.methods.push(method);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn CountingMethod> {
        self.methods.iter().find(|m| m.name() == name).map(|m| m.as_ref())
    }

    pub fn lookup(&self, name: &str) -> Result<&dyn CountingMethod> {
        self.get(name).ok_or_else(|| Error::UnknownMethod(name.to_owned()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn CountingMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }

    /// Methods that accept `inst`.
    pub fn applicable<'a>(&'a self, inst: &'a CongruenceInstance) -> impl Iterator<Item = &'a dyn CountingMethod> {
        self.iter().filter(move |m| m.supports(inst))
    }
}

impl Default for MethodRegistry {
    /// Every built-in route; `explicit` first.
    fn default() -> Self {
        MethodRegistry {
            methods: vec![
                Box::new(Explicit),
                Box::new(RamanujanSums),
                Box::new(GcdReducedSum),
                Box::new(MobiusSum),
                Box::new(Crt),
                Box::new(UnitCoefficient),
                Box::new(Convolution),
                Box::new(Sburlati),
                Box::new(Oracle { budget: OracleBudget::default() }),
            ],
        }
    }
}
