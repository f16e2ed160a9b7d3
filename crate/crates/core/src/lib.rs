//! Exact counts of solutions to restricted linear congruences
//! `a_1 x_1 + ⋯ + a_k x_k ≡ b (mod n)` with `(x_i, n) = t_i`, computed through
//! Ramanujan sums and the discrete Fourier transform of periodic functions,
//! with a brute-force oracle for cross-checking.
//!
//! ```
//! use ramcount::congruence::{count_general_explicit, CongruenceInstance};
//!
//! let inst = CongruenceInstance::new(24, vec![2, 1, 2], vec![3, 2, 4], 12).unwrap();
//! assert_eq!(count_general_explicit(&inst).unwrap().count, 8u32.into());
//! ```

pub mod arith;
pub mod congruence;
pub mod cyclotomic;
pub mod dft;
pub mod error;
pub mod methods;
pub mod oracle;
pub mod ramanujan;
pub mod verify;

pub use error::{Error, Result};
