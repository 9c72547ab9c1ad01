//! Brute-force references that never touch the interval module, used to
//! audit the certified code: exact divisor sums, a high-precision |Γ| and
//! random instances of the Halász–Montgomery inequalities, and 300-bit
//! values of the elementary operations.

mod divisor;
mod gamma;
mod hm;
mod reference;

pub use divisor::{divisor_count, divisor_sum_bruteforce, divisor_sum_pairs, divisor_sums_bruteforce, mobius, mollifier_coeff, DESK_CAP};
pub use gamma::gamma_reference;
pub use hm::{hm_test, HMInstance, HmReport};
pub use reference::{reference_e, reference_pi, reference_value, RefOp, REFERENCE_BITS};
