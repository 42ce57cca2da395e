//! Exact arithmetic in cyclotomic fields Q(zeta_n).

mod dft;
pub mod field;
mod number;
mod recognize;
mod root;

pub use dft::{dft, inverse_dft, multiplicities_from_traces};
pub use field::{order_cap, set_order_cap, DEFAULT_ORDER_CAP};
pub use malachite_nz::integer::Integer;
pub use malachite_q::Rational;
pub use number::{CycloSum, Cyclotomic};
pub use recognize::{recognize, Classification, Recognition};
pub use root::RootOfUnity;

/// `zeta_q^k` as a field element.
pub fn root_of_unity(q: u32, k: i64) -> crate::Result<Cyclotomic> {
    Cyclotomic::root_of_unity(q, k)
}
