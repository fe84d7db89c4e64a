//! Frobenius-theoretic invariants of quotients of polynomial rings over
//! prime fields: Frobenius roots, star closures, nilpotency indices,
//! F-injectivity, and parameter test ideals of Cohen-Macaulay quotients.

pub mod arith;
pub mod canonical;
pub mod cli;
pub mod error;
pub mod frobroot;
pub mod groebner;
pub mod testideal;

pub use arith::{Monomial, MonomialOrder, Polynomial, Ring, RingSpec};
pub use canonical::PolyMatrix;
pub use error::{Error, Result};
pub use groebner::{GBasis, Ideal};

#[cfg(test)]
mod tests {
    /// Values are shareable and transferable across threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::RingSpec>();
        check::<crate::Polynomial>();
        check::<crate::Ideal>();
        check::<crate::GBasis>();
        check::<crate::PolyMatrix>();
        check::<crate::frobroot::FrobeniusPair>();
        check::<crate::testideal::TestIdealReport>();
    }
}
