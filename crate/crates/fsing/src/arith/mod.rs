//! Exact arithmetic: prime fields, monomials with pluggable orders, and
//! sparse multivariate polynomials.

pub mod field;
pub mod monomial;
pub mod poly;
pub mod ring;

pub use field::PrimeField;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_arith, PolyOp, Polynomial, Term};
pub use ring::{
    elimination_extension, lift_to_extension, poly_constant, poly_one, poly_variable, poly_zero,
    project_from_extension, same_ring, Ring, RingSpec,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse_polynomial;
    use proptest::prelude::*;

    fn ring(p: u32) -> Ring {
        RingSpec::grevlex(p, vec!["x", "y", "z"]).unwrap()
    }

    fn poly(p: u32, s: &str) -> Polynomial {
        parse_polynomial(s, &ring(p)).unwrap()
    }

    #[test]
    fn characteristic_two_cancellation() {
        let f = poly(2, "x + y");
        assert!((&f + &f).is_zero());
    }

    #[test]
    fn freshmans_dream() {
        let f = poly(2, "x + y");
        assert_eq!(&f * &f, poly(2, "x^2 + y^2"));
        assert_eq!(f.frobenius_power(1).unwrap(), poly(2, "x^2 + y^2"));
        let g = poly(3, "x + y");
        assert_eq!(g.frobenius_power(1).unwrap(), poly(3, "x^3 + y^3"));
    }

    #[test]
    fn distributivity_example() {
        assert_eq!(&poly(3, "x") * &poly(3, "x + 2"), poly(3, "x^2 + 2*x"));
    }

    #[test]
    fn zero_polynomial_frobenius() {
        let z = poly_zero(&ring(5));
        assert!(z.frobenius_power(3).unwrap().is_zero());
    }

    #[test]
    fn checked_arith_detects_ring_mismatch() {
        let f = poly(2, "x");
        let g = parse_polynomial("a", &RingSpec::grevlex(2, vec!["a"]).unwrap()).unwrap();
        assert!(poly_arith(PolyOp::Add, &f, &g).is_err());
    }

    /// Random polynomial over a small ring, for property tests.
    fn arb_poly(p: u32) -> impl Strategy<Value = Polynomial> {
        let r = ring(p);
        proptest::collection::vec(((0u32..p), [0u32..5, 0u32..5, 0u32..5]), 0..8).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    r.clone(),
                    terms
                        .into_iter()
                        .map(|(c, e)| Term {
                            coeff: c,
                            monomial: Monomial::new(e.to_vec()),
                        })
                        .collect(),
                )
            },
        )
    }

    fn arb_poly_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
        prop_oneof![Just(2u32), Just(3), Just(7)]
            .prop_flat_map(|p| (arb_poly(p), arb_poly(p), arb_poly(p)))
    }

    proptest! {
        #[test]
        fn ring_axioms((f, g, h) in arb_poly_triple()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn frobenius_is_additive((f, g, _) in arb_poly_triple(), e in 1u32..3) {
            prop_assert_eq!(
                (&f + &g).frobenius_power(e).unwrap(),
                &f.frobenius_power(e).unwrap() + &g.frobenius_power(e).unwrap()
            );
        }
    }

    #[test]
    fn frobenius_agrees_with_repeated_squaring() {
        // oracle: f^(p^e) computed as an ordinary power
        for p in [2u32, 3] {
            let r = ring(p);
            let samples = [
                "x + y + z",
                "x^2*y + 2*z",
                "x*y*z + x + 1",
                "z^3 + y^2 + x",
                "0",
            ];
            for s in samples {
                let f = parse_polynomial(s, &r).unwrap();
                for e in 1u32..=2 {
                    let q = p.pow(e) as u64;
                    assert_eq!(
                        f.frobenius_power(e).unwrap(),
                        f.checked_pow(q).unwrap(),
                        "p={p} e={e} f={s}"
                    );
                }
            }
        }
    }
}
