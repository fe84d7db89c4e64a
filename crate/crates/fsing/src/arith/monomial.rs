//! Monomials and monomial orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector with one entry per ring variable.
///
/// Exponents are `u32`; any operation that would overflow is an error
/// rather than a silent wrap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    /// x_i as a monomial.
    pub fn variable(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial { exponents: e }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    /// Product of monomials; errors on 32-bit exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut e = Vec::with_capacity(self.exponents.len());
        for (&a, &b) in self.exponents.iter().zip(&other.exponents) {
            e.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exponents: e })
    }

    /// Raises every exponent by the factor `k`; errors on overflow.
    pub fn checked_pow_scale(&self, k: u32) -> Result<Monomial> {
        let mut e = Vec::with_capacity(self.exponents.len());
        for &a in &self.exponents {
            e.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exponents: e })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(&b, &a)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Componentwise remainder and quotient by `q` (for Frobenius roots).
    pub fn split_mod(&self, q: u32) -> (Monomial, Monomial) {
        let mut rem = Vec::with_capacity(self.exponents.len());
        let mut quo = Vec::with_capacity(self.exponents.len());
        for &a in &self.exponents {
            rem.push(a % q);
            quo.push(a / q);
        }
        (Monomial { exponents: rem }, Monomial { exponents: quo })
    }
}

/// A global monomial order: total, multiplicative, with 1 minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Lexicographic with the first variable most significant.
    Lex,
    /// Graded reverse lexicographic (the default).
    #[default]
    Grevlex,
    /// Block elimination order: grevlex on the first `k` variables,
    /// ties broken by grevlex on the rest. Eliminates the first `k`
    /// variables.
    Block { k: usize },
}

impl MonomialOrder {
    /// Compares two monomials; errors when the lengths differ.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp_exponents(a.exponents(), b.exponents()))
    }

    /// Infallible comparison for internal hot paths; lengths must agree.
    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        self.cmp_exponents(a.exponents(), b.exponents())
    }

    fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Block { k } => {
                let k = k.min(a.len());
                cmp_grevlex(&a[..k], &b[..k]).then_with(|| cmp_grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::Grevlex => "grevlex".to_string(),
            MonomialOrder::Block { k } => format!("block({k})"),
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the last variable in which they differ decides,
    // with the smaller exponent winning.
    for (&x, &y) in a.iter().zip(b).rev() {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x1 > x2 in two variables
        assert_eq!(o.cmp_monomials(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp_monomials(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // classic same-degree case: x^2 > xy > y^2
        assert_eq!(o.cmp_monomials(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp_monomials(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn equal_monomials_compare_equal() {
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::Block { k: 1 },
        ] {
            assert_eq!(
                o.cmp_monomials(&m(&[2, 1, 3]), &m(&[2, 1, 3])),
                Ordering::Equal
            );
        }
    }

    #[test]
    fn block_order_eliminates_leading_variables() {
        let o = MonomialOrder::Block { k: 1 };
        // any power of the first variable beats anything without it
        assert_eq!(
            o.cmp_monomials(&m(&[1, 0, 0]), &m(&[0, 9, 9])),
            Ordering::Greater
        );
        // without the first variable, grevlex on the tail decides
        assert_eq!(
            o.cmp_monomials(&m(&[0, 2, 0]), &m(&[0, 0, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let o = MonomialOrder::Grevlex;
        assert!(o.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    /// Exhaustive order-axiom check on all monomials of degree <= 4 in 3
    /// variables: antisymmetry, transitivity, multiplicativity, 1 minimal.
    #[test]
    fn order_axioms_exhaustive() {
        let mut all = Vec::new();
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                for c in 0..=4u32 {
                    if a + b + c <= 4 {
                        all.push(m(&[a, b, c]));
                    }
                }
            }
        }
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::Block { k: 1 },
            MonomialOrder::Block { k: 2 },
        ] {
            let one = Monomial::one(3);
            for x in &all {
                assert_ne!(o.cmp_monomials(&one, x), Ordering::Greater, "1 not minimal");
                for y in &all {
                    let xy = o.cmp_monomials(x, y);
                    assert_eq!(o.cmp_monomials(y, x), xy.reverse(), "antisymmetry");
                    if xy == Ordering::Equal {
                        assert_eq!(x, y, "distinct monomials compare equal");
                    }
                    // multiplicativity: x < y implies xz < yz
                    for z in &all {
                        let xz = x.checked_mul(z).unwrap();
                        let yz = y.checked_mul(z).unwrap();
                        assert_eq!(o.cmp_monomials(&xz, &yz), xy, "multiplicativity");
                    }
                    // transitivity over a third element
                    for z in &all {
                        if o.cmp_monomials(x, y) == Ordering::Less
                            && o.cmp_monomials(y, z) == Ordering::Less
                        {
                            assert_eq!(o.cmp_monomials(x, z), Ordering::Less, "transitivity");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn overflow_is_detected() {
        let big = m(&[u32::MAX, 0]);
        assert!(big.checked_mul(&m(&[1, 0])).is_err());
        assert!(big.checked_pow_scale(2).is_err());
        assert!(m(&[1, 1]).checked_mul(&m(&[1, 1])).is_ok());
    }
}
