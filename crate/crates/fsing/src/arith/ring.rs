//! The ambient polynomial ring F_p[x_1, ..., x_n].

use std::sync::Arc;

use crate::arith::field::PrimeField;
use crate::arith::monomial::{Monomial, MonomialOrder};
use crate::arith::poly::{Polynomial, Term};
use crate::error::{Error, Result};

/// Shared, immutable description of a polynomial ring: the prime field,
/// the ordered variable names and the active monomial order.
#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    field: PrimeField,
    variables: Vec<String>,
    order: MonomialOrder,
}

/// Rings are shared by handle; every polynomial and ideal holds one.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new<S: Into<String>>(p: u32, variables: Vec<S>, order: MonomialOrder) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::BadVariables("no variables".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::BadVariables("empty variable name".into()));
            }
            if variables[..i].contains(v) {
                return Err(Error::BadVariables(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block { k } = order {
            if k == 0 || k >= variables.len() {
                return Err(Error::BadVariables(format!(
                    "block order must eliminate between 1 and {} variables",
                    variables.len() - 1
                )));
            }
        }
        Ok(Arc::new(RingSpec {
            field,
            variables,
            order,
        }))
    }

    /// Convenience constructor with the default grevlex order.
    pub fn grevlex<S: Into<String>>(p: u32, variables: Vec<S>) -> Result<Ring> {
        Self::new(p, variables, MonomialOrder::Grevlex)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_name(&self, index: usize) -> &str {
        &self.variables[index]
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// p^e as a u32; errors when it does not fit.
    pub fn prime_power(&self, e: u32) -> Result<u32> {
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q
                .checked_mul(self.p() as u64)
                .ok_or(Error::IntegerOverflow("p^e"))?;
            if q > u32::MAX as u64 {
                return Err(Error::IntegerOverflow("p^e"));
            }
        }
        Ok(q as u32)
    }
}

/// Two handles denote the same ring if they are the same allocation or
/// have identical contents.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn check_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Element-level constructors; free functions so `Ring` stays a plain Arc.
pub fn poly_zero(ring: &Ring) -> Polynomial {
    Polynomial::zero(ring.clone())
}

pub fn poly_constant(ring: &Ring, c: u64) -> Polynomial {
    let c = ring.field().reduce(c);
    if c == 0 {
        return poly_zero(ring);
    }
    Polynomial::from_terms(
        ring.clone(),
        vec![Term {
            coeff: c,
            monomial: Monomial::one(ring.nvars()),
        }],
    )
}

pub fn poly_one(ring: &Ring) -> Polynomial {
    poly_constant(ring, 1)
}

pub fn poly_variable(ring: &Ring, index: usize) -> Polynomial {
    assert!(index < ring.nvars(), "variable index out of range");
    Polynomial::from_terms(
        ring.clone(),
        vec![Term {
            coeff: 1,
            monomial: Monomial::variable(index, ring.nvars()),
        }],
    )
}

/// Builds the extension ring used for elimination: one fresh variable is
/// prepended as a most-significant block, so a Groebner basis under the
/// new order eliminates it.
pub fn elimination_extension(ring: &Ring) -> Ring {
    let mut name = "t".to_string();
    while ring.variable_index(&name).is_some() {
        name.push('_');
    }
    let mut variables = Vec::with_capacity(ring.nvars() + 1);
    variables.push(name);
    variables.extend(ring.variables().iter().cloned());
    RingSpec::new(ring.p(), variables, MonomialOrder::Block { k: 1 })
        .expect("extension of a valid ring is valid")
}

/// Transports a polynomial into the elimination extension (t-degree 0).
pub fn lift_to_extension(ext: &Ring, f: &Polynomial) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let mut e = Vec::with_capacity(ext.nvars());
            e.push(0);
            e.extend_from_slice(t.monomial.exponents());
            Term {
                coeff: t.coeff,
                monomial: Monomial::new(e),
            }
        })
        .collect();
    Polynomial::from_terms(ext.clone(), terms)
}

/// Drops the eliminated variable from a polynomial with t-degree 0.
pub fn project_from_extension(ring: &Ring, f: &Polynomial) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            debug_assert_eq!(t.monomial.exponents()[0], 0);
            Term {
                coeff: t.coeff,
                monomial: Monomial::new(t.monomial.exponents()[1..].to_vec()),
            }
        })
        .collect();
    Polynomial::from_terms(ring.clone(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_variables() {
        assert!(RingSpec::grevlex(2, vec!["x", "y", "x"]).is_err());
        assert!(RingSpec::grevlex(2, Vec::<String>::new()).is_err());
    }

    #[test]
    fn extension_avoids_name_clash() {
        let ring = RingSpec::grevlex(2, vec!["t", "t_"]).unwrap();
        let ext = elimination_extension(&ring);
        assert_eq!(ext.variables(), ["t__", "t", "t_"]);
        assert_eq!(ext.order(), MonomialOrder::Block { k: 1 });
    }

    #[test]
    fn lift_and_project_round_trip() {
        let ring = RingSpec::grevlex(5, vec!["x", "y"]).unwrap();
        let f = poly_variable(&ring, 0) + poly_constant(&ring, 3);
        let ext = elimination_extension(&ring);
        let lifted = lift_to_extension(&ext, &f);
        assert_eq!(project_from_extension(&ring, &lifted), f);
    }

    #[test]
    fn prime_power_bounds() {
        let ring = RingSpec::grevlex(2, vec!["x"]).unwrap();
        assert_eq!(ring.prime_power(10).unwrap(), 1024);
        assert!(ring.prime_power(40).is_err());
    }
}
