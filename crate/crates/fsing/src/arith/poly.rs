//! Sparse multivariate polynomials over F_p.
//!
//! A polynomial is a list of (coefficient, monomial) terms kept strictly
//! descending in the ring's monomial order, with no zero coefficients and
//! no duplicate monomials. The zero polynomial is the empty list, and two
//! equal polynomials have identical term lists.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::monomial::Monomial;
use crate::arith::ring::{check_same_ring, same_ring, Ring};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: u32,
    pub monomial: Monomial,
}

#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

/// The three exact ring operations behind one checked entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic: verifies the operands share a ring, then computes
/// the exact canonical result.
pub fn poly_arith(op: PolyOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_same_ring(&f.ring, &g.ring)?;
    match op {
        PolyOp::Add => Ok(f + g),
        PolyOp::Sub => Ok(f - g),
        PolyOp::Mul => f.checked_mul(g),
    }
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates
    /// mod p and drops zeros, yielding the canonical form.
    pub fn from_terms(ring: Ring, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.retain(|t| t.coeff % field.modulus() != 0);
        for t in &mut terms {
            t.coeff %= field.modulus();
        }
        terms.sort_unstable_by(|a, b| order.cmp_monomials(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(prev) if prev.monomial == t.monomial => {
                    prev.coeff = field.add(prev.coeff, t.coeff);
                    if prev.coeff == 0 {
                        merged.pop();
                    }
                }
                _ => merged.push(t),
            }
        }
        Polynomial {
            ring,
            terms: merged,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.monomial.degree())
            .max()
            .unwrap_or(0)
    }

    /// True for c * 1 with c != 0 (a unit of the polynomial ring).
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> u32 {
        self.terms
            .iter()
            .find(|t| t.monomial.is_one())
            .map_or(0, |t| t.coeff)
    }

    /// Scales by a field constant.
    pub fn scale(&self, c: u32) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.modulus();
        if c == 0 {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(t.coeff, c),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    /// Multiplies by the term c * x^m; errors on exponent overflow.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Result<Polynomial> {
        let field = self.ring.field();
        let c = c % field.modulus();
        if c == 0 {
            return Ok(Polynomial::zero(self.ring.clone()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: field.mul(t.coeff, c),
                monomial: t.monomial.checked_mul(m)?,
            });
        }
        // multiplicative order: term-by-term shift preserves sortedness
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// self - c * x^m * g, by a single merged walk of the two term lists.
    /// This is the inner step of polynomial division.
    pub fn sub_scaled(&self, c: u32, m: &Monomial, g: &Polynomial) -> Result<Polynomial> {
        debug_assert!(same_ring(&self.ring, &g.ring));
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].monomial.checked_mul(m)?;
            let gc = field.mul(c, g.terms[j].coeff);
            match order.cmp_monomials(&self.terms[i].monomial, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: field.neg(gc),
                        monomial: gm,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = field.sub(self.terms[i].coeff, gc);
                    if coeff != 0 {
                        out.push(Term {
                            coeff,
                            monomial: gm,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < g.terms.len() {
            out.push(Term {
                coeff: field.neg(field.mul(c, g.terms[j].coeff)),
                monomial: g.terms[j].monomial.checked_mul(m)?,
            });
            j += 1;
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    /// Exact product; errors on exponent overflow.
    pub fn checked_mul(&self, g: &Polynomial) -> Result<Polynomial> {
        debug_assert!(same_ring(&self.ring, &g.ring));
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * g.terms.len());
        for a in &self.terms {
            for b in &g.terms {
                terms.push(Term {
                    coeff: field.mul(a.coeff, b.coeff),
                    monomial: a.monomial.checked_mul(&b.monomial)?,
                });
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    /// f^k by repeated squaring.
    pub fn checked_pow(&self, mut k: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::from_terms(
            self.ring.clone(),
            vec![Term {
                coeff: 1,
                monomial: Monomial::one(self.ring.nvars()),
            }],
        );
        if k == 0 {
            return Ok(acc);
        }
        loop {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.checked_mul(&base)?;
        }
        Ok(acc)
    }

    /// f^(p^e), computed termwise: the Frobenius is a ring map in
    /// characteristic p, and coefficients are fixed by it over F_p.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        if e == 0 {
            return Ok(self.clone());
        }
        let q = self.ring.prime_power(e)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: t.coeff,
                monomial: t.monomial.checked_pow_scale(q)?,
            });
        }
        // scaling exponents by q preserves the (multiplicative) order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Formal partial derivative with respect to one variable.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.monomial.exponents()[var];
            if e == 0 {
                continue;
            }
            let coeff = field.mul(t.coeff, field.reduce(e as u64));
            if coeff == 0 {
                continue;
            }
            let mut exps = t.monomial.exponents().to_vec();
            exps[var] -= 1;
            terms.push(Term {
                coeff,
                monomial: Monomial::new(exps),
            });
        }
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    /// Internal constructor for term lists already in canonical form.
    pub(crate) fn from_canonical_terms(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .iter()
            .all(|t| t.coeff != 0 && t.coeff < ring.field().modulus()));
        debug_assert!(terms.windows(2).all(|w| {
            ring.order().cmp_monomials(&w[0].monomial, &w[1].monomial) == Ordering::Greater
        }));
        Polynomial { ring, terms }
    }

    /// The polynomial with its leading term removed.
    pub(crate) fn without_leading(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms[1..].to_vec(),
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        merge(self, rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        merge(self, rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(t.coeff),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on exponent overflow; use `checked_mul` where inputs are
    /// not known to be small.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        self.checked_mul(rhs).expect("exponent overflow in product")
    }
}

fn merge(f: &Polynomial, g: &Polynomial, subtract: bool) -> Polynomial {
    let field = f.ring.field();
    let order = f.ring.order();
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let mut i = 0;
    let mut j = 0;
    let rhs = |c: u32| if subtract { field.neg(c) } else { c };
    while i < f.terms.len() && j < g.terms.len() {
        match order.cmp_monomials(&f.terms[i].monomial, &g.terms[j].monomial) {
            Ordering::Greater => {
                out.push(f.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coeff: rhs(g.terms[j].coeff),
                    monomial: g.terms[j].monomial.clone(),
                });
                j += 1;
            }
            Ordering::Equal => {
                let coeff = field.add(f.terms[i].coeff, rhs(g.terms[j].coeff));
                if coeff != 0 {
                    out.push(Term {
                        coeff,
                        monomial: f.terms[i].monomial.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f.terms[i..]);
    for t in &g.terms[j..] {
        out.push(Term {
            coeff: rhs(t.coeff),
            monomial: t.monomial.clone(),
        });
    }
    Polynomial {
        ring: f.ring.clone(),
        terms: out,
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the exact grammar the parser accepts, terms descending:
    /// `x1^3*x2 + 2*x4 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if t.coeff != 1 || t.monomial.is_one() {
                factors.push(t.coeff.to_string());
            }
            for (v, &e) in t.monomial.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.variable_name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.variable_name(v), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
