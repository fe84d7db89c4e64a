//! Buchberger-based Groebner engine: normal forms, reduced bases and the
//! ideal-level operations (sum, product, intersection, colon, Frobenius
//! powers, equality, Krull dimension) everything downstream consumes.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use crate::arith::poly::{Polynomial, Term};
use crate::arith::ring::{
    check_same_ring, elimination_extension, lift_to_extension, poly_one, project_from_extension,
    same_ring, Ring,
};
use crate::error::{Error, Result};

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by another element's leading term, sorted by descending
/// leading monomial. Reduced bases are unique per (ideal, order), so two
/// ideals are equal exactly when these element lists are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_nonzero_constant()
    }
}

/// A finitely generated ideal with a lazily computed, cached reduced
/// Groebner basis for its ring's order. Values are immutable; the cache
/// fills once behind a `OnceLock`.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GBasis>>,
}

impl PartialEq for Ideal {
    /// Generator-list equality; use `ideal_equal` for mathematical equality.
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Builds an ideal, dropping zero generators.
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            check_same_ring(&ring, g.ring())?;
        }
        Ok(Ideal {
            ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal {
            ring,
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: Ring) -> Ideal {
        let one = poly_one(&ring);
        Ideal {
            ring,
            gens: vec![one],
            gb: OnceLock::new(),
        }
    }

    pub fn principal(g: Polynomial) -> Ideal {
        let ring = g.ring().clone();
        Ideal {
            ring,
            gens: if g.is_zero() { Vec::new() } else { vec![g] },
            gb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The zero ideal stores no generators.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis, computed on first use.
    pub fn groebner(&self) -> Result<Arc<GBasis>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let elements = buchberger_reduced(&self.ring, &self.gens)?;
        let gb = Arc::new(GBasis {
            ring: self.ring.clone(),
            elements,
        });
        Ok(self.gb.get_or_init(|| gb).clone())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    /// The ideal generated by a reduced basis, with the basis cache
    /// pre-filled (the reduced basis of the ideal it generates is itself).
    pub fn from_groebner(gb: Arc<GBasis>) -> Ideal {
        let ideal = Ideal {
            ring: gb.ring.clone(),
            gens: gb.elements.clone(),
            gb: OnceLock::new(),
        };
        let _ = ideal.gb.set(gb);
        ideal
    }

    /// Membership test: true iff the normal form against the reduced
    /// basis vanishes.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_same_ring(&self.ring, f.ring())?;
        Ok(normal_form(f, self.groebner()?.as_ref())?.is_zero())
    }
}

/// Remainder of `f` under division by the basis: no term of the result is
/// divisible by any leading term of `basis`. Unique for a reduced basis.
pub fn normal_form(f: &Polynomial, basis: &GBasis) -> Result<Polynomial> {
    check_same_ring(f.ring(), &basis.ring)?;
    reduce_fully(f, &basis.elements)
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// Division with remainder against an arbitrary polynomial list.
fn reduce_fully(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut rest = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    'outer: while let Some(lt) = rest.leading_term().cloned() {
        for g in basis {
            if let Some(lm) = g.leading_monomial() {
                if let Some(m) = lm.quotient(&lt.monomial) {
                    let c = field.div(lt.coeff, g.leading_coeff().unwrap());
                    rest = rest.sub_scaled(c, &m, g)?;
                    continue 'outer;
                }
            }
        }
        remainder.push(lt);
        rest = rest.without_leading();
    }
    Ok(Polynomial::from_canonical_terms(ring, remainder))
}

/// S-polynomial of two monic-or-not basis members.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let field = f.ring().field();
    let lf = f.leading_term().expect("nonzero");
    let lg = g.leading_term().expect("nonzero");
    let lcm = lf.monomial.lcm(&lg.monomial);
    let mf = lf.monomial.quotient(&lcm).expect("lcm divisible");
    let mg = lg.monomial.quotient(&lcm).expect("lcm divisible");
    let a = f.mul_term(field.inv(lf.coeff), &mf)?;
    a.sub_scaled(field.inv(lg.coeff), &mg, g)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u64,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the coprime and chain criteria and
/// normal-strategy selection (smallest lcm degree first), followed by
/// inter-reduction to the unique reduced basis.
fn buchberger_reduced(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();

    let mut queue: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let push_pairs =
        |queue: &mut BinaryHeap<Reverse<PairKey>>, basis: &[Polynomial], upto: usize, j: usize| {
            let lj = basis[j].leading_monomial().unwrap();
            for (i, f) in basis.iter().enumerate().take(upto) {
                let li = f.leading_monomial().unwrap();
                queue.push(Reverse(PairKey {
                    degree: li.lcm(lj).degree(),
                    i,
                    j,
                }));
            }
        };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &basis, j, j);
    }

    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while let Some(Reverse(PairKey { i, j, .. })) = queue.pop() {
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        // coprime leading terms: the S-polynomial reduces to zero
        if li.coprime(lj) {
            done.insert((i, j));
            continue;
        }
        // chain criterion: some treated k divides the lcm on both sides
        let lcm = li.lcm(lj);
        let chained = basis.iter().enumerate().any(|(k, h)| {
            k != i
                && k != j
                && h.leading_monomial().unwrap().divides(&lcm)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chained {
            done.insert((i, j));
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = reduce_fully(&s, &basis)?;
        done.insert((i, j));
        if !r.is_zero() {
            let t = basis.len();
            basis.push(r.monic());
            push_pairs(&mut queue, &basis, t, t);
        }
    }

    interreduce(ring, basis)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes and tail-reduces a Groebner basis into the reduced basis,
/// sorted by descending leading monomial.
fn interreduce(ring: &Ring, basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    // drop elements whose leading term another element's divides
    let mut keep: Vec<Polynomial> = Vec::new();
    'next: for (i, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let lh = h.leading_monomial().unwrap();
            if lh.divides(lg) && (lh != lg || j < i) {
                continue 'next;
            }
        }
        keep.push(g.clone());
    }
    // tail-reduce until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let r = reduce_fully(&keep[i], &others)?.monic();
            if r != keep[i] {
                debug_assert!(!r.is_zero(), "minimal element reduced to zero");
                keep[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    keep.sort_by(|a, b| {
        order.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    Ok(keep)
}

/// Sum A + B: concatenated generators.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(&a.ring, &b.ring)?;
    let mut gens = a.gens.clone();
    gens.extend(b.gens.iter().cloned());
    Ideal::new(a.ring.clone(), gens)
}

/// Product A * B: pairwise generator products.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(&a.ring, &b.ring)?;
    let mut gens = Vec::with_capacity(a.gens.len() * b.gens.len());
    for f in &a.gens {
        for g in &b.gens {
            gens.push(f.checked_mul(g)?);
        }
    }
    Ideal::new(a.ring.clone(), gens)
}

/// Intersection by the auxiliary-variable method: eliminate t from
/// t*A + (1-t)*B. Every output generator is verified to lie in both
/// inputs before it is returned.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(&a.ring, &b.ring)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(a.ring.clone()));
    }
    if a.gens.iter().any(|g| g.is_nonzero_constant()) {
        return Ok(b.clone());
    }
    if b.gens.iter().any(|g| g.is_nonzero_constant()) {
        return Ok(a.clone());
    }

    let ext = elimination_extension(&a.ring);
    let t = crate::arith::ring::poly_variable(&ext, 0);
    let one_minus_t = &poly_one(&ext) - &t;
    let mut gens_ext = Vec::with_capacity(a.gens.len() + b.gens.len());
    for f in &a.gens {
        gens_ext.push(t.checked_mul(&lift_to_extension(&ext, f))?);
    }
    for g in &b.gens {
        gens_ext.push(one_minus_t.checked_mul(&lift_to_extension(&ext, g))?);
    }
    let gb_ext = buchberger_reduced(&ext, &gens_ext)?;

    let mut gens = Vec::new();
    for g in &gb_ext {
        if g.leading_monomial().unwrap().exponents()[0] == 0 {
            // an elimination order keeps t out of every term here
            debug_assert!(g.terms().iter().all(|t| t.monomial.exponents()[0] == 0));
            gens.push(project_from_extension(&a.ring, g));
        }
    }
    let result = Ideal::new(a.ring.clone(), gens)?;
    for g in &result.gens {
        if !a.contains(g)? || !b.contains(g)? {
            return Err(Error::Internal("intersection generator outside an input"));
        }
    }
    Ok(result)
}

/// Quotient of `f` by `b` with zero remainder required; the generators of
/// A meet (b) are exact multiples of b, so failure is an internal error.
fn exact_division(f: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let field = ring.field();
    let lb = b.leading_term().expect("divisor nonzero");
    let mut rest = f.clone();
    let mut quotient: Vec<Term> = Vec::new();
    while let Some(lt) = rest.leading_term().cloned() {
        let m = lb
            .monomial
            .quotient(&lt.monomial)
            .ok_or(Error::Internal("exact division left a remainder"))?;
        let c = field.div(lt.coeff, lb.coeff);
        quotient.push(Term {
            coeff: c,
            monomial: m.clone(),
        });
        rest = rest.sub_scaled(c, &m, b)?;
    }
    Ok(Polynomial::from_canonical_terms(ring, quotient))
}

/// Colon ideal (A : B) = { f | f*B within A }, as the intersection over
/// B's generators of (A : b), each computed as (A meet (b)) / b.
/// The colon by the zero ideal is the whole ring.
pub fn ideal_colon(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(&a.ring, &b.ring)?;
    if b.is_zero() {
        return Ok(Ideal::unit(a.ring.clone()));
    }
    let mut acc: Option<Ideal> = None;
    for g in &b.gens {
        let part = if g.is_nonzero_constant() {
            a.clone()
        } else {
            let meet = ideal_intersection(a, &Ideal::principal(g.clone()))?;
            let gens = meet
                .gens
                .iter()
                .map(|f| exact_division(f, g))
                .collect::<Result<Vec<_>>>()?;
            Ideal::new(a.ring.clone(), gens)?
        };
        acc = Some(match acc {
            None => part,
            Some(prev) => ideal_intersection(&prev, &part)?,
        });
    }
    Ok(acc.expect("nonzero ideal has a nonzero generator"))
}

/// The Frobenius power: the ideal generated by g^(p^e) over the
/// generators g, which generates { a^(p^e) | a in I } since the
/// Frobenius is a ring endomorphism.
pub fn frobenius_power_ideal(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let gens = ideal
        .gens
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring.clone(), gens)
}

/// Frobenius power with its reduced basis carried along: raising a
/// reduced basis termwise to the q-th power yields the reduced basis of
/// the powered ideal, because lt(g^q) = lt(g)^q, S(g^q, h^q) = S(g, h)^q,
/// standard representations raise to standard representations, and
/// divisibility of q-scaled exponent vectors reflects divisibility.
pub fn frobenius_power_groebner(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let gb = ideal.groebner()?;
    let elements = gb
        .elements
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_groebner(Arc::new(GBasis {
        ring: ideal.ring.clone(),
        elements,
    })))
}

/// Mathematical equality via reduced-basis identity.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    check_same_ring(&a.ring, &b.ring)?;
    Ok(a.groebner()?.elements == b.groebner()?.elements)
}

/// Krull dimension of R/I, or `Empty` for the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    /// dim of the empty scheme R/(1).
    Empty,
    Finite(usize),
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Empty => None,
            Dimension::Finite(d) => Some(d),
        }
    }
}

/// Krull dimension of R/I as the largest variable subset independent
/// modulo the leading-term ideal.
pub fn krull_dimension(ideal: &Ideal) -> Result<Dimension> {
    let gb = ideal.groebner()?;
    if gb.is_unit() {
        return Ok(Dimension::Empty);
    }
    let n = ideal.ring.nvars();
    if n > 20 {
        return Err(Error::Precondition(
            "dimension search limited to 20 variables",
        ));
    }
    let supports: Vec<u32> = gb
        .elements
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .exponents()
                .iter()
                .enumerate()
                .fold(0u32, |m, (v, &e)| if e > 0 { m | (1 << v) } else { m })
        })
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << n) {
        // independent: no leading monomial lives entirely inside `subset`
        if supports.iter().all(|&s| s & !subset != 0) {
            best = best.max(subset.count_ones() as usize);
        }
    }
    Ok(Dimension::Finite(best))
}
