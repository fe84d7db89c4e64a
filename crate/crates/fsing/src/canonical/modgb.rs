//! Groebner bases for submodules of free modules R^m, with the
//! position-over-term order (earlier positions dominate). This is the
//! engine behind syzygies, free resolutions and Ext presentations.
//!
//! Syzygies come out of an augmented module: the generators are extended
//! with unit coordinate vectors, the basis is computed with the original
//! positions as a most-significant block, and the basis members whose
//! original block vanishes are exactly a generating set of the syzygies.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::arith::monomial::Monomial;
use crate::arith::poly::{Polynomial, Term};
use crate::arith::ring::{check_same_ring, poly_zero, Ring};
use crate::canonical::matrix::PolyMatrix;
use crate::error::{Error, Result};

/// Element of a free module, dense by position.
pub(crate) type ModVec = Vec<Polynomial>;

fn vec_is_zero(v: &ModVec) -> bool {
    v.iter().all(Polynomial::is_zero)
}

/// Leading module term under position-over-term: the first nonzero
/// position, with its polynomial's leading term.
fn lead(v: &ModVec) -> Option<(usize, &Term)> {
    v.iter()
        .enumerate()
        .find(|(_, f)| !f.is_zero())
        .map(|(pos, f)| (pos, f.leading_term().unwrap()))
}

fn cmp_module_terms(ring: &Ring, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => ring.order().cmp_monomials(a.1, b.1),
        other => other,
    }
}

/// v - c * x^m * w, componentwise.
fn sub_scaled_vec(v: &ModVec, c: u32, m: &Monomial, w: &ModVec) -> Result<ModVec> {
    v.iter()
        .zip(w)
        .map(|(a, b)| a.sub_scaled(c, m, b))
        .collect()
}

/// Full normal form of a module element against a basis.
fn reduce_vec(v: &ModVec, basis: &[ModVec], ring: &Ring) -> Result<ModVec> {
    let field = ring.field();
    let mut rest = v.clone();
    let mut remainder: Vec<Vec<Term>> = vec![Vec::new(); v.len()];
    'outer: while let Some((pos, lt)) = lead(&rest).map(|(p, t)| (p, t.clone())) {
        for w in basis {
            if let Some((wpos, wt)) = lead(w) {
                if wpos == pos {
                    if let Some(m) = wt.monomial.quotient(&lt.monomial) {
                        let c = field.div(lt.coeff, wt.coeff);
                        rest = sub_scaled_vec(&rest, c, &m, w)?;
                        continue 'outer;
                    }
                }
            }
        }
        remainder[pos].push(lt);
        rest[pos] = rest[pos].without_leading();
    }
    Ok(remainder
        .into_iter()
        .map(|terms| Polynomial::from_canonical_terms(ring.clone(), terms))
        .collect())
}

/// Buchberger for submodules of R^rank. Pairs exist only between
/// elements sharing a leading position; no pair criteria are applied
/// (the coprime criterion is unsound for modules).
fn module_groebner(ring: &Ring, inputs: Vec<ModVec>) -> Result<Vec<ModVec>> {
    let field = ring.field();
    let mut basis: Vec<ModVec> = inputs.into_iter().filter(|v| !vec_is_zero(v)).collect();

    let mut queue: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let enqueue = |queue: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                   basis: &[ModVec],
                   upto: usize,
                   j: usize| {
        let (pj, tj) = lead(&basis[j]).unwrap();
        for (i, v) in basis.iter().enumerate().take(upto) {
            let (pi, ti) = lead(v).unwrap();
            if pi == pj {
                queue.push(Reverse((ti.monomial.lcm(&tj.monomial).degree(), i, j)));
            }
        }
    };
    for j in 0..basis.len() {
        enqueue(&mut queue, &basis, j, j);
    }

    while let Some(Reverse((_, i, j))) = queue.pop() {
        let (pi, ti) = {
            let (p, t) = lead(&basis[i]).unwrap();
            (p, t.clone())
        };
        let (pj, tj) = {
            let (p, t) = lead(&basis[j]).unwrap();
            (p, t.clone())
        };
        debug_assert_eq!(pi, pj);
        let lcm = ti.monomial.lcm(&tj.monomial);
        let mi = ti.monomial.quotient(&lcm).unwrap();
        let mj = tj.monomial.quotient(&lcm).unwrap();
        let ci = field.inv(ti.coeff);
        let cj = field.inv(tj.coeff);
        let a: ModVec = basis[i]
            .iter()
            .map(|f| f.mul_term(ci, &mi))
            .collect::<Result<_>>()?;
        let s = sub_scaled_vec(&a, cj, &mj, &basis[j])?;
        let r = reduce_vec(&s, &basis, ring)?;
        if !vec_is_zero(&r) {
            let t = basis.len();
            basis.push(r);
            enqueue(&mut queue, &basis, t, t);
        }
    }

    interreduce_module(ring, basis)
}

fn interreduce_module(ring: &Ring, basis: Vec<ModVec>) -> Result<Vec<ModVec>> {
    // minimalize: drop elements whose leading term another divides
    let mut keep: Vec<ModVec> = Vec::new();
    'next: for (i, v) in basis.iter().enumerate() {
        let (pv, tv) = lead(v).unwrap();
        for (j, w) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let (pw, tw) = lead(w).unwrap();
            if pw == pv
                && tw.monomial.divides(&tv.monomial)
                && (tw.monomial != tv.monomial || j < i)
            {
                continue 'next;
            }
        }
        keep.push(v.clone());
    }
    // normalize leading coefficients to 1
    let field = ring.field();
    for v in &mut keep {
        let (_, t) = lead(v).unwrap();
        let inv = field.inv(t.coeff);
        if inv != 1 {
            for f in v.iter_mut() {
                *f = f.scale(inv);
            }
        }
    }
    // tail-reduce to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<ModVec> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| w.clone())
                .collect();
            let r = reduce_vec(&keep[i], &others, ring)?;
            if r != keep[i] {
                debug_assert!(!vec_is_zero(&r));
                keep[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    keep.sort_by(|a, b| {
        let (pa, ta) = lead(a).unwrap();
        let (pb, tb) = lead(b).unwrap();
        cmp_module_terms(ring, (pb, &tb.monomial), (pa, &ta.monomial)).reverse()
    });
    Ok(keep)
}

/// Generators of a submodule of R^rank together with the augmented basis
/// that exposes their syzygies and membership certificates.
pub(crate) struct AugmentedModule {
    ring: Ring,
    rank: usize,
    count: usize,
    basis: Vec<ModVec>,
}

impl AugmentedModule {
    /// `gens` are vectors in R^rank; the augmented block records, for each
    /// basis member, its expression in terms of the generators.
    pub(crate) fn new(ring: &Ring, rank: usize, gens: &[ModVec]) -> Result<Self> {
        let count = gens.len();
        let mut inputs = Vec::with_capacity(count);
        for (j, g) in gens.iter().enumerate() {
            if g.len() != rank {
                return Err(Error::DimensionMismatch("module generator length"));
            }
            let mut v: ModVec = Vec::with_capacity(rank + count);
            v.extend(g.iter().cloned());
            for k in 0..count {
                v.push(if k == j {
                    crate::arith::ring::poly_one(ring)
                } else {
                    poly_zero(ring)
                });
            }
            inputs.push(v);
        }
        let basis = module_groebner(ring, inputs)?;
        Ok(AugmentedModule {
            ring: ring.clone(),
            rank,
            count,
            basis,
        })
    }

    /// Coordinate vectors generating the full syzygy module of the
    /// generators: the basis members whose leading block vanished.
    pub(crate) fn syzygies(&self) -> Vec<Vec<Polynomial>> {
        let mut out = Vec::new();
        for v in &self.basis {
            if v[..self.rank].iter().all(Polynomial::is_zero) {
                out.push(v[self.rank..].to_vec());
            }
        }
        out
    }

    /// Expresses `v` as a combination of the generators, if it lies in
    /// their span; reduction uses only basis members whose lead is in the
    /// original block, so the coordinate block accumulates the quotients.
    pub(crate) fn lift(&self, v: &ModVec) -> Result<Option<Vec<Polynomial>>> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch("lift target length"));
        }
        let field = self.ring.field();
        let mut rest: ModVec = Vec::with_capacity(self.rank + self.count);
        rest.extend(v.iter().cloned());
        rest.extend((0..self.count).map(|_| poly_zero(&self.ring)));
        'outer: while let Some((pos, lt)) = lead(&rest).map(|(p, t)| (p, t.clone())) {
            if pos >= self.rank {
                break;
            }
            for w in &self.basis {
                if let Some((wpos, wt)) = lead(w) {
                    if wpos == pos {
                        if let Some(m) = wt.monomial.quotient(&lt.monomial) {
                            let c = field.div(lt.coeff, wt.coeff);
                            rest = sub_scaled_vec(&rest, c, &m, w)?;
                            continue 'outer;
                        }
                    }
                }
            }
            return Ok(None); // leading block term irreducible: not in the span
        }
        if !rest[..self.rank].iter().all(Polynomial::is_zero) {
            return Ok(None);
        }
        Ok(Some(rest[self.rank..].iter().map(|f| -f).collect()))
    }
}

/// Columns generating the full syzygy module { v | M v = 0 } of the
/// columns of M. Every returned column is verified against M.
pub fn syzygy_matrix(m: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = m.ring().clone();
    let cols: Vec<ModVec> = (0..m.cols()).map(|c| m.column(c)).collect();
    for col in &cols {
        for f in col {
            check_same_ring(&ring, f.ring())?;
        }
    }
    let augmented = AugmentedModule::new(&ring, m.rows(), &cols)?;
    let syz = augmented.syzygies();
    let out = PolyMatrix::from_columns(ring, m.cols(), syz)?;
    for c in 0..out.cols() {
        if !m.apply(&out.column(c))?.iter().all(Polynomial::is_zero) {
            return Err(Error::Internal("syzygy column does not annihilate M"));
        }
    }
    Ok(out)
}
