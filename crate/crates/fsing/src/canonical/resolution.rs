//! Free resolutions by iterated syzygies with unit-entry pruning, and
//! minimal presentations of Ext^delta(R/I, R).

use crate::arith::poly::Polynomial;
use crate::canonical::matrix::PolyMatrix;
use crate::canonical::modgb::{syzygy_matrix, AugmentedModule, ModVec};
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, Dimension, Ideal};

/// A free resolution of R/I: `steps[i]` is the differential from the
/// (i+2)-nd free module to the (i+1)-st, `steps[0]` being the row of
/// generators. `complete` is false when the length cap stopped the
/// computation early, in which case the steps are the partial data.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub steps: Vec<PolyMatrix>,
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.steps.len()
    }
}

/// Minimal free resolution of R/I up to `max_length` steps: iterated
/// syzygies, pruning unit entries after each step. For graded input the
/// result is the minimal graded resolution.
pub fn free_resolution(ideal: &Ideal, max_length: usize) -> Result<Resolution> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal("free resolution"));
    }
    let ring = ideal.ring().clone();
    if ideal.is_zero() || max_length == 0 {
        return Ok(Resolution {
            steps: Vec::new(),
            complete: ideal.is_zero(),
        });
    }
    let d1 = PolyMatrix::from_rows(ring, vec![ideal.generators().to_vec()])?;
    let mut steps = vec![d1];
    loop {
        if steps.len() >= max_length {
            return Ok(Resolution {
                steps,
                complete: false,
            });
        }
        let mut syz = syzygy_matrix(steps.last().unwrap())?;
        prune_units(&mut syz, Some(steps.last_mut().unwrap()))?;
        if syz.cols() == 0 {
            return Ok(Resolution {
                steps,
                complete: true,
            });
        }
        steps.push(syz);
    }
}

/// Removes unit entries from `target` by column operations and
/// row/column deletion. A pivot entry at (r, c) expresses basis element
/// r of the middle module through the others, so column r of the
/// previous differential (when given) is a combination of the remaining
/// columns and is deleted with it. Pivots are nonzero constants, i.e.
/// genuine units of the polynomial ring; for graded matrices these are
/// exactly the degree-zero entries.
fn prune_units(target: &mut PolyMatrix, mut previous: Option<&mut PolyMatrix>) -> Result<()> {
    let ring = target.ring().clone();
    let field = ring.field();
    loop {
        let pivot = (0..target.rows())
            .flat_map(|r| (0..target.cols()).map(move |c| (r, c)))
            .find(|&(r, c)| target.entry(r, c).is_nonzero_constant());
        let Some((r, c)) = pivot else {
            return Ok(());
        };
        let lambda_inv = field.inv(target.entry(r, c).constant_coeff());
        for c2 in 0..target.cols() {
            if c2 == c || target.entry(r, c2).is_zero() {
                continue;
            }
            let factor = target.entry(r, c2).scale(lambda_inv);
            for r2 in 0..target.rows() {
                let sub = factor.checked_mul(target.entry(r2, c))?;
                *target.entry_mut(r2, c2) = target.entry(r2, c2) - &sub;
            }
        }
        debug_assert!((0..target.cols()).all(|c2| c2 == c || target.entry(r, c2).is_zero()));
        target.delete_row(r);
        target.delete_col(c);
        if let Some(prev) = previous.as_deref_mut() {
            prev.delete_col(r);
        }
    }
}

/// A minimal presentation matrix of Ext^delta(R/I, R): the cokernel
/// presentation of ker(d_{delta+1}^T)/im(d_delta^T), pruned so the row
/// count is the minimal number of generators. Requires delta to equal
/// dim R - dim R/I.
pub fn ext_presentation(ideal: &Ideal, delta: usize) -> Result<PolyMatrix> {
    let ring = ideal.ring().clone();
    let dim = match krull_dimension(ideal)? {
        Dimension::Empty => return Err(Error::UnitIdeal("Ext presentation")),
        Dimension::Finite(d) => d,
    };
    let expected = ring.nvars() - dim;
    if delta != expected || delta == 0 {
        return Err(Error::DeltaMismatch {
            expected,
            given: delta,
        });
    }
    let resolution = free_resolution(ideal, delta + 1)?;
    if resolution.length() < delta {
        return Err(Error::Internal("resolution shorter than the codimension"));
    }
    if resolution.length() == delta {
        // the resolution stops at delta: Ext is the cokernel of the
        // transposed last differential
        let mut p = resolution.steps[delta - 1].transpose();
        prune_units(&mut p, None)?;
        return Ok(p);
    }
    // general case: Ext = ker(d_{delta+1}^T) / im(d_delta^T)
    let d_next_t = resolution.steps[delta].transpose();
    let d_prev_t = resolution.steps[delta - 1].transpose();
    let kernel = syzygy_matrix(&d_next_t)?;
    if kernel.cols() == 0 {
        return PolyMatrix::new(ring, 0, 0, Vec::new());
    }
    let kernel_cols: Vec<ModVec> = (0..kernel.cols()).map(|c| kernel.column(c)).collect();
    let augmented = AugmentedModule::new(&ring, kernel.rows(), &kernel_cols)?;
    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    for c in 0..d_prev_t.cols() {
        let lifted = augmented
            .lift(&d_prev_t.column(c))?
            .ok_or(Error::Internal("image column outside the kernel"))?;
        columns.push(lifted);
    }
    columns.extend(augmented.syzygies());
    let mut p = PolyMatrix::from_columns(ring, kernel.cols(), columns)?;
    prune_units(&mut p, None)?;
    Ok(p)
}
