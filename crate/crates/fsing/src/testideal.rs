//! The parameter-test-ideal pipeline for Cohen-Macaulay quotients, and
//! F-injectivity reports.
//!
//! Pipeline: certify Cohen-Macaulayness, build the multiplier u from the
//! canonical pre-image J, require the Frobenius action to be torsion-free,
//! star-close c*J + I for a parameter test element c, and colon out J.
//! The result tau is the pre-image in R of the parameter test ideal of
//! R/I; the quotient is F-rational exactly when tau is the unit ideal.

use std::time::{Duration, Instant};

use crate::arith::poly::Polynomial;
use crate::arith::ring::check_same_ring;
use crate::canonical::{free_resolution, suggest_test_element, u_generator};
use crate::error::{Error, Result};
use crate::frobroot::{
    fedder_f_injective, nilpotency_analysis, star_closure, FrobeniusPair, NilpotencyReport,
};
use crate::groebner::{
    ideal_colon, ideal_equal, ideal_product, ideal_sum, krull_dimension, Dimension, Ideal,
};

/// How the canonical module enters the pipeline: Gorenstein quotients
/// take J = (1); otherwise the caller supplies the full pre-image in R
/// of a canonical ideal of R/I.
#[derive(Debug, Clone)]
pub enum CanonicalInput {
    Gorenstein,
    Preimage(Ideal),
}

#[derive(Debug, Clone)]
pub struct TestIdealReport {
    /// The multiplier u carrying the Frobenius structure.
    pub multiplier: Polynomial,
    /// The canonical pre-image J that was used.
    pub canonical_preimage: Ideal,
    /// The parameter test element c that was used.
    pub test_element: Polynomial,
    /// The star closure (cJ + I)^(*u).
    pub star: Ideal,
    /// Pre-image in R of the parameter test ideal of R/I.
    pub tau: Ideal,
    /// True exactly when tau is the unit ideal.
    pub f_rational: bool,
    pub nilpotency: NilpotencyReport,
    /// Seed that drove any random draws (echoed for reproducibility).
    pub seed: u64,
    /// Wall-clock time per pipeline stage.
    pub timings: Vec<(&'static str, Duration)>,
}

/// Certifies that R/I is Cohen-Macaulay by comparing the minimal
/// resolution length with the codimension; returns the codimension.
fn certify_cohen_macaulay(ideal: &Ideal) -> Result<usize> {
    let n = ideal.ring().nvars();
    let dim = match krull_dimension(ideal)? {
        Dimension::Empty => return Err(Error::UnitIdeal("parameter test ideal")),
        Dimension::Finite(d) => d,
    };
    let codim = n - dim;
    let resolution = free_resolution(ideal, n + 1)?;
    if !resolution.complete || resolution.length() != codim {
        return Err(Error::NotCohenMacaulay {
            codim,
            resolution_length: resolution.length(),
        });
    }
    Ok(codim)
}

pub fn parameter_test_ideal(
    ideal: &Ideal,
    canonical: CanonicalInput,
    test_element: Option<Polynomial>,
    seed: u64,
) -> Result<TestIdealReport> {
    let ring = ideal.ring().clone();
    let mut timings = Vec::new();

    let t = Instant::now();
    certify_cohen_macaulay(ideal)?;
    timings.push(("cm-certificate", t.elapsed()));

    let canonical_preimage = match canonical {
        CanonicalInput::Gorenstein => Ideal::unit(ring.clone()),
        CanonicalInput::Preimage(j) => {
            check_same_ring(&ring, j.ring())?;
            j
        }
    };

    let t = Instant::now();
    let multiplier = u_generator(ideal, &canonical_preimage)?;
    timings.push(("u-generator", t.elapsed()));

    let t = Instant::now();
    let pair = FrobeniusPair::new(ideal.clone(), multiplier.clone())?;
    let nilpotency = nilpotency_analysis(&pair)?;
    if !nilpotency.torsion_free {
        return Err(Error::NotTorsionFree);
    }
    timings.push(("nilpotency", t.elapsed()));

    let t = Instant::now();
    let test_element = match test_element {
        Some(c) => {
            check_same_ring(&ring, c.ring())?;
            if c.is_zero() {
                return Err(Error::InvalidTestElement("zero element".into()));
            }
            let quotient = ideal_colon(ideal, &Ideal::principal(c.clone()))?;
            if !ideal_equal(&quotient, ideal)? {
                return Err(Error::InvalidTestElement(format!(
                    "{c} is a zerodivisor modulo the ideal"
                )));
            }
            c
        }
        None => suggest_test_element(ideal, seed)?,
    };
    timings.push(("test-element", t.elapsed()));

    let t = Instant::now();
    let scaled = ideal_product(&Ideal::principal(test_element.clone()), &canonical_preimage)?;
    let base = ideal_sum(&scaled, ideal)?;
    let star = star_closure(&base, &multiplier, 1)?;
    timings.push(("star-closure", t.elapsed()));

    let t = Instant::now();
    let tau = ideal_colon(&star, &canonical_preimage)?;
    timings.push(("colon", t.elapsed()));

    if !tau.contains(&test_element)? {
        return Err(Error::Internal("test element outside tau"));
    }
    if !crate::frobroot::is_es_ideal(&star, &pair)? {
        return Err(Error::Internal("star closure is not multiplier-stable"));
    }
    let f_rational = tau.is_unit()?;

    Ok(TestIdealReport {
        multiplier,
        canonical_preimage,
        test_element,
        star,
        tau,
        f_rational,
        nilpotency,
        seed,
        timings,
    })
}

/// How the Frobenius structure is obtained for an F-injectivity verdict.
#[derive(Debug, Clone)]
pub enum FInjectivityMode {
    /// Treat the generator list as a regular sequence and use Fedder's
    /// multiplier (the regular-sequence property is not verified).
    CompleteIntersection,
    /// Build the multiplier from a canonical pre-image as in the
    /// test-ideal pipeline.
    General(CanonicalInput),
}

#[derive(Debug, Clone)]
pub struct FInjectivityReport {
    pub f_injective: bool,
    pub eta: usize,
    pub nil_ideal: Ideal,
    pub multiplier: Polynomial,
}

pub fn f_injectivity_report(ideal: &Ideal, mode: FInjectivityMode) -> Result<FInjectivityReport> {
    let multiplier = match mode {
        FInjectivityMode::CompleteIntersection => {
            fedder_f_injective(ideal.generators())?.multiplier
        }
        FInjectivityMode::General(canonical) => {
            certify_cohen_macaulay(ideal)?;
            let j = match canonical {
                CanonicalInput::Gorenstein => Ideal::unit(ideal.ring().clone()),
                CanonicalInput::Preimage(j) => j,
            };
            u_generator(ideal, &j)?
        }
    };
    let pair = FrobeniusPair::new(ideal.clone(), multiplier.clone())?;
    let report = nilpotency_analysis(&pair)?;
    Ok(FInjectivityReport {
        f_injective: report.torsion_free,
        eta: report.eta,
        nil_ideal: report.nil_ideal,
        multiplier,
    })
}
