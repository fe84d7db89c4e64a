//! Shared fixtures, random generators and oracles for the integration
//! suites.
#![allow(dead_code)] // each test binary uses its own subset

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use fsing::arith::monomial::Monomial;
use fsing::arith::poly::{Polynomial, Term};
use fsing::arith::ring::{Ring, RingSpec};
use fsing::cli::parse::parse_polynomial;
use fsing::groebner::{
    frobenius_power_ideal, ideal_colon, krull_dimension, normal_form, Dimension, Ideal,
};

pub fn poly(ring: &Ring, text: &str) -> Polynomial {
    parse_polynomial(text, ring).unwrap()
}

pub fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(ring.clone(), gens.iter().map(|s| poly(ring, s)).collect()).unwrap()
}

/// The 2x2-minors fixture: p = 2, five variables, the six minors of
/// [[x1, x2, x2, x5], [x4, x4, x3, x1]], and the canonical pre-image
/// (x1, x4, x5) + I.
pub fn determinantal_fixture() -> (Ring, Ideal, Ideal) {
    let ring = RingSpec::grevlex(2, vec!["x1", "x2", "x3", "x4", "x5"]).unwrap();
    let i = ideal(
        &ring,
        &[
            "x1*x4 + x2*x4",
            "x1*x3 + x2*x4",
            "x1^2 + x4*x5",
            "x2*x3 + x2*x4",
            "x1*x2 + x4*x5",
            "x1*x2 + x3*x5",
        ],
    );
    let mut j_gens: Vec<Polynomial> = ["x1", "x4", "x5"].iter().map(|s| poly(&ring, s)).collect();
    j_gens.extend(i.generators().iter().cloned());
    let j = Ideal::new(ring.clone(), j_gens).unwrap();
    (ring, i, j)
}

/// Random monomial with per-variable exponent below `max_exp` and total
/// degree at most `max_deg`.
pub fn random_monomial(rng: &mut StdRng, nvars: usize, max_exp: u32, max_deg: u64) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.random_range(0..=max_exp)).collect();
        let m = Monomial::new(exps);
        if m.degree() <= max_deg {
            return m;
        }
    }
}

/// Random nonzero-ish polynomial (may still cancel to zero mod p).
pub fn random_poly(
    rng: &mut StdRng,
    ring: &Ring,
    max_terms: usize,
    max_exp: u32,
    max_deg: u64,
) -> Polynomial {
    let p = ring.p();
    let terms = (0..rng.random_range(1..=max_terms))
        .map(|_| Term {
            coeff: rng.random_range(1..p.max(2)),
            monomial: random_monomial(rng, ring.nvars(), max_exp, max_deg),
        })
        .collect();
    Polynomial::from_terms(ring.clone(), terms)
}

pub fn random_ideal(
    rng: &mut StdRng,
    ring: &Ring,
    max_gens: usize,
    max_exp: u32,
    max_deg: u64,
) -> Ideal {
    let gens = (0..rng.random_range(1..=max_gens))
        .map(|_| random_poly(rng, ring, 3, max_exp, max_deg))
        .collect();
    Ideal::new(ring.clone(), gens).unwrap()
}

/// Random multiplier valid for the ideal: an F_p-combination of the
/// generators of (I^[p] : I).
pub fn random_multiplier(rng: &mut StdRng, ideal: &Ideal) -> Polynomial {
    let powered = frobenius_power_ideal(ideal, 1).unwrap();
    let colon = ideal_colon(&powered, ideal).unwrap();
    let gens = colon.groebner().unwrap().elements().to_vec();
    let p = ideal.ring().p();
    let mut u = fsing::arith::ring::poly_zero(ideal.ring());
    for g in &gens {
        u = &u + &g.scale(rng.random_range(0..p));
    }
    u
}

/// Small test rings used across the random suites.
pub fn small_rings() -> Vec<Ring> {
    vec![
        RingSpec::grevlex(2, vec!["x", "y"]).unwrap(),
        RingSpec::grevlex(2, vec!["x", "y", "z"]).unwrap(),
        RingSpec::grevlex(3, vec!["x", "y"]).unwrap(),
        RingSpec::grevlex(3, vec!["x", "y", "z"]).unwrap(),
    ]
}

/// Reduced bases are invariant under generator shuffling.
pub fn groebner_uniqueness_under_shuffling(cases: usize) {
    let mut rng = StdRng::seed_from_u64(701);
    let rings = small_rings();
    for case in 0..cases {
        let ring = &rings[case % rings.len()];
        let i = random_ideal(&mut rng, ring, 3, 3, 5);
        let reference = i.groebner().unwrap().elements().to_vec();
        let mut gens = i.generators().to_vec();
        for _ in 0..3 {
            // Fisher-Yates
            for k in (1..gens.len()).rev() {
                let swap_with = rng.random_range(0..=k);
                gens.swap(k, swap_with);
            }
            let shuffled = Ideal::new(ring.clone(), gens.clone()).unwrap();
            assert_eq!(
                shuffled.groebner().unwrap().elements(),
                reference.as_slice(),
                "case {case}: basis depends on generator order"
            );
        }
        // invertible combinations: add a random multiple of one
        // generator to another, which leaves the ideal unchanged
        if gens.len() >= 2 {
            for _ in 0..3 {
                let k = rng.random_range(0..gens.len());
                let mut j = rng.random_range(0..gens.len());
                if j == k {
                    j = (j + 1) % gens.len();
                }
                let r = random_poly(&mut rng, ring, 2, 2, 3);
                gens[k] = &gens[k] + &r.checked_mul(&gens[j]).unwrap();
            }
            let combined = Ideal::new(ring.clone(), gens).unwrap();
            assert_eq!(
                combined.groebner().unwrap().elements(),
                reference.as_slice(),
                "case {case}: basis depends on the generating set"
            );
        }
    }
}

/// Every intersection generator lies in both inputs, and sampled common
/// elements reduce to zero against the intersection basis.
pub fn intersection_membership_oracle(cases: usize) {
    let mut rng = StdRng::seed_from_u64(702);
    let rings = small_rings();
    for case in 0..cases {
        let ring = &rings[case % rings.len()];
        let a = random_ideal(&mut rng, ring, 2, 2, 4);
        let b = random_ideal(&mut rng, ring, 2, 2, 4);
        let meet = fsing::groebner::ideal_intersection(&a, &b).unwrap();
        for g in meet.generators() {
            assert!(a.contains(g).unwrap(), "case {case}: generator outside A");
            assert!(b.contains(g).unwrap(), "case {case}: generator outside B");
        }
        // sample elements of A; those landing in B must be in the meet
        let meet_gb = meet.groebner().unwrap();
        for _ in 0..5 {
            let mut f = fsing::arith::ring::poly_zero(ring);
            for g in a.generators() {
                f = &f
                    + &g.checked_mul(&random_poly(&mut rng, ring, 2, 2, 3))
                        .unwrap();
            }
            if b.contains(&f).unwrap() {
                assert!(
                    normal_form(&f, &meet_gb).unwrap().is_zero(),
                    "case {case}: common element escapes the intersection"
                );
            }
        }
    }
}

/// Colon output multiplies back into A; elements outside the colon have a
/// witness generator of B that they fail against.
pub fn colon_membership_oracle(cases: usize) {
    let mut rng = StdRng::seed_from_u64(703);
    let rings = small_rings();
    let mut negative_checks = 0usize;
    for case in 0..cases {
        let ring = &rings[case % rings.len()];
        let a = random_ideal(&mut rng, ring, 2, 2, 4);
        let b = random_ideal(&mut rng, ring, 2, 2, 3);
        if b.is_zero() {
            continue;
        }
        let quotient = ideal_colon(&a, &b).unwrap();
        for q in quotient.generators() {
            for g in b.generators() {
                assert!(
                    a.contains(&q.checked_mul(g).unwrap()).unwrap(),
                    "case {case}: colon generator does not multiply into A"
                );
            }
        }
        let quotient_gb = quotient.groebner().unwrap();
        for _ in 0..3 {
            let r = random_poly(&mut rng, ring, 3, 2, 4);
            if normal_form(&r, &quotient_gb).unwrap().is_zero() {
                continue;
            }
            negative_checks += 1;
            let witnessed = b
                .generators()
                .iter()
                .any(|g| !a.contains(&r.checked_mul(g).unwrap()).unwrap());
            assert!(
                witnessed,
                "case {case}: {r} outside the colon but no witness"
            );
        }
    }
    assert!(
        negative_checks >= 50,
        "only {negative_checks} negative checks"
    );
}

/// Exhaustive check of `krull_dimension` against a minimal-vertex-cover
/// oracle over every monomial ideal in three variables generated in
/// degree at most 3 (one representative per distinct ideal: the
/// generating antichains under divisibility).
pub fn krull_dimension_vs_vertex_cover_oracle() {
    let ring = RingSpec::grevlex(2, vec!["x", "y", "z"]).unwrap();
    let mut monomials: Vec<Monomial> = Vec::new();
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            for c in 0..=3u32 {
                if (1..=3).contains(&(a + b + c)) {
                    monomials.push(Monomial::new(vec![a, b, c]));
                }
            }
        }
    }
    assert_eq!(monomials.len(), 19);

    let mut antichain: Vec<usize> = Vec::new();
    let mut checked = 0usize;
    check_antichains(&ring, &monomials, 0, &mut antichain, &mut checked);
    assert!(checked > 2000, "antichain enumeration too small: {checked}");
}

fn check_antichains(
    ring: &Ring,
    monomials: &[Monomial],
    from: usize,
    antichain: &mut Vec<usize>,
    checked: &mut usize,
) {
    if !antichain.is_empty() {
        verify_dimension(ring, monomials, antichain);
        *checked += 1;
    }
    for next in from..monomials.len() {
        let m = &monomials[next];
        let comparable = antichain
            .iter()
            .any(|&i| monomials[i].divides(m) || m.divides(&monomials[i]));
        if comparable {
            continue;
        }
        antichain.push(next);
        check_antichains(ring, monomials, next + 1, antichain, checked);
        antichain.pop();
    }
}

fn verify_dimension(ring: &Ring, monomials: &[Monomial], antichain: &[usize]) {
    let gens: Vec<Polynomial> = antichain
        .iter()
        .map(|&i| {
            Polynomial::from_terms(
                ring.clone(),
                vec![Term {
                    coeff: 1,
                    monomial: monomials[i].clone(),
                }],
            )
        })
        .collect();
    let i = Ideal::new(ring.clone(), gens).unwrap();
    let computed = match krull_dimension(&i).unwrap() {
        Dimension::Empty => unreachable!("no constants among the generators"),
        Dimension::Finite(d) => d,
    };
    // oracle: dim = n - (size of a minimum vertex cover of the supports)
    let supports: Vec<u32> = antichain
        .iter()
        .map(|&i| {
            monomials[i]
                .exponents()
                .iter()
                .enumerate()
                .fold(0u32, |m, (v, &e)| if e > 0 { m | 1 << v } else { m })
        })
        .collect();
    let n = 3usize;
    let mut best_cover = n;
    for cover in 0u32..(1 << n) {
        if supports.iter().all(|&s| s & cover != 0) {
            best_cover = best_cover.min(cover.count_ones() as usize);
        }
    }
    assert_eq!(computed, n - best_cover, "antichain {antichain:?}");
}

/// d_i * d_{i+1} = 0 and no differential entry is a unit.
pub fn assert_minimal_complex(res: &fsing::canonical::Resolution) {
    for w in res.steps.windows(2) {
        assert!(
            w[0].checked_mul(&w[1]).unwrap().is_zero(),
            "consecutive differentials do not compose to zero"
        );
    }
    for step in &res.steps {
        for r in 0..step.rows() {
            for c in 0..step.cols() {
                assert!(
                    !step.entry(r, c).is_nonzero_constant(),
                    "unit entry survived minimization"
                );
            }
        }
    }
}

/// The five Cohen-Macaulay fixtures used by the tau-invariance suite:
/// (defining ideal, two distinct valid parameter test elements).
pub fn cm_fixtures() -> Vec<(Ideal, Polynomial, Polynomial)> {
    let r1 = RingSpec::grevlex(2, vec!["x", "y"]).unwrap();
    let r2 = RingSpec::grevlex(2, vec!["x1", "x2", "x3", "x4"]).unwrap();
    let r3 = RingSpec::grevlex(2, vec!["x", "y", "z"]).unwrap();
    vec![
        (ideal(&r1, &["x"]), poly(&r1, "1"), poly(&r1, "1 + x")),
        (
            ideal(&r1, &["x*y"]),
            poly(&r1, "x + y"),
            poly(&r1, "x + y + x*y"),
        ),
        (
            ideal(&r1, &["x^2 + x*y + y^2"]),
            poly(&r1, "x"),
            poly(&r1, "y"),
        ),
        (
            ideal(&r2, &["x1*x2", "x3*x4"]),
            poly(&r2, "(x1 + x2)*(x3 + x4)"),
            poly(&r2, "(x1 + x2)*(x3 + x4) + x1*x2"),
        ),
        (
            ideal(&r3, &["x^2 + x*y + y^2"]),
            poly(&r3, "x"),
            poly(&r3, "y"),
        ),
    ]
}
