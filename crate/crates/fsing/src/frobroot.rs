//! The characteristic-p core: Frobenius roots, star closures, nilpotency
//! chains, E_S-ideal tests and Fedder's criterion.
//!
//! Everything here works on the ideal side of Matlis duality. A Frobenius
//! structure on the injective hull of the residue field of R/I is carried
//! by a multiplier u with u*I inside I^[p^e], and submodules correspond to
//! ideals L containing I with u*L inside L^[p^e].

use crate::arith::monomial::Monomial;
use crate::arith::poly::{Polynomial, Term};
use crate::arith::ring::{check_same_ring, poly_one, Ring};
use crate::canonical::PolyMatrix;
use crate::error::{Error, Result};
use crate::groebner::{frobenius_power_groebner, ideal_equal, ideal_sum, normal_form, Ideal};

/// nu_e = 1 + p + ... + p^(e-1); errors once the value leaves 63 bits.
pub fn nu(e: u32, p: u32) -> Result<u64> {
    nu_base(e as u64, p as u64)
}

fn nu_base(e: u64, q: u64) -> Result<u64> {
    if e == 0 {
        return Ok(0);
    }
    let limit = 1u64 << 63;
    let mut acc: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_add(power).ok_or(Error::IntegerOverflow("nu"))?;
        power = power.checked_mul(q).ok_or(Error::IntegerOverflow("nu"))?;
        if acc >= limit {
            return Err(Error::IntegerOverflow("nu"));
        }
    }
    Ok(acc)
}

/// The e-th Frobenius root of a principal ideal: the smallest ideal L
/// with g in L^[p^e].
///
/// Over the free basis of monomials with all exponents below q = p^e,
/// g decomposes uniquely as a sum of g_b^q * b; the root is generated by
/// the g_b. Coefficients pass through unchanged since c^q = c in F_p.
pub fn frobenius_root_poly(g: &Polynomial, e: u32) -> Result<Ideal> {
    if e == 0 {
        return Err(Error::Precondition("Frobenius roots need e >= 1"));
    }
    let ring = g.ring().clone();
    let q = ring.prime_power(e)?;
    let mut keys: Vec<Monomial> = Vec::new();
    let mut buckets: Vec<Vec<Term>> = Vec::new();
    for t in g.terms() {
        let (residue, quotient) = t.monomial.split_mod(q);
        let slot = match keys.iter().position(|k| *k == residue) {
            Some(i) => i,
            None => {
                keys.push(residue);
                buckets.push(Vec::new());
                keys.len() - 1
            }
        };
        buckets[slot].push(Term {
            coeff: t.coeff,
            monomial: quotient,
        });
    }
    let order = ring.order();
    let mut indexed: Vec<usize> = (0..keys.len()).collect();
    indexed.sort_by(|&a, &b| order.cmp_monomials(&keys[b], &keys[a]));
    let gens = indexed
        .into_iter()
        .map(|i| Polynomial::from_terms(ring.clone(), buckets[i].clone()))
        .collect();
    Ideal::new(ring, gens)
}

/// The e-th Frobenius root of an ideal: the sum of the roots of its
/// generators (roots are additive over generating sets), hence the
/// smallest L with A inside L^[p^e].
pub fn frobenius_root_ideal(a: &Ideal, e: u32) -> Result<Ideal> {
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.extend(frobenius_root_poly(g, e)?.generators().iter().cloned());
    }
    Ideal::new(a.ring().clone(), gens)
}

/// Default iteration cap for the provably stabilizing chains.
fn default_cap(ring: &Ring, e: u32) -> u64 {
    let q = ring.prime_power(e).map_or(u64::MAX / 16, |q| q as u64);
    10u64.saturating_mul(ring.nvars() as u64).saturating_mul(q)
}

/// The star closure A^(*e, u): the stable value of the ascending chain
/// A_0 = A, A_{i+1} = root(u * A_i, e) + A_i. The result L is the
/// smallest ideal containing A with u*L inside L^[p^e].
pub fn star_closure(a: &Ideal, u: &Polynomial, e: u32) -> Result<Ideal> {
    star_closure_with_cap(a, u, e, default_cap(a.ring(), e))
}

pub fn star_closure_with_cap(a: &Ideal, u: &Polynomial, e: u32, cap: u64) -> Result<Ideal> {
    check_same_ring(a.ring(), u.ring())?;
    let mut current = a.clone();
    for _ in 0..cap {
        let gb = current.groebner()?;
        let mut fresh: Vec<Polynomial> = Vec::new();
        for g in gb.elements() {
            let ug = u.checked_mul(g)?;
            for root_gen in frobenius_root_poly(&ug, e)?.generators() {
                if !normal_form(root_gen, &gb)?.is_zero() {
                    fresh.push(root_gen.clone());
                }
            }
        }
        if fresh.is_empty() {
            return Ok(Ideal::from_groebner(gb));
        }
        let mut gens = gb.elements().to_vec();
        gens.extend(fresh);
        current = Ideal::new(a.ring().clone(), gens)?;
    }
    Err(Error::IterationCap {
        what: "star closure",
        cap,
    })
}

/// The defining ideal I together with a multiplier u such that u*I lies
/// in I^[p^e]; this is the Matlis-dual datum of a Frobenius action on the
/// injective hull of the residue field of R/I.
#[derive(Debug, Clone)]
pub struct FrobeniusPair {
    ideal: Ideal,
    multiplier: Polynomial,
    power: u32,
}

impl FrobeniusPair {
    /// An e = 1 pair, validated.
    pub fn new(ideal: Ideal, multiplier: Polynomial) -> Result<Self> {
        Self::with_power(ideal, multiplier, 1)
    }

    pub fn with_power(ideal: Ideal, multiplier: Polynomial, power: u32) -> Result<Self> {
        check_same_ring(ideal.ring(), multiplier.ring())?;
        if power == 0 {
            return Err(Error::EmptyInput("Frobenius pair power must be positive"));
        }
        let powered = frobenius_power_groebner(&ideal, power)?;
        let gb = powered.groebner()?;
        for g in ideal.generators() {
            if !normal_form(&multiplier.checked_mul(g)?, &gb)?.is_zero() {
                return Err(Error::InvalidFrobeniusPair);
            }
        }
        Ok(FrobeniusPair {
            ideal,
            multiplier,
            power,
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn multiplier(&self) -> &Polynomial {
        &self.multiplier
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    fn ring(&self) -> &Ring {
        self.ideal.ring()
    }
}

/// Which formula drives the nilpotency chain J_e. The two differ in
/// whether I sits inside the root; the `Theorem` form (the default) takes
/// the root of u^(nu_e) alone and then adds I, giving the smallest ideal
/// containing I whose [p^e]-bracket contains u^(nu_e).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChainFormula {
    #[default]
    Theorem,
    /// root(u^(nu_e) R + I, e) + I.
    Restatement,
}

/// The nilpotency structure of the Frobenius action: the descending chain
/// J_1, J_2, ... whose stable member's annihilator carries the nilpotent
/// elements, the index of nilpotency eta, and the torsion-free verdict.
#[derive(Debug, Clone)]
pub struct NilpotencyReport {
    /// J_1 ... J_(alpha+1); the last two entries are equal.
    pub chain: Vec<Ideal>,
    /// 0 exactly when torsion-free, else the first stable index.
    pub eta: usize,
    /// The stable chain member.
    pub nil_ideal: Ideal,
    /// True when J_1 is the unit ideal: the action has no nilpotents.
    pub torsion_free: bool,
    /// Whether the alternative chain formula reaches the same stable
    /// ideal and index.
    pub restatement_agrees: bool,
}

pub fn nilpotency_analysis(fp: &FrobeniusPair) -> Result<NilpotencyReport> {
    nilpotency_analysis_with_cap(fp, default_cap(fp.ring(), fp.power))
}

pub fn nilpotency_analysis_with_cap(fp: &FrobeniusPair, cap: u64) -> Result<NilpotencyReport> {
    let (chain, eta, nil_ideal, torsion_free) = nilpotency_chain(fp, ChainFormula::Theorem, cap)?;
    let (_, eta2, nil2, _) = nilpotency_chain(fp, ChainFormula::Restatement, cap)?;
    let restatement_agrees = eta == eta2 && ideal_equal(&nil_ideal, &nil2)?;
    Ok(NilpotencyReport {
        chain,
        eta,
        nil_ideal,
        torsion_free,
        restatement_agrees,
    })
}

/// One chain run under a chosen formula; returns (chain, eta, stable,
/// torsion_free).
fn nilpotency_chain(
    fp: &FrobeniusPair,
    formula: ChainFormula,
    cap: u64,
) -> Result<(Vec<Ideal>, usize, Ideal, bool)> {
    let q = fp.ring().prime_power(fp.power)? as u64;
    let mut chain: Vec<Ideal> = Vec::new();
    for k in 1..=cap {
        let nu_k = nu_base(k, q)?;
        let u_pow = fp.multiplier.checked_pow(nu_k)?;
        let root = match formula {
            ChainFormula::Theorem => frobenius_root_poly(&u_pow, fp.power * k as u32)?,
            ChainFormula::Restatement => {
                let inner = ideal_sum(&Ideal::principal(u_pow), &fp.ideal)?;
                frobenius_root_ideal(&inner, fp.power * k as u32)?
            }
        };
        let j_k = ideal_sum(&root, &fp.ideal)?;
        chain.push(j_k);
        let n = chain.len();
        if n >= 2 && ideal_equal(&chain[n - 2], &chain[n - 1])? {
            let torsion_free = chain[0].is_unit()?;
            let stable = chain[n - 1].clone();
            if torsion_free && !stable.is_unit()? {
                return Err(Error::Internal(
                    "unit chain head with a proper stable member",
                ));
            }
            let eta = if torsion_free { 0 } else { n - 1 };
            return Ok((chain, eta, stable, torsion_free));
        }
    }
    Err(Error::IterationCap {
        what: "nilpotency chain",
        cap,
    })
}

/// The stable value of the ascending chain L_alpha = (I^[p^alpha] :
/// u^(nu_alpha)); its annihilator is the largest nilpotent quotient, and
/// the stable value is an E_S-ideal.
pub fn stable_colon_chain(fp: &FrobeniusPair) -> Result<Ideal> {
    stable_colon_chain_with_cap(fp, default_cap(fp.ring(), fp.power))
}

pub fn stable_colon_chain_with_cap(fp: &FrobeniusPair, cap: u64) -> Result<Ideal> {
    let q = fp.ring().prime_power(fp.power)? as u64;
    let mut chain: Vec<Ideal> = Vec::new();
    for k in 1..=cap {
        let nu_k = nu_base(k, q)?;
        let powered = frobenius_power_groebner(&fp.ideal, fp.power * k as u32)?;
        let u_pow = fp.multiplier.checked_pow(nu_k)?;
        let l_k = crate::groebner::ideal_colon(&powered, &Ideal::principal(u_pow))?;
        chain.push(l_k);
        let n = chain.len();
        if n >= 2 {
            // ascent check: L_{k-1} within L_k
            let gb = chain[n - 1].groebner()?;
            for g in chain[n - 2].generators() {
                if !normal_form(g, &gb)?.is_zero() {
                    return Err(Error::Internal("colon chain is not ascending"));
                }
            }
            if ideal_equal(&chain[n - 2], &chain[n - 1])? {
                let stable = chain[n - 1].clone();
                let stable_gb = stable.groebner()?;
                for g in fp.ideal.generators() {
                    if !normal_form(g, &stable_gb)?.is_zero() {
                        return Err(Error::Internal("colon chain does not contain I"));
                    }
                }
                if !is_es_ideal(&stable, fp)? {
                    return Err(Error::Internal("stable colon value is not an E_S-ideal"));
                }
                return Ok(stable);
            }
        }
    }
    Err(Error::IterationCap {
        what: "stable colon chain",
        cap,
    })
}

/// True iff L contains I and u*g lies in L^[p^e] for every generator g
/// of L, i.e. the annihilator of L is a submodule of the action.
pub fn is_es_ideal(l: &Ideal, fp: &FrobeniusPair) -> Result<bool> {
    check_same_ring(l.ring(), fp.ring())?;
    let gb_l = l.groebner()?;
    for g in fp.ideal.generators() {
        if !normal_form(g, &gb_l)?.is_zero() {
            return Ok(false);
        }
    }
    let powered = frobenius_power_groebner(l, fp.power)?;
    let gb_lp = powered.groebner()?;
    for g in l.generators() {
        if !normal_form(&fp.multiplier.checked_mul(g)?, &gb_lp)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fedder's criterion for a complete intersection.
#[derive(Debug, Clone)]
pub struct FedderReport {
    pub f_injective: bool,
    /// The multiplier u = (u_1 * ... * u_s)^(p-1).
    pub multiplier: Polynomial,
}

/// Decides F-injectivity of R/(u_1, ..., u_s) for a regular sequence by
/// testing u = (prod u_i)^(p-1) against the Frobenius power of the
/// maximal ideal. The regular-sequence property is assumed, not checked.
pub fn fedder_f_injective(regular_sequence: &[Polynomial]) -> Result<FedderReport> {
    let first = regular_sequence
        .first()
        .ok_or(Error::EmptyInput("Fedder criterion needs generators"))?;
    let ring = first.ring().clone();
    let mut product = poly_one(&ring);
    for g in regular_sequence {
        check_same_ring(&ring, g.ring())?;
        product = product.checked_mul(g)?;
    }
    let u = product.checked_pow(ring.p() as u64 - 1)?;
    let bracket = maximal_ideal_frobenius_power(&ring)?;
    let bracket_gb = bracket.groebner()?;
    let inside = normal_form(&u, &bracket_gb)?.is_zero();
    Ok(FedderReport {
        f_injective: !inside,
        multiplier: u,
    })
}

/// (x_1^p, ..., x_n^p).
fn maximal_ideal_frobenius_power(ring: &Ring) -> Result<Ideal> {
    let p = ring.p();
    let gens = (0..ring.nvars())
        .map(|i| {
            let mut exps = vec![0u32; ring.nvars()];
            exps[i] = p;
            Polynomial::from_terms(
                ring.clone(),
                vec![Term {
                    coeff: 1,
                    monomial: Monomial::new(exps),
                }],
            )
        })
        .collect();
    Ideal::new(ring.clone(), gens)
}

/// Root chain of one matrix entry across twisted iterations.
#[derive(Debug, Clone)]
pub struct EntryChain {
    pub chain: Vec<Ideal>,
    /// First 1-based index s with `chain[s] = chain[s+1]`, when observed.
    pub stable_at: Option<usize>,
}

/// Per-entry Frobenius-root chains of the twisted powers of a square
/// matrix G: G_1 = G and G_e = G * F(G_{e-1}) with F the entrywise p-th
/// power, so the 1x1 case recovers the u^(nu_e) chain.
pub fn twisted_matrix_chain(g: &PolyMatrix, e_max: u32) -> Result<Vec<Vec<EntryChain>>> {
    if g.rows() != g.cols() {
        return Err(Error::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if e_max == 0 {
        return Err(Error::EmptyInput("twisted chain needs e_max >= 1"));
    }
    let m = g.rows();
    let mut chains: Vec<Vec<Vec<Ideal>>> = vec![vec![Vec::new(); m]; m];
    let mut current = g.clone();
    for e in 1..=e_max {
        if e > 1 {
            current = g.checked_mul(&current.frobenius_entrywise(1)?)?;
        }
        for (i, row) in chains.iter_mut().enumerate() {
            for (j, chain) in row.iter_mut().enumerate() {
                chain.push(frobenius_root_poly(current.entry(i, j), e)?);
            }
        }
    }
    let mut out = Vec::with_capacity(m);
    for row in chains {
        let mut out_row = Vec::with_capacity(m);
        for chain in row {
            let mut stable_at = None;
            for s in 1..chain.len() {
                if ideal_equal(&chain[s - 1], &chain[s])? {
                    stable_at = Some(s);
                    break;
                }
            }
            out_row.push(EntryChain { chain, stable_at });
        }
        out.push(out_row);
    }
    Ok(out)
}
