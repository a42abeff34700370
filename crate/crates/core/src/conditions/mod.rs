//! `(m, p)`-signature conditions: sums of the signature function over the
//! cosets of `⟨(m+1)/m⟩ ⊂ (Z/p)*`, the averaging condition, and the prime
//! sets attached to `(m+1)^q − m^q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Pow;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::arith::{factor_bigint, mod_inverse, mod_pow, multiplicative_order, prime_power};
use crate::knotexpr::{CompositeKnot, KnotExprError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConditionsError {
    #[error("m must be positive")]
    InvalidM,
    #[error("p = {p} must exceed 1 and be coprime to m(m+1) = {product}")]
    InvalidModulus { p: u64, product: u128 },
    #[error("q_max = {0} is below the smallest admissible q")]
    QMaxTooSmall(u64),
    #[error("could not factor (m+1)^{q} - m^{q}")]
    FactorizationFailed { q: u64 },
    #[error(transparent)]
    Knot(#[from] KnotExprError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Orbits of multiplication by `a = (m+1)·m⁻¹` on the units mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetDecomposition {
    pub m: u64,
    pub p: u64,
    pub a: u64,
    /// Order of `a`.
    pub r: u64,
    /// Each coset as `c, ca, ca², …` starting from its least element.
    pub cosets: Vec<Vec<u64>>,
}

pub fn coset_decompose(m: u64, p: u64) -> Result<CosetDecomposition, ConditionsError> {
    if m == 0 {
        return Err(ConditionsError::InvalidM);
    }
    let product = m as u128 * (m as u128 + 1);
    if p < 2 || (product % p as u128).gcd(&(p as u128)) != 1 {
        return Err(ConditionsError::InvalidModulus { p, product });
    }
    let m_inv = mod_inverse((m % p) as i64, p as i64).expect("m is a unit") as u64;
    let a = ((m as u128 + 1) % p as u128 * m_inv as u128 % p as u128) as u64;
    let r = multiplicative_order(a, p).expect("a is a unit");
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for c in 1..p {
        if seen[c as usize] || c.gcd(&p) != 1 {
            continue;
        }
        let mut orbit = Vec::with_capacity(r as usize);
        let mut x = c;
        for _ in 0..r {
            seen[x as usize] = true;
            orbit.push(x);
            x = (x as u128 * a as u128 % p as u128) as u64;
        }
        cosets.push(orbit);
    }
    Ok(CosetDecomposition { m, p, a, r, cosets })
}

/// Coset sums of the signature function for one pair `(m, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub m: u64,
    pub p: u64,
    pub a: u64,
    pub r: u64,
    pub cosets: Vec<Vec<u64>>,
    /// Twice `Σ_i σ(c·aⁱ/p)` for each coset, in the order of `cosets`, so
    /// that jump averages stay integral. Serialized halved.
    #[serde(serialize_with = "crate::serde_halved_vec")]
    pub sums: Vec<i64>,
    /// Numerators `j` for which the form at `j/p` is degenerate.
    pub degenerate: Vec<u64>,
    pub verdict: Verdict,
}

pub fn check_signature_conditions(
    knot: &CompositeKnot,
    m: u64,
    p: u64,
) -> Result<ConditionReport, ConditionsError> {
    let dec = coset_decompose(m, p)?;
    let mut sums = Vec::with_capacity(dec.cosets.len());
    let mut degenerate = Vec::new();
    for coset in &dec.cosets {
        let mut s = 0;
        for &j in coset {
            let v = knot.signature_at(&frac(j, p))?;
            s += v.doubled;
            if v.nullity > 0 {
                degenerate.push(j);
            }
        }
        sums.push(s);
    }
    degenerate.sort_unstable();
    let verdict = Verdict::from_bool(sums.iter().all(|&s| s == 0));
    Ok(ConditionReport {
        m,
        p,
        a: dec.a,
        r: dec.r,
        cosets: dec.cosets,
        sums,
        degenerate,
        verdict,
    })
}

/// Reports for every admissible `p` in `2..=p_max`, in increasing order.
pub fn check_range(knot: &CompositeKnot, m: u64, p_max: u64) -> Result<Vec<ConditionReport>, ConditionsError> {
    if m == 0 {
        return Err(ConditionsError::InvalidM);
    }
    let ps: Vec<u64> = (2..=p_max).filter(|&p| admissible(m, p)).collect();
    ps.par_iter().map(|&p| check_signature_conditions(knot, m, p)).collect()
}

/// Whether `p > 1` is coprime to `m(m+1)`.
pub fn admissible(m: u64, p: u64) -> bool {
    p > 1 && p.gcd(&m) == 1 && p.gcd(&(m + 1)) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AveragingEntry {
    pub p: u64,
    /// Twice `Σ_{i=1}^{p−1} σ(i/p)`; serialized halved.
    #[serde(serialize_with = "crate::serde_halved")]
    pub sum: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AveragingReport {
    pub m: u64,
    pub p_max: u64,
    pub entries: Vec<AveragingEntry>,
    /// Admissible `p` whose sum is nonzero.
    pub failures: Vec<u64>,
    pub verdict: Verdict,
}

/// `Σ_{i=1}^{p−1} σ(i/p) = 0` for every admissible `p ≤ p_max`.
pub fn check_averaging(knot: &CompositeKnot, m: u64, p_max: u64) -> Result<AveragingReport, ConditionsError> {
    if m == 0 {
        return Err(ConditionsError::InvalidM);
    }
    let ps: Vec<u64> = (2..=p_max).filter(|&p| admissible(m, p)).collect();
    let entries = ps
        .par_iter()
        .map(|&p| Ok(AveragingEntry { p, sum: sigma_sum(knot, p)? }))
        .collect::<Result<Vec<_>, ConditionsError>>()?;
    let failures: Vec<u64> = entries.iter().filter(|e| e.sum != 0).map(|e| e.p).collect();
    Ok(AveragingReport {
        m,
        p_max,
        verdict: Verdict::from_bool(failures.is_empty()),
        entries,
        failures,
    })
}

/// Twice `Σ_{i=1}^{p−1} σ(i/p)`.
pub fn sigma_sum(knot: &CompositeKnot, p: u64) -> Result<i64, ConditionsError> {
    let mut s = 0;
    for i in 1..p {
        s += knot.doubled_at(&frac(i, p))?;
    }
    Ok(s)
}

fn frac(j: u64, p: u64) -> BigRational {
    BigRational::new(BigInt::from(j), BigInt::from(p))
}

/// Prime powers `ℓ^k ≤ bound` dividing `(m+1)^q − m^q` for some prime power
/// `q ≤ q_max`, skipping those whose prime lies in `excluded`.
pub fn prime_set_thm7(m: u64, q_max: u64, bound: u64, excluded: &[u64]) -> Result<Vec<u64>, ConditionsError> {
    if m == 0 {
        return Err(ConditionsError::InvalidM);
    }
    if q_max < 2 {
        return Err(ConditionsError::QMaxTooSmall(q_max));
    }
    let qs: Vec<u64> = (2..=q_max).filter(|&q| prime_power(q).is_some()).collect();
    let out = (2..=bound)
        .into_par_iter()
        .filter(|&n| match prime_power(n) {
            Some((l, _)) if !excluded.contains(&l) => qs
                .iter()
                .any(|&q| mod_pow(m + 1, q, n) == mod_pow(m, q, n)),
            _ => false,
        })
        .collect();
    Ok(out)
}

/// Primes `p` with `gcd(p², (m+1)^q − m^q) = p` for some odd prime power
/// `q ≤ q_max`.
pub fn prime_set_thm8(m: u64, q_max: u64) -> Result<Vec<BigInt>, ConditionsError> {
    if m == 0 {
        return Err(ConditionsError::InvalidM);
    }
    if q_max < 3 {
        return Err(ConditionsError::QMaxTooSmall(q_max));
    }
    let qs: Vec<u64> = (3..=q_max)
        .filter(|&q| q % 2 == 1 && prime_power(q).is_some())
        .collect();
    let per_q = qs
        .par_iter()
        .map(|&q| {
            let n = order_of_cover(m, q);
            let f = factor_bigint(&n).ok_or(ConditionsError::FactorizationFailed { q })?;
            Ok(f.into_iter().filter(|(_, e)| *e == 1).map(|(p, _)| p).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>, ConditionsError>>()?;
    let mut out: Vec<BigInt> = per_q.into_iter().flatten().collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `(m+1)^q − m^q`
pub fn order_of_cover(m: u64, q: u64) -> BigInt {
    let q = q as u32;
    Pow::pow(BigInt::from(m + 1), q) - Pow::pow(BigInt::from(m), q)
}
