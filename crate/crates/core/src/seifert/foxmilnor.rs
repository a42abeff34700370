//! Fox–Milnor test: is `Δ(t) ≐ f(t)·f(t⁻¹)` over `Z[t, t⁻¹]`?

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::SeifertError;
use crate::algebra::arith::is_perfect_square;
use crate::algebra::{IntPoly, LaurentPoly};

/// Largest half-span for which the exhaustive factor search is attempted.
const MAX_SEARCH_GENUS: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FoxMilnorVerdict {
    /// `Δ = f f*` holds (the factor is reported).
    Pass,
    /// Some necessary condition fails, or the exhaustive search found no factor.
    Fail,
    /// Necessary conditions hold but the polynomial is too large to search.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct FoxMilnorReport {
    /// `|Δ(−1)|`
    #[serde(serialize_with = "crate::serde_bigint")]
    pub determinant: BigInt,
    pub determinant_is_square: bool,
    /// Whether the factor search ran to completion.
    pub exhaustive: bool,
    /// A factor `f` with `Δ ≐ f(t) f(t⁻¹)` when one was found.
    #[serde(serialize_with = "crate::serde_opt_display")]
    pub factor: Option<IntPoly>,
    pub verdict: FoxMilnorVerdict,
}

pub fn fox_milnor(delta: &LaurentPoly) -> Result<FoxMilnorReport, SeifertError> {
    if !delta.is_symmetric() {
        return Err(SeifertError::NotSymmetric(delta.to_string()));
    }
    let mut d = delta.clone();
    let at_one = d.eval_at_one();
    if at_one == -BigInt::one() {
        d = d.neg();
    } else if !at_one.is_one() {
        return Err(SeifertError::NotKnotPolynomial(delta.to_string()));
    }
    let determinant = d.eval_at_minus_one().abs();
    let square = is_perfect_square(&determinant);
    let mut report = FoxMilnorReport {
        determinant,
        determinant_is_square: square,
        exhaustive: false,
        factor: None,
        verdict: FoxMilnorVerdict::Fail,
    };
    if !square {
        return Ok(report);
    }
    let g = d.high();
    if g > MAX_SEARCH_GENUS {
        report.verdict = FoxMilnorVerdict::Inconclusive;
        return Ok(report);
    }
    report.exhaustive = true;
    report.factor = search_factor(d.shifted_poly(), g as usize);
    report.verdict = if report.factor.is_some() {
        FoxMilnorVerdict::Pass
    } else {
        FoxMilnorVerdict::Fail
    };
    Ok(report)
}

/// `t^g f(1/t)` for `deg f ≤ g`.
fn reciprocal(f: &IntPoly, g: usize) -> IntPoly {
    IntPoly::new((0..=g).rev().map(|k| f.coeff(k)).collect())
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            out.push(k.clone());
            let other = &n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out.iter().flat_map(|v| [v.clone(), -v]).collect()
}

/// Kronecker-style search for `f` of degree `g` with `f(1) = 1` and
/// `f · t^g f(1/t) = d` (the palindromic polynomial `t^g Δ`).
fn search_factor(d: &IntPoly, g: usize) -> Option<IntPoly> {
    if g == 0 {
        return (d == &IntPoly::one()).then(IntPoly::one);
    }
    // Mignotte bound: |f_i| ≤ C(g, i)·‖d‖₂
    let norm2: BigInt = d.coeffs().iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    let binom = |i: usize| -> BigInt {
        (0..i).fold(BigInt::one(), |acc, k| acc * BigInt::from(g - k) / BigInt::from(k + 1))
    };
    // At t = −1: f*(−1) = (−1)^g f(−1), so f(−1)² = |d(−1)|.
    let mut points: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    let minus_one = BigInt::from(-1);
    let root = d.eval(&minus_one).abs().sqrt();
    points.push((minus_one, vec![root.clone(), -root]));
    let mut candidates: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    for k in [0i64, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6] {
        let k = BigInt::from(k);
        let v = d.eval(&k);
        if v.is_zero() {
            continue;
        }
        candidates.push((k, signed_divisors(&v)));
    }
    candidates.sort_by_key(|c| c.1.len());
    points.extend(candidates.into_iter().take(g - 1));
    if points.len() < g {
        return None;
    }
    let mut xs = vec![BigRational::one()];
    xs.extend(points.iter().map(|p| BigRational::from_integer(p.0.clone())));
    let basis = lagrange_basis(&xs);
    let mut ys = vec![BigInt::one()];
    let mut found = None;
    enumerate(&points, &mut ys, &mut |ys| {
        let mut coeffs = vec![BigRational::zero(); g + 1];
        for (y, l) in ys.iter().zip(&basis) {
            if y.is_zero() {
                continue;
            }
            let y = BigRational::from_integer(y.clone());
            for (c, b) in coeffs.iter_mut().zip(l) {
                *c += &y * b;
            }
        }
        if coeffs.iter().any(|c| !c.is_integer()) {
            return false;
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|c| c.to_integer()).collect();
        if ints.iter().enumerate().any(|(i, c)| c.abs() > binom(i) * &norm) {
            return false;
        }
        let f = IntPoly::new(ints);
        if &(&f * &reciprocal(&f, g)) == d {
            found = Some(f);
            true
        } else {
            false
        }
    });
    found
}

fn enumerate(
    points: &[(BigInt, Vec<BigInt>)],
    ys: &mut Vec<BigInt>,
    visit: &mut dyn FnMut(&[BigInt]) -> bool,
) -> bool {
    let i = ys.len() - 1;
    if i == points.len() {
        return visit(ys);
    }
    for v in &points[i].1 {
        ys.push(v.clone());
        let done = enumerate(points, ys, visit);
        ys.pop();
        if done {
            return true;
        }
    }
    false
}

/// Coefficient vectors of the Lagrange basis polynomials through `xs`.
fn lagrange_basis(xs: &[BigRational]) -> Vec<Vec<BigRational>> {
    let n = xs.len();
    (0..n)
        .map(|i| {
            let mut poly = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, xj) in xs.iter().enumerate() {
                if j == i {
                    continue;
                }
                // multiply by (t − xj)
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * xj;
                }
                poly = next;
                denom *= &xs[i] - xj;
            }
            poly.iter().map(|c| c / &denom).collect()
        })
        .collect()
}
