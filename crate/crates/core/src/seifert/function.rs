//! Signature functions with exact (rational or algebraic) jump locations.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::angle::{simplest_between, sort_angles, Angle, CircleRoot};
use super::{check_unit_interval, SeifertError, SeifertMatrix, SignatureValue};
use crate::algebra::arith::totient;
use crate::algebra::{cyclotomic_polynomial, AlgebraError, LaurentPoly};

/// A step function on `[0, 1]` given by sorted jump locations and the
/// (integer) values on the open plateaus between them.
///
/// `plateaus[i]` is the value between `jumps[i-1]` and `jumps[i]`; the value
/// at a jump is the average of its neighbours.
#[derive(Clone, Debug)]
pub struct SignatureFunction {
    jumps: Vec<Angle>,
    plateaus: Vec<i64>,
}

/// Position of a point relative to the jumps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Plateau(usize),
    Jump(usize),
}

impl SignatureFunction {
    pub fn zero() -> Self {
        SignatureFunction {
            jumps: Vec::new(),
            plateaus: vec![0],
        }
    }

    /// `plateaus.len()` must be `jumps.len() + 1` and jumps must be sorted.
    pub fn from_parts(jumps: Vec<Angle>, plateaus: Vec<i64>) -> Self {
        assert_eq!(plateaus.len(), jumps.len() + 1);
        SignatureFunction { jumps, plateaus }
    }

    pub fn jumps(&self) -> &[Angle] {
        &self.jumps
    }

    pub fn plateaus(&self) -> &[i64] {
        &self.plateaus
    }

    /// Change of value across each jump.
    pub fn heights(&self) -> Vec<i64> {
        self.plateaus.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.plateaus.iter().all(|&v| v == 0)
    }

    pub fn has_only_rational_jumps(&self) -> bool {
        self.jumps.iter().all(Angle::is_rational)
    }

    /// Drop jumps across which the value does not change.
    pub fn simplified(&self) -> Self {
        let mut jumps = Vec::new();
        let mut plateaus = vec![self.plateaus[0]];
        for (i, j) in self.jumps.iter().enumerate() {
            if self.plateaus[i + 1] != *plateaus.last().unwrap() {
                jumps.push(j.clone());
                plateaus.push(self.plateaus[i + 1]);
            }
        }
        SignatureFunction { jumps, plateaus }
    }

    pub fn locate(&self, x: &BigRational) -> Location {
        let idx = self.jumps.partition_point(|j| j.cmp_rational(x) == Ordering::Less);
        if idx < self.jumps.len() && self.jumps[idx].cmp_rational(x) == Ordering::Equal {
            Location::Jump(idx)
        } else {
            Location::Plateau(idx)
        }
    }

    /// Twice the value at `x`, with the averaging convention at jumps.
    pub fn doubled_at(&self, x: &BigRational) -> i64 {
        match self.locate(x) {
            Location::Plateau(i) => 2 * self.plateaus[i],
            Location::Jump(i) => self.plateaus[i] + self.plateaus[i + 1],
        }
    }

    /// Negated function (mirror image).
    pub fn negated(&self) -> Self {
        SignatureFunction {
            jumps: self.jumps.clone(),
            plateaus: self.plateaus.iter().map(|v| -v).collect(),
        }
    }

    /// Value at `x` for the knot with Seifert matrix `v` whose function this is;
    /// the nullity comes from the Hermitian form when `x` is a jump.
    pub(crate) fn leaf_value(
        &self,
        v: &SeifertMatrix,
        x: &BigRational,
    ) -> Result<SignatureValue, SeifertError> {
        check_unit_interval(x)?;
        if x.is_zero() || x.is_one() {
            return Ok(SignatureValue::new(x.clone(), 0, v.dim()));
        }
        Ok(match self.locate(x) {
            Location::Plateau(i) => SignatureValue::new(x.clone(), 2 * self.plateaus[i], 0),
            Location::Jump(i) => {
                let (_, nullity) = v.hermitian_signature(x)?;
                SignatureValue::new(x.clone(), self.plateaus[i] + self.plateaus[i + 1], nullity)
            }
        })
    }

    /// Rational sample points, one inside each plateau.
    pub fn plateau_samples(&self) -> Vec<BigRational> {
        let zero = Angle::Rational(BigRational::zero());
        let one = Angle::Rational(BigRational::one());
        (0..=self.jumps.len())
            .map(|i| {
                let lo = if i == 0 { &zero } else { &self.jumps[i - 1] };
                let hi = if i == self.jumps.len() { &one } else { &self.jumps[i] };
                simplest_between(lo, hi)
            })
            .collect()
    }
}

/// Jump locations of the signature function of `v`: arguments of the roots
/// of `Δ` on the unit circle. Roots of unity are found by cyclotomic
/// division; the rest through the trace substitution `x = t + t⁻¹`.
pub(crate) fn circle_roots(delta: &LaurentPoly) -> Result<Vec<Angle>, AlgebraError> {
    let mut rest = delta.shifted_poly().clone();
    let deg = rest.degree().unwrap_or(0);
    let mut out = Vec::new();
    if deg == 0 {
        return Ok(out);
    }
    // φ(d) ≥ sqrt(d/2), so only d ≤ 2·deg² can contribute
    let bound = (2 * deg * deg).max(6) as u64;
    for d in 3..=bound {
        if totient(d) as usize > rest.degree().unwrap_or(0) {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        let mut found = false;
        while let Some(q) = rest.exact_div(&phi_d) {
            rest = q;
            found = true;
        }
        if found {
            for k in 1..d {
                if k.gcd(&d) == 1 {
                    out.push(Angle::Rational(BigRational::new(BigInt::from(k), BigInt::from(d))));
                }
            }
        }
    }
    let rd = rest.degree().unwrap_or(0);
    if rd > 0 {
        let lp = LaurentPoly::new(-(rd as i64 / 2), rest);
        let trace = lp
            .trace_polynomial()
            .expect("cofactor of a symmetric polynomial by cyclotomics is symmetric");
        for root in CircleRoot::isolate(&trace)? {
            let a = Angle::algebraic(root);
            out.push(a.reflect());
            out.push(a);
        }
    }
    sort_angles(&mut out, |a| a)?;
    Ok(out)
}

pub(super) fn analyze(v: &SeifertMatrix) -> Result<SignatureFunction, SeifertError> {
    if v.dim() == 0 {
        return Ok(SignatureFunction::zero());
    }
    let jumps = circle_roots(&v.alexander())?;
    let n = jumps.len();
    let mut f = SignatureFunction {
        jumps,
        plateaus: vec![0; n + 1],
    };
    let samples = f.plateau_samples();
    // σ(x) = σ(1 − x), and the jump set is symmetric
    for (i, x) in samples.iter().enumerate().take(n / 2 + 1) {
        let (sig, nullity) = v.hermitian_signature(x)?;
        debug_assert_eq!(nullity, 0);
        f.plateaus[i] = sig;
        f.plateaus[n - i] = sig;
    }
    Ok(f)
}
