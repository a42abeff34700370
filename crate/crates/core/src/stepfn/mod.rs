//! Step functions on `[0, 1]` with rational jumps: the sums `Σ_p`, the
//! basis `S_a = χ_{1−a} − χ_a`, the defect `F_p(a)` and decomposition of
//! symmetric functions over the `S_a`.

mod render;

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::fmt_rational;
use crate::seifert::SignatureFunction;

pub use render::{svg_plot, PlotData};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StepFnError {
    #[error("jump locations must be strictly increasing")]
    Unsorted,
    #[error("jump location {0} lies outside (0, 1)")]
    OutOfRange(String),
    #[error("S_a needs 0 < a < 1/2, got {0}")]
    BasisParameter(String),
    #[error("function is not symmetric about 1/2")]
    NotSymmetric,
    #[error("function does not vanish near 0, so it has no S_a decomposition")]
    NonzeroStart,
    #[error("jump at {0} is irrational")]
    IrrationalJump(String),
}

/// A step function that is `start` on `(0, first jump)`, changes by
/// `height` at each jump, takes the average of its one-sided limits at a
/// jump, and is `0` at `0` and `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction {
    start: i64,
    jumps: Vec<(BigRational, i64)>,
}

impl StepFunction {
    pub fn zero() -> Self {
        StepFunction {
            start: 0,
            jumps: Vec::new(),
        }
    }

    /// Jumps of zero height are dropped.
    pub fn new(start: i64, jumps: Vec<(BigRational, i64)>) -> Result<Self, StepFnError> {
        for (x, _) in &jumps {
            if !x.is_positive() || *x >= BigRational::one() {
                return Err(StepFnError::OutOfRange(fmt_rational(x)));
            }
        }
        if jumps.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(StepFnError::Unsorted);
        }
        Ok(StepFunction {
            start,
            jumps: jumps.into_iter().filter(|(_, h)| *h != 0).collect(),
        })
    }

    /// The signature function as a step function; fails on irrational jumps.
    pub fn from_signature(f: &SignatureFunction) -> Result<Self, StepFnError> {
        let mut jumps = Vec::new();
        for (j, h) in f.jumps().iter().zip(f.heights()) {
            let x = j.as_rational().ok_or_else(|| StepFnError::IrrationalJump(j.to_string()))?;
            jumps.push((x.clone(), h));
        }
        Self::new(f.plateaus()[0], jumps)
    }

    /// `χ_a`: `1` on `(0, a)`.
    pub fn chi(a: &BigRational) -> Result<Self, StepFnError> {
        Self::new(1, vec![(a.clone(), -1)])
    }

    /// `S_a = χ_{1−a} − χ_a`: `1` on `(a, 1−a)`.
    pub fn basis_s(a: &BigRational) -> Result<Self, StepFnError> {
        if !a.is_positive() || *a >= half() {
            return Err(StepFnError::BasisParameter(fmt_rational(a)));
        }
        Self::new(0, vec![(a.clone(), 1), (BigRational::one() - a, -1)])
    }

    /// `Σ cᵢ S_{aᵢ}`
    pub fn reconstruct(terms: &[(i64, BigRational)]) -> Result<Self, StepFnError> {
        terms.iter().try_fold(Self::zero(), |acc, (c, a)| {
            Ok(acc.add(&Self::basis_s(a)?.scale(*c)))
        })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn jumps(&self) -> &[(BigRational, i64)] {
        &self.jumps
    }

    /// Values on the open plateaus, left to right.
    pub fn plateaus(&self) -> Vec<i64> {
        let mut out = vec![self.start];
        for (_, h) in &self.jumps {
            out.push(out.last().unwrap() + h);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.start == 0 && self.jumps.is_empty()
    }

    /// Twice the value at `x` (integral because of the averaging convention).
    pub fn doubled_at(&self, x: &BigRational) -> i64 {
        if !x.is_positive() || *x >= BigRational::one() {
            return 0;
        }
        let mut v = self.start;
        for (l, h) in &self.jumps {
            match l.cmp(x) {
                Ordering::Less => v += h,
                Ordering::Equal => return 2 * v + h,
                Ordering::Greater => break,
            }
        }
        2 * v
    }

    pub fn value_at(&self, x: &BigRational) -> BigRational {
        halve(self.doubled_at(x))
    }

    /// `Σ_{i=1}^{p−1} f(i/p)`
    pub fn sigma_p(&self, p: u64) -> BigRational {
        let doubled: i64 = (1..p)
            .map(|i| self.doubled_at(&BigRational::new(BigInt::from(i), BigInt::from(p))))
            .sum();
        halve(doubled)
    }

    pub fn integral(&self) -> BigRational {
        let mut total = BigRational::zero();
        let mut left = BigRational::zero();
        for ((x, _), v) in self.jumps.iter().zip(self.plateaus()) {
            total += (x - &left) * BigRational::from_integer(v.into());
            left = x.clone();
        }
        let last = *self.plateaus().last().unwrap();
        total + (BigRational::one() - left) * BigRational::from_integer(last.into())
    }

    pub fn is_symmetric(&self) -> bool {
        let mirrored: Vec<(BigRational, i64)> = self
            .jumps
            .iter()
            .rev()
            .map(|(x, h)| (BigRational::one() - x, -h))
            .collect();
        let total: i64 = self.jumps.iter().map(|(_, h)| h).sum();
        total == 0 && mirrored == self.jumps
    }

    /// Unique `(cᵢ, aᵢ)` with `f = Σ cᵢ S_{aᵢ}`, `aᵢ` increasing.
    pub fn decompose(&self) -> Result<Vec<(i64, BigRational)>, StepFnError> {
        if !self.is_symmetric() {
            return Err(StepFnError::NotSymmetric);
        }
        if self.start != 0 {
            return Err(StepFnError::NonzeroStart);
        }
        let half = half();
        Ok(self
            .jumps
            .iter()
            .take_while(|(x, _)| *x < half)
            .map(|(x, h)| (*h, x.clone()))
            .collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        StepFunction {
            start: c * self.start,
            jumps: self.jumps.iter().map(|(x, h)| (x.clone(), c * h)).collect(),
        }
    }

    pub fn add(&self, other: &StepFunction) -> Self {
        let mut jumps: Vec<(BigRational, i64)> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.jumps.len() || j < other.jumps.len() {
            let take_left = j == other.jumps.len()
                || (i < self.jumps.len() && self.jumps[i].0 <= other.jumps[j].0);
            let (x, h) = if take_left {
                i += 1;
                self.jumps[i - 1].clone()
            } else {
                j += 1;
                other.jumps[j - 1].clone()
            };
            match jumps.last_mut() {
                Some(last) if last.0 == x => last.1 += h,
                _ => jumps.push((x, h)),
            }
        }
        jumps.retain(|(_, h)| *h != 0);
        StepFunction {
            start: self.start + other.start,
            jumps,
        }
    }

    /// CSV with header `x,value`: every jump and the midpoint of every
    /// plateau, in increasing `x`.
    pub fn to_csv(&self) -> String {
        let mut points: Vec<BigRational> = Vec::new();
        let mut left = BigRational::zero();
        for (x, _) in &self.jumps {
            points.push((&left + x) / BigRational::from_integer(2.into()));
            points.push(x.clone());
            left = x.clone();
        }
        points.push((&left + BigRational::one()) / BigRational::from_integer(2.into()));
        let mut out = String::from("x,value\n");
        for x in points {
            let _ = writeln!(out, "{},{}", fmt_rational(&x), fmt_rational(&self.value_at(&x)));
        }
        out
    }

    pub fn plot_data(&self) -> PlotData {
        PlotData {
            jumps: self.jumps.iter().map(|(x, _)| rational_f64(x)).collect(),
            labels: self.jumps.iter().map(|(x, _)| fmt_rational(x)).collect(),
            plateaus: self.plateaus(),
        }
    }

    pub fn to_svg(&self, title: &str) -> String {
        svg_plot(&self.plot_data(), title)
    }
}

/// `F_p(a) = 2⟨pa⟩ − 1` if `pa ∉ Z`, else `0`; for `p ≥ 2` and `0 < a < 1/2`
/// this equals `Σ_p(S_a) − p ∫ S_a`.
pub fn f_p(p: i64, a: &BigRational) -> BigRational {
    let pa = a * BigRational::from_integer(BigInt::from(p));
    if pa.is_integer() {
        return BigRational::zero();
    }
    let frac = &pa - pa.floor();
    frac * BigRational::from_integer(2.into()) - BigRational::one()
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn halve(d: i64) -> BigRational {
    BigRational::new(BigInt::from(d), BigInt::from(2))
}

fn rational_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::seifert::SeifertMatrix;

    #[test]
    fn basis_values() {
        let s = StepFunction::basis_s(&rat(1, 4)).unwrap();
        assert_eq!(s.value_at(&rat(1, 2)), rat(1, 1));
        assert_eq!(s.value_at(&rat(1, 4)), rat(1, 2));
        assert_eq!(s.value_at(&rat(1, 8)), rat(0, 1));
        assert_eq!(s.integral(), rat(1, 2));
        assert_eq!(s.sigma_p(3), rat(2, 1));
        assert!(StepFunction::basis_s(&rat(1, 2)).is_err());
        assert!(StepFunction::basis_s(&rat(0, 1)).is_err());
    }

    #[test]
    fn chi_sums() {
        let c = StepFunction::chi(&rat(1, 4)).unwrap();
        assert_eq!(c.sigma_p(3), rat(0, 1));
        assert_eq!(c.sigma_p(8), rat(3, 2)); // 1/8 and the half at 2/8
    }

    #[test]
    fn defect_examples() {
        assert_eq!(f_p(3, &rat(1, 3)), rat(0, 1));
        assert_eq!(f_p(2, &rat(1, 3)), rat(1, 3));
        assert_eq!(f_p(1, &rat(2, 5)), rat(-1, 5));
        assert_eq!(f_p(-1, &rat(2, 5)), rat(1, 5));
    }

    #[test]
    fn trefoil_decomposition() {
        let v = SeifertMatrix::from_rows(&[[-1, 1], [0, -1]]).unwrap();
        let f = StepFunction::from_signature(&v.signature_function().unwrap()).unwrap();
        assert_eq!(f.decompose().unwrap(), vec![(-2, rat(1, 6))]);
        assert_eq!(f.integral(), rat(-4, 3));
        assert!(StepFunction::zero().decompose().unwrap().is_empty());
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let f = StepFunction::new(0, vec![(rat(1, 3), 1), (rat(1, 2), -1)]).unwrap();
        assert_eq!(f.decompose(), Err(StepFnError::NotSymmetric));
        assert!(StepFunction::new(0, vec![(rat(1, 2), 1), (rat(1, 3), -1)]).is_err());
    }

    #[test]
    fn csv_rows() {
        let s = StepFunction::basis_s(&rat(1, 4)).unwrap();
        assert_eq!(s.to_csv(), "x,value\n1/8,0\n1/4,1/2\n1/2,1\n3/4,1/2\n7/8,0\n");
    }
}
