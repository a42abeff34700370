//! Dense univariate polynomials over Z and Q, and integer Laurent polynomials.
//!
//! Coefficients are stored lowest degree first and kept normalized: the
//! leading coefficient is nonzero unless the polynomial is zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::matrix::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `p(t^k)`
    pub fn compose_power(&self, k: usize) -> Self {
        if k == 0 {
            return Self::constant(self.coeffs.iter().sum());
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Division with remainder by a polynomial with leading coefficient ±1.
    pub fn div_rem_monic(&self, m: &IntPoly) -> (IntPoly, IntPoly) {
        let lead = m.leading().expect("division by zero polynomial");
        assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
        let dm = m.degree().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dm {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dm];
        for k in (dm..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * lead; // lead = ±1 so c / lead = c * lead
            for (i, mc) in m.coeffs.iter().enumerate() {
                r[k - dm + i] -= &c * mc;
            }
            q[k - dm] = c;
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Exact quotient `self / d` in Z[t], or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for k in (dd..=ds).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (c, rem) = r[k].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + i] -= &c * dc;
            }
            q[k - dd] = c;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.exact_div(self).is_some()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Primitive integer polynomial proportional to a rational one.
    pub fn from_rat_primitive(p: &RatPoly) -> IntPoly {
        if p.is_zero() {
            return IntPoly::zero();
        }
        let den = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(
            p.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }

    /// Greatest common divisor in Z[t], primitive with positive leading term.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let g = self.to_rat().gcd(&other.to_rat());
        IntPoly::from_rat_primitive(&g)
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .exact_div(&g)
            .expect("gcd divides")
            .primitive_part()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, BigInt)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let unit = a.is_one();
        match e {
            0 => write!(f, "{a}")?,
            1 => {
                if unit {
                    write!(f, "{var}")?
                } else {
                    write!(f, "{a}{var}")?
                }
            }
            _ => {
                if unit {
                    write!(f, "{var}^{e}")?
                } else {
                    write!(f, "{a}{var}^{e}")?
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c.clone())),
            "t",
        )
    }
}

/// `Z[t]` as a [`Ring`], for determinants of polynomial matrices.
pub struct PolyRing;

impl Ring for PolyRing {
    type Elem = IntPoly;
    fn zero(&self) -> IntPoly {
        IntPoly::zero()
    }
    fn one(&self) -> IntPoly {
        IntPoly::one()
    }
    fn add(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a + b
    }
    fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a * b
    }
    fn neg(&self, a: &IntPoly) -> IntPoly {
        -a
    }
}

/// Polynomial with rational coefficients, used for Sturm chains and gcds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (RatPoly::new(vec![]), self.clone());
        }
        let lead = d.coeffs[dd].clone();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] / &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k - dd + i] -= t;
            }
            q[k - dd] = c;
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> RatPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let l = l.clone();
                RatPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
        }
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})x^{k}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Integer Laurent polynomial `t^low * poly(t)`.
///
/// Normalized so that `poly` has nonzero constant term (or is zero, in which
/// case `low = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    poly: IntPoly,
}

impl LaurentPoly {
    pub fn new(low: i64, poly: IntPoly) -> Self {
        match poly.valuation() {
            None => LaurentPoly {
                low: 0,
                poly: IntPoly::zero(),
            },
            Some(v) => {
                let c = poly.coeffs()[v..].to_vec();
                LaurentPoly {
                    low: low + v as i64,
                    poly: IntPoly::new(c),
                }
            }
        }
    }

    /// Build from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut v = vec![BigInt::zero(); (high - low) as usize + 1];
        for &(e, c) in terms {
            v[(e - low) as usize] += c;
        }
        Self::new(low, IntPoly::new(v))
    }

    pub fn zero() -> Self {
        Self::new(0, IntPoly::zero())
    }

    pub fn one() -> Self {
        Self::new(0, IntPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.poly.degree().unwrap_or(0) as i64
    }

    /// `high - low`, the breadth of the polynomial.
    pub fn span(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// The ordinary polynomial `t^{-low} * self`.
    pub fn shifted_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            BigInt::zero()
        } else {
            self.poly.coeff((e - self.low) as usize)
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.low + k as i64, c.clone()))
            .collect()
    }

    pub fn eval(&self, t: &BigInt) -> BigRational {
        let v = BigRational::from_integer(self.poly.eval(t));
        let tp = BigRational::from_integer(t.clone());
        if self.low >= 0 {
            v * num_traits::pow(tp, self.low as usize)
        } else {
            v / num_traits::pow(tp, (-self.low) as usize)
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.poly.coeffs().iter().sum()
    }

    pub fn eval_at_minus_one(&self) -> BigInt {
        let v = self.poly.eval(&BigInt::from(-1));
        if self.low.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }

    /// `Δ(t) = Δ(t^{-1})`
    pub fn is_symmetric(&self) -> bool {
        self.low == -self.high()
            && self
                .poly
                .coeffs()
                .iter()
                .eq(self.poly.coeffs().iter().rev())
    }

    /// `p(t^k)` for any integer `k` (negative `k` inverts the variable).
    pub fn substitute_power(&self, k: i64) -> Self {
        if k == 0 {
            return Self::new(0, IntPoly::constant(self.eval_at_one()));
        }
        let mut terms: Vec<(i64, BigInt)> = self
            .terms()
            .into_iter()
            .map(|(e, c)| (e * k, c))
            .collect();
        terms.sort_by_key(|t| t.0);
        let low = terms.first().map(|t| t.0).unwrap_or(0);
        let high = terms.last().map(|t| t.0).unwrap_or(0);
        let mut v = vec![BigInt::zero(); (high - low) as usize + 1];
        for (e, c) in terms {
            v[(e - low) as usize] += c;
        }
        Self::new(low, IntPoly::new(v))
    }

    /// Equality up to multiplication by a unit `±t^k` of the Laurent ring.
    pub fn equals_up_to_unit(&self, other: &LaurentPoly) -> bool {
        self.poly == other.poly || self.poly == -&other.poly
    }

    pub fn neg(&self) -> Self {
        Self::new(self.low, -&self.poly)
    }

    /// Coefficients `c_0, c_1, ..., c_g` of a symmetric Laurent polynomial
    /// `c_0 + Σ c_k (t^k + t^{-k})`.
    pub fn symmetric_coefficients(&self) -> Option<Vec<BigInt>> {
        if !self.is_symmetric() {
            return None;
        }
        let g = self.high().max(0);
        Some((0..=g).map(|k| self.coeff(k)).collect())
    }

    /// The polynomial `P` with `Δ(t) = P(t + t^{-1})`, for symmetric `Δ`.
    pub fn trace_polynomial(&self) -> Option<IntPoly> {
        let c = self.symmetric_coefficients()?;
        // D_k(x) = t^k + t^-k as a polynomial in x = t + t^-1.
        let x = IntPoly::from_i64s(&[0, 1]);
        let mut d_prev = IntPoly::from_i64s(&[2]);
        let mut d_cur = x.clone();
        let mut out = IntPoly::constant(c[0].clone());
        for (k, ck) in c.iter().enumerate().skip(1) {
            if k > 1 {
                let next = &(&x * &d_cur) - &d_prev;
                d_prev = std::mem::replace(&mut d_cur, next);
            }
            out = &out + &d_cur.scale(ck);
        }
        Some(out)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.low + o.low, &self.poly * &o.poly)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let a = self.poly.shift((self.low - low) as usize);
        let b = o.poly.shift((o.low - low) as usize);
        LaurentPoly::new(low, &a + &b)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().into_iter(), "t")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[1, -1, 1]);
        let b = p(&[1, 0, -1, 0, 1]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 2])), None);
        let (q, r) = p(&[-1, 0, 0, 1]).div_rem_monic(&p(&[1, 1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = &p(&[1, -1, 1]) * &p(&[1, -1, 1]);
        let b = &p(&[1, -1, 1]) * &p(&[2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, -1, 1]));
        assert_eq!(a.squarefree_part(), p(&[1, -1, 1]));
        assert_eq!(p(&[6, 4]).primitive_part(), p(&[3, 2]));
    }

    #[test]
    fn laurent_basics() {
        let tref = LaurentPoly::from_terms(&[(-1, 1), (0, -1), (1, 1)]);
        assert!(tref.is_symmetric());
        assert_eq!(tref.eval_at_one(), BigInt::from(1));
        assert_eq!(tref.eval_at_minus_one(), BigInt::from(-3));
        assert_eq!(tref.to_string(), "t^-1 - 1 + t");
        assert_eq!(tref.trace_polynomial().unwrap(), p(&[-1, 1]));
        let sq = tref.substitute_power(2);
        assert_eq!(sq, LaurentPoly::from_terms(&[(-2, 1), (0, -1), (2, 1)]));
        assert_eq!(tref.substitute_power(-1), tref);
        let t25 = LaurentPoly::from_terms(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        // t^2 + t^-2 = x^2 - 2, so P = x^2 - 2 - x + 1
        assert_eq!(t25.trace_polynomial().unwrap(), p(&[-1, -1, 1]));
    }
}
