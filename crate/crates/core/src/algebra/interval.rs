//! Dyadic interval arithmetic with outward rounding.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Closed interval `[lo, hi] · 2^-prec` containing some real number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReal {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_shift(x: &BigInt, bits: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << bits))
}

fn ceil_shift(x: &BigInt, bits: u32) -> BigInt {
    -(-x).div_floor(&(BigInt::one() << bits))
}

impl IntervalReal {
    pub fn from_int(n: i64, prec: u32) -> Self {
        let v = BigInt::from(n) << prec;
        IntervalReal {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    pub fn from_big(n: &BigInt, prec: u32) -> Self {
        let v = n << prec;
        IntervalReal {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        IntervalReal {
            lo: scaled.div_floor(q.denom()),
            hi: -(-&scaled).div_floor(q.denom()),
            prec,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_int(0, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lower(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    /// Width in units of `2^-prec`.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        let m = (&self.lo + &self.hi).to_f64().unwrap_or(f64::NAN);
        m / 2f64.powi(self.prec as i32 + 1)
    }

    /// Round outward to a coarser precision.
    pub fn round_to(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => IntervalReal {
                lo: &self.lo << (prec - self.prec),
                hi: &self.hi << (prec - self.prec),
                prec,
            },
            Ordering::Less => {
                let s = self.prec - prec;
                IntervalReal {
                    lo: floor_shift(&self.lo, s),
                    hi: ceil_shift(&self.hi, s),
                    prec,
                }
            }
        }
    }

    fn aligned(&self, o: &IntervalReal) -> (IntervalReal, IntervalReal) {
        let p = self.prec.max(o.prec);
        (self.round_to(p), o.round_to(p))
    }

    pub fn add(&self, o: &IntervalReal) -> Self {
        let (a, b) = self.aligned(o);
        IntervalReal {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
            prec: a.prec,
        }
    }

    pub fn neg(&self) -> Self {
        IntervalReal {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &IntervalReal) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &IntervalReal) -> Self {
        let (a, b) = self.aligned(o);
        let prods = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let mn = prods.iter().min().unwrap();
        let mx = prods.iter().max().unwrap();
        IntervalReal {
            lo: floor_shift(mn, a.prec),
            hi: ceil_shift(mx, a.prec),
            prec: a.prec,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            IntervalReal {
                lo: b,
                hi: a,
                prec: self.prec,
            }
        } else {
            IntervalReal {
                lo: a,
                hi: b,
                prec: self.prec,
            }
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(k.is_positive());
        IntervalReal {
            lo: self.lo.div_floor(k),
            hi: -(-&self.hi).div_floor(k),
            prec: self.prec,
        }
    }

    /// Widen by `±e` ulps.
    pub fn widen(&self, e: &BigInt) -> Self {
        IntervalReal {
            lo: &self.lo - e,
            hi: &self.hi + e,
            prec: self.prec,
        }
    }

    /// `Some(sign)` when the interval excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.sign().is_none()
    }

    /// Ordering of every point of the interval relative to `q`, if uniform.
    pub fn cmp_rational(&self, q: &BigRational) -> Option<Ordering> {
        if self.upper() < *q {
            Some(Ordering::Less)
        } else if self.lower() > *q {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

/// Sum of `±1/((2n+1) k^(2n+1))` at `w` fractional bits. Returns the
/// truncated value and an error bound in ulps.
fn arctan_inv(k: u32, w: u32) -> (BigInt, BigInt) {
    let k2 = BigInt::from(k * k);
    let mut power = (BigInt::one() << w) / BigInt::from(k);
    let mut sum = BigInt::zero();
    let mut n: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * n + 1);
        if n.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        n += 1;
    }
    (sum, BigInt::from(4 * (n + 2)))
}

/// Interval enclosing π.
pub fn pi(prec: u32) -> IntervalReal {
    let w = prec + 64;
    let (a, ea) = arctan_inv(5, w);
    let (b, eb) = arctan_inv(239, w);
    let c = a * 16 - b * 4;
    let e = ea * 16 + eb * 4;
    IntervalReal {
        lo: &c - &e,
        hi: &c + &e,
        prec: w,
    }
    .round_to(prec)
}

/// Interval enclosing `cos(2π q)`.
pub fn cos_2pi(q: &BigRational, prec: u32) -> IntervalReal {
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let mut r = q - q.floor();
    if r > half {
        r = &one - &r;
    }
    let mut negate = false;
    if r > quarter {
        r = &half - &r;
        negate = true;
    }
    let result = if r.is_zero() {
        IntervalReal::from_int(1, prec)
    } else if r == quarter {
        IntervalReal::zero(prec)
    } else {
        let w = prec + 32;
        let x = pi(w)
            .mul_int(&(r.numer() * 2))
            .div_int(r.denom());
        let x2 = x.mul(&x);
        let mut sum = IntervalReal::from_int(1, w);
        let mut term = IntervalReal::from_int(1, w);
        let mut n: u64 = 1;
        loop {
            term = term.mul(&x2).div_int(&BigInt::from((2 * n - 1) * (2 * n)));
            sum = if n % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
            if term.hi <= BigInt::one() {
                break;
            }
            n += 1;
        }
        // alternating series with decreasing terms: the tail is below the last term
        let tail = term.hi.clone();
        sum.widen(&tail).round_to(prec)
    };
    if negate {
        result.neg()
    } else {
        result
    }
}

/// Certified sign of a real quantity.
///
/// `is_zero` is consulted first and must decide exact vanishing symbolically.
/// Otherwise `eval` is called at 64, 128, ... bits until the enclosure
/// excludes zero; exceeding `max_bits` gives [`AlgebraError::Undecided`].
pub fn refine_sign(
    mut eval: impl FnMut(u32) -> IntervalReal,
    is_zero: impl FnOnce() -> bool,
    max_bits: u32,
) -> Result<i8, AlgebraError> {
    if is_zero() {
        return Ok(0);
    }
    let mut bits = 64;
    while bits <= max_bits {
        if let Some(s) = eval(bits).sign() {
            return Ok(s);
        }
        bits *= 2;
    }
    Err(AlgebraError::Undecided { bits: max_bits })
}
