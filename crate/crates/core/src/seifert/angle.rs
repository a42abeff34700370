//! Exact points of the circle `R/Z`: rationals and algebraic angles
//! `θ = arccos(x₀/2) / 2π` for real roots `x₀` of a trace polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::interval::cos_2pi;
use crate::algebra::sturm::bisect;
use crate::algebra::{isolate_roots, AlgebraError, IntPoly, RatPoly, RootInterval, SturmChain};

/// Bisection steps allowed when comparing angles whose equality cannot be
/// decided symbolically.
const MAX_SEPARATION_STEPS: usize = 400;

#[derive(Debug)]
struct RootState {
    /// Closed interval containing `x₀`; degenerate when `x₀` is rational,
    /// otherwise `x₀` is strictly inside and the endpoints are not roots.
    x_lo: BigRational,
    x_hi: BigRational,
    /// `θ ∈ (th_lo, th_hi) ⊂ (0, 1/2)` with dyadic endpoints.
    th_lo: BigRational,
    th_hi: BigRational,
}

/// An angle `θ ∈ (0, 1/2)` with `2cos(2πθ) = x₀`, where `x₀ ∈ (−2, 2)` is a
/// root of a squarefree integer polynomial and `e^{2πiθ}` is not a root of
/// unity (so `θ` is irrational).
#[derive(Debug)]
pub struct CircleRoot {
    poly: IntPoly,
    rat_poly: RatPoly,
    state: Mutex<RootState>,
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl CircleRoot {
    /// All roots of `trace_poly` in `(−2, 2)`. The caller guarantees none of
    /// them is `2cos` of a rational angle.
    pub fn isolate(trace_poly: &IntPoly) -> Result<Vec<Arc<CircleRoot>>, AlgebraError> {
        let sf = trace_poly.squarefree_part();
        let two = BigRational::from_integer(BigInt::from(2));
        let roots = isolate_roots(&sf, &-two.clone(), &two)?;
        Ok(roots
            .into_iter()
            .map(|r| {
                let (x_lo, x_hi) = match r {
                    RootInterval::Exact(x) => (x.clone(), x),
                    RootInterval::Open(a, b) => (a, b),
                };
                Arc::new(CircleRoot {
                    rat_poly: sf.to_rat(),
                    poly: sf.clone(),
                    state: Mutex::new(RootState {
                        x_lo,
                        x_hi,
                        th_lo: BigRational::zero(),
                        th_hi: half(),
                    }),
                })
            })
            .collect())
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Current rational bracket `(lo, hi)` around `θ`.
    pub fn bracket(&self) -> (BigRational, BigRational) {
        let s = self.state.lock().unwrap();
        (s.th_lo.clone(), s.th_hi.clone())
    }

    /// Current enclosure of `x₀ = 2cos(2πθ)`.
    pub fn x_interval(&self) -> (BigRational, BigRational) {
        let s = self.state.lock().unwrap();
        (s.x_lo.clone(), s.x_hi.clone())
    }

    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.bracket();
        ((lo + hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Halve the `θ` bracket.
    pub fn refine(&self) {
        let mut s = self.state.lock().unwrap();
        let mid = (&s.th_lo + &s.th_hi) / BigRational::from_integer(BigInt::from(2));
        let mut prec = 64;
        loop {
            // 2cos(2π·mid) compared with x₀; 2cos is decreasing on [0, 1/2].
            let c = cos_2pi(&mid, prec).mul_int(&BigInt::from(2));
            if c.upper() < s.x_lo {
                s.th_hi = mid;
                return;
            }
            if c.lower() > s.x_hi {
                s.th_lo = mid;
                return;
            }
            let c_width = c.upper() - c.lower();
            if s.x_lo != s.x_hi && s.x_hi.clone() - s.x_lo.clone() > c_width {
                match bisect(&self.rat_poly, &s.x_lo, &s.x_hi) {
                    RootInterval::Exact(x) => {
                        s.x_lo = x.clone();
                        s.x_hi = x;
                    }
                    RootInterval::Open(a, b) => {
                        s.x_lo = a;
                        s.x_hi = b;
                    }
                }
            } else {
                prec *= 2;
                assert!(prec <= 1 << 20, "angle of a non-cyclotomic root is irrational");
            }
        }
    }

    /// Compare a rational `r` with `θ`; never `Equal` since `θ` is irrational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        loop {
            let (lo, hi) = self.bracket();
            if *r <= lo {
                return Ordering::Less;
            }
            if *r >= hi {
                return Ordering::Greater;
            }
            self.refine();
        }
    }

    /// Whether two roots denote the same real number, decided exactly via
    /// the gcd of their polynomials.
    pub fn same_value(&self, other: &CircleRoot) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        let (a_lo, a_hi) = self.x_interval();
        let (b_lo, b_hi) = other.x_interval();
        let lo = if a_lo > b_lo { a_lo } else { b_lo };
        let hi = if a_hi < b_hi { a_hi } else { b_hi };
        if lo > hi {
            return false;
        }
        let g = self.poly.gcd(&other.poly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        if lo == hi {
            return g.eval_rational(&lo).is_zero();
        }
        match SturmChain::new(&g) {
            Ok(chain) => {
                // endpoints of open isolating intervals are not roots of either
                // polynomial, hence not of g; a degenerate interval is handled above
                chain.sign_at(&lo) == 0 || chain.count_open(&lo, &hi) > 0 || chain.sign_at(&hi) == 0
            }
            Err(_) => false,
        }
    }
}

/// A point of `[0, 1]`, either rational or `(s·θ + k) / n` for an algebraic
/// angle `θ`, sign `s = ±1`, integer shift `k` and positive scale `n`.
#[derive(Clone, Debug)]
pub enum Angle {
    Rational(BigRational),
    Algebraic {
        root: Arc<CircleRoot>,
        sign: i8,
        shift: i64,
        scale: u64,
    },
}

impl Angle {
    pub fn algebraic(root: Arc<CircleRoot>) -> Self {
        Angle::Algebraic {
            root,
            sign: 1,
            shift: 0,
            scale: 1,
        }
    }

    /// `1 − self`
    pub fn reflect(&self) -> Self {
        match self {
            Angle::Rational(q) => Angle::Rational(BigRational::one() - q),
            Angle::Algebraic {
                root,
                sign,
                shift,
                scale,
            } => Angle::Algebraic {
                root: root.clone(),
                sign: -sign,
                shift: *scale as i64 - shift,
                scale: *scale,
            },
        }
    }

    /// `(self + k) / r`
    pub fn preimage(&self, k: i64, r: u64) -> Self {
        match self {
            Angle::Rational(q) => {
                Angle::Rational((q + BigRational::from_integer(BigInt::from(k))) / BigRational::from_integer(BigInt::from(r)))
            }
            Angle::Algebraic {
                root,
                sign,
                shift,
                scale,
            } => Angle::Algebraic {
                root: root.clone(),
                sign: *sign,
                shift: shift + k * *scale as i64,
                scale: scale * r,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Angle::Rational(q) => Some(q),
            Angle::Algebraic { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Angle::Rational(_))
    }

    /// Rational enclosure `[lo, hi]`; degenerate for rationals.
    pub fn bracket(&self) -> (BigRational, BigRational) {
        match self {
            Angle::Rational(q) => (q.clone(), q.clone()),
            Angle::Algebraic {
                root,
                sign,
                shift,
                scale,
            } => {
                let (lo, hi) = root.bracket();
                let k = BigRational::from_integer(BigInt::from(*shift));
                let n = BigRational::from_integer(BigInt::from(*scale));
                if *sign > 0 {
                    ((lo + &k) / &n, (hi + &k) / &n)
                } else {
                    ((&k - hi) / &n, (&k - lo) / &n)
                }
            }
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Angle::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            Angle::Algebraic {
                root,
                sign,
                shift,
                scale,
            } => (*sign as f64 * root.approx() + *shift as f64) / *scale as f64,
        }
    }

    /// Compare with a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        match self {
            Angle::Rational(r) => r.cmp(q),
            Angle::Algebraic {
                root,
                sign,
                shift,
                scale,
            } => {
                // (sθ + k)/n vs q  <=>  sθ vs nq − k
                let t = q * BigRational::from_integer(BigInt::from(*scale))
                    - BigRational::from_integer(BigInt::from(*shift));
                if *sign > 0 {
                    root.cmp_rational(&t).reverse()
                } else {
                    root.cmp_rational(&-t)
                }
            }
        }
    }

    /// Total order on angles. Fails only when two angles built from
    /// different algebraic numbers cannot be separated numerically.
    pub fn try_cmp(&self, other: &Angle) -> Result<Ordering, AlgebraError> {
        match (self, other) {
            (Angle::Rational(a), Angle::Rational(b)) => Ok(a.cmp(b)),
            (Angle::Rational(a), b) => Ok(b.cmp_rational(a).reverse()),
            (a, Angle::Rational(b)) => Ok(a.cmp_rational(b)),
            (
                Angle::Algebraic {
                    root: r1,
                    sign: s1,
                    shift: k1,
                    scale: n1,
                },
                Angle::Algebraic {
                    root: r2,
                    sign: s2,
                    shift: k2,
                    scale: n2,
                },
            ) => {
                if r1.same_value(r2) {
                    // (s1 θ + k1)/n1 vs (s2 θ + k2)/n2  <=>  cθ vs k2 n1 − k1 n2
                    let (n1, n2) = (*n1 as i64, *n2 as i64);
                    let c = *s1 as i64 * n2 - *s2 as i64 * n1;
                    let rhs = BigInt::from(k2 * n1 - k1 * n2);
                    if c == 0 {
                        return Ok(BigInt::zero().cmp(&rhs));
                    }
                    let t = BigRational::new(rhs, BigInt::from(c.abs()));
                    return Ok(if c > 0 {
                        r1.cmp_rational(&t).reverse()
                    } else {
                        r1.cmp_rational(&-t)
                    });
                }
                for _ in 0..MAX_SEPARATION_STEPS {
                    let (a_lo, a_hi) = self.bracket();
                    let (b_lo, b_hi) = other.bracket();
                    if a_hi < b_lo {
                        return Ok(Ordering::Less);
                    }
                    if b_hi < a_lo {
                        return Ok(Ordering::Greater);
                    }
                    r1.refine();
                    r2.refine();
                }
                Err(AlgebraError::Undecided {
                    bits: MAX_SEPARATION_STEPS as u32,
                })
            }
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Rational(q) => write!(f, "{}", crate::algebra::fmt_rational(q)),
            Angle::Algebraic { .. } => write!(f, "~{:.12}", self.approx()),
        }
    }
}

/// Sort angles, propagating the first comparison failure.
pub fn sort_angles<T>(items: &mut [T], key: impl Fn(&T) -> &Angle) -> Result<(), AlgebraError> {
    let mut err = None;
    items.sort_by(|a, b| match key(a).try_cmp(key(b)) {
        Ok(o) => o,
        Err(e) => {
            err.get_or_insert(e);
            Ordering::Equal
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// The rational with smallest denominator (then numerator) strictly between
/// two angles `lo < hi` in `[0, 1]`.
pub fn simplest_between(lo: &Angle, hi: &Angle) -> BigRational {
    // Stern–Brocot descent
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    let (mut c, mut d) = (BigInt::one(), BigInt::one());
    loop {
        let m = BigRational::new(&a + &c, &b + &d);
        if lo.cmp_rational(&m) != Ordering::Less {
            a += &c;
            b += &d;
        } else if hi.cmp_rational(&m) != Ordering::Greater {
            c += &a;
            d += &b;
        } else {
            return m;
        }
    }
}
