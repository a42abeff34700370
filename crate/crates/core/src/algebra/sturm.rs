//! Real root isolation by Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::sign_variations;
use super::{AlgebraError, IntPoly, RatPoly};

fn sign_rat(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Builds the chain of the squarefree part of `p`.
    pub fn new(p: &IntPoly) -> Result<Self, AlgebraError> {
        if p.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let sf = p.squarefree_part().to_rat();
        let mut chain = vec![sf.clone(), sf.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // Push -r rescaled by a positive constant (the primitive part has
            // positive leading coefficient, so fix the sign afterwards).
            let scaled = IntPoly::from_rat_primitive(&r).to_rat();
            let r_lead_pos = r.coeffs().last().unwrap().is_positive();
            chain.push(if r_lead_pos { scaled.neg() } else { scaled });
        }
        Ok(SturmChain { chain })
    }

    pub fn poly(&self) -> &RatPoly {
        &self.chain[0]
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        sign_variations(self.chain.iter().map(|p| sign_rat(&p.eval(x))))
    }

    /// Number of distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let at_b = self.chain[0].eval(b).is_zero() as usize;
        (self.variations(a) - self.variations(b)) - at_b
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_rat(&self.chain[0].eval(x))
    }
}

/// An isolated real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootInterval {
    /// A rational root.
    Exact(BigRational),
    /// The unique root lies strictly between the endpoints, neither of which
    /// is a root; the polynomial changes sign across the interval.
    Open(BigRational, BigRational),
}

impl RootInterval {
    pub fn lower(&self) -> &BigRational {
        match self {
            RootInterval::Exact(x) => x,
            RootInterval::Open(a, _) => a,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match self {
            RootInterval::Exact(x) => x,
            RootInterval::Open(_, b) => b,
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        match self {
            RootInterval::Exact(r) => r == x,
            RootInterval::Open(a, b) => a < x && x < b,
        }
    }
}

/// Isolating intervals for the distinct real roots of `p` in the open
/// interval `(a, b)`, in increasing order.
pub fn isolate_roots(
    p: &IntPoly,
    a: &BigRational,
    b: &BigRational,
) -> Result<Vec<RootInterval>, AlgebraError> {
    let chain = SturmChain::new(p)?;
    let mut out = Vec::new();
    isolate_rec(&chain, a.clone(), b.clone(), &mut out);
    Ok(out)
}

fn isolate_rec(chain: &SturmChain, lo: BigRational, hi: BigRational, out: &mut Vec<RootInterval>) {
    let n = chain.count_open(&lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 && chain.sign_at(&lo) != 0 && chain.sign_at(&hi) != 0 {
        out.push(RootInterval::Open(lo, hi));
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    isolate_rec(chain, lo, mid.clone(), out);
    if chain.sign_at(&mid) == 0 {
        out.push(RootInterval::Exact(mid.clone()));
    }
    isolate_rec(chain, mid, hi, out);
}

/// Halve an open isolating interval of a squarefree polynomial `p`.
pub fn bisect(p: &RatPoly, lo: &BigRational, hi: &BigRational) -> RootInterval {
    let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
    let sm = sign_rat(&p.eval(&mid));
    if sm == 0 {
        return RootInterval::Exact(mid);
    }
    let sl = sign_rat(&p.eval(lo));
    if sl == sm {
        RootInterval::Open(mid, hi.clone())
    } else {
        RootInterval::Open(lo.clone(), mid)
    }
}
