//! Cyclotomic polynomials and arithmetic in `Z[ζ_d] = Z[t]/Φ_d(t)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::arith::{divisors, mobius, totient};
use super::interval::{cos_2pi, IntervalReal};
use super::matrix::Ring;
use super::{AlgebraError, IntPoly};

/// `Φ_n(t) = ∏_{d | n} (t^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1);
    let binomial = |d: u64| &IntPoly::monomial(BigInt::one(), d as usize) - &IntPoly::one();
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &binomial(d),
            -1 => den = &den * &binomial(d),
            _ => {}
        }
    }
    num.exact_div(&den).expect("cyclotomic quotient is exact")
}

/// The ring `Z[t]/Φ_d(t)`; elements are coefficient vectors of length `φ(d)`.
#[derive(Clone, Debug)]
pub struct CycloRing {
    d: u64,
    phi: usize,
    modulus: Vec<BigInt>,
}

impl CycloRing {
    pub fn new(d: u64) -> Self {
        let m = cyclotomic_polynomial(d);
        CycloRing {
            d,
            phi: totient(d) as usize,
            modulus: m.coeffs().to_vec(),
        }
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        for k in (phi..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for i in 0..phi {
                if !self.modulus[i].is_zero() {
                    v[k - phi + i] -= &c * &self.modulus[i];
                }
            }
        }
        v.resize(phi, BigInt::zero());
        v
    }

    /// `c · ζ^k` for any integer `k`.
    pub fn monomial(&self, c: BigInt, k: i64) -> Vec<BigInt> {
        let e = k.rem_euclid(self.d as i64) as usize;
        let mut v = vec![BigInt::zero(); e.max(self.phi - 1) + 1];
        v[e] = c;
        self.reduce(v)
    }

    pub fn constant(&self, c: BigInt) -> Vec<BigInt> {
        self.monomial(c, 0)
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    /// Enclosure of the real part of `a` evaluated at `ζ = e^{2πi j/d}`.
    pub fn real_part(&self, a: &[BigInt], table: &CosineTable) -> IntervalReal {
        a.iter()
            .zip(&table.values)
            .filter(|(c, _)| !c.is_zero())
            .fold(IntervalReal::zero(table.prec), |acc, (c, v)| acc.add(&v.mul_int(c)))
    }

    /// Signs of real elements (for example the coefficients of the
    /// characteristic polynomial of a Hermitian matrix) at `ζ = e^{2πi j/d}`.
    ///
    /// Zero is decided exactly: the reduced representation is unique, so an
    /// element vanishes iff all its coefficients do.
    pub fn real_signs(&self, elems: &[Vec<BigInt>], j: u64) -> Result<Vec<i8>, AlgebraError> {
        const MAX_BITS: u32 = 1 << 16;
        let mut out = vec![0i8; elems.len()];
        let mut pending: Vec<usize> = (0..elems.len()).filter(|&i| !self.is_zero(&elems[i])).collect();
        let mut bits = 64;
        while !pending.is_empty() {
            if bits > MAX_BITS {
                return Err(AlgebraError::Undecided { bits: MAX_BITS });
            }
            let table = CosineTable::new(j, self.d, self.phi, bits);
            pending.retain(|&i| match self.real_part(&elems[i], &table).sign() {
                Some(s) => {
                    out[i] = s;
                    false
                }
                None => true,
            });
            bits *= 2;
        }
        Ok(out)
    }
}

impl Ring for CycloRing {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.phi]
    }

    fn one(&self) -> Vec<BigInt> {
        self.constant(BigInt::one())
    }

    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn mul(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let mut v = vec![BigInt::zero(); 2 * self.phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    v[i + k] += x * y;
                }
            }
        }
        self.reduce(v)
    }

    fn neg(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }
}

/// `cos(2π j k / d)` for `k < len`, enclosed at a fixed precision.
pub struct CosineTable {
    prec: u32,
    values: Vec<IntervalReal>,
}

impl CosineTable {
    pub fn new(j: u64, d: u64, len: usize, prec: u32) -> Self {
        let values = (0..len as u64)
            .map(|k| cos_2pi(&BigRational::new(BigInt::from(j * k % d), BigInt::from(d)), prec))
            .collect();
        CosineTable { prec, values }
    }
}
