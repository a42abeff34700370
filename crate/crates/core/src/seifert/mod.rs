//! Invariants of a knot computed from a Seifert matrix.

pub mod angle;
mod foxmilnor;
mod function;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::matrix::sign_variations;
use crate::algebra::poly::PolyRing;
use crate::algebra::{berkowitz, AlgebraError, CycloRing, IntMatrix, IntPoly, LaurentPoly, Ring};

pub use angle::{Angle, CircleRoot};
pub use foxmilnor::{fox_milnor, FoxMilnorReport, FoxMilnorVerdict};
pub use function::SignatureFunction;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("Seifert matrix must have even size, got {0}")]
    OddDimension(usize),
    #[error("det(V - V^t) = {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("argument {0} lies outside [0, 1]")]
    ArgumentOutOfRange(String),
    #[error("character is trivial: j = {j} is divisible by p = {p}")]
    TrivialCharacter { j: i64, p: u64 },
    #[error("Alexander polynomial {0} is not symmetric")]
    NotSymmetric(String),
    #[error("polynomial {0} is not an Alexander polynomial (value at 1 must be ±1)")]
    NotKnotPolynomial(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Integer matrix `V` with `det(V − Vᵗ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    v: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self, SeifertError> {
        if !v.is_square() {
            return Err(SeifertError::NotSquare {
                rows: v.rows(),
                cols: v.cols(),
            });
        }
        if !v.rows().is_multiple_of(2) {
            return Err(SeifertError::OddDimension(v.rows()));
        }
        let det = v.sub(&v.transpose()).determinant()?;
        if !det.is_one() {
            return Err(SeifertError::NotUnimodular(det));
        }
        Ok(SeifertMatrix { v })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, SeifertError> {
        Self::new(IntMatrix::from_rows(rows))
    }

    pub fn unknot() -> Self {
        SeifertMatrix {
            v: IntMatrix::zeros(0, 0),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.v.rows()
    }

    /// Half the size of the matrix.
    pub fn genus(&self) -> usize {
        self.v.rows() / 2
    }

    /// Seifert matrix `−Vᵗ` of the mirror image.
    pub fn mirror(&self) -> Self {
        SeifertMatrix {
            v: self.v.transpose().neg(),
        }
    }

    /// Seifert matrix of the connected sum.
    pub fn block_sum(&self, other: &SeifertMatrix) -> Self {
        SeifertMatrix {
            v: IntMatrix::block_diag(&[&self.v, &other.v]),
        }
    }

    /// `Δ(t) = t^{-g} det(V − tVᵗ)`, symmetric with `Δ(1) = 1`.
    pub fn alexander(&self) -> LaurentPoly {
        let n = self.dim();
        if n == 0 {
            return LaurentPoly::one();
        }
        let a: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        // entry of −(V − tVᵗ), so the characteristic polynomial's
                        // constant term is det(V − tVᵗ) (n is even)
                        IntPoly::new(vec![-self.v.get(i, j), self.v.get(j, i).clone()])
                    })
                    .collect()
            })
            .collect();
        let cp = berkowitz(&PolyRing, &a);
        let det = cp[n].clone();
        LaurentPoly::new(-(self.genus() as i64), det)
    }

    /// Signature and nullity of `(1−ω)V + (1−ω̄)Vᵗ` at `ω = e^{2πix}`.
    ///
    /// This is the form itself, without averaging at jumps.
    pub fn hermitian_signature(&self, x: &BigRational) -> Result<(i64, usize), SeifertError> {
        let rep = self.hermitian(x)?;
        Ok((rep.signature, rep.nullity))
    }

    fn hermitian(&self, x: &BigRational) -> Result<HermitianRepresentative, SeifertError> {
        check_unit_interval(x)?;
        let n = self.dim();
        let frac = x - x.floor();
        if frac.is_zero() {
            return Ok(HermitianRepresentative {
                order: 1,
                power: 0,
                entries: vec![vec![vec![]; n]; n],
                signature: 0,
                rank: 0,
                nullity: n,
            });
        }
        let d = frac.denom().to_u64().expect("denominator fits in u64");
        let j = frac.numer().to_u64().expect("numerator fits in u64");
        let ring = CycloRing::new(d);
        let entries: Vec<Vec<Vec<BigInt>>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let vab = self.v.get(a, b).clone();
                        let vba = self.v.get(b, a).clone();
                        let c0 = ring.constant(&vab + &vba);
                        let c1 = ring.monomial(-vab, 1);
                        let cm = ring.monomial(-vba, -1);
                        ring.add(&ring.add(&c0, &c1), &cm)
                    })
                    .collect()
            })
            .collect();
        let cp = berkowitz(&ring, &entries);
        let signs = ring.real_signs(&cp, j)?;
        let nullity = signs.iter().rev().take_while(|&&s| s == 0).count();
        let pos = sign_variations(signs.iter().copied());
        let neg = sign_variations(signs.iter().enumerate().map(|(i, &s)| {
            if (n - i) % 2 == 1 {
                -s
            } else {
                s
            }
        }));
        Ok(HermitianRepresentative {
            order: d,
            power: j,
            entries,
            signature: pos as i64 - neg as i64,
            rank: n - nullity,
            nullity,
        })
    }

    /// The matrix `(1 − ζ_p^j)V + (1 − ζ_p^{−j})Vᵗ` with its signature, rank
    /// and nullity.
    pub fn witt_representative(&self, j: i64, p: u64) -> Result<HermitianRepresentative, SeifertError> {
        if p == 0 || j.rem_euclid(p as i64) == 0 {
            return Err(SeifertError::TrivialCharacter { j, p });
        }
        let x = BigRational::new(BigInt::from(j.rem_euclid(p as i64)), BigInt::from(p));
        self.hermitian(&x)
    }

    /// The Levine–Tristram signature function, with exact jump locations.
    pub fn signature_function(&self) -> Result<SignatureFunction, SeifertError> {
        function::analyze(self)
    }

    /// Signature at a rational point, averaged at jumps.
    pub fn signature_at(&self, x: &BigRational) -> Result<SignatureValue, SeifertError> {
        self.signature_function()?.leaf_value(self, x)
    }

    /// `m` such that `Δ = m(m+1)t − (m² + (m+1)²) + m(m+1)t⁻¹` up to a unit,
    /// when it exists.
    pub fn m_parameter(&self) -> Option<u64> {
        m_parameter_of(&self.alexander())
    }

    /// Arf invariant, via `Δ(−1) mod 8`.
    pub fn arf(&self) -> u8 {
        arf_of(&self.alexander())
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

pub(crate) fn check_unit_interval(x: &BigRational) -> Result<(), SeifertError> {
    if x.is_negative() || *x > BigRational::one() {
        return Err(SeifertError::ArgumentOutOfRange(crate::algebra::fmt_rational(x)));
    }
    Ok(())
}

/// Genus-one algebraically slice parameter from an Alexander polynomial.
pub fn m_parameter_of(delta: &LaurentPoly) -> Option<u64> {
    let mut d = delta.clone();
    if d.eval_at_one() == -BigInt::one() {
        d = d.neg();
    }
    if d == LaurentPoly::one() {
        return Some(0);
    }
    if !d.is_symmetric() || d.span() != 2 || !d.eval_at_one().is_one() {
        return None;
    }
    let prod: BigInt = -d.coeff(1); // m(m+1)
    if !prod.is_positive() {
        return None;
    }
    let m: BigInt = ((BigInt::from(4) * &prod + 1u32).sqrt() - 1u32) / 2u32;
    if &m * (&m + 1) == prod {
        m.to_u64()
    } else {
        None
    }
}

/// Arf invariant of a knot with Alexander polynomial `delta`.
pub fn arf_of(delta: &LaurentPoly) -> u8 {
    let r = delta.eval_at_minus_one().abs().mod_floor(&BigInt::from(8));
    if r == BigInt::from(1) || r == BigInt::from(7) {
        0
    } else {
        1
    }
}

/// Value of a signature function at a point.
///
/// The signature is stored doubled so that averages at jumps stay integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureValue {
    #[serde(serialize_with = "crate::serde_rational")]
    pub argument: BigRational,
    pub doubled: i64,
    pub nullity: usize,
    pub is_jump: bool,
}

impl SignatureValue {
    pub fn new(argument: BigRational, doubled: i64, nullity: usize) -> Self {
        SignatureValue {
            argument,
            doubled,
            nullity,
            is_jump: nullity > 0,
        }
    }

    pub fn signature(&self) -> BigRational {
        BigRational::new(BigInt::from(self.doubled), BigInt::from(2))
    }
}

impl fmt::Display for SignatureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::algebra::fmt_rational(&self.signature()))
    }
}

/// `(1 − ζ^j)V + (1 − ζ^{−j})Vᵗ` over `Z[ζ_d]`, with `ζ = e^{2πi/d}`
/// evaluated at the power `j`.
#[derive(Clone, Debug)]
pub struct HermitianRepresentative {
    /// Order `d` of the root of unity (1 at the trivial character).
    pub order: u64,
    /// The power `j`, coprime to `order`.
    pub power: u64,
    /// Entry `(a, b)` as coefficients of `1, ζ, ..., ζ^{φ(d)−1}`.
    pub entries: Vec<Vec<Vec<BigInt>>>,
    pub signature: i64,
    pub rank: usize,
    pub nullity: usize,
}

impl HermitianRepresentative {
    /// Hermitian symmetry under `ζ ↦ ζ⁻¹`: `H_ba = conj(H_ab)`.
    pub fn is_hermitian(&self) -> bool {
        if self.order == 1 {
            return true;
        }
        let ring = CycloRing::new(self.order);
        let conj = |a: &Vec<BigInt>| {
            a.iter()
                .enumerate()
                .fold(ring.zero(), |acc, (k, c)| ring.add(&acc, &ring.monomial(c.clone(), -(k as i64))))
        };
        let n = self.entries.len();
        (0..n).all(|a| (0..n).all(|b| conj(&self.entries[a][b]) == self.entries[b][a]))
    }
}
