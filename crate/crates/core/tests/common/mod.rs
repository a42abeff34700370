#![allow(dead_code)]

//! Random inputs and independent oracles shared by the integration tests
//! and the acceptance harness.

use knotsig::{IntMatrix, SeifertMatrix};
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

/// Eigenvalues of the float Hermitian form closer to zero than this are
/// treated as undecidable and the sample is skipped. Entries are at most a
/// few units and the forms have size ≤ 8, so genuine nonzero eigenvalues at
/// denominators ≤ 40 sit far above it.
pub const EIGENVALUE_CUTOFF: f64 = 1e-7;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `Pᵗ(S + N)P` with `S` symmetric, `N` the standard block with
/// `N − Nᵗ` symplectic, and `P` a product of elementary moves.
pub fn random_seifert<R: Rng>(rng: &mut R, genus: usize, bound: i64) -> SeifertMatrix {
    let n = 2 * genus;
    let mut v = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = BigInt::from(rng.gen_range(-bound..=bound));
            v.set(i, j, x.clone());
            v.set(j, i, x);
        }
    }
    for k in 0..genus {
        *v.entry_mut(2 * k, 2 * k + 1) += 1;
    }
    let mut p = IntMatrix::identity(n);
    for _ in 0..rng.gen_range(0..3) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            p.add_col_multiple(a, b, &BigInt::from(rng.gen_range(-1..=1)));
        }
    }
    SeifertMatrix::new(p.transpose().mul(&v).mul(&p)).expect("V - V^t stays unimodular")
}

/// Random `j/p` in `(0, 1)` with `p ≤ max_den`.
pub fn random_point<R: Rng>(rng: &mut R, max_den: i64) -> BigRational {
    let p = rng.gen_range(2..=max_den);
    rat(rng.gen_range(1..p), p)
}

pub fn cofactor_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_i64(&minor)
        })
        .sum()
}

/// Twice the signature of `(1−ω)V + (1−ω̄)Vᵗ` via the real `2n × 2n`
/// embedding `[[Re, −Im], [Im, Re]]`, whose signature is twice the Hermitian
/// one. `None` when an eigenvalue is too close to zero to call.
pub fn float_doubled_signature(v: &SeifertMatrix, x: f64) -> Option<i64> {
    let n = v.dim();
    let (c, s) = ((2.0 * std::f64::consts::PI * x).cos(), (2.0 * std::f64::consts::PI * x).sin());
    let e = |i: usize, j: usize| v.matrix().get(i, j).to_f64().unwrap();
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            // (1−ω)V_ij + (1−ω̄)V_ji with ω = c + is
            let re = (1.0 - c) * (e(i, j) + e(j, i));
            let im = -s * e(i, j) + s * e(j, i);
            m[(i, j)] = re;
            m[(n + i, n + j)] = re;
            m[(i, n + j)] = -im;
            m[(n + i, j)] = im;
        }
    }
    let eig = SymmetricEigen::new(m).eigenvalues;
    if eig.iter().any(|l| l.abs() < EIGENVALUE_CUTOFF) {
        return None;
    }
    Some(eig.iter().map(|&l| if l > 0.0 { 1 } else { -1 }).sum())
}

/// Arf invariant of the quadratic form `q(x) = xᵗVx mod 2` on `Z₂^{2g}` by
/// majority vote: it is the value `q` takes on more than half the vectors.
pub fn arf_brute_force(v: &SeifertMatrix) -> u8 {
    let n = v.dim();
    let mut ones = 0u64;
    for bits in 0u64..(1 << n) {
        let mut q = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                if (bits >> i) & 1 == 1 && (bits >> j) & 1 == 1 {
                    q += v.matrix().get(i, j);
                }
            }
        }
        if (q % 2) != BigInt::zero() {
            ones += 1;
        }
    }
    u8::from(ones > (1 << n) / 2)
}

/// Litherland's count for `T(p, q)`: with `Σ = {i/p + j/q}`,
/// `σ(x) = −#{x < s < x+1} + #{s < x} + #{s > x+1}`; points with `s = x` or
/// `s = x + 1` contribute 0 to the averaged value.
pub fn litherland_doubled(p: i64, q: i64, x: &BigRational) -> i64 {
    let one = BigRational::from_integer(BigInt::from(1));
    let x1 = x + &one;
    let mut total = 0;
    for i in 1..p {
        for j in 1..q {
            let s = rat(i, p) + rat(j, q);
            total += if *x < s && s < x1 {
                -2
            } else if s < *x || s > x1 {
                2
            } else {
                0
            };
        }
    }
    total
}

/// `Σ_{j<p} S_a(j/p)` by direct counting, with `1/2` at the two jumps.
pub fn sigma_p_by_count(a: &BigRational, p: i64) -> BigRational {
    let one_minus = BigRational::one() - a;
    (1..p)
        .map(|j| {
            let x = rat(j, p);
            if &x == a || x == one_minus {
                rat(1, 2)
            } else if *a < x && x < one_minus {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .sum()
}

/// `2⟨x⟩ − 1`, or `0` at integers.
pub fn defect(x: &BigRational) -> BigRational {
    if x.is_integer() {
        return BigRational::zero();
    }
    (x - x.floor()) * BigRational::from_integer(2.into()) - BigRational::one()
}

pub fn cofactor_rat(m: &[Vec<BigRational>]) -> BigRational {
    if m.is_empty() {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_rat(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
