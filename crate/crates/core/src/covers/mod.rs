//! Homology of the `q`-fold branched cyclic cover `S_q` from a Seifert
//! matrix: three presentations, invariant factors, the deck transformation,
//! the linking form and its metabolizers.
//!
//! All presentations are column presentations: `H = Z^n / A·Zⁿ`, and the
//! deck transformation acts on column vectors preserving `A·Zⁿ`.

mod linking;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::arith::is_prime_u64;
use crate::algebra::{smith_normal_form, AlgebraError, IntMatrix, IntPoly, SmithForm};
use crate::seifert::{SeifertError, SeifertMatrix};

pub use linking::{linking_form, linking_presentation, metabolizers, LinkingForm, Line, MetabolizerReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("q = {0} must be at least 2")]
    InvalidQ(u64),
    #[error("H_1 of the {q}-fold cover is infinite")]
    InfiniteHomology { q: u64 },
    #[error("p = {0} must be an odd prime")]
    NotOddPrime(u64),
    #[error("p = {p} equals q; the deck action is not semisimple there")]
    PEqualsQ { p: u64 },
    #[error("p = {p} does not divide the order {order}")]
    PDoesNotDivide { p: u64, order: BigInt },
    #[error("the {p}-primary part must be Z/{p} + Z/{p}, found factors {factors:?}")]
    NotElementaryRankTwo { p: u64, factors: Vec<String> },
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPresentation {
    pub q: u64,
    /// Relations as columns.
    pub matrix: IntMatrix,
    /// Deck transformation on generators.
    pub deck: IntMatrix,
}

/// Basis used by [`block_presentation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockBasis {
    /// `V` was used as given.
    Original,
    /// `PᵗVP = [[0, M], [Mᵗ + I, B]]` for the recorded change of basis `P`.
    Metabolizer { change: IntMatrix, m: IntMatrix, b: IntMatrix },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPresentation {
    pub presentation: CoverPresentation,
    pub basis: BlockBasis,
}

fn check_q(q: u64) -> Result<usize, CoverError> {
    if q < 2 {
        return Err(CoverError::InvalidQ(q));
    }
    Ok(q as usize)
}

/// Cyclic shift `e_α ↦ e_{α+1}` on `Z^q`.
fn cycle(q: usize) -> IntMatrix {
    let mut c = IntMatrix::zeros(q, q);
    for a in 0..q {
        c.set((a + 1) % q, a, BigInt::one());
    }
    c
}

/// Γ-presentation: `H ≅ Λ^{2g} / (Γ + t(I − Γ))` with `Γ = (V − Vᵗ)⁻¹V`
/// and `t` the cyclic shift, as a `2gq × 2gq` integer matrix.
pub fn gamma_presentation(v: &SeifertMatrix, q: u64) -> Result<CoverPresentation, CoverError> {
    let qn = check_q(q)?;
    let n = v.dim();
    let g = gamma(v)?;
    let i = IntMatrix::identity(n);
    let c = cycle(qn);
    let matrix = IntMatrix::identity(qn).kronecker(&g).add(&c.kronecker(&i.sub(&g)));
    Ok(CoverPresentation {
        q,
        matrix,
        deck: c.kronecker(&i),
    })
}

/// `Γ = (V − Vᵗ)⁻¹ V`, integral because `det(V − Vᵗ) = 1`.
pub fn gamma(v: &SeifertMatrix) -> Result<IntMatrix, CoverError> {
    let m = v.matrix();
    if m.rows() == 0 {
        return Ok(IntMatrix::zeros(0, 0));
    }
    let inv = m.sub(&m.transpose()).to_rat().inverse()?;
    Ok(inv
        .mul(&m.to_rat())
        .to_integer()
        .expect("V - V^t is unimodular"))
}

/// Block presentation: generators are the lifts `x̃_{i,α}` then `ỹ_{i,α}`,
/// and the relation for the lift in sheet `α` is `Vᵗ` in sheet `α` minus `V`
/// in sheet `α+1`. For genus-one matrices with an isotropic vector the basis
/// is first moved to the form `[[0, M], [Mᵗ + I, B]]`, giving the circulant
/// blocks `M + I, −M`, `Mᵗ, −Mᵗ − I` and `B, −B`.
pub fn block_presentation(v: &SeifertMatrix, q: u64) -> Result<BlockPresentation, CoverError> {
    let qn = check_q(q)?;
    let (w, basis) = match metabolizer_basis(v) {
        Some((p, w)) => {
            let g = w.rows() / 2;
            let m = w.submatrix(0, g, g, g);
            let b = w.submatrix(g, g, g, g);
            (w, BlockBasis::Metabolizer { change: p, m, b })
        }
        None => (v.matrix().clone(), BlockBasis::Original),
    };
    let n = w.rows();
    let g = n / 2;
    let size = n * qn;
    let wt = w.transpose();
    // generator index: half h (0 = x, 1 = y), sheet α, basis index i
    let idx = |h: usize, a: usize, i: usize| h * g * qn + a * g + i;
    let mut rel = IntMatrix::zeros(size, size);
    for a in 0..qn {
        let next = (a + 1) % qn;
        for hr in 0..2 {
            for i in 0..g {
                let row = idx(hr, a, i);
                for hc in 0..2 {
                    for j in 0..g {
                        let (r, c) = (hr * g + i, hc * g + j);
                        *rel.entry_mut(row, idx(hc, a, j)) += wt.get(r, c);
                        *rel.entry_mut(row, idx(hc, next, j)) -= w.get(r, c);
                    }
                }
            }
        }
    }
    let mut shift = IntMatrix::zeros(size, size);
    for h in 0..2 {
        for a in 0..qn {
            for i in 0..g {
                shift.set(idx(h, (a + 1) % qn, i), idx(h, a, i), BigInt::one());
            }
        }
    }
    // rows above are relations; transpose into a column presentation, on
    // which the shift acts by its transpose
    Ok(BlockPresentation {
        presentation: CoverPresentation {
            q,
            matrix: rel.transpose(),
            deck: shift.transpose(),
        },
        basis,
    })
}

impl BlockPresentation {
    /// `(|det 𝓜|, |det 𝓜′|)` for a metabolizer basis.
    pub fn block_orders(&self) -> Option<(BigInt, BigInt)> {
        let BlockBasis::Metabolizer { m, .. } = &self.basis else {
            return None;
        };
        let g = m.rows();
        let q = self.presentation.q as usize;
        let rel = self.presentation.matrix.transpose();
        let big_m = rel.submatrix(0, g * q, g * q, g * q);
        let big_m_prime = rel.submatrix(g * q, 0, g * q, g * q);
        Some((
            big_m.determinant().ok()?.abs(),
            big_m_prime.determinant().ok()?.abs(),
        ))
    }
}

/// A change of basis `P` with `PᵗVP = [[0, M], [Mᵗ + I, B]]`, when `V` is
/// already of that shape or has genus one and an isotropic primitive vector.
pub fn metabolizer_basis(v: &SeifertMatrix) -> Option<(IntMatrix, IntMatrix)> {
    let m = v.matrix();
    let n = m.rows();
    if n == 0 {
        return None;
    }
    if in_block_form(m) {
        return Some((IntMatrix::identity(n), m.clone()));
    }
    if n != 2 {
        return None;
    }
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    // a u² + (b + c) u v + d v² = 0
    let bc = b + c;
    let x: (BigInt, BigInt) = if a.is_zero() {
        (BigInt::one(), BigInt::zero())
    } else {
        let disc = &bc * &bc - BigInt::from(4) * a * d;
        if disc.is_negative() {
            return None;
        }
        let s = disc.sqrt();
        if &s * &s != disc {
            return None;
        }
        let (u, w) = (-&bc + &s, BigInt::from(2) * a);
        let g = u.gcd(&w);
        (u / &g, w / &g)
    };
    // y with xᵗ(V − Vᵗ)y = −1
    let j = m.sub(&m.transpose());
    let r0 = &x.0 * j.get(0, 0) + &x.1 * j.get(1, 0);
    let r1 = &x.0 * j.get(0, 1) + &x.1 * j.get(1, 1);
    let e = r0.extended_gcd(&r1);
    if !e.gcd.abs().is_one() {
        return None;
    }
    let scale = -e.gcd.signum();
    let y = (&e.x * &scale, &e.y * &scale);
    let p = IntMatrix::from_big_rows(vec![vec![x.0, y.0], vec![x.1, y.1]]).ok()?;
    let w = p.transpose().mul(m).mul(&p);
    debug_assert!(in_block_form(&w));
    Some((p, w))
}

fn in_block_form(m: &IntMatrix) -> bool {
    let g = m.rows() / 2;
    let top = m.submatrix(0, 0, g, g);
    let upper = m.submatrix(0, g, g, g);
    let lower = m.submatrix(g, 0, g, g);
    top.is_zero() && lower == upper.transpose().add(&IntMatrix::identity(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homology {
    /// Invariant factors greater than one, each dividing the next.
    #[serde(serialize_with = "serialize_bigints")]
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    /// Order of the group when it is finite.
    #[serde(serialize_with = "crate::serde_opt_display")]
    pub order: Option<BigInt>,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl CoverPresentation {
    pub fn smith(&self) -> SmithForm {
        smith_normal_form(&self.matrix)
    }

    pub fn homology(&self) -> Homology {
        let snf = self.smith();
        let free_rank = snf.diagonal.iter().filter(|d| d.is_zero()).count()
            + self.matrix.rows().saturating_sub(snf.diagonal.len());
        let invariant_factors: Vec<BigInt> = snf
            .diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        let order = (free_rank == 0).then(|| invariant_factors.iter().product());
        Homology {
            invariant_factors,
            free_rank,
            order,
        }
    }

    /// Whether `f(deck)` kills the group, i.e. maps every generator into the
    /// relation lattice.
    pub fn annihilates(&self, f: &IntMatrix) -> Result<bool, CoverError> {
        let inv = self.matrix.to_rat().inverse()?;
        Ok(inv.mul(&f.to_rat()).to_integer().is_some())
    }

    /// Smallest `k ≥ 1` with `deckᵏ = 1` on the group.
    pub fn deck_order(&self) -> Result<u64, CoverError> {
        let n = self.matrix.rows();
        let mut power = self.deck.clone();
        for k in 1..=self.q {
            if self.annihilates(&power.sub(&IntMatrix::identity(n)))? {
                return Ok(k);
            }
            power = power.mul(&self.deck);
        }
        Ok(self.q)
    }

    /// Action of the deck transformation on `H ⊗ Z/p`, in the basis of
    /// Smith generators whose invariant factor is divisible by `p`.
    pub fn deck_mod_p(&self, p: u64) -> Result<Vec<Vec<u64>>, CoverError> {
        let snf = self.smith();
        let u_inv = snf.u.to_rat().inverse()?.to_integer().expect("U is unimodular");
        let conj = snf.u.mul(&self.deck).mul(&u_inv);
        let pb = BigInt::from(p);
        let keep: Vec<usize> = (0..snf.diagonal.len())
            .filter(|&k| snf.diagonal[k].is_multiple_of(&pb))
            .collect();
        Ok(keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| conj.get(i, j).mod_floor(&pb).to_u64().unwrap())
                    .collect()
            })
            .collect())
    }
}

/// `H₁(S_q)` from the Γ-presentation.
pub fn homology(v: &SeifertMatrix, q: u64) -> Result<Homology, CoverError> {
    Ok(gamma_presentation(v, q)?.homology())
}

/// `|Res(t^g Δ(t), 1 + t + … + t^{q−1})| = |∏_{i=1}^{q−1} Δ(ζ_q^i)|`, from the
/// Sylvester matrix.
pub fn order_from_resultant(v: &SeifertMatrix, q: u64) -> Result<BigInt, CoverError> {
    check_q(q)?;
    let f = v.alexander().shifted_poly().clone();
    let norm = IntPoly::new(vec![BigInt::one(); q as usize]);
    Ok(resultant(&f, &norm)?.abs())
}

fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt, AlgebraError> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(AlgebraError::ZeroPolynomial),
    };
    if m + n == 0 {
        return Ok(BigInt::one());
    }
    let size = m + n;
    let mut s = IntMatrix::zeros(size, size);
    for i in 0..n {
        for k in 0..=m {
            s.set(i, i + k, f.coeff(m - k));
        }
    }
    for i in 0..m {
        for k in 0..=n {
            s.set(n + i, i + k, g.coeff(n - k));
        }
    }
    s.determinant()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeckAction {
    pub p: u64,
    /// Matrix of the deck transformation on `H ⊗ Z/p`.
    pub matrix: Vec<Vec<u64>>,
    /// Roots of its characteristic polynomial mod `p`, with multiplicity.
    pub eigenvalues: Vec<u64>,
}

/// The deck transformation on `H₁(S_q) ⊗ Z/p` and its eigenvalues.
pub fn deck_action_mod_p(v: &SeifertMatrix, q: u64, p: u64) -> Result<DeckAction, CoverError> {
    check_prime(p, q)?;
    let pres = gamma_presentation(v, q)?;
    let h = pres.homology();
    let order = h.order.clone().ok_or(CoverError::InfiniteHomology { q })?;
    if !order.is_multiple_of(&BigInt::from(p)) {
        return Err(CoverError::PDoesNotDivide { p, order });
    }
    let matrix = pres.deck_mod_p(p)?;
    let eigenvalues = eigenvalues_mod_p(&matrix, p);
    Ok(DeckAction { p, matrix, eigenvalues })
}

pub(crate) fn check_prime(p: u64, q: u64) -> Result<(), CoverError> {
    if p < 3 || !is_prime_u64(p) {
        return Err(CoverError::NotOddPrime(p));
    }
    if p == q {
        return Err(CoverError::PEqualsQ { p });
    }
    Ok(())
}

/// Roots in `Z/p` of `det(λI − A)`, with multiplicity, sorted.
pub fn eigenvalues_mod_p(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let rows: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cp = crate::algebra::berkowitz(&crate::algebra::matrix::Integers, &rows);
    // highest degree first
    let poly: Vec<u64> = cp
        .iter()
        .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
        .collect();
    let mut current = poly;
    let mut roots = Vec::new();
    for lam in 0..p {
        while current.len() > 1 && eval_mod(&current, lam, p) == 0 {
            roots.push(lam);
            current = deflate(&current, lam, p);
        }
        if roots.len() == n {
            break;
        }
    }
    roots
}

fn eval_mod(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().fold(0u128, |acc, &k| (acc * x as u128 + k as u128) % p as u128) as u64
}

/// Divide by `(λ − r)` (synthetic division, highest degree first).
fn deflate(c: &[u64], r: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(c.len() - 1);
    let mut acc = 0u128;
    for &k in &c[..c.len() - 1] {
        acc = (acc * r as u128 + k as u128) % p as u128;
        out.push(acc as u64);
    }
    out
}
