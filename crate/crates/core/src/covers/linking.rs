//! The linking form of `S_q`, read off the intersection form of the
//! branched cover of `B⁴` along a pushed-in Seifert surface.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::{check_prime, check_q, CoverError, CoverPresentation};
use crate::algebra::{smith_normal_form, IntMatrix, RatMatrix, SmithForm};
use crate::seifert::SeifertMatrix;

/// Presentation by the `2g(q−1)` square intersection matrix `G`: block
/// tridiagonal with `V + Vᵗ` on the diagonal, `−V` above and `−Vᵗ` below.
/// The deck transformation on `H₂` is `T = K ⊗ I` for the companion matrix
/// `K` of `1 + t + … + t^{q−1}`; it preserves `G`, and acts on `coker G` by
/// `T^{−ᵗ}`.
pub fn linking_presentation(v: &SeifertMatrix, q: u64) -> Result<CoverPresentation, CoverError> {
    let qn = check_q(q)?;
    let (g, t) = intersection_form(v, qn);
    let deck = if g.rows() == 0 {
        g.clone()
    } else {
        t.transpose()
            .to_rat()
            .inverse()?
            .to_integer()
            .expect("T is unimodular")
    };
    Ok(CoverPresentation { q, matrix: g, deck })
}

/// `(G, T)`.
pub fn intersection_form(v: &SeifertMatrix, q: usize) -> (IntMatrix, IntMatrix) {
    let m = v.matrix();
    let n = m.rows();
    let k = q - 1;
    let sym = m.add(&m.transpose());
    let mut g = IntMatrix::zeros(n * k, n * k);
    for i in 0..k {
        g.paste(i * n, i * n, &sym);
        if i + 1 < k {
            g.paste(i * n, (i + 1) * n, &m.neg());
            g.paste((i + 1) * n, i * n, &m.transpose().neg());
        }
    }
    let mut comp = IntMatrix::zeros(k, k);
    for i in 0..k {
        if i + 1 < k {
            comp.set(i + 1, i, BigInt::one());
        }
        comp.set(i, k - 1, -BigInt::one());
    }
    (g, comp.kronecker(&IntMatrix::identity(n)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingForm {
    /// Orders of the Smith generators `z_k`.
    #[serde(serialize_with = "ser_bigints")]
    pub orders: Vec<BigInt>,
    /// `λ(z_k, z_l) ∈ Q/Z`, reduced into `[0, 1)`.
    #[serde(serialize_with = "ser_rat_rows")]
    pub values: Vec<Vec<BigRational>>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_rat_rows<S: serde::Serializer>(v: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| {
        r.iter()
            .map(crate::algebra::fmt_rational)
            .collect::<Vec<_>>()
    }))
}

fn frac(x: &BigRational) -> BigRational {
    x - BigRational::from_integer(x.floor().to_integer())
}

struct Coker {
    snf: SmithForm,
    u_inv: IntMatrix,
    g_inv: RatMatrix,
}

impl Coker {
    fn new(g: &IntMatrix) -> Result<Self, CoverError> {
        let snf = smith_normal_form(g);
        let u_inv = snf
            .u
            .to_rat()
            .inverse()?
            .to_integer()
            .expect("U is unimodular");
        let g_inv = g.to_rat().inverse()?;
        Ok(Coker { snf, u_inv, g_inv })
    }

    /// Column `k` of `U⁻¹`, scaled.
    fn generator(&self, k: usize, scale: &BigInt) -> Vec<BigInt> {
        (0..self.u_inv.rows())
            .map(|i| self.u_inv.get(i, k) * scale)
            .collect()
    }

    /// `λ(x, y) = −xᵗ G⁻¹ y mod 1`.
    fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let yr: Vec<BigRational> = y.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let gy = self.g_inv.mul_vec(&yr);
        let s: BigRational = x
            .iter()
            .zip(&gy)
            .map(|(a, b)| b * BigRational::from_integer(a.clone()))
            .sum();
        frac(&-s)
    }
}

pub fn linking_form(v: &SeifertMatrix, q: u64) -> Result<LinkingForm, CoverError> {
    let pres = linking_presentation(v, q)?;
    let coker = Coker::new(&pres.matrix)?;
    let d = &coker.snf.diagonal;
    if d.iter().any(Zero::is_zero) {
        return Err(CoverError::InfiniteHomology { q });
    }
    let keep: Vec<usize> = (0..d.len()).filter(|&k| !d[k].is_one()).collect();
    let gens: Vec<Vec<BigInt>> = keep.iter().map(|&k| coker.generator(k, &BigInt::one())).collect();
    let values = gens
        .iter()
        .map(|x| gens.iter().map(|y| coker.pair(x, y)).collect())
        .collect();
    Ok(LinkingForm {
        orders: keep.iter().map(|&k| d[k].clone()).collect(),
        values,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    /// Coordinates in the basis of `H[p]` fixed by the Smith form.
    pub direction: [u64; 2],
    /// `λ(v, v) = 0`, i.e. the line is a metabolizer.
    pub isotropic: bool,
    /// Eigenvalue of the deck transformation when the line is invariant.
    pub eigenvalue: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetabolizerReport {
    pub q: u64,
    pub p: u64,
    /// Deck transformation on `H[p] ≅ (Z/p)²`.
    pub deck: [[u64; 2]; 2],
    /// `p·λ` on `H[p]`, mod `p`.
    pub form: [[u64; 2]; 2],
    pub lines: Vec<Line>,
    pub metabolizer_count: usize,
    pub invariant_count: usize,
    /// Every invariant line is a metabolizer and vice versa.
    pub metabolizers_are_eigenspaces: bool,
}

/// Enumerate the `p + 1` lines of `H₁(S_q)[p]` when that group is `(Z/p)²`,
/// marking the self-annihilating ones and the deck-invariant ones.
pub fn metabolizers(v: &SeifertMatrix, q: u64, p: u64) -> Result<MetabolizerReport, CoverError> {
    check_prime(p, q)?;
    let pres = linking_presentation(v, q)?;
    let coker = Coker::new(&pres.matrix)?;
    let d = &coker.snf.diagonal;
    if d.iter().any(Zero::is_zero) {
        return Err(CoverError::InfiniteHomology { q });
    }
    let pb = BigInt::from(p);
    let keep: Vec<usize> = (0..d.len()).filter(|&k| d[k].is_multiple_of(&pb)).collect();
    if keep.is_empty() {
        return Err(CoverError::PDoesNotDivide {
            p,
            order: d.iter().product(),
        });
    }
    let p2 = &pb * &pb;
    if keep.len() != 2 || keep.iter().any(|&k| d[k].is_multiple_of(&p2)) {
        return Err(CoverError::NotElementaryRankTwo {
            p,
            factors: keep.iter().map(|&k| d[k].to_string()).collect(),
        });
    }
    let u: Vec<Vec<BigInt>> = keep.iter().map(|&k| coker.generator(k, &(&d[k] / &pb))).collect();
    let mut form = [[0u64; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            let val = coker.pair(&u[a], &u[b]) * BigRational::from_integer(pb.clone());
            debug_assert!(val.is_integer());
            form[a][b] = val.to_integer().mod_floor(&pb).to_u64().unwrap();
        }
    }
    // image of u_a under the deck, in Smith coordinates y = U·z
    let mut deck = [[0u64; 2]; 2];
    for a in 0..2 {
        let image = coker.snf.u.mul_vec(&pres.deck.mul_vec(&u[a]));
        for (b, &k) in keep.iter().enumerate() {
            let step = &d[k] / &pb;
            let c = image[k].mod_floor(&d[k]);
            debug_assert!(c.is_multiple_of(&step));
            deck[b][a] = (c / step).mod_floor(&pb).to_u64().unwrap();
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let addmod = |a: u64, b: u64| ((a as u128 + b as u128) % p as u128) as u64;
    let mut directions = vec![[1u64, 0]];
    directions.extend((0..p).map(|i| [i, 1]));
    let lines: Vec<Line> = directions
        .into_iter()
        .map(|[x, y]| {
            let q = addmod(
                addmod(mulmod(mulmod(x, x), form[0][0]), mulmod(mulmod(2, mulmod(x, y)), form[0][1])),
                mulmod(mulmod(y, y), form[1][1]),
            );
            let ix = addmod(mulmod(deck[0][0], x), mulmod(deck[0][1], y));
            let iy = addmod(mulmod(deck[1][0], x), mulmod(deck[1][1], y));
            // (ix, iy) ∥ (x, y)
            let invariant = mulmod(ix, y) == mulmod(iy, x);
            let eigenvalue = invariant.then(|| if x != 0 { mulmod(ix, inv_mod(x, p)) } else { iy });
            Line {
                direction: [x, y],
                isotropic: q == 0,
                eigenvalue,
            }
        })
        .collect();
    let metabolizer_count = lines.iter().filter(|l| l.isotropic).count();
    let invariant_count = lines.iter().filter(|l| l.eigenvalue.is_some()).count();
    let metabolizers_are_eigenspaces = lines.iter().all(|l| l.isotropic == l.eigenvalue.is_some());
    Ok(MetabolizerReport {
        q,
        p,
        deck,
        form,
        lines,
        metabolizer_count,
        invariant_count,
        metabolizers_are_eigenspaces,
    })
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::algebra::arith::mod_pow(a, p - 2, p)
}
