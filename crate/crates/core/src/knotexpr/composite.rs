//! Evaluation of expressions by flattening into scaled leaves.
//!
//! Every construction in the grammar has a signature function of the form
//! `x ↦ Σ ±σ_V(n·x mod 1)` for Seifert matrices `V` and positive integers
//! `n`: cables and satellites contribute their companion rescaled by the
//! winding number, the pattern torus knot (or pattern) at scale one, and a
//! Whitehead double is a genus-one leaf because its winding number is zero.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{torus_seifert, twist_seifert, KnotExpr, KnotExprError};
use crate::algebra::LaurentPoly;
use crate::seifert::angle::sort_angles;
use crate::seifert::{check_unit_interval, Angle, SeifertError, SeifertMatrix, SignatureFunction, SignatureValue};

struct Leaf {
    matrix: SeifertMatrix,
    function: OnceLock<Result<SignatureFunction, SeifertError>>,
}

impl Leaf {
    fn function(&self) -> Result<&SignatureFunction, SeifertError> {
        self.function
            .get_or_init(|| self.matrix.signature_function())
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// `sign · σ_V(scale · x mod 1)`
#[derive(Clone)]
pub struct Term {
    pub sign: i64,
    pub scale: u64,
    leaf: Arc<Leaf>,
}

impl Term {
    pub fn matrix(&self) -> &SeifertMatrix {
        &self.leaf.matrix
    }
}

impl std::fmt::Debug for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Term")
            .field("sign", &self.sign)
            .field("scale", &self.scale)
            .field("matrix", &self.leaf.matrix.to_string())
            .finish()
    }
}

/// A flattened expression. Leaf signature functions are computed once and
/// shared, so repeated evaluation is cheap.
#[derive(Debug)]
pub struct CompositeKnot {
    terms: Vec<Term>,
    function: OnceLock<Result<SignatureFunction, SeifertError>>,
}

impl CompositeKnot {
    pub(super) fn new(e: &KnotExpr) -> Result<Self, KnotExprError> {
        let mut terms = Vec::new();
        let mut cache = HashMap::new();
        flatten(e, 1, 1, &mut terms, &mut cache)?;
        Ok(CompositeKnot {
            terms,
            function: OnceLock::new(),
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Product of `Δ_V(t^scale)` over the terms.
    pub fn alexander(&self) -> LaurentPoly {
        self.terms.iter().fold(LaurentPoly::one(), |acc, t| {
            &acc * &t.leaf.matrix.alexander().substitute_power(t.scale as i64)
        })
    }

    /// Twice the averaged signature at `x`.
    pub fn doubled_at(&self, x: &BigRational) -> Result<i64, KnotExprError> {
        Ok(self.doubled_raw(x)?)
    }

    fn doubled_raw(&self, x: &BigRational) -> Result<i64, SeifertError> {
        check_unit_interval(x)?;
        let mut total = 0;
        for t in &self.terms {
            let y = scaled(x, t.scale);
            if !y.is_zero() {
                total += t.sign * t.leaf.function()?.doubled_at(&y);
            }
        }
        Ok(total)
    }

    /// Averaged signature at `x` with the nullity summed over the leaves.
    pub fn signature_at(&self, x: &BigRational) -> Result<SignatureValue, KnotExprError> {
        check_unit_interval(x)?;
        if x.is_zero() || x.is_one() {
            let nullity = self.terms.iter().map(|t| t.leaf.matrix.dim()).sum();
            return Ok(SignatureValue::new(x.clone(), 0, nullity));
        }
        let (mut doubled, mut nullity) = (0, 0);
        for t in &self.terms {
            let y = scaled(x, t.scale);
            if y.is_zero() {
                continue;
            }
            let v = t.leaf.function()?.leaf_value(&t.leaf.matrix, &y)?;
            doubled += t.sign * v.doubled;
            nullity += v.nullity;
        }
        Ok(SignatureValue::new(x.clone(), doubled, nullity))
    }

    /// The signature function, with jumps of zero height removed.
    pub fn signature_function(&self) -> Result<SignatureFunction, KnotExprError> {
        let f = self.function.get_or_init(|| self.compute_function());
        f.clone().map_err(KnotExprError::from)
    }

    fn compute_function(&self) -> Result<SignatureFunction, SeifertError> {
        let mut jumps: Vec<Angle> = Vec::new();
        for t in &self.terms {
            for j in t.leaf.function()?.jumps() {
                for k in 0..t.scale {
                    jumps.push(j.preimage(k as i64, t.scale));
                }
            }
        }
        sort_angles(&mut jumps, |a| a)?;
        let mut distinct: Vec<Angle> = Vec::with_capacity(jumps.len());
        for j in jumps {
            match distinct.last() {
                Some(prev) if prev.try_cmp(&j)?.is_eq() => {}
                _ => distinct.push(j),
            }
        }
        let skeleton = SignatureFunction::from_parts(distinct.clone(), vec![0; distinct.len() + 1]);
        let mut plateaus = Vec::with_capacity(distinct.len() + 1);
        for x in skeleton.plateau_samples() {
            let d = self.doubled_raw(&x)?;
            debug_assert_eq!(d % 2, 0);
            plateaus.push(d / 2);
        }
        Ok(SignatureFunction::from_parts(distinct, plateaus).simplified())
    }
}

/// `n·x mod 1`
fn scaled(x: &BigRational, n: u64) -> BigRational {
    let y = x * BigRational::from_integer(BigInt::from(n));
    &y - y.floor()
}

fn flatten(
    e: &KnotExpr,
    sign: i64,
    scale: u64,
    out: &mut Vec<Term>,
    cache: &mut HashMap<SeifertMatrix, Arc<Leaf>>,
) -> Result<(), KnotExprError> {
    let mut push = |v: SeifertMatrix, out: &mut Vec<Term>| {
        if v.dim() == 0 {
            return;
        }
        let leaf = cache
            .entry(v.clone())
            .or_insert_with(|| {
                Arc::new(Leaf {
                    matrix: v,
                    function: OnceLock::new(),
                })
            })
            .clone();
        out.push(Term { sign, scale, leaf });
    };
    match e {
        KnotExpr::Unknot => {}
        KnotExpr::Seifert(v) => push(v.clone(), out),
        KnotExpr::Torus(p, q) => push(torus_seifert(*p, *q)?, out),
        KnotExpr::Whitehead(_, n) => push(twist_seifert(*n), out),
        KnotExpr::Mirror(a) => flatten(a, -sign, scale, out, cache)?,
        KnotExpr::Sum(a, b) => {
            flatten(a, sign, scale, out, cache)?;
            flatten(b, sign, scale, out, cache)?;
        }
        KnotExpr::Cable(r, s, c) => {
            // (−r, −s) is the same cable with the string reversed
            let (r, s) = if *r < 0 { (-r, -s) } else { (*r, *s) };
            push(torus_seifert(r, s)?, out);
            flatten(c, sign, scale * r as u64, out, cache)?;
        }
        KnotExpr::Satellite(p, c, n) => {
            flatten(p, sign, scale, out, cache)?;
            if *n != 0 {
                // σ_C(−n·x) = σ_C(n·x) by symmetry
                flatten(c, sign, scale * n.unsigned_abs(), out, cache)?;
            }
        }
    }
    Ok(())
}
