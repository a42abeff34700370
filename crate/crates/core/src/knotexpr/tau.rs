//! τ and genus by composition rules.
//!
//! The rules used are additivity under connected sum, negation under
//! mirroring, `τ(T(p,q)) = (p−1)(q−1)/2` for positive torus knots, the
//! doubling rule `τ(Wh(J, t)) = 1` for `t < 2τ(J)`, and the cabling rule
//! `τ(J_(s, sn+1)) = sτ(J) + sn(s−1)/2 + s − 1` when `τ(J) = genus(J)`.

use serde::Serialize;

use super::KnotExpr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauResult {
    pub value: Option<i64>,
    pub genus: Option<u64>,
    /// One line per rule application, innermost first.
    pub trace: Vec<String>,
}

pub(super) fn tau(e: &KnotExpr) -> TauResult {
    let mut trace = Vec::new();
    let (value, genus) = walk(e, &mut trace);
    TauResult { value, genus, trace }
}

fn torus_genus(p: i64, q: i64) -> u64 {
    (p.unsigned_abs() - 1) * (q.unsigned_abs() - 1) / 2
}

fn walk(e: &KnotExpr, trace: &mut Vec<String>) -> (Option<i64>, Option<u64>) {
    match e {
        KnotExpr::Unknot => (Some(0), Some(0)),
        KnotExpr::Seifert(v) => {
            // the genus is pinned when the Alexander polynomial has full span
            let g = v.genus() as u64;
            let genus = (v.alexander().span() as u64 == 2 * g).then_some(g);
            trace.push(format!("seifert leaf: tau unknown, genus {}", show(genus)));
            (None, genus)
        }
        KnotExpr::Torus(p, q) => {
            let g = torus_genus(*p, *q) as i64;
            let t = if (*p < 0) != (*q < 0) { -g } else { g };
            trace.push(format!("tau(torus({p},{q})) = {t}"));
            (Some(t), Some(g as u64))
        }
        KnotExpr::Mirror(a) => {
            let (t, g) = walk(a, trace);
            let t = t.map(|t| -t);
            trace.push(format!("mirror: tau = {}", show(t)));
            (t, g)
        }
        KnotExpr::Sum(a, b) => {
            let (ta, ga) = walk(a, trace);
            let (tb, gb) = walk(b, trace);
            let t = ta.zip(tb).map(|(x, y)| x + y);
            let g = ga.zip(gb).map(|(x, y)| x + y);
            trace.push(format!("sum: tau = {}, genus = {}", show(t), show(g)));
            (t, g)
        }
        KnotExpr::Whitehead(a, n) => {
            let (ta, ga) = walk(a, trace);
            let t = match ta {
                Some(ta) if *n < 2 * ta => {
                    trace.push(format!("wh(J,{n}): {n} < 2 tau(J) = {}, so tau = 1", 2 * ta));
                    Some(1)
                }
                Some(ta) => {
                    trace.push(format!("wh(J,{n}): needs {n} < 2 tau(J) = {}; not derivable", 2 * ta));
                    None
                }
                None => {
                    trace.push(format!("wh(J,{n}): tau(J) unknown; not derivable"));
                    None
                }
            };
            let g = match (n, ga) {
                (0, Some(0)) => Some(0),
                (0, None) => None,
                _ => Some(1),
            };
            (t, g)
        }
        KnotExpr::Cable(r, s, a) => {
            let (r, s) = if *r < 0 { (-r, -s) } else { (*r, *s) };
            let (ta, ga) = walk(a, trace);
            if r == 1 {
                trace.push("cable(1,s,J) = J".into());
                return (ta, ga);
            }
            // Schubert's genus formula for cables
            let g = ga.map(|g| r as u64 * g + torus_genus(r, s));
            (cable_tau(r, s, ta, ga, trace), g)
        }
        KnotExpr::Satellite(..) => {
            trace.push("satellite: no rule".into());
            (None, None)
        }
    }
}

fn cable_tau(r: i64, s: i64, ta: Option<i64>, ga: Option<u64>, trace: &mut Vec<String>) -> Option<i64> {
    let (Some(t), Some(g)) = (ta, ga) else {
        trace.push(format!("cable({r},{s},J): tau(J) or genus(J) unknown; not derivable"));
        return None;
    };
    let formula = |t: i64, s: i64| {
        let n = (s - 1) / r;
        r * t + r * n * (r - 1) / 2 + r - 1
    };
    if (s - 1).rem_euclid(r) != 0 && (-s - 1).rem_euclid(r) != 0 {
        trace.push(format!("cable({r},{s},J): {s} is not ±1 mod {r}; not derivable"));
        return None;
    }
    if t == g as i64 && (s - 1).rem_euclid(r) == 0 {
        let v = formula(t, s);
        trace.push(format!(
            "cable({r},{s},J): tau(J) = genus(J) = {g}, n = {}, so tau = {v}",
            (s - 1) / r
        ));
        return Some(v);
    }
    if t == -(g as i64) && (-s - 1).rem_euclid(r) == 0 {
        // J_(r,s) is the mirror of (−J)_(r,−s)
        let v = -formula(-t, -s);
        trace.push(format!(
            "cable({r},{s},J): tau(-J) = genus(J) = {g}, via the mirror, so tau = {v}"
        ));
        return Some(v);
    }
    trace.push(format!(
        "cable({r},{s},J): needs tau(J) = genus(J) (tau = {t}, genus = {g}); not derivable"
    ));
    None
}

fn show<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "unknown".into(), |x| x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TauResult {
        KnotExpr::parse(s).unwrap().tau()
    }

    #[test]
    fn chain_of_rules() {
        assert_eq!(t("torus(2,3)").value, Some(1));
        assert_eq!(t("wh(torus(2,3),0)").value, Some(1));
        let j = t("cable(2,-3,sum(torus(2,3),wh(torus(2,3),0)))");
        assert_eq!(j.value, Some(3));
        assert_eq!(t("wh(cable(2,-3,sum(torus(2,3),wh(torus(2,3),0))),2)").value, Some(1));
        assert_eq!(t("cable(2,-3,torus(2,3))").value, Some(1));
        assert_eq!(
            t("wh(sum(cable(2,-3,torus(2,3)),cable(2,-3,torus(2,3))),2)").value,
            Some(1)
        );
    }

    #[test]
    fn failed_preconditions_leave_tau_unknown() {
        let r = t("wh(torus(2,3),2)");
        assert_eq!(r.value, None);
        assert!(r.trace.last().unwrap().contains("not derivable"));
        assert_eq!(t("cable(2,1,wh(torus(2,3),2))").value, None);
        assert_eq!(t("cable(2,1,wh(torus(2,3),0))").value, Some(3));
        assert_eq!(t("seifert([[1,1],[0,2]])").value, None);
    }

    #[test]
    fn genus_rules() {
        assert_eq!(t("sum(torus(2,3),wh(torus(2,3),0))").genus, Some(2));
        assert_eq!(t("cable(2,-3,torus(2,3))").genus, Some(3));
        assert_eq!(t("torus(3,-5)").genus, Some(4));
        assert_eq!(t("seifert([[1,1],[0,2]])").genus, Some(1));
    }

    #[test]
    fn mirror_cancels() {
        let r = t("sum(cable(2,3,torus(2,3)),mirror(cable(2,3,torus(2,3))))");
        assert_eq!(r.value, Some(0));
    }
}
