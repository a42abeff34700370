mod common;

use common::{litherland_doubled, random_point, random_seifert, rat};
use knotsig::KnotExpr;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn leaf<R: Rng>(rng: &mut R) -> KnotExpr {
    match rng.gen_range(0..5) {
        0 => KnotExpr::torus(2, [3, 5, -3, 7][rng.gen_range(0..4)]),
        1 => KnotExpr::torus(3, [4, 5, -4][rng.gen_range(0..3)]),
        2 => KnotExpr::Seifert(random_seifert(rng, 1, 3)),
        3 => KnotExpr::Unknot,
        _ => KnotExpr::torus(-2, 3),
    }
}

/// Trees built from leaves, sums, mirrors and Whitehead doubles; all have a
/// Seifert matrix.
fn seifert_tree<R: Rng>(rng: &mut R, depth: u32) -> KnotExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng);
    }
    match rng.gen_range(0..3) {
        0 => KnotExpr::sum(seifert_tree(rng, depth - 1), seifert_tree(rng, depth - 1)),
        1 => KnotExpr::mirror(seifert_tree(rng, depth - 1)),
        _ => KnotExpr::whitehead(seifert_tree(rng, depth - 1), rng.gen_range(-3..=3)),
    }
}

/// Trees that may also contain cables and satellites.
fn any_tree<R: Rng>(rng: &mut R, depth: u32) -> KnotExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng);
    }
    match rng.gen_range(0..5) {
        0 => KnotExpr::sum(any_tree(rng, depth - 1), any_tree(rng, depth - 1)),
        1 => KnotExpr::mirror(any_tree(rng, depth - 1)),
        2 => KnotExpr::whitehead(any_tree(rng, depth - 1), rng.gen_range(-3..=3)),
        3 => {
            let r = rng.gen_range(2..=3);
            let s = [1, -1, 5, -5][rng.gen_range(0..4)];
            KnotExpr::cable(r, s, any_tree(rng, depth - 1))
        }
        _ => KnotExpr::satellite(any_tree(rng, 0), any_tree(rng, depth - 1), rng.gen_range(0..=2)),
    }
}

#[test]
fn composition_matches_seifert_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    while checked < 200 {
        let e = seifert_tree(&mut rng, 3);
        let Some(v) = e.seifert_of() else {
            continue;
        };
        let x = random_point(&mut rng, 36);
        let a = e.signature_at(&x).unwrap();
        let b = v.signature_at(&x).unwrap();
        assert_eq!(a.doubled, b.doubled, "{e} at {x}");
        assert_eq!(a.nullity, b.nullity, "{e} at {x}");
        assert!(e.alexander().unwrap().equals_up_to_unit(&v.alexander()));
        checked += 1;
    }
}

#[test]
fn torus_knots_match_lattice_count() {
    for r in (3..=15).step_by(2) {
        let e = KnotExpr::torus(2, r);
        for j in 0..=60 {
            let x = rat(j, 60);
            let got = e.signature_at(&x).unwrap().doubled;
            assert_eq!(got, litherland_doubled(2, r, &x), "T(2,{r}) at {x}");
        }
    }
    for (p, q) in [(3, 4), (3, 5), (4, 5)] {
        let e = KnotExpr::torus(p, q);
        for j in 0..=60 {
            let x = rat(j, 60);
            assert_eq!(e.signature_at(&x).unwrap().doubled, litherland_doubled(p, q, &x), "T({p},{q}) at {x}");
        }
    }
}

#[test]
fn cables_follow_the_litherland_law_for_torus_companions() {
    // T(2,3)_{(2,s)}: σ(x) = σ_{T(2,3)}(2x) + σ_{T(2,s)}(x)
    for s in [-3i64, -1, 1, 3, 5] {
        let e = KnotExpr::cable(2, s, KnotExpr::torus(2, 3));
        for j in 1..60 {
            let x = rat(j, 60);
            let twice = rat((2 * j) % 60, 60);
            let expect = litherland_doubled(2, 3, &twice) + if s.abs() > 1 {
                s.signum() * litherland_doubled(2, s.abs(), &x)
            } else {
                0
            };
            assert_eq!(e.signature_at(&x).unwrap().doubled, expect, "s = {s}, x = {x}");
        }
    }
}

#[test]
fn sums_add_and_mirrors_negate_on_nested_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..120 {
        let a = any_tree(&mut rng, 2);
        let b = any_tree(&mut rng, 2);
        let x = random_point(&mut rng, 24);
        let sa = a.signature_at(&x).unwrap();
        let sb = b.signature_at(&x).unwrap();
        let sum = KnotExpr::sum(a.clone(), b).signature_at(&x).unwrap();
        assert_eq!(sum.doubled, sa.doubled + sb.doubled);
        assert_eq!(sum.nullity, sa.nullity + sb.nullity);
        let m = KnotExpr::mirror(a.clone()).signature_at(&x).unwrap();
        assert_eq!(m.doubled, -sa.doubled);
        let twice = KnotExpr::mirror(KnotExpr::mirror(a)).signature_at(&x).unwrap();
        assert_eq!(twice.doubled, sa.doubled);
    }
}

#[test]
fn alexander_at_one_is_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..150 {
        let e = any_tree(&mut rng, 3);
        let d = e.alexander().unwrap();
        assert_eq!(d.eval_at_one().to_i64(), Some(1), "{e}");
        assert!(d.is_symmetric());
    }
}

#[test]
fn tau_of_sum_with_mirror_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut derivable = 0;
    for _ in 0..200 {
        let e = any_tree(&mut rng, 3);
        let t = KnotExpr::sum(e.clone(), KnotExpr::mirror(e.clone())).tau();
        if e.tau().value.is_some() {
            assert_eq!(t.value, Some(0), "{e}");
            derivable += 1;
        }
    }
    assert!(derivable > 20);
}

#[test]
fn display_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..200 {
        let e = any_tree(&mut rng, 3);
        let text = e.to_string();
        assert_eq!(KnotExpr::parse(&text).unwrap(), e, "{text}");
    }
}
