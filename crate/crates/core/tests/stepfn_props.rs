mod common;

use common::{rat, sigma_p_by_count};
use knotsig::stepfn::f_p;
use knotsig::{KnotExpr, StepFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

/// `0 < n/d < 1/2`
fn basis_parameter() -> impl Strategy<Value = BigRational> {
    (3i64..60).prop_flat_map(|d| (1..(d + 1) / 2, Just(d))).prop_filter_map("a < 1/2", |(n, d)| {
        let a = rat(n, d);
        (a < rat(1, 2)).then_some(a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn eq_one_identity(a in basis_parameter(), p in 2i64..=50) {
        let s = StepFunction::basis_s(&a).unwrap();
        let integral = BigRational::one() - &a - &a;
        prop_assert_eq!(&s.integral(), &integral);
        let count = sigma_p_by_count(&a, p);
        prop_assert_eq!(&s.sigma_p(p as u64), &count);
        let p_rat = BigRational::from_integer(BigInt::from(p));
        prop_assert_eq!(count - p_rat * integral, f_p(p, &a));
    }

    #[test]
    fn eq_three_periodicity(n in 1i64..40, d in 3i64..40, p in 1i64..80, k in -3i64..4) {
        let a = rat(n, d);
        prop_assert_eq!(f_p(p, &a), f_p(p + k * d, &a));
        prop_assert_eq!(f_p(p, &a), -f_p(-p + k * d, &a));
    }

    #[test]
    fn decompose_round_trip(
        raw in prop::collection::btree_map((1i64..48).prop_map(|n| rat(n, 97)), (-4i64..=4).prop_filter("nonzero", |c| *c != 0), 0..=10)
    ) {
        let terms: Vec<(i64, BigRational)> = raw.into_iter().map(|(a, c)| (c, a)).collect();
        let f = StepFunction::reconstruct(&terms).unwrap();
        prop_assert!(f.is_symmetric());
        prop_assert_eq!(f.decompose().unwrap(), terms);
    }

    #[test]
    fn sums_are_linear(a in basis_parameter(), b in basis_parameter(), c in -3i64..=3, p in 2u64..40) {
        let sa = StepFunction::basis_s(&a).unwrap();
        let sb = StepFunction::basis_s(&b).unwrap();
        let f = sa.scale(c).add(&sb);
        let c_rat = BigRational::from_integer(BigInt::from(c));
        prop_assert_eq!(f.sigma_p(p), &c_rat * sa.sigma_p(p) + sb.sigma_p(p));
        prop_assert_eq!(f.integral(), &c_rat * sa.integral() + sb.integral());
    }
}

#[test]
fn signature_functions_are_symmetric_step_functions() {
    let knots = [
        "torus(2,3)",
        "torus(3,4)",
        "cable(2,-3,torus(2,3))",
        "sum(cable(2,1,torus(2,5)),mirror(torus(3,5)))",
        "cable(3,2,torus(2,3))",
    ];
    for text in knots {
        let k = KnotExpr::parse(text).unwrap().composite().unwrap();
        let f = StepFunction::from_signature(&k.signature_function().unwrap()).unwrap();
        assert!(f.is_symmetric(), "{text}");
        let terms = f.decompose().unwrap();
        assert_eq!(StepFunction::reconstruct(&terms).unwrap(), f);
        for p in 2u64..40 {
            let direct: i64 = (1..p).map(|j| k.doubled_at(&rat(j as i64, p as i64)).unwrap()).sum();
            assert_eq!(f.sigma_p(p), BigRational::new(direct.into(), 2.into()), "{text}, p = {p}");
            // the same sum through Eq. (1) applied to each basis function
            let via_defect: BigRational = terms
                .iter()
                .map(|(c, a)| BigRational::from_integer((*c).into()) * f_p(p as i64, a))
                .sum::<BigRational>()
                + BigRational::from_integer(BigInt::from(p)) * f.integral();
            assert_eq!(f.sigma_p(p), via_defect);
        }
    }
}

#[test]
fn irrational_jumps_are_rejected() {
    let k = KnotExpr::parse("seifert([[1,1],[0,2]])").unwrap().composite().unwrap();
    assert!(StepFunction::from_signature(&k.signature_function().unwrap()).is_err());
}
