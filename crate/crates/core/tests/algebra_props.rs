mod common;

use knotsig::algebra::{isolate_roots, smith_normal_form, IntMatrix, IntPoly, RootInterval, SturmChain};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-5i64..=5, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn bareiss_matches_cofactor(rows in square(4)) {
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(m.determinant().unwrap(), BigInt::from(common::cofactor_i64(&rows)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_properties(rows in square(5)) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert!(snf.u.determinant().unwrap().abs().is_one());
        prop_assert!(snf.w.determinant().unwrap().abs().is_one());
        let d = snf.u.mul(&m).mul(&snf.w);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j { snf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &expect);
            }
        }
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        let det = m.determinant().unwrap();
        if !det.is_zero() {
            let prod: BigInt = snf.diagonal.iter().product();
            prop_assert_eq!(prod, det.abs());
        }
    }

    #[test]
    fn sturm_counts_match_isolation(coeffs in prop::collection::vec(-6i64..=6, 2..7)) {
        let p = IntPoly::from_i64s(&coeffs);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let lo = BigRational::from_integer(BigInt::from(-20));
        let hi = BigRational::from_integer(BigInt::from(20));
        let chain = SturmChain::new(&p).unwrap();
        prop_assume!(chain.sign_at(&lo) != 0 && chain.sign_at(&hi) != 0);
        let roots = isolate_roots(&p, &lo, &hi).unwrap();
        prop_assert_eq!(roots.len(), chain.variations(&lo) - chain.variations(&hi));
        // each open interval brackets a sign change of the squarefree part
        for r in &roots {
            if let RootInterval::Open(a, b) = r {
                prop_assert_eq!(chain.sign_at(a) * chain.sign_at(b), -1);
            }
        }
    }
}
