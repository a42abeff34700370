mod common;

use common::{cofactor_rat, defect, rat};
use knotsig::dcrit::{class_number_ratio, d_determinant, recover_coefficients, scaled_matrix};
use knotsig::StepFunction;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn bareiss_matches_rational_cofactor_expansion() {
    for d in (3u64..=13).step_by(2) {
        let n = (d as i64 - 1) / 2;
        let rows: Vec<Vec<BigRational>> = (1..=n)
            .map(|i| (1..=n).map(|j| defect(&rat(i * j, d as i64))).collect())
            .collect();
        assert_eq!(d_determinant(d).unwrap(), cofactor_rat(&rows), "d = {d}");
        let scaled = scaled_matrix(d).unwrap();
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expect = x * BigRational::from_integer(BigInt::from(d));
                assert_eq!(BigRational::from_integer(scaled.get(i, j).clone()), expect);
            }
        }
    }
}

#[test]
fn recovery_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for d in [5u64, 7, 9, 15] {
        let n = (d - 1) / 2;
        for _ in 0..25 {
            let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
            let terms: Vec<(i64, BigRational)> = coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| (c, rat(j as i64 + 1, d as i64)))
                .collect();
            let f = StepFunction::reconstruct(&terms).unwrap();
            // one p in each residue class 1, …, (d−1)/2
            let sums: Vec<(i64, BigRational)> = (1..=n)
                .map(|i| {
                    let p = i + d * rng.gen_range(1..5);
                    (p as i64, f.sigma_p(p))
                })
                .collect();
            let got = recover_coefficients(d, &sums, &f.integral()).unwrap();
            let expect: Vec<BigRational> = coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
            assert_eq!(got, expect, "d = {d}");
        }
    }
}

#[test]
fn class_number_ratios() {
    for s in [3u64, 5, 7, 11, 13, 17, 19] {
        assert_eq!(class_number_ratio(s).unwrap(), BigRational::one(), "s = {s}");
    }
    assert_eq!(class_number_ratio(23).unwrap(), BigRational::from_integer(3.into()));
}
