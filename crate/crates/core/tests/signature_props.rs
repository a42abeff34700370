mod common;

use common::{arf_brute_force, float_doubled_signature, random_point, random_seifert, rat};
use knotsig::algebra::{arith::is_prime_u64, cyclotomic_polynomial, LaurentPoly};
use knotsig::seifert::{arf_of, m_parameter_of};
use knotsig::SeifertMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn hermitian_signature_matches_float_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut compared = 0;
    let mut drawn = 0;
    while compared < 500 {
        drawn += 1;
        let g = rng.gen_range(1..=2);
        let v = random_seifert(&mut rng, g, 3);
        let x = random_point(&mut rng, 40);
        let value = v.signature_at(&x).unwrap();
        if value.nullity > 0 {
            continue;
        }
        let Some(oracle) = float_doubled_signature(&v, x.to_f64().unwrap()) else {
            continue;
        };
        assert_eq!(value.doubled, oracle, "V = {:?}, x = {x}", v.matrix().to_rows());
        compared += 1;
    }
    assert!(drawn < 2000);
}

#[test]
fn symmetry_and_endpoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..150 {
        let g = rng.gen_range(1..=2);
        let v = random_seifert(&mut rng, g, 3);
        let x = random_point(&mut rng, 30);
        let a = v.signature_at(&x).unwrap();
        let b = v.signature_at(&(BigRational::from_integer(1.into()) - &x)).unwrap();
        assert_eq!(a.doubled, b.doubled);
        assert_eq!(a.nullity, b.nullity);
        let z = v.signature_at(&BigRational::zero()).unwrap();
        assert_eq!(z.doubled, 0);
        assert_eq!(z.nullity, v.dim());
    }
}

#[test]
fn mirror_negates() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let v = random_seifert(&mut rng, 1, 4);
        let x = random_point(&mut rng, 30);
        assert_eq!(v.mirror().signature_at(&x).unwrap().doubled, -v.signature_at(&x).unwrap().doubled);
    }
}

#[test]
fn block_sum_adds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let a = random_seifert(&mut rng, 1, 3);
        let b = random_seifert(&mut rng, 1, 3);
        let x = random_point(&mut rng, 30);
        let s = a.block_sum(&b).signature_at(&x).unwrap();
        let (sa, sb) = (a.signature_at(&x).unwrap(), b.signature_at(&x).unwrap());
        assert_eq!(s.doubled, sa.doubled + sb.doubled);
        assert_eq!(s.nullity, sa.nullity + sb.nullity);
    }
}

#[test]
fn no_jumps_at_prime_denominators() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..80 {
        let g = rng.gen_range(1..=2);
        let v = random_seifert(&mut rng, g, 3);
        let delta = v.alexander();
        for p in (2u64..30).filter(|&p| is_prime_u64(p)) {
            if cyclotomic_polynomial(p).divides(delta.shifted_poly()) {
                continue;
            }
            for j in 1..p as i64 {
                assert_eq!(v.signature_at(&rat(j, p as i64)).unwrap().nullity, 0);
            }
        }
    }
}

#[test]
fn alexander_normalized() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let g = rng.gen_range(1..=3);
        let v = random_seifert(&mut rng, g, 3);
        assert_eq!(v.matrix().sub(&v.matrix().transpose()).determinant().unwrap().abs(), BigInt::from(1));
        let d = v.alexander();
        assert_eq!(d.eval_at_one(), BigInt::from(1));
        assert!(d.is_symmetric());
    }
}

#[test]
fn determinant_of_slice_form_is_square() {
    for m in 0..30i64 {
        // −m(m+1)t⁻¹ + (2m(m+1)+1) − m(m+1)t
        let k = m * (m + 1);
        let d = LaurentPoly::from_terms(&[(-1, -k), (0, 2 * k + 1), (1, -k)]);
        assert_eq!(m_parameter_of(&d), Some(m as u64));
        assert_eq!(d.eval_at_minus_one(), BigInt::from((2 * m + 1).pow(2)));
    }
    let v = SeifertMatrix::from_rows(&[[-1, 1], [0, 6]]).unwrap();
    let m = v.m_parameter().unwrap() as i64;
    assert_eq!(v.alexander().eval_at_minus_one(), BigInt::from((2 * m + 1).pow(2)));
}

#[test]
fn arf_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..150 {
        let g = rng.gen_range(1..=3);
        let v = random_seifert(&mut rng, g, 3);
        assert_eq!(v.arf(), arf_brute_force(&v));
        assert_eq!(arf_of(&v.alexander()), v.arf());
    }
    let trefoil = SeifertMatrix::from_rows(&[[-1, 1], [0, -1]]).unwrap();
    assert_eq!(arf_brute_force(&trefoil), 1);
    let five_two = SeifertMatrix::from_rows(&[[1, 1], [0, 2]]).unwrap();
    assert_eq!(five_two.arf(), 0);
}
