mod common;

use common::random_seifert;
use knotsig::covers::{
    block_presentation, gamma, gamma_presentation, linking_form, linking_presentation, order_from_resultant,
};
use knotsig::IntMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn presentations_agree_and_match_the_resultant() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let g = rng.gen_range(1..=2);
        let v = random_seifert(&mut rng, g, 3);
        for q in 2..=5u64 {
            let gp = gamma_presentation(&v, q).unwrap();
            let h = gp.homology();
            assert_eq!(block_presentation(&v, q).unwrap().presentation.homology(), h);
            assert_eq!(linking_presentation(&v, q).unwrap().homology(), h);
            let res = order_from_resultant(&v, q).unwrap();
            match &h.order {
                Some(order) => assert_eq!(order, &res),
                None => assert!(res.is_zero()),
            }
            if h.order.is_some() {
                // t − 1 is invertible on H, so for prime q the action on a
                // nontrivial group has order exactly q; for composite q it
                // can factor through a smaller cover
                let order = gp.deck_order().unwrap();
                assert_eq!(q % order, 0);
                if h.invariant_factors.is_empty() {
                    assert_eq!(order, 1);
                } else if knotsig::algebra::arith::is_prime_u64(q) {
                    assert_eq!(order, q);
                }
                let gm = gamma(&v).unwrap();
                let shifted = gm.sub(&IntMatrix::identity(2 * g));
                let f = gm.pow(q as u32).sub(&shifted.pow(q as u32));
                assert!(gp.annihilates(&IntMatrix::identity(q as usize).kronecker(&f)).unwrap());
            }
        }
    }
}

#[test]
fn linking_form_is_symmetric_and_nonsingular() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    while checked < 40 {
        let v = random_seifert(&mut rng, 1, 3);
        let q = rng.gen_range(2..=4);
        let Ok(form) = linking_form(&v, q) else {
            continue;
        };
        let n = form.orders.len();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(form.values[i][j], form.values[j][i]);
                // λ(z_i, z_j)·|z_i| ∈ Z
                let scaled = &form.values[i][j] * num_rational::BigRational::from_integer(form.orders[i].clone());
                assert!(scaled.is_integer());
            }
        }
        // nonsingular: the determinant of the form scaled to integers is a
        // unit modulo each order (checked on the cyclic case)
        if n == 1 {
            let o = &form.orders[0];
            let x = (&form.values[0][0] * num_rational::BigRational::from_integer(o.clone())).to_integer();
            assert_eq!(num_integer::Integer::gcd(&x, o), BigInt::from(1));
        }
        checked += 1;
    }
}
