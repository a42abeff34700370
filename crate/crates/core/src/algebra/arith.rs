//! Elementary number theory on machine and big integers.

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m <= 0 {
        return None;
    }
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as i64)
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `m`; `None` when `a` is not a unit.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd_u64(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % m as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i32 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let f = factor_u64(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Prime factorization by trial division; adequate for the sizes used here.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime_u64(k)).collect()
}

/// Miller–Rabin on big integers with fixed bases (probabilistic above 2^64,
/// exact below).
pub fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard–Brent rho. Returns a nontrivial factor of composite `n`, or `None`
/// if the iteration budget is exhausted.
fn pollard_brent(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let one = BigInt::one();
    for c in 1u32..20 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut spent = 0u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
                spent += m;
            }
            r *= 2;
            if spent > budget {
                break;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != one && g != *n {
            return Some(g);
        }
        if spent > budget {
            return None;
        }
    }
    None
}

/// Full factorization of a positive big integer. Fails (returns `None`) only
/// when Pollard rho exhausts its budget on a composite cofactor.
pub fn factor_bigint(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    assert!(n.sign() == BigSign::Plus, "factor_bigint needs n > 0");
    let mut n = n.clone();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    // strip small primes first
    for p in 2u32..10_000 {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            let mut e = 0;
            while (&n % &bp).is_zero() {
                n /= &bp;
                e += 1;
            }
            out.push((bp, e));
        }
        if n.is_one() {
            break;
        }
    }
    let mut stack = vec![n];
    let mut large: Vec<BigInt> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            large.push(m);
            continue;
        }
        let f = pollard_brent(&m, 5_000_000)?;
        let other = &m / &f;
        stack.push(f);
        stack.push(other);
    }
    large.sort();
    for p in large {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Some(out)
}

/// Floor of `a / b` for big integers with `b > 0`.
pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

pub fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_inverses() {
        assert_eq!(mod_inverse(1, 73), Some(1));
        assert_eq!(mod_inverse(2, 7), Some(4));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(multiplicative_order(2, 73), Some(9));
        assert_eq!(multiplicative_order(2, 5), Some(4));
        assert_eq!(multiplicative_order(2, 6), None);
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(511), vec![(7, 1), (73, 1)]);
        assert_eq!(totient(60), 16);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        let n = BigInt::from(2).pow(67u32) - 1; // 193707721 * 761838257287
        let f = factor_bigint(&n).unwrap();
        assert_eq!(
            f,
            vec![
                (BigInt::from(193707721u64), 1),
                (BigInt::from(761838257287u64), 1)
            ]
        );
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(73));
        assert!(!is_prime_u64(91));
        assert!(is_probable_prime(&(BigInt::from(2).pow(89u32) - 1)));
        assert!(!is_probable_prime(&(BigInt::from(2).pow(88u32) - 1)));
    }
}
