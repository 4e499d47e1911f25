//! Integer factorization for square-free parts of discriminants.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

const TRIAL_LIMIT: u64 = 10_000;

/// Deterministic Miller–Rabin for n < 3.3e24, probabilistic beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigUint::from(2u32), BigUint::from(2u32), one.clone());
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if d != *n {
            return d;
        }
        c += 1u32;
    }
}

/// Prime factorization of n ≥ 1 as (prime, exponent) pairs, sorted.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut m = n.clone();
    let push = |p: BigUint, out: &mut Vec<(BigUint, u32)>| {
        if let Some(e) = out.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            push(bp.clone(), &mut out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let r = m.sqrt();
        if &r * &r == m {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let f = pollard_rho(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    out.sort();
    out
}

/// Writes n = s² · k with k squarefree (sign carried by k); returns (s, k).
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut s = BigUint::one();
    let mut k = BigUint::one();
    for (p, e) in factorize(n.magnitude()) {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            k *= p;
        }
    }
    let sign = if n.sign() == Sign::Minus { Sign::Minus } else { Sign::Plus };
    (BigInt::from(s), BigInt::from_biguint(sign, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_multiply_back() {
        for n in [1u64, 2, 12, 97, 360, 1_000_003 * 999_983, 2u64.pow(40) * 3, 600_851_475_143] {
            let f = factorize(&BigUint::from(n));
            let prod: BigUint = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(prod, BigUint::from(n));
            assert!(f.iter().all(|(p, _)| is_probable_prime(p)));
        }
    }

    #[test]
    fn squarefree_parts() {
        let (s, k) = squarefree_decompose(&BigInt::from(-108));
        assert_eq!((s, k), (BigInt::from(6), BigInt::from(-3)));
        let (s, k) = squarefree_decompose(&BigInt::from(81));
        assert_eq!((s, k), (BigInt::from(9), BigInt::from(1)));
    }
}
