//! Small integer arithmetic: primality, prime powers, valuations, binomials.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// If `q = p^e` with `p` prime and `e >= 1`, returns `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Exponent of the prime `l` in `n` (n > 0).
pub fn valuation(n: &BigUint, l: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let l = BigUint::from(l);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &l).is_zero() {
        n /= &l;
        v += 1;
    }
    v
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `C(t, k) mod p` for a residue `t` and `k < p`, via `t(t-1)...(t-k+1)/k!`.
pub fn binomial_mod(t: u32, k: u32, p: u32) -> u32 {
    use crate::fp::{inv_mod, mul_mod, sub_mod};
    assert!(k < p, "binomial_mod needs k < p");
    let mut num = 1 % p;
    let mut den = 1 % p;
    for i in 0..k {
        num = mul_mod(num, sub_mod(t % p, i % p, p), p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(61), Some((61, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(30), 8);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn binomial_mod_matches_integer() {
        for t in 0..7u32 {
            for k in 0..7u32 {
                let exact = binomial(t as u64, k as u64) % 7;
                assert_eq!(binomial_mod(t, k, 7) as u64, exact, "t={t} k={k}");
            }
        }
    }

    #[test]
    fn valuation_of_factorial() {
        assert_eq!(valuation(&factorial(10), 2), 8);
        assert_eq!(valuation(&factorial(10), 5), 2);
    }
}
