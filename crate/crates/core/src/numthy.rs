//! Exact integer and multiplicative-function arithmetic.
//!
//! Everything here is deterministic: primality is Miller–Rabin over a base
//! set proved sufficient for 64-bit integers, and factorization is trial
//! division up to 10^6 followed by Brent's cycle variant of Pollard rho.

use std::sync::OnceLock;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // This base set decides primality for every n < 2^64.
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn trial_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = 1_000_000usize;
        let mut composite = vec![false; limit + 1];
        let mut out = Vec::with_capacity(78_498);
        for p in 2..=limit {
            if !composite[p] {
                out.push(p as u32);
                let mut j = p * p;
                while j <= limit {
                    composite[j] = true;
                    j += p;
                }
            }
        }
        out
    })
}

fn pollard_brent(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n) && n % 2 == 1);
    // Deterministic parameter sweep; n is odd, composite, with no factor <= 1e6,
    // so a nontrivial factor is always found for 64-bit inputs.
    for c in 1u64.. {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut cycle = 2u64;
        let mut q = 1u64;
        let mut ys = x;
        let mut y = x;
        let mut g = 1u64;
        'outer: while g == 1 {
            x = y;
            for _ in 0..cycle {
                y = f(y);
            }
            let mut k = 0u64;
            while k < cycle && g == 1 {
                ys = y;
                let lim = 128.min(cycle - k);
                for _ in 0..lim {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += lim;
            }
            cycle *= 2;
            if cycle > n {
                break 'outer;
            }
        }
        if g == n {
            g = 1;
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return g;
        }
    }
    unreachable!()
}

/// A positive integer together with its ordered prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
    }

    pub fn moebius(&self) -> i64 {
        if self.factors.iter().any(|&(_, e)| e > 1) {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn radical(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    /// All divisors of `n` in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let len = out.len();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                for i in 0..len {
                    out.push(out[i] * pe);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

/// Exact factorization of any `n >= 1`; `n = 1` yields an empty factor list.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rem = n;
    for &p in trial_primes() {
        let p = p as u64;
        if p * p > rem {
            break;
        }
        if rem % p == 0 {
            let mut e = 0;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rem > 1 {
        let mut stack = vec![rem];
        let mut large: Vec<u64> = Vec::new();
        while let Some(x) = stack.pop() {
            if is_prime(x) {
                large.push(x);
            } else {
                let d = pollard_brent(x);
                stack.push(d);
                stack.push(x / d);
            }
        }
        large.sort_unstable();
        let mut i = 0;
        while i < large.len() {
            let p = large[i];
            let mut e = 0;
            while i < large.len() && large[i] == p {
                e += 1;
                i += 1;
            }
            factors.push((p, e));
        }
    }
    factors.sort_unstable();
    Factorization { n, factors }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).phi()
}

pub fn moebius(n: u64) -> i64 {
    factorize(n).moebius()
}

pub fn divisors(n: u64) -> Vec<u64> {
    factorize(n).divisors()
}

/// Number of primitive characters mod q: sum over d | q of mu(q/d) phi(d).
pub fn primitive_character_count(q: u64) -> u64 {
    let f = factorize(q);
    let mut acc: i64 = 0;
    for d in f.divisors() {
        acc += moebius(q / d) * euler_phi(d) as i64;
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// Smallest-prime-factor sieve with derived phi and mu arrays, for scans
/// that would otherwise factorize the same small integers millions of times.
pub struct MultiplicativeTables {
    pub limit: usize,
    pub spf: Vec<u32>,
    pub phi: Vec<u32>,
    pub mu: Vec<i8>,
}

impl MultiplicativeTables {
    pub fn new(limit: usize) -> Self {
        let mut spf = vec![0u32; limit + 1];
        let mut phi = vec![0u32; limit + 1];
        let mut mu = vec![0i8; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        if limit >= 1 {
            phi[1] = 1;
            mu[1] = 1;
        }
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                phi[i] = (i - 1) as u32;
                mu[i] = -1;
                primes.push(i as u32);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || i * p > limit {
                    break;
                }
                spf[i * p] = p as u32;
                if i % p == 0 {
                    phi[i * p] = phi[i] * p as u32;
                    mu[i * p] = 0;
                } else {
                    phi[i * p] = phi[i] * (p - 1) as u32;
                    mu[i * p] = -mu[i];
                }
            }
        }
        Self {
            limit,
            spf,
            phi,
            mu,
        }
    }

    #[inline]
    pub fn phi_of(&self, n: u64) -> u64 {
        debug_assert!(n as usize <= self.limit);
        self.phi[n as usize] as u64
    }

    #[inline]
    pub fn mu_of(&self, n: u64) -> i64 {
        debug_assert!(n as usize <= self.limit);
        self.mu[n as usize] as i64
    }

    /// Distinct prime factors of n (n <= limit).
    pub fn prime_factors(&self, mut n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1).factors, vec![]);
        assert_eq!(factorize(12).factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97).factors, vec![(97, 1)]);
    }

    #[test]
    fn factorize_large_remultiplies() {
        for n in [
            (1u64 << 40) + 1,
            u64::MAX - 58, // 2^64 - 59 is prime
            600_851_475_143,
            9_223_372_036_854_775_783, // largest i64 prime
            123_456_789_012_345_678,
        ] {
            let f = factorize(n);
            let prod: u64 = f
                .factors
                .iter()
                .map(|&(p, e)| {
                    assert!(is_prime(p), "claimed factor {p} of {n} not prime");
                    p.pow(e)
                })
                .product();
            assert_eq!(prod, n);
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn phi_mu_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(moebius(1), 1);
        assert_eq!(euler_phi(36), 12);
        assert_eq!(moebius(36), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(6), 1);
    }

    #[test]
    fn phi_matches_sieve_for_primes() {
        let t = MultiplicativeTables::new(100_000);
        for p in 2..=100_000u64 {
            if is_prime(p) {
                assert_eq!(t.phi_of(p), p - 1);
            }
        }
    }

    #[test]
    fn divisor_sums() {
        for n in 1..=10_000u64 {
            let divs = divisors(n);
            let phi_sum: u64 = divs.iter().map(|&d| euler_phi(d)).sum();
            assert_eq!(phi_sum, n, "sum of phi over divisors of {n}");
            let mu_sum: i64 = divs.iter().map(|&d| moebius(d)).sum();
            assert_eq!(mu_sum, i64::from(n == 1), "sum of mu over divisors of {n}");
        }
    }

    #[test]
    fn tables_agree_with_direct() {
        let t = MultiplicativeTables::new(5000);
        for n in 1..=5000u64 {
            assert_eq!(t.phi_of(n), euler_phi(n));
            assert_eq!(t.mu_of(n), moebius(n));
        }
    }

    #[test]
    fn sorted_divisors() {
        let d = divisors(360);
        assert_eq!(d.len(), 24);
        assert!(d.windows(2).all(|w| w[0] < w[1]));
    }
}
