//! Prime sieving, Chebyshev-type sums, twisted prime sums, and direct
//! representation counts for the binary Goldbach and twin problems.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};

pub const MAX_SIEVE: u64 = 1_000_000_000;

/// Primality bitset up to a limit; one bit per odd number.
pub struct PrimeTable {
    limit: u64,
    bits: Vec<u64>,
}

impl PrimeTable {
    /// Segmented, segment-parallel sieve of Eratosthenes.
    pub fn sieve(limit: u64) -> Result<Self> {
        if limit > MAX_SIEVE {
            return Err(Error::InvalidArgument(format!(
                "sieve limit {limit} exceeds {MAX_SIEVE}"
            )));
        }
        let limit = limit.max(2);
        let nbits = (limit as usize + 1) / 2 + 1;
        let root = (limit as f64).sqrt() as u64 + 1;

        // base sieve of odd primes up to sqrt(limit)
        let base_bits = (root as usize + 1) / 2 + 1;
        let mut base = vec![true; base_bits];
        base[0] = false; // 1
        let mut p = 3u64;
        while p * p <= root {
            if base[(p / 2) as usize] {
                let mut j = p * p;
                while j <= root {
                    base[(j / 2) as usize] = false;
                    j += 2 * p;
                }
            }
            p += 2;
        }
        let base_primes: Vec<u64> = (1..base_bits as u64)
            .filter(|&i| base[i as usize] && 2 * i + 1 <= root)
            .map(|i| 2 * i + 1)
            .collect();

        // odd-index segments, processed in parallel
        const SEG_BITS: usize = 1 << 20;
        let mut odd = vec![true; nbits];
        odd[0] = false; // 1 is not prime
        odd.par_chunks_mut(SEG_BITS)
            .enumerate()
            .for_each(|(seg, chunk)| {
                let lo_idx = seg * SEG_BITS; // bit i represents 2i+1
                let lo = 2 * lo_idx as u64 + 1;
                let hi = lo + 2 * (chunk.len() as u64 - 1);
                for &p in &base_primes {
                    let mut start = p * p;
                    if start > hi {
                        break;
                    }
                    if start < lo {
                        let k = (lo + p - 1) / p;
                        let k = if k % 2 == 0 { k + 1 } else { k };
                        start = k * p;
                    }
                    let mut j = start;
                    while j <= hi {
                        chunk[(j / 2) as usize - lo_idx] = false;
                        j += 2 * p;
                    }
                }
            });

        let mut bits = vec![0u64; (nbits + 63) / 64];
        for (i, &b) in odd.iter().enumerate() {
            if b && (2 * i as u64 + 1) <= limit {
                bits[i / 64] |= 1u64 << (i % 64);
            }
        }
        Ok(PrimeTable { limit, bits })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(n <= self.limit);
        if n == 2 {
            return true;
        }
        if n < 2 || n % 2 == 0 {
            return false;
        }
        let i = (n / 2) as usize;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Iterate primes in [lo, hi], ascending.
    pub fn primes_in(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        let hi = hi.min(self.limit);
        let two = (lo <= 2 && hi >= 2).then_some(2u64);
        let start = lo.max(3) | 1;
        two.into_iter()
            .chain((start..=hi).step_by(2).filter(move |&n| self.is_prime(n)))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes_in(2, self.limit)
    }

    pub fn count_primes(&self, x: u64) -> u64 {
        self.primes_in(2, x).count() as u64
    }

    /// theta(x): sum of log p over primes p <= x.
    pub fn theta(&self, x: u64) -> f64 {
        kahan_sum(self.primes_in(2, x).map(|p| (p as f64).ln()))
    }

    /// theta over a half-open window (x1, x].
    pub fn theta_window(&self, x1: f64, x: u64) -> f64 {
        let lo = x1.floor() as u64 + 1;
        kahan_sum(self.primes_in(lo, x).map(|p| (p as f64).ln()))
    }

    /// psi(x) = sum of Lambda(n) for n <= x, prime powers included.
    pub fn psi_lambda(&self, x: u64) -> f64 {
        let mut total = self.theta(x);
        for p in self.primes_in(2, (x as f64).sqrt() as u64 + 1) {
            let lp = (p as f64).ln();
            let mut pk = p.saturating_mul(p);
            while pk <= x && pk != 0 {
                total += lp;
                pk = pk.saturating_mul(p);
            }
        }
        total
    }

    /// psi(x, chi) = sum over primes p <= x of chi(p) log p.
    pub fn psi_chi(&self, x: u64, chi: &DirichletCharacter) -> Complex64 {
        let table = chi.complex_table();
        let q = chi.modulus();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut comp = Complex64::new(0.0, 0.0);
        for p in self.primes_in(2, x) {
            let term = table[(p % q) as usize] * (p as f64).ln();
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        sum
    }

    /// R(m): sum over ordered pairs p + p' = m with p, p' in (x1, x] of
    /// log p log p'; the diagonal p = p' counts once.
    pub fn goldbach_count(&self, m: u64, x1: f64, x: u64) -> f64 {
        let x = x.min(self.limit);
        let lo1 = x1.floor() as u64 + 1;
        let lo = lo1.max(m.saturating_sub(x));
        let hi = x.min(m.saturating_sub(lo1));
        if lo > hi {
            return 0.0;
        }
        kahan_sum(self.primes_in(lo, hi).filter_map(|p| {
            let p2 = m - p;
            self.is_prime(p2)
                .then(|| (p as f64).ln() * (p2 as f64).ln())
        }))
    }

    /// R'(m): sum over ordered pairs p - p' = m with p, p' in (x1, x] of
    /// log p log p'. The difference is signed; R'(-m) = R'(m).
    pub fn twin_count(&self, m: i64, x1: f64, x: u64) -> f64 {
        let m = m.unsigned_abs();
        let x = x.min(self.limit);
        let lo1 = x1.floor() as u64 + 1;
        let lo = lo1 + m; // p = p' + m with p' > x1
        if lo > x {
            return 0.0;
        }
        kahan_sum(self.primes_in(lo, x).filter_map(|p| {
            let p2 = p - m;
            (p2 >= lo1 && self.is_prime(p2))
                .then(|| (p as f64).ln() * (p2 as f64).ln())
        }))
    }

    /// E(X): even m <= X not expressible as p + p' (full prime range).
    /// Returns the count and the list of exceptional m.
    pub fn exceptional_scan(&self, x: u64) -> (u64, Vec<u64>) {
        let x = x.min(self.limit);
        let mut exceptional = Vec::new();
        let mut m = 2u64;
        while m <= x {
            if !self.has_goldbach_pair(m) {
                exceptional.push(m);
            }
            m += 2;
        }
        (exceptional.len() as u64, exceptional)
    }

    fn has_goldbach_pair(&self, m: u64) -> bool {
        if m < 4 {
            return false;
        }
        if m == 4 {
            return true; // 2 + 2
        }
        let mut p = 3u64;
        while p <= m / 2 {
            if self.is_prime(p) && self.is_prime(m - p) {
                return true;
            }
            p += 2;
        }
        false
    }

    /// E'(X): even m <= X not expressible as p - p'. The pair search runs
    /// over the whole table (the defining difference is not bounded by X),
    /// so the table limit should comfortably exceed X.
    pub fn exceptional_scan_twin(&self, x: u64) -> (u64, Vec<u64>) {
        let x = x.min(self.limit);
        let mut exceptional = Vec::new();
        let mut m = 2u64;
        while m <= x {
            let found = self
                .primes_in(2, self.limit.saturating_sub(m))
                .any(|p| self.is_prime(p + m));
            if !found {
                exceptional.push(m);
            }
            m += 2;
        }
        (exceptional.len() as u64, exceptional)
    }
}

pub fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}
