//! High-precision Euler products over odd primes.
//!
//! The production constants come from a prime-zeta expansion of the
//! logarithm (geometric convergence, certified truncation below 1e-14);
//! direct products over sieved primes serve as the independent oracle.

use std::sync::OnceLock;

use crate::primes::PrimeTable;

/// zeta(s) for real s >= 2 via a short sum plus Euler-Maclaurin tail.
pub fn dbg_zeta(s: f64) -> f64 { zeta_real(s) }
pub fn dbg_prime_zeta(s: f64) -> f64 { prime_zeta(s) }
fn zeta_real(s: f64) -> f64 {
    debug_assert!(s >= 2.0);
    let n = 40u64;
    let mut sum = 0.0;
    for i in 1..n {
        sum += (i as f64).powf(-s);
    }
    let nf = n as f64;
    // integral tail + correction terms
    sum += nf.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * nf.powf(-s);
    sum += s / 12.0 * nf.powf(-s - 1.0);
    sum -= s * (s + 1.0) * (s + 2.0) / 720.0 * nf.powf(-s - 3.0);
    sum
}

/// Prime zeta P(s) = sum over primes of p^{-s}, real s >= 2.
fn prime_zeta(s: f64) -> f64 {
    let mut total = 0.0;
    for j in 1..60u64 {
        let mu = crate::numthy::moebius(j);
        if mu == 0 {
            continue;
        }
        let js = s * j as f64;
        if js > 1080.0 {
            break;
        }
        let lz = zeta_real(js).ln();
        if lz.abs() < 1e-300 {
            break;
        }
        total += mu as f64 / j as f64 * lz;
    }
    total
}

/// Prime zeta restricted to odd primes.
fn prime_zeta_odd(s: f64) -> f64 {
    prime_zeta(s) - 2f64.powf(-s)
}

/// Expand log prod_{p>2} h((p-1)^{-2}) as a series in odd prime zetas,
/// where the per-k coefficients of h(x) = sum_k a_k x^k are supplied.
/// Uses (p-1)^{-2k} = sum_j binom(2k-1+j, j) p^{-2k-j}.
fn odd_prime_product_log(a: impl Fn(u64) -> f64) -> f64 {
    let max_n = 200u64;
    let mut total = 0.0;
    for n in 2..=max_n {
        // coefficient of P_odd(n): sum over k with 2k <= n of a_k * binom(n-1, 2k-1)
        let mut coeff = 0.0;
        for k in 1..=n / 2 {
            // binom(n-1, 2k-1)
            let mut b = 1.0f64;
            for i in 0..(2 * k - 1) {
                b *= (n - 1 - i) as f64 / (i + 1) as f64;
            }
            coeff += a(k) * b;
        }
        let term = coeff * prime_zeta_odd(n as f64);
        total += term;
        if n > 20 && term.abs() < 1e-18 {
            break;
        }
    }
    total
}

/// The base constants of the singular-series Euler products.
#[derive(Debug, Clone, Copy)]
pub struct EulerConstants {
    /// prod_{p>2} (1 - 1/(p-1)^2); twice this is the twin-prime constant.
    pub c2: f64,
    /// prod_{p>2} (1 + 1/(p-1)^2).
    pub k1: f64,
    /// prod_{p>2} (1 + 2/(p(p-2))) = k1 / c2.
    pub b: f64,
}

pub fn euler_constants() -> EulerConstants {
    static CONSTS: OnceLock<EulerConstants> = OnceLock::new();
    *CONSTS.get_or_init(|| {
        // log(1 - x) = -sum x^k / k, log(1 + x) = sum (-1)^{k+1} x^k / k
        let log_c2 = odd_prime_product_log(|k| -1.0 / k as f64);
        let log_k1 = odd_prime_product_log(|k| {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign / k as f64
        });
        let c2 = log_c2.exp();
        let k1 = log_k1.exp();
        EulerConstants { c2, k1, b: k1 / c2 }
    })
}

/// Direct product oracle: prod over odd primes p <= limit of (1 - 1/(p-1)^2).
pub fn twin_constant_direct(limit: u64) -> f64 {
    let table = PrimeTable::sieve(limit).expect("sieve for direct product");
    let mut log_acc = 0.0f64;
    let mut comp = 0.0f64;
    for p in table.primes_in(3, limit) {
        let pm1 = (p - 1) as f64;
        let term = (1.0 - 1.0 / (pm1 * pm1)).ln();
        let y = term - comp;
        let t = log_acc + y;
        comp = (t - log_acc) - y;
        log_acc = t;
    }
    log_acc.exp()
}

/// Upper bound on prod_p (1 + p^s / (p-1)^2) for s in (0,1), used by the
/// certified Rankin tail of the singular-series partial sums.
pub fn rankin_product_bound(s: f64) -> f64 {
    static CACHE: OnceLock<std::sync::Mutex<std::collections::HashMap<u64, f64>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (s * 1e6) as u64;
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let limit = 1_000_000u64;
    let table = PrimeTable::sieve(limit).expect("sieve for rankin bound");
    let mut log_acc = 0.0f64;
    for p in table.primes() {
        let pf = p as f64;
        log_acc += (pf.powf(s) / ((pf - 1.0) * (pf - 1.0))).ln_1p();
    }
    // tail: sum_{n > limit} n^s/(n-1)^2 <= (1 + 3/limit) * limit^{s-1}/(1-s) + limit^{s-2}
    let lf = limit as f64;
    let tail = (1.0 + 3.0 / lf) * lf.powf(s - 1.0) / (1.0 - s) + lf.powf(s - 2.0);
    let bound = (log_acc + tail).exp();
    cache.lock().unwrap().insert(key, bound);
    bound
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_values() {
        let pi = std::f64::consts::PI;
        assert!((zeta_real(2.0) - pi * pi / 6.0).abs() < 1e-13);
        assert!((zeta_real(4.0) - pi.powi(4) / 90.0).abs() < 1e-13);
    }

    #[test]
    fn prime_zeta_2() {
        // P(2) = 0.45224742004106549850654336483224793417323134323989...
        assert!((prime_zeta(2.0) - 0.452247420041065498).abs() < 1e-12);
    }

    #[test]
    fn twin_constant_value() {
        // C2 = 0.66016181584686957392781211001455577843262336028473...
        let c = euler_constants();
        assert!(
            (c.c2 - 0.660161815846869573927812110014555778).abs() < 1e-13,
            "c2 = {:.16}",
            c.c2
        );
        assert!((2.0 * c.c2 - 1.3203236316937391).abs() < 1e-12);
    }

    #[test]
    fn production_matches_direct_product() {
        let direct = twin_constant_direct(1_000_000);
        let c = euler_constants();
        // truncation tail of the direct product at 1e6 is about 6e-8
        assert!((c.c2 - direct).abs() < 2e-7, "{} vs {direct}", c.c2);
        assert!(c.c2 < direct, "direct product exceeds the full one");
    }

    #[test]
    fn b_constant_consistent() {
        let c = euler_constants();
        // direct partial product for B over p <= 1e5
        let table = PrimeTable::sieve(100_000).unwrap();
        let mut prod = 1.0f64;
        for p in table.primes_in(3, 100_000) {
            let pf = p as f64;
            prod *= 1.0 + 2.0 / (pf * (pf - 2.0));
        }
        assert!((c.b - prod).abs() < 1e-9, "{} vs {prod}", c.b);
        assert!(c.b > prod);
    }

    #[test]
    fn rankin_bound_sane() {
        let b = rankin_product_bound(0.75);
        assert!(b.is_finite() && b > 1.0 && b < 100.0, "bound {b}");
    }
}
