//! Gauss sums tau(chi) and the twisted Ramanujan sums c_chi(m), with the
//! closed-form identities (conductor reduction and divisor-killed vanishing)
//! as independently testable formulas.
//!
//! Sums with a small common root order accumulate exactly as integer
//! coefficient vectors over the group of N-th roots of unity and round once
//! at the end; larger ones fall back to compensated floating accumulation.

use num_complex::Complex64;

use crate::characters::{CharValue, DirichletCharacter, RootOfUnity};
use crate::error::{Error, Result};
use crate::numthy::{euler_phi, gcd, lcm, moebius};

/// Largest exact accumulation order; beyond this the direct sums switch to
/// Kahan-compensated floating accumulation.
pub const MAX_EXACT_ORDER: u64 = 1 << 20;

/// Sum of exact roots of unity: either an integer coefficient vector over
/// the N-th roots, or a compensated floating total.
enum RootAccumulator {
    Exact { order: u64, coeffs: Vec<i64> },
    Float { sum: Complex64, comp: Complex64 },
}

impl RootAccumulator {
    fn new(order: u64) -> Self {
        if order <= MAX_EXACT_ORDER {
            RootAccumulator::Exact {
                order,
                coeffs: vec![0i64; order as usize],
            }
        } else {
            RootAccumulator::Float {
                sum: Complex64::new(0.0, 0.0),
                comp: Complex64::new(0.0, 0.0),
            }
        }
    }

    fn add(&mut self, root: RootOfUnity) {
        match self {
            RootAccumulator::Exact { order, coeffs } => {
                debug_assert_eq!(*order % root.den, 0);
                coeffs[(root.num * (*order / root.den)) as usize] += 1;
            }
            RootAccumulator::Float { sum, comp } => {
                let term = root.to_complex();
                let y = term - *comp;
                let t = *sum + y;
                *comp = (t - *sum) - y;
                *sum = t;
            }
        }
    }

    fn total(&self) -> Complex64 {
        match self {
            RootAccumulator::Exact { order, coeffs } => {
                let n = *order as f64;
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        let theta = 2.0 * std::f64::consts::PI * (j as f64) / n;
                        let (s, co) = theta.sin_cos();
                        acc += Complex64::new(co * c as f64, s * c as f64);
                    }
                }
                acc
            }
            RootAccumulator::Float { sum, .. } => *sum,
        }
    }
}

/// c_chi(m) = sum over h mod q of chi(h) e(hm/q), by direct summation.
pub fn c_chi_direct(chi: &DirichletCharacter, m: i64) -> Complex64 {
    let q = chi.modulus();
    let order = chi.order();
    let mut acc = RootAccumulator::new(lcm(order, q));
    let mr = m.rem_euclid(q as i64) as u64;
    for h in 1..=q {
        if let CharValue::Root(r) = chi.eval(h as i64) {
            let additive = RootOfUnity::new((h % q * mr % q) as i64, q);
            acc.add(r.mul(additive));
        }
    }
    acc.total()
}

/// tau(chi) = c_chi(1), by direct summation.
pub fn tau(chi: &DirichletCharacter) -> Complex64 {
    c_chi_direct(chi, 1)
}

/// tau of a character mod k induced by the primitive chi* mod r:
/// mu(k/r) chi*(k/r) tau(chi*).
pub fn tau_induced(chi_star: &DirichletCharacter, k: u64) -> Result<Complex64> {
    let r = chi_star.modulus();
    if !chi_star.is_primitive() {
        return Err(Error::InvalidArgument(format!(
            "tau_induced requires a primitive character, got {chi_star}"
        )));
    }
    if k % r != 0 {
        return Err(Error::NotADivisor { r, q: k });
    }
    let s = k / r;
    let mu = moebius(s);
    if mu == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let val = chi_star.eval_c(s as i64);
    Ok(val * (mu as f64) * tau(chi_star))
}

/// c_chi(m) via the conductor-reduction closed form: with q1 = q/(q,|m|) it
/// vanishes unless r | q1, and otherwise equals
/// conj(chi*)(m/(q,|m|)) (phi(q)/phi(q1)) mu(q1/r) chi*(q1/r) tau(chi*).
pub fn c_chi_closed(chi: &DirichletCharacter, m: i64) -> Complex64 {
    let q = chi.modulus();
    let star = chi.primitive_part();
    let r = star.modulus();
    let g = if m == 0 { q } else { gcd(q, m.unsigned_abs()) };
    let q1 = q / g;
    if q1 % r != 0 {
        return Complex64::new(0.0, 0.0);
    }
    let s = q1 / r;
    let mu = moebius(s);
    if mu == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let m_reduced = m / g as i64;
    let lead = star.eval_c(m_reduced).conj();
    let ratio = (euler_phi(q) / euler_phi(q1)) as f64;
    lead * ratio * (mu as f64) * star.eval_c(s as i64) * tau(&star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn tau_trivial_is_one() {
        let chi = DirichletCharacter::trivial();
        assert!(close(tau(&chi), Complex64::new(1.0, 0.0), 1e-15));
    }

    #[test]
    fn tau_mod_4_is_2i() {
        let chi = DirichletCharacter::from_conrey(4, 3).unwrap();
        assert!(close(tau(&chi), Complex64::new(0.0, 2.0), 1e-12));
    }

    #[test]
    fn tau_quadratic_mod_5_is_sqrt5() {
        let chi = DirichletCharacter::from_conrey(5, 4).unwrap();
        assert!(close(tau(&chi), Complex64::new(5f64.sqrt(), 0.0), 1e-12));
    }

    #[test]
    fn tau_modulus_squared_is_q_for_primitive() {
        for q in 1..=120u64 {
            for chi in enumerate_characters(q).unwrap() {
                if chi.is_primitive() {
                    let t = tau(&chi);
                    assert!(
                        (t.norm_sqr() - q as f64).abs() < 1e-6,
                        "q={q} chi={chi} |tau|^2={}",
                        t.norm_sqr()
                    );
                }
            }
        }
    }

    #[test]
    fn ramanujan_c_q_0_is_phi() {
        let chi = DirichletCharacter::principal(6).unwrap();
        assert!(close(c_chi_direct(&chi, 0), Complex64::new(2.0, 0.0), 1e-12));
        assert!(close(c_chi_closed(&chi, 0), Complex64::new(2.0, 0.0), 1e-12));
    }

    #[test]
    fn c_chi_mod_1() {
        let chi = DirichletCharacter::trivial();
        for m in -3..=3 {
            assert!(close(c_chi_direct(&chi, m), Complex64::new(1.0, 0.0), 1e-15));
            assert!(close(c_chi_closed(&chi, m), Complex64::new(1.0, 0.0), 1e-15));
        }
    }

    #[test]
    fn direct_equals_closed_small() {
        for q in 1..=40u64 {
            for chi in enumerate_characters(q).unwrap() {
                for m in -60..=60i64 {
                    let d = c_chi_direct(&chi, m);
                    let c = c_chi_closed(&chi, m);
                    assert!(close(d, c, 1e-9), "q={q} chi={chi} m={m}: {d} vs {c}");
                }
            }
        }
    }

    #[test]
    fn induced_tau_examples() {
        // principal mod 4 induced from mod 1: mu(4) = 0
        let trivial = DirichletCharacter::trivial();
        assert!(close(
            tau_induced(&trivial, 4).unwrap(),
            Complex64::new(0.0, 0.0),
            1e-15
        ));
        // quadratic mod 5 induced to mod 10 and mod 15: both sqrt 5
        let chi5 = DirichletCharacter::from_conrey(5, 4).unwrap();
        for k in [10u64, 15] {
            let closed = tau_induced(&chi5, k).unwrap();
            let direct = tau(&chi5.induce(k).unwrap());
            assert!(close(closed, Complex64::new(5f64.sqrt(), 0.0), 1e-12));
            assert!(close(closed, direct, 1e-12), "k={k}");
        }
    }

    #[test]
    fn induced_tau_matches_direct() {
        for r in 1..=24u64 {
            for star in enumerate_characters(r).unwrap() {
                if !star.is_primitive() {
                    continue;
                }
                for mult in 1..=6u64 {
                    let k = r * mult;
                    let closed = tau_induced(&star, k).unwrap();
                    let direct = tau(&star.induce(k).unwrap());
                    assert!(close(closed, direct, 1e-9), "r={r} k={k} star={star}");
                }
            }
        }
    }

    #[test]
    fn tau_conjugation_identity() {
        // tau(conj chi) = chi(-1) conj(tau(chi)) for primitive chi
        for q in 1..=60u64 {
            for chi in enumerate_characters(q).unwrap() {
                if !chi.is_primitive() {
                    continue;
                }
                let lhs = tau(&chi.conjugate());
                let rhs = tau(&chi).conj() * chi.parity() as f64;
                assert!(close(lhs, rhs, 1e-9), "q={q} chi={chi}");
            }
        }
    }
}
