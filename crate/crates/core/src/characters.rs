//! Exact Dirichlet character arithmetic.
//!
//! A character mod q is stored as exponent data on the canonical generators
//! of the unit group of each prime-power factor of q: one generator for odd
//! p^e and for 2 and 4, the pair (-1, 5) for 2^e with e >= 3. Values are
//! exact roots of unity. Characters are labeled by their Conrey index, so a
//! `(q, index)` pair names the same character as the public L-function
//! databases.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numthy::{factorize, gcd, lcm, powmod};

pub const MAX_MODULUS: u64 = 1_000_000;

/// e(num/den) with 0 <= num < den and gcd(num, den) = 1 (den = 1 for the value 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    pub num: u64,
    pub den: u64,
}

impl RootOfUnity {
    pub fn new(num: i64, den: u64) -> Self {
        debug_assert!(den > 0);
        let num = num.rem_euclid(den as i64) as u64;
        let g = gcd(num, den);
        if g == 0 {
            // num == 0
            return RootOfUnity { num: 0, den: 1 };
        }
        RootOfUnity {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn mul(self, other: Self) -> Self {
        let den = lcm(self.den, other.den);
        let num = (self.num as u128 * (den / self.den) as u128
            + other.num as u128 * (den / other.den) as u128)
            % den as u128;
        RootOfUnity::new(num as i64, den)
    }

    pub fn conj(self) -> Self {
        if self.num == 0 {
            self
        } else {
            RootOfUnity {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    pub fn to_complex(self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * (self.num as f64) / (self.den as f64);
        let (s, c) = theta.sin_cos();
        Complex64::new(c, s)
    }
}

/// A character value: zero off the coprime residues, a root of unity on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharValue {
    Zero,
    Root(RootOfUnity),
}

impl CharValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::new(0.0, 0.0),
            CharValue::Root(r) => r.to_complex(),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, CharValue::Zero)
    }
}

const NO_DLOG: u32 = u32::MAX;

#[derive(Debug)]
enum UnitKind {
    /// 2^1: trivial unit group.
    Trivial,
    /// Odd p^e: cyclic with canonical generator g.
    OddCyclic { g: u64, dlog: Vec<u32> },
    /// 2^2: generator -1.
    Four,
    /// 2^e, e >= 3: n = (-1)^eps 5^a; entry packs eps in the top bit.
    TwoPower { dlog: Vec<u32> },
}

#[derive(Debug)]
struct UnitData {
    p: u64,
    e: u32,
    pe: u64,
    phi: u64,
    kind: UnitKind,
}

fn canonical_generator(p: u64) -> u64 {
    let pm1 = factorize(p - 1);
    let prime_divs: Vec<u64> = pm1.factors.iter().map(|&(r, _)| r).collect();
    let p2 = p * p;
    'g: for g in 2.. {
        for &r in &prime_divs {
            if powmod(g, (p - 1) / r, p) == 1 {
                continue 'g;
            }
        }
        // primitive mod p; require it stays primitive mod p^2 (then all p^e)
        if powmod(g, p - 1, p2) != 1 {
            return g;
        }
    }
    unreachable!()
}

fn build_unit_data(p: u64, e: u32) -> UnitData {
    let pe = p.pow(e);
    if p == 2 {
        match e {
            1 => UnitData {
                p,
                e,
                pe,
                phi: 1,
                kind: UnitKind::Trivial,
            },
            2 => UnitData {
                p,
                e,
                pe,
                phi: 2,
                kind: UnitKind::Four,
            },
            _ => {
                let half = pe >> 2; // 2^{e-2}
                let mut dlog = vec![NO_DLOG; pe as usize];
                let mut x = 1u64;
                for a in 0..half {
                    dlog[x as usize] = a as u32;
                    dlog[(pe - x) as usize] = a as u32 | 0x8000_0000;
                    x = x * 5 % pe;
                }
                UnitData {
                    p,
                    e,
                    pe,
                    phi: pe / 2,
                    kind: UnitKind::TwoPower { dlog },
                }
            }
        }
    } else {
        let g = canonical_generator(p);
        let phi = pe / p * (p - 1);
        let mut dlog = vec![NO_DLOG; pe as usize];
        let mut x = 1u64;
        for k in 0..phi {
            dlog[x as usize] = k as u32;
            x = x * g % pe;
        }
        UnitData {
            p,
            e,
            pe,
            phi,
            kind: UnitKind::OddCyclic { g, dlog },
        }
    }
}

fn unit_data(p: u64, e: u32) -> Arc<UnitData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<UnitData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = p.pow(e);
    let mut map = cache.lock().unwrap();
    map.entry(key)
        .or_insert_with(|| Arc::new(build_unit_data(p, e)))
        .clone()
}

/// Exponent of the character on the canonical generators of one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CompExp {
    None,
    /// c mod phi(p^e): chi(g) = e(c / phi(p^e)).
    Odd(u64),
    /// c in {0,1}: chi(-1) = (-1)^c mod 4.
    Four(u8),
    /// chi(-1) = (-1)^eps, chi(5) = e(c5 / 2^{e-2}).
    TwoPower { eps: u8, c5: u64 },
}

#[derive(Clone)]
struct Component {
    unit: Arc<UnitData>,
    exp: CompExp,
}

/// A Dirichlet character mod q, immutable after construction.
#[derive(Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    comps: Vec<Component>,
    order: u64,
    conductor: u64,
    index: u64,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.index == other.index
    }
}
impl Eq for DirichletCharacter {}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{{{}}}", self.label())
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

fn check_modulus(q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus 0 rejected".into()));
    }
    if q > MAX_MODULUS {
        return Err(Error::ModulusOutOfRange(q));
    }
    Ok(())
}

impl DirichletCharacter {
    fn from_components(modulus: u64, comps: Vec<Component>) -> Self {
        let order = comps.iter().fold(1u64, |acc, c| lcm(acc, comp_order(c)));
        let conductor = comps.iter().map(comp_conductor).product::<u64>().max(1);
        let index = conrey_index(modulus, &comps);
        DirichletCharacter {
            modulus,
            comps,
            order,
            conductor,
            index,
        }
    }

    /// The principal character mod q.
    pub fn principal(q: u64) -> Result<Self> {
        check_modulus(q)?;
        let comps = factorize(q)
            .factors
            .iter()
            .map(|&(p, e)| {
                let unit = unit_data(p, e);
                let exp = zero_exp(&unit);
                Component { unit, exp }
            })
            .collect();
        Ok(Self::from_components(q, comps))
    }

    /// The trivial character mod 1 (the zeta character).
    pub fn trivial() -> Self {
        Self::principal(1).unwrap()
    }

    /// Construct from a Conrey label (q, n) with gcd(n, q) = 1.
    pub fn from_conrey(q: u64, n: u64) -> Result<Self> {
        check_modulus(q)?;
        let n = if q == 1 { 1 } else { n % q };
        if q > 1 && (n == 0 || gcd(n, q) != 1) {
            return Err(Error::InvalidArgument(format!(
                "Conrey index {n} not coprime to modulus {q}"
            )));
        }
        let comps = factorize(q)
            .factors
            .iter()
            .map(|&(p, e)| {
                let unit = unit_data(p, e);
                let exp = index_to_exp(&unit, n % unit.pe);
                Component { unit, exp }
            })
            .collect();
        Ok(Self::from_components(q, comps))
    }

    /// Parse a label of the form "q.n".
    pub fn from_label(label: &str) -> Result<Self> {
        let (q, n) = label
            .split_once('.')
            .ok_or_else(|| Error::InvalidArgument(format!("bad character label {label:?}")))?;
        let q: u64 = q
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad modulus in label {label:?}")))?;
        let n: u64 = n
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad index in label {label:?}")))?;
        Self::from_conrey(q, n)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn conrey_index(&self) -> u64 {
        self.index
    }

    /// "q.index" per the Conrey convention.
    pub fn label(&self) -> String {
        format!("{}.{}", self.modulus, self.index)
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// chi(-1) as +-1.
    pub fn parity(&self) -> i64 {
        match self.eval(-1) {
            CharValue::Root(r) => {
                if r.num == 0 {
                    1
                } else {
                    -1
                }
            }
            CharValue::Zero => unreachable!("-1 is a unit"),
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    /// Exact evaluation at any integer (reduced mod q internally).
    pub fn eval(&self, n: i64) -> CharValue {
        let q = self.modulus;
        let r = n.rem_euclid(q as i64) as u64;
        if q > 1 && gcd(r, q) != 1 {
            return CharValue::Zero;
        }
        let mut acc = RootOfUnity::one();
        for comp in &self.comps {
            match comp_eval(comp, r % comp.unit.pe) {
                Some(root) => acc = acc.mul(root),
                None => return CharValue::Zero,
            }
        }
        CharValue::Root(acc)
    }

    /// Floating view of `eval`.
    pub fn eval_c(&self, n: i64) -> Complex64 {
        self.eval(n).to_complex()
    }

    /// Full value table over residues 0..q, exact roots.
    pub fn value_table(&self) -> Vec<CharValue> {
        (0..self.modulus as i64).map(|n| self.eval(n)).collect()
    }

    /// Full floating value table over residues 0..q.
    pub fn complex_table(&self) -> Vec<Complex64> {
        (0..self.modulus as i64).map(|n| self.eval_c(n)).collect()
    }

    /// The primitive character inducing this one, together with its modulus.
    pub fn primitive_part(&self) -> DirichletCharacter {
        let r = self.conductor;
        let comps: Vec<Component> = self
            .comps
            .iter()
            .filter_map(|comp| restrict_component(comp, r))
            .collect();
        Self::from_components(r, comps)
    }

    /// Lift to a multiple modulus; the result agrees with `self` on residues
    /// coprime to `q` and vanishes elsewhere.
    pub fn induce(&self, q: u64) -> Result<DirichletCharacter> {
        check_modulus(q)?;
        if q % self.conductor != 0 {
            return Err(Error::NotADivisor {
                r: self.conductor,
                q,
            });
        }
        let prim = self.primitive_part();
        let comps = factorize(q)
            .factors
            .iter()
            .map(|&(p, e)| {
                let unit = unit_data(p, e);
                let exp = match prim.comps.iter().find(|c| c.unit.p == p) {
                    Some(src) => lift_exp(&src.unit, src.exp, &unit),
                    None => zero_exp(&unit),
                };
                Component { unit, exp }
            })
            .collect();
        Ok(Self::from_components(q, comps))
    }

    /// Pointwise product, defined mod lcm of the moduli.
    pub fn product(&self, other: &DirichletCharacter) -> DirichletCharacter {
        let q = lcm(self.modulus, other.modulus);
        let a = self.lift_full(q);
        let b = other.lift_full(q);
        let comps = a
            .comps
            .iter()
            .zip(b.comps.iter())
            .map(|(x, y)| Component {
                unit: x.unit.clone(),
                exp: add_exp(&x.unit, x.exp, y.exp),
            })
            .collect();
        Self::from_components(q, comps)
    }

    /// The complex-conjugate character.
    pub fn conjugate(&self) -> DirichletCharacter {
        let comps = self
            .comps
            .iter()
            .map(|c| Component {
                unit: c.unit.clone(),
                exp: neg_exp(&c.unit, c.exp),
            })
            .collect();
        Self::from_components(self.modulus, comps)
    }

    // Lift through the reduction map without passing to the primitive part;
    // valid whenever modulus | q.
    fn lift_full(&self, q: u64) -> DirichletCharacter {
        debug_assert_eq!(q % self.modulus, 0);
        let comps = factorize(q)
            .factors
            .iter()
            .map(|&(p, e)| {
                let unit = unit_data(p, e);
                let exp = match self.comps.iter().find(|c| c.unit.p == p) {
                    Some(src) => lift_exp(&src.unit, src.exp, &unit),
                    None => zero_exp(&unit),
                };
                Component { unit, exp }
            })
            .collect();
        Self::from_components(q, comps)
    }
}

fn zero_exp(unit: &UnitData) -> CompExp {
    match unit.kind {
        UnitKind::Trivial => CompExp::None,
        UnitKind::OddCyclic { .. } => CompExp::Odd(0),
        UnitKind::Four => CompExp::Four(0),
        UnitKind::TwoPower { .. } => CompExp::TwoPower { eps: 0, c5: 0 },
    }
}

fn index_to_exp(unit: &UnitData, n: u64) -> CompExp {
    match &unit.kind {
        UnitKind::Trivial => CompExp::None,
        UnitKind::OddCyclic { dlog, .. } => CompExp::Odd(dlog[n as usize] as u64),
        UnitKind::Four => CompExp::Four(if n == 3 { 1 } else { 0 }),
        UnitKind::TwoPower { dlog } => {
            let packed = dlog[n as usize];
            CompExp::TwoPower {
                eps: (packed >> 31) as u8,
                c5: (packed & 0x7FFF_FFFF) as u64,
            }
        }
    }
}

fn comp_eval(comp: &Component, n: u64) -> Option<RootOfUnity> {
    let unit = &*comp.unit;
    match (&unit.kind, comp.exp) {
        (UnitKind::Trivial, _) => Some(RootOfUnity::one()),
        (UnitKind::OddCyclic { dlog, .. }, CompExp::Odd(c)) => {
            let a = dlog[n as usize];
            if a == NO_DLOG {
                return None;
            }
            Some(RootOfUnity::new(
                ((c as u128 * a as u128) % unit.phi as u128) as i64,
                unit.phi,
            ))
        }
        (UnitKind::Four, CompExp::Four(c)) => {
            if n % 2 == 0 {
                return None;
            }
            let eps = u64::from(n == 3);
            Some(RootOfUnity::new((c as u64 * eps) as i64, 2))
        }
        (UnitKind::TwoPower { dlog }, CompExp::TwoPower { eps, c5 }) => {
            let packed = dlog[n as usize];
            if packed == NO_DLOG {
                return None;
            }
            let n_eps = (packed >> 31) as u64;
            let n_a = (packed & 0x7FFF_FFFF) as u64;
            let half = unit.pe >> 2;
            let sign = RootOfUnity::new((eps as u64 * n_eps) as i64, 2);
            let spin = RootOfUnity::new(((c5 as u128 * n_a as u128) % half as u128) as i64, half);
            Some(sign.mul(spin))
        }
        _ => unreachable!("component kind/exponent mismatch"),
    }
}

fn comp_order(comp: &Component) -> u64 {
    let unit = &*comp.unit;
    match comp.exp {
        CompExp::None => 1,
        CompExp::Odd(c) => unit.phi / gcd(c, unit.phi),
        CompExp::Four(c) => {
            if c == 0 {
                1
            } else {
                2
            }
        }
        CompExp::TwoPower { eps, c5 } => {
            let half = unit.pe >> 2;
            let o5 = half / gcd(c5, half);
            lcm(if eps == 0 { 1 } else { 2 }, o5)
        }
    }
}

fn comp_conductor(comp: &Component) -> u64 {
    let unit = &*comp.unit;
    match comp.exp {
        CompExp::None => 1,
        CompExp::Odd(c) => {
            if c == 0 {
                return 1;
            }
            let p = unit.p;
            // chi factors through (Z/p^f)^* iff p^{e-f} divides c.
            let mut f = unit.e;
            let mut c = c;
            while f > 1 && c % p == 0 {
                c /= p;
                f -= 1;
            }
            p.pow(f)
        }
        CompExp::Four(c) => {
            if c == 0 {
                1
            } else {
                4
            }
        }
        CompExp::TwoPower { eps, c5 } => {
            if c5 == 0 {
                if eps == 0 {
                    1
                } else {
                    4
                }
            } else {
                let v = c5.trailing_zeros();
                1u64 << (unit.e - v)
            }
        }
    }
}

fn restrict_component(comp: &Component, conductor: u64) -> Option<Component> {
    let local = comp_conductor(comp);
    if local == 1 {
        return None;
    }
    debug_assert_eq!(conductor % local, 0);
    let unit = &*comp.unit;
    let target = if unit.p == 2 {
        unit_data(2, local.ilog2())
    } else {
        unit_data(unit.p, factorize(local).factors[0].1)
    };
    let exp = match comp.exp {
        CompExp::None => unreachable!(),
        CompExp::Odd(c) => CompExp::Odd(c / (unit.phi / target.phi)),
        CompExp::Four(c) => CompExp::Four(c),
        CompExp::TwoPower { eps, c5 } => match &target.kind {
            UnitKind::Four => CompExp::Four(eps),
            UnitKind::TwoPower { .. } => {
                let ratio = (unit.pe >> 2) / (target.pe >> 2);
                CompExp::TwoPower {
                    eps,
                    c5: c5 / ratio,
                }
            }
            _ => unreachable!("conductor >= 4 for nontrivial 2-part"),
        },
    };
    Some(Component { unit: target, exp })
}

fn lift_exp(src_unit: &UnitData, src: CompExp, dst: &UnitData) -> CompExp {
    debug_assert_eq!(src_unit.p, dst.p);
    match (src, &dst.kind) {
        (CompExp::None, _) => zero_exp(dst),
        (CompExp::Odd(c), UnitKind::OddCyclic { .. }) => {
            CompExp::Odd(c * (dst.phi / src_unit.phi))
        }
        (CompExp::Four(c), UnitKind::Four) => CompExp::Four(c),
        (CompExp::Four(c), UnitKind::TwoPower { .. }) => CompExp::TwoPower { eps: c, c5: 0 },
        (CompExp::TwoPower { eps, c5 }, UnitKind::TwoPower { .. }) => {
            let ratio = (dst.pe >> 2) / (src_unit.pe >> 2);
            CompExp::TwoPower {
                eps,
                c5: c5 * ratio,
            }
        }
        (CompExp::TwoPower { eps, c5 }, UnitKind::Four) => {
            debug_assert_eq!(c5, 0);
            CompExp::Four(eps)
        }
        _ => unreachable!("incompatible lift"),
    }
}

fn add_exp(unit: &UnitData, a: CompExp, b: CompExp) -> CompExp {
    match (a, b) {
        (CompExp::None, CompExp::None) => CompExp::None,
        (CompExp::Odd(x), CompExp::Odd(y)) => CompExp::Odd((x + y) % unit.phi),
        (CompExp::Four(x), CompExp::Four(y)) => CompExp::Four((x + y) % 2),
        (CompExp::TwoPower { eps: e1, c5: x }, CompExp::TwoPower { eps: e2, c5: y }) => {
            CompExp::TwoPower {
                eps: (e1 + e2) % 2,
                c5: (x + y) % (unit.pe >> 2),
            }
        }
        _ => unreachable!("mismatched component exponents"),
    }
}

fn neg_exp(unit: &UnitData, a: CompExp) -> CompExp {
    match a {
        CompExp::None => CompExp::None,
        CompExp::Odd(x) => CompExp::Odd((unit.phi - x) % unit.phi),
        CompExp::Four(x) => CompExp::Four(x),
        CompExp::TwoPower { eps, c5 } => {
            let half = unit.pe >> 2;
            CompExp::TwoPower {
                eps,
                c5: (half - c5) % half,
            }
        }
    }
}

fn conrey_index(q: u64, comps: &[Component]) -> u64 {
    if q == 1 {
        return 1;
    }
    // CRT-combine the per-component generator images.
    let mut n: u64 = 0;
    let mut modulus: u64 = 1;
    for comp in comps {
        let unit = &*comp.unit;
        let local = match (&unit.kind, comp.exp) {
            (UnitKind::Trivial, _) => 1u64,
            (UnitKind::OddCyclic { g, .. }, CompExp::Odd(c)) => powmod(*g, c, unit.pe),
            (UnitKind::Four, CompExp::Four(c)) => {
                if c == 0 {
                    1
                } else {
                    3
                }
            }
            (UnitKind::TwoPower { .. }, CompExp::TwoPower { eps, c5 }) => {
                let v = powmod(5, c5, unit.pe);
                if eps == 0 {
                    v
                } else {
                    unit.pe - v
                }
            }
            _ => unreachable!(),
        };
        // solve x = n mod modulus, x = local mod unit.pe
        let (m1, m2) = (modulus, unit.pe);
        let inv = mod_inverse(m1 % m2, m2);
        let diff = (local + m2 - n % m2) % m2;
        n += m1 * ((diff as u128 * inv as u128) % m2 as u128) as u64;
        modulus = m1 * m2;
        n %= modulus;
    }
    if n == 0 {
        n = modulus; // cannot happen for units, kept for safety
    }
    n
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit");
    old_s.rem_euclid(m as i128) as u64
}

/// All phi(q) characters mod q in increasing Conrey-index order.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    check_modulus(q)?;
    if q == 1 {
        return Ok(vec![DirichletCharacter::trivial()]);
    }
    (1..=q)
        .filter(|&n| gcd(n, q) == 1)
        .map(|n| DirichletCharacter::from_conrey(q, n))
        .collect()
}

/// The primitive characters mod q, in increasing Conrey-index order.
pub fn enumerate_primitive_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    Ok(enumerate_characters(q)?
        .into_iter()
        .filter(|chi| chi.is_primitive())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_character() {
        let chi = DirichletCharacter::trivial();
        assert_eq!(chi.modulus(), 1);
        assert_eq!(chi.label(), "1.1");
        assert!(chi.is_primitive());
        for n in -5..5 {
            assert_eq!(chi.eval(n), CharValue::Root(RootOfUnity::one()));
        }
    }

    #[test]
    fn mod_four() {
        let chars = enumerate_characters(4).unwrap();
        assert_eq!(chars.len(), 2);
        let chi = &chars[1];
        assert_eq!(chi.label(), "4.3");
        assert_eq!(chi.eval_c(3).re, -1.0);
        assert_eq!(chi.eval(2), CharValue::Zero);
        assert!(chi.is_primitive());
        assert_eq!(chi.conductor(), 4);
    }

    #[test]
    fn quadratic_mod_5_at_2() {
        // 2 is a quadratic non-residue mod 5
        let chi = DirichletCharacter::from_conrey(5, 4).unwrap();
        assert_eq!(chi.order(), 2);
        assert_eq!(chi.eval(2), CharValue::Root(RootOfUnity::new(1, 2)));
        // brute-force Legendre check over all residues
        for n in 1..5i64 {
            let is_qr = (1..5).any(|x| (x * x) % 5 == n);
            let expected = if is_qr { 1.0 } else { -1.0 };
            assert!((chi.eval_c(n).re - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn conrey_5_2_is_quartic_i() {
        let chi = DirichletCharacter::from_conrey(5, 2).unwrap();
        assert_eq!(chi.order(), 4);
        let v = chi.eval_c(2);
        assert!((v - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        for q in 1..=60u64 {
            let chars = enumerate_characters(q).unwrap();
            assert_eq!(chars.len() as u64, crate::numthy::euler_phi(q));
            // distinct as functions: distinct value tables
            for i in 0..chars.len() {
                for j in i + 1..chars.len() {
                    assert_ne!(chars[i].value_table(), chars[j].value_table());
                }
            }
        }
    }

    #[test]
    fn complete_multiplicativity_and_periodicity() {
        for q in [1u64, 4, 5, 8, 9, 12, 24, 35, 72] {
            for chi in enumerate_characters(q).unwrap() {
                for a in 0..q.min(30) as i64 {
                    assert_eq!(chi.eval(a), chi.eval(a + q as i64));
                    for b in 0..q.min(30) as i64 {
                        let lhs = chi.eval_c(a * b);
                        let rhs = chi.eval_c(a) * chi.eval_c(b);
                        assert!((lhs - rhs).norm() < 1e-12, "q={q} chi={chi} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn mod_12_has_one_primitive_character() {
        // conductors mod 12 are {1, 3, 4, 12}: the real character of
        // conductor 12 is primitive.
        let chars = enumerate_characters(12).unwrap();
        assert_eq!(chars.len(), 4);
        let prim: Vec<_> = chars.iter().filter(|c| c.is_primitive()).collect();
        assert_eq!(prim.len(), 1);
        assert_eq!(prim[0].conductor(), 12);
        let mut conds: Vec<u64> = chars.iter().map(|c| c.conductor()).collect();
        conds.sort_unstable();
        assert_eq!(conds, vec![1, 3, 4, 12]);
    }

    #[test]
    fn induction_round_trip() {
        for q in 1..=100u64 {
            for chi in enumerate_characters(q).unwrap() {
                let prim = chi.primitive_part();
                assert!(prim.is_primitive());
                assert_eq!(prim.modulus(), chi.conductor());
                let back = prim.induce(q).unwrap();
                assert_eq!(back, chi);
            }
        }
    }

    #[test]
    fn induce_requires_divisibility() {
        let chi = DirichletCharacter::from_conrey(5, 4).unwrap();
        assert!(chi.induce(12).is_err());
        assert!(chi.induce(15).is_ok());
    }

    #[test]
    fn product_of_quartics_mod_5() {
        let a = DirichletCharacter::from_conrey(5, 2).unwrap();
        let b = a.conjugate();
        assert_eq!(b.conrey_index(), 3);
        let prod = a.product(&b);
        assert!(prod.is_principal());
        assert_eq!(prod.conductor(), 1);
        let sq = a.product(&a);
        assert_eq!(sq.order(), 2);
        assert_eq!(sq.conductor(), 5);
        assert_eq!(sq.conrey_index(), 4);
    }

    #[test]
    fn product_is_pointwise() {
        let a = DirichletCharacter::from_conrey(3, 2).unwrap();
        let b = DirichletCharacter::from_conrey(4, 3).unwrap();
        let prod = a.product(&b);
        assert_eq!(prod.modulus(), 12);
        for n in 0..12i64 {
            let lhs = prod.eval_c(n);
            let rhs = a.eval_c(n) * b.eval_c(n);
            let rhs = if crate::numthy::gcd(n.rem_euclid(12) as u64, 12) != 1 {
                Complex64::new(0.0, 0.0)
            } else {
                rhs
            };
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn conrey_label_multiplicativity() {
        // Conrey labels multiply: chi_q(a, .) chi_q(b, .) = chi_q(ab mod q, .)
        for q in [5u64, 8, 9, 12, 16, 21, 40] {
            let chars = enumerate_characters(q).unwrap();
            for x in &chars {
                for y in &chars {
                    let prod = x.product(y);
                    let expect = (x.conrey_index() * y.conrey_index()) % q;
                    assert_eq!(prod.conrey_index(), expect, "q={q} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        for q in 1..=100u64 {
            for chi in enumerate_characters(q).unwrap() {
                let sum: Complex64 = (0..q as i64).map(|n| chi.eval_c(n)).sum();
                if chi.is_principal() {
                    assert!(
                        (sum.re - crate::numthy::euler_phi(q) as f64).abs() < 1e-9
                            && sum.im.abs() < 1e-9
                    );
                } else {
                    assert!(sum.norm() < 1e-9, "q={q} chi={chi} sum={sum}");
                }
            }
        }
    }

    #[test]
    fn primitive_count_formula() {
        for q in 1..=200u64 {
            let count = enumerate_primitive_characters(q).unwrap().len() as u64;
            assert_eq!(count, crate::numthy::primitive_character_count(q), "q={q}");
        }
    }

    #[test]
    fn conjugate_is_complex_conjugate() {
        for q in [7u64, 9, 16, 40] {
            for chi in enumerate_characters(q).unwrap() {
                let bar = chi.conjugate();
                for n in 0..q as i64 {
                    assert!((bar.eval_c(n) - chi.eval_c(n).conj()).norm() < 1e-12);
                }
            }
        }
    }
}
