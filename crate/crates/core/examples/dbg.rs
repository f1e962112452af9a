// debug binary
fn main() {
    let pi = std::f64::consts::PI;
    println!("zeta2 err {:e}", goldbach_core::products::dbg_zeta(2.0) - pi*pi/6.0);
    println!("P(2) = {:.15}", goldbach_core::products::dbg_prime_zeta(2.0));
    println!("P_odd(2) = {:.15}", goldbach_core::products::dbg_prime_zeta(2.0) - 0.25);
    let c = goldbach_core::products::euler_constants();
    println!("c2={:.15} k1={:.15} b={:.15}", c.c2, c.k1, c.b);
}
