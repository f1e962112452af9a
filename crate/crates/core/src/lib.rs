//! Computational engine for binary additive prime problems: exact Dirichlet
//! character and Gauss-sum arithmetic, classical and character-pair singular
//! series with closed forms and bounds, gamma-function pair-sum asymptotics,
//! prime sieves and representation counts, L-function zeros at low height,
//! and an FFT-backed circle-method engine comparing major-arc integrals
//! against their explicit main-term predictions.

pub mod characters;
pub mod error;
pub mod gausssums;
pub mod numthy;
pub mod primes;
pub mod products;

pub use error::{Error, Result};
