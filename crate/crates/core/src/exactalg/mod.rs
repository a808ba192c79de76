//! Exact arithmetic substrate: rationals, polynomials over Q and Λ = Q[t, 1/t],
//! resultants, cyclotomic polynomials, Sturm isolation and certified
//! enclosures.

pub mod cyclotomic;
pub mod interval;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod sturm;

pub use cyclotomic::cyclotomic;
pub use interval::{arccos_enclosure, CertifiedValue, Truth};
pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use rational::Rational;
pub use resultant::resultant;
pub use sturm::{sturm_isolate, IsolatingInterval};
