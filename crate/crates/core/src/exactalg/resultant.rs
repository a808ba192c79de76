use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::poly::Poly;
use super::rational::Rational;

/// Resultant of the canonical representatives of `p` and `q`.
///
/// The value equals the Sylvester determinant with the rows of `p` first,
/// so `Res(p, q) = lc(p)^{deg q} ∏_{p(α)=0} q(α)`.
pub fn resultant(p: &LaurentPoly, q: &LaurentPoly) -> Rational {
    let (_, a) = p.canonical().to_poly();
    let (_, b) = q.canonical().to_poly();
    poly_resultant(&a, &b)
}

/// Euclidean remainder-sequence resultant of dense polynomials.
pub fn poly_resultant(a: &Poly, b: &Poly) -> Rational {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rational::one();
    loop {
        let (Some(n), Some(m)) = (a.degree(), b.degree()) else {
            return Rational::zero();
        };
        if n == 0 {
            return acc * num_traits::pow(a.lc().unwrap().clone(), m);
        }
        if m == 0 {
            return acc * num_traits::pow(b.lc().unwrap().clone(), n);
        }
        let r = b.rem(&a);
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        // Res(A, B) = lc(A)^{m - dr} Res(A, R) = lc(A)^{m - dr} (-1)^{n dr} Res(R, A)
        acc *= num_traits::pow(a.lc().unwrap().clone(), m - dr);
        if (n * dr) % 2 == 1 {
            acc = -acc;
        }
        b = a;
        a = r;
    }
}
