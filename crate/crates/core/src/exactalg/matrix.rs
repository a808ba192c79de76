//! Dense exact matrices: determinants, characteristic polynomials and the
//! signature of real symmetric matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{self, Rational};

pub type RatMatrix = Vec<Vec<Rational>>;

/// Bareiss fraction-free determinant of an integer matrix.
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Gaussian-elimination determinant over Q.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Characteristic polynomial `det(λI - A)` via reduction to upper
/// Hessenberg form by exact similarity transforms.
pub fn char_poly(m: &[Vec<Rational>]) -> Poly {
    let n = m.len();
    let mut h = m.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| !h[i][c].is_zero()) else {
            continue;
        };
        if i != c + 1 {
            h.swap(i, c + 1);
            for row in h.iter_mut() {
                row.swap(i, c + 1);
            }
        }
        let pivot = h[c + 1][c].clone();
        for k in c + 2..n {
            if h[k][c].is_zero() {
                continue;
            }
            let u = &h[k][c] / &pivot;
            for j in 0..n {
                let v = &u * &h[c + 1][j];
                h[k][j] -= v;
            }
            for row in h.iter_mut() {
                let v = &u * &row[k];
                row[c + 1] += v;
            }
        }
    }
    let lambda = Poly::x();
    let mut p: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut next = &(&lambda - &Poly::constant(h[k][k].clone())) * &p[k];
        let mut prod = Rational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let c = &h[i][k] * &prod;
            if !c.is_zero() {
                next = &next - &p[i].scale(&c);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn sign_variations(coeffs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in coeffs.filter(|s| *s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `(positive, negative, zero)` eigenvalue counts of a real-rooted
/// polynomial, by Descartes' rule (exact for real-rooted input).
pub fn descartes_inertia(p: &Poly) -> (usize, usize, usize) {
    let zero = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let pos = sign_variations(p.coeffs().iter().map(rational::sign));
    let neg = sign_variations(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| rational::sign(c) * if k % 2 == 1 { -1 } else { 1 }),
    );
    (pos, neg, zero)
}

/// Signature `n₊ - n₋` of a real symmetric rational matrix.
pub fn symmetric_signature(m: &[Vec<Rational>]) -> i64 {
    let (pos, neg, _) = descartes_inertia(&char_poly(m));
    pos as i64 - neg as i64
}

pub fn to_rational(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| rational::int(x)).collect())
        .collect()
}
