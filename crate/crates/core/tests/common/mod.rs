//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use dsgenus::exactalg::{LaurentPoly, Rational};
use dsgenus::lambda_modules::LambdaMatrix;
use dsgenus::seifert::{KnotDescriptor, SeifertMatrix};

/// `V = S + E` with `S` random symmetric and `E` the standard block
/// `[[0, 1], [0, 0]]` repeated, so `V - Vᵀ` is the standard symplectic form.
pub fn random_seifert(rng: &mut ChaCha8Rng, genus: usize, range: i64) -> SeifertMatrix {
    let n = 2 * genus;
    let mut v = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let s = rng.gen_range(-range..=range);
            v[i][j] += s;
            if i != j {
                v[j][i] += s;
            }
        }
    }
    for k in 0..genus {
        v[2 * k][2 * k + 1] += 1;
    }
    SeifertMatrix::validate(v).expect("construction guarantees det(V - Vᵀ) = 1")
}

pub fn knot(v: SeifertMatrix) -> KnotDescriptor {
    KnotDescriptor::from_seifert("random", v)
}

/// Floating-point signature of `(1-ω)V + (1-ω̄)Vᵀ` at `ω = e^{iθ}`.
/// `None` when some eigenvalue is too close to zero to be trusted.
pub fn numeric_signature(v: &SeifertMatrix, theta: f64) -> Option<i64> {
    let n = v.size();
    if n == 0 {
        return Some(0);
    }
    let w = Complex::new(theta.cos(), theta.sin());
    let one = Complex::new(1.0, 0.0);
    let e = v.entries();
    let h = DMatrix::from_fn(n, n, |i, j| {
        (one - w) * e[i][j] as f64 + (one - w.conj()) * e[j][i] as f64
    });
    let norm = h.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    let eig = SymmetricEigen::new(h);
    // Backward-stable eigensolvers are accurate to a small multiple of n·ε·‖H‖.
    let tol = 1e-9 * norm * n as f64;
    let mut sig = 0;
    for &lambda in eig.eigenvalues.iter() {
        if lambda.abs() <= tol {
            return None;
        }
        sig += if lambda > 0.0 { 1 } else { -1 };
    }
    Some(sig)
}

/// `(1/π) ∫₀^π σ(e^{iθ}) dθ` by a midpoint rule with `steps` panels.
pub fn riemann_rho0(v: &SeifertMatrix, steps: usize) -> f64 {
    let h = std::f64::consts::PI / steps as f64;
    let mut acc = 0.0;
    for k in 0..steps {
        let theta = (k as f64 + 0.5) * h;
        let s = numeric_signature(v, theta)
            .or_else(|| numeric_signature(v, theta + h / 7.0))
            .expect("sample avoids jumps");
        acc += s as f64;
    }
    acc / steps as f64
}

/// `|∏_{j=1}^{n-1} Δ(e^{2πij/n})|` in floating point.
pub fn complex_cover_product(delta: &LaurentPoly, n: u64) -> f64 {
    let mut prod = 1.0;
    for j in 1..n {
        let a = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let mut z = Complex::new(0.0, 0.0);
        for (e, c) in delta.terms() {
            let c: f64 = rational_to_f64(c);
            z += Complex::new((a * e as f64).cos(), (a * e as f64).sin()) * c;
        }
        prod *= z.norm();
    }
    prod
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    let n: f64 = q.numer().to_string().parse().unwrap();
    let d: f64 = q.denom().to_string().parse().unwrap();
    n / d
}

/// The Arf invariant as the value taken most often by `q(x) = xᵀVx mod 2`.
pub fn arf_by_refinement(v: &SeifertMatrix) -> u8 {
    let n = v.size();
    let e = v.entries();
    let mut ones = 0usize;
    for mask in 0u32..(1 << n) {
        let x: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
        let mut q = 0i64;
        for i in 0..n {
            for j in 0..n {
                q += x[i] * e[i][j] * x[j];
            }
        }
        ones += q.rem_euclid(2) as usize;
    }
    u8::from(2 * ones > 1 << n)
}

/// Determinant over `Q` by Gaussian elimination with row swaps.
pub fn det_q(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let d = &f * &m[c][k];
                m[r][k] -= d;
            }
        }
    }
    det
}

/// Determinant over `Λ` by cofactor expansion.
pub fn det_lambda(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_lambda(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariants of the module presented by `m` computed from determinantal
/// divisors: `(free_rank, nonunit invariant factors)`.
pub fn determinantal_invariants(m: &LambdaMatrix) -> (usize, Vec<LaurentPoly>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut divisors = vec![LaurentPoly::one()];
    for k in 1..=rows.min(cols) {
        let mut d = LaurentPoly::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<LaurentPoly>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                d = d.gcd(&det_lambda(&minor));
            }
        }
        if d.is_zero() {
            break;
        }
        divisors.push(d);
    }
    let rank = divisors.len() - 1;
    let factors = divisors
        .windows(2)
        .map(|w| {
            w[1].exact_div(&w[0])
                .expect("d_{k-1} divides d_k")
                .normalized()
        })
        .filter(|f| !f.is_unit())
        .collect();
    (rows - rank, factors)
}

/// A random presentation with entries `a + b t` (occasionally `t⁻¹` terms).
pub fn random_presentation(rng: &mut ChaCha8Rng) -> LambdaMatrix {
    let rows = rng.gen_range(1..=4);
    let cols = rng.gen_range(1..=4);
    let entries = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        return LaurentPoly::zero();
                    }
                    let low = if rng.gen_bool(0.2) { -1 } else { 0 };
                    let coeffs: Vec<i64> = (0..2).map(|_| rng.gen_range(-3..=3)).collect();
                    LaurentPoly::from_ints(&coeffs).shift(low)
                })
                .collect()
        })
        .collect();
    LambdaMatrix::new(rows, cols, entries)
}
