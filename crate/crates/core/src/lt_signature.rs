//! Exact Levine–Tristram signatures.
//!
//! Points of the upper unit semicircle are parametrized by
//! `x = Re ω = (t + 1/t)/2 ∈ (-1, 1)`; angles are in units of π, so
//! `ω = e^{iπθ}` with `θ ∈ (0, 1)`. Jumps of `σ_K` sit at the roots of the
//! symmetrized Alexander polynomial. Arcs are listed by increasing angle,
//! the first one being adjacent to `ω = 1`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::cyclotomic::totient;
use crate::exactalg::interval::default_enclosure_width;
use crate::exactalg::matrix::{char_poly, descartes_inertia};
use crate::exactalg::sturm::count_roots_open;
use crate::exactalg::{
    arccos_enclosure, cyclotomic, rational, sturm_isolate, CertifiedValue, IsolatingInterval,
    LaurentPoly, Poly, Rational,
};
use crate::seifert::{KnotDescriptor, SeifertMatrix};

/// Default largest cyclotomic index tried when classifying jump angles.
pub const DEFAULT_CYCLOTOMIC_BOUND: u64 = 120;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureConfig {
    /// Width of angle enclosures for non-cyclotomic jumps.
    pub enclosure_width: Rational,
    pub cyclotomic_bound: u64,
}

impl Default for SignatureConfig {
    fn default() -> Self {
        Self {
            enclosure_width: default_enclosure_width(),
            cyclotomic_bound: DEFAULT_CYCLOTOMIC_BOUND,
        }
    }
}

/// One discontinuity of `σ_K` on the upper semicircle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Jump {
    /// Isolating interval for `x = cos(πθ)`.
    pub x_interval: IsolatingInterval,
    /// `θ` in units of π; exact for roots of unity.
    pub angle: CertifiedValue,
    /// `d` when the jump is a primitive `d`-th root of unity.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root_of_unity_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureProfile {
    pub jumps: Vec<Jump>,
    /// One value per arc, `jumps.len() + 1` in total.
    pub values: Vec<i64>,
    pub rho0: CertifiedValue,
}

impl SignatureProfile {
    pub fn zero() -> Self {
        Self {
            jumps: vec![],
            values: vec![0],
            rho0: CertifiedValue::zero(),
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn is_identically_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0)
    }

    /// Value of `σ` at `x`, or `None` when `x` is a jump abscissa.
    pub fn value_at(&self, x: &Rational) -> Option<i64> {
        let mut above = 0;
        for j in &self.jumps {
            let iv = &j.x_interval;
            if *x <= iv.low {
                above += 1;
            } else if *x < iv.high {
                let s = iv.polynomial.sign_at(x);
                if s == 0 {
                    return None;
                }
                if s == iv.polynomial.sign_at(&iv.low) {
                    above += 1;
                }
            }
        }
        Some(self.values[above])
    }
}

/// `σ_K(ω)` at `ω = x + i√(1 - x²)`, computed exactly.
///
/// With `H = A + iB`, `A = (1-x)(V + Vᵀ)`, `B = s(Vᵀ - V)`, `s² = 1 - x²`,
/// the real form `[[A, -B], [B, A]]` has twice the inertia of `H`.
/// Congruence by `diag(I, sI)` keeps the inertia and clears `s`, leaving
/// `[[A, -s²C], [s²C, s²A]]` with `C = Vᵀ - V`; its signature is read off
/// the characteristic polynomial by Descartes' rule. A zero eigenvalue means
/// `x` is a jump abscissa and is rejected.
pub fn signature_at(v: &SeifertMatrix, x: &Rational) -> Result<i64> {
    if x.abs() >= Rational::one() {
        return Err(Error::Domain(rational::to_string(x)));
    }
    let n = v.size();
    if n == 0 {
        return Ok(0);
    }
    let e = v.entries();
    let one_minus_x = Rational::one() - x;
    let r = Rational::one() - x * x;
    let mut m = vec![vec![Rational::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let a = rational::int(e[i][j] + e[j][i]) * &one_minus_x;
            let c = rational::int(e[j][i] - e[i][j]) * &r;
            m[i][j] = a.clone();
            m[n + i][n + j] = a * &r;
            m[i][n + j] = -c.clone();
            m[n + i][j] = c;
        }
    }
    // H(ω) is singular for ω ≠ 1 exactly when Δ(ω) = 0.
    let (pos, neg, zero) = descartes_inertia(&char_poly(&m));
    if zero > 0 {
        return Err(Error::AtJump(rational::to_string(x)));
    }
    let sig = pos as i64 - neg as i64;
    debug_assert!(sig % 2 == 0);
    Ok(sig / 2)
}

/// The polynomial in `x` whose roots in `(-1, 1)` are the jump abscissae.
pub fn symmetrized_alexander(delta: &LaurentPoly) -> Result<Poly> {
    delta
        .symmetrize()
        .ok_or_else(|| Error::NotSymmetric(delta.to_string()))
}

/// Angles `2k/d` (units of π) of the primitive `d`-th roots of unity on the
/// open upper semicircle, ascending.
fn primitive_angles(d: u64) -> Vec<Rational> {
    (1..d)
        .filter(|&k| 2 * k < d && num_integer::gcd(k, d) == 1)
        .map(|k| Rational::new((2 * k).into(), d.into()))
        .collect()
}

/// Exact angle of the jump isolated by `iv`, when it is a root of unity of
/// order `d ≤ bound` and `Φ_d | Δ`.
fn classify(delta: &LaurentPoly, iv: &IsolatingInterval, bound: u64) -> Option<(u64, Rational)> {
    for d in 3..=bound {
        // Φ_d has degree φ(d); skip indices that cannot divide Δ.
        if totient(d) > delta.width().unwrap_or(0) {
            continue;
        }
        let phi = cyclotomic(d);
        if !phi.divides(delta) {
            continue;
        }
        let psi = phi
            .symmetrize()
            .expect("Φ_d is palindromic of even degree for d ≥ 3");
        let chain = psi.sturm_chain();
        if count_roots_open(&chain, &iv.low, &iv.high) != 1 {
            continue;
        }
        // Roots of ψ_d are cos(2πk/d), decreasing in k; rank by how many lie above.
        let rank = count_roots_open(&chain, &iv.high, &Rational::one());
        return Some((d, primitive_angles(d)[rank].clone()));
    }
    None
}

pub fn signature_profile(k: &KnotDescriptor, cfg: &SignatureConfig) -> Result<SignatureProfile> {
    if k.signature_known_zero() {
        return Ok(SignatureProfile::zero());
    }
    let v = k.seifert()?;
    let delta = v.alexander_polynomial();
    let sym = symmetrized_alexander(&delta)?;
    let mut roots = sturm_isolate(&sym, &-Rational::one(), &Rational::one());
    roots.reverse();

    let mut jumps = Vec::with_capacity(roots.len());
    for iv in roots {
        let jump = match classify(&delta, &iv, cfg.cyclotomic_bound) {
            Some((d, theta)) => Jump {
                x_interval: iv,
                angle: CertifiedValue::exact(theta),
                root_of_unity_order: Some(d),
            },
            None => {
                let fine = iv.refine_to(&cfg.enclosure_width);
                let (lo, _) = arccos_enclosure(&fine.high, &cfg.enclosure_width)?;
                let (_, hi) = arccos_enclosure(&fine.low, &cfg.enclosure_width)?;
                Jump {
                    x_interval: iv,
                    angle: CertifiedValue::interval(lo, hi),
                    root_of_unity_order: None,
                }
            }
        };
        jumps.push(jump);
    }

    let mut values = vec![0i64];
    for i in 0..jumps.len() {
        let upper = &jumps[i].x_interval;
        let sample = match jumps.get(i + 1) {
            Some(next) => (&next.x_interval.high + &upper.low) / rational::int(2),
            None => {
                let mut iv = upper.clone();
                while iv.low <= -Rational::one() {
                    iv = iv.refine();
                }
                (&iv.low - Rational::one()) / rational::int(2)
            }
        };
        values.push(signature_at(v, &sample)?);
    }

    // ρ₀ = Σ_i v_i (θ_{i+1} - θ_i) = v_last + Σ_j θ_j (v_{j-1} - v_j)
    let mut rho0 = CertifiedValue::integer(*values.last().unwrap());
    for (j, jump) in jumps.iter().enumerate() {
        let step = rational::int(values[j] - values[j + 1]);
        rho0 = &rho0 + &jump.angle.scale(&step);
    }
    Ok(SignatureProfile {
        jumps,
        values,
        rho0,
    })
}

pub fn rho0(k: &KnotDescriptor, cfg: &SignatureConfig) -> Result<CertifiedValue> {
    Ok(signature_profile(k, cfg)?.rho0)
}

pub fn max_abs_signature(k: &KnotDescriptor, cfg: &SignatureConfig) -> Result<i64> {
    Ok(signature_profile(k, cfg)?.max_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn knot(rows: &[&[i64]]) -> KnotDescriptor {
        KnotDescriptor::from_seifert(
            "k",
            SeifertMatrix::validate(rows.iter().map(|r| r.to_vec()).collect()).unwrap(),
        )
    }

    fn right_trefoil() -> KnotDescriptor {
        knot(&[&[-1, 1], &[0, -1]])
    }

    #[test]
    fn pointwise_values() {
        let rt = right_trefoil();
        assert_eq!(signature_at(rt.seifert().unwrap(), &int(0)).unwrap(), -2);
        assert_eq!(
            signature_at(rt.seifert().unwrap(), &rat(9999, 10000)).unwrap(),
            0
        );
        let n46 = knot(&[&[0, 2], &[1, 0]]);
        assert_eq!(signature_at(n46.seifert().unwrap(), &int(0)).unwrap(), 0);
    }

    #[test]
    fn pointwise_errors() {
        let v = right_trefoil();
        let v = v.seifert().unwrap();
        assert!(matches!(signature_at(v, &rat(1, 2)), Err(Error::AtJump(_))));
        assert!(matches!(signature_at(v, &int(1)), Err(Error::Domain(_))));
        assert!(matches!(
            signature_at(v, &rat(-3, 2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn left_trefoil_profile() {
        let lt = right_trefoil().mirror().unwrap();
        let p = signature_profile(&lt, &SignatureConfig::default()).unwrap();
        assert_eq!(p.jumps.len(), 1);
        assert!(p.jumps[0].x_interval.contains(&rat(1, 2)));
        assert_eq!(p.jumps[0].angle, CertifiedValue::exact(rat(1, 3)));
        assert_eq!(p.jumps[0].root_of_unity_order, Some(6));
        assert_eq!(p.values, vec![0, 2]);
        assert_eq!(p.rho0, CertifiedValue::exact(rat(4, 3)));
        assert_eq!(p.value_at(&int(0)), Some(2));
        assert_eq!(p.value_at(&rat(3, 4)), Some(0));
        assert_eq!(p.value_at(&rat(1, 2)), None);
    }

    #[test]
    fn figure_eight_and_unknot() {
        let cfg = SignatureConfig::default();
        let fig8 = knot(&[&[1, 1], &[0, -1]]);
        let p = signature_profile(&fig8, &cfg).unwrap();
        assert!(p.jumps.is_empty());
        assert_eq!(p, SignatureProfile::zero());
        assert_eq!(
            signature_profile(&KnotDescriptor::unknot(), &cfg).unwrap(),
            SignatureProfile::zero()
        );
    }

    #[test]
    fn max_abs_values() {
        let cfg = SignatureConfig::default();
        assert_eq!(max_abs_signature(&right_trefoil(), &cfg).unwrap(), 2);
        let three = right_trefoil().connected_sum_power(3).unwrap();
        assert_eq!(max_abs_signature(&three, &cfg).unwrap(), 6);
        assert_eq!(
            max_abs_signature(&knot(&[&[0, 2], &[1, 0]]), &cfg).unwrap(),
            0
        );
    }

    #[test]
    fn non_cyclotomic_jumps_get_intervals() {
        // Δ = 2t² - 3t + 2: roots on the unit circle at x = 3/4, not roots of unity.
        let k = knot(&[&[1, 1], &[0, 2]]);
        assert_eq!(
            k.alexander_polynomial(),
            LaurentPoly::from_ints(&[2, -3, 2])
        );
        let cfg = SignatureConfig::default();
        let p = signature_profile(&k, &cfg).unwrap();
        assert_eq!(p.jumps.len(), 1);
        assert!(!p.rho0.is_exact());
        assert!(p.rho0.upper() - p.rho0.lower() <= &cfg.enclosure_width * int(10));
        // θ = arccos(3/4)/π ≈ 0.230053456, σ = 2 beyond it: ρ₀ ≈ 2(1 - θ)
        use num_traits::ToPrimitive;
        let approx = 2.0 * (1.0 - (0.75f64).acos() / std::f64::consts::PI);
        assert!((p.rho0.lower().to_f64().unwrap() - approx).abs() < 1e-12);
        assert_eq!(p.values, vec![0, 2]);
    }

    #[test]
    fn surrogates_use_zero_profile() {
        use crate::lambda_modules::LambdaMatrix;
        let phi = cyclotomic(30);
        let s = KnotDescriptor::surrogate("r", LambdaMatrix::diagonal(vec![phi.clone(), phi]));
        assert_eq!(
            signature_profile(&s, &SignatureConfig::default()).unwrap(),
            SignatureProfile::zero()
        );
    }
}
