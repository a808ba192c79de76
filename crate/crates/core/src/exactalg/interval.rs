//! Certified values and rational enclosures of `arccos`.
//!
//! Angles are measured in units of π throughout, so `arccos(1/2) = 1/3`
//! and the full circle has measure 2.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Default width of arccos enclosures: 10^-30.
pub fn default_enclosure_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(30))
}

/// An exact rational, or a closed rational interval known to contain the
/// true value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertifiedValue {
    Exact(#[serde(with = "rational::serde_str")] Rational),
    Interval(#[serde(with = "pair")] (Rational, Rational)),
}

mod pair {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        v: &(Rational, Rational),
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        [rational::to_string(&v.0), rational::to_string(&v.1)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<(Rational, Rational), D::Error> {
        let [lo, hi] = <[String; 2]>::deserialize(d)?;
        let lo = rational::parse(&lo).map_err(serde::de::Error::custom)?;
        let hi = rational::parse(&hi).map_err(serde::de::Error::custom)?;
        if lo > hi {
            return Err(serde::de::Error::custom(
                "interval lower bound exceeds upper bound",
            ));
        }
        Ok((lo, hi))
    }
}

/// Outcome of a certified comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Inconclusive,
}

impl CertifiedValue {
    pub fn exact(q: Rational) -> Self {
        Self::Exact(q)
    }

    pub fn integer(n: i64) -> Self {
        Self::Exact(rational::int(n))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    /// Collapses degenerate intervals to exact values.
    pub fn interval(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval lower bound exceeds upper bound");
        if lo == hi {
            Self::Exact(lo)
        } else {
            Self::Interval((lo, hi))
        }
    }

    pub fn lower(&self) -> &Rational {
        match self {
            Self::Exact(q) => q,
            Self::Interval((lo, _)) => lo,
        }
    }

    pub fn upper(&self) -> &Rational {
        match self {
            Self::Exact(q) => q,
            Self::Interval((_, hi)) => hi,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Self::Exact(q) => Some(q),
            Self::Interval(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact(_))
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.lower() <= q && q <= self.upper()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let (a, b) = (self.lower() * c, self.upper() * c);
        if a <= b {
            Self::interval(a, b)
        } else {
            Self::interval(b, a)
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Strict `self > other`, decided only when the enclosures separate.
    pub fn gt(&self, other: &Self) -> Truth {
        if self.lower() > other.upper() {
            Truth::True
        } else if self.upper() <= other.lower() {
            Truth::False
        } else {
            Truth::Inconclusive
        }
    }

    /// `self ≥ other`.
    pub fn ge(&self, other: &Self) -> Truth {
        if self.lower() >= other.upper() {
            Truth::True
        } else if self.upper() < other.lower() {
            Truth::False
        } else {
            Truth::Inconclusive
        }
    }
}

impl fmt::Display for CertifiedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(q) => write!(f, "{}", rational::to_string(q)),
            Self::Interval((lo, hi)) => write!(
                f,
                "[{}, {}]",
                rational::to_string(lo),
                rational::to_string(hi)
            ),
        }
    }
}

impl Add<&CertifiedValue> for &CertifiedValue {
    type Output = CertifiedValue;
    fn add(self, rhs: &CertifiedValue) -> CertifiedValue {
        CertifiedValue::interval(self.lower() + rhs.lower(), self.upper() + rhs.upper())
    }
}

impl Sub<&CertifiedValue> for &CertifiedValue {
    type Output = CertifiedValue;
    fn sub(self, rhs: &CertifiedValue) -> CertifiedValue {
        CertifiedValue::interval(self.lower() - rhs.upper(), self.upper() - rhs.lower())
    }
}

/// Closed integer interval `[lo, hi]` at scale `2^-bits`.
#[derive(Clone, Debug)]
struct Fixed {
    lo: BigInt,
    hi: BigInt,
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// Enclosure of `arctan(1/k)` for an integer `k ≥ 2`.
fn arctan_inv(k: u64, bits: u64) -> Fixed {
    let one = pow2(bits);
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut kpow = k.clone();
    let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
    let mut j = 0u64;
    loop {
        let d = &kpow * BigInt::from(2 * j + 1);
        let (tl, th) = (one.div_floor(&d), ceil_div(&one, &d));
        if th <= BigInt::one() {
            // Alternating series with decreasing terms: tail bounded by next term.
            lo -= &th;
            hi += &th;
            break;
        }
        if j.is_multiple_of(2) {
            lo += &tl;
            hi += &th;
        } else {
            lo -= &th;
            hi -= &tl;
        }
        kpow *= &k2;
        j += 1;
    }
    Fixed { lo, hi }
}

/// Machin: π = 16 arctan(1/5) - 4 arctan(1/239).
fn pi_fixed(bits: u64) -> Fixed {
    let a = arctan_inv(5, bits);
    let b = arctan_inv(239, bits);
    Fixed {
        lo: BigInt::from(16) * &a.lo - BigInt::from(4) * &b.hi,
        hi: BigInt::from(16) * &a.hi - BigInt::from(4) * &b.lo,
    }
}

/// Enclosure of `cos(z)` for the exact point `z = zi / 2^bits`, `0 ≤ z < 4`.
fn cos_point(zi: &BigInt, bits: u64) -> Fixed {
    let one = pow2(bits);
    let zz = zi * zi;
    let z2l = zz.div_floor(&one);
    let z2h = ceil_div(&zz, &one);
    let (mut tl, mut th) = (one.clone(), one.clone());
    let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
    let mut k = 0u64;
    loop {
        if k >= 2 && th <= BigInt::one() {
            lo -= &th;
            hi += &th;
            break;
        }
        if k.is_multiple_of(2) {
            lo += &tl;
            hi += &th;
        } else {
            lo -= &th;
            hi -= &tl;
        }
        k += 1;
        let d = &one * BigInt::from((2 * k - 1) * (2 * k));
        tl = (&tl * &z2l).div_floor(&d);
        th = ceil_div(&(&th * &z2h), &d);
    }
    Fixed { lo, hi }
}

/// Enclosure of `cos(π m)` for rational `m ∈ [0, 1]`, at scale `2^-bits`.
fn cos_pi(m: &Rational, bits: u64) -> Fixed {
    let pi = pi_fixed(bits);
    let zl = (Rational::from_integer(pi.lo.clone()) * m)
        .floor()
        .to_integer();
    let zh = (Rational::from_integer(pi.hi.clone()) * m)
        .ceil()
        .to_integer();
    let zl = zl.max(BigInt::zero());
    let upper = cos_point(&zl, bits).hi;
    let lower = if zh >= pi.lo {
        -pow2(bits)
    } else {
        cos_point(&zh, bits).lo
    };
    Fixed {
        lo: lower,
        hi: upper,
    }
}

fn exact_arccos(x: &Rational) -> Option<Rational> {
    let table = [
        (rational::int(1), rational::int(0)),
        (rational::rat(1, 2), rational::rat(1, 3)),
        (rational::int(0), rational::rat(1, 2)),
        (rational::rat(-1, 2), rational::rat(2, 3)),
        (rational::int(-1), rational::int(1)),
    ];
    table
        .into_iter()
        .find(|(c, _)| c == x)
        .map(|(_, theta)| theta)
}

/// Rational interval of width at most `width` containing `arccos(x) / π`.
///
/// The five rational points with rational arccos/π (`0, ±1/2, ±1`) are
/// returned as degenerate intervals.
pub fn arccos_enclosure(x: &Rational, width: &Rational) -> Result<(Rational, Rational)> {
    if x.abs() > Rational::one() {
        return Err(Error::Domain(rational::to_string(x)));
    }
    assert!(width.is_positive(), "enclosure width must be positive");
    if let Some(theta) = exact_arccos(x) {
        return Ok((theta.clone(), theta));
    }
    let width_bits = {
        let mut b = 0u64;
        let mut w = Rational::one();
        while &w > width {
            w /= rational::int(2);
            b += 1;
        }
        b
    };
    // arccos is square-root flat near ±1, hence the doubled precision.
    let mut bits = 2 * width_bits + 64;
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / rational::int(2);
        loop {
            let c = cos_pi(&mid, bits);
            let scale = Rational::from_integer(pow2(bits));
            let target = x * &scale;
            if Rational::from_integer(c.lo.clone()) > target {
                lo = mid;
                break;
            }
            if Rational::from_integer(c.hi.clone()) < target {
                hi = mid;
                break;
            }
            // cos(π·mid) is irrational unless mid hits a special angle,
            // so more precision always separates it from x eventually.
            bits *= 2;
            assert!(bits < 1 << 24, "arccos bisection failed to separate");
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn to_f64(q: &Rational) -> f64 {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap()
    }

    #[test]
    fn special_angles_exact() {
        let w = default_enclosure_width();
        assert_eq!(arccos_enclosure(&int(1), &w).unwrap(), (int(0), int(0)));
        assert_eq!(
            arccos_enclosure(&int(0), &w).unwrap(),
            (rat(1, 2), rat(1, 2))
        );
        assert_eq!(
            arccos_enclosure(&rat(1, 2), &w).unwrap(),
            (rat(1, 3), rat(1, 3))
        );
        assert_eq!(arccos_enclosure(&int(-1), &w).unwrap(), (int(1), int(1)));
    }

    #[test]
    fn domain_error() {
        assert!(arccos_enclosure(&rat(3, 2), &rat(1, 10)).is_err());
    }

    #[test]
    fn pi_digits() {
        let p = pi_fixed(200);
        let scale = Rational::from_integer(pow2(200));
        let lo = Rational::from_integer(p.lo) / &scale;
        let hi = Rational::from_integer(p.hi) / &scale;
        // 3.14159265358979323846264338327950288...
        let pi_approx = Rational::new(
            "314159265358979323846264338327950288".parse().unwrap(),
            BigInt::from(10u32).pow(35),
        );
        let eps = rat(1, 1_000_000_000_000_000);
        assert!(lo <= hi);
        assert!(&hi - &lo < eps);
        assert!((&lo - &pi_approx).abs() < eps);
    }

    #[test]
    fn generic_values_match_float() {
        let w = default_enclosure_width();
        for (n, d) in [(1, 3), (-2, 7), (9, 10), (-99, 100), (1, 1000)] {
            let x = rat(n, d);
            let (lo, hi) = arccos_enclosure(&x, &w).unwrap();
            assert!(&hi - &lo <= w);
            let f = (n as f64 / d as f64).acos() / std::f64::consts::PI;
            assert!((to_f64(&lo) - f).abs() < 1e-12, "x = {n}/{d}");
        }
    }

    #[test]
    fn comparisons() {
        let a = CertifiedValue::interval(rat(1, 3), rat(1, 2));
        assert_eq!(a.gt(&CertifiedValue::zero()), Truth::True);
        assert_eq!(a.gt(&CertifiedValue::exact(rat(2, 5))), Truth::Inconclusive);
        assert_eq!(a.gt(&CertifiedValue::exact(rat(1, 2))), Truth::False);
        assert_eq!(
            CertifiedValue::exact(rat(4, 3)).gt(&CertifiedValue::exact(rat(4, 3))),
            Truth::False
        );
    }

    #[test]
    fn json_forms() {
        let e = CertifiedValue::exact(rat(4, 3));
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"exact":"4/3"}"#);
        let i = CertifiedValue::interval(rat(1, 3), int(1));
        assert_eq!(
            serde_json::to_string(&i).unwrap(),
            r#"{"interval":["1/3","1"]}"#
        );
        let back: CertifiedValue = serde_json::from_str(r#"{"interval":["1/3","1"]}"#).unwrap();
        assert_eq!(back, i);
    }
}
