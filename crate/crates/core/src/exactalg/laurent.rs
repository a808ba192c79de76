//! Laurent polynomials over Q, the ring Λ = Q[t, 1/t].
//!
//! Two normal forms are used:
//!
//! * [`LaurentPoly::canonical`] divides out units `±t^k` only. This is the
//!   form in which Alexander polynomials are reported (`2t^2 - 5t + 2`).
//! * [`LaurentPoly::normalized`] divides out every unit of Λ, i.e. also
//!   nonzero rational scalars, and picks the primitive integer
//!   representative. Gcds and invariant factors live in this form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients starting at `t^0`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (k as i64, rational::int(c))),
        )
    }

    pub fn from_poly(shift: i64, p: &Poly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (shift + k as i64, c.clone())),
        )
    }

    /// `(lowest exponent, polynomial part)` with `self = t^shift * poly`.
    pub fn to_poly(&self) -> (i64, Poly) {
        let Some(low) = self.low_exp() else {
            return (0, Poly::zero());
        };
        let high = self.high_exp().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, Poly::new(coeffs))
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of Λ are the nonzero monomials `c t^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn low_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Span `high - low`; the Euclidean degree of Λ. `None` for zero.
    pub fn width(&self) -> Option<u64> {
        Some((self.high_exp()? - self.low_exp()?) as u64)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Associate under `±t^k`: lowest exponent 0, positive leading coefficient.
    pub fn canonical(&self) -> Self {
        let Some(low) = self.low_exp() else {
            return Self::zero();
        };
        let p = self.shift(-low);
        if self.leading_coeff().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }

    /// Associate under all units of Λ: the canonical form rescaled to a
    /// primitive integer polynomial.
    pub fn normalized(&self) -> Self {
        let (_, p) = self.to_poly();
        Self::from_poly(0, &p.primitive())
    }

    /// Equality up to units of Λ.
    pub fn associates(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Equality up to `±t^k`.
    pub fn associates_pm(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        assert!(
            !x.is_zero() || self.low_exp().unwrap_or(0) >= 0,
            "negative powers evaluated at 0"
        );
        self.terms
            .iter()
            .map(|(e, c)| c * pow_i(x, *e))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The involution `t -> 1/t`.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division in Λ: `self = q * d + r` with `width(r) < width(d)`
    /// or `r = 0`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let (sa, a) = self.to_poly();
        let (sd, dp) = d.to_poly();
        let (q, r) = a.div_rem(&dp);
        (Self::from_poly(sa - sd, &q), Self::from_poly(sa, &r))
    }

    /// Exact quotient when `d` divides `self` in Λ.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Divisibility in Λ; zero divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Normalized gcd in Λ. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, a) = self.to_poly();
        let (_, b) = other.to_poly();
        Self::from_poly(0, &a.gcd(&b).primitive())
    }

    /// Normalized lcm in Λ; zero if either input is zero.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self * other).exact_div(&g).unwrap().normalized()
    }

    /// Whether `t^{-c}·p(t)` is invariant under `t -> 1/t` for the centre `c`
    /// of the exponent range, i.e. the coefficient list is a palindrome.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.low_exp(), self.high_exp()) else {
            return true;
        };
        self.terms
            .iter()
            .all(|(e, c)| self.coeff(lo + hi - e) == *c)
    }

    /// For a palindrome of even width `2m`, the polynomial `q` with
    /// `t^{-m-low}·p(t) = q((t + 1/t)/2)`. Built from Chebyshev polynomials,
    /// using `t^k + t^-k = 2 T_k(x)`.
    pub fn symmetrize(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let width = self.width().unwrap();
        if !width.is_multiple_of(2) || !self.is_palindromic() {
            return None;
        }
        let m = (width / 2) as i64;
        let centre = self.low_exp().unwrap() + m;
        let cheb = chebyshev_t(m as usize);
        let two = rational::int(2);
        let mut q = Poly::constant(self.coeff(centre));
        for k in 1..=m {
            let c = self.coeff(centre + k);
            if !c.is_zero() {
                q = &q + &cheb[k as usize].scale(&(&c * &two));
            }
        }
        Some(q)
    }
}

/// `T_0 .. T_n`.
pub fn chebyshev_t(n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(), Poly::x()];
    let two_x = Poly::monomial(rational::int(2), 1);
    while out.len() <= n {
        let k = out.len();
        let next = &(&two_x * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

fn pow_i(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Shared formatter: terms given in ascending exponent order, printed
/// descending, e.g. `2t^2 - 5t + 2`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: DoubleEndedIterator<Item = (i64, &'a Rational)>,
{
    let mut first = true;
    for (e, c) in terms.rev() {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let coeff = rational::to_string(&abs);
        let coeff = if abs.denom().is_one() {
            coeff
        } else {
            format!("({coeff})")
        };
        match e {
            0 => write!(f, "{coeff}")?,
            _ => {
                if !abs.is_one() {
                    write!(f, "{coeff}")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (*e, c)), "t")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

/// `{"exponent": "numerator/denominator"}`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &rational::to_string(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let e: i64 = e
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            terms.push((e, rational::parse(&c).map_err(D::Error::custom)?));
        }
        Ok(Self::from_terms(terms))
    }
}
