//! Real-root isolation by Sturm sequences over Q.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{self, Rational};

/// An open interval `(low, high)` holding exactly one real root of a
/// square-free polynomial, whose values at both endpoints are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub low: Rational,
    pub high: Rational,
    pub polynomial: Poly,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.high - &self.low
    }

    pub fn midpoint(&self) -> Rational {
        (&self.low + &self.high) / rational::int(2)
    }

    /// Halves the interval, keeping the root inside.
    pub fn refine(&self) -> Self {
        let mid = self.midpoint();
        let p = &self.polynomial;
        let (low, high) = if p.eval(&mid).is_zero() {
            let quarter = self.width() / rational::int(4);
            (&mid - &quarter, &mid + quarter)
        } else if p.sign_at(&self.low) != p.sign_at(&mid) {
            (self.low.clone(), mid)
        } else {
            (mid, self.high.clone())
        };
        Self {
            low,
            high,
            polynomial: p.clone(),
        }
    }

    pub fn refine_to(&self, width: &Rational) -> Self {
        let mut iv = self.clone();
        while iv.width() > *width {
            iv = iv.refine();
        }
        iv
    }

    /// Re-checks the isolation claim with a fresh Sturm count.
    pub fn verify(&self) -> bool {
        let p = &self.polynomial;
        self.low < self.high
            && !p.eval(&self.low).is_zero()
            && !p.eval(&self.high).is_zero()
            && count_roots_open(&p.sturm_chain(), &self.low, &self.high) == 1
    }

    /// The exact root when the polynomial is linear.
    pub fn exact_root(&self) -> Option<Rational> {
        let p = &self.polynomial;
        (p.degree() == Some(1)).then(|| -p.coeff(0) / p.coeff(1))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.low < *x && *x < self.high
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    #[serde(with = "rational::serde_str")]
    low: Rational,
    #[serde(with = "rational::serde_str")]
    high: Rational,
    polynomial: Vec<String>,
}

impl Serialize for IsolatingInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        IntervalRepr {
            low: self.low.clone(),
            high: self.high.clone(),
            polynomial: self
                .polynomial
                .coeffs()
                .iter()
                .map(rational::to_string)
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IsolatingInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = IntervalRepr::deserialize(d)?;
        let coeffs = r
            .polynomial
            .iter()
            .map(|c| rational::parse(c))
            .collect::<crate::error::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Self {
            low: r.low,
            high: r.high,
            polynomial: Poly::new(coeffs),
        })
    }
}

/// Sign variations of the chain at `x`, zeros skipped.
pub fn variations(chain: &[Poly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct roots in the open interval `(a, b)` of the square-free head of
/// `chain`.
pub fn count_roots_open(chain: &[Poly], a: &Rational, b: &Rational) -> usize {
    let p = &chain[0];
    let n = variations(chain, a) - variations(chain, b);
    if p.eval(b).is_zero() {
        n - 1
    } else {
        n
    }
}

/// Isolates every distinct real root of `p` inside the open interval
/// `(low, high)`. The result is sorted and pairwise disjoint; intervals refer
/// to the monic square-free part of `p`.
pub fn sturm_isolate(p: &Poly, low: &Rational, high: &Rational) -> Vec<IsolatingInterval> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(low < high, "empty domain");
    let sf = p.square_free();
    if sf.degree() == Some(0) {
        return vec![];
    }
    let chain = sf.sturm_chain();

    // Move root endpoints inward past any root sitting exactly on them.
    let mut lo = low.clone();
    let mut hi = high.clone();
    if sf.eval(&lo).is_zero() {
        let mut step = (&hi - &lo) / rational::int(2);
        loop {
            let cand = &lo + &step;
            if !sf.eval(&cand).is_zero() && count_roots_open(&chain, &lo, &cand) == 0 {
                lo = cand;
                break;
            }
            step /= rational::int(2);
        }
    }
    if sf.eval(&hi).is_zero() {
        let mut step = (&hi - &lo) / rational::int(2);
        loop {
            let cand = &hi - &step;
            if !sf.eval(&cand).is_zero() && count_roots_open(&chain, &cand, &hi) == 0 {
                hi = cand;
                break;
            }
            step /= rational::int(2);
        }
    }

    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        match count_roots_open(&chain, &a, &b) {
            0 => {}
            1 => out.push(IsolatingInterval {
                low: a,
                high: b,
                polynomial: sf.clone(),
            }),
            _ => {
                let mut mid = (&a + &b) / rational::int(2);
                while sf.eval(&mid).is_zero() {
                    mid = (&a + &mid) / rational::int(2);
                }
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.low.cmp(&y.low));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    #[test]
    fn linear_root() {
        let roots = sturm_isolate(&Poly::from_ints(&[-1, 2]), &int(-1), &int(1));
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&rat(1, 2)));
        assert_eq!(roots[0].exact_root(), Some(rat(1, 2)));
    }

    #[test]
    fn roots_outside_domain() {
        let roots = sturm_isolate(&Poly::from_ints(&[-2, 0, 1]), &int(-1), &int(1));
        assert!(roots.is_empty());
    }

    #[test]
    fn endpoint_roots_are_excluded() {
        // (x - 1)(x + 1)(2x - 1)
        let p = &Poly::from_ints(&[-1, 0, 1]) * &Poly::from_ints(&[-1, 2]);
        let roots = sturm_isolate(&p, &int(-1), &int(1));
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&rat(1, 2)));
        assert!(roots[0].verify());
    }

    #[test]
    fn multiple_roots_and_refinement() {
        // (x^2 - 1/4)^2 (x - 1/3)
        let q = Poly::new(vec![rat(-1, 4), int(0), int(1)]);
        let p = &(&q * &q) * &Poly::new(vec![rat(-1, 3), int(1)]);
        let roots = sturm_isolate(&p, &int(-1), &int(1));
        assert_eq!(roots.len(), 3);
        let w = rat(1, 1 << 40);
        let fine: Vec<_> = roots.iter().map(|r| r.refine_to(&w)).collect();
        assert!(fine[0].contains(&rat(-1, 2)));
        assert!(fine[1].contains(&rat(1, 3)));
        assert!(fine[2].contains(&rat(1, 2)));
        assert!(fine.iter().all(|r| r.verify() && r.width() <= w));
    }
}
