//! Homology orders of branched cyclic covers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::cyclotomic::prime_powers_up_to;
use crate::exactalg::resultant::poly_resultant;
use crate::exactalg::Poly;
use crate::seifert::KnotDescriptor;

/// `|H₁(Σ_n)|`, or infinite when the first Betti number is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoverOrder {
    Finite(BigInt),
    Infinite,
}

impl CoverOrder {
    pub fn is_trivial(&self) -> bool {
        matches!(self, CoverOrder::Finite(n) if n.is_one())
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            CoverOrder::Finite(n) => Some(n),
            CoverOrder::Infinite => None,
        }
    }
}

impl fmt::Display for CoverOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverOrder::Finite(n) => write!(f, "{n}"),
            CoverOrder::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for CoverOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CoverOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "infinite" {
            return Ok(CoverOrder::Infinite);
        }
        let n: BigInt = s.parse().map_err(serde::de::Error::custom)?;
        if !n.is_positive() {
            return Err(serde::de::Error::custom("cover order must be positive"));
        }
        Ok(CoverOrder::Finite(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverOrderReport {
    pub n: u64,
    pub order: CoverOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverScreen {
    pub reports: Vec<CoverOrderReport>,
    pub all_trivial: bool,
}

/// `1 + t + ... + t^{n-1}`.
fn cyclic_norm_poly(n: u64) -> Poly {
    Poly::from_ints(&vec![1; n as usize])
}

/// `|∏_{j=1}^{n-1} Δ(ζ_n^j)|` computed as a resultant.
pub fn branched_cover_order(k: &KnotDescriptor, n: u64) -> Result<CoverOrderReport> {
    if n < 2 {
        return Err(Error::CoverDegree(n));
    }
    let (_, delta) = k.alexander_polynomial().canonical().to_poly();
    let res = poly_resultant(&cyclic_norm_poly(n), &delta);
    let order = if res.is_zero() {
        CoverOrder::Infinite
    } else {
        debug_assert!(res.is_integer());
        CoverOrder::Finite(res.to_integer().abs())
    };
    Ok(CoverOrderReport { n, order })
}

/// Cover orders at every prime power `n ≤ bound`.
pub fn prime_power_cover_screen(k: &KnotDescriptor, bound: u64) -> Result<CoverScreen> {
    let reports = prime_powers_up_to(bound)
        .into_iter()
        .map(|n| branched_cover_order(k, n))
        .collect::<Result<Vec<_>>>()?;
    let all_trivial = reports.iter().all(|r| r.order.is_trivial());
    Ok(CoverScreen {
        reports,
        all_trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyclotomic::cyclotomic;
    use crate::lambda_modules::LambdaMatrix;
    use crate::seifert::SeifertMatrix;

    fn knot(rows: &[&[i64]]) -> KnotDescriptor {
        let v = SeifertMatrix::validate(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        KnotDescriptor::from_seifert("k", v)
    }

    fn order(k: &KnotDescriptor, n: u64) -> CoverOrder {
        branched_cover_order(k, n).unwrap().order
    }

    fn fin(n: i64) -> CoverOrder {
        CoverOrder::Finite(BigInt::from(n))
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let trefoil = knot(&[&[-1, 1], &[0, -1]]);
        assert_eq!(order(&trefoil, 2), fin(3));
        assert_eq!(order(&trefoil, 3), fin(4));
        assert_eq!(order(&trefoil, 6), CoverOrder::Infinite);
        assert_eq!(order(&knot(&[&[1, 1], &[0, -1]]), 2), fin(5));
        assert_eq!(order(&knot(&[&[0, 2], &[1, 0]]), 2), fin(9));
        assert_eq!(
            branched_cover_order(&trefoil, 1),
            Err(Error::CoverDegree(1))
        );
    }

    #[test]
    fn surrogate_screen() {
        let phi = cyclotomic(30);
        let k = KnotDescriptor::surrogate("r", LambdaMatrix::diagonal(vec![phi.clone(), phi]));
        let screen = prime_power_cover_screen(&k, 32).unwrap();
        let ns: Vec<u64> = screen.reports.iter().map(|r| r.n).collect();
        assert_eq!(
            ns,
            [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
        assert!(screen.all_trivial);
        let unknot = prime_power_cover_screen(&KnotDescriptor::unknot(), 32).unwrap();
        assert!(unknot.all_trivial);
    }

    #[test]
    fn serde_strings() {
        let r = CoverOrderReport {
            n: 6,
            order: CoverOrder::Infinite,
        };
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"n":6,"order":"infinite"}"#);
        let r2 = CoverOrderReport {
            n: 2,
            order: fin(3),
        };
        assert_eq!(
            serde_json::to_string(&r2).unwrap(),
            r#"{"n":2,"order":"3"}"#
        );
        assert_eq!(serde_json::from_str::<CoverOrderReport>(&s).unwrap(), r);
    }
}
