//! The Arf invariant and stable double sliceness.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::seifert::{determinant, KnotDescriptor};

/// Arf invariant, 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct ArfValue(bool);

impl ArfValue {
    pub const ZERO: Self = Self(false);
    pub const ONE: Self = Self(true);

    pub fn value(self) -> u8 {
        self.0 as u8
    }

    pub fn is_zero(self) -> bool {
        !self.0
    }
}

impl Add for ArfValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl From<ArfValue> for u8 {
    fn from(a: ArfValue) -> u8 {
        a.value()
    }
}

impl TryFrom<u8> for ArfValue {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(Self::ZERO),
            1 => Ok(Self::ONE),
            _ => Err(format!("Arf invariant must be 0 or 1, got {v}")),
        }
    }
}

impl fmt::Display for ArfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Levine's criterion: `Arf(K) = 0` iff `Δ_K(-1) ≡ ±1 (mod 8)`.
pub fn arf(k: &KnotDescriptor) -> ArfValue {
    let r = determinant(k).abs().mod_floor(&BigInt::from(8));
    ArfValue(!(r == BigInt::from(1) || r == BigInt::from(7)))
}

/// A knot is stably doubly slice exactly when its Arf invariant vanishes.
pub fn is_stably_doubly_slice(k: &KnotDescriptor) -> bool {
    arf(k).is_zero()
}
