//! Satellite families built from a pattern, an axis class and a companion.
//!
//! A winding-number-zero infection along an axis in the commutator subgroup
//! leaves the Seifert form unchanged, so a family is stored as the Seifert
//! data of its pattern plus bookkeeping for the infection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cli_io::builtin;
use crate::error::{Error, Result};
use crate::exactalg::rational::{self, int, rat};
use crate::exactalg::{cyclotomic, CertifiedValue, LaurentPoly, Rational, Truth};
use crate::lambda_modules::LambdaMatrix;
use crate::lt_signature::{rho0, SignatureConfig};
use crate::seifert::KnotDescriptor;

/// Cha's per-crossing constant for the universal Cheeger–Gromov bound.
pub const CHA_CONSTANT: u64 = 69_713_280;

/// `69713280 · c`, a universal bound on `|ρ⁽²⁾|` for the zero-surgery of a
/// knot with `c` crossings.
pub fn cheeger_gromov_bound(crossings: u64) -> Rational {
    Rational::from_integer(BigInt::from(CHA_CONSTANT) * BigInt::from(crossings))
}

/// `#^copies base`, kept symbolic so that astronomically many copies stay
/// cheap. `ρ₀` is additive under connected sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Companion {
    pub base: KnotDescriptor,
    #[serde(with = "rational::serde_bigint")]
    pub copies: BigInt,
}

impl Companion {
    pub fn single(base: KnotDescriptor) -> Self {
        Self {
            base,
            copies: BigInt::from(1),
        }
    }

    pub fn rho0(&self, cfg: &SignatureConfig) -> Result<CertifiedValue> {
        Ok(rho0(&self.base, cfg)?.scale(&Rational::from_integer(self.copies.clone())))
    }

    /// The explicit connected sum, when it has at most `limit` summands.
    pub fn materialize(&self, limit: usize) -> Option<KnotDescriptor> {
        let n: usize = (&self.copies).try_into().ok()?;
        (n <= limit).then(|| self.base.connected_sum_power(n).ok())?
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfectionDatum {
    pub axis_primary: LaurentPoly,
    pub axis_count: u64,
    pub companion: Companion,
    pub companion_rho0: CertifiedValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyKind {
    ThmC { g: u64, n: u64 },
    ThmD { g: u64 },
    Satellite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr")]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub pattern: KnotDescriptor,
    pub copies: u64,
    pub infection: InfectionDatum,
    pub pattern_slack_per_copy: CertifiedValue,
    pub seifert_level: KnotDescriptor,
    /// The value `companion_rho0` must strictly exceed, when the family
    /// was built to clear one.
    pub rho0_threshold: Option<CertifiedValue>,
}

#[derive(Deserialize)]
struct FamilyRepr {
    kind: FamilyKind,
    pattern: KnotDescriptor,
    copies: u64,
    infection: InfectionDatum,
    pattern_slack_per_copy: CertifiedValue,
    seifert_level: KnotDescriptor,
    rho0_threshold: Option<CertifiedValue>,
}

impl TryFrom<FamilyRepr> for FamilyDescriptor {
    type Error = Error;
    fn try_from(r: FamilyRepr) -> Result<Self> {
        let f = Self {
            kind: r.kind,
            pattern: r.pattern,
            copies: r.copies,
            infection: r.infection,
            pattern_slack_per_copy: r.pattern_slack_per_copy,
            seifert_level: r.seifert_level,
            rho0_threshold: r.rho0_threshold,
        };
        f.validate(&SignatureConfig::default())?;
        Ok(f)
    }
}

impl FamilyDescriptor {
    /// Re-checks every structural invariant, recomputing the companion's `ρ₀`.
    pub fn validate(&self, cfg: &SignatureConfig) -> Result<()> {
        let inf = &self.infection;
        let pattern_module = self.pattern.alexander_module();
        if !inf.axis_primary.divides(&pattern_module.order()?) {
            return Err(Error::AxisDivisibility(inf.axis_primary.to_string()));
        }
        let level = self.seifert_level.alexander_module();
        let expected = (1..self.copies).fold(pattern_module.clone(), |acc, _| {
            acc.direct_sum(&pattern_module)
        });
        if level != expected {
            return Err(Error::Schema(
                "seifert_level module is not the copies-fold sum of the pattern module".into(),
            ));
        }
        let multiplicity = level.primary_multiplicity(&inf.axis_primary)?;
        if inf.axis_count == 0 || inf.axis_count > multiplicity as u64 {
            return Err(Error::AxisCount {
                axis_count: inf.axis_count,
                multiplicity,
                primary: inf.axis_primary.to_string(),
            });
        }
        match self.pattern_slack_per_copy.ge(&CertifiedValue::zero()) {
            Truth::True => {}
            _ => {
                return Err(Error::NegativeSlack(
                    self.pattern_slack_per_copy.to_string(),
                ))
            }
        }
        if self
            .pattern_slack_per_copy
            .as_exact()
            .is_some_and(Zero::is_zero)
            && self.pattern.ribbon != Some(true)
            && !matches!(self.kind, FamilyKind::ThmD { .. })
        {
            return Err(Error::SlackWithoutRibbon);
        }
        let recomputed = inf.companion.rho0(cfg)?;
        let agrees = match (recomputed.as_exact(), inf.companion_rho0.as_exact()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => {
                recomputed.lower() <= inf.companion_rho0.upper()
                    && inf.companion_rho0.lower() <= recomputed.upper()
            }
            _ => false,
        };
        if !agrees {
            return Err(Error::CompanionRho0 {
                recorded: inf.companion_rho0.to_string(),
                recomputed: recomputed.to_string(),
            });
        }
        Ok(())
    }

    /// `ρ₀(J) − copies · slack`, the lower bound on `ρ⁽²⁾` the proofs use.
    pub fn effective_rho(&self) -> CertifiedValue {
        let slack = self
            .pattern_slack_per_copy
            .scale(&Rational::from_integer(BigInt::from(self.copies)));
        &self.infection.companion_rho0 - &slack
    }

    /// `companion_rho0 − rho0_threshold`.
    pub fn margin(&self) -> Option<CertifiedValue> {
        self.rho0_threshold
            .as_ref()
            .map(|t| &self.infection.companion_rho0 - t)
    }
}

fn left_trefoil() -> KnotDescriptor {
    builtin("left_trefoil").expect("built-in table entry")
}

fn nine_46() -> KnotDescriptor {
    builtin("9_46").expect("built-in table entry")
}

/// `2t − 1`, the class of the axis in the 9₄₆ pattern.
pub fn nine_46_axis() -> LaurentPoly {
    LaurentPoly::from_ints(&[-1, 2])
}

/// Module-level stand-in for `R # (-R)` with `H₁(M(R);Λ) ≅ Λ/⟨Φ₃₀⟩`.
pub fn thm_d_pattern() -> KnotDescriptor {
    let phi = cyclotomic(30);
    KnotDescriptor::surrogate("R#-R", LambdaMatrix::diagonal(vec![phi.clone(), phi]))
}

fn build(
    kind: FamilyKind,
    pattern: KnotDescriptor,
    copies: u64,
    axis_primary: LaurentPoly,
    companion: Companion,
    slack: CertifiedValue,
    threshold: Option<CertifiedValue>,
) -> Result<FamilyDescriptor> {
    let cfg = SignatureConfig::default();
    let companion_rho0 = companion.rho0(&cfg)?;
    let seifert_level = pattern.connected_sum_power(copies as usize)?;
    let f = FamilyDescriptor {
        kind,
        pattern,
        copies,
        infection: InfectionDatum {
            axis_primary,
            axis_count: copies,
            companion,
            companion_rho0,
        },
        pattern_slack_per_copy: slack,
        seifert_level,
        rho0_threshold: threshold,
    };
    f.validate(&cfg)?;
    Ok(f)
}

/// Smallest `N ≥ 1` with `4N/3 > bound`.
fn min_trefoils(bound: &Rational) -> BigInt {
    let n: BigInt = rational::floor(&(bound * rat(3, 4))) + 1;
    n.max(BigInt::from(1))
}

/// `#^{2g+n+1}` copies of 9₄₆ infected along `2t − 1` by `#^N` left
/// trefoils with `N = ⌊3g + 3n/2⌋ + 1`.
pub fn thm_c_family(g: u64, n: u64) -> Result<FamilyDescriptor> {
    let threshold = int(4 * g as i64 + 2 * n as i64);
    let copies = BigInt::from(6 * g + 3 * n).div_floor(&BigInt::from(2)) + 1;
    debug_assert_eq!(copies, min_trefoils(&threshold));
    let f = build(
        FamilyKind::ThmC { g, n },
        nine_46(),
        2 * g + n + 1,
        nine_46_axis(),
        Companion {
            base: left_trefoil(),
            copies,
        },
        CertifiedValue::zero(),
        Some(CertifiedValue::exact(threshold)),
    )?;
    debug_assert_eq!(
        f.margin().map(|m| m.gt(&CertifiedValue::zero())),
        Some(Truth::True)
    );
    Ok(f)
}

/// The `R#(−R)` family with caller-supplied slack bound `d` per copy;
/// `N` is the least number of left trefoils with `4N/3 > 4g + (2g+1)·d`.
pub fn thm_d_family(g: u64, d: &CertifiedValue) -> Result<FamilyDescriptor> {
    if d.ge(&CertifiedValue::zero()) != Truth::True {
        return Err(Error::NegativeSlack(d.to_string()));
    }
    let copies = 2 * g + 1;
    let threshold = int(4 * g as i64) + d.upper() * int(copies as i64);
    build(
        FamilyKind::ThmD { g },
        thm_d_pattern(),
        copies,
        cyclotomic(30),
        Companion {
            base: left_trefoil(),
            copies: min_trefoils(&threshold),
        },
        d.clone(),
        Some(CertifiedValue::exact(threshold)),
    )
}

/// `#^{4g+2b2+1}` 9₄₆.
pub fn thm_g_family(g: u64, b2: u64) -> Result<KnotDescriptor> {
    let copies = 4 * g + 2 * b2 + 1;
    let mut k = nine_46().connected_sum_power(copies as usize)?;
    k.ribbon = Some(true);
    Ok(k)
}

/// A single satellite `pattern(η, companion)` with `η` of class
/// `axis_primary`. The pattern must be ribbon, which makes the slack zero.
pub fn satellite_descriptor(
    pattern: &KnotDescriptor,
    axis_primary: &LaurentPoly,
    companion: &KnotDescriptor,
) -> Result<FamilyDescriptor> {
    build(
        FamilyKind::Satellite,
        pattern.clone(),
        1,
        axis_primary.clone(),
        Companion::single(companion.clone()),
        CertifiedValue::zero(),
        None,
    )
}
