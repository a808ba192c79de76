//! Certificates replaying the inequality chains behind the lower bounds.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::rational;
use crate::exactalg::{CertifiedValue, Rational, Truth};
use crate::families::{FamilyDescriptor, FamilyKind};
use crate::lt_signature::{max_abs_signature, SignatureConfig};
use crate::parity::{arf, ArfValue};
use crate::seifert::KnotDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    ThmCNoEmbedding,
    ThmDNoEmbedding,
    GdsXBound,
    DsnBound,
    DsnXBound,
    SupersliceBound,
    SignatureGdsBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Gt => ">",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 2,
            Outcome::Inconclusive => 3,
        }
    }

    fn of(t: Truth) -> Self {
        match t {
            Truth::True => Outcome::Pass,
            Truth::False => Outcome::Fail,
            Truth::Inconclusive => Outcome::Inconclusive,
        }
    }
}

/// One inequality `lhs relation rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub lhs: CertifiedValue,
    pub relation: Relation,
    pub rhs: CertifiedValue,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(
        description: impl Into<String>,
        lhs: CertifiedValue,
        relation: Relation,
        rhs: CertifiedValue,
    ) -> Self {
        let outcome = Self::evaluate(&lhs, relation, &rhs);
        let note = (outcome == Outcome::Inconclusive)
            .then(|| "interval straddles the threshold; refine --enclosure-width".to_string());
        Self {
            description: description.into(),
            lhs,
            relation,
            rhs,
            outcome,
            note,
        }
    }

    fn evaluate(lhs: &CertifiedValue, relation: Relation, rhs: &CertifiedValue) -> Outcome {
        Outcome::of(match relation {
            Relation::Gt => lhs.gt(rhs),
            Relation::Ge => lhs.ge(rhs),
        })
    }

    /// `lhs − rhs`.
    pub fn margin(&self) -> CertifiedValue {
        &self.lhs - &self.rhs
    }
}

/// The structured form of a conclusion: `invariant relation value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub invariant: String,
    pub relation: Relation,
    #[serde(with = "rational::serde_bigint")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub text: String,
    pub claim: Claim,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: Theorem,
    pub inputs: Inputs,
    pub checks: Vec<Check>,
    pub conclusion: Option<Conclusion>,
    pub conditional_on: Vec<String>,
    pub status: Outcome,
}

impl Certificate {
    fn assemble(
        theorem: Theorem,
        inputs: Inputs,
        checks: Vec<Check>,
        conclusion: Conclusion,
        conditional_on: Vec<String>,
    ) -> Self {
        let status = Self::status_of(&checks);
        Self {
            theorem,
            inputs,
            conclusion: (status == Outcome::Pass).then_some(conclusion),
            checks,
            conditional_on,
            status,
        }
    }

    fn status_of(checks: &[Check]) -> Outcome {
        if checks.iter().any(|c| c.outcome == Outcome::Fail) {
            Outcome::Fail
        } else if checks.iter().any(|c| c.outcome == Outcome::Inconclusive) {
            Outcome::Inconclusive
        } else {
            Outcome::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Outcome::Pass
    }

    /// Re-evaluates every check from its recorded sides and confirms the
    /// recorded outcomes, status and presence of a conclusion.
    pub fn verify(&self) -> Result<Outcome> {
        for c in &self.checks {
            let outcome = Check::evaluate(&c.lhs, c.relation, &c.rhs);
            if outcome != c.outcome {
                return Err(Error::Certificate(format!(
                    "check `{}` records {:?} but evaluates to {:?}",
                    c.description, c.outcome, outcome
                )));
            }
        }
        let status = Self::status_of(&self.checks);
        if status != self.status {
            return Err(Error::Certificate(format!(
                "status {:?} does not match checks ({:?})",
                self.status, status
            )));
        }
        if self.conclusion.is_some() != (status == Outcome::Pass) {
            return Err(Error::Certificate(
                "a conclusion must be present exactly when every check passes".into(),
            ));
        }
        Ok(status)
    }
}

fn natural(n: u64) -> CertifiedValue {
    CertifiedValue::exact(Rational::from_integer(BigInt::from(n)))
}

fn no_embedding_checks(f: &FamilyDescriptor, r: u64) -> Result<Vec<Check>> {
    let inf = &f.infection;
    let multiplicity = f
        .seifert_level
        .alexander_module()
        .primary_multiplicity(&inf.axis_primary)?;
    let rank = inf.axis_count.min(multiplicity as u64);
    Ok(vec![
        Check::new(
            format!(
                "axis classes of {} surviving any rank-{r} image",
                inf.axis_primary
            ),
            natural(rank),
            Relation::Gt,
            natural(r),
        ),
        Check::new(
            "companion rho0 minus total pattern slack exceeds the 2r bound",
            f.effective_rho(),
            Relation::Gt,
            natural(2 * r),
        ),
    ])
}

fn slack_assumptions(f: &FamilyDescriptor) -> Vec<String> {
    if matches!(f.kind, FamilyKind::ThmD { .. }) || f.pattern.ribbon != Some(true) {
        vec![format!(
            "supplied D = {} bounds |rho2(M({}), phi)| for every phi",
            f.pattern_slack_per_copy, f.pattern.name
        )]
    } else {
        vec![]
    }
}

/// No `H₁`-embedding of `M(K)` into a closed `W` with `π₁ ≅ Z` and
/// `b₂(W) ≤ r`.
pub fn certify_no_h1_embedding(f: &FamilyDescriptor, r: u64) -> Result<Certificate> {
    let theorem = match f.kind {
        FamilyKind::ThmD { .. } => Theorem::ThmDNoEmbedding,
        _ => Theorem::ThmCNoEmbedding,
    };
    Ok(Certificate::assemble(
        theorem,
        Inputs {
            r: Some(r),
            ..family_inputs(f)
        },
        no_embedding_checks(f, r)?,
        Conclusion {
            text: format!(
                "no H1-embedding of M(K) into any closed W with pi1(W) = Z and b2(W) <= {r}"
            ),
            claim: Claim {
                invariant: "min b2(W) over H1-embeddings".into(),
                relation: Relation::Gt,
                value: BigInt::from(r),
            },
        },
        slack_assumptions(f),
    ))
}

fn family_inputs(f: &FamilyDescriptor) -> Inputs {
    match f.kind {
        FamilyKind::ThmC { g, n } => Inputs {
            g: Some(g),
            n: Some(n),
            ..Inputs::default()
        },
        FamilyKind::ThmD { g } => Inputs {
            g: Some(g),
            ..Inputs::default()
        },
        FamilyKind::Satellite => Inputs::default(),
    }
}

fn with_theorem(
    mut cert: Certificate,
    theorem: Theorem,
    inputs: Inputs,
    conclusion: Conclusion,
) -> Certificate {
    cert.theorem = theorem;
    cert.inputs = inputs;
    if cert.conclusion.is_some() {
        cert.conclusion = Some(conclusion);
    }
    cert
}

/// `g_ds^X(K) > g` for every simply connected closed `X` with `b₂(X) = n`.
pub fn gds_x_lower_bound(f: &FamilyDescriptor, n: u64, g: u64) -> Result<Certificate> {
    let r = 2 * g + n;
    let cert = certify_no_h1_embedding(f, r)?;
    Ok(with_theorem(
        cert,
        Theorem::GdsXBound,
        Inputs {
            g: Some(g),
            n: Some(n),
            r: Some(r),
            ..Inputs::default()
        },
        Conclusion {
            text: format!(
                "g_ds^X(K) > {g} for every simply connected closed 4-manifold X with b2(X) = {n}"
            ),
            claim: Claim {
                invariant: "g_ds^X".into(),
                relation: Relation::Gt,
                value: BigInt::from(g),
            },
        },
    ))
}

fn require_stably_doubly_slice(f: &FamilyDescriptor) -> Result<()> {
    if arf(&f.seifert_level) == ArfValue::ONE {
        return Err(Error::NotStablyDoublySlice(f.seifert_level.name.clone()));
    }
    Ok(())
}

/// `dsn(K) > m`.
pub fn dsn_lower_bound(f: &FamilyDescriptor, m: u64) -> Result<Certificate> {
    require_stably_doubly_slice(f)?;
    let r = 2 * m;
    let cert = certify_no_h1_embedding(f, r)?;
    Ok(with_theorem(
        cert,
        Theorem::DsnBound,
        Inputs {
            m: Some(m),
            r: Some(r),
            ..Inputs::default()
        },
        Conclusion {
            text: format!("dsn(K) > {m}"),
            claim: Claim {
                invariant: "dsn".into(),
                relation: Relation::Gt,
                value: BigInt::from(m),
            },
        },
    ))
}

/// `dsn_X(K) > m` for simply connected closed `X` with `b₂(X) = b2`.
pub fn dsn_x_lower_bound(f: &FamilyDescriptor, m: u64, b2: u64) -> Result<Certificate> {
    require_stably_doubly_slice(f)?;
    let r = b2 + 2 * m;
    let cert = certify_no_h1_embedding(f, r)?;
    Ok(with_theorem(
        cert,
        Theorem::DsnXBound,
        Inputs {
            m: Some(m),
            b2: Some(b2),
            r: Some(r),
            ..Inputs::default()
        },
        Conclusion {
            text: format!(
                "dsn_X(K) > {m} for every simply connected closed 4-manifold X with b2(X) = {b2}"
            ),
            claim: Claim {
                invariant: "dsn_X".into(),
                relation: Relation::Gt,
                value: BigInt::from(m),
            },
        },
    ))
}

/// `⌈(μ − 2·b2)/4⌉`, clamped at zero.
pub fn superslice_bound_value(mu: usize, b2: u64) -> u64 {
    let v = mu as i64 - 2 * b2 as i64;
    if v <= 0 {
        0
    } else {
        (v as u64).div_ceil(4)
    }
}

/// `g_s^X(K) ≥ ⌈(μ − 2·b2)/4⌉` where `μ` is the minimal number of
/// generators of the Alexander module.
pub fn superslice_lower_bound(k: &KnotDescriptor, b2: u64) -> Result<Certificate> {
    let mu = k.alexander_module().min_generators();
    let bound = superslice_bound_value(mu, b2);
    let mut checks = vec![];
    if bound > 0 {
        checks.push(Check::new(
            format!("generators exceed 4·{} + 2·b2", bound - 1),
            natural(mu as u64),
            Relation::Gt,
            natural(4 * (bound - 1) + 2 * b2),
        ));
    }
    Ok(Certificate::assemble(
        Theorem::SupersliceBound,
        Inputs {
            b2: Some(b2),
            knot: Some(k.name.clone()),
            ..Inputs::default()
        },
        checks,
        Conclusion {
            text: format!(
                "g_s^X(K) >= {bound} for every simply connected X with boundary S3 and b2(X) = {b2}"
            ),
            claim: Claim {
                invariant: "g_s^X".into(),
                relation: Relation::Ge,
                value: BigInt::from(bound),
            },
        },
        vec![],
    ))
}

/// `g_ds(K) ≥ max |σ_K(ω)|`.
pub fn signature_gds_bound(k: &KnotDescriptor, cfg: &SignatureConfig) -> Result<Certificate> {
    let s = max_abs_signature(k, cfg)?;
    Ok(Certificate::assemble(
        Theorem::SignatureGdsBound,
        Inputs {
            knot: Some(k.name.clone()),
            ..Inputs::default()
        },
        vec![Check::new(
            "maximal absolute Levine-Tristram signature",
            CertifiedValue::integer(s),
            Relation::Ge,
            CertifiedValue::zero(),
        )],
        Conclusion {
            text: format!("g_ds(K) >= {s}"),
            claim: Claim {
                invariant: "g_ds".into(),
                relation: Relation::Ge,
                value: BigInt::from(s),
            },
        },
        vec![],
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub knot: String,
    /// Matrix size / 2; absent for module surrogates.
    pub g3_upper: Option<u64>,
    pub gds_upper: Option<u64>,
    pub max_abs_signature: i64,
    /// `⌈max|σ|/2⌉`, a lower bound for `g₄`.
    pub g4_lower: i64,
    pub gds_lower: i64,
    pub superslice_lower_b2_0: u64,
    pub arf: ArfValue,
    pub stably_doubly_slice: bool,
    /// `sn(K) = 0` is known for ribbon knots.
    pub sn_zero: bool,
    pub dsn_defined: bool,
    pub violations: Vec<String>,
}

impl InequalityReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Collects every computable bound and checks the chains
/// `2g₄ ≤ g_ds ≤ 2g₃` against each other.
pub fn inequality_report(k: &KnotDescriptor, cfg: &SignatureConfig) -> Result<InequalityReport> {
    let sig = max_abs_signature(k, cfg)?;
    let g3 = k.genus_upper_bound().map(|g| g as u64);
    let gds_upper = g3.map(|g| 2 * g);
    let g4_lower = (sig + 1) / 2;
    let superslice = superslice_bound_value(k.alexander_module().min_generators(), 0);
    let a = arf(k);
    let mut violations = vec![];
    if let Some(up) = gds_upper {
        if sig as u64 > up {
            violations.push(format!("signature bound {sig} exceeds 2·g3 = {up}"));
        }
        if 2 * g4_lower as u64 > up {
            violations.push(format!(
                "2·g4 lower bound {} exceeds 2·g3 = {up}",
                2 * g4_lower
            ));
        }
    }
    if 2 * g4_lower > sig + 1 {
        violations.push("g4 proxy exceeds the signature bound".into());
    }
    if k.ribbon == Some(true) && !a.is_zero() {
        violations.push("ribbon knot with Arf invariant 1".into());
    }
    if k.ribbon == Some(true) && sig != 0 {
        violations.push("ribbon knot with nonzero signature".into());
    }
    Ok(InequalityReport {
        knot: k.name.clone(),
        g3_upper: g3,
        gds_upper,
        max_abs_signature: sig,
        g4_lower,
        gds_lower: sig,
        superslice_lower_b2_0: superslice,
        arf: a,
        stably_doubly_slice: a.is_zero(),
        sn_zero: k.ribbon == Some(true),
        dsn_defined: a.is_zero(),
        violations,
    })
}
