//! Seifert-matrix calculus and knot descriptors.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::matrix::det_int;
use crate::exactalg::{rational, LaurentPoly, Poly, Rational};
use crate::lambda_modules::{smith_normal_form, LambdaMatrix, LambdaModule};

/// Largest matrix size accepted by [`is_visibly_hyperbolic`].
pub const HYPERBOLIC_SEARCH_MAX: usize = 8;

/// A `2g × 2g` integer matrix with `det(V - Vᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn validate(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize(n));
        }
        let skew: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| entries[i][j] - entries[j][i]).collect())
            .collect();
        let d = det_int(&skew);
        if !d.is_one() {
            return Err(Error::BadIntersectionForm(d.to_string()));
        }
        Ok(Self { entries })
    }

    pub fn unknot() -> Self {
        Self { entries: vec![] }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Genus of the surface the matrix comes from; an upper bound for g₃.
    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn transpose(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect()
    }

    pub fn block_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut m = vec![vec![0i64; a + b]; a + b];
        for i in 0..a {
            m[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            m[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        Self { entries: m }
    }

    /// `-Vᵀ`.
    pub fn mirror(&self) -> Self {
        let entries = self
            .transpose()
            .into_iter()
            .map(|r| r.into_iter().map(|x| -x).collect())
            .collect();
        Self { entries }
    }

    /// Canonical associate of `det(V - t Vᵀ)`, by evaluation at `size + 1`
    /// integer points centred on zero and Lagrange interpolation.
    pub fn alexander_polynomial(&self) -> LaurentPoly {
        let n = self.size();
        let vt = self.transpose();
        let half = n as i64 / 2;
        let ts: Vec<i64> = (-half..=n as i64 - half).collect();
        let points: Vec<Rational> = ts.iter().map(|&t| rational::int(t)).collect();
        let values: Vec<Rational> = ts
            .iter()
            .map(|&t| {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|i| (0..n).map(|j| self.entries[i][j] - t * vt[i][j]).collect())
                    .collect();
                Rational::from_integer(det_int(&m))
            })
            .collect();
        LaurentPoly::from_poly(0, &interpolate(&points, &values)).canonical()
    }

    /// `t V - Vᵀ`, presenting the Alexander module.
    pub fn alexander_presentation(&self) -> LambdaMatrix {
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        LaurentPoly::from_terms([
                            (1, rational::int(self.entries[i][j])),
                            (0, rational::int(-self.entries[j][i])),
                        ])
                    })
                    .collect()
            })
            .collect();
        LambdaMatrix::new(n, n, entries)
    }
}

fn interpolate(points: &[Rational], values: &[Rational]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().zip(values).enumerate() {
        let mut basis = Poly::constant(yi.clone());
        for (j, xj) in points.iter().enumerate() {
            if i != j {
                let lin = Poly::new(vec![-xj.clone(), Rational::one()]);
                basis = (&basis * &lin).scale(&(xi - xj).recip());
            }
        }
        acc = &acc + &basis;
    }
    acc
}

/// Module-level stand-in for a knot known only through its Alexander module
/// and a vanishing signature function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSurrogate {
    pub presentation: LambdaMatrix,
    pub signature_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotData {
    Seifert(SeifertMatrix),
    Surrogate(ModuleSurrogate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DescriptorRepr", into = "DescriptorRepr")]
pub struct KnotDescriptor {
    pub name: String,
    pub data: KnotData,
    pub ribbon: Option<bool>,
    pub crossing_number: Option<u32>,
}

/// Wire form: `{"name", "seifert": [[..]]}` or
/// `{"name", "module_presentation": [[poly..]], "signature_zero": true}`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorRepr {
    #[serde(default)]
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seifert: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    module_presentation: Option<LambdaMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ribbon: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    crossing_number: Option<u32>,
}

impl TryFrom<DescriptorRepr> for KnotDescriptor {
    type Error = Error;
    fn try_from(r: DescriptorRepr) -> Result<Self> {
        let data = match (r.seifert, r.module_presentation) {
            (Some(v), None) => {
                if r.signature_zero.is_some() {
                    return Err(Error::Schema(
                        "signature_zero only applies to module_presentation".into(),
                    ));
                }
                KnotData::Seifert(SeifertMatrix::validate(v)?)
            }
            (None, Some(p)) => {
                if r.signature_zero != Some(true) {
                    return Err(Error::SurrogateSignature);
                }
                if p.rows() != p.cols() {
                    return Err(Error::Schema("module presentation must be square".into()));
                }
                let module = smith_normal_form(&p);
                if module.free_rank() > 0 {
                    return Err(Error::NotTorsion(module.free_rank()));
                }
                let order = module.order()?;
                if !order.eval(&Rational::one()).abs().is_one() {
                    return Err(Error::Schema(format!(
                        "module order {order} does not satisfy Δ(1) = ±1"
                    )));
                }
                KnotData::Surrogate(ModuleSurrogate {
                    presentation: p,
                    signature_zero: true,
                })
            }
            _ => {
                return Err(Error::Schema(
                    "exactly one of `seifert` or `module_presentation` is required".into(),
                ))
            }
        };
        if r.crossing_number == Some(0) {
            return Err(Error::Schema("crossing_number must be positive".into()));
        }
        Ok(Self {
            name: r.name,
            data,
            ribbon: r.ribbon,
            crossing_number: r.crossing_number,
        })
    }
}

impl From<KnotDescriptor> for DescriptorRepr {
    fn from(k: KnotDescriptor) -> Self {
        let (seifert, module_presentation, signature_zero) = match k.data {
            KnotData::Seifert(v) => (Some(v.entries), None, None),
            KnotData::Surrogate(s) => (None, Some(s.presentation), Some(s.signature_zero)),
        };
        Self {
            name: k.name,
            seifert,
            module_presentation,
            signature_zero,
            ribbon: k.ribbon,
            crossing_number: k.crossing_number,
        }
    }
}

impl KnotDescriptor {
    pub fn from_seifert(name: impl Into<String>, v: SeifertMatrix) -> Self {
        Self {
            name: name.into(),
            data: KnotData::Seifert(v),
            ribbon: None,
            crossing_number: None,
        }
    }

    pub fn surrogate(name: impl Into<String>, presentation: LambdaMatrix) -> Self {
        Self {
            name: name.into(),
            data: KnotData::Surrogate(ModuleSurrogate {
                presentation,
                signature_zero: true,
            }),
            ribbon: None,
            crossing_number: None,
        }
    }

    pub fn with_ribbon(mut self, ribbon: Option<bool>) -> Self {
        self.ribbon = ribbon;
        self
    }

    pub fn with_crossing_number(mut self, c: Option<u32>) -> Self {
        self.crossing_number = c;
        self
    }

    pub fn unknot() -> Self {
        Self::from_seifert("unknot", SeifertMatrix::unknot()).with_ribbon(Some(true))
    }

    pub fn seifert(&self) -> Result<&SeifertMatrix> {
        match &self.data {
            KnotData::Seifert(v) => Ok(v),
            KnotData::Surrogate(_) => Err(Error::SurrogateRejected(self.name.clone())),
        }
    }

    pub fn is_surrogate(&self) -> bool {
        matches!(self.data, KnotData::Surrogate(_))
    }

    /// Whether the signature function is known to vanish identically without
    /// evaluating it (surrogates and the unknot).
    pub fn signature_known_zero(&self) -> bool {
        match &self.data {
            KnotData::Seifert(v) => v.size() == 0,
            KnotData::Surrogate(s) => s.signature_zero,
        }
    }

    /// Upper bound for the Seifert genus from the matrix size. Surrogates
    /// carry no surface, so `None`.
    pub fn genus_upper_bound(&self) -> Option<usize> {
        match &self.data {
            KnotData::Seifert(v) => Some(v.genus()),
            KnotData::Surrogate(_) => None,
        }
    }

    pub fn alexander_polynomial(&self) -> LaurentPoly {
        match &self.data {
            KnotData::Seifert(v) => v.alexander_polynomial(),
            // Torsion was checked at construction.
            KnotData::Surrogate(s) => smith_normal_form(&s.presentation)
                .order()
                .expect("surrogate modules are torsion")
                .canonical(),
        }
    }

    pub fn alexander_module_presentation(&self) -> LambdaMatrix {
        match &self.data {
            KnotData::Seifert(v) => v.alexander_presentation(),
            KnotData::Surrogate(s) => s.presentation.clone(),
        }
    }

    pub fn alexander_module(&self) -> LambdaModule {
        smith_normal_form(&self.alexander_module_presentation())
    }

    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        let data = match (&self.data, &other.data) {
            (KnotData::Seifert(a), KnotData::Seifert(b)) => KnotData::Seifert(a.block_sum(b)),
            (KnotData::Surrogate(a), KnotData::Surrogate(b)) => {
                KnotData::Surrogate(ModuleSurrogate {
                    presentation: a.presentation.block_sum(&b.presentation),
                    signature_zero: a.signature_zero && b.signature_zero,
                })
            }
            _ => return Err(Error::MixedRepresentation),
        };
        let ribbon = match (self.ribbon, other.ribbon) {
            (Some(a), Some(b)) => Some(a && b),
            _ => None,
        };
        Ok(Self {
            name: format!("{} # {}", self.name, other.name),
            data,
            ribbon,
            crossing_number: None,
        })
    }

    /// `#^copies self`; the unknot for zero copies.
    pub fn connected_sum_power(&self, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Ok(Self::unknot());
        }
        let mut acc = self.clone();
        for _ in 1..copies {
            acc = acc.connected_sum(self)?;
        }
        acc.name = if copies == 1 {
            self.name.clone()
        } else {
            format!("#^{copies} {}", self.name)
        };
        Ok(acc)
    }

    pub fn mirror(&self) -> Result<Self> {
        match &self.data {
            KnotData::Seifert(v) => Ok(Self {
                name: format!("mirror({})", self.name),
                data: KnotData::Seifert(v.mirror()),
                ribbon: self.ribbon,
                crossing_number: self.crossing_number,
            }),
            KnotData::Surrogate(_) => Err(Error::MirrorUnavailable(self.name.clone())),
        }
    }
}

/// Result of the block-anti-diagonal search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperbolicWitness {
    pub hyperbolic: bool,
    /// Basis order putting `V` in the form `[[0, A], [B, 0]]`.
    pub permutation: Option<Vec<usize>>,
}

/// Searches for a reordering of the basis that makes `V` block
/// anti-diagonal with square blocks. Sign changes of basis vectors do not
/// move zero entries, so only half-size index subsets `S` with `V|S×S = 0`
/// and `V|Sᶜ×Sᶜ = 0` need to be tried. A positive answer certifies an
/// algebraically doubly slice Seifert form; a negative one proves nothing.
pub fn is_visibly_hyperbolic(k: &KnotDescriptor) -> Result<HyperbolicWitness> {
    let v = k.seifert()?;
    let n = v.size();
    if n > HYPERBOLIC_SEARCH_MAX {
        return Err(Error::SearchBound {
            size: n,
            max: HYPERBOLIC_SEARCH_MAX,
        });
    }
    let e = v.entries();
    let half = n / 2;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != half {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let second: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let vanishes = |s: &[usize]| s.iter().all(|&i| s.iter().all(|&j| e[i][j] == 0));
        if vanishes(&first) && vanishes(&second) {
            let mut perm = first;
            perm.extend(second);
            return Ok(HyperbolicWitness {
                hyperbolic: true,
                permutation: Some(perm),
            });
        }
    }
    Ok(HyperbolicWitness {
        hyperbolic: false,
        permutation: None,
    })
}

/// `Δ(-1)` as an integer (Alexander polynomials of knots are integral).
pub fn determinant(k: &KnotDescriptor) -> BigInt {
    k.alexander_polynomial()
        .eval(&rational::int(-1))
        .to_integer()
}
