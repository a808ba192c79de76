//! Finitely presented modules over the PID Λ = Q[t, 1/t].
//!
//! A presentation matrix `P` with `r` rows and `c` columns presents the
//! cokernel of `P: Λ^c → Λ^r`: rows are generators, columns are relations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;

/// Dense matrix over Λ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LambdaMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<LaurentPoly>>) -> Self {
        assert_eq!(entries.len(), rows);
        assert!(entries.iter().all(|r| r.len() == cols));
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Row-major construction; the column count is taken from the first row.
    pub fn from_rows(entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Schema("ragged presentation matrix".into()));
        }
        Ok(Self::new(rows, cols, entries))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn diagonal(entries: Vec<LaurentPoly>) -> Self {
        let n = entries.len();
        let mut m = vec![vec![LaurentPoly::zero(); n]; n];
        for (i, e) in entries.into_iter().enumerate() {
            m[i][i] = e;
        }
        Self::new(n, n, m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    /// Block-diagonal sum, presenting the direct sum of the two modules.
    pub fn block_sum(&self, other: &Self) -> Self {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut m = vec![vec![LaurentPoly::zero(); cols]; rows];
        for i in 0..self.rows {
            m[i][..self.cols].clone_from_slice(&self.entries[i]);
        }
        for i in 0..other.rows {
            m[self.rows + i][self.cols..].clone_from_slice(&other.entries[i]);
        }
        Self::new(rows, cols, m)
    }
}

impl Serialize for LambdaMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LambdaMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<Vec<LaurentPoly>>::deserialize(d)?;
        Self::from_rows(entries).map_err(serde::de::Error::custom)
    }
}

/// A finitely generated Λ-module `Λ^free_rank ⊕ ⊕ Λ/⟨d_i⟩` with
/// `d_1 | d_2 | … | d_k`, no `d_i` a unit, each stored normalized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModuleRepr")]
pub struct LambdaModule {
    free_rank: usize,
    invariant_factors: Vec<LaurentPoly>,
}

#[derive(Deserialize)]
struct ModuleRepr {
    free_rank: usize,
    invariant_factors: Vec<LaurentPoly>,
}

impl TryFrom<ModuleRepr> for LambdaModule {
    type Error = Error;
    fn try_from(r: ModuleRepr) -> Result<Self> {
        let m = LambdaModule::from_diagonal(r.invariant_factors.clone(), r.free_rank);
        let given: Vec<_> = r
            .invariant_factors
            .iter()
            .map(LaurentPoly::normalized)
            .collect();
        if m.invariant_factors != given {
            return Err(Error::Schema(
                "invariant factors must be nonunits forming a divisibility chain".into(),
            ));
        }
        Ok(m)
    }
}

impl LambdaModule {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            invariant_factors: vec![],
        }
    }

    /// `Λ/⟨p⟩`.
    pub fn cyclic(p: &LaurentPoly) -> Self {
        Self::from_diagonal(vec![p.clone()], 0)
    }

    /// The module `Λ^free_rank ⊕ ⊕ Λ/⟨e⟩` over the given diagonal entries,
    /// brought to invariant-factor form by pairwise gcd/lcm exchange. Zero
    /// entries contribute free summands; units vanish.
    pub fn from_diagonal(entries: Vec<LaurentPoly>, free_rank: usize) -> Self {
        let mut free_rank = free_rank;
        let mut d: Vec<LaurentPoly> = Vec::with_capacity(entries.len());
        for e in entries {
            if e.is_zero() {
                free_rank += 1;
            } else if !e.is_unit() {
                d.push(e.normalized());
            }
        }
        // diag(a, b) ~ diag(gcd, lcm); after row i, d[i] divides every d[j>i].
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if d[i].divides(&d[j]) {
                    continue;
                }
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
        d.retain(|e| !e.is_unit());
        Self {
            free_rank,
            invariant_factors: d,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[LaurentPoly] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn min_generators(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Minimal number of generators of the `p`-primary part, for an
    /// irreducible `p` supplied by the caller (irreducibility is not checked).
    pub fn primary_multiplicity(&self, p: &LaurentPoly) -> Result<usize> {
        if p.is_zero() || p.is_unit() {
            return Err(Error::UnitPolynomial(p.to_string()));
        }
        Ok(self
            .invariant_factors
            .iter()
            .filter(|d| p.divides(d))
            .count())
    }

    /// Product of the invariant factors; only defined for torsion modules.
    pub fn order(&self) -> Result<LaurentPoly> {
        if self.free_rank > 0 {
            return Err(Error::NotTorsion(self.free_rank));
        }
        Ok(self
            .invariant_factors
            .iter()
            .fold(LaurentPoly::one(), |acc, d| &acc * d)
            .normalized())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let entries = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        Self::from_diagonal(entries, self.free_rank + other.free_rank)
    }

    /// Square diagonal presentation of this module.
    pub fn presentation(&self) -> LambdaMatrix {
        let mut d = vec![LaurentPoly::zero(); self.free_rank];
        d.extend(self.invariant_factors.iter().cloned());
        LambdaMatrix::diagonal(d)
    }
}

impl fmt::Display for LambdaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec![];
        if self.free_rank > 0 {
            parts.push(format!("Λ^{}", self.free_rank));
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Λ/⟨{d}⟩")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// The module presented by `p`, in invariant-factor form.
///
/// Diagonalizes by Euclidean row and column reduction with pivots of minimal
/// width, then enforces the divisibility chain on the diagonal.
pub fn smith_normal_form(p: &LambdaMatrix) -> LambdaModule {
    let (m, n) = (p.rows, p.cols);
    let mut a = p.entries.clone();
    let mut diag = Vec::new();
    for k in 0..m.min(n) {
        let Some((pi, pj)) = min_width_entry(&a, (k..m).flat_map(|i| (k..n).map(move |j| (i, j))))
        else {
            break;
        };
        move_to_pivot(&mut a, k, pi, pj);
        loop {
            for i in k + 1..m {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, _) = a[i][k].div_rem(&a[k][k]);
                if q.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = &q * &a[k][j];
                    a[i][j] = &a[i][j] - &v;
                }
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, _) = a[k][j].div_rem(&a[k][k]);
                if q.is_zero() {
                    continue;
                }
                for i in k..m {
                    let v = &q * &a[i][k];
                    a[i][j] = &a[i][j] - &v;
                }
            }
            let leftovers = (k + 1..m).map(|i| (i, k)).chain((k + 1..n).map(|j| (k, j)));
            match min_width_entry(&a, leftovers) {
                None => break,
                Some((i, j)) => move_to_pivot(&mut a, k, i, j),
            }
        }
        diag.push(a[k][k].clone());
    }
    let rank = diag.len();
    LambdaModule::from_diagonal(diag, m - rank)
}

fn min_width_entry<I>(a: &[Vec<LaurentPoly>], cells: I) -> Option<(usize, usize)>
where
    I: Iterator<Item = (usize, usize)>,
{
    cells
        .filter(|&(i, j)| !a[i][j].is_zero())
        .min_by_key(|&(i, j)| a[i][j].width().unwrap())
}

fn move_to_pivot(a: &mut [Vec<LaurentPoly>], k: usize, i: usize, j: usize) {
    a.swap(k, i);
    for row in a.iter_mut() {
        row.swap(k, j);
    }
}
