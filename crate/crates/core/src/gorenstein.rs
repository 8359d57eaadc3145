//! The dual complex `Hom_A(C, A)` of the Koszul contraction and a
//! truncated Gorenstein test on its cohomology.
//!
//! A term `Hom(A^{!*}_i, A_m)` has weight `m − i`; the dual differential
//! `(d*f)(v) = Σ_s e_s·f(w_s)` for `v = Σ_s e_s ⊗ w_s` preserves weight, so
//! each weight is a finite complex. Cohomology at `(q, w)` is conclusive when
//! the three terms around it are either known to vanish or have values in
//! degrees up to the cutoff.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::koszul::{check_koszul, contraction_index, dual_splits, global_dimension, GlobalDimension};
use crate::presentation::{GradedAutomorphism, Presentation};
use crate::twist::semi_cross;

/// The dual contraction up to value degree `cutoff`.
#[derive(Clone, Debug)]
pub struct DualComplex<F: Field> {
    field: F,
    pub big_n: usize,
    pub cutoff: usize,
    /// Largest homological degree with a nonzero term.
    pub top: usize,
    pub a_dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    /// `steps[(m, i)] : Hom(V_i, A_m) → Hom(V_{i+1}, A_{m+1})`, basis index `u * dim V_i + k`.
    steps: BTreeMap<(usize, usize), Matrix<F>>,
}

/// Dimension of a term: `Known(0)` when it provably vanishes, `Beyond` when its
/// values lie beyond the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TermDim {
    Known(usize),
    Beyond,
}

impl<F: Field> DualComplex<F> {
    pub fn new(p: &Presentation<F>, top: usize, cutoff: usize) -> Result<Self> {
        let big_n = p.degree();
        let max_i = contraction_index(top, big_n);
        let (dual_dims, splits) = dual_splits(p, max_i)?;
        if dual_dims[max_i] == 0 {
            return Err(Error::InvalidArgument(format!(
                "homological degree {top} has no nonzero dual component"
            )));
        }
        let a_dims = p.hilbert_series(cutoff)?;
        let f = p.field();
        let mut steps = BTreeMap::new();
        for i in 0..max_i {
            let Some(split) = &splits[i + 1] else { continue };
            for m in 0..cutoff {
                let mut acc = Matrix::zeros(f, a_dims[m + 1] * dual_dims[i + 1], a_dims[m] * dual_dims[i]);
                for (s, c) in split.coeff.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&p.left_mult(m, s)?.kron(&c.transpose()))?;
                    }
                }
                steps.insert((m, i), acc);
            }
        }
        Ok(DualComplex {
            field: f.clone(),
            big_n,
            cutoff,
            top,
            a_dims,
            dual_dims,
            steps,
        })
    }

    /// `d* : Hom(V_i, A_m) → Hom(V_{i+1}, A_{m+1})`.
    pub fn step(&self, m: usize, i: usize) -> Option<&Matrix<F>> {
        self.steps.get(&(m, i))
    }

    fn term(&self, q: usize, weight: i64) -> TermDim {
        if q > self.top {
            return TermDim::Known(0);
        }
        let i = contraction_index(q, self.big_n);
        let m = weight + i as i64;
        if m < 0 {
            TermDim::Known(0)
        } else if m as usize > self.cutoff {
            TermDim::Beyond
        } else {
            TermDim::Known(self.a_dims[m as usize] * self.dual_dims[i])
        }
    }

    pub fn term_dim(&self, q: usize, weight: i64) -> Option<usize> {
        match self.term(q, weight) {
            TermDim::Known(d) => Some(d),
            TermDim::Beyond => None,
        }
    }

    /// `(C')^q → (C')^{q+1}` at `weight`: one dual step out of even `q`,
    /// `N − 1` of them out of odd `q`. Both ends must be within the cutoff.
    pub fn map(&self, q: usize, weight: i64) -> Result<Matrix<F>> {
        let i = contraction_index(q, self.big_n);
        let m = weight + i as i64;
        let steps = if q.is_multiple_of(2) { 1 } else { self.big_n - 1 };
        if m < 0 || m as usize + steps > self.cutoff || q >= self.top {
            return Err(Error::InvalidArgument(format!(
                "no map out of ({q}, {weight}) within the cutoff"
            )));
        }
        let m = m as usize;
        let mut acc = Matrix::identity(&self.field, self.a_dims[m] * self.dual_dims[i]);
        for k in 0..steps {
            let d = self
                .step(m + k, i + k)
                .ok_or_else(|| Error::Internal(format!("missing dual step at ({}, {})", m + k, i + k)))?;
            acc = d.mul(&acc)?;
        }
        Ok(acc)
    }

    fn rank_out(&self, q: usize, weight: i64) -> Result<usize> {
        match (self.term(q, weight), self.term(q + 1, weight)) {
            (TermDim::Known(0), _) | (_, TermDim::Known(0)) => Ok(0),
            _ => Ok(self.map(q, weight)?.rank()),
        }
    }

    /// `dim H^q` at `weight`, or `None` when it depends on degrees past the cutoff.
    pub fn cohomology(&self, q: usize, weight: i64) -> Result<Option<usize>> {
        let prev = if q == 0 {
            TermDim::Known(0)
        } else {
            self.term(q - 1, weight)
        };
        let (TermDim::Known(here), TermDim::Known(_), TermDim::Known(_)) =
            (self.term(q, weight), prev, self.term(q + 1, weight))
        else {
            return Ok(None);
        };
        if here == 0 {
            return Ok(Some(0));
        }
        let incoming = if q == 0 { 0 } else { self.rank_out(q - 1, weight)? };
        Ok(Some(here - self.rank_out(q, weight)? - incoming))
    }

    /// Weights at which some term is nonzero and within the cutoff.
    pub fn weights(&self) -> std::ops::RangeInclusive<i64> {
        -(contraction_index(self.top, self.big_n) as i64)..=self.cutoff as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyEntry {
    pub hom_degree: usize,
    pub weight: i64,
    /// `None` when inconclusive at this cutoff.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    /// No witnesses and a single one-dimensional class in the top degree.
    GorensteinUpToCutoff,
    NotGorenstein,
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    pub cutoff: usize,
    pub global_dim: GlobalDimension,
    pub verdict: GorensteinVerdict,
    pub table: Vec<CohomologyEntry>,
    /// Conclusive nonzero cohomology below the top degree, together with
    /// every top-degree class beyond a single one-dimensional one.
    pub witnesses: Vec<CohomologyEntry>,
    /// Lowest-weight nonzero top-degree entry, when it is one-dimensional.
    pub fundamental: Option<CohomologyEntry>,
    /// Sum of the conclusive top-degree dimensions.
    pub top_total: usize,
    pub warnings: Vec<String>,
}

impl GorensteinReport {
    pub fn is_gorenstein(&self) -> bool {
        self.verdict == GorensteinVerdict::GorensteinUpToCutoff
    }

    pub fn entry(&self, hom_degree: usize, weight: i64) -> Option<&CohomologyEntry> {
        self.table
            .iter()
            .find(|e| e.hom_degree == hom_degree && e.weight == weight)
    }
}

/// Cohomology table of `Hom_A(C, A)` for all weights and degrees `q ≤ top`.
pub fn cohomology_table<F: Field>(c: &DualComplex<F>) -> Result<Vec<CohomologyEntry>> {
    let weights: Vec<i64> = c.weights().collect();
    let rows = weights
        .par_iter()
        .map(|&w| {
            (0..=c.top)
                .map(|q| {
                    Ok(CohomologyEntry {
                        hom_degree: q,
                        weight: w,
                        dim: c.cohomology(q, w)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn check_gorenstein<F: Field>(p: &Presentation<F>, cutoff: usize) -> Result<GorensteinReport> {
    let global_dim = global_dimension(p)?;
    let mut warnings = Vec::new();
    let Some(top) = global_dim.finite() else {
        return Ok(GorensteinReport {
            cutoff,
            global_dim,
            verdict: GorensteinVerdict::Inconclusive("global dimension is not finite within the cap".into()),
            table: Vec::new(),
            witnesses: Vec::new(),
            fundamental: None,
            top_total: 0,
            warnings,
        });
    };
    if cutoff >= p.degree() {
        if !check_koszul(p, cutoff)?.is_koszul() {
            warnings.push(format!("the Koszul complex is not exact through degree {cutoff}"));
        }
    } else {
        warnings.push(format!(
            "Koszulity is unchecked below the relation degree {}",
            p.degree()
        ));
    }

    let complex = DualComplex::new(p, top, cutoff)?;
    let table = cohomology_table(&complex)?;
    let mut witnesses: Vec<CohomologyEntry> = table
        .iter()
        .filter(|e| e.hom_degree < top && e.dim.is_some_and(|d| d > 0))
        .copied()
        .collect();
    let top_entries: Vec<CohomologyEntry> = table
        .iter()
        .filter(|e| e.hom_degree == top && e.dim.is_some_and(|d| d > 0))
        .copied()
        .collect();
    let top_total = top_entries.iter().map(|e| e.dim.unwrap()).sum();
    let mut fundamental = None;
    for (k, e) in top_entries.iter().enumerate() {
        if k == 0 && e.dim == Some(1) {
            fundamental = Some(*e);
        } else {
            witnesses.push(*e);
        }
    }
    witnesses.sort_by_key(|e| (e.weight, e.hom_degree));

    let verdict = if !witnesses.is_empty() {
        GorensteinVerdict::NotGorenstein
    } else if fundamental.is_some() {
        GorensteinVerdict::GorensteinUpToCutoff
    } else {
        GorensteinVerdict::Inconclusive(format!("no top-degree class found through degree {cutoff}"))
    };
    Ok(GorensteinReport {
        cutoff,
        global_dim,
        verdict,
        table,
        witnesses,
        fundamental,
        top_total,
        warnings,
    })
}

/// Compares the dual cohomology of `A` and of its semi-cross product `A^α`.
pub fn gorenstein_transfer_check<F: Field>(
    p: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    cutoff: usize,
) -> Result<bool> {
    let twisted = semi_cross(p, alpha)?;
    let a = check_gorenstein(p, cutoff)?;
    let b = check_gorenstein(&twisted, cutoff)?;
    Ok(a.verdict == b.verdict && a.table == b.table)
}
