//! The Koszul N-complex `K(A)` with terms `A ⊗ A^{!*}_i`, its contraction
//! `C = C_{N-1,0}`, and the checks built on them.
//!
//! Everything is sliced by internal degree `n = |a| + i`, which every map
//! preserves, so each check reduces to finitely many exact rank computations.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::presentation::{GradedAutomorphism, Presentation};
use crate::tensorspace::{TensorAlgebra, TensorSubspace};
use crate::twist::semi_cross;

/// Tensor index of the `q`-th term of the contraction: `pN` for `q = 2p`,
/// `pN + 1` for `q = 2p + 1`.
pub fn contraction_index(q: usize, big_n: usize) -> usize {
    (q / 2) * big_n + q % 2
}

/// Coefficients of the splitting `A^{!*}_i → E ⊗ A^{!*}_{i-1}`.
///
/// `coeff[s]` is a `dim V_{i-1} × dim V_i` matrix: basis vector `v_k` of
/// `V_i` equals `Σ_s e_s ⊗ Σ_l coeff[s][l][k] b_l`.
#[derive(Clone, Debug)]
pub struct DualSplit<F: Field> {
    pub degree: usize,
    pub coeff: Vec<Matrix<F>>,
}

pub fn split_dual<F: Field>(
    tensor: &TensorAlgebra,
    upper: &TensorSubspace<F>,
    lower: &TensorSubspace<F>,
) -> Result<DualSplit<F>> {
    if upper.degree != lower.degree + 1 {
        return Err(Error::InvalidArgument("dual split needs consecutive degrees".into()));
    }
    let f = upper.space.field();
    let mut coeff = vec![Matrix::zeros(f, lower.dim(), upper.dim()); tensor.dim_e];
    for k in 0..upper.dim() {
        for (s, chunk) in tensor.split_first(upper.space.basis_vector(k)).enumerate() {
            let c = lower.space.coordinates(chunk).map_err(|_| {
                Error::Internal(format!(
                    "dual component {} is not contained in E ⊗ (dual component {})",
                    upper.degree, lower.degree
                ))
            })?;
            for (l, x) in c.into_iter().enumerate() {
                if !f.is_zero(&x) {
                    coeff[s].set(l, k, x);
                }
            }
        }
    }
    Ok(DualSplit {
        degree: upper.degree,
        coeff,
    })
}

/// The Koszul N-complex truncated to bidegrees `(m, i)` with `m + i ≤ cutoff`.
#[derive(Clone, Debug)]
pub struct KoszulNComplex<F: Field> {
    pub big_n: usize,
    pub cutoff: usize,
    pub a_dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    diffs: BTreeMap<(usize, usize), Matrix<F>>,
}

impl<F: Field> KoszulNComplex<F> {
    /// `d : A_m ⊗ V_i → A_{m+1} ⊗ V_{i-1}`; basis index `u * dim V + k`.
    pub fn differential(&self, m: usize, i: usize) -> Option<&Matrix<F>> {
        self.diffs.get(&(m, i))
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.diffs.keys().copied()
    }

    pub fn term_dim(&self, m: usize, i: usize) -> usize {
        self.a_dims[m] * self.dual_dims[i]
    }

    /// `d^k` starting at `(m, i)`.
    pub fn power(&self, m: usize, i: usize, k: usize) -> Result<Matrix<F>> {
        let missing = || Error::Internal(format!("no differential at ({m}, {i})"));
        let first = self.differential(m, i).ok_or_else(missing)?;
        let mut acc = Matrix::identity(first.field(), self.term_dim(m, i));
        for step in 0..k {
            let d = self
                .differential(m + step, i - step)
                .ok_or_else(|| Error::Internal(format!("no differential at ({}, {})", m + step, i - step)))?;
            acc = d.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Bidegrees where `d^N` fails to vanish.
    pub fn nilpotency_failures(&self) -> Result<Vec<(usize, usize)>> {
        let mut failures = Vec::new();
        for (m, i) in self.bidegrees() {
            if i >= self.big_n && !self.power(m, i, self.big_n)?.is_zero() {
                failures.push((m, i));
            }
        }
        Ok(failures)
    }
}

/// Right action of a generator on `A_m`, as used by the differential.
trait RightAction<F: Field>: Sync {
    fn act(&self, m: usize, s: usize) -> Result<Matrix<F>>;
}

struct Untwisted<'a, F: Field>(&'a Presentation<F>);

impl<F: Field> RightAction<F> for Untwisted<'_, F> {
    fn act(&self, m: usize, s: usize) -> Result<Matrix<F>> {
        Ok((*self.0.right_mult(m, s)?).clone())
    }
}

/// `a ⋄ e_s = a · α^m(e_s) = Σ_t (α^m)_{ts} a·e_t`.
struct Twisted<'a, F: Field> {
    p: &'a Presentation<F>,
    alpha: &'a GradedAutomorphism<F>,
}

impl<F: Field> RightAction<F> for Twisted<'_, F> {
    fn act(&self, m: usize, s: usize) -> Result<Matrix<F>> {
        let f = self.p.field();
        let power = self.alpha.power(m as i64);
        let mut acc = Matrix::zeros(f, self.p.dim(m + 1)?, self.p.dim(m)?);
        for t in 0..self.p.dim_e() {
            let c = power.get(t, s);
            if !f.is_zero(c) {
                acc = acc.add(&self.p.right_mult(m, t)?.scale(c))?;
            }
        }
        Ok(acc)
    }
}

/// Dimensions of `A^{!*}_i` for `i ≤ cutoff` and the splitting of each nonzero one.
type DualData<F> = (Vec<usize>, Vec<Option<DualSplit<F>>>);

pub(crate) fn dual_splits<F: Field>(duals: &Presentation<F>, cutoff: usize) -> Result<DualData<F>> {
    let mut dims = Vec::with_capacity(cutoff + 1);
    let mut splits = vec![None];
    let mut prev = duals.dual_component(0)?;
    dims.push(prev.dim());
    for i in 1..=cutoff {
        let cur = duals.dual_component(i)?;
        dims.push(cur.dim());
        splits.push(if cur.is_zero() {
            None
        } else {
            Some(split_dual(duals.tensor(), &cur, &prev)?)
        });
        prev = cur;
    }
    Ok((dims, splits))
}

fn build_complex<F: Field>(
    algebra: &Presentation<F>,
    duals: &Presentation<F>,
    action: &dyn RightAction<F>,
    cutoff: usize,
) -> Result<KoszulNComplex<F>> {
    let f = algebra.field();
    let a_dims = algebra.hilbert_series(cutoff)?;
    let (dual_dims, splits) = dual_splits(duals, cutoff)?;
    let mut diffs = BTreeMap::new();
    for i in 1..=cutoff {
        for m in 0..=(cutoff - i) {
            let rows = a_dims[m + 1] * dual_dims[i - 1];
            let mat = match &splits[i] {
                None => Matrix::zeros(f, rows, 0),
                Some(split) => {
                    let mut acc = Matrix::zeros(f, rows, a_dims[m] * dual_dims[i]);
                    for (s, c) in split.coeff.iter().enumerate() {
                        if !c.is_zero() {
                            acc = acc.add(&action.act(m, s)?.kron(c))?;
                        }
                    }
                    acc
                }
            };
            diffs.insert((m, i), mat);
        }
    }
    Ok(KoszulNComplex {
        big_n: algebra.degree(),
        cutoff,
        a_dims,
        dual_dims,
        diffs,
    })
}

/// `K(A)` up to internal degree `cutoff`.
pub fn koszul_complex<F: Field>(p: &Presentation<F>, cutoff: usize) -> Result<KoszulNComplex<F>> {
    build_complex(p, p, &Untwisted(p), cutoff)
}

/// The single differential `d : A_m ⊗ A^{!*}_i → A_{m+1} ⊗ A^{!*}_{i-1}`.
pub fn koszul_differential<F: Field>(p: &Presentation<F>, m: usize, i: usize) -> Result<Matrix<F>> {
    if i == 0 {
        return Err(Error::InvalidArgument("the differential starts at i >= 1".into()));
    }
    let complex = build_complex(p, p, &Untwisted(p), m + i)?;
    Ok(complex
        .differential(m, i)
        .expect("bidegree inside the truncation")
        .clone())
}

/// `K(A^α)` built on the underlying space of `A` with the twisted product
/// `a ⋄ e = a·α^{|a|}(e)` and the dual components of `θ_N^{-1}(R)`.
pub fn twisted_complex<F: Field>(
    p: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    cutoff: usize,
) -> Result<KoszulNComplex<F>> {
    let twisted = semi_cross(p, alpha)?;
    build_complex(p, &twisted, &Twisted { p, alpha }, cutoff)
}

/// Matrix of the algebra isomorphism `A(E, θ_N^{-1}R)_m → (A, ⋄)_m`,
/// `[w] ↦ [θ_m(w)]`, in the two normal-word bases.
pub fn semi_cross_transport<F: Field>(
    p: &Presentation<F>,
    twisted: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    m: usize,
) -> Result<Matrix<F>> {
    let f = p.field();
    let src = twisted.component(m)?;
    let dst_dim = p.dim(m)?;
    let ambient = p.words(m).len();
    let mut out = Matrix::zeros(f, dst_dim, src.dim());
    for (col, &w) in src.normal_words().iter().enumerate() {
        let mut unit = vec![f.zero(); ambient];
        unit[w] = f.one();
        let image = p.project(m, &apply_theta(p.tensor(), alpha, m, &unit)?)?;
        for (row, x) in image.coords.into_iter().enumerate() {
            if !f.is_zero(&x) {
                out.set(row, col, x);
            }
        }
    }
    Ok(out)
}

/// `θ_n v`, applied one tensor factor at a time.
pub fn apply_theta<F: Field>(
    tensor: &TensorAlgebra,
    alpha: &GradedAutomorphism<F>,
    n: usize,
    v: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    let factors: Vec<Matrix<F>> = (0..n).map(|t| alpha.power(t as i64)).collect();
    tensor.apply_factorwise(&factors, v)
}

/// Compares the two constructions of `K(A^α)`: the ordinary complex of the
/// semi-cross presentation, and the twisted complex on `A`, through the
/// transport isomorphism on the algebra factor.
pub fn twisted_paths_agree<F: Field>(
    p: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    cutoff: usize,
) -> Result<bool> {
    let twisted = semi_cross(p, alpha)?;
    let direct = koszul_complex(&twisted, cutoff)?;
    let on_a = twisted_complex(p, alpha, cutoff)?;
    if direct.dual_dims != on_a.dual_dims || direct.a_dims != on_a.a_dims {
        return Ok(false);
    }
    let f = p.field();
    let transports = (0..=cutoff)
        .map(|m| semi_cross_transport(p, &twisted, alpha, m))
        .collect::<Result<Vec<_>>>()?;
    for (m, i) in direct.bidegrees() {
        let id_src = Matrix::identity(f, direct.dual_dims[i]);
        let id_dst = Matrix::identity(f, direct.dual_dims[i - 1]);
        let lhs = on_a.differential(m, i).unwrap().mul(&transports[m].kron(&id_src))?;
        let rhs = transports[m + 1]
            .kron(&id_dst)
            .mul(direct.differential(m, i).unwrap())?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One internal-degree slice of the contraction: terms `C_q` and maps
/// `C_q → C_{q-1}`.
#[derive(Clone, Debug)]
pub struct ContractionSlice<F: Field> {
    pub degree: usize,
    /// `(m, i)` of each term `A_m ⊗ V_i`, indexed by `q`.
    pub terms: Vec<(usize, usize)>,
    pub term_dims: Vec<usize>,
    /// `maps[q - 1] : C_q → C_{q-1}`.
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> ContractionSlice<F> {
    fn rank_of_map(&self, q: usize) -> usize {
        if q == 0 || q > self.maps.len() {
            0
        } else {
            self.maps[q - 1].rank()
        }
    }

    /// `dim H_q` for every `q` in the slice, `q = 0` included.
    pub fn homology(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.term_dims.len()).map(|q| self.rank_of_map(q)).collect();
        (0..self.term_dims.len())
            .map(|q| self.term_dims[q] - ranks[q] - ranks[q + 1])
            .collect()
    }

    pub fn homology_at(&self, q: usize) -> usize {
        if q >= self.term_dims.len() {
            return 0;
        }
        self.term_dims[q] - self.rank_of_map(q) - self.rank_of_map(q + 1)
    }

    /// Homological degrees `q` where `maps[q-1] ∘ maps[q]` is nonzero.
    pub fn composite_failures(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for q in 1..self.maps.len() {
            if !self.maps[q - 1].mul(&self.maps[q])?.is_zero() {
                out.push(q + 1);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct ContractionComplex<F: Field> {
    pub big_n: usize,
    pub cutoff: usize,
    pub slices: Vec<ContractionSlice<F>>,
}

/// Contraction of a built N-complex: `d` out of odd terms, `δ = d^{N-1}`
/// out of even ones.
pub fn contract<F: Field>(k: &KoszulNComplex<F>) -> Result<ContractionComplex<F>> {
    let big_n = k.big_n;
    let slices = (0..=k.cutoff)
        .map(|n| {
            let mut terms = Vec::new();
            let mut q = 0;
            loop {
                let i = contraction_index(q, big_n);
                if i > n || k.dual_dims[i] == 0 {
                    break;
                }
                terms.push((n - i, i));
                q += 1;
            }
            let term_dims = terms.iter().map(|&(m, i)| k.term_dim(m, i)).collect();
            let maps = (1..terms.len())
                .map(|q| {
                    let (m, i) = terms[q];
                    let steps = if q % 2 == 1 { 1 } else { big_n - 1 };
                    k.power(m, i, steps)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ContractionSlice {
                degree: n,
                terms,
                term_dims,
                maps,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ContractionComplex {
        big_n,
        cutoff: k.cutoff,
        slices,
    })
}

pub fn contraction<F: Field>(p: &Presentation<F>, cutoff: usize) -> Result<ContractionComplex<F>> {
    contract(&koszul_complex(p, cutoff)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KoszulVerdict {
    KoszulUpToCutoff,
    NotKoszul {
        degree: usize,
        hom_degree: usize,
        dim: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulityReport {
    pub cutoff: usize,
    pub verdict: KoszulVerdict,
    /// `table[n][q - 1] = dim H_q` at internal degree `n`, for `q ≥ 1`.
    pub table: Vec<Vec<usize>>,
}

impl KoszulityReport {
    pub fn is_koszul(&self) -> bool {
        self.verdict == KoszulVerdict::KoszulUpToCutoff
    }
}

/// Homology tables of a contraction, slices evaluated in parallel.
pub fn homology_table<F: Field>(c: &ContractionComplex<F>) -> Vec<Vec<usize>> {
    c.slices
        .par_iter()
        .map(|s| s.homology().into_iter().skip(1).collect())
        .collect()
}

pub fn check_koszul<F: Field>(p: &Presentation<F>, cutoff: usize) -> Result<KoszulityReport> {
    if cutoff < p.degree() {
        return Err(Error::InvalidArgument(format!(
            "cutoff {cutoff} is below the relation degree {}",
            p.degree()
        )));
    }
    let c = contraction(p, cutoff)?;
    let table = homology_table(&c);
    if let Some(n) = table.iter().position(|row| row.first().is_some_and(|&h| h != 0)) {
        return Err(Error::Internal(format!(
            "contraction is not exact at homological degree 1 in internal degree {n}"
        )));
    }
    let verdict = table
        .iter()
        .enumerate()
        .find_map(|(n, row)| {
            row.iter()
                .enumerate()
                .find(|(_, &h)| h != 0)
                .map(|(q, &dim)| KoszulVerdict::NotKoszul {
                    degree: n,
                    hom_degree: q + 1,
                    dim,
                })
        })
        .unwrap_or(KoszulVerdict::KoszulUpToCutoff);
    Ok(KoszulityReport { cutoff, verdict, table })
}

/// Recomputes `dim H_q` of the contraction at one internal degree.
pub fn homology_at<F: Field>(p: &Presentation<F>, degree: usize, hom_degree: usize) -> Result<usize> {
    let c = contraction(p, degree)?;
    Ok(c.slices[degree].homology_at(hom_degree))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    /// `value` is the largest `q` with `A^{!*}_{c(q)} ≠ 0`; `vanishing` is
    /// the first `i` with `A^{!*}_i = 0`.
    Finite {
        value: usize,
        vanishing: usize,
    },
    /// One generator with a nonzero relation: every dual component is `k`.
    Infinite,
    ExceedsCap {
        checked_through: usize,
    },
}

impl GlobalDimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            GlobalDimension::Finite { value, .. } => Some(*value),
            GlobalDimension::Infinite | GlobalDimension::ExceedsCap { .. } => None,
        }
    }
}

/// Exact: once a dual component vanishes every later one does.
pub fn global_dimension<F: Field>(p: &Presentation<F>) -> Result<GlobalDimension> {
    if p.dim_e() == 1 && !p.relations().is_zero() {
        return Ok(GlobalDimension::Infinite);
    }
    let mut i = 0;
    loop {
        match p.dual_component(i) {
            Ok(v) if v.is_zero() => break,
            Ok(_) => i += 1,
            Err(Error::ResourceCap { .. }) => {
                return Ok(GlobalDimension::ExceedsCap {
                    checked_through: i.saturating_sub(1),
                })
            }
            Err(e) => return Err(e),
        }
    }
    let mut q = 0;
    while contraction_index(q + 1, p.degree()) < i {
        q += 1;
    }
    Ok(GlobalDimension::Finite { value: q, vanishing: i })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareCheck {
    pub cutoff: usize,
    pub hilbert: Vec<usize>,
    /// Coefficients of `Σ_q (-1)^q dim A^{!*}_{c(q)} t^{c(q)}`, truncated.
    pub dual_poly: Vec<i64>,
    /// Coefficients of `P_A(t)·dual_poly − 1` below `t^{cutoff+1}`.
    pub residual: Vec<i64>,
}

impl PoincareCheck {
    pub fn passes(&self) -> bool {
        self.residual.iter().all(|&c| c == 0)
    }
}

pub fn poincare_identity_check<F: Field>(p: &Presentation<F>, cutoff: usize) -> Result<PoincareCheck> {
    let hilbert = p.hilbert_series(cutoff)?;
    let mut dual_poly = vec![0i64; cutoff + 1];
    let mut q = 0;
    loop {
        let i = contraction_index(q, p.degree());
        if i > cutoff {
            break;
        }
        let dim = p.dual_component(i)?.dim() as i64;
        if dim == 0 {
            break;
        }
        dual_poly[i] = if q % 2 == 0 { dim } else { -dim };
        q += 1;
    }
    let residual = (0..=cutoff)
        .map(|n| {
            let conv: i64 = (0..=n).map(|k| hilbert[k] as i64 * dual_poly[n - k]).sum();
            conv - i64::from(n == 0)
        })
        .collect();
    Ok(PoincareCheck {
        cutoff,
        hilbert,
        dual_poly,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistIsoReport {
    pub cutoff: usize,
    /// Tensor degrees `i` where `θ_i((A^α)^{!*}_i) ≠ A^{!*}_i`.
    pub dual_mismatches: Vec<usize>,
    /// Bidegrees `(m, i)` where `K(θ)` is not invertible.
    pub singular: Vec<(usize, usize)>,
    /// Bidegrees `(m, i)` where `K(θ)∘d^α ≠ d∘K(θ)`.
    pub chain_failures: Vec<(usize, usize)>,
    pub bidegrees_checked: usize,
    pub homology_agrees: bool,
}

impl TwistIsoReport {
    pub fn passed(&self) -> bool {
        self.dual_mismatches.is_empty()
            && self.singular.is_empty()
            && self.chain_failures.is_empty()
            && self.homology_agrees
    }
}

/// Matrix of `e ↦ α^m θ_i(e)` from `(A^α)^{!*}_i` to `A^{!*}_i`.
fn k_theta_block<F: Field>(
    p: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    src: &TensorSubspace<F>,
    dst: &TensorSubspace<F>,
    m: usize,
) -> Result<Matrix<F>> {
    let f = p.field();
    let i = src.degree;
    let shift = alpha.power(m as i64);
    let factors: Vec<Matrix<F>> = (0..i)
        .map(|t| shift.mul(&alpha.power(t as i64)))
        .collect::<Result<_>>()?;
    let mut out = Matrix::zeros(f, dst.dim(), src.dim());
    for k in 0..src.dim() {
        let image = p.tensor().apply_factorwise(&factors, src.space.basis_vector(k))?;
        let c = dst.space.coordinates(&image).map_err(|_| {
            Error::Internal(format!(
                "α^{m}∘θ_{i} does not map the twisted dual component into A^!*_{i}"
            ))
        })?;
        for (l, x) in c.into_iter().enumerate() {
            if !f.is_zero(&x) {
                out.set(l, k, x);
            }
        }
    }
    Ok(out)
}

/// Checks that `K(θ) : K(A^α) → K(A)`, `a ⊗ e ↦ a ⊗ α^{|a|} θ_i(e)`, is an
/// isomorphism of N-complexes within the truncation.
pub fn verify_twist_iso<F: Field>(
    p: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    cutoff: usize,
) -> Result<TwistIsoReport> {
    let f = p.field();
    let twisted = semi_cross(p, alpha)?;

    let mut dual_mismatches = Vec::new();
    for i in 0..=cutoff {
        let src = twisted.dual_component(i)?;
        let dst = p.dual_component(i)?;
        let mut images = crate::exactlin::Echelon::new(f, dst.space.ambient_dim());
        for k in 0..src.dim() {
            images.insert(apply_theta(p.tensor(), alpha, i, src.space.basis_vector(k))?);
        }
        if images.finish() != dst.space {
            dual_mismatches.push(i);
        }
        if src.is_zero() && dst.is_zero() {
            break;
        }
    }
    if !dual_mismatches.is_empty() {
        return Ok(TwistIsoReport {
            cutoff,
            dual_mismatches,
            singular: Vec::new(),
            chain_failures: Vec::new(),
            bidegrees_checked: 0,
            homology_agrees: false,
        });
    }

    let d_alpha = twisted_complex(p, alpha, cutoff)?;
    let d = koszul_complex(p, cutoff)?;
    let mut blocks: BTreeMap<(usize, usize), Matrix<F>> = BTreeMap::new();
    let mut singular = Vec::new();
    for m in 0..=cutoff {
        for i in 0..=(cutoff - m) {
            let (src, dst) = (twisted.dual_component(i)?, p.dual_component(i)?);
            let t = k_theta_block(p, alpha, &src, &dst, m)?;
            if t.rows() != t.cols() || (t.rows() > 0 && t.inverse().is_none()) {
                singular.push((m, i));
            }
            blocks.insert((m, i), Matrix::identity(f, d.a_dims[m]).kron(&t));
        }
    }
    let mut chain_failures = Vec::new();
    let mut bidegrees_checked = 0;
    for (m, i) in d.bidegrees() {
        let lhs = blocks[&(m + 1, i - 1)].mul(d_alpha.differential(m, i).unwrap())?;
        let rhs = d.differential(m, i).unwrap().mul(&blocks[&(m, i)])?;
        if lhs != rhs {
            chain_failures.push((m, i));
        }
        bidegrees_checked += 1;
    }

    let homology_agrees = if cutoff >= p.degree() {
        check_koszul(p, cutoff)?.table == check_koszul(&twisted, cutoff)?.table
    } else {
        homology_table(&contraction(p, cutoff)?) == homology_table(&contraction(&twisted, cutoff)?)
    };

    Ok(TwistIsoReport {
        cutoff,
        dual_mismatches,
        singular,
        chain_failures,
        bidegrees_checked,
        homology_agrees,
    })
}
