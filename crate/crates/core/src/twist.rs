//! Twisting maps `θ_n = id ⊗ α ⊗ α² ⊗ … ⊗ α^{n-1}` and the semi-cross
//! product presentation `A^α = A(E, θ_N^{-1}(R))`.

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::presentation::{AlgebraElement, GradedAutomorphism, Presentation};
use crate::tensorspace::TensorAlgebra;

/// `θ_n` materialized on the word basis of `E^{⊗n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaMap<F: Field> {
    pub degree: usize,
    pub matrix: Matrix<F>,
}

/// Builds `id ⊗ g ⊗ g² ⊗ … ⊗ g^{n-1}` for an arbitrary square `g`.
pub fn theta_of_matrix<F: Field>(tensor: &TensorAlgebra, g: &Matrix<F>, n: usize) -> Result<ThetaMap<F>> {
    tensor.ambient(n)?;
    let f = g.field();
    let mut acc = Matrix::identity(f, 1);
    let mut power = Matrix::identity(f, g.rows());
    for _ in 0..n {
        acc = acc.kron(&power);
        power = power.mul(g)?;
    }
    Ok(ThetaMap { degree: n, matrix: acc })
}

pub fn theta<F: Field>(tensor: &TensorAlgebra, alpha: &GradedAutomorphism<F>, n: usize) -> Result<ThetaMap<F>> {
    theta_of_matrix(tensor, alpha.matrix(), n)
}

/// `θ_n^{-1}`, which is the twisting map of `α^{-1}`.
pub fn theta_inverse<F: Field>(tensor: &TensorAlgebra, alpha: &GradedAutomorphism<F>, n: usize) -> Result<ThetaMap<F>> {
    theta_of_matrix(tensor, alpha.inverse_matrix(), n)
}

/// Right-hand side of the splitting identity
/// `θ_{n+1} = (θ_{p+1} ⊗ id) ∘ (id ⊗ (α^{p+1} ∘ θ_{n-p}))` for `p < n`.
pub fn theta_split<F: Field>(tensor: &TensorAlgebra, g: &Matrix<F>, n: usize, p: usize) -> Result<Matrix<F>> {
    if p >= n {
        return Err(Error::InvalidArgument(format!("split {p} must be below {n}")));
    }
    let f = g.field();
    let head = theta_of_matrix(tensor, g, p + 1)?.matrix;
    let tail_len = n - p;
    let tail_id = Matrix::identity(f, tensor.ambient(tail_len)?);
    let head_id = Matrix::identity(f, tensor.ambient(p + 1)?);
    let shift = tensor.tensor_power_matrix(&g.pow(p + 1)?, tail_len)?;
    let tail = shift.mul(&theta_of_matrix(tensor, g, tail_len)?.matrix)?;
    head.kron(&tail_id).mul(&head_id.kron(&tail))
}

/// Checks the splitting identity for every `p < n`.
pub fn theta_split_holds<F: Field>(tensor: &TensorAlgebra, g: &Matrix<F>, n: usize) -> Result<bool> {
    let lhs = theta_of_matrix(tensor, g, n + 1)?.matrix;
    for p in 0..n {
        if theta_split(tensor, g, n, p)? != lhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The semi-cross product `A^α`, presented as `A(E, θ_N^{-1}(R))`.
pub fn semi_cross<F: Field>(p: &Presentation<F>, alpha: &GradedAutomorphism<F>) -> Result<Presentation<F>> {
    let checked = p.validate_automorphism(alpha.matrix().clone())?;
    let inv = theta_inverse(p.tensor(), &checked, p.degree())?;
    let relations = p.relations().space.image(&inv.matrix)?;
    let out = p.with_relations(relations)?;
    // α commutes with θ, so it preserves the new relations as well
    out.validate_automorphism(alpha.matrix().clone())
        .map_err(|e| Error::Internal(format!("automorphism does not descend to the semi-cross product: {e}")))?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub cutoff: usize,
    pub words_checked: usize,
    /// First `(degree, word)` where the twisted product of the letters
    /// differs from the class of `θ_n(word)`.
    pub counterexample: Option<(usize, Vec<usize>)>,
    /// Degrees where `ker(m ∘ θ_n) ≠ I(θ_N^{-1} R)_n`.
    pub kernel_mismatches: Vec<usize>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.kernel_mismatches.is_empty()
    }
}

/// Checks `m_α = m ∘ θ` on every word up to `cutoff`, and that the kernel of
/// `m ∘ θ_n` is the ideal generated by `θ_N^{-1}(R)`.
pub fn verify_m_alpha_diagram<F: Field>(
    p: &Presentation<F>,
    alpha: &GradedAutomorphism<F>,
    cutoff: usize,
) -> Result<DiagramReport> {
    let f = p.field();
    let twisted = semi_cross(p, alpha)?;
    let mut words_checked = 0;
    let mut counterexample = None;
    let mut kernel_mismatches = Vec::new();
    for n in 1..=cutoff {
        let theta_n = theta(p.tensor(), alpha, n)?;
        let basis = p.words(n);
        let comp = p.component(n)?;
        let mut composite = Matrix::zeros(f, comp.dim(), basis.len());
        for (idx, word) in basis.words().enumerate() {
            let mut unit = vec![f.zero(); basis.len()];
            unit[idx] = f.one();
            let via_theta = p.project(n, &theta_n.matrix.apply(&unit)?)?;
            for (row, x) in via_theta.coords.iter().enumerate() {
                if !f.is_zero(x) {
                    composite.set(row, idx, x.clone());
                }
            }
            if counterexample.is_none() {
                let mut acc: AlgebraElement<F> = p.one();
                for &g in &word {
                    acc = p.twisted_multiply(alpha, &acc, &p.generator(g)?)?;
                }
                if acc != via_theta {
                    counterexample = Some((n, word.clone()));
                }
            }
            words_checked += 1;
        }
        if composite.kernel() != twisted.component(n)?.ideal.space {
            kernel_mismatches.push(n);
        }
    }
    Ok(DiagramReport {
        cutoff,
        words_checked,
        counterexample,
        kernel_mismatches,
    })
}
