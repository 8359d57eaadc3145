//! Tensor powers `E^{⊗n}` on the word basis, and the block subspaces built
//! from a relation space: ideal components `Σ E^j⊗R⊗E^k` and the
//! intersections `⋂ E^j⊗R⊗E^k` that realize the dual components.
//!
//! Words of length `n` over `d` generators are indexed by their base-`d`
//! numeral with the first letter most significant, so pure lexicographic
//! order on words is numeric order on indices.

use crate::error::{Error, Result};
use crate::exactlin::{Echelon, Matrix, Subspace};
use crate::field::Field;

pub const DEFAULT_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordBasis {
    pub dim_e: usize,
    pub degree: usize,
}

impl WordBasis {
    pub fn new(dim_e: usize, degree: usize) -> Self {
        WordBasis { dim_e, degree }
    }

    pub fn len(&self) -> usize {
        self.dim_e.pow(self.degree as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, word: &[usize]) -> usize {
        debug_assert_eq!(word.len(), self.degree);
        word.iter().fold(0, |acc, &g| acc * self.dim_e + g)
    }

    pub fn word(&self, mut index: usize) -> Vec<usize> {
        let mut w = vec![0; self.degree];
        for slot in w.iter_mut().rev() {
            *slot = index % self.dim_e;
            index /= self.dim_e;
        }
        w
    }

    pub fn words(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(move |i| self.word(i))
    }
}

/// A subspace of `E^{⊗degree}`.
#[derive(Clone, Debug)]
pub struct TensorSubspace<F: Field> {
    pub degree: usize,
    pub space: Subspace<F>,
}

impl<F: Field> PartialEq for TensorSubspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.space == other.space
    }
}

impl<F: Field> TensorSubspace<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// Shape of the tensor algebra `T(E)`: the number of generators and the
/// largest ambient dimension any computation may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorAlgebra {
    pub dim_e: usize,
    pub cap: usize,
}

impl TensorAlgebra {
    pub fn new(dim_e: usize) -> Self {
        TensorAlgebra {
            dim_e,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// `dim_e^n`, or a resource error when it exceeds the cap.
    pub fn ambient(&self, degree: usize) -> Result<usize> {
        let mut acc: usize = 1;
        for _ in 0..degree {
            acc = acc.saturating_mul(self.dim_e);
            if acc > self.cap {
                return Err(Error::ResourceCap {
                    degree,
                    ambient: self.dim_e.saturating_pow(degree as u32),
                    cap: self.cap,
                });
            }
        }
        Ok(acc)
    }

    pub fn basis(&self, degree: usize) -> WordBasis {
        WordBasis::new(self.dim_e, degree)
    }

    pub fn zero<F: Field>(&self, field: &F, degree: usize) -> Result<TensorSubspace<F>> {
        Ok(TensorSubspace {
            degree,
            space: Subspace::zero(field, self.ambient(degree)?),
        })
    }

    pub fn full<F: Field>(&self, field: &F, degree: usize) -> Result<TensorSubspace<F>> {
        Ok(TensorSubspace {
            degree,
            space: Subspace::full(field, self.ambient(degree)?),
        })
    }

    /// `E^{⊗j} ⊗ r ⊗ E^{⊗k}`.
    ///
    /// Shifted copies of a canonical basis are again canonical: the pivot of
    /// `w ⊗ r_b ⊗ w'` is `(w, p_b, w')` in lex order and every other pivot
    /// column of that block lies outside its support.
    pub fn block_embed<F: Field>(&self, r: &TensorSubspace<F>, j: usize, k: usize) -> Result<TensorSubspace<F>> {
        let degree = j + r.degree + k;
        let ambient = self.ambient(degree)?;
        let field = r.space.field();
        let left = self.ambient(j)?;
        let right = self.ambient(k)?;
        let inner = r.space.ambient_dim();
        let mut rows = Vec::with_capacity(left * r.dim() * right);
        for w in 0..left {
            for b in 0..r.dim() {
                let src = r.space.basis_vector(b);
                let pivot = r.space.pivots()[b];
                for w2 in 0..right {
                    let mut v = vec![field.zero(); ambient];
                    for (c, x) in src.iter().enumerate() {
                        if !field.is_zero(x) {
                            v[(w * inner + c) * right + w2] = x.clone();
                        }
                    }
                    rows.push(((w * inner + pivot) * right + w2, v));
                }
            }
        }
        Ok(TensorSubspace {
            degree,
            space: Subspace::from_rref_unchecked(field, ambient, rows),
        })
    }

    /// `I(R)_n = Σ_{j+N+k=n} E^{⊗j} ⊗ R ⊗ E^{⊗k}`.
    pub fn ideal_component<F: Field>(&self, r: &TensorSubspace<F>, n: usize) -> Result<TensorSubspace<F>> {
        let big_n = r.degree;
        if n < big_n {
            return self.zero(r.space.field(), n);
        }
        let mut current = r.clone();
        for _ in big_n..n {
            current = self.ideal_next(&current, r)?;
        }
        Ok(current)
    }

    /// Given `I(R)_{n-1}` (with `n-1 >= N`), returns `I(R)_n = E ⊗ I_{n-1} + R ⊗ E^{n-N}`.
    pub fn ideal_next<F: Field>(&self, prev: &TensorSubspace<F>, r: &TensorSubspace<F>) -> Result<TensorSubspace<F>> {
        let n = prev.degree + 1;
        if n <= r.degree {
            return if n == r.degree {
                Ok(r.clone())
            } else {
                self.zero(r.space.field(), n)
            };
        }
        let shifted = self.block_embed(prev, 1, 0)?;
        let tail = self.block_embed(r, 0, n - r.degree)?;
        let mut ech = Echelon::from_subspace(&shifted.space);
        for b in 0..tail.dim() {
            ech.insert(tail.space.basis_vector(b).to_vec());
        }
        Ok(TensorSubspace {
            degree: n,
            space: ech.finish(),
        })
    }

    /// Dual component: all of `E^{⊗i}` for `i < N`, and
    /// `⋂_{j+N+k=i} E^{⊗j} ⊗ R ⊗ E^{⊗k}` for `i >= N`.
    pub fn dual_component<F: Field>(&self, r: &TensorSubspace<F>, i: usize) -> Result<TensorSubspace<F>> {
        let field = r.space.field();
        if i < r.degree {
            return self.full(field, i);
        }
        let mut current = r.clone();
        for _ in r.degree..i {
            if current.is_zero() {
                return self.zero(field, i);
            }
            current = self.dual_next(&current, r)?;
        }
        Ok(current)
    }

    /// Given the dual component in degree `i-1 >= N`, returns degree `i`.
    ///
    /// Every block with `j >= 1` factors as `E ⊗ (block of degree i-1)`, so
    /// the intersection collapses to `(E ⊗ prev) ∩ (R ⊗ E^{i-N})`.
    pub fn dual_next<F: Field>(&self, prev: &TensorSubspace<F>, r: &TensorSubspace<F>) -> Result<TensorSubspace<F>> {
        let i = prev.degree + 1;
        let field = r.space.field();
        if i < r.degree {
            return self.full(field, i);
        }
        if i == r.degree {
            return Ok(r.clone());
        }
        if prev.is_zero() || r.is_zero() {
            return self.zero(field, i);
        }
        let left = self.block_embed(prev, 1, 0)?;
        let right = self.block_embed(r, 0, i - r.degree)?;
        Ok(TensorSubspace {
            degree: i,
            space: left.space.intersect(&right.space)?,
        })
    }

    /// Matrix of `a^{⊗n}` on `E^{⊗n}`.
    pub fn tensor_power_matrix<F: Field>(&self, a: &Matrix<F>, n: usize) -> Result<Matrix<F>> {
        self.ambient(n)?;
        let mut acc = Matrix::identity(a.field(), 1);
        for _ in 0..n {
            acc = acc.kron(a);
        }
        Ok(acc)
    }

    /// `a^{⊗n} v`, one tensor factor at a time.
    pub fn apply_tensor_power<F: Field>(&self, a: &Matrix<F>, n: usize, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.apply_factorwise(&vec![a.clone(); n], v)
    }

    /// `(a_0 ⊗ a_1 ⊗ … ⊗ a_{n-1}) v` without materializing the product;
    /// `a_0` acts on the first (most significant) factor.
    pub fn apply_factorwise<F: Field>(&self, factors: &[Matrix<F>], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let total = self.ambient(factors.len())?;
        if v.len() != total {
            return Err(Error::DimensionMismatch {
                expected: total,
                found: v.len(),
            });
        }
        let d = self.dim_e;
        let mut cur = v.to_vec();
        let mut outer = 1;
        let mut inner = total / d;
        for a in factors {
            if a.rows() != d || a.cols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: a.rows(),
                });
            }
            let f = a.field();
            let mut next = vec![f.zero(); total];
            for hi in 0..outer {
                for g in 0..d {
                    for lo in 0..inner {
                        let x = &cur[(hi * d + g) * inner + lo];
                        if f.is_zero(x) {
                            continue;
                        }
                        for t in 0..d {
                            let m = a.get(t, g);
                            if !f.is_zero(m) {
                                f.add_mul_assign(&mut next[(hi * d + t) * inner + lo], m, x);
                            }
                        }
                    }
                }
            }
            cur = next;
            outer *= d;
            inner /= d.max(1);
        }
        Ok(cur)
    }

    /// Image of a tensor subspace under `a^{⊗n}`.
    pub fn apply_to_subspace<F: Field>(&self, a: &Matrix<F>, s: &TensorSubspace<F>) -> Result<TensorSubspace<F>> {
        let f = s.space.field();
        let mut ech = Echelon::new(f, s.space.ambient_dim());
        for b in 0..s.dim() {
            ech.insert(self.apply_tensor_power(a, s.degree, s.space.basis_vector(b))?);
        }
        Ok(TensorSubspace {
            degree: s.degree,
            space: ech.finish(),
        })
    }

    /// Splits a vector of `E^{⊗i}` as `Σ_s e_s ⊗ w_s`; returns the `w_s`.
    pub fn split_first<'a, T>(&self, v: &'a [T]) -> impl Iterator<Item = &'a [T]> {
        let chunk = v.len() / self.dim_e.max(1);
        v.chunks(chunk.max(1)).take(self.dim_e)
    }
}
