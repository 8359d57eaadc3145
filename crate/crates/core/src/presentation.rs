//! Presentations `A = T(E)/I(R)` of N-homogeneous algebras.
//!
//! The basis of `A_n` is the set of normal words: the non-pivot columns of
//! the canonical basis of `I(R)_n`. Every pivot word reduces to a combination
//! of normal words by reading off its row, which makes projection a plain
//! linear substitution.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::field::Field;
use crate::tensorspace::{TensorAlgebra, TensorSubspace, WordBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WordClass {
    Normal(usize),
    /// Pivot word of the given ideal row.
    Reducible(usize),
}

/// `A_n = E^{⊗n} / I(R)_n` with its normal-word basis.
#[derive(Debug)]
pub struct GradedComponent<F: Field> {
    pub degree: usize,
    pub ideal: TensorSubspace<F>,
    normal_words: Vec<usize>,
    class: Vec<WordClass>,
    reductions: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> GradedComponent<F> {
    fn new(ideal: TensorSubspace<F>) -> Self {
        let space = &ideal.space;
        let f = space.field();
        let ambient = space.ambient_dim();
        let mut class = vec![WordClass::Normal(usize::MAX); ambient];
        for (k, &p) in space.pivots().iter().enumerate() {
            class[p] = WordClass::Reducible(k);
        }
        let mut normal_words = Vec::with_capacity(ambient - space.dim());
        for (w, c) in class.iter_mut().enumerate() {
            if let WordClass::Normal(slot) = c {
                *slot = normal_words.len();
                normal_words.push(w);
            }
        }
        // pivot word ≡ -Σ row[c]·c over the normal columns c of its row
        let reductions = (0..space.dim())
            .map(|k| {
                normal_words
                    .iter()
                    .enumerate()
                    .filter_map(|(slot, &w)| {
                        let x = &space.basis_vector(k)[w];
                        (!f.is_zero(x)).then(|| (slot, f.neg(x)))
                    })
                    .collect()
            })
            .collect();
        GradedComponent {
            degree: ideal.degree,
            ideal,
            normal_words,
            class,
            reductions,
        }
    }

    pub fn dim(&self) -> usize {
        self.normal_words.len()
    }

    /// Word indices (in `E^{⊗n}`) of the normal words, in increasing order.
    pub fn normal_words(&self) -> &[usize] {
        &self.normal_words
    }

    /// Class of a single word, as sparse coordinates over the normal words.
    pub fn reduce_word(&self, word: usize) -> Vec<(usize, F::Elem)>
    where
        F: Field,
    {
        match self.class[word] {
            WordClass::Normal(slot) => vec![(slot, self.ideal.space.field().one())],
            WordClass::Reducible(k) => self.reductions[k].clone(),
        }
    }

    fn accumulate_word(&self, word: usize, coeff: &F::Elem, out: &mut [F::Elem]) {
        let f = self.ideal.space.field();
        match self.class[word] {
            WordClass::Normal(slot) => out[slot] = f.add(&out[slot], coeff),
            WordClass::Reducible(k) => {
                for (slot, x) in &self.reductions[k] {
                    f.add_mul_assign(&mut out[*slot], coeff, x);
                }
            }
        }
    }

    /// Image of a vector of `E^{⊗n}` in `A_n`.
    pub fn project(&self, raw: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if raw.len() != self.class.len() {
            return Err(Error::DimensionMismatch {
                expected: self.class.len(),
                found: raw.len(),
            });
        }
        let f = self.ideal.space.field();
        let mut out = vec![f.zero(); self.dim()];
        for (w, c) in raw.iter().enumerate() {
            if !f.is_zero(c) {
                self.accumulate_word(w, c, &mut out);
            }
        }
        Ok(out)
    }

    /// Lift of normal-word coordinates back into `E^{⊗n}`.
    pub fn lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.ideal.space.field();
        let mut raw = vec![f.zero(); self.class.len()];
        for (slot, c) in coords.iter().enumerate() {
            raw[self.normal_words[slot]] = c.clone();
        }
        raw
    }
}

/// A homogeneous element of `A`, in normal-word coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraElement<F: Field> {
    pub degree: usize,
    pub coords: Vec<F::Elem>,
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.coords == other.coords
    }
}

impl<F: Field> AlgebraElement<F> {
    pub fn is_zero(&self, field: &F) -> bool {
        self.coords.iter().all(|x| field.is_zero(x))
    }
}

/// A graded automorphism, given by its invertible action on `E` (columns are
/// the images of the generators).
#[derive(Clone, Debug)]
pub struct GradedAutomorphism<F: Field> {
    matrix: Matrix<F>,
    inverse: Matrix<F>,
}

impl<F: Field> PartialEq for GradedAutomorphism<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<F: Field> GradedAutomorphism<F> {
    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix<F> {
        &self.inverse
    }

    pub fn inverse(&self) -> GradedAutomorphism<F> {
        GradedAutomorphism {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// `α^k` on `E`, negative exponents through the inverse.
    pub fn power(&self, k: i64) -> Matrix<F> {
        let base = if k < 0 { &self.inverse } else { &self.matrix };
        base.pow(k.unsigned_abs() as usize).expect("square matrix")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.field(), self.matrix.rows())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub side: Side,
    pub cutoff: usize,
    /// `(n, dim ker)` for multiplication `A_n → A_{n+deg e}`.
    pub kernel_dims: Vec<(usize, usize)>,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.kernel_dims.iter().all(|&(_, k)| k == 0)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.kernel_dims.iter().find(|&&(_, k)| k > 0).map(|&(n, _)| n)
    }
}

type MultCache<F> = Mutex<HashMap<(usize, usize), Arc<Matrix<F>>>>;

pub struct Presentation<F: Field> {
    field: F,
    gen_names: Vec<String>,
    degree: usize,
    relations: TensorSubspace<F>,
    tensor: TensorAlgebra,
    components: Mutex<Vec<Arc<GradedComponent<F>>>>,
    duals: Mutex<Vec<Arc<TensorSubspace<F>>>>,
    right_mult: MultCache<F>,
    left_mult: MultCache<F>,
}

impl<F: Field> Clone for Presentation<F> {
    fn clone(&self) -> Self {
        Presentation::assemble(
            self.field.clone(),
            self.gen_names.clone(),
            self.degree,
            self.relations.clone(),
            self.tensor,
        )
    }
}

impl<F: Field> std::fmt::Debug for Presentation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("field", &self.field.spec())
            .field("gens", &self.gen_names)
            .field("degree", &self.degree)
            .field("relations", &self.relations.space)
            .finish()
    }
}

impl<F: Field> Presentation<F> {
    fn assemble(
        field: F,
        gen_names: Vec<String>,
        degree: usize,
        relations: TensorSubspace<F>,
        tensor: TensorAlgebra,
    ) -> Self {
        Presentation {
            field,
            gen_names,
            degree,
            relations,
            tensor,
            components: Mutex::new(Vec::new()),
            duals: Mutex::new(Vec::new()),
            right_mult: Mutex::new(HashMap::new()),
            left_mult: Mutex::new(HashMap::new()),
        }
    }

    /// Builds and validates a presentation from its relation subspace.
    pub fn new(field: F, gen_names: Vec<String>, degree: usize, relations: Subspace<F>) -> Result<Self> {
        if gen_names.is_empty() {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        for (i, g) in gen_names.iter().enumerate() {
            if gen_names[..i].contains(g) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{g}`")));
            }
        }
        if degree < 2 {
            return Err(Error::UnsupportedDegree(degree));
        }
        let tensor = TensorAlgebra::new(gen_names.len());
        let ambient = tensor.ambient(degree)?;
        if relations.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: relations.ambient_dim(),
            });
        }
        Ok(Self::assemble(
            field,
            gen_names,
            degree,
            TensorSubspace {
                degree,
                space: relations,
            },
            tensor,
        ))
    }

    /// Convenience constructor from relation vectors over the word basis.
    pub fn from_vectors(field: F, gen_names: Vec<String>, degree: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::UnsupportedDegree(degree));
        }
        let ambient = TensorAlgebra::new(gen_names.len()).ambient(degree)?;
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        let space = Subspace::span(&field, ambient, vectors);
        Self::new(field, gen_names, degree, space)
    }

    /// Same presentation with a different resource cap; caches start empty.
    pub fn with_cap(self, cap: usize) -> Self {
        let tensor = self.tensor.with_cap(cap);
        Self::assemble(self.field, self.gen_names, self.degree, self.relations, tensor)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }
    pub fn dim_e(&self) -> usize {
        self.gen_names.len()
    }
    /// The homogeneous degree `N` of the relations.
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn relations(&self) -> &TensorSubspace<F> {
        &self.relations
    }
    pub fn tensor(&self) -> &TensorAlgebra {
        &self.tensor
    }
    pub fn cap(&self) -> usize {
        self.tensor.cap
    }
    pub fn words(&self, n: usize) -> WordBasis {
        self.tensor.basis(n)
    }

    /// Same generators, degree and field; relations replaced.
    pub fn with_relations(&self, relations: Subspace<F>) -> Result<Self> {
        Ok(Self::new(self.field.clone(), self.gen_names.clone(), self.degree, relations)?.with_cap(self.cap()))
    }

    pub fn component(&self, n: usize) -> Result<Arc<GradedComponent<F>>> {
        let mut cache = self.components.lock().expect("component cache poisoned");
        while cache.len() <= n {
            let next = cache.len();
            let ideal = match cache.last() {
                Some(prev) if next > self.degree => self.tensor.ideal_next(&prev.ideal, &self.relations)?,
                _ if next == self.degree => self.relations.clone(),
                _ => self.tensor.zero(&self.field, next)?,
            };
            cache.push(Arc::new(GradedComponent::new(ideal)));
        }
        Ok(cache[n].clone())
    }

    pub fn dim(&self, n: usize) -> Result<usize> {
        Ok(self.component(n)?.dim())
    }

    pub fn hilbert_series(&self, cutoff: usize) -> Result<Vec<usize>> {
        (0..=cutoff).map(|n| self.dim(n)).collect()
    }

    /// The dual component `A^{!*}_i ⊂ E^{⊗i}`.
    pub fn dual_component(&self, i: usize) -> Result<Arc<TensorSubspace<F>>> {
        let mut cache = self.duals.lock().expect("dual cache poisoned");
        while cache.len() <= i {
            let next = cache.len();
            let space = match cache.last() {
                Some(prev) if next > self.degree => self.tensor.dual_next(prev, &self.relations)?,
                _ if next == self.degree => self.relations.clone(),
                _ => self.tensor.full(&self.field, next)?,
            };
            cache.push(Arc::new(space));
        }
        Ok(cache[i].clone())
    }

    pub fn one(&self) -> AlgebraElement<F> {
        AlgebraElement {
            degree: 0,
            coords: vec![self.field.one()],
        }
    }

    pub fn zero(&self, n: usize) -> Result<AlgebraElement<F>> {
        Ok(AlgebraElement {
            degree: n,
            coords: vec![self.field.zero(); self.dim(n)?],
        })
    }

    pub fn element(&self, degree: usize, coords: Vec<F::Elem>) -> Result<AlgebraElement<F>> {
        let dim = self.dim(degree)?;
        if coords.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coords.len(),
            });
        }
        Ok(AlgebraElement { degree, coords })
    }

    pub fn generator(&self, s: usize) -> Result<AlgebraElement<F>> {
        self.word(&[s])
    }

    /// Class of a word given as generator indices.
    pub fn word(&self, letters: &[usize]) -> Result<AlgebraElement<F>> {
        if let Some(&bad) = letters.iter().find(|&&g| g >= self.dim_e()) {
            return Err(Error::InvalidArgument(format!("generator index {bad} out of range")));
        }
        let n = letters.len();
        let comp = self.component(n)?;
        let mut coords = vec![self.field.zero(); comp.dim()];
        comp.accumulate_word(self.words(n).index(letters), &self.field.one(), &mut coords);
        Ok(AlgebraElement { degree: n, coords })
    }

    /// Image of a raw tensor under `E^{⊗n} → A_n`.
    pub fn project(&self, n: usize, raw: &[F::Elem]) -> Result<AlgebraElement<F>> {
        let coords = self.component(n)?.project(raw)?;
        Ok(AlgebraElement { degree: n, coords })
    }

    fn check(&self, a: &AlgebraElement<F>) -> Result<()> {
        let dim = self.dim(a.degree)?;
        if a.coords.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: a.coords.len(),
            });
        }
        Ok(())
    }

    /// Product in `A`: concatenate normal words and reduce.
    pub fn multiply(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check(a)?;
        self.check(b)?;
        let f = &self.field;
        let (ca, cb) = (self.component(a.degree)?, self.component(b.degree)?);
        let target = self.component(a.degree + b.degree)?;
        let shift = self.words(b.degree).len();
        let mut coords = vec![f.zero(); target.dim()];
        for (i, x) in a.coords.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            let u = ca.normal_words()[i];
            for (j, y) in b.coords.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let v = cb.normal_words()[j];
                target.accumulate_word(u * shift + v, &f.mul(x, y), &mut coords);
            }
        }
        Ok(AlgebraElement {
            degree: a.degree + b.degree,
            coords,
        })
    }

    /// Matrix of `a ↦ a·e_s` from `A_m` to `A_{m+1}`.
    pub fn right_mult(&self, m: usize, s: usize) -> Result<Arc<Matrix<F>>> {
        self.mult_matrix(m, s, Side::Right)
    }

    /// Matrix of `a ↦ e_s·a` from `A_m` to `A_{m+1}`.
    pub fn left_mult(&self, m: usize, s: usize) -> Result<Arc<Matrix<F>>> {
        self.mult_matrix(m, s, Side::Left)
    }

    fn mult_matrix(&self, m: usize, s: usize, side: Side) -> Result<Arc<Matrix<F>>> {
        let cache = match side {
            Side::Left => &self.left_mult,
            Side::Right => &self.right_mult,
        };
        if let Some(hit) = cache.lock().expect("mult cache poisoned").get(&(m, s)) {
            return Ok(hit.clone());
        }
        let src = self.component(m)?;
        let dst = self.component(m + 1)?;
        let d = self.dim_e();
        let left_shift = self.words(m).len();
        let mut mat = Matrix::zeros(&self.field, dst.dim(), src.dim());
        for (col, &u) in src.normal_words().iter().enumerate() {
            let w = match side {
                Side::Right => u * d + s,
                Side::Left => s * left_shift + u,
            };
            for (row, x) in dst.reduce_word(w) {
                mat.set(row, col, x);
            }
        }
        let mat = Arc::new(mat);
        cache
            .lock()
            .expect("mult cache poisoned")
            .entry((m, s))
            .or_insert_with(|| mat.clone());
        Ok(mat)
    }

    /// Matrix of multiplication by a fixed element `e` on `A_n`.
    pub fn mult_by(&self, e: &AlgebraElement<F>, n: usize, side: Side) -> Result<Matrix<F>> {
        self.check(e)?;
        let src = self.component(n)?;
        let dst = self.component(n + e.degree)?;
        let mut mat = Matrix::zeros(&self.field, dst.dim(), src.dim());
        for col in 0..src.dim() {
            let mut unit = vec![self.field.zero(); src.dim()];
            unit[col] = self.field.one();
            let a = AlgebraElement {
                degree: n,
                coords: unit,
            };
            let prod = match side {
                Side::Right => self.multiply(&a, e)?,
                Side::Left => self.multiply(e, &a)?,
            };
            for (row, x) in prod.coords.into_iter().enumerate() {
                if !self.field.is_zero(&x) {
                    mat.set(row, col, x);
                }
            }
        }
        Ok(mat)
    }

    /// Kernel dimensions of `a ↦ a·e` (or `e·a`) on `A_n` for `n ≤ cutoff`.
    pub fn regularity(&self, e: &AlgebraElement<F>, cutoff: usize, side: Side) -> Result<RegularityReport> {
        let kernel_dims = (0..=cutoff)
            .map(|n| {
                let m = self.mult_by(e, n, side)?;
                Ok((n, m.cols() - m.rank()))
            })
            .collect::<Result<_>>()?;
        Ok(RegularityReport {
            side,
            cutoff,
            kernel_dims,
        })
    }

    pub fn is_right_regular(&self, e: &AlgebraElement<F>, cutoff: usize) -> Result<RegularityReport> {
        self.regularity(e, cutoff, Side::Right)
    }

    pub fn is_left_regular(&self, e: &AlgebraElement<F>, cutoff: usize) -> Result<RegularityReport> {
        self.regularity(e, cutoff, Side::Left)
    }

    /// Checks invertibility and `α^{⊗N}(R) = R`.
    pub fn validate_automorphism(&self, matrix: Matrix<F>) -> Result<GradedAutomorphism<F>> {
        let d = self.dim_e();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        let inverse = matrix.inverse().ok_or(Error::SingularAutomorphism)?;
        let image = self.tensor.apply_to_subspace(&matrix, &self.relations)?;
        if image != self.relations {
            return Err(Error::RelationsNotPreserved);
        }
        Ok(GradedAutomorphism { matrix, inverse })
    }

    /// Matrix of the action of a linear map `g` of `E` (extended
    /// multiplicatively) on `A_n`. Well defined when `g` preserves `R`.
    pub fn action_on_component(&self, g: &Matrix<F>, n: usize) -> Result<Matrix<F>> {
        let comp = self.component(n)?;
        let mut mat = Matrix::zeros(&self.field, comp.dim(), comp.dim());
        for col in 0..comp.dim() {
            let mut raw = vec![self.field.zero(); self.words(n).len()];
            raw[comp.normal_words()[col]] = self.field.one();
            let image = comp.project(&self.tensor.apply_tensor_power(g, n, &raw)?)?;
            for (row, x) in image.into_iter().enumerate() {
                if !self.field.is_zero(&x) {
                    mat.set(row, col, x);
                }
            }
        }
        Ok(mat)
    }

    /// `α^k` applied to a homogeneous element.
    pub fn apply_automorphism(
        &self,
        alpha: &GradedAutomorphism<F>,
        k: i64,
        a: &AlgebraElement<F>,
    ) -> Result<AlgebraElement<F>> {
        self.check(a)?;
        let comp = self.component(a.degree)?;
        let raw = comp.lift(&a.coords);
        let moved = self.tensor.apply_tensor_power(&alpha.power(k), a.degree, &raw)?;
        self.project(a.degree, &moved)
    }

    /// Semi-cross product on the underlying space of `A`: `a ⋄ b = a · α^{|a|}(b)`.
    pub fn twisted_multiply(
        &self,
        alpha: &GradedAutomorphism<F>,
        a: &AlgebraElement<F>,
        b: &AlgebraElement<F>,
    ) -> Result<AlgebraElement<F>> {
        let moved = self.apply_automorphism(alpha, a.degree as i64, b)?;
        self.multiply(a, &moved)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::samples::*;

    #[test]
    fn validate_rejects_bad_input() {
        let q = Rationals;
        let r = Subspace::zero(&q, 2);
        assert!(matches!(
            Presentation::new(q, vec!["x".into(), "y".into()], 1, r),
            Err(Error::UnsupportedDegree(1))
        ));
        assert!(matches!(
            Presentation::new(q, vec![], 2, Subspace::zero(&q, 1)),
            Err(Error::InvalidPresentation(_))
        ));
        assert!(free(2, 2).relations().is_zero());
    }

    #[test]
    fn component_dims() {
        assert_eq!(braid().hilbert_series(4).unwrap(), vec![1, 2, 4, 7, 12]);
        assert_eq!(cubic().hilbert_series(4).unwrap(), vec![1, 2, 4, 7, 12]);
        assert_eq!(free(2, 2).hilbert_series(5).unwrap(), vec![1, 2, 4, 8, 16, 32]);
        assert_eq!(polynomial().hilbert_series(5).unwrap(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn braid_hilbert_to_eight() {
        assert_eq!(braid().hilbert_series(8).unwrap(), vec![1, 2, 4, 7, 12, 20, 33, 54, 88]);
    }

    #[test]
    fn project_examples() {
        let p = cubic();
        let q = Rationals;
        // x³ - y³ lies in the ideal
        let mut raw = vec![q.zero(); 8];
        raw[0] = q.one();
        raw[7] = q.from_i64(-1);
        assert!(p.project(3, &raw).unwrap().is_zero(&q));
        // normal word → unit vector
        let comp = p.component(3).unwrap();
        let w = comp.normal_words()[2];
        let mut raw = vec![q.zero(); 8];
        raw[w] = q.one();
        let e = p.project(3, &raw).unwrap();
        assert_eq!(e.coords.iter().filter(|x| !q.is_zero(x)).count(), 1);
        assert_eq!(e.coords[2], q.one());
        assert_eq!(p.word(&[1, 1, 1]).unwrap(), p.word(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn multiply_examples() {
        let p = cubic();
        let x = p.generator(0).unwrap();
        let y = p.generator(1).unwrap();
        let xxx = p.multiply(&p.multiply(&x, &x).unwrap(), &x).unwrap();
        let yyy = p.multiply(&y, &p.multiply(&y, &y).unwrap()).unwrap();
        assert_eq!(xxx, yyy);
        assert_eq!(p.multiply(&p.one(), &x).unwrap(), x);

        let b = braid();
        let x = b.generator(0).unwrap();
        let y = b.generator(1).unwrap();
        let xy = b.multiply(&x, &y).unwrap();
        let yx = b.multiply(&y, &x).unwrap();
        assert_eq!(b.multiply(&xy, &x).unwrap(), b.multiply(&yx, &y).unwrap());
        assert_ne!(xy, yx);
    }

    #[test]
    fn automorphism_validation() {
        let b = braid();
        assert!(b.validate_automorphism(Matrix::identity(&Rationals, 2)).is_ok());
        assert!(b.validate_automorphism(swap_matrix()).is_ok());
        let sq = Presentation::from_vectors(Rationals, gens(2), 2, vec![word_vec(2, &[0, 0])]).unwrap();
        assert_eq!(
            sq.validate_automorphism(swap_matrix()).unwrap_err(),
            Error::RelationsNotPreserved
        );
        let singular = Matrix::from_i64_rows(&Rationals, &[&[1, 1], &[1, 1]]);
        assert_eq!(
            b.validate_automorphism(singular).unwrap_err(),
            Error::SingularAutomorphism
        );
    }

    #[test]
    fn twisted_multiply_examples() {
        let b = braid();
        let alpha = b.validate_automorphism(swap_matrix()).unwrap();
        let x = b.generator(0).unwrap();
        let y = b.generator(1).unwrap();
        // x ⋄ x = x·α(x) = x·y
        assert_eq!(b.twisted_multiply(&alpha, &x, &x).unwrap(), b.multiply(&x, &y).unwrap());
        // degree-0 left factor: ordinary product
        assert_eq!(b.twisted_multiply(&alpha, &b.one(), &x).unwrap(), x);
        let id = b.validate_automorphism(Matrix::identity(&Rationals, 2)).unwrap();
        let xy = b.word(&[0, 1]).unwrap();
        assert_eq!(b.twisted_multiply(&id, &xy, &x).unwrap(), b.multiply(&xy, &x).unwrap());
    }

    #[test]
    fn regularity_examples() {
        let p = cubic();
        for s in 0..2 {
            let report = p.is_right_regular(&p.generator(s).unwrap(), 6).unwrap();
            assert!(report.is_regular(), "{report:?}");
        }
        let nil = Presentation::from_vectors(Rationals, gens(1), 2, vec![word_vec(1, &[0, 0])]).unwrap();
        let report = nil.is_right_regular(&nil.generator(0).unwrap(), 3).unwrap();
        assert!(!report.is_regular());
        assert_eq!(report.first_failure(), Some(1));
    }

    #[test]
    fn memoized_components_are_stable() {
        let p = braid();
        let first = p.component(5).unwrap();
        let again = p.component(5).unwrap();
        assert!(Arc::ptr_eq(&first, &again));
        let fresh = p.clone();
        assert_eq!(fresh.component(5).unwrap().ideal, first.ideal);
    }

    #[test]
    fn concurrent_component_requests_agree() {
        let p = Arc::new(braid());
        let handles: Vec<_> = (0..4)
            .map(|k| {
                let p = p.clone();
                std::thread::spawn(move || p.dim(4 + k % 3).unwrap())
            })
            .collect();
        let dims: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(dims, vec![12, 20, 33, 12]);
    }
}
