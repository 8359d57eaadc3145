//! Standard presentations used throughout the tests and the documentation.

use crate::exactlin::Matrix;
use crate::field::{Field, Rationals};
use crate::presentation::Presentation;
use crate::tensorspace::WordBasis;

/// Generator names `x, y, z` for up to three generators, `g0, g1, …` beyond.
pub fn gens(n: usize) -> Vec<String> {
    const NAMES: [&str; 3] = ["x", "y", "z"];
    (0..n)
        .map(|i| if n <= 3 { NAMES[i].to_string() } else { format!("g{i}") })
        .collect()
}

/// Indicator vector of a word over `dim_e` generators.
pub fn word_vec(dim_e: usize, word: &[usize]) -> Vec<<Rationals as Field>::Elem> {
    let basis = WordBasis::new(dim_e, word.len());
    let mut v = vec![Rationals.zero(); basis.len()];
    v[basis.index(word)] = Rationals.one();
    v
}

/// `Σ c·word` over `dim_e` generators.
pub fn poly_vec(dim_e: usize, terms: &[(i64, &[usize])]) -> Vec<<Rationals as Field>::Elem> {
    let n = terms.first().map_or(0, |(_, w)| w.len());
    let basis = WordBasis::new(dim_e, n);
    let mut v = vec![Rationals.zero(); basis.len()];
    for (c, w) in terms {
        let i = basis.index(w);
        v[i] = Rationals.add(&v[i], &Rationals.from_i64(*c));
    }
    v
}

/// Three-strand braid algebra `k<x,y>/(xyx - yxy)`.
pub fn braid() -> Presentation<Rationals> {
    Presentation::from_vectors(
        Rationals,
        gens(2),
        3,
        vec![poly_vec(2, &[(1, &[0, 1, 0]), (-1, &[1, 0, 1])])],
    )
    .expect("braid presentation")
}

/// `k<x,y>/(x³ - y³)`, the semi-cross product of the braid algebra by the swap.
pub fn cubic() -> Presentation<Rationals> {
    Presentation::from_vectors(
        Rationals,
        gens(2),
        3,
        vec![poly_vec(2, &[(1, &[0, 0, 0]), (-1, &[1, 1, 1])])],
    )
    .expect("cubic presentation")
}

/// Commutative polynomial ring `k[x,y]` as a quadratic algebra.
pub fn polynomial() -> Presentation<Rationals> {
    Presentation::from_vectors(Rationals, gens(2), 2, vec![poly_vec(2, &[(1, &[0, 1]), (-1, &[1, 0])])])
        .expect("polynomial presentation")
}

/// Free algebra on `dim_e` generators, viewed as `degree`-homogeneous with `R = 0`.
pub fn free(dim_e: usize, degree: usize) -> Presentation<Rationals> {
    Presentation::from_vectors(Rationals, gens(dim_e), degree, vec![]).expect("free presentation")
}

/// The involution exchanging the two generators.
pub fn swap_matrix() -> Matrix<Rationals> {
    Matrix::from_i64_rows(&Rationals, &[&[0, 1], &[1, 0]])
}
