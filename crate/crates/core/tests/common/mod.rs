//! Test-only oracles and random instances, independent of the library's
//! linear algebra.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semicross::exactlin::Matrix;
use semicross::field::Rationals;
use semicross::presentation::{GradedAutomorphism, Presentation};
use semicross::samples::gens;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank by plain Gaussian elimination on owned rows.
pub fn oracle_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All words of length `n` over `d` letters, first letter most significant.
pub fn all_words(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d).map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    out
}

fn word_index(d: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &g| acc * d + g)
}

/// Relation polynomials as `(coefficient, word)` lists.
pub type Poly = Vec<(Q, Vec<usize>)>;

/// `dim A_n` by spanning `I_n` with every `u·r·v` and subtracting its rank.
pub fn oracle_dim(d: usize, big_n: usize, rels: &[Poly], n: usize) -> usize {
    let total = d.pow(n as u32);
    if n < big_n {
        return total;
    }
    let mut rows = Vec::new();
    for left in 0..=(n - big_n) {
        let right = n - big_n - left;
        for u in all_words(d, left) {
            for v in all_words(d, right) {
                for r in rels {
                    let mut row = vec![Q::zero(); total];
                    for (c, w) in r {
                        let full: Vec<usize> = u.iter().chain(w).chain(&v).copied().collect();
                        row[word_index(d, &full)] += c;
                    }
                    rows.push(row);
                }
            }
        }
    }
    total - oracle_rank(rows)
}

pub fn poly_to_vec(d: usize, p: &Poly) -> Vec<Q> {
    let n = p.first().map_or(0, |(_, w)| w.len());
    let mut v = vec![Q::zero(); d.pow(n as u32)];
    for (c, w) in p {
        v[word_index(d, w)] += c;
    }
    v
}

pub fn presentation(d: usize, big_n: usize, rels: &[Poly]) -> Presentation<Rationals> {
    let vectors = rels.iter().map(|r| poly_to_vec(d, r)).collect();
    Presentation::from_vectors(Rationals, gens(d), big_n, vectors).expect("valid random presentation")
}

/// A random presentation with `dim E ≤ 3`, `N ∈ {2, 3}`, `dim R ≤ 2`.
pub fn random_relations(r: &mut ChaCha8Rng) -> (usize, usize, Vec<Poly>) {
    let d = *[1usize, 2, 2, 3, 3].choose(r).unwrap();
    let big_n = r.gen_range(2..=3);
    let count = r.gen_range(0..=2);
    let words = all_words(d, big_n);
    let rels = (0..count)
        .map(|_| {
            let terms = r.gen_range(1..=3);
            (0..terms)
                .map(|_| {
                    let mut c = r.gen_range(-2i64..=2);
                    if c == 0 {
                        c = 1;
                    }
                    (q(c), words.choose(r).unwrap().clone())
                })
                .collect()
        })
        .collect();
    (d, big_n, rels)
}

pub fn random_presentation(r: &mut ChaCha8Rng) -> (Presentation<Rationals>, Vec<Poly>) {
    let (d, big_n, rels) = random_relations(r);
    (presentation(d, big_n, &rels), rels)
}

/// A random invertible matrix with small integer entries.
pub fn random_invertible(r: &mut ChaCha8Rng, d: usize) -> Matrix<Rationals> {
    loop {
        let rows: Vec<Vec<i64>> = (0..d).map(|_| (0..d).map(|_| r.gen_range(-2..=2)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_i64_rows(&Rationals, &refs);
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn apply_power(d: usize, a: &Matrix<Rationals>, v: &[Q], n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); v.len()];
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut word = vec![0; n];
        let mut x = i;
        for k in (0..n).rev() {
            word[k] = x % d;
            x /= d;
        }
        // expand Π_k α(e_{word[k]}) = Π_k Σ_t α[t][word[k]] e_t
        let mut partial: Vec<(Q, usize)> = vec![(c.clone(), 0)];
        for &g in &word {
            let mut next = Vec::new();
            for (coef, idx) in &partial {
                for t in 0..d {
                    let m = a.get(t, g);
                    if !m.is_zero() {
                        next.push((coef * m, idx * d + t));
                    }
                }
            }
            partial = next;
        }
        for (coef, idx) in partial {
            out[idx] += coef;
        }
    }
    out
}

/// A presentation together with an automorphism preserving its relations.
///
/// `α` is one of: a signed permutation of order at most two, with relations
/// spanned by `v, α v`; a diagonal matrix, with relations spanned by
/// eigenvectors; or a scalar, with arbitrary relations.
pub fn random_valid_pair(r: &mut ChaCha8Rng) -> (Presentation<Rationals>, GradedAutomorphism<Rationals>) {
    loop {
        let d = r.gen_range(2..=3);
        let big_n = r.gen_range(2..=3);
        let words = all_words(d, big_n);
        let kind = r.gen_range(0..3);
        let (alpha, rels): (Matrix<Rationals>, Vec<Vec<Q>>) = match kind {
            0 => {
                let mut perm: Vec<usize> = (0..d).collect();
                // an involution: swap one pair, fix the rest
                let a = r.gen_range(0..d);
                let b = (a + r.gen_range(1..d)) % d;
                perm.swap(a, b);
                let mut m = Matrix::zeros(&Rationals, d, d);
                let sign = if r.gen_bool(0.5) { q(1) } else { q(-1) };
                for (s, &t) in perm.iter().enumerate() {
                    m.set(t, s, if s == a || s == b { sign.clone() } else { q(1) });
                }
                let terms = r.gen_range(1..=3);
                let poly: Poly = (0..terms)
                    .map(|_| (q(r.gen_range(1..=3)), words.choose(r).unwrap().clone()))
                    .collect();
                let v = poly_to_vec(d, &poly);
                let av = apply_power(d, &m, &v, big_n);
                (m, vec![v, av])
            }
            1 => {
                let diag: Vec<i64> = (0..d).map(|_| *[1i64, -1, 2, 3].choose(r).unwrap()).collect();
                let mut m = Matrix::zeros(&Rationals, d, d);
                for (i, &x) in diag.iter().enumerate() {
                    m.set(i, i, q(x));
                }
                let eig = |w: &Vec<usize>| w.iter().map(|&g| diag[g]).product::<i64>();
                let target = eig(words.choose(r).unwrap());
                let same: Vec<&Vec<usize>> = words.iter().filter(|w| eig(w) == target).collect();
                let count = r.gen_range(1..=2);
                let rels = (0..count)
                    .map(|_| {
                        let poly: Poly = (0..r.gen_range(1..=2))
                            .map(|_| (q(r.gen_range(-2..=2)), (*same.choose(r).unwrap()).clone()))
                            .collect();
                        poly_to_vec(d, &poly)
                    })
                    .collect();
                (m, rels)
            }
            _ => {
                let c = *[2i64, -1, 3].choose(r).unwrap();
                let mut m = Matrix::zeros(&Rationals, d, d);
                for i in 0..d {
                    m.set(i, i, q(c));
                }
                let count = r.gen_range(1..=2);
                let rels = (0..count)
                    .map(|_| {
                        let poly: Poly = (0..r.gen_range(1..=3))
                            .map(|_| (q(r.gen_range(-2..=2)), words.choose(r).unwrap().clone()))
                            .collect();
                        poly_to_vec(d, &poly)
                    })
                    .collect();
                (m, rels)
            }
        };
        let p = Presentation::from_vectors(Rationals, gens(d), big_n, rels).expect("valid presentation");
        if p.relations().dim() == 0 && r.gen_bool(0.8) {
            continue;
        }
        let alpha = p
            .validate_automorphism(alpha)
            .expect("constructed to preserve the relations");
        return (p, alpha);
    }
}
