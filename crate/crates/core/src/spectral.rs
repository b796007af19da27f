//! Eigen-decomposition of the second-kind transform `U` on each degree.
//!
//! `Pyr(u) = M(u, 1)` multiplies eigenvalues by 2 and `L(u) = (a − b)·u`
//! preserves them; starting from `U(1) = 2·1`, the `2^n` words over
//! `{Pyr, L}` give a basis of degree `n` in which `U` is diagonal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::ab_algebra::e_pow;
use crate::linalg;
use crate::qsym::mix_m;
use crate::transforms::tcheb_u;
use crate::word::{words_of_length, Ab, AbPoly, AbWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Op {
    Pyr,
    L,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Pyr => "Pyr",
            Op::L => "L",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenVector {
    pub vector: AbPoly,
    pub eigenvalue: u64,
    /// Operators in the order they are applied to `1`.
    pub construction: Vec<Op>,
}

pub fn pyr(u: &AbPoly) -> AbPoly {
    mix_m(u, &AbWord::empty().poly())
}

pub fn ell(u: &AbPoly) -> AbPoly {
    &e_pow(1) * u
}

/// All `2^n` eigenvectors of degree `n`, with eigenvalue `2^{#Pyr + 1}`.
pub fn eigenbasis(n: usize) -> Vec<EigenVector> {
    let mut level = vec![EigenVector {
        vector: AbWord::empty().poly(),
        eigenvalue: 2,
        construction: Vec::new(),
    }];
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|v| {
                [Op::Pyr, Op::L].map(|op| {
                    let mut construction = v.construction.clone();
                    construction.push(op);
                    let (vector, eigenvalue) = match op {
                        Op::Pyr => (pyr(&v.vector), v.eigenvalue * 2),
                        Op::L => (ell(&v.vector), v.eigenvalue),
                    };
                    EigenVector {
                        vector,
                        eigenvalue,
                        construction,
                    }
                })
            })
            .collect();
    }
    level
}

/// Coefficients of a homogeneous degree-`n` polynomial in word order.
pub fn dense(u: &AbPoly, n: usize) -> Vec<BigInt> {
    words_of_length::<Ab>(n).map(|w| u.coeff(&w)).collect()
}

/// Matrix of `U` on degree `n`: column `j` holds `U(word_j)`, words in
/// lexicographic order with `a < b`.
pub fn u_matrix(n: usize) -> Vec<Vec<BigInt>> {
    let words: Vec<AbWord> = words_of_length::<Ab>(n).collect();
    let columns: Vec<Vec<BigInt>> = words.iter().map(|w| dense(&tcheb_u(&w.poly()), n)).collect();
    (0..words.len())
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub degree: usize,
    /// Eigenvalue → multiplicity among the constructed vectors.
    pub multiplicities: BTreeMap<u64, usize>,
    pub expected_multiplicities: BTreeMap<u64, usize>,
    pub rank: usize,
    pub trace: String,
    pub expected_trace: String,
    /// Constructions whose vector is not an eigenvector for its value.
    pub failures: Vec<String>,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.multiplicities == self.expected_multiplicities
            && self.rank == 1 << self.degree
            && self.trace == self.expected_trace
    }
}

/// Checks `U·v = λ·v` through the matrix, independence, the binomial
/// multiplicities and `trace = 2·3^n`.
pub fn verify_spectrum(n: usize) -> SpectrumReport {
    let matrix = u_matrix(n);
    let basis = eigenbasis(n);
    let vectors: Vec<Vec<BigInt>> = basis.iter().map(|e| dense(&e.vector, n)).collect();

    let failures = std::thread::scope(|scope| {
        let chunk = basis.len().div_ceil(available_threads());
        let handles: Vec<_> = basis
            .chunks(chunk)
            .zip(vectors.chunks(chunk))
            .map(|(es, vs)| {
                let matrix = &matrix;
                scope.spawn(move || {
                    es.iter()
                        .zip(vs)
                        .filter(|(e, v)| {
                            let image = linalg::mat_vec(matrix, v);
                            let lambda = BigInt::from(e.eigenvalue);
                            image.iter().zip(v.iter()).any(|(x, y)| *x != &lambda * y)
                        })
                        .map(|(e, _)| construction_name(&e.construction))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("spectrum worker panicked"))
            .collect::<Vec<_>>()
    });

    let mut multiplicities = BTreeMap::new();
    for e in &basis {
        *multiplicities.entry(e.eigenvalue).or_insert(0) += 1;
    }
    let expected_multiplicities = (0..=n).map(|i| (1u64 << (i + 1), binomial(n, i))).collect();
    SpectrumReport {
        degree: n,
        multiplicities,
        expected_multiplicities,
        rank: linalg::rank(&vectors),
        trace: linalg::trace(&matrix).to_string(),
        expected_trace: (BigInt::from(2) * num_traits::Pow::pow(BigInt::from(3), n as u32)).to_string(),
        failures,
    }
}

fn available_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn construction_name(ops: &[Op]) -> String {
    if ops.is_empty() {
        return "1".into();
    }
    ops.iter().map(Op::to_string).collect::<Vec<_>>().join("·")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab_algebra::ab;

    #[test]
    fn small_operators() {
        assert_eq!(pyr(&ab("1")), ab("a + b"));
        assert_eq!(ell(&ab("1")), ab("a - b"));
        assert_eq!(pyr(&ab("ab")).keys().next().unwrap().len(), 3);
    }

    #[test]
    fn small_bases() {
        let b0 = eigenbasis(0);
        assert_eq!(b0.len(), 1);
        assert_eq!(b0[0].eigenvalue, 2);
        let b1 = eigenbasis(1);
        assert_eq!(b1[0].vector, ab("a + b"));
        assert_eq!(b1[0].eigenvalue, 4);
        assert_eq!(b1[1].vector, ab("a - b"));
        assert_eq!(b1[1].eigenvalue, 2);
        let int = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(u_matrix(0), int(&[&[2]]));
        assert_eq!(u_matrix(1), int(&[&[3, 1], &[1, 3]]));
    }

    #[test]
    fn spectra_up_to_five() {
        for n in 0..=5 {
            let r = verify_spectrum(n);
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(verify_spectrum(5).trace, "486");
        let b2 = verify_spectrum(2).multiplicities;
        assert_eq!(b2, BTreeMap::from([(2, 1), (4, 2), (8, 1)]));
    }
}
