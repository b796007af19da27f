//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix given by rows.
///
/// Fraction-free elimination: every row is kept primitive (content one),
/// which is elimination over `Q` with rows rescaled by nonzero constants.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| m[i][col].abs())
        else {
            continue;
        };
        m.swap(r, pivot);
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = prow[col].gcd(&row[col]);
            let fp = &row[col] / &g;
            let fr = &prow[col] / &g;
            for j in col..cols {
                row[j] = &row[j] * &fr - &prow[j] * &fp;
            }
            make_primitive(row);
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Solves `a·x = b` when the solution exists and is unique.
///
/// Returns `None` if the system is inconsistent or `a` has dependent columns.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut r = 0;
    for col in 0..cols {
        let pivot = (r..m.len()).find(|&i| !m[i][col].is_zero())?;
        m.swap(r, pivot);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..=cols {
                row[j] -= &f * &prow[j];
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(m[..cols].iter().map(|row| row[cols].clone()).collect())
}

pub fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn trace(m: &[Vec<BigInt>]) -> BigInt {
    m.iter().enumerate().map(|(i, row)| row[i].clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn q(x: i64) -> BigRational {
        BigRational::from(BigInt::from(x))
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&int_rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&int_rows(&[&[3, 1], &[1, 3]])), 2);
        assert_eq!(rank(&int_rows(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rank(&int_rows(&[&[6, 4], &[9, 6], &[2, 1]])), 2);
    }

    #[test]
    fn solves() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(2), q(0)]];
        let sol = solve(&a, &[q(3), q(1), q(4)]).unwrap();
        assert_eq!(sol, vec![q(2), q(1)]);
        assert!(solve(&a, &[q(3), q(1), q(5)]).is_none());
        let dependent = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve(&dependent, &[q(1), q(2)]).is_none());
    }
}
