//! Exact linear algebra: dense rational matrices with fraction-free elimination.
//!
//! Ranks and determinants clear denominators row by row and then run Bareiss
//! elimination over the integers, so intermediate values stay integral and no
//! gcd normalization is needed inside the loop.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }

    /// Rows scaled to integers by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        bareiss(&mut m).0
    }

    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let scales: Vec<BigInt> = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            })
            .collect();
        let mut m = self.integer_rows();
        let det = integer_determinant_in_place(&mut m);
        let scale: BigInt = scales.iter().product();
        BigRational::new(det, scale)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Bareiss elimination. Returns the rank and the sign flips from row swaps.
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negated = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            negated = !negated;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    (rank, negated)
}

fn integer_determinant_in_place(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let (rank, negated) = bareiss(m);
    if rank < n {
        return BigInt::zero();
    }
    // with full rank the pivots sit on the diagonal and the last one is the determinant
    let det = m[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Determinant of a square integer matrix.
pub fn integer_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let mut m = rows.to_vec();
    assert!(m.iter().all(|r| r.len() == m.len()), "determinant of a non-square matrix");
    integer_determinant_in_place(&mut m)
}

/// Rank of an integer matrix.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m = rows.to_vec();
    bareiss(&mut m).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_and_det() {
        let m = QMatrix::from_i64_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.determinant(), q(0, 1));
        let m = QMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), q(-1, 1));
        let m = QMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(1, 4), q(1, 5)]]);
        assert_eq!(m.determinant(), q(1, 10) - q(1, 12));
        assert_eq!(QMatrix::zeros(3, 0).rank(), 0);
        assert_eq!(QMatrix::zeros(0, 0).determinant(), q(1, 1));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        // 4x4 with a row swap needed at the first step
        let rows = vec![
            vec![0i64, 2, -1, 3],
            vec![1, 0, 4, -2],
            vec![3, 1, 0, 5],
            vec![-2, 4, 1, 1],
        ];
        fn cofactor(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let expected = cofactor(&rows);
        let m = QMatrix::from_i64_rows(&rows);
        assert_eq!(m.determinant(), q(expected, 1));
    }

    #[test]
    fn product() {
        let a = QMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        let b = QMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), QMatrix::from_i64_rows(&[vec![2, 1], vec![4, 3]]));
    }
}
