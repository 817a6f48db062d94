use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact coordinates against a fixed set of linearly independent integer
/// column vectors.
///
/// Solves on a set of pivot rows, then checks the full system so that vectors
/// outside the span are rejected.
#[derive(Debug)]
pub(crate) struct Projector {
    cols: Vec<Vec<BigInt>>,
    pivot_rows: Vec<usize>,
    /// Inverse of the square submatrix on `pivot_rows`, row-major.
    inv: Vec<Vec<BigRational>>,
}

impl Projector {
    pub(crate) fn new(rows: usize, cols: Vec<Vec<BigInt>>) -> Self {
        let k = cols.len();
        // Row-reduce the transpose view to choose pivot rows.
        let mut work: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| cols.iter().map(|c| BigRational::from_integer(c[r].clone())).collect())
            .collect();
        let mut pivot_rows = Vec::with_capacity(k);
        let mut used = vec![false; rows];
        for col in 0..k {
            let r = (0..rows)
                .find(|&r| !used[r] && !work[r][col].is_zero())
                .expect("basis columns must be independent");
            used[r] = true;
            pivot_rows.push(r);
            let pivot = work[r][col].clone();
            let prow = work[r].clone();
            for (rr, row) in work.iter_mut().enumerate() {
                if rr == r || row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot;
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &factor * y;
                }
            }
        }

        // Invert the k×k submatrix S[i][j] = cols[j][pivot_rows[i]].
        let mut aug: Vec<Vec<BigRational>> = pivot_rows
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let mut row: Vec<BigRational> =
                    cols.iter().map(|c| BigRational::from_integer(c[r].clone())).collect();
                row.extend((0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        for col in 0..k {
            let piv = (col..k).find(|&r| !aug[r][col].is_zero()).expect("pivot submatrix is invertible");
            aug.swap(col, piv);
            let pv = aug[col][col].clone();
            for x in aug[col].iter_mut() {
                *x /= &pv;
            }
            let prow = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &factor * y;
                }
            }
        }
        let inv = aug.into_iter().map(|row| row[k..].to_vec()).collect();
        Projector { cols, pivot_rows, inv }
    }

    /// Coordinates of `v` in the column basis, or `None` when `v` is outside the span.
    pub(crate) fn solve(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let rhs: Vec<&BigRational> = self.pivot_rows.iter().map(|&r| &v[r]).collect();
        let x: Vec<BigRational> = self
            .inv
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(BigRational::zero(), |acc, (a, b)| acc + a * *b))
            .collect();
        for (r, target) in v.iter().enumerate() {
            let got = self
                .cols
                .iter()
                .zip(&x)
                .filter(|(_, xi)| !xi.is_zero())
                .fold(BigRational::zero(), |acc, (c, xi)| acc + xi * BigRational::from_integer(c[r].clone()));
            if &got != target {
                return None;
            }
        }
        Some(x)
    }
}
