use std::ops::{Index, IndexMut};

use num_traits::Zero;

use super::poly::{Field, Poly};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from rows of equal length `cols`. Panics on ragged input.
    pub fn with_cols(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds from a non-empty list of rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::with_cols(rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Matrix<Poly<F>> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Poly::constant(F::one()) } else { Poly::zero() })
    }

    pub fn eval_at_zero(&self) -> Matrix<F> {
        self.map(|p| p.constant_term())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                acc += &(a * &rhs[(k, j)]);
            }
            acc
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }
}

/// Reduced row echelon form over a field; returns the reduced rows and the
/// pivot columns.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, cols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..cols {
                let v = rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - f.clone() * v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// A nonzero `c` with `Σ c_i rows_i = 0`, if the rows are dependent.
pub fn left_null_vector<F: Field>(rows: &[Vec<F>], cols: usize) -> Option<Vec<F>> {
    let n = rows.len();
    let aug: Vec<Vec<F>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            v
        })
        .collect();
    // eliminate on the left block only
    let mut m = aug;
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / m[r][c].clone();
            for j in 0..cols + n {
                let v = m[r][j].clone();
                m[i][j] = m[i][j].clone() - f.clone() * v;
            }
        }
        r += 1;
    }
    (r..n)
        .map(|i| m[i][cols..].to_vec())
        .find(|v| v.iter().any(|x| !x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn left_null_vector_finds_dependency() {
        let rows = vec![vec![int(1), int(2)], vec![int(2), int(4)], vec![int(0), int(1)]];
        let c = left_null_vector(&rows, 2).unwrap();
        for j in 0..2 {
            let s = (0..3).fold(int(0), |a, i| a + c[i].clone() * rows[i][j].clone());
            assert!(s.is_zero());
        }
        let indep = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        assert!(left_null_vector(&indep, 2).is_none());
    }

    #[test]
    fn rref_pivots() {
        let rows = vec![vec![int(0), int(2), int(4)], vec![int(0), int(1), int(2)]];
        let (_, piv) = rref(rows, 3);
        assert_eq!(piv, vec![1]);
    }
}
