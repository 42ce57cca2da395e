//! Dense matrices over cyclotomic fields.

use std::fmt;
use std::ops::Index;

use crate::cyclo::{CycloSum, Cyclotomic, RootOfUnity};
use crate::error::{Error, Result};

/// Row-major dense matrix of [`Cyclotomic`] entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Cyclotomic>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {c}",
                i + 1,
                row.len()
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| Cyclotomic::from_integer((i == j) as i64))
    }

    /// The permutation matrix with a 1 at `(i, perm[i])`.
    pub fn permutation(perm: &[usize]) -> Self {
        Self::from_fn(perm.len(), perm.len(), |i, j| {
            Cyclotomic::from_integer((perm[i] == j) as i64)
        })
    }

    pub fn diagonal(diag: &[RootOfUnity]) -> Self {
        Self::from_fn(diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].to_cyclotomic()
            } else {
                Cyclotomic::zero()
            }
        })
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

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        self.data.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Cyclotomic::conj).collect(),
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = CycloSum::new();
                for (k, x) in row.iter().enumerate() {
                    acc.add_product(x, other.get(k, j));
                }
                data.push(acc.finish());
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `diag(d)^k * self`: row `i` multiplied by `d[i]^k`.
    pub fn scale_rows(&self, d: &[RootOfUnity], k: i64) -> Result<Matrix> {
        if d.len() != self.rows {
            return Err(Error::Dimension("diagonal length differs from row count".into()));
        }
        let mut data = Vec::with_capacity(self.data.len());
        for (i, r) in d.iter().enumerate() {
            let r = r.pow(k);
            for x in self.row(i) {
                data.push(x.mul_root(r.order(), r.exponent() as i64)?);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self * diag(d)^k`: column `j` multiplied by `d[j]^k`.
    pub fn scale_cols(&self, d: &[RootOfUnity], k: i64) -> Result<Matrix> {
        if d.len() != self.cols {
            return Err(Error::Dimension("diagonal length differs from column count".into()));
        }
        let powers: Vec<RootOfUnity> = d.iter().map(|r| r.pow(k)).collect();
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            for (x, r) in self.row(i).iter().zip(&powers) {
                data.push(x.mul_root(r.order(), r.exponent() as i64)?);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.data.len())
            .find(|&k| self.data[k] != other.data[k])
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cyclotomic> {
        self.data.iter()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        self.get(i, j)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    #[test]
    fn product_and_identity() {
        let a = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(3), c(4)]]).unwrap();
        let b = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        let ab = a.try_mul(&b).unwrap();
        assert_eq!(ab, Matrix::from_rows(vec![vec![c(2), c(1)], vec![c(4), c(3)]]).unwrap());
        assert_eq!(a.try_mul(&Matrix::identity(2)).unwrap(), a);
        assert!(a.try_mul(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(
            Matrix::from_rows(vec![vec![c(1)], vec![c(1), c(2)]]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn diagonal_scaling_matches_product() {
        let i = RootOfUnity::new(4, 1).unwrap();
        let w = RootOfUnity::new(3, 1).unwrap();
        let m = Matrix::from_fn(2, 2, |r, s| c((r * 2 + s) as i64 + 1));
        let d = Matrix::diagonal(&[i, w]);
        assert_eq!(m.scale_rows(&[i, w], 1).unwrap(), d.try_mul(&m).unwrap());
        assert_eq!(m.scale_cols(&[i, w], 1).unwrap(), m.try_mul(&d).unwrap());
        let back = m.scale_rows(&[i, w], 2).unwrap().scale_rows(&[i, w], -2).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn conjugate_transpose() {
        let z = Cyclotomic::root_of_unity(8, 1).unwrap();
        let m = Matrix::from_rows(vec![vec![z.clone(), c(0)], vec![c(1), z.conj()]]).unwrap();
        let mh = m.conj().transpose();
        assert_eq!(mh.get(0, 1), &c(1));
        assert_eq!(mh.get(0, 0), &z.conj());
        assert_eq!(m.first_difference(&m), None);
        assert_eq!(m.first_difference(&mh), Some((0, 0)));
    }
}
