use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::GaussRat;
use crate::error::{Error, Result};

/// Dense row-major matrix over `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

pub type Vector = Vec<GaussRat>;

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &GaussRat) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[GaussRat]) -> Self {
        let mut m = Mat::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {n_cols}",
                rows[bad].len()
            )));
        }
        Ok(Mat {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Shorthand for Gaussian-integer literals, mostly for tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussRat::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Column matrices stacked side by side.
    pub fn from_columns(n_rows: usize, cols: &[Vector]) -> Self {
        Mat::from_fn(n_rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussRat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &GaussRat)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(p, x)| (p / self.cols.max(1), p % self.cols.max(1), x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussRat::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && self.entries().all(|(i, j, x)| i == j || x.is_zero())
    }

    pub fn diagonal(&self) -> Vector {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for m in 0..self.cols {
                let a = &self[(i, m)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(m, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Mat, op: &str, f: impl Fn(&GaussRat, &GaussRat) -> GaussRat) -> Result<Mat> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    pub fn neg(&self) -> Mat {
        self.map(|x| -x)
    }

    pub fn scale(&self, c: &GaussRat) -> Mat {
        self.map(|x| x * c)
    }

    pub fn map(&self, f: impl Fn(&GaussRat) -> GaussRat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Mat::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// `[[a, b], [c, d]]` from four blocks of compatible shapes.
    pub fn block2(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Result<Mat> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch("incompatible block shapes".into()));
        }
        let (r0, c0) = a.shape();
        Ok(Mat::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < r0, j < c0) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - c0)].clone(),
                (false, true) => c[(i - r0, j)].clone(),
                (false, false) => d[(i - r0, j - c0)].clone(),
            }
        }))
    }

    /// Block-diagonal sum of square matrices.
    pub fn direct_sum(blocks: &[&Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for (i, j, x) in b.entries() {
                out[(off + i, off + j)] = x.clone();
            }
            off += b.rows;
        }
        out
    }

    /// First row-major position where `self` and `other` differ.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|p| (p / self.cols, p % self.cols))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<GaussRat>>::deserialize(deserializer)?;
        Mat::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = Mat::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(Mat::identity(3).mul(&m).unwrap(), m);
    }

    #[test]
    fn ones_times_difference_vector() {
        let a = Mat::from_ints(&[&[1, 1], &[1, 1]]);
        let b = Mat::from_ints(&[&[1], &[-1]]);
        assert_eq!(a.mul(&b).unwrap(), Mat::zeros(2, 1));
    }

    #[test]
    fn block_involution_squares_to_identity() {
        for s in [-7, 0, 3] {
            let st = Mat::from_ints(&[&[-1, s], &[0, 1]]);
            assert_eq!(st.mul(&st).unwrap(), Mat::identity(2));
        }
        let s = GaussRat::from_fracs(2, 3, -5, 7);
        let st = Mat::from_rows(vec![
            vec![-GaussRat::one(), s],
            vec![GaussRat::zero(), GaussRat::one()],
        ])
        .unwrap();
        assert_eq!(st.mul(&st).unwrap(), Mat::identity(2));
    }

    #[test]
    fn mul_shape_mismatch() {
        let a = Mat::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![GaussRat::one()], vec![]];
        assert!(Mat::from_rows(rows).is_err());
    }

    #[test]
    fn json_rows() {
        let m = Mat::from_ints(&[&[1, 0], &[0, -2]]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"[[["1/1","0/1"],["0/1","0/1"]],[["0/1","0/1"],["-2/1","0/1"]]]"#);
        assert_eq!(serde_json::from_str::<Mat>(&json).unwrap(), m);
    }
}
