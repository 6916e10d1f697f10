//! Row reduction and the subspace computations built on it.

use super::matrix::{Mat, Vector};
use super::scalar::GaussRat;
use crate::error::{Error, Result};

/// Reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Mat,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns without a pivot, increasing.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.reduced.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.reduced.cols()).filter(|&j| !is_pivot[j]).collect()
    }
}

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each
/// column in row order.
pub fn rref(a: &Mat) -> Echelon {
    let (rows, cols) = a.shape();
    let mut m: Vec<Vec<GaussRat>> = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon {
        reduced: Mat::from_rows(m).unwrap_or_else(|_| Mat::zeros(rows, cols)),
        pivots,
    }
}

pub fn rank(a: &Mat) -> usize {
    rref(a).rank()
}

/// Basis of the right null space `{v : A v = 0}`.
///
/// One vector per free column, with a 1 in that column and 0 in the other
/// free columns. Empty iff `A` is injective.
pub fn kernel_basis(a: &Mat) -> Vec<Vector> {
    let ech = rref(a);
    let cols = a.cols();
    ech.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![GaussRat::zero(); cols];
            v[f] = GaussRat::one();
            for (row, &p) in ech.pivots.iter().enumerate() {
                v[p] = -&ech.reduced[(row, f)];
            }
            v
        })
        .collect()
}

/// Some `x` with `A x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &Mat, b: &[GaussRat]) -> Result<Option<Vector>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "system has {} equations but right-hand side has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let augmented = Mat::from_fn(a.rows(), a.cols() + 1, |i, j| {
        if j < a.cols() {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let ech = rref(&augmented);
    if ech.pivots.last() == Some(&a.cols()) {
        return Ok(None);
    }
    let mut x = vec![GaussRat::zero(); a.cols()];
    for (row, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.reduced[(row, a.cols())].clone();
    }
    Ok(Some(x))
}

pub fn inverse(a: &Mat) -> Result<Mat> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = a.rows();
    let aug = Mat::block2(a, &Mat::identity(n), &Mat::zeros(0, n), &Mat::zeros(0, n))?;
    let ech = rref(&aug);
    if ech.rank() < n || ech.pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(ech.reduced.select(&rows, &cols))
}

/// Basis of `{X : X G = G X for every G in gens}`, each element an `n x n`
/// matrix. The `n²` entries of `X` are the unknowns of one homogeneous
/// system with `n²` equations per generator.
pub fn commutant_basis(gens: &[&Mat]) -> Result<Vec<Mat>> {
    let Some(first) = gens.first() else {
        return Err(Error::DimensionMismatch("commutant of an empty generator list".into()));
    };
    let n = first.rows();
    if let Some(g) = gens.iter().find(|g| g.shape() != (n, n)) {
        return Err(Error::DimensionMismatch(format!(
            "generators must all be {n}x{n}, found {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    let unknown = |i: usize, j: usize| i * n + j;
    let mut system = Mat::zeros(gens.len() * n * n, n * n);
    for (g_idx, g) in gens.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                // (XG - GX)_{ij} = sum_m X_{im} G_{mj} - sum_m G_{im} X_{mj}
                let eq = g_idx * n * n + unknown(i, j);
                for m in 0..n {
                    let gmj = &g[(m, j)];
                    if !gmj.is_zero() {
                        system[(eq, unknown(i, m))] += gmj;
                    }
                    let gim = &g[(i, m)];
                    if !gim.is_zero() {
                        system[(eq, unknown(m, j))] -= gim;
                    }
                }
            }
        }
    }
    Ok(kernel_basis(&system)
        .into_iter()
        .map(|v| Mat::from_fn(n, n, |i, j| v[unknown(i, j)].clone()))
        .collect())
}

/// Linearly independent subset spanning the same space, in input order.
pub fn independent_subset(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let ech = rref(&Mat::from_columns(dim, vectors));
    ech.pivots.iter().map(|&p| vectors[p].clone()).collect()
}

/// Dimension of the span of `vectors` in a space of dimension `dim`.
pub fn span_dim(vectors: &[Vector], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&Mat::from_columns(dim, vectors))
}

/// Smallest subspace containing `seeds` and stable under every generator,
/// returned as a basis.
pub fn generated_subspace(seeds: &[Vector], gens: &[&Mat]) -> Result<Vec<Vector>> {
    let dim = gens.first().map(|g| g.rows()).unwrap_or_else(|| seeds.first().map_or(0, Vec::len));
    let mut basis = independent_subset(seeds, dim);
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for g in gens {
                let w = g.mul_vec(v)?;
                let mut candidate = basis.clone();
                candidate.push(w.clone());
                if span_dim(&candidate, dim) > basis.len() {
                    basis.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}

/// Whether every generator maps the span of `basis` into itself.
pub fn is_invariant(basis: &[Vector], gens: &[&Mat]) -> Result<bool> {
    let Some(dim) = basis.first().map(Vec::len) else {
        return Ok(true);
    };
    let r = span_dim(basis, dim);
    for g in gens {
        for v in basis {
            let mut candidate = basis.to_vec();
            candidate.push(g.mul_vec(v)?);
            if span_dim(&candidate, dim) != r {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| GaussRat::from_int(x)).collect()
    }

    #[test]
    fn kernel_of_ones() {
        let k = kernel_basis(&Mat::from_ints(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, vec![ints(&[-1, 1])]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        for n in 1..5 {
            assert!(kernel_basis(&Mat::identity(n)).is_empty());
        }
    }

    #[test]
    fn kernel_of_row_vector() {
        let a = GaussRat::gauss(2, 1);
        let b = GaussRat::from_fracs(3, 4, -1, 1);
        let m = Mat::from_rows(vec![vec![a.clone(), b.clone()]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![-(&b / &a), GaussRat::one()]]);
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        for n in 1..4 {
            let id = Mat::identity(n);
            assert_eq!(commutant_basis(&[&id]).unwrap().len(), n * n);
        }
    }

    #[test]
    fn commutant_of_distinct_diagonal() {
        let d = Mat::diag(&ints(&[1, 2, 3]));
        let basis = commutant_basis(&[&d]).unwrap();
        assert_eq!(basis.len(), 3);
        assert!(basis.iter().all(Mat::is_diagonal));
    }

    #[test]
    fn commutant_rejects_mixed_sizes() {
        let a = Mat::identity(2);
        let b = Mat::identity(3);
        assert!(commutant_basis(&[&a, &b]).is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let a = Mat::from_ints(&[&[2, 1], &[1, 1]]);
        let x = solve(&a, &ints(&[3, 2])).unwrap().unwrap();
        assert_eq!(x, ints(&[1, 1]));
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Mat::identity(2));
        assert!(matches!(inverse(&Mat::from_ints(&[&[1, 1], &[1, 1]])), Err(Error::Singular)));
        assert!(solve(&Mat::from_ints(&[&[1, 1], &[1, 1]]), &ints(&[1, 2])).unwrap().is_none());
    }

    #[test]
    fn generated_subspace_closes_under_shift() {
        // The cyclic shift on a basis vector generates everything.
        let shift = Mat::from_ints(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let span = generated_subspace(&[ints(&[1, 0, 0])], &[&shift]).unwrap();
        assert_eq!(span.len(), 3);
        let line = generated_subspace(&[ints(&[1, 1, 1])], &[&shift]).unwrap();
        assert_eq!(line.len(), 1);
        assert!(is_invariant(&line, &[&shift]).unwrap());
        assert!(!is_invariant(&[ints(&[1, 0, 0])], &[&shift]).unwrap());
    }
}
