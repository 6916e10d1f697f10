//! Structural decompositions of calibrated representations.
//!
//! The relations force `e` to live in the `(+1, -1)` block of `y1 - y2`
//! weights and `s` to be block diagonal across weight pairs `{d, -d}`, so a
//! calibrated module splits into a core where `e` may act and a part where
//! it acts by zero. Within the core, a nonzero lower-left block `T` of `s`
//! splits the core further.

use serde::{Deserialize, Serialize};

use super::{Splitting, Verdict};
use crate::algebra::{verify_sv2, Rep};
use crate::error::{Error, Result};
use crate::exact_linalg::{generated_subspace, kernel_basis, rref, span_dim, GaussRat, Mat, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OtherBlock {
    /// The representative of the pair `{d, -d}`, the larger of the two in
    /// the total order.
    pub d: GaussRat,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightBlockPartition {
    pub plus_block: Vec<usize>,
    pub minus_block: Vec<usize>,
    pub other_blocks: Vec<OtherBlock>,
}

impl WeightBlockPartition {
    /// Basis indices of the part on which `e` acts by zero, block by block.
    pub fn hecke_indices(&self) -> Vec<usize> {
        self.other_blocks
            .iter()
            .flat_map(|b| b.plus.iter().chain(&b.minus).copied())
            .collect()
    }

    pub fn core_indices(&self) -> Vec<usize> {
        self.plus_block.iter().chain(&self.minus_block).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSplit {
    pub partition: WeightBlockPartition,
    pub core: Rep,
    pub hecke_part: Rep,
}

fn structure_err(msg: String) -> Error {
    Error::Structure(msg)
}

/// Sorts the basis by `y1 - y2` weight and separates the `(k + l)`-dimensional
/// core from the `±d_i` blocks, checking the shape the relations force on
/// `e` and `s` along the way.
pub fn split_weight_blocks(rep: &Rep) -> Result<WeightSplit> {
    rep.check_shape()?;
    if !rep.is_calibrated() {
        return Err(Error::Hypothesis("y1 and y2 must be diagonal".into()));
    }
    let n = rep.dim();
    let d: Vec<GaussRat> = rep.y1.sub(&rep.y2)?.diagonal();
    if let Some(i) = d.iter().position(GaussRat::is_zero) {
        return Err(structure_err(format!(
            "y1 - y2 vanishes at basis vector {i}, incompatible with s(y1 - y2) + (y1 - y2)s = -2"
        )));
    }

    let one = GaussRat::one();
    let minus_one = -&one;
    let mut partition = WeightBlockPartition {
        plus_block: Vec::new(),
        minus_block: Vec::new(),
        other_blocks: Vec::new(),
    };
    for (i, di) in d.iter().enumerate() {
        if *di == one {
            partition.plus_block.push(i);
        } else if *di == minus_one {
            partition.minus_block.push(i);
        } else {
            let neg = -di;
            let rep_d = if *di > neg { di.clone() } else { neg };
            let block = match partition.other_blocks.iter_mut().position(|b| b.d == rep_d) {
                Some(p) => &mut partition.other_blocks[p],
                None => {
                    partition.other_blocks.push(OtherBlock {
                        d: rep_d.clone(),
                        plus: Vec::new(),
                        minus: Vec::new(),
                    });
                    partition.other_blocks.last_mut().unwrap()
                }
            };
            if *di == rep_d {
                block.plus.push(i);
            } else {
                block.minus.push(i);
            }
        }
    }

    let is_plus = |i: usize| d[i] == one;
    let is_minus = |i: usize| d[i] == minus_one;
    for (i, j, x) in rep.e.entries() {
        if !x.is_zero() && !(is_plus(i) && is_minus(j)) {
            return Err(structure_err(format!(
                "e has nonzero entry {x} at ({i}, {j}) outside the (+1, -1) weight block"
            )));
        }
    }
    for (i, j, x) in rep.s.entries() {
        if i == j {
            let want = -(&one / &d[i]);
            if *x != want {
                return Err(structure_err(format!("s has {x} at ({i}, {i}), the weight forces {want}")));
            }
        } else if !x.is_zero() && d[i] != -&d[j] {
            return Err(structure_err(format!(
                "s has nonzero entry {x} at ({i}, {j}) linking weights {} and {}",
                d[i], d[j]
            )));
        }
    }
    let report = verify_sv2(rep)?;
    if let Some(v) = report.violations.first() {
        return Err(structure_err(format!(
            "relation {} fails at ({}, {}): {} vs {}",
            v.relation, v.row, v.col, v.lhs, v.rhs
        )));
    }

    let core = rep.restrict(&partition.core_indices(), partition.plus_block.len(), partition.minus_block.len())?;
    let hk: usize = partition.other_blocks.iter().map(|b| b.plus.len()).sum();
    let hl: usize = partition.other_blocks.iter().map(|b| b.minus.len()).sum();
    let hecke_part = rep.restrict(&partition.hecke_indices(), hk, hl)?;
    debug_assert!(core.dim() + hecke_part.dim() == n);
    Ok(WeightSplit {
        partition,
        core,
        hecke_part,
    })
}

fn embed(v: &[GaussRat], offset: usize, n: usize) -> Vector {
    let mut out = vec![GaussRat::zero(); n];
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![GaussRat::zero(); n];
    v[i] = GaussRat::one();
    v
}

/// Checks `y1 - y2 = diag(Id_k, -Id_l)` and `s = [[-Id, S], [T, Id]]`.
fn check_core_shape(rep: &Rep) -> Result<()> {
    rep.check_shape()?;
    if !rep.is_calibrated() {
        return Err(Error::Hypothesis("core must be calibrated".into()));
    }
    let k = rep.k;
    let diff = rep.y1.sub(&rep.y2)?;
    let id = Mat::identity(rep.dim());
    for i in 0..rep.dim() {
        let sign = if i < k { GaussRat::one() } else { -GaussRat::one() };
        if diff[(i, i)] != sign {
            return Err(Error::Hypothesis(format!("y1 - y2 is not diag(Id_k, -Id_l) at {i}")));
        }
        for j in 0..rep.dim() {
            if (i < k) == (j < k) && rep.s[(i, j)] != -(&id[(i, j)] * &sign) {
                return Err(Error::Hypothesis(format!(
                    "s is not of the form [[-Id, S], [T, Id]] at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Splits a core whose involution has a nonzero lower-left block `T`.
///
/// `V1` is generated by a coordinate complement of `Ker T` in the `+1`
/// weight space; `V2` by `Ker T` together with a coordinate complement of
/// `Im T` in the `-1` weight space. Coordinate complements are spanned by
/// eigenvectors of `y1`, hence stable under it.
pub fn split_t(rep: &Rep) -> Result<Verdict> {
    check_core_shape(rep)?;
    let (k, l, n) = (rep.k, rep.l, rep.dim());
    let t = rep.s.select(&(k..n).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>());
    if t.is_zero() {
        return Ok(Verdict::unknown("T = 0: this splitting does not apply, classify the seed instead"));
    }

    let ker = kernel_basis(&t);
    let ker_complement: Vec<Vector> = rref(&t).pivots.iter().map(|&p| unit(n, p)).collect();

    let image: Vec<Vector> = (0..k).map(|j| t.column(j)).collect();
    let image_basis = crate::exact_linalg::independent_subset(&image, l);
    let image_rows = rref(&Mat::from_columns(l, &image_basis).transpose());
    let image_complement: Vec<Vector> = image_rows.free_columns().into_iter().map(|j| unit(n, k + j)).collect();

    let gens: Vec<&Mat> = rep.generators().into_iter().map(|(_, m)| m).collect();
    let first = generated_subspace(&ker_complement, &gens)?;
    let mut second_seeds: Vec<Vector> = ker.iter().map(|v| embed(v, 0, n)).collect();
    second_seeds.extend(image_complement);
    let second = generated_subspace(&second_seeds, &gens)?;

    let mut all = first.clone();
    all.extend(second.iter().cloned());
    if first.is_empty() || second.is_empty() || first.len() + second.len() != n || span_dim(&all, n) != n {
        return Ok(Verdict::unknown(format!(
            "T != 0 but the generated subspaces (dimensions {} and {}) are not complementary; \
             this happens when S = 0 and e acts by zero",
            first.len(),
            second.len()
        )));
    }
    Ok(Verdict::decomposable(
        format!("T has rank {}, splitting off dimensions {} and {}", image_basis.len(), first.len(), second.len()),
        Splitting { first, second },
    ))
}
