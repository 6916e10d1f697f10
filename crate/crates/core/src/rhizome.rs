//! Zero-pattern combinatorics of seed matrices.
//!
//! Nonzero entries of `S` are related when they share a row or a column;
//! `S` is rhizomatic when this relation has a single class and every row and
//! column holds a nonzero entry. Equivalently, the bipartite graph with one
//! vertex per row and per column and one edge per nonzero entry is connected
//! with no isolated vertex.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{GaussRat, Mat};

/// Disjoint-set forest with union by size and path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub row: usize,
    pub col: usize,
    pub class: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhizomeReport {
    pub n_classes: usize,
    pub zero_rows: usize,
    pub zero_cols: usize,
    pub is_rhizomatic: bool,
    /// One label per nonzero entry, row-major; classes numbered by first
    /// appearance.
    pub class_labels: Vec<ClassLabel>,
}

/// Classes of nonzero entries under "same row or same column", plus the
/// all-zero row and column counts.
pub fn analyze(s: &Mat) -> RhizomeReport {
    let nonzero: Vec<(usize, usize)> = s.entries().filter(|(_, _, x)| !x.is_zero()).map(|(i, j, _)| (i, j)).collect();
    let mut uf = UnionFind::new(nonzero.len());
    let mut first_in_row: Vec<Option<usize>> = vec![None; s.rows()];
    let mut first_in_col: Vec<Option<usize>> = vec![None; s.cols()];
    for (idx, &(i, j)) in nonzero.iter().enumerate() {
        match first_in_row[i] {
            Some(r) => {
                uf.union(r, idx);
            }
            None => first_in_row[i] = Some(idx),
        }
        match first_in_col[j] {
            Some(c) => {
                uf.union(c, idx);
            }
            None => first_in_col[j] = Some(idx),
        }
    }
    let mut class_of_root = std::collections::HashMap::new();
    let class_labels: Vec<ClassLabel> = nonzero
        .iter()
        .enumerate()
        .map(|(idx, &(row, col))| {
            let root = uf.find(idx);
            let next = class_of_root.len();
            let class = *class_of_root.entry(root).or_insert(next);
            ClassLabel { row, col, class }
        })
        .collect();
    let n_classes = class_of_root.len();
    let zero_rows = first_in_row.iter().filter(|x| x.is_none()).count();
    let zero_cols = first_in_col.iter().filter(|x| x.is_none()).count();
    RhizomeReport {
        n_classes,
        zero_rows,
        zero_cols,
        is_rhizomatic: n_classes == 1 && zero_rows == 0 && zero_cols == 0,
        class_labels,
    }
}

/// Connected component of the row/column incidence graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Vertex {
    Row(usize),
    Col(usize),
}

fn neighbours(s: &Mat, v: Vertex) -> Vec<Vertex> {
    match v {
        Vertex::Row(i) => (0..s.cols()).filter(|&j| !s[(i, j)].is_zero()).map(Vertex::Col).collect(),
        Vertex::Col(j) => (0..s.rows()).filter(|&i| !s[(i, j)].is_zero()).map(Vertex::Row).collect(),
    }
}

/// Components of the bipartite graph on rows `R_1..R_k` and columns
/// `C_1..C_l` with an edge per nonzero entry. Ordered by smallest row, then
/// column-only components by smallest column.
pub fn bipartite_components(s: &Mat) -> Vec<Component> {
    let mut row_seen = vec![false; s.rows()];
    let mut col_seen = vec![false; s.cols()];
    let mut out = Vec::new();
    let starts = (0..s.rows()).map(Vertex::Row).chain((0..s.cols()).map(Vertex::Col));
    for start in starts {
        let seen = match start {
            Vertex::Row(i) => row_seen[i],
            Vertex::Col(j) => col_seen[j],
        };
        if seen {
            continue;
        }
        let mut comp = Component {
            rows: Vec::new(),
            cols: Vec::new(),
        };
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let flag = match v {
                Vertex::Row(i) => &mut row_seen[i],
                Vertex::Col(j) => &mut col_seen[j],
            };
            if *flag {
                continue;
            }
            *flag = true;
            match v {
                Vertex::Row(i) => comp.rows.push(i),
                Vertex::Col(j) => comp.cols.push(j),
            }
            queue.extend(neighbours(s, v));
        }
        comp.rows.sort_unstable();
        comp.cols.sort_unstable();
        out.push(comp);
    }
    out
}

/// Torus normalization of a rhizomatic matrix: `normalized = diag(ξ) S diag(φ)`
/// with every spanning-tree entry equal to 1 and `ξ_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingNormalization {
    pub tree_edges: Vec<(usize, usize)>,
    pub normalized: Mat,
    pub row_scalars: Vec<GaussRat>,
    pub col_scalars: Vec<GaussRat>,
}

/// BFS spanning tree from `R_1`, neighbours in index order, solving
/// `ξ_i φ_j S_ij = 1` along tree edges. The off-tree entries of the result
/// are complete invariants of the row/column scaling orbit.
pub fn scaling_normalize(s: &Mat) -> Result<ScalingNormalization> {
    if !analyze(s).is_rhizomatic {
        return Err(Error::Hypothesis("scaling normalization needs a rhizomatic matrix".into()));
    }
    let (k, l) = s.shape();
    let mut xi: Vec<Option<GaussRat>> = vec![None; k];
    let mut phi: Vec<Option<GaussRat>> = vec![None; l];
    let mut tree_edges = Vec::with_capacity(k + l - 1);
    xi[0] = Some(GaussRat::one());
    let mut queue = VecDeque::from([Vertex::Row(0)]);
    while let Some(v) = queue.pop_front() {
        for w in neighbours(s, v) {
            match (v, w) {
                (Vertex::Row(i), Vertex::Col(j)) if phi[j].is_none() => {
                    let x = xi[i].as_ref().expect("visited row has a scalar");
                    phi[j] = Some((x * &s[(i, j)]).inv()?);
                    tree_edges.push((i, j));
                    queue.push_back(w);
                }
                (Vertex::Col(j), Vertex::Row(i)) if xi[i].is_none() => {
                    let p = phi[j].as_ref().expect("visited column has a scalar");
                    xi[i] = Some((p * &s[(i, j)]).inv()?);
                    tree_edges.push((i, j));
                    queue.push_back(w);
                }
                _ => {}
            }
        }
    }
    let row_scalars: Vec<GaussRat> = xi.into_iter().map(|x| x.expect("connected")).collect();
    let col_scalars: Vec<GaussRat> = phi.into_iter().map(|x| x.expect("connected")).collect();
    let normalized = Mat::from_fn(k, l, |i, j| {
        if s[(i, j)].is_zero() {
            GaussRat::zero()
        } else {
            &(&row_scalars[i] * &col_scalars[j]) * &s[(i, j)]
        }
    });
    Ok(ScalingNormalization {
        tree_edges,
        normalized,
        row_scalars,
        col_scalars,
    })
}

/// Parses a zero pattern written as rows of `.` (zero) and `*` (one).
/// Blank lines and surrounding whitespace are ignored.
pub fn parse_pattern(text: &str) -> Result<Mat> {
    let rows: Vec<Vec<GaussRat>> = text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .enumerate()
        .map(|(r, line)| {
            line.chars()
                .filter(|c| !c.is_whitespace())
                .enumerate()
                .map(|(c, ch)| match ch {
                    '.' => Ok(GaussRat::zero()),
                    '*' => Ok(GaussRat::one()),
                    other => Err(Error::Parse(format!(
                        "line {}, column {}: unexpected {other:?} in pattern",
                        r + 1,
                        c + 1
                    ))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Mat::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
}

pub fn pattern_string(s: &Mat) -> String {
    (0..s.rows())
        .map(|i| s.row(i).iter().map(|x| if x.is_zero() { '.' } else { '*' }).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn identity_is_not_rhizomatic() {
        for n in 2..6 {
            let r = analyze(&Mat::identity(n));
            assert_eq!(r.n_classes, n);
            assert!(!r.is_rhizomatic);
        }
        assert!(analyze(&Mat::identity(1)).is_rhizomatic);
    }

    #[test]
    fn permutation_matrix_is_not_rhizomatic() {
        let p = Mat::from_ints(&[&[0, 0, 3], &[-1, 0, 0], &[0, 2, 0]]);
        assert!(!analyze(&p).is_rhizomatic);
    }

    #[test]
    fn full_matrix_is_rhizomatic() {
        let m = Mat::from_ints(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(analyze(&m).is_rhizomatic);
    }

    #[test]
    fn upper_staircase_is_rhizomatic() {
        // l >= k and s_ij != 0 whenever j >= i.
        let m = Mat::from_fn(3, 5, |i, j| if j >= i { g(1) } else { g(0) });
        assert!(analyze(&m).is_rhizomatic);
    }

    #[test]
    fn zero_matrix() {
        let r = analyze(&Mat::zeros(3, 2));
        assert_eq!((r.n_classes, r.zero_rows, r.zero_cols, r.is_rhizomatic), (0, 3, 2, false));
        assert_eq!(bipartite_components(&Mat::zeros(3, 2)).len(), 5);
    }

    #[test]
    fn identity_components() {
        let comps = bipartite_components(&Mat::identity(2));
        assert_eq!(
            comps,
            vec![
                Component { rows: vec![0], cols: vec![0] },
                Component { rows: vec![1], cols: vec![1] }
            ]
        );
    }

    #[test]
    fn single_entry_normalizes_to_one() {
        let c = GaussRat::from_fracs(-3, 7, 2, 1);
        let n = scaling_normalize(&Mat::from_rows(vec![vec![c]]).unwrap()).unwrap();
        assert_eq!(n.normalized, Mat::from_ints(&[&[1]]));
        assert_eq!(n.tree_edges, vec![(0, 0)]);
    }

    #[test]
    fn two_by_two_cross_ratio() {
        let (a, b, c, d) = (g(2), GaussRat::gauss(1, 1), g(-3), GaussRat::from_fracs(1, 2, 0, 1));
        let s = Mat::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        let n = scaling_normalize(&s).unwrap();
        let cross = &(&a * &d) / &(&b * &c);
        assert_eq!(n.normalized, Mat::from_rows(vec![vec![g(1), g(1)], vec![g(1), cross]]).unwrap());
        assert_eq!(n.tree_edges, vec![(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn normalization_is_idempotent() {
        let s = Mat::from_ints(&[&[1, 1, 0], &[1, 0, 1], &[0, 5, 7]]);
        let once = scaling_normalize(&s).unwrap();
        let twice = scaling_normalize(&once.normalized).unwrap();
        assert_eq!(twice.normalized, once.normalized);
        assert!(twice.row_scalars.iter().chain(&twice.col_scalars).all(GaussRat::is_one));
    }

    #[test]
    fn normalization_rejects_non_rhizomatic() {
        assert!(matches!(scaling_normalize(&Mat::identity(2)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn pattern_round_trip() {
        let text = "*.*\n.**\n";
        let m = parse_pattern(text).unwrap();
        assert_eq!(m, Mat::from_ints(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(pattern_string(&m), "*.*\n.**");
        assert!(parse_pattern("*x").is_err());
        assert!(parse_pattern("**\n*").is_err());
    }
}
