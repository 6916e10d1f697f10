//! Representations as tuples of generator matrices, and the defining
//! relations of the periplectic algebra and of its Hecke quotient.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{GaussRat, Mat};

/// Generator matrices `y1, y2, s, e` acting on a space of dimension `k + l`.
///
/// The first `k` basis vectors carry `y1 - y2` eigenvalue `+1`, the last `l`
/// carry `-1` when the representation comes from a seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rep {
    pub k: usize,
    #[serde(rename = "l")]
    pub l: usize,
    pub y1: Mat,
    pub y2: Mat,
    pub s: Mat,
    pub e: Mat,
}

impl Rep {
    pub fn new(k: usize, l: usize, y1: Mat, y2: Mat, s: Mat, e: Mat) -> Result<Rep> {
        let rep = Rep { k, l, y1, y2, s, e };
        rep.check_shape()?;
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.k + self.l
    }

    pub fn check_shape(&self) -> Result<()> {
        let n = self.dim();
        for (name, m) in self.generators() {
            if m.shape() != (n, n) {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {n}x{n} (k={}, l={})",
                    m.rows(),
                    m.cols(),
                    self.k,
                    self.l
                )));
            }
        }
        Ok(())
    }

    /// Calibrated: `y1` and `y2` are diagonal in the stored basis.
    pub fn is_calibrated(&self) -> bool {
        self.y1.is_diagonal() && self.y2.is_diagonal()
    }

    pub fn generators(&self) -> [(&'static str, &Mat); 4] {
        [("y1", &self.y1), ("y2", &self.y2), ("s", &self.s), ("e", &self.e)]
    }

    /// Restriction to a subset of basis indices, keeping the given `(k, l)` split.
    pub fn restrict(&self, idx: &[usize], k: usize, l: usize) -> Result<Rep> {
        Rep::new(
            k,
            l,
            self.y1.select(idx, idx),
            self.y2.select(idx, idx),
            self.s.select(idx, idx),
            self.e.select(idx, idx),
        )
    }

    /// Change of basis `g X g⁻¹` on all four generators.
    pub fn conjugate(&self, g: &Mat, g_inv: &Mat) -> Result<Rep> {
        let c = |m: &Mat| g.mul(m)?.mul(g_inv);
        Rep::new(self.k, self.l, c(&self.y1)?, c(&self.y2)?, c(&self.s)?, c(&self.e)?)
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        Rep {
            k: self.k + other.k,
            l: self.l + other.l,
            y1: Mat::direct_sum(&[&self.y1, &other.y1]),
            y2: Mat::direct_sum(&[&self.y2, &other.y2]),
            s: Mat::direct_sum(&[&self.s, &other.s]),
            e: Mat::direct_sum(&[&self.e, &other.e]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub relation: String,
    pub row: usize,
    pub col: usize,
    pub lhs: GaussRat,
    pub rhs: GaussRat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    fn from_checks(checks: Vec<(&str, Mat, Mat)>) -> RelationReport {
        let violations: Vec<Violation> = checks
            .into_iter()
            .filter_map(|(name, lhs, rhs)| {
                lhs.first_difference(&rhs).map(|(row, col)| Violation {
                    relation: name.to_string(),
                    row,
                    col,
                    lhs: lhs[(row, col)].clone(),
                    rhs: rhs[(row, col)].clone(),
                })
            })
            .collect();
        RelationReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn violated(&self, relation: &str) -> bool {
        self.violations.iter().any(|v| v.relation == relation)
    }
}

pub const SV2_RELATIONS: [&str; 9] = [
    "s^2=1",
    "y1y2=y2y1",
    "sy1=y2s-1-e",
    "sy2=y1s+1-e",
    "e^2=0",
    "es=e",
    "se=-e",
    "ey2=ey1+e",
    "y1e=y2e+e",
];

pub const HDEG_RELATIONS: [&str; 4] = ["s^2=1", "y1y2=y2y1", "sy1=y2s-1", "sy2=y1s+1"];

/// Checks all nine defining relations of the periplectic algebra exactly,
/// reporting the first differing entry of each violated one.
pub fn verify_sv2(rep: &Rep) -> Result<RelationReport> {
    rep.check_shape()?;
    let Rep { y1, y2, s, e, .. } = rep;
    let id = Mat::identity(rep.dim());
    let m = |a: &Mat, b: &Mat| a.mul(b);
    let y1y2 = m(y1, y2)?;
    let y2y1 = m(y2, y1)?;
    let sy1 = m(s, y1)?;
    let sy2 = m(s, y2)?;
    let y1s = m(y1, s)?;
    let y2s = m(y2, s)?;
    let ey1 = m(e, y1)?;
    let ey2 = m(e, y2)?;
    let y1e = m(y1, e)?;
    let y2e = m(y2, e)?;
    let checks = vec![
        ("s^2=1", m(s, s)?, id.clone()),
        ("y1y2=y2y1", y1y2, y2y1),
        ("sy1=y2s-1-e", sy1, y2s.sub(&id)?.sub(e)?),
        ("sy2=y1s+1-e", sy2, y1s.add(&id)?.sub(e)?),
        ("e^2=0", m(e, e)?, Mat::zeros(rep.dim(), rep.dim())),
        ("es=e", m(e, s)?, e.clone()),
        ("se=-e", m(s, e)?, e.neg()),
        ("ey2=ey1+e", ey2, ey1.add(e)?),
        ("y1e=y2e+e", y1e, y2e.add(e)?),
    ];
    Ok(RelationReport::from_checks(checks))
}

/// Checks the four relations of the degenerate affine Hecke algebra on
/// `(y1, y2, s)`; `e` is ignored.
pub fn verify_hdeg(rep: &Rep) -> Result<RelationReport> {
    rep.check_shape()?;
    let Rep { y1, y2, s, .. } = rep;
    let id = Mat::identity(rep.dim());
    let checks = vec![
        ("s^2=1", s.mul(s)?, id.clone()),
        ("y1y2=y2y1", y1.mul(y2)?, y2.mul(y1)?),
        ("sy1=y2s-1", s.mul(y1)?, y2.mul(s)?.sub(&id)?),
        ("sy2=y1s+1", s.mul(y2)?, y1.mul(s)?.add(&id)?),
    ];
    Ok(RelationReport::from_checks(checks))
}

/// Polynomial in two commuting variables: a sum of `c · y1^p · y2^q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    pub terms: Vec<(GaussRat, u32, u32)>,
}

impl Poly {
    pub fn constant(c: GaussRat) -> Poly {
        Poly { terms: vec![(c, 0, 0)] }
    }

    pub fn term(mut self, c: GaussRat, p1: u32, p2: u32) -> Poly {
        self.terms.push((c, p1, p2));
        self
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, p, q)| p + q).max().unwrap_or(0)
    }

    /// `f(y1, y2)` as a matrix.
    pub fn eval(&self, y1: &Mat, y2: &Mat) -> Result<Mat> {
        let n = y1.rows();
        let mut acc = Mat::zeros(n, n);
        for (c, p, q) in &self.terms {
            let mono = y1.pow(*p)?.mul(&y2.pow(*q)?)?;
            acc = acc.add(&mono.scale(c))?;
        }
        Ok(acc)
    }
}

/// Whether `e f(y1, y2) e = 0`. Holds for every valid representation.
pub fn e_sandwich_check(rep: &Rep, f: &Poly) -> Result<bool> {
    rep.check_shape()?;
    let fy = f.eval(&rep.y1, &rep.y2)?;
    Ok(rep.e.mul(&fy)?.mul(&rep.e)?.is_zero())
}

/// Whether `e` acts by zero, i.e. the representation factors through the
/// Hecke quotient.
pub fn e_is_zero(rep: &Rep) -> bool {
    rep.e.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn one_dim(y1: i64, y2: i64, s: i64) -> Rep {
        let m = |x: i64| Mat::from_ints(&[&[x]]);
        Rep::new(1, 0, m(y1), m(y2), m(s), m(0)).unwrap()
    }

    #[test]
    fn identity_e_violates_nilpotency() {
        let mut rep = one_dim(0, -1, -1);
        rep.e = Mat::identity(1);
        let report = verify_sv2(&rep).unwrap();
        assert!(!report.passed);
        assert!(report.violated("e^2=0"));
        let v = report.violations.iter().find(|v| v.relation == "e^2=0").unwrap();
        assert_eq!((v.row, v.col, v.lhs.clone(), v.rhs.clone()), (0, 0, g(1), g(0)));
    }

    #[test]
    fn trivial_sign_one_dim_satisfies_hecke() {
        // s = +1 forces y2 = y1 + 1.
        for a in [-3, 0, 5] {
            assert!(verify_hdeg(&one_dim(a, a + 1, 1)).unwrap().passed);
            assert!(verify_sv2(&one_dim(a, a + 1, 1)).unwrap().passed);
            assert!(!verify_hdeg(&one_dim(a, a - 1, 1)).unwrap().passed);
        }
    }

    #[test]
    fn swap_without_offset_fails() {
        let y = Mat::from_ints(&[&[0, 0], &[0, -1]]);
        let s = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        let rep = Rep::new(1, 1, y.clone(), y, s, Mat::zeros(2, 2)).unwrap();
        let report = verify_hdeg(&rep).unwrap();
        assert!(report.violated("sy1=y2s-1"));
    }

    #[test]
    fn shape_errors() {
        let rep = Rep {
            k: 1,
            l: 1,
            y1: Mat::identity(2),
            y2: Mat::identity(2),
            s: Mat::identity(3),
            e: Mat::zeros(2, 2),
        };
        assert!(matches!(verify_sv2(&rep), Err(Error::DimensionMismatch(_))));
        assert!(matches!(verify_hdeg(&rep), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn poly_eval() {
        let y1 = Mat::diag(&[g(2), g(3)]);
        let y2 = Mat::diag(&[g(1), g(-1)]);
        // y1^3 - 7 y2 + 2
        let f = Poly::constant(g(2)).term(g(1), 3, 0).term(g(-7), 0, 1);
        assert_eq!(f.eval(&y1, &y2).unwrap(), Mat::diag(&[g(3), g(36)]));
        assert_eq!(f.degree(), 3);
    }

    #[test]
    fn json_schema_keys() {
        let rep = one_dim(0, -1, -1);
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["e", "k", "l", "s", "y1", "y2"]);
    }
}
