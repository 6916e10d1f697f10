//! Construction of calibrated representations: the one-dimensional modules
//! `V_a^±`, the Hecke modules `W_{k,l}(S)`, and their deformations
//! `V_{k,l}(S; (a, b))`.

use serde::{Deserialize, Serialize};

use crate::algebra::{verify_sv2, Rep};
use crate::error::{Error, Result};
use crate::exact_linalg::{GaussRat, Mat};

/// A seed `(S, (a, b))`: a `k x l` matrix and `k + l` eigenvalues, `a` first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub k: usize,
    #[serde(rename = "l")]
    pub l: usize,
    #[serde(rename = "S")]
    pub s: Mat,
    pub ab: Vec<GaussRat>,
}

impl Seed {
    pub fn new(k: usize, l: usize, s: Mat, ab: Vec<GaussRat>) -> Result<Seed> {
        let seed = Seed { k, l, s, ab };
        seed.check_shape()?;
        Ok(seed)
    }

    pub fn check_shape(&self) -> Result<()> {
        if self.s.shape() != (self.k, self.l) && !(self.s.rows() == 0 && self.k * self.l == 0) {
            return Err(Error::DimensionMismatch(format!(
                "S is {}x{}, expected {}x{}",
                self.s.rows(),
                self.s.cols(),
                self.k,
                self.l
            )));
        }
        if self.ab.len() != self.k + self.l {
            return Err(Error::DimensionMismatch(format!(
                "ab has {} entries, expected k + l = {}",
                self.ab.len(),
                self.k + self.l
            )));
        }
        Ok(())
    }

    pub fn a(&self) -> &[GaussRat] {
        &self.ab[..self.k]
    }

    pub fn b(&self) -> &[GaussRat] {
        &self.ab[self.k..]
    }

    /// The same seed with `(a, b) = 0`.
    pub fn hecke(k: usize, l: usize, s: Mat) -> Result<Seed> {
        Seed::new(k, l, s, vec![GaussRat::zero(); k + l])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> GaussRat {
        match self {
            Sign::Plus => GaussRat::one(),
            Sign::Minus => -GaussRat::one(),
        }
    }
}

/// `V_a^±`: `y1 = a`, `s = ±1`, `e = 0`, and `y2 = a ± 1` as forced by
/// `s y2 = y1 s + 1`.
pub fn build_one_dim(a: &GaussRat, sign: Sign) -> Rep {
    let m = |x: GaussRat| Mat::diag(&[x]);
    let (k, l) = match sign {
        Sign::Plus => (0, 1),
        Sign::Minus => (1, 0),
    };
    Rep {
        k,
        l,
        y1: m(a.clone()),
        y2: m(a + &sign.value()),
        s: m(sign.value()),
        e: Mat::zeros(1, 1),
    }
}

fn weight_diagonals(k: usize, l: usize) -> (Mat, Mat) {
    let zero = GaussRat::zero();
    let minus = -GaussRat::one();
    let y1: Vec<_> = (0..k + l).map(|i| if i < k { zero.clone() } else { minus.clone() }).collect();
    let y2: Vec<_> = (0..k + l).map(|i| if i < k { minus.clone() } else { zero.clone() }).collect();
    (Mat::diag(&y1), Mat::diag(&y2))
}

/// `[[-Id_k, S], [0, Id_l]]`.
pub fn block_involution(s: &Mat) -> Result<Mat> {
    let (k, l) = s.shape();
    Mat::block2(&Mat::identity(k).neg(), s, &Mat::zeros(l, k), &Mat::identity(l))
}

/// `W_{k,l}(S)`: the Hecke module extending `(V_{-1}^+)^l` by `(V_0^-)^k`.
pub fn build_hecke_w(k: usize, l: usize, s: &Mat) -> Result<Rep> {
    Seed::hecke(k, l, s.clone())?;
    let (y1, y2) = weight_diagonals(k, l);
    Rep::new(k, l, y1, y2, block_involution(s)?, Mat::zeros(k + l, k + l))
}

/// `V_{k,l}(S; (a, b))`: shift both diagonals of `W_{k,l}(S)` by
/// `diag(a, b)` and set `e = -s y2 + y1 s + 1`.
pub fn build_v(seed: &Seed) -> Result<Rep> {
    seed.check_shape()?;
    let (k, l) = (seed.k, seed.l);
    let (w1, w2) = weight_diagonals(k, l);
    let shift = Mat::diag(&seed.ab);
    let y1 = w1.add(&shift)?;
    let y2 = w2.add(&shift)?;
    let s = block_involution(&seed.s)?;
    let e = s.mul(&y2)?.neg().add(&y1.mul(&s)?)?.add(&Mat::identity(k + l))?;
    Rep::new(k, l, y1, y2, s, e)
}

/// The `k x l` block of `e` from the entry formula `(a_i - b_j) s_ij`.
pub fn e_block_formula(seed: &Seed) -> Result<Mat> {
    seed.check_shape()?;
    Ok(Mat::from_fn(seed.k, seed.l, |i, j| {
        &(&seed.a()[i] - &seed.b()[j]) * &seed.s[(i, j)]
    }))
}

/// A one-dimensional composition factor: the sign by which `s` acts and the
/// eigenvalue of `y1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneDimFactor {
    pub sign: Sign,
    pub eigenvalue: GaussRat,
}

/// `0 -> ⊕ V_{a_i}^- -> V -> ⊕ V_{b_j - 1}^+ -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionProfile {
    pub socle_factors: Vec<OneDimFactor>,
    pub quotient_factors: Vec<OneDimFactor>,
}

/// Reads the extension off a representation in block shape, i.e. calibrated
/// with `y1 - y2 = diag(Id_k, -Id_l)`.
pub fn extension_profile(rep: &Rep) -> Result<ExtensionProfile> {
    rep.check_shape()?;
    if !rep.is_calibrated() {
        return Err(Error::Hypothesis("y1 and y2 must be diagonal".into()));
    }
    let diff = rep.y1.sub(&rep.y2)?;
    let one = GaussRat::one();
    for i in 0..rep.dim() {
        let want = if i < rep.k { one.clone() } else { -&one };
        if diff[(i, i)] != want {
            return Err(Error::Hypothesis(format!(
                "y1 - y2 has {} at position {i}, expected {want} for the (k={}, l={}) block shape",
                diff[(i, i)],
                rep.k,
                rep.l
            )));
        }
    }
    let report = verify_sv2(rep)?;
    if !report.passed {
        return Err(Error::Hypothesis(format!(
            "not a representation: relation {} fails",
            report.violations[0].relation
        )));
    }
    let y1 = rep.y1.diagonal();
    Ok(ExtensionProfile {
        socle_factors: y1[..rep.k]
            .iter()
            .map(|a| OneDimFactor {
                sign: Sign::Minus,
                eigenvalue: a.clone(),
            })
            .collect(),
        quotient_factors: y1[rep.k..]
            .iter()
            .map(|b_minus_one| OneDimFactor {
                sign: Sign::Plus,
                eigenvalue: b_minus_one.clone(),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{e_is_zero, verify_hdeg};

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn one_dim_minus_at_zero() {
        let rep = build_one_dim(&g(0), Sign::Minus);
        assert_eq!(rep.y1, Mat::from_ints(&[&[0]]));
        assert_eq!(rep.y2, Mat::from_ints(&[&[-1]]));
        assert_eq!(rep.s, Mat::from_ints(&[&[-1]]));
        assert!(e_is_zero(&rep));
        assert!(verify_sv2(&rep).unwrap().passed);
    }

    #[test]
    fn one_dim_plus_at_minus_one() {
        let rep = build_one_dim(&g(-1), Sign::Plus);
        assert_eq!(rep.y1, Mat::from_ints(&[&[-1]]));
        assert_eq!(rep.y2, Mat::from_ints(&[&[0]]));
        assert_eq!(rep.s, Mat::from_ints(&[&[1]]));
        assert!(verify_sv2(&rep).unwrap().passed);
    }

    #[test]
    fn one_dim_e_is_forced_to_vanish() {
        // e^2 = 0 has only the zero solution in dimension one.
        let a = GaussRat::gauss(2, -1);
        for sign in [Sign::Plus, Sign::Minus] {
            let mut rep = build_one_dim(&a, sign);
            assert!(verify_sv2(&rep).unwrap().passed);
            rep.e = Mat::diag(&[g(3)]);
            assert!(verify_sv2(&rep).unwrap().violated("e^2=0"));
        }
    }

    #[test]
    fn hecke_w_three_two_matrices() {
        let s = Mat::from_ints(&[&[1, 2], &[3, 4], &[5, 6]]);
        let w = build_hecke_w(3, 2, &s).unwrap();
        assert_eq!(w.y1, Mat::diag(&[g(0), g(0), g(0), g(-1), g(-1)]));
        assert_eq!(w.y2, Mat::diag(&[g(-1), g(-1), g(-1), g(0), g(0)]));
        assert_eq!(
            w.s,
            Mat::from_ints(&[
                &[-1, 0, 0, 1, 2],
                &[0, -1, 0, 3, 4],
                &[0, 0, -1, 5, 6],
                &[0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 1],
            ])
        );
        assert!(verify_hdeg(&w).unwrap().passed);
        assert!(verify_sv2(&w).unwrap().passed);
        // s y1 s + s = y2
        let lhs = w.s.mul(&w.y1).unwrap().mul(&w.s).unwrap().add(&w.s).unwrap();
        assert_eq!(lhs, w.y2);
    }

    #[test]
    fn hecke_w_with_zero_seed_is_direct_sum_of_one_dims() {
        let w = build_hecke_w(1, 1, &Mat::zeros(1, 1)).unwrap();
        let sum = build_one_dim(&g(0), Sign::Minus).direct_sum(&build_one_dim(&g(-1), Sign::Plus));
        assert_eq!(w, sum);
    }

    #[test]
    fn build_v_with_zero_ab_is_hecke_w() {
        let s = Mat::from_ints(&[&[1, 0], &[2, -3]]);
        let seed = Seed::hecke(2, 2, s.clone()).unwrap();
        assert_eq!(build_v(&seed).unwrap(), build_hecke_w(2, 2, &s).unwrap());
    }

    #[test]
    fn e_block_entries_generic() {
        let s = Mat::from_ints(&[&[1, 2], &[3, 4], &[5, 6]]);
        let ab = vec![g(7), g(11), g(13), g(2), g(-3)];
        let seed = Seed::new(3, 2, s, ab).unwrap();
        let rep = build_v(&seed).unwrap();
        let expected = [[5, 20], [27, 56], [55, 96]];
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(rep.e[(i, 3 + j)], g(expected[i][j]));
            }
        }
        assert_eq!(e_block_formula(&seed).unwrap(), Mat::from_ints(&[&[5, 20], &[27, 56], &[55, 96]]));
        assert!(verify_sv2(&rep).unwrap().passed);
    }

    #[test]
    fn shape_errors() {
        assert!(Seed::new(2, 2, Mat::zeros(2, 3), vec![g(0); 4]).is_err());
        assert!(Seed::new(2, 2, Mat::zeros(2, 2), vec![g(0); 3]).is_err());
        assert!(build_hecke_w(3, 1, &Mat::zeros(1, 3)).is_err());
    }

    #[test]
    fn extension_of_rank_one_seed() {
        let (a, b) = (GaussRat::gauss(1, 2), g(4));
        let seed = Seed::new(1, 1, Mat::from_ints(&[&[1]]), vec![a.clone(), b.clone()]).unwrap();
        let profile = extension_profile(&build_v(&seed).unwrap()).unwrap();
        assert_eq!(
            profile.socle_factors,
            vec![OneDimFactor {
                sign: Sign::Minus,
                eigenvalue: a
            }]
        );
        assert_eq!(
            profile.quotient_factors,
            vec![OneDimFactor {
                sign: Sign::Plus,
                eigenvalue: &b - &g(1)
            }]
        );
    }

    #[test]
    fn extension_of_hecke_module() {
        let w = build_hecke_w(3, 2, &Mat::from_ints(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let profile = extension_profile(&w).unwrap();
        assert_eq!(profile.socle_factors.len(), 3);
        assert!(profile.socle_factors.iter().all(|f| f.sign == Sign::Minus && f.eigenvalue == g(0)));
        assert_eq!(profile.quotient_factors.len(), 2);
        assert!(profile.quotient_factors.iter().all(|f| f.sign == Sign::Plus && f.eigenvalue == g(-1)));
    }

    #[test]
    fn extension_of_one_dim_minus() {
        let a = GaussRat::from_fracs(-5, 3, 1, 1);
        let profile = extension_profile(&build_one_dim(&a, Sign::Minus)).unwrap();
        assert_eq!(profile.socle_factors.len(), 1);
        assert_eq!(profile.socle_factors[0].eigenvalue, a);
        assert!(profile.quotient_factors.is_empty());
    }

    #[test]
    fn extension_rejects_wrong_block_shape() {
        let mut rep = build_hecke_w(1, 1, &Mat::zeros(1, 1)).unwrap();
        rep.k = 2;
        rep.l = 0;
        assert!(matches!(extension_profile(&rep), Err(Error::Hypothesis(_))));
    }
}
