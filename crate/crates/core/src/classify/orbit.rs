//! The action of `N_k x N_l` (pairs of monomial matrices) on seeds, and the
//! canonical representative of each orbit of regular rhizomatic seeds.

use serde::{Deserialize, Serialize};

use super::is_regular;
use crate::error::{Error, Result};
use crate::exact_linalg::{GaussRat, Mat};
use crate::rep_builder::Seed;
use crate::rhizome::{analyze, scaling_normalize};

/// `X1 = Σ ξ_i E_{i,σ(i)}` and `X2 = Σ φ_j E_{j,τ(j)}`, permutations 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialPair {
    pub sigma: Vec<usize>,
    pub xi: Vec<GaussRat>,
    pub tau: Vec<usize>,
    pub phi: Vec<GaussRat>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl MonomialPair {
    pub fn identity(k: usize, l: usize) -> MonomialPair {
        MonomialPair {
            sigma: (0..k).collect(),
            xi: vec![GaussRat::one(); k],
            tau: (0..l).collect(),
            phi: vec![GaussRat::one(); l],
        }
    }

    pub fn validate(&self, k: usize, l: usize) -> Result<()> {
        if self.sigma.len() != k || self.xi.len() != k || self.tau.len() != l || self.phi.len() != l {
            return Err(Error::DimensionMismatch(format!("monomial pair does not match (k, l) = ({k}, {l})")));
        }
        if !is_permutation(&self.sigma) || !is_permutation(&self.tau) {
            return Err(Error::Hypothesis("sigma and tau must be permutations".into()));
        }
        if self.xi.iter().chain(&self.phi).any(GaussRat::is_zero) {
            return Err(Error::Hypothesis("monomial scalars must be nonzero".into()));
        }
        Ok(())
    }

    fn monomial(perm: &[usize], scalars: &[GaussRat]) -> Mat {
        let mut m = Mat::zeros(perm.len(), perm.len());
        for (i, (&p, x)) in perm.iter().zip(scalars).enumerate() {
            m[(i, p)] = x.clone();
        }
        m
    }

    fn monomial_inverse(perm: &[usize], scalars: &[GaussRat]) -> Result<Mat> {
        let mut m = Mat::zeros(perm.len(), perm.len());
        for (i, (&p, x)) in perm.iter().zip(scalars).enumerate() {
            m[(p, i)] = x.inv()?;
        }
        Ok(m)
    }

    pub fn x1(&self) -> Mat {
        Self::monomial(&self.sigma, &self.xi)
    }

    pub fn x2(&self) -> Mat {
        Self::monomial(&self.tau, &self.phi)
    }

    /// `diag(X1, X2)` and its inverse.
    pub fn block(&self) -> Result<(Mat, Mat)> {
        let x = Mat::direct_sum(&[&self.x1(), &self.x2()]);
        let x1_inv = Self::monomial_inverse(&self.sigma, &self.xi)?;
        let x2_inv = Self::monomial_inverse(&self.tau, &self.phi)?;
        Ok((x, Mat::direct_sum(&[&x1_inv, &x2_inv])))
    }
}

/// `(X1, X2) · (S, (a, b)) = (X1 S X2⁻¹, (a_σ(1), …, a_σ(k), b_τ(1), …, b_τ(l)))`,
/// so that building from the result equals conjugating the built matrices
/// by `diag(X1, X2)`. Entrywise the new seed matrix is
/// `ξ_i φ_j⁻¹ s_{σ(i), τ(j)}`.
pub fn group_act(g: &MonomialPair, seed: &Seed) -> Result<Seed> {
    seed.check_shape()?;
    g.validate(seed.k, seed.l)?;
    let phi_inv: Vec<GaussRat> = g.phi.iter().map(GaussRat::inv).collect::<Result<_>>()?;
    let s = Mat::from_fn(seed.k, seed.l, |i, j| {
        let x = &seed.s[(g.sigma[i], g.tau[j])];
        if x.is_zero() {
            GaussRat::zero()
        } else {
            &(&g.xi[i] * &phi_inv[j]) * x
        }
    });
    let ab = g
        .sigma
        .iter()
        .map(|&p| seed.a()[p].clone())
        .chain(g.tau.iter().map(|&p| seed.b()[p].clone()))
        .collect();
    Seed::new(seed.k, seed.l, s, ab)
}

/// The orbit representative: eigenvalues sorted, then the permuted seed
/// matrix scaled to 1 along its spanning tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub ab: Vec<GaussRat>,
    #[serde(rename = "S")]
    pub s: Mat,
}

impl CanonicalForm {
    /// Byte-stable encoding; two forms are equal iff these strings are.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("canonical form serializes")
    }
}

fn check_classified(seed: &Seed) -> Result<()> {
    seed.check_shape()?;
    if !is_regular(&seed.ab, seed.k, seed.l) {
        return Err(Error::Hypothesis(
            "eigenvalues are not regular; isomorphism is only classified for regular seeds (see endo_report)".into(),
        ));
    }
    if !analyze(&seed.s).is_rhizomatic {
        return Err(Error::Hypothesis(
            "S is not rhizomatic, so the module is decomposable; compare summands via endo_report".into(),
        ));
    }
    Ok(())
}

fn argsort(xs: &[GaussRat]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&i, &j| xs[i].cmp(&xs[j]));
    idx
}

pub fn canonical_form(seed: &Seed) -> Result<CanonicalForm> {
    check_classified(seed)?;
    let rows = argsort(seed.a());
    let cols = argsort(seed.b());
    let permuted = seed.s.select(&rows, &cols);
    let ab = rows
        .iter()
        .map(|&i| seed.a()[i].clone())
        .chain(cols.iter().map(|&j| seed.b()[j].clone()))
        .collect();
    Ok(CanonicalForm {
        ab,
        s: scaling_normalize(&permuted)?.normalized,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoOutcome {
    pub isomorphic: bool,
    pub reason: String,
}

/// Isomorphism of two regular rhizomatic seeds: same orbit, decided by
/// comparing canonical forms.
pub fn isomorphic(first: &Seed, second: &Seed) -> Result<IsoOutcome> {
    if (first.k, first.l) != (second.k, second.l) {
        return Ok(IsoOutcome {
            isomorphic: false,
            reason: format!(
                "weight multiplicities differ: (k, l) = ({}, {}) vs ({}, {})",
                first.k, first.l, second.k, second.l
            ),
        });
    }
    let (c1, c2) = (canonical_form(first)?, canonical_form(second)?);
    let same = c1.to_json() == c2.to_json();
    let reason = if same {
        "canonical forms agree"
    } else if c1.ab != c2.ab {
        "eigenvalues differ"
    } else {
        "normalized seed matrices differ"
    };
    Ok(IsoOutcome {
        isomorphic: same,
        reason: reason.into(),
    })
}
