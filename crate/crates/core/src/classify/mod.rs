//! Indecomposability, endomorphism algebras, the monomial group action and
//! canonical forms, and the structural splittings of calibrated modules.

mod endo;
mod indecomposable;
mod orbit;
mod split;

use serde::{Deserialize, Serialize};

pub use endo::{endo_report, EndoReport};
pub use indecomposable::{e_nonzero_guarantee, indecomposable};
pub use orbit::{canonical_form, group_act, isomorphic, CanonicalForm, IsoOutcome, MonomialPair};
pub use split::{split_t, split_weight_blocks, OtherBlock, WeightBlockPartition, WeightSplit};

use crate::algebra::Rep;
use crate::error::Result;
use crate::exact_linalg::{is_invariant, span_dim, GaussRat, Vector};

/// Pairwise distinct `a` entries and pairwise distinct `b` entries; an `a`
/// may coincide with a `b`.
pub fn is_regular(ab: &[GaussRat], k: usize, l: usize) -> bool {
    fn distinct(xs: &[GaussRat]) -> bool {
        let mut sorted: Vec<&GaussRat> = xs.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
    ab.len() == k + l && distinct(&ab[..k]) && distinct(&ab[k..])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    Indecomposable,
    Decomposable,
    Unknown,
}

/// Two complementary invariant subspaces, each given by a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitting {
    pub first: Vec<Vector>,
    pub second: Vec<Vector>,
}

impl Splitting {
    /// Both parts nonzero, invariant under every generator, and together a
    /// direct sum decomposition of the whole space.
    pub fn verify(&self, rep: &Rep) -> Result<bool> {
        let n = rep.dim();
        if self.first.is_empty() || self.second.is_empty() {
            return Ok(false);
        }
        let gens: Vec<_> = rep.generators().into_iter().map(|(_, m)| m).collect();
        let mut all = self.first.clone();
        all.extend(self.second.iter().cloned());
        Ok(span_dim(&self.first, n) == self.first.len()
            && span_dim(&self.second, n) == self.second.len()
            && self.first.len() + self.second.len() == n
            && span_dim(&all, n) == n
            && is_invariant(&self.first, &gens)?
            && is_invariant(&self.second, &gens)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: VerdictKind,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Splitting>,
    /// Dimension of the commutant, when it was computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endo_dimension: Option<usize>,
}

impl Verdict {
    fn indecomposable(reason: impl Into<String>) -> Verdict {
        Verdict {
            value: VerdictKind::Indecomposable,
            reason: reason.into(),
            witness: None,
            endo_dimension: None,
        }
    }

    fn decomposable(reason: impl Into<String>, witness: Splitting) -> Verdict {
        Verdict {
            value: VerdictKind::Decomposable,
            reason: reason.into(),
            witness: Some(witness),
            endo_dimension: None,
        }
    }

    fn unknown(reason: impl Into<String>) -> Verdict {
        Verdict {
            value: VerdictKind::Unknown,
            reason: reason.into(),
            witness: None,
            endo_dimension: None,
        }
    }
}
