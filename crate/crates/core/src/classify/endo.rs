use serde::{Deserialize, Serialize};

use crate::algebra::Rep;
use crate::error::Result;
use crate::exact_linalg::{commutant_basis, Mat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoReport {
    pub dimension: usize,
    pub basis: Vec<Mat>,
    /// When set, the endomorphism algebra is a product of copies of the
    /// field and is local exactly when `dimension == 1`.
    pub all_diagonal: bool,
}

/// Commutant of `y1, y2, s`. Since `e = y1 s + 1 - s y2`, anything commuting
/// with those three commutes with `e` as well.
pub fn endo_report(rep: &Rep) -> Result<EndoReport> {
    rep.check_shape()?;
    let basis = commutant_basis(&[&rep.y1, &rep.y2, &rep.s])?;
    Ok(EndoReport {
        dimension: basis.len(),
        all_diagonal: basis.iter().all(Mat::is_diagonal),
        basis,
    })
}

impl EndoReport {
    /// Sound only in the two decided cases; `None` otherwise.
    pub fn is_local(&self) -> Option<bool> {
        match (self.dimension, self.all_diagonal) {
            (1, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }
}
