use super::{endo_report, is_regular, Splitting, Verdict};
use crate::error::Result;
use crate::exact_linalg::{GaussRat, Vector};
use crate::rep_builder::{build_v, Seed};
use crate::rhizome::{analyze, bipartite_components};

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![GaussRat::zero(); n];
    v[i] = GaussRat::one();
    v
}

/// Coordinate splitting along one component of the incidence graph of `S`.
/// Rows map to basis vectors `0..k`, columns to `k..k+l`.
fn component_witness(seed: &Seed) -> Option<Splitting> {
    let comps = bipartite_components(&seed.s);
    if comps.len() < 2 {
        return None;
    }
    let n = seed.k + seed.l;
    let mut in_first = vec![false; n];
    for &r in &comps[0].rows {
        in_first[r] = true;
    }
    for &c in &comps[0].cols {
        in_first[seed.k + c] = true;
    }
    let (first, second): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| in_first[i]);
    Some(Splitting {
        first: first.into_iter().map(|i| unit(n, i)).collect(),
        second: second.into_iter().map(|i| unit(n, i)).collect(),
    })
}

fn first_repeat(xs: &[GaussRat]) -> Option<(usize, usize)> {
    (0..xs.len()).find_map(|i| ((i + 1)..xs.len()).find(|&m| xs[i] == xs[m]).map(|m| (i, m)))
}

/// `l = 1`, `a_i = a_m`, all of `S` nonzero: `C v_i` splits off, with
/// complement spanned by the other `v_j`, `w` and `s w`.
fn repeated_a_witness(seed: &Seed, i: usize, m: usize) -> Splitting {
    let (k, n) = (seed.k, seed.k + 1);
    let mut second: Vec<Vector> = (0..k).filter(|&j| j != i && j != m).map(|j| unit(n, j)).collect();
    second.push(unit(n, k));
    let mut u = vec![GaussRat::zero(); n];
    u[i] = seed.s[(i, 0)].clone();
    u[m] = seed.s[(m, 0)].clone();
    second.push(u);
    Splitting {
        first: vec![unit(n, i)],
        second,
    }
}

/// `k = 1`, `b_m = b_p`, all of `S` nonzero: the line through
/// `s_1p w_m - s_1m w_p` splits off, with complement spanned by `v` and the
/// `w_j`, `j != p`.
fn repeated_b_witness(seed: &Seed, m: usize, p: usize) -> Splitting {
    let n = 1 + seed.l;
    let mut line = vec![GaussRat::zero(); n];
    line[1 + m] = seed.s[(0, p)].clone();
    line[1 + p] = -&seed.s[(0, m)];
    Splitting {
        first: vec![line],
        second: (0..n).filter(|&j| j != 1 + p).map(|j| unit(n, j)).collect(),
    }
}

/// Indecomposability of `V_{k,l}(S; (a, b))`.
///
/// - regular `(a, b)`: indecomposable iff `S` is rhizomatic;
/// - `k = 1` or `l = 1`: indecomposable iff `(a, b)` is regular and every
///   entry of `S` is nonzero;
/// - otherwise undecided, except that a disconnected pattern always splits
///   and a one-dimensional commutant is always local.
///
/// Every `Decomposable` verdict carries explicit complementary invariant
/// subspaces.
pub fn indecomposable(seed: &Seed) -> Result<Verdict> {
    seed.check_shape()?;
    let (k, l) = (seed.k, seed.l);
    let regular = is_regular(&seed.ab, k, l);
    let report = analyze(&seed.s);

    if regular {
        return Ok(match component_witness(seed) {
            None if report.is_rhizomatic => Verdict::indecomposable("regular eigenvalues and rhizomatic S"),
            None => unreachable!("connected pattern without isolated vertices is rhizomatic"),
            Some(w) => Verdict::decomposable(
                format!(
                    "regular eigenvalues but S is not rhizomatic ({} classes, {} zero rows, {} zero columns)",
                    report.n_classes, report.zero_rows, report.zero_cols
                ),
                w,
            ),
        });
    }

    if let Some(w) = component_witness(seed) {
        return Ok(Verdict::decomposable(
            "the pattern of S is disconnected, so the coordinate blocks split",
            w,
        ));
    }

    if l == 1 {
        let (i, m) = first_repeat(seed.a()).expect("non-regular with l = 1 repeats an a");
        return Ok(Verdict::decomposable(
            format!("l = 1 with a_{} = a_{}", i + 1, m + 1),
            repeated_a_witness(seed, i, m),
        ));
    }
    if k == 1 {
        let (m, p) = first_repeat(seed.b()).expect("non-regular with k = 1 repeats a b");
        return Ok(Verdict::decomposable(
            format!("k = 1 with b_{} = b_{}", m + 1, p + 1),
            repeated_b_witness(seed, m, p),
        ));
    }

    let endo = endo_report(&build_v(seed)?)?;
    let mut verdict = if endo.dimension == 1 {
        Verdict::indecomposable("endomorphism algebra is one-dimensional")
    } else {
        Verdict::unknown(format!(
            "non-regular eigenvalues with k, l >= 2 are outside the classified cases; commutant has dimension {}",
            endo.dimension
        ))
    };
    verdict.endo_dimension = Some(endo.dimension);
    Ok(verdict)
}

/// Regular eigenvalues together with a rhizomatic `S` force `e != 0`.
pub fn e_nonzero_guarantee(seed: &Seed) -> bool {
    seed.check_shape().is_ok() && is_regular(&seed.ab, seed.k, seed.l) && analyze(&seed.s).is_rhizomatic
}
