//! Random seeds, eigenvalues and group elements for property checks.
//!
//! Scalars have numerators and denominators in `[-9, 9]`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classify::{is_regular, MonomialPair};
use crate::exact_linalg::{GaussRat, Mat};
use crate::rep_builder::Seed;
use crate::rhizome::analyze;

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> (i64, i64) {
    let num = rng.gen_range(-9..=9);
    let den = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    (num, den)
}

/// Real and imaginary parts each drawn independently; the imaginary part is
/// zero half of the time.
pub fn gauss_rat<R: Rng + ?Sized>(rng: &mut R) -> GaussRat {
    let (rn, rd) = small_rational(rng);
    let (im_n, im_d) = if rng.gen_bool(0.5) { (0, 1) } else { small_rational(rng) };
    GaussRat::from_fracs(rn, rd, im_n, im_d)
}

pub fn nonzero_gauss_rat<R: Rng + ?Sized>(rng: &mut R) -> GaussRat {
    loop {
        let x = gauss_rat(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(rows, cols, |_, _| gauss_rat(rng))
}

/// Random values on a random zero pattern with the given density of nonzeros.
pub fn sparse_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, density: f64) -> Mat {
    Mat::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(density) {
            nonzero_gauss_rat(rng)
        } else {
            GaussRat::zero()
        }
    })
}

pub fn rhizomatic<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Mat {
    loop {
        let density = rng.gen_range(0.3..=1.0);
        let m = sparse_matrix(rng, rows, cols, density);
        if analyze(&m).is_rhizomatic {
            return m;
        }
    }
}

pub fn distinct<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<GaussRat> {
    let mut out: Vec<GaussRat> = Vec::with_capacity(n);
    while out.len() < n {
        let x = gauss_rat(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn regular_ab<R: Rng + ?Sized>(rng: &mut R, k: usize, l: usize) -> Vec<GaussRat> {
    let mut ab = distinct(rng, k);
    ab.extend(distinct(rng, l));
    debug_assert!(is_regular(&ab, k, l));
    ab
}

/// Arbitrary seed: dense random `S` and unconstrained `(a, b)`.
pub fn seed<R: Rng + ?Sized>(rng: &mut R, k: usize, l: usize) -> Seed {
    let s = if rng.gen_bool(0.5) {
        matrix(rng, k, l)
    } else {
        let density = rng.gen_range(0.2..=0.9);
        sparse_matrix(rng, k, l, density)
    };
    let ab = (0..k + l).map(|_| gauss_rat(rng)).collect();
    Seed::new(k, l, s, ab).expect("shapes agree")
}

/// Regular eigenvalues with an arbitrary pattern.
pub fn regular_seed<R: Rng + ?Sized>(rng: &mut R, k: usize, l: usize) -> Seed {
    let density = rng.gen_range(0.15..=1.0);
    let s = sparse_matrix(rng, k, l, density);
    Seed::new(k, l, s, regular_ab(rng, k, l)).expect("shapes agree")
}

pub fn regular_rhizomatic_seed<R: Rng + ?Sized>(rng: &mut R, k: usize, l: usize) -> Seed {
    let s = rhizomatic(rng, k, l);
    Seed::new(k, l, s, regular_ab(rng, k, l)).expect("shapes agree")
}

pub fn permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn monomial_pair<R: Rng + ?Sized>(rng: &mut R, k: usize, l: usize) -> MonomialPair {
    MonomialPair {
        sigma: permutation(rng, k),
        xi: (0..k).map(|_| nonzero_gauss_rat(rng)).collect(),
        tau: permutation(rng, l),
        phi: (0..l).map(|_| nonzero_gauss_rat(rng)).collect(),
    }
}

/// Up to four terms `c · y1^p · y2^q` with `p + q <= max_degree`.
pub fn poly<R: Rng + ?Sized>(rng: &mut R, max_degree: u32) -> crate::algebra::Poly {
    let n_terms = rng.gen_range(1..=4);
    let mut f = crate::algebra::Poly::default();
    for _ in 0..n_terms {
        let p = rng.gen_range(0..=max_degree);
        let q = rng.gen_range(0..=max_degree - p);
        f = f.term(nonzero_gauss_rat(rng), p, q);
    }
    f
}
