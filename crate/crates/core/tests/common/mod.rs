#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sv2_core::{GaussRat, Mat, Seed};

pub type C = Complex<BigRational>;
pub type CMat = Vec<Vec<C>>;

pub fn to_c(x: &GaussRat) -> C {
    Complex::new(x.re().clone(), x.im().clone())
}

pub fn from_c(z: &C) -> GaussRat {
    GaussRat::new(z.re.clone(), z.im.clone())
}

pub fn c_int(n: i64) -> C {
    Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

pub fn to_cmat(m: &Mat) -> CMat {
    m.to_rows().iter().map(|r| r.iter().map(to_c).collect()).collect()
}

pub fn from_cmat(m: &CMat) -> Mat {
    Mat::from_rows(m.iter().map(|r| r.iter().map(from_c).collect()).collect()).unwrap()
}

pub fn c_zeros(n: usize, m: usize) -> CMat {
    vec![vec![C::zero(); m]; n]
}

pub fn c_id(n: usize) -> CMat {
    let mut out = c_zeros(n, n);
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = C::one();
    }
    out
}

pub fn c_mul(a: &CMat, b: &CMat) -> CMat {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    let mut out = c_zeros(n, p);
    for i in 0..n {
        for j in 0..p {
            let mut acc = C::zero();
            for t in 0..m {
                acc += a[i][t].clone() * b[t][j].clone();
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn c_lin(terms: &[(i64, &CMat)]) -> CMat {
    let n = terms[0].1.len();
    let m = terms[0].1[0].len();
    let mut out = c_zeros(n, m);
    for (c, a) in terms {
        for i in 0..n {
            for j in 0..m {
                out[i][j] = out[i][j].clone() + c_int(*c) * a[i][j].clone();
            }
        }
    }
    out
}

/// `(y1, y2, s, e)` built from the seed by hand in `Complex<BigRational>`.
pub fn oracle_build(seed: &Seed) -> [CMat; 4] {
    let (k, l) = (seed.k, seed.l);
    let n = k + l;
    let ab: Vec<C> = seed.ab.iter().map(to_c).collect();
    let mut y1 = c_zeros(n, n);
    let mut y2 = c_zeros(n, n);
    let mut s = c_zeros(n, n);
    for i in 0..n {
        let upper = i < k;
        y1[i][i] = ab[i].clone() - if upper { C::zero() } else { C::one() };
        y2[i][i] = ab[i].clone() - if upper { C::one() } else { C::zero() };
        s[i][i] = if upper { -C::one() } else { C::one() };
    }
    for i in 0..k {
        for j in 0..l {
            s[i][k + j] = to_c(&seed.s[(i, j)]);
        }
    }
    let id = c_id(n);
    let e = c_lin(&[(-1, &c_mul(&s, &y2)), (1, &c_mul(&y1, &s)), (1, &id)]);
    [y1, y2, s, e]
}

/// The nine defining relations, each as `lhs - rhs`.
pub fn oracle_relation_residues(y1: &CMat, y2: &CMat, s: &CMat, e: &CMat) -> Vec<(&'static str, CMat)> {
    let id = c_id(y1.len());
    let m = c_mul;
    vec![
        ("s^2=1", c_lin(&[(1, &m(s, s)), (-1, &id)])),
        ("y1y2=y2y1", c_lin(&[(1, &m(y1, y2)), (-1, &m(y2, y1))])),
        ("sy1=y2s-1-e", c_lin(&[(1, &m(s, y1)), (-1, &m(y2, s)), (1, &id), (1, e)])),
        ("sy2=y1s+1-e", c_lin(&[(1, &m(s, y2)), (-1, &m(y1, s)), (-1, &id), (1, e)])),
        ("e^2=0", m(e, e)),
        ("es=e", c_lin(&[(1, &m(e, s)), (-1, e)])),
        ("se=-e", c_lin(&[(1, &m(s, e)), (1, e)])),
        ("ey2=ey1+e", c_lin(&[(1, &m(e, y2)), (-1, &m(e, y1)), (-1, e)])),
        ("y1e=y2e+e", c_lin(&[(1, &m(y1, e)), (-1, &m(y2, e)), (-1, e)])),
    ]
}

pub fn c_is_zero(m: &CMat) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}

pub fn g(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

pub fn pattern_rows(rows: &[&str]) -> String {
    rows.join("\n")
}

pub const S1: [&str; 7] = [
    "...**.**..",
    "*........*",
    ".*.***....",
    "........*.",
    "..*......*",
    ".*..****..",
    "..*.....*.",
];

pub const S2: [&str; 7] = [
    ".....*...*",
    "...***....",
    "..........",
    "...*...**.",
    "*..*......",
    "..........",
    ".........*",
];

pub const S3: [&str; 7] = [
    "*.*...*.*.",
    "*........*",
    ".*...*.*..",
    "...**...*.",
    "..*.**...*",
    ".*........",
    "*.*...*.*.",
];

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Is there `(σ, ξ, τ, φ)` taking `first` to `second`? Tries every pair of
/// permutations and solves `s'_ij = ξ_i ψ_j s_σ(i)τ(j)` by propagating along
/// the nonzero pattern, then checks every nonzero entry.
pub fn brute_force_same_orbit(first: &Seed, second: &Seed) -> bool {
    let (k, l) = (first.k, first.l);
    if (k, l) != (second.k, second.l) {
        return false;
    }
    for sigma in permutations(k) {
        if (0..k).any(|i| second.ab[i] != first.ab[sigma[i]]) {
            continue;
        }
        for tau in permutations(l) {
            if (0..l).any(|j| second.ab[k + j] != first.ab[k + tau[j]]) {
                continue;
            }
            let moved = |i: usize, j: usize| first.s[(sigma[i], tau[j])].clone();
            if (0..k).any(|i| (0..l).any(|j| moved(i, j).is_zero() != second.s[(i, j)].is_zero())) {
                continue;
            }
            if scalings_exist(k, l, &moved, &second.s) {
                return true;
            }
        }
    }
    false
}

fn scalings_exist(k: usize, l: usize, moved: &dyn Fn(usize, usize) -> GaussRat, target: &Mat) -> bool {
    let mut xi: Vec<Option<GaussRat>> = vec![None; k];
    let mut psi: Vec<Option<GaussRat>> = vec![None; l];
    for start in 0..k {
        if xi[start].is_some() {
            continue;
        }
        xi[start] = Some(GaussRat::one());
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..k {
                for j in 0..l {
                    if target[(i, j)].is_zero() {
                        continue;
                    }
                    let ratio = &target[(i, j)] / &moved(i, j);
                    match (&xi[i], &psi[j]) {
                        (Some(x), None) => {
                            psi[j] = Some(&ratio / x);
                            changed = true;
                        }
                        (None, Some(p)) => {
                            xi[i] = Some(&ratio / p);
                            changed = true;
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    (0..k).all(|i| {
        (0..l).all(|j| {
            if target[(i, j)].is_zero() {
                return true;
            }
            match (&xi[i], &psi[j]) {
                (Some(x), Some(p)) => &(x * p) * &moved(i, j) == target[(i, j)],
                _ => false,
            }
        })
    })
}
