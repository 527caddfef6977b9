//! Isomorphism testing and direct-sum decomposition of modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, mat_mul, HomSpace, Module};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::poly::{charpoly, eval_matrix, Poly};
use crate::rational::Rat;

const RANDOM_ATTEMPTS: usize = 32;
const COEFF_RANGE: i64 = 8;
/// Largest exhaustive grid we are willing to walk.
const GRID_LIMIT: usize = 100_000;

/// Outcome of a search for an invertible element of a hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoSearch {
    Found { witness: Mat, attempts: usize },
    NotIsomorphic { reason: String },
    Undecided { attempts: usize },
}

impl IsoSearch {
    pub fn witness(&self) -> Option<&Mat> {
        match self {
            IsoSearch::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn into_result(self, what: &str) -> Result<Option<Mat>> {
        match self {
            IsoSearch::Found { witness, .. } => Ok(Some(witness)),
            IsoSearch::NotIsomorphic { .. } => Ok(None),
            IsoSearch::Undecided { attempts } => Err(Error::Undecided { what: what.into(), attempts }),
        }
    }
}

/// Looks for an invertible matrix in a space of square maps.
///
/// Tries basis elements, then seeded random combinations, then (for hom
/// spaces of dimension at most three) the full grid `{0..d}^h`. The
/// determinant has degree at most `d` in each coordinate, so a nonzero
/// determinant polynomial cannot vanish on the whole grid and the grid answer
/// is exact.
pub fn find_invertible(space: &HomSpace, seed: u64) -> IsoSearch {
    let (r, c) = space.shape();
    if r != c {
        return IsoSearch::NotIsomorphic { reason: format!("dimensions differ ({r} vs {c})") };
    }
    if r == 0 {
        return IsoSearch::Found { witness: Mat::zeros(0, 0), attempts: 0 };
    }
    let h = space.dim();
    if h == 0 {
        return IsoSearch::NotIsomorphic { reason: "the hom space is zero".into() };
    }
    let mut attempts = 0;
    for f in space.basis() {
        attempts += 1;
        if f.is_invertible() {
            return IsoSearch::Found { witness: f, attempts };
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        attempts += 1;
        let coeffs: Vec<Rat> = (0..h).map(|_| Rat::from(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE))).collect();
        let f = space.combine(&coeffs);
        if f.is_invertible() {
            return IsoSearch::Found { witness: f, attempts };
        }
    }
    let side = r + 1;
    let grid = (0..h).try_fold(1usize, |acc, _| acc.checked_mul(side).filter(|v| *v <= GRID_LIMIT));
    let Some(points) = grid else {
        return IsoSearch::Undecided { attempts };
    };
    for idx in 0..points {
        attempts += 1;
        let mut rest = idx;
        let coeffs: Vec<Rat> = (0..h)
            .map(|_| {
                let v = rest % side;
                rest /= side;
                Rat::from(v as i64)
            })
            .collect();
        let f = space.combine(&coeffs);
        if f.is_invertible() {
            return IsoSearch::Found { witness: f, attempts };
        }
    }
    IsoSearch::NotIsomorphic { reason: "no invertible map on the exhaustive grid".into() }
}

/// Decides `M ≅ N`, returning a verified witness when one is found.
pub fn iso_modules(m: &Module, n: &Module, seed: u64) -> Result<IsoSearch> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(IsoSearch::NotIsomorphic { reason: format!("dimensions differ ({} vs {})", m.dim(), n.dim()) });
    }
    if m == n {
        return Ok(IsoSearch::Found { witness: Mat::identity(m.dim()), attempts: 0 });
    }
    if m.top_multiplicities() != n.top_multiplicities() {
        return Ok(IsoSearch::NotIsomorphic { reason: "tops differ".into() });
    }
    if m.socle_multiplicities() != n.socle_multiplicities() {
        return Ok(IsoSearch::NotIsomorphic { reason: "socles differ".into() });
    }
    let mn = hom_space(m, n)?;
    let dims = [hom_space(m, m)?.dim(), hom_space(n, n)?.dim(), hom_space(n, m)?.dim()];
    if dims.iter().any(|&d| d != mn.dim()) {
        return Ok(IsoSearch::NotIsomorphic { reason: "hom dimensions differ".into() });
    }
    let out = find_invertible(&mn, seed);
    if let IsoSearch::Found { witness, .. } = &out {
        debug_assert!(mn.contains(witness));
    }
    Ok(out)
}

/// One summand `X` of `M` with `inclusion: X -> M` and `projection: M -> X`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Mat,
    pub projection: Mat,
    /// `End(X)` is local with residue field the rationals.
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub attempts: usize,
}

impl Decomposition {
    /// Some summand could not be certified indecomposable.
    pub fn possibly_indecomposable(&self) -> bool {
        self.summands.iter().any(|s| !s.certified)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.module.dim()).collect()
    }
}

/// Splits `M` into summands by Fitting decompositions of endomorphisms.
pub fn decompose_module(m: &Module, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    let mut done: Vec<(Mat, bool)> = Vec::new(); // (basis rows in M, certified)
    let mut todo = vec![Mat::identity(m.dim())];
    while let Some(basis) = todo.pop() {
        if basis.rows() == 0 {
            continue;
        }
        let space = Subspace::span(m.dim(), basis.to_rows());
        let (x, incl) = m.submodule(&space)?;
        match split(&x, &mut rng, &mut attempts)? {
            Split::Parts(u, v) => {
                // push in reverse so the kernel part is processed first
                todo.push(mat_mul(&v.basis_matrix(), &incl));
                todo.push(mat_mul(&u.basis_matrix(), &incl));
            }
            Split::Indecomposable => done.push((incl, true)),
            Split::Unknown => done.push((incl, false)),
        }
    }
    let incls: Vec<&Mat> = done.iter().map(|(b, _)| b).collect();
    let all = Mat::vstack(&incls, m.dim())?;
    let inv = all.inverse()?.ok_or_else(|| Error::Internal("summands do not span".into()))?;
    let mut summands = Vec::new();
    let mut offset = 0;
    for (incl, certified) in done {
        let k = incl.rows();
        let space = Subspace::span(m.dim(), incl.to_rows());
        let (module, _) = m.submodule(&space)?;
        // express the inclusion in the submodule's own basis
        let coords: Vec<Vec<Rat>> =
            incl.to_rows().iter().map(|r| space.coords(r).expect("basis row")).collect();
        let change = Mat::from_rows(&coords, k);
        let change_inv = change.inverse()?.expect("change of basis");
        let projection = mat_mul(&Mat::from_fn(m.dim(), k, |i, j| inv[(i, offset + j)].clone()), &change);
        summands.push(Summand {
            module,
            inclusion: mat_mul(&change_inv, &incl),
            projection,
            certified,
        });
        offset += k;
    }
    Ok(Decomposition { summands, attempts })
}

enum Split {
    Parts(Subspace, Subspace),
    Indecomposable,
    Unknown,
}

fn split(x: &Module, rng: &mut ChaCha8Rng, attempts: &mut usize) -> Result<Split> {
    let d = x.dim();
    let end = hom_space(x, x)?;
    let basis = end.basis();
    if trace_form_rank(&basis) == 1 {
        return Ok(Split::Indecomposable);
    }
    let h = basis.len();
    let mut candidates: Vec<Mat> = basis.clone();
    for i in 0..h {
        for j in i + 1..h {
            candidates.push(basis[i].try_add(&basis[j])?);
        }
    }
    for _ in 0..RANDOM_ATTEMPTS {
        let coeffs: Vec<Rat> = (0..h).map(|_| Rat::from(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE))).collect();
        candidates.push(end.combine(&coeffs));
    }
    for phi in candidates {
        *attempts += 1;
        for g in fitting_factors(&charpoly(&phi)) {
            let n = pow(&eval_matrix(&g, &phi), d);
            let ker = Subspace::span(d, n.kernel_basis());
            if ker.dim() > 0 && ker.dim() < d {
                return Ok(Split::Parts(ker, n.row_space()));
            }
        }
    }
    Ok(Split::Unknown)
}

/// Factors of a characteristic polynomial that may separate generalized
/// eigenspaces: linear factors for rational roots, plus the parts of a
/// square-free factorization.
fn fitting_factors(p: &Poly) -> Vec<Poly> {
    let mut out: Vec<Poly> = p.rational_roots().unwrap_or_default().iter().map(Poly::linear).collect();
    // Yun: p = prod a_i^i
    let mut b = p.monic();
    let mut c = b.gcd(&b.derivative());
    let mut w = b.divrem(&c).0;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push(z.monic());
        }
        w = y;
        b = c.clone();
        c = b.divrem(&w).0;
    }
    out
}

fn pow(m: &Mat, e: usize) -> Mat {
    let mut acc = Mat::identity(m.rows());
    for _ in 0..e {
        acc = mat_mul(&acc, m);
    }
    acc
}

/// Rank of `(F, G) -> tr(F G)` on a basis of an endomorphism algebra; it
/// equals the dimension of the algebra modulo its radical.
fn trace_form_rank(basis: &[Mat]) -> usize {
    let h = basis.len();
    Mat::from_fn(h, h, |i, j| mat_mul(&basis[i], &basis[j]).trace()).rank()
}
