//! Projective covers, injective hulls, minimal resolutions, Ext and dominant
//! dimension.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{hom_space, mat_mul, simple_representatives, Module};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert, Mat};

/// A dominant dimension, possibly only bounded below by the search cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomDim {
    Finite(usize),
    /// The first `cap` terms were projective-injective; nothing more is known.
    AtLeast(usize),
    Infinite,
}

impl DomDim {
    /// Whether the true value is certainly `>= k`.
    pub fn is_at_least(&self, k: usize) -> bool {
        match *self {
            DomDim::Finite(n) | DomDim::AtLeast(n) => n >= k,
            DomDim::Infinite => true,
        }
    }

    /// Whether two answers can describe the same true value.
    pub fn compatible(&self, other: &DomDim) -> bool {
        use DomDim::*;
        match (*self, *other) {
            (Finite(a), Finite(b)) => a == b,
            (Finite(a), AtLeast(c)) | (AtLeast(c), Finite(a)) => a >= c,
            (AtLeast(_), _) | (_, AtLeast(_)) => true,
            (Infinite, Infinite) => true,
            (Finite(_), Infinite) | (Infinite, Finite(_)) => false,
        }
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Finite(n) => write!(f, "{n}"),
            DomDim::AtLeast(n) => write!(f, ">={n}"),
            DomDim::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for DomDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A truncated minimal resolution.
///
/// Injective: `0 -> M -> I_0 -> I_1 -> ...` with `augmentation: M -> I_0` and
/// `maps[k]: I_k -> I_{k+1}`. Projective: `... -> P_1 -> P_0 -> M -> 0` with
/// `augmentation: P_0 -> M` and `maps[k]: P_{k+1} -> P_k`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Module>,
    pub maps: Vec<Mat>,
    pub augmentation: Mat,
    /// The resolution stopped because the next term is zero.
    pub complete: bool,
}

impl Resolution {
    /// Rank check of exactness for an injective resolution of a module of dimension `m`.
    pub fn is_exact_injective(&self, m: usize) -> bool {
        let mut prev_rank = self.augmentation.rank();
        if prev_rank != m {
            return false;
        }
        let mut prev = &self.augmentation;
        for (k, d) in self.maps.iter().enumerate() {
            if !mat_mul(prev, d).is_zero() {
                return false;
            }
            let r = d.rank();
            if prev_rank + r != self.terms[k].dim() {
                return false;
            }
            prev_rank = r;
            prev = d;
        }
        !self.complete || prev_rank == self.terms.last().map_or(0, Module::dim)
    }

    /// Rank check of exactness for a projective resolution of a module of dimension `m`.
    pub fn is_exact_projective(&self, m: usize) -> bool {
        let mut prev_rank = self.augmentation.rank();
        if prev_rank != m {
            return false;
        }
        let mut prev = &self.augmentation;
        for (k, d) in self.maps.iter().enumerate() {
            if !mat_mul(d, prev).is_zero() {
                return false;
            }
            let r = d.rank();
            if prev_rank + r != self.terms[k].dim() {
                return false;
            }
            prev_rank = r;
            prev = d;
        }
        // the kernel of the last map is zero exactly when the resolution stops
        !self.complete || prev_rank == self.terms.last().map_or(0, Module::dim)
    }
}

/// Projective cover `P -> M` with `P` a sum of the `f_s A`.
pub fn projective_cover(m: &Module) -> (Module, Mat) {
    let a = m.algebra();
    let rad = m.radical_submodule();
    let mut ech = Echelon::new(m.dim());
    for v in rad.basis() {
        ech.insert_dense(v);
    }
    let mut parts = Vec::new();
    let mut blocks = Vec::new();
    for s in simple_representatives(a) {
        let f = &a.idempotents()[s];
        let chosen: Vec<Vec<_>> = m
            .weight_space(f)
            .basis()
            .iter()
            .filter(|v| matches!(ech.insert_dense(v), Insert::Pivot(_)))
            .cloned()
            .collect();
        if chosen.is_empty() {
            continue;
        }
        let (p, space) = Module::right_ideal(a, f);
        for v in chosen {
            let rows: Vec<_> = space.basis().iter().map(|x| m.act(x).apply(&v)).collect();
            blocks.push(Mat::from_rows(&rows, m.dim()));
            parts.push(p.clone());
        }
    }
    let cover = Module::direct_sum(a, &parts).expect("same algebra");
    let map = Mat::vstack(&blocks.iter().collect::<Vec<_>>(), m.dim()).expect("same width");
    (cover, map)
}

/// Injective hull `M -> I`, dual to the projective cover of `D(M)`.
pub fn injective_hull(m: &Module) -> (Module, Mat) {
    let (p, pi) = projective_cover(&m.dual());
    (p.dual_over(m.algebra()), pi.transpose())
}

pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).0.dim() == m.dim()
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&m.dual())
}

/// First `cap` terms of the minimal injective resolution.
pub fn minimal_injective_resolution(m: &Module, cap: usize) -> Resolution {
    let (i0, iota) = injective_hull(m);
    let (mut c, mut p) = mat_coker(&i0, &iota);
    let mut terms = vec![i0];
    let mut maps = Vec::new();
    while terms.len() < cap && c.dim() > 0 {
        let (ik, j) = injective_hull(&c);
        maps.push(mat_mul(&p, &j));
        let next = mat_coker(&ik, &j);
        terms.push(ik);
        (c, p) = next;
    }
    Resolution { terms, maps, augmentation: iota, complete: c.dim() == 0 }
}

/// First `cap` terms of the minimal projective resolution.
pub fn minimal_projective_resolution(m: &Module, cap: usize) -> Resolution {
    let (p0, pi) = projective_cover(m);
    let (mut k, mut incl) = mat_ker(&p0, &pi);
    let mut terms = vec![p0];
    let mut maps = Vec::new();
    while terms.len() < cap && k.dim() > 0 {
        let (pk, q) = projective_cover(&k);
        maps.push(mat_mul(&q, &incl));
        let next = mat_ker(&pk, &q);
        terms.push(pk);
        (k, incl) = next;
    }
    Resolution { terms, maps, augmentation: pi, complete: k.dim() == 0 }
}

fn mat_coker(target: &Module, f: &Mat) -> (Module, Mat) {
    target.quotient(&f.row_space())
}

fn mat_ker(source: &Module, f: &Mat) -> (Module, Mat) {
    let space = crate::linalg::Subspace::span(source.dim(), f.kernel_basis());
    source.submodule(&space).expect("kernel is a submodule")
}

/// `dim Ext^i(X, M)` for `i = 0..=upto`, from a projective resolution of `X`.
pub fn ext_dims(res: &Resolution, m: &Module, upto: usize) -> Result<Vec<usize>> {
    let zero = Module::zero(m.algebra());
    let term = |k: usize| res.terms.get(k).unwrap_or(&zero);
    let homs = (0..=upto + 1).map(|k| hom_space(term(k), m)).collect::<Result<Vec<_>>>()?;
    // rank of d^k: Hom(P_k, M) -> Hom(P_{k+1}, M), F -> D_k F
    let rank = |k: usize| -> Result<usize> {
        let Some(d) = res.maps.get(k) else { return Ok(0) };
        let rows = homs[k]
            .basis()
            .iter()
            .map(|f| homs[k + 1].coords(&mat_mul(d, f)).ok_or_else(|| Error::Internal("d^k leaves Hom".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_rows(&rows, homs[k + 1].dim()).rank())
    };
    let mut out = Vec::with_capacity(upto + 1);
    let mut prev = 0;
    for i in 0..=upto {
        let r = rank(i)?;
        out.push(homs[i].dim() - r - prev);
        prev = r;
    }
    Ok(out)
}

/// `dim Ext^i(X, M)`.
pub fn ext_dim(x: &Module, m: &Module, i: usize) -> Result<usize> {
    if x.algebra() != m.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let res = minimal_projective_resolution(x, i + 2);
    Ok(ext_dims(&res, m, i)?[i])
}

/// Dominant dimension by counting projective-injective terms of the minimal
/// injective resolution, up to `cap` terms.
pub fn dominant_dimension(m: &Module, cap: usize) -> DomDim {
    let res = minimal_injective_resolution(m, cap);
    for (k, t) in res.terms.iter().enumerate() {
        if !is_projective(t) {
            return DomDim::Finite(k);
        }
    }
    if res.complete {
        DomDim::Infinite
    } else {
        DomDim::AtLeast(cap)
    }
}

/// Dominant dimension of `M` through `Ext^i(A/AeA, M)` for an idempotent `e`
/// with `eA` the minimal faithful projective-injective.
pub fn dominant_dimension_via_ext(m: &Module, e: &[crate::rational::Rat], cap: usize) -> Result<DomDim> {
    let a = m.algebra();
    let ideal = a.ideal_closure(&[e.to_vec()]);
    let (x, _) = Module::regular(a).quotient(&ideal);
    if x.dim() == 0 {
        return Ok(DomDim::Infinite);
    }
    let res = minimal_projective_resolution(&x, cap + 1);
    let exts = ext_dims(&res, m, cap.saturating_sub(1))?;
    if let Some(i) = exts.iter().position(|&d| d != 0) {
        return Ok(DomDim::Finite(i));
    }
    if res.complete && res.terms.len() <= cap {
        Ok(DomDim::Infinite)
    } else {
        Ok(DomDim::AtLeast(cap))
    }
}
