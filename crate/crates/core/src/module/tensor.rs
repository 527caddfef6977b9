//! Tensor products over an algebra as explicit quotients of Kronecker spaces.

use super::{Bimodule, HomSpace};
use crate::error::{Error, Result};
use crate::linalg::{normalize_sparse, Echelon, Mat, SparseRow, Subspace};
use crate::rational::Rat;

/// `X ⊗_C Y` for an `(B, C)`-bimodule `X` and a `(C, D)`-bimodule `Y`.
///
/// The Kronecker index of `x_a ⊗ y_b` is `a * dim Y + b`. The quotient basis is
/// the set of non-pivot columns of the reduced relation space.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    x: Bimodule,
    y: Bimodule,
    relations: Subspace,
    complement: Vec<usize>,
    proj: Mat,
    result: Bimodule,
}

impl TensorSpace {
    pub fn new(x: &Bimodule, y: &Bimodule) -> Result<TensorSpace> {
        if x.right_algebra() != y.left_algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let (dx, dy) = (x.dim(), y.dim());
        let mut ech = Echelon::new(dx * dy);
        for (rx, ly) in x.right_generator_actions().iter().zip(y.left_generator_actions()) {
            for p in 0..dx {
                let xr = rx.sparse_row(p);
                for q in 0..dy {
                    let mut row: Vec<(usize, Rat)> = xr.iter().map(|(a, v)| (a * dy + q, v.clone())).collect();
                    for (b, v) in ly.sparse_row(q) {
                        row.push((p * dy + b, -v));
                    }
                    let row = normalize_sparse(row);
                    if !row.is_empty() {
                        ech.insert(row);
                    }
                }
            }
        }
        let relations = ech.to_subspace();
        let complement = relations.complement();
        let proj = relations.quotient_projection();
        let lact = x
            .lacts()
            .iter()
            .map(|l| induced(&complement, &proj, dy, |a, b| {
                l.sparse_row(a).into_iter().map(|(c, v)| (c * dy + b, v)).collect()
            }))
            .collect();
        let ract = y
            .racts()
            .iter()
            .map(|r| induced(&complement, &proj, dy, |a, b| {
                r.sparse_row(b).into_iter().map(|(c, v)| (a * dy + c, v)).collect()
            }))
            .collect();
        let result = Bimodule::new(x.left_algebra(), y.right_algebra(), lact, ract)?;
        Ok(TensorSpace { x: x.clone(), y: y.clone(), relations, complement, proj, result })
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn left(&self) -> &Bimodule {
        &self.x
    }

    pub fn right(&self) -> &Bimodule {
        &self.y
    }

    /// The tensor product with its induced outer actions.
    pub fn bimodule(&self) -> &Bimodule {
        &self.result
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Kronecker indices of the quotient basis.
    pub fn basis_indices(&self) -> &[usize] {
        &self.complement
    }

    /// `(dim X * dim Y) x dim` projection.
    pub fn projection(&self) -> &Mat {
        &self.proj
    }

    /// `dim x (dim X * dim Y)` section by unit vectors.
    pub fn section(&self) -> Mat {
        self.relations.quotient_section()
    }

    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        self.proj.apply(v)
    }

    pub fn project_sparse(&self, v: &[(usize, Rat)]) -> Vec<Rat> {
        project_sparse(&self.proj, v)
    }

    /// Coordinates of `u ⊗ v`.
    pub fn pure_tensor(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let dy = self.y.dim();
        let mut sparse = Vec::new();
        for (a, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in v.iter().enumerate() {
                if !y.is_zero() {
                    sparse.push((a * dy + b, x * y));
                }
            }
        }
        self.project_sparse(&sparse)
    }
}

fn project_sparse(proj: &Mat, v: &[(usize, Rat)]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); proj.cols()];
    for (k, c) in v {
        for (o, p) in out.iter_mut().zip(proj.row(*k)) {
            if !p.is_zero() {
                *o += c * p;
            }
        }
    }
    out
}

/// Matrix on the quotient of a map given on Kronecker basis vectors.
fn induced(complement: &[usize], proj: &Mat, dy: usize, image: impl Fn(usize, usize) -> SparseRow) -> Mat {
    let rows: Vec<Vec<Rat>> = complement.iter().map(|&c| project_sparse(proj, &image(c / dy, c % dy))).collect();
    Mat::from_rows(&rows, complement.len())
}

/// `f ⊗ g` between tensor spaces, with the balancing condition verified.
pub fn tensor_of_homs(src: &TensorSpace, f: &Mat, g: &Mat, tgt: &TensorSpace) -> Result<Mat> {
    let (dx, dy) = (src.x.dim(), src.y.dim());
    let (tx, ty) = (tgt.x.dim(), tgt.y.dim());
    if f.shape() != (dx, tx) || g.shape() != (dy, ty) {
        return Err(Error::ShapeMismatch("tensor of maps with incompatible shapes".into()));
    }
    let frows: Vec<SparseRow> = (0..dx).map(|a| f.sparse_row(a)).collect();
    let grows: Vec<SparseRow> = (0..dy).map(|b| g.sparse_row(b)).collect();
    let image_of = |idx: usize, coeff: &Rat, acc: &mut Vec<(usize, Rat)>| {
        let (a, b) = (idx / dy, idx % dy);
        for (a2, fv) in &frows[a] {
            let cf = coeff * fv;
            for (b2, gv) in &grows[b] {
                acc.push((a2 * ty + b2, &cf * gv));
            }
        }
    };
    for r in src.relations.basis() {
        let mut acc = Vec::new();
        for (idx, c) in r.iter().enumerate() {
            if !c.is_zero() {
                image_of(idx, c, &mut acc);
            }
        }
        if tgt.project_sparse(&normalize_sparse(acc)).iter().any(|v| !v.is_zero()) {
            return Err(Error::NotHomomorphism("tensor of maps is not balanced".into()));
        }
    }
    let rows: Vec<Vec<Rat>> = src
        .complement
        .iter()
        .map(|&c| {
            let mut acc = Vec::new();
            image_of(c, &Rat::one(), &mut acc);
            tgt.project_sparse(&normalize_sparse(acc))
        })
        .collect();
    Ok(Mat::from_rows(&rows, tgt.dim()))
}

/// The canonical map `Hom_A(Y, D(Z)) -> D(Y ⊗_A Z)`, `f -> (y ⊗ z -> f(y)(z))`,
/// in the basis of the hom space and the dual basis of the tensor space.
///
/// Verified invertible and linear for both outer actions.
pub fn hom_tensor_duality_iso(y: &Bimodule, z: &Bimodule) -> Result<(HomSpace, TensorSpace, Mat)> {
    let dz = z.dual();
    let hom = super::hom_space(&y.right_module(), &dz.right_module())?;
    let t = TensorSpace::new(y, z)?;
    let rows: Vec<Vec<Rat>> = hom
        .basis()
        .iter()
        .map(|f| t.complement.iter().map(|&c| f.data()[c].clone()).collect())
        .collect();
    let map = Mat::from_rows(&rows, t.dim());
    if !map.is_invertible() {
        return Err(Error::Internal("duality map is not invertible".into()));
    }
    // outer actions: on Hom_A(Y, D(Z)) the left algebra of Z acts through D(Z)
    // on the left and the left algebra of Y through Y on the right.
    let dt = t.bimodule().dual();
    let hom_left = |i: usize| -> Result<Mat> {
        let a = dz.lact(i);
        action_on_hom(&hom, |f| f.try_mul(a).expect("shape"))
    };
    let hom_right = |j: usize| -> Result<Mat> {
        let l = y.lact(j);
        action_on_hom(&hom, |f| l.try_mul(f).expect("shape"))
    };
    for i in 0..dz.left_algebra().dim() {
        if hom_left(i)?.try_mul(&map)? != map.try_mul(dt.lact(i))? {
            return Err(Error::Internal("duality map is not left linear".into()));
        }
    }
    for j in 0..y.left_algebra().dim() {
        if hom_right(j)?.try_mul(&map)? != map.try_mul(dt.ract(j))? {
            return Err(Error::Internal("duality map is not right linear".into()));
        }
    }
    Ok((hom, t, map))
}

fn action_on_hom(hom: &HomSpace, op: impl Fn(&Mat) -> Mat) -> Result<Mat> {
    let rows = hom
        .basis()
        .iter()
        .map(|f| hom.coords(&op(f)).ok_or(Error::NotSubmodule))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(&rows, hom.dim()))
}
