//! Rings attached to the coring: `A^op ≅ Hom_A(W, A)` under the convolution
//! product, and `Z(A) ≅` the bimodule endomorphisms of the coring.

use serde::Serialize;

use crate::bocs::GendoBocs;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{bimodule_hom_space, hom_space, Bimodule, Module};
use crate::rational::Rat;

fn mul(a: &Mat, b: &Mat) -> Mat {
    a.try_mul(b).expect("compatible shapes")
}

#[derive(Clone, Debug, Serialize)]
pub struct Zeta {
    /// Row `i`: coordinates of `w -> ε(b_i w)` in `Hom_A(W, A)`.
    pub matrix: Mat,
    pub bijective: bool,
    pub anti_multiplicative: bool,
    pub unital: bool,
}

/// `ζ: A -> Hom_A(W, A)`, `ζ(b)(w) = ε(b w)`, an anti-isomorphism onto the
/// convolution ring.
pub fn zeta(bocs: &GendoBocs) -> Result<Zeta> {
    let a = &bocs.algebra;
    let w = bocs.w();
    let (da, dw) = (a.dim(), w.dim());
    let eps = &bocs.coring.eps;
    let space = hom_space(&w.right_module(), &Module::regular(a))?;
    let maps: Vec<Mat> = (0..da).map(|i| mul(w.lact(i), eps)).collect();
    let rows = maps
        .iter()
        .map(|f| space.coords(f).ok_or_else(|| Error::Internal("ζ(b) is not A-linear".into())))
        .collect::<Result<Vec<_>>>()?;
    let matrix = Mat::from_rows(&rows, space.dim());
    let bijective = da == space.dim() && matrix.is_invertible();

    // row (i, w) of lmap is b_i w
    let lmap = Mat::from_fn(da * dw, dw, |r, c| w.lact(r / dw)[(r % dw, c)].clone());
    let conv = |f: &Mat, g: &Mat| mul(&mul(&mul(bocs.mu_section(), &f.kron(&Mat::identity(dw))), &lmap), g);

    let zeta_of = |x: &[Rat]| mul(&w.left_act(x), eps);
    let mut anti_multiplicative = true;
    for i in 0..da {
        for j in 0..da {
            let prod = a.mul(&a.basis_element(i), &a.basis_element(j));
            if zeta_of(&prod) != conv(&maps[j], &maps[i]) {
                anti_multiplicative = false;
            }
        }
    }
    let unital = zeta_of(a.unit()) == *eps;
    Ok(Zeta { matrix, bijective, anti_multiplicative, unital })
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterIso {
    pub dim: usize,
    /// Row `k`: coordinates in the basis of `Z(A)` of the image of the `k`-th
    /// bimodule map `W -> A`.
    pub matrix: Mat,
    pub bijective: bool,
    pub unital: bool,
    pub multiplicative: bool,
}

/// `Hom_{A-A}(W, A)` with convolution, mapped to `Z(A)` through
/// `f -> f(e ⊗ e) ∈ Z(eAe)` and `Z(A) ≅ Z(eAe)`.
pub fn coring_end_center(bocs: &GendoBocs) -> Result<CenterIso> {
    let a = &bocs.algebra;
    let da = a.dim();
    let space = bimodule_hom_space(bocs.w(), &Bimodule::regular(a))?;
    let center = a.center();
    let e = &bocs.idempotent.element;
    // e z e for a basis of Z(A)
    let compressed: Vec<Vec<Rat>> = center.basis().iter().map(|z| a.mul(&a.mul(e, z), e)).collect();
    let cmat = Mat::from_rows(&compressed, da);
    let ete = mul(&Mat::from_rows(std::slice::from_ref(&bocs.e_tensor_e), bocs.w0.dim()), &bocs.theta);

    let psi = |f: &Mat| -> Result<Vec<Rat>> {
        let target = mul(&ete, f);
        let sol = cmat
            .solve_left(&target)?
            .ok_or_else(|| Error::Internal("f(e ⊗ e) is not the compression of a central element".into()))?;
        Ok(sol.row(0).to_vec())
    };

    let basis = space.basis();
    let rows = basis.iter().map(&psi).collect::<Result<Vec<_>>>()?;
    let matrix = Mat::from_rows(&rows, center.dim());
    let bijective = space.dim() == center.dim() && matrix.is_invertible();

    let unit_coords = center
        .coords(a.unit())
        .ok_or_else(|| Error::Internal("unit outside the center".into()))?;
    let unital = psi(&bocs.coring.eps)? == unit_coords;

    // row (i, j) of mult is b_i b_j
    let mult = Mat::from_fn(da * da, da, |r, c| a.basis_product(r / da, r % da).iter().find(|(k, _)| *k == c).map(|(_, v)| v.clone()).unwrap_or_else(Rat::zero));
    let conv = |f: &Mat, g: &Mat| mul(&mul(bocs.mu_section(), &f.kron(g)), &mult);
    let mut multiplicative = true;
    for (k, f) in basis.iter().enumerate() {
        for (l, g) in basis.iter().enumerate() {
            let zf = center.combine(&rows[k]);
            let zg = center.combine(&rows[l]);
            let expected = center.coords(&a.mul(&zf, &zg)).expect("center is closed");
            if psi(&conv(f, g))? != expected {
                multiplicative = false;
            }
        }
    }
    Ok(CenterIso { dim: space.dim(), matrix, bijective, unital, multiplicative })
}
