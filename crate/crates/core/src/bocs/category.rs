//! Hom spaces, composition and identities of the bocs module category, the
//! functor `phi`, the maps `I_M`, and the comparison with `mod-eAe`.

use serde::Serialize;

use super::GendoBocs;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{dominant_dimension, hom_space, iso_modules, HomModule, HomSpace, IsoSearch, Module, ModuleHom};
use crate::rational::Rat;

fn mul(a: &Mat, b: &Mat) -> Mat {
    a.try_mul(b).expect("compatible shapes")
}

/// An `A`-linear map `M -> Hom_A(W, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BocsHom {
    pub source: Module,
    pub target: Module,
    pub matrix: Mat,
}

impl BocsHom {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl Serialize for BocsHom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BocsHom", 3)?;
        st.serialize_field("source_dim", &self.source.dim())?;
        st.serialize_field("target_dim", &self.target.dim())?;
        st.serialize_field("matrix", &self.matrix)?;
        st.end()
    }
}

/// The pair `f: M -> ν⁻¹(M)`, `g: ν⁻¹(M) -> M` with `g*f = 1` and `f*g = 1`.
#[derive(Clone, Debug)]
pub struct CanonicalIso {
    pub nu_inverse: Module,
    pub f: BocsHom,
    pub g: BocsHom,
}

#[derive(Clone, Debug)]
pub enum BocsIso {
    Isomorphic { forward: BocsHom, backward: BocsHom },
    NotIsomorphic { reason: String },
    Undecided { attempts: usize },
}

impl BocsIso {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, BocsIso::Isomorphic { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ImReport {
    pub matrix: Mat,
    pub injective: bool,
    pub bijective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EaeReport {
    pub bocs_dims: Vec<Vec<usize>>,
    pub corner_dims: Vec<Vec<usize>>,
    pub agree: bool,
}

/// Catalog indices split into the zero class and the nonzero iso classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub zero: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EndIso {
    /// Rows: images of a basis of `End_A(M)` in `End_B(M)` coordinates.
    pub matrix: Mat,
    pub bijective: bool,
    pub multiplicative: bool,
}

impl GendoBocs {
    /// `Hom_A(W, N)` with its right `A`-action.
    pub fn hw(&self, n: &Module) -> Result<HomModule> {
        HomModule::new(self.w(), n)
    }

    /// `Hom_B(M, N) = Hom_A(M, Hom_A(W, N))`.
    pub fn hom_space(&self, m: &Module, n: &Module) -> Result<HomSpace> {
        hom_space(m, &self.hw(n)?.module)
    }

    pub fn hom(&self, m: &Module, n: &Module, matrix: Mat) -> Result<BocsHom> {
        let target = self.hw(n)?.module;
        ModuleHom::new(m, &target, matrix.clone())?;
        Ok(BocsHom { source: m.clone(), target: n.clone(), matrix })
    }

    /// Coordinates in `Hom_A(W, N)` of `w -> Φ(μ(w))`, where
    /// `Φ(w1 ⊗ w2) = h(w1)(w2)` for `h: W -> Hom_A(W, N)`.
    fn collapse(&self, hw: &HomModule, h: &Mat) -> Result<Vec<Rat>> {
        let dw = self.w().dim();
        let dn = hw.target.dim();
        let phi = mul(h, &hw.space.stacked()).reshape(dw * dw, dn);
        let map = mul(&self.mu_section, &phi);
        hw.coords(&map).ok_or_else(|| Error::Internal("collapsed map is not A-linear".into()))
    }

    /// `g * f` for `f: M1 -> M2`, `g: M2 -> M3`.
    pub fn compose(&self, g: &BocsHom, f: &BocsHom) -> Result<BocsHom> {
        if f.target != g.source {
            return Err(Error::ShapeMismatch("composing bocs maps with mismatched modules".into()));
        }
        let hw2 = self.hw(&f.target)?;
        let hw3 = self.hw(&g.target)?;
        let rows = (0..f.source.dim())
            .map(|m| {
                let fm = hw2.realize(f.matrix.row(m));
                self.collapse(&hw3, &mul(&fm, &g.matrix))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BocsHom { source: f.source.clone(), target: g.target.clone(), matrix: Mat::from_rows(&rows, hw3.dim()) })
    }

    /// `1_M = Hom(ε, M) ξ`: `m -> (w -> m ε(w))`. Equals `I_M` as a matrix.
    pub fn identity(&self, m: &Module) -> Result<BocsHom> {
        let hw = self.hw(m)?;
        let eps = &self.coring.eps;
        let acts: Vec<Mat> = (0..eps.rows()).map(|w| m.act(eps.row(w))).collect();
        let rows = (0..m.dim())
            .map(|i| {
                let map: Vec<Vec<Rat>> = acts.iter().map(|a| a.row(i).to_vec()).collect();
                hw.coords(&Mat::from_rows(&map, m.dim()))
                    .ok_or_else(|| Error::Internal("identity is not A-linear".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BocsHom { source: m.clone(), target: m.clone(), matrix: Mat::from_rows(&rows, hw.dim()) })
    }

    /// `I_M: M -> ν⁻¹(M)` with rank flags.
    pub fn map_im(&self, m: &Module) -> Result<ImReport> {
        let matrix = self.identity(m)?.matrix;
        let r = matrix.rank();
        Ok(ImReport { injective: r == m.dim(), bijective: r == m.dim() && r == matrix.cols(), matrix })
    }

    /// `φ(f) = I_N f`.
    pub fn phi(&self, f: &ModuleHom) -> Result<BocsHom> {
        let i_n = self.identity(&f.target)?;
        Ok(BocsHom { source: f.source.clone(), target: f.target.clone(), matrix: mul(&f.matrix, &i_n.matrix) })
    }

    /// `AeA` annihilates `M`.
    pub fn is_zero_object(&self, m: &Module) -> bool {
        let ideal = self.algebra.ideal_closure(std::slice::from_ref(&self.idempotent.element));
        m.is_annihilated_by(&ideal)
    }

    /// `Hom(μ, M) ψ: ν⁻²(M) -> ν⁻¹(M)` as a matrix between hom-module bases.
    pub fn lambda(&self, m: &Module) -> Result<Mat> {
        let hw = self.hw(m)?;
        let hw2 = self.hw(&hw.module)?;
        let rows = (0..hw2.dim())
            .map(|k| self.collapse(&hw, &hw2.space.basis_element(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_rows(&rows, hw.dim()))
    }

    /// `f = (Hom(μ, M) ψ)⁻¹ I_M` and `g = id`, verified mutually inverse.
    pub fn canonical_iso(&self, m: &Module) -> Result<CanonicalIso> {
        let x = self.hw(m)?.module;
        let lam = self.lambda(m)?;
        let inv = lam.inverse()?.ok_or_else(|| Error::Internal("Hom(μ, M) ψ is not invertible".into()))?;
        let im = self.identity(m)?;
        let f = BocsHom { source: m.clone(), target: x.clone(), matrix: mul(&im.matrix, &inv) };
        let g = BocsHom { source: x.clone(), target: m.clone(), matrix: Mat::identity(x.dim()) };
        if self.compose(&g, &f)? != im || self.compose(&f, &g)? != self.identity(&x)? {
            return Err(Error::Internal("canonical bocs isomorphism failed verification".into()));
        }
        Ok(CanonicalIso { nu_inverse: x, f, g })
    }

    /// Decides `M ≅ N` in the bocs category through `ν⁻¹(M) ≅ ν⁻¹(N)`.
    pub fn is_isomorphic(&self, m: &Module, n: &Module, seed: u64) -> Result<BocsIso> {
        if m == n {
            let id = self.identity(m)?;
            return Ok(BocsIso::Isomorphic { forward: id.clone(), backward: id });
        }
        let cm = self.canonical_iso(m)?;
        let cn = self.canonical_iso(n)?;
        let t = match iso_modules(&cm.nu_inverse, &cn.nu_inverse, seed)? {
            IsoSearch::Found { witness, .. } => witness,
            IsoSearch::NotIsomorphic { reason } => return Ok(BocsIso::NotIsomorphic { reason }),
            IsoSearch::Undecided { attempts } => return Ok(BocsIso::Undecided { attempts }),
        };
        let t_inv = t.inverse()?.ok_or(Error::NotInvertible)?;
        let tm = ModuleHom::new(&cm.nu_inverse, &cn.nu_inverse, t)?;
        let tn = ModuleHom::new(&cn.nu_inverse, &cm.nu_inverse, t_inv)?;
        let forward = self.compose(&cn.g, &self.compose(&self.phi(&tm)?, &cm.f)?)?;
        let backward = self.compose(&cm.g, &self.compose(&self.phi(&tn)?, &cn.f)?)?;
        if self.compose(&backward, &forward)? != self.identity(m)?
            || self.compose(&forward, &backward)? != self.identity(n)?
        {
            return Err(Error::Internal("bocs isomorphism witnesses are not mutually inverse".into()));
        }
        Ok(BocsIso::Isomorphic { forward, backward })
    }

    /// Zero objects and bocs-isomorphism classes of a module list.
    pub fn partition(&self, modules: &[Module], seed: u64) -> Result<Partition> {
        let mut zero = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'next: for (i, m) in modules.iter().enumerate() {
            if self.is_zero_object(m) {
                zero.push(i);
                continue;
            }
            for class in classes.iter_mut() {
                match self.is_isomorphic(&modules[class[0]], m, seed)? {
                    BocsIso::Isomorphic { .. } => {
                        class.push(i);
                        continue 'next;
                    }
                    BocsIso::NotIsomorphic { .. } => {}
                    BocsIso::Undecided { attempts } => {
                        return Err(Error::Undecided { what: "bocs isomorphism".into(), attempts })
                    }
                }
            }
            classes.push(vec![i]);
        }
        Ok(Partition { zero, classes })
    }

    /// `dim Hom_B(M, N)` against `dim Hom_{eAe}(ν⁻¹(M) e, ν⁻¹(N) e)` for all pairs.
    pub fn eae_check(&self, modules: &[Module]) -> Result<EaeReport> {
        let hws = modules.iter().map(|m| self.hw(m)).collect::<Result<Vec<_>>>()?;
        let restricted: Vec<Module> = hws.iter().map(|h| h.module.restrict_to_corner(&self.corner)).collect();
        let mut bocs_dims = Vec::new();
        let mut corner_dims = Vec::new();
        for m in modules {
            bocs_dims.push(hws.iter().map(|h| hom_space(m, &h.module).map(|s| s.dim())).collect::<Result<Vec<_>>>()?);
        }
        for x in &restricted {
            corner_dims.push(restricted.iter().map(|y| hom_space(x, y).map(|s| s.dim())).collect::<Result<Vec<_>>>()?);
        }
        let agree = bocs_dims == corner_dims;
        Ok(EaeReport { bocs_dims, corner_dims, agree })
    }

    /// `h -> I_M h` from `End_A(M)` to `End_B(M)`, for `domdim M ≥ 2`.
    pub fn endomorphism_ring_iso(&self, m: &Module, cap: usize) -> Result<EndIso> {
        if !dominant_dimension(m, cap).is_at_least(2) {
            return Err(Error::DominantDimensionTooSmall);
        }
        let end_a = hom_space(m, m)?;
        let end_b = self.hom_space(m, m)?;
        let im = self.identity(m)?.matrix;
        let images: Vec<BocsHom> = end_a
            .basis()
            .iter()
            .map(|h| BocsHom { source: m.clone(), target: m.clone(), matrix: mul(h, &im) })
            .collect();
        let rows = images
            .iter()
            .map(|b| end_b.coords(&b.matrix).ok_or_else(|| Error::Internal("I_M h is not a bocs map".into())))
            .collect::<Result<Vec<_>>>()?;
        let matrix = Mat::from_rows(&rows, end_b.dim());
        let bijective = end_a.dim() == end_b.dim() && matrix.is_invertible();
        let basis = end_a.basis();
        let mut multiplicative = true;
        for (k, hk) in basis.iter().enumerate() {
            for (l, hl) in basis.iter().enumerate() {
                // first h_k then h_l
                let lhs = mul(&mul(hk, hl), &im);
                if self.compose(&images[l], &images[k])?.matrix != lhs {
                    multiplicative = false;
                }
            }
        }
        Ok(EndIso { matrix, bijective, multiplicative })
    }
}
