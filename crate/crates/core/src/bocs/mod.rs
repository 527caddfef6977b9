//! Corings on `(A, D(A))` and the module category of the resulting bocs.
//!
//! A morphism `M -> N` in the bocs category is an `A`-linear map
//! `M -> Hom_A(W, N)`, stored as a `dim M x dim Hom_A(W, N)` matrix against the
//! basis of [`HomModule`](crate::module::HomModule).

mod category;
mod coring;

pub use category::{BocsHom, BocsIso, CanonicalIso, EaeReport, EndIso, ImReport, Partition};
pub use coring::{Axiom, AxiomReport, Coring};

use serde::Serialize;

use crate::algebra::{Algebra, Corner};
use crate::error::{Error, Result};
use crate::gendo::{build_da_iso, classify, FaithfulIdempotent, GendoReport, Verdict};
use crate::linalg::Mat;
use crate::module::{Bimodule, TensorSpace};
use crate::rational::Rat;

/// A verified coring on `D(A)` for a gendo-symmetric `A`, with the data it
/// was transported from.
#[derive(Clone, Debug)]
pub struct GendoBocs {
    pub algebra: Algebra,
    pub coring: Coring,
    pub idempotent: FaithfulIdempotent,
    pub corner: Corner,
    /// `Ae ⊗_{eAe} eA`.
    pub w0: TensorSpace,
    /// Bimodule isomorphism `W0 -> D(A)`.
    pub theta: Mat,
    /// Coordinates of `e ⊗ e` in `W0`.
    pub e_tensor_e: Vec<Rat>,
    pub axioms: AxiomReport,
    /// `mu * S_WW`, cached for composition.
    mu_section: Mat,
}

/// Outcome of asking whether `(A, D(A))` carries a bocs structure.
#[derive(Clone, Debug)]
pub enum BocsVerdict {
    Exists { bocs: Box<GendoBocs>, report: GendoReport },
    Absent { report: GendoReport },
    Undecided { report: GendoReport },
}

impl BocsVerdict {
    pub fn report(&self) -> &GendoReport {
        match self {
            BocsVerdict::Exists { report, .. } | BocsVerdict::Absent { report } | BocsVerdict::Undecided { report } => {
                report
            }
        }
    }

    pub fn bocs(&self) -> Option<&GendoBocs> {
        match self {
            BocsVerdict::Exists { bocs, .. } => Some(bocs),
            _ => None,
        }
    }
}

/// Builds the coring on `D(A)` exactly when `A` is gendo-symmetric.
pub fn decide_bocs_existence(a: &Algebra, seed: u64, cap: usize) -> Result<BocsVerdict> {
    let report = classify(a, seed, cap)?;
    match report.is_gendo_symmetric {
        Verdict::No => Ok(BocsVerdict::Absent { report }),
        Verdict::Undecided => Ok(BocsVerdict::Undecided { report }),
        Verdict::Yes => {
            let idem = report
                .minimal_faithful
                .clone()
                .ok_or_else(|| Error::Internal("gendo-symmetric without a faithful idempotent".into()))?;
            let bocs = GendoBocs::new(a, idem, seed)?;
            Ok(BocsVerdict::Exists { bocs: Box::new(bocs), report })
        }
    }
}

impl GendoBocs {
    /// Transports the idempotent coring along an explicit `W0 ≅ D(A)`.
    pub fn new(a: &Algebra, idempotent: FaithfulIdempotent, seed: u64) -> Result<GendoBocs> {
        let e = &idempotent.element;
        let (c0, w0) = Coring::from_idempotent(a, e)?;
        let (_, theta) = build_da_iso(a, e, seed)?;
        let coring = c0.transport(&Bimodule::dual_regular(a), &theta)?;
        let axioms = coring.verify();
        if !axioms.passed() {
            return Err(Error::Internal(format!("transported coring fails {:?}", axioms.first_failure)));
        }
        let corner = a.corner(e)?;
        let (_, xs) = Bimodule::left_ideal(a, &corner);
        let (_, ys) = Bimodule::right_ideal(a, &corner);
        let e_tensor_e = w0.pure_tensor(&xs.coords(e).expect("e in Ae"), &ys.coords(e).expect("e in eA"));
        let mu_section = coring.mu.try_mul(&coring.ww.section())?;
        Ok(GendoBocs {
            algebra: a.clone(),
            coring,
            idempotent,
            corner,
            w0,
            theta,
            e_tensor_e,
            axioms,
            mu_section,
        })
    }

    pub fn w(&self) -> &Bimodule {
        &self.coring.w
    }

    pub(crate) fn mu_section(&self) -> &Mat {
        &self.mu_section
    }
}

/// Serializable certificate of a coring on `D(A)`.
#[derive(Clone, Debug, Serialize)]
pub struct CoringCertificate {
    pub idempotent: Vec<usize>,
    pub w_left: Vec<Mat>,
    pub w_right: Vec<Mat>,
    pub tensor_basis: Vec<usize>,
    pub mu: Mat,
    pub eps: Mat,
    pub theta: Mat,
    pub axioms: AxiomReport,
}

impl GendoBocs {
    pub fn certificate(&self) -> CoringCertificate {
        CoringCertificate {
            idempotent: self.idempotent.indices.clone(),
            w_left: self.w().lacts().to_vec(),
            w_right: self.w().racts().to_vec(),
            tensor_basis: self.coring.ww.basis_indices().to_vec(),
            mu: self.coring.mu.clone(),
            eps: self.coring.eps.clone(),
            theta: self.theta.clone(),
            axioms: self.axioms.clone(),
        }
    }
}
