//! Minimal faithful projective-injective idempotents and the Morita /
//! gendo-symmetric classification, decided two independent ways.

mod rings;

pub use rings::{coring_end_center, zeta, CenterIso, Zeta};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{
    bimodule_hom_space, dominant_dimension, find_invertible, is_injective, iso_modules, nakayama_inverse,
    simple_representatives, Bimodule, DomDim, IsoSearch, Module, TensorSpace,
};
use crate::rational::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl Verdict {
    fn from_search(s: &IsoSearch) -> Verdict {
        match s {
            IsoSearch::Found { .. } => Verdict::Yes,
            IsoSearch::NotIsomorphic { .. } => Verdict::No,
            IsoSearch::Undecided { .. } => Verdict::Undecided,
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

/// The idempotent `e` with `eA` minimal faithful projective-injective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulIdempotent {
    /// Declared idempotents summed into `e`.
    pub indices: Vec<usize>,
    pub element: Vec<Rat>,
}

/// Sum of one declared idempotent per projective-injective `e_i A`, if `eA`
/// is faithful.
pub fn minimal_faithful_idempotent(a: &Algebra) -> Option<FaithfulIdempotent> {
    let indices = projective_injective_classes(a);
    if indices.is_empty() {
        return None;
    }
    let mut e = vec![Rat::zero(); a.dim()];
    for &s in &indices {
        for (x, y) in e.iter_mut().zip(&a.idempotents()[s]) {
            *x += y;
        }
    }
    Module::right_ideal(a, &e).0.is_faithful().then_some(FaithfulIdempotent { indices, element: e })
}

/// Representative indices `s` with `e_s A` injective.
pub fn projective_injective_classes(a: &Algebra) -> Vec<usize> {
    simple_representatives(a).into_iter().filter(|&s| is_injective(&Module::projective(a, s))).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Witnesses {
    /// `D(Ae) -> eA` as right modules.
    pub morita: Option<Mat>,
    /// `D(Ae) -> eA` as `(eAe, A)`-bimodules.
    pub corner_bimodule: Option<Mat>,
    /// `D(A) ⊗_A D(A) -> D(A)` as bimodules.
    pub tensor_bimodule: Option<Mat>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GendoReport {
    pub seed: u64,
    pub projective_injective: Vec<usize>,
    pub minimal_faithful: Option<FaithfulIdempotent>,
    pub dominant_dimension: DomDim,
    pub is_morita: Verdict,
    pub is_gendo_symmetric: Verdict,
    /// domdim ≥ 2 and `D(Ae) ≅ eA` as bimodules.
    pub corner_route: Verdict,
    /// `D(A) ⊗_A D(A) ≅ D(A)` as bimodules.
    pub tensor_route: Verdict,
    /// `dim D(A) ⊗_A D(A)`.
    pub tensor_dim: usize,
    pub attempts: usize,
    pub evidence: Vec<String>,
    pub witnesses: Witnesses,
}

fn attempts_of(s: &IsoSearch) -> usize {
    match s {
        IsoSearch::Found { attempts, .. } | IsoSearch::Undecided { attempts } => *attempts,
        IsoSearch::NotIsomorphic { .. } => 0,
    }
}

/// Classifies `A`; the two gendo-symmetric routes must agree.
pub fn classify(a: &Algebra, seed: u64, cap: usize) -> Result<GendoReport> {
    let dd = dominant_dimension(&Module::regular(a), cap.max(2));
    let mf = minimal_faithful_idempotent(a);
    let mut evidence = Vec::new();
    let mut attempts = 0;
    let mut witnesses = Witnesses { morita: None, corner_bimodule: None, tensor_bimodule: None };

    let (is_morita, corner_route) = match &mf {
        _ if !dd.is_at_least(2) => {
            evidence.push(format!("dominant dimension {dd} is below two"));
            (Verdict::No, Verdict::No)
        }
        None => {
            evidence.push("no faithful projective-injective module".into());
            (Verdict::No, Verdict::No)
        }
        Some(f) => {
            let corner = a.corner(&f.element)?;
            let (ae, _) = Bimodule::left_ideal(a, &corner);
            let (ea, _) = Bimodule::right_ideal(a, &corner);
            let dae = ae.dual();
            let m = iso_modules(&dae.right_module(), &ea.right_module(), seed)?;
            attempts += attempts_of(&m);
            witnesses.morita = m.witness().cloned();
            let morita = Verdict::from_search(&m);
            let bim = if morita.is_yes() {
                let s = find_invertible(&bimodule_hom_space(&dae, &ea)?, seed);
                attempts += attempts_of(&s);
                witnesses.corner_bimodule = s.witness().cloned();
                if let IsoSearch::NotIsomorphic { reason } = &s {
                    evidence.push(format!("D(Ae) and eA are not isomorphic bimodules: {reason}"));
                }
                Verdict::from_search(&s)
            } else {
                if let IsoSearch::NotIsomorphic { reason } = &m {
                    evidence.push(format!("D(Ae) and eA are not isomorphic right modules: {reason}"));
                }
                morita
            };
            (morita, bim)
        }
    };

    let d = Bimodule::dual_regular(a);
    let t = TensorSpace::new(&d, &d)?;
    let tensor_dim = t.dim();
    let tensor_route = if tensor_dim != a.dim() {
        evidence.push(format!("dim D(A) ⊗_A D(A) = {tensor_dim} differs from dim A = {}", a.dim()));
        Verdict::No
    } else {
        let s = find_invertible(&bimodule_hom_space(t.bimodule(), &d)?, seed);
        attempts += attempts_of(&s);
        witnesses.tensor_bimodule = s.witness().cloned();
        if let IsoSearch::NotIsomorphic { reason } = &s {
            evidence.push(format!("D(A) ⊗_A D(A) and D(A) are not isomorphic bimodules: {reason}"));
        }
        Verdict::from_search(&s)
    };

    let is_gendo_symmetric = match (corner_route, tensor_route) {
        (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
        (x, y) if x == y => x,
        (x, y) => {
            return Err(Error::Internal(format!(
                "gendo-symmetric routes disagree: corner {x:?}, tensor {y:?}"
            )))
        }
    };
    Ok(GendoReport {
        seed,
        projective_injective: projective_injective_classes(a),
        minimal_faithful: mf,
        dominant_dimension: dd,
        is_morita,
        is_gendo_symmetric,
        corner_route,
        tensor_route,
        tensor_dim,
        attempts,
        evidence,
        witnesses,
    })
}

/// An explicit bimodule isomorphism `theta: Ae ⊗_{eAe} eA -> D(A)`.
pub fn build_da_iso(a: &Algebra, e: &[Rat], seed: u64) -> Result<(TensorSpace, Mat)> {
    let corner = a.corner(e)?;
    let (ae, _) = Bimodule::left_ideal(a, &corner);
    let (ea, _) = Bimodule::right_ideal(a, &corner);
    let w0 = TensorSpace::new(&ae, &ea)?;
    let d = Bimodule::dual_regular(a);
    if w0.dim() != d.dim() {
        return Err(Error::NotGendoSymmetric(format!(
            "dim Ae ⊗ eA = {} but dim D(A) = {}",
            w0.dim(),
            d.dim()
        )));
    }
    let space = bimodule_hom_space(w0.bimodule(), &d)?;
    match find_invertible(&space, seed) {
        IsoSearch::Found { witness, .. } => {
            if !w0.bimodule().is_hom_to(&d, &witness) || !witness.is_invertible() {
                return Err(Error::Internal("bimodule witness failed verification".into()));
            }
            Ok((w0, witness))
        }
        IsoSearch::NotIsomorphic { reason } => Err(Error::NotGendoSymmetric(reason)),
        IsoSearch::Undecided { attempts } => {
            Err(Error::Undecided { what: "Ae ⊗ eA ≅ D(A)".into(), attempts })
        }
    }
}

/// Both sides of the faithfulness criterion for `ν⁻¹(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulHomReport {
    pub hom_faithful: bool,
    /// Declared idempotents whose sum `e` has `eA`, `Ae` faithful and injective.
    pub idempotent: Option<Vec<usize>>,
    pub agree: bool,
}

/// Faithfulness of `Hom_A(D(A), A)` against a search for `e` with `eA` and
/// `Ae` faithful injective.
pub fn check_faithful_hom_criterion(a: &Algebra) -> Result<FaithfulHomReport> {
    let hom_faithful = nakayama_inverse(&Module::regular(a))?.module.is_faithful();
    let op = a.opposite();
    let r = a.idempotents().len();
    let mut idempotent = None;
    for mask in 1u64..(1 << r) {
        let idx: Vec<usize> = (0..r).filter(|s| mask >> s & 1 == 1).collect();
        let mut e = vec![Rat::zero(); a.dim()];
        for &s in &idx {
            for (x, y) in e.iter_mut().zip(&a.idempotents()[s]) {
                *x += y;
            }
        }
        let right = Module::right_ideal(a, &e).0;
        let left = Module::right_ideal(&op, &e).0;
        if right.is_faithful() && left.is_faithful() && is_injective(&right) && is_injective(&left) {
            idempotent = Some(idx);
            break;
        }
    }
    let agree = hom_faithful == idempotent.is_some();
    Ok(FaithfulHomReport { hom_faithful, idempotent, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn minimal_faithful_examples() {
        let a2 = corpus::truncated_poly(2);
        assert_eq!(minimal_faithful_idempotent(&a2).unwrap().element, a2.unit().to_vec());
        let b5 = corpus::b5();
        let mf = minimal_faithful_idempotent(&b5).unwrap();
        assert_eq!(mf.indices, vec![1]);
        assert_eq!(mf.element, b5.idempotents()[1]);
        let m2 = Algebra::full_matrix(2);
        let mf = minimal_faithful_idempotent(&m2).unwrap();
        assert!(Module::right_ideal(&m2, &mf.element).0.is_faithful());
    }

    #[test]
    fn classification_examples() {
        for (a, expected) in [
            (corpus::truncated_poly(2), Verdict::Yes),
            (corpus::b5(), Verdict::Yes),
            (corpus::t2(), Verdict::No),
        ] {
            let r = classify(&a, 1, 8).unwrap();
            assert_eq!(r.is_gendo_symmetric, expected, "{a:?}");
            assert_eq!(r.corner_route, r.tensor_route);
            if expected.is_yes() {
                assert!(r.is_morita.is_yes());
                assert!(r.dominant_dimension.is_at_least(2));
            }
        }
    }

    #[test]
    fn t2_evidence_is_the_dimension_count() {
        let r = classify(&corpus::t2(), 0, 8).unwrap();
        assert_ne!(r.tensor_dim, 3);
        assert!(r.evidence.iter().any(|e| e.contains("differs from dim A")));
    }

    #[test]
    fn da_iso_examples() {
        let b5 = corpus::b5();
        let (w0, theta) = build_da_iso(&b5, &b5.idempotents()[1], 3).unwrap();
        assert_eq!(theta.shape(), (5, 5));
        assert!(w0.bimodule().is_hom_to(&Bimodule::dual_regular(&b5), &theta));
        let a2 = corpus::truncated_poly(2);
        assert!(build_da_iso(&a2, a2.unit(), 0).is_ok());
        let t2 = corpus::t2();
        assert!(build_da_iso(&t2, &t2.idempotents()[0], 0).is_err());
    }

    #[test]
    fn faithful_hom_criterion_agrees() {
        for a in [corpus::truncated_poly(2), corpus::b5(), corpus::t2()] {
            assert!(check_faithful_hom_criterion(&a).unwrap().agree, "{a:?}");
        }
        let r = check_faithful_hom_criterion(&corpus::b5()).unwrap();
        assert!(r.hom_faithful);
    }
}
