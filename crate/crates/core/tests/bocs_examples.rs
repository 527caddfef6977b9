mod common;

use bocs_core::bocs::BocsIso;
use bocs_core::corpus;
use bocs_core::error::Error;
use bocs_core::module::{
    bimodule_hom_space, find_invertible, hom_space, iso_modules, Bimodule, IsoSearch, Module, ModuleHom,
};
use common::*;

#[test]
fn zero_module_has_zero_identity() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let z = Module::zero(&a);
    assert!(b.is_zero_object(&z));
    assert_eq!(b.identity(&z).unwrap().matrix.shape(), (0, 0));
}

#[test]
fn hom_spaces_are_homs_into_nakayama_inverse() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let cat = catalog(&a);
    for (_, m) in &cat {
        for (_, n) in &cat {
            let nu = b.hw(n).unwrap().module;
            assert_eq!(b.hom_space(m, n).unwrap().dim(), hom_space(m, &nu).unwrap().dim());
        }
    }
    let reg = Module::regular(&a);
    assert_eq!(b.hom_space(&reg, &reg).unwrap().dim(), a.dim());
}

#[test]
fn phi_kills_maps_through_s0() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let cat = catalog(&a);
    let s0 = named(&cat, "S0");
    for (_, m) in &cat {
        for (src, tgt) in [(m, s0), (s0, m)] {
            for f in hom_space(src, tgt).unwrap().basis() {
                let f = ModuleHom::new(src, tgt, f).unwrap();
                assert!(b.phi(&f).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn canonical_iso_realizes_s1_as_e0b() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let cat = catalog(&a);
    let c = b.canonical_iso(named(&cat, "S1")).unwrap();
    let found = iso_modules(&c.nu_inverse, &Module::projective(&a, 0), 2).unwrap();
    assert!(matches!(found, IsoSearch::Found { .. }));
    assert_eq!(b.compose(&c.f, &c.g).unwrap(), b.identity(&c.nu_inverse).unwrap());

    let s0 = b.canonical_iso(named(&cat, "S0")).unwrap();
    assert_eq!(s0.nu_inverse.dim(), 0);
    assert!(s0.f.is_zero() && s0.g.is_zero());
}

#[test]
fn bocs_isomorphism_examples() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let cat = catalog(&a);
    assert!(b.is_isomorphic(named(&cat, "S1"), named(&cat, "D(Ae0)"), 4).unwrap().is_isomorphic());
    assert!(matches!(
        b.is_isomorphic(named(&cat, "P0"), named(&cat, "P1"), 4).unwrap(),
        BocsIso::NotIsomorphic { .. }
    ));
    match b.is_isomorphic(named(&cat, "P1"), named(&cat, "P1"), 4).unwrap() {
        BocsIso::Isomorphic { forward, backward } => {
            let id = b.identity(named(&cat, "P1")).unwrap();
            assert_eq!(forward, id);
            assert_eq!(backward, id);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn corner_algebra_has_as_many_indecomposables_as_bocs_classes() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let corner = b.corner.algebra.clone();
    assert_eq!(corner.dim(), 2);
    assert!(corner.is_commutative());
    assert_eq!(corner.radical().dim(), 1);
    let modules: Vec<Module> = catalog(&a).into_iter().map(|(_, m)| m).collect();
    let classes = b.partition(&modules, 1).unwrap().classes.len();
    assert_eq!(corpus::module_catalog(&corner).unwrap().len(), classes);
}

#[test]
fn tensor_coring_lives_on_the_dual_of_the_tensor_algebra() {
    let (b5, a2) = (corpus::b5(), corpus::truncated_poly(2));
    let t = bocs_of(&b5).coring.tensor(&bocs_of(&a2).coring).unwrap();
    assert!(t.verify().passed());
    assert_eq!(t.w.dim(), 10);
    let d = Bimodule::dual_regular(&t.algebra);
    let iso = find_invertible(&bimodule_hom_space(&t.w, &d).unwrap(), 3);
    assert!(matches!(iso, IsoSearch::Found { .. }));
}

#[test]
fn endomorphism_ring_of_projective_generator() {
    let a = corpus::b5();
    let b = bocs_of(&a);
    let p = Module::direct_sum(&a, &[Module::projective(&a, 0), Module::projective(&a, 1)]).unwrap();
    let e = b.endomorphism_ring_iso(&p, 8).unwrap();
    assert!(e.bijective && e.multiplicative);
    let cat = catalog(&a);
    assert_eq!(b.endomorphism_ring_iso(named(&cat, "S1"), 8).unwrap_err(), Error::DominantDimensionTooSmall);
}

#[test]
fn comultiplications_differ_by_central_units() {
    use bocs_core::bocs::Coring;
    use bocs_core::rational::Rat;
    use rand::Rng;

    for a in [corpus::b5(), corpus::truncated_poly(3)] {
        let b = bocs_of(&a);
        let d = Bimodule::dual_regular(&a);
        let (c0, w0) = Coring::from_idempotent(&a, &b.idempotent.element).unwrap();
        let space = bimodule_hom_space(w0.bimodule(), &d).unwrap();
        let mut r = rng(77);
        let theta2 = loop {
            let coeffs: Vec<Rat> = (0..space.dim()).map(|_| Rat::from_int(r.gen_range(-5..=5))).collect();
            let t = space.combine(&coeffs);
            if t.is_invertible() && t != b.theta {
                break t;
            }
        };
        let other = c0.transport(&d, &theta2).unwrap();
        assert!(other.verify().passed());

        // u = θ⁻¹ θ' is a bimodule automorphism of D(A), given by a central unit
        let u = b.theta.inverse().unwrap().unwrap().try_mul(&theta2).unwrap();
        let center = a.center();
        let lacts: Vec<Vec<Rat>> = center.basis().iter().map(|z| d.left_act(z).into_data()).collect();
        let n = d.dim();
        let sol = bocs_core::linalg::Mat::from_rows(&lacts, n * n)
            .solve_left(&bocs_core::linalg::Mat::from_rows(&[u.clone().into_data()], n * n))
            .unwrap()
            .expect("automorphism is multiplication by a central element");
        let z = center.combine(sol.row(0));
        assert!(a.left_mult(&z).is_invertible());
        let moved = b.coring.transport(&d, &u).unwrap();
        assert_eq!(moved.mu, other.mu);
        assert_eq!(moved.eps, other.eps);
    }
}
