mod common;

use bocs_core::bocs::{BocsHom, GendoBocs};
use bocs_core::corpus;
use bocs_core::linalg::Mat;
use bocs_core::module::{
    dominant_dimension, hom_space, iso_modules, minimal_injective_resolution, minimal_projective_resolution,
    nakayama_inverse, IsoSearch, Module, ModuleHom,
};
use bocs_core::rational::Rat;
use common::*;
use proptest::prelude::*;
use std::sync::OnceLock;

struct Fixture {
    bocs: GendoBocs,
    modules: Vec<Module>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        ["kupisch:[2,3]:cyclic", "kx:3", "auslander:kx:2"]
            .into_iter()
            .map(|n| {
                let a = corpus::parse(n).unwrap();
                Fixture { bocs: bocs_of(&a), modules: catalog(&a).into_iter().map(|(_, m)| m).collect() }
            })
            .collect()
    })
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn composition_is_associative_and_unital(fx in 0usize..3, idx in prop::array::uniform4(0usize..8), seed in any::<u64>()) {
        let f = &fixtures()[fx];
        let b = &f.bocs;
        let m: Vec<&Module> = idx.iter().map(|&i| &f.modules[i % f.modules.len()]).collect();
        let mut r = rng(seed);
        let x = random_bocs_hom(b, m[0], m[1], &mut r);
        let y = random_bocs_hom(b, m[1], m[2], &mut r);
        let z = random_bocs_hom(b, m[2], m[3], &mut r);
        let left = b.compose(&z, &b.compose(&y, &x).unwrap()).unwrap();
        let right = b.compose(&b.compose(&z, &y).unwrap(), &x).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(&b.compose(&b.identity(m[1]).unwrap(), &x).unwrap(), &x);
        prop_assert_eq!(&b.compose(&x, &b.identity(m[0]).unwrap()).unwrap(), &x);
    }

    #[test]
    fn phi_is_a_functor(fx in 0usize..3, idx in prop::array::uniform3(0usize..8), seed in any::<u64>()) {
        let f = &fixtures()[fx];
        let b = &f.bocs;
        let m: Vec<&Module> = idx.iter().map(|&i| &f.modules[i % f.modules.len()]).collect();
        let mut r = rng(seed);
        let g = ModuleHom::new(m[0], m[1], random_element(&hom_space(m[0], m[1]).unwrap(), &mut r)).unwrap();
        let h = ModuleHom::new(m[1], m[2], random_element(&hom_space(m[1], m[2]).unwrap(), &mut r)).unwrap();
        let lhs = b.phi(&g.then(&h).unwrap()).unwrap();
        let rhs = b.compose(&b.phi(&h).unwrap(), &b.phi(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bocs_homs_are_additive(fx in 0usize..3, i in 0usize..8, j in 0usize..8, seed in any::<u64>()) {
        let f = &fixtures()[fx];
        let b = &f.bocs;
        let (m, n) = (&f.modules[i % f.modules.len()], &f.modules[j % f.modules.len()]);
        let mut r = rng(seed);
        let x = random_bocs_hom(b, m, n, &mut r);
        let y = random_bocs_hom(b, m, n, &mut r);
        let sum = BocsHom { source: m.clone(), target: n.clone(), matrix: x.matrix.try_add(&y.matrix).unwrap() };
        let id = b.identity(n).unwrap();
        let lhs = b.compose(&id, &sum).unwrap().matrix;
        let rhs = b.compose(&id, &x).unwrap().matrix.try_add(&b.compose(&id, &y).unwrap().matrix).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn change_of_basis_is_detected(fx in 0usize..3, i in 0usize..8, seed in any::<u64>()) {
        let f = &fixtures()[fx];
        let m = &f.modules[i % f.modules.len()];
        let mut r = rng(seed);
        let n = m.dim();
        let mut p = Mat::identity(n);
        for a in 0..n {
            for c in a + 1..n {
                p[(a, c)] = Rat::from_int(rand::Rng::gen_range(&mut r, -4..=4));
            }
        }
        let pinv = p.inverse().unwrap().unwrap();
        let action = m.actions().iter().map(|x| pinv.try_mul(x).unwrap().try_mul(&p).unwrap()).collect();
        let conj = Module::checked(m.algebra(), action).unwrap();
        let s = iso_modules(m, &conj, seed).unwrap();
        let found = matches!(s, IsoSearch::Found { .. });
        prop_assert!(found);
    }
}

#[test]
fn resolutions_are_exact_on_the_corpus() {
    for name in corpus::NAMES {
        let a = corpus::parse(name).unwrap();
        for (mn, m) in catalog(&a) {
            let inj = minimal_injective_resolution(&m, 4);
            let proj = minimal_projective_resolution(&m, 4);
            assert!(inj.is_exact_injective(m.dim()), "{name} {mn} injective");
            assert!(proj.is_exact_projective(m.dim()), "{name} {mn} projective");
        }
    }
}

#[test]
fn nakayama_inverse_has_dominant_dimension_two() {
    for (name, a) in gendo_corpus() {
        for (mn, m) in catalog(&a) {
            let nu = nakayama_inverse(&m).unwrap().module;
            assert!(dominant_dimension(&nu, 8).is_at_least(2), "{name} {mn}");
        }
    }
}

// 0 -> M -> I0 -> I1 stays exact at M and I0 after applying Hom(D(A), -).
#[test]
fn nakayama_inverse_is_left_exact_on_injective_presentations() {
    for name in corpus::NAMES {
        let a = corpus::parse(name).unwrap();
        for (mn, m) in catalog(&a) {
            let res = minimal_injective_resolution(&m, 2);
            let nm = nakayama_inverse(&m).unwrap();
            let n0 = nakayama_inverse(&res.terms[0]).unwrap();
            let first = nm.push_forward(&n0, &res.augmentation).unwrap();
            let second = match (res.terms.get(1), res.maps.first()) {
                (Some(i1), Some(map)) => n0.push_forward(&nakayama_inverse(i1).unwrap(), map).unwrap(),
                _ => Mat::zeros(n0.dim(), 0),
            };
            assert_eq!(first.rank(), nm.dim(), "{name} {mn}: not injective");
            assert!(first.try_mul(&second).unwrap().is_zero(), "{name} {mn}: not a complex");
            assert_eq!(first.rank() + second.rank(), n0.dim(), "{name} {mn}: not exact at the middle");
        }
    }
}

#[test]
fn canonical_isomorphisms_exist_for_every_catalog_module() {
    for (name, a) in gendo_corpus() {
        let b = bocs_of(&a);
        for (mn, m) in catalog(&a) {
            let c = b.canonical_iso(&m).unwrap_or_else(|e| panic!("{name} {mn}: {e}"));
            assert_eq!(b.compose(&c.g, &c.f).unwrap(), b.identity(&m).unwrap(), "{name} {mn}");
        }
    }
}

#[test]
fn minimal_faithful_projective_injective_is_unique_on_the_corpus() {
    use bocs_core::gendo::{minimal_faithful_idempotent, projective_injective_classes};
    for name in corpus::NAMES {
        let a = corpus::parse(name).unwrap();
        let Some(mf) = minimal_faithful_idempotent(&a) else { continue };
        assert_eq!(mf.indices, projective_injective_classes(&a), "{name}");
        let ps: Vec<Module> = mf.indices.iter().map(|&s| Module::projective(&a, s)).collect();
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                let s = iso_modules(&ps[i], &ps[j], 1).unwrap();
                assert!(matches!(s, IsoSearch::NotIsomorphic { .. }), "{name}");
            }
            // dropping any summand loses faithfulness
            if ps.len() > 1 {
                let rest: Vec<Module> = ps.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, m)| m.clone()).collect();
                assert!(!Module::direct_sum(&a, &rest).unwrap().is_faithful(), "{name}");
            }
        }
    }
}
