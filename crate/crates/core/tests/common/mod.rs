#![allow(dead_code)]

use bocs_core::algebra::Algebra;
use bocs_core::bocs::{decide_bocs_existence, BocsHom, GendoBocs};
use bocs_core::corpus;
use bocs_core::linalg::Mat;
use bocs_core::module::{HomSpace, Module};
use bocs_core::rational::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn bocs_of(a: &Algebra) -> GendoBocs {
    decide_bocs_existence(a, 1, 8).unwrap().bocs().expect("gendo-symmetric").clone()
}

pub fn catalog(a: &Algebra) -> Vec<(String, Module)> {
    corpus::module_catalog(a).unwrap().entries().to_vec()
}

pub fn named<'a>(cat: &'a [(String, Module)], name: &str) -> &'a Module {
    &cat.iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("no module {name}")).1
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer combination of the basis, coefficients in [-3, 3].
pub fn random_element(space: &HomSpace, rng: &mut ChaCha8Rng) -> Mat {
    let coeffs: Vec<Rat> = (0..space.dim()).map(|_| Rat::from_int(rng.gen_range(-3..=3))).collect();
    space.combine(&coeffs)
}

pub fn random_bocs_hom(b: &GendoBocs, m: &Module, n: &Module, rng: &mut ChaCha8Rng) -> BocsHom {
    let space = b.hom_space(m, n).unwrap();
    BocsHom { source: m.clone(), target: n.clone(), matrix: random_element(&space, rng) }
}

/// Gendo-symmetric corpus algebras small enough for exhaustive sweeps.
pub fn gendo_corpus() -> Vec<(&'static str, Algebra)> {
    ["kupisch:[2,3]:cyclic", "kx:2", "kx:3", "auslander:kx:2", "auslander:kx:3", "tensor:kupisch:[2,3]:cyclic:kx:2"]
        .into_iter()
        .map(|n| (n, corpus::parse(n).unwrap()))
        .collect()
}
