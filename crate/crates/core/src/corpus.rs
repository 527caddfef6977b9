//! Test algebras and their module catalogs.
//!
//! Nakayama algebras use arrows `a_i: i -> i+1`, basis = paths starting at
//! `i` of length `< c_i`, and left-to-right composition (`p q` is "first
//! `p`, then `q`"). Path labels list their arrows in order, so `a1a0` in the
//! `[2,3]` cyclic algebra is the length-two path starting at vertex 1.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Mat, Subspace};
use crate::module::{hom_space, is_injective, is_projective, iso_modules, HomSpace, IsoSearch, Module};
use crate::rational::Rat;

/// Names accepted by [`parse`] that `corpus list` advertises.
pub const NAMES: &[&str] = &[
    "kupisch:[2,3]:cyclic",
    "kupisch:[2,1]:linear",
    "kx:2",
    "kx:3",
    "auslander:kx:2",
    "auslander:kx:3",
    "tensor:kupisch:[2,3]:cyclic:kx:2",
];

/// Nakayama algebra with the given Kupisch series.
pub fn nakayama(series: &[usize], cyclic: bool) -> Result<Algebra> {
    let n = series.len();
    if n == 0 {
        return Err(Error::Inadmissible("empty series".into()));
    }
    if series.contains(&0) {
        return Err(Error::Inadmissible("entries must be positive".into()));
    }
    let next = |i: usize| if cyclic { (i + 1) % n } else { i + 1 };
    for i in 0..n {
        let has_arrow = cyclic || i + 1 < n;
        if has_arrow && n > 1 && series[i] < 2 {
            return Err(Error::Inadmissible(format!("c_{i} = {} but vertex {i} has an arrow", series[i])));
        }
        if has_arrow && series[next(i)] + 1 < series[i] {
            return Err(Error::Inadmissible(format!("c_{} < c_{i} - 1", next(i))));
        }
        if !cyclic && series[i] > n - i {
            return Err(Error::Inadmissible(format!("c_{i} exceeds the path length to the sink")));
        }
    }
    let end = |i: usize, len: usize| if cyclic { (i + len) % n } else { i + len };
    let mut paths = Vec::new();
    for (i, &c) in series.iter().enumerate() {
        for len in 0..c {
            paths.push((i, len));
        }
    }
    let index = |i: usize, len: usize| paths.iter().position(|&p| p == (i, len));
    let labels = paths
        .iter()
        .map(|&(i, len)| {
            if len == 0 {
                format!("e{i}")
            } else {
                (0..len).map(|k| format!("a{}", end(i, k))).collect()
            }
        })
        .collect();
    let mut triples = Vec::new();
    for (x, &(i, l)) in paths.iter().enumerate() {
        for (y, &(j, m)) in paths.iter().enumerate() {
            if end(i, l) == j && l + m < series[i] {
                triples.push((x, y, index(i, l + m).expect("path exists"), Rat::one()));
            }
        }
    }
    let d = paths.len();
    let idem: Vec<Vec<Rat>> = (0..n).map(|i| unit_vector(d, index(i, 0).unwrap())).collect();
    let mut unit = vec![Rat::zero(); d];
    for f in &idem {
        for (u, c) in unit.iter_mut().zip(f) {
            *u += c;
        }
    }
    Algebra::from_triples(labels, &triples, unit, idem)
}

/// `K[x]/(x^n)`.
pub fn truncated_poly(n: usize) -> Algebra {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            triples.push((i, j, i + j, Rat::one()));
        }
    }
    let one = unit_vector(n, 0);
    Algebra::from_triples(labels, &triples, one.clone(), vec![one]).expect("truncated polynomial algebra")
}

/// Kupisch series `[2,3]`, cyclic.
pub fn b5() -> Algebra {
    nakayama(&[2, 3], true).expect("admissible")
}

/// Kupisch series `[2,1]`, linear: upper triangular 2x2 matrices.
pub fn t2() -> Algebra {
    nakayama(&[2, 1], false).expect("admissible")
}

/// Index of the basis element with this label.
pub fn path_index(a: &Algebra, label: &str) -> Option<usize> {
    a.labels().iter().position(|l| l == label)
}

/// `End(M_0 ⊕ ... ⊕ M_{r-1})` with multiplication `f g = f ∘ g` (first `g`).
///
/// Basis: the union of bases of `Hom(M_i, M_j)`, ordered by `(i, j)`.
/// Idempotents: the identity maps of the summands.
pub fn endomorphism_algebra(modules: &[Module]) -> Result<Algebra> {
    let r = modules.len();
    if r == 0 {
        return Err(Error::InvalidPresentation("empty module list".into()));
    }
    let mut blocks: Vec<(usize, usize, HomSpace, usize)> = Vec::new();
    let mut offset = 0;
    for i in 0..r {
        for j in 0..r {
            let h = hom_space(&modules[i], &modules[j])?;
            let dim = h.dim();
            blocks.push((i, j, h, offset));
            offset += dim;
        }
    }
    let d = offset;
    let block = |i: usize, j: usize| &blocks[i * r + j];
    let mut labels = Vec::with_capacity(d);
    for (i, j, h, _) in &blocks {
        for k in 0..h.dim() {
            labels.push(format!("h{i}{j}.{k}"));
        }
    }
    let mut triples = Vec::new();
    for (i, j, hf, of) in &blocks {
        for (k, l, hg, og) in &blocks {
            // f: M_i -> M_j, g: M_k -> M_l; f ∘ g needs l = i and lands in Hom(M_k, M_j)
            if l != i {
                continue;
            }
            let (_, _, target, ot) = block(*k, *j);
            for (x, f) in hf.basis().iter().enumerate() {
                for (y, g) in hg.basis().iter().enumerate() {
                    let fg = g.try_mul(f)?;
                    let c = target.coords(&fg).ok_or_else(|| Error::Internal("composite left Hom".into()))?;
                    for (z, v) in c.into_iter().enumerate() {
                        if !v.is_zero() {
                            triples.push((of + x, og + y, ot + z, v));
                        }
                    }
                }
            }
        }
    }
    let mut idem = Vec::with_capacity(r);
    let mut unit = vec![Rat::zero(); d];
    for (i, m) in modules.iter().enumerate() {
        let (_, _, h, o) = block(i, i);
        let c = h.coords(&Mat::identity(m.dim())).expect("identity is an endomorphism");
        let mut e = vec![Rat::zero(); d];
        for (z, v) in c.into_iter().enumerate() {
            e[o + z] = v.clone();
            unit[o + z] += v;
        }
        idem.push(e);
    }
    Algebra::from_triples(labels, &triples, unit, idem)
}

/// Auslander algebra of `K[x]/(x^n)`: `End(A ⊕ J ⊕ ... ⊕ J^{n-1})`.
pub fn auslander_kx(n: usize) -> Algebra {
    let a = truncated_poly(n);
    let reg = Module::regular(&a);
    let mut modules = vec![reg.clone()];
    for k in 1..n {
        let mut xk = vec![Rat::zero(); n];
        xk[k] = Rat::one();
        modules.push(Module::right_ideal(&a, &xk).0);
    }
    endomorphism_algebra(&modules).expect("endomorphism algebra")
}

/// Parses a corpus name such as `kupisch:[2,3]:cyclic` or `tensor:kx:2:kx:3`.
pub fn parse(name: &str) -> Result<Algebra> {
    let bad = || Error::UnknownCorpus(name.to_string());
    let (alg, rest) = parse_prefix(name).ok_or_else(bad)?;
    if rest.is_empty() {
        alg
    } else {
        Err(bad())
    }
}

fn parse_prefix(s: &str) -> Option<(Result<Algebra>, &str)> {
    let (head, rest) = s.split_once(':')?;
    match head {
        "kx" => {
            let (n, rest) = take_number(rest)?;
            (n >= 1).then(|| (Ok(truncated_poly(n)), rest))
        }
        "auslander" => {
            let rest = rest.strip_prefix("kx:")?;
            let (n, rest) = take_number(rest)?;
            (n >= 1).then(|| (Ok(auslander_kx(n)), rest))
        }
        "kupisch" => {
            let rest = rest.strip_prefix('[')?;
            let (list, rest) = rest.split_once(']')?;
            let series = list
                .split(',')
                .map(|t| t.trim().parse::<usize>().ok())
                .collect::<Option<Vec<_>>>()?;
            let rest = rest.strip_prefix(':')?;
            let (kind, rest) = take_word(rest);
            let cyclic = match kind {
                "cyclic" => true,
                "linear" => false,
                _ => return None,
            };
            Some((nakayama(&series, cyclic), rest))
        }
        "tensor" => {
            let (a, rest) = parse_prefix(rest)?;
            let rest = rest.strip_prefix(':')?;
            let (b, rest) = parse_prefix(rest)?;
            let t = a.and_then(|a| b.map(|b| a.tensor(&b)));
            Some((t, rest))
        }
        _ => None,
    }
}

fn take_number(s: &str) -> Option<(usize, &str)> {
    let (w, rest) = take_word(s);
    Some((w.parse().ok()?, rest))
}

fn take_word(s: &str) -> (&str, &str) {
    match s.find(':') {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    }
}

/// A named list of modules.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<(String, Module)>,
    /// All indecomposables up to isomorphism are listed.
    pub complete: bool,
}

impl Catalog {
    pub fn modules(&self) -> impl Iterator<Item = &Module> {
        self.entries.iter().map(|(_, m)| m)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn entries(&self) -> &[(String, Module)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Module> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `M J^k` for `k = 0, 1, ...` until it vanishes.
fn radical_series(m: &Module) -> Vec<Subspace> {
    let rad: Vec<Mat> = m.algebra().radical().basis().iter().map(|j| m.act(j)).collect();
    let mut out = vec![Subspace::full(m.dim())];
    loop {
        let last = out.last().unwrap();
        if last.dim() == 0 {
            return out;
        }
        let next = Subspace::span(
            m.dim(),
            last.basis().iter().flat_map(|v| rad.iter().map(move |j| j.apply(v))),
        );
        out.push(next);
    }
}

fn is_uniserial_projectives(a: &Algebra) -> bool {
    (0..a.idempotents().len()).all(|s| {
        let series = radical_series(&Module::projective(a, s));
        series.windows(2).all(|w| w[0].dim() - w[1].dim() <= 1)
    })
}

/// Whether both `A` and `A^op` have uniserial indecomposable projectives.
pub fn is_nakayama(a: &Algebra) -> bool {
    is_uniserial_projectives(a) && is_uniserial_projectives(&a.opposite())
}

/// Indecomposable modules: every uniserial quotient `e_i A / e_i A J^k` for
/// Nakayama algebras; otherwise simples, projectives and injectives with
/// `complete = false`.
pub fn module_catalog(a: &Algebra) -> Result<Catalog> {
    if is_nakayama(a) {
        let mut entries = Vec::new();
        for s in 0..a.idempotents().len() {
            let p = Module::projective(a, s);
            let series = radical_series(&p);
            let len = series.len() - 1;
            for k in 1..=len {
                let (m, _) = p.quotient(&series[k]);
                entries.push((uniserial_name(&m, s, k, len), m));
            }
        }
        return Ok(Catalog { entries, complete: true });
    }
    let mut entries: Vec<(String, Module)> = Vec::new();
    let n = a.idempotents().len();
    let candidates = (0..n)
        .map(|s| (format!("S{s}"), Module::simple(a, s)))
        .chain((0..n).map(|s| (format!("P{s}"), Module::projective(a, s))))
        .chain((0..n).map(|s| (format!("I{s}"), Module::injective(a, s))));
    'next: for (name, m) in candidates {
        for (_, seen) in &entries {
            if matches!(iso_modules(&m, seen, 0)?, IsoSearch::Found { .. }) {
                continue 'next;
            }
        }
        entries.push((name, m));
    }
    Ok(Catalog { entries, complete: false })
}

fn uniserial_name(m: &Module, s: usize, k: usize, len: usize) -> String {
    if k == len {
        format!("P{s}")
    } else if k == 1 {
        format!("S{s}")
    } else if is_injective(m) && !is_projective(m) {
        let soc = m.socle_multiplicities();
        let j = soc.iter().position(|&c| c > 0).unwrap_or(0);
        format!("D(Ae{j})")
    } else {
        format!("U({s},{k})")
    }
}
