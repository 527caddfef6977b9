//! Finite-dimensional associative unital algebras over the rationals,
//! presented by (sparse) structure constants.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{normalize_sparse, unit_vector, Echelon, Mat, SparseRow, Subspace};
use crate::rational::Rat;

/// An algebra `A` with basis `b_0..b_{n-1}`, `b_i b_j = sum_k c[i][j][k] b_k`,
/// a unit, and a declared complete set of orthogonal idempotents.
///
/// Cheap to clone; equality is structural (labels are ignored).
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

struct AlgebraData {
    dim: usize,
    labels: Vec<String>,
    table: Vec<SparseRow>,
    unit: Vec<Rat>,
    idempotents: Vec<Vec<Rat>>,
    radical: OnceLock<Subspace>,
    generators: OnceLock<Vec<Vec<Rat>>>,
    opposite: OnceLock<Algebra>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dim == other.0.dim
                && self.0.unit == other.0.unit
                && self.0.idempotents == other.0.idempotents
                && self.0.table == other.0.table)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {:?})", self.dim(), self.0.labels)
    }
}

impl Algebra {
    /// Builds an algebra from a product table indexed by `i * dim + j`.
    pub fn from_table(
        labels: Vec<String>,
        table: Vec<SparseRow>,
        unit: Vec<Rat>,
        idempotents: Vec<Vec<Rat>>,
    ) -> Result<Algebra> {
        let dim = labels.len();
        if table.len() != dim * dim {
            return Err(Error::InvalidPresentation(format!(
                "product table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        if table.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::InvalidPresentation("structure constant index out of range".into()));
        }
        if unit.len() != dim || idempotents.iter().any(|f| f.len() != dim) {
            return Err(Error::InvalidPresentation("coefficient row has the wrong length".into()));
        }
        let table = table.into_iter().map(normalize_sparse).collect();
        Ok(Algebra(Arc::new(AlgebraData {
            dim,
            labels,
            table,
            unit,
            idempotents,
            radical: OnceLock::new(),
            generators: OnceLock::new(),
            opposite: OnceLock::new(),
        })))
    }

    /// Builds an algebra from sparse `(i, j, k, c)` triples.
    pub fn from_triples(
        labels: Vec<String>,
        triples: &[(usize, usize, usize, Rat)],
        unit: Vec<Rat>,
        idempotents: Vec<Vec<Rat>>,
    ) -> Result<Algebra> {
        let n = labels.len();
        let mut table: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); n * n];
        for (i, j, k, c) in triples {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidPresentation(format!(
                    "structure constant index ({i},{j},{k}) out of range"
                )));
            }
            table[i * n + j].push((*k, c.clone()));
        }
        Algebra::from_table(labels, table, unit, idempotents)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn field() -> Algebra {
        Algebra::from_table(
            vec!["1".into()],
            vec![vec![(0, Rat::one())]],
            vec![Rat::one()],
            vec![vec![Rat::one()]],
        )
        .expect("field presentation")
    }

    /// Full matrix algebra `M_n` with matrix units `E_ij` at index `i * n + j`.
    pub fn full_matrix(n: usize) -> Algebra {
        let d = n * n;
        let mut table = vec![Vec::new(); d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    table[(i * n + j) * d + j * n + l] = vec![(i * n + l, Rat::one())];
                }
            }
        }
        let labels = (0..d).map(|x| format!("E{}{}", x / n, x % n)).collect();
        let mut unit = vec![Rat::zero(); d];
        let mut idem = Vec::new();
        for i in 0..n {
            unit[i * n + i] = Rat::one();
            idem.push(unit_vector(d, i * n + i));
        }
        Algebra::from_table(labels, table, unit, idem).expect("matrix algebra presentation")
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn unit(&self) -> &[Rat] {
        &self.0.unit
    }

    pub fn idempotents(&self) -> &[Vec<Rat>] {
        &self.0.idempotents
    }

    pub fn ptr_eq(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// `b_i * b_j` as a sparse coefficient row.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseRow {
        &self.0.table[i * self.0.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rat {
        self.basis_product(i, j)
            .iter()
            .find(|(c, _)| *c == k)
            .map_or_else(Rat::zero, |(_, v)| v.clone())
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Rat)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Vec<Rat> {
        unit_vector(self.dim(), i)
    }

    pub fn zero_element(&self) -> Vec<Rat> {
        vec![Rat::zero(); self.dim()]
    }

    pub fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    fn mul_sparse(&self, a: &SparseRow, b: &SparseRow) -> SparseRow {
        let mut acc = Vec::new();
        for (i, ai) in a {
            for (j, bj) in b {
                let ab = ai * bj;
                for (k, c) in self.basis_product(*i, *j) {
                    acc.push((*k, &ab * c));
                }
            }
        }
        normalize_sparse(acc)
    }

    /// Matrix of `x -> a * x` in the row convention (`x * L = a x`).
    pub fn left_mult(&self, a: &[Rat]) -> Mat {
        let n = self.dim();
        let rows: Vec<Vec<Rat>> = (0..n).map(|j| self.mul(a, &unit_vector(n, j))).collect();
        Mat::from_rows(&rows, n)
    }

    /// Matrix of `x -> x * a`.
    pub fn right_mult(&self, a: &[Rat]) -> Mat {
        let n = self.dim();
        let rows: Vec<Vec<Rat>> = (0..n).map(|j| self.mul(&unit_vector(n, j), a)).collect();
        Mat::from_rows(&rows, n)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_idempotent(&self, e: &[Rat]) -> bool {
        self.mul(e, e) == e
    }

    /// Verifies associativity, unit laws and the idempotent conditions,
    /// itemizing every failure.
    pub fn check_presentation(&self) -> PresentationReport {
        let n = self.dim();
        let mut issues = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let bij = self.basis_product(i, j);
                for k in 0..n {
                    let bk = vec![(k, Rat::one())];
                    let lhs = self.mul_sparse(bij, &bk);
                    let rhs = self.mul_sparse(&vec![(i, Rat::one())], self.basis_product(j, k));
                    if lhs != rhs {
                        issues.push(PresentationIssue::Associativity { i, j, k });
                    }
                }
            }
        }
        for j in 0..n {
            let bj = self.basis_element(j);
            if self.mul(self.unit(), &bj) != bj {
                issues.push(PresentationIssue::LeftUnit { j });
            }
            if self.mul(&bj, self.unit()) != bj {
                issues.push(PresentationIssue::RightUnit { j });
            }
        }
        let structural_ok = issues.is_empty();
        let idem = self.idempotent_issues(structural_ok);
        issues.extend(idem);
        PresentationReport { issues }
    }

    /// Orthogonality, completeness and split primitivity of the declared idempotents.
    pub fn validate_idempotents(&self) -> IdempotentReport {
        IdempotentReport { issues: self.idempotent_issues(true) }
    }

    fn idempotent_issues(&self, check_primitivity: bool) -> Vec<PresentationIssue> {
        let mut issues = Vec::new();
        let fs = self.idempotents();
        if fs.is_empty() {
            issues.push(PresentationIssue::IncompleteIdempotents);
            return issues;
        }
        for (s, f) in fs.iter().enumerate() {
            if !self.is_idempotent(f) || f.iter().all(Rat::is_zero) {
                issues.push(PresentationIssue::NotIdempotent { s });
            }
            for (t, g) in fs.iter().enumerate() {
                if s != t && self.mul(f, g).iter().any(|v| !v.is_zero()) {
                    issues.push(PresentationIssue::NotOrthogonal { s, t });
                }
            }
        }
        let mut total = self.zero_element();
        for f in fs {
            for (t, v) in total.iter_mut().zip(f) {
                *t += v;
            }
        }
        if total != self.unit() {
            issues.push(PresentationIssue::IncompleteIdempotents);
        }
        if check_primitivity && issues.is_empty() {
            let rad = self.radical().clone();
            for (s, f) in fs.iter().enumerate() {
                let top_dim = self.corner_span(f).dim() - self.sandwich(f, &rad).dim();
                if top_dim != 1 {
                    issues.push(PresentationIssue::NotPrimitive { s, top_dim });
                }
            }
        }
        issues
    }

    /// `span { f b_i f }`.
    fn corner_span(&self, f: &[Rat]) -> Subspace {
        let n = self.dim();
        Subspace::span(n, (0..n).map(|i| self.mul(&self.mul(f, &self.basis_element(i)), f)))
    }

    /// `span { f x f : x in space }`.
    fn sandwich(&self, f: &[Rat], space: &Subspace) -> Subspace {
        Subspace::span(self.dim(), space.basis().iter().map(|x| self.mul(&self.mul(f, x), f)))
    }

    /// Jacobson radical as the kernel of the trace form `(a, b) -> tr(L_{ab})`
    /// (valid in characteristic zero).
    pub fn radical(&self) -> &Subspace {
        self.0.radical.get_or_init(|| {
            let n = self.dim();
            let traces: Vec<Rat> = (0..n).map(|k| self.structure_constant_trace(k)).collect();
            let gram = Mat::from_fn(n, n, |i, j| {
                self.basis_product(i, j).iter().map(|(k, c)| c * &traces[*k]).sum()
            });
            let basis = gram.kernel_basis();
            Subspace::span(n, basis)
        })
    }

    fn structure_constant_trace(&self, k: usize) -> Rat {
        (0..self.dim()).map(|j| self.structure_constant(k, j, j)).sum()
    }

    /// `span { x y : x in U, y in V }`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let n = self.dim();
        let mut ech = Echelon::new(n);
        for x in u.basis() {
            for y in v.basis() {
                ech.insert_dense(&self.mul(x, y));
            }
        }
        ech.to_subspace()
    }

    /// Smallest `k` with `J^k = 0`.
    pub fn radical_nilpotency(&self) -> usize {
        let j = self.radical().clone();
        let mut power = Subspace::full(self.dim());
        let mut k = 0;
        while power.dim() > 0 {
            power = self.product_space(&power, &j);
            k += 1;
            if k > self.dim() + 1 {
                break;
            }
        }
        k
    }

    /// An algebra generating set: declared idempotents plus lifts of a basis
    /// of `J / J^2`. Falls back to the full basis when the idempotents do not
    /// span `A` modulo the radical.
    pub fn generators(&self) -> &[Vec<Rat>] {
        self.0.generators.get_or_init(|| {
            let n = self.dim();
            let rad = self.radical().clone();
            let idem_plus_rad =
                Subspace::span(n, self.idempotents().iter().cloned().chain(rad.basis().iter().cloned()));
            if idem_plus_rad.dim() != n {
                return (0..n).map(|i| self.basis_element(i)).collect();
            }
            let j2 = self.product_space(&rad, &rad);
            let mut ech = Echelon::new(n);
            for v in j2.basis() {
                ech.insert_dense(v);
            }
            let mut gens: Vec<Vec<Rat>> = self.idempotents().to_vec();
            for v in rad.basis() {
                if let crate::linalg::Insert::Pivot(_) = ech.insert_dense(v) {
                    gens.push(v.clone());
                }
            }
            gens
        })
    }

    /// Basis of `{ z : z g = g z for every generator g }`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let gens = self.generators().to_vec();
        let mut eqs = Vec::new();
        for g in &gens {
            // coefficient of b_k in (b_i g - g b_i), as a function of i
            let comm: Vec<Vec<Rat>> = (0..n)
                .map(|i| {
                    let bi = self.basis_element(i);
                    let l = self.mul(&bi, g);
                    let r = self.mul(g, &bi);
                    l.iter().zip(&r).map(|(a, b)| a - b).collect()
                })
                .collect();
            for k in 0..n {
                let eq: SparseRow = (0..n)
                    .filter(|&i| !comm[i][k].is_zero())
                    .map(|i| (i, comm[i][k].clone()))
                    .collect();
                if !eq.is_empty() {
                    eqs.push(eq);
                }
            }
        }
        crate::linalg::solve_homogeneous(n, eqs)
    }

    /// `A^op`: same basis, unit and idempotents, `c_op[i][j] = c[j][i]`. Cached.
    pub fn opposite(&self) -> Algebra {
        self.0.opposite.get_or_init(|| self.build_opposite()).clone()
    }

    fn build_opposite(&self) -> Algebra {
        let n = self.dim();
        let table = (0..n * n).map(|x| self.basis_product(x % n, x / n).clone()).collect();
        Algebra::from_table(
            self.labels().to_vec(),
            table,
            self.unit().to_vec(),
            self.idempotents().to_vec(),
        )
        .expect("opposite of a valid table")
    }

    /// `A ⊗_K B` with basis index `(i, j) -> i * dim B + j` and idempotents
    /// `f_s ⊗ g_t` in `s`-major order.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim(), other.dim());
        let d = n * m;
        let mut table = vec![Vec::new(); d * d];
        for i in 0..n {
            for k in 0..n {
                let ik = self.basis_product(i, k);
                if ik.is_empty() {
                    continue;
                }
                for j in 0..m {
                    for l in 0..m {
                        let jl = other.basis_product(j, l);
                        let mut prod = Vec::with_capacity(ik.len() * jl.len());
                        for (a, ca) in ik {
                            for (b, cb) in jl {
                                prod.push((a * m + b, ca * cb));
                            }
                        }
                        table[(i * m + j) * d + k * m + l] = prod;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(d);
        for a in self.labels() {
            for b in other.labels() {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let kron = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
            let mut v = Vec::with_capacity(d);
            for a in x {
                for b in y {
                    v.push(a * b);
                }
            }
            v
        };
        let unit = kron(self.unit(), other.unit());
        let mut idem = Vec::new();
        for f in self.idempotents() {
            for g in other.idempotents() {
                idem.push(kron(f, g));
            }
        }
        Algebra::from_table(labels, table, unit, idem).expect("tensor of valid tables")
    }

    /// `A^e = A^op ⊗_K A`, basis `(i, j) -> i * n + j`.
    pub fn enveloping(&self) -> Algebra {
        self.opposite().tensor(self)
    }

    /// Two-sided ideal generated by `gens`, by closing under left and right
    /// multiplication with generators until the dimension stabilizes.
    pub fn ideal_closure(&self, gens: &[Vec<Rat>]) -> Subspace {
        let n = self.dim();
        let mut ech = Echelon::new(n);
        let mut frontier: Vec<Vec<Rat>> = Vec::new();
        for g in gens {
            if let crate::linalg::Insert::Pivot(_) = ech.insert_dense(g) {
                frontier.push(g.clone());
            }
        }
        let alg_gens = self.generators().to_vec();
        while let Some(x) = frontier.pop() {
            for g in &alg_gens {
                for y in [self.mul(&x, g), self.mul(g, &x)] {
                    if let crate::linalg::Insert::Pivot(_) = ech.insert_dense(&y) {
                        frontier.push(y);
                    }
                }
            }
        }
        ech.to_subspace()
    }

    /// `A / I` for the two-sided ideal generated by `gens`.
    pub fn quotient_by_ideal(&self, gens: &[Vec<Rat>]) -> Result<Quotient> {
        let n = self.dim();
        let ideal = self.ideal_closure(gens);
        if ideal.dim() == n {
            return Err(Error::ZeroRing);
        }
        let keys: Vec<usize> = ideal.keys().to_vec();
        let complement: Vec<usize> = (0..n).filter(|c| !keys.contains(c)).collect();
        let qd = complement.len();
        let project = |v: &[Rat]| -> Vec<Rat> {
            let mut r = v.to_vec();
            for (b, &k) in ideal.basis().iter().zip(&keys) {
                if r[k].is_zero() {
                    continue;
                }
                let f = r[k].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let projection = Mat::from_rows(&(0..n).map(|i| project(&self.basis_element(i))).collect::<Vec<_>>(), qd);
        let section = Mat::from_fn(qd, n, |i, j| if complement[i] == j { Rat::one() } else { Rat::zero() });
        let mut table = Vec::with_capacity(qd * qd);
        for &a in &complement {
            for &b in &complement {
                let prod = self.mul(&self.basis_element(a), &self.basis_element(b));
                let p = project(&prod);
                table.push(p.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
            }
        }
        let labels = complement.iter().map(|&c| self.labels()[c].clone()).collect();
        let unit = project(self.unit());
        let idempotents = self
            .idempotents()
            .iter()
            .map(|f| project(f))
            .filter(|f| f.iter().any(|v| !v.is_zero()))
            .collect();
        let algebra = Algebra::from_table(labels, table, unit, idempotents)?;
        Ok(Quotient { algebra, projection, section, ideal })
    }

    /// The corner algebra `eAe` with its inclusion into `A`.
    pub fn corner(&self, e: &[Rat]) -> Result<Corner> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let n = self.dim();
        let span = self.corner_span(e);
        let d = span.dim();
        let basis = span.basis().to_vec();
        let mut table = Vec::with_capacity(d * d);
        for a in &basis {
            for b in &basis {
                let c = span.coords(&self.mul(a, b)).ok_or_else(|| {
                    Error::Internal("corner not closed under multiplication".into())
                })?;
                table.push(c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
            }
        }
        let unit = span.coords(e).ok_or_else(|| Error::Internal("e not in eAe".into()))?;
        let mut idempotents: Vec<Vec<Rat>> = self
            .idempotents()
            .iter()
            .filter(|f| f.iter().any(|v| !v.is_zero()) && self.mul(e, f) == **f && self.mul(f, e) == **f)
            .filter_map(|f| span.coords(f))
            .collect();
        let sum: Vec<Rat> = (0..d).map(|k| idempotents.iter().map(|f| &f[k]).sum()).collect();
        if idempotents.is_empty() || sum != unit {
            idempotents = vec![unit.clone()];
        }
        let labels = basis
            .iter()
            .enumerate()
            .map(|(t, v)| {
                let nz: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
                if nz.len() == 1 && v[nz[0]].is_one() {
                    self.labels()[nz[0]].clone()
                } else {
                    format!("v{t}")
                }
            })
            .collect();
        let algebra = Algebra::from_table(labels, table, unit, idempotents)?;
        let embedding = Mat::from_rows(&basis, n);
        Ok(Corner { algebra, embedding, span, idempotent: e.to_vec() })
    }
}

/// `eAe` together with the data relating it to `A`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub algebra: Algebra,
    /// Rows are the chosen basis of `eAe` in `A`-coordinates.
    pub embedding: Mat,
    span: Subspace,
    pub idempotent: Vec<Rat>,
}

impl Corner {
    /// Coordinates in the corner basis of an element of `A` lying in `eAe`.
    pub fn coords(&self, a: &[Rat]) -> Option<Vec<Rat>> {
        self.span.coords(a)
    }

    pub fn include(&self, x: &[Rat]) -> Vec<Rat> {
        self.embedding.apply(x)
    }
}

/// `A / I` with projection (`n x q`) and a section (`q x n`).
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub projection: Mat,
    pub section: Mat,
    pub ideal: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PresentationIssue {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { j: usize },
    RightUnit { j: usize },
    NotIdempotent { s: usize },
    NotOrthogonal { s: usize, t: usize },
    IncompleteIdempotents,
    NotPrimitive { s: usize, top_dim: usize },
}

impl fmt::Display for PresentationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationIssue::Associativity { i, j, k } => {
                write!(f, "associativity fails at (b{i} b{j}) b{k}")
            }
            PresentationIssue::LeftUnit { j } => write!(f, "unit is not a left identity on b{j}"),
            PresentationIssue::RightUnit { j } => write!(f, "unit is not a right identity on b{j}"),
            PresentationIssue::NotIdempotent { s } => write!(f, "idempotent {s} is not a nonzero idempotent"),
            PresentationIssue::NotOrthogonal { s, t } => write!(f, "idempotents {s} and {t} are not orthogonal"),
            PresentationIssue::IncompleteIdempotents => write!(f, "idempotents do not sum to the unit"),
            PresentationIssue::NotPrimitive { s, top_dim } => {
                write!(f, "idempotent {s}: f(A/J)f has dimension {top_dim}, expected 1")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PresentationReport {
    pub issues: Vec<PresentationIssue>,
}

impl PresentationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        self.issues
            .iter()
            .filter_map(|i| match i {
                PresentationIssue::Associativity { i, j, k } => Some((*i, *j, *k)),
                _ => None,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdempotentReport {
    pub issues: Vec<PresentationIssue>,
}

impl IdempotentReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// An element tied to its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub algebra: Algebra,
    pub coeffs: Vec<Rat>,
}

impl AlgebraElement {
    pub fn new(algebra: &Algebra, coeffs: Vec<Rat>) -> Result<AlgebraElement> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "element of length {} in algebra of dim {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        Ok(AlgebraElement { algebra: algebra.clone(), coeffs })
    }

    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: self.algebra.mul(&self.coeffs, &other.coeffs),
        })
    }
}
