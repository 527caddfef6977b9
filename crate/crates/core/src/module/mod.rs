//! Right modules, bimodules and homomorphisms given by action matrices.

mod iso;
mod resolution;
mod tensor;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use iso::{decompose_module, find_invertible, iso_modules, Decomposition, IsoSearch, Summand};
pub use resolution::{
    dominant_dimension, dominant_dimension_via_ext, ext_dim, injective_hull, is_injective, is_projective,
    minimal_injective_resolution, minimal_projective_resolution, projective_cover, DomDim, Resolution,
};
pub use tensor::{hom_tensor_duality_iso, tensor_of_homs, TensorSpace};

use crate::algebra::{Algebra, Corner};
use crate::error::{Error, Result};
use crate::linalg::{intertwiners, unit_vector, Mat, Subspace};
use crate::rational::Rat;

/// A finite-dimensional right module: `action[i]` is the matrix of `b_i`.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

struct ModuleData {
    algebra: Algebra,
    dim: usize,
    action: Vec<Mat>,
    generator_action: OnceLock<Vec<Mat>>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.action == other.0.action && self.0.algebra == other.0.algebra)
    }
}

impl Eq for Module {}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over algebra of dim {})", self.dim(), self.algebra().dim())
    }
}

/// Matrix of a linear map restricted to an invariant subspace, in its basis.
pub(crate) fn restricted_action(space: &Subspace, image: impl Fn(&[Rat]) -> Vec<Rat>) -> Result<Mat> {
    let rows = space
        .basis()
        .iter()
        .map(|v| space.coords(&image(v)).ok_or(Error::NotSubmodule))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(&rows, space.dim()))
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    a.try_mul(b).expect("compatible shapes")
}

impl Module {
    /// Builds a module from one square matrix per algebra basis element.
    /// Only shapes are checked; see [`Module::check_axioms`].
    pub fn new(algebra: &Algebra, action: Vec<Mat>) -> Result<Module> {
        if action.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for an algebra of dim {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::ShapeMismatch("action matrices must be square of equal size".into()));
        }
        Ok(Module(Arc::new(ModuleData {
            algebra: algebra.clone(),
            dim,
            action,
            generator_action: OnceLock::new(),
        })))
    }

    /// Like [`Module::new`] but also verifies unit and multiplicativity.
    pub fn checked(algebra: &Algebra, action: Vec<Mat>) -> Result<Module> {
        let m = Module::new(algebra, action)?;
        m.check_axioms()?;
        Ok(m)
    }

    pub fn zero(algebra: &Algebra) -> Module {
        Module::new(algebra, vec![Mat::zeros(0, 0); algebra.dim()]).expect("zero module")
    }

    /// `A_A`, acting by right multiplication.
    pub fn regular(algebra: &Algebra) -> Module {
        let n = algebra.dim();
        let action = (0..n).map(|i| algebra.right_mult(&unit_vector(n, i))).collect();
        Module::new(algebra, action).expect("regular module")
    }

    /// The right ideal `fA` together with its basis inside `A`.
    pub fn right_ideal(algebra: &Algebra, f: &[Rat]) -> (Module, Subspace) {
        let n = algebra.dim();
        let space = Subspace::span(n, (0..n).map(|i| algebra.mul(f, &unit_vector(n, i))));
        let action = (0..n)
            .map(|i| {
                let b = unit_vector(n, i);
                restricted_action(&space, |x| algebra.mul(x, &b)).expect("right ideal is closed")
            })
            .collect();
        (Module::new(algebra, action).expect("right ideal"), space)
    }

    /// Indecomposable projective `f_s A` for a declared idempotent.
    pub fn projective(algebra: &Algebra, s: usize) -> Module {
        Module::right_ideal(algebra, &algebra.idempotents()[s]).0
    }

    /// Simple top of `f_s A`.
    pub fn simple(algebra: &Algebra, s: usize) -> Module {
        let p = Module::projective(algebra, s);
        let rad = p.radical_submodule();
        p.quotient(&rad).0
    }

    /// Indecomposable injective `D(A f_s)`.
    pub fn injective(algebra: &Algebra, s: usize) -> Module {
        Module::projective(&algebra.opposite(), s).dual_over(algebra)
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }

    pub fn action(&self, i: usize) -> &Mat {
        &self.0.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.0.action
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, a: &[Rat]) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(d, d);
        for (c, rho) in a.iter().zip(&self.0.action) {
            if !c.is_zero() {
                m.add_scaled(rho, c);
            }
        }
        m
    }

    /// Matrices of the algebra generators, cached.
    pub fn generator_actions(&self) -> &[Mat] {
        self.0
            .generator_action
            .get_or_init(|| self.algebra().generators().iter().map(|g| self.act(g)).collect())
    }

    /// Checks `rho(1) = I` and `rho(b_i) rho(b_j) = sum_k c_ijk rho(b_k)`.
    pub fn check_axioms(&self) -> Result<()> {
        let a = self.algebra();
        if self.act(a.unit()) != Mat::identity(self.dim()) {
            return Err(Error::InvalidPresentation("unit does not act as the identity".into()));
        }
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = mat_mul(self.action(i), self.action(j));
                let mut rhs = Mat::zeros(self.dim(), self.dim());
                for (k, c) in a.basis_product(i, j) {
                    rhs.add_scaled(self.action(*k), c);
                }
                if lhs != rhs {
                    return Err(Error::InvalidPresentation(format!("action not multiplicative at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(algebra: &Algebra, parts: &[Module]) -> Result<Module> {
        if parts.iter().any(|p| p.algebra() != algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let action = (0..algebra.dim())
            .map(|i| Mat::block_diag(&parts.iter().map(|p| p.action(i)).collect::<Vec<_>>()))
            .collect();
        Module::new(algebra, action)
    }

    /// Submodule on an invariant subspace, with its inclusion matrix.
    pub fn submodule(&self, space: &Subspace) -> Result<(Module, Mat)> {
        let action = self
            .actions()
            .iter()
            .map(|rho| restricted_action(space, |v| rho.apply(v)))
            .collect::<Result<Vec<_>>>()?;
        Ok((Module::new(self.algebra(), action)?, space.basis_matrix()))
    }

    /// Quotient by an invariant subspace, with the projection matrix.
    pub fn quotient(&self, space: &Subspace) -> (Module, Mat) {
        let proj = space.quotient_projection();
        let sect = space.quotient_section();
        let action = self
            .actions()
            .iter()
            .map(|rho| mat_mul(&mat_mul(&sect, rho), &proj))
            .collect();
        (Module::new(self.algebra(), action).expect("quotient"), proj)
    }

    /// `D(M)` over `A^op`: the action of `a` is `rho(a)^T`.
    pub fn dual(&self) -> Module {
        self.dual_over(&self.algebra().opposite())
    }

    /// `D(M)` labelled with a given algebra, which must be `A^op` structurally.
    pub(crate) fn dual_over(&self, algebra: &Algebra) -> Module {
        debug_assert!(algebra.dim() == self.algebra().dim());
        let action = self.actions().iter().map(Mat::transpose).collect();
        Module::new(algebra, action).expect("dual")
    }

    /// `{a : M a = 0}`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.algebra().dim();
        let d = self.dim();
        let rows: Vec<Vec<Rat>> = self.actions().iter().map(|m| m.data().to_vec()).collect();
        Subspace::span(n, Mat::from_rows(&rows, d * d).kernel_basis())
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().dim() == 0
    }

    pub fn is_annihilated_by(&self, space: &Subspace) -> bool {
        space.basis().iter().all(|a| self.act(a).is_zero())
    }

    /// `M J`.
    pub fn radical_submodule(&self) -> Subspace {
        let d = self.dim();
        let mut vecs = Vec::new();
        for j in self.algebra().radical().basis() {
            vecs.extend(self.act(j).to_rows());
        }
        Subspace::span(d, vecs)
    }

    /// `{m : m J = 0}`.
    pub fn socle(&self) -> Subspace {
        let d = self.dim();
        let rad: Vec<Mat> = self.algebra().radical().basis().iter().map(|j| self.act(j)).collect();
        if rad.is_empty() {
            return Subspace::full(d);
        }
        let stacked = Mat::hstack(&rad.iter().collect::<Vec<_>>()).expect("same row count");
        Subspace::span(d, stacked.kernel_basis())
    }

    /// `M f` as a subspace.
    pub fn weight_space(&self, f: &[Rat]) -> Subspace {
        self.act(f).row_space()
    }

    /// Multiplicity of each simple (indexed by declared idempotent) in the top.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let rad = self.radical_submodule();
        self.algebra()
            .idempotents()
            .iter()
            .map(|f| self.weight_space(f).sum(&rad).dim() - rad.dim())
            .collect()
    }

    /// Multiplicity of each simple in the socle.
    pub fn socle_multiplicities(&self) -> Vec<usize> {
        let soc = self.socle();
        self.algebra()
            .idempotents()
            .iter()
            .map(|f| {
                let fm = self.act(f);
                Subspace::span(self.dim(), soc.basis().iter().map(|v| fm.apply(v))).dim()
            })
            .collect()
    }

    /// Restriction to `eAe` acting on `M e`.
    pub fn restrict_to_corner(&self, corner: &Corner) -> Module {
        let space = self.weight_space(&corner.idempotent);
        let action = corner
            .embedding
            .to_rows()
            .iter()
            .map(|c| {
                let m = self.act(c);
                restricted_action(&space, |v| m.apply(v)).expect("Me is stable under eAe")
            })
            .collect();
        Module::new(&corner.algebra, action).expect("corner restriction")
    }
}

/// Basis of a space of linear maps `rows x cols`, stored flattened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    rows: usize,
    cols: usize,
    space: Subspace,
}

impl HomSpace {
    pub fn new(rows: usize, cols: usize, space: Subspace) -> HomSpace {
        assert_eq!(space.ambient(), rows * cols);
        HomSpace { rows, cols, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn basis_element(&self, k: usize) -> Mat {
        Mat::from_flat(self.rows, self.cols, self.space.basis()[k].clone())
    }

    pub fn basis(&self) -> Vec<Mat> {
        (0..self.dim()).map(|k| self.basis_element(k)).collect()
    }

    pub fn coords(&self, f: &Mat) -> Option<Vec<Rat>> {
        self.space.coords(f.data())
    }

    pub fn contains(&self, f: &Mat) -> bool {
        self.space.contains(f.data())
    }

    pub fn combine(&self, coeffs: &[Rat]) -> Mat {
        Mat::from_flat(self.rows, self.cols, self.space.combine(coeffs))
    }

    /// Rows are the flattened basis maps.
    pub fn stacked(&self) -> Mat {
        self.space.basis_matrix()
    }
}

/// `Hom_A(M, N)`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let pairs: Vec<(Mat, Mat)> = m
        .generator_actions()
        .iter()
        .cloned()
        .zip(n.generator_actions().iter().cloned())
        .collect();
    Ok(HomSpace::new(m.dim(), n.dim(), intertwiners(m.dim(), n.dim(), &pairs)))
}

/// A homomorphism of right modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    pub source: Module,
    pub target: Module,
    pub matrix: Mat,
}

impl ModuleHom {
    pub fn new(source: &Module, target: &Module, matrix: Mat) -> Result<ModuleHom> {
        if source.algebra() != target.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.shape() != (source.dim(), target.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "map of shape {:?} between modules of dims {} and {}",
                matrix.shape(),
                source.dim(),
                target.dim()
            )));
        }
        for (k, (a, b)) in source.generator_actions().iter().zip(target.generator_actions()).enumerate() {
            if mat_mul(a, &matrix) != mat_mul(&matrix, b) {
                return Err(Error::NotHomomorphism(format!("fails to commute with generator {k}")));
            }
        }
        Ok(ModuleHom { source: source.clone(), target: target.clone(), matrix })
    }

    pub(crate) fn unchecked(source: &Module, target: &Module, matrix: Mat) -> ModuleHom {
        debug_assert_eq!(matrix.shape(), (source.dim(), target.dim()));
        ModuleHom { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn identity(m: &Module) -> ModuleHom {
        ModuleHom::unchecked(m, m, Mat::identity(m.dim()))
    }

    pub fn zero(m: &Module, n: &Module) -> ModuleHom {
        ModuleHom::unchecked(m, n, Mat::zeros(m.dim(), n.dim()))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleHom) -> Result<ModuleHom> {
        if self.target != next.source {
            return Err(Error::ShapeMismatch("composing maps with mismatched modules".into()));
        }
        Ok(ModuleHom::unchecked(&self.source, &next.target, mat_mul(&self.matrix, &next.matrix)))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<ModuleHom> {
        let inv = self.matrix.inverse().ok()??;
        Some(ModuleHom::unchecked(&self.target, &self.source, inv))
    }

    pub fn kernel_space(&self) -> Subspace {
        Subspace::span(self.source.dim(), self.matrix.kernel_basis())
    }

    pub fn image_space(&self) -> Subspace {
        self.matrix.row_space()
    }

    /// Kernel submodule with its inclusion into the source.
    pub fn kernel(&self) -> (Module, Mat) {
        self.source.submodule(&self.kernel_space()).expect("kernel is a submodule")
    }

    /// Cokernel module with the projection from the target.
    pub fn cokernel(&self) -> (Module, Mat) {
        self.target.quotient(&self.image_space())
    }
}

/// An `(B, A)`-bimodule: `lact[i]` is `w -> b_i w`, `ract[j]` is `w -> w a_j`.
#[derive(Clone)]
pub struct Bimodule(Arc<BimoduleData>);

struct BimoduleData {
    left: Algebra,
    right: Algebra,
    dim: usize,
    lact: Vec<Mat>,
    ract: Vec<Mat>,
    left_gens: OnceLock<Vec<Mat>>,
    right_gens: OnceLock<Vec<Mat>>,
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Bimodule) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.lact == other.0.lact
                && self.0.ract == other.0.ract
                && self.0.left == other.0.left
                && self.0.right == other.0.right)
    }
}

impl Eq for Bimodule {}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bimodule(dim {})", self.dim())
    }
}

fn sum_action(actions: &[Mat], coeffs: &[Rat], d: usize) -> Mat {
    let mut m = Mat::zeros(d, d);
    for (c, a) in coeffs.iter().zip(actions) {
        if !c.is_zero() {
            m.add_scaled(a, c);
        }
    }
    m
}

impl Bimodule {
    pub fn new(left: &Algebra, right: &Algebra, lact: Vec<Mat>, ract: Vec<Mat>) -> Result<Bimodule> {
        if lact.len() != left.dim() || ract.len() != right.dim() {
            return Err(Error::ShapeMismatch("one action matrix per basis element expected".into()));
        }
        let dim = lact.first().or(ract.first()).map_or(0, |m| m.rows());
        if lact.iter().chain(&ract).any(|m| m.shape() != (dim, dim)) {
            return Err(Error::ShapeMismatch("bimodule action matrices must be square of equal size".into()));
        }
        Ok(Bimodule(Arc::new(BimoduleData {
            left: left.clone(),
            right: right.clone(),
            dim,
            lact,
            ract,
            left_gens: OnceLock::new(),
            right_gens: OnceLock::new(),
        })))
    }

    /// `A` as an `(A, A)`-bimodule.
    pub fn regular(a: &Algebra) -> Bimodule {
        let n = a.dim();
        let lact = (0..n).map(|i| a.left_mult(&unit_vector(n, i))).collect();
        let ract = (0..n).map(|i| a.right_mult(&unit_vector(n, i))).collect();
        Bimodule::new(a, a, lact, ract).expect("regular bimodule")
    }

    /// `D(A)` as an `(A, A)`-bimodule.
    pub fn dual_regular(a: &Algebra) -> Bimodule {
        let reg = Bimodule::regular(a);
        Bimodule::new(
            a,
            a,
            reg.0.ract.iter().map(Mat::transpose).collect(),
            reg.0.lact.iter().map(Mat::transpose).collect(),
        )
        .expect("dual regular bimodule")
    }

    /// A right module viewed as a `(K, A)`-bimodule.
    pub fn from_right_module(m: &Module) -> Bimodule {
        let k = Algebra::field();
        Bimodule::new(&k, m.algebra(), vec![Mat::identity(m.dim())], m.actions().to_vec()).expect("right module")
    }

    /// `fA` as an `(eAe, A)`-bimodule for an idempotent `f` of the corner.
    pub fn right_ideal(a: &Algebra, corner: &Corner) -> (Bimodule, Subspace) {
        let (m, space) = Module::right_ideal(a, &corner.idempotent);
        let lact = corner
            .embedding
            .to_rows()
            .iter()
            .map(|c| restricted_action(&space, |x| a.mul(c, x)).expect("eA is stable under eAe"))
            .collect();
        (Bimodule::new(&corner.algebra, a, lact, m.actions().to_vec()).expect("eA"), space)
    }

    /// `Ae` as an `(A, eAe)`-bimodule.
    pub fn left_ideal(a: &Algebra, corner: &Corner) -> (Bimodule, Subspace) {
        let n = a.dim();
        let e = &corner.idempotent;
        let space = Subspace::span(n, (0..n).map(|i| a.mul(&unit_vector(n, i), e)));
        let lact = (0..n)
            .map(|i| {
                let b = unit_vector(n, i);
                restricted_action(&space, |x| a.mul(&b, x)).expect("Ae is a left ideal")
            })
            .collect();
        let ract = corner
            .embedding
            .to_rows()
            .iter()
            .map(|c| restricted_action(&space, |x| a.mul(x, c)).expect("Ae is stable under eAe"))
            .collect();
        (Bimodule::new(a, &corner.algebra, lact, ract).expect("Ae"), space)
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn left_algebra(&self) -> &Algebra {
        &self.0.left
    }

    pub fn right_algebra(&self) -> &Algebra {
        &self.0.right
    }

    pub fn lact(&self, i: usize) -> &Mat {
        &self.0.lact[i]
    }

    pub fn ract(&self, j: usize) -> &Mat {
        &self.0.ract[j]
    }

    pub fn lacts(&self) -> &[Mat] {
        &self.0.lact
    }

    pub fn racts(&self) -> &[Mat] {
        &self.0.ract
    }

    pub fn left_act(&self, b: &[Rat]) -> Mat {
        sum_action(&self.0.lact, b, self.dim())
    }

    pub fn right_act(&self, a: &[Rat]) -> Mat {
        sum_action(&self.0.ract, a, self.dim())
    }

    pub fn left_generator_actions(&self) -> &[Mat] {
        self.0
            .left_gens
            .get_or_init(|| self.0.left.generators().iter().map(|g| self.left_act(g)).collect())
    }

    pub fn right_generator_actions(&self) -> &[Mat] {
        self.0
            .right_gens
            .get_or_init(|| self.0.right.generators().iter().map(|g| self.right_act(g)).collect())
    }

    /// Right module obtained by forgetting the left action.
    pub fn right_module(&self) -> Module {
        Module::new(&self.0.right, self.0.ract.clone()).expect("right module")
    }

    /// Left module viewed as a right module over the opposite algebra.
    pub fn left_module_op(&self) -> Module {
        Module::new(&self.0.left.opposite(), self.0.lact.clone()).expect("left module")
    }

    /// `D(W)` as an `(A, B)`-bimodule.
    pub fn dual(&self) -> Bimodule {
        Bimodule::new(
            &self.0.right,
            &self.0.left,
            self.0.ract.iter().map(Mat::transpose).collect(),
            self.0.lact.iter().map(Mat::transpose).collect(),
        )
        .expect("dual bimodule")
    }

    /// The same data as a right module over `B^op ⊗ A`.
    pub fn enveloping_module(&self) -> Module {
        let env = self.0.left.opposite().tensor(&self.0.right);
        let mut action = Vec::with_capacity(env.dim());
        for l in &self.0.lact {
            for r in &self.0.ract {
                action.push(mat_mul(l, r));
            }
        }
        Module::new(&env, action).expect("enveloping module")
    }

    /// Left action anti-multiplicative, right action multiplicative, units,
    /// and the two actions commute.
    pub fn check_axioms(&self) -> Result<()> {
        self.right_module().check_axioms()?;
        self.left_module_op().check_axioms()?;
        for l in self.left_generator_actions() {
            for r in self.right_generator_actions() {
                if mat_mul(l, r) != mat_mul(r, l) {
                    return Err(Error::InvalidPresentation("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// Checks that `f` is a bimodule map `self -> other`.
    pub fn is_hom_to(&self, other: &Bimodule, f: &Mat) -> bool {
        f.shape() == (self.dim(), other.dim())
            && self
                .left_generator_actions()
                .iter()
                .zip(other.left_generator_actions())
                .chain(self.right_generator_actions().iter().zip(other.right_generator_actions()))
                .all(|(a, b)| mat_mul(a, f) == mat_mul(f, b))
    }
}

/// Space of bimodule homomorphisms.
pub fn bimodule_hom_space(x: &Bimodule, y: &Bimodule) -> Result<HomSpace> {
    if x.left_algebra() != y.left_algebra() || x.right_algebra() != y.right_algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let mut pairs: Vec<(Mat, Mat)> = Vec::new();
    for (a, b) in x.left_generator_actions().iter().zip(y.left_generator_actions()) {
        pairs.push((a.clone(), b.clone()));
    }
    for (a, b) in x.right_generator_actions().iter().zip(y.right_generator_actions()) {
        pairs.push((a.clone(), b.clone()));
    }
    Ok(HomSpace::new(x.dim(), y.dim(), intertwiners(x.dim(), y.dim(), &pairs)))
}

/// `Hom_A(W, N)` as a right `B`-module via `(f b)(w) = f(b w)`, for a
/// `(B, A)`-bimodule `W`.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: Module,
    pub space: HomSpace,
    pub source: Bimodule,
    pub target: Module,
}

impl HomModule {
    pub fn new(w: &Bimodule, n: &Module) -> Result<HomModule> {
        let space = hom_space(&w.right_module(), n)?;
        let b = w.left_algebra();
        let action = w
            .lacts()
            .iter()
            .map(|l| {
                let rows: Vec<Vec<Rat>> = space
                    .basis()
                    .iter()
                    .map(|f| space.coords(&mat_mul(l, f)).expect("hom space is a B-module"))
                    .collect();
                Mat::from_rows(&rows, space.dim())
            })
            .collect();
        Ok(HomModule { module: Module::new(b, action)?, space, source: w.clone(), target: n.clone() })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The concrete map `W -> N` for coordinates in this module.
    pub fn realize(&self, coords: &[Rat]) -> Mat {
        self.space.combine(coords)
    }

    pub fn coords(&self, f: &Mat) -> Option<Vec<Rat>> {
        self.space.coords(f)
    }

    /// `Hom(W, g)` for `g: N -> N'`, as a matrix between hom modules.
    pub fn push_forward(&self, other: &HomModule, g: &Mat) -> Result<Mat> {
        let rows = self
            .space
            .basis()
            .iter()
            .map(|f| {
                other
                    .coords(&mat_mul(f, g))
                    .ok_or_else(|| Error::NotHomomorphism("image is not A-linear".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_rows(&rows, other.dim()))
    }
}

/// `nu^{-1}(M) = Hom_A(D(A), M)`.
pub fn nakayama_inverse(m: &Module) -> Result<HomModule> {
    HomModule::new(&Bimodule::dual_regular(m.algebra()), m)
}

/// `nu(M) = M ⊗_A D(A)`.
pub fn nakayama(m: &Module) -> Result<Module> {
    let t = TensorSpace::new(&Bimodule::from_right_module(m), &Bimodule::dual_regular(m.algebra()))?;
    Ok(t.bimodule().right_module())
}

/// One representative declared idempotent per isomorphism class of simple modules.
pub fn simple_representatives(a: &Algebra) -> Vec<usize> {
    let fs = a.idempotents();
    let rad = a.radical().clone();
    let mut reps: Vec<usize> = Vec::new();
    'outer: for s in 0..fs.len() {
        for &r in &reps {
            // f_r (A/J) f_s != 0 identifies the simples
            let span = Subspace::span(
                a.dim(),
                (0..a.dim()).map(|i| a.mul(&a.mul(&fs[r], &unit_vector(a.dim(), i)), &fs[s])),
            );
            if !rad.contains_subspace(&span) {
                continue 'outer;
            }
        }
        reps.push(s);
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rational::q;

    #[test]
    fn regular_module_examples() {
        let k = Module::regular(&Algebra::field());
        assert_eq!(k.dim(), 1);
        assert_eq!(k.action(0), &Mat::identity(1));
        let a2 = corpus::truncated_poly(2);
        let r = Module::regular(&a2);
        let x = r.action(1);
        assert!(!x.is_zero());
        assert!(x.try_mul(x).unwrap().is_zero());
        let b5 = Module::regular(&corpus::b5());
        assert!(b5.check_axioms().is_ok());
        assert!(Bimodule::regular(&corpus::b5()).check_axioms().is_ok());
    }

    #[test]
    fn corrupted_action_is_rejected() {
        let a2 = corpus::truncated_poly(2);
        let mut action = Module::regular(&a2).actions().to_vec();
        action[1][(0, 0)] = q(1);
        assert!(Module::checked(&a2, action).is_err());
    }

    #[test]
    fn dual_examples() {
        let a2 = corpus::truncated_poly(2);
        let r = Module::regular(&a2);
        assert!(r.dual().check_axioms().is_ok());
        assert_eq!(r.dual().dual(), r);
        let b5 = corpus::b5();
        let d = Bimodule::dual_regular(&b5);
        assert_eq!(d.dim(), 5);
        assert!(d.check_axioms().is_ok());
        for m in corpus::module_catalog(&b5).unwrap().modules() {
            assert_eq!(m.dual().dual(), *m);
        }
    }

    #[test]
    fn hom_space_examples() {
        let b5 = corpus::b5();
        let reg = Module::regular(&b5);
        assert_eq!(hom_space(&reg, &reg).unwrap().dim(), 5);
        let s0 = Module::simple(&b5, 0);
        let s1 = Module::simple(&b5, 1);
        assert_eq!(hom_space(&s0, &s1).unwrap().dim(), 0);
        let p1 = Module::projective(&b5, 1);
        assert_eq!(hom_space(&p1, &p1).unwrap().dim(), 2);
        let other = Module::regular(&corpus::truncated_poly(2));
        assert_eq!(hom_space(&reg, &other).err(), Some(Error::AlgebraMismatch));
    }

    #[test]
    fn projective_dims_follow_kupisch_series() {
        let b5 = corpus::b5();
        assert_eq!(Module::projective(&b5, 0).dim(), 2);
        assert_eq!(Module::projective(&b5, 1).dim(), 3);
        assert_eq!(Module::injective(&b5, 0).dim(), 2);
        assert!(Module::injective(&b5, 0).check_axioms().is_ok());
    }

    #[test]
    fn socle_and_top_examples() {
        let b5 = corpus::b5();
        let s1 = Module::simple(&b5, 1);
        assert_eq!(s1.socle().dim(), 1);
        let a2 = corpus::truncated_poly(2);
        let soc = Module::regular(&a2).socle();
        assert_eq!(soc.dim(), 1);
        assert!(soc.contains(&[q(0), q(1)]));
        assert_eq!(Module::projective(&b5, 1).top_multiplicities(), vec![0, 1]);
    }

    #[test]
    fn hom_module_of_regular_bimodule_is_identity_like() {
        let b5 = corpus::b5();
        for m in corpus::module_catalog(&b5).unwrap().modules() {
            let h = HomModule::new(&Bimodule::regular(&b5), m).unwrap();
            assert_eq!(h.dim(), m.dim());
            assert!(h.module.check_axioms().is_ok());
        }
    }

    #[test]
    fn nakayama_inverse_of_dual_regular_is_regular() {
        let b5 = corpus::b5();
        let nu = nakayama_inverse(&Module::regular(&b5)).unwrap();
        assert_eq!(nu.dim(), 5);
        assert!(nu.module.check_axioms().is_ok());
    }

    #[test]
    fn enveloping_module_is_valid() {
        let a2 = corpus::truncated_poly(2);
        let e = Bimodule::dual_regular(&a2).enveloping_module();
        assert_eq!(e.algebra().dim(), 4);
        assert!(e.check_axioms().is_ok());
    }

    #[test]
    fn annihilators() {
        let b5 = corpus::b5();
        assert!(Module::regular(&b5).is_faithful());
        let s0 = Module::simple(&b5, 0);
        assert_eq!(s0.annihilator().dim(), 4);
        let p1 = Module::projective(&b5, 1);
        assert!(p1.is_faithful());
    }
}
