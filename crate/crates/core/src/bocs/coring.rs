//! Corings `(A, W)`: comultiplication `W -> W ⊗_A W` and counit `W -> A`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, SparseRow};
use crate::module::{tensor_of_homs, Bimodule, TensorSpace};
use crate::rational::Rat;

fn mul(a: &Mat, b: &Mat) -> Mat {
    a.try_mul(b).expect("compatible shapes")
}

/// A coring on an `(A, A)`-bimodule `W`.
///
/// `mu` is `dim W x dim(W ⊗_A W)` against the basis of `ww`; `eps` is
/// `dim W x dim A`.
#[derive(Clone, Debug)]
pub struct Coring {
    pub algebra: Algebra,
    pub w: Bimodule,
    pub ww: TensorSpace,
    pub mu: Mat,
    pub eps: Mat,
}

/// Which axiom failed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Bimodule,
    LeftCounit,
    RightCounit,
    Coassociativity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub bimodule_maps: bool,
    pub left_counit: bool,
    pub right_counit: bool,
    pub coassociative: bool,
    pub first_failure: Option<Axiom>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl Coring {
    /// Checks shapes and wraps the data without verifying axioms.
    pub fn new(w: &Bimodule, mu: Mat, eps: Mat) -> Result<Coring> {
        let a = w.right_algebra().clone();
        if w.left_algebra() != &a {
            return Err(Error::AlgebraMismatch);
        }
        let ww = TensorSpace::new(w, w)?;
        if mu.shape() != (w.dim(), ww.dim()) || eps.shape() != (w.dim(), a.dim()) {
            return Err(Error::ShapeMismatch("comultiplication or counit has the wrong shape".into()));
        }
        Ok(Coring { algebra: a, w: w.clone(), ww, mu, eps })
    }

    /// `(A, A)` with `a -> a ⊗ 1` and the identity counit.
    pub fn trivial(a: &Algebra) -> Coring {
        let w = Bimodule::regular(a);
        let ww = TensorSpace::new(&w, &w).expect("regular tensor");
        let rows: Vec<Vec<Rat>> = (0..a.dim()).map(|i| ww.pure_tensor(&a.basis_element(i), a.unit())).collect();
        let mu = Mat::from_rows(&rows, ww.dim());
        Coring { algebra: a.clone(), w, ww, mu, eps: Mat::identity(a.dim()) }
    }

    /// The coring on `Ae ⊗_{eAe} eA` with `ae ⊗ eb -> (ae ⊗ e) ⊗ (e ⊗ eb)` and
    /// `ae ⊗ eb -> aeb`.
    pub fn from_idempotent(a: &Algebra, e: &[Rat]) -> Result<(Coring, TensorSpace)> {
        let corner = a.corner(e)?;
        let (x, xs) = Bimodule::left_ideal(a, &corner);
        let (y, ys) = Bimodule::right_ideal(a, &corner);
        let w0 = TensorSpace::new(&x, &y)?;
        let w = w0.bimodule().clone();
        let ww = TensorSpace::new(&w, &w)?;
        let e_in_x = xs.coords(e).expect("e lies in Ae");
        let e_in_y = ys.coords(e).expect("e lies in eA");
        let l_rows: Vec<Vec<Rat>> = (0..x.dim())
            .map(|p| w0.pure_tensor(&crate::linalg::unit_vector(x.dim(), p), &e_in_y))
            .collect();
        let r_rows: Vec<Vec<Rat>> = (0..y.dim())
            .map(|q| w0.pure_tensor(&e_in_x, &crate::linalg::unit_vector(y.dim(), q)))
            .collect();
        let l = Mat::from_rows(&l_rows, w.dim());
        let r = Mat::from_rows(&r_rows, w.dim());
        let s = w0.section();
        let mu = mul(&mul(&s, &l.kron(&r)), ww.projection());
        let e_rows: Vec<Vec<Rat>> = (0..x.dim() * y.dim())
            .map(|c| a.mul(&xs.basis()[c / y.dim()], &ys.basis()[c % y.dim()]))
            .collect();
        let eps = mul(&s, &Mat::from_rows(&e_rows, a.dim()));
        Ok((Coring { algebra: a.clone(), w, ww, mu, eps }, w0))
    }

    /// Transports the structure along a bimodule isomorphism `theta: W -> W'`.
    pub fn transport(&self, target: &Bimodule, theta: &Mat) -> Result<Coring> {
        if !self.w.is_hom_to(target, theta) {
            return Err(Error::NotHomomorphism("transport map is not a bimodule map".into()));
        }
        let inv = theta.inverse()?.ok_or(Error::NotInvertible)?;
        let tt = TensorSpace::new(target, target)?;
        let tensor = tensor_of_homs(&self.ww, theta, theta, &tt)?;
        let mu = mul(&mul(&inv, &self.mu), &tensor);
        let eps = mul(&inv, &self.eps);
        Ok(Coring { algebra: self.algebra.clone(), w: target.clone(), ww: tt, mu, eps })
    }

    /// The coring `(A1 ⊗ A2, W1 ⊗ W2)`.
    pub fn tensor(&self, other: &Coring) -> Result<Coring> {
        let (a1, a2) = (&self.algebra, &other.algebra);
        let a = a1.tensor(a2);
        let (w1, w2) = (&self.w, &other.w);
        let kron_all = |x: &[Mat], y: &[Mat]| -> Vec<Mat> {
            x.iter().flat_map(|p| y.iter().map(move |q| p.kron(q))).collect()
        };
        let w = Bimodule::new(&a, &a, kron_all(w1.lacts(), w2.lacts()), kron_all(w1.racts(), w2.racts()))?;
        let ww = TensorSpace::new(&w, &w)?;
        let (d1, d2) = (w1.dim(), w2.dim());
        let m1 = mul(&self.mu, &self.ww.section());
        let m2 = mul(&other.mu, &other.ww.section());
        let k = m1.kron(&m2);
        let dw = d1 * d2;
        let rows: Vec<Vec<Rat>> = (0..k.rows())
            .map(|row| {
                let sparse: SparseRow = k
                    .sparse_row(row)
                    .into_iter()
                    .map(|(col, v)| {
                        // ((a1 b1), (a2 b2)) -> ((a1 a2), (b1 b2))
                        let (c1, c2) = (col / (d2 * d2), col % (d2 * d2));
                        let (x1, y1) = (c1 / d1, c1 % d1);
                        let (x2, y2) = (c2 / d2, c2 % d2);
                        ((x1 * d2 + x2) * dw + (y1 * d2 + y2), v)
                    })
                    .collect();
                ww.project_sparse(&crate::linalg::normalize_sparse(sparse))
            })
            .collect();
        let mu = Mat::from_rows(&rows, ww.dim());
        let eps = self.eps.kron(&other.eps);
        Ok(Coring { algebra: a, w, ww, mu, eps })
    }

    /// `c_l: W -> W ⊗_A A`, `w -> w ⊗ 1`, with the target space.
    pub fn left_unitor(&self) -> Result<(TensorSpace, Mat)> {
        let reg = Bimodule::regular(&self.algebra);
        let t = TensorSpace::new(&self.w, &reg)?;
        let rows: Vec<Vec<Rat>> = (0..self.w.dim())
            .map(|i| t.pure_tensor(&crate::linalg::unit_vector(self.w.dim(), i), self.algebra.unit()))
            .collect();
        let m = Mat::from_rows(&rows, t.dim());
        Ok((t, m))
    }

    /// `c_r: W -> A ⊗_A W`, `w -> 1 ⊗ w`.
    pub fn right_unitor(&self) -> Result<(TensorSpace, Mat)> {
        let reg = Bimodule::regular(&self.algebra);
        let t = TensorSpace::new(&reg, &self.w)?;
        let rows: Vec<Vec<Rat>> = (0..self.w.dim())
            .map(|i| t.pure_tensor(self.algebra.unit(), &crate::linalg::unit_vector(self.w.dim(), i)))
            .collect();
        let m = Mat::from_rows(&rows, t.dim());
        Ok((t, m))
    }

    /// Evaluates every axiom as an exact matrix identity.
    pub fn verify(&self) -> AxiomReport {
        let reg = Bimodule::regular(&self.algebra);
        let bimodule_maps = self.w.is_hom_to(self.ww.bimodule(), &self.mu) && self.w.is_hom_to(&reg, &self.eps);
        let id = Mat::identity(self.w.dim());
        let left_counit = (|| -> Result<bool> {
            let (t, cl) = self.left_unitor()?;
            let one_eps = tensor_of_homs(&self.ww, &id, &self.eps, &t)?;
            Ok(mul(&self.mu, &one_eps) == cl)
        })()
        .unwrap_or(false);
        let right_counit = (|| -> Result<bool> {
            let (t, cr) = self.right_unitor()?;
            let eps_one = tensor_of_homs(&self.ww, &self.eps, &id, &t)?;
            Ok(mul(&self.mu, &eps_one) == cr)
        })()
        .unwrap_or(false);
        let coassociative = self.coassociativity().unwrap_or(false);
        let first_failure = [
            (bimodule_maps, Axiom::Bimodule),
            (left_counit, Axiom::LeftCounit),
            (right_counit, Axiom::RightCounit),
            (coassociative, Axiom::Coassociativity),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, a)| a);
        AxiomReport { bimodule_maps, left_counit, right_counit, coassociative, first_failure }
    }

    /// `(mu ⊗ 1) mu = (1 ⊗ mu) mu` through the associator `(W⊗W)⊗W -> W⊗(W⊗W)`.
    fn coassociativity(&self) -> Result<bool> {
        let w = &self.w;
        let dw = w.dim();
        let wwb = self.ww.bimodule();
        let q1 = TensorSpace::new(wwb, w)?;
        let q2 = TensorSpace::new(w, wwb)?;
        let id = Mat::identity(dw);
        let mu_one = tensor_of_homs(&self.ww, &self.mu, &id, &q1)?;
        let one_mu = tensor_of_homs(&self.ww, &id, &self.mu, &q2)?;
        let assoc = mul(
            &mul(&mul(&q1.section(), &self.ww.section().kron(&id)), &id.kron(self.ww.projection())),
            q2.projection(),
        );
        let lhs = mul(&mul(&self.mu, &mu_one), &assoc);
        let rhs = mul(&self.mu, &one_mu);
        Ok(lhs == rhs)
    }

    /// A copy with the counit scaled, for mutation tests.
    pub fn with_eps(&self, eps: Mat) -> Coring {
        Coring { eps, ..self.clone() }
    }

    pub fn with_mu(&self, mu: Mat) -> Coring {
        Coring { mu, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rational::q;

    #[test]
    fn trivial_corings_verify() {
        for a in [Algebra::field(), corpus::truncated_poly(2), corpus::b5(), corpus::t2()] {
            let c = Coring::trivial(&a);
            assert!(c.verify().passed(), "{a:?}: {:?}", c.verify());
        }
    }

    #[test]
    fn idempotent_corings_verify() {
        let b5 = corpus::b5();
        let (c, _) = Coring::from_idempotent(&b5, &b5.idempotents()[1]).unwrap();
        assert_eq!(c.w.dim(), 5);
        assert!(c.verify().passed());
        let t2 = corpus::t2();
        let (c, _) = Coring::from_idempotent(&t2, &t2.idempotents()[0]).unwrap();
        assert!(c.verify().passed());
    }

    #[test]
    fn unit_idempotent_gives_trivial_dimensions() {
        let a2 = corpus::truncated_poly(2);
        let (c, _) = Coring::from_idempotent(&a2, a2.unit()).unwrap();
        assert_eq!(c.w.dim(), 2);
        assert!(c.verify().passed());
    }

    #[test]
    fn transport_along_scalar_multiple() {
        let b5 = corpus::b5();
        let c = Coring::trivial(&b5);
        let two = Mat::scalar(5, &q(2));
        let t = c.transport(&c.w, &two).unwrap();
        assert!(t.verify().passed());
        assert_eq!(t.eps, c.eps.scale(&Rat::new(1, 2)));
        let same = c.transport(&c.w, &Mat::identity(5)).unwrap();
        assert_eq!(same.mu, c.mu);
    }

    #[test]
    fn mutations_fail_the_expected_axiom() {
        let b5 = corpus::b5();
        let c = Coring::trivial(&b5);
        let bad = c.with_eps(c.eps.scale(&q(2)));
        assert_eq!(bad.verify().first_failure, Some(Axiom::LeftCounit));
        let zero = c.with_mu(Mat::zeros(c.mu.rows(), c.mu.cols()));
        assert!(!zero.verify().left_counit);
        assert!(!zero.verify().right_counit);
    }

    #[test]
    fn tensor_of_trivial_corings_is_trivial() {
        let a = corpus::truncated_poly(2);
        let b = corpus::b5();
        let t = Coring::trivial(&a).tensor(&Coring::trivial(&b)).unwrap();
        let direct = Coring::trivial(&a.tensor(&b));
        assert!(t.verify().passed());
        assert_eq!(t.w, direct.w);
        assert_eq!(t.mu, direct.mu);
        assert_eq!(t.eps, direct.eps);
        let k = Coring::trivial(&Algebra::field()).tensor(&Coring::trivial(&b)).unwrap();
        assert_eq!(k.mu, Coring::trivial(&b).mu);
    }
}
