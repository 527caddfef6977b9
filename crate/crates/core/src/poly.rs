//! Dense univariate polynomials over the rationals, just enough for
//! characteristic polynomials and eigenvalue splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::Mat;
use crate::rational::Rat;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rat>);

/// Largest integer whose divisors we are willing to enumerate.
const DIVISOR_BOUND: u64 = 1 << 40;

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Rat::one()])
    }

    /// `x - r`.
    pub fn linear(r: &Rat) -> Poly {
        Poly(vec![-r, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * &Rat::from(i as i64)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.lead().expect("division by the zero polynomial").recip();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), Poly::new(r));
        }
        let mut quot = vec![Rat::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] * &dl;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        r.truncate(dd);
        (Poly::new(quot), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Rational roots found by the rational root theorem, ascending.
    ///
    /// Returns `None` when the integer coefficients at either end are too
    /// large to enumerate divisors for.
    pub fn rational_roots(&self) -> Option<Vec<Rat>> {
        let mut p = self.squarefree();
        let mut roots = Vec::new();
        // strip the root 0 first so the constant term is nonzero
        if p.0.first().is_some_and(Rat::is_zero) {
            roots.push(Rat::zero());
            p = p.divrem(&Poly::linear(&Rat::zero())).0;
        }
        if p.degree().unwrap_or(0) == 0 {
            return Some(roots);
        }
        let ints = integer_coefficients(&p);
        let a0 = ints[0].abs().to_u64().filter(|v| *v <= DIVISOR_BOUND)?;
        let an = ints.last().unwrap().abs().to_u64().filter(|v| *v <= DIVISOR_BOUND)?;
        for num in divisors(a0) {
            for den in divisors(an) {
                if num.gcd(&den) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rat::from_big(num_rational::BigRational::new(
                        BigInt::from(num) * sign,
                        BigInt::from(den),
                    ));
                    if p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

/// Scales to primitive integer coefficients.
fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in &p.0 {
        l = l.lcm(&c.denom());
    }
    let scaled: Vec<BigInt> = p.0.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &scaled {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Characteristic polynomial `det(x I - M)` by Faddeev-LeVerrier.
pub fn charpoly(m: &Mat) -> Poly {
    let n = m.rows();
    assert!(m.is_square());
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk = Mat::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = m.try_mul(&mk).expect("square");
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = m.try_mul(&mk).expect("square");
        coeffs[n - k] = -(am.trace() / Rat::from(k as i64));
    }
    Poly::new(coeffs)
}

/// Evaluates `p(M)` by Horner's rule.
pub fn eval_matrix(p: &Poly, m: &Mat) -> Mat {
    let n = m.rows();
    let mut acc = Mat::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.try_mul(m).expect("square");
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        // (x-1)(x-2) / (x-1)
        let (qt, r) = p(&[2, -3, 1]).divrem(&p(&[-1, 1]));
        assert_eq!(qt, p(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[2, -3, 1]).gcd(&p(&[-2, 1])), p(&[-2, 1]));
    }

    #[test]
    fn squarefree_part() {
        // (x-1)^2 (x+1)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        assert_eq!(f.squarefree(), p(&[-1, 0, 1]));
    }

    #[test]
    fn rational_roots_of_mixed_polynomial() {
        // (2x - 1)(x + 3)(x^2 + 1)
        let f = p(&[-1, 2]).mul(&p(&[3, 1])).mul(&p(&[1, 0, 1]));
        assert_eq!(f.rational_roots().unwrap(), vec![q(-3), Rat::new(1, 2)]);
        assert_eq!(p(&[0, 0, 1]).rational_roots().unwrap(), vec![q(0)]);
        assert!(p(&[2, 0, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn charpoly_examples() {
        let m = Mat::from_ints(&[&[2, 1], &[0, 3]]);
        assert_eq!(charpoly(&m), p(&[6, -5, 1]));
        let n = Mat::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(charpoly(&n), p(&[0, 0, 0, 1]));
    }

    proptest! {
        #[test]
        fn cayley_hamilton(v in proptest::collection::vec(-4i64..5, 9)) {
            let m = Mat::from_flat(3, 3, v.into_iter().map(q).collect());
            prop_assert!(eval_matrix(&charpoly(&m), &m).is_zero());
        }

        #[test]
        fn divrem_reconstructs(a in proptest::collection::vec(-5i64..6, 1..6), b in proptest::collection::vec(-5i64..6, 1..4)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            let (qt, r) = a.divrem(&b);
            let back = qt.mul(&b).coeffs().to_vec();
            let mut sum = vec![Rat::zero(); back.len().max(r.coeffs().len())];
            for (i, c) in back.iter().enumerate() { sum[i] += c; }
            for (i, c) in r.coeffs().iter().enumerate() { sum[i] += c; }
            prop_assert_eq!(Poly::new(sum), a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
