//! Exact rational scalars.
//!
//! Values that fit in a pair of `i64` stay on a fast path; anything larger
//! spills into an arbitrary-precision `BigRational`. The representation is
//! canonical (lowest terms, positive denominator, small whenever it fits),
//! so derived equality and hashing are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

impl Rat {
    pub fn zero() -> Rat {
        Rat(Repr::Small(0, 1))
    }

    pub fn one() -> Rat {
        Rat(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Rat {
        if n == i64::MIN {
            return Rat::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        Rat(Repr::Small(n, 1))
    }

    /// `num / den`. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Rat {
        Rat::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rat::zero();
        }
        let g = n.gcd(&d);
        if g != 1 {
            n /= g;
            d /= g;
        }
        if fits(n) && fits(d) {
            Rat(Repr::Small(n as i64, d as i64))
        } else {
            Rat(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))))
        }
    }

    /// Canonicalizes an arbitrary-precision value.
    pub fn from_big(r: BigRational) -> Rat {
        // BigRational::new reduces; new_raw values may come from arithmetic that already did.
        let r = if r.denom().is_negative() || !r.numer().gcd(r.denom()).is_one() {
            BigRational::new(r.numer().clone(), r.denom().clone())
        } else {
            r
        };
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rat(Repr::Small(n, d));
            }
        }
        Rat(Repr::Big(Box::new(r)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "reciprocal of zero");
                Rat::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(b) => Rat::from_big(b.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n as i64)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(n))
    }
}

fn add_ref(a: &Rat, b: &Rat) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            if *d1 == 1 && *d2 == 1 {
                return Rat::from_i128(*n1 as i128 + *n2 as i128, 1);
            }
            let n = *n1 as i128 * *d2 as i128 + *n2 as i128 * *d1 as i128;
            let d = *d1 as i128 * *d2 as i128;
            Rat::from_i128(n, d)
        }
        _ => Rat::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_ref(a: &Rat, b: &Rat) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            if *n1 == 0 || *n2 == 0 {
                return Rat::zero();
            }
            let g1 = (*n1 as i128).gcd(&(*d2 as i128));
            let g2 = (*n2 as i128).gcd(&(*d1 as i128));
            let n = (*n1 as i128 / g1) * (*n2 as i128 / g2);
            let d = (*d1 as i128 / g2) * (*d2 as i128 / g1);
            Rat::from_i128(n, d)
        }
        _ => Rat::from_big(a.to_big() * b.to_big()),
    }
}

fn neg_ref(a: &Rat) -> Rat {
    match &a.0 {
        Repr::Small(n, d) => Rat(Repr::Small(-n, *d)),
        Repr::Big(b) => Rat::from_big(-(**b).clone()),
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        neg_ref(self)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        neg_ref(&self)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                $f(self, rhs)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                $f(self, &rhs)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                $f(&self, rhs)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                $f(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, |a: &Rat, b: &Rat| add_ref(a, &neg_ref(b)));
binop!(Mul, mul, mul_ref);
binop!(Div, div, |a: &Rat, b: &Rat| mul_ref(a, &b.recip()));

macro_rules! assignop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rat> for Rat {
            fn $m(&mut self, rhs: &Rat) {
                *self = &*self $op rhs;
            }
        }
        impl $tr<Rat> for Rat {
            fn $m(&mut self, rhs: Rat) {
                *self = &*self $op &rhs;
            }
        }
    };
}

assignop!(AddAssign, add_assign, +);
assignop!(SubAssign, sub_assign, -);
assignop!(MulAssign, mul_assign, *);
assignop!(DivAssign, div_assign, /);

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |a, b| a * b)
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
                (*n1 as i128 * *d2 as i128).cmp(&(*n2 as i128 * *d1 as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rat {
    /// `n` for integers, `n/d` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt, ParseRatError> {
            let t = t.trim();
            let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigInt>().map_err(|_| err())
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout tests and constructors.
pub fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -5), Rat::zero());
        assert_eq!(Rat::new(0, 7).to_string(), "0");
    }

    #[test]
    fn overflow_spills_and_comes_back() {
        let big = Rat::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/6".parse::<Rat>().unwrap(), Rat::new(1, 2));
        assert_eq!("-7".parse::<Rat>().unwrap(), q(-7));
        assert_eq!(Rat::new(-5, 3).to_string(), "-5/3");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
        let huge = "123456789012345678901234567890/11";
        assert_eq!(huge.parse::<Rat>().unwrap().to_string(), huge);
    }

    fn small() -> impl Strategy<Value = Rat> {
        (-1_000_000_000_000i64..1_000_000_000_000, 1i64..1_000_000_000_000)
            .prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn field_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn matches_bigrational(a in small(), b in small()) {
            prop_assert_eq!((&a * &b).to_big(), a.to_big() * b.to_big());
            prop_assert_eq!((&a + &b).to_big(), a.to_big() + b.to_big());
            prop_assert_eq!(a.cmp(&b), a.to_big().cmp(&b.to_big()));
        }

        #[test]
        fn display_round_trip(a in small()) {
            prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
        }
    }
}
