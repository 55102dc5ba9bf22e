//! Exact arithmetic: rationals, the field ℚ(ζ₆), sparse polynomials in the
//! sixteen invariant parameters and in `(x, y)`, and parameter sequences.

mod cyclotomic;
mod params;
mod poly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use cyclotomic::{zeta_pow, Cyclotomic6};
pub use params::{EtiConditions, ParamSeq16, ParamValue, PARAM_NAMES};
pub use poly::{BiPoly, MultiPoly16, Poly};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The commutative ring operations the invariant recursions need.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_val() -> Self;
    fn one_val() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero_val(&self) -> bool;

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one_val();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_val() -> Self {
        Zero::zero()
    }
    fn one_val() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_val(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Rings that can also subtract and divide by nonzero elements.
pub trait Field: Ring {
    fn sub(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
