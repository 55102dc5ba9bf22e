use std::fmt;

use super::{int, render_rational, Field, Rational, Ring};

/// `p + q·ζ` with ζ a primitive sixth root of unity, so `ζ² = ζ − 1`.
///
/// ```
/// use altdimap::algebra::{zeta_pow, Cyclotomic6, Ring};
///
/// let z = Cyclotomic6::zeta();
/// assert_eq!(z.mul(&z.conj()), Cyclotomic6::one());
/// assert_eq!(zeta_pow(3), Cyclotomic6::from_int(-1));
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic6 {
    pub p: Rational,
    pub q: Rational,
}

impl Cyclotomic6 {
    pub fn new(p: Rational, q: Rational) -> Self {
        Cyclotomic6 { p, q }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic6::new(int(n), int(0))
    }

    pub fn zero() -> Self {
        Cyclotomic6::from_int(0)
    }

    pub fn one() -> Self {
        Cyclotomic6::from_int(1)
    }

    pub fn zeta() -> Self {
        Cyclotomic6::new(int(0), int(1))
    }

    /// Complex conjugation, which maps ζ to ζ⁻¹ = 1 − ζ.
    pub fn conj(&self) -> Self {
        Cyclotomic6::new(&self.p + &self.q, -&self.q)
    }

    /// `p² + pq + q²`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p + &self.p * &self.q + &self.q * &self.q
    }

    pub fn as_rational(&self) -> Option<Rational> {
        num_traits::Zero::is_zero(&self.q).then(|| self.p.clone())
    }
}

impl Ring for Cyclotomic6 {
    fn zero_val() -> Self {
        Cyclotomic6::zero()
    }

    fn one_val() -> Self {
        Cyclotomic6::one()
    }

    fn add(&self, o: &Self) -> Self {
        Cyclotomic6::new(&self.p + &o.p, &self.q + &o.q)
    }

    fn mul(&self, o: &Self) -> Self {
        let qq = &self.q * &o.q;
        Cyclotomic6::new(&self.p * &o.p - &qq, &self.p * &o.q + &self.q * &o.p + qq)
    }

    fn is_zero_val(&self) -> bool {
        num_traits::Zero::is_zero(&self.p) && num_traits::Zero::is_zero(&self.q)
    }
}

impl Field for Cyclotomic6 {
    fn sub(&self, o: &Self) -> Self {
        Cyclotomic6::new(&self.p - &o.p, &self.q - &o.q)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero_val() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Cyclotomic6::new(c.p / &n, c.q / n))
    }

    fn from_rational(r: &Rational) -> Self {
        Cyclotomic6::new(r.clone(), int(0))
    }
}

/// ζⁿ, reduced using ζ⁶ = 1.
pub fn zeta_pow(n: i64) -> Cyclotomic6 {
    Cyclotomic6::zeta().pow(n.rem_euclid(6) as u32)
}

impl fmt::Display for Cyclotomic6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed};
        let q = &self.q;
        if q.is_zero_val() {
            return write!(f, "{}", render_rational(&self.p));
        }
        let zeta = if q.is_one() {
            "zeta".to_string()
        } else if (-q).is_one() {
            "-zeta".to_string()
        } else {
            format!("{}*zeta", render_rational(q))
        };
        if self.p.is_zero_val() {
            return write!(f, "{zeta}");
        }
        let p = render_rational(&self.p);
        if q.is_negative() {
            write!(f, "{p} - {}", zeta.trim_start_matches('-'))
        } else {
            write!(f, "{p} + {zeta}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_zeta() {
        assert_eq!(zeta_pow(0), Cyclotomic6::one());
        assert_eq!(zeta_pow(2), Cyclotomic6::new(int(-1), int(1)));
        assert_eq!(zeta_pow(3), Cyclotomic6::from_int(-1));
        assert_eq!(zeta_pow(6), Cyclotomic6::one());
        assert_eq!(zeta_pow(-1), Cyclotomic6::zeta().conj());
    }

    #[test]
    fn inverse_and_norm() {
        let a = Cyclotomic6::new(int(2), int(-3));
        assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic6::one());
        assert_eq!(a.mul(&a.conj()).as_rational(), Some(a.norm()));
    }

    #[test]
    fn sixth_root_points() {
        let (al, be) = (Cyclotomic6::zeta(), Cyclotomic6::zeta().conj());
        assert_eq!(al.mul(&be), Cyclotomic6::one());
        assert_eq!(al.add(&be), Cyclotomic6::one());
    }

    #[test]
    fn renders() {
        assert_eq!(zeta_pow(2).to_string(), "-1 + zeta");
        assert_eq!(Cyclotomic6::zeta().conj().to_string(), "1 - zeta");
        assert_eq!(Cyclotomic6::from_int(-1).to_string(), "-1");
    }
}
