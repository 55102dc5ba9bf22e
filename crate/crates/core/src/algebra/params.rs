use std::fmt;

use num_traits::Zero;

use super::poly::NAMES16;
use super::{Cyclotomic6, Field, MultiPoly16, Rational, Ring};
use crate::error::{Error, Result};

pub const PARAM_NAMES: [&str; 16] = NAMES16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamValue {
    /// The parameter stands for itself.
    Symbol,
    Rational(Rational),
    Cyclotomic(Cyclotomic6),
}

impl ParamValue {
    fn as_cyclotomic(&self) -> Option<Cyclotomic6> {
        match self {
            ParamValue::Symbol => None,
            ParamValue::Rational(r) => Some(Cyclotomic6::from_rational(r)),
            ParamValue::Cyclotomic(c) => Some(c.clone()),
        }
    }
}

/// An assignment to `(w, x, y, z, a, b, c, d, e, f, g, h, i, j, k, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamSeq16 {
    values: Vec<ParamValue>,
}

/// Which of the four parameter identities hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EtiConditions {
    /// `xyz = jyz + kxy + lxz`
    pub proper_edge: bool,
    /// `yz = aw + by + cz`
    pub one_semiloop: bool,
    /// `xz = dz + ex + fw`
    pub omega_semiloop: bool,
    /// `xy = gy + hw + ix`
    pub omega2_semiloop: bool,
}

impl EtiConditions {
    pub fn all(&self) -> bool {
        self.proper_edge && self.one_semiloop && self.omega_semiloop && self.omega2_semiloop
    }

    /// The identities that fail, written out.
    pub fn failing(&self) -> Vec<String> {
        [
            ("xyz = jyz + kxy + lxz", self.proper_edge),
            ("yz = aw + by + cz", self.one_semiloop),
            ("xz = dz + ex + fw", self.omega_semiloop),
            ("xy = gy + hw + ix", self.omega2_semiloop),
        ]
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n.to_string())
        .collect()
    }
}

/// Index of a parameter name.
pub fn param_index(name: &str) -> Option<usize> {
    PARAM_NAMES.iter().position(|&n| n == name)
}

impl ParamSeq16 {
    pub fn symbolic() -> Self {
        ParamSeq16 {
            values: vec![ParamValue::Symbol; 16],
        }
    }

    pub fn from_rationals(vals: &[Rational; 16]) -> Self {
        ParamSeq16 {
            values: vals.iter().cloned().map(ParamValue::Rational).collect(),
        }
    }

    pub fn from_ints(vals: [i64; 16]) -> Self {
        Self::from_rationals(&vals.map(super::int))
    }

    pub fn get(&self, i: usize) -> &ParamValue {
        &self.values[i]
    }

    pub fn get_named(&self, name: &str) -> Option<&ParamValue> {
        param_index(name).map(|i| &self.values[i])
    }

    pub fn set(&mut self, i: usize, v: ParamValue) {
        self.values[i] = v;
    }

    pub fn set_named(&mut self, name: &str, v: ParamValue) -> Result<()> {
        let i = param_index(name)
            .ok_or_else(|| Error::FormatError(format!("unknown parameter {name}")))?;
        self.values[i] = v;
        Ok(())
    }

    pub fn is_numeric(&self) -> bool {
        self.values.iter().all(|v| !matches!(v, ParamValue::Symbol))
    }

    fn first_symbol(&self) -> Option<&'static str> {
        self.values
            .iter()
            .position(|v| matches!(v, ParamValue::Symbol))
            .map(|i| PARAM_NAMES[i])
    }

    pub fn cyclotomics(&self) -> Result<[Cyclotomic6; 16]> {
        if let Some(n) = self.first_symbol() {
            return Err(Error::SymbolicEntry(n.into()));
        }
        Ok(std::array::from_fn(|i| {
            self.values[i].as_cyclotomic().unwrap()
        }))
    }

    pub fn rationals(&self) -> Result<[Rational; 16]> {
        let c = self.cyclotomics()?;
        if let Some(i) = c.iter().position(|v| v.as_rational().is_none()) {
            return Err(Error::FormatError(format!(
                "parameter {} is not rational",
                PARAM_NAMES[i]
            )));
        }
        Ok(c.map(|v| v.as_rational().unwrap()))
    }

    /// Numeric value of entry `i`, if any.
    pub fn value(&self, i: usize) -> Option<Cyclotomic6> {
        self.values[i].as_cyclotomic()
    }

    pub fn is_zero_at(&self, name: &str) -> bool {
        param_index(name)
            .and_then(|i| self.value(i))
            .is_some_and(|v| v.is_zero_val())
    }

    /// Fills in `a, f, h, j` so that all four parameter identities hold,
    /// given `(w, x, y, z)` with `w, y, z` nonzero and the free entries
    /// `(b, c, d, e, g, i, k, l)`.
    pub fn admissible(wxyz: [Rational; 4], free: [Rational; 8]) -> Result<Self> {
        let [w, x, y, z] = wxyz;
        let [b, c, d, e, g, i, k, l] = free;
        for (n, v) in [("w", &w), ("y", &y), ("z", &z)] {
            if v.is_zero() {
                return Err(Error::ConditionsViolated(vec![format!("{n} != 0")]));
            }
        }
        let a = (&y * &z - &b * &y - &c * &z) / &w;
        let f = (&x * &z - &d * &z - &e * &x) / &w;
        let h = (&x * &y - &g * &y - &i * &x) / &w;
        let j = (&x * &y * &z - &k * &x * &y - &l * &x * &z) / (&y * &z);
        Ok(Self::from_rationals(&[
            w, x, y, z, a, b, c, d, e, f, g, h, i, j, k, l,
        ]))
    }

    pub fn check_eti_conditions(&self) -> Result<EtiConditions> {
        let v = self.cyclotomics()?;
        let [w, x, y, z, a, b, c, d, e, f, g, h, i, j, k, l] = v;
        let m = |p: &Cyclotomic6, q: &Cyclotomic6| p.mul(q);
        let s3 = |p: Cyclotomic6, q: Cyclotomic6, r: Cyclotomic6| p.add(&q).add(&r);
        Ok(EtiConditions {
            proper_edge: m(&m(&x, &y), &z)
                == s3(m(&j, &m(&y, &z)), m(&k, &m(&x, &y)), m(&l, &m(&x, &z))),
            one_semiloop: m(&y, &z) == s3(m(&a, &w), m(&b, &y), m(&c, &z)),
            omega_semiloop: m(&x, &z) == s3(m(&d, &z), m(&e, &x), m(&f, &w)),
            omega2_semiloop: m(&x, &y) == s3(m(&g, &y), m(&h, &w), m(&i, &x)),
        })
    }

    /// The sequence whose `i`-th entry is this sequence's entry named
    /// `order[i]`.
    pub fn reordered(&self, order: &[&str; 16]) -> Self {
        ParamSeq16 {
            values: order
                .iter()
                .map(|n| self.values[param_index(n).expect("parameter name")].clone())
                .collect(),
        }
    }

    /// Substitutes the numeric entries, leaving symbols in place. Fails on
    /// non-rational values.
    pub fn substitute(&self, p: &MultiPoly16) -> Result<MultiPoly16> {
        let mut vals: Vec<Option<Rational>> = Vec::with_capacity(16);
        for (i, v) in self.values.iter().enumerate() {
            vals.push(match v {
                ParamValue::Symbol => None,
                ParamValue::Rational(r) => Some(r.clone()),
                ParamValue::Cyclotomic(c) => Some(c.as_rational().ok_or_else(|| {
                    Error::FormatError(format!("parameter {} is not rational", PARAM_NAMES[i]))
                })?),
            });
        }
        let mut out = MultiPoly16::zero();
        for (e, c) in p.terms() {
            let mut coeff = c.clone();
            let mut rest = [0u16; 16];
            for i in 0..16 {
                match &vals[i] {
                    Some(r) => {
                        for _ in 0..e[i] {
                            coeff *= r.clone();
                        }
                    }
                    None => rest[i] = e[i],
                }
            }
            if !coeff.is_zero() {
                out = out.add(&MultiPoly16::monomial(rest, coeff));
            }
        }
        Ok(out)
    }

    /// Full evaluation in ℚ(ζ₆).
    pub fn evaluate(&self, p: &MultiPoly16) -> Result<Cyclotomic6> {
        Ok(p.eval(&self.cyclotomics()?))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Symbol => f.write_str("symbol"),
            ParamValue::Rational(r) => f.write_str(&super::render_rational(r)),
            ParamValue::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn unit_assignment_satisfies_all() {
        // w x y z a b c d e f g h i j k l
        let p = ParamSeq16::from_ints([1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0]);
        assert!(p.check_eti_conditions().unwrap().all());
    }

    #[test]
    fn all_ones_fail_the_proper_edge_identity() {
        let c = ParamSeq16::from_ints([1; 16])
            .check_eti_conditions()
            .unwrap();
        assert!(!c.proper_edge);
        assert_eq!(c.failing().len(), 4);
    }

    #[test]
    fn symbols_are_rejected() {
        assert!(matches!(
            ParamSeq16::symbolic().check_eti_conditions(),
            Err(Error::SymbolicEntry(_))
        ));
    }

    #[test]
    fn symbolic_substitution_is_identity() {
        let p: MultiPoly16 = "a*w^2 + b*w*y + c*w*z".parse().unwrap();
        assert_eq!(ParamSeq16::symbolic().substitute(&p).unwrap(), p);
        let mut q = ParamSeq16::symbolic();
        q.set_named("w", ParamValue::Rational(int(2))).unwrap();
        assert_eq!(q.substitute(&p).unwrap().to_string(), "2*b*y + 2*c*z + 4*a");
    }
}
