use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{parse_rational, render_rational, Field, Rational, Ring};
use crate::error::{Error, Result};

/// Sparse polynomial in `N` variables with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<[u16; N], Rational>,
}

/// Polynomial in `w, x, y, z, a, …, l`.
///
/// ```
/// use altdimap::algebra::MultiPoly16;
///
/// let p: MultiPoly16 = "j*w*y*z + k*w*x*y + l*w*x*z".parse().unwrap();
/// assert_eq!(p.to_string(), "j*w*y*z + k*w*x*y + l*w*x*z");
/// ```
pub type MultiPoly16 = Poly<16>;

/// Polynomial in `x, y`.
pub type BiPoly = Poly<2>;

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn monomial(exps: [u16; N], c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16; N], &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u16; N]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(degree).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = *e1;
                for i in 0..N {
                    e[i] += e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn add_term(&mut self, e: [u16; N], c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Evaluates with `vals[i]` substituted for variable `i`.
    pub fn eval<F: Field>(&self, vals: &[F; N]) -> F {
        let mut acc = F::zero_val();
        for (e, c) in &self.terms {
            let mut t = F::from_rational(c);
            for i in 0..N {
                if e[i] > 0 {
                    t = t.mul(&vals[i].pow(e[i] as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Renames variable `i` to `map[i]`.
    pub fn permute_vars(&self, map: &[usize; N]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut f = [0; N];
            for i in 0..N {
                f[map[i]] += e[i];
            }
            out.add_term(f, c.clone());
        }
        out
    }

    fn render_with(
        &self,
        names: &[&str; N],
        print_order: &[usize; N],
        cmp: fn(&[u16; N], &[u16; N]) -> Ordering,
    ) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| cmp(a.0, b.0));
        let mut out = String::new();
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            let a = c.abs();
            let constant = e.iter().all(|&x| x == 0);
            if constant || !a.is_one() {
                factors.push(render_rational(&a));
            }
            for &i in print_order {
                match e[i] {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    p => factors.push(format!("{}^{}", names[i], p)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    fn parse_with(s: &str, names: &[&str; N]) -> Result<Self> {
        let bad = |why: &str| Error::FormatError(format!("polynomial {s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = Rational::one();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if !first {
                return Err(bad("expected + or -"));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let mut e = [0u16; N];
            let mut c = sign;
            for factor in term.split('*') {
                let (base, pow) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u16>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                if let Some(i) = names.iter().position(|&n| n == base) {
                    e[i] += pow;
                } else if let Some(r) = parse_rational(base) {
                    for _ in 0..pow {
                        c *= r.clone();
                    }
                } else {
                    return Err(bad(&format!("unknown factor {factor:?}")));
                }
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn degree<const N: usize>(e: &[u16; N]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl<const N: usize> Ring for Poly<N> {
    fn zero_val() -> Self {
        Poly::zero()
    }
    fn one_val() -> Self {
        Poly::one()
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn is_zero_val(&self) -> bool {
        Poly::is_zero(self)
    }
}

pub(crate) const NAMES16: [&str; 16] = [
    "w", "x", "y", "z", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
];
const PRINT16: [usize; 16] = [4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3];

/// Higher degree first; within a degree, compare exponents from the last
/// variable `l` back to `w`, smaller first.
fn cmp16(a: &[u16; 16], b: &[u16; 16]) -> Ordering {
    degree(b)
        .cmp(&degree(a))
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// Higher degree first, then higher power of `x` first.
fn cmp2(a: &[u16; 2], b: &[u16; 2]) -> Ordering {
    degree(b).cmp(&degree(a)).then_with(|| b[0].cmp(&a[0]))
}

impl MultiPoly16 {
    pub fn var_named(name: &str) -> Option<Self> {
        NAMES16.iter().position(|&n| n == name).map(Self::var)
    }

    pub fn render(&self) -> String {
        self.render_with(&NAMES16, &PRINT16, cmp16)
    }
}

impl BiPoly {
    pub fn x() -> Self {
        Self::var(0)
    }

    pub fn y() -> Self {
        Self::var(1)
    }

    pub fn render(&self) -> String {
        self.render_with(&["x", "y"], &[0, 1], cmp2)
    }

    /// Swaps `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        self.permute_vars(&[1, 0])
    }
}

impl fmt::Display for MultiPoly16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for MultiPoly16 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, &NAMES16)
    }
}

impl FromStr for BiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, &["x", "y"])
    }
}
