//! Extended Tutte invariants in the sixteen parameters
//! `w, x, y, z, a, …, l`.

use crate::algebra::{Cyclotomic6, MultiPoly16, ParamSeq16, ParamValue, Ring, PARAM_NAMES};
use crate::dimap::{AlternatingDimap, EdgeId};
use crate::error::{Error, Result};
use crate::reduce::EdgeClass;

use super::recurrence::{
    all_orderings, derived, DerivedSet, EvalOptions, Recurrence, DEFAULT_ORDER_BOUND,
};

/// The recurrence with weights in the order of [`PARAM_NAMES`].
pub fn eti_recurrence<R: Ring>(p: &[R; 16]) -> Recurrence<R> {
    let [w, x, y, z, a, b, c, d, e, f, g, h, i, j, k, l] = p.clone();
    let zero = R::zero_val;
    Recurrence::from_fn(|class| match class {
        EdgeClass::Ultraloop => [w.clone(), zero(), zero()],
        EdgeClass::Proper1Loop => [x.clone(), zero(), zero()],
        EdgeClass::ProperOmegaLoop => [y.clone(), zero(), zero()],
        EdgeClass::ProperOmega2Loop => [z.clone(), zero(), zero()],
        EdgeClass::Proper1Semiloop => [a.clone(), b.clone(), c.clone()],
        EdgeClass::ProperOmegaSemiloop => [d.clone(), e.clone(), f.clone()],
        EdgeClass::ProperOmega2Semiloop => [g.clone(), h.clone(), i.clone()],
        EdgeClass::ProperEdge => [j.clone(), k.clone(), l.clone()],
    })
}

/// Free symbols become variables, numbers become constants.
fn polynomial_weights(p: &ParamSeq16) -> Result<[MultiPoly16; 16]> {
    let mut out: [MultiPoly16; 16] = std::array::from_fn(MultiPoly16::var);
    for (i, slot) in out.iter_mut().enumerate() {
        match p.get(i) {
            ParamValue::Symbol => {}
            ParamValue::Rational(r) => *slot = MultiPoly16::constant(r.clone()),
            ParamValue::Cyclotomic(c) => {
                let r = c.as_rational().ok_or_else(|| {
                    Error::FormatError(format!(
                        "parameter {} is irrational; evaluate numerically instead",
                        PARAM_NAMES[i]
                    ))
                })?;
                *slot = MultiPoly16::constant(r);
            }
        }
    }
    Ok(out)
}

/// The derived polynomial of `(D, order)`, with numeric entries of `p`
/// substituted. A fully numeric `p` gives a constant polynomial.
///
/// ```
/// use altdimap::algebra::ParamSeq16;
/// use altdimap::dimap::AlternatingDimap;
/// use altdimap::invariants::eti_derived;
///
/// let u = AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap();
/// let e = u.find_edge("e").unwrap();
/// assert_eq!(eti_derived(&u, &[e], &ParamSeq16::symbolic()).unwrap().to_string(), "w");
/// ```
pub fn eti_derived(d: &AlternatingDimap, order: &[EdgeId], p: &ParamSeq16) -> Result<MultiPoly16> {
    eti_derived_with(d, order, p, EvalOptions::default())
}

pub fn eti_derived_with(
    d: &AlternatingDimap,
    order: &[EdgeId],
    p: &ParamSeq16,
    opts: EvalOptions,
) -> Result<MultiPoly16> {
    derived(d, order, &eti_recurrence(&polynomial_weights(p)?), opts)
}

/// Numeric evaluation in ℚ(ζ₆) along one ordering.
pub fn eti_value(d: &AlternatingDimap, order: &[EdgeId], p: &ParamSeq16) -> Result<Cyclotomic6> {
    eti_value_with(d, order, p, EvalOptions::default())
}

pub fn eti_value_with(
    d: &AlternatingDimap,
    order: &[EdgeId],
    p: &ParamSeq16,
    opts: EvalOptions,
) -> Result<Cyclotomic6> {
    derived(d, order, &eti_recurrence(&p.cyclotomics()?), opts)
}

pub fn eti_all_orderings(d: &AlternatingDimap, p: &ParamSeq16) -> Result<DerivedSet<MultiPoly16>> {
    eti_all_orderings_with(d, p, EvalOptions::default(), DEFAULT_ORDER_BOUND)
}

pub fn eti_all_orderings_with(
    d: &AlternatingDimap,
    p: &ParamSeq16,
    opts: EvalOptions,
    bound: usize,
) -> Result<DerivedSet<MultiPoly16>> {
    all_orderings(d, &eti_recurrence(&polynomial_weights(p)?), opts, bound)
}

/// Numeric values over all orderings.
pub fn eti_all_values(d: &AlternatingDimap, p: &ParamSeq16) -> Result<DerivedSet<Cyclotomic6>> {
    all_orderings(
        d,
        &eti_recurrence(&p.cyclotomics()?),
        EvalOptions::default(),
        DEFAULT_ORDER_BOUND,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellDefinedness {
    pub well_defined: bool,
    /// Two orderings with different values.
    pub witness: Option<(Vec<EdgeId>, Vec<EdgeId>)>,
}

impl WellDefinedness {
    fn from_set<V: PartialEq>(s: &DerivedSet<V>) -> Self {
        WellDefinedness {
            well_defined: s.len() <= 1,
            witness: s.disagreement().map(|(a, b)| (a.to_vec(), b.to_vec())),
        }
    }
}

pub fn eti_well_defined(d: &AlternatingDimap, p: &ParamSeq16) -> Result<WellDefinedness> {
    let set = if p.is_numeric() {
        WellDefinedness::from_set(&eti_all_values(d, p)?)
    } else {
        WellDefinedness::from_set(&eti_all_orderings(d, p)?)
    };
    Ok(set)
}

fn nonzero_wxyz(v: &[Cyclotomic6; 16]) -> Vec<String> {
    ["w", "x", "y", "z"]
        .iter()
        .zip(v)
        .filter(|(_, c)| c.is_zero_val())
        .map(|(n, _)| format!("{n} != 0"))
        .collect()
}

/// `w^k x^(is−k) y^(af−k) z^(cf−k)`, with `0^0 = 1`.
fn monomial_value(d: &AlternatingDimap, v: &[Cyclotomic6; 16]) -> Cyclotomic6 {
    let s = d.stats();
    let k = s.k as u32;
    v[0].pow(k)
        .mul(&v[1].pow(s.is as u32 - k))
        .mul(&v[2].pow(s.af as u32 - k))
        .mul(&v[3].pow(s.cf as u32 - k))
}

/// The value of the unique invariant when `w, x, y, z` are nonzero and the
/// four parameter identities hold.
pub fn eti_closed_form(d: &AlternatingDimap, p: &ParamSeq16) -> Result<Cyclotomic6> {
    let v = p.cyclotomics()?;
    let mut failing = nonzero_wxyz(&v);
    failing.extend(p.check_eti_conditions()?.failing());
    if !failing.is_empty() {
        return Err(Error::ConditionsViolated(failing));
    }
    Ok(monomial_value(d, &v))
}

/// Which of `x, y, z` vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    XYZ,
    XY,
    XZ,
    YZ,
    X,
    Y,
    Z,
}

impl Regime {
    pub const ALL: [Regime; 7] = [
        Regime::XYZ,
        Regime::XY,
        Regime::XZ,
        Regime::YZ,
        Regime::X,
        Regime::Y,
        Regime::Z,
    ];

    /// The parameters that vanish by definition of the regime.
    pub fn zero_vars(self) -> &'static [&'static str] {
        match self {
            Regime::XYZ => &["x", "y", "z"],
            Regime::XY => &["x", "y"],
            Regime::XZ => &["x", "z"],
            Regime::YZ => &["y", "z"],
            Regime::X => &["x"],
            Regime::Y => &["y"],
            Regime::Z => &["z"],
        }
    }

    /// Further parameters that must vanish.
    pub fn forced_zero(self) -> &'static [&'static str] {
        match self {
            Regime::XYZ => &["a", "f", "h"],
            Regime::XY => &["a", "c", "d", "f", "h"],
            Regime::XZ => &["a", "b", "f", "g", "h"],
            Regime::YZ => &["a", "e", "f", "h", "i"],
            Regime::X => &["d", "f", "g", "h", "j"],
            Regime::Y => &["a", "c", "h", "i", "l"],
            Regime::Z => &["a", "b", "e", "f", "k"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::XYZ => "x=y=z=0",
            Regime::XY => "x=y=0",
            Regime::XZ => "x=z=0",
            Regime::YZ => "y=z=0",
            Regime::X => "x=0",
            Regime::Y => "y=0",
            Regime::Z => "z=0",
        }
    }

    pub fn detect(p: &ParamSeq16) -> Result<Regime> {
        let v = p.cyclotomics()?;
        let (x, y, z) = (v[1].is_zero_val(), v[2].is_zero_val(), v[3].is_zero_val());
        Ok(match (x, y, z) {
            (true, true, true) => Regime::XYZ,
            (true, true, false) => Regime::XY,
            (true, false, true) => Regime::XZ,
            (false, true, true) => Regime::YZ,
            (true, false, false) => Regime::X,
            (false, true, false) => Regime::Y,
            (false, false, true) => Regime::Z,
            (false, false, false) => return Err(Error::NoMatchingRegime),
        })
    }

    /// The first unmet constraint of this regime, if any.
    pub fn violation(self, p: &ParamSeq16) -> Result<Option<String>> {
        let v = p.cyclotomics()?;
        if v[0].is_zero_val() {
            return Ok(Some("w != 0".into()));
        }
        if let Some(n) = self.forced_zero().iter().find(|n| !p.is_zero_at(n)) {
            return Ok(Some(format!("{n} = 0")));
        }
        let c = p.check_eti_conditions()?;
        let identity = match self {
            Regime::X => Some((c.one_semiloop, "yz = aw + by + cz")),
            Regime::Y => Some((c.omega_semiloop, "xz = dz + ex + fw")),
            Regime::Z => Some((c.omega2_semiloop, "xy = gy + hw + ix")),
            _ => None,
        };
        Ok(identity.filter(|(ok, _)| !ok).map(|(_, s)| s.to_string()))
    }
}

/// The invariant's value when some of `x, y, z` vanish and the matching
/// regime's constraints hold. Every regime's value is the closed-form
/// monomial read with `0^0 = 1`, so a vanishing variable with a positive
/// exponent gives zero.
pub fn eti_degenerate(d: &AlternatingDimap, p: &ParamSeq16) -> Result<Cyclotomic6> {
    let regime = Regime::detect(p)?;
    if let Some(why) = regime.violation(p)? {
        return Err(Error::RegimeConstraintViolated(format!(
            "{}: {why}",
            regime.name()
        )));
    }
    Ok(monomial_value(d, &p.cyclotomics()?))
}
