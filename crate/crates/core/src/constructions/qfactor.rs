use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::arith::{is_sum_of_two_squares, squarefree_part, valuation};
use super::factor::is_prime;
use crate::error::{Error, Result};
use crate::sgntrop::{Gamma, Sign, SignedValueHyperfield, StElem, StSet};

pub type Rational = Ratio<i64>;

/// Numerators and denominators searched for the subgroups whose sums have a
/// closed form; the search there is only a cross-check.
pub const CLOSED_FORM_SEARCH_CAP: i64 = 20;

/// A multiplicative subgroup `T` of `Q×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QSubgroup {
    Positives,
    Squares,
    /// `{a > 0 : v_p(a) = 0}`.
    PositivePUnits(u64),
}

impl QSubgroup {
    pub fn validate(self) -> Result<Self> {
        match self {
            QSubgroup::PositivePUnits(p) if !is_prime(p) => Err(Error::NotPrime(p)),
            _ => Ok(self),
        }
    }

    pub fn contains(self, a: Rational) -> bool {
        if *a.numer() == 0 {
            return false;
        }
        match self {
            QSubgroup::Positives => a > Rational::from_integer(0),
            QSubgroup::Squares => {
                let (n, d) = (*a.numer(), *a.denom());
                n > 0 && super::arith::is_square(n) && super::arith::is_square(d)
            }
            QSubgroup::PositivePUnits(p) => {
                a > Rational::from_integer(0)
                    && valuation(*a.numer(), p) == 0
                    && valuation(*a.denom(), p) == 0
            }
        }
    }

    pub fn name(self) -> String {
        match self {
            QSubgroup::Positives => "Q/positives".into(),
            QSubgroup::Squares => "Q/squares".into(),
            QSubgroup::PositivePUnits(p) => format!("Q/positive {p}-units"),
        }
    }
}

/// Canonical representative of a class `aT`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QClass {
    Zero,
    /// Class modulo the positives.
    Sign(Sign),
    /// Signed squarefree integer, class modulo the squares.
    Squarefree(i64),
    /// Sign and `p`-adic value, class modulo the positive `p`-units.
    SignedValue(Sign, i64),
}

impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QClass::Zero => write!(f, "[0]"),
            QClass::Sign(s) => write!(f, "[{s}]"),
            QClass::Squarefree(n) => write!(f, "[{n}]"),
            QClass::SignedValue(s, v) => write!(f, "({s},{v})"),
        }
    }
}

impl QClass {
    /// A rational in the class.
    pub fn representative(&self, t: QSubgroup) -> Rational {
        match (self, t) {
            (QClass::Zero, _) => Rational::from_integer(0),
            (QClass::Sign(s), _) => Rational::from_integer(s.as_i8() as i64),
            (QClass::Squarefree(n), _) => Rational::from_integer(*n),
            (QClass::SignedValue(s, v), QSubgroup::PositivePUnits(p)) => {
                let pv = (p as i64).pow(v.unsigned_abs() as u32);
                let mag = if *v >= 0 {
                    Rational::from_integer(pv)
                } else {
                    Rational::new(1, pv)
                };
                mag * (s.as_i8() as i64)
            }
            (QClass::SignedValue(..), _) => panic!("signed-value class outside p-units"),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            QClass::Zero => None,
            QClass::Sign(s) | QClass::SignedValue(s, _) => Some(*s),
            QClass::Squarefree(n) => Sign::of(*n),
        }
    }

    fn matches(&self, t: QSubgroup) -> bool {
        matches!(
            (self, t),
            (QClass::Zero, _)
                | (QClass::Sign(_), QSubgroup::Positives)
                | (QClass::Squarefree(_), QSubgroup::Squares)
                | (QClass::SignedValue(..), QSubgroup::PositivePUnits(_))
        )
    }

    /// The element of the signed-value hyperfield behind a `p`-unit class.
    pub fn to_signed_value(&self) -> Option<StElem> {
        match self {
            QClass::Zero => Some(StElem::Zero),
            QClass::SignedValue(s, v) => Some(StElem::Nz(*s, Gamma::scalar(*v))),
            _ => None,
        }
    }
}

/// `[a]_T`.
pub fn q_factor_class(a: Rational, t: QSubgroup) -> QClass {
    let (n, d) = (*a.numer(), *a.denom());
    let Some(sign) = Sign::of(n) else {
        return QClass::Zero;
    };
    match t {
        QSubgroup::Positives => QClass::Sign(sign),
        QSubgroup::Squares => QClass::Squarefree(squarefree_part(n * d)),
        QSubgroup::PositivePUnits(p) => QClass::SignedValue(sign, valuation(n, p) - valuation(d, p)),
    }
}

/// Exact description of a sum when one is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedForm {
    Finite(BTreeSet<QClass>),
    /// Elements of the `(sign, v_p)` hyperfield.
    SignedValue(StSet),
    /// `{[c] : [c·scale] is a positive sum of two squares}`, the sum `[a] + [a]`
    /// for `a = scale`.
    ScaledTwoSquares(i64),
}

impl ClosedForm {
    pub fn contains(&self, c: &QClass) -> bool {
        match (self, c) {
            (ClosedForm::Finite(s), _) => s.contains(c),
            (ClosedForm::SignedValue(s), _) => c.to_signed_value().is_some_and(|x| s.contains(x)),
            (ClosedForm::ScaledTwoSquares(a), QClass::Squarefree(n)) => {
                let m = squarefree_part(n * a);
                m > 0 && is_sum_of_two_squares(m)
            }
            (ClosedForm::ScaledTwoSquares(_), _) => false,
        }
    }
}

/// Result of `[x]_T + [y]_T` under a height bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedHSet {
    /// Classes realized by the search, each with a witness pair.
    pub members: BTreeSet<QClass>,
    /// `witnesses[c] = (t, u)` with `[x·t + y·u] = c`.
    pub witnesses: BTreeMap<QClass, (Rational, Rational)>,
    pub closed_form: Option<ClosedForm>,
    /// Whether membership is decided exactly.
    pub complete: bool,
    pub height_bound: u64,
}

impl BoundedHSet {
    /// `Some(answer)` when membership is known, `None` when the bounded
    /// search did not find the class and no closed form applies.
    pub fn contains(&self, c: &QClass) -> Option<bool> {
        if let Some(cf) = &self.closed_form {
            return Some(cf.contains(c));
        }
        self.members.contains(c).then_some(true)
    }

    /// Every searched member lies in the closed form, when there is one.
    pub fn consistent(&self) -> bool {
        self.closed_form
            .as_ref()
            .is_none_or(|cf| self.members.iter().all(|c| cf.contains(c)))
    }
}

/// Elements of `T` with numerator and denominator at most `bound`, in
/// lowest terms, ascending by height then value.
pub fn subgroup_elements(t: QSubgroup, bound: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for n in 1..=bound {
        for d in 1..=bound {
            if n.gcd(&d) != 1 {
                continue;
            }
            let r = Rational::new(n, d);
            if t.contains(r) {
                out.push(r);
            }
        }
    }
    out.sort_by_key(|r| (r.numer().max(r.denom()).to_owned(), *r));
    out
}

/// `[x]_T + [y]_T = {[x·t + y·u]_T : t, u ∈ T}`.
///
/// Positives and positive `p`-units have closed forms; squares are searched
/// with `t = a²/b²`, `a², b² ≤ height_bound`, and `[a] + [a]` is decided by the
/// two-squares criterion.
pub fn q_factor_sum(x: &QClass, y: &QClass, t: QSubgroup, height_bound: u64) -> Result<BoundedHSet> {
    let t = t.validate()?;
    if height_bound == 0 {
        return Err(Error::Precondition("height bound must be at least 1".into()));
    }
    if !x.matches(t) || !y.matches(t) {
        return Err(Error::Malformed(format!("classes {x}, {y} do not belong to {}", t.name())));
    }
    let search_bound = match t {
        QSubgroup::Squares => height_bound as i64,
        _ => (height_bound as i64).min(CLOSED_FORM_SEARCH_CAP),
    };
    let ts = subgroup_elements(t, search_bound);
    let (xr, yr) = (x.representative(t), y.representative(t));
    let mut witnesses = BTreeMap::new();
    for &a in &ts {
        for &b in &ts {
            let c = q_factor_class(xr * a + yr * b, t);
            witnesses.entry(c).or_insert((a, b));
        }
    }
    if *x == QClass::Zero || *y == QClass::Zero {
        // 0 + y = {y}; the search already found it with t = u = 1.
        witnesses.retain(|c, _| *c == if *x == QClass::Zero { *y } else { *x });
    }
    let closed_form = match t {
        QSubgroup::Positives => Some(ClosedForm::Finite(sign_sum(x.sign(), y.sign()))),
        QSubgroup::PositivePUnits(p) => {
            let f = SignedValueHyperfield::padic(p)?;
            let (a, b) = (x.to_signed_value(), y.to_signed_value());
            Some(ClosedForm::SignedValue(f.add(a.expect("p-unit class"), b.expect("p-unit class"))))
        }
        QSubgroup::Squares => match (x, y) {
            (QClass::Zero, _) | (_, QClass::Zero) => {
                Some(ClosedForm::Finite(witnesses.keys().copied().collect()))
            }
            (QClass::Squarefree(a), QClass::Squarefree(b)) if a == b => {
                Some(ClosedForm::ScaledTwoSquares(*a))
            }
            _ => None,
        },
    };
    Ok(BoundedHSet {
        members: witnesses.keys().copied().collect(),
        witnesses,
        complete: closed_form.is_some(),
        closed_form,
        height_bound,
    })
}

fn sign_sum(a: Option<Sign>, b: Option<Sign>) -> BTreeSet<QClass> {
    match (a, b) {
        (None, None) => [QClass::Zero].into(),
        (Some(s), None) | (None, Some(s)) => [QClass::Sign(s)].into(),
        (Some(s), Some(t)) if s == t => [QClass::Sign(s)].into(),
        _ => [QClass::Zero, QClass::Sign(Sign::Neg), QClass::Sign(Sign::Pos)].into(),
    }
}

/// Recomputes `[x·t + y·u]` for every stored witness.
pub fn verify_witnesses(x: &QClass, y: &QClass, t: QSubgroup, sum: &BoundedHSet) -> bool {
    let (xr, yr) = (x.representative(t), y.representative(t));
    sum.witnesses
        .iter()
        .all(|(c, &(a, b))| t.contains(a) && t.contains(b) && q_factor_class(xr * a + yr * b, t) == *c)
}
