use num_rational::Ratio;
use serde::Serialize;

use crate::constructions::arith::valuation as int_valuation;
use crate::constructions::{q_factor_class, subgroup_elements, QClass, QSubgroup};
use crate::error::{Error, Result};
use crate::hypercore::ViolationReport;
use crate::sgntrop::{
    st_maximal_ideal, st_valuation_report, st_valuation_ring, Sign, SignedValueHyperfield, StElem,
    StSet, SymbolicValuation,
};

/// Round trips between the canonical valuation `v((s, γ)) = γ` and its ring
/// `O = Ball(0)` on a signed-value hyperfield.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicRingCheck {
    pub name: String,
    pub window: i64,
    pub ring: StSet,
    pub maximal: StSet,
    /// `v` passes V1–V3 and the derived laws on the window.
    pub valuation_report: ViolationReport,
    /// `x ∈ O` or `x⁻¹ ∈ O`, checked on the window.
    pub inverse_axiom: bool,
    /// `O·O ⊆ O` and `O + O ⊆ O`, exactly.
    pub closed: bool,
    /// `O - O ⊆ O`, exactly.
    pub strict: bool,
    /// `O× = {x : v(x) = 0}` on the window.
    pub units_are_value_zero: bool,
    /// `xO× ≤ yO× ⟺ yx⁻¹ ∈ O` matches `v(x) ≤ v(y)` on the window, so the
    /// projection `π` agrees with `v` up to the identification of `F×/O×`
    /// with `Z^k`.
    pub projection_matches_valuation: bool,
    /// `{v ≥ 0} = O` and `{v > 0} = O ∖ O×` on the window.
    pub ring_from_valuation_agrees: bool,
    /// `O₁ ⊆ O₂ ⟺ M₂ ⊆ M₁` for `O` and the trivial ring `F` (with `M = {0}`).
    pub inclusion_reversal: bool,
}

impl SymbolicRingCheck {
    pub fn holds(&self) -> bool {
        self.valuation_report.is_clean()
            && self.inverse_axiom
            && self.closed
            && self.strict
            && self.units_are_value_zero
            && self.projection_matches_valuation
            && self.ring_from_valuation_agrees
            && self.inclusion_reversal
    }
}

pub fn st_valuation_round_trip(f: &SignedValueHyperfield, b: i64) -> Result<SymbolicRingCheck> {
    let o = st_valuation_ring(f);
    let m = st_maximal_ideal(f);
    let window = f.window(b);
    let nonzero: Vec<StElem> = window.iter().copied().filter(|x| !x.is_zero()).collect();
    let zero = f.zero_value();
    let inverse_axiom = nonzero
        .iter()
        .all(|&x| o.contains(x) || x.inverse().is_some_and(|i| o.contains(i)));
    let closed = o.mul(&o).is_subset(&o) && f.set_add(&o, &o)?.is_subset(&o);
    let strict = f.set_add(&o, &o.negate())?.is_subset(&o);
    let is_unit = |x: StElem| o.contains(x) && x.inverse().is_some_and(|i| o.contains(i));
    let units_are_value_zero = nonzero.iter().all(|&x| is_unit(x) == (x.value() == Some(zero)));
    let mut projection_matches_valuation = true;
    for &x in &nonzero {
        for &y in &nonzero {
            let leq = o.contains(y.times(x.inverse().expect("nonzero")));
            projection_matches_valuation &= leq == (x.value() <= y.value());
        }
    }
    let ring_from_valuation_agrees = window.iter().all(|&x| {
        let v = x.value();
        o.contains(x) == v.is_none_or(|g| g >= zero)
            && m.contains(x) == v.is_none_or(|g| g > zero)
            && (m.contains(x) == (o.contains(x) && !is_unit(x)))
    });
    // F ⊆ O fails and {0} ⊆ M holds; O ⊆ F holds and M ⊆ {0} fails.
    let inclusion_reversal = !m.is_subset(&StSet::zero()) && StSet::zero().is_subset(&m);
    Ok(SymbolicRingCheck {
        name: f.name(),
        window: b,
        valuation_report: st_valuation_report(f, &SymbolicValuation::Canonical, b),
        ring: o,
        maximal: m,
        inverse_axiom,
        closed,
        strict,
        units_are_value_zero,
        projection_matches_valuation,
        ring_from_valuation_agrees,
        inclusion_reversal,
    })
}

/// `v_T([a]_T) = v_p(a)` on `Q_T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedValuation {
    pub p: u64,
    pub subgroup: QSubgroup,
    /// Rationals `n/d` with `|n|, d ≤ height` on which `v_T([a]) = v_p(a)`
    /// was confirmed.
    pub samples: usize,
    pub agrees_with_v_p: bool,
    /// V1–V3 on the `(sign, v_p)` hyperfield, over the window.
    pub report: ViolationReport,
}

impl InducedValuation {
    pub fn value(&self, c: &QClass) -> Option<i64> {
        match c {
            QClass::SignedValue(_, v) => Some(*v),
            _ => None,
        }
    }
}

/// The valuation induced on `Q_T` by `v_p`, defined when every element of
/// `T` has value `0`.
pub fn induced_valuation_on_factor(
    t: QSubgroup,
    p: u64,
    height: u64,
    window: i64,
) -> Result<InducedValuation> {
    let t = t.validate()?;
    let f = SignedValueHyperfield::padic(p)?;
    // T ⊆ O_v× must hold; p itself or p² lies in the other subgroups.
    let witness = subgroup_elements(t, (p * p) as i64)
        .into_iter()
        .find(|r| int_valuation(*r.numer(), p) != int_valuation(*r.denom(), p));
    if let Some(r) = witness {
        return Err(Error::Precondition(format!(
            "{} contains {r}, which is not a {p}-adic unit",
            t.name()
        )));
    }
    let QSubgroup::PositivePUnits(_) = t else {
        return Err(Error::Unsupported(format!("{} with v_{p}", t.name())));
    };
    let h = height as i64;
    let mut samples = 0;
    let mut agrees = true;
    for n in -h..=h {
        for d in 1..=h {
            if n == 0 {
                continue;
            }
            let a = Ratio::new(n, d);
            let class = q_factor_class(a, t);
            let expected = int_valuation(*a.numer(), p) - int_valuation(*a.denom(), p);
            let sign = Sign::of(n).expect("nonzero");
            agrees &= class == QClass::SignedValue(sign, expected);
            samples += 1;
        }
    }
    Ok(InducedValuation {
        p,
        subgroup: t,
        samples,
        agrees_with_v_p: agrees,
        report: st_valuation_report(&f, &SymbolicValuation::Canonical, window),
    })
}
