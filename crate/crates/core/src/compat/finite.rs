use serde::Serialize;

use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::FiniteHyperstructure;
use crate::realalg::{a_of_p, i_of_p, is_archimedean, is_ordering, maximal_preordering_extensions, is_preordering};
use crate::sgntrop::Sign;
use crate::valtheory::{
    is_valuation, residue_hyperfield, ring_from_valuation, valuation_from_hyperring, Residue,
    Valuation, Value, ValueGroup,
};

/// The four conditions that each characterize compatibility of `v` with
/// `P`, with a counterexample kept for every condition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    /// `A(P) ⊆ O_v`.
    pub cond_i: bool,
    /// `{a + M_v : a ∈ P ∩ O_v×}` is an ordering of the residue hyperfield.
    pub cond_ii: bool,
    /// `1 + M_v ⊆ P`.
    pub cond_iii: bool,
    /// `(b + a) ∩ P ≠ ∅ ∧ (b - a) ∩ P ≠ ∅ ⇒ v(a) ≥ v(b)`.
    pub cond_iv: bool,
    pub witness_i: Option<String>,
    pub witness_ii: Option<String>,
    pub witness_iii: Option<String>,
    pub witness_iv: Option<String>,
}

impl CompatReport {
    pub fn conditions(&self) -> [bool; 4] {
        [self.cond_i, self.cond_ii, self.cond_iii, self.cond_iv]
    }

    /// All four conditions give the same answer.
    pub fn agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&x| x == c[0])
    }

    pub fn compatible(&self) -> bool {
        self.conditions().iter().all(|&x| x)
    }
}

fn check_inputs(h: &FiniteHyperstructure, v: &Valuation, p: HSet) -> Result<(HSet, HSet)> {
    let report = is_ordering(h, p);
    if !report.is_clean() {
        return Err(Error::InvalidOrdering(report.to_string()));
    }
    let report = is_valuation(h, v);
    if !report.is_clean() {
        return Err(Error::InvalidValuation(report.to_string()));
    }
    ring_from_valuation(h, v)
}

pub fn cond_i(h: &FiniteHyperstructure, v: &Valuation, p: HSet) -> Result<(bool, Option<String>)> {
    let (o, _) = check_inputs(h, v, p)?;
    let a = a_of_p(h, p)?;
    let outside = a.difference(o).first();
    Ok((
        outside.is_none(),
        outside.map(|x| format!("{} ∈ A(P) but v({0}) < 0", h.label(x))),
    ))
}

/// The image of `P ∩ O×` in the residue hyperfield.
pub fn induced_residue_set(residue: &Residue, p: HSet) -> HSet {
    let units = residue.ring.difference(residue.maximal);
    p.intersection(units)
        .iter()
        .filter_map(|a| residue.class_of[a])
        .collect()
}

pub fn cond_ii(h: &FiniteHyperstructure, v: &Valuation, p: HSet) -> Result<(bool, Option<String>)> {
    let (o, _) = check_inputs(h, v, p)?;
    let residue = residue_hyperfield(h, o)?;
    let pbar = induced_residue_set(&residue, p);
    let report = is_ordering(&residue.structure, pbar);
    Ok((
        report.is_clean(),
        (!report.is_clean()).then(|| {
            format!(
                "P̄ = {} fails: {}",
                residue.structure.fmt_set(pbar),
                report.violations()[0].detail
            )
        }),
    ))
}

pub fn cond_iii(h: &FiniteHyperstructure, v: &Valuation, p: HSet) -> Result<(bool, Option<String>)> {
    let (_, m) = check_inputs(h, v, p)?;
    let one = h.one().expect("hyperfield");
    for x in m.iter() {
        let s = h.add(one, x);
        if let Some(bad) = s.difference(p).first() {
            return Ok((
                false,
                Some(format!("1 + {} ∋ {} ∉ P", h.label(x), h.label(bad))),
            ));
        }
    }
    Ok((true, None))
}

pub fn cond_iv(h: &FiniteHyperstructure, v: &Valuation, p: HSet) -> Result<(bool, Option<String>)> {
    check_inputs(h, v, p)?;
    for a in h.elems() {
        for b in h.elems() {
            let plus = h.add(b, a).meets(p);
            let minus = h.add(b, h.neg(a)).meets(p);
            if plus && minus && !v.geq(a, b) {
                return Ok((
                    false,
                    Some(format!(
                        "a = {}, b = {}: (b ± a) ∩ P ≠ ∅ but v(a) < v(b)",
                        h.label(a),
                        h.label(b)
                    )),
                ));
            }
        }
    }
    Ok((true, None))
}

/// All four conditions, evaluated independently. A disagreement between
/// them is returned as an error.
pub fn compatibility_report(h: &FiniteHyperstructure, v: &Valuation, p: HSet) -> Result<CompatReport> {
    let (cond_i, witness_i) = cond_i(h, v, p)?;
    let (cond_ii, witness_ii) = cond_ii(h, v, p)?;
    let (cond_iii, witness_iii) = cond_iii(h, v, p)?;
    let (cond_iv, witness_iv) = cond_iv(h, v, p)?;
    Ok(CompatReport {
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        witness_i,
        witness_ii,
        witness_iii,
        witness_iv,
    })
}

/// The valuation with ring `A(P)`.
pub fn natural_valuation(h: &FiniteHyperstructure, p: HSet) -> Result<Valuation> {
    valuation_from_hyperring(h, a_of_p(h, p)?)
}

/// `A(P)/I(P)` with the ordering pushed down from `P`.
#[derive(Clone, Debug)]
pub struct ResidueOrdering {
    pub residue: Residue,
    pub induced: HSet,
    pub is_ordering: bool,
    pub archimedean: bool,
    pub i_of_p_is_maximal_ideal: bool,
}

pub fn residue_ordering_archimedean_check(h: &FiniteHyperstructure, p: HSet) -> Result<ResidueOrdering> {
    let a = a_of_p(h, p)?;
    let i = i_of_p(h, p)?;
    let residue = residue_hyperfield(h, a)?;
    let induced = induced_residue_set(&residue, p);
    let is_ord = is_ordering(&residue.structure, induced).is_clean();
    let archimedean = is_ord && is_archimedean(&residue.structure, induced)?;
    Ok(ResidueOrdering {
        i_of_p_is_maximal_ideal: residue.maximal == i,
        residue,
        induced,
        is_ordering: is_ord,
        archimedean,
    })
}

/// Triples `a < x < b` with `a, b ∈ O` and `x ∉ O`, where `a < b` means
/// `b - a ⊆ P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Convexity {
    pub convex: bool,
    pub violations: Vec<(String, String, String)>,
    pub triples_checked: usize,
}

pub fn convexity_check(h: &FiniteHyperstructure, p: HSet, o: HSet) -> Result<Convexity> {
    let report = is_ordering(h, p);
    if !report.is_clean() {
        return Err(Error::InvalidOrdering(report.to_string()));
    }
    let less = |a: Elem, b: Elem| h.add(b, h.neg(a)).is_subset(p);
    let mut violations = Vec::new();
    let mut checked = 0;
    for a in o.iter() {
        for b in o.iter() {
            for x in h.carrier().difference(o).iter() {
                checked += 1;
                if less(a, x) && less(x, b) {
                    violations.push((
                        h.label(a).to_string(),
                        h.label(x).to_string(),
                        h.label(b).to_string(),
                    ));
                }
            }
        }
    }
    Ok(Convexity {
        convex: violations.is_empty(),
        violations,
        triples_checked: checked,
    })
}

/// `T = {a : a·x² ∈ O× has residue in 𝔭 for some x}`.
pub fn lift_preordering(h: &FiniteHyperstructure, v: &Valuation, pbar: HSet) -> Result<HSet> {
    let (o, m) = ring_from_valuation(h, v)?;
    let residue = residue_hyperfield(h, o)?;
    let report = is_ordering(&residue.structure, pbar);
    if !report.is_clean() {
        return Err(Error::InvalidOrdering(report.to_string()));
    }
    let units = o.difference(m);
    Ok(h
        .nonzero()
        .iter()
        .filter(|&a| {
            h.nonzero().iter().any(|x| {
                let y = h.mul(a, h.mul(x, x));
                units.contains(y) && residue.class_of[y].is_some_and(|c| pbar.contains(c))
            })
        })
        .collect())
}

/// Orderings compatible with `v` inducing `𝔭` on the residue, as maximal
/// extensions of the lifted preordering; each result is checked.
pub fn lift_ordering(h: &FiniteHyperstructure, v: &Valuation, pbar: HSet, all: bool) -> Result<Vec<HSet>> {
    let (o, _) = ring_from_valuation(h, v)?;
    let residue = residue_hyperfield(h, o)?;
    if crate::realalg::enumerate_orderings(&residue.structure)?.is_empty() {
        return Err(Error::NonRealResidue);
    }
    let t = lift_preordering(h, v, pbar)?;
    let report = is_preordering(h, t);
    if !report.is_clean() {
        return Err(Error::NotPreordering(report.to_string()));
    }
    let mut out = Vec::new();
    for p in maximal_preordering_extensions(h, t, all)? {
        let compat = compatibility_report(h, v, p.positive)?;
        if !compat.compatible() || induced_residue_set(&residue, p.positive) != pbar {
            return Err(Error::Incompatible(format!(
                "lift {} does not induce the residue ordering",
                h.fmt_set(p.positive)
            )));
        }
        out.push(p.positive);
    }
    Ok(out)
}

/// Homomorphisms from a finite value group to `{±1}`, as images of the
/// cosets in ascending order.
pub fn finite_characters(v: &Valuation) -> Result<Vec<Vec<Sign>>> {
    let ValueGroup::Quotient(q) = &v.group else {
        return Err(Error::Unsupported("characters of a lexicographic group on a finite carrier".into()));
    };
    let n = q.reps.len();
    if n > 16 {
        return Err(Error::BoundExceeded {
            what: "value group order",
            value: n,
            bound: 16,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let img: Vec<Sign> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos })
            .collect();
        let hom = (0..n).all(|a| (0..n).all(|b| img[q.add[a][b]] == img[a].times(img[b])));
        if hom {
            out.push(img);
        }
    }
    Ok(out)
}

fn sgn(h: &FiniteHyperstructure, p: HSet, a: Elem) -> Sign {
    crate::realalg::signature(h, p, a).expect("valid ordering and nonzero element")
}

/// `(𝔭, χ)` for an ordering compatible with `v`, with
/// `χ(v(a)) = sgn_{P_𝔭}(a)·sgn_P(a)`. `base` pairs each residue ordering
/// with its chosen lift. The value group must be a coset presentation.
pub fn finite_baer_krull_forward(
    h: &FiniteHyperstructure,
    v: &Valuation,
    p: HSet,
    base: &[(HSet, HSet)],
) -> Result<(HSet, Vec<Sign>)> {
    let compat = compatibility_report(h, v, p)?;
    if !compat.compatible() {
        return Err(Error::Incompatible(h.fmt_set(p)));
    }
    let (o, _) = ring_from_valuation(h, v)?;
    let residue = residue_hyperfield(h, o)?;
    let pbar = induced_residue_set(&residue, p);
    let (_, base_p) = base
        .iter()
        .find(|(q, _)| *q == pbar)
        .ok_or_else(|| Error::Precondition("no base ordering for the induced residue ordering".into()))?;
    let ValueGroup::Quotient(q) = &v.group else {
        return Err(Error::Unsupported("forward map needs a coset value group".into()));
    };
    let mut chi: Vec<Option<Sign>> = vec![None; q.reps.len()];
    for a in h.nonzero().iter() {
        let Some(Value::Coset(c)) = v.value(a) else {
            unreachable!("nonzero elements have coset values");
        };
        let s = sgn(h, *base_p, a).times(sgn(h, p, a));
        match chi[c] {
            None => chi[c] = Some(s),
            Some(t) if t != s => {
                return Err(Error::Precondition("χ is not well defined on a coset".into()))
            }
            _ => {}
        }
    }
    Ok((pbar, chi.into_iter().map(|s| s.expect("every coset is hit")).collect()))
}

/// `P = {x : (χ(v(x)) = 1 ∧ x ∈ P_𝔭) ∨ (χ(v(x)) = -1 ∧ -x ∈ P_𝔭)}`.
pub fn finite_baer_krull_inverse(
    h: &FiniteHyperstructure,
    v: &Valuation,
    pbar: HSet,
    chi: &[Sign],
    base: &[(HSet, HSet)],
) -> Result<HSet> {
    let (_, base_p) = base
        .iter()
        .find(|(q, _)| *q == pbar)
        .ok_or_else(|| Error::Precondition("no base ordering for this residue ordering".into()))?;
    let p: HSet = h
        .nonzero()
        .iter()
        .filter(|&x| {
            let Some(Value::Coset(c)) = v.value(x) else {
                return false;
            };
            match chi[c] {
                Sign::Pos => base_p.contains(x),
                Sign::Neg => base_p.contains(h.neg(x)),
            }
        })
        .collect();
    let report = is_ordering(h, p);
    if !report.is_clean() {
        return Err(Error::InvalidOrdering(report.to_string()));
    }
    Ok(p)
}
