use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::constructions::{enumerate_hyperideals, is_hyperideal, is_maximal, quotient_hyperring};
use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::{
    check_hyperfield, induced_subhyperring, is_strict_subhyperring, Axiom, FiniteHyperstructure,
    Subhyperring, ViolationReport,
};
use crate::sgntrop::Gamma;

/// Largest carrier on which the powerset oracle for valuation hyperrings runs.
pub const VALUATION_POWERSET_BOUND: usize = 8;

/// `F×/O×` ordered by `aO× ≤ bO× ⟺ ba⁻¹ ∈ O`, cosets listed in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientGroup {
    /// Least element of each coset.
    pub reps: Vec<Elem>,
    pub labels: Vec<String>,
    /// Index of the coset `O×`.
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
}

/// Value group of a valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ValueGroup {
    /// `Z^k` with the lexicographic order.
    Lex(usize),
    /// Cosets listed in ascending order, so the order is the index order.
    Quotient(QuotientGroup),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Value {
    Lex(Gamma),
    Coset(usize),
}

impl ValueGroup {
    pub fn zero(&self) -> Value {
        match self {
            ValueGroup::Lex(k) => Value::Lex(Gamma::zero(*k)),
            ValueGroup::Quotient(q) => Value::Coset(q.zero),
        }
    }

    pub fn add(&self, a: Value, b: Value) -> Value {
        match (self, a, b) {
            (ValueGroup::Lex(_), Value::Lex(x), Value::Lex(y)) => Value::Lex(x + y),
            (ValueGroup::Quotient(q), Value::Coset(x), Value::Coset(y)) => Value::Coset(q.add[x][y]),
            _ => panic!("value of the wrong kind for {self:?}"),
        }
    }

    pub fn neg(&self, a: Value) -> Value {
        match (self, a) {
            (ValueGroup::Lex(_), Value::Lex(x)) => Value::Lex(-x),
            (ValueGroup::Quotient(q), Value::Coset(x)) => Value::Coset(q.neg[x]),
            _ => panic!("value of the wrong kind for {self:?}"),
        }
    }

    pub fn cmp(&self, a: Value, b: Value) -> Ordering {
        match (a, b) {
            (Value::Lex(x), Value::Lex(y)) => x.cmp(&y),
            (Value::Coset(x), Value::Coset(y)) => x.cmp(&y),
            _ => panic!("value of the wrong kind for {self:?}"),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ValueGroup::Lex(_) => "lex_int_power",
            ValueGroup::Quotient(_) => "quotient_group",
        }
    }

    fn valid(&self, a: Value) -> bool {
        match (self, a) {
            (ValueGroup::Lex(k), Value::Lex(g)) => g.rank() == *k,
            (ValueGroup::Quotient(q), Value::Coset(i)) => i < q.reps.len(),
            _ => false,
        }
    }
}

/// `v : F → Γ ∪ {∞}`, with `None` standing for `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Valuation {
    pub group: ValueGroup,
    pub values: Vec<Option<Value>>,
}

impl Valuation {
    /// Every nonzero element has value `0` in `Z`.
    pub fn trivial(h: &FiniteHyperstructure) -> Self {
        let zero = Value::Lex(Gamma::zero(1));
        Valuation {
            group: ValueGroup::Lex(1),
            values: h.elems().map(|x| (x != h.zero()).then_some(zero)).collect(),
        }
    }

    pub fn value(&self, x: Elem) -> Option<Value> {
        self.values[x]
    }

    /// `v(a) ≥ v(b)` with `∞` on top.
    pub fn geq(&self, a: Elem, b: Elem) -> bool {
        match (self.values[a], self.values[b]) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(x), Some(y)) => self.group.cmp(x, y) != Ordering::Less,
        }
    }

    fn nonneg(&self, x: Elem) -> bool {
        self.values[x].is_none_or(|g| self.group.cmp(g, self.group.zero()) != Ordering::Less)
    }

    fn positive(&self, x: Elem) -> bool {
        self.values[x].is_none_or(|g| self.group.cmp(g, self.group.zero()) == Ordering::Greater)
    }

    /// Table rows `(label, value)` for reports.
    pub fn table(&self, h: &FiniteHyperstructure) -> Vec<(String, String)> {
        h.elems()
            .map(|x| {
                let v = match self.values[x] {
                    None => "∞".to_string(),
                    Some(Value::Lex(g)) => g.to_string(),
                    Some(Value::Coset(i)) => match &self.group {
                        ValueGroup::Quotient(q) => q.labels[i].clone(),
                        ValueGroup::Lex(_) => i.to_string(),
                    },
                };
                (h.label(x).to_string(), v)
            })
            .collect()
    }
}

/// V1–V3 together with `v(±1) = 0`, `v(-a) = v(a)`, `v(a⁻¹) = -v(a)` and
/// `v(c) = min(v(a), v(b))` for `c ∈ a + b` when `v(a) ≠ v(b)`.
pub fn is_valuation(h: &FiniteHyperstructure, v: &Valuation) -> ViolationReport {
    let mut r = ViolationReport::default();
    let l = |x: Elem| h.label(x).to_string();
    if v.values.len() != h.size() {
        r.push(Axiom::V1, Vec::<String>::new(), "value table has the wrong length");
        return r;
    }
    let g = &v.group;
    for x in h.elems() {
        if v.values[x].is_none() != (x == h.zero()) {
            r.push(Axiom::V1, [l(x)], "v(x) = ∞ must hold exactly at 0");
        }
        if let Some(val) = v.values[x] {
            if !g.valid(val) {
                r.push(Axiom::V1, [l(x)], "value outside the group");
                return r;
            }
        }
    }
    if !r.is_clean() {
        return r;
    }
    for x in h.elems() {
        if v.values[h.neg(x)] != v.values[x] {
            r.push(Axiom::ValNeg, [l(x)], "v(-x) ≠ v(x)");
        }
        if let (Some(inv), Some(val)) = (h.inv(x), v.values[x]) {
            if v.values[inv] != Some(g.neg(val)) {
                r.push(Axiom::ValInverse, [l(x)], "v(x⁻¹) ≠ -v(x)");
            }
        }
        for y in h.elems() {
            let expected = match (v.values[x], v.values[y]) {
                (Some(a), Some(b)) => Some(g.add(a, b)),
                _ => None,
            };
            if v.values[h.mul(x, y)] != expected {
                r.push(Axiom::V2, [l(x), l(y)], "v(xy) ≠ v(x) + v(y)");
            }
            let low = if v.geq(x, y) { y } else { x };
            for c in h.add(x, y).iter() {
                if !v.geq(c, low) {
                    r.push(Axiom::V3, [l(x), l(y), l(c)], "c ∈ x+y has v(c) < min");
                }
                if v.values[x] != v.values[y] && v.values[c] != v.values[low] {
                    r.push(
                        Axiom::ValStrictMin,
                        [l(x), l(y), l(c)],
                        "v(x) ≠ v(y) but v(c) ≠ min",
                    );
                }
            }
        }
    }
    if let Some(one) = h.one() {
        for u in [one, h.neg(one)] {
            if v.values[u] != Some(g.zero()) {
                r.push(Axiom::ValUnit, [l(u)], "v(±1) ≠ 0");
            }
        }
    }
    r
}

/// `O` is a subhyperring with `x ∈ O` or `x⁻¹ ∈ O` for every `x ≠ 0`; its
/// strictness `a - b ⊆ O` is checked as well.
pub fn is_valuation_hyperring(h: &FiniteHyperstructure, o: HSet) -> ViolationReport {
    let mut r = ViolationReport::default();
    if !o.contains(h.zero()) || !o.is_subset(h.carrier()) {
        r.push(Axiom::VrSubring, [h.fmt_set(o)], "0 ∉ O");
        return r;
    }
    if induced_subhyperring(h, o).is_none() || h.one().is_none_or(|one| !o.contains(one)) {
        r.push(Axiom::VrSubring, [h.fmt_set(o)], "O is not a subhyperring containing 1");
    }
    for x in h.nonzero().iter() {
        let inv_in = h.inv(x).is_some_and(|i| o.contains(i));
        if !o.contains(x) && !inv_in {
            r.push(Axiom::VrInverse, [h.label(x)], "neither x nor x⁻¹ lies in O");
        }
    }
    if r.is_clean() && !is_strict_subhyperring(h, o) {
        r.push(Axiom::VrStrict, [h.fmt_set(o)], "some a - b leaves O");
    }
    r
}

fn require_ring(h: &FiniteHyperstructure, o: HSet) -> Result<()> {
    let report = is_valuation_hyperring(h, o);
    if report.is_clean() {
        Ok(())
    } else {
        Err(Error::InvalidValuationRing(report.to_string()))
    }
}

/// `O× = {x ∈ O : x⁻¹ ∈ O}` and `M = O ∖ O×`.
pub fn units_and_maximal_ideal(h: &FiniteHyperstructure, o: HSet) -> Result<(HSet, HSet)> {
    require_ring(h, o)?;
    let units: HSet = o
        .iter()
        .filter(|&x| h.inv(x).is_some_and(|i| o.contains(i)))
        .collect();
    Ok((units, o.difference(units)))
}

/// `M` as a hyperideal of `O`, checked for maximality and for containing
/// every proper hyperideal of `O`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalIdealCheck {
    pub units: HSet,
    pub maximal: HSet,
    pub is_hyperideal: bool,
    pub is_maximal: bool,
    pub contains_every_proper_ideal: bool,
}

impl MaximalIdealCheck {
    pub fn holds(&self) -> bool {
        self.is_hyperideal && self.is_maximal && self.contains_every_proper_ideal
    }
}

pub fn maximal_ideal_check(h: &FiniteHyperstructure, o: HSet) -> Result<MaximalIdealCheck> {
    let (units, maximal) = units_and_maximal_ideal(h, o)?;
    let sub = induced_subhyperring(h, o).expect("checked by require_ring");
    let local = to_local(&sub, maximal);
    let is_hyperideal = is_hyperideal(&sub.structure, local);
    let is_max = is_hyperideal && is_maximal(&sub.structure, local)?;
    let whole = sub.structure.carrier();
    let contains_every_proper_ideal = enumerate_hyperideals(&sub.structure)?
        .into_iter()
        .filter(|&i| i != whole)
        .all(|i| i.is_subset(local));
    Ok(MaximalIdealCheck {
        units,
        maximal,
        is_hyperideal,
        is_maximal: is_max,
        contains_every_proper_ideal,
    })
}

fn to_local(sub: &Subhyperring, a: HSet) -> HSet {
    sub.embedding
        .iter()
        .enumerate()
        .filter(|(_, &x)| a.contains(x))
        .map(|(i, _)| i)
        .collect()
}

/// The canonical projection `F → F×/O× ∪ {∞}`.
pub fn valuation_from_hyperring(h: &FiniteHyperstructure, o: HSet) -> Result<Valuation> {
    let (units, _) = units_and_maximal_ideal(h, o)?;
    let one = h.one().expect("valuation hyperrings contain 1");
    let mut cosets: Vec<HSet> = Vec::new();
    for x in h.nonzero().iter() {
        if !cosets.iter().any(|c| c.contains(x)) {
            cosets.push(h.scale(units, x));
        }
    }
    let leq = |a: &HSet, b: &HSet| {
        let (x, y) = (a.first().expect("coset"), b.first().expect("coset"));
        o.contains(h.mul(y, h.inverse(x)))
    };
    for a in &cosets {
        for b in &cosets {
            if !leq(a, b) && !leq(b, a) {
                return Err(Error::InvalidValuationRing("coset order is not total".into()));
            }
            if a != b && leq(a, b) && leq(b, a) {
                return Err(Error::InvalidValuationRing("coset order is not antisymmetric".into()));
            }
        }
    }
    cosets.sort_by(|a, b| {
        if a == b {
            Ordering::Equal
        } else if leq(a, b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
    let index = |x: Elem| cosets.iter().position(|c| c.contains(x)).expect("covered");
    let n = cosets.len();
    let reps: Vec<Elem> = cosets.iter().map(|c| c.first().expect("coset")).collect();
    let add: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| index(h.mul(reps[i], reps[j]))).collect())
        .collect();
    let neg = (0..n).map(|i| index(h.inverse(reps[i]))).collect();
    let group = QuotientGroup {
        labels: cosets.iter().map(|c| h.fmt_set(*c)).collect(),
        zero: index(one),
        reps,
        add,
        neg,
    };
    // Translation invariance of the order.
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if (a <= b) != (group.add[a][c] <= group.add[b][c]) {
                    return Err(Error::InvalidValuationRing(
                        "coset order is not translation invariant".into(),
                    ));
                }
            }
        }
    }
    Ok(Valuation {
        values: h.elems().map(|x| (x != h.zero()).then(|| Value::Coset(index(x)))).collect(),
        group: ValueGroup::Quotient(group),
    })
}

/// `O_v = {v ≥ 0}` and `M_v = {v > 0}`.
pub fn ring_from_valuation(h: &FiniteHyperstructure, v: &Valuation) -> Result<(HSet, HSet)> {
    let report = is_valuation(h, v);
    if !report.is_clean() {
        return Err(Error::InvalidValuation(report.to_string()));
    }
    let o = h.elems().filter(|&x| v.nonneg(x)).collect();
    let m = h.elems().filter(|&x| v.positive(x)).collect();
    Ok((o, m))
}

/// Two valuations agree up to an order isomorphism of their images:
/// `v(x) ≤ v(y) ⟺ w(x) ≤ w(y)` for all `x, y`.
pub fn equivalent(h: &FiniteHyperstructure, v: &Valuation, w: &Valuation) -> bool {
    h.elems().all(|x| h.elems().all(|y| v.geq(x, y) == w.geq(x, y)))
}

/// `O/M` as a quotient of the induced structure on `O`.
#[derive(Clone, Debug)]
pub struct Residue {
    pub structure: FiniteHyperstructure,
    /// `class_of[x]` for each `x ∈ O`.
    pub class_of: Vec<Option<Elem>>,
    pub ring: HSet,
    pub maximal: HSet,
}

pub fn residue_hyperfield(h: &FiniteHyperstructure, o: HSet) -> Result<Residue> {
    let (_, maximal) = units_and_maximal_ideal(h, o)?;
    let sub = induced_subhyperring(h, o).expect("checked");
    let q = quotient_hyperring(&sub.structure, to_local(&sub, maximal))?;
    let report = check_hyperfield(&q.structure);
    if !report.is_clean() {
        return Err(Error::NotHyperfield(report.to_string()));
    }
    let mut class_of = vec![None; h.size()];
    for (i, &x) in sub.embedding.iter().enumerate() {
        class_of[x] = Some(q.class_of[i]);
    }
    Ok(Residue {
        structure: q.structure.with_name(format!("residue of {}", h.name())),
        class_of,
        ring: o,
        maximal,
    })
}

/// Every valuation hyperring, found by choosing a unit group `U ≤ F×` and
/// a positive cone on `F×/U`, then filtering with [`is_valuation_hyperring`].
/// Sorted.
pub fn enumerate_valuation_hyperrings(h: &FiniteHyperstructure) -> Result<Vec<HSet>> {
    let report = check_hyperfield(h);
    if !report.is_clean() {
        return Err(Error::NotHyperfield(report.to_string()));
    }
    let mut found = BTreeSet::new();
    for u in unit_subgroups(h) {
        let mut cosets: Vec<HSet> = Vec::new();
        for x in h.nonzero().iter() {
            if !cosets.iter().any(|c| c.contains(x)) {
                cosets.push(h.scale(u, x));
            }
        }
        for cone in positive_cones(h, &cosets) {
            let o = cone.iter().fold(HSet::singleton(h.zero()), |acc, &i| acc.union(cosets[i]));
            if is_valuation_hyperring(h, o).is_clean() {
                found.insert(o);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Subgroups of `F×`, by closure from single generators upward.
fn unit_subgroups(h: &FiniteHyperstructure) -> Vec<HSet> {
    let Some(one) = h.one() else {
        return Vec::new();
    };
    let close = |s: HSet| {
        let mut cur = s.with(one);
        loop {
            let next = h.set_mul(cur, cur);
            let next = next.union(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    };
    let mut seen = BTreeSet::from([HSet::singleton(one)]);
    let mut frontier = vec![HSet::singleton(one)];
    while let Some(s) = frontier.pop() {
        for g in h.nonzero().difference(s).iter() {
            let t = close(s.with(g));
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Sets `C` of cosets with `C·C ⊆ C`, `C ∪ C⁻¹` everything and
/// `C ∩ C⁻¹ = {U}`, by branching on `g` or `g⁻¹` for the least undecided
/// coset.
fn positive_cones(h: &FiniteHyperstructure, cosets: &[HSet]) -> Vec<BTreeSet<usize>> {
    let one = h.one().expect("hyperfield");
    let index = |x: Elem| cosets.iter().position(|c| c.contains(x)).expect("covered");
    let rep = |i: usize| cosets[i].first().expect("coset");
    let inv = |i: usize| index(h.inverse(rep(i)));
    let identity = index(one);
    let close = |c: &BTreeSet<usize>| -> Option<BTreeSet<usize>> {
        let mut cur = c.clone();
        loop {
            let mut next = cur.clone();
            for &a in &cur {
                for &b in &cur {
                    next.insert(index(h.mul(rep(a), rep(b))));
                }
            }
            if next.iter().any(|&a| a != identity && next.contains(&inv(a))) {
                return None;
            }
            if next == cur {
                return Some(cur);
            }
            cur = next;
        }
    };
    let mut out = Vec::new();
    let mut stack = vec![BTreeSet::from([identity])];
    while let Some(c) = stack.pop() {
        let Some(g) = (0..cosets.len()).find(|&g| !c.contains(&g) && !c.contains(&inv(g))) else {
            out.push(c);
            continue;
        };
        for choice in [g, inv(g)] {
            let mut next = c.clone();
            next.insert(choice);
            if let Some(closed) = close(&next) {
                stack.push(closed);
            }
        }
    }
    out
}

/// Powerset filter, for cross-checking the generic search on small carriers.
pub fn enumerate_valuation_hyperrings_powerset(h: &FiniteHyperstructure) -> Result<Vec<HSet>> {
    if h.size() > VALUATION_POWERSET_BOUND {
        return Err(Error::BoundExceeded {
            what: "carrier for the valuation powerset oracle",
            value: h.size(),
            bound: VALUATION_POWERSET_BOUND,
        });
    }
    let mut out = Vec::new();
    for bits in 0u128..(1 << h.size()) {
        let o = HSet::from_bits(bits);
        if o.contains(h.zero()) && is_valuation_hyperring(h, o).is_clean() {
            out.push(o);
        }
    }
    out.sort();
    Ok(out)
}

/// `O₁ ⊆ O₂ ⟺ M₂ ⊆ M₁` over all pairs.
pub fn inclusion_reversal_holds(h: &FiniteHyperstructure, rings: &[HSet]) -> Result<bool> {
    let data: Vec<(HSet, HSet)> = rings
        .iter()
        .map(|&o| units_and_maximal_ideal(h, o).map(|(_, m)| (o, m)))
        .collect::<Result<_>>()?;
    Ok(data.iter().all(|&(o1, m1)| {
        data.iter()
            .all(|&(o2, m2)| o1.is_subset(o2) == m2.is_subset(m1))
    }))
}
