use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::{Axiom, FiniteHyperstructure, ViolationReport};

use super::orderings::{is_ordering, OrderingSet};

/// `T + T ⊆ T`, `T·T ⊆ T`, `(F×)² ⊆ T`, `-1 ∉ T`, with `T ⊆ F×`.
pub fn is_preordering(h: &FiniteHyperstructure, t: HSet) -> ViolationReport {
    let mut r = ViolationReport::default();
    let Some(one) = h.one() else {
        r.push(Axiom::Unity, Vec::<String>::new(), "no multiplicative unit");
        return r;
    };
    if t.contains(h.zero()) {
        r.push(Axiom::PreAdditive, [h.label(h.zero())], "0 lies in T");
    }
    for x in t.iter() {
        for y in t.iter() {
            let s = h.add(x, y);
            if !s.is_subset(t) {
                r.push(
                    Axiom::PreAdditive,
                    [h.label(x), h.label(y)],
                    format!("x+y = {}", h.fmt_set(s)),
                );
            }
            if !t.contains(h.mul(x, y)) {
                r.push(Axiom::PreMultiplicative, [h.label(x), h.label(y)], "xy ∉ T");
            }
        }
    }
    for s in h.squares().intersection(h.nonzero()).difference(t).iter() {
        r.push(Axiom::PreSquares, [h.label(s)], "nonzero square outside T");
    }
    if t.contains(h.neg(one)) {
        r.push(Axiom::PreMinusOne, [h.label(h.neg(one))], "-1 lies in T");
    }
    r
}

/// Closure of `T ∪ {a}` under sums and products, or `None` once `0` or `-1`
/// appears.
pub fn adjoin(h: &FiniteHyperstructure, t: HSet, a: Elem) -> Option<HSet> {
    let one = h.one()?;
    let bad = HSet::from([h.zero(), h.neg(one)]);
    let mut s = t.union(t.iter().map(|x| h.mul(x, a)).collect()).with(a);
    loop {
        if s.meets(bad) {
            return None;
        }
        let mut next = s;
        for x in s.iter() {
            for y in s.iter() {
                next = next.union(h.add(x, y)).with(h.mul(x, y));
            }
        }
        if next == s {
            return Some(s);
        }
        s = next;
    }
}

/// Orderings containing the preordering `t`.
///
/// With `all = false`, one extension: repeatedly adjoin the least element `x`
/// with neither `x` nor `-x` in the current set, or `-x` when that fails, and
/// backtrack when both fail. With `all = true`, both branches are explored
/// and every ordering containing `t` is returned, sorted.
pub fn maximal_preordering_extensions(
    h: &FiniteHyperstructure,
    t: HSet,
    all: bool,
) -> Result<Vec<OrderingSet>> {
    let report = is_preordering(h, t);
    if !report.is_clean() {
        return Err(Error::NotPreordering(report.to_string()));
    }
    let mut found = BTreeSet::new();
    extend(h, t, all, &mut found);
    for p in &found {
        debug_assert!(is_ordering(h, p.positive).is_clean());
        if !is_ordering(h, p.positive).is_clean() {
            return Err(Error::InvalidOrdering(format!(
                "maximal preordering {} is not an ordering",
                h.fmt_set(p.positive)
            )));
        }
    }
    Ok(found.into_iter().collect())
}

fn extend(h: &FiniteHyperstructure, t: HSet, all: bool, found: &mut BTreeSet<OrderingSet>) -> bool {
    let unresolved = h
        .nonzero()
        .iter()
        .find(|&x| !t.contains(x) && !t.contains(h.neg(x)));
    let Some(x) = unresolved else {
        found.insert(OrderingSet { positive: t });
        return true;
    };
    let mut any = false;
    for a in [x, h.neg(x)] {
        if let Some(next) = adjoin(h, t, a) {
            any |= extend(h, next, all, found);
            if any && !all {
                return true;
            }
        }
    }
    any
}

/// `⋂ X(F | T) = T`.
pub fn intersection_recovers(h: &FiniteHyperstructure, t: HSet) -> Result<bool> {
    let orderings = maximal_preordering_extensions(h, t, true)?;
    let meet = orderings
        .iter()
        .fold(h.nonzero(), |acc, p| acc.intersection(p.positive));
    Ok(!orderings.is_empty() && meet == t)
}

/// `Σ(F×)²` when it is a preordering, i.e. when `F` is real.
pub fn sums_of_squares_preordering(h: &FiniteHyperstructure) -> Result<Option<HSet>> {
    let real = super::orderings::is_real(h)?;
    Ok(real.real.then_some(real.sums_of_squares))
}

/// Every preordering of `F`, by closure from the nonzero squares. Sorted.
pub fn enumerate_preorderings(h: &FiniteHyperstructure) -> Result<Vec<HSet>> {
    let Some(base) = sums_of_squares_preordering(h)? else {
        return Ok(Vec::new());
    };
    let mut seen = BTreeSet::from([base]);
    let mut frontier = vec![base];
    while let Some(t) = frontier.pop() {
        for a in h.nonzero().difference(t).iter() {
            if let Some(next) = adjoin(h, t, a) {
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}
