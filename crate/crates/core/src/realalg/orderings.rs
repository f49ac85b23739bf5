use std::collections::BTreeMap;

use serde::Serialize;

use crate::constructions::{sign_hyperfield, SIGN_NEG, SIGN_POS};
use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::{Axiom, FiniteHyperstructure, HomomorphismSpec, ViolationReport};
use crate::sgntrop::Sign;

/// Largest carrier for which the powerset oracle is run.
pub const POWERSET_ORACLE_BOUND: usize = 8;

/// A positive cone `P ⊆ F×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderingSet {
    pub positive: HSet,
}

fn one_of(h: &FiniteHyperstructure) -> Result<Elem> {
    h.one()
        .ok_or_else(|| Error::Precondition(format!("{} has no multiplicative unit", h.name())))
}

/// The four ordering axioms: `P + P ⊆ P`, `P·P ⊆ P`, `P ∩ -P = ∅`,
/// `P ∪ -P = F×`.
pub fn is_ordering(h: &FiniteHyperstructure, p: HSet) -> ViolationReport {
    let mut r = ViolationReport::default();
    if p.contains(h.zero()) {
        r.push(Axiom::OrdDisjoint, [h.label(h.zero())], "0 lies in P");
    }
    for x in p.iter() {
        for y in p.iter() {
            let s = h.add(x, y);
            if !s.is_subset(p) {
                r.push(
                    Axiom::OrdAdditive,
                    [h.label(x), h.label(y)],
                    format!("x+y = {}", h.fmt_set(s)),
                );
            }
            if !p.contains(h.mul(x, y)) {
                r.push(
                    Axiom::OrdMultiplicative,
                    [h.label(x), h.label(y)],
                    format!("xy = {}", h.label(h.mul(x, y))),
                );
            }
        }
    }
    let neg = h.neg_set(p);
    for x in p.intersection(neg).iter() {
        r.push(Axiom::OrdDisjoint, [h.label(x)], "x and -x both lie in P");
    }
    for x in h.nonzero().difference(p.union(neg)).iter() {
        r.push(Axiom::OrdCovers, [h.label(x)], "neither x nor -x lies in P");
    }
    r
}

/// Coordinates of `F×` modulo its squares over `F_2`, with the basis used.
struct SquareClassBasis {
    basis: Vec<Elem>,
    coords: BTreeMap<Elem, u64>,
}

fn square_class_basis(h: &FiniteHyperstructure) -> Result<SquareClassBasis> {
    let one = one_of(h)?;
    let squares = h.squares();
    let mut coords: BTreeMap<Elem, u64> = squares.iter().map(|s| (s, 0)).collect();
    let mut basis = Vec::new();
    for g in h.nonzero().iter() {
        if coords.contains_key(&g) {
            continue;
        }
        let bit = 1u64 << basis.len();
        basis.push(g);
        let known: Vec<(Elem, u64)> = coords.iter().map(|(&x, &c)| (x, c)).collect();
        for (x, c) in known {
            coords.insert(h.mul(x, g), c | bit);
        }
    }
    if coords.len() != h.nonzero().len() || !coords.contains_key(&one) {
        return Err(Error::Precondition(format!(
            "nonzero elements of {} do not form a group",
            h.name()
        )));
    }
    Ok(SquareClassBasis { basis, coords })
}

/// All orderings, found among the index-2 subgroups of `F×` that avoid `-1`.
///
/// An ordering `P` is a subgroup of index 2 containing the squares, so it is
/// the kernel of a nonzero functional on `F×/(F×)²`; each kernel is then
/// filtered by [`is_ordering`].
pub fn enumerate_orderings(h: &FiniteHyperstructure) -> Result<Vec<OrderingSet>> {
    let one = one_of(h)?;
    let minus_one = h.neg(one);
    let SquareClassBasis { basis, coords } = square_class_basis(h)?;
    let mut out = Vec::new();
    for functional in 1u64..(1 << basis.len()) {
        let kernel: HSet = coords
            .iter()
            .filter(|(_, &c)| (c & functional).count_ones() % 2 == 0)
            .map(|(&x, _)| x)
            .collect();
        if kernel.contains(minus_one) {
            continue;
        }
        if is_ordering(h, kernel).is_clean() {
            out.push(OrderingSet { positive: kernel });
        }
    }
    out.sort();
    Ok(out)
}

/// Every subset of `F×` passing [`is_ordering`], by a plain powerset scan.
pub fn enumerate_orderings_powerset(h: &FiniteHyperstructure) -> Result<Vec<OrderingSet>> {
    if h.size() > POWERSET_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "carrier for the powerset oracle",
            value: h.size(),
            bound: POWERSET_ORACLE_BOUND,
        });
    }
    let nonzero = h.nonzero().to_vec();
    let mut out = Vec::new();
    for mask in 0u64..(1 << nonzero.len()) {
        let p: HSet = (0..nonzero.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| nonzero[i])
            .collect();
        if is_ordering(h, p).is_clean() {
            out.push(OrderingSet { positive: p });
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of the realness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realness {
    pub real: bool,
    /// The additive closure of the nonzero squares.
    pub sums_of_squares: HSet,
    /// When not real: a derivation of `-1`, each step `(x, y, z)` with
    /// `z ∈ x + y` and `x`, `y` squares or earlier results.
    pub derivation: Vec<(Elem, Elem, Elem)>,
    /// When real: an ordering.
    pub ordering: Option<OrderingSet>,
}

/// `F` is real iff `-1` is not a sum of nonzero squares.
pub fn is_real(h: &FiniteHyperstructure) -> Result<Realness> {
    let one = one_of(h)?;
    let minus_one = h.neg(one);
    let squares = h.squares().intersection(h.nonzero());
    let mut closure = squares;
    let mut parent: BTreeMap<Elem, (Elem, Elem)> = BTreeMap::new();
    loop {
        let mut grew = false;
        for x in closure.iter() {
            for y in closure.iter() {
                for z in h.add(x, y).iter() {
                    if !closure.contains(z) && !parent.contains_key(&z) {
                        parent.insert(z, (x, y));
                        grew = true;
                    }
                }
            }
        }
        let added: HSet = parent.keys().copied().collect();
        closure = closure.union(added);
        if !grew {
            break;
        }
    }
    let real = !closure.contains(minus_one);
    let mut derivation = Vec::new();
    if !real {
        let mut done = HSet::EMPTY;
        derive(minus_one, &parent, &mut done, &mut derivation);
    }
    let ordering = if real {
        enumerate_orderings(h)?.into_iter().next()
    } else {
        None
    };
    Ok(Realness {
        real,
        sums_of_squares: closure,
        derivation,
        ordering,
    })
}

// Post-order walk of the parent links; each parent was in the closure one
// round earlier, so the walk terminates.
fn derive(
    z: Elem,
    parent: &BTreeMap<Elem, (Elem, Elem)>,
    done: &mut HSet,
    out: &mut Vec<(Elem, Elem, Elem)>,
) {
    if done.contains(z) {
        return;
    }
    if let Some(&(x, y)) = parent.get(&z) {
        derive(x, parent, done, out);
        derive(y, parent, done, out);
        out.push((x, y, z));
    }
    *done = done.with(z);
}

/// `+1` on `P`, `-1` on `-P`.
pub fn signature(h: &FiniteHyperstructure, p: HSet, a: Elem) -> Result<Sign> {
    if a == h.zero() {
        return Err(Error::Precondition("signature of zero".into()));
    }
    if p.contains(a) {
        Ok(Sign::Pos)
    } else if p.contains(h.neg(a)) {
        Ok(Sign::Neg)
    } else {
        Err(Error::InvalidOrdering(format!("{} is not signed by P", h.label(a))))
    }
}

/// `a ↦ 0, 1, -1` according to `a ∈ {0}, P, -P`.
pub fn sign_hom(h: &FiniteHyperstructure, p: HSet) -> Result<HomomorphismSpec> {
    let report = is_ordering(h, p);
    if !report.is_clean() {
        return Err(Error::InvalidOrdering(report.to_string()));
    }
    let map = h
        .elems()
        .map(|a| {
            if a == h.zero() {
                0
            } else if p.contains(a) {
                SIGN_POS
            } else {
                SIGN_NEG
            }
        })
        .collect();
    HomomorphismSpec::new(h.clone(), sign_hyperfield(), map)
}
