use super::axioms::check_hyperring;
use super::report::{Axiom, ViolationReport};
use super::structure::FiniteHyperstructure;
use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};

/// A map between two finite hyperstructures, given by the image of each
/// source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismSpec {
    pub source: FiniteHyperstructure,
    pub target: FiniteHyperstructure,
    pub map: Vec<Elem>,
}

impl HomomorphismSpec {
    pub fn new(
        source: FiniteHyperstructure,
        target: FiniteHyperstructure,
        map: Vec<Elem>,
    ) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::Malformed(format!(
                "map has {} entries for a carrier of {}",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| !target.contains(y)) {
            return Err(Error::OutOfCarrier {
                index: bad,
                size: target.size(),
            });
        }
        Ok(HomomorphismSpec {
            source,
            target,
            map,
        })
    }

    pub fn identity(h: &FiniteHyperstructure) -> Self {
        HomomorphismSpec {
            source: h.clone(),
            target: h.clone(),
            map: h.elems().collect(),
        }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn image(&self, a: HSet) -> HSet {
        a.map(|x| self.map[x])
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size()
            && self.image(self.source.carrier()) == self.target.carrier()
    }
}

/// Checks HH1, HH2 and HH3 (or HH3′ when `strict`), together with the derived
/// law `φ(-x) = -φ(x)`.
pub fn check_homomorphism(phi: &HomomorphismSpec, strict: bool) -> ViolationReport {
    let (s, t) = (&phi.source, &phi.target);
    let mut r = ViolationReport::default();
    let l = |x: Elem| s.label(x).to_string();

    if phi.apply(s.zero()) != t.zero() {
        r.push(
            Axiom::HH1,
            [l(s.zero())],
            format!("φ(0) = {}", t.label(phi.apply(s.zero()))),
        );
    }
    for x in s.elems() {
        for y in s.elems() {
            let left = phi.apply(s.mul(x, y));
            let right = t.mul(phi.apply(x), phi.apply(y));
            if left != right {
                r.push(
                    Axiom::HH2,
                    [l(x), l(y)],
                    format!("φ(xy) = {} but φ(x)φ(y) = {}", t.label(left), t.label(right)),
                );
            }
            let image = phi.image(s.add(x, y));
            let sum = t.add(phi.apply(x), phi.apply(y));
            if !image.is_subset(sum) {
                r.push(
                    Axiom::HH3,
                    [l(x), l(y)],
                    format!(
                        "φ(x+y) = {} ⊄ φ(x)+φ(y) = {}",
                        t.fmt_set(image),
                        t.fmt_set(sum)
                    ),
                );
            } else if strict && image != sum {
                r.push(
                    Axiom::HH3Strict,
                    [l(x), l(y)],
                    format!(
                        "φ(x+y) = {} ≠ φ(x)+φ(y) = {}",
                        t.fmt_set(image),
                        t.fmt_set(sum)
                    ),
                );
            }
        }
        let left = phi.apply(s.neg(x));
        let right = t.neg(phi.apply(x));
        if left != right {
            r.push(
                Axiom::NegPreserved,
                [l(x)],
                format!("φ(-x) = {} but -φ(x) = {}", t.label(left), t.label(right)),
            );
        }
    }
    r
}

/// `{x : φ(x) = 0}` for a map that passes the homomorphism check.
pub fn kernel(phi: &HomomorphismSpec) -> Result<HSet> {
    let report = check_homomorphism(phi, false);
    if !report.is_clean() {
        return Err(Error::InvalidHomomorphism(report.to_string()));
    }
    let zero = phi.target.zero();
    Ok(phi
        .source
        .elems()
        .filter(|&x| phi.apply(x) == zero)
        .collect())
}

/// `a - b ⊆ S` and `ab ∈ S` for all `a, b ∈ S`.
pub fn is_strict_subhyperring(h: &FiniteHyperstructure, s: HSet) -> bool {
    strictness_witness(h, s).is_none()
}

/// A pair `(a, b)` of members of `S` with `a - b ⊄ S` or `ab ∉ S`.
pub fn strictness_witness(h: &FiniteHyperstructure, s: HSet) -> Option<(Elem, Elem)> {
    for a in s {
        for b in s {
            if !h.add(a, h.neg(b)).is_subset(s) || !s.contains(h.mul(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A subset carrying the induced structure `a +_S b = (a + b) ∩ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subhyperring {
    pub structure: FiniteHyperstructure,
    /// `embedding[i]` is the element of the ambient carrier behind index `i`.
    pub embedding: Vec<Elem>,
    pub strict: bool,
}

/// Builds the induced structure on `S`. Returns `None` when `0 ∉ S`, `S` is
/// not closed under multiplication, some induced sum is empty, or the induced
/// structure fails the hyperring checks.
pub fn induced_subhyperring(h: &FiniteHyperstructure, s: HSet) -> Option<Subhyperring> {
    if !s.contains(h.zero()) || !s.is_subset(h.carrier()) {
        return None;
    }
    let embedding: Vec<Elem> = s.to_vec();
    let pos = |x: Elem| embedding.iter().position(|&e| e == x);
    for &a in &embedding {
        for &b in &embedding {
            if !s.contains(h.mul(a, b)) || h.add(a, b).intersection(s).is_empty() {
                return None;
            }
        }
        if !s.contains(h.neg(a)) {
            return None;
        }
    }
    let labels = embedding.iter().map(|&x| h.label(x).to_string()).collect();
    let one = h.one().filter(|&o| s.contains(o)).and_then(pos);
    let structure = FiniteHyperstructure::from_fn(
        format!("{} restricted to {}", h.name(), h.fmt_set(s)),
        labels,
        pos(h.zero())?,
        one,
        |i| pos(h.neg(embedding[i])).expect("closed under negation"),
        |i, j| pos(h.mul(embedding[i], embedding[j])).expect("closed under multiplication"),
        |i, j| {
            h.add(embedding[i], embedding[j])
                .intersection(s)
                .iter()
                .filter_map(pos)
                .collect()
        },
    )
    .ok()?;
    if !check_hyperring(&structure).is_clean() {
        return None;
    }
    Some(Subhyperring {
        structure,
        strict: is_strict_subhyperring(h, s),
        embedding,
    })
}

/// Searches for a strict bijective homomorphism `a → b` sending `0 ↦ 0` and
/// `1 ↦ 1`.
pub fn find_isomorphism(a: &FiniteHyperstructure, b: &FiniteHyperstructure) -> Option<Vec<Elem>> {
    let n = a.size();
    if n != b.size() || a.one().is_some() != b.one().is_some() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    used[b.zero()] = true;
    if let (Some(oa), Some(ob)) = (a.one(), b.one()) {
        if oa == a.zero() {
            if ob != b.zero() {
                return None;
            }
        } else {
            if ob == b.zero() {
                return None;
            }
            map[oa] = ob;
            used[ob] = true;
        }
    }
    let order: Vec<Elem> = a.elems().filter(|&x| map[x] == usize::MAX).collect();
    if extend_isomorphism(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_isomorphism(
    a: &FiniteHyperstructure,
    b: &FiniteHyperstructure,
    order: &[Elem],
    depth: usize,
    map: &mut [Elem],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return is_isomorphism_map(a, b, map);
    }
    let x = order[depth];
    for y in b.elems() {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent_so_far(a, b, map) && extend_isomorphism(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

fn consistent_so_far(a: &FiniteHyperstructure, b: &FiniteHyperstructure, map: &[Elem]) -> bool {
    let known: Vec<Elem> = a.elems().filter(|&x| map[x] != usize::MAX).collect();
    for &x in &known {
        let nx = map[a.neg(x)];
        if nx != usize::MAX && nx != b.neg(map[x]) {
            return false;
        }
        for &y in &known {
            let p = map[a.mul(x, y)];
            if p != usize::MAX && p != b.mul(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

fn is_isomorphism_map(a: &FiniteHyperstructure, b: &FiniteHyperstructure, map: &[Elem]) -> bool {
    a.elems().all(|x| {
        a.elems().all(|y| {
            map[a.mul(x, y)] == b.mul(map[x], map[y])
                && a.add(x, y).map(|z| map[z]) == b.add(map[x], map[y])
        })
    })
}

/// `φ` is strict, bijective and passes every homomorphism check.
pub fn is_isomorphism(phi: &HomomorphismSpec) -> bool {
    phi.is_bijective() && check_homomorphism(phi, true).is_clean()
}
