use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::{
    check_hyperfield, is_strict_subhyperring, FiniteHyperstructure, HomomorphismSpec,
};

/// Carriers above this size are refused by [`enumerate_hyperideals`].
pub const HYPERIDEAL_SEARCH_BOUND: usize = 64;

/// A strict subhyperring `I` with `r·x ∈ I` for every `r ∈ R`, `x ∈ I`.
pub fn is_hyperideal(r: &FiniteHyperstructure, i: HSet) -> bool {
    hyperideal_failure(r, i).is_none()
}

fn hyperideal_failure(r: &FiniteHyperstructure, i: HSet) -> Option<String> {
    if !i.is_subset(r.carrier()) {
        return Some("subset leaves the carrier".into());
    }
    if !i.contains(r.zero()) {
        return Some("0 is missing".into());
    }
    if !is_strict_subhyperring(r, i) {
        return Some(format!("{} is not a strict subhyperring", r.fmt_set(i)));
    }
    for x in i {
        for a in r.elems() {
            if !i.contains(r.mul(a, x)) {
                return Some(format!(
                    "{}·{} = {} leaves the set",
                    r.label(a),
                    r.label(x),
                    r.label(r.mul(a, x))
                ));
            }
        }
    }
    None
}

/// `R/I` with the canonical projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub structure: FiniteHyperstructure,
    /// `class_of[x]` is the class `x + I`.
    pub class_of: Vec<Elem>,
    /// Members of each class, indexed like the quotient carrier.
    pub classes: Vec<HSet>,
}

impl Quotient {
    pub fn projection(&self, source: &FiniteHyperstructure) -> HomomorphismSpec {
        HomomorphismSpec {
            source: source.clone(),
            target: self.structure.clone(),
            map: self.class_of.clone(),
        }
    }
}

/// Classes `x + I` under `x ~ y ⟺ (x - y) ∩ I ≠ ∅`, with
/// `(x+I) + (y+I) = {z + I : z ∈ x + y}` and `(x+I)(y+I) = xy + I`.
pub fn quotient_hyperring(r: &FiniteHyperstructure, i: HSet) -> Result<Quotient> {
    if let Some(why) = hyperideal_failure(r, i) {
        return Err(Error::NotHyperideal(why));
    }
    let mut class_of = vec![usize::MAX; r.size()];
    let mut classes: Vec<HSet> = Vec::new();
    for x in r.elems() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let members: HSet = r
            .elems()
            .filter(|&y| r.add(x, r.neg(y)).meets(i))
            .collect();
        for y in members {
            class_of[y] = classes.len();
        }
        classes.push(members);
    }
    let reps: Vec<Elem> = classes.iter().map(|c| c.first().expect("nonempty")).collect();
    let labels = if i.len() == 1 {
        r.labels().to_vec()
    } else {
        reps.iter().map(|&x| format!("{}+I", r.label(x))).collect()
    };
    let cls = &class_of;
    let one = r.one().map(|o| cls[o]).filter(|&o| o != cls[r.zero()]);
    let structure = FiniteHyperstructure::from_fn(
        format!("{}/{}", r.name(), r.fmt_set(i)),
        labels,
        cls[r.zero()],
        one,
        |c| cls[r.neg(reps[c])],
        |a, b| cls[r.mul(reps[a], reps[b])],
        |a, b| r.add(reps[a], reps[b]).map(|z| cls[z]),
    )?;
    Ok(Quotient {
        structure,
        class_of,
        classes,
    })
}

/// `xy ∈ I ⇒ x ∈ I ∨ y ∈ I`, checked on the definition.
pub fn is_prime_direct(r: &FiniteHyperstructure, i: HSet) -> bool {
    is_hyperideal(r, i)
        && r.elems().all(|x| {
            r.elems()
                .all(|y| !i.contains(r.mul(x, y)) || i.contains(x) || i.contains(y))
        })
}

/// `I ≠ R` and no hyperideal lies strictly between `I` and `R`.
pub fn is_maximal_direct(r: &FiniteHyperstructure, i: HSet) -> Result<bool> {
    if !is_hyperideal(r, i) || i == r.carrier() {
        return Ok(false);
    }
    Ok(enumerate_hyperideals(r)?
        .into_iter()
        .all(|j| !(i.is_subset(j) && i != j && j != r.carrier())))
}

/// `R/I` has no zero divisors.
pub fn is_prime_via_quotient(r: &FiniteHyperstructure, i: HSet) -> bool {
    let Ok(q) = quotient_hyperring(r, i) else {
        return false;
    };
    let s = &q.structure;
    s.nonzero()
        .iter()
        .all(|x| s.nonzero().iter().all(|y| s.mul(x, y) != s.zero()))
}

/// `R/I` is a hyperfield.
pub fn is_maximal_via_quotient(r: &FiniteHyperstructure, i: HSet) -> bool {
    match quotient_hyperring(r, i) {
        Ok(q) => check_hyperfield(&q.structure).is_clean(),
        Err(_) => false,
    }
}

/// Prime by definition; panics if the quotient characterization disagrees.
pub fn is_prime(r: &FiniteHyperstructure, i: HSet) -> bool {
    let direct = is_prime_direct(r, i);
    let via = is_hyperideal(r, i) && is_prime_via_quotient(r, i);
    assert_eq!(
        direct,
        via,
        "primality of {} in {} disagrees with its quotient",
        r.fmt_set(i),
        r.name()
    );
    direct
}

/// Maximal by definition; panics if the quotient characterization disagrees.
/// Requires a unit in `R`.
pub fn is_maximal(r: &FiniteHyperstructure, i: HSet) -> Result<bool> {
    let direct = is_maximal_direct(r, i)?;
    let via = is_maximal_via_quotient(r, i);
    assert_eq!(
        direct,
        via,
        "maximality of {} in {} disagrees with its quotient",
        r.fmt_set(i),
        r.name()
    );
    Ok(direct)
}

/// Smallest hyperideal containing `seed`.
pub fn hyperideal_closure(r: &FiniteHyperstructure, seed: HSet) -> HSet {
    let mut i = seed.with(r.zero());
    loop {
        let mut next = i;
        for x in i {
            for y in i {
                next = next.union(r.add(x, r.neg(y)));
            }
            for a in r.elems() {
                next.insert(r.mul(a, x));
            }
        }
        if next == i {
            return i;
        }
        i = next;
    }
}

/// Every hyperideal, found by saturating `{0}` and then adjoining one element
/// at a time to each ideal already found. Sorted by size, then bit pattern.
pub fn enumerate_hyperideals(r: &FiniteHyperstructure) -> Result<Vec<HSet>> {
    if r.size() > HYPERIDEAL_SEARCH_BOUND {
        return Err(Error::BoundExceeded {
            what: "carrier",
            value: r.size(),
            bound: HYPERIDEAL_SEARCH_BOUND,
        });
    }
    let mut found = vec![hyperideal_closure(r, HSet::EMPTY)];
    let mut k = 0;
    while k < found.len() {
        let base = found[k];
        for x in r.carrier().difference(base) {
            let j = hyperideal_closure(r, base.with(x));
            if !found.contains(&j) {
                found.push(j);
            }
        }
        k += 1;
    }
    // On a structure that fails the hyperring axioms a closure may still miss
    // the strictness requirement.
    found.retain(|&j| is_hyperideal(r, j));
    found.sort_by_key(|j| (j.len(), j.bits()));
    Ok(found)
}
