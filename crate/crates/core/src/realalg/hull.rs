use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::FiniteHyperstructure;

use super::orderings::is_ordering;

/// The eventually periodic sequence `I_1 = {1}`, `I_{n+1} = I_n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InSeq {
    /// `sets[n - 1] = I_n` up to the last set before the first repeat.
    pub sets: Vec<HSet>,
    /// Index `n` at which the cycle begins.
    pub cycle_start: usize,
    pub cycle_length: usize,
}

impl InSeq {
    /// `I_n` for `n ≥ 1`.
    pub fn get(&self, n: usize) -> HSet {
        assert!(n >= 1, "I_n is indexed from 1");
        if n <= self.sets.len() {
            return self.sets[n - 1];
        }
        let offset = (n - self.cycle_start) % self.cycle_length;
        self.sets[self.cycle_start - 1 + offset]
    }

    /// The distinct sets of the sequence, covering every `n`.
    pub fn distinct(&self) -> &[HSet] {
        &self.sets
    }
}

/// `I_n` by direct iteration.
pub fn compute_in(h: &FiniteHyperstructure, n: usize) -> Result<HSet> {
    if n == 0 {
        return Err(Error::Precondition("I_n is indexed from 1".into()));
    }
    let one = h
        .one()
        .ok_or_else(|| Error::Precondition(format!("{} has no unit", h.name())))?;
    let mut cur = HSet::singleton(one);
    for _ in 1..n {
        cur = h.sum_elem(cur, one);
    }
    Ok(cur)
}

pub fn in_sequence(h: &FiniteHyperstructure) -> Result<InSeq> {
    let one = h
        .one()
        .ok_or_else(|| Error::Precondition(format!("{} has no unit", h.name())))?;
    let mut sets = vec![HSet::singleton(one)];
    loop {
        let next = h.sum_elem(*sets.last().expect("nonempty"), one);
        if let Some(pos) = sets.iter().position(|&s| s == next) {
            return Ok(InSeq {
                cycle_start: pos + 1,
                cycle_length: sets.len() - pos,
                sets,
            });
        }
        sets.push(next);
    }
}

/// Pairs `(n, m)` with `n, m ≤ up_to` where `I_n + I_m = I_{n+m}` or
/// `I_n·I_m ⊆ I_{nm}` fails.
pub fn in_law_failures(h: &FiniteHyperstructure, up_to: usize) -> Result<Vec<(usize, usize, &'static str)>> {
    let seq = in_sequence(h)?;
    let mut out = Vec::new();
    for n in 1..=up_to {
        for m in 1..=up_to {
            if h.sum(seq.get(n), seq.get(m)) != seq.get(n + m) {
                out.push((n, m, "I_n + I_m ≠ I_{n+m}"));
            }
            if !h.set_mul(seq.get(n), seq.get(m)).is_subset(seq.get(n * m)) {
                out.push((n, m, "I_n·I_m ⊄ I_{nm}"));
            }
        }
    }
    Ok(out)
}

/// How `(I_n ± a) ∩ P ≠ ∅` and `1 ± I_n·a ⊆ P` combine their two signs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum HullReading {
    /// Both signs are required.
    #[default]
    Conjunctive,
    /// One sign suffices.
    Disjunctive,
}

impl HullReading {
    fn combine(self, a: bool, b: bool) -> bool {
        match self {
            HullReading::Conjunctive => a && b,
            HullReading::Disjunctive => a || b,
        }
    }
}

fn valid_ordering(h: &FiniteHyperstructure, p: HSet) -> Result<()> {
    let report = is_ordering(h, p);
    if report.is_clean() {
        Ok(())
    } else {
        Err(Error::InvalidOrdering(report.to_string()))
    }
}

/// `a ∈ A(P)`: some `n` has `(I_n + a) ∩ P ≠ ∅` and `(I_n - a) ∩ P ≠ ∅`.
pub fn in_a_of_p(h: &FiniteHyperstructure, seq: &InSeq, p: HSet, a: Elem, reading: HullReading) -> bool {
    seq.distinct().iter().any(|&i| {
        reading.combine(
            h.sum_elem(i, a).meets(p),
            h.sum_elem(i, h.neg(a)).meets(p),
        )
    })
}

/// `a ∈ I(P)`: every `n` has `1 + I_n·a ⊆ P` and `1 - I_n·a ⊆ P`.
pub fn in_i_of_p(h: &FiniteHyperstructure, seq: &InSeq, p: HSet, a: Elem, reading: HullReading) -> bool {
    let one = h.one().expect("checked by in_sequence");
    seq.distinct().iter().all(|&i| {
        let scaled = h.scale(i, a);
        reading.combine(
            h.sum_elem(scaled, one).is_subset(p),
            h.sum_elem(h.neg_set(scaled), one).is_subset(p),
        )
    })
}

pub fn a_of_p_with(h: &FiniteHyperstructure, p: HSet, reading: HullReading) -> Result<HSet> {
    valid_ordering(h, p)?;
    let seq = in_sequence(h)?;
    Ok(h.elems().filter(|&a| in_a_of_p(h, &seq, p, a, reading)).collect())
}

pub fn i_of_p_with(h: &FiniteHyperstructure, p: HSet, reading: HullReading) -> Result<HSet> {
    valid_ordering(h, p)?;
    let seq = in_sequence(h)?;
    Ok(h.elems().filter(|&a| in_i_of_p(h, &seq, p, a, reading)).collect())
}

/// `A(P)` under the conjunctive reading.
pub fn a_of_p(h: &FiniteHyperstructure, p: HSet) -> Result<HSet> {
    a_of_p_with(h, p, HullReading::Conjunctive)
}

/// `I(P)` under the conjunctive reading.
pub fn i_of_p(h: &FiniteHyperstructure, p: HSet) -> Result<HSet> {
    i_of_p_with(h, p, HullReading::Conjunctive)
}

/// `A(P) = F`.
pub fn is_archimedean(h: &FiniteHyperstructure, p: HSet) -> Result<bool> {
    Ok(a_of_p(h, p)? == h.carrier())
}
