use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Witnesses kept per axiom unless a different limit is requested.
pub const DEFAULT_WITNESS_LIMIT: usize = 10;

/// Every law a checker in this crate can report as violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    /// Associativity of the set-lifted addition.
    H1,
    /// Commutativity of addition.
    H2,
    /// Existence and uniqueness of `-x` with `0 ∈ x - x`.
    H3,
    /// Reversibility: `z ∈ x + y ⇒ y ∈ z - x`.
    H4,
    /// `x + 0 = {x}`, a consequence of H3 and H4.
    ZeroNeutral,
    MulCommutative,
    MulAssociative,
    ZeroAbsorbs,
    /// `x(y + z) = xy + xz`.
    R3,
    /// Presence of a multiplicative unit different from zero.
    Unity,
    /// Nonzero elements form a multiplicative group.
    MulGroup,
    HH1,
    HH2,
    HH3,
    HH3Strict,
    NegPreserved,
    /// Closure of a subset under the operations it must be closed under.
    Closure,
    /// An induced hyperoperation produced an empty set.
    EmptyInducedSum,
    OrdAdditive,
    OrdMultiplicative,
    OrdDisjoint,
    OrdCovers,
    PreAdditive,
    PreMultiplicative,
    PreSquares,
    PreMinusOne,
    V1,
    V2,
    V3,
    /// `v(1) = v(-1) = 0`.
    ValUnit,
    /// `v(-a) = v(a)`.
    ValNeg,
    /// `v(a⁻¹) = -v(a)`.
    ValInverse,
    /// `v(a) ≠ v(b) ⇒ v(c) = min` for `c ∈ a + b`.
    ValStrictMin,
    /// Subhyperring requirement of a valuation hyperring.
    VrSubring,
    /// `x ∈ O` or `x⁻¹ ∈ O`.
    VrInverse,
    /// `a - b ⊆ O`.
    VrStrict,
    /// Value-group order axioms.
    GroupOrder,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Labels of the elements witnessing the failure.
    pub witness: Vec<String>,
    pub detail: String,
}

/// Outcome of an axiom checker: empty iff every checked law holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    limit: usize,
    violations: Vec<Violation>,
    totals: BTreeMap<Axiom, usize>,
}

impl Default for ViolationReport {
    fn default() -> Self {
        Self::new(DEFAULT_WITNESS_LIMIT)
    }
}

impl ViolationReport {
    pub fn new(limit: usize) -> Self {
        ViolationReport {
            limit,
            violations: Vec::new(),
            totals: BTreeMap::new(),
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn push<S: ToString>(
        &mut self,
        axiom: Axiom,
        witness: impl IntoIterator<Item = S>,
        detail: impl Into<String>,
    ) {
        let count = self.totals.entry(axiom).or_insert(0);
        *count += 1;
        if *count <= self.limit {
            self.violations.push(Violation {
                axiom,
                witness: witness.into_iter().map(|w| w.to_string()).collect(),
                detail: detail.into(),
            });
        }
    }

    pub fn is_clean(&self) -> bool {
        self.totals.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.totals.contains_key(&axiom)
    }

    /// Number of failures seen for `axiom`, including ones past the witness limit.
    pub fn count(&self, axiom: Axiom) -> usize {
        self.totals.get(&axiom).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.totals.values().sum()
    }

    pub fn axioms(&self) -> impl Iterator<Item = Axiom> + '_ {
        self.totals.keys().copied()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub fn merge(&mut self, other: ViolationReport) {
        for v in other.violations {
            let shown = self.violations.iter().filter(|w| w.axiom == v.axiom).count();
            if shown < self.limit {
                self.violations.push(v);
            }
        }
        for (axiom, n) in other.totals {
            *self.totals.entry(axiom).or_insert(0) += n;
        }
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "no violations");
        }
        for (axiom, n) in &self.totals {
            writeln!(f, "{axiom}: {n} violation(s)")?;
            for v in self.violations.iter().filter(|v| v.axiom == *axiom) {
                writeln!(f, "  [{}] {}", v.witness.join(", "), v.detail)?;
            }
        }
        Ok(())
    }
}
