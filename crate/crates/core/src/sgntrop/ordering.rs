use std::fmt;

use serde::Serialize;

use super::elem::{Gamma, Sign, StElem};
use super::field::{AddRule, SignedValueHyperfield};
use super::stset::StSet;
use crate::hypercore::{Axiom, ViolationReport};

/// A homomorphism `Z^k → {±1}`, given by the images of the standard
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Character {
    images: Vec<Sign>,
}

impl Character {
    pub fn new(images: Vec<Sign>) -> Self {
        Character { images }
    }

    pub fn trivial(k: usize) -> Self {
        Character::new(vec![Sign::Pos; k])
    }

    /// All `2^k` characters; bit `i` of the position marks `e_i ↦ -1`.
    pub fn all(k: usize) -> Vec<Character> {
        (0..1usize << k)
            .map(|mask| {
                Character::new(
                    (0..k)
                        .map(|i| if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Sign] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&s| s == Sign::Pos)
    }

    pub fn eval(&self, g: &Gamma) -> Sign {
        let odd = g
            .coords()
            .iter()
            .zip(&self.images)
            .filter(|(c, s)| **s == Sign::Neg && c.rem_euclid(2) == 1)
            .count();
        if odd % 2 == 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn times(&self, other: &Character) -> Character {
        Character::new(
            self.images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.times(*b))
                .collect(),
        )
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|s| format!("{s}1")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `(s, γ) ∈ P_h ⟺ s = h(γ)`.
pub fn ordering_contains(h: &Character, x: StElem) -> bool {
    match x {
        StElem::Zero => false,
        StElem::Nz(s, g) => h.eval(&g) == s,
    }
}

/// Some `δ ≥ β` has `h(δ) = s`. Holds at `β` itself, or at `β + e_i` for a
/// generator with `h(e_i) = -1`.
fn ray_meets(h: &Character, s: Sign, beta: Gamma) -> bool {
    h.eval(&beta) == s || !h.is_trivial()
}

/// Every `δ ≥ β` has `h(δ) = s`; the ray contains `β` and `β + e_i` for each
/// generator, so this forces `h` to be trivial.
fn ray_within(h: &Character, s: Sign, beta: Gamma) -> bool {
    h.is_trivial() && h.eval(&beta) == s
}

pub fn set_meets_ordering(h: &Character, a: &StSet) -> bool {
    a.points().any(|x| ordering_contains(h, x))
        || Sign::BOTH
            .iter()
            .any(|&s| a.ray_start(s).is_some_and(|b| ray_meets(h, s, b)))
}

pub fn set_within_ordering(h: &Character, a: &StSet) -> bool {
    !a.has_zero()
        && a.points().all(|x| ordering_contains(h, x))
        && Sign::BOTH
            .iter()
            .all(|&s| a.ray_start(s).is_none_or(|b| ray_within(h, s, b)))
}

/// Outcome of a symbolic universal check: the window sweep and the
/// row-by-row case analysis must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicVerdict {
    pub window_bound: i64,
    pub window: bool,
    pub case_analysis: bool,
    /// One line per row shape of the addition table.
    pub cases: Vec<String>,
    pub report: ViolationReport,
}

impl SymbolicVerdict {
    pub fn agree(&self) -> bool {
        self.window == self.case_analysis
    }

    pub fn holds(&self) -> bool {
        self.agree() && self.window
    }
}

/// Ordering axioms for `P_h`, swept over the window `[-b, b]^k`.
pub fn ordering_window_report(f: &SignedValueHyperfield, h: &Character, b: i64) -> ViolationReport {
    let mut r = ViolationReport::default();
    let members: Vec<StElem> = f
        .window(b)
        .into_iter()
        .filter(|&x| ordering_contains(h, x))
        .collect();
    for x in f.window(b).into_iter().filter(|x| !x.is_zero()) {
        let inside = ordering_contains(h, x);
        let opposite = ordering_contains(h, x.negate());
        if inside && opposite {
            r.push(Axiom::OrdDisjoint, [x], "x and -x both positive");
        }
        if !inside && !opposite {
            r.push(Axiom::OrdCovers, [x], "neither x nor -x is positive");
        }
    }
    for &x in &members {
        for &y in &members {
            let s = f.add(x, y);
            if !set_within_ordering(h, &s) {
                r.push(Axiom::OrdAdditive, [x, y], format!("x+y = {s}"));
            }
            if !ordering_contains(h, x.times(y)) {
                r.push(
                    Axiom::OrdMultiplicative,
                    [x, y],
                    format!("xy = {}", x.times(y)),
                );
            }
        }
    }
    r
}

/// Whether `P_h` is an ordering, decided from the shape of each addition row.
pub fn ordering_case_analysis(f: &SignedValueHyperfield, h: &Character) -> (bool, Vec<String>) {
    let mut cases = vec![
        "products: h(γ+δ) = h(γ)h(δ), so P_h·P_h ⊆ P_h".to_string(),
        "exactly one of (s,γ), (-s,γ) has s = h(γ), so P_h ⊔ -P_h = F×".to_string(),
    ];
    let ok = match f.rule() {
        AddRule::Tropical => {
            cases.push("same sign: sum is (s,min), the summand of least value, in P_h".into());
            cases.push(
                "opposite signs, distinct values: sum is the summand of least value, in P_h".into(),
            );
            cases.push(
                "opposite signs, equal value: impossible inside P_h since s = h(γ) fixes the sign"
                    .into(),
            );
            true
        }
        AddRule::PAdic { .. } => {
            cases.push("same sign, distinct values: sum (s,min) lies in P_h".into());
            let trivial = h.is_trivial();
            cases.push(format!(
                "same sign, equal value γ: the sum is a ray of sign s above γ; inside P_h iff h is trivial ({})",
                if trivial { "holds" } else { "fails" }
            ));
            cases.push(format!(
                "opposite signs, distinct values: members of P_h with distinct values have opposite signs iff h is nontrivial; the sum then has both signs ({})",
                if trivial { "row absent" } else { "fails" }
            ));
            trivial
        }
    };
    (ok, cases)
}

/// Ordering check for `P_h` by window sweep and case analysis.
pub fn st_is_ordering(f: &SignedValueHyperfield, h: &Character, b: i64) -> SymbolicVerdict {
    let report = ordering_window_report(f, h, b);
    let (case_analysis, cases) = ordering_case_analysis(f, h);
    SymbolicVerdict {
        window_bound: b,
        window: report.is_clean(),
        case_analysis,
        cases,
        report,
    }
}

/// Every ordering `P_h` of `f` with `h` ranging over all characters.
///
/// Every ordering is an index-2 subgroup of `F× ≅ {±1} × Z^k` avoiding
/// `-1 = (-,0)`, hence the kernel of `(s,γ) ↦ s·h(γ)` for some character `h`;
/// so filtering the characters is exhaustive.
pub fn st_orderings(f: &SignedValueHyperfield, b: i64) -> Vec<Character> {
    Character::all(f.rank())
        .into_iter()
        .filter(|h| st_is_ordering(f, h, b).holds())
        .collect()
}

/// Signature of `x` with respect to `P_h`.
pub fn st_signature(h: &Character, x: StElem) -> Option<Sign> {
    match x {
        StElem::Zero => None,
        StElem::Nz(s, g) => Some(s.times(h.eval(&g))),
    }
}
