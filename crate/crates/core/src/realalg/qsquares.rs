//! `Q` modulo the nonzero squares. Classes are signed squarefree integers.

use serde::Serialize;

use crate::constructions::arith::{
    is_square, is_sum_of_three_squares, is_sum_of_two_squares, positive_squares_witness,
    squarefree_part,
};
use crate::constructions::{q_factor_class, q_factor_sum, QClass, QSubgroup, Rational};
use crate::error::{Error, Result};

/// Whether `n` is squarefree and nonzero.
pub fn is_squarefree(n: i64) -> bool {
    n != 0 && squarefree_part(n) == n
}

/// Squarefree classes `s` with `|s| ≤ bound`, ascending.
pub fn squarefree_classes(bound: i64) -> Vec<i64> {
    (-bound..=bound).filter(|&s| is_squarefree(s)).collect()
}

/// Exact membership `[s] ∈ I_n`: `s` is a sum of `n` nonzero rational squares.
///
/// A nonzero rational square splits into two nonzero squares
/// (`q² = (3q/5)² + (4q/5)²`), so the number of terms can always be raised;
/// hence `I_1 = {[1]}`, `I_2` is the two-squares classes, `I_3` the positive
/// classes with `s ≢ 7 (mod 8)`, and `I_n` for `n ≥ 4` every positive class.
pub fn q_squares_in_contains(n: usize, s: i64) -> Result<bool> {
    if !is_squarefree(s) {
        return Err(Error::Precondition(format!("{s} is not a squarefree class")));
    }
    Ok(match n {
        0 => return Err(Error::Precondition("I_n is indexed from 1".into())),
        1 => s == 1,
        _ if s < 0 => false,
        2 => is_sum_of_two_squares(s),
        3 => is_sum_of_three_squares(s),
        _ => true,
    })
}

/// `n` positive rationals whose squares sum to `s·k²` over `k²` for the least
/// `k ≤ height` that works.
pub fn q_squares_in_witness(n: usize, s: i64, height: u64) -> Option<Vec<Rational>> {
    (1..=height as i64).find_map(|k| {
        positive_squares_witness(s * k * k, n)
            .map(|w| w.into_iter().map(|x| Rational::new(x, k)).collect())
    })
}

/// Re-derives the class of `Σ xᵢ²`.
pub fn verify_in_witness(s: i64, w: &[Rational]) -> bool {
    let total: Rational = w.iter().map(|x| x * x).sum();
    !w.is_empty()
        && w.iter().all(|x| *x.numer() != 0)
        && *total.numer() != 0
        && q_factor_class(total, QSubgroup::Squares) == QClass::Squarefree(s)
}

/// Evidence for `I_2·I_2 = I_2 ⊊ I_4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquaresInReport {
    pub height: u64,
    /// Classes of `I_2` with `|s| ≤ height`.
    pub i2_classes: Vec<i64>,
    /// Products `[s][t]` of `I_2` classes that left `I_2`.
    pub product_counterexamples: Vec<(i64, i64)>,
    /// `[1] ∈ I_2`, so every member of `I_2` is a product `[s]·[1]`.
    pub product_covers_i2: bool,
    /// The bounded search for `[1] + [1]` finds exactly the two-squares
    /// classes up to the height, and nothing outside the certificate.
    pub search_agrees: bool,
    /// `[7]` with four positive squares summing into it.
    pub seven_in_i4: Option<Vec<Rational>>,
    pub seven_in_i2: bool,
    pub seven_in_i3: bool,
}

impl SquaresInReport {
    pub fn holds(&self) -> bool {
        self.product_counterexamples.is_empty()
            && self.product_covers_i2
            && self.search_agrees
            && self.seven_in_i4.as_ref().is_some_and(|w| verify_in_witness(7, w))
            && !self.seven_in_i2
    }
}

pub fn squares_in_report(height: u64) -> Result<SquaresInReport> {
    let bound = height as i64;
    let mut i2 = Vec::new();
    for s in squarefree_classes(bound) {
        if q_squares_in_contains(2, s)? {
            i2.push(s);
        }
    }
    let mut counterexamples = Vec::new();
    for &s in &i2 {
        for &t in &i2 {
            if !q_squares_in_contains(2, squarefree_part(s * t))? {
                counterexamples.push((s, t));
            }
        }
    }
    let one = QClass::Squarefree(1);
    let sum = q_factor_sum(&one, &one, QSubgroup::Squares, height)?;
    let mut search_agrees = sum.consistent();
    for s in squarefree_classes(bound) {
        let c = QClass::Squarefree(s);
        search_agrees &= sum.members.contains(&c) == q_squares_in_contains(2, s)?;
    }
    // Classes the search reached must carry verifiable witnesses.
    search_agrees &= crate::constructions::verify_witnesses(&one, &one, QSubgroup::Squares, &sum);
    Ok(SquaresInReport {
        height,
        product_covers_i2: i2.contains(&1),
        i2_classes: i2,
        product_counterexamples: counterexamples,
        search_agrees,
        seven_in_i4: q_squares_in_witness(4, 7, height),
        seven_in_i2: q_squares_in_contains(2, 7)?,
        seven_in_i3: q_squares_in_contains(3, 7)?,
    })
}

/// Archimedean check for the ordering of positive classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquaresArchimedean {
    pub height: u64,
    pub classes_checked: usize,
    /// `(s, m, witness)`: the witness squares sum to the squarefree part `c`
    /// of `m`, so `[c] ∈ I_4`; with `t = m/c` a square, `c·t ± s = m ± s > 0`
    /// puts a positive class in both `(I_4 ± [s])`.
    pub witnesses: Vec<(i64, i64, Vec<Rational>)>,
    pub failures: Vec<i64>,
    /// Every positive class lies in `I_4`, so the ordering is forced.
    pub i4_is_positive_cone: bool,
}

impl SquaresArchimedean {
    pub fn archimedean(&self) -> bool {
        self.failures.is_empty() && self.i4_is_positive_cone
    }
}

/// `A(P) = F` for `P` the positive classes, class by class up to `height`.
pub fn q_squares_archimedean(height: u64) -> Result<SquaresArchimedean> {
    let bound = height as i64;
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    let classes = squarefree_classes(bound);
    let mut i4_is_positive_cone = true;
    for &s in &classes {
        i4_is_positive_cone &= q_squares_in_contains(4, s)? == (s > 0);
        let m = s.abs() + 1;
        let w = q_squares_in_witness(4, squarefree_part(m), height);
        let sound = w.as_ref().is_some_and(|w| {
            let total: Rational = w.iter().map(|x| x * x).sum();
            verify_in_witness(squarefree_part(m), w) && *total.numer() > 0
        });
        if sound && m + s > 0 && m - s > 0 {
            witnesses.push((s, m, w.expect("checked")));
        } else {
            failures.push(s);
        }
    }
    // The zero class: (I_1 ± 0) ∩ P = {[1]}.
    Ok(SquaresArchimedean {
        height,
        classes_checked: classes.len() + 1,
        witnesses,
        failures,
        i4_is_positive_cone,
    })
}

/// The orderings of `Q/squares`: an ordering contains every `I_n`, and
/// `I_4` is all positive classes, so the positive classes are the only
/// candidate; they are closed under sums since `at + bu > 0`.
pub fn q_squares_ordering_count(height: u64) -> Result<usize> {
    let arch = q_squares_archimedean(height)?;
    Ok(usize::from(arch.i4_is_positive_cone))
}

/// Whether `r` is a nonzero rational square.
pub fn is_rational_square(r: Rational) -> bool {
    *r.numer() > 0 && is_square(*r.numer()) && is_square(*r.denom())
}
