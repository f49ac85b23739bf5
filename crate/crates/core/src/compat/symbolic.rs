use serde::Serialize;

use super::finite::{CompatReport, Convexity};
use crate::constructions::{q_factor_class, subgroup_elements, QClass, QSubgroup, Rational};
use crate::error::{Error, Result};
use crate::hset::HSet;
use crate::realalg::{enumerate_orderings, is_ordering};
use crate::sgntrop::{
    ordering_contains, set_meets_ordering, set_within_ordering, st_a_of_p, st_in_a_of_p,
    st_is_ordering, st_maximal_ideal, st_residue, st_signature, st_valuation_ring, Character,
    Gamma, Sign, SignedValueHyperfield, StElem, StSet, SymbolicResidue,
};

fn check_ordering(f: &SignedValueHyperfield, h: &Character, b: i64) -> Result<()> {
    if h.rank() != f.rank() {
        return Err(Error::Precondition(format!(
            "character of rank {} on {}",
            h.rank(),
            f.name()
        )));
    }
    let verdict = st_is_ordering(f, h, b);
    if !verdict.holds() {
        return Err(Error::InvalidOrdering(format!("P_{h} on {}", f.name())));
    }
    Ok(())
}

fn v_geq(a: StElem, b: StElem) -> bool {
    match (a.value(), b.value()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x >= y,
    }
}

/// Classes of the units of `P_h` in the residue hyperfield.
pub fn st_induced_residue_set(f: &SignedValueHyperfield, residue: &SymbolicResidue, h: &Character) -> HSet {
    let m = st_maximal_ideal(f);
    [f.one(), f.minus_one()]
        .into_iter()
        .filter(|&u| ordering_contains(h, u))
        .filter_map(|u| residue.class_of(f, &m, u))
        .collect()
}

/// Case analysis for condition (iv): multiplying by `a⁻¹` moves any pair
/// with `v(a) < v(b)` to `a = (±, 0)` and `b` of positive value, and the sums
/// only depend on whether the values differ.
fn st_cond_iv_cases(f: &SignedValueHyperfield, h: &Character) -> (bool, Vec<String>) {
    let k = f.rank();
    let mut highs = vec![Gamma::least_positive(k)];
    highs.extend((0..k).map(|i| Gamma::unit(k, i)));
    let mut cases = Vec::new();
    let mut holds = true;
    for a in [f.one(), f.minus_one()] {
        for g in &highs {
            for b in [StElem::pos(*g), StElem::neg_of(*g), StElem::Zero] {
                let plus = f.add(b, a);
                let minus = f.sub(b, a);
                let hyp = set_meets_ordering(h, &plus) && set_meets_ordering(h, &minus);
                if hyp {
                    holds = false;
                    cases.push(format!("a = {a}, b = {b}: b + a = {plus}, b - a = {minus} both meet P"));
                }
            }
        }
    }
    if holds {
        cases.push("v(a) < v(b): one of b ± a is a single point outside P".into());
    }
    (holds, cases)
}

/// Compatibility of the canonical valuation with `P_h`. Every condition is
/// decided exactly and cross-checked on the window; a mismatch is an error.
pub fn st_compatibility_report(f: &SignedValueHyperfield, h: &Character, b: i64) -> Result<CompatReport> {
    check_ordering(f, h, b)?;
    let o = st_valuation_ring(f);
    let m = st_maximal_ideal(f);
    let window = f.window(b);
    let mismatch = |c: &str| Error::Precondition(format!("condition {c}: exact and window verdicts differ"));

    let a = st_a_of_p(f, h)?;
    let cond_i = a.is_subset(&o);
    let mut witness_i = None;
    for &x in &window {
        if st_in_a_of_p(f, h, x)? && !o.contains(x) {
            witness_i = Some(format!("{x} ∈ A(P) but v({x}) < 0"));
            break;
        }
    }
    if cond_i == witness_i.is_some() {
        return Err(mismatch("i"));
    }

    let residue = st_residue(f)?;
    let pbar = st_induced_residue_set(f, &residue, h);
    let report = is_ordering(&residue.structure, pbar);
    let cond_ii = report.is_clean();
    let witness_ii = (!cond_ii).then(|| {
        format!(
            "P̄ = {} fails: {}",
            residue.structure.fmt_set(pbar),
            report.violations()[0].detail
        )
    });

    let one_plus_m = f.elem_plus_set(f.one(), &m)?;
    let cond_iii = set_within_ordering(h, &one_plus_m);
    let witness_iii = window
        .iter()
        .filter(|x| m.contains(**x))
        .find_map(|&x| {
            let s = f.add(f.one(), x);
            s.members_in_window(f.rank(), b)
                .into_iter()
                .find(|&y| !ordering_contains(h, y))
                .map(|y| format!("1 + {x} ∋ {y} ∉ P"))
        });
    if cond_iii == witness_iii.is_some() {
        return Err(mismatch("iii"));
    }

    let (cond_iv, cases) = st_cond_iv_cases(f, h);
    let mut witness_iv = None;
    'outer: for &x in &window {
        for &y in &window {
            let hyp = set_meets_ordering(h, &f.add(y, x)) && set_meets_ordering(h, &f.sub(y, x));
            if hyp && !v_geq(x, y) {
                witness_iv = Some(format!("a = {x}, b = {y}: (b ± a) ∩ P ≠ ∅ but v(a) < v(b)"));
                break 'outer;
            }
        }
    }
    if cond_iv == witness_iv.is_some() {
        return Err(mismatch("iv"));
    }
    let witness_iv = witness_iv.or_else(|| (!cond_iv).then(|| cases.join("; ")));

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

/// Bounded search for `a < x < b` with `a, b ∈ O` and `x ∉ O`.
pub fn st_convexity_check(f: &SignedValueHyperfield, h: &Character, b: i64) -> Result<Convexity> {
    check_ordering(f, h, b)?;
    let o = st_valuation_ring(f);
    let window = f.window(b);
    let less = |a: StElem, x: StElem| set_within_ordering(h, &f.sub(x, a));
    let inside: Vec<StElem> = window.iter().copied().filter(|x| o.contains(*x)).collect();
    let outside: Vec<StElem> = window.iter().copied().filter(|x| !o.contains(*x)).collect();
    let mut violations = Vec::new();
    let mut checked = 0;
    for &a in &inside {
        for &x in &outside {
            if !less(a, x) {
                checked += inside.len();
                continue;
            }
            for &c in &inside {
                checked += 1;
                if less(x, c) {
                    violations.push((a.to_string(), x.to_string(), c.to_string()));
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

/// `x ∈ T` for the preordering lifted from a residue ordering: `v(x)` is
/// even and the unit of the same sign lands in `𝔭`.
pub fn st_lift_contains(f: &SignedValueHyperfield, residue: &SymbolicResidue, pbar: HSet, x: StElem) -> bool {
    let m = st_maximal_ideal(f);
    match (x.sign(), x.value()) {
        (Some(s), Some(g)) if g.is_even() => {
            let unit = StElem::Nz(s, f.zero_value());
            residue.class_of(f, &m, unit).is_some_and(|c| pbar.contains(c))
        }
        _ => false,
    }
}

/// Orderings `P_h` compatible with the canonical valuation that induce `𝔭`,
/// found by branching on the sign of each generator above the lifted
/// preordering. With `all = false` only the first branch is returned.
pub fn st_lift_ordering(f: &SignedValueHyperfield, pbar: HSet, all: bool, b: i64) -> Result<Vec<Character>> {
    let residue = st_residue(f)?;
    if enumerate_orderings(&residue.structure)?.is_empty() {
        return Err(Error::NonRealResidue);
    }
    let report = is_ordering(&residue.structure, pbar);
    if !report.is_clean() {
        return Err(Error::InvalidOrdering(report.to_string()));
    }
    let window = f.window(b);
    let t: Vec<StElem> = window
        .iter()
        .copied()
        .filter(|&x| st_lift_contains(f, &residue, pbar, x))
        .collect();
    let in_t = |s: &StSet| {
        s.members_in_window(f.rank(), b)
            .into_iter()
            .all(|y| y.is_zero() || st_lift_contains(f, &residue, pbar, y))
    };
    for &x in &t {
        for &y in &t {
            if !in_t(&f.add(x, y)) || !st_lift_contains(f, &residue, pbar, x.times(y)) {
                return Err(Error::NotPreordering(format!("{x}, {y} leave T")));
            }
        }
    }
    for &x in &window {
        if !x.is_zero() && !st_lift_contains(f, &residue, pbar, x.times(x)) {
            return Err(Error::NotPreordering(format!("{x}² ∉ T")));
        }
    }
    if st_lift_contains(f, &residue, pbar, f.minus_one()) {
        return Err(Error::NotPreordering("-1 ∈ T".into()));
    }
    let mut out = Vec::new();
    for h in Character::all(f.rank()) {
        if !t.iter().all(|&x| ordering_contains(&h, x)) || !st_is_ordering(f, &h, b).holds() {
            continue;
        }
        let compat = st_compatibility_report(f, &h, b)?;
        if !compat.compatible() || st_induced_residue_set(f, &residue, &h) != pbar {
            continue;
        }
        out.push(h);
        if !all {
            break;
        }
    }
    Ok(out)
}

/// `(𝔭, χ)` for a compatible `P_h`, with
/// `χ(v(a)) = sgn_{P_𝔭}(a)·sgn_{P}(a)`. `base` pairs each residue ordering
/// with its chosen lift. Well-definedness is checked on the window.
pub fn st_baer_krull_forward(
    f: &SignedValueHyperfield,
    h: &Character,
    base: &[(HSet, Character)],
    b: i64,
) -> Result<(HSet, Character)> {
    let compat = st_compatibility_report(f, h, b)?;
    if !compat.compatible() {
        return Err(Error::Incompatible(format!("P_{h} on {}", f.name())));
    }
    let residue = st_residue(f)?;
    let pbar = st_induced_residue_set(f, &residue, h);
    let (_, base_h) = base
        .iter()
        .find(|(q, _)| *q == pbar)
        .ok_or_else(|| Error::Precondition("no base ordering for the induced residue ordering".into()))?;
    let sgn = |c: &Character, x: StElem| st_signature(c, x).expect("nonzero");
    let k = f.rank();
    let chi = Character::new(
        (0..k)
            .map(|i| {
                let a = StElem::pos(Gamma::unit(k, i));
                sgn(base_h, a).times(sgn(h, a))
            })
            .collect(),
    );
    for x in f.window(b) {
        if let Some(g) = x.value() {
            if chi.eval(&g) != sgn(base_h, x).times(sgn(h, x)) {
                return Err(Error::Precondition(format!("χ is not well defined at {x}")));
            }
        }
    }
    Ok((pbar, chi))
}

/// `P = {x : (χ(v(x)) = 1 ∧ x ∈ P_𝔭) ∨ (χ(v(x)) = -1 ∧ -x ∈ P_𝔭)}`, returned
/// as its character after checking it against the definition on the window.
pub fn st_baer_krull_inverse(
    f: &SignedValueHyperfield,
    pbar: HSet,
    chi: &Character,
    base: &[(HSet, Character)],
    b: i64,
) -> Result<Character> {
    let (_, base_h) = base
        .iter()
        .find(|(q, _)| *q == pbar)
        .ok_or_else(|| Error::Precondition("no base ordering for this residue ordering".into()))?;
    let h = base_h.times(chi);
    for x in f.window(b) {
        let Some(g) = x.value() else { continue };
        let defined = match chi.eval(&g) {
            Sign::Pos => ordering_contains(base_h, x),
            Sign::Neg => ordering_contains(base_h, x.negate()),
        };
        if defined != ordering_contains(&h, x) {
            return Err(Error::Precondition(format!("inverse disagrees at {x}")));
        }
    }
    check_ordering(f, &h, b)?;
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaerKrullRow {
    pub residue_ordering: Vec<String>,
    pub character: Character,
    pub ordering: Character,
    pub compatible: bool,
    pub forward_recovers: bool,
}

/// `X(F, v) ↔ X(F̄) × Hom(Γ, {±1})` for the canonical valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaerKrullTable {
    pub name: String,
    pub window: i64,
    pub residue_orderings: usize,
    pub characters: usize,
    pub rows: Vec<BaerKrullRow>,
    /// Compatible orderings found by enumerating every character.
    pub compatible_orderings: usize,
    pub bijective: bool,
}

pub fn st_baer_krull(f: &SignedValueHyperfield, b: i64) -> Result<BaerKrullTable> {
    let residue = st_residue(f)?;
    let residue_orderings = enumerate_orderings(&residue.structure)?;
    let chars = Character::all(f.rank());
    let mut base = Vec::new();
    for q in &residue_orderings {
        let lift = st_lift_ordering(f, q.positive, false, b)?;
        let first = lift
            .into_iter()
            .next()
            .ok_or_else(|| Error::Precondition("residue ordering has no lift".into()))?;
        base.push((q.positive, first));
    }
    let mut rows = Vec::new();
    for (pbar, _) in &base {
        for chi in &chars {
            let h = st_baer_krull_inverse(f, *pbar, chi, &base, b)?;
            let compatible = st_compatibility_report(f, &h, b)?.compatible();
            let forward_recovers = compatible
                && st_baer_krull_forward(f, &h, &base, b)? == (*pbar, chi.clone());
            rows.push(BaerKrullRow {
                residue_ordering: pbar
                    .iter()
                    .map(|e| residue.structure.label(e).to_string())
                    .collect(),
                character: chi.clone(),
                ordering: h,
                compatible,
                forward_recovers,
            });
        }
    }
    let mut compatible_orderings = 0;
    for h in &chars {
        if st_is_ordering(f, h, b).holds() && st_compatibility_report(f, h, b)?.compatible() {
            compatible_orderings += 1;
        }
    }
    let mut images: Vec<&Character> = rows.iter().map(|r| &r.ordering).collect();
    images.sort();
    images.dedup();
    let bijective = rows.iter().all(|r| r.compatible && r.forward_recovers)
        && images.len() == rows.len()
        && rows.len() == compatible_orderings;
    Ok(BaerKrullTable {
        name: f.name(),
        window: b,
        residue_orderings: residue_orderings.len(),
        characters: chars.len(),
        rows,
        compatible_orderings,
        bijective,
    })
}

/// Two classes of `P_T` in `Q_T`, `T` the positive 2-adic units, neither
/// below the other: `x·t - y·u > 0` and `y·t' - x·u' > 0` with
/// `t, u, t', u' ∈ T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncomparablePair {
    pub x: QClass,
    pub y: QClass,
    /// `(t, u, x·t - y·u)`.
    pub forward: (Rational, Rational, Rational),
    /// `(t', u', y·t' - x·u')`.
    pub backward: (Rational, Rational, Rational),
}

impl IncomparablePair {
    /// Recomputes both differences and their classes.
    pub fn verify(&self) -> bool {
        let t = QSubgroup::PositivePUnits(2);
        let xr = self.x.representative(t);
        let yr = self.y.representative(t);
        let ok = |(a, b, d): &(Rational, Rational, Rational), p: Rational, q: Rational| {
            t.contains(*a) && t.contains(*b) && p * a - q * b == *d && *d > Rational::from(0)
                && q_factor_class(*d, t).sign() == Some(Sign::Pos)
        };
        let f = SignedValueHyperfield::padic(2).expect("prime");
        let (Some(xs), Some(ys)) = (self.x.to_signed_value(), self.y.to_signed_value()) else {
            return false;
        };
        let diff = f.sub(xs, ys);
        let p = Character::trivial(1);
        ok(&self.forward, xr, yr)
            && ok(&self.backward, yr, xr)
            && set_meets_ordering(&p, &diff)
            && !set_within_ordering(&p, &diff)
    }
}

/// Unordered pairs of positive classes with values in `0..=3` with explicit
/// rational witnesses of incomparability under `a < b ⟺ b - a ⊆ P_T`.
pub fn incomparability_witnesses(count: usize, height: i64) -> Result<Vec<IncomparablePair>> {
    let t = QSubgroup::PositivePUnits(2);
    let units = subgroup_elements(t, height);
    let find = |p: Rational, q: Rational| {
        units.iter().find_map(|&a| {
            units
                .iter()
                .find(|&&b| p * a - q * b > Rational::from(0))
                .map(|&b| (a, b, p * a - q * b))
        })
    };
    let mut out = Vec::new();
    'pairs: for i in 0..=3i64 {
        for j in i + 1..=3i64 {
            let x = QClass::SignedValue(Sign::Pos, i);
            let y = QClass::SignedValue(Sign::Pos, j);
            let (xr, yr) = (x.representative(t), y.representative(t));
            let (Some(forward), Some(backward)) = (find(xr, yr), find(yr, xr)) else {
                continue;
            };
            out.push(IncomparablePair { x, y, forward, backward });
            if out.len() == count {
                break 'pairs;
            }
        }
    }
    if out.len() < count {
        return Err(Error::BoundExceeded {
            what: "incomparability witness height",
            value: height as usize,
            bound: height as usize,
        });
    }
    Ok(out)
}
