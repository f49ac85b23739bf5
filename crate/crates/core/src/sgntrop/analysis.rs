use serde::Serialize;

use super::elem::{Gamma, Sign, StElem};
use super::field::{AddRule, SignedValueHyperfield};
use super::ordering::{set_meets_ordering, set_within_ordering, Character};
use super::stset::StSet;
use crate::constructions::sign_hyperfield;
use crate::error::{Error, Result};
use crate::hset::HSet;
use crate::hypercore::{
    check_homomorphism, check_hyperfield, find_isomorphism, induced_subhyperring, Axiom,
    FiniteHyperstructure, HomomorphismSpec, ViolationReport,
};

/// Hyperfield axioms over every element with value in `[-b, b]^k`, using
/// exact set arithmetic for the sums.
pub fn st_axiom_check(f: &SignedValueHyperfield, b: i64) -> Result<ViolationReport> {
    let mut r = ViolationReport::default();
    let w = f.window(b);
    let zero = StElem::Zero;
    for &x in &w {
        for &y in &w {
            let xy = f.add(x, y);
            if xy != f.add(y, x) {
                r.push(Axiom::H2, [x, y], format!("x+y = {xy} but y+x = {}", f.add(y, x)));
            }
            if xy.contains(zero) != (y == x.negate()) {
                r.push(Axiom::H3, [x, y], format!("x+y = {xy}"));
            }
            for z in xy.members_in_window(f.rank(), b) {
                if !f.add(z, x.negate()).contains(y) {
                    r.push(
                        Axiom::H4,
                        [x, y, z],
                        format!("z ∈ x+y but z-x = {}", f.add(z, x.negate())),
                    );
                }
            }
            for &z in &w {
                let left = f.set_add(&xy, &StSet::point(z))?;
                let right = f.set_add(&StSet::point(x), &f.add(y, z))?;
                if left != right {
                    r.push(
                        Axiom::H1,
                        [x, y, z],
                        format!("(x+y)+z = {left} but x+(y+z) = {right}"),
                    );
                }
                let dist = f.add(y, z).scale(x);
                let expanded = f.add(x.times(y), x.times(z));
                if dist != expanded {
                    r.push(
                        Axiom::R3,
                        [x, y, z],
                        format!("x(y+z) = {dist} but xy+xz = {expanded}"),
                    );
                }
            }
        }
        if f.add(x, zero) != StSet::point(x) {
            r.push(Axiom::ZeroNeutral, [x], format!("x+0 = {}", f.add(x, zero)));
        }
        if let Some(inv) = x.inverse() {
            if x.times(inv) != f.one() {
                r.push(Axiom::MulGroup, [x], "x·x⁻¹ ≠ 1");
            }
        }
        if x.times(f.one()) != x {
            r.push(Axiom::Unity, [x], "1·x ≠ x");
        }
    }
    Ok(r)
}

/// A valuation on a signed-value hyperfield.
#[derive(Clone, Copy, Debug)]
pub enum SymbolicValuation {
    /// `v((s, γ)) = γ`.
    Canonical,
    /// An arbitrary map, for planting faults.
    Patched(fn(StElem) -> Option<Gamma>),
}

impl SymbolicValuation {
    pub fn value(&self, x: StElem) -> Option<Gamma> {
        match self {
            SymbolicValuation::Canonical => x.value(),
            SymbolicValuation::Patched(f) => f(x),
        }
    }
}

/// Least value attained on a set, with rays contributing their start. `None`
/// for sets that are empty or `{0}`.
fn least_value(a: &StSet) -> Option<Gamma> {
    let pts = a.points().filter_map(|x| x.value());
    let rays = Sign::BOTH.iter().filter_map(|&s| a.ray_start(s));
    pts.chain(rays).min()
}

/// Valuation axioms and their consequences on the window `[-b, b]^k`.
pub fn st_valuation_report(
    f: &SignedValueHyperfield,
    v: &SymbolicValuation,
    b: i64,
) -> ViolationReport {
    let mut r = ViolationReport::default();
    let w = f.window(b);
    let zero_value = f.zero_value();
    for &x in &w {
        let vx = v.value(x);
        if vx.is_none() != x.is_zero() {
            r.push(Axiom::V1, [x], "v(x) = ∞ must hold exactly at 0");
        }
        if vx != v.value(x.negate()) {
            r.push(Axiom::ValNeg, [x], "v(-x) ≠ v(x)");
        }
        if let (Some(inv), Some(g)) = (x.inverse(), vx) {
            if v.value(inv) != Some(-g) {
                r.push(Axiom::ValInverse, [x], "v(x⁻¹) ≠ -v(x)");
            }
        }
        for &y in &w {
            let vy = v.value(y);
            let prod = match (vx, vy) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
            if v.value(x.times(y)) != prod {
                r.push(Axiom::V2, [x, y], "v(xy) ≠ v(x) + v(y)");
            }
            let (Some(va), Some(vb)) = (vx, vy) else {
                continue;
            };
            let m = va.min(vb);
            let sum = f.add(x, y);
            // V3 is checked on the representation when v is canonical and on
            // the window members otherwise.
            let v3 = match v {
                SymbolicValuation::Canonical => least_value(&sum).is_none_or(|l| l >= m),
                SymbolicValuation::Patched(_) => sum
                    .members_in_window(f.rank(), b)
                    .into_iter()
                    .all(|c| v.value(c).is_none_or(|g| g >= m)),
            };
            if !v3 {
                r.push(Axiom::V3, [x, y], format!("x+y = {sum} drops below min"));
            }
            if va != vb {
                let strict = sum.is_finite()
                    && !sum.has_zero()
                    && sum.points().all(|c| v.value(c) == Some(m));
                if !strict {
                    r.push(
                        Axiom::ValStrictMin,
                        [x, y],
                        format!("v(x) ≠ v(y) but x+y = {sum}"),
                    );
                }
            }
        }
    }
    for u in [f.one(), f.minus_one()] {
        if v.value(u) != Some(zero_value) {
            r.push(Axiom::ValUnit, [u], "v(±1) ≠ 0");
        }
    }
    r
}

/// `O_v = {x : v(x) ≥ 0}` for the canonical valuation.
pub fn st_valuation_ring(f: &SignedValueHyperfield) -> StSet {
    StSet::ball(f.zero_value())
}

/// `M_v = {x : v(x) > 0}`.
pub fn st_maximal_ideal(f: &SignedValueHyperfield) -> StSet {
    StSet::ball(Gamma::least_positive(f.rank()))
}

/// `A(P)` or `I(P)` for a signed-value hyperfield: either all of `F` or a
/// representable subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Hull {
    Whole,
    Within(StSet),
}

impl Hull {
    pub fn contains(&self, x: StElem) -> bool {
        match self {
            Hull::Whole => true,
            Hull::Within(s) => s.contains(x),
        }
    }

    pub fn is_subset(&self, other: &StSet) -> bool {
        match self {
            // Every representable set misses (+, -n·e_k) for large n.
            Hull::Whole => false,
            Hull::Within(s) => s.is_subset(other),
        }
    }

    pub fn agrees_on_window(&self, f: &SignedValueHyperfield, b: i64, test: impl Fn(StElem) -> bool) -> bool {
        f.window(b).into_iter().all(|x| self.contains(x) == test(x))
    }
}

/// The distinct sets `I_n` in order of first appearance, with the index at
/// which the sequence starts repeating.
pub fn st_in_cycle(f: &SignedValueHyperfield) -> Result<(Vec<StSet>, usize)> {
    let one = StSet::point(f.one());
    let mut seen = vec![one.clone()];
    loop {
        let next = f.set_add(seen.last().expect("nonempty"), &one)?;
        if let Some(pos) = seen.iter().position(|s| *s == next) {
            return Ok((seen, pos));
        }
        if seen.len() > 64 {
            return Err(Error::Unsupported("I_n sequence did not cycle".into()));
        }
        seen.push(next);
    }
}

/// `a ∈ A(P_h)` straight from the definition: some `I_n` has both
/// `(I_n + a) ∩ P` and `(I_n - a) ∩ P` nonempty.
pub fn st_in_a_of_p(f: &SignedValueHyperfield, h: &Character, a: StElem) -> Result<bool> {
    let (ins, _) = st_in_cycle(f)?;
    for i in &ins {
        let plus = f.elem_plus_set(a, i)?;
        let minus = f.elem_plus_set(a.negate(), i)?;
        if set_meets_ordering(h, &plus) && set_meets_ordering(h, &minus) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `a ∈ I(P_h)` from the definition: `1 ± I_n·a ⊆ P` for every `n`.
pub fn st_in_i_of_p(f: &SignedValueHyperfield, h: &Character, a: StElem) -> Result<bool> {
    let (ins, _) = st_in_cycle(f)?;
    for i in &ins {
        let scaled = i.scale(a);
        for t in [scaled.clone(), scaled.negate()] {
            if !set_within_ordering(h, &f.elem_plus_set(f.one(), &t)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closed form of `A(P_h)`.
pub fn st_a_of_p(f: &SignedValueHyperfield, h: &Character) -> Result<Hull> {
    match f.rule() {
        // I_n = {(+,0)}; (+,0) ± (s,γ) is a single point of value min(0,γ)
        // unless γ = 0, and the two points have opposite signs when γ < 0.
        AddRule::Tropical => Ok(Hull::Within(st_valuation_ring(f))),
        // I_2 is a ray of positive elements starting at value ≤ 1, whose sum
        // with (s,γ), γ < 0, always contains (+,γ); so every element qualifies.
        AddRule::PAdic { .. } if h.is_trivial() => Ok(Hull::Whole),
        AddRule::PAdic { .. } => Err(Error::InvalidOrdering(format!(
            "{h} does not define an ordering of {}",
            f.name()
        ))),
    }
}

/// Closed form of `I(P_h)`.
pub fn st_i_of_p(f: &SignedValueHyperfield, h: &Character) -> Result<Hull> {
    match f.rule() {
        AddRule::Tropical => Ok(Hull::Within(st_maximal_ideal(f))),
        AddRule::PAdic { .. } if h.is_trivial() => Ok(Hull::Within(StSet::zero())),
        AddRule::PAdic { .. } => Err(Error::InvalidOrdering(format!(
            "{h} does not define an ordering of {}",
            f.name()
        ))),
    }
}

/// Window comparison of the closed forms of `A(P_h)` and `I(P_h)` with the
/// definitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullCheck {
    pub a_of_p: Hull,
    pub i_of_p: Hull,
    pub a_agrees: bool,
    pub i_agrees: bool,
}

pub fn st_hull_check(f: &SignedValueHyperfield, h: &Character, b: i64) -> Result<HullCheck> {
    let a_of_p = st_a_of_p(f, h)?;
    let i_of_p = st_i_of_p(f, h)?;
    let mut a_agrees = true;
    let mut i_agrees = true;
    for x in f.window(b) {
        a_agrees &= a_of_p.contains(x) == st_in_a_of_p(f, h, x)?;
        i_agrees &= i_of_p.contains(x) == st_in_i_of_p(f, h, x)?;
    }
    Ok(HullCheck {
        a_of_p,
        i_of_p,
        a_agrees,
        i_agrees,
    })
}

/// `O/M` for a valuation hyperring `O ⊆ Ball(0)` with maximal ideal `M`
/// whose units all have value `0`, together with the unit representatives
/// behind each nonzero class.
#[derive(Clone, Debug)]
pub struct SymbolicResidue {
    pub structure: FiniteHyperstructure,
    /// `representatives[i]` is a unit mapping to class `i` (`0` for class 0).
    pub representatives: Vec<StElem>,
}

impl SymbolicResidue {
    /// Class of an element of `O`.
    pub fn class_of(&self, f: &SignedValueHyperfield, m: &StSet, x: StElem) -> Option<usize> {
        if m.contains(x) {
            return Some(0);
        }
        (1..self.representatives.len()).find(|&i| f.sub(x, self.representatives[i]).meets(m))
    }
}

/// Residue hyperfield of the canonical valuation.
pub fn st_residue(f: &SignedValueHyperfield) -> Result<SymbolicResidue> {
    let m = st_maximal_ideal(f);
    let units = [f.one(), f.minus_one()];
    let mut reps = vec![StElem::Zero];
    for u in units {
        if !reps[1..].iter().any(|&r| f.sub(u, r).meets(&m)) {
            reps.push(u);
        }
    }
    let class_of_set = |s: &StSet| -> HSet {
        let mut out = HSet::EMPTY;
        if s.meets(&m) {
            out.insert(0);
        }
        for (i, &r) in reps.iter().enumerate().skip(1) {
            // (y - r) ∩ M ≠ ∅ ⟺ y ∈ r + M by reversibility.
            if f.elem_plus_set(r, &m).is_ok_and(|d| s.meets(&d)) {
                out.insert(i);
            }
        }
        out
    };
    let class_of = |x: StElem| -> usize {
        class_of_set(&StSet::point(x)).first().expect("element of O has a class")
    };
    let labels: Vec<String> = reps
        .iter()
        .map(|r| if r.is_zero() { "0̄".to_string() } else { format!("{r}+M") })
        .collect();
    let structure = FiniteHyperstructure::from_fn(
        format!("residue of {}", f.name()),
        labels,
        0,
        Some(1),
        |i| class_of(reps[i].negate()),
        |i, j| class_of(reps[i].times(reps[j])),
        |i, j| class_of_set(&f.add(reps[i], reps[j])),
    )?;
    let report = check_hyperfield(&structure);
    if !report.is_clean() {
        return Err(Error::NotHyperfield(report.to_string()));
    }
    Ok(SymbolicResidue {
        structure,
        representatives: reps,
    })
}

/// Finite structure on the listed elements with sums `(x + y) ∩ S`.
pub fn st_induced_on(f: &SignedValueHyperfield, elems: &[StElem]) -> Result<FiniteHyperstructure> {
    let pos = |x: StElem| elems.iter().position(|&e| e == x);
    let missing = |what: &str| Error::Malformed(format!("{what} leaves the listed elements"));
    for &x in elems {
        pos(x.negate()).ok_or_else(|| missing("negation"))?;
        for &y in elems {
            pos(x.times(y)).ok_or_else(|| missing("a product"))?;
        }
    }
    let zero = pos(StElem::Zero).ok_or_else(|| missing("zero"))?;
    FiniteHyperstructure::from_fn(
        format!("{} on {} elements", f.name(), elems.len()),
        elems.iter().map(|x| x.to_string()).collect(),
        zero,
        pos(f.one()),
        |i| pos(elems[i].negate()).expect("checked"),
        |i, j| pos(elems[i].times(elems[j])).expect("checked"),
        |i, j| {
            let s = f.add(elems[i], elems[j]);
            elems
                .iter()
                .enumerate()
                .filter(|(_, &x)| s.contains(x))
                .map(|(k, _)| k)
                .collect()
        },
    )
}

/// The three-element set `{(-,0), 0, (+,0)}`: an induced subhyperring that
/// is isomorphic to the sign hyperfield but not strict.
#[derive(Clone, Debug, Serialize)]
pub struct NonStrictDemo {
    pub elements: Vec<StElem>,
    pub is_subhyperring: bool,
    pub induced_hyperfield: bool,
    /// `(a, b, a - b, member of a - b outside S)`.
    pub strictness_witness: Option<(StElem, StElem, StSet, StElem)>,
    /// Images of `0, 1, -1` under the map from the sign hyperfield.
    pub isomorphism: Option<Vec<String>>,
    pub isomorphism_strict: bool,
}

pub fn st_nonstrict_subhyperring_demo(f: &SignedValueHyperfield) -> Result<NonStrictDemo> {
    let elements = vec![f.minus_one(), StElem::Zero, f.one()];
    let s = st_induced_on(f, &elements)?;
    let induced = induced_subhyperring(&s, s.carrier());
    let induced_hyperfield = check_hyperfield(&s).is_clean();
    let inside = StSet::from_elems(elements.iter().copied());
    let mut strictness_witness = None;
    'outer: for &a in &elements {
        for &b in &elements {
            let d = f.sub(a, b);
            if !d.is_subset(&inside) {
                let out = d
                    .members_in_window(f.rank(), 2)
                    .into_iter()
                    .find(|&x| !inside.contains(x))
                    .expect("a set not inside S has a member near 0 outside S");
                strictness_witness = Some((a, b, d, out));
                break 'outer;
            }
        }
    }
    let sign = sign_hyperfield();
    // Sign hyperfield order is 0, 1, -1; S is listed as -1, 0, 1.
    let phi = HomomorphismSpec::new(sign.clone(), s.clone(), vec![1, 2, 0])?;
    let isomorphism_strict = phi.is_bijective() && check_homomorphism(&phi, true).is_clean();
    let isomorphism = isomorphism_strict.then(|| {
        sign.elems()
            .map(|x| format!("{} ↦ {}", sign.label(x), s.label(phi.apply(x))))
            .collect()
    });
    Ok(NonStrictDemo {
        elements,
        is_subhyperring: induced.is_some(),
        induced_hyperfield,
        strictness_witness,
        isomorphism,
        isomorphism_strict,
    })
}

/// A sum with several values next to sums that are single points.
#[derive(Clone, Debug, Serialize)]
pub struct NonSingletonDemo {
    pub x: StElem,
    pub y: StElem,
    pub sum: StSet,
    /// Least value in the sum; the sum also contains `0` and every larger value.
    pub least_value: Gamma,
    pub contains_zero: bool,
    pub singleton_rows: Vec<(StElem, StElem, StSet)>,
}

pub fn st_nonsingleton_sum_demo(f: &SignedValueHyperfield) -> NonSingletonDemo {
    let x = f.one();
    let y = f.minus_one();
    let sum = f.add(x, y);
    let g1 = f.zero_value();
    let g2 = f.shift(g1, 3);
    let singleton_rows = vec![
        (StElem::pos(g1), StElem::neg_of(g2), f.add(StElem::pos(g1), StElem::neg_of(g2))),
        (StElem::pos(g2), StElem::neg_of(g1), f.add(StElem::pos(g2), StElem::neg_of(g1))),
        (StElem::pos(g1), StElem::pos(g2), f.add(StElem::pos(g1), StElem::pos(g2))),
    ];
    NonSingletonDemo {
        x,
        y,
        least_value: least_value(&sum).unwrap_or(g1),
        contains_zero: sum.has_zero(),
        sum,
        singleton_rows,
    }
}

/// The residue hyperfield is isomorphic to the sign hyperfield.
pub fn st_residue_sign_isomorphism(f: &SignedValueHyperfield) -> Result<Option<Vec<usize>>> {
    let res = st_residue(f)?;
    let sign = sign_hyperfield();
    Ok(find_isomorphism(&res.structure, &sign).filter(|map| {
        let phi = HomomorphismSpec {
            source: res.structure.clone(),
            target: sign.clone(),
            map: map.clone(),
        };
        check_homomorphism(&phi, true).is_clean()
    }))
}
