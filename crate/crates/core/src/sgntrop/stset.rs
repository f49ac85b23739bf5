use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::elem::{Gamma, Sign, StElem};

/// A possibly infinite subset of a signed-value hyperfield: finitely many
/// points, at most one up-ray `{(s, δ) : δ ≥ γ}` per sign, and optionally `0`.
///
/// A ball `{(e, δ) : δ ≥ γ} ∪ {0}` is the case where both rays start at the
/// same threshold and `0` is present. Values are kept canonical: no point lies
/// on or just below a ray of its own sign, so structural equality is set
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct StSet {
    zero: bool,
    points: BTreeSet<(Sign, Gamma)>,
    rays: [Option<Gamma>; 2],
}

impl StSet {
    pub fn empty() -> Self {
        StSet::default()
    }

    pub fn zero() -> Self {
        StSet {
            zero: true,
            ..StSet::default()
        }
    }

    pub fn point(x: StElem) -> Self {
        let mut s = StSet::empty();
        s.insert(x);
        s
    }

    pub fn from_elems(xs: impl IntoIterator<Item = StElem>) -> Self {
        let mut s = StSet::empty();
        for x in xs {
            s.insert(x);
        }
        s
    }

    /// `{(s, δ) : δ ≥ γ}`.
    pub fn ray(s: Sign, g: Gamma) -> Self {
        let mut out = StSet::empty();
        out.rays[s.index()] = Some(g);
        out
    }

    /// `{(e, δ) : e = ±1, δ ≥ γ} ∪ {0}`.
    pub fn ball(g: Gamma) -> Self {
        StSet {
            zero: true,
            points: BTreeSet::new(),
            rays: [Some(g), Some(g)],
        }
    }

    pub fn insert(&mut self, x: StElem) {
        match x {
            StElem::Zero => self.zero = true,
            StElem::Nz(s, g) => {
                if !self.ray_covers(s, g) {
                    self.points.insert((s, g));
                    self.absorb(s);
                }
            }
        }
    }

    /// Values are discrete, so a point just below a ray of its sign extends it.
    fn absorb(&mut self, s: Sign) {
        while let Some(r) = self.rays[s.index()] {
            if r.rank() == 0 {
                break;
            }
            let below = r - Gamma::least_positive(r.rank());
            if !self.points.remove(&(s, below)) {
                break;
            }
            self.rays[s.index()] = Some(below);
        }
    }

    fn ray_covers(&self, s: Sign, g: Gamma) -> bool {
        self.rays[s.index()].is_some_and(|r| g >= r)
    }

    pub fn has_zero(&self) -> bool {
        self.zero
    }

    pub fn points(&self) -> impl Iterator<Item = StElem> + '_ {
        self.points.iter().map(|&(s, g)| StElem::Nz(s, g))
    }

    pub fn ray_start(&self, s: Sign) -> Option<Gamma> {
        self.rays[s.index()]
    }

    pub fn is_empty(&self) -> bool {
        !self.zero && self.points.is_empty() && self.rays.iter().all(Option::is_none)
    }

    pub fn is_finite(&self) -> bool {
        self.rays.iter().all(Option::is_none)
    }

    /// The single member, if there is exactly one.
    pub fn singleton(&self) -> Option<StElem> {
        if !self.is_finite() {
            return None;
        }
        let mut it = self.elems_finite();
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    /// Threshold `γ` when the set is exactly the ball at `γ`.
    pub fn as_ball(&self) -> Option<Gamma> {
        match self.rays {
            [Some(a), Some(b)] if a == b && self.zero && self.points.is_empty() => Some(a),
            _ => None,
        }
    }

    /// Members of a finite set, zero first.
    pub fn elems_finite(&self) -> impl Iterator<Item = StElem> + '_ {
        debug_assert!(self.is_finite());
        self.zero
            .then_some(StElem::Zero)
            .into_iter()
            .chain(self.points())
    }

    pub fn contains(&self, x: StElem) -> bool {
        match x {
            StElem::Zero => self.zero,
            StElem::Nz(s, g) => self.ray_covers(s, g) || self.points.contains(&(s, g)),
        }
    }

    pub fn union(&self, other: &StSet) -> StSet {
        let mut out = StSet {
            zero: self.zero || other.zero,
            points: BTreeSet::new(),
            rays: [
                min_opt(self.rays[0], other.rays[0]),
                min_opt(self.rays[1], other.rays[1]),
            ],
        };
        for x in self.points().chain(other.points()) {
            out.insert(x);
        }
        out
    }

    pub fn is_subset(&self, other: &StSet) -> bool {
        if self.zero && !other.zero {
            return false;
        }
        if !self.points().all(|x| other.contains(x)) {
            return false;
        }
        Sign::BOTH.iter().all(|&s| match self.rays[s.index()] {
            None => true,
            Some(a) => other.rays[s.index()].is_some_and(|b| b <= a),
        })
    }

    /// Whether the two sets share a member.
    pub fn meets(&self, other: &StSet) -> bool {
        if self.zero && other.zero {
            return true;
        }
        if self.points().any(|x| other.contains(x)) || other.points().any(|x| self.contains(x)) {
            return true;
        }
        Sign::BOTH
            .iter()
            .any(|&s| self.rays[s.index()].is_some() && other.rays[s.index()].is_some())
    }

    pub fn negate(&self) -> StSet {
        StSet {
            zero: self.zero,
            points: self.points.iter().map(|&(s, g)| (s.flip(), g)).collect(),
            rays: [self.rays[1], self.rays[0]],
        }
    }

    /// `x · A`.
    pub fn scale(&self, x: StElem) -> StSet {
        match x {
            StElem::Zero => {
                if self.is_empty() {
                    StSet::empty()
                } else {
                    StSet::zero()
                }
            }
            StElem::Nz(t, d) => {
                let mut out = StSet {
                    zero: self.zero,
                    points: BTreeSet::new(),
                    rays: [None, None],
                };
                for s in Sign::BOTH {
                    if let Some(g) = self.rays[s.index()] {
                        out.rays[s.times(t).index()] = Some(g + d);
                    }
                }
                for &(s, g) in &self.points {
                    out.insert(StElem::Nz(s.times(t), g + d));
                }
                out
            }
        }
    }

    /// `A · B`. A ray times anything nonzero of matching rank is again a ray,
    /// since `{δ ≥ a} + {ε ≥ b} = {δ ≥ a + b}`.
    pub fn mul(&self, other: &StSet) -> StSet {
        let mut out = StSet::empty();
        if self.is_empty() || other.is_empty() {
            return out;
        }
        out.zero = self.zero || other.zero;
        for x in self.points() {
            out = out.union(&other.scale(x).without_zero());
        }
        for y in other.points() {
            out = out.union(&self.scale(y).without_zero());
        }
        for s in Sign::BOTH {
            for t in Sign::BOTH {
                if let (Some(a), Some(b)) = (self.rays[s.index()], other.rays[t.index()]) {
                    out = out.union(&StSet::ray(s.times(t), a + b));
                }
            }
        }
        out
    }

    fn without_zero(mut self) -> StSet {
        self.zero = false;
        self
    }

    /// Members whose value lies in `[-b, b]^k`, plus `0` when present.
    pub fn members_in_window(&self, k: usize, b: i64) -> Vec<StElem> {
        let mut out: Vec<StElem> = Vec::new();
        if self.zero {
            out.push(StElem::Zero);
        }
        for g in Gamma::window(k, b) {
            for s in Sign::BOTH {
                let x = StElem::Nz(s, g);
                if self.contains(x) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Restricting both sets to a window gives the same members.
    pub fn agrees_on_window(&self, other: &StSet, k: usize, b: i64) -> bool {
        self.members_in_window(k, b) == other.members_in_window(k, b)
    }
}

fn min_opt(a: Option<Gamma>, b: Option<Gamma>) -> Option<Gamma> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl fmt::Debug for StSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for StSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = self.as_ball() {
            return write!(f, "Ball({g})");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.zero {
            parts.push("0".into());
        }
        parts.extend(self.points().map(|x| x.to_string()));
        for s in Sign::BOTH {
            if let Some(g) = self.rays[s.index()] {
                parts.push(format!("({s},≥{g})"));
            }
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for StSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
