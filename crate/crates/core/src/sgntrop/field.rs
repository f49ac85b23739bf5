use std::fmt;

use serde::Serialize;

use super::elem::{Gamma, Sign, StElem, MAX_RANK};
use super::stset::StSet;
use crate::constructions::is_prime;
use crate::error::{Error, Result};

/// How two nonzero elements add.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AddRule {
    /// The signed tropical rule: the smaller value wins, and opposite signs
    /// of equal value give the full ball at that value.
    Tropical,
    /// `Q` modulo the positive `p`-adic units, classes `(sign, v_p)`. Equal
    /// values lose `c` in the sum, where `c = 1` for `p = 2` and `0` otherwise.
    PAdic { p: u64 },
}

/// Replacement for the pointwise sum, used to plant faults in tests.
pub type AddOverride = fn(StElem, StElem) -> Option<StSet>;

/// Pairs `(sign, γ)` with `γ ∈ Z^k`, plus `0`.
#[derive(Clone, Copy)]
pub struct SignedValueHyperfield {
    k: usize,
    rule: AddRule,
    add_override: Option<AddOverride>,
}

impl fmt::Debug for SignedValueHyperfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        if self.add_override.is_some() {
            write!(f, " (patched)")?;
        }
        Ok(())
    }
}

impl SignedValueHyperfield {
    /// The signed tropical hyperfield over `Z^k`.
    pub fn tropical(k: usize) -> Result<Self> {
        if !(1..=MAX_RANK).contains(&k) {
            return Err(Error::BoundExceeded {
                what: "rank",
                value: k,
                bound: MAX_RANK,
            });
        }
        Ok(SignedValueHyperfield {
            k,
            rule: AddRule::Tropical,
            add_override: None,
        })
    }

    /// `Q` modulo the positive `p`-adic units.
    pub fn padic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(SignedValueHyperfield {
            k: 1,
            rule: AddRule::PAdic { p },
            add_override: None,
        })
    }

    pub fn with_add_override(mut self, f: AddOverride) -> Self {
        self.add_override = Some(f);
        self
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn rule(&self) -> AddRule {
        self.rule
    }

    pub fn name(&self) -> String {
        match self.rule {
            AddRule::Tropical => format!("sgntrop(k={})", self.k),
            AddRule::PAdic { p } => format!("(sign,v{p})"),
        }
    }

    /// Value lost when two equal values of the same or opposite sign meet.
    fn carry(&self) -> i64 {
        match self.rule {
            AddRule::PAdic { p: 2 } => 1,
            _ => 0,
        }
    }

    pub fn gamma(&self, coords: &[i64]) -> Result<Gamma> {
        if coords.len() != self.k {
            return Err(Error::RankMismatch(coords.len(), self.k));
        }
        Ok(Gamma::new(coords))
    }

    pub fn zero_value(&self) -> Gamma {
        Gamma::zero(self.k)
    }

    pub fn one(&self) -> StElem {
        StElem::pos(self.zero_value())
    }

    pub fn minus_one(&self) -> StElem {
        StElem::neg_of(self.zero_value())
    }

    pub fn check_rank(&self, x: StElem) -> Result<()> {
        match x.value() {
            Some(g) if g.rank() != self.k => Err(Error::RankMismatch(g.rank(), self.k)),
            _ => Ok(()),
        }
    }

    /// Every element with value in `[-b, b]^k`, zero first.
    pub fn window(&self, b: i64) -> Vec<StElem> {
        let mut out = vec![StElem::Zero];
        for g in Gamma::window(self.k, b) {
            out.push(StElem::neg_of(g));
            out.push(StElem::pos(g));
        }
        out
    }

    pub fn mul(&self, x: StElem, y: StElem) -> StElem {
        x.times(y)
    }

    pub fn shift(&self, g: Gamma, n: i64) -> Gamma {
        let mut out = g;
        if n != 0 {
            out = out + Gamma::least_positive(self.k).scale(n);
        }
        out
    }

    /// `x + y`, checked for rank.
    pub fn try_add(&self, x: StElem, y: StElem) -> Result<StSet> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        Ok(self.add(x, y))
    }

    /// `x + y`.
    pub fn add(&self, x: StElem, y: StElem) -> StSet {
        if let Some(f) = self.add_override {
            if let Some(s) = f(x, y) {
                return s;
            }
        }
        let (s, a, t, b) = match (x, y) {
            (StElem::Zero, _) => return StSet::point(y),
            (_, StElem::Zero) => return StSet::point(x),
            (StElem::Nz(s, a), StElem::Nz(t, b)) => (s, a, t, b),
        };
        let c = self.carry();
        match self.rule {
            AddRule::Tropical => {
                if a == b {
                    if s == t {
                        StSet::point(x)
                    } else {
                        StSet::ball(a)
                    }
                } else if a < b {
                    StSet::point(x)
                } else {
                    StSet::point(y)
                }
            }
            AddRule::PAdic { .. } => {
                if a != b {
                    let m = a.min(b);
                    if s == t {
                        StSet::point(StElem::Nz(s, m))
                    } else {
                        StSet::from_elems([StElem::pos(m), StElem::neg_of(m)])
                    }
                } else if s == t {
                    StSet::ray(s, self.shift(a, c))
                } else {
                    StSet::ball(self.shift(a, c))
                }
            }
        }
    }

    /// `A + B`. Point pairs go through [`Self::add`]; rays use the closed forms
    /// of the active rule.
    pub fn set_add(&self, a: &StSet, b: &StSet) -> Result<StSet> {
        let mut out = StSet::empty();
        if a.is_empty() || b.is_empty() {
            return Ok(out);
        }
        if a.has_zero() {
            out = out.union(b);
        }
        if b.has_zero() {
            out = out.union(a);
        }
        for x in a.points() {
            for y in b.points() {
                out = out.union(&self.add(x, y));
            }
        }
        for y in b.points() {
            out = out.union(&self.point_plus_rays(y, a)?);
        }
        for x in a.points() {
            out = out.union(&self.point_plus_rays(x, b)?);
        }
        for s in Sign::BOTH {
            for t in Sign::BOTH {
                if let (Some(g), Some(h)) = (a.ray_start(s), b.ray_start(t)) {
                    out = out.union(&self.ray_plus_ray(s, g, t, h));
                }
            }
        }
        Ok(out)
    }

    pub fn elem_plus_set(&self, x: StElem, b: &StSet) -> Result<StSet> {
        self.set_add(&StSet::point(x), b)
    }

    /// `x` plus both rays of `b`. Tropically at rank above one, a point plus
    /// the ray of its own sign below it is a bounded interval; it is only
    /// representable together with an opposite ray that also starts below.
    fn point_plus_rays(&self, x: StElem, b: &StSet) -> Result<StSet> {
        if let (AddRule::Tropical, StElem::Nz(e, alpha)) = (self.rule, x) {
            if self.k != 1 {
                if let (Some(same), Some(other)) = (b.ray_start(e), b.ray_start(e.flip())) {
                    if alpha >= same && alpha >= other {
                        let mut out = StSet::ray(e, same).union(&StSet::ray(e.flip(), other));
                        out.insert(StElem::Zero);
                        return Ok(out);
                    }
                }
            }
        }
        let mut out = StSet::empty();
        for s in Sign::BOTH {
            if let Some(g) = b.ray_start(s) {
                out = out.union(&self.point_plus_ray(x, s, g)?);
            }
        }
        Ok(out)
    }

    /// `(e, α) + {(s, δ) : δ ≥ β}`.
    fn point_plus_ray(&self, x: StElem, s: Sign, beta: Gamma) -> Result<StSet> {
        let StElem::Nz(e, alpha) = x else {
            return Ok(StSet::ray(s, beta));
        };
        if alpha < beta {
            return Ok(match self.rule {
                AddRule::Tropical => StSet::point(x),
                AddRule::PAdic { .. } if e == s => StSet::point(x),
                AddRule::PAdic { .. } => {
                    StSet::from_elems([StElem::pos(alpha), StElem::neg_of(alpha)])
                }
            });
        }
        match self.rule {
            AddRule::PAdic { .. } => Ok(if e == s {
                StSet::ray(s, beta)
            } else {
                StSet::ball(beta)
            }),
            AddRule::Tropical => {
                // The sum runs over β ≤ δ: values below α keep sign s, δ = α
                // contributes its own row, values above α return (e, α).
                if self.k != 1 {
                    return Err(Error::Unsupported(format!(
                        "tropical sum of a point with a one-signed ray at rank {}",
                        self.k
                    )));
                }
                let mut out = StSet::empty();
                let mut d = beta;
                while d <= alpha {
                    out = out.union(&self.add(x, StElem::Nz(s, d)));
                    d = self.shift(d, 1);
                }
                out.insert(x);
                Ok(out)
            }
        }
    }

    fn ray_plus_ray(&self, s: Sign, a: Gamma, t: Sign, b: Gamma) -> StSet {
        if s == t {
            return StSet::ray(s, a.min(b));
        }
        match self.rule {
            AddRule::Tropical => StSet::ray(s, a).union(&StSet::ray(t, b)).union(&StSet::zero()),
            AddRule::PAdic { .. } => StSet::ball(a.min(b)),
        }
    }

    pub fn set_mul(&self, a: &StSet, b: &StSet) -> StSet {
        a.mul(b)
    }

    /// `x - y`.
    pub fn sub(&self, x: StElem, y: StElem) -> StSet {
        self.add(x, y.negate())
    }

    /// The additive closure sequence `1, 1 + 1, 1 + 1 + 1, …`.
    pub fn in_sets(&self, n: usize) -> Result<Vec<StSet>> {
        let one = StSet::point(self.one());
        let mut out = vec![one.clone()];
        while out.len() < n {
            let next = self.set_add(out.last().expect("nonempty"), &one)?;
            out.push(next);
        }
        Ok(out)
    }
}
