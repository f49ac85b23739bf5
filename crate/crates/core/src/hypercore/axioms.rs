use serde::Serialize;

use super::report::{Axiom, ViolationReport, DEFAULT_WITNESS_LIMIT};
use super::structure::FiniteHyperstructure;
use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};

/// Checks H1–H4 on the additive structure.
pub fn check_canonical_hypergroup(h: &FiniteHyperstructure) -> ViolationReport {
    check_canonical_hypergroup_with_limit(h, DEFAULT_WITNESS_LIMIT)
}

pub fn check_canonical_hypergroup_with_limit(
    h: &FiniteHyperstructure,
    limit: usize,
) -> ViolationReport {
    let mut r = ViolationReport::new(limit);
    let l = |x: Elem| h.label(x).to_string();
    let zero = h.zero();

    for x in h.elems() {
        for y in h.elems() {
            let xy = h.add(x, y);
            for z in h.elems() {
                let left = h.sum_elem(xy, z);
                let right = h.sum(HSet::singleton(x), h.add(y, z));
                if left != right {
                    r.push(
                        Axiom::H1,
                        [l(x), l(y), l(z)],
                        format!(
                            "(x+y)+z = {} but x+(y+z) = {}",
                            h.fmt_set(left),
                            h.fmt_set(right)
                        ),
                    );
                }
            }
            if y > x && xy != h.add(y, x) {
                r.push(
                    Axiom::H2,
                    [l(x), l(y)],
                    format!(
                        "x+y = {} but y+x = {}",
                        h.fmt_set(xy),
                        h.fmt_set(h.add(y, x))
                    ),
                );
            }
        }
    }

    for x in h.elems() {
        let opposites: HSet = h.elems().filter(|&y| h.add(x, y).contains(zero)).collect();
        if opposites.len() != 1 {
            r.push(
                Axiom::H3,
                [l(x)],
                format!(
                    "elements y with 0 ∈ x+y: {} (exactly one required)",
                    h.fmt_set(opposites)
                ),
            );
        } else if opposites.first() != Some(h.neg(x)) {
            r.push(
                Axiom::H3,
                [l(x)],
                format!(
                    "stored negation {} differs from the unique opposite {}",
                    h.label(h.neg(x)),
                    h.fmt_set(opposites)
                ),
            );
        }
    }

    for x in h.elems() {
        let nx = h.neg(x);
        for y in h.elems() {
            for z in h.add(x, y) {
                if !h.add(z, nx).contains(y) {
                    r.push(
                        Axiom::H4,
                        [l(x), l(y), l(z)],
                        format!("z ∈ x+y but y ∉ z-x = {}", h.fmt_set(h.add(z, nx))),
                    );
                }
            }
        }
    }
    r
}

/// `x + 0 = {x}` for every `x`. Holds in every canonical hypergroup, so this
/// is checked as a consequence rather than as one of the axioms.
pub fn check_zero_neutral(h: &FiniteHyperstructure) -> ViolationReport {
    let mut r = ViolationReport::default();
    for x in h.elems() {
        let s = h.add(x, h.zero());
        if s != HSet::singleton(x) {
            r.push(
                Axiom::ZeroNeutral,
                [h.label(x)],
                format!("x+0 = {}", h.fmt_set(s)),
            );
        }
    }
    r
}

/// Checks R1 (canonical hypergroup), R2 (commutative semigroup with `x·0 = 0`)
/// and R3 (distributivity). When a unit is declared, `1·x = x` is checked too.
pub fn check_hyperring(h: &FiniteHyperstructure) -> ViolationReport {
    check_hyperring_with_limit(h, DEFAULT_WITNESS_LIMIT)
}

pub fn check_hyperring_with_limit(h: &FiniteHyperstructure, limit: usize) -> ViolationReport {
    let mut r = check_canonical_hypergroup_with_limit(h, limit);
    let l = |x: Elem| h.label(x).to_string();
    let zero = h.zero();

    for x in h.elems() {
        if h.mul(x, zero) != zero {
            r.push(
                Axiom::ZeroAbsorbs,
                [l(x)],
                format!("x·0 = {}", h.label(h.mul(x, zero))),
            );
        }
        for y in h.elems() {
            if y > x && h.mul(x, y) != h.mul(y, x) {
                r.push(
                    Axiom::MulCommutative,
                    [l(x), l(y)],
                    format!(
                        "xy = {} but yx = {}",
                        h.label(h.mul(x, y)),
                        h.label(h.mul(y, x))
                    ),
                );
            }
            for z in h.elems() {
                let left = h.mul(h.mul(x, y), z);
                let right = h.mul(x, h.mul(y, z));
                if left != right {
                    r.push(
                        Axiom::MulAssociative,
                        [l(x), l(y), l(z)],
                        format!("(xy)z = {} but x(yz) = {}", h.label(left), h.label(right)),
                    );
                }
            }
        }
    }

    for x in h.elems() {
        for y in h.elems() {
            for z in h.elems() {
                let left = h.scale(h.add(y, z), x);
                let right = h.add(h.mul(x, y), h.mul(x, z));
                if left != right {
                    r.push(
                        Axiom::R3,
                        [l(x), l(y), l(z)],
                        format!(
                            "x(y+z) = {} but xy+xz = {}",
                            h.fmt_set(left),
                            h.fmt_set(right)
                        ),
                    );
                }
            }
        }
    }

    if let Some(one) = h.one() {
        for x in h.elems() {
            if h.mul(one, x) != x {
                r.push(
                    Axiom::Unity,
                    [l(x)],
                    format!("1·x = {}", h.label(h.mul(one, x))),
                );
            }
        }
    }
    r
}

/// Hyperring checks plus: a unit `1 ≠ 0` exists and the nonzero elements form
/// a multiplicative group.
pub fn check_hyperfield(h: &FiniteHyperstructure) -> ViolationReport {
    check_hyperfield_with_limit(h, DEFAULT_WITNESS_LIMIT)
}

pub fn check_hyperfield_with_limit(h: &FiniteHyperstructure, limit: usize) -> ViolationReport {
    let mut r = check_hyperring_with_limit(h, limit);
    let Some(one) = h.one() else {
        r.push(Axiom::Unity, Vec::<String>::new(), "no unit declared");
        return r;
    };
    if one == h.zero() {
        r.push(Axiom::Unity, [h.label(one)], "1 = 0");
        return r;
    }
    for x in h.nonzero() {
        if h.inv(x).is_none() {
            r.push(Axiom::MulGroup, [h.label(x)], "no multiplicative inverse");
        }
        for y in h.nonzero() {
            if y >= x && h.mul(x, y) == h.zero() {
                r.push(
                    Axiom::MulGroup,
                    [h.label(x), h.label(y)],
                    "product of nonzero elements is zero",
                );
            }
        }
    }
    r
}

/// Outcome of comparing `(a+b)(c+d)` with `ac+ad+bc+bd` over all quadruples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleDistributivity {
    pub inclusion_ok: bool,
    /// Quadruples where the inclusion fails (empty on every hyperring).
    pub inclusion_failures: Vec<[Elem; 4]>,
    /// Quadruples where the inclusion is proper.
    pub equality_witnesses: Vec<[Elem; 4]>,
}

pub fn check_double_distributivity(h: &FiniteHyperstructure) -> DoubleDistributivity {
    let mut inclusion_failures = Vec::new();
    let mut equality_witnesses = Vec::new();
    for a in h.elems() {
        for b in h.elems() {
            let ab = h.add(a, b);
            for c in h.elems() {
                for d in h.elems() {
                    let left = h.set_mul(ab, h.add(c, d));
                    let right = h.sum(
                        h.sum(h.add(h.mul(a, c), h.mul(a, d)), HSet::singleton(h.mul(b, c))),
                        HSet::singleton(h.mul(b, d)),
                    );
                    if !left.is_subset(right) {
                        inclusion_failures.push([a, b, c, d]);
                    } else if left != right {
                        equality_witnesses.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    DoubleDistributivity {
        inclusion_ok: inclusion_failures.is_empty(),
        inclusion_failures,
        equality_witnesses,
    }
}

/// Outcome of replacing single cells of the addition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationCoverage {
    pub mutants: usize,
    pub rejected: usize,
    /// Mutants `(x, y, x + y)` that every checker accepts.
    pub survivors: Vec<(Elem, Elem, HSet)>,
}

impl MutationCoverage {
    pub fn complete(&self) -> bool {
        self.survivors.is_empty()
    }
}

/// Replaces each cell `x + y` by every other nonempty subset of the carrier
/// and runs the hyperfield checker (hyperring checker when `h` has no unit).
pub fn add_table_mutation_coverage(h: &FiniteHyperstructure) -> Result<MutationCoverage> {
    let n = h.size();
    if n > 6 {
        return Err(Error::BoundExceeded {
            what: "mutation carrier",
            value: n,
            bound: 6,
        });
    }
    let field = h.one().is_some();
    let mut out = MutationCoverage {
        mutants: 0,
        rejected: 0,
        survivors: Vec::new(),
    };
    for x in h.elems() {
        for y in h.elems() {
            for bits in 1u128..(1 << n) {
                let value = HSet::from_bits(bits);
                if value == h.add(x, y) {
                    continue;
                }
                let m = h.with_add_cell(x, y, value);
                let report = if field {
                    check_hyperfield_with_limit(&m, 1)
                } else {
                    check_hyperring_with_limit(&m, 1)
                };
                out.mutants += 1;
                if report.is_clean() {
                    out.survivors.push((x, y, value));
                } else {
                    out.rejected += 1;
                }
            }
        }
    }
    Ok(out)
}
