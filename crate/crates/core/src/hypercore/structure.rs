use std::collections::HashSet;
use std::fmt::Write as _;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hset::{Elem, HSet, MAX_CARRIER};

/// A finite carrier with negation, a multiplication table and a set-valued
/// addition table.
///
/// Construction validates shapes and indices only. Whether the tables obey
/// any axioms is decided by the checkers in [`crate::hypercore`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHyperstructure {
    name: String,
    labels: Vec<String>,
    zero: Elem,
    one: Option<Elem>,
    neg: Vec<Elem>,
    mul: Vec<Elem>,
    add: Vec<HSet>,
}

impl FiniteHyperstructure {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        zero: Elem,
        one: Option<Elem>,
        neg: Vec<Elem>,
        mul: Vec<Vec<Elem>>,
        add: Vec<Vec<HSet>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("empty carrier".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Malformed(format!("duplicate label {l:?}")));
            }
        }
        let check = |x: Elem| {
            if x < n {
                Ok(())
            } else {
                Err(Error::OutOfCarrier { index: x, size: n })
            }
        };
        check(zero)?;
        if let Some(o) = one {
            check(o)?;
        }
        if neg.len() != n || mul.len() != n || add.len() != n {
            return Err(Error::Malformed(format!(
                "table sizes neg={} mul={} add={} do not match carrier {n}",
                neg.len(),
                mul.len(),
                add.len()
            )));
        }
        for &x in &neg {
            check(x)?;
        }
        let mut flat_mul = Vec::with_capacity(n * n);
        for row in mul {
            if row.len() != n {
                return Err(Error::Malformed("ragged multiplication table".into()));
            }
            for x in row {
                check(x)?;
                flat_mul.push(x);
            }
        }
        let full = HSet::full(n);
        let mut flat_add = Vec::with_capacity(n * n);
        for (i, row) in add.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed("ragged addition table".into()));
            }
            for (j, s) in row.into_iter().enumerate() {
                if s.is_empty() {
                    return Err(Error::Malformed(format!(
                        "{} + {} is empty",
                        labels[i], labels[j]
                    )));
                }
                if !s.is_subset(full) {
                    return Err(Error::OutOfCarrier {
                        index: s.span() - 1,
                        size: n,
                    });
                }
                flat_add.push(s);
            }
        }
        Ok(FiniteHyperstructure {
            name: name.into(),
            labels,
            zero,
            one,
            neg,
            mul: flat_mul,
            add: flat_add,
        })
    }

    /// Builds the tables by evaluating the given operations on every pair.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        zero: Elem,
        one: Option<Elem>,
        neg: impl Fn(Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        add: impl Fn(Elem, Elem) -> HSet,
    ) -> Result<Self> {
        let n = labels.len();
        let negs = (0..n).map(&neg).collect();
        let muls = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        let adds = (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect();
        Self::new(name, labels, zero, one, negs, muls, adds)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn elems(&self) -> Range<Elem> {
        0..self.size()
    }

    pub fn carrier(&self) -> HSet {
        HSet::full(self.size())
    }

    pub fn nonzero(&self) -> HSet {
        self.carrier().without(self.zero)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Option<Elem> {
        self.one
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.size() + y]
    }

    /// Stored sum `x + y`; panics on out-of-carrier indices.
    pub fn add(&self, x: Elem, y: Elem) -> HSet {
        self.add[x * self.size() + y]
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.size()
    }

    fn ensure(&self, x: Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfCarrier {
                index: x,
                size: self.size(),
            })
        }
    }

    fn ensure_set(&self, a: HSet) -> Result<()> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        if !a.is_subset(self.carrier()) {
            return Err(Error::OutOfCarrier {
                index: a.span() - 1,
                size: self.size(),
            });
        }
        Ok(())
    }

    /// The hyperoperation with domain checks.
    pub fn hyper_add(&self, x: Elem, y: Elem) -> Result<HSet> {
        self.ensure(x)?;
        self.ensure(y)?;
        Ok(self.add(x, y))
    }

    /// `A + B`, the union of `x + y` over `x ∈ A`, `y ∈ B`.
    pub fn set_add(&self, a: HSet, b: HSet) -> Result<HSet> {
        self.ensure_set(a)?;
        self.ensure_set(b)?;
        Ok(self.sum(a, b))
    }

    /// Unchecked `A + B`; empty if either operand is empty.
    pub fn sum(&self, a: HSet, b: HSet) -> HSet {
        let mut out = HSet::EMPTY;
        for x in a {
            for y in b {
                out = out.union(self.add(x, y));
            }
        }
        out
    }

    /// `A + x`.
    pub fn sum_elem(&self, a: HSet, x: Elem) -> HSet {
        a.iter().fold(HSet::EMPTY, |acc, y| acc.union(self.add(y, x)))
    }

    /// `A - B`.
    pub fn diff(&self, a: HSet, b: HSet) -> HSet {
        self.sum(a, self.neg_set(b))
    }

    pub fn neg_set(&self, a: HSet) -> HSet {
        a.map(|x| self.neg(x))
    }

    /// `x · A`.
    pub fn scale(&self, a: HSet, x: Elem) -> HSet {
        a.map(|y| self.mul(x, y))
    }

    /// `A · B`, the set of products.
    pub fn set_mul(&self, a: HSet, b: HSet) -> HSet {
        let mut out = HSet::EMPTY;
        for x in a {
            out = out.union(self.scale(b, x));
        }
        out
    }

    /// Multiplicative inverse of `x`, searched in the table.
    pub fn inv(&self, x: Elem) -> Option<Elem> {
        let one = self.one?;
        self.elems().find(|&y| self.mul(x, y) == one)
    }

    /// `x⁻¹` for a hyperfield; panics when `x` has no inverse.
    pub fn inverse(&self, x: Elem) -> Elem {
        self.inv(x)
            .unwrap_or_else(|| panic!("{} has no inverse in {}", self.label(x), self.name))
    }

    /// Nonzero squares.
    pub fn squares(&self) -> HSet {
        self.nonzero().map(|x| self.mul(x, x))
    }

    pub fn fmt_set(&self, a: HSet) -> String {
        let mut s = String::from("{");
        for (i, x) in a.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{}", self.labels[x]);
        }
        s.push('}');
        s
    }

    pub fn parse_set(&self, labels: &[&str]) -> Option<HSet> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    /// Copy with one addition-table cell replaced. Used for mutation testing;
    /// no axioms are re-checked.
    pub fn with_add_cell(&self, x: Elem, y: Elem, value: HSet) -> Self {
        let mut out = self.clone();
        let n = self.size();
        out.add[x * n + y] = value;
        out
    }

    pub fn with_mul_cell(&self, x: Elem, y: Elem, value: Elem) -> Self {
        let mut out = self.clone();
        let n = self.size();
        out.mul[x * n + y] = value;
        out
    }

    pub fn to_table(&self) -> TableSpec {
        let n = self.size();
        TableSpec {
            name: self.name.clone(),
            carrier: self.labels.clone(),
            zero: self.zero,
            one: self.one,
            neg: self.neg.clone(),
            mul: (0..n).map(|x| (0..n).map(|y| self.mul(x, y)).collect()).collect(),
            add: (0..n)
                .map(|x| (0..n).map(|y| self.add(x, y).to_vec()).collect())
                .collect(),
        }
    }

    /// Addition table rendered with labels, one row per line.
    pub fn render_add_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .elems()
            .map(|x| self.elems().map(|y| self.fmt_set(self.add(x, y))).collect())
            .collect();
        let head = self.labels.iter().map(|l| l.len()).max().unwrap_or(1);
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(std::iter::once(head))
            .max()
            .unwrap_or(1);
        let mut out = format!("{:>head$} |", "+");
        for l in &self.labels {
            let _ = write!(out, " {l:>width$}");
        }
        out.push('\n');
        for (x, row) in cells.iter().enumerate() {
            let _ = write!(out, "{:>head$} |", self.labels[x]);
            for c in row {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

/// On-disk table format for a finite hyperstructure; all entries are carrier
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    pub name: String,
    pub carrier: Vec<String>,
    pub zero: Elem,
    #[serde(default)]
    pub one: Option<Elem>,
    pub neg: Vec<Elem>,
    pub mul: Vec<Vec<Elem>>,
    pub add: Vec<Vec<Vec<Elem>>>,
}

impl TableSpec {
    pub fn build(&self) -> Result<FiniteHyperstructure> {
        let n = self.carrier.len();
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut add = Vec::with_capacity(n);
        for row in &self.add {
            let mut out = Vec::with_capacity(row.len());
            for cell in row {
                let mut s = HSet::EMPTY;
                for &x in cell {
                    if x >= n {
                        return Err(Error::OutOfCarrier { index: x, size: n });
                    }
                    s.insert(x);
                }
                out.push(s);
            }
            add.push(out);
        }
        FiniteHyperstructure::new(
            self.name.clone(),
            self.carrier.clone(),
            self.zero,
            self.one,
            self.neg.clone(),
            self.mul.clone(),
            add,
        )
    }
}

impl From<&FiniteHyperstructure> for TableSpec {
    fn from(h: &FiniteHyperstructure) -> Self {
        h.to_table()
    }
}
