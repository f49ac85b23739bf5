use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

/// Largest supported rank of the value group `Z^k`.
pub const MAX_RANK: usize = 4;

/// An element of `Z^k` under the lexicographic order, `1 ≤ k ≤ MAX_RANK`.
/// Unused coordinates are kept at zero so the derived order is lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gamma {
    k: u8,
    c: [i64; MAX_RANK],
}

impl Gamma {
    pub fn zero(k: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&k), "rank {k} out of range");
        Gamma {
            k: k as u8,
            c: [0; MAX_RANK],
        }
    }

    pub fn new(coords: &[i64]) -> Self {
        let mut g = Gamma::zero(coords.len());
        g.c[..coords.len()].copy_from_slice(coords);
        g
    }

    pub fn scalar(x: i64) -> Self {
        Gamma::new(&[x])
    }

    /// The `i`-th standard generator.
    pub fn unit(k: usize, i: usize) -> Self {
        let mut g = Gamma::zero(k);
        g.c[i] = 1;
        g
    }

    /// The least positive element, `(0, …, 0, 1)`.
    pub fn least_positive(k: usize) -> Self {
        Gamma::unit(k, k - 1)
    }

    pub fn rank(&self) -> usize {
        self.k as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.c[..self.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; MAX_RANK]
    }

    pub fn is_positive(&self) -> bool {
        *self > Gamma::zero(self.rank())
    }

    pub fn scale(self, n: i64) -> Self {
        let mut out = self;
        for x in &mut out.c {
            *x *= n;
        }
        out
    }

    /// Every coordinate even.
    pub fn is_even(&self) -> bool {
        self.coords().iter().all(|x| x % 2 == 0)
    }

    /// Elements of `[-b, b]^k` in ascending order.
    pub fn window(k: usize, b: i64) -> Vec<Gamma> {
        let mut out = vec![Gamma::zero(k)];
        for i in 0..k {
            let mut next = Vec::new();
            for g in &out {
                for x in -b..=b {
                    let mut h = *g;
                    h.c[i] = x;
                    next.push(h);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

impl PartialOrd for Gamma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gamma {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.k, other.k, "comparing values of different ranks");
        self.c.cmp(&other.c)
    }
}

impl Add for Gamma {
    type Output = Gamma;
    fn add(self, o: Gamma) -> Gamma {
        let mut out = self;
        for i in 0..MAX_RANK {
            out.c[i] += o.c[i];
        }
        out
    }
}

impl Sub for Gamma {
    type Output = Gamma;
    fn sub(self, o: Gamma) -> Gamma {
        self + (-o)
    }
}

impl Neg for Gamma {
    type Output = Gamma;
    fn neg(self) -> Gamma {
        self.scale(-1)
    }
}

impl fmt::Debug for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return write!(f, "{}", self.c[0]);
        }
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Gamma {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Neg, Sign::Pos];

    pub fn of(x: i64) -> Option<Sign> {
        match x.cmp(&0) {
            Ordering::Less => Some(Sign::Neg),
            Ordering::Equal => None,
            Ordering::Greater => Some(Sign::Pos),
        }
    }

    pub fn times(self, o: Sign) -> Sign {
        if self == o {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Pos => 1,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "-",
            Sign::Pos => "+",
        })
    }
}

/// `0` or a pair `(sign, value)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StElem {
    Zero,
    Nz(Sign, Gamma),
}

impl StElem {
    pub fn pos(g: Gamma) -> Self {
        StElem::Nz(Sign::Pos, g)
    }

    pub fn neg_of(g: Gamma) -> Self {
        StElem::Nz(Sign::Neg, g)
    }

    pub fn value(&self) -> Option<Gamma> {
        match self {
            StElem::Zero => None,
            StElem::Nz(_, g) => Some(*g),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            StElem::Zero => None,
            StElem::Nz(s, _) => Some(*s),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, StElem::Zero)
    }

    pub fn negate(self) -> Self {
        match self {
            StElem::Zero => StElem::Zero,
            StElem::Nz(s, g) => StElem::Nz(s.flip(), g),
        }
    }

    pub fn times(self, o: StElem) -> Self {
        match (self, o) {
            (StElem::Nz(s, a), StElem::Nz(t, b)) => StElem::Nz(s.times(t), a + b),
            _ => StElem::Zero,
        }
    }

    pub fn inverse(self) -> Option<Self> {
        match self {
            StElem::Zero => None,
            StElem::Nz(s, g) => Some(StElem::Nz(s, -g)),
        }
    }
}

impl fmt::Debug for StElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for StElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StElem::Zero => write!(f, "0"),
            StElem::Nz(s, g) => write!(f, "({s},{g})"),
        }
    }
}

impl Serialize for StElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
