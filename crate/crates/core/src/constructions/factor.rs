use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::FiniteHyperstructure;

/// Largest modulus accepted unless a caller passes its own bound.
pub const DEFAULT_PRIME_BOUND: u64 = 101;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFieldSpec {
    pub p: u64,
}

impl PrimeFieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        Self::with_bound(p, DEFAULT_PRIME_BOUND)
    }

    pub fn with_bound(p: u64, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > bound {
            return Err(Error::BoundExceeded {
                what: "prime",
                value: p as usize,
                bound: bound as usize,
            });
        }
        Ok(PrimeFieldSpec { p })
    }
}

/// A multiplicative subgroup of `F_p×` given by generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSpec {
    pub generators: Vec<u64>,
}

impl SubgroupSpec {
    pub fn new(generators: impl Into<Vec<u64>>) -> Self {
        SubgroupSpec {
            generators: generators.into(),
        }
    }

    /// Nonzero squares mod `p`, generated by the square of a primitive root.
    pub fn squares(p: u64) -> Self {
        let g = (1..p).find(|&g| multiplicative_order(g, p) == p - 1).unwrap_or(1);
        SubgroupSpec::new([g * g % p])
    }

    /// The sorted elements of the generated subgroup.
    pub fn elements(&self, p: u64) -> Result<Vec<u64>> {
        let mut members = vec![false; p as usize];
        members[1] = true;
        let mut frontier = vec![1u64];
        for &g in &self.generators {
            if g % p == 0 {
                return Err(Error::InvalidSubgroup(format!(
                    "generator {g} is zero mod {p}"
                )));
            }
        }
        while let Some(x) = frontier.pop() {
            for &g in &self.generators {
                let y = x * (g % p) % p;
                if !members[y as usize] {
                    members[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        Ok((1..p).filter(|&x| members[x as usize]).collect())
    }
}

fn multiplicative_order(g: u64, p: u64) -> u64 {
    let mut x = g % p;
    let mut k = 1;
    while x != 1 {
        x = x * g % p;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

/// `F_p / T` together with the residue-to-class map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorHyperfield {
    pub structure: FiniteHyperstructure,
    pub p: u64,
    /// Sorted members of `T`.
    pub subgroup: Vec<u64>,
    /// `class_of[r]` is the class of the residue `r`.
    pub class_of: Vec<Elem>,
    /// Least residue of each class.
    pub representatives: Vec<u64>,
}

impl FactorHyperfield {
    pub fn class(&self, r: i64) -> Elem {
        self.class_of[r.rem_euclid(self.p as i64) as usize]
    }

    /// Members of the coset behind a class.
    pub fn coset(&self, c: Elem) -> Vec<u64> {
        (0..self.p)
            .filter(|&r| self.class_of[r as usize] == c)
            .collect()
    }
}

/// Krasner's factor construction on a prime field: classes `[x] = xT`, with
/// `[x] + [y] = {[xt + yu] : t, u ∈ T}` and `[x][y] = [xy]`.
pub fn factor_hyperfield(field: PrimeFieldSpec, t: &SubgroupSpec) -> Result<FactorHyperfield> {
    let p = field.p;
    let subgroup = t.elements(p)?;
    let mut class_of = vec![usize::MAX; p as usize];
    class_of[0] = 0;
    let mut representatives = vec![0u64];
    for r in 1..p {
        if class_of[r as usize] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(r);
        for &s in &subgroup {
            class_of[(r * s % p) as usize] = c;
        }
    }
    let labels = representatives.iter().map(|r| format!("[{r}]")).collect();
    let reps = &representatives;
    let cls = &class_of;
    let name = if subgroup.len() == 1 {
        format!("F_{p}")
    } else {
        format!("F_{p}/{{{}}}", join(&subgroup))
    };
    let structure = FiniteHyperstructure::from_fn(
        name,
        labels,
        0,
        Some(cls[1]),
        |x| cls[((p - reps[x]) % p) as usize],
        |x, y| cls[(reps[x] * reps[y] % p) as usize],
        |x, y| {
            let mut out = HSet::EMPTY;
            for &s in &subgroup {
                for &u in &subgroup {
                    out.insert(cls[((reps[x] * s + reps[y] * u) % p) as usize]);
                }
            }
            out
        },
    )?;
    Ok(FactorHyperfield {
        structure,
        p,
        subgroup,
        class_of,
        representatives,
    })
}

/// `F_p` itself, with singleton sums.
pub fn prime_field(p: u64) -> Result<FiniteHyperstructure> {
    Ok(factor_hyperfield(PrimeFieldSpec::new(p)?, &SubgroupSpec::new([1]))?.structure)
}

/// `F_p` modulo its nonzero squares.
pub fn fp_mod_squares(p: u64) -> Result<FactorHyperfield> {
    factor_hyperfield(PrimeFieldSpec::new(p)?, &SubgroupSpec::squares(p))
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
