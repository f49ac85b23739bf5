use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hset::{Elem, HSet};
use crate::hypercore::{check_hyperfield, FiniteHyperstructure};

/// Largest order accepted by [`enumerate_hyperfields`].
pub const MAX_ENUMERATION_ORDER: usize = 5;

/// Multiplication tables for every abelian group of order `m ≤ 4`, on the
/// indices `1..=m` with `1` as identity.
fn groups(m: usize) -> Vec<(&'static str, Vec<Vec<Elem>>)> {
    let cyclic = |m: usize| {
        (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m + 1).collect())
            .collect()
    };
    let mut out = vec![(["C1", "C1", "C2", "C3", "C4"][m], cyclic(m))];
    if m == 4 {
        let klein = (0..4)
            .map(|a| (0..4).map(|b| (a ^ b) + 1).collect())
            .collect();
        out.push(("C2xC2", klein));
    }
    out
}

/// Hyperfields of order `n` up to isomorphism.
///
/// For each abelian group on the nonzero elements and each choice of `-1`
/// among elements of order at most 2, every assignment of the rows `1 + x`
/// is tried; the full table follows from `a + b = a(1 + a⁻¹b)`. Survivors of
/// the hyperfield checks are reduced to a canonical relabelling and
/// deduplicated. Output is sorted by canonical form.
pub fn enumerate_hyperfields(n: usize) -> Result<Vec<FiniteHyperstructure>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::BoundExceeded {
            what: "hyperfield order",
            value: n,
            bound: MAX_ENUMERATION_ORDER,
        });
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let m = n - 1;
    let mut found: BTreeMap<Key, FiniteHyperstructure> = BTreeMap::new();
    for (_, g) in groups(m) {
        let gmul = |a: Elem, b: Elem| if a == 0 || b == 0 { 0 } else { g[a - 1][b - 1] };
        let ginv = |a: Elem| (1..=m).find(|&b| gmul(a, b) == 1).expect("group");
        for minus_one in (1..=m).filter(|&x| gmul(x, x) == 1) {
            let neg = |x: Elem| gmul(minus_one, x);
            // Candidate rows 1 + x for x = 1..=m; 1 + 0 = {1} is fixed.
            let options: Vec<Vec<HSet>> = (1..=m)
                .map(|x| {
                    (1u128..(1 << n))
                        .map(HSet::from_bits)
                        .filter(|s| s.contains(0) == (x == minus_one))
                        .collect()
                })
                .collect();
            let mut choice = vec![0usize; m];
            loop {
                let row = |x: Elem| {
                    if x == 0 {
                        HSet::singleton(1)
                    } else {
                        options[x - 1][choice[x - 1]]
                    }
                };
                let h = FiniteHyperstructure::from_fn(
                    "candidate",
                    labels(n),
                    0,
                    Some(1),
                    neg,
                    gmul,
                    |a, b| {
                        if a == 0 {
                            HSet::singleton(b)
                        } else {
                            row(gmul(ginv(a), b)).map(|z| gmul(a, z))
                        }
                    },
                )
                .expect("candidate tables are well formed");
                if check_hyperfield(&h).is_clean() {
                    let (key, canon) = canonical(&h);
                    found.entry(key).or_insert(canon);
                }
                if !advance(&mut choice, &options) {
                    break;
                }
            }
        }
    }
    Ok(found
        .into_values()
        .enumerate()
        .map(|(i, h)| h.with_name(format!("H{n}.{}", i + 1)))
        .collect())
}

/// Hyperfields of every order from 2 to `n`.
pub fn enumerate_up_to(n: usize) -> Result<Vec<FiniteHyperstructure>> {
    let mut out = Vec::new();
    for k in 2..=n {
        out.extend(enumerate_hyperfields(k)?);
    }
    Ok(out)
}

fn advance(choice: &mut [usize], options: &[Vec<HSet>]) -> bool {
    for (c, opts) in choice.iter_mut().zip(options) {
        *c += 1;
        if *c < opts.len() {
            return true;
        }
        *c = 0;
    }
    false
}

fn labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => format!("x{i}"),
        })
        .collect()
}

type Key = (Vec<Elem>, Vec<Elem>, Vec<u128>);

/// Least encoding of `h` over all relabellings fixing `0` and `1`, and the
/// structure relabelled accordingly.
pub fn canonical(h: &FiniteHyperstructure) -> (Key, FiniteHyperstructure) {
    let n = h.size();
    let one = h.one().expect("hyperfield");
    let rest: Vec<Elem> = h.elems().filter(|&x| x != h.zero() && x != one).collect();
    let mut best: Option<(Key, Vec<Elem>)> = None;
    for perm in permutations(&rest) {
        // sigma maps old indices to new ones.
        let mut sigma = vec![0; n];
        sigma[h.zero()] = 0;
        sigma[one] = 1;
        for (k, &x) in perm.iter().enumerate() {
            sigma[x] = k + 2;
        }
        let mut inv = vec![0; n];
        for (old, &new) in sigma.iter().enumerate() {
            inv[new] = old;
        }
        let neg = (0..n).map(|y| sigma[h.neg(inv[y])]).collect();
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| sigma[h.mul(inv[a], inv[b])])
            .collect();
        let add = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| h.add(inv[a], inv[b]).map(|z| sigma[z]).bits())
            .collect();
        let key = (mul, neg, add);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, sigma));
        }
    }
    let (key, sigma) = best.expect("at least one permutation");
    let mut inv = vec![0; n];
    for (old, &new) in sigma.iter().enumerate() {
        inv[new] = old;
    }
    let canon = FiniteHyperstructure::from_fn(
        h.name(),
        labels(n),
        0,
        Some(1),
        |y| sigma[h.neg(inv[y])],
        |a, b| sigma[h.mul(inv[a], inv[b])],
        |a, b| h.add(inv[a], inv[b]).map(|z| sigma[z]),
    )
    .expect("relabelling preserves shape");
    (key, canon)
}

fn permutations(xs: &[Elem]) -> Vec<Vec<Elem>> {
    if xs.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}
