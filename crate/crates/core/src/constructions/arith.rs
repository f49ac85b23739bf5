//! Integer facts used as exact membership certificates.

/// `(prime, exponent)` pairs of `|n|`, ascending; empty for `|n| ≤ 1`.
pub fn factorize(n: i64) -> Vec<(u64, u32)> {
    let mut m = n.unsigned_abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// The squarefree `s` with `n = s·k²`, carrying the sign of `n`. Panics on 0.
pub fn squarefree_part(n: i64) -> i64 {
    assert!(n != 0, "squarefree part of zero");
    let s: i64 = factorize(n)
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .map(|(p, _)| p as i64)
        .product();
    s * n.signum()
}

/// `v_p(n)` for `n ≠ 0`.
pub fn valuation(n: i64, p: u64) -> i64 {
    assert!(n != 0, "valuation of zero");
    let mut m = n.unsigned_abs();
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

/// Whether `n ≥ 0` is a sum of two integer squares: no prime `≡ 3 (mod 4)`
/// divides it to an odd power.
pub fn is_sum_of_two_squares(n: i64) -> bool {
    n >= 0
        && factorize(n)
            .into_iter()
            .all(|(p, e)| p % 4 != 3 || e % 2 == 0)
}

/// Whether `n ≥ 0` is a sum of three integer squares: `n` is not of the form
/// `4^a(8b + 7)`.
pub fn is_sum_of_three_squares(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut m = n;
    while m % 4 == 0 {
        m /= 4;
    }
    m % 8 != 7
}

fn isqrt(n: i64) -> i64 {
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_square(n: i64) -> bool {
    n >= 0 && isqrt(n).pow(2) == n
}

/// `[a, b, …]` with `Σ xᵢ² = n` and every `xᵢ > 0`, found by descending search.
pub fn positive_squares_witness(n: i64, terms: usize) -> Option<Vec<i64>> {
    if terms == 0 {
        return (n == 0).then(Vec::new);
    }
    if n < terms as i64 {
        return None;
    }
    if terms == 1 {
        return is_square(n).then(|| vec![isqrt(n)]);
    }
    let mut a = isqrt(n);
    while a >= 1 {
        if let Some(mut rest) = positive_squares_witness(n - a * a, terms - 1) {
            rest.insert(0, a);
            return Some(rest);
        }
        a -= 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(18), 2);
        assert_eq!(squarefree_part(-12), -3);
        assert_eq!(squarefree_part(1), 1);
        assert_eq!(squarefree_part(49), 1);
    }

    #[test]
    fn two_and_three_squares_match_brute_force() {
        for n in 0..400i64 {
            let two = (0..=20).any(|a| (0..=20).any(|b| a * a + b * b == n));
            let three = (0..=20).any(|a| (0..=20).any(|b| (0..=20).any(|c| a * a + b * b + c * c == n)));
            assert_eq!(is_sum_of_two_squares(n), two, "{n}");
            assert_eq!(is_sum_of_three_squares(n), three, "{n}");
        }
    }

    #[test]
    fn witnesses_sum_correctly() {
        for n in 1..200 {
            if let Some(w) = positive_squares_witness(n, 4) {
                assert_eq!(w.iter().map(|x| x * x).sum::<i64>(), n);
                assert!(w.iter().all(|&x| x > 0));
            }
        }
        assert_eq!(positive_squares_witness(7, 4), Some(vec![2, 1, 1, 1]));
        assert_eq!(positive_squares_witness(7, 2), None);
    }
}
