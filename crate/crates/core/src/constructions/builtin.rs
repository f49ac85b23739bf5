use crate::hset::HSet;
use crate::hypercore::FiniteHyperstructure;

/// Index of `1` in [`sign_hyperfield`].
pub const SIGN_POS: usize = 1;
/// Index of `-1` in [`sign_hyperfield`].
pub const SIGN_NEG: usize = 2;

/// `{0, 1, -1}` with the sign rule for addition: the factor hyperfield of
/// the reals by the positive reals.
pub fn sign_hyperfield() -> FiniteHyperstructure {
    let labels = vec!["0".to_string(), "1".to_string(), "-1".to_string()];
    let all = HSet::full(3);
    FiniteHyperstructure::from_fn(
        "sign",
        labels,
        0,
        Some(SIGN_POS),
        |x| [0, 2, 1][x],
        |x, y| match (x, y) {
            (0, _) | (_, 0) => 0,
            _ if x == y => SIGN_POS,
            _ => SIGN_NEG,
        },
        |x, y| match (x, y) {
            (0, y) => HSet::singleton(y),
            (x, 0) => HSet::singleton(x),
            _ if x == y => HSet::singleton(x),
            _ => all,
        },
    )
    .expect("sign hyperfield tables are well formed")
}

/// `{0, 1}` with `1 + 1 = {0, 1}`.
pub fn krasner_hyperfield() -> FiniteHyperstructure {
    FiniteHyperstructure::from_fn(
        "krasner",
        vec!["0".to_string(), "1".to_string()],
        0,
        Some(1),
        |x| x,
        |x, y| x * y,
        |x, y| match (x, y) {
            (1, 1) => HSet::full(2),
            _ => HSet::singleton(x | y),
        },
    )
    .expect("krasner tables are well formed")
}

/// The one-element ring `{0}`.
pub fn zero_ring() -> FiniteHyperstructure {
    FiniteHyperstructure::from_fn(
        "zero ring",
        vec!["0".to_string()],
        0,
        None,
        |_| 0,
        |_, _| 0,
        |_, _| HSet::singleton(0),
    )
    .expect("zero ring tables are well formed")
}
