use hfw_core::constructions::*;
use hfw_core::hypercore::{
    check_double_distributivity, check_homomorphism, check_hyperfield, find_isomorphism,
    FiniteHyperstructure,
};
use hfw_core::sgntrop::Sign;
use hfw_core::HSet;
use proptest::prelude::*;

#[test]
fn factor_by_trivial_and_full_subgroups() {
    for p in [2, 3, 5, 7] {
        let f = factor_hyperfield(PrimeFieldSpec::new(p).unwrap(), &SubgroupSpec::new([1])).unwrap();
        assert!(find_isomorphism(&f.structure, &prime_field(p).unwrap()).is_some());
    }
    for p in [3, 5, 7] {
        let all: Vec<u64> = (1..p).collect();
        let f = factor_hyperfield(PrimeFieldSpec::new(p).unwrap(), &SubgroupSpec::new(all)).unwrap();
        assert!(find_isomorphism(&f.structure, &krasner_hyperfield()).is_some());
    }
}

#[test]
fn squares_factors_are_hyperfields() {
    for p in [3, 5, 7, 11, 13] {
        let f = fp_mod_squares(p).unwrap();
        assert!(check_hyperfield(&f.structure).is_clean(), "p = {p}");
        assert_eq!(f.structure.size(), 3);
        for r in 1..p {
            let c = f.class(r as i64);
            assert!(f.coset(c).contains(&r));
        }
    }
    assert!(fp_mod_squares(9).is_err());
}

#[test]
fn hyperideals_and_quotients() {
    let mut corpus = vec![sign_hyperfield(), krasner_hyperfield(), fp_mod_squares(5).unwrap().structure];
    corpus.extend(enumerate_up_to(3).unwrap());
    for h in corpus {
        let ideals = enumerate_hyperideals(&h).unwrap();
        assert_eq!(ideals, vec![HSet::singleton(h.zero()), h.carrier()], "{}", h.name());
        let q = quotient_hyperring(&h, HSet::singleton(h.zero())).unwrap();
        assert!(find_isomorphism(&q.structure, &h).is_some());
        assert!(check_homomorphism(&q.projection(&h), true).is_clean());
        for i in ideals {
            assert_eq!(is_prime_direct(&h, i), is_prime_via_quotient(&h, i));
            assert_eq!(is_maximal_direct(&h, i).unwrap(), is_maximal_via_quotient(&h, i));
        }
    }
}

/// Every commutative addition table on `{0, 1, .., n-1}` over the given
/// multiplicative group, checked and deduplicated by isomorphism.
fn brute_force(n: usize) -> usize {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    let subsets = (1u128 << n) - 1;
    let mut classes: Vec<FiniteHyperstructure> = Vec::new();
    // Z/(n-1) on the nonzero elements; every element of order ≤ 2 may be -1.
    let m = n - 1;
    let mul = |a: usize, b: usize| if a == 0 || b == 0 { 0 } else { (a - 1 + b - 1) % m + 1 };
    for minus_one in (1..n).filter(|&x| mul(x, x) == 1) {
        let mut choice = vec![0u128; cells.len()];
        'all: loop {
            let table = |x: usize, y: usize| -> HSet {
                if x == 0 {
                    return HSet::singleton(y);
                }
                if y == 0 {
                    return HSet::singleton(x);
                }
                let (a, b) = (x.min(y), x.max(y));
                let i = cells.iter().position(|&c| c == (a, b)).unwrap();
                HSet::from_bits(choice[i] + 1)
            };
            let labels = (0..n).map(|i| i.to_string()).collect();
            let h = FiniteHyperstructure::from_fn("b", labels, 0, Some(1), |x| mul(x, minus_one), mul, table).unwrap();
            if check_hyperfield(&h).is_clean() && !classes.iter().any(|c| find_isomorphism(c, &h).is_some()) {
                classes.push(h);
            }
            for c in choice.iter_mut() {
                *c += 1;
                if *c < subsets {
                    continue 'all;
                }
                *c = 0;
            }
            break;
        }
    }
    classes.len()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in [2, 3] {
        assert_eq!(enumerate_hyperfields(n).unwrap().len(), brute_force(n), "n = {n}");
    }
}

#[test]
fn enumeration_snapshot() {
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_hyperfields(n).unwrap().len()).collect();
    assert_eq!(counts, vec![0, 2, 5, 7]);
    for n in 2..=4 {
        let a = enumerate_hyperfields(n).unwrap();
        assert_eq!(a, enumerate_hyperfields(n).unwrap());
        for h in &a {
            assert!(check_hyperfield(h).is_clean());
            assert!(check_double_distributivity(h).inclusion_ok);
        }
    }
}

#[test]
fn rational_factor_closed_forms() {
    let r = |n, d| Rational::new(n, d);
    assert_eq!(q_factor_class(r(3, 7), QSubgroup::Positives), QClass::Sign(Sign::Pos));
    assert_eq!(q_factor_class(r(-12, 5), QSubgroup::Squares), QClass::Squarefree(-15));
    let t = QSubgroup::PositivePUnits(2);
    assert_eq!(q_factor_class(r(-12, 5), t), QClass::SignedValue(Sign::Neg, 2));
    let one = QClass::SignedValue(Sign::Pos, 0);
    let sum = q_factor_sum(&one, &one, t, 40).unwrap();
    assert!(sum.complete && sum.consistent());
    assert_eq!(sum.contains(&QClass::SignedValue(Sign::Pos, 3)), Some(true));
    assert_eq!(sum.contains(&one), Some(false));
    assert_eq!(sum.contains(&QClass::SignedValue(Sign::Neg, 3)), Some(false));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_factor_sum_witnesses_are_sound(
        t in prop::sample::select(vec![QSubgroup::Positives, QSubgroup::PositivePUnits(2), QSubgroup::PositivePUnits(3), QSubgroup::Squares]),
        seed in (-40i64..40, 1i64..40, -40i64..40, 1i64..40),
    ) {
        let (a, b, c, d) = seed;
        prop_assume!(a != 0 && c != 0);
        let x = q_factor_class(Rational::new(a, b), t);
        let y = q_factor_class(Rational::new(c, d), t);
        let sum = q_factor_sum(&x, &y, t, 30).unwrap();
        prop_assert!(verify_witnesses(&x, &y, t, &sum));
        prop_assert!(sum.consistent());
        // x·1 + y·1 is always a member.
        let direct = Rational::new(a, b) + Rational::new(c, d);
        if direct != Rational::from(0) {
            let z = q_factor_class(direct, t);
            prop_assert_ne!(sum.contains(&z), Some(false));
        }
    }

    #[test]
    fn classes_are_multiplicative(
        t in prop::sample::select(vec![QSubgroup::Positives, QSubgroup::PositivePUnits(2), QSubgroup::Squares]),
        seed in (1i64..40, 1i64..40, -40i64..40, 1i64..40),
    ) {
        let (a, b, c, d) = seed;
        prop_assume!(c != 0);
        let (x, y) = (Rational::new(a, b), Rational::new(c, d));
        let reps = q_factor_class(x, t).representative(t) * q_factor_class(y, t).representative(t);
        prop_assert_eq!(q_factor_class(reps, t), q_factor_class(x * y, t));
    }
}
