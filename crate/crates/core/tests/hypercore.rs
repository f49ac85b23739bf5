use hfw_core::constructions::{
    enumerate_up_to, fp_mod_squares, krasner_hyperfield, prime_field, sign_hyperfield, zero_ring,
    SIGN_NEG, SIGN_POS,
};
use hfw_core::hypercore::*;
use hfw_core::HSet;
use proptest::prelude::*;

fn finite_builtins() -> Vec<FiniteHyperstructure> {
    vec![
        sign_hyperfield(),
        krasner_hyperfield(),
        fp_mod_squares(5).unwrap().structure,
        fp_mod_squares(7).unwrap().structure,
    ]
}

#[test]
fn builtins_are_hyperfields() {
    for h in finite_builtins() {
        assert!(check_canonical_hypergroup(&h).is_clean(), "{}", h.name());
        assert!(check_hyperring(&h).is_clean(), "{}", h.name());
        assert!(check_hyperfield(&h).is_clean(), "{}", h.name());
    }
    assert!(check_hyperring(&zero_ring()).is_clean());
}

#[test]
fn sign_with_one_plus_one_patched_fails_reversibility() {
    let h = sign_hyperfield().with_add_cell(SIGN_POS, SIGN_POS, HSet::singleton(SIGN_NEG));
    assert!(check_canonical_hypergroup(&h).has(Axiom::H4) || check_canonical_hypergroup(&h).has(Axiom::H1));
    assert!(!check_hyperfield(&h).is_clean());
}

#[test]
fn noncommutative_multiplication_is_reported() {
    let h = fp_mod_squares(7).unwrap().structure;
    let x = 1;
    let y = 2;
    let m = h.with_mul_cell(x, y, h.mul(x, x));
    assert!(check_hyperring(&m).has(Axiom::MulCommutative));
}

#[test]
fn mutation_coverage_on_builtins() {
    for h in finite_builtins() {
        let cov = add_table_mutation_coverage(&h).unwrap();
        assert!(cov.mutants > 0);
        assert_eq!(cov.mutants, cov.rejected + cov.survivors.len());
        if h.name() == krasner_hyperfield().name() {
            // 1 + 1 = {0} turns the Krasner hyperfield into F_2.
            assert_eq!(cov.survivors, vec![(1, 1, HSet::singleton(0))]);
            let m = h.with_add_cell(1, 1, HSet::singleton(0));
            assert!(find_isomorphism(&m, &prime_field(2).unwrap()).is_some());
        } else {
            assert!(cov.complete(), "{}: {:?}", h.name(), cov.survivors);
        }
    }
}

#[test]
fn double_distributivity_inclusion() {
    let mut corpus = finite_builtins();
    corpus.extend(enumerate_up_to(4).unwrap());
    let mut proper = 0;
    for h in &corpus {
        let dd = check_double_distributivity(h);
        assert!(dd.inclusion_ok, "{}", h.name());
        proper += dd.equality_witnesses.len();
    }
    assert!(proper > 0);
    let dd = check_double_distributivity(&prime_field(5).unwrap());
    assert!(dd.inclusion_ok && dd.equality_witnesses.is_empty());
}

#[test]
fn identity_is_a_strict_isomorphism() {
    for h in finite_builtins() {
        let id = HomomorphismSpec::identity(&h);
        assert!(check_homomorphism(&id, true).is_clean());
        assert!(is_isomorphism(&id));
    }
}

fn structure() -> impl Strategy<Value = FiniteHyperstructure> {
    let mut all = finite_builtins();
    all.extend(enumerate_up_to(3).unwrap());
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn zero_is_neutral(h in structure(), i in 0usize..8) {
        let x = i % h.size();
        prop_assert_eq!(h.add(x, h.zero()), HSet::singleton(x));
    }

    #[test]
    fn reversibility(h in structure(), i in 0usize..8, j in 0usize..8) {
        let (x, y) = (i % h.size(), j % h.size());
        for z in h.add(x, y).iter() {
            prop_assert!(h.add(z, h.neg(x)).contains(y));
        }
        prop_assert_eq!(h.add(x, y), h.add(y, x));
    }

    #[test]
    fn dd_inclusion(h in structure(), q in prop::array::uniform4(0usize..8)) {
        let [a, b, c, d] = q.map(|x| x % h.size());
        let left = h.set_mul(h.add(a, b), h.add(c, d));
        let right = h.sum(h.sum(h.add(h.mul(a, c), h.mul(a, d)), HSet::singleton(h.mul(b, c))), HSet::singleton(h.mul(b, d)));
        prop_assert!(left.is_subset(right));
    }

    #[test]
    fn off_diagonal_mutations_are_rejected(h in structure(), i in 0usize..8, j in 0usize..8, bits in 1u128..16) {
        let n = h.size();
        let (x, y) = (i % n, j % n);
        let value = HSet::from_bits(bits & ((1 << n) - 1));
        prop_assume!(x != y && !value.is_empty() && value != h.add(x, y));
        prop_assert!(!check_hyperfield(&h.with_add_cell(x, y, value)).is_clean());
    }
}
