use hfw_core::constructions::{sign_hyperfield, QClass, QSubgroup};
use hfw_core::hypercore::find_isomorphism;
use hfw_core::sgntrop::*;
use hfw_core::valtheory::induced_valuation_on_factor;
use proptest::prelude::*;

#[test]
fn axioms_on_windows() {
    for (k, b) in [(1, 4), (2, 4)] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        let r = st_axiom_check(&f, b).unwrap();
        assert!(r.is_clean(), "k = {k}: {r}");
    }
}

#[test]
fn hulls_are_ring_and_maximal_ideal() {
    for (k, b) in [(1, 4), (2, 2)] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        for h in st_orderings(&f, b) {
            let c = st_hull_check(&f, &h, b).unwrap();
            assert!(c.a_agrees && c.i_agrees);
            assert_eq!(c.a_of_p, Hull::Within(st_valuation_ring(&f)));
            assert_eq!(c.i_of_p, Hull::Within(st_maximal_ideal(&f)));
        }
    }
}

#[test]
fn residue_is_the_sign_hyperfield() {
    for k in [1, 2] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        let res = st_residue(&f).unwrap();
        assert!(find_isomorphism(&res.structure, &sign_hyperfield()).is_some());
        assert!(st_residue_sign_isomorphism(&f).unwrap().is_some());
    }
}

#[test]
fn three_point_subhyperring_is_not_strict() {
    let f = SignedValueHyperfield::tropical(1).unwrap();
    let d = st_nonstrict_subhyperring_demo(&f).unwrap();
    assert!(d.is_subhyperring && d.induced_hyperfield && d.isomorphism_strict);
    let (_, _, diff, out) = d.strictness_witness.unwrap();
    assert!(diff.contains(out) && !d.elements.contains(&out));
}

#[test]
fn one_minus_one_is_a_ball() {
    let f = SignedValueHyperfield::tropical(1).unwrap();
    let d = st_nonsingleton_sum_demo(&f);
    assert_eq!(d.sum, StSet::ball(f.zero_value()));
    assert!(d.contains_zero);
    assert!(d.singleton_rows.iter().all(|(_, _, s)| s.singleton().is_some()));
}

#[test]
fn tropical_orderings_are_characters() {
    for (k, b) in [(1, 4), (2, 2)] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        assert_eq!(st_orderings(&f, b), Character::all(k));
    }
    let dyadic = SignedValueHyperfield::padic(2).unwrap();
    assert_eq!(st_orderings(&dyadic, 4), vec![Character::trivial(1)]);
}

#[test]
fn dyadic_model_matches_rational_classes() {
    let v = induced_valuation_on_factor(QSubgroup::PositivePUnits(2), 2, 20, 3).unwrap();
    assert!(v.agrees_with_v_p);
    assert_eq!(v.value(&QClass::SignedValue(Sign::Neg, 3)), Some(3));
}

fn elem(k: usize) -> impl Strategy<Value = StElem> {
    (any::<bool>(), prop::collection::vec(-5i64..5, k), 0u8..8).prop_map(|(pos, g, z)| {
        if z == 0 {
            StElem::Zero
        } else {
            let g = Gamma::new(&g);
            if pos { StElem::pos(g) } else { StElem::neg_of(g) }
        }
    })
}

proptest! {
    #[test]
    fn point_sets_add_like_points(x in elem(1), y in elem(1), z in elem(1)) {
        let f = SignedValueHyperfield::tropical(1).unwrap();
        prop_assert_eq!(f.set_add(&StSet::point(x), &StSet::point(y)).unwrap(), f.add(x, y));
        prop_assert_eq!(f.add(x, y), f.add(y, x));
        prop_assert_eq!(f.add(x, y).negate(), f.add(x.negate(), y.negate()));
        let s = f.add(x, y);
        prop_assert!(StSet::from_elems(s.members_in_window(1, 12)).is_subset(&s));
        prop_assert_eq!(
            f.set_add(&s, &StSet::point(z)).unwrap(),
            f.set_add(&StSet::point(x), &f.add(y, z)).unwrap()
        );
    }

    #[test]
    fn scaling_distributes(x in elem(2), y in elem(2), z in elem(2)) {
        let f = SignedValueHyperfield::tropical(2).unwrap();
        prop_assert_eq!(f.add(y, z).scale(x), f.add(x.times(y), x.times(z)));
    }
}
