use hfw_core::constructions::{
    enumerate_up_to, fp_mod_squares, krasner_hyperfield, prime_field, q_factor_class,
    sign_hyperfield, QClass, QSubgroup, Rational, SubgroupSpec, SIGN_NEG, SIGN_POS,
};
use hfw_core::hypercore::{check_homomorphism, Axiom, FiniteHyperstructure};
use hfw_core::realalg::qsquares::{
    q_squares_archimedean, q_squares_in_contains, q_squares_in_witness, squares_in_report,
    verify_in_witness,
};
use hfw_core::realalg::*;
use hfw_core::sgntrop::Sign;
use hfw_core::HSet;
use proptest::prelude::*;

fn corpus() -> Vec<FiniteHyperstructure> {
    let mut out = vec![sign_hyperfield(), krasner_hyperfield()];
    for p in [5, 7, 13] {
        out.push(fp_mod_squares(p).unwrap().structure);
    }
    for p in [2, 3, 5, 7] {
        out.push(prime_field(p).unwrap());
    }
    out.extend(enumerate_up_to(4).unwrap());
    out
}

#[test]
fn sign_hyperfield_has_one_ordering() {
    let h = sign_hyperfield();
    let expected = vec![OrderingSet {
        positive: HSet::singleton(SIGN_POS),
    }];
    assert_eq!(enumerate_orderings(&h).unwrap(), expected);
    assert_eq!(enumerate_orderings_powerset(&h).unwrap(), expected);
    assert!(is_real(&h).unwrap().real);
}

#[test]
fn krasner_singleton_is_not_an_ordering() {
    let h = krasner_hyperfield();
    let r = is_ordering(&h, HSet::singleton(1));
    assert!(r.has(Axiom::OrdDisjoint));
    assert!(!is_real(&h).unwrap().real);
}

#[test]
fn fp_mod_squares_are_not_real() {
    for p in [5, 7, 13] {
        let f = fp_mod_squares(p).unwrap();
        let h = &f.structure;
        assert!(enumerate_orderings(h).unwrap().is_empty(), "p = {p}");
        assert!(!is_real(h).unwrap().real, "p = {p}");
    }
    let f5 = fp_mod_squares(5).unwrap();
    let r = is_ordering(&f5.structure, HSet::singleton(f5.class(1)));
    assert!(r.has(Axiom::OrdDisjoint));
}

#[test]
fn prime_fields_have_no_orderings() {
    for p in [2, 3, 5, 7, 11] {
        assert!(enumerate_orderings(&prime_field(p).unwrap()).unwrap().is_empty());
    }
}

#[test]
fn pruned_search_matches_powerset_and_realness() {
    for h in corpus() {
        let pruned = enumerate_orderings(&h).unwrap();
        if h.size() <= POWERSET_ORACLE_BOUND {
            assert_eq!(pruned, enumerate_orderings_powerset(&h).unwrap(), "{}", h.name());
        }
        for p in &pruned {
            assert!(is_ordering(&h, p.positive).is_clean());
        }
        let real = is_real(&h).unwrap();
        assert_eq!(real.real, !pruned.is_empty(), "{}", h.name());
        assert_eq!(real.ordering.is_some(), real.real);
    }
}

#[test]
fn non_realness_derivations_replay() {
    for h in corpus() {
        let real = is_real(&h).unwrap();
        if real.real {
            continue;
        }
        let minus_one = h.neg(h.one().unwrap());
        let mut known = h.squares().intersection(h.nonzero());
        if known.contains(minus_one) {
            assert!(real.derivation.is_empty());
            continue;
        }
        for &(x, y, z) in &real.derivation {
            assert!(known.contains(x) && known.contains(y) && h.add(x, y).contains(z));
            known = known.with(z);
        }
        assert!(known.contains(minus_one), "{}", h.name());
    }
}

#[test]
fn sign_maps_are_homomorphisms() {
    for h in corpus() {
        for p in enumerate_orderings(&h).unwrap() {
            let phi = sign_hom(&h, p.positive).unwrap();
            assert!(check_homomorphism(&phi, false).is_clean(), "{}", h.name());
            for a in h.nonzero().iter() {
                let expected = if signature(&h, p.positive, a).unwrap() == Sign::Pos {
                    SIGN_POS
                } else {
                    SIGN_NEG
                };
                assert_eq!(phi.apply(a), expected);
                for b in h.nonzero().iter() {
                    let prod = signature(&h, p.positive, h.mul(a, b)).unwrap();
                    let parts = signature(&h, p.positive, a)
                        .unwrap()
                        .times(signature(&h, p.positive, b).unwrap());
                    assert_eq!(prod, parts);
                }
            }
        }
    }
    let s = sign_hyperfield();
    let phi = sign_hom(&s, HSet::singleton(SIGN_POS)).unwrap();
    assert_eq!(phi.map, vec![0, 1, 2]);
    assert_eq!(signature(&s, HSet::singleton(SIGN_POS), SIGN_NEG).unwrap(), Sign::Neg);
    assert!(signature(&s, HSet::singleton(SIGN_POS), 0).is_err());
    assert!(sign_hom(&krasner_hyperfield(), HSet::singleton(1)).is_err());
}

#[test]
fn preorderings_extend_and_intersect() {
    let s = sign_hyperfield();
    let t = HSet::singleton(SIGN_POS);
    assert!(is_preordering(&s, t).is_clean());
    assert_eq!(
        maximal_preordering_extensions(&s, t, false).unwrap(),
        vec![OrderingSet { positive: t }]
    );
    let mut checked = 0;
    for h in corpus() {
        for t in enumerate_preorderings(&h).unwrap() {
            assert!(is_preordering(&h, t).is_clean());
            let all = maximal_preordering_extensions(&h, t, true).unwrap();
            let one = maximal_preordering_extensions(&h, t, false).unwrap();
            assert_eq!(one.len(), 1);
            assert!(all.contains(&one[0]));
            let orderings = enumerate_orderings(&h).unwrap();
            let containing: Vec<_> = orderings
                .into_iter()
                .filter(|p| t.is_subset(p.positive))
                .collect();
            assert_eq!(all, containing, "{}", h.name());
            assert!(intersection_recovers(&h, t).unwrap(), "{}", h.name());
            checked += 1;
        }
    }
    assert!(checked > 0);
    assert!(maximal_preordering_extensions(&krasner_hyperfield(), HSet::singleton(1), true).is_err());
}

#[test]
fn in_sequences_of_builtins() {
    let s = sign_hyperfield();
    for n in 1..8 {
        assert_eq!(compute_in(&s, n).unwrap(), HSet::singleton(SIGN_POS));
    }
    let k = krasner_hyperfield();
    assert_eq!(compute_in(&k, 1).unwrap(), HSet::singleton(1));
    for n in 2..8 {
        assert_eq!(compute_in(&k, n).unwrap(), HSet::from([0, 1]));
    }
    for h in corpus() {
        let seq = in_sequence(&h).unwrap();
        for n in 1..20 {
            assert_eq!(seq.get(n), compute_in(&h, n).unwrap(), "{} n={n}", h.name());
        }
        assert!(in_law_failures(&h, 6).unwrap().is_empty(), "{}", h.name());
    }
}

#[test]
fn hulls_on_the_corpus() {
    let s = sign_hyperfield();
    let p = HSet::singleton(SIGN_POS);
    assert_eq!(a_of_p(&s, p).unwrap(), s.carrier());
    assert_eq!(i_of_p(&s, p).unwrap(), HSet::singleton(0));
    assert!(is_archimedean(&s, p).unwrap());
    for h in corpus() {
        for p in enumerate_orderings(&h).unwrap() {
            let a = a_of_p(&h, p.positive).unwrap();
            let one = h.one().unwrap();
            assert!(a.contains(one));
            for x in h.elems() {
                assert_eq!(a.contains(x), a.contains(h.neg(x)));
            }
            let i = i_of_p(&h, p.positive).unwrap();
            assert!(i.is_subset(a));
        }
    }
}

#[test]
fn rational_squares_in_chain() {
    let r = squares_in_report(100).unwrap();
    assert!(r.holds(), "{r:?}");
    assert!(r.product_counterexamples.is_empty());
    assert!(!r.seven_in_i2 && !r.seven_in_i3);
    let w = r.seven_in_i4.unwrap();
    assert_eq!(w.iter().map(|x| x * x).sum::<Rational>(), Rational::from_integer(7));
    let arch = q_squares_archimedean(100).unwrap();
    assert!(arch.archimedean());
}

#[test]
fn theorem_cr_instances() {
    for t in [QSubgroup::Positives, QSubgroup::PositivePUnits(2), QSubgroup::Squares] {
        let c = theorem_cr_check(&CrInstance::Q(t), 100, 6).unwrap();
        assert_eq!((c.lhs, c.rhs), (1, 1), "{t:?}");
    }
    for p in [5, 7, 13] {
        let c = theorem_cr_check(
            &CrInstance::Fp {
                p,
                subgroup: SubgroupSpec::squares(p),
            },
            100,
            6,
        )
        .unwrap();
        assert_eq!((c.lhs, c.rhs), (0, 0));
    }
}

proptest! {
    #[test]
    fn in_witnesses_verify(s in 1i64..500, n in 2usize..6) {
        let s = hfw_core::constructions::arith::squarefree_part(s);
        let member = q_squares_in_contains(n, s).unwrap();
        match q_squares_in_witness(n, s, 30) {
            Some(w) => {
                prop_assert!(member);
                prop_assert!(verify_in_witness(s, &w));
            }
            None => prop_assert!(!member || n <= 3),
        }
    }

    #[test]
    fn square_classes_are_multiplicative(a in -300i64..300, b in -300i64..300) {
        prop_assume!(a != 0 && b != 0);
        let t = QSubgroup::Squares;
        let (ca, cb) = (q_factor_class(Rational::from_integer(a), t), q_factor_class(Rational::from_integer(b), t));
        let (QClass::Squarefree(x), QClass::Squarefree(y)) = (ca, cb) else { panic!() };
        let prod = q_factor_class(Rational::from_integer(a * b), t);
        prop_assert_eq!(prod, q_factor_class(Rational::from_integer(x * y), t));
    }
}
