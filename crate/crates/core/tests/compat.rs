use hfw_core::compat::*;
use hfw_core::constructions::{enumerate_up_to, fp_mod_squares, prime_field, sign_hyperfield};
use hfw_core::hypercore::{find_isomorphism, FiniteHyperstructure};
use hfw_core::realalg::{a_of_p, enumerate_orderings};
use hfw_core::sgntrop::{st_orderings, st_residue, Character, Sign, SignedValueHyperfield};
use hfw_core::valtheory::{residue_hyperfield, ring_from_valuation, Valuation};
use hfw_core::HSet;

fn real_corpus() -> Vec<FiniteHyperstructure> {
    let mut out = vec![sign_hyperfield()];
    for p in [3, 5, 7] {
        out.push(fp_mod_squares(p).unwrap().structure);
        out.push(prime_field(p).unwrap());
    }
    out.extend(enumerate_up_to(4).unwrap());
    out
}

#[test]
fn finite_conditions_agree_with_trivial_valuation() {
    let mut pairs = 0;
    for h in real_corpus() {
        let v = Valuation::trivial(&h);
        for p in enumerate_orderings(&h).unwrap() {
            let r = compatibility_report(&h, &v, p.positive).unwrap();
            assert!(r.agree() && r.compatible(), "{}: {r:?}", h.name());
            let nat = natural_valuation(&h, p.positive).unwrap();
            let (o, _) = ring_from_valuation(&h, &nat).unwrap();
            assert_eq!(o, a_of_p(&h, p.positive).unwrap());
            let conv = convexity_check(&h, p.positive, o).unwrap();
            assert!(conv.convex);
            let ro = residue_ordering_archimedean_check(&h, p.positive).unwrap();
            assert!(ro.is_ordering && ro.archimedean && ro.i_of_p_is_maximal_ideal);
            pairs += 1;
        }
    }
    assert!(pairs > 0);
}

#[test]
fn finite_lift_and_baer_krull_are_identity_for_trivial_valuation() {
    for h in real_corpus() {
        let v = Valuation::trivial(&h);
        let (o, _) = ring_from_valuation(&h, &v).unwrap();
        let residue = residue_hyperfield(&h, o).unwrap();
        let orderings: Vec<HSet> = enumerate_orderings(&h).unwrap().into_iter().map(|p| p.positive).collect();
        let chars = finite_characters(&hfw_core::valtheory::valuation_from_hyperring(&h, o).unwrap()).unwrap();
        assert_eq!(chars.len(), 1);
        let mut base = Vec::new();
        for q in enumerate_orderings(&residue.structure).unwrap() {
            let lifts = lift_ordering(&h, &v, q.positive, true).unwrap();
            assert_eq!(lifts.len(), 1, "{}", h.name());
            base.push((q.positive, lifts[0]));
        }
        assert_eq!(base.len(), orderings.len());
        let w = hfw_core::valtheory::valuation_from_hyperring(&h, o).unwrap();
        for &p in &orderings {
            let (pbar, chi) = finite_baer_krull_forward(&h, &w, p, &base).unwrap();
            assert_eq!(finite_baer_krull_inverse(&h, &w, pbar, &chi, &base).unwrap(), p);
        }
    }
}

#[test]
fn signed_tropical_orderings_are_all_compatible() {
    for (k, b) in [(1, 4), (2, 2)] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        let orderings = st_orderings(&f, b);
        assert_eq!(orderings.len(), 1 << k);
        for h in &orderings {
            let r = st_compatibility_report(&f, h, b).unwrap();
            assert!(r.agree() && r.compatible(), "{r:?}");
            assert!(st_convexity_check(&f, h, b).unwrap().convex);
        }
    }
}

#[test]
fn dyadic_ordering_is_incompatible_in_every_condition() {
    let f = SignedValueHyperfield::padic(2).unwrap();
    let p = Character::trivial(1);
    let r = st_compatibility_report(&f, &p, 3).unwrap();
    assert_eq!(r.conditions(), [false; 4]);
    assert!(r.witness_iii.unwrap().contains("(-,0)"));
    assert!(matches!(st_lift_ordering(&f, HSet::singleton(1), true, 3), Err(hfw_core::Error::NonRealResidue)));
    assert!(st_convexity_check(&f, &p, 3).unwrap().convex);
}

#[test]
fn dyadic_incomparable_pairs() {
    let pairs = incomparability_witnesses(5, 8).unwrap();
    assert_eq!(pairs.len(), 5);
    assert!(pairs.iter().all(|p| p.verify()));
}

#[test]
fn lifting_the_residue_ordering_of_signed_tropical() {
    let f = SignedValueHyperfield::tropical(1).unwrap();
    let residue = st_residue(&f).unwrap();
    assert!(find_isomorphism(&residue.structure, &sign_hyperfield()).is_some());
    let q = enumerate_orderings(&residue.structure).unwrap();
    assert_eq!(q.len(), 1);
    let lifts = st_lift_ordering(&f, q[0].positive, true, 4).unwrap();
    assert_eq!(lifts, Character::all(1));
}

#[test]
fn baer_krull_tables() {
    for (k, b) in [(1, 4), (2, 2)] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        let t = st_baer_krull(&f, b).unwrap();
        assert!(t.bijective, "{t:?}");
        assert_eq!(t.rows.len(), 1 << k);
        assert_eq!(t.compatible_orderings, t.residue_orderings * t.characters);
    }
    let f = SignedValueHyperfield::tropical(1).unwrap();
    let base = vec![(HSet::singleton(1), Character::trivial(1))];
    let q = Character::new(vec![Sign::Neg]);
    assert_eq!(st_baer_krull_forward(&f, &q, &base, 4).unwrap(), (HSet::singleton(1), q.clone()));
    assert_eq!(st_baer_krull_inverse(&f, HSet::singleton(1), &q, &base, 4).unwrap(), q);
}
