use hfw_core::constructions::{
    enumerate_up_to, fp_mod_squares, krasner_hyperfield, prime_field, sign_hyperfield, zero_ring,
    QSubgroup, SIGN_POS,
};
use hfw_core::hypercore::{find_isomorphism, Axiom, FiniteHyperstructure};
use hfw_core::sgntrop::{
    st_residue, st_valuation_report, Gamma, SignedValueHyperfield, StElem, SymbolicValuation,
};
use hfw_core::valtheory::*;
use hfw_core::HSet;

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
fn trivial_valuations_are_valuations() {
    for h in corpus() {
        let v = Valuation::trivial(&h);
        assert!(is_valuation(&h, &v).is_clean(), "{}", h.name());
        let (o, m) = ring_from_valuation(&h, &v).unwrap();
        assert_eq!(o, h.carrier());
        assert_eq!(m, HSet::singleton(h.zero()));
    }
}

#[test]
fn planted_value_breaks_v2() {
    let h = prime_field(5).unwrap();
    let mut v = Valuation::trivial(&h);
    v.values[2] = Some(Value::Lex(Gamma::scalar(1)));
    let r = is_valuation(&h, &v);
    assert!(r.has(Axiom::V2));
    assert!(ring_from_valuation(&h, &v).is_err());
}

#[test]
fn only_the_whole_field_is_a_valuation_hyperring() {
    for h in corpus() {
        let rings = enumerate_valuation_hyperrings(&h).unwrap();
        assert_eq!(rings, vec![h.carrier()], "{}", h.name());
        if h.size() <= VALUATION_POWERSET_BOUND {
            assert_eq!(rings, enumerate_valuation_hyperrings_powerset(&h).unwrap());
        }
        assert!(inclusion_reversal_holds(&h, &rings).unwrap());
    }
    assert!(enumerate_valuation_hyperrings(&zero_ring()).is_err());
}

#[test]
fn sign_half_is_not_a_valuation_hyperring() {
    let h = sign_hyperfield();
    let r = is_valuation_hyperring(&h, HSet::from([0, SIGN_POS]));
    assert!(!r.is_clean());
}

#[test]
fn round_trips_on_finite_builtins() {
    for h in corpus() {
        for o in enumerate_valuation_hyperrings(&h).unwrap() {
            let check = maximal_ideal_check(&h, o).unwrap();
            assert!(check.holds(), "{}", h.name());
            assert_eq!(check.maximal, HSet::singleton(h.zero()));
            let pi = valuation_from_hyperring(&h, o).unwrap();
            assert!(is_valuation(&h, &pi).is_clean());
            let (o_pi, m_pi) = ring_from_valuation(&h, &pi).unwrap();
            assert_eq!(o_pi, o);
            assert_eq!(m_pi, check.maximal);
            match &pi.group {
                ValueGroup::Quotient(q) => assert_eq!(q.reps.len(), 1),
                ValueGroup::Lex(_) => panic!("projection has a quotient group"),
            }
            let v = Valuation::trivial(&h);
            let (o_v, _) = ring_from_valuation(&h, &v).unwrap();
            assert!(equivalent(&h, &v, &valuation_from_hyperring(&h, o_v).unwrap()));
            let res = residue_hyperfield(&h, o).unwrap();
            assert!(find_isomorphism(&res.structure, &h).is_some(), "{}", h.name());
        }
    }
}

#[test]
fn signed_tropical_round_trip() {
    for (k, b) in [(1, 6), (2, 3)] {
        let f = SignedValueHyperfield::tropical(k).unwrap();
        let c = st_valuation_round_trip(&f, b).unwrap();
        assert!(c.holds(), "{c:?}");
    }
    let f = SignedValueHyperfield::padic(2).unwrap();
    let c = st_valuation_round_trip(&f, 6).unwrap();
    assert!(c.holds(), "{c:?}");
}

#[test]
fn patched_symbolic_valuation_breaks_v2() {
    fn patched(x: StElem) -> Option<Gamma> {
        match x {
            StElem::Zero => None,
            StElem::Nz(hfw_core::sgntrop::Sign::Neg, g) => Some(g + Gamma::scalar(1)),
            StElem::Nz(_, g) => Some(g),
        }
    }
    let f = SignedValueHyperfield::tropical(1).unwrap();
    assert!(st_valuation_report(&f, &SymbolicValuation::Canonical, 4).is_clean());
    let r = st_valuation_report(&f, &SymbolicValuation::Patched(patched), 4);
    assert!(r.has(Axiom::V2));
}

#[test]
fn residues_of_signed_value_hyperfields() {
    let trop = st_residue(&SignedValueHyperfield::tropical(1).unwrap()).unwrap();
    assert!(find_isomorphism(&trop.structure, &sign_hyperfield()).is_some());
    let dyadic = st_residue(&SignedValueHyperfield::padic(2).unwrap()).unwrap();
    assert_eq!(dyadic.structure.size(), 2);
    assert!(find_isomorphism(&dyadic.structure, &prime_field(2).unwrap()).is_some());
}

#[test]
fn valuation_induced_on_dyadic_factor() {
    let v = induced_valuation_on_factor(QSubgroup::PositivePUnits(2), 2, 30, 5).unwrap();
    assert!(v.agrees_with_v_p && v.report.is_clean());
    assert!(v.samples > 0);
    assert!(induced_valuation_on_factor(QSubgroup::Positives, 2, 30, 5).is_err());
    assert!(induced_valuation_on_factor(QSubgroup::Squares, 2, 30, 5).is_err());
    assert!(induced_valuation_on_factor(QSubgroup::PositivePUnits(3), 2, 30, 5).is_err());
}
