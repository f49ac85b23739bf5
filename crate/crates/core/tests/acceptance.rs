//! Acceptance criteria, one line each. Every check is exact: the bounded
//! searches run at pinned parameters (height 100, windows as noted) and no
//! numeric tolerance is involved.

use hfw_core::compat::*;
use hfw_core::constructions::*;
use hfw_core::hypercore::*;
use hfw_core::realalg::qsquares::{q_squares_archimedean, squares_in_report};
use hfw_core::realalg::*;
use hfw_core::sgntrop::*;
use hfw_core::valtheory::*;
use hfw_core::{Error, HSet};

const HEIGHT: u64 = 100;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn finite_builtins() -> Vec<FiniteHyperstructure> {
    let mut out = vec![sign_hyperfield(), krasner_hyperfield()];
    for p in [5, 7, 13] {
        out.push(fp_mod_squares(p).unwrap().structure);
    }
    for p in [2, 3, 5, 7] {
        out.push(prime_field(p).unwrap());
    }
    out
}

fn corpus() -> Vec<FiniteHyperstructure> {
    let mut out = finite_builtins();
    out.extend(enumerate_up_to(4).unwrap());
    out
}

fn tropical(k: usize) -> SignedValueHyperfield {
    SignedValueHyperfield::tropical(k).unwrap()
}

fn dyadic() -> SignedValueHyperfield {
    SignedValueHyperfield::padic(2).unwrap()
}

/// The one mutant that survives every checker: Krasner with `1 + 1 = {0}`,
/// which is `F_2`.
fn is_documented_survivor(h: &FiniteHyperstructure, cell: &(usize, usize, HSet)) -> bool {
    h.name() == krasner_hyperfield().name()
        && *cell == (1, 1, HSet::singleton(0))
        && find_isomorphism(&h.with_add_cell(1, 1, HSet::singleton(0)), &prime_field(2).unwrap()).is_some()
}

fn axiom_oracles() -> Outcome {
    let structures = [
        sign_hyperfield(),
        krasner_hyperfield(),
        fp_mod_squares(5).unwrap().structure,
        fp_mod_squares(7).unwrap().structure,
    ];
    let finite_clean = structures.iter().all(|h| check_hyperfield(h).is_clean());
    let symbolic_clean = [1, 2]
        .iter()
        .all(|&k| st_axiom_check(&tropical(k), 4).unwrap().is_clean());
    let (mut mutants, mut rejected, mut documented, mut other) = (0, 0, 0, 0);
    for h in &structures {
        let cov = add_table_mutation_coverage(h).unwrap();
        mutants += cov.mutants;
        rejected += cov.rejected;
        for cell in &cov.survivors {
            if is_documented_survivor(h, cell) {
                documented += 1;
            } else {
                other += 1;
            }
        }
    }
    (
        finite_clean && symbolic_clean && rejected == mutants,
        format!(
            "axioms clean: finite {finite_clean}, sgntrop k=1,2 B=4 {symbolic_clean}; mutants rejected {rejected}/{mutants}; \
             survivors: {documented} equivalent (Krasner 1+1={{0}} is F_2), {other} other"
        ),
    )
}

fn double_distributivity() -> Outcome {
    let mut quadruples = 0;
    let mut proper = 0;
    let mut first = None;
    let mut ok = true;
    for h in corpus() {
        let dd = check_double_distributivity(&h);
        ok &= dd.inclusion_ok;
        quadruples += h.size().pow(4);
        proper += dd.equality_witnesses.len();
        if first.is_none() {
            if let Some(q) = dd.equality_witnesses.first() {
                let l: Vec<&str> = q.iter().map(|&x| h.label(x)).collect();
                first = Some(format!("{} at ({})", h.name(), l.join(",")));
            }
        }
    }
    (
        ok && proper > 0,
        format!(
            "inclusion on {quadruples} quadruples; {proper} proper, first {}",
            first.unwrap_or_else(|| "none".into())
        ),
    )
}

fn sign_ordering_and_realness() -> Outcome {
    let sign = sign_hyperfield();
    let ords = enumerate_orderings(&sign).unwrap();
    let unique = ords.len() == 1 && ords[0].positive == HSet::singleton(SIGN_POS);
    let mut not_real = !is_real(&krasner_hyperfield()).unwrap().real;
    for p in [3, 5, 7, 13] {
        not_real &= !is_real(&fp_mod_squares(p).unwrap().structure).unwrap().real;
    }
    let agree = corpus().iter().all(|h| {
        is_real(h).unwrap().real == !enumerate_orderings(h).unwrap().is_empty()
    });
    (
        unique && not_real && agree,
        format!("sign orderings {ords:?}; Krasner, F_p/squares not real {not_real}; is_real = enumeration {agree}"),
    )
}

fn rational_squares_chain() -> Outcome {
    let r = squares_in_report(HEIGHT).unwrap();
    let seven = r.seven_in_i4.is_some() && !r.seven_in_i2;
    (
        r.holds() && seven,
        format!(
            "height {HEIGHT}: {} I_2 classes, {} product counterexamples, [7] ∈ I_4∖I_2 {seven} (witness {:?})",
            r.i2_classes.len(),
            r.product_counterexamples.len(),
            r.seven_in_i4
        ),
    )
}

fn theorem_cr() -> Outcome {
    let mut instances = vec![
        CrInstance::Q(QSubgroup::Positives),
        CrInstance::Q(QSubgroup::PositivePUnits(2)),
    ];
    for p in [5, 7, 13] {
        instances.push(CrInstance::Fp {
            p,
            subgroup: SubgroupSpec::squares(p),
        });
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for i in &instances {
        let c = theorem_cr_check(i, HEIGHT, 4).unwrap();
        let expected = matches!(i, CrInstance::Q(_)) as usize;
        ok &= c.holds && c.lhs == expected;
        parts.push(format!("{}={}", c.lhs, c.rhs));
    }
    (ok, format!("|X(K_T)| = |X(K|T)|: {}", parts.join(", ")))
}

fn signed_tropical_hulls() -> Outcome {
    let mut ok = true;
    for (k, b) in [(1, 4), (2, 2)] {
        let f = tropical(k);
        for h in st_orderings(&f, b) {
            let c = st_hull_check(&f, &h, b).unwrap();
            ok &= c.a_agrees
                && c.i_agrees
                && c.a_of_p == Hull::Within(st_valuation_ring(&f))
                && c.i_of_p == Hull::Within(st_maximal_ideal(&f));
        }
        ok &= st_residue_sign_isomorphism(&f).unwrap().is_some();
    }
    let demo = st_nonstrict_subhyperring_demo(&tropical(1)).unwrap();
    let s_ok = demo.is_subhyperring && demo.strictness_witness.is_some() && demo.isomorphism_strict;
    (
        ok && s_ok,
        format!("A(P) = O_v, I(P) = M_v, residue ≅ sign: {ok}; S subhyperring, not strict, ≅ sign: {s_ok}"),
    )
}

fn four_conditions_matrix() -> Outcome {
    let mut cells = 0;
    let mut ok = true;
    for (k, b) in [(1, 4), (2, 2)] {
        let f = tropical(k);
        for h in st_orderings(&f, b) {
            let r = st_compatibility_report(&f, &h, b).unwrap();
            ok &= r.agree() && r.compatible();
            cells += 1;
        }
    }
    let r = st_compatibility_report(&dyadic(), &Character::trivial(1), 4).unwrap();
    ok &= r.agree() && r.conditions() == [false; 4];
    cells += 1;
    for h in corpus() {
        let v = Valuation::trivial(&h);
        for p in enumerate_orderings(&h).unwrap() {
            let r = compatibility_report(&h, &v, p.positive).unwrap();
            ok &= r.agree() && r.compatible();
            cells += 1;
        }
    }
    (ok, format!("{cells} cells; sgntrop all-true, (sign,v2) all-false, trivial all-true"))
}

fn dyadic_convexity() -> Outcome {
    let f = dyadic();
    let p = Character::trivial(1);
    let conv = st_convexity_check(&f, &p, 4).unwrap();
    let r = st_compatibility_report(&f, &p, 4).unwrap();
    let witnesses = [&r.witness_i, &r.witness_ii, &r.witness_iii, &r.witness_iv]
        .iter()
        .all(|w| w.is_some());
    let pairs = incomparability_witnesses(5, 50).unwrap();
    let verified = pairs.iter().all(|x| x.verify());
    (
        conv.convex && r.conditions() == [false; 4] && witnesses && pairs.len() >= 5 && verified,
        format!(
            "convex with {} triples checked, 0 violations; conditions {:?} with witnesses {witnesses}; {} incomparable pairs verified {verified}",
            conv.triples_checked,
            r.conditions(),
            pairs.len()
        ),
    )
}

fn baer_krull() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, b, expected) in [(1, 4, 2), (2, 2, 4)] {
        let f = tropical(k);
        let t = st_baer_krull(&f, b).unwrap();
        let base: Vec<(HSet, Character)> = vec![(HSet::singleton(1), Character::trivial(k))];
        let mut round_trips = true;
        for h in st_orderings(&f, b) {
            let (pbar, chi) = st_baer_krull_forward(&f, &h, &base, b).unwrap();
            round_trips &= st_baer_krull_inverse(&f, pbar, &chi, &base, b).unwrap() == h;
        }
        for r in &t.rows {
            round_trips &= st_is_ordering(&f, &r.ordering, b).holds() && r.compatible && r.forward_recovers;
        }
        ok &= t.bijective && t.rows.len() == expected && t.compatible_orderings == expected && round_trips;
        parts.push(format!("Z^{k}: {}×{} = {}", t.residue_orderings, t.characters, t.rows.len()));
    }
    (ok, parts.join("; "))
}

fn lifting() -> Outcome {
    let mut ok = true;
    let mut lifted = 0;
    for h in corpus() {
        let v = Valuation::trivial(&h);
        let (o, _) = ring_from_valuation(&h, &v).unwrap();
        let residue = residue_hyperfield(&h, o).unwrap();
        for q in enumerate_orderings(&residue.structure).unwrap() {
            let lifts = lift_ordering(&h, &v, q.positive, true).unwrap();
            ok &= !lifts.is_empty();
            lifted += lifts.len();
        }
    }
    for (k, b) in [(1, 4), (2, 2)] {
        let f = tropical(k);
        let res = st_residue(&f).unwrap();
        for q in enumerate_orderings(&res.structure).unwrap() {
            let lifts = st_lift_ordering(&f, q.positive, true, b).unwrap();
            for h in &lifts {
                ok &= st_compatibility_report(&f, h, b).unwrap().compatible()
                    && st_induced_residue_set(&f, &res, h) == q.positive;
            }
            lifted += lifts.len();
        }
    }
    let f = tropical(1);
    let res = st_residue(&f).unwrap();
    let even = (-4..=4).all(|g| {
        let x = StElem::pos(Gamma::scalar(g));
        st_lift_contains(&f, &res, HSet::singleton(1), x) == (g % 2 == 0)
    });
    let pq = st_lift_ordering(&f, HSet::singleton(1), true, 4).unwrap() == Character::all(1);
    let dyadic_vacuous = matches!(
        st_lift_ordering(&dyadic(), HSet::singleton(1), true, 4),
        Err(Error::NonRealResidue)
    );
    (
        ok && even && pq && dyadic_vacuous,
        format!("{lifted} lifts compatible and inducing 𝔭; T = {{(+, even)}} {even} extends to {{P, Q}} {pq}; (sign,v2) residue not real {dyadic_vacuous}"),
    )
}

fn valuation_round_trips() -> Outcome {
    let mut ok = true;
    let mut rings = 0;
    for h in corpus() {
        let found = enumerate_valuation_hyperrings(&h).unwrap();
        for &o in &found {
            let v = valuation_from_hyperring(&h, o).unwrap();
            let (o2, _) = ring_from_valuation(&h, &v).unwrap();
            ok &= o2 == o && is_valuation_hyperring(&h, o).is_clean() && is_strict_subhyperring(&h, o);
            ok &= maximal_ideal_check(&h, o).unwrap().holds();
            let w = Valuation::trivial(&h);
            let (ow, _) = ring_from_valuation(&h, &w).unwrap();
            ok &= equivalent(&h, &w, &valuation_from_hyperring(&h, ow).unwrap());
            rings += 1;
        }
        ok &= inclusion_reversal_holds(&h, &found).unwrap();
    }
    for (f, b) in [(tropical(1), 6), (tropical(2), 3), (dyadic(), 6)] {
        ok &= st_valuation_round_trip(&f, b).unwrap().holds();
        rings += 1;
    }
    (ok, format!("{rings} valuation hyperrings: O → π → O, v → O_v → π ≅ v, strict, inclusion reversal"))
}

fn residue_archimedean() -> Outcome {
    let mut ok = true;
    let mut pairs = 0;
    for h in corpus() {
        for p in enumerate_orderings(&h).unwrap() {
            let r = residue_ordering_archimedean_check(&h, p.positive).unwrap();
            ok &= r.is_ordering && r.archimedean && r.i_of_p_is_maximal_ideal;
            pairs += 1;
        }
    }
    for (k, b) in [(1, 4), (2, 2)] {
        let f = tropical(k);
        let res = st_residue(&f).unwrap();
        for h in st_orderings(&f, b) {
            let pbar = st_induced_residue_set(&f, &res, &h);
            ok &= is_ordering(&res.structure, pbar).is_clean()
                && is_archimedean(&res.structure, pbar).unwrap();
            pairs += 1;
        }
    }
    // A(P_T) is all of (sign, v2), so the residue is the field itself.
    ok &= st_a_of_p(&dyadic(), &Character::trivial(1)).unwrap() == Hull::Whole;
    ok &= q_squares_archimedean(HEIGHT).unwrap().archimedean();
    pairs += 2;
    (ok, format!("{pairs} (F, P) pairs with archimedean A(P)/I(P)"))
}

fn enumeration_snapshot() -> Outcome {
    // Ground truth frozen from this enumerator and cross-checked against a
    // brute-force search over full tables for n ≤ 3 (see the constructions
    // tests); it is a derived value, not a published count.
    const SNAPSHOT: [usize; 4] = [0, 2, 5, 7];
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_hyperfields(n).unwrap().len()).collect();
    let deterministic = (1..=4).all(|n| enumerate_hyperfields(n).unwrap() == enumerate_hyperfields(n).unwrap());
    let oracles = enumerate_up_to(4).unwrap().iter().all(|h| {
        check_hyperfield(h).is_clean()
            && check_double_distributivity(h).inclusion_ok
            && is_real(h).unwrap().real == !enumerate_orderings(h).unwrap().is_empty()
    });
    (
        counts == SNAPSHOT && deterministic && oracles,
        format!("counts {counts:?} (snapshot {SNAPSHOT:?}), deterministic {deterministic}, oracles {oracles}"),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("axiom oracles and mutation coverage", axiom_oracles),
        ("double distributivity inclusion", double_distributivity),
        ("sign ordering, realness", sign_ordering_and_realness),
        ("Q/squares: I_2·I_2 = I_2 ⊊ I_4", rational_squares_chain),
        ("ordering counts of factor hyperfields", theorem_cr),
        ("sgntrop hulls, residue, non-strict S", signed_tropical_hulls),
        ("four compatibility conditions agree", four_conditions_matrix),
        ("(sign,v2): convex but incompatible", dyadic_convexity),
        ("Baer-Krull bijection", baer_krull),
        ("lifting residue orderings", lifting),
        ("valuation round trips", valuation_round_trips),
        ("residue ordering archimedean", residue_archimedean),
        ("enumeration snapshot", enumeration_snapshot),
    ];
    // Criterion 1 asks for every mutant to be rejected, but one mutant is a
    // genuine hyperfield; it is reported as failing and checked to be that
    // mutant alone.
    let expected_fail = [1usize];
    let mut unexpected = Vec::new();
    println!();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        let (pass, detail) = run();
        println!("{} {n:>2} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
        if pass == expected_fail.contains(&n) {
            unexpected.push(n);
        }
    }
    let survivors: Vec<_> = [krasner_hyperfield(), sign_hyperfield()]
        .iter()
        .flat_map(|h| {
            add_table_mutation_coverage(h)
                .unwrap()
                .survivors
                .into_iter()
                .map(move |c| is_documented_survivor(h, &c))
        })
        .collect();
    assert_eq!(survivors, vec![true], "criterion 1 fails for an undocumented reason");
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
