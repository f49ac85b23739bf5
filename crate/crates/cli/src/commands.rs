use std::fmt::Write as _;

use hfw_core::compat::{
    compatibility_report, finite_baer_krull_forward, finite_baer_krull_inverse,
    incomparability_witnesses, lift_ordering, st_baer_krull, st_compatibility_report,
    st_convexity_check, CompatReport,
};
use hfw_core::constructions::{
    enumerate_up_to, fp_mod_squares, krasner_hyperfield, prime_field, q_factor_class,
    q_factor_sum, sign_hyperfield, verify_witnesses, ClosedForm, QClass, QSubgroup, Rational,
};
use hfw_core::hypercore::{
    check_canonical_hypergroup, check_double_distributivity, check_hyperfield, check_hyperring,
    find_isomorphism, FiniteHyperstructure,
};
use hfw_core::realalg::{
    a_of_p, enumerate_orderings, enumerate_orderings_powerset, i_of_p, is_archimedean, is_real,
    POWERSET_ORACLE_BOUND,
};
use hfw_core::realalg::qsquares::{q_squares_archimedean, squares_in_report};
use hfw_core::sgntrop::{
    st_a_of_p, st_axiom_check, st_i_of_p, st_orderings, st_residue, Hull, Sign,
    SignedValueHyperfield,
};
use hfw_core::valtheory::{
    enumerate_valuation_hyperrings, enumerate_valuation_hyperrings_powerset,
    inclusion_reversal_holds, induced_valuation_on_factor, maximal_ideal_check,
    residue_hyperfield, ring_from_valuation, st_valuation_round_trip, valuation_from_hyperring,
    Valuation, ValueGroup, VALUATION_POWERSET_BOUND,
};
use hfw_core::HSet;
use serde_json::{json, Value};

use crate::report::{Parameters, Status};
use crate::spec::Structure;

/// Findings of one command before they are wrapped into a report.
pub struct Outcome {
    pub status: Status,
    pub findings: Value,
    pub witnesses: Vec<String>,
    pub text: String,
}

impl Outcome {
    fn new(findings: Value, text: String) -> Self {
        Outcome {
            status: Status::Ok,
            findings,
            witnesses: Vec::new(),
            text,
        }
    }

    fn fail(mut self, status: Status, why: impl Into<String>) -> Self {
        if self.status == Status::Ok || status == Status::EquivalenceBroken {
            self.status = status;
        }
        self.witnesses.push(why.into());
        self
    }
}

/// A command that could not run: `2` for unusable input, `1` for a failed
/// precondition inside the library.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<hfw_core::Error> for Failure {
    fn from(e: hfw_core::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn unsupported(what: &str, s: &Structure) -> Failure {
    Failure {
        code: 2,
        message: format!("{what} is not available for {}", s.name()),
    }
}

type CmdResult = Result<Outcome, Failure>;

fn labels(h: &FiniteHyperstructure, s: HSet) -> Vec<String> {
    s.iter().map(|x| h.label(x).to_string()).collect()
}

/// Symbolic model of `Q_T` for the subgroups with one.
fn rational_model(t: QSubgroup) -> Option<Structure> {
    match t {
        QSubgroup::Positives => Some(Structure::Finite(sign_hyperfield())),
        QSubgroup::PositivePUnits(p) => SignedValueHyperfield::padic(p).ok().map(Structure::Symbolic),
        QSubgroup::Squares => None,
    }
}

fn effective_window(f: &SignedValueHyperfield, b: i64) -> i64 {
    // Triple sweeps grow like (2b+1)^(3k); beyond rank one stay at b ≤ 4.
    if f.rank() > 1 {
        b.min(4)
    } else {
        b
    }
}

pub fn check(s: &Structure, p: &Parameters) -> CmdResult {
    match s {
        Structure::Finite(h) => {
            let group = check_canonical_hypergroup(h);
            let full = if h.one().is_some() { check_hyperfield(h) } else { check_hyperring(h) };
            let dd = check_double_distributivity(h);
            let kind = if h.one().is_some() { "hyperfield" } else { "hyperring" };
            let findings = json!({
                "kind": kind,
                "size": h.size(),
                "canonical_hypergroup": group.is_clean(),
                "clean": full.is_clean(),
                "violations": full.total(),
                "double_distributivity": {
                    "inclusion_ok": dd.inclusion_ok,
                    "inclusion_failures": dd.inclusion_failures.len(),
                    "proper_inclusions": dd.equality_witnesses.len(),
                },
            });
            let mut text = format!(
                "{}: {} axioms {}; (a+b)(c+d) ⊆ ac+ad+bc+bd {} ({} proper)\n",
                h.name(),
                kind,
                if full.is_clean() { "hold" } else { "FAIL" },
                if dd.inclusion_ok { "holds" } else { "FAILS" },
                dd.equality_witnesses.len()
            );
            text.push_str(&h.render_add_table());
            let mut out = Outcome::new(findings, text);
            for q in dd.equality_witnesses.iter().take(3) {
                let l: Vec<&str> = q.iter().map(|&x| h.label(x)).collect();
                out.witnesses.push(format!("proper inclusion at (a,b,c,d) = ({})", l.join(",")));
            }
            if !full.is_clean() {
                out = out.fail(Status::CheckFailed, full.to_string());
            }
            if !dd.inclusion_ok {
                out = out.fail(Status::CheckFailed, "double distributivity inclusion fails");
            }
            Ok(out)
        }
        Structure::Symbolic(f) => {
            let b = effective_window(f, p.window);
            let r = st_axiom_check(f, b)?;
            let findings = json!({"window": b, "clean": r.is_clean(), "violations": r.total()});
            let text = format!("{}: axioms on window [-{b},{b}]^{} {}\n", f.name(), f.rank(), if r.is_clean() { "hold" } else { "FAIL" });
            let out = Outcome::new(findings, text);
            Ok(if r.is_clean() { out } else { out.fail(Status::CheckFailed, r.to_string()) })
        }
        Structure::Rational(t) => {
            let classes = sample_classes(*t);
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut bad = Vec::new();
            for (i, x) in classes.iter().enumerate() {
                for y in &classes[i..] {
                    let sum = q_factor_sum(x, y, *t, p.height)?;
                    let ok = verify_witnesses(x, y, *t, &sum) && sum.consistent();
                    if !ok {
                        bad.push(format!("{x} + {y}"));
                    }
                    let form = closed_form_text(&sum.closed_form);
                    let _ = writeln!(text, "{x} + {y} = {form}{}", if sum.complete { "" } else { " (bounded)" });
                    rows.push(json!({"x": x.to_string(), "y": y.to_string(), "sum": form, "complete": sum.complete, "verified": ok}));
                }
            }
            let out = Outcome::new(json!({"sums": rows}), text);
            Ok(if bad.is_empty() { out } else { out.fail(Status::CheckFailed, bad.join("; ")) })
        }
    }
}

fn sample_classes(t: QSubgroup) -> Vec<QClass> {
    let reps: &[i64] = match t {
        QSubgroup::Positives => &[1, -1],
        QSubgroup::PositivePUnits(_) => &[1, -1],
        QSubgroup::Squares => &[1, -1, 2, -2, 3, 7],
    };
    let mut out: Vec<QClass> = reps.iter().map(|&r| q_factor_class(Rational::from(r), t)).collect();
    if let QSubgroup::PositivePUnits(p) = t {
        let p = p as i64;
        out.push(q_factor_class(Rational::from(p), t));
        out.push(q_factor_class(Rational::new(1, p), t));
    }
    out
}

fn closed_form_text(c: &Option<ClosedForm>) -> String {
    match c {
        None => "unresolved".into(),
        Some(ClosedForm::Finite(s)) => {
            let items: Vec<String> = s.iter().map(ToString::to_string).collect();
            format!("{{{}}}", items.join(", "))
        }
        Some(ClosedForm::SignedValue(s)) => s.to_string(),
        Some(ClosedForm::ScaledTwoSquares(d)) => format!("[{d}]·{{sums of two squares}}"),
    }
}

pub fn factor(s: &Structure, p: &Parameters) -> CmdResult {
    match s {
        Structure::Finite(h) => {
            let report = check_hyperfield(h);
            let findings = json!({"table": h.to_table(), "hyperfield": report.is_clean()});
            let out = Outcome::new(findings, h.render_add_table());
            Ok(if report.is_clean() { out } else { out.fail(Status::CheckFailed, report.to_string()) })
        }
        Structure::Rational(_) => check(s, p),
        Structure::Symbolic(_) => Err(unsupported("factor", s)),
    }
}

pub fn orderings(s: &Structure, p: &Parameters) -> CmdResult {
    match s {
        Structure::Finite(h) => {
            let ords = enumerate_orderings(h)?;
            let realness = is_real(h)?;
            let mut rows = Vec::new();
            let mut text = format!("{}: {} ordering(s), real = {}\n", h.name(), ords.len(), realness.real);
            for o in &ords {
                let arch = is_archimedean(h, o.positive)?;
                let a = a_of_p(h, o.positive)?;
                let i = i_of_p(h, o.positive)?;
                let _ = writeln!(text, "  P = {}  archimedean = {arch}  A(P) = {}  I(P) = {}", h.fmt_set(o.positive), h.fmt_set(a), h.fmt_set(i));
                rows.push(json!({"positive": labels(h, o.positive), "archimedean": arch, "a_of_p": labels(h, a), "i_of_p": labels(h, i)}));
            }
            let findings = json!({
                "count": ords.len(),
                "real": realness.real,
                "sums_of_squares": labels(h, realness.sums_of_squares),
                "orderings": rows,
            });
            let mut out = Outcome::new(findings, text);
            if realness.real == ords.is_empty() {
                out = out.fail(Status::EquivalenceBroken, "is_real disagrees with enumeration");
            }
            if h.size() <= POWERSET_ORACLE_BOUND && enumerate_orderings_powerset(h)? != ords {
                out = out.fail(Status::EquivalenceBroken, "pruned and powerset enumerations differ");
            }
            Ok(out)
        }
        Structure::Symbolic(f) => {
            let chars = st_orderings(f, p.window);
            let mut rows = Vec::new();
            let mut text = format!("{}: {} ordering(s)\n", f.name(), chars.len());
            for h in &chars {
                let a = st_a_of_p(f, h)?;
                let i = st_i_of_p(f, h)?;
                let arch = a == Hull::Whole;
                let _ = writeln!(text, "  P_{h}  archimedean = {arch}");
                rows.push(json!({"character": h, "archimedean": arch, "a_of_p": a, "i_of_p": i}));
            }
            Ok(Outcome::new(json!({"count": chars.len(), "real": !chars.is_empty(), "window": p.window, "orderings": rows}), text))
        }
        Structure::Rational(QSubgroup::Squares) => {
            let chain = squares_in_report(p.height)?;
            let arch = q_squares_archimedean(p.height)?;
            let count = usize::from(arch.i4_is_positive_cone);
            let findings = json!({
                "count": count,
                "real": count > 0,
                "archimedean": arch.archimedean(),
                "i2_times_i2_is_i2": chain.holds(),
                "seven_in_i4_not_i2": chain.seven_in_i4.is_some() && !chain.seven_in_i2,
                "seven_in_i4_witness": chain.seven_in_i4,
                "product_counterexamples": chain.product_counterexamples.len(),
            });
            let text = format!("Q/squares: {count} ordering(s), archimedean = {}, I_2·I_2 = I_2 ⊊ I_4: {}\n", arch.archimedean(), chain.holds());
            let out = Outcome::new(findings, text);
            Ok(if chain.holds() { out } else { out.fail(Status::CheckFailed, "I_n chain certificate failed") })
        }
        Structure::Rational(t) => orderings(&rational_model(*t).expect("model"), p),
    }
}

fn value_group_size(v: &Valuation) -> Option<usize> {
    match &v.group {
        ValueGroup::Quotient(q) => Some(q.reps.len()),
        ValueGroup::Lex(_) => None,
    }
}

pub fn valuations(s: &Structure, p: &Parameters) -> CmdResult {
    match s {
        Structure::Finite(h) => {
            let rings = enumerate_valuation_hyperrings(h)?;
            let mut out_rows = Vec::new();
            let mut text = format!("{}: {} valuation hyperring(s)\n", h.name(), rings.len());
            let mut broken = Vec::new();
            for &o in &rings {
                let check = maximal_ideal_check(h, o)?;
                let v = valuation_from_hyperring(h, o)?;
                let (o2, m2) = ring_from_valuation(h, &v)?;
                let residue = residue_hyperfield(h, o)?;
                let round_trip = o2 == o && m2 == check.maximal;
                if !round_trip || !check.holds() {
                    broken.push(format!("round trip fails for O = {}", h.fmt_set(o)));
                }
                let _ = writeln!(text, "  O = {}  M = {}  |Γ| = {}  residue order {}", h.fmt_set(o), h.fmt_set(check.maximal), value_group_size(&v).unwrap_or(0), residue.structure.size());
                out_rows.push(json!({
                    "ring": labels(h, o),
                    "maximal_ideal": labels(h, check.maximal),
                    "value_group_order": value_group_size(&v),
                    "residue": residue.structure.to_table(),
                    "round_trip": round_trip,
                }));
            }
            let reversal = inclusion_reversal_holds(h, &rings)?;
            let findings = json!({"count": rings.len(), "valuation_rings": out_rows, "inclusion_reversal": reversal});
            let mut out = Outcome::new(findings, text);
            if h.size() <= VALUATION_POWERSET_BOUND && enumerate_valuation_hyperrings_powerset(h)? != rings {
                out = out.fail(Status::EquivalenceBroken, "pruned and powerset enumerations differ");
            }
            if !reversal {
                broken.push("inclusion reversal fails".into());
            }
            for b in broken {
                out = out.fail(Status::EquivalenceBroken, b);
            }
            Ok(out)
        }
        Structure::Symbolic(f) => {
            let c = st_valuation_round_trip(f, p.window)?;
            let residue = st_residue(f)?;
            let real = !enumerate_orderings(&residue.structure)?.is_empty();
            let text = format!(
                "{}: O = {}  M = {}  round trip {}  residue order {} ({})\n",
                f.name(),
                c.ring,
                c.maximal,
                if c.holds() { "holds" } else { "FAILS" },
                residue.structure.size(),
                if real { "real" } else { "not real" }
            );
            let findings = json!({"round_trip": c, "residue": residue.structure.to_table(), "residue_real": real});
            let out = Outcome::new(findings, text);
            Ok(if c.holds() { out } else { out.fail(Status::EquivalenceBroken, "valuation round trip fails") })
        }
        Structure::Rational(QSubgroup::PositivePUnits(q)) => {
            let t = QSubgroup::PositivePUnits(*q);
            let v = induced_valuation_on_factor(t, *q, p.height.min(60), p.window)?;
            let model = valuations(&rational_model(t).expect("model"), p)?;
            let ok = v.agrees_with_v_p && v.report.is_clean();
            let text = format!("v_{q} induces a valuation on {}: {ok} ({} samples)\n{}", t.name(), v.samples, model.text);
            let out = Outcome {
                findings: json!({"induced": v, "model": model.findings}),
                text,
                ..model
            };
            Ok(if ok { out } else { out.fail(Status::CheckFailed, "induced valuation disagrees with v_p") })
        }
        Structure::Rational(QSubgroup::Positives) => valuations(&rational_model(QSubgroup::Positives).expect("model"), p),
        Structure::Rational(_) => Err(unsupported("valuations", s)),
    }
}

fn compat_row(report: &CompatReport) -> Value {
    serde_json::to_value(report).expect("serializes")
}

pub fn compat(s: &Structure, p: &Parameters) -> CmdResult {
    match s {
        Structure::Finite(h) => {
            let ords = enumerate_orderings(h)?;
            let rings = enumerate_valuation_hyperrings(h)?;
            let mut rows = Vec::new();
            let mut text = format!("{}: {} ordering(s) × {} valuation(s)\n", h.name(), ords.len(), rings.len());
            let mut disagreements = Vec::new();
            for o in &ords {
                for &ring in &rings {
                    let v = valuation_from_hyperring(h, ring)?;
                    let r = compatibility_report(h, &v, o.positive)?;
                    if !r.agree() {
                        disagreements.push(format!("P = {}, O = {}", h.fmt_set(o.positive), h.fmt_set(ring)));
                    }
                    let _ = writeln!(text, "  P = {}  O = {}  (i,ii,iii,iv) = {:?}", h.fmt_set(o.positive), h.fmt_set(ring), r.conditions());
                    rows.push(json!({"ordering": labels(h, o.positive), "ring": labels(h, ring), "report": compat_row(&r)}));
                }
            }
            let mut out = Outcome::new(json!({"matrix": rows}), text);
            for d in disagreements {
                out = out.fail(Status::EquivalenceBroken, format!("conditions disagree at {d}"));
            }
            Ok(out)
        }
        Structure::Symbolic(f) => {
            let b = p.window;
            let mut rows = Vec::new();
            let mut text = format!("{}: orderings × canonical valuation\n", f.name());
            let mut out_status = Vec::new();
            for h in st_orderings(f, b) {
                let r = match st_compatibility_report(f, &h, b) {
                    Ok(r) => r,
                    Err(hfw_core::Error::Precondition(m)) => {
                        out_status.push(m);
                        continue;
                    }
                    Err(e) => return Err(e.into()),
                };
                let conv = st_convexity_check(f, &h, b.min(4))?;
                if !r.agree() {
                    out_status.push(format!("conditions disagree at P_{h}"));
                }
                let _ = writeln!(text, "  P_{h}  (i,ii,iii,iv) = {:?}  O convex: {}", r.conditions(), conv.convex);
                rows.push(json!({"character": h, "report": compat_row(&r), "convex": conv.convex, "convexity_violations": conv.violations}));
            }
            let mut out = Outcome::new(json!({"window": b, "matrix": rows}), text);
            for m in out_status {
                out = out.fail(Status::EquivalenceBroken, m);
            }
            Ok(out)
        }
        Structure::Rational(QSubgroup::PositivePUnits(2)) => {
            let mut out = compat(&rational_model(QSubgroup::PositivePUnits(2)).expect("model"), p)?;
            let pairs = incomparability_witnesses(5, p.height.min(50) as i64)?;
            let verified = pairs.iter().all(|x| x.verify());
            for x in &pairs {
                let _ = writeln!(out.text, "  incomparable: {} vs {}  ({}·{} - {}·{} = {}; {}·{} - {}·{} = {})",
                    x.x, x.y,
                    x.x.representative(QSubgroup::PositivePUnits(2)), x.forward.0, x.y.representative(QSubgroup::PositivePUnits(2)), x.forward.1, x.forward.2,
                    x.y.representative(QSubgroup::PositivePUnits(2)), x.backward.0, x.x.representative(QSubgroup::PositivePUnits(2)), x.backward.1, x.backward.2);
            }
            if let Value::Object(m) = &mut out.findings {
                m.insert("incomparable_pairs".into(), serde_json::to_value(&pairs).expect("serializes"));
                m.insert("incomparable_pairs_verified".into(), json!(verified));
            }
            Ok(if verified { out } else { out.fail(Status::CheckFailed, "incomparability witness failed") })
        }
        Structure::Rational(QSubgroup::Squares) => Err(unsupported("compat", s)),
        Structure::Rational(t) => compat(&rational_model(*t).expect("model"), p),
    }
}

pub fn baer_krull(s: &Structure, p: &Parameters) -> CmdResult {
    match s {
        Structure::Symbolic(f) => {
            let b = effective_window(f, p.window);
            let t = st_baer_krull(f, b)?;
            let mut text = format!(
                "{}: |X(F̄)| = {}  |Hom(Γ,±1)| = {}  compatible orderings = {}  bijective = {}\n",
                f.name(), t.residue_orderings, t.characters, t.compatible_orderings, t.bijective
            );
            for r in &t.rows {
                let _ = writeln!(text, "  𝔭 = {{{}}}  χ = {}  ↦  P_{}", r.residue_ordering.join(","), r.character, r.ordering);
            }
            let ok = t.bijective;
            let out = Outcome::new(serde_json::to_value(&t).expect("serializes"), text);
            Ok(if ok { out } else { out.fail(Status::EquivalenceBroken, "Baer–Krull map is not a bijection") })
        }
        Structure::Finite(h) => {
            let v = Valuation::trivial(h);
            let (o, _) = ring_from_valuation(h, &v)?;
            let w = valuation_from_hyperring(h, o)?;
            let residue = residue_hyperfield(h, o)?;
            let mut base = Vec::new();
            for q in enumerate_orderings(&residue.structure)? {
                let lift = lift_ordering(h, &v, q.positive, false)?;
                base.push((q.positive, lift[0]));
            }
            let ords = enumerate_orderings(h)?;
            let mut rows = Vec::new();
            let mut text = format!("{}: trivial valuation, Γ = 0\n", h.name());
            let mut broken = false;
            for o in &ords {
                let (pbar, chi) = finite_baer_krull_forward(h, &w, o.positive, &base)?;
                let back = finite_baer_krull_inverse(h, &w, pbar, &chi, &base)?;
                broken |= back != o.positive;
                let signs: Vec<String> = chi.iter().map(|s: &Sign| s.to_string()).collect();
                let _ = writeln!(text, "  P = {}  ↦  (𝔭 = {}, χ = [{}])", h.fmt_set(o.positive), residue.structure.fmt_set(pbar), signs.join(","));
                rows.push(json!({"ordering": labels(h, o.positive), "residue_ordering": labels(&residue.structure, pbar), "character": signs, "inverse_recovers": back == o.positive}));
            }
            let base_json: Vec<Value> = base
                .iter()
                .map(|(q, l)| json!({"residue_ordering": labels(&residue.structure, *q), "base": labels(h, *l)}))
                .collect();
            let out = Outcome::new(json!({"base": base_json, "rows": rows, "bijective": !broken && rows.len() == base.len()}), text);
            Ok(if broken { out.fail(Status::EquivalenceBroken, "inverse does not recover the ordering") } else { out })
        }
        Structure::Rational(QSubgroup::Squares) => Err(unsupported("baer-krull", s)),
        Structure::Rational(t) => baer_krull(&rational_model(*t).expect("model"), p),
    }
}

fn known_name(h: &FiniteHyperstructure) -> Option<String> {
    let mut known = vec![
        ("F_2".to_string(), prime_field(2).ok()?),
        ("F_3".to_string(), prime_field(3).ok()?),
        ("Krasner".to_string(), krasner_hyperfield()),
        ("sign".to_string(), sign_hyperfield()),
    ];
    for p in [5, 7] {
        known.push((format!("F_{p}/squares"), fp_mod_squares(p).ok()?.structure));
    }
    known
        .into_iter()
        .find(|(_, k)| k.size() == h.size() && find_isomorphism(h, k).is_some())
        .map(|(n, _)| n)
}

pub fn enumerate(n: usize) -> CmdResult {
    let all = enumerate_up_to(n)?;
    let mut rows = Vec::new();
    let mut text = format!("{} hyperfield(s) of order ≤ {n} up to isomorphism\n", all.len());
    let mut bad = Vec::new();
    for h in &all {
        let ords = enumerate_orderings(h)?;
        let dd = check_double_distributivity(h);
        let clean = check_hyperfield(h).is_clean();
        if !clean || !dd.inclusion_ok {
            bad.push(h.name().to_string());
        }
        let name = known_name(h);
        let _ = writeln!(text, "  {:<6} order {}  orderings {}  proper dd {}  {}", h.name(), h.size(), ords.len(), dd.equality_witnesses.len(), name.as_deref().unwrap_or(""));
        rows.push(json!({
            "name": h.name(),
            "order": h.size(),
            "known_as": name,
            "orderings": ords.len(),
            "proper_dd_inclusions": dd.equality_witnesses.len(),
            "table": h.to_table(),
        }));
    }
    let counts: Vec<usize> = (1..=n).map(|k| all.iter().filter(|h| h.size() == k).count()).collect();
    let out = Outcome::new(json!({"count": all.len(), "count_by_order": counts, "hyperfields": rows}), text);
    Ok(if bad.is_empty() { out } else { out.fail(Status::CheckFailed, format!("oracle failures: {}", bad.join(", "))) })
}
