//! One function per subcommand.  Each returns the text rendering, the JSON
//! report, and whether the verdict is positive (the exit status).

use anyhow::{bail, Context, Result};
use rsfan::characters::{character_table, enumerate_characters, label, specialization_poset};
use rsfan::charfan::{
    check_characterization, saturated_prime_ideals, totally_ordered_spec_implies_fan, two_chains_implies_fan,
    zero_set_surjectivity, ChainVerdict,
};
use rsfan::examples::{character_labels, labelled_poset, poset_text, Example, FigureKind, FIGURES};
use rsfan::fan::{fan_equivalence, make_fan as build_fan, units_rsg};
use rsfan::format::{read_structure_file, write_structure};
use rsfan::harness::{corpus, run, Criterion, TITLES};
use rsfan::order::{fan_lattice, hasse_dot, repr_poset, FanLattice};
use rsfan::pring::{
    dual_sample, dual_sums_of_squares, lex_preorder, lex_with_x, nonneg_constant, support, ts_char_subset_conditions,
    verify_total_preorder, DualNumber, Predicate, SampleCheck,
};
use rsfan::quotient::{ideal_quotient, quotient_fan, Congruence};
use rsfan::represent::{check_rs_axioms, find_rs3_counterexample, induce_d, Rs3Search};
use rsfan::{CharSet, Check, ElemSet, FiniteTs, Poset, RsModel};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
    /// The text is a document (DOT, structure file) printed as is, even
    /// under `--json`.
    pub raw: bool,
}

impl Output {
    fn report(text: String, json: Value, ok: bool) -> Output {
        Output { text, json, ok, raw: false }
    }

    fn document(text: String) -> Output {
        Output { text, json: Value::Null, ok: true, raw: true }
    }
}

struct Loaded {
    name: String,
    ts: FiniteTs,
    example: Option<Example>,
}

impl Loaded {
    fn characters(&self) -> CharSet {
        enumerate_characters(&self.ts)
    }

    fn labels(&self, x: &[rsfan::Character]) -> Vec<String> {
        match self.example {
            Some(ex) => character_labels(ex, &self.ts, x),
            None => (0..x.len()).map(label).collect(),
        }
    }
}

fn load(spec: &str) -> Result<Loaded> {
    if let Some(name) = spec.strip_prefix("example:") {
        let ex = Example::from_name(name)?;
        return Ok(Loaded { name: ex.name().to_string(), ts: ex.build(), example: Some(ex) });
    }
    let file = read_structure_file(Path::new(spec))?;
    Ok(Loaded { name: file.name, ts: file.ts, example: None })
}

fn tokens(list: &str) -> impl Iterator<Item = &str> {
    list.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty())
}

/// Indices into `labels` for `h2,h5` or `2,5` (1-based positions).
fn parse_chars(list: &str, labels: &[String]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for t in tokens(list) {
        let i = match labels.iter().position(|l| l == t) {
            Some(i) => i,
            None => match t.parse::<usize>() {
                Ok(k) if (1..=labels.len()).contains(&k) => k - 1,
                _ => bail!("unknown character `{t}` (characters are {})", labels.join(" ")),
            },
        };
        if !out.contains(&i) {
            out.push(i);
        }
    }
    if out.is_empty() {
        bail!("empty character subset");
    }
    out.sort_unstable();
    Ok(out)
}

/// The characters selected by `--chars` (all of them by default) with labels.
fn selected(l: &Loaded, chars: Option<&str>) -> Result<(CharSet, Vec<String>)> {
    let x = l.characters();
    let labels = l.labels(&x);
    let idx = match chars {
        Some(list) => parse_chars(list, &labels)?,
        None => (0..x.len()).collect(),
    };
    Ok((idx.iter().map(|&i| x[i].clone()).collect(), idx.iter().map(|&i| labels[i].clone()).collect()))
}

fn model(l: &Loaded, chars: Option<&str>) -> Result<(RsModel, Vec<String>)> {
    let (h, labels) = selected(l, chars)?;
    Ok((induce_d(&l.ts, &h)?, labels))
}

fn names(ts: &FiniteTs, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| ts.names()[i].clone()).collect()
}

fn tuple(items: &[String]) -> String {
    format!("({})", items.join(", "))
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn set(ts: &FiniteTs, s: &ElemSet) -> String {
    braces(&ts.set_names(s))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check_line(out: &mut String, ts: &FiniteTs, c: &Check) {
    match &c.witness {
        None => {
            let _ = writeln!(out, "[{}] pass", c.name);
        }
        Some(w) => {
            let _ = writeln!(out, "[{}] FAIL at {}", c.name, tuple(&names(ts, w)));
        }
    }
}

fn check_json(ts: &FiniteTs, c: &Check) -> Value {
    json!({ "name": c.name, "passed": c.passed(), "witness": c.witness.as_ref().map(|w| names(ts, w)) })
}

pub fn check_ts(spec: &str) -> Result<Output> {
    let l = load(spec)?;
    let ts = &l.ts;
    let axioms = ts.axiom_report();
    let lattice = ts.ideals();
    let z = ts.condition_z();
    let x = l.characters();
    let elems: Vec<String> = ts.names().to_vec();
    let idem: Vec<String> = ts.idempotents().into_iter().map(|e| ts.name(e).to_string()).collect();
    let units: Vec<String> = ts.units().into_iter().map(|e| ts.name(e).to_string()).collect();

    let mut t = String::new();
    let _ = writeln!(t, "structure {}", l.name);
    let _ = writeln!(t, "elements ({}): {}", elems.len(), elems.join(" "));
    for c in &axioms.checks {
        check_line(&mut t, ts, c);
    }
    let _ = writeln!(t, "idempotents: {}", idem.join(" "));
    let _ = writeln!(t, "units: {}", units.join(" "));
    let _ =
        writeln!(t, "ideals ({}, {}):", lattice.ideals.len(), if lattice.chain { "a chain" } else { "not a chain" });
    for (i, p) in lattice.ideals.iter().zip(&lattice.prime) {
        let _ = writeln!(t, "  {}{}", set(ts, i), if *p { "  prime" } else { "" });
    }
    match z {
        Ok(()) => t.push_str("condition [Z]: holds\n"),
        Err((a, b)) => {
            let _ = writeln!(t, "condition [Z]: fails at ({}, {})", ts.name(a), ts.name(b));
        }
    }
    let _ = writeln!(t, "characters: {}", x.len());

    let json = json!({
        "structure": l.name,
        "elements": elems,
        "axioms": axioms.checks.iter().map(|c| check_json(ts, c)).collect::<Vec<_>>(),
        "idempotents": idem,
        "units": units,
        "ideals": lattice.ideals.iter().zip(&lattice.prime)
            .map(|(i, p)| json!({ "members": ts.set_names(i), "prime": p })).collect::<Vec<_>>(),
        "ideals_form_chain": lattice.chain,
        "condition_z": z.is_ok(),
        "condition_z_witness": z.err().map(|(a, b)| vec![ts.name(a).to_string(), ts.name(b).to_string()]),
        "characters": x.len(),
    });
    Ok(Output::report(t, json, axioms.all_pass()))
}

fn dot_name(name: &str, example: Option<Example>, kind: FigureKind) -> String {
    let fig = example.and_then(|ex| FIGURES.iter().find(|f| f.example == ex && f.kind == kind));
    match (fig, kind) {
        (Some(f), _) => f.id.to_string(),
        (None, FigureKind::Specialization) => format!("{name}_spec"),
        (None, FigureKind::Representation) => format!("{name}_repr"),
    }
}

pub fn chars(spec: &str, dot: bool) -> Result<Output> {
    let l = load(spec)?;
    let x = l.characters();
    let labels = l.labels(&x);
    if dot {
        let p = specialization_poset(&x);
        return Ok(Output::document(hasse_dot(&p, &labels, &dot_name(&l.name, l.example, FigureKind::Specialization))));
    }
    let mut t = format!("structure {}: {} characters\n", l.name, x.len());
    t.push_str(&character_table(&l.ts, &x, &labels));
    let json = json!({
        "structure": l.name,
        "elements": l.ts.names(),
        "characters": x.iter().zip(&labels)
            .map(|(h, lab)| json!({ "label": lab, "values": h.as_ints() })).collect::<Vec<_>>(),
    });
    Ok(Output::report(t, json, true))
}

pub fn make_fan(spec: &str) -> Result<Output> {
    let l = load(spec)?;
    let ts = &l.ts;
    let f = build_fan(ts)?;
    let mut t = format!("structure {}: closed-form fan on {} elements\n", l.name, ts.len());
    let mut rows = Vec::new();
    for (sym, dt) in [("D", false), ("Dᵗ", true)] {
        for b in ts.elems() {
            for c in ts.elems() {
                let s = if dt { f.dt(b, c) } else { f.d(b, c) };
                let _ = writeln!(t, "{sym}({}, {}) = {}", ts.name(b), ts.name(c), set(ts, s));
            }
        }
    }
    for b in ts.elems() {
        for c in ts.elems() {
            rows.push(json!({
                "b": ts.name(b),
                "c": ts.name(c),
                "d": ts.set_names(f.d(b, c)),
                "dt": ts.set_names(f.dt(b, c)),
            }));
        }
    }
    Ok(Output::report(t, json!({ "structure": l.name, "elements": ts.names(), "relations": rows }), true))
}

pub fn is_fan(spec: &str, chars: Option<&str>) -> Result<Output> {
    let l = load(spec)?;
    let (h, labels) = selected(&l, chars)?;
    let r = fan_equivalence(&l.ts, &h)?;
    let mut t = format!("structure {}, characters {}\n", l.name, labels.join(" "));
    for (k, v) in [
        ("fan1 (all characters)", r.is_fan1),
        ("fan2", r.is_fan2),
        ("  RS axioms", r.rs_axioms),
        ("  3-closed", r.three_closed),
        ("  sign subsemigroups realized", r.subsemigroups_realized),
        ("q-fan", r.is_qfan),
        ("fan1 ⟺ fan2", r.agree),
    ] {
        let _ = writeln!(t, "{k}: {}", yes(v));
    }
    let json = json!({ "structure": l.name, "characters": labels, "report": r });
    Ok(Output::report(t, json, r.agree))
}

pub fn verify_rs(spec: &str, chars: Option<&str>) -> Result<Output> {
    let l = load(spec)?;
    let (m, labels) = model(&l, chars)?;
    let ts = m.ts();
    let r = check_rs_axioms(&m);
    let mut t = format!("structure {}, characters {}\n", l.name, labels.join(" "));
    for c in r.axioms.checks.iter().chain([&r.rs3_prime, &r.weak_rs3_prime]) {
        check_line(&mut t, ts, c);
    }
    let agreement = match r.rs3_agreement {
        Some(true) => "agree",
        Some(false) => "DISAGREE",
        None => "not comparable ([RS2] fails)",
    };
    let _ = writeln!(t, "[RS3] vs [RS3']: {agreement}");
    let _ = writeln!(t, "result: {}", if r.all_pass() { "all axioms pass" } else { "axioms fail" });
    let json = json!({
        "structure": l.name,
        "characters": labels,
        "axioms": r.axioms.checks.iter().map(|c| check_json(ts, c)).collect::<Vec<_>>(),
        "rs3_prime": check_json(ts, &r.rs3_prime),
        "weak_rs3_prime": check_json(ts, &r.weak_rs3_prime),
        "rs3_agreement": r.rs3_agreement,
        "all_pass": r.all_pass(),
    });
    Ok(Output::report(t, json, r.all_pass()))
}

fn lattice_json(ts: &FiniteTs, lat: &FanLattice) -> Value {
    json!({
        "bounded": lat.bounded,
        "closed_form_violation": lat.closed_form_violation.as_ref().map(|w| names(ts, w)),
        "de_morgan_violation": lat.de_morgan_violation.as_ref().map(|w| names(ts, w)),
        "kleene_violation": lat.kleene_violation.as_ref().map(|w| names(ts, w)),
        "modular": lat.modular,
        "distributive": lat.distributive,
        "pentagon": lat.pentagon.as_ref()
            .map(|p| names(ts, &[p.bottom, p.low, p.high, p.top, p.side])),
    })
}

fn lattice_text(t: &mut String, ts: &FiniteTs, lat: &FanLattice) {
    let _ = writeln!(t, "bounded by 1 and −1: {}", yes(lat.bounded));
    let _ = writeln!(t, "closed-form meets and joins: {}", yes(lat.closed_form_violation.is_none()));
    let _ = writeln!(t, "De Morgan laws: {}", yes(lat.de_morgan_violation.is_none()));
    let _ = writeln!(t, "Kleene law: {}", yes(lat.kleene_violation.is_none()));
    let _ = writeln!(t, "modular: {}", yes(lat.modular));
    let _ = writeln!(t, "distributive: {}", yes(lat.distributive));
    if let Some(p) = &lat.pentagon {
        let n = |i: usize| ts.names()[i].as_str();
        let _ = writeln!(t, "pentagon: {} < {} < {} < {}; {}", n(p.bottom), n(p.low), n(p.high), n(p.top), n(p.side));
    }
}

fn poset_json(p: &Poset, labels: &[String]) -> Value {
    json!({
        "nodes": labels,
        "edges": p.hasse_edges().into_iter().map(|(a, b)| [&labels[a], &labels[b]]).collect::<Vec<_>>(),
        "height": p.longest_chain(),
        "width": p.width(),
    })
}

pub fn order(spec: &str, chars: Option<&str>, dot: Option<&Path>, spec_order: bool) -> Result<Output> {
    let l = load(spec)?;
    let (kind, p, labels) = if spec_order {
        let (h, labels) = selected(&l, chars)?;
        (FigureKind::Specialization, specialization_poset(&h), labels)
    } else {
        let (m, _) = model(&l, chars)?;
        (FigureKind::Representation, repr_poset(&m)?, l.ts.names().to_vec())
    };
    let dot_text = hasse_dot(&p, &labels, &dot_name(&l.name, l.example, kind));
    if dot == Some(Path::new("-")) {
        return Ok(Output::document(dot_text));
    }
    let what = match kind {
        FigureKind::Specialization => "specialization order",
        FigureKind::Representation => "representation order",
    };
    let mut t = format!("structure {}: {what}\n", l.name);
    let _ = writeln!(t, "nodes: {}, longest chain: {}, width: {}", p.len(), p.longest_chain(), p.width());
    t.push_str(&poset_text(&p, &labels));
    let mut json = json!({ "structure": l.name, "order": what, "poset": poset_json(&p, &labels) });
    if kind == FigureKind::Representation && chars.is_none() && l.ts.satisfies_condition_z() {
        let lat = fan_lattice(&build_fan(&l.ts)?)?;
        lattice_text(&mut t, &l.ts, &lat);
        json["lattice"] = lattice_json(&l.ts, &lat);
    }
    if let Some(path) = dot {
        std::fs::write(path, &dot_text).with_context(|| format!("writing {}", path.display()))?;
        let _ = writeln!(t, "wrote {}", path.display());
    }
    Ok(Output::report(t, json, true))
}

fn classes_text(t: &mut String, ts: &FiniteTs, cong: &Congruence) {
    let _ = writeln!(t, "classes ({}):", cong.num_classes());
    for c in 0..cong.num_classes() {
        let members: Vec<String> = cong.class(c).into_iter().map(|e| ts.name(e).to_string()).collect();
        let _ = writeln!(t, "  {}", braces(&members));
    }
}

fn classes_json(ts: &FiniteTs, cong: &Congruence) -> Vec<Vec<String>> {
    (0..cong.num_classes()).map(|c| cong.class(c).into_iter().map(|e| ts.name(e).to_string()).collect()).collect()
}

pub fn quotient(spec: &str, ideal: Option<&str>, chars: Option<&str>) -> Result<Output> {
    let l = load(spec)?;
    let ts = &l.ts;
    if let Some(list) = ideal {
        let members: Vec<&str> = tokens(list).collect();
        let i = ts.set_by_names(&members)?;
        let (m, _) = model(&l, None)?;
        let (cong, qm, q) = ideal_quotient(&m, &i)?;
        let qts = qm.ts();
        let mut t = format!("structure {}: quotient by the ideal {}\n", l.name, set(ts, &i));
        classes_text(&mut t, ts, &cong);
        t.push_str(&write_structure(&format!("{}-mod-ideal", l.name), qts));
        let _ = writeln!(t, "characters with zero-set I: {}", q.fiber.len());
        let _ = writeln!(t, "units of the quotient: {}", q.units);
        let _ = writeln!(t, "a ~ b iff az = bz for some z outside I: {}", yes(q.witness_violation.is_none()));
        let _ = writeln!(t, "exponent 2: {}", yes(q.exponent_two_violation.is_none()));
        let _ = writeln!(t, "1 ≠ −1: {}", yes(q.one_ne_minus_one));
        let _ = writeln!(t, "[RSG-fan]: {}", yes(q.rsg_violation.is_none()));
        let _ = writeln!(t, "larger ideals collapse: {}", yes(q.collapse_violation.is_none()));
        let json = json!({
            "structure": l.name,
            "ideal": ts.set_names(&i),
            "classes": classes_json(ts, &cong),
            "quotient_elements": qts.names(),
            "report": q,
            "rsg_fan": q.is_rsg_fan(),
        });
        return Ok(Output::report(t, json, q.holds()));
    }
    let list = chars.context("give --ideal or --chars")?;
    let f = build_fan(ts)?;
    let (h, labels) = selected(&l, Some(list))?;
    let (cong, q) = quotient_fan(&f, &h)?;
    let qts = cong.quotient_ts(ts)?;
    let mut t = format!("structure {}: quotient by the characters {}\n", l.name, labels.join(" "));
    classes_text(&mut t, ts, &cong);
    t.push_str(&write_structure(&format!("{}-mod-chars", l.name), &qts));
    let _ = writeln!(t, "condition [Z]: {}", yes(q.condition_z));
    let _ = writeln!(t, "induced D is the closed form: {}", yes(q.d_difference.is_none()));
    let _ = writeln!(t, "RS axioms: {}", yes(q.rs_axioms));
    let _ = writeln!(t, "lifted characters are all characters: {}", yes(q.lifted_chars_match));
    let _ = writeln!(t, "fan: {}", yes(q.is_fan()));
    let json = json!({
        "structure": l.name,
        "characters": labels,
        "classes": classes_json(ts, &cong),
        "quotient_elements": qts.names(),
        "report": q,
        "fan": q.is_fan(),
    });
    Ok(Output::report(t, json, q.is_fan()))
}

fn verdict_text(t: &mut String, title: &str, v: &ChainVerdict, labels: &[String]) {
    let _ = write!(t, "{title}: hypothesis {}", if v.applicable { "holds" } else { "does not hold" });
    if v.applicable {
        let _ = write!(t, ", fan: {}, unique zero-set realization: {}", yes(v.is_fan), yes(v.unique_realization));
    }
    if let Some((a, b)) = &v.chains {
        let chain = |c: &Vec<usize>| c.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(" ⇝ ");
        let _ = write!(t, " [{}] and [{}]", chain(a), chain(b));
    }
    t.push('\n');
}

pub fn characterize(spec: &str, chars: Option<&str>) -> Result<Output> {
    let l = load(spec)?;
    let (m, labels) = model(&l, chars)?;
    let ts = m.ts();
    let rs = check_rs_axioms(&m);
    if !rs.all_pass() {
        let failed: Vec<&str> = rs.axioms.failures().map(|c| c.name.as_str()).collect();
        bail!("the model is not a real semigroup (fails {})", failed.join(", "));
    }
    let c = check_characterization(&m)?;
    let ideals = saturated_prime_ideals(&m);
    let single = totally_ordered_spec_implies_fan(&m)?;
    let two = ts.satisfies_condition_z().then(|| two_chains_implies_fan(&m)).transpose()?;
    let surj = zero_set_surjectivity(ts);

    let mut t = format!("structure {}, characters {}\n", l.name, labels.join(" "));
    let _ = writeln!(t, "fan: {}", yes(c.is_fan));
    let _ = writeln!(t, "(2.i) condition [Z]: {}", yes(c.cond_2i));
    let _ = write!(t, "(2.ii) zero-set inclusions realized by specialization: {}", yes(c.cond_2ii));
    if let Some(w) = &c.cond_2ii_witness {
        let _ = write!(t, " (fails for {} and {})", labels[w[0]], labels[w[1]]);
    }
    t.push('\n');
    let _ = write!(t, "(2.iii) saturated prime ideals give RSG-fans: {}", yes(c.cond_2iii));
    if let Some(w) = &c.cond_2iii_witness {
        let _ = write!(t, " (fails at {})", braces(w));
    }
    t.push('\n');
    let _ = writeln!(t, "fan ⟺ (2.i) ∧ (2.ii) ∧ (2.iii): {}", yes(c.equivalence_holds));
    let _ = writeln!(t, "saturated prime ideals ({}):", ideals.len());
    for i in &ideals {
        let _ = writeln!(t, "  {}", set(ts, i));
    }
    match &surj {
        None => t.push_str("every proper ideal is a zero-set: yes\n"),
        Some(i) => {
            let _ = writeln!(t, "every proper ideal is a zero-set: no ({})", braces(i));
        }
    }
    verdict_text(&mut t, "single specialization chain", &single, &labels);
    match &two {
        Some(v) => verdict_text(&mut t, "two specialization chains", v, &labels),
        None => t.push_str("two specialization chains: needs condition [Z]\n"),
    }
    let mut json = json!({
        "structure": l.name,
        "characters": labels,
        "report": c,
        "saturated_prime_ideals": ideals.iter().map(|i| ts.set_names(i)).collect::<Vec<_>>(),
        "ideals_are_zero_sets": surj.is_none(),
        "single_chain": single,
        "two_chains": two,
    });
    if c.is_fan {
        let u = units_rsg(&build_fan(ts)?);
        let units: Vec<String> = u.units.iter().map(|&e| ts.name(e).to_string()).collect();
        let _ = writeln!(t, "units {} form an RSG-fan: {}", braces(&units), yes(u.is_rsg_fan()));
        json["units"] = json!({ "elements": units, "rsg_fan": u.is_rsg_fan() });
    }
    Ok(Output::report(t, json, c.equivalence_holds))
}

/// DOT for an example, with the figure's name when there is one.
pub fn example_dot(ex: Example, kind: FigureKind) -> Result<String> {
    let (p, labels) = labelled_poset(ex, kind)?;
    Ok(hasse_dot(&p, &labels, &dot_name(ex.name(), Some(ex), kind)))
}

pub fn examples(name: &str, dot: bool, spec_order: bool, structure: bool) -> Result<Output> {
    let ex = Example::from_name(name)?;
    let ts = ex.build();
    if structure {
        return Ok(Output::document(write_structure(ex.name(), &ts)));
    }
    if dot {
        let kind = if spec_order { FigureKind::Specialization } else { FigureKind::Representation };
        return Ok(Output::document(example_dot(ex, kind)?));
    }
    let x = enumerate_characters(&ts);
    let labels = character_labels(ex, &ts, &x);
    let mut t = format!("example {}", ex.name());
    if let Some(p) = ts.presentation() {
        let _ = write!(t, ": {p}");
    }
    t.push('\n');
    let _ = writeln!(t, "elements ({}): {}", ts.len(), ts.names().join(" "));
    let _ = writeln!(t, "characters ({}):", x.len());
    t.push_str(&character_table(&ts, &x, &labels));
    let lat = fan_lattice(&build_fan(&ts)?)?;
    lattice_text(&mut t, &ts, &lat);
    let figs: Vec<&str> = FIGURES.iter().filter(|f| f.example == ex).map(|f| f.id).collect();
    if !figs.is_empty() {
        let _ = writeln!(t, "figures: {}", figs.join(" "));
    }
    let json = json!({
        "example": ex.name(),
        "elements": ts.names(),
        "characters": x.iter().zip(&labels)
            .map(|(h, lab)| json!({ "label": lab, "values": h.as_ints() })).collect::<Vec<_>>(),
        "lattice": lattice_json(&ts, &lat),
        "figures": figs,
    });
    Ok(Output::report(t, json, true))
}

fn rs3_text(t: &mut String, name: &str, ts: &FiniteTs, labels: &[String], s: &Rs3Search) {
    let _ = write!(
        t,
        "{name}: {} characters, {} subsets of size ≤ {} examined, {} separating; ",
        s.space_size, s.subsets_examined, s.max_subset_size, s.separating
    );
    match &s.found {
        None => t.push_str("no [RS3] failure\n"),
        Some((h, w)) => {
            let hs: Vec<String> = h.iter().map(|&i| labels[i].clone()).collect();
            let _ = writeln!(t, "[RS3] fails for H = {} at {}", braces(&hs), tuple(&names(ts, w)));
        }
    }
}

fn rs3_json(name: &str, ts: &FiniteTs, labels: &[String], s: &Rs3Search) -> Value {
    json!({
        "structure": name,
        "space_size": s.space_size,
        "max_subset_size": s.max_subset_size,
        "subsets_examined": s.subsets_examined,
        "separating": s.separating,
        "found": s.found.as_ref().map(|(h, w)| json!({
            "characters": h.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
            "witness": names(ts, w),
        })),
    })
}

pub fn rs3_search(spec: Option<&str>, max: usize, count: usize, seed: u64) -> Result<Output> {
    let targets: Vec<Loaded> = match spec {
        Some(s) => vec![load(s)?],
        None => corpus(seed, count).into_iter().map(|(name, ts)| Loaded { name, ts, example: None }).collect(),
    };
    let mut t = String::new();
    let mut reports = Vec::new();
    let mut found = 0;
    for l in &targets {
        let s = find_rs3_counterexample(&l.ts, max);
        let labels = l.labels(&l.characters());
        rs3_text(&mut t, &l.name, &l.ts, &labels, &s);
        found += usize::from(s.found.is_some());
        reports.push(rs3_json(&l.name, &l.ts, &labels, &s));
    }
    let _ = writeln!(t, "{found} of {} structures have an [RS3] failure", targets.len());
    Ok(Output::report(t, json!({ "seed": seed, "results": reports }), true))
}

fn preorder(name: &str) -> Result<Predicate<DualNumber>> {
    let all = [lex_preorder(), dual_sums_of_squares(), nonneg_constant(), lex_with_x()];
    let known: Vec<&str> = all.iter().map(|p| p.name).collect();
    let known = known.join(", ");
    all.into_iter().find(|p| p.name == name).with_context(|| format!("unknown preorder `{name}` (known: {known})"))
}

fn sample_line(t: &mut String, c: &SampleCheck) {
    match &c.witness {
        None => {
            let _ = writeln!(t, "  {}: holds on the sample", c.name);
        }
        Some(w) => {
            let _ = writeln!(t, "  {}: fails at {}", c.name, tuple(w));
        }
    }
}

pub fn pring_check(name: &str, range: i64) -> Result<Output> {
    if range < 0 {
        bail!("--range must be nonnegative");
    }
    let t_pred = preorder(name)?;
    let sample = dual_sample(range);
    let total = verify_total_preorder(&t_pred, &sample);
    let supp = support(&t_pred, &sample);
    let sos = dual_sums_of_squares();
    let conds = ts_char_subset_conditions(&t_pred, &sos, &sample);

    let mut t = format!("preorder {} on aX+b with |a|, |b| ≤ {range} ({} elements)\n", t_pred.name, sample.len());
    t.push_str("total preorder:\n");
    for c in &total.checks {
        sample_line(&mut t, c);
    }
    let _ = writeln!(t, "support on the sample: {}", braces(&supp.members));
    sample_line(&mut t, &supp.convex);
    sample_line(&mut t, &supp.radical);
    let _ = writeln!(t, "as a character subset over {}:", sos.name);
    for c in &conds.checks {
        sample_line(&mut t, c);
    }
    let _ = writeln!(
        t,
        "result: {}",
        if total.all_hold() { "total preorder on the sample" } else { "not a total preorder" }
    );
    let json = json!({
        "preorder": t_pred.name,
        "range": range,
        "total_preorder": total,
        "support": supp,
        "character_subset": conds,
    });
    Ok(Output::report(t, json, total.all_hold()))
}

pub fn reproduce(ids: &[u32], out_dir: Option<&Path>, seed: u64) -> Result<Output> {
    let ids: Vec<u32> = if ids.is_empty() { (1..=TITLES.len() as u32).collect() } else { ids.to_vec() };
    let criteria: Vec<Criterion> = ids.iter().map(|&id| run(id, seed)).collect::<rsfan::Result<_>>()?;
    let passed = criteria.iter().filter(|c| c.passed).count();
    let mut t = String::new();
    for c in &criteria {
        t.push_str(&c.line());
        t.push('\n');
    }
    let _ = writeln!(t, "{passed}/{} criteria pass (seed {seed})", criteria.len());
    let json = json!({ "seed": seed, "passed": passed, "total": criteria.len(), "criteria": criteria });
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        std::fs::write(dir.join("reproduce.txt"), &t)?;
        std::fs::write(dir.join("reproduce.json"), serde_json::to_string_pretty(&json)? + "\n")?;
    }
    Ok(Output::report(t, json, passed == criteria.len()))
}
