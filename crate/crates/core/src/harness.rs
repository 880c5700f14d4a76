//! The reproducibility harness: one function per acceptance criterion,
//! shared by the `reproduce` command and the acceptance test target.

use crate::characters::{
    density_search, enumerate_characters, is_three_closed, mask_indices, product_characters, separates, Character,
};
use crate::charfan::check_characterization;
use crate::error::Result;
use crate::examples::{cardinality_relation, Example, FigureKind, FIGURES};
use crate::fan::{fan_equivalence, make_fan};
use crate::order::{chain_length, chain_length_bound, fan_lattice, is_pentagon, Pentagon};
use crate::presentation::{Monomial, Presentation};
use crate::pring::{dual_sample, lex_preorder, radical_violation, support, verify_total_preorder, DualNumber};
use crate::quotient::{ideal_quotient, quotient_fan, Congruence};
use crate::represent::{check_rs_axioms, induce_d, RsModel};
use crate::ts_core::FiniteTs;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Criterion {
    /// `[PASS] 3 RS axiom suite: …`
    pub fn line(&self) -> String {
        format!("[{}] {:>2} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.title, self.detail)
    }
}

pub const TITLES: [&str; 11] = [
    "cardinalities",
    "figures as posets",
    "RS axiom suite",
    "fan equivalence",
    "lattice theorem",
    "chain length",
    "quotients",
    "characterization theorem",
    "cardinality relation",
    "preordered ring",
    "finite density",
];

/// Runs criterion `id` (1–11).
pub fn run(id: u32, seed: u64) -> Result<Criterion> {
    let (passed, detail) = match id {
        1 => cardinalities()?,
        2 => figures()?,
        3 => rs_axiom_suite(seed)?,
        4 => fan_equivalences(seed)?,
        5 => lattice_theorem()?,
        6 => chain_lengths()?,
        7 => quotients()?,
        8 => characterization(seed)?,
        9 => cardinality_relations(seed)?,
        10 => pring_checks(),
        11 => finite_density(seed)?,
        _ => return Err(crate::Error::Precondition(format!("no criterion {id}"))),
    };
    Ok(Criterion { id, title: TITLES[id as usize - 1], passed, detail })
}

pub fn run_all(seed: u64) -> Result<Vec<Criterion>> {
    (1..=11).map(|id| run(id, seed)).collect()
}

/// A random presentation on up to three generators with up to three
/// relations; exponents up to 2, occasional signs and zeros.
pub fn random_presentation(rng: &mut impl Rng) -> Presentation {
    let names = ["x", "y", "z"];
    let k = rng.gen_range(0..=3);
    let mut p = Presentation::new(&names[..k]);
    let monomial = |rng: &mut ChaCha8Rng| {
        if rng.gen_ratio(1, 12) {
            Monomial::Zero
        } else {
            Monomial::Term { negative: rng.gen_ratio(1, 4), exps: (0..k).map(|_| rng.gen_range(0..=2)).collect() }
        }
    };
    let mut inner = ChaCha8Rng::seed_from_u64(rng.gen());
    for _ in 0..rng.gen_range(0..=3) {
        let l = monomial(&mut inner);
        let r = monomial(&mut inner);
        p.relations.push((l, r));
    }
    p
}

/// The examples followed by `count` non-degenerate random presentations.
pub fn corpus(seed: u64, count: usize) -> Vec<(String, FiniteTs)> {
    let mut out: Vec<(String, FiniteTs)> = Example::ALL.iter().map(|e| (e.name().to_string(), e.build())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut made = 0;
    while made < count {
        let p = random_presentation(&mut rng);
        if let Ok(ts) = p.build() {
            out.push((p.to_string(), ts));
            made += 1;
        }
    }
    out
}

const RANDOM_STRUCTURES: usize = 24;

fn example_fans() -> Result<Vec<(Example, FiniteTs, crate::FanModel)>> {
    Example::ALL
        .iter()
        .map(|&e| {
            let ts = e.build();
            let f = make_fan(&ts)?;
            Ok((e, ts, f))
        })
        .collect()
}

fn cardinalities() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for e in [Example::F1, Example::F1Idem, Example::F2, Example::F3, Example::F4] {
        let ts = e.build();
        let chars = enumerate_characters(&ts).len();
        ok &= ts.len() == e.listed_elements().len() && chars == e.expected_characters();
        let listed: std::collections::BTreeSet<&str> = e.listed_elements().iter().copied().collect();
        ok &= ts.names().iter().all(|n| listed.contains(n.as_str()));
        parts.push(format!("{} |G|={} |X|={}", e.name(), ts.len(), chars));
    }
    Ok((ok, parts.join(", ")))
}

fn figures() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for fig in &FIGURES {
        let m = fig.matches()?;
        ok &= m;
        let kind = match fig.kind {
            FigureKind::Specialization => "spec",
            FigureKind::Representation => "repr",
        };
        parts.push(format!("{}({}){}", fig.id, kind, if m { "" } else { " MISMATCH" }));
    }
    Ok((ok, parts.join(" ")))
}

/// Random separating subsets of `X_G` over the examples.
fn random_separating_subsets(seed: u64, wanted: usize) -> Vec<(Example, Vec<Character>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e9a);
    let spaces: Vec<(Example, FiniteTs, Vec<Character>)> = Example::ALL
        .iter()
        .map(|&e| {
            let ts = e.build();
            let x = enumerate_characters(&ts);
            (e, ts, x)
        })
        .collect();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < wanted && attempts < 100 * wanted {
        attempts += 1;
        let (e, ts, x) = spaces.choose(&mut rng).expect("nonempty");
        let size = rng.gen_range(1..=x.len());
        let h: Vec<Character> = x.choose_multiple(&mut rng, size).cloned().collect();
        if separates(ts, &h).is_ok() {
            out.push((*e, h));
        }
    }
    out
}

fn rs_axiom_suite(seed: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for (_, _, f) in example_fans()? {
        ok &= check_rs_axioms(&f).all_pass();
    }
    let subsets = random_separating_subsets(seed, 100);
    let mut all_but_rs3 = 0;
    let mut rs3_fails = 0;
    for (e, h) in &subsets {
        let m = induce_d(&e.build(), h)?;
        let r = check_rs_axioms(&m);
        if r.all_but_rs3_pass() {
            all_but_rs3 += 1;
        }
        if !r.axioms.passed("RS3") {
            rs3_fails += 1;
        }
    }
    ok &= subsets.len() >= 100 && all_but_rs3 == subsets.len();
    Ok((
        ok,
        format!(
            "6 example fans pass RS0–RS8; {}/{} random separating subsets pass all but RS3 ({} fail RS3)",
            all_but_rs3,
            subsets.len(),
            rs3_fails
        ),
    ))
}

fn three_closed_subsets(x: &[Character]) -> Vec<Vec<Character>> {
    (1u32..(1u32 << x.len()))
        .map(|mask| mask_indices(mask, x.len()).into_iter().map(|i| x[i].clone()).collect::<Vec<_>>())
        .filter(|h| is_three_closed(h))
        .collect()
}

fn fan_equivalences(seed: u64) -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut disagreements = 0;
    for e in [Example::F1, Example::F4] {
        let ts = e.build();
        for h in three_closed_subsets(&enumerate_characters(&ts)) {
            pairs += 1;
            if !fan_equivalence(&ts, &h)?.agree {
                disagreements += 1;
            }
        }
    }
    for (_, ts) in corpus(seed, RANDOM_STRUCTURES) {
        if !ts.satisfies_condition_z() {
            continue;
        }
        let x = enumerate_characters(&ts);
        pairs += 1;
        if !fan_equivalence(&ts, &x)?.agree {
            disagreements += 1;
        }
    }
    Ok((disagreements == 0, format!("{pairs} (G, X) pairs, {disagreements} disagreements")))
}

fn lattice_theorem() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (e, ts, f) in example_fans()? {
        let lat = fan_lattice(&f)?;
        ok &= lat.bounded
            && lat.closed_form_violation.is_none()
            && lat.de_morgan_violation.is_none()
            && lat.kleene_violation.is_none();
        match e {
            Example::F1 => ok &= lat.modular && !lat.distributive,
            Example::F2 | Example::F4 => ok &= !lat.modular,
            _ => {}
        }
        let named = |p: &Pentagon| {
            let n = |i: usize| ts.names()[i].clone();
            format!("{{{} < {} < {} < {}; {}}}", n(p.bottom), n(p.low), n(p.high), n(p.top), n(p.side))
        };
        parts.push(format!(
            "{}: {}{}",
            e.name(),
            if lat.modular { "modular" } else { "non-modular" },
            lat.pentagon.as_ref().map(|p| format!(" {}", named(p))).unwrap_or_default()
        ));
        // the pentagons named in the worked examples
        let p = crate::order::repr_poset(&f)?;
        let e_ = |s: &str| ts.elem(s).map(|x| x.idx());
        if e == Example::F2 {
            let pent =
                Pentagon {
                    bottom: e_("z²")?, low: e_("x²")?, high: e_("−x²")?, top: e_("−z²")?, side: e_("z")?
                };
            ok &= is_pentagon(&p, &pent);
        }
        if e == Example::F4 {
            let pent =
                Pentagon { bottom: e_("1")?, low: e_("x²")?, high: e_("−x²")?, top: e_("−1")?, side: e_("z")? };
            ok &= is_pentagon(&p, &pent);
        }
    }
    Ok((ok, parts.join("; ")))
}

fn chain_lengths() -> Result<(bool, String)> {
    let ts = Example::F2.build();
    let x = enumerate_characters(&ts);
    let len = chain_length(&ts, &x);
    let bound = chain_length_bound(&ts);
    Ok((len == 4 && bound == 6 && len <= bound, format!("chain_length(F2) = {len} ≤ {bound}")))
}

fn quotients() -> Result<(bool, String)> {
    let mut ok = true;
    let mut quotients = 0;
    let mut ideal_quotients = 0;
    for (_, ts, f) in example_fans()? {
        let x = enumerate_characters(&ts);
        if x.len() <= 12 {
            for h in three_closed_subsets(&x) {
                quotients += 1;
                ok &= quotient_fan(&f, &h)?.1.is_fan();
            }
        }
        for i in ts.proper_ideals() {
            ideal_quotients += 1;
            ok &= ideal_quotient(&f, &i)?.2.holds();
        }
    }
    let f3 = Example::F3.build();
    let fan3 = make_fan(&f3)?;
    let zero = f3.set_of([f3.zero()]);
    let (cong, _, _) = ideal_quotient(&fan3, &zero)?;
    let collapse = cong.same(f3.elem("z")?, f3.one());
    ok &= collapse;
    let kernel_check = {
        let x = enumerate_characters(&f3);
        let h: Vec<Character> = x.iter().filter(|h| h.zero_set() == zero).cloned().collect();
        Congruence::from_chars(&f3, &h)? == cong
    };
    ok &= kernel_check;
    Ok((
        ok,
        format!(
            "{quotients} fan quotients, {ideal_quotients} ideal quotients are RSG-fans with matching witnesses; \
             z ~ 1 in F3/{{0}}: {collapse}"
        ),
    ))
}

/// Products of small fans with the product relation: real semigroups that
/// break condition [Z].
pub fn product_models() -> Result<Vec<(String, RsModel)>> {
    use Example::*;
    let pairs = [(Three, Three), (Three, F1), (F1Idem, Three), (F1Idem, F1Idem), (F1, F1Idem)];
    pairs
        .iter()
        .map(|&(a, b)| {
            let (g, k) = (a.build(), b.build());
            let h = product_characters(k.len(), &enumerate_characters(&g), &enumerate_characters(&k));
            Ok((format!("{} × {}", a.name(), b.name()), induce_d(&g.product(&k), &h)?))
        })
        .collect()
}

/// Models for the characterization check: closed-form fans where
/// condition [Z] holds, induced models from random separating subsets
/// that satisfy every axiom, and products of small fans.
fn characterization_models(seed: u64) -> Result<Vec<(String, RsModel)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc4a2);
    let mut out = Vec::new();
    for (name, m) in product_models()? {
        if check_rs_axioms(&m).all_pass() {
            out.push((name, m));
        }
    }
    for (name, ts) in corpus(seed, RANDOM_STRUCTURES) {
        if ts.satisfies_condition_z() {
            out.push((format!("{name} (closed form)"), make_fan(&ts)?.into_model()));
        }
        let x = enumerate_characters(&ts);
        for _ in 0..3 {
            let size = rng.gen_range(1..=x.len());
            let h: Vec<Character> = x.choose_multiple(&mut rng, size).cloned().collect();
            if separates(&ts, &h).is_err() {
                continue;
            }
            let m = induce_d(&ts, &h)?;
            if check_rs_axioms(&m).all_pass() {
                out.push((format!("{name} (|H| = {size})"), m));
            }
        }
    }
    Ok(out)
}

fn characterization(seed: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for (_, _, f) in example_fans()? {
        let r = check_characterization(&f)?;
        ok &= r.is_fan && r.cond_2i && r.cond_2ii && r.cond_2iii && r.equivalence_holds;
    }
    let models = characterization_models(seed)?;
    let mut fans = 0;
    let mut non_fans = 0;
    for (_, m) in &models {
        let r = check_characterization(m)?;
        ok &= r.equivalence_holds;
        if r.is_fan {
            fans += 1;
        } else {
            non_fans += 1;
        }
    }
    Ok((
        ok,
        format!(
            "example fans satisfy (2.i)–(2.iii); biconditional holds on {} models ({fans} fans, {non_fans} non-fans)",
            models.len()
        ),
    ))
}

fn cardinality_relations(seed: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut fans = 0;
    for (_, ts) in corpus(seed, RANDOM_STRUCTURES) {
        if ts.satisfies_condition_z() {
            fans += 1;
            ok &= cardinality_relation(&ts)?;
        }
    }
    let f2 = Example::F2.build();
    ok &= f2.len() == 23 && 2 * enumerate_characters(&f2).len() + 1 == 23;
    Ok((ok, format!("card(F) = 2·|X_F| + 1 on {fans} fans; F2: 23 = 2·11 + 1")))
}

fn pring_checks() -> (bool, String) {
    let t = lex_preorder();
    let mut ok = true;
    for n in [2, 5, 10] {
        let sample = dual_sample(n);
        ok &= verify_total_preorder(&t, &sample).all_hold();
        ok &= support(&t, &sample).members == ["0X+0"];
    }
    let witness = radical_violation(&t, DualNumber::x(), DualNumber::from_ints(0, 0));
    ok &= witness;
    (ok, format!("lex total on N ∈ {{2, 5, 10}}; support {{0}}; (X, 0) refutes radicality: {witness}"))
}

fn finite_density(seed: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut searched = 0;
    let mut skipped = 0;
    let mut subsets = 0;
    for (_, ts) in corpus(seed, RANDOM_STRUCTURES) {
        if enumerate_characters(&ts).len() > 16 {
            skipped += 1;
            continue;
        }
        let d = density_search(&ts)?;
        searched += 1;
        subsets += d.subsets_examined;
        ok &= d.counterexamples.is_empty();
    }
    Ok((
        ok,
        format!("{searched} structures, {subsets} character subsets examined, none proper 3-closed separating ({skipped} with |X| > 16 skipped)"),
    ))
}
