//! Algebraic laws over random presentations on up to three generators.

use proptest::prelude::*;
use rsfan::characters::{
    enumerate_characters, is_character, is_root_system, is_three_closed, specialization_poset, specializes,
    specializes_by_nonneg, specializes_by_ones, specializes_by_zero_sets, three_closure,
};
use rsfan::fan::{check_interdefinability, make_fan};
use rsfan::format::{parse_structure, write_structure};
use rsfan::order::{fan_lattice, repr_leq, repr_leq_oracle, repr_poset};
use rsfan::quotient::quotient_fan;
use rsfan::represent::{check_rs_axioms, dt_from_trep, induce_d, induce_relations};
use rsfan::{Character, FiniteTs, Monomial, Presentation, Three};

const NAMES: [&str; 3] = ["x", "y", "z"];

fn monomial(k: usize) -> impl Strategy<Value = Monomial> {
    prop_oneof![
        1 => Just(Monomial::Zero),
        11 => (any::<bool>(), prop::collection::vec(0u8..=2, k))
            .prop_map(|(negative, exps)| Monomial::Term { negative, exps }),
    ]
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (0usize..=3).prop_flat_map(|k| {
        prop::collection::vec((monomial(k), monomial(k)), 0..=3).prop_map(move |relations| {
            let mut p = Presentation::new(&NAMES[..k]);
            p.relations = relations;
            p
        })
    })
}

/// Non-degenerate presentations with their structures, capped in size so
/// the cubic and quintic checks stay fast.
fn structure(max_len: usize) -> impl Strategy<Value = (Presentation, FiniteTs)> {
    presentation().prop_filter_map("degenerate or large", move |p| {
        p.build().ok().filter(|ts| ts.len() <= max_len).map(|ts| (p, ts))
    })
}

fn eval3(m: &Monomial, v: &[Three]) -> Three {
    match m {
        Monomial::Zero => Three::Zero,
        Monomial::Term { negative, exps } => {
            let mut out = if *negative { Three::MinusOne } else { Three::One };
            for (&e, &x) in exps.iter().zip(v) {
                for _ in 0..e {
                    out = out * x;
                }
            }
            out
        }
    }
}

/// Characters are determined by generator values; an assignment extends to
/// a character iff every relation holds in 3.
fn character_count_oracle(p: &Presentation) -> usize {
    let k = p.generators.len();
    (0..3usize.pow(k as u32))
        .filter(|&code| {
            let v: Vec<Three> = (0..k).map(|i| Three::LISTING[code / 3usize.pow(i as u32) % 3]).collect();
            p.relations.iter().all(|(l, r)| eval3(l, &v) == eval3(r, &v))
        })
        .count()
}

fn subset(x: &[Character], mask: u64) -> Vec<Character> {
    x.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, h)| h.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn built_structures_are_ternary_semigroups((p, ts) in structure(60)) {
        prop_assert!(ts.axiom_report().all_pass());
        let x = enumerate_characters(&ts);
        prop_assert_eq!(x.len(), character_count_oracle(&p));
        for h in &x {
            prop_assert!(is_character(&ts, h));
        }
    }

    #[test]
    fn structure_files_round_trip((_p, ts) in structure(60)) {
        let text = write_structure("t", &ts);
        let back = parse_structure(&text).unwrap();
        prop_assert_eq!(&back.ts, &ts);
        prop_assert_eq!(write_structure("t", &back.ts), text);
    }

    #[test]
    fn specialization_characterizations_agree((_p, ts) in structure(60)) {
        let x = enumerate_characters(&ts);
        for g in &x {
            for h in &x {
                let s = specializes(g, h);
                prop_assert_eq!(s, specializes_by_ones(g, h));
                prop_assert_eq!(s, specializes_by_nonneg(g, h));
                prop_assert_eq!(s, specializes_by_zero_sets(g, h));
            }
        }
        // the character space of a fan is a root system
        if ts.satisfies_condition_z() {
            prop_assert!(is_root_system(&specialization_poset(&x)));
        }
    }

    #[test]
    fn induced_relations_are_consistent((_p, ts) in structure(30), mask in any::<u64>(), sub in any::<u64>()) {
        let x = enumerate_characters(&ts);
        let h = subset(&x, mask);
        prop_assume!(!h.is_empty());
        let (d, dt) = induce_relations(&ts, &h);
        prop_assert_eq!(&dt_from_trep(&ts, &d), &dt);
        let m = induce_d(&ts, &h).unwrap();
        let r = check_rs_axioms(&m);
        prop_assert!(r.weak_rs3_prime.passed());
        if r.passed("RS2") {
            prop_assert_eq!(r.rs3_agreement, Some(true));
        }
        // fewer characters, fewer constraints
        let smaller = subset(&h, sub);
        if !smaller.is_empty() {
            let (d2, _) = induce_relations(&ts, &smaller);
            prop_assert!(d.is_subset(&d2));
        }
    }

    #[test]
    fn fans_satisfy_the_structure_theorems((_p, ts) in structure(30)) {
        if !ts.satisfies_condition_z() {
            prop_assert!(make_fan(&ts).is_err());
            return Ok(());
        }
        let x = enumerate_characters(&ts);
        prop_assert_eq!(ts.len(), 2 * x.len() + 1);
        let f = make_fan(&ts).unwrap();
        prop_assert!(check_rs_axioms(&f).all_pass());
        prop_assert!(check_interdefinability(&ts).unwrap().holds());
        let induced = induce_d(&ts, &x).unwrap();
        prop_assert_eq!(f.d_rel(), induced.d_rel());

        for a in ts.elems() {
            for b in ts.elems() {
                prop_assert_eq!(repr_leq(&f, a, b), repr_leq_oracle(&x, a, b));
            }
        }
        let p = repr_poset(&f).unwrap();
        prop_assert_eq!(p.minimum(), Some(ts.one().idx()));
        prop_assert_eq!(p.maximum(), Some(ts.minus_one().idx()));
        let lat = fan_lattice(&f).unwrap();
        prop_assert!(lat.bounded);
        prop_assert!(lat.closed_form_violation.is_none());
        prop_assert!(lat.de_morgan_violation.is_none());
        prop_assert!(lat.kleene_violation.is_none());
        prop_assert_eq!(lat.modular, lat.pentagon.is_none());
    }

    #[test]
    fn fan_quotients_are_fans((_p, ts) in structure(30), mask in any::<u64>()) {
        prop_assume!(ts.satisfies_condition_z());
        let f = make_fan(&ts).unwrap();
        let x = enumerate_characters(&ts);
        let h = three_closure(&subset(&x, mask | 1));
        prop_assert!(is_three_closed(&h));
        let (cong, q) = quotient_fan(&f, &h).unwrap();
        prop_assert!(q.is_fan(), "{:?}", q);
        prop_assert!(cong.check(&ts).is_ok());
        prop_assert_eq!(cong.num_classes(), 2 * h.len() + 1);
    }
}
