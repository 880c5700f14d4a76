//! Characterizing fans among real semigroups: the three conditions,
//! interpolation of characters along ideals, zero-sets of ideals, and the
//! chain criteria on the specialization order.

use crate::characters::{enumerate_characters, same_set, specialization_poset, specializes, Character};
use crate::error::{Error, Result};
use crate::fan::{make_fan, FanModel};
use crate::order::Poset;
use crate::quotient::ideal_quotient;
use crate::represent::RsModel;
use crate::three::Three;
use crate::ts_core::{ElemSet, FiniteTs};
use serde::Serialize;

/// Proper prime ideals that are closed under representation.
pub fn saturated_prime_ideals(m: &RsModel) -> Vec<ElemSet> {
    let ts = m.ts();
    ts.proper_ideals().into_iter().filter(|i| ts.is_prime_ideal(i) && m.is_saturated(i)).collect()
}

/// A model is a fan when its characters are all the characters of its
/// structure.  When that holds the relation must also be the closed form;
/// a mismatch is an invariant error.
pub fn is_fan(m: &RsModel) -> Result<bool> {
    let ts = m.ts();
    let fan = same_set(&m.rs_characters(), &enumerate_characters(ts));
    if fan {
        let closed = make_fan(ts)?;
        if let Some((a, b, c)) = m.d_rel().first_difference(closed.d_rel()) {
            return Err(Error::Invariant(format!(
                "character space is complete but D differs from the closed form at ({}, {}, {})",
                ts.name(a),
                ts.name(b),
                ts.name(c)
            )));
        }
    }
    Ok(fan)
}

/// The characterization report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characterization {
    pub is_fan: bool,
    /// Condition [Z].
    pub cond_2i: bool,
    /// Every inclusion of zero-sets `Z(g) ⊆ Z(h)` is realized by a
    /// specialization `g ⇝ h′` with `Z(h′) = Z(h)`.
    pub cond_2ii: bool,
    /// Every saturated prime ideal has an RSG-fan quotient.
    pub cond_2iii: bool,
    /// First `(g, h)` (indices into the RS-characters) failing (2.ii).
    pub cond_2ii_witness: Option<Vec<usize>>,
    /// First saturated prime ideal failing (2.iii), by element names.
    pub cond_2iii_witness: Option<Vec<String>>,
    pub saturated_prime_ideals: usize,
    pub equivalence_holds: bool,
}

pub fn check_characterization(m: &RsModel) -> Result<Characterization> {
    let ts = m.ts();
    let fan = is_fan(m)?;
    let cond_2i = ts.satisfies_condition_z();
    let x = m.rs_characters();

    let mut cond_2ii_witness = None;
    'outer: for (gi, g) in x.iter().enumerate() {
        for (hi, h) in x.iter().enumerate() {
            if g.zero_set().is_subset(&h.zero_set())
                && !x.iter().any(|h2| h2.zero_set() == h.zero_set() && specializes(g, h2))
            {
                cond_2ii_witness = Some(vec![gi, hi]);
                break 'outer;
            }
        }
    }

    let ideals = saturated_prime_ideals(m);
    let mut cond_2iii_witness = None;
    for i in &ideals {
        let ok = match ideal_quotient(m, i) {
            Ok((_, _, q)) => q.is_rsg_fan(),
            Err(Error::Precondition(_)) => false,
            Err(e) => return Err(e),
        };
        if !ok {
            cond_2iii_witness = Some(ts.set_names(i));
            break;
        }
    }
    let cond_2ii = cond_2ii_witness.is_none();
    let cond_2iii = cond_2iii_witness.is_none();
    Ok(Characterization {
        is_fan: fan,
        cond_2i,
        cond_2ii,
        cond_2iii,
        cond_2ii_witness,
        cond_2iii_witness,
        saturated_prime_ideals: ideals.len(),
        equivalence_holds: fan == (cond_2i && cond_2ii && cond_2iii),
    })
}

/// The character `f` with `g ⇝ f ⇝ h` and `Z(f) = I`: `g` off `I`, zero on
/// `I`.  Also checks that `h′²·g` gives the same `f` for every `h′` with
/// zero-set `I`.
pub fn interpolate_character(f: &FanModel, g: &Character, h: &Character, ideal: &ElemSet) -> Result<Character> {
    let ts = f.ts();
    if !ts.is_ideal(ideal) {
        return Err(Error::Precondition(format!("{{{}}} is not an ideal", ts.set_names(ideal).join(", "))));
    }
    if !specializes(g, h) {
        return Err(Error::Precondition("g does not specialize to h".into()));
    }
    if !g.zero_set().is_subset(ideal) {
        return Err(Error::Precondition("Z(g) ⊆ I fails".into()));
    }
    if !ideal.is_subset(&h.zero_set()) {
        return Err(Error::Precondition("I ⊆ Z(h) fails".into()));
    }
    let out = Character::from_values(
        ts.elems().map(|a| if ideal.contains(a.idx()) { Three::Zero } else { g.value(a) }).collect(),
    );
    let x = enumerate_characters(ts);
    if !x.contains(&out) {
        return Err(Error::Invariant("interpolated map is not a character".into()));
    }
    if !(specializes(g, &out) && specializes(&out, h)) {
        return Err(Error::Invariant("interpolated character is not between g and h".into()));
    }
    for k in x.iter().filter(|k| &k.zero_set() == ideal) {
        if k.sq().mul(g) != out {
            return Err(Error::Invariant("h′²·g differs from the interpolated character".into()));
        }
    }
    let rivals = x.iter().filter(|k| &k.zero_set() == ideal && specializes(g, k)).count();
    if rivals != 1 {
        return Err(Error::Invariant(format!("{rivals} specializations of g have zero-set I")));
    }
    Ok(out)
}

/// First proper ideal (by names) that is not the zero-set of a character.
pub fn zero_set_surjectivity(ts: &FiniteTs) -> Option<Vec<String>> {
    let x = enumerate_characters(ts);
    ts.proper_ideals().into_iter().find(|i| !x.iter().any(|h| &h.zero_set() == i)).map(|i| ts.set_names(&i))
}

/// Verdict of one of the chain criteria.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainVerdict {
    /// The hypothesis holds.
    pub applicable: bool,
    pub is_fan: bool,
    /// Single-chain criterion: each saturated prime ideal is the zero-set
    /// of exactly one character.  Always true for the two-chain criterion.
    pub unique_realization: bool,
    /// Two-chain criterion: the covering chains, as character indices.
    pub chains: Option<(Vec<usize>, Vec<usize>)>,
}

impl ChainVerdict {
    /// The criterion's conclusion holds whenever its hypothesis does.
    pub fn holds(&self) -> bool {
        !self.applicable || (self.is_fan && self.unique_realization)
    }
}

/// If the characters form a chain under specialization, the model is a fan
/// and each saturated prime ideal is the zero-set of a unique character.
pub fn totally_ordered_spec_implies_fan(m: &RsModel) -> Result<ChainVerdict> {
    let x = m.rs_characters();
    let p = specialization_poset(&x);
    let all: Vec<usize> = (0..x.len()).collect();
    let applicable = p.is_chain(&all);
    let unique_realization =
        saturated_prime_ideals(m).iter().all(|i| x.iter().filter(|h| &h.zero_set() == i).count() == 1);
    Ok(ChainVerdict {
        applicable,
        is_fan: is_fan(m)?,
        unique_realization: !applicable || unique_realization,
        chains: None,
    })
}

fn realizes_all(x: &[Character], chain: &[usize], ideals: &[ElemSet]) -> bool {
    ideals.iter().all(|i| chain.iter().any(|&c| &x[c].zero_set() == i))
}

/// First pair of maximal specialization chains covering the characters,
/// each realizing every saturated prime ideal as a zero-set.
pub fn two_chain_cover(x: &[Character], p: &Poset, ideals: &[ElemSet]) -> Option<(Vec<usize>, Vec<usize>)> {
    let chains = p.maximal_chains();
    for (i, c0) in chains.iter().enumerate() {
        if !realizes_all(x, c0, ideals) {
            continue;
        }
        for c1 in &chains[i..] {
            let covered = (0..x.len()).all(|k| c0.contains(&k) || c1.contains(&k));
            if covered && realizes_all(x, c1, ideals) {
                return Some((c0.clone(), c1.clone()));
            }
        }
    }
    None
}

/// If the characters are the union of two specialization chains, each
/// realizing every saturated prime ideal, the model is a fan.  Requires
/// condition [Z].
pub fn two_chains_implies_fan(m: &RsModel) -> Result<ChainVerdict> {
    crate::fan::require_condition_z(m.ts())?;
    let x = m.rs_characters();
    let p = specialization_poset(&x);
    let chains = two_chain_cover(&x, &p, &saturated_prime_ideals(m));
    Ok(ChainVerdict { applicable: chains.is_some(), is_fan: is_fan(m)?, unique_realization: true, chains })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{f1, f1_idem, f2, f4};
    use crate::represent::three_rs;

    #[test]
    fn f2_and_three_characterized() {
        for ts in [f2(), crate::examples::three()] {
            let f = make_fan(&ts).unwrap();
            let r = check_characterization(&f).unwrap();
            assert!(r.is_fan && r.cond_2i && r.cond_2ii && r.cond_2iii && r.equivalence_holds, "{r:?}");
        }
        assert!(is_fan(&three_rs()).unwrap());
    }

    #[test]
    fn interpolation_on_f2() {
        let ts = f2();
        let f = make_fan(&ts).unwrap();
        let x = enumerate_characters(&ts);
        let (h1, h2, h4) = (&x[0], &x[1], &x[3]);
        assert_eq!(&interpolate_character(&f, h4, h1, &h2.zero_set()).unwrap(), h2);
        assert_eq!(&interpolate_character(&f, h4, h1, &h4.zero_set()).unwrap(), h4);
        assert_eq!(&interpolate_character(&f, h4, h1, &h1.zero_set()).unwrap(), h1);
        assert!(matches!(interpolate_character(&f, h1, h4, &h1.zero_set()), Err(Error::Precondition(_))));
        assert!(zero_set_surjectivity(&ts).is_none());
    }

    #[test]
    fn product_of_threes_is_not_a_fan() {
        let (name, m) = crate::harness::product_models().unwrap().remove(0);
        assert_eq!(name, "three × three");
        assert!(crate::represent::check_rs_axioms(&m).all_pass());
        let r = check_characterization(&m).unwrap();
        assert!(!r.is_fan && !r.cond_2i && r.equivalence_holds, "{r:?}");
    }

    #[test]
    fn chain_criteria() {
        let idem = make_fan(&f1_idem()).unwrap();
        let v = totally_ordered_spec_implies_fan(&idem).unwrap();
        assert!(v.applicable && v.holds());
        let v = totally_ordered_spec_implies_fan(&make_fan(&f2()).unwrap()).unwrap();
        assert!(!v.applicable && v.holds());

        let v = two_chains_implies_fan(&make_fan(&f1()).unwrap()).unwrap();
        assert!(v.applicable && v.holds());
        // chains h2 ⇝ h1 and h3 ⇝ h1
        assert_eq!(v.chains, Some((vec![1, 0], vec![2, 0])));
        let v = two_chains_implies_fan(&make_fan(&f4()).unwrap()).unwrap();
        assert!(!v.applicable);
        let v = two_chains_implies_fan(&make_fan(&f2()).unwrap()).unwrap();
        assert!(!v.applicable);
    }
}
