//! Congruences given by character sets, quotient structures, quotients of
//! fans, and quotients by ideals.

use crate::characters::{enumerate_characters, is_three_closed, mask_indices, Character};
use crate::error::{Error, Result};
use crate::fan::{make_fan, rsg_fan_violation, FanModel};
use crate::represent::{check_rs_axioms, induce_d, RsModel};
use crate::three::Three;
use crate::ts_core::{Elem, ElemSet, FiniteTs};
use serde::Serialize;
use std::collections::BTreeSet;

/// A partition of the elements of a structure, stored as a class index per
/// element.  Classes are numbered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<usize>,
    reps: Vec<Elem>,
}

impl Congruence {
    /// The kernel of `H`: `a ≡ b` iff `h(a) = h(b)` for all `h ∈ H`.
    pub fn from_chars(ts: &FiniteTs, h: &[Character]) -> Result<Congruence> {
        if h.is_empty() {
            return Err(Error::Precondition("the character set H must be nonempty".into()));
        }
        Ok(Congruence::from_key(ts, |a| h.iter().map(|k| k.value(a)).collect::<Vec<Three>>()))
    }

    /// The partition by equal keys.
    pub fn from_key<K: Eq>(ts: &FiniteTs, key: impl Fn(Elem) -> K) -> Congruence {
        let keys: Vec<K> = ts.elems().map(&key).collect();
        let mut class_of = vec![usize::MAX; ts.len()];
        let mut reps = Vec::new();
        for a in 0..ts.len() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(Elem::new(a));
            for b in a..ts.len() {
                if class_of[b] == usize::MAX && keys[b] == keys[a] {
                    class_of[b] = c;
                }
            }
        }
        Congruence { class_of, reps }
    }

    pub fn identity(ts: &FiniteTs) -> Congruence {
        Congruence::from_key(ts, |a| a)
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, a: Elem) -> usize {
        self.class_of[a.idx()]
    }

    /// Least element of each class.
    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn same(&self, a: Elem, b: Elem) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    pub fn class(&self, c: usize) -> Vec<Elem> {
        (0..self.class_of.len()).filter(|&a| self.class_of[a] == c).map(Elem::new).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.reps.len() == self.class_of.len()
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        (0..self.class_of.len()).all(|a| self.class_of[a] == self.class_of[self.reps[self.class_of[a]].idx()])
            && self.reps.iter().enumerate().all(|(c, _)| {
                let members: Vec<usize> = (0..self.class_of.len()).filter(|&a| self.class_of[a] == c).collect();
                members.iter().all(|&a| other.class_of[a] == other.class_of[members[0]])
            })
    }

    /// Compatibility with the product, properness, and
    /// `x ≡ −x ⇒ x ≡ 0`.  Returns the first failing witness.
    pub fn check(&self, ts: &FiniteTs) -> std::result::Result<(), Vec<usize>> {
        for a in ts.elems() {
            for b in ts.elems().filter(|&b| self.same(a, b)) {
                for c in ts.elems() {
                    if !self.same(ts.mul(a, c), ts.mul(b, c)) {
                        return Err(vec![a.idx(), b.idx(), c.idx()]);
                    }
                }
            }
        }
        if self.same(ts.one(), ts.zero()) {
            return Err(vec![ts.one().idx(), ts.zero().idx()]);
        }
        if let Some(x) = ts.elems().find(|&x| self.same(x, ts.neg(x)) && !self.same(x, ts.zero())) {
            return Err(vec![x.idx()]);
        }
        Ok(())
    }

    /// The quotient structure; element `i` is the class numbered `i` and is
    /// named after its least member.
    pub fn quotient_ts(&self, ts: &FiniteTs) -> Result<FiniteTs> {
        if let Err(w) = self.check(ts) {
            let names: Vec<&str> = w.iter().map(|&i| ts.name(Elem::new(i))).collect();
            return Err(Error::Precondition(format!("not a congruence: witness ({})", names.join(", "))));
        }
        let m = self.num_classes();
        let names = self.reps.iter().map(|&r| ts.name(r).to_string()).collect();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = self.class_of(ts.mul(self.reps[i], self.reps[j])) as u32;
            }
        }
        let c = |a: Elem| Elem::new(self.class_of(a));
        Ok(FiniteTs::from_parts(names, table, (c(ts.one()), c(ts.zero()), c(ts.minus_one())), None))
    }

    /// The projection as a map of element indices.
    pub fn projection(&self) -> Vec<Elem> {
        self.class_of.iter().map(|&c| Elem::new(c)).collect()
    }
}

/// The character of the quotient induced by `h` (which must be constant on
/// classes).
pub fn lift(cong: &Congruence, h: &Character) -> Character {
    Character::from_values(cong.reps().iter().map(|&r| h.value(r)).collect())
}

/// The characters of `G/H` are exactly the lifts of members of `H`; true
/// when `H` is 3-closed.
pub fn lifted_chars_match(ts: &FiniteTs, h: &[Character]) -> Result<bool> {
    let cong = Congruence::from_chars(ts, h)?;
    let q = cong.quotient_ts(ts)?;
    let actual: BTreeSet<Character> = enumerate_characters(&q).into_iter().collect();
    let lifted: BTreeSet<Character> = h.iter().map(|k| lift(&cong, k)).collect();
    Ok(actual == lifted)
}

/// The quotient `G/H` with the relation `π(a) ∈ D(π(b), π(c))` iff
/// `h(a) ∈ D₃(h(b), h(c))` for all `h ∈ H`.
pub fn quotient_model(ts: &FiniteTs, h: &[Character]) -> Result<(Congruence, RsModel)> {
    let cong = Congruence::from_chars(ts, h)?;
    let q = cong.quotient_ts(ts)?;
    let lifted: Vec<Character> = h.iter().map(|k| lift(&cong, k)).collect();
    let model = induce_d(&q, &lifted)?;
    Ok((cong, model))
}

/// Verdicts for a fan quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientFan {
    pub classes: usize,
    pub names: Vec<String>,
    pub condition_z: bool,
    /// First `(a, b, c)` of the quotient where the induced relation and the
    /// closed-form relation differ.
    pub d_difference: Option<Vec<usize>>,
    pub rs_axioms: bool,
    pub lifted_chars_match: bool,
}

impl QuotientFan {
    pub fn is_fan(&self) -> bool {
        self.condition_z && self.d_difference.is_none() && self.rs_axioms && self.lifted_chars_match
    }
}

/// `F/H` for a fan `F` and a nonempty 3-closed `H ⊆ X_F`.
pub fn quotient_fan(f: &FanModel, h: &[Character]) -> Result<(Congruence, QuotientFan)> {
    if h.is_empty() {
        return Err(Error::Precondition("the character set H must be nonempty".into()));
    }
    if !is_three_closed(h) {
        return Err(Error::Precondition("the character set H is not 3-closed".into()));
    }
    let ts = f.ts();
    let (cong, model) = quotient_model(ts, h)?;
    let q = model.ts();
    let condition_z = q.satisfies_condition_z();
    let d_difference = if condition_z {
        let closed = make_fan(q)?;
        model.d_rel().first_difference(closed.d_rel()).map(|(a, b, c)| vec![a.idx(), b.idx(), c.idx()])
    } else {
        None
    };
    let report = QuotientFan {
        classes: q.len(),
        names: q.names().to_vec(),
        condition_z,
        d_difference,
        rs_axioms: check_rs_axioms(&model).all_pass(),
        lifted_chars_match: lifted_chars_match(ts, h)?,
    };
    Ok((cong, report))
}

/// Every nonempty 3-closed subset of `X_F` with its congruence, and checks
/// that the assignment is injective and inclusion-reversing in both
/// directions.
#[derive(Clone, Debug)]
pub struct CongruenceFamily {
    /// Character indices (into the canonical listing) and the congruence.
    pub members: Vec<(Vec<usize>, Congruence)>,
    /// Two distinct subsets with the same congruence.
    pub injectivity_violation: Option<(Vec<usize>, Vec<usize>)>,
    /// Two subsets where `H₁ ⊆ H₂` and `≡_{H₂} ⊆ ≡_{H₁}` disagree.
    pub order_violation: Option<(Vec<usize>, Vec<usize>)>,
}

impl CongruenceFamily {
    pub fn holds(&self) -> bool {
        self.injectivity_violation.is_none() && self.order_violation.is_none()
    }
}

/// Largest character space for which [`all_congruences`] enumerates subsets.
pub const MAX_SUBSET_SPACE: usize = 16;

pub fn all_congruences(f: &FanModel) -> Result<CongruenceFamily> {
    let ts = f.ts();
    let x = enumerate_characters(ts);
    if x.len() > MAX_SUBSET_SPACE {
        return Err(Error::Precondition(format!("{} characters is too many to enumerate subsets", x.len())));
    }
    let mut members = Vec::new();
    for mask in 1u32..(1u32 << x.len()) {
        let idx = mask_indices(mask, x.len());
        let h: Vec<Character> = idx.iter().map(|&i| x[i].clone()).collect();
        if is_three_closed(&h) {
            members.push((mask, idx, Congruence::from_chars(ts, &h)?));
        }
    }
    let mut injectivity_violation = None;
    let mut order_violation = None;
    for (m1, i1, c1) in &members {
        for (m2, i2, c2) in &members {
            if m1 < m2 && c1 == c2 && injectivity_violation.is_none() {
                injectivity_violation = Some((i1.clone(), i2.clone()));
            }
            let subset = m1 & !m2 == 0;
            if subset != c2.is_finer_than(c1) && order_violation.is_none() {
                order_violation = Some((i1.clone(), i2.clone()));
            }
        }
    }
    Ok(CongruenceFamily {
        members: members.into_iter().map(|(_, i, c)| (i, c)).collect(),
        injectivity_violation,
        order_violation,
    })
}

/// The quotient by a proper ideal and its unit part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealQuotient {
    /// Indices of the characters with zero-set exactly `I`.
    pub fiber: Vec<usize>,
    pub names: Vec<String>,
    /// Size of `(G/I) \ {π(0)}`.
    pub units: usize,
    /// First pair outside `I` where "same class" disagrees with
    /// "`az = bz` for some `z ∉ I`".
    pub witness_violation: Option<Vec<usize>>,
    /// First class outside zero whose square is not the class of `1`.
    pub exponent_two_violation: Option<usize>,
    pub one_ne_minus_one: bool,
    /// First triple of quotient elements breaking [RSG-fan].
    pub rsg_violation: Option<Vec<usize>>,
    /// First ideal `J ⊃ I` whose image is not all of `G/I` (element names).
    pub collapse_violation: Option<Vec<String>>,
}

impl IdealQuotient {
    /// `(G/I) \ {π(0)}` is a group of exponent 2 with `1 ≠ −1` satisfying
    /// [RSG-fan].
    pub fn is_rsg_fan(&self) -> bool {
        self.exponent_two_violation.is_none() && self.one_ne_minus_one && self.rsg_violation.is_none()
    }

    pub fn holds(&self) -> bool {
        self.is_rsg_fan() && self.witness_violation.is_none() && self.collapse_violation.is_none()
    }
}

/// `G/I` for a proper ideal `I`, using the characters of `m` with zero-set
/// exactly `I`.  Returns the congruence, the quotient model and the report.
pub fn ideal_quotient(m: &RsModel, ideal: &ElemSet) -> Result<(Congruence, RsModel, IdealQuotient)> {
    let ts = m.ts();
    if !ts.is_ideal(ideal) {
        return Err(Error::Precondition(format!("{{{}}} is not an ideal", ts.set_names(ideal).join(", "))));
    }
    if ideal.contains(ts.one().idx()) {
        return Err(Error::Precondition("the ideal must be proper".into()));
    }
    let x = m.rs_characters();
    let fiber: Vec<usize> = (0..x.len()).filter(|&i| &x[i].zero_set() == ideal).collect();
    if fiber.is_empty() {
        return Err(Error::Precondition(format!("no character has zero-set {{{}}}", ts.set_names(ideal).join(", "))));
    }
    let h: Vec<Character> = fiber.iter().map(|&i| x[i].clone()).collect();
    let (cong, model) = quotient_model(ts, &h)?;
    let q = model.ts();

    let outside: Vec<Elem> = ts.elems().filter(|a| !ideal.contains(a.idx())).collect();
    let mut witness_violation = None;
    'pairs: for &a in &outside {
        for &b in &outside {
            let by_witness = outside.iter().any(|&z| ts.mul(a, z) == ts.mul(b, z));
            if by_witness != cong.same(a, b) {
                witness_violation = Some(vec![a.idx(), b.idx()]);
                break 'pairs;
            }
        }
    }
    let units: Vec<Elem> = q.elems().filter(|&c| c != q.zero()).collect();
    let exponent_two_violation = units.iter().find(|&&c| q.sq(c) != q.one()).map(|c| c.idx());
    let one_ne_minus_one = q.one() != q.minus_one();
    let rsg_violation = rsg_fan_violation(q, &units, |a, b, c| model.in_d(a, b, c));

    let collapse_violation = ts
        .proper_ideals()
        .into_iter()
        .chain(std::iter::once(ts.full_set()))
        .filter(|j| ideal.is_subset(j) && j != ideal)
        .find(|j| {
            let image: BTreeSet<usize> = FiniteTs::members(j).map(|a| cong.class_of(a)).collect();
            image.len() != q.len()
        })
        .map(|j| ts.set_names(&j));

    let report = IdealQuotient {
        fiber,
        names: q.names().to_vec(),
        units: units.len(),
        witness_violation,
        exponent_two_violation,
        one_ne_minus_one,
        rsg_violation,
        collapse_violation,
    };
    Ok((cong, model, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    fn f1() -> FiniteTs {
        Presentation::new(&["x"]).build().unwrap()
    }

    #[test]
    fn full_space_is_identity() {
        let ts = f1();
        let x = enumerate_characters(&ts);
        assert!(Congruence::from_chars(&ts, &x).unwrap().is_identity());
        assert!(Congruence::from_chars(&ts, &[]).is_err());
    }

    #[test]
    fn single_character_of_f1() {
        let ts = f1();
        let x = enumerate_characters(&ts);
        // h2 is the character with x ↦ 1
        let h2 = x.iter().find(|h| h.value(ts.elem("x").unwrap()) == Three::One).unwrap().clone();
        let cong = Congruence::from_chars(&ts, std::slice::from_ref(&h2)).unwrap();
        assert_eq!(cong.num_classes(), 3);
        let e = |s: &str| ts.elem(s).unwrap();
        assert!(cong.same(e("x"), e("1")) && cong.same(e("x^2"), e("1")));
        assert!(cong.same(e("-x"), e("-1")) && cong.same(e("-x^2"), e("-1")));
        let f = make_fan(&ts).unwrap();
        let (_, q) = quotient_fan(&f, &[h2]).unwrap();
        assert!(q.is_fan());
        assert_eq!(q.names, vec!["1", "0", "−1"]);
    }

    #[test]
    fn f1_congruences() {
        let f = make_fan(&f1()).unwrap();
        let fam = all_congruences(&f).unwrap();
        assert!(fam.holds());
        // every nonempty subset is 3-closed: triple products of ±-valued
        // characters on one generator stay inside any subset
        assert_eq!(fam.members.len(), 7);
    }

    #[test]
    fn maximal_ideal_of_f1() {
        let ts = f1();
        let f = make_fan(&ts).unwrap();
        let i = ts.set_by_names(&["0", "x", "−x", "x²", "−x²"]).unwrap();
        let (_, m, r) = ideal_quotient(&f, &i).unwrap();
        assert_eq!(m.ts().len(), 3);
        assert_eq!(r.units, 2);
        assert!(r.holds(), "{r:?}");
        assert!(ideal_quotient(&f, &ts.full_set()).is_err());
        assert!(ideal_quotient(&f, &ts.set_by_names(&["x"]).unwrap()).is_err());
    }

    #[test]
    fn rejects_bad_partitions() {
        let ts = f1();
        // x ≡ −x without x ≡ 0
        let cong = Congruence::from_key(&ts, |a| ts.sq(a));
        assert!(cong.quotient_ts(&ts).is_err());
    }
}
