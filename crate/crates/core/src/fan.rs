//! Fans: the closed-form representation on condition-[Z] structures, the
//! two dual descriptions of fans, the unit group, homomorphisms and ideals.

use crate::characters::{enumerate_characters, is_q_fan, is_three_closed, same_set, Character};
use crate::error::{Error, Result};
use crate::represent::{check_rs_axioms, dt_from_trep, induce_d, Relation3, RsModel};
use crate::three::Three;
use crate::ts_core::{Elem, ElemSet, FiniteTs};
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};
use std::ops::Deref;

/// A real semigroup whose relations come from the closed forms on a
/// condition-[Z] structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanModel {
    model: RsModel,
}

impl FanModel {
    pub fn model(&self) -> &RsModel {
        &self.model
    }

    pub fn into_model(self) -> RsModel {
        self.model
    }
}

impl Deref for FanModel {
    type Target = RsModel;

    fn deref(&self) -> &RsModel {
        &self.model
    }
}

/// Condition [Z] as a `Result`, with the failing pair named.
pub fn require_condition_z(ts: &FiniteTs) -> Result<()> {
    ts.condition_z().map_err(|(a, b)| Error::ConditionZ { a: ts.name(a).to_string(), b: ts.name(b).to_string() })
}

/// `D(a,b) = a·Id ∪ b·Id ∪ {x : xa = −xb ∧ x = a²x}`.
pub fn d_formula(ts: &FiniteTs, a: Elem, b: Elem) -> ElemSet {
    let mut s = ts.empty_set();
    for p in ts.idempotents() {
        s.insert(ts.mul(a, p).idx());
        s.insert(ts.mul(b, p).idx());
    }
    let a2 = ts.sq(a);
    for x in ts.elems() {
        if ts.mul(x, a) == ts.neg(ts.mul(x, b)) && ts.mul(a2, x) == x {
            s.insert(x.idx());
        }
    }
    s
}

/// The four-case transversal clause, with `b = −a` tested first:
/// `a·G` if `b = −a`; `{a}` if `Z(a) ⊂ Z(b)`; `{b}` if `Z(b) ⊂ Z(a)`;
/// `{a, b}` if `Z(a) = Z(b)`.  Zero-set inclusion is divisibility.
pub fn dt_formula(ts: &FiniteTs, a: Elem, b: Elem) -> ElemSet {
    if b == ts.neg(a) {
        return ts.principal_ideal(a);
    }
    match (ts.divides(a, b), ts.divides(b, a)) {
        (true, false) => ts.set_of([a]),
        (false, true) => ts.set_of([b]),
        (true, true) => ts.set_of([a, b]),
        (false, false) => unreachable!("zero-sets are comparable under condition [Z]"),
    }
}

/// Builds the fan on `ts`.  Requires condition [Z].
pub fn make_fan(ts: &FiniteTs) -> Result<FanModel> {
    require_condition_z(ts)?;
    let n = ts.len();
    let mut d = Relation3::empty(n);
    let mut dt = Relation3::empty(n);
    for b in ts.elems() {
        for c in ts.elems() {
            for a in FiniteTs::members(&d_formula(ts, b, c)) {
                d.insert(a, b, c);
            }
            for a in FiniteTs::members(&dt_formula(ts, b, c)) {
                dt.insert(a, b, c);
            }
        }
    }
    let model = RsModel::from_d(ts.clone(), d)?;
    if let Some((a, b, c)) = model.dt_rel().first_difference(&dt) {
        return Err(Error::Invariant(format!(
            "closed-form transversal relation disagrees with [t-rep] at ({}, {}, {})",
            ts.name(a),
            ts.name(b),
            ts.name(c)
        )));
    }
    Ok(FanModel { model })
}

/// Result of [`check_interdefinability`]; each field holds the first
/// differing triple, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interdefinability {
    /// `Dᵗ` obtained from the `D` clause by [t-rep] vs the `Dᵗ` clause.
    pub dt_from_d: Option<Vec<usize>>,
    /// `D` obtained from the `Dᵗ` clause via `a ∈ Dᵗ(a²b, a²c)` vs the `D` clause.
    pub d_from_dt: Option<Vec<usize>>,
}

impl Interdefinability {
    pub fn holds(&self) -> bool {
        self.dt_from_d.is_none() && self.d_from_dt.is_none()
    }
}

fn triple(t: (Elem, Elem, Elem)) -> Vec<usize> {
    vec![t.0.idx(), t.1.idx(), t.2.idx()]
}

/// Checks that each closed-form clause determines the other.
pub fn check_interdefinability(ts: &FiniteTs) -> Result<Interdefinability> {
    require_condition_z(ts)?;
    let n = ts.len();
    let d = Relation3::from_fn(n, |a, b, c| d_formula(ts, Elem::new(b), Elem::new(c)).contains(a));
    let dt = Relation3::from_fn(n, |a, b, c| dt_formula(ts, Elem::new(b), Elem::new(c)).contains(a));
    let dt_from_d = dt_from_trep(ts, &d).first_difference(&dt).map(triple);
    let d_back = Relation3::from_fn(n, |a, b, c| {
        let (a, b, c) = (Elem::new(a), Elem::new(b), Elem::new(c));
        let a2 = ts.sq(a);
        dt.contains(a, ts.mul(a2, b), ts.mul(a2, c))
    });
    let d_from_dt = d_back.first_difference(&d).map(triple);
    Ok(Interdefinability { dt_from_d, d_from_dt })
}

/// Subsets `S` with `S·S ⊆ S`, `S ∪ −S = G` and `S ∩ −S` a proper prime
/// ideal, in a deterministic order.
pub fn char_subsemigroups(ts: &FiniteTs) -> Vec<ElemSet> {
    let lattice = ts.ideals();
    let mut out = Vec::new();
    for (p, &prime) in lattice.ideals.iter().zip(&lattice.prime) {
        if !prime {
            continue;
        }
        // one representative per pair {x, −x} outside P
        let mut pairs: Vec<Elem> = Vec::new();
        for x in ts.elems() {
            if !p.contains(x.idx()) && x < ts.neg(x) {
                pairs.push(x);
            }
        }
        let mut base = p.clone();
        for x in ts.elems().filter(|&x| !p.contains(x.idx()) && ts.is_idempotent(x)) {
            base.insert(x.idx());
        }
        let free: Vec<Elem> =
            pairs.into_iter().filter(|&x| !base.contains(x.idx()) && !base.contains(ts.neg(x).idx())).collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut s = base.clone();
            for (i, &x) in free.iter().enumerate() {
                let pick = if mask >> i & 1 == 0 { x } else { ts.neg(x) };
                s.insert(pick.idx());
            }
            if is_product_closed(ts, &s) {
                out.push(s);
            }
        }
    }
    out
}

pub fn is_product_closed(ts: &FiniteTs, s: &ElemSet) -> bool {
    FiniteTs::members(s).all(|a| FiniteTs::members(s).all(|b| s.contains(ts.mul(a, b).idx())))
}

/// Verdicts of [`fan_equivalence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanEquivalence {
    /// `X` is the whole character space.
    pub is_fan1: bool,
    /// The induced model is a real semigroup, `X` is 3-closed, and every
    /// sign subsemigroup comes from a member of `X`.
    pub is_fan2: bool,
    pub is_qfan: bool,
    pub rs_axioms: bool,
    pub three_closed: bool,
    pub subsemigroups_realized: bool,
    pub agree: bool,
}

/// Compares the two dual descriptions of a fan on `(G, X)`.
pub fn fan_equivalence(ts: &FiniteTs, x: &[Character]) -> Result<FanEquivalence> {
    require_condition_z(ts)?;
    let full = enumerate_characters(ts);
    let all: BTreeSet<&Character> = full.iter().collect();
    if !x.iter().all(|h| all.contains(h)) {
        return Err(Error::Precondition("character set is not contained in X_G".into()));
    }
    let is_fan1 = same_set(x, &full);
    let rs_axioms = !x.is_empty() && check_rs_axioms(&induce_d(ts, x)?).all_pass();
    let three_closed = !x.is_empty() && is_three_closed(x);
    let subsemigroups_realized = char_subsemigroups(ts).iter().all(|s| x.iter().any(|h| h.nonneg() == *s));
    let is_fan2 = rs_axioms && three_closed && subsemigroups_realized;
    Ok(FanEquivalence {
        is_fan1,
        is_fan2,
        is_qfan: is_q_fan(ts, x),
        rs_axioms,
        three_closed,
        subsemigroups_realized,
        agree: is_fan1 == is_fan2,
    })
}

/// The unit group with the restricted representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitsRsg {
    pub units: Vec<Elem>,
    /// First `(a, b, c)` of units where `a ∈ D(b,c)` disagrees with
    /// "`b = −c` or `a ∈ {b, c}`".
    pub rsg_violation: Option<Vec<usize>>,
    /// First triple of units where `Dᵗ` and `D` differ.
    pub dt_violation: Option<Vec<usize>>,
}

impl UnitsRsg {
    pub fn is_rsg_fan(&self) -> bool {
        self.rsg_violation.is_none() && self.dt_violation.is_none()
    }
}

/// The [RSG-fan] clause on a set of elements closed under negation:
/// `a ∈ D(b,c)` iff `b = −c` or `a ∈ {b, c}`.
pub fn rsg_fan_violation(
    ts: &FiniteTs,
    carrier: &[Elem],
    in_d: impl Fn(Elem, Elem, Elem) -> bool,
) -> Option<Vec<usize>> {
    for &b in carrier {
        for &c in carrier {
            for &a in carrier {
                let expected = b == ts.neg(c) || a == b || a == c;
                if in_d(a, b, c) != expected {
                    return Some(vec![a.idx(), b.idx(), c.idx()]);
                }
            }
        }
    }
    None
}

pub fn units_rsg(f: &FanModel) -> UnitsRsg {
    let ts = f.ts();
    let units = ts.units();
    let rsg_violation = rsg_fan_violation(ts, &units, |a, b, c| f.in_d(a, b, c));
    let mut dt_violation = None;
    'outer: for &b in &units {
        for &c in &units {
            for &a in &units {
                if f.in_d(a, b, c) != f.in_dt(a, b, c) {
                    dt_violation = Some(vec![a.idx(), b.idx(), c.idx()]);
                    break 'outer;
                }
            }
        }
    }
    UnitsRsg { units, rsg_violation, dt_violation }
}

/// Whether `f` (given by images of the elements of `src`) preserves the
/// constants and the product.
pub fn is_ts_hom(src: &FiniteTs, dst: &FiniteTs, f: &[Elem]) -> bool {
    f.len() == src.len()
        && f[src.one().idx()] == dst.one()
        && f[src.zero().idx()] == dst.zero()
        && f[src.minus_one().idx()] == dst.minus_one()
        && src.elems().all(|a| src.elems().all(|b| f[src.mul(a, b).idx()] == dst.mul(f[a.idx()], f[b.idx()])))
}

/// First `(a, b, c)` with `a ∈ D_F(b,c)` but `f(a) ∉ D_H(f(b), f(c))`.
///
/// Errors if `f` is not a TS-homomorphism.
pub fn check_hom_preservation(f_model: &FanModel, target: &RsModel, f: &[Elem]) -> Result<Option<Vec<usize>>> {
    let src = f_model.ts();
    if !is_ts_hom(src, target.ts(), f) {
        return Err(Error::Precondition("map does not preserve product and constants".into()));
    }
    for b in src.elems() {
        for c in src.elems() {
            for a in FiniteTs::members(f_model.d(b, c)) {
                if !target.in_d(f[a.idx()], f[b.idx()], f[c.idx()]) {
                    return Ok(Some(vec![a.idx(), b.idx(), c.idx()]));
                }
            }
        }
    }
    Ok(None)
}

/// A character as a map into the structure `3` of [`crate::represent::three_rs`].
pub fn character_as_map(h: &Character) -> Vec<Elem> {
    h.values().iter().map(|&v| Elem::new(Three::LISTING.iter().position(|&w| w == v).unwrap())).collect()
}

/// Result of [`check_fan_ideals`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanIdeals {
    pub ideals: usize,
    /// Names of the first ideal that is not saturated or not prime.
    pub bad_ideal: Option<Vec<String>>,
    pub subsemigroups: usize,
    /// Names of the first subsemigroup where "saturated" disagrees with
    /// "contains Id(G) and S ∩ −S is an ideal".
    pub criterion_violation: Option<Vec<String>>,
}

impl FanIdeals {
    pub fn holds(&self) -> bool {
        self.bad_ideal.is_none() && self.criterion_violation.is_none()
    }
}

/// Every submonoid (product-closed, containing `1`) of `ts` that contains
/// `base`, in discovery order.
pub fn submonoids_containing(ts: &FiniteTs, base: &ElemSet) -> Vec<ElemSet> {
    let close = |s: &ElemSet| -> ElemSet {
        let mut s = s.clone();
        s.insert(ts.one().idx());
        let mut queue: VecDeque<Elem> = FiniteTs::members(&s).collect();
        while let Some(a) = queue.pop_front() {
            let cur: Vec<Elem> = FiniteTs::members(&s).collect();
            for b in cur {
                let p = ts.mul(a, b);
                if !s.put(p.idx()) {
                    queue.push_back(p);
                }
            }
        }
        s
    };
    let start = close(base);
    let mut seen: BTreeSet<ElemSet> = BTreeSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for a in ts.elems().filter(|a| !s.contains(a.idx())) {
            let mut t = s.clone();
            t.insert(a.idx());
            let t = close(&t);
            if seen.insert(t.clone()) {
                order.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    order
}

/// Every ideal is saturated and prime (when proper), and a submonoid is
/// saturated exactly when it contains `Id(G)` and `S ∩ −S` is an ideal.
pub fn check_fan_ideals(f: &FanModel) -> FanIdeals {
    let ts = f.ts();
    let lattice = ts.ideals();
    let bad_ideal = lattice
        .ideals
        .iter()
        .find(|i| !f.is_saturated(i) || (!i.contains(ts.one().idx()) && !ts.is_prime_ideal(i)))
        .map(|i| ts.set_names(i));
    let subs = submonoids_containing(ts, &ts.set_of([ts.one()]));
    let ids = ts.set_of(ts.idempotents());
    let criterion_violation = subs
        .iter()
        .find(|s| {
            let mut sym = (*s).clone();
            sym.intersect_with(&ts.neg_set(s));
            let expected = ids.is_subset(s) && ts.is_ideal(&sym);
            f.is_saturated(s) != expected
        })
        .map(|s| ts.set_names(s));
    FanIdeals { ideals: lattice.ideals.len(), bad_ideal, subsemigroups: subs.len(), criterion_violation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;
    use crate::presentation::Presentation;
    use crate::represent::three_rs;

    fn f1() -> FiniteTs {
        Presentation::new(&["x"]).build().unwrap()
    }

    #[test]
    fn three_fan() {
        let m = three_rs();
        let f = make_fan(m.ts()).unwrap();
        assert_eq!(f.model(), &m);
        let ts = f.ts();
        assert_eq!(f.dt(ts.one(), ts.minus_one()).count_ones(..), 3);
    }

    #[test]
    fn f1_transversal_of_opposites() {
        let ts = f1();
        let f = make_fan(&ts).unwrap();
        let x = ts.elem("x").unwrap();
        assert_eq!(ts.set_names(f.dt(x, ts.neg(x))), vec!["0", "x", "−x", "x²", "−x²"]);
        assert!(check_rs_axioms(&f).all_pass());
    }

    #[test]
    fn condition_z_required() {
        let free2 = Presentation::new(&["x", "y"]).build().unwrap();
        match make_fan(&free2) {
            Err(Error::ConditionZ { a, b }) => assert_eq!((a.as_str(), b.as_str()), ("x", "y")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn necessary_condition_on_free_two_generators() {
        // The full space is a q-fan but the induced relation is not a real
        // semigroup, as [Z] fails.
        let ts = Presentation::new(&["x", "y"]).build().unwrap();
        let x = enumerate_characters(&ts);
        assert!(is_q_fan(&ts, &x));
        let r = check_rs_axioms(&induce_d(&ts, &x).unwrap());
        assert!(!r.all_pass());
    }

    #[test]
    fn equivalence_on_f1() {
        let ts = f1();
        let x = enumerate_characters(&ts);
        let e = fan_equivalence(&ts, &x).unwrap();
        assert!(e.is_fan1 && e.is_fan2 && e.agree && e.is_qfan);
        let e = fan_equivalence(&ts, &x[..2]).unwrap();
        assert!(!e.is_fan1 && !e.is_fan2 && e.agree);
        let three = three_rs();
        let id = enumerate_characters(three.ts());
        let e = fan_equivalence(three.ts(), &id).unwrap();
        assert!(e.is_fan1 && e.is_fan2);
    }

    #[test]
    fn sign_subsemigroups_match_characters() {
        let ts = f1();
        let subs = char_subsemigroups(&ts);
        let x = enumerate_characters(&ts);
        assert_eq!(subs.len(), x.len());
    }

    #[test]
    fn units_of_f1() {
        let f = make_fan(&f1()).unwrap();
        let u = units_rsg(&f);
        assert_eq!(u.units.len(), 2);
        assert!(u.is_rsg_fan());
    }

    #[test]
    fn homs_preserve() {
        let ts = f1();
        let f = make_fan(&ts).unwrap();
        let id: Vec<Elem> = ts.elems().collect();
        assert_eq!(check_hom_preservation(&f, &f, &id).unwrap(), None);
        let three = three_rs();
        for h in enumerate_characters(&ts) {
            assert_eq!(check_hom_preservation(&f, &three, &character_as_map(&h)).unwrap(), None);
        }
        let bad = vec![ts.one(); ts.len()];
        assert!(check_hom_preservation(&f, &f, &bad).is_err());
    }

    #[test]
    fn ideals_of_f1() {
        let ts = f1();
        let f = make_fan(&ts).unwrap();
        let r = check_fan_ideals(&f);
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.ideals, 3);
        let m = ts.set_by_names(&["0", "x", "-x", "x^2", "-x^2"]).unwrap();
        assert!(f.is_saturated(&m) && ts.is_prime_ideal(&m));
    }

    #[test]
    fn interdefinable_on_f1() {
        assert!(check_interdefinability(&f1()).unwrap().holds());
        assert!(check_interdefinability(three_rs().ts()).unwrap().holds());
    }

    #[test]
    fn f2_transversal_with_nested_zero_sets() {
        let ts = crate::examples::f2();
        let f = make_fan(&ts).unwrap();
        let (z, x) = (ts.elem("z").unwrap(), ts.elem("x").unwrap());
        // Z(z) ⊂ Z(x) strictly: the smaller zero-set wins
        let zs = |a| enumerate_characters(&ts).iter().filter(|h| h.value(a) == crate::three::Three::Zero).count();
        assert!(zs(z) < zs(x));
        assert_eq!(ts.set_names(f.dt(z, x)), vec!["z"]);
        assert_eq!(ts.set_names(f.dt(x, z)), vec!["z"]);
        // the character-induced transversal relation agrees
        let (_, dt) = crate::represent::induce_relations(&ts, &enumerate_characters(&ts));
        assert_eq!(ts.set_names(dt.row(z, x)), vec!["z"]);
    }

    #[test]
    fn units_of_f2_and_f4() {
        let f2 = make_fan(&crate::examples::f2()).unwrap();
        assert_eq!(f2.ts().set_names(&f2.ts().set_of(units_rsg(&f2).units)), vec!["1", "−1"]);
        let ts = crate::examples::f4();
        let f4 = make_fan(&ts).unwrap();
        let u = units_rsg(&f4);
        assert_eq!(ts.set_names(&ts.set_of(u.units.iter().copied())), vec!["1", "−1", "z", "−z"]);
        assert!(u.is_rsg_fan());
        assert!(check_interdefinability(&ts).unwrap().holds());
    }
}
