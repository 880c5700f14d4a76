//! Characters `G → 3`, zero-sets, the specialization order, separation and
//! 3-closedness.

use crate::error::{Error, Result};
use crate::order::Poset;
use crate::three::Three;
use crate::ts_core::{Elem, ElemSet, FiniteTs};
use serde::Serialize;
use std::cmp::Reverse;
use std::collections::BTreeSet;

/// A TS-homomorphism into `3`, stored as a dense value vector indexed by
/// element.  Equality is pointwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Character {
    values: Vec<Three>,
}

/// A set of characters over one TS.  Order matters only for labels.
pub type CharSet = Vec<Character>;

impl Character {
    /// Wraps a value vector without checking that it is a character.
    pub fn from_values(values: Vec<Three>) -> Character {
        Character { values }
    }

    /// Wraps a value vector after checking the character conditions.
    pub fn new(ts: &FiniteTs, values: Vec<Three>) -> Result<Character> {
        if values.len() != ts.len() {
            return Err(Error::Precondition(format!(
                "value vector has length {}, structure has {} elements",
                values.len(),
                ts.len()
            )));
        }
        let h = Character { values };
        if !is_character(ts, &h) {
            return Err(Error::Precondition("map does not preserve product and constants".into()));
        }
        Ok(h)
    }

    pub fn value(&self, a: Elem) -> Three {
        self.values[a.idx()]
    }

    pub fn values(&self) -> &[Three] {
        &self.values
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a * b).collect() }
    }

    pub fn sq(&self) -> Character {
        self.mul(self)
    }

    /// `g·h·k`; a character again whenever the three are characters.
    pub fn triple(g: &Character, h: &Character, k: &Character) -> Character {
        g.mul(h).mul(k)
    }

    /// `Z(h) = h⁻¹[0]`.
    pub fn zero_set(&self) -> ElemSet {
        self.fiber(|v| v == Three::Zero)
    }

    /// `h⁻¹[1]`.
    pub fn ones(&self) -> ElemSet {
        self.fiber(|v| v == Three::One)
    }

    /// `h⁻¹[{0, 1}]`.
    pub fn nonneg(&self) -> ElemSet {
        self.fiber(|v| v != Three::MinusOne)
    }

    fn fiber(&self, pred: impl Fn(Three) -> bool) -> ElemSet {
        let mut s = ElemSet::with_capacity(self.values.len());
        for (i, &v) in self.values.iter().enumerate() {
            if pred(v) {
                s.insert(i);
            }
        }
        s
    }

    pub fn zero_count(&self) -> usize {
        self.values.iter().filter(|&&v| v == Three::Zero).count()
    }

    /// Values as `1 / 0 / -1` integers.
    pub fn as_ints(&self) -> Vec<i8> {
        self.values.iter().map(|v| v.to_i8()).collect()
    }
}

/// Characters of `G × K` obtained by composing the characters `xg` of `G`
/// and `xk` of `K` with the projections.
pub fn product_characters(k_len: usize, xg: &[Character], xk: &[Character]) -> CharSet {
    let g_len = xg.first().map_or(0, |h| h.values().len());
    let first = xg.iter().map(|h| Character::from_values((0..g_len * k_len).map(|i| h.values()[i / k_len]).collect()));
    let second = xk.iter().map(|h| Character::from_values((0..g_len * k_len).map(|i| h.values()[i % k_len]).collect()));
    first.chain(second).collect()
}

/// Whether `h` preserves the constants and the product of `ts`.
pub fn is_character(ts: &FiniteTs, h: &Character) -> bool {
    h.values.len() == ts.len()
        && h.value(ts.one()) == Three::One
        && h.value(ts.zero()) == Three::Zero
        && h.value(ts.minus_one()) == Three::MinusOne
        && ts.elems().all(|a| ts.elems().all(|b| h.value(ts.mul(a, b)) == h.value(a) * h.value(b)))
}

/// Label of the `i`-th character (0-based) in canonical order: `h1`, `h2`, ...
pub fn label(i: usize) -> String {
    format!("h{}", i + 1)
}

/// Canonical sort key: larger zero-sets first, then the values on the
/// generators compared from the last generator to the first, with the
/// value order `0 < 1 < -1`.
pub fn canonical_key(ts: &FiniteTs, h: &Character) -> (Reverse<usize>, Vec<Three>, Vec<Three>) {
    let on_gens = ts.generators().iter().rev().map(|&g| h.value(g)).collect();
    (Reverse(h.zero_count()), on_gens, h.values.clone())
}

/// Extends generator values multiplicatively from the constants.  Returns
/// `None` on a clash; unreached elements stay `None`.
fn extend(ts: &FiniteTs, gens: &[Elem], vals: &[Three]) -> Option<Vec<Option<Three>>> {
    let mut out: Vec<Option<Three>> = vec![None; ts.len()];
    let mut queue = Vec::new();
    for (e, v) in [(ts.one(), Three::One), (ts.zero(), Three::Zero), (ts.minus_one(), Three::MinusOne)] {
        out[e.idx()] = Some(v);
        queue.push(e);
    }
    for (&g, &v) in gens.iter().zip(vals) {
        match out[g.idx()] {
            Some(w) if w != v => return None,
            Some(_) => {}
            None => {
                out[g.idx()] = Some(v);
                queue.push(g);
            }
        }
    }
    while let Some(a) = queue.pop() {
        let va = out[a.idx()].expect("queued elements have values");
        for (&g, &vg) in gens.iter().zip(vals) {
            let p = ts.mul(a, g);
            let vp = va * vg;
            match out[p.idx()] {
                Some(w) if w != vp => return None,
                Some(_) => {}
                None => {
                    out[p.idx()] = Some(vp);
                    queue.push(p);
                }
            }
        }
    }
    Some(out)
}

/// The full character space `X_G = Hom(G, 3)` in canonical order.
///
/// Backtracks over the values of the generators (declaration order, values
/// tried `0, 1, -1`), extending multiplicatively and pruning on clashes;
/// every complete assignment is verified against the whole table.
pub fn enumerate_characters(ts: &FiniteTs) -> CharSet {
    let gens = ts.generators().to_vec();
    let mut found = Vec::new();
    let mut vals = Vec::with_capacity(gens.len());
    backtrack(ts, &gens, &mut vals, &mut found);
    found.sort_by_key(|h| canonical_key(ts, h));
    found
}

fn backtrack(ts: &FiniteTs, gens: &[Elem], vals: &mut Vec<Three>, found: &mut Vec<Character>) {
    let Some(partial) = extend(ts, &gens[..vals.len()], vals) else {
        return;
    };
    if vals.len() == gens.len() {
        if partial.iter().all(Option::is_some) {
            let h = Character { values: partial.into_iter().map(Option::unwrap).collect() };
            if is_character(ts, &h) {
                found.push(h);
            }
        }
        return;
    }
    for v in [Three::Zero, Three::One, Three::MinusOne] {
        vals.push(v);
        backtrack(ts, gens, vals, found);
        vals.pop();
    }
}

/// `g ⇝ h` (h is a specialization of g): `h = h²g` pointwise.
pub fn specializes(g: &Character, h: &Character) -> bool {
    h.sq().mul(g) == *h
}

/// `g ⇝ h` via `h⁻¹[1] ⊆ g⁻¹[1]`.
pub fn specializes_by_ones(g: &Character, h: &Character) -> bool {
    h.ones().is_subset(&g.ones())
}

/// `g ⇝ h` via `g⁻¹[{0,1}] ⊆ h⁻¹[{0,1}]`.
pub fn specializes_by_nonneg(g: &Character, h: &Character) -> bool {
    g.nonneg().is_subset(&h.nonneg())
}

/// `g ⇝ h` via `Z(g) ⊆ Z(h)` and agreement wherever `h` is nonzero.
pub fn specializes_by_zero_sets(g: &Character, h: &Character) -> bool {
    g.zero_set().is_subset(&h.zero_set()) && g.values.iter().zip(&h.values).all(|(&a, &b)| b == Three::Zero || a == b)
}

/// How two zero-sets compare under inclusion.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ZeroSetOrder {
    Equal,
    LeftInRight,
    RightInLeft,
    Incomparable,
}

pub fn compare_zero_sets(g: &Character, h: &Character) -> ZeroSetOrder {
    let (zg, zh) = (g.zero_set(), h.zero_set());
    match (zg.is_subset(&zh), zh.is_subset(&zg)) {
        (true, true) => ZeroSetOrder::Equal,
        (true, false) => ZeroSetOrder::LeftInRight,
        (false, true) => ZeroSetOrder::RightInLeft,
        (false, false) => ZeroSetOrder::Incomparable,
    }
}

/// `Z(g) ⊆ Z(h)` decided algebraically by `h = hg²`.
pub fn zero_set_included(g: &Character, h: &Character) -> bool {
    h.mul(&g.sq()) == *h
}

/// The specialization order on `x`: `i ≤ j` iff `x[i] ⇝ x[j]`.  Generic
/// points sit at the bottom and their specializations above them.
pub fn specialization_poset(x: &[Character]) -> Poset {
    Poset::from_relation(x.len(), |i, j| specializes(&x[i], &x[j]))
        .expect("specialization is a partial order on characters")
}

/// Whether the specializations of every point form a chain.
pub fn is_root_system(p: &Poset) -> bool {
    (0..p.len()).all(|a| p.is_chain(&p.up_set(a)))
}

/// First triple (by index) whose product falls outside `x`.
pub fn three_closed(x: &[Character]) -> std::result::Result<(), (usize, usize, usize)> {
    let members: BTreeSet<&Character> = x.iter().collect();
    for (i, g) in x.iter().enumerate() {
        for (j, h) in x.iter().enumerate().skip(i) {
            let gh = g.mul(h);
            for (k, l) in x.iter().enumerate().skip(j) {
                if !members.contains(&gh.mul(l)) {
                    return Err((i, j, k));
                }
            }
        }
    }
    Ok(())
}

pub fn is_three_closed(x: &[Character]) -> bool {
    three_closed(x).is_ok()
}

/// Smallest 3-closed superset of `x`: triple products are added until
/// nothing new appears.  The members of `x` keep their positions.
pub fn three_closure(x: &[Character]) -> CharSet {
    let mut out: Vec<Character> = Vec::new();
    let mut seen = BTreeSet::new();
    for h in x {
        if seen.insert(h.clone()) {
            out.push(h.clone());
        }
    }
    loop {
        let mut added = Vec::new();
        for (i, g) in out.iter().enumerate() {
            for (j, h) in out.iter().enumerate().skip(i) {
                let gh = g.mul(h);
                for l in out.iter().skip(j) {
                    let t = gh.mul(l);
                    if !seen.contains(&t) {
                        seen.insert(t.clone());
                        added.push(t);
                    }
                }
            }
        }
        if added.is_empty() {
            return out;
        }
        out.extend(added);
    }
}

/// First pair of distinct elements that `x` does not separate.
pub fn separates(ts: &FiniteTs, x: &[Character]) -> std::result::Result<(), (Elem, Elem)> {
    for a in ts.elems() {
        for b in ts.elems().filter(|&b| b > a) {
            if x.iter().all(|h| h.value(a) == h.value(b)) {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

/// Why a character set fails to be a q-fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum QFanFailure {
    Empty,
    NotThreeClosed { triple: (usize, usize, usize) },
    NotSeparating { pair: (Elem, Elem) },
}

/// 3-closed and separating.
pub fn q_fan(ts: &FiniteTs, x: &[Character]) -> std::result::Result<(), QFanFailure> {
    if x.is_empty() {
        return Err(QFanFailure::Empty);
    }
    three_closed(x).map_err(|triple| QFanFailure::NotThreeClosed { triple })?;
    separates(ts, x).map_err(|pair| QFanFailure::NotSeparating { pair })?;
    Ok(())
}

pub fn is_q_fan(ts: &FiniteTs, x: &[Character]) -> bool {
    q_fan(ts, x).is_ok()
}

/// Same members, ignoring order and repeats.
pub fn same_set(x: &[Character], y: &[Character]) -> bool {
    x.iter().collect::<BTreeSet<_>>() == y.iter().collect::<BTreeSet<_>>()
}

/// For a 3-closed `x ⊆ X_G`: checks that `x` is a q-fan exactly when it is
/// the whole space.
pub fn finite_density_check(ts: &FiniteTs, x: &[Character]) -> Result<bool> {
    let full = enumerate_characters(ts);
    let all: BTreeSet<&Character> = full.iter().collect();
    if !x.iter().all(|h| all.contains(h)) {
        return Err(Error::Precondition("character set is not contained in X_G".into()));
    }
    if !is_three_closed(x) {
        return Err(Error::Precondition("character set is not 3-closed".into()));
    }
    Ok(is_q_fan(ts, x) == same_set(x, &full))
}

/// Outcome of the exhaustive density search over subsets of `X_G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensitySearch {
    pub space_size: usize,
    pub subsets_examined: usize,
    pub three_closed: usize,
    pub three_closed_separating: usize,
    /// Proper 3-closed separating subsets (as sorted index lists); the
    /// finite density statement says this is empty.
    pub counterexamples: Vec<Vec<usize>>,
}

/// Examines every nonempty subset of `X_G` (requires `|X_G| ≤ 20`).
pub fn density_search(ts: &FiniteTs) -> Result<DensitySearch> {
    let full = enumerate_characters(ts);
    let m = full.len();
    if m > 20 {
        return Err(Error::Precondition(format!("{m} characters is too many for subset enumeration")));
    }
    let mut out = DensitySearch {
        space_size: m,
        subsets_examined: 0,
        three_closed: 0,
        three_closed_separating: 0,
        counterexamples: Vec::new(),
    };
    for mask in 1u32..(1u32 << m) {
        out.subsets_examined += 1;
        let idx = mask_indices(mask, m);
        let sub: Vec<Character> = idx.iter().map(|&i| full[i].clone()).collect();
        if !is_three_closed(&sub) {
            continue;
        }
        out.three_closed += 1;
        if separates(ts, &sub).is_ok() {
            out.three_closed_separating += 1;
            if sub.len() < m {
                out.counterexamples.push(idx);
            }
        }
    }
    Ok(out)
}

/// Indices of the set bits of `mask` below `m`.
pub fn mask_indices(mask: u32, m: usize) -> Vec<usize> {
    (0..m).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Renders the character table: one row per character, one column per element.
pub fn character_table(ts: &FiniteTs, x: &[Character], labels: &[String]) -> String {
    let width = ts.names().iter().map(|n| n.chars().count()).max().unwrap_or(1).max(2);
    let lw = labels.iter().map(|l| l.chars().count()).max().unwrap_or(2);
    let mut out = format!("{:lw$}", "", lw = lw);
    for n in ts.names() {
        out.push_str(&format!(" {:>w$}", n, w = width));
    }
    out.push('\n');
    for (h, l) in x.iter().zip(labels) {
        out.push_str(&format!("{:lw$}", l, lw = lw));
        for a in ts.elems() {
            out.push_str(&format!(" {:>w$}", h.value(a).to_string(), w = width));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    fn f1() -> FiniteTs {
        Presentation::new(&["x"]).build().unwrap()
    }

    // Independent oracle: every map G → 3, filtered by the definition.
    fn brute_force(ts: &FiniteTs) -> BTreeSet<Character> {
        let n = ts.len();
        let mut out = BTreeSet::new();
        for code in 0..3usize.pow(n as u32) {
            let mut c = code;
            let values: Vec<Three> = (0..n)
                .map(|_| {
                    let v = Three::LISTING[c % 3];
                    c /= 3;
                    v
                })
                .collect();
            let h = Character::from_values(values);
            if is_character(ts, &h) {
                out.insert(h);
            }
        }
        out
    }

    #[test]
    fn f1_characters() {
        let ts = f1();
        let x = enumerate_characters(&ts);
        let xv = ts.elem("x").unwrap();
        let got: Vec<Three> = x.iter().map(|h| h.value(xv)).collect();
        assert_eq!(got, vec![Three::Zero, Three::One, Three::MinusOne]);
        assert_eq!(x.iter().cloned().collect::<BTreeSet<_>>(), brute_force(&ts));
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_structures() {
        let cases = [
            Presentation::new(&["x"]).with("x^2 = x").unwrap(),
            Presentation::new(&["x"]).with("x^2 = 1").unwrap(),
            Presentation::new(&["x", "y"]).with("x^2 = 1").unwrap().with("y^2 = 1").unwrap(),
            Presentation::new(&["x", "y"]).with("xy = 0").unwrap().with("x^2 = x").unwrap(),
        ];
        for p in cases {
            let ts = p.build().unwrap();
            assert!(ts.len() <= 9);
            let x: BTreeSet<_> = enumerate_characters(&ts).into_iter().collect();
            assert_eq!(x, brute_force(&ts), "{p}");
        }
    }

    #[test]
    fn specialization_forms_agree_on_f1() {
        let x = enumerate_characters(&f1());
        assert!(specializes(&x[1], &x[0]));
        assert!(specializes(&x[2], &x[0]));
        assert!(!specializes(&x[1], &x[2]));
        assert!(!specializes(&x[0], &x[1]));
        for g in &x {
            assert!(specializes(g, g));
            for h in &x {
                let s = specializes(g, h);
                assert_eq!(s, specializes_by_ones(g, h));
                assert_eq!(s, specializes_by_nonneg(g, h));
                assert_eq!(s, specializes_by_zero_sets(g, h));
            }
        }
    }

    #[test]
    fn zero_sets_on_f1() {
        let ts = f1();
        let x = enumerate_characters(&ts);
        let z1 = ts.set_names(&x[0].zero_set());
        assert_eq!(z1, vec!["0", "x", "−x", "x²", "−x²"]);
        assert_eq!(compare_zero_sets(&x[1], &x[2]), ZeroSetOrder::Equal);
        assert_eq!(compare_zero_sets(&x[1], &x[0]), ZeroSetOrder::LeftInRight);
        assert!(zero_set_included(&x[1], &x[0]));
        assert!(!zero_set_included(&x[0], &x[1]));
    }

    #[test]
    fn q_fan_examples_on_f1() {
        let ts = f1();
        let x = enumerate_characters(&ts);
        assert!(is_q_fan(&ts, &x));
        let h2 = vec![x[1].clone()];
        assert!(matches!(q_fan(&ts, &h2), Err(QFanFailure::NotSeparating { .. })));
        let h23 = vec![x[1].clone(), x[2].clone()];
        // h2·h2·h3 = h3 and friends stay inside, but 0 and x² are not separated
        assert!(is_three_closed(&h23));
        let (a, b) = separates(&ts, &h23).unwrap_err();
        assert_eq!((ts.name(a), ts.name(b)), ("1", "x²"));
        assert!(matches!(q_fan(&ts, &[]), Err(QFanFailure::Empty)));
    }

    #[test]
    fn closure_is_closed_and_minimal() {
        let x = enumerate_characters(&f1());
        let c = three_closure(&[x[1].clone(), x[2].clone(), x[0].clone()]);
        assert!(is_three_closed(&c));
        assert_eq!(c.len(), 3);
        let single = three_closure(&[x[2].clone()]);
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn density_on_f1() {
        let ts = f1();
        let d = density_search(&ts).unwrap();
        assert_eq!(d.subsets_examined, 7);
        assert!(d.counterexamples.is_empty());
        assert_eq!(d.three_closed_separating, 1);
        let x = enumerate_characters(&ts);
        assert!(finite_density_check(&ts, &x).unwrap());
        assert!(finite_density_check(&ts, &[x[1].clone()]).unwrap());
        let bogus = Character::from_values(vec![Three::One; ts.len()]);
        assert!(finite_density_check(&ts, &[bogus]).is_err());
    }

    #[test]
    fn new_rejects_non_characters() {
        let ts = f1();
        assert!(Character::new(&ts, vec![Three::One; 7]).is_err());
        assert!(Character::new(&ts, vec![Three::One; 3]).is_err());
    }
}
