//! Finite ternary semigroups: Cayley-table representation, axiom checks,
//! ideals and the zero-set divisibility algebra.

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::report::{Check, Report};
use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// Index of an element of a [`FiniteTs`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Elem(pub u32);

impl Elem {
    pub fn new(i: usize) -> Elem {
        Elem(i as u32)
    }

    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subset of the elements of a [`FiniteTs`], as a bitset over indices.
pub type ElemSet = FixedBitSet;

/// A finite ternary semigroup: a commutative monoid with constants
/// `1, 0, -1` in which `x³ = x`, `x·0 = 0`, `(-1)² = 1 ≠ -1`, and
/// `-x = x` only for `x = 0`.
///
/// Values are immutable once built; every constructor validates the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTs {
    names: Vec<String>,
    table: Vec<u32>,
    one: Elem,
    zero: Elem,
    minus_one: Elem,
    generators: Vec<Elem>,
    presentation: Option<Presentation>,
    // image of each presentation generator, in declaration order
    generator_images: Vec<Elem>,
}

impl FiniteTs {
    /// Builds a TS from element names and a table of rows of indices.
    ///
    /// Structural problems (wrong shape, index out of range, duplicate
    /// names) give [`Error::Structure`]; a well-formed table that breaks an
    /// axiom gives [`Error::NotTs`] naming the first failing axiom.
    pub fn from_table(
        names: Vec<String>,
        rows: &[Vec<usize>],
        one: usize,
        zero: usize,
        minus_one: usize,
    ) -> Result<FiniteTs> {
        if rows.len() != names.len() {
            return Err(Error::Structure(format!("{} element names but {} table rows", names.len(), rows.len())));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::Structure(format!("duplicate element name `{name}`")));
            }
        }
        let report = check_ts_axioms(rows, one, zero, minus_one)?;
        if let Some(bad) = report.failures().next() {
            let witness = bad.witness.iter().flatten().map(|&i| names[i].clone()).collect::<Vec<_>>().join(", ");
            return Err(Error::NotTs { axiom: bad.name.clone(), witness });
        }
        let n = names.len();
        let table = rows.iter().flatten().map(|&v| v as u32).collect();
        let mut ts = FiniteTs {
            names,
            table,
            one: Elem::new(one),
            zero: Elem::new(zero),
            minus_one: Elem::new(minus_one),
            generators: Vec::new(),
            presentation: None,
            generator_images: Vec::new(),
        };
        debug_assert_eq!(ts.table.len(), n * n);
        ts.generators = ts.greedy_generators();
        Ok(ts)
    }

    /// Assembles a TS whose table is known to be valid (built by the
    /// presentation machinery or by a quotient).
    pub(crate) fn from_parts(
        names: Vec<String>,
        table: Vec<u32>,
        constants: (Elem, Elem, Elem),
        presentation: Option<(Presentation, Vec<Elem>)>,
    ) -> FiniteTs {
        let (one, zero, minus_one) = constants;
        let (presentation, generator_images) = match presentation {
            Some((p, imgs)) => (Some(p), imgs),
            None => (None, Vec::new()),
        };
        let mut ts =
            FiniteTs { names, table, one, zero, minus_one, generators: Vec::new(), presentation, generator_images };
        ts.generators = if ts.presentation.is_some() {
            let mut gens: Vec<Elem> = Vec::new();
            for &g in &ts.generator_images {
                if g != one && g != zero && g != minus_one && !gens.contains(&g) {
                    gens.push(g);
                }
            }
            gens
        } else {
            ts.greedy_generators()
        };
        debug_assert!(ts.axiom_report().all_pass(), "internally built table violates the TS axioms");
        ts
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.len()).map(Elem::new)
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a.idx()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find(&self, name: &str) -> Option<Elem> {
        let canon = canonical_name(name);
        self.names.iter().position(|n| n == name || canonical_name(n) == canon).map(Elem::new)
    }

    /// Looks up an element by display name (ASCII spellings such as
    /// `-x^2z` are accepted for `−x²z`).
    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.find(name).ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn minus_one(&self) -> Elem {
        self.minus_one
    }

    /// The generating set used for character enumeration: the presentation
    /// generators when there is one, otherwise a greedy generating set.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    /// Image of each presentation generator (empty for table structures).
    pub fn generator_images(&self) -> &[Elem] {
        &self.generator_images
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.table[a.idx() * self.len() + b.idx()])
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.mul(self.minus_one, a)
    }

    pub fn sq(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// Rows of the Cayley table as indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.len()).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Re-runs the axiom checks on this (already valid) structure.
    pub fn axiom_report(&self) -> Report {
        check_ts_axioms(&self.rows(), self.one.idx(), self.zero.idx(), self.minus_one.idx())
            .expect("a built TS is structurally sound")
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = Elem>) -> ElemSet {
        let mut s = self.empty_set();
        for e in elems {
            s.insert(e.idx());
        }
        s
    }

    /// Builds a set from display names.
    pub fn set_by_names(&self, names: &[&str]) -> Result<ElemSet> {
        let mut s = self.empty_set();
        for n in names {
            s.insert(self.elem(n)?.idx());
        }
        Ok(s)
    }

    pub fn set_names(&self, s: &ElemSet) -> Vec<String> {
        s.ones().map(|i| self.names[i].clone()).collect()
    }

    pub fn members(s: &ElemSet) -> impl Iterator<Item = Elem> + '_ {
        s.ones().map(Elem::new)
    }

    /// `-S`.
    pub fn neg_set(&self, s: &ElemSet) -> ElemSet {
        self.set_of(Self::members(s).map(|a| self.neg(a)))
    }

    /// `Id(G) = {x² : x ∈ G}`, in element order.
    pub fn idempotents(&self) -> Vec<Elem> {
        let set = self.set_of(self.elems().map(|a| self.sq(a)));
        Self::members(&set).collect()
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.sq(a) == a
    }

    /// `G^× = {a : a² = 1}`.
    pub fn units(&self) -> Vec<Elem> {
        self.elems().filter(|&a| self.sq(a) == self.one).collect()
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.sq(a) == self.one
    }

    /// `a | b`, decided by `a²b² = b²`.
    pub fn divides(&self, a: Elem, b: Elem) -> bool {
        let b2 = self.sq(b);
        self.mul(self.sq(a), b2) == b2
    }

    /// `a | b`, decided by searching for `x` with `b = ax`.
    pub fn divides_by_search(&self, a: Elem, b: Elem) -> bool {
        self.elems().any(|x| self.mul(a, x) == b)
    }

    /// The principal ideal `c·G`.
    pub fn principal_ideal(&self, c: Elem) -> ElemSet {
        self.set_of(self.elems().map(|g| self.mul(c, g)))
    }

    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        s.contains(self.zero.idx()) && Self::members(s).all(|a| self.elems().all(|g| s.contains(self.mul(a, g).idx())))
    }

    /// Proper, and `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
    pub fn is_prime_ideal(&self, s: &ElemSet) -> bool {
        self.is_ideal(s)
            && !s.contains(self.one.idx())
            && self.elems().all(|a| {
                s.contains(a.idx()) || self.elems().all(|b| s.contains(b.idx()) || !s.contains(self.mul(a, b).idx()))
            })
    }

    /// Condition [Z]: for all `a, b`, `a²b² = a²` or `a²b² = b²`.  On
    /// failure returns the first offending pair.
    pub fn condition_z(&self) -> std::result::Result<(), (Elem, Elem)> {
        for a in self.elems() {
            for b in self.elems() {
                let (a2, b2) = (self.sq(a), self.sq(b));
                let p = self.mul(a2, b2);
                if p != a2 && p != b2 {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    pub fn satisfies_condition_z(&self) -> bool {
        self.condition_z().is_ok()
    }

    /// All ideals, smallest first, with primality flags.
    pub fn ideals(&self) -> IdealLattice {
        // Every ideal is the union of the principal ideals of its members,
        // so closing {0} under unions with principal ideals finds them all.
        let principals: BTreeSet<ElemSet> = self.elems().map(|c| self.principal_ideal(c)).collect();
        let mut found: BTreeSet<ElemSet> = BTreeSet::new();
        let start = self.principal_ideal(self.zero);
        let mut queue = VecDeque::from([start.clone()]);
        found.insert(start);
        while let Some(cur) = queue.pop_front() {
            for p in &principals {
                let mut next = cur.clone();
                next.union_with(p);
                if found.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut ideals: Vec<ElemSet> = found.into_iter().collect();
        ideals.sort_by(|a, b| a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| a.cmp(b)));
        let prime = ideals.iter().map(|i| self.is_prime_ideal(i)).collect();
        let chain = ideals.windows(2).all(|w| w[0].is_subset(&w[1]));
        IdealLattice { ideals, prime, chain }
    }

    /// Proper ideals (the spectrum when condition [Z] holds).
    pub fn proper_ideals(&self) -> Vec<ElemSet> {
        self.ideals().ideals.into_iter().filter(|i| !i.contains(self.one.idx())).collect()
    }

    /// Submonoid generated by the constants and `gens`.
    pub fn generated(&self, gens: &[Elem]) -> ElemSet {
        let mut set = self.set_of([self.one, self.zero, self.minus_one]);
        let mut queue: VecDeque<Elem> = Self::members(&set).collect();
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(a, g);
                if !set.put(p.idx()) {
                    queue.push_back(p);
                }
            }
        }
        set
    }

    /// The product structure; element `i·|other| + j` is `(a_i, b_j)`,
    /// named `(a,b)`.
    pub fn product(&self, other: &FiniteTs) -> FiniteTs {
        let (n, m) = (self.len(), other.len());
        let names = self
            .elems()
            .flat_map(|a| other.elems().map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", self.name(a), other.name(b)));
        let mut table = vec![0u32; n * m * n * m];
        for i in 0..n * m {
            for j in 0..n * m {
                let a = self.mul(Elem::new(i / m), Elem::new(j / m));
                let b = other.mul(Elem::new(i % m), Elem::new(j % m));
                table[i * n * m + j] = (a.idx() * m + b.idx()) as u32;
            }
        }
        let pair = |a: Elem, b: Elem| Elem::new(a.idx() * m + b.idx());
        let constants = (pair(self.one, other.one), pair(self.zero, other.zero), pair(self.minus_one, other.minus_one));
        FiniteTs::from_parts(names.collect(), table, constants, None)
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = self.generated(&gens);
        for a in self.elems() {
            if !span.contains(a.idx()) {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }
}

/// Result of [`FiniteTs::ideals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    /// All ideals, ordered by size (ties by bitset order).
    pub ideals: Vec<ElemSet>,
    /// `prime[i]` says whether `ideals[i]` is a prime ideal.
    pub prime: Vec<bool>,
    /// Whether the ideals form a chain under inclusion.
    pub chain: bool,
}

impl IdealLattice {
    /// Every proper ideal is prime.
    pub fn proper_all_prime(&self, ts: &FiniteTs) -> bool {
        self.ideals.iter().zip(&self.prime).all(|(i, &p)| i.contains(ts.one().idx()) || p)
    }
}

/// Checks [TS1]–[TS5] on a candidate table.
///
/// Returns a structural error for a non-square table, an index out of
/// range, or constants out of range; otherwise one [`Check`] per axiom.
pub fn check_ts_axioms(rows: &[Vec<usize>], one: usize, zero: usize, minus_one: usize) -> Result<Report> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Structure("empty element list".into()));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Structure(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::Structure(format!("row {i} refers to element {v}, out of range")));
        }
    }
    for (label, c) in [("one", one), ("zero", zero), ("minus_one", minus_one)] {
        if c >= n {
            return Err(Error::Structure(format!("constant {label} = {c} out of range")));
        }
    }
    let m = |a: usize, b: usize| rows[a][b];
    let mut report = Report::default();

    let ts1 = (|| {
        for a in 0..n {
            if m(one, a) != a || m(a, one) != a {
                return Some(vec![a]);
            }
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Some(vec![a, b]);
                }
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    })();
    report.push(Check::from_witness("TS1", ts1));

    let ts2 = (0..n).find(|&a| m(m(a, a), a) != a).map(|a| vec![a]);
    report.push(Check::from_witness("TS2", ts2));

    let ts3 = if minus_one == one || m(minus_one, minus_one) != one { Some(vec![minus_one]) } else { None };
    report.push(Check::from_witness("TS3", ts3));

    let ts4 = (0..n).find(|&a| m(a, zero) != zero).map(|a| vec![a]);
    report.push(Check::from_witness("TS4", ts4));

    let ts5 = (0..n).find(|&a| m(minus_one, a) == a && a != zero).map(|a| vec![a]);
    report.push(Check::from_witness("TS5", ts5));

    Ok(report)
}

/// Normalizes ASCII spellings of element names: `-` for `−` and `^2` for `²`.
pub fn canonical_name(name: &str) -> String {
    name.trim().replace('-', "\u{2212}").replace("^2", "\u{00b2}").replace("^1", "").replace('*', "")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_rows() -> Vec<Vec<usize>> {
        // listing order 1, 0, -1
        vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]]
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn three_passes() {
        let r = check_ts_axioms(&three_rows(), 0, 1, 2).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let ts = FiniteTs::from_table(names(&["1", "0", "-1"]), &three_rows(), 0, 1, 2).unwrap();
        assert_eq!(ts.len(), 3);
        assert!(ts.generators().is_empty());
    }

    #[test]
    fn minus_one_squared_wrong() {
        let mut rows = three_rows();
        rows[2][2] = 2;
        let r = check_ts_axioms(&rows, 0, 1, 2).unwrap();
        assert!(!r.passed("TS3"));
        assert_eq!(r.get("TS3").unwrap().witness, Some(vec![2]));
        let err = FiniteTs::from_table(names(&["1", "0", "-1"]), &rows, 0, 1, 2).unwrap_err();
        assert!(matches!(err, Error::NotTs { .. }));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(check_ts_axioms(&[vec![0, 1], vec![0]], 0, 1, 0), Err(Error::Structure(_))));
        assert!(matches!(check_ts_axioms(&[vec![0, 5], vec![1, 1]], 0, 1, 0), Err(Error::Structure(_))));
        assert!(matches!(check_ts_axioms(&[vec![0]], 0, 0, 3), Err(Error::Structure(_))));
        assert!(matches!(check_ts_axioms(&[], 0, 0, 0), Err(Error::Structure(_))));
        let dup = FiniteTs::from_table(names(&["1", "1", "-1"]), &three_rows(), 0, 1, 2);
        assert!(matches!(dup, Err(Error::Structure(_))));
    }

    #[test]
    fn ts5_detects_fixed_point_of_negation() {
        // {1, 0, -1, e} with e = -e idempotent and absorbing except for 0.
        let rows = vec![vec![0, 1, 2, 3], vec![1, 1, 1, 1], vec![2, 1, 0, 3], vec![3, 1, 3, 3]];
        let r = check_ts_axioms(&rows, 0, 1, 2).unwrap();
        assert!(r.passed("TS1") && r.passed("TS2") && r.passed("TS4"));
        assert_eq!(r.get("TS5").unwrap().witness, Some(vec![3]));
    }

    #[test]
    fn ts1_witnesses() {
        let mut rows = three_rows();
        rows[1][2] = 2; // 0·(-1) = -1, but (-1)·0 = 0
        let r = check_ts_axioms(&rows, 0, 1, 2).unwrap();
        assert!(!r.passed("TS1"));
    }

    #[test]
    fn canonical_names() {
        assert_eq!(canonical_name("-x^2z"), "\u{2212}x\u{00b2}z");
        assert_eq!(canonical_name("x*y"), "xy");
    }
}
