//! Finite posets, the representation order of a real semigroup, the
//! lattice structure of fans, chain length, and DOT export.

use crate::characters::Character;
use crate::error::{Error, Result};
use crate::fan::FanModel;
use crate::report::{Check, Report};
use crate::represent::RsModel;
use crate::three::Three;
use crate::ts_core::{Elem, FiniteTs};
use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// A finite partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    // up[a] = {b : a ≤ b}
    up: Vec<FixedBitSet>,
}

impl Poset {
    /// Builds the poset from `leq(a, b)`, checking reflexivity,
    /// antisymmetry and transitivity.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    row.insert(b);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::Invariant(format!("relation is not reflexive at {a}")));
            }
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::Invariant(format!("relation is not antisymmetric at ({a}, {b})")));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::Invariant(format!("relation is not transitive through ({a}, {b})")));
                }
            }
        }
        Ok(Poset { n, up })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn up_set(&self, a: usize) -> Vec<usize> {
        self.up[a].ones().collect()
    }

    pub fn down_set(&self, a: usize) -> Vec<usize> {
        (0..self.n).filter(|&b| self.leq(b, a)).collect()
    }

    pub fn is_chain(&self, xs: &[usize]) -> bool {
        xs.iter().all(|&a| xs.iter().all(|&b| self.comparable(a, b)))
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between,
    /// sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.up[a].ones().filter(|&b| b != a) {
                let between = self.up[a].ones().any(|c| c != a && c != b && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of the longest chain ending at each element, counting edges
    /// (minimal elements have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| self.down_set(a).len());
        let mut h = vec![0; self.n];
        for &b in &order {
            h[b] = (0..self.n).filter(|&a| self.lt(a, b)).map(|a| h[a] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Number of elements in a longest chain.
    pub fn longest_chain(&self) -> usize {
        self.heights().into_iter().max().map_or(0, |h| h + 1)
    }

    /// Size of a largest antichain, via Dilworth: `n` minus a maximum
    /// matching in the strict-comparability bipartite graph.
    pub fn width(&self) -> usize {
        let mut match_right: Vec<Option<usize>> = vec![None; self.n];
        let mut matched = 0;
        for a in 0..self.n {
            let mut seen = vec![false; self.n];
            if self.augment(a, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        self.n - matched
    }

    fn augment(&self, a: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for b in self.up[a].ones().filter(|&b| b != a) {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if match_right[b].is_none_or(|a2| self.augment(a2, seen, match_right)) {
                match_right[b] = Some(a);
                return true;
            }
        }
        false
    }

    /// All maximal chains, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let edges = self.hasse_edges();
        let minimal: Vec<usize> = (0..self.n).filter(|&a| self.down_set(a).len() == 1).collect();
        let mut out = Vec::new();
        let mut path = Vec::new();
        for m in minimal {
            self.chains_from(m, &edges, &mut path, &mut out);
        }
        out
    }

    fn chains_from(&self, a: usize, edges: &[(usize, usize)], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        path.push(a);
        let next: Vec<usize> = edges.iter().filter(|e| e.0 == a).map(|e| e.1).collect();
        if next.is_empty() {
            out.push(path.clone());
        }
        for b in next {
            self.chains_from(b, edges, path, out);
        }
        path.pop();
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n).filter(|&c| self.leq(c, a) && self.leq(c, b)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&c| self.leq(c, m)))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = self.up[a].intersection(&self.up[b]).collect();
        upper.iter().copied().find(|&m| upper.iter().all(|&c| self.leq(m, c)))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&a| self.up[a].count_ones(..) == self.n)
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.leq(b, a)))
    }
}

/// Hasse edges as sorted pairs of labels, one `lower upper` pair per line;
/// the format of the golden figure files.
pub fn hasse_edge_lines(p: &Poset, labels: &[String]) -> Vec<String> {
    let mut lines: Vec<String> =
        p.hasse_edges().into_iter().map(|(a, b)| format!("{} {}", labels[a], labels[b])).collect();
    lines.sort();
    lines
}

/// DOT rendering, bottom to top, one `rank=same` group per height.
pub fn hasse_dot(p: &Poset, labels: &[String], name: &str) -> String {
    let heights = p.heights();
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    let _ = writeln!(out, "  edge [arrowhead=none];");
    for (i, l) in labels.iter().enumerate().take(p.len()) {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, l.replace('"', "'"));
    }
    let top = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=top {
        let level: Vec<String> = (0..p.len()).filter(|&i| heights[i] == h).map(|i| format!("n{i}")).collect();
        if !level.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", level.join("; "));
        }
    }
    for (a, b) in p.hasse_edges() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// `a ≤ b` iff `a ∈ D(1, b)` and `−b ∈ D(1, −a)`.
pub fn repr_leq(m: &RsModel, a: Elem, b: Elem) -> bool {
    let ts = m.ts();
    m.in_d(a, ts.one(), b) && m.in_d(ts.neg(b), ts.one(), ts.neg(a))
}

/// `∀h: h(a) ≤₃ h(b)` with `1 < 0 < −1`.
pub fn repr_leq_oracle(x: &[Character], a: Elem, b: Elem) -> bool {
    x.iter().all(|h| h.value(a).repr_le(h.value(b)))
}

/// The representation order as a poset on element indices.
pub fn repr_poset(m: &RsModel) -> Result<Poset> {
    Poset::from_relation(m.ts().len(), |a, b| repr_leq(m, Elem::new(a), Elem::new(b)))
}

fn first<I: Iterator<Item = Vec<usize>>>(mut it: I) -> Option<Vec<usize>> {
    it.next()
}

fn pairs(ts: &FiniteTs) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    ts.elems().flat_map(move |a| ts.elems().map(move |b| (a, b)))
}

/// The items of the representation-order theorem, checked exhaustively.
/// Check names are `"1"` … `"10"`.
pub fn repr_properties(m: &RsModel) -> Result<Report> {
    let ts = m.ts();
    let p = repr_poset(m)?;
    let le = |a: Elem, b: Elem| p.leq(a.idx(), b.idx());
    let x = m.rs_characters();
    let (one, zero, mone) = (ts.one(), ts.zero(), ts.minus_one());
    let mut r = Report::default();

    r.push(Check::from_witness(
        "1",
        first(pairs(ts).filter(|&(a, b)| le(a, b) && !le(ts.neg(b), ts.neg(a))).map(|(a, b)| vec![a.idx(), b.idx()])),
    ));
    r.push(Check::from_witness(
        "2",
        first(ts.elems().filter(|&a| !(le(one, a) && le(a, mone))).map(|a| vec![a.idx()])),
    ));
    r.push(Check::from_witness(
        "3",
        first(
            ts.elems()
                .filter(|&a| le(a, zero) != (a == ts.sq(a)) || le(zero, a) != (a == ts.neg(ts.sq(a))))
                .map(|a| vec![a.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "4",
        first(pairs(ts).filter(|&(a, b)| le(a, b) != repr_leq_oracle(&x, a, b)).map(|(a, b)| vec![a.idx(), b.idx()])),
    ));
    r.push(Check::from_witness(
        "5",
        first(
            pairs(ts)
                .filter(|&(a, b)| {
                    let a2 = ts.sq(a);
                    let sandwich = le(a2, b) && le(b, ts.neg(a2));
                    let zs = x.iter().all(|h| h.value(a) != Three::Zero || h.value(b) == Three::Zero);
                    let alg = b == ts.mul(a2, b);
                    sandwich != zs || zs != alg
                })
                .map(|(a, b)| vec![a.idx(), b.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "6",
        first(
            pairs(ts)
                .filter(|&(a, b)| {
                    let (a2, ab) = (ts.sq(a), ts.mul(a, b));
                    !(le(a2, ab) && le(ab, ts.neg(a2)))
                })
                .map(|(a, b)| vec![a.idx(), b.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "7",
        first(
            pairs(ts)
                .filter(|&(a, b)| {
                    let a2 = ts.sq(a);
                    le(a2, b) && le(b, ts.neg(a2)) && ts.is_unit(b) && !ts.is_unit(a)
                })
                .map(|(a, b)| vec![a.idx(), b.idx()]),
        ),
    ));
    let item8 = (|| {
        for a in ts.elems() {
            for xx in ts.elems().filter(|&xx| le(a, xx)) {
                for y in ts.elems().filter(|&y| le(a, y)) {
                    if !le(a, ts.neg(ts.mul(xx, y))) {
                        return Some(vec![a.idx(), xx.idx(), y.idx()]);
                    }
                }
            }
        }
        None
    })();
    r.push(Check::from_witness("8", item8));
    r.push(Check::from_witness(
        "9",
        first(
            ts.elems()
                .filter(|&a| {
                    let na = ts.neg(a);
                    p.meet(a.idx(), na.idx()) != Some(ts.sq(a).idx())
                        || p.join(a.idx(), na.idx()) != Some(ts.neg(ts.sq(a)).idx())
                })
                .map(|a| vec![a.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "10",
        first(
            pairs(ts)
                .filter(|&(a, b)| {
                    let lo = p.meet(a.idx(), ts.neg(a).idx());
                    let hi = p.join(b.idx(), ts.neg(b).idx());
                    match (lo, hi) {
                        (Some(lo), Some(hi)) => !(p.leq(lo, zero.idx()) && p.leq(zero.idx(), hi)),
                        _ => true,
                    }
                })
                .map(|(a, b)| vec![a.idx(), b.idx()]),
        ),
    ));
    Ok(r)
}

/// A pentagon sublattice `o < a < b < i`, `o < c < i`, with `c`
/// incomparable to `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pentagon {
    pub bottom: usize,
    pub low: usize,
    pub high: usize,
    pub top: usize,
    pub side: usize,
}

/// Lattice data and verdicts for a fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanLattice {
    /// `meet[a][b]`, `join[a][b]` as element indices.
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    /// Bottom is `1` and top is `−1`.
    pub bounded: bool,
    /// First pair where the closed forms disagree with the computed bounds.
    pub closed_form_violation: Option<Vec<usize>>,
    pub de_morgan_violation: Option<Vec<usize>>,
    pub kleene_violation: Option<Vec<usize>>,
    pub modular: bool,
    pub distributive: bool,
    pub pentagon: Option<Pentagon>,
}

/// Checks whether `(o, a, b, i; c)` forms a pentagon sublattice.
pub fn is_pentagon(p: &Poset, pent: &Pentagon) -> bool {
    let Pentagon { bottom: o, low: a, high: b, top: i, side: c } = *pent;
    p.lt(o, a)
        && p.lt(a, b)
        && p.lt(b, i)
        && !p.comparable(c, a)
        && !p.comparable(c, b)
        && p.meet(a, c) == Some(o)
        && p.meet(b, c) == Some(o)
        && p.join(a, c) == Some(i)
        && p.join(b, c) == Some(i)
}

/// The representation order of a fan as a lattice.
pub fn fan_lattice(f: &FanModel) -> Result<FanLattice> {
    let ts = f.ts();
    let n = ts.len();
    let p = repr_poset(f)?;
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            meet[a][b] = p
                .meet(a, b)
                .ok_or_else(|| Error::Invariant(format!("no meet of {} and {}", ts.names()[a], ts.names()[b])))?;
            join[a][b] = p
                .join(a, b)
                .ok_or_else(|| Error::Invariant(format!("no join of {} and {}", ts.names()[a], ts.names()[b])))?;
        }
    }
    let bounded = p.minimum() == Some(ts.one().idx()) && p.maximum() == Some(ts.minus_one().idx());
    let e = Elem::new;
    let neg = |a: usize| ts.neg(e(a)).idx();
    let sq = |a: usize| ts.sq(e(a)).idx();
    let min_le = |x: usize, y: usize| {
        if p.leq(x, y) {
            Some(x)
        } else if p.leq(y, x) {
            Some(y)
        } else {
            None
        }
    };
    let max_le = |x: usize, y: usize| {
        if p.leq(x, y) {
            Some(y)
        } else if p.leq(y, x) {
            Some(x)
        } else {
            None
        }
    };

    let mut closed_form_violation = None;
    let mut de_morgan_violation = None;
    let mut kleene_violation = None;
    for a in 0..n {
        for b in 0..n {
            let (m, j) = if p.comparable(a, b) {
                (min_le(a, b), max_le(a, b))
            } else {
                (min_le(sq(a), sq(b)), max_le(neg(sq(a)), neg(sq(b))))
            };
            if closed_form_violation.is_none() && (m != Some(meet[a][b]) || j != Some(join[a][b])) {
                closed_form_violation = Some(vec![a, b]);
            }
            if de_morgan_violation.is_none()
                && (neg(meet[a][b]) != join[neg(a)][neg(b)] || neg(join[a][b]) != meet[neg(a)][neg(b)])
            {
                de_morgan_violation = Some(vec![a, b]);
            }
            let z = ts.zero().idx();
            if kleene_violation.is_none() && !(p.leq(meet[a][neg(a)], z) && p.leq(z, join[b][neg(b)])) {
                kleene_violation = Some(vec![a, b]);
            }
        }
    }

    let mut pentagon = None;
    'search: for a in 0..n {
        for b in (0..n).filter(|&b| p.lt(a, b)) {
            for c in (0..n).filter(|&c| !p.comparable(c, a) && !p.comparable(c, b)) {
                if meet[a][c] == meet[b][c] && join[a][c] == join[b][c] {
                    pentagon = Some(Pentagon { bottom: meet[a][c], low: a, high: b, top: join[a][c], side: c });
                    break 'search;
                }
            }
        }
    }
    let modular_law = (0..n)
        .all(|a| (0..n).filter(|&c| p.leq(a, c)).all(|c| (0..n).all(|b| join[a][meet[b][c]] == meet[join[a][b]][c])));
    if modular_law == pentagon.is_some() {
        return Err(Error::Invariant("modular law disagrees with the pentagon search".into()));
    }
    let distributive =
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]])));
    Ok(FanLattice {
        meet,
        join,
        bounded,
        closed_form_violation,
        de_morgan_violation,
        kleene_violation,
        modular: modular_law,
        distributive,
        pentagon,
    })
}

/// Longest strict inclusion chain of nonempty sets `U(a) = {h : h(a) = 1}`,
/// counted in sets.
pub fn chain_length(ts: &FiniteTs, x: &[Character]) -> usize {
    let sets: BTreeSet<FixedBitSet> = ts
        .elems()
        .map(|a| {
            let mut s = FixedBitSet::with_capacity(x.len());
            for (i, h) in x.iter().enumerate() {
                if h.value(a) == Three::One {
                    s.insert(i);
                }
            }
            s
        })
        .filter(|s| s.count_ones(..) > 0)
        .collect();
    let mut sets: Vec<FixedBitSet> = sets.into_iter().collect();
    sets.sort_by_key(|s| s.count_ones(..));
    let mut best = vec![1usize; sets.len()];
    for j in 0..sets.len() {
        for i in 0..j {
            if sets[i] != sets[j] && sets[i].is_subset(&sets[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `2 · |proper ideals|`, the chain-length bound for fans.
pub fn chain_length_bound(ts: &FiniteTs) -> usize {
    2 * ts.proper_ideals().len()
}

/// Units against the order in a fan: for non-invertible `x` and unit `w`,
/// `x ≤ w ⇒ w = −1` and `w ≤ x ⇒ w = 1`; distinct units outside `±1` are
/// incomparable.  Returns the first violating pair.
pub fn unit_incomparability(f: &FanModel) -> Result<Option<Vec<usize>>> {
    let ts = f.ts();
    let p = repr_poset(f)?;
    let units = ts.units();
    for x in ts.elems().filter(|&x| !ts.is_unit(x)) {
        for &w in &units {
            if (p.leq(x.idx(), w.idx()) && w != ts.minus_one()) || (p.leq(w.idx(), x.idx()) && w != ts.one()) {
                return Ok(Some(vec![x.idx(), w.idx()]));
            }
        }
    }
    let outside: Vec<Elem> = units.iter().copied().filter(|&w| w != ts.one() && w != ts.minus_one()).collect();
    for &v in &outside {
        for &w in outside.iter().filter(|&&w| w != v) {
            if p.comparable(v.idx(), w.idx()) {
                return Ok(Some(vec![v.idx(), w.idx()]));
            }
        }
    }
    Ok(None)
}

/// The order lemmas for fans: strict comparabilities involve a square or a
/// negated square; distinct non-(±)squares are incomparable; `−b²` is the
/// least negated square above `b ∉ Id` and `b²` the greatest square below
/// `b ∉ −Id`.
pub fn fan_order_lemmas(f: &FanModel) -> Result<Report> {
    let ts = f.ts();
    let p = repr_poset(f)?;
    let ids: BTreeSet<Elem> = ts.idempotents().into_iter().collect();
    let in_id = |a: Elem| ids.contains(&a);
    let in_neg_id = |a: Elem| ids.contains(&ts.neg(a));
    let le = |a: Elem, b: Elem| p.leq(a.idx(), b.idx());
    let mut r = Report::default();
    r.push(Check::from_witness(
        "incomp",
        first(
            pairs(ts)
                .filter(|&(a, b)| a != b && le(a, b) && !in_id(a) && !in_neg_id(b))
                .map(|(a, b)| vec![a.idx(), b.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "non-squares incomparable",
        first(
            pairs(ts)
                .filter(|&(a, b)| {
                    let plain = |c: Elem| !in_id(c) && !in_neg_id(c);
                    a != b && plain(a) && plain(b) && p.comparable(a.idx(), b.idx())
                })
                .map(|(a, b)| vec![a.idx(), b.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "upperbound",
        first(
            ts.elems()
                .filter(|&b| {
                    let least = ids
                        .iter()
                        .map(|&y| ts.neg(y))
                        .filter(|&ny| le(b, ny))
                        .find(|&ny| ids.iter().map(|&y| ts.neg(y)).filter(|&nz| le(b, nz)).all(|nz| le(ny, nz)));
                    !in_id(b) && least != Some(ts.neg(ts.sq(b)))
                })
                .map(|b| vec![b.idx()]),
        ),
    ));
    r.push(Check::from_witness(
        "lowerbound",
        first(
            ts.elems()
                .filter(|&b| {
                    let greatest = ids
                        .iter()
                        .copied()
                        .filter(|&y| le(y, b))
                        .find(|&y| ids.iter().copied().filter(|&z| le(z, b)).all(|z| le(z, y)));
                    !in_neg_id(b) && greatest != Some(ts.sq(b))
                })
                .map(|b| vec![b.idx()]),
        ),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::make_fan;
    use crate::presentation::Presentation;
    use crate::represent::three_rs;

    fn chain(n: usize) -> Poset {
        Poset::from_relation(n, |a, b| a <= b).unwrap()
    }

    #[test]
    fn chain_poset() {
        let p = chain(4);
        assert_eq!(p.hasse_edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p.width(), 1);
        assert_eq!(p.longest_chain(), 4);
        assert_eq!(p.maximal_chains(), vec![vec![0, 1, 2, 3]]);
        assert_eq!((p.minimum(), p.maximum()), (Some(0), Some(3)));
    }

    #[test]
    fn rejects_non_orders() {
        assert!(Poset::from_relation(2, |a, b| a != b).is_err());
        assert!(Poset::from_relation(2, |_, _| true).is_err());
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2
        assert!(Poset::from_relation(3, |a, b| a == b || b == a + 1).is_err());
    }

    #[test]
    fn antichain_width_and_dot() {
        let p = Poset::from_relation(3, |a, b| a == b).unwrap();
        assert_eq!(p.width(), 3);
        assert!(p.hasse_edges().is_empty());
        let single = Poset::from_relation(1, |_, _| true).unwrap();
        let dot = hasse_dot(&single, &["only".to_string()], "one");
        assert!(dot.contains("n0 [label=\"only\"]"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn order_on_three() {
        let m = three_rs();
        let p = repr_poset(&m).unwrap();
        // listing 1, 0, -1
        assert!(p.leq(0, 1) && p.leq(1, 2) && p.leq(0, 2));
        assert!(!p.leq(1, 0));
        assert!(repr_properties(&m).unwrap().all_pass());
    }

    #[test]
    fn order_on_f1() {
        let ts = Presentation::new(&["x"]).build().unwrap();
        let f = make_fan(&ts).unwrap();
        let e = |s: &str| ts.elem(s).unwrap();
        assert!(repr_leq(&f, e("x^2"), e("x")) && repr_leq(&f, e("x"), e("-x^2")));
        assert!(!repr_leq(&f, e("x"), e("0")) && repr_leq(&f, e("x^2"), e("0")));
        let r = repr_properties(&f).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let lat = fan_lattice(&f).unwrap();
        assert!(lat.bounded && lat.modular && !lat.distributive);
        assert!(fan_order_lemmas(&f).unwrap().all_pass());
    }

    #[test]
    fn chain_length_of_three() {
        let m = three_rs();
        let x = crate::characters::enumerate_characters(m.ts());
        assert_eq!(chain_length(m.ts(), &x), 1);
        assert_eq!(chain_length_bound(m.ts()), 2);
    }
}
