//! Presentations by generators and monomial relations, and the
//! construction of the ternary semigroup they define.
//!
//! The free TS on `k` generators has elements `0` and `±x^e` with
//! `e ∈ {0,1,2}^k`, so `2·3^k + 1` elements.  A presentation is turned into
//! a finite TS by congruence closure on that table, collapsing any class
//! with `x ≡ -x` into the class of `0`.

use crate::error::{Error, Result};
use crate::ts_core::{Elem, FiniteTs};
use std::cmp::Reverse;
use std::fmt;

/// A signed monomial over the generators, or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Zero,
    Term { negative: bool, exps: Vec<u8> },
}

impl Monomial {
    pub fn one(k: usize) -> Monomial {
        Monomial::Term { negative: false, exps: vec![0; k] }
    }

    pub fn minus_one(k: usize) -> Monomial {
        Monomial::Term { negative: true, exps: vec![0; k] }
    }

    pub fn generator(k: usize, i: usize) -> Monomial {
        let mut exps = vec![0; k];
        exps[i] = 1;
        Monomial::Term { negative: false, exps }
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Zero => 0,
            Monomial::Term { exps, .. } => exps.iter().map(|&e| e as usize).sum(),
        }
    }
}

/// Reduces an exponent with `x³ = x`: 0 stays 0, odd goes to 1, even to 2.
pub fn reduce_exp(e: u32) -> u8 {
    match e {
        0 => 0,
        e if e % 2 == 1 => 1,
        _ => 2,
    }
}

/// Generators plus relations `lhs = rhs` between monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<(Monomial, Monomial)>,
}

impl Presentation {
    pub fn new(generators: &[&str]) -> Presentation {
        Presentation { generators: generators.iter().map(|s| s.to_string()).collect(), relations: Vec::new() }
    }

    /// Adds a relation given as text, e.g. `"x^2 z^2 = x^2"`.
    pub fn with(mut self, relation: &str) -> Result<Presentation> {
        let (l, r) = relation.split_once('=').ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("relation `{relation}` has no `=`"),
        })?;
        let lhs = self.parse_monomial(l).map_err(|(col, msg)| Error::Parse { line: 1, col: col + 1, msg })?;
        let rhs = self.parse_monomial(r).map_err(|(col, msg)| Error::Parse {
            line: 1,
            col: l.chars().count() + col + 2,
            msg,
        })?;
        self.relations.push((lhs, rhs));
        Ok(self)
    }

    pub fn k(&self) -> usize {
        self.generators.len()
    }

    /// Parses a monomial.  Accepts an optional sign (`-` or `−`), then
    /// `0`, `1`, or a product of generator factors, each optionally raised
    /// to a power (`^n` or `²`).  Factors may be juxtaposed or separated by
    /// spaces, `*` or `·`; generator names are matched longest first.
    ///
    /// Errors carry a 0-based character column within `s`.
    pub fn parse_monomial(&self, s: &str) -> std::result::Result<Monomial, (usize, String)> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && (chars[*pos].is_whitespace() || chars[*pos] == '*' || chars[*pos] == '·') {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        let mut negative = false;
        while pos < chars.len() && (chars[pos] == '-' || chars[pos] == '\u{2212}') {
            negative = !negative;
            pos += 1;
            skip_ws(&mut pos);
        }
        if pos >= chars.len() {
            return Err((pos, "empty monomial".into()));
        }
        let k = self.k();
        let mut exps = vec![0u32; k];
        let mut zero = false;
        let mut any = false;
        let mut by_len: Vec<(usize, &String)> = self.generators.iter().enumerate().collect();
        by_len.sort_by_key(|(_, g)| Reverse(g.chars().count()));
        while pos < chars.len() {
            let start = pos;
            if chars[pos] == '0' || chars[pos] == '1' {
                if chars[pos] == '0' {
                    zero = true;
                }
                pos += 1;
            } else {
                let rest: String = chars[pos..].iter().collect();
                let hit = by_len.iter().find(|(_, g)| rest.starts_with(g.as_str()));
                let Some(&(gi, g)) = hit else {
                    return Err((start, format!("unknown generator at `{rest}`")));
                };
                pos += g.chars().count();
                let mut power = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let digits_start = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if digits_start == pos {
                        return Err((digits_start, "expected exponent after `^`".into()));
                    }
                    let text: String = chars[digits_start..pos].iter().collect();
                    power = text.parse().map_err(|_| (digits_start, format!("bad exponent `{text}`")))?;
                } else if pos < chars.len() && chars[pos] == '\u{00b2}' {
                    pos += 1;
                    power = 2;
                } else if pos < chars.len() && chars[pos] == '\u{00b3}' {
                    pos += 1;
                    power = 3;
                }
                exps[gi] += power;
            }
            any = true;
            skip_ws(&mut pos);
        }
        if !any {
            return Err((pos, "empty monomial".into()));
        }
        if zero {
            return Ok(Monomial::Zero);
        }
        Ok(Monomial::Term { negative, exps: exps.into_iter().map(reduce_exp).collect() })
    }

    /// Display name with unicode signs and powers, e.g. `−x²z`.
    pub fn render(&self, m: &Monomial) -> String {
        render_with(&self.generators, m, "\u{2212}", "\u{00b2}")
    }

    /// ASCII spelling used in structure files, e.g. `-x^2z`.
    pub fn render_ascii(&self, m: &Monomial) -> String {
        render_with(&self.generators, m, "-", "^2")
    }

    /// Builds the TS defined by this presentation.
    pub fn build(&self) -> Result<FiniteTs> {
        build_from_presentation(self)
    }
}

fn render_with(gens: &[String], m: &Monomial, minus: &str, square: &str) -> String {
    match m {
        Monomial::Zero => "0".into(),
        Monomial::Term { negative, exps } => {
            let mut s = String::new();
            if *negative {
                s.push_str(minus);
            }
            let mut any = false;
            for (g, &e) in gens.iter().zip(exps) {
                if e > 0 {
                    // separate multi-letter names so the text re-parses
                    if any && g.chars().count() > 1 && minus == "-" {
                        s.push(' ');
                    }
                    s.push_str(g);
                    if e == 2 {
                        s.push_str(square);
                    }
                    any = true;
                }
            }
            if !any {
                s.push('1');
            }
            s
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.generators.join(", "))?;
        let rels: Vec<String> =
            self.relations.iter().map(|(l, r)| format!("{} = {}", self.render(l), self.render(r))).collect();
        if !rels.is_empty() {
            write!(f, " | {}", rels.join(", "))?;
        }
        write!(f, ">")
    }
}

/// The free TS on `k` generators, indexed densely: index 0 is zero and
/// index `1 + 2·code + sign` is `±x^e` where `code` is `e` read in base 3.
struct FreeTs {
    k: usize,
    monomials: usize,
}

impl FreeTs {
    fn new(k: usize) -> FreeTs {
        FreeTs { k, monomials: 3usize.pow(k as u32) }
    }

    fn len(&self) -> usize {
        2 * self.monomials + 1
    }

    fn encode(&self, m: &Monomial) -> usize {
        match m {
            Monomial::Zero => 0,
            Monomial::Term { negative, exps } => {
                let code = exps.iter().rev().fold(0usize, |acc, &e| acc * 3 + e as usize);
                1 + 2 * code + usize::from(*negative)
            }
        }
    }

    fn decode(&self, i: usize) -> Monomial {
        if i == 0 {
            return Monomial::Zero;
        }
        let negative = (i - 1) % 2 == 1;
        let mut code = (i - 1) / 2;
        let mut exps = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            exps.push((code % 3) as u8);
            code /= 3;
        }
        Monomial::Term { negative, exps }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match (self.decode(a), self.decode(b)) {
            (Monomial::Term { negative: na, exps: ea }, Monomial::Term { negative: nb, exps: eb }) => {
                let exps = ea.iter().zip(&eb).map(|(&x, &y)| reduce_exp((x + y) as u32)).collect();
                self.encode(&Monomial::Term { negative: na != nb, exps })
            }
            _ => 0,
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Sort key for naming and ordering: lower degree first, then fewer odd
/// exponents, then larger exponents on earlier generators, positive first.
fn monomial_key(m: &Monomial) -> (usize, usize, Reverse<Vec<u8>>, bool) {
    match m {
        Monomial::Zero => (0, 0, Reverse(Vec::new()), false),
        Monomial::Term { negative, exps } => {
            let odd = exps.iter().filter(|&&e| e == 1).count();
            (m.degree(), odd, Reverse(exps.clone()), *negative)
        }
    }
}

/// Builds the TS presented by `p`: the free TS modulo the congruence
/// generated by the relations, with `x ≡ -x` classes merged into `0`.
///
/// Elements are ordered `1, 0, -1`, then by the monomial key of their
/// class representative, each element followed by its negative.
pub fn build_from_presentation(p: &Presentation) -> Result<FiniteTs> {
    let free = FreeTs::new(p.k());
    let n = free.len();
    let table: Vec<usize> = (0..n * n).map(|i| free.mul(i / n, i % n)).collect();
    let mul = |a: usize, b: usize| table[a * n + b];
    let neg_one = free.encode(&Monomial::minus_one(p.k()));
    let one = free.encode(&Monomial::one(p.k()));

    let mut uf = UnionFind::new(n);
    for (l, r) in &p.relations {
        uf.union(free.encode(l), free.encode(r));
    }
    loop {
        let mut changed = false;
        // congruence: a ≡ rep(a) must give a·g ≡ rep(a)·g
        loop {
            let mut pass = false;
            for a in 0..n {
                let r = uf.find(a);
                if r != a {
                    for g in 0..n {
                        pass |= uf.union(mul(a, g), mul(r, g));
                    }
                }
            }
            if !pass {
                break;
            }
            changed = true;
        }
        for a in 0..n {
            if uf.find(a) == uf.find(mul(neg_one, a)) && uf.find(a) != uf.find(0) {
                uf.union(a, 0);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if uf.find(one) == uf.find(neg_one) {
        return Err(Error::Degenerate);
    }

    // Representative per class: smallest monomial key.
    let mut rep_of_root: Vec<Option<usize>> = vec![None; n];
    for a in 0..n {
        let r = uf.find(a);
        let better = match rep_of_root[r] {
            None => true,
            Some(cur) => monomial_key(&free.decode(a)) < monomial_key(&free.decode(cur)),
        };
        if better {
            rep_of_root[r] = Some(a);
        }
    }
    let zero_root = uf.find(0);
    let one_root = uf.find(one);
    let neg_root = uf.find(neg_one);
    let mut roots: Vec<usize> = (0..n).filter(|&a| uf.find(a) == a).collect();
    roots.sort_by_key(|&r| {
        let rank = if r == one_root {
            0
        } else if r == zero_root {
            1
        } else if r == neg_root {
            2
        } else {
            3
        };
        let rep = if r == zero_root { 0 } else { rep_of_root[r].unwrap() };
        (rank, monomial_key(&free.decode(rep)))
    });
    let mut class_index = vec![usize::MAX; n];
    for (i, &r) in roots.iter().enumerate() {
        class_index[r] = i;
    }
    let index_of = |uf: &mut UnionFind, a: usize| class_index[uf.find(a)];
    let m = roots.len();
    let names: Vec<String> = roots
        .iter()
        .map(|&r| if r == zero_root { "0".to_string() } else { p.render(&free.decode(rep_of_root[r].unwrap())) })
        .collect();
    let mut qtable = vec![0u32; m * m];
    for (i, &ri) in roots.iter().enumerate() {
        for (j, &rj) in roots.iter().enumerate() {
            let prod = mul(rep_of_root[ri].unwrap_or(0), rep_of_root[rj].unwrap_or(0));
            qtable[i * m + j] = index_of(&mut uf, prod) as u32;
        }
    }
    let constants =
        (Elem::new(index_of(&mut uf, one)), Elem::new(index_of(&mut uf, 0)), Elem::new(index_of(&mut uf, neg_one)));
    let images: Vec<Elem> =
        (0..p.k()).map(|i| Elem::new(index_of(&mut uf, free.encode(&Monomial::generator(p.k(), i))))).collect();
    Ok(FiniteTs::from_parts(names, qtable, constants, Some((p.clone(), images))))
}

impl FiniteTs {
    /// Element of the TS denoted by monomial `m` of its presentation.
    pub fn eval_monomial(&self, m: &Monomial) -> Option<Elem> {
        self.presentation()?;
        match m {
            Monomial::Zero => Some(self.zero()),
            Monomial::Term { negative, exps } => {
                let mut acc = if *negative { self.minus_one() } else { self.one() };
                for (i, &e) in exps.iter().enumerate() {
                    let g = *self.generator_images().get(i)?;
                    for _ in 0..e {
                        acc = self.mul(acc, g);
                    }
                }
                Some(acc)
            }
        }
    }

    /// Element of the TS denoted by a monomial written in the presentation's
    /// syntax (falls back to display-name lookup for table structures).
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        if let Some(e) = self.find(text) {
            return Ok(e);
        }
        let p = self.presentation().ok_or_else(|| Error::UnknownElement(text.to_string()))?;
        let m = p.parse_monomial(text).map_err(|_| Error::UnknownElement(text.to_string()))?;
        self.eval_monomial(&m).ok_or_else(|| Error::UnknownElement(text.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_on_one_generator() {
        let ts = Presentation::new(&["x"]).build().unwrap();
        assert_eq!(ts.names(), &["1", "0", "−1", "x", "−x", "x²", "−x²"]);
        assert!(ts.axiom_report().all_pass());
    }

    #[test]
    fn idempotent_generator() {
        let ts = Presentation::new(&["x"]).with("x^2 = x").unwrap().build().unwrap();
        assert_eq!(ts.names(), &["1", "0", "−1", "x", "−x"]);
    }

    #[test]
    fn free_sizes() {
        for k in 0..=3 {
            let gens = ["x", "y", "z"];
            let ts = Presentation::new(&gens[..k]).build().unwrap();
            assert_eq!(ts.len(), 2 * 3usize.pow(k as u32) + 1);
        }
    }

    #[test]
    fn degenerate_rejected() {
        let p = Presentation::new(&["x"]).with("x = -x").unwrap().with("x = 1").unwrap();
        assert_eq!(p.build().unwrap_err(), Error::Degenerate);
        let p = Presentation::new(&[]).with("1 = -1").unwrap();
        assert_eq!(p.build().unwrap_err(), Error::Degenerate);
        let p = Presentation::new(&["x"]).with("x^2 = 0").unwrap().with("x^2 = 1").unwrap();
        assert_eq!(p.build().unwrap_err(), Error::Degenerate);
    }

    #[test]
    fn sign_collapse_goes_to_zero() {
        // x = -x forces x = 0 and then everything divisible by x is 0
        let ts = Presentation::new(&["x", "y"]).with("x = -x").unwrap().build().unwrap();
        assert_eq!(ts.names(), &["1", "0", "−1", "y", "−y", "y²", "−y²"]);
    }

    #[test]
    fn parse_monomials() {
        let p = Presentation::new(&["x", "y", "z"]);
        let m = p.parse_monomial("-x^2 z").unwrap();
        assert_eq!(p.render(&m), "−x²z");
        assert_eq!(p.parse_monomial("x²z").unwrap(), p.parse_monomial("x^2*z").unwrap());
        assert_eq!(p.parse_monomial("x^3").unwrap(), p.parse_monomial("x").unwrap());
        assert_eq!(p.parse_monomial("x^4").unwrap(), p.parse_monomial("x^2").unwrap());
        assert_eq!(p.parse_monomial("- -1").unwrap(), Monomial::one(3));
        assert_eq!(p.parse_monomial("x0").unwrap(), Monomial::Zero);
        assert!(p.parse_monomial("w").is_err());
        assert_eq!(p.parse_monomial("x^").unwrap_err().0, 2);
        assert!(p.parse_monomial("  ").is_err());
    }

    #[test]
    fn multi_letter_generators_render_and_reparse() {
        let p = Presentation::new(&["a", "ab"]);
        let m = p.parse_monomial("a ab^2").unwrap();
        let txt = p.render_ascii(&m);
        assert_eq!(p.parse_monomial(&txt).unwrap(), m);
    }
}
