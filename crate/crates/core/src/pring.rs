//! Exact checks on preordered rings at sample scale: the dual numbers
//! `ℚ[X]/(X²)` and the integers.
//!
//! Statements about infinite rings are only ever checked on a finite
//! sample or refuted by an explicit witness; the reports say which.

use num_rational::Rational64;
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg};

/// `aX + b` with `X² = 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualNumber {
    /// Coefficient of `X`.
    pub a: Rational64,
    /// Constant term.
    pub b: Rational64,
}

impl DualNumber {
    pub fn new(a: Rational64, b: Rational64) -> DualNumber {
        DualNumber { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> DualNumber {
        DualNumber::new(Rational64::from_integer(a), Rational64::from_integer(b))
    }

    pub fn x() -> DualNumber {
        DualNumber::from_ints(1, 0)
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    fn add(self, o: DualNumber) -> DualNumber {
        DualNumber::new(self.a + o.a, self.b + o.b)
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    fn mul(self, o: DualNumber) -> DualNumber {
        DualNumber::new(self.a * o.b + o.a * self.b, self.b * o.b)
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    fn neg(self) -> DualNumber {
        DualNumber::new(-self.a, -self.b)
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < Rational64::from_integer(0) {
            write!(f, "{}X-{}", self.a, -self.b)
        } else {
            write!(f, "{}X+{}", self.a, self.b)
        }
    }
}

/// The ring operations the checks need.
pub trait SampleRing:
    Copy + PartialEq + fmt::Display + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
}

impl SampleRing for DualNumber {
    fn zero() -> Self {
        DualNumber::from_ints(0, 0)
    }
    fn one() -> Self {
        DualNumber::from_ints(0, 1)
    }
}

impl SampleRing for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
}

/// A named, decidable subset of a ring.
#[derive(Copy, Clone)]
pub struct Predicate<R> {
    pub name: &'static str,
    pub member: fn(&R) -> bool,
}

impl<R> Predicate<R> {
    pub fn contains(&self, v: &R) -> bool {
        (self.member)(v)
    }
}

impl<R> fmt::Debug for Predicate<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

fn zero_q() -> Rational64 {
    Rational64::from_integer(0)
}

/// `aX + b ∈ T` iff `b > 0`, or `b = 0` and `a ≥ 0`.
pub fn lex_preorder_member(v: &DualNumber) -> bool {
    v.b > zero_q() || (v.b == zero_q() && v.a >= zero_q())
}

pub fn lex_preorder() -> Predicate<DualNumber> {
    Predicate { name: "lex", member: lex_preorder_member }
}

/// Sums of squares of `ℚ[X]/(X²)`: `b > 0`, or `0` itself.
pub fn dual_sums_of_squares() -> Predicate<DualNumber> {
    Predicate { name: "sos", member: |v| v.b > zero_q() || (v.a == zero_q() && v.b == zero_q()) }
}

/// `b ≥ 0`.
pub fn nonneg_constant() -> Predicate<DualNumber> {
    Predicate { name: "const-nonneg", member: |v| v.b >= zero_q() }
}

/// `T ∪ {X, −X}` for the lex preorder `T`.
pub fn lex_with_x() -> Predicate<DualNumber> {
    Predicate { name: "lex+X", member: |v| lex_preorder_member(v) || *v == DualNumber::x() || *v == -DualNumber::x() }
}

/// Sums of squares of `ℤ`, i.e. `n ≥ 0`.
pub fn integer_sums_of_squares() -> Predicate<i64> {
    Predicate { name: "sos", member: |n| *n >= 0 }
}

/// Every `aX + b` with integers `|a|, |b| ≤ n`.
pub fn dual_sample(n: i64) -> Vec<DualNumber> {
    (-n..=n).flat_map(|a| (-n..=n).map(move |b| DualNumber::from_ints(a, b))).collect()
}

pub fn integer_sample(n: i64) -> Vec<i64> {
    (-n..=n).collect()
}

/// A check evaluated on a sample.  `witness` refutes the statement outright;
/// `holds_on_sample` without a witness is not a proof for the whole ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    pub name: String,
    pub holds_on_sample: bool,
    pub witness: Option<Vec<String>>,
}

impl SampleCheck {
    fn from_witness<R: fmt::Display>(name: &str, w: Option<Vec<R>>) -> SampleCheck {
        SampleCheck {
            name: name.to_string(),
            holds_on_sample: w.is_none(),
            witness: w.map(|w| w.iter().map(ToString::to_string).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub subject: String,
    pub sample_size: usize,
    pub checks: Vec<SampleCheck>,
}

impl SampleReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds_on_sample)
    }

    pub fn get(&self, name: &str) -> Option<&SampleCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.holds_on_sample)
    }
}

fn find_pair<R: SampleRing>(sample: &[R], f: impl Fn(R, R) -> bool) -> Option<Vec<R>> {
    sample.iter().find_map(|&x| sample.iter().find(|&&y| f(x, y)).map(|&y| vec![x, y]))
}

fn find_one<R: SampleRing>(sample: &[R], f: impl Fn(R) -> bool) -> Option<Vec<R>> {
    sample.iter().find(|&&x| f(x)).map(|&x| vec![x])
}

/// Squares in `T`, `T·T ⊆ T`, `T + T ⊆ T`, `−1 ∉ T`, `T ∪ −T` covers.
pub fn verify_total_preorder<R: SampleRing>(t: &Predicate<R>, sample: &[R]) -> SampleReport {
    let inn = |v: R| t.contains(&v);
    let checks = vec![
        SampleCheck::from_witness("squares", find_one(sample, |x| !inn(x * x))),
        SampleCheck::from_witness("product", find_pair(sample, |x, y| inn(x) && inn(y) && !inn(x * y))),
        SampleCheck::from_witness("sum", find_pair(sample, |x, y| inn(x) && inn(y) && !inn(x + y))),
        SampleCheck::from_witness("proper", inn(-R::one()).then(|| vec![-R::one()])),
        SampleCheck::from_witness("total", find_one(sample, |x| !inn(x) && !inn(-x))),
    ];
    SampleReport { subject: t.name.to_string(), sample_size: sample.len(), checks }
}

/// `T ∩ −T` on a sample, with convexity and radical checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Support {
    pub members: Vec<String>,
    pub convex: SampleCheck,
    pub radical: SampleCheck,
}

/// Whether `(a, t)` refutes `T`-radicality of the support: `t ∈ T`,
/// `a² + t ∈ T ∩ −T`, `a ∉ T ∩ −T`.
pub fn radical_violation<R: SampleRing>(t: &Predicate<R>, a: R, s: R) -> bool {
    let supp = |v: R| t.contains(&v) && t.contains(&-v);
    t.contains(&s) && supp(a * a + s) && !supp(a)
}

pub fn support<R: SampleRing>(t: &Predicate<R>, sample: &[R]) -> Support {
    let inn = |v: R| t.contains(&v);
    let supp = |v: R| inn(v) && inn(-v);
    let members = sample.iter().filter(|&&v| supp(v)).map(ToString::to_string).collect();
    let convex = SampleCheck::from_witness(
        "convex",
        find_pair(sample, |t1, t2| inn(t1) && inn(t2) && supp(t1 + t2) && !(supp(t1) && supp(t2))),
    );
    let radical = SampleCheck::from_witness("radical", find_pair(sample, |a, s| radical_violation(t, a, s)));
    Support { members, convex, radical }
}

/// The six conditions describing subsets `S` that correspond to characters,
/// plus closure under addition.
pub fn ts_char_subset_conditions<R: SampleRing>(s: &Predicate<R>, t: &Predicate<R>, sample: &[R]) -> SampleReport {
    let ins = |v: R| s.contains(&v);
    let sym = |v: R| ins(v) && ins(-v);
    let checks = vec![
        SampleCheck::from_witness("1", find_one(sample, |x| t.contains(&x) && !ins(x))),
        SampleCheck::from_witness("2", find_pair(sample, |x, y| ins(x) && ins(y) && !ins(x * y))),
        SampleCheck::from_witness("3", ins(-R::one()).then(|| vec![-R::one()])),
        SampleCheck::from_witness("4", find_one(sample, |x| !ins(x) && !ins(-x))),
        SampleCheck::from_witness("5", find_pair(sample, |x, y| sym(x * y) && !sym(x) && !sym(y))),
        SampleCheck::from_witness(
            "6",
            find_pair(sample, |t1, t2| t.contains(&t1) && t.contains(&t2) && sym(t1 + t2) && !(sym(t1) && sym(t2))),
        ),
        SampleCheck::from_witness("additive", find_pair(sample, |x, y| ins(x) && ins(y) && !ins(x + y))),
    ];
    SampleReport { subject: format!("{} over {}", s.name, t.name), sample_size: sample.len(), checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: i64, b: i64) -> DualNumber {
        DualNumber::from_ints(a, b)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(DualNumber::x() * DualNumber::x(), d(0, 0));
        assert_eq!(d(1, 2) * d(3, 4), d(10, 8));
        assert_eq!(d(2, 0).to_string(), "2X+0");
        assert_eq!(d(0, -1).to_string(), "0X-1");
    }

    #[test]
    fn lex_members() {
        assert!(lex_preorder_member(&d(2, 0)));
        assert!(!lex_preorder_member(&d(0, -1)));
        assert!(lex_preorder_member(&d(-5, 3)));
    }

    #[test]
    fn lex_is_total() {
        for n in [2, 5] {
            assert!(verify_total_preorder(&lex_preorder(), &dual_sample(n)).all_hold());
        }
        let s = support(&lex_preorder(), &dual_sample(2));
        assert_eq!(s.members, vec!["0X+0"]);
        assert!(s.convex.holds_on_sample && !s.radical.holds_on_sample);
        assert!(radical_violation(&lex_preorder(), DualNumber::x(), d(0, 0)));
        assert!(!radical_violation(&lex_preorder(), d(0, 0), d(0, 0)));
    }

    #[test]
    fn sums_of_squares() {
        let r = verify_total_preorder(&dual_sums_of_squares(), &dual_sample(2));
        assert!(!r.holds("total") && r.holds("product") && r.holds("sum"));
        let r = verify_total_preorder(&integer_sums_of_squares(), &integer_sample(3));
        assert!(r.all_hold());
    }

    #[test]
    fn subset_conditions() {
        let t = lex_preorder();
        let sample = dual_sample(2);
        let lex = ts_char_subset_conditions(&t, &t, &sample);
        // S ∩ −S = {0} and X·X = 0
        assert!(!lex.holds("5"));
        assert!(["1", "2", "3", "4", "6", "additive"].iter().all(|c| lex.holds(c)));
        let cone = ts_char_subset_conditions(&nonneg_constant(), &t, &sample);
        assert!(cone.all_hold(), "{cone:?}");
        let pos = ts_char_subset_conditions(&dual_sums_of_squares(), &t, &sample);
        assert_eq!(pos.get("4").unwrap().witness, Some(vec!["-2X+0".to_string()]));
        let wx = ts_char_subset_conditions(&lex_with_x(), &t, &sample);
        assert!(!wx.holds("5"));
    }
}
