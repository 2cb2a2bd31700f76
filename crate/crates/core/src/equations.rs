//! Equations `b_1 D_{m_1}(X_1, a_1) + ... + b_n D_{m_n}(X_n, a_n) = c` and
//! exact solution counts.
//!
//! Two counting routes are kept deliberately separate:
//!
//! - [`count_naive`] walks every point of `C_1 x ... x C_n` and evaluates
//!   each term through the Dickson recurrence.
//! - [`count_convolution`] builds, per variable, the histogram of term values
//!   over `C_j` and folds the histograms by convolution over `(F_q, +)`.
//!
//! Counts are unbounded integers. A variable with no restriction ranges over
//! all of `F_q`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::polys::{dickson_table, dickson_value};

/// Default cap on the number of points a naive count may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// One summand `b * D_m(X, a)`; `a = 0` gives the monomial `b X^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub b: Elem,
    pub m: u64,
    pub a: Elem,
}

impl Term {
    pub fn new(b: Elem, m: u64, a: Elem) -> Result<Term> {
        if b.is_zero() {
            return Err(Error::Precondition("term coefficient b must be nonzero".into()));
        }
        if m == 0 {
            return Err(Error::ZeroPolyDegree);
        }
        Ok(Term { b, m, a })
    }

    /// `b X^m`.
    pub fn power(b: Elem, m: u64) -> Result<Term> {
        Term::new(b, m, Elem::ZERO)
    }

    pub fn is_power(&self) -> bool {
        self.a.is_zero()
    }

    /// `b * D_m(x, a)` by the recurrence.
    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        field.mul(self.b, dickson_value(field, self.m, self.a, x))
    }

    /// Term values at every point, monomials by exponentiation and Dickson
    /// terms by one shared recurrence table.
    pub fn values(&self, field: &Field, points: &[Elem]) -> Vec<Elem> {
        if self.is_power() {
            points
                .iter()
                .map(|&x| field.mul(self.b, field.pow_u(x, self.m)))
                .collect()
        } else {
            let table = dickson_table(field, self.a, self.m, points);
            table[self.m as usize]
                .iter()
                .map(|&v| field.mul(self.b, v))
                .collect()
        }
    }
}

/// A single equation over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSpec {
    field: Field,
    terms: Vec<Term>,
    c: Elem,
}

impl EquationSpec {
    pub fn new(field: &Field, terms: Vec<Term>, c: Elem) -> Result<EquationSpec> {
        if terms.is_empty() {
            return Err(Error::Precondition("an equation needs at least one term".into()));
        }
        for t in &terms {
            Term::new(t.b, t.m, t.a)?;
            for x in [t.b, t.a] {
                field.elem(x.0 as u64)?;
            }
        }
        field.elem(c.0 as u64)?;
        Ok(EquationSpec {
            field: field.clone(),
            terms,
            c,
        })
    }

    /// `b_1 X_1^{m_1} + ... + b_n X_n^{m_n} = c`.
    pub fn diagonal(field: &Field, coeffs: &[(Elem, u64)], c: Elem) -> Result<EquationSpec> {
        let terms = coeffs
            .iter()
            .map(|&(b, m)| Term::power(b, m))
            .collect::<Result<Vec<_>>>()?;
        EquationSpec::new(field, terms, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn c(&self) -> Elem {
        self.c
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.iter().all(Term::is_power)
    }

    pub fn with_c(&self, c: Elem) -> EquationSpec {
        EquationSpec { c, ..self.clone() }
    }

    /// The same equation with terms reordered by `order` (a permutation of
    /// `0..n`).
    pub fn permuted(&self, order: &[usize]) -> Result<EquationSpec> {
        let mut seen = vec![false; self.n()];
        for &i in order {
            if i >= self.n() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!("{order:?} is not a permutation")));
            }
        }
        if order.len() != self.n() {
            return Err(Error::Precondition(format!("{order:?} is not a permutation")));
        }
        let terms = order.iter().map(|&i| self.terms[i]).collect();
        EquationSpec::new(&self.field, terms, self.c)
    }

    /// Left-hand side at `point`, by the recurrence.
    pub fn lhs(&self, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.n() {
            return Err(Error::ArityMismatch {
                expected: self.n(),
                got: point.len(),
            });
        }
        let f = &self.field;
        Ok(self
            .terms
            .iter()
            .zip(point)
            .fold(Elem::ZERO, |acc, (t, &x)| f.add(acc, t.eval(f, x))))
    }

    pub fn is_solution(&self, point: &[Elem]) -> Result<bool> {
        Ok(self.lhs(point)? == self.c)
    }

    /// Whether the all-zero vector solves the equation.
    pub fn zero_is_solution(&self) -> bool {
        self.is_solution(&vec![Elem::ZERO; self.n()])
            .expect("arity matches")
    }
}

impl fmt::Display for EquationSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.field;
        let parts: Vec<String> = self
            .terms
            .iter()
            .enumerate()
            .map(|(j, t)| {
                if t.is_power() {
                    format!("{}*X{}^{}", f.format(t.b), j + 1, t.m)
                } else {
                    format!("{}*D{}(X{}, {})", f.format(t.b), t.m, j + 1, f.format(t.a))
                }
            })
            .collect();
        write!(out, "{} = {} over F_{}", parts.join(" + "), f.format(self.c), f.q())
    }
}

/// Per-variable nonempty subsets `C_1, ..., C_n` of the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionSet {
    sets: Vec<Vec<Elem>>,
}

impl RestrictionSet {
    /// Sorts and deduplicates each set; rejects empty sets and foreign
    /// elements.
    pub fn new(field: &Field, sets: Vec<Vec<Elem>>) -> Result<RestrictionSet> {
        let mut sets = sets;
        for set in &mut sets {
            if set.is_empty() {
                return Err(Error::EmptyRestriction);
            }
            for &x in set.iter() {
                field.elem(x.0 as u64)?;
            }
            set.sort_unstable();
            set.dedup();
        }
        Ok(RestrictionSet { sets })
    }

    pub fn full(field: &Field, n: usize) -> RestrictionSet {
        RestrictionSet {
            sets: vec![field.enumerate(); n],
        }
    }

    /// Every variable restricted to the subfield `F_{p^l}`.
    pub fn subfield(field: &Field, n: usize, l: u32) -> Result<RestrictionSet> {
        let sub = field.subfield_elements(l)?;
        Ok(RestrictionSet { sets: vec![sub; n] })
    }

    pub fn sets(&self) -> &[Vec<Elem>] {
        &self.sets
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn product_size(&self) -> u128 {
        self.sets
            .iter()
            .map(|s| s.len() as u128)
            .fold(1u128, |acc, k| acc.saturating_mul(k))
    }

    pub fn contains_zero_vector(&self) -> bool {
        self.sets.iter().all(|s| s.binary_search(&Elem::ZERO).is_ok())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Naive,
    Convolution,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Naive => "naive",
            CountMethod::Convolution => "convolution",
        })
    }
}

/// An exact solution count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    #[serde(rename = "N", serialize_with = "serialize_biguint")]
    pub count: BigUint,
    pub method: CountMethod,
    pub q: u32,
    pub n: usize,
    pub divisible_by_p: bool,
    /// Present only when the zero vector is itself an admissible solution;
    /// then it says whether some other solution exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub has_nontrivial: Option<bool>,
}

impl CountReport {
    /// Wraps an externally computed count for `eq` over `restrict`.
    pub fn from_count(eq: &EquationSpec, restrict: &RestrictionSet, count: BigUint, method: CountMethod) -> Self {
        let p = BigUint::from(eq.field.p());
        let zero_admissible = restrict.contains_zero_vector() && eq.zero_is_solution();
        CountReport {
            divisible_by_p: count.is_multiple_of(&p),
            has_nontrivial: zero_admissible.then(|| count > BigUint::one()),
            count,
            method,
            q: eq.field.q(),
            n: eq.n(),
        }
    }

    pub fn count_u64(&self) -> Option<u64> {
        self.count.to_u64()
    }
}

fn serialize_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(small) => s.serialize_u64(small),
        None => s.serialize_str(&v.to_string()),
    }
}

fn resolve<'a>(
    eq: &EquationSpec,
    restrict: Option<&'a RestrictionSet>,
    owned: &'a mut Option<RestrictionSet>,
) -> Result<&'a RestrictionSet> {
    match restrict {
        Some(r) if r.n() != eq.n() => Err(Error::ArityMismatch {
            expected: eq.n(),
            got: r.n(),
        }),
        Some(r) => Ok(r),
        None => Ok(owned.insert(RestrictionSet::full(&eq.field, eq.n()))),
    }
}

fn check_budget(restrict: &RestrictionSet, budget: u64) -> Result<()> {
    let needed = restrict.product_size();
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Exact count by visiting every admissible point. The outermost variable's
/// range is split across worker threads; partial counts are summed.
pub fn count_naive(
    eq: &EquationSpec,
    restrict: Option<&RestrictionSet>,
    budget: u64,
) -> Result<CountReport> {
    let mut owned = None;
    let restrict = resolve(eq, restrict, &mut owned)?;
    check_budget(restrict, budget)?;
    let f = &eq.field;
    let values: Vec<Vec<Elem>> = eq
        .terms
        .iter()
        .zip(restrict.sets())
        .map(|(t, set)| set.iter().map(|&x| t.eval(f, x)).collect())
        .collect();

    let total: u64 = values[0]
        .par_iter()
        .map(|&first| count_tail(f, &values[1..], first, eq.c))
        .sum();
    Ok(CountReport::from_count(eq, restrict, BigUint::from(total), CountMethod::Naive))
}

fn count_tail(f: &Field, rest: &[Vec<Elem>], partial: Elem, target: Elem) -> u64 {
    match rest {
        [] => (partial == target) as u64,
        [last] => last.iter().filter(|&&v| f.add(partial, v) == target).count() as u64,
        [head, tail @ ..] => head
            .iter()
            .map(|&v| count_tail(f, tail, f.add(partial, v), target))
            .sum(),
    }
}

/// Histogram of `values` over the field, indexed by element.
fn histogram(q: usize, values: &[Elem]) -> Vec<BigUint> {
    let mut counts = vec![0u64; q];
    for v in values {
        counts[v.index()] += 1;
    }
    counts.into_iter().map(BigUint::from).collect()
}

/// Additive convolution of two histograms over `(F_q, +)`.
fn convolve(f: &Field, left: &[BigUint], right: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); left.len()];
    for (u, lc) in left.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (v, rc) in right.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let s = f.add(Elem(u as u32), Elem(v as u32));
            out[s.index()] += lc * rc;
        }
    }
    out
}

/// Number of admissible points at which the left-hand side takes each value,
/// indexed by element; entry `c` is the solution count for right side `c`.
pub fn lhs_histogram(eq: &EquationSpec, restrict: Option<&RestrictionSet>) -> Result<Vec<BigUint>> {
    let mut owned = None;
    let restrict = resolve(eq, restrict, &mut owned)?;
    let f = &eq.field;
    let q = f.q() as usize;
    let mut hists = eq
        .terms
        .iter()
        .zip(restrict.sets())
        .map(|(t, set)| histogram(q, &t.values(f, set)));
    let first = hists.next().expect("equations are nonempty");
    Ok(hists.fold(first, |acc, h| convolve(f, &acc, &h)))
}

/// Exact count by histogram convolution; `O(n q^2)` after building the
/// per-variable value tables.
pub fn count_convolution(eq: &EquationSpec, restrict: Option<&RestrictionSet>) -> Result<CountReport> {
    let mut owned = None;
    let restrict = resolve(eq, restrict, &mut owned)?;
    let hist = lhs_histogram(eq, Some(restrict))?;
    let count = hist[eq.c.index()].clone();
    Ok(CountReport::from_count(eq, restrict, count, CountMethod::Convolution))
}

/// Whether the equation has at least two admissible solutions.
pub fn has_second_solution(eq: &EquationSpec, restrict: Option<&RestrictionSet>) -> Result<bool> {
    Ok(count_convolution(eq, restrict)?.count >= BigUint::from(2u8))
}

/// Up to `limit` solutions in lexicographic order (first variable slowest),
/// each re-checked by direct evaluation.
pub fn enumerate_solutions(
    eq: &EquationSpec,
    restrict: Option<&RestrictionSet>,
    limit: usize,
    budget: u64,
) -> Result<Vec<Vec<Elem>>> {
    if limit == 0 {
        return Err(Error::Precondition("limit must be at least 1".into()));
    }
    let mut owned = None;
    let restrict = resolve(eq, restrict, &mut owned)?;
    check_budget(restrict, budget)?;
    let sets = restrict.sets();
    let mut found = Vec::new();
    let mut idx = vec![0usize; sets.len()];
    loop {
        let point: Vec<Elem> = idx.iter().zip(sets).map(|(&i, s)| s[i]).collect();
        if eq.is_solution(&point)? {
            found.push(point);
            if found.len() == limit {
                break;
            }
        }
        // odometer, last variable fastest
        let mut k = sets.len();
        loop {
            if k == 0 {
                return Ok(found);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sets[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok(found)
}

/// Count with every variable restricted to the subfield `F_{p^l}`.
pub fn count_in_subfield(eq: &EquationSpec, l: u32) -> Result<CountReport> {
    let restrict = RestrictionSet::subfield(&eq.field, eq.n(), l)?;
    count_convolution(eq, Some(&restrict))
}

/// A field element as written in equation files: an integer (prime
/// subfield) or a coefficient list, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemLiteral {
    Int(i64),
    Coeffs(Vec<i64>),
}

impl ElemLiteral {
    pub fn resolve(&self, field: &Field) -> Result<Elem> {
        match self {
            ElemLiteral::Int(n) => Ok(field.from_int(*n)),
            ElemLiteral::Coeffs(cs) => field.from_coeffs(cs),
        }
    }

    pub fn of(field: &Field, x: Elem) -> ElemLiteral {
        if field.s() == 1 {
            ElemLiteral::Int(x.0 as i64)
        } else {
            ElemLiteral::Coeffs(field.coeffs(x).into_iter().map(i64::from).collect())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub b: ElemLiteral,
    pub m: u64,
    #[serde(default = "zero_literal")]
    pub a: ElemLiteral,
}

fn zero_literal() -> ElemLiteral {
    ElemLiteral::Int(0)
}

/// On-disk form of an equation:
/// `{"field": "p^s", "c": <elem>, "terms": [{"b": <elem>, "m": int, "a": <elem>}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationFile {
    pub field: String,
    pub c: ElemLiteral,
    pub terms: Vec<TermFile>,
}

impl EquationFile {
    pub fn to_spec(&self) -> Result<EquationSpec> {
        let field = Field::parse(&self.field)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.b.resolve(&field)?, t.m, t.a.resolve(&field)?))
            .collect::<Result<Vec<_>>>()?;
        EquationSpec::new(&field, terms, self.c.resolve(&field)?)
    }

    pub fn from_spec(eq: &EquationSpec) -> EquationFile {
        let f = &eq.field;
        EquationFile {
            field: f.notation(),
            c: ElemLiteral::of(f, eq.c),
            terms: eq
                .terms
                .iter()
                .map(|t| TermFile {
                    b: ElemLiteral::of(f, t.b),
                    m: t.m,
                    a: ElemLiteral::of(f, t.a),
                })
                .collect(),
        }
    }
}

pub fn parse_equation_json(text: &str) -> Result<EquationSpec> {
    let file: EquationFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("equation file: {e}")))?;
    file.to_spec()
}

pub fn equation_to_json(eq: &EquationSpec) -> String {
    serde_json::to_string(&EquationFile::from_spec(eq)).expect("equation files serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, s: u32) -> Field {
        Field::new(p, s).unwrap()
    }

    fn squares_f3(n: usize, c: i64) -> EquationSpec {
        let f3 = f(3, 1);
        EquationSpec::diagonal(&f3, &vec![(Elem::ONE, 2); n], f3.from_int(c)).unwrap()
    }

    fn counterexample(g: Elem) -> EquationSpec {
        let f25 = f(5, 2);
        EquationSpec::diagonal(&f25, &[(Elem::ONE, 3), (g, 3)], Elem::ZERO).unwrap()
    }

    #[test]
    fn single_variable() {
        let f7 = f(7, 1);
        let eq = EquationSpec::diagonal(&f7, &[(Elem::ONE, 1)], Elem::ZERO).unwrap();
        assert_eq!(count_naive(&eq, None, DEFAULT_BUDGET).unwrap().count_u64(), Some(1));
        for m in 1..10 {
            let eq = EquationSpec::diagonal(&f7, &[(Elem::ONE, m)], Elem::ZERO).unwrap();
            assert_eq!(count_convolution(&eq, None).unwrap().count_u64(), Some(1));
        }
    }

    #[test]
    fn sums_of_squares_over_f3() {
        let eq = squares_f3(3, 1);
        let naive = count_naive(&eq, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(naive.count_u64(), Some(6));
        assert!(naive.divisible_by_p);
        assert_eq!(naive.has_nontrivial, None);
        assert!(has_second_solution(&eq, None).unwrap());

        let eq = squares_f3(2, 0);
        let conv = count_convolution(&eq, None).unwrap();
        assert_eq!(conv.count_u64(), Some(1));
        assert_eq!(conv.has_nontrivial, Some(false));

        let eq = squares_f3(2, 1);
        let sols = enumerate_solutions(&eq, None, 10, DEFAULT_BUDGET).unwrap();
        let as_ints: Vec<Vec<u32>> = sols.iter().map(|v| v.iter().map(|e| e.0).collect()).collect();
        assert_eq!(as_ints, vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![2, 0]]);
    }

    #[test]
    fn counterexample_has_only_origin() {
        let f25 = f(5, 2);
        let g = f25.find_generator();
        let eq = counterexample(g);
        assert_eq!(count_naive(&eq, None, DEFAULT_BUDGET).unwrap().count_u64(), Some(1));
        assert!(!has_second_solution(&eq, None).unwrap());
        let sols = enumerate_solutions(&eq, None, 10, DEFAULT_BUDGET).unwrap();
        assert_eq!(sols, vec![vec![Elem::ZERO, Elem::ZERO]]);
        assert_eq!(count_in_subfield(&eq, 1).unwrap().count_u64(), Some(1));
        assert_eq!(count_in_subfield(&eq, 2).unwrap(), count_convolution(&eq, None).unwrap());
    }

    #[test]
    fn no_solution_is_not_a_second_solution() {
        // X^2 = 2 over F_3 has no solution
        let eq = squares_f3(1, 2);
        assert_eq!(count_convolution(&eq, None).unwrap().count_u64(), Some(0));
        assert!(!has_second_solution(&eq, None).unwrap());
    }

    #[test]
    fn subfield_preimage_missing() {
        let f25 = f(5, 2);
        let t = f25.from_coeffs(&[0, 1]).unwrap();
        let eq = EquationSpec::diagonal(&f25, &[(Elem::ONE, 1)], t).unwrap();
        assert_eq!(count_in_subfield(&eq, 1).unwrap().count_u64(), Some(0));
        assert!(count_in_subfield(&eq, 3).is_err());
    }

    #[test]
    fn budget_and_validation() {
        let eq = squares_f3(3, 1);
        assert!(matches!(
            count_naive(&eq, None, 26),
            Err(Error::BudgetExceeded { needed: 27, budget: 26 })
        ));
        assert!(enumerate_solutions(&eq, None, 0, DEFAULT_BUDGET).is_err());
        let f3 = f(3, 1);
        assert!(Term::new(Elem::ZERO, 2, Elem::ZERO).is_err());
        assert!(Term::new(Elem::ONE, 0, Elem::ZERO).is_err());
        assert!(EquationSpec::new(&f3, vec![], Elem::ZERO).is_err());
        assert!(RestrictionSet::new(&f3, vec![vec![]]).is_err());
        let short = RestrictionSet::full(&f3, 2);
        assert!(count_convolution(&eq, Some(&short)).is_err());
    }

    #[test]
    fn restricted_counts_agree() {
        let f7 = f(7, 1);
        let eq = EquationSpec::new(
            &f7,
            vec![
                Term::new(Elem(3), 2, Elem(5)).unwrap(),
                Term::new(Elem(1), 3, Elem::ZERO).unwrap(),
            ],
            Elem(4),
        )
        .unwrap();
        let r = RestrictionSet::new(&f7, vec![vec![Elem(1), Elem(2), Elem(6)], vec![Elem(0), Elem(3)]]).unwrap();
        let naive = count_naive(&eq, Some(&r), DEFAULT_BUDGET).unwrap();
        let conv = count_convolution(&eq, Some(&r)).unwrap();
        assert_eq!(naive.count, conv.count);
        let brute = r.sets()[0]
            .iter()
            .flat_map(|&x| r.sets()[1].iter().map(move |&y| vec![x, y]))
            .filter(|pt| eq.is_solution(pt).unwrap())
            .count();
        assert_eq!(naive.count_u64(), Some(brute as u64));
    }

    #[test]
    fn equation_file_round_trip() {
        let text = r#"{"field": "5^2", "c": 0, "terms": [{"b": 1, "m": 3}, {"b": [2, 1], "m": 3, "a": 0}]}"#;
        let eq = parse_equation_json(text).unwrap();
        assert_eq!(eq.n(), 2);
        assert_eq!(eq.terms()[1].b, eq.field().from_coeffs(&[2, 1]).unwrap());
        assert!(eq.is_diagonal());
        assert_eq!(parse_equation_json(&equation_to_json(&eq)).unwrap(), eq);
        assert!(parse_equation_json(r#"{"field": "6^1", "c": 0, "terms": []}"#).is_err());
        assert!(parse_equation_json(r#"{"field": "5^1", "c": 0, "terms": [{"b": 0, "m": 1}]}"#).is_err());
        assert!(parse_equation_json(r#"{"field": "5^1", "c": 0, "terms": [{"b": 1, "m": 1, "x": 2}]}"#).is_err());
    }

    #[test]
    fn permutation_checks() {
        let eq = squares_f3(3, 1);
        assert!(eq.permuted(&[2, 0, 1]).is_ok());
        assert!(eq.permuted(&[0, 0, 1]).is_err());
        assert!(eq.permuted(&[0, 1]).is_err());
    }
}
