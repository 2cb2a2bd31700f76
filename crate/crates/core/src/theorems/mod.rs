//! Exact checkers for the solvability conditions on diagonal and Dickson
//! equations, with their empirical counterparts.
//!
//! Every checker returns a [`ConditionReport`] with both sides of the
//! hypothesis as exact rationals; `holds` is always `lhs > rhs`. A
//! [`Verdict`] pairs a report with an exact count and records whether the
//! count contradicts the statement's conclusion.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::equations::{CountMethod, CountReport, EquationFile, EquationSpec, RestrictionSet};
use crate::error::{Error, Result};
use crate::polys::MultiPoly;
use crate::rational::{self, integer, ratio};
use crate::valueset::{dickson_delta, two_adic_of_q2_minus_1};

mod examples;
mod sweep;

pub use examples::{
    build_example_section4, reproduce_counterexample5, run_example4, CounterexampleRow, Example4Report,
};
pub use sweep::{sweep_verify, summarize, SweepConfig, SweepStatement, SweepSummary};

/// Largest product `|C_1| ... |C_n|` the restricted-system checker will
/// enumerate.
pub const LEMMA1_BUDGET: u64 = 10_000_000;

/// Which statement a report belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Statement {
    /// Diagonal equations, second solution.
    T1,
    /// Dickson equations, second solution.
    T2,
    /// Diagonal equations restricted to a subfield.
    T3,
    /// Sum of polynomials in separate variables.
    C2,
    /// The weaker subfield inequality.
    #[serde(rename = "EQ4")]
    Eq4,
    /// Restricted systems, zero set not a singleton.
    L1,
    /// Divisibility of the diagonal count by the characteristic.
    MJ,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Statement::T1 => "T1",
            Statement::T2 => "T2",
            Statement::T3 => "T3",
            Statement::C2 => "C2",
            Statement::Eq4 => "EQ4",
            Statement::L1 => "L1",
            Statement::MJ => "MJ",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub name: Statement,
    #[serde(serialize_with = "rational::serialize")]
    pub lhs: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub rhs: BigRational,
    pub holds: bool,
    #[serde(serialize_with = "serialize_aux", skip_serializing_if = "BTreeMap::is_empty")]
    pub auxiliary: BTreeMap<String, BigRational>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, bool>,
}

fn serialize_aux<S: Serializer>(
    map: &BTreeMap<String, BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut out = s.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        out.serialize_entry(k, &v.to_string())?;
    }
    out.end()
}

impl ConditionReport {
    fn new(name: Statement, lhs: BigRational, rhs: BigRational) -> ConditionReport {
        ConditionReport {
            name,
            holds: lhs > rhs,
            lhs,
            rhs,
            auxiliary: BTreeMap::new(),
            flags: BTreeMap::new(),
        }
    }

    fn aux(mut self, key: impl Into<String>, value: BigRational) -> Self {
        self.auxiliary.insert(key.into(), value);
        self
    }

    fn flag(mut self, key: impl Into<String>, value: bool) -> Self {
        self.flags.insert(key.into(), value);
        self
    }
}

/// What a verdict's count is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    /// A solution, if any, is not unique.
    SecondSolution,
    /// The count is divisible by the characteristic.
    Divisibility,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub condition: ConditionReport,
    pub count: CountReport,
    pub conclusion: Conclusion,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equation: Option<EquationFile>,
}

impl Verdict {
    pub fn new(condition: ConditionReport, count: CountReport, conclusion: Conclusion) -> Verdict {
        let violated = condition.holds
            && match conclusion {
                Conclusion::SecondSolution => count.count.is_one(),
                Conclusion::Divisibility => !count.divisible_by_p,
            };
        Verdict {
            condition,
            count,
            conclusion,
            consistent: !violated,
            equation: None,
        }
    }

    pub fn with_equation(mut self, eq: &EquationSpec) -> Verdict {
        self.equation = Some(EquationFile::from_spec(eq));
        self
    }
}

fn unit_ratio(d: u64) -> BigRational {
    ratio(1, d as i64)
}

fn require_diagonal(eq: &EquationSpec) -> Result<()> {
    if eq.is_diagonal() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "condition applies to diagonal equations (every a_j = 0)".into(),
        ))
    }
}

fn subfield_order(eq: &EquationSpec, l: u32) -> Result<u64> {
    let f = eq.field();
    if l == 0 || !f.s().is_multiple_of(l) {
        return Err(Error::NotASubfield { l, s: f.s() });
    }
    Ok((f.p() as u64).pow(l))
}

fn diagonal_condition(eq: &EquationSpec, name: Statement, modulus: u64) -> ConditionReport {
    let mut lhs = BigRational::zero();
    let mut aux = Vec::new();
    for (j, t) in eq.terms().iter().enumerate() {
        let d = t.m.gcd(&modulus);
        lhs += unit_ratio(d);
        aux.push((format!("d[{}]", j + 1), integer(d)));
    }
    aux.into_iter()
        .fold(ConditionReport::new(name, lhs, integer(1)), |r, (k, v)| r.aux(k, v))
}

/// `sum 1/gcd(m_j, q-1) > 1` for a diagonal equation.
pub fn check_theorem1(eq: &EquationSpec) -> Result<ConditionReport> {
    require_diagonal(eq)?;
    Ok(diagonal_condition(eq, Statement::T1, eq.field().q() as u64 - 1))
}

/// The divisibility hypothesis; numerically identical to
/// [`check_theorem1`] but labelled for the divisibility conclusion.
pub fn check_divisibility(eq: &EquationSpec) -> Result<ConditionReport> {
    require_diagonal(eq)?;
    Ok(diagonal_condition(eq, Statement::MJ, eq.field().q() as u64 - 1))
}

/// The Dickson-equation condition. Terms are stably partitioned so that
/// zero-parameter terms come first; `t` counts them.
///
/// Auxiliary entries are keyed by the term's original 1-based position.
/// Flags report the parity gate of the nontrivial-solution clause
/// separately from `holds`.
pub fn check_theorem2(eq: &EquationSpec) -> Result<ConditionReport> {
    let f = eq.field();
    let q = f.q() as u64;
    let n = eq.n() as i64;
    let r = two_adic_of_q2_minus_1(q);

    let (plain, parametric): (Vec<_>, Vec<_>) =
        eq.terms().iter().enumerate().partition(|(_, t)| t.is_power());
    let t = plain.len() as i64;

    let mut aux: Vec<(String, BigRational)> = vec![
        ("t".into(), integer(t)),
        ("r".into(), integer(r)),
    ];
    let mut plain_sum = BigRational::zero();
    for &(j, term) in &plain {
        let dm = term.m.gcd(&(q - 1));
        plain_sum += unit_ratio(dm);
        aux.push((format!("d_minus[{}]", j + 1), integer(dm)));
    }
    let mut minus_sum = BigRational::zero();
    let mut plus_sum = BigRational::zero();
    let mut delta_sum = BigRational::zero();
    for &(j, term) in &parametric {
        let dm = term.m.gcd(&(q - 1));
        let dp = term.m.gcd(&(q + 1));
        let delta = dickson_delta(f, term.m, term.a);
        minus_sum += unit_ratio(dm);
        plus_sum += unit_ratio(dp);
        delta_sum += &delta;
        aux.push((format!("d_minus[{}]", j + 1), integer(dm)));
        aux.push((format!("d_plus[{}]", j + 1), integer(dp)));
        aux.push((format!("delta[{}]", j + 1), delta));
    }
    let half = ratio(1, 2);
    let inv_q1 = ratio(1, q as i64 - 1);
    let lhs = &plain_sum + &half * &minus_sum + (&half + &inv_q1) * &plus_sum;
    let rhs = integer(1) + (integer(n - t) - &delta_sum) * &inv_q1;

    let odd = parametric.iter().all(|(_, term)| term.m % 2 == 1);
    let nontrivial_rhs = integer(1) + integer(n - t) * &inv_q1;
    let nontrivial_clause = odd && eq.c().is_zero() && lhs > nontrivial_rhs;

    let report = aux
        .into_iter()
        .fold(ConditionReport::new(Statement::T2, lhs, rhs), |rep, (k, v)| rep.aux(k, v));
    Ok(report
        .flag("parametric_degrees_odd", odd)
        .flag("nontrivial_clause_holds", nontrivial_clause))
}

/// Subfield condition `sum 1/gcd(m_j, p^l - 1) > (q-1)/(p^l-1)`.
pub fn check_theorem3(eq: &EquationSpec, l: u32) -> Result<ConditionReport> {
    require_diagonal(eq)?;
    let pl = subfield_order(eq, l)?;
    let mut report = diagonal_condition(eq, Statement::T3, pl - 1);
    report.rhs = ratio(eq.field().q() as i64 - 1, pl as i64 - 1);
    report.holds = report.lhs > report.rhs;
    Ok(report.aux("subfield_order", integer(pl)))
}

/// The weaker inequality `sum 1/gcd(m_j, p^l - 1) > 1`, with a flag telling
/// whether every `b_j` and `c` lie in `F_{p^l}` (only then does it suffice).
pub fn check_eq4(eq: &EquationSpec, l: u32) -> Result<ConditionReport> {
    require_diagonal(eq)?;
    let pl = subfield_order(eq, l)?;
    let f = eq.field();
    let mut members = eq.terms().iter().map(|t| t.b).chain([eq.c()]);
    let in_subfield = members.try_fold(true, |acc, x| Ok::<bool, Error>(acc && f.in_subfield(x, l)?))?;
    let report = diagonal_condition(eq, Statement::Eq4, pl - 1);
    let sufficient = report.holds && in_subfield;
    Ok(report
        .aux("subfield_order", integer(pl))
        .flag("coefficients_in_subfield", in_subfield)
        .flag("sufficient", sufficient))
}

/// `sum floor((q-1)/deg f_j) > q - 1`.
pub fn check_corollary2(degrees: &[u64], q: u64) -> Result<ConditionReport> {
    if degrees.contains(&0) {
        return Err(Error::ZeroPolyDegree);
    }
    let lhs: u64 = degrees.iter().map(|&d| (q - 1) / d).sum();
    Ok(ConditionReport::new(Statement::C2, integer(lhs), integer(q - 1)))
}

/// Result of [`check_lemma1_instance`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Lemma1Outcome {
    /// The degree budget is not met, so nothing is claimed.
    HypothesisNotMet { condition: ConditionReport },
    Checked { verdict: Verdict },
}

/// Counts common zeros of `system` in `C_1 x ... x C_n` when
/// `(q-1) sum deg H_i < sum (|C_j| - 1)`; the count must not be exactly 1.
pub fn check_lemma1_instance(
    system: &[MultiPoly],
    sets: &RestrictionSet,
    budget: u64,
) -> Result<Lemma1Outcome> {
    let first = system
        .first()
        .ok_or_else(|| Error::Precondition("empty polynomial system".into()))?;
    let field = first.field().clone();
    let n = sets.n();
    for h in system {
        if h.is_zero() {
            return Err(Error::Precondition("polynomials must be nonzero".into()));
        }
        if h.nvars() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: h.nvars(),
            });
        }
        if h.field() != &field {
            return Err(Error::FieldMismatch(h.field().notation(), field.notation()));
        }
    }
    let q = field.q() as u64;
    let degree_sum: i64 = system.iter().map(MultiPoly::total_degree).sum();
    let slack: u64 = sets.sets().iter().map(|s| s.len() as u64 - 1).sum();
    let condition = ConditionReport::new(
        Statement::L1,
        integer(slack),
        integer((q as i64 - 1) * degree_sum),
    );
    if !condition.holds {
        return Ok(Lemma1Outcome::HypothesisNotMet { condition });
    }
    let needed = sets.product_size();
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let mut zeros = 0u64;
    let mut idx = vec![0usize; n];
    let mut point: Vec<_> = sets.sets().iter().map(|s| s[0]).collect();
    'outer: loop {
        if system.iter().all(|h| h.eval(&point).map(|v| v.is_zero()).unwrap_or(false)) {
            zeros += 1;
        }
        let mut k = n;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sets.sets()[k].len() {
                point[k] = sets.sets()[k][idx[k]];
                break;
            }
            idx[k] = 0;
            point[k] = sets.sets()[k][0];
        }
    }
    let count = CountReport {
        count: BigUint::from(zeros),
        method: CountMethod::Naive,
        q: field.q(),
        n,
        divisible_by_p: zeros.is_multiple_of(field.p() as u64),
        has_nontrivial: None,
    };
    Ok(Lemma1Outcome::Checked {
        verdict: Verdict::new(condition, count, Conclusion::SecondSolution),
    })
}

/// The lower bound `B = q^{n-1} - q^{(n-2)/2} (q-1) prod (d_j^+ + d_j^-)`,
/// decided exactly. For odd `n` the half-integer power is never formed:
/// `sign(B) = sign(q^n - (q-1)^2 P^2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmwReport {
    pub q: u64,
    pub n: usize,
    #[serde(serialize_with = "serialize_big")]
    pub product: BigUint,
    /// -1, 0 or 1.
    pub sign: i8,
    /// Exact `B` when `n` is even.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_big_opt")]
    pub value: Option<BigInt>,
}

fn serialize_big<S: Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn serialize_big_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl CmwReport {
    /// `B <= 0`: the bound says nothing.
    pub fn is_uninformative(&self) -> bool {
        self.sign <= 0
    }

    /// Whether a count `N` satisfies `N >= B`.
    pub fn admits(&self, count: &BigUint) -> bool {
        if self.is_uninformative() {
            return true;
        }
        let q = BigInt::from(self.q);
        let leading = q.pow(self.n as u32 - 1);
        let gap = leading - BigInt::from(count.clone());
        if !gap.is_positive() {
            return true;
        }
        // C >= gap  <=>  q^{n-1} (q-1)^2 P^2 >= q gap^2
        let p = BigInt::from(self.product.clone());
        let c_sq_q = q.pow(self.n as u32 - 1) * (&q - 1u32).pow(2) * &p * &p;
        c_sq_q >= &q * &gap * &gap
    }
}

pub fn cmw_lower_bound(eq: &EquationSpec) -> CmwReport {
    let q = eq.field().q() as u64;
    let n = eq.n();
    let product: BigUint = eq
        .terms()
        .iter()
        .map(|t| BigUint::from(t.m.gcd(&(q + 1)) + t.m.gcd(&(q - 1))))
        .product();
    let qb = BigInt::from(q);
    let p = BigInt::from(product.clone());
    let diff = qb.pow(n as u32) - (&qb - 1u32).pow(2) * &p * &p;
    let sign = if diff.is_positive() {
        1
    } else if diff.is_negative() {
        -1
    } else {
        0
    };
    let value = n.is_multiple_of(2).then(|| {
        qb.pow(n as u32 - 1) - qb.pow((n as u32 - 2) / 2) * (&qb - 1u32) * &p
    });
    CmwReport {
        q,
        n,
        product,
        sign,
        value,
    }
}
