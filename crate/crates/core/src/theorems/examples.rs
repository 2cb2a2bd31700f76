//! The Dickson-equation family on which the CMW bound is uninformative, and
//! the `X_1^3 + g X_2^3 = 0` counterexample over `F_25`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_eq4, check_theorem1, check_theorem2, check_theorem3, cmw_lower_bound, CmwReport, ConditionReport};
use crate::equations::{
    count_convolution, count_naive, enumerate_solutions, CountReport, ElemLiteral, EquationFile, EquationSpec,
    RestrictionSet, Term,
};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Assembles `sum b_j D_{m_j}(X_j, a_j) = c` with `m_j = (q-1)/e_j` and
/// `c = 2 sum_{m_j even} (-a_j)^{m_j/2} b_j`, so that the zero vector is a
/// solution.
///
/// Requires `n > 4`, every `e_j` a positive divisor of `q - 1`, every `a_j`,
/// `b_j` nonzero, and `prod e_j <= q^{n/2} (q-1)` (compared after squaring).
pub fn build_example_section4(field: &Field, n: usize, e: &[u64], a: &[Elem], b: &[Elem]) -> Result<EquationSpec> {
    let q = field.q() as u64;
    if n <= 4 {
        return Err(Error::Precondition(format!("n must exceed 4, got {n}")));
    }
    for (name, len) in [("e", e.len()), ("a", a.len()), ("b", b.len())] {
        if len != n {
            return Err(Error::Precondition(format!("{name} has {len} entries, expected {n}")));
        }
    }
    if let Some(bad) = e.iter().find(|&&ej| ej == 0 || !(q - 1).is_multiple_of(ej)) {
        return Err(Error::Precondition(format!("{bad} does not divide q - 1 = {}", q - 1)));
    }
    if a.iter().chain(b).any(|x| x.is_zero() || !field.contains(*x)) {
        return Err(Error::Precondition("every a_j and b_j must be a nonzero field element".into()));
    }
    let prod: BigUint = e.iter().map(|&ej| BigUint::from(ej)).product();
    let bound_sq = BigUint::from(q).pow(n as u32) * BigUint::from(q - 1).pow(2);
    if &prod * &prod > bound_sq {
        return Err(Error::Precondition(format!(
            "product of e_j = {prod} exceeds q^(n/2) (q-1)"
        )));
    }

    let mut c = Elem::ZERO;
    let mut terms = Vec::with_capacity(n);
    for j in 0..n {
        let m = (q - 1) / e[j];
        if m.is_multiple_of(2) {
            let minus_a = field.neg(a[j]);
            let summand = field.mul(field.pow_u(minus_a, m / 2), b[j]);
            c = field.add(c, summand);
        }
        terms.push(Term::new(b[j], m, a[j])?);
    }
    let c = field.mul(field.from_int(2), c);
    EquationSpec::new(field, terms, c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Example4Report {
    pub equation: EquationFile,
    pub cmw: CmwReport,
    pub theorem2: ConditionReport,
    pub count: CountReport,
    pub zero_is_solution: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nontrivial_witness: Option<Vec<ElemLiteral>>,
    /// The count respects the CMW bound, and a nontrivial solution exists
    /// whenever the condition holds.
    pub consistent: bool,
}

/// Builds an instance with seeded nonzero `a_j`, `b_j`, counts it naively
/// and extracts a nontrivial witness.
pub fn run_example4(field: &Field, n: usize, e: &[u64], seed: u64, budget: u64) -> Result<Example4Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.q();
    let mut draw = || -> Vec<Elem> { (0..n).map(|_| Elem(rng.gen_range(1..q))).collect() };
    let a = draw();
    let b = draw();
    let eq = build_example_section4(field, n, e, &a, &b)?;
    let cmw = cmw_lower_bound(&eq);
    let theorem2 = check_theorem2(&eq)?;
    let count = count_naive(&eq, None, budget)?;
    let zero_is_solution = eq.zero_is_solution();
    let witness = enumerate_solutions(&eq, None, 2, budget)?
        .into_iter()
        .find(|pt| pt.iter().any(|x| !x.is_zero()));
    let consistent = cmw.admits(&count.count)
        && !(theorem2.holds && count.count.is_one())
        && !(theorem2.holds && zero_is_solution && witness.is_none());
    Ok(Example4Report {
        equation: EquationFile::from_spec(&eq),
        cmw,
        theorem2,
        count,
        zero_is_solution,
        nontrivial_witness: witness.map(|pt| pt.iter().map(|&x| ElemLiteral::of(field, x)).collect()),
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleRow {
    pub generator: ElemLiteral,
    pub count_full: u64,
    pub count_subfield: u64,
    pub solutions: Vec<Vec<ElemLiteral>>,
    pub eq4: ConditionReport,
    pub theorem3: ConditionReport,
    pub theorem1: ConditionReport,
    /// Only the origin solves the equation, both in `F_25^2` and in `F_5^2`,
    /// while the weak inequality holds and the subfield condition fails.
    pub reproduces: bool,
}

/// Runs `X_1^3 + g X_2^3 = 0` over `F_25` for every generator `g`.
pub fn reproduce_counterexample5() -> Result<Vec<CounterexampleRow>> {
    let field = Field::new(5, 2)?;
    let sub = RestrictionSet::subfield(&field, 2, 1)?;
    field
        .all_generators()
        .into_iter()
        .map(|g| {
            let eq = EquationSpec::diagonal(&field, &[(Elem::ONE, 3), (g, 3)], Elem::ZERO)?;
            let full = count_naive(&eq, None, u64::MAX)?;
            let sub_naive = count_naive(&eq, Some(&sub), u64::MAX)?;
            let sub_conv = count_convolution(&eq, Some(&sub))?;
            if sub_naive.count != sub_conv.count {
                return Err(Error::Precondition("subfield counting routes disagree".into()));
            }
            let solutions = enumerate_solutions(&eq, None, 10, u64::MAX)?;
            let eq4 = check_eq4(&eq, 1)?;
            let theorem3 = check_theorem3(&eq, 1)?;
            let theorem1 = check_theorem1(&eq)?;
            let count_full = full.count.to_u64().expect("at most 625");
            let count_subfield = sub_naive.count.to_u64().expect("at most 25");
            let reproduces = count_full == 1
                && count_subfield == 1
                && solutions == vec![vec![Elem::ZERO, Elem::ZERO]]
                && eq4.holds
                && !theorem3.holds;
            Ok(CounterexampleRow {
                generator: ElemLiteral::of(&field, g),
                count_full,
                count_subfield,
                solutions: solutions
                    .iter()
                    .map(|pt| pt.iter().map(|&x| ElemLiteral::of(&field, x)).collect())
                    .collect(),
                eq4,
                theorem3,
                theorem1,
                reproduces,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::DEFAULT_BUDGET;

    #[test]
    fn example_over_f5() {
        let f5 = Field::new(5, 1).unwrap();
        let ones = vec![Elem::ONE; 5];
        let eq = build_example_section4(&f5, 5, &[2; 5], &ones, &ones).unwrap();
        assert!(eq.terms().iter().all(|t| t.m == 2));
        // c = 2 * 5 * (-1) = -10 = 0 mod 5
        assert_eq!(eq.c(), Elem::ZERO);
        assert!(eq.zero_is_solution());
    }

    #[test]
    fn odd_degrees_give_zero_constant() {
        let f7 = Field::new(7, 1).unwrap();
        let a: Vec<Elem> = (1..=5).map(|k| f7.from_int(k)).collect();
        let eq = build_example_section4(&f7, 5, &[2, 2, 6, 2, 2], &a, &a).unwrap();
        assert!(eq.terms().iter().all(|t| t.m % 2 == 1));
        assert_eq!(eq.c(), Elem::ZERO);
    }

    #[test]
    fn example_over_f9_constant() {
        let f9 = Field::new(3, 2).unwrap();
        let a: Vec<Elem> = [1, 2, 3, 4, 5].iter().map(|&i| Elem(i)).collect();
        let b: Vec<Elem> = [8, 7, 6, 5, 4].iter().map(|&i| Elem(i)).collect();
        let eq = build_example_section4(&f9, 5, &[4, 4, 2, 2, 2], &a, &b).unwrap();
        let ms: Vec<u64> = eq.terms().iter().map(|t| t.m).collect();
        assert_eq!(ms, vec![2, 2, 4, 4, 4]);
        let mut expected = Elem::ZERO;
        for j in 0..5 {
            let pw = f9.pow_u(f9.neg(a[j]), ms[j] / 2);
            expected = f9.add(expected, f9.mul(pw, b[j]));
        }
        assert_eq!(eq.c(), f9.add(expected, expected));
        assert!(eq.zero_is_solution());
    }

    #[test]
    fn builder_preconditions() {
        let f5 = Field::new(5, 1).unwrap();
        let ones = vec![Elem::ONE; 5];
        assert!(build_example_section4(&f5, 4, &[2; 4], &ones[..4], &ones[..4]).is_err());
        assert!(build_example_section4(&f5, 5, &[3; 5], &ones, &ones).is_err());
        let mut zeros = ones.clone();
        zeros[2] = Elem::ZERO;
        assert!(build_example_section4(&f5, 5, &[2; 5], &zeros, &ones).is_err());
        // prod e = 4^5 = 1024, 1024^2 > 5^5 * 16
        assert!(build_example_section4(&f5, 5, &[4; 5], &ones, &ones).is_err());
    }

    #[test]
    fn example_run_is_consistent() {
        let f5 = Field::new(5, 1).unwrap();
        let report = run_example4(&f5, 5, &[2; 5], 7, DEFAULT_BUDGET).unwrap();
        assert!(report.cmw.is_uninformative());
        assert!(report.theorem2.holds);
        assert!(report.zero_is_solution);
        assert!(report.nontrivial_witness.is_some());
        assert!(report.consistent);
    }

    #[test]
    fn counterexample_rows() {
        let rows = reproduce_counterexample5().unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.reproduces));
    }
}
