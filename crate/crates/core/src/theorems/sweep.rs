//! Batch verification: generate seeded instances, check the hypothesis
//! exactly, count solutions for every right-hand side at once, and flag any
//! count that contradicts the conclusion.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{check_divisibility, check_theorem1, check_theorem2, check_theorem3, Conclusion, ConditionReport, Verdict};
use crate::equations::{lhs_histogram, CountMethod, CountReport, EquationSpec, RestrictionSet, Term};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SweepStatement {
    T1,
    T2,
    T3,
    MJ,
}

impl fmt::Display for SweepStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for SweepStatement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Ok(SweepStatement::T1),
            "t2" => Ok(SweepStatement::T2),
            "t3" => Ok(SweepStatement::T3),
            "mj" => Ok(SweepStatement::MJ),
            other => Err(Error::Parse(format!("unknown statement {other:?}"))),
        }
    }
}

/// Parameter ranges for [`sweep_verify`].
///
/// - `T1`, `MJ`: every exponent tuple in `[1, q-1]^n`, each paired with
///   `draws` random coefficient vectors `b in (F_q^*)^n`.
/// - `T2`: `draws` random `(m, a, b)` with `m_j in [1, q+1]`, `a_j in F_q`.
/// - `T3`: for each proper subfield degree `l` (or `l = 1` for prime
///   fields), `draws` random `(m, b)` with `m_j in [1, q-1]`; solutions are
///   counted over `F_{p^l}`.
///
/// With `exhaustive` set, every random choice above is replaced by the full
/// range. In all cases each instance is checked for all `q` right-hand
/// sides `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub statement: SweepStatement,
    pub fields: Vec<(u64, u32)>,
    pub ns: Vec<usize>,
    pub draws: usize,
    pub exhaustive: bool,
    pub seed: u64,
    /// Cap on the number of verdicts produced.
    pub budget: u64,
}

impl SweepConfig {
    pub fn new(statement: SweepStatement, fields: Vec<(u64, u32)>, ns: Vec<usize>) -> SweepConfig {
        SweepConfig {
            statement,
            fields,
            ns,
            draws: 1,
            exhaustive: false,
            seed: 0,
            budget: crate::equations::DEFAULT_BUDGET,
        }
    }
}

struct Instance {
    eq: EquationSpec,
    restrict: Option<RestrictionSet>,
    subfield: Option<u32>,
}

fn random_unit(rng: &mut ChaCha8Rng, q: u32) -> Elem {
    Elem(rng.gen_range(1..q))
}

/// All length-`n` tuples over `values`, last position fastest.
fn tuples<T: Clone>(values: &[T], n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|_| values.iter().cloned())
        .multi_cartesian_product()
        .collect()
}

fn exponent_tuples(n: usize, max: u64) -> Vec<Vec<u64>> {
    tuples(&(1..=max).collect::<Vec<_>>(), n)
}

fn subfield_degrees(field: &Field) -> Vec<u32> {
    let s = field.s();
    if s == 1 {
        vec![1]
    } else {
        (1..s).filter(|l| s.is_multiple_of(*l)).collect()
    }
}

/// Number of verdicts a `(field, n)` cell will produce.
fn planned_verdicts(config: &SweepConfig, field: &Field, n: usize) -> u128 {
    let q = field.q() as u128;
    let pow = |base: u128| base.checked_pow(n as u32).unwrap_or(u128::MAX);
    let draws = config.draws as u128;
    let per_shape = match config.statement {
        SweepStatement::T1 | SweepStatement::MJ => {
            let b = if config.exhaustive { pow(q - 1) } else { draws };
            pow(q - 1).saturating_mul(b)
        }
        SweepStatement::T2 if config.exhaustive => pow(q + 1).saturating_mul(pow(q)).saturating_mul(pow(q - 1)),
        SweepStatement::T2 => draws,
        SweepStatement::T3 => {
            let per_l = if config.exhaustive {
                pow(q - 1).saturating_mul(pow(q - 1))
            } else {
                draws
            };
            per_l.saturating_mul(subfield_degrees(field).len() as u128)
        }
    };
    per_shape.saturating_mul(q)
}

fn generate(config: &SweepConfig, fields: &[Field]) -> Result<Vec<Instance>> {
    let mut planned = 0u128;
    for field in fields {
        for &n in &config.ns {
            if n == 0 {
                return Err(Error::Precondition("n must be at least 1".into()));
            }
            planned = planned.saturating_add(planned_verdicts(config, field, n));
        }
    }
    if planned > config.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: planned,
            budget: config.budget,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::new();
    for field in fields {
        let q = field.q();
        let qm1 = q as u64 - 1;
        let units: Vec<Elem> = field.units().collect();
        let all: Vec<Elem> = field.enumerate();
        for &n in &config.ns {
            let plain = |eq: EquationSpec| Instance { eq, restrict: None, subfield: None };
            match config.statement {
                SweepStatement::T1 | SweepStatement::MJ => {
                    let unit_tuples = if config.exhaustive { tuples(&units, n) } else { Vec::new() };
                    for ms in exponent_tuples(n, qm1) {
                        let bs: Vec<Vec<Elem>> = if config.exhaustive {
                            unit_tuples.clone()
                        } else {
                            (0..config.draws)
                                .map(|_| (0..n).map(|_| random_unit(&mut rng, q)).collect())
                                .collect()
                        };
                        for b in bs {
                            let coeffs: Vec<(Elem, u64)> = b.into_iter().zip(ms.iter().copied()).collect();
                            out.push(plain(EquationSpec::diagonal(field, &coeffs, Elem::ZERO)?));
                        }
                    }
                }
                SweepStatement::T2 if config.exhaustive => {
                    let ms = exponent_tuples(n, q as u64 + 1);
                    let as_ = tuples(&all, n);
                    let bs = tuples(&units, n);
                    for m in &ms {
                        for a in &as_ {
                            for b in &bs {
                                let terms = (0..n)
                                    .map(|j| Term::new(b[j], m[j], a[j]))
                                    .collect::<Result<Vec<_>>>()?;
                                out.push(plain(EquationSpec::new(field, terms, Elem::ZERO)?));
                            }
                        }
                    }
                }
                SweepStatement::T2 => {
                    for _ in 0..config.draws {
                        let terms = (0..n)
                            .map(|_| {
                                let m = rng.gen_range(1..=q as u64 + 1);
                                let a = Elem(rng.gen_range(0..q));
                                Term::new(random_unit(&mut rng, q), m, a)
                            })
                            .collect::<Result<Vec<_>>>()?;
                        out.push(plain(EquationSpec::new(field, terms, Elem::ZERO)?));
                    }
                }
                SweepStatement::T3 => {
                    for l in subfield_degrees(field) {
                        let restrict = RestrictionSet::subfield(field, n, l)?;
                        let shapes: Vec<Vec<(Elem, u64)>> = if config.exhaustive {
                            let ms = exponent_tuples(n, qm1);
                            let bs = tuples(&units, n);
                            ms.iter()
                                .flat_map(|m| bs.iter().map(move |b| b.iter().copied().zip(m.iter().copied()).collect()))
                                .collect()
                        } else {
                            (0..config.draws)
                                .map(|_| {
                                    (0..n)
                                        .map(|_| (random_unit(&mut rng, q), rng.gen_range(1..=qm1.max(1))))
                                        .collect()
                                })
                                .collect()
                        };
                        for coeffs in shapes {
                            out.push(Instance {
                                eq: EquationSpec::diagonal(field, &coeffs, Elem::ZERO)?,
                                restrict: Some(restrict.clone()),
                                subfield: Some(l),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn condition_for(statement: SweepStatement, inst: &Instance) -> Result<ConditionReport> {
    match statement {
        SweepStatement::T1 => check_theorem1(&inst.eq),
        SweepStatement::MJ => check_divisibility(&inst.eq),
        SweepStatement::T2 => check_theorem2(&inst.eq),
        SweepStatement::T3 => check_theorem3(&inst.eq, inst.subfield.expect("T3 instances carry l")),
    }
}

fn verdicts_for(statement: SweepStatement, inst: &Instance) -> Result<Vec<Verdict>> {
    let condition = condition_for(statement, inst)?;
    let conclusion = match statement {
        SweepStatement::MJ => Conclusion::Divisibility,
        _ => Conclusion::SecondSolution,
    };
    let hist = lhs_histogram(&inst.eq, inst.restrict.as_ref())?;
    let full;
    let restrict = match &inst.restrict {
        Some(r) => r,
        None => {
            full = RestrictionSet::full(inst.eq.field(), inst.eq.n());
            &full
        }
    };
    Ok(inst
        .eq
        .field()
        .elements()
        .map(|c| {
            let eq = inst.eq.with_c(c);
            let count = CountReport::from_count(&eq, restrict, hist[c.index()].clone(), CountMethod::Convolution);
            let mut condition = condition.clone();
            if let Some(flag) = condition.flags.get_mut("nontrivial_clause_holds") {
                *flag &= c.is_zero();
            }
            Verdict::new(condition, count, conclusion).with_equation(&eq)
        })
        .collect())
}

/// Runs a sweep; verdicts come back in generation order regardless of how
/// the work was scheduled.
pub fn sweep_verify(config: &SweepConfig) -> Result<Vec<Verdict>> {
    let fields = config
        .fields
        .iter()
        .map(|&(p, s)| Field::new(p, s))
        .collect::<Result<Vec<_>>>()?;
    let instances = generate(config, &fields)?;
    let nested = instances
        .par_iter()
        .map(|inst| verdicts_for(config.statement, inst))
        .collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub hypothesis_held: usize,
    /// Instances where the hypothesis held and the conclusion had something
    /// to say (a solution existed, or any count for divisibility).
    pub conclusion_tested: usize,
    pub inconsistencies: usize,
}

pub fn summarize(verdicts: &[Verdict]) -> SweepSummary {
    verdicts.iter().fold(SweepSummary::default(), |mut s, v| {
        s.instances += 1;
        if v.condition.holds {
            s.hypothesis_held += 1;
            let tested = match v.conclusion {
                Conclusion::SecondSolution => !v.count.count.is_zero(),
                Conclusion::Divisibility => true,
            };
            s.conclusion_tested += tested as usize;
        }
        s.inconsistencies += (!v.consistent) as usize;
        s
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_tuple_enumeration() {
        assert_eq!(exponent_tuples(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(exponent_tuples(3, 4).len(), 64);
    }

    #[test]
    fn empty_sweep() {
        let cfg = SweepConfig::new(SweepStatement::T1, vec![], vec![2]);
        assert!(sweep_verify(&cfg).unwrap().is_empty());
        let cfg = SweepConfig::new(SweepStatement::T2, vec![(3, 1)], vec![]);
        assert!(sweep_verify(&cfg).unwrap().is_empty());
    }

    #[test]
    fn small_t1_sweep_is_clean() {
        let mut cfg = SweepConfig::new(SweepStatement::T1, vec![(3, 1), (2, 2)], vec![2, 3]);
        cfg.draws = 2;
        cfg.seed = 11;
        let verdicts = sweep_verify(&cfg).unwrap();
        let summary = summarize(&verdicts);
        assert_eq!(summary.inconsistencies, 0);
        assert!(summary.conclusion_tested > 0);
        // (4 + 8) tuples * 2 draws * 3 values of c, then (9 + 27) * 2 * 4
        assert_eq!(summary.instances, 12 * 2 * 3 + 36 * 2 * 4);
    }

    #[test]
    fn sweeps_are_deterministic() {
        let mut cfg = SweepConfig::new(SweepStatement::T2, vec![(5, 1)], vec![2]);
        cfg.draws = 20;
        cfg.seed = 3;
        assert_eq!(sweep_verify(&cfg).unwrap(), sweep_verify(&cfg).unwrap());
    }

    #[test]
    fn t3_uses_subfield_counts() {
        let mut cfg = SweepConfig::new(SweepStatement::T3, vec![(3, 2)], vec![2]);
        cfg.draws = 10;
        let verdicts = sweep_verify(&cfg).unwrap();
        assert_eq!(verdicts.len(), 10 * 9);
        assert!(verdicts.iter().all(|v| v.count.count <= num_bigint::BigUint::from(9u32)));
        assert_eq!(summarize(&verdicts).inconsistencies, 0);
    }

    #[test]
    fn budget_caps_sweeps() {
        let mut cfg = SweepConfig::new(SweepStatement::T2, vec![(7, 1)], vec![2]);
        cfg.draws = 10;
        cfg.budget = 69;
        assert!(matches!(sweep_verify(&cfg), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn exhaustive_t1_covers_every_coefficient() {
        let mut cfg = SweepConfig::new(SweepStatement::T1, vec![(3, 1)], vec![2]);
        cfg.exhaustive = true;
        let verdicts = sweep_verify(&cfg).unwrap();
        // 4 exponent tuples * 4 coefficient tuples * 3 right-hand sides
        assert_eq!(verdicts.len(), 48);
        assert_eq!(summarize(&verdicts).inconsistencies, 0);
        assert_eq!(planned_verdicts(&cfg, &Field::new(3, 1).unwrap(), 2), 48);
    }

    #[test]
    fn statement_parsing() {
        assert_eq!("mj".parse::<SweepStatement>().unwrap(), SweepStatement::MJ);
        assert_eq!("T2".parse::<SweepStatement>().unwrap(), SweepStatement::T2);
        assert!("t9".parse::<SweepStatement>().is_err());
    }

    #[test]
    fn per_c_flags_match_direct_check() {
        let mut cfg = SweepConfig::new(SweepStatement::T2, vec![(5, 1)], vec![2]);
        cfg.draws = 30;
        for v in sweep_verify(&cfg).unwrap() {
            let eq = v.equation.as_ref().unwrap().to_spec().unwrap();
            assert_eq!(v.condition, check_theorem2(&eq).unwrap());
        }
    }
}
