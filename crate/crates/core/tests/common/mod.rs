//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ffdiag::equations::EquationSpec;
use ffdiag::{Elem, Field};
use num_integer::Integer;
use num_rational::BigRational;

/// `D_m(x, a)` from the three-term recurrence, using only field `+` and `*`.
pub fn dickson_rec(f: &Field, m: u64, a: Elem, x: Elem) -> Elem {
    let two = f.add(Elem::ONE, Elem::ONE);
    if m == 0 {
        return two;
    }
    let (mut prev, mut cur) = (two, x);
    for _ in 1..m {
        let next = f.sub(f.mul(x, cur), f.mul(a, prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `x^m` by repeated multiplication.
pub fn power_naive(f: &Field, x: Elem, m: u64) -> Elem {
    (0..m).fold(Elem::ONE, |acc, _| f.mul(acc, x))
}

pub fn image_size(f: &Field, g: impl Fn(Elem) -> Elem) -> u64 {
    f.elements().map(g).collect::<BTreeSet<_>>().len() as u64
}

/// Brute-force solution count of `sum b_j D_{m_j}(X_j, a_j) = c`, optionally
/// restricted per coordinate, via an odometer over the product set.
pub fn brute_count(eq: &EquationSpec, sets: Option<&[Vec<Elem>]>) -> u64 {
    let f = eq.field();
    let n = eq.n();
    let full: Vec<Vec<Elem>> = vec![f.enumerate(); n];
    let sets = sets.unwrap_or(&full);
    let tables: Vec<Vec<Elem>> = eq
        .terms()
        .iter()
        .zip(sets)
        .map(|(t, s)| s.iter().map(|&x| f.mul(t.b, dickson_rec(f, t.m, t.a, x))).collect())
        .collect();
    let mut idx = vec![0usize; n];
    let mut count = 0;
    loop {
        let lhs = (0..n).fold(Elem::ZERO, |acc, j| f.add(acc, tables[j][idx[j]]));
        count += (lhs == eq.c()) as u64;
        let mut k = n;
        loop {
            if k == 0 {
                return count;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sets[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub fn recip_gcd_sum(ms: &[u64], modulus: u64) -> BigRational {
    ms.iter()
        .map(|&m| BigRational::new(1.into(), m.gcd(&modulus).into()))
        .sum()
}
