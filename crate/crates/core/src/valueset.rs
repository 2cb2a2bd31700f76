//! Value sets `V_f = {f(c) : c in C}` by enumeration, and the closed-form
//! cardinalities for power maps and Dickson polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::two_adic_valuation;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::rational::{self, ratio};

/// Image sets are kept only for fields up to this order.
pub const RETAIN_VALUES_MAX_Q: u32 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueSetReport {
    pub cardinality: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<BTreeSet<Elem>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_cardinality: Option<u64>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "rational::serialize_opt"
    )]
    pub delta: Option<BigRational>,
}

/// Exact image of `f` over the whole field, or over `restrict` when given.
pub fn value_set<F>(field: &Field, f: F, restrict: Option<&[Elem]>) -> Result<ValueSetReport>
where
    F: Fn(Elem) -> Elem,
{
    let mut hit = vec![false; field.q() as usize];
    let mut cardinality = 0u64;
    let mut mark = |x: Elem| {
        let y = f(x);
        if !std::mem::replace(&mut hit[y.index()], true) {
            cardinality += 1;
        }
    };
    match restrict {
        Some([]) => return Err(Error::EmptyRestriction),
        Some(points) => points.iter().copied().for_each(&mut mark),
        None => field.elements().for_each(&mut mark),
    }
    let values = (field.q() <= RETAIN_VALUES_MAX_Q).then(|| {
        hit.iter()
            .enumerate()
            .filter(|(_, &h)| h)
            .map(|(i, _)| Elem(i as u32))
            .collect()
    });
    Ok(ValueSetReport {
        cardinality,
        values,
        formula_cardinality: None,
        delta: None,
    })
}

/// `|V_{X^m}| = (q-1)/gcd(m, q-1) + 1`, for `m >= 1`.
pub fn power_value_count(q: u64, m: u64) -> u64 {
    assert!(m >= 1 && q >= 2, "power_value_count needs m >= 1 and q >= 2");
    (q - 1) / m.gcd(&(q - 1)) + 1
}

/// `r` with `2^r || (q^2 - 1)`; zero for even `q`.
pub fn two_adic_of_q2_minus_1(q: u64) -> u32 {
    let q = q as u128;
    let n = q * q - 1;
    two_adic_valuation_u128(n)
}

fn two_adic_valuation_u128(n: u128) -> u32 {
    match u64::try_from(n) {
        Ok(v) => two_adic_valuation(v),
        Err(_) => n.trailing_zeros(),
    }
}

/// Correction term of the Dickson value-set count:
/// `1` when `q` is odd, `2^{r-1} || m` and `a` is a nonsquare;
/// `1/2` when `q` is odd, `m` is even and `2^{r-1}` does not divide `m`;
/// `0` otherwise.
pub fn dickson_delta(field: &Field, m: u64, a: Elem) -> BigRational {
    let q = field.q() as u64;
    if q.is_multiple_of(2) {
        return ratio(0, 1);
    }
    // q odd, so 8 | q^2 - 1 and r >= 3
    let r = two_adic_of_q2_minus_1(q);
    let half_r = 1u64 << (r - 1);
    let exact_power = m.is_multiple_of(half_r) && (m / half_r) % 2 == 1;
    if exact_power && !field.is_square(a) {
        ratio(1, 1)
    } else if m.is_multiple_of(2) && !m.is_multiple_of(half_r) {
        ratio(1, 2)
    } else {
        ratio(0, 1)
    }
}

/// The closed-form `|V_{D_m(X, a)}|` for `a != 0`:
/// `(q-1)/(2 gcd(m,q-1)) + (q+1)/(2 gcd(m,q+1)) + delta`.
pub fn dickson_value_count(field: &Field, m: u64, a: Elem) -> Result<ValueSetReport> {
    if m == 0 {
        return Err(Error::ZeroPolyDegree);
    }
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let q = field.q() as u64;
    let delta = dickson_delta(field, m, a);
    let total = ratio(q as i64 - 1, 2 * m.gcd(&(q - 1)) as i64)
        + ratio(q as i64 + 1, 2 * m.gcd(&(q + 1)) as i64)
        + &delta;
    if !total.is_integer() {
        return Err(Error::NonIntegralFormula(total.to_string()));
    }
    let count = total
        .to_integer()
        .to_u64()
        .expect("value count is a small nonnegative integer");
    Ok(ValueSetReport {
        cardinality: count,
        values: None,
        formula_cardinality: Some(count),
        delta: Some(delta),
    })
}

/// `floor((q-1)/degree) + 1`, the least image size of a nonconstant
/// polynomial of the given degree.
pub fn floor_image_lower_bound(q: u64, degree: u64) -> Result<u64> {
    if degree == 0 {
        return Err(Error::ZeroPolyDegree);
    }
    Ok((q - 1) / degree + 1)
}

/// Whether `delta` is one of `0`, `1/2`, `1`.
pub fn is_valid_delta(delta: &BigRational) -> bool {
    let doubled = delta * BigRational::from_integer(BigInt::from(2));
    doubled.is_integer() && (0..=2).any(|k| doubled.to_integer() == BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polys::{dickson_coeffs, dickson_value, DicksonSpec};

    fn f(p: u64, s: u32) -> Field {
        Field::new(p, s).unwrap()
    }

    #[test]
    fn identity_and_cubes() {
        let f7 = f(7, 1);
        assert_eq!(value_set(&f7, |x| x, None).unwrap().cardinality, 7);
        let cubes = value_set(&f7, |x| f7.pow_u(x, 3), None).unwrap();
        assert_eq!(cubes.cardinality, 3);
        let expected: BTreeSet<Elem> = [0, 1, 6].iter().map(|&v| Elem(v)).collect();
        assert_eq!(cubes.values.unwrap(), expected);
        let restricted = value_set(&f7, |x| f7.pow_u(x, 2), Some(&[Elem::ZERO])).unwrap();
        assert_eq!(restricted.cardinality, 1);
        assert_eq!(
            value_set(&f7, |x| x, Some(&[])).unwrap_err(),
            Error::EmptyRestriction
        );
    }

    #[test]
    fn power_counts() {
        assert_eq!(power_value_count(7, 5), 7);
        assert_eq!(power_value_count(7, 3), 3);
        assert_eq!(power_value_count(25, 3), 9);
        let f25 = f(5, 2);
        let cubes = value_set(&f25, |x| f25.pow_u(x, 3), None).unwrap();
        assert_eq!(cubes.cardinality, 9);
    }

    #[test]
    fn lemma_cases() {
        // F_7, m = 2, a = 1: delta = 1/2, count 4
        let f7 = f(7, 1);
        let r = dickson_value_count(&f7, 2, Elem::ONE).unwrap();
        assert_eq!(r.delta, Some(ratio(1, 2)));
        assert_eq!(r.formula_cardinality, Some(4));
        let direct = value_set(&f7, |x| dickson_value(&f7, 2, Elem::ONE, x), None).unwrap();
        assert_eq!(direct.cardinality, 4);

        // F_5, m = 4, a = 2 (nonsquare): delta = 1, count 3
        let f5 = f(5, 1);
        let a = f5.from_int(2);
        let r = dickson_value_count(&f5, 4, a).unwrap();
        assert_eq!(r.delta, Some(ratio(1, 1)));
        assert_eq!(r.cardinality, 3);
        let d4 = dickson_coeffs(&f5, DicksonSpec::new(4, a).unwrap());
        assert_eq!(value_set(&f5, |x| d4.eval(x), None).unwrap().cardinality, 3);

        // F_4, m = 3, a = 1: even q so delta = 0; 1/2 + 5/2 = 3
        let f4 = f(2, 2);
        let r = dickson_value_count(&f4, 3, Elem::ONE).unwrap();
        assert_eq!(r.delta, Some(ratio(0, 1)));
        assert_eq!(r.cardinality, 3);
        let direct = value_set(&f4, |x| dickson_value(&f4, 3, Elem::ONE, x), None).unwrap();
        assert_eq!(direct.cardinality, 3);
    }

    #[test]
    fn dickson_count_errors() {
        let f7 = f(7, 1);
        assert_eq!(
            dickson_value_count(&f7, 3, Elem::ZERO).unwrap_err(),
            Error::ZeroParameter
        );
        assert_eq!(
            dickson_value_count(&f7, 0, Elem::ONE).unwrap_err(),
            Error::ZeroPolyDegree
        );
    }

    #[test]
    fn two_adic_gate() {
        assert_eq!(two_adic_of_q2_minus_1(7), 4);
        assert_eq!(two_adic_of_q2_minus_1(5), 3);
        assert_eq!(two_adic_of_q2_minus_1(8), 0);
    }

    #[test]
    fn floor_bound() {
        assert_eq!(floor_image_lower_bound(7, 1).unwrap(), 7);
        assert_eq!(floor_image_lower_bound(7, 3).unwrap(), 3);
        assert_eq!(floor_image_lower_bound(8, 3).unwrap(), 3);
        assert!(floor_image_lower_bound(8, 0).is_err());
    }

    #[test]
    fn delta_values() {
        assert!(is_valid_delta(&ratio(0, 1)));
        assert!(is_valid_delta(&ratio(1, 2)));
        assert!(is_valid_delta(&ratio(1, 1)));
        assert!(!is_valid_delta(&ratio(3, 2)));
        assert!(!is_valid_delta(&ratio(1, 3)));
    }
}
