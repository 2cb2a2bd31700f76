//! Univariate and sparse multivariate polynomials over a [`Field`], and
//! Dickson polynomials `D_m(X, a)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Dense univariate polynomial; `coeffs[i]` multiplies `X^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly::new(field, Vec::new())
    }

    /// `X^m`.
    pub fn monomial(field: &Field, m: usize) -> UniPoly {
        let mut coeffs = vec![Elem::ZERO; m + 1];
        coeffs[m] = Elem::ONE;
        UniPoly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the top nonzero coefficient; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading_coeff(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Like [`UniPoly::eval`], rejecting points outside the field.
    pub fn eval_checked(&self, x: Elem) -> Result<Elem> {
        self.field.elem(x.0 as u64)?;
        Ok(self.eval(x))
    }
}

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial in `nvars` variables. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl MultiPoly {
    pub fn zero(field: &Field, nvars: usize) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, nvars: usize, c: Elem) -> MultiPoly {
        let mut h = MultiPoly::zero(field, nvars);
        h.add_term(vec![0; nvars], c).expect("arity matches");
        h
    }

    /// `b_1 X_1 + ... + b_n X_n - c`.
    pub fn linear_form(field: &Field, b: &[Elem], c: Elem) -> MultiPoly {
        let n = b.len();
        let mut h = MultiPoly::constant(field, n, field.neg(c));
        for (j, &bj) in b.iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = 1;
            h.add_term(e, bj).expect("arity matches");
        }
        h
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * X^exps`, merging with an existing term.
    pub fn add_term(&mut self, exps: Monomial, coeff: Elem) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: exps.len(),
            });
        }
        let f = &self.field;
        let merged = match self.terms.get(&exps) {
            Some(&old) => f.add(old, coeff),
            None => coeff,
        };
        if merged.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, merged);
        }
        Ok(())
    }

    /// Largest exponent sum over stored terms; `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&d| d as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    pub fn eval(&self, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let f = &self.field;
        Ok(self.terms.iter().fold(Elem::ZERO, |acc, (exps, &c)| {
            let mono = exps
                .iter()
                .zip(point)
                .fold(c, |m, (&e, &x)| f.mul(m, f.pow_u(x, e as u64)));
            f.add(acc, mono)
        }))
    }

    /// `self - self(point)`, so that `point` becomes a zero.
    pub fn shifted_to_vanish_at(&self, point: &[Elem]) -> Result<MultiPoly> {
        let v = self.eval(point)?;
        let mut h = self.clone();
        h.add_term(vec![0; self.nvars], self.field.neg(v))?;
        Ok(h)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return out.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(exps, &c)| {
                let mut s = self.field.format(c);
                for (j, &e) in exps.iter().enumerate().filter(|(_, &e)| e > 0) {
                    if e == 1 {
                        s.push_str(&format!("*X{}", j + 1));
                    } else {
                        s.push_str(&format!("*X{}^{}", j + 1, e));
                    }
                }
                s
            })
            .collect();
        out.write_str(&parts.join(" + "))
    }
}

/// Parses `"coeff*X1^e1*X2^e2 + ..."`. Coefficients are integers (taken in
/// the prime subfield) or bracketed coefficient lists such as `[1,2]`; a
/// missing coefficient means 1 and a leading `-` negates the term. `X` is
/// accepted as a synonym for `X1`.
pub fn parse_multi(field: &Field, text: &str, nvars: Option<usize>) -> Result<MultiPoly> {
    let mut raw_terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !current.trim().is_empty() {
                    raw_terms.push((negative, std::mem::take(&mut current)));
                } else if ch == '-' && negative {
                    return Err(Error::Parse(format!("dangling sign in {text:?}")));
                }
                current.clear();
                negative = ch == '-';
            }
            c if c.is_whitespace() => {}
            c => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        raw_terms.push((negative, current));
    } else if raw_terms.is_empty() || negative {
        return Err(Error::Parse(format!("empty polynomial {text:?}")));
    }

    let mut parsed = Vec::new();
    let mut max_var = 0usize;
    for (neg, body) in &raw_terms {
        let (coeff, vars) = parse_term(field, body)?;
        let coeff = if *neg { field.neg(coeff) } else { coeff };
        for &(v, _) in &vars {
            max_var = max_var.max(v);
        }
        parsed.push((coeff, vars));
    }
    let n = nvars.unwrap_or(max_var.max(1));
    if max_var > n {
        return Err(Error::Parse(format!(
            "variable X{max_var} used but only {n} variables declared"
        )));
    }
    let mut h = MultiPoly::zero(field, n);
    for (coeff, vars) in parsed {
        let mut exps = vec![0u32; n];
        for (v, e) in vars {
            exps[v - 1] += e;
        }
        h.add_term(exps, coeff)?;
    }
    Ok(h)
}

fn parse_term(field: &Field, body: &str) -> Result<(Elem, Vec<(usize, u32)>)> {
    let mut coeff = Elem::ONE;
    let mut vars = Vec::new();
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {body:?}")));
        }
        if let Some(rest) = factor.strip_prefix(['X', 'x']) {
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let var: usize = if var.is_empty() {
                1
            } else {
                var.parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {factor:?}")))?
            };
            if var == 0 {
                return Err(Error::Parse("variables are numbered from X1".into()));
            }
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
            vars.push((var, exp));
        } else {
            coeff = field.mul(coeff, parse_element(field, factor)?);
        }
    }
    Ok((coeff, vars))
}

/// Parses an integer (prime-subfield element) or a coefficient list
/// `[c0,c1,...]`, constant term first.
pub fn parse_element(field: &Field, text: &str) -> Result<Elem> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let coeffs = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        field.from_coeffs(&coeffs)
    } else {
        let n: i64 = text
            .parse()
            .map_err(|_| Error::Parse(format!("bad field element {text:?}")))?;
        Ok(field.from_int(n))
    }
}

/// Degree and parameter of a Dickson polynomial `D_m(X, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DicksonSpec {
    m: u64,
    a: Elem,
}

impl DicksonSpec {
    pub fn new(m: u64, a: Elem) -> Result<DicksonSpec> {
        if m == 0 {
            return Err(Error::ZeroPolyDegree);
        }
        Ok(DicksonSpec { m, a })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn a(&self) -> Elem {
        self.a
    }
}

/// `D_m(x, a)` through `D_0 = 2`, `D_1 = x`, `D_j = x D_{j-1} - a D_{j-2}`.
/// Degree 0 is accepted here and returns `2`.
pub fn dickson_value(field: &Field, m: u64, a: Elem, x: Elem) -> Elem {
    let two = field.from_int(2);
    if m == 0 {
        return two;
    }
    let (mut prev, mut cur) = (two, x);
    for _ in 1..m {
        let next = field.sub(field.mul(x, cur), field.mul(a, prev));
        prev = cur;
        cur = next;
    }
    cur
}

pub fn dickson_eval(field: &Field, spec: DicksonSpec, x: Elem) -> Elem {
    dickson_value(field, spec.m, spec.a, x)
}

/// Rows `0..=m_max` of `D_m(x, a)` evaluated at every point in `points`,
/// sharing one recurrence pass per point. Row 0 holds `D_0 = 2`.
pub fn dickson_table(field: &Field, a: Elem, m_max: u64, points: &[Elem]) -> Vec<Vec<Elem>> {
    let rows = m_max as usize + 1;
    let mut table = vec![vec![Elem::ZERO; points.len()]; rows];
    let two = field.from_int(2);
    for (i, &x) in points.iter().enumerate() {
        let (mut prev, mut cur) = (two, x);
        table[0][i] = two;
        for row in table.iter_mut().skip(1) {
            row[i] = cur;
            let next = field.sub(field.mul(x, cur), field.mul(a, prev));
            prev = cur;
            cur = next;
        }
    }
    table
}

/// `m/(m-j) * C(m-j, j)` as an exact integer.
pub fn dickson_integer_coeff(m: u64, j: u64) -> BigUint {
    debug_assert!(2 * j <= m && m > 0);
    let k = m - j;
    let num = BigUint::from(m) * binomial(k, j);
    let (quot, rem) = num.div_rem(&BigUint::from(k));
    debug_assert!(rem.is_zero());
    quot
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Expanded coefficients `sum_j m/(m-j) C(m-j,j) (-a)^j X^{m-2j}`, with each
/// integer reduced mod `p` only after the exact division.
pub fn dickson_coeffs(field: &Field, spec: DicksonSpec) -> UniPoly {
    let m = spec.m;
    let p = BigUint::from(field.p());
    let minus_a = field.neg(spec.a);
    let mut coeffs = vec![Elem::ZERO; m as usize + 1];
    for j in 0..=m / 2 {
        let integer = (dickson_integer_coeff(m, j) % &p)
            .to_i64()
            .expect("residue below p");
        let c = field.mul(field.from_int(integer), field.pow_u(minus_a, j));
        coeffs[(m - 2 * j) as usize] = c;
    }
    UniPoly::new(field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, s: u32) -> Field {
        Field::new(p, s).unwrap()
    }

    #[test]
    fn uni_eval_basics() {
        let f2 = f(2, 1);
        let x = UniPoly::monomial(&f2, 1);
        assert_eq!(x.eval(Elem::ONE), Elem::ONE);
        let g = UniPoly::new(&f2, vec![Elem::ONE, Elem::ONE, Elem::ONE]);
        assert_eq!(g.eval(Elem::ONE), Elem::ONE);
        let z = UniPoly::zero(&f2);
        assert_eq!(z.degree(), -1);
        assert!(f2.elements().all(|x| z.eval(x).is_zero()));
        assert_eq!(UniPoly::new(&f2, vec![Elem::ONE, Elem::ZERO]).degree(), 0);
        assert!(UniPoly::zero(&f(5, 1)).eval_checked(Elem(9)).is_err());
    }

    #[test]
    fn multi_eval_and_degree() {
        let f7 = f(7, 1);
        let sum = parse_multi(&f7, "X1 + X2 + X3", None).unwrap();
        assert_eq!(sum.eval(&[Elem::ZERO; 3]).unwrap(), Elem::ZERO);
        let lin = MultiPoly::linear_form(&f7, &[Elem(2), Elem(3)], Elem(4));
        assert_eq!(lin.total_degree(), 1);
        assert_eq!(lin.eval(&[Elem(1), Elem(1)]).unwrap(), Elem(1));
        assert_eq!(
            lin.eval(&[Elem(1)]).unwrap_err(),
            Error::ArityMismatch {
                expected: 2,
                got: 1
            }
        );
        assert_eq!(MultiPoly::zero(&f7, 2).total_degree(), -1);
    }

    #[test]
    fn counterexample_polynomial_vanishes_at_origin() {
        let f25 = f(5, 2);
        let g = f25.find_generator();
        let text = format!("X1^3 + {}*X2^3", f25.format(g));
        let h = parse_multi(&f25, &text, Some(2)).unwrap();
        assert_eq!(h.total_degree(), 3);
        assert_eq!(h.eval(&[Elem::ZERO, Elem::ZERO]).unwrap(), Elem::ZERO);
    }

    #[test]
    fn parser_handles_signs_and_lists() {
        let f25 = f(5, 2);
        let h = parse_multi(&f25, "-[1,2]*X1^2*X2 + 3 - X2", Some(2)).unwrap();
        assert_eq!(h.total_degree(), 3);
        let point = [Elem(1), Elem(1)];
        let expected = f25.sub(
            f25.sub(f25.from_int(3), f25.from_int(1)),
            f25.from_coeffs(&[1, 2]).unwrap(),
        );
        assert_eq!(h.eval(&point).unwrap(), expected);
        assert!(parse_multi(&f25, "X0", None).is_err());
        assert!(parse_multi(&f25, "X3", Some(2)).is_err());
        assert!(parse_multi(&f25, "", None).is_err());
        assert!(parse_multi(&f25, "2*X1^q", None).is_err());
    }

    #[test]
    fn dickson_small_cases() {
        let f5 = f(5, 1);
        let two = f5.from_int(2);
        for x in f5.elements() {
            assert_eq!(dickson_value(&f5, 1, two, x), x);
            for m in 1..8 {
                assert_eq!(dickson_value(&f5, m, Elem::ZERO, x), f5.pow_u(x, m));
            }
        }
        assert_eq!(dickson_value(&f5, 4, two, Elem::ONE), Elem::ONE);
        assert!(DicksonSpec::new(0, Elem::ZERO).is_err());
    }

    #[test]
    fn dickson_closed_form_small() {
        let f5 = f(5, 1);
        let x = dickson_coeffs(&f5, DicksonSpec::new(1, Elem(3)).unwrap());
        assert_eq!(x.coeffs(), &[Elem::ZERO, Elem::ONE]);
        // X^2 - 2a
        let a = f5.from_int(3);
        let d2 = dickson_coeffs(&f5, DicksonSpec::new(2, a).unwrap());
        assert_eq!(d2.coeffs(), &[f5.neg(f5.from_int(6)), Elem::ZERO, Elem::ONE]);
        // X^4 + 2X^2 + 3 for a = 2 over F_5
        let d4 = dickson_coeffs(&f5, DicksonSpec::new(4, f5.from_int(2)).unwrap());
        let expected: Vec<Elem> = [3, 0, 2, 0, 1].iter().map(|&c| f5.from_int(c)).collect();
        assert_eq!(d4.coeffs(), expected.as_slice());
    }

    #[test]
    fn integer_coefficients() {
        // m/(m-j) C(m-j, j) for m = 6: 1, 6, 9, 2
        let row: Vec<u64> = (0..=3)
            .map(|j| dickson_integer_coeff(6, j).to_u64().unwrap())
            .collect();
        assert_eq!(row, vec![1, 6, 9, 2]);
    }

    #[test]
    fn table_matches_pointwise() {
        let f9 = f(3, 2);
        let pts = f9.enumerate();
        for a in f9.elements() {
            let table = dickson_table(&f9, a, 12, &pts);
            for m in 0..=12u64 {
                for (i, &x) in pts.iter().enumerate() {
                    assert_eq!(table[m as usize][i], dickson_value(&f9, m, a, x));
                }
            }
        }
    }
}
