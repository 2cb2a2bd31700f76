//! Finite fields `F_{p^s}` built over a deterministic defining polynomial.
//!
//! An element is stored as its index: the coefficient vector over `Z_p`
//! read as base-`p` digits with the constant term least significant. Index
//! order is the canonical enumeration order, so zero comes first, then one,
//! and in `F_4 = F_2[t]/(t^2+t+1)` the order is `0, 1, t, t+1`.
//!
//! The defining polynomial is the least monic irreducible of degree `s`
//! under the same ordering applied to its non-leading coefficients. Two
//! calls with the same `(p, s)` therefore build identical fields, and
//! element indices can be compared across runs.
//!
//! Multiplication goes through exponent/logarithm tables keyed by the
//! least generator of `F_q^*`. Addition is digit-wise mod `p`, with a full
//! table for small fields. `0^0 = 1` throughout.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_factors};
use crate::error::{Error, Result};

/// Default cap on the field order.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

const ADD_TABLE_MAX: u32 = 512;

/// An element of some [`Field`], identified by its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    s: u32,
    q: u32,
    /// Monic, constant term first, length `s + 1`.
    modulus: Vec<u32>,
    radix: Vec<u32>,
    /// `exp[k] = g^k` for `k < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    generator: Elem,
    /// Distinct primes dividing `q - 1`.
    unit_order_factors: Vec<u64>,
}

/// A finite field `F_q`, `q = p^s`. Cloning is cheap.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.s() == other.s()
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p())
            .field("s", &self.s())
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p(), self.s())
    }
}

impl Field {
    /// Builds `F_{p^s}` with the default size bound.
    pub fn new(p: u64, s: u32) -> Result<Field> {
        Field::with_bound(p, s, DEFAULT_MAX_ORDER)
    }

    pub fn with_bound(p: u64, s: u32, bound: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroDegree);
        }
        let bound = bound.min(u32::MAX as u64);
        let too_large = Error::FieldTooLarge { p, s, bound };
        let q = p.checked_pow(s).ok_or_else(|| too_large.clone())?;
        if q > bound {
            return Err(too_large);
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = least_irreducible(p, s);
        let raw = RawArith {
            p,
            s: s as usize,
            modulus: &modulus,
        };
        let radix: Vec<u32> = (0..s).map(|i| p.pow(i)).collect();
        let unit_order_factors = prime_factors(q as u64 - 1);

        let generator = (1..q)
            .map(Elem)
            .find(|&x| raw.has_full_order(x.0, q, &unit_order_factors))
            .expect("F_q^* is cyclic");

        let units = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * units];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for k in 0..units {
            exp[k] = cur;
            exp[k + units] = cur;
            log[cur as usize] = k as u32;
            cur = raw.mul(cur, generator.0);
        }
        assert_eq!(cur, 1, "generator order check disagrees with table build");

        let neg: Vec<u32> = (0..q).map(|x| raw.neg(x)).collect();
        let add = (p != 2 && q <= ADD_TABLE_MAX).then(|| {
            let mut table = vec![0u32; (q * q) as usize];
            for x in 0..q {
                for y in 0..q {
                    table[(x * q + y) as usize] = raw.add(x, y);
                }
            }
            table
        });

        Ok(Field {
            inner: Arc::new(Inner {
                p,
                s,
                q,
                modulus,
                radix,
                exp,
                log,
                neg,
                add,
                generator,
                unit_order_factors,
            }),
        })
    }

    /// Builds a field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, s) = crate::arith::prime_power(q)
            .ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
        Field::new(p, s)
    }

    /// Parses `"p^s"` or a bare prime power such as `"25"`.
    pub fn parse(notation: &str) -> Result<Field> {
        let (p, s) = parse_notation(notation)?;
        Field::new(p, s)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn s(&self) -> u32 {
        self.inner.s
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn notation(&self) -> String {
        format!("{}^{}", self.p(), self.s())
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.q() as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                q: self.q(),
            })
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.q()
    }

    /// The image of the integer `n` in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p() as i64) as u32)
    }

    /// Builds an element from coefficients (constant term first), reducing
    /// each mod `p`. Shorter vectors are zero-padded.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Elem> {
        if coeffs.len() > self.s() as usize {
            return Err(Error::ArityMismatch {
                expected: self.s() as usize,
                got: coeffs.len(),
            });
        }
        let p = self.p() as i64;
        let index = coeffs
            .iter()
            .zip(&self.inner.radix)
            .map(|(&c, &r)| c.rem_euclid(p) as u32 * r)
            .sum();
        Ok(Elem(index))
    }

    /// Length-`s` coefficient vector, constant term first.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let p = self.p();
        let mut rest = x.0;
        (0..self.s())
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }

    /// Integer for prime fields, bracketed coefficient list otherwise.
    pub fn format(&self, x: Elem) -> String {
        if self.s() == 1 {
            x.0.to_string()
        } else {
            let parts: Vec<String> = self.coeffs(x).iter().map(u32::to_string).collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// All `q` elements in canonical order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q()).map(Elem)
    }

    pub fn enumerate(&self) -> Vec<Elem> {
        self.elements().collect()
    }

    pub fn units(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.q()).map(Elem)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        debug_assert!(self.contains(x) && self.contains(y));
        let inner = &*self.inner;
        if inner.p == 2 {
            return Elem(x.0 ^ y.0);
        }
        if let Some(table) = &inner.add {
            return Elem(table[(x.0 * inner.q + y.0) as usize]);
        }
        let p = inner.p;
        let (mut a, mut b, mut out) = (x.0, y.0, 0u32);
        for &r in &inner.radix {
            out += ((a % p + b % p) % p) * r;
            a /= p;
            b /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.inner.neg[x.index()])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        debug_assert!(self.contains(x) && self.contains(y));
        if x.is_zero() || y.is_zero() {
            return Elem::ZERO;
        }
        let inner = &*self.inner;
        Elem(inner.exp[(inner.log[x.index()] + inner.log[y.index()]) as usize])
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let units = self.q() - 1;
        let l = self.inner.log[x.index()];
        Ok(Elem(self.inner.exp[((units - l) % units) as usize]))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` for any integer `e`; negative exponents need `x != 0`.
    pub fn pow(&self, x: Elem, e: i64) -> Result<Elem> {
        if e == 0 {
            return Ok(Elem::ONE);
        }
        if x.is_zero() {
            return if e > 0 {
                Ok(Elem::ZERO)
            } else {
                Err(Error::ZeroNegativePower)
            };
        }
        let units = (self.q() - 1) as i128;
        let k = (self.inner.log[x.index()] as i128 * e as i128).rem_euclid(units);
        Ok(Elem(self.inner.exp[k as usize]))
    }

    /// `x^e` for a nonnegative exponent.
    pub fn pow_u(&self, x: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if x.is_zero() {
            return Elem::ZERO;
        }
        let units = (self.q() - 1) as u128;
        let k = (self.inner.log[x.index()] as u128 * e as u128) % units;
        Elem(self.inner.exp[k as usize])
    }

    /// Square-and-multiply on the table multiplication; used to cross-check
    /// the logarithm shortcut in [`Field::pow_u`].
    pub fn pow_by_squaring(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplication straight from the defining polynomial, bypassing the
    /// log tables.
    pub fn mul_reference(&self, x: Elem, y: Elem) -> Elem {
        let raw = RawArith {
            p: self.p(),
            s: self.s() as usize,
            modulus: &self.inner.modulus,
        };
        Elem(raw.mul(x.0, y.0))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Elem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut order = (self.q() - 1) as u64;
        for &f in &self.inner.unit_order_factors {
            while order.is_multiple_of(f) && self.pow_u(x, order / f) == Elem::ONE {
                order /= f;
            }
        }
        Ok(order)
    }

    /// The least element (in enumeration order) of order `q - 1`.
    pub fn find_generator(&self) -> Elem {
        self.inner.generator
    }

    pub fn is_generator(&self, x: Elem) -> bool {
        !x.is_zero()
            && self
                .inner
                .unit_order_factors
                .iter()
                .all(|&f| self.pow_u(x, (self.q() as u64 - 1) / f) != Elem::ONE)
    }

    /// Every generator of `F_q^*`, in enumeration order.
    pub fn all_generators(&self) -> Vec<Elem> {
        self.units().filter(|&x| self.is_generator(x)).collect()
    }

    /// Whether `x = y^2` for some `y`. Always true in characteristic 2.
    pub fn is_square(&self, x: Elem) -> bool {
        if self.p() == 2 || x.is_zero() {
            return true;
        }
        self.pow_u(x, (self.q() as u64 - 1) / 2) == Elem::ONE
    }

    fn check_subfield(&self, l: u32) -> Result<()> {
        if l == 0 || !self.s().is_multiple_of(l) {
            return Err(Error::NotASubfield { l, s: self.s() });
        }
        Ok(())
    }

    /// Whether `x` lies in the subfield `F_{p^l}`, i.e. `x^{p^l} = x`.
    pub fn in_subfield(&self, x: Elem, l: u32) -> Result<bool> {
        self.check_subfield(l)?;
        Ok(self.pow_u(x, (self.p() as u64).pow(l)) == x)
    }

    /// Elements of `F_{p^l}` in enumeration order.
    pub fn subfield_elements(&self, l: u32) -> Result<Vec<Elem>> {
        self.check_subfield(l)?;
        let pl = (self.p() as u64).pow(l);
        Ok(self.elements().filter(|&x| self.pow_u(x, pl) == x).collect())
    }

    /// An injective ring map from `self` into `target`, sending the
    /// generator `t` of `self` to the least root of `self`'s modulus in
    /// `target`.
    pub fn embed_into(&self, target: &Field) -> Result<Embedding> {
        if target.p() != self.p() || !target.s().is_multiple_of(self.s()) {
            return Err(Error::Precondition(format!(
                "{self} does not embed in {target}"
            )));
        }
        let modulus: Vec<Elem> = self
            .modulus()
            .iter()
            .map(|&c| target.from_int(c as i64))
            .collect();
        let eval = |x: Elem| {
            modulus
                .iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| target.add(target.mul(acc, x), c))
        };
        let root = target
            .elements()
            .find(|&x| eval(x).is_zero())
            .expect("every extension of degree s contains a root of the modulus");
        let powers: Vec<Elem> = (0..self.s() as u64).map(|i| target.pow_u(root, i)).collect();
        let images = self
            .elements()
            .map(|x| {
                self.coeffs(x)
                    .iter()
                    .zip(&powers)
                    .fold(Elem::ZERO, |acc, (&c, &pw)| {
                        target.add(acc, target.mul(target.from_int(c as i64), pw))
                    })
            })
            .collect();
        Ok(Embedding {
            source: self.clone(),
            target: target.clone(),
            images,
        })
    }
}

/// A field embedding produced by [`Field::embed_into`].
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    images: Vec<Elem>,
}

impl Embedding {
    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn map(&self, x: Elem) -> Elem {
        self.images[x.index()]
    }
}

/// Splits `"p^s"` or a bare prime power into `(p, s)`.
pub fn parse_notation(notation: &str) -> Result<(u64, u32)> {
    let bad = || Error::Parse(format!("field notation {notation:?}, expected p^s"));
    let text = notation.trim();
    match text.split_once('^') {
        Some((p, s)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let s: u32 = s.trim().parse().map_err(|_| bad())?;
            Ok((p, s))
        }
        None => {
            let q: u64 = text.parse().map_err(|_| bad())?;
            crate::arith::prime_power(q).ok_or_else(bad)
        }
    }
}

/// An element bundled with its field. Operators panic on mixed fields; the
/// `checked_*` methods report [`Error::FieldMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    elem: Elem,
}

impl FieldElement {
    pub fn new(field: &Field, elem: Elem) -> Result<FieldElement> {
        field.elem(elem.0 as u64)?;
        Ok(FieldElement {
            field: field.clone(),
            elem,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.elem)
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.notation(),
                other.field.notation(),
            ))
        }
    }

    fn wrap(&self, elem: Elem) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            elem,
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.elem, other.elem)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.elem, other.elem)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.elem, other.elem)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.elem)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        Ok(self.wrap(self.field.pow(self.elem, e)?))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("mixed-field operands")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.wrap(self.field.neg(self.elem))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.elem))
    }
}

/// Polynomial arithmetic on packed coefficient vectors, used while the
/// tables are being built and as a reference multiplication.
struct RawArith<'a> {
    p: u32,
    s: usize,
    modulus: &'a [u32],
}

impl RawArith<'_> {
    fn digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.s)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.digits(x), self.digits(y));
        let sum: Vec<u32> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.pack(&sum)
    }

    fn neg(&self, x: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(x)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.pack(&d)
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let p = self.p as u64;
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0u64; 2 * self.s - 1];
        for (i, &u) in a.iter().enumerate().filter(|(_, &u)| u != 0) {
            for (j, &v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
            }
        }
        for k in (self.s..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus[..self.s].iter().enumerate() {
                let idx = k - self.s + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..self.s].iter().map(|&c| c as u32).collect();
        self.pack(&digits)
    }

    fn pow(&self, x: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (x, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn has_full_order(&self, x: u32, q: u32, factors: &[u64]) -> bool {
        let units = q as u64 - 1;
        factors.iter().all(|&f| self.pow(x, units / f) != 1)
    }
}

/// Remainder of `f` by a monic `g` over `Z_p`; both constant term first.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for k in (dg..r.len()).rev() {
        let c = r[k] % p;
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let idx = k - dg + i;
            r[idx] = (r[idx] + (p - c) * gi as u64) % p;
        }
    }
    r.truncate(dg);
    r.into_iter().map(|c| (c % p) as u32).collect()
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `index`.
fn monic_from_index(p: u32, deg: usize, mut index: u64) -> Vec<u32> {
    let mut poly: Vec<u32> = (0..deg)
        .map(|_| {
            let d = (index % p as u64) as u32;
            index /= p as u64;
            d
        })
        .collect();
    poly.push(1);
    poly
}

/// Irreducibility by trial division with every monic polynomial of degree
/// up to `deg(f)/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let g = monic_from_index(p, d, idx);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible of degree `s` over `Z_p`, constant term
/// first.
pub fn least_irreducible(p: u32, s: u32) -> Vec<u32> {
    let count = (p as u64).pow(s);
    (0..count)
        .map(|idx| monic_from_index(p, s as usize, idx))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_x() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 5);
    }

    #[test]
    fn f4_modulus_and_order() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(t, t), f.from_coeffs(&[1, 1]).unwrap());
        let listed: Vec<Vec<u32>> = f.enumerate().into_iter().map(|x| f.coeffs(x)).collect();
        assert_eq!(listed, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn f25_modulus_has_no_root() {
        let f = Field::new(5, 2).unwrap();
        let m = f.modulus();
        assert_eq!(m.len(), 3);
        assert_eq!(m[2], 1);
        for x in 0..5u32 {
            assert_ne!((m[0] + m[1] * x + x * x) % 5, 0);
        }
        assert_eq!(m, &[2, 0, 1]);
    }

    #[test]
    fn repeated_construction_is_identical() {
        let a = Field::new(3, 3).unwrap();
        let b = Field::new(3, 3).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.find_generator(), b.find_generator());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(Field::new(5, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(
            Field::new(2, 21),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(Field::with_bound(2, 21, 1 << 21).is_ok());
    }

    #[test]
    fn fermat_in_f5() {
        let f = Field::new(5, 1).unwrap();
        let two = f.from_int(2);
        assert_eq!(f.pow(two, 4).unwrap(), Elem::ONE);
        let direct = f.mul(f.mul(two, two), f.mul(two, two));
        assert_eq!(direct, Elem::ONE);
    }

    #[test]
    fn pow_conventions() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.pow(Elem::ZERO, 0).unwrap(), Elem::ONE);
        assert_eq!(f.pow(Elem::ZERO, 3).unwrap(), Elem::ZERO);
        assert_eq!(f.pow(Elem::ZERO, -1).unwrap_err(), Error::ZeroNegativePower);
        let three = f.from_int(3);
        assert_eq!(f.mul(f.pow(three, -1).unwrap(), three), Elem::ONE);
        assert_eq!(f.inv(Elem::ZERO).unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn generators() {
        assert_eq!(Field::new(2, 1).unwrap().find_generator(), Elem::ONE);
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.find_generator(), f5.from_int(2));
        let f25 = Field::new(5, 2).unwrap();
        assert_eq!(f25.all_generators().len(), 8);
        let g = f25.find_generator();
        assert_eq!(f25.order(g).unwrap(), 24);
        assert_eq!(f25.all_generators()[0], g);
    }

    #[test]
    fn squares() {
        let f5 = Field::new(5, 1).unwrap();
        assert!(f5.is_square(Elem::ZERO));
        assert!(!f5.is_square(f5.from_int(2)));
        assert!(f5.is_square(f5.from_int(4)));
        for (p, s) in [(3, 1), (7, 1), (3, 2), (5, 2)] {
            let f = Field::new(p, s).unwrap();
            assert!(!f.is_square(f.find_generator()));
        }
        let f8 = Field::new(2, 3).unwrap();
        assert!(f8.elements().all(|x| f8.is_square(x)));
    }

    #[test]
    fn subfields() {
        let f = Field::new(5, 2).unwrap();
        assert_eq!(f.subfield_elements(1).unwrap().len(), 5);
        assert!(f.in_subfield(Elem::ZERO, 1).unwrap());
        assert!(f.in_subfield(Elem::ONE, 2).unwrap());
        assert!(!f.in_subfield(f.find_generator(), 1).unwrap());
        assert_eq!(
            f.in_subfield(Elem::ONE, 3).unwrap_err(),
            Error::NotASubfield { l: 3, s: 2 }
        );
    }

    #[test]
    fn mixed_field_operands_are_rejected() {
        let f5 = Field::new(5, 1).unwrap();
        let f25 = Field::new(5, 2).unwrap();
        let a = FieldElement::new(&f5, Elem(2)).unwrap();
        let b = FieldElement::new(&f25, Elem(2)).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert!(FieldElement::new(&f5, Elem(7)).is_err());
        let c = FieldElement::new(&f5, Elem(4)).unwrap();
        assert_eq!((&a * &c).elem(), Elem(3));
        assert_eq!(c.to_string(), "4");
        assert_eq!(FieldElement::new(&f25, Elem(7)).unwrap().to_string(), "[2,1]");
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let small = Field::new(3, 2).unwrap();
        let big = Field::new(3, 4).unwrap();
        let emb = small.embed_into(&big).unwrap();
        for x in small.elements() {
            assert!(big.in_subfield(emb.map(x), 2).unwrap());
            for y in small.elements() {
                assert_eq!(emb.map(small.add(x, y)), big.add(emb.map(x), emb.map(y)));
                assert_eq!(emb.map(small.mul(x, y)), big.mul(emb.map(x), emb.map(y)));
            }
        }
        assert!(small.embed_into(&Field::new(3, 3).unwrap()).is_err());
    }

    #[test]
    fn notation() {
        assert_eq!(parse_notation("5^2").unwrap(), (5, 2));
        assert_eq!(parse_notation("27").unwrap(), (3, 3));
        assert!(parse_notation("12").is_err());
        assert!(parse_notation("x^2").is_err());
    }
}
