//! Small integer helpers shared by the field and formula code.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` as `p^s` when it is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut s = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    Some((p, s))
}

/// Exponent of the largest power of two dividing `n`; `n` must be nonzero.
pub fn two_adic_valuation(n: u64) -> u32 {
    debug_assert!(n != 0);
    n.trailing_zeros()
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, f| acc / f * (f - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_powers() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_factors(24), vec![2, 3]);
    }

    #[test]
    fn valuation_and_phi() {
        assert_eq!(two_adic_valuation(48), 4);
        assert_eq!(two_adic_valuation(24), 3);
        assert_eq!(two_adic_valuation(15), 0);
        assert_eq!(euler_phi(24), 8);
        assert_eq!(euler_phi(1), 1);
    }
}
