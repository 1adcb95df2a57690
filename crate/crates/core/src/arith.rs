//! Small integer helpers shared by the formula and enumeration code.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Sorted factorization `n = ∏ p^e` by trial division. `1` has the empty factorization.
pub fn prime_power_decomposition(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_power_decomposition(n)
        .into_iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    k
}

pub fn checked_pow(base: u64, exp: u32, what: &'static str) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow(what))
}

pub fn checked_mul(x: u64, y: u64, what: &'static str) -> Result<u64> {
    x.checked_mul(y).ok_or(Error::Overflow(what))
}

pub fn exact_div(numerator: u64, denominator: u64, what: &'static str) -> Result<u64> {
    if denominator == 0 || !numerator.is_multiple_of(denominator) {
        return Err(Error::InexactDivision {
            what,
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

pub fn modulo(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// Solutions of `c·x ≡ r (mod n)` as a residue class `x ≡ x0 (mod m)`.
pub(crate) fn solve_linear_congruence(c: u64, r: u64, n: u64) -> Option<(u64, u64)> {
    let g = c.gcd(&n);
    if !r.is_multiple_of(g) {
        return None;
    }
    let m = n / g;
    if m == 1 {
        return Some((0, 1));
    }
    let inv = mod_inverse((c / g) % m, m)?;
    let x0 = ((r / g) % m) as u128 * inv as u128 % m as u128;
    Some((x0 as u64, m))
}

/// Combine `x ≡ a1 (mod m1)` and `x ≡ a2 (mod m2)` for possibly non-coprime moduli.
pub(crate) fn crt_combine((a1, m1): (u64, u64), (a2, m2): (u64, u64)) -> Option<(u64, u64)> {
    let g = m1.gcd(&m2);
    let diff = (a2 as i128 - a1 as i128).rem_euclid(m2 as i128) as u64;
    if !diff.is_multiple_of(g) {
        return None;
    }
    let l = m1 / g * m2;
    // a1 + m1·k ≡ a2 (mod m2)  ⇔  (m1/g)·k ≡ diff/g (mod m2/g)
    let (k, _) = solve_linear_congruence((m1 / g) % (m2 / g).max(1), diff / g, m2 / g)?;
    let x = (a1 as u128 + m1 as u128 * k as u128) % l as u128;
    Some((x as u64, l))
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i64).extended_gcd(&(m as i64));
    if e.gcd != 1 {
        return None;
    }
    Some(modulo(e.x, m))
}
