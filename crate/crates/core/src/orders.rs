//! Discriminants and conductors of imaginary quadratic orders.
//!
//! An order `O` of an imaginary quadratic field `K` is determined by its
//! discriminant `Δ < 0`, `Δ ≡ 0, 1 (mod 4)`, which factors uniquely as
//! `Δ = f²·Δ_K` with `f` the conductor and `Δ_K` fundamental.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, modulo};
use crate::error::{Error, Result};

pub use crate::arith::prime_power_decomposition;

/// Largest `|Δ|` accepted by the bounded operations.
pub const MAX_DISCRIMINANT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        validate_discriminant(value)
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn magnitude(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn is_fundamental(self) -> bool {
        is_fundamental(self.0)
    }

    pub fn order(self) -> OrderSpec {
        factor_discriminant(self)
    }
}

impl TryFrom<i64> for Discriminant {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        validate_discriminant(value)
    }
}

impl From<Discriminant> for i64 {
    fn from(d: Discriminant) -> i64 {
        d.0
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn validate_discriminant(d: i64) -> Result<Discriminant> {
    if d >= 0 {
        return Err(Error::NonNegativeDiscriminant(d));
    }
    match d.rem_euclid(4) {
        0 | 1 => Ok(Discriminant(d)),
        _ => Err(Error::BadDiscriminantResidue(d)),
    }
}

fn is_squarefree(n: u64) -> bool {
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Fundamentality of a negative discriminant: `Δ ≡ 1 (mod 4)` squarefree, or
/// `Δ = 4m` with `m ≡ 2, 3 (mod 4)` squarefree.
pub fn is_fundamental(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// An order in its fundamental-discriminant/conductor form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSpec {
    pub delta: Discriminant,
    pub delta_k: Discriminant,
    pub conductor: u64,
}

impl OrderSpec {
    /// `#O^×`.
    pub fn unit_count(&self) -> u64 {
        unit_group_order(self.delta)
    }

    /// `#O_K^×`.
    pub fn field_unit_count(&self) -> u64 {
        unit_group_order(self.delta_k)
    }

    /// Trace `f·Δ_K` of `ω = f·τ_K`.
    pub fn omega_trace(&self) -> i64 {
        self.conductor as i64 * self.delta_k.value()
    }

    /// `ω² = t·ω + c₀` with `c₀ = f²(Δ_K − Δ_K²)/4`.
    pub fn omega_square_constant(&self) -> i64 {
        let dk = self.delta_k.value();
        let f = self.conductor as i64;
        f * f * ((dk - dk * dk) / 4)
    }

    /// `(Δ/p)` for a prime `p` known to the caller.
    pub fn kronecker(&self, p: u64) -> i8 {
        kronecker_symbol(self.delta.value(), p)
    }

    /// `(Δ_K/p)` for a prime `p` known to the caller.
    pub fn field_kronecker(&self, p: u64) -> i8 {
        kronecker_symbol(self.delta_k.value(), p)
    }
}

pub fn factor_discriminant(d: Discriminant) -> OrderSpec {
    let value = d.value();
    let mag = d.magnitude();
    let mut f = 1u64;
    let mut candidate = 1u64;
    while candidate * candidate <= mag {
        let sq = (candidate * candidate) as i64;
        if value % sq == 0 && is_fundamental(value / sq) {
            f = candidate;
        }
        candidate += 1;
    }
    let delta_k = Discriminant(value / (f * f) as i64);
    OrderSpec {
        delta: d,
        delta_k,
        conductor: f,
    }
}

/// Kronecker symbol `(d/p)` at a prime `p`.
///
/// At `p = 2`: `0` for even `d`, `+1` for `d ≡ ±1 (mod 8)`, `-1` for `d ≡ ±3 (mod 8)`;
/// for discriminants this is `+1` iff `d ≡ 1 (mod 8)` and `-1` iff `d ≡ 5 (mod 8)`.
pub fn kronecker(d: Discriminant, p: u64) -> Result<i8> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(kronecker_symbol(d.value(), p))
}

pub(crate) fn kronecker_symbol(d: i64, p: u64) -> i8 {
    if p == 2 {
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    jacobi(modulo(d, p), p)
}

/// Jacobi symbol `(a/n)` for odd `n`.
fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a % n;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// `#O^×`: 6 for `Δ = -3`, 4 for `Δ = -4`, otherwise 2.
pub fn unit_group_order(d: Discriminant) -> u64 {
    match d.value() {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// Number of primitive reduced forms `ax² + bxy + cy²` of discriminant `d`,
/// which is `#Pic O` for the order of discriminant `d`.
pub fn class_number(d: Discriminant) -> Result<u64> {
    let mag = d.magnitude();
    if mag > MAX_DISCRIMINANT {
        return Err(Error::BoundExceeded {
            what: "|discriminant|",
            value: mag,
            bound: MAX_DISCRIMINANT,
        });
    }
    let disc = d.value();
    let mut count = 0;
    let mut a: i64 = 1;
    // reduced forms have 3a² ≤ |Δ|
    while 3 * a * a <= mag as i64 {
        for b in (-a + 1)..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                count += 1;
            }
        }
        a += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc(d: i64) -> Discriminant {
        Discriminant::new(d).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(validate_discriminant(-15).unwrap().value(), -15);
        assert_eq!(validate_discriminant(-4).unwrap().value(), -4);
        assert_eq!(
            validate_discriminant(-6),
            Err(Error::BadDiscriminantResidue(-6))
        );
        assert_eq!(
            validate_discriminant(-5),
            Err(Error::BadDiscriminantResidue(-5))
        );
        assert_eq!(
            validate_discriminant(0),
            Err(Error::NonNegativeDiscriminant(0))
        );
        assert_eq!(
            validate_discriminant(5),
            Err(Error::NonNegativeDiscriminant(5))
        );
    }

    #[test]
    fn factorization_examples() {
        let o = disc(-12).order();
        assert_eq!((o.delta_k.value(), o.conductor), (-3, 2));
        let o = disc(-7).order();
        assert_eq!((o.delta_k.value(), o.conductor), (-7, 1));
        let o = disc(-48).order();
        assert_eq!((o.delta_k.value(), o.conductor), (-3, 4));
        let o = disc(-36).order();
        assert_eq!((o.delta_k.value(), o.conductor), (-4, 3));
        let o = disc(-64).order();
        assert_eq!((o.delta_k.value(), o.conductor), (-4, 4));
    }

    #[test]
    fn fundamental_predicate() {
        for d in [-3, -4, -7, -8, -15, -20, -24, -163] {
            assert!(is_fundamental(d), "{d}");
        }
        for d in [-12, -16, -27, -28, -36, -48, -75] {
            assert!(!is_fundamental(d), "{d}");
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(disc(-7), 2), Ok(1));
        assert_eq!(kronecker(disc(-3), 2), Ok(-1));
        assert_eq!(kronecker(disc(-4), 2), Ok(0));
        assert_eq!(kronecker(disc(-3), 7), Ok(1));
        assert_eq!(kronecker(disc(-163), 7), Ok(-1));
        assert_eq!(kronecker(disc(-15), 5), Ok(0));
        assert_eq!(kronecker(disc(-7), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn unit_orders() {
        assert_eq!(unit_group_order(disc(-3)), 6);
        assert_eq!(unit_group_order(disc(-4)), 4);
        assert_eq!(unit_group_order(disc(-163)), 2);
        assert_eq!(unit_group_order(disc(-12)), 2);
        assert_eq!(unit_group_order(disc(-16)), 2);
    }

    #[test]
    fn class_numbers() {
        assert_eq!(class_number(disc(-4)), Ok(1));
        assert_eq!(class_number(disc(-15)), Ok(2));
        assert_eq!(class_number(disc(-23)), Ok(3));
        assert_eq!(class_number(disc(-163)), Ok(1));
        assert_eq!(class_number(disc(-12)), Ok(1));
        // 3x² + 3y² has the right discriminant but is not primitive
        assert_eq!(class_number(disc(-36)), Ok(2));
        assert!(matches!(
            class_number(disc(-4_000_003)),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn omega_constants() {
        let o = disc(-4).order();
        assert_eq!((o.omega_square_constant(), o.omega_trace()), (-5, -4));
        let o = disc(-3).order();
        assert_eq!((o.omega_square_constant(), o.omega_trace()), (-3, -3));
        let o = disc(-12).order();
        assert_eq!((o.omega_square_constant(), o.omega_trace()), (-12, -6));
    }
}
