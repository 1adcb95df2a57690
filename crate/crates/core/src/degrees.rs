//! Closed-form degree formulas: least Cartan orbit sizes `T̃(O, ℓ^a)`, the
//! torsion degree `T(O, N)`, the square-discriminant predicate `H(O, N)`,
//! and the class field degrees that go with them.
//!
//! Every rational expression here is evaluated as an integer numerator over
//! an integer denominator; a division that does not come out even is an error.

use serde::{Deserialize, Serialize};

use crate::arith::{
    checked_mul, checked_pow, euler_phi, exact_div, is_prime, prime_power_decomposition, valuation,
};
use crate::cartan::{cartan_order_formula, reduced_cartan_order, unit_image_order};
use crate::error::{Error, Result};
use crate::orders::{unit_group_order, Discriminant, OrderSpec};

/// `T̃(O, ℓ^a)`, the least size of a `C_{ℓ^a}(O)`-orbit on a point of order `ℓ^a`.
pub fn t_tilde(delta: Discriminant, l: u64, a: u32) -> Result<u64> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if a == 0 {
        return Err(Error::LevelTooSmall { min: 2, got: 1 });
    }
    t_tilde_for(&delta.order(), l, a)
}

pub fn t_tilde_for(order: &OrderSpec, l: u64, a: u32) -> Result<u64> {
    const WHAT: &str = "least Cartan orbit size";
    if l == 2 && a == 1 {
        return Ok(if order.kronecker(2) == -1 { 3 } else { 1 });
    }
    let pow = |e: u32| checked_pow(l, e, WHAT);
    let k = valuation(order.conductor, l);
    let value = if k == 0 {
        match order.kronecker(l) {
            1 => pow(a - 1)? * (l - 1),
            0 => pow(2 * a - 2)? * (l - 1),
            _ => checked_mul(pow(2 * a - 2)?, l * l - 1, WHAT)?,
        }
    } else {
        match order.field_kronecker(l) {
            1 => pow(a - 1)? * (l - 1),
            -1 if a <= 2 * k => pow(a - 1)? * (l - 1),
            -1 => pow(2 * a - 2 * k - 1)? * (l - 1),
            _ if a <= 2 * k + 1 => pow(a - 1)? * (l - 1),
            _ => pow(2 * a - 2 * k - 2)? * (l - 1),
        }
    };
    Ok(value)
}

/// `∏ T̃(O, ℓ^a)` over the prime powers exactly dividing `n`, using `local` for each factor.
pub fn t_tilde_product_with<F>(order: &OrderSpec, n: u64, local: F) -> Result<u64>
where
    F: Fn(&OrderSpec, u64, u32) -> Result<u64>,
{
    prime_power_decomposition(n)
        .into_iter()
        .try_fold(1u64, |acc, (l, a)| {
            checked_mul(acc, local(order, l, a)?, "least Cartan orbit size")
        })
}

pub fn t_tilde_product(order: &OrderSpec, n: u64) -> Result<u64> {
    t_tilde_product_with(order, n, t_tilde_for)
}

/// `T(O, N)` for `N ≥ 3` with the local factors supplied by `local`.
pub fn torsion_degree_with<F>(order: &OrderSpec, n: u64, local: F) -> Result<u64>
where
    F: Fn(&OrderSpec, u64, u32) -> Result<u64>,
{
    if n < 3 {
        return Err(Error::LevelTooSmall { min: 3, got: n });
    }
    if order.delta.value() == -3 && n == 3 {
        return Ok(1);
    }
    let product = t_tilde_product_with(order, n, local)?;
    exact_div(product, order.unit_count(), "torsion degree")
}

/// `T(O, N) = ∏ T̃(O, ℓ^a) / #O^×` for `N ≥ 3`, and `1` at `(Δ, N) = (-3, 3)`.
pub fn torsion_degree(delta: Discriminant, n: u64) -> Result<u64> {
    torsion_degree_with(&delta.order(), n, t_tilde_for)
}

/// `T(O, N)` extended to every `N ≥ 1`: `1` at `N = 1`; at `N = 2` it is `1` for
/// `Δ ∈ {-3, -4}` and `T̃(O, 2)` otherwise.
pub fn minimal_torsion_degree(delta: Discriminant, n: u64) -> Result<u64> {
    match n {
        0 => Err(Error::LevelTooSmall { min: 1, got: 0 }),
        1 => Ok(1),
        2 if matches!(delta.value(), -3 | -4) => Ok(1),
        2 => t_tilde(delta, 2, 1),
        _ => torsion_degree(delta, n),
    }
}

/// `H(O, N)`: `Δ` is a square in `Z/4NZ`.
pub fn h_predicate(delta: Discriminant, n: u64) -> bool {
    let m = 4 * n;
    let target = delta.value().rem_euclid(m as i64) as u64;
    (0..m).any(|s| s * s % m == target)
}

/// `(Δ/ℓ) = -1` for every prime `ℓ | N`; vacuously true at `N = 1`.
pub fn simply_transitive(delta: Discriminant, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    let order = delta.order();
    Ok(prime_power_decomposition(n)
        .into_iter()
        .all(|(l, _)| order.kronecker(l) == -1))
}

/// Degree of the Weber function field over `K(j)`: `#C_N(O)/w_N`.
pub fn weber_degree(delta: Discriminant, n: u64) -> Result<u64> {
    reduced_cartan_order(delta, n)
}

/// `N ∏_{p | N} (1 − χ(p)/p)` as the integer `(N/rad N)·∏ (p − χ(p))`.
fn euler_product(n: u64, chi: impl Fn(u64) -> i8, what: &'static str) -> Result<u64> {
    let mut value = n;
    for (p, _) in prime_power_decomposition(n) {
        value = checked_mul(value / p, (p as i64 - chi(p) as i64) as u64, what)?;
    }
    Ok(value)
}

/// `[K(f) : K^{(1)}] = (2/w_K)·f·∏_{p | f}(1 − (Δ_K/p)/p)`, and `1` at `f = 1`.
pub fn ring_class_relative_degree(delta_k: Discriminant, f: u64) -> Result<u64> {
    const WHAT: &str = "ring class field degree";
    if !delta_k.is_fundamental() {
        return Err(Error::NotFundamental(delta_k.value()));
    }
    if f == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    if f == 1 {
        return Ok(1);
    }
    let order = delta_k.order();
    let product = euler_product(f, |p| order.kronecker(p), WHAT)?;
    exact_div(2 * product, unit_group_order(delta_k), WHAT)
}

/// `[K(Nf) : K(f)]`.
pub fn tower_degree(delta: Discriminant, n: u64) -> Result<u64> {
    const WHAT: &str = "ring class tower degree";
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    if n == 1 {
        return Ok(1);
    }
    let order = delta.order();
    if order.conductor > 1 {
        euler_product(n, |p| order.kronecker(p), WHAT)
    } else {
        let product = euler_product(n, |p| order.field_kronecker(p), WHAT)?;
        exact_div(2 * product, order.field_unit_count(), WHAT)
    }
}

/// `[K^{(N)} : K^{(1)}] = φ_K(N)/[O_K^× : U_N]` for the principal modulus `(N)`.
pub fn ray_class_degree(delta_k: Discriminant, n: u64) -> Result<u64> {
    const WHAT: &str = "ray class field degree";
    if !delta_k.is_fundamental() {
        return Err(Error::NotFundamental(delta_k.value()));
    }
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    let phi_k = cartan_order_formula(delta_k, n)?;
    // [O_K^× : U_N] is the size of the image of O_K^× in (O_K/N)^×
    exact_div(phi_k, unit_image_order(&delta_k.order(), n), WHAT)
}

/// `φ(N) | #O^×·T(O, N)` for `N ≥ 3`.
pub fn spy_divisor_check(delta: Discriminant, n: u64) -> Result<bool> {
    let t = torsion_degree(delta, n)?;
    Ok((unit_group_order(delta) * t).is_multiple_of(euler_phi(n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFactor {
    pub prime: u64,
    pub exponent: u32,
    pub t_tilde: u64,
}

/// Formula-side degree data for one `(Δ, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTableRow {
    pub delta: i64,
    pub delta_k: i64,
    pub conductor: u64,
    pub n: u64,
    pub cartan_order: u64,
    pub t_tilde_factors: Vec<LocalFactor>,
    pub t: u64,
    pub h: bool,
    pub simply_transitive: bool,
    pub weber_degree: u64,
    pub tower_degree: u64,
}

pub fn degree_row(delta: Discriminant, n: u64) -> Result<DegreeTableRow> {
    let order = delta.order();
    let t_tilde_factors = prime_power_decomposition(n)
        .into_iter()
        .map(|(prime, exponent)| {
            Ok(LocalFactor {
                prime,
                exponent,
                t_tilde: t_tilde_for(&order, prime, exponent)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeTableRow {
        delta: delta.value(),
        delta_k: order.delta_k.value(),
        conductor: order.conductor,
        n,
        cartan_order: cartan_order_formula(delta, n)?,
        t_tilde_factors,
        t: minimal_torsion_degree(delta, n)?,
        h: h_predicate(delta, n),
        simply_transitive: simply_transitive(delta, n)?,
        weber_degree: weber_degree(delta, n)?,
        tower_degree: tower_degree(delta, n)?,
    })
}
