//! The mod-N Cartan subgroup `C_N(O) = (O/NO)^×`, the image of `O^×` in it,
//! and the reduced Cartan `C_N(O)/q_N(O^×)`.

use crate::arith::{checked_mul, checked_pow, exact_div, prime_power_decomposition};
use crate::error::{Error, Result};
use crate::orders::{Discriminant, OrderSpec};
use crate::quotient_ring::{Context, QuotientRing, RingElement};

/// Largest level accepted by the exhaustive scans.
pub const MAX_ENUMERATION_LEVEL: u64 = 300;

pub(crate) fn check_enumeration_level(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    if n > MAX_ENUMERATION_LEVEL {
        return Err(Error::BoundExceeded {
            what: "enumeration level",
            value: n,
            bound: MAX_ENUMERATION_LEVEL,
        });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct CartanGroup {
    pub context: Context,
    /// All units of `O/NO`, in lexicographic order.
    pub elements: Vec<RingElement>,
    /// The cyclic subgroup `q_N(O^×)`, starting at `1`.
    pub unit_image: Vec<RingElement>,
}

impl CartanGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn reduced_order(&self) -> u64 {
        self.order() / self.unit_image.len() as u64
    }
}

pub fn enumerate_units(delta: Discriminant, n: u64) -> Result<CartanGroup> {
    check_enumeration_level(n)?;
    let ring = QuotientRing::new(delta, n)?;
    let elements = ring
        .elements()
        .filter(|x| ring.is_unit_coords(x.coords()))
        .collect();
    Ok(CartanGroup {
        context: ring.context(),
        elements,
        unit_image: unit_image_in(&ring),
    })
}

/// `#C_N(O) = ∏_{p^a ∥ N} p^{2a−2}(p − 1)(p − (Δ/p))`.
pub fn cartan_order_formula(delta: Discriminant, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    let order = delta.order();
    let mut total = 1u64;
    for (p, a) in prime_power_decomposition(n) {
        let chi = order.kronecker(p) as i64;
        let local = checked_pow(p, 2 * a - 2, "Cartan order")? * (p - 1) * (p as i64 - chi) as u64;
        total = checked_mul(total, local, "Cartan order")?;
    }
    Ok(total)
}

/// Generator of `O^×` written on the basis `{1, ω}`.
fn root_of_unity_generator(order: &OrderSpec) -> (i64, i64) {
    match order.delta.value() {
        // ω = -2 + i, so i = 2 + ω
        -4 => (2, 1),
        // ω = (-3 + √-3)/2, so ζ₆ = (1 + √-3)/2 = 2 + ω
        -3 => (2, 1),
        _ => (-1, 0),
    }
}

fn unit_image_in(ring: &QuotientRing) -> Vec<RingElement> {
    let (a, b) = root_of_unity_generator(ring.order());
    let generator = ring.element(a, b).coords();
    let one = ring.one().coords();
    let mut out = vec![ring.one()];
    let mut power = generator;
    while power != one {
        out.push(ring.element_at(power));
        power = ring.mul_coords(power, generator);
    }
    out
}

pub fn unit_image(delta: Discriminant, n: u64) -> Result<Vec<RingElement>> {
    let ring = QuotientRing::new(delta, n)?;
    Ok(unit_image_in(&ring))
}

/// `w_N = #q_N(O^×)`: `#O^×` for `N ≥ 3`, half of it for `N = 2`, `1` for `N = 1`.
pub fn unit_image_order(order: &OrderSpec, n: u64) -> u64 {
    match n {
        0 | 1 => 1,
        2 => order.unit_count() / 2,
        _ => order.unit_count(),
    }
}

pub fn reduced_cartan_order(delta: Discriminant, n: u64) -> Result<u64> {
    let full = cartan_order_formula(delta, n)?;
    exact_div(
        full,
        unit_image_order(&delta.order(), n),
        "reduced Cartan order",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc(d: i64) -> Discriminant {
        Discriminant::new(d).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_units(disc(-3), 2).unwrap().order(), 3);
        assert_eq!(enumerate_units(disc(-7), 2).unwrap().order(), 1);
        assert_eq!(enumerate_units(disc(-40), 1).unwrap().order(), 1);
        assert!(matches!(
            enumerate_units(disc(-7), MAX_ENUMERATION_LEVEL + 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(cartan_order_formula(disc(-15), 15), Ok(120));
        assert_eq!(cartan_order_formula(disc(-4), 2), Ok(2));
        assert_eq!(cartan_order_formula(disc(-4), 1), Ok(1));
        assert_eq!(enumerate_units(disc(-15), 15).unwrap().order(), 120);
        assert_eq!(enumerate_units(disc(-4), 2).unwrap().order(), 2);
    }

    #[test]
    fn unit_image_examples() {
        let img = unit_image(disc(-163), 5).unwrap();
        let coords: Vec<_> = img.iter().map(|x| x.coords()).collect();
        assert_eq!(coords, vec![(1, 0), (4, 0)]);
        assert_eq!(unit_image(disc(-4), 3).unwrap().len(), 4);
        assert_eq!(unit_image(disc(-3), 2).unwrap().len(), 3);
        assert_eq!(unit_image(disc(-3), 1).unwrap().len(), 1);
        assert_eq!(unit_image(disc(-11), 2).unwrap().len(), 1);
    }

    #[test]
    fn reduced_orders() {
        assert_eq!(reduced_cartan_order(disc(-4), 4), Ok(2));
        assert_eq!(reduced_cartan_order(disc(-3), 3), Ok(1));
        assert_eq!(reduced_cartan_order(disc(-11), 2), Ok(3));
        assert_eq!(reduced_cartan_order(disc(-11), 5), Ok(8));
        assert_eq!(reduced_cartan_order(disc(-4), 1), Ok(1));
    }

    #[test]
    fn unit_image_is_a_subgroup_of_units() {
        for d in [-3, -4, -7, -12, -16, -27] {
            let ring = QuotientRing::new(disc(d), 12).unwrap();
            let img = unit_image(disc(d), 12).unwrap();
            assert_eq!(img.len() as u64, unit_image_order(ring.order(), 12));
            for x in &img {
                assert!(ring.is_unit(x).unwrap());
                for y in &img {
                    assert!(img.contains(&ring.mul(x, y).unwrap()));
                }
            }
        }
    }
}
