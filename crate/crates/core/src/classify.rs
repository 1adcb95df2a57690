//! Torsion subgroups and rational cyclic isogenies of `O`-CM elliptic curves
//! over `K(j)`, as sets over all twists.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, prime_power_decomposition};
use crate::degrees::{h_predicate, t_tilde_product};
use crate::error::{Error, Result};
use crate::orders::Discriminant;

/// The group `Z/s × Z/e` in invariant-factor form, `s | e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(u64, u64)", into = "(u64, u64)")]
pub struct GroupShape {
    s: u64,
    e: u64,
}

impl GroupShape {
    pub const TRIVIAL: GroupShape = GroupShape { s: 1, e: 1 };

    pub fn new(s: u64, e: u64) -> Result<Self> {
        if s == 0 || e == 0 || !e.is_multiple_of(s) {
            return Err(Error::BadGroupShape { s, e });
        }
        Ok(Self { s, e })
    }

    pub fn cyclic(e: u64) -> Result<Self> {
        Self::new(1, e)
    }

    pub fn s(self) -> u64 {
        self.s
    }

    pub fn e(self) -> u64 {
        self.e
    }

    pub fn order(self) -> u64 {
        self.s * self.e
    }
}

impl TryFrom<(u64, u64)> for GroupShape {
    type Error = Error;

    fn try_from((s, e): (u64, u64)) -> Result<Self> {
        Self::new(s, e)
    }
}

impl From<GroupShape> for (u64, u64) {
    fn from(g: GroupShape) -> Self {
        (g.s, g.e)
    }
}

/// Written `sxe`, so `Z/2 × Z/4` is `2x4` and the trivial group is `1x1`.
impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.s, self.e)
    }
}

fn shapes(list: &[(u64, u64)]) -> BTreeSet<GroupShape> {
    list.iter().map(|&(s, e)| GroupShape { s, e }).collect()
}

fn is_exceptional(delta: Discriminant) -> bool {
    matches!(delta.value(), -3 | -4)
}

/// `E(K(j))[2]`, which does not depend on the twist.
pub fn two_torsion_over_kj(delta: Discriminant) -> Result<GroupShape> {
    if is_exceptional(delta) {
        return Err(Error::ExceptionalDiscriminant(delta.value()));
    }
    Ok(match delta.value().rem_euclid(8) {
        5 => GroupShape { s: 1, e: 1 },
        1 => GroupShape { s: 2, e: 2 },
        _ => GroupShape { s: 1, e: 2 },
    })
}

/// Every group occurring as `E(K(j))[tors]` for some `O`-CM curve `E`.
///
/// Away from `Δ ∈ {-3, -4}` a twist picks up a point of order `N ∈ {3, 4, 6}`
/// exactly when `H(O, N)` holds; full `N`-torsion for `N ≥ 3` never occurs, so
/// each such point extends the fixed 2-torsion to `Z/s × Z/lcm(e, N)`.
pub fn torsion_groups_over_kj(delta: Discriminant) -> BTreeSet<GroupShape> {
    match delta.value() {
        -4 => shapes(&[(1, 2), (2, 2), (2, 4), (1, 10)]),
        -3 => shapes(&[(1, 1), (1, 3), (1, 7), (2, 2), (2, 6), (3, 3)]),
        _ => {
            let two = two_torsion_over_kj(delta).expect("non-exceptional discriminant");
            let mut out = BTreeSet::from([two]);
            for n in [3u64, 4, 6] {
                if h_predicate(delta, n) {
                    let e = num_integer::lcm(two.e, n);
                    out.insert(GroupShape { s: two.s, e });
                }
            }
            out
        }
    }
}

/// Whether some `O`-CM curve over `K(j)` has a rational cyclic `N`-isogeny.
pub fn cyclic_isogeny_exists(delta: Discriminant, n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let factors = prime_power_decomposition(n);
    let exponent = |p: u64| {
        factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    };
    match delta.value() {
        -4 => exponent(2) <= 2 && factors.iter().all(|&(p, _)| p == 2 || p % 4 == 1),
        -3 => {
            matches!(
                (exponent(2), exponent(3)),
                (0, 0) | (0, 1) | (0, 2) | (1, 0) | (1, 1)
            ) && factors.iter().all(|&(p, _)| p == 2 || p == 3 || p % 3 == 1)
        }
        _ => h_predicate(delta, n),
    }
}

/// `T̃(O, N) > φ(N)·w_K/2`, which rules out a rational cyclic `N`-isogeny.
pub fn t_tilde_argument(delta: Discriminant, n: u64) -> Result<bool> {
    if !is_exceptional(delta) {
        return Err(Error::NotExceptional(delta.value()));
    }
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    let order = delta.order();
    let lhs = t_tilde_product(&order, n)?;
    Ok(lhs > euler_phi(n) * order.unit_count() / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc(d: i64) -> Discriminant {
        Discriminant::new(d).unwrap()
    }

    fn g(s: u64, e: u64) -> GroupShape {
        GroupShape::new(s, e).unwrap()
    }

    #[test]
    fn shape_validation_and_display() {
        assert_eq!(
            GroupShape::new(2, 3),
            Err(Error::BadGroupShape { s: 2, e: 3 })
        );
        assert_eq!(
            GroupShape::new(0, 3),
            Err(Error::BadGroupShape { s: 0, e: 3 })
        );
        assert_eq!(g(2, 4).to_string(), "2x4");
        assert_eq!(GroupShape::TRIVIAL.to_string(), "1x1");
        assert_eq!(g(2, 6).order(), 12);
    }

    #[test]
    fn tuple_conversions() {
        assert_eq!(<(u64, u64)>::from(g(2, 4)), (2, 4));
        assert!(GroupShape::try_from((3, 4)).is_err());
    }

    #[test]
    fn two_torsion_examples() {
        assert_eq!(two_torsion_over_kj(disc(-7)), Ok(g(2, 2)));
        assert_eq!(two_torsion_over_kj(disc(-11)), Ok(g(1, 1)));
        assert_eq!(two_torsion_over_kj(disc(-8)), Ok(g(1, 2)));
        assert_eq!(
            two_torsion_over_kj(disc(-3)),
            Err(Error::ExceptionalDiscriminant(-3))
        );
    }

    #[test]
    fn torsion_list_examples() {
        assert_eq!(
            torsion_groups_over_kj(disc(-4)),
            BTreeSet::from([g(1, 2), g(2, 2), g(2, 4), g(1, 10)])
        );
        assert_eq!(
            torsion_groups_over_kj(disc(-3)),
            BTreeSet::from([g(1, 1), g(1, 3), g(1, 7), g(2, 2), g(2, 6), g(3, 3)])
        );
        assert_eq!(
            torsion_groups_over_kj(disc(-48)),
            BTreeSet::from([g(1, 2), g(1, 4), g(1, 6)])
        );
        assert_eq!(torsion_groups_over_kj(disc(-19)), BTreeSet::from([g(1, 1)]));
    }

    #[test]
    fn isogeny_examples() {
        assert!(!cyclic_isogeny_exists(disc(-4), 8));
        assert!(cyclic_isogeny_exists(disc(-3), 9));
        assert!(!cyclic_isogeny_exists(disc(-3), 18));
        assert!(cyclic_isogeny_exists(disc(-4), 20));
        assert!(cyclic_isogeny_exists(disc(-7), 2));
        assert!(cyclic_isogeny_exists(disc(-7), 1));
    }

    #[test]
    fn t_tilde_argument_examples() {
        assert_eq!(t_tilde_argument(disc(-4), 8), Ok(true));
        assert_eq!(t_tilde_argument(disc(-3), 27), Ok(true));
        assert_eq!(t_tilde_argument(disc(-3), 9), Ok(false));
        assert_eq!(
            t_tilde_argument(disc(-7), 9),
            Err(Error::NotExceptional(-7))
        );
    }
}
