//! Exact arithmetic for the mod-N Cartan subgroups of imaginary quadratic
//! orders: the finite rings `O/NO`, their unit groups and orbit
//! decompositions, the closed-form torsion degree `T(O, N)`, and the
//! torsion and isogeny classifications over `K(j)` that follow from them.
//!
//! Every closed form in [`degrees`] and [`cartan`] has a brute-force
//! counterpart in [`orbits`] or [`quotient_ring`] that uses only ring
//! arithmetic.

pub mod arith;
pub mod cartan;
pub mod classify;
pub mod degrees;
pub mod error;
pub mod orbits;
pub mod orders;
pub mod quotient_ring;

pub use cartan::{
    cartan_order_formula, enumerate_units, reduced_cartan_order, unit_image, CartanGroup,
    MAX_ENUMERATION_LEVEL,
};
pub use classify::{
    cyclic_isogeny_exists, t_tilde_argument, torsion_groups_over_kj, two_torsion_over_kj,
    GroupShape,
};
pub use degrees::{
    degree_row, h_predicate, minimal_torsion_degree, ray_class_degree, ring_class_relative_degree,
    simply_transitive, spy_divisor_check, t_tilde, torsion_degree, tower_degree, weber_degree,
    DegreeTableRow, LocalFactor,
};
pub use error::{Error, Result};
pub use orbits::{
    count_order_n_elements, full_orbits, min_orbit, orbit_report, reduced_orbits,
    OrbitDecomposition, OrbitReport,
};
pub use orders::{
    class_number, factor_discriminant, kronecker, unit_group_order, validate_discriminant,
    Discriminant, OrderSpec, MAX_DISCRIMINANT,
};
pub use quotient_ring::{Context, IdealClassifier, QuotientRing, RingElement, MAX_LEVEL};
