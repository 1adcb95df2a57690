mod common;

use cmcartan_core::arith::{euler_phi, prime_power_decomposition};
use cmcartan_core::{
    cartan_order_formula, classify::GroupShape, factor_discriminant, kronecker, Discriminant,
    QuotientRing,
};
use proptest::prelude::*;

use common::{is_prime, legendre};

// -4k and -(4k + 3) exhaust the negative discriminants
fn discriminant() -> impl Strategy<Value = Discriminant> {
    prop_oneof![
        (1i64..=100).prop_map(|k| -4 * k),
        (0i64..=99).prop_map(|k| -4 * k - 3)
    ]
    .prop_map(|d| Discriminant::new(d).unwrap())
}

fn odd_prime() -> impl Strategy<Value = u64> {
    proptest::sample::select((3u64..=97).filter(|&p| is_prime(p)).collect::<Vec<_>>())
}

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (1u64..=200, 1u64..=200).prop_filter("not coprime", |&(m, n)| num_integer::gcd(m, n) == 1)
}

fn ring_with_elements(count: usize) -> impl Strategy<Value = (QuotientRing, Vec<(i64, i64)>)> {
    (discriminant(), 1u64..=60).prop_flat_map(move |(d, n)| {
        let ring = QuotientRing::new(d, n).unwrap();
        let coord = 0..n as i64;
        (
            Just(ring),
            proptest::collection::vec((coord.clone(), coord), count),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn ring_axioms((ring, xs) in ring_with_elements(3)) {
        let [x, y, z] = [xs[0], xs[1], xs[2]].map(|(a, b)| ring.element(a, b));
        let xy = ring.mul(&x, &y)?;
        prop_assert_eq!(xy, ring.mul(&y, &x)?);
        prop_assert_eq!(ring.mul(&xy, &z)?, ring.mul(&x, &ring.mul(&y, &z)?)?);
        prop_assert_eq!(
            ring.mul(&x, &ring.add(&y, &z)?)?,
            ring.add(&xy, &ring.mul(&x, &z)?)?
        );
        prop_assert_eq!(ring.mul(&x, &ring.one())?, x);
        prop_assert_eq!(ring.add(&x, &ring.neg(&x)?)?, ring.zero());
    }

    #[test]
    fn norm_is_multiplicative((ring, xs) in ring_with_elements(2)) {
        let n = ring.modulus();
        let [x, y] = [xs[0], xs[1]].map(|(a, b)| ring.element(a, b));
        let lhs = ring.norm(&ring.mul(&x, &y)?)?;
        prop_assert_eq!(lhs, ring.norm(&x)? * ring.norm(&y)? % n);
    }

    #[test]
    fn norm_is_product_with_conjugate((ring, xs) in ring_with_elements(1)) {
        let x = ring.element(xs[0].0, xs[0].1);
        let norm = ring.norm(&x)?;
        prop_assert_eq!(ring.mul(&x, &ring.conj(&x)?)?, ring.element(norm as i64, 0));
        prop_assert_eq!(ring.conj(&ring.conj(&x)?)?, x);
    }

    #[test]
    fn inverse_inverts((ring, xs) in ring_with_elements(1)) {
        let x = ring.element(xs[0].0, xs[0].1);
        match ring.inverse(&x)? {
            Some(inv) => {
                prop_assert!(ring.is_unit(&x)?);
                prop_assert_eq!(ring.mul(&x, &inv)?, ring.one());
            }
            None => prop_assert!(!ring.is_unit(&x)?),
        }
    }

    #[test]
    fn additive_order_annihilates((ring, xs) in ring_with_elements(1)) {
        let x = ring.element(xs[0].0, xs[0].1);
        let k = ring.additive_order(&x)?;
        prop_assert_eq!(ring.scalar_mul(k as i64, &x)?, ring.zero());
        prop_assert_eq!(ring.modulus() % k, 0);
        for proper in 1..k {
            prop_assert_ne!(ring.scalar_mul(proper as i64, &x)?, ring.zero());
        }
    }

    #[test]
    fn kronecker_matches_euler_criterion(d in discriminant(), p in odd_prime()) {
        prop_assert_eq!(kronecker(d, p)?, legendre(d.value(), p));
    }

    #[test]
    fn kronecker_is_multiplicative_in_the_top(
        d1 in discriminant(),
        d2 in discriminant(),
        p in odd_prime(),
    ) {
        let product = d1.value() * d2.value();
        prop_assert_eq!(
            legendre(product, p),
            kronecker(d1, p)? * kronecker(d2, p)?
        );
    }

    #[test]
    fn discriminant_factorization_round_trips(d in discriminant()) {
        let order = factor_discriminant(d);
        let f = order.conductor as i64;
        prop_assert_eq!(f * f * order.delta_k.value(), d.value());
        prop_assert!(order.delta_k.is_fundamental());
    }

    #[test]
    fn cartan_order_is_multiplicative(d in discriminant(), (m, n) in coprime_pair()) {
        prop_assert_eq!(
            cartan_order_formula(d, m * n)?,
            cartan_order_formula(d, m)? * cartan_order_formula(d, n)?
        );
    }

    #[test]
    fn cartan_order_lies_between_scalar_units_and_the_ring(d in discriminant(), n in 1u64..=10_000) {
        // (Z/N)^× ⊂ C_N(O) ⊂ O/NO
        let c = cartan_order_formula(d, n)?;
        prop_assert_eq!(c % euler_phi(n), 0);
        prop_assert!(c <= n * n);
    }

    #[test]
    fn factorization_reconstructs(n in 1u64..=100_000) {
        let factors = prime_power_decomposition(n);
        prop_assert_eq!(factors.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        prop_assert!(factors.iter().all(|&(p, _)| is_prime(p)));
        prop_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn group_shapes_need_divisibility(s in 1u64..=12, e in 1u64..=24) {
        let shape = GroupShape::new(s, e);
        prop_assert_eq!(shape.is_ok(), e % s == 0);
        if let Ok(g) = shape {
            let back: GroupShape = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
            prop_assert_eq!(back, g);
            prop_assert_eq!(g.to_string(), format!("{s}x{e}"));
        }
    }
}
