//! Brute-force orbit decomposition of the order-N points of `O/NO` under
//! `C_N(O)` and under the reduced Cartan subgroup.
//!
//! This is the oracle every closed-form orbit statement in [`crate::degrees`]
//! is checked against, so it uses nothing but ring arithmetic: the orbit of a
//! point `P` is `{u·P : u ∈ C_N(O)}` and the reduced orbit is the set of
//! `O^×`-classes it contains.

use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, prime_power_decomposition};
use crate::cartan::{check_enumeration_level, enumerate_units};
use crate::error::{Error, Result};
use crate::orders::Discriminant;
use crate::quotient_ring::{Context, QuotientRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically least `(a, b)` in the orbit.
    pub representative: (u64, u64),
    pub size: u64,
    /// Number of `O^×`-classes in the orbit.
    pub reduced_size: u64,
}

#[derive(Debug, Clone)]
pub struct OrbitDecomposition {
    ring: QuotientRing,
    cartan_order: u64,
    orbits: Vec<Orbit>,
    // orbit index of each point, u32::MAX for points of order < N
    membership: Vec<u32>,
}

const NOT_ORDER_N: u32 = u32::MAX;

impl OrbitDecomposition {
    pub fn new(delta: Discriminant, n: u64) -> Result<Self> {
        check_enumeration_level(n)?;
        let ring = QuotientRing::new(delta, n)?;
        let cartan = enumerate_units(delta, n)?;
        let units: Vec<_> = cartan.elements.iter().map(|u| u.coords()).collect();
        let roots: Vec<_> = cartan.unit_image.iter().map(|u| u.coords()).collect();

        let idx = |(a, b): (u64, u64)| (a * n + b) as usize;
        let mut membership = vec![NOT_ORDER_N; (n * n) as usize];
        let mut orbits = Vec::new();
        let mut classes = HashSet::new();

        for a in 0..n {
            for b in 0..n {
                let p = (a, b);
                if a.gcd(&b).gcd(&n) != 1 || membership[idx(p)] != NOT_ORDER_N {
                    continue;
                }
                let id = orbits.len() as u32;
                let mut size = 0;
                classes.clear();
                for &u in &units {
                    let q = ring.mul_coords(u, p);
                    if membership[idx(q)] == NOT_ORDER_N {
                        membership[idx(q)] = id;
                        size += 1;
                        let class = roots
                            .iter()
                            .map(|&z| ring.mul_coords(z, q))
                            .min()
                            .expect("unit image contains 1");
                        classes.insert(class);
                    }
                }
                orbits.push(Orbit {
                    representative: p,
                    size,
                    reduced_size: classes.len() as u64,
                });
            }
        }

        Ok(Self {
            ring,
            cartan_order: cartan.order(),
            orbits,
            membership,
        })
    }

    pub fn context(&self) -> Context {
        self.ring.context()
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// `#C_N(O)` as counted by the scan.
    pub fn cartan_order(&self) -> u64 {
        self.cartan_order
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    /// Size of the orbit containing `p`, or `None` if `p` does not have order `N`.
    pub fn orbit_size_of(&self, (a, b): (u64, u64)) -> Option<u64> {
        let n = self.ring.modulus();
        match self.membership[(a % n * n + b % n) as usize] {
            NOT_ORDER_N => None,
            id => Some(self.orbits[id as usize].size),
        }
    }

    pub fn full_sizes(&self) -> Vec<u64> {
        let mut v: Vec<_> = self.orbits.iter().map(|o| o.size).collect();
        v.sort_unstable();
        v
    }

    pub fn reduced_sizes(&self) -> Vec<u64> {
        let mut v: Vec<_> = self.orbits.iter().map(|o| o.reduced_size).collect();
        v.sort_unstable();
        v
    }

    pub fn point_count(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn min_full(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).min().unwrap_or(1)
    }

    pub fn min_reduced(&self) -> u64 {
        self.orbits
            .iter()
            .map(|o| o.reduced_size)
            .min()
            .unwrap_or(1)
    }

    /// Whether some order-N point generates a submodule `≅ Z/N` (annihilator shape `(N, 1)`).
    pub fn has_cyclic_submodule(&self) -> Result<bool> {
        let n = self.ring.modulus();
        for orbit in &self.orbits {
            let p = self.ring.element_at(orbit.representative);
            if self.ring.annihilator(&p)?.shape == (n, 1) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn report(&self) -> OrbitReport {
        let n = self.ring.modulus();
        let t_tilde = self.min_full();
        OrbitReport {
            delta: self.ring.order().delta.value(),
            level: n,
            full_orbit_sizes: self.full_sizes(),
            reduced_orbit_sizes: self.reduced_sizes(),
            t_tilde_observed: t_tilde,
            t_observed: self.min_reduced(),
            h_observed: t_tilde == euler_phi(n),
            simply_transitive_observed: self.orbits.len() == 1
                && self.orbits[0].size == self.cartan_order,
        }
    }
}

/// Observed orbit data for one `(Δ, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub delta: i64,
    pub level: u64,
    pub full_orbit_sizes: Vec<u64>,
    pub reduced_orbit_sizes: Vec<u64>,
    pub t_tilde_observed: u64,
    pub t_observed: u64,
    pub h_observed: bool,
    pub simply_transitive_observed: bool,
}

pub fn orbit_report(delta: Discriminant, n: u64) -> Result<OrbitReport> {
    Ok(OrbitDecomposition::new(delta, n)?.report())
}

/// Sorted multiset of `C_N(O)`-orbit sizes on order-N points.
pub fn full_orbits(delta: Discriminant, n: u64) -> Result<Vec<u64>> {
    Ok(OrbitDecomposition::new(delta, n)?.full_sizes())
}

/// Sorted multiset of reduced-Cartan orbit sizes on `O^×`-classes of order-N points.
pub fn reduced_orbits(delta: Discriminant, n: u64) -> Result<Vec<u64>> {
    Ok(OrbitDecomposition::new(delta, n)?.reduced_sizes())
}

pub fn min_orbit(delta: Discriminant, n: u64, reduced: bool) -> Result<u64> {
    let dec = OrbitDecomposition::new(delta, n)?;
    Ok(if reduced {
        dec.min_reduced()
    } else {
        dec.min_full()
    })
}

/// Number of order-N points of `O/NO`: `∏_{ℓ^a ∥ N} ℓ^{2a−2}(ℓ² − 1)`.
pub fn count_order_n_elements(n: u64) -> u64 {
    prime_power_decomposition(n)
        .into_iter()
        .map(|(l, a)| l.pow(2 * a - 2) * (l * l - 1))
        .product()
}

/// Whether the orbit multiset at `m·n` is the pairwise-product multiset of those at `m` and `n`.
pub fn crt_orbit_product_check(delta: Discriminant, m: u64, n: u64) -> Result<bool> {
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let product = m.checked_mul(n).ok_or(Error::Overflow("level product"))?;
    let left = full_orbits(delta, m)?;
    let right = full_orbits(delta, n)?;
    let mut expected: Vec<u64> = left
        .iter()
        .flat_map(|x| right.iter().map(move |y| x * y))
        .collect();
    expected.sort_unstable();
    Ok(full_orbits(delta, product)? == expected)
}
