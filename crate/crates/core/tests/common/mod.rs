//! Independent reference arithmetic for the integration tests.
//!
//! `NaiveRing` models `O/NO` on the basis `{1, θ}` with `θ = (Δ + √Δ)/2`,
//! which differs from the library's `ω = f·τ_K` by an integer. Every quantity
//! the tests compare (unit counts, orbit multisets, annihilator indices) is
//! basis-independent, so agreement is a genuine cross-check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cmcartan_core::Discriminant;

/// Every valid discriminant with `|Δ| ≤ 400`, in order of increasing `|Δ|`.
pub fn sweep_set() -> Vec<Discriminant> {
    (3..=400i64)
        .filter_map(|m| Discriminant::new(-m).ok())
        .collect()
}

pub fn disc(d: i64) -> Discriminant {
    Discriminant::new(d).unwrap()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn prime_powers_up_to(bound: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for l in (2..=bound).filter(|&l| is_prime(l)) {
        let mut q = l;
        let mut a = 1;
        while q <= bound {
            out.push((l, a));
            q *= l;
            a += 1;
        }
    }
    out.sort_by_key(|&(l, a)| l.pow(a));
    out
}

/// Legendre symbol by Euler's criterion, `p` an odd prime.
pub fn legendre(d: i64, p: u64) -> i8 {
    let a = d.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

/// Splitting type of `p` in the order of discriminant `d`, read off from the
/// number of roots of `x² − Δx + (Δ² − Δ)/4` mod `p`.
pub fn splitting_sign(d: i64, p: u64) -> i8 {
    let pi = p as i64;
    let c = ((d * d - d) / 4).rem_euclid(pi);
    let roots = (0..pi)
        .filter(|&x| (x * x - d * x + c).rem_euclid(pi) == 0)
        .count();
    match roots {
        2 => 1,
        1 => 0,
        _ => -1,
    }
}

#[derive(Debug, Clone)]
pub struct NaiveRing {
    pub n: u64,
    trace: i64,
    constant: i64,
    // unit tables of O/pO for the primes p | N, indexed by a·p + b
    residue_units: Vec<(u64, Vec<bool>)>,
}

impl NaiveRing {
    pub fn new(d: i64, n: u64) -> Self {
        let mut ring = Self::bare(d, n);
        ring.residue_units = (2..=n)
            .filter(|&p| is_prime(p) && n.is_multiple_of(p))
            .map(|p| {
                let small = Self::bare(d, p);
                let table = small
                    .points()
                    .map(|x| small.points().any(|y| small.mul(x, y) == (1, 0)))
                    .collect();
                (p, table)
            })
            .collect();
        ring
    }

    fn bare(d: i64, n: u64) -> Self {
        let m = n as i64;
        Self {
            n,
            trace: d.rem_euclid(m),
            constant: (-(d * d - d) / 4).rem_euclid(m),
            residue_units: Vec::new(),
        }
    }

    pub fn mul(&self, (a1, b1): (u64, u64), (a2, b2): (u64, u64)) -> (u64, u64) {
        let m = self.n as i64;
        let (a1, b1, a2, b2) = (a1 as i64, b1 as i64, a2 as i64, b2 as i64);
        let bb = b1 * b2 % m;
        (
            ((a1 * a2 + self.constant * bb) % m) as u64,
            ((a1 * b2 + a2 * b1 + self.trace * bb) % m) as u64,
        )
    }

    pub fn points(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).map(move |b| (a, b)))
    }

    /// `x` is a unit of `O/NO` iff it has an inverse modulo every prime `p | N`,
    /// found here by exhaustive search in `O/pO`.
    pub fn is_unit(&self, (a, b): (u64, u64)) -> bool {
        self.residue_units
            .iter()
            .all(|(p, table)| table[((a % p) * p + b % p) as usize])
    }

    pub fn units(&self) -> Vec<(u64, u64)> {
        self.points().filter(|&x| self.is_unit(x)).collect()
    }

    pub fn has_order_n(&self, (a, b): (u64, u64)) -> bool {
        gcd(gcd(a, b), self.n) == 1
    }

    /// Orbit sizes of the unit group on order-N points, with multiplicity.
    pub fn orbit_multiset(&self) -> BTreeMap<u64, usize> {
        let units = self.units();
        let n = self.n as usize;
        let mut seen = vec![false; n * n];
        let mut out = BTreeMap::new();
        for p in self.points() {
            if !self.has_order_n(p) || seen[p.0 as usize * n + p.1 as usize] {
                continue;
            }
            let mut size = 0;
            for &u in &units {
                let q = self.mul(u, p);
                let slot = &mut seen[q.0 as usize * n + q.1 as usize];
                if !*slot {
                    *slot = true;
                    size += 1;
                }
            }
            *out.entry(size).or_insert(0) += 1;
        }
        out
    }

    /// `#{x : x·p = 0}`.
    pub fn annihilator_size(&self, p: (u64, u64)) -> u64 {
        self.points().filter(|&x| self.mul(x, p) == (0, 0)).count() as u64
    }
}

pub fn multiset(sizes: &[u64]) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for &s in sizes {
        *out.entry(s).or_insert(0) += 1;
    }
    out
}

/// Library coordinates on `{1, ω}` rewritten on `{1, θ}`: `ω = θ + (fΔ_K − Δ)/2`.
pub fn to_naive(order: &cmcartan_core::OrderSpec, n: u64, (a, b): (u64, u64)) -> (u64, u64) {
    let shift = (order.omega_trace() - order.delta.value()) / 2;
    let a = (a as i128 + b as i128 * shift as i128).rem_euclid(n as i128) as u64;
    (a, b)
}
