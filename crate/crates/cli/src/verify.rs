//! Formula-versus-enumeration sweep behind the `verify` command.

use std::fmt;
use std::io::Write;

use cmcartan_core::arith::euler_phi;
use cmcartan_core::degrees::{t_tilde_for, t_tilde_product_with, torsion_degree_with};
use cmcartan_core::{
    cartan_order_formula, count_order_n_elements, cyclic_isogeny_exists, h_predicate,
    simply_transitive, t_tilde_argument, unit_group_order, unit_image, weber_degree, Discriminant,
    OrbitDecomposition, OrderSpec,
};
use rayon::prelude::*;

use crate::error::Failure;

/// Source of the local factors `T̃(O, ℓ^a)` that the sweep checks.
pub trait LocalFormula: Sync {
    fn t_tilde(&self, order: &OrderSpec, l: u64, a: u32) -> cmcartan_core::Result<u64>;
}

/// The library's closed form.
pub struct Reference;

impl LocalFormula for Reference {
    fn t_tilde(&self, order: &OrderSpec, l: u64, a: u32) -> cmcartan_core::Result<u64> {
        t_tilde_for(order, l, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    CartanOrder,
    OrbitStabilizers,
    OrbitTotals,
    LeastOrbit,
    TorsionDegree,
    ReducedOrbits,
    SquareDiscriminant,
    SimpleTransitivity,
    WeberDegree,
    SpyDivisibility,
    Isogeny,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::CartanOrder,
        Family::OrbitStabilizers,
        Family::OrbitTotals,
        Family::LeastOrbit,
        Family::TorsionDegree,
        Family::ReducedOrbits,
        Family::SquareDiscriminant,
        Family::SimpleTransitivity,
        Family::WeberDegree,
        Family::SpyDivisibility,
        Family::Isogeny,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::CartanOrder => "cartan_order",
            Family::OrbitStabilizers => "orbit_stabilizers",
            Family::OrbitTotals => "orbit_totals",
            Family::LeastOrbit => "least_orbit",
            Family::TorsionDegree => "torsion_degree",
            Family::ReducedOrbits => "reduced_orbits",
            Family::SquareDiscriminant => "square_discriminant",
            Family::SimpleTransitivity => "simple_transitivity",
            Family::WeberDegree => "weber_degree",
            Family::SpyDivisibility => "spy_divisibility",
            Family::Isogeny => "isogeny",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub family: Family,
    pub delta: i64,
    pub n: u64,
    pub expected: String,
    pub observed: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: delta={} n={} expected={} observed={}",
            self.family.name(),
            self.delta,
            self.n,
            self.expected,
            self.observed
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct FamilyTally {
    pub checked: u64,
    pub failed: u64,
    pub first: Option<Counterexample>,
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub tallies: Vec<(Family, FamilyTally)>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|(_, t)| t.failed == 0)
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.tallies.iter().find_map(|(_, t)| t.first.as_ref())
    }

    pub fn write(&self, out: &mut impl Write) -> std::io::Result<()> {
        for (family, tally) in &self.tallies {
            let status = if tally.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {:<20} checked={} failed={}",
                family.name(),
                tally.checked,
                tally.failed
            )?;
        }
        match self.first_counterexample() {
            None => writeln!(out, "verify: all {} families passed", self.tallies.len()),
            Some(c) => writeln!(out, "verify: first counterexample {c}"),
        }
    }
}

type Outcome = (Family, Option<Counterexample>);

struct Cell<'a, F: LocalFormula> {
    delta: Discriminant,
    order: OrderSpec,
    n: u64,
    formula: &'a F,
    out: Vec<Outcome>,
}

impl<F: LocalFormula> Cell<'_, F> {
    fn record<T: PartialEq + fmt::Debug>(&mut self, family: Family, expected: T, observed: T) {
        let failure = (expected != observed).then(|| Counterexample {
            family,
            delta: self.delta.value(),
            n: self.n,
            expected: format!("{expected:?}"),
            observed: format!("{observed:?}"),
        });
        self.out.push((family, failure));
    }

    fn run(mut self) -> Result<Vec<Outcome>, Failure> {
        let (d, n) = (self.delta, self.n);
        let dec = OrbitDecomposition::new(d, n)?;
        let ring = dec.ring();

        self.record(
            Family::CartanOrder,
            cartan_order_formula(d, n)?,
            dec.cartan_order(),
        );

        let mut stabilizers_ok = true;
        for orbit in dec.orbits() {
            let (a, b) = orbit.representative;
            let p = ring.element(a as i64, b as i64);
            let count = ring.unit_count_mod_ideal(&ring.annihilator(&p)?)?;
            stabilizers_ok &= count == orbit.size;
        }
        self.record(Family::OrbitStabilizers, true, stabilizers_ok);
        self.record(
            Family::OrbitTotals,
            count_order_n_elements(n),
            dec.point_count(),
        );

        let least = t_tilde_product_with(&self.order, n, |o, l, a| self.formula.t_tilde(o, l, a));
        self.record(
            Family::LeastOrbit,
            least.map_err(|e| e.to_string()),
            Ok(dec.min_full()),
        );

        if n >= 3 {
            let t = torsion_degree_with(&self.order, n, |o, l, a| self.formula.t_tilde(o, l, a));
            self.record(
                Family::TorsionDegree,
                t.map_err(|e| e.to_string()),
                Ok(dec.min_reduced()),
            );

            if (d.value(), n) != (-3, 3) {
                let w = unit_group_order(d);
                let ok = dec.orbits().iter().all(|o| o.reduced_size * w == o.size);
                self.record(Family::ReducedOrbits, true, ok);
            }

            let t = torsion_degree_with(&self.order, n, t_tilde_for)?;
            let divides = (unit_group_order(d) * t).is_multiple_of(euler_phi(n));
            self.record(Family::SpyDivisibility, true, divides);
        }

        let h = h_predicate(d, n);
        let observed = (dec.min_full() == euler_phi(n), dec.has_cyclic_submodule()?);
        self.record(Family::SquareDiscriminant, (h, h), observed);

        let single = dec.orbits().len() == 1 && dec.orbits()[0].size == dec.cartan_order();
        self.record(Family::SimpleTransitivity, simply_transitive(d, n)?, single);

        let image = unit_image(d, n)?.len() as u64;
        self.record(
            Family::WeberDegree,
            weber_degree(d, n)?,
            dec.cartan_order() / image,
        );

        let exists = cyclic_isogeny_exists(d, n);
        if matches!(d.value(), -3 | -4) {
            if t_tilde_argument(d, n)? {
                self.record(Family::Isogeny, false, exists);
            }
        } else {
            self.record(Family::Isogeny, h, exists);
        }
        Ok(self.out)
    }
}

/// Checks every family over all valid `Δ` in `discriminants` and `N ∈ levels`.
///
/// Cells are processed in parallel; tallies and the first counterexample of
/// each family follow the input order, so the summary is deterministic.
pub fn run_sweep<F: LocalFormula>(
    discriminants: &[Discriminant],
    levels: std::ops::RangeInclusive<u64>,
    formula: &F,
) -> Result<VerifySummary, Failure> {
    let cells: Vec<(Discriminant, u64)> = discriminants
        .iter()
        .flat_map(|&d| levels.clone().map(move |n| (d, n)))
        .collect();
    let results: Vec<Vec<Outcome>> = cells
        .par_iter()
        .map(|&(delta, n)| {
            Cell {
                delta,
                order: delta.order(),
                n,
                formula,
                out: Vec::new(),
            }
            .run()
        })
        .collect::<Result<_, _>>()?;

    let mut tallies: Vec<(Family, FamilyTally)> = Family::ALL
        .iter()
        .map(|&f| (f, FamilyTally::default()))
        .collect();
    for (family, failure) in results.into_iter().flatten() {
        let tally = &mut tallies[family as usize].1;
        tally.checked += 1;
        if let Some(c) = failure {
            tally.failed += 1;
            tally.first.get_or_insert(c);
        }
    }
    Ok(VerifySummary { tallies })
}
