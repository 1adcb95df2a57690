//! Arithmetic in `O/NO` on the basis `{1, ω}`, `ω = f·τ_K`.
//!
//! With `t = f·Δ_K` and `c₀ = f²(Δ_K − Δ_K²)/4` we have `ω² = t·ω + c₀`, so
//!
//! ```text
//! (a₁ + b₁ω)(a₂ + b₂ω) = (a₁a₂ + c₀b₁b₂) + (a₁b₂ + a₂b₁ + t·b₁b₂)ω
//! ```
//!
//! Multiplication by `a + bω` therefore has matrix `[[a, c₀b], [b, a + tb]]`
//! in this basis, whose determinant is the norm.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{crt_combine, divisors, mod_inverse, modulo, solve_linear_congruence};
use crate::cartan::cartan_order_formula;
use crate::error::{Error, Result};
use crate::orders::{Discriminant, OrderSpec};

/// Largest level accepted by the closed-form arithmetic.
pub const MAX_LEVEL: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Context {
    pub delta: i64,
    pub modulus: u64,
}

/// A residue `a + b·ω` in `O/NO`, `0 ≤ a, b < N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    a: u64,
    b: u64,
    ctx: Context,
}

impl RingElement {
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn context(&self) -> Context {
        self.ctx
    }
}

#[derive(Debug, Clone)]
pub struct QuotientRing {
    order: OrderSpec,
    n: u64,
    c0: u64,
    t: u64,
    // -c₀ mod N, the constant term of the norm form
    neg_c0: u64,
}

impl QuotientRing {
    pub fn new(delta: Discriminant, n: u64) -> Result<Self> {
        Self::for_order(delta.order(), n)
    }

    pub fn for_order(order: OrderSpec, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::LevelTooSmall { min: 1, got: 0 });
        }
        if n > MAX_LEVEL {
            return Err(Error::BoundExceeded {
                what: "level",
                value: n,
                bound: MAX_LEVEL,
            });
        }
        let c0 = modulo(order.omega_square_constant(), n);
        Ok(Self {
            order,
            n,
            c0,
            t: modulo(order.omega_trace(), n),
            neg_c0: (n - c0) % n,
        })
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn context(&self) -> Context {
        Context {
            delta: self.order.delta.value(),
            modulus: self.n,
        }
    }

    pub fn element(&self, a: i64, b: i64) -> RingElement {
        RingElement {
            a: modulo(a, self.n),
            b: modulo(b, self.n),
            ctx: self.context(),
        }
    }

    pub(crate) fn element_at(&self, (a, b): (u64, u64)) -> RingElement {
        RingElement {
            a,
            b,
            ctx: self.context(),
        }
    }

    pub fn zero(&self) -> RingElement {
        self.element(0, 0)
    }

    pub fn one(&self) -> RingElement {
        self.element(1, 0)
    }

    pub fn omega(&self) -> RingElement {
        self.element(0, 1)
    }

    /// All `N²` elements in lexicographic order of `(a, b)`.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).map(move |b| self.element_at((a, b))))
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if x.ctx != self.context() {
            return Err(Error::ContextMismatch {
                left: self.context(),
                right: x.ctx,
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.element_at(((x.a + y.a) % self.n, (x.b + y.b) % self.n)))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        Ok(self.element_at(((self.n - x.a) % self.n, (self.n - x.b) % self.n)))
    }

    pub fn scalar_mul(&self, c: i64, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        let c = modulo(c, self.n);
        Ok(self.element_at((c * x.a % self.n, c * x.b % self.n)))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.element_at(self.mul_coords(x.coords(), y.coords())))
    }

    /// Unchecked product on reduced coordinates; the inner loop of every enumeration.
    #[inline]
    pub(crate) fn mul_coords(&self, (a1, b1): (u64, u64), (a2, b2): (u64, u64)) -> (u64, u64) {
        let n = self.n;
        let bb = b1 * b2 % n;
        let a = (a1 * a2 + bb * self.c0) % n;
        let b = (a1 * b2 + a2 * b1 + bb * self.t) % n;
        (a, b)
    }

    #[inline]
    pub(crate) fn norm_coords(&self, (a, b): (u64, u64)) -> u64 {
        let n = self.n;
        (a * a % n + (a * b % n) * self.t + (b * b % n) * self.neg_c0) % n
    }

    /// `N(a + bω) = a² + t·ab − c₀·b²` reduced mod `N`.
    pub fn norm(&self, x: &RingElement) -> Result<u64> {
        self.check(x)?;
        Ok(self.norm_coords(x.coords()))
    }

    /// `conj(a + bω) = (a + tb) − bω`.
    pub fn conj(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        let n = self.n;
        Ok(self.element_at(((x.a + self.t * x.b) % n, (n - x.b) % n)))
    }

    pub(crate) fn is_unit_coords(&self, x: (u64, u64)) -> bool {
        self.norm_coords(x).gcd(&self.n) == 1
    }

    pub fn is_unit(&self, x: &RingElement) -> Result<bool> {
        self.check(x)?;
        Ok(self.is_unit_coords(x.coords()))
    }

    /// `x⁻¹ = conj(x)·N(x)⁻¹`, or `None` when `x` is not a unit.
    pub fn inverse(&self, x: &RingElement) -> Result<Option<RingElement>> {
        let norm = self.norm(x)?;
        let Some(inv) = mod_inverse(norm, self.n) else {
            return Ok(None);
        };
        let conj = self.conj(x)?;
        Ok(Some(self.scalar_mul(inv as i64, &conj)?))
    }

    pub fn additive_order(&self, x: &RingElement) -> Result<u64> {
        self.check(x)?;
        Ok(self.n / x.a.gcd(&x.b).gcd(&self.n))
    }

    /// The ideal `{x ∈ O/NO : x·p = 0}`.
    ///
    /// `x = x₁ + x₂ω` kills `p` iff `x₁·p + x₂·(ωp) ≡ 0`, a linear condition on
    /// `(x₁, x₂)` mod `N`; the solution lattice is returned in Hermite form.
    pub fn annihilator(&self, p: &RingElement) -> Result<IdealClassifier> {
        self.check(p)?;
        let n = self.n;
        let col1 = p.coords();
        let col2 = self.mul_coords((0, 1), col1);
        let d1 = n / col1.0.gcd(&col1.1).gcd(&n);
        for d2 in divisors(n) {
            let r1 = (n - d2 * col2.0 % n) % n;
            let r2 = (n - d2 * col2.1 % n) % n;
            let Some(s1) = solve_linear_congruence(col1.0, r1, n) else {
                continue;
            };
            let Some(s2) = solve_linear_congruence(col1.1, r2, n) else {
                continue;
            };
            let Some((x1, m)) = crt_combine(s1, s2) else {
                continue;
            };
            debug_assert_eq!(m, d1);
            return Ok(IdealClassifier::from_hnf(self.context(), d1, x1 % d1, d2));
        }
        unreachable!("x₂ = N always admits x₁ = 0")
    }

    /// Elements of `O/NO` lying in the ideal, in no particular order.
    pub fn ideal_elements<'a>(
        &'a self,
        ideal: &'a IdealClassifier,
    ) -> impl Iterator<Item = (u64, u64)> + 'a {
        let n = self.n;
        let [[d1, _], [a0, d2]] = ideal.hnf;
        (0..n / d2)
            .flat_map(move |j| (0..n / d1).map(move |i| ((i * d1 + j * a0) % n, (j * d2) % n)))
    }

    /// `#(O/I)^×` as `#C_N(O) / #{u ∈ C_N(O) : u ≡ 1 mod I}`.
    pub fn unit_count_mod_ideal(&self, ideal: &IdealClassifier) -> Result<u64> {
        if ideal.context != self.context() {
            return Err(Error::ContextMismatch {
                left: self.context(),
                right: ideal.context,
            });
        }
        let n = self.n;
        let congruent_to_one = self
            .ideal_elements(ideal)
            .filter(|&(a, b)| self.is_unit_coords(((a + 1) % n, b)))
            .count() as u64;
        let total = cartan_order_formula(self.order.delta, n)?;
        crate::arith::exact_div(total, congruent_to_one, "unit count modulo an ideal")
    }
}

/// An ideal `I ⊇ NO` of `O`, as the sublattice of `Z²` (coordinates on `{1, ω}`)
/// with row basis `(d₁, 0), (a₀, d₂)`, `0 ≤ a₀ < d₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealClassifier {
    pub context: Context,
    pub hnf: [[u64; 2]; 2],
    /// `#O/I`.
    pub index: u64,
    /// Invariant factors `(N', M)`, `M | N'`, of the additive group `O/I`.
    pub shape: (u64, u64),
}

impl IdealClassifier {
    fn from_hnf(context: Context, d1: u64, a0: u64, d2: u64) -> Self {
        let g = d1.gcd(&a0).gcd(&d2);
        let index = d1 * d2;
        Self {
            context,
            hnf: [[d1, 0], [a0, d2]],
            index,
            shape: (index / g, g),
        }
    }

    pub fn contains(&self, (x1, x2): (u64, u64)) -> bool {
        let [[d1, _], [a0, d2]] = self.hnf;
        if x2 % d2 != 0 {
            return false;
        }
        let k = (x2 / d2) as i128;
        (x1 as i128 - k * a0 as i128).rem_euclid(d1 as i128) == 0
    }

    /// Closure under multiplication by `ω` on both lattice generators.
    pub fn is_ideal_in(&self, ring: &QuotientRing) -> bool {
        let [[d1, _], [a0, d2]] = self.hnf;
        let n = ring.modulus();
        [(d1 % n, 0), (a0 % n, d2 % n)].into_iter().all(|g| {
            let (x, y) = ring.mul_coords((0, 1), g);
            // lift back to the lattice: residues mod N differ by N·Z², which lies in I
            self.contains((x, y))
        })
    }
}
