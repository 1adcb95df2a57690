//! Hard limits on `|Δ|` and `N`, optionally lowered through the environment.

use cmcartan_core::{Discriminant, MAX_DISCRIMINANT, MAX_ENUMERATION_LEVEL, MAX_LEVEL};

use crate::error::Failure;

pub const MAX_DISC_VAR: &str = "CMCARTAN_MAX_DISC";
pub const MAX_LEVEL_VAR: &str = "CMCARTAN_MAX_LEVEL";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_disc: u64,
    pub max_level: u64,
    /// Largest level for anything that enumerates `O/NO`.
    pub max_enumeration_level: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_disc: MAX_DISCRIMINANT,
            max_level: MAX_LEVEL,
            max_enumeration_level: MAX_ENUMERATION_LEVEL,
        }
    }
}

impl Limits {
    /// Reads the overrides; values above the compiled-in limits are clamped.
    pub fn from_env() -> Result<Self, Failure> {
        let read = |name: &str| -> Result<Option<u64>, Failure> {
            match std::env::var(name) {
                Ok(raw) => raw.trim().parse().map(Some).map_err(|_| {
                    Failure::BadInput(format!(
                        "{name} must be a non-negative integer, got {raw:?}"
                    ))
                }),
                Err(std::env::VarError::NotPresent) => Ok(None),
                Err(e) => Err(Failure::BadInput(format!("{name}: {e}"))),
            }
        };
        Ok(Self::default().lowered(read(MAX_DISC_VAR)?, read(MAX_LEVEL_VAR)?))
    }

    pub fn lowered(self, max_disc: Option<u64>, max_level: Option<u64>) -> Self {
        let level = max_level.unwrap_or(u64::MAX);
        Self {
            max_disc: self.max_disc.min(max_disc.unwrap_or(u64::MAX)),
            max_level: self.max_level.min(level),
            max_enumeration_level: self.max_enumeration_level.min(level),
        }
    }

    pub fn discriminant(&self, value: i64) -> Result<Discriminant, Failure> {
        let d = Discriminant::new(value)?;
        if d.magnitude() > self.max_disc {
            return Err(self.disc_exceeded(d.magnitude()));
        }
        Ok(d)
    }

    pub fn level(&self, n: u64) -> Result<u64, Failure> {
        self.check_level(n, self.max_level)
    }

    pub fn enumeration_level(&self, n: u64) -> Result<u64, Failure> {
        self.check_level(n, self.max_enumeration_level)
    }

    fn check_level(&self, n: u64, bound: u64) -> Result<u64, Failure> {
        if n == 0 {
            return Err(Failure::BadInput("level must be at least 1".into()));
        }
        if n > bound {
            return Err(Failure::Bounds(format!("level {n} exceeds {bound}")));
        }
        Ok(n)
    }

    /// Checks both ends of a `|Δ|` range.
    pub fn disc_range(&self, range: &DiscRange) -> Result<(), Failure> {
        if range.hi > self.max_disc {
            return Err(self.disc_exceeded(range.hi));
        }
        Ok(())
    }

    pub fn level_range(&self, lo: u64, hi: u64, bound: u64) -> Result<(), Failure> {
        if lo == 0 {
            return Err(Failure::BadInput("level must be at least 1".into()));
        }
        if lo <= hi && hi > bound {
            return Err(Failure::Bounds(format!("level {hi} exceeds {bound}")));
        }
        Ok(())
    }

    fn disc_exceeded(&self, magnitude: u64) -> Failure {
        Failure::Bounds(format!(
            "|discriminant| {magnitude} exceeds {}",
            self.max_disc
        ))
    }
}

/// A range of `|Δ|`; the two ends may be given in either order and either sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscRange {
    pub lo: u64,
    pub hi: u64,
}

impl DiscRange {
    pub fn new(a: i64, b: i64) -> Self {
        let (a, b) = (a.unsigned_abs(), b.unsigned_abs());
        Self {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    /// Valid discriminants in the range, by increasing `|Δ|`.
    pub fn discriminants(&self) -> Vec<Discriminant> {
        (self.lo.max(3)..=self.hi)
            .filter_map(|m| Discriminant::new(-(m as i64)).ok())
            .collect()
    }
}
