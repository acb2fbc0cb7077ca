//! Minimal injective resolutions, dominant dimensions, the Nakayama functor,
//! ν-stably projective modules and Ext dimensions.

mod classes;
mod ext;
mod resolution;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use classes::ClassData;
pub use resolution::{InjectiveResolution, ResolutionEnd, TermTest};

/// Default number of resolution terms inspected before giving up.
pub const DEFAULT_CUTOFF: usize = 20;

/// Why a dimension is known to be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// The algebra is self-injective, so every injective is projective.
    SelfInjective,
    /// `Ω^{offset+period} ≅ Ω^{offset}` with every term so far passing.
    CosyzygyCycle { period: usize, offset: usize },
    /// The resolution stops (a cosyzygy vanishes) with every term passing.
    FiniteResolution { length: usize },
}

/// A value in `ℕ ∪ {∞}`, with honest "unknown beyond the cutoff".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtendedNat {
    Finite { value: usize },
    Infinite { certificate: Certificate },
    AtLeast { cutoff: usize },
}

impl ExtendedNat {
    pub fn finite(n: usize) -> Self {
        ExtendedNat::Finite { value: n }
    }

    pub fn infinite(certificate: Certificate) -> Self {
        ExtendedNat::Infinite { certificate }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedNat::Finite { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedNat::Infinite { .. })
    }

    /// Finite or certified infinite.
    pub fn is_certified(&self) -> bool {
        !matches!(self, ExtendedNat::AtLeast { .. })
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            ExtendedNat::Finite { value } => Some(*value),
            _ => None,
        }
    }

    /// `self ≤ other` when decidable.
    pub fn le(&self, other: &ExtendedNat) -> Option<bool> {
        use ExtendedNat::*;
        match (self, other) {
            (Finite { value: a }, Finite { value: b }) => Some(a <= b),
            (_, Infinite { .. }) => Some(true),
            (Infinite { .. }, Finite { .. }) => Some(false),
            (Finite { value: a }, AtLeast { cutoff }) => (a <= cutoff).then_some(true),
            (AtLeast { cutoff }, Finite { value: b }) => (b < cutoff).then_some(false),
            (Infinite { .. }, AtLeast { .. }) | (AtLeast { .. }, AtLeast { .. }) => None,
        }
    }

    /// Equality of the underlying values when decidable (certificates are ignored).
    pub fn same_value(&self, other: &ExtendedNat) -> Option<bool> {
        match (self.le(other), other.le(self)) {
            (Some(true), Some(true)) => Some(true),
            (Some(false), _) | (_, Some(false)) => Some(false),
            _ => None,
        }
    }

    /// `min(self, other)`, which is what `dm(X ⊕ Y)` must equal.
    pub fn min(&self, other: &ExtendedNat) -> ExtendedNat {
        use ExtendedNat::*;
        match (self, other) {
            (Finite { value: a }, Finite { value: b }) => Finite { value: *a.min(b) },
            (Infinite { .. }, x) | (x, Infinite { .. }) => *x,
            (Finite { value: a }, AtLeast { cutoff }) | (AtLeast { cutoff }, Finite { value: a }) => {
                if a < cutoff {
                    Finite { value: *a }
                } else {
                    AtLeast { cutoff: *cutoff }
                }
            }
            (AtLeast { cutoff: a }, AtLeast { cutoff: b }) => AtLeast { cutoff: *a.min(b) },
        }
    }

    /// Total order on certified values; `None` if either side is uncertified.
    pub fn cmp_certified(&self, other: &ExtendedNat) -> Option<Ordering> {
        use ExtendedNat::*;
        match (self, other) {
            (Finite { value: a }, Finite { value: b }) => Some(a.cmp(b)),
            (Finite { .. }, Infinite { .. }) => Some(Ordering::Less),
            (Infinite { .. }, Finite { .. }) => Some(Ordering::Greater),
            (Infinite { .. }, Infinite { .. }) => Some(Ordering::Equal),
            _ => None,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::SelfInjective => write!(f, "self_injective"),
            Certificate::CosyzygyCycle { period, offset } => write!(f, "cosyzygy_cycle(period={period}, offset={offset})"),
            Certificate::FiniteResolution { length } => write!(f, "finite_resolution(length={length})"),
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite { value } => write!(f, "finite({value})"),
            ExtendedNat::Infinite { certificate } => write!(f, "infinite({certificate})"),
            ExtendedNat::AtLeast { cutoff } => write!(f, "at_least({cutoff})"),
        }
    }
}
