//! Exact arithmetic for ordered group rings over right-ordered groups.
//!
//! The crate provides
//!
//! * concrete right-orderable groups with declared order class ([`group`]),
//! * the integral group ring `ZH` with its leading-term order and the
//!   trivial-unit decision ([`ring`]),
//! * ordered free modules, `S`-fractions and finite towers of ordered pure
//!   extensions ([`module`], [`frac`], [`tower`]),
//! * seeded property probes for the order-automorphism claims
//!   ([`realization`]) and a suite runner that ties everything together
//!   ([`suite`]).
//!
//! All values are immutable; every operation is a pure function.

pub mod error;
pub mod frac;
pub mod group;
pub mod literal;
pub mod module;
pub mod oracle;
pub mod realization;
pub mod ring;
pub mod sample;
pub mod suite;
pub mod tower;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

pub use error::{Error, Result};
pub use frac::{SConfig, SFraction, SValue};
pub use group::{GroupElement, GroupKind, OrderClass};
pub use module::ModuleVector;
pub use realization::ProbeReport;
pub use ring::{LeadingTerm, NonUnitReason, RingElement, UnitVerdict};
pub use tower::{StageFlavor, Tower, TowerElement};

/// Position of a value relative to zero (or the identity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn negate(self) -> Self {
        Sign::from_ordering(self.as_ordering().reverse())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
