//! The free right module `B = R^n` with the lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::GroupKind;
use crate::ring::RingElement;
use crate::Sign;

/// Fixed-length tuple of ring elements over one group. Coordinate 0 is the
/// most significant in comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    coords: Vec<RingElement>,
}

impl ModuleVector {
    pub fn new(coords: Vec<RingElement>) -> Result<Self> {
        let Some(first) = coords.first() else {
            return Err(Error::Invalid("module rank must be at least 1".into()));
        };
        if let Some(bad) = coords.iter().find(|c| c.group() != first.group()) {
            return Err(Error::KindMismatch {
                left: first.group().to_string(),
                right: bad.group().to_string(),
            });
        }
        Ok(ModuleVector { coords })
    }

    pub fn zero(group: &GroupKind, rank: usize) -> Self {
        assert!(rank >= 1, "module rank must be at least 1");
        ModuleVector { coords: vec![RingElement::zero(group); rank] }
    }

    /// Standard basis vector `e_i`.
    pub fn basis(group: &GroupKind, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(group, rank);
        v.coords[i] = RingElement::one(group);
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn group(&self) -> &GroupKind {
        self.coords[0].group()
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RingElement::is_zero)
    }

    fn check_shape(&self, other: &ModuleVector) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::ShapeMismatch { left: self.rank(), right: other.rank() });
        }
        if self.group() != other.group() {
            return Err(Error::KindMismatch {
                left: self.group().to_string(),
                right: other.group().to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_shape(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ModuleVector { coords })
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModuleVector {
        ModuleVector { coords: self.coords.iter().map(RingElement::neg).collect() }
    }

    /// Sign of the first nonzero coordinate.
    pub fn sign(&self) -> Sign {
        self.coords
            .iter()
            .map(RingElement::sign)
            .find(|s| *s != Sign::Zero)
            .unwrap_or(Sign::Zero)
    }

    /// Lexicographic comparison, each coordinate ordered as in `R`.
    pub fn vec_cmp(&self, other: &ModuleVector) -> Result<Ordering> {
        self.check_shape(other)?;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp_ring(b)? {
                Ordering::Equal => continue,
                o => return Ok(o),
            }
        }
        Ok(Ordering::Equal)
    }

    /// Right scalar action `u r = (u_i r)_i`.
    pub fn vec_act(&self, r: &RingElement) -> Result<ModuleVector> {
        let coords = self.coords.iter().map(|c| c.mul(r)).collect::<Result<_>>()?;
        Ok(ModuleVector { coords })
    }

    pub fn scale(&self, n: &BigInt) -> ModuleVector {
        ModuleVector { coords: self.coords.iter().map(|c| c.scale(n)).collect() }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
