//! Localization `S^-1 R` for a multiplicative set `S` generated by primes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::GroupKind;
use crate::ring::RingElement;
use crate::Sign;

/// The primes generating `S`. Sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SConfig {
    primes: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl SConfig {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        if primes.is_empty() {
            return Err(Error::Config("at least one prime is required".into()));
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(SConfig { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// Factors `n` over the configured primes.
    pub fn value(&self, n: u64) -> Result<SValue> {
        if n == 0 {
            return Err(Error::NotInS(n.to_string()));
        }
        let mut rest = n;
        let mut exponents = BTreeMap::new();
        for &p in &self.primes {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                exponents.insert(p, e);
            }
        }
        if rest != 1 {
            return Err(Error::NotInS(n.to_string()));
        }
        Ok(SValue { exponents })
    }
}

/// An element of `S`, kept as its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SValue {
    exponents: BTreeMap<u64, u32>,
}

impl SValue {
    pub fn one() -> Self {
        SValue::default()
    }

    pub fn prime_power(p: u64, e: u32) -> Self {
        let mut exponents = BTreeMap::new();
        if e > 0 {
            exponents.insert(p, e);
        }
        SValue { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &BTreeMap<u64, u32> {
        &self.exponents
    }

    pub fn value(&self) -> BigInt {
        self.exponents
            .iter()
            .fold(BigInt::one(), |acc, (&p, &e)| acc * BigInt::from(p).pow(e))
    }

    pub fn mul(&self, other: &SValue) -> SValue {
        let mut exponents = self.exponents.clone();
        for (&p, &e) in &other.exponents {
            *exponents.entry(p).or_insert(0) += e;
        }
        SValue { exponents }
    }

    pub fn divides(&self, other: &SValue) -> bool {
        self.exponents
            .iter()
            .all(|(p, e)| other.exponents.get(p).is_some_and(|f| f >= e))
    }

    /// `other / self` when `self` divides `other`.
    pub fn cofactor_in(&self, other: &SValue) -> Option<SValue> {
        if !self.divides(other) {
            return None;
        }
        let exponents = other
            .exponents
            .iter()
            .filter_map(|(&p, &e)| {
                let d = e - self.exponents.get(&p).copied().unwrap_or(0);
                (d > 0).then_some((p, d))
            })
            .collect();
        Some(SValue { exponents })
    }

    pub fn lcm(&self, other: &SValue) -> SValue {
        let mut exponents = self.exponents.clone();
        for (&p, &e) in &other.exponents {
            let slot = exponents.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        SValue { exponents }
    }

    pub fn primes_within(&self, config: &SConfig) -> bool {
        self.exponents.keys().all(|&p| config.contains(p))
    }
}

impl fmt::Display for SValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `numerator / denominator`, always reduced: no denominator prime divides
/// every numerator coefficient, and zero has denominator 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SFraction {
    numerator: RingElement,
    denominator: SValue,
}

impl SFraction {
    pub fn new(numerator: RingElement, denominator: SValue) -> Self {
        let mut f = SFraction { numerator, denominator };
        f.reduce();
        f
    }

    pub fn from_ring(r: RingElement) -> Self {
        SFraction { numerator: r, denominator: SValue::one() }
    }

    pub fn zero(group: &GroupKind) -> Self {
        Self::from_ring(RingElement::zero(group))
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominator = SValue::one();
            return;
        }
        let mut exponents = std::mem::take(&mut self.denominator.exponents);
        for (&p, e) in exponents.iter_mut() {
            let p_big = BigInt::from(p);
            while *e > 0
                && self
                    .numerator
                    .terms()
                    .iter()
                    .all(|(_, c)| c.is_multiple_of(&p_big))
            {
                self.numerator = exact_div(&self.numerator, &p_big);
                *e -= 1;
            }
        }
        exponents.retain(|_, e| *e > 0);
        self.denominator.exponents = exponents;
    }

    pub fn numerator(&self) -> &RingElement {
        &self.numerator
    }

    pub fn denominator(&self) -> &SValue {
        &self.denominator
    }

    pub fn group(&self) -> &GroupKind {
        self.numerator.group()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Denominators are positive, so the sign is the numerator's.
    pub fn sign(&self) -> Sign {
        self.numerator.sign()
    }

    pub fn add(&self, other: &SFraction) -> Result<SFraction> {
        let common = self.denominator.lcm(&other.denominator);
        let lhs = self.numerator.scale(&self.denominator.cofactor_in(&common).expect("lcm").value());
        let rhs = other.numerator.scale(&other.denominator.cofactor_in(&common).expect("lcm").value());
        Ok(SFraction::new(lhs.add(&rhs)?, common))
    }

    pub fn neg(&self) -> SFraction {
        SFraction { numerator: self.numerator.neg(), denominator: self.denominator.clone() }
    }

    /// Right action of `R`: `(n / s) r = (n r) / s`.
    pub fn act(&self, r: &RingElement) -> Result<SFraction> {
        Ok(SFraction::new(self.numerator.mul(r)?, self.denominator.clone()))
    }

    /// Multiplication by an integer.
    pub fn scale(&self, n: &BigInt) -> SFraction {
        SFraction::new(self.numerator.scale(n), self.denominator.clone())
    }
}

fn exact_div(r: &RingElement, p: &BigInt) -> RingElement {
    let terms = r.terms().iter().map(|(g, c)| (g.clone(), c / p));
    RingElement::from_terms(r.group(), terms).expect("terms share the group")
}

impl fmt::Display for SFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "({})", self.numerator)
        } else {
            write!(f, "({})/{}", self.numerator, self.denominator)
        }
    }
}
