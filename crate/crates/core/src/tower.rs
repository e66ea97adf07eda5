//! Finite towers `G_0 = B ⊂ G_1 ⊂ ... ⊂ G_height` of ordered pure extensions.
//!
//! Stage `k + 1` adjoins a formal generator `g_k`: an element of `G_{k+1}` is
//! `x + g_k f` with `x` in `G_k` and `f` in `R` (free stage) or in `S^-1 R`
//! (divisible stage). The generators are independent formal coordinates, so
//! `g_k` has zero annihilator and meets `G_k` trivially.
//!
//! The positive cone of `G_{k+1}` is: `f > 0`, or `f = 0` and `x > 0` in `G_k`.
//! Unwinding the recursion, the sign of an element is the sign of its highest
//! nonzero `g`-coefficient, falling back to the lexicographic sign in `B`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac::{SConfig, SFraction, SValue};
use crate::group::GroupKind;
use crate::module::ModuleVector;
use crate::ring::RingElement;
use crate::Sign;

/// Shape of the quotient `G_{k+1} / G_k`: `R` or `S^-1 R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StageFlavor {
    Free,
    Divisible,
}

impl fmt::Display for StageFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StageFlavor::Free => "free",
            StageFlavor::Divisible => "divisible",
        })
    }
}

impl FromStr for StageFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "free" | "f" => Ok(StageFlavor::Free),
            "divisible" | "d" => Ok(StageFlavor::Divisible),
            other => Err(Error::Config(format!("unknown stage flavor `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    group: GroupKind,
    rank: usize,
    sconfig: SConfig,
    flavors: Vec<StageFlavor>,
}

impl Tower {
    pub fn new(group: GroupKind, rank: usize, sconfig: SConfig, flavors: Vec<StageFlavor>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Config("module rank must be at least 1".into()));
        }
        Ok(Tower { group, rank, sconfig, flavors })
    }

    /// Rank 2, four stages alternating divisible/free, `S` generated by 2 and 3.
    pub fn standard(group: GroupKind) -> Self {
        use StageFlavor::*;
        Tower {
            group,
            rank: 2,
            sconfig: SConfig::new([2, 3]).expect("2 and 3 are prime"),
            flavors: vec![Divisible, Free, Divisible, Free],
        }
    }

    pub fn group(&self) -> &GroupKind {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sconfig(&self) -> &SConfig {
        &self.sconfig
    }

    pub fn flavors(&self) -> &[StageFlavor] {
        &self.flavors
    }

    pub fn height(&self) -> usize {
        self.flavors.len()
    }

    pub fn zero(&self, stage: usize) -> TowerElement {
        TowerElement {
            base: ModuleVector::zero(&self.group, self.rank),
            fracs: vec![SFraction::zero(&self.group); stage],
        }
    }

    /// Basis vector `e_i` of `B`, at stage 0.
    pub fn basis(&self, i: usize) -> TowerElement {
        TowerElement::from_base(ModuleVector::basis(&self.group, self.rank, i))
    }

    /// The adjoined generator `g_k`, living at stage `k + 1`.
    pub fn generator(&self, k: usize) -> TowerElement {
        let mut y = self.zero(k + 1);
        y.fracs[k] = SFraction::from_ring(RingElement::one(&self.group));
        y
    }

    pub fn embed(&self, x: ModuleVector) -> Result<TowerElement> {
        if x.rank() != self.rank {
            return Err(Error::ShapeMismatch { left: self.rank, right: x.rank() });
        }
        if x.group() != &self.group {
            return Err(Error::KindMismatch {
                left: self.group.to_string(),
                right: x.group().to_string(),
            });
        }
        Ok(TowerElement::from_base(x))
    }

    fn check_frac(&self, stage: usize, frac: &SFraction) -> Result<()> {
        if stage >= self.height() {
            return Err(Error::StageOutOfRange { stage: stage + 1, height: self.height() });
        }
        if frac.group() != &self.group {
            return Err(Error::KindMismatch {
                left: self.group.to_string(),
                right: frac.group().to_string(),
            });
        }
        if !frac.denominator().primes_within(&self.sconfig) {
            return Err(Error::NotInS(frac.denominator().to_string()));
        }
        if self.flavors[stage] == StageFlavor::Free && !frac.denominator().is_one() {
            return Err(Error::FlavorViolation {
                stage,
                denominator: frac.denominator().to_string(),
            });
        }
        Ok(())
    }

    /// Adjoins the next generator: returns `base + g_k frac` where `k` is the
    /// stage of `base`.
    pub fn lift(&self, base: &TowerElement, frac: SFraction) -> Result<TowerElement> {
        self.validate(base)?;
        self.check_frac(base.stage(), &frac)?;
        let mut fracs = base.fracs.clone();
        fracs.push(frac);
        Ok(TowerElement { base: base.base.clone(), fracs })
    }

    /// Checks that `y` belongs to this tower.
    pub fn validate(&self, y: &TowerElement) -> Result<()> {
        if y.stage() > self.height() {
            return Err(Error::StageOutOfRange { stage: y.stage(), height: self.height() });
        }
        if y.rank() != self.rank {
            return Err(Error::ShapeMismatch { left: self.rank, right: y.rank() });
        }
        if y.group() != &self.group {
            return Err(Error::KindMismatch {
                left: self.group.to_string(),
                right: y.group().to_string(),
            });
        }
        for (k, f) in y.fracs.iter().enumerate() {
            self.check_frac(k, f)?;
        }
        Ok(())
    }
}

/// An element of `G_stage`: the `B`-component plus one coefficient per
/// adjoined generator `g_0, ..., g_{stage-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerElement {
    base: ModuleVector,
    fracs: Vec<SFraction>,
}

impl TowerElement {
    pub fn from_base(base: ModuleVector) -> Self {
        TowerElement { base, fracs: Vec::new() }
    }

    pub(crate) fn from_parts(base: ModuleVector, fracs: Vec<SFraction>) -> Self {
        TowerElement { base, fracs }
    }

    pub fn stage(&self) -> usize {
        self.fracs.len()
    }

    pub fn group(&self) -> &GroupKind {
        self.base.group()
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn base_vector(&self) -> &ModuleVector {
        &self.base
    }

    /// Coefficients of `g_0, g_1, ...`.
    pub fn fracs(&self) -> &[SFraction] {
        &self.fracs
    }

    /// The component `x` in `G_{stage-1}`, or `None` at stage 0.
    pub fn base(&self) -> Option<TowerElement> {
        let (_, rest) = self.fracs.split_last()?;
        Some(TowerElement { base: self.base.clone(), fracs: rest.to_vec() })
    }

    /// Coefficient of the newest generator, or `None` at stage 0.
    pub fn frac(&self) -> Option<&SFraction> {
        self.fracs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.fracs.iter().all(SFraction::is_zero)
    }

    /// Smallest stage containing this element.
    pub fn minimal_stage(&self) -> usize {
        self.fracs.iter().rposition(|f| !f.is_zero()).map_or(0, |k| k + 1)
    }

    /// The same element viewed in `G_stage`.
    pub fn embed_to(&self, stage: usize) -> Result<TowerElement> {
        if stage < self.minimal_stage() {
            return Err(Error::Invalid(format!(
                "element needs stage {}, cannot embed at stage {stage}",
                self.minimal_stage()
            )));
        }
        let mut fracs = self.fracs.clone();
        fracs.resize(stage, SFraction::zero(self.group()));
        Ok(TowerElement { base: self.base.clone(), fracs })
    }

    pub fn sign(&self) -> Sign {
        self.fracs
            .iter()
            .rev()
            .map(SFraction::sign)
            .find(|s| *s != Sign::Zero)
            .unwrap_or_else(|| self.base.sign())
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn neg(&self) -> TowerElement {
        TowerElement {
            base: self.base.neg(),
            fracs: self.fracs.iter().map(SFraction::neg).collect(),
        }
    }

    /// Componentwise sum; the lower-stage operand is embedded upward first.
    pub fn add(&self, other: &TowerElement) -> Result<TowerElement> {
        let stage = self.stage().max(other.stage());
        let a = self.embed_to(stage)?;
        let b = other.embed_to(stage)?;
        let base = a.base.add(&b.base)?;
        let fracs = a.fracs.iter().zip(&b.fracs).map(|(f, g)| f.add(g)).collect::<Result<_>>()?;
        Ok(TowerElement { base, fracs })
    }

    pub fn sub(&self, other: &TowerElement) -> Result<TowerElement> {
        self.add(&other.neg())
    }

    /// Order comparison through the sign of `self - other`.
    #[allow(clippy::should_implement_trait)] // fallible: towers may differ
    pub fn cmp(&self, other: &TowerElement) -> Result<Ordering> {
        Ok(self.sub(other)?.sign().as_ordering())
    }

    /// Right action of `R`, componentwise: `(x + g f) r = x r + g (f r)`.
    pub fn act(&self, r: &RingElement) -> Result<TowerElement> {
        let base = self.base.vec_act(r)?;
        let fracs = self.fracs.iter().map(|f| f.act(r)).collect::<Result<_>>()?;
        Ok(TowerElement { base, fracs })
    }

    pub fn scale(&self, n: &BigInt) -> TowerElement {
        TowerElement {
            base: self.base.scale(n),
            fracs: self.fracs.iter().map(|f| f.scale(n)).collect(),
        }
    }
}

/// Witnesses from [`well_definedness_probe`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellDefinedness {
    pub stage: usize,
    /// The multipliers actually used, `s` and `s'`.
    pub multipliers: (String, String),
    /// The `g`-coefficients `r` and `r'` of `y s` and `y s'`.
    pub coefficients: (String, String),
    pub failures: Vec<String>,
}

impl WellDefinedness {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

// Chooses a multiplier in S that clears the newest denominator: `s` itself
// when the denominator divides it, `s * d` otherwise.
fn clearing_multiplier(s: &SValue, d: &SValue) -> SValue {
    if d.divides(s) {
        s.clone()
    } else {
        s.mul(d)
    }
}

/// Writes `y s = x + g r` and `y s' = x' + g r'` for the newest generator `g`
/// and checks that both representations give the same membership verdict
/// for the positive cone: `r' s = r s'`, `x s' = x' s`, the signs of `r` and
/// `r'` agree, and when `r = 0` the signs of `x` and `x'` agree.
pub fn well_definedness_probe(y: &TowerElement, s: &SValue, s_prime: &SValue) -> WellDefinedness {
    let (Some(x0), Some(top)) = (y.base(), y.frac()) else {
        return WellDefinedness {
            stage: 0,
            multipliers: (s.to_string(), s_prime.to_string()),
            coefficients: ("0".into(), "0".into()),
            failures: Vec::new(),
        };
    };
    let d = top.denominator();
    let represent = |mult: &SValue| {
        let m = clearing_multiplier(mult, d);
        let cof = d.cofactor_in(&m).expect("multiplier clears the denominator").value();
        let r = top.numerator().scale(&cof);
        let x = x0.scale(&m.value());
        (m, x, r)
    };
    let (m1, x1, r1) = represent(s);
    let (m2, x2, r2) = represent(s_prime);
    let (v1, v2) = (m1.value(), m2.value());
    let mut failures = Vec::new();

    for (m, x, r) in [(&v1, &x1, &r1), (&v2, &x2, &r2)] {
        let mut fracs = x.fracs.clone();
        fracs.push(SFraction::from_ring(r.clone()));
        let rebuilt = TowerElement::from_parts(x.base.clone(), fracs);
        if y.scale(m) != rebuilt {
            failures.push(format!("y*{m} is not x + g*({r})"));
        }
    }
    if r2.scale(&v1) != r1.scale(&v2) {
        failures.push(format!("r'*s != r*s' for r = {r1}, r' = {r2}"));
    }
    if !x1.scale(&v2).sub(&x2.scale(&v1)).map(|z| z.is_zero()).unwrap_or(false) {
        failures.push("x*s' - x'*s is nonzero".into());
    }
    if r1.is_positive() != r2.is_positive() {
        failures.push(format!("sign of r ({}) and r' ({}) disagree", r1.sign(), r2.sign()));
    }
    if r1.is_zero() != r2.is_zero() {
        failures.push("exactly one of r, r' vanishes".into());
    }
    if r1.is_zero() && r2.is_zero() && x1.is_positive() != x2.is_positive() {
        failures.push(format!("sign of x ({}) and x' ({}) disagree", x1.sign(), x2.sign()));
    }
    WellDefinedness {
        stage: y.stage(),
        multipliers: (m1.to_string(), m2.to_string()),
        coefficients: (r1.to_string(), r2.to_string()),
        failures,
    }
}

/// `y s` lies in exactly the same stages as `y`.
pub fn purity_check(y: &TowerElement, s: &SValue) -> bool {
    y.scale(&s.value()).minimal_stage() == y.minimal_stage()
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.base.coords().iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("e{i}*({c})"));
            }
        }
        for (k, fr) in self.fracs.iter().enumerate() {
            if fr.is_zero() {
                continue;
            }
            if fr.denominator().is_one() {
                parts.push(format!("g{k}*({})", fr.numerator()));
            } else {
                parts.push(format!("g{k}*({})/{}", fr.numerator(), fr.denominator()));
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
