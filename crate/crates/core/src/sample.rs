//! Seeded random generation of test inputs.
//!
//! Every trial gets its own ChaCha stream derived from `(seed, salt, trial)`,
//! so trials can run in any order, or in parallel, and still see the same
//! inputs.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::frac::{SConfig, SFraction, SValue};
use crate::group::{GroupElement, GroupKind};
use crate::module::ModuleVector;
use crate::ring::RingElement;
use crate::tower::{StageFlavor, Tower, TowerElement};

/// Largest support drawn by [`Sampler::ring`].
pub const MAX_SUPPORT: usize = 4;

/// Stable 64-bit FNV-1a hash, used to give each property its own streams.
pub fn salt(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

pub fn trial_rng(seed: u64, salt: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    rng.set_stream(trial);
    rng
}

/// Uniform element with every coordinate in `[-radius, radius]`.
pub fn element<R: Rng>(kind: &GroupKind, radius: u32, rng: &mut R) -> GroupElement {
    let r = i64::from(radius);
    let coords: Vec<i64> = (0..kind.dim()).map(|_| rng.random_range(-r..=r)).collect();
    kind.elem(&coords).expect("arity matches kind")
}

fn nonzero_coefficient<R: Rng>(bound: i64, rng: &mut R) -> i64 {
    let c = rng.random_range(1..=bound);
    if rng.random_bool(0.5) {
        c
    } else {
        -c
    }
}

/// Draws ring elements with supports from a fixed ball.
#[derive(Debug, Clone)]
pub struct Sampler {
    kind: GroupKind,
    ball: Vec<GroupElement>,
    coeff_bound: i64,
}

impl Sampler {
    pub fn new(kind: &GroupKind, radius: u32, coeff_bound: u32) -> Result<Self> {
        Ok(Sampler {
            kind: kind.clone(),
            ball: kind.ball(radius)?,
            coeff_bound: i64::from(coeff_bound.max(1)),
        })
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn ball(&self) -> &[GroupElement] {
        &self.ball
    }

    /// Support size uniform in `[1, 4]`, distinct ball elements, coefficients
    /// uniform in `[-bound, bound] \ {0}`. Never zero.
    pub fn ring<R: Rng>(&self, rng: &mut R) -> RingElement {
        let size = rng.random_range(1..=MAX_SUPPORT.min(self.ball.len()));
        let picks = index::sample(rng, self.ball.len(), size);
        let terms: Vec<_> = picks
            .into_iter()
            .map(|i| (self.ball[i].clone(), nonzero_coefficient(self.coeff_bound, rng).into()))
            .collect();
        RingElement::from_terms(&self.kind, terms).expect("ball elements share the kind")
    }

    /// As [`Sampler::ring`], resampled until positive.
    pub fn positive_ring<R: Rng>(&self, rng: &mut R) -> RingElement {
        loop {
            let r = self.ring(rng);
            if r.is_positive() {
                return r;
            }
        }
    }

    /// A ring element that is zero with probability `p_zero`.
    pub fn ring_or_zero<R: Rng>(&self, p_zero: f64, rng: &mut R) -> RingElement {
        if rng.random_bool(p_zero) {
            RingElement::zero(&self.kind)
        } else {
            self.ring(rng)
        }
    }

    pub fn vector<R: Rng>(&self, rank: usize, rng: &mut R) -> ModuleVector {
        let coords = (0..rank).map(|_| self.ring_or_zero(0.3, rng)).collect();
        ModuleVector::new(coords).expect("rank >= 1")
    }

    /// Element of `S` with each configured prime raised to `0..=max_exp`.
    pub fn s_value<R: Rng>(config: &SConfig, max_exp: u32, rng: &mut R) -> SValue {
        config
            .primes()
            .iter()
            .fold(SValue::one(), |acc, &p| acc.mul(&SValue::prime_power(p, rng.random_range(0..=max_exp))))
    }

    fn fraction<R: Rng>(&self, tower: &Tower, flavor: StageFlavor, rng: &mut R) -> SFraction {
        let numerator = self.ring_or_zero(0.3, rng);
        let denominator = match flavor {
            StageFlavor::Free => SValue::one(),
            StageFlavor::Divisible => Self::s_value(tower.sconfig(), 2, rng),
        };
        SFraction::new(numerator, denominator)
    }

    /// Random element of `G_stage`.
    pub fn tower_element_at<R: Rng>(&self, tower: &Tower, stage: usize, rng: &mut R) -> TowerElement {
        let mut y = tower.embed(self.vector(tower.rank(), rng)).expect("sampler matches tower");
        for k in 0..stage {
            let f = self.fraction(tower, tower.flavors()[k], rng);
            y = tower.lift(&y, f).expect("sampled fraction respects flavor");
        }
        y
    }

    /// Random element at a uniformly chosen stage.
    pub fn tower_element<R: Rng>(&self, tower: &Tower, rng: &mut R) -> TowerElement {
        let stage = rng.random_range(0..=tower.height());
        self.tower_element_at(tower, stage, rng)
    }
}
