//! Seeded probes for the automorphism-level claims.
//!
//! Group elements act on tower elements by right multiplication. The probes
//! check on sampled data that this action is by order automorphisms and is
//! faithful, that positive non-units act monotonically without being
//! invertible, and how far the cone of `ZH` is closed under products.
//!
//! Not checked anywhere: that every order endomorphism of the limit group is
//! multiplication by a positive ring element, and the set-theoretic freeness
//! properties of the limit group. Neither has a finite test.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupKind};
use crate::module::ModuleVector;
use crate::ring::{RingElement, UnitVerdict};
use crate::sample::{salt, trial_rng, Sampler};
use crate::tower::{Tower, TowerElement};
use crate::Sign;

pub const OUT_OF_SCOPE_NOTICE: &str = "not verified (no finite test exists): equality of the order-endomorphism monoid \
of the limit group with the positive cone of ZH (only the inclusion is probed); aleph_1-freeness of the limit group";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub verdicts: Vec<String>,
}

impl Witness {
    pub fn new(inputs: impl IntoIterator<Item = String>, verdicts: impl IntoIterator<Item = String>) -> Self {
        Witness { inputs: inputs.into_iter().collect(), verdicts: verdicts.into_iter().collect() }
    }
}

/// Outcome of one property run. `failures == witnesses.len()` always.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub property: String,
    pub trials: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
    /// Informational reports never fail a suite.
    pub informational: bool,
    pub notes: Vec<String>,
}

impl ProbeReport {
    pub fn new(property: impl Into<String>, trials: u64, seed: u64, witnesses: Vec<Witness>) -> Self {
        ProbeReport {
            property: property.into(),
            trials,
            failures: witnesses.len() as u64,
            witnesses,
            seed,
            config: BTreeMap::new(),
            informational: false,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn with_config(mut self, key: &str, value: impl ToString) -> Self {
        self.config.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Runs `trials` independent seeded trials, in parallel, and collects the
/// witnesses in trial order.
pub fn run_trials<F>(property: &str, trials: u64, seed: u64, check: F) -> ProbeReport
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Option<Witness> + Sync,
{
    let s = salt(property);
    let witnesses: Vec<Witness> = (0..trials)
        .into_par_iter()
        .filter_map(|t| check(&mut trial_rng(seed, s, t)))
        .collect();
    ProbeReport::new(property, trials, seed, witnesses)
}

fn ordered_pair<R: Rng>(sampler: &Sampler, tower: &Tower, rng: &mut R) -> (TowerElement, TowerElement, Ordering) {
    let a = sampler.tower_element(tower, rng);
    let b = sampler.tower_element(tower, rng);
    let o = a.cmp(&b).expect("same tower");
    match o {
        Ordering::Greater => (b, a, Ordering::Less),
        _ => (a, b, o),
    }
}

fn monotone_witness(y: &TowerElement, y2: &TowerElement, ord: Ordering, r: &RingElement) -> Option<Witness> {
    let (img, img2) = (y.act(r).ok()?, y2.act(r).ok()?);
    let after = img.cmp(&img2).ok()?;
    (after != ord).then(|| {
        Witness::new(
            [y.to_string(), y2.to_string(), r.to_string()],
            [format!("before: {ord:?}"), format!("after: {after:?}")],
        )
    })
}

/// Checks that `y -> y h` preserves strict order on sampled pairs and is
/// undone exactly by `h^-1`.
pub fn check_order_automorphism(
    h: &GroupElement,
    tower: &Tower,
    sampler: &Sampler,
    samples: u64,
    seed: u64,
) -> ProbeReport {
    let r = RingElement::term(h.clone(), 1);
    let r_inv = RingElement::term(h.inv(), 1);
    let property = "order_automorphism";
    run_trials(property, samples, seed, |rng| {
        let (y, y2, ord) = ordered_pair(sampler, tower, rng);
        if let Some(w) = monotone_witness(&y, &y2, ord, &r) {
            return Some(w);
        }
        for z in [&y, &y2] {
            let back = z.act(&r).and_then(|img| img.act(&r_inv));
            if back.as_ref() != Ok(z) {
                return Some(Witness::new(
                    [z.to_string(), h.to_string()],
                    ["h^-1 does not undo h".to_string()],
                ));
            }
        }
        None
    })
    .with_config("element", h)
    .with_config("group", tower.group())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaithfulWitness {
    pub basis: ModuleVector,
    pub image: ModuleVector,
    pub image_other: ModuleVector,
}

/// Finds a basis vector moved differently by `h` and `h'`.
pub fn check_faithful(h: &GroupElement, h_prime: &GroupElement, tower: &Tower) -> Result<FaithfulWitness> {
    if h == h_prime {
        return Err(Error::Invalid(format!("{h} acts like itself; need distinct elements")));
    }
    for g in [h, h_prime] {
        if !g.belongs_to(tower.group()) {
            return Err(Error::KindMismatch {
                left: tower.group().to_string(),
                right: g.kind().to_string(),
            });
        }
    }
    for i in 0..tower.rank() {
        let e = ModuleVector::basis(tower.group(), tower.rank(), i);
        let image = e.vec_act(&RingElement::term(h.clone(), 1))?;
        let image_other = e.vec_act(&RingElement::term(h_prime.clone(), 1))?;
        if image != image_other {
            return Ok(FaithfulWitness { basis: e, image, image_other });
        }
    }
    Err(Error::Invalid(format!("no basis vector separates {h} and {h_prime}")))
}

#[derive(Debug, Clone)]
pub struct NonUnitEndo {
    pub report: ProbeReport,
    pub verdict: UnitVerdict,
}

/// Checks that a positive `r` acts monotonically and records whether it is a unit.
pub fn check_nonunit_endo(
    r: &RingElement,
    tower: &Tower,
    sampler: &Sampler,
    samples: u64,
    seed: u64,
) -> Result<NonUnitEndo> {
    if r.sign() != Sign::Positive {
        return Err(Error::Invalid(format!("{r} is not positive")));
    }
    let verdict = r.try_invert();
    let mut report = run_trials("positive_endomorphism", samples, seed, |rng| {
        let (y, y2, ord) = ordered_pair(sampler, tower, rng);
        monotone_witness(&y, &y2, ord, r)
    })
    .with_config("element", r)
    .with_config("group", tower.group());
    report.notes.push(match &verdict {
        UnitVerdict::Unit { inverse } => format!("unit, inverse {inverse}"),
        UnitVerdict::NonUnit { reason, justified_by_biorder } => {
            format!("non-unit: {reason} (justified_by_biorder = {justified_by_biorder})")
        }
    });
    Ok(NonUnitEndo { report, verdict })
}

/// Checks `r, r' > 0 => r r' > 0` together with the leading-term product rule
/// `lead(r r') = (h* k*, r_h* r'_k*)`.
pub fn cone_product_witness(r: &RingElement, r2: &RingElement) -> Option<Witness> {
    let p = r.mul(r2).expect("same group");
    let (a, b) = (r.leading().ok()?, r2.leading().ok()?);
    let expected = (a.element.compose(&b.element), &a.coefficient * &b.coefficient);
    let lead = p.leading().ok();
    let lead_ok = lead.as_ref().is_some_and(|l| l.element == expected.0 && l.coefficient == expected.1);
    if p.sign() == Sign::Positive && lead_ok {
        return None;
    }
    Some(Witness::new(
        [r.to_string(), r2.to_string()],
        [
            format!("sign(r*r') = {}", p.sign()),
            format!("lead(r*r') = {}", lead.map_or("none".into(), |l| l.to_string())),
            format!("lead(r)*lead(r') = {}*{}", expected.1, expected.0),
        ],
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeClosureProbe {
    pub sampled: ProbeReport,
    /// Exhaustive sweep, run for groups that are not bi-ordered.
    pub exhaustive: Option<ProbeReport>,
}

impl ConeClosureProbe {
    /// Whether any product of positives failed to be positive with the
    /// expected leading term.
    pub fn violation_found(&self) -> bool {
        !self.sampled.passed() || self.exhaustive.as_ref().is_some_and(|r| !r.passed())
    }
}

/// Every element with support of size at most 2 in the radius-1 ball and
/// coefficients `+-1`.
pub fn small_support_elements(kind: &GroupKind) -> Result<Vec<RingElement>> {
    let ball = kind.ball(1)?;
    let mut out = Vec::new();
    for (i, g) in ball.iter().enumerate() {
        for c in [1, -1] {
            out.push(RingElement::term(g.clone(), c));
        }
        for h in &ball[i + 1..] {
            for (c, d) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(RingElement::term(g.clone(), c).add(&RingElement::term(h.clone(), d))?);
            }
        }
    }
    Ok(out)
}

pub fn probe_cone_closure(kind: &GroupKind, trials: u64, radius: u32, coeff_bound: u32, seed: u64) -> Result<ConeClosureProbe> {
    let sampler = Sampler::new(kind, radius, coeff_bound)?;
    let mut sampled = run_trials("cone_closure", trials, seed, |rng| {
        let r = sampler.positive_ring(rng);
        let r2 = sampler.positive_ring(rng);
        cone_product_witness(&r, &r2)
    })
    .with_config("group", kind)
    .with_config("radius", radius)
    .with_config("coeff_bound", coeff_bound);
    let exhaustive = if kind.is_bi_ordered() {
        None
    } else {
        sampled = sampled.informational();
        let positives: Vec<RingElement> = small_support_elements(kind)?.into_iter().filter(RingElement::is_positive).collect();
        let witnesses: Vec<Witness> = positives
            .par_iter()
            .flat_map_iter(|r| positives.iter().filter_map(move |r2| cone_product_witness(r, r2)))
            .collect();
        let trials = (positives.len() * positives.len()) as u64;
        Some(
            ProbeReport::new("cone_closure_exhaustive", trials, seed, witnesses)
                .with_config("group", kind)
                .with_config("radius", 1)
                .with_config("coefficients", "+-1")
                .with_config("max_support", 2)
                .informational()
                .with_note("finding about the implemented order on a group that is right-ordered but not bi-ordered"),
        )
    };
    Ok(ConeClosureProbe { sampled, exhaustive })
}
