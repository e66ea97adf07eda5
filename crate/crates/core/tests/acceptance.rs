//! Acceptance run: one line per criterion, all at zero tolerance.
//!
//! Runs as a plain binary (`harness = false`) so the report lines are always
//! printed. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ordring::group::find_left_invariance_violation;
use ordring::realization::{check_order_automorphism, probe_cone_closure, ProbeReport, OUT_OF_SCOPE_NOTICE};
use ordring::sample::Sampler;
use ordring::suite::{self, OutputFormat, RunConfig};
use ordring::{GroupKind, RingElement, Sign, Tower};

const SEED: u64 = 0x5eed;
const SAMPLES: u64 = 10_000;
const TOWER_SAMPLES: u64 = 1_000;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

fn tally(reports: &[ProbeReport]) -> Verdict {
    let trials: u64 = reports.iter().map(|r| r.trials).sum();
    let failures: u64 = reports.iter().map(|r| r.failures).sum();
    let mut detail = format!("{} reports, {trials} trials, {failures} failures", reports.len());
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        let group = bad.config.get("group").cloned().unwrap_or_default();
        detail.push_str(&format!("; first failing: {} on {group}", bad.property));
        if let Some(w) = bad.witnesses.first() {
            detail.push_str(&format!(" ({} => {})", w.inputs.join(", "), w.verdicts.join(", ")));
        }
    }
    Verdict { passed: failures == 0 && trials > 0, detail }
}

fn kinds() -> Vec<GroupKind> {
    suite::standard_kinds()
}

fn bi_kinds() -> Vec<GroupKind> {
    kinds().into_iter().filter(GroupKind::is_bi_ordered).collect()
}

fn default_tower() -> Tower {
    RunConfig::default().tower().expect("default config is valid")
}

fn sampler(tower: &Tower) -> Sampler {
    Sampler::new(tower.group(), 1, 3).expect("radius 1 ball")
}

fn c1_order_axioms() -> Verdict {
    let mut reports = Vec::new();
    for k in kinds() {
        reports.push(suite::group_trichotomy(&k, SAMPLES, 2, SEED));
        reports.push(suite::group_transitivity(&k, SAMPLES, 2, SEED));
        reports.push(suite::group_right_invariance(&k, SAMPLES, 2, SEED));
    }
    tally(&reports)
}

fn c2_left_invariance() -> Verdict {
    let reports: Vec<_> = bi_kinds().iter().map(|k| suite::group_left_invariance(k, SAMPLES, 2, SEED)).collect();
    let mut v = tally(&reports);
    let klein = GroupKind::KleinBottle;
    let ball = klein.ball(1).expect("radius 1");
    let witness = find_left_invariance_violation(&ball);
    // re-check the witness from scratch: g < h but k g > k h
    let confirmed = witness.as_ref().is_some_and(|(g, h, k)| {
        g < h && k.mul(g).expect("same kind") > k.mul(h).expect("same kind")
    });
    let k = klein.elem(&[0, 1]).expect("klein");
    let (a, b) = (klein.elem(&[1, 0]).expect("klein"), klein.elem(&[0, 0]).expect("klein"));
    let flips = (a > b) && (k.mul(&a).expect("same kind") < k.mul(&b).expect("same kind"));
    match &witness {
        Some((g, h, k)) => v.detail.push_str(&format!("; klein witness {g} < {h} but {k}*{g} > {k}*{h}")),
        None => v.detail.push_str("; no klein witness"),
    }
    v.detail.push_str(&format!("; (0,1) flips (1,0) vs (0,0): {flips}"));
    v.passed &= confirmed && flips;
    v
}

fn c3_ring_order() -> Verdict {
    let reports: Vec<_> = kinds()
        .iter()
        .map(|k| suite::ring_order_oracle(&Sampler::new(k, 2, 3).expect("ball"), SAMPLES, SEED))
        .collect();
    tally(&reports)
}

fn c4_cone_closure() -> Verdict {
    let reports: Vec<_> = bi_kinds()
        .iter()
        .map(|k| probe_cone_closure(k, SAMPLES, 2, 3, SEED).expect("probe").sampled)
        .collect();
    tally(&reports)
}

fn c5_units() -> Verdict {
    let reports: Vec<_> = [GroupKind::FreeAbelian { rank: 1 }, GroupKind::Heisenberg]
        .iter()
        .map(|k| suite::unit_characterization(k).expect("unit sweep"))
        .collect();
    tally(&reports)
}

fn c6_tower_trichotomy() -> Verdict {
    let t = default_tower();
    let s = sampler(&t);
    let mut v = tally(&[
        suite::tower_trichotomy(&t, &s, TOWER_SAMPLES, SEED),
        suite::tower_additivity(&t, &s, TOWER_SAMPLES, SEED),
    ]);
    v.passed &= t.height() == 4;
    v
}

fn c7_monotone_action() -> Verdict {
    let t = default_tower();
    let s = sampler(&t);
    let mut v = tally(&[
        suite::tower_monotone_action(&t, &s, TOWER_SAMPLES, SEED),
        suite::positive_endomorphisms(&t, &s, TOWER_SAMPLES, SEED),
        suite::tower_negative_reversal(&t),
    ]);
    let minus_one = RingElement::integer(t.group(), -1);
    let reversed = (0..t.rank()).all(|i| t.basis(i).act(&minus_one).is_ok_and(|y| y.sign() == Sign::Negative));
    v.detail.push_str(&format!("; e*(-1) negative for all {} basis vectors: {reversed}", t.rank()));
    v.passed &= reversed;
    v
}

fn c8_well_definedness() -> Verdict {
    let t = default_tower();
    let s = sampler(&t);
    let reports: Vec<_> = (1..=t.height())
        .map(|stage| suite::tower_well_definedness(&t, &s, stage, TOWER_SAMPLES, SEED))
        .collect();
    tally(&reports)
}

fn c9_faithfulness() -> Verdict {
    let mut reports = Vec::new();
    for group in [GroupKind::Heisenberg, GroupKind::FreeAbelian { rank: 2 }] {
        let t = Tower::new(group, 2, default_tower().sconfig().clone(), default_tower().flavors().to_vec())
            .expect("tower");
        let s = sampler(&t);
        reports.push(suite::faithfulness_over_ball(&t, 1).expect("ball"));
        for h in t.group().ball(1).expect("ball") {
            reports.push(check_order_automorphism(&h, &t, &s, TOWER_SAMPLES, SEED));
        }
    }
    tally(&reports)
}

fn small_config(seed: u64) -> RunConfig {
    RunConfig { trials: 1_000, seed, format: OutputFormat::Structured, ..RunConfig::default() }
}

fn c10_reproducibility() -> Verdict {
    let a = suite::run_suite(&small_config(SEED)).expect("suite").to_json();
    let b = suite::run_suite(&small_config(SEED)).expect("suite").to_json();
    let identical = a == b;
    Verdict {
        passed: identical && !a.is_empty(),
        detail: format!("two runs at seed {SEED:#x}: {} bytes, byte-identical: {identical}", a.len()),
    }
}

fn c11_klein_probe() -> Verdict {
    let klein = GroupKind::KleinBottle;
    let verdicts: Vec<(bool, bool)> = [1u64, 2, 3, SEED, u64::MAX]
        .iter()
        .map(|&seed| {
            let p = probe_cone_closure(&klein, 2_000, 2, 3, seed).expect("probe");
            let exhaustive = p.exhaustive.as_ref().is_some_and(|r| !r.passed());
            (p.violation_found(), exhaustive)
        })
        .collect();
    let stable = verdicts.windows(2).all(|w| w[0] == w[1]);
    let report = suite::run_suite(&RunConfig { trials: 200, ..RunConfig::default() }).expect("suite");
    let notice = report.out_of_scope.iter().any(|n| n == OUT_OF_SCOPE_NOTICE)
        && OUT_OF_SCOPE_NOTICE.contains("aleph_1-freeness");
    Verdict {
        passed: stable && notice,
        detail: format!(
            "verdict over 5 seeds: {:?} (violation found, exhaustive violation); stable: {stable}; out-of-scope notice present: {notice}",
            verdicts[0]
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("order axioms on every group kind", c1_order_axioms),
        ("left invariance for bi-ordered kinds, klein violation", c2_left_invariance),
        ("ring order agrees with the quantifier-form oracle", c3_ring_order),
        ("positive cone closed under products with leading-term rule", c4_cone_closure),
        ("units are exactly the trivial units", c5_units),
        ("tower trichotomy and cone additivity", c6_tower_trichotomy),
        ("monotone positive action and negative reversal", c7_monotone_action),
        ("well-definedness of the tower order", c8_well_definedness),
        ("faithful action by order automorphisms", c9_faithfulness),
        ("suite reports are reproducible", c10_reproducibility),
        ("klein cone probe is seed-stable, scope notice present", c11_klein_probe),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = run();
        let status = if v.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!v.passed);
        println!("{status} criterion {:>2}: {name}: {} [{}]", i + 1, v.detail, secs(t.elapsed()));
    }
    println!("acceptance: {} of {} criteria passed in {}", criteria.len() - failed, criteria.len(), secs(start.elapsed()));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
