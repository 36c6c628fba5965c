//! Acceptance gate: one test per criterion, each printing a single verdict
//! line. All runs use the CLI defaults (samples 500, seed 7, default depth).

use ringdyn::config::{OutputMode, RunConfig};
use ringdyn::profinite::coherent_family_count;
use ringdyn::report::SuiteReport;
use ringdyn::ring::canonical_moduli;
use ringdyn::suite::{find, run_all, SuiteContext, MODULUS_NORM_BOUND};
use ringdyn::{RingElement, RingId};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

const NON_FIELD: [RingId; 3] = [RingId::Z, RingId::Zi, RingId::F2t];
const ALL_RINGS: [RingId; 4] = [RingId::Z, RingId::Zi, RingId::F2t, RingId::F2];

fn config(ring: RingId) -> RunConfig {
    RunConfig::build(ring, None, 500, 7, OutputMode::Json).expect("default config")
}

fn run_fresh(ring: RingId, suite: &str) -> (SuiteReport, Duration) {
    let cfg = config(ring);
    let ctx = SuiteContext { config: &cfg };
    let start = Instant::now();
    let report = find(suite).expect("registered suite").run(&ctx);
    (report, start.elapsed())
}

/// Cached variant for criteria without their own timing budget.
fn run_one(ring: RingId, suite: &'static str) -> SuiteReport {
    static CACHE: OnceLock<Mutex<HashMap<(&'static str, &'static str), SuiteReport>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&(ring.token(), suite)) {
        return r.clone();
    }
    let (report, _) = run_fresh(ring, suite);
    cache.lock().unwrap().insert((ring.token(), suite), report.clone());
    report
}

fn checked(report: &SuiteReport, anchor: &str) -> u64 {
    report
        .checks
        .iter()
        .find(|c| c.anchor == anchor)
        .unwrap_or_else(|| panic!("anchor {anchor} missing in suite {}", report.suite))
        .checked
}

fn param_u64(report: &SuiteReport, key: &str) -> u64 {
    report.params[key].parse().expect("numeric param")
}

fn verdict(n: u32, what: &str, pass: bool) {
    println!("criterion {n} ({what}): {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {n} ({what}) failed");
}

#[test]
fn criterion_1_defining_relations_exhaustive() {
    let mut pass = true;
    let mut spent = Duration::ZERO;
    for ring in NON_FIELD {
        let (r, took) = run_fresh(ring, "relations");
        spent += took;
        let moduli = canonical_moduli(ring, MODULUS_NORM_BOUND);
        let cosets: u64 = moduli
            .iter()
            .map(|m| RingElement::residues(m).expect("nonzero").len() as u64)
            .sum();
        pass &= r.pass
            && checked(&r, "CL1") == (moduli.len() * moduli.len()) as u64
            && checked(&r, "CL2") == 50
            && checked(&r, "CL3") == moduli.len() as u64 * 50
            && checked(&r, "CL4") >= cosets;
    }
    pass &= spent < Duration::from_secs(10);
    verdict(1, "CL1-CL4 exhaustive over moduli of norm <= 64", pass);
}

#[test]
fn criterion_2_partial_representation_axioms() {
    let mut pass = true;
    for ring in ALL_RINGS {
        let r = run_one(ring, "partial-rep");
        pass &= r.pass
            && checked(&r, "PR2") == 500
            && checked(&r, "PR3") == 500
            && checked(&r, "pi-well-defined") == 100;
        for anchor in ["PR1", "R1", "R2", "R3"] {
            pass &= r.checks.iter().any(|c| c.anchor == anchor && c.pass);
        }
    }
    verdict(2, "PR1-PR3 and R1-R3 plus well-definedness on non-reduced data", pass);
}

#[test]
fn criterion_3_expectation_intertwine() {
    let mut pass = true;
    for ring in ALL_RINGS {
        let r = run_one(ring, "expectation");
        pass &= r.pass
            && checked(&r, "CE-intertwine") >= 200
            && param_u64(&r, "delta_mismatched") >= 50;
    }
    verdict(3, "intertwine on 200 monomials with 50 modulus mismatches per ring", pass);
}

#[test]
fn criterion_4_coherent_family_counts() {
    let mut pass = true;
    let mut spent = Duration::ZERO;
    for ring in NON_FIELD {
        let cfg = config(ring);
        let start = Instant::now();
        let count = coherent_family_count(&cfg.divisors).expect("divisor-closed defaults");
        spent += start.elapsed();
        pass &= count == cfg.depth.norm();
        let (r, took) = run_fresh(ring, "spectrum");
        spent += took;
        pass &= r.pass && checked(&r, "cylinder-separation") == 200;
    }
    pass &= spent < Duration::from_secs(10);
    verdict(4, "coherent families counted by the depth residues, cylinders separated", pass);
}

#[test]
fn criterion_5_topological_freeness_witnesses() {
    let mut pass = true;
    for ring in NON_FIELD {
        let r = run_one(ring, "freeness");
        let cfg = config(ring);
        let cylinders: u64 = cfg
            .divisors
            .iter()
            .map(|d| RingElement::residues(d).expect("nonzero").len() as u64)
            .sum();
        let certified = checked(&r, "freeness-witness");
        pass &= r.pass
            && certified > 0
            && certified + param_u64(&r, "trivially_free_cylinders") == 100 * cylinders;
    }
    let f2 = run_one(RingId::F2, "freeness");
    pass &= f2.pass
        && f2.checks.iter().any(|c| {
            c.anchor == "freeness-degenerate"
                && c.note.as_deref() == Some("degenerate: field, R-hat is a point")
        });
    verdict(5, "certified moved cylinders for 100 elements per ring, field degenerate", pass);
}

#[test]
fn criterion_6_orbit_translations() {
    let mut pass = true;
    for ring in ALL_RINGS {
        let r = run_one(ring, "minimality");
        pass &= r.pass && checked(&r, "orbit-reaches-target") == 100;
    }
    verdict(6, "100 pure-translation orbit steps per ring", pass);
}

#[test]
fn criterion_7_operator_dynamics_coherence() {
    let mut pass = true;
    for ring in ALL_RINGS {
        let r = run_one(ring, "spectrum");
        pass &= r.pass && checked(&r, "theta-pi-coherence") == 500;
    }
    for ring in NON_FIELD {
        let r = run_one(ring, "relations");
        let expected: u64 = canonical_moduli(ring, MODULUS_NORM_BOUND)
            .iter()
            .map(|m| RingElement::residues(m).expect("nonzero").len() as u64)
            .sum();
        pass &= checked(&r, "coset-projection") == expected;
    }
    verdict(7, "theta matches pi on 500 points; coset projections exhaustive", pass);
}

#[test]
fn criterion_8_simplicity_synthesis() {
    let mut pass = true;
    for ring in ALL_RINGS {
        let cfg = config(ring);
        let ctx = SuiteContext { config: &cfg };
        let reports = run_all(&ctx);
        let by_name = |name: &str| {
            reports
                .iter()
                .find(|r| r.suite == name)
                .unwrap_or_else(|| panic!("suite {name} missing"))
        };
        let simple = by_name("simplicity");
        pass &= simple.pass == (by_name("freeness").pass && by_name("minimality").pass);
        let note = simple
            .checks
            .iter()
            .find(|c| c.anchor == "simplicity")
            .and_then(|c| c.note.clone())
            .unwrap_or_default();
        pass &= note.contains("topologically free and minimal");
    }
    verdict(8, "simplicity stated as the conjunction of the dynamical hypotheses", pass);
}

#[test]
fn criterion_9_full_run_determinism_and_budget() {
    let snapshot = |reports: &[SuiteReport]| -> String {
        serde_json::to_string_pretty(reports)
            .expect("serializable")
            .lines()
            .filter(|l| !l.contains("\"elapsed_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let start = Instant::now();
    let mut pass = true;
    for ring in ALL_RINGS {
        let cfg = config(ring);
        let ctx = SuiteContext { config: &cfg };
        let first = run_all(&ctx);
        let second = run_all(&ctx);
        pass &= first.iter().all(|r| r.pass);
        pass &= snapshot(&first) == snapshot(&second);
    }
    pass &= start.elapsed() < Duration::from_secs(60);
    verdict(9, "full suite deterministic for a fixed seed and within budget", pass);
}
