//! The eight acceptance criteria, one line each.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::dg::dg_violations;
use common::oracle::Oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tan_core::ainfty::fixtures::{dg_pair, standard_simplex_dg};
use tan_core::exactlin::{Field, SignConvention};
use tan_core::necklace::Necklace;
use tan_core::nerve::Nerve;
use tan_core::quasicat::{assembled_family, perturb, random_member};
use tan_core::selftest::{
    ainfty_suite, equivalence_suite, functor_suite, horn_suite, kernel_suite, necklace_suite, sign_pin, SuiteResult,
};

const Q: Field = Field::Rational;

struct Line {
    passed: bool,
    detail: String,
}

fn from_suite(s: &SuiteResult, limit: f64) -> Line {
    let mut detail = format!("{} checks, {} failures, {:.2}s", s.checked, s.failure_count, s.seconds);
    if limit.is_finite() {
        detail.push_str(&format!(" (limit {limit}s)"));
    }
    for n in &s.notes {
        detail.push_str("; ");
        detail.push_str(n);
    }
    for f in s.failures.iter().take(3) {
        detail.push_str("; ");
        detail.push_str(f);
    }
    Line { passed: s.passed() && s.seconds < limit, detail }
}

fn kernels() -> Line {
    let start = Instant::now();
    let suite = kernel_suite(Q, SignConvention::Koszul);
    let a = standard_simplex_dg(2, Q);
    let nerve = Nerve::new(&a, SignConvention::Koszul);
    let mut bad = Vec::new();
    let cases: [(usize, &[usize], usize, usize, Option<&[usize]>, usize); 5] = [
        (0, &[0], 0, 0, None, 1),
        (0, &[0], 2, 2, None, 1),
        (2, &[0, 2], 0, 2, Some(&[0, 1, 2]), 1),
        (2, &[0, 1, 2], 0, 2, Some(&[0, 1, 2]), 1),
        (2, &[0, 2], 0, 2, None, 3),
    ];
    for (spine, joints, from, to, labels, expected) in cases {
        let o = Oracle::new(&a, spine, joints, from, to, labels, 3);
        let t = Necklace::new(spine, joints.to_vec()).unwrap();
        let space = match labels {
            Some(l) => nerve.labelled_space(&t, l),
            None => nerve.space(&t, from, to),
        };
        let oracle_dim = (o.count() as f64).log(3.0).round() as usize;
        let zero = space.basis.iter().all(|y| nerve.satisfies_tan(y) && o.residual_free(&o.vector(y)));
        if oracle_dim != expected || space.dim() != expected || !zero {
            bad.push(format!("{t} ({from},{to}) {labels:?}: library {}, oracle {oracle_dim}", space.dim()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Line {
        passed: bad.is_empty() && suite.passed() && secs < 10.0,
        detail: format!(
            "labelled N_Δ2(0,2) = N_Δ1∨Δ1(0,2) = 1 and N_Δ0(a,a) = 1 match the oracle, full N_Δ2(0,2) = 3; {} residual checks; {:.2}s (limit 10s){}",
            suite.checked,
            secs,
            bad.iter().map(|b| format!("; {b}")).collect::<String>()
        ),
    }
}

fn structure() -> Line {
    let start = Instant::now();
    let (pinned, results) = sign_pin(Q);
    let secs = start.elapsed().as_secs_f64();
    let summary: Vec<String> = results
        .iter()
        .map(|r| format!("{} {}", r.name, if r.passed() { "pass" } else { "fail" }))
        .collect();
    Line {
        passed: pinned.is_some() && secs < 60.0,
        detail: format!("pinned convention {:?}; {}; {secs:.2}s", pinned.map(|c| c.to_string()), summary.join(", ")),
    }
}

fn dg_comparison() -> Line {
    let a = dg_pair(Q);
    let nerve = Nerve::new(&a, SignConvention::Koszul);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut members, mut non, mut disagree) = (0, 0, 0);
    for t in 0..200 {
        let n = rng.gen_range(1..=3);
        let m = random_member(&a, n, &mut rng, 5000).unwrap();
        let s = if t % 2 == 0 { m } else { perturb(&a, &m, &mut rng).unwrap_or(m) };
        let dg = dg_violations(&a, &s).is_empty();
        let tan = assembled_family(&a, &s).unwrap().iter().all(|(_, y)| nerve.satisfies_tan(y));
        if dg != tan {
            disagree += 1;
        }
        if dg {
            members += 1;
        } else {
            non += 1;
        }
    }
    Line {
        passed: disagree == 0 && members > 0 && non > 0,
        detail: format!("{members} members, {non} non-members, {disagree} disagreements"),
    }
}

fn main() -> ExitCode {
    let conv = SignConvention::Koszul;
    let criteria: Vec<(&str, Box<dyn Fn() -> Line>)> = vec![
        ("necklace calculus", Box::new(|| from_suite(&necklace_suite(5), 10.0))),
        ("A∞ checkers", Box::new(|| from_suite(&ainfty_suite(Q), 5.0))),
        ("nerve kernels", Box::new(kernels)),
        ("structure-map laws and sign pin", Box::new(structure)),
        ("functor laws", Box::new(move || from_suite(&functor_suite(Q, conv), 30.0))),
        ("dg comparison", Box::new(dg_comparison)),
        ("inner horn filling", Box::new(move || from_suite(&horn_suite(Q, conv, 50, 7), 120.0))),
        ("underlying simplicial set", Box::new(move || from_suite(&equivalence_suite(Q, conv, 200, 8), f64::INFINITY))),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let line = run();
        all &= line.passed;
        println!("criterion {} {name}: {} ({})", i + 1, if line.passed { "PASS" } else { "FAIL" }, line.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
