//! One line per acceptance criterion. Criteria listed in `KNOWN_RED` are
//! expected to fail; the run aborts if any criterion changes colour.

use std::time::{Duration, Instant};

use coxinv::involutions::enumerate_involution_classes;
use coxinv::rootsys::{BuildOptions, Irreducible, RootSystem};
use coxinv::structure::{analyze, chain_types, CheckStatus, TypeReport, CSV_HEADER};
use coxinv::tables::{compare, ExpectedTable};

const SMALL_TABLES_BUDGET: Duration = Duration::from_secs(10);
const E7_BUDGET: Duration = Duration::from_secs(60);
const E8_BUDGET: Duration = Duration::from_secs(15 * 60);
const CLASSICAL_BUDGET: Duration = Duration::from_secs(60);
/// Largest `|Γ_u|` for which an undetermined complement search counts as
/// a failure.
const COMPLEMENT_REQUIRED_UP_TO: usize = 6;

/// Criteria that cannot pass against the fixed expectations.
const KNOWN_RED: &[u32] = &[1, 5];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(t: Irreducible, checks: bool) -> TypeReport {
    analyze(t, BuildOptions::default(), checks).unwrap_or_else(|e| panic!("{t}: {e}"))
}

fn verify_types(types: &[Irreducible], budget: Duration) -> Outcome {
    let start = Instant::now();
    let table = ExpectedTable::embedded();
    let mut problems = Vec::new();
    for &t in types {
        let r = report(t, false);
        for d in compare(&table.rows_for(t).unwrap(), &r.profiles) {
            problems.push(format!("{t} {d}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > budget {
        problems.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() { format!("exact in {elapsed:.1?}") } else { problems.join("; ") },
    }
}

fn class_sizes(r: &TypeReport) -> Vec<(String, usize)> {
    r.profiles.iter().map(|p| (p.label.clone(), p.class_size)).collect()
}

fn criterion_1() -> Outcome {
    use Irreducible::*;
    verify_types(&[H(3), H(4), F4, E(6)], SMALL_TABLES_BUDGET)
}

fn criterion_2() -> Outcome {
    let mut o = verify_types(&[Irreducible::E(7)], E7_BUDGET);
    let r = report(Irreducible::E(7), false);
    let sizes = class_sizes(&r);
    for (label, size) in [("3", 315), ("3'", 3780), ("4", 315), ("4'", 3780)] {
        if !sizes.contains(&(label.to_string(), size)) {
            o.pass = false;
            o.detail.push_str(&format!("; class {label} should have {size} elements"));
        }
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = verify_types(&[Irreducible::E(8)], E8_BUDGET);
    let r = report(Irreducible::E(8), false);
    let sizes = class_sizes(&r);
    for (label, size) in [("4", 3150), ("4'", 113400)] {
        if !sizes.contains(&(label.to_string(), size)) {
            o.pass = false;
            o.detail.push_str(&format!("; class {label} should have {size} elements"));
        }
    }
    o
}

fn classical_types() -> Vec<Irreducible> {
    let mut v: Vec<Irreducible> = (1..=6).map(Irreducible::A).collect();
    v.extend((2..=7).map(Irreducible::B));
    v.extend((4..=7).map(Irreducible::D));
    v
}

fn criterion_4() -> Outcome {
    let mut o = verify_types(&classical_types(), CLASSICAL_BUDGET);
    let d7 = report(Irreducible::D(7), false);
    let case_four = d7.profiles.iter().any(|p| p.label == "2,1,2" && p.gamma.to_string() == "2,2");
    let split = report(Irreducible::D(6), false).profiles.iter().filter(|p| p.label.starts_with("0,0,3")).count();
    if !case_four || split != 2 {
        o.pass = false;
        o.detail.push_str("; D split classes or the non-symmetric gamma are missing");
    }
    o
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let h4 = RootSystem::build(Irreducible::H(4)).unwrap();
    let (classes, _) = enumerate_involution_classes(&h4).unwrap();
    let counts: Vec<usize> = classes.iter().map(|c| c.class_size).collect();
    if counts != [1, 60, 450, 60, 1] {
        problems.push(format!("H4 counts {counts:?}"));
    }
    let f4 = RootSystem::build(Irreducible::F4).unwrap();
    let (classes, _) = enumerate_involution_classes(&f4).unwrap();
    let size = |label: &str| classes.iter().find(|c| c.label == label).map(|c| c.class_size);
    for (label, want) in [("1", 12), ("1'", 12), ("2", 18), ("2'", 36)] {
        if size(label) != Some(want) {
            let got = size(label).map_or_else(|| "no such class".to_string(), |n| n.to_string());
            problems.push(format!("F4 class {label}: expected {want}, computed {got}"));
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() { "H4 1/60/450/60/1, F4 12+12, 18, 36".into() } else { problems.join("; ") },
    }
}

fn criterion_6() -> Outcome {
    use Irreducible::*;
    let mut types = classical_types();
    types.extend([A(7), H(3), H(4), F4, G2, E(6), E(7), E(8), I2(5), I2(8)]);
    let mut problems = Vec::new();
    let (mut passed, mut skipped) = (0, 0);
    for t in types {
        let r = report(t, true);
        for c in &r.checks {
            let gamma = r.profiles.iter().find(|p| Some(&p.label) == c.class.as_ref()).map(|p| p.gamma_order);
            match c.status {
                CheckStatus::Pass => passed += 1,
                CheckStatus::Skipped => skipped += 1,
                CheckStatus::Undetermined if gamma.is_some_and(|g| g > COMPLEMENT_REQUIRED_UP_TO) => skipped += 1,
                _ => problems.push(format!("{t} {} {:?}: {:?} {}", c.check, c.class, c.status, c.detail)),
            }
        }
        for p in &r.profiles {
            if !p.tilde_minus_reflection_generated || !p.tilde_plus_reflection_generated {
                problems.push(format!("{t} {}: tilde group not reflection generated", p.label));
            }
        }
    }
    let e6 = RootSystem::build(E(6)).unwrap();
    let chain: Vec<String> = (1..=4).map(|k| chain_types(&e6, k).iter().map(|t| t.to_string()).collect::<Vec<_>>().join("|")).collect();
    if chain != ["A5", "A3", "A1", "1"] {
        problems.push(format!("E6 chain {chain:?}"));
    }
    let e8 = RootSystem::build(E(8)).unwrap();
    let chain: Vec<String> = (1..=4).map(|k| chain_types(&e8, k).iter().map(|t| t.to_string()).collect::<Vec<_>>().join("|")).collect();
    if chain != ["E7", "D6", "A1xD4", "(A1)^4|D4"] {
        problems.push(format!("E8 chain {chain:?}"));
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{passed} checks passed, {skipped} beyond feasibility gates")
        } else {
            problems.join("; ")
        },
    }
}

fn criterion_7() -> Outcome {
    let render = |t| {
        let r = report(t, false);
        let csv: Vec<String> = std::iter::once(CSV_HEADER.to_string()).chain(r.profiles.iter().map(|p| p.csv_row())).collect();
        (csv.join("\n"), serde_json::to_string(&r).unwrap())
    };
    let types = [Irreducible::E(7), Irreducible::D(6), Irreducible::H(4)];
    let same = types.iter().all(|&t| render(t) == render(t));
    Outcome { pass: same, detail: if same { "byte-identical CSV and JSON".into() } else { "outputs differ".into() } }
}

fn main() {
    let criteria: [Criterion; 7] = [
        (1, "tables H3, H4, F4, E6", criterion_1),
        (2, "table E7", criterion_2),
        (3, "table E8", criterion_3),
        (4, "classical families up to rank 7", criterion_4),
        (5, "involution census H4, F4", criterion_5),
        (6, "check suite", criterion_6),
        (7, "determinism", criterion_7),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if KNOWN_RED.contains(&n) { " (known red)" } else { "" };
        println!("criterion {n} [{name}]: {verdict}{note}: {}", o.detail);
        if o.pass == KNOWN_RED.contains(&n) {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with an unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
