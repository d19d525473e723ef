//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use twonest::c1p::{is_valid_tucker_witness, test_c1p, C1pResult};
use twonest::generators::{
    gen_f0, gen_f1, gen_f2, gen_random_matrix, gen_random_split_graph, gen_random_two_nested,
};
use twonest::graphs::{find_induced_gem, is_nested_graph, nested_under_partition, SplitGraph};
use twonest::oracle::{
    oracle_all_split_partitions, oracle_c1p, oracle_contains_configuration, oracle_nested,
    oracle_two_nested,
};
use twonest::recognition::{
    build_crossing_graph, crossing_pairs_step_right, first_crossing_pair, is_nested, is_two_nested,
    NestedResult, TwoNestedResult,
};
use twonest::stress::{run_stress, StressConfig, StressReport};
use twonest::{verify_certificate, BinaryMatrix, Graph, MatrixCertificate};

/// Certificates collected while running criteria 1 to 3, with the matrix
/// each one was issued for.
#[derive(Default)]
struct Emitted {
    certs: Mutex<Vec<(BinaryMatrix, MatrixCertificate)>>,
}

impl Emitted {
    fn push(&self, a: &BinaryMatrix, c: MatrixCertificate) {
        self.certs.lock().unwrap().push((a.clone(), c));
    }
}

struct Line {
    id: usize,
    name: &'static str,
    failures: Vec<String>,
    detail: String,
}

impl Line {
    fn print(&self, started: Instant) {
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {} {:<34} {status}  {} [{:.1}s]",
            self.id,
            self.name,
            self.detail,
            started.elapsed().as_secs_f64()
        );
        for f in self.failures.iter().take(10) {
            println!("    {f}");
        }
    }
}

fn all_small_matrices() -> Vec<BinaryMatrix> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 1..=4 {
            for bits in 0u32..1 << (n * m) {
                out.push(BinaryMatrix::from_fn(n, m, |i, j| bits >> (i * m + j) & 1 == 1).unwrap());
            }
        }
    }
    out
}

fn random_matrices(count: usize, max: usize, seed: u64) -> Vec<BinaryMatrix> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let n = rng.gen_range(1..=max);
            let m = rng.gen_range(1..=max);
            let p = rng.gen_range(0.15..0.85);
            gen_random_matrix(n, m, p, seed.wrapping_mul(1_000_003) ^ i as u64).unwrap()
        })
        .collect()
}

fn nested_agreement(a: &BinaryMatrix, emitted: &Emitted) -> Option<String> {
    let ours = match is_nested(a) {
        Ok(r) => r,
        Err(e) => return Some(format!("is_nested failed: {e}")),
    };
    let accepted = ours.accepted();
    let no_crossing = first_crossing_pair(a).is_none();
    let oracle = oracle_nested(a).unwrap();
    emitted.push(
        a,
        match ours {
            NestedResult::Nested { ordering } => MatrixCertificate::Nested { ordering },
            NestedResult::NotNested(w) => MatrixCertificate::G0(w),
        },
    );
    (accepted != no_crossing || accepted != oracle).then(|| {
        format!("{a:?}: is_nested {accepted}, no crossing pair {no_crossing}, oracle {oracle}")
    })
}

fn criterion_1(emitted: &Emitted) -> Line {
    let exhaustive = all_small_matrices();
    let random = random_matrices(10_000, 6, 1);
    let failures: Vec<String> = exhaustive
        .par_iter()
        .chain(random.par_iter())
        .filter_map(|a| nested_agreement(a, emitted))
        .collect();
    Line {
        id: 1,
        name: "nested equivalence",
        failures,
        detail: format!("{} exhaustive + {} random", exhaustive.len(), random.len()),
    }
}

fn two_nested_agreement(a: &BinaryMatrix, emitted: &Emitted) -> Option<String> {
    let ours = match is_two_nested(a) {
        Ok(r) => r,
        Err(e) => return Some(format!("is_two_nested failed: {e}")),
    };
    let accepted = ours.accepted();
    let oracle = oracle_two_nested(a).unwrap();
    emitted.push(a, two_nested_certificate(ours));
    (accepted != oracle).then(|| format!("{a:?}: is_two_nested {accepted}, oracle {oracle}"))
}

fn two_nested_certificate(r: TwoNestedResult) -> MatrixCertificate {
    match r {
        TwoNestedResult::TwoNested {
            ordering,
            bipartition,
        } => MatrixCertificate::TwoNested {
            ordering,
            bipartition,
        },
        TwoNestedResult::NotC1p(w) => MatrixCertificate::Tucker(w),
        TwoNestedResult::OddCycle { ordering, witness } => {
            MatrixCertificate::Configuration { ordering, witness }
        }
    }
}

fn criterion_2(emitted: &Emitted) -> Line {
    let random = random_matrices(10_000, 7, 2);
    let positives: Vec<BinaryMatrix> = (0..2_000u64)
        .map(|s| gen_random_two_nested(1 + (s % 7) as usize, 1 + (s / 7 % 7) as usize, s).unwrap())
        .collect();
    let mut failures: Vec<String> = random
        .par_iter()
        .chain(positives.par_iter())
        .filter_map(|a| two_nested_agreement(a, emitted))
        .collect();
    failures.extend(
        positives
            .iter()
            .filter(|a| !is_two_nested(a).unwrap().accepted())
            .map(|a| format!("generated positive rejected: {a:?}")),
    );
    Line {
        id: 2,
        name: "2-nested recognition",
        failures,
        detail: format!(
            "{} random + {} generated positives",
            random.len(),
            positives.len()
        ),
    }
}

fn delete_row(a: &BinaryMatrix, r: usize) -> BinaryMatrix {
    let rows: Vec<usize> = (0..a.n_rows()).filter(|&i| i != r).collect();
    let cols: Vec<usize> = (0..a.n_cols()).collect();
    a.submatrix(&rows, &cols).unwrap()
}

fn criterion_3(emitted: &Emitted) -> Line {
    let mut failures = Vec::new();
    let mut family = vec![("F0".to_string(), gen_f0(), 3)];
    for k in [5, 7, 9, 11] {
        let f1 = gen_f1(k).unwrap();
        let f2 = gen_f2(k).unwrap();
        if (f1.n_rows(), f1.n_cols()) != (k, k - 1) {
            failures.push(format!("F1({k}) is {}x{}", f1.n_rows(), f1.n_cols()));
        }
        if (f2.n_rows(), f2.n_cols()) != (k, k) {
            failures.push(format!("F2({k}) is {}x{}", f2.n_rows(), f2.n_cols()));
        }
        family.push((format!("F1({k})"), f1, k));
        family.push((format!("F2({k})"), f2, k));
    }
    for (name, a, k) in &family {
        let h = build_crossing_graph(a);
        let cycle: Vec<usize> = (0..*k).collect();
        if !h.is_chordless_odd_cycle(&cycle) || h.edges().len() != *k {
            failures.push(format!(
                "{name}: crossing graph is not the {k}-cycle 1..{k}"
            ));
        }
        let result = is_two_nested(a).unwrap();
        if result.accepted() {
            failures.push(format!("{name} accepted"));
        }
        emitted.push(a, two_nested_certificate(result));
        for r in 0..a.n_rows() {
            let smaller = delete_row(a, r);
            let result = is_two_nested(&smaller).unwrap();
            if !result.accepted() {
                failures.push(format!("{name} without row {} rejected", r + 1));
            }
            emitted.push(&smaller, two_nested_certificate(result));
        }
    }
    Line {
        id: 3,
        name: "forbidden families",
        failures,
        detail: format!("{} matrices and their row deletions", family.len()),
    }
}

fn tucker_is_minimal(a: &BinaryMatrix, rows: &[usize], cols: &[usize]) -> bool {
    let sub = a.submatrix(rows, cols).unwrap();
    if oracle_c1p(&sub).unwrap() {
        return false;
    }
    let all_rows: Vec<usize> = (0..sub.n_rows()).collect();
    let all_cols: Vec<usize> = (0..sub.n_cols()).collect();
    let rows_ok = (0..sub.n_rows()).all(|r| {
        let keep: Vec<usize> = all_rows.iter().copied().filter(|&i| i != r).collect();
        keep.is_empty() || oracle_c1p(&sub.submatrix(&keep, &all_cols).unwrap()).unwrap()
    });
    let cols_ok = (0..sub.n_cols()).all(|c| {
        let keep: Vec<usize> = all_cols.iter().copied().filter(|&j| j != c).collect();
        keep.is_empty() || oracle_c1p(&sub.submatrix(&all_rows, &keep).unwrap()).unwrap()
    });
    rows_ok && cols_ok
}

fn criterion_4(emitted: &Emitted, stress: &StressReport) -> Line {
    let certs = emitted.certs.lock().unwrap();
    let mut failures: Vec<String> = certs
        .par_iter()
        .filter_map(|(a, cert)| {
            if !verify_certificate(a, cert).unwrap_or(false) {
                return Some(format!("{a:?}: certificate {cert:?} rejected"));
            }
            match cert {
                MatrixCertificate::Configuration { witness, .. } => {
                    let target = witness.family.generate().unwrap();
                    oracle_contains_configuration(a, &target)
                        .unwrap()
                        .is_none()
                        .then(|| format!("{a:?}: oracle finds no {}", witness.family))
                }
                MatrixCertificate::Tucker(w) => (!tucker_is_minimal(a, &w.rows, &w.cols))
                    .then(|| format!("{a:?}: Tucker witness {w:?} is not minimal")),
                _ => None,
            }
        })
        .collect();

    let random = random_matrices(3_000, 7, 4);
    failures.extend(
        random
            .par_iter()
            .filter_map(|a| match test_c1p(a) {
                C1pResult::Witness(w) => (!is_valid_tucker_witness(a, &w).unwrap()
                    || !tucker_is_minimal(a, &w.rows, &w.cols))
                .then(|| format!("{a:?}: Tucker witness {w:?} is not minimal")),
                C1pResult::Ordering(_) => None,
            })
            .collect::<Vec<_>>(),
    );

    failures.extend(
        stress
            .failures
            .iter()
            .filter(|f| f.check.contains("certificate") || f.check.contains("configuration"))
            .map(|f| format!("stress instance {}: {}", f.index, f.check)),
    );
    Line {
        id: 4,
        name: "certificate soundness",
        failures,
        detail: format!(
            "{} certificates + {} Tucker checks + {} stress instances",
            certs.len(),
            random.len(),
            stress.instances
        ),
    }
}

fn threshold_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for choice in 0u32..1 << (n - 1) {
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                if choice >> (v - 1) & 1 == 1 {
                    for u in 0..v {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            out.push(g);
        }
    }
    out
}

fn criterion_5() -> Line {
    let random: Vec<Graph> = (0..5_000u64)
        .map(|s| gen_random_split_graph(1 + (s % 7) as usize, s).unwrap())
        .collect();
    let threshold = threshold_graphs(8);
    let findings = Mutex::new(Vec::new());
    let check = |g: &Graph, must_accept: bool| -> Option<String> {
        let partitions = oracle_all_split_partitions(g).unwrap();
        if partitions.is_empty() {
            return Some(format!("{g:?}: generated graph is not split"));
        }
        let per_partition: Vec<bool> = partitions
            .into_iter()
            .map(|(clique, stable)| {
                let sg = SplitGraph::new(g.clone(), clique, stable).unwrap();
                nested_under_partition(&sg).unwrap().is_ok()
            })
            .collect();
        let nested = per_partition.iter().any(|&x| x);
        if per_partition.iter().any(|&x| x != nested) {
            findings.lock().unwrap().push(format!("{g:?}"));
        }
        let gem_free = find_induced_gem(g).is_none();
        let recognizer = is_nested_graph(g).unwrap().accepted();
        if nested != gem_free || recognizer != gem_free {
            return Some(format!(
                "{g:?}: nested over partitions {nested}, recognizer {recognizer}, gem-free {gem_free}"
            ));
        }
        (must_accept && !nested).then(|| format!("{g:?}: threshold graph rejected"))
    };
    let mut failures: Vec<String> = random.par_iter().filter_map(|g| check(g, false)).collect();
    failures.extend(
        threshold
            .par_iter()
            .filter_map(|g| check(g, true))
            .collect::<Vec<_>>(),
    );
    let findings = findings.into_inner().unwrap();
    Line {
        id: 5,
        name: "split-graph gem characterization",
        failures,
        detail: format!(
            "{} random + {} threshold graphs, {} partition-dependent verdicts",
            random.len(),
            threshold.len(),
            findings.len()
        ),
    }
}

fn criterion_6(emitted: &Emitted, stress: &StressReport) -> Line {
    let certs = emitted.certs.lock().unwrap();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (a, cert) in certs.iter() {
        let ordering = match cert {
            MatrixCertificate::Nested { ordering }
            | MatrixCertificate::TwoNested { ordering, .. } => ordering,
            MatrixCertificate::Configuration { ordering, .. } => ordering,
            _ => continue,
        };
        checked += 1;
        if !crossing_pairs_step_right(&a.permute_columns(ordering).unwrap()).unwrap() {
            failures.push(format!("{a:?} under {ordering:?}"));
        }
    }
    failures.extend(
        stress
            .failures
            .iter()
            .filter(|f| f.check.contains("step-right"))
            .map(|f| format!("stress instance {}", f.index)),
    );
    Line {
        id: 6,
        name: "step-right crossing pairs",
        failures,
        detail: format!("{checked} ordered matrices + stress corpus"),
    }
}

fn criterion_7(stress: &StressReport) -> Line {
    let failures = stress
        .failures
        .iter()
        .filter(|f| f.check.contains("round-trip") || f.check.contains("parse back"))
        .map(|f| format!("stress instance {}: {}", f.index, f.check))
        .collect();
    Line {
        id: 7,
        name: "format round trips",
        failures,
        detail: format!("{} stress instances", stress.instances),
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let emitted = Emitted::default();
    let mut lines = Vec::new();

    let l = criterion_1(&emitted);
    l.print(started);
    lines.push(l);
    let l = criterion_2(&emitted);
    l.print(started);
    lines.push(l);
    let l = criterion_3(&emitted);
    l.print(started);
    lines.push(l);

    let stress = run_stress(&StressConfig {
        count: 4_000,
        max_rows: 8,
        max_cols: 8,
        seed: 2024,
    })
    .expect("stress run");
    let other: Vec<String> = stress
        .failures
        .iter()
        .map(|f| format!("stress instance {}: {}\n{}", f.index, f.check, f.instance))
        .collect();

    for l in [
        criterion_4(&emitted, &stress),
        criterion_5(),
        criterion_6(&emitted, &stress),
        criterion_7(&stress),
    ] {
        l.print(started);
        lines.push(l);
    }
    if !other.is_empty() {
        println!("stress failures:");
        for f in other.iter().take(10) {
            println!("    {f}");
        }
    }
    print!("{}", stress.summary_table());

    let failed = lines.iter().filter(|l| !l.failures.is_empty()).count();
    println!(
        "acceptance: {} of {} criteria passed",
        lines.len() - failed,
        lines.len()
    );
    if failed == 0 && other.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
