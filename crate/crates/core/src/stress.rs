//! Randomized cross-checking of every recognizer against the oracles.
//!
//! Instance `i` of a run depends only on the seed and `i`, so results are
//! the same however the work is spread over threads. Instances cycle
//! through random matrices, column-shuffled 2-nested matrices, planted
//! F-configurations, random split graphs and unrestricted random graphs.
//! The checks applied to each are those of [`check_matrix`] and
//! [`check_graph`].

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::c1p::{test_c1p, C1pResult};
use crate::certificate::{
    input_digest, verify_certificate, verify_graph_certificate, CertClass, CertificateDocument,
    GraphCertificate, MatrixCertificate, Payload,
};
use crate::error::{Error, Result};
use crate::generators::{
    random_matrix_with, random_split_graph_with, random_two_nested_with, FamilySpec,
};
use crate::graphs::{
    find_induced_gem, find_split_partition, is_nested_graph, is_two_nested_graph,
    nested_under_partition, two_nested_under_partition, Graph, NestedGraphResult, SplitGraph,
    SplitResult, TwoNestedGraphResult,
};
use crate::matrix::BinaryMatrix;
use crate::oracle::{
    oracle_all_split_partitions, oracle_c1p, oracle_contains_configuration, oracle_nested,
    oracle_two_nested, MAX_ORACLE_COLS, MAX_ORACLE_ROWS,
};
use crate::recognition::{
    crossing_pairs_step_right, first_crossing_pair, is_nested, is_two_nested, NestedResult,
    TwoNestedResult,
};

pub const MAX_STRESS_GRAPH_VERTICES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StressConfig {
    pub count: usize,
    pub max_rows: usize,
    pub max_cols: usize,
    pub seed: u64,
}

impl StressConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_rows == 0 || self.max_cols == 0 {
            return Err(Error::Usage("size bounds must be positive".into()));
        }
        if self.max_rows > MAX_ORACLE_ROWS || self.max_cols > MAX_ORACLE_COLS {
            return Err(Error::Usage(format!(
                "size bounds {}x{} exceed the oracle limits {MAX_ORACLE_ROWS}x{MAX_ORACLE_COLS}",
                self.max_rows, self.max_cols
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Matrix(BinaryMatrix),
    Graph(Graph),
}

impl Instance {
    pub fn to_text(&self) -> String {
        match self {
            Instance::Matrix(a) => a.to_text(),
            Instance::Graph(g) => g.to_text(),
        }
    }
}

/// Builds instance `index` of a run.
pub fn stress_instance(cfg: &StressConfig, index: usize) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(1..=cfg.max_rows);
    let m = rng.gen_range(1..=cfg.max_cols);
    Ok(match index % 8 {
        0..=2 => {
            let p = rng.gen_range(0.2..0.8);
            Instance::Matrix(random_matrix_with(&mut rng, n, m, p)?)
        }
        3 | 4 => {
            let a = random_two_nested_with(&mut rng, n, m)?;
            let mut pi: Vec<usize> = (0..m).collect();
            pi.shuffle(&mut rng);
            Instance::Matrix(a.permute_columns(&pi)?)
        }
        5 => Instance::Matrix(planted_configuration(&mut rng, cfg)?),
        6 => {
            let v = rng.gen_range(1..=MAX_STRESS_GRAPH_VERTICES);
            Instance::Graph(random_split_graph_with(&mut rng, v)?)
        }
        _ => {
            let v = rng.gen_range(1..=MAX_STRESS_GRAPH_VERTICES);
            let mut g = Graph::empty(v)?;
            for u in 0..v {
                for w in u + 1..v {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, w)?;
                    }
                }
            }
            Instance::Graph(g)
        }
    })
}

/// An F-family matrix that fits the bounds, padded with random interval
/// rows and random columns, then shuffled in both directions.
fn planted_configuration(rng: &mut ChaCha8Rng, cfg: &StressConfig) -> Result<BinaryMatrix> {
    let mut choices = vec![FamilySpec::F0];
    for k in (5..=cfg.max_rows).step_by(2) {
        choices.extend([FamilySpec::F1(k), FamilySpec::F2(k)]);
    }
    let fitting: Vec<BinaryMatrix> = choices
        .iter()
        .map(FamilySpec::generate)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|f| f.n_rows() <= cfg.max_rows && f.n_cols() <= cfg.max_cols)
        .collect();
    let Some(core) = fitting.choose(rng).cloned() else {
        return random_matrix_with(rng, cfg.max_rows, cfg.max_cols, 0.5);
    };
    let n = rng.gen_range(core.n_rows()..=cfg.max_rows);
    let m = rng.gen_range(core.n_cols()..=cfg.max_cols);
    let padding = random_two_nested_with(rng, n, m)?;
    let mut a = BinaryMatrix::from_fn(n, m, |i, j| {
        if i < core.n_rows() && j < core.n_cols() {
            core.get(i, j)
        } else if i < core.n_rows() {
            false
        } else {
            padding.get(i, j)
        }
    })?;
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..m).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    a = a.permute_rows(&rows)?.permute_columns(&cols)?;
    Ok(a)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub accepted: usize,
    pub rejected: usize,
}

impl Tally {
    fn add(&mut self, accepted: bool) {
        if accepted {
            self.accepted += 1;
        } else {
            self.rejected += 1;
        }
    }
}

/// Verdicts and failed checks for one matrix.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatrixOutcome {
    pub c1p: bool,
    pub nested: bool,
    pub two_nested: bool,
    pub certificates: Vec<MatrixCertificate>,
    pub problems: Vec<String>,
}

/// Verdicts, failed checks and partition-dependence findings for one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphOutcome {
    pub split: bool,
    pub nested: bool,
    pub two_nested: bool,
    pub problems: Vec<String>,
    pub findings: Vec<String>,
}

fn round_trip(doc: &CertificateDocument, problems: &mut Vec<String>) {
    let text = doc.to_text();
    match CertificateDocument::parse(&text) {
        Ok(back) if back == *doc && back.to_text() == text => {}
        Ok(_) => problems.push(format!("{} certificate does not round-trip", doc.class)),
        Err(e) => problems.push(format!(
            "{} certificate does not parse back: {e}",
            doc.class
        )),
    }
}

fn check_matrix_cert(
    a: &BinaryMatrix,
    class: CertClass,
    cert: &MatrixCertificate,
    digest: &str,
    out: &mut MatrixOutcome,
) {
    match verify_certificate(a, cert) {
        Ok(true) => {}
        Ok(false) => out
            .problems
            .push(format!("{class} certificate fails verification")),
        Err(e) => out
            .problems
            .push(format!("{class} certificate is malformed: {e}")),
    }
    let doc = CertificateDocument::new(class, Payload::Matrix(cert.clone()), digest.to_string());
    round_trip(&doc, &mut out.problems);
    out.certificates.push(cert.clone());
}

fn agree(out: &mut Vec<String>, what: &str, ours: bool, oracle: Result<bool>) {
    match oracle {
        Ok(o) if o == ours => {}
        Ok(o) => out.push(format!("{what}: recognizer says {ours}, oracle says {o}")),
        Err(e) => out.push(format!("{what}: oracle failed: {e}")),
    }
}

/// Runs every recognizer on `a` and checks the verdicts against the oracles,
/// each certificate against the verifier, the step-right property of the
/// consecutive-ones order, and text round trips.
pub fn check_matrix(a: &BinaryMatrix) -> MatrixOutcome {
    let mut out = MatrixOutcome::default();
    let text = a.to_text();
    let digest = input_digest(text.as_bytes());
    match BinaryMatrix::parse(&text) {
        Ok(back) if back == *a && back.to_text() == text => {}
        _ => out.problems.push("matrix text does not round-trip".into()),
    }

    let c1p = test_c1p(a);
    out.c1p = c1p.is_c1p();
    agree(&mut out.problems, "c1p", out.c1p, oracle_c1p(a));
    let cert = match &c1p {
        C1pResult::Ordering(ordering) => {
            match a
                .permute_columns(ordering)
                .map(|p| crossing_pairs_step_right(&p))
            {
                Ok(Ok(true)) => {}
                _ => out.problems.push("step-right property fails".into()),
            }
            MatrixCertificate::C1p {
                ordering: ordering.clone(),
            }
        }
        C1pResult::Witness(w) => MatrixCertificate::Tucker(w.clone()),
    };
    check_matrix_cert(a, CertClass::C1p, &cert, &digest, &mut out);

    match is_nested(a) {
        Ok(result) => {
            out.nested = result.accepted();
            agree(&mut out.problems, "nested", out.nested, oracle_nested(a));
            if out.nested != first_crossing_pair(a).is_none() {
                out.problems
                    .push("nested verdict disagrees with the crossing-pair test".into());
            }
            let cert = match result {
                NestedResult::Nested { ordering } => MatrixCertificate::Nested { ordering },
                NestedResult::NotNested(w) => MatrixCertificate::G0(w),
            };
            check_matrix_cert(a, CertClass::Nested, &cert, &digest, &mut out);
        }
        Err(e) => out.problems.push(format!("is_nested failed: {e}")),
    }

    match is_two_nested(a) {
        Ok(result) => {
            out.two_nested = result.accepted();
            if a.n_rows() <= MAX_ORACLE_ROWS && a.n_cols() <= MAX_ORACLE_COLS {
                agree(
                    &mut out.problems,
                    "2nested",
                    out.two_nested,
                    oracle_two_nested(a),
                );
            }
            let cert = match result {
                TwoNestedResult::TwoNested {
                    ordering,
                    bipartition,
                } => MatrixCertificate::TwoNested {
                    ordering,
                    bipartition,
                },
                TwoNestedResult::NotC1p(w) => MatrixCertificate::Tucker(w),
                TwoNestedResult::OddCycle { ordering, witness } => {
                    confirm_configuration(a, &witness.family, &mut out.problems);
                    MatrixCertificate::Configuration { ordering, witness }
                }
            };
            check_matrix_cert(a, CertClass::TwoNested, &cert, &digest, &mut out);
        }
        Err(e) => out.problems.push(format!("is_two_nested failed: {e}")),
    }
    out
}

fn confirm_configuration(
    a: &BinaryMatrix,
    family: &crate::generators::FamilySpec,
    problems: &mut Vec<String>,
) {
    let found = family
        .generate()
        .and_then(|target| oracle_contains_configuration(a, &target));
    match found {
        Ok(Some(_)) => {}
        Ok(None) => problems.push(format!("oracle finds no {family} configuration")),
        Err(e) => problems.push(format!("configuration oracle failed: {e}")),
    }
}

fn check_graph_cert(
    g: &Graph,
    class: CertClass,
    cert: GraphCertificate,
    digest: &str,
    problems: &mut Vec<String>,
) {
    match verify_graph_certificate(g, &cert) {
        Ok(true) => {}
        Ok(false) => problems.push(format!("{class} certificate fails verification")),
        Err(e) => problems.push(format!("{class} certificate is malformed: {e}")),
    }
    let doc = CertificateDocument::new(class, Payload::Graph(cert), digest.to_string());
    round_trip(&doc, problems);
}

/// Per-partition verdicts over every split partition the oracle lists:
/// `(nested, 2-nested)` for each.
pub fn verdicts_by_partition(g: &Graph) -> Result<Vec<(SplitGraph, bool, bool)>> {
    oracle_all_split_partitions(g)?
        .into_iter()
        .map(|(clique, stable)| {
            let sg = SplitGraph::new(g.clone(), clique, stable)?;
            let nested = nested_under_partition(&sg)?.is_ok();
            let two = two_nested_under_partition(&sg)?.accepted();
            Ok((sg, nested, two))
        })
        .collect()
}

fn oracle_graph_two_nested(sg: &SplitGraph) -> Result<bool> {
    if sg.clique.is_empty() || sg.stable.is_empty() {
        return Ok(true);
    }
    oracle_two_nested(&crate::graphs::adjacency_matrix_sk(sg)?)
}

pub fn check_graph(g: &Graph) -> GraphOutcome {
    let mut out = GraphOutcome::default();
    let text = g.to_text();
    let digest = input_digest(text.as_bytes());
    match Graph::parse(&text) {
        Ok(back) if back == *g && back.to_text() == text => {}
        _ => out.problems.push("graph text does not round-trip".into()),
    }

    let partitions = match verdicts_by_partition(g) {
        Ok(p) => p,
        Err(e) => {
            out.problems.push(format!("partition oracle failed: {e}"));
            return out;
        }
    };
    out.split = matches!(find_split_partition(g), SplitResult::Split(_));
    if out.split == partitions.is_empty() {
        out.problems
            .push("split verdict disagrees with the partition oracle".into());
    }

    let gem_free = find_induced_gem(g).is_none();
    match is_nested_graph(g) {
        Ok(result) => {
            out.nested = result.accepted();
            let cert = match result {
                NestedGraphResult::Nested { split, ordering } => GraphCertificate::Nested {
                    clique: split.clique,
                    stable: split.stable,
                    ordering,
                },
                NestedGraphResult::Gem(w) => GraphCertificate::Gem(w),
                NestedGraphResult::NotSplit(w) => GraphCertificate::NotSplit(w),
            };
            check_graph_cert(g, CertClass::NestedGraph, cert, &digest, &mut out.problems);
        }
        Err(e) => out.problems.push(format!("is_nested_graph failed: {e}")),
    }
    match is_two_nested_graph(g) {
        Ok(result) => {
            out.two_nested = result.accepted();
            let cert = match result {
                TwoNestedGraphResult::TwoNested {
                    split,
                    ordering,
                    bipartition,
                } => GraphCertificate::TwoNested {
                    clique: split.clique,
                    stable: split.stable,
                    ordering,
                    bipartition,
                },
                TwoNestedGraphResult::Rejected { split, certificate } => {
                    GraphCertificate::Rejected {
                        clique: split.clique,
                        stable: split.stable,
                        certificate,
                    }
                }
                TwoNestedGraphResult::NotSplit(w) => GraphCertificate::NotSplit(w),
            };
            check_graph_cert(
                g,
                CertClass::TwoNestedGraph,
                cert,
                &digest,
                &mut out.problems,
            );
        }
        Err(e) => out
            .problems
            .push(format!("is_two_nested_graph failed: {e}")),
    }

    if out.split {
        let any_nested = partitions.iter().any(|p| p.1);
        if out.nested != any_nested {
            out.problems
                .push("nested-graph verdict misses an accepting partition".into());
        }
        if any_nested != gem_free {
            out.problems.push(format!(
                "nested over all partitions is {any_nested} but gem-free is {gem_free}"
            ));
        }
        let any_two = partitions.iter().any(|p| p.2);
        if out.two_nested != any_two {
            out.problems
                .push("2nested-graph verdict misses an accepting partition".into());
        }
        let oracle_two = partitions
            .iter()
            .map(|p| oracle_graph_two_nested(&p.0))
            .collect::<Result<Vec<bool>>>();
        match oracle_two {
            Ok(v) if v.iter().any(|&x| x) == out.two_nested => {}
            Ok(_) => out
                .problems
                .push("2nested-graph verdict disagrees with the oracle".into()),
            Err(e) => out.problems.push(format!("2nested oracle failed: {e}")),
        }
        if out.nested && !out.two_nested {
            out.problems
                .push("nested graph rejected as 2-nested".into());
        }
        if partitions.iter().any(|p| p.1) && partitions.iter().any(|p| !p.1) {
            out.findings
                .push("nested verdict depends on the split partition".into());
        }
        if partitions.iter().any(|p| p.2) && partitions.iter().any(|p| !p.2) {
            out.findings
                .push("2-nested verdict depends on the split partition".into());
        }
    } else if out.nested || out.two_nested {
        out.problems.push("non-split graph accepted".into());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub check: String,
    pub instance: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StressReport {
    pub instances: usize,
    pub matrices: usize,
    pub graphs: usize,
    pub c1p: Tally,
    pub nested: Tally,
    pub two_nested: Tally,
    pub nested_graph: Tally,
    pub two_nested_graph: Tally,
    pub not_split: usize,
    pub failures: Vec<Failure>,
    /// Graph instances whose verdict differs between split partitions.
    pub partition_findings: Vec<(usize, String)>,
}

impl StressReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<16} {:>9} {:>9}", "class", "accepted", "rejected");
        for (name, t) in [
            ("c1p", self.c1p),
            ("nested", self.nested),
            ("2nested", self.two_nested),
            ("nested-graph", self.nested_graph),
            ("2nested-graph", self.two_nested_graph),
        ] {
            let _ = writeln!(s, "{name:<16} {:>9} {:>9}", t.accepted, t.rejected);
        }
        let _ = writeln!(
            s,
            "instances {} (matrices {}, graphs {}, not split {})",
            self.instances, self.matrices, self.graphs, self.not_split
        );
        let _ = writeln!(
            s,
            "failures {}, partition-dependent graphs {}",
            self.failures.len(),
            self.partition_findings.len()
        );
        s
    }
}

enum Outcome {
    Matrix(MatrixOutcome),
    Graph(GraphOutcome),
}

pub fn run_stress(cfg: &StressConfig) -> Result<StressReport> {
    cfg.validate()?;
    let results: Vec<(Instance, Outcome)> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            let inst = stress_instance(cfg, i)?;
            let outcome = match &inst {
                Instance::Matrix(a) => Outcome::Matrix(check_matrix(a)),
                Instance::Graph(g) => Outcome::Graph(check_graph(g)),
            };
            Ok((inst, outcome))
        })
        .collect::<Result<_>>()?;

    let mut report = StressReport {
        instances: cfg.count,
        ..StressReport::default()
    };
    for (index, (inst, outcome)) in results.into_iter().enumerate() {
        let problems = match outcome {
            Outcome::Matrix(o) => {
                report.matrices += 1;
                report.c1p.add(o.c1p);
                report.nested.add(o.nested);
                report.two_nested.add(o.two_nested);
                o.problems
            }
            Outcome::Graph(o) => {
                report.graphs += 1;
                if o.split {
                    report.nested_graph.add(o.nested);
                    report.two_nested_graph.add(o.two_nested);
                } else {
                    report.not_split += 1;
                }
                report
                    .partition_findings
                    .extend(o.findings.into_iter().map(|f| (index, f)));
                o.problems
            }
        };
        for check in problems {
            report.failures.push(Failure {
                index,
                check,
                instance: inst.to_text(),
            });
        }
    }
    Ok(report)
}
