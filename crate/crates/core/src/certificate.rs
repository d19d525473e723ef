//! Certificates, their independent verification, and the line-oriented
//! certificate document.
//!
//! Verification uses only the matrix and graph primitives plus the
//! consecutive-ones test for Tucker witnesses; it never calls the
//! recognizers whose output it checks.
//!
//! Document layout, one `key: value` line per present field in this order:
//!
//! ```text
//! verdict class family k rows cols cycle path apex vertices
//! clique stable ordering part1 part2 digest
//! ```
//!
//! Index lists are space separated and 1-based. An empty list is written as
//! the bare key followed by a colon. For graph certificates every index is a
//! vertex id; matrix row and column positions are recovered from `stable`
//! and `clique`.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::c1p::{is_valid_tucker_witness, TuckerWitness};
use crate::error::{Error, Result};
use crate::generators::FamilySpec;
use crate::graphs::{
    adjacency_matrix_sk, is_split_partition, GemWitness, Graph, NotSplitWitness, Obstruction,
    SplitGraph,
};
use crate::matrix::{check_permutation, BinaryMatrix};
use crate::recognition::{reads_as, Bipartition, ConfigWitness, G0Witness};

/// A certificate about a matrix. Indices are 0-based positions in the
/// matrix the certificate was issued for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixCertificate {
    C1p {
        ordering: Vec<usize>,
    },
    Nested {
        ordering: Vec<usize>,
    },
    TwoNested {
        ordering: Vec<usize>,
        bipartition: Bipartition,
    },
    Tucker(TuckerWitness),
    G0(G0Witness),
    Configuration {
        ordering: Vec<usize>,
        witness: ConfigWitness,
    },
}

impl MatrixCertificate {
    pub fn is_positive(&self) -> bool {
        matches!(
            self,
            MatrixCertificate::C1p { .. }
                | MatrixCertificate::Nested { .. }
                | MatrixCertificate::TwoNested { .. }
        )
    }
}

/// A certificate about a graph. Vertex ids are 0-based; the nested matrix
/// certificate in `Rejected` indexes rows by position in `stable` and
/// columns by position in `clique`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphCertificate {
    Nested {
        clique: Vec<usize>,
        stable: Vec<usize>,
        ordering: Vec<usize>,
    },
    TwoNested {
        clique: Vec<usize>,
        stable: Vec<usize>,
        ordering: Vec<usize>,
        bipartition: Bipartition,
    },
    Gem(GemWitness),
    NotSplit(NotSplitWitness),
    Rejected {
        clique: Vec<usize>,
        stable: Vec<usize>,
        certificate: MatrixCertificate,
    },
}

impl GraphCertificate {
    pub fn is_positive(&self) -> bool {
        matches!(
            self,
            GraphCertificate::Nested { .. } | GraphCertificate::TwoNested { .. }
        )
    }
}

fn check_rows(a: &BinaryMatrix, rows: &[usize]) -> Result<()> {
    match rows.iter().find(|&&i| i >= a.n_rows()) {
        Some(i) => Err(Error::Usage(format!(
            "certificate row {} out of range",
            i + 1
        ))),
        None => Ok(()),
    }
}

fn check_cols(a: &BinaryMatrix, cols: &[usize]) -> Result<()> {
    match cols.iter().find(|&&j| j >= a.n_cols()) {
        Some(j) => Err(Error::Usage(format!(
            "certificate column {} out of range",
            j + 1
        ))),
        None => Ok(()),
    }
}

fn crossing_free(a: &BinaryMatrix, class: &[usize]) -> bool {
    class
        .iter()
        .enumerate()
        .all(|(x, &i)| class[x + 1..].iter().all(|&k| i == k || !a.crosses(i, k)))
}

fn covers_rows_once(n: usize, b: &Bipartition) -> bool {
    let mut seen = vec![false; n];
    for &i in b.first.iter().chain(&b.second) {
        if std::mem::replace(&mut seen[i], true) {
            return false;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Checks a certificate against a matrix. Structural defects (indices out
/// of range, orderings that are not permutations) are usage errors; a
/// well-formed certificate that does not hold gives `Ok(false)`.
pub fn verify_certificate(a: &BinaryMatrix, cert: &MatrixCertificate) -> Result<bool> {
    match cert {
        MatrixCertificate::C1p { ordering } => {
            check_permutation(ordering, a.n_cols())?;
            Ok(a.permute_columns(ordering)?.has_consecutive_rows())
        }
        MatrixCertificate::Nested { ordering } => {
            check_permutation(ordering, a.n_cols())?;
            let all: Vec<usize> = (0..a.n_rows()).collect();
            Ok(a.permute_columns(ordering)?.has_consecutive_rows() && crossing_free(a, &all))
        }
        MatrixCertificate::TwoNested {
            ordering,
            bipartition,
        } => {
            check_permutation(ordering, a.n_cols())?;
            check_rows(a, &bipartition.first)?;
            check_rows(a, &bipartition.second)?;
            Ok(a.permute_columns(ordering)?.has_consecutive_rows()
                && covers_rows_once(a.n_rows(), bipartition)
                && crossing_free(a, &bipartition.first)
                && crossing_free(a, &bipartition.second))
        }
        MatrixCertificate::Tucker(w) => {
            check_rows(a, &w.rows)?;
            check_cols(a, &w.cols)?;
            if w.rows.is_empty() || w.cols.is_empty() {
                return Ok(false);
            }
            let sub = a.submatrix(&w.rows, &w.cols)?;
            let family_ok = match w.family {
                None => true,
                Some(spec) if spec.is_tucker() => {
                    crate::c1p::equal_up_to_permutation(&sub, &spec.generate()?)
                }
                Some(_) => false,
            };
            Ok(family_ok && is_valid_tucker_witness(a, w)?)
        }
        MatrixCertificate::G0(w) => {
            check_rows(a, &w.rows)?;
            check_cols(a, &w.cols)?;
            Ok(w.holds_in(a))
        }
        MatrixCertificate::Configuration { ordering, witness } => {
            check_permutation(ordering, a.n_cols())?;
            check_rows(a, &witness.rows)?;
            check_rows(a, &witness.cycle)?;
            check_cols(a, &witness.cols)?;
            let (target, len) = match witness.family {
                FamilySpec::F0 => (FamilySpec::F0.generate()?, 3),
                FamilySpec::F1(k) | FamilySpec::F2(k) => match witness.family.generate() {
                    Ok(t) => (t, k),
                    Err(_) => return Ok(false),
                },
                _ => return Ok(false),
            };
            let mut cycle_rows = witness.cycle.clone();
            let mut rows = witness.rows.clone();
            cycle_rows.sort_unstable();
            rows.sort_unstable();
            Ok(witness.cycle.len() == len
                && cycle_rows == rows
                && a.permute_columns(ordering)?.has_consecutive_rows()
                && crate::recognition::build_crossing_graph(a)
                    .is_chordless_odd_cycle(&witness.cycle)
                && reads_as(a, &witness.rows, &witness.cols, &target))
        }
    }
}

fn check_vertices(g: &Graph, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(Error::Usage(format!("vertex {} out of range", v + 1))),
        None => Ok(()),
    }
}

fn positions(order: &[usize], ids: &[usize]) -> Option<Vec<usize>> {
    ids.iter()
        .map(|id| order.iter().position(|x| x == id))
        .collect()
}

pub fn verify_graph_certificate(g: &Graph, cert: &GraphCertificate) -> Result<bool> {
    match cert {
        GraphCertificate::Gem(w) => {
            check_vertices(g, &w.path)?;
            check_vertices(g, &[w.apex])?;
            Ok(w.holds_in(g))
        }
        GraphCertificate::NotSplit(w) => {
            check_vertices(g, &w.vertices)?;
            Ok(w.holds_in(g))
        }
        GraphCertificate::Nested {
            clique,
            stable,
            ordering,
        } => {
            check_vertices(g, clique)?;
            check_vertices(g, stable)?;
            check_vertices(g, ordering)?;
            if !is_split_partition(g, clique, stable) {
                return Ok(false);
            }
            let Some(pi) = positions(clique, ordering) else {
                return Ok(false);
            };
            if check_permutation(&pi, clique.len()).is_err() {
                return Ok(false);
            }
            if stable.is_empty() || clique.is_empty() {
                return Ok(true);
            }
            let a = split_matrix(g, clique, stable)?;
            verify_certificate(&a, &MatrixCertificate::Nested { ordering: pi })
        }
        GraphCertificate::TwoNested {
            clique,
            stable,
            ordering,
            bipartition,
        } => {
            check_vertices(g, clique)?;
            check_vertices(g, stable)?;
            check_vertices(g, ordering)?;
            check_vertices(g, &bipartition.first)?;
            check_vertices(g, &bipartition.second)?;
            if !is_split_partition(g, clique, stable) {
                return Ok(false);
            }
            let (Some(pi), Some(first), Some(second)) = (
                positions(clique, ordering),
                positions(stable, &bipartition.first),
                positions(stable, &bipartition.second),
            ) else {
                return Ok(false);
            };
            if check_permutation(&pi, clique.len()).is_err() {
                return Ok(false);
            }
            let bip = Bipartition { first, second };
            if stable.is_empty() || clique.is_empty() {
                return Ok(covers_rows_once(stable.len(), &bip));
            }
            let a = split_matrix(g, clique, stable)?;
            verify_certificate(
                &a,
                &MatrixCertificate::TwoNested {
                    ordering: pi,
                    bipartition: bip,
                },
            )
        }
        GraphCertificate::Rejected {
            clique,
            stable,
            certificate,
        } => {
            check_vertices(g, clique)?;
            check_vertices(g, stable)?;
            if certificate.is_positive()
                || stable.is_empty()
                || clique.is_empty()
                || !is_split_partition(g, clique, stable)
            {
                return Ok(false);
            }
            let a = split_matrix(g, clique, stable)?;
            verify_certificate(&a, certificate)
        }
    }
}

fn split_matrix(g: &Graph, clique: &[usize], stable: &[usize]) -> Result<BinaryMatrix> {
    adjacency_matrix_sk(&SplitGraph {
        graph: g.clone(),
        clique: clique.to_vec(),
        stable: stable.to_vec(),
    })
}

/// SHA-256 of the raw input bytes, lowercase hex.
pub fn input_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Accept => "accept",
            Verdict::Reject => "reject",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertClass {
    Nested,
    TwoNested,
    C1p,
    NestedGraph,
    TwoNestedGraph,
}

impl CertClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertClass::Nested => "nested",
            CertClass::TwoNested => "2nested",
            CertClass::C1p => "c1p",
            CertClass::NestedGraph => "nested-graph",
            CertClass::TwoNestedGraph => "2nested-graph",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "nested" => CertClass::Nested,
            "2nested" => CertClass::TwoNested,
            "c1p" => CertClass::C1p,
            "nested-graph" => CertClass::NestedGraph,
            "2nested-graph" => CertClass::TwoNestedGraph,
            _ => return None,
        })
    }

    pub fn is_graph(&self) -> bool {
        matches!(self, CertClass::NestedGraph | CertClass::TwoNestedGraph)
    }
}

impl fmt::Display for CertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Matrix(MatrixCertificate),
    Graph(GraphCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateDocument {
    pub verdict: Verdict,
    pub class: CertClass,
    pub payload: Payload,
    pub digest: String,
}

const KEYS: [&str; 16] = [
    "verdict", "class", "family", "k", "rows", "cols", "cycle", "path", "apex", "vertices",
    "clique", "stable", "ordering", "part1", "part2", "digest",
];

#[derive(Default)]
struct Fields {
    values: [Option<String>; 16],
}

impl Fields {
    fn put(&mut self, key: &str, value: String) {
        let idx = KEYS.iter().position(|k| *k == key).expect("unknown key");
        self.values[idx] = Some(value);
    }

    fn list(&mut self, key: &str, xs: &[usize]) {
        self.put(
            key,
            xs.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
    }

    fn take(&mut self, key: &str) -> Option<String> {
        let idx = KEYS.iter().position(|k| *k == key).expect("unknown key");
        self.values[idx].take()
    }

    fn require(&mut self, key: &str) -> Result<String> {
        self.take(key)
            .ok_or_else(|| Error::Usage(format!("certificate is missing the {key:?} field")))
    }

    fn require_list(&mut self, key: &str) -> Result<Vec<usize>> {
        let raw = self.require(key)?;
        if raw.is_empty() {
            return Ok(Vec::new());
        }
        raw.split(' ')
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 && (t == "1" || !t.starts_with('0')) => Ok(v - 1),
                _ => Err(Error::Usage(format!("bad index {t:?} in {key:?}"))),
            })
            .collect()
    }

    fn ensure_empty(&self) -> Result<()> {
        match self.values.iter().position(Option::is_some) {
            Some(idx) => Err(Error::Usage(format!(
                "field {:?} does not belong in this certificate",
                KEYS[idx]
            ))),
            None => Ok(()),
        }
    }
}

fn put_family(f: &mut Fields, spec: FamilySpec) {
    f.put("family", spec.name().to_string());
    if let Some(k) = spec.parameter() {
        f.put("k", k.to_string());
    }
}

fn take_family(f: &mut Fields, name: &str) -> Result<FamilySpec> {
    let k = match f.take("k") {
        Some(k) => Some(
            k.parse::<usize>()
                .map_err(|_| Error::Usage(format!("bad parameter k {k:?}")))?,
        ),
        None => None,
    };
    FamilySpec::from_parts(name, k)
}

fn map_ids(order: &[usize], xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|&i| order[i]).collect()
}

fn unmap_ids(order: &[usize], xs: &[usize], what: &str) -> Result<Vec<usize>> {
    positions(order, xs).ok_or_else(|| {
        Error::Usage(format!(
            "{what} lists a vertex outside its side of the partition"
        ))
    })
}

impl CertificateDocument {
    pub fn new(class: CertClass, payload: Payload, digest: String) -> Self {
        let positive = match &payload {
            Payload::Matrix(c) => c.is_positive(),
            Payload::Graph(c) => c.is_positive(),
        };
        CertificateDocument {
            verdict: if positive {
                Verdict::Accept
            } else {
                Verdict::Reject
            },
            class,
            payload,
            digest,
        }
    }

    pub fn to_text(&self) -> String {
        let mut f = Fields::default();
        f.put("verdict", self.verdict.as_str().into());
        f.put("class", self.class.as_str().into());
        match &self.payload {
            Payload::Matrix(c) => write_matrix_cert(&mut f, c, None),
            Payload::Graph(c) => match c {
                GraphCertificate::Nested {
                    clique,
                    stable,
                    ordering,
                } => {
                    f.list("clique", clique);
                    f.list("stable", stable);
                    f.list("ordering", ordering);
                }
                GraphCertificate::TwoNested {
                    clique,
                    stable,
                    ordering,
                    bipartition,
                } => {
                    f.list("clique", clique);
                    f.list("stable", stable);
                    f.list("ordering", ordering);
                    f.list("part1", &bipartition.first);
                    f.list("part2", &bipartition.second);
                }
                GraphCertificate::Gem(w) => {
                    f.put("family", "gem".into());
                    f.list("path", &w.path);
                    f.list("apex", &[w.apex]);
                }
                GraphCertificate::NotSplit(w) => {
                    f.put("family", w.obstruction.name().into());
                    f.list("vertices", &w.vertices);
                }
                GraphCertificate::Rejected {
                    clique,
                    stable,
                    certificate,
                } => {
                    f.list("clique", clique);
                    f.list("stable", stable);
                    write_matrix_cert(&mut f, certificate, Some((clique, stable)));
                }
            },
        }
        f.put("digest", self.digest.clone());

        let mut out = String::new();
        for (key, value) in KEYS.iter().zip(&f.values) {
            if let Some(v) = value {
                out.push_str(key);
                out.push(':');
                if !v.is_empty() {
                    out.push(' ');
                    out.push_str(v);
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines = crate::matrix::split_terminated_lines(text)?;
        let mut f = Fields::default();
        let mut last_key = None;
        for (n, line) in lines.iter().enumerate() {
            let line_no = n + 1;
            let Some((key, rest)) = line.split_once(':') else {
                return Err(Error::parse(line_no, 1, "expected `key: value`"));
            };
            let Some(idx) = KEYS.iter().position(|k| *k == key) else {
                return Err(Error::parse(line_no, 1, format!("unknown key {key:?}")));
            };
            if last_key.is_some_and(|l| l >= idx) {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("key {key:?} out of order or repeated"),
                ));
            }
            last_key = Some(idx);
            let value = if rest.is_empty() {
                String::new()
            } else {
                let Some(v) = rest.strip_prefix(' ') else {
                    return Err(Error::parse(
                        line_no,
                        key.len() + 2,
                        "expected a space after the colon",
                    ));
                };
                if v.is_empty() || v.starts_with(' ') || v.ends_with(' ') || v.contains("  ") {
                    return Err(Error::parse(line_no, key.len() + 3, "irregular spacing"));
                }
                v.to_string()
            };
            f.values[idx] = Some(value);
        }
        let verdict = match f.require("verdict")?.as_str() {
            "accept" => Verdict::Accept,
            "reject" => Verdict::Reject,
            other => return Err(Error::Usage(format!("unknown verdict {other:?}"))),
        };
        let class_name = f.require("class")?;
        let class = CertClass::from_name(&class_name)
            .ok_or_else(|| Error::Usage(format!("unknown class {class_name:?}")))?;
        let digest = f.require("digest")?;
        let family = f.take("family");

        let payload = if class.is_graph() {
            Payload::Graph(read_graph_cert(&mut f, class, family.as_deref())?)
        } else {
            Payload::Matrix(read_matrix_cert(&mut f, class, family.as_deref(), None)?)
        };
        f.ensure_empty()?;
        let doc = CertificateDocument::new(class, payload, digest);
        if doc.verdict != verdict {
            return Err(Error::Usage(format!(
                "verdict {:?} does not match the certificate contents",
                verdict.as_str()
            )));
        }
        Ok(doc)
    }
}

/// Writes a matrix certificate. With `ids = Some((clique, stable))` rows are
/// written as stable vertex ids and columns as clique vertex ids.
fn write_matrix_cert(f: &mut Fields, c: &MatrixCertificate, ids: Option<(&[usize], &[usize])>) {
    let rows = |xs: &[usize]| match ids {
        Some((_, stable)) => map_ids(stable, xs),
        None => xs.to_vec(),
    };
    let cols = |xs: &[usize]| match ids {
        Some((clique, _)) => map_ids(clique, xs),
        None => xs.to_vec(),
    };
    match c {
        MatrixCertificate::C1p { ordering } | MatrixCertificate::Nested { ordering } => {
            f.list("ordering", &cols(ordering));
        }
        MatrixCertificate::TwoNested {
            ordering,
            bipartition,
        } => {
            f.list("ordering", &cols(ordering));
            f.list("part1", &rows(&bipartition.first));
            f.list("part2", &rows(&bipartition.second));
        }
        MatrixCertificate::Tucker(w) => {
            match w.family {
                Some(spec) => put_family(f, spec),
                None => f.put("family", "unclassified".into()),
            }
            f.list("rows", &rows(&w.rows));
            f.list("cols", &cols(&w.cols));
        }
        MatrixCertificate::G0(w) => {
            f.put("family", "G0".into());
            f.list("rows", &rows(&w.rows));
            f.list("cols", &cols(&w.cols));
        }
        MatrixCertificate::Configuration { ordering, witness } => {
            put_family(f, witness.family);
            f.list("rows", &rows(&witness.rows));
            f.list("cols", &cols(&witness.cols));
            f.list("cycle", &rows(&witness.cycle));
            f.list("ordering", &cols(ordering));
        }
    }
}

fn read_matrix_cert(
    f: &mut Fields,
    class: CertClass,
    family: Option<&str>,
    ids: Option<(&[usize], &[usize])>,
) -> Result<MatrixCertificate> {
    let rows = |f: &mut Fields, key: &str| -> Result<Vec<usize>> {
        let xs = f.require_list(key)?;
        match ids {
            Some((_, stable)) => unmap_ids(stable, &xs, key),
            None => Ok(xs),
        }
    };
    let cols = |f: &mut Fields, key: &str| -> Result<Vec<usize>> {
        let xs = f.require_list(key)?;
        match ids {
            Some((clique, _)) => unmap_ids(clique, &xs, key),
            None => Ok(xs),
        }
    };
    let cert = match (class, family) {
        (CertClass::C1p, None) => MatrixCertificate::C1p {
            ordering: cols(f, "ordering")?,
        },
        (CertClass::Nested, None) => MatrixCertificate::Nested {
            ordering: cols(f, "ordering")?,
        },
        (CertClass::TwoNested | CertClass::TwoNestedGraph, None) => MatrixCertificate::TwoNested {
            ordering: cols(f, "ordering")?,
            bipartition: Bipartition {
                first: rows(f, "part1")?,
                second: rows(f, "part2")?,
            },
        },
        (CertClass::Nested, Some("G0")) => {
            let r = rows(f, "rows")?;
            let c = cols(f, "cols")?;
            let (Ok(r), Ok(c)) = (<[usize; 2]>::try_from(r), <[usize; 3]>::try_from(c)) else {
                return Err(Error::Usage("G0 witness needs 2 rows and 3 columns".into()));
            };
            MatrixCertificate::G0(G0Witness { rows: r, cols: c })
        }
        (CertClass::C1p | CertClass::TwoNested | CertClass::TwoNestedGraph, Some(name))
            if name == "unclassified" || name.starts_with('M') =>
        {
            let family = if name == "unclassified" {
                None
            } else {
                Some(take_family(f, name)?)
            };
            MatrixCertificate::Tucker(TuckerWitness {
                rows: rows(f, "rows")?,
                cols: cols(f, "cols")?,
                family,
            })
        }
        (CertClass::TwoNested | CertClass::TwoNestedGraph, Some(name @ ("F0" | "F1" | "F2"))) => {
            let family = take_family(f, name)?;
            let witness_rows = rows(f, "rows")?;
            let witness_cols = cols(f, "cols")?;
            let cycle = rows(f, "cycle")?;
            MatrixCertificate::Configuration {
                ordering: cols(f, "ordering")?,
                witness: ConfigWitness {
                    family,
                    rows: witness_rows,
                    cols: witness_cols,
                    cycle,
                },
            }
        }
        (_, Some(name)) => {
            return Err(Error::Usage(format!(
                "family {name:?} does not fit class {}",
                class.as_str()
            )))
        }
        (_, None) => return Err(Error::Usage("certificate is missing its family".into())),
    };
    Ok(cert)
}

fn read_graph_cert(
    f: &mut Fields,
    class: CertClass,
    family: Option<&str>,
) -> Result<GraphCertificate> {
    if let Some(obstruction) = family.and_then(Obstruction::from_name) {
        return Ok(GraphCertificate::NotSplit(NotSplitWitness {
            obstruction,
            vertices: f.require_list("vertices")?,
        }));
    }
    if family == Some("gem") {
        if class != CertClass::NestedGraph {
            return Err(Error::Usage("gem witnesses belong to nested-graph".into()));
        }
        let path = f.require_list("path")?;
        let apex = f.require_list("apex")?;
        let (Ok(path), [apex]) = (<[usize; 4]>::try_from(path), apex.as_slice()) else {
            return Err(Error::Usage(
                "gem needs a 4-vertex path and one apex".into(),
            ));
        };
        return Ok(GraphCertificate::Gem(GemWitness { path, apex: *apex }));
    }
    let clique = f.require_list("clique")?;
    let stable = f.require_list("stable")?;
    match (class, family) {
        (CertClass::NestedGraph, None) => Ok(GraphCertificate::Nested {
            ordering: f.require_list("ordering")?,
            clique,
            stable,
        }),
        (CertClass::TwoNestedGraph, None) => Ok(GraphCertificate::TwoNested {
            ordering: f.require_list("ordering")?,
            bipartition: Bipartition {
                first: f.require_list("part1")?,
                second: f.require_list("part2")?,
            },
            clique,
            stable,
        }),
        (CertClass::TwoNestedGraph, Some(_)) => {
            let certificate = read_matrix_cert(f, class, family, Some((&clique, &stable)))?;
            Ok(GraphCertificate::Rejected {
                clique,
                stable,
                certificate,
            })
        }
        _ => Err(Error::Usage(format!(
            "certificate contents do not fit class {}",
            class.as_str()
        ))),
    }
}
