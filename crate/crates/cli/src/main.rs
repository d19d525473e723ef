use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twonest::certificate::input_digest;
use twonest::generators::{gen_random_matrix, gen_random_split_graph, gen_random_two_nested};
use twonest::graphs::{NestedGraphResult, TwoNestedGraphResult};
use twonest::recognition::{NestedResult, TwoNestedResult};
use twonest::stress::{run_stress, StressConfig};
use twonest::{
    is_nested, is_nested_graph, is_two_nested, is_two_nested_graph, test_c1p, verify_certificate,
    verify_graph_certificate, BinaryMatrix, C1pResult, CertClass, CertificateDocument, Error,
    FamilySpec, Graph, GraphCertificate, MatrixCertificate, Payload, Verdict,
};

#[derive(Parser)]
#[command(
    name = "twonest",
    version,
    about = "Recognize and certify nested and 2-nested matrices and split graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership and optionally write a certificate.
    Recognize {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Write a named family member or a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a certificate against its input file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Cross-check the recognizers against brute force on random instances.
    Stress {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_rows: usize,
        #[arg(long)]
        max_cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where failing instances are written.
        #[arg(long, default_value = "stress-counterexamples.txt")]
        counterexamples: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Nested,
    #[value(name = "2nested")]
    TwoNested,
    C1p,
    NestedGraph,
    #[value(name = "2nested-graph")]
    TwoNestedGraph,
}

impl Kind {
    fn class(self) -> CertClass {
        match self {
            Kind::Nested => CertClass::Nested,
            Kind::TwoNested => CertClass::TwoNested,
            Kind::C1p => CertClass::C1p,
            Kind::NestedGraph => CertClass::NestedGraph,
            Kind::TwoNestedGraph => CertClass::TwoNestedGraph,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    #[value(name = "G0")]
    G0,
    #[value(name = "F0")]
    F0,
    #[value(name = "F1")]
    F1,
    #[value(name = "F2")]
    F2,
    #[value(name = "MI")]
    MI,
    #[value(name = "MII")]
    Mii,
    #[value(name = "MIII")]
    Miii,
    #[value(name = "MIV")]
    Miv,
    #[value(name = "MV")]
    MV,
    Random,
    #[value(name = "random2nested")]
    Random2Nested,
    #[value(name = "randomsplit")]
    RandomSplit,
}

/// Failures that end the process with status 2.
struct Fatal(String);

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(e.to_string())
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Fatal> {
    fs::read(path).map_err(|e| Fatal(format!("cannot read {}: {e}", path.display())))
}

fn read_text(path: &Path, bytes: &[u8]) -> Result<String, Fatal> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| Fatal(format!("{} is not valid UTF-8", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fatal> {
    fs::write(path, text).map_err(|e| Fatal(format!("cannot write {}: {e}", path.display())))
}

fn one_based(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe_matrix(c: &MatrixCertificate) -> String {
    match c {
        MatrixCertificate::C1p { ordering } | MatrixCertificate::Nested { ordering } => {
            format!("column order {}", one_based(ordering))
        }
        MatrixCertificate::TwoNested {
            ordering,
            bipartition,
        } => format!(
            "column order {}; row classes {{{}}} and {{{}}}",
            one_based(ordering),
            one_based(&bipartition.first),
            one_based(&bipartition.second)
        ),
        MatrixCertificate::Tucker(w) => format!(
            "{} submatrix on rows {} and columns {}",
            w.family.map_or("non-C1P".to_string(), |f| f.to_string()),
            one_based(&w.rows),
            one_based(&w.cols)
        ),
        MatrixCertificate::G0(w) => format!(
            "G0 on rows {} and columns {}",
            one_based(&w.rows),
            one_based(&w.cols)
        ),
        MatrixCertificate::Configuration { witness, .. } => format!(
            "{} configuration on rows {} and columns {}",
            witness.family,
            one_based(&witness.rows),
            one_based(&witness.cols)
        ),
    }
}

fn describe_graph(c: &GraphCertificate) -> String {
    match c {
        GraphCertificate::Nested {
            clique, ordering, ..
        } => format!(
            "clique {{{}}} ordered {}",
            one_based(clique),
            one_based(ordering)
        ),
        GraphCertificate::TwoNested {
            clique,
            ordering,
            bipartition,
            ..
        } => format!(
            "clique {{{}}} ordered {}; independent classes {{{}}} and {{{}}}",
            one_based(clique),
            one_based(ordering),
            one_based(&bipartition.first),
            one_based(&bipartition.second)
        ),
        GraphCertificate::Gem(w) => format!(
            "induced gem: path {} with apex {}",
            one_based(&w.path),
            w.apex + 1
        ),
        GraphCertificate::NotSplit(w) => format!(
            "not split: induced {} on {}",
            w.obstruction.name(),
            one_based(&w.vertices)
        ),
        GraphCertificate::Rejected {
            clique,
            stable,
            certificate,
        } => format!(
            "for clique {{{}}} and independent set {{{}}}: {}",
            one_based(clique),
            one_based(stable),
            describe_matrix(certificate)
        ),
    }
}

fn recognize_matrix(kind: Kind, a: &BinaryMatrix) -> Result<MatrixCertificate, Fatal> {
    Ok(match kind {
        Kind::C1p => match test_c1p(a) {
            C1pResult::Ordering(ordering) => MatrixCertificate::C1p { ordering },
            C1pResult::Witness(w) => MatrixCertificate::Tucker(w),
        },
        Kind::Nested => match is_nested(a)? {
            NestedResult::Nested { ordering } => MatrixCertificate::Nested { ordering },
            NestedResult::NotNested(w) => MatrixCertificate::G0(w),
        },
        _ => match is_two_nested(a)? {
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
        },
    })
}

fn recognize_graph(kind: Kind, g: &Graph) -> Result<GraphCertificate, Fatal> {
    Ok(match kind {
        Kind::NestedGraph => match is_nested_graph(g)? {
            NestedGraphResult::Nested { split, ordering } => GraphCertificate::Nested {
                clique: split.clique,
                stable: split.stable,
                ordering,
            },
            NestedGraphResult::Gem(w) => GraphCertificate::Gem(w),
            NestedGraphResult::NotSplit(w) => GraphCertificate::NotSplit(w),
        },
        _ => match is_two_nested_graph(g)? {
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
            TwoNestedGraphResult::Rejected { split, certificate } => GraphCertificate::Rejected {
                clique: split.clique,
                stable: split.stable,
                certificate,
            },
            TwoNestedGraphResult::NotSplit(w) => GraphCertificate::NotSplit(w),
        },
    })
}

fn cmd_recognize(kind: Kind, input: &Path, cert: Option<&Path>) -> Result<ExitCode, Fatal> {
    let bytes = read(input)?;
    let text = read_text(input, &bytes)?;
    let class = kind.class();
    let (payload, summary) = if class.is_graph() {
        let c = recognize_graph(kind, &Graph::parse(&text)?)?;
        let s = describe_graph(&c);
        (Payload::Graph(c), s)
    } else {
        let c = recognize_matrix(kind, &BinaryMatrix::parse(&text)?)?;
        let s = describe_matrix(&c);
        (Payload::Matrix(c), s)
    };
    let doc = CertificateDocument::new(class, payload, input_digest(&bytes));
    println!("{class}: {}", doc.verdict.as_str());
    println!("  {summary}");
    if let Some(path) = cert {
        write(path, &doc.to_text())?;
    }
    Ok(match doc.verdict {
        Verdict::Accept => ExitCode::SUCCESS,
        Verdict::Reject => ExitCode::from(1),
    })
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Fatal> {
    value.ok_or_else(|| Fatal(format!("{family} needs --{flag}")))
}

fn cmd_gen(
    family: GenFamily,
    k: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
    p: f64,
    seed: u64,
    out: &Path,
) -> Result<ExitCode, Fatal> {
    let named = |name: &str| -> Result<String, Fatal> {
        let spec = FamilySpec::from_parts(name, k)?;
        let a = spec.generate()?;
        println!("{spec}");
        Ok(a.to_text())
    };
    let text = match family {
        GenFamily::G0 => named("G0")?,
        GenFamily::F0 => named("F0")?,
        GenFamily::F1 => named("F1")?,
        GenFamily::F2 => named("F2")?,
        GenFamily::MI => named("MI")?,
        GenFamily::Mii => named("MII")?,
        GenFamily::Miii => named("MIII")?,
        GenFamily::Miv => named("MIV")?,
        GenFamily::MV => named("MV")?,
        GenFamily::Random => {
            let (n, m) = (require(n, "n", "random")?, require(m, "m", "random")?);
            println!("random n={n} m={m} p={p} seed={seed}");
            gen_random_matrix(n, m, p, seed)?.to_text()
        }
        GenFamily::Random2Nested => {
            let (n, m) = (
                require(n, "n", "random2nested")?,
                require(m, "m", "random2nested")?,
            );
            println!("random2nested n={n} m={m} seed={seed}");
            gen_random_two_nested(n, m, seed)?.to_text()
        }
        GenFamily::RandomSplit => {
            let n = require(n, "n", "randomsplit")?;
            println!("randomsplit n={n} seed={seed}");
            gen_random_split_graph(n, seed)?.to_text()
        }
    };
    write(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(input: &Path, cert: &Path) -> Result<ExitCode, Fatal> {
    let bytes = read(input)?;
    let cert_bytes = read(cert)?;
    let doc = CertificateDocument::parse(&read_text(cert, &cert_bytes)?)?;
    let digest = input_digest(&bytes);
    if digest != doc.digest {
        return Err(Fatal(format!(
            "certificate was issued for input with digest {}, but {} has digest {digest}",
            doc.digest,
            input.display()
        )));
    }
    let text = read_text(input, &bytes)?;
    let ok = match &doc.payload {
        Payload::Matrix(c) => verify_certificate(&BinaryMatrix::parse(&text)?, c)?,
        Payload::Graph(c) => verify_graph_certificate(&Graph::parse(&text)?, c)?,
    };
    println!(
        "{} {} certificate: {}",
        doc.class,
        doc.verdict.as_str(),
        if ok { "valid" } else { "INVALID" }
    );
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_stress(cfg: StressConfig, counterexamples: &Path) -> Result<ExitCode, Fatal> {
    let report = run_stress(&cfg)?;
    print!("{}", report.summary_table());
    for (index, finding) in &report.partition_findings {
        println!("finding: instance {index}: {finding}");
    }
    if report.passed() {
        return Ok(ExitCode::SUCCESS);
    }
    let mut text = String::new();
    for f in &report.failures {
        println!("FAIL instance {}: {}", f.index, f.check);
        text.push_str(&format!(
            "# instance {}: {}\n{}",
            f.index, f.check, f.instance
        ));
    }
    write(counterexamples, &text)?;
    println!("counterexamples written to {}", counterexamples.display());
    Ok(ExitCode::from(1))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Recognize { kind, input, cert } => cmd_recognize(kind, &input, cert.as_deref()),
        Command::Gen {
            family,
            k,
            n,
            m,
            p,
            seed,
            out,
        } => cmd_gen(family, k, n, m, p, seed, &out),
        Command::Verify { input, cert } => cmd_verify(&input, &cert),
        Command::Stress {
            count,
            max_rows,
            max_cols,
            seed,
            counterexamples,
        } => cmd_stress(
            StressConfig {
                count,
                max_rows,
                max_cols,
                seed,
            },
            &counterexamples,
        ),
    };
    match result {
        Ok(code) => code,
        Err(Fatal(message)) => {
            eprintln!("twonest: {message}");
            ExitCode::from(2)
        }
    }
}
