//! Named matrix families and seeded random instances.
//!
//! The F-families and G0 are the forbidden configurations for nested and
//! 2-nested matrices. The five Tucker families are the standard minimal
//! non-C1P matrices; every generated instance is checked (non-C1P and
//! deletion-minimal) before it is handed out.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::c1p::{is_valid_tucker_witness, TuckerWitness};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::matrix::BinaryMatrix;

/// A named matrix family with its parameter, where it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    G0,
    F0,
    /// Odd `k >= 5`; `k x (k-1)`.
    F1(usize),
    /// Odd `k >= 5`; `k x k`.
    F2(usize),
    /// `k >= 1`; `(k+2) x (k+2)` cycle.
    MI(usize),
    /// `k >= 1`; `(k+3) x (k+3)`.
    MII(usize),
    /// `k >= 1`; `(k+2) x (k+3)`.
    MIII(usize),
    MIV,
    MV,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::G0 => "G0",
            FamilySpec::F0 => "F0",
            FamilySpec::F1(_) => "F1",
            FamilySpec::F2(_) => "F2",
            FamilySpec::MI(_) => "MI",
            FamilySpec::MII(_) => "MII",
            FamilySpec::MIII(_) => "MIII",
            FamilySpec::MIV => "MIV",
            FamilySpec::MV => "MV",
        }
    }

    pub fn parameter(&self) -> Option<usize> {
        match *self {
            FamilySpec::F1(k)
            | FamilySpec::F2(k)
            | FamilySpec::MI(k)
            | FamilySpec::MII(k)
            | FamilySpec::MIII(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_tucker(&self) -> bool {
        matches!(
            self,
            FamilySpec::MI(_)
                | FamilySpec::MII(_)
                | FamilySpec::MIII(_)
                | FamilySpec::MIV
                | FamilySpec::MV
        )
    }

    /// Builds a spec from a family name and optional parameter, checking
    /// that the parameter is present exactly when the family needs one.
    pub fn from_parts(name: &str, k: Option<usize>) -> Result<Self> {
        let spec = match (name, k) {
            ("G0", None) => FamilySpec::G0,
            ("F0", None) => FamilySpec::F0,
            ("F1", Some(k)) => FamilySpec::F1(k),
            ("F2", Some(k)) => FamilySpec::F2(k),
            ("MI", Some(k)) => FamilySpec::MI(k),
            ("MII", Some(k)) => FamilySpec::MII(k),
            ("MIII", Some(k)) => FamilySpec::MIII(k),
            ("MIV", None) => FamilySpec::MIV,
            ("MV", None) => FamilySpec::MV,
            ("G0" | "F0" | "MIV" | "MV", Some(_)) => {
                return Err(Error::Usage(format!("family {name} takes no parameter")))
            }
            ("F1" | "F2" | "MI" | "MII" | "MIII", None) => {
                return Err(Error::Usage(format!("family {name} needs a parameter k")))
            }
            _ => return Err(Error::Usage(format!("unknown family {name:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::F1(k) | FamilySpec::F2(k) if k < 5 || k % 2 == 0 => Err(Error::Usage(
                format!("{} needs an odd k >= 5, got {k}", self.name()),
            )),
            FamilySpec::MI(k) | FamilySpec::MII(k) | FamilySpec::MIII(k) if k < 1 => {
                Err(Error::Usage(format!("{} needs k >= 1", self.name())))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<BinaryMatrix> {
        match *self {
            FamilySpec::G0 => Ok(gen_g0()),
            FamilySpec::F0 => Ok(gen_f0()),
            FamilySpec::F1(k) => gen_f1(k),
            FamilySpec::F2(k) => gen_f2(k),
            _ => gen_tucker(*self),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `F0`, `MIV`, or a parameterized form such as `F2(5)`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('(') {
            Some((name, rest)) => {
                let k = rest
                    .strip_suffix(')')
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Usage(format!("bad family parameter in {s:?}")))?;
                FamilySpec::from_parts(name, Some(k))
            }
            None => FamilySpec::from_parts(s, None),
        }
    }
}

fn from_supports(n_cols: usize, supports: Vec<Vec<usize>>) -> BinaryMatrix {
    BinaryMatrix::from_supports(n_cols, &supports).expect("family generator produced bad indices")
}

pub fn gen_g0() -> BinaryMatrix {
    from_supports(3, vec![vec![0, 1], vec![1, 2]])
}

pub fn gen_f0() -> BinaryMatrix {
    from_supports(5, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]])
}

pub fn gen_f1(k: usize) -> Result<BinaryMatrix> {
    FamilySpec::F1(k).validate()?;
    let mut rows = vec![(1..k - 1).collect(), (0..k - 2).collect()];
    // Row i (1-based, 3..=k) has its 1s in columns k-i+1 and k-i+2.
    rows.extend((3..=k).map(|i| vec![k - i, k - i + 1]));
    Ok(from_supports(k - 1, rows))
}

pub fn gen_f2(k: usize) -> Result<BinaryMatrix> {
    FamilySpec::F2(k).validate()?;
    let mut rows = vec![(1..k - 1).collect::<Vec<_>>()];
    // Row i (1-based, 2..=k) has its 1s in columns i-1 and i.
    rows.extend((2..=k).map(|i| vec![i - 2, i - 1]));
    Ok(from_supports(k, rows))
}

/// Staircase rows `{j, j+1}` for `j < len`.
fn staircase(len: usize) -> Vec<Vec<usize>> {
    (0..len).map(|j| vec![j, j + 1]).collect()
}

fn raw_tucker(spec: FamilySpec) -> Result<BinaryMatrix> {
    spec.validate()?;
    let m = match spec {
        FamilySpec::MI(k) => {
            let mut rows = staircase(k + 1);
            rows.push(vec![0, k + 1]);
            from_supports(k + 2, rows)
        }
        FamilySpec::MII(k) => {
            let mut rows = staircase(k + 1);
            let mut a: Vec<usize> = (0..=k).collect();
            a.push(k + 2);
            rows.push(a);
            rows.push((1..k + 3).collect());
            from_supports(k + 3, rows)
        }
        FamilySpec::MIII(k) => {
            let mut rows = staircase(k + 1);
            let mut a: Vec<usize> = (1..=k).collect();
            a.push(k + 2);
            rows.push(a);
            from_supports(k + 3, rows)
        }
        FamilySpec::MIV => {
            from_supports(6, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![1, 3, 5]])
        }
        FamilySpec::MV => from_supports(
            5,
            vec![vec![0, 1], vec![2, 3], vec![0, 1, 2, 3], vec![0, 3, 4]],
        ),
        other => {
            return Err(Error::Usage(format!("{other} is not a Tucker family")));
        }
    };
    Ok(m)
}

/// The requested Tucker matrix, validated as non-C1P and deletion-minimal.
pub fn gen_tucker(spec: FamilySpec) -> Result<BinaryMatrix> {
    let m = raw_tucker(spec)?;
    let whole = TuckerWitness {
        rows: (0..m.n_rows()).collect(),
        cols: (0..m.n_cols()).collect(),
        family: None,
    };
    if !is_valid_tucker_witness(&m, &whole)? {
        return Err(Error::Internal(format!(
            "generated {spec} is not a minimal non-C1P matrix"
        )));
    }
    Ok(m)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gen_random_matrix(n: usize, m: usize, p: f64, seed: u64) -> Result<BinaryMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Usage(format!("density {p} outside [0, 1]")));
    }
    let mut rng = rng_from_seed(seed);
    random_matrix_with(&mut rng, n, m, p)
}

pub(crate) fn random_matrix_with(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
    p: f64,
) -> Result<BinaryMatrix> {
    let mut out = BinaryMatrix::zeros(n, m)?;
    for i in 0..n {
        for j in 0..m {
            if rng.gen_bool(p) {
                out.set(i, j, true);
            }
        }
    }
    Ok(out)
}

/// Interval rows under the identity order, each assigned to one of two
/// classes that are kept laminar. 2-nested by construction.
pub fn gen_random_two_nested(n: usize, m: usize, seed: u64) -> Result<BinaryMatrix> {
    let mut rng = rng_from_seed(seed);
    random_two_nested_with(&mut rng, n, m)
}

pub(crate) fn random_two_nested_with(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
) -> Result<BinaryMatrix> {
    let mut out = BinaryMatrix::zeros(n, m)?;
    let mut classes: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
    let laminar_with = |class: &[(usize, usize)], (l, r): (usize, usize)| {
        class
            .iter()
            .all(|&(a, b)| r < a || b < l || (a <= l && r <= b) || (l <= a && b <= r))
    };
    for i in 0..n {
        let c = rng.gen_range(0..2);
        let mut chosen = None;
        for _ in 0..16 {
            let l = rng.gen_range(0..m);
            let r = rng.gen_range(l..m);
            if laminar_with(&classes[c], (l, r)) {
                chosen = Some((l, r));
                break;
            }
        }
        // A single column never crosses an interval.
        let (l, r) = chosen.unwrap_or_else(|| {
            let j = rng.gen_range(0..m);
            (j, j)
        });
        classes[c].push((l, r));
        for j in l..=r {
            out.set(i, j, true);
        }
    }
    Ok(out)
}

/// A random clique plus independent set with random edges between them.
/// Vertex labels are shuffled so the clique is not a prefix.
pub fn gen_random_split_graph(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    random_split_graph_with(&mut rng, n)
}

pub(crate) fn random_split_graph_with(rng: &mut impl Rng, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Usage("graph needs at least one vertex".into()));
    }
    let clique_size = rng.gen_range(0..=n);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::empty(n)?;
    for a in 0..clique_size {
        for b in a + 1..clique_size {
            g.add_edge(labels[a], labels[b])?;
        }
    }
    for s in clique_size..n {
        for k in 0..clique_size {
            if rng.gen_bool(0.5) {
                g.add_edge(labels[s], labels[k])?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c1p::has_c1p;

    fn rows(m: &BinaryMatrix) -> Vec<String> {
        (0..m.n_rows()).map(|i| m.row_string(i)).collect()
    }

    #[test]
    fn f0_literal() {
        assert_eq!(rows(&gen_f0()), ["11100", "01110", "00111"]);
    }

    #[test]
    fn f1_k5_literal() {
        assert_eq!(
            rows(&gen_f1(5).unwrap()),
            ["0111", "1110", "0011", "0110", "1100"]
        );
    }

    #[test]
    fn f2_k5_literal() {
        assert_eq!(
            rows(&gen_f2(5).unwrap()),
            ["01110", "11000", "01100", "00110", "00011"]
        );
    }

    #[test]
    fn f_family_dimensions() {
        for k in [5, 7, 9, 11] {
            let f1 = gen_f1(k).unwrap();
            let f2 = gen_f2(k).unwrap();
            assert_eq!((f1.n_rows(), f1.n_cols()), (k, k - 1));
            assert_eq!((f2.n_rows(), f2.n_cols()), (k, k));
            assert!(f1.has_consecutive_rows());
            assert!(f2.has_consecutive_rows());
        }
    }

    #[test]
    fn bad_parameters_rejected() {
        for k in [0, 3, 4, 6] {
            assert!(gen_f1(k).is_err());
            assert!(gen_f2(k).is_err());
        }
        assert!(gen_tucker(FamilySpec::MI(0)).is_err());
        assert!(gen_tucker(FamilySpec::F0).is_err());
        assert!(FamilySpec::from_parts("F0", Some(3)).is_err());
        assert!(FamilySpec::from_parts("F1", None).is_err());
        assert!(FamilySpec::from_parts("F7", None).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for spec in [
            FamilySpec::G0,
            FamilySpec::F0,
            FamilySpec::F1(7),
            FamilySpec::F2(5),
            FamilySpec::MI(3),
            FamilySpec::MII(1),
            FamilySpec::MIII(2),
            FamilySpec::MIV,
            FamilySpec::MV,
        ] {
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn smallest_mi_is_cyclic() {
        assert_eq!(
            rows(&gen_tucker(FamilySpec::MI(1)).unwrap()),
            ["110", "011", "101"]
        );
    }

    #[test]
    fn tucker_instances_validate() {
        for k in 1..=5 {
            for spec in [FamilySpec::MI(k), FamilySpec::MII(k), FamilySpec::MIII(k)] {
                let t = gen_tucker(spec).unwrap();
                assert!(!has_c1p(&t), "{spec}");
            }
        }
        assert!(!has_c1p(&gen_tucker(FamilySpec::MIV).unwrap()));
        assert!(!has_c1p(&gen_tucker(FamilySpec::MV).unwrap()));
    }

    #[test]
    fn random_matrix_extremes_and_determinism() {
        assert!(gen_random_matrix(3, 4, 0.0, 1).unwrap().is_all_zero());
        let ones = gen_random_matrix(3, 4, 1.0, 1).unwrap();
        assert!((0..3).all(|i| ones.row_weight(i) == 4));
        assert_eq!(
            gen_random_matrix(5, 5, 0.4, 7).unwrap(),
            gen_random_matrix(5, 5, 0.4, 7).unwrap()
        );
        assert!(gen_random_matrix(2, 2, 1.5, 0).is_err());
    }

    #[test]
    fn random_two_nested_is_deterministic_intervals() {
        let a = gen_random_two_nested(6, 7, 3).unwrap();
        assert_eq!(a, gen_random_two_nested(6, 7, 3).unwrap());
        assert!(a.has_consecutive_rows());
        assert_eq!(gen_random_two_nested(1, 4, 0).unwrap().n_rows(), 1);
    }

    #[test]
    fn random_split_graph_single_vertex() {
        let g = gen_random_split_graph(1, 9).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(
            gen_random_split_graph(6, 4).unwrap(),
            gen_random_split_graph(6, 4).unwrap()
        );
    }
}
