//! Split graphs, their S x K adjacency matrices, and graph-level
//! recognition of nested and 2-nested split graphs.

use itertools::Itertools;

use crate::certificate::MatrixCertificate;
use crate::error::{Error, Result};
use crate::matrix::{parse_header, split_terminated_lines, BinaryMatrix};
use crate::recognition::{is_nested, is_two_nested, Bipartition, NestedResult, TwoNestedResult};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Degenerate("graph needs at least one vertex".into()));
        }
        Ok(Graph {
            adj: vec![vec![false; n]; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n() || v >= self.n() {
            return Err(Error::Usage(format!("edge ({u},{v}) out of range")));
        }
        if u == v {
            return Err(Error::Usage(format!("loop at vertex {u}")));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v] = false;
        self.adj[v][u] = false;
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                (u + 1..self.n())
                    .filter(move |&v| self.adj[u][v])
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .tuple_combinations()
            .all(|(&a, &b)| self.adjacent(a, b))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .tuple_combinations()
            .all(|(&a, &b)| !self.adjacent(a, b))
    }

    /// Parses the graph text format: a header `n e`, then `e` lines `u v`
    /// with `1 <= u < v <= n` in strictly increasing lexicographic order.
    pub fn parse(text: &str) -> Result<Self> {
        let lines = split_terminated_lines(text)?;
        let (n, e) = parse_header(lines[0], 1)?;
        if n == 0 {
            return Err(Error::parse(1, 1, "graph needs at least one vertex"));
        }
        if lines.len() - 1 < e {
            return Err(Error::parse(
                lines.len() + 1,
                1,
                format!("expected {e} edge lines, found {}", lines.len() - 1),
            ));
        }
        if lines.len() - 1 > e {
            return Err(Error::parse(
                e + 2,
                1,
                "unexpected line after the last edge",
            ));
        }
        let mut g = Graph::empty(n)?;
        let mut prev: Option<(usize, usize)> = None;
        for (idx, line) in lines[1..].iter().enumerate() {
            let line_no = idx + 2;
            let (u, v) = parse_header(line, line_no)?;
            let v_col = line.find(' ').map_or(1, |p| p + 2);
            if u == 0 || u > n {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("vertex {u} outside 1..={n}"),
                ));
            }
            if v == 0 || v > n {
                return Err(Error::parse(
                    line_no,
                    v_col,
                    format!("vertex {v} outside 1..={n}"),
                ));
            }
            if u >= v {
                return Err(Error::parse(line_no, v_col, "edge must satisfy u < v"));
            }
            if prev.is_some_and(|p| p >= (u, v)) {
                return Err(Error::parse(
                    line_no,
                    1,
                    "edges must be strictly increasing without duplicates",
                ));
            }
            prev = Some((u, v));
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }
}

/// A graph together with a split partition. The order of `clique` and
/// `stable` fixes the column and row order of the S x K matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    pub graph: Graph,
    pub clique: Vec<usize>,
    pub stable: Vec<usize>,
}

impl SplitGraph {
    pub fn new(graph: Graph, clique: Vec<usize>, stable: Vec<usize>) -> Result<Self> {
        if !is_split_partition(&graph, &clique, &stable) {
            return Err(Error::Usage("not a split partition of the graph".into()));
        }
        Ok(SplitGraph {
            graph,
            clique,
            stable,
        })
    }
}

pub fn is_split_partition(g: &Graph, clique: &[usize], stable: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in clique.iter().chain(stable) {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    seen.iter().all(|&b| b) && g.is_clique(clique) && g.is_independent(stable)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// Vertices `a b c d` with edges `ab`, `cd` only.
    TwoK2,
    /// Vertices in cycle order.
    C4,
    C5,
}

impl Obstruction {
    pub fn name(&self) -> &'static str {
        match self {
            Obstruction::TwoK2 => "2K2",
            Obstruction::C4 => "C4",
            Obstruction::C5 => "C5",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "2K2" => Some(Obstruction::TwoK2),
            "C4" => Some(Obstruction::C4),
            "C5" => Some(Obstruction::C5),
            _ => None,
        }
    }
}

/// An induced 2K2, C4 or C5: every graph without a split partition has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSplitWitness {
    pub obstruction: Obstruction,
    pub vertices: Vec<usize>,
}

impl NotSplitWitness {
    pub fn holds_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) || vs.iter().duplicates().next().is_some() {
            return false;
        }
        match self.obstruction {
            Obstruction::TwoK2 => vs.len() == 4 && induced_edges_are(g, vs, &[(0, 1), (2, 3)]),
            Obstruction::C4 => vs.len() == 4 && induced_edges_are(g, vs, &cycle_edges(4)),
            Obstruction::C5 => vs.len() == 5 && induced_edges_are(g, vs, &cycle_edges(5)),
        }
    }
}

fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|i| (i, (i + 1) % k)).collect()
}

/// True when the subgraph induced on `vs` has exactly the listed edges
/// (given as positions into `vs`).
fn induced_edges_are(g: &Graph, vs: &[usize], edges: &[(usize, usize)]) -> bool {
    (0..vs.len()).tuple_combinations().all(|(a, b)| {
        let want = edges.contains(&(a, b)) || edges.contains(&(b, a));
        g.adjacent(vs[a], vs[b]) == want
    })
}

/// Induced path `a-b-c-d` plus an apex adjacent to all four.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GemWitness {
    pub path: [usize; 4],
    pub apex: usize,
}

impl GemWitness {
    pub fn holds_in(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.path;
        let all = [a, b, c, d, self.apex];
        if all.iter().any(|&v| v >= g.n()) || all.iter().duplicates().next().is_some() {
            return false;
        }
        induced_edges_are(g, &self.path, &[(0, 1), (1, 2), (2, 3)])
            && self.path.iter().all(|&v| g.adjacent(v, self.apex))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitResult {
    Split(SplitGraph),
    NotSplit(NotSplitWitness),
}

/// Degree-sequence split test: with degrees sorted descending and `m` the
/// largest index with `d_m >= m - 1`, the graph is split iff the top `m`
/// degrees sum to `m(m-1)` plus the sum of the remaining degrees. The top `m`
/// vertices then form a clique and the rest an independent set.
pub fn find_split_partition(g: &Graph) -> SplitResult {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let top: usize = deg[..m].iter().sum();
    let rest: usize = deg[m..].iter().sum();
    if top == m * (m.saturating_sub(1)) + rest {
        let mut clique = order[..m].to_vec();
        let mut stable = order[m..].to_vec();
        clique.sort_unstable();
        stable.sort_unstable();
        if is_split_partition(g, &clique, &stable) {
            return SplitResult::Split(SplitGraph {
                graph: g.clone(),
                clique,
                stable,
            });
        }
    }
    SplitResult::NotSplit(find_split_obstruction(g).expect("non-split graph without 2K2, C4 or C5"))
}

fn find_split_obstruction(g: &Graph) -> Option<NotSplitWitness> {
    for vs in (0..g.n()).combinations(4) {
        for perm in vs.iter().copied().permutations(4) {
            for obstruction in [Obstruction::TwoK2, Obstruction::C4] {
                let w = NotSplitWitness {
                    obstruction,
                    vertices: perm.clone(),
                };
                if w.holds_in(g) {
                    return Some(w);
                }
            }
        }
    }
    for vs in (0..g.n()).combinations(5) {
        for perm in vs.iter().copied().permutations(5) {
            let w = NotSplitWitness {
                obstruction: Obstruction::C5,
                vertices: perm,
            };
            if w.holds_in(g) {
                return Some(w);
            }
        }
    }
    None
}

/// Every split partition of a split graph, starting from `base`.
///
/// Two split partitions differ by at most one vertex moving each way: the
/// vertices leaving K land in an independent set and those joining K come
/// from one, while both groups must also be cliques.
pub fn all_split_partitions(base: &SplitGraph) -> Vec<SplitGraph> {
    let g = &base.graph;
    let mut out = vec![base.clone()];
    let outs = std::iter::once(None).chain(base.clique.iter().copied().map(Some));
    for leave in outs {
        let joins: Vec<Option<usize>> = std::iter::once(None)
            .chain(base.stable.iter().copied().map(Some))
            .collect();
        for join in joins {
            if leave.is_none() && join.is_none() {
                continue;
            }
            let mut clique: Vec<usize> = base
                .clique
                .iter()
                .copied()
                .filter(|&v| Some(v) != leave)
                .chain(join)
                .collect();
            let mut stable: Vec<usize> = base
                .stable
                .iter()
                .copied()
                .filter(|&v| Some(v) != join)
                .chain(leave)
                .collect();
            clique.sort_unstable();
            stable.sort_unstable();
            if is_split_partition(g, &clique, &stable) {
                out.push(SplitGraph {
                    graph: g.clone(),
                    clique,
                    stable,
                });
            }
        }
    }
    out
}

/// `A(S,K)`: row `i` is `stable[i]`, column `j` is `clique[j]`.
pub fn adjacency_matrix_sk(sg: &SplitGraph) -> Result<BinaryMatrix> {
    if sg.stable.is_empty() {
        return Err(Error::Degenerate(
            "split partition has an empty independent set".into(),
        ));
    }
    if sg.clique.is_empty() {
        return Err(Error::Degenerate(
            "split partition has an empty clique".into(),
        ));
    }
    BinaryMatrix::from_fn(sg.stable.len(), sg.clique.len(), |i, j| {
        sg.graph.adjacent(sg.stable[i], sg.clique[j])
    })
}

fn is_degenerate(sg: &SplitGraph) -> bool {
    sg.stable.is_empty() || sg.clique.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NestedGraphResult {
    /// `ordering` lists the clique vertices in an order that makes every
    /// row of `A(S,K)` contiguous.
    Nested {
        split: SplitGraph,
        ordering: Vec<usize>,
    },
    Gem(GemWitness),
    NotSplit(NotSplitWitness),
}

impl NestedGraphResult {
    pub fn accepted(&self) -> bool {
        matches!(self, NestedGraphResult::Nested { .. })
    }
}

/// Tries each split partition in turn; a single partition with a laminar
/// `A(S,K)` suffices. Otherwise the first partition's crossing pair becomes
/// a gem.
pub fn is_nested_graph(g: &Graph) -> Result<NestedGraphResult> {
    let base = match find_split_partition(g) {
        SplitResult::Split(sg) => sg,
        SplitResult::NotSplit(w) => return Ok(NestedGraphResult::NotSplit(w)),
    };
    let mut first_gem = None;
    for sg in all_split_partitions(&base) {
        match nested_under_partition(&sg)? {
            Ok(ordering) => {
                return Ok(NestedGraphResult::Nested {
                    split: sg,
                    ordering,
                })
            }
            Err(gem) => {
                first_gem.get_or_insert(gem);
            }
        }
    }
    let gem = first_gem.ok_or_else(|| Error::Internal("no split partition examined".into()))?;
    Ok(NestedGraphResult::Gem(gem))
}

/// Nestedness of one fixed split partition: the clique order on success,
/// a gem built from the G0 witness otherwise.
pub fn nested_under_partition(
    sg: &SplitGraph,
) -> Result<std::result::Result<Vec<usize>, GemWitness>> {
    if is_degenerate(sg) {
        return Ok(Ok(sg.clique.clone()));
    }
    let a = adjacency_matrix_sk(sg)?;
    match is_nested(&a)? {
        NestedResult::Nested { ordering } => {
            Ok(Ok(ordering.iter().map(|&j| sg.clique[j]).collect()))
        }
        NestedResult::NotNested(w) => {
            let [si, sk] = w.rows.map(|r| sg.stable[r]);
            let [j1, j2, j3] = w.cols.map(|c| sg.clique[c]);
            let gem = GemWitness {
                path: [si, j1, j3, sk],
                apex: j2,
            };
            if !gem.holds_in(&sg.graph) {
                return Err(Error::Internal(format!("{gem:?} is not an induced gem")));
            }
            Ok(Err(gem))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoNestedGraphResult {
    /// `ordering` lists clique vertices; `bipartition` holds stable vertices.
    TwoNested {
        split: SplitGraph,
        ordering: Vec<usize>,
        bipartition: Bipartition,
    },
    /// The matrix certificate indexes rows and columns of `A(S,K)` for `split`.
    Rejected {
        split: SplitGraph,
        certificate: MatrixCertificate,
    },
    NotSplit(NotSplitWitness),
}

impl TwoNestedGraphResult {
    pub fn accepted(&self) -> bool {
        matches!(self, TwoNestedGraphResult::TwoNested { .. })
    }
}

pub fn is_two_nested_graph(g: &Graph) -> Result<TwoNestedGraphResult> {
    let base = match find_split_partition(g) {
        SplitResult::Split(sg) => sg,
        SplitResult::NotSplit(w) => return Ok(TwoNestedGraphResult::NotSplit(w)),
    };
    let mut first_reject = None;
    for sg in all_split_partitions(&base) {
        match two_nested_under_partition(&sg)? {
            TwoNestedGraphResult::Rejected { split, certificate } => {
                first_reject.get_or_insert(TwoNestedGraphResult::Rejected { split, certificate });
            }
            accepted => return Ok(accepted),
        }
    }
    first_reject.ok_or_else(|| Error::Internal("no split partition examined".into()))
}

pub fn two_nested_under_partition(sg: &SplitGraph) -> Result<TwoNestedGraphResult> {
    if is_degenerate(sg) {
        return Ok(TwoNestedGraphResult::TwoNested {
            split: sg.clone(),
            ordering: sg.clique.clone(),
            bipartition: Bipartition {
                first: sg.stable.clone(),
                second: Vec::new(),
            },
        });
    }
    let a = adjacency_matrix_sk(sg)?;
    let result = match is_two_nested(&a)? {
        TwoNestedResult::TwoNested {
            ordering,
            bipartition,
        } => TwoNestedGraphResult::TwoNested {
            split: sg.clone(),
            ordering: ordering.iter().map(|&j| sg.clique[j]).collect(),
            bipartition: Bipartition {
                first: bipartition.first.iter().map(|&i| sg.stable[i]).collect(),
                second: bipartition.second.iter().map(|&i| sg.stable[i]).collect(),
            },
        },
        TwoNestedResult::NotC1p(w) => TwoNestedGraphResult::Rejected {
            split: sg.clone(),
            certificate: MatrixCertificate::Tucker(w),
        },
        TwoNestedResult::OddCycle { ordering, witness } => TwoNestedGraphResult::Rejected {
            split: sg.clone(),
            certificate: MatrixCertificate::Configuration { ordering, witness },
        },
    };
    Ok(result)
}

/// Exhaustive search over 5-vertex subsets in lexicographic order. Within a
/// subset the apex is the lowest vertex that works and the path is written
/// with its smaller endpoint first.
pub fn find_induced_gem(g: &Graph) -> Option<GemWitness> {
    for vs in (0..g.n()).combinations(5) {
        for &apex in &vs {
            let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != apex).collect();
            if !rest.iter().all(|&v| g.adjacent(v, apex)) {
                continue;
            }
            for p in rest.iter().copied().permutations(4) {
                if p[0] > p[3] {
                    continue;
                }
                let w = GemWitness {
                    path: [p[0], p[1], p[2], p[3]],
                    apex,
                };
                if w.holds_in(g) {
                    return Some(w);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path 0-1-2-3 with apex 4.
    fn gem() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).tuple_combinations().collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn split_partition_examples() {
        let SplitResult::Split(sg) = find_split_partition(&complete(3)) else {
            panic!("K3 not split");
        };
        assert_eq!(sg.clique, vec![0, 1, 2]);
        assert!(sg.stable.is_empty());

        let SplitResult::NotSplit(w) = find_split_partition(&cycle(4)) else {
            panic!("C4 split");
        };
        assert!(w.holds_in(&cycle(4)));
        assert_eq!(w.obstruction, Obstruction::C4);

        let SplitResult::Split(sg) = find_split_partition(&gem()) else {
            panic!("gem not split");
        };
        assert_eq!(sg.clique, vec![1, 2, 4]);
        assert_eq!(sg.stable, vec![0, 3]);
    }

    #[test]
    fn c5_and_2k2_are_not_split() {
        let SplitResult::NotSplit(w) = find_split_partition(&cycle(5)) else {
            panic!("C5 split");
        };
        assert_eq!(w.obstruction, Obstruction::C5);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let SplitResult::NotSplit(w) = find_split_partition(&two_k2) else {
            panic!("2K2 split");
        };
        assert_eq!(w.obstruction, Obstruction::TwoK2);
    }

    #[test]
    fn sk_matrix_examples() {
        let sg = SplitGraph::new(gem(), vec![1, 4, 2], vec![0, 3]).unwrap();
        let a = adjacency_matrix_sk(&sg).unwrap();
        assert_eq!(a, BinaryMatrix::from_rows(&["110", "011"]).unwrap());

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let sg = SplitGraph::new(star, vec![0], vec![1, 2, 3]).unwrap();
        assert_eq!(
            adjacency_matrix_sk(&sg).unwrap(),
            BinaryMatrix::from_rows(&["1", "1", "1"]).unwrap()
        );

        let triangle_and_isolated = Graph::from_edges(4, &complete(3).edges()).unwrap();
        let sg = SplitGraph::new(triangle_and_isolated, vec![0, 1, 2], vec![3]).unwrap();
        assert!(adjacency_matrix_sk(&sg).unwrap().is_all_zero());

        let sg = SplitGraph::new(complete(3), vec![0, 1, 2], vec![]).unwrap();
        assert!(matches!(
            adjacency_matrix_sk(&sg),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn nested_graph_examples() {
        match is_nested_graph(&gem()).unwrap() {
            NestedGraphResult::Gem(w) => {
                assert!(w.holds_in(&gem()));
                assert_eq!(w.apex, 4);
                let mut path = w.path;
                path.sort_unstable();
                assert_eq!(path, [0, 1, 2, 3]);
            }
            other => panic!("gem accepted: {other:?}"),
        }
        assert!(is_nested_graph(&complete(4)).unwrap().accepted());
        assert!(matches!(
            is_nested_graph(&cycle(4)).unwrap(),
            NestedGraphResult::NotSplit(_)
        ));
    }

    #[test]
    fn two_nested_graph_examples() {
        assert!(is_two_nested_graph(&gem()).unwrap().accepted());
        assert!(is_two_nested_graph(&Graph::empty(3).unwrap())
            .unwrap()
            .accepted());

        // Stable vertices 5,6,7 over clique 0..5 with neighborhoods 123/234/345.
        let mut g = complete(5);
        g = Graph::from_edges(8, &g.edges()).unwrap();
        for (s, ks) in [(5, [0, 1, 2]), (6, [1, 2, 3]), (7, [2, 3, 4])] {
            for k in ks {
                g.add_edge(s, k).unwrap();
            }
        }
        match is_two_nested_graph(&g).unwrap() {
            TwoNestedGraphResult::Rejected {
                certificate: MatrixCertificate::Configuration { witness, .. },
                ..
            } => assert_eq!(witness.family, crate::generators::FamilySpec::F0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn induced_gem_search() {
        let g = Graph::from_edges(6, &gem().edges()).unwrap();
        let w = find_induced_gem(&g).unwrap();
        assert_eq!(
            w,
            GemWitness {
                path: [0, 1, 2, 3],
                apex: 4
            }
        );
        assert_eq!(find_induced_gem(&cycle(5)), None);

        let mut broken = gem();
        broken.remove_edge(4, 1);
        assert_eq!(find_induced_gem(&broken), None);
    }

    #[test]
    fn parse_and_serialize() {
        let text = "3 2\n1 2\n2 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.to_text(), text);
        for bad in [
            "3 2\n2 3\n1 2\n",
            "3 2\n1 2\n1 2\n",
            "3 1\n2 1\n",
            "3 1\n1 4\n",
            "3 1\n1 2",
            "3 2\n1 2\n",
            "0 0\n",
            "3 0\n1 2\n",
        ] {
            assert!(
                matches!(Graph::parse(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn partitions_of_k2() {
        let g = complete(2);
        let SplitResult::Split(base) = find_split_partition(&g) else {
            panic!()
        };
        assert_eq!(all_split_partitions(&base).len(), 3);
    }
}
