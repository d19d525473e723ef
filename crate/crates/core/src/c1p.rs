//! Consecutive-ones testing for the rows.
//!
//! The decision procedure works on overlap components: rows linked through
//! chains of crossing pairs. Inside one component the order of the column
//! classes is forced up to reversal, so the component is built incrementally
//! by inserting rows in breadth-first order and refining an ordered partition
//! of the columns seen so far. Distinct components have laminar unions, and a
//! component nested inside another falls within a single column class of it,
//! so the final order is assembled by laying components out recursively.
//!
//! Rejections come with a Tucker witness obtained by greedy deletion.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::generators::{gen_tucker, FamilySpec};
use crate::matrix::BinaryMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum C1pResult {
    /// Column `j` of the reordered matrix is column `ordering[j]` of the input.
    Ordering(Vec<usize>),
    Witness(TuckerWitness),
}

impl C1pResult {
    pub fn is_c1p(&self) -> bool {
        matches!(self, C1pResult::Ordering(_))
    }
}

/// A row/column selection whose submatrix lacks the consecutive-ones property
/// while every single-row or single-column deletion of it has the property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuckerWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `None` when the submatrix matches no generated Tucker family.
    pub family: Option<FamilySpec>,
}

pub fn test_c1p(a: &BinaryMatrix) -> C1pResult {
    match c1p_ordering(a) {
        Some(ordering) => C1pResult::Ordering(ordering),
        None => {
            let mut witness = greedy_witness(a);
            witness.family =
                classify_submatrix(&a.submatrix(&witness.rows, &witness.cols).unwrap());
            C1pResult::Witness(witness)
        }
    }
}

pub fn has_c1p(a: &BinaryMatrix) -> bool {
    c1p_ordering(a).is_some()
}

/// Shrinks a non-C1P matrix to a deletion-minimal non-C1P submatrix.
///
/// Rows are tried in ascending order, then columns. One pass suffices: if
/// removing an index from the final selection kept it non-C1P, removing it
/// from the larger selection present when it was tried would have as well.
pub fn minimal_non_c1p_submatrix(a: &BinaryMatrix) -> Result<TuckerWitness> {
    if has_c1p(a) {
        return Err(Error::Contract(
            "minimal_non_c1p_submatrix called on a matrix with the consecutive-ones property"
                .into(),
        ));
    }
    Ok(greedy_witness(a))
}

fn greedy_witness(a: &BinaryMatrix) -> TuckerWitness {
    let mut rows: Vec<usize> = (0..a.n_rows()).collect();
    let mut cols: Vec<usize> = (0..a.n_cols()).collect();
    let still_bad = |rows: &[usize], cols: &[usize]| {
        !rows.is_empty() && !cols.is_empty() && !has_c1p(&a.submatrix(rows, cols).unwrap())
    };

    for i in 0..a.n_rows() {
        let trial: Vec<usize> = rows.iter().copied().filter(|&r| r != i).collect();
        if still_bad(&trial, &cols) {
            rows = trial;
        }
    }
    for j in 0..a.n_cols() {
        let trial: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        if still_bad(&rows, &trial) {
            cols = trial;
        }
    }
    TuckerWitness {
        rows,
        cols,
        family: None,
    }
}

/// Checks that a witness is non-C1P and deletion-minimal for `a`.
pub fn is_valid_tucker_witness(a: &BinaryMatrix, w: &TuckerWitness) -> Result<bool> {
    let sub = a.submatrix(&w.rows, &w.cols)?;
    if has_distinct(&w.rows) && has_distinct(&w.cols) {
        if has_c1p(&sub) {
            return Ok(false);
        }
        let rows_minimal = (0..w.rows.len()).all(|drop| {
            let keep: Vec<usize> = (0..w.rows.len()).filter(|&r| r != drop).collect();
            keep.is_empty()
                || has_c1p(
                    &sub.submatrix(&keep, &(0..w.cols.len()).collect::<Vec<_>>())
                        .unwrap(),
                )
        });
        let cols_minimal = (0..w.cols.len()).all(|drop| {
            let keep: Vec<usize> = (0..w.cols.len()).filter(|&c| c != drop).collect();
            keep.is_empty()
                || has_c1p(
                    &sub.submatrix(&(0..w.rows.len()).collect::<Vec<_>>(), &keep)
                        .unwrap(),
                )
        });
        Ok(rows_minimal && cols_minimal)
    } else {
        Ok(false)
    }
}

fn has_distinct(xs: &[usize]) -> bool {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Names the Tucker family a witness belongs to, if any.
pub fn classify_tucker(a: &BinaryMatrix, w: &TuckerWitness) -> Result<Option<FamilySpec>> {
    if !is_valid_tucker_witness(a, w)? {
        return Err(Error::Contract(
            "witness is not a deletion-minimal non-C1P submatrix".into(),
        ));
    }
    Ok(classify_submatrix(&a.submatrix(&w.rows, &w.cols)?))
}

fn classify_submatrix(sub: &BinaryMatrix) -> Option<FamilySpec> {
    let (r, c) = (sub.n_rows(), sub.n_cols());
    let mut candidates = Vec::new();
    if r == c && r >= 3 {
        candidates.push(FamilySpec::MI(r - 2));
    }
    if r == c && r >= 4 {
        candidates.push(FamilySpec::MII(r - 3));
    }
    if c == r + 1 && r >= 3 {
        candidates.push(FamilySpec::MIII(r - 2));
    }
    if (r, c) == (4, 6) {
        candidates.push(FamilySpec::MIV);
    }
    if (r, c) == (4, 5) {
        candidates.push(FamilySpec::MV);
    }
    candidates.into_iter().find(|spec| {
        gen_tucker(*spec)
            .map(|t| equal_up_to_permutation(sub, &t))
            .unwrap_or(false)
    })
}

/// True when `b` can be obtained from `a` by permuting rows and columns.
pub fn equal_up_to_permutation(a: &BinaryMatrix, b: &BinaryMatrix) -> bool {
    if a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols() {
        return false;
    }
    let mut a_weights: Vec<usize> = (0..a.n_rows()).map(|i| a.row_weight(i)).collect();
    let mut b_weights: Vec<usize> = (0..b.n_rows()).map(|i| b.row_weight(i)).collect();
    a_weights.sort_unstable();
    b_weights.sort_unstable();
    if a_weights != b_weights {
        return false;
    }
    let mut used = vec![false; a.n_rows()];
    let mut assigned = Vec::with_capacity(b.n_rows());
    match_rows(a, b, &mut used, &mut assigned)
}

// Assigns b's rows to a's rows one at a time, pruning whenever the multiset
// of partial columns (restricted to the rows assigned so far) diverges.
fn match_rows(
    a: &BinaryMatrix,
    b: &BinaryMatrix,
    used: &mut [bool],
    assigned: &mut Vec<usize>,
) -> bool {
    let t = assigned.len();
    if t == b.n_rows() {
        return true;
    }
    for cand in 0..a.n_rows() {
        if used[cand] || a.row_weight(cand) != b.row_weight(t) {
            continue;
        }
        assigned.push(cand);
        let b_rows: Vec<usize> = (0..=t).collect();
        if partial_columns(a, assigned) == partial_columns(b, &b_rows) {
            used[cand] = true;
            if match_rows(a, b, used, assigned) {
                return true;
            }
            used[cand] = false;
        }
        assigned.pop();
    }
    false
}

fn partial_columns(m: &BinaryMatrix, rows: &[usize]) -> Vec<Vec<bool>> {
    let mut cols: Vec<Vec<bool>> = (0..m.n_cols())
        .map(|j| rows.iter().map(|&i| m.get(i, j)).collect())
        .collect();
    cols.sort_unstable();
    cols
}

/// Returns a column order making every row contiguous, or `None`.
pub(crate) fn c1p_ordering(a: &BinaryMatrix) -> Option<Vec<usize>> {
    let m = a.n_cols();
    if a.has_consecutive_rows() {
        return Some((0..m).collect());
    }

    // Rows with fewer than two 1s constrain nothing; duplicates add nothing.
    let mut supports: Vec<Vec<usize>> = (0..a.n_rows())
        .map(|i| a.row_support(i))
        .filter(|s| s.len() >= 2)
        .collect();
    supports.sort();
    supports.dedup();
    let masks: Vec<Vec<bool>> = supports
        .iter()
        .map(|s| {
            let mut v = vec![false; m];
            s.iter().for_each(|&j| v[j] = true);
            v
        })
        .collect();
    let sup = BinaryMatrix::from_supports(m, &supports).ok();

    let mut components: Vec<Component> = Vec::new();
    let mut seen = vec![false; supports.len()];
    for start in 0..supports.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut blocks = vec![supports[start].clone()];
        let mut size = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in 0..supports.len() {
                if !seen[y] && sup.as_ref().is_some_and(|s| s.crosses(x, y)) {
                    seen[y] = true;
                    if !insert_row(&mut blocks, &masks[y], &supports[y]) {
                        return None;
                    }
                    size += 1;
                    queue.push_back(y);
                }
            }
        }
        let mut union: Vec<usize> = blocks.iter().flatten().copied().collect();
        union.sort_unstable();
        components.push(Component {
            union,
            blocks,
            single_row: size == 1,
        });
    }

    // A single row equal to the union of a larger component is implied by it.
    let multi_unions: Vec<Vec<usize>> = components
        .iter()
        .filter(|c| !c.single_row)
        .map(|c| c.union.clone())
        .collect();
    components.retain(|c| !c.single_row || !multi_unions.contains(&c.union));
    components.sort_by(|x, y| {
        y.union
            .len()
            .cmp(&x.union.len())
            .then_with(|| x.union.cmp(&y.union))
    });

    let k = components.len();
    let mut parent: Vec<Option<usize>> = vec![None; k];
    for c in 0..k {
        parent[c] = (0..c)
            .filter(|&p| {
                components[p].union.len() > components[c].union.len()
                    && is_subset(&components[c].union, &components[p].union)
            })
            .min_by_key(|&p| components[p].union.len());
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (c, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(c);
        }
    }

    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    let mut roots: Vec<usize> = (0..k).filter(|&c| parent[c].is_none()).collect();
    roots.sort_by_key(|&c| components[c].union[0]);
    for r in roots {
        layout(r, &components, &children, &mut order);
    }
    for &j in &order {
        placed[j] = true;
    }
    order.extend((0..m).filter(|&j| !placed[j]));

    debug_assert_eq!(order.len(), m);
    debug_assert!(a.permute_columns(&order).unwrap().has_consecutive_rows());
    Some(order)
}

struct Component {
    union: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    single_row: bool,
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

fn layout(c: usize, comps: &[Component], children: &[Vec<usize>], out: &mut Vec<usize>) {
    let comp = &comps[c];
    for block in &comp.blocks {
        let mut covered: Vec<usize> = Vec::new();
        for &ch in &children[c] {
            if block.contains(&comps[ch].union[0]) {
                layout(ch, comps, children, out);
                covered.extend(&comps[ch].union);
            }
        }
        let mut rest: Vec<usize> = block
            .iter()
            .copied()
            .filter(|j| !covered.contains(j))
            .collect();
        rest.sort_unstable();
        out.extend(rest);
    }
}

/// Inserts a row that crosses at least one row already represented by
/// `blocks`, refining the block sequence. Returns false when no placement
/// keeps every row contiguous.
fn insert_row(blocks: &mut Vec<Vec<usize>>, mask: &[bool], cols: &[usize]) -> bool {
    let t = blocks.len();
    let touched: Vec<usize> = (0..t)
        .filter(|&i| blocks[i].iter().any(|&j| mask[j]))
        .collect();
    let (Some(&a), Some(&b)) = (touched.first(), touched.last()) else {
        return false;
    };
    if touched.len() != b - a + 1 {
        return false;
    }
    let full = |i: usize| blocks[i].iter().all(|&j| mask[j]);
    if (a + 1..b).any(|i| !full(i)) {
        return false;
    }
    let in_union: Vec<bool> = {
        let mut v = vec![false; mask.len()];
        blocks.iter().flatten().for_each(|&j| v[j] = true);
        v
    };
    let fresh: Vec<usize> = cols.iter().copied().filter(|&j| !in_union[j]).collect();

    let split =
        |block: &[usize]| -> (Vec<usize>, Vec<usize>) { block.iter().partition(|&&j| !mask[j]) };

    if fresh.is_empty() {
        if a == b {
            return false;
        }
        let (b_in, b_out) = {
            let (out, inn) = split(&blocks[b]);
            (inn, out)
        };
        let (a_out, a_in) = split(&blocks[a]);
        let mut next = Vec::with_capacity(t + 2);
        next.extend(blocks[..a].iter().cloned());
        push_nonempty(&mut next, a_out);
        push_nonempty(&mut next, a_in);
        next.extend(blocks[a + 1..b].iter().cloned());
        push_nonempty(&mut next, b_in);
        push_nonempty(&mut next, b_out);
        next.extend(blocks[b + 1..].iter().cloned());
        *blocks = next;
        return true;
    }

    let right_ok = b == t - 1 && (a == b || full(b));
    let left_ok = a == 0 && (a == b || full(a));
    if right_ok {
        let (a_out, a_in) = split(&blocks[a]);
        let mut next = Vec::with_capacity(t + 2);
        next.extend(blocks[..a].iter().cloned());
        push_nonempty(&mut next, a_out);
        push_nonempty(&mut next, a_in);
        next.extend(blocks[a + 1..].iter().cloned());
        next.push(fresh);
        *blocks = next;
        true
    } else if left_ok {
        let (b_out, b_in) = split(&blocks[b]);
        let mut next = Vec::with_capacity(t + 2);
        next.push(fresh);
        next.extend(blocks[..b].iter().cloned());
        push_nonempty(&mut next, b_in);
        push_nonempty(&mut next, b_out);
        next.extend(blocks[b + 1..].iter().cloned());
        *blocks = next;
        true
    } else {
        false
    }
}

fn push_nonempty(v: &mut Vec<Vec<usize>>, block: Vec<usize>) {
    if !block.is_empty() {
        v.push(block);
    }
}
