//! Brute-force ground truth. Everything here works on raw row bitmasks and
//! exhaustive search so that it shares no logic with the recognizers it is
//! used to check. Size guards keep each call bounded.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::matrix::BinaryMatrix;

pub const MAX_ORACLE_COLS: usize = 8;
pub const MAX_ORACLE_ROWS: usize = 12;
pub const MAX_CONFIGURATION_ROWS: usize = 12;
pub const MAX_PARTITION_VERTICES: usize = 10;

fn row_masks(a: &BinaryMatrix) -> Vec<u32> {
    (0..a.n_rows())
        .map(|i| {
            (0..a.n_cols())
                .filter(|&j| a.get(i, j))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect()
}

fn crossing(x: u32, y: u32) -> bool {
    x & y != 0 && x & !y != 0 && y & !x != 0
}

fn guard_cols(a: &BinaryMatrix) -> Result<()> {
    if a.n_cols() > MAX_ORACLE_COLS {
        return Err(Error::Guard(format!(
            "{} columns exceed the oracle limit of {MAX_ORACLE_COLS}",
            a.n_cols()
        )));
    }
    Ok(())
}

/// Tries column orders one position at a time. A row stays contiguous
/// exactly when each of its columns placed after the first lands directly
/// after another of its columns.
fn some_order_contiguous(rows: &[u32], placed: u32, last: Option<usize>, m: usize) -> bool {
    if placed.count_ones() as usize == m {
        return true;
    }
    (0..m).filter(|&c| placed & (1 << c) == 0).any(|c| {
        let fits = rows.iter().all(|&r| {
            r & (1 << c) == 0 || r & placed == 0 || last.is_some_and(|p| r & (1 << p) != 0)
        });
        fits && some_order_contiguous(rows, placed | 1 << c, Some(c), m)
    })
}

pub fn oracle_c1p(a: &BinaryMatrix) -> Result<bool> {
    guard_cols(a)?;
    Ok(some_order_contiguous(&row_masks(a), 0, None, a.n_cols()))
}

pub fn oracle_nested(a: &BinaryMatrix) -> Result<bool> {
    guard_cols(a)?;
    let rows = row_masks(a);
    let laminar = rows
        .iter()
        .enumerate()
        .all(|(i, &x)| rows[i + 1..].iter().all(|&y| !crossing(x, y)));
    Ok(laminar && some_order_contiguous(&rows, 0, None, a.n_cols()))
}

pub fn oracle_two_nested(a: &BinaryMatrix) -> Result<bool> {
    guard_cols(a)?;
    if a.n_rows() > MAX_ORACLE_ROWS {
        return Err(Error::Guard(format!(
            "{} rows exceed the oracle limit of {MAX_ORACLE_ROWS}",
            a.n_rows()
        )));
    }
    let rows = row_masks(a);
    if !some_order_contiguous(&rows, 0, None, a.n_cols()) {
        return Ok(false);
    }
    let n = rows.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |k| (i, k)))
        .filter(|&(i, k)| crossing(rows[i], rows[k]))
        .collect();
    Ok((0u32..1 << n).any(|side| {
        pairs
            .iter()
            .all(|&(i, k)| (side >> i) & 1 != (side >> k) & 1)
    }))
}

/// Row and column injections that carry a target matrix into `a`.
/// `rows[r]` and `cols[c]` are the rows and columns of `a` standing for
/// row `r` and column `c` of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Searches for a submatrix of `a` equal to `target` up to row and column
/// permutations. Rows are assigned in order with lowest candidates first;
/// after each assignment, every partial column pattern the target needs
/// must be available at least as often among the columns of `a`.
pub fn oracle_contains_configuration(
    a: &BinaryMatrix,
    target: &BinaryMatrix,
) -> Result<Option<Embedding>> {
    if target.n_rows() > MAX_CONFIGURATION_ROWS {
        return Err(Error::Guard(format!(
            "target has {} rows, more than the limit of {MAX_CONFIGURATION_ROWS}",
            target.n_rows()
        )));
    }
    if target.n_rows() > a.n_rows() || target.n_cols() > a.n_cols() {
        return Ok(None);
    }
    let mut rows = Vec::with_capacity(target.n_rows());
    let mut used = vec![false; a.n_rows()];
    Ok(embed_rows(a, target, &mut rows, &mut used))
}

fn column_patterns(m: &BinaryMatrix, rows: &[usize]) -> Vec<u32> {
    (0..m.n_cols())
        .map(|j| {
            rows.iter()
                .enumerate()
                .fold(0, |p, (b, &i)| p | (m.get(i, j) as u32) << b)
        })
        .collect()
}

/// Assigns the target's columns to `a`'s columns with matching patterns,
/// lowest index first. `None` when some pattern is in short supply.
fn match_columns(a_pats: &[u32], t_pats: &[u32]) -> Option<Vec<usize>> {
    let mut taken = vec![false; a_pats.len()];
    t_pats
        .iter()
        .map(|&p| {
            let j = (0..a_pats.len()).find(|&j| !taken[j] && a_pats[j] == p)?;
            taken[j] = true;
            Some(j)
        })
        .collect()
}

fn embed_rows(
    a: &BinaryMatrix,
    target: &BinaryMatrix,
    rows: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Embedding> {
    let depth = rows.len();
    let t_rows: Vec<usize> = (0..depth).collect();
    let t_pats = column_patterns(target, &t_rows);
    let a_pats = column_patterns(a, rows);
    let cols = match_columns(&a_pats, &t_pats)?;
    if depth == target.n_rows() {
        return Some(Embedding {
            rows: rows.clone(),
            cols,
        });
    }
    for i in 0..a.n_rows() {
        if used[i] {
            continue;
        }
        used[i] = true;
        rows.push(i);
        if let Some(found) = embed_rows(a, target, rows, used) {
            return Some(found);
        }
        rows.pop();
        used[i] = false;
    }
    None
}

/// Every split partition as `(clique, stable)`, enumerated by clique
/// bitmask in increasing order.
pub fn oracle_all_split_partitions(g: &Graph) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = g.n();
    if n > MAX_PARTITION_VERTICES {
        return Err(Error::Guard(format!(
            "{n} vertices exceed the partition limit of {MAX_PARTITION_VERTICES}"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let (clique, stable): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| mask >> v & 1 == 1);
        let clique_ok = clique
            .iter()
            .all(|&u| clique.iter().all(|&v| u == v || g.adjacent(u, v)));
        let stable_ok = stable
            .iter()
            .all(|&u| stable.iter().all(|&v| !g.adjacent(u, v)));
        if clique_ok && stable_ok {
            out.push((clique, stable));
        }
    }
    Ok(out)
}
