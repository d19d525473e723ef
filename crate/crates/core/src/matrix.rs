//! Dense (0,1)-matrices and the pairwise row predicates.
//!
//! Rows are stored as packed bit words, so support-set comparisons between
//! two rows are a handful of word operations. Indices are 0-based in the API;
//! the text format is the only place where 1-based numbering appears.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n_rows: usize,
    n_cols: usize,
    stride: usize,
    words: Vec<u64>,
}

/// First and last 1-column of a row, or `None` for an all-zero row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowInterval {
    pub row: usize,
    pub bounds: Option<(usize, usize)>,
}

impl RowInterval {
    pub fn is_present(&self) -> bool {
        self.bounds.is_some()
    }

    pub fn l(&self) -> Option<usize> {
        self.bounds.map(|(l, _)| l)
    }

    pub fn r(&self) -> Option<usize> {
        self.bounds.map(|(_, r)| r)
    }
}

/// Relation between the supports of an ordered pair of rows.
///
/// Containment is tested before disjointness, so an all-zero row is
/// `FirstInSecond` (or `SecondInFirst`) against any other row and `Equal`
/// against another all-zero row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowRelation {
    Disjoint,
    FirstInSecond,
    SecondInFirst,
    Equal,
    Crossing,
}

impl RowRelation {
    pub fn is_nested(self) -> bool {
        matches!(
            self,
            RowRelation::FirstInSecond | RowRelation::SecondInFirst | RowRelation::Equal
        )
    }

    pub fn is_crossing(self) -> bool {
        self == RowRelation::Crossing
    }

    pub fn swapped(self) -> Self {
        match self {
            RowRelation::FirstInSecond => RowRelation::SecondInFirst,
            RowRelation::SecondInFirst => RowRelation::FirstInSecond,
            other => other,
        }
    }
}

impl BinaryMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::Degenerate(format!(
                "matrix dimensions must be positive, got {n_rows}x{n_cols}"
            )));
        }
        let stride = n_cols.div_ceil(WORD);
        Ok(BinaryMatrix {
            n_rows,
            n_cols,
            stride,
            words: vec![0; stride * n_rows],
        })
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols)?;
        for i in 0..n_rows {
            for j in 0..n_cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from rows written as strings of `0`/`1`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), n_cols)?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::Usage(format!(
                    "row {} has length {}, expected {n_cols}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, b) in row.bytes().enumerate() {
                match b {
                    b'0' => {}
                    b'1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::Usage(format!(
                            "row {} contains {:?}, expected 0 or 1",
                            i + 1,
                            b as char
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix whose rows have their 1s exactly at the given columns.
    pub fn from_supports(n_cols: usize, supports: &[Vec<usize>]) -> Result<Self> {
        let mut m = Self::zeros(supports.len(), n_cols)?;
        for (i, cols) in supports.iter().enumerate() {
            for &j in cols {
                if j >= n_cols {
                    return Err(Error::Usage(format!("column {j} out of range")));
                }
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "index ({i},{j}) out of range"
        );
        self.words[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "index ({i},{j}) out of range"
        );
        let w = &mut self.words[i * self.stride + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// Column indices carrying a 1 in row `i`, ascending.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.row_words(i).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * WORD + b);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.n_rows).map(|i| self.get(i, j)).collect()
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i >= self.n_rows {
            return Err(Error::Usage(format!(
                "row index {i} out of range for {} rows",
                self.n_rows
            )));
        }
        Ok(())
    }

    fn first_one(&self, i: usize) -> Option<usize> {
        self.row_words(i)
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + w.trailing_zeros() as usize)
    }

    fn last_one(&self, i: usize) -> Option<usize> {
        self.row_words(i)
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn row_interval(&self, i: usize) -> Result<RowInterval> {
        self.check_row(i)?;
        let bounds = self.first_one(i).zip(self.last_one(i));
        Ok(RowInterval { row: i, bounds })
    }

    pub fn relate_rows(&self, i: usize, k: usize) -> Result<RowRelation> {
        self.check_row(i)?;
        self.check_row(k)?;
        if i == k {
            return Err(Error::Usage(format!("cannot relate row {i} to itself")));
        }
        Ok(self.relation(i, k))
    }

    /// Unchecked form of [`relate_rows`](Self::relate_rows); also accepts `i == k`.
    pub(crate) fn relation(&self, i: usize, k: usize) -> RowRelation {
        let (a, b) = (self.row_words(i), self.row_words(k));
        let mut shared = false;
        let mut a_only = false;
        let mut b_only = false;
        for (&x, &y) in a.iter().zip(b) {
            shared |= x & y != 0;
            a_only |= x & !y != 0;
            b_only |= y & !x != 0;
        }
        match (a_only, b_only) {
            (false, false) => RowRelation::Equal,
            (false, true) => RowRelation::FirstInSecond,
            (true, false) => RowRelation::SecondInFirst,
            (true, true) if !shared => RowRelation::Disjoint,
            (true, true) => RowRelation::Crossing,
        }
    }

    pub(crate) fn crosses(&self, i: usize, k: usize) -> bool {
        self.relation(i, k) == RowRelation::Crossing
    }

    /// Column `j` of the result is column `pi[j]` of `self`.
    pub fn permute_columns(&self, pi: &[usize]) -> Result<Self> {
        check_permutation(pi, self.n_cols)?;
        BinaryMatrix::from_fn(self.n_rows, self.n_cols, |i, j| self.get(i, pi[j]))
    }

    pub fn permute_rows(&self, sigma: &[usize]) -> Result<Self> {
        check_permutation(sigma, self.n_rows)?;
        BinaryMatrix::from_fn(self.n_rows, self.n_cols, |i, j| self.get(sigma[i], j))
    }

    /// The submatrix read in the given row and column order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&i) = rows.iter().find(|&&i| i >= self.n_rows) {
            return Err(Error::Usage(format!("row index {i} out of range")));
        }
        if let Some(&j) = cols.iter().find(|&&j| j >= self.n_cols) {
            return Err(Error::Usage(format!("column index {j} out of range")));
        }
        BinaryMatrix::from_fn(rows.len(), cols.len(), |a, b| self.get(rows[a], cols[b]))
    }

    /// True iff every nonzero row has its 1s in one contiguous block of
    /// columns under the current column order.
    pub fn has_consecutive_rows(&self) -> bool {
        (0..self.n_rows).all(|i| match self.first_one(i).zip(self.last_one(i)) {
            None => true,
            Some((l, r)) => self.row_weight(i) == r - l + 1,
        })
    }

    pub fn is_all_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parses the matrix text format: a header line `n m`, then `n` lines of
    /// exactly `m` characters from `{0,1}`, every line newline-terminated.
    pub fn parse(text: &str) -> Result<Self> {
        let lines = split_terminated_lines(text)?;
        let Some(header) = lines.first() else {
            return Err(Error::parse(1, 1, "empty input"));
        };
        let (n, m) = parse_header(header, 1)?;
        if n == 0 || m == 0 {
            return Err(Error::parse(1, 1, "dimensions must be positive"));
        }
        if lines.len() - 1 < n {
            return Err(Error::parse(
                lines.len() + 1,
                1,
                format!("expected {n} matrix rows, found {}", lines.len() - 1),
            ));
        }
        if lines.len() - 1 > n {
            return Err(Error::parse(n + 2, 1, "unexpected line after the last row"));
        }
        let mut out = BinaryMatrix::zeros(n, m)?;
        for (i, line) in lines[1..].iter().enumerate() {
            for (j, b) in line.bytes().enumerate() {
                match b {
                    b'0' => {}
                    b'1' if j < m => out.set(i, j, true),
                    b'1' => {}
                    _ => {
                        return Err(Error::parse(
                            i + 2,
                            j + 1,
                            format!("unexpected character {:?}", b as char),
                        ))
                    }
                }
            }
            if line.len() != m {
                return Err(Error::parse(
                    i + 2,
                    line.len().min(m) + 1,
                    format!("row has {} entries, expected {m}", line.len()),
                ));
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n_rows, self.n_cols);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.n_cols)
            .map(|j| if self.get(i, j) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n_rows).map(|i| self.row_string(i)).collect();
        write!(f, "BinaryMatrix[{}]", rows.join(","))
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows {
            writeln!(f, "{}", self.row_string(i))?;
        }
        Ok(())
    }
}

pub(crate) fn check_permutation(pi: &[usize], n: usize) -> Result<()> {
    if pi.len() != n {
        return Err(Error::Usage(format!(
            "permutation has length {}, expected {n}",
            pi.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in pi {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Usage(format!(
                "{pi:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

pub fn invert_permutation(pi: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; pi.len()];
    for (j, &p) in pi.iter().enumerate() {
        inv[p] = j;
    }
    inv
}

/// Splits text into lines, requiring every line (including the last) to end
/// with `\n` and rejecting carriage returns.
pub(crate) fn split_terminated_lines(text: &str) -> Result<Vec<&str>> {
    if text.is_empty() {
        return Err(Error::parse(1, 1, "empty input"));
    }
    if let Some(pos) = text.find('\r') {
        let line = text[..pos].matches('\n').count() + 1;
        let col = pos - text[..pos].rfind('\n').map_or(0, |p| p + 1) + 1;
        return Err(Error::parse(line, col, "carriage return not allowed"));
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.matches('\n').count() + 1;
        let col = text.len() - text.rfind('\n').map_or(0, |p| p + 1) + 1;
        return Err(Error::parse(line, col, "missing final newline"));
    };
    Ok(body.split('\n').collect())
}

/// Parses `"a b"` with two decimal fields separated by exactly one space.
pub(crate) fn parse_header(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut parts = line.split(' ');
    let a = parts.next().unwrap_or("");
    let x = parse_decimal(a, line_no, 1)?;
    let Some(b) = parts.next() else {
        return Err(Error::parse(
            line_no,
            line.len() + 1,
            "expected two numbers",
        ));
    };
    let y = parse_decimal(b, line_no, a.len() + 2)?;
    if parts.next().is_some() {
        return Err(Error::parse(
            line_no,
            a.len() + b.len() + 2,
            "unexpected extra field",
        ));
    }
    Ok((x, y))
}

pub(crate) fn parse_decimal(s: &str, line: usize, column: usize) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::parse(line, column, "expected a number"));
    }
    if let Some(p) = s.bytes().position(|b| !b.is_ascii_digit()) {
        return Err(Error::parse(
            line,
            column + p,
            format!("unexpected character {:?}", s.as_bytes()[p] as char),
        ));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(Error::parse(line, column, "leading zeros not allowed"));
    }
    s.parse()
        .map_err(|_| Error::parse(line, column, "number out of range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn row_interval_examples() {
        let a = m(&["11100", "00000"]);
        assert_eq!(a.row_interval(0).unwrap().bounds, Some((0, 2)));
        assert!(!a.row_interval(1).unwrap().is_present());
        assert!(a.row_interval(2).is_err());

        let f0 = m(&["11100", "01110", "00111"]);
        let iv = f0.row_interval(0).unwrap();
        assert_eq!((iv.l(), iv.r()), (Some(0), Some(2)));
    }

    #[test]
    fn row_interval_across_word_boundary() {
        let mut a = BinaryMatrix::zeros(1, 130).unwrap();
        a.set(0, 63, true);
        a.set(0, 64, true);
        a.set(0, 129, true);
        assert_eq!(a.row_interval(0).unwrap().bounds, Some((63, 129)));
        assert_eq!(a.row_support(0), vec![63, 64, 129]);
        assert!(!a.has_consecutive_rows());
    }

    #[test]
    fn relate_rows_examples() {
        assert_eq!(
            m(&["110", "011"]).relate_rows(0, 1).unwrap(),
            RowRelation::Crossing
        );
        assert_eq!(
            m(&["010", "111"]).relate_rows(0, 1).unwrap(),
            RowRelation::FirstInSecond
        );
        assert_eq!(
            m(&["11000", "00011"]).relate_rows(0, 1).unwrap(),
            RowRelation::Disjoint
        );
        assert_eq!(
            m(&["101", "101"]).relate_rows(0, 1).unwrap(),
            RowRelation::Equal
        );
        assert!(m(&["1", "1"]).relate_rows(0, 0).is_err());
        assert!(m(&["1", "1"]).relate_rows(0, 2).is_err());
    }

    #[test]
    fn zero_rows_are_contained_everywhere() {
        let a = m(&["000", "101", "000"]);
        assert_eq!(a.relate_rows(0, 1).unwrap(), RowRelation::FirstInSecond);
        assert_eq!(a.relate_rows(1, 0).unwrap(), RowRelation::SecondInFirst);
        assert_eq!(a.relate_rows(0, 2).unwrap(), RowRelation::Equal);
    }

    #[test]
    fn permute_columns_examples() {
        let a = m(&["110"]);
        assert_eq!(a.permute_columns(&[0, 1, 2]).unwrap(), a);
        assert_eq!(a.permute_columns(&[2, 1, 0]).unwrap(), m(&["011"]));
        let pi = [2, 0, 1];
        let b = a.permute_columns(&pi).unwrap();
        assert_eq!(b.permute_columns(&invert_permutation(&pi)).unwrap(), a);
        assert!(a.permute_columns(&[0, 0, 1]).is_err());
        assert!(a.permute_columns(&[0, 1]).is_err());
    }

    #[test]
    fn consecutive_rows_examples() {
        assert!(m(&["11100", "01110", "00111"]).has_consecutive_rows());
        assert!(!m(&["101"]).has_consecutive_rows());
        assert!(m(&["00"]).has_consecutive_rows());
    }

    #[test]
    fn parse_accepts_canonical_text() {
        let text = "2 3\n110\n011\n";
        let a = BinaryMatrix::parse(text).unwrap();
        assert_eq!(a, m(&["110", "011"]));
        assert_eq!(a.to_text(), text);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        let bad = [
            ("", (1, 1)),
            ("0 3\n", (1, 1)),
            ("2 0\n\n\n", (1, 1)),
            ("1 3\n110", (2, 4)),
            ("1 3\n11\n", (2, 3)),
            ("1 3\n1101\n", (2, 4)),
            ("1 3\n1x0\n", (2, 2)),
            ("2 3\n110\n", (3, 1)),
            ("1 3\n110\n011\n", (3, 1)),
            ("1  3\n110\n", (1, 3)),
            ("1 3\r\n110\n", (1, 4)),
            ("1 3 \n110\n", (1, 4)),
        ];
        for (text, (line, column)) in bad {
            match BinaryMatrix::parse(text) {
                Err(Error::Parse {
                    line: l, column: c, ..
                }) => assert_eq!((l, c), (line, column), "input {text:?}"),
                other => panic!("input {text:?} gave {other:?}"),
            }
        }
    }
}
