//! Young diagrams, standard tableaux and the branching of diagrams.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Limits, Result};

/// An integer partition of `n`, drawn as left-justified rows of boxes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Rows must be positive and weakly decreasing.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDiagram("no rows"));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram("zero-length row"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram("row lengths increase"));
        }
        Ok(Self { rows })
    }

    /// The one-row diagram `[n]`.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The one-column diagram `[1^n]`.
    pub fn column(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_row(&self) -> bool {
        self.rows.len() == 1
    }

    pub fn is_column(&self) -> bool {
        self.rows.iter().all(|&r| r == 1)
    }

    /// Length of column `c` (0-based).
    pub fn column_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > c).count()
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.rows[row] - col - 1;
        let leg = self.column_len(col) - row - 1;
        arm + leg + 1
    }

    /// Rows whose last box can be removed leaving a valid diagram.
    pub fn corner_rows(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| i + 1 == self.rows.len() || self.rows[i] > self.rows[i + 1])
            .collect()
    }

    /// Removes the last box of `row`; `None` for an empty result.
    fn remove_box(&self, row: usize) -> Option<YoungDiagram> {
        let mut rows = self.rows.clone();
        rows[row] -= 1;
        if rows[row] == 0 {
            rows.pop();
        }
        if rows.is_empty() {
            None
        } else {
            Some(YoungDiagram { rows })
        }
    }

    /// Dimension `f_λ` of the irreducible representation, by the hook-length
    /// formula in exact integer arithmetic.
    pub fn dimension(&self) -> u64 {
        let mut hooks: Vec<u128> = Vec::with_capacity(self.n());
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len {
                hooks.push(self.hook_length(i, j) as u128);
            }
        }
        // n!/∏h, cancelling as we go so intermediates stay near the result
        let mut value: u128 = 1;
        for k in 1..=self.n() as u128 {
            value = value.checked_mul(k).expect("dimension overflow");
            for h in hooks.iter_mut().filter(|h| **h > 1) {
                let g = gcd(value, *h);
                value /= g;
                *h /= g;
            }
        }
        debug_assert!(hooks.iter().all(|&h| h == 1));
        u64::try_from(value).expect("dimension overflow")
    }

    /// Diagrams with one box fewer, in reverse-lexicographic order.
    pub fn branching(&self) -> Vec<YoungDiagram> {
        let mut corners = self.corner_rows();
        corners.reverse();
        corners
            .into_iter()
            .filter_map(|r| self.remove_box(r))
            .collect()
    }

    /// Standard tableaux in last-letter order.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let n = self.n();
        let mut out = Vec::new();
        let mut filling: Vec<(usize, usize)> = vec![(0, 0); n];
        fill_last_letter(self.clone(), &mut filling, &mut out);
        out.into_iter()
            .map(|positions| StandardTableau::from_positions(self.clone(), positions))
            .collect()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// Places entry n in each corner (lowest row first), recursing on the rest.
fn fill_last_letter(
    shape: YoungDiagram,
    filling: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let n = shape.n();
    let mut corners = shape.corner_rows();
    corners.reverse();
    for row in corners {
        let col = shape.rows[row] - 1;
        filling[n - 1] = (row, col);
        match shape.remove_box(row) {
            Some(smaller) => fill_last_letter(smaller, filling, out),
            None => out.push(filling.clone()),
        }
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Comma-separated row lengths, e.g. `2,1`.
impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r)?;
        }
        Ok(())
    }
}

/// A filling of a diagram with `1..=n`, increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    diagram: YoungDiagram,
    /// `positions[k-1]` is the (row, column) of entry `k`.
    positions: Vec<(usize, usize)>,
}

impl StandardTableau {
    fn from_positions(diagram: YoungDiagram, positions: Vec<(usize, usize)>) -> Self {
        Self { diagram, positions }
    }

    /// Builds a tableau from its rows of entries, checking that it is standard.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let diagram = YoungDiagram::new(rows.iter().map(|r| r.len()).collect())?;
        let n = diagram.n();
        let mut positions = vec![(usize::MAX, usize::MAX); n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                if k == 0 || k > n || positions[k - 1].0 != usize::MAX {
                    return Err(Error::InvalidDiagram("entries are not 1..=n"));
                }
                positions[k - 1] = (i, j);
                if j > 0 && row[j - 1] >= k {
                    return Err(Error::InvalidDiagram("row not increasing"));
                }
                if i > 0 && rows[i - 1][j] >= k {
                    return Err(Error::InvalidDiagram("column not increasing"));
                }
            }
        }
        Ok(Self { diagram, positions })
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    /// (row, column) of entry `k` (1-based entry, 0-based coordinates).
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.positions[k - 1]
    }

    /// Content `column − row` of entry `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.position(k);
        c as i64 - r as i64
    }

    /// Entries row by row.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.diagram.rows.iter().map(|&l| vec![0; l]).collect();
        for (k, &(r, c)) in self.positions.iter().enumerate() {
            rows[r][c] = k + 1;
        }
        rows
    }

    /// The tableau with entries `k` and `k+1` exchanged, if still standard.
    pub fn swap_adjacent(&self, k: usize) -> Option<StandardTableau> {
        let (r1, c1) = self.position(k);
        let (r2, c2) = self.position(k + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut positions = self.positions.clone();
        positions.swap(k - 1, k);
        Some(Self {
            diagram: self.diagram.clone(),
            positions,
        })
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// All partitions of `n` in reverse-lexicographic order (`[n]` first,
/// `[1^n]` last), with the default enumeration limit.
pub fn partitions(n: usize) -> Result<Vec<YoungDiagram>> {
    partitions_with_limit(n, Limits::DEFAULT.partition_n)
}

pub fn partitions_with_limit(n: usize, max_n: usize) -> Result<Vec<YoungDiagram>> {
    if n == 0 {
        return Err(Error::Degenerate("partitions of zero"));
    }
    if n > max_n {
        return Err(Error::LimitExceeded {
            what: "partition size",
            value: n,
            limit: max_n,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    partitions_rec(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn partitions_rec(
    remaining: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<YoungDiagram>,
) {
    if remaining == 0 {
        out.push(YoungDiagram {
            rows: prefix.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// Directed graph of diagrams with `1..=n_max` boxes; an edge runs from each
/// diagram to every diagram obtained by adding one box.
#[derive(Debug, Clone)]
pub struct Genealogy {
    pub nodes: Vec<YoungDiagram>,
    /// `(parent, child)` node indices.
    pub edges: Vec<(usize, usize)>,
}

impl Genealogy {
    pub fn in_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(_, c)| c == node).count()
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(p, _)| p == node).count()
    }

    pub fn index_of(&self, diagram: &YoungDiagram) -> Option<usize> {
        self.nodes.iter().position(|d| d == diagram)
    }
}

pub fn genealogy_graph(n_max: usize) -> Result<Genealogy> {
    genealogy_graph_with_limit(n_max, Limits::DEFAULT.genealogy_n)
}

pub fn genealogy_graph_with_limit(n_max: usize, max_n: usize) -> Result<Genealogy> {
    if n_max > max_n {
        return Err(Error::LimitExceeded {
            what: "genealogy size",
            value: n_max,
            limit: max_n,
        });
    }
    let mut nodes = Vec::new();
    for n in 1..=n_max {
        nodes.extend(partitions_with_limit(n, max_n)?);
    }
    let mut edges = Vec::new();
    for (child, d) in nodes.iter().enumerate() {
        for parent in d.branching() {
            let p = nodes
                .iter()
                .position(|x| *x == parent)
                .expect("parent diagram enumerated");
            edges.push((p, child));
        }
    }
    edges.sort_unstable();
    Ok(Genealogy { nodes, edges })
}
