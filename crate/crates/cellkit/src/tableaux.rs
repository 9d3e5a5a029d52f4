//! Partitions, Robinson-Schensted insertion, and domino tableau counting.

use crate::signed_perm::{EmbedKind, SignedPerm};
use crate::{Error, Result};
use itertools::Itertools;
use std::collections::BTreeMap;
use std::fmt;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// Which family of distinguished partitions to test membership in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialKind {
    /// Odd total; even parts and even columns both of even multiplicity.
    B,
    /// Even total; odd parts and odd columns both of even multiplicity.
    C,
    /// Even total; even parts and odd columns of even multiplicity.
    D,
}

/// Distinguishes the two classes attached to a partition with all parts even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VeryEvenLabel {
    I,
    II,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().tuple_windows().any(|(a, b)| a < b) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32).collect())
    }

    fn mults_even(&self, parity: u32) -> bool {
        self.0
            .iter()
            .dedup_with_count()
            .all(|(count, part)| part % 2 != parity || count % 2 == 0)
    }

    pub fn is_special(&self, kind: SpecialKind) -> bool {
        let (total_parity, row_parity, col_parity) = match kind {
            SpecialKind::B => (1, 0, 0),
            SpecialKind::C => (0, 1, 1),
            SpecialKind::D => (0, 0, 1),
        };
        self.size() % 2 == total_parity
            && self.mults_even(row_parity)
            && self.conjugate().mults_even(col_parity)
    }

    /// All parts even (the partitions that carry a pair of labels in kind D).
    pub fn is_very_even(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `total`, descending lexicographic, optionally bounded in
/// number of parts.
pub fn enumerate_partitions(total: u32, max_parts: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u32, max_part: u32, left: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(stack.clone()));
            return;
        }
        if left == 0 {
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            rec(remaining - p, p, left - 1, stack, out);
            stack.pop();
        }
    }
    rec(total, total, max_parts.unwrap_or(total as usize), &mut stack, &mut out);
    out
}

/// Special partitions of `total`, each paired with its class labels: one
/// `None` entry normally, two labeled entries for kind D when all parts are
/// even.
pub fn enumerate_special(
    total: u32,
    max_parts: Option<usize>,
    kind: SpecialKind,
) -> Vec<(Partition, Option<VeryEvenLabel>)> {
    let mut out = Vec::new();
    for p in enumerate_partitions(total, max_parts) {
        if !p.is_special(kind) {
            continue;
        }
        if kind == SpecialKind::D && p.is_very_even() {
            out.push((p.clone(), Some(VeryEvenLabel::I)));
            out.push((p, Some(VeryEvenLabel::II)));
        } else {
            out.push((p, None));
        }
    }
    out
}

/// Insertion tableau with weakly decreasing rows.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Bumping insertion: append `k` when it is at most the row's last entry,
    /// otherwise displace the leftmost smaller entry into the next row.
    /// Returns the index of the row that grew.
    pub fn insert(&mut self, mut k: u32) -> usize {
        for (i, row) in self.rows.iter_mut().enumerate() {
            if row.last().is_none_or(|&last| k <= last) {
                row.push(k);
                return i;
            }
            let pos = row.iter().position(|&x| x < k).expect("last entry is smaller");
            std::mem::swap(&mut row[pos], &mut k);
        }
        self.rows.push(vec![k]);
        self.rows.len() - 1
    }
}

pub fn rs_tableau(seq: &[u32]) -> StandardTableau {
    let mut t = StandardTableau::new();
    for &k in seq {
        t.insert(k);
    }
    t
}

/// Insertion and recording tableaux; the recording tableau holds 1-based step
/// indices.
pub fn rs_pair(seq: &[u32]) -> (StandardTableau, StandardTableau) {
    let mut p = StandardTableau::new();
    let mut q = StandardTableau::new();
    for (step, &k) in seq.iter().enumerate() {
        let row = p.insert(k);
        if q.rows.len() <= row {
            q.rows.push(Vec::new());
        }
        q.rows[row].push(step as u32 + 1);
    }
    (p, q)
}

/// Shape of the insertion tableau of the relabeled full window of `w`.
pub fn pt_shape(w: &SignedPerm, kind: EmbedKind) -> Partition {
    rs_tableau(&w.embed_sym(kind)).shape()
}

/// Number of ways to build the shape by adding dominoes, starting from the
/// empty shape (even total) or a single corner cell (odd total).
pub fn count_standard_domino(p: &Partition) -> u64 {
    fn rec(q: &[u32], memo: &mut BTreeMap<Vec<u32>, u64>) -> u64 {
        let total: u32 = q.iter().sum();
        if total <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(q) {
            return v;
        }
        let mut count = 0;
        for i in 0..q.len() {
            // horizontal domino at the end of row i
            if q[i] >= 2 && q.get(i + 1).is_none_or(|&next| q[i] - 2 >= next) {
                let mut smaller = q.to_vec();
                smaller[i] -= 2;
                if smaller[i] == 0 {
                    smaller.truncate(i);
                }
                count += rec(&smaller, memo);
            }
            // vertical domino at the end of rows i, i+1
            if i + 1 < q.len()
                && q[i] == q[i + 1]
                && q.get(i + 2).is_none_or(|&next| q[i] - 1 >= next)
            {
                let mut smaller = q.to_vec();
                smaller[i] -= 1;
                smaller[i + 1] -= 1;
                while smaller.last() == Some(&0) {
                    smaller.pop();
                }
                count += rec(&smaller, memo);
            }
        }
        memo.insert(q.to_vec(), count);
        count
    }
    rec(&p.0, &mut BTreeMap::new())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Piece {
    Mono,
    H,
    V,
}

/// Cells as (row, col) with the piece id covering each cell.
fn tilings(p: &Partition) -> Vec<Vec<Vec<usize>>> {
    let rows: Vec<usize> = p.0.iter().map(|&x| x as usize).collect();
    let odd = p.size() % 2 == 1;
    let mut grid: Vec<Vec<Option<usize>>> = rows.iter().map(|&r| vec![None; r]).collect();
    let mut pieces: Vec<Piece> = Vec::new();
    let mut out = Vec::new();
    fn rec(
        grid: &mut Vec<Vec<Option<usize>>>,
        pieces: &mut Vec<Piece>,
        rows: &[usize],
        odd: bool,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let free = grid
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|c| c.is_none()).map(|j| (i, j)));
        let Some((i, j)) = free else {
            out.push(grid.iter().map(|row| row.iter().map(|c| c.unwrap()).collect()).collect());
            return;
        };
        let id = pieces.len();
        if odd && (i, j) == (0, 0) {
            pieces.push(Piece::Mono);
            grid[0][0] = Some(id);
            rec(grid, pieces, rows, odd, out);
            grid[0][0] = None;
            pieces.pop();
        }
        if j + 1 < rows[i] && grid[i][j + 1].is_none() {
            pieces.push(Piece::H);
            grid[i][j] = Some(id);
            grid[i][j + 1] = Some(id);
            rec(grid, pieces, rows, odd, out);
            grid[i][j] = None;
            grid[i][j + 1] = None;
            pieces.pop();
        }
        if i + 1 < rows.len() && j < rows[i + 1] && grid[i + 1][j].is_none() {
            pieces.push(Piece::V);
            grid[i][j] = Some(id);
            grid[i + 1][j] = Some(id);
            rec(grid, pieces, rows, odd, out);
            grid[i][j] = None;
            grid[i + 1][j] = None;
            pieces.pop();
        }
    }
    rec(&mut grid, &mut pieces, &rows, odd, &mut out);
    out
}

/// Semistandard domino tableaux of the shape with entries in `1..=max_entry`:
/// every domino gets one value, rows weakly increase, columns strictly
/// increase except across a vertical domino's own two cells, and the corner
/// monomino (odd total) is labeled 1.
pub fn count_semistandard_domino(p: &Partition, max_entry: u32) -> u64 {
    if p.is_empty() {
        return 1;
    }
    let odd = p.size() % 2 == 1;
    let mut count = 0;
    for tiling in tilings(p) {
        let npieces = 1 + *tiling.iter().flatten().max().unwrap();
        let ndominoes = if odd { npieces - 1 } else { npieces };
        let valid = |vals: &[u32]| -> bool {
            let value = |i: usize, j: usize| vals[tiling[i][j]];
            for (i, row) in tiling.iter().enumerate() {
                for j in 0..row.len() {
                    if j + 1 < row.len() && value(i, j) > value(i, j + 1) {
                        return false;
                    }
                    if i + 1 < tiling.len() && j < tiling[i + 1].len() {
                        let same_piece = tiling[i][j] == tiling[i + 1][j];
                        if !same_piece && value(i, j) >= value(i + 1, j) {
                            return false;
                        }
                    }
                }
            }
            true
        };
        // odd shapes: piece 0 is the monomino, pinned to value 1
        let mut vals = vec![1u32; npieces];
        fn labelings(
            vals: &mut Vec<u32>,
            idx: usize,
            max_entry: u32,
            valid: &dyn Fn(&[u32]) -> bool,
            count: &mut u64,
        ) {
            if idx == vals.len() {
                if valid(vals) {
                    *count += 1;
                }
                return;
            }
            for v in 1..=max_entry {
                vals[idx] = v;
                labelings(vals, idx + 1, max_entry, valid, count);
            }
        }
        let start = npieces - ndominoes;
        labelings(&mut vals, start, max_entry, &valid, &mut count);
    }
    count
}
