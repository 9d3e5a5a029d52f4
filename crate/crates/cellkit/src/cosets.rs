//! Symmetric compositions, centro-symmetric coset matrices, the permutation
//! attached to a matrix through its pseudo-matrix, closed-form lengths, and
//! the chain-family invariant that recovers the insertion shape directly
//! from the matrix.

use crate::signed_perm::{EmbedKind, SignedPerm};
use crate::symbols::{symbol_from_partition_bc, BCKind, SymbolBC};
use crate::tableaux::{pt_shape, Partition};
use crate::{Error, Result};
use itertools::Itertools;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Which family of coset matrices: odd-sided with a center row and column,
/// or even-sided without them.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SchurKind {
    J,
    I,
}

impl SchurKind {
    pub fn embed(self) -> EmbedKind {
        match self {
            SchurKind::J => EmbedKind::B,
            SchurKind::I => EmbedKind::C,
        }
    }

    pub fn bc(self) -> BCKind {
        match self {
            SchurKind::J => BCKind::B,
            SchurKind::I => BCKind::C,
        }
    }
}

/// Index list −r..r for odd side, −r..−1,1..r for even side.
fn index_list(kind: SchurKind, r: usize) -> Vec<i32> {
    let r = r as i32;
    match kind {
        SchurKind::J => (-r..=r).collect(),
        SchurKind::I => (-r..=r).filter(|&i| i != 0).collect(),
    }
}

/// Symmetric composition: entries indexed by `index_list`, with
/// λ_{−i} = λ_i; the total is 2d+1 (J, center entry odd) or 2d (I).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition {
    kind: SchurKind,
    entries: Vec<u32>,
}

impl Composition {
    pub fn new(kind: SchurKind, entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let parity_ok = match kind {
            SchurKind::J => n % 2 == 1,
            SchurKind::I => n % 2 == 0 && n > 0,
        };
        if !parity_ok {
            return Err(Error::InvalidComposition(format!(
                "side {n} does not match kind {kind:?}"
            )));
        }
        if !entries.iter().zip(entries.iter().rev()).all(|(a, b)| a == b) {
            return Err(Error::InvalidComposition(format!("{entries:?} is not symmetric")));
        }
        let total: u32 = entries.iter().sum();
        if total % 2 != (kind == SchurKind::J) as u32 {
            return Err(Error::InvalidComposition(format!("total {total} has the wrong parity")));
        }
        Ok(Composition { kind, entries })
    }

    pub fn kind(&self) -> SchurKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn r(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        (self.entries.iter().sum::<u32>() as usize) / 2
    }

    /// Entry at signed index.
    pub fn entry(&self, i: i32) -> u32 {
        let pos = index_list(self.kind, self.r()).iter().position(|&x| x == i).unwrap();
        self.entries[pos]
    }

    /// The blocks R_i partitioning the positions: the center block is the
    /// symmetric interval around 0 (J only), positive blocks continue to the
    /// right, and R_{−i} = −R_i.
    pub fn intervals(&self) -> Vec<(i32, Vec<i32>)> {
        let r = self.r() as i32;
        let mut out: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        let mut next = match self.kind {
            SchurKind::J => {
                let b = (self.entry(0) / 2) as i32;
                out.insert(0, (-b..=b).collect());
                b + 1
            }
            SchurKind::I => 1,
        };
        for i in 1..=r {
            let width = self.entry(i) as i32;
            let block: Vec<i32> = (next..next + width).collect();
            out.insert(-i, block.iter().rev().map(|&x| -x).collect());
            out.insert(i, block);
            next += width;
        }
        out.into_iter().collect()
    }

    /// Generator indices of the parabolic subgroup attached to the
    /// composition, as a sorted subset of 0..d−1.
    pub fn parabolic_generators(&self) -> Vec<u8> {
        let d = self.rank();
        let mut removed = BTreeSet::new();
        match self.kind {
            SchurKind::J => {
                let mut cut = self.entry(0) as usize / 2;
                for i in 1..=self.r() {
                    removed.insert(cut);
                    cut += self.entry(i as i32) as usize;
                }
            }
            SchurKind::I => {
                removed.insert(0);
                let mut cut = 0usize;
                for i in 1..self.r() {
                    cut += self.entry(i as i32) as usize;
                    removed.insert(cut);
                }
            }
        }
        (0..d).filter(|i| !removed.contains(i)).map(|i| i as u8).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

/// All symmetric compositions with `n` parts and the total fixed by `d`,
/// ordered lexicographically by their positive half.
pub fn enumerate_lambda(n: usize, d: usize, kind: SchurKind) -> Result<Vec<Composition>> {
    let parity_ok = match kind {
        SchurKind::J => n % 2 == 1,
        SchurKind::I => n % 2 == 0 && n > 0,
    };
    if !parity_ok {
        return Err(Error::Usage(format!("kind {kind:?} needs {} n, got {n}", match kind {
            SchurKind::J => "odd",
            SchurKind::I => "even",
        })));
    }
    let r = n / 2;
    let mut out = Vec::new();
    let mut half = vec![0u32; r];
    fn rec(
        half: &mut Vec<u32>,
        pos: usize,
        left: u32,
        kind: SchurKind,
        d: usize,
        out: &mut Vec<Composition>,
    ) {
        if pos == half.len() {
            if kind == SchurKind::I && left > 0 {
                return;
            }
            let mut entries: Vec<u32> = half.iter().rev().copied().collect();
            if kind == SchurKind::J {
                entries.push(2 * (d as u32) + 1 - 2 * (d as u32 - left));
            }
            entries.extend(half.iter());
            out.push(Composition { kind, entries });
            return;
        }
        for v in 0..=left {
            half[pos] = v;
            rec(half, pos + 1, left - v, kind, d, out);
        }
        half[pos] = 0;
    }
    rec(&mut half, 0, d as u32, kind, d, &mut out);
    for c in &out {
        debug_assert!(Composition::new(kind, c.entries.clone()).is_ok());
    }
    Ok(out)
}

/// Centro-symmetric matrix of block intersection counts. Rows are stored
/// top to bottom in index order, so `rows[0]` is the row at index −r.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CosetMatrix {
    kind: SchurKind,
    rows: Vec<Vec<u32>>,
}

impl CosetMatrix {
    pub fn new(kind: SchurKind, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let parity_ok = match kind {
            SchurKind::J => n % 2 == 1,
            SchurKind::I => n % 2 == 0 && n > 0,
        };
        if !parity_ok || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!("bad shape for kind {kind:?}")));
        }
        for p in 0..n {
            for q in 0..n {
                if rows[p][q] != rows[n - 1 - p][n - 1 - q] {
                    return Err(Error::InvalidMatrix("not centro-symmetric".into()));
                }
            }
        }
        let total: u32 = rows.iter().flatten().sum();
        if total % 2 != (kind == SchurKind::J) as u32 {
            return Err(Error::InvalidMatrix(format!("total {total} has the wrong parity")));
        }
        if kind == SchurKind::J && rows[n / 2][n / 2] % 2 == 0 {
            return Err(Error::InvalidMatrix("center entry must be odd".into()));
        }
        Ok(CosetMatrix { kind, rows })
    }

    pub fn kind(&self) -> SchurKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn r(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        (self.rows.iter().flatten().sum::<u32>() as usize) / 2
    }

    fn offset(&self, i: i32) -> usize {
        let idx = index_list(self.kind, self.r());
        idx.iter().position(|&x| x == i).unwrap()
    }

    /// Entry at signed indices.
    pub fn a(&self, i: i32, j: i32) -> u32 {
        self.rows[self.offset(i)][self.offset(j)]
    }

    pub fn ro(&self) -> Composition {
        let entries = self.rows.iter().map(|r| r.iter().sum()).collect();
        Composition { kind: self.kind, entries }
    }

    pub fn co(&self) -> Composition {
        let n = self.n();
        let entries = (0..n).map(|q| self.rows.iter().map(|r| r[q]).sum()).collect();
        Composition { kind: self.kind, entries }
    }

    /// The pseudo-matrix: each cell holds as many numbers as its entry.
    /// Filling walks rows top to bottom and cells right to left, handing out
    /// −d..d in increasing order (0 skipped on even side) and writing each
    /// cell's share in decreasing order.
    pub fn pseudo_matrix(&self) -> Vec<Vec<Vec<i32>>> {
        let idx = index_list(self.kind, self.r());
        let n = self.n();
        let d = self.rank() as i32;
        let mut next = -d;
        let mut cells = vec![vec![Vec::new(); n]; n];
        for (p, _) in idx.iter().enumerate() {
            for q in (0..n).rev() {
                let mut vals = Vec::with_capacity(self.rows[p][q] as usize);
                for _ in 0..self.rows[p][q] {
                    vals.push(next);
                    next += 1;
                    if self.kind == SchurKind::I && next == 0 {
                        next = 1;
                    }
                }
                vals.reverse();
                cells[p][q] = vals;
            }
        }
        cells
    }

    /// The permutation read off the pseudo-matrix: columns left to right,
    /// cells bottom to top, each cell's content in written order; the
    /// resulting list is (y(−d), …, y(d)).
    pub fn y(&self) -> Result<SignedPerm> {
        let cells = self.pseudo_matrix();
        let n = self.n();
        let d = self.rank();
        let mut seq: Vec<i32> = Vec::with_capacity(match self.kind {
            SchurKind::J => 2 * d + 1,
            SchurKind::I => 2 * d,
        });
        for q in 0..n {
            for p in (0..n).rev() {
                seq.extend(&cells[p][q]);
            }
        }
        // positions mirror values: seq[pos(−k)] must equal −seq[pos(k)]
        let half = seq.len() / 2;
        for k in 0..half {
            if seq[k] != -seq[seq.len() - 1 - k] {
                return Err(Error::Internal(format!("asymmetric read {seq:?}")));
            }
        }
        if self.kind == SchurKind::J && seq[half] != 0 {
            return Err(Error::Internal(format!("center of read is not 0 in {seq:?}")));
        }
        let start = match self.kind {
            SchurKind::J => d + 1,
            SchurKind::I => d,
        };
        SignedPerm::from_window(seq[start..].to_vec())
    }

    /// Closed-form length of y, computed from the matrix alone.
    pub fn length(&self) -> Result<u32> {
        let idx = index_list(self.kind, self.r());
        let d = self.rank() as i64;
        let a = |i: i32, j: i32| self.a(i, j) as i64;
        let wedge = |i: i32, j: i32| -> i64 {
            let mut pre = 0;
            let mut post = 0;
            for &x in &idx {
                for &y in &idx {
                    if x < i && y < j {
                        pre += a(x, y);
                    }
                    if x > i && y > j {
                        post += a(x, y);
                    }
                }
            }
            pre + post
        };
        let r = self.r() as i32;
        let mut twice = 2 * d * d;
        match self.kind {
            SchurKind::J => {
                twice -= (a(0, 0) - 1) / 2 * wedge(0, 0);
                for j in 1..=r {
                    twice -= a(0, j) * wedge(0, j);
                }
                for i in 1..=r {
                    for &j in &idx {
                        twice -= a(i, j) * wedge(i, j);
                    }
                }
            }
            SchurKind::I => {
                for i in 1..=r {
                    for &j in &idx {
                        twice -= a(i, j) * wedge(i, j);
                    }
                }
                for i in 1..=r {
                    for j in 1..=r {
                        twice -= a(i, j);
                    }
                }
            }
        }
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Internal(format!("length formula gave {twice}/2")));
        }
        Ok((twice / 2) as u32)
    }

    /// Insertion shape of y under the matching embedding.
    pub fn sigma(&self) -> Result<Partition> {
        Ok(pt_shape(&self.y()?, self.kind.embed()))
    }

    /// Independent recomputation of sigma straight from the matrix: the
    /// k-th partial sum is the largest total weight of a cell set whose
    /// antichains (in the order (i,j) ≤ (i',j') iff i ≥ i' and j ≤ j') have
    /// at most k elements. Exponential in the number of cells.
    pub fn sigma_chain_oracle(&self) -> Result<Partition> {
        let n = self.n();
        if n > 4 {
            return Err(Error::Bound(format!("chain oracle limited to side 4, got {n}")));
        }
        let idx = index_list(self.kind, self.r());
        // nonzero cells, sorted so that a strictly-increasing-j subsequence
        // of a strictly-increasing-i run is exactly an antichain
        let mut cells: Vec<(i32, i32, u32)> = Vec::new();
        for (p, &i) in idx.iter().enumerate() {
            for (q, &j) in idx.iter().enumerate() {
                if self.rows[p][q] > 0 {
                    cells.push((i, j, self.rows[p][q]));
                }
            }
        }
        cells.sort_by_key(|&(i, j, _)| (i, std::cmp::Reverse(j)));
        let total: u32 = cells.iter().map(|c| c.2).sum();
        let m = cells.len();
        let mut best = vec![0u32; n + 1];
        for mask in 0u32..(1 << m) {
            let chosen: Vec<usize> = (0..m).filter(|&t| mask >> t & 1 == 1).collect();
            let sum: u32 = chosen.iter().map(|&t| cells[t].2).sum();
            // longest strictly increasing (i, j) subsequence
            let mut lis: Vec<u32> = vec![0; chosen.len()];
            let mut width = 0usize;
            for (u, &t) in chosen.iter().enumerate() {
                let mut len = 1;
                for (v, &s) in chosen.iter().enumerate().take(u) {
                    if cells[s].0 < cells[t].0 && cells[s].1 < cells[t].1 {
                        len = len.max(lis[v] + 1);
                    }
                }
                lis[u] = len;
                width = width.max(len as usize);
            }
            for k in width..=n {
                best[k] = best[k].max(sum);
            }
        }
        debug_assert_eq!(best[n], total);
        let mut parts: Vec<u32> =
            (1..=n).map(|k| best[k] - best[k - 1]).take_while(|&p| p > 0).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }
}

impl fmt::Display for CosetMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rows.iter().map(|r| format!("[{}]", r.iter().join(","))).join(","))
    }
}

/// All coset matrices with the given side and rank, sorted by rows.
pub fn enumerate_pi(n: usize, d: usize, kind: SchurKind) -> Result<Vec<CosetMatrix>> {
    let parity_ok = match kind {
        SchurKind::J => n % 2 == 1,
        SchurKind::I => n % 2 == 0 && n > 0,
    };
    if !parity_ok {
        return Err(Error::Usage(format!("kind {kind:?} needs {} n, got {n}", match kind {
            SchurKind::J => "odd",
            SchurKind::I => "even",
        })));
    }
    // free cells: full rows above the middle, then (for odd side) the left
    // half of the middle row; the center soaks up the remaining odd amount
    let mut free: Vec<(usize, usize)> = Vec::new();
    for p in 0..n / 2 {
        for q in 0..n {
            free.push((p, q));
        }
    }
    if kind == SchurKind::J {
        for q in 0..n / 2 {
            free.push((n / 2, q));
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![vec![0u32; n]; n];
    fn rec(
        free: &[(usize, usize)],
        pos: usize,
        left: u32,
        rows: &mut Vec<Vec<u32>>,
        kind: SchurKind,
        n: usize,
        out: &mut Vec<CosetMatrix>,
    ) {
        if pos == free.len() {
            if kind == SchurKind::J {
                rows[n / 2][n / 2] = 2 * left + 1;
            } else if left > 0 {
                return;
            }
            let mut m = CosetMatrix { kind, rows: rows.clone() };
            for p in 0..n {
                for q in 0..n {
                    if (p, q) != (n / 2, n / 2) || kind == SchurKind::I {
                        m.rows[n - 1 - p][n - 1 - q] = m.rows[p][q];
                    }
                }
            }
            debug_assert!(CosetMatrix::new(kind, m.rows.clone()).is_ok());
            out.push(m);
            return;
        }
        let (p, q) = free[pos];
        for v in 0..=left {
            rows[p][q] = v;
            rec(free, pos + 1, left - v, rows, kind, n, out);
        }
        rows[p][q] = 0;
    }
    rec(&free, 0, d as u32, &mut rows, kind, n, &mut out);
    out.sort();
    Ok(out)
}

/// The intersection-count matrix of (λ, μ, g): a_ij = |R_i^λ ∩ g(R_j^μ)|.
pub fn matrix_of_triple(
    lambda: &Composition,
    mu: &Composition,
    g: &SignedPerm,
) -> Result<CosetMatrix> {
    if lambda.kind() != mu.kind() {
        return Err(Error::Usage("mixed composition kinds".into()));
    }
    if lambda.rank() != mu.rank() || lambda.rank() != g.rank() || lambda.n() != mu.n() {
        return Err(Error::Usage(format!(
            "incompatible sizes: {lambda}, {mu}, rank {}",
            g.rank()
        )));
    }
    let li = lambda.intervals();
    let mi = mu.intervals();
    let rows = li
        .iter()
        .map(|(_, ri)| {
            mi.iter()
                .map(|(_, rj)| rj.iter().filter(|&&x| ri.contains(&g.apply(x))).count() as u32)
                .collect()
        })
        .collect();
    CosetMatrix::new(lambda.kind(), rows)
}

/// Closure of the generators as a plain element list, sorted.
pub fn subgroup_elements(d: usize, gens: &[u8]) -> Vec<SignedPerm> {
    let mut seen: BTreeSet<SignedPerm> = BTreeSet::new();
    let mut queue = vec![SignedPerm::identity(d)];
    seen.insert(SignedPerm::identity(d));
    while let Some(w) = queue.pop() {
        for &s in gens {
            let ws = w.right_mul_gen(s as usize);
            if seen.insert(ws.clone()) {
                queue.push(ws);
            }
        }
    }
    seen.into_iter().collect()
}

/// All elements of W_λ g W_μ.
pub fn double_coset(lambda: &Composition, mu: &Composition, g: &SignedPerm) -> Vec<SignedPerm> {
    let d = g.rank();
    let left = subgroup_elements(d, &lambda.parabolic_generators());
    let right = subgroup_elements(d, &mu.parabolic_generators());
    let mut out = BTreeSet::new();
    for u in &left {
        let ug = u.compose(g);
        for v in &right {
            out.insert(ug.compose(v));
        }
    }
    out.into_iter().collect()
}

/// Shortest and longest elements of W_λ g W_μ; both are unique.
pub fn coset_extremes(
    lambda: &Composition,
    mu: &Composition,
    g: &SignedPerm,
) -> Result<(SignedPerm, SignedPerm)> {
    let elems = double_coset(lambda, mu, g);
    let min = elems.iter().min_by_key(|w| w.length()).unwrap().clone();
    let max = elems.iter().max_by_key(|w| w.length()).unwrap().clone();
    for w in &elems {
        if (w.length() == min.length() && *w != min) || (w.length() == max.length() && *w != max) {
            return Err(Error::Internal(format!("non-unique extreme in coset of {g}")));
        }
    }
    Ok((min, max))
}

/// Matrices grouped by the similarity class of their sigma partition,
/// keyed by the special partition of the class.
pub fn classify_two_sided(
    n: usize,
    d: usize,
    kind: SchurKind,
) -> Result<Vec<(Partition, Vec<CosetMatrix>)>> {
    let mut groups: BTreeMap<SymbolBC, Vec<CosetMatrix>> = BTreeMap::new();
    for m in enumerate_pi(n, d, kind)? {
        let key = symbol_from_partition_bc(&m.sigma()?, kind.bc())?.class_key();
        groups.entry(key).or_default().push(m);
    }
    Ok(groups.into_iter().map(|(k, v)| (k.par(kind.bc()), v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_perm::parse_word;

    fn comp(kind: SchurKind, entries: &[u32]) -> Composition {
        Composition::new(kind, entries.to_vec()).unwrap()
    }

    fn mat(kind: SchurKind, rows: &[&[u32]]) -> CosetMatrix {
        CosetMatrix::new(kind, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn perm(d: usize, word: &str) -> SignedPerm {
        SignedPerm::from_word(d, &parse_word(word).unwrap()).unwrap()
    }

    /// The fifteen odd-side matrices of side 3 and rank 2, in their
    /// traditional order, with the word of their permutation.
    fn side3_rank2() -> Vec<(CosetMatrix, &'static str)> {
        let j = SchurKind::J;
        vec![
            (mat(j, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 2]]), "s1"),
            (mat(j, &[&[0, 2, 0], &[0, 1, 0], &[0, 2, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[0, 0, 2], &[0, 1, 0], &[2, 0, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[0, 0, 0], &[2, 1, 2], &[0, 0, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[1, 1, 0], &[0, 1, 0], &[0, 1, 1]]), "s1 s0"),
            (mat(j, &[&[1, 0, 1], &[0, 1, 0], &[1, 0, 1]]), "s1 s0 s1"),
            (mat(j, &[&[1, 0, 0], &[1, 1, 1], &[0, 0, 1]]), "s0 s1"),
            (mat(j, &[&[0, 1, 1], &[0, 1, 0], &[1, 1, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[0, 1, 0], &[1, 1, 1], &[0, 1, 0]]), "s0 s1 s0"),
            (mat(j, &[&[0, 0, 1], &[1, 1, 1], &[1, 0, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[1, 0, 0], &[0, 3, 0], &[0, 0, 1]]), "s0"),
            (mat(j, &[&[0, 1, 0], &[0, 3, 0], &[0, 1, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[0, 0, 1], &[0, 3, 0], &[1, 0, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[0, 0, 0], &[1, 3, 1], &[0, 0, 0]]), "s0 s1 s0 s1"),
            (mat(j, &[&[0, 0, 0], &[0, 5, 0], &[0, 0, 0]]), "s0 s1 s0 s1"),
        ]
    }

    #[test]
    fn composition_enumeration() {
        let l = enumerate_lambda(3, 2, SchurKind::J).unwrap();
        assert_eq!(
            l,
            vec![
                comp(SchurKind::J, &[0, 5, 0]),
                comp(SchurKind::J, &[1, 3, 1]),
                comp(SchurKind::J, &[2, 1, 2]),
            ]
        );
        assert_eq!(l[0].parabolic_generators(), vec![0, 1]);
        assert_eq!(l[1].parabolic_generators(), vec![0]);
        assert_eq!(l[2].parabolic_generators(), vec![1]);
        assert_eq!(
            enumerate_lambda(2, 2, SchurKind::I).unwrap(),
            vec![comp(SchurKind::I, &[2, 2])]
        );
        assert_eq!(comp(SchurKind::I, &[2, 2]).parabolic_generators(), vec![1]);
        assert_eq!(comp(SchurKind::I, &[3, 3]).parabolic_generators(), vec![1, 2]);
        assert!(matches!(enumerate_lambda(2, 1, SchurKind::J), Err(Error::Usage(_))));
        assert!(matches!(enumerate_lambda(3, 2, SchurKind::I), Err(Error::Usage(_))));
        assert_eq!(enumerate_lambda(5, 2, SchurKind::J).unwrap().len(), 6);
    }

    #[test]
    fn composition_validation() {
        assert!(Composition::new(SchurKind::J, vec![1, 3, 2]).is_err());
        assert!(Composition::new(SchurKind::J, vec![1, 2, 1]).is_err());
        assert!(Composition::new(SchurKind::I, vec![1, 2, 1]).is_err());
        assert!(Composition::new(SchurKind::I, vec![1, 2, 2, 2]).is_err());
        assert!(Composition::new(SchurKind::I, vec![2, 1, 1, 2]).is_ok());
        assert!(Composition::new(SchurKind::I, vec![1, 2, 2, 1]).is_ok());
    }

    #[test]
    fn intervals() {
        let l2 = comp(SchurKind::J, &[1, 3, 1]);
        assert_eq!(
            l2.intervals(),
            vec![(-1, vec![-2]), (0, vec![-1, 0, 1]), (1, vec![2])]
        );
        let l3 = comp(SchurKind::J, &[2, 1, 2]);
        assert_eq!(
            l3.intervals(),
            vec![(-1, vec![-2, -1]), (0, vec![0]), (1, vec![1, 2])]
        );
        let i = comp(SchurKind::I, &[2, 2]);
        assert_eq!(i.intervals(), vec![(-1, vec![-2, -1]), (1, vec![1, 2])]);
    }

    #[test]
    fn pi_enumeration_counts() {
        let pi = enumerate_pi(3, 2, SchurKind::J).unwrap();
        assert_eq!(pi.len(), 15);
        for (m, _) in side3_rank2() {
            assert!(pi.contains(&m), "missing {m}");
        }
        assert_eq!(enumerate_pi(2, 2, SchurKind::I).unwrap().len(), 3);
        assert_eq!(enumerate_pi(2, 3, SchurKind::I).unwrap().len(), 4);
        assert!(matches!(enumerate_pi(2, 2, SchurKind::J), Err(Error::Usage(_))));
    }

    #[test]
    fn y_of_side3_rank2() {
        for (m, word) in side3_rank2() {
            assert_eq!(m.y().unwrap(), perm(2, word), "matrix {m}");
        }
    }

    #[test]
    fn y_and_pseudo_matrix_of_side3_rank7() {
        let a = mat(SchurKind::J, &[&[2, 1, 1], &[2, 3, 2], &[1, 1, 2]]);
        assert_eq!(a.rank(), 7);
        let cells = a.pseudo_matrix();
        assert_eq!(cells[0][0], vec![-4, -5]);
        assert_eq!(cells[0][1], vec![-6]);
        assert_eq!(cells[0][2], vec![-7]);
        assert_eq!(cells[1][0], vec![3, 2]);
        assert_eq!(cells[1][1], vec![1, 0, -1]);
        assert_eq!(cells[1][2], vec![-2, -3]);
        assert_eq!(cells[2][0], vec![7]);
        assert_eq!(cells[2][1], vec![6]);
        assert_eq!(cells[2][2], vec![5, 4]);
        let y = a.y().unwrap();
        assert_eq!(y.window(), &[-1, -6, 5, 4, -2, -3, -7]);
        assert_eq!(a.sigma().unwrap(), Partition::new(vec![9, 4, 2]).unwrap());
        assert_eq!(a.sigma_chain_oracle().unwrap(), Partition::new(vec![9, 4, 2]).unwrap());
    }

    #[test]
    fn ro_co_and_triple_round_trip() {
        let a5 = mat(SchurKind::J, &[&[1, 1, 0], &[0, 1, 0], &[0, 1, 1]]);
        assert_eq!(a5.ro(), comp(SchurKind::J, &[2, 1, 2]));
        assert_eq!(a5.co(), comp(SchurKind::J, &[1, 3, 1]));
        for (m, _) in side3_rank2() {
            let y = m.y().unwrap();
            assert_eq!(matrix_of_triple(&m.ro(), &m.co(), &y).unwrap(), m);
            // the matrix is constant on the double coset
            for g in double_coset(&m.ro(), &m.co(), &y) {
                assert_eq!(matrix_of_triple(&m.ro(), &m.co(), &g).unwrap(), m);
            }
        }
    }

    #[test]
    fn y_is_longest_coset_element() {
        let cases =
            [(3, 2, SchurKind::J), (3, 3, SchurKind::J), (2, 2, SchurKind::I), (2, 3, SchurKind::I)];
        for (n, d, kind) in cases {
            for m in enumerate_pi(n, d, kind).unwrap() {
                let y = m.y().unwrap();
                let (_, max) = coset_extremes(&m.ro(), &m.co(), &y).unwrap();
                assert_eq!(y, max, "matrix {m}");
                assert_eq!(m.length().unwrap(), y.length(), "matrix {m}");
            }
        }
    }

    #[test]
    fn coset_minima_of_even_side_examples() {
        let i = SchurKind::I;
        let goldens = [
            (mat(i, &[&[2, 0], &[0, 2]]), "s1", ""),
            (mat(i, &[&[1, 1], &[1, 1]]), "s1 s0 s1", "s0"),
            (mat(i, &[&[0, 2], &[2, 0]]), "s0 s1 s0 s1", "s0 s1 s0"),
            (mat(i, &[&[3, 0], &[0, 3]]), "s1 s2 s1", ""),
            (mat(i, &[&[2, 1], &[1, 2]]), "s2 s1 s0 s1 s2 s1", "s0"),
            (mat(i, &[&[1, 2], &[2, 1]]), "s1 s2 s0 s1 s0 s1 s2 s1", "s0 s1 s0"),
            (mat(i, &[&[0, 3], &[3, 0]]), "s0 s1 s0 s2 s1 s0 s1 s2 s1", "s0 s1 s0 s2 s1 s0"),
        ];
        for (m, y_word, min_word) in goldens {
            let d = m.rank();
            let y = m.y().unwrap();
            assert_eq!(y, perm(d, y_word), "matrix {m}");
            let (min, max) = coset_extremes(&m.ro(), &m.co(), &y).unwrap();
            assert_eq!(min, perm(d, min_word), "matrix {m}");
            assert_eq!(max, y);
            assert_eq!(m.length().unwrap(), y.length());
        }
    }

    #[test]
    fn sigma_goldens_side3_rank2() {
        let p = |parts: &[u32]| Partition::new(parts.to_vec()).unwrap();
        let expected = [
            p(&[2, 2, 1]),
            p(&[5]),
            p(&[5]),
            p(&[5]),
            p(&[3, 1, 1]),
            p(&[3, 1, 1]),
            p(&[3, 1, 1]),
            p(&[5]),
            p(&[3, 2]),
            p(&[5]),
            p(&[3, 1, 1]),
            p(&[5]),
            p(&[5]),
            p(&[5]),
            p(&[5]),
        ];
        for ((m, _), want) in side3_rank2().iter().zip(expected) {
            assert_eq!(m.sigma().unwrap(), want, "matrix {m}");
            assert_eq!(m.sigma_chain_oracle().unwrap(), want, "oracle for {m}");
        }
    }

    #[test]
    fn sigma_even_side_goldens_and_closed_form() {
        let p = |parts: &[u32]| Partition::new(parts.to_vec()).unwrap();
        let i = SchurKind::I;
        assert_eq!(mat(i, &[&[2, 0], &[0, 2]]).sigma().unwrap(), p(&[2, 2]));
        assert_eq!(mat(i, &[&[1, 1], &[1, 1]]).sigma().unwrap(), p(&[3, 1]));
        assert_eq!(mat(i, &[&[0, 2], &[2, 0]]).sigma().unwrap(), p(&[4]));
        assert_eq!(mat(i, &[&[3, 0], &[0, 3]]).sigma().unwrap(), p(&[3, 3]));
        assert_eq!(mat(i, &[&[2, 1], &[1, 2]]).sigma().unwrap(), p(&[4, 2]));
        assert_eq!(mat(i, &[&[1, 2], &[2, 1]]).sigma().unwrap(), p(&[5, 1]));
        assert_eq!(mat(i, &[&[0, 3], &[3, 0]]).sigma().unwrap(), p(&[6]));
        for d in 1..=8u32 {
            for k in 0..=d {
                let m = mat(i, &[&[k, d - k], &[d - k, k]]);
                let mut parts = vec![2 * d - k];
                if k > 0 {
                    parts.push(k);
                }
                assert_eq!(m.sigma().unwrap(), p(&parts), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn greene_agreement_small() {
        for (n, d, kind) in [(3, 2, SchurKind::J), (3, 3, SchurKind::J), (2, 2, SchurKind::I), (2, 3, SchurKind::I)] {
            for m in enumerate_pi(n, d, kind).unwrap() {
                assert_eq!(m.sigma().unwrap(), m.sigma_chain_oracle().unwrap(), "matrix {m}");
            }
        }
        let mut rows = vec![vec![0u32; 5]; 5];
        rows[2][2] = 1;
        let big = CosetMatrix::new(SchurKind::J, rows).unwrap();
        assert!(matches!(big.sigma_chain_oracle(), Err(Error::Bound(_))));
    }

    #[test]
    fn classify_side3_rank2() {
        let p = |parts: &[u32]| Partition::new(parts.to_vec()).unwrap();
        let classes = classify_two_sided(3, 2, SchurKind::J).unwrap();
        assert_eq!(classes.len(), 2);
        let sizes: BTreeMap<Partition, usize> =
            classes.iter().map(|(k, v)| (k.clone(), v.len())).collect();
        assert_eq!(sizes[&p(&[3, 1, 1])], 6);
        assert_eq!(sizes[&p(&[5])], 9);
        let fixtures = side3_rank2();
        let small: Vec<&CosetMatrix> = [0usize, 4, 5, 6, 8, 10].iter().map(|&k| &fixtures[k].0).collect();
        let (_, members) = classes.iter().find(|(k, _)| *k == p(&[3, 1, 1])).unwrap();
        for m in small {
            assert!(members.contains(m), "matrix {m}");
        }

        let classes = classify_two_sided(2, 2, SchurKind::I).unwrap();
        let sizes: BTreeMap<Partition, usize> =
            classes.iter().map(|(k, v)| (k.clone(), v.len())).collect();
        assert_eq!(sizes.len(), 2);
        assert_eq!(sizes[&p(&[2, 2])], 2);
        assert_eq!(sizes[&p(&[4])], 1);

        let classes = classify_two_sided(2, 3, SchurKind::I).unwrap();
        let sizes: BTreeMap<Partition, usize> =
            classes.iter().map(|(k, v)| (k.clone(), v.len())).collect();
        assert_eq!(sizes.len(), 3);
        assert_eq!(sizes[&p(&[3, 3])], 1);
        assert_eq!(sizes[&p(&[4, 2])], 2);
        assert_eq!(sizes[&p(&[6])], 1);
    }

    #[test]
    fn subgroup_sizes() {
        assert_eq!(subgroup_elements(2, &[0, 1]).len(), 8);
        assert_eq!(subgroup_elements(2, &[0]).len(), 2);
        assert_eq!(subgroup_elements(2, &[1]).len(), 2);
        assert_eq!(subgroup_elements(3, &[0, 1]).len(), 8);
        assert_eq!(subgroup_elements(3, &[1, 2]).len(), 6);
        assert_eq!(subgroup_elements(3, &[]).len(), 1);
    }
}
