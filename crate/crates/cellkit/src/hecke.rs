//! Exact Hecke-algebra oracle for the hyperoctahedral groups, with weighted
//! Kazhdan-Lusztig bases, cell decompositions, and the transfer of structure
//! constants to the associated Schur algebras.
//!
//! Everything here is computed from first principles over `Z[q, q^-1]`: the
//! multiplication table of the group, the quadratic relations for `T_s`, the
//! bar involution, and the canonical basis obtained by correcting bar defects
//! in increasing length order. No cell data is hard-coded; cells fall out of
//! the nonzero structure constants by transitive closure.

use crate::cosets::{enumerate_lambda, enumerate_pi, Composition, CosetMatrix, SchurKind};
use crate::laurent::Laurent;
use crate::signed_perm::{GroupKind, SignedPerm, Side};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Largest rank for which the full structure-constant oracle will run.
pub const ORACLE_MAX_D: usize = 4;

/// Multiplication data for a full hyperoctahedral group, indexed so that
/// element indices are sorted by `(length, window)`. Index 0 is the identity
/// and the last index is the longest element.
pub struct GroupTable {
    d: usize,
    elems: Vec<SignedPerm>,
    index: BTreeMap<Vec<i32>, u32>,
    len: Vec<u32>,
    word: Vec<Vec<u8>>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inv: Vec<u32>,
    in_d: Vec<bool>,
}

impl GroupTable {
    pub fn new(d: usize) -> Result<GroupTable> {
        let mut elems = SignedPerm::enumerate(d, GroupKind::B)?;
        elems.sort_by_key(|w| (w.length(), w.window().to_vec()));
        let index: BTreeMap<Vec<i32>, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, w)| (w.window().to_vec(), i as u32))
            .collect();
        let len: Vec<u32> = elems.iter().map(|w| w.length()).collect();
        let right: Vec<Vec<u32>> = elems
            .iter()
            .map(|w| (0..d).map(|s| index[w.right_mul_gen(s).window()]).collect())
            .collect();
        let left: Vec<Vec<u32>> = elems
            .iter()
            .map(|w| (0..d).map(|s| index[w.left_mul_gen(s).window()]).collect())
            .collect();
        let inv: Vec<u32> = elems.iter().map(|w| index[w.inverse().window()]).collect();
        let in_d: Vec<bool> = elems.iter().map(|w| w.in_type_d()).collect();
        let mut word: Vec<Vec<u8>> = vec![Vec::new(); elems.len()];
        for i in 1..elems.len() {
            let s = elems[i].descents(Side::Right, false)[0];
            let v = right[i][s] as usize;
            debug_assert!(len[v] < len[i]);
            let mut w = word[v].clone();
            w.push(s as u8);
            word[i] = w;
        }
        Ok(GroupTable { d, elems, index, len, word, right, left, inv, in_d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, i: u32) -> &SignedPerm {
        &self.elems[i as usize]
    }

    pub fn index_of(&self, w: &SignedPerm) -> Option<u32> {
        self.index.get(w.window()).copied()
    }

    pub fn by_word(&self, word: &[u8]) -> Result<u32> {
        let w = SignedPerm::from_word(self.d, word)?;
        self.index_of(&w)
            .ok_or_else(|| Error::Internal("group table missing an element".into()))
    }

    pub fn length(&self, i: u32) -> u32 {
        self.len[i as usize]
    }

    pub fn word(&self, i: u32) -> &[u8] {
        &self.word[i as usize]
    }

    /// Index of `w * s`.
    pub fn right_mul(&self, i: u32, s: u8) -> u32 {
        self.right[i as usize][s as usize]
    }

    /// Index of `s * w`.
    pub fn left_mul(&self, i: u32, s: u8) -> u32 {
        self.left[i as usize][s as usize]
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.inv[i as usize]
    }

    pub fn in_type_d(&self, i: u32) -> bool {
        self.in_d[i as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn longest(&self) -> u32 {
        (self.size() - 1) as u32
    }

    pub fn right_descents(&self, i: u32, tilde_only: bool) -> BTreeSet<u8> {
        self.elems[i as usize]
            .descents(Side::Right, tilde_only)
            .into_iter()
            .map(|s| s as u8)
            .collect()
    }

    /// Indices of the parabolic subgroup generated by `gens`, ascending.
    pub fn subgroup(&self, gens: &[u8]) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![0u32];
        seen.insert(0u32);
        while let Some(w) = stack.pop() {
            for &s in gens {
                let ws = self.right_mul(w, s);
                if seen.insert(ws) {
                    stack.push(ws);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The unique longest element among `set` (indices ascending by length).
    pub fn longest_in(&self, set: &[u32]) -> u32 {
        let best = *set.iter().max().expect("nonempty set");
        debug_assert!(
            set.iter().filter(|&&i| self.len[i as usize] == self.len[best as usize]).count() == 1,
            "longest element is not unique"
        );
        best
    }
}

/// A weight function on the generators, constant on conjugacy classes of
/// simple reflections. `equal` gives every generator weight 1; `a_weight`
/// gives the sign generator weight 0 and the rest weight 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    vals: Vec<u32>,
}

impl Weight {
    pub fn equal(d: usize) -> Weight {
        Weight { vals: vec![1; d] }
    }

    pub fn a_weight(d: usize) -> Weight {
        let mut vals = vec![1; d];
        vals[0] = 0;
        Weight { vals }
    }

    pub fn d(&self) -> usize {
        self.vals.len()
    }

    pub fn gen(&self, s: u8) -> u32 {
        self.vals[s as usize]
    }

    pub fn is_equal(&self) -> bool {
        self.vals.iter().all(|&v| v == 1)
    }
}

/// A Hecke-algebra element in the standard basis: index -> coefficient.
pub type HVec = BTreeMap<u32, Laurent>;

fn add_to(h: &mut HVec, w: u32, val: Laurent) {
    if val.is_zero() {
        return;
    }
    let slot = h.entry(w).or_insert_with(Laurent::zero);
    *slot += &val;
    if slot.is_zero() {
        h.remove(&w);
    }
}

/// The weighted Hecke algebra of a hyperoctahedral group together with its
/// canonical basis, built once at construction time.
pub struct Hecke {
    table: GroupTable,
    weight: Weight,
    lw: Vec<u32>,
    bar_t: Vec<HVec>,
    c: Vec<HVec>,
}

impl Hecke {
    pub fn new(table: GroupTable, weight: Weight) -> Result<Hecke> {
        if weight.d() != table.d() {
            return Err(Error::Usage(format!(
                "weight has {} generators but the group has {}",
                weight.d(),
                table.d()
            )));
        }
        if table.d() > ORACLE_MAX_D {
            return Err(Error::Bound(format!(
                "structure-constant oracle supports d <= {ORACLE_MAX_D}, got {}",
                table.d()
            )));
        }
        let size = table.size();
        let lw: Vec<u32> = (0..size)
            .map(|i| table.word[i].iter().map(|&s| weight.gen(s)).sum())
            .collect();
        let mut alg = Hecke { table, weight, lw, bar_t: Vec::new(), c: Vec::new() };
        alg.build_bar_table()?;
        alg.build_canonical_basis()?;
        Ok(alg)
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Weighted length of the `i`-th element.
    pub fn l_of(&self, i: u32) -> u32 {
        self.lw[i as usize]
    }

    /// The standard basis element `T_w` as a vector.
    pub fn t(&self, i: u32) -> HVec {
        let mut h = HVec::new();
        h.insert(i, Laurent::one());
        h
    }

    /// `xi_s = q^{L(s)} - q^{-L(s)}`, the defect in the quadratic relation.
    pub fn xi(&self, s: u8) -> Laurent {
        let l = self.weight.gen(s) as i32;
        &Laurent::q_pow(l) - &Laurent::q_pow(-l)
    }

    /// Right multiplication by `T_s`.
    pub fn t_mul_gen_right(&self, h: &HVec, s: u8) -> HVec {
        let xi = self.xi(s);
        let mut out = HVec::new();
        for (&w, cw) in h {
            let ws = self.table.right_mul(w, s);
            add_to(&mut out, ws, cw.clone());
            if self.table.length(ws) < self.table.length(w) {
                add_to(&mut out, w, &xi * cw);
            }
        }
        out
    }

    /// Left multiplication by `T_s`.
    pub fn t_mul_gen_left(&self, s: u8, h: &HVec) -> HVec {
        let xi = self.xi(s);
        let mut out = HVec::new();
        for (&w, cw) in h {
            let sw = self.table.left_mul(w, s);
            add_to(&mut out, sw, cw.clone());
            if self.table.length(sw) < self.table.length(w) {
                add_to(&mut out, w, &xi * cw);
            }
        }
        out
    }

    /// Product in the standard basis.
    pub fn t_mul(&self, a: &HVec, b: &HVec) -> HVec {
        let mut out = HVec::new();
        for (&w, cw) in b {
            let mut acc = a.clone();
            for &s in self.table.word(w) {
                acc = self.t_mul_gen_right(&acc, s);
            }
            for (u, cu) in acc {
                add_to(&mut out, u, &cu * cw);
            }
        }
        out
    }

    fn build_bar_table(&mut self) -> Result<()> {
        let size = self.table.size();
        let mut bar_t: Vec<HVec> = Vec::with_capacity(size);
        bar_t.push(self.t(0));
        for i in 1..size as u32 {
            let s = *self.table.word(i).last().unwrap();
            let v = self.table.right_mul(i, s);
            // bar(T_w) = bar(T_v) (T_s - xi_s) for w = v s with v shorter.
            let mut h = self.t_mul_gen_right(&bar_t[v as usize], s);
            let xi = self.xi(s);
            for (&u, cu) in &bar_t[v as usize] {
                add_to(&mut h, u, -&(&xi * cu));
            }
            bar_t.push(h);
        }
        self.bar_t = bar_t;
        Ok(())
    }

    /// The bar involution, `q -> q^-1` and `T_w -> T_{w^-1}^{-1}`.
    pub fn bar(&self, h: &HVec) -> HVec {
        let mut out = HVec::new();
        for (&w, cw) in h {
            let cb = cw.bar();
            for (&u, bu) in &self.bar_t[w as usize] {
                add_to(&mut out, u, &cb * bu);
            }
        }
        out
    }

    fn build_canonical_basis(&mut self) -> Result<()> {
        let size = self.table.size();
        let mut basis: Vec<HVec> = Vec::with_capacity(size);
        for i in 0..size as u32 {
            let mut c = self.t(i);
            for _round in 0..=size {
                let mut defect = self.bar(&c);
                for (&w, cw) in &c {
                    add_to(&mut defect, w, -cw);
                }
                let Some((&y, dy)) = defect.last_key_value() else {
                    break;
                };
                if self.table.length(y) >= self.table.length(i) {
                    return Err(Error::Internal(
                        "bar defect reaches the leading term".into(),
                    ));
                }
                let mut alpha = Laurent::zero();
                for (e, coeff) in dy.terms() {
                    if e > 0 {
                        alpha -= &Laurent::term(coeff, -e);
                    }
                }
                if &alpha - &alpha.bar() != *dy {
                    return Err(Error::Internal(
                        "bar defect is not antisymmetric".into(),
                    ));
                }
                for (&u, pu) in &basis[y as usize] {
                    add_to(&mut c, u, &alpha * pu);
                }
            }
            for (&u, pu) in &c {
                let ok = if u == i { pu.is_one() } else { pu.is_strictly_lower() };
                if !ok {
                    return Err(Error::Internal(
                        "canonical basis element fails unitriangularity".into(),
                    ));
                }
            }
            basis.push(c);
        }
        self.c = basis;
        Ok(())
    }

    /// The canonical basis element indexed by `i`, in the standard basis.
    pub fn cprime(&self, i: u32) -> &HVec {
        &self.c[i as usize]
    }

    /// Expands `h` in the canonical basis by back-substitution from the top.
    pub fn c_coords(&self, h: &HVec) -> HVec {
        let mut rem = h.clone();
        let mut out = HVec::new();
        while let Some((&w, cw)) = rem.last_key_value() {
            let cw = cw.clone();
            out.insert(w, cw.clone());
            for (&u, pu) in &self.c[w as usize] {
                add_to(&mut rem, u, -&(&cw * pu));
            }
        }
        out
    }

    /// Structure constants of `C'_x C'_y` in the canonical basis.
    pub fn c_product(&self, x: u32, y: u32) -> HVec {
        self.c_coords(&self.t_mul(&self.c[x as usize], &self.c[y as usize]))
    }

    /// All pairwise canonical-basis products among `elements`, computed with
    /// a shared table of `T_u C'_y` per right factor.
    pub fn c_product_table(&self, elements: &[u32]) -> Vec<Vec<HVec>> {
        let n = elements.len();
        let size = self.table.size();
        let mut out = vec![vec![HVec::new(); n]; n];
        for (jy, &y) in elements.iter().enumerate() {
            let mut u_tab: Vec<HVec> = vec![HVec::new(); size];
            u_tab[0] = self.c[y as usize].clone();
            for u in 1..size as u32 {
                let s = self.table.elem(u).descents(Side::Left, false)[0] as u8;
                let v = self.table.left_mul(u, s);
                u_tab[u as usize] = self.t_mul_gen_left(s, &u_tab[v as usize]);
            }
            for (jx, &x) in elements.iter().enumerate() {
                let mut prod = HVec::new();
                for (&u, cu) in &self.c[x as usize] {
                    for (&z, vz) in &u_tab[u as usize] {
                        add_to(&mut prod, z, cu * vz);
                    }
                }
                out[jx][jy] = self.c_coords(&prod);
            }
        }
        out
    }

    /// `x_J = sum_{w in W_J} q^{L(w)} T_w`.
    pub fn x_lambda(&self, gens: &[u8]) -> HVec {
        let mut out = HVec::new();
        for w in self.table.subgroup(gens) {
            add_to(&mut out, w, Laurent::q_pow(self.lw[w as usize] as i32));
        }
        out
    }

    /// The Poincare factor `q^{-L(w0_J)} sum_{w in W_J} q^{2 L(w)}`.
    pub fn pi_j(&self, gens: &[u8]) -> Laurent {
        let sub = self.table.subgroup(gens);
        let top = self.table.longest_in(&sub);
        let mut sum = Laurent::zero();
        for w in sub {
            sum += &Laurent::q_pow(2 * self.lw[w as usize] as i32);
        }
        &sum * &Laurent::q_pow(-(self.lw[top as usize] as i32))
    }

    /// Cell decomposition of the group (kind B) or of the subalgebra spanned
    /// by the canonical basis elements indexed by the index-two subgroup
    /// (kind D, only defined when the sign generator has weight 0).
    pub fn cells(&self, subgroup: GroupKind) -> Result<CellDecomposition> {
        let size = self.table.size();
        let elements: Vec<u32> = match subgroup {
            GroupKind::B => (0..size as u32).collect(),
            GroupKind::D => {
                if self.weight.gen(0) != 0 {
                    return Err(Error::Usage(
                        "cells of the index-two subgroup need weight 0 at the sign generator"
                            .into(),
                    ));
                }
                (0..size as u32).filter(|&i| self.table.in_type_d(i)).collect()
            }
        };
        let pos: BTreeMap<u32, usize> =
            elements.iter().enumerate().map(|(j, &i)| (i, j)).collect();
        let prods = self.c_product_table(&elements);
        let n = elements.len();
        let mut down_left = vec![BTreeSet::new(); n];
        let mut down_right = vec![BTreeSet::new(); n];
        for jx in 0..n {
            for jy in 0..n {
                for &z in prods[jx][jy].keys() {
                    let Some(&jz) = pos.get(&z) else {
                        return Err(Error::Internal(
                            "canonical-basis product left the subalgebra".into(),
                        ));
                    };
                    down_left[jy].insert(jz);
                    down_right[jx].insert(jz);
                }
            }
        }
        Ok(decomposition_from_adjacency(elements, down_left, down_right))
    }
}

/// Which preorder a cell query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellSide {
    Left,
    Right,
    TwoSided,
}

/// The left, right, and two-sided cells of a based algebra, together with
/// the full reachability relations that produced them.
#[derive(Clone, Debug)]
pub struct CellDecomposition {
    elements: Vec<u32>,
    pos: BTreeMap<u32, usize>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    two_sided: Vec<Vec<u32>>,
    leq_left: Vec<Vec<bool>>,
    leq_right: Vec<Vec<bool>>,
    leq_two: Vec<Vec<bool>>,
    block_left: Vec<usize>,
    block_right: Vec<usize>,
    block_two: Vec<usize>,
}

/// Canonical block lists for comparing two decompositions of the same index
/// set: members ascending, blocks ordered by first member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellBlocks {
    pub left: Vec<Vec<u32>>,
    pub right: Vec<Vec<u32>>,
    pub two_sided: Vec<Vec<u32>>,
}

pub fn canonical_blocks(mut blocks: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

fn reachability(adj: &[BTreeSet<usize>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut reach = vec![vec![false; n]; n];
    for start in 0..n {
        let row = &mut reach[start];
        row[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !row[w] {
                    row[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    reach
}

fn blocks_from_reach(reach: &[Vec<bool>]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = reach.len();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for a in 0..n {
        if block_of[a] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let members: Vec<usize> =
            (0..n).filter(|&b| reach[a][b] && reach[b][a]).collect();
        for &b in &members {
            block_of[b] = id;
        }
        blocks.push(members);
    }
    (blocks, block_of)
}

fn decomposition_from_adjacency(
    elements: Vec<u32>,
    down_left: Vec<BTreeSet<usize>>,
    down_right: Vec<BTreeSet<usize>>,
) -> CellDecomposition {
    let n = elements.len();
    let mut down_two = down_left.clone();
    for (a, b) in down_two.iter_mut().zip(&down_right) {
        a.extend(b.iter().copied());
    }
    // reach[j] answers "which positions are below j", so the preorder is
    // a <= b iff reach[b][a].
    let reach_l = reachability(&down_left);
    let reach_r = reachability(&down_right);
    let reach_t = reachability(&down_two);
    let (left_pos, block_left) = blocks_from_reach(&reach_l);
    let (right_pos, block_right) = blocks_from_reach(&reach_r);
    let (two_pos, block_two) = blocks_from_reach(&reach_t);
    for (blocks, name) in [(&left_pos, "left"), (&right_pos, "right")] {
        for b in blocks.iter() {
            let t = block_two[b[0]];
            assert!(
                b.iter().all(|&m| block_two[m] == t),
                "{name} cell crosses a two-sided cell"
            );
        }
    }
    let to_elems = |blocks: Vec<Vec<usize>>, elements: &[u32]| -> Vec<Vec<u32>> {
        blocks
            .into_iter()
            .map(|b| b.into_iter().map(|j| elements[j]).collect())
            .collect()
    };
    let left = to_elems(left_pos, &elements);
    let right = to_elems(right_pos, &elements);
    let two_sided = to_elems(two_pos, &elements);
    let mut leq_left = vec![vec![false; n]; n];
    let mut leq_right = vec![vec![false; n]; n];
    let mut leq_two = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            leq_left[a][b] = reach_l[b][a];
            leq_right[a][b] = reach_r[b][a];
            leq_two[a][b] = reach_t[b][a];
        }
    }
    let pos = elements.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    CellDecomposition {
        elements,
        pos,
        left,
        right,
        two_sided,
        leq_left,
        leq_right,
        leq_two,
        block_left,
        block_right,
        block_two,
    }
}

impl CellDecomposition {
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn blocks(&self, side: CellSide) -> &[Vec<u32>] {
        match side {
            CellSide::Left => &self.left,
            CellSide::Right => &self.right,
            CellSide::TwoSided => &self.two_sided,
        }
    }

    /// Block index of an element, if it belongs to the decomposition.
    pub fn block_of(&self, side: CellSide, elem: u32) -> Option<usize> {
        let &j = self.pos.get(&elem)?;
        Some(match side {
            CellSide::Left => self.block_left[j],
            CellSide::Right => self.block_right[j],
            CellSide::TwoSided => self.block_two[j],
        })
    }

    /// Whether `a <= b` in the chosen preorder.
    pub fn leq(&self, side: CellSide, a: u32, b: u32) -> Option<bool> {
        let &ja = self.pos.get(&a)?;
        let &jb = self.pos.get(&b)?;
        Some(match side {
            CellSide::Left => self.leq_left[ja][jb],
            CellSide::Right => self.leq_right[ja][jb],
            CellSide::TwoSided => self.leq_two[ja][jb],
        })
    }

    pub fn block_sets(&self) -> CellBlocks {
        CellBlocks {
            left: canonical_blocks(self.left.clone()),
            right: canonical_blocks(self.right.clone()),
            two_sided: canonical_blocks(self.two_sided.clone()),
        }
    }
}

/// A double coset `W_I g W_J`, stored as sorted element indices with its
/// unique shortest and longest members.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub elems: Vec<u32>,
    pub min: u32,
    pub max: u32,
}

fn double_coset_of(table: &GroupTable, lgens: &[u8], rgens: &[u8], start: u32) -> Vec<u32> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(w) = stack.pop() {
        for &s in lgens {
            let sw = table.left_mul(w, s);
            if seen.insert(sw) {
                stack.push(sw);
            }
        }
        for &s in rgens {
            let ws = table.right_mul(w, s);
            if seen.insert(ws) {
                stack.push(ws);
            }
        }
    }
    seen.into_iter().collect()
}

/// All double cosets of the parabolic pair `(W_I, W_J)`, ordered by their
/// shortest representatives.
pub fn double_cosets(table: &GroupTable, lgens: &[u8], rgens: &[u8]) -> Vec<DoubleCoset> {
    let mut assigned = vec![false; table.size()];
    let mut out = Vec::new();
    for start in 0..table.size() as u32 {
        if assigned[start as usize] {
            continue;
        }
        let elems = double_coset_of(table, lgens, rgens, start);
        for &w in &elems {
            assigned[w as usize] = true;
        }
        let min = elems[0];
        let max = *elems.last().unwrap();
        assert!(
            elems.iter().filter(|&&w| table.length(w) == table.length(min)).count() == 1
                && elems.iter().filter(|&&w| table.length(w) == table.length(max)).count() == 1,
            "double coset extremes are not unique"
        );
        out.push(DoubleCoset { elems, min, max });
    }
    out
}

/// Which of the three Schur-algebra flavours a computation targets. The
/// first two use equal weights; the third uses the weight that vanishes on
/// the sign generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    J,
    I,
    ITilde,
}

impl AlgebraKind {
    pub fn matrix_kind(self) -> SchurKind {
        match self {
            AlgebraKind::J => SchurKind::J,
            AlgebraKind::I | AlgebraKind::ITilde => SchurKind::I,
        }
    }

    pub fn weight(self, d: usize) -> Weight {
        match self {
            AlgebraKind::J | AlgebraKind::I => Weight::equal(d),
            AlgebraKind::ITilde => Weight::a_weight(d),
        }
    }
}

impl std::fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AlgebraKind::J => "j",
            AlgebraKind::I => "i",
            AlgebraKind::ITilde => "i-tilde",
        })
    }
}

/// A Schur algebra presented on its coset-matrix basis, with structure
/// constants transferred from the Hecke oracle: the coefficient of the
/// longest element of the target coset, divided exactly by the Poincare
/// factor of the glueing parabolic.
pub struct Schur {
    kind: AlgebraKind,
    n: usize,
    d: usize,
    hecke: Hecke,
    mats: Vec<CosetMatrix>,
    ro: Vec<Composition>,
    co: Vec<Composition>,
    wplus: Vec<u32>,
}

impl Schur {
    pub fn new(n: usize, d: usize, kind: AlgebraKind) -> Result<Schur> {
        let mats = enumerate_pi(n, d, kind.matrix_kind())?;
        let table = GroupTable::new(d)?;
        let hecke = Hecke::new(table, kind.weight(d))?;
        let ro: Vec<Composition> = mats.iter().map(|m| m.ro()).collect();
        let co: Vec<Composition> = mats.iter().map(|m| m.co()).collect();
        let mut wplus = Vec::with_capacity(mats.len());
        for (i, m) in mats.iter().enumerate() {
            let y = m.y()?;
            let yi = hecke
                .table()
                .index_of(&y)
                .ok_or_else(|| Error::Internal("coset representative not in table".into()))?;
            let coset = double_coset_of(
                hecke.table(),
                &ro[i].parabolic_generators(),
                &co[i].parabolic_generators(),
                yi,
            );
            wplus.push(hecke.table().longest_in(&coset));
        }
        Ok(Schur { kind, n, d, hecke, mats, ro, co, wplus })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn hecke(&self) -> &Hecke {
        &self.hecke
    }

    pub fn matrices(&self) -> &[CosetMatrix] {
        &self.mats
    }

    pub fn matrix_index(&self, m: &CosetMatrix) -> Option<usize> {
        self.mats.iter().position(|x| x == m)
    }

    pub fn wplus_index(&self, i: usize) -> u32 {
        self.wplus[i]
    }

    pub fn wplus(&self, i: usize) -> &SignedPerm {
        self.hecke.table().elem(self.wplus[i])
    }

    pub fn ro(&self, i: usize) -> &Composition {
        &self.ro[i]
    }

    pub fn co(&self, i: usize) -> &Composition {
        &self.co[i]
    }

    /// Structure constants of the product of basis elements `a * b`,
    /// indexed by target basis element. Zero when the inner profiles do
    /// not match; exact division failures are hard errors.
    pub fn structure_constants(&self, a: usize, b: usize) -> Result<BTreeMap<usize, Laurent>> {
        let mut out = BTreeMap::new();
        if self.co[a] != self.ro[b] {
            return Ok(out);
        }
        let prod = self.hecke.c_product(self.wplus[a], self.wplus[b]);
        let pi = self.hecke.pi_j(&self.co[a].parabolic_generators());
        for c in 0..self.mats.len() {
            if self.ro[c] != self.ro[a] || self.co[c] != self.co[b] {
                continue;
            }
            let Some(coeff) = prod.get(&self.wplus[c]) else {
                continue;
            };
            let g = coeff.exact_div(&pi).map_err(|e| {
                Error::Division(format!(
                    "transfer factor is not exact at ({a},{b})->{c}: {e}"
                ))
            })?;
            if !g.is_zero() {
                out.insert(c, g);
            }
        }
        Ok(out)
    }

    /// Cell decomposition of the Schur algebra from its own structure
    /// constants, over matrix indices.
    pub fn cells(&self) -> Result<CellDecomposition> {
        let m = self.mats.len();
        let mut down_left = vec![BTreeSet::new(); m];
        let mut down_right = vec![BTreeSet::new(); m];
        for a in 0..m {
            for b in 0..m {
                if self.co[a] != self.ro[b] {
                    continue;
                }
                let consts = self.structure_constants(a, b)?;
                for &c in consts.keys() {
                    down_left[b].insert(c);
                    down_right[a].insert(c);
                }
            }
        }
        let elements: Vec<u32> = (0..m as u32).collect();
        Ok(decomposition_from_adjacency(elements, down_left, down_right))
    }

    /// The same cells predicted combinatorially: two basis elements are
    /// left-equivalent iff their column profiles agree and their longest
    /// coset representatives are left-equivalent in the Hecke algebra;
    /// dually on the right; two-sided needs only the representatives.
    pub fn combinatorial_cells(&self) -> Result<CellBlocks> {
        let hc = self.hecke.cells(GroupKind::B)?;
        let m = self.mats.len();
        let mut left: BTreeMap<(Vec<u32>, usize), Vec<u32>> = BTreeMap::new();
        let mut right: BTreeMap<(Vec<u32>, usize), Vec<u32>> = BTreeMap::new();
        let mut two: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for i in 0..m {
            let wp = self.wplus[i];
            let lb = hc.block_of(CellSide::Left, wp).unwrap();
            let rb = hc.block_of(CellSide::Right, wp).unwrap();
            let tb = hc.block_of(CellSide::TwoSided, wp).unwrap();
            left.entry((self.co[i].entries().to_vec(), lb)).or_default().push(i as u32);
            right.entry((self.ro[i].entries().to_vec(), rb)).or_default().push(i as u32);
            two.entry(tb).or_default().push(i as u32);
        }
        Ok(CellBlocks {
            left: canonical_blocks(left.into_values().collect()),
            right: canonical_blocks(right.into_values().collect()),
            two_sided: canonical_blocks(two.into_values().collect()),
        })
    }
}

/// Counts, for each two-sided cell of the equal-weight Hecke oracle, the
/// pairs (left cell in the cell, composition whose parabolic generators lie
/// in the common right-descent set of that left cell). This predicts the
/// number of left cells of the symmetric-profile Schur algebra attached to
/// the same two-sided cell.
pub fn left_cell_counts_via_r(
    hecke: &Hecke,
    cells: &CellDecomposition,
    n: usize,
) -> Result<Vec<usize>> {
    if !hecke.weight().is_equal() {
        return Err(Error::Usage(
            "descent-set counting is defined for equal weights".into(),
        ));
    }
    let lambdas = enumerate_lambda(n, hecke.table().d(), SchurKind::J)?;
    let gen_sets: Vec<BTreeSet<u8>> = lambdas
        .iter()
        .map(|l| l.parabolic_generators().into_iter().collect())
        .collect();
    let mut totals = vec![0usize; cells.blocks(CellSide::TwoSided).len()];
    for gamma in cells.blocks(CellSide::Left) {
        let r_set = hecke.table().right_descents(gamma[0], false);
        for &w in gamma {
            if hecke.table().right_descents(w, false) != r_set {
                return Err(Error::Internal(
                    "left cell has a non-constant right-descent set".into(),
                ));
            }
        }
        let t = cells.block_of(CellSide::TwoSided, gamma[0]).unwrap();
        totals[t] += gen_sets.iter().filter(|g| g.is_subset(&r_set)).count();
    }
    Ok(totals)
}
