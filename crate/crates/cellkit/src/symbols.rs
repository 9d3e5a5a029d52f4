//! Two-row symbols, the par maps between symbols and partitions, the chi map
//! into equal-row symbols, and the symbol class attached to a signed
//! permutation.
//!
//! A symbol is considered up to shift (prepending 0 to both rows and
//! incrementing the old entries); equal-row symbols are additionally
//! considered up to swapping the rows. Normalized symbols serve as class
//! representatives throughout.

use crate::signed_perm::{EmbedKind, SignedPerm};
use crate::tableaux::{pt_shape, Partition, VeryEvenLabel};
use crate::{Error, Result};
use itertools::Itertools;
use std::fmt;

/// Content rule for the partition maps on two-row symbols.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BCKind {
    /// Entries {2λᵢ+1} ∪ {2μⱼ}; partitions of odd total.
    B,
    /// Entries {2λᵢ} ∪ {2μⱼ+1}; partitions of even total.
    C,
}

/// How equal-row symbol classes compare their content.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContentCmp {
    Multiset,
    Set,
}

fn strictly_increasing(row: &[u32]) -> bool {
    row.iter().tuple_windows().all(|(a, b)| a < b)
}

/// Two-row symbol with rows of lengths m+1 and m.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymbolBC {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl SymbolBC {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() + 1 || !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(Error::InvalidSymbol(format!("{top:?} / {bottom:?}")));
        }
        Ok(SymbolBC { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn m(&self) -> usize {
        self.bottom.len()
    }

    /// The rank this symbol belongs to: sum of entries minus m².
    pub fn rank(&self) -> u32 {
        let total: u32 = self.top.iter().chain(&self.bottom).sum();
        total - (self.m() * self.m()) as u32
    }

    pub fn shift(&self) -> Self {
        SymbolBC {
            top: std::iter::once(0).chain(self.top.iter().map(|&x| x + 1)).collect(),
            bottom: std::iter::once(0).chain(self.bottom.iter().map(|&x| x + 1)).collect(),
        }
    }

    pub fn try_unshift(&self) -> Option<Self> {
        if self.top.first() == Some(&0) && self.bottom.first() == Some(&0) {
            Some(SymbolBC {
                top: self.top[1..].iter().map(|&x| x - 1).collect(),
                bottom: self.bottom[1..].iter().map(|&x| x - 1).collect(),
            })
        } else {
            None
        }
    }

    /// Canonical class representative: unshift until irreducible.
    pub fn normalize(&self) -> Self {
        let mut s = self.clone();
        while let Some(smaller) = s.try_unshift() {
            s = smaller;
        }
        s
    }

    fn shift_to_m(&self, m: usize) -> Self {
        let mut s = self.clone();
        while s.m() < m {
            s = s.shift();
        }
        s
    }

    /// Sorted content under the kind's entry rule.
    fn content(&self, kind: BCKind) -> Vec<u32> {
        let (t, b) = match kind {
            BCKind::B => (1, 0),
            BCKind::C => (0, 1),
        };
        let mut nu: Vec<u32> = self
            .top
            .iter()
            .map(|&a| 2 * a + t)
            .chain(self.bottom.iter().map(|&b2| 2 * b2 + b))
            .collect();
        nu.sort_unstable();
        nu
    }

    /// The partition with parts νₖ − (k−1), ν the sorted content.
    pub fn par(&self, kind: BCKind) -> Partition {
        partition_from_staircase(&self.content(kind))
    }

    /// Rows interlace: λ₁ ≤ μ₁ ≤ λ₂ ≤ … ≤ μ_m ≤ λ_{m+1}.
    pub fn is_special(&self) -> bool {
        (0..self.m()).all(|i| self.top[i] <= self.bottom[i] && self.bottom[i] <= self.top[i + 1])
    }

    /// The unique special symbol with the same content.
    pub fn special_rep(&self) -> SymbolBC {
        let mut entries: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        entries.sort_unstable();
        let top = entries.iter().step_by(2).copied().collect();
        let bottom = entries.iter().skip(1).step_by(2).copied().collect();
        SymbolBC { top, bottom }
    }

    /// Canonical key of the similarity class: the normalized special
    /// representative. Two symbols are similar iff their keys are equal.
    pub fn class_key(&self) -> SymbolBC {
        self.special_rep().normalize()
    }
}

impl fmt::Display for SymbolBC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} / {}}}", self.top.iter().join("<"), self.bottom.iter().join("<"))
    }
}

/// Equal-row symbol; symbols with identical rows carry an optional I/II
/// marker distinguishing the two classes they induce.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymbolD {
    top: Vec<u32>,
    bottom: Vec<u32>,
    twin: Option<VeryEvenLabel>,
}

impl SymbolD {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>, twin: Option<VeryEvenLabel>) -> Result<Self> {
        if top.len() != bottom.len() || !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(Error::InvalidSymbol(format!("{top:?} / {bottom:?}")));
        }
        if twin.is_some() && top != bottom {
            return Err(Error::InvalidSymbol("twin marker on unequal rows".into()));
        }
        Ok(SymbolD { top, bottom, twin })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn twin(&self) -> Option<VeryEvenLabel> {
        self.twin
    }

    pub fn is_twin_shaped(&self) -> bool {
        self.top == self.bottom
    }

    pub fn m(&self) -> usize {
        self.top.len()
    }

    /// Sum of entries minus m(m−1).
    pub fn rank(&self) -> u32 {
        let total: u32 = self.top.iter().chain(&self.bottom).sum();
        total - (self.m() * (self.m() - 1)) as u32
    }

    pub fn shift(&self) -> Self {
        SymbolD {
            top: std::iter::once(0).chain(self.top.iter().map(|&x| x + 1)).collect(),
            bottom: std::iter::once(0).chain(self.bottom.iter().map(|&x| x + 1)).collect(),
            twin: self.twin,
        }
    }

    pub fn try_unshift(&self) -> Option<Self> {
        if self.top.first() == Some(&0) && self.bottom.first() == Some(&0) {
            Some(SymbolD {
                top: self.top[1..].iter().map(|&x| x - 1).collect(),
                bottom: self.bottom[1..].iter().map(|&x| x - 1).collect(),
                twin: self.twin,
            })
        } else {
            None
        }
    }

    /// Unshift until irreducible, then put the lexicographically smaller row
    /// on top.
    pub fn normalize(&self) -> Self {
        let mut s = self.clone();
        while let Some(smaller) = s.try_unshift() {
            s = smaller;
        }
        if s.bottom < s.top {
            std::mem::swap(&mut s.top, &mut s.bottom);
        }
        s
    }

    fn shift_to_m(&self, m: usize) -> Self {
        let mut s = self.clone();
        while s.m() < m {
            s = s.shift();
        }
        s
    }

    /// Interlacing in either orientation.
    pub fn is_special(&self) -> bool {
        let inter = |a: &[u32], b: &[u32]| {
            (0..self.m()).all(|i| a[i] <= b[i] && (i + 1 >= self.m() || b[i] <= a[i + 1]))
        };
        inter(&self.top, &self.bottom) || inter(&self.bottom, &self.top)
    }

    /// The special symbol with the same content (twin marker preserved).
    pub fn special_rep(&self) -> SymbolD {
        let mut entries: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        entries.sort_unstable();
        let top: Vec<u32> = entries.iter().step_by(2).copied().collect();
        let bottom: Vec<u32> = entries.iter().skip(1).step_by(2).copied().collect();
        let twin = if top == bottom { self.twin } else { None };
        SymbolD { top, bottom, twin }
    }

    /// Canonical key of the similarity class under the multiset reading:
    /// the normalized special representative. Twin markers remain part of
    /// the key.
    pub fn class_key(&self) -> SymbolD {
        self.special_rep().normalize()
    }

    /// The partition whose staircase content doubles one row and
    /// odd-shifts the other; exactly one row assignment lands in the class
    /// of partitions with even parts of even multiplicity.
    pub fn par(&self) -> Result<Partition> {
        let make = |evens: &[u32], odds: &[u32]| {
            let mut nu: Vec<u32> =
                evens.iter().map(|&x| 2 * x).chain(odds.iter().map(|&x| 2 * x + 1)).collect();
            nu.sort_unstable();
            partition_from_staircase(&nu)
        };
        let admissible = |p: &Partition| {
            p.parts().iter().dedup_with_count().all(|(c, part)| part % 2 == 1 || c % 2 == 0)
        };
        let a = make(&self.top, &self.bottom);
        let b = make(&self.bottom, &self.top);
        match (admissible(&a), admissible(&b)) {
            (true, false) => Ok(a),
            (false, true) => Ok(b),
            (true, true) if a == b => Ok(a),
            _ => Err(Error::Internal(format!("no unique partition for symbol {self}"))),
        }
    }
}

impl fmt::Display for SymbolD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} / {}}}", self.top.iter().join("<"), self.bottom.iter().join("<"))?;
        if let Some(l) = self.twin {
            write!(f, " [{l:?}]")?;
        }
        Ok(())
    }
}

/// Parts νₖ − (k−1) of a strictly increasing staircase, as a partition.
fn partition_from_staircase(nu: &[u32]) -> Partition {
    let mut parts: Vec<u32> = nu.iter().enumerate().map(|(k, &v)| v - k as u32).collect();
    parts.reverse();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts).expect("staircase differences are weakly decreasing")
}

/// Pads the partition to `len` parts and returns the staircase values
/// cₖ + (k−1), smallest first.
fn staircase(p: &Partition, len: usize) -> Vec<u32> {
    let mut c: Vec<u32> = p.parts().to_vec();
    c.reverse();
    let pad = len - c.len();
    (0..len)
        .map(|k| if k < pad { k as u32 } else { c[k - pad] + k as u32 })
        .collect()
}

/// Inverse of [`SymbolBC::par`]: the normalized symbol class of a partition,
/// or an error when the partition is outside the image.
pub fn symbol_from_partition_bc(p: &Partition, kind: BCKind) -> Result<SymbolBC> {
    let m_min = p.len().saturating_sub(1).div_ceil(2);
    for m in [m_min, m_min + 1] {
        let nu = staircase(p, 2 * m + 1);
        let (evens, odds): (Vec<u32>, Vec<u32>) = nu.iter().partition(|&&v| v % 2 == 0);
        let (top_src, top_off, bot_src, bot_off) = match kind {
            BCKind::B => (&odds, 1, &evens, 0),
            BCKind::C => (&evens, 0, &odds, 1),
        };
        if top_src.len() == m + 1 && bot_src.len() == m {
            let top = top_src.iter().map(|&v| (v - top_off) / 2).collect();
            let bottom = bot_src.iter().map(|&v| (v - bot_off) / 2).collect();
            return Ok(SymbolBC { top, bottom }.normalize());
        }
    }
    Err(Error::InvalidPartition(format!("{p} has no symbol of kind {kind:?}")))
}

/// Equal-row analogue of [`symbol_from_partition_bc`]; the twin marker is
/// left unset. Only partitions whose even parts have even multiplicity
/// correspond to equal-row symbols.
pub fn symbol_from_partition_d(p: &Partition) -> Result<SymbolD> {
    let admissible =
        p.parts().iter().dedup_with_count().all(|(c, part)| part % 2 == 1 || c % 2 == 0);
    if !admissible {
        return Err(Error::InvalidPartition(format!("{p} has an odd run of an even part")));
    }
    let m_min = p.len().div_ceil(2);
    for m in [m_min, m_min + 1] {
        let nu = staircase(p, 2 * m);
        let (evens, odds): (Vec<u32>, Vec<u32>) = nu.iter().partition(|&&v| v % 2 == 0);
        if evens.len() == m && odds.len() == m {
            let top = evens.iter().map(|&v| v / 2).collect();
            let bottom = odds.iter().map(|&v| (v - 1) / 2).collect();
            return Ok(SymbolD { top, bottom, twin: None }.normalize());
        }
    }
    Err(Error::InvalidPartition(format!("{p} has no equal-row symbol")))
}

/// Content equality after shifting to a common m.
pub fn approx_eq_bc(a: &SymbolBC, b: &SymbolBC) -> bool {
    let m = a.m().max(b.m());
    let (a, b) = (a.shift_to_m(m), b.shift_to_m(m));
    let mut ca: Vec<u32> = a.top.iter().chain(&a.bottom).copied().collect();
    let mut cb: Vec<u32> = b.top.iter().chain(&b.bottom).copied().collect();
    ca.sort_unstable();
    cb.sort_unstable();
    ca == cb
}

/// Content equality after shifting to a common m. Twin markers must agree
/// unless `identify_twins` is set; `cmp` selects multiset or plain-set
/// comparison of the content.
pub fn approx_eq_d(a: &SymbolD, b: &SymbolD, cmp: ContentCmp, identify_twins: bool) -> bool {
    if !identify_twins && a.twin != b.twin {
        return false;
    }
    let m = a.m().max(b.m());
    let (a, b) = (a.shift_to_m(m), b.shift_to_m(m));
    let mut ca: Vec<u32> = a.top.iter().chain(&a.bottom).copied().collect();
    let mut cb: Vec<u32> = b.top.iter().chain(&b.bottom).copied().collect();
    ca.sort_unstable();
    cb.sort_unstable();
    if cmp == ContentCmp::Set {
        ca.dedup();
        cb.dedup();
    }
    ca == cb
}

/// Top row kept, bottom row mapped to (0, μ₁+1, …, μ_m+1).
pub fn chi(s: &SymbolBC) -> SymbolD {
    SymbolD {
        top: s.top.clone(),
        bottom: std::iter::once(0).chain(s.bottom.iter().map(|&x| x + 1)).collect(),
        twin: None,
    }
}

/// The normalized equal-row symbol class attached to a signed permutation:
/// chi applied to the symbol of its insertion shape (C content rule).
pub fn sym(w: &SignedPerm) -> Result<SymbolD> {
    let shape = pt_shape(w, EmbedKind::C);
    let s = symbol_from_partition_bc(&shape, BCKind::C)
        .map_err(|e| Error::Internal(format!("insertion shape rejected: {e}")))?;
    Ok(chi(&s).normalize())
}
