//! Signed permutations (the hyperoctahedral group) with Coxeter structure.
//!
//! An element `w` acts on `{-d,...,-1,0,1,...,d}` with `w(-i) = -w(i)` and
//! `w(0) = 0`; it is stored by its window `[w(1),...,w(d)]`. Generators are
//! numbered `0..d`: letter `0` is the sign change at position 1, letter
//! `i >= 1` swaps `i` and `i+1` (together with their negatives).

use crate::{Error, Result};
use itertools::Itertools;
use std::fmt;

/// A word in the generators, letters in `0..d`.
pub type CoxeterWord = Vec<u8>;

/// Which symmetric-group relabeling to use when inserting window values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmbedKind {
    /// All of `-d..=d` including 0, relabeled to `1..=2d+1`.
    B,
    /// `-d..=d` without 0, relabeled to `1..=2d`.
    C,
}

/// Full group or its even-sign-change subgroup.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    B,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

const ENUM_MAX_D: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(d: usize) -> Self {
        SignedPerm { window: (1..=d as i32).collect() }
    }

    /// Validates that the window is a signed permutation of `1..=d`.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let d = window.len();
        let mut seen = vec![false; d];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > d || seen[a - 1] {
                return Err(Error::InvalidWindow(format!("{window:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { window })
    }

    /// The generator `s_i` of rank-`d` type B.
    pub fn generator(d: usize, i: usize) -> Self {
        assert!(i < d, "generator index {i} out of range for rank {d}");
        let mut w = Self::identity(d);
        if i == 0 {
            w.window[0] = -1;
        } else {
            w.window[i - 1] = i as i32 + 1;
            w.window[i] = i as i32;
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn apply(&self, k: i32) -> i32 {
        match k.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => self.window[(k - 1) as usize],
            std::cmp::Ordering::Less => -self.window[(-k - 1) as usize],
        }
    }

    /// Functional composition: `(self . other)(k) = self(other(k))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), other.rank());
        SignedPerm { window: other.window.iter().map(|&v| self.apply(v)).collect() }
    }

    pub fn inverse(&self) -> SignedPerm {
        let d = self.rank();
        let mut window = vec![0i32; d];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            if v > 0 {
                window[(v - 1) as usize] = pos;
            } else {
                window[(-v - 1) as usize] = -pos;
            }
        }
        SignedPerm { window }
    }

    /// `self * s_i` (one window operation).
    pub fn right_mul_gen(&self, i: usize) -> SignedPerm {
        let mut w = self.clone();
        if i == 0 {
            w.window[0] = -w.window[0];
        } else {
            w.window.swap(i - 1, i);
        }
        w
    }

    /// `s_i * self`.
    pub fn left_mul_gen(&self, i: usize) -> SignedPerm {
        let mut w = self.clone();
        for v in &mut w.window {
            if i == 0 {
                if v.unsigned_abs() == 1 {
                    *v = -*v;
                }
            } else {
                let a = v.unsigned_abs() as usize;
                if a == i {
                    *v = v.signum() * (i as i32 + 1);
                } else if a == i + 1 {
                    *v = v.signum() * i as i32;
                }
            }
        }
        w
    }

    /// Coxeter length: half the number of inversion pairs
    /// `(a,b) in [1,d] x [-d,d]` with `a < b, w(a) > w(b)` or
    /// `a > b, w(a) < w(b)`.
    pub fn length(&self) -> u32 {
        let d = self.rank() as i32;
        let mut count = 0u32;
        for a in 1..=d {
            let wa = self.apply(a);
            for b in -d..=d {
                let wb = self.apply(b);
                if (a < b && wa > wb) || (a > b && wa < wb) {
                    count += 1;
                }
            }
        }
        debug_assert_eq!(count % 2, 0);
        count / 2
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.window[0] < 0
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.inverse().is_right_descent(i)
    }

    /// Descent set on the chosen side; `tilde_only` drops letter 0.
    pub fn descents(&self, side: Side, tilde_only: bool) -> Vec<usize> {
        let w;
        let v = match side {
            Side::Right => self,
            Side::Left => {
                w = self.inverse();
                &w
            }
        };
        (usize::from(tilde_only)..self.rank()).filter(|&i| v.is_right_descent(i)).collect()
    }

    /// Reduced word obtained by repeatedly stripping the smallest right
    /// descent.
    pub fn reduced_word(&self) -> CoxeterWord {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while !w.is_identity() {
            let i = (0..w.rank()).find(|&i| w.is_right_descent(i)).expect("non-identity element has a descent");
            rev.push(i as u8);
            w = w.right_mul_gen(i);
        }
        rev.reverse();
        rev
    }

    /// Product of the listed generators, applied left to right.
    pub fn from_word(d: usize, word: &[u8]) -> Result<Self> {
        let mut w = Self::identity(d);
        for &s in word {
            if s as usize >= d {
                return Err(Error::InvalidWord(format!("letter s{s} out of range for rank {d}")));
            }
            w = w.right_mul_gen(s as usize);
        }
        Ok(w)
    }

    /// Number of letters `s_i`, `i >= 1`, in any reduced word.
    pub fn weight_a(&self) -> u32 {
        self.reduced_word().iter().filter(|&&s| s >= 1).count() as u32
    }

    /// Bruhat order, by descent-stripping along a fixed reduced word of
    /// `other`.
    pub fn bruhat_leq(&self, other: &SignedPerm) -> bool {
        assert_eq!(self.rank(), other.rank());
        if self.length() > other.length() {
            return false;
        }
        let mut u = self.clone();
        for &s in other.reduced_word().iter().rev() {
            if u.is_right_descent(s as usize) {
                u = u.right_mul_gen(s as usize);
            }
        }
        u.is_identity()
    }

    /// Number of negative window entries.
    pub fn negative_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    pub fn in_type_d(&self) -> bool {
        self.negative_count() % 2 == 0
    }

    /// One-line notation of the relabeled permutation on `1..=N`.
    pub fn embed_sym(&self, kind: EmbedKind) -> Vec<u32> {
        let d = self.rank() as i32;
        let relabel = |v: i32| -> u32 {
            match kind {
                EmbedKind::B => (v + d + 1) as u32,
                EmbedKind::C => {
                    if v < 0 {
                        (v + d + 1) as u32
                    } else {
                        (v + d) as u32
                    }
                }
            }
        };
        let positions: Vec<i32> = match kind {
            EmbedKind::B => (-d..=d).collect(),
            EmbedKind::C => (-d..=d).filter(|&p| p != 0).collect(),
        };
        positions.into_iter().map(|p| relabel(self.apply(p))).collect()
    }

    /// All elements of the group (kind B) or its index-two subgroup
    /// (kind D), in a deterministic order.
    pub fn enumerate(d: usize, kind: GroupKind) -> Result<Vec<SignedPerm>> {
        if d == 0 || d > ENUM_MAX_D {
            return Err(Error::Bound(format!("group enumeration supports 1 <= d <= {ENUM_MAX_D}, got {d}")));
        }
        let mut out = Vec::new();
        for perm in (1..=d as i32).permutations(d) {
            for mask in 0u32..(1 << d) {
                if kind == GroupKind::D && mask.count_ones() % 2 != 0 {
                    continue;
                }
                let window: Vec<i32> = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                    .collect();
                out.push(SignedPerm { window });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(","))
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders a word as `s0 s1 s0`, or `e` for the empty word.
pub fn word_to_string(word: &[u8]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|s| format!("s{s}")).join(" ")
    }
}

/// Parses `s0 s1 s0` (or `e` / empty for the identity).
pub fn parse_word(text: &str) -> Result<CoxeterWord> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(Vec::new());
    }
    text.split_whitespace()
        .map(|tok| {
            tok.strip_prefix('s')
                .and_then(|n| n.parse::<u8>().ok())
                .ok_or_else(|| Error::Parse(format!("bad generator token {tok:?}")))
        })
        .collect()
}

/// Parses a window like `[-2,1]`.
pub fn parse_window(text: &str) -> Result<SignedPerm> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("window must look like [-2,1], got {text:?}")))?;
    let entries: Vec<i32> = inner
        .split(',')
        .map(|t| t.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad window entry {t:?}"))))
        .collect::<Result<_>>()?;
    SignedPerm::from_window(entries)
}
