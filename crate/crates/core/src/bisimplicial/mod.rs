//! Finite, truncation-bounded bisimplicial sets.
//!
//! A [`FinBisimplicialSet`] stores, for every bidegree `(n, m)` up to a fixed
//! truncation `(N, M)`, a finite sorted list of cell identifiers together with
//! the four families of generating structure maps (horizontal/vertical faces
//! and degeneracies) as total functions between adjacent levels. All simplicial
//! identities and the cross-commutation between the two directions are
//! checkable exhaustively via [`FinBisimplicialSet::validate`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex;

pub mod build;
pub mod map;
pub mod shape;

pub use build::*;
pub use map::*;
pub use shape::*;

/// A bidegree `(n, m)`: horizontal simplicial degree `n`, vertical degree `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub n: usize,
    pub m: usize,
}

impl Bidegree {
    pub fn new(n: usize, m: usize) -> Self {
        Bidegree { n, m }
    }

    pub fn leq(&self, other: &Bidegree) -> bool {
        self.n <= other.n && self.m <= other.m
    }

    pub fn transpose(&self) -> Bidegree {
        Bidegree { n: self.m, m: self.n }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}

/// Direction of a structure map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Horizontal,
    Vertical,
}

/// The three involutive dualities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Duality {
    Transpose,
    Hop,
    Vop,
}

/// A finite bisimplicial set truncated at `(N, M)`.
///
/// Cells are opaque string identifiers; within each level they are stored
/// sorted, and all structure maps are positional (`Vec<usize>` of indices
/// into the adjacent level).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBisimplicialSet {
    truncation: Bidegree,
    levels: BTreeMap<Bidegree, Vec<String>>,
    /// `h_face[&(n,m)][i][c]`: the cell index of `d^h_i(c)` in level `(n-1, m)`,
    /// for `0 <= i <= n`, present whenever `n >= 1`.
    h_face: BTreeMap<Bidegree, Vec<Vec<usize>>>,
    /// `h_deg[&(n,m)][i][c]`: index of `s^h_i(c)` in level `(n+1, m)`, for
    /// `0 <= i <= n`, present whenever `n < N`.
    h_deg: BTreeMap<Bidegree, Vec<Vec<usize>>>,
    v_face: BTreeMap<Bidegree, Vec<Vec<usize>>>,
    v_deg: BTreeMap<Bidegree, Vec<Vec<usize>>>,
}

impl FinBisimplicialSet {
    /// Assemble from raw parts, sorting cells and reindexing the maps.
    /// `levels` may list cells in any order; maps are keyed by cell id.
    pub fn from_cells<F>(truncation: Bidegree, mut cells: BTreeMap<Bidegree, Vec<String>>, op: F) -> Result<Self>
    where
        F: Fn(Dir, bool, usize, Bidegree, &str) -> String,
    {
        for level in all_bidegrees(truncation) {
            cells.entry(level).or_default();
        }
        for list in cells.values_mut() {
            list.sort();
            list.dedup();
        }
        let index: BTreeMap<Bidegree, BTreeMap<&str, usize>> = cells
            .iter()
            .map(|(b, list)| {
                (*b, list.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect())
            })
            .collect();
        let mut h_face = BTreeMap::new();
        let mut h_deg = BTreeMap::new();
        let mut v_face = BTreeMap::new();
        let mut v_deg = BTreeMap::new();
        let lookup = |b: Bidegree, id: &str| -> Result<usize> {
            index
                .get(&b)
                .and_then(|m| m.get(id))
                .copied()
                .ok_or_else(|| Error::InvalidStructure(format!("cell `{id}` missing at level {b}")))
        };
        for (&b, list) in &cells {
            // horizontal faces
            if b.n >= 1 {
                let tgt = Bidegree::new(b.n - 1, b.m);
                let maps: Result<Vec<Vec<usize>>> = (0..=b.n)
                    .map(|i| {
                        list.iter()
                            .map(|c| lookup(tgt, &op(Dir::Horizontal, true, i, b, c)))
                            .collect()
                    })
                    .collect();
                h_face.insert(b, maps?);
            }
            if b.n < truncation.n {
                let tgt = Bidegree::new(b.n + 1, b.m);
                let maps: Result<Vec<Vec<usize>>> = (0..=b.n)
                    .map(|i| {
                        list.iter()
                            .map(|c| lookup(tgt, &op(Dir::Horizontal, false, i, b, c)))
                            .collect()
                    })
                    .collect();
                h_deg.insert(b, maps?);
            }
            if b.m >= 1 {
                let tgt = Bidegree::new(b.n, b.m - 1);
                let maps: Result<Vec<Vec<usize>>> = (0..=b.m)
                    .map(|j| {
                        list.iter()
                            .map(|c| lookup(tgt, &op(Dir::Vertical, true, j, b, c)))
                            .collect()
                    })
                    .collect();
                v_face.insert(b, maps?);
            }
            if b.m < truncation.m {
                let tgt = Bidegree::new(b.n, b.m + 1);
                let maps: Result<Vec<Vec<usize>>> = (0..=b.m)
                    .map(|j| {
                        list.iter()
                            .map(|c| lookup(tgt, &op(Dir::Vertical, false, j, b, c)))
                            .collect()
                    })
                    .collect();
                v_deg.insert(b, maps?);
            }
        }
        Ok(FinBisimplicialSet { truncation, levels: cells, h_face, h_deg, v_face, v_deg })
    }

    pub fn truncation(&self) -> Bidegree {
        self.truncation
    }

    pub fn level(&self, b: Bidegree) -> &[String] {
        self.levels.get(&b).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn level_size(&self, b: Bidegree) -> usize {
        self.level(b).len()
    }

    pub fn levels(&self) -> impl Iterator<Item = (Bidegree, &[String])> {
        self.levels.iter().map(|(b, v)| (*b, v.as_slice()))
    }

    pub fn cell_id(&self, b: Bidegree, idx: usize) -> &str {
        &self.levels[&b][idx]
    }

    pub fn cell_index(&self, b: Bidegree, id: &str) -> Option<usize> {
        self.levels.get(&b).and_then(|v| v.binary_search_by(|x| x.as_str().cmp(id)).ok())
    }

    /// Apply the generating operator (face if `face`, else degeneracy) with
    /// index `i` in direction `dir` to the cell at position `c` of level `b`.
    pub fn apply(&self, dir: Dir, face: bool, i: usize, b: Bidegree, c: usize) -> usize {
        let table = match (dir, face) {
            (Dir::Horizontal, true) => &self.h_face,
            (Dir::Horizontal, false) => &self.h_deg,
            (Dir::Vertical, true) => &self.v_face,
            (Dir::Vertical, false) => &self.v_deg,
        };
        table[&b][i][c]
    }

    fn op_target(&self, dir: Dir, face: bool, b: Bidegree) -> Bidegree {
        match (dir, face) {
            (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
            (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
            (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
            (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
        }
    }

    /// The in-range generating operators out of level `b`.
    pub fn ops_from(&self, b: Bidegree) -> Vec<(Dir, bool, usize)> {
        let mut out = Vec::new();
        if b.n >= 1 {
            out.extend((0..=b.n).map(|i| (Dir::Horizontal, true, i)));
        }
        if b.n < self.truncation.n {
            out.extend((0..=b.n).map(|i| (Dir::Horizontal, false, i)));
        }
        if b.m >= 1 {
            out.extend((0..=b.m).map(|j| (Dir::Vertical, true, j)));
        }
        if b.m < self.truncation.m {
            out.extend((0..=b.m).map(|j| (Dir::Vertical, false, j)));
        }
        out
    }

    /// Restrict a cell along a pair of monotone maps `f : [a] -> [n]`,
    /// `g : [b] -> [m]` (contravariant action), staying within the truncation.
    pub fn act(&self, level: Bidegree, c: usize, f: &[usize], g: &[usize]) -> (Bidegree, usize) {
        let (mut lv, mut cur) = (level, c);
        // horizontal part
        let mut fh = f.to_vec();
        loop {
            match simplex::peel(&fh, lv.n) {
                None => break,
                Some(simplex::Step::Face(i, red)) => {
                    cur = self.apply(Dir::Horizontal, true, i, lv, cur);
                    lv = Bidegree::new(lv.n - 1, lv.m);
                    fh = red;
                }
                Some(simplex::Step::Degeneracy(j, red)) => {
                    // act by sigma_j after the reduced map: apply the reduced map
                    // first at the lower level, then the degeneracy on top.
                    // Recursion via an explicit stack is avoided by the identity
                    //   X(f'' . sigma_j) = s_j . X(f'')
                    // so we peel all degeneracies last; record and continue.
                    // Since peel() prefers faces, reaching here means fh is
                    // surjective; apply the degeneracy immediately: X(sigma_j)
                    // itself is s_j, and fh = red . sigma_j means
                    // X(fh) = X(sigma_j) . X(red); X(red) must act first.
                    let (lv2, cur2) = self.act_h_only(lv, cur, &red);
                    cur = self.apply(Dir::Horizontal, false, j, lv2, cur2);
                    lv = Bidegree::new(lv2.n + 1, lv2.m);
                    fh = (0..fh.len()).collect();
                    debug_assert_eq!(lv.n + 1, fh.len());
                    break;
                }
            }
        }
        // vertical part
        let mut gv = g.to_vec();
        loop {
            match simplex::peel(&gv, lv.m) {
                None => break,
                Some(simplex::Step::Face(j, red)) => {
                    cur = self.apply(Dir::Vertical, true, j, lv, cur);
                    lv = Bidegree::new(lv.n, lv.m - 1);
                    gv = red;
                }
                Some(simplex::Step::Degeneracy(j, red)) => {
                    let (lv2, cur2) = self.act_v_only(lv, cur, &red);
                    cur = self.apply(Dir::Vertical, false, j, lv2, cur2);
                    lv = Bidegree::new(lv2.n, lv2.m + 1);
                    break;
                }
            }
        }
        (lv, cur)
    }

    fn act_h_only(&self, level: Bidegree, c: usize, f: &[usize]) -> (Bidegree, usize) {
        let id: Vec<usize> = (0..=level.m).collect();
        self.act(level, c, f, &id)
    }

    fn act_v_only(&self, level: Bidegree, c: usize, g: &[usize]) -> (Bidegree, usize) {
        let id: Vec<usize> = (0..=level.n).collect();
        self.act(level, c, &id, g)
    }

    /// Is the cell degenerate, i.e. in the image of some degeneracy operator?
    pub fn is_degenerate(&self, b: Bidegree, c: usize) -> bool {
        if b.n >= 1 {
            let lower = Bidegree::new(b.n - 1, b.m);
            for i in 0..b.n {
                let img = &self.h_deg[&lower][i];
                if img.contains(&c) {
                    return true;
                }
            }
        }
        if b.m >= 1 {
            let lower = Bidegree::new(b.n, b.m - 1);
            for j in 0..b.m {
                let img = &self.v_deg[&lower][j];
                if img.contains(&c) {
                    return true;
                }
            }
        }
        false
    }

    /// All nondegenerate cells, as `(level, index)` pairs.
    pub fn nondegenerate_cells(&self) -> Vec<(Bidegree, usize)> {
        let mut out = Vec::new();
        for (b, list) in &self.levels {
            for c in 0..list.len() {
                if !self.is_degenerate(*b, c) {
                    out.push((*b, c));
                }
            }
        }
        out
    }

    pub fn total_cells(&self) -> usize {
        self.levels.values().map(|v| v.len()).sum()
    }

    /// Exhaustively check the horizontal and vertical simplicial identities and
    /// the commutation of the two directions at every in-range index.
    pub fn validate(&self) -> Result<()> {
        for (&b, list) in &self.levels {
            let size = list.len();
            // squashed closure: check op2(op1(c)) == op1'(op2'(c)) given levels stay in range
            for c in 0..size {
                // d_i d_j = d_{j-1} d_i  (i < j), horizontally
                if b.n >= 2 {
                    for j in 0..=b.n {
                        for i in 0..j {
                            let a1 = self.apply(Dir::Horizontal, true, j, b, c);
                            let a1 = self.apply(Dir::Horizontal, true, i, Bidegree::new(b.n - 1, b.m), a1);
                            let a2 = self.apply(Dir::Horizontal, true, i, b, c);
                            let a2 = self.apply(Dir::Horizontal, true, j - 1, Bidegree::new(b.n - 1, b.m), a2);
                            if a1 != a2 {
                                return Err(Error::InvalidStructure(format!(
                                    "h-face identity fails at {b} cell {} (i={i}, j={j})",
                                    list[c]
                                )));
                            }
                        }
                    }
                }
                if b.m >= 2 {
                    for j in 0..=b.m {
                        for i in 0..j {
                            let a1 = self.apply(Dir::Vertical, true, j, b, c);
                            let a1 = self.apply(Dir::Vertical, true, i, Bidegree::new(b.n, b.m - 1), a1);
                            let a2 = self.apply(Dir::Vertical, true, i, b, c);
                            let a2 = self.apply(Dir::Vertical, true, j - 1, Bidegree::new(b.n, b.m - 1), a2);
                            if a1 != a2 {
                                return Err(Error::InvalidStructure(format!(
                                    "v-face identity fails at {b} cell {} (i={i}, j={j})",
                                    list[c]
                                )));
                            }
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i (i <= j)
                if b.n + 2 <= self.truncation.n {
                    for j in 0..=b.n {
                        for i in 0..=j {
                            let up = Bidegree::new(b.n + 1, b.m);
                            let a1 = self.apply(Dir::Horizontal, false, j, b, c);
                            let a1 = self.apply(Dir::Horizontal, false, i, up, a1);
                            let a2 = self.apply(Dir::Horizontal, false, i, b, c);
                            let a2 = self.apply(Dir::Horizontal, false, j + 1, up, a2);
                            if a1 != a2 {
                                return Err(Error::InvalidStructure(format!(
                                    "h-degeneracy identity fails at {b} cell {}",
                                    list[c]
                                )));
                            }
                        }
                    }
                }
                if b.m + 2 <= self.truncation.m {
                    for j in 0..=b.m {
                        for i in 0..=j {
                            let up = Bidegree::new(b.n, b.m + 1);
                            let a1 = self.apply(Dir::Vertical, false, j, b, c);
                            let a1 = self.apply(Dir::Vertical, false, i, up, a1);
                            let a2 = self.apply(Dir::Vertical, false, i, b, c);
                            let a2 = self.apply(Dir::Vertical, false, j + 1, up, a2);
                            if a1 != a2 {
                                return Err(Error::InvalidStructure(format!(
                                    "v-degeneracy identity fails at {b} cell {}",
                                    list[c]
                                )));
                            }
                        }
                    }
                }
                // mixed d_i s_j identities, horizontally
                if b.n + 1 <= self.truncation.n {
                    let up = Bidegree::new(b.n + 1, b.m);
                    for j in 0..=b.n {
                        for i in 0..=b.n + 1 {
                            let s = self.apply(Dir::Horizontal, false, j, b, c);
                            let lhs = self.apply(Dir::Horizontal, true, i, up, s);
                            let rhs = if i == j || i == j + 1 {
                                c
                            } else if i < j {
                                let d = self.apply(Dir::Horizontal, true, i, b, c);
                                self.apply(Dir::Horizontal, false, j - 1, Bidegree::new(b.n - 1, b.m), d)
                            } else {
                                let d = self.apply(Dir::Horizontal, true, i - 1, b, c);
                                self.apply(Dir::Horizontal, false, j, Bidegree::new(b.n - 1, b.m), d)
                            };
                            if lhs != rhs {
                                return Err(Error::InvalidStructure(format!(
                                    "h mixed identity fails at {b} cell {} (i={i}, j={j})",
                                    list[c]
                                )));
                            }
                        }
                    }
                }
                if b.m + 1 <= self.truncation.m {
                    let up = Bidegree::new(b.n, b.m + 1);
                    for j in 0..=b.m {
                        for i in 0..=b.m + 1 {
                            let s = self.apply(Dir::Vertical, false, j, b, c);
                            let lhs = self.apply(Dir::Vertical, true, i, up, s);
                            let rhs = if i == j || i == j + 1 {
                                c
                            } else if i < j {
                                let d = self.apply(Dir::Vertical, true, i, b, c);
                                self.apply(Dir::Vertical, false, j - 1, Bidegree::new(b.n, b.m - 1), d)
                            } else {
                                let d = self.apply(Dir::Vertical, true, i - 1, b, c);
                                self.apply(Dir::Vertical, false, j, Bidegree::new(b.n, b.m - 1), d)
                            };
                            if lhs != rhs {
                                return Err(Error::InvalidStructure(format!(
                                    "v mixed identity fails at {b} cell {} (i={i}, j={j})",
                                    list[c]
                                )));
                            }
                        }
                    }
                }
                // cross commutation: every horizontal op against every vertical op
                let h_ops: Vec<(bool, usize)> = {
                    let mut v = Vec::new();
                    if b.n >= 1 {
                        v.extend((0..=b.n).map(|i| (true, i)));
                    }
                    if b.n < self.truncation.n {
                        v.extend((0..=b.n).map(|i| (false, i)));
                    }
                    v
                };
                let v_ops: Vec<(bool, usize)> = {
                    let mut v = Vec::new();
                    if b.m >= 1 {
                        v.extend((0..=b.m).map(|j| (true, j)));
                    }
                    if b.m < self.truncation.m {
                        v.extend((0..=b.m).map(|j| (false, j)));
                    }
                    v
                };
                for &(hf, i) in &h_ops {
                    for &(vf, j) in &v_ops {
                        let via_h = self.apply(Dir::Horizontal, hf, i, b, c);
                        let bh = self.op_target(Dir::Horizontal, hf, b);
                        let via_hv = self.apply(Dir::Vertical, vf, j, bh, via_h);
                        let via_v = self.apply(Dir::Vertical, vf, j, b, c);
                        let bv = self.op_target(Dir::Vertical, vf, b);
                        let via_vh = self.apply(Dir::Horizontal, hf, i, bv, via_v);
                        if via_hv != via_vh {
                            return Err(Error::InvalidStructure(format!(
                                "cross commutation fails at {b} cell {}",
                                list[c]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// All bidegrees `<=` the truncation, in lexicographic order.
pub fn all_bidegrees(truncation: Bidegree) -> Vec<Bidegree> {
    let mut out = Vec::new();
    for n in 0..=truncation.n {
        for m in 0..=truncation.m {
            out.push(Bidegree::new(n, m));
        }
    }
    out
}
