//! Maps of bisimplicial sets, brute-force hom-set enumeration, the Segal
//! condition, and unique-lifting checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::build::op_target;
use super::{Bidegree, Dir, FinBisimplicialSet};

/// A levelwise function commuting with all four families of structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisimplicialMap {
    source: Arc<FinBisimplicialSet>,
    target: Arc<FinBisimplicialSet>,
    components: BTreeMap<Bidegree, Vec<usize>>,
}

impl BisimplicialMap {
    pub fn new_unchecked(
        source: impl Into<Arc<FinBisimplicialSet>>,
        target: impl Into<Arc<FinBisimplicialSet>>,
        components: BTreeMap<Bidegree, Vec<usize>>,
    ) -> Self {
        BisimplicialMap { source: source.into(), target: target.into(), components }
    }

    pub fn new(
        source: impl Into<Arc<FinBisimplicialSet>>,
        target: impl Into<Arc<FinBisimplicialSet>>,
        components: BTreeMap<Bidegree, Vec<usize>>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(source, target, components);
        m.verify()?;
        Ok(m)
    }

    pub fn identity(x: impl Into<Arc<FinBisimplicialSet>>) -> Self {
        let x = x.into();
        let comps = x.levels().map(|(lv, list)| (lv, (0..list.len()).collect())).collect();
        BisimplicialMap { source: x.clone(), target: x, components: comps }
    }

    pub fn source(&self) -> &FinBisimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &FinBisimplicialSet {
        &self.target
    }

    pub fn source_arc(&self) -> Arc<FinBisimplicialSet> {
        self.source.clone()
    }

    pub fn target_arc(&self) -> Arc<FinBisimplicialSet> {
        self.target.clone()
    }

    pub fn component(&self, level: Bidegree, c: usize) -> usize {
        self.components[&level][c]
    }

    pub fn components(&self) -> &BTreeMap<Bidegree, Vec<usize>> {
        &self.components
    }

    /// Check totality and naturality against the four generating families.
    pub fn verify(&self) -> Result<()> {
        if self.source.truncation() != self.target.truncation() {
            return Err(Error::TruncationMismatch(
                self.source.truncation(),
                self.target.truncation(),
            ));
        }
        for (lv, list) in self.source.levels() {
            let comp = self
                .components
                .get(&lv)
                .ok_or_else(|| Error::InvalidStructure(format!("missing component at {lv}")))?;
            if comp.len() != list.len() {
                return Err(Error::InvalidStructure(format!("component size mismatch at {lv}")));
            }
            for &v in comp {
                if v >= self.target.level_size(lv) {
                    return Err(Error::InvalidStructure(format!("component out of range at {lv}")));
                }
            }
            for c in 0..list.len() {
                for (dir, face, i) in self.source.ops_from(lv) {
                    let tb = op_target(dir, face, lv);
                    let lhs = self.components[&tb][self.source.apply(dir, face, i, lv, c)];
                    let rhs = self.target.apply(dir, face, i, lv, comp[c]);
                    if lhs != rhs {
                        return Err(Error::InvalidStructure(format!(
                            "naturality fails at {lv} cell {} for {:?}{}{}",
                            list[c],
                            dir,
                            if face { "d" } else { "s" },
                            i
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Is every component injective?
    pub fn is_mono(&self) -> bool {
        self.components.values().all(|v| {
            let mut seen = std::collections::BTreeSet::new();
            v.iter().all(|&c| seen.insert(c))
        })
    }

    /// Is every component bijective?
    pub fn is_iso(&self) -> bool {
        self.source.levels().all(|(lv, list)| {
            let comp = &self.components[&lv];
            let n = self.target.level_size(lv);
            if list.len() != n {
                return false;
            }
            let mut seen = vec![false; n];
            comp.iter().all(|&c| {
                if seen[c] {
                    false
                } else {
                    seen[c] = true;
                    true
                }
            })
        })
    }

    /// `other` after `self` (self: A -> B, other: B -> C).
    pub fn then(&self, other: &BisimplicialMap) -> Result<BisimplicialMap> {
        if self.target != other.source {
            return Err(Error::InvalidStructure("composition endpoint mismatch".into()));
        }
        let comps = self
            .components
            .iter()
            .map(|(lv, v)| (*lv, v.iter().map(|&c| other.components[lv][c]).collect()))
            .collect();
        Ok(BisimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            components: comps,
        })
    }
}

/// Counter for candidate assignments, with a hard cap.
#[derive(Debug)]
pub struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    pub const DEFAULT_CAP: u64 = 10_000_000;

    pub fn new(cap: u64) -> Self {
        Budget { used: 0, cap }
    }

    pub fn default_cap() -> Self {
        Self::new(Self::DEFAULT_CAP)
    }

    pub fn spend(&mut self, amount: u64) -> Result<()> {
        self.used += amount;
        if self.used > self.cap {
            Err(Error::BudgetExceeded { budget: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Enumerate the complete hom-set `X -> Y` at the (shared) truncation, in a
/// deterministic order.
///
/// Search plan: nondegenerate cells of `X` are assigned in decreasing total
/// dimension; every assignment is propagated through faces and degeneracies
/// both ways, so degenerate cells and shared faces are forced. The result
/// order is the DFS order with target cells tried in index order.
pub fn hom_set(
    x: &FinBisimplicialSet,
    y: &FinBisimplicialSet,
    budget: &mut Budget,
) -> Result<Vec<BisimplicialMap>> {
    hom_set_seeded(x, y, &[], budget)
}

/// As [`hom_set`], with some cells pre-assigned (`(level, source cell, target cell)`).
pub fn hom_set_seeded(
    x: &FinBisimplicialSet,
    y: &FinBisimplicialSet,
    seeds: &[(Bidegree, usize, usize)],
    budget: &mut Budget,
) -> Result<Vec<BisimplicialMap>> {
    if x.truncation() != y.truncation() {
        return Err(Error::TruncationMismatch(x.truncation(), y.truncation()));
    }
    let mut order: Vec<(Bidegree, usize)> = x.nondegenerate_cells();
    order.sort_by_key(|(b, c)| (std::cmp::Reverse(b.n + b.m), *b, *c));

    let mut state: BTreeMap<Bidegree, Vec<Option<usize>>> =
        x.levels().map(|(lv, list)| (lv, vec![None; list.len()])).collect();

    // seed assignments with propagation
    let mut seed_trail = Vec::new();
    for &(lv, c, v) in seeds {
        if !propagate(x, y, &mut state, lv, c, v, &mut seed_trail) {
            return Ok(Vec::new());
        }
    }

    let mut results = Vec::new();
    dfs(x, y, &order, 0, &mut state, &mut results, budget)?;

    let src = Arc::new(x.clone());
    let tgt = Arc::new(y.clone());
    let maps = results
        .into_iter()
        .map(|assign| BisimplicialMap {
            source: src.clone(),
            target: tgt.clone(),
            components: assign,
        })
        .collect();
    Ok(maps)
}

fn dfs(
    x: &FinBisimplicialSet,
    y: &FinBisimplicialSet,
    order: &[(Bidegree, usize)],
    pos: usize,
    state: &mut BTreeMap<Bidegree, Vec<Option<usize>>>,
    results: &mut Vec<BTreeMap<Bidegree, Vec<usize>>>,
    budget: &mut Budget,
) -> Result<()> {
    // find next unassigned cell in order
    let mut at = pos;
    while at < order.len() {
        let (lv, c) = order[at];
        if state[&lv][c].is_none() {
            break;
        }
        at += 1;
    }
    if at == order.len() {
        // complete: everything reachable is assigned; any still-unassigned cell
        // would be a degenerate cell whose core is assigned, which propagation
        // has covered. Double-check totality.
        let mut out = BTreeMap::new();
        for (lv, v) in state.iter() {
            let mut w = Vec::with_capacity(v.len());
            for o in v {
                match o {
                    Some(t) => w.push(*t),
                    None => return Ok(()), // unreachable component: not a valid total map
                }
            }
            out.insert(*lv, w);
        }
        results.push(out);
        return Ok(());
    }
    let (lv, c) = order[at];
    for cand in 0..y.level_size(lv) {
        budget.spend(1)?;
        let mut trail = Vec::new();
        if propagate(x, y, state, lv, c, cand, &mut trail) {
            dfs(x, y, order, at + 1, state, results, budget)?;
        }
        for (blv, bc) in trail {
            state.get_mut(&blv).unwrap()[bc] = None;
        }
    }
    Ok(())
}

/// Assign `x`-cell `(lv, c) -> v` and propagate through all structure maps.
/// Records every newly assigned cell in `trail`; returns false on conflict
/// (the trail still lists what was set, so the caller can roll back).
fn propagate(
    x: &FinBisimplicialSet,
    y: &FinBisimplicialSet,
    state: &mut BTreeMap<Bidegree, Vec<Option<usize>>>,
    lv: Bidegree,
    c: usize,
    v: usize,
    trail: &mut Vec<(Bidegree, usize)>,
) -> bool {
    let mut queue = vec![(lv, c, v)];
    while let Some((b, cell, val)) = queue.pop() {
        match state[&b][cell] {
            Some(cur) => {
                if cur != val {
                    return false;
                }
                continue;
            }
            None => {
                state.get_mut(&b).unwrap()[cell] = Some(val);
                trail.push((b, cell));
            }
        }
        for (dir, face, i) in x.ops_from(b) {
            let tb = op_target(dir, face, b);
            let nc = x.apply(dir, face, i, b, cell);
            let nv = y.apply(dir, face, i, b, val);
            queue.push((tb, nc, nv));
        }
    }
    true
}

/// The horizontal/vertical Segal (spine bijection) conditions at every
/// in-range level of the truncation.
pub fn is_segal(x: &FinBisimplicialSet) -> bool {
    let t = x.truncation();
    for n in 2..=t.n {
        for m in 0..=t.m {
            if !spine_bijective(x, Bidegree::new(n, m), Dir::Horizontal) {
                return false;
            }
        }
    }
    for m in 2..=t.m {
        for n in 0..=t.n {
            if !spine_bijective(x, Bidegree::new(n, m), Dir::Vertical) {
                return false;
            }
        }
    }
    true
}

fn spine_bijective(x: &FinBisimplicialSet, b: Bidegree, dir: Dir) -> bool {
    let (steps, edge_level, joint_level) = match dir {
        Dir::Horizontal => (b.n, Bidegree::new(1, b.m), Bidegree::new(0, b.m)),
        Dir::Vertical => (b.m, Bidegree::new(b.n, 1), Bidegree::new(b.n, 0)),
    };
    // spine tuple of each cell
    let idn: Vec<usize> = (0..=b.n).collect();
    let idm: Vec<usize> = (0..=b.m).collect();
    let mut tuples: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for c in 0..x.level_size(b) {
        let mut tup = Vec::with_capacity(steps);
        for i in 0..steps {
            let (blv, e) = match dir {
                Dir::Horizontal => x.act(b, c, &[i, i + 1], &idm),
                Dir::Vertical => x.act(b, c, &idn, &[i, i + 1]),
            };
            debug_assert_eq!(blv, edge_level);
            tup.push(e);
        }
        if !tuples.insert(tup) {
            return false; // not injective
        }
    }
    // count compatible tuples: DP over matching endpoints
    let ends: Vec<(usize, usize)> = (0..x.level_size(edge_level))
        .map(|e| {
            let (l0, s) = match dir {
                Dir::Horizontal => x.act(edge_level, e, &[0], &idm),
                Dir::Vertical => x.act(edge_level, e, &idn, &[0]),
            };
            let (l1, t) = match dir {
                Dir::Horizontal => x.act(edge_level, e, &[1], &idm),
                Dir::Vertical => x.act(edge_level, e, &idn, &[1]),
            };
            debug_assert_eq!(l0, joint_level);
            debug_assert_eq!(l1, joint_level);
            (s, t)
        })
        .collect();
    let joints = x.level_size(joint_level);
    // dp[j] = number of length-k spines ending at joint j
    let mut dp: Vec<u64> = vec![0; joints];
    let mut first = true;
    for _ in 0..steps {
        let mut next = vec![0u64; joints];
        for &(s, t) in &ends {
            let ways = if first { 1 } else { dp[s] };
            next[t] += ways;
        }
        dp = next;
        first = false;
    }
    let total: u64 = dp.iter().sum();
    total == x.level_size(b) as u64
}

/// Result of a unique-lifting check.
#[derive(Debug, Clone)]
pub enum LiftReport {
    Unique,
    /// A map from the source of `i` with no extension, or with several.
    Failure { map_index: usize, extensions: usize },
}

/// Does every map `A -> X` extend uniquely along `i : A -> B`?
/// `i` must be a levelwise monomorphism.
pub fn has_unique_lift(
    i: &BisimplicialMap,
    x: &FinBisimplicialSet,
    budget: &mut Budget,
) -> Result<(bool, LiftReport)> {
    if !i.is_mono() {
        return Err(Error::InvalidStructure("lifting test requires a monomorphism".into()));
    }
    let from_b = hom_set(i.target(), x, budget)?;
    let from_a = hom_set(i.source(), x, budget)?;
    // count fibers of restriction
    let mut fiber: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for g in &from_b {
        let key = restriction_key(i, g);
        *fiber.entry(key).or_insert(0) += 1;
    }
    for (idx, f) in from_a.iter().enumerate() {
        let key: Vec<usize> = f
            .components()
            .iter()
            .flat_map(|(_, v)| v.iter().copied())
            .collect();
        let count = fiber.get(&key).copied().unwrap_or(0);
        if count != 1 {
            return Ok((false, LiftReport::Failure { map_index: idx, extensions: count }));
        }
    }
    // also have to rule out surplus maps B -> X restricting to something not
    // in hom(A, X): impossible since restriction of a valid map is valid.
    Ok((true, LiftReport::Unique))
}

fn restriction_key(i: &BisimplicialMap, g: &BisimplicialMap) -> Vec<usize> {
    let mut key = Vec::new();
    for (lv, _) in i.source().levels() {
        for c in 0..i.source().level_size(lv) {
            key.push(g.component(lv, i.component(lv, c)));
        }
    }
    key
}
