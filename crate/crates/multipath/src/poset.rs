//! Enumeration of the path poset: all multipaths of a digraph ordered by
//! inclusion, with levels and covering relations.
//!
//! Multipath ids are assigned in (level, bitmask) lexicographic order, so all
//! downstream matrices are deterministic. Covers are listed by (lower id,
//! added edge).

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::digraph::{Digraph, EdgeSet};
use crate::error::Error;
use crate::Result;

/// Default cap on the number of multipaths (the poset can reach 2^|E|).
pub const DEFAULT_SIZE_CAP: usize = 1 << 24;

/// One multipath of a digraph, with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipath {
    pub edge_set: EdgeSet,
    pub level: usize,
    /// Connected components as vertex sets, ordered by minimal vertex.
    pub component_partition: Vec<Vec<usize>>,
}

/// A covering relation: `upper = lower ∪ {added_edge}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub added_edge: usize,
}

/// The path poset of a digraph.
#[derive(Debug, Clone)]
pub struct PathPoset {
    graph: Digraph,
    multipaths: Vec<EdgeSet>,
    /// multipaths[level_offsets[k]..level_offsets[k+1]] have level k.
    level_offsets: Vec<usize>,
    covers: Vec<Cover>,
    index: HashMap<u128, usize>,
}

/// Enumerates the path poset of `g` under the default size cap.
pub fn enumerate_path_poset(g: &Digraph) -> Result<PathPoset> {
    enumerate_path_poset_with_cap(g, DEFAULT_SIZE_CAP)
}

/// Enumerates the path poset, failing fast once `cap` multipaths are exceeded.
///
/// The search is breadth-first by level: each level-k multipath is extended by
/// every absent edge and kept when the extension is again a multipath. This
/// yields every cover exactly once.
pub fn enumerate_path_poset_with_cap(g: &Digraph, cap: usize) -> Result<PathPoset> {
    let edge_count = g.edge_count();
    let mut multipaths: Vec<EdgeSet> = vec![EdgeSet::EMPTY];
    let mut level_offsets = vec![0usize, 1];
    let mut covers = Vec::new();
    let mut index = HashMap::new();
    index.insert(EdgeSet::EMPTY.0, 0);

    let mut frontier_start = 0usize;
    loop {
        let frontier_end = multipaths.len();
        let mut next: BTreeSet<EdgeSet> = BTreeSet::new();
        for id in frontier_start..frontier_end {
            let h = multipaths[id];
            for e in 0..edge_count {
                if !h.contains(e) && g.is_multipath(h.insert(e)) {
                    next.insert(h.insert(e));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if multipaths.len() + next.len() > cap {
            return Err(Error::SizeLimitExceeded { cap });
        }
        for &s in &next {
            index.insert(s.0, multipaths.len());
            multipaths.push(s);
        }
        for id in frontier_start..frontier_end {
            let h = multipaths[id];
            for e in 0..edge_count {
                let ext = h.insert(e);
                if !h.contains(e) {
                    if let Some(&upper) = index.get(&ext.0) {
                        covers.push(Cover { lower: id, upper, added_edge: e });
                    }
                }
            }
        }
        level_offsets.push(multipaths.len());
        frontier_start = frontier_end;
    }

    Ok(PathPoset { graph: g.clone(), multipaths, level_offsets, covers, index })
}

impl PathPoset {
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.multipaths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multipaths.is_empty()
    }

    pub fn edge_set(&self, id: usize) -> EdgeSet {
        self.multipaths[id]
    }

    pub fn edge_sets(&self) -> &[EdgeSet] {
        &self.multipaths
    }

    pub fn level(&self, id: usize) -> usize {
        self.multipaths[id].len()
    }

    /// The highest level present.
    pub fn max_level(&self) -> usize {
        self.level_offsets.len() - 2
    }

    /// Ids of the multipaths of level k, in bitmask order.
    pub fn level_range(&self, k: usize) -> std::ops::Range<usize> {
        if k + 1 >= self.level_offsets.len() {
            return 0..0;
        }
        self.level_offsets[k]..self.level_offsets[k + 1]
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn id_of(&self, edge_set: EdgeSet) -> Option<usize> {
        self.index.get(&edge_set.0).copied()
    }

    pub fn multipath(&self, id: usize) -> Multipath {
        let edge_set = self.multipaths[id];
        let component_partition = self.graph.components_of(edge_set);
        debug_assert_eq!(
            component_partition.len(),
            self.graph.vertex_count() - edge_set.len(),
            "each edge of a multipath merges two components"
        );
        Multipath { edge_set, level: edge_set.len(), component_partition }
    }

    /// counts[k] = number of multipaths of level k.
    pub fn level_counts(&self) -> Vec<usize> {
        (0..=self.max_level()).map(|k| self.level_range(k).len()).collect()
    }

    /// Assembles a poset from raw parts. No axioms are enforced; feed the
    /// result to [`verify_poset_axioms`] to diagnose hand-built posets.
    pub fn from_raw(graph: Digraph, mut multipaths: Vec<EdgeSet>, covers: Vec<Cover>) -> PathPoset {
        multipaths.sort_by_key(|s| (s.len(), s.0));
        let max_level = multipaths.last().map_or(0, |s| s.len());
        let mut level_offsets = vec![0usize];
        for k in 0..=max_level {
            let prev = *level_offsets.last().unwrap();
            let count = multipaths.iter().filter(|s| s.len() == k).count();
            level_offsets.push(prev + count);
        }
        let index = multipaths.iter().enumerate().map(|(i, s)| (s.0, i)).collect();
        PathPoset { graph, multipaths, level_offsets, covers, index }
    }
}

/// Outcome of the poset axioms check.
#[derive(Debug, Clone, Default)]
pub struct PosetReport {
    /// (multipath id, deleted edge) pairs whose subset is missing.
    pub downward_violations: Vec<(usize, usize)>,
    /// Chains x ⋖ y ⋖ z whose square does not close uniquely, as (x, y, z).
    pub squared_violations: Vec<(usize, usize, usize)>,
}

impl PosetReport {
    pub fn is_clean(&self) -> bool {
        self.downward_violations.is_empty() && self.squared_violations.is_empty()
    }
}

/// Checks downward-closedness and the squared property on the stored data.
pub fn verify_poset_axioms(p: &PathPoset) -> PosetReport {
    let mut report = PosetReport::default();
    for id in 0..p.len() {
        let s = p.edge_set(id);
        for e in s.iter() {
            if p.id_of(s.remove(e)).is_none() {
                report.downward_violations.push((id, e));
            }
        }
    }

    let mut uppers: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut is_cover: BTreeSet<(usize, usize)> = BTreeSet::new();
    for c in p.covers() {
        uppers.entry(c.lower).or_default().push(c.upper);
        is_cover.insert((c.lower, c.upper));
    }
    for c in p.covers() {
        let (x, y) = (c.lower, c.upper);
        for &z in uppers.get(&y).map_or(&[][..], |v| &v[..]) {
            let alternatives = uppers
                .get(&x)
                .map_or(0, |ys| ys.iter().filter(|&&y2| y2 != y && is_cover.contains(&(y2, z))).count());
            if alternatives != 1 {
                report.squared_violations.push((x, y, z));
            }
        }
    }
    report
}

/// DOT rendering of the Hasse diagram: one node per multipath, one arc per
/// cover, lower to upper.
pub fn hasse_export(p: &PathPoset) -> String {
    let mut out = String::from("digraph Hasse {\n  rankdir=BT;\n");
    for id in 0..p.len() {
        let label = if p.edge_set(id).is_empty() {
            "{}".to_string()
        } else {
            format!("{:?}", p.edge_set(id))
        };
        let _ = writeln!(out, "  m{id} [label=\"{label}\"];");
    }
    for c in p.covers() {
        let _ = writeln!(out, "  m{} -> m{};", c.lower, c.upper);
    }
    out.push_str("}\n");
    out
}

/// Flat text dump: one multipath bitmask per line (edge 0 leftmost), grouped
/// by level.
pub fn flat_dump(p: &PathPoset) -> String {
    let width = p.graph().edge_count();
    let mut out = String::new();
    for k in 0..=p.max_level() {
        let _ = writeln!(out, "# level {k}");
        for id in p.level_range(k) {
            let s = p.edge_set(id);
            let line: String = (0..width).map(|e| if s.contains(e) { '1' } else { '0' }).collect();
            let _ = writeln!(out, "{line}");
        }
    }
    out
}
