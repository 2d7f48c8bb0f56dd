//! Finite directed (multi)graphs, named families, and graph-level operations.
//!
//! Vertices are `0..vertex_count`; the vertex order doubles as the
//! well-ordering used to sort connected components. The edge list order is
//! stable and observable: it induces the canonical sign assignment, so two
//! graphs with the same edges in a different order are distinct values even
//! though all cohomological outputs agree.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Maximum number of edges representable in an [`EdgeSet`].
pub const MAX_EDGES: usize = 128;

/// A set of edge indices, packed into a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> EdgeSet {
        let mut bits = 0u128;
        for i in indices {
            assert!(i < MAX_EDGES);
            bits |= 1 << i;
        }
        EdgeSet(bits)
    }

    pub fn full(len: usize) -> EdgeSet {
        assert!(len <= MAX_EDGES);
        if len == MAX_EDGES {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << len) - 1)
        }
    }

    pub fn contains(self, edge: usize) -> bool {
        edge < MAX_EDGES && self.0 >> edge & 1 == 1
    }

    pub fn insert(self, edge: usize) -> EdgeSet {
        EdgeSet(self.0 | 1 << edge)
    }

    pub fn remove(self, edge: usize) -> EdgeSet {
        EdgeSet(self.0 & !(1 << edge))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Number of set bits strictly below `edge`.
    pub fn count_below(self, edge: usize) -> usize {
        let mask = if edge == 0 { 0 } else { (1u128 << edge) - 1 };
        (self.0 & mask).count_ones() as usize
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{i}")?;
        }
        write!(f, "}}")
    }
}

/// Whether duplicate directed edges are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum GraphMode {
    #[default]
    Simple,
    Multigraph,
}

/// A finite directed (multi)graph without self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    mode: GraphMode,
}

impl Digraph {
    /// Validates and builds a digraph. The edge order is preserved.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, mode: GraphMode) -> Result<Digraph> {
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges { edges: edges.len(), max: MAX_EDGES });
        }
        let mut seen = HashSet::new();
        for (i, &(s, t)) in edges.iter().enumerate() {
            if s >= vertex_count || t >= vertex_count {
                return Err(Error::VertexOutOfRange { edge: i });
            }
            if s == t {
                return Err(Error::SelfLoop { edge: i });
            }
            if mode == GraphMode::Simple && !seen.insert((s, t)) {
                return Err(Error::DuplicateEdge { edge: i });
            }
        }
        Ok(Digraph { vertex_count, edges, mode })
    }

    pub fn simple(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Digraph> {
        Digraph::new(vertex_count, edges, GraphMode::Simple)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn source(&self, i: usize) -> usize {
        self.edges[i].0
    }

    pub fn target(&self, i: usize) -> usize {
        self.edges[i].1
    }

    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    /// Edges incident to `v`, in edge order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v).collect()
    }

    pub fn in_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].1 == v).collect()
    }

    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].0 == v).collect()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.incident_edges(v).len()
    }

    /// Reverses every edge; vertex and edge order are preserved.
    pub fn reverse_orientation(&self) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(s, t)| (t, s)).collect(),
            mode: self.mode,
        }
    }

    /// Disjoint union; the second graph's vertices are shifted.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(s, t)| (s + shift, t + shift)));
        let mode = if self.mode == GraphMode::Multigraph || other.mode == GraphMode::Multigraph {
            GraphMode::Multigraph
        } else {
            GraphMode::Simple
        };
        Digraph::new(self.vertex_count + other.vertex_count, edges, mode)
    }

    /// The spanning subgraph keeping exactly the edges in `keep`.
    /// Edge order is inherited from the ambient graph.
    pub fn spanning_subgraph(&self, keep: EdgeSet) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            edges: keep.iter().map(|i| self.edges[i]).collect(),
            mode: self.mode,
        }
    }

    /// Relabels vertices by `perm` (vertex v becomes perm[v]); edge order kept.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.vertex_count);
        Digraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(s, t)| (perm[s], perm[t])).collect(),
            mode: self.mode,
        }
    }

    /// Reorders the edge list by `perm` (new position i holds old edge perm[i]).
    pub fn permute_edges(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.edges.len());
        Digraph {
            vertex_count: self.vertex_count,
            edges: perm.iter().map(|&i| self.edges[i]).collect(),
            mode: self.mode,
        }
    }

    /// Tests whether the spanning subgraph on `edge_set` is a multipath:
    /// every vertex has in-degree and out-degree at most one and there is no
    /// directed cycle.
    pub fn is_multipath(&self, edge_set: EdgeSet) -> bool {
        let mut out_edge = vec![usize::MAX; self.vertex_count];
        let mut in_deg = vec![0u8; self.vertex_count];
        let mut out_deg = vec![0u8; self.vertex_count];
        for i in edge_set.iter() {
            let (s, t) = self.edges[i];
            out_deg[s] += 1;
            in_deg[t] += 1;
            if out_deg[s] > 1 || in_deg[t] > 1 {
                return false;
            }
            out_edge[s] = i;
        }
        // With in/out degrees <= 1 the components are chains or cycles. Walk
        // forward from every source; edges left unvisited lie on cycles.
        let mut visited = 0usize;
        for v in 0..self.vertex_count {
            if in_deg[v] == 0 {
                let mut cur = v;
                while out_edge[cur] != usize::MAX {
                    visited += 1;
                    cur = self.edges[out_edge[cur]].1;
                }
            }
        }
        visited == edge_set.len()
    }

    /// True iff `edge` lies on a coherently oriented directed cycle.
    pub fn coherent_cycle_through(&self, edge: usize) -> bool {
        let (s, t) = self.edges[edge];
        // A directed path t ~> s closes up with `edge` into a coherent cycle.
        let mut stack = vec![t];
        let mut seen = vec![false; self.vertex_count];
        seen[t] = true;
        while let Some(v) = stack.pop() {
            if v == s {
                return true;
            }
            for &(a, b) in &self.edges {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }

    /// Connected components of the spanning subgraph on `edge_set`,
    /// each sorted, listed in order of minimal vertex.
    pub fn components_of(&self, edge_set: EdgeSet) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            let mut r = v;
            while parent[r] != r {
                r = parent[r];
            }
            let mut cur = v;
            while parent[cur] != r {
                let next = parent[cur];
                parent[cur] = r;
                cur = next;
            }
            r
        }
        for i in edge_set.iter() {
            let (s, t) = self.edges[i];
            let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
            if rs != rt {
                let (lo, hi) = (rs.min(rt), rs.max(rt));
                parent[hi] = lo;
            }
        }
        let mut comps: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            comps[r].push(v);
        }
        comps.retain(|c| !c.is_empty());
        comps
    }

    /// Connected components of the whole graph, as vertex sets in order of
    /// minimal vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_of(EdgeSet::full(self.edges.len()))
    }

    /// DOT rendering of the digraph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.vertex_count {
            out.push_str(&format!("  v{v};\n"));
        }
        for (i, &(s, t)) in self.edges.iter().enumerate() {
            out.push_str(&format!("  v{s} -> v{t} [label=\"e{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Named graph families with canonical vertex labels and edge order
/// (edges sorted by source index, ties by target index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// Coherently oriented linear graph with n edges.
    Linear(usize),
    /// Coherently oriented polygon with n+1 edges; requires n >= 1.
    Polygon(usize),
    /// Alternating linear graph on n+1 vertices (orientation word RLRL...).
    Alternating(usize),
    /// Dandelion: n pendant edges into a centre, m pendant edges out of it.
    Dandelion(usize, usize),
    /// n sources feeding v0, middle edge (v0,v1), m sinks fed by v1.
    HGraph(usize, usize),
    /// Sink with n edges (= Dandelion(n, 0) reversed).
    SinkStar(usize),
    /// Source with n edges.
    SourceStar(usize),
    /// Wedge family: betti[n+1] = k.
    WedgeFamily(usize, usize),
}

/// Builds the canonical representative of a named family.
pub fn family(spec: GraphFamily) -> Result<Digraph> {
    match spec {
        GraphFamily::Linear(n) => {
            Digraph::simple(n + 1, (0..n).map(|i| (i, i + 1)).collect())
        }
        GraphFamily::Polygon(n) => {
            if n < 1 {
                return Err(Error::BadParameters("polygon needs n >= 1".into()));
            }
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
            edges.push((n, 0));
            Digraph::simple(n + 1, edges)
        }
        GraphFamily::Alternating(n) => {
            // Position i carries (v_{i-1}, v_i) for odd i and (v_i, v_{i-1})
            // for even i, so the orientation word reads RLRL...
            let edges = (1..=n)
                .map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) })
                .collect();
            Digraph::simple(n + 1, edges)
        }
        GraphFamily::Dandelion(n, m) => {
            // w_1..w_n are 0..n, the centre v_0 is n, x_1..x_m are n+1..n+m.
            let centre = n;
            let mut edges: Vec<(usize, usize)> = (0..n).map(|w| (w, centre)).collect();
            edges.extend((0..m).map(|x| (centre, n + 1 + x)));
            Digraph::simple(n + m + 1, edges)
        }
        GraphFamily::HGraph(n, m) => {
            // w_1..w_n are 0..n, v_0 is n, v_1 is n+1, x_1..x_m follow.
            let (v0, v1) = (n, n + 1);
            let mut edges: Vec<(usize, usize)> = (0..n).map(|w| (w, v0)).collect();
            edges.push((v0, v1));
            edges.extend((0..m).map(|x| (v1, n + 2 + x)));
            Digraph::simple(n + m + 2, edges)
        }
        GraphFamily::SinkStar(n) => family(GraphFamily::Dandelion(n, 0)),
        GraphFamily::SourceStar(n) => family(GraphFamily::Dandelion(0, n)),
        GraphFamily::WedgeFamily(k, n) => crate::structure::wedge_family(k, n),
    }
}

/// A gluing datum: a common graph with regular embeddings into two graphs.
#[derive(Debug, Clone)]
pub struct GluingMap {
    pub common: Digraph,
    /// Vertex map common -> g1.
    pub left_embedding: Vec<usize>,
    /// Vertex map common -> g2.
    pub right_embedding: Vec<usize>,
}

impl GluingMap {
    fn check_side(&self, side: &[usize], g: &Digraph, name: &str) -> Result<()> {
        if side.len() != self.common.vertex_count() {
            return Err(Error::NotRegularMorphism(format!(
                "{name} embedding maps {} vertices, expected {}",
                side.len(),
                self.common.vertex_count()
            )));
        }
        let mut seen = HashSet::new();
        for (v, &img) in side.iter().enumerate() {
            if img >= g.vertex_count() {
                return Err(Error::NotRegularMorphism(format!(
                    "{name} embedding sends vertex {v} out of range"
                )));
            }
            if !seen.insert(img) {
                return Err(Error::NotRegularMorphism(format!("{name} embedding is not injective")));
            }
        }
        for &(s, t) in self.common.edges() {
            if !g.edges().contains(&(side[s], side[t])) {
                return Err(Error::NotRegularMorphism(format!(
                    "{name} embedding does not preserve edge ({s},{t})"
                )));
            }
        }
        Ok(())
    }

    pub fn validate(&self, g1: &Digraph, g2: &Digraph) -> Result<()> {
        self.check_side(&self.left_embedding, g1, "left")?;
        self.check_side(&self.right_embedding, g2, "right")
    }

    /// Identity-embedded gluing of two spanning subgraphs of a common ambient
    /// graph: all three share the same vertex numbering.
    pub fn spanning(common: Digraph, vertex_count: usize) -> GluingMap {
        debug_assert_eq!(common.vertex_count(), vertex_count);
        let ident: Vec<usize> = (0..vertex_count).collect();
        GluingMap { common, left_embedding: ident.clone(), right_embedding: ident }
    }
}

/// Result of a gluing, together with how the parts sit inside it.
#[derive(Debug, Clone)]
pub struct Glued {
    pub graph: Digraph,
    /// Vertex map g1 -> glued (always the identity on indices).
    pub vertices_from_left: Vec<usize>,
    /// Vertex map g2 -> glued.
    pub vertices_from_right: Vec<usize>,
    /// Edge map g1 -> glued.
    pub edges_from_left: Vec<usize>,
    /// Edge map g2 -> glued.
    pub edges_from_right: Vec<usize>,
}

/// Pushout of `g1` and `g2` along the common graph of `map`.
///
/// Vertices of `g1` keep their indices; unidentified vertices of `g2` follow
/// in order. Edges of `g1` come first, then the edges of `g2` not identified
/// with a common edge.
pub fn glue(g1: &Digraph, g2: &Digraph, map: &GluingMap) -> Result<Digraph> {
    Ok(glue_with_maps(g1, g2, map)?.graph)
}

/// Like [`glue`], but also returns the vertex and edge identifications.
pub fn glue_with_maps(g1: &Digraph, g2: &Digraph, map: &GluingMap) -> Result<Glued> {
    map.validate(g1, g2)?;
    let vertices_from_left: Vec<usize> = (0..g1.vertex_count()).collect();
    let mut vertices_from_right = vec![usize::MAX; g2.vertex_count()];
    for (v, (&l, &r)) in map.left_embedding.iter().zip(&map.right_embedding).enumerate() {
        let _ = v;
        vertices_from_right[r] = l;
    }
    let mut next = g1.vertex_count();
    for img in vertices_from_right.iter_mut() {
        if *img == usize::MAX {
            *img = next;
            next += 1;
        }
    }

    let mut edges = g1.edges().to_vec();
    let edges_from_left: Vec<usize> = (0..g1.edge_count()).collect();

    // Each common edge identifies one g2 copy with one g1 copy. Slots pair a
    // g2-side image with the matching (not yet claimed) g1 edge index.
    let mut slots: Vec<((usize, usize), usize, bool)> = Vec::new();
    let mut claimed_g1 = vec![false; g1.edge_count()];
    for &(s, t) in map.common.edges() {
        let g1_pair = (map.left_embedding[s], map.left_embedding[t]);
        let g2_pair = (map.right_embedding[s], map.right_embedding[t]);
        let g1_edge = (0..g1.edge_count())
            .find(|&i| g1.edge(i) == g1_pair && !claimed_g1[i])
            .expect("validated common edge");
        claimed_g1[g1_edge] = true;
        slots.push((g2_pair, g1_edge, false));
    }

    let mut edges_from_right = Vec::with_capacity(g2.edge_count());
    for &(s, t) in g2.edges() {
        if let Some(slot) = slots.iter_mut().find(|(p, _, used)| *p == (s, t) && !used) {
            slot.2 = true;
            edges_from_right.push(slot.1);
            continue;
        }
        let img = (vertices_from_right[s], vertices_from_right[t]);
        if g1.mode() == GraphMode::Simple && g2.mode() == GraphMode::Simple {
            // Simple digraphs glue with union semantics on edge sets.
            if let Some(existing) = edges.iter().position(|&e| e == img) {
                edges_from_right.push(existing);
                continue;
            }
        }
        edges_from_right.push(edges.len());
        edges.push(img);
    }

    let mode = if g1.mode() == GraphMode::Multigraph || g2.mode() == GraphMode::Multigraph {
        GraphMode::Multigraph
    } else {
        GraphMode::Simple
    };
    let graph = Digraph::new(next, edges, mode)?;
    Ok(Glued { graph, vertices_from_left, vertices_from_right, edges_from_left, edges_from_right })
}

/// On-disk graph description (JSON).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub mode: GraphMode,
}

impl GraphFile {
    pub fn to_digraph(&self) -> Result<Digraph> {
        Digraph::new(self.vertices, self.edges.iter().map(|e| (e[0], e[1])).collect(), self.mode)
    }

    pub fn from_digraph(g: &Digraph) -> GraphFile {
        GraphFile {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(s, t)| [s, t]).collect(),
            mode: g.mode(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(spec: GraphFamily) -> Digraph {
        family(spec).unwrap()
    }

    #[test]
    fn build_validates() {
        let g = Digraph::simple(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);

        assert_eq!(Digraph::simple(2, vec![(0, 0)]), Err(Error::SelfLoop { edge: 0 }));
        assert_eq!(
            Digraph::simple(2, vec![(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge { edge: 1 })
        );
        assert_eq!(Digraph::simple(2, vec![(0, 2)]), Err(Error::VertexOutOfRange { edge: 0 }));
        // The same repeated edge is a valid two-edge quiver.
        let q = Digraph::new(2, vec![(0, 1), (0, 1)], GraphMode::Multigraph).unwrap();
        assert_eq!(q.edge_count(), 2);
    }

    #[test]
    fn families() {
        let a2 = fam(GraphFamily::Alternating(2));
        assert_eq!(a2.vertex_count(), 3);
        assert_eq!(a2.edges(), &[(0, 1), (2, 1)]);

        let d32 = fam(GraphFamily::Dandelion(3, 2));
        assert_eq!(d32.vertex_count(), 6);
        assert_eq!(d32.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (3, 5)]);

        let p2 = fam(GraphFamily::Polygon(2));
        assert_eq!(p2.vertex_count(), 3);
        assert_eq!(p2.edges(), &[(0, 1), (1, 2), (2, 0)]);

        assert!(matches!(family(GraphFamily::Polygon(0)), Err(Error::BadParameters(_))));
    }

    #[test]
    fn reversal() {
        let i2 = fam(GraphFamily::Linear(2));
        let rev = i2.reverse_orientation();
        assert_eq!(rev.edges(), &[(1, 0), (2, 1)]);
        assert_eq!(rev.reverse_orientation(), i2);

        let d23 = fam(GraphFamily::Dandelion(2, 3)).reverse_orientation();
        let d32 = fam(GraphFamily::Dandelion(3, 2));
        assert!(crate::random::are_isomorphic(&d23, &d32));
    }

    #[test]
    fn disjoint_unions() {
        let i1 = fam(GraphFamily::Linear(1));
        let u = i1.disjoint_union(&i1).unwrap();
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn multipath_predicate() {
        let i2 = fam(GraphFamily::Linear(2));
        assert!(i2.is_multipath(EdgeSet::full(2)));

        let p2 = fam(GraphFamily::Polygon(2));
        assert!(!p2.is_multipath(EdgeSet::full(3)));
        assert!(p2.is_multipath(EdgeSet::from_indices([0, 1])));

        let sink = fam(GraphFamily::SinkStar(2));
        assert!(!sink.is_multipath(EdgeSet::full(2)));
    }

    #[test]
    fn coherent_cycles() {
        let p3 = fam(GraphFamily::Polygon(3));
        for e in 0..4 {
            assert!(p3.coherent_cycle_through(e));
        }
        let i3 = fam(GraphFamily::Linear(3));
        for e in 0..3 {
            assert!(!i3.coherent_cycle_through(e));
        }
        // The square with a diagonal: the diagonal closes up through v3, v0.
        let q = Digraph::simple(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        assert!(q.coherent_cycle_through(4));
    }

    #[test]
    fn gluing_basics() {
        // Two copies of I_2 glued along the middle edge.
        let g1 = fam(GraphFamily::Linear(2));
        let g2 = fam(GraphFamily::Linear(2));
        let common = fam(GraphFamily::Linear(1));
        let map = GluingMap {
            common,
            left_embedding: vec![1, 2],
            right_embedding: vec![0, 1],
        };
        let glued = glue(&g1, &g2, &map).unwrap();
        assert_eq!(glued.vertex_count(), 4);
        assert_eq!(glued.edge_count(), 3);

        // Gluing along the empty graph is the disjoint union.
        let empty = Digraph::simple(0, vec![]).unwrap();
        let map = GluingMap { common: empty, left_embedding: vec![], right_embedding: vec![] };
        let glued = glue(&g1, &g2, &map).unwrap();
        assert_eq!(glued, g1.disjoint_union(&g2).unwrap());
    }

    #[test]
    fn gluing_edge_count() {
        // Glue two dandelions at their centre vertex: no edges identified.
        let d = fam(GraphFamily::Dandelion(1, 2));
        let map = GluingMap {
            common: Digraph::simple(1, vec![]).unwrap(),
            left_embedding: vec![1],
            right_embedding: vec![1],
        };
        let glued = glue(&d, &d, &map).unwrap();
        assert_eq!(glued.edge_count(), d.edge_count() * 2);
        assert_eq!(glued.vertex_count(), d.vertex_count() * 2 - 1);
    }

    #[test]
    fn gluing_rejects_bad_maps() {
        let g1 = fam(GraphFamily::Linear(2));
        let common = fam(GraphFamily::Linear(1));
        // Not injective.
        let map = GluingMap {
            common: common.clone(),
            left_embedding: vec![1, 1],
            right_embedding: vec![0, 1],
        };
        assert!(matches!(glue(&g1, &g1, &map), Err(Error::NotRegularMorphism(_))));
        // Edge not preserved: (0,1) of I_1 must land on an edge.
        let map = GluingMap {
            common,
            left_embedding: vec![2, 0],
            right_embedding: vec![0, 1],
        };
        assert!(matches!(glue(&g1, &g1, &map), Err(Error::NotRegularMorphism(_))));
    }

    #[test]
    fn components_ordering() {
        let g = Digraph::simple(5, vec![(3, 1), (0, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 4], vec![1, 3], vec![2]]);
        assert_eq!(g.components_of(EdgeSet::EMPTY).len(), 5);
    }

    #[test]
    fn dot_output() {
        let dot = fam(GraphFamily::Linear(1)).to_dot();
        assert!(dot.contains("v0 -> v1"));
    }

    #[test]
    fn graph_file_round_trip() {
        let g = fam(GraphFamily::Dandelion(2, 2));
        let file = GraphFile::from_digraph(&g);
        let text = serde_json::to_string(&file).unwrap();
        let back: GraphFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_digraph().unwrap(), g);
    }
}
