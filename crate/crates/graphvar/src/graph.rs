//! Multigraphs and graphic-matroid primitives.
//!
//! A [`Graph`] is a finite multigraph on vertices `0..n` with a canonically
//! sorted edge list. Loops and parallel edges are representable because they
//! arise under contraction, but the public entry points of the other modules
//! require simple inputs. Edge subsets are bitmasks ([`EdgeSet`]); all
//! enumerations iterate masks in increasing numeric order so that witness
//! reporting is deterministic.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A natural number extended with an infinity sentinel.
///
/// Girth and minimum constraint dimension are infinite exactly for forests;
/// the sentinel keeps that case distinct from every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinity,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinity => None,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(v) => serializer.serialize_u64(*v),
            ExtNat::Infinity => serializer.serialize_str("infinity"),
        }
    }
}

/// A subset of the edges of a host graph, as a bitmask over edge indices.
///
/// Supports hosts with at most 128 edges, which comfortably covers every
/// enumeration guard in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// The full edge set of a host with `count` edges.
    pub fn full(count: usize) -> Result<EdgeSet> {
        if count > 128 {
            return Err(Error::SizeLimit {
                operation: "edge bitmask",
                limit: 128,
                actual: count,
            });
        }
        if count == 128 {
            Ok(EdgeSet(u128::MAX))
        } else {
            Ok(EdgeSet((1u128 << count) - 1))
        }
    }

    pub fn from_indices(indices: &[usize]) -> Result<EdgeSet> {
        let mut mask = 0u128;
        for &i in indices {
            if i >= 128 {
                return Err(Error::SizeLimit {
                    operation: "edge bitmask",
                    limit: 128,
                    actual: i + 1,
                });
            }
            mask |= 1 << i;
        }
        Ok(EdgeSet(mask))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 128 && self.0 >> index & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Edge indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..128).filter(|&i| self.contains(i)).collect()
    }
}

/// A finite multigraph with labeled vertices `0..n`.
///
/// The edge list is sorted by `(min, max)` endpoint so that equal graphs
/// compare equal; `simple` records whether the graph has neither loops nor
/// repeated pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    simple: bool,
}

/// Index correspondences returned by [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedMaps {
    /// New vertex index -> original vertex index.
    pub vertex_to_original: Vec<usize>,
    /// New edge index -> original edge index.
    pub edge_to_original: Vec<usize>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and sorting the
    /// edge list. Loops and parallel edges are accepted.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut es: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        let simple = es.iter().all(|&(u, v)| u != v)
            && es.windows(2).all(|w| w[0] != w[1]);
        Ok(Graph { n, edges: es, simple })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Bitmask of all edges. Errors if the graph has more than 128 edges.
    pub fn full_edge_set(&self) -> Result<EdgeSet> {
        EdgeSet::full(self.edges.len())
    }

    // ----- generators -------------------------------------------------

    /// The cycle `C_n`, `n >= 3`. Smaller values would force a loop or a
    /// parallel pair, which the generators never produce.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle requires n >= 3, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    /// The path on `n` vertices (`n - 1` edges), `n >= 1`.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParameter("path requires n >= 1".into()));
        }
        Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
    }

    /// The complete graph `K_n`, `n >= 1`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParameter("complete requires n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    /// The complete multipartite graph with the given color-class sizes.
    /// Classes are laid out consecutively, largest first.
    pub fn complete_multipartite(counts: &[usize]) -> Result<Graph> {
        let colors = ColoredVertexSet::from_counts(counts)?;
        Ok(colors.graph())
    }

    /// The onion graph: `k >= 2` internally disjoint paths with the given
    /// lengths glued at two shared endpoints. At most one length may be 1,
    /// otherwise a parallel pair would appear. Vertex 0 and 1 are the shared
    /// endpoints; path lengths are sorted ascending before labeling.
    pub fn onion(lengths: &[usize]) -> Result<Graph> {
        let lens = validate_onion(lengths)?;
        let n = 2 + lens.iter().map(|a| a - 1).sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 2;
        for &a in &lens {
            if a == 1 {
                edges.push((0, 1));
                continue;
            }
            let mut prev = 0;
            for _ in 0..(a - 1) {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::new(n, edges)
    }

    // ----- matroid primitives -----------------------------------------

    /// Rank of an edge subset: the size of a spanning forest of `(V, A)`,
    /// i.e. `|V|` minus the number of connected components. Loops never
    /// contribute.
    pub fn rank(&self, a: EdgeSet) -> usize {
        debug_assert!(a.0 >> self.edges.len().min(128) == 0, "subset outside host");
        let mut dsu = Dsu::new(self.n);
        let mut rank = 0;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if a.contains(i) && dsu.union(u, v) {
                rank += 1;
            }
        }
        rank
    }

    /// Nullity `|A| - rank(A)`: loops and extra parallel copies each add 1.
    pub fn nullity(&self, a: EdgeSet) -> usize {
        a.len() - self.rank(a)
    }

    /// Rank of the full edge set (no bitmask, so any number of edges works).
    pub fn rank_all(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        let mut rank = 0;
        for &(u, v) in &self.edges {
            if dsu.union(u, v) {
                rank += 1;
            }
        }
        rank
    }

    pub fn nullity_all(&self) -> usize {
        self.edges.len() - self.rank_all()
    }

    /// Length of a shortest cycle: 1 for a loop, 2 for a parallel pair,
    /// otherwise a BFS over the underlying simple graph; `Infinity` for
    /// forests.
    pub fn girth(&self) -> ExtNat {
        if self.edges.iter().any(|&(u, v)| u == v) {
            return ExtNat::Finite(1);
        }
        if self.edges.windows(2).any(|w| w[0] == w[1]) {
            return ExtNat::Finite(2);
        }
        // Simple-graph girth: BFS from every vertex; a non-tree edge (u,v)
        // seen from source s witnesses a closed walk of length
        // dist(u)+dist(v)+1 containing a cycle no longer than that.
        let adj = self.simple_adjacency();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if best != usize::MAX && 2 * dist[u] >= best {
                    break;
                }
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtNat::Infinity
        } else {
            ExtNat::Finite(best as u64)
        }
    }

    /// Quotient multigraph: endpoints of every edge in `a` are identified.
    /// Surviving edges keep their multiplicity; edges whose endpoints fall in
    /// one class become loops. Classes are renumbered by smallest member.
    pub fn contract(&self, a: EdgeSet) -> Graph {
        self.contract_traced(a).0
    }

    /// As [`Graph::contract`], also returning `new edge -> old edge` and
    /// `old vertex -> new vertex` maps.
    pub fn contract_traced(&self, a: EdgeSet) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut dsu = Dsu::new(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if a.contains(i) {
                dsu.union(u, v);
            }
        }
        self.quotient(&mut dsu, |i| !a.contains(i))
    }

    /// Deletes the edge with the given index.
    pub fn delete_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Graph::new(self.n, edges).expect("edges already validated")
    }

    /// Contracts the single edge with the given index.
    pub fn contract_edge(&self, index: usize) -> Graph {
        let (u, v) = self.edges[index];
        let mut dsu = Dsu::new(self.n);
        dsu.union(u, v);
        self.quotient(&mut dsu, |i| i != index).0
    }

    fn quotient(
        &self,
        dsu: &mut Dsu,
        keep: impl Fn(usize) -> bool,
    ) -> (Graph, Vec<usize>, Vec<usize>) {
        // Number classes in increasing order of their smallest vertex.
        let mut smallest: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.n {
            let r = dsu.find(v);
            let e = smallest.entry(r).or_insert(v);
            *e = (*e).min(v);
        }
        let mut reps: Vec<usize> = smallest.values().copied().collect();
        reps.sort_unstable();
        let class_of_rep: HashMap<usize, usize> =
            reps.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let vertex_map: Vec<usize> = (0..self.n)
            .map(|v| class_of_rep[&smallest[&dsu.find(v)]])
            .collect();

        let mut indexed: Vec<((usize, usize), usize)> = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep(i) {
                let (a, b) = (vertex_map[u], vertex_map[v]);
                indexed.push(((a.min(b), a.max(b)), i));
            }
        }
        indexed.sort_unstable();
        let edge_map: Vec<usize> = indexed.iter().map(|&(_, i)| i).collect();
        let edges: Vec<(usize, usize)> = indexed.into_iter().map(|(e, _)| e).collect();
        let g = Graph::new(reps.len(), edges).expect("quotient endpoints in range");
        (g, edge_map, vertex_map)
    }

    /// Subgraph induced by the vertex set `w`, with index maps back to the
    /// host. Vertices are relabeled in increasing original order.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<(Graph, InducedMaps)> {
        let mut verts: Vec<usize> = w.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.iter().any(|&v| v >= self.n) {
            return Err(Error::InvalidParameter(
                "induced subgraph: vertex outside host".into(),
            ));
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_index[v] = i;
        }
        let mut indexed: Vec<((usize, usize), usize)> = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                let (a, b) = (new_index[u], new_index[v]);
                indexed.push(((a.min(b), a.max(b)), i));
            }
        }
        indexed.sort_unstable();
        let edge_to_original = indexed.iter().map(|&(_, i)| i).collect();
        let edges: Vec<(usize, usize)> = indexed.into_iter().map(|(e, _)| e).collect();
        let g = Graph::new(verts.len(), edges)?;
        Ok((
            g,
            InducedMaps {
                vertex_to_original: verts,
                edge_to_original,
            },
        ))
    }

    // ----- connectivity -------------------------------------------------

    /// Whether all vertices lie in one component. Graphs with at most one
    /// vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n);
        let mut components = self.n;
        for &(u, v) in &self.edges {
            if dsu.union(u, v) {
                components -= 1;
            }
        }
        components == 1
    }

    /// Two-connectedness in the matroid-indecomposable sense: at least three
    /// vertices, connected, and no cut vertex, except that a parallel pair
    /// on two vertices also counts, while a bridge does not.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 2 || !self.is_connected() {
            return false;
        }
        if self.n == 2 {
            return self.edges.iter().filter(|&&(u, v)| u != v).count() >= 2;
        }
        // Cut vertices are insensitive to loops and parallel multiplicity.
        let adj = self.simple_adjacency();
        !has_cut_vertex(self.n, &adj)
    }

    /// Edge sets of all two-connected induced subgraphs with positive
    /// nullity, deduplicated, in increasing order of the inducing vertex
    /// mask. Requires a simple graph.
    pub fn two_connected_induced_edge_sets(&self) -> Result<Vec<EdgeSet>> {
        if !self.simple {
            return Err(Error::HypothesisViolation(
                "two_connected_induced_edge_sets requires a simple graph".into(),
            ));
        }
        if self.n > 22 {
            return Err(Error::SizeLimit {
                operation: "two_connected_induced_edge_sets",
                limit: 22,
                actual: self.n,
            });
        }
        self.full_edge_set()?; // ensure edge indices fit a bitmask
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << self.n) {
            let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() < 2 {
                continue;
            }
            let (h, maps) = self.induced_subgraph(&verts)?;
            if h.edge_count() == 0 || !h.is_two_connected() {
                continue;
            }
            if h.nullity_all() == 0 {
                continue;
            }
            let set = EdgeSet::from_indices(&maps.edge_to_original)?;
            if seen.insert(set) {
                out.push(set);
            }
        }
        Ok(out)
    }

    // ----- helpers ------------------------------------------------------

    /// Adjacency lists of the underlying simple graph (loops dropped,
    /// parallels collapsed).
    pub(crate) fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Multiplicity of the unordered pair `(u, v)`; for `u == v`, the number
    /// of loops at that vertex.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Whether `u` and `v` are joined by at least one edge.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.multiplicity(u, v) > 0
    }

    /// Drops vertices of degree zero (relabeling the rest in order).
    pub fn without_isolated_vertices(&self) -> Graph {
        let mut used = vec![false; self.n];
        for &(u, v) in &self.edges {
            used[u] = true;
            used[v] = true;
        }
        let verts: Vec<usize> = (0..self.n).filter(|&v| used[v]).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        Graph::new(verts.len(), edges).expect("relabeled endpoints in range")
    }

    /// Whether the graph has no cycle (no loops, parallels, or BFS cycles).
    pub fn is_forest(&self) -> bool {
        self.nullity_all() == 0
    }

    /// Canonical form up to isomorphism, usable as a hash key: isomorphic
    /// multigraphs produce equal keys and non-isomorphic ones never do.
    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key(self)
    }
}

/// Onion parameter validation shared with the closed-form mcd.
pub(crate) fn validate_onion(lengths: &[usize]) -> Result<Vec<usize>> {
    if lengths.len() < 2 {
        return Err(Error::InvalidParameter(
            "onion requires at least two paths".into(),
        ));
    }
    if lengths.contains(&0) {
        return Err(Error::InvalidParameter(
            "onion path lengths must be at least 1".into(),
        ));
    }
    if lengths.iter().filter(|&&a| a == 1).count() > 1 {
        return Err(Error::InvalidParameter(
            "onion allows at most one path of length 1".into(),
        ));
    }
    let mut lens = lengths.to_vec();
    lens.sort_unstable();
    Ok(lens)
}

fn has_cut_vertex(n: usize, adj: &[Vec<usize>]) -> bool {
    // Iterative DFS lowpoint computation.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut root_children = 0;
        let mut stack = vec![(root, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, ref mut it)) = stack.last_mut() {
            if *it < adj[u].len() {
                let v = adj[u][*it];
                *it += 1;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    if u == root {
                        root_children += 1;
                    }
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, 0));
                } else if v != parent[u] {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        return true;
                    }
                }
            }
        }
        if root_children > 1 {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Colored vertex sets (complete multipartite graphs)
// ---------------------------------------------------------------------------

/// A vertex coloring realizing a complete multipartite graph, with class
/// sizes kept in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredVertexSet {
    colors: Vec<usize>,
    counts: Vec<usize>,
}

impl ColoredVertexSet {
    /// Canonical layout: color classes are consecutive, largest class first.
    pub fn from_counts(counts: &[usize]) -> Result<ColoredVertexSet> {
        if counts.is_empty() || counts.contains(&0) {
            return Err(Error::InvalidParameter(
                "multipartite class sizes must be positive".into(),
            ));
        }
        let mut sorted = counts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut colors = Vec::new();
        for (c, &q) in sorted.iter().enumerate() {
            colors.extend(std::iter::repeat_n(c, q));
        }
        Ok(ColoredVertexSet { colors, counts: sorted })
    }

    /// From an explicit vertex -> color map; color indices are renumbered so
    /// that class sizes are nonincreasing (vertex membership is unchanged).
    pub fn from_colors(colors: &[usize]) -> Result<ColoredVertexSet> {
        if colors.is_empty() {
            return Err(Error::InvalidParameter("empty color list".into()));
        }
        let max = *colors.iter().max().unwrap();
        let mut raw_counts = vec![0usize; max + 1];
        for &c in colors {
            raw_counts[c] += 1;
        }
        if raw_counts.contains(&0) {
            return Err(Error::InvalidParameter(
                "color indices must be contiguous from 0".into(),
            ));
        }
        // Sort color ids by decreasing size (ties by old id, for determinism).
        let mut order: Vec<usize> = (0..=max).collect();
        order.sort_by_key(|&c| (std::cmp::Reverse(raw_counts[c]), c));
        let mut new_id = vec![0usize; max + 1];
        for (i, &c) in order.iter().enumerate() {
            new_id[c] = i;
        }
        let colors: Vec<usize> = colors.iter().map(|&c| new_id[c]).collect();
        let counts = order.iter().map(|&c| raw_counts[c]).collect();
        Ok(ColoredVertexSet { colors, counts })
    }

    pub fn total(&self) -> usize {
        self.colors.len()
    }

    pub fn color_count(&self) -> usize {
        self.counts.len()
    }

    /// Class sizes, nonincreasing.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The complete multipartite graph on this coloring: one edge for every
    /// heterochromatic pair.
    pub fn graph(&self) -> Graph {
        let n = self.colors.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.colors[u] != self.colors[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("valid endpoints")
    }

    /// Whether the graph is acyclic (one class, or exactly two classes with
    /// the smaller of size 1).
    pub fn is_acyclic(&self) -> bool {
        match self.counts.len() {
            0 | 1 => true,
            2 => self.counts[1] == 1,
            _ => false,
        }
    }

    /// Whether this is exactly `K_{2,2}`.
    pub fn is_k22(&self) -> bool {
        self.counts == [2, 2]
    }
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

/// The on-disk JSON form of a graph: `{"n": .., "edges": [[u,v],..]}` with an
/// optional `"colors"` array used only by multipartite-specific operations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<usize>>,
}

impl GraphJson {
    pub fn into_parts(self) -> Result<(Graph, Option<ColoredVertexSet>)> {
        let g = Graph::new(self.n, self.edges)
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        let colors = match self.colors {
            None => None,
            Some(cs) => {
                if cs.len() != g.vertex_count() {
                    return Err(Error::InvalidInput(format!(
                        "colors array has length {}, expected {}",
                        cs.len(),
                        g.vertex_count()
                    )));
                }
                Some(ColoredVertexSet::from_colors(&cs)?)
            }
        };
        Ok((g, colors))
    }

    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
            colors: None,
        }
    }

    pub fn with_colors(g: &Graph, colors: &ColoredVertexSet) -> GraphJson {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
            colors: Some(colors.colors().to_vec()),
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from_graph(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Graph, D::Error> {
        let doc = GraphJson::deserialize(deserializer)?;
        let (g, _) = doc.into_parts().map_err(D::Error::custom)?;
        Ok(g)
    }
}

// ---------------------------------------------------------------------------
// Canonical form up to isomorphism
// ---------------------------------------------------------------------------

/// Canonical encoding of a multigraph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u32>);

struct CanonSearch {
    n: usize,
    mult: Vec<Vec<u32>>,
    loops: Vec<u32>,
    cell: Vec<usize>,
    best: Option<Vec<u32>>,
}

/// Lexicographically minimal row-by-row encoding over all vertex orderings
/// consistent with an iterated degree refinement. Twin vertices (identical
/// adjacency rows) are interchangeable by an automorphism, so only one
/// representative per twin class is branched on.
fn canonical_key(g: &Graph) -> CanonicalKey {
    let n = g.vertex_count();
    let mut mult = vec![vec![0u32; n]; n];
    let mut loops = vec![0u32; n];
    for &(u, v) in g.edges() {
        if u == v {
            loops[u] += 1;
        } else {
            mult[u][v] += 1;
            mult[v][u] += 1;
        }
    }

    // Iterated refinement: a vertex signature is its previous cell, loop
    // count, and the multiset of (multiplicity, neighbor cell) pairs.
    // Keeping the previous cell in front makes the refinement monotone, so
    // the loop reaches a fixpoint in at most n rounds.
    let mut cell = vec![0usize; n];
    loop {
        let mut sigs: Vec<(Vec<u64>, usize)> = (0..n)
            .map(|u| {
                let mut s: Vec<u64> = (0..n)
                    .filter(|&v| v != u && mult[u][v] > 0)
                    .map(|v| (mult[u][v] as u64) << 32 | cell[v] as u64)
                    .collect();
                s.sort_unstable();
                s.insert(0, loops[u] as u64);
                s.insert(0, cell[u] as u64);
                (s, u)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0usize; n];
        let mut id = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                id += 1;
            }
            next[sigs[i].1] = id;
        }
        if next == cell {
            break;
        }
        cell = next;
    }

    let mut search = CanonSearch {
        n,
        mult,
        loops,
        cell,
        best: None,
    };
    let mut order = Vec::with_capacity(n);
    let mut enc = Vec::with_capacity(n * (n + 1) / 2 + n);
    search.descend(&mut order, &mut enc);
    let mut key = vec![n as u32];
    key.extend(search.best.unwrap_or_default());
    CanonicalKey(key)
}

impl CanonSearch {
    fn descend(&mut self, order: &mut Vec<usize>, enc: &mut Vec<u32>) {
        if order.len() == self.n {
            if self.best.as_ref().is_none_or(|b| enc[..] < b[..]) {
                self.best = Some(enc.clone());
            }
            return;
        }
        let placed: Vec<bool> = {
            let mut p = vec![false; self.n];
            for &v in order.iter() {
                p[v] = true;
            }
            p
        };
        // Candidates must come from the smallest unplaced refinement cell.
        let min_cell = (0..self.n)
            .filter(|&v| !placed[v])
            .map(|v| self.cell[v])
            .min()
            .unwrap();
        let mut candidates: Vec<usize> = (0..self.n)
            .filter(|&v| !placed[v] && self.cell[v] == min_cell)
            .collect();
        // Twin dedup: keep one of each set of vertices with identical rows.
        let mut kept: Vec<usize> = Vec::new();
        candidates.retain(|&v| {
            let twin = kept.iter().any(|&w| {
                self.loops[v] == self.loops[w]
                    && (0..self.n)
                        .all(|x| x == v || x == w || self.mult[v][x] == self.mult[w][x])
            });
            if !twin {
                kept.push(v);
            }
            !twin
        });
        for v in candidates {
            let base = enc.len();
            enc.push(self.loops[v]);
            for &w in order.iter() {
                enc.push(self.mult[v][w]);
            }
            // Prune orderings already lexicographically worse than the best.
            let viable = match &self.best {
                Some(b) => enc[..] <= b[..enc.len().min(b.len())],
                None => true,
            };
            if viable {
                order.push(v);
                self.descend(order, enc);
                order.pop();
            }
            enc.truncate(base);
        }
    }
}

// ---------------------------------------------------------------------------
// Union-find
// ---------------------------------------------------------------------------

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the union merged two distinct classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra.max(rb)] = ra.min(rb);
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::complete(4).unwrap()
    }

    #[test]
    fn rank_examples() {
        let g = k4();
        assert_eq!(g.rank(g.full_edge_set().unwrap()), 3);
        assert_eq!(g.rank(EdgeSet::EMPTY), 0);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.rank(c5.full_edge_set().unwrap()), 4);
    }

    #[test]
    fn nullity_examples() {
        for n in 3..=7 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(c.nullity(c.full_edge_set().unwrap()), 1);
        }
        assert_eq!(k4().nullity_all(), 3);
        let t = Graph::path(6).unwrap();
        assert_eq!(t.nullity_all(), 0);
    }

    #[test]
    fn nullity_counts_loops_and_parallels() {
        let g = Graph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert!(!g.is_simple());
        assert_eq!(g.rank_all(), 1);
        assert_eq!(g.nullity_all(), 2);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::cycle(7).unwrap().girth(), ExtNat::Finite(7));
        assert_eq!(Graph::onion(&[2, 2, 2]).unwrap().girth(), ExtNat::Finite(4));
        assert_eq!(Graph::path(4).unwrap().girth(), ExtNat::Infinity);
        let loopy = Graph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(loopy.girth(), ExtNat::Finite(1));
        let para = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(para.girth(), ExtNat::Finite(2));
    }

    #[test]
    fn girth_matches_brute_force_cycle_search() {
        // Oracle: shortest cycle by enumerating all vertex subsets and
        // checking for an induced-cycle-free certificate via rank.
        fn brute_girth(g: &Graph) -> ExtNat {
            let m = g.edge_count();
            let mut best = u64::MAX;
            for mask in 1u64..(1 << m) {
                let set = EdgeSet(mask as u128);
                let k = set.len();
                // An edge set is a single cycle iff nullity 1 and every
                // vertex it touches has degree exactly 2 within the set
                // and it is connected on its support.
                if g.nullity(set) != 1 {
                    continue;
                }
                let mut deg = vec![0usize; g.vertex_count()];
                for (i, &(u, v)) in g.edges().iter().enumerate() {
                    if set.contains(i) {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                if deg.iter().all(|&d| d == 0 || d == 2) && g.rank(set) == k - 1 {
                    best = best.min(k as u64);
                }
            }
            if best == u64::MAX {
                ExtNat::Infinity
            } else {
                ExtNat::Finite(best)
            }
        }
        let cases = [
            Graph::cycle(5).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::onion(&[2, 3, 3]).unwrap(),
            Graph::onion(&[1, 3, 3]).unwrap(),
            Graph::path(7).unwrap(),
            Graph::complete_multipartite(&[3, 2]).unwrap(),
            Graph::complete_multipartite(&[2, 2, 2]).unwrap(),
        ];
        for g in cases {
            assert_eq!(g.girth(), brute_girth(&g), "graph {:?}", g.edges());
        }
    }

    #[test]
    fn contract_triangle_edge_gives_parallel_pair() {
        let tri = Graph::cycle(3).unwrap();
        let h = tri.contract(EdgeSet::from_indices(&[0]).unwrap());
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edges(), &[(0, 1), (0, 1)]);
        assert!(!h.is_simple());
    }

    #[test]
    fn contract_empty_set_is_identity() {
        let g = Graph::onion(&[2, 2, 2]).unwrap();
        assert_eq!(g.contract(EdgeSet::EMPTY), g);
    }

    #[test]
    fn contract_onion_four_cycle() {
        // Contracting one 4-cycle of onion(2,2,2) = K_{2,3} leaves two
        // vertices joined by a parallel pair.
        let g = Graph::onion(&[2, 2, 2]).unwrap();
        // Find a chordless 4-cycle through the two hubs 0 and 1.
        let mut cyc = None;
        'outer: for a in 2..g.vertex_count() {
            for b in (a + 1)..g.vertex_count() {
                let mut idx = Vec::new();
                for (i, &(u, v)) in g.edges().iter().enumerate() {
                    if (u.min(v), u.max(v)) == (0, a)
                        || (u.min(v), u.max(v)) == (0, b)
                        || (u.min(v), u.max(v)) == (1, a)
                        || (u.min(v), u.max(v)) == (1, b)
                    {
                        idx.push(i);
                    }
                }
                if idx.len() == 4 {
                    cyc = Some(idx);
                    break 'outer;
                }
            }
        }
        let h = g.contract(EdgeSet::from_indices(&cyc.unwrap()).unwrap());
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges(), &[(0, 1), (0, 1)]);
    }

    #[test]
    fn contract_rank_identity() {
        // rank(G/A of everything) = rank(G, E) - rank(G, A) for all A.
        let graphs = [
            Graph::complete(4).unwrap(),
            Graph::onion(&[2, 2, 2]).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::new(4, vec![(0, 1), (0, 1), (1, 1), (2, 3), (1, 2)]).unwrap(),
        ];
        for g in graphs {
            let m = g.edge_count();
            for mask in 0u64..(1 << m) {
                let a = EdgeSet(mask as u128);
                let h = g.contract(a);
                assert_eq!(h.rank_all(), g.rank_all() - g.rank(a));
            }
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let (tri, _) = k4().induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(tri, Graph::cycle(3).unwrap());

        let (p, _) = Graph::cycle(5).unwrap().induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p, Graph::path(3).unwrap());

        // K_{3,2} restricted to 2+2 vertices is a 4-cycle.
        let g = Graph::complete_multipartite(&[3, 2]).unwrap();
        let (c4, _) = g.induced_subgraph(&[0, 1, 3, 4]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.girth(), ExtNat::Finite(4));
    }

    #[test]
    fn connectivity_examples() {
        let tri = Graph::cycle(3).unwrap();
        assert!(tri.is_connected() && tri.is_two_connected());

        // Two triangles sharing one vertex: connected, not 2-connected.
        let bowtie =
            Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(bowtie.is_connected());
        assert!(!bowtie.is_two_connected());

        let edge = Graph::path(2).unwrap();
        assert!(edge.is_connected());
        assert!(!edge.is_two_connected());

        let para = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(para.is_two_connected());
    }

    #[test]
    fn two_connected_induced_sets() {
        let tri = Graph::cycle(3).unwrap();
        assert_eq!(
            tri.two_connected_induced_edge_sets().unwrap(),
            vec![tri.full_edge_set().unwrap()]
        );

        let bowtie =
            Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let sets = bowtie.two_connected_induced_edge_sets().unwrap();
        assert_eq!(sets.len(), 2);
        for s in &sets {
            assert_eq!(s.len(), 3);
            assert_eq!(bowtie.nullity(*s), 1);
        }

        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            c6.two_connected_induced_edge_sets().unwrap(),
            vec![c6.full_edge_set().unwrap()]
        );
    }

    #[test]
    fn generator_examples() {
        assert_eq!(
            Graph::complete_multipartite(&[1, 1, 1]).unwrap(),
            Graph::cycle(3).unwrap()
        );
        assert_eq!(
            Graph::complete_multipartite(&[2, 2]).unwrap().girth(),
            ExtNat::Finite(4)
        );
        let o = Graph::onion(&[2, 3]).unwrap();
        assert_eq!(o.vertex_count(), 5);
        assert_eq!(o.edge_count(), 5);
        assert_eq!(o.girth(), ExtNat::Finite(5));
        assert!(Graph::onion(&[1, 1]).is_err());
        assert!(Graph::onion(&[2]).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete_multipartite(&[0, 2]).is_err());
    }

    #[test]
    fn onion_is_isomorphic_to_cycle() {
        for (a, b) in [(2, 3), (1, 4), (3, 3), (2, 2)] {
            let o = Graph::onion(&[a, b]).unwrap();
            let c = Graph::cycle(a + b).unwrap();
            assert_eq!(o.canonical_key(), c.canonical_key());
        }
    }

    #[test]
    fn canonical_key_separates_and_identifies() {
        // Same degree sequence, different graphs: C_6 vs two triangles.
        let c6 = Graph::cycle(6).unwrap();
        let two_tri =
            Graph::new(6, vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_ne!(c6.canonical_key(), two_tri.canonical_key());

        // A relabeled K_{3,2} matches the canonical one.
        let g = Graph::complete_multipartite(&[3, 2]).unwrap();
        let perm = [4usize, 2, 0, 3, 1];
        let relabeled = Graph::new(
            5,
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        )
        .unwrap();
        assert_eq!(g.canonical_key(), relabeled.canonical_key());

        // Multigraphs: loop position must not matter, multiplicity must.
        let a = Graph::new(3, vec![(0, 0), (1, 2)]).unwrap();
        let b = Graph::new(3, vec![(2, 2), (0, 1)]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = Graph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let d = Graph::new(3, vec![(0, 1), (1, 2), (1, 2)]).unwrap();
        assert_eq!(c.canonical_key(), d.canonical_key());
        let e = Graph::new(3, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_ne!(c.canonical_key(), e.canonical_key());
    }

    #[test]
    fn rank_is_monotone_and_submodular() {
        let graphs = [
            Graph::complete(4).unwrap(),
            Graph::onion(&[2, 2, 2]).unwrap(),
            Graph::new(3, vec![(0, 0), (0, 1), (0, 1), (1, 2)]).unwrap(),
        ];
        for g in graphs {
            let m = g.edge_count();
            assert!(m <= 10);
            for a in 0u64..(1 << m) {
                for b in 0u64..(1 << m) {
                    let (sa, sb) = (EdgeSet(a as u128), EdgeSet(b as u128));
                    let union = EdgeSet((a | b) as u128);
                    let inter = EdgeSet((a & b) as u128);
                    if a & b == a {
                        assert!(g.rank(sa) <= g.rank(sb));
                    }
                    assert!(g.rank(union) + g.rank(inter) <= g.rank(sa) + g.rank(sb));
                    assert!(
                        g.nullity(union) + g.nullity(inter) >= g.nullity(sa) + g.nullity(sb)
                    );
                }
            }
        }
    }

    #[test]
    fn graph_json_round_trips() {
        let g = Graph::onion(&[2, 2, 2]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
        let doc: GraphJson = serde_json::from_str(r#"{"n":3,"edges":[[2,1],[0,1],[0,2]]}"#).unwrap();
        let (tri, colors) = doc.into_parts().unwrap();
        assert_eq!(tri, Graph::cycle(3).unwrap());
        assert!(colors.is_none());
    }
}
