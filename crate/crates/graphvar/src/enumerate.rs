//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Connected graphs are grown one edge at a time: either a new edge between
//! existing vertices or a pendant edge to a fresh vertex. Every connected
//! graph arises this way (delete a cycle edge, or a leaf), and canonical
//! keys deduplicate isomorphic results.

use std::collections::{HashSet, VecDeque};

use crate::graph::{CanonicalKey, ColoredVertexSet, Graph};

/// All connected simple graphs with `1..=max_vertices` vertices, one
/// representative per isomorphism class, sorted by vertex count, edge count,
/// then canonical key.
pub fn connected_graphs_up_to_iso(max_vertices: usize) -> Vec<Graph> {
    grow(|g| g.vertex_count() <= max_vertices, usize::MAX, max_vertices)
}

/// All connected simple graphs with at most `max_edges` edges, one per
/// isomorphism class.
pub fn connected_graphs_by_edges(max_edges: usize) -> Vec<Graph> {
    grow(|_| true, max_edges, max_edges + 1)
}

fn grow(admit: impl Fn(&Graph) -> bool, max_edges: usize, max_vertices: usize) -> Vec<Graph> {
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out: Vec<Graph> = Vec::new();
    let mut queue: VecDeque<Graph> = VecDeque::new();
    let single = Graph::new(1, vec![]).expect("one vertex");
    seen.insert(single.canonical_key());
    queue.push_back(single.clone());
    out.push(single);
    while let Some(g) = queue.pop_front() {
        if g.edge_count() >= max_edges {
            continue;
        }
        let n = g.vertex_count();
        let mut extensions: Vec<Graph> = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if !g.adjacent(u, v) {
                    let mut edges = g.edges().to_vec();
                    edges.push((u, v));
                    extensions.push(Graph::new(n, edges).expect("valid edge"));
                }
            }
            if n < max_vertices {
                let mut edges = g.edges().to_vec();
                edges.push((u, n));
                extensions.push(Graph::new(n + 1, edges).expect("valid edge"));
            }
        }
        for h in extensions {
            if !admit(&h) {
                continue;
            }
            if seen.insert(h.canonical_key()) {
                queue.push_back(h.clone());
                out.push(h);
            }
        }
    }
    out.sort_by_key(|g| (g.vertex_count(), g.edge_count(), g.canonical_key()));
    out
}

/// Nonincreasing class-size vectors of complete multipartite graphs with
/// `2..=max_total` vertices and at least two classes, lexicographically
/// sorted.
pub fn multipartite_count_vectors(max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 2..=max_total {
        let mut partial: Vec<usize> = Vec::new();
        descend(total, total, &mut partial, &mut out);
    }
    out.retain(|v| v.len() >= 2);
    out.sort();
    out
}

fn descend(remaining: usize, cap: usize, partial: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(partial.clone());
        return;
    }
    for next in (1..=remaining.min(cap)).rev() {
        partial.push(next);
        descend(remaining - next, next, partial, out);
        partial.pop();
    }
}

/// Whether the class sizes satisfy the hypotheses of the `d`-heaviness
/// result: at least three classes, or exactly two with sizes `>= 3` and
/// `>= 2` (this excludes exactly the acyclic cases and `K_{2,2}`).
pub fn meets_heaviness_hypotheses(counts: &[usize]) -> bool {
    match counts.len() {
        0 | 1 => false,
        2 => counts[0] >= 3 && counts[1] >= 2,
        _ => true,
    }
}

/// The colored vertex sets of all complete multipartite graphs with at most
/// `max_total` vertices satisfying the heaviness hypotheses.
pub fn heavy_multipartite_families(max_total: usize) -> Vec<ColoredVertexSet> {
    multipartite_count_vectors(max_total)
        .into_iter()
        .filter(|c| meets_heaviness_hypotheses(c))
        .map(|c| ColoredVertexSet::from_counts(&c).expect("positive counts"))
        .collect()
}
