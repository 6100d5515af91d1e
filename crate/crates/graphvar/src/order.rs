//! The computable part of the cellule order.
//!
//! For partitions `pi, sigma` of the vertex set, `pi` precedes `sigma` when
//! the cellule of `pi` lies in the closure of the cellule of `sigma`. The
//! relation is only ever possible when `sigma` refines `pi`, and this module
//! certifies what is provable combinatorially:
//!
//! * `KNOWN_LEQ`: `sigma` is reachable from `pi` by single-block splits,
//!   each justified by one of: splitting a block whose induced subgraph is
//!   acyclic, splitting a doubleton block, or peeling off a vertex with at
//!   most one edge into the rest of its block;
//! * `KNOWN_NOT_LEQ`: some block of `pi` that `sigma` breaks up induces a
//!   `d`-heavy subgraph, which pins that cellule against the closure;
//! * `UNKNOWN`: neither argument applies (the geometry is open).
//!
//! At ambient dimension 1 the order is exactly refinement and is returned as
//! such. The `KNOWN_LEQ` relation is the transitive closure of single
//! splits; binary splits of acyclic blocks generate the same closure as
//! arbitrary sub-partitions of them, because sub-blocks of an acyclic block
//! stay acyclic. The split moves themselves do not depend on `d`, so the
//! closure is computed once and shared by the maximal-cellule query.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::cellule::is_d_heavy;
use crate::error::{Error, Result};
use crate::graph::{ColoredVertexSet, Graph};
use crate::partition::{enumerate_partitions, SetPartition};

const MAX_ORDER_VERTICES: usize = 9;

/// Status of an ordered pair `(pi, sigma)` in the cellule order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RelationStatus {
    KnownLeq,
    KnownNotLeq,
    Unknown,
    /// `sigma` does not refine `pi`, so the cellules are definitively
    /// unrelated.
    NotRefining,
}

impl RelationStatus {
    /// The wire name, also used by the text renderings.
    pub fn label(self) -> &'static str {
        match self {
            RelationStatus::KnownLeq => "KNOWN_LEQ",
            RelationStatus::KnownNotLeq => "KNOWN_NOT_LEQ",
            RelationStatus::Unknown => "UNKNOWN",
            RelationStatus::NotRefining => "NOT_REFINING",
        }
    }
}

/// Which result justifies one split step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    /// The block induces an acyclic subgraph; any subdivision works.
    AcyclicBlock,
    /// A doubleton block always splits into two singletons.
    Doubleton,
    /// A vertex with at most one edge into the rest of its block peels off.
    SingleAttachment,
}

impl SplitRule {
    fn label(self) -> &'static str {
        match self {
            SplitRule::AcyclicBlock => "acyclic-block split",
            SplitRule::Doubleton => "doubleton split",
            SplitRule::SingleAttachment => "single-attachment peel",
        }
    }
}

/// One row of the serialized relation matrix.
#[derive(Clone, Debug, Serialize)]
pub struct CelluleRelation {
    pub pi: SetPartition,
    pub sigma: SetPartition,
    pub status: RelationStatus,
    pub certificate: String,
}

// ---------------------------------------------------------------------------
// Split closure (independent of the ambient dimension)
// ---------------------------------------------------------------------------

struct SplitClosure {
    partitions: Vec<SetPartition>,
    index: HashMap<SetPartition, usize>,
    /// Reachability bitsets over partition indices.
    reach: Vec<Vec<u64>>,
    /// For each strictly reachable pair, the first move of one chain.
    first_move: HashMap<(u32, u32), (u32, SplitRule)>,
    dominated: Vec<bool>,
}

impl SplitClosure {
    fn reaches(&self, p: usize, t: usize) -> bool {
        self.reach[p][t / 64] >> (t % 64) & 1 == 1
    }
}

fn guard_order_input(g: &Graph, operation: &'static str) -> Result<usize> {
    if !g.is_simple() {
        return Err(Error::HypothesisViolation(format!(
            "{operation} requires a simple graph"
        )));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter(format!(
            "{operation} needs at least one vertex"
        )));
    }
    if n > MAX_ORDER_VERTICES {
        return Err(Error::SizeLimit {
            operation,
            limit: MAX_ORDER_VERTICES,
            actual: n,
        });
    }
    Ok(n)
}

fn split_closure(g: &Graph) -> Result<SplitClosure> {
    let n = g.vertex_count();
    let partitions: Vec<SetPartition> = enumerate_partitions(n)?.collect();
    let index: HashMap<SetPartition, usize> = partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let count = partitions.len();
    let words = count.div_ceil(64);

    let succ: Vec<Vec<(usize, SplitRule)>> = partitions
        .iter()
        .map(|pi| successors(g, pi, &index))
        .collect();

    // Splits strictly increase the block count, so processing the most
    // refined partitions first sees every successor before its sources.
    let mut reach: Vec<Vec<u64>> = vec![vec![0u64; words]; count];
    let mut first_move = HashMap::new();
    let mut dominated = vec![false; count];
    let mut by_blocks: Vec<usize> = (0..count).collect();
    by_blocks.sort_by_key(|&i| std::cmp::Reverse(partitions[i].block_count()));
    for &p in &by_blocks {
        reach[p][p / 64] |= 1 << (p % 64);
        for &(s, rule) in &succ[p] {
            debug_assert!(partitions[s].block_count() > partitions[p].block_count());
            dominated[p] = true;
            let (dst, src) = two_rows(&mut reach, p, s);
            for w in 0..words {
                let new = src[w] & !dst[w];
                if new == 0 {
                    continue;
                }
                let mut bits = new;
                while bits != 0 {
                    let t = w * 64 + bits.trailing_zeros() as usize;
                    first_move.insert((p as u32, t as u32), (s as u32, rule));
                    bits &= bits - 1;
                }
                dst[w] |= new;
            }
        }
    }
    Ok(SplitClosure {
        partitions,
        index,
        reach,
        first_move,
        dominated,
    })
}

/// Single-split successors of a partition, deduplicated, in a fixed
/// deterministic order.
fn successors(
    g: &Graph,
    pi: &SetPartition,
    index: &HashMap<SetPartition, usize>,
) -> Vec<(usize, SplitRule)> {
    let blocks = pi.blocks();
    let mut seen: HashSet<usize> = HashSet::new();
    let mut out: Vec<(usize, SplitRule)> = Vec::new();
    let mut push = |target: SetPartition, rule: SplitRule, out: &mut Vec<_>| {
        let t = index[&target];
        if seen.insert(t) {
            out.push((t, rule));
        }
    };
    for (bi, block) in blocks.iter().enumerate() {
        if block.len() < 2 {
            continue;
        }
        let replace = |parts: Vec<Vec<usize>>| -> SetPartition {
            let mut all: Vec<Vec<usize>> = Vec::with_capacity(blocks.len() + 1);
            for (i, b) in blocks.iter().enumerate() {
                if i == bi {
                    all.extend(parts.iter().cloned());
                } else {
                    all.push(b.clone());
                }
            }
            SetPartition::from_blocks(pi.size(), &all).expect("valid split")
        };
        if block.len() == 2 {
            push(
                replace(vec![vec![block[0]], vec![block[1]]]),
                SplitRule::Doubleton,
                &mut out,
            );
        }
        if induced_acyclic(g, block) {
            // Binary splits generate the full closure of arbitrary
            // subdivisions of an acyclic block.
            let k = block.len();
            for sub in 0..(1u32 << (k - 1)) {
                let mut left = vec![block[0]];
                let mut right = Vec::new();
                for (j, &v) in block.iter().enumerate().skip(1) {
                    if sub >> (j - 1) & 1 == 1 {
                        left.push(v);
                    } else {
                        right.push(v);
                    }
                }
                if right.is_empty() {
                    continue;
                }
                push(replace(vec![left, right]), SplitRule::AcyclicBlock, &mut out);
            }
        }
        for (yi, &y) in block.iter().enumerate() {
            let attachments: usize = block
                .iter()
                .filter(|&&x| x != y)
                .map(|&x| g.multiplicity(x, y))
                .sum();
            if attachments <= 1 {
                let rest: Vec<usize> = block
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != yi)
                    .map(|(_, &v)| v)
                    .collect();
                push(
                    replace(vec![rest, vec![y]]),
                    SplitRule::SingleAttachment,
                    &mut out,
                );
            }
        }
    }
    out
}

fn two_rows(
    rows: &mut [Vec<u64>],
    dst: usize,
    src: usize,
) -> (&mut Vec<u64>, &Vec<u64>) {
    assert_ne!(dst, src);
    if dst < src {
        let (a, b) = rows.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(dst);
        (&mut b[0], &a[src])
    }
}

fn induced_acyclic(g: &Graph, block: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let inside = |v: usize| block.contains(&v);
    for &(u, v) in g.edges() {
        if !inside(u) || !inside(v) {
            continue;
        }
        if u == v {
            return false;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

// ---------------------------------------------------------------------------
// The relation matrix
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
enum Entry {
    Identity,
    Refinement, // d = 1
    Leq,
    NotLeq(Vec<usize>), // a d-heavy block
    Unknown,
}

/// The relation matrix of the cellule order over all refining pairs, with
/// certificates, plus the set of partitions not known to be dominated.
pub struct CelluleOrder {
    d: u32,
    closure: SplitClosure,
    entries: HashMap<(u32, u32), Entry>,
    /// Used only at d = 1, where the closure is bypassed.
    refinement_only: bool,
}

impl CelluleOrder {
    /// Builds the full matrix for a simple graph on at most 9 vertices,
    /// `d >= 1`. Construction fails with an inconsistency error if the two
    /// certificate kinds ever overlap (they cannot, unless there is a bug).
    pub fn new(g: &Graph, d: u32) -> Result<CelluleOrder> {
        let n = guard_order_input(g, "cellule_order_relations")?;
        if d < 1 {
            return Err(Error::InvalidParameter(
                "ambient dimension must be >= 1".into(),
            ));
        }
        let closure = split_closure(g)?;
        let mut entries = HashMap::new();

        if d == 1 {
            // Exactly the refinement order.
            let partitions = closure.partitions.clone();
            for (p, pi) in partitions.iter().enumerate() {
                for sigma in refinements_of(pi, n) {
                    let t = closure.index[&sigma];
                    let entry = if t == p { Entry::Identity } else { Entry::Refinement };
                    entries.insert((p as u32, t as u32), entry);
                }
            }
            return Ok(CelluleOrder {
                d,
                closure,
                entries,
                refinement_only: true,
            });
        }

        // d-heaviness of induced blocks, cached by vertex bitmask.
        let mut heavy_cache: HashMap<u64, bool> = HashMap::new();
        let mut heavy = |block: &[usize]| -> Result<bool> {
            let mask = block.iter().fold(0u64, |m, &v| m | 1 << v);
            if let Some(&h) = heavy_cache.get(&mask) {
                return Ok(h);
            }
            let (sub, _) = g.induced_subgraph(block)?;
            let h = is_d_heavy(&sub, d)?;
            heavy_cache.insert(mask, h);
            Ok(h)
        };

        for p in 0..closure.partitions.len() {
            let pi = closure.partitions[p].clone();
            let pi_blocks = pi.blocks();
            for sigma in refinements_of(&pi, n) {
                let t = closure.index[&sigma];
                if t == p {
                    entries.insert((p as u32, t as u32), Entry::Identity);
                    continue;
                }
                let reachable = closure.reaches(p, t);
                // A block of pi broken up by sigma whose induced subgraph is
                // d-heavy rules the relation out.
                let mut heavy_block = None;
                for b in &pi_blocks {
                    if b.len() < 2 || block_survives(b, &sigma) {
                        continue;
                    }
                    if heavy(b)? {
                        heavy_block = Some(b.clone());
                        break;
                    }
                }
                let entry = match (reachable, heavy_block) {
                    (true, Some(b)) => {
                        return Err(Error::Inconsistency(format!(
                            "pair ({pi}, {sigma}) is both split-reachable and blocked \
                             by d-heavy block {b:?}"
                        )));
                    }
                    (true, None) => Entry::Leq,
                    (false, Some(b)) => Entry::NotLeq(b),
                    (false, None) => Entry::Unknown,
                };
                entries.insert((p as u32, t as u32), entry);
            }
        }
        Ok(CelluleOrder {
            d,
            closure,
            entries,
            refinement_only: false,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    /// All partitions of the vertex set in restricted-growth lexicographic
    /// order.
    pub fn partitions(&self) -> &[SetPartition] {
        &self.closure.partitions
    }

    /// Status of the ordered pair `(pi, sigma)`.
    pub fn status(&self, pi: &SetPartition, sigma: &SetPartition) -> RelationStatus {
        if !sigma.refines(pi) {
            return RelationStatus::NotRefining;
        }
        let p = self.closure.index[pi] as u32;
        let t = self.closure.index[sigma] as u32;
        match self.entries.get(&(p, t)) {
            Some(Entry::Identity | Entry::Refinement | Entry::Leq) => RelationStatus::KnownLeq,
            Some(Entry::NotLeq(_)) => RelationStatus::KnownNotLeq,
            Some(Entry::Unknown) | None => RelationStatus::Unknown,
        }
    }

    /// The matrix rows for all refining pairs, sorted by `(pi, sigma)`.
    pub fn relations(&self) -> Vec<CelluleRelation> {
        let mut keys: Vec<(u32, u32)> = self.entries.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter()
            .map(|(p, t)| {
                let entry = &self.entries[&(p, t)];
                CelluleRelation {
                    pi: self.closure.partitions[p as usize].clone(),
                    sigma: self.closure.partitions[t as usize].clone(),
                    status: match entry {
                        Entry::Identity | Entry::Refinement | Entry::Leq => {
                            RelationStatus::KnownLeq
                        }
                        Entry::NotLeq(_) => RelationStatus::KnownNotLeq,
                        Entry::Unknown => RelationStatus::Unknown,
                    },
                    certificate: self.certificate(p, t, entry),
                }
            })
            .collect()
    }

    fn certificate(&self, p: u32, t: u32, entry: &Entry) -> String {
        match entry {
            Entry::Identity => "identity".into(),
            Entry::Refinement => "refinement order at ambient dimension 1".into(),
            Entry::NotLeq(block) => format!(
                "block {} induces a {}-heavy subgraph",
                format_block(block),
                self.d
            ),
            Entry::Unknown => String::new(),
            Entry::Leq => {
                let mut cur = p;
                let mut steps = Vec::new();
                while cur != t {
                    let (next, rule) = self.closure.first_move[&(cur, t)];
                    let split = split_block(
                        &self.closure.partitions[cur as usize],
                        &self.closure.partitions[next as usize],
                    );
                    steps.push(format!("split {} [{}]", format_block(&split), rule.label()));
                    cur = next;
                }
                steps.join("; ")
            }
        }
    }

    /// Partitions not `KNOWN_LEQ`-dominated by any other partition.
    pub fn maximal(&self) -> Vec<SetPartition> {
        if self.refinement_only {
            // Refinement order: only the discrete partition is undominated.
            let n = self.closure.partitions[0].size();
            return vec![SetPartition::discrete(n)];
        }
        (0..self.closure.partitions.len())
            .filter(|&p| !self.closure.dominated[p])
            .map(|p| self.closure.partitions[p].clone())
            .collect()
    }
}

/// All partitions refining `pi` (including `pi` itself), by subdividing each
/// block independently.
fn refinements_of(pi: &SetPartition, n: usize) -> Vec<SetPartition> {
    let blocks = pi.blocks();
    let options: Vec<Vec<Vec<Vec<usize>>>> = blocks
        .iter()
        .map(|b| {
            enumerate_partitions(b.len())
                .expect("block size within guard")
                .map(|sub| {
                    sub.blocks()
                        .iter()
                        .map(|sb| sb.iter().map(|&i| b[i]).collect())
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; blocks.len()];
    let mut out = Vec::new();
    loop {
        let mut all: Vec<Vec<usize>> = Vec::new();
        for (i, &c) in choice.iter().enumerate() {
            all.extend(options[i][c].iter().cloned());
        }
        out.push(SetPartition::from_blocks(n, &all).expect("valid refinement"));
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Whether `block` appears unchanged as a block of `sigma`.
fn block_survives(block: &[usize], sigma: &SetPartition) -> bool {
    let b = sigma.block_index(block[0]);
    sigma.blocks()[b] == block
}

/// The block of `pi` that was subdivided to obtain its successor.
fn split_block(pi: &SetPartition, succ: &SetPartition) -> Vec<usize> {
    pi.blocks()
        .into_iter()
        .find(|b| b.len() >= 2 && !block_survives(b, succ))
        .expect("successor splits one block")
}

fn format_block(block: &[usize]) -> String {
    let inner: Vec<String> = block.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

// ---------------------------------------------------------------------------
// Known-maximal cellules
// ---------------------------------------------------------------------------

/// Whether the returned maximal set is provably the full component list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Exactness {
    Exact,
    /// Unknown relations may hide dominations; the set is an upper bound.
    HeuristicUpperSet,
}

/// Partitions not known to be dominated in the cellule order, together with
/// an exactness flag. The set is provably exact for forests, cycles,
/// complete multipartite graphs at `d >= 3`, and everything at `d = 1`; for
/// other inputs it is an upper set of the true maxima, never silently
/// presented as exact.
pub fn maximal_cellules_known(g: &Graph, d: u32) -> Result<(Vec<SetPartition>, Exactness)> {
    let n = guard_order_input(g, "maximal_cellules_known")?;
    if d < 1 {
        return Err(Error::InvalidParameter(
            "ambient dimension must be >= 1".into(),
        ));
    }
    // One-dimensional pictures order by refinement, so only the discrete
    // partition is maximal; likewise every acyclic block splits, so forests
    // collapse onto the discrete cellule at any dimension.
    if d == 1 || g.is_forest() {
        return Ok((vec![SetPartition::discrete(n)], Exactness::Exact));
    }
    if is_cycle_graph(g) {
        return Ok((crate::cellule::components_cycle(n, d)?, Exactness::Exact));
    }
    let closure = split_closure(g)?;
    let maximal: Vec<SetPartition> = (0..closure.partitions.len())
        .filter(|&p| !closure.dominated[p])
        .map(|p| closure.partitions[p].clone())
        .collect();
    let exact = d >= 3 && detect_complete_multipartite(g).is_some();
    Ok((
        maximal,
        if exact {
            Exactness::Exact
        } else {
            Exactness::HeuristicUpperSet
        },
    ))
}

/// Whether the labeled graph is a single cycle.
pub fn is_cycle_graph(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n || !g.is_simple() || !g.is_connected() {
        return false;
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|&d| d == 2)
}

/// Recognizes complete multipartite graphs: the color classes are the
/// components of the complement, and every heterochromatic pair must be an
/// edge. Returns the coloring when the structure matches.
#[allow(clippy::needless_range_loop)]
pub fn detect_complete_multipartite(g: &Graph) -> Option<ColoredVertexSet> {
    if !g.is_simple() {
        return None;
    }
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    // Union non-adjacent pairs into classes.
    let mut class = (0..n).collect::<Vec<usize>>();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !adj[u][v] {
                let (ru, rv) = (find(&mut class, u), find(&mut class, v));
                if ru != rv {
                    class[ru.max(rv)] = ru.min(rv);
                }
            }
        }
    }
    // Classes must be independent, and all cross pairs adjacent.
    for u in 0..n {
        for v in (u + 1)..n {
            let same = find(&mut class, u) == find(&mut class, v);
            if same == adj[u][v] {
                return None;
            }
        }
    }
    let colors: Vec<usize> = (0..n).map(|v| find(&mut class, v)).collect();
    // Compress class representatives to contiguous color ids.
    let mut ids: Vec<usize> = colors.clone();
    ids.sort_unstable();
    ids.dedup();
    let remap: HashMap<usize, usize> = ids.into_iter().enumerate().map(|(i, r)| (r, i)).collect();
    let colors: Vec<usize> = colors.into_iter().map(|r| remap[&r]).collect();
    ColoredVertexSet::from_colors(&colors).ok()
}
