//! Minimum constraint dimension: the smallest ambient dimension in which the
//! picture space of a graph fails to be irreducible, or infinity for
//! forests.
//!
//! Three independent algorithms compute it, each with a witness:
//!
//! * brute force: `min over nonempty A` of `ceil(|A| / nul(A))`, scanning
//!   all edge subsets;
//! * flats: the same minimum restricted to edge sets of 2-connected induced
//!   subgraphs, which provably suffice;
//! * ears: the minimum of `ceil(total edges / k)` over partial ear
//!   decompositions `(C_1, ..., C_k)`, where each `C_i` is an induced cycle
//!   of the graph with the earlier ears contracted. An induced cycle of a
//!   multigraph is a loop, a parallel pair, or a chordless cycle of length
//!   at least 3 none of whose edges has a parallel copy.
//!
//! The `all` dispatch runs every applicable algorithm and refuses to answer
//! if they disagree.

use serde::Serialize;

use crate::error::{edge_guard, Error, Result};
use crate::graph::{validate_onion, EdgeSet, ExtNat, Graph};
use crate::tutte::is_irreducible_poincare;

const BRUTE_MAX_EDGES: usize = 22;
const EARS_MAX_EDGES: usize = 16;
const FLATS_MAX_VERTICES: usize = 22;

/// Which algorithm produced (or should produce) a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum McdMethod {
    Brute,
    Flats,
    Ears,
    All,
}

impl std::fmt::Display for McdMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            McdMethod::Brute => "brute",
            McdMethod::Flats => "flats",
            McdMethod::Ears => "ears",
            McdMethod::All => "all",
        };
        write!(f, "{s}")
    }
}

/// A structure achieving the reported minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum McdWitness {
    /// A minimizing edge subset (sorted indices).
    EdgeSet { edges: Vec<usize> },
    /// The edge set of a 2-connected induced subgraph, with its vertices.
    Flat {
        vertices: Vec<usize>,
        edges: Vec<usize>,
    },
    /// A partial ear decomposition, each ear as sorted host edge indices.
    EarSequence { ears: Vec<Vec<usize>> },
}

/// The minimum constraint dimension with a witness and the method tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McdResult {
    #[serde(rename = "mcd")]
    pub value: ExtNat,
    pub method: McdMethod,
    pub witness: Option<McdWitness>,
}

impl McdResult {
    fn infinite(method: McdMethod) -> McdResult {
        McdResult {
            value: ExtNat::Infinity,
            method,
            witness: None,
        }
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn require_simple_connected(g: &Graph, what: &str) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::HypothesisViolation(format!(
            "{what} requires a simple graph"
        )));
    }
    if !g.is_connected() {
        return Err(Error::HypothesisViolation(format!(
            "{what} requires a connected graph"
        )));
    }
    Ok(())
}

/// `min over nonempty A` of `ceil(|A| / nul(A))` by scanning all `2^|E|`
/// subsets; the witness is the smallest bitmask among the minimizers.
pub fn mcd_bruteforce(g: &Graph) -> Result<McdResult> {
    require_simple_connected(g, "mcd_bruteforce")?;
    let m = g.edge_count();
    let limit = edge_guard(BRUTE_MAX_EDGES);
    if m > limit {
        return Err(Error::SizeLimit {
            operation: "mcd_bruteforce",
            limit,
            actual: m,
        });
    }
    let mut best: Option<(u64, u64)> = None; // (value, mask)
    for mask in 1u64..(1u64 << m) {
        let a = EdgeSet(mask as u128);
        let nul = g.nullity(a);
        if nul == 0 {
            continue;
        }
        let v = ceil_div(a.len() as u64, nul as u64);
        if best.is_none_or(|(bv, _)| v < bv) {
            best = Some((v, mask));
        }
    }
    Ok(match best {
        None => McdResult::infinite(McdMethod::Brute),
        Some((v, mask)) => McdResult {
            value: ExtNat::Finite(v),
            method: McdMethod::Brute,
            witness: Some(McdWitness::EdgeSet {
                edges: EdgeSet(mask as u128).indices(),
            }),
        },
    })
}

/// The same minimum restricted to indecomposable flats of the graphic
/// matroid, i.e. edge sets of 2-connected induced subgraphs.
pub fn mcd_flats(g: &Graph) -> Result<McdResult> {
    require_simple_connected(g, "mcd_flats")?;
    if g.vertex_count() > FLATS_MAX_VERTICES {
        return Err(Error::SizeLimit {
            operation: "mcd_flats",
            limit: FLATS_MAX_VERTICES,
            actual: g.vertex_count(),
        });
    }
    let mut best: Option<(u64, EdgeSet)> = None;
    for set in g.two_connected_induced_edge_sets()? {
        let nul = g.nullity(set);
        debug_assert!(nul >= 1);
        let v = ceil_div(set.len() as u64, nul as u64);
        if best.is_none_or(|(bv, _)| v < bv) {
            best = Some((v, set));
        }
    }
    Ok(match best {
        None => McdResult::infinite(McdMethod::Flats),
        Some((v, set)) => {
            let edges = set.indices();
            let mut vertices: Vec<usize> = edges
                .iter()
                .flat_map(|&i| {
                    let (u, w) = g.edges()[i];
                    [u, w]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            McdResult {
                value: ExtNat::Finite(v),
                method: McdMethod::Flats,
                witness: Some(McdWitness::Flat { vertices, edges }),
            }
        }
    })
}

/// Minimum of `ceil(sum of ear sizes / number of ears)` over all partial ear
/// decompositions, by depth-first search over induced cycles of iterated
/// contractions. Branches that cannot beat the incumbent are pruned.
pub fn mcd_ears(g: &Graph) -> Result<McdResult> {
    require_simple_connected(g, "mcd_ears")?;
    let m = g.edge_count();
    let limit = edge_guard(EARS_MAX_EDGES);
    if m > limit {
        return Err(Error::SizeLimit {
            operation: "mcd_ears",
            limit,
            actual: m,
        });
    }
    let mut state = EarsSearch {
        best: ExtNat::Infinity,
        witness: None,
    };
    let origin: Vec<usize> = (0..m).collect();
    let mut prefix = Vec::new();
    state.dfs(g, &origin, 0, 0, &mut prefix);
    Ok(match state.best {
        ExtNat::Infinity => McdResult::infinite(McdMethod::Ears),
        value => McdResult {
            value,
            method: McdMethod::Ears,
            witness: Some(McdWitness::EarSequence {
                ears: state.witness.unwrap(),
            }),
        },
    })
}

struct EarsSearch {
    best: ExtNat,
    witness: Option<Vec<Vec<usize>>>,
}

impl EarsSearch {
    fn dfs(&mut self, h: &Graph, origin: &[usize], k: u64, sum: u64, prefix: &mut Vec<Vec<usize>>) {
        if k >= 1 {
            let v = ExtNat::Finite(ceil_div(sum, k));
            if v < self.best {
                self.best = v;
                self.witness = Some(prefix.clone());
            }
        }
        let remaining = h.edge_count() as u64;
        if remaining == 0 {
            return;
        }
        // Any extension by j >= 1 disjoint ears totaling f <= remaining edges
        // scores at least ceil((sum + remaining) / (k + remaining)).
        let bound = ExtNat::Finite(ceil_div(sum + remaining, k + remaining));
        if bound >= self.best {
            return;
        }
        for cycle in induced_cycles(h) {
            let set = EdgeSet::from_indices(&cycle).expect("guarded edge count");
            let (h2, edge_map, _) = h.contract_traced(set);
            let origin2: Vec<usize> = edge_map.iter().map(|&e| origin[e]).collect();
            let mut ear: Vec<usize> = cycle.iter().map(|&e| origin[e]).collect();
            ear.sort_unstable();
            prefix.push(ear);
            self.dfs(&h2, &origin2, k + 1, sum + cycle.len() as u64, prefix);
            prefix.pop();
        }
    }
}

/// Induced cycles of a multigraph, as sorted edge-index lists in a fixed
/// deterministic order: loops, then one parallel pair per doubled vertex
/// pair, then chordless simple cycles.
fn induced_cycles(h: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for (i, &(u, v)) in h.edges().iter().enumerate() {
        if u == v {
            out.push(vec![i]);
        }
    }
    // Parallel classes: copies beyond the first two are interchangeable by
    // an automorphism, so one representative pair suffices.
    let mut i = 0;
    while i < h.edge_count() {
        let e = h.edges()[i];
        let mut j = i + 1;
        while j < h.edge_count() && h.edges()[j] == e {
            j += 1;
        }
        if e.0 != e.1 && j - i >= 2 {
            out.push(vec![i, i + 1]);
        }
        i = j;
    }
    out.extend(chordless_cycles(h));
    out
}

/// Chordless simple cycles of length >= 3 whose edges all have multiplicity
/// one, as sorted edge-index lists.
fn chordless_cycles(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.vertex_count();
    let adj = h.simple_adjacency();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn extend(
        h: &Graph,
        adj: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        for &v in &adj[u] {
            if v == start && path.len() >= 3 {
                // Canonical orientation: second vertex below the last.
                if path[1] < path[path.len() - 1] {
                    record_if_induced(h, adj, path, cycles);
                }
            } else if v > start && !on_path[v] {
                path.push(v);
                on_path[v] = true;
                extend(h, adj, start, path, on_path, cycles);
                on_path[v] = false;
                path.pop();
            }
        }
    }

    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend(h, &adj, s, &mut path, &mut on_path, &mut cycles);
        on_path[s] = false;
        path.pop();
    }
    cycles.sort();
    cycles.dedup();
    cycles
}

fn record_if_induced(
    h: &Graph,
    adj: &[Vec<usize>],
    path: &[usize],
    cycles: &mut Vec<Vec<usize>>,
) {
    let k = path.len();
    // Chordless: vertices at cycle distance >= 2 must not be adjacent.
    for i in 0..k {
        for j in (i + 2)..k {
            if i == 0 && j == k - 1 {
                continue; // consecutive around the cycle
            }
            if adj[path[i]].contains(&path[j]) {
                return;
            }
        }
    }
    let mut edges = Vec::with_capacity(k);
    for i in 0..k {
        let (u, v) = (path[i], path[(i + 1) % k]);
        if h.multiplicity(u, v) != 1 {
            return; // an edge with a parallel copy is not induced
        }
        let key = (u.min(v), u.max(v));
        let idx = h.edges().iter().position(|&e| e == key).unwrap();
        edges.push(idx);
    }
    edges.sort_unstable();
    cycles.push(edges);
}

/// Dispatch: a single algorithm, or `all` to run every algorithm whose size
/// guard admits the input and insist that they agree.
pub fn mcd(g: &Graph, method: McdMethod) -> Result<McdResult> {
    match method {
        McdMethod::Brute => mcd_bruteforce(g),
        McdMethod::Flats => mcd_flats(g),
        McdMethod::Ears => mcd_ears(g),
        McdMethod::All => {
            let mut results: Vec<McdResult> = Vec::new();
            let mut first_err: Option<Error> = None;
            for run in [mcd_bruteforce, mcd_flats, mcd_ears] {
                match run(g) {
                    Ok(r) => results.push(r),
                    Err(e @ Error::SizeLimit { .. }) => {
                        first_err.get_or_insert(e);
                    }
                    Err(e) => return Err(e),
                }
            }
            let Some(first) = results.first().cloned() else {
                return Err(first_err.expect("no result and no size error"));
            };
            if results.iter().any(|r| r.value != first.value) {
                let summary: Vec<String> = results
                    .iter()
                    .map(|r| format!("{}={}", r.method, r.value))
                    .collect();
                return Err(Error::Inconsistency(format!(
                    "mcd algorithms disagree: {}",
                    summary.join(", ")
                )));
            }
            Ok(McdResult {
                value: first.value,
                method: McdMethod::All,
                witness: first.witness,
            })
        }
    }
}

/// Closed form for onion graphs: with path lengths sorted ascending, the
/// minimum over `r >= 2` of `ceil((a_1 + ... + a_r) / (r - 1))`. Each union
/// of the `r` shortest paths is an edge set of nullity `r - 1`, so the
/// ceiling applies inside the minimum.
pub fn mcd_onion_closed_form(lengths: &[usize]) -> Result<u64> {
    let lens = validate_onion(lengths)?;
    let mut best = u64::MAX;
    let mut sum = lens[0] as u64;
    for r in 2..=lens.len() {
        sum += lens[r - 1] as u64;
        best = best.min(ceil_div(sum, r as u64 - 1));
    }
    Ok(best)
}

/// Joint report for the girth inequality.
#[derive(Clone, Debug, Serialize)]
pub struct GirthBoundReport {
    pub mcd: u64,
    pub girth: u64,
    pub holds: bool,
}

/// Computes the minimum constraint dimension and the girth and asserts the
/// bound `mcd <= girth` (it always holds; a violation is an internal error).
pub fn girth_bound_check(g: &Graph) -> Result<GirthBoundReport> {
    require_simple_connected(g, "girth_bound_check")?;
    if g.is_forest() {
        return Err(Error::HypothesisViolation(
            "girth_bound_check requires a cycle (graph is a forest)".into(),
        ));
    }
    let girth = g.girth().finite().expect("non-forest has finite girth");
    let result = mcd(g, McdMethod::All)?;
    let value = result.value.finite().ok_or_else(|| {
        Error::Inconsistency("non-forest graph reported infinite mcd".into())
    })?;
    if value > girth {
        return Err(Error::Inconsistency(format!(
            "mcd {value} exceeds girth {girth}"
        )));
    }
    Ok(GirthBoundReport {
        mcd: value,
        girth,
        holds: true,
    })
}

/// For each `d` up to `d_max`, the subset criterion (`d * nul(A) < |A|` for
/// every nonempty `A`, evaluated through the brute-force minimum) and the
/// Poincaré monic-degree criterion, asserted equal.
pub fn irreducibility_range(g: &Graph, d_max: u32) -> Result<Vec<(u32, bool)>> {
    if !(1..=10).contains(&d_max) {
        return Err(Error::InvalidParameter(
            "irreducibility range supports 1 <= d_max <= 10".into(),
        ));
    }
    if g.vertex_count() > 8 {
        return Err(Error::SizeLimit {
            operation: "irreducibility_range",
            limit: 8,
            actual: g.vertex_count(),
        });
    }
    // min over A of ceil(|A|/nul(A)) <= d  iff  some A has d*nul(A) >= |A|,
    // so one brute scan answers the subset criterion for every d.
    let brute = mcd_bruteforce(g)?;
    let mut out = Vec::with_capacity(d_max as usize);
    for d in 1..=d_max {
        let subset_criterion = match brute.value {
            ExtNat::Infinity => true,
            ExtNat::Finite(m) => (d as u64) < m,
        };
        let poincare_criterion = is_irreducible_poincare(g, d)?;
        if subset_criterion != poincare_criterion {
            return Err(Error::Inconsistency(format!(
                "at d = {d}: subset criterion says {subset_criterion}, \
                 Poincare criterion says {poincare_criterion}"
            )));
        }
        out.push((d, subset_criterion));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Ear sequences as first-class witnesses
// ---------------------------------------------------------------------------

/// An ordered list of pairwise disjoint edge sets, each an induced cycle of
/// the host graph with the earlier ears contracted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarSequence {
    pub ears: Vec<Vec<usize>>,
}

impl EarSequence {
    pub fn new(ears: Vec<Vec<usize>>) -> EarSequence {
        EarSequence { ears }
    }

    /// Checks the defining invariants against a host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.edge_count()];
        for ear in &self.ears {
            for &e in ear {
                if e >= g.edge_count() {
                    return Err(Error::InvalidParameter(format!(
                        "ear edge index {e} outside host"
                    )));
                }
                if used[e] {
                    return Err(Error::InvalidParameter(
                        "ears are not pairwise disjoint".into(),
                    ));
                }
                used[e] = true;
            }
        }
        // Walk the contractions and check each ear is an induced cycle.
        let mut h = g.clone();
        let mut origin: Vec<usize> = (0..g.edge_count()).collect();
        for (step, ear) in self.ears.iter().enumerate() {
            let local: Vec<usize> = ear
                .iter()
                .map(|&e| {
                    origin.iter().position(|&o| o == e).ok_or_else(|| {
                        Error::InvalidParameter(format!(
                            "ear {step} uses edge {e} already contracted away"
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            let mut sorted = local.clone();
            sorted.sort_unstable();
            if !induced_cycles(&h).contains(&sorted) {
                return Err(Error::InvalidParameter(format!(
                    "ear {step} is not an induced cycle after contraction"
                )));
            }
            let set = EdgeSet::from_indices(&sorted)?;
            let (h2, edge_map, _) = h.contract_traced(set);
            origin = edge_map.iter().map(|&e| origin[e]).collect();
            h = h2;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(r: &McdResult) -> ExtNat {
        r.value
    }

    #[test]
    fn cycles_have_mcd_n() {
        for n in 3..=9 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(value(&mcd_bruteforce(&c).unwrap()), ExtNat::Finite(n as u64));
            assert_eq!(value(&mcd_flats(&c).unwrap()), ExtNat::Finite(n as u64));
            assert_eq!(value(&mcd_ears(&c).unwrap()), ExtNat::Finite(n as u64));
        }
    }

    #[test]
    fn brute_force_examples() {
        let k23 = Graph::onion(&[2, 2, 2]).unwrap();
        let r = mcd_bruteforce(&k23).unwrap();
        assert_eq!(r.value, ExtNat::Finite(3));
        // The minimizer is the full edge set: 6 edges, nullity 2.
        assert_eq!(
            r.witness,
            Some(McdWitness::EdgeSet {
                edges: (0..6).collect()
            })
        );

        let path = Graph::path(5).unwrap();
        let r = mcd_bruteforce(&path).unwrap();
        assert_eq!(r.value, ExtNat::Infinity);
        assert!(r.witness.is_none());
    }

    #[test]
    fn flats_examples() {
        let bowtie =
            Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = mcd_flats(&bowtie).unwrap();
        assert_eq!(r.value, ExtNat::Finite(3));
        match r.witness.unwrap() {
            McdWitness::Flat { vertices, edges } => {
                assert_eq!(vertices.len(), 3);
                assert_eq!(edges.len(), 3);
            }
            w => panic!("unexpected witness {w:?}"),
        }

        let k4 = Graph::complete(4).unwrap();
        let r = mcd_flats(&k4).unwrap();
        assert_eq!(r.value, ExtNat::Finite(2));
        match r.witness.unwrap() {
            McdWitness::Flat { edges, .. } => assert_eq!(edges, (0..6).collect::<Vec<_>>()),
            w => panic!("unexpected witness {w:?}"),
        }

        assert_eq!(
            value(&mcd_flats(&Graph::cycle(6).unwrap()).unwrap()),
            ExtNat::Finite(6)
        );
    }

    #[test]
    fn ears_examples() {
        let tri = Graph::cycle(3).unwrap();
        let r = mcd_ears(&tri).unwrap();
        assert_eq!(r.value, ExtNat::Finite(3));
        match r.witness.clone().unwrap() {
            McdWitness::EarSequence { ears } => {
                assert_eq!(ears, vec![vec![0, 1, 2]]);
                EarSequence::new(ears).validate(&tri).unwrap();
            }
            w => panic!("unexpected witness {w:?}"),
        }

        // K_{2,3}: a 4-cycle, then the leftover path contracts to a
        // parallel pair, giving ceil(6/2) = 3.
        let k23 = Graph::onion(&[2, 2, 2]).unwrap();
        let r = mcd_ears(&k23).unwrap();
        assert_eq!(r.value, ExtNat::Finite(3));
        match r.witness.clone().unwrap() {
            McdWitness::EarSequence { ears } => {
                assert_eq!(ears.len(), 2);
                assert_eq!(ears[0].len(), 4);
                assert_eq!(ears[1].len(), 2);
                EarSequence::new(ears).validate(&k23).unwrap();
            }
            w => panic!("unexpected witness {w:?}"),
        }

        assert_eq!(
            value(&mcd_ears(&Graph::cycle(5).unwrap()).unwrap()),
            ExtNat::Finite(5)
        );
    }

    #[test]
    fn dispatch_and_agreement() {
        let r = mcd(&Graph::cycle(7).unwrap(), McdMethod::All).unwrap();
        assert_eq!(r.value, ExtNat::Finite(7));
        assert_eq!(r.method, McdMethod::All);

        let r = mcd(&Graph::complete(4).unwrap(), McdMethod::All).unwrap();
        assert_eq!(r.value, ExtNat::Finite(2));

        let tree = Graph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        let r = mcd(&tree, McdMethod::All).unwrap();
        assert_eq!(r.value, ExtNat::Infinity);
    }

    #[test]
    fn onion_closed_form() {
        assert_eq!(mcd_onion_closed_form(&[2, 2, 2]).unwrap(), 3);
        for (a, b) in [(2, 2), (2, 3), (1, 4), (3, 4)] {
            assert_eq!(mcd_onion_closed_form(&[a, b]).unwrap(), (a + b) as u64);
        }
        assert_eq!(mcd_onion_closed_form(&[1, 3, 3]).unwrap(), 4);
        assert!(mcd_onion_closed_form(&[2]).is_err());
        assert!(mcd_onion_closed_form(&[1, 1, 2]).is_err());
    }

    #[test]
    fn onion_closed_form_matches_brute_force() {
        // k <= 4 paths, lengths up to 4, valid parameter sets only.
        let mut cases: Vec<Vec<usize>> = Vec::new();
        for k in 2..=4usize {
            let mut tuple = vec![1usize; k];
            loop {
                if tuple.windows(2).all(|w| w[0] <= w[1])
                    && tuple.iter().filter(|&&a| a == 1).count() <= 1
                {
                    cases.push(tuple.clone());
                }
                let mut i = 0;
                loop {
                    if i == k {
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] <= 4 {
                        break;
                    }
                    tuple[i] = 1;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        assert!(!cases.is_empty());
        for lens in cases {
            let g = Graph::onion(&lens).unwrap();
            let brute = mcd_bruteforce(&g).unwrap().value;
            assert_eq!(
                ExtNat::Finite(mcd_onion_closed_form(&lens).unwrap()),
                brute,
                "onion {lens:?}"
            );
        }
    }

    #[test]
    fn girth_bound_examples() {
        let report = girth_bound_check(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!((report.mcd, report.girth, report.holds), (6, 6, true));

        let report = girth_bound_check(&Graph::onion(&[2, 2, 2]).unwrap()).unwrap();
        assert_eq!((report.mcd, report.girth), (3, 4));

        let report = girth_bound_check(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!((report.mcd, report.girth), (2, 3));

        assert!(girth_bound_check(&Graph::path(4).unwrap()).is_err());
    }

    #[test]
    fn irreducibility_range_examples() {
        let out = irreducibility_range(&Graph::cycle(4).unwrap(), 6).unwrap();
        let irr: Vec<u32> = out.iter().filter(|&&(_, i)| i).map(|&(d, _)| d).collect();
        assert_eq!(irr, vec![1, 2, 3]);

        let out = irreducibility_range(&Graph::complete(4).unwrap(), 4).unwrap();
        let irr: Vec<u32> = out.iter().filter(|&&(_, i)| i).map(|&(d, _)| d).collect();
        assert_eq!(irr, vec![1]);

        let out = irreducibility_range(&Graph::path(4).unwrap(), 6).unwrap();
        assert!(out.iter().all(|&(_, i)| i));
    }

    #[test]
    fn ear_sequence_validation_rejects_bad_sequences() {
        let k23 = Graph::onion(&[2, 2, 2]).unwrap();
        // Overlapping ears.
        let bad = EarSequence::new(vec![vec![0, 1, 2, 3], vec![3, 4]]);
        assert!(bad.validate(&k23).is_err());
        // An arbitrary non-cycle edge set.
        let bad = EarSequence::new(vec![vec![0, 1]]);
        assert!(bad.validate(&k23).is_err());
    }

    #[test]
    fn induced_cycles_in_multigraphs() {
        // A triple edge yields exactly one representative parallel pair.
        let g = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(induced_cycles(&g), vec![vec![0, 1]]);

        // Loop plus parallel pair plus triangle.
        let g = Graph::new(3, vec![(0, 0), (0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let cycles = induced_cycles(&g);
        assert!(cycles.contains(&vec![0]));
        assert!(cycles.contains(&vec![1, 2]));
        // The "triangle" uses a doubled edge, so it is not induced.
        assert_eq!(cycles.len(), 2);

        // In K_4 only triangles are chordless.
        let k4 = Graph::complete(4).unwrap();
        let cycles = induced_cycles(&k4);
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }
}
