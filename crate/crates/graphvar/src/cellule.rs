//! Cellule dimensions, `d`-heaviness, the ball-box model, and component
//! classifications.
//!
//! The cellule of a set partition `pi` has dimension
//! `d*|pi| + (d-1)*delta(pi, G)`, where `delta` counts edges with both
//! endpoints in one block. A graph is `d`-heavy when the indiscrete cellule
//! attains the maximum of that quantity (ties allowed). For complete
//! multipartite graphs a partition is conveniently viewed as colored balls
//! in boxes, and a short list of box mergers that never decrease the
//! dimension shows every such graph (beyond the acyclic ones and `K_{2,2}`)
//! is `d`-heavy for `d >= 3`; the same mergers drive the component
//! classifications at the bottom of this module.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColoredVertexSet, Graph};
use crate::partition::{enumerate_partitions, SetPartition};

/// Number of edges with both endpoints in the same block of `pi`.
pub fn delta(g: &Graph, pi: &SetPartition) -> usize {
    assert_eq!(
        pi.size(),
        g.vertex_count(),
        "partition does not match the vertex set"
    );
    g.edges()
        .iter()
        .filter(|&&(u, v)| pi.block_index(u) == pi.block_index(v))
        .count()
}

/// Dimension of the cellule of `pi`: `d*|pi| + (d-1)*delta(pi, G)`.
pub fn cellule_dimension(g: &Graph, pi: &SetPartition, d: u32) -> u64 {
    d as u64 * pi.block_count() as u64 + (d as u64 - 1) * delta(g, pi) as u64
}

/// Whether the indiscrete cellule has maximum dimension among all cellules
/// (not necessarily uniquely). Exhaustive partition scan; `d >= 2`.
pub fn is_d_heavy(g: &Graph, d: u32) -> Result<bool> {
    if d < 2 {
        return Err(Error::InvalidParameter("d-heaviness requires d >= 2".into()));
    }
    let n = g.vertex_count();
    let indiscrete = cellule_dimension(g, &SetPartition::indiscrete(n), d);
    for pi in enumerate_partitions(n)? {
        if cellule_dimension(g, &pi, d) > indiscrete {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Balls in boxes
// ---------------------------------------------------------------------------

/// Colored balls in boxes: `counts[i][j]` is the number of balls of color
/// `j` in box `i`. Rows are nonempty. Encodes a partition of a complete
/// multipartite vertex set up to the data that the cellule dimension
/// depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallBoxConfig {
    counts: Vec<Vec<u64>>,
}

impl BallBoxConfig {
    pub fn new(counts: Vec<Vec<u64>>) -> Result<BallBoxConfig> {
        if counts.is_empty() {
            return Err(Error::InvalidParameter("no boxes".into()));
        }
        let colors = counts[0].len();
        if counts.iter().any(|row| row.len() != colors) {
            return Err(Error::InvalidParameter("ragged ball-box matrix".into()));
        }
        if counts.iter().any(|row| row.iter().sum::<u64>() == 0) {
            return Err(Error::InvalidParameter("empty box".into()));
        }
        Ok(BallBoxConfig { counts })
    }

    /// The configuration of a partition of a colored vertex set: one box per
    /// block, in block order.
    pub fn from_partition(colors: &ColoredVertexSet, pi: &SetPartition) -> BallBoxConfig {
        assert_eq!(pi.size(), colors.total());
        let mut counts = vec![vec![0u64; colors.color_count()]; pi.block_count()];
        for v in 0..colors.total() {
            counts[pi.block_index(v)][colors.color_of(v)] += 1;
        }
        BallBoxConfig { counts }
    }

    pub fn box_count(&self) -> usize {
        self.counts.len()
    }

    pub fn color_count(&self) -> usize {
        self.counts[0].len()
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// Balls of each color over all boxes.
    pub fn column_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.color_count()];
        for row in &self.counts {
            for (j, &b) in row.iter().enumerate() {
                sums[j] += b;
            }
        }
        sums
    }

    fn distinct_colors(&self, i: usize) -> usize {
        self.counts[i].iter().filter(|&&b| b > 0).count()
    }

    /// Merges the given boxes into one, placed at the smallest index.
    fn merged(&self, boxes: &[usize]) -> BallBoxConfig {
        let mut merged_row = vec![0u64; self.color_count()];
        for &i in boxes {
            for (j, &b) in self.counts[i].iter().enumerate() {
                merged_row[j] += b;
            }
        }
        let target = *boxes.iter().min().unwrap();
        let mut counts = Vec::with_capacity(self.counts.len() - boxes.len() + 1);
        for (i, row) in self.counts.iter().enumerate() {
            if i == target {
                counts.push(merged_row.clone());
            } else if !boxes.contains(&i) {
                counts.push(row.clone());
            }
        }
        BallBoxConfig { counts }
    }
}

/// Ball-box reading of the cellule dimension: `d` per box plus `d-1` per
/// heterochromatic pair sharing a box.
pub fn ballbox_dimension(cfg: &BallBoxConfig, d: u32) -> u64 {
    let mut het = 0u64;
    for row in &cfg.counts {
        let total: u64 = row.iter().sum();
        let squares: u64 = row.iter().map(|&b| b * b).sum();
        het += (total * total - squares) / 2;
    }
    d as u64 * cfg.box_count() as u64 + (d as u64 - 1) * het
}

/// The seven box mergers that never decrease the cellule dimension for
/// `d >= 3`. Color names are mnemonic: "red" stands for any color, "orange"
/// and "green" for further pairwise-distinct colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MergeRule {
    /// Two reds in the first box, an orange anywhere in the second.
    DoublePlusOther,
    /// Both boxes contain a red and an orange.
    TwoMixedPairs,
    /// Red and orange in the first box, a green in the second.
    MixedPairPlusThird,
    /// At least three colors in the first box; the second is arbitrary.
    TricolorPlusAny,
    /// Three boxes holding a red, an orange, and a green respectively.
    ThreeDistinctSingles,
    /// Red and orange in the first box, a red in the second, an orange in
    /// the third.
    MixedPairPlusEach,
    /// Three boxes with a red each and two boxes with an orange each.
    ThreeRedsTwoOranges,
}

impl MergeRule {
    pub const ALL: [MergeRule; 7] = [
        MergeRule::DoublePlusOther,
        MergeRule::TwoMixedPairs,
        MergeRule::MixedPairPlusThird,
        MergeRule::TricolorPlusAny,
        MergeRule::ThreeDistinctSingles,
        MergeRule::MixedPairPlusEach,
        MergeRule::ThreeRedsTwoOranges,
    ];

    /// Number of boxes the rule merges.
    pub fn arity(self) -> usize {
        match self {
            MergeRule::DoublePlusOther
            | MergeRule::TwoMixedPairs
            | MergeRule::MixedPairPlusThird
            | MergeRule::TricolorPlusAny => 2,
            MergeRule::ThreeDistinctSingles | MergeRule::MixedPairPlusEach => 3,
            MergeRule::ThreeRedsTwoOranges => 5,
        }
    }

    /// Guaranteed lower bound on the dimension change at ambient dimension
    /// `d`: `d-2` for the two-box rules, `d-3` for the three-box rules,
    /// `2d-6` for the five-box rule.
    pub fn delta_lower_bound(self, d: u32) -> i64 {
        let d = d as i64;
        match self.arity() {
            2 => d - 2,
            3 => d - 3,
            5 => 2 * d - 6,
            _ => unreachable!(),
        }
    }

    fn check(self, cfg: &BallBoxConfig, boxes: &[usize]) -> Result<()> {
        let fail = |msg: &str| {
            Err(Error::HypothesisViolation(format!(
                "merge rule {self:?}: {msg}"
            )))
        };
        let row = |i: usize| &cfg.counts()[boxes[i]];
        let has = |i: usize, c: usize| row(i)[c] > 0;
        let colors = 0..cfg.color_count();
        match self {
            MergeRule::DoublePlusOther => {
                let ok = colors.clone().any(|c| {
                    row(0)[c] >= 2 && colors.clone().any(|o| o != c && has(1, o))
                });
                if !ok {
                    return fail(
                        "needs two balls of one color in the first box and a ball \
                         of a different color in the second",
                    );
                }
            }
            MergeRule::TwoMixedPairs => {
                let ok = colors.clone().any(|c| {
                    colors
                        .clone()
                        .any(|o| o != c && has(0, c) && has(0, o) && has(1, c) && has(1, o))
                });
                if !ok {
                    return fail("needs the same two colors present in both boxes");
                }
            }
            MergeRule::MixedPairPlusThird => {
                let ok = colors.clone().any(|c1| {
                    colors.clone().any(|c2| {
                        c1 < c2
                            && has(0, c1)
                            && has(0, c2)
                            && colors.clone().any(|c3| c3 != c1 && c3 != c2 && has(1, c3))
                    })
                });
                if !ok {
                    return fail(
                        "needs two colors in the first box and a third color in the second",
                    );
                }
            }
            MergeRule::TricolorPlusAny => {
                if cfg.distinct_colors(boxes[0]) < 3 {
                    return fail("needs at least three colors in the first box");
                }
            }
            MergeRule::ThreeDistinctSingles => {
                let ok = colors.clone().any(|c1| {
                    colors.clone().any(|c2| {
                        colors.clone().any(|c3| {
                            c1 != c2
                                && c1 != c3
                                && c2 != c3
                                && has(0, c1)
                                && has(1, c2)
                                && has(2, c3)
                        })
                    })
                });
                if !ok {
                    return fail("needs three pairwise distinct colors across the three boxes");
                }
            }
            MergeRule::MixedPairPlusEach => {
                let ok = colors.clone().any(|c| {
                    colors.clone().any(|o| {
                        c != o && has(0, c) && has(0, o) && has(1, c) && has(2, o)
                    })
                });
                if !ok {
                    return fail(
                        "needs a two-color box plus one box of each of those colors",
                    );
                }
            }
            MergeRule::ThreeRedsTwoOranges => {
                let ok = colors.clone().any(|c| {
                    colors.clone().any(|o| {
                        c != o
                            && has(0, c)
                            && has(1, c)
                            && has(2, c)
                            && has(3, o)
                            && has(4, o)
                    })
                });
                if !ok {
                    return fail(
                        "needs one color in the first three boxes and another in the last two",
                    );
                }
            }
        }
        Ok(())
    }
}

/// Applies a merge rule to the named boxes (roles in argument order),
/// returning the merged configuration and the exact dimension change.
pub fn apply_merge_rule(
    cfg: &BallBoxConfig,
    rule: MergeRule,
    boxes: &[usize],
    d: u32,
) -> Result<(BallBoxConfig, i64)> {
    if d < 2 {
        return Err(Error::InvalidParameter("merge rules require d >= 2".into()));
    }
    if boxes.len() != rule.arity() {
        return Err(Error::InvalidParameter(format!(
            "merge rule {:?} takes {} boxes, got {}",
            rule,
            rule.arity(),
            boxes.len()
        )));
    }
    let mut sorted = boxes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != boxes.len() || sorted.iter().any(|&i| i >= cfg.box_count()) {
        return Err(Error::InvalidParameter(
            "merge boxes must be distinct and in range".into(),
        ));
    }
    rule.check(cfg, boxes)?;
    let merged = cfg.merged(boxes);
    let delta = ballbox_dimension(&merged, d) as i64 - ballbox_dimension(cfg, d) as i64;
    Ok((merged, delta))
}

/// One step of [`merge_to_indiscrete`].
#[derive(Clone, Debug, Serialize)]
pub struct MergeStep {
    pub rule: MergeRule,
    pub boxes: Vec<usize>,
    pub delta: i64,
}

/// Merges all boxes into one, step by step, with every step a valid merge
/// rule application whose dimension change is nonnegative (`d >= 3`).
///
/// The configuration must come from a complete multipartite graph that is
/// neither acyclic nor `K_{2,2}`: at least three colors, or two colors with
/// class sizes at least 3 and 2.
pub fn merge_to_indiscrete(cfg: &BallBoxConfig, d: u32) -> Result<Vec<MergeStep>> {
    if d < 3 {
        return Err(Error::InvalidParameter(
            "merge_to_indiscrete requires d >= 3".into(),
        ));
    }
    let mut qs: Vec<u64> = cfg.column_sums().into_iter().filter(|&q| q > 0).collect();
    qs.sort_unstable_by(|a, b| b.cmp(a));
    match qs.len() {
        0 | 1 => {
            return Err(Error::HypothesisViolation(
                "monochromatic vertex set is acyclic".into(),
            ))
        }
        2 if qs[1] == 1 => {
            return Err(Error::HypothesisViolation(
                "a star is acyclic".into(),
            ))
        }
        2 if qs == [2, 2] => {
            return Err(Error::HypothesisViolation(
                "K_{2,2} is excluded from the merging argument".into(),
            ))
        }
        _ => {}
    }
    let bicolor = qs.len() == 2;

    let mut current = cfg.clone();
    let mut steps = Vec::new();
    while current.box_count() > 1 {
        let (rule, boxes) = if bicolor {
            next_bicolor_step(&current)
        } else {
            next_multicolor_step(&current)
        };
        let (next, delta) = apply_merge_rule(&current, rule, &boxes, d)?;
        debug_assert!(delta >= 0, "negative step in merge_to_indiscrete");
        steps.push(MergeStep { rule, boxes, delta });
        current = next;
    }
    Ok(steps)
}

/// Next step when at least three colors are present.
fn next_multicolor_step(cfg: &BallBoxConfig) -> (MergeRule, Vec<usize>) {
    let boxes = cfg.box_count();
    let colors = cfg.color_count();
    // A box already spanning three colors absorbs any other box.
    if let Some(i) = (0..boxes).find(|&i| cfg.distinct_colors(i) >= 3) {
        let j = (0..boxes).find(|&j| j != i).unwrap();
        return (MergeRule::TricolorPlusAny, vec![i, j]);
    }
    // A doubled color lets the box absorb any differently colored ball.
    for i in 0..boxes {
        if let Some(c) = (0..colors).find(|&c| cfg.counts()[i][c] >= 2) {
            let j = (0..boxes)
                .find(|&j| j != i && (0..colors).any(|o| o != c && cfg.counts()[j][o] > 0))
                .expect("a third color exists outside any two-color box");
            return (MergeRule::DoublePlusOther, vec![i, j]);
        }
    }
    // A two-color box absorbs a ball of a third color.
    for i in 0..boxes {
        let present: Vec<usize> = (0..colors).filter(|&c| cfg.counts()[i][c] > 0).collect();
        if present.len() == 2 {
            let j = (0..boxes)
                .find(|&j| {
                    j != i
                        && (0..colors)
                            .any(|c| !present.contains(&c) && cfg.counts()[j][c] > 0)
                })
                .expect("a third color exists outside a two-color box");
            return (MergeRule::MixedPairPlusThird, vec![i, j]);
        }
    }
    // All boxes are monochromatic singletons; three colors are available.
    let c1 = (0..colors).find(|&c| cfg.counts()[0][c] > 0).unwrap();
    let i2 = (1..boxes)
        .find(|&i| (0..colors).any(|c| c != c1 && cfg.counts()[i][c] > 0))
        .unwrap();
    let c2 = (0..colors).find(|&c| c != c1 && cfg.counts()[i2][c] > 0).unwrap();
    let i3 = (1..boxes)
        .find(|&i| {
            i != i2 && (0..colors).any(|c| c != c1 && c != c2 && cfg.counts()[i][c] > 0)
        })
        .unwrap();
    (MergeRule::ThreeDistinctSingles, vec![0, i2, i3])
}

/// Next step for exactly two colors with class sizes >= 3 and >= 2.
fn next_bicolor_step(cfg: &BallBoxConfig) -> (MergeRule, Vec<usize>) {
    let boxes = cfg.box_count();
    let colors = cfg.color_count();
    let row_has = |i: usize, c: usize| cfg.counts()[i][c] > 0;
    // A doubled color absorbs everything, one box at a time.
    for i in 0..boxes {
        for c in 0..colors {
            if cfg.counts()[i][c] >= 2 {
                if let Some(j) =
                    (0..boxes).find(|&j| j != i && (0..colors).any(|o| o != c && row_has(j, o)))
                {
                    return (MergeRule::DoublePlusOther, vec![i, j]);
                }
                // Everything outside is pure c, so this box holds all balls
                // of the other color, at least two of them; the rule applies
                // with the roles read the other way around.
                debug_assert!((0..colors).any(|o| o != c && cfg.counts()[i][o] >= 2));
                let j = (0..boxes).find(|&j| j != i && row_has(j, c)).unwrap();
                return (MergeRule::DoublePlusOther, vec![i, j]);
            }
        }
    }
    let mixed: Vec<usize> = (0..boxes).filter(|&i| cfg.distinct_colors(i) == 2).collect();
    if mixed.len() >= 2 {
        return (MergeRule::TwoMixedPairs, vec![mixed[0], mixed[1]]);
    }
    if mixed.len() == 1 {
        let i = mixed[0];
        let c = (0..colors).find(|&c| row_has(i, c)).unwrap();
        let o = ((c + 1)..colors).find(|&o| row_has(i, o)).unwrap();
        let j = (0..boxes).find(|&j| j != i && row_has(j, c)).unwrap();
        let k = (0..boxes).find(|&k| k != i && k != j && row_has(k, o)).unwrap();
        return (MergeRule::MixedPairPlusEach, vec![i, j, k]);
    }
    // All boxes are monochromatic singletons.
    let sums = cfg.column_sums();
    let red = (0..colors).find(|&c| sums[c] >= 3).expect("one class has size >= 3");
    let orange = (0..colors).find(|&c| c != red && sums[c] >= 2).unwrap();
    let reds: Vec<usize> = (0..boxes).filter(|&i| row_has(i, red)).take(3).collect();
    let oranges: Vec<usize> = (0..boxes).filter(|&i| row_has(i, orange)).take(2).collect();
    let mut all = reds;
    all.extend(oranges);
    (MergeRule::ThreeRedsTwoOranges, all)
}

// ---------------------------------------------------------------------------
// Component classifications
// ---------------------------------------------------------------------------

/// Partitions indexing the component closures of the picture space of the
/// complete graph `K_n` for `d >= 3`: exactly those with no block of size
/// two, in restricted-growth lexicographic order.
pub fn components_complete(n: usize, d: u32) -> Result<Vec<SetPartition>> {
    if d < 3 {
        return Err(Error::InvalidParameter(
            "complete-graph component classification requires d >= 3".into(),
        ));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(
            "complete-graph component classification requires n >= 2".into(),
        ));
    }
    Ok(enumerate_partitions(n)?
        .filter(|pi| pi.blocks().iter().all(|b| b.len() != 2))
        .collect())
}

/// Partitions indexing the component closures of the picture space of a
/// complete multipartite graph for `d >= 3`: every block is a singleton,
/// contains two balls each of two colors, or touches three or more colors.
/// Acyclic inputs and `K_{2,2}` are outside the classification.
pub fn components_multipartite(
    colors: &ColoredVertexSet,
    d: u32,
) -> Result<Vec<SetPartition>> {
    if d < 3 {
        return Err(Error::InvalidParameter(
            "multipartite component classification requires d >= 3".into(),
        ));
    }
    if colors.is_acyclic() {
        return Err(Error::HypothesisViolation(
            "multipartite component classification needs a cycle (graph is acyclic)".into(),
        ));
    }
    if colors.is_k22() {
        return Err(Error::HypothesisViolation(
            "K_{2,2} is a 4-cycle; use the cycle classification".into(),
        ));
    }
    Ok(enumerate_partitions(colors.total())?
        .filter(|pi| {
            pi.blocks().iter().all(|block| {
                if block.len() == 1 {
                    return true;
                }
                let mut tally = vec![0usize; colors.color_count()];
                for &v in block {
                    tally[colors.color_of(v)] += 1;
                }
                let with_two = tally.iter().filter(|&&t| t >= 2).count();
                let present = tally.iter().filter(|&&t| t >= 1).count();
                with_two >= 2 || present >= 3
            })
        })
        .collect())
}

/// Component descriptors for the cycle `C_n`: only the discrete cellule
/// closure when `d < n`, and additionally the indiscrete one when `d >= n`.
pub fn components_cycle(n: usize, d: u32) -> Result<Vec<SetPartition>> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle requires n >= 3".into()));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("ambient dimension must be >= 1".into()));
    }
    if (d as usize) < n {
        Ok(vec![SetPartition::discrete(n)])
    } else {
        Ok(vec![SetPartition::indiscrete(n), SetPartition::discrete(n)])
    }
}
