//! Self-check suites behind the CLI `check` subcommand.
//!
//! Each suite runs a batch of exact cross-validations and reports one line
//! per check with a pass flag and enough detail to locate a failure. All
//! randomness is seeded, so reports are reproducible byte for byte.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cellule::{
    apply_merge_rule, ballbox_dimension, is_d_heavy, merge_to_indiscrete, BallBoxConfig,
    MergeRule,
};
use crate::enumerate::{connected_graphs_up_to_iso, heavy_multipartite_families};
use crate::error::Result;
use crate::graph::{ExtNat, Graph};
use crate::mcd::{mcd_bruteforce, mcd_ears, mcd_flats, mcd_onion_closed_form};
use crate::order::maximal_cellules_known;
use crate::partition::enumerate_partitions;

const SUITE_SEED: u64 = 0x6772_7661_7221; // stable across runs

/// One pass/fail line of a report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

/// The outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub passed: bool,
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    fn new(suite: &str, lines: Vec<CheckLine>) -> CheckReport {
        CheckReport {
            suite: suite.to_string(),
            passed: lines.iter().all(|l| l.pass),
            lines,
        }
    }
}

fn line(lines: &mut Vec<CheckLine>, label: impl Into<String>, pass: bool, detail: String) {
    lines.push(CheckLine {
        label: label.into(),
        pass,
        detail,
    });
}

/// Three-way mcd agreement (plus the girth bound and the `mcd >= 2` floor)
/// on every connected simple non-forest graph with at most 6 vertices.
pub fn suite_small_exhaustive() -> Result<CheckReport> {
    let mut lines = Vec::new();
    let graphs: Vec<Graph> = connected_graphs_up_to_iso(6)
        .into_iter()
        .filter(|g| !g.is_forest())
        .collect();
    let mut disagreements = Vec::new();
    let mut floor_failures = Vec::new();
    let mut girth_failures = Vec::new();
    for g in &graphs {
        let b = mcd_bruteforce(g)?.value;
        let f = mcd_flats(g)?.value;
        let e = mcd_ears(g)?.value;
        if b != f || b != e {
            disagreements.push(format!(
                "{:?}: brute={b} flats={f} ears={e}",
                g.edges()
            ));
        }
        match b {
            ExtNat::Finite(v) if v >= 2 => {}
            _ => floor_failures.push(format!("{:?}: mcd={b}", g.edges())),
        }
        if let (ExtNat::Finite(m), ExtNat::Finite(gir)) = (b, g.girth()) {
            if m > gir {
                girth_failures.push(format!("{:?}: mcd={m} girth={gir}", g.edges()));
            }
        }
    }
    line(
        &mut lines,
        "three-way mcd agreement, connected non-forest graphs <= 6 vertices",
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("{} graphs checked", graphs.len())
        } else {
            disagreements.join("; ")
        },
    );
    line(
        &mut lines,
        "mcd >= 2 on the exhaustive suite",
        floor_failures.is_empty(),
        if floor_failures.is_empty() {
            "no violations".into()
        } else {
            floor_failures.join("; ")
        },
    );
    line(
        &mut lines,
        "mcd <= girth on the exhaustive suite",
        girth_failures.is_empty(),
        if girth_failures.is_empty() {
            "no violations".into()
        } else {
            girth_failures.join("; ")
        },
    );
    Ok(CheckReport::new("small-exhaustive", lines))
}

/// d-heaviness and component classification for complete multipartite
/// graphs with at most 8 vertices.
pub fn suite_multipartite() -> Result<CheckReport> {
    let mut lines = Vec::new();

    let families = heavy_multipartite_families(8);
    let mut heavy_failures = Vec::new();
    for colors in &families {
        let g = colors.graph();
        for d in [3, 4] {
            if !is_d_heavy(&g, d)? {
                heavy_failures.push(format!("K_{:?} at d={d}", colors.counts()));
            }
        }
    }
    line(
        &mut lines,
        "complete multipartite graphs <= 8 vertices are d-heavy (d = 3, 4)",
        heavy_failures.is_empty(),
        if heavy_failures.is_empty() {
            format!("{} families checked", families.len())
        } else {
            heavy_failures.join("; ")
        },
    );

    let c4_not_heavy = !is_d_heavy(&Graph::cycle(4).unwrap(), 3)?;
    line(
        &mut lines,
        "K_{2,2} is not 3-heavy",
        c4_not_heavy,
        "discrete beats indiscrete: 12 > 11".into(),
    );

    // Merge driver sanity across all partitions of each family.
    let mut merge_failures = Vec::new();
    for colors in &families {
        for pi in enumerate_partitions(colors.total())? {
            let cfg = BallBoxConfig::from_partition(colors, &pi);
            for d in [3, 4] {
                let before = ballbox_dimension(&cfg, d);
                match merge_to_indiscrete(&cfg, d) {
                    Err(e) => merge_failures.push(format!(
                        "K_{:?} {pi} d={d}: {e}",
                        colors.counts()
                    )),
                    Ok(steps) => {
                        if steps.iter().any(|s| s.delta < 0) {
                            merge_failures.push(format!(
                                "K_{:?} {pi} d={d}: negative step",
                                colors.counts()
                            ));
                        }
                        let total: i64 = steps.iter().map(|s| s.delta).sum();
                        let indiscrete = ballbox_dimension(
                            &BallBoxConfig::from_partition(
                                colors,
                                &crate::partition::SetPartition::indiscrete(colors.total()),
                            ),
                            d,
                        );
                        if before as i64 + total != indiscrete as i64 {
                            merge_failures.push(format!(
                                "K_{:?} {pi} d={d}: deltas do not telescope",
                                colors.counts()
                            ));
                        }
                    }
                }
            }
        }
    }
    line(
        &mut lines,
        "merge_to_indiscrete reaches one box with no negative step",
        merge_failures.is_empty(),
        if merge_failures.is_empty() {
            "all partitions of all families".into()
        } else {
            merge_failures.join("; ")
        },
    );

    // Component classifications agree with the split-closure maxima.
    let mut comp_failures = Vec::new();
    for colors in &families {
        let g = colors.graph();
        let expected = crate::cellule::components_multipartite(colors, 3)?;
        let (got, exactness) = maximal_cellules_known(&g, 3)?;
        if got != expected {
            comp_failures.push(format!(
                "K_{:?}: {} maximal vs {} classified",
                colors.counts(),
                got.len(),
                expected.len()
            ));
        }
        if exactness != crate::order::Exactness::Exact {
            comp_failures.push(format!("K_{:?}: not flagged exact", colors.counts()));
        }
    }
    line(
        &mut lines,
        "component classification matches split-closure maxima at d = 3",
        comp_failures.is_empty(),
        if comp_failures.is_empty() {
            format!("{} families checked", families.len())
        } else {
            comp_failures.join("; ")
        },
    );

    Ok(CheckReport::new("multipartite", lines))
}

/// Onion closed form versus brute force for `k <= 4` paths of length up to 4.
pub fn suite_onion() -> Result<CheckReport> {
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    for lens in onion_parameter_sets(4, 4) {
        let g = Graph::onion(&lens)?;
        let brute = mcd_bruteforce(&g)?.value;
        let closed = ExtNat::Finite(mcd_onion_closed_form(&lens)?);
        checked += 1;
        if brute != closed {
            failures.push(format!("onion {lens:?}: closed={closed} brute={brute}"));
        }
    }
    line(
        &mut lines,
        "onion closed form equals brute force (k <= 4, lengths <= 4)",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{checked} onions checked")
        } else {
            failures.join("; ")
        },
    );
    Ok(CheckReport::new("onion", lines))
}

/// Valid onion parameter multisets: `k` sorted lengths up to `max_len`, at
/// most one equal to 1.
pub fn onion_parameter_sets(max_k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 2..=max_k {
        let mut tuple = vec![1usize; k];
        'outer: loop {
            if tuple.windows(2).all(|w| w[0] <= w[1])
                && tuple.iter().filter(|&&a| a == 1).count() <= 1
            {
                out.push(tuple.clone());
            }
            let mut i = 0;
            loop {
                if i == k {
                    break 'outer;
                }
                tuple[i] += 1;
                if tuple[i] <= max_len {
                    break;
                }
                tuple[i] = 1;
                i += 1;
            }
        }
    }
    out
}

/// Randomized merge-rule deltas: valid configurations per rule at
/// `d = 3, 4, 5` must respect the guaranteed lower bounds.
pub fn suite_merge_rules(samples: usize) -> Result<CheckReport> {
    let mut lines = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    for rule in MergeRule::ALL {
        let mut failures = Vec::new();
        for d in [3u32, 4, 5] {
            for _ in 0..samples {
                let cfg = random_config_for(rule, &mut rng);
                let boxes: Vec<usize> = (0..rule.arity()).collect();
                let (_, delta) = apply_merge_rule(&cfg, rule, &boxes, d)?;
                if delta < rule.delta_lower_bound(d) {
                    failures.push(format!(
                        "{rule:?} d={d}: delta {delta} < bound {} for {cfg:?}",
                        rule.delta_lower_bound(d)
                    ));
                }
            }
        }
        line(
            &mut lines,
            format!("{rule:?} delta bound"),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{} samples at d in {{3,4,5}}", samples * 3)
            } else {
                failures.join("; ")
            },
        );
    }
    Ok(CheckReport::new("merge-rules", lines))
}

/// A random configuration satisfying the hypotheses of `rule` on its first
/// `arity` boxes.
fn random_config_for(rule: MergeRule, rng: &mut ChaCha8Rng) -> BallBoxConfig {
    let colors = rng.gen_range(3..=5usize);
    let arity = rule.arity();
    let mut rows: Vec<Vec<u64>> = vec![vec![0; colors]; arity];
    // Distinct color choices for the rule roles.
    let c1 = rng.gen_range(0..colors);
    let c2 = (c1 + 1 + rng.gen_range(0..colors - 1)) % colors;
    let c3 = loop {
        let c = rng.gen_range(0..colors);
        if c != c1 && c != c2 {
            break c;
        }
    };
    match rule {
        MergeRule::DoublePlusOther => {
            rows[0][c1] += 2;
            rows[1][c2] += 1;
        }
        MergeRule::TwoMixedPairs => {
            rows[0][c1] += 1;
            rows[0][c2] += 1;
            rows[1][c1] += 1;
            rows[1][c2] += 1;
        }
        MergeRule::MixedPairPlusThird => {
            rows[0][c1] += 1;
            rows[0][c2] += 1;
            rows[1][c3] += 1;
        }
        MergeRule::TricolorPlusAny => {
            rows[0][c1] += 1;
            rows[0][c2] += 1;
            rows[0][c3] += 1;
            rows[1][rng.gen_range(0..colors)] += 1;
        }
        MergeRule::ThreeDistinctSingles => {
            rows[0][c1] += 1;
            rows[1][c2] += 1;
            rows[2][c3] += 1;
        }
        MergeRule::MixedPairPlusEach => {
            rows[0][c1] += 1;
            rows[0][c2] += 1;
            rows[1][c1] += 1;
            rows[2][c2] += 1;
        }
        MergeRule::ThreeRedsTwoOranges => {
            for row in rows.iter_mut().take(3) {
                row[c1] += 1;
            }
            for row in rows.iter_mut().skip(3) {
                row[c2] += 1;
            }
        }
    }
    // Noise: extra balls in the role boxes and a few extra boxes.
    for row in rows.iter_mut() {
        for _ in 0..rng.gen_range(0..3) {
            row[rng.gen_range(0..colors)] += 1;
        }
    }
    for _ in 0..rng.gen_range(0..3usize) {
        let mut row = vec![0u64; colors];
        row[rng.gen_range(0..colors)] += rng.gen_range(1..=2);
        rows.push(row);
    }
    BallBoxConfig::new(rows).expect("rows nonempty")
}

/// Runs every suite.
pub fn suite_all() -> Result<Vec<CheckReport>> {
    Ok(vec![
        suite_small_exhaustive()?,
        suite_multipartite()?,
        suite_onion()?,
        suite_merge_rules(1000)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn onion_parameter_sets_are_valid_and_sorted() {
        let sets = onion_parameter_sets(4, 4);
        for s in &sets {
            assert!(s.len() >= 2 && s.len() <= 4);
            assert!(s.windows(2).all(|w| w[0] <= w[1]));
            assert!(s.iter().filter(|&&a| a == 1).count() <= 1);
        }
        // k = 2: (1,2),(1,3),(1,4),(2,2),(2,3),(2,4),(3,3),(3,4),(4,4).
        assert_eq!(sets.iter().filter(|s| s.len() == 2).count(), 9);
    }

    #[test]
    fn merge_rule_suite_passes_quickly() {
        let report = suite_merge_rules(50).unwrap();
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn onion_suite_passes() {
        let report = suite_onion().unwrap();
        assert!(report.passed, "{report:?}");
    }
}
