//! Leader-prediction protocols: winner-in-top-k hit rates, the analytic
//! random-set baseline, slope-graph ranking comparisons, and the per-node
//! leader report.

use serde::{Deserialize, Serialize};

use crate::centrality::{closeness, score_table, ClosenessMode, Metric, ScoreTable};
use crate::comparators::{jaccard_table, pagerank_reversed, PageRankConfig};
use crate::error::{Error, Result};
use crate::graph::CompetitionNetwork;
use crate::ingest::SeasonRecord;

/// A ranking metric over a whole network, including the comparison
/// baselines. Extends [`Metric`] with the two rankers that live outside the
/// centrality module.
#[derive(Debug, Clone, PartialEq)]
pub enum MetricSpec {
    Con,
    PagerankReversed(PageRankConfig),
    Jaccard,
    Closeness(ClosenessMode),
    InDegree,
    OutDegree,
}

impl MetricSpec {
    pub fn name(&self) -> String {
        match self {
            MetricSpec::Con => "con".into(),
            MetricSpec::PagerankReversed(_) => "pagerank-reversed".into(),
            MetricSpec::Jaccard => "jaccard".into(),
            MetricSpec::Closeness(mode) => format!("closeness-{mode}"),
            MetricSpec::InDegree => "in-degree".into(),
            MetricSpec::OutDegree => "out-degree".into(),
        }
    }

    /// Computes the metric's score table for `net`.
    pub fn table(&self, net: &CompetitionNetwork) -> Result<ScoreTable> {
        match self {
            MetricSpec::Con => Ok(score_table(net, Metric::Con)),
            MetricSpec::PagerankReversed(cfg) => pagerank_reversed(net, cfg),
            MetricSpec::Jaccard => Ok(jaccard_table(net)),
            MetricSpec::Closeness(mode) => Ok(score_table(net, Metric::Closeness(*mode))),
            MetricSpec::InDegree => Ok(score_table(net, Metric::InDegree)),
            MetricSpec::OutDegree => Ok(score_table(net, Metric::OutDegree)),
        }
    }
}

/// True iff `target` is within the top `k` scores of the table. Ties at the
/// boundary count as hits: the test is whether fewer than `k` nodes score
/// strictly higher than the target.
pub fn topk_hit(table: &ScoreTable, target: &str, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    let target_score = table
        .score_of(target)
        .ok_or_else(|| Error::UnknownTarget(target.to_owned()))?;
    let strictly_above = table.scores().iter().filter(|&&s| s > target_score).count();
    Ok(strictly_above < k)
}

fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

/// Percentage of seasons whose winner lands in the metric's top `k`,
/// rounded to one decimal.
pub fn hit_rate(seasons: &[SeasonRecord], metric: &MetricSpec, k: usize) -> Result<f64> {
    if seasons.is_empty() {
        return Err(Error::NoSeasons);
    }
    let mut hits = 0usize;
    for season in seasons {
        let table = metric.table(season.network())?;
        if topk_hit(&table, season.winner(), k)? {
            hits += 1;
        }
    }
    Ok(round1(100.0 * hits as f64 / seasons.len() as f64))
}

/// Probability range of the winner appearing in a random set of `k`
/// players: per season the probability is `k / player_count`; returns the
/// (min, max) over seasons as percentages rounded to one decimal.
pub fn random_baseline_range(seasons: &[SeasonRecord], k: usize) -> Result<(f64, f64)> {
    if seasons.is_empty() {
        return Err(Error::NoSeasons);
    }
    if k < 1 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for season in seasons {
        let players = season.players().len();
        if players < k {
            return Err(Error::SeasonTooSmall {
                season: season.season_name().to_owned(),
                players,
                k,
            });
        }
        let p = 100.0 * k as f64 / players as f64;
        lo = lo.min(p);
        hi = hi.max(p);
    }
    Ok((round1(lo), round1(hi)))
}

/// Classification of an actor in a slope graph comparing two rankings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlopeClass {
    /// Both ranks present, difference at most 3.
    #[serde(rename = "black")]
    Black,
    /// Both present, left ranked at least 4 places higher (smaller rank).
    #[serde(rename = "red")]
    Red,
    /// Both present, right ranked at least 4 places higher.
    #[serde(rename = "green")]
    Green,
    /// In the right top-N only; no line is drawn.
    #[serde(rename = "absent-left")]
    AbsentLeft,
    /// In the left top-N only; no line is drawn.
    #[serde(rename = "absent-right")]
    AbsentRight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlopeRow {
    pub label: String,
    /// Global rank in the left table, when the actor is in the left top-N.
    pub left_rank: Option<usize>,
    pub right_rank: Option<usize>,
    pub class: SlopeClass,
}

/// Paired top-N rankings with per-actor movement classes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlopeGraphReport {
    pub left_metric: String,
    pub right_metric: String,
    /// Effective list length (requested value clamped to the node count).
    pub top_n: usize,
    pub rows: Vec<SlopeRow>,
}

/// Builds the slope-graph comparison of two rankings over the same node
/// set. Ranks are global (positions in the full deterministic rankings);
/// an actor outside one table's top-N gets an absent class and no rank on
/// that side. `top_n` is clamped to the node count.
pub fn slope_graph(left: &ScoreTable, right: &ScoreTable, top_n: usize) -> Result<SlopeGraphReport> {
    if top_n < 1 {
        return Err(Error::InvalidConfig("top_n must be at least 1".into()));
    }
    if !left.same_node_set(right) {
        return Err(Error::NodeSetMismatch);
    }
    let top_n = top_n.min(left.len());

    let left_top: Vec<&str> = left.ranking()[..top_n]
        .iter()
        .map(|&u| left.label(u))
        .collect();
    let right_top: Vec<&str> = right.ranking()[..top_n]
        .iter()
        .map(|&u| right.label(u))
        .collect();

    let mut rows: Vec<SlopeRow> = Vec::new();
    let mut seen: Vec<&str> = Vec::new();
    for &label in left_top.iter().chain(right_top.iter()) {
        if seen.contains(&label) {
            continue;
        }
        seen.push(label);
        let left_rank = left_top.iter().position(|&l| l == label).map(|i| i + 1);
        let right_rank = right_top.iter().position(|&l| l == label).map(|i| i + 1);
        let class = match (left_rank, right_rank) {
            (Some(l), Some(r)) => {
                let diff = l.abs_diff(r);
                if diff <= 3 {
                    SlopeClass::Black
                } else if r > l {
                    SlopeClass::Red
                } else {
                    SlopeClass::Green
                }
            }
            (Some(_), None) => SlopeClass::AbsentRight,
            (None, Some(_)) => SlopeClass::AbsentLeft,
            (None, None) => unreachable!("actor comes from one of the top lists"),
        };
        rows.push(SlopeRow {
            label: label.to_owned(),
            left_rank,
            right_rank,
            class,
        });
    }
    rows.sort_by(|a, b| {
        let key = |row: &SlopeRow| (row.left_rank.unwrap_or(usize::MAX), row.right_rank.unwrap_or(usize::MAX));
        key(a).cmp(&key(b)).then_with(|| a.label.cmp(&b.label))
    });

    Ok(SlopeGraphReport {
        left_metric: left.metric_name().to_owned(),
        right_metric: right.metric_name().to_owned(),
        top_n,
        rows,
    })
}

/// One row of the per-node leader report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LeaderRow {
    pub label: String,
    pub in_degree: f64,
    pub out_degree: f64,
    pub closeness_strict: f64,
    pub closeness_wf: f64,
    pub con: f64,
}

/// Per-node table of the leader indicators (in-degree, out-degree,
/// closeness in both modes, CON score), sorted by CON descending with ties
/// broken by ascending label.
pub fn leader_report(net: &CompetitionNetwork) -> Vec<LeaderRow> {
    let con = score_table(net, Metric::Con);
    con.ranking()
        .iter()
        .map(|&u| LeaderRow {
            label: net.label(u).to_owned(),
            in_degree: net.in_degree(u).expect("valid node"),
            out_degree: net.out_degree(u).expect("valid node"),
            closeness_strict: closeness(net, u, ClosenessMode::Strict).expect("valid node"),
            closeness_wf: closeness(net, u, ClosenessMode::WassermanFaust).expect("valid node"),
            con: con.score(u),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_fixtures::g1;

    fn table(scores: &[(&str, f64)]) -> ScoreTable {
        ScoreTable::new(
            "t",
            scores.iter().map(|(l, _)| l.to_string()).collect(),
            scores.iter().map(|&(_, s)| s).collect(),
        )
    }

    fn season(name: &str, players: &[&str], votes: &[(&str, &str)]) -> SeasonRecord {
        SeasonRecord::new(
            name,
            players.iter().map(|s| s.to_string()).collect(),
            std::iter::empty(),
            votes
                .iter()
                .map(|&(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn topk_counts_boundary_ties_as_hits() {
        let t = table(&[("a", 10.0), ("b", 8.0), ("c", 8.0), ("d", 5.0)]);
        assert!(topk_hit(&t, "c", 3).unwrap());
    }

    #[test]
    fn topk_unique_maximum_hits_at_one() {
        let t = table(&[("a", 10.0), ("b", 8.0)]);
        assert!(topk_hit(&t, "a", 1).unwrap());
    }

    #[test]
    fn topk_misses_when_enough_score_strictly_higher() {
        let t = table(&[("a", 5.0), ("b", 4.0), ("c", 3.0), ("d", 2.0)]);
        assert!(!topk_hit(&t, "d", 3).unwrap());
    }

    #[test]
    fn topk_is_monotone_in_k() {
        let t = table(&[("a", 5.0), ("b", 4.0), ("c", 3.0), ("d", 2.0)]);
        let mut prev = false;
        for k in 1..=4 {
            let hit = topk_hit(&t, "c", k).unwrap();
            assert!(!prev || hit, "a hit at k must persist for larger k");
            prev = hit;
        }
    }

    #[test]
    fn topk_validates_inputs() {
        let t = table(&[("a", 1.0)]);
        assert_eq!(topk_hit(&t, "z", 1), Err(Error::UnknownTarget("z".into())));
        assert!(matches!(topk_hit(&t, "a", 0), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn hit_rate_single_season_with_winning_con() {
        // w and x share target t, so con(w) = con(x) = 1 with b at 0; the
        // boundary-tie rule makes w a hit even at k = 1.
        let s = season("s1", &["t", "x", "w"], &[("x", "t"), ("w", "t")]);
        for k in [1, 2, 3] {
            assert_eq!(hit_rate(std::slice::from_ref(&s), &MetricSpec::Con, k).unwrap(), 100.0);
        }
    }

    #[test]
    fn hit_rate_two_seasons_half_hit() {
        let hit = season("hit", &["t", "x", "w"], &[("x", "t"), ("w", "t")]);
        // x and y share t; the winner w casts no votes and scores 0.
        let miss = season("miss", &["t", "x", "y", "w"], &[("x", "t"), ("y", "t")]);
        let seasons = vec![hit, miss];
        assert_eq!(hit_rate(&seasons, &MetricSpec::Con, 1).unwrap(), 50.0);
    }

    #[test]
    fn hit_rate_requires_seasons() {
        assert_eq!(hit_rate(&[], &MetricSpec::Con, 3), Err(Error::NoSeasons));
    }

    #[test]
    fn baseline_range_single_season() {
        let labels: Vec<String> = (0..10).map(|i| format!("p{i}")).collect();
        let s = SeasonRecord::new("s", labels, std::iter::empty(), Vec::new()).unwrap();
        assert_eq!(random_baseline_range(&[s], 5).unwrap(), (50.0, 50.0));
    }

    #[test]
    fn baseline_range_rejects_small_seasons() {
        let s = season("tiny", &["a", "b"], &[]);
        assert_eq!(
            random_baseline_range(&[s], 3),
            Err(Error::SeasonTooSmall {
                season: "tiny".into(),
                players: 2,
                k: 3
            })
        );
    }

    #[test]
    fn slope_graph_applies_caption_rules() {
        // 16 nodes; ranks are fully determined by distinct scores.
        let n = 16;
        let labels: Vec<String> = (0..n).map(|i| format!("x{i:02}")).collect();
        let left_scores: Vec<f64> = (0..n).map(|i| (n - i) as f64).collect();
        // right ranking: x00 stays 1st (black), x01 drops 2 -> 8 (red),
        // x07 rises 8 -> 2 (green), otherwise shifted as needed.
        let mut right_order: Vec<usize> = vec![0, 7, 2, 3, 4, 5, 6, 1, 8, 9, 10, 11, 12, 13, 14, 15];
        right_order.truncate(n);
        let mut right_scores = vec![0.0; n];
        for (pos, &node) in right_order.iter().enumerate() {
            right_scores[node] = (n - pos) as f64;
        }
        let left = ScoreTable::new("con", labels.clone(), left_scores);
        let right = ScoreTable::new("pagerank-reversed", labels, right_scores);
        let report = slope_graph(&left, &right, 15).unwrap();
        let class_of = |l: &str| report.rows.iter().find(|r| r.label == l).unwrap().class;
        assert_eq!(class_of("x00"), SlopeClass::Black);
        assert_eq!(class_of("x01"), SlopeClass::Red); // 2 -> 8
        assert_eq!(class_of("x07"), SlopeClass::Green); // 8 -> 2
        // x15 is rank 16 on both sides: outside both top-15 lists, so no row.
        assert!(report.rows.iter().all(|r| r.label != "x15"));
    }

    #[test]
    fn slope_graph_marks_absences() {
        // 4 nodes, top_n 2; c enters only the right list, b only the left.
        let left = table(&[("a", 4.0), ("b", 3.0), ("c", 2.0), ("d", 1.0)]);
        let right = table(&[("a", 4.0), ("c", 3.0), ("d", 2.0), ("b", 1.0)]);
        let report = slope_graph(&left, &right, 2).unwrap();
        let row = |l: &str| report.rows.iter().find(|r| r.label == l).unwrap().clone();
        assert_eq!(row("a").class, SlopeClass::Black);
        assert_eq!(row("b").class, SlopeClass::AbsentRight);
        assert_eq!(row("b").right_rank, None);
        assert_eq!(row("c").class, SlopeClass::AbsentLeft);
        assert_eq!(row("c").left_rank, None);
    }

    #[test]
    fn slope_graph_clamps_top_n() {
        let left = table(&[("a", 2.0), ("b", 1.0)]);
        let right = table(&[("a", 1.0), ("b", 2.0)]);
        let report = slope_graph(&left, &right, 100).unwrap();
        assert_eq!(report.top_n, 2);
        assert_eq!(report.rows.len(), 2);
    }

    #[test]
    fn slope_graph_validates_node_sets() {
        let left = table(&[("a", 1.0), ("b", 2.0)]);
        let right = table(&[("a", 1.0), ("z", 2.0)]);
        assert_eq!(slope_graph(&left, &right, 2), Err(Error::NodeSetMismatch));
    }

    #[test]
    fn leader_report_on_g1() {
        let net = g1();
        let rows = leader_report(&net);
        assert_eq!(rows.len(), net.node_count());
        let labels: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["a", "b", "c"]);
        assert_eq!(rows[0].in_degree, 0.0);
        assert_eq!(rows[0].out_degree, 3.0);
        assert_eq!(rows[0].closeness_strict, 1.0);
        assert_eq!(rows[0].closeness_wf, 1.0);
        assert_eq!(rows[0].con, 1.0);
        assert_eq!(rows[1].closeness_strict, 0.0);
        assert_eq!(rows[1].closeness_wf, 0.5);
        assert_eq!(rows[2].con, 0.0);
    }
}
