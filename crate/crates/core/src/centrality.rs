//! Common-out-neighbor (CON) scores and directed closeness.
//!
//! For a pair of distinct nodes the CON score is the multiset intersection
//! of their out-edge weight rows, `sum_k min(A(u,k), A(v,k))`; a node's CON
//! score sums that over all partners. Closeness is reciprocal-distance
//! centrality over one-way directed shortest paths (hop counts, weights
//! ignored), normalized by `n - 1`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CompetitionNetwork, NodeId};

/// How closeness treats nodes that cannot reach the whole network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosenessMode {
    /// `(n-1) / sum d(u,v)` when every other node is reachable, else 0.
    #[default]
    Strict,
    /// Wasserman-Faust generalization `(r/(n-1)) * (r / sum d)` over the `r`
    /// reachable nodes; 0 when nothing is reachable.
    WassermanFaust,
}

impl fmt::Display for ClosenessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosenessMode::Strict => f.write_str("strict"),
            ClosenessMode::WassermanFaust => f.write_str("wf"),
        }
    }
}

/// Per-node metrics a [`ScoreTable`] can be built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Con,
    Closeness(ClosenessMode),
    InDegree,
    OutDegree,
}

impl Metric {
    pub fn name(&self) -> String {
        match self {
            Metric::Con => "con".into(),
            Metric::Closeness(mode) => format!("closeness-{mode}"),
            Metric::InDegree => "in-degree".into(),
            Metric::OutDegree => "out-degree".into(),
        }
    }
}

/// One real score per node of a network, plus the ranking the scores induce.
///
/// The ranking is a permutation of all nodes in non-increasing score order;
/// ties are broken by ascending label so it is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    metric_name: String,
    labels: Vec<String>,
    scores: Vec<f64>,
    ranking: Vec<NodeId>,
}

impl ScoreTable {
    /// Builds a table from parallel label/score vectors.
    ///
    /// Panics if the vectors differ in length; callers construct both from
    /// the same network.
    pub fn new(metric_name: impl Into<String>, labels: Vec<String>, scores: Vec<f64>) -> Self {
        assert_eq!(labels.len(), scores.len(), "labels and scores must align");
        let mut ranking: Vec<NodeId> = (0..labels.len()).map(NodeId).collect();
        ranking.sort_by(|&a, &b| {
            scores[b.index()]
                .total_cmp(&scores[a.index()])
                .then_with(|| labels[a.index()].cmp(&labels[b.index()]))
        });
        Self {
            metric_name: metric_name.into(),
            labels,
            scores,
            ranking,
        }
    }

    pub fn metric_name(&self) -> &str {
        &self.metric_name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn score(&self, u: NodeId) -> f64 {
        self.scores[u.index()]
    }

    pub fn label(&self, u: NodeId) -> &str {
        &self.labels[u.index()]
    }

    pub fn score_of(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.scores[i])
    }

    /// Nodes in non-increasing score order, ties broken by ascending label.
    pub fn ranking(&self) -> &[NodeId] {
        &self.ranking
    }

    /// 1-based position of `u` in the deterministic ranking.
    pub fn rank_of(&self, u: NodeId) -> usize {
        self.ranking.iter().position(|&v| v == u).expect("node in ranking") + 1
    }

    /// Fractional ranks (1 = highest score) with ties assigned the average
    /// of the positions they span.
    pub fn average_ranks(&self) -> Vec<f64> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.scores[b].total_cmp(&self.scores[a]));
        let mut ranks = vec![0.0; n];
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && self.scores[order[end]] == self.scores[order[start]] {
                end += 1;
            }
            // positions start+1 ..= end share the average rank
            let avg = (start + 1 + end) as f64 / 2.0;
            for &i in &order[start..end] {
                ranks[i] = avg;
            }
            start = end;
        }
        ranks
    }

    /// True when both tables cover exactly the same label set.
    pub fn same_node_set(&self, other: &ScoreTable) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut a: Vec<&str> = self.labels.iter().map(String::as_str).collect();
        let mut b: Vec<&str> = other.labels.iter().map(String::as_str).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Pairwise CON score `sum_k min(A(u,k), A(v,k))` for distinct nodes.
pub fn con_pair(net: &CompetitionNetwork, u: NodeId, v: NodeId) -> Result<f64> {
    net.check_node(u)?;
    net.check_node(v)?;
    if u == v {
        return Err(Error::IdenticalPair);
    }
    Ok(con_pair_unchecked(net, u.index(), v.index()))
}

/// Merge of two sorted adjacency rows; only targets present in both rows
/// contribute, with the smaller weight.
fn con_pair_unchecked(net: &CompetitionNetwork, u: usize, v: usize) -> f64 {
    let (ru, rv) = (net.row(u), net.row(v));
    let (mut i, mut j) = (0, 0);
    let mut sum = 0.0;
    while i < ru.len() && j < rv.len() {
        let (tu, wu) = ru[i];
        let (tv, wv) = rv[j];
        match tu.cmp(&tv) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                sum += wu.min(wv);
                i += 1;
                j += 1;
            }
        }
    }
    sum
}

/// CON score of a node: `sum_{v != u} CON(u, v)`.
pub fn con_node(net: &CompetitionNetwork, u: NodeId) -> Result<f64> {
    net.check_node(u)?;
    Ok((0..net.node_count())
        .filter(|&v| v != u.index())
        .map(|v| con_pair_unchecked(net, u.index(), v))
        .sum())
}

/// CON score of a node set: sum of `CON(u, v)` over unordered distinct
/// pairs within the set. Requires at least two distinct members.
pub fn con_set(net: &CompetitionNetwork, set: &[NodeId]) -> Result<f64> {
    if set.len() < 2 {
        return Err(Error::SetTooSmall(set.len()));
    }
    for &u in set {
        net.check_node(u)?;
    }
    let mut seen: Vec<usize> = set.iter().map(|u| u.index()).collect();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateMember);
    }
    let mut sum = 0.0;
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            sum += con_pair_unchecked(net, u.index(), v.index());
        }
    }
    Ok(sum)
}

/// Hop-count distances from `u` along directed edges; `None` = unreachable.
fn bfs_distances(net: &CompetitionNetwork, u: usize) -> Vec<Option<usize>> {
    let n = net.node_count();
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    dist[u] = Some(0);
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x].unwrap();
        for &(y, _) in net.row(x) {
            if dist[y].is_none() {
                dist[y] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Directed closeness of `u`. Distances are unweighted shortest-path hop
/// counts on the directed graph; see [`ClosenessMode`] for the handling of
/// unreachable nodes. A single-node network scores 0.
pub fn closeness(net: &CompetitionNetwork, u: NodeId, mode: ClosenessMode) -> Result<f64> {
    net.check_node(u)?;
    let n = net.node_count();
    if n <= 1 {
        return Ok(0.0);
    }
    let dist = bfs_distances(net, u.index());
    let mut reachable = 0usize;
    let mut total = 0usize;
    for (v, d) in dist.iter().enumerate() {
        if v == u.index() {
            continue;
        }
        if let Some(d) = d {
            reachable += 1;
            total += d;
        }
    }
    let value = match mode {
        ClosenessMode::Strict => {
            if reachable == n - 1 {
                (n - 1) as f64 / total as f64
            } else {
                0.0
            }
        }
        ClosenessMode::WassermanFaust => {
            if reachable == 0 {
                0.0
            } else {
                (reachable as f64 / (n - 1) as f64) * (reachable as f64 / total as f64)
            }
        }
    };
    Ok(value)
}

/// Computes `metric` for every node and returns the deterministic table.
pub fn score_table(net: &CompetitionNetwork, metric: Metric) -> ScoreTable {
    let scores: Vec<f64> = match metric {
        Metric::Con => net
            .nodes()
            .map(|u| con_node(net, u).expect("valid node"))
            .collect(),
        Metric::Closeness(mode) => net
            .nodes()
            .map(|u| closeness(net, u, mode).expect("valid node"))
            .collect(),
        Metric::InDegree => net
            .nodes()
            .map(|u| net.in_degree(u).expect("valid node"))
            .collect(),
        Metric::OutDegree => net
            .nodes()
            .map(|u| net.out_degree(u).expect("valid node"))
            .collect(),
    };
    ScoreTable::new(metric.name(), net.labels().to_vec(), scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_fixtures::g1;

    fn id(net: &CompetitionNetwork, label: &str) -> NodeId {
        net.node_by_label(label).unwrap()
    }

    #[test]
    fn con_pair_on_g1() {
        let net = g1();
        let (a, b, c) = (id(&net, "a"), id(&net, "b"), id(&net, "c"));
        assert_eq!(con_pair(&net, a, b).unwrap(), 1.0);
        assert_eq!(con_pair(&net, a, c).unwrap(), 0.0);
        assert_eq!(con_pair(&net, b, a).unwrap(), 1.0);
    }

    #[test]
    fn con_pair_rejects_identical_nodes() {
        let net = g1();
        let a = id(&net, "a");
        assert_eq!(con_pair(&net, a, a), Err(Error::IdenticalPair));
    }

    #[test]
    fn con_node_on_g1() {
        let net = g1();
        assert_eq!(con_node(&net, id(&net, "a")).unwrap(), 1.0);
        assert_eq!(con_node(&net, id(&net, "b")).unwrap(), 1.0);
        assert_eq!(con_node(&net, id(&net, "c")).unwrap(), 0.0);
    }

    #[test]
    fn con_node_without_third_party_is_zero() {
        let net = CompetitionNetwork::build(["a", "b"], [("a", "b", 1.0)]).unwrap();
        assert_eq!(con_node(&net, id(&net, "a")).unwrap(), 0.0);
    }

    #[test]
    fn con_set_on_g1() {
        let net = g1();
        let (a, b, c) = (id(&net, "a"), id(&net, "b"), id(&net, "c"));
        assert_eq!(con_set(&net, &[a, b]).unwrap(), 1.0);
        assert_eq!(con_set(&net, &[a, b, c]).unwrap(), 1.0);
    }

    #[test]
    fn con_set_validates_membership() {
        let net = g1();
        let (a, b) = (id(&net, "a"), id(&net, "b"));
        assert_eq!(con_set(&net, &[a]), Err(Error::SetTooSmall(1)));
        assert_eq!(con_set(&net, &[]), Err(Error::SetTooSmall(0)));
        assert_eq!(con_set(&net, &[a, b, a]), Err(Error::DuplicateMember));
    }

    #[test]
    fn con_set_of_two_sinks_is_zero() {
        let net = CompetitionNetwork::build(["a", "b", "c"], [("a", "b", 1.0), ("a", "c", 1.0)])
            .unwrap();
        let (b, c) = (id(&net, "b"), id(&net, "c"));
        assert_eq!(con_set(&net, &[b, c]).unwrap(), 0.0);
    }

    #[test]
    fn closeness_on_three_cycle() {
        let net = CompetitionNetwork::build(
            ["a", "b", "c"],
            [("a", "b", 1.0), ("b", "c", 1.0), ("c", "a", 1.0)],
        )
        .unwrap();
        let got = closeness(&net, id(&net, "a"), ClosenessMode::Strict).unwrap();
        assert!((got - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn closeness_of_sink_is_zero() {
        let net = g1();
        assert_eq!(closeness(&net, id(&net, "c"), ClosenessMode::Strict).unwrap(), 0.0);
        assert_eq!(
            closeness(&net, id(&net, "c"), ClosenessMode::WassermanFaust).unwrap(),
            0.0
        );
    }

    #[test]
    fn closeness_of_star_center_is_one() {
        let net = CompetitionNetwork::build(
            ["u", "x", "y", "z"],
            [("u", "x", 1.0), ("u", "y", 1.0), ("u", "z", 1.0)],
        )
        .unwrap();
        assert_eq!(closeness(&net, id(&net, "u"), ClosenessMode::Strict).unwrap(), 1.0);
    }

    #[test]
    fn wasserman_faust_on_g1() {
        // a reaches b and c in one hop each: (2/2) * (2/2) = 1.
        let net = g1();
        assert_eq!(
            closeness(&net, id(&net, "a"), ClosenessMode::WassermanFaust).unwrap(),
            1.0
        );
        // b reaches only c: (1/2) * (1/1) = 0.5.
        assert_eq!(
            closeness(&net, id(&net, "b"), ClosenessMode::WassermanFaust).unwrap(),
            0.5
        );
    }

    #[test]
    fn closeness_single_node_is_zero() {
        let net =
            CompetitionNetwork::build(["a"], std::iter::empty::<(&str, &str, f64)>()).unwrap();
        assert_eq!(closeness(&net, NodeId(0), ClosenessMode::Strict).unwrap(), 0.0);
        assert_eq!(
            closeness(&net, NodeId(0), ClosenessMode::WassermanFaust).unwrap(),
            0.0
        );
    }

    #[test]
    fn score_table_con_breaks_tie_by_label() {
        let net = g1();
        let table = score_table(&net, Metric::Con);
        assert_eq!(table.scores(), &[1.0, 1.0, 0.0]);
        let ranked: Vec<&str> = table.ranking().iter().map(|&u| table.label(u)).collect();
        assert_eq!(ranked, ["a", "b", "c"]);
        assert_eq!(table.metric_name(), "con");
    }

    #[test]
    fn out_degree_table_sums_to_total_weight() {
        let net = g1();
        let table = score_table(&net, Metric::OutDegree);
        assert_eq!(table.scores().iter().sum::<f64>(), net.total_weight());
    }

    #[test]
    fn single_node_table_scores_zero_for_every_metric() {
        let net =
            CompetitionNetwork::build(["a"], std::iter::empty::<(&str, &str, f64)>()).unwrap();
        for metric in [
            Metric::Con,
            Metric::Closeness(ClosenessMode::Strict),
            Metric::Closeness(ClosenessMode::WassermanFaust),
            Metric::InDegree,
            Metric::OutDegree,
        ] {
            let table = score_table(&net, metric);
            assert_eq!(table.scores(), &[0.0], "metric {}", metric.name());
        }
    }

    #[test]
    fn average_ranks_split_ties() {
        let table = ScoreTable::new(
            "con",
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![3.0, 2.0, 2.0, 1.0],
        );
        assert_eq!(table.average_ranks(), vec![1.0, 2.5, 2.5, 4.0]);
    }

    #[test]
    fn rank_of_is_one_based() {
        let net = g1();
        let table = score_table(&net, Metric::Con);
        assert_eq!(table.rank_of(id(&net, "a")), 1);
        assert_eq!(table.rank_of(id(&net, "b")), 2);
        assert_eq!(table.rank_of(id(&net, "c")), 3);
    }

    #[test]
    fn metric_names_are_stable() {
        assert_eq!(Metric::Con.name(), "con");
        assert_eq!(Metric::Closeness(ClosenessMode::Strict).name(), "closeness-strict");
        assert_eq!(Metric::Closeness(ClosenessMode::WassermanFaust).name(), "closeness-wf");
        assert_eq!(Metric::InDegree.name(), "in-degree");
        assert_eq!(Metric::OutDegree.name(), "out-degree");
    }
}
