//! Baseline rankers and rank-comparison statistics used against CON scores:
//! PageRank on the reversed-edge network, per-node Jaccard similarity, and
//! Spearman's rank correlation coefficient.

use crate::centrality::ScoreTable;
use crate::error::{Error, Result};
use crate::graph::{CompetitionNetwork, NodeId};

/// Power-iteration parameters for [`pagerank_reversed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankConfig {
    /// Damping factor in (0, 1).
    pub damping: f64,
    /// Convergence threshold on the L1 change per iteration.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        Self {
            damping: 0.85,
            tolerance: 1e-10,
            max_iterations: 1000,
        }
    }
}

impl PageRankConfig {
    fn validate(&self) -> Result<()> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "damping must lie in (0, 1), got {}",
                self.damping
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be a positive real, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be positive".into()));
        }
        Ok(())
    }
}

/// PageRank computed on the reversed-edge network, so that receiving many
/// competition edges confers rank.
///
/// Power iteration over weighted out-degree-normalized transitions on
/// `net.reverse()`; dangling nodes spread their mass uniformly over all
/// nodes. Scores sum to 1 within tolerance. Fails with
/// [`Error::NonConvergence`] when the L1 change per iteration does not fall
/// below `cfg.tolerance` within `cfg.max_iterations`.
pub fn pagerank_reversed(net: &CompetitionNetwork, cfg: &PageRankConfig) -> Result<ScoreTable> {
    cfg.validate()?;
    if net.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    let rev = net.reverse();
    let n = rev.node_count();
    let inv_n = 1.0 / n as f64;
    let teleport = (1.0 - cfg.damping) * inv_n;
    let out_sum: Vec<f64> = rev
        .nodes()
        .map(|u| rev.out_degree(u).expect("valid node"))
        .collect();

    let mut rank = vec![inv_n; n];
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..cfg.max_iterations {
        let dangling: f64 = (0..n).filter(|&u| out_sum[u] == 0.0).map(|u| rank[u]).sum();
        next.fill(teleport + cfg.damping * dangling * inv_n);
        for u in 0..n {
            if out_sum[u] > 0.0 {
                let scale = cfg.damping * rank[u] / out_sum[u];
                for &(v, w) in rev.row(u) {
                    next[v] += scale * w;
                }
            }
        }
        residual = rank
            .iter()
            .zip(next.iter())
            .map(|(a, b)| (a - b).abs())
            .sum();
        std::mem::swap(&mut rank, &mut next);
        if residual <= cfg.tolerance {
            return Ok(ScoreTable::new(
                "pagerank-reversed",
                net.labels().to_vec(),
                rank,
            ));
        }
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iterations,
        residual,
    })
}

/// Jaccard similarity of the out-rows of two nodes,
/// `sum_k min(A(u,k), A(v,k)) / sum_k max(A(u,k), A(v,k))`, with the 0/0
/// case defined as 0.
fn jaccard_pair(net: &CompetitionNetwork, u: usize, v: usize) -> f64 {
    let (ru, rv) = (net.row(u), net.row(v));
    let (mut i, mut j) = (0, 0);
    let mut min_sum = 0.0;
    let mut max_sum = 0.0;
    while i < ru.len() && j < rv.len() {
        let (tu, wu) = ru[i];
        let (tv, wv) = rv[j];
        match tu.cmp(&tv) {
            std::cmp::Ordering::Less => {
                max_sum += wu;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                max_sum += wv;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                min_sum += wu.min(wv);
                max_sum += wu.max(wv);
                i += 1;
                j += 1;
            }
        }
    }
    max_sum += ru[i..].iter().map(|&(_, w)| w).sum::<f64>();
    max_sum += rv[j..].iter().map(|&(_, w)| w).sum::<f64>();
    if max_sum > 0.0 {
        min_sum / max_sum
    } else {
        0.0
    }
}

/// Per-node Jaccard similarity score: `sum_{v != u} J(u, v)`, aggregating
/// over partners the same way the CON score does.
pub fn jaccard_score(net: &CompetitionNetwork, u: NodeId) -> Result<f64> {
    net.check_node(u)?;
    Ok((0..net.node_count())
        .filter(|&v| v != u.index())
        .map(|v| jaccard_pair(net, u.index(), v))
        .sum())
}

/// Jaccard similarity scores for every node as a ranked table.
pub fn jaccard_table(net: &CompetitionNetwork) -> ScoreTable {
    let scores: Vec<f64> = net
        .nodes()
        .map(|u| jaccard_score(net, u).expect("valid node"))
        .collect();
    ScoreTable::new("jaccard", net.labels().to_vec(), scores)
}

/// Spearman's rank correlation coefficient between the rankings induced by
/// two score tables over the same node set:
/// `1 - 6 * sum(d_i^2) / (N (N^2 - 1))` where `d_i` is the per-node rank
/// difference. Score ties receive average ranks, which degenerates to the
/// tie-free closed form when all scores are distinct.
pub fn spearman(a: &ScoreTable, b: &ScoreTable) -> Result<f64> {
    if !a.same_node_set(b) {
        return Err(Error::NodeSetMismatch);
    }
    let n = a.len();
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    let ranks_a = a.average_ranks();
    let ranks_b = b.average_ranks();
    let rank_b_of: std::collections::HashMap<&str, f64> = b
        .labels()
        .iter()
        .map(String::as_str)
        .zip(ranks_b.iter().copied())
        .collect();
    let sum_d2: f64 = a
        .labels()
        .iter()
        .zip(ranks_a.iter())
        .map(|(label, &ra)| {
            let d = ra - rank_b_of[label.as_str()];
            d * d
        })
        .sum();
    let n = n as f64;
    Ok(1.0 - 6.0 * sum_d2 / (n * (n * n - 1.0)))
}
