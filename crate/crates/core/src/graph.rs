//! Immutable directed weighted graph shared by all metric modules.
//!
//! A competition network records adversarial interactions: an edge `u -> v`
//! with weight `w` means `u` acted against `v` with intensity `w` (vote
//! count, conflict-event count, carbon flow). Parallel edges are accumulated
//! into a single weight at construction; a weight of zero means no edge.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// Dense index identifying a node within one network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for NodeId {
    fn from(index: usize) -> Self {
        NodeId(index)
    }
}

/// Immutable directed graph with non-negative real edge weights and unique
/// node labels. Safe to share read-only across threads; every accessor is a
/// pure function of the construction input.
#[derive(Debug, Clone)]
pub struct CompetitionNetwork {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Out-adjacency rows, sorted by target index, strictly positive weights.
    rows: Vec<Vec<(usize, f64)>>,
    out_weight: Vec<f64>,
    in_weight: Vec<f64>,
}

impl PartialEq for CompetitionNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.rows == other.rows
    }
}

impl CompetitionNetwork {
    /// Builds a network from node labels and a `(from, to, weight)` edge list.
    ///
    /// Repeated entries for the same ordered pair accumulate, modeling
    /// multi-edges. Self-loops, negative or non-finite weights, duplicate or
    /// empty labels, and edges naming unknown labels are rejected.
    pub fn build<L, A, B>(
        labels: impl IntoIterator<Item = L>,
        edges: impl IntoIterator<Item = (A, B, f64)>,
    ) -> Result<Self>
    where
        L: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }

        let mut accum: Vec<BTreeMap<usize, f64>> = vec![BTreeMap::new(); labels.len()];
        for (from, to, weight) in edges {
            let (from, to) = (from.as_ref(), to.as_ref());
            let u = *index
                .get(from)
                .ok_or_else(|| Error::UnknownLabel(from.to_owned()))?;
            let v = *index
                .get(to)
                .ok_or_else(|| Error::UnknownLabel(to.to_owned()))?;
            if u == v {
                return Err(Error::SelfLoop(from.to_owned()));
            }
            if !(weight.is_finite() && weight >= 0.0) {
                return Err(Error::InvalidWeight {
                    from: from.to_owned(),
                    to: to.to_owned(),
                    weight,
                });
            }
            *accum[u].entry(v).or_insert(0.0) += weight;
        }

        let rows: Vec<Vec<(usize, f64)>> = accum
            .into_iter()
            .map(|row| row.into_iter().filter(|&(_, w)| w > 0.0).collect())
            .collect();

        Ok(Self::from_rows(labels, index, rows))
    }

    fn from_rows(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        rows: Vec<Vec<(usize, f64)>>,
    ) -> Self {
        let n = labels.len();
        let out_weight: Vec<f64> = rows
            .iter()
            .map(|row| row.iter().map(|&(_, w)| w).sum())
            .collect();
        let mut in_weight = vec![0.0; n];
        for row in &rows {
            for &(v, w) in row {
                in_weight[v] += w;
            }
        }
        Self {
            labels,
            index,
            rows,
            out_weight,
            in_weight,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count()).map(NodeId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of a node. Panics on an out-of-range id; use
    /// [`check_node`](Self::check_node) first for untrusted input.
    pub fn label(&self, u: NodeId) -> &str {
        &self.labels[u.index()]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied().map(NodeId)
    }

    pub fn check_node(&self, u: NodeId) -> Result<()> {
        if u.index() < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                index: u.index(),
                node_count: self.node_count(),
            })
        }
    }

    /// Aggregated weight `A(u, v)`; zero means no edge.
    pub fn weight(&self, u: NodeId, v: NodeId) -> f64 {
        self.rows[u.index()]
            .binary_search_by_key(&v.index(), |&(t, _)| t)
            .map(|pos| self.rows[u.index()][pos].1)
            .unwrap_or(0.0)
    }

    /// Out-edges of `u` as `(target, weight)` pairs, ascending by target
    /// index, weights strictly positive.
    pub fn out_edges(&self, u: NodeId) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        self.rows[u.index()].iter().map(|&(v, w)| (NodeId(v), w))
    }

    pub(crate) fn row(&self, u: usize) -> &[(usize, f64)] {
        &self.rows[u]
    }

    /// Weighted out-degree `sum_v A(u, v)`. For unit-weight vote networks
    /// this is the plain out-degree.
    pub fn out_degree(&self, u: NodeId) -> Result<f64> {
        self.check_node(u)?;
        Ok(self.out_weight[u.index()])
    }

    /// Weighted in-degree `sum_v A(v, u)`.
    pub fn in_degree(&self, u: NodeId) -> Result<f64> {
        self.check_node(u)?;
        Ok(self.in_weight[u.index()])
    }

    /// Network with every edge orientation flipped: `A'(u, v) = A(v, u)`.
    /// Labels are preserved.
    pub fn reverse(&self) -> CompetitionNetwork {
        let n = self.node_count();
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for u in 0..n {
            for &(v, w) in &self.rows[u] {
                rows[v].push((u, w));
            }
        }
        for row in &mut rows {
            row.sort_by_key(|&(t, _)| t);
        }
        Self::from_rows(self.labels.clone(), self.index.clone(), rows)
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> f64 {
        self.out_weight.iter().sum()
    }
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::CompetitionNetwork;

    /// Three nodes, edges a->c (2), b->c (1), a->b (1). Reused across the
    /// metric tests.
    pub fn g1() -> CompetitionNetwork {
        CompetitionNetwork::build(["a", "b", "c"], [("a", "c", 2.0), ("b", "c", 1.0), ("a", "b", 1.0)])
            .unwrap()
    }
}
