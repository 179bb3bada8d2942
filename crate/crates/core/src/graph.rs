// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Simple undirected connected graphs with dense `0..n` vertex labels.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// An immutable simple connected graph.
///
/// Edges are stored as `(a, b)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degrees: Vec<usize>,
}

impl Graph {
    /// Build a graph from unordered vertex pairs.
    ///
    /// The vertex count is `1 + max label`. Self-loops, repeated edges (in
    /// either orientation), unused labels and disconnected inputs are rejected.
    pub fn from_edges(pairs: &[(usize, usize)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        let max_label = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        let vertex_count = max_label + 1;
        let mut seen = BTreeSet::new();
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        if let Some(v) = adjacency.iter().position(Vec::is_empty) {
            return Err(Error::LabelGap(v, max_label));
        }
        let graph = Graph {
            vertex_count,
            edges,
            adjacency,
        };
        if let Some(v) = graph.first_unreachable() {
            return Err(Error::Disconnected(v));
        }
        Ok(graph)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let dist = self.bfs_distances(0);
        dist.iter().position(Option::is_none)
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap_or(0);
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            })
        }
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertex_count: self.vertex_count,
            edge_count: self.edge_count(),
            degrees: self.degrees(),
        }
    }

    /// Combinatorial Laplacian `D - A`.
    pub fn laplacian(&self) -> DMatrix<i64> {
        let n = self.vertex_count;
        let mut l = DMatrix::<i64>::zeros(n, n);
        for &(a, b) in &self.edges {
            l[(a, b)] = -1;
            l[(b, a)] = -1;
            l[(a, a)] += 1;
            l[(b, b)] += 1;
        }
        l
    }

    /// Parse the whitespace-separated edge-list format. `#` lines and blank
    /// lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = fields.next().ok_or_else(|| Error::Parse {
                    line: idx + 1,
                    msg: "expected two vertex labels".into(),
                })?;
                tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid vertex label {tok:?}"),
                })
            };
            let a = next()?;
            let b = next()?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "trailing fields after edge".into(),
                });
            }
            pairs.push((a, b));
        }
        Self::from_edges(&pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = g.stats();
        assert_eq!(s.vertex_count, 3);
        assert_eq!(s.edge_count, 3);
        assert_eq!(s.degrees, vec![2, 2, 2]);
    }

    #[test]
    fn path() {
        let g = Graph::from_edges(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.stats().degrees, vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::from_edges(&[]), Err(Error::EmptyEdgeList));
        assert_eq!(
            Graph::from_edges(&[(0, 1), (2, 3)]),
            Err(Error::Disconnected(2))
        );
        assert_eq!(
            Graph::from_edges(&[(0, 0), (0, 1)]),
            Err(Error::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(&[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(&[(0, 2)]), Err(Error::LabelGap(1, 2)));
    }

    #[test]
    fn laplacian_small() {
        let p2 = Graph::from_edges(&[(0, 1)]).unwrap();
        assert_eq!(
            p2.laplacian(),
            DMatrix::from_row_slice(2, 2, &[1, -1, -1, 1])
        );
        let k3 = Graph::from_edges(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        let l = k3.laplacian();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l[(i, j)], if i == j { 2 } else { -1 });
            }
        }
    }

    #[test]
    fn edge_list_parsing() {
        let text = "# triangle\n0 1\n\n1 2\n  2 0  \n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(matches!(
            Graph::parse_edge_list("0 1\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
