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

//! Standard base graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path on `m >= 2` vertices, labelled in order.
pub fn path(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!(
            "path needs at least 2 vertices, got {m}"
        )));
    }
    let edges: Vec<_> = (0..m - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(&edges)
}

/// Cycle on `m >= 3` vertices; vertex `i` is adjacent to `i ± 1 mod m`.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidSpec(format!(
            "cycle needs at least 3 vertices, got {m}"
        )));
    }
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Graph::from_edges(&edges)
}

pub fn complete(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!(
            "complete graph needs at least 2 vertices, got {m}"
        )));
    }
    let edges: Vec<_> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(&edges)
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(&edges).expect("petersen graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(path(2).unwrap().edge_count(), 1);
        assert_eq!(cycle(6).unwrap().edge_count(), 6);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
    }
}
