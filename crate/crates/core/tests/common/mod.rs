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

//! Shared fixtures for integration tests.

#![allow(dead_code)]

use flower_core::generators::{complete, cycle, path, petersen};
use flower_core::Graph;

/// Named base graphs with their marked pairs, one per orbit of the
/// automorphism group.
/// Named base graph with the marked pairs `(x, y)` to try on it.
pub type BaseCase = (&'static str, Graph, Vec<(usize, usize)>);

pub fn bases_with_pairs() -> Vec<BaseCase> {
    vec![
        ("P2", path(2).unwrap(), vec![(0, 1)]),
        ("P3", path(3).unwrap(), vec![(0, 1), (0, 2)]),
        ("K3", complete(3).unwrap(), vec![(0, 1)]),
        ("K4", complete(4).unwrap(), vec![(0, 1)]),
        ("C4", cycle(4).unwrap(), vec![(0, 1), (0, 2)]),
        ("C5", cycle(5).unwrap(), vec![(0, 1), (0, 2)]),
        ("C6", cycle(6).unwrap(), vec![(0, 1), (0, 2), (0, 3)]),
        ("Petersen", petersen(), vec![(0, 1), (0, 2)]),
    ]
}

/// Bowtie: two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::from_edges(&[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
}
