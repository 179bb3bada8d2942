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

//! Effective resistance in flower graphs.
//!
//! A flower graph `F_n(G, x, y)` is built from `n` copies of a base graph `G`
//! by gluing the marked vertex `x` of each copy to the marked vertex `y` of the
//! next one, closing the chain into a ring. This crate provides
//!
//! * a dense numeric oracle for resistance, Kirchhoff index and Kemeny's
//!   constant of any connected graph ([`oracle`]),
//! * resistance composition across 1- and 2-separators ([`separation`]),
//! * exact rational closed forms for generic flowers ([`flower`]), complete
//!   flowers `F_n(K_m)` ([`complete`]) and generalized sunflowers
//!   `F_n(C_m)` ([`cycle`]).

pub mod complete;
pub mod cycle;
pub mod error;
pub mod flower;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod separation;

pub use error::{Error, Result};
pub use graph::{Graph, GraphStats};
pub use oracle::{ResistanceMatrix, Tolerance};
pub use rational::Rational;
