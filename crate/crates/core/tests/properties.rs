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

//! Structural and metric properties on random connected graphs and random
//! bundles.

mod common;

use flower_core::flower::{
    flower_resistance_cross, flower_resistance_same, max_resistance_search, BaseResBundle,
    FlowerSpec, OracleBase,
};
use flower_core::oracle::{check_metric, residual, resistance, resistance_matrix};
use flower_core::rational::rat;
use flower_core::Graph;
use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_connected(size: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..size).collect();
    order.shuffle(&mut rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..size {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        edges.insert((parent.min(child), parent.max(child)));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..size);
        let b = rng.gen_range(0..size);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(&edges.into_iter().collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn handshake_and_laplacian(size in 2usize..25, extra in 0usize..30, seed: u64) {
        let g = random_connected(size, extra, seed);
        let s = g.stats();
        prop_assert_eq!(s.degrees.iter().sum::<usize>(), 2 * s.edge_count);
        let l = g.laplacian();
        prop_assert_eq!(&l, &l.transpose());
        for i in 0..size {
            prop_assert_eq!(l.row(i).iter().sum::<i64>(), 0);
        }
        let lf = DMatrix::<f64>::from_fn(size, size, |i, j| l[(i, j)] as f64);
        let mut eig: Vec<f64> = SymmetricEigen::new(lf).eigenvalues.iter().copied().collect();
        eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert!(eig[0].abs() < 1e-9);
        prop_assert!(eig[1] > 1e-9);
    }

    #[test]
    fn oracle_contracts(size in 2usize..25, extra in 0usize..30, seed: u64) {
        let g = random_connected(size, extra, seed);
        let r = resistance_matrix(&g);
        prop_assert!(check_metric(&r, 1e-9).is_ok());
        let i = (seed as usize) % size;
        let j = (seed as usize / 7 + 1) % size;
        if i != j {
            prop_assert!(residual(&g, i, j).unwrap() <= 1e-9);
            prop_assert!((resistance(&g, i, j).unwrap() - r.get(i, j)).abs() < 1e-9);
        }
    }

    #[test]
    fn removing_an_edge_never_lowers_resistance(size in 3usize..16, extra in 1usize..20, seed: u64) {
        let g = random_connected(size, extra, seed);
        let before = resistance_matrix(&g);
        for skip in 0..g.edge_count() {
            let kept: Vec<_> = g.edges().iter().enumerate()
                .filter(|&(k, _)| k != skip).map(|(_, &e)| e).collect();
            // bridges disconnect; vertices may vanish from the label range
            let Ok(h) = Graph::from_edges(&kept) else { continue };
            if h.vertex_count() != size { continue; }
            let after = resistance_matrix(&h);
            for a in 0..size {
                for b in 0..size {
                    prop_assert!(after.get(a, b) >= before.get(a, b) - 1e-9);
                }
            }
        }
    }

    #[test]
    fn reversed_orientation_is_exact(
        vals in proptest::collection::vec((0i64..40, 1i64..12), 4),
        rxy in (1i64..40, 1i64..12),
        n in 3usize..12,
        d_seed in 0usize..100,
    ) {
        let q = |(a, b): (i64, i64)| rat(a, b);
        let b = BaseResBundle {
            r_ux: q(vals[0]), r_uy: q(vals[1]), r_vx: q(vals[2]), r_vy: q(vals[3]), r_xy: q(rxy),
        };
        let d = 2 + d_seed % (n - 1);
        prop_assert_eq!(
            flower_resistance_cross(&b, d, n).unwrap(),
            flower_resistance_cross(&b.reversed(), n - d + 2, n).unwrap()
        );
    }

    #[test]
    fn correction_terms_are_nonnegative(
        vals in proptest::collection::vec((0i64..40, 1i64..12), 5),
        rxy in (1i64..40, 1i64..12),
        n in 3usize..12,
        d_seed in 0usize..100,
    ) {
        let q = |(a, b): (i64, i64)| rat(a, b);
        let b = BaseResBundle {
            r_ux: q(vals[0]), r_uy: q(vals[1]), r_vx: q(vals[2]), r_vy: q(vals[3]), r_xy: q(rxy),
        };
        let d = 2 + d_seed % (n - 1);
        let series = &b.r_uy + &b.r_vx + rat(d as i64 - 2, 1) * &b.r_xy;
        prop_assert!(flower_resistance_cross(&b, d, n).unwrap() <= series);
        let r_uv = q(vals[4]);
        prop_assert!(flower_resistance_same(&b, &r_uv, n).unwrap() <= r_uv);
    }
}

#[test]
fn max_resistance_grows_without_bound() {
    for (name, base, pairs) in common::bases_with_pairs() {
        let src = OracleBase::new(&base).unwrap();
        for (x, y) in pairs {
            for n in 3..=8 {
                let spec = FlowerSpec::new(base.clone(), x, y, n).unwrap();
                let now = max_resistance_search(&spec, &src).unwrap().value;
                let later = max_resistance_search(&spec.with_petals(n + 8).unwrap(), &src)
                    .unwrap()
                    .value;
                assert!(later > now, "{name} ({x},{y}) n={n}");
            }
        }
    }
}
