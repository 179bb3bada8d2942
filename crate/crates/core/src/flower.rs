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

//! Generalized flower graphs `F_n(G, x, y)`.
//!
//! Petal `i` (1-based) is a copy of the base graph `G`. The marked vertex `x`
//! of petal `i` is identified with `y` of petal `i + 1`, and `x` of petal `n`
//! with `y` of petal 1. These `n` shared vertices are the associated
//! vertices; a [`FlowerLocator`] always records one as `x` of the lower petal
//! (`x` of petal `n` for the vertex it shares with petal 1).
//!
//! Pair parameter `d` counts petals inclusively from `u`'s petal to `v`'s
//! petal in ascending cyclic order. Walking in that direction a path leaves a
//! petal through its `x` and enters the next through `y`, so the closed forms
//! below, which are written for a walk leaving through `y`, are fed bundles
//! with the two marked vertices exchanged.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::rational::{int, rationalize, Rational};

/// Base graph with a marked pair and a petal count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowerSpec {
    base: Graph,
    x: usize,
    y: usize,
    n: usize,
}

impl FlowerSpec {
    pub fn new(base: Graph, x: usize, y: usize, n: usize) -> Result<Self> {
        base.check_vertex(x)?;
        base.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidSpec(format!(
                "marked vertices coincide ({x})"
            )));
        }
        if n < 3 {
            return Err(Error::InvalidSpec(format!(
                "petal count must be at least 3, got {n}"
            )));
        }
        Ok(FlowerSpec { base, x, y, n })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Same base and marked pair, different petal count.
    pub fn with_petals(&self, n: usize) -> Result<Self> {
        Self::new(self.base.clone(), self.x, self.y, n)
    }

    fn next_petal(&self, petal: usize) -> usize {
        petal % self.n + 1
    }

    fn prev_petal(&self, petal: usize) -> usize {
        if petal == 1 {
            self.n
        } else {
            petal - 1
        }
    }

    /// Canonical locator of base vertex `base_vertex` in petal `petal`.
    pub fn locator(&self, petal: usize, base_vertex: usize) -> Result<FlowerLocator> {
        if petal == 0 || petal > self.n {
            return Err(Error::InvalidPair(format!(
                "petal {petal} outside 1..={}",
                self.n
            )));
        }
        self.base.check_vertex(base_vertex)?;
        Ok(if base_vertex == self.y {
            FlowerLocator {
                petal: self.prev_petal(petal),
                base_vertex: self.x,
                is_associated: true,
            }
        } else {
            FlowerLocator {
                petal,
                base_vertex,
                is_associated: base_vertex == self.x,
            }
        })
    }

    /// Every `(petal, base vertex)` naming the same flower vertex.
    pub fn representations(&self, loc: FlowerLocator) -> Vec<(usize, usize)> {
        if loc.is_associated {
            vec![(loc.petal, self.x), (self.next_petal(loc.petal), self.y)]
        } else {
            vec![(loc.petal, loc.base_vertex)]
        }
    }

    /// Inclusive ascending petal count from `from` to `to`.
    pub fn petal_span(&self, from: usize, to: usize) -> usize {
        (to + self.n - from) % self.n + 1
    }

    /// All canonical locators, ordered by `(petal, base_vertex)`.
    pub fn locators(&self) -> Vec<FlowerLocator> {
        (1..=self.n)
            .flat_map(|p| {
                (0..self.base.vertex_count())
                    .filter(|&v| v != self.y)
                    .map(move |v| FlowerLocator {
                        petal: p,
                        base_vertex: v,
                        is_associated: v == self.x,
                    })
            })
            .collect()
    }

    fn shared_petal(&self, u: FlowerLocator, v: FlowerLocator) -> Option<(usize, usize, usize)> {
        for (pu, a) in self.representations(u) {
            for (pv, b) in self.representations(v) {
                if pu == pv {
                    return Some((pu, a, b));
                }
            }
        }
        None
    }

    /// `d` of a pair from canonical locators, folded to the shorter of the
    /// two orientations (`d` and `n - d + 2`). Pairs inside one petal give 1.
    pub fn normalized_d(&self, u: FlowerLocator, v: FlowerLocator) -> usize {
        if u.petal == v.petal {
            return 1;
        }
        let d = self.petal_span(u.petal, v.petal);
        d.min(self.n + 2 - d)
    }
}

/// Position of a flower vertex: petal (1-based) and base-graph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlowerLocator {
    pub petal: usize,
    pub base_vertex: usize,
    pub is_associated: bool,
}

impl fmt::Display for FlowerLocator {
    /// `petal:base_vertex`, the syntax accepted by the command line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.petal, self.base_vertex)
    }
}

/// Constructed flower with its vertex labelling.
///
/// Petal `i` owns the contiguous label block starting at `(i - 1) (m - 1)`:
/// its associated vertex `x` first, then the remaining non-marked base
/// vertices in increasing order.
#[derive(Debug, Clone)]
pub struct Flower {
    spec: FlowerSpec,
    graph: Graph,
    rank: Vec<usize>,
    locators: Vec<FlowerLocator>,
}

impl Flower {
    pub fn spec(&self) -> &FlowerSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    fn block(&self) -> usize {
        self.spec.base.vertex_count() - 1
    }

    /// Flower label of base vertex `v` in petal `petal`.
    pub fn label(&self, petal: usize, v: usize) -> Result<usize> {
        let loc = self.spec.locator(petal, v)?;
        Ok(self.label_of(loc))
    }

    pub fn label_of(&self, loc: FlowerLocator) -> usize {
        let start = (loc.petal - 1) * self.block();
        if loc.is_associated {
            start
        } else {
            start + 1 + self.rank[loc.base_vertex]
        }
    }

    pub fn locator_of(&self, label: usize) -> FlowerLocator {
        self.locators[label]
    }
}

pub fn build_flower(spec: &FlowerSpec) -> Flower {
    let m = spec.base.vertex_count();
    let mut rank = vec![usize::MAX; m];
    let mut next = 0;
    for (v, slot) in rank.iter_mut().enumerate() {
        if v != spec.x && v != spec.y {
            *slot = next;
            next += 1;
        }
    }
    let mut flower = Flower {
        spec: spec.clone(),
        graph: spec.base.clone(),
        rank,
        locators: Vec::new(),
    };
    let mut edges = Vec::with_capacity(spec.n * spec.base.edge_count());
    for petal in 1..=spec.n {
        for &(a, b) in spec.base.edges() {
            let la = flower.label_of(spec.locator(petal, a).expect("valid petal"));
            let lb = flower.label_of(spec.locator(petal, b).expect("valid petal"));
            edges.push((la, lb));
        }
    }
    flower.graph = Graph::from_edges(&edges).expect("flower of a connected base is a valid graph");
    let mut locators = vec![None; flower.graph.vertex_count()];
    for loc in spec.locators() {
        locators[flower.label_of(loc)] = Some(loc);
    }
    flower.locators = locators
        .into_iter()
        .map(|l| l.expect("labelling is a bijection"))
        .collect();
    flower
}

/// Exact resistances in the base graph.
pub trait BaseResistance {
    fn base_resistance(&self, a: usize, b: usize) -> Rational;
}

/// `K_m`: every distinct pair is at `2/m`.
#[derive(Debug, Clone, Copy)]
pub struct CompleteBase {
    pub m: usize,
}

impl BaseResistance for CompleteBase {
    fn base_resistance(&self, a: usize, b: usize) -> Rational {
        if a == b {
            Rational::zero()
        } else {
            Rational::new(2.into(), self.m.into())
        }
    }
}

/// `C_m` with vertex `i` adjacent to `i ± 1 mod m`.
#[derive(Debug, Clone, Copy)]
pub struct CycleBase {
    pub m: usize,
}

impl BaseResistance for CycleBase {
    fn base_resistance(&self, a: usize, b: usize) -> Rational {
        let gap = a.abs_diff(b);
        let dist = gap.min(self.m - gap);
        Rational::new(((self.m - dist) * dist).into(), self.m.into())
    }
}

/// Oracle floats rounded to nearby rationals (denominator at most
/// `MAX_DENOMINATOR`) and checked against the floats.
#[derive(Debug, Clone)]
pub struct OracleBase {
    size: usize,
    table: Vec<Rational>,
}

impl OracleBase {
    pub const MAX_DENOMINATOR: u64 = 1_000_000;
    pub const VERIFY_TOL: f64 = 1e-9;

    pub fn new(g: &Graph) -> Result<Self> {
        let r = oracle::resistance_matrix(g);
        let size = g.vertex_count();
        let mut table = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                table.push(rationalize(
                    r.get(i, j),
                    Self::MAX_DENOMINATOR,
                    Self::VERIFY_TOL,
                )?);
            }
        }
        Ok(OracleBase { size, table })
    }
}

impl BaseResistance for OracleBase {
    fn base_resistance(&self, a: usize, b: usize) -> Rational {
        self.table[a * self.size + b].clone()
    }
}

/// The five base-graph resistances of a cross-petal pair, oriented so the
/// walk from `u` leaves through `y` and reaches `v` through `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseResBundle {
    pub r_ux: Rational,
    pub r_uy: Rational,
    pub r_vx: Rational,
    pub r_vy: Rational,
    pub r_xy: Rational,
}

impl BaseResBundle {
    fn validate(&self) -> Result<()> {
        for v in [&self.r_ux, &self.r_uy, &self.r_vx, &self.r_vy, &self.r_xy] {
            if v.is_negative() {
                return Err(Error::NegativeInput(format!("{v}")));
            }
        }
        if self.r_xy.is_zero() {
            return Err(Error::ZeroDenominator("r_xy"));
        }
        Ok(())
    }

    /// Bundle for the walk the other way round the ring, which starts at `v`
    /// (still leaving through `y`) and spans `n - d + 2` petals.
    pub fn reversed(&self) -> Self {
        BaseResBundle {
            r_ux: self.r_vx.clone(),
            r_uy: self.r_vy.clone(),
            r_vx: self.r_ux.clone(),
            r_vy: self.r_uy.clone(),
            r_xy: self.r_xy.clone(),
        }
    }

    fn imbalance(&self) -> Rational {
        &self.r_ux + &self.r_vy - &self.r_uy - &self.r_vx
    }
}

/// Resistance between `u` in petal 1 and `v` in petal `d`.
pub fn flower_resistance_cross(b: &BaseResBundle, d: usize, n: usize) -> Result<Rational> {
    b.validate()?;
    if d < 2 || d > n {
        return Err(Error::InvalidPair(format!("d = {d} outside 2..={n}")));
    }
    let d = int(d as i64);
    let n = int(n as i64);
    let series = &b.r_uy + &b.r_vx + (&d - int(2)) * &b.r_xy;
    let t = b.imbalance() - int(2) * (&d - int(1)) * &b.r_xy;
    Ok(series - &t * &t / (int(4) * n * &b.r_xy))
}

/// Resistance between two vertices of one petal.
pub fn flower_resistance_same(b: &BaseResBundle, r_uv: &Rational, n: usize) -> Result<Rational> {
    b.validate()?;
    if r_uv.is_negative() {
        return Err(Error::NegativeInput(format!("{r_uv}")));
    }
    let t = b.imbalance();
    Ok(r_uv - &t * &t / (int(4) * int(n as i64) * &b.r_xy))
}

/// Closed-form resistance between two flower vertices.
pub fn flower_resistance(
    spec: &FlowerSpec,
    u: FlowerLocator,
    v: FlowerLocator,
    src: &dyn BaseResistance,
) -> Result<Rational> {
    for loc in [u, v] {
        if loc.petal == 0 || loc.petal > spec.n || loc.base_vertex == spec.y {
            return Err(Error::InvalidPair(format!("non-canonical locator {loc:?}")));
        }
        spec.base.check_vertex(loc.base_vertex)?;
    }
    if u == v {
        return Ok(Rational::zero());
    }
    let (x, y) = (spec.x, spec.y);
    let r_xy = src.base_resistance(x, y);
    if let Some((_, a, b)) = spec.shared_petal(u, v) {
        let bundle = BaseResBundle {
            r_ux: src.base_resistance(a, x),
            r_uy: src.base_resistance(a, y),
            r_vx: src.base_resistance(b, x),
            r_vy: src.base_resistance(b, y),
            r_xy,
        };
        return flower_resistance_same(&bundle, &src.base_resistance(a, b), spec.n);
    }
    let (a, b) = (u.base_vertex, v.base_vertex);
    let bundle = BaseResBundle {
        r_ux: src.base_resistance(a, y),
        r_uy: src.base_resistance(a, x),
        r_vx: src.base_resistance(b, y),
        r_vy: src.base_resistance(b, x),
        r_xy,
    };
    flower_resistance_cross(&bundle, spec.petal_span(u.petal, v.petal), spec.n)
}

/// Maximizing pair of [`max_resistance_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct MaxResistance {
    pub u: FlowerLocator,
    pub v: FlowerLocator,
    pub value: Rational,
    /// `d` of the pair in its shorter orientation.
    pub d: usize,
}

/// Exhaustive closed-form search for the largest pairwise resistance.
///
/// Rotating petals is an automorphism, so `u` only ranges over petal 1. Ties
/// keep the lexicographically smallest `(u, v)`.
pub fn max_resistance_search(spec: &FlowerSpec, src: &dyn BaseResistance) -> Result<MaxResistance> {
    let all = spec.locators();
    let mut best: Option<MaxResistance> = None;
    for &u in all.iter().filter(|l| l.petal == 1) {
        for &v in &all {
            if v == u {
                continue;
            }
            let value = flower_resistance(spec, u, v, src)?;
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(MaxResistance {
                    u,
                    v,
                    value,
                    d: spec.normalized_d(u, v),
                });
            }
        }
    }
    best.ok_or_else(|| Error::InvalidSpec("flower has a single vertex".into()))
}

/// Entry `k - n_from` is `max F_{k+1} - max F_k` for `k` in `n_from..n_to`.
pub fn max_diff_sequence(
    base: &Graph,
    x: usize,
    y: usize,
    n_from: usize,
    n_to: usize,
    src: &dyn BaseResistance,
) -> Result<Vec<Rational>> {
    let spec = FlowerSpec::new(base.clone(), x, y, n_from)?;
    let mut prev = max_resistance_search(&spec, src)?.value;
    let mut out = Vec::with_capacity(n_to.saturating_sub(n_from));
    for k in n_from..n_to {
        let next = max_resistance_search(&spec.with_petals(k + 1)?, src)?.value;
        out.push(&next - &prev);
        prev = next;
    }
    Ok(out)
}

/// Exact Kirchhoff index of a graph from exact pairwise resistances.
pub fn exact_kirchhoff(g: &Graph, src: &dyn BaseResistance) -> Rational {
    let n = g.vertex_count();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            acc += src.base_resistance(i, j);
        }
    }
    acc
}

/// Exact Kemeny's constant `d^T R d / (4 q)` from exact pairwise resistances.
pub fn exact_kemeny(g: &Graph, src: &dyn BaseResistance) -> Rational {
    let n = g.vertex_count();
    let deg = g.degrees();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            acc += src.base_resistance(i, j) * int((deg[i] * deg[j]) as i64);
        }
    }
    // each unordered pair counted once, so 2 / (4q)
    acc / int(2 * g.edge_count() as i64)
}

/// Exact pairwise resistances of a whole flower via the closed forms.
pub struct FlowerClosedForm<'a> {
    flower: &'a Flower,
    src: &'a dyn BaseResistance,
}

impl<'a> FlowerClosedForm<'a> {
    pub fn new(flower: &'a Flower, src: &'a dyn BaseResistance) -> Self {
        FlowerClosedForm { flower, src }
    }

    pub fn try_resistance(&self, a: usize, b: usize) -> Result<Rational> {
        let spec = self.flower.spec();
        flower_resistance(
            spec,
            self.flower.locator_of(a),
            self.flower.locator_of(b),
            self.src,
        )
    }
}

impl BaseResistance for FlowerClosedForm<'_> {
    fn base_resistance(&self, a: usize, b: usize) -> Rational {
        self.try_resistance(a, b)
            .expect("canonical flower locators are always valid")
    }
}

/// `(lo, hi)` with `lo <= Kf(F_n(G)) <= hi`.
pub fn kirchhoff_bounds(
    spec: &FlowerSpec,
    kf_base: &Rational,
    r_xy: &Rational,
) -> (Rational, Rational) {
    let n = int(spec.n as i64);
    let m = int(spec.base.vertex_count() as i64);
    let lo = &n * kf_base - &m * (&m - int(1)) * r_xy / int(2);
    let hi = kf_base * (&n + &n * &m * (&n - int(1)))
        + r_xy * (&n * &n * &n - &n * &n) * &m * &m / int(4);
    (lo, hi)
}

/// `(lo, hi)` with `lo <= K(F_n(G)) <= hi`.
pub fn kemeny_bounds(
    spec: &FlowerSpec,
    kem_base: &Rational,
    r_xy: &Rational,
    q_base: usize,
    m: usize,
) -> (Rational, Rational) {
    let n = int(spec.n as i64);
    let q = int(q_base as i64);
    let m = int(m as i64);
    let m1 = &m - int(1);
    let lo = kem_base - &m * &m1 * &m1 * &m1 * r_xy / (int(2) * &n * &q);
    let two_m2 = int(2) * &m - int(2);
    let hi = kem_base * (int(4) * &n - int(1))
        + r_xy * (&n * &n - int(3) * &n + int(2)) * &two_m2 * &two_m2 * &m * &m / (int(8) * &q);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::rational::rat;

    fn sf(n: usize) -> FlowerSpec {
        FlowerSpec::new(complete(3).unwrap(), 0, 1, n).unwrap()
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(FlowerSpec::new(complete(3).unwrap(), 0, 0, 3).is_err());
        assert!(FlowerSpec::new(complete(3).unwrap(), 0, 1, 2).is_err());
        assert!(FlowerSpec::new(complete(3).unwrap(), 0, 5, 3).is_err());
    }

    #[test]
    fn sunflower_three_shape() {
        let f = build_flower(&sf(3));
        let s = f.graph().stats();
        assert_eq!(s.vertex_count, 6);
        assert_eq!(s.edge_count, 9);
        let mut d = s.degrees.clone();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 2, 4, 4, 4]);
        for label in 0..6 {
            let loc = f.locator_of(label);
            assert_eq!(f.label_of(loc), label);
            let deg = f.graph().degree(label);
            assert_eq!(deg, if loc.is_associated { 4 } else { 2 });
        }
        // associated vertices open each block
        assert_eq!(f.label(1, 0).unwrap(), 0);
        assert_eq!(f.label(2, 1).unwrap(), 0);
        assert_eq!(f.label(1, 1).unwrap(), f.label(3, 0).unwrap());
    }

    #[test]
    fn edge_flower_is_cycle() {
        for n in 3..9 {
            let f = build_flower(&FlowerSpec::new(path(2).unwrap(), 0, 1, n).unwrap());
            let g = f.graph();
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.edge_count(), n);
            assert!(g.degrees().iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn hexagon_flower_size() {
        let f = build_flower(&FlowerSpec::new(cycle(6).unwrap(), 0, 2, 4).unwrap());
        assert_eq!(f.graph().vertex_count(), 20);
        assert_eq!(f.graph().edge_count(), 24);
    }

    #[test]
    fn cross_formula_examples() {
        let k = rat(2, 3);
        let b = BaseResBundle {
            r_ux: k.clone(),
            r_uy: k.clone(),
            r_vx: k.clone(),
            r_vy: k.clone(),
            r_xy: k.clone(),
        };
        assert_eq!(flower_resistance_cross(&b, 2, 3).unwrap(), rat(10, 9));
        assert!(flower_resistance_cross(&b, 1, 3).is_err());
        assert!(flower_resistance_cross(&b, 4, 3).is_err());

        // u = x, v = y reduces to d (n - d) r_xy / n
        let r = rat(3, 7);
        let b = BaseResBundle {
            r_ux: int(0),
            r_uy: r.clone(),
            r_vx: r.clone(),
            r_vy: int(0),
            r_xy: r.clone(),
        };
        for n in 3..10usize {
            for d in 2..=n {
                let want = int((d * (n - d)) as i64) * &r / int(n as i64);
                assert_eq!(flower_resistance_cross(&b, d, n).unwrap(), want);
            }
        }
    }

    #[test]
    fn same_formula_examples() {
        let k = rat(2, 3);
        let b = BaseResBundle {
            r_ux: k.clone(),
            r_uy: k.clone(),
            r_vx: k.clone(),
            r_vy: k.clone(),
            r_xy: k.clone(),
        };
        assert_eq!(flower_resistance_same(&b, &k, 5).unwrap(), k);
        let b = BaseResBundle {
            r_ux: int(0),
            r_uy: k.clone(),
            r_vx: k.clone(),
            r_vy: k.clone(),
            r_xy: k.clone(),
        };
        assert_eq!(flower_resistance_same(&b, &k, 3).unwrap(), rat(11, 18));
        let mut zero = b.clone();
        zero.r_xy = int(0);
        assert_eq!(
            flower_resistance_same(&zero, &k, 3),
            Err(Error::ZeroDenominator("r_xy"))
        );
    }

    #[test]
    fn sunflower_pair_values() {
        let spec = sf(3);
        let src = CompleteBase { m: 3 };
        let a1 = spec.locator(1, 0).unwrap();
        let a2 = spec.locator(2, 0).unwrap();
        assert_eq!(flower_resistance(&spec, a1, a2, &src).unwrap(), rat(4, 9));
        assert_eq!(flower_resistance(&spec, a1, a1, &src).unwrap(), int(0));
        let o1 = spec.locator(1, 2).unwrap();
        let o2 = spec.locator(2, 2).unwrap();
        assert_eq!(flower_resistance(&spec, o1, o2, &src).unwrap(), rat(10, 9));
    }

    #[test]
    fn max_for_small_complete_flowers() {
        let src = CompleteBase { m: 3 };
        let best = max_resistance_search(&sf(5), &src).unwrap();
        assert_eq!(best.value, rat(22, 15));
        assert_eq!(best.d, 3);
        let best = max_resistance_search(&sf(4), &src).unwrap();
        assert_eq!(best.value, rat(4, 3));
        assert_eq!(best.d, 3);
    }

    #[test]
    fn bounds_examples() {
        let spec = FlowerSpec::new(path(2).unwrap(), 0, 1, 3).unwrap();
        let (lo, hi) = kirchhoff_bounds(&spec, &int(1), &int(1));
        assert_eq!(lo, int(2));
        assert_eq!(hi, int(33));

        let spec = sf(3);
        let (lo, hi) = kemeny_bounds(&spec, &rat(4, 3), &rat(2, 3), 3, 3);
        assert_eq!(lo, rat(4, 9));
        assert!(lo <= rat(14, 3) && rat(14, 3) <= hi);
    }

    #[test]
    fn exact_base_invariants() {
        let g = complete(3).unwrap();
        let src = CompleteBase { m: 3 };
        assert_eq!(exact_kirchhoff(&g, &src), int(2));
        assert_eq!(exact_kemeny(&g, &src), rat(4, 3));
    }

    #[test]
    fn oracle_base_is_exact_for_petersen() {
        let g = crate::generators::petersen();
        let src = OracleBase::new(&g).unwrap();
        // adjacent pair in the Petersen graph: 3/5
        assert_eq!(src.base_resistance(0, 1), rat(3, 5));
        assert_eq!(src.base_resistance(0, 2), rat(4, 5));
    }
}
