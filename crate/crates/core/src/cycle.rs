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

//! Generalized sunflowers `F_n(C_m)`.
//!
//! The base cycle has vertices `0..m` in cyclic order with marked vertices
//! `x = 0` and `y = p`. Arc `D1` is the short side `0, 1, .., p`; arc `D2` is
//! the long side `p, p + 1, .., m - 1, 0`. When `p = m / 2` the arcs tie and
//! `D1` is the one through vertex 1.
//!
//! Positions `l` and `k` are measured from `y` along the vertex's own arc.
//! Associated vertices count as lying on `D2` (so `p_u = p`), at `l = 0` for
//! `y` and `l = m - p` for `x`.

use crate::error::{Error, Result};
use crate::flower::{FlowerLocator, FlowerSpec};
use crate::generators;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleFlowerParams {
    m: usize,
    n: usize,
    p: usize,
}

impl CycleFlowerParams {
    pub fn new(m: usize, n: usize, p: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidSpec(format!("cycle needs m >= 3, got {m}")));
        }
        if n < 3 {
            return Err(Error::InvalidSpec(format!(
                "petal count must be at least 3, got {n}"
            )));
        }
        if p == 0 || p > m / 2 {
            return Err(Error::InvalidSpec(format!(
                "p must lie in 1..={}, got {p}",
                m / 2
            )));
        }
        Ok(CycleFlowerParams { m, n, p })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn spec(&self) -> FlowerSpec {
        let base = generators::cycle(self.m).expect("m >= 3");
        FlowerSpec::new(base, 0, self.p, self.n).expect("valid parameters")
    }
}

/// Pair coordinates used by [`gs_resistance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclePairPosition {
    pub d: usize,
    pub p_u: usize,
    pub p_v: usize,
    pub l: usize,
    pub k: usize,
    pub same_petal: bool,
    pub same_arc: bool,
}

impl CyclePairPosition {
    fn validate(&self, params: CycleFlowerParams) -> Result<()> {
        let (m, p) = (params.m, params.p);
        let bad = |msg: String| Err(Error::InvalidPair(msg));
        for (name, pv) in [("p_u", self.p_u), ("p_v", self.p_v)] {
            if pv != p && pv != m - p {
                return bad(format!("{name} = {pv} not in {{{p}, {}}}", m - p));
            }
        }
        if self.l > m - self.p_u {
            return bad(format!(
                "l = {} exceeds arc length {}",
                self.l,
                m - self.p_u
            ));
        }
        if self.k > m - self.p_v {
            return bad(format!(
                "k = {} exceeds arc length {}",
                self.k,
                m - self.p_v
            ));
        }
        if self.same_petal {
            if self.same_arc && (self.p_u != self.p_v || self.k < self.l) {
                return bad("same-arc pair needs p_u = p_v and k >= l".into());
            }
        } else if self.d < 2 || self.d > params.n {
            return bad(format!("d = {} outside 2..={}", self.d, params.n));
        }
        Ok(())
    }
}

/// `(m - dist) dist / m`.
pub fn cycle_resistance(m: usize, dist: usize) -> Result<Rational> {
    if dist > m {
        return Err(Error::InvalidPair(format!(
            "distance {dist} exceeds cycle length {m}"
        )));
    }
    Ok(Rational::new(((m - dist) * dist).into(), m.into()))
}

pub fn gs_resistance(params: CycleFlowerParams, pos: CyclePairPosition) -> Result<Rational> {
    pos.validate(params)?;
    let m = int(params.m as i64);
    let n = int(params.n as i64);
    let (pu, pv) = (int(pos.p_u as i64), int(pos.p_v as i64));
    let (l, k, d) = (int(pos.l as i64), int(pos.k as i64), int(pos.d as i64));
    let span = &pu * (&m - &pu);
    if !pos.same_petal {
        let series = (&pu + &l) * (&m - &pu - &l) + &k * (&m - &k) + &span * (&d - int(2));
        let t =
            &pv * (&m - &pv - int(2) * &k) + &pu * (&m - &pu + int(2) * &l) - int(2) * &d * &span;
        return Ok(series / &m - &t * &t / (int(4) * &n * &m * &span));
    }
    if pos.same_arc {
        let gap = &k - &l;
        Ok(&gap * (&m - &gap) / &m - &pu * &gap * &gap / (&n * &m * (&m - &pu)))
    } else {
        let sum = &k + &l;
        let t = &pu * &pu + &pu * (int(2) * &l - &m) + &pv * (&m - int(2) * &k - &pv);
        Ok(&sum * (&m - &sum) / &m - &t * &t / (int(4) * &n * &m * &span))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arc {
    Short,
    Long,
}

/// Arc, `p` of the opposite arc, and offset from `y`.
fn arc_position(params: CycleFlowerParams, w: usize) -> (Arc, usize, usize) {
    let (m, p) = (params.m, params.p);
    if w == p {
        (Arc::Long, p, 0)
    } else if w == 0 {
        (Arc::Long, p, m - p)
    } else if w < p {
        (Arc::Short, m - p, p - w)
    } else {
        (Arc::Long, p, w - p)
    }
}

/// Coordinates of a pair of distinct vertices of `params.spec()`.
pub fn pair_position(
    params: CycleFlowerParams,
    u: FlowerLocator,
    v: FlowerLocator,
) -> Result<CyclePairPosition> {
    if u == v {
        return Err(Error::InvalidPair("coincident vertices".into()));
    }
    let spec = params.spec();
    for (pu, a) in spec.representations(u) {
        for (pv, b) in spec.representations(v) {
            if pu != pv {
                continue;
            }
            let (arc_a, p_a, off_a) = arc_position(params, a);
            let (arc_b, p_b, off_b) = arc_position(params, b);
            let same_arc = arc_a == arc_b;
            let ((p_u, l), (p_v, k)) = if same_arc && off_a > off_b {
                ((p_b, off_b), (p_a, off_a))
            } else {
                ((p_a, off_a), (p_b, off_b))
            };
            return Ok(CyclePairPosition {
                d: 1,
                p_u,
                p_v,
                l,
                k,
                same_petal: true,
                same_arc,
            });
        }
    }
    let (_, p_u, l) = arc_position(params, u.base_vertex);
    let (_, p_v, k) = arc_position(params, v.base_vertex);
    Ok(CyclePairPosition {
        d: spec.petal_span(u.petal, v.petal),
        p_u,
        p_v,
        l,
        k,
        same_petal: false,
        same_arc: false,
    })
}

pub fn gs_pair_resistance(
    params: CycleFlowerParams,
    u: FlowerLocator,
    v: FlowerLocator,
) -> Result<Rational> {
    if u == v {
        return Ok(int(0));
    }
    gs_resistance(params, pair_position(params, u, v)?)
}

pub fn gs_kirchhoff(params: CycleFlowerParams) -> Rational {
    let (m, n, p) = (
        int(params.m as i64),
        int(params.n as i64),
        int(params.p as i64),
    );
    let m1 = &m - int(1);
    let first = &n
        * (&p * &m - &p * &p)
        * (&n * &n * &m1 * &m1 + &m * &m * (int(4) - int(6) * &n) + int(6) * &m * &n - int(1))
        / (int(12) * &m);
    let second =
        &n * (&m * &m * &m + &m - int(2) - int(2) * &n * &m1 * &m1 * (&m + int(1))) / int(12);
    first - second
}

pub fn gs_kemeny(params: CycleFlowerParams) -> Rational {
    let (m, n, p) = (
        int(params.m as i64),
        int(params.n as i64),
        int(params.p as i64),
    );
    ((&n * &n - int(6) * &n + int(4)) * (&p * &m - &p * &p) + &m * &m * (int(2) * &n - int(1))
        - int(2) * &n
        - int(1))
        / int(6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn params(m: usize, n: usize, p: usize) -> CycleFlowerParams {
        CycleFlowerParams::new(m, n, p).unwrap()
    }

    #[test]
    fn param_validation() {
        assert!(CycleFlowerParams::new(4, 3, 3).is_err());
        assert!(CycleFlowerParams::new(4, 3, 0).is_err());
        assert!(CycleFlowerParams::new(2, 3, 1).is_err());
        assert!(CycleFlowerParams::new(5, 2, 1).is_err());
    }

    #[test]
    fn cycle_resistance_examples() {
        assert_eq!(cycle_resistance(4, 2).unwrap(), int(1));
        assert_eq!(cycle_resistance(7, 0).unwrap(), int(0));
        assert_eq!(cycle_resistance(5, 1).unwrap(), rat(4, 5));
        assert!(cycle_resistance(5, 6).is_err());
        for m in 3..12 {
            for dist in 0..=m {
                assert_eq!(cycle_resistance(m, dist), cycle_resistance(m, m - dist));
            }
        }
    }

    #[test]
    fn triangle_cross_pair_matches_sunflower() {
        let pos = CyclePairPosition {
            d: 2,
            p_u: 1,
            p_v: 1,
            l: 1,
            k: 1,
            same_petal: false,
            same_arc: false,
        };
        assert_eq!(gs_resistance(params(3, 3, 1), pos).unwrap(), rat(10, 9));
    }

    #[test]
    fn coincident_positions() {
        let pos = CyclePairPosition {
            d: 1,
            p_u: 2,
            p_v: 2,
            l: 1,
            k: 1,
            same_petal: true,
            same_arc: true,
        };
        assert_eq!(gs_resistance(params(6, 4, 2), pos).unwrap(), int(0));
    }

    #[test]
    fn invalid_positions() {
        let mut pos = CyclePairPosition {
            d: 1,
            p_u: 2,
            p_v: 2,
            l: 3,
            k: 1,
            same_petal: true,
            same_arc: true,
        };
        assert!(gs_resistance(params(6, 4, 2), pos).is_err());
        pos.l = 0;
        pos.p_u = 3;
        assert!(gs_resistance(params(6, 4, 2), pos).is_err());
    }

    #[test]
    fn closed_indices() {
        assert_eq!(gs_kirchhoff(params(4, 3, 2)), int(33));
        assert_eq!(gs_kemeny(params(4, 3, 2)), rat(53, 6));
        assert_eq!(gs_kirchhoff(params(3, 3, 1)), rat(65, 6));
        assert_eq!(gs_kemeny(params(3, 3, 1)), rat(14, 3));
    }
}
