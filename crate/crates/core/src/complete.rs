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

//! Complete flowers `F_n(K_m)` and sunflowers `SF_n = F_n(K_3)`.

use crate::error::{Error, Result};
use crate::flower::{FlowerLocator, FlowerSpec};
use crate::generators;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteFlowerParams {
    m: usize,
    n: usize,
}

impl CompleteFlowerParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidSpec(format!(
                "complete flower needs m >= 3, got {m}"
            )));
        }
        if n < 3 {
            return Err(Error::InvalidSpec(format!(
                "petal count must be at least 3, got {n}"
            )));
        }
        Ok(CompleteFlowerParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `F_n(K_m)` with marked vertices `x = 0`, `y = 1`.
    pub fn spec(&self) -> FlowerSpec {
        let base = generators::complete(self.m).expect("m >= 3");
        FlowerSpec::new(base, 0, 1, self.n).expect("valid parameters")
    }
}

/// Which of the two vertices are associated (shared between petals).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairCase {
    BothAssociated,
    OneAssociated,
    Neither,
}

impl PairCase {
    /// The `d` that describes the same pair counted the other way round the
    /// ring.
    pub fn mirrored_d(self, d: usize, n: usize) -> usize {
        match self {
            PairCase::BothAssociated => n - d,
            PairCase::OneAssociated => n + 1 - d,
            PairCase::Neither => n + 2 - d,
        }
    }
}

fn r(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Closed-form resistance for a pair of the given case.
///
/// `d` is the inclusive number of petals spanned by the pair:
/// * both associated: petals strictly between the two shared vertices,
///   `1..n`;
/// * one associated: petals from the first petal past the shared vertex up
///   to the other vertex's petal, `1..=n`;
/// * neither: petals from one vertex's petal to the other's, `1..=n`, with
///   `d = 1` for two outer vertices of one petal.
pub fn cf_resistance(p: CompleteFlowerParams, case: PairCase, d: usize) -> Result<Rational> {
    let (m, n) = (p.m as i64, p.n as i64);
    let max_d = match case {
        PairCase::BothAssociated => p.n - 1,
        _ => p.n,
    };
    if d == 0 || d > max_d {
        return Err(Error::InvalidPair(format!(
            "d = {d} invalid for {case:?} (1..={max_d})"
        )));
    }
    let d = d as i64;
    Ok(match case {
        PairCase::BothAssociated => r(2 * d * (n - d), m * n),
        PairCase::OneAssociated => r(2 * d, m) - r((2 * d - 1).pow(2), 2 * m * n),
        PairCase::Neither if d == 1 => r(2, m),
        PairCase::Neither => r(2 * d, m) - r(2 * (d - 1).pow(2), m * n),
    })
}

/// Case and `d` of a pair in `p.spec()`.
pub fn classify_pair(
    p: CompleteFlowerParams,
    u: FlowerLocator,
    v: FlowerLocator,
) -> Result<(PairCase, usize)> {
    if u == v {
        return Err(Error::InvalidPair("coincident vertices".into()));
    }
    let spec = p.spec();
    Ok(match (u.is_associated, v.is_associated) {
        (true, true) => (
            PairCase::BothAssociated,
            spec.petal_span(u.petal, v.petal) - 1,
        ),
        (true, false) | (false, true) => {
            let (a, o) = if u.is_associated { (u, v) } else { (v, u) };
            // the shared vertex a sits on petals a.petal and a.petal + 1
            let first = a.petal % p.n + 1;
            (PairCase::OneAssociated, spec.petal_span(first, o.petal))
        }
        (false, false) => (PairCase::Neither, spec.petal_span(u.petal, v.petal)),
    })
}

pub fn cf_pair_resistance(
    p: CompleteFlowerParams,
    u: FlowerLocator,
    v: FlowerLocator,
) -> Result<Rational> {
    if u == v {
        return Ok(int(0));
    }
    let (case, d) = classify_pair(p, u, v)?;
    cf_resistance(p, case, d)
}

/// Largest pairwise resistance in `F_n(K_m)`.
pub fn cf_max_resistance(p: CompleteFlowerParams) -> Rational {
    let (m, n) = (p.m as i64, p.n as i64);
    if n % 2 == 0 {
        r(n + 4, 2 * m)
    } else {
        r(n * n + 4 * n - 1, 2 * m * n)
    }
}

pub fn cf_kirchhoff(p: CompleteFlowerParams) -> Rational {
    let (m, n) = (int(p.m as i64), int(p.n as i64));
    let inner = int(5) + int(12) * &n + &n * &n + &m * &m * (int(-1) + int(6) * &n + &n * &n)
        - &m * (int(1) + int(18) * &n + int(2) * &n * &n);
    &n * inner / (int(6) * m)
}

pub fn cf_kemeny(p: CompleteFlowerParams) -> Rational {
    let (m, n) = (int(p.m as i64), int(p.n as i64));
    (&m - int(1)) * (int(-12) * &n + &m * (&n * &n + int(6) * &n - int(1))) / (int(6) * m)
}

/// `SF_n` pair resistance, written directly in `n` and `d`.
pub fn sunflower_resistance(n: usize, case: PairCase, d: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!(
            "petal count must be at least 3, got {n}"
        )));
    }
    let max_d = if case == PairCase::BothAssociated {
        n - 1
    } else {
        n
    };
    if d == 0 || d > max_d {
        return Err(Error::InvalidPair(format!(
            "d = {d} invalid for {case:?} (1..={max_d})"
        )));
    }
    let (n, d) = (n as i64, d as i64);
    Ok(match case {
        PairCase::BothAssociated => r(2 * d * (n - d), 3 * n),
        PairCase::OneAssociated => r(4 * n * d - 4 * d * d + 4 * d - 1, 6 * n),
        PairCase::Neither => r(2 * (n * d - (d - 1).pow(2)), 3 * n),
    })
}

pub fn sunflower_kirchhoff(n: usize) -> Rational {
    let n = n as i64;
    r(4 * n.pow(3) + 12 * n * n - 7 * n, 18)
}

pub fn sunflower_kemeny(n: usize) -> Rational {
    let n = n as i64;
    r(n * n + 2 * n - 1, 3)
}
