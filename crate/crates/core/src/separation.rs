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

//! Resistance composition across 1- and 2-separators.
//!
//! The caller supplies the decomposition; nothing here looks for separators.
//! Everything is generic over [`Scalar`], which covers both `f64` and
//! [`Rational`](crate::Rational).

use std::fmt::Debug;

use num_traits::{Num, Signed};

use crate::error::{Error, Result};

pub trait Scalar: Num + Signed + PartialOrd + Clone + Debug {}

impl<T: Num + Signed + PartialOrd + Clone + Debug> Scalar for T {}

fn check_nonnegative<T: Scalar>(v: &T) -> Result<()> {
    if v.is_negative() {
        Err(Error::NegativeInput(format!("{v:?}")))
    } else {
        Ok(())
    }
}

/// Series rule across a cut vertex `u`: `r_G(i, j) = r_G1(i, u) + r_G2(j, u)`.
pub fn compose_one_sep<T: Scalar>(r1_iu: T, r2_ju: T) -> Result<T> {
    check_nonnegative(&r1_iu)?;
    check_nonnegative(&r2_ju)?;
    Ok(r1_iu + r2_ju)
}

/// Subgraph resistances around a 2-separator `{i, j}` with `u, v` on the
/// `G1` side. `r2_ij` is the only quantity measured in `G2`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSepBundle<T> {
    pub r1_uv: T,
    pub r1_ui: T,
    pub r1_vj: T,
    pub r1_uj: T,
    pub r1_vi: T,
    pub r1_ij: T,
    pub r2_ij: T,
}

impl<T: Scalar> TwoSepBundle<T> {
    fn validate(&self) -> Result<()> {
        for v in [
            &self.r1_uv,
            &self.r1_ui,
            &self.r1_vj,
            &self.r1_uj,
            &self.r1_vi,
            &self.r1_ij,
            &self.r2_ij,
        ] {
            check_nonnegative(v)?;
        }
        if (self.r1_ij.clone() + self.r2_ij.clone()).is_zero() {
            return Err(Error::ZeroDenominator("r1_ij + r2_ij"));
        }
        Ok(())
    }
}

/// `r_G(u, v) = r1_uv - [r1_ui + r1_vj - r1_uj - r1_vi]^2 / (4 [r1_ij + r2_ij])`.
pub fn compose_two_sep<T: Scalar>(b: &TwoSepBundle<T>) -> Result<T> {
    b.validate()?;
    let t = b.r1_ui.clone() + b.r1_vj.clone() - b.r1_uj.clone() - b.r1_vi.clone();
    let four = T::one() + T::one() + T::one() + T::one();
    let denom = four * (b.r1_ij.clone() + b.r2_ij.clone());
    Ok(b.r1_uv.clone() - t.clone() * t / denom)
}
