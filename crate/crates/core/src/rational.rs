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

//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator, so structural equality is numeric equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Lossless `num/den` rendering; integers keep the `/1` suffix.
pub fn format_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_exact(s: &str) -> Result<Rational> {
    let err = |msg: &str| Error::Parse {
        line: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// taken from the continued-fraction convergents and semiconvergents.
pub fn best_approximation(x: f64, max_den: u64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let neg = x < 0.0;
    let mut rem = x.abs();
    // convergents h/k
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let cap = max_den as i128;
    loop {
        let a = rem.floor();
        if a > 1e15 {
            break;
        }
        let a = a as i128;
        let h2 = a * h1 + h0;
        let k2 = a * k1 + k0;
        if k2 > cap {
            // largest admissible semiconvergent
            let t = (cap - k0) / k1.max(1);
            if t > 0 {
                let hs = t * h1 + h0;
                let ks = t * k1 + k0;
                let semi = hs as f64 / ks as f64;
                let conv = h1 as f64 / k1 as f64;
                if (semi - x.abs()).abs() < (conv - x.abs()).abs() {
                    h1 = hs;
                    k1 = ks;
                }
            }
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = rem - a as f64;
        if frac < 1e-15 {
            break;
        }
        rem = 1.0 / frac;
    }
    let r = Rational::new(BigInt::from(h1), BigInt::from(k1.max(1)));
    if neg {
        -r
    } else {
        r
    }
}

/// Rationalize `x` with denominator cap `max_den` and confirm the result is
/// within `tol` of `x`.
pub fn rationalize(x: f64, max_den: u64, tol: f64) -> Result<Rational> {
    let r = best_approximation(x, max_den);
    if (to_f64(&r) - x).abs() <= tol {
        Ok(r)
    } else {
        Err(Error::Rationalize {
            value: x,
            best: format_exact(&r),
            tol,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_exact(&r), "-3/2");
        assert_eq!(format_exact(&int(33)), "33/1");
    }

    #[test]
    fn exact_addition() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(2, 3) * rat(3, 4), rat(1, 2));
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        assert_eq!(parse_exact("65/6").unwrap(), rat(65, 6));
        assert_eq!(parse_exact(" 4 ").unwrap(), int(4));
        assert!(parse_exact("1/0").is_err());
        assert!(parse_exact("a/2").is_err());
    }

    #[test]
    fn rationalize_recovers_small_fractions() {
        for (n, d) in [
            (2, 3),
            (11, 18),
            (65, 6),
            (-7, 15),
            (0, 1),
            (3, 5),
            (999_983, 1_000_000),
        ] {
            let x = n as f64 / d as f64;
            assert_eq!(rationalize(x, 1_000_000, 1e-9).unwrap(), rat(n, d));
        }
    }

    #[test]
    fn rationalize_rejects_beyond_cap() {
        assert!(rationalize(std::f64::consts::PI, 10, 1e-9).is_err());
        let approx = best_approximation(std::f64::consts::PI, 1000);
        assert_eq!(approx, rat(355, 113));
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = rat(n, d);
            prop_assert_eq!(parse_exact(&format_exact(&r)).unwrap(), r);
        }

        #[test]
        fn rationalize_exact_for_small_denominators(n in -5_000i64..5_000, d in 1i64..2_000) {
            let r = rat(n, d);
            prop_assert_eq!(rationalize(to_f64(&r), 1_000_000, 1e-9).unwrap(), r);
        }
    }
}
