//! Closed-form extremal quantities for triangle-free graphs with bounded
//! independence number, in exact integer / rational arithmetic.
//!
//! For `k >= 2` the quadratic
//!
//! ```text
//! g_k(n, s) = k(k-1)/2 n^2 - k(3k-4) ns + (3k-4)(3k-1)/2 s^2
//! ```
//!
//! counts the edges of the densest blow-up of the Andrásfai graph `Γ_k` on `n`
//! vertices with independence number `s`; it is the relevant bound when
//! `kn/(3k-1) <= s < (k-1)n/(3k-4)`. Below `n/3` the degree bound `ns/2`
//! applies and from `n/2` upwards Mantel's `floor(n^2/4)`.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Which branch of the piecewise definition of `g` a pair `(n, s)` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RangeIndex {
    /// `s <= n/3`.
    BelowThird,
    /// `kn/(3k-1) <= s < (k-1)n/(3k-4)`.
    Band(u64),
    /// `s >= n/2`.
    AtLeastHalf,
}

impl RangeIndex {
    pub fn k(self) -> Option<u64> {
        match self {
            RangeIndex::Band(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for RangeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RangeIndex::BelowThird => f.write_str("below-third"),
            RangeIndex::Band(k) => write!(f, "{k}"),
            RangeIndex::AtLeastHalf => f.write_str("at-or-above-half"),
        }
    }
}

impl Serialize for RangeIndex {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

fn check_ns(n: u64, s: u64) -> Result<()> {
    if s > n {
        return Err(Error::OutOfRange(format!("s = {s} exceeds n = {n}")));
    }
    Ok(())
}

pub fn g_k_value(k: u64, n: u64, s: u64) -> Result<i128> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("g_k needs k >= 2, got {k}")));
    }
    let (k, n, s) = (k as i128, n as i128, s as i128);
    Ok(k * (k - 1) / 2 * n * n - k * (3 * k - 4) * n * s + (3 * k - 4) * (3 * k - 1) / 2 * s * s)
}

/// Exact classification by cross-multiplication.
pub fn range_index(n: u64, s: u64) -> Result<RangeIndex> {
    check_ns(n, s)?;
    if 3 * s <= n {
        return Ok(RangeIndex::BelowThird);
    }
    if 2 * s >= n {
        return Ok(RangeIndex::AtLeastHalf);
    }
    // Smallest k with (3k-1)s >= kn, i.e. k >= s / (3s - n).
    let k = s.div_ceil(3 * s - n).max(2);
    debug_assert!((3 * k - 1) * s >= k * n && (3 * k - 4) * s < (k - 1) * n);
    Ok(RangeIndex::Band(k))
}

pub fn mantel_bound(n: u64) -> i128 {
    (n as i128 * n as i128) / 4
}

/// `floor(ns/2)`: every vertex of a triangle-free graph has degree at most
/// its independence number.
pub fn trivial_bound(n: u64, s: u64) -> i128 {
    n as i128 * s as i128 / 2
}

pub fn trivial_bound_rational(n: u64, s: u64) -> Rational {
    Rational::new(n as i128 * s as i128, 2)
}

/// The piecewise function `g(n, s)`.
pub fn g_value(n: u64, s: u64) -> Result<Rational> {
    Ok(match range_index(n, s)? {
        RangeIndex::BelowThird => trivial_bound_rational(n, s),
        RangeIndex::Band(k) => Rational::from_integer(g_k_value(k, n, s)?),
        RangeIndex::AtLeastHalf => Rational::from_integer(mantel_bound(n)),
    })
}

/// `min { g_k(n, s) : 2 <= k <= max(n, 2) }`. For `n/3 < s < n/2` this agrees
/// with [`g_value`]; beyond `k = n` every band is empty.
pub fn g_min_over_k(n: u64, s: u64) -> Result<i128> {
    check_ns(n, s)?;
    (2..=n.max(2))
        .map(|k| g_k_value(k, n, s))
        .try_fold(i128::MAX, |acc, v| v.map(|v| acc.min(v)))
}

/// `f_k(α) = k(k-1) - 2k(3k-4)α + (3k-4)(3k-1)α²`.
pub fn f_k_value(k: u64, alpha: Rational) -> Result<Rational> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("f_k needs k >= 2, got {k}")));
    }
    let k = k as i128;
    let int = Rational::from_integer;
    Ok(int(k * (k - 1)) - int(2 * k * (3 * k - 4)) * alpha
        + int((3 * k - 4) * (3 * k - 1)) * alpha * alpha)
}

/// The conjectured Ramsey–Turán density `f(α)` for triangles.
pub fn f_conjectured(alpha: Rational) -> Result<Rational> {
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    if alpha <= zero || alpha > one {
        return Err(Error::OutOfRange(format!("α = {alpha} is outside (0, 1]")));
    }
    let third = Rational::new(1, 3);
    let half = Rational::new(1, 2);
    if alpha <= third {
        return Ok(alpha);
    }
    if alpha >= half {
        return Ok(half);
    }
    // Smallest k >= 2 with α >= k/(3k-1), i.e. k >= α/(3α-1).
    let ratio = alpha / (Rational::from_integer(3) * alpha - one);
    let k = (ratio.ceil().to_integer() as u64).max(2);
    f_k_value(k, alpha)
}

/// Both sides of `2 g_k(n,s) - ns = (kn - (3k-1)s)((k-1)n - (3k-4)s)`.
pub fn fact26_identity(k: u64, n: u64, s: u64) -> Result<(i128, i128)> {
    let lhs = 2 * g_k_value(k, n, s)? - n as i128 * s as i128;
    let (k, n, s) = (k as i128, n as i128, s as i128);
    let rhs = (k * n - (3 * k - 1) * s) * ((k - 1) * n - (3 * k - 4) * s);
    Ok((lhs, rhs))
}

fn ser_rational<S: Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(r)
}

/// All closed-form quantities at one `(n, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaPoint {
    pub n: u64,
    pub s: u64,
    pub range: RangeIndex,
    /// `g_k(n, s)` for the band index, when `(n, s)` lies in a band.
    pub g_k: Option<i128>,
    #[serde(serialize_with = "ser_rational")]
    pub g: Rational,
    pub g_floor: i128,
    pub trivial: i128,
    pub mantel: i128,
}

impl FormulaPoint {
    pub fn at(n: u64, s: u64) -> Result<Self> {
        let range = range_index(n, s)?;
        let g = g_value(n, s)?;
        Ok(FormulaPoint {
            n,
            s,
            range,
            g_k: range.k().map(|k| g_k_value(k, n, s)).transpose()?,
            g,
            g_floor: g.floor().to_integer(),
            trivial: trivial_bound(n, s),
            mantel: mantel_bound(n),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn g_k_examples() {
        assert_eq!(g_k_value(2, 10, 4).unwrap(), 20);
        assert_eq!(g_k_value(3, 8, 3).unwrap(), 12);
        assert_eq!(g_k_value(4, 11, 4).unwrap(), 22);
        assert!(g_k_value(1, 5, 2).is_err());
        // The two theorem quadratics.
        for n in 0..30u64 {
            for s in 0..=n {
                let (ni, si) = (n as i128, s as i128);
                assert_eq!(
                    g_k_value(2, n, s).unwrap(),
                    ni * ni - 4 * ni * si + 5 * si * si
                );
                assert_eq!(
                    g_k_value(3, n, s).unwrap(),
                    3 * ni * ni - 15 * ni * si + 20 * si * si
                );
            }
        }
    }

    #[test]
    fn range_examples() {
        assert_eq!(range_index(12, 5).unwrap(), RangeIndex::Band(2));
        assert_eq!(range_index(11, 4).unwrap(), RangeIndex::Band(4));
        assert_eq!(range_index(12, 4).unwrap(), RangeIndex::BelowThird);
        assert_eq!(range_index(8, 4).unwrap(), RangeIndex::AtLeastHalf);
        assert_eq!(range_index(8, 3).unwrap(), RangeIndex::Band(3));
        assert_eq!(range_index(10, 4).unwrap(), RangeIndex::Band(2));
        assert_eq!(range_index(0, 0).unwrap(), RangeIndex::BelowThird);
        assert!(range_index(3, 4).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_value(8, 4).unwrap(), q(16, 1));
        assert_eq!(g_value(13, 5).unwrap(), q(32, 1));
        assert_eq!(g_value(9, 3).unwrap(), q(27, 2));
        let p = FormulaPoint::at(9, 3).unwrap();
        assert_eq!(p.g_floor, 13);
        assert_eq!(p.g_k, None);
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_conjectured(q(2, 5)).unwrap(), q(2, 5));
        assert_eq!(f_conjectured(q(3, 8)).unwrap(), q(3, 8));
        assert_eq!(f_conjectured(q(3, 10)).unwrap(), q(3, 10));
        assert_eq!(f_conjectured(q(3, 4)).unwrap(), q(1, 2));
        assert!(f_conjectured(q(0, 1)).is_err());
        assert!(f_conjectured(q(11, 10)).is_err());
        // Theorem quadratics in density form.
        let a = q(9, 20);
        assert_eq!(
            f_conjectured(a).unwrap(),
            q(2, 1) - q(8, 1) * a + q(10, 1) * a * a
        );
        let a = q(39, 100);
        assert_eq!(
            f_conjectured(a).unwrap(),
            q(6, 1) - q(30, 1) * a + q(40, 1) * a * a
        );
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(trivial_bound(11, 4), 22);
        assert_eq!(trivial_bound(0, 0), 0);
        assert_eq!(trivial_bound(8, 3), 12);
        assert_eq!(trivial_bound(8, 3), g_k_value(3, 8, 3).unwrap());
    }

    #[test]
    fn fact26_examples() {
        assert_eq!(fact26_identity(2, 13, 5).unwrap(), (3, 3));
        assert_eq!(fact26_identity(3, 8, 3).unwrap(), (0, 0));
        assert_eq!(fact26_identity(2, 10, 4).unwrap(), (0, 0));
    }

    #[test]
    fn formula_point_row() {
        let p = FormulaPoint::at(12, 5).unwrap();
        assert_eq!(p.range, RangeIndex::Band(2));
        assert_eq!(p.g_k, Some(29));
        assert_eq!(p.g_floor, 29);
        assert_eq!(p.trivial, 30);
        assert_eq!(p.mantel, 36);
    }
}
