//! Exact non-negative scalars for distance values and distance comparisons.
//!
//! Distances under `l1`, `linf`, the harmonic metric, and table metrics are
//! plain rationals. An `l2` distance is the square root of a rational; it is
//! carried as its exact square, so any comparison against another distance or
//! a rational multiple of one is decided by cross-multiplying integers. A sum
//! of two such square roots (the right side of a triangle-inequality check)
//! is still exactly comparable against a single distance. Only sums of three
//! or more distinct irrational terms, and `lp` distances for finite `p >= 3`,
//! fall back to `f64` with a fixed tolerance, and every comparison reports
//! whether that fallback was used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Tolerance for comparisons that had to leave the exact path.
pub const APPROX_TOLERANCE: f64 = 1e-9;

/// A non-negative scalar, exact unless the construction forced a float.
#[derive(Clone, Debug)]
pub enum ExactScalar {
    /// An exact rational value.
    Rational(BigRational),
    /// The square root of an exact rational (an `l2` distance).
    Sqrt(BigRational),
    /// A sum of two square roots, `sqrt(a) + sqrt(b)`.
    SqrtSum(BigRational, BigRational),
    /// An approximate value; comparisons use [`APPROX_TOLERANCE`].
    Approx(f64),
}

/// Outcome of a comparison, recording whether it left the exact path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    pub approximate: bool,
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        debug_assert!(n >= 0);
        ExactScalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        debug_assert!(!r.is_negative());
        ExactScalar::Rational(r)
    }

    /// `sqrt(q)`, simplified to a rational when `q` is a perfect square.
    pub fn sqrt_of(q: BigRational) -> Self {
        debug_assert!(!q.is_negative());
        if let Some(root) = rational_sqrt(&q) {
            ExactScalar::Rational(root)
        } else {
            ExactScalar::Sqrt(q)
        }
    }

    pub fn approx(v: f64) -> Self {
        ExactScalar::Approx(v)
    }

    /// True when no floating-point approximation is involved.
    pub fn is_exact(&self) -> bool {
        !matches!(self, ExactScalar::Approx(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Sqrt(q) => q.is_zero(),
            ExactScalar::SqrtSum(a, b) => a.is_zero() && b.is_zero(),
            ExactScalar::Approx(v) => v.abs() <= APPROX_TOLERANCE,
        }
    }

    /// The exact rational value, when this scalar is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            ExactScalar::Sqrt(q) => q.to_f64().unwrap_or(f64::NAN).sqrt(),
            ExactScalar::SqrtSum(a, b) => {
                a.to_f64().unwrap_or(f64::NAN).sqrt() + b.to_f64().unwrap_or(f64::NAN).sqrt()
            }
            ExactScalar::Approx(v) => *v,
        }
    }

    /// Compare two scalars, staying exact on every representable path.
    pub fn compare(&self, other: &ExactScalar) -> Comparison {
        use ExactScalar::*;
        let exact = |ordering| Comparison {
            ordering,
            approximate: false,
        };
        match (self, other) {
            (Rational(a), Rational(b)) => exact(a.cmp(b)),
            (Sqrt(a), Sqrt(b)) => exact(a.cmp(b)),
            // Both sides non-negative, so squaring preserves the order.
            (Rational(r), Sqrt(q)) => exact((r * r).cmp(q)),
            (Sqrt(q), Rational(r)) => exact(q.cmp(&(r * r))),
            (Rational(r), SqrtSum(a, b)) => exact(cmp_sqrt_vs_sqrt_sum(&(r * r), a, b)),
            (SqrtSum(a, b), Rational(r)) => exact(cmp_sqrt_vs_sqrt_sum(&(r * r), a, b).reverse()),
            (Sqrt(q), SqrtSum(a, b)) => exact(cmp_sqrt_vs_sqrt_sum(q, a, b)),
            (SqrtSum(a, b), Sqrt(q)) => exact(cmp_sqrt_vs_sqrt_sum(q, a, b).reverse()),
            (SqrtSum(a, b), SqrtSum(c, d)) => {
                if (a == c && b == d) || (a == d && b == c) {
                    exact(Ordering::Equal)
                } else {
                    approx_cmp(self.to_f64(), other.to_f64())
                }
            }
            _ => approx_cmp(self.to_f64(), other.to_f64()),
        }
    }

    /// Scale by a non-negative rational factor.
    pub fn scale(&self, k: &BigRational) -> ExactScalar {
        debug_assert!(!k.is_negative());
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(r * k),
            ExactScalar::Sqrt(q) => ExactScalar::sqrt_of(q * (k * k)),
            ExactScalar::SqrtSum(a, b) => {
                let k2 = k * k;
                add_sqrt_parts(a * &k2, b * &k2)
            }
            ExactScalar::Approx(v) => ExactScalar::Approx(v * k.to_f64().unwrap_or(f64::NAN)),
        }
    }

    /// Add two scalars. The result stays exact unless it would need three or
    /// more distinct square-root terms.
    pub fn add(&self, other: &ExactScalar) -> ExactScalar {
        use ExactScalar::*;
        if self.is_exact() && self.is_zero() {
            return other.clone();
        }
        if other.is_exact() && other.is_zero() {
            return self.clone();
        }
        match (self, other) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Sqrt(a), Sqrt(b)) => add_sqrt_parts(a.clone(), b.clone()),
            (Rational(r), Sqrt(q)) | (Sqrt(q), Rational(r)) => add_sqrt_parts(r * r, q.clone()),
            _ => Approx(self.to_f64() + other.to_f64()),
        }
    }

    /// `self / denom`; the caller guarantees `denom` is nonzero.
    pub fn div(&self, denom: &ExactScalar) -> ExactScalar {
        use ExactScalar::*;
        debug_assert!(!denom.is_zero());
        match (self, denom) {
            (Rational(a), Rational(b)) => Rational(a / b),
            (Sqrt(a), Sqrt(b)) => ExactScalar::sqrt_of(a / b),
            (Rational(a), Sqrt(b)) => ExactScalar::sqrt_of((a * a) / b),
            (Sqrt(a), Rational(b)) => ExactScalar::sqrt_of(a / (b * b)),
            _ => Approx(self.to_f64() / denom.to_f64()),
        }
    }
}

fn add_sqrt_parts(a: BigRational, b: BigRational) -> ExactScalar {
    // Collapse when either term is a perfect square of zero, or when both
    // are rational after simplification.
    let ra = rational_sqrt(&a);
    let rb = rational_sqrt(&b);
    match (ra, rb) {
        (Some(x), Some(y)) => ExactScalar::Rational(x + y),
        (Some(x), None) if x.is_zero() => ExactScalar::Sqrt(b),
        (None, Some(y)) if y.is_zero() => ExactScalar::Sqrt(a),
        _ => ExactScalar::SqrtSum(a, b),
    }
}

/// Ordering of `sqrt(q)` versus `sqrt(a) + sqrt(b)`, decided exactly.
///
/// `sqrt(q) <=> sqrt(a) + sqrt(b)` iff `q - a - b <=> 2 sqrt(ab)`; when the
/// left side is non-negative, squaring once more settles it.
fn cmp_sqrt_vs_sqrt_sum(q: &BigRational, a: &BigRational, b: &BigRational) -> Ordering {
    let s = q - a - b;
    let rhs_sq = BigRational::from_integer(BigInt::from(4)) * a * b;
    if s.is_negative() {
        if rhs_sq.is_zero() && s.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Less
        }
    } else {
        (&s * &s).cmp(&rhs_sq)
    }
}

fn approx_cmp(a: f64, b: f64) -> Comparison {
    let ordering = if (a - b).abs() <= APPROX_TOLERANCE {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    };
    Comparison {
        ordering,
        approximate: true,
    }
}

/// Exact square root of a rational, when one exists.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).ordering == Ordering::Equal
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{}", format_ratio(r)),
            ExactScalar::Sqrt(q) => write!(f, "sqrt({})", format_ratio(q)),
            ExactScalar::SqrtSum(a, b) => {
                write!(f, "sqrt({})+sqrt({})", format_ratio(a), format_ratio(b))
            }
            ExactScalar::Approx(v) => write!(f, "~{v:.12}"),
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Render a rational as `num/den` with positive denominator. Never a float.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `num/den` (or a bare integer) into a rational.
pub fn parse_ratio(text: &str) -> Result<BigRational, String> {
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("invalid integer {s:?}"))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

/// Convenience constructor for small rationals.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `true` iff `alpha^p * u < 1`, i.e. `alpha < 1 / u^(1/p)`, decided by
/// cross-multiplying `p`-th powers. For `p = infinity` the bound is taken
/// to be 1.
pub fn below_shrinkage_bound(alpha: &BigRational, u: u32, p: Option<u32>) -> bool {
    if alpha.is_negative() || alpha.is_zero() {
        return false;
    }
    match p {
        None => alpha < &BigRational::one(),
        Some(p) => {
            let mut pow = BigRational::one();
            for _ in 0..p {
                pow *= alpha;
            }
            pow * BigRational::from_integer(BigInt::from(u)) < BigRational::one()
        }
    }
}
