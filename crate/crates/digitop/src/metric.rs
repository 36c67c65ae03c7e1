//! Distance computation and metric-axiom verification.
//!
//! Three families of distance are supported: the `l_p` metrics (`p = 1`,
//! `2`, `infinity` exact; other integer `p` approximate), the harmonic
//! metric on one-dimensional images with non-negative coordinates, and
//! explicit distance tables. Tables exist so that non-metrics can be fed to
//! the axiom checker on purpose; they are validated only for shape (square,
//! symmetric, zero diagonal, non-negative entries).
//!
//! The harmonic metric is the reason the axiom checker earns its keep: on
//! `{0, 1, 2, ...}` it sets `d(x, y) = |1/x - 1/y|` with `1/0` read as `0`,
//! so distances shrink toward zero and the space is not uniformly discrete.
//! Everything here is exact rational arithmetic except `l_p` for finite
//! `p >= 3`.

use crate::image::{DigitalImage, Point, SelfMap};
use crate::report::{ConclusionCheck, HypothesisCheck, ReportFlag, VerdictReport, Witness};
use crate::scalar::ExactScalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MetricError {
    #[error("l_p exponent must be at least 1")]
    BadExponent,
    #[error("harmonic metric requires dimension 1, image has dimension {0}")]
    HarmonicDimension(usize),
    #[error("harmonic metric requires non-negative coordinates, found {0}")]
    HarmonicNegative(Point),
    #[error("distance table is {got}x{got2}, expected a {expected}x{expected} matrix")]
    TableSize {
        expected: usize,
        got: usize,
        got2: usize,
    },
    #[error("distance table entry ({0},{1}) is negative")]
    TableNegative(usize, usize),
    #[error("distance table is asymmetric at ({0},{1})")]
    TableAsymmetric(usize, usize),
    #[error("distance table diagonal entry ({0},{0}) is nonzero")]
    TableDiagonal(usize),
    #[error("a table metric needs an image context for point lookup")]
    TableNeedsContext,
    #[error("at least {needed} points required, image has {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("operation requires the harmonic metric")]
    NotHarmonic,
    #[error("image is not a segment {{0..N}} of Z^1 with N >= 2")]
    NotASegment,
}

/// Exponent of an `l_p` metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpExponent {
    Finite(u32),
    Infinity,
}

/// A validated symmetric distance table with zero diagonal. Entries may
/// still violate positivity or the triangle inequality — that is what the
/// axiom checker is for.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceTable {
    entries: Vec<Vec<BigRational>>,
}

impl DistanceTable {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self, MetricError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(MetricError::TableSize {
                    expected: n,
                    got: n,
                    got2: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if v.is_negative() {
                    return Err(MetricError::TableNegative(i, j));
                }
            }
        }
        for i in 0..n {
            if !entries[i][i].is_zero() {
                return Err(MetricError::TableDiagonal(i));
            }
            for j in (i + 1)..n {
                if entries[i][j] != entries[j][i] {
                    return Err(MetricError::TableAsymmetric(i, j));
                }
            }
        }
        Ok(DistanceTable { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }
}

/// Which distance to use on an image.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricSpec {
    Lp(LpExponent),
    Harmonic,
    Table(DistanceTable),
}

impl MetricSpec {
    pub fn l1() -> Self {
        MetricSpec::Lp(LpExponent::Finite(1))
    }

    pub fn l2() -> Self {
        MetricSpec::Lp(LpExponent::Finite(2))
    }

    pub fn linf() -> Self {
        MetricSpec::Lp(LpExponent::Infinity)
    }

    /// The finite exponent, if this is an `l_p` metric.
    pub fn lp_exponent(&self) -> Option<LpExponent> {
        match self {
            MetricSpec::Lp(e) => Some(*e),
            _ => None,
        }
    }

    /// Distance between two points. Table metrics need index context and are
    /// rejected here; use [`MetricContext::d`] instead.
    pub fn distance(&self, x: &Point, y: &Point) -> Result<ExactScalar, MetricError> {
        match self {
            MetricSpec::Lp(p) => lp_distance(*p, x, y),
            MetricSpec::Harmonic => harmonic_distance(x, y),
            MetricSpec::Table(_) => Err(MetricError::TableNeedsContext),
        }
    }

    /// Check the metric is usable on the given image (harmonic constraints,
    /// table size).
    pub fn validate_for(&self, image: &DigitalImage) -> Result<(), MetricError> {
        match self {
            MetricSpec::Lp(LpExponent::Finite(p)) if *p == 0 => Err(MetricError::BadExponent),
            MetricSpec::Lp(_) => Ok(()),
            MetricSpec::Harmonic => {
                if image.dimension() != 1 {
                    return Err(MetricError::HarmonicDimension(image.dimension()));
                }
                for p in image.points() {
                    if p.coords()[0] < 0 {
                        return Err(MetricError::HarmonicNegative(p.clone()));
                    }
                }
                Ok(())
            }
            MetricSpec::Table(t) => {
                if t.len() != image.len() {
                    return Err(MetricError::TableSize {
                        expected: image.len(),
                        got: t.len(),
                        got2: t.len(),
                    });
                }
                Ok(())
            }
        }
    }
}

fn lp_distance(p: LpExponent, x: &Point, y: &Point) -> Result<ExactScalar, MetricError> {
    let deltas = x.coords().iter().zip(y.coords()).map(|(a, b)| (a - b).abs());
    match p {
        LpExponent::Infinity => {
            let m = deltas.max().unwrap_or(0);
            Ok(ExactScalar::from_integer(m))
        }
        LpExponent::Finite(0) => Err(MetricError::BadExponent),
        LpExponent::Finite(1) => Ok(ExactScalar::from_integer(deltas.sum())),
        LpExponent::Finite(2) => {
            let sum_sq: i64 = deltas.map(|d| d * d).sum();
            Ok(ExactScalar::sqrt_of(BigRational::from_integer(
                BigInt::from(sum_sq),
            )))
        }
        LpExponent::Finite(p) => {
            let sum: f64 = deltas.map(|d| (d as f64).powi(p as i32)).sum();
            Ok(ExactScalar::approx(sum.powf(1.0 / p as f64)))
        }
    }
}

/// The four-case harmonic distance on non-negative integers.
fn harmonic_distance(x: &Point, y: &Point) -> Result<ExactScalar, MetricError> {
    if x.dim() != 1 || y.dim() != 1 {
        return Err(MetricError::HarmonicDimension(x.dim().max(y.dim())));
    }
    let (a, b) = (x.coords()[0], y.coords()[0]);
    if a < 0 {
        return Err(MetricError::HarmonicNegative(x.clone()));
    }
    if b < 0 {
        return Err(MetricError::HarmonicNegative(y.clone()));
    }
    let inv = |v: i64| -> BigRational {
        if v == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(1), BigInt::from(v))
        }
    };
    let d = match (a, b) {
        (0, 0) => BigRational::zero(),
        (_, 0) => inv(a),
        (0, _) => inv(b),
        _ => (inv(a) - inv(b)).abs(),
    };
    Ok(ExactScalar::from_rational(d))
}

/// A metric bound to an image, with every pairwise distance precomputed.
/// Sweeps share one context across all map pairs on the same image.
#[derive(Clone, Debug)]
pub struct MetricContext {
    image: Arc<DigitalImage>,
    spec: MetricSpec,
    dist: Vec<ExactScalar>,
}

impl MetricContext {
    pub fn new(image: Arc<DigitalImage>, spec: MetricSpec) -> Result<Self, MetricError> {
        spec.validate_for(&image)?;
        let n = image.len();
        let mut dist = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let d = match &spec {
                    MetricSpec::Table(t) => ExactScalar::from_rational(t.entry(i, j).clone()),
                    other => other.distance(image.point(i), image.point(j))?,
                };
                dist.push(d);
            }
        }
        Ok(MetricContext { image, spec, dist })
    }

    pub fn image(&self) -> &Arc<DigitalImage> {
        &self.image
    }

    pub fn spec(&self) -> &MetricSpec {
        &self.spec
    }

    /// Distance between points `i` and `j` of the image.
    pub fn d(&self, i: usize, j: usize) -> &ExactScalar {
        &self.dist[i * self.image.len() + j]
    }

    /// Smallest distance over distinct pairs — the discreteness constant
    /// that licenses the eventual-constancy reduction. Requires two points.
    pub fn min_positive_distance(&self) -> Result<ExactScalar, MetricError> {
        let n = self.image.len();
        if n < 2 {
            return Err(MetricError::TooFewPoints { needed: 2, got: n });
        }
        let mut best: Option<&ExactScalar> = None;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = self.d(i, j);
                if best.is_none_or(|b| d.compare(b).ordering.is_lt()) {
                    best = Some(d);
                }
            }
        }
        Ok(best.expect("n >= 2 guarantees a pair").clone())
    }

    /// Check all four metric axioms over the image, reporting the first
    /// violation of each as a witness.
    pub fn verify_axioms(&self) -> VerdictReport {
        let n = self.image.len();
        let mut approximate = false;
        let mut cmp = |a: &ExactScalar, b: &ExactScalar| {
            let c = a.compare(b);
            approximate |= c.approximate;
            c.ordering
        };
        let zero = ExactScalar::zero();

        let mut identity = HypothesisCheck::new("d(x,x) = 0", true, None);
        for i in 0..n {
            if cmp(self.d(i, i), &zero).is_ne() {
                identity.holds = false;
                identity.witness = Some(Witness::new(
                    vec![self.image.point(i).clone()],
                    format!("d(x,x) = {}", self.d(i, i)),
                ));
                break;
            }
        }

        let mut positivity = HypothesisCheck::new("d(x,y) > 0 for x != y", true, None);
        'pos: for i in 0..n {
            for j in (i + 1)..n {
                if cmp(self.d(i, j), &zero).is_le() {
                    positivity.holds = false;
                    positivity.witness = Some(Witness::new(
                        vec![self.image.point(i).clone(), self.image.point(j).clone()],
                        "zero distance between distinct points",
                    ));
                    break 'pos;
                }
            }
        }

        let mut symmetry = HypothesisCheck::new("d(x,y) = d(y,x)", true, None);
        'sym: for i in 0..n {
            for j in (i + 1)..n {
                if cmp(self.d(i, j), self.d(j, i)).is_ne() {
                    symmetry.holds = false;
                    symmetry.witness = Some(Witness::new(
                        vec![self.image.point(i).clone(), self.image.point(j).clone()],
                        format!("{} vs {}", self.d(i, j), self.d(j, i)),
                    ));
                    break 'sym;
                }
            }
        }

        let mut triangle = HypothesisCheck::new("d(x,z) <= d(x,y) + d(y,z)", true, None);
        'tri: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let rhs = self.d(i, j).add(self.d(j, k));
                    if cmp(self.d(i, k), &rhs).is_gt() {
                        triangle.holds = false;
                        triangle.witness = Some(Witness::new(
                            vec![
                                self.image.point(i).clone(),
                                self.image.point(j).clone(),
                                self.image.point(k).clone(),
                            ],
                            format!("{} > {}", self.d(i, k), rhs),
                        ));
                        break 'tri;
                    }
                }
            }
        }

        let all = identity.holds && positivity.holds && symmetry.holds && triangle.holds;
        let mut flags = Vec::new();
        if approximate {
            flags.push(ReportFlag::ApproximateComparison);
        }
        VerdictReport::new(
            "metric-axioms",
            vec![identity, positivity, symmetry, triangle],
            ConclusionCheck {
                holds: all,
                witness: None,
            },
            flags,
        )
    }
}

/// Free-function form of the axiom check.
pub fn verify_metric_axioms(
    image: Arc<DigitalImage>,
    spec: MetricSpec,
) -> Result<VerdictReport, MetricError> {
    Ok(MetricContext::new(image, spec)?.verify_axioms())
}

/// The sequence `d(anchor, f(n))` for `n = 1..N` on a segment `{0..N}` under
/// the harmonic metric — the desk-scale witness for convergence behavior.
pub fn truncated_limit_trace(
    spec: &MetricSpec,
    f: &SelfMap,
    anchor: &Point,
) -> Result<Vec<ExactScalar>, MetricError> {
    if *spec != MetricSpec::Harmonic {
        return Err(MetricError::NotHarmonic);
    }
    let image = f.image();
    let n = image.len();
    if image.dimension() != 1 || n < 3 {
        return Err(MetricError::NotASegment);
    }
    for (i, p) in image.points().iter().enumerate() {
        if p.coords()[0] != i as i64 {
            return Err(MetricError::NotASegment);
        }
    }
    (1..n)
        .map(|i| harmonic_distance(anchor, image.point(f.apply(i))))
        .collect()
}

/// Largest rational `m/1000` strictly below `1/u^(1/p)` — a rational stand-in
/// for the shrinkage bound when `p > 1` makes the bound irrational.
pub fn rational_below_shrinkage_bound(u: u32, p: LpExponent) -> BigRational {
    match p {
        LpExponent::Infinity => BigRational::new(BigInt::from(999), BigInt::from(1000)),
        LpExponent::Finite(p) => {
            let mut m = 1000i64;
            loop {
                let alpha = BigRational::new(BigInt::from(m), BigInt::from(1000));
                if crate::scalar::below_shrinkage_bound(&alpha, u, Some(p)) {
                    return alpha;
                }
                m -= 1;
                assert!(m > 0, "bound search must terminate");
            }
        }
    }
}

/// `to_f64` helper for displaying traces.
pub fn trace_as_f64(trace: &[ExactScalar]) -> Vec<f64> {
    trace.iter().map(|v| v.to_f64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::SelfMap;
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn p1(v: i64) -> Point {
        Point::new(vec![v])
    }

    fn segment_ctx(n: i64, spec: MetricSpec) -> MetricContext {
        MetricContext::new(DigitalImage::segment(n), spec).unwrap()
    }

    #[test]
    fn l1_distance_examples() {
        let d = MetricSpec::l1()
            .distance(&Point::new(vec![0, 0]), &Point::new(vec![1, 1]))
            .unwrap();
        assert_eq!(d, ExactScalar::from_integer(2));
        let d = MetricSpec::l1()
            .distance(
                &Point::new(vec![0, 0, 0, 0, 0]),
                &Point::new(vec![1, 1, 1, 1, 1]),
            )
            .unwrap();
        assert_eq!(d, ExactScalar::from_integer(5));
    }

    #[test]
    fn l2_and_linf_distances() {
        let x = Point::new(vec![0, 0]);
        let y = Point::new(vec![3, 4]);
        // Perfect square collapses to a rational.
        assert_eq!(
            MetricSpec::l2().distance(&x, &y).unwrap(),
            ExactScalar::from_integer(5)
        );
        let z = Point::new(vec![1, 1]);
        assert!(matches!(
            MetricSpec::l2().distance(&x, &z).unwrap(),
            ExactScalar::Sqrt(_)
        ));
        assert_eq!(
            MetricSpec::linf().distance(&x, &y).unwrap(),
            ExactScalar::from_integer(4)
        );
        // p = 3 is the approximate path.
        let d = MetricSpec::Lp(LpExponent::Finite(3)).distance(&x, &y).unwrap();
        assert!(!d.is_exact());
    }

    #[test]
    fn harmonic_examples() {
        let d = harmonic_distance(&p1(2), &p1(0)).unwrap();
        assert_eq!(d, ExactScalar::from_rational(ratio(1, 2)));
        let d = harmonic_distance(&p1(3), &p1(5)).unwrap();
        assert_eq!(d, ExactScalar::from_rational(ratio(2, 15)));
        assert_eq!(
            harmonic_distance(&p1(0), &p1(0)).unwrap(),
            ExactScalar::zero()
        );
        assert!(harmonic_distance(&p1(-1), &p1(0)).is_err());
        assert!(MetricSpec::Harmonic
            .distance(&Point::new(vec![1, 2]), &Point::new(vec![0, 0]))
            .is_err());
    }

    #[test]
    fn axioms_pass_for_standard_metrics() {
        for spec in [
            MetricSpec::l1(),
            MetricSpec::l2(),
            MetricSpec::linf(),
            MetricSpec::Harmonic,
        ] {
            let report = segment_ctx(20, spec.clone()).verify_axioms();
            assert!(report.conclusion.holds, "{spec:?} should be a metric");
            assert!(report.flags.is_empty(), "{spec:?} should stay exact");
        }
    }

    #[test]
    fn axioms_pass_for_harmonic_up_to_50() {
        for n in [3, 17, 50] {
            let report = segment_ctx(n, MetricSpec::Harmonic).verify_axioms();
            assert!(report.conclusion.holds);
        }
    }

    #[test]
    fn l2_triangle_check_is_exact_on_the_plane() {
        let pts = vec![
            Point::new(vec![0, 0]),
            Point::new(vec![1, 0]),
            Point::new(vec![0, 1]),
            Point::new(vec![2, 1]),
        ];
        let image = Arc::new(DigitalImage::new(2, pts, 2).unwrap());
        let report = MetricContext::new(image, MetricSpec::l2())
            .unwrap()
            .verify_axioms();
        assert!(report.conclusion.holds);
        assert!(
            report.flags.is_empty(),
            "l2 axiom checks must not fall back to floats"
        );
    }

    #[test]
    fn broken_table_fails_with_witness() {
        // Zero off-diagonal entry: identity of indiscernibles fails.
        let zero = ratio(0, 1);
        let one = ratio(1, 1);
        let table = DistanceTable::new(vec![
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![one.clone(), one.clone(), zero.clone()],
        ])
        .unwrap();
        let image = DigitalImage::segment(2);
        let report = MetricContext::new(image, MetricSpec::Table(table))
            .unwrap()
            .verify_axioms();
        assert!(!report.conclusion.holds);
        let positivity = &report.hypotheses[1];
        assert!(!positivity.holds);
        let w = positivity.witness.as_ref().unwrap();
        assert_eq!(w.points, vec![p1(0), p1(1)]);
    }

    #[test]
    fn table_shape_validation() {
        let one = ratio(1, 1);
        let zero = ratio(0, 1);
        assert!(matches!(
            DistanceTable::new(vec![vec![zero.clone(), one.clone()], vec![ratio(2, 1), zero.clone()]]),
            Err(MetricError::TableAsymmetric(0, 1))
        ));
        assert!(matches!(
            DistanceTable::new(vec![vec![one.clone()]]),
            Err(MetricError::TableDiagonal(0))
        ));
        assert!(matches!(
            DistanceTable::new(vec![vec![zero.clone(), ratio(-1, 1)], vec![ratio(-1, 1), zero]]),
            Err(MetricError::TableNegative(0, 1))
        ));
    }

    #[test]
    fn min_positive_distance_examples() {
        let pts = vec![
            Point::new(vec![0, 0]),
            Point::new(vec![1, 0]),
            Point::new(vec![1, 1]),
        ];
        let image = Arc::new(DigitalImage::new(2, pts, 1).unwrap());
        let ctx = MetricContext::new(image, MetricSpec::l1()).unwrap();
        assert_eq!(
            ctx.min_positive_distance().unwrap(),
            ExactScalar::from_integer(1)
        );

        let ctx = segment_ctx(10, MetricSpec::Harmonic);
        assert_eq!(
            ctx.min_positive_distance().unwrap(),
            ExactScalar::from_rational(ratio(1, 90))
        );

        let single = MetricContext::new(DigitalImage::segment(0), MetricSpec::l1()).unwrap();
        assert_eq!(
            single.min_positive_distance(),
            Err(MetricError::TooFewPoints { needed: 2, got: 1 })
        );
    }

    #[test]
    fn lattice_lp_min_distance_is_at_least_one() {
        for spec in [MetricSpec::l1(), MetricSpec::l2(), MetricSpec::linf()] {
            let ctx = segment_ctx(6, spec);
            let min = ctx.min_positive_distance().unwrap();
            assert!(min
                .compare(&ExactScalar::from_integer(1))
                .ordering
                .is_ge());
        }
    }

    #[test]
    fn truncated_traces() {
        let image = DigitalImage::segment(10);
        let identity = SelfMap::identity(Arc::clone(&image));
        let trace = truncated_limit_trace(&MetricSpec::Harmonic, &identity, &p1(0)).unwrap();
        assert_eq!(trace.len(), 10);
        for (i, v) in trace.iter().enumerate() {
            assert_eq!(*v, ExactScalar::from_rational(ratio(1, i as i64 + 1)));
        }
        // Strictly decreasing toward 0.
        for w in trace.windows(2) {
            assert!(w[1].compare(&w[0]).ordering.is_lt());
        }

        // f(n) = n + 1 capped at N, anchored at f(0) = 1: 1 - 1/(n+1), rising.
        let successor = SelfMap::new(
            Arc::clone(&image),
            (0..=10).map(|i| ((i + 1).min(10)) as usize).collect(),
        )
        .unwrap();
        let trace = truncated_limit_trace(&MetricSpec::Harmonic, &successor, &p1(1)).unwrap();
        for (i, v) in trace.iter().take(9).enumerate() {
            let n = i as i64 + 1;
            assert_eq!(*v, ExactScalar::from_rational(ratio(n, n + 1)));
        }

        // Constant map gives a constant trace.
        let constant = SelfMap::constant(Arc::clone(&image), 4).unwrap();
        let trace = truncated_limit_trace(&MetricSpec::Harmonic, &constant, &p1(0)).unwrap();
        assert!(trace.iter().all(|v| *v == ExactScalar::from_rational(ratio(1, 4))));

        assert_eq!(
            truncated_limit_trace(&MetricSpec::l1(), &identity, &p1(0)),
            Err(MetricError::NotHarmonic)
        );
    }

    #[test]
    fn rational_shrinkage_bound_is_tight() {
        use crate::scalar::below_shrinkage_bound;
        for (u, p) in [(1u32, 1u32), (2, 1), (5, 1), (2, 2), (3, 2)] {
            let alpha = rational_below_shrinkage_bound(u, LpExponent::Finite(p));
            assert!(below_shrinkage_bound(&alpha, u, Some(p)));
            let step = ratio(1, 1000);
            assert!(!below_shrinkage_bound(&(alpha + step), u, Some(p)));
        }
    }

    proptest! {
        #[test]
        fn exact_distances_are_deterministic_and_symmetric(
            a in proptest::collection::vec(-5i64..6, 2),
            b in proptest::collection::vec(-5i64..6, 2),
        ) {
            for spec in [MetricSpec::l1(), MetricSpec::l2(), MetricSpec::linf()] {
                let x = Point::new(a.clone());
                let y = Point::new(b.clone());
                let d1 = spec.distance(&x, &y).unwrap();
                let d2 = spec.distance(&x, &y).unwrap();
                let d_rev = spec.distance(&y, &x).unwrap();
                prop_assert!(d1.is_exact());
                // Bit-identical recomputation and exact symmetry.
                prop_assert_eq!(format!("{d1}"), format!("{d2}"));
                prop_assert_eq!(format!("{d1}"), format!("{d_rev}"));
            }
        }

        #[test]
        fn harmonic_symmetry(a in 0i64..60, b in 0i64..60) {
            let d1 = harmonic_distance(&p1(a), &p1(b)).unwrap();
            let d2 = harmonic_distance(&p1(b), &p1(a)).unwrap();
            prop_assert_eq!(format!("{d1}"), format!("{d2}"));
        }

        #[test]
        fn min_positive_distance_is_positive(n in 1i64..30) {
            for spec in [MetricSpec::l1(), MetricSpec::Harmonic] {
                let ctx = segment_ctx(n.max(1), spec);
                if ctx.image().len() >= 2 {
                    let min = ctx.min_positive_distance().unwrap();
                    prop_assert!(!min.is_zero());
                }
            }
        }
    }
}
