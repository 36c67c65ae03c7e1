//! Digital images as graphs: lattice points, `c_u` adjacency, connectedness,
//! digital continuity, composition, and fixed points.
//!
//! Two points of `Z^n` are `c_u`-adjacent when they differ in at most `u`
//! coordinates and every differing coordinate differs by exactly 1. A
//! self-map is digitally continuous when adjacent points map to equal or
//! adjacent points; that characterization is what the checker uses, and its
//! equivalence with the subset-connectedness definition is covered by tests.
//!
//! Points are sorted lexicographically on construction and everything
//! downstream works with indices into that canonical order, so reports and
//! sweeps are deterministic. Images and maps are immutable after
//! construction and safe to share across workers.

use serde::Serialize;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ImageError {
    #[error("dimension mismatch: point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("adjacency parameter u={u} out of range (dimension {dimension})")]
    UOutOfRange { u: u32, dimension: usize },
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error("an image must contain at least one point")]
    EmptyImage,
    #[error("point index {index} out of range for an image of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("map table has {got} entries, expected {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("maps are defined on different images")]
    ImageMismatch,
}

/// A lattice point of `Z^n`. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<i64>> for Point {
    fn from(coords: Vec<i64>) -> Self {
        Point(coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `c_u` adjacency: `x != y`, at most `u` coordinates differ, and each
/// differing coordinate differs by exactly 1.
pub fn cu_adjacent(x: &Point, y: &Point, u: u32) -> Result<bool, ImageError> {
    if x.dim() != y.dim() {
        return Err(ImageError::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    if u == 0 || u as usize > x.dim() {
        return Err(ImageError::UOutOfRange {
            u,
            dimension: x.dim(),
        });
    }
    let mut differing = 0u32;
    for (a, b) in x.coords().iter().zip(y.coords()) {
        match (a - b).abs() {
            0 => {}
            1 => differing += 1,
            _ => return Ok(false),
        }
    }
    Ok(differing >= 1 && differing <= u)
}

/// Adjacency is cached as a bit matrix only past this size; small images
/// recompute on demand, which is cheaper than the cache for sweep workloads.
const ADJACENCY_CACHE_THRESHOLD: usize = 64;

/// A finite digital image `(X, c_u)`: distinct lattice points in canonical
/// lexicographic order plus the adjacency parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitalImage {
    dimension: usize,
    points: Vec<Point>,
    u: u32,
    adjacency: Option<Vec<u64>>,
}

impl DigitalImage {
    /// Build an image, sorting the points into canonical order. Rejects
    /// empty point sets, duplicates, mixed dimensions, and `u` out of
    /// `1..=dimension`.
    pub fn new(dimension: usize, mut points: Vec<Point>, u: u32) -> Result<Self, ImageError> {
        if points.is_empty() {
            return Err(ImageError::EmptyImage);
        }
        for p in &points {
            if p.dim() != dimension {
                return Err(ImageError::DimensionMismatch {
                    expected: dimension,
                    got: p.dim(),
                });
            }
        }
        if u == 0 || u as usize > dimension {
            return Err(ImageError::UOutOfRange { u, dimension });
        }
        points.sort();
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(ImageError::DuplicatePoint(w[0].clone()));
            }
        }
        let mut image = DigitalImage {
            dimension,
            points,
            u,
            adjacency: None,
        };
        if image.points.len() > ADJACENCY_CACHE_THRESHOLD {
            image.adjacency = Some(image.build_adjacency_bits());
        }
        Ok(image)
    }

    /// The interval `{0, .., n}` in `Z^1` with `c_1` adjacency.
    pub fn segment(n: i64) -> Arc<DigitalImage> {
        let points = (0..=n).map(|v| Point::new(vec![v])).collect();
        Arc::new(DigitalImage::new(1, points, 1).expect("segment is always valid"))
    }

    fn build_adjacency_bits(&self) -> Vec<u64> {
        let n = self.points.len();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for i in 0..n {
            for j in (i + 1)..n {
                if cu_adjacent(&self.points[i], &self.points[j], self.u).unwrap_or(false) {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                    bits[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        bits
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty point sets
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    /// `c_u` adjacency by index.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        match &self.adjacency {
            Some(bits) => {
                let words = self.points.len().div_ceil(64);
                bits[i * words + j / 64] >> (j % 64) & 1 == 1
            }
            None => cu_adjacent(&self.points[i], &self.points[j], self.u).unwrap_or(false),
        }
    }

    /// All indices adjacent to `points[i]`, ascending.
    pub fn neighbors(&self, i: usize) -> Result<Vec<usize>, ImageError> {
        if i >= self.points.len() {
            return Err(ImageError::IndexOutOfRange {
                index: i,
                len: self.points.len(),
            });
        }
        Ok((0..self.points.len())
            .filter(|&j| self.adjacent(i, j))
            .collect())
    }

    /// Graph connectedness of the whole image.
    pub fn is_connected(&self) -> bool {
        self.subset_connected(&(0..self.points.len()).collect::<Vec<_>>())
    }

    /// Graph connectedness of a non-empty subset of point indices.
    pub fn subset_connected(&self, subset: &[usize]) -> bool {
        if subset.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.points.len()];
        let mut member = vec![false; self.points.len()];
        for &i in subset {
            member[i] = true;
        }
        let mut stack = vec![subset[0]];
        seen[subset[0]] = true;
        let mut reached = 0usize;
        while let Some(i) = stack.pop() {
            reached += 1;
            for j in 0..self.points.len() {
                if member[j] && !seen[j] && self.adjacent(i, j) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        let distinct: usize = member.iter().filter(|&&m| m).count();
        reached == distinct
    }
}

/// A total self-map on an image, stored as an index table over the canonical
/// point order.
#[derive(Clone, Debug)]
pub struct SelfMap {
    image: Arc<DigitalImage>,
    table: Vec<usize>,
}

impl PartialEq for SelfMap {
    fn eq(&self, other: &Self) -> bool {
        same_image(self, other) && self.table == other.table
    }
}
impl Eq for SelfMap {}

pub(crate) fn same_image(a: &SelfMap, b: &SelfMap) -> bool {
    Arc::ptr_eq(&a.image, &b.image) || a.image == b.image
}

impl SelfMap {
    pub fn new(image: Arc<DigitalImage>, table: Vec<usize>) -> Result<Self, ImageError> {
        if table.len() != image.len() {
            return Err(ImageError::TableLength {
                expected: image.len(),
                got: table.len(),
            });
        }
        for &t in &table {
            if t >= image.len() {
                return Err(ImageError::IndexOutOfRange {
                    index: t,
                    len: image.len(),
                });
            }
        }
        Ok(SelfMap { image, table })
    }

    pub fn identity(image: Arc<DigitalImage>) -> Self {
        let table = (0..image.len()).collect();
        SelfMap { image, table }
    }

    pub fn constant(image: Arc<DigitalImage>, value: usize) -> Result<Self, ImageError> {
        if value >= image.len() {
            return Err(ImageError::IndexOutOfRange {
                index: value,
                len: image.len(),
            });
        }
        let table = vec![value; image.len()];
        Ok(SelfMap { image, table })
    }

    pub fn image(&self) -> &Arc<DigitalImage> {
        &self.image
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// Digital continuity via the adjacency characterization: every adjacent
    /// pair maps to equal or adjacent points.
    pub fn is_continuous(&self) -> bool {
        self.continuity_witness().is_none()
    }

    /// First adjacent pair `(i, j)`, in canonical order, whose images are
    /// neither equal nor adjacent.
    pub fn continuity_witness(&self) -> Option<(usize, usize)> {
        let n = self.image.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.image.adjacent(i, j) {
                    let (fi, fj) = (self.table[i], self.table[j]);
                    if fi != fj && !self.image.adjacent(fi, fj) {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    /// `self` composed with itself `k` times; `iterate(0)` is the identity.
    pub fn iterate(&self, k: u32) -> SelfMap {
        let mut table: Vec<usize> = (0..self.image.len()).collect();
        for _ in 0..k {
            for slot in table.iter_mut() {
                *slot = self.table[*slot];
            }
        }
        SelfMap {
            image: Arc::clone(&self.image),
            table,
        }
    }

    /// Sorted, deduplicated set of values taken by the map.
    pub fn range(&self) -> Vec<usize> {
        let mut r = self.table.clone();
        r.sort_unstable();
        r.dedup();
        r
    }

    pub fn is_onto(&self) -> bool {
        self.range().len() == self.image.len()
    }

    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|w| w[0] == w[1])
    }

    /// Smallest index `i` with `self(i) = value`.
    pub fn preimage_min(&self, value: usize) -> Option<usize> {
        self.table.iter().position(|&t| t == value)
    }
}

/// Does `range(s)` lie inside `range(t)`? (The `S(X) subset of T(X)` side
/// condition of the iteration theorems.)
pub fn range_covered(s: &SelfMap, t: &SelfMap) -> Result<bool, ImageError> {
    if !same_image(s, t) {
        return Err(ImageError::ImageMismatch);
    }
    let t_range = t.range();
    Ok(s.range().iter().all(|v| t_range.binary_search(v).is_ok()))
}

/// `x -> g(f(x))`. Both maps must live on the same image.
pub fn compose(f: &SelfMap, g: &SelfMap) -> Result<SelfMap, ImageError> {
    if !same_image(f, g) {
        return Err(ImageError::ImageMismatch);
    }
    let table = f.table.iter().map(|&i| g.table[i]).collect();
    Ok(SelfMap {
        image: Arc::clone(&f.image),
        table,
    })
}

/// Indices fixed by the map, ascending.
pub fn fixed_points(f: &SelfMap) -> Vec<usize> {
    f.table
        .iter()
        .enumerate()
        .filter(|&(i, &t)| i == t)
        .map(|(i, _)| i)
        .collect()
}
