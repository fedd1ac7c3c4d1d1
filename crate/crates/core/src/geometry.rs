//! Exact rational geometry: orientation tests, brute-force facet
//! enumeration, beneath/beyond classification, and incremental
//! construction of realizations whose boundary matches the generated
//! facet families.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, FacetLabel, VertexSet};
use crate::generators::braxtope_facets;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;
pub type Point = Vec<Rational>;

fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Determinant of an integer matrix by fraction-free elimination.
/// Every division is exact, so intermediate growth stays polynomial.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    debug_assert!(m.iter().all(|row| row.len() == k));
    if k == 0 {
        return BigInt::one();
    }
    let mut flips = 0u32;
    let mut prev = BigInt::one();
    for r in 0..k - 1 {
        let Some(pivot_row) = (r..k).find(|&i| !m[i][r].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != r {
            m.swap(pivot_row, r);
            flips += 1;
        }
        for i in r + 1..k {
            for j in r + 1..k {
                let t = &m[i][j] * &m[r][r] - &m[i][r] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][r] = BigInt::zero();
        }
        prev = m[r][r].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if flips % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Homogenize `points` into an integer matrix: row i is the coordinates
/// of points[i] scaled by the lcm of their denominators, prefixed by
/// that (positive) scale factor. Returns the matrix and the product of
/// the scale factors, so `det(matrix) / product` is the rational
/// homogeneous determinant.
fn homogeneous_int_rows(points: &[&Point]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut rows = Vec::with_capacity(points.len());
    let mut scale_product = BigInt::one();
    for p in points {
        let mut scale = BigInt::one();
        for c in p.iter() {
            scale = scale.lcm(c.denom());
        }
        let mut row = Vec::with_capacity(p.len() + 1);
        row.push(scale.clone());
        for c in p.iter() {
            row.push(c.numer() * (&scale / c.denom()));
        }
        scale_product *= scale;
        rows.push(row);
    }
    (rows, scale_product)
}

/// Sign of the determinant of the homogenized matrix of d+1 points in
/// dimension d: +1, 0, or -1. Panics if the point count does not match
/// the ambient dimension; callers are expected to pass exactly d+1
/// points each with d coordinates.
pub fn orientation(points: &[Point]) -> i32 {
    let refs: Vec<&Point> = points.iter().collect();
    orientation_refs(&refs)
}

fn orientation_refs(points: &[&Point]) -> i32 {
    assert!(!points.is_empty(), "orientation of an empty point list");
    let d = points.len() - 1;
    for p in points {
        assert_eq!(p.len(), d, "orientation needs d+1 points of dimension d");
    }
    // Positive row scaling never changes the sign.
    let (rows, _) = homogeneous_int_rows(points);
    match bareiss_det(rows).sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Dimension of the affine hull: -1 for no points, 0 for a single
/// point, d for a full-dimensional set in d coordinates.
pub fn affine_rank(points: &[Point]) -> i64 {
    let refs: Vec<&Point> = points.iter().collect();
    affine_rank_refs(&refs)
}

fn affine_rank_refs(points: &[&Point]) -> i64 {
    if points.is_empty() {
        return -1;
    }
    let cols = points[0].len();
    let base = points[0];
    let mut rows: Vec<Point> = points[1..]
        .iter()
        .map(|p| {
            assert_eq!(p.len(), cols, "mixed ambient dimensions");
            p.iter().zip(base.iter()).map(|(a, b)| a - b).collect()
        })
        .collect();
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for i in rank + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[rank][c];
            for j in c..cols {
                let t = &rows[i][j] - &(&f * &rows[rank][j]);
                rows[i][j] = t;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank as i64
}

/// Euclidean volume of the simplex spanned by d+1 points in dimension
/// d: |det| / d!. Zero when the points are affinely dependent.
pub fn simplex_volume(points: &[Point]) -> Rational {
    assert!(!points.is_empty(), "volume of an empty point list");
    let d = points.len() - 1;
    for p in points {
        assert_eq!(p.len(), d, "simplex volume needs d+1 points of dimension d");
    }
    let refs: Vec<&Point> = points.iter().collect();
    let (rows, scale) = homogeneous_int_rows(&refs);
    let det = bareiss_det(rows);
    let mut factorial = BigInt::one();
    for i in 2..=d {
        factorial *= BigInt::from(i);
    }
    Rational::new(det.abs(), scale * factorial)
}

/// Total volume of a pure simplicial complex of (d+1)-element cells,
/// evaluated on the realization's points.
pub fn triangulation_volume(real: &Realization, cells: &[VertexSet]) -> Result<Rational> {
    let d = real.dim() as usize;
    let mut total = Rational::zero();
    for cell in cells {
        if cell.len() != d + 1 {
            return Err(Error::InvalidParams(format!(
                "cell {cell} has {} vertices, expected {}",
                cell.len(),
                d + 1
            )));
        }
        let points = real.points_of(cell)?;
        total += simplex_volume(&points);
    }
    Ok(total)
}

/// A full-dimensional set of distinct labeled points with exact
/// rational coordinates. Vertex i of a facet family refers to
/// points[i].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    dim: u32,
    points: Vec<Point>,
}

impl Realization {
    pub fn new(dim: u32, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParams(
                "ambient dimension must be positive".into(),
            ));
        }
        if points.is_empty() {
            return Err(Error::InvalidParams("a realization needs points".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim as usize {
                return Err(Error::InvalidParams(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidParams(format!(
                        "points {i} and {j} coincide"
                    )));
                }
            }
        }
        let rank = affine_rank(&points);
        if rank != dim as i64 {
            return Err(Error::NotFullDimensional {
                rank,
                expected: dim as i64,
            });
        }
        Ok(Realization { dim, points })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    /// Average of all points; interior whenever the points are the
    /// vertices of their convex hull.
    pub fn centroid(&self) -> Point {
        let k = rat_int(self.points.len() as i64);
        let mut sum = vec![Rational::zero(); self.dim as usize];
        for p in &self.points {
            for (s, c) in sum.iter_mut().zip(p.iter()) {
                *s += c;
            }
        }
        sum.into_iter().map(|s| s / &k).collect()
    }

    /// Points selected by a vertex set, in label order.
    pub fn points_of(&self, set: &VertexSet) -> Result<Vec<Point>> {
        set.iter()
            .map(|v| {
                self.points
                    .get(v as usize)
                    .cloned()
                    .ok_or(Error::VertexAbsent(v))
            })
            .collect()
    }
}

/// Position of a point relative to a facet's hyperplane, oriented so
/// the polytope's centroid lies beneath.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Beneath,
    On,
    Beyond,
}

/// Classify `x` against the hyperplane spanned by `facet`. The facet
/// must contain d affinely independent points and must not pass
/// through the centroid of the realization.
pub fn classify(x: &Point, facet: &VertexSet, real: &Realization) -> Result<Side> {
    let d = real.dim() as usize;
    if x.len() != d {
        return Err(Error::InvalidParams(format!(
            "query point has {} coordinates, expected {d}",
            x.len()
        )));
    }
    let mut span: Vec<&Point> = Vec::with_capacity(d);
    let mut rank = -1i64;
    for v in facet.iter() {
        let p = real
            .points
            .get(v as usize)
            .ok_or(Error::VertexAbsent(v))?;
        let mut candidate = span.clone();
        candidate.push(p);
        let r = affine_rank_refs(&candidate);
        if r > rank {
            span = candidate;
            rank = r;
        }
        if span.len() == d {
            break;
        }
    }
    if span.len() != d {
        return Err(Error::DegenerateFacet(facet.clone()));
    }
    let centroid = real.centroid();
    let mut rows: Vec<&Point> = span.clone();
    rows.push(&centroid);
    let reference = orientation_refs(&rows);
    if reference == 0 {
        return Err(Error::DegenerateFacet(facet.clone()));
    }
    *rows.last_mut().unwrap() = x;
    let side = orientation_refs(&rows);
    Ok(if side == 0 {
        Side::On
    } else if side == reference {
        Side::Beneath
    } else {
        Side::Beyond
    })
}

/// Facets of the convex hull of the realization's points, found by
/// checking every d-subset that spans a hyperplane and keeping those
/// with all remaining points weakly on one side. Each facet is
/// reported as the full set of points on its hyperplane, so distinct
/// spanning subsets of one facet collapse together.
pub fn hull_facets(real: &Realization) -> Result<FacetFamily> {
    let points = real.points();
    let d = real.dim() as usize;
    if points.len() > 64 {
        return Err(Error::InvalidParams(format!(
            "hull enumeration supports at most 64 points, got {}",
            points.len()
        )));
    }
    let n = points.len() - 1;
    let mut facet_masks: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
    for combo in (0..=n).combinations(d) {
        let refs: Vec<&Point> = combo.iter().map(|&i| &points[i]).collect();
        if affine_rank_refs(&refs) != d as i64 - 1 {
            continue;
        }
        let mut on_mask: u64 = combo.iter().fold(0u64, |acc, &i| acc | 1 << i);
        let mut rows: Vec<&Point> = refs;
        rows.push(&points[0]);
        let (mut pos, mut neg) = (false, false);
        for (i, p) in points.iter().enumerate() {
            if on_mask >> i & 1 == 1 {
                continue;
            }
            *rows.last_mut().unwrap() = p;
            match orientation_refs(&rows) {
                0 => on_mask |= 1 << i,
                1 => pos = true,
                _ => neg = true,
            }
            if pos && neg {
                break;
            }
        }
        if pos && neg {
            continue;
        }
        facet_masks.insert(on_mask);
    }
    let facets: Vec<VertexSet> = facet_masks.into_iter().map(VertexSet::from_mask).collect();
    FacetFamily::unlabeled(n as u32, facets)
}

/// Knobs for the incremental construction. The seed perturbs the
/// barycentric weights of the search's starting point; every seed
/// yields a verified realization or an error, never a silently wrong
/// answer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RealizeOptions {
    pub seed: u64,
}

/// Origin plus the unit basis points, in vertex order.
fn standard_simplex(d: u32) -> Realization {
    let dim = d as usize;
    let mut points = vec![vec![Rational::zero(); dim]];
    for i in 0..dim {
        let mut p = vec![Rational::zero(); dim];
        p[i] = Rational::one();
        points.push(p);
    }
    Realization::new(d, points).expect("unit simplex is full-dimensional")
}

const STEP_ATTEMPTS: u32 = 128;

/// Extend a verified realization with n vertices (labels 0..n-1, so
/// parameter n-1) by one vertex placed beyond the last window facet
/// and beneath or on every other facet, then re-verify the extension
/// against the expected facet family.
///
/// The new point is searched on the line through a weighted centroid s
/// of three vertices of the last window facet, directed away from the
/// vertex just below that facet's window; shrinking the step length
/// geometrically keeps the point beneath every facet it must not
/// cross while staying beyond the window facet for any positive step.
pub fn realize_step(prev: &Realization, options: &RealizeOptions) -> Result<Realization> {
    let d = prev.dim();
    let old_n = prev.vertex_count() as u32 - 1;
    if d < 3 || old_n < d {
        return Err(Error::InvalidParams(format!(
            "stepping requires a realization of at least the {d}-simplex with d >= 3, got {} points",
            prev.vertex_count()
        )));
    }
    let n = old_n + 1;
    let family = braxtope_facets(d, old_n)?;
    let target = braxtope_facets(d, n)?;
    let beyond_facet = family
        .by_label(FacetLabel::E(n - 1))
        .expect("last window facet exists for n > d")
        .clone();
    // Facets whose hyperplane must also pass through the new vertex:
    // their vertex windows grow by the new label.
    let on_facets: Vec<VertexSet> = (n + 2 - d..=n.saturating_sub(2))
        .map(|j| {
            family
                .by_label(FacetLabel::E(j))
                .expect("window facet in range")
                .clone()
        })
        .collect();

    let weight = |shift: u32| rat_int(1 + (options.seed >> shift & 0xF) as i64);
    let anchors = [
        (&prev.points()[0], weight(0)),
        (&prev.points()[(n - d + 1) as usize], weight(4)),
        (&prev.points()[(n - 1) as usize], weight(8)),
    ];
    let total: Rational = anchors.iter().map(|(_, w)| w.clone()).sum();
    let mut start = vec![Rational::zero(); d as usize];
    for (p, w) in &anchors {
        for (s, c) in start.iter_mut().zip(p.iter()) {
            *s += &(w * c);
        }
    }
    for s in start.iter_mut() {
        *s /= &total;
    }
    let below = &prev.points()[(n - d) as usize];
    let direction: Point = start
        .iter()
        .zip(below.iter())
        .map(|(s, b)| s - b)
        .collect();

    let mut step = Rational::one();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for _ in 0..STEP_ATTEMPTS {
        let candidate: Point = start
            .iter()
            .zip(direction.iter())
            .map(|(s, v)| s + &(&step * v))
            .collect();
        if candidate_admissible(prev, &family, &beyond_facet, &on_facets, &candidate)? {
            let mut points = prev.points().to_vec();
            points.push(candidate);
            let next = Realization::new(d, points)?;
            if hull_facets(&next)?.same_sets(&target) {
                return Ok(next);
            }
        }
        step *= &half;
    }
    Err(Error::SearchFailed {
        vertex: n,
        attempts: STEP_ATTEMPTS,
    })
}

fn candidate_admissible(
    prev: &Realization,
    family: &FacetFamily,
    beyond_facet: &VertexSet,
    on_facets: &[VertexSet],
    candidate: &Point,
) -> Result<bool> {
    for facet in family.facets() {
        let expected = if facet == beyond_facet {
            Side::Beyond
        } else if on_facets.contains(facet) {
            Side::On
        } else {
            Side::Beneath
        };
        if classify(candidate, facet, prev)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct construction for n <= 2d-3, where the polytope is an
/// iterated pyramid: each label in n-d+2..=d-1 lies on every facet
/// but one, so those vertices can be lifted into fresh coordinates
/// over a lower-dimensional base whose parameters sit just past the
/// pyramid range.
pub fn realize_pyramid(d: u32, n: u32, options: &RealizeOptions) -> Result<Realization> {
    if !(d >= 4 && n > d && n + 3 <= 2 * d) {
        return Err(Error::InvalidParams(format!(
            "pyramid construction applies for d+1 <= n <= 2d-3, got d={d} n={n}"
        )));
    }
    let base_d = n - d + 2;
    let base_n = 2 * (n - d + 1);
    let base = realize_braxtope(base_d, base_n, options)?;
    let apex_count = (d - base_d) as usize;
    let mut points: Vec<Option<Point>> = vec![None; n as usize + 1];
    for (j, p) in base.points().iter().enumerate() {
        let label = if (j as u32) <= n - d + 1 {
            j
        } else {
            j + apex_count
        };
        let mut coords = p.clone();
        coords.resize(d as usize, Rational::zero());
        points[label] = Some(coords);
    }
    for (k, u) in (n - d + 2..=d - 1).enumerate() {
        let mut coords = vec![Rational::zero(); d as usize];
        coords[base_d as usize + k] = Rational::one();
        points[u as usize] = Some(coords);
    }
    let points: Vec<Point> = points
        .into_iter()
        .map(|p| p.expect("every label assigned"))
        .collect();
    let real = Realization::new(d, points)?;
    let expected = braxtope_facets(d, n)?;
    if !hull_facets(&real)?.same_sets(&expected) {
        return Err(Error::RealizationMismatch(format!(
            "pyramid construction for d={d} n={n}"
        )));
    }
    Ok(real)
}

/// Realize the full family member with parameters (d, n), n >= d >= 3:
/// start from the unit simplex and add one vertex at a time, each
/// extension verified by full hull enumeration. If a step fails inside
/// the iterated-pyramid range the direct pyramid construction takes
/// over for that instance; outside that range the failure propagates.
pub fn realize_braxtope(d: u32, n: u32, options: &RealizeOptions) -> Result<Realization> {
    if d < 3 || n < d {
        return Err(Error::InvalidParams(format!(
            "realization requires n >= d >= 3, got d={d} n={n}"
        )));
    }
    let mut real = standard_simplex(d);
    for m in d + 1..=n {
        real = match realize_step(&real, options) {
            Ok(next) => next,
            Err(Error::SearchFailed { .. }) if m + 3 <= 2 * d => {
                realize_pyramid(d, m, options)?
            }
            Err(e) => return Err(e),
        };
    }
    Ok(real)
}
