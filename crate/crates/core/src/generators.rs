//! Facet-family constructors for the polytope families under study.
//!
//! All constructors work on the ordered vertex array x_0 < ... < x_n and
//! use the index-clamping convention x_t = x_0 for t <= 0, x_t = x_n for
//! t >= n. Duplicate indices produced by clamping collapse inside each
//! facet; duplicate facets merge and keep every construction label.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, FacetLabel, VertexId, VertexSet};
use itertools::Itertools;

fn clamp_index(t: i64, n: i64) -> VertexId {
    t.clamp(0, n) as VertexId
}

/// Boundary of the d-simplex on vertices 0..=d: all d-subsets.
pub fn simplex_facets(d: u32) -> Result<FacetFamily> {
    if d == 0 {
        return Err(Error::InvalidParams("simplex needs d >= 1".into()));
    }
    let facets = (0..=d)
        .map(|omit| VertexSet::new((0..=d).filter(|v| *v != omit).collect()))
        .collect();
    FacetFamily::unlabeled(d, facets)
}

/// Facets of the d-multiplex with vertices x_0..x_n.
///
/// F_i = [x_{i-d+1} .. x_{i-1}, x_{i+1} .. x_{i+d-1}] for 0 <= i <= n.
pub fn multiplex_facets(d: u32, n: u32) -> Result<FacetFamily> {
    if d == 0 || n < d {
        return Err(Error::InvalidParams(format!(
            "multiplex needs n >= d >= 1, got d={d} n={n}"
        )));
    }
    if d == 1 {
        // The window formula degenerates for d = 1; the only 1-polytope is
        // the segment, whose facets are its two endpoints.
        if n != 1 {
            return Err(Error::InvalidParams(format!(
                "a 1-dimensional multiplex is a segment and needs n = 1, got n={n}"
            )));
        }
        return FacetFamily::new(
            1,
            vec![
                (VertexSet::singleton(1), vec![FacetLabel::M(0)]),
                (VertexSet::singleton(0), vec![FacetLabel::M(1)]),
            ],
        );
    }
    let (ni, w) = (n as i64, d as i64 - 1);
    let mut tagged = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let c = i as i64;
        let mut members = Vec::new();
        for t in (c - w)..c {
            members.push(clamp_index(t, ni));
        }
        for t in (c + 1)..=(c + w) {
            members.push(clamp_index(t, ni));
        }
        tagged.push((VertexSet::new(members), vec![FacetLabel::M(i)]));
    }
    FacetFamily::new(n, tagged)
}

/// Facets of the braxtope Q^{d,n} with vertices x_0..x_n.
///
/// Simplex facets T_i = [x_i .. x_{i+d-1}] for 0 <= i <= n-d+1 and window
/// facets E_j = [x_0, x_{j-(d-2)} .. x_{j-1}, x_{j+1} .. x_{j+(d-2)}] for
/// 2 <= j <= n. For d <= 2 the family degenerates to the simplex, so n = d
/// is required there.
pub fn braxtope_facets(d: u32, n: u32) -> Result<FacetFamily> {
    if d == 0 {
        return Err(Error::InvalidParams("braxtope needs d >= 1".into()));
    }
    if d <= 2 {
        if n != d {
            return Err(Error::InvalidParams(format!(
                "for d = {d} the braxtope is the simplex and needs n = d, got n={n}"
            )));
        }
        return simplex_facets(d);
    }
    if n < d {
        return Err(Error::InvalidParams(format!(
            "braxtope needs n >= d, got d={d} n={n}"
        )));
    }
    let mut tagged = Vec::new();
    for i in 0..=(n - d + 1) {
        tagged.push((VertexSet::range(i, i + d - 1), vec![FacetLabel::T(i)]));
    }
    let (ni, w) = (n as i64, d as i64 - 2);
    for j in 2..=n {
        let c = j as i64;
        let mut members = vec![0];
        for t in (c - w)..c {
            members.push(clamp_index(t, ni));
        }
        for t in (c + 1)..=(c + w) {
            members.push(clamp_index(t, ni));
        }
        tagged.push((VertexSet::new(members), vec![FacetLabel::E(j)]));
    }
    FacetFamily::new(n, tagged)
}

/// Facets of the (r,d) generalized simplex with vertices x_0..x_n.
///
/// With head H = {x_0 .. x_{r-1}}: the simplex facets are
/// T_{0,0} = [x_0 .. x_{d-1}] and
/// T_{i,j} = [H \ {x_i}, x_j .. x_{j+d-r}] for 0 <= i <= r-1, r <= j <= n-d+r;
/// the window facets are
/// E_j = [H, x_{j-(d-r-1)} .. x_{j-1}, x_{j+1} .. x_{j+(d-r-1)}] for r+1 <= j <= n.
///
/// r = 0 reproduces the multiplex facet sets and r = 1 the braxtope facet
/// sets (with these labels rather than the family-specific ones).
pub fn rd_braxtope_facets(r: u32, d: u32, n: u32) -> Result<FacetFamily> {
    if d == 0 {
        return Err(Error::InvalidParams("(r,d) family needs d >= 1".into()));
    }
    if d <= r + 1 {
        if n != d {
            return Err(Error::InvalidParams(format!(
                "for d <= r+1 the (r,d) family is the simplex and needs n = d, got r={r} d={d} n={n}"
            )));
        }
        return simplex_facets(d);
    }
    if n < d {
        return Err(Error::InvalidParams(format!(
            "(r,d) family needs n >= d, got r={r} d={d} n={n}"
        )));
    }
    let head: Vec<VertexId> = (0..r).collect();
    let mut tagged = vec![(VertexSet::range(0, d - 1), vec![FacetLabel::Tij(0, 0)])];
    for i in 0..r {
        for j in r..=(n - d + r) {
            let mut members: Vec<VertexId> = head.iter().copied().filter(|v| *v != i).collect();
            members.extend(j..=(j + d - r));
            tagged.push((VertexSet::new(members), vec![FacetLabel::Tij(i, j)]));
        }
    }
    let (ni, w) = (n as i64, (d - r - 1) as i64);
    for j in (r + 1)..=n {
        let c = j as i64;
        let mut members = head.clone();
        for t in (c - w)..c {
            members.push(clamp_index(t, ni));
        }
        for t in (c + 1)..=(c + w) {
            members.push(clamp_index(t, ni));
        }
        tagged.push((VertexSet::new(members), vec![FacetLabel::E(j)]));
    }
    FacetFamily::new(n, tagged)
}

fn evenness_violation(facet: &VertexSet, n: VertexId) -> Option<(VertexId, VertexId, usize)> {
    let outside: Vec<VertexId> = (0..=n).filter(|v| !facet.contains(*v)).collect();
    for (a, b) in outside.iter().copied().tuple_combinations() {
        let between = facet.iter().filter(|v| a < *v && *v < b).count();
        if between % 2 == 1 {
            return Some((a, b, between));
        }
    }
    None
}

/// Facets of the cyclic polytope C(d, n+1): the d-subsets of x_0..x_n whose
/// complement separates them into even blocks (Gale's evenness condition).
pub fn cyclic_facets(d: u32, n: u32) -> Result<FacetFamily> {
    if d < 2 || n < d {
        return Err(Error::InvalidParams(format!(
            "cyclic polytope needs n >= d >= 2, got d={d} n={n}"
        )));
    }
    let facets: Vec<VertexSet> = (0..=n)
        .combinations(d as usize)
        .map(VertexSet::new)
        .filter(|s| evenness_violation(s, n).is_none())
        .collect();
    FacetFamily::unlabeled(n, facets)
}

/// A facet together with the outside pair witnessing an evenness failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleWitness {
    pub facet: VertexSet,
    pub pair: (VertexId, VertexId),
    pub between: usize,
}

/// First facet of the family violating Gale's evenness condition, if any.
/// `None` means the family is a plausible cyclic-polytope facet list.
pub fn gale_check(family: &FacetFamily) -> Option<GaleWitness> {
    let n = family.n();
    family.facets().iter().find_map(|f| {
        evenness_violation(f, n).map(|(a, b, between)| GaleWitness {
            facet: f.clone(),
            pair: (a, b),
            between,
        })
    })
}

/// Boundary of the convex m-gon on vertices 0..m-1 in cyclic order.
pub fn polygon_facets(m: u32) -> Result<FacetFamily> {
    if m < 3 {
        return Err(Error::InvalidParams(format!("polygon needs m >= 3, got {m}")));
    }
    let facets = (0..m)
        .map(|i| VertexSet::new(vec![i, (i + 1) % m]))
        .collect();
    FacetFamily::unlabeled(m - 1, facets)
}

/// Pyramid over `base`: the apex gets the next fresh index, every base
/// facet is coned to the apex, and the base itself becomes a facet.
pub fn pyramid_facets(base: &FacetFamily) -> Result<FacetFamily> {
    let apex = base.n() + 1;
    let mut facets: Vec<VertexSet> = base.facets().iter().map(|f| f.with(apex)).collect();
    facets.push(VertexSet::range(0, base.n()));
    FacetFamily::unlabeled(apex, facets)
}

/// Bipyramid over `base`: two fresh apexes, each coned over every base facet.
pub fn bipyramid_facets(base: &FacetFamily) -> Result<FacetFamily> {
    let (a1, a2) = (base.n() + 1, base.n() + 2);
    let mut facets: Vec<VertexSet> = base.facets().iter().map(|f| f.with(a1)).collect();
    facets.extend(base.facets().iter().map(|f| f.with(a2)));
    FacetFamily::unlabeled(a2, facets)
}

/// The comparison polytope with the same f-vector as the braxtope Q^{d,n}:
/// a (d-3)-fold pyramid over a bipyramid over an (n-d+2)-gon.
pub fn reference_comparand(d: u32, n: u32) -> Result<FacetFamily> {
    if d < 3 || n < d + 1 {
        return Err(Error::InvalidParams(format!(
            "comparand needs n >= d+1 >= 4, got d={d} n={n}"
        )));
    }
    let mut fam = bipyramid_facets(&polygon_facets(n - d + 2)?)?;
    for _ in 0..(d - 3) {
        fam = pyramid_facets(&fam)?;
    }
    Ok(fam)
}

/// Facets of the d-cube on vertices 0..2^d-1 read as coordinate bitmasks.
/// Used as a negative control: it is neither braxial nor simplicial.
pub fn hypercube_facets(d: u32) -> Result<FacetFamily> {
    if d == 0 || d > 6 {
        return Err(Error::InvalidParams(format!(
            "hypercube supported for 1 <= d <= 6, got {d}"
        )));
    }
    let n = (1u32 << d) - 1;
    let mut facets = Vec::with_capacity(2 * d as usize);
    for coord in 0..d {
        for bit in 0..2u32 {
            facets.push(VertexSet::new(
                (0..=n).filter(|v| (v >> coord) & 1 == bit).collect(),
            ));
        }
    }
    FacetFamily::unlabeled(n, facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(fam: &FacetFamily) -> Vec<Vec<VertexId>> {
        fam.facets().iter().map(|f| f.as_slice().to_vec()).collect()
    }

    fn sorted_sets(raw: &[&[VertexId]]) -> Vec<Vec<VertexId>> {
        let mut v: Vec<Vec<VertexId>> = raw.iter().map(|s| s.to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn braxtope_3_4() {
        let fam = braxtope_facets(3, 4).unwrap();
        assert_eq!(
            sets(&fam),
            sorted_sets(&[
                &[0, 1, 2],
                &[1, 2, 3],
                &[2, 3, 4],
                &[0, 1, 3],
                &[0, 2, 4],
                &[0, 3, 4]
            ])
        );
        assert_eq!(
            fam.by_label(FacetLabel::E(2)).unwrap(),
            &VertexSet::new(vec![0, 1, 3])
        );
    }

    #[test]
    fn braxtope_4_6() {
        let fam = braxtope_facets(4, 6).unwrap();
        assert_eq!(fam.len(), 9);
        assert_eq!(
            fam.by_label(FacetLabel::E(3)).unwrap(),
            &VertexSet::new(vec![0, 1, 2, 4, 5])
        );
        assert_eq!(
            fam.by_label(FacetLabel::E(6)).unwrap(),
            &VertexSet::new(vec![0, 4, 5, 6])
        );
        assert_eq!(
            fam.by_label(FacetLabel::T(3)).unwrap(),
            &VertexSet::new(vec![3, 4, 5, 6])
        );
    }

    #[test]
    fn braxtope_facet_count_grid() {
        for d in 3..=6u32 {
            for n in d..=(d + 6) {
                let fam = braxtope_facets(d, n).unwrap();
                assert_eq!(fam.len() as u32, 2 * n - d + 1, "d={d} n={n}");
                assert_eq!(fam.support(), VertexSet::range(0, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn braxtope_at_n_eq_d_is_simplex() {
        for d in 3..=6u32 {
            let fam = braxtope_facets(d, d).unwrap();
            assert!(fam.same_sets(&simplex_facets(d).unwrap()), "d={d}");
        }
    }

    #[test]
    fn braxtope_low_dim_needs_n_eq_d() {
        assert!(braxtope_facets(2, 2).is_ok());
        assert!(braxtope_facets(2, 3).is_err());
        assert!(braxtope_facets(3, 2).is_err());
    }

    #[test]
    fn multiplex_3_4() {
        let fam = multiplex_facets(3, 4).unwrap();
        assert_eq!(
            sets(&fam),
            sorted_sets(&[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3, 4], &[1, 2, 4], &[2, 3, 4]])
        );
    }

    #[test]
    fn multiplex_at_n_eq_d_is_simplex() {
        for d in 2..=6u32 {
            assert!(multiplex_facets(d, d).unwrap().same_sets(&simplex_facets(d).unwrap()));
        }
    }

    #[test]
    fn multiplex_d1_is_segment() {
        let fam = multiplex_facets(1, 1).unwrap();
        assert_eq!(sets(&fam), vec![vec![0], vec![1]]);
        assert!(multiplex_facets(1, 2).is_err());
    }

    #[test]
    fn rd_braxtope_2_4_5() {
        let fam = rd_braxtope_facets(2, 4, 5).unwrap();
        assert_eq!(
            sets(&fam),
            sorted_sets(&[
                &[0, 1, 2, 3],
                &[1, 2, 3, 4],
                &[1, 3, 4, 5],
                &[0, 2, 3, 4],
                &[0, 3, 4, 5],
                &[0, 1, 2, 4],
                &[0, 1, 3, 5],
                &[0, 1, 4, 5]
            ])
        );
        assert_eq!(
            fam.by_label(FacetLabel::Tij(1, 3)).unwrap(),
            &VertexSet::new(vec![0, 3, 4, 5])
        );
    }

    #[test]
    fn rd_reduces_to_multiplex_and_braxtope() {
        for d in 3..=5u32 {
            for n in d..=(d + 4) {
                assert!(
                    rd_braxtope_facets(0, d, n).unwrap().same_sets(&multiplex_facets(d, n).unwrap()),
                    "r=0 d={d} n={n}"
                );
                assert!(
                    rd_braxtope_facets(1, d, n).unwrap().same_sets(&braxtope_facets(d, n).unwrap()),
                    "r=1 d={d} n={n}"
                );
            }
        }
    }

    #[test]
    fn cyclic_4_5_has_simplex_count() {
        // C(4, 6) is neighborly with 9 facets.
        let fam = cyclic_facets(4, 5).unwrap();
        assert_eq!(fam.len(), 9);
        assert!(fam.facets().iter().all(|f| f.len() == 4));
        assert!(gale_check(&fam).is_none());
    }

    #[test]
    fn cyclic_2_is_polygon() {
        let fam = cyclic_facets(2, 4).unwrap();
        assert_eq!(fam.len(), 5);
        assert!(fam.contains(&VertexSet::new(vec![0, 4])));
        assert!(fam.contains(&VertexSet::new(vec![1, 2])));
    }

    #[test]
    fn gale_witness_on_braxtope_3_4() {
        let w = gale_check(&braxtope_facets(3, 4).unwrap()).unwrap();
        assert_eq!(w.facet, VertexSet::new(vec![0, 1, 3]));
        assert_eq!(w.pair, (2, 4));
        assert_eq!(w.between, 1);
    }

    #[test]
    fn comparand_3_5_is_octahedron() {
        let fam = reference_comparand(3, 5).unwrap();
        assert_eq!(fam.len(), 8);
        assert_eq!(fam.vertex_count(), 6);
        assert!(fam.facets().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn comparand_vertex_and_facet_shape() {
        for d in 3..=6u32 {
            for n in (d + 1)..=(d + 5) {
                let fam = reference_comparand(d, n).unwrap();
                assert_eq!(fam.vertex_count() as u32, n + 1, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn cube_3_facets() {
        let fam = hypercube_facets(3).unwrap();
        assert_eq!(fam.len(), 6);
        assert!(fam.contains(&VertexSet::new(vec![0, 1, 2, 3])));
        assert!(fam.contains(&VertexSet::new(vec![4, 5, 6, 7])));
        assert!(fam.contains(&VertexSet::new(vec![0, 2, 4, 6])));
    }
}
