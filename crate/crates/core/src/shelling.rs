//! Shellings, pulling triangulations, and the shallowness test.
//!
//! A shelling step is valid exactly when the new cell meets the union of
//! the earlier cells in a pure wall of one dimension down; for simplicial
//! cells that is equivalent to the step having a unique minimal new face,
//! which is the restriction face the h-vector counts.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, VertexId, VertexSet};
use crate::invariants::{FVector, HVector};
use crate::lattice::FaceLattice;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

/// An ordered list of distinct simplicial cells of equal vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSimplicialComplex {
    cells: Vec<VertexSet>,
    cell_size: usize,
}

impl OrderedSimplicialComplex {
    pub fn new(cells: Vec<VertexSet>) -> Result<Self> {
        let cell_size = match cells.first() {
            Some(c) if !c.is_empty() => c.len(),
            _ => {
                return Err(Error::InvalidParams(
                    "complex needs at least one nonempty cell".into(),
                ))
            }
        };
        if let Some(c) = cells.iter().find(|c| c.len() != cell_size) {
            return Err(Error::InvalidParams(format!(
                "cell {c} has {} vertices, expected {cell_size}",
                c.len()
            )));
        }
        let distinct: BTreeSet<&VertexSet> = cells.iter().collect();
        if distinct.len() != cells.len() {
            return Err(Error::InvalidParams("complex repeats a cell".into()));
        }
        Ok(OrderedSimplicialComplex { cells, cell_size })
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn cell_size(&self) -> usize {
        self.cell_size
    }

    pub fn dim(&self) -> u32 {
        self.cell_size as u32 - 1
    }

    pub fn support(&self) -> VertexSet {
        self.cells
            .iter()
            .fold(VertexSet::empty(), |a, c| a.union(c))
    }

    /// All distinct nonempty faces of the complex, sorted.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut set = BTreeSet::new();
        for cell in &self.cells {
            for m in nonempty_submasks(cell.mask()) {
                set.insert(m);
            }
        }
        set.into_iter().map(VertexSet::from_mask).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.cell_size];
        for f in self.faces() {
            counts[f.len() - 1] += 1;
        }
        FVector(counts)
    }
}

fn nonempty_submasks(m: u64) -> Vec<u64> {
    let mut v = Vec::new();
    let mut s = m;
    while s != 0 {
        v.push(s);
        s = (s - 1) & m;
    }
    v
}

/// Cells in shelling order with their restriction faces; G_1 is empty.
#[derive(Clone, Debug, Serialize)]
pub struct ShellingCertificate {
    pub cells: Vec<VertexSet>,
    pub restrictions: Vec<VertexSet>,
}

impl ShellingCertificate {
    /// h_k = number of restriction faces with k vertices, 0 <= k <= cell size.
    pub fn h_vector(&self) -> HVector {
        let size = self.cells.first().map_or(0, |c| c.len());
        let mut h = vec![0i64; size + 1];
        for r in &self.restrictions {
            h[r.len()] += 1;
        }
        HVector(h)
    }
}

/// Verifies that the cell order is a shelling. Each step must have a
/// unique minimal new face; otherwise the error carries the step number
/// and the full minimal set as a witness.
pub fn shelling_check(complex: &OrderedSimplicialComplex) -> Result<ShellingCertificate> {
    let cells = complex.cells();
    let mut restrictions = Vec::with_capacity(cells.len());
    for (idx, cell) in cells.iter().enumerate() {
        let cm = cell.mask();
        let old = |s: u64| cells[..idx].iter().any(|c| s & c.mask() == s);
        let mut minimal = Vec::new();
        let mut s = cm;
        loop {
            if !old(s) {
                let walls_old = (0..64)
                    .filter(|b| s >> b & 1 == 1)
                    .all(|b| old(s & !(1u64 << b)));
                if walls_old {
                    minimal.push(s);
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & cm;
        }
        if minimal.len() != 1 {
            let mut faces: Vec<VertexSet> =
                minimal.into_iter().map(VertexSet::from_mask).collect();
            faces.sort();
            return Err(Error::NotShelling {
                step: idx + 1,
                faces,
            });
        }
        restrictions.push(VertexSet::from_mask(minimal[0]));
    }
    Ok(ShellingCertificate {
        cells: cells.to_vec(),
        restrictions,
    })
}

/// The pulling triangulation of the braxtope Q^{d,n} at x_0, written
/// directly: cells J_i = [x_0, x_i .. x_{i+d-1}] for 1 <= i <= n-d+1.
pub fn pulling_triangulation(d: u32, n: u32) -> Result<OrderedSimplicialComplex> {
    if d < 3 || n < d {
        return Err(Error::InvalidParams(format!(
            "pulling triangulation needs n >= d >= 3, got d={d} n={n}"
        )));
    }
    let cells = (1..=(n - d + 1))
        .map(|i| VertexSet::range(i, i + d - 1).with(0))
        .collect();
    OrderedSimplicialComplex::new(cells)
}

/// Pulling triangulation of an arbitrary polytope: recursively pull the
/// first `priority` vertex of each face and cone it over the
/// triangulations of the facets of that face that avoid it.
pub fn pulling_triangulation_of(
    lattice: &FaceLattice,
    priority: &[VertexId],
) -> Result<OrderedSimplicialComplex> {
    if let Some(v) = lattice.support().iter().find(|v| !priority.contains(v)) {
        return Err(Error::InvalidParams(format!(
            "priority order omits vertex {v}"
        )));
    }
    let mut memo = HashMap::new();
    let cells = pull_face(lattice, &lattice.support().clone(), priority, &mut memo)?;
    OrderedSimplicialComplex::new(cells)
}

fn pull_face(
    lat: &FaceLattice,
    face: &VertexSet,
    priority: &[VertexId],
    memo: &mut HashMap<VertexSet, Vec<VertexSet>>,
) -> Result<Vec<VertexSet>> {
    if let Some(c) = memo.get(face) {
        return Ok(c.clone());
    }
    let fdim = lat
        .dim_of(face)
        .ok_or_else(|| Error::NotFace(face.clone()))?;
    let cells = if face.len() as i64 == fdim + 1 {
        vec![face.clone()]
    } else {
        let v = priority
            .iter()
            .copied()
            .find(|v| face.contains(*v))
            .expect("priority covers the support");
        let mut walls = lat.facets_of_face(face)?;
        walls.sort();
        let mut out = Vec::new();
        for w in walls.iter().filter(|w| !w.contains(v)) {
            for c in pull_face(lat, w, priority, memo)? {
                out.push(c.with(v));
            }
        }
        out
    };
    memo.insert(face.clone(), cells.clone());
    Ok(cells)
}

/// A triangulation face sitting in a polytope face of more than twice its
/// dimension, violating shallowness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShallowWitness {
    pub face: VertexSet,
    pub container: VertexSet,
    pub container_dim: i64,
}

/// Checks that every face of the triangulation is shallow in the
/// polytope: the smallest polytope face containing it has dimension at
/// most twice its own. Returns every violating face.
pub fn shallow_check(
    lattice: &FaceLattice,
    complex: &OrderedSimplicialComplex,
) -> Result<Vec<ShallowWitness>> {
    let mut witnesses = Vec::new();
    for sigma in complex.faces() {
        let (container, cdim) = lattice.smallest_face_containing(&sigma).ok_or_else(|| {
            Error::InvalidParams(format!("triangulation face {sigma} uses unknown vertices"))
        })?;
        if cdim > 2 * (sigma.len() as i64 - 1) {
            witnesses.push(ShallowWitness {
                face: sigma,
                container,
                container_dim: cdim,
            });
        }
    }
    Ok(witnesses)
}

/// Colexicographic comparison: compare largest members first; on a common
/// suffix the shorter set comes first.
pub fn colex_cmp(a: &VertexSet, b: &VertexSet) -> Ordering {
    for (x, y) in a.as_slice().iter().rev().zip(b.as_slice().iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

pub fn colex_order(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut v = facets.to_vec();
    v.sort_by(colex_cmp);
    v
}

/// Verifies the three properties that make the colex facet order a
/// shelling of the boundary: at each step (a) there is a unique minimal
/// new face G_j, (b) G_j is a simplex face, and (c) the interval
/// [G_j, F_j] is Boolean. Returns the restriction faces in order.
pub fn colex_shelling_props(
    lattice: &FaceLattice,
    family: &FacetFamily,
) -> Result<Vec<VertexSet>> {
    let mut lf = lattice.facets();
    lf.sort();
    let mut ff = family.facets().to_vec();
    ff.sort();
    if lf != ff {
        return Err(Error::InvalidParams(
            "facet family does not match the lattice facets".into(),
        ));
    }
    let order = colex_order(family.facets());
    let all_masks: Vec<u64> = lattice
        .all_faces()
        .into_iter()
        .map(|(s, _)| s.mask())
        .collect();
    let mut seen = BTreeSet::new();
    let mut restrictions = Vec::new();
    for (i, f) in order.iter().enumerate() {
        let step = i + 1;
        let fail = |property| Error::ColexProperty {
            step,
            property,
            facet: f.clone(),
        };
        let fm = f.mask();
        let sub: Vec<u64> = all_masks.iter().copied().filter(|m| m & fm == *m).collect();
        let new: Vec<u64> = sub.iter().copied().filter(|m| !seen.contains(m)).collect();
        let minimal: Vec<u64> = new
            .iter()
            .copied()
            .filter(|m| !new.iter().any(|o| o != m && o & m == *o))
            .collect();
        if minimal.len() != 1 {
            return Err(fail('a'));
        }
        let g = VertexSet::from_mask(minimal[0]);
        let gdim = lattice.dim_of(&g).expect("minimal new face is a face");
        if g.len() as i64 != gdim + 1 {
            return Err(fail('b'));
        }
        if !lattice.interval_is_boolean(&g, f)? {
            return Err(fail('c'));
        }
        seen.extend(sub);
        restrictions.push(g);
    }
    Ok(restrictions)
}
