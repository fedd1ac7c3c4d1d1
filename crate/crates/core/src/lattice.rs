//! Face lattices built from facet lists by intersection closure.
//!
//! The closure of a facet list under pairwise intersection, together with
//! the empty face and the whole vertex set, recovers the full face lattice
//! of a polytope. Construction validates the result: ranks come from
//! longest chains, every cover must raise rank by exactly one, and the
//! atoms must be exactly the vertices. Families that fail these checks are
//! rejected, which is what makes the lattice usable as an oracle.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, VertexId, VertexSet};
use crate::invariants::{FVector, FlagVector};
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Clone, Debug)]
pub struct FaceLattice {
    support: VertexSet,
    dim: u32,
    /// Sorted by (vertex count, mask); index 0 is the empty face, the last
    /// index is the whole polytope.
    masks: Vec<u64>,
    ranks: Vec<u32>,
    by_mask: HashMap<u64, usize>,
    /// levels[r] = indices of faces of rank r (dimension r-1).
    levels: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
}

/// Builds the face lattice of the polytope with the given facets on the
/// vertex set 0..n_vertices. Fails with `IsolatedVertex` if some vertex
/// lies in no facet and with `NotGraded` if the intersection closure is
/// not a graded atomic lattice.
pub fn build_lattice(n_vertices: u32, family: &FacetFamily) -> Result<FaceLattice> {
    if n_vertices == 0 || n_vertices > 64 {
        return Err(Error::InvalidParams(format!(
            "vertex count {n_vertices} outside supported range 1..=64"
        )));
    }
    let support = family.support();
    if let Some(v) = support.iter().find(|v| *v >= n_vertices) {
        return Err(Error::InvalidParams(format!(
            "facet vertex {v} out of range 0..{n_vertices}"
        )));
    }
    for v in 0..n_vertices {
        if !support.contains(v) {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let top = if n_vertices == 64 {
        u64::MAX
    } else {
        (1u64 << n_vertices) - 1
    };
    let mut set: BTreeSet<u64> = family.facets().iter().map(|f| f.mask()).collect();
    let mut work: Vec<u64> = set.iter().copied().collect();
    while let Some(m) = work.pop() {
        let fresh: Vec<u64> = set
            .iter()
            .map(|x| x & m)
            .filter(|x| !set.contains(x))
            .collect();
        for x in fresh {
            if set.insert(x) {
                work.push(x);
            }
        }
    }
    set.insert(0);
    set.insert(top);
    FaceLattice::from_masks(VertexSet::range(0, n_vertices - 1), set)
}

impl FaceLattice {
    /// Validating constructor. `set` must contain 0 and the support mask
    /// and be closed under pairwise intersection.
    pub(crate) fn from_masks(support: VertexSet, set: BTreeSet<u64>) -> Result<FaceLattice> {
        if support.is_empty() {
            return Err(Error::InvalidParams("empty vertex support".into()));
        }
        let mut masks: Vec<u64> = set.into_iter().collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let nf = masks.len();

        let mut ranks = vec![0u32; nf];
        for i in 1..nf {
            let mut r = 0;
            for j in 0..i {
                if masks[j] != masks[i] && masks[j] & masks[i] == masks[j] {
                    r = r.max(ranks[j] + 1);
                }
            }
            ranks[i] = r;
        }
        let rank_top = ranks[nf - 1];
        if rank_top == 0 {
            return Err(Error::NotGraded("lattice has no proper faces".into()));
        }

        let mut covers_down = vec![Vec::new(); nf];
        for i in 1..nf {
            let subs: Vec<usize> = (0..i)
                .filter(|&j| masks[j] != masks[i] && masks[j] & masks[i] == masks[j])
                .collect();
            for &g in &subs {
                let covered = !subs
                    .iter()
                    .any(|&h| h != g && masks[g] != masks[h] && masks[g] & masks[h] == masks[g]);
                if covered {
                    if ranks[i] != ranks[g] + 1 {
                        return Err(Error::NotGraded(format!(
                            "face {} of rank {} covers {} of rank {}",
                            VertexSet::from_mask(masks[i]),
                            ranks[i],
                            VertexSet::from_mask(masks[g]),
                            ranks[g]
                        )));
                    }
                    covers_down[i].push(g);
                }
            }
        }

        let mut levels = vec![Vec::new(); rank_top as usize + 1];
        for (i, &r) in ranks.iter().enumerate() {
            levels[r as usize].push(i);
        }
        for &i in &levels[1] {
            if masks[i].count_ones() != 1 {
                return Err(Error::NotGraded(format!(
                    "atom {} is not a vertex",
                    VertexSet::from_mask(masks[i])
                )));
            }
        }
        if levels[1].len() != support.len() {
            return Err(Error::NotGraded(format!(
                "{} of {} vertices appear as atoms",
                levels[1].len(),
                support.len()
            )));
        }

        let by_mask = masks.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(FaceLattice {
            support,
            dim: rank_top - 1,
            masks,
            ranks,
            by_mask,
            levels,
            covers_down,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn vertex_count(&self) -> usize {
        self.support.len()
    }

    /// Total number of faces, the empty face and the polytope included.
    pub fn face_count(&self) -> usize {
        self.masks.len()
    }

    pub fn is_face(&self, s: &VertexSet) -> bool {
        self.by_mask.contains_key(&s.mask())
    }

    pub fn dim_of(&self, s: &VertexSet) -> Option<i64> {
        self.by_mask
            .get(&s.mask())
            .map(|&i| self.ranks[i] as i64 - 1)
    }

    /// Faces of dimension j, for -1 <= j <= dim.
    pub fn faces_of_dim(&self, j: i64) -> Vec<VertexSet> {
        let r = j + 1;
        if r < 0 || r >= self.levels.len() as i64 {
            return Vec::new();
        }
        self.levels[r as usize]
            .iter()
            .map(|&i| VertexSet::from_mask(self.masks[i]))
            .collect()
    }

    /// Every face paired with its dimension, the empty face (-1) and the
    /// whole polytope (dim) included.
    pub fn all_faces(&self) -> Vec<(VertexSet, i64)> {
        self.masks
            .iter()
            .zip(&self.ranks)
            .map(|(m, r)| (VertexSet::from_mask(*m), *r as i64 - 1))
            .collect()
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        self.faces_of_dim(self.dim as i64 - 1)
    }

    pub fn facet_family(&self) -> FacetFamily {
        let n = self.support.iter().max().expect("nonempty support");
        FacetFamily::unlabeled(n, self.facets()).expect("lattice facets form a family")
    }

    /// Faces covered by `face` in the lattice: its facets.
    pub fn facets_of_face(&self, face: &VertexSet) -> Result<Vec<VertexSet>> {
        let &i = self
            .by_mask
            .get(&face.mask())
            .ok_or_else(|| Error::NotFace(face.clone()))?;
        Ok(self.covers_down[i]
            .iter()
            .map(|&j| VertexSet::from_mask(self.masks[j]))
            .collect())
    }

    pub fn facets_containing(&self, s: &VertexSet) -> Vec<VertexSet> {
        let m = s.mask();
        self.facets().into_iter().filter(|f| m & f.mask() == m).collect()
    }

    /// The smallest face containing `s`, with its dimension. `None` when
    /// `s` is not a subset of the vertex set.
    pub fn smallest_face_containing(&self, s: &VertexSet) -> Option<(VertexSet, i64)> {
        if !s.is_subset(&self.support) {
            return None;
        }
        let m = s.mask();
        let mut acc = self.support.mask();
        for &fm in &self.masks {
            if fm & m == m {
                acc &= fm;
            }
        }
        let &i = self
            .by_mask
            .get(&acc)
            .expect("face set is closed under intersection");
        Some((VertexSet::from_mask(acc), self.ranks[i] as i64 - 1))
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets().iter().all(|f| f.len() as u32 == self.dim)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(
            (1..=self.dim)
                .map(|r| self.levels[r as usize].len() as u64)
                .collect(),
        )
    }

    pub fn euler_ok(&self) -> bool {
        self.f_vector().euler_ok()
    }

    /// Chain counts for every set of proper dimensions.
    pub fn flag_vector(&self) -> FlagVector {
        let d = self.dim;
        let mut map = BTreeMap::new();
        map.insert(Vec::new(), 1);
        for bits in 1u64..(1u64 << d) {
            let dims: Vec<u32> = (0..d).filter(|i| bits >> i & 1 == 1).collect();
            let mut prev_level = &self.levels[dims[0] as usize + 1];
            let mut cur: Vec<u64> = vec![1; prev_level.len()];
            for &dm in &dims[1..] {
                let level = &self.levels[dm as usize + 1];
                let mut next = vec![0u64; level.len()];
                for (bi, &b) in level.iter().enumerate() {
                    for (ai, &a) in prev_level.iter().enumerate() {
                        if self.masks[a] & self.masks[b] == self.masks[a] {
                            next[bi] += cur[ai];
                        }
                    }
                }
                cur = next;
                prev_level = level;
            }
            map.insert(dims, cur.iter().sum());
        }
        FlagVector(map)
    }

    /// Whether the interval [lo, hi] is a Boolean lattice. Uses the join
    /// map on interval atoms: the interval is Boolean exactly when it has
    /// 2^k elements for k = rank(hi) - rank(lo), exactly k atoms, and the
    /// joins of distinct atom subsets are distinct.
    pub fn interval_is_boolean(&self, lo: &VertexSet, hi: &VertexSet) -> Result<bool> {
        let &li = self
            .by_mask
            .get(&lo.mask())
            .ok_or_else(|| Error::NotFace(lo.clone()))?;
        let &ti = self
            .by_mask
            .get(&hi.mask())
            .ok_or_else(|| Error::NotFace(hi.clone()))?;
        let (lm, tm) = (self.masks[li], self.masks[ti]);
        if lm & tm != lm {
            return Err(Error::InvalidParams(format!(
                "interval bottom {lo} is not below top {hi}"
            )));
        }
        let k = (self.ranks[ti] - self.ranks[li]) as usize;
        let members: Vec<usize> = (0..self.masks.len())
            .filter(|&i| {
                let m = self.masks[i];
                lm & m == lm && m & tm == m
            })
            .collect();
        if members.len() != 1usize << k {
            return Ok(false);
        }
        let atoms: Vec<u64> = members
            .iter()
            .filter(|&&i| self.ranks[i] == self.ranks[li] + 1)
            .map(|&i| self.masks[i])
            .collect();
        if atoms.len() != k {
            return Ok(false);
        }
        let mut joins = BTreeSet::new();
        for pick in 0..(1u64 << k) {
            let u = atoms
                .iter()
                .enumerate()
                .filter(|(t, _)| pick >> t & 1 == 1)
                .fold(lm, |a, (_, am)| a | am);
            // least interval member containing u; the member set is closed
            // under intersection, so the fold lands on a member
            let j = members
                .iter()
                .map(|&i| self.masks[i])
                .filter(|m| m & u == u)
                .fold(tm, |a, m| a & m);
            if !joins.insert(j) {
                return Ok(false);
            }
        }
        Ok(joins.len() == members.len())
    }

    /// The face lattice of the vertex figure at `v`: faces containing `v`,
    /// relabeled by the edge neighbors of `v` they contain.
    pub fn vertex_figure(&self, v: VertexId) -> Result<FaceLattice> {
        if !self.support.contains(v) {
            return Err(Error::VertexAbsent(v));
        }
        let vm = 1u64 << v;
        let mut edge_masks = Vec::new();
        let mut nb_mask = 0u64;
        for &i in self.levels.get(2).map(|l| l.as_slice()).unwrap_or(&[]) {
            let m = self.masks[i];
            if m & vm != 0 {
                if m.count_ones() != 2 {
                    return Err(Error::NotGraded(format!(
                        "edge {} has more than two vertices",
                        VertexSet::from_mask(m)
                    )));
                }
                edge_masks.push(m);
                nb_mask |= m & !vm;
            }
        }
        if nb_mask == 0 {
            return Err(Error::InvalidParams(format!(
                "vertex {v} has no edges, figure undefined"
            )));
        }
        let mut images = BTreeSet::new();
        let mut source_count = 0usize;
        for &m in &self.masks {
            if m & vm == vm {
                source_count += 1;
                let img = edge_masks
                    .iter()
                    .filter(|e| *e & m == **e)
                    .fold(0u64, |a, e| a | (e & !vm));
                images.insert(img);
            }
        }
        if images.len() != source_count {
            return Err(Error::NotGraded(
                "vertex figure faces are not determined by their edges".into(),
            ));
        }
        FaceLattice::from_masks(VertexSet::from_mask(nb_mask), images)
    }
}
