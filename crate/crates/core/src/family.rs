//! Vertex sets and facet families over an ordered vertex array.
//!
//! Vertices are identified with their positions 0..=n in the array
//! x_0 < x_1 < ... < x_n. A [`VertexSet`] is a strictly increasing index
//! list; a [`FacetFamily`] is a deduplicated facet list with optional
//! construction labels. The index-clamping convention (x_t = x_0 for
//! t <= 0, x_t = x_n for t >= n) produces duplicate entries, so every
//! constructor deduplicates before storing.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type VertexId = u32;

/// Strictly increasing, duplicate-free list of vertex indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(vec![v])
    }

    pub fn range(lo: VertexId, hi_inclusive: VertexId) -> Self {
        VertexSet((lo..=hi_inclusive).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|v| other.contains(*v)).collect())
    }

    pub fn with(&self, v: VertexId) -> VertexSet {
        let mut m = self.0.clone();
        m.push(v);
        VertexSet::new(m)
    }

    pub fn without(&self, v: VertexId) -> VertexSet {
        VertexSet(self.iter().filter(|u| *u != v).collect())
    }

    /// Bitmask over vertex indices. Callers guarantee all indices < 64;
    /// lattice construction enforces this bound up front.
    pub(crate) fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, v| m | (1u64 << v))
    }

    pub(crate) fn from_mask(mut mask: u64) -> VertexSet {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let b = mask.trailing_zeros();
            v.push(b);
            mask &= mask - 1;
        }
        VertexSet(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Construction tag recording which defining formula produced a facet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FacetLabel {
    /// Simplex facet T_i = [x_i .. x_{i+d-1}].
    T(u32),
    /// Window facet E_j (omits x_j).
    E(u32),
    /// Two-parameter facet T_{i,j} of an (r,d) family.
    Tij(u32, u32),
    /// Multiplex facet indexed by the omitted vertex.
    M(u32),
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetLabel::T(i) => write!(f, "T_{i}"),
            FacetLabel::E(j) => write!(f, "E_{j}"),
            FacetLabel::Tij(i, j) => write!(f, "T_{{{i},{j}}}"),
            FacetLabel::M(i) => write!(f, "M_{i}"),
        }
    }
}

/// Deduplicated facet list on vertices 0..=n with optional labels.
///
/// Facets are stored sorted (lexicographically as index lists) so every
/// derived computation is deterministic. Duplicate facet sets arising
/// from index clamping are merged and keep all their labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FacetFamily {
    n: VertexId,
    facets: Vec<VertexSet>,
    labels: Vec<Vec<FacetLabel>>,
}

impl FacetFamily {
    pub fn new(n: VertexId, tagged: Vec<(VertexSet, Vec<FacetLabel>)>) -> Result<Self> {
        if tagged.is_empty() {
            return Err(Error::InvalidParams("empty facet family".into()));
        }
        let full_len = n as usize + 1;
        let mut merged: Vec<(VertexSet, Vec<FacetLabel>)> = Vec::new();
        for (fs, labels) in tagged {
            if fs.iter().any(|v| v > n) {
                return Err(Error::InvalidParams(format!(
                    "facet {fs} exceeds vertex range 0..={n}"
                )));
            }
            if fs.len() >= full_len {
                return Err(Error::InvalidParams(format!(
                    "facet {fs} is the full vertex set"
                )));
            }
            match merged.iter_mut().find(|(g, _)| *g == fs) {
                Some((_, ls)) => ls.extend(labels),
                None => merged.push((fs, labels)),
            }
        }
        merged.sort_by(|a, b| a.0.cmp(&b.0));
        debug_assert!(
            merged.iter().all(|(f, _)| {
                merged
                    .iter()
                    .all(|(g, _)| f == g || !f.is_subset(g))
            }),
            "facet family has nested facets"
        );
        let (facets, labels) = merged.into_iter().unzip();
        Ok(FacetFamily { n, facets, labels })
    }

    pub fn unlabeled(n: VertexId, facets: Vec<VertexSet>) -> Result<Self> {
        FacetFamily::new(n, facets.into_iter().map(|f| (f, Vec::new())).collect())
    }

    /// Largest vertex index of the ambient array.
    pub fn n(&self) -> VertexId {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize + 1
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn labels_of(&self, index: usize) -> &[FacetLabel] {
        &self.labels[index]
    }

    pub fn contains(&self, facet: &VertexSet) -> bool {
        self.facets.binary_search(facet).is_ok()
    }

    pub fn by_label(&self, label: FacetLabel) -> Option<&VertexSet> {
        self.labels
            .iter()
            .position(|ls| ls.contains(&label))
            .map(|i| &self.facets[i])
    }

    pub fn label_of(&self, facet: &VertexSet) -> &[FacetLabel] {
        match self.facets.binary_search(facet) {
            Ok(i) => &self.labels[i],
            Err(_) => &[],
        }
    }

    /// Union of all facets.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::empty(), |acc, f| acc.union(f))
    }

    /// Same facet sets, labels ignored.
    pub fn same_sets(&self, other: &FacetFamily) -> bool {
        self.facets == other.facets
    }

    /// Facets not containing `v`, with their labels.
    pub fn facets_without(&self, v: VertexId) -> Vec<(&VertexSet, &[FacetLabel])> {
        self.facets
            .iter()
            .zip(&self.labels)
            .filter(|(f, _)| !f.contains(v))
            .map(|(f, ls)| (f, ls.as_slice()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_dedups_and_sorts() {
        let s = VertexSet::new(vec![4, 0, 0, 3, 0]);
        assert_eq!(s.as_slice(), &[0, 3, 4]);
        assert_eq!(s.to_string(), "{0 3 4}");
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::new(vec![0, 1, 3]);
        let b = VertexSet::new(vec![1, 3, 4]);
        assert_eq!(a.intersection(&b).as_slice(), &[1, 3]);
        assert_eq!(a.union(&b).as_slice(), &[0, 1, 3, 4]);
        assert!(VertexSet::new(vec![1, 3]).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::new(vec![0, 2, 5, 63]);
        assert_eq!(VertexSet::from_mask(s.mask()), s);
    }

    #[test]
    fn family_merges_duplicates_keeping_labels() {
        let f = FacetFamily::new(
            3,
            vec![
                (VertexSet::new(vec![0, 1]), vec![FacetLabel::T(0)]),
                (VertexSet::new(vec![0, 1]), vec![FacetLabel::E(2)]),
                (VertexSet::new(vec![2, 3]), vec![]),
            ],
        )
        .unwrap();
        assert_eq!(f.len(), 2);
        let ls = f.label_of(&VertexSet::new(vec![0, 1]));
        assert!(ls.contains(&FacetLabel::T(0)) && ls.contains(&FacetLabel::E(2)));
    }

    #[test]
    fn family_rejects_full_set_and_out_of_range() {
        assert!(FacetFamily::unlabeled(2, vec![VertexSet::new(vec![0, 1, 2])]).is_err());
        assert!(FacetFamily::unlabeled(2, vec![VertexSet::new(vec![0, 7])]).is_err());
    }

    #[test]
    fn label_display() {
        assert_eq!(FacetLabel::T(3).to_string(), "T_3");
        assert_eq!(FacetLabel::E(11).to_string(), "E_11");
        assert_eq!(FacetLabel::Tij(1, 2).to_string(), "T_{1,2}");
    }
}
