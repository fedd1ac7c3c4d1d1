use crate::family::{VertexId, VertexSet};
use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The facet family does not close into a graded atomic lattice.
    #[error("not a polytope-like facet family: {0}")]
    NotGraded(String),

    #[error("vertex {0} appears in no facet")]
    IsolatedVertex(VertexId),

    #[error("vertex {0} is not a vertex of the lattice")]
    VertexAbsent(VertexId),

    #[error("{0} is not a face of the lattice")]
    NotFace(VertexSet),

    #[error("facet {0} does not span a hyperplane")]
    DegenerateFacet(VertexSet),

    #[error("point set has affine rank {rank}, expected {expected}")]
    NotFullDimensional { rank: i64, expected: i64 },

    #[error("no valid placement for vertex {vertex} within {attempts} attempts")]
    SearchFailed { vertex: u32, attempts: u32 },
    #[error("realized point set bounds the wrong polytope: {0}")]
    RealizationMismatch(String),

    #[error("not a shelling at step {step}: minimal new faces {faces:?}")]
    NotShelling { step: usize, faces: Vec<VertexSet> },

    #[error("colex shelling property ({property}) fails at step {step} for facet {facet}")]
    ColexProperty {
        step: usize,
        property: char,
        facet: VertexSet,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
