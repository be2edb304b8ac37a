//! Transversal matroids of trees, the matroid subdivisions they form, and
//! compatibility of sign maps with octahedron faces.

mod cells;
mod faces;

pub use cells::{build_subdivision, transversal_matroid, MatroidCell, Subdivision, SubdivisionKind};
pub use faces::{
    forbidden_check, local_to_global_verify, octahedron_faces, FaceReport, FaceSplit, ForbiddenReport, GluingReport,
    OctahedronFace,
};
