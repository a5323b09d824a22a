//! Boundary structure of disk-like planar self-affine tiles `T(A, D)` whose
//! expanding matrix has characteristic polynomial `x^2 + p x + q` and whose
//! digit set is `{0, v, ..., (|q|-1) v}`.
//!
//! The crate builds the neighbor graph of the tile, the graph-directed
//! system for its boundary and the associated contact matrix, decides the
//! number-system property, and computes the boundary dimension.
//!
//! ```
//! use tilelab_core::{validate_poly, build_neighbor_graph, spectral::dimension_report};
//!
//! let poly = validate_poly(-2, 2).unwrap();
//! assert_eq!(build_neighbor_graph(&poly).unwrap().len(), 6);
//! let dim = dimension_report(&poly).unwrap().dim_generalized;
//! assert!((dim - 1.523627).abs() < 1e-4);
//! ```

pub mod algebra;
pub mod appendix;
pub mod error;
pub mod geometry;
pub mod gifs;
pub mod neighbors;
pub mod numbersys;
pub mod spectral;
pub mod verify;

#[cfg(test)]
mod proptests;

pub use algebra::{
    apply_a, apply_a_inverse, apply_a_rational, eval_integer_word, eval_radix_finite, eval_radix_periodic,
    neighbor_step, validate_poly, Family, LatticeVec, PeriodicWord, RadixWord, RationalVec, TilePoly,
};
pub use error::{Result, TileError};
pub use geometry::{
    boundary_cloud, check_osc_numeric, hausdorff_distance, render, tile_cloud, ImageFormat, OscReport, PointCloud,
};
pub use gifs::{build_gifs, contact_matrix, index_set, is_irreducible, ContactMatrix, GifsSystem};
pub use neighbors::{
    accepts, appendix_neighbor_graph, boundary_point_from_path, build_neighbor_graph, find_sign_path,
    find_sign_path_from, origin_on_boundary, NeighborGraph, Sign, SignPath,
};
pub use numbersys::{is_number_system, neighbor_delta_form, neighbor_digit_form, represent, Representation};
pub use spectral::{char_poly, cubic_largest_root, dimension_report, spectral_radius, DimensionReport, IntPoly};
pub use verify::{verify, Suite, VerifyReport};
