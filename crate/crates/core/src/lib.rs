//! Discrete differential geometry on finite simple graphs.
//!
//! A graph carries a Whitney complex: the k-simplices are its (k+1)-cliques.
//! On that complex this crate computes, with exact rational arithmetic
//! throughout:
//!
//! - curvature `K(v)` from the clique counts of unit spheres, and the
//!   Gauss-Bonnet identity `Σ_v K(v) = χ(G)` ([`geometry`]);
//! - Poincaré-Hopf indices `i_f(v) = 1 − χ(S_f^-(v))` of injective vertex
//!   functions, with `Σ_v i_f(v) = χ(G)` ([`morse`]);
//! - the inductive (possibly fractional) dimension and interior/boundary
//!   classification of vertices ([`geometry`]);
//! - discrete forms, chains, the exterior derivative and boundary operator,
//!   orientations, Green-Stokes `⟨df, G⟩ = ⟨f, ∂G⟩`, Betti numbers, and
//!   Euler-Poincaré ([`forms`]);
//! - the clique-count transfer equations linking local sphere data to
//!   global simplex counts ([`simplicial`]);
//! - a small-scale Reeb sphere recognizer ([`morse::sphere_like`]).
//!
//! Everything is deterministic; random inputs (test functions, forms,
//! G(n,p) graphs) come from seeded generators.
//!
//! ```
//! use graphgeom::{generators, geometry};
//!
//! let g = generators::icosahedron();
//! let report = geometry::gauss_bonnet_verify(&g);
//! assert!(report.pass());
//! assert_eq!(report.euler_characteristic, 2);
//! ```

pub mod error;
pub mod forms;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod morse;
pub mod rational;
pub mod simplicial;

pub use error::{Error, Result};
pub use forms::{
    boundary, boundary_as_graph, betti_numbers, euler_poincare_verify, exterior_derivative,
    orientation_search, pairing, stokes_verify, volume_chain, BoundaryGraph, Chain,
    EulerPoincareReport, Form, Orientation, OrientationOutcome, StokesReport,
};
pub use generators::{generate, family_names, GeneratorSpec};
pub use geometry::{
    boundary_vertices, classify_vertex, curvature, dimension, gauss_bonnet_verify,
    GaussBonnetReport, VertexClass,
};
pub use graph::{Graph, VertexMap};
pub use morse::{
    exit_set, entrance_set, index, mixed_counts, morse_local_data, poincare_hopf_verify,
    random_injective_function, sphere_like, symmetric_index, MorseLocalData, PoincareHopfReport,
    VertexFunction,
};
pub use rational::{format_rational, parse_rational, rat, rat_int, Rational};
pub use simplicial::{
    check_intermediate, check_transfer, clique_complex, clique_fvec, euler_characteristic,
    graph_euler_characteristic, CliqueComplex, CountingReport, CountingRow, Simplex,
};
