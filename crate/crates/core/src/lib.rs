//! Closed-curve component counts for plane multigraphs.
//!
//! Replacing every edge of a plane multigraph by a crossing of two curve
//! strands yields a four-valent curve diagram; the number of closed curves in
//! that diagram, written mu, is a classical invariant of the graph. This
//! crate computes mu five independent ways — tracing the strands, mod-2
//! Laplacian nullity, the dimension of the conservative-labelling space of
//! regions, counting conservative vertex colorings, and a Tutte-polynomial
//! evaluation — and cross-checks them against each other.

pub mod flat_trace;
pub mod gf2;
pub mod laplacian_coloring;
pub mod medial;
pub mod plane_graph;
pub mod report;
pub mod tutte;

pub use flat_trace::{
    apply_move, apply_moves, curve_count, mu_trace, simplify, strand_orbits, MoveError, MoveSpec,
    SimplifyOutcome,
};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use laplacian_coloring::{
    enumerate_conservative, extend_coloring, is_conservative, laplacian_mod2, mu_coloring,
    mu_nullity, mu_regions, region_space_dim, ColoringError, DualTreeOrder,
};
pub use medial::{medial, Flat, FlatDart, FlatError, MedialOrigin, Region, Shading};
pub use plane_graph::{generate, Dart, Face, Family, PgError, PlaneGraph};
pub use report::{
    bench_grids, check_sweep, mu_report, parse_suite, random_instances, BenchLine, MuReport,
    SweepOutcome, Timings, DEFAULT_COLORING_CAP, DEFAULT_SUITE,
};
pub use tutte::{mu_tutte, tutte_eval_minus1, TutteError, DEFAULT_TUTTE_EDGE_BUDGET};
