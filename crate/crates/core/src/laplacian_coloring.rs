//! Curve counts from mod-2 linear algebra: the parity Laplacian, the
//! conservative vertex colorings it cuts out, their extension to region
//! labels of the medial flat, and the label space of an arbitrary flat.
//!
//! A vertex 2-coloring is *conservative* when around every vertex the colors
//! of the neighbouring ends sum to zero (counting multiplicity, with the
//! vertex's own color joining in at odd degree). Those colorings are exactly
//! the kernel of the parity Laplacian, their number is `2^mu`, and each one
//! extends uniquely to a labelling of the medial regions that is zero on the
//! unbounded regions and sums to zero around every crossing.

use std::collections::VecDeque;

use thiserror::Error;

use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::medial::{medial, Flat};
use crate::plane_graph::{PgError, PlaneGraph};

/// Largest kernel dimension `enumerate_conservative` will ever expand.
pub const ENUMERATION_DIM_LIMIT: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] PgError),
    #[error("no conservative region labels: the relation fails at edge {0}")]
    NotConservative(usize),
    #[error("2^{dim} conservative colorings exceed the enumeration cap {cap}")]
    TooMany { dim: usize, cap: usize },
}

/// Degree-plus-adjacency matrix over GF(2). Loops drop out entirely: they
/// add two to the degree and nothing to the off-diagonal parity.
pub fn laplacian_mod2(g: &PlaneGraph) -> Gf2Matrix {
    let n = g.vertex_count();
    let mut m = Gf2Matrix::zeros(n, n);
    for v in 0..n {
        if g.degree(v) % 2 == 1 {
            m.flip(v, v);
        }
    }
    for e in 0..g.edge_count() {
        let (u, w) = g.endpoints(e);
        if u != w {
            m.flip(u, w);
            m.flip(w, u);
        }
    }
    m
}

/// Curve count as the nullity of the parity Laplacian.
pub fn mu_nullity(g: &PlaneGraph) -> Result<usize, PgError> {
    g.check_planar()?;
    Ok(laplacian_mod2(g).nullity())
}

/// Checks the conservation condition at every vertex by scanning darts,
/// without building the Laplacian.
pub fn is_conservative(g: &PlaneGraph, colors: &Gf2Vector) -> bool {
    assert_eq!(colors.len(), g.vertex_count(), "one color per vertex");
    (0..g.vertex_count()).all(|v| {
        let mut sum = g.degree(v) % 2 == 1 && colors.get(v);
        for &d in g.rotation(v) {
            sum ^= colors.get(g.vertex_of(d.twin()));
        }
        !sum
    })
}

/// All conservative colorings in Gray-code order starting from all-zero
/// (consecutive entries differ by one kernel basis vector). Errors out
/// instead of materializing more than `cap` vectors.
pub fn enumerate_conservative(
    g: &PlaneGraph,
    cap: usize,
) -> Result<Vec<Gf2Vector>, ColoringError> {
    g.check_planar()?;
    let basis = laplacian_mod2(g).null_space_basis();
    let dim = basis.len();
    if dim > ENUMERATION_DIM_LIMIT || (1usize << dim) > cap {
        return Err(ColoringError::TooMany { dim, cap });
    }
    let mut out = Vec::with_capacity(1 << dim);
    let mut cur = Gf2Vector::zeros(g.vertex_count());
    out.push(cur.clone());
    for i in 1usize..(1 << dim) {
        cur.xor_assign(&basis[i.trailing_zeros() as usize]);
        out.push(cur.clone());
    }
    Ok(out)
}

/// Curve count by counting conservative colorings: enumerate the kernel,
/// re-verify every member against the dart-level conservation condition,
/// and take the base-2 logarithm of the count.
pub fn mu_coloring(g: &PlaneGraph, cap: usize) -> Result<usize, ColoringError> {
    let colorings = enumerate_conservative(g, cap)?;
    for c in &colorings {
        assert!(
            is_conservative(g, c),
            "kernel member fails the conservation scan"
        );
    }
    let count = colorings.len();
    assert!(count.is_power_of_two());
    Ok(count.trailing_zeros() as usize)
}

/// Traversal discipline for the dual spanning tree in `extend_coloring`.
/// A conservative coloring extends to the same labels under either; that
/// invariance is itself a useful consistency check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualTreeOrder {
    BreadthFirst,
    DepthFirstReversed,
}

/// Extends a conservative vertex coloring to labels on the regions of the
/// medial flat: vertex regions carry their vertex's color, unbounded regions
/// carry zero, and around every crossing the four region labels sum to zero.
/// Labels are propagated face-to-face along a dual spanning tree and then
/// every crossing relation is re-checked; a non-conservative coloring fails
/// that check. `flat` must be `medial(g)` (it carries the origin data).
pub fn extend_coloring(
    g: &PlaneGraph,
    flat: &Flat,
    colors: &Gf2Vector,
    order: DualTreeOrder,
) -> Result<Gf2Vector, ColoringError> {
    let origin = flat.origin().expect("flat must carry medial origin data");
    assert_eq!(colors.len(), g.vertex_count(), "one color per vertex");
    assert_eq!(flat.crossings(), g.edge_count(), "flat is not this graph's medial");

    let (faces, face_of) = g.faces_with_map();
    let mut face_label: Vec<Option<bool>> = vec![None; faces.len()];
    let mut worklist: VecDeque<usize> = VecDeque::new();
    for &f in g.outer_face_ids().iter().flatten() {
        face_label[f] = Some(false);
        worklist.push_back(f);
    }
    let edge_parity = |e: usize| {
        let (u, w) = g.endpoints(e);
        colors.get(u) ^ colors.get(w)
    };
    while let Some(f) = match order {
        DualTreeOrder::BreadthFirst => worklist.pop_front(),
        DualTreeOrder::DepthFirstReversed => worklist.pop_back(),
    } {
        let here = face_label[f].unwrap();
        let mut darts = faces[f].darts.clone();
        if order == DualTreeOrder::DepthFirstReversed {
            darts.reverse();
        }
        for d in darts {
            let across = face_of[d.twin().index()];
            if face_label[across].is_none() {
                face_label[across] = Some(here ^ edge_parity(d.edge()));
                worklist.push_back(across);
            }
        }
    }

    // Every edge relation must hold, tree edge or not; around a crossing the
    // two face labels and the two endpoint colors sum to zero.
    for e in 0..g.edge_count() {
        let f1 = face_label[face_of[2 * e]].expect("face reachable from its outer face");
        let f2 = face_label[face_of[2 * e + 1]].expect("face reachable from its outer face");
        if f1 ^ f2 ^ edge_parity(e) {
            return Err(ColoringError::NotConservative(e));
        }
    }

    let mut labels = Gf2Vector::zeros(flat.region_count());
    for v in 0..g.vertex_count() {
        if let Some(r) = origin.vertex_region[v] {
            labels.set(r, colors.get(v));
        }
    }
    for (f, &r) in origin.face_region.iter().enumerate() {
        labels.set(r, face_label[f].unwrap());
    }
    Ok(labels)
}

/// Dimension of the space of region labellings of a flat that vanish on the
/// unbounded regions and sum to zero around every crossing. Free circles
/// contribute one unconstrained bounded region each.
pub fn region_space_dim(flat: &Flat) -> usize {
    let mut col_of_region = vec![usize::MAX; flat.region_count()];
    let mut cols = 0;
    for r in 0..flat.region_count() {
        if !flat.is_outer_region(r) {
            col_of_region[r] = cols;
            cols += 1;
        }
    }
    let mut m = Gf2Matrix::zeros(flat.crossings(), cols);
    for fd in 0..flat.dart_count() {
        let r = flat.region_of(crate::medial::FlatDart(fd));
        if col_of_region[r] != usize::MAX {
            m.flip(fd >> 2, col_of_region[r]);
        }
    }
    cols + flat.free_circles() - m.rank()
}

/// Curve count as the dimension of the medial flat's region label space.
pub fn mu_regions(g: &PlaneGraph) -> Result<usize, PgError> {
    Ok(region_space_dim(&medial(g)?))
}
