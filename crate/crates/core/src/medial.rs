//! Four-valent flat curve diagrams and the medial construction.
//!
//! Replacing every edge of a plane multigraph by a crossing of two curve
//! strands, and wiring neighbouring edge-ends together around each vertex
//! and each face, yields a four-valent plane map — a *flat* — whose strands
//! close up into curves. `Flat` stores that map combinatorially: crossing
//! `c` owns the four corner darts `4c..4c+4` in counterclockwise order,
//! `mate` pairs corners joined by an arc, and closed curves that meet no
//! crossing at all are only counted (`free_circles`), not embedded.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{Dart, PgError, PlaneGraph};

/// Corner of a crossing: `4c + k` with `k` counterclockwise in `0..4`.
/// A strand entering a corner leaves at the diagonally opposite one, so the
/// two strands through crossing `c` occupy corners `{0,2}` and `{1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlatDart(pub usize);

impl FlatDart {
    pub fn crossing(self) -> usize {
        self.0 >> 2
    }

    pub fn corner(self) -> usize {
        self.0 & 3
    }

    /// The diagonally opposite corner: where a strand entering here exits.
    pub fn across(self) -> FlatDart {
        FlatDart(self.0 ^ 2)
    }

    /// Next corner counterclockwise at the same crossing.
    pub fn rot_next(self) -> FlatDart {
        FlatDart((self.0 & !3) | ((self.0 + 1) & 3))
    }

    /// Previous corner (clockwise neighbor) at the same crossing.
    pub fn rot_prev(self) -> FlatDart {
        FlatDart((self.0 & !3) | ((self.0 + 3) & 3))
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for FlatDart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for FlatDart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// One region (face) of a flat: its corner darts in traversal order.
/// Region ids are canonical: regions are numbered by ascending smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub id: usize,
    pub darts: Vec<FlatDart>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlatError {
    #[error("mate table length {0} is not a multiple of 4")]
    BadLength(usize),
    #[error("mate is not a fixed-point-free involution at dart {0}")]
    BadInvolution(usize),
    #[error("outer hint dart {0} out of range")]
    HintOutOfRange(usize),
    #[error("component {component} does not close up in the plane ({regions} regions over {crossings} crossings)")]
    NotPlanar {
        component: usize,
        regions: usize,
        crossings: usize,
    },
}

/// Where each region of a medial flat came from in the source graph:
/// one region per non-isolated vertex and one per face, jointly covering
/// every region exactly once. Isolated vertices turn into free circles and
/// carry no region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedialOrigin {
    pub vertex_region: Vec<Option<usize>>,
    pub face_region: Vec<usize>,
}

/// A flat curve diagram in the plane.
#[derive(Clone)]
pub struct Flat {
    crossings: usize,
    mate: Vec<usize>, // corner dart -> corner dart across an arc
    free_circles: usize,
    regions: Vec<Region>,
    region_of: Vec<usize>,    // corner dart -> region id
    component_of: Vec<usize>, // crossing -> component id
    component_count: usize,
    outer_regions: Vec<usize>, // component id -> its unbounded region
    origin: Option<MedialOrigin>,
}

impl PartialEq for Flat {
    fn eq(&self, other: &Self) -> bool {
        self.mate == other.mate
            && self.free_circles == other.free_circles
            && self.outer_regions == other.outer_regions
    }
}

impl Eq for Flat {}

impl fmt::Debug for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Flat")
            .field("crossings", &self.crossings)
            .field("mate", &self.mate)
            .field("free_circles", &self.free_circles)
            .field("outer_regions", &self.outer_regions)
            .finish()
    }
}

impl Flat {
    /// Builds a flat from its arc involution. `outer_hints` are darts whose
    /// regions should be treated as unbounded, at most one taking effect per
    /// component (first hit wins); components not covered by any hint fall
    /// back to the region of their smallest dart. Fails unless `mate` is a
    /// fixed-point-free involution describing a planar map.
    pub fn from_parts(
        mate: Vec<usize>,
        free_circles: usize,
        outer_hints: &[usize],
    ) -> Result<Flat, FlatError> {
        if mate.len() % 4 != 0 {
            return Err(FlatError::BadLength(mate.len()));
        }
        let crossings = mate.len() / 4;
        for (i, &m) in mate.iter().enumerate() {
            if m >= mate.len() || m == i || mate[m] != i {
                return Err(FlatError::BadInvolution(i));
            }
        }
        for &h in outer_hints {
            if h >= mate.len() {
                return Err(FlatError::HintOutOfRange(h));
            }
        }

        // Regions are orbits of fd -> rot_next(mate(fd)); scanning starts in
        // ascending order makes ids canonical by smallest member dart.
        let mut region_of = vec![usize::MAX; mate.len()];
        let mut regions: Vec<Region> = Vec::new();
        for start in 0..mate.len() {
            if region_of[start] != usize::MAX {
                continue;
            }
            let id = regions.len();
            let mut darts = Vec::new();
            let mut fd = start;
            loop {
                region_of[fd] = id;
                darts.push(FlatDart(fd));
                fd = FlatDart(mate[fd]).rot_next().index();
                if fd == start {
                    break;
                }
            }
            regions.push(Region { id, darts });
        }

        let mut component_of = vec![usize::MAX; crossings];
        let mut component_count = 0;
        for c0 in 0..crossings {
            if component_of[c0] != usize::MAX {
                continue;
            }
            let id = component_count;
            component_count += 1;
            component_of[c0] = id;
            let mut stack = vec![c0];
            while let Some(c) = stack.pop() {
                for k in 0..4 {
                    let w = mate[4 * c + k] >> 2;
                    if component_of[w] == usize::MAX {
                        component_of[w] = id;
                        stack.push(w);
                    }
                }
            }
        }

        // Sphere check per component: a four-valent map with n crossings has
        // 2n arcs, so Euler's formula forces exactly n + 2 regions.
        let mut comp_regions = vec![0usize; component_count];
        for r in &regions {
            comp_regions[component_of[r.darts[0].crossing()]] += 1;
        }
        let mut comp_crossings = vec![0usize; component_count];
        for &c in &component_of {
            comp_crossings[c] += 1;
        }
        for comp in 0..component_count {
            if comp_regions[comp] != comp_crossings[comp] + 2 {
                return Err(FlatError::NotPlanar {
                    component: comp,
                    regions: comp_regions[comp],
                    crossings: comp_crossings[comp],
                });
            }
        }

        // Smallest-dart fallback first, then the first hint per component.
        let mut outer_regions = vec![usize::MAX; component_count];
        for fd in (0..mate.len()).rev() {
            outer_regions[component_of[fd >> 2]] = region_of[fd];
        }
        let mut hinted = vec![false; component_count];
        for &h in outer_hints {
            let comp = component_of[h >> 2];
            if !hinted[comp] {
                hinted[comp] = true;
                outer_regions[comp] = region_of[h];
            }
        }

        Ok(Flat {
            crossings,
            mate,
            free_circles,
            regions,
            region_of,
            component_of,
            component_count,
            outer_regions,
            origin: None,
        })
    }

    pub fn crossings(&self) -> usize {
        self.crossings
    }

    pub fn dart_count(&self) -> usize {
        4 * self.crossings
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    pub fn mate(&self, fd: FlatDart) -> FlatDart {
        FlatDart(self.mate[fd.index()])
    }

    pub fn mate_table(&self) -> &[usize] {
        &self.mate
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn region_of(&self, fd: FlatDart) -> usize {
        self.region_of[fd.index()]
    }

    pub fn component_of_crossing(&self, c: usize) -> usize {
        self.component_of[c]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Region ids of the unbounded region, one entry per component.
    pub fn outer_regions(&self) -> &[usize] {
        &self.outer_regions
    }

    pub fn is_outer_region(&self, region: usize) -> bool {
        let comp = self.component_of[self.regions[region].darts[0].crossing()];
        self.outer_regions[comp] == region
    }

    pub fn origin(&self) -> Option<&MedialOrigin> {
        self.origin.as_ref()
    }

    /// Two-colors the regions so that neighbours across every arc differ,
    /// with each component's unbounded region unshaded. Always succeeds:
    /// four-valent plane maps have even vertex degrees, which makes their
    /// regions two-colorable.
    pub fn checkerboard(&self) -> Shading {
        let mut shaded = vec![false; self.regions.len()];
        let mut visited = vec![false; self.regions.len()];
        let mut queue = VecDeque::new();
        for &r in &self.outer_regions {
            visited[r] = true;
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for &fd in &self.regions[r].darts {
                let s = self.region_of[self.mate[fd.index()]];
                if visited[s] {
                    assert_ne!(shaded[s], shaded[r], "region two-coloring conflict");
                } else {
                    visited[s] = true;
                    shaded[s] = !shaded[r];
                    queue.push_back(s);
                }
            }
        }
        assert!(visited.into_iter().all(|v| v), "region unreachable from its outer region");
        Shading { shaded }
    }
}

/// Result of `Flat::checkerboard`: `shaded[r]` for each region id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shading {
    pub shaded: Vec<bool>,
}

/// Corner flanking graph dart `d` counterclockwise-after it at its vertex.
fn corner_after(d: Dart) -> usize {
    4 * d.edge() + if d.is_forward() { 1 } else { 3 }
}

/// Corner flanking graph dart `d` clockwise-before it at its vertex.
fn corner_before(d: Dart) -> usize {
    4 * d.edge() + if d.is_forward() { 2 } else { 0 }
}

/// Corner of crossing `edge(d)` that faces into the face traced from `d`.
fn corner_in_face(d: Dart) -> usize {
    4 * d.edge() + if d.is_forward() { 3 } else { 1 }
}

/// The medial flat of a plane multigraph: one crossing per edge, one strand
/// arc per corner of the graph (a dart and its rotation successor), one free
/// circle per isolated vertex. Each region of the result corresponds to
/// either a vertex or a face of the source graph; the regions of the graph's
/// unbounded faces are designated unbounded in the flat.
pub fn medial(g: &PlaneGraph) -> Result<Flat, PgError> {
    g.check_planar()?;
    let mut mate = vec![usize::MAX; 4 * g.edge_count()];
    for di in 0..g.dart_count() {
        let d = Dart(di);
        let a = corner_after(d);
        let b = corner_before(g.rot_next(d));
        mate[a] = b;
        mate[b] = a;
    }
    let free_circles = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
    let (faces, _) = g.faces_with_map();
    let hints: Vec<usize> = g
        .outer_face_ids()
        .iter()
        .flatten()
        .map(|&f| corner_in_face(faces[f].darts[0]))
        .collect();
    let mut flat = Flat::from_parts(mate, free_circles, &hints)
        .expect("medial of a planar graph is a planar flat");

    let vertex_region = (0..g.vertex_count())
        .map(|v| {
            g.rotation(v)
                .first()
                .map(|&d| flat.region_of(FlatDart(corner_before(d))))
        })
        .collect();
    let face_region = faces
        .iter()
        .map(|f| flat.region_of(FlatDart(corner_in_face(f.darts[0]))))
        .collect();
    flat.origin = Some(MedialOrigin {
        vertex_region,
        face_region,
    });
    Ok(flat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::{generate, Family};

    fn medial_of(family: Family) -> Flat {
        medial(&generate(family).unwrap()).unwrap()
    }

    #[test]
    fn square_cycle_mate_table_is_pinned() {
        // Worked out by hand on the square: the medial is the diagonal
        // square-in-square diagram with eight arcs.
        let flat = medial_of(Family::Cycle(4));
        assert_eq!(
            flat.mate_table(),
            &[5, 12, 15, 6, 9, 0, 3, 10, 13, 4, 7, 14, 1, 8, 11, 2]
        );
        assert_eq!(flat.crossings(), 4);
        assert_eq!(flat.free_circles(), 0);
    }

    #[test]
    fn square_cycle_regions_split_into_vertex_and_face_regions() {
        let flat = medial_of(Family::Cycle(4));
        let darts: Vec<Vec<usize>> = flat
            .regions()
            .iter()
            .map(|r| r.darts.iter().map(|d| d.index()).collect())
            .collect();
        assert_eq!(
            darts,
            vec![
                vec![0, 6],
                vec![1, 13, 9, 5],
                vec![2, 12],
                vec![3, 7, 11, 15],
                vec![4, 10],
                vec![8, 14],
            ]
        );
        let origin = flat.origin().unwrap();
        assert_eq!(origin.vertex_region, vec![Some(2), Some(0), Some(4), Some(5)]);
        assert_eq!(origin.face_region, vec![3, 1]);
        // The unbounded face of the square maps to the unbounded region.
        assert_eq!(flat.outer_regions(), &[3]);
    }

    #[test]
    fn single_edge_medial_is_a_one_crossing_lobe_curve() {
        let flat = medial_of(Family::Path(2));
        assert_eq!(flat.mate_table(), &[3, 2, 1, 0]);
        assert_eq!(flat.region_count(), 3);
        let origin = flat.origin().unwrap();
        // Each endpoint sits in its own lobe; the single face is outside.
        assert_eq!(origin.vertex_region, vec![Some(2), Some(0)]);
        assert_eq!(origin.face_region, vec![1]);
        assert_eq!(flat.outer_regions(), &[1]);
    }

    #[test]
    fn loop_medial_origin() {
        let flat = medial_of(Family::Cycle(1));
        assert_eq!(flat.crossings(), 1);
        assert_eq!(flat.region_count(), 3);
        let origin = flat.origin().unwrap();
        assert_eq!(origin.vertex_region, vec![Some(0)]);
        assert_eq!(origin.face_region.len(), 2);
    }

    #[test]
    fn isolated_vertices_become_free_circles() {
        let g = generate(Family::Path(1)).unwrap();
        let flat = medial(&g).unwrap();
        assert_eq!(flat.crossings(), 0);
        assert_eq!(flat.free_circles(), 1);
        assert_eq!(flat.region_count(), 0);
        assert_eq!(flat.origin().unwrap().vertex_region, vec![None]);

        let two = g.disjoint_union(&g);
        assert_eq!(medial(&two).unwrap().free_circles(), 2);
    }

    #[test]
    fn origin_is_a_bijection_onto_regions() {
        let families = [
            Family::Cycle(5),
            Family::Path(4),
            Family::Grid(2, 3),
            Family::Wheel(4),
            Family::Theta(3),
            Family::Complete4,
            Family::LoopBouquetNested(2),
        ];
        for family in families {
            let flat = medial_of(family);
            let origin = flat.origin().unwrap();
            let mut hit: Vec<usize> = origin
                .vertex_region
                .iter()
                .flatten()
                .chain(origin.face_region.iter())
                .copied()
                .collect();
            hit.sort_unstable();
            let expect: Vec<usize> = (0..flat.region_count()).collect();
            assert_eq!(hit, expect, "{family:?}");
        }
    }

    #[test]
    fn region_counts_follow_euler() {
        // Connected graph with edges: regions = vertices + faces.
        for (family, v, f) in [
            (Family::Cycle(5), 5, 2),
            (Family::Grid(3, 3), 9, 5),
            (Family::Wheel(5), 6, 6),
            (Family::Complete4, 4, 4),
        ] {
            let flat = medial_of(family);
            assert_eq!(flat.region_count(), v + f, "{family:?}");
            assert_eq!(flat.component_count(), 1);
        }
    }

    #[test]
    fn multi_component_medial() {
        let g = generate(Family::Cycle(3))
            .unwrap()
            .disjoint_union(&generate(Family::Path(2)).unwrap());
        let flat = medial(&g).unwrap();
        assert_eq!(flat.component_count(), 2);
        assert_eq!(flat.outer_regions().len(), 2);
        assert_eq!(flat.region_count(), 4 + 2 * 2);
        // Each component's outer region is its own.
        for (comp, &r) in flat.outer_regions().iter().enumerate() {
            assert_eq!(
                flat.component_of_crossing(flat.regions()[r].darts[0].crossing()),
                comp
            );
            assert!(flat.is_outer_region(r));
        }
    }

    #[test]
    fn outer_hint_flows_through_to_the_flat() {
        let g = generate(Family::Cycle(4)).unwrap();
        let (faces, face_of) = g.faces_with_map();
        // Choose the face NOT containing dart 0 as the unbounded one.
        let inner = faces.iter().find(|f| face_of[0] != f.id).unwrap();
        let hint = inner.darts[0].index();
        let hinted = g.with_outer_face_hint(Some(hint)).unwrap();
        let flat = medial(&hinted).unwrap();
        assert_eq!(flat.outer_regions(), &[1]); // the other four-corner region
    }

    #[test]
    fn checkerboard_shades_exactly_the_vertex_regions() {
        let families = [
            Family::Cycle(4),
            Family::Cycle(5),
            Family::Path(5),
            Family::Grid(2, 3),
            Family::Wheel(4),
            Family::Theta(4),
            Family::Complete4,
            Family::LoopBouquetNested(3),
        ];
        for family in families {
            let flat = medial_of(family);
            let shading = flat.checkerboard();
            let origin = flat.origin().unwrap();
            for &r in origin.vertex_region.iter().flatten() {
                assert!(shading.shaded[r], "{family:?} vertex region {r}");
            }
            for &r in &origin.face_region {
                assert!(!shading.shaded[r], "{family:?} face region {r}");
            }
        }
    }

    #[test]
    fn from_parts_rejects_bad_input() {
        assert_eq!(
            Flat::from_parts(vec![1, 0, 3], 0, &[]),
            Err(FlatError::BadLength(3))
        );
        assert_eq!(
            Flat::from_parts(vec![0, 2, 1, 3], 0, &[]),
            Err(FlatError::BadInvolution(0))
        );
        assert_eq!(
            Flat::from_parts(vec![1, 0, 3, 2, 5, 4, 7, 6], 0, &[9]),
            Err(FlatError::HintOutOfRange(9))
        );
        // Both strand pairs of a single crossing joined straight across is
        // a curve on the projective plane, not in the plane: one region.
        assert_eq!(
            Flat::from_parts(vec![2, 3, 0, 1], 0, &[]),
            Err(FlatError::NotPlanar {
                component: 0,
                regions: 1,
                crossings: 1
            })
        );
    }

    #[test]
    fn from_parts_accepts_a_hand_built_curl() {
        // One crossing, arcs 0-1 and 2-3: a curve crossing itself once.
        let flat = Flat::from_parts(vec![1, 0, 3, 2], 2, &[3]).unwrap();
        assert_eq!(flat.region_count(), 3);
        assert_eq!(flat.free_circles(), 2);
        assert_eq!(flat.outer_regions(), &[flat.region_of(FlatDart(3))]);
        assert!(flat.origin().is_none());
    }

    #[test]
    fn mirror_medial_is_still_planar_with_same_counts() {
        let g = generate(Family::Grid(2, 3)).unwrap();
        let m = medial(&g.mirror()).unwrap();
        let f = medial(&g).unwrap();
        assert_eq!(m.crossings(), f.crossings());
        assert_eq!(m.region_count(), f.region_count());
    }

    #[test]
    fn empty_graph_medial() {
        let flat = medial(&PlaneGraph::empty()).unwrap();
        assert_eq!(flat.crossings(), 0);
        assert_eq!(flat.free_circles(), 0);
        assert_eq!(flat.component_count(), 0);
    }

    #[test]
    fn medial_rejects_nonplanar_input() {
        let g = PlaneGraph::from_rotations(vec![vec![0, 2, 1, 3]], 2, None).unwrap();
        assert!(matches!(medial(&g), Err(PgError::NonPlanar { .. })));
    }
}
