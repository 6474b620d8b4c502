//! Strand tracing and local moves on flat curve diagrams.
//!
//! A strand walks a flat by entering a crossing at one corner, leaving at the
//! diagonal corner, and following the arc from there. Orbits of that step
//! come in mirror pairs (one per travel direction), so the number of closed
//! curves is half the orbit count, plus any crossing-free circles.
//!
//! The moves are the flat versions of the usual diagram moves: adding or
//! removing a curl (`R1`), pushing one arc over another or pulling two arcs
//! apart (`R2`), and sliding a strand across a crossing (`R3`). All of them
//! preserve the number of closed curves.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::medial::{medial, Flat, FlatDart};
use crate::plane_graph::{PgError, PlaneGraph};

/// Directed strand passes: orbits of "enter corner, exit diagonally, follow
/// the arc". Canonical order: ascending smallest dart.
pub fn strand_orbits(flat: &Flat) -> Vec<Vec<FlatDart>> {
    let n = flat.dart_count();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut fd = FlatDart(start);
        loop {
            seen[fd.index()] = true;
            orbit.push(fd);
            fd = flat.mate(fd.across());
            if fd.index() == start {
                break;
            }
        }
        orbits.push(orbit);
    }
    orbits
}

/// Number of closed curves in the flat: strand orbit pairs plus free circles.
pub fn curve_count(flat: &Flat) -> usize {
    let orbits = strand_orbits(flat).len();
    // Forward and backward passes of one curve enter disjoint corner sets,
    // so orbits pair up exactly.
    assert!(orbits % 2 == 0, "strand orbits must pair by direction");
    orbits / 2 + flat.free_circles()
}

/// The curve count of the medial flat of `g`, by direct tracing.
pub fn mu_trace(g: &PlaneGraph) -> Result<usize, PgError> {
    Ok(curve_count(&medial(g)?))
}

/// A local move on a flat diagram. Region-anchored moves name a region id of
/// the flat they are applied to; dart-anchored moves name corner darts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum MoveSpec {
    /// Add a curl on the arc at `dart`, bulging into that dart's region.
    R1Add { dart: usize },
    /// Remove the curl whose loop encloses the monogon `region`.
    R1Remove { region: usize },
    /// Push the arc at `dart_a` over the arc at `dart_b` across their
    /// common region.
    R2Add { dart_a: usize, dart_b: usize },
    /// Pull apart the two arcs bounding the bigon `region`.
    R2Remove { region: usize },
    /// Slide a strand across the opposite crossing of the triangle `region`.
    R3 { region: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("flat dart {0} out of range")]
    DartOutOfRange(usize),
    #[error("region {0} out of range")]
    RegionOutOfRange(usize),
    #[error("region {0} is not a monogon")]
    NotAMonogon(usize),
    #[error("region {0} is not a bigon with two distinct crossings")]
    NotABigon(usize),
    #[error("region {0} is not a triangle with three distinct crossings")]
    NotATriangle(usize),
    #[error("darts {0} and {1} do not bound a common region as distinct arcs")]
    BadArcPair(usize, usize),
}

/// Applies one move, returning the rewritten flat. The input is unchanged;
/// region and dart ids in later moves must refer to the *returned* flat.
pub fn apply_move(flat: &Flat, mv: MoveSpec) -> Result<Flat, MoveError> {
    match mv {
        MoveSpec::R1Add { dart } => r1_add(flat, dart),
        MoveSpec::R1Remove { region } => r1_remove(flat, region),
        MoveSpec::R2Add { dart_a, dart_b } => r2_add(flat, dart_a, dart_b),
        MoveSpec::R2Remove { region } => r2_remove(flat, region),
        MoveSpec::R3 { region } => r3(flat, region),
    }
}

/// Applies a move sequence left to right.
pub fn apply_moves(flat: &Flat, moves: &[MoveSpec]) -> Result<Flat, MoveError> {
    let mut cur = flat.clone();
    for &mv in moves {
        cur = apply_move(&cur, mv)?;
    }
    Ok(cur)
}

/// Darts of each unbounded region that still exist after a rewrite keep the
/// unbounded designation on whatever region now contains them; rebuilding
/// with these hints preserves the choice wherever the old boundary survives.
fn outer_hint_darts(flat: &Flat) -> Vec<usize> {
    let mut hints = Vec::new();
    for &r in flat.outer_regions() {
        let mut darts: Vec<usize> = flat.regions()[r].darts.iter().map(|d| d.index()).collect();
        darts.sort_unstable();
        hints.extend(darts);
    }
    hints
}

fn rebuild(mate: Vec<usize>, free_circles: usize, hints: &[usize]) -> Flat {
    Flat::from_parts(mate, free_circles, hints).expect("move produced an invalid flat")
}

fn check_region(flat: &Flat, region: usize) -> Result<(), MoveError> {
    if region >= flat.region_count() {
        return Err(MoveError::RegionOutOfRange(region));
    }
    Ok(())
}

fn r1_add(flat: &Flat, dart: usize) -> Result<Flat, MoveError> {
    if dart >= flat.dart_count() {
        return Err(MoveError::DartOutOfRange(dart));
    }
    let mut mate = flat.mate_table().to_vec();
    let n4 = mate.len();
    let m = mate[dart];
    mate.extend([usize::MAX; 4]);
    // New crossing corners: the strand now runs dart -> corner 1, out at
    // corner 3 around the curl through corners 2, 0, and on to the old mate.
    mate[dart] = n4 + 1;
    mate[n4 + 1] = dart;
    mate[n4] = m;
    mate[m] = n4;
    mate[n4 + 2] = n4 + 3;
    mate[n4 + 3] = n4 + 2;
    Ok(rebuild(mate, flat.free_circles(), &outer_hint_darts(flat)))
}

fn r1_remove(flat: &Flat, region: usize) -> Result<Flat, MoveError> {
    check_region(flat, region)?;
    let darts = &flat.regions()[region].darts;
    if darts.len() != 1 {
        return Err(MoveError::NotAMonogon(region));
    }
    Ok(remove_crossings(flat, &[darts[0].crossing()]))
}

fn r2_add(flat: &Flat, dart_a: usize, dart_b: usize) -> Result<Flat, MoveError> {
    for d in [dart_a, dart_b] {
        if d >= flat.dart_count() {
            return Err(MoveError::DartOutOfRange(d));
        }
    }
    // Both anchors must view the same region; distinct darts then guarantee
    // distinct arcs, because an arc never has the same region on both sides.
    if dart_a == dart_b
        || flat.region_of(FlatDart(dart_a)) != flat.region_of(FlatDart(dart_b))
    {
        return Err(MoveError::BadArcPair(dart_a, dart_b));
    }
    let mut mate = flat.mate_table().to_vec();
    let n4 = mate.len();
    let ma = mate[dart_a];
    let mb = mate[dart_b];
    mate.extend([usize::MAX; 8]);
    // The a-strand passes crossings n, n+1 via corners 1,3 then 7,5; the
    // b-strand crosses it via corners 4,6 then 0,2. Corners 0 and 7 bound
    // the new bigon.
    let pairs = [
        (dart_a, n4 + 1),
        (n4 + 5, ma),
        (dart_b, n4 + 4),
        (n4 + 2, mb),
        (n4 + 3, n4 + 7),
        (n4 + 6, n4),
    ];
    for (x, y) in pairs {
        mate[x] = y;
        mate[y] = x;
    }
    Ok(rebuild(mate, flat.free_circles(), &outer_hint_darts(flat)))
}

fn r2_remove(flat: &Flat, region: usize) -> Result<Flat, MoveError> {
    check_region(flat, region)?;
    let darts = &flat.regions()[region].darts;
    if darts.len() != 2 || darts[0].crossing() == darts[1].crossing() {
        return Err(MoveError::NotABigon(region));
    }
    Ok(remove_crossings(flat, &[darts[0].crossing(), darts[1].crossing()]))
}

fn r3(flat: &Flat, region: usize) -> Result<Flat, MoveError> {
    check_region(flat, region)?;
    let darts = &flat.regions()[region].darts;
    if darts.len() != 3 {
        return Err(MoveError::NotATriangle(region));
    }
    let (u, v, w) = (darts[0], darts[1], darts[2]);
    if u.crossing() == v.crossing()
        || v.crossing() == w.crossing()
        || w.crossing() == u.crossing()
    {
        return Err(MoveError::NotATriangle(region));
    }

    let old = flat.mate_table();
    let mut mate = old.to_vec();
    // The triangle boundary arcs are u-prev(v), v-prev(w), w-prev(u); the
    // six remaining corners of its crossings are ports for outside arcs.
    // Sliding the strands flips the triangle to the other side of each
    // crossing: every port's arc moves to the port's image under `relocate`,
    // and the freed ports close up into the flipped triangle.
    let ports = [
        v.rot_next(),
        w.rot_next(),
        u.rot_next(),
        u.across(),
        v.across(),
        w.across(),
    ];
    let targets = [u, v, w, v.rot_prev(), w.rot_prev(), u.rot_prev()];
    for (i, &p) in ports.iter().enumerate() {
        let q = FlatDart(old[p.index()]);
        if let Some(j) = ports.iter().position(|&o| o == q) {
            if j < i {
                continue; // both ends are ports; already rewired from j
            }
            mate[targets[i].index()] = targets[j].index();
            mate[targets[j].index()] = targets[i].index();
        } else {
            mate[targets[i].index()] = q.index();
            mate[q.index()] = targets[i].index();
        }
    }
    for (x, y) in [
        (u.across(), v.rot_next()),
        (v.across(), w.rot_next()),
        (w.across(), u.rot_next()),
    ] {
        mate[x.index()] = y.index();
        mate[y.index()] = x.index();
    }
    Ok(rebuild(mate, flat.free_circles(), &outer_hint_darts(flat)))
}

/// Deletes the given crossings and re-threads every strand that passed
/// through them; strands running entirely inside the deleted set close up
/// into free circles. Strand connectivity — and therefore the curve count —
/// is preserved exactly.
fn remove_crossings(flat: &Flat, removed: &[usize]) -> Flat {
    let old = flat.mate_table();
    let mut is_removed = vec![false; flat.crossings()];
    for &c in removed {
        is_removed[c] = true;
    }
    let gone = |fd: usize| is_removed[fd >> 2];

    // Splice: from each surviving arc-end, follow the strand through the
    // deleted zone until it re-emerges.
    let mut spliced: Vec<usize> = old.to_vec();
    let mut touched = vec![false; old.len()];
    for ell in 0..old.len() {
        if gone(ell) {
            continue;
        }
        let mut cur = old[ell];
        while gone(cur) {
            touched[cur] = true;
            touched[cur ^ 2] = true;
            cur = old[cur ^ 2];
        }
        spliced[ell] = cur;
    }

    // Whatever was never reached from outside is a closed strand inside the
    // zone; its two directed orbits make one free circle.
    let mut inner_orbits = 0;
    let mut seen = touched;
    for start in 0..old.len() {
        if !gone(start) || seen[start] {
            continue;
        }
        let mut fd = start;
        loop {
            seen[fd] = true;
            fd = old[fd ^ 2];
            if fd == start {
                break;
            }
        }
        inner_orbits += 1;
    }
    assert!(inner_orbits % 2 == 0, "inner strand orbits must pair");

    // Compact the surviving crossings.
    let mut new_crossing = vec![usize::MAX; flat.crossings()];
    let mut next = 0;
    for c in 0..flat.crossings() {
        if !is_removed[c] {
            new_crossing[c] = next;
            next += 1;
        }
    }
    let map = |fd: usize| 4 * new_crossing[fd >> 2] + (fd & 3);
    let mut mate = vec![usize::MAX; 4 * next];
    for ell in 0..old.len() {
        if !gone(ell) {
            mate[map(ell)] = map(spliced[ell]);
        }
    }

    let hints: Vec<usize> = outer_hint_darts(flat)
        .into_iter()
        .filter(|&fd| !gone(fd))
        .map(map)
        .collect();
    rebuild(mate, flat.free_circles() + inner_orbits / 2, &hints)
}

/// Result of `simplify`: the reduced flat, the moves applied in order, and
/// whether every crossing was eliminated.
#[derive(Clone, Debug)]
pub struct SimplifyOutcome {
    pub flat: Flat,
    pub applied: Vec<MoveSpec>,
    pub fully_reduced: bool,
}

fn find_monogon(flat: &Flat) -> Option<usize> {
    flat.regions().iter().position(|r| r.darts.len() == 1)
}

fn find_bigon(flat: &Flat) -> Option<usize> {
    flat.regions()
        .iter()
        .position(|r| r.darts.len() == 2 && r.darts[0].crossing() != r.darts[1].crossing())
}

fn has_reduction_site(flat: &Flat) -> bool {
    find_monogon(flat).is_some() || find_bigon(flat).is_some()
}

fn triangle_sites(flat: &Flat) -> Vec<usize> {
    flat.regions()
        .iter()
        .filter(|r| {
            r.darts.len() == 3
                && r.darts[0].crossing() != r.darts[1].crossing()
                && r.darts[1].crossing() != r.darts[2].crossing()
                && r.darts[2].crossing() != r.darts[0].crossing()
        })
        .map(|r| r.id)
        .collect()
}

/// Greedily removes crossings: curls first, then bigons, then triangle
/// slides chosen by a one- or two-step lookahead that must expose a curl or
/// bigon. Stops when the flat has no crossings, when no move helps, or when
/// `budget` moves have been applied. Every applied move preserves the curve
/// count, so the outcome always traces to the same number of curves.
pub fn simplify(flat: &Flat, budget: usize) -> SimplifyOutcome {
    let mut flat = flat.clone();
    let mut applied = Vec::new();
    'progress: while applied.len() < budget && flat.crossings() > 0 {
        if let Some(region) = find_monogon(&flat) {
            let mv = MoveSpec::R1Remove { region };
            flat = apply_move(&flat, mv).expect("monogon site validated");
            applied.push(mv);
            continue;
        }
        if let Some(region) = find_bigon(&flat) {
            let mv = MoveSpec::R2Remove { region };
            flat = apply_move(&flat, mv).expect("bigon site validated");
            applied.push(mv);
            continue;
        }
        let sites = triangle_sites(&flat);
        for &region in &sites {
            let mv = MoveSpec::R3 { region };
            let cand = apply_move(&flat, mv).expect("triangle site validated");
            if has_reduction_site(&cand) {
                flat = cand;
                applied.push(mv);
                continue 'progress;
            }
        }
        for &region in &sites {
            let mv = MoveSpec::R3 { region };
            let mid = apply_move(&flat, mv).expect("triangle site validated");
            let opens_up = triangle_sites(&mid).iter().any(|&r2| {
                let two = apply_move(&mid, MoveSpec::R3 { region: r2 })
                    .expect("triangle site validated");
                has_reduction_site(&two)
            });
            if opens_up {
                flat = mid;
                applied.push(mv);
                continue 'progress;
            }
        }
        break; // no monogon, no bigon, and no triangle slide opens one
    }
    SimplifyOutcome {
        fully_reduced: flat.crossings() == 0,
        flat,
        applied,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::{generate, Family};

    fn medial_of(family: Family) -> Flat {
        medial(&generate(family).unwrap()).unwrap()
    }

    fn figure_eight() -> Flat {
        Flat::from_parts(vec![1, 0, 3, 2], 0, &[]).unwrap()
    }

    #[test]
    fn traced_curve_counts_match_known_values() {
        for (family, mu) in [
            (Family::Cycle(3), 1),
            (Family::Cycle(4), 2),
            (Family::Cycle(5), 1),
            (Family::Cycle(6), 2),
            (Family::Path(2), 1),
            (Family::Path(5), 1),
            (Family::Theta(2), 2),
            (Family::Theta(3), 1),
            (Family::Theta(4), 2),
            (Family::Complete4, 3),
            (Family::LoopBouquetNested(1), 1),
            (Family::LoopBouquetNested(2), 1),
            (Family::LoopBouquetNested(3), 1),
            (Family::Path(1), 1),
        ] {
            let g = generate(family).unwrap();
            assert_eq!(mu_trace(&g).unwrap(), mu, "{family:?}");
        }
        assert_eq!(mu_trace(&crate::plane_graph::PlaneGraph::empty()).unwrap(), 0);
    }

    #[test]
    fn square_cycle_strand_orbits_are_pinned() {
        let flat = medial_of(Family::Cycle(4));
        let orbits: Vec<Vec<usize>> = strand_orbits(&flat)
            .iter()
            .map(|o| o.iter().map(|d| d.index()).collect())
            .collect();
        assert_eq!(
            orbits,
            vec![
                vec![0, 15, 8, 7],
                vec![1, 6, 9, 14],
                vec![2, 5, 10, 13],
                vec![3, 12, 11, 4],
            ]
        );
        assert_eq!(curve_count(&flat), 2);
    }

    #[test]
    fn curve_count_is_additive_over_disjoint_union() {
        let a = generate(Family::Cycle(4)).unwrap();
        let b = generate(Family::Theta(2)).unwrap();
        let both = a.disjoint_union(&b);
        assert_eq!(
            mu_trace(&both).unwrap(),
            mu_trace(&a).unwrap() + mu_trace(&b).unwrap()
        );
    }

    #[test]
    fn removing_a_curl_frees_a_circle() {
        let flat = figure_eight();
        assert_eq!(curve_count(&flat), 1);
        let monogon = find_monogon(&flat).unwrap();
        let after = apply_move(&flat, MoveSpec::R1Remove { region: monogon }).unwrap();
        assert_eq!(after.crossings(), 0);
        assert_eq!(after.free_circles(), 1);
        assert_eq!(curve_count(&after), 1);
    }

    #[test]
    fn curl_add_remove_round_trips() {
        let flat = medial_of(Family::Path(2));
        for dart in 0..flat.dart_count() {
            let bigger = apply_move(&flat, MoveSpec::R1Add { dart }).unwrap();
            assert_eq!(bigger.crossings(), flat.crossings() + 1);
            assert_eq!(curve_count(&bigger), curve_count(&flat), "dart {dart}");
            // The freshly added curl pinches off the last corner of the new
            // crossing; the flat may hold other monogons of its own, so pick
            // that one, not just any.
            let monogon = bigger.region_of(FlatDart(bigger.dart_count() - 1));
            assert_eq!(bigger.regions()[monogon].darts.len(), 1);
            let back = apply_move(&bigger, MoveSpec::R1Remove { region: monogon }).unwrap();
            assert_eq!(back, flat, "dart {dart}");
        }
    }

    #[test]
    fn push_and_pull_round_trips_to_the_pinned_tables() {
        // Push the two outer arcs of the one-crossing lobe curve over each
        // other, then pull them apart again.
        let flat = medial_of(Family::Path(2));
        let pushed = apply_move(&flat, MoveSpec::R2Add { dart_a: 1, dart_b: 3 }).unwrap();
        assert_eq!(
            pushed.mate_table(),
            &[6, 5, 9, 8, 10, 1, 0, 11, 3, 2, 4, 7]
        );
        assert_eq!(curve_count(&pushed), 1);
        // The push split the old common region in two, which leaves several
        // two-dart regions; the one the push itself created sits between the
        // two new crossings, containing their corners 0 and 7.
        let bigon = pushed.region_of(FlatDart(4));
        assert_eq!(
            pushed.regions()[bigon]
                .darts
                .iter()
                .map(|d| d.index())
                .collect::<Vec<_>>(),
            vec![4, 11]
        );
        let back = apply_move(&pushed, MoveSpec::R2Remove { region: bigon }).unwrap();
        assert_eq!(back.mate_table(), flat.mate_table());
    }

    #[test]
    fn triangle_slide_on_the_three_cycle_medial() {
        // The triangle-in-triangle flat turns into the three-petal picture.
        let flat = medial_of(Family::Cycle(3));
        assert_eq!(
            flat.mate_table(),
            &[5, 8, 11, 6, 9, 0, 3, 10, 1, 4, 7, 2]
        );
        let inner = flat
            .regions()
            .iter()
            .find(|r| r.darts.len() == 3 && !flat.is_outer_region(r.id))
            .unwrap()
            .id;
        let slid = apply_move(&flat, MoveSpec::R3 { region: inner }).unwrap();
        assert_eq!(
            slid.mate_table(),
            &[1, 0, 7, 10, 5, 4, 11, 2, 9, 8, 3, 6]
        );
        assert_eq!(curve_count(&slid), 1);
        let monogons = slid
            .regions()
            .iter()
            .filter(|r| r.darts.len() == 1)
            .count();
        assert_eq!(monogons, 3);
        // Sliding the flipped triangle back restores the original flat.
        let tri = slid
            .regions()
            .iter()
            .find(|r| r.darts.len() == 3)
            .unwrap()
            .id;
        let back = apply_move(&slid, MoveSpec::R3 { region: tri }).unwrap();
        assert_eq!(back.mate_table(), flat.mate_table());
    }

    #[test]
    fn moves_preserve_curve_count_across_families() {
        for family in [
            Family::Cycle(5),
            Family::Grid(2, 3),
            Family::Wheel(4),
            Family::Complete4,
            Family::Theta(3),
        ] {
            let flat = medial_of(family);
            let mu = curve_count(&flat);
            // Exercise every monogon, bigon, and triangle the flat offers,
            // plus a curl and a push on fixed anchors.
            for r in 0..flat.region_count() {
                for mv in [MoveSpec::R1Remove { region: r }, MoveSpec::R2Remove { region: r }, MoveSpec::R3 { region: r }] {
                    if let Ok(after) = apply_move(&flat, mv) {
                        assert_eq!(curve_count(&after), mu, "{family:?} {mv:?}");
                    }
                }
            }
            let curled = apply_move(&flat, MoveSpec::R1Add { dart: 0 }).unwrap();
            assert_eq!(curve_count(&curled), mu, "{family:?} curl");
            let r0 = &flat.regions()[0];
            if r0.darts.len() >= 2 {
                let (a, b) = (r0.darts[0].index(), r0.darts[1].index());
                let pushed = apply_move(&flat, MoveSpec::R2Add { dart_a: a, dart_b: b }).unwrap();
                assert_eq!(curve_count(&pushed), mu, "{family:?} push");
            }
        }
    }

    #[test]
    fn pulling_apart_a_double_crossing_pair_frees_two_circles() {
        let flat = medial_of(Family::Theta(2));
        assert_eq!(curve_count(&flat), 2);
        let bigon = find_bigon(&flat).unwrap();
        let after = apply_move(&flat, MoveSpec::R2Remove { region: bigon }).unwrap();
        assert_eq!(after.crossings(), 0);
        assert_eq!(after.free_circles(), 2);
        assert_eq!(curve_count(&after), 2);
    }

    #[test]
    fn invalid_sites_are_rejected() {
        let flat = medial_of(Family::Cycle(4));
        // Region 1 is a four-sided region, not a monogon or bigon.
        assert_eq!(
            apply_move(&flat, MoveSpec::R1Remove { region: 1 }),
            Err(MoveError::NotAMonogon(1))
        );
        assert_eq!(
            apply_move(&flat, MoveSpec::R2Remove { region: 1 }),
            Err(MoveError::NotABigon(1))
        );
        assert_eq!(
            apply_move(&flat, MoveSpec::R1Remove { region: 99 }),
            Err(MoveError::RegionOutOfRange(99))
        );
        assert_eq!(
            apply_move(&flat, MoveSpec::R1Add { dart: 16 }),
            Err(MoveError::DartOutOfRange(16))
        );

        // The two-lobe curve: its two-dart region sits at a single crossing,
        // so it is no bigon site.
        let eight = figure_eight();
        let two_dart = eight
            .regions()
            .iter()
            .find(|r| r.darts.len() == 2)
            .unwrap()
            .id;
        assert_eq!(
            apply_move(&eight, MoveSpec::R2Remove { region: two_dart }),
            Err(MoveError::NotABigon(two_dart))
        );

        // Anchors in different regions cannot be pushed over each other.
        assert_eq!(
            apply_move(&flat, MoveSpec::R2Add { dart_a: 0, dart_b: 1 }),
            Err(MoveError::BadArcPair(0, 1))
        );
        assert_eq!(
            apply_move(&flat, MoveSpec::R2Add { dart_a: 0, dart_b: 0 }),
            Err(MoveError::BadArcPair(0, 0))
        );

        // A three-dart region that revisits a crossing is no triangle site.
        let pinched = Flat::from_parts(vec![1, 0, 7, 4, 3, 6, 5, 2], 0, &[]).unwrap();
        let tri = pinched
            .regions()
            .iter()
            .find(|r| r.darts.len() == 3)
            .unwrap()
            .id;
        assert_eq!(
            apply_move(&pinched, MoveSpec::R3 { region: tri }),
            Err(MoveError::NotATriangle(tri))
        );
    }

    #[test]
    fn simplify_reduces_standard_medials_completely() {
        for (family, mu) in [
            (Family::Cycle(3), 1),
            (Family::Cycle(4), 2),
            (Family::Cycle(6), 2),
            (Family::Path(4), 1),
            (Family::Theta(2), 2),
            (Family::Theta(3), 1),
            (Family::Grid(2, 2), 2),
            (Family::LoopBouquetNested(2), 1),
        ] {
            let flat = medial_of(family);
            let outcome = simplify(&flat, 1000);
            assert!(outcome.fully_reduced, "{family:?} stuck: {:?}", outcome.applied);
            assert_eq!(outcome.flat.crossings(), 0);
            assert_eq!(curve_count(&outcome.flat), mu, "{family:?}");
            assert_eq!(outcome.flat.free_circles(), mu, "{family:?}");
        }
    }

    #[test]
    fn simplify_cracks_the_tetrahedron_medial_with_triangle_slides() {
        // The tetrahedron medial is the octahedron flat: every region is a
        // triangle, so nothing reduces without sliding first.
        let flat = medial_of(Family::Complete4);
        assert!(find_monogon(&flat).is_none());
        assert!(find_bigon(&flat).is_none());
        let outcome = simplify(&flat, 1000);
        assert!(outcome.fully_reduced, "stuck after {:?}", outcome.applied);
        assert_eq!(curve_count(&outcome.flat), 3);
        assert!(outcome.applied.iter().any(|m| matches!(m, MoveSpec::R3 { .. })));
    }

    #[test]
    fn simplify_cracks_wheel_medials() {
        for n in [3, 4, 5, 6] {
            let flat = medial_of(Family::Wheel(n));
            let mu = curve_count(&flat);
            let outcome = simplify(&flat, 1000);
            assert!(outcome.fully_reduced, "wheel {n} stuck after {:?}", outcome.applied);
            assert_eq!(curve_count(&outcome.flat), mu, "wheel {n}");
        }
    }

    #[test]
    fn simplify_respects_its_budget() {
        let flat = medial_of(Family::Grid(3, 3));
        let outcome = simplify(&flat, 2);
        assert_eq!(outcome.applied.len(), 2);
        assert!(!outcome.fully_reduced);
        // A budget of zero changes nothing.
        let unchanged = simplify(&flat, 0);
        assert_eq!(unchanged.flat, flat);
        assert!(unchanged.applied.is_empty());
    }

    #[test]
    fn move_specs_serialize_by_name() {
        let mv = MoveSpec::R2Add { dart_a: 3, dart_b: 9 };
        let json = serde_json::to_string(&mv).unwrap();
        assert_eq!(json, r#"{"move":"r2_add","dart_a":3,"dart_b":9}"#);
        let back: MoveSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, mv);
    }

    #[test]
    fn outer_designation_survives_moves_where_its_boundary_survives() {
        let flat = medial_of(Family::Cycle(4));
        let outer_before = flat.outer_regions()[0];
        let outer_darts: Vec<usize> = flat.regions()[outer_before]
            .darts
            .iter()
            .map(|d| d.index())
            .collect();
        // A curl on an arc far from the outer boundary leaves its darts and
        // its designation alone.
        let curled = apply_move(&flat, MoveSpec::R1Add { dart: 0 }).unwrap();
        let outer_after = curled.outer_regions()[0];
        let after_darts: Vec<usize> = curled.regions()[outer_after]
            .darts
            .iter()
            .map(|d| d.index())
            .collect();
        for d in outer_darts {
            assert!(after_darts.contains(&d));
        }
    }
}
