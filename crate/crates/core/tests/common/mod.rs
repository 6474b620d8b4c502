//! Helpers shared by the integration suites: alternate planar embeddings of
//! the same abstract graph, and a generator of random valid local moves.
#![allow(dead_code)]

use rand::Rng;

use mulink::{apply_move, Flat, MoveSpec, PlaneGraph};

/// Theta graph whose `k` parallel edges cross the strip in the order given:
/// one endpoint reads `order`, the other reads it reversed. Every
/// permutation yields a planar embedding of the same abstract multigraph.
pub fn theta_with_order(order: &[usize]) -> PlaneGraph {
    let k = order.len();
    assert!(k >= 2);
    let top: Vec<usize> = order.iter().map(|&e| 2 * e).collect();
    let bottom: Vec<usize> = order.iter().rev().map(|&e| 2 * e + 1).collect();
    PlaneGraph::from_rotations(vec![top, bottom], k, None).unwrap()
}

/// Bouquet of `k` loops placed side by side, each bounding its own disk
/// (the generator's bouquet nests them instead).
pub fn bouquet_flower(k: usize) -> PlaneGraph {
    PlaneGraph::from_rotations(vec![(0..2 * k).collect()], k, None).unwrap()
}

fn cyclically_equal(a: &[mulink::Dart], b: &[mulink::Dart]) -> bool {
    a.len() == b.len()
        && (a.is_empty()
            || (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i])))
}

/// Same labeled rotation system up to the (irrelevant) starting dart of each
/// vertex's cyclic order.
pub fn same_embedding(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && (0..a.vertex_count()).all(|v| cyclically_equal(a.rotation(v), b.rotation(v)))
}

/// Pick one valid move uniformly-ish at random and apply it. Removal and
/// slide sites are enumerated exactly; growth moves are sampled. `None`
/// means the flat admits no move at all (no crossings to work with).
pub fn random_move<R: Rng>(flat: &Flat, rng: &mut R, allow_growth: bool) -> Option<(MoveSpec, Flat)> {
    let mut candidates: Vec<MoveSpec> = Vec::new();
    for r in flat.regions() {
        let mut crossings: Vec<usize> = r.darts.iter().map(|d| d.crossing()).collect();
        crossings.sort_unstable();
        crossings.dedup();
        match (r.darts.len(), crossings.len()) {
            (1, _) => candidates.push(MoveSpec::R1Remove { region: r.id }),
            (2, 2) => candidates.push(MoveSpec::R2Remove { region: r.id }),
            (3, 3) => candidates.push(MoveSpec::R3 { region: r.id }),
            _ => {}
        }
    }
    if allow_growth && flat.dart_count() > 0 {
        for _ in 0..3 {
            candidates.push(MoveSpec::R1Add {
                dart: rng.random_range(0..flat.dart_count()),
            });
        }
        let regions = flat.regions();
        for _ in 0..3 {
            let r = &regions[rng.random_range(0..regions.len())];
            if r.darts.len() >= 2 {
                let i = rng.random_range(0..r.darts.len());
                let j = (i + 1 + rng.random_range(0..r.darts.len() - 1)) % r.darts.len();
                candidates.push(MoveSpec::R2Add {
                    dart_a: r.darts[i].index(),
                    dart_b: r.darts[j].index(),
                });
            }
        }
    }
    if candidates.is_empty() {
        return None;
    }
    let mv = candidates[rng.random_range(0..candidates.len())];
    let next = apply_move(flat, mv).expect("enumerated move sites are valid");
    Some((mv, next))
}
