//! Deletion–contraction evaluation of the Tutte polynomial at (-1, -1).
//!
//! That evaluation is `(-1)^{edges} * (-2)^{d}` per connected component,
//! where `d` is one less than the component's curve count, so the curve
//! count can be read off the magnitude and double-checked against the sign.
//! The recursion strips loops (factor -1, delete) and bridges (factor -1,
//! contract) eagerly and branches on a remaining edge otherwise, so its cost
//! is exponential only in the edges surviving the stripping.

use thiserror::Error;

use crate::plane_graph::{PgError, PlaneGraph};

/// Default ceiling on edges for the exponential evaluation.
pub const DEFAULT_TUTTE_EDGE_BUDGET: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TutteError {
    #[error(transparent)]
    Graph(#[from] PgError),
    #[error("{edges} edges exceed the evaluation budget of {budget}")]
    EdgeBudgetExceeded { edges: usize, budget: usize },
    #[error("component {component} evaluated to {value}, which no curve count produces")]
    InconsistentTutte { component: usize, value: i64 },
}

/// Is edge `i`'s pair still connected without it? Quadratic and fine at the
/// edge counts the budget admits.
fn is_bridge(edges: &[(usize, usize)], i: usize) -> bool {
    let (u, w) = edges[i];
    let mut stack = vec![u];
    let mut seen = std::collections::HashSet::from([u]);
    while let Some(x) = stack.pop() {
        if x == w {
            return false;
        }
        for (j, &(a, b)) in edges.iter().enumerate() {
            if j == i {
                continue;
            }
            for (p, q) in [(a, b), (b, a)] {
                if p == x && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
    }
    true
}

fn contract(edges: &mut Vec<(usize, usize)>, keep: usize, gone: usize) {
    for e in edges.iter_mut() {
        if e.0 == gone {
            e.0 = keep;
        }
        if e.1 == gone {
            e.1 = keep;
        }
    }
}

fn eval_minus1(mut edges: Vec<(usize, usize)>) -> i64 {
    let mut sign = 1i64;
    loop {
        let before = edges.len();
        edges.retain(|&(u, w)| {
            if u == w {
                sign = -sign;
                false
            } else {
                true
            }
        });
        if let Some(i) = (0..edges.len()).find(|&i| is_bridge(&edges, i)) {
            sign = -sign;
            let (u, w) = edges.remove(i);
            contract(&mut edges, u, w);
            continue;
        }
        if edges.len() == before {
            break;
        }
    }
    if edges.is_empty() {
        return sign;
    }
    let (u, w) = edges[0];
    let deleted = edges[1..].to_vec();
    let mut contracted = edges[1..].to_vec();
    contract(&mut contracted, u, w);
    sign * (eval_minus1(deleted) + eval_minus1(contracted))
}

/// Tutte polynomial of the underlying multigraph at (-1, -1). A pure graph
/// invariant: the embedding plays no role, and disconnected graphs multiply.
pub fn tutte_eval_minus1(g: &PlaneGraph, max_edges: usize) -> Result<i64, TutteError> {
    if g.edge_count() > max_edges {
        return Err(TutteError::EdgeBudgetExceeded {
            edges: g.edge_count(),
            budget: max_edges,
        });
    }
    let edges = (0..g.edge_count()).map(|e| g.endpoints(e)).collect();
    Ok(eval_minus1(edges))
}

/// Curve count extracted from per-component Tutte evaluations: magnitude
/// `2^{mu_c - 1}` and sign `(-1)^{edges_c + mu_c - 1}`, both verified.
pub fn mu_tutte(g: &PlaneGraph, max_edges: usize) -> Result<usize, TutteError> {
    g.check_planar()?;
    if g.edge_count() > max_edges {
        return Err(TutteError::EdgeBudgetExceeded {
            edges: g.edge_count(),
            budget: max_edges,
        });
    }
    let comps = g.components();
    let mut comp_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); comps.count];
    for e in 0..g.edge_count() {
        let (u, w) = g.endpoints(e);
        comp_edges[comps.vertex_component[u]].push((u, w));
    }
    let mut mu = 0;
    for (component, edges) in comp_edges.into_iter().enumerate() {
        let edge_count = edges.len();
        let value = eval_minus1(edges);
        let magnitude = value.unsigned_abs();
        if !magnitude.is_power_of_two() {
            return Err(TutteError::InconsistentTutte { component, value });
        }
        let mu_c = magnitude.trailing_zeros() as usize + 1;
        let expected = if (edge_count + mu_c - 1) % 2 == 0 { 1 } else { -1 } * magnitude as i64;
        if value != expected {
            return Err(TutteError::InconsistentTutte { component, value });
        }
        mu += mu_c;
    }
    Ok(mu)
}
