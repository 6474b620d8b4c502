//! Plane multigraphs encoded as rotation systems over darts.
//!
//! An edge contributes two darts (half-edges). Dart `2e` and `2e+1` are the
//! two ends of edge `e`, so `twin` is a single xor and the edge id a shift.
//! Each vertex stores its incident darts in counterclockwise order; that
//! cyclic data determines every face of the embedding, and a component is
//! planar exactly when `V - E + F = 2` holds for it.

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Half-edge id. Twin darts differ in the lowest bit; `d >> 1` is the edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dart(pub usize);

impl Dart {
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn edge(self) -> usize {
        self.0 >> 1
    }

    pub fn index(self) -> usize {
        self.0
    }

    /// True for the even dart of an edge (the `2e` end).
    pub fn is_forward(self) -> bool {
        self.0 & 1 == 0
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

/// One face of the embedding: the darts of its orbit in traversal order.
/// Face ids are canonical: faces are numbered by ascending smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub darts: Vec<Dart>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PgError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("dart {0} out of range")]
    DartOutOfRange(usize),
    #[error("dart {0} appears in more than one rotation slot")]
    DartRepeated(usize),
    #[error("dart {0} missing from every rotation")]
    DartMissing(usize),
    #[error("component {component} is not planar (Euler characteristic {characteristic})")]
    NonPlanar { component: usize, characteristic: i64 },
    #[error("invalid generator parameters: {0}")]
    InvalidFamily(String),
}

/// Connected components of a graph, tracked on vertices.
#[derive(Clone, Debug)]
pub struct Components {
    pub vertex_component: Vec<usize>,
    pub count: usize,
}

/// A plane multigraph: per-vertex counterclockwise rotations over darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<Dart>>,
    edge_count: usize,
    vertex_of: Vec<usize>, // dart index -> vertex
    rot_pos: Vec<usize>,   // dart index -> slot within its vertex rotation
    outer_face_hint: Option<Dart>,
}

impl PlaneGraph {
    /// Builds a graph from explicit rotations. Every dart in `0..2*edge_count`
    /// must occur exactly once across all rotations.
    pub fn from_rotations(
        rotations: Vec<Vec<usize>>,
        edge_count: usize,
        outer_face_hint: Option<usize>,
    ) -> Result<Self, PgError> {
        let dart_count = 2 * edge_count;
        let mut vertex_of = vec![usize::MAX; dart_count];
        let mut rot_pos = vec![0usize; dart_count];
        let mut seen = 0usize;
        let rotations: Vec<Vec<Dart>> = rotations
            .into_iter()
            .map(|r| r.into_iter().map(Dart).collect())
            .collect();
        for (v, rot) in rotations.iter().enumerate() {
            for (pos, &d) in rot.iter().enumerate() {
                if d.0 >= dart_count {
                    return Err(PgError::DartOutOfRange(d.0));
                }
                if vertex_of[d.0] != usize::MAX {
                    return Err(PgError::DartRepeated(d.0));
                }
                vertex_of[d.0] = v;
                rot_pos[d.0] = pos;
                seen += 1;
            }
        }
        if seen != dart_count {
            let missing = vertex_of.iter().position(|&v| v == usize::MAX).unwrap();
            return Err(PgError::DartMissing(missing));
        }
        if let Some(h) = outer_face_hint {
            if h >= dart_count {
                return Err(PgError::DartOutOfRange(h));
            }
        }
        Ok(PlaneGraph {
            rotations,
            edge_count,
            vertex_of,
            rot_pos,
            outer_face_hint: outer_face_hint.map(Dart),
        })
    }

    /// The graph with no vertices and no edges.
    pub fn empty() -> Self {
        PlaneGraph::from_rotations(Vec::new(), 0, None).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d.0]
    }

    /// Endpoints of edge `e` as `(vertex_of(2e), vertex_of(2e+1))`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.vertex_of[2 * e], self.vertex_of[2 * e + 1])
    }

    pub fn outer_face_hint(&self) -> Option<Dart> {
        self.outer_face_hint
    }

    pub fn with_outer_face_hint(mut self, hint: Option<usize>) -> Result<Self, PgError> {
        if let Some(h) = hint {
            if h >= self.dart_count() {
                return Err(PgError::DartOutOfRange(h));
            }
        }
        self.outer_face_hint = hint.map(Dart);
        Ok(self)
    }

    /// Next dart counterclockwise around the vertex of `d`.
    pub fn rot_next(&self, d: Dart) -> Dart {
        let v = self.vertex_of[d.0];
        let rot = &self.rotations[v];
        rot[(self.rot_pos[d.0] + 1) % rot.len()]
    }

    /// Previous dart (clockwise neighbor) around the vertex of `d`.
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let v = self.vertex_of[d.0];
        let rot = &self.rotations[v];
        rot[(self.rot_pos[d.0] + rot.len() - 1) % rot.len()]
    }

    /// Successor of `d` along its face: the dart after `twin(d)` in the
    /// rotation at `twin(d)`'s vertex. Orbits of this map are the faces;
    /// the face traced from `d` lies to the right of `d` pointing outward.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(d.twin())
    }

    /// All faces as orbits of `face_next`, numbered by ascending minimum dart.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_with_map().0
    }

    /// Faces plus the dart -> face-id map.
    pub fn faces_with_map(&self) -> (Vec<Face>, Vec<usize>) {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut orbit = Vec::new();
            let mut d = Dart(start);
            loop {
                face_of[d.0] = id;
                orbit.push(d);
                d = self.face_next(d);
                if d.0 == start {
                    break;
                }
            }
            faces.push(Face { id, darts: orbit });
        }
        (faces, face_of)
    }

    /// Connected components over vertices (isolated vertices count).
    pub fn components(&self) -> Components {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut queue = VecDeque::from([start]);
            comp[start] = id;
            while let Some(v) = queue.pop_front() {
                for &d in &self.rotations[v] {
                    let w = self.vertex_of[d.twin().0];
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push_back(w);
                    }
                }
            }
        }
        Components {
            vertex_component: comp,
            count,
        }
    }

    /// Verifies `V - E + F = 2` on every connected component. Components
    /// without edges are trivially planar; everything else must close up
    /// into a sphere.
    pub fn check_planar(&self) -> Result<(), PgError> {
        let comps = self.components();
        let (faces, face_of) = self.faces_with_map();
        let mut v_count = vec![0i64; comps.count];
        let mut e_count = vec![0i64; comps.count];
        let mut f_seen = vec![false; faces.len()];
        let mut f_count = vec![0i64; comps.count];
        for (v, &c) in comps.vertex_component.iter().enumerate() {
            v_count[c] += 1;
            e_count[c] += self.degree(v) as i64; // darts; halve later
        }
        for d in 0..self.dart_count() {
            let f = face_of[d];
            if !f_seen[f] {
                f_seen[f] = true;
                f_count[comps.vertex_component[self.vertex_of[d]]] += 1;
            }
        }
        for c in 0..comps.count {
            let e = e_count[c] / 2;
            if e == 0 {
                continue; // a lone vertex is planar
            }
            let characteristic = v_count[c] - e + f_count[c];
            if characteristic != 2 {
                return Err(PgError::NonPlanar {
                    component: c,
                    characteristic,
                });
            }
        }
        Ok(())
    }

    /// For each component with at least one edge, the face id of its
    /// unbounded face: the hint's face where the hint applies, otherwise the
    /// face containing the component's smallest dart. Components without
    /// edges carry no entry (they have no dart faces).
    pub fn outer_face_ids(&self) -> Vec<Option<usize>> {
        let comps = self.components();
        let (_, face_of) = self.faces_with_map();
        let mut outer: Vec<Option<usize>> = vec![None; comps.count];
        // Smallest-dart rule first, then let the hint override its component.
        for d in (0..self.dart_count()).rev() {
            let c = comps.vertex_component[self.vertex_of[d]];
            outer[c] = Some(face_of[d]);
        }
        if let Some(h) = self.outer_face_hint {
            let c = comps.vertex_component[self.vertex_of[h.0]];
            outer[c] = Some(face_of[h.0]);
        }
        outer
    }

    /// The mirror embedding: every rotation reversed. Same abstract graph,
    /// generally a different rotation system and face structure.
    pub fn mirror(&self) -> PlaneGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().map(|d| d.0).collect())
            .collect();
        PlaneGraph::from_rotations(rotations, self.edge_count, self.outer_face_hint.map(|d| d.0))
            .expect("mirror of a valid graph is valid")
    }

    /// Disjoint union; vertices and darts of `other` are shifted up.
    /// Keeps `self`'s outer-face hint if present, otherwise `other`'s.
    pub fn disjoint_union(&self, other: &PlaneGraph) -> PlaneGraph {
        let dart_shift = self.dart_count();
        let mut rotations: Vec<Vec<usize>> = self
            .rotations
            .iter()
            .map(|r| r.iter().map(|d| d.0).collect())
            .collect();
        rotations.extend(
            other
                .rotations
                .iter()
                .map(|r| r.iter().map(|d| d.0 + dart_shift).collect::<Vec<_>>()),
        );
        let hint = self
            .outer_face_hint
            .map(|d| d.0)
            .or(other.outer_face_hint.map(|d| d.0 + dart_shift));
        PlaneGraph::from_rotations(rotations, self.edge_count + other.edge_count, hint)
            .expect("union of valid graphs is valid")
    }

    /// Parses the `pg v1` text format. See `to_pg_string` for the layout.
    pub fn parse(text: &str) -> Result<Self, PgError> {
        enum Stage {
            Header,
            Edges,
            Vertices,
            Outer,
        }
        let mut stage = Stage::Header;
        let mut edge_count = 0usize;
        let mut rotations: Vec<Vec<usize>> = Vec::new();
        let mut outer: Option<usize> = None;
        let malformed = |line: usize, msg: &str| PgError::Malformed {
            line,
            msg: msg.to_string(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match stage {
                Stage::Header => {
                    if tokens != ["pg", "v1"] {
                        return Err(malformed(line_no, "expected header `pg v1`"));
                    }
                    stage = Stage::Edges;
                }
                Stage::Edges => {
                    if tokens.len() != 2 || tokens[0] != "edges" {
                        return Err(malformed(line_no, "expected `edges <count>`"));
                    }
                    edge_count = tokens[1]
                        .parse()
                        .map_err(|_| malformed(line_no, "edge count is not a number"))?;
                    stage = Stage::Vertices;
                }
                Stage::Vertices | Stage::Outer => {
                    if tokens[0] == "v" {
                        if !matches!(stage, Stage::Vertices) {
                            return Err(malformed(line_no, "vertex line after `outer`"));
                        }
                        if tokens.len() < 3 || tokens[2] != ":" {
                            return Err(malformed(line_no, "expected `v <id> : <darts...>`"));
                        }
                        let id: usize = tokens[1]
                            .parse()
                            .map_err(|_| malformed(line_no, "vertex id is not a number"))?;
                        if id != rotations.len() {
                            return Err(malformed(
                                line_no,
                                &format!("vertex ids must be consecutive; expected {}", rotations.len()),
                            ));
                        }
                        let darts = tokens[3..]
                            .iter()
                            .map(|t| t.parse::<usize>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| malformed(line_no, "dart is not a number"))?;
                        rotations.push(darts);
                    } else if tokens[0] == "outer" {
                        if tokens.len() != 2 {
                            return Err(malformed(line_no, "expected `outer <dart>`"));
                        }
                        if outer.is_some() {
                            return Err(malformed(line_no, "duplicate `outer` line"));
                        }
                        outer = Some(
                            tokens[1]
                                .parse()
                                .map_err(|_| malformed(line_no, "outer dart is not a number"))?,
                        );
                        stage = Stage::Outer;
                    } else {
                        return Err(malformed(line_no, "expected `v`, `outer`, or end of file"));
                    }
                }
            }
        }
        if matches!(stage, Stage::Header) {
            return Err(malformed(1, "empty input; expected header `pg v1`"));
        }
        if matches!(stage, Stage::Edges) {
            return Err(malformed(1, "missing `edges` line"));
        }
        PlaneGraph::from_rotations(rotations, edge_count, outer)
    }

    /// Canonical text serialization; `parse` of the output reproduces the
    /// graph dart for dart.
    pub fn to_pg_string(&self) -> String {
        let mut out = String::from("pg v1\n");
        out.push_str(&format!("edges {}\n", self.edge_count));
        for (v, rot) in self.rotations.iter().enumerate() {
            out.push_str(&format!("v {} :", v));
            for d in rot {
                out.push_str(&format!(" {}", d.0));
            }
            out.push('\n');
        }
        if let Some(h) = self.outer_face_hint {
            out.push_str(&format!("outer {}\n", h.0));
        }
        out
    }
}

/// Built-in graph families. All outputs are valid plane embeddings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Cycle on `n` vertices (`n = 1` is a single loop, `n = 2` a double edge).
    Cycle(usize),
    /// Path on `n` vertices (`n = 1` is an isolated vertex).
    Path(usize),
    /// `rows x cols` rectangular grid.
    Grid(usize, usize),
    /// Hub joined to an `n`-cycle rim.
    Wheel(usize),
    /// Two vertices joined by `k` parallel edges.
    Theta(usize),
    /// The tetrahedron graph in its planar embedding.
    Complete4,
    /// `k` loops at a single vertex, sides nested consecutively.
    LoopBouquetNested(usize),
    /// Random connected spanning subgraph of a grid, reproducible by seed.
    RandomGridSubgraph { rows: usize, cols: usize, seed: u64 },
}

pub fn generate(family: Family) -> Result<PlaneGraph, PgError> {
    match family {
        Family::Cycle(n) => gen_cycle(n),
        Family::Path(n) => gen_path(n),
        Family::Grid(r, c) => gen_grid(r, c),
        Family::Wheel(n) => gen_wheel(n),
        Family::Theta(k) => gen_theta(k),
        Family::Complete4 => gen_complete4(),
        Family::LoopBouquetNested(k) => gen_bouquet(k),
        Family::RandomGridSubgraph { rows, cols, seed } => gen_random_grid_subgraph(rows, cols, seed),
    }
}

/// Families in word form: `cycle N | path N | grid R C | wheel N | theta K |
/// bouquet K | complete4 | random-grid R C`.
pub const FAMILY_SPEC_USAGE: &str =
    "cycle N | path N | grid R C | wheel N | theta K | bouquet K | complete4 | random-grid R C";

impl Family {
    /// Parses the word form above into a family and a display name.
    /// `seed` feeds `random-grid` (and lands in its name).
    pub fn parse_spec(tokens: &[&str], seed: u64) -> Result<(String, Family), PgError> {
        let need = |i: usize| -> Result<usize, PgError> {
            let t = tokens.get(i).ok_or_else(|| {
                PgError::InvalidFamily(format!("missing parameter {i} (expected {FAMILY_SPEC_USAGE})"))
            })?;
            t.parse()
                .map_err(|_| PgError::InvalidFamily(format!("`{t}` is not a number")))
        };
        let head = tokens
            .first()
            .ok_or_else(|| PgError::InvalidFamily(format!("expected {FAMILY_SPEC_USAGE}")))?;
        Ok(match *head {
            "cycle" => (format!("cycle:{}", need(1)?), Family::Cycle(need(1)?)),
            "path" => (format!("path:{}", need(1)?), Family::Path(need(1)?)),
            "grid" => (
                format!("grid:{}x{}", need(1)?, need(2)?),
                Family::Grid(need(1)?, need(2)?),
            ),
            "wheel" => (format!("wheel:{}", need(1)?), Family::Wheel(need(1)?)),
            "theta" => (format!("theta:{}", need(1)?), Family::Theta(need(1)?)),
            "bouquet" => (
                format!("bouquet:{}", need(1)?),
                Family::LoopBouquetNested(need(1)?),
            ),
            "complete4" => ("complete4".into(), Family::Complete4),
            "random-grid" => (
                format!("random-grid:{}x{}:{seed}", need(1)?, need(2)?),
                Family::RandomGridSubgraph {
                    rows: need(1)?,
                    cols: need(2)?,
                    seed,
                },
            ),
            other => {
                return Err(PgError::InvalidFamily(format!(
                    "unknown family `{other}` (expected {FAMILY_SPEC_USAGE})"
                )))
            }
        })
    }
}

fn gen_cycle(n: usize) -> Result<PlaneGraph, PgError> {
    if n == 0 {
        return Err(PgError::InvalidFamily("cycle needs n >= 1".into()));
    }
    if n == 1 {
        // One vertex, one loop.
        return PlaneGraph::from_rotations(vec![vec![0, 1]], 1, None);
    }
    // Edge i runs from vertex i to vertex i+1 mod n.
    let rotations = (0..n)
        .map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1])
        .collect();
    PlaneGraph::from_rotations(rotations, n, None)
}

fn gen_path(n: usize) -> Result<PlaneGraph, PgError> {
    if n == 0 {
        return Err(PgError::InvalidFamily("path needs n >= 1".into()));
    }
    let mut rotations = vec![Vec::new(); n];
    for i in 0..n - 1 {
        rotations[i].push(2 * i);
        rotations[i + 1].push(2 * i + 1);
    }
    PlaneGraph::from_rotations(rotations, n.saturating_sub(1), None)
}

fn gen_grid(rows: usize, cols: usize) -> Result<PlaneGraph, PgError> {
    if rows == 0 || cols == 0 {
        return Err(PgError::InvalidFamily("grid needs rows, cols >= 1".into()));
    }
    let (edges, horiz, vert) = grid_edges(rows, cols);
    let rotations = grid_rotations(rows, cols, &horiz, &vert, |_| true);
    PlaneGraph::from_rotations(rotations, edges.len(), None)
}

/// Grid edge enumeration shared by `Grid` and `RandomGridSubgraph`:
/// row-major per cell, horizontal edge before vertical edge.
/// Returns (edge endpoint list, horizontal edge ids, vertical edge ids).
type GridEdges = (Vec<(usize, usize)>, Vec<Option<usize>>, Vec<Option<usize>>);

fn grid_edges(rows: usize, cols: usize) -> GridEdges {
    let at = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    let mut horiz = vec![None; rows * cols];
    let mut vert = vec![None; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                horiz[at(i, j)] = Some(edges.len());
                edges.push((at(i, j), at(i, j + 1)));
            }
            if i + 1 < rows {
                vert[at(i, j)] = Some(edges.len());
                edges.push((at(i, j), at(i + 1, j)));
            }
        }
    }
    (edges, horiz, vert)
}

/// Counterclockwise rotation at each grid vertex: right, up, left, down
/// (rows grow downward). `keep` filters edges by original grid edge id;
/// kept edges must be renumbered by the caller via the returned dart ids,
/// so this emits darts under the original numbering.
fn grid_rotations(
    rows: usize,
    cols: usize,
    horiz: &[Option<usize>],
    vert: &[Option<usize>],
    keep: impl Fn(usize) -> bool,
) -> Vec<Vec<usize>> {
    let at = |i: usize, j: usize| i * cols + j;
    let mut rotations = vec![Vec::new(); rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            let mut rot = Vec::new();
            // right: this cell's horizontal edge, near end
            if let Some(e) = horiz[at(i, j)].filter(|&e| keep(e)) {
                rot.push(2 * e);
            }
            // up: the cell above's vertical edge, far end
            if i > 0 {
                if let Some(e) = vert[at(i - 1, j)].filter(|&e| keep(e)) {
                    rot.push(2 * e + 1);
                }
            }
            // left: the cell to the left's horizontal edge, far end
            if j > 0 {
                if let Some(e) = horiz[at(i, j - 1)].filter(|&e| keep(e)) {
                    rot.push(2 * e + 1);
                }
            }
            // down: this cell's vertical edge, near end
            if let Some(e) = vert[at(i, j)].filter(|&e| keep(e)) {
                rot.push(2 * e);
            }
            rotations[at(i, j)] = rot;
        }
    }
    rotations
}

fn gen_wheel(n: usize) -> Result<PlaneGraph, PgError> {
    if n < 3 {
        return Err(PgError::InvalidFamily("wheel needs n >= 3 rim vertices".into()));
    }
    // Rim edges 0..n (edge i joins rim i to rim i+1), spokes n..2n
    // (edge n+i joins rim i to the hub, vertex n).
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let next_rim = 2 * i;
        let spoke = 2 * (n + i);
        let prev_rim = 2 * ((i + n - 1) % n) + 1;
        rotations.push(vec![next_rim, spoke, prev_rim]);
    }
    rotations.push((0..n).map(|i| 2 * (n + i) + 1).collect());
    PlaneGraph::from_rotations(rotations, 2 * n, None)
}

fn gen_theta(k: usize) -> Result<PlaneGraph, PgError> {
    if k < 2 {
        return Err(PgError::InvalidFamily("theta needs k >= 2 parallel edges".into()));
    }
    // Parallel strands: counterclockwise order at one endpoint reverses at
    // the other, which is what keeps the embedding planar.
    let u: Vec<usize> = (0..k).map(|i| 2 * i).collect();
    let w: Vec<usize> = (0..k).rev().map(|i| 2 * i + 1).collect();
    PlaneGraph::from_rotations(vec![u, w], k, None)
}

fn gen_complete4() -> Result<PlaneGraph, PgError> {
    // Vertices 0,1,2 as an outer triangle, 3 in the middle.
    // Edges: 0={0,1} 1={1,2} 2={2,0} 3={0,3} 4={1,3} 5={2,3}.
    let rotations = vec![
        vec![0, 6, 5],
        vec![2, 8, 1],
        vec![4, 10, 3],
        vec![11, 7, 9],
    ];
    PlaneGraph::from_rotations(rotations, 6, None)
}

fn gen_bouquet(k: usize) -> Result<PlaneGraph, PgError> {
    if k == 0 {
        return Err(PgError::InvalidFamily("loop bouquet needs k >= 1".into()));
    }
    PlaneGraph::from_rotations(vec![(0..2 * k).collect()], k, None)
}

fn gen_random_grid_subgraph(rows: usize, cols: usize, seed: u64) -> Result<PlaneGraph, PgError> {
    if rows == 0 || cols == 0 {
        return Err(PgError::InvalidFamily("grid needs rows, cols >= 1".into()));
    }
    let (edges, horiz, vert) = grid_edges(rows, cols);
    let n = rows * cols;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Random spanning tree by shuffled Kruskal, then a sprinkle of extras.
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(&mut rng);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut keep = vec![false; edges.len()];
    let mut rest = Vec::new();
    for &e in &order {
        let (a, b) = edges[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            keep[e] = true;
        } else {
            rest.push(e);
        }
    }
    for e in rest {
        if rng.random_bool(0.35) {
            keep[e] = true;
        }
    }

    // Renumber kept edges in original grid order so dart ids stay dense.
    let mut new_id = vec![usize::MAX; edges.len()];
    let mut next = 0;
    for e in 0..edges.len() {
        if keep[e] {
            new_id[e] = next;
            next += 1;
        }
    }
    let rotations = grid_rotations(rows, cols, &horiz, &vert, |e| keep[e])
        .into_iter()
        .map(|rot| {
            rot.into_iter()
                .map(|d| 2 * new_id[d / 2] + (d & 1))
                .collect()
        })
        .collect();
    PlaneGraph::from_rotations(rotations, next, None)
}
