//! Vertex Cover → Line Point Cover → Point Line Cover.
//!
//! The graph is doubled (every vertex gets a twin with the same
//! neighborhood), its vertices are placed on a grid point set in special
//! position, and each edge becomes the line through its two endpoints. A
//! cover of the doubled graph by `2k` vertices is then exactly a set of
//! `2k` points hitting all edge lines.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{dualize_lpc, LpcInstance, SlopeIntercept};
use crate::error::{Error, Result};
use crate::geometry::{intersect, line_through, orientation, Line, Orientation, Point, Rational};
use crate::plc::PlcInstance;

/// Largest vertex count accepted by [`vc_brute_force`].
pub const VC_BRUTE_FORCE_CAP: usize = 16;

/// Largest point count accepted by [`verify_special_properties`].
pub const SPECIAL_VERIFY_CAP: usize = 12;

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Loops and out-of-range endpoints are rejected;
    /// repeated edges are not allowed either.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Infeasible(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Infeasible(format!(
                "edge {{{u}, {v}}} outside vertex range 0..{}",
                self.n
            )));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::Infeasible(format!("repeated edge {{{u}, {v}}}")));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    pub graph: Graph,
    pub k: usize,
}

impl VcInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self> {
        if k > graph.n() {
            return Err(Error::Infeasible(format!(
                "budget {k} exceeds vertex count {}",
                graph.n()
            )));
        }
        Ok(VcInstance { graph, k })
    }
}

/// Two copies of `g`, with `v` and `v + n` both adjacent to both copies of
/// every neighbor of `v`. Each edge turns into four.
pub fn double_graph(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(2 * n);
    for (u, v) in g.edges() {
        for (a, b) in [(u, v), (u, v + n), (u + n, v), (u + n, v + n)] {
            out.edges.insert((a.min(b), a.max(b)));
        }
    }
    out
}

pub fn vc_brute_force(inst: &VcInstance) -> Result<bool> {
    let n = inst.graph.n();
    if n > VC_BRUTE_FORCE_CAP {
        return Err(Error::cap(
            "vertex-cover vertex count",
            VC_BRUTE_FORCE_CAP,
            n,
        ));
    }
    let edges: Vec<u32> = inst
        .graph
        .edges()
        .map(|(u, v)| (1u32 << u) | (1u32 << v))
        .collect();
    Ok((0u32..1 << n)
        .filter(|s| s.count_ones() as usize <= inst.k)
        .any(|s| edges.iter().all(|e| e & s != 0)))
}

/// `m` integer points in `[0, m⁶)²` such that
/// - no three are collinear,
/// - no two lines through pairs of them are parallel,
/// - no three such lines meet at a point outside the set,
/// - no two share an x-coordinate (so no pair-line is vertical).
///
/// Points are added one at a time by seeded uniform sampling of the grid
/// until a candidate keeps all four properties.
pub fn special_point_set(m: usize, seed: u64) -> Vec<Point> {
    let side = grid_side(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(m);
    while points.len() < m {
        let x = rng.gen_range(0..side);
        let y = rng.gen_range(0..side);
        let candidate = Point::from_ints(x, y);
        points.push(candidate);
        if !has_special_properties(&points) {
            points.pop();
        }
    }
    points
}

/// Side length `m⁶` of the sampling grid.
pub fn grid_side(m: usize) -> i64 {
    (m.max(1) as i64).pow(6)
}

pub fn verify_special_properties(points: &[Point]) -> Result<bool> {
    if points.len() > SPECIAL_VERIFY_CAP {
        return Err(Error::cap(
            "special-position point count",
            SPECIAL_VERIFY_CAP,
            points.len(),
        ));
    }
    Ok(has_special_properties(points))
}

fn has_special_properties(points: &[Point]) -> bool {
    let n = points.len();

    let xs: BTreeSet<&Rational> = points.iter().map(|p| &p.x).collect();
    if xs.len() != n {
        return false;
    }

    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&points[i], &points[j], &points[k]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }

    let mut lines: Vec<Line> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            lines.push(line_through(&points[i], &points[j]).expect("distinct x"));
        }
    }

    let members: BTreeSet<&Point> = points.iter().collect();
    // An outside point hit by two different line pairs lies on three or
    // more lines.
    let mut outside: BTreeSet<Point> = BTreeSet::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            match intersect(&lines[a], &lines[b]).expect("no repeated lines in general position") {
                None => return false,
                Some(p) => {
                    if !members.contains(&p) && !outside.insert(p) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The reduction with an explicit placement `points[v]` for each vertex of
/// the doubled graph.
pub fn vc_to_lpc_with_points(inst: &VcInstance, points: &[Point]) -> Result<LpcInstance> {
    let doubled = double_graph(&inst.graph);
    if points.len() < doubled.n() {
        return Err(Error::Infeasible(format!(
            "{} points for {} vertices",
            points.len(),
            doubled.n()
        )));
    }
    let mut lines = Vec::with_capacity(doubled.edge_count());
    for (u, v) in doubled.edges() {
        let line = line_through(&points[u], &points[v])?;
        let (m, c) = line
            .slope_intercept()
            .ok_or_else(|| Error::Infeasible(format!("vertical edge line {line}")))?;
        lines.push(SlopeIntercept::new(m, c));
    }
    LpcInstance::new(lines, 2 * inst.k)
}

/// Maps `(G, k)` to an equivalent Line Point Cover instance with budget
/// `2k`. Vertex `v` of the doubled graph sits at the `v`-th point of
/// `special_point_set(2n, seed)`.
pub fn vc_to_lpc(inst: &VcInstance, seed: u64) -> Result<LpcInstance> {
    if inst.graph.edge_count() == 0 {
        return LpcInstance::new(Vec::new(), 2 * inst.k);
    }
    let points = special_point_set(2 * inst.graph.n(), seed);
    vc_to_lpc_with_points(inst, &points)
}

pub fn vc_to_plc(inst: &VcInstance, seed: u64) -> Result<PlcInstance> {
    dualize_lpc(&vc_to_lpc(inst, seed)?)
}

/// Exact integer check that `p` lies in `[0, side)²`.
pub fn in_grid(p: &Point, side: i64) -> bool {
    let bound = BigInt::from(side);
    [&p.x, &p.y]
        .iter()
        .all(|c| c.is_integer() && c.to_integer() >= BigInt::from(0) && c.to_integer() < bound)
}
