//! Simple undirected graphs with BFS all-pairs distances.
//!
//! Every set predicate and solver in this crate reads distances through the
//! [`Metric`] trait, so closed-form distance oracles (see
//! [`crate::families`]) and explicit graphs are interchangeable.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Marker for "no path" in distance matrices.
pub const UNREACHABLE: u32 = u32::MAX;

const UNREACHABLE_CELL: u16 = u16::MAX;

/// Read-only access to the shortest-path metric of a graph.
pub trait Metric: Sync {
    fn order(&self) -> usize;

    /// Hop distance between `u` and `v`, or [`UNREACHABLE`].
    fn dist(&self, u: VertexId, v: VertexId) -> u32;

    fn is_connected(&self) -> bool;
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// The distance matrix is computed on first use and cached.
#[derive(Debug)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    dist: OnceLock<Vec<u16>>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Self {
            adjacency: self.adjacency.clone(),
            dist: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        // u16 cells must hold every finite distance.
        if n >= UNREACHABLE_CELL as usize {
            return Err(Error::CapExceeded {
                what: "vertex count",
                value: n as u128,
                cap: UNREACHABLE_CELL as u128 - 1,
            });
        }
        Ok(Self {
            adjacency,
            dist: OnceLock::new(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edge_list(n, &edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Single-source BFS hop counts; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, source: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn matrix(&self) -> &[u16] {
        self.dist.get_or_init(|| {
            let n = self.vertex_count();
            let mut cells = vec![UNREACHABLE_CELL; n * n];
            for s in 0..n {
                let row = &mut cells[s * n..(s + 1) * n];
                for (cell, d) in row.iter_mut().zip(self.bfs(s)) {
                    if d != UNREACHABLE {
                        *cell = d as u16;
                    }
                }
            }
            cells
        })
    }

    /// Full distance matrix, row-major.
    pub fn all_pairs_distances(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        (0..n)
            .map(|u| (0..n).map(|v| self.dist(u, v)).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Cartesian product `self □ other`; vertex `(a, b)` gets id `a * |V(other)| + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.vertex_count();
        let mut edges = Vec::new();
        for a in 0..self.vertex_count() {
            for (b1, b2) in other.edges() {
                edges.push((a * m + b1, a * m + b2));
            }
        }
        for (a1, a2) in self.edges() {
            for b in 0..m {
                edges.push((a1 * m + b, a2 * m + b));
            }
        }
        Graph::from_edge_list(self.vertex_count() * m, &edges)
            .expect("product of valid graphs is valid")
    }

    /// Parses the `n m` header + `u v` lines format; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        let nums = parse_ints(hline, header, 2)?;
        let (n, m) = (nums[0], nums[1]);
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let uv = parse_ints(line, l, 2)?;
            edges.push((uv[0], uv[1]));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.vertex_count(), edges.len());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn parse_ints(line: usize, text: &str, expected: usize) -> Result<Vec<usize>> {
    let vals: Vec<usize> = text
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("not a nonnegative integer: {t:?}"),
            })
        })
        .collect::<Result<_>>()?;
    if vals.len() != expected {
        return Err(Error::Parse {
            line,
            msg: format!("expected {expected} integers, found {}", vals.len()),
        });
    }
    Ok(vals)
}

impl Metric for Graph {
    fn order(&self) -> usize {
        self.vertex_count()
    }

    fn dist(&self, u: VertexId, v: VertexId) -> u32 {
        let n = self.vertex_count();
        match self.matrix()[u * n + v] {
            UNREACHABLE_CELL => UNREACHABLE,
            d => d as u32,
        }
    }

    fn is_connected(&self) -> bool {
        Graph::is_connected(self)
    }
}

impl<M: Metric + ?Sized> Metric for &M {
    fn order(&self) -> usize {
        (**self).order()
    }
    fn dist(&self, u: VertexId, v: VertexId) -> u32 {
        (**self).dist(u, v)
    }
    fn is_connected(&self) -> bool {
        (**self).is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.all_pairs_distances(), vec![vec![0, 1], vec![1, 0]]);
        assert!(g.is_connected());
    }

    #[test]
    fn four_cycle_antipode() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.dist(0, 2), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn path_and_disconnected() {
        assert_eq!(Graph::path(3).dist(0, 2), 2);
        let g = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(g.dist(0, 1), UNREACHABLE);
        assert!(!g.is_connected());
    }

    #[test]
    fn k2_square_is_c4() {
        let k2 = Graph::complete(2);
        let p = k2.cartesian_product(&k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 4);
        for v in 0..4 {
            assert_eq!(p.neighbors(v).len(), 2);
        }
        assert_eq!(p.dist(0, 3), 2);
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::parse_edge_list("# a 4-cycle\n4 4\n0 1\n1 2 # middle\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list_text()).unwrap(), g);
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
