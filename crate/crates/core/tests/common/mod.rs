//! Test-local oracles, written independently of the library: Floyd–Warshall
//! distances, the pairwise definitions of the three set properties, and
//! exhaustive subset search.

#![allow(dead_code)]

use drset::Graph;
use itertools::Itertools;
use rand::Rng;

pub const INF: u32 = u32::MAX / 4;

/// Random connected graph: a random spanning tree plus each other edge with
/// probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    // Relabel so the tree root is not always vertex 0.
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Arbitrary (possibly disconnected) random graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// All-pairs distances by Floyd–Warshall over the edge list.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub type Dist = Vec<Vec<u32>>;

fn sd(d: &Dist, a: usize, b: usize) -> i64 {
    d[a][b] as i64
}

/// Some landmark sees `u` and `v` at different distances, for every pair.
pub fn naive_resolving(d: &Dist, s: &[usize]) -> bool {
    let n = d.len();
    (0..n)
        .tuple_combinations()
        .all(|(u, v)| s.iter().any(|&x| d[u][x] != d[v][x]))
}

/// For every pair `u, v` some `x, y ∈ S` has
/// `d(u,x) - d(u,y) != d(v,x) - d(v,y)`.
pub fn naive_doubly(d: &Dist, s: &[usize]) -> bool {
    let n = d.len();
    (0..n).tuple_combinations().all(|(u, v)| {
        s.iter().any(|&x| {
            s.iter()
                .any(|&y| sd(d, u, x) - sd(d, u, y) != sd(d, v, x) - sd(d, v, y))
        })
    })
}

/// Whenever `d(u,a) != d(v,a)`, some `t ∈ S` has
/// `d(u,a) - d(u,t) != d(v,a) - d(v,t)`.
pub fn naive_ddrs(d: &Dist, a: usize, s: &[usize]) -> bool {
    let n = d.len();
    (0..n).tuple_combinations().all(|(u, v)| {
        d[u][a] == d[v][a]
            || s.iter()
                .any(|&t| sd(d, u, a) - sd(d, u, t) != sd(d, v, a) - sd(d, v, t))
    })
}

/// Smallest subset size (from `start`) passing `pred`.
pub fn naive_min(n: usize, start: usize, pred: impl Fn(&[usize]) -> bool) -> usize {
    (start..=n)
        .find(|&k| (0..n).combinations(k).any(|c| pred(&c)))
        .expect("the full set always works")
}

pub fn naive_beta(d: &Dist) -> usize {
    naive_min(d.len(), 1, |s| naive_resolving(d, s))
}

pub fn naive_psi(d: &Dist) -> usize {
    naive_min(d.len(), 2, |s| naive_doubly(d, s))
}

pub fn naive_phi(d: &Dist, a: usize) -> usize {
    naive_min(d.len(), 0, |s| naive_ddrs(d, a, s))
}

pub fn naive_phi_max(d: &Dist) -> usize {
    (0..d.len()).map(|a| naive_phi(d, a)).max().unwrap()
}

/// Minimum set cover by enumerating column subsets.
pub fn naive_cover(n_rows: usize, columns: &[Vec<usize>]) -> Option<usize> {
    (0..=columns.len()).find(|&k| {
        (0..columns.len())
            .combinations(k)
            .any(|c| (0..n_rows).all(|r| c.iter().any(|&j| columns[j].contains(&r))))
    })
}
