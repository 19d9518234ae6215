//! Immutable simple undirected graphs and the BFS primitives every index
//! computation is built on.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::GraphError;

/// Largest vertex count a product construction may produce.
pub const MAX_VERTICES: usize = 1_000_000;

/// A simple undirected graph on the dense vertex set `0..n`.
///
/// Neighbor lists are sorted and free of duplicates and self-loops, and the
/// adjacency relation is symmetric. Once built a `Graph` is never mutated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_neighbor_lists(adj))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    /// Sorts and dedups raw neighbor lists. Callers guarantee symmetry and
    /// the absence of self-loops.
    pub(crate) fn from_neighbor_lists(mut adj: Vec<Vec<usize>>) -> Self {
        adj.par_iter_mut().for_each(|row| {
            row.sort_unstable();
            row.dedup();
        });
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        debug_assert!(degree_sum.is_multiple_of(2));
        Graph {
            adj,
            edge_count: degree_sum / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|row| row.len() == d).then_some(d)
    }

    /// Hop distances from `source` by breadth-first search.
    pub fn bfs_distances(&self, source: usize) -> DistanceRow {
        let n = self.order();
        let mut dist = vec![DistanceRow::UNREACHABLE; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == DistanceRow::UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        DistanceRow { source, dist }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).all_reachable()
    }

    /// Eccentricity of `v`: the largest distance from `v` to any vertex.
    pub fn eccentricity(&self, v: usize) -> Result<usize, GraphError> {
        self.bfs_distances(v).max().ok_or(GraphError::Disconnected)
    }

    /// Eccentricities of every vertex, one BFS per source. Sources run in
    /// parallel; the result does not depend on scheduling.
    pub fn all_eccentricities(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        (0..self.order())
            .into_par_iter()
            .map(|v| self.eccentricity(v))
            .collect()
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(GraphError::BadPermutation);
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::new(n, &edges)
    }
}

/// Hop distances from one source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<usize>,
}

impl DistanceRow {
    /// Marks vertices in a different component from `source`.
    pub const UNREACHABLE: usize = usize::MAX;

    pub fn get(&self, v: usize) -> Option<usize> {
        let d = self.dist[v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    pub fn all_reachable(&self) -> bool {
        !self.dist.contains(&Self::UNREACHABLE)
    }

    /// Largest finite distance, or `None` if some vertex is unreachable.
    pub fn max(&self) -> Option<usize> {
        if self.all_reachable() {
            self.dist.iter().copied().max()
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_p3() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn build_k1() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn degrees() {
        assert!(complete(4).degrees().iter().all(|&d| d == 3));
        assert_eq!(path(3).degree(1), 2);
        assert!(cycle(6).degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn bfs_rows() {
        assert_eq!(path(3).bfs_distances(0).dist, vec![0, 1, 2]);

        let mut c6 = cycle(6).bfs_distances(4).dist;
        c6.sort_unstable();
        assert_eq!(c6, vec![0, 1, 1, 2, 2, 3]);

        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let row = two_edges.bfs_distances(0);
        assert_eq!(row.get(1), Some(1));
        assert_eq!(row.get(2), None);
        assert_eq!(row.get(3), None);
        assert_eq!(row.max(), None);
    }

    #[test]
    fn eccentricities() {
        assert_eq!(complete(4).eccentricity(2), Ok(1));
        assert_eq!(cycle(6).eccentricity(0), Ok(3));
        let p4 = path(4);
        assert_eq!(p4.eccentricity(0), Ok(3));
        assert_eq!(p4.eccentricity(1), Ok(2));
        assert_eq!(Graph::empty(1).unwrap().eccentricity(0), Ok(0));
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.eccentricity(0), Err(GraphError::Disconnected));
        assert_eq!(two_edges.all_eccentricities(), Err(GraphError::Disconnected));
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(!Graph::new(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn bulk_eccentricities() {
        assert_eq!(path(3).all_eccentricities().unwrap(), vec![2, 1, 2]);
        for n in 2..8 {
            assert!(complete(n).all_eccentricities().unwrap().iter().all(|&e| e == 1));
        }
    }

    #[test]
    fn edges_listing() {
        let g = Graph::new(4, &[(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        let g = path(3);
        assert_eq!(g.permute(&[0, 0, 1]), Err(GraphError::BadPermutation));
        assert_eq!(g.permute(&[2, 1, 0]).unwrap(), g);
    }
}
