//! Graph operations with fixed vertex numbering.
//!
//! | operation | vertex numbering |
//! |---|---|
//! | double graph, extended double cover | `x_i -> i`, `y_i -> n + i` |
//! | join | `G1` first, then `G2` shifted by `n1` |
//! | symmetric difference, disjunction | `(u1, u2) -> u1 * n2 + u2` |
//! | splice | `G1` unchanged, then `G2` minus `v2` in order; `v2` becomes `v1` |

use rayon::prelude::*;

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};

fn check_cap(n: u128) -> Result<(), GraphError> {
    if n > MAX_VERTICES as u128 {
        Err(GraphError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Two copies of `g`; every edge `v_i v_j` also yields `x_i y_j` and `x_j y_i`.
pub fn double_graph(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    check_cap(2 * n as u128)?;
    let mut edges = Vec::with_capacity(4 * g.size());
    for (i, j) in g.edges() {
        edges.extend([(i, j), (n + i, n + j), (i, n + j), (j, n + i)]);
    }
    Graph::new(2 * n, &edges)
}

/// Bipartite graph on `X ∪ Y` with `x_i ~ y_j` iff `v_i ~ v_j` or `i = j`.
pub fn extended_double_cover(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    check_cap(2 * n as u128)?;
    let mut edges: Vec<_> = (0..n).map(|i| (i, n + i)).collect();
    for (i, j) in g.edges() {
        edges.extend([(i, n + j), (j, n + i)]);
    }
    Graph::new(2 * n, &edges)
}

/// Disjoint union plus every edge between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let (n1, n2) = (g1.order(), g2.order());
    check_cap(n1 as u128 + n2 as u128)?;
    let mut edges = Vec::with_capacity(g1.size() + g2.size() + n1 * n2);
    edges.extend(g1.edges());
    edges.extend(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    for u in 0..n1 {
        edges.extend((0..n2).map(|v| (u, n1 + v)));
    }
    Graph::new(n1 + n2, &edges)
}

/// Left fold of [`join`] over a nonempty list.
pub fn join_n(graphs: &[Graph]) -> Result<Graph, GraphError> {
    let (first, rest) = graphs.split_first().ok_or(GraphError::EmptyJoin)?;
    rest.iter()
        .try_fold(first.clone(), |acc, g| join(&acc, g))
}

#[derive(Clone, Copy)]
enum ProductRule {
    ExactlyOne,
    AtLeastOne,
}

fn product(g1: &Graph, g2: &Graph, rule: ProductRule) -> Result<Graph, GraphError> {
    let (n1, n2) = (g1.order(), g2.order());
    check_cap(n1 as u128 * n2 as u128)?;
    let adj: Vec<Vec<usize>> = (0..n1 * n2)
        .into_par_iter()
        .map(|idx| {
            let (u1, u2) = (idx / n2, idx % n2);
            let mut row = Vec::new();
            for v1 in 0..n1 {
                if g1.has_edge(u1, v1) {
                    match rule {
                        ProductRule::AtLeastOne => row.extend((0..n2).map(|v2| v1 * n2 + v2)),
                        ProductRule::ExactlyOne => row.extend(
                            (0..n2)
                                .filter(|&v2| !g2.has_edge(u2, v2))
                                .map(|v2| v1 * n2 + v2),
                        ),
                    }
                } else {
                    row.extend(g2.neighbors(u2).iter().map(|&v2| v1 * n2 + v2));
                }
            }
            row
        })
        .collect();
    Ok(Graph::from_neighbor_lists(adj))
}

/// `(u1,u2) ~ (v1,v2)` iff exactly one coordinate pair is adjacent.
pub fn symmetric_difference(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    product(g1, g2, ProductRule::ExactlyOne)
}

/// `(u1,u2) ~ (v1,v2)` iff at least one coordinate pair is adjacent.
pub fn disjunction(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    product(g1, g2, ProductRule::AtLeastOne)
}

/// Two connected graphs and the vertex of each that gets identified.
#[derive(Clone, Debug)]
pub struct SpliceSpec<'a> {
    pub g1: &'a Graph,
    pub g2: &'a Graph,
    pub v1: usize,
    pub v2: usize,
}

impl SpliceSpec<'_> {
    fn validate(&self) -> Result<(), GraphError> {
        for (v, g) in [(self.v1, self.g1), (self.v2, self.g2)] {
            if v >= g.order() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.order() });
            }
            if !g.is_connected() {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.g1.order() + self.g2.order() - 1
    }

    /// Position of `w ∈ V(G2)` in the splice.
    pub fn map_g2(&self, w: usize) -> usize {
        use std::cmp::Ordering::*;
        match w.cmp(&self.v2) {
            Less => self.g1.order() + w,
            Equal => self.v1,
            Greater => self.g1.order() + w - 1,
        }
    }

    /// Inverse of the splice numbering: which input graph a splice vertex
    /// came from, and its index there. The merged vertex reports as `G1`.
    pub fn origin(&self, x: usize) -> SpliceOrigin {
        let n1 = self.g1.order();
        if x < n1 {
            SpliceOrigin::First(x)
        } else {
            let w = x - n1;
            SpliceOrigin::Second(if w < self.v2 { w } else { w + 1 })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpliceOrigin {
    First(usize),
    Second(usize),
}

/// Union of `g1` and `g2` with `v1` and `v2` identified.
pub fn splice(spec: &SpliceSpec<'_>) -> Result<Graph, GraphError> {
    spec.validate()?;
    let n = spec.order();
    let mut edges: Vec<_> = spec.g1.edges().collect();
    edges.extend(spec.g2.edges().map(|(a, b)| (spec.map_g2(a), spec.map_g2(b))));
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }
    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &e)
    }
    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }
    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        g(n, &e)
    }
    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let e: Vec<_> = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))).collect();
        g(a + b, &e)
    }

    #[test]
    fn double_graph_examples() {
        let d = double_graph(&path(3)).unwrap();
        assert_eq!((d.order(), d.size()), (6, 8));
        assert_eq!(d.degrees(), vec![2, 4, 2, 2, 4, 2]);

        // K_2* has edges x0x1, y0y1, x0y1, x1y0: the 4-cycle x0-x1-y0-y1-x0.
        let d = double_graph(&complete(2)).unwrap();
        assert_eq!(d, g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));

        let d = double_graph(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(d, Graph::empty(2).unwrap());
    }

    #[test]
    fn edc_examples() {
        let d = extended_double_cover(&path(3)).unwrap();
        assert_eq!((d.order(), d.size()), (6, 7));
        assert_eq!(d.degrees(), vec![2, 3, 2, 2, 3, 2]);
        for n in 1..6 {
            assert_eq!(extended_double_cover(&complete(n)).unwrap(), complete_bipartite(n, n));
        }
        assert_eq!(extended_double_cover(&Graph::empty(1).unwrap()).unwrap(), complete(2));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(join(&k1, &k1).unwrap(), complete(2));
        let j = join(&cycle(4), &cycle(4)).unwrap();
        assert_eq!((j.order(), j.size(), j.is_regular()), (8, 24, Some(6)));
        let j = join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(j, complete_bipartite(2, 3));
    }

    #[test]
    fn join_n_examples() {
        let parts: Vec<_> = [2, 3, 4].iter().map(|&k| Graph::empty(k).unwrap()).collect();
        let j = join_n(&parts).unwrap();
        assert_eq!(j.order(), 9);
        assert_eq!(j.size(), 2 * 3 + 2 * 4 + 3 * 4);
        assert_eq!(count_edges_within_blocks(&j, &[2, 3, 4]), 0);

        let j = join_n(&[cycle(4), cycle(4), cycle(4)]).unwrap();
        assert_eq!((j.order(), j.size(), j.is_regular()), (12, 60, Some(10)));

        assert_eq!(join_n(&[cycle(5)]).unwrap(), cycle(5));
        assert_eq!(join_n(&[]), Err(GraphError::EmptyJoin));
    }

    fn count_edges_within_blocks(g: &Graph, parts: &[usize]) -> usize {
        let mut block = Vec::new();
        for (b, &k) in parts.iter().enumerate() {
            block.extend(std::iter::repeat_n(b, k));
        }
        g.edges().filter(|&(u, v)| block[u] == block[v]).count()
    }

    #[test]
    fn symdiff_examples() {
        let s = symmetric_difference(&cycle(4), &cycle(4)).unwrap();
        assert_eq!((s.order(), s.size(), s.is_regular()), (16, 64, Some(8)));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(symmetric_difference(&k1, &path(4)).unwrap(), path(4));
        let s = symmetric_difference(&complete(2), &complete(2)).unwrap();
        assert_eq!((s.order(), s.size(), s.is_regular()), (4, 4, Some(2)));
        assert!(s.is_connected());
    }

    #[test]
    fn disjunction_examples() {
        let s = disjunction(&cycle(4), &cycle(4)).unwrap();
        assert_eq!((s.order(), s.size(), s.is_regular()), (16, 96, Some(12)));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(disjunction(&k1, &cycle(5)).unwrap(), cycle(5));
        assert_eq!(disjunction(&complete(2), &complete(2)).unwrap(), complete(4));
    }

    #[test]
    fn product_cap() {
        let big = Graph::empty(1001).unwrap();
        assert_eq!(
            symmetric_difference(&big, &big),
            Err(GraphError::TooLarge(1001 * 1001))
        );
        assert!(disjunction(&big, &big).is_err());
    }

    #[test]
    fn splice_examples() {
        let p3 = path(3);
        let s = splice(&SpliceSpec { g1: &p3, g2: &p3, v1: 2, v2: 0 }).unwrap();
        assert_eq!(s, path(5));

        let s = splice(&SpliceSpec { g1: &p3, g2: &p3, v1: 1, v2: 1 }).unwrap();
        assert_eq!(s, g(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]));

        let k1 = Graph::empty(1).unwrap();
        let c5 = cycle(5);
        assert_eq!(splice(&SpliceSpec { g1: &c5, g2: &k1, v1: 3, v2: 0 }).unwrap(), c5);
    }

    #[test]
    fn splice_rejects_bad_input() {
        let split = g(4, &[(0, 1), (2, 3)]);
        let p3 = path(3);
        assert_eq!(
            splice(&SpliceSpec { g1: &split, g2: &p3, v1: 0, v2: 0 }),
            Err(GraphError::Disconnected)
        );
        assert!(matches!(
            splice(&SpliceSpec { g1: &p3, g2: &p3, v1: 0, v2: 3 }),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn splice_numbering_round_trip() {
        let p3 = path(3);
        let c4 = cycle(4);
        let spec = SpliceSpec { g1: &p3, g2: &c4, v1: 1, v2: 2 };
        for w in 0..4 {
            let x = spec.map_g2(w);
            if w == 2 {
                assert_eq!(x, 1);
                assert_eq!(spec.origin(x), SpliceOrigin::First(1));
            } else {
                assert_eq!(spec.origin(x), SpliceOrigin::Second(w));
            }
        }
    }
}
