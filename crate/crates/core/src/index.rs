//! The connective eccentric index and the auxiliary quantities that the
//! closed-form results are stated in terms of.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::rational::Rational;

/// Sum over all vertices of `degree(v) / eccentricity(v)`, exactly.
///
/// Requires a connected graph with at least two vertices.
pub fn connective_eccentric_index(g: &Graph) -> Result<Rational, GraphError> {
    let ecc = eccentricities_for_index(g)?;
    Ok(cei_from_parts(g, &ecc))
}

fn eccentricities_for_index(g: &Graph) -> Result<Vec<usize>, GraphError> {
    if g.order() == 1 {
        return Err(GraphError::ZeroEccentricity);
    }
    g.all_eccentricities()
}

fn cei_from_parts(g: &Graph, ecc: &[usize]) -> Rational {
    ecc.par_iter()
        .enumerate()
        .map(|(v, &e)| Rational::new(g.degree(v), e))
        .reduce(Rational::zero, |a, b| a + b)
}

/// Sum of all vertex eccentricities.
pub fn total_eccentricity(g: &Graph) -> Result<usize, GraphError> {
    Ok(g.all_eccentricities()?.iter().sum())
}

/// Number of vertices adjacent to every other vertex. Zero for `K_1`.
pub fn count_well_connected(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 {
        return 0;
    }
    (0..n).filter(|&v| g.degree(v) == n - 1).count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSummary {
    pub cei: Rational,
    pub total_eccentricity: usize,
    pub n: usize,
    pub m: usize,
    pub well_connected_count: usize,
    pub radius: usize,
    pub diameter: usize,
}

/// Every index quantity at once, from a single all-sources BFS pass.
pub fn index_summary(g: &Graph) -> Result<IndexSummary, GraphError> {
    let ecc = eccentricities_for_index(g)?;
    Ok(IndexSummary {
        cei: cei_from_parts(g, &ecc),
        total_eccentricity: ecc.iter().sum(),
        n: g.order(),
        m: g.size(),
        well_connected_count: count_well_connected(g),
        radius: *ecc.iter().min().expect("n >= 2"),
        diameter: *ecc.iter().max().expect("n >= 2"),
    })
}
