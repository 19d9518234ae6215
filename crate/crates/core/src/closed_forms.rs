//! Closed-form values of the index for graph families and graph operations.
//!
//! Apart from the two splice evaluators, nothing here looks at a graph: each
//! function takes counts (and possibly the index of a base graph) and does
//! integer/rational arithmetic only.

use num_bigint::BigInt;

use crate::constructions::{SpliceOrigin, SpliceSpec};
use crate::error::{FormulaError, GraphError};
use crate::rational::Rational;

fn domain(name: &'static str, value: usize, ok: bool, domain: &'static str) -> Result<(), FormulaError> {
    if ok {
        Ok(())
    } else {
        Err(FormulaError::Domain { name, value, domain })
    }
}

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

/// `K_n`: `n(n-1)`.
pub fn cei_complete(n: usize) -> Result<Rational, FormulaError> {
    domain("n", n, n >= 2, "n >= 2")?;
    Ok(Rational::from_integer(int(n) * int(n - 1)))
}

/// `C_n`: `2n / floor(n/2)`.
pub fn cei_cycle(n: usize) -> Result<Rational, FormulaError> {
    domain("n", n, n >= 3, "n >= 3")?;
    Ok(Rational::new(2 * n, n / 2))
}

/// `Q_m`: `2^m`.
pub fn cei_hypercube(m: usize) -> Result<Rational, FormulaError> {
    domain("m", m, m >= 1, "m >= 1")?;
    Ok(Rational::from_integer(BigInt::from(1) << m))
}

/// `Π_m`: `12m/(m+2)` for even `m`, `12m/(m+1)` for odd `m`.
pub fn cei_prism(m: usize) -> Result<Rational, FormulaError> {
    domain("m", m, m >= 3, "m >= 3")?;
    let den = if m.is_multiple_of(2) { m + 2 } else { m + 1 };
    Ok(Rational::new(12 * m, den))
}

/// `A_m`: `16` for even `m`, `16m/(m+1)` for odd `m`.
pub fn cei_antiprism(m: usize) -> Result<Rational, FormulaError> {
    domain("m", m, m >= 3, "m >= 3")?;
    Ok(if m.is_multiple_of(2) {
        Rational::from(16)
    } else {
        Rational::new(16 * m, m + 1)
    })
}

/// A `delta`-regular graph on `n` vertices with radius `r`: `n·delta/r`.
pub fn cei_regular(n: usize, delta: usize, r: usize) -> Result<Rational, FormulaError> {
    domain("n", n, n >= 2, "n >= 2")?;
    domain("r", r, r >= 1, "r >= 1")?;
    Ok(Rational::new(int(n) * int(delta), r))
}

/// Double graph: `4·C(G) - 2(n-1)·wc`, where `wc` counts vertices of degree `n-1`.
pub fn thm1_double(cei_g: &Rational, n: usize, wc: usize) -> Rational {
    Rational::from(4) * cei_g.clone() - Rational::from_integer(int(2) * int(n.saturating_sub(1)) * int(wc))
}

/// Claimed upper bound for the extended double cover: `2·C(G) - (n-2)·wc`.
pub fn thm2_edc_bound(cei_g: &Rational, n: usize, wc: usize) -> Rational {
    let n_minus_2 = BigInt::from(n as i128 - 2);
    Rational::from(2) * cei_g.clone() - Rational::from_integer(n_minus_2 * int(wc))
}

/// Join of two graphs without well-connected vertices: `m1 + m2 + n1·n2`.
pub fn thm3_join(m1: usize, m2: usize, n1: usize, n2: usize) -> Rational {
    Rational::from_integer(int(m1) + int(m2) + int(n1) * int(n2))
}

/// Join of many graphs without well-connected vertices:
/// `Σm_i + ½(Σn_i)² - ½Σn_i²`.
pub fn thm4_join_n(m_list: &[usize], n_list: &[usize]) -> Result<Rational, FormulaError> {
    if m_list.len() != n_list.len() {
        return Err(FormulaError::LengthMismatch(m_list.len(), n_list.len()));
    }
    if m_list.is_empty() {
        return Err(FormulaError::EmptyList);
    }
    let edges: BigInt = m_list.iter().map(|&m| int(m)).sum();
    let total: BigInt = n_list.iter().map(|&n| int(n)).sum();
    let squares: BigInt = n_list.iter().map(|&n| int(n) * int(n)).sum();
    Ok(Rational::from_integer(edges) + Rational::new(&total * &total - squares, 2))
}

/// Join of `copies` copies of one graph: `copies·m + copies(copies-1)/2 · v²`.
pub fn cor1_ncopies(copies: usize, m: usize, v: usize) -> Result<Rational, FormulaError> {
    domain("copies", copies, copies >= 1, "copies >= 1")?;
    let c = int(copies);
    Ok(Rational::from_integer(&c * int(m)) + Rational::new(&c * (&c - 1) * int(v) * int(v), 2))
}

fn check_parts(parts: &[usize]) -> Result<(), FormulaError> {
    if parts.is_empty() {
        return Err(FormulaError::EmptyList);
    }
    for &p in parts {
        domain("part", p, p >= 2, "every part >= 2")?;
    }
    Ok(())
}

/// Complete multipartite graph with parts of size >= 2: `Σ_{i<j} m_i·m_j`.
pub fn cor2_multipartite(parts: &[usize]) -> Result<Rational, FormulaError> {
    check_parts(parts)?;
    let mut acc = BigInt::from(0);
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            acc += int(a) * int(b);
        }
    }
    Ok(Rational::from_integer(acc))
}

/// The same sum over ordered pairs `i ≠ j`. It counts
/// every pair twice and is kept so the discrepancy can be reported.
pub fn cor2_multipartite_printed(parts: &[usize]) -> Result<Rational, FormulaError> {
    check_parts(parts)?;
    let mut acc = BigInt::from(0);
    for (i, &a) in parts.iter().enumerate() {
        for (j, &b) in parts.iter().enumerate() {
            if i != j {
                acc += int(a) * int(b);
            }
        }
    }
    Ok(Rational::from_integer(acc))
}

/// Symmetric difference: `m1·n2² + m2·n1² - 4·m1·m2`.
pub fn thm5_symdiff(m1: usize, m2: usize, n1: usize, n2: usize) -> Rational {
    product_form(m1, m2, n1, n2, 4)
}

/// Disjunction: `m1·n2² + m2·n1² - 2·m1·m2`.
pub fn thm6_disjunction(m1: usize, m2: usize, n1: usize, n2: usize) -> Rational {
    product_form(m1, m2, n1, n2, 2)
}

fn product_form(m1: usize, m2: usize, n1: usize, n2: usize, k: u32) -> Rational {
    let (m1, m2, n1, n2) = (int(m1), int(m2), int(n1), int(n2));
    Rational::from_integer(&m1 * &n2 * &n2 + &m2 * &n1 * &n1 - BigInt::from(k) * m1 * m2)
}

/// Eccentricities of every splice vertex from data on the two factors:
///
/// * `x` from `G1`: `max(ecc1(x), d1(x, v1) + ecc2(v2))`
/// * `y` from `G2`: `max(ecc2(y), d2(y, v2) + ecc1(v1))`
///
/// The merged vertex falls under both rules and gets `max(ecc1(v1), ecc2(v2))`.
/// Indexed in splice numbering.
pub fn splice_eccentricities(spec: &SpliceSpec<'_>) -> Result<Vec<usize>, GraphError> {
    let facts = SpliceFacts::new(spec)?;
    Ok((0..spec.order()).map(|x| facts.eccentricity(spec, x)).collect())
}

/// Eccentricity of splice vertex `x` by the rule in [`splice_eccentricities`].
pub fn splice_eccentricity(spec: &SpliceSpec<'_>, x: usize) -> Result<usize, GraphError> {
    if x >= spec.order() {
        return Err(GraphError::VertexOutOfRange { vertex: x, n: spec.order() });
    }
    Ok(SpliceFacts::new(spec)?.eccentricity(spec, x))
}

/// Index of the splice assembled from factor data: each vertex contributes
/// its splice degree over [`splice_eccentricity`]; the merged vertex has
/// degree `d1(v1) + d2(v2)` and is counted once.
pub fn splice_cei_formula(spec: &SpliceSpec<'_>) -> Result<Rational, GraphError> {
    let facts = SpliceFacts::new(spec)?;
    if spec.order() == 1 {
        return Err(GraphError::ZeroEccentricity);
    }
    Ok((0..spec.order())
        .map(|x| {
            let degree = match spec.origin(x) {
                SpliceOrigin::First(v) if v == spec.v1 => spec.g1.degree(v) + spec.g2.degree(spec.v2),
                SpliceOrigin::First(v) => spec.g1.degree(v),
                SpliceOrigin::Second(w) => spec.g2.degree(w),
            };
            Rational::new(degree, facts.eccentricity(spec, x))
        })
        .sum())
}

struct SpliceFacts {
    ecc1: Vec<usize>,
    ecc2: Vec<usize>,
    to_v1: Vec<usize>,
    to_v2: Vec<usize>,
}

impl SpliceFacts {
    fn new(spec: &SpliceSpec<'_>) -> Result<Self, GraphError> {
        for (v, g) in [(spec.v1, spec.g1), (spec.v2, spec.g2)] {
            if v >= g.order() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.order() });
            }
        }
        Ok(SpliceFacts {
            ecc1: spec.g1.all_eccentricities()?,
            ecc2: spec.g2.all_eccentricities()?,
            to_v1: spec.g1.bfs_distances(spec.v1).dist,
            to_v2: spec.g2.bfs_distances(spec.v2).dist,
        })
    }

    fn eccentricity(&self, spec: &SpliceSpec<'_>, x: usize) -> usize {
        match spec.origin(x) {
            SpliceOrigin::First(v) => self.ecc1[v].max(self.to_v1[v] + self.ecc2[spec.v2]),
            SpliceOrigin::Second(w) => self.ecc2[w].max(self.to_v2[w] + self.ecc1[spec.v1]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(cei_complete(2).unwrap(), r(2));
        assert_eq!(cei_complete(4).unwrap(), r(12));
        assert_eq!(cei_complete(10).unwrap(), r(90));
        assert!(cei_complete(1).is_err());

        assert_eq!(cei_cycle(4).unwrap(), r(4));
        assert_eq!(cei_cycle(6).unwrap(), r(4));
        assert_eq!(cei_cycle(5).unwrap(), r(5));
        assert!(cei_cycle(2).is_err());

        assert_eq!(cei_hypercube(1).unwrap(), r(2));
        assert_eq!(cei_hypercube(3).unwrap(), r(8));
        assert_eq!(cei_hypercube(10).unwrap(), r(1024));
        assert!(cei_hypercube(0).is_err());

        assert_eq!(cei_prism(3).unwrap(), r(9));
        assert_eq!(cei_prism(4).unwrap(), r(8));
        assert_eq!(cei_prism(4).unwrap(), cei_hypercube(3).unwrap());
        assert!(cei_prism(2).is_err());

        assert_eq!(cei_antiprism(3).unwrap(), r(12));
        assert_eq!(cei_antiprism(4).unwrap(), r(16));
        assert_eq!(cei_antiprism(7).unwrap(), r(14));
        assert!(cei_antiprism(2).is_err());

        assert_eq!(cei_regular(6, 2, 3).unwrap(), r(4));
        assert_eq!(cei_regular(8, 3, 3).unwrap(), r(8));
        assert_eq!(cei_regular(5, 0, 2).unwrap(), r(0));
        assert!(cei_regular(6, 2, 0).is_err());
    }

    #[test]
    fn double_and_cover() {
        assert_eq!(thm1_double(&r(3), 3, 1), r(8));
        assert_eq!(thm1_double(&r(2), 2, 2), r(4));
        assert_eq!(thm1_double(&r(4), 6, 0), r(16));

        assert_eq!(thm2_edc_bound(&r(3), 3, 1), r(5));
        assert_eq!(thm2_edc_bound(&r(4), 6, 0), r(8));
        let x = Rational::new(7, 3);
        assert_eq!(thm2_edc_bound(&x, 9, 0), Rational::new(14, 3));
    }

    #[test]
    fn joins() {
        assert_eq!(thm3_join(4, 4, 4, 4), r(24));
        assert_eq!(thm3_join(0, 0, 2, 3), r(6));
        assert_eq!(thm3_join(4, 5, 4, 5), r(29));

        assert_eq!(thm4_join_n(&[4, 4, 4], &[4, 4, 4]).unwrap(), r(60));
        assert_eq!(thm4_join_n(&[7], &[5]).unwrap(), r(7));
        assert_eq!(thm4_join_n(&[1], &[1, 2]), Err(FormulaError::LengthMismatch(1, 2)));
        assert_eq!(thm4_join_n(&[], &[]), Err(FormulaError::EmptyList));

        assert_eq!(cor1_ncopies(3, 4, 4).unwrap(), r(60));
        assert_eq!(cor1_ncopies(1, 9, 6).unwrap(), r(9));
        assert_eq!(cor1_ncopies(2, 0, 5).unwrap(), r(25));
    }

    #[test]
    fn two_part_join_reduces_to_binary() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..100 {
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % 1000) as usize
            };
            let (m1, m2, n1, n2) = (next(), next(), next(), next());
            assert_eq!(thm4_join_n(&[m1, m2], &[n1, n2]).unwrap(), thm3_join(m1, m2, n1, n2));
        }
    }

    #[test]
    fn multipartite() {
        assert_eq!(cor2_multipartite(&[2, 2]).unwrap(), r(4));
        assert_eq!(cor2_multipartite(&[2, 3]).unwrap(), r(6));
        assert_eq!(cor2_multipartite(&[2, 2, 2]).unwrap(), r(12));
        assert_eq!(cor2_multipartite_printed(&[2, 2]).unwrap(), r(8));
        assert!(matches!(cor2_multipartite(&[1, 3]), Err(FormulaError::Domain { .. })));
        assert_eq!(cor2_multipartite(&[]), Err(FormulaError::EmptyList));
    }

    #[test]
    fn products() {
        assert_eq!(thm5_symdiff(4, 4, 4, 4), r(64));
        assert_eq!(thm5_symdiff(7, 0, 5, 1), r(7));
        assert_eq!(thm5_symdiff(4, 5, 4, 5), r(100));
        assert_eq!(thm6_disjunction(4, 4, 4, 4), r(96));
        assert_eq!(thm6_disjunction(4, 5, 4, 5), r(140));
        assert_eq!(thm6_disjunction(6, 0, 4, 3), r(6 * 9));
    }

    #[test]
    fn splice_paths_and_stars() {
        let p3 = path(3);
        let end = SpliceSpec { g1: &p3, g2: &p3, v1: 2, v2: 0 };
        // splice numbering: 0 1 2 | 3 4, with 2 the merged vertex -> P_5.
        assert_eq!(splice_eccentricities(&end).unwrap(), vec![4, 3, 2, 3, 4]);
        assert_eq!(splice_eccentricity(&end, 4).unwrap(), 4);
        assert_eq!(splice_cei_formula(&end).unwrap(), Rational::new(17, 6));

        let mid = SpliceSpec { g1: &p3, g2: &p3, v1: 1, v2: 1 };
        assert_eq!(splice_eccentricities(&mid).unwrap(), vec![2, 1, 2, 2, 2]);
        assert_eq!(splice_cei_formula(&mid).unwrap(), r(6));
    }

    #[test]
    fn splice_with_single_vertex_is_identity() {
        let c5 = cycle(5);
        let k1 = Graph::empty(1).unwrap();
        let spec = SpliceSpec { g1: &c5, g2: &k1, v1: 2, v2: 0 };
        assert_eq!(splice_cei_formula(&spec).unwrap(), r(5));
    }

    #[test]
    fn splice_merged_cycles() {
        let c4 = cycle(4);
        let spec = SpliceSpec { g1: &c4, g2: &c4, v1: 0, v2: 3 };
        assert_eq!(splice_eccentricity(&spec, 0).unwrap(), 2);
    }

    #[test]
    fn splice_errors() {
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p3 = path(3);
        let spec = SpliceSpec { g1: &p3, g2: &split, v1: 0, v2: 0 };
        assert_eq!(splice_cei_formula(&spec), Err(GraphError::Disconnected));
        let k1 = Graph::empty(1).unwrap();
        let spec = SpliceSpec { g1: &k1, g2: &k1, v1: 0, v2: 0 };
        assert_eq!(splice_cei_formula(&spec), Err(GraphError::ZeroEccentricity));
    }
}
