//! Named graph families, seeded random connected graphs, and exhaustive
//! enumeration of small labeled connected graphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FamilyError, GraphError};
use crate::graph::{Graph, MAX_VERTICES};

/// Name of the generator behind every seeded choice in this crate.
pub const RNG_NAME: &str = "ChaCha8Rng";

/// A parameterised member of one of the supported families.
///
/// Text form: `complete:5`, `cycle:6`, `path:4`, `hypercube:3`, `prism:5`,
/// `antiprism:5`, `kpartite:2,3,4`, `empty:3`,
/// `random:n=12,p=3/10,seed=42`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Hypercube(usize),
    Prism(usize),
    Antiprism(usize),
    CompleteMultipartite(Vec<usize>),
    Empty(usize),
    /// Random labeled tree plus each remaining pair with probability
    /// `p_num / p_den`.
    RandomConnected {
        n: usize,
        p_num: u64,
        p_den: u64,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        generate(self)
    }

    fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Path(_) => "path",
            FamilySpec::Hypercube(_) => "hypercube",
            FamilySpec::Prism(_) => "prism",
            FamilySpec::Antiprism(_) => "antiprism",
            FamilySpec::CompleteMultipartite(_) => "kpartite",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::RandomConnected { .. } => "random",
        }
    }
}

fn domain_err(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Domain {
        family,
        reason: reason.into(),
    }
}

fn require(family: &'static str, ok: bool, reason: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(domain_err(family, reason))
    }
}

fn cap(family: &'static str, n: u128) -> Result<(), FamilyError> {
    if n > MAX_VERTICES as u128 {
        Err(FamilyError::Graph(GraphError::TooLarge(n)))
    } else {
        require(family, n >= 1, "needs at least one vertex")
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let family = spec.name();
    let graph = match *spec {
        FamilySpec::Complete(n) => {
            require(family, n >= 1, "n >= 1")?;
            cap(family, n as u128)?;
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Cycle(n) => {
            require(family, n >= 3, "n >= 3")?;
            cap(family, n as u128)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Path(n) => {
            require(family, n >= 1, "n >= 1")?;
            cap(family, n as u128)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Hypercube(m) => {
            require(family, m < 64, "m < 64")?;
            cap(family, 1u128 << m)?;
            let n = 1usize << m;
            let edges: Vec<_> = (0..n)
                .flat_map(|v| (0..m).map(move |b| (v, v ^ (1 << b))).filter(|&(u, w)| u < w))
                .collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Prism(m) | FamilySpec::Antiprism(m) => {
            require(family, m >= 3, "m >= 3")?;
            cap(family, 2 * m as u128)?;
            // u_i -> i, w_i -> m + i
            let mut edges = Vec::with_capacity(4 * m);
            for i in 0..m {
                let j = (i + 1) % m;
                edges.extend([(i, j), (m + i, m + j), (i, m + i)]);
                if matches!(spec, FamilySpec::Antiprism(_)) {
                    edges.push((j, m + i));
                }
            }
            Graph::new(2 * m, &edges)?
        }
        FamilySpec::CompleteMultipartite(ref parts) => {
            require(family, !parts.is_empty(), "at least one part")?;
            require(family, parts.iter().all(|&p| p >= 1), "every part >= 1")?;
            let n: u128 = parts.iter().map(|&p| p as u128).sum();
            cap(family, n)?;
            let mut block = Vec::with_capacity(n as usize);
            for (b, &p) in parts.iter().enumerate() {
                block.extend(std::iter::repeat_n(b, p));
            }
            let n = n as usize;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| block[u] != block[v])
                .collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Empty(n) => {
            require(family, n >= 1, "n >= 1")?;
            cap(family, n as u128)?;
            Graph::empty(n)?
        }
        FamilySpec::RandomConnected { n, p_num, p_den, seed } => {
            require(family, n >= 2, "n >= 2")?;
            require(family, p_den >= 1 && p_num <= p_den, "0 <= p <= 1")?;
            cap(family, n as u128)?;
            random_connected(n, p_num, p_den, &mut ChaCha8Rng::seed_from_u64(seed))
        }
    };
    Ok(graph)
}

/// Random recursive tree over a shuffled labeling, then every non-tree pair
/// independently with probability `p_num / p_den`. Always connected.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p_num: u64, p_den: u64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut adj = vec![Vec::new(); n];
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        adj[parent].push(child);
        adj[child].push(parent);
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    let tree = adj.clone();
    for u in 0..n {
        for v in u + 1..n {
            if tree[u].binary_search(&v).is_err() && rng.gen_range(0..p_den) < p_num {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Graph::from_neighbor_lists(adj)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            FamilySpec::Complete(k)
            | FamilySpec::Cycle(k)
            | FamilySpec::Path(k)
            | FamilySpec::Hypercube(k)
            | FamilySpec::Prism(k)
            | FamilySpec::Antiprism(k)
            | FamilySpec::Empty(k) => write!(f, "{name}:{k}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<_> = parts.iter().map(usize::to_string).collect();
                write!(f, "{name}:{}", parts.join(","))
            }
            FamilySpec::RandomConnected { n, p_num, p_den, seed } => {
                write!(f, "{name}:n={n},p={p_num}/{p_den},seed={seed}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || FamilyError::Malformed(s.to_string());
        let (name, args) = s.trim().split_once(':').ok_or_else(malformed)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| malformed());
        Ok(match name.trim() {
            "complete" => FamilySpec::Complete(num(args)?),
            "cycle" => FamilySpec::Cycle(num(args)?),
            "path" => FamilySpec::Path(num(args)?),
            "hypercube" => FamilySpec::Hypercube(num(args)?),
            "prism" => FamilySpec::Prism(num(args)?),
            "antiprism" => FamilySpec::Antiprism(num(args)?),
            "empty" => FamilySpec::Empty(num(args)?),
            "kpartite" => FamilySpec::CompleteMultipartite(
                args.split(',').map(num).collect::<Result<_, _>>()?,
            ),
            "random" => {
                let (mut n, mut p, mut seed) = (None, None, None);
                for kv in args.split(',') {
                    let (k, v) = kv.split_once('=').ok_or_else(malformed)?;
                    let v = v.trim();
                    match k.trim() {
                        "n" => n = Some(num(v)?),
                        "seed" => seed = Some(v.parse::<u64>().map_err(|_| malformed())?),
                        "p" => {
                            let (a, b) = v.split_once('/').unwrap_or((v, "1"));
                            let a = a.trim().parse::<u64>().map_err(|_| malformed())?;
                            let b = b.trim().parse::<u64>().map_err(|_| malformed())?;
                            p = Some((a, b));
                        }
                        _ => return Err(malformed()),
                    }
                }
                let (p_num, p_den) = p.unwrap_or((0, 1));
                FamilySpec::RandomConnected {
                    n: n.ok_or_else(malformed)?,
                    p_num,
                    p_den,
                    seed: seed.unwrap_or(0),
                }
            }
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }
}

/// Largest order accepted by [`enumerate_labeled_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Number of vertex pairs, i.e. bits in an edge mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edge set is given by `mask`: bit `k` is the `k`-th pair
/// `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).expect("mask pairs are in range and loop-free")
}

/// Every labeled connected simple graph on `n` vertices, in increasing
/// edge-mask order.
pub fn enumerate_labeled_connected(n: usize) -> Result<impl Iterator<Item = Graph>, FamilyError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(domain_err("enumeration", format!("order {n} outside 1..=7")));
    }
    let masks = 1u64 << pair_count(n);
    Ok((0..masks)
        .map(move |mask| graph_from_mask(n, mask))
        .filter(Graph::is_connected))
}
