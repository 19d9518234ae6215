//! Text forms of graphs: graph6 and a plain edge list.
//!
//! Edge-list format:
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::Graph;

/// Largest order graph6 can express with the 4-byte size field.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            _ => Err(format!("unknown graph format `{s}` (expected graph6 or edgelist)")),
        }
    }
}

pub fn encode_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(ParseError::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + pair_bits(n).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn pair_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes one graph6 string. A single trailing line break is tolerated.
pub fn decode_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.strip_suffix('\n').unwrap_or(line);
    let bytes = bytes.strip_suffix('\r').unwrap_or(bytes).as_bytes();
    let mut values = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::BadByte { byte, offset });
        }
        values.push(byte - 63);
    }
    let (n, body) = match values.as_slice() {
        [] => return Err(ParseError::Truncated),
        [63, rest @ ..] => {
            if rest.first() == Some(&63) {
                // 8-byte size form, n >= 258048.
                return Err(ParseError::TooLarge(GRAPH6_MAX_ORDER + 1));
            }
            let [a, b, c, body @ ..] = rest else {
                return Err(ParseError::Truncated);
            };
            ((*a as usize) << 12 | (*b as usize) << 6 | *c as usize, body)
        }
        [n, body @ ..] => (*n as usize, body),
    };
    if n == 0 {
        return Err(ParseError::Graph(crate::error::GraphError::Empty));
    }
    let bits = pair_bits(n);
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(ParseError::Truncated);
    }
    if body.len() > needed {
        return Err(ParseError::Trailing(body.len() - needed));
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..needed * 6).any(bit) {
        return Err(ParseError::Padding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().map_err(|_| ParseError::Malformed {
            line: header_line,
            reason: format!("bad vertex count `{count}`"),
        })?,
        _ => return Err(ParseError::MissingHeader),
    };
    let mut edges = Vec::new();
    for (line, content) in lines {
        let malformed = |reason: String| ParseError::Malformed { line, reason };
        let fields: Vec<_> = content.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(malformed(format!("expected `u v`, got `{content}`")));
        };
        let u: usize = u.parse().map_err(|_| malformed(format!("bad vertex `{u}`")))?;
        let v: usize = v.parse().map_err(|_| malformed(format!("bad vertex `{v}`")))?;
        edges.push((u, v));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Guesses the format from the first meaningful line: a `#` comment or an
/// `n <count>` header means edge list, anything else graph6.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let is_header = first
        .strip_prefix('n')
        .is_some_and(|rest| rest.is_empty() || rest.starts_with(char::is_whitespace));
    if first.starts_with('#') || is_header {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, ParseError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Graph6 => decode_graph6(text.trim()),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String, ParseError> {
    Ok(match format {
        GraphFormat::Graph6 => encode_graph6(g)? + "\n",
        GraphFormat::EdgeList => write_edgelist(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;
    use proptest::prelude::*;

    fn k(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn fixtures() {
        assert_eq!(decode_graph6("A_").unwrap(), k(2));
        assert_eq!(decode_graph6("Bw").unwrap(), k(3));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(decode_graph6("Bg").unwrap(), p3);
        assert_eq!(encode_graph6(&k(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&k(3)).unwrap(), "Bw");
        assert_eq!(encode_graph6(&p3).unwrap(), "Bg");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(decode_graph6("Bg\n").unwrap(), p3);
    }

    #[test]
    fn known_five_vertex_string() {
        // Edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn extended_size_form() {
        let g = Graph::new(100, &[(0, 99), (5, 6)]).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(&s[..4], "~?@c");
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(decode_graph6("A "), Err(ParseError::BadByte { byte: b' ', offset: 1 })));
        assert_eq!(decode_graph6("B"), Err(ParseError::Truncated));
        assert_eq!(decode_graph6(""), Err(ParseError::Truncated));
        assert_eq!(decode_graph6("A_?"), Err(ParseError::Trailing(1)));
        assert_eq!(decode_graph6("A`"), Err(ParseError::Padding));
        assert_eq!(decode_graph6("~?"), Err(ParseError::Truncated));
        assert!(matches!(decode_graph6(">>graph6<<A_"), Err(ParseError::BadByte { .. })));
        assert_eq!(decode_graph6("?"), Err(ParseError::Graph(GraphError::Empty)));
    }

    #[test]
    fn edgelists() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parse_edgelist("n 3\n0 1\n1 2").unwrap(), p3);
        assert_eq!(parse_edgelist("# path\nn 3 # three\n\n1 2\n0 1\n1 0\n").unwrap(), p3);
        assert_eq!(parse_edgelist("n 2\n").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(
            parse_edgelist("n 3\n0 0"),
            Err(ParseError::Graph(GraphError::SelfLoop(0)))
        );
        assert_eq!(parse_edgelist("0 1\n"), Err(ParseError::MissingHeader));
        assert_eq!(parse_edgelist(""), Err(ParseError::MissingHeader));
        assert!(matches!(parse_edgelist("n 3\n0 1 2"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(parse_edgelist("n 3\n0 x"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(
            parse_edgelist("n 3\n0 3"),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        assert_eq!(write_edgelist(&p3), "n 3\n0 1\n1 2\n");
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("n 3\n0 1"), GraphFormat::EdgeList);
        assert_eq!(detect_format("# c\nn 3"), GraphFormat::EdgeList);
        assert_eq!(detect_format("Bg\n"), GraphFormat::Graph6);
        assert_eq!(detect_format("nSomething"), GraphFormat::Graph6);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=70).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..(3 * n))
                .prop_map(move |pairs| {
                    let e: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                    Graph::new(n, &e).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = encode_graph6(&g).unwrap();
            let back = decode_graph6(&s).unwrap();
            prop_assert_eq!(encode_graph6(&back).unwrap(), s);
            prop_assert_eq!(back, g);
        }

        #[test]
        fn edgelist_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
        }
    }
}
