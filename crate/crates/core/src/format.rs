//! graph6, the `n=..; R=..; B=..` colored text record, deck files and edge lists.

use crate::bits::{pair_count, MAX_N, PAIRS};
use crate::colored::ColoredGraph;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Pair};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// newline are accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let mut base = 0;
    let mut bytes = input;
    if bytes.starts_with(HEADER.as_bytes()) {
        base = HEADER.len();
        bytes = &bytes[HEADER.len()..];
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 record"));
    }
    if let Some(i) = bytes.iter().position(|b| !(0x3F..=0x7E).contains(b)) {
        return Err(parse_err(base + i, format!("byte 0x{:02X} outside 0x3F..=0x7E", bytes[i])));
    }
    if bytes[0] == 0x7E {
        return Err(parse_err(base, format!("multi-byte order header; at most {MAX_N} vertices are supported")));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(parse_err(base, "graphs with zero vertices are not supported"));
    }
    if n > MAX_N {
        return Err(parse_err(base, format!("{n} vertices exceeds the maximum of {MAX_N}")));
    }
    let m = pair_count(n);
    let want = 1 + m.div_ceil(6);
    if bytes.len() != want {
        return Err(parse_err(
            base + bytes.len().min(want),
            format!("expected {want} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    for (k, &(i, j)) in PAIRS[..m].iter().enumerate() {
        let byte = bytes[1 + k / 6] - 63;
        if byte >> (5 - k % 6) & 1 == 1 {
            g.add_edge(i as usize, j as usize)?;
        }
    }
    let used = m % 6;
    if used != 0 {
        let last = bytes[want - 1] - 63;
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(parse_err(base + want - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    let m = pair_count(n);
    let mut out = String::with_capacity(1 + m.div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in PAIRS[..m].chunks(6) {
        let mut v = 0u8;
        for (k, &(i, j)) in chunk.iter().enumerate() {
            if g.has_edge(i as usize, j as usize) {
                v |= 1 << (5 - k);
            }
        }
        out.push((v + 63) as char);
    }
    out
}

/// Parses `u-v,u-v,...` (whitespace ignored, empty allowed).
pub fn parse_pairs(s: &str) -> Result<Vec<Pair>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    compact
        .split(',')
        .map(|item| {
            let (u, v) = item
                .split_once('-')
                .ok_or_else(|| invalid(format!("pair '{item}' is not of the form u-v")))?;
            let u: usize = u.parse().map_err(|_| invalid(format!("bad vertex '{u}' in '{item}'")))?;
            let v: usize = v.parse().map_err(|_| invalid(format!("bad vertex '{v}' in '{item}'")))?;
            if u == v {
                return Err(invalid(format!("loop {item}")));
            }
            Ok(Pair::new(u, v))
        })
        .collect()
}

/// Parses `n=<int>; R=<pairs>; B=<pairs>`; `R` and `B` may be omitted.
pub fn parse_colored(s: &str) -> Result<ColoredGraph> {
    let mut n = None;
    let mut red = None;
    let mut blue = None;
    for field in s.split(';') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| invalid(format!("field '{field}' has no '='")))?;
        let slot = match key.trim() {
            "n" => {
                let v = value.trim();
                let parsed: usize = v.parse().map_err(|_| invalid(format!("bad vertex count '{v}'")))?;
                if n.replace(parsed).is_some() {
                    return Err(invalid("field n given twice"));
                }
                continue;
            }
            "R" => &mut red,
            "B" => &mut blue,
            other => return Err(invalid(format!("unknown field '{other}'"))),
        };
        if slot.replace(parse_pairs(value)?).is_some() {
            return Err(invalid(format!("field {} given twice", key.trim())));
        }
    }
    let n = n.ok_or_else(|| invalid("missing field n"))?;
    let tuples = |ps: Option<Vec<Pair>>| -> Vec<(usize, usize)> {
        ps.unwrap_or_default().iter().map(|p| (p.lo(), p.hi())).collect()
    };
    ColoredGraph::from_pairs(n, &tuples(red), &tuples(blue))
}

pub fn serialize_colored(g: &ColoredGraph) -> String {
    let join = |ps: Vec<Pair>| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    format!("n={}; R={}; B={}", g.order(), join(g.red_pairs()), join(g.blue_pairs()))
}

/// A graph argument: colored record if it contains `n=`, otherwise graph6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Plain(Graph),
    Colored(ColoredGraph),
}

pub fn parse_any(s: &str) -> Result<AnyGraph> {
    if s.contains("n=") || s.contains("n =") {
        parse_colored(s).map(AnyGraph::Colored)
    } else {
        parse_graph6(s.trim().as_bytes()).map(AnyGraph::Plain)
    }
}

/// Lines of a deck file: blank lines and lines starting with `#` are skipped.
pub fn parse_deck_lines(text: &str) -> Result<Vec<AnyGraph>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_any(line).map_err(|e| invalid(format!("line {}: {e}", lineno + 1)))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{enumerate_colored_graphs, Color};
    use crate::graph::enumerate_graphs;

    /// Reference encoder written straight from the format description:
    /// bit string x(0,1) x(0,2) x(1,2) x(0,3) ... padded to a multiple of six.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn known_records() {
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(reference_encode(2, &[]), "A?");
        assert_eq!(reference_encode(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
        assert_eq!(parse_graph6(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(b"A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(serialize_graph6(&Graph::complete(2)), "A_");
        assert_eq!(serialize_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn matches_reference_encoder() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let edges: Vec<(usize, usize)> = g.edges().iter().map(|p| (p.lo(), p.hi())).collect();
                let s = serialize_graph6(&g);
                assert_eq!(s, reference_encode(n, &edges));
                assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        let offset = |s: &[u8]| match parse_graph6(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{other:?}"),
        };
        assert_eq!(offset(b""), 0);
        assert_eq!(offset(b"A "), 1);
        assert_eq!(offset(b"B"), 1);
        assert_eq!(offset(b"Bww"), 2);
        assert_eq!(offset(b"J????????"), 0);
        assert_eq!(offset(b"?"), 0);
        assert_eq!(offset(b"~?@"), 0);
        assert_eq!(offset(b"A`"), 1);
    }

    #[test]
    fn colored_records() {
        let g = parse_colored(" n = 4 ; R = 0-1 , 2-1 ; B = 3-0 ").unwrap();
        assert_eq!(g.color(Pair::new(1, 2)), Some(Color::Red));
        assert_eq!(g.color(Pair::new(0, 3)), Some(Color::Blue));
        assert_eq!(serialize_colored(&g), "n=4; R=0-1,1-2; B=0-3");
        assert_eq!(parse_colored("n=2").unwrap(), ColoredGraph::new(2).unwrap());
        assert_eq!(serialize_colored(&ColoredGraph::new(2).unwrap()), "n=2; R=; B=");
        assert!(parse_colored("n=3; R=0-1; B=1-0").is_err());
        assert!(parse_colored("n=3; R=0-3").is_err());
        assert!(parse_colored("R=0-1").is_err());
        assert!(parse_colored("n=3; Q=0-1").is_err());
        assert!(parse_colored("n=3; R=0-0").is_err());
        for n in 1..=4 {
            for g in enumerate_colored_graphs(n).unwrap() {
                assert_eq!(parse_colored(&serialize_colored(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn any_and_decks() {
        assert!(matches!(parse_any("Bw").unwrap(), AnyGraph::Plain(_)));
        assert!(matches!(parse_any("n=2; R=0-1").unwrap(), AnyGraph::Colored(_)));
        let d = parse_deck_lines("# P3 deck\nA_\n\nA?\nA_\n").unwrap();
        assert_eq!(d.len(), 3);
        assert!(parse_deck_lines("A_\nA!\n").unwrap_err().to_string().contains("line 2"));
    }
}
