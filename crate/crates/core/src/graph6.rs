//! The graph6 ASCII format for small simple graphs.
//!
//! Layout: one header byte `chr(n + 63)` for orders up to 62, then the upper
//! triangle of the adjacency matrix read column by column - bit (i, j) with
//! i < j comes before bit (k, l) iff j < l or (j == l and i < k). The bit
//! stream is padded with zeros to a multiple of six and each 6-bit group is
//! emitted as `chr(group + 63)`, most significant bit first.

use crate::graph::{Graph, GraphError};

/// Largest order representable with the single-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphError::OrderTooLarge {
            n,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = Vec::new();
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("6-bit groups offset by 63 are ascii"))
}

/// Parses one graph6 line. Only the single-byte header (n <= 62) is
/// supported, matching what `to_graph6` emits.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedGraph6("empty line".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::MalformedGraph6(format!(
            "byte {b} outside graph6 range 63..=126"
        )));
    }
    if bytes[0] == 126 {
        return Err(GraphError::MalformedGraph6(
            "multi-byte order header not supported (n > 62)".into(),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(GraphError::MalformedGraph6(format!(
            "expected {expected} bytes for order {n}, got {}",
            bytes.len()
        )));
    }
    let bit = |pos: usize| -> bool {
        let b = bytes[1 + pos / 6] - 63;
        (b >> (5 - pos % 6)) & 1 == 1
    };
    let mut pairs = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                pairs.push((i, j));
            }
            pos += 1;
        }
    }
    // Padding bits must be zero.
    for tail in pos..(bytes.len() - 1) * 6 {
        if bit(tail) {
            return Err(GraphError::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Parses a newline-delimited graph6 stream, skipping blank lines and the
/// optional `>>graph6<<` header.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut graphs = Vec::new();
    for line in text.lines() {
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line)?);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_examples() {
        // Order zero: the bare header byte '?'.
        let g = parse_graph6("?").unwrap();
        assert_eq!((g.order(), g.size()), (0, 0));
        assert_eq!(to_graph6(&g).unwrap(), "?");

        // Empty graph on one vertex: header only.
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));

        // K2: N(2)='A', single 1 bit padded to 100000 -> 32+63=95='_'.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        assert_eq!(to_graph6(&k2).unwrap(), "A_");

        // C3: N(3)='B', bits 111 padded to 111000 -> 56+63=119='w'.
        let c3 = parse_graph6("Bw").unwrap();
        assert_eq!((c3.order(), c3.size()), (3, 3));
        assert_eq!(to_graph6(&c3).unwrap(), "Bw");

        let empty1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(to_graph6(&empty1).unwrap(), "@");
    }

    #[test]
    fn column_major_bit_order() {
        // P3 as 0-1, 1-2: bits are (0,1)=1, (0,2)=0, (1,2)=1 -> 101000 -> 'g'.
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3).unwrap(), "Bg");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err()); // missing body byte
        assert!(parse_graph6("A_extra").is_err());
        assert!(parse_graph6("\u{7f}").is_err()); // byte 127 out of range
        assert!(parse_graph6("~??").is_err()); // multi-byte header
        assert!(parse_graph6("AW").is_err()); // nonzero padding for n=2
    }

    #[test]
    fn petersen_round_trip() {
        let p = Graph::petersen();
        let code = to_graph6(&p).unwrap();
        assert_eq!(parse_graph6(&code).unwrap(), p);
    }

    #[test]
    fn stream_parsing() {
        let text = ">>graph6<<A_\nBw\n\n@\n";
        let graphs = parse_graph6_stream(text).unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[0].size(), 1);
        assert_eq!(graphs[1].size(), 3);
        assert_eq!(graphs[2].order(), 1);
    }

    #[test]
    fn order_cap() {
        let big = Graph::from_edge_list(63, &[]).unwrap();
        assert!(matches!(
            to_graph6(&big),
            Err(GraphError::OrderTooLarge { .. })
        ));
    }
}
