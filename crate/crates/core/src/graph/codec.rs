//! graph6 (short form) and a plain edge-list text format.

use super::Graph;
use crate::error::FormatError;

const GRAPH6_MAX: usize = 62;

/// Encodes `g` in graph6: one byte `n + 63`, then the upper triangle in
/// column order (`j` from 1, `i < j`), six bits per byte plus 63.
pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX {
        return Err(FormatError::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
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

/// Decodes one graph6 line; a trailing newline or `\r\n` is tolerated.
pub fn decode_graph6(line: &[u8]) -> Result<Graph, FormatError> {
    let line = trim_line_end(line);
    let (&head, body) = line.split_first().ok_or(FormatError::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(FormatError::BadByte(head));
    }
    if head == 126 {
        return Err(FormatError::BadHeader(head));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Length {
            expected,
            got: body.len(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::BadByte(byte));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(FormatError::BadByte(last));
        }
        let used = nbits - 6 * (expected - 1);
        if (last - 63) & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(FormatError::Padding);
        }
    }
    Ok(g)
}

fn trim_line_end(mut line: &[u8]) -> &[u8] {
    while let [rest @ .., b'\n' | b'\r'] = line {
        line = rest;
    }
    line
}

/// Parses the edge-list format: first data line `n`, then `u v` per edge,
/// 0-based. Blank lines and `#` comments are ignored.
pub fn decode_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| FormatError::EdgeList { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match &mut g {
            None => {
                let [count] = fields[..] else {
                    return Err(err(format!("expected vertex count, got {line:?}")));
                };
                let n: usize = count
                    .parse()
                    .map_err(|_| err(format!("bad vertex count {count:?}")))?;
                g = Some(Graph::empty(n)?);
            }
            Some(g) => {
                let [a, b] = fields[..] else {
                    return Err(err(format!("expected \"u v\", got {line:?}")));
                };
                let u: usize = a.parse().map_err(|_| err(format!("bad vertex {a:?}")))?;
                let v: usize = b.parse().map_err(|_| err(format!("bad vertex {b:?}")))?;
                g.try_add_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
        }
    }
    g.ok_or(FormatError::EdgeList {
        line: 0,
        msg: "missing vertex count".into(),
    })
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        // pairs (0,1),(0,2),(1,2) -> bits 1,0,1 -> 101000 = 40 -> 'g'
        assert_eq!(encode_graph6(&Graph::path(3).unwrap()).unwrap(), "Bg");
        assert_eq!(encode_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn decode_tolerates_newline() {
        assert_eq!(decode_graph6(b"Bg\n").unwrap(), Graph::path(3).unwrap());
        assert_eq!(decode_graph6(b"Bg\r\n").unwrap(), Graph::path(3).unwrap());
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(decode_graph6(b""), Err(FormatError::Empty)));
        assert!(matches!(
            decode_graph6(b"~"),
            Err(FormatError::BadHeader(126))
        ));
        assert!(matches!(decode_graph6(b" "), Err(FormatError::BadByte(32))));
        assert!(matches!(
            decode_graph6(b"B"),
            Err(FormatError::Length {
                expected: 1,
                got: 0
            })
        ));
        assert!(matches!(
            decode_graph6(b"Bgg"),
            Err(FormatError::Length { .. })
        ));
        assert!(matches!(
            decode_graph6(b"B\x7f"),
            Err(FormatError::BadByte(0x7f))
        ));
        // 'h' = 41 = 101001: last padding bit set
        assert!(matches!(decode_graph6(b"Bh"), Err(FormatError::Padding)));
    }

    #[test]
    fn edge_list_parse() {
        let text = "# a path\n3\n\n0 1\n1 2 # middle\n";
        assert_eq!(decode_edge_list(text).unwrap(), Graph::path(3).unwrap());
        assert_eq!(
            decode_edge_list(&encode_edge_list(&Graph::cycle(5).unwrap())).unwrap(),
            Graph::cycle(5).unwrap()
        );
        assert!(decode_edge_list("3\n0 3\n").is_err());
        assert!(decode_edge_list("3\n0\n").is_err());
        assert!(decode_edge_list("# nothing\n").is_err());
        assert!(decode_edge_list("x\n").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=62).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let line = encode_graph6(&g).unwrap();
            prop_assert!(line.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode_graph6(line.as_bytes()).unwrap(), g);
        }
    }
}
