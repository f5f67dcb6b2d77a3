use super::{Graph, GraphError};

/// Parses the edge-list text format: a first line holding `n`, then one
/// `u v` pair per line with 0-based labels. Blank lines are ignored.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph, GraphError> {
    let text = std::str::from_utf8(text).map_err(|e| GraphError::Malformed { line: 1, message: format!("invalid UTF-8: {e}") })?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed { line: 1, message: "missing vertex count".into() })?;
    let n: usize = header.parse().map_err(|_| GraphError::Malformed {
        line: header_line,
        message: format!("expected vertex count, found {header:?}"),
    })?;

    let mut g = Graph::empty(n);
    for (line, content) in lines {
        let mut fields = content.split_whitespace();
        let mut label = || -> Result<usize, GraphError> {
            let field = fields.next().ok_or(GraphError::Malformed { line, message: "expected two labels".into() })?;
            field.parse().map_err(|_| GraphError::Malformed { line, message: format!("bad label {field:?}") })
        };
        let u = label()?;
        let v = label()?;
        if fields.next().is_some() {
            return Err(GraphError::Malformed { line, message: "trailing fields".into() });
        }
        g.insert_edge(u, v, line)?;
    }
    g.normalize();
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const MAX_GRAPH6_ORDER: usize = (1 << 36) - 1;

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let value = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(GraphError::Graph6("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), 8)),
        [126, 126, ..] => Err(GraphError::Graph6("truncated 8-byte size".into())),
        [126, rest @ ..] if rest.len() >= 3 => Ok((value(&rest[..3]), 4)),
        [126, ..] => Err(GraphError::Graph6("truncated 4-byte size".into())),
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Decodes one graph6 string (surrounding whitespace ignored, no `>>graph6<<`
/// header).
pub fn parse_graph6(text: &[u8]) -> Result<Graph, GraphError> {
    let text = text.trim_ascii();
    if let Some(pos) = text.iter().position(|b| !(63..=126).contains(b)) {
        return Err(GraphError::Graph6(format!("byte {} at offset {pos} outside 63..=126", text[pos])));
    }
    let (n, offset) = decode_size(text)?;
    let body = &text[offset..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!("expected {expected} data bytes for n = {n}, found {}", body.len())));
    }

    let mut g = Graph::empty(n);
    let mut k: usize = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk & (0x20 >> (k % 6)) != 0 {
                g.adjacency[i].push(j);
                g.adjacency[j].push(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let padding = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - 63) & padding != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    g.normalize();
    Ok(g)
}

fn encode_size(n: usize) -> Vec<u8> {
    let digits = |count: u32| (0..count).rev().map(move |s| ((n >> (6 * s)) & 63) as u8 + 63);
    if n < 63 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        std::iter::once(126).chain(digits(3)).collect()
    } else {
        [126, 126].into_iter().chain(digits(6)).collect()
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 cannot encode {n} vertices");
    let mut out = encode_size(n);
    let mut chunk = 0u8;
    let mut k: usize = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                chunk |= 0x20 >> (k % 6);
            }
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
