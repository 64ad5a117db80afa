//! Text forms of vertices.
//!
//! For `a <= 10` a vertex is a string of digits (`0120`); larger alphabets use
//! comma-separated integers (`0,13,7`). Inline vertex lists separate vertices
//! with `,` in the digit form and `;` in the comma form.

use super::{GraphError, HammingGraph, Vertex};

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_at(g: &HammingGraph, s: &str, line: usize) -> Result<Vertex, GraphError> {
    let s = s.trim();
    let symbols: Vec<usize> = if g.a() <= 10 {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| parse_error(line, format!("`{s}` is not a digit string")))?
    } else {
        s.split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| parse_error(line, format!("`{s}` is not a comma-separated symbol list")))?
    };
    if symbols.len() != g.k() {
        return Err(GraphError::LengthMismatch {
            expected: g.k(),
            found: symbols.len(),
        });
    }
    if let Some(&symbol) = symbols.iter().find(|&&x| x >= g.a()) {
        return Err(GraphError::SymbolOutOfRange { symbol, a: g.a() });
    }
    Ok(Vertex::new(symbols.into_iter().map(|x| x as u8).collect()))
}

pub fn parse_vertex(g: &HammingGraph, s: &str) -> Result<Vertex, GraphError> {
    parse_at(g, s, 1)
}

pub fn format_vertex(g: &HammingGraph, v: &Vertex) -> String {
    let parts: Vec<String> = v.symbols().iter().map(u8::to_string).collect();
    if g.a() <= 10 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

/// An inline list such as `100,101,001`.
pub fn parse_vertex_list(g: &HammingGraph, s: &str) -> Result<Vec<Vertex>, GraphError> {
    let sep = if g.a() <= 10 { ',' } else { ';' };
    s.split(sep)
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_at(g, t, 1))
        .collect()
}

/// One vertex per line; `#` starts a comment, blank lines are skipped.
pub fn parse_set_file(g: &HammingGraph, text: &str) -> Result<Vec<Vertex>, GraphError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_at(g, line, i + 1).map_err(|e| match e {
            GraphError::LengthMismatch { expected, found } => parse_error(
                i + 1,
                format!("vertex has length {found}, expected {expected}"),
            ),
            GraphError::SymbolOutOfRange { symbol, a } => parse_error(
                i + 1,
                format!("symbol {symbol} is outside the alphabet 0..{a}"),
            ),
            other => other,
        })?);
    }
    Ok(out)
}
