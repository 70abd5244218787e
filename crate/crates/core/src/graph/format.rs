//! graph6, sparse6 and plain edge-list encodings.
//!
//! Parse errors carry the byte offset of the first offending byte.

use std::fmt;
use std::str::FromStr;

use super::{Edge, GraphError, Multigraph, Result};

/// Inputs declaring more vertices than this are rejected.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Sparse6,
    EdgeList,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Sparse6 => "sparse6",
            Format::EdgeList => "edgelist",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "sparse6" | "s6" => Ok(Format::Sparse6),
            "edgelist" | "edges" | "el" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn malformed(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::MalformedInput {
        offset,
        reason: reason.into(),
    }
}

/// Guesses the format from the first non-blank byte.
pub fn detect(input: &[u8]) -> Format {
    let trimmed = trim_start(input);
    if trimmed.starts_with(b">>sparse6<<") || trimmed.first() == Some(&b':') {
        Format::Sparse6
    } else if trimmed.starts_with(b">>graph6<<") {
        Format::Graph6
    } else if trimmed.first().is_some_and(|b| b.is_ascii_digit() || *b == b'#') {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

fn trim_start(input: &[u8]) -> &[u8] {
    let skip = input.iter().take_while(|b| b.is_ascii_whitespace()).count();
    &input[skip..]
}

fn trim_end(input: &[u8]) -> &[u8] {
    let keep = input.len() - input.iter().rev().take_while(|b| b.is_ascii_whitespace()).count();
    &input[..keep]
}

/// Parses a single graph. `None` selects the format by [`detect`].
pub fn parse(input: &[u8], format: Option<Format>) -> Result<Multigraph> {
    match format.unwrap_or_else(|| detect(input)) {
        Format::Graph6 => parse_graph6(input),
        Format::Sparse6 => parse_sparse6(input),
        Format::EdgeList => parse_edge_list(input),
    }
}

/// One graph from a multi-graph stream, tagged with its 1-based starting line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub graph: Result<Multigraph>,
}

/// Parses every graph in a stream: one per non-blank line for graph6 and
/// sparse6, back-to-back `n m` blocks for edge lists. Error offsets are
/// relative to the whole input.
pub fn parse_all(input: &[u8], format: Option<Format>) -> Vec<Record> {
    let format = format.unwrap_or_else(|| detect(input));
    if format == Format::EdgeList {
        return parse_edge_list_stream(input);
    }
    let mut out = Vec::new();
    let mut start = 0;
    for (idx, raw) in input.split(|&b| b == b'\n').enumerate() {
        let line_start = start;
        start += raw.len() + 1;
        if trim_end(raw).is_empty() {
            continue;
        }
        let graph = match format {
            Format::Graph6 => parse_graph6(raw),
            _ => parse_sparse6(raw),
        }
        .map_err(|e| match e {
            GraphError::MalformedInput { offset, reason } => malformed(line_start + offset, reason),
            other => other,
        });
        out.push(Record {
            line: idx + 1,
            graph,
        });
    }
    out
}

/// Reads `N(n)` starting at `pos`; returns `(n, next position)`.
fn read_size(s: &[u8], pos: usize) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<u64> {
        match s.get(i) {
            None => Err(malformed(i, "input ends inside the vertex count")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(_) => Err(malformed(i, "byte outside the printable range 63..=126")),
        }
    };
    let first = byte(pos)?;
    let (n, next) = if first < 63 {
        (first, pos + 1)
    } else if byte(pos + 1)? < 63 {
        let mut n = 0;
        for i in 0..3 {
            n = (n << 6) | byte(pos + 1 + i)?;
        }
        (n, pos + 4)
    } else {
        let mut n = 0;
        for i in 0..6 {
            n = (n << 6) | byte(pos + 2 + i)?;
        }
        (n, pos + 8)
    };
    if n > MAX_VERTICES as u64 {
        return Err(malformed(pos, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    Ok((n as usize, next))
}

fn write_size(n: usize, out: &mut String) {
    let n = n as u64;
    let push = |out: &mut String, v: u64| out.push((63 + (v & 63) as u8) as char);
    if n <= 62 {
        push(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push(out, n >> shift);
        }
    }
}

pub fn parse_graph6(input: &[u8]) -> Result<Multigraph> {
    let s = trim_end(input);
    let mut pos = 0;
    if s.starts_with(b">>graph6<<") {
        pos = 10;
    }
    let (n, data) = read_size(s, pos)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = s.len() - data;
    if have < need {
        return Err(malformed(s.len(), format!("expected {need} data bytes, found {have}")));
    }
    if have > need {
        return Err(malformed(data + need, "trailing bytes after adjacency data"));
    }
    let mut g = Multigraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let at = data + k / 6;
            let b = s[at];
            if !(63..=126).contains(&b) {
                return Err(malformed(at, "byte outside the printable range 63..=126"));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    // validate padding bytes that carried no edge bits
    for (at, &b) in s.iter().enumerate().skip(data) {
        if !(63..=126).contains(&b) {
            return Err(malformed(at, "byte outside the printable range 63..=126"));
        }
    }
    Ok(g)
}

/// graph6 text (no newline) for a simple graph.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    let n = g.n();
    let mut out = String::new();
    write_size(n, &mut out);
    let pairs = g.simple_pairs();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | pairs.contains(&(i, j)) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

fn bits_for(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

pub fn parse_sparse6(input: &[u8]) -> Result<Multigraph> {
    let s = trim_end(input);
    let mut pos = 0;
    if s.starts_with(b">>sparse6<<") {
        pos = 11;
    }
    if s.get(pos) != Some(&b':') {
        return Err(malformed(pos, "sparse6 data must start with ':'"));
    }
    let (n, data) = read_size(s, pos + 1)?;
    let k = bits_for(n);
    let mut bits = Vec::with_capacity((s.len() - data) * 6);
    for (at, &b) in s.iter().enumerate().skip(data) {
        if !(63..=126).contains(&b) {
            return Err(malformed(at, "byte outside the printable range 63..=126"));
        }
        for shift in (0..6).rev() {
            bits.push((b - 63) >> shift & 1);
        }
    }
    let mut g = Multigraph::new(n);
    let mut v = 0usize;
    let mut i = 0;
    while i + 1 + k as usize <= bits.len() {
        if bits[i] == 1 {
            v += 1;
        }
        let mut x = 0usize;
        for t in 0..k as usize {
            x = (x << 1) | bits[i + 1 + t] as usize;
        }
        i += 1 + k as usize;
        if x > v {
            v = x;
        } else if v < n {
            g.add_edge(x, v).expect("x <= v < n");
        }
    }
    Ok(g)
}

/// sparse6 text (no newline); loops and parallel edges are preserved.
pub fn to_sparse6(g: &Multigraph) -> String {
    let n = g.n();
    let k = bits_for(n) as usize;
    let mut bits: Vec<u8> = Vec::new();
    let push = |bits: &mut Vec<u8>, b: u8, x: usize| {
        bits.push(b);
        for t in (0..k).rev() {
            bits.push((x >> t & 1) as u8);
        }
    };
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.u.max(e.v), e.u.min(e.v)))
        .collect();
    pairs.sort_unstable();
    let mut cur = 0;
    for (v, u) in pairs {
        if v == cur {
            push(&mut bits, 0, u);
        } else if v == cur + 1 {
            push(&mut bits, 1, u);
        } else {
            push(&mut bits, 1, v);
            push(&mut bits, 0, u);
        }
        cur = v;
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == 1 << k && cur + 2 == n && pad > k {
        bits.push(0);
        bits.extend(std::iter::repeat_n(1, pad - 1));
    } else {
        bits.extend(std::iter::repeat_n(1, pad));
    }
    let mut out = String::from(":");
    write_size(n, &mut out);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |a, &b| (a << 1) | b);
        out.push((v + 63) as char);
    }
    out
}

struct Tokens<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Tokens<'a> {
    fn new(s: &'a [u8]) -> Self {
        Tokens { s, pos: 0, line: 1 }
    }

    /// Next token as `(offset, line, text)`, skipping blanks and `#` comments.
    fn next(&mut self) -> Option<(usize, usize, &'a [u8])> {
        loop {
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
                if self.s[self.pos] == b'\n' {
                    self.line += 1;
                }
                self.pos += 1;
            }
            if self.s.get(self.pos) == Some(&b'#') {
                while self.pos < self.s.len() && self.s[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
        if self.pos >= self.s.len() {
            return None;
        }
        let start = self.pos;
        while self.pos < self.s.len() && !self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        Some((start, self.line, &self.s[start..self.pos]))
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize)> {
        let Some((at, _, tok)) = self.next() else {
            return Err(malformed(self.s.len(), format!("input ends before {what}")));
        };
        let value = std::str::from_utf8(tok)
            .ok()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| malformed(at, format!("expected a non-negative integer for {what}")))?;
        Ok((at, value))
    }
}

fn edge_list_block(tokens: &mut Tokens<'_>, header_at: usize, n: usize) -> Result<Multigraph> {
    if n > MAX_VERTICES {
        return Err(malformed(header_at, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    let (m_at, m) = tokens.number("the edge count")?;
    // each edge needs at least four bytes of input
    if m > tokens.s.len() / 4 + 1 {
        return Err(malformed(m_at, "edge count larger than the input can hold"));
    }
    let mut edges = Vec::with_capacity(m);
    for id in 0..m {
        let mut ends = [0; 2];
        for end in &mut ends {
            let (at, x) = tokens.number("an edge endpoint")?;
            if x >= n {
                return Err(malformed(at, format!("vertex {x} out of range for n = {n}")));
            }
            *end = x;
        }
        edges.push(Edge {
            id,
            u: ends[0],
            v: ends[1],
        });
    }
    Multigraph::from_edges(n, edges)
}

/// `n m` followed by `m` endpoint pairs; `#` starts a comment.
pub fn parse_edge_list(input: &[u8]) -> Result<Multigraph> {
    let mut tokens = Tokens::new(input);
    let (at, n) = tokens.number("the vertex count")?;
    let g = edge_list_block(&mut tokens, at, n)?;
    if let Some((extra, _, _)) = tokens.next() {
        return Err(malformed(extra, "trailing data after the last edge"));
    }
    Ok(g)
}

fn parse_edge_list_stream(input: &[u8]) -> Vec<Record> {
    let mut tokens = Tokens::new(input);
    let mut out = Vec::new();
    while let Some((at, line, tok)) = tokens.next() {
        let n = std::str::from_utf8(tok).ok().and_then(|t| t.parse::<usize>().ok());
        let graph = match n {
            Some(n) => edge_list_block(&mut tokens, at, n),
            None => Err(malformed(at, "expected a non-negative integer for the vertex count")),
        };
        let failed = graph.is_err();
        out.push(Record { line, graph });
        if failed {
            break;
        }
    }
    out
}

pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}
