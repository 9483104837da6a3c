//! graph6 encoding (McKay's `formats.txt`), for orders up to 62.
//!
//! The upper triangle is read column by column, `x(0,1) x(0,2) x(1,2) ...`,
//! packed six bits per byte, most significant first, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).trim_end();
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6("empty string".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("bad order byte {first}")));
    }
    if first == 126 {
        return Err(Error::Graph6("orders above 62 are not supported".into()));
    }
    let n = (first - 63) as usize;
    if n > super::MAX_ORDER {
        return Err(Error::TooLarge {
            operation: "graph6 decode",
            order: n,
            max: super::MAX_ORDER,
        });
    }
    let m = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != m.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {n}, found {}",
            m.div_ceil(6),
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("bad data byte {b}")));
        }
        let v = b - 63;
        for t in (0..6).rev() {
            data.push(v >> t & 1);
        }
    }
    if data[m..].iter().any(|&b| b != 0) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if data[idx] == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}
