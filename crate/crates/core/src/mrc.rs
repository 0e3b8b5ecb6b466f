//! `.mrc` coloring certificates.
//!
//! ```text
//! mrc 1
//! parts 1 1 1 1 1
//! colors 2
//! e 0 1 0
//! e 0 2 1
//! ...
//! ```
//!
//! One `e u v c` line per cross edge (`u < v`, 0-based ids and colors). The
//! writer emits edges in canonical host order; the reader accepts any order
//! but insists on every cross edge exactly once.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Coloring, PartStructure, UNASSIGNED};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Certificate {
        line,
        message: message.into(),
    }
}

/// Renders a total coloring. Panics if the coloring is partial.
pub fn to_mrc_string(coloring: &Coloring) -> String {
    coloring
        .require_total()
        .expect("only total colorings have certificates");
    let host = coloring.host();
    let mut out = String::with_capacity(16 + host.edge_count() * 10);
    out.push_str("mrc 1\nparts");
    for s in host.part_sizes() {
        write!(out, " {s}").unwrap();
    }
    writeln!(out, "\ncolors {}", coloring.color_count()).unwrap();
    for (&(u, v), &c) in host.edges().iter().zip(coloring.assignment()) {
        writeln!(out, "e {u} {v} {c}").unwrap();
    }
    out
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| err(line, format!("expected {what}, found `{tok}`")))
}

pub fn parse_mrc(text: &str) -> Result<Coloring> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    let mut header = |expect: &str| -> Result<(usize, Vec<&str>)> {
        let (no, line) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| err(0, format!("missing `{expect}` line")))?;
        let mut toks = line.split_whitespace();
        if toks.next() != Some(expect) {
            return Err(err(no, format!("expected `{expect}` line, found `{line}`")));
        }
        Ok((no, toks.collect()))
    };

    let (no, version) = header("mrc")?;
    if version != ["1"] {
        return Err(err(no, "unsupported version (expected `mrc 1`)"));
    }
    let (no, sizes) = header("parts")?;
    let sizes = sizes
        .iter()
        .map(|t| parse_num(t, no, "part size"))
        .collect::<Result<Vec<_>>>()?;
    let host = Arc::new(PartStructure::new(&sizes).map_err(|e| err(no, e.to_string()))?);
    let (no, k) = header("colors")?;
    let k = match k.as_slice() {
        [k] => parse_num(k, no, "color count")?,
        _ => return Err(err(no, "expected `colors k`")),
    };
    let mut coloring = Coloring::new(host.clone(), k).map_err(|e| err(no, e.to_string()))?;

    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [tag, u, v, c] = toks[..] else {
            return Err(err(no, format!("expected `e u v c`, found `{line}`")));
        };
        if tag != "e" {
            return Err(err(no, format!("expected `e u v c`, found `{line}`")));
        }
        let u = parse_num(u, no, "vertex id")?;
        let v = parse_num(v, no, "vertex id")?;
        let c = parse_num(c, no, "color")?;
        if u >= v {
            return Err(err(no, format!("`{line}`: endpoints must satisfy u < v")));
        }
        if v >= host.vertex_count() {
            return Err(err(no, format!("`{line}`: vertex {v} out of range")));
        }
        let Some(e) = host.edge_index(u, v) else {
            return Err(err(
                no,
                format!("`{line}`: {u} and {v} lie in the same part"),
            ));
        };
        if c >= k {
            return Err(err(no, format!("`{line}`: color {c} >= k = {k}")));
        }
        if coloring.assignment()[e] != UNASSIGNED {
            return Err(err(no, format!("duplicate edge `{line}`")));
        }
        coloring.set_index(e, c as u8)?;
    }

    if let Some(e) = coloring.assignment().iter().position(|&c| c == UNASSIGNED) {
        let (u, v) = host.edges()[e];
        return Err(err(0, format!("missing edge `e {u} {v} _`")));
    }
    Ok(coloring)
}

pub fn write_mrc(coloring: &Coloring, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_mrc_string(coloring))?;
    Ok(())
}

pub fn read_mrc(path: impl AsRef<Path>) -> Result<Coloring> {
    parse_mrc(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_text(lines: &[&str]) -> String {
        let mut s = String::from("mrc 1\nparts 1 1 1\ncolors 2\n");
        for l in lines {
            s.push_str(l);
            s.push('\n');
        }
        s
    }

    #[test]
    fn exact_layout() {
        let host = Arc::new(PartStructure::new(&[1, 2]).unwrap());
        let c = Coloring::from_fn(host, 2, |u, _| (u % 2) as u8).unwrap();
        assert_eq!(
            to_mrc_string(&c),
            "mrc 1\nparts 1 2\ncolors 2\ne 0 1 0\ne 0 2 0\n"
        );
    }

    #[test]
    fn accepts_any_order() {
        let c = parse_mrc(&k3_text(&["e 1 2 1", "e 0 2 0", "e 0 1 1"])).unwrap();
        assert_eq!(c.get(1, 2), Some(1));
        assert_eq!(c.get(0, 2), Some(0));
    }

    #[test]
    fn duplicate_edge_named() {
        let e = parse_mrc(&k3_text(&["e 0 1 0", "e 0 2 0", "e 0 1 1", "e 1 2 0"])).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("line 6") && msg.contains("e 0 1 1"), "{msg}");
    }

    #[test]
    fn missing_edge_named() {
        let msg = parse_mrc(&k3_text(&["e 0 1 0", "e 0 2 0"]))
            .unwrap_err()
            .to_string();
        assert!(msg.contains("e 1 2"), "{msg}");
    }

    #[test]
    fn same_part_edge_rejected() {
        let text = "mrc 1\nparts 2 1\ncolors 1\ne 0 1 0\ne 0 2 0\ne 1 2 0\n";
        let msg = parse_mrc(text).unwrap_err().to_string();
        assert!(msg.contains("line 4") && msg.contains("same part"), "{msg}");
    }

    #[test]
    fn color_out_of_range() {
        let msg = parse_mrc(&k3_text(&["e 0 1 2", "e 0 2 0", "e 1 2 0"]))
            .unwrap_err()
            .to_string();
        assert!(msg.contains("line 4") && msg.contains("k = 2"), "{msg}");
    }

    #[test]
    fn bad_headers() {
        assert!(parse_mrc("mrc 2\nparts 1 1\ncolors 1\ne 0 1 0\n").is_err());
        assert!(parse_mrc("parts 1 1\ncolors 1\n").is_err());
        assert!(parse_mrc("mrc 1\nparts 1 0\ncolors 1\n").is_err());
        assert!(parse_mrc("mrc 1\nparts 1 1\ncolors 1\ne 1 0 0\n").is_err());
        assert!(parse_mrc("mrc 1\nparts 1 1\ncolors 1\nx 0 1 0\n").is_err());
    }

    proptest::proptest! {
        #[test]
        fn round_trip(sizes in proptest::collection::vec(1usize..4, 1..6), k in 1usize..5, salt in 0usize..97) {
            let host = Arc::new(PartStructure::new(&sizes).unwrap());
            let c = Coloring::from_fn(host, k, |u, v| ((u * 31 + v * 17 + salt) % k) as u8).unwrap();
            let text = to_mrc_string(&c);
            let back = parse_mrc(&text).unwrap();
            proptest::prop_assert_eq!(&back, &c);
            proptest::prop_assert_eq!(to_mrc_string(&back), text);
        }
    }
}
