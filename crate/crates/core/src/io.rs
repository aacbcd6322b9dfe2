//! Text format for hypergraphs and patterns.
//!
//! The format is line oriented: the first significant line holds the vertex
//! count `n`, every following significant line holds four whitespace-separated
//! 0-based vertex indices. Blank lines and lines starting with `#` are
//! skipped. The writer emits edges in lexicographic order, so
//! `read(write(h)) == h` byte-for-byte modulo the original's comments.

use crate::error::{Error, Result};
use crate::hypergraph::{Edge4, Hypergraph4};
use std::io::{BufRead, Write};
use std::path::Path;

/// Outcome of parsing: the hypergraph plus non-fatal warnings
/// (currently only duplicate-edge notices; duplicates are dropped).
#[derive(Debug)]
pub struct ReadOutcome {
    pub hypergraph: Hypergraph4,
    pub warnings: Vec<String>,
}

pub fn read_hypergraph<R: BufRead>(reader: R) -> Result<ReadOutcome> {
    let mut n: Option<u32> = None;
    let mut h = Hypergraph4::new(0);
    let mut warnings = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match n {
            None => {
                let parsed = trimmed.parse::<u32>().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("expected vertex count, got `{trimmed}`"),
                })?;
                n = Some(parsed);
                h = Hypergraph4::new(parsed);
            }
            Some(n) => {
                let mut vs = [0u32; 4];
                let tokens: Vec<&str> = trimmed.split_whitespace().collect();
                if tokens.len() != 4 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("expected 4 vertex indices, got {}", tokens.len()),
                    });
                }
                for (slot, tok) in vs.iter_mut().zip(&tokens) {
                    *slot = tok.parse::<u32>().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("invalid vertex index `{tok}`"),
                    })?;
                }
                let edge = Edge4::new(vs).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                if edge.vertices()[3] >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex {} out of range for n={}", edge.vertices()[3], n),
                    });
                }
                if !h.add_edge(edge).expect("range checked above") {
                    warnings.push(format!("line {lineno}: duplicate edge {edge:?} ignored"));
                }
            }
        }
    }
    if n.is_none() {
        return Err(Error::Parse {
            line: 0,
            msg: "empty input: missing vertex count line".into(),
        });
    }
    Ok(ReadOutcome {
        hypergraph: h,
        warnings,
    })
}

pub fn write_hypergraph<W: Write>(h: &Hypergraph4, mut writer: W) -> Result<()> {
    writeln!(writer, "{}", h.vertex_count())?;
    for e in h.edges() {
        writeln!(writer, "{e}")?;
    }
    Ok(())
}

pub fn read_hypergraph_file(path: &Path) -> Result<ReadOutcome> {
    let file = std::fs::File::open(path)?;
    read_hypergraph(std::io::BufReader::new(file))
}

pub fn write_hypergraph_file(h: &Hypergraph4, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_hypergraph(h, std::io::BufWriter::new(file))
}
