use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use trifree::{decode_graph6, Graph, VertexSet};

/// Where command output goes.
pub struct Sink(Option<PathBuf>);

impl Sink {
    pub fn new(path: Option<PathBuf>) -> Self {
        Sink(path)
    }

    pub fn write(&self, text: &str) -> Result<()> {
        match &self.0 {
            Some(p) => {
                std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

pub fn csv_line<I, S>(fields: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let cells: Vec<String> = fields
        .into_iter()
        .map(|f| {
            let f = f.as_ref();
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.to_string()
            }
        })
        .collect();
    cells.join(",") + "\n"
}

/// Parses `1,3,5` (braces and blanks allowed) into a set of vertices below `n`.
pub fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = VertexSet::EMPTY;
    for item in body.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let v: usize = item
            .parse()
            .with_context(|| format!("bad vertex {item:?} in {text:?}"))?;
        if v >= n {
            bail!("vertex {v} is out of range for order {n}");
        }
        set.insert(v);
    }
    Ok(set)
}

fn read_text(input: Option<&Path>) -> Result<String> {
    match input {
        Some(p) => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("cannot read stdin")?;
            Ok(s)
        }
    }
}

/// All graph6 lines of the input; blank lines and `>>graph6<<` headers are skipped.
pub fn read_graphs(input: Option<&Path>) -> Result<Vec<Graph>> {
    let text = read_text(input)?;
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim().trim_start_matches(">>graph6<<")))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| decode_graph6(l.as_bytes()).with_context(|| format!("line {}", i + 1)))
        .collect()
}

pub fn read_graph(input: Option<&Path>) -> Result<Graph> {
    let mut gs = read_graphs(input)?;
    match gs.len() {
        1 => Ok(gs.remove(0)),
        0 => bail!("no graph in input"),
        k => bail!("expected one graph, found {k}"),
    }
}
