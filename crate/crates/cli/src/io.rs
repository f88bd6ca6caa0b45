//! Graph file formats and atomic output.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use avgconn_core::{graph6, Graph};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: String, source: io::Error },
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
}

impl IoError {
    fn file(path: &Path, source: io::Error) -> Self {
        IoError::File { path: path.display().to_string(), source }
    }

    fn parse(path: &Path, line: usize, message: impl Into<String>) -> Self {
        IoError::Parse { path: path.display().to_string(), line, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl GraphFormat {
    /// `.g6` and `.graph6` are graph6; everything else is an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

/// What to do with a malformed graph6 line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnError {
    Abort,
    Skip,
}

/// Decodes a graph6 stream, one graph per nonblank line.
pub struct Graph6Lines<R> {
    reader: R,
    path: String,
    line: usize,
    policy: OnError,
    pub skipped: Vec<(usize, String)>,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R, path: &Path, policy: OnError) -> Self {
        Graph6Lines { reader, path: path.display().to_string(), line: 0, policy, skipped: Vec::new() }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph, IoError>;

    fn next(&mut self) -> Option<Self::Item> {
        let mut buf = String::new();
        loop {
            buf.clear();
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(source) => return Some(Err(IoError::File { path: self.path.clone(), source })),
            }
            self.line += 1;
            let text = buf.trim_end_matches(['\n', '\r']);
            if text.trim().is_empty() {
                continue;
            }
            match graph6::decode(text) {
                Ok(g) => return Some(Ok(g)),
                Err(e) if self.policy == OnError::Skip => self.skipped.push((self.line, e.to_string())),
                Err(e) => {
                    return Some(Err(IoError::Parse { path: self.path.clone(), line: self.line, message: e.to_string() }))
                }
            }
        }
    }
}

pub fn open_graph6(path: &Path, policy: OnError) -> Result<Graph6Lines<io::BufReader<fs::File>>, IoError> {
    let file = fs::File::open(path).map_err(|e| IoError::file(path, e))?;
    Ok(Graph6Lines::new(io::BufReader::new(file), path, policy))
}

/// All graphs of a graph6 file; aborts on the first bad line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, IoError> {
    open_graph6(path, OnError::Abort)?.collect()
}

/// Edge list: a header line `n m`, then `m` lines `u v`. Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str, path: &Path) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let numbers = |line: usize, l: &str| -> Result<(usize, usize), IoError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(IoError::parse(path, line, "expected two nonnegative integers")),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| IoError::parse(path, 1, "missing `n m` header"))?;
    let (n, m) = numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = line;
    for (line, l) in lines {
        edges.push(numbers(line, l)?);
        last = line;
    }
    if edges.len() != m {
        return Err(IoError::parse(path, last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| IoError::parse(path, last, e.to_string()))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT for visual inspection; labelled graphs use their labels as node
/// names.
pub fn format_dot(g: &Graph) -> String {
    let name = |v: usize| g.label(v).map_or_else(|| v.to_string(), |l| l.to_string());
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", name(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// A single graph from a file, in the format implied by its extension.
/// graph6 files must contain exactly one graph.
pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    match GraphFormat::from_path(path) {
        GraphFormat::Graph6 => {
            let mut graphs = read_graph6_file(path)?;
            match graphs.len() {
                1 => Ok(graphs.pop().expect("one graph")),
                n => Err(IoError::parse(path, 1, format!("expected one graph, found {n}"))),
            }
        }
        GraphFormat::EdgeList => {
            let text = fs::read_to_string(path).map_err(|e| IoError::file(path, e))?;
            parse_edge_list(&text, path)
        }
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), IoError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| IoError::file(path, e))?;
    tmp.write_all(contents).map_err(|e| IoError::file(path, e))?;
    tmp.as_file().sync_all().map_err(|e| IoError::file(path, e))?;
    tmp.persist(path).map_err(|e| IoError::file(path, e.error))?;
    Ok(())
}
