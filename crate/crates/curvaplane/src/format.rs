//! The `semiplanar-v1` graph file, boundary-data files, DOT export and atomic writes.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use curvaplane_core::graph::MapError;
use curvaplane_core::tilings::{Embedding, EmbeddingKind};
use curvaplane_core::HalfEdgeMap;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const FORMAT: &str = "semiplanar-v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected format {FORMAT:?}, found {0:?}")]
    WrongFormat(String),
    #[error("invalid map: {0}")]
    Map(#[from] MapError),
    #[error("invalid embedding: {0}")]
    Embedding(String),
    #[error("invalid boundary data: {0}")]
    Boundary(String),
}

/// On-disk shape of a graph file. Coordinates are optional and only written for
/// generated tilings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub format: String,
    pub vertex_count: usize,
    pub faces: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingFile>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingFile {
    pub kind: String,
    pub coordinates: Vec<[f64; 2]>,
}

impl GraphFile {
    pub fn new(map: &HalfEdgeMap, embedding: Option<&Embedding>) -> Self {
        GraphFile {
            format: FORMAT.to_string(),
            vertex_count: map.vertex_count(),
            faces: map.faces().to_vec(),
            embedding: embedding
                .map(|e| EmbeddingFile { kind: e.kind.name().to_string(), coordinates: e.coordinates.clone() }),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: GraphFile = serde_json::from_str(text)?;
        if file.format != FORMAT {
            return Err(FormatError::WrongFormat(file.format));
        }
        Ok(file)
    }

    /// Builds the map, keeping faces in file order.
    pub fn build(&self) -> Result<(HalfEdgeMap, Option<Embedding>), FormatError> {
        let map = HalfEdgeMap::new(self.vertex_count, self.faces.clone())?;
        let embedding = match &self.embedding {
            None => None,
            Some(e) => {
                let kind: EmbeddingKind =
                    e.kind.parse().map_err(|_| FormatError::Embedding(format!("unknown kind {:?}", e.kind)))?;
                if e.coordinates.len() != self.vertex_count {
                    return Err(FormatError::Embedding(format!(
                        "{} coordinates for {} vertices",
                        e.coordinates.len(),
                        self.vertex_count
                    )));
                }
                Some(Embedding { kind, coordinates: e.coordinates.clone() })
            }
        };
        Ok((map, embedding))
    }

    /// Compact JSON with one face per line.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{{\"format\":\"{}\",\"vertex_count\":{},\"faces\":[", self.format, self.vertex_count));
        for (i, f) in self.faces.iter().enumerate() {
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            out.push_str(&serde_json::to_string(f).expect("integer lists serialize"));
        }
        out.push_str("\n]");
        if let Some(e) = &self.embedding {
            out.push_str(",\"embedding\":");
            out.push_str(&serde_json::to_string(e).expect("finite coordinates serialize"));
        }
        out.push_str("}\n");
        out
    }
}

/// A graph file read from disk together with the hash of its bytes.
pub struct LoadedGraph {
    pub map: HalfEdgeMap,
    pub embedding: Option<Embedding>,
    pub sha256: String,
}

pub fn read_bytes(path: &Path) -> Result<Vec<u8>, FormatError> {
    fs::read(path).map_err(|source| FormatError::Read { path: path.to_path_buf(), source })
}

pub fn parse_bytes(bytes: &[u8]) -> Result<GraphFile, FormatError> {
    let text = std::str::from_utf8(bytes).map_err(|e| FormatError::WrongFormat(format!("not UTF-8: {e}")))?;
    GraphFile::parse(text)
}

pub fn read_graph(path: &Path) -> Result<LoadedGraph, FormatError> {
    let bytes = read_bytes(path)?;
    let (map, embedding) = parse_bytes(&bytes)?.build()?;
    Ok(LoadedGraph { map, embedding, sha256: sha256_hex(&bytes) })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Reads `{"vertex id": value, ...}`.
pub fn read_boundary(path: &Path) -> Result<(BTreeMap<usize, f64>, String), FormatError> {
    let bytes = read_bytes(path)?;
    let raw: BTreeMap<String, f64> = serde_json::from_slice(&bytes)?;
    let mut values = BTreeMap::new();
    for (k, v) in raw {
        let id: usize = k.trim().parse().map_err(|_| FormatError::Boundary(format!("key {k:?} is not a vertex id")))?;
        if !v.is_finite() {
            return Err(FormatError::Boundary(format!("value at {id} is not finite")));
        }
        values.insert(id, v);
    }
    Ok((values, sha256_hex(&bytes)))
}

/// Undirected DOT graph; vertices carry `pos` hints when coordinates are known.
pub fn to_dot(map: &HalfEdgeMap, embedding: Option<&Embedding>) -> String {
    let mut out = String::from("graph semiplanar {\n  node [shape=point];\n");
    if let Some(e) = embedding {
        for (v, [x, y]) in e.coordinates.iter().enumerate() {
            out.push_str(&format!("  {v} [pos=\"{x:.6},{y:.6}!\"];\n"));
        }
    } else {
        for v in 0..map.vertex_count() {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for e in map.edges() {
        out.push_str(&format!("  {} -- {};\n", e.endpoints.0, e.endpoints.1));
    }
    out.push_str("}\n");
    out
}

/// Writes through a temporary file in the target directory and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), FormatError> {
    let err = |source| FormatError::Write { path: path.to_path_buf(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(err)?;
    tmp.write_all(contents).map_err(err)?;
    tmp.as_file().sync_all().map_err(err)?;
    tmp.persist(path).map_err(|e| err(e.error))?;
    Ok(())
}
