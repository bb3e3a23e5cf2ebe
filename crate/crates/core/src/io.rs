//! JSON instance files.
//!
//! ```json
//! {"version": 1, "n": 4, "edges": [[0,1],[1,2],[2,3],[0,3]], "R": [0],
//!  "rotation": {"0": [1,3], "1": [0,2], "2": [1,3], "3": [0,2]},
//!  "signs": [1,1,1,1],
//!  "lists": {"0": [1,2,3], "1": [1,2,3], "2": [2,3,4], "3": [1,3,5]}}
//! ```
//!
//! Indices in `R` and `signs` refer to positions in `edges`. Written files
//! list edges sorted, so positions coincide with edge ids.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError, ListAssignment};
use crate::embedding::{EmbeddedGraph, EmbeddingError, FaceWalk, RotationSystem};
use crate::graph::{Graph, GraphError, RSet, Vertex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Version(u32),
    #[error("edge index {index} out of range ({count} edges)")]
    EdgeIndex { index: usize, count: usize },
    #[error("bad vertex key {0:?}")]
    VertexKey(String),
    #[error("{field} is missing vertex {vertex}")]
    MissingVertex { field: &'static str, vertex: Vertex },
    #[error("\"signs\" has {got} entries for {expected} edges")]
    SignCount { expected: usize, got: usize },
    #[error("\"signs\" given without \"rotation\"")]
    SignsWithoutRotation,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

/// On-disk form of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default = "default_version")]
    pub version: u32,
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(rename = "R", default)]
    pub r: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lists: Option<BTreeMap<String, Vec<Color>>>,
}

/// A validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub r: RSet,
    pub rotation: Option<RotationSystem>,
    pub lists: Option<ListAssignment>,
}

impl Instance {
    pub fn new(graph: Graph, r: RSet) -> Self {
        Instance { graph, r, rotation: None, lists: None }
    }

    pub fn embedded(&self) -> Option<Result<EmbeddedGraph, EmbeddingError>> {
        self.rotation.as_ref().map(|rot| EmbeddedGraph::new(self.graph.clone(), rot.clone()))
    }
}

fn vertex_map<T: Clone>(
    map: &BTreeMap<String, T>,
    n: usize,
    field: &'static str,
) -> Result<Vec<T>, IoError> {
    let mut out: Vec<Option<T>> = vec![None; n];
    for (k, v) in map {
        let idx: usize = k.trim().parse().map_err(|_| IoError::VertexKey(k.clone()))?;
        if idx >= n {
            return Err(IoError::VertexKey(k.clone()));
        }
        out[idx] = Some(v.clone());
    }
    out.into_iter()
        .enumerate()
        .map(|(vertex, x)| x.ok_or(IoError::MissingVertex { field, vertex }))
        .collect()
}

fn keyed<T: Clone>(items: &[T]) -> BTreeMap<String, T> {
    // Keys are zero-padded so the object reads in vertex order.
    let width = items.len().saturating_sub(1).to_string().len();
    items.iter().enumerate().map(|(i, x)| (format!("{i:0width$}"), x.clone())).collect()
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Instance, IoError> {
        let file: InstanceFile = serde_json::from_str(text)?;
        file.into_instance()
    }

    pub fn into_instance(self) -> Result<Instance, IoError> {
        if self.version != SCHEMA_VERSION {
            return Err(IoError::Version(self.version));
        }
        let pairs: Vec<(Vertex, Vertex)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let graph = Graph::new(self.n, pairs.iter().copied())?;
        let pair = |index: usize| {
            pairs.get(index).copied().ok_or(IoError::EdgeIndex { index, count: pairs.len() })
        };
        let r_pairs = self.r.iter().map(|&i| pair(i)).collect::<Result<Vec<_>, _>>()?;
        let r = RSet::from_pairs(&graph, r_pairs)?;

        let rotation = match (&self.rotation, &self.signs) {
            (None, Some(_)) => return Err(IoError::SignsWithoutRotation),
            (None, None) => None,
            (Some(rot), signs) => {
                let neighbors = vertex_map(rot, self.n, "rotation")?;
                let mut by_id = vec![1i64; graph.edge_count()];
                if let Some(signs) = signs {
                    if signs.len() != pairs.len() {
                        return Err(IoError::SignCount { expected: pairs.len(), got: signs.len() });
                    }
                    for (i, &s) in signs.iter().enumerate() {
                        let (u, v) = pairs[i];
                        by_id[graph.edge_id(u, v).expect("edge of the graph")] = s;
                    }
                }
                Some(RotationSystem::from_neighbor_orders(&graph, &neighbors, &by_id)?)
            }
        };

        let lists = match &self.lists {
            None => None,
            Some(map) => {
                let raw = vertex_map(map, self.n, "lists")?;
                let size = raw.first().map(|l| {
                    let mut l = l.clone();
                    l.sort_unstable();
                    l.dedup();
                    l.len()
                });
                Some(ListAssignment::new(raw, size.unwrap_or(0))?)
            }
        };
        Ok(Instance { graph, r, rotation, lists })
    }

    pub fn from_instance(inst: &Instance) -> InstanceFile {
        let g = &inst.graph;
        InstanceFile {
            version: SCHEMA_VERSION,
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            r: inst.r.iter().collect(),
            rotation: inst.rotation.as_ref().map(|rot| keyed(&rot.neighbor_orders(g))),
            signs: inst.rotation.as_ref().map(|rot| rot.signs()),
            lists: inst.lists.as_ref().map(|l| keyed(l.lists())),
        }
    }
}

pub fn instance_to_json(inst: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceFile::from_instance(inst)).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub colors: BTreeMap<String, Color>,
}

pub fn coloring_to_file(c: &Coloring) -> ColoringFile {
    ColoringFile { colors: keyed(c.colors()) }
}

pub fn coloring_from_file(file: &ColoringFile, n: usize) -> Result<Coloring, IoError> {
    Ok(Coloring(vertex_map(&file.colors, n, "colors")?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListFile {
    pub lists: BTreeMap<String, Vec<Color>>,
}

pub fn lists_to_file(l: &ListAssignment) -> ListFile {
    ListFile { lists: keyed(l.lists()) }
}

/// Face walk as `"(v,e)"` dart strings.
pub fn face_darts(f: &FaceWalk) -> Vec<String> {
    f.darts.iter().map(|d| format!("({},{})", d.vertex, d.edge)).collect()
}
