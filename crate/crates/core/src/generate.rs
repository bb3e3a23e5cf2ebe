//! Random connected graphs with a girth lower bound.
//!
//! Each instance starts as a cycle and grows by chords and ears (paths of new
//! vertices between two existing ones). A candidate is kept only if every
//! cycle it creates is long enough, so the bound holds by construction.

use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("girth bound must be at least 3, got {0}")]
    GirthTooSmall(usize),
    #[error("produced {produced} of {requested} graphs within {attempts} attempts (no graph on at most {n} vertices has girth at least {min_girth} and minimum degree 2)")]
    Unreachable { produced: usize, requested: usize, attempts: usize, n: usize, min_girth: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    /// Maximum number of vertices.
    pub n: usize,
    pub min_girth: usize,
    pub count: usize,
    pub seed: u64,
    /// Optional degree cap; 3 biases towards cubic-like graphs.
    pub max_degree: Option<usize>,
}

impl GenConfig {
    pub fn new(n: usize, min_girth: usize, count: usize, seed: u64) -> Self {
        GenConfig { n, min_girth, count, seed, max_degree: None }
    }
}

fn distances(adj: &[Vec<Vertex>], from: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn grow(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> Graph {
    let g = cfg.min_girth;
    let cap = cfg.max_degree.unwrap_or(usize::MAX);
    let start = rng.gen_range(g..=cfg.n);
    let mut adj: Vec<Vec<Vertex>> = (0..start).map(|i| vec![(i + 1) % start, (i + start - 1) % start]).collect();
    let steps = rng.gen_range(0..=2 * cfg.n);
    for _ in 0..steps {
        let m = adj.len();
        let u = rng.gen_range(0..m);
        let w = rng.gen_range(0..m);
        if adj[u].len() >= cap || adj[w].len() >= cap {
            continue;
        }
        let dist = distances(&adj, u)[w];
        let room = cfg.n - m;
        // Internal vertices on the new path; 0 means a chord.
        let inner = if room == 0 || rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=room) };
        if u == w && inner == 0 {
            continue;
        }
        if u != w && inner == 0 && adj[u].contains(&w) {
            continue;
        }
        if u == w && (adj[u].len() + 2 > cap || inner + 1 < g) {
            continue;
        }
        // The shortest new cycle runs along the new path and a shortest u-w path.
        if inner + 1 + dist < g {
            continue;
        }
        let mut prev = u;
        for _ in 0..inner {
            let x = adj.len();
            adj.push(vec![prev]);
            adj[prev].push(x);
            prev = x;
        }
        adj[prev].push(w);
        adj[w].push(prev);
    }
    let edges = adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&w| u < w).map(move |&w| (u, w)));
    Graph::new(adj.len(), edges).expect("construction keeps the graph simple")
}

/// `count` connected graphs on at most `n` vertices with girth at least
/// `min_girth` and minimum degree at least 2. Deterministic for a given seed.
pub fn generate_girth_instances(cfg: &GenConfig) -> Result<Vec<Graph>, GenError> {
    if cfg.min_girth < 3 {
        return Err(GenError::GirthTooSmall(cfg.min_girth));
    }
    let attempts = cfg.count.saturating_mul(1000).max(1000);
    if cfg.n < cfg.min_girth {
        return Err(GenError::Unreachable {
            produced: 0,
            requested: cfg.count,
            attempts: 0,
            n: cfg.n,
            min_girth: cfg.min_girth,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.count);
    let mut tries = 0;
    while out.len() < cfg.count {
        if tries == attempts {
            return Err(GenError::Unreachable {
                produced: out.len(),
                requested: cfg.count,
                attempts,
                n: cfg.n,
                min_girth: cfg.min_girth,
            });
        }
        tries += 1;
        out.push(grow(cfg, &mut rng));
    }
    Ok(out)
}
