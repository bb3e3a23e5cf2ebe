use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use oddcolor_core::audit::{full_audit, graph_audit, AuditReport, Verdict};
use oddcolor_core::coloring::{
    odd_chromatic_number, sampled_choosability, solve, ColoringError, ListAssignment, RelaxedInstance,
};
use oddcolor_core::discharge::{charge_report, hunt, settle};
use oddcolor_core::embedding::{embed_search, EmbeddedGraph, EmbeddingError};
use oddcolor_core::generate::{generate_girth_instances, GenConfig, GenError};
use oddcolor_core::graph::{hypothesis_check, one_subdivision, HypothesisViolation};
use oddcolor_core::io::{coloring_to_file, face_darts, lists_to_file, Instance, InstanceFile, IoError};
use oddcolor_core::{Graph, GraphError, RSet};
use serde_json::json;
use thiserror::Error;

use crate::report::{digest, Outcome, RunReport, Stages};
use crate::{Cli, Command, Input};

/// Beyond this many vertices the embedding search may take very long.
const EMBED_WARN_VERTICES: usize = 12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: IoError },
    #[error("--r: edge index {index} out of range ({count} edges)")]
    REdge { index: usize, count: usize },
    #[error("--r: {0}")]
    RSet(GraphError),
    #[error("{0} needs a rotation system in the instance file")]
    NoRotation(&'static str),
    #[error("invalid rotation system: {0}")]
    Embedding(#[from] EmbeddingError),
    #[error("solve needs --k or an instance with lists")]
    NoLists,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

struct Loaded {
    digest: String,
    inst: Instance,
}

fn read_source(path: &Path) -> Result<Vec<u8>, CliError> {
    let err = |source| CliError::Read { path: path.to_path_buf(), source };
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(err)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(err)
    }
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    let path = input.graph.as_ref().or(input.instance.as_ref()).expect("clap requires one input");
    let bytes = read_source(path)?;
    let parse_err = |source| CliError::Parse { path: path.clone(), source };
    let text = String::from_utf8_lossy(&bytes);
    let file: InstanceFile = serde_json::from_str(&text).map_err(|e| parse_err(IoError::Json(e)))?;
    let edges = file.edges.clone();
    let mut inst = file.into_instance().map_err(parse_err)?;
    if let Some(ids) = &input.r {
        let pairs = ids
            .iter()
            .map(|&i| edges.get(i).map(|&[u, v]| (u, v)).ok_or(CliError::REdge { index: i, count: edges.len() }))
            .collect::<Result<Vec<_>, _>>()?;
        inst.r = RSet::from_pairs(&inst.graph, pairs).map_err(CliError::RSet)?;
    }
    Ok(Loaded { digest: digest(&bytes), inst })
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn graph_stage(st: &mut Stages, g: &Graph) {
    st.put("graph", &json!({"n": g.vertex_count(), "edges": g.edges()}));
}

fn embedding_of(inst: &Instance) -> Result<Option<EmbeddedGraph>, CliError> {
    Ok(inst.embedded().transpose()?)
}

fn warn_large(st: &mut Stages, g: &Graph) {
    if g.vertex_count() > EMBED_WARN_VERTICES {
        st.warn(format!(
            "embedding search on {} vertices (> {EMBED_WARN_VERTICES}) may take a long time",
            g.vertex_count()
        ));
    }
}

/// Smallest Euler genus up to `max` at which the search succeeds.
fn smallest_embedding(g: &Graph, max: u8) -> Option<EmbeddedGraph> {
    (0..=max as usize).find_map(|bound| embed_search(g, bound))
}

fn surface(e: &EmbeddedGraph) -> serde_json::Value {
    json!({
        "euler_genus": e.euler_genus(),
        "orientable": e.is_orientable(),
        "vertices": e.graph().vertex_count(),
        "edges": e.graph().edge_count(),
        "faces": e.face_count(),
    })
}

fn describe_violation(v: &HypothesisViolation) -> String {
    match v {
        HypothesisViolation::ForbiddenRLength { cycle, r_length } => {
            format!("cycle {:?} has R-length {r_length}", cycle.vertices())
        }
        HypothesisViolation::FiveCyclesShareOneEdge { first, second, shared_edge } => format!(
            "R-length-5 cycles {:?} and {:?} share only edge {shared_edge}",
            first.vertices(),
            second.vertices()
        ),
    }
}

fn audit_summary(st: &mut Stages, rep: &AuditReport) -> Outcome {
    let violated = rep.violated();
    let skipped = rep.lemmas.iter().filter(|l| l.verdict == Verdict::Skipped).count();
    if violated.is_empty() {
        st.say(format!("all audited lemmas hold ({skipped} skipped: no embedding)"));
        Outcome::Ok
    } else {
        let names: Vec<String> = violated.iter().map(|l| l.to_string()).collect();
        st.say(format!("violated: {} ({} witnesses)", names.join(", "), rep.violation_count()));
        Outcome::Negative
    }
}

pub fn run(cli: &Cli) -> Result<(RunReport, Stages), CliError> {
    let start = Instant::now();
    let mut st = Stages::default();
    let (name, digest, outcome) = match &cli.command {
        Command::Check { input } => {
            let l = load(input)?;
            let rep = hypothesis_check(&l.inst.graph, &l.inst.r);
            graph_stage(&mut st, &l.inst.graph);
            st.put("hypothesis", &rep);
            let outcome = if rep.passes() {
                st.say("hypotheses hold");
                Outcome::Ok
            } else {
                st.say(format!("{} violations; first: {}", rep.violations.len(), describe_violation(&rep.violations[0])));
                Outcome::Negative
            };
            ("check", l.digest, outcome)
        }
        Command::Faces { input } => {
            let l = load(input)?;
            let e = embedding_of(&l.inst)?.ok_or(CliError::NoRotation("faces"))?;
            let faces: Vec<_> = e
                .faces()
                .iter()
                .enumerate()
                .map(|(i, f)| json!({"face": i, "length": f.darts.len(), "darts": face_darts(f)}))
                .collect();
            graph_stage(&mut st, e.graph());
            st.put("surface", &surface(&e));
            st.put("faces", &faces);
            st.say(format!("{} faces, Euler genus {}", e.face_count(), e.euler_genus()));
            ("faces", l.digest, Outcome::Ok)
        }
        Command::Genus { input, genus } => {
            let l = load(input)?;
            let found = match embedding_of(&l.inst)? {
                Some(e) => Some(e),
                None => {
                    warn_large(&mut st, &l.inst.graph);
                    smallest_embedding(&l.inst.graph, genus.max_genus)
                }
            };
            let outcome = match &found {
                Some(e) => {
                    st.put("surface", &surface(e));
                    st.say(format!(
                        "Euler genus {} ({})",
                        e.euler_genus(),
                        if e.is_orientable() { "orientable" } else { "non-orientable" }
                    ));
                    Outcome::Ok
                }
                None => {
                    st.put("surface", &serde_json::Value::Null);
                    st.say(format!("no embedding of Euler genus at most {}", genus.max_genus));
                    Outcome::Negative
                }
            };
            ("genus", l.digest, outcome)
        }
        Command::Embed { input, genus, out } => {
            let l = load(input)?;
            warn_large(&mut st, &l.inst.graph);
            let outcome = match embed_search(&l.inst.graph, genus.max_genus as usize) {
                Some(e) => {
                    let mut inst = l.inst.clone();
                    inst.rotation = Some(e.rotation().clone());
                    let file = InstanceFile::from_instance(&inst);
                    if let Some(path) = out {
                        write_json(path, &file)?;
                    }
                    st.put("surface", &surface(&e));
                    st.put("instance", &file);
                    st.say(format!("embedded with Euler genus {}, {} faces", e.euler_genus(), e.face_count()));
                    Outcome::Ok
                }
                None => {
                    st.put("instance", &serde_json::Value::Null);
                    st.say(format!("no embedding found within Euler genus {}", genus.max_genus));
                    Outcome::Negative
                }
            };
            ("embed", l.digest, outcome)
        }
        Command::Solve { input, k } => {
            let l = load(input)?;
            let g = &l.inst.graph;
            let lists = match (k, &l.inst.lists) {
                (Some(k), _) => ListAssignment::uniform(g.vertex_count(), *k),
                (None, Some(lists)) => lists.clone(),
                (None, None) => return Err(CliError::NoLists),
            };
            let inst = RelaxedInstance::new(g.clone(), l.inst.r.clone(), lists.clone())?;
            let found = solve(&inst);
            st.put(
                "solver",
                &json!({
                    "k": lists.size(),
                    "sat": found.is_some(),
                    "coloring": found.as_ref().map(coloring_to_file),
                }),
            );
            let outcome = if found.is_some() {
                st.say(format!("SAT: relaxed-odd coloring from lists of size {}", lists.size()));
                Outcome::Ok
            } else {
                st.say(format!("UNSAT: no relaxed-odd coloring from lists of size {}", lists.size()));
                Outcome::Negative
            };
            ("solve", l.digest, outcome)
        }
        Command::Chromatic { input } => {
            let l = load(input)?;
            let g = &l.inst.graph;
            let n = g.vertex_count();
            let at = |k: usize| -> Result<_, CliError> {
                Ok(solve(&RelaxedInstance::new(g.clone(), l.inst.r.clone(), ListAssignment::uniform(n, k))?))
            };
            let k = if l.inst.r.is_empty() {
                odd_chromatic_number(g)
            } else {
                let mut k = 0;
                while k < n && at(k)?.is_none() {
                    k += 1;
                }
                k
            };
            let coloring = at(k)?;
            st.put("solver", &json!({"k": k, "coloring": coloring.as_ref().map(coloring_to_file)}));
            st.say(format!("smallest k with a relaxed-odd coloring: {k}"));
            ("chromatic", l.digest, Outcome::Ok)
        }
        Command::Choosable { input, k, trials, universe } => {
            let l = load(input)?;
            let universe = universe.unwrap_or(2 * k);
            let rep = sampled_choosability(&l.inst.graph, *k, &l.inst.r, *trials, universe, cli.seed)?;
            st.put(
                "choosability",
                &json!({
                    "k": rep.k,
                    "trials": rep.trials,
                    "universe": rep.universe,
                    "trials_run": rep.trials_run,
                    "refuting_trial": rep.refuting_trial,
                    "refutation": rep.refutation.as_ref().map(lists_to_file),
                }),
            );
            let outcome = match rep.refuting_trial {
                Some(t) => {
                    st.say(format!("refuted at trial {t}: a {k}-list assignment with no relaxed-odd coloring"));
                    Outcome::Negative
                }
                None => {
                    st.say(format!("no refutation in {} trials (k = {k}, universe {universe})", rep.trials_run));
                    Outcome::Ok
                }
            };
            ("choosable", l.digest, outcome)
        }
        Command::Audit { input } => {
            let l = load(input)?;
            let rep = match embedding_of(&l.inst)? {
                Some(e) => full_audit(&e, &l.inst.r),
                None => graph_audit(&l.inst.graph, &l.inst.r),
            };
            graph_stage(&mut st, &l.inst.graph);
            st.put("audit", &rep);
            let outcome = audit_summary(&mut st, &rep);
            ("audit", l.digest, outcome)
        }
        Command::Discharge { input, genus } => {
            let l = load(input)?;
            let e = match embedding_of(&l.inst)? {
                Some(e) => Some(e),
                None => {
                    warn_large(&mut st, &l.inst.graph);
                    smallest_embedding(&l.inst.graph, genus.max_genus)
                }
            };
            let outcome = match e {
                Some(e) => {
                    let ledger = settle(&e, &l.inst.r);
                    let audit = full_audit(&e, &l.inst.r);
                    let charges = charge_report(&e, &ledger, &audit);
                    graph_stage(&mut st, e.graph());
                    st.put("surface", &surface(&e));
                    st.put("ledger", &ledger);
                    st.put("charges", &charges);
                    st.say(format!(
                        "{} transfers, total {} (Euler genus {}), {} negative elements",
                        ledger.transfers.len(),
                        charges.total,
                        e.euler_genus(),
                        charges.negatives.len()
                    ));
                    if charges.repeated_incidence {
                        st.warn("a face walk visits a receiving vertex more than once; charges counted per incidence");
                    }
                    Outcome::Ok
                }
                None => {
                    st.say(format!("no embedding found within Euler genus {}", genus.max_genus));
                    Outcome::Negative
                }
            };
            ("discharge", l.digest, outcome)
        }
        Command::Hunt { input, genus } => {
            let l = load(input)?;
            if hypothesis_check(&l.inst.graph, &l.inst.r).passes() {
                warn_large(&mut st, &l.inst.graph);
            }
            let rep = hunt(&l.inst.graph, &l.inst.r, genus.max_genus as usize);
            st.put("hunt", &rep);
            let outcome = if rep.contradiction {
                st.say("all stages passed and the charges are positive");
                Outcome::Negative
            } else {
                match rep.eliminated_at {
                    Some(stage) => st.say(format!("eliminated at stage {stage:?}")),
                    None => st.say("not eliminated"),
                }
                Outcome::Ok
            };
            ("hunt", l.digest, outcome)
        }
        Command::Subdivide { input, out } => {
            let l = load(input)?;
            let s = one_subdivision(&l.inst.graph);
            let file = InstanceFile::from_instance(&Instance::new(s.clone(), RSet::empty()));
            if let Some(path) = out {
                write_json(path, &file)?;
            }
            st.put("instance", &file);
            st.say(format!("1-subdivision: {} vertices, {} edges", s.vertex_count(), s.edge_count()));
            ("subdivide", l.digest, Outcome::Ok)
        }
        Command::Gen { n, min_girth, count, max_degree, out } => {
            let cfg = GenConfig { n: *n, min_girth: *min_girth, count: *count, seed: cli.seed, max_degree: *max_degree };
            let config = serde_json::to_vec(&cfg).expect("serializable");
            let graphs = generate_girth_instances(&cfg)?;
            let files: Vec<InstanceFile> =
                graphs.into_iter().map(|g| InstanceFile::from_instance(&Instance::new(g, RSet::empty()))).collect();
            if let Some(path) = out {
                write_json(path, &files)?;
            }
            st.put("config", &cfg);
            st.put("instances", &files);
            st.say(format!("{} graphs on at most {n} vertices with girth at least {min_girth}", files.len()));
            ("gen", digest(&config), Outcome::Ok)
        }
    };
    let report = RunReport::new(name, digest, cli.seed, outcome, std::mem::take(&mut st.map), start.elapsed());
    Ok((report, st))
}
