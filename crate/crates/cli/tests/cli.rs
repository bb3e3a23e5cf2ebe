use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use oddcolor_core::graph::girth;
use oddcolor_core::io::InstanceFile;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("oddcolor-cli");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, v: &Value) -> PathBuf {
    let p = tmp(name);
    fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn cycle(n: usize) -> Value {
    let edges: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
    json!({"version": 1, "n": n, "edges": edges})
}

fn complete(n: usize) -> Value {
    let edges: Vec<[usize; 2]> = (0..n).flat_map(|i| (i + 1..n).map(move |j| [i, j])).collect();
    json!({"version": 1, "n": n, "edges": edges})
}

/// 4x4 grid on the torus, every face a quadrilateral.
fn quad_torus() -> Value {
    let id = |i: usize, j: usize| (i % 4) * 4 + j % 4;
    let mut edges = Vec::new();
    let mut rotation = serde_json::Map::new();
    for i in 0..4 {
        for j in 0..4 {
            edges.push([id(i, j), id(i, j + 1)]);
            edges.push([id(i, j), id(i + 1, j)]);
            let around = [id(i, j + 1), id(i + 1, j), id(i, j + 3), id(i + 3, j)];
            rotation.insert(id(i, j).to_string(), json!(around));
        }
    }
    json!({"version": 1, "n": 16, "edges": edges, "rotation": rotation})
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddcolor")).args(args).env_remove("ODDCOLOR_SEED").output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_c5() {
    let c5 = write("c5.json", &cycle(5));
    let out = run(&["solve", "--graph", path(&c5), "--k", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let rep = report(&out);
    assert_eq!(rep["command"], "solve");
    assert_eq!(rep["stages"]["solver"]["sat"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("UNSAT"));

    let out = run(&["solve", "--graph", path(&c5), "--k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let colors = &report(&out)["stages"]["solver"]["coloring"]["colors"];
    let c: Vec<u64> = (0..5).map(|v| colors[v.to_string()].as_u64().unwrap()).collect();
    let mut sorted = c.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 5, "C5 needs five distinct colors: {c:?}");
}

#[test]
fn solve_uses_instance_lists() {
    let mut inst = cycle(3);
    inst["lists"] = json!({"0": [1, 2, 3], "1": [1, 2, 3], "2": [1, 2, 3]});
    let p = write("k3-lists.json", &inst);
    assert_eq!(run(&["solve", "--instance", path(&p)]).status.code(), Some(0));
    let bare = write("k3.json", &cycle(3));
    assert_eq!(run(&["solve", "--graph", path(&bare)]).status.code(), Some(2));
}

#[test]
fn check_cycles() {
    let c6 = write("c6.json", &cycle(6));
    let out = run(&["check", "--graph", path(&c6)]);
    assert_eq!(out.status.code(), Some(1));
    let v = &report(&out)["stages"]["hypothesis"]["violations"];
    assert_eq!(v[0]["kind"], "forbidden_r_length");
    assert_eq!(v[0]["r_length"], 6);

    let c7 = write("c7.json", &cycle(7));
    assert_eq!(run(&["check", "--graph", path(&c7)]).status.code(), Some(0));
    let c5 = write("c5-check.json", &cycle(5));
    assert_eq!(run(&["check", "--graph", path(&c5)]).status.code(), Some(0));
    // One edge of R makes the pentagon's R-length 6.
    assert_eq!(run(&["check", "--graph", path(&c5), "--r", "2"]).status.code(), Some(1));
}

#[test]
fn discharge_quad_torus() {
    let p = write("quad-torus.json", &quad_torus());
    let out = run(&["discharge", "--instance", path(&p)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = report(&out);
    assert_eq!(rep["stages"]["ledger"]["total_twelfths"], 0);
    assert_eq!(rep["stages"]["charges"]["total_twelfths"], 0);
    assert_eq!(rep["stages"]["ledger"]["transfers"].as_array().unwrap().len(), 0);
    assert_eq!(rep["stages"]["surface"]["euler_genus"], 2);
}

#[test]
fn faces_of_quad_torus() {
    let p = write("quad-torus-faces.json", &quad_torus());
    let out = run(&["faces", "--instance", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let faces = report(&out)["stages"]["faces"].as_array().unwrap().clone();
    assert_eq!(faces.len(), 16);
    for f in faces {
        assert_eq!(f["length"], 4);
        assert!(f["darts"][0].as_str().unwrap().starts_with('('));
    }
    let bare = write("c4.json", &cycle(4));
    assert_eq!(run(&["faces", "--graph", path(&bare)]).status.code(), Some(2));
}

#[test]
fn genus_and_embed() {
    let k5 = write("k5.json", &complete(5));
    let out = run(&["genus", "--graph", path(&k5)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["stages"]["surface"]["euler_genus"], 1);
    assert_eq!(run(&["genus", "--graph", path(&k5), "--max-genus", "0"]).status.code(), Some(1));
    assert_eq!(run(&["genus", "--graph", path(&k5), "--max-genus", "3"]).status.code(), Some(2));

    let k4 = write("k4.json", &complete(4));
    let embedded = tmp("k4-embedded.json");
    let out = run(&["embed", "--graph", path(&k4), "--max-genus", "0", "--out", path(&embedded)]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["faces", "--instance", path(&embedded)]);
    assert_eq!(report(&out)["stages"]["surface"]["faces"], 4);
}

#[test]
fn embed_warns_on_large_graphs() {
    let p = write("c13.json", &cycle(13));
    let out = run(&["embed", "--graph", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn chromatic_of_cycles() {
    for (n, k) in [(5, 5), (6, 3), (7, 4)] {
        let p = write(&format!("chromatic-c{n}.json"), &cycle(n));
        let out = run(&["chromatic", "--graph", path(&p)]);
        assert_eq!(report(&out)["stages"]["solver"]["k"], k, "C{n}");
    }
}

#[test]
fn choosable_seed_and_reproducibility() {
    let c5 = write("c5-choose.json", &cycle(5));
    let out = run(&["choosable", "--graph", path(&c5), "--k", "4", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["stages"]["choosability"]["refuting_trial"], 0);

    let p7 = write("c7-choose.json", &cycle(7));
    let args = ["choosable", "--graph", path(&p7), "--k", "3", "--trials", "30"];
    let with_env = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_oddcolor")).args(args).env("ODDCOLOR_SEED", seed).output().unwrap()
    };
    let a = report(&with_env("17"));
    let b = report(&with_env("17"));
    assert_eq!(a["seed"], 17);
    assert_eq!(a["stages"], b["stages"]);
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["stages"]["choosability"]["universe"], 6);
    // The flag wins over the environment.
    let c = Command::new(env!("CARGO_BIN_EXE_oddcolor"))
        .args(args)
        .args(["--seed", "4"])
        .env("ODDCOLOR_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(report(&c)["seed"], 4);
}

#[test]
fn digest_is_of_the_input_bytes() {
    let p = write("c7-digest.json", &cycle(7));
    let want = hex::encode(Sha256::digest(fs::read(&p).unwrap()));
    assert_eq!(report(&run(&["check", "--graph", path(&p)]))["input_digest"], want.as_str());
}

#[test]
fn audit_without_embedding_skips_face_lemmas() {
    let p = write("c7-audit.json", &cycle(7));
    let out = run(&["audit", "--graph", path(&p)]);
    // Every vertex of C7 has degree 2.
    assert_eq!(out.status.code(), Some(1));
    let lemmas = report(&out)["stages"]["audit"]["lemmas"].as_array().unwrap().clone();
    assert_eq!(lemmas.len(), 16);
    assert!(lemmas.iter().any(|l| l["verdict"] == "skipped"));
    let low = lemmas.iter().find(|l| l["verdict"] == "violated").unwrap();
    assert_eq!(low["witnesses"].as_array().unwrap().len(), 7);
}

#[test]
fn hunt_reports_elimination() {
    let p = write("c6-hunt.json", &cycle(6));
    let out = run(&["hunt", "--graph", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    assert_eq!(rep["stages"]["hunt"]["eliminated_at"], "hypothesis");
    assert_eq!(rep["stages"]["hunt"]["contradiction"], false);
}

#[test]
fn subdivide_k4() {
    let k4 = write("k4-sub.json", &complete(4));
    let dest = tmp("k4-subdivided.json");
    let out = run(&["subdivide", "--graph", path(&k4), "--out", path(&dest)]);
    assert_eq!(out.status.code(), Some(0));
    let inst = InstanceFile::parse(&fs::read_to_string(&dest).unwrap()).unwrap();
    assert_eq!(inst.graph.vertex_count(), 10);
    assert_eq!(inst.graph.edge_count(), 12);
    let out = run(&["chromatic", "--graph", path(&dest)]);
    assert_eq!(report(&out)["stages"]["solver"]["k"], 4);
}

#[test]
fn gen_girth_instances() {
    let dest = tmp("gen.json");
    let out = run(&["gen", "--n", "14", "--count", "4", "--seed", "5", "--out", path(&dest)]);
    assert_eq!(out.status.code(), Some(0));
    let files: Vec<InstanceFile> = serde_json::from_str(&fs::read_to_string(&dest).unwrap()).unwrap();
    assert_eq!(files.len(), 4);
    for f in files {
        let g = f.into_instance().unwrap().graph;
        assert!(g.vertex_count() <= 14 && g.is_connected());
        assert!(girth(&g).unwrap() >= 7);
    }
    let again = run(&["gen", "--n", "14", "--count", "4", "--seed", "5"]);
    assert_eq!(report(&again)["stages"], report(&out)["stages"]);
    assert_eq!(run(&["gen", "--n", "10", "--min-girth", "11"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let missing = tmp("does-not-exist.json");
    assert_eq!(run(&["check", "--graph", path(&missing)]).status.code(), Some(2));
    let junk = tmp("junk.json");
    fs::write(&junk, "{not json").unwrap();
    assert_eq!(run(&["check", "--graph", path(&junk)]).status.code(), Some(2));
    let loop_edge = write("loop.json", &json!({"version": 1, "n": 2, "edges": [[0, 0]]}));
    assert_eq!(run(&["check", "--graph", path(&loop_edge)]).status.code(), Some(2));
    let future = write("v9.json", &json!({"version": 9, "n": 1, "edges": []}));
    assert_eq!(run(&["check", "--graph", path(&future)]).status.code(), Some(2));
    let c5 = write("c5-err.json", &cycle(5));
    assert_eq!(run(&["check", "--graph", path(&c5), "--r", "9"]).status.code(), Some(2));
    assert_eq!(run(&["check"]).status.code(), Some(2));
}

#[test]
fn quiet_prints_nothing() {
    let c5 = write("c5-quiet.json", &cycle(5));
    let out = run(&["solve", "--graph", path(&c5), "--k", "4", "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
}
