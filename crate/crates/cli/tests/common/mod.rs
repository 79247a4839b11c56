#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.display().to_string()
}

pub fn golden_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.out")]
        .iter()
        .collect()
}

/// Runs `sgtool` in-process. `@name` arguments become fixture paths.
pub fn sgtool(args: &[&str]) -> sgtool::Outcome {
    let mut argv = vec!["sgtool".to_string()];
    argv.extend(args.iter().map(|a| match a.strip_prefix('@') {
        Some(name) => fixture(name),
        None => a.to_string(),
    }));
    sgtool::run(argv)
}

/// Golden cases: a name and the arguments that produce `golden/<name>.out`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("balance-sigma4", &["balance", "@sigma4.sg"]),
    ("balance-balanced", &["balance", "@balanced.sg"]),
    ("info-sigma4", &["info", "--circles", "--forest", "--blocks", "@sigma4.sg"]),
    ("info-kinds-json", &["--format", "json", "info", "@kinds.sg"]),
    ("switch-sigma4", &["switch", "--set", "1,3", "@sigma4.sg"]),
    ("switch-iso", &["switch", "--iso", "--to", "@c4neg.sg", "@c4neg.sg"]),
    ("balancing-edges-sigma4", &["balancing-edges", "--minimum", "@sigma4.sg"]),
    ("delete-sigma4", &["delete", "--edges", "a,h", "@sigma4.sg"]),
    ("contract-sigma4", &["contract", "--edges", "a,b", "--delete", "f", "@sigma4.sg"]),
    ("frame-circuits-sigma4", &["frame-circuits", "@sigma4.sg"]),
    ("closure-sigma4", &["closure", "--edges", "a,b", "@sigma4.sg"]),
    ("lattice-c4neg", &["closure", "--lattice", "@c4neg.sg"]),
    ("rank-sigma4", &["rank", "--edges", "d,e,h", "@sigma4.sg"]),
    ("incidence-sigma4", &["matrix", "@sigma4.sg"]),
    ("adjacency-sigma4-json", &["--format", "json", "matrix", "--which", "adjacency", "@sigma4.sg"]),
    ("laplacian-sigma4-tsv", &["--format", "tsv", "matrix", "--which", "laplacian", "@sigma4.sg"]),
    ("matrix-tree-sigma4", &["matrix-tree", "@sigma4.sg"]),
    ("spectrum-sigma4-json", &["--format", "json", "spectrum", "@sigma4.sg"]),
    ("regions-pmk3", &["regions", "--oracle", "@pmk3.sg"]),
    ("acyclic-c4neg", &["acyclic", "@c4neg.sg"]),
    ("charpoly-pmk2full", &["charpoly", "@pmk2full.sg"]),
    ("chromatic-pmk2full", &["chromatic", "--zero-free", "@pmk2full.sg"]),
    ("chromatic-sigma4", &["chromatic", "--numbers", "--k", "2", "--stable-sets", "@sigma4.sg"]),
    ("catalog-pmknfull", &["catalog", "--family", "pmknfull", "--n", "3"]),
    ("catalog-allneg-c4", &["catalog", "--family", "allneg", "--base", "c4"]),
    ("linegraph-k4e", &["linegraph", "@k4e.sg"]),
    ("glinegraph-c4", &["glinegraph", "--base", "c4", "--m", "1,2,0,0"]),
    ("roots-d3", &["roots", "--name", "D", "--n", "3", "--graph", "@pmk3.sg"]),
    ("gramian-k4e-json", &["--format", "json", "gramian", "@k4e.sg"]),
    ("gramian-anti-c4neg", &["gramian", "--anti", "@c4neg.sg"]),
    ("random-7", &["random", "--seed", "7", "--order", "5", "--edges", "10"]),
];
