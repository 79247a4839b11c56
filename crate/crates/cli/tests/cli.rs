mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::{golden_path, sgtool, GOLDEN};
use sgtool::{OPERATIONS, VERBS};

#[test]
fn balance_of_sigma4() {
    let out = sgtool(&["balance", "@sigma4.sg"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().next(), Some("balanced: false, b=0, V0={1,2,3,4}"));
}

#[test]
fn zero_free_chromatic_of_full_plus_minus_k2() {
    let out = sgtool(&["chromatic", "--zero-free", "@pmk2full.sg"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("λ^2 - 2λ"), "{}", out.stdout);
}

#[test]
fn unknown_verb_is_a_usage_error() {
    let out = sgtool(&["nosuchverb", "x.sg"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("nosuchverb"));
}

#[test]
fn usage_errors_name_the_offender() {
    let out = sgtool(&["delete", "--edges", "zz", "@sigma4.sg"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("zz"), "{}", out.stderr);

    let out = sgtool(&["switch", "--set", "9", "@sigma4.sg"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("vertex 9"), "{}", out.stderr);

    let out = sgtool(&["info", "@no-such-file.sg"]);
    assert_eq!(out.code, 2);

    let out = sgtool(&["--format", "tsv", "balance", "@sigma4.sg"]);
    assert_eq!(out.code, 2);

    let out = sgtool(&["--threads", "0", "balance", "@sigma4.sg"]);
    assert_eq!(out.code, 2);
}

#[test]
fn parse_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("sgtool-parse-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.sg");
    std::fs::write(&bad, "sg 1\nn 2\nedge a 1 3 +\n").unwrap();
    let out = sgtool(&["info", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bad.sg"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_errors_exit_1() {
    // The Harary–Norman line graph is only defined for all-positive graphs.
    let out = sgtool(&["linegraph", "--harary-norman", "@sigma4.sg"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
}

#[test]
fn caps_are_enforced_and_overrides_warn() {
    let out = sgtool(&["--max-edges", "3", "chromatic", "--algorithm", "subset", "@sigma4.sg"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("warning: cap --max-edges changed"), "{}", out.stderr);

    let out = sgtool(&["--max-edges", "30", "chromatic", "--algorithm", "subset", "@sigma4.sg"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("warning"));
}

#[test]
fn algorithms_agree_through_the_cli() {
    let poly = |alg: &str| {
        let out = sgtool(&["chromatic", "--algorithm", alg, "@k4e.sg"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        out.stdout
    };
    assert_eq!(poly("delcon"), poly("subset"));
    assert_eq!(poly("delcon"), poly("expansion"));
    let out = sgtool(&["chromatic", "--k", "2", "@k4e.sg"]);
    assert!(out.stdout.contains("agrees: yes"), "{}", out.stdout);
}

#[test]
fn stdin_input_through_the_binary() {
    let text = std::fs::read_to_string(common::fixture("sigma4.sg")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_sgtool"))
        .args(["balance", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("balanced: false, b=0"));
}

#[test]
fn json_is_versioned_and_parses() {
    let out = sgtool(&["--format", "json", "balance", "@sigma4.sg"]);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["schema"], sgtool::SCHEMA);
    assert_eq!(doc["verb"], "balance");
    assert_eq!(doc["graph"]["order"], 4);
    assert_eq!(doc["graph"]["kinds"]["half"], 1);
    assert_eq!(doc["result"]["v0"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn random_output_round_trips() {
    let out = sgtool(&["random", "--seed", "11", "--order", "4", "--edges", "9"]);
    let g = sgraph::graph::parse(&out.stdout).unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(out.stdout, sgtool(&["random", "--seed", "11", "--order", "4", "--edges", "9"]).stdout);
}

#[test]
fn registry_covers_every_verb_and_operation() {
    for verb in VERBS {
        let out = sgtool(&[verb, "--help"]);
        assert_eq!(out.code, 0, "{verb}: {}", out.stderr);
    }
    for (op, verb) in OPERATIONS {
        assert!(VERBS.contains(verb), "{op} maps to unknown verb {verb}");
    }
    let exercised: Vec<&str> = GOLDEN.iter().map(|(_, args)| {
        *args.iter().find(|a| VERBS.contains(a)).expect("golden case has a verb")
    }).collect();
    for verb in VERBS {
        assert!(exercised.contains(verb), "no golden case runs `{verb}`");
    }
    // Every public function of the library's analysis modules is listed.
    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/src");
    let modules = [
        "graph", "balance", "circles", "iso", "frame", "minors", "matrices", "coloring", "orientation",
        "catalog", "linegraph", "angle",
    ];
    let mut missing = Vec::new();
    for module in modules {
        let text = std::fs::read_to_string(format!("{src}/{module}.rs")).unwrap();
        for line in text.lines().filter(|l| l.starts_with("pub fn ")) {
            let name = &line["pub fn ".len()..line.find(['(', '<']).unwrap()];
            let key = format!("{module}::{name}");
            let reached = OPERATIONS.iter().any(|(op, _)| *op == key) || INTERNAL.contains(&key.as_str());
            if !reached {
                missing.push(key);
            }
        }
    }
    assert!(missing.is_empty(), "not reachable from any verb: {missing:?}");
}

/// Library helpers that verbs reach only indirectly.
const INTERNAL: &[&str] = &[
    "circles::bfs_forest",
    "iso::apply",
    "matrices::rational_rank",
    "matrices::determinant",
    "matrices::edge_vector",
    "matrices::edge_vector_at",
    "matrices::entries_bounded",
    "catalog::signed_expansion",
    "catalog::plus_minus_complete",
    "catalog::all_negative_zero_free",
    "catalog::flat_edge_sets",
    "frame::is_frame_circuit",
    "frame::closure_via_circuits",
    "frame::closure_from_circuits",
    "minors::carry",
    "orientation::orient",
    "orientation::signed_permutation_points",
    "orientation::sign_vector_regions",
    "linegraph::line_graph_class",
    "linegraph::digon_extension",
    "linegraph::negative_generalized_line_graph",
    "angle::gramian_lengths_consistent",
    "angle::covers_root_pairs",
];

#[test]
fn golden_outputs() {
    let update = std::env::var_os("SGTOOL_UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN {
        let out = sgtool(args);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        let path = golden_path(name);
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out.stdout, want, "{name} drifted from {}", path.display());
    }
}
