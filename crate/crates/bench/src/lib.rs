//! Fixed workloads shared by the benchmarks.

use sgraph::catalog::{plus_minus_complete, SimpleGraph};
use sgraph::{Sign, SignedGraph};
use sgraph_testkit as kit;

/// A seeded graph with every edge kind, on exactly `n` vertices.
pub fn mixed(n: usize, m: usize, seed: u64) -> SignedGraph {
    let mut spec = kit::GraphSpec::any(n, m);
    spec.min_order = n;
    kit::random_graph(&mut kit::rng(seed), &spec)
}

/// A seeded link graph on exactly `n` vertices.
pub fn links(n: usize, m: usize, seed: u64) -> SignedGraph {
    let mut spec = kit::GraphSpec::links(n, m);
    spec.min_order = n;
    kit::random_graph(&mut kit::rng(seed), &spec)
}

/// `±K_n‖`, the largest family with closed forms.
pub fn plus_minus_full(n: usize) -> SignedGraph {
    plus_minus_complete(n, true)
}

/// `K_n` with one seeded random signature.
pub fn signed_complete(n: usize, seed: u64) -> SignedGraph {
    let z = kit::random_switching(&mut kit::rng(seed), n);
    let mut g = SimpleGraph::complete(n).signed(Sign::Plus);
    for (i, e) in g.clone().edges().iter().enumerate() {
        if let sgraph::EdgeKind::Link { u, v, .. } = e.kind {
            let s = if z.at(u) == z.at(v) { Sign::Plus } else { Sign::Minus };
            // Flip every third edge so the signature is not just a switching.
            let s = if i % 3 == 0 { -s } else { s };
            g.replace_kind(i, sgraph::EdgeKind::Link { u, v, sign: s }).expect("same ends");
        }
    }
    g
}
