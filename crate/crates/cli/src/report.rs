use serde_json::{json, Value};
use sgraph::{EdgeSet, IntMatrix, SignedGraph};

use crate::Format;

pub const SCHEMA: &str = "sgtool/1";

/// The output of one verb: a text rendering and a JSON payload.
#[derive(Clone, Debug)]
pub struct Report {
    pub verb: &'static str,
    pub graph: Option<Value>,
    pub text: String,
    pub result: Value,
    pub tsv: Option<String>,
}

impl Report {
    pub fn new(verb: &'static str, graph: Option<&SignedGraph>, text: String, result: Value) -> Self {
        Report {
            verb,
            graph: graph.map(summary),
            text,
            result,
            tsv: None,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Tsv => self
                .tsv
                .clone()
                .ok_or_else(|| format!("--format tsv is not available for `{}`", self.verb)),
            Format::Json => {
                // serde_json's map is ordered by key, so this is canonical.
                let doc = json!({
                    "schema": SCHEMA,
                    "verb": self.verb,
                    "graph": self.graph,
                    "result": self.result,
                });
                Ok(serde_json::to_string_pretty(&doc).expect("json") + "\n")
            }
        }
    }
}

pub fn summary(g: &SignedGraph) -> Value {
    let (links, loops, half, loose) = g.kind_counts();
    json!({
        "order": g.order(),
        "size": g.size(),
        "kinds": {"links": links, "loops": loops, "half": half, "loose": loose},
    })
}

/// `x` rounded to 12 significant digits. Anything below `1e-12` in
/// magnitude is eigensolver noise and becomes `0`.
pub fn round12(x: f64) -> f64 {
    if x.abs() < 1e-12 || !x.is_finite() {
        return 0.0;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("float");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn num(x: f64) -> Value {
    json!(round12(x))
}

pub fn ftext(x: f64) -> String {
    round12(x).to_string()
}

/// `{1,2,3}` from 0-based vertices.
pub fn vset(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn vlist(vs: &[usize]) -> Value {
    json!(vs.iter().map(|v| v + 1).collect::<Vec<_>>())
}

pub fn eset(g: &SignedGraph, s: &EdgeSet) -> String {
    format!("{{{}}}", g.edge_ids(s).join(","))
}

pub fn elist(g: &SignedGraph, s: &EdgeSet) -> Value {
    json!(g.edge_ids(s))
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Right-aligned columns, optionally headed by column labels.
pub fn matrix_text(m: &IntMatrix, header: Option<&[&str]>) -> String {
    let rows = m.to_rows();
    let mut width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    if let Some(h) = header {
        width = width.max(h.iter().map(|s| s.chars().count()).max().unwrap_or(0));
    }
    let mut out = String::new();
    if let Some(h) = header {
        let cells: Vec<String> = h.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(&format!("# {}\n", cells.join(" ")));
    }
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
        let lead = if header.is_some() { "  " } else { "" };
        out.push_str(&format!("{lead}{}\n", cells.join(" ")));
    }
    out
}

pub fn matrix_tsv(m: &IntMatrix, cols: &[String]) -> String {
    let mut out = format!("\t{}\n", cols.join("\t"));
    for (i, r) in m.to_rows().iter().enumerate() {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("v{}\t{}\n", i + 1, cells.join("\t")));
    }
    out
}
