use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use num_rational::Rational64;
use serde_json::{json, Value};
use sgraph::angle::{self, root_system};
use sgraph::balance::{self, SwitchingFunction};
use sgraph::catalog::{catalog, SimpleGraph};
use sgraph::circles::{blocks, enumerate_circles, fundamental_system, spanning_forest};
use sgraph::coloring::{self, Coloration};
use sgraph::frame::{self, FrameCircuitKind};
use sgraph::graph::{parse, serialize};
use sgraph::linegraph::{self, line_graph};
use sgraph::matrices::{self, IntMatrix};
use sgraph::minors;
use sgraph::orientation::{self, orient};
use sgraph::{iso, CatalogFamily, EdgeSet, Limits, RootSystemKind, Sign, SignedGraph};
use sgraph_testkit as kit;

use crate::report::{elist, eset, ftext, matrix_text, matrix_tsv, num, round12, vlist, vset, yes, Report};
use crate::{Algorithm, Format, Kinds, Verb, WhichMatrix};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Parse { path: String, source: sgraph::Error },
    #[error(transparent)]
    Domain(#[from] sgraph::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(e: sgraph::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn load(path: &Path) -> Result<SignedGraph> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io {
                path: name.clone(),
                message: e.to_string(),
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: name.clone(),
            message: e.to_string(),
        })?
    };
    parse(&text).map_err(|source| CliError::Parse { path: name, source })
}

fn edges_arg(g: &SignedGraph, ids: &[String]) -> Result<EdgeSet> {
    g.edge_set(ids).map_err(usage)
}

fn vertices_arg(g: &SignedGraph, vs: &[usize]) -> Result<Vec<usize>> {
    vs.iter()
        .map(|&v| {
            if v == 0 || v > g.order() {
                Err(CliError::Usage(format!(
                    "vertex {v} out of range 1..{} (vertices are 1-based)",
                    g.order()
                )))
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn simple_base(name: Option<&str>, file: Option<&Path>) -> Result<SimpleGraph> {
    match (name, file) {
        (Some(n), _) => SimpleGraph::named(n).map_err(usage),
        (None, Some(p)) => Ok(SimpleGraph::from_signed(&load(p)?)?),
        (None, None) => Err(CliError::Usage("give a base graph with --base or a file".into())),
    }
}

fn big(x: &num_bigint::BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn sign_char(s: Sign) -> char {
    s.symbol()
}

pub fn dispatch(verb: &Verb, format: Format, lim: &Limits) -> Result<Report> {
    let report = match verb {
        Verb::Info {
            input,
            circles,
            forest,
            blocks,
        } => info(&load(&input.file)?, *circles, *forest, *blocks, lim)?,
        Verb::Balance { input, edges } => {
            let g = load(&input.file)?;
            let s = match edges {
                Some(ids) => edges_arg(&g, ids)?,
                None => g.all_edges(),
            };
            balance_verb(&g, &s, edges.is_none())
        }
        Verb::Switch { input, set, to, iso } => {
            let g = load(&input.file)?;
            match to {
                Some(p) => compare(&g, &load(p)?, *iso, lim)?,
                None => switch_verb(&g, &vertices_arg(&g, set)?)?,
            }
        }
        Verb::BalancingEdges { input, minimum } => balancing(&load(&input.file)?, *minimum, lim)?,
        Verb::Delete { input, edges } => {
            let g = load(&input.file)?;
            let s = edges_arg(&g, edges)?;
            let h = minors::delete_edges(&g, &s);
            let text = format!("# deleted {}\n{}", eset(&g, &s), serialize(&h));
            Report::new(
                "delete",
                Some(&g),
                text,
                json!({"deleted": elist(&g, &s), "graph": serialize(&h)}),
            )
        }
        Verb::Contract {
            input,
            edges,
            delete,
            stepwise,
        } => {
            let g = load(&input.file)?;
            contract(&g, &edges_arg(&g, edges)?, &edges_arg(&g, delete)?, *stepwise)?
        }
        Verb::FrameCircuits { input } => frame_circuits(&load(&input.file)?, lim)?,
        Verb::Closure {
            input,
            edges,
            lattice,
        } => {
            let g = load(&input.file)?;
            if *lattice {
                closure_lattice(&g, lim)?
            } else {
                closure_verb(&g, &edges_arg(&g, edges)?)
            }
        }
        Verb::Rank { input, edges } => {
            let g = load(&input.file)?;
            let s = match edges {
                Some(ids) => edges_arg(&g, ids)?,
                None => g.all_edges(),
            };
            rank_verb(&g, &s)
        }
        Verb::Matrix {
            input,
            which,
            reduced,
        } => {
            let g = load(&input.file)?;
            let g = if *reduced { matrices::reduce(&g) } else { g };
            matrix_verb(&g, *which)
        }
        Verb::MatrixTree { input } => matrix_tree(&load(&input.file)?, lim)?,
        Verb::Spectrum { input, which } => spectrum_verb(&load(&input.file)?, *which)?,
        Verb::Regions { input, oracle } => regions(&load(&input.file)?, *oracle, lim)?,
        Verb::Acyclic { input, count } => acyclic(&load(&input.file)?, *count, lim)?,
        Verb::Charpoly { input } => charpoly(&load(&input.file)?, lim)?,
        Verb::Chromatic {
            input,
            zero_free,
            algorithm,
            k,
            numbers,
            coloration,
            stable_sets,
        } => chromatic(
            &load(&input.file)?,
            ChromaticOpts {
                zero_free: *zero_free,
                algorithm: *algorithm,
                k: *k,
                numbers: *numbers,
                coloration: coloration.as_deref(),
                stable_sets: *stable_sets,
            },
            lim,
        )?,
        Verb::Catalog {
            family,
            base,
            n,
            file,
        } => catalog_verb(family, base.as_deref(), *n, file.as_deref(), lim)?,
        Verb::Linegraph {
            input,
            reduced,
            harary_norman,
        } => linegraph_verb(&load(&input.file)?, *reduced, *harary_norman)?,
        Verb::Glinegraph { base, m, file } => {
            glinegraph(&simple_base(base.as_deref(), file.as_deref())?, m, lim)?
        }
        Verb::Roots {
            name,
            n,
            list,
            graph,
        } => roots(name, *n, *list, graph.as_deref())?,
        Verb::Gramian { input, nu, anti } => gramian(&load(&input.file)?, *nu, *anti)?,
        Verb::Random {
            seed,
            order,
            edges,
            kinds,
        } => random(*seed, *order, *edges, *kinds)?,
    };
    if format == Format::Tsv && report.tsv.is_none() {
        return Err(CliError::Usage(format!(
            "--format tsv is not available for `{}`",
            report.verb
        )));
    }
    Ok(report)
}

fn info(g: &SignedGraph, circles: bool, forest: bool, show_blocks: bool, lim: &Limits) -> Result<Report> {
    let (links, loops, half, loose) = g.kind_counts();
    let all = g.all_edges();
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v).expect("vertex")).collect();
    let mut text = format!(
        "order: {}\nsize: {} (links {links}, loops {loops}, half edges {half}, loose edges {loose})\n",
        g.order(),
        g.size()
    );
    let degree_text: Vec<String> = degrees.iter().map(ToString::to_string).collect();
    writeln!(text, "degrees: {}", degree_text.join(" ")).unwrap();
    writeln!(text, "balanced: {}", yes(balance::is_balanced_graph(g))).unwrap();
    writeln!(text, "balanced components: {}", balance::b(g, &all)).unwrap();
    let mut result = json!({
        "degrees": degrees,
        "balanced": balance::is_balanced_graph(g),
        "b": balance::b(g, &all),
    });
    let sign_of = |s: &EdgeSet| g.edge_set_sign(s).map(sign_char);
    if circles {
        let cs = enumerate_circles(g, &all, lim)?;
        writeln!(text, "circles: {}", cs.len()).unwrap();
        let mut items = Vec::new();
        for c in &cs {
            let s = sign_of(c.edges())?;
            writeln!(text, "  {} {s}", eset(g, c.edges())).unwrap();
            items.push(json!({"edges": elist(g, c.edges()), "sign": s.to_string()}));
        }
        result["circles"] = json!(items);
    }
    if forest {
        let t = spanning_forest(g, &all);
        writeln!(text, "spanning forest: {}", eset(g, &t)).unwrap();
        let mut items = Vec::new();
        for (e, c) in fundamental_system(g, &t)? {
            let s = sign_of(c.edges())?;
            let id = &g.edge(e).id;
            writeln!(text, "  {id}: {} {s}", eset(g, c.edges())).unwrap();
            items.push(json!({"edge": id, "circle": elist(g, c.edges()), "sign": s.to_string()}));
        }
        result["forest"] = elist(g, &t);
        result["fundamental_circles"] = json!(items);
    }
    if show_blocks {
        let bs = blocks(g);
        writeln!(text, "blocks: {}", bs.len()).unwrap();
        for b in &bs {
            writeln!(text, "  {}", eset(g, b)).unwrap();
        }
        result["blocks"] = json!(bs.iter().map(|b| elist(g, b)).collect::<Vec<_>>());
    }
    Ok(Report::new("info", Some(g), text, result))
}

fn balance_verb(g: &SignedGraph, s: &EdgeSet, whole: bool) -> Report {
    let p = balance::balance_partition(g, s);
    let balanced = balance::is_balanced(g, s);
    let mut text = format!("balanced: {balanced}, b={}, V0={}\n", p.b, vset(&p.v0));
    let blocks: Vec<String> = p.pib.iter().map(|c| vset(c)).collect();
    if !blocks.is_empty() {
        writeln!(text, "balanced components: {}", blocks.join(" ")).unwrap();
    }
    let mut result = json!({
        "balanced": balanced,
        "b": p.b,
        "v0": vlist(&p.v0),
        "pib": p.pib.iter().map(|c| vlist(c)).collect::<Vec<_>>(),
        "edges": elist(g, s),
    });
    if whole {
        if let Some((x, y)) = balance::harary_bipartition(g) {
            writeln!(text, "harary bipartition: {} | {}", vset(&x), vset(&y)).unwrap();
            result["harary_bipartition"] = json!([vlist(&x), vlist(&y)]);
        }
    }
    Report::new("balance", Some(g), text, result)
}

fn switch_verb(g: &SignedGraph, set: &[usize]) -> Result<Report> {
    let z = SwitchingFunction::from_set(g.order(), set)?;
    let h = balance::switch(g, &z)?;
    let text = format!("# switched at {}\n{}", vset(set), serialize(&h));
    Ok(Report::new(
        "switch",
        Some(g),
        text,
        json!({"set": vlist(set), "graph": serialize(&h)}),
    ))
}

fn compare(g: &SignedGraph, h: &SignedGraph, allow_relabel: bool, lim: &Limits) -> Result<Report> {
    if allow_relabel {
        let found = iso::switching_isomorphism(g, h, lim)?;
        let mut text = format!("isomorphic up to switching: {}\n", yes(found.is_some()));
        let mut result = json!({"isomorphic": found.is_some()});
        if let Some(f) = found {
            let map: Vec<String> = f.map.iter().enumerate().map(|(v, w)| format!("{}->{}", v + 1, w + 1)).collect();
            writeln!(text, "map: {}", map.join(" ")).unwrap();
            writeln!(text, "switch at: {}", vset(&f.zeta.minus_set())).unwrap();
            result["map"] = json!(f.map.iter().map(|w| w + 1).collect::<Vec<_>>());
            result["switch_at"] = vlist(&f.zeta.minus_set());
        }
        return Ok(Report::new("switch", Some(g), text, result));
    }
    let found = match balance::switching_equivalent(g, h) {
        Ok(z) => z,
        Err(sgraph::Error::UnderlyingMismatch(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("switching equivalent: {}\n", yes(found.is_some()));
    let mut result = json!({"equivalent": found.is_some()});
    if let Some(z) = found {
        writeln!(text, "switch at: {}", vset(&z.minus_set())).unwrap();
        result["switch_at"] = vlist(&z.minus_set());
    }
    Ok(Report::new("switch", Some(g), text, result))
}

fn balancing(g: &SignedGraph, minimum: bool, lim: &Limits) -> Result<Report> {
    let classes = balance::classify_balancing_edges(g);
    let mut text = String::new();
    let mut per_edge = serde_json::Map::new();
    for (e, c) in g.edges().iter().zip(&classes) {
        writeln!(text, "{}: {}", e.id, c.name()).unwrap();
        per_edge.insert(e.id.clone(), json!(c.name()));
    }
    let verts = balance::balancing_vertices(g);
    writeln!(text, "balancing vertices: {}", vset(&verts)).unwrap();
    let two = balance::has_two_disjoint_negative_circles(g, lim)?;
    writeln!(text, "two vertex-disjoint negative circles: {}", yes(two)).unwrap();
    let mut result = json!({
        "classes": per_edge,
        "balancing_vertices": vlist(&verts),
        "two_disjoint_negative_circles": two,
    });
    if minimum {
        let s = balance::min_balancing_set(g, lim)?;
        writeln!(text, "minimum balancing set: {} (size {})", eset(g, &s), s.len()).unwrap();
        result["minimum_balancing_set"] = elist(g, &s);
    }
    Ok(Report::new("balancing-edges", Some(g), text, result))
}

fn images_text(image: &[Option<usize>]) -> String {
    let parts: Vec<String> = image
        .iter()
        .enumerate()
        .map(|(v, w)| match w {
            Some(w) => format!("{}->{}", v + 1, w + 1),
            None => format!("{}->-", v + 1),
        })
        .collect();
    parts.join(" ")
}

fn contract(g: &SignedGraph, c: &EdgeSet, d: &EdgeSet, stepwise: bool) -> Result<Report> {
    let (h, image) = if stepwise {
        let mut h = minors::delete_edges(g, d);
        let mut image: Vec<Option<usize>> = (0..g.order()).map(Some).collect();
        for e in c.iter() {
            let (next, trace) = minors::contract_edge(&h, &g.edge(e).id)?;
            for slot in image.iter_mut() {
                *slot = slot.and_then(|v| trace.vertex_image[v]);
            }
            h = next;
        }
        (h, image)
    } else {
        let (h, trace) = minors::minor(g, d, c)?;
        (h, trace.vertex_image)
    };
    let text = format!(
        "# contracted {} deleted {}\n# vertex images: {}\n{}",
        eset(g, c),
        eset(g, d),
        images_text(&image),
        serialize(&h)
    );
    let result = json!({
        "contracted": elist(g, c),
        "deleted": elist(g, d),
        "vertex_images": image.iter().map(|w| w.map(|w| w + 1)).collect::<Vec<_>>(),
        "graph": serialize(&h),
    });
    Ok(Report::new("contract", Some(g), text, result))
}

fn frame_circuits(g: &SignedGraph, lim: &Limits) -> Result<Report> {
    let circuits = frame::enumerate_frame_circuits(g, lim)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for c in &circuits {
        write!(text, "{} {}", c.kind.name(), eset(g, &c.edges)).unwrap();
        let mut item = json!({"kind": c.kind.name(), "edges": elist(g, &c.edges)});
        if matches!(c.kind, FrameCircuitKind::TightHandcuff | FrameCircuitKind::LooseHandcuff) {
            let cs: Vec<String> = c.circles.iter().map(|s| eset(g, s)).collect();
            write!(text, " circles {}", cs.join(" ")).unwrap();
            item["circles"] = json!(c.circles.iter().map(|s| elist(g, s)).collect::<Vec<_>>());
        }
        if c.kind == FrameCircuitKind::LooseHandcuff {
            write!(text, " path {}", eset(g, &c.path)).unwrap();
            item["path"] = elist(g, &c.path);
        }
        text.push('\n');
        items.push(item);
    }
    writeln!(text, "frame circuits: {}", circuits.len()).unwrap();
    Ok(Report::new("frame-circuits", Some(g), text, json!({"circuits": items})))
}

fn closure_verb(g: &SignedGraph, s: &EdgeSet) -> Report {
    let clos = frame::closure(g, s);
    let bcl = frame::balance_closure(g, s);
    let text = format!(
        "set: {}\nclosure: {}\nbalance closure: {}\nclosed: {}\nrank: {}\n",
        eset(g, s),
        eset(g, &clos),
        eset(g, &bcl),
        yes(clos == *s),
        frame::rank(g, s)
    );
    Report::new(
        "closure",
        Some(g),
        text,
        json!({
            "set": elist(g, s),
            "closure": elist(g, &clos),
            "balance_closure": elist(g, &bcl),
            "closed": clos == *s,
            "rank": frame::rank(g, s),
        }),
    )
}

fn closure_lattice(g: &SignedGraph, lim: &Limits) -> Result<Report> {
    let lat = frame::closed_sets(g, lim)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for s in &lat.elements {
        let r = frame::rank(g, s);
        writeln!(text, "rank {r}: {}", eset(g, s)).unwrap();
        items.push(json!({"rank": r, "edges": elist(g, s)}));
    }
    writeln!(text, "closed sets: {}", lat.len()).unwrap();
    Ok(Report::new("closure", Some(g), text, json!({"closed_sets": items})))
}

fn rank_verb(g: &SignedGraph, s: &EdgeSet) -> Report {
    let r = frame::rank(g, s);
    let ind = frame::is_independent(g, s);
    let b = balance::b(g, s);
    let columns = matrices::incidence_rank(g, s);
    let text = format!(
        "set: {}\nrank: {r}\nsize: {}\nindependent: {}\nb: {b}\nrank of incidence columns: {columns}\n",
        eset(g, s),
        s.len(),
        yes(ind)
    );
    Report::new(
        "rank",
        Some(g),
        text,
        json!({"set": elist(g, s), "rank": r, "independent": ind, "b": b, "incidence_rank": columns}),
    )
}

fn which_matrix(g: &SignedGraph, which: WhichMatrix) -> IntMatrix {
    match which {
        WhichMatrix::Incidence => matrices::incidence_matrix(g),
        WhichMatrix::Adjacency => matrices::adjacency_matrix(g),
        WhichMatrix::Degree => matrices::degree_matrix(g),
        WhichMatrix::Laplacian => matrices::laplacian(g),
    }
}

fn which_name(which: WhichMatrix) -> &'static str {
    match which {
        WhichMatrix::Incidence => "incidence",
        WhichMatrix::Adjacency => "adjacency",
        WhichMatrix::Degree => "degree",
        WhichMatrix::Laplacian => "laplacian",
    }
}

fn matrix_verb(g: &SignedGraph, which: WhichMatrix) -> Report {
    let m = which_matrix(g, which);
    let cols: Vec<String> = if which == WhichMatrix::Incidence {
        g.edges().iter().map(|e| e.id.clone()).collect()
    } else {
        (1..=g.order()).map(|v| format!("v{v}")).collect()
    };
    let ids: Vec<&str> = cols.iter().map(String::as_str).collect();
    let text = matrix_text(&m, (which == WhichMatrix::Incidence).then_some(&ids[..]));
    let mut report = Report::new(
        "matrix",
        Some(g),
        text,
        json!({"which": which_name(which), "columns": cols, "rows": m.to_rows()}),
    );
    report.tsv = Some(matrix_tsv(&m, &cols));
    report
}

fn matrix_tree(g: &SignedGraph, lim: &Limits) -> Result<Report> {
    let r = matrices::matrix_tree(g, lim)?;
    let counts: Vec<String> = r.b.iter().map(ToString::to_string).collect();
    let text = format!(
        "det L = {}\nb_i (i = 0..n): {}\nsum 4^i b_i = {}\nholds: {}\n",
        r.det_l,
        counts.join(" "),
        r.weighted_sum,
        yes(r.det_l == r.weighted_sum)
    );
    Ok(Report::new(
        "matrix-tree",
        Some(g),
        text,
        json!({
            "det_l": big(&r.det_l),
            "b": r.b,
            "weighted_sum": big(&r.weighted_sum),
            "holds": r.det_l == r.weighted_sum,
        }),
    ))
}

fn spectrum_verb(g: &SignedGraph, which: WhichMatrix) -> Result<Report> {
    if which == WhichMatrix::Incidence {
        return Err(CliError::Usage("the incidence matrix is not square; use --which adjacency|degree|laplacian".into()));
    }
    let eig = matrices::spectrum(&which_matrix(g, which), 1e-9)?;
    let parts: Vec<String> = eig.iter().map(|&x| ftext(x)).collect();
    let text = format!("{} eigenvalues: {}\n", which_name(which), parts.join(" "));
    Ok(Report::new(
        "spectrum",
        Some(g),
        text,
        json!({"which": which_name(which), "eigenvalues": eig.iter().map(|&x| num(x)).collect::<Vec<_>>()}),
    ))
}

fn regions(g: &SignedGraph, oracle: bool, lim: &Limits) -> Result<Report> {
    let r = orientation::region_count(g, oracle, lim)?;
    let mut text = format!(
        "regions: {}\ncharacteristic polynomial: {}\ndegenerate: {}\n",
        r.region_count,
        r.char_poly,
        yes(r.degenerate)
    );
    if let (Some(a), Some(s)) = (r.acyclic_count, r.sign_vector_regions) {
        writeln!(text, "acyclic orientations: {a}\nsign-vector regions: {s}").unwrap();
        writeln!(text, "agree: {}", yes(a == r.region_count && s == r.region_count)).unwrap();
    }
    Ok(Report::new(
        "regions",
        Some(g),
        text,
        json!({
            "regions": r.region_count,
            "char_poly": r.char_poly.to_string(),
            "degenerate": r.degenerate,
            "acyclic_orientations": r.acyclic_count,
            "sign_vector_regions": r.sign_vector_regions,
        }),
    ))
}

fn acyclic(g: &SignedGraph, count_only: bool, lim: &Limits) -> Result<Report> {
    if count_only {
        let n = orientation::enumerate_acyclic(g, lim)?;
        return Ok(Report::new(
            "acyclic",
            Some(g),
            format!("acyclic orientations: {n}\n"),
            json!({"count": n}),
        ));
    }
    let mut text = String::new();
    let mut items = Vec::new();
    for b in orientation::all_orientations(g, lim)? {
        if !orientation::is_acyclic(&b, lim)? {
            continue;
        }
        let tau: Vec<String> = g
            .edges()
            .iter()
            .zip(b.tau())
            .map(|(e, t)| format!("{}:{}", e.id, t.iter().map(|&s| sign_char(s)).collect::<String>()))
            .collect();
        let witness = orientation::region_witness(&b);
        let w = witness.as_ref().map_or("none".to_string(), |x| {
            format!("({})", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        });
        writeln!(text, "{} witness {w}", tau.join(" ")).unwrap();
        items.push(json!({"tau": tau, "witness": witness}));
    }
    writeln!(text, "acyclic orientations: {}", items.len()).unwrap();
    Ok(Report::new(
        "acyclic",
        Some(g),
        text,
        json!({"count": items.len(), "orientations": items}),
    ))
}

fn charpoly(g: &SignedGraph, lim: &Limits) -> Result<Report> {
    let p = orientation::characteristic_polynomial(g, lim)?;
    let hs = orientation::arrangement(g);
    let mut text = format!("p(λ) = {p}\nhyperplanes:\n");
    let mut items = serde_json::Map::new();
    for (e, h) in g.edges().iter().zip(&hs) {
        writeln!(text, "  {}: {h}", e.id).unwrap();
        items.insert(e.id.clone(), json!(h.to_string()));
    }
    Ok(Report::new(
        "charpoly",
        Some(g),
        text,
        json!({"char_poly": p.to_string(), "coefficients": p.coeffs(), "hyperplanes": items}),
    ))
}

struct ChromaticOpts<'a> {
    zero_free: bool,
    algorithm: Algorithm,
    k: Option<u32>,
    numbers: bool,
    coloration: Option<&'a [i64]>,
    stable_sets: bool,
}

fn chromatic(g: &SignedGraph, o: ChromaticOpts<'_>, lim: &Limits) -> Result<Report> {
    let name = if o.zero_free { "chi*" } else { "chi" };
    let mut text = String::new();
    let mut result = json!({"zero_free": o.zero_free});
    let poly = match o.algorithm {
        Algorithm::Delcon => Some(coloring::chromatic_poly_delcon(g, o.zero_free)),
        Algorithm::Subset => Some(coloring::chromatic_poly_subset(g, o.zero_free, lim)?),
        Algorithm::Expansion if o.zero_free => {
            return Err(CliError::Usage("the stable-set expansion gives chi only; drop --zero-free".into()))
        }
        Algorithm::Expansion => Some(coloring::chromatic_via_expansion(g, lim)?),
        Algorithm::Count => None,
    };
    if let Some(p) = &poly {
        writeln!(text, "{name}(λ) = {p}").unwrap();
        result["polynomial"] = json!(p.to_string());
        result["coefficients"] = json!(p.coeffs());
    }
    match (o.algorithm, o.k) {
        (Algorithm::Count, None) => {
            return Err(CliError::Usage("--algorithm count needs --k".into()));
        }
        (_, Some(k)) => {
            let lambda = if o.zero_free { 2 * i64::from(k) } else { 2 * i64::from(k) + 1 };
            let counted = coloring::count_proper(g, k, o.zero_free, lim)?;
            writeln!(text, "proper colorations with k = {k} (λ = {lambda}): {counted}").unwrap();
            result["k"] = json!(k);
            result["count"] = json!(counted);
            if let Some(p) = &poly {
                let agree = p.eval(lambda) == i128::from(counted);
                writeln!(text, "{name}({lambda}) agrees: {}", yes(agree)).unwrap();
                result["agrees"] = json!(agree);
            }
        }
        _ => {}
    }
    if o.numbers {
        let nums = coloring::chromatic_numbers(g);
        let show = |x: Option<u64>| x.map_or("none".to_string(), |k| k.to_string());
        writeln!(text, "chromatic number: {}", show(nums.chi)).unwrap();
        writeln!(text, "zero-free chromatic number: {}", show(nums.chi_star)).unwrap();
        result["chromatic_number"] = json!(nums.chi);
        result["zero_free_chromatic_number"] = json!(nums.chi_star);
    }
    if let Some(colors) = o.coloration {
        let c = Coloration::new(colors.to_vec());
        let proper = coloring::is_proper(g, &c).map_err(usage)?;
        let shown: Vec<String> = colors.iter().map(ToString::to_string).collect();
        writeln!(
            text,
            "coloration ({}): {}, k = {}, zero-free: {}",
            shown.join(","),
            if proper { "proper" } else { "improper" },
            c.k(),
            yes(c.is_zero_free())
        )
        .unwrap();
        result["coloration_proper"] = json!(proper);
    }
    if o.stable_sets {
        let sets = coloring::stable_sets(g, lim)?;
        writeln!(text, "stable sets: {}", sets.len()).unwrap();
        for s in &sets {
            writeln!(text, "  {}", vset(s)).unwrap();
        }
        result["stable_sets"] = json!(sets.iter().map(|s| vlist(s)).collect::<Vec<_>>());
    }
    Ok(Report::new("chromatic", Some(g), text, result))
}

fn catalog_verb(
    family: &str,
    base: Option<&str>,
    n: Option<usize>,
    file: Option<&Path>,
    lim: &Limits,
) -> Result<Report> {
    let family: CatalogFamily = family.parse().map_err(usage)?;
    let base_graph = match (base, n, file) {
        (Some(name), _, _) => SimpleGraph::named(name).map_err(usage)?.signed(Sign::Plus),
        (None, Some(n), _) if family.needs_order_only() => SignedGraph::new(n),
        (None, Some(n), _) => SimpleGraph::complete(n).signed(Sign::Plus),
        (None, None, Some(p)) => load(p)?,
        (None, None, None) => {
            return Err(CliError::Usage("give a base graph with --base, --n or a file".into()))
        }
    };
    let entry = catalog(family, &base_graph, lim)?;
    let g = &entry.graph;
    let mut text = format!("family: {family}\n");
    let mut result = json!({"family": family.tag(), "graph": serialize(g)});
    let mark = |agree: bool| if agree { "agrees with general algorithm" } else { "DIFFERS from general algorithm" };
    for (label, key, predicted, zf) in [
        ("chi", "chi", &entry.chi, false),
        ("chi*", "chi_star", &entry.chi_star, true),
    ] {
        if let Some(p) = predicted {
            let general = coloring::chromatic_poly_delcon(g, zf);
            writeln!(text, "{label}(λ) = {p} ({})", mark(&general == p)).unwrap();
            result[key] = json!({"predicted": p.to_string(), "general": general.to_string()});
        }
    }
    if let Some(nums) = &entry.numbers {
        let general = coloring::chromatic_numbers(g);
        for (label, key, predicted, actual) in [
            ("chromatic number", "chromatic_number", nums.chi, general.chi),
            ("zero-free chromatic number", "zero_free_chromatic_number", nums.chi_star, general.chi_star),
        ] {
            if let Some(k) = predicted {
                writeln!(text, "{label}: {k} ({})", mark(Some(k) == actual)).unwrap();
                result[key] = json!({"predicted": k, "general": actual});
            }
        }
    }
    if let Some(r) = entry.regions {
        let general = orientation::region_count(g, false, lim)?.region_count;
        writeln!(text, "regions: {r} ({})", mark(r == general)).unwrap();
        result["regions"] = json!({"predicted": r, "general": general});
    }
    write!(text, "graph:\n{}", serialize(g)).unwrap();
    Ok(Report::new("catalog", Some(g), text, result))
}

fn linegraph_verb(g: &SignedGraph, reduced: bool, harary_norman: bool) -> Result<Report> {
    if harary_norman {
        let hn = linegraph::harary_norman(&orient(g))?;
        let h = hn.signed(Sign::Plus);
        let text = format!("# Harary-Norman line graph\n{}", serialize(&h));
        return Ok(Report::new("linegraph", Some(g), text, json!({"graph": serialize(&h)})));
    }
    let lg = line_graph(&orient(g))?;
    let line = if reduced {
        matrices::reduce(lg.line.graph())
    } else {
        lg.line.graph().clone()
    };
    let (a, rhs) = linegraph::line_adjacency_identity(g)?;
    let holds = a == rhs;
    let red = linegraph::reduced_line_graph(g)?;
    let top = if red.order() == 0 {
        0.0
    } else {
        matrices::max_eigenvalue(&matrices::adjacency_matrix(&red))?
    };
    let text = format!(
        "{}# A(line graph) = 2I - H^T H: {}\n# largest eigenvalue of the reduced line graph: {}\n",
        serialize(&line),
        if holds { "holds" } else { "FAILS" },
        ftext(top)
    );
    Ok(Report::new(
        "linegraph",
        Some(g),
        text,
        json!({
            "graph": serialize(&line),
            "reduced": reduced,
            "identity_holds": holds,
            "max_eigenvalue_reduced": num(top),
        }),
    ))
}

fn glinegraph(base: &SimpleGraph, m: &[usize], lim: &Limits) -> Result<Report> {
    let (source, target, f) = linegraph::generalized_line_graph(base, m, lim)?;
    let lambda = target.negated();
    let low = if lambda.order() == 0 {
        0.0
    } else {
        matrices::min_eigenvalue(&matrices::adjacency_matrix(&lambda))?
    };
    let map: Vec<String> = f.map.iter().enumerate().map(|(v, w)| format!("{}->{}", v + 1, w + 1)).collect();
    let text = format!(
        "# digon extension -Γ(m)\n{}# negative generalized line graph -Λ(Γ; m)\n{}# reduced line graph of -Γ(m) is switching isomorphic to -Λ(Γ; m)\n# map: {}\n# switch at: {}\n# least eigenvalue of Λ(Γ; m): {}\n",
        serialize(&source),
        serialize(&target),
        map.join(" "),
        vset(&f.zeta.minus_set()),
        ftext(low)
    );
    Ok(Report::new(
        "glinegraph",
        None,
        text,
        json!({
            "m": m,
            "digon_extension": serialize(&source),
            "negative_generalized_line_graph": serialize(&target),
            "map": f.map.iter().map(|w| w + 1).collect::<Vec<_>>(),
            "switch_at": vlist(&f.zeta.minus_set()),
            "min_eigenvalue": num(low),
        }),
    ))
}

fn rational_text(x: &[Rational64]) -> String {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn roots(name: &str, n: usize, list: bool, graph: Option<&Path>) -> Result<Report> {
    let kind: RootSystemKind = name.parse().map_err(usage)?;
    let rs = root_system(kind, n).map_err(usage)?;
    let dots: Vec<String> = angle::pairwise_dots(&rs).iter().map(ToString::to_string).collect();
    let mut text = format!(
        "name: {}\ndimension: {}\nvectors: {}\n|dot| between distinct non-opposite vectors: {{{}}}\n",
        rs.name(),
        rs.dim,
        rs.len(),
        dots.join(", ")
    );
    let mut result = json!({"name": rs.name(), "dimension": rs.dim, "count": rs.len(), "dots": dots});
    if list {
        for v in &rs.vectors {
            writeln!(text, "  {}", rational_text(v)).unwrap();
        }
        result["vectors"] = json!(rs.vectors.iter().map(|v| rational_text(v)).collect::<Vec<_>>());
    }
    if let Some(p) = graph {
        let g = load(p)?;
        let rep = angle::edge_vector_representation(&g);
        let inside = angle::membership_in_root_system(&rep, &rs).map_err(usage)?;
        let covers = angle::covers_root_pairs(&rep, &rs);
        writeln!(text, "edge vectors in {}: {}", rs.name(), yes(inside)).unwrap();
        writeln!(text, "edge vectors meet every ± pair: {}", yes(covers)).unwrap();
        result["edge_vectors_inside"] = json!(inside);
        result["covers_pairs"] = json!(covers);
    }
    Ok(Report::new("roots", None, text, result))
}

fn gramian(g: &SignedGraph, nu: f64, anti: bool) -> Result<Report> {
    let a = matrices::adjacency_matrix(g);
    let (lo, hi) = if g.order() == 0 {
        (0.0, 0.0)
    } else {
        (matrices::min_eigenvalue(&a)?, matrices::max_eigenvalue(&a)?)
    };
    let rep = angle::construct_gramian(g, nu, anti)?;
    let kind = if anti { "anti-Gramian" } else { "Gramian" };
    let mut text = format!(
        "{kind} representation with ν = {}: {}\neigenvalue range: [{}, {}]\n",
        ftext(nu),
        if rep.is_some() { "exists" } else { "none" },
        ftext(lo),
        ftext(hi)
    );
    let mut result = json!({
        "anti": anti,
        "nu": num(nu),
        "exists": rep.is_some(),
        "min_eigenvalue": num(lo),
        "max_eigenvalue": num(hi),
    });
    if let Some(rep) = rep {
        let err = angle::gram_error(g, &rep)?;
        let ok = err < angle::TOL;
        let valid = angle::verify_representation(g, &rep)?;
        let renorm = angle::gram_error(g, &angle::normalize(&rep))? < angle::TOL;
        writeln!(text, "dimension: {}", rep.dim()).unwrap();
        writeln!(text, "Gram matrix reproduced within {:e}: {}", angle::TOL, yes(ok)).unwrap();
        writeln!(text, "angle conditions hold: {}", yes(valid)).unwrap();
        writeln!(text, "stable under normalization: {}", yes(renorm)).unwrap();
        let vectors: Vec<Vec<f64>> = rep
            .rho
            .iter()
            .map(|x| x.iter().map(|&c| round12(c)).collect())
            .collect();
        for (v, x) in vectors.iter().enumerate() {
            let parts: Vec<String> = x.iter().map(|&c| ftext(c)).collect();
            writeln!(text, "  v{}: ({})", v + 1, parts.join(", ")).unwrap();
        }
        result["dimension"] = json!(rep.dim());
        result["gram_ok"] = json!(ok);
        result["valid"] = json!(valid);
        result["vectors"] = json!(vectors);
    }
    Ok(Report::new("gramian", Some(g), text, result))
}

fn random(seed: u64, order: usize, edges: usize, kinds: Kinds) -> Result<Report> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let mut rng = kit::rng(seed);
    let g = match kinds {
        Kinds::Simple => {
            let pairs = order * (order - 1) / 2;
            let p = if pairs == 0 { 0.0 } else { (edges as f64 / pairs as f64).min(1.0) };
            kit::random_simple(&mut rng, order, p)
        }
        Kinds::Any | Kinds::Links => {
            let mut spec = if kinds == Kinds::Any {
                kit::GraphSpec::any(order, edges)
            } else {
                kit::GraphSpec::links(order, edges)
            };
            spec.min_order = order;
            kit::random_graph(&mut rng, &spec)
        }
    };
    let text = format!("# random --seed {seed}\n{}", serialize(&g));
    Ok(Report::new("random", Some(&g), text, json!({"seed": seed, "graph": serialize(&g)})))
}
