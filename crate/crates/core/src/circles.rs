//! Circles, spanning forests, fundamental circle systems and blocks.

use std::collections::{BTreeMap, VecDeque};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, SignedGraph};
use crate::limits::{self, Limits};

/// Edge set of a connected 2-regular subgraph, with its vertices in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circle {
    edges: EdgeSet,
    vertices: Vec<usize>,
}

impl Circle {
    /// Validate that `s` is a circle of `g`.
    pub fn new(g: &SignedGraph, s: &EdgeSet) -> Result<Circle> {
        let bad = || Error::InvalidParameter(format!("{:?} is not a circle", g.edge_ids(s)));
        let idx: Vec<usize> = s.iter().collect();
        if idx.is_empty() {
            return Err(bad());
        }
        if idx.len() == 1 {
            return match g.edge(idx[0]).kind {
                EdgeKind::Loop { v, .. } => Ok(Circle {
                    edges: s.clone(),
                    vertices: vec![v],
                }),
                _ => Err(bad()),
            };
        }
        let mut ends = Vec::with_capacity(idx.len());
        for &i in &idx {
            match g.edge(i).kind {
                EdgeKind::Link { u, v, .. } => ends.push((i, u, v)),
                _ => return Err(bad()),
            }
        }
        // Walk around: each vertex must be met by exactly two edges.
        let mut deg = BTreeMap::new();
        for &(_, u, v) in &ends {
            *deg.entry(u).or_insert(0) += 1;
            *deg.entry(v).or_insert(0) += 1;
        }
        if deg.values().any(|&d| d != 2) {
            return Err(bad());
        }
        let (first, start, mut cur) = ends[0];
        let mut used = vec![first];
        let mut vertices = vec![start];
        while cur != start {
            vertices.push(cur);
            let &(i, u, v) = ends
                .iter()
                .find(|(i, u, v)| !used.contains(i) && (*u == cur || *v == cur))
                .ok_or_else(bad)?;
            used.push(i);
            cur = if u == cur { v } else { u };
        }
        if used.len() != ends.len() {
            return Err(bad());
        }
        Ok(Circle {
            edges: s.clone(),
            vertices,
        })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// Vertices in cyclic order, starting at an endpoint of the lowest edge.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Adjacency lists of the links in `s`: for each vertex, `(edge, neighbour)`
/// in increasing edge order.
pub(crate) fn link_adjacency(g: &SignedGraph, s: &EdgeSet) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.order()];
    for i in s.iter() {
        if let EdgeKind::Link { u, v, .. } = g.edge(i).kind {
            adj[u].push((i, v));
            adj[v].push((i, u));
        }
    }
    adj
}

/// Every circle with edges in `s`, each once, sorted by edge set.
pub fn enumerate_circles(g: &SignedGraph, s: &EdgeSet, lim: &Limits) -> Result<Vec<Circle>> {
    limits::check("circle enumeration edges", s.len(), lim.max_edges)?;
    let adj = link_adjacency(g, s);
    let mut out = Vec::new();
    for e in s.iter() {
        match g.edge(e).kind {
            EdgeKind::Loop { v, .. } => out.push(Circle {
                edges: [e].into_iter().collect(),
                vertices: vec![v],
            }),
            EdgeKind::Link { u, v, .. } => {
                // Circles whose lowest edge is e: simple v..u paths over higher edges.
                let mut on_path = vec![false; g.order()];
                on_path[v] = true;
                let mut path_edges = vec![e];
                let mut path_vertices = vec![u, v];
                extend_paths(
                    &adj,
                    e,
                    u,
                    v,
                    &mut on_path,
                    &mut path_edges,
                    &mut path_vertices,
                    &mut out,
                );
            }
            _ => {}
        }
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_paths(
    adj: &[Vec<(usize, usize)>],
    min_edge: usize,
    target: usize,
    at: usize,
    on_path: &mut Vec<bool>,
    path_edges: &mut Vec<usize>,
    path_vertices: &mut Vec<usize>,
    out: &mut Vec<Circle>,
) {
    for &(f, w) in &adj[at] {
        if f <= min_edge {
            continue;
        }
        if w == target {
            let edges = path_edges.iter().copied().chain([f]).collect();
            out.push(Circle {
                edges,
                vertices: path_vertices.clone(),
            });
            continue;
        }
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        path_edges.push(f);
        path_vertices.push(w);
        extend_paths(adj, min_edge, target, w, on_path, path_edges, path_vertices, out);
        path_vertices.pop();
        path_edges.pop();
        on_path[w] = false;
    }
}

/// Breadth-first spanning forest of the links in `s`.
#[derive(Clone, Debug)]
pub struct BfsForest {
    pub edges: EdgeSet,
    /// `(tree edge, parent vertex)` for every non-root vertex.
    pub parent: Vec<Option<(usize, usize)>>,
    /// Root of the tree containing each vertex.
    pub root: Vec<usize>,
    /// Vertices in visit order.
    pub order: Vec<usize>,
}

/// BFS from the lowest unvisited vertex, scanning edges in index order.
pub fn bfs_forest(g: &SignedGraph, s: &EdgeSet) -> BfsForest {
    let adj = link_adjacency(g, s);
    let n = g.order();
    let mut seen = vec![false; n];
    let mut forest = BfsForest {
        edges: EdgeSet::new(),
        parent: vec![None; n],
        root: (0..n).collect(),
        order: Vec::with_capacity(n),
    };
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            forest.order.push(x);
            forest.root[x] = r;
            for &(e, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    forest.edges.insert(e);
                    forest.parent[y] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
    }
    forest
}

/// A maximal forest inside `s`, chosen by [`bfs_forest`].
pub fn spanning_forest(g: &SignedGraph, s: &EdgeSet) -> EdgeSet {
    bfs_forest(g, s).edges
}

/// Fundamental circle of every ordinary edge outside the maximal forest `t`.
pub fn fundamental_system(g: &SignedGraph, t: &EdgeSet) -> Result<BTreeMap<usize, Circle>> {
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in t.iter() {
        let e = g.edge(i);
        match e.kind {
            EdgeKind::Link { u, v, .. } => {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return Err(Error::NotAForest(e.id.clone()));
                }
                parent[a] = b;
            }
            _ => return Err(Error::NotAForest(e.id.clone())),
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        if let EdgeKind::Link { u, v, .. } = e.kind {
            if !t.contains(i) && find(&mut parent, u) != find(&mut parent, v) {
                return Err(Error::NotMaximal(e.id.clone()));
            }
        }
    }
    let adj = link_adjacency(g, t);
    let mut out = BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        if t.contains(i) {
            continue;
        }
        match e.kind {
            EdgeKind::Loop { .. } => {
                let s = [i].into_iter().collect();
                out.insert(i, Circle::new(g, &s)?);
            }
            EdgeKind::Link { u, v, .. } => {
                let mut s = tree_path(&adj, g.order(), u, v).expect("maximal forest");
                s.insert(i);
                out.insert(i, Circle::new(g, &s)?);
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Edges of the unique path from `a` to `b` in a forest given by adjacency.
pub(crate) fn tree_path(
    adj: &[Vec<(usize, usize)>],
    n: usize,
    a: usize,
    b: usize,
) -> Option<EdgeSet> {
    let mut via = vec![None; n];
    let mut seen = vec![false; n];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &(e, y) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((e, x));
                queue.push_back(y);
            }
        }
    }
    if !seen[b] {
        return None;
    }
    let mut path = EdgeSet::new();
    let mut x = b;
    while let Some((e, p)) = via[x] {
        path.insert(e);
        x = p;
    }
    Some(path)
}

/// Blocks of `g` as edge sets. Links are split into biconnected components;
/// every loop and half edge is a block on its own; loose edges belong to none.
pub fn blocks(g: &SignedGraph) -> Vec<EdgeSet> {
    let n = g.order();
    let adj = link_adjacency(g, &g.all_edges());
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        x: usize,
        via: Option<usize>,
        adj: &[Vec<(usize, usize)>],
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<EdgeSet>,
    ) {
        disc[x] = *time;
        low[x] = *time;
        *time += 1;
        for &(e, y) in &adj[x] {
            if Some(e) == via {
                continue;
            }
            if disc[y] == usize::MAX {
                stack.push(e);
                dfs(y, Some(e), adj, disc, low, time, stack, out);
                low[x] = low[x].min(low[y]);
                if low[y] >= disc[x] {
                    let mut block = EdgeSet::new();
                    while let Some(f) = stack.pop() {
                        block.insert(f);
                        if f == e {
                            break;
                        }
                    }
                    out.push(block);
                }
            } else if disc[y] < disc[x] {
                stack.push(e);
                low[x] = low[x].min(disc[y]);
            }
        }
    }

    for r in 0..n {
        if disc[r] == usize::MAX {
            dfs(r, None, &adj, &mut disc, &mut low, &mut time, &mut stack, &mut out);
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        if matches!(e.kind, EdgeKind::Loop { .. } | EdgeKind::Half { .. }) {
            out.push([i].into_iter().collect());
        }
    }
    out.sort();
    out
}
