//! Proper colorations and the two chromatic polynomials.
//!
//! `χ(λ)` counts proper colorations into `{-k..k}` at `λ = 2k + 1`; the
//! zero-free `χ*(λ)` counts those into `{±1..±k}` at `λ = 2k`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::balance;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};
use crate::minors::contract_edge;
use crate::poly::IntPolynomial;

/// A color `γ(v)` for every vertex, drawn from `{-k..k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloration(Vec<i64>);

impl Coloration {
    pub fn new(colors: Vec<i64>) -> Self {
        Coloration(colors)
    }

    pub fn colors(&self) -> &[i64] {
        &self.0
    }

    /// Largest `|γ(v)|`, so the coloration is a `k`-coloration for this `k`.
    pub fn k(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn is_zero_free(&self) -> bool {
        self.0.iter().all(|&c| c != 0)
    }
}

pub fn is_proper(g: &SignedGraph, gamma: &Coloration) -> Result<bool> {
    if gamma.0.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: gamma.0.len(),
        });
    }
    Ok(proper(g, &gamma.0))
}

fn proper(g: &SignedGraph, c: &[i64]) -> bool {
    g.edges().iter().all(|e| match e.kind {
        EdgeKind::Link { u, v, sign } => c[v] != sign.to_i64() * c[u],
        EdgeKind::Loop { v, sign } => c[v] != sign.to_i64() * c[v],
        EdgeKind::Half { v } => c[v] != 0,
        EdgeKind::Loose => false,
    })
}

/// Proper `k`-colorations (zero-free ones when asked), by enumeration.
pub fn count_proper(g: &SignedGraph, k: u32, zero_free: bool, lim: &Limits) -> Result<u64> {
    let n = g.order();
    let palette: Vec<i64> = (-(k as i64)..=k as i64)
        .filter(|&c| !(zero_free && c == 0))
        .collect();
    let base = palette.len() as u64;
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(base));
    let total = match total {
        Some(t) if t <= lim.max_colorations => t,
        _ => {
            return Err(Error::CapExceeded {
                what: "colorations",
                size: usize::try_from(base.saturating_pow(n as u32)).unwrap_or(usize::MAX),
                cap: lim.max_colorations as usize,
            })
        }
    };
    if base == 0 {
        return Ok(u64::from(n == 0 && proper(g, &[])));
    }
    Ok((0..total)
        .into_par_iter()
        .filter(|&idx| {
            let mut x = idx;
            let c: Vec<i64> = (0..n)
                .map(|_| {
                    let d = palette[(x % base) as usize];
                    x /= base;
                    d
                })
                .collect();
            proper(g, &c)
        })
        .count() as u64)
}

/// Reduce to the constraints that matter: one link per `(lo, hi, sign)` and
/// one half edge per vertex carrying an unbalanced edge (none at all in the
/// zero-free case). Returns `None` when a positive loop or loose edge forces
/// the polynomial to vanish.
fn normalize(g: &SignedGraph, zero_free: bool) -> Option<SignedGraph> {
    let mut links = BTreeSet::new();
    let mut unbalanced = BTreeSet::new();
    for e in g.edges() {
        match e.kind {
            EdgeKind::Link { u, v, sign } => {
                links.insert((u.min(v), u.max(v), sign));
            }
            EdgeKind::Loop {
                sign: Sign::Plus, ..
            }
            | EdgeKind::Loose => return None,
            EdgeKind::Loop { v, .. } | EdgeKind::Half { v } => {
                if !zero_free {
                    unbalanced.insert(v);
                }
            }
        }
    }
    let mut out = SignedGraph::new(g.order());
    for (i, (u, v, s)) in links.into_iter().enumerate() {
        out.add_edge(format!("l{i}"), u, v, s).expect("in range");
    }
    for v in unbalanced {
        out.add_half(format!("h{v}"), v).expect("in range");
    }
    Some(out)
}

type MemoKey = (usize, Vec<EdgeKind>);

fn delcon(g: &SignedGraph, zero_free: bool, memo: &mut HashMap<MemoKey, IntPolynomial>) -> IntPolynomial {
    let Some(h) = normalize(g, zero_free) else {
        return IntPolynomial::zero();
    };
    if h.size() == 0 {
        return IntPolynomial::monomial(1, h.order());
    }
    let key = (h.order(), h.edges().iter().map(|e| e.kind).collect());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    // Links come first in the normalized graph, so half edges are only
    // contracted once every link is gone.
    let e = &h.edges()[0];
    let deleted = crate::minors::delete_edges(&h, &[0].into_iter().collect());
    let (contracted, _) = contract_edge(&h, &e.id).expect("edge exists");
    let p = delcon(&deleted, zero_free, memo) - delcon(&contracted, zero_free, memo);
    memo.insert(key, p.clone());
    p
}

/// `χ` or `χ*` by deletion and contraction with a private memo table.
///
/// A link `e` gives `P(Σ) = P(Σ \ e) − P(Σ / e)`. For `χ` the same holds for a
/// half edge or negative loop, whose contraction deletes its vertex; for `χ*`
/// such an edge constrains nothing and is simply deleted.
pub fn chromatic_poly_delcon(g: &SignedGraph, zero_free: bool) -> IntPolynomial {
    delcon(g, zero_free, &mut HashMap::new())
}

/// `Σ (−1)^|S| λ^b(S)` over all `S ⊆ E`, or over balanced `S` only.
pub fn chromatic_poly_subset(g: &SignedGraph, zero_free: bool, lim: &Limits) -> Result<IntPolynomial> {
    let m = g.size();
    limits::check("subset-expansion edges", m, lim.max_edges)?;
    let n = g.order();
    let counts = (0..1u64 << m)
        .into_par_iter()
        .fold(
            || vec![0i64; n + 1],
            |mut acc, mask| {
                let s = EdgeSet::from_mask(mask, m);
                if zero_free && !balance::is_balanced(g, &s) {
                    return acc;
                }
                let sign = if s.len().is_multiple_of(2) { 1 } else { -1 };
                acc[balance::b(g, &s)] += sign;
                acc
            },
        )
        .reduce(
            || vec![0i64; n + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    Ok(IntPolynomial::from_coeffs(counts))
}

/// Vertex sets containing every endpoint of no edge. A graph with a loose
/// edge has none.
pub fn stable_sets(g: &SignedGraph, lim: &Limits) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    limits::check("stable-set order", n, lim.max_stable_order)?;
    if g.edges().iter().any(|e| e.is_loose()) {
        return Ok(Vec::new());
    }
    Ok((0..1u64 << n)
        .filter(|&w| {
            g.edges()
                .iter()
                .all(|e| !e.vertices().iter().all(|&v| w >> v & 1 == 1))
        })
        .map(|w| (0..n).filter(|&v| w >> v & 1 == 1).collect())
        .collect())
}

/// `χ(λ) = Σ_W χ*_{Σ∖W}(λ − 1)` over stable `W`.
pub fn chromatic_via_expansion(g: &SignedGraph, lim: &Limits) -> Result<IntPolynomial> {
    stable_sets(g, lim)?
        .iter()
        .try_fold(IntPolynomial::zero(), |acc, w| {
            let (h, _) = g.delete_vertices(w)?;
            Ok(acc + chromatic_poly_subset(&h, true, lim)?.translate(-1))
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChromaticNumbers {
    pub chi: Option<u64>,
    pub chi_star: Option<u64>,
}

/// Least `k` with `χ(2k+1) ≠ 0` and least `k` with `χ*(2k) ≠ 0`.
///
/// With `k = n` every vertex gets its own absolute value, so the search stops
/// there unless the polynomial vanishes identically.
pub fn chromatic_numbers(g: &SignedGraph) -> ChromaticNumbers {
    let first = |p: &IntPolynomial, at: fn(i64) -> i64| {
        (!p.is_zero())
            .then(|| (0..=g.order() as i64).find(|&k| p.eval(at(k)) != 0))
            .flatten()
            .map(|k| k as u64)
    };
    ChromaticNumbers {
        chi: first(&chromatic_poly_delcon(g, false), |k| 2 * k + 1),
        chi_star: first(&chromatic_poly_delcon(g, true), |k| 2 * k),
    }
}
