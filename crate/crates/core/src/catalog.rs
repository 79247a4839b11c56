//! Signed graphs built from an ordinary graph, with their predicted
//! chromatic polynomials, chromatic numbers and region counts.
//!
//! Predictions that involve `χ_Γ` use [`SimpleGraph::chromatic_polynomial`],
//! which knows nothing about signs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::coloring::{chromatic_poly_delcon, ChromaticNumbers};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};
use crate::poly::{ratio, IntPolynomial};

/// An ordinary simple graph, edges stored as sorted pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Parallel edges collapse; loops are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::NotSimple(format!("loop at vertex {}", u + 1)));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, order });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph {
            order,
            edges: set.into_iter().collect(),
        })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid for n >= 3")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid")
    }

    /// `K_n` without the edge `v1 v2`.
    pub fn complete_minus_edge(n: usize) -> Self {
        let k = Self::complete(n);
        Self::new(n, k.edges.into_iter().filter(|&e| e != (0, 1))).expect("valid")
    }

    /// `p3`, `c4`, `k4`, `k4-e`, ...
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown base graph `{name}`"));
        let lower = name.to_ascii_lowercase();
        let (family, rest) = lower.split_at(1.min(lower.len()));
        let (digits, minus) = match rest.strip_suffix("-e") {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let n: usize = digits.parse().map_err(|_| bad())?;
        match (family, minus) {
            ("p", false) => Ok(Self::path(n)),
            ("c", false) if n >= 3 => Ok(Self::cycle(n)),
            ("k", false) => Ok(Self::complete(n)),
            ("k", true) if n >= 2 => Ok(Self::complete_minus_edge(n)),
            _ => Err(bad()),
        }
    }

    /// The underlying simple graph of a link graph.
    pub fn from_signed(g: &SignedGraph) -> Result<Self> {
        g.require_link_graph()?;
        Self::new(
            g.order(),
            g.edges().iter().map(|e| match e.kind {
                EdgeKind::Link { u, v, .. } => (u, v),
                _ => unreachable!("link graph"),
            }),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Every edge with sign `s`, ids `e1, e2, ...`.
    pub fn signed(&self, s: Sign) -> SignedGraph {
        let mut g = SignedGraph::new(self.order);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            g.add_edge(format!("e{}", i + 1), u, v, s).expect("valid");
        }
        g
    }

    pub fn complement(&self) -> Self {
        let have: BTreeSet<_> = self.edges.iter().copied().collect();
        let all = Self::complete(self.order).edges;
        Self::new(self.order, all.into_iter().filter(|e| !have.contains(e))).expect("valid")
    }

    /// `Γ \ W`, remaining vertices renumbered in order.
    pub fn delete_vertices(&self, w: &[usize]) -> Self {
        let mut map = vec![None; self.order];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !w.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        Self::new(
            next,
            self.edges
                .iter()
                .filter_map(|&(u, v)| Some((map[u]?, map[v]?))),
        )
        .expect("valid")
    }

    /// Merge each block of `labels` to one vertex; edges inside a block vanish.
    pub fn quotient(&self, labels: &[usize]) -> Self {
        let c = labels.iter().max().map_or(0, |m| m + 1);
        Self::new(
            c,
            self.edges
                .iter()
                .map(|&(u, v)| (labels[u], labels[v]))
                .filter(|(a, b)| a != b),
        )
        .expect("valid")
    }

    pub fn is_stable(&self, w: &[usize]) -> bool {
        self.edges.iter().all(|(u, v)| !(w.contains(u) && w.contains(v)))
    }

    pub fn stable_sets(&self) -> Vec<Vec<usize>> {
        (0..1u64 << self.order)
            .map(|m| (0..self.order).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|w| self.is_stable(w))
            .collect()
    }

    /// The flats of the cycle matroid, each given as the component label of
    /// every vertex (labels in lowest-vertex order).
    pub fn flats(&self, lim: &Limits) -> Result<Vec<Vec<usize>>> {
        let m = self.edges.len();
        limits::check("flat-lattice edges", m, lim.max_lattice_edges)?;
        let mut out = BTreeSet::new();
        for mask in 0..1u64 << m {
            let mut parent: Vec<usize> = (0..self.order).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                p[x] = r;
                r
            }
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    parent[a.max(b)] = a.min(b);
                }
            }
            let mut label = vec![usize::MAX; self.order];
            let mut next = 0;
            for v in 0..self.order {
                let r = find(&mut parent, v);
                if label[r] == usize::MAX {
                    label[r] = next;
                    next += 1;
                }
                label[v] = label[r];
            }
            out.insert(label);
        }
        Ok(out.into_iter().collect())
    }

    /// `χ_Γ(λ)` by deletion and contraction on simple graphs.
    pub fn chromatic_polynomial(&self) -> IntPolynomial {
        fn go(g: &SimpleGraph, memo: &mut HashMap<SimpleGraph, IntPolynomial>) -> IntPolynomial {
            let Some(&(u, v)) = g.edges.last() else {
                return IntPolynomial::monomial(1, g.order);
            };
            if let Some(p) = memo.get(g) {
                return p.clone();
            }
            let mut del = g.clone();
            del.edges.pop();
            let labels: Vec<usize> = (0..g.order)
                .map(|w| match w.cmp(&v) {
                    std::cmp::Ordering::Less => w,
                    std::cmp::Ordering::Equal => u,
                    std::cmp::Ordering::Greater => w - 1,
                })
                .collect();
            let con = g.quotient(&labels);
            let p = go(&del, memo) - go(&con, memo);
            memo.insert(g.clone(), p.clone());
            p
        }
        go(self, &mut HashMap::new())
    }

    /// Least `k ≥ 0` with `χ_Γ(k) > 0`.
    pub fn chromatic_number(&self) -> u64 {
        let p = self.chromatic_polynomial();
        (0..=self.order as i64).find(|&k| p.eval(k) > 0).unwrap_or(0) as u64
    }

    /// Size of a largest matching, by exhaustive search.
    pub fn max_matching(&self) -> usize {
        fn go(edges: &[(usize, usize)], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used >> u & 1 == 0 && used >> v & 1 == 0 {
                        skip.max(1 + go(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        go(&self.edges, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogFamily {
    /// `Σ‖`: a half edge added at every vertex.
    Full,
    /// `Σ°`: a negative loop added at every vertex.
    FullLoops,
    /// `+Γ`.
    AllPositive,
    /// `+Γ‖`.
    AllPositiveFull,
    /// `−Γ`.
    AllNegative,
    /// `±Γ`: every edge doubled with both signs.
    SignedExpansion,
    /// `±Γ‖`.
    SignedExpansionFull,
    /// `±K_n`.
    PlusMinusKn,
    /// `±K_n‖`.
    PlusMinusKnFull,
}

impl CatalogFamily {
    pub const ALL: [CatalogFamily; 9] = [
        CatalogFamily::Full,
        CatalogFamily::FullLoops,
        CatalogFamily::AllPositive,
        CatalogFamily::AllPositiveFull,
        CatalogFamily::AllNegative,
        CatalogFamily::SignedExpansion,
        CatalogFamily::SignedExpansionFull,
        CatalogFamily::PlusMinusKn,
        CatalogFamily::PlusMinusKnFull,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CatalogFamily::Full => "full",
            CatalogFamily::FullLoops => "fullloops",
            CatalogFamily::AllPositive => "allpos",
            CatalogFamily::AllPositiveFull => "allposfull",
            CatalogFamily::AllNegative => "allneg",
            CatalogFamily::SignedExpansion => "expansion",
            CatalogFamily::SignedExpansionFull => "expansionfull",
            CatalogFamily::PlusMinusKn => "pmkn",
            CatalogFamily::PlusMinusKnFull => "pmknfull",
        }
    }

    /// Whether the base is only used for its order.
    pub fn needs_order_only(self) -> bool {
        matches!(self, CatalogFamily::PlusMinusKn | CatalogFamily::PlusMinusKnFull)
    }
}

impl fmt::Display for CatalogFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CatalogFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown catalog family `{s}`")))
    }
}

/// A constructed graph with whatever closed forms are known for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: CatalogFamily,
    pub graph: SignedGraph,
    pub chi: Option<IntPolynomial>,
    pub chi_star: Option<IntPolynomial>,
    pub numbers: Option<ChromaticNumbers>,
    pub regions: Option<u64>,
}

fn add_full(g: &mut SignedGraph, loops: bool) -> Result<()> {
    for v in 0..g.order() {
        let id = format!("f{}", v + 1);
        if loops {
            g.add_edge(id, v, v, Sign::Minus)?;
        } else {
            g.add_half(id, v)?;
        }
    }
    Ok(())
}

/// `±Γ`, edge `e` becoming `e+` and `e-`.
pub fn signed_expansion(g: &SimpleGraph) -> SignedGraph {
    let mut out = SignedGraph::new(g.order());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        for s in [Sign::Plus, Sign::Minus] {
            out.add_edge(format!("e{}{}", i + 1, s.symbol()), u, v, s)
                .expect("valid");
        }
    }
    out
}

/// `±K_n`, or `±K_n‖` with a half edge at every vertex.
pub fn plus_minus_complete(n: usize, full: bool) -> SignedGraph {
    let mut g = signed_expansion(&SimpleGraph::complete(n));
    if full {
        add_full(&mut g, false).expect("fresh ids");
    }
    g
}

/// `2^c · q(aλ + b)` with `a, b` given as fractions.
fn halved(q: &IntPolynomial, c: usize, a: (i64, i64), b: (i64, i64)) -> Result<IntPolynomial> {
    q.affine_scaled(&ratio(1 << c, 1), &ratio(a.0, a.1), &ratio(b.0, b.1))
}

fn abs_at_minus_one(p: &IntPolynomial) -> u64 {
    p.eval(-1).unsigned_abs() as u64
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `χ*_{−Γ}(λ) = Σ_F 2^{c(F)} χ_{Γ/F}(λ/2)` over the flats `F`, `c(F)` the
/// number of vertices of `Γ/F`.
pub fn all_negative_zero_free(g: &SimpleGraph, lim: &Limits) -> Result<IntPolynomial> {
    g.flats(lim)?.iter().try_fold(IntPolynomial::zero(), |acc, f| {
        let q = g.quotient(f);
        Ok(acc + halved(&q.chromatic_polynomial(), q.order(), (1, 2), (0, 1))?)
    })
}

/// Flats paired with stable sets avoiding their nontrivial blocks: the terms
/// of `χ_{−Γ}` and of the region count of `−Γ`.
fn all_negative_terms(g: &SimpleGraph, lim: &Limits) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    for f in g.flats(lim)? {
        let mut size = vec![0usize; g.order()];
        for &l in &f {
            size[l] += 1;
        }
        for w in g.stable_sets() {
            if w.iter().any(|&v| size[f[v]] > 1) {
                continue;
            }
            let rest = g.delete_vertices(&w);
            let labels: Vec<usize> = (0..g.order()).filter(|v| !w.contains(v)).map(|v| f[v]).collect();
            // Relabel the surviving blocks densely.
            let mut seen: Vec<usize> = labels.clone();
            seen.sort_unstable();
            seen.dedup();
            let dense: Vec<usize> = labels
                .iter()
                .map(|l| seen.binary_search(l).expect("present"))
                .collect();
            out.push(rest.quotient(&dense));
        }
    }
    Ok(out)
}

/// Build the family member over `base` and its closed forms.
///
/// `Full` and `FullLoops` take a signed base with no half edges, loose edges
/// or negative loops; their predictions are stated through the base's own
/// `χ*`. The `±K_n` families use only the order of `base`. The other families
/// use the underlying simple graph of a link graph, and the signed expansions
/// require it to be simple already.
pub fn catalog(family: CatalogFamily, base: &SignedGraph, lim: &Limits) -> Result<CatalogEntry> {
    let n = base.order();
    let entry = |graph, chi, chi_star, numbers, regions| CatalogEntry {
        family,
        graph,
        chi: Some(chi),
        chi_star: Some(chi_star),
        numbers,
        regions,
    };
    match family {
        CatalogFamily::Full | CatalogFamily::FullLoops => {
            if base.edges().iter().any(|e| e.is_unbalanced() || e.is_loose()) {
                return Err(Error::InvalidParameter(
                    "base of a full graph must have no half edges, loose edges or negative loops".into(),
                ));
            }
            let mut graph = base.clone();
            add_full(&mut graph, family == CatalogFamily::FullLoops)?;
            let star = chromatic_poly_delcon(base, true);
            let chi_star_number = (0..=n as i64).find(|&k| star.eval(2 * k) != 0).map(|k| k as u64);
            let regions = (!star.is_zero()).then(|| star.eval(-2).unsigned_abs() as u64);
            Ok(entry(
                graph,
                star.translate(-1),
                star,
                Some(ChromaticNumbers {
                    chi: chi_star_number,
                    chi_star: chi_star_number,
                }),
                regions,
            ))
        }
        CatalogFamily::PlusMinusKn => {
            let odd: Vec<i64> = (1..n as i64).map(|i| 2 * i - 1).collect();
            let chi = IntPolynomial::from_roots(&odd) * IntPolynomial::from_roots(&[n as i64 - 1]);
            let chi = if n == 0 { IntPolynomial::one() } else { chi };
            let even: Vec<i64> = (0..n as i64).map(|i| 2 * i).collect();
            Ok(entry(
                plus_minus_complete(n, false),
                chi,
                IntPolynomial::from_roots(&even),
                Some(ChromaticNumbers {
                    chi: Some(n.saturating_sub(1) as u64),
                    chi_star: Some(n as u64),
                }),
                Some(if n == 0 { 1 } else { (1u64 << (n - 1)) * factorial(n) }),
            ))
        }
        CatalogFamily::PlusMinusKnFull => {
            let odd: Vec<i64> = (1..=n as i64).map(|i| 2 * i - 1).collect();
            let even: Vec<i64> = (0..n as i64).map(|i| 2 * i).collect();
            Ok(entry(
                plus_minus_complete(n, true),
                IntPolynomial::from_roots(&odd),
                IntPolynomial::from_roots(&even),
                Some(ChromaticNumbers {
                    chi: Some(n as u64),
                    chi_star: Some(n as u64),
                }),
                Some((1u64 << n) * factorial(n)),
            ))
        }
        _ => {
            if matches!(
                family,
                CatalogFamily::SignedExpansion | CatalogFamily::SignedExpansionFull
            ) {
                base.require_simple()?;
            }
            let gamma = SimpleGraph::from_signed(base)?;
            gamma_family(family, &gamma, lim)
        }
    }
}

fn gamma_family(family: CatalogFamily, gamma: &SimpleGraph, lim: &Limits) -> Result<CatalogEntry> {
    let n = gamma.order();
    let chi_g = gamma.chromatic_polynomial();
    let k = gamma.chromatic_number();
    let (lo, hi) = (k / 2, k.div_ceil(2));
    let mut e = CatalogEntry {
        family,
        graph: SignedGraph::new(n),
        chi: None,
        chi_star: None,
        numbers: None,
        regions: None,
    };
    match family {
        CatalogFamily::AllPositive => {
            e.graph = gamma.signed(Sign::Plus);
            e.chi = Some(chi_g.clone());
            e.chi_star = Some(chi_g.clone());
            e.numbers = Some(ChromaticNumbers {
                chi: Some(lo),
                chi_star: Some(hi),
            });
            e.regions = Some(abs_at_minus_one(&chi_g));
        }
        CatalogFamily::AllPositiveFull => {
            e.graph = gamma.signed(Sign::Plus);
            add_full(&mut e.graph, false)?;
            e.chi = Some(chi_g.translate(-1));
            e.chi_star = Some(chi_g.clone());
            // Color 0 is unavailable, so both numbers round up.
            e.numbers = Some(ChromaticNumbers {
                chi: Some(hi),
                chi_star: Some(hi),
            });
            e.regions = Some(chi_g.eval(-2).unsigned_abs() as u64);
        }
        CatalogFamily::AllNegative => {
            e.graph = gamma.signed(Sign::Minus);
            e.chi_star = Some(all_negative_zero_free(gamma, lim)?);
            let terms = all_negative_terms(gamma, lim)?;
            let mut chi = IntPolynomial::zero();
            let mut regions: i128 = 0;
            for q in &terms {
                let p = q.chromatic_polynomial();
                chi = chi + halved(&p, q.order(), (1, 2), (-1, 2))?;
                let sign = if (n - q.order()).is_multiple_of(2) { 1 } else { -1 };
                regions += sign * (1i128 << q.order()) * i128::from(abs_at_minus_one(&p));
            }
            e.chi = Some(chi);
            e.numbers = Some(ChromaticNumbers {
                chi: None,
                chi_star: Some(gamma.complement().max_matching() as u64),
            });
            e.regions = Some(regions as u64);
        }
        CatalogFamily::SignedExpansion => {
            e.graph = signed_expansion(gamma);
            let mut chi = IntPolynomial::zero();
            let mut regions: i128 = 0;
            for w in gamma.stable_sets() {
                let p = gamma.delete_vertices(&w).chromatic_polynomial();
                chi = chi + halved(&p, n - w.len(), (1, 2), (-1, 2))?;
                let sign = if w.len() % 2 == 0 { 1 } else { -1 };
                regions += sign * (1i128 << (n - w.len())) * i128::from(abs_at_minus_one(&p));
            }
            e.chi = Some(chi);
            e.chi_star = Some(halved(&chi_g, n, (1, 2), (0, 1))?);
            e.numbers = Some(ChromaticNumbers {
                chi: Some(k.saturating_sub(1)),
                chi_star: Some(k),
            });
            e.regions = Some(regions as u64);
        }
        CatalogFamily::SignedExpansionFull => {
            e.graph = signed_expansion(gamma);
            add_full(&mut e.graph, false)?;
            e.chi = Some(halved(&chi_g, n, (1, 2), (-1, 2))?);
            e.chi_star = Some(halved(&chi_g, n, (1, 2), (0, 1))?);
            e.numbers = Some(ChromaticNumbers {
                chi: Some(k),
                chi_star: Some(k),
            });
            e.regions = Some((1u64 << n) * abs_at_minus_one(&chi_g));
        }
        _ => unreachable!("handled by catalog"),
    }
    Ok(e)
}

/// Edge sets of `g` that are flats of `Γ` carried over to `+Γ`.
pub fn flat_edge_sets(gamma: &SimpleGraph, lim: &Limits) -> Result<Vec<EdgeSet>> {
    Ok(gamma
        .flats(lim)?
        .into_iter()
        .map(|f| {
            gamma
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| f[u] == f[v])
                .map(|(i, _)| i)
                .collect()
        })
        .collect())
}
