//! Root systems and angle representations of signed simple graphs.
//!
//! Root systems and edge-vector maps are exact (`Rational64`). Representations
//! built from an eigendecomposition are `f64` and compared with [`TOL`].

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, SignedGraph};
use crate::matrices::{adjacency_matrix, edge_vector_at};

/// Numeric tolerance for representations built in floating point.
pub const TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSystemKind {
    A,
    B,
    C,
    D,
    E8,
}

impl FromStr for RootSystemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "D" => Ok(Self::D),
            "E8" | "E" => Ok(Self::E8),
            _ => Err(Error::InvalidParameter(format!("unknown root system `{s}`"))),
        }
    }
}

/// A finite set of exact vectors in `R^dim`, sorted and without repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub kind: RootSystemKind,
    pub dim: usize,
    pub vectors: Vec<Vec<Rational64>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, x: &[Rational64]) -> bool {
        self.vectors.binary_search_by(|v| v.as_slice().cmp(x)).is_ok()
    }

    /// `A_{n−1}`, `B_n`, `C_n`, `D_n` or `E_8`, all as subsets of `R^n`.
    pub fn name(&self) -> String {
        match self.kind {
            RootSystemKind::A => format!("A{}", self.dim.saturating_sub(1)),
            RootSystemKind::B => format!("B{}", self.dim),
            RootSystemKind::C => format!("C{}", self.dim),
            RootSystemKind::D => format!("D{}", self.dim),
            RootSystemKind::E8 => "E8".into(),
        }
    }
}

fn int(x: i64) -> Rational64 {
    Rational64::from_integer(x)
}

fn unit(n: usize, i: usize, c: i64) -> Vec<Rational64> {
    let mut x = vec![int(0); n];
    x[i] = int(c);
    x
}

fn d_vectors(n: usize) -> Vec<Vec<Rational64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for (a, b) in [(1, -1), (1, 1), (-1, -1)] {
                let mut x = vec![int(0); n];
                x[j] = int(a);
                x[i] = int(b);
                out.push(x);
            }
        }
    }
    out
}

/// The root system of the given kind in `R^n`; `n` must be 8 for `E_8`.
pub fn root_system(kind: RootSystemKind, n: usize) -> Result<RootSystem> {
    if n == 0 || (kind == RootSystemKind::E8 && n != 8) {
        return Err(Error::InvalidParameter(format!("no root system {kind:?} in dimension {n}")));
    }
    let mut vectors = match kind {
        RootSystemKind::A => (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut x = vec![int(0); n];
                x[j] = int(1);
                x[i] = int(-1);
                x
            })
            .collect(),
        RootSystemKind::D => d_vectors(n),
        RootSystemKind::B | RootSystemKind::C => {
            let c = if kind == RootSystemKind::B { 1 } else { 2 };
            let mut v = d_vectors(n);
            for i in 0..n {
                v.push(unit(n, i, c));
                v.push(unit(n, i, -c));
            }
            v
        }
        RootSystemKind::E8 => {
            let mut v = d_vectors(8);
            for mask in 0u32..256 {
                if mask.count_ones() % 2 == 0 {
                    v.push(
                        (0..8)
                            .map(|i| Rational64::new(if mask >> i & 1 == 1 { -1 } else { 1 }, 2))
                            .collect(),
                    );
                }
            }
            v
        }
    };
    vectors.sort();
    vectors.dedup();
    Ok(RootSystem {
        kind,
        dim: n,
        vectors,
    })
}

/// Scalars a representation can be checked in: exact rationals, or `f64`
/// up to [`TOL`].
pub trait Scalar:
    Copy + fmt::Debug + PartialOrd + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_i64(x: i64) -> Self;
    fn close(a: Self, b: Self) -> bool;
    fn to_f64(self) -> f64;
}

impl Scalar for Rational64 {
    fn from_i64(x: i64) -> Self {
        int(x)
    }
    fn close(a: Self, b: Self) -> bool {
        a == b
    }
    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_i64(x: i64) -> Self {
        x as f64
    }
    fn close(a: Self, b: Self) -> bool {
        (a - b).abs() <= TOL * 1f64.max(a.abs()).max(b.abs())
    }
    fn to_f64(self) -> f64 {
        self
    }
}

fn dot<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).fold(T::zero(), |acc, (&a, &b)| acc + a * b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AngleMode {
    /// `ρ(v)·ρ(w) = a_vw` for distinct vertices.
    Gramian,
    /// `ρ(v)·ρ(w) = −a_vw` for distinct vertices.
    AntiGramian,
    /// Only the angles are prescribed.
    AngleOnly,
}

/// A vector `rho[v]` for every vertex, with constant `nu`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleRepresentation<T> {
    pub rho: Vec<Vec<T>>,
    pub nu: T,
    pub mode: AngleMode,
}

impl AngleRepresentation<Rational64> {
    pub fn to_numeric(&self) -> AngleRepresentation<f64> {
        AngleRepresentation {
            rho: self
                .rho
                .iter()
                .map(|x| x.iter().map(|&c| Scalar::to_f64(c)).collect())
                .collect(),
            nu: Scalar::to_f64(self.nu),
            mode: self.mode,
        }
    }
}

impl<T: Scalar> AngleRepresentation<T> {
    pub fn dim(&self) -> usize {
        self.rho.first().map_or(0, Vec::len)
    }

    /// Replace `ρ(v)` by `−ρ(v)`, which represents `g` switched at `v`.
    pub fn negate(&self, v: usize) -> Self {
        let mut out = self.clone();
        for c in &mut out.rho[v] {
            *c = -*c;
        }
        out
    }
}

fn simple_adjacency(g: &SignedGraph) -> Result<Vec<Vec<i64>>> {
    g.require_simple()?;
    let a = adjacency_matrix(g);
    Ok(a.to_rows())
}

/// Check the angle conditions, and the dot products themselves for the
/// Gramian modes. A zero vector never qualifies.
pub fn verify_representation<T: Scalar>(g: &SignedGraph, rep: &AngleRepresentation<T>) -> Result<bool> {
    let a = simple_adjacency(g)?;
    let n = g.order();
    if rep.rho.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rep.rho.len(),
        });
    }
    let d = rep.dim();
    if let Some(x) = rep.rho.iter().find(|x| x.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: x.len(),
        });
    }
    if rep.nu <= T::zero() {
        return Ok(false);
    }
    let norms: Vec<T> = rep.rho.iter().map(|x| dot(x, x)).collect();
    if norms.iter().any(|&q| T::close(q, T::zero())) {
        return Ok(false);
    }
    let flip = if rep.mode == AngleMode::AntiGramian { -1 } else { 1 };
    for v in 0..n {
        for w in v + 1..n {
            let target = T::from_i64(flip * a[v][w]);
            let p = dot(&rep.rho[v], &rep.rho[w]);
            // ρ̂(v)·ρ̂(w) = t/ν  ⇔  same sign and p²ν² = t²|ρv|²|ρw|².
            let sign_ok = match a[v][w] {
                0 => T::close(p, T::zero()),
                _ => (p > T::zero()) == (target > T::zero()) && !T::close(p, T::zero()),
            };
            let angle_ok = sign_ok
                && T::close(p * p * rep.nu * rep.nu, target * target * norms[v] * norms[w]);
            let gram_ok = rep.mode == AngleMode::AngleOnly || T::close(p, target);
            if !(angle_ok && gram_ok) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A normalized Gramian (or anti-Gramian) representation from the
/// eigendecomposition of `νI ± A`, or `None` when an eigenvalue of `A` is
/// below `−ν` (above `ν` for anti) by more than [`TOL`].
pub fn construct_gramian(g: &SignedGraph, nu: f64, anti: bool) -> Result<Option<AngleRepresentation<f64>>> {
    if nu <= 0.0 {
        return Err(Error::InvalidParameter(format!("nu must be positive, got {nu}")));
    }
    let a = simple_adjacency(g)?;
    let n = g.order();
    let flip = if anti { -1.0 } else { 1.0 };
    let m = DMatrix::from_fn(n, n, |i, j| flip * a[i][j] as f64 + if i == j { nu } else { 0.0 });
    let eig = SymmetricEigen::new(m);
    if eig.eigenvalues.iter().any(|&l| l < -TOL) {
        return Ok(None);
    }
    let keep: Vec<usize> = (0..n).filter(|&k| eig.eigenvalues[k] > TOL).collect();
    let rho = (0..n)
        .map(|v| {
            keep.iter()
                .map(|&k| eig.eigenvectors[(v, k)] * eig.eigenvalues[k].sqrt())
                .collect()
        })
        .collect();
    Ok(Some(AngleRepresentation {
        rho,
        nu,
        mode: if anti { AngleMode::AntiGramian } else { AngleMode::Gramian },
    }))
}

/// Largest entry of `|MᵀM − (νI ± A)|`: how far a representation is from
/// reproducing its Gram matrix.
pub fn gram_error(g: &SignedGraph, rep: &AngleRepresentation<f64>) -> Result<f64> {
    let a = simple_adjacency(g)?;
    let flip = if rep.mode == AngleMode::AntiGramian { -1.0 } else { 1.0 };
    let n = g.order();
    let mut worst: f64 = 0.0;
    for v in 0..n {
        for w in 0..n {
            let want = flip * a[v][w] as f64 + if v == w { rep.nu } else { 0.0 };
            worst = worst.max((dot(&rep.rho[v], &rep.rho[w]) - want).abs());
        }
    }
    Ok(worst)
}

/// Rescale every vector to length `√ν`. An angle representation becomes a
/// normalized Gramian one (anti-Gramian stays anti-Gramian), whose Gram
/// matrix is `νI ± A`. Works component by component, so disconnected input
/// is fine.
pub fn normalize(rep: &AngleRepresentation<f64>) -> AngleRepresentation<f64> {
    let rho = rep
        .rho
        .iter()
        .map(|x| {
            let len = dot(x, x).sqrt();
            x.iter().map(|c| c / len * rep.nu.sqrt()).collect()
        })
        .collect();
    AngleRepresentation {
        rho,
        nu: rep.nu,
        mode: match rep.mode {
            AngleMode::AntiGramian => AngleMode::AntiGramian,
            _ => AngleMode::Gramian,
        },
    }
}

/// Length pattern of a Gramian representation on each component: all `√ν`
/// when the component has an odd circle, otherwise `α` on one side and `ν/α`
/// on the other.
pub fn gramian_lengths_consistent(g: &SignedGraph, rep: &AngleRepresentation<f64>) -> Result<bool> {
    g.require_simple()?;
    let n = g.order();
    let comp = g.components(&g.all_edges());
    let mut side = vec![None; n];
    let mut odd = vec![false; n];
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        if let EdgeKind::Link { u, v, .. } = e.kind {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for r in 0..n {
        if side[r].is_some() {
            continue;
        }
        side[r] = Some(false);
        let mut stack = vec![r];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                let want = !side[u].expect("set");
                match side[w] {
                    None => {
                        side[w] = Some(want);
                        stack.push(w);
                    }
                    Some(s) if s != want => odd[comp[r]] = true,
                    _ => {}
                }
            }
        }
    }
    let len: Vec<f64> = rep.rho.iter().map(|x| dot(x, x).sqrt()).collect();
    for v in 0..n {
        for &w in &adj[v] {
            if !f64::close(len[v] * len[w], rep.nu) {
                return Ok(false);
            }
        }
        if odd[comp[v]] && !f64::close(len[v], rep.nu.sqrt()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `ρ(v)` lies in `rs`.
pub fn membership_in_root_system(rep: &AngleRepresentation<Rational64>, rs: &RootSystem) -> Result<bool> {
    if let Some(x) = rep.rho.iter().find(|x| x.len() != rs.dim) {
        return Err(Error::DimensionMismatch {
            expected: rs.dim,
            found: x.len(),
        });
    }
    Ok(rep.rho.iter().all(|x| rs.contains(x)))
}

/// Every `±` pair of `rs` has a member among the `ρ(v)`.
pub fn covers_root_pairs(rep: &AngleRepresentation<Rational64>, rs: &RootSystem) -> bool {
    let have: BTreeSet<Vec<Rational64>> = rep
        .rho
        .iter()
        .flat_map(|x| [x.clone(), x.iter().map(|c| -c).collect()])
        .collect();
    rs.vectors.iter().all(|r| have.contains(r))
}

/// The edge vectors `x(e)` as an exact representation indexed by edges, with
/// `ν = 2`: an anti-Gramian representation of the reduced line graph.
pub fn edge_vector_representation(g: &SignedGraph) -> AngleRepresentation<Rational64> {
    AngleRepresentation {
        rho: (0..g.size())
            .map(|i| edge_vector_at(g, i).into_iter().map(int).collect())
            .collect(),
        nu: int(2),
        mode: AngleMode::AntiGramian,
    }
}

/// Distinct dot products between non-opposite, distinct members of `rs`.
pub fn pairwise_dots(rs: &RootSystem) -> BTreeSet<Rational64> {
    let mut out = BTreeSet::new();
    for (i, x) in rs.vectors.iter().enumerate() {
        for y in &rs.vectors[i + 1..] {
            if x.iter().zip(y).all(|(a, b)| *a == -b) {
                continue;
            }
            out.insert(dot(x, y).abs());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::plus_minus_complete;
    use crate::graph::parse;
    use crate::linegraph::reduced_line_graph;

    #[test]
    fn root_system_sizes() {
        assert_eq!(root_system(RootSystemKind::D, 2).unwrap().len(), 4);
        for n in 1..=6 {
            assert_eq!(root_system(RootSystemKind::B, n).unwrap().len(), 2 * n * n);
            assert_eq!(root_system(RootSystemKind::C, n).unwrap().len(), 2 * n * n);
            assert_eq!(root_system(RootSystemKind::D, n).unwrap().len(), 2 * n * (n - 1));
            assert_eq!(root_system(RootSystemKind::A, n).unwrap().len(), n * (n - 1));
        }
        assert_eq!(root_system(RootSystemKind::E8, 8).unwrap().len(), 240);
        assert!(root_system(RootSystemKind::E8, 7).is_err());
    }

    #[test]
    fn root_angles() {
        let allowed: BTreeSet<Rational64> = [int(0), int(1)].into_iter().collect();
        for n in 2..=5 {
            assert!(pairwise_dots(&root_system(RootSystemKind::D, n).unwrap()).is_subset(&allowed));
        }
        assert_eq!(pairwise_dots(&root_system(RootSystemKind::E8, 8).unwrap()), allowed);
    }

    #[test]
    fn edge_vectors_of_complete_signed_graphs() {
        let rep = edge_vector_representation(&plus_minus_complete(3, false));
        let d3 = root_system(RootSystemKind::D, 3).unwrap();
        assert!(membership_in_root_system(&rep, &d3).unwrap());
        assert!(covers_root_pairs(&rep, &d3));
        let full = edge_vector_representation(&plus_minus_complete(3, true));
        assert!(membership_in_root_system(&full, &root_system(RootSystemKind::B, 3).unwrap()).unwrap());
        let bad = AngleRepresentation {
            rho: vec![vec![int(1), int(1), int(1)]],
            nu: int(2),
            mode: AngleMode::AngleOnly,
        };
        assert!(!membership_in_root_system(&bad, &d3).unwrap());
    }

    #[test]
    fn edge_vectors_represent_the_reduced_line_graph() {
        let g = parse("sg 1\nn 4\nedge a 1 2 +\nedge b 2 3 -\nedge c 3 4 +\nedge d 1 4 -\nedge f 1 3 -\n").unwrap();
        let lg = reduced_line_graph(&g).unwrap();
        let rep = edge_vector_representation(&g);
        assert!(verify_representation(&lg, &rep).unwrap());
        let switched = crate::balance::switch(
            &lg,
            &crate::balance::SwitchingFunction::from_set(lg.order(), &[2]).unwrap(),
        )
        .unwrap();
        assert!(verify_representation(&switched, &rep.negate(2)).unwrap());
        let mut wrong = rep.clone();
        wrong.nu = int(3);
        assert!(!verify_representation(&lg, &wrong).unwrap());
    }

    #[test]
    fn gramian_construction() {
        let k2 = parse("sg 1\nn 2\nedge a 1 2 +\n").unwrap();
        let rep = construct_gramian(&k2, 1.0, false).unwrap().unwrap();
        assert_eq!(rep.dim(), 1);
        assert!(gram_error(&k2, &rep).unwrap() < TOL);
        // The least eigenvalue of −K3 is −2.
        let k3 = parse("sg 1\nn 3\nedge a 1 2 -\nedge b 2 3 -\nedge c 1 3 -\n").unwrap();
        assert!(construct_gramian(&k3, 1.0, false).unwrap().is_none());
        let rep = construct_gramian(&k3, 2.0, false).unwrap().unwrap();
        assert_eq!(rep.dim(), 2);
        assert!(verify_representation(&k3, &rep).unwrap());
        assert!(gramian_lengths_consistent(&k3, &rep).unwrap());
    }

    #[test]
    fn normalizing_a_bipartite_representation() {
        let p = parse("sg 1\nn 3\nedge a 1 2 +\nedge b 2 3 -\n").unwrap();
        // Scale one side by 2 and the other by 1/2.
        let mut rep = construct_gramian(&p, 2.0, false).unwrap().unwrap();
        for (v, x) in rep.rho.iter_mut().enumerate() {
            let k = if v == 1 { 0.5 } else { 2.0 };
            x.iter_mut().for_each(|c| *c *= k);
        }
        assert!(verify_representation(&p, &rep).unwrap());
        assert!(gramian_lengths_consistent(&p, &rep).unwrap());
        let n = normalize(&rep);
        assert!(gram_error(&p, &n).unwrap() < TOL);
        assert!(gram_error(&p, &normalize(&n)).unwrap() < TOL);
    }
}
