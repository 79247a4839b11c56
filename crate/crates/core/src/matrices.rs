//! Edge vectors, incidence, adjacency and Laplacian matrices, exact rank and
//! determinant, the signed Matrix-Tree count, and spectra.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::balance::{b, next_combination};
use crate::circles::enumerate_circles;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: i64) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// The submatrix on the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m.set(r, k, self.get(r, c));
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c));
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut m = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let x = (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum();
                m.set(r, c, x);
            }
        }
        Ok(m)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// First off-symmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (r + 1..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != self.get(c, r))
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) as f64)
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Dense row-major matrix of arbitrary-precision rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RationalMatrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }
}

/// Exact rank by Gaussian elimination over the rationals.
pub fn rational_rank(m: &RationalMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| m.data[r * cols..(r + 1) * cols].to_vec())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for k in c..cols {
                let t = &f * &a[rank][k];
                a[r][k] -= t;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: m.cols,
        });
    }
    let n = m.rows;
    let mut a: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
}

/// Canonical edge vector of edge index `i`.
pub fn edge_vector_at(g: &SignedGraph, i: usize) -> Vec<i64> {
    let mut x = vec![0; g.order()];
    match g.edge(i).kind {
        EdgeKind::Link { u, v, sign } => {
            let (lo, hi) = (u.min(v), u.max(v));
            x[lo] = 1;
            x[hi] = -sign.to_i64();
        }
        EdgeKind::Loop {
            v,
            sign: Sign::Minus,
        } => x[v] = 2,
        EdgeKind::Half { v } => x[v] = 1,
        EdgeKind::Loop { .. } | EdgeKind::Loose => {}
    }
    x
}

/// Canonical edge vector: a link `v_i v_j` with `i < j` has `+1` at `i` and
/// `-σ(e)` at `j`; a half edge `+1`; a negative loop `+2`; a positive loop or
/// loose edge is zero.
pub fn edge_vector(g: &SignedGraph, id: &str) -> Result<Vec<i64>> {
    Ok(edge_vector_at(g, g.edge_index(id)?))
}

/// `n × m` matrix of canonical edge vectors in edge order.
pub fn incidence_matrix(g: &SignedGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.order(), g.size());
    for c in 0..g.size() {
        for (r, x) in edge_vector_at(g, c).into_iter().enumerate() {
            m.set(r, c, x);
        }
    }
    m
}

/// Rank of the incidence columns of `s`.
pub fn incidence_rank(g: &SignedGraph, s: &EdgeSet) -> usize {
    let cols: Vec<usize> = s.iter().collect();
    rational_rank(&incidence_matrix(g).select_columns(&cols).to_rational())
}

/// Diagonal `h + 2l⁺ − 2l⁻`; off-diagonal positive minus negative links.
pub fn adjacency_matrix(g: &SignedGraph) -> IntMatrix {
    let n = g.order();
    let mut a = IntMatrix::zeros(n, n);
    for e in g.edges() {
        match e.kind {
            EdgeKind::Link { u, v, sign } => {
                let s = sign.to_i64();
                a.set(u, v, a.get(u, v) + s);
                a.set(v, u, a.get(v, u) + s);
            }
            EdgeKind::Loop { v, sign } => a.set(v, v, a.get(v, v) + 2 * sign.to_i64()),
            EdgeKind::Half { v } => a.set(v, v, a.get(v, v) + 1),
            EdgeKind::Loose => {}
        }
    }
    a
}

/// Diagonal matrix of degrees of the underlying graph.
pub fn degree_matrix(g: &SignedGraph) -> IntMatrix {
    let n = g.order();
    let mut d = IntMatrix::zeros(n, n);
    for v in 0..n {
        d.set(v, v, g.degree(v).expect("vertex in range") as i64);
    }
    d
}

/// `Η Ηᵀ`, computed edge by edge: `D − A` plus one on the diagonal for each
/// half edge, since a half edge contributes `1` to `ΗΗᵀ` but `1` to both `D`
/// and `A`.
pub fn laplacian(g: &SignedGraph) -> IntMatrix {
    let mut l = degree_matrix(g)
        .sub(&adjacency_matrix(g))
        .expect("square of equal order");
    for e in g.edges() {
        if let EdgeKind::Half { v } = e.kind {
            l.set(v, v, l.get(v, v) + 1);
        }
    }
    l
}

/// Delete positive loops, loose edges, and cancel `+`/`−` parallel link pairs.
/// Remaining edges keep their order.
pub fn reduce(g: &SignedGraph) -> SignedGraph {
    let mut drop = EdgeSet::new();
    let mut pairs: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::Loose
            | EdgeKind::Loop {
                sign: Sign::Plus, ..
            } => {
                drop.insert(i);
            }
            EdgeKind::Link { u, v, sign } => {
                let slot = pairs.entry((u.min(v), u.max(v))).or_default();
                match sign {
                    Sign::Plus => slot.0.push(i),
                    Sign::Minus => slot.1.push(i),
                }
            }
            _ => {}
        }
    }
    for (pos, neg) in pairs.values() {
        for (&p, &q) in pos.iter().zip(neg) {
            drop.insert(p);
            drop.insert(q);
        }
    }
    g.restrict(&g.all_edges().difference(&drop))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTreeReport {
    pub det_l: BigInt,
    /// `b[i]`: independent `n`-edge sets containing exactly `i` circles.
    pub b: Vec<u64>,
    pub weighted_sum: BigInt,
}

/// `det L(Σ)` against `Σ 4^i b_i`, both sides computed independently.
pub fn matrix_tree(g: &SignedGraph, lim: &Limits) -> Result<MatrixTreeReport> {
    let n = g.order();
    limits::check("matrix-tree order", n, lim.max_matrix_tree_order)?;
    limits::check("matrix-tree edges", g.size(), lim.max_edges)?;
    let det_l = determinant(&laplacian(g))?;
    let m = g.size();
    let mut counts = vec![0u64; n + 1];
    if n <= m {
        let mut pick: Vec<usize> = (0..n).collect();
        loop {
            let s: EdgeSet = pick.iter().copied().collect();
            if b(g, &s) == 0 {
                let unlimited = Limits {
                    max_edges: usize::MAX,
                    ..lim.clone()
                };
                let i = enumerate_circles(g, &s, &unlimited)?.len();
                counts[i] += 1;
            }
            if !next_combination(&mut pick, m) {
                break;
            }
        }
    }
    let weighted_sum = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| BigInt::from(c) * BigInt::from(4).pow(i as u32))
        .sum::<BigInt>();
    if det_l != weighted_sum {
        return Err(Error::IdentityFailed(format!(
            "det L = {det_l} but weighted count = {weighted_sum}"
        )));
    }
    Ok(MatrixTreeReport {
        det_l,
        b: counts,
        weighted_sum,
    })
}

/// Eigenvalues of a symmetric integer matrix, ascending. Values within `tol`
/// of an integer are snapped to it.
pub fn spectrum(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    if let Some((row, col)) = m.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    Ok(symmetric_spectrum(m.to_f64(), tol))
}

pub(crate) fn symmetric_spectrum(m: DMatrix<f64>, tol: f64) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut vals: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    for v in &mut vals {
        let r = v.round();
        if (*v - r).abs() <= tol {
            *v = r + 0.0;
        }
    }
    vals.sort_by(|a, b| a.total_cmp(b));
    vals
}

/// Smallest eigenvalue of a symmetric integer matrix (`+∞` for an empty one).
pub fn min_eigenvalue(m: &IntMatrix) -> Result<f64> {
    Ok(spectrum(m, 0.0)?.first().copied().unwrap_or(f64::INFINITY))
}

/// Largest eigenvalue of a symmetric integer matrix (`-∞` for an empty one).
pub fn max_eigenvalue(m: &IntMatrix) -> Result<f64> {
    Ok(spectrum(m, 0.0)?.last().copied().unwrap_or(f64::NEG_INFINITY))
}

/// `true` if every entry has absolute value at most `bound`.
pub fn entries_bounded(m: &IntMatrix, bound: i64) -> bool {
    m.data.iter().all(|x| x.abs() <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{switch, SwitchingFunction};
    use crate::fixtures::SIGMA4;
    use crate::graph::parse;

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
    }

    #[test]
    fn sigma4_incidence() {
        let g = parse(SIGMA4).unwrap();
        assert_eq!(edge_vector(&g, "a").unwrap(), vec![1, -1, 0, 0]);
        assert_eq!(edge_vector(&g, "h").unwrap(), vec![0, 0, 1, 0]);
        let h = incidence_matrix(&g);
        assert_eq!((h.rows(), h.cols()), (4, 7));
        assert_eq!(rational_rank(&h.to_rational()), 4);
    }

    #[test]
    fn special_vectors() {
        let g = parse("sg 1\nn 2\nedge p 1 1 +\nedge m 2 2 -\nloose z\nedge n 1 2 -\n").unwrap();
        assert_eq!(edge_vector(&g, "p").unwrap(), vec![0, 0]);
        assert_eq!(edge_vector(&g, "m").unwrap(), vec![0, 2]);
        assert_eq!(edge_vector(&g, "z").unwrap(), vec![0, 0]);
        assert_eq!(edge_vector(&g, "n").unwrap(), vec![1, 1]);
        assert_eq!(incidence_matrix(&SignedGraph::new(3)).cols(), 0);
    }

    #[test]
    fn ranks() {
        let tree = parse("sg 1\nn 4\nedge a 1 2 +\nedge b 2 3 +\nedge c 2 4 +\n").unwrap();
        assert_eq!(rational_rank(&incidence_matrix(&tree).to_rational()), 3);
        assert_eq!(rational_rank(&IntMatrix::zeros(3, 3).to_rational()), 0);
    }

    #[test]
    fn sigma4_adjacency() {
        let g = parse(SIGMA4).unwrap();
        assert_eq!(
            rows(&adjacency_matrix(&g)),
            vec![
                vec![0, 1, -1, 0],
                vec![1, 0, -1, 0],
                vec![-1, -1, 1, 1],
                vec![0, 0, 1, 0]
            ]
        );
        let neg = g.negated();
        let a = adjacency_matrix(&g);
        let an = adjacency_matrix(&neg);
        // Negation flips every entry except the half-edge term.
        for r in 0..4 {
            for c in 0..4 {
                let half = if (r, c) == (2, 2) { 2 } else { 0 };
                assert_eq!(an.get(r, c), -a.get(r, c) + half);
            }
        }
        assert_eq!(adjacency_matrix(&SignedGraph::new(2)), IntMatrix::zeros(2, 2));
    }

    #[test]
    fn laplacian_is_incidence_gram() {
        let g = parse(SIGMA4).unwrap();
        let h = incidence_matrix(&g);
        let l = laplacian(&g);
        assert_eq!(l, h.mul(&h.transpose()).unwrap());
        assert_eq!(
            rows(&l),
            vec![
                vec![4, -1, 1, 0],
                vec![-1, 2, 1, 0],
                vec![1, 1, 4, -1],
                vec![0, 0, -1, 3]
            ]
        );
        let k2 = parse("sg 1\nn 2\nedge a 1 2 +\n").unwrap();
        assert_eq!(rows(&laplacian(&k2)), vec![vec![1, -1], vec![-1, 1]]);
    }

    #[test]
    fn reductions() {
        let g = parse(SIGMA4).unwrap();
        let r = reduce(&g);
        assert_eq!(r.edge_ids(&r.all_edges()), ["a", "b", "c", "f", "h"]);
        assert_eq!(adjacency_matrix(&r), adjacency_matrix(&g));
        let plain = parse("sg 1\nn 2\nedge a 1 2 +\n").unwrap();
        assert_eq!(reduce(&plain), plain);
        let dd = parse("sg 1\nn 2\nedge a 1 2 +\nedge b 1 2 +\nedge c 2 1 -\nedge d 1 2 -\n").unwrap();
        assert_eq!(reduce(&dd).size(), 0);
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_rows(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), BigInt::from(6));
        let s = IntMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&s).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn matrix_tree_examples() {
        let lim = Limits::default();
        let bal = parse("sg 1\nn 3\nedge a 1 2 +\nedge b 2 3 -\nedge c 1 3 -\n").unwrap();
        let r = matrix_tree(&bal, &lim).unwrap();
        assert_eq!(r.det_l, BigInt::zero());
        let loop1 = parse("sg 1\nn 1\nedge l 1 1 -\n").unwrap();
        let r = matrix_tree(&loop1, &lim).unwrap();
        assert_eq!((r.det_l.clone(), r.b.clone()), (BigInt::from(4), vec![0, 1]));
        let s4 = parse(SIGMA4).unwrap();
        let r = matrix_tree(&s4, &lim).unwrap();
        assert_eq!(r.det_l, BigInt::from(53));
        assert_eq!(r.weighted_sum, BigInt::from(53));
    }

    #[test]
    fn spectra() {
        let k2 = parse("sg 1\nn 2\nedge a 1 2 +\n").unwrap();
        assert_eq!(spectrum(&adjacency_matrix(&k2), 1e-9).unwrap(), vec![-1.0, 1.0]);
        let s4 = parse(SIGMA4).unwrap();
        let l = spectrum(&laplacian(&s4), 1e-9).unwrap();
        assert!(l.iter().all(|&x| x >= -1e-9));
        let z = SwitchingFunction::from_set(4, &[0, 2]).unwrap();
        let a1 = spectrum(&adjacency_matrix(&s4), 1e-9).unwrap();
        let a2 = spectrum(&adjacency_matrix(&switch(&s4, &z).unwrap()), 1e-9).unwrap();
        for (x, y) in a1.iter().zip(&a2) {
            assert!((x - y).abs() < 1e-9);
        }
        let asym = IntMatrix::from_rows(2, &[vec![0, 1], vec![2, 0]]).unwrap();
        assert!(matches!(spectrum(&asym, 1e-9), Err(Error::NotSymmetric { .. })));
    }
}
