//! Dense exact linear algebra over the rationals.
//!
//! Everything here is exact: ranks, kernels and spans are computed by
//! fraction-exact Gaussian elimination, so every dimension count reported by
//! the checks is a certificate rather than an estimate.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// A dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries.len must equal rows*cols");
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_vec(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Mat::scalar(n, &Rat::one())
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(rows, cols);
        m.set(i, j, Rat::one());
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&x| Rat::int(x))
            })
            .collect();
        Mat::from_vec(r, c, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<Rat>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_diag(diag: &[Rat]) -> Self {
        let mut m = Mat::zeros(diag.len(), diag.len());
        for (i, x) in diag.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rat) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Rat) {
        self.data[i * self.cols + j] += x;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat::from_vec(self.rows, self.cols, self.data.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rat, other: &Mat) {
        assert_eq!(self.shape(), other.shape());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar(&self) -> Option<Rat> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            Rat::zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                let ok = if i == j { x == &c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product with `self` as the major (slow) index.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Mat::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// `[self, other] = self*other - other*self`
    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat::from_vec(idx.len(), self.cols, data)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Mat]) -> Result<Mat> {
        let cols = blocks.first().map_or(0, Mat::cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape {
                    expected: format!("{cols} columns"),
                    found: format!("{} columns", b.cols),
                });
            }
            rows += b.rows;
            data.extend_from_slice(&b.data);
        }
        Ok(Mat::from_vec(rows, cols, data))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let red = rref_with_pivots(&aug);
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.mat.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'b> Mul<&'b Mat> for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &'b Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'b> Add<&'b Mat> for &Mat {
    type Output = Mat;
    fn add(self, rhs: &'b Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape());
        Mat::from_vec(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        )
    }
}

impl<'b> Sub<&'b Mat> for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &'b Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape());
        Mat::from_vec(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        )
    }
}

struct Reduced {
    mat: Mat,
    pivots: Vec<usize>,
}

fn rref_with_pivots(m: &Mat) -> Reduced {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).recip().expect("nonzero pivot");
        for j in c..cols {
            let x = a.get(r, j) * &inv;
            a.set(r, j, x);
        }
        let pivot_row: Vec<Rat> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    let x = a.get(i, j) - &(&f * pv);
                    a.set(i, j, x);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Reduced { mat: a, pivots }
}

/// Reduced row echelon form and rank.
pub fn rref(m: &Mat) -> (Mat, usize) {
    let red = rref_with_pivots(m);
    let rank = red.pivots.len();
    (red.mat, rank)
}

pub fn rank(m: &Mat) -> usize {
    rref(m).1
}

/// Basis of the right null space, one vector per free column, in increasing
/// order of the free column.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<Rat>> {
    let red = rref_with_pivots(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (r, &p) in red.pivots.iter().enumerate() {
                v[p] = -red.mat.get(r, f);
            }
            v
        })
        .collect()
}

/// Dimension of the rational span of equally shaped matrices, each read as a
/// flattened vector.
pub fn span_dimension(vs: &[Mat]) -> Result<usize> {
    let Some(first) = vs.first() else {
        return Ok(0);
    };
    let shape = first.shape();
    let mut ech = RowEchelon::new(shape.0 * shape.1);
    for v in vs {
        if v.shape() != shape {
            return Err(Error::Shape {
                expected: format!("{}x{}", shape.0, shape.1),
                found: format!("{}x{}", v.rows, v.cols),
            });
        }
        ech.insert(v.entries());
    }
    Ok(ech.rank())
}

/// Basis of the smallest unital subalgebra of `size`×`size` matrices
/// containing `gens`.
///
/// Words in the generators are explored breadth-first by length; a word is
/// kept only if it is independent of those kept so far, and only kept words
/// are extended. The dimension is bounded by `size²`, so this terminates.
pub fn algebra_closure(gens: &[Mat], size: usize) -> Result<Vec<Mat>> {
    for g in gens {
        if g.shape() != (size, size) {
            return Err(Error::Shape {
                expected: format!("{size}x{size}"),
                found: format!("{}x{}", g.rows, g.cols),
            });
        }
    }
    let mut ech = RowEchelon::new(size * size);
    let mut basis = Vec::new();
    let mut frontier = Vec::new();
    let id = Mat::identity(size);
    if size > 0 && ech.insert(id.entries()) {
        basis.push(id.clone());
        frontier.push(id);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let p = g * w;
                if ech.insert(p.entries()) {
                    basis.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}

/// Incrementally maintained echelon basis of a row space.
///
/// Rows are kept with a unit pivot and zeros in the pivot columns of every
/// earlier row, so reducing in insertion order is exact.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    len: usize,
    rows: Vec<(usize, Vec<(usize, Rat)>)>,
}

impl RowEchelon {
    pub fn new(len: usize) -> Self {
        RowEchelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (j, x) in row {
                v[*j] -= &f * x;
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Rat::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.len);
        if self.is_full() {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.push_reduced(w)
    }

    /// Same as [`RowEchelon::insert`] for a sparse vector.
    pub fn insert_sparse(&mut self, v: &[(usize, Rat)]) -> bool {
        if self.is_full() {
            return false;
        }
        let mut w = vec![Rat::zero(); self.len];
        for (j, x) in v {
            w[*j] += x;
        }
        self.reduce(&mut w);
        self.push_reduced(w)
    }

    fn push_reduced(&mut self, w: Vec<Rat>) -> bool {
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip().expect("nonzero");
        let row = w
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x * &inv))
            .collect();
        self.rows.push((p, row));
        true
    }
}

/// Coordinates with respect to a fixed full-column-rank basis of a subspace.
///
/// A set of rows on which the basis is invertible is fixed once; each
/// coordinate solve is then a small matrix product followed by an exact
/// membership check.
#[derive(Clone, Debug)]
pub struct SubspaceCoords {
    basis: Mat,
    rows: Vec<usize>,
    inv: Mat,
}

impl SubspaceCoords {
    /// `basis` holds the subspace basis as columns.
    pub fn new(basis: Mat) -> Result<Self> {
        let red = rref_with_pivots(&basis.transpose());
        if red.pivots.len() != basis.cols() {
            return Err(Error::Shape {
                expected: format!("{} independent columns", basis.cols()),
                found: format!("rank {}", red.pivots.len()),
            });
        }
        let rows = red.pivots;
        let inv = basis.select_rows(&rows).inverse().expect("pivot rows are independent");
        Ok(SubspaceCoords { basis, rows, inv })
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Solves `basis * Y = targets` (targets as columns).
    pub fn coords(&self, targets: &Mat) -> Result<Mat> {
        let y = &self.inv * &targets.select_rows(&self.rows);
        if &(&self.basis * &y) != targets {
            return Err(Error::NotInSpan);
        }
        Ok(y)
    }

    pub fn coords_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        let m = Mat::from_cols(v.len(), &[v.to_vec()]);
        Ok(self.coords(&m)?.col(0))
    }

    /// Matrix of an operator that preserves the subspace, in basis coordinates.
    pub fn restrict(&self, op: &Mat) -> Result<Mat> {
        self.coords(&(op * &self.basis))
    }
}

/// Dimension of the commutant `{M : M A = A M for all A in gens}` of square
/// `dim`×`dim` matrices.
///
/// When `classes` is given, unknowns `M[i][j]` with `classes[i] != classes[j]`
/// are fixed at zero. Callers pass weight labels here: any `M` commuting with
/// a diagonal Cartan action must preserve its weight spaces, so this is exact
/// whenever the diagonal Cartan matrices are among `gens`.
pub fn commutant_dimension(gens: &[Mat], dim: usize, classes: Option<&[usize]>) -> Result<usize> {
    for g in gens {
        if g.shape() != (dim, dim) {
            return Err(Error::Shape {
                expected: format!("{dim}x{dim}"),
                found: format!("{}x{}", g.rows, g.cols),
            });
        }
    }
    if let Some(c) = classes {
        if c.len() != dim {
            return Err(Error::Arity {
                expected: dim,
                found: c.len(),
            });
        }
    }
    let allowed = |i: usize, j: usize| classes.is_none_or(|c| c[i] == c[j]);
    let mut var = vec![usize::MAX; dim * dim];
    let mut nvars = 0;
    for i in 0..dim {
        for j in 0..dim {
            if allowed(i, j) {
                var[i * dim + j] = nvars;
                nvars += 1;
            }
        }
    }
    let mut ech = RowEchelon::new(nvars);
    for g in gens {
        let sg = SparseMat::from_dense(g);
        let sgt = SparseMat::from_dense(&g.transpose());
        // (M g - g M)[i][j] = sum_l M[i][l] g[l][j] - sum_l g[i][l] M[l][j]
        for i in 0..dim {
            for j in 0..dim {
                if ech.is_full() {
                    return Ok(0);
                }
                let mut eq: Vec<(usize, Rat)> = Vec::new();
                for (l, x) in &sgt.rows[j] {
                    let v = var[i * dim + l];
                    if v != usize::MAX {
                        eq.push((v, x.clone()));
                    }
                }
                for (l, x) in &sg.rows[i] {
                    let v = var[l * dim + j];
                    if v != usize::MAX {
                        eq.push((v, -x));
                    }
                }
                if !eq.is_empty() {
                    ech.insert_sparse(&eq);
                }
            }
        }
    }
    Ok(nvars - ech.rank())
}

/// Row-sparse matrix used for the operator products of the current engine.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat {
    pub(crate) rows: Vec<Vec<(usize, Rat)>>,
    pub(crate) cols: usize,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows: vec![Vec::new(); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            rows: (0..n).map(|i| vec![(i, Rat::one())]).collect(),
            cols: n,
        }
    }

    pub fn from_dense(m: &Mat) -> Self {
        SparseMat {
            rows: (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (j, x.clone()))
                        .collect()
                })
                .collect(),
            cols: m.cols(),
        }
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    /// `I_left ⊗ a ⊗ I_right`
    pub fn lift(a: &Mat, left: usize, right: usize) -> Self {
        let (ar, ac) = a.shape();
        let sa = SparseMat::from_dense(a);
        let mut rows = Vec::with_capacity(left * ar * right);
        for l in 0..left {
            for i in 0..ar {
                for r in 0..right {
                    rows.push(
                        sa.rows[i]
                            .iter()
                            .map(|(j, x)| ((l * ac + j) * right + r, x.clone()))
                            .collect(),
                    );
                }
            }
        }
        SparseMat {
            rows,
            cols: left * ac * right,
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn mul(&self, rhs: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, rhs.rows.len());
        let mut acc = vec![Rat::zero(); rhs.cols];
        let mut touched: Vec<usize> = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (l, a) in row {
                    for (j, b) in &rhs.rows[*l] {
                        if acc[*j].is_zero() {
                            touched.push(*j);
                        }
                        acc[*j] += a * b;
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let out = touched
                    .drain(..)
                    .filter_map(|j| {
                        let x = std::mem::take(&mut acc[j]);
                        (!x.is_zero()).then_some((j, x))
                    })
                    .collect();
                out
            })
            .collect();
        SparseMat { rows, cols: rhs.cols }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rat, other: &SparseMat) {
        assert_eq!(self.rows.len(), other.rows.len());
        if c.is_zero() {
            return;
        }
        for (mine, theirs) in self.rows.iter_mut().zip(&other.rows) {
            if theirs.is_empty() {
                continue;
            }
            let mut merged = Vec::with_capacity(mine.len() + theirs.len());
            let (mut a, mut b) = (mine.drain(..).peekable(), theirs.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (Some((ja, _)), Some((jb, _))) if ja < jb => merged.push(a.next().unwrap()),
                    (Some((ja, _)), Some((jb, _))) if ja > jb => {
                        let (j, x) = b.next().unwrap();
                        merged.push((*j, c * x));
                    }
                    (Some(_), Some(_)) => {
                        let (j, x) = a.next().unwrap();
                        let (_, y) = b.next().unwrap();
                        let s = x + c * y;
                        if !s.is_zero() {
                            merged.push((j, s));
                        }
                    }
                    (Some(_), None) => merged.push(a.next().unwrap()),
                    (None, Some(_)) => {
                        let (j, x) = b.next().unwrap();
                        merged.push((*j, c * x));
                    }
                    (None, None) => break,
                }
            }
            drop(a);
            *mine = merged;
        }
    }

    /// `dense += c * self`
    pub fn add_scaled_into(&self, c: &Rat, dense: &mut Mat) {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row {
                dense.add_at(i, *j, &(c * x));
            }
        }
    }
}
