//! The classical matrix Lie algebras gl(n), sp(2n) and so(n) with explicit
//! bases, structure constants, the trace form and its dual bases.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, SubspaceCoords};
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sp,
    So,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gl => "gl",
            Family::Sp => "sp",
            Family::So => "so",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "sp" => Ok(Family::Sp),
            "so" => Ok(Family::So),
            _ => Err(Error::Parse(format!("unknown family '{s}' (expected gl, sp or so)"))),
        }
    }
}

/// `s(i) = +1` for `1 <= i <= n`, `-1` for `n < i <= 2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignFunction {
    pub n: usize,
}

impl SignFunction {
    /// `i` is 1-based.
    pub fn eval(&self, i: usize) -> i64 {
        assert!((1..=2 * self.n).contains(&i), "index {i} outside 1..={}", 2 * self.n);
        if i <= self.n {
            1
        } else {
            -1
        }
    }

    /// The partner index `2n + 1 - i`.
    pub fn partner(&self, i: usize) -> usize {
        2 * self.n + 1 - i
    }
}

/// The symplectic Gram matrix `[[0, J], [-J, 0]]` with `J` the `n`×`n`
/// anti-diagonal all-ones matrix.
pub fn symplectic_form(n: usize) -> Mat {
    let s = SignFunction { n };
    let mut j = Mat::zeros(2 * n, 2 * n);
    for i in 1..=2 * n {
        j.set(i - 1, s.partner(i) - 1, Rat::int(s.eval(i)));
    }
    j
}

/// A matrix Lie algebra together with everything the checks need: structure
/// constants in the chosen basis, the trace form, dual bases, and for gl and
/// sp the index sets of a rational split Cartan subalgebra and of the positive
/// and negative root vectors.
#[derive(Clone, Debug)]
pub struct LieAlgebraSpec {
    pub family: Family,
    pub n: usize,
    /// Size of the defining matrices.
    pub size: usize,
    pub basis: Vec<Mat>,
    pub labels: Vec<String>,
    bracket: Vec<Vec<Rat>>,
    pub form_gram: Mat,
    /// Row `i` holds the coordinates of `e^i` in the basis.
    pub dual_coords: Mat,
    pub dual_basis: Vec<Mat>,
    pub cartan_indices: Option<Vec<usize>>,
    pub raising_indices: Option<Vec<usize>>,
    pub lowering_indices: Option<Vec<usize>>,
    coords: SubspaceCoords,
}

impl LieAlgebraSpec {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Sp => format!("sp({})", 2 * self.n),
            f => format!("{f}({})", self.n),
        }
    }

    /// Coordinates of `m` in the basis; fails when `m` is outside the algebra.
    pub fn coords(&self, m: &Mat) -> Result<Vec<Rat>> {
        if m.shape() != (self.size, self.size) {
            return Err(Error::NotInAlgebra);
        }
        self.coords.coords_vec(m.entries()).map_err(|_| Error::NotInAlgebra)
    }

    pub fn element(&self, coords: &[Rat]) -> Mat {
        let mut m = Mat::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            m.axpy(c, b);
        }
        m
    }

    /// Coordinates of `[basis_i, basis_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[Rat] {
        &self.bracket[i * self.dim() + j]
    }

    pub fn bracket_coords(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let d = self.dim();
        let mut out = vec![Rat::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * yj;
                for (o, b) in out.iter_mut().zip(self.bracket(i, j)) {
                    if !b.is_zero() {
                        *o += &c * b;
                    }
                }
            }
        }
        out
    }

    /// The trace form `tr(xy)`.
    pub fn form(&self, x: &Mat, y: &Mat) -> Rat {
        (x * y).trace()
    }

    pub fn satisfies_defining_condition(&self, x: &Mat) -> bool {
        match self.family {
            Family::Gl => x.shape() == (self.size, self.size),
            Family::Sp => {
                let j = symplectic_form(self.n);
                (&(&x.transpose() * &j) + &(&j * x)).is_zero()
            }
            Family::So => (&x.transpose() + x).is_zero(),
        }
    }

    pub fn has_weights(&self) -> bool {
        self.cartan_indices.is_some()
    }

    pub fn cartan(&self) -> Result<&[usize]> {
        self.cartan_indices
            .as_deref()
            .ok_or(Error::UnsupportedFamily(self.family))
    }

    pub fn raising(&self) -> Result<&[usize]> {
        self.raising_indices
            .as_deref()
            .ok_or(Error::UnsupportedFamily(self.family))
    }

    pub fn lowering(&self) -> Result<&[usize]> {
        self.lowering_indices
            .as_deref()
            .ok_or(Error::UnsupportedFamily(self.family))
    }

    pub fn sign_function(&self) -> Option<SignFunction> {
        (self.family == Family::Sp).then_some(SignFunction { n: self.n })
    }

    /// Bracket antisymmetry and the Jacobi identity on every basis triple.
    pub fn check_bracket_axioms(&self) -> bool {
        let d = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Rat::zero(); d];
            v[i] = Rat::one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                let neg: Vec<Rat> = self.bracket(j, i).iter().map(|x| -x).collect();
                if self.bracket(i, j) != neg.as_slice() {
                    return false;
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let a = self.bracket_coords(&unit(i), self.bracket(j, k));
                    let b = self.bracket_coords(&unit(j), self.bracket(k, i));
                    let c = self.bracket_coords(&unit(k), self.bracket(i, j));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `<[x,y],z> + <y,[x,z]> = 0` on all basis triples, plus symmetry and
    /// nondegeneracy of the Gram matrix.
    pub fn check_form_invariance(&self) -> bool {
        let d = self.dim();
        if self.form_gram != self.form_gram.transpose() || self.form_gram.inverse().is_none() {
            return false;
        }
        let form_coords = |u: &[Rat], v: &[Rat]| -> Rat {
            let gv = self.form_gram.mul_vec(v);
            u.iter().zip(&gv).map(|(a, b)| a * b).sum()
        };
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let mut ey = vec![Rat::zero(); d];
                    ey[y] = Rat::one();
                    let mut ez = vec![Rat::zero(); d];
                    ez[z] = Rat::one();
                    let s = form_coords(self.bracket(x, y), &ez) + form_coords(&ey, self.bracket(x, z));
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `tr(e_i e^j) = δ_ij`
    pub fn check_duality(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let want = if i == j { Rat::one() } else { Rat::zero() };
                self.form(&self.basis[i], &self.dual_basis[j]) == want
            })
        })
    }

    /// Pairs `(e_i, e^i)` of trace-dual bases.
    pub fn casimir_dual_bases(&self) -> Vec<(Mat, Mat)> {
        self.basis
            .iter()
            .cloned()
            .zip(self.dual_basis.iter().cloned())
            .collect()
    }
}

/// Builds gl(n), sp(2n) or so(n) in its defining representation.
pub fn build_lie_algebra(family: Family, n: usize) -> Result<Arc<LieAlgebraSpec>> {
    let min = if family == Family::So { 2 } else { 1 };
    if n < min {
        return Err(Error::UnsupportedRank { family, n });
    }
    let parts = match family {
        Family::Gl => gl_basis(n),
        Family::Sp => sp_basis(n),
        Family::So => so_basis(n),
    };
    assemble(family, n, parts).map(Arc::new)
}

struct BasisParts {
    size: usize,
    basis: Vec<Mat>,
    labels: Vec<String>,
    cartan: Option<Vec<usize>>,
    raising: Option<Vec<usize>>,
    lowering: Option<Vec<usize>>,
}

fn gl_basis(n: usize) -> BasisParts {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    let (mut cartan, mut raising, mut lowering) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..n {
        for j in 0..n {
            let idx = basis.len();
            basis.push(Mat::unit(n, n, i, j));
            labels.push(format!("E{},{}", i + 1, j + 1));
            match i.cmp(&j) {
                std::cmp::Ordering::Equal => cartan.push(idx),
                std::cmp::Ordering::Less => raising.push(idx),
                std::cmp::Ordering::Greater => lowering.push(idx),
            }
        }
    }
    BasisParts {
        size: n,
        basis,
        labels,
        cartan: Some(cartan),
        raising: Some(raising),
        lowering: Some(lowering),
    }
}

/// ε-weight of the standard basis vector `e_a` (1-based) of C^{2n}.
fn sp_vector_weight(n: usize, a: usize) -> Vec<i64> {
    let mut w = vec![0; n];
    if a <= n {
        w[a - 1] = 1;
    } else {
        w[2 * n - a] = -1;
    }
    w
}

/// Cartan elements `E_ii - E_i'i'` first, then for each `a <= b` with
/// `b != a'` the root vector `v -> <e_a,v> e_b + <e_b,v> e_a`, which is
/// `s(a) E_{b,a'} + s(b) E_{a,b'}` (halved when `a = b`).
fn sp_basis(n: usize) -> BasisParts {
    let size = 2 * n;
    let s = SignFunction { n };
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    let (mut cartan, mut raising, mut lowering) = (Vec::new(), Vec::new(), Vec::new());
    for i in 1..=n {
        let mut h = Mat::unit(size, size, i - 1, i - 1);
        h.set(s.partner(i) - 1, s.partner(i) - 1, Rat::int(-1));
        cartan.push(basis.len());
        basis.push(h);
        labels.push(format!("H{i}"));
    }
    for a in 1..=size {
        for b in a..=size {
            if b == s.partner(a) {
                continue;
            }
            let mut x = Mat::zeros(size, size);
            if a == b {
                x.set(a - 1, s.partner(a) - 1, Rat::int(s.eval(a)));
            } else {
                x.set(b - 1, s.partner(a) - 1, Rat::int(s.eval(a)));
                x.set(a - 1, s.partner(b) - 1, Rat::int(s.eval(b)));
            }
            let w: Vec<i64> = sp_vector_weight(n, a)
                .iter()
                .zip(sp_vector_weight(n, b))
                .map(|(p, q)| p + q)
                .collect();
            let positive = w.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0);
            let idx = basis.len();
            if positive {
                raising.push(idx);
            } else {
                lowering.push(idx);
            }
            basis.push(x);
            labels.push(format!("X{a},{b}"));
        }
    }
    BasisParts {
        size,
        basis,
        labels,
        cartan: Some(cartan),
        raising: Some(raising),
        lowering: Some(lowering),
    }
}

fn so_basis(n: usize) -> BasisParts {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut x = Mat::unit(n, n, i, j);
            x.set(j, i, Rat::int(-1));
            basis.push(x);
            labels.push(format!("F{},{}", i + 1, j + 1));
        }
    }
    BasisParts {
        size: n,
        basis,
        labels,
        cartan: None,
        raising: None,
        lowering: None,
    }
}

fn assemble(family: Family, n: usize, parts: BasisParts) -> Result<LieAlgebraSpec> {
    let BasisParts {
        size,
        basis,
        labels,
        cartan,
        raising,
        lowering,
    } = parts;
    let d = basis.len();
    let flat: Vec<Vec<Rat>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    let coords = SubspaceCoords::new(Mat::from_cols(size * size, &flat))?;

    let mut bracket = Vec::with_capacity(d * d);
    for x in &basis {
        for y in &basis {
            let c = x.commutator(y);
            bracket.push(coords.coords_vec(c.entries()).map_err(|_| Error::NotInAlgebra)?);
        }
    }

    let mut gram = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            gram.set(i, j, (&basis[i] * &basis[j]).trace());
        }
    }
    let dual_coords = gram.inverse().ok_or(Error::Shape {
        expected: "nondegenerate trace form".into(),
        found: "singular Gram matrix".into(),
    })?;
    let dual_basis = (0..d)
        .map(|i| {
            let mut m = Mat::zeros(size, size);
            for (c, b) in dual_coords.row(i).iter().zip(&basis) {
                m.axpy(c, b);
            }
            m
        })
        .collect();

    Ok(LieAlgebraSpec {
        family,
        n,
        size,
        basis,
        labels,
        bracket,
        form_gram: gram,
        dual_coords,
        dual_basis,
        cartan_indices: cartan,
        raising_indices: raising,
        lowering_indices: lowering,
        coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_shape() {
        let g = build_lie_algebra(Family::Gl, 2).unwrap();
        assert_eq!(g.dim(), 4);
        let cartan: Vec<&Mat> = g.cartan().unwrap().iter().map(|&i| &g.basis[i]).collect();
        assert_eq!(cartan, vec![&Mat::unit(2, 2, 0, 0), &Mat::unit(2, 2, 1, 1)]);
        let raising: Vec<&Mat> = g.raising().unwrap().iter().map(|&i| &g.basis[i]).collect();
        assert_eq!(raising, vec![&Mat::unit(2, 2, 0, 1)]);
    }

    #[test]
    fn sp2_is_three_dimensional() {
        let g = build_lie_algebra(Family::Sp, 1).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(build_lie_algebra(Family::Sp, 2).unwrap().dim(), 10);
        assert_eq!(build_lie_algebra(Family::Sp, 3).unwrap().dim(), 21);
    }

    #[test]
    fn so3_basis() {
        let g = build_lie_algebra(Family::So, 3).unwrap();
        assert_eq!(g.dim(), 3);
        let f = |i, j| {
            let mut m = Mat::unit(3, 3, i, j);
            m.set(j, i, Rat::int(-1));
            m
        };
        assert_eq!(g.basis, vec![f(0, 1), f(0, 2), f(1, 2)]);
        assert!(g.cartan().is_err());
    }

    #[test]
    fn unsupported_ranks() {
        assert!(build_lie_algebra(Family::Gl, 0).is_err());
        assert!(build_lie_algebra(Family::So, 1).is_err());
    }

    #[test]
    fn sign_function_pairs() {
        for n in 1..5 {
            let s = SignFunction { n };
            for i in 1..=2 * n {
                assert_eq!(s.eval(i) * s.eval(s.partner(i)), -1);
            }
        }
    }

    #[test]
    fn gl_dual_is_transpose() {
        let g = build_lie_algebra(Family::Gl, 3).unwrap();
        for (e, d) in g.casimir_dual_bases() {
            assert_eq!(d, e.transpose());
        }
    }

    #[test]
    fn structure_checks_all_families() {
        for (f, n) in [
            (Family::Gl, 1),
            (Family::Gl, 2),
            (Family::Gl, 3),
            (Family::Sp, 1),
            (Family::Sp, 2),
            (Family::So, 2),
            (Family::So, 3),
            (Family::So, 4),
        ] {
            let g = build_lie_algebra(f, n).unwrap();
            assert!(g.basis.iter().all(|b| g.satisfies_defining_condition(b)), "{f}{n}");
            assert!(g.check_bracket_axioms(), "{f}{n}");
            assert!(g.check_form_invariance(), "{f}{n}");
            assert!(g.check_duality(), "{f}{n}");
        }
    }

    #[test]
    fn casimir_sum_is_scalar_on_standard() {
        // sum_i e_i e^i = (dim g / N) * I by tracing the trace-form identity
        for (f, n, want) in [
            (Family::Gl, 2, Rat::int(2)),
            (Family::Sp, 1, Rat::new(3, 2)),
            (Family::So, 3, Rat::int(1)),
        ] {
            let g = build_lie_algebra(f, n).unwrap();
            let mut s = Mat::zeros(g.size, g.size);
            for (e, d) in g.casimir_dual_bases() {
                s = &s + &(&e * &d);
            }
            assert_eq!(s.as_scalar(), Some(want));
        }
    }

    #[test]
    fn cartan_brackets_are_diagonal() {
        for (f, n) in [(Family::Gl, 3), (Family::Sp, 2)] {
            let g = build_lie_algebra(f, n).unwrap();
            let cartan = g.cartan().unwrap();
            for &h in cartan {
                for &h2 in cartan {
                    assert!(g.bracket(h, h2).iter().all(Rat::is_zero));
                }
                for &x in g.raising().unwrap().iter().chain(g.lowering().unwrap()) {
                    let b = g.bracket(h, x);
                    assert!(b.iter().enumerate().all(|(i, c)| i == x || c.is_zero()));
                }
            }
        }
    }
}
