//! Explicit invariant tensors: the Casimir, the gl(n) permutation tensors and
//! cycle tensors, the sp(2n) and so(n) tensors obtained from pairings of
//! `V^{⊗2k}`, and the transposition preimage polynomials for `V^{⊗k}`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::currents::InvariantTensor;
use crate::error::{Error, Result};
use crate::liealg::{Family, LieAlgebraSpec, SignFunction};
use crate::linalg::Mat;
use crate::poly::{ensure_distinct, Poly};
use crate::rat::Rat;

/// A bijection of `{1, …, k}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the 0-based image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Parse("permutation entries are 1-based".into()));
        }
        Permutation::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The cycle `(1 2 … k)`: `i -> i + 1`, `k -> 1`.
    pub fn cycle(k: usize) -> Self {
        Permutation {
            images: (0..k).map(|i| (i + 1) % k.max(1)).collect(),
        }
    }

    /// The transposition `(r s)` on `k` letters, 1-based.
    pub fn transposition(k: usize, r: usize, s: usize) -> Result<Self> {
        if r == 0 || s == 0 || r > k || s > k || r == s {
            return Err(Error::Parse(format!("invalid transposition ({r} {s}) on {k} letters")));
        }
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(r - 1, s - 1);
        Ok(Permutation { images })
    }

    /// All of `Σ_k` in lexicographic order of image tuples.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.k(), other.k());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.k()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Parses cycle notation such as `"(1 2)(3)"` or `"(1,3,2)"` on `k` letters.
    pub fn parse_cycles(s: &str, k: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("malformed permutation '{s}': {msg}"));
        let mut images: Vec<usize> = (0..k).collect();
        let mut seen = HashSet::new();
        let mut rest = s.trim();
        if rest.is_empty() || rest == "()" {
            return Ok(Permutation::identity(k));
        }
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let cyc: Vec<usize> = body[..body_end - 1]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad(&format!("bad entry '{t}'"))))
                .collect::<Result<_>>()?;
            for &c in &cyc {
                if c == 0 || c > k {
                    return Err(bad(&format!("entry {c} outside 1..={k}")));
                }
                if !seen.insert(c) {
                    return Err(bad(&format!("entry {c} repeated")));
                }
            }
            for (i, &c) in cyc.iter().enumerate() {
                images[c - 1] = cyc[(i + 1) % cyc.len()] - 1;
            }
            rest = rest[body_end + 1..].trim_start();
        }
        Permutation::new(images)
    }

    /// Disjoint-cycle notation with fixed points omitted, `"()"` for identity.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.k()];
        let mut out = String::new();
        for start in 0..self.k() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.images[i];
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.cycle_notation())
    }
}

/// Matrix of `σ` on `V^{⊗k}`, `dim V = n`, moving the tensor factor in slot
/// `j` to slot `σ(j)`. `σ ↦ matrix` is a homomorphism.
pub fn place_permutation_matrix(sigma: &Permutation, n: usize) -> Mat {
    let k = sigma.k();
    let total = n.pow(k as u32);
    let mut m = Mat::zeros(total, total);
    let mut digits = vec![0; k];
    let mut moved = vec![0; k];
    for src in 0..total {
        let mut x = src;
        for j in (0..k).rev() {
            digits[j] = x % n;
            x /= n;
        }
        for j in 0..k {
            moved[sigma.apply(j)] = digits[j];
        }
        let dst = moved.iter().fold(0, |acc, &a| acc * n + a);
        m.set(dst, src, Rat::one());
    }
    m
}

/// `Ω = sum_i e_i ⊗ e^i` with `e^i` expanded in the basis.
pub fn casimir_tensor(spec: &LieAlgebraSpec) -> InvariantTensor {
    let d = spec.dim();
    InvariantTensor::from_terms(
        2,
        (0..d).flat_map(|i| (0..d).map(move |j| (spec.dual_coords.get(i, j).clone(), vec![i, j]))),
    )
}

fn gl_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// `θ_σ = sum E_{i_1, i_σ(1)} ⊗ … ⊗ E_{i_k, i_σ(k)}` over gl(n), in the basis
/// order of `build_lie_algebra(Gl, n)`.
pub fn theta_sigma_gl(sigma: &Permutation, n: usize) -> InvariantTensor {
    let k = sigma.k();
    let mut t = InvariantTensor::zero(k);
    for idx in index_tuples(k, n) {
        let tuple = (0..k).map(|p| gl_index(n, idx[p], idx[sigma.apply(p)])).collect();
        t.add_term(tuple, &Rat::one());
    }
    t
}

/// `θ_{σ_k}` for the cycle `σ_k = (1 2 … k)`.
pub fn theta_cycle_gl(k: usize, n: usize) -> InvariantTensor {
    theta_sigma_gl(&Permutation::cycle(k), n)
}

fn index_tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect()
    })
}

/// Expands `coeff · f_1 ⊗ … ⊗ f_k` (each factor as sparse basis coordinates)
/// into `acc`.
fn accumulate_product(acc: &mut InvariantTensor, coeff: &Rat, factors: &[&Vec<(usize, Rat)>]) {
    let mut partial: Vec<(Rat, Vec<usize>)> = vec![(coeff.clone(), Vec::with_capacity(factors.len()))];
    for f in factors {
        partial = partial
            .into_iter()
            .flat_map(|(c, idx)| {
                f.iter().map(move |(b, x)| {
                    let mut idx = idx.clone();
                    idx.push(*b);
                    (&c * x, idx)
                })
            })
            .collect();
        if partial.is_empty() {
            return;
        }
    }
    for (c, idx) in partial {
        acc.add_term(idx, &c);
    }
}

fn sparse_coords(spec: &LieAlgebraSpec, m: &Mat) -> Result<Vec<(usize, Rat)>> {
    Ok(spec
        .coords(m)?
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// Position labels `i_1, …, i_{2k}` induced by the free indices: pair `j`
/// occupies positions `2j, 2j+1` (0-based).
fn pair_free_tuples(k: usize, n_values: usize) -> Vec<Vec<usize>> {
    index_tuples(k, n_values)
}

/// `γ(Θ_σ)` for sp(2n), `σ ∈ Σ_{2k}`.
///
/// Positions `2j-1, 2j` carry `i` and `2n+1-i` with the sign `s(i)`; the
/// tensor factor in slot `m` is `s(a) E_{b,a'} + s(b) E_{a,b'}` for
/// `a = i_σ(2m-1)`, `b = i_σ(2m)`, with a single overall `1/2`.
pub fn theta_sigma_sp(spec: &LieAlgebraSpec, sigma: &Permutation) -> Result<InvariantTensor> {
    if spec.family != Family::Sp {
        return Err(Error::UnsupportedFamily(spec.family));
    }
    if !sigma.k().is_multiple_of(2) {
        return Err(Error::Arity {
            expected: sigma.k() + 1,
            found: sigma.k(),
        });
    }
    let k = sigma.k() / 2;
    let s = SignFunction { n: spec.n };
    let size = 2 * spec.n;
    // factor table over 1-based (a, b)
    let mut table: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
    for a in 1..=size {
        for b in 1..=size {
            let mut m = Mat::zeros(size, size);
            m.add_at(b - 1, s.partner(a) - 1, &Rat::int(s.eval(a)));
            m.add_at(a - 1, s.partner(b) - 1, &Rat::int(s.eval(b)));
            if !spec.satisfies_defining_condition(&m) {
                return Err(Error::NotInAlgebra);
            }
            table.insert((a, b), sparse_coords(spec, &m)?);
        }
    }
    let half = Rat::new(1, 2);
    let mut t = InvariantTensor::zero(k);
    let mut labels = vec![0; 2 * k];
    for free in pair_free_tuples(k, size) {
        let mut sign = 1;
        for (j, &i0) in free.iter().enumerate() {
            let i = i0 + 1;
            labels[2 * j] = i;
            labels[2 * j + 1] = s.partner(i);
            sign *= s.eval(i);
        }
        let factors: Vec<&Vec<(usize, Rat)>> = (0..k)
            .map(|m| &table[&(labels[sigma.apply(2 * m)], labels[sigma.apply(2 * m + 1)])])
            .collect();
        accumulate_product(&mut t, &(&half * &Rat::int(sign)), &factors);
    }
    Ok(t)
}

/// `δ(Ψ_σ)` for so(n), `σ ∈ Σ_{2k}`: positions `2j-1, 2j` carry the same
/// index, the factor in slot `m` is `E_{a,b} - E_{b,a}`, overall `-1/2`.
pub fn psi_sigma_so(spec: &LieAlgebraSpec, sigma: &Permutation) -> Result<InvariantTensor> {
    if spec.family != Family::So {
        return Err(Error::UnsupportedFamily(spec.family));
    }
    if !sigma.k().is_multiple_of(2) {
        return Err(Error::Arity {
            expected: sigma.k() + 1,
            found: sigma.k(),
        });
    }
    let k = sigma.k() / 2;
    let n = spec.n;
    let mut table: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let mut m = Mat::zeros(n, n);
            m.add_at(a, b, &Rat::one());
            m.add_at(b, a, &Rat::int(-1));
            table.insert((a, b), sparse_coords(spec, &m)?);
        }
    }
    let coeff = Rat::new(-1, 2);
    let mut t = InvariantTensor::zero(k);
    let mut labels = vec![0; 2 * k];
    for free in pair_free_tuples(k, n) {
        for (j, &i) in free.iter().enumerate() {
            labels[2 * j] = i;
            labels[2 * j + 1] = i;
        }
        let factors: Vec<&Vec<(usize, Rat)>> = (0..k)
            .map(|m| &table[&(labels[sigma.apply(2 * m)], labels[sigma.apply(2 * m + 1)])])
            .collect();
        accumulate_product(&mut t, &coeff, &factors);
    }
    Ok(t)
}

/// Key determining `γ(Θ_σ)` / `δ(Ψ_σ)` exactly: for each slot, the pair its
/// position belongs to (pairs renumbered by first appearance, which only
/// renames summation variables) and, for sp, which end of the pair it is.
fn pairing_key(sigma: &Permutation, with_parity: bool) -> Vec<(usize, usize)> {
    let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
    (0..sigma.k())
        .map(|slot| {
            let pos = sigma.apply(slot);
            let next = rename.len();
            let pair = *rename.entry(pos / 2).or_insert(next);
            (pair, if with_parity { pos % 2 } else { 0 })
        })
        .collect()
}

/// The full spanning family of `[g^{⊗k}]^g` for the family of `spec`, one
/// entry per distinct tensor: `θ_σ, σ ∈ Σ_k` for gl, `γ(Θ_σ)` resp.
/// `δ(Ψ_σ)`, `σ ∈ Σ_{2k}` for sp/so. Every σ is enumerated; σ producing an
/// identical tensor are reported once under the first such σ. Zero tensors
/// are dropped. Labels are cycle notation.
pub fn fft_tensors(spec: &LieAlgebraSpec, k: usize) -> Result<Vec<(String, InvariantTensor)>> {
    if k == 0 {
        return Ok(vec![("()".into(), InvariantTensor::scalar(Rat::one()))]);
    }
    let mut out = Vec::new();
    match spec.family {
        Family::Gl => {
            for sigma in Permutation::all(k) {
                out.push((sigma.cycle_notation(), theta_sigma_gl(&sigma, spec.n)));
            }
        }
        Family::Sp | Family::So => {
            let sp = spec.family == Family::Sp;
            let mut seen = HashSet::new();
            for sigma in Permutation::all(2 * k) {
                if !seen.insert(pairing_key(&sigma, sp)) {
                    continue;
                }
                let t = if sp {
                    theta_sigma_sp(spec, &sigma)?
                } else {
                    psi_sigma_so(spec, &sigma)?
                };
                if !t.is_empty() {
                    out.push((sigma.cycle_notation(), t));
                }
            }
        }
    }
    Ok(out)
}

/// `ad_x θ = sum_p (1 ⊗ … ⊗ ad_x ⊗ … ⊗ 1) θ` for `x = basis[x_index]`.
pub fn ad_action(spec: &LieAlgebraSpec, x_index: usize, theta: &InvariantTensor) -> InvariantTensor {
    let mut out = InvariantTensor::zero(theta.k);
    for (idx, c) in theta.terms() {
        for p in 0..theta.k {
            for (b, v) in spec.bracket(x_index, idx[p]).iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut j = idx.clone();
                j[p] = b;
                out.add_term(j, &(c * v));
            }
        }
    }
    out
}

/// Whether `ad_x θ = 0` for every basis element `x`.
pub fn is_ad_invariant(spec: &LieAlgebraSpec, theta: &InvariantTensor) -> bool {
    (0..spec.dim()).all(|x| ad_action(spec, x, theta).is_empty())
}

/// `(P_τ, Q_τ)` for `τ = (r s)`, 1-based, at pairwise distinct points:
/// `P_τ = (t - p_r + 1) · prod_{d≠r} (t - p_d)/(p_r - p_d)` and likewise `Q_τ`
/// with `s`.
pub fn schur_weyl_polys(tau: (usize, usize), points: &[Rat]) -> Result<(Poly, Poly)> {
    let (r, s) = tau;
    let k = points.len();
    if !(1 <= r && r < s && s <= k) {
        return Err(Error::Parse(format!("transposition ({r} {s}) needs 1 <= r < s <= {k}")));
    }
    ensure_distinct(points)?;
    let build = |r: usize| -> Poly {
        let pr = &points[r - 1];
        let mut p = Poly::new(vec![Rat::one() - pr, Rat::one()]);
        for (d, pd) in points.iter().enumerate() {
            if d != r - 1 {
                let inv = (pr - pd).recip().expect("distinct points");
                p = &p * &Poly::linear_root(pd).scale(&inv);
            }
        }
        p
    };
    Ok((build(r), build(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_lie_algebra;

    #[test]
    fn permutation_basics() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(0).len(), 1);
        let c = Permutation::cycle(3);
        assert_eq!(c.cycle_notation(), "(1 2 3)");
        assert_eq!(c.compose(&c).compose(&c), Permutation::identity(3));
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::transposition(3, 2, 2).is_err());
    }

    #[test]
    fn parse_cycle_notation() {
        let p = Permutation::parse_cycles("(1 2)(3)", 3).unwrap();
        assert_eq!(p, Permutation::transposition(3, 1, 2).unwrap());
        let q = Permutation::parse_cycles("(1,3,2)", 3).unwrap();
        assert_eq!(q.images(), &[2, 0, 1]);
        assert_eq!(Permutation::parse_cycles(&q.cycle_notation(), 3).unwrap(), q);
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
    }

    #[test]
    fn place_permutation_is_homomorphism() {
        let perms = Permutation::all(3);
        for a in &perms {
            for b in &perms {
                let lhs = &place_permutation_matrix(a, 2) * &place_permutation_matrix(b, 2);
                assert_eq!(lhs, place_permutation_matrix(&a.compose(b), 2));
            }
        }
    }

    #[test]
    fn casimir_term_counts() {
        let gl2 = build_lie_algebra(Family::Gl, 2).unwrap();
        assert_eq!(casimir_tensor(&gl2).len(), 4);
        let sp2 = build_lie_algebra(Family::Sp, 1).unwrap();
        assert_eq!(casimir_tensor(&sp2).len(), 3);
        let so3 = build_lie_algebra(Family::So, 3).unwrap();
        let om = casimir_tensor(&so3);
        assert_eq!(om.len(), 3);
        assert!(om.terms().all(|(idx, c)| idx[0] == idx[1] && c == &Rat::new(-1, 2)));
    }

    #[test]
    fn gl_theta_examples() {
        let n = 2;
        let t1 = theta_sigma_gl(&Permutation::identity(1), n);
        assert_eq!(
            t1,
            InvariantTensor::from_terms(1, [(Rat::one(), vec![0]), (Rat::one(), vec![3])])
        );
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let gl2 = build_lie_algebra(Family::Gl, 2).unwrap();
        assert_eq!(theta_sigma_gl(&swap, n), casimir_tensor(&gl2));
        assert_eq!(theta_cycle_gl(2, n), casimir_tensor(&gl2));
        assert_eq!(theta_sigma_gl(&Permutation::identity(2), n), t1.tensor(&t1));
        let c3 = theta_cycle_gl(3, 2);
        assert_eq!(c3.len(), 8);
        // E_{i1,i2} ⊗ E_{i2,i3} ⊗ E_{i3,i1}
        assert_eq!(c3.coeff(&[1, 2, 0]), Rat::one()); // E12 ⊗ E21 ⊗ E11
        assert_eq!(theta_sigma_gl(&Permutation::cycle(3), 3).len(), 27);
    }

    #[test]
    fn sp_and_so_low_degree_vanish() {
        let sp = build_lie_algebra(Family::Sp, 2).unwrap();
        for sigma in Permutation::all(2) {
            assert!(theta_sigma_sp(&sp, &sigma).unwrap().is_empty());
        }
        let so = build_lie_algebra(Family::So, 4).unwrap();
        for sigma in Permutation::all(2) {
            assert!(psi_sigma_so(&so, &sigma).unwrap().is_empty());
        }
    }

    #[test]
    fn explicit_tensors_are_invariant() {
        let gl3 = build_lie_algebra(Family::Gl, 3).unwrap();
        assert!(is_ad_invariant(&gl3, &casimir_tensor(&gl3)));
        for sigma in Permutation::all(3) {
            assert!(is_ad_invariant(&gl3, &theta_sigma_gl(&sigma, 3)));
        }
        let probe = InvariantTensor::from_terms(2, [(Rat::one(), vec![1, 1])]);
        assert!(!is_ad_invariant(&gl3, &probe));
        for (family, n) in [(Family::Sp, 1), (Family::Sp, 2), (Family::So, 3), (Family::So, 4)] {
            let g = build_lie_algebra(family, n).unwrap();
            assert!(is_ad_invariant(&g, &casimir_tensor(&g)));
            for k in 1..=3 {
                for (_, t) in fft_tensors(&g, k).unwrap() {
                    assert!(is_ad_invariant(&g, &t), "{family}{n} k={k}");
                }
            }
        }
    }

    #[test]
    fn degree_two_pairing_tensor_is_casimir_multiple() {
        for (family, n) in [(Family::Sp, 1), (Family::Sp, 2), (Family::So, 3)] {
            let g = build_lie_algebra(family, n).unwrap();
            let fam = fft_tensors(&g, 2).unwrap();
            assert!(!fam.is_empty());
            let om = casimir_tensor(&g);
            let (idx, c) = om.terms().next().unwrap();
            for (_, t) in fam {
                let ratio = &t.coeff(idx) / c;
                assert_eq!(t, om.scale(&ratio));
            }
        }
    }

    #[test]
    fn schur_weyl_polys_examples() {
        let pts = [Rat::int(0), Rat::int(1)];
        let (p, q) = schur_weyl_polys((1, 2), &pts).unwrap();
        assert_eq!(p, Poly::from_ints(&[1, 0, -1]));
        assert_eq!(q, Poly::from_ints(&[0, 0, 1]));
        let pts3 = [Rat::int(0), Rat::int(1), Rat::int(2)];
        let (p, _) = schur_weyl_polys((1, 3), &pts3).unwrap();
        assert_eq!(p.eval(&pts3[0]), Rat::one());
        assert!(p.eval(&pts3[1]).is_zero() && p.eval(&pts3[2]).is_zero());
        assert_eq!(
            schur_weyl_polys((1, 2), &[Rat::int(3), Rat::int(3)]),
            Err(Error::RepeatedPoints)
        );
        assert!(schur_weyl_polys((2, 1), &pts).is_err());
    }

    #[test]
    fn pairing_key_identifies_relabelings() {
        // swapping whole pairs (positions 1,2 <-> 3,4) renames summation variables
        let a = Permutation::from_one_based(&[1, 3, 2, 4]).unwrap();
        let b = Permutation::from_one_based(&[3, 1, 4, 2]).unwrap();
        assert_eq!(pairing_key(&a, true), pairing_key(&b, true));
        let sp = build_lie_algebra(Family::Sp, 1).unwrap();
        assert_eq!(theta_sigma_sp(&sp, &a).unwrap(), theta_sigma_sp(&sp, &b).unwrap());
        let so = build_lie_algebra(Family::So, 3).unwrap();
        assert_eq!(psi_sigma_so(&so, &a).unwrap(), psi_sigma_so(&so, &b).unwrap());
    }
}
