//! Finite-dimensional modules: irreducibles carved out of tensor powers of the
//! standard module by highest-weight generation, tensor products, isotypic
//! decomposition and commutants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::{Family, LieAlgebraSpec};
use crate::linalg::{self, kernel_basis, Mat, RowEchelon, SparseMat, SubspaceCoords};
use crate::rat::Rat;

/// Default hard cap on carrier dimensions, overridable via `REPCUR_MAX_DIM`.
pub const DEFAULT_MAX_DIM: usize = 4096;

pub fn max_carrier_dim() -> usize {
    std::env::var("REPCUR_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

/// A weight in ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coordinates; the tensor degree for polynomial gl-weights.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Non-increasing (gl), additionally non-negative (sp). so has no
    /// rational weights in this realization.
    pub fn is_dominant(&self, family: Family) -> bool {
        let nonincreasing = self.0.windows(2).all(|w| w[0] >= w[1]);
        match family {
            Family::Gl => nonincreasing,
            Family::Sp => nonincreasing && self.0.iter().all(|&c| c >= 0),
            Family::So => false,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        t.split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("malformed weight coordinate '{}'", c.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A module over a matrix Lie algebra: one action matrix per basis element.
#[derive(Clone, Debug)]
pub struct GModule {
    pub spec: Arc<LieAlgebraSpec>,
    pub dim: usize,
    pub actions: Vec<Mat>,
}

impl GModule {
    pub fn new(spec: Arc<LieAlgebraSpec>, actions: Vec<Mat>) -> Result<Self> {
        if actions.len() != spec.dim() {
            return Err(Error::Arity {
                expected: spec.dim(),
                found: actions.len(),
            });
        }
        let dim = actions.first().map_or(1, Mat::rows);
        for a in &actions {
            if a.shape() != (dim, dim) {
                return Err(Error::Shape {
                    expected: format!("{dim}x{dim}"),
                    found: format!("{}x{}", a.rows(), a.cols()),
                });
            }
        }
        Ok(GModule { spec, dim, actions })
    }

    /// The defining representation.
    pub fn standard(spec: &Arc<LieAlgebraSpec>) -> Self {
        GModule {
            spec: spec.clone(),
            dim: spec.size,
            actions: spec.basis.clone(),
        }
    }

    /// The one-dimensional trivial module.
    pub fn trivial(spec: &Arc<LieAlgebraSpec>) -> Self {
        GModule {
            spec: spec.clone(),
            dim: 1,
            actions: vec![Mat::zeros(1, 1); spec.dim()],
        }
    }

    /// Action of the algebra element with the given basis coordinates.
    pub fn action_of(&self, coords: &[Rat]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (c, a) in coords.iter().zip(&self.actions) {
            m.axpy(c, a);
        }
        m
    }

    /// `action([x,y]) = [action(x), action(y)]` for all basis pairs.
    pub fn check_bracket(&self) -> bool {
        let d = self.spec.dim();
        (0..d).all(|i| {
            (0..d).all(|j| self.action_of(self.spec.bracket(i, j)) == self.actions[i].commutator(&self.actions[j]))
        })
    }

    /// `sum_i action(e_i) action(e^i)`
    pub fn casimir_operator(&self) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (i, a) in self.actions.iter().enumerate() {
            let dual = self.action_of(self.spec.dual_coords.row(i));
            out = &out + &(a * &dual);
        }
        out
    }

    /// Weight labels of the basis vectors when every Cartan action is diagonal.
    pub fn diagonal_weights(&self) -> Option<Vec<Vec<Rat>>> {
        let cartan = self.spec.cartan_indices.as_ref()?;
        if !cartan.iter().all(|&h| self.actions[h].is_diagonal()) {
            return None;
        }
        Some(
            (0..self.dim)
                .map(|v| cartan.iter().map(|&h| self.actions[h].get(v, v).clone()).collect())
                .collect(),
        )
    }

    /// Weight class ids of the basis vectors (see [`linalg::commutant_dimension`]).
    pub fn weight_classes(&self) -> Option<Vec<usize>> {
        let weights = self.diagonal_weights()?;
        let mut ids: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
        Some(
            weights
                .into_iter()
                .map(|w| {
                    let next = ids.len();
                    *ids.entry(w).or_insert(next)
                })
                .collect(),
        )
    }
}

/// Tensor product with Kronecker order factor-1-major.
pub fn tensor_module(factors: &[GModule]) -> Result<GModule> {
    let Some(first) = factors.first() else {
        return Err(Error::Arity { expected: 1, found: 0 });
    };
    let spec = first.spec.clone();
    if factors
        .iter()
        .any(|f| !Arc::ptr_eq(&f.spec, &spec) && f.spec.name() != spec.name())
    {
        return Err(Error::SpecMismatch);
    }
    let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
    let total: usize = dims.iter().product();
    let cap = max_carrier_dim();
    if total > cap {
        return Err(Error::DimensionCap { dim: total, cap });
    }
    let actions = (0..spec.dim())
        .map(|b| {
            let mut acc = SparseMat::zeros(total, total);
            for (i, f) in factors.iter().enumerate() {
                let left: usize = dims[..i].iter().product();
                let right: usize = dims[i + 1..].iter().product();
                acc.axpy(&Rat::one(), &SparseMat::lift(&f.actions[b], left, right));
            }
            acc.to_dense()
        })
        .collect();
    Ok(GModule {
        spec,
        dim: total,
        actions,
    })
}

/// `V^{⊗m}` for the standard module `V`; the trivial module when `m = 0`.
pub fn tensor_power(spec: &Arc<LieAlgebraSpec>, m: usize) -> Result<GModule> {
    if m == 0 {
        return Ok(GModule::trivial(spec));
    }
    tensor_module(&vec![GModule::standard(spec); m])
}

/// Joint eigenspaces of the Cartan actions, keyed by weight.
pub fn weight_spaces(w: &GModule) -> Result<Vec<(Weight, Mat)>> {
    let cartan = w.spec.cartan()?.to_vec();
    let mut out: BTreeMap<Weight, Vec<Vec<Rat>>> = BTreeMap::new();
    if let Some(diag) = w.diagonal_weights() {
        for (v, wt) in diag.into_iter().enumerate() {
            let coords = wt
                .iter()
                .map(|c| c.to_i64().ok_or(Error::BadWeights))
                .collect::<Result<Vec<_>>>()?;
            let mut e = vec![Rat::zero(); w.dim];
            e[v] = Rat::one();
            out.entry(Weight(coords)).or_default().push(e);
        }
    } else {
        // Integer eigenvalues of each Cartan action lie within its max row sum.
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for &h in &cartan {
            let a = &w.actions[h];
            let bound = (0..a.rows())
                .map(|i| a.row(i).iter().map(Rat::abs).sum::<Rat>())
                .max()
                .unwrap_or_else(Rat::zero)
                .ceil_i64()
                .ok_or(Error::BadWeights)?;
            let eig: Vec<i64> = (-bound..=bound)
                .filter(|&c| linalg::rank(&(a - &Mat::scalar(w.dim, &Rat::int(c)))) < w.dim)
                .collect();
            candidates.push(eig);
        }
        let mut total = 0;
        for mu in cartesian(&candidates) {
            let blocks: Vec<Mat> = cartan
                .iter()
                .zip(&mu)
                .map(|(&h, &c)| &w.actions[h] - &Mat::scalar(w.dim, &Rat::int(c)))
                .collect();
            let k = kernel_basis(&Mat::vstack(&blocks)?);
            if !k.is_empty() {
                total += k.len();
                out.insert(Weight(mu), k);
            }
        }
        if total != w.dim {
            return Err(Error::BadWeights);
        }
    }
    Ok(out
        .into_iter()
        .map(|(mu, vs)| (mu, Mat::from_cols(w.dim, &vs)))
        .collect())
}

fn cartesian(sets: &[Vec<i64>]) -> Vec<Vec<i64>> {
    sets.iter().fold(vec![Vec::new()], |acc, set| {
        acc.iter()
            .flat_map(|prefix| {
                set.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect()
    })
}

/// Vectors of the given weight space killed by every raising action.
fn highest_weight_vectors(w: &GModule, space: &Mat) -> Result<Vec<Vec<Rat>>> {
    let raising = w.spec.raising()?;
    let coeffs = if raising.is_empty() {
        (0..space.cols())
            .map(|j| {
                let mut e = vec![Rat::zero(); space.cols()];
                e[j] = Rat::one();
                e
            })
            .collect()
    } else {
        let blocks: Vec<Mat> = raising.iter().map(|&r| &w.actions[r] * space).collect();
        kernel_basis(&Mat::vstack(&blocks)?)
    };
    Ok(coeffs.iter().map(|c| space.mul_vec(c)).collect())
}

/// Span of everything reachable from `seeds` under the lowering actions.
/// Basis vectors are kept as produced, so weight vectors stay weight vectors.
pub fn lowering_closure(w: &GModule, seeds: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let lowering = w.spec.lowering()?;
    let mut ech = RowEchelon::new(w.dim);
    let mut basis = Vec::new();
    let mut frontier = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            basis.push(s.clone());
            frontier.push(s.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for &l in lowering {
                let u = w.actions[l].mul_vec(v);
                if ech.insert(&u) {
                    basis.push(u.clone());
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}

/// The irreducible module of highest weight `lambda`, realized inside the
/// `m`-th tensor power of the standard module.
pub fn build_irrep(spec: &Arc<LieAlgebraSpec>, lambda: &Weight, m: usize) -> Result<GModule> {
    if spec.family == Family::So {
        return Err(Error::UnsupportedFamily(Family::So));
    }
    if lambda.0.len() != spec.n {
        return Err(Error::Arity {
            expected: spec.n,
            found: lambda.0.len(),
        });
    }
    if !lambda.is_dominant(spec.family) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let not_realizable = || Error::NotRealizable {
        weight: lambda.0.clone(),
        m,
    };
    let size = lambda.size();
    let realizable = match spec.family {
        Family::Gl => lambda.0.iter().all(|&c| c >= 0) && size == m as i64,
        _ => size <= m as i64 && (m as i64 - size) % 2 == 0,
    };
    if !realizable {
        return Err(not_realizable());
    }
    let ambient = tensor_power(spec, m)?;
    let space = weight_spaces(&ambient)?
        .into_iter()
        .find(|(mu, _)| mu == lambda)
        .map(|(_, s)| s)
        .ok_or_else(not_realizable)?;
    let hw = highest_weight_vectors(&ambient, &space)?;
    let first = hw.into_iter().next().ok_or_else(not_realizable)?;
    let cols = lowering_closure(&ambient, &[first])?;
    let sub = SubspaceCoords::new(Mat::from_cols(ambient.dim, &cols))?;
    let actions = ambient
        .actions
        .iter()
        .map(|a| sub.restrict(a))
        .collect::<Result<Vec<_>>>()?;
    GModule::new(spec.clone(), actions)
}

/// The irreducible module `V(λ)`, realized in the smallest tensor power that
/// contains it. For so(n) only the standard module `λ = ε_1` is available.
pub fn module_for_weight(spec: &Arc<LieAlgebraSpec>, lambda: &Weight) -> Result<GModule> {
    if lambda.0.len() != spec.n {
        return Err(Error::Arity {
            expected: spec.n,
            found: lambda.0.len(),
        });
    }
    let standard = lambda.0.iter().enumerate().all(|(i, &c)| c == i64::from(i == 0));
    if standard {
        return Ok(GModule::standard(spec));
    }
    if spec.family != Family::So && !lambda.is_dominant(spec.family) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    if spec.family == Family::Gl && lambda.0.iter().any(|&c| c < 0) {
        return Err(Error::NonPolynomial(lambda.0.clone()));
    }
    let m = usize::try_from(lambda.size()).map_err(|_| Error::NotRealizable {
        weight: lambda.0.clone(),
        m: 0,
    })?;
    build_irrep(spec, lambda, m)
}

/// One isotypic component `W[μ]` with its highest-weight-vector space `W[μ]^+`.
#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    pub mu: Weight,
    pub multiplicity: usize,
    /// Columns form a basis of `W[μ]^+`.
    pub hwv_basis: Mat,
    /// Columns span `W[μ]`.
    pub component_basis: Mat,
}

impl IsotypicComponent {
    pub fn irrep_dim(&self) -> usize {
        self.component_basis.cols() / self.multiplicity
    }
}

/// Isotypic components ordered by μ lexicographically descending.
pub fn isotypic_decompose(w: &GModule) -> Result<Vec<IsotypicComponent>> {
    let family = w.spec.family;
    if family == Family::So {
        return Err(Error::UnsupportedFamily(family));
    }
    let mut comps = Vec::new();
    for (mu, space) in weight_spaces(w)?.into_iter().rev() {
        if !mu.is_dominant(family) {
            continue;
        }
        let hw = highest_weight_vectors(w, &space)?;
        if hw.is_empty() {
            continue;
        }
        let span = lowering_closure(w, &hw)?;
        comps.push(IsotypicComponent {
            mu,
            multiplicity: hw.len(),
            hwv_basis: Mat::from_cols(w.dim, &hw),
            component_basis: Mat::from_cols(w.dim, &span),
        });
    }
    let mut ech = RowEchelon::new(w.dim);
    for c in &comps {
        if c.component_basis.cols() % c.multiplicity != 0 {
            return Err(Error::Decomposition {
                expected: w.dim,
                found: ech.rank(),
            });
        }
        for v in c.component_basis.columns() {
            if !ech.insert(&v) {
                return Err(Error::Decomposition {
                    expected: w.dim,
                    found: ech.rank(),
                });
            }
        }
    }
    if ech.rank() != w.dim {
        return Err(Error::Decomposition {
            expected: w.dim,
            found: ech.rank(),
        });
    }
    Ok(comps)
}

/// The scalar by which the Casimir acts on an irreducible module.
pub fn casimir_eigenvalue(irrep: &GModule) -> Result<Rat> {
    irrep.casimir_operator().as_scalar().ok_or(Error::NotScalar)
}

/// `dim End_g(W)`, from the linear system `[M, action(x)] = 0`.
pub fn commutant_dimension(w: &GModule) -> Result<usize> {
    commutant_dimension_with(w, &[])
}

/// Commutant of the g-action together with extra operators on the same carrier.
pub fn commutant_dimension_with(w: &GModule, extra: &[Mat]) -> Result<usize> {
    let classes = w.weight_classes();
    let gens: Vec<Mat> = w.actions.iter().chain(extra).cloned().collect();
    linalg::commutant_dimension(&gens, w.dim, classes.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_lie_algebra;

    fn gl(n: usize) -> Arc<LieAlgebraSpec> {
        build_lie_algebra(Family::Gl, n).unwrap()
    }

    fn wt(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn weight_parse_and_dominance() {
        assert_eq!("2,0".parse::<Weight>().unwrap(), wt(&[2, 0]));
        assert_eq!("(1, 1)".parse::<Weight>().unwrap(), wt(&[1, 1]));
        assert!("1,x".parse::<Weight>().is_err());
        assert!(!wt(&[1, 2]).is_dominant(Family::Gl));
        assert!(wt(&[0, -1]).is_dominant(Family::Gl));
        assert!(!wt(&[0, -1]).is_dominant(Family::Sp));
    }

    #[test]
    fn irreps_of_small_dimension() {
        let g = gl(2);
        assert_eq!(build_irrep(&g, &wt(&[1, 0]), 1).unwrap().dim, 2);
        assert_eq!(build_irrep(&g, &wt(&[2, 0]), 2).unwrap().dim, 3);
        assert_eq!(build_irrep(&g, &wt(&[2, 1]), 3).unwrap().dim, 2);
        let sp = build_lie_algebra(Family::Sp, 1).unwrap();
        assert_eq!(build_irrep(&sp, &wt(&[2]), 2).unwrap().dim, 3);
        assert_eq!(build_irrep(&sp, &wt(&[0]), 2).unwrap().dim, 1);
    }

    #[test]
    fn irrep_errors() {
        let g = gl(2);
        assert!(matches!(build_irrep(&g, &wt(&[1, 2]), 3), Err(Error::NotDominant(_))));
        assert!(matches!(
            build_irrep(&g, &wt(&[2, 0]), 3),
            Err(Error::NotRealizable { .. })
        ));
        // (1,1,1) needs three rows, gl(2) vectors only have two
        let g3 = gl(3);
        assert!(build_irrep(&g3, &wt(&[1, 1, 1]), 3).is_ok());
        let so = build_lie_algebra(Family::So, 3).unwrap();
        assert!(matches!(
            build_irrep(&so, &wt(&[1]), 1),
            Err(Error::UnsupportedFamily(_))
        ));
        let sp = build_lie_algebra(Family::Sp, 1).unwrap();
        assert!(matches!(
            build_irrep(&sp, &wt(&[1]), 2),
            Err(Error::NotRealizable { .. })
        ));
    }

    #[test]
    fn tensor_actions() {
        let g = gl(2);
        let v = GModule::standard(&g);
        let vv = tensor_module(&[v.clone(), v.clone()]).unwrap();
        assert_eq!(vv.dim, 4);
        let id = vv.action_of(&g.coords(&Mat::identity(2)).unwrap());
        assert_eq!(id.trace(), Rat::int(8));
        assert!(vv.check_bracket());
        let single = tensor_module(std::slice::from_ref(&v)).unwrap();
        assert_eq!(single.actions, v.actions);

        // E12 on e2⊗e2⊗e2 (index 7) hits e1⊗e2⊗e2 (3), e2⊗e1⊗e2 (5), e2⊗e2⊗e1 (6)
        let vvv = tensor_power(&g, 3).unwrap();
        let e12 = &vvv.actions[1];
        let mut e222 = vec![Rat::zero(); 8];
        e222[7] = Rat::one();
        let out = e12.mul_vec(&e222);
        let hits: Vec<usize> = (0..8).filter(|&i| !out[i].is_zero()).collect();
        assert_eq!(hits, vec![3, 5, 6]);
        assert!(hits.iter().all(|&i| out[i].is_one()));
    }

    #[test]
    fn decompositions_of_tensor_powers() {
        let mults = |w: &GModule| -> Vec<(Vec<i64>, usize)> {
            isotypic_decompose(w)
                .unwrap()
                .into_iter()
                .map(|c| (c.mu.0, c.multiplicity))
                .collect()
        };
        assert_eq!(
            mults(&tensor_power(&gl(2), 2).unwrap()),
            vec![(vec![2, 0], 1), (vec![1, 1], 1)]
        );
        assert_eq!(
            mults(&tensor_power(&gl(2), 3).unwrap()),
            vec![(vec![3, 0], 1), (vec![2, 1], 2)]
        );
        assert_eq!(
            mults(&tensor_power(&gl(3), 3).unwrap()),
            vec![(vec![3, 0, 0], 1), (vec![2, 1, 0], 2), (vec![1, 1, 1], 1)]
        );
    }

    #[test]
    fn casimir_values_gl2() {
        let g = gl(2);
        let c = |l: &[i64], m| casimir_eigenvalue(&build_irrep(&g, &wt(l), m).unwrap()).unwrap();
        assert_eq!(c(&[1, 0], 1), Rat::int(2));
        assert_eq!(c(&[2, 0], 2), Rat::int(6));
        assert_eq!(c(&[1, 1], 2), Rat::int(2));
        assert_eq!(c(&[0, 0], 0), Rat::int(0));
        assert_eq!(casimir_eigenvalue(&tensor_power(&g, 2).unwrap()), Err(Error::NotScalar));
    }

    #[test]
    fn commutant_dimensions() {
        let g = gl(2);
        assert_eq!(
            commutant_dimension(&build_irrep(&g, &wt(&[2, 0]), 2).unwrap()).unwrap(),
            1
        );
        assert_eq!(commutant_dimension(&tensor_power(&g, 2).unwrap()).unwrap(), 2);
        assert_eq!(commutant_dimension(&tensor_power(&g, 3).unwrap()).unwrap(), 5);
        let so = build_lie_algebra(Family::So, 3).unwrap();
        // 3 ⊗ 3 = 5 ⊕ 3 ⊕ 1 for so(3)
        assert_eq!(commutant_dimension(&tensor_power(&so, 2).unwrap()).unwrap(), 3);
    }

    #[test]
    fn non_diagonal_cartan_uses_general_weight_search() {
        let g = gl(2);
        let v = GModule::standard(&g);
        // conjugate by a unipotent change of basis so the Cartan is no longer diagonal
        let p = Mat::from_int_rows(&[&[1, 1], &[0, 1]]);
        let pinv = p.inverse().unwrap();
        let twisted = GModule::new(g.clone(), v.actions.iter().map(|a| &(&p * a) * &pinv).collect()).unwrap();
        assert!(twisted.diagonal_weights().is_none());
        let ws = weight_spaces(&twisted).unwrap();
        assert_eq!(
            ws.iter().map(|(mu, _)| mu.0.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 0]]
        );
        let comps = isotypic_decompose(&twisted).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].mu, wt(&[1, 0]));
    }

    #[test]
    fn negative_gl_weight_is_rejected() {
        let err = module_for_weight(&gl(2), &wt(&[0, -1])).unwrap_err();
        assert!(matches!(err, Error::NonPolynomial(_)), "{err}");
        assert_eq!(module_for_weight(&gl(2), &wt(&[2, 0])).unwrap().dim, 3);
    }
}
