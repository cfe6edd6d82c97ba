//! Evaluation modules of `g[t]` and the operators `θ(P_1, …, P_k)`.
//!
//! A current `x(P)` acts on `V(λ_1) ⊗ … ⊗ V(λ_d)` as
//! `sum_i P(p_i) · 1 ⊗ … ⊗ x ⊗ … ⊗ 1`. Words of currents are composed as
//! operators with the rightmost letter applied first.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebraSpec;
use crate::linalg::{Mat, SparseMat};
use crate::poly::{ensure_distinct, Poly};
use crate::rat::Rat;
use crate::repbuild::{self, tensor_module, GModule, Weight};

/// `V(λ_1) ⊗ … ⊗ V(λ_d)` with evaluation points `p_1, …, p_d`.
#[derive(Clone, Debug)]
pub struct EvaluationModule {
    pub factors: Vec<GModule>,
    pub points: Vec<Rat>,
    pub carrier: GModule,
    /// Highest weights of the factors when built by [`EvaluationModule::from_weights`].
    pub weights: Vec<Weight>,
    /// `lifted[i][b]` is the action of basis element `b` on factor `i` alone.
    lifted: Vec<Vec<SparseMat>>,
}

impl EvaluationModule {
    /// Points need not be distinct here; checks that rely on distinctness
    /// validate it themselves.
    pub fn new(factors: Vec<GModule>, points: Vec<Rat>) -> Result<Self> {
        if factors.len() != points.len() {
            return Err(Error::Arity {
                expected: factors.len(),
                found: points.len(),
            });
        }
        let carrier = tensor_module(&factors)?;
        let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
        let lifted = factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let left: usize = dims[..i].iter().product();
                let right: usize = dims[i + 1..].iter().product();
                f.actions.iter().map(|a| SparseMat::lift(a, left, right)).collect()
            })
            .collect();
        Ok(EvaluationModule {
            factors,
            points,
            carrier,
            weights: Vec::new(),
            lifted,
        })
    }

    /// `V(λ_1) ⊗ … ⊗ V(λ_d)` at the given points.
    pub fn from_weights(spec: &Arc<LieAlgebraSpec>, weights: &[Weight], points: Vec<Rat>) -> Result<Self> {
        let factors = weights
            .iter()
            .map(|w| repbuild::module_for_weight(spec, w))
            .collect::<Result<Vec<_>>>()?;
        let mut em = EvaluationModule::new(factors, points)?;
        em.weights = weights.to_vec();
        Ok(em)
    }

    /// `V^{⊗d}` at the given points, `d = points.len()`.
    pub fn standard_power(spec: &Arc<LieAlgebraSpec>, points: Vec<Rat>) -> Result<Self> {
        let mut eps = vec![0; spec.n];
        eps[0] = 1;
        EvaluationModule::from_weights(spec, &vec![Weight(eps); points.len()], points)
    }

    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.carrier.spec
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    /// Number of tensor factors.
    pub fn d(&self) -> usize {
        self.factors.len()
    }

    pub fn points_distinct(&self) -> bool {
        ensure_distinct(&self.points).is_ok()
    }

    pub fn require_distinct_points(&self) -> Result<()> {
        ensure_distinct(&self.points)
    }

    /// The degree cap `d - 1` past which monomials add nothing new: on `d`
    /// points every polynomial agrees with its interpolant of degree `< d`.
    pub fn default_degree_cap(&self) -> usize {
        self.d().saturating_sub(1)
    }

    /// `x_b(P)` as a sparse operator.
    pub fn current(&self, b: usize, p: &Poly) -> SparseMat {
        let mut acc = SparseMat::zeros(self.dim(), self.dim());
        for (pt, lifted) in self.points.iter().zip(&self.lifted) {
            acc.axpy(&p.eval(pt), &lifted[b]);
        }
        acc
    }

    /// `x_b(t^m)` as a sparse operator.
    pub fn current_monomial(&self, b: usize, m: usize) -> SparseMat {
        let mut acc = SparseMat::zeros(self.dim(), self.dim());
        for (pt, lifted) in self.points.iter().zip(&self.lifted) {
            acc.axpy(&pt.pow(m as u32), &lifted[b]);
        }
        acc
    }
}

/// Matrix of `x(P)` for `x` given in the defining representation.
pub fn evaluation_action(em: &EvaluationModule, x: &Mat, p: &Poly) -> Result<Mat> {
    let coords = em.spec().coords(x)?;
    Ok(evaluation_action_coords(em, &coords, p))
}

/// Matrix of `x(P)` for `x` given by basis coordinates.
pub fn evaluation_action_coords(em: &EvaluationModule, coords: &[Rat], p: &Poly) -> Mat {
    let mut out = Mat::zeros(em.dim(), em.dim());
    for (b, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        em.current(b, p).add_scaled_into(c, &mut out);
    }
    out
}

/// Matrix of `basis_b(P)`.
pub fn evaluation_action_basis(em: &EvaluationModule, b: usize, p: &Poly) -> Mat {
    em.current(b, p).to_dense()
}

/// One letter `basis_index(t^degree)` of a current word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub basis_index: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentTerm {
    pub coeff: Rat,
    pub word: Vec<Letter>,
}

/// A formal linear combination of words in the currents `x(t^m)`, an element
/// of `U(g[t])` before any relations are applied.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurrentOperator {
    pub terms: Vec<CurrentTerm>,
}

impl CurrentOperator {
    pub fn scalar(c: Rat) -> Self {
        CurrentOperator {
            terms: vec![CurrentTerm {
                coeff: c,
                word: Vec::new(),
            }],
        }
    }

    pub fn letter(basis_index: usize, degree: usize) -> Self {
        CurrentOperator {
            terms: vec![CurrentTerm {
                coeff: Rat::one(),
                word: vec![Letter { basis_index, degree }],
            }],
        }
    }

    /// `x(P)` expanded into monomials.
    pub fn current(coords: &[Rat], p: &Poly) -> Self {
        let mut terms = Vec::new();
        for (b, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (m, a) in p.monomials() {
                terms.push(CurrentTerm {
                    coeff: c * a,
                    word: vec![Letter {
                        basis_index: b,
                        degree: m,
                    }],
                });
            }
        }
        CurrentOperator { terms }
    }

    /// Noncommutative product: `self` applied after `rhs`.
    pub fn compose(&self, rhs: &CurrentOperator) -> CurrentOperator {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let mut word = a.word.clone();
                word.extend_from_slice(&b.word);
                terms.push(CurrentTerm {
                    coeff: &a.coeff * &b.coeff,
                    word,
                });
            }
        }
        CurrentOperator { terms }
    }

    pub fn plus(&self, rhs: &CurrentOperator, rhs_coeff: &Rat) -> CurrentOperator {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().map(|t| CurrentTerm {
            coeff: &t.coeff * rhs_coeff,
            word: t.word.clone(),
        }));
        CurrentOperator { terms }
    }
}

/// Matrix of a current operator on an evaluation module.
pub fn current_operator_matrix(op: &CurrentOperator, em: &EvaluationModule) -> Mat {
    let mut cache: HashMap<Letter, SparseMat> = HashMap::new();
    current_operator_matrix_cached(op, em, &mut cache)
}

pub(crate) fn current_operator_matrix_cached(
    op: &CurrentOperator,
    em: &EvaluationModule,
    cache: &mut HashMap<Letter, SparseMat>,
) -> Mat {
    let dim = em.dim();
    let mut out = Mat::zeros(dim, dim);
    for term in &op.terms {
        if term.coeff.is_zero() {
            continue;
        }
        let mut letters = term.word.iter().rev();
        let Some(&last) = letters.next() else {
            for i in 0..dim {
                out.add_at(i, i, &term.coeff);
            }
            continue;
        };
        let mut acc = cache
            .entry(last)
            .or_insert_with(|| em.current_monomial(last.basis_index, last.degree))
            .clone();
        for &l in letters {
            if acc.nnz() == 0 {
                break;
            }
            let g = cache
                .entry(l)
                .or_insert_with(|| em.current_monomial(l.basis_index, l.degree));
            acc = g.mul(&acc);
        }
        acc.add_scaled_into(&term.coeff, &mut out);
    }
    out
}

/// A tensor `sum_i c_i · basis_{i_1} ⊗ … ⊗ basis_{i_k}` in `g^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTensor {
    pub k: usize,
    terms: BTreeMap<Vec<usize>, Rat>,
}

impl InvariantTensor {
    pub fn zero(k: usize) -> Self {
        InvariantTensor {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-0 tensor `c`.
    pub fn scalar(c: Rat) -> Self {
        let mut t = InvariantTensor::zero(0);
        t.add_term(Vec::new(), &c);
        t
    }

    /// Sums duplicate index tuples and drops zero coefficients.
    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (Rat, Vec<usize>)>) -> Self {
        let mut t = InvariantTensor::zero(k);
        for (c, idx) in terms {
            t.add_term(idx, &c);
        }
        t
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: &Rat) {
        assert_eq!(idx.len(), self.k, "index tuple length must equal the tensor degree");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> Rat {
        self.terms.get(idx).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        InvariantTensor::from_terms(self.k, self.terms.iter().map(|(i, v)| (v * c, i.clone())))
    }

    pub fn tensor(&self, other: &InvariantTensor) -> Self {
        let mut out = InvariantTensor::zero(self.k + other.k);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                out.add_term(idx, &(a * b));
            }
        }
        out
    }

    /// Coefficients in the standard basis of `g^{⊗k}`, `dim^k` entries.
    pub fn to_dense(&self, dim: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim.pow(self.k as u32)];
        for (idx, c) in &self.terms {
            let flat = idx.iter().fold(0, |acc, &i| acc * dim + i);
            v[flat] = c.clone();
        }
        v
    }
}

/// `θ(P_1, …, P_k)`, each `P_j` expanded into monomials.
pub fn theta_operator(theta: &InvariantTensor, polys: &[Poly]) -> Result<CurrentOperator> {
    if polys.len() != theta.k {
        return Err(Error::Arity {
            expected: theta.k,
            found: polys.len(),
        });
    }
    let monos: Vec<Vec<(usize, &Rat)>> = polys.iter().map(|p| p.monomials().collect()).collect();
    let mut terms = Vec::new();
    for (idx, c) in theta.terms() {
        let mut partial = vec![(c.clone(), Vec::with_capacity(theta.k))];
        for (j, &b) in idx.iter().enumerate() {
            partial = partial
                .into_iter()
                .flat_map(|(coeff, word)| {
                    monos[j].iter().map(move |&(m, a)| {
                        let mut w: Vec<Letter> = word.clone();
                        w.push(Letter {
                            basis_index: b,
                            degree: m,
                        });
                        (&coeff * a, w)
                    })
                })
                .collect();
        }
        terms.extend(partial.into_iter().map(|(coeff, word)| CurrentTerm { coeff, word }));
    }
    Ok(CurrentOperator { terms })
}

/// `θ(t^{n_1}, …, t^{n_k})`
pub fn theta_monomial_operator(theta: &InvariantTensor, degrees: &[usize]) -> Result<CurrentOperator> {
    let polys: Vec<Poly> = degrees.iter().map(|&m| Poly::monomial(m)).collect();
    theta_operator(theta, &polys)
}

/// `dim` of the commutant of all `x(t^m)`, `m <= degree_cap`, on the module.
pub fn current_algebra_commutant_dimension(em: &EvaluationModule, degree_cap: usize) -> Result<usize> {
    let d = em.spec().dim();
    let extra: Vec<Mat> = (1..=degree_cap)
        .flat_map(|m| (0..d).map(move |b| (b, m)))
        .map(|(b, m)| em.current_monomial(b, m).to_dense())
        .collect();
    repbuild::commutant_dimension_with(&em.carrier, &extra)
}

/// All tuples in `{0..=cap}^k`, lexicographic.
pub fn degree_tuples(k: usize, cap: usize) -> Vec<Vec<usize>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..=cap).map(move |m| {
                    let mut t = t.clone();
                    t.push(m);
                    t
                })
            })
            .collect()
    })
}
