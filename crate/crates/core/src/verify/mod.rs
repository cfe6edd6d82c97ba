//! Exact pass/fail checks on invariant tensors and their current operators.

pub mod suite;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::currents::{
    current_algebra_commutant_dimension, current_operator_matrix, current_operator_matrix_cached, degree_tuples,
    theta_monomial_operator, theta_operator, EvaluationModule, InvariantTensor, Letter,
};
use crate::error::{Error, Result};
use crate::invariants::{
    ad_action, casimir_tensor, fft_tensors, place_permutation_matrix, schur_weyl_polys, theta_cycle_gl, theta_sigma_gl,
    Permutation,
};
use crate::liealg::{Family, LieAlgebraSpec};
use crate::linalg::{algebra_closure, Mat, RowEchelon, SparseMat, SubspaceCoords};
use crate::poly::{ensure_distinct, Poly};
use crate::rat::Rat;
use crate::repbuild::{self, casimir_eigenvalue, isotypic_decompose, module_for_weight, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

/// Outcome of one check. `expected` and `actual` hold exact rationals or
/// integer dimensions rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub runtime_ms: u64,
}

impl CheckReport {
    fn finish(
        name: &str,
        parameters: BTreeMap<String, String>,
        ok: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
        start: Instant,
    ) -> Self {
        CheckReport {
            check_name: name.to_string(),
            parameters,
            status: Status::from_bool(ok),
            expected: expected.into(),
            actual: actual.into(),
            runtime_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    /// Inverts the status of a check whose failure is the predicted outcome.
    pub fn expecting_failure(mut self) -> Self {
        self.status = Status::from_bool(!self.passed());
        self.parameters.insert("expectation".into(), "fail".into());
        self
    }

    pub fn with_param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }
}

pub fn join_rats(xs: &[Rat]) -> String {
    xs.iter().map(Rat::to_string).collect::<Vec<_>>().join(",")
}

pub fn join_weights(ws: &[Weight]) -> String {
    ws.iter()
        .map(|w| w.0.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn spec_params(spec: &LieAlgebraSpec) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("family".to_string(), spec.family.to_string()),
        ("n".to_string(), spec.n.to_string()),
    ])
}

fn module_params(em: &EvaluationModule) -> BTreeMap<String, String> {
    let mut p = spec_params(em.spec());
    if em.weights.is_empty() {
        let dims: Vec<String> = em.factors.iter().map(|f| f.dim.to_string()).collect();
        p.insert("factor_dims".into(), dims.join(","));
    } else {
        p.insert("weights".into(), join_weights(&em.weights));
    }
    p.insert("points".into(), join_rats(&em.points));
    p
}

fn describe_polys(polys: &[Poly]) -> String {
    polys.iter().map(|p| format!("[{p}]")).collect::<Vec<_>>().join(" ")
}

/// Passes iff `ad_y θ = 0` for every basis element `y`.
pub fn check_ad_invariance(theta: &InvariantTensor, spec: &LieAlgebraSpec) -> CheckReport {
    let start = Instant::now();
    let surviving: usize = (0..spec.dim()).map(|y| ad_action(spec, y, theta).len()).sum();
    let mut params = spec_params(spec);
    params.insert("k".into(), theta.k.to_string());
    CheckReport::finish(
        "ad-invariance",
        params,
        surviving == 0,
        "0",
        surviving.to_string(),
        start,
    )
}

/// Passes iff `θ(P_1, …, P_k)` commutes with every `y(1)` on the module.
/// `actual` counts the basis elements `y` with a nonzero commutator.
pub fn check_commutant(theta: &InvariantTensor, polys: &[Poly], em: &EvaluationModule) -> Result<CheckReport> {
    let start = Instant::now();
    let op = current_operator_matrix(&theta_operator(theta, polys)?, em);
    let bad = em
        .carrier
        .actions
        .iter()
        .filter(|y| !y.commutator(&op).is_zero())
        .count();
    let mut params = module_params(em);
    params.insert("k".into(), theta.k.to_string());
    params.insert("polys".into(), describe_polys(polys));
    Ok(CheckReport::finish(
        "commutant",
        params,
        bad == 0,
        "0",
        bad.to_string(),
        start,
    ))
}

fn render_scalars(entries: &[(Weight, Option<Rat>)]) -> String {
    entries
        .iter()
        .map(|(mu, c)| match c {
            Some(c) => format!("{mu}: {c}"),
            None => format!("{mu}: not scalar"),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// The scalar `w1 z1 C_{λ1} + w2 z2 C_{λ2} + (w1 z2 + w2 z1)/2 (C_μ - C_{λ1} - C_{λ2})`.
pub fn casimir_formula_scalar(w: [&Rat; 2], z: [&Rat; 2], c_lambda: [&Rat; 2], c_mu: &Rat) -> Rat {
    let cross = (w[0] * z[1] + w[1] * z[0]) * Rat::new(1, 2);
    w[0] * z[0] * c_lambda[0] + w[1] * z[1] * c_lambda[1] + cross * (c_mu - c_lambda[0] - c_lambda[1])
}

/// `Ω(P, Q)` on each isotypic component of a two-factor module against the
/// closed-form scalar.
pub fn check_casimir_formula(em: &EvaluationModule, p: &Poly, q: &Poly) -> Result<CheckReport> {
    let start = Instant::now();
    if em.d() != 2 {
        return Err(Error::Arity {
            expected: 2,
            found: em.d(),
        });
    }
    em.require_distinct_points()?;
    let spec = em.carrier.spec.clone();
    let c_lambda = [casimir_eigenvalue(&em.factors[0])?, casimir_eigenvalue(&em.factors[1])?];
    let w = [p.eval(&em.points[0]), p.eval(&em.points[1])];
    let z = [q.eval(&em.points[0]), q.eval(&em.points[1])];
    let op = current_operator_matrix(&theta_operator(&casimir_tensor(&spec), &[p.clone(), q.clone()])?, em);
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for comp in isotypic_decompose(&em.carrier)? {
        let c_mu = casimir_eigenvalue(&module_for_weight(&spec, &comp.mu)?)?;
        let scalar = casimir_formula_scalar([&w[0], &w[1]], [&z[0], &z[1]], [&c_lambda[0], &c_lambda[1]], &c_mu);
        expected.push((comp.mu.clone(), Some(scalar)));
        let restricted = SubspaceCoords::new(comp.component_basis.clone())?.restrict(&op)?;
        actual.push((comp.mu, restricted.as_scalar()));
    }
    let ok = expected == actual;
    let mut params = module_params(em);
    params.insert("polys".into(), describe_polys(&[p.clone(), q.clone()]));
    Ok(CheckReport::finish(
        "casimir",
        params,
        ok,
        render_scalars(&expected),
        render_scalars(&actual),
        start,
    ))
}

/// Image of `sum_{i,j} E_{ij}(P_τ) E_{ji}(Q_τ)` on `V^{⊗k}`, `V = ℚ^n`.
pub fn schur_weyl_image(tau: (usize, usize), n: usize, points: &[Rat]) -> Result<Mat> {
    let (p, q) = schur_weyl_polys(tau, points)?;
    let spec = crate::liealg::build_lie_algebra(Family::Gl, n)?;
    let em = EvaluationModule::standard_power(&spec, points.to_vec())?;
    let omega = theta_sigma_gl(&Permutation::transposition(2, 1, 2)?, n);
    Ok(current_operator_matrix(&theta_operator(&omega, &[p, q])?, &em))
}

fn mismatches(a: &Mat, b: &Mat) -> usize {
    a.entries().iter().zip(b.entries()).filter(|(x, y)| x != y).count()
}

/// The current-algebra preimage of `τ = (r s)` acts on `V^{⊗k}` as `τ`.
pub fn check_schur_weyl(tau: (usize, usize), n: usize, k: usize, points: &[Rat]) -> Result<CheckReport> {
    let start = Instant::now();
    if points.len() != k {
        return Err(Error::Arity {
            expected: k,
            found: points.len(),
        });
    }
    let image = schur_weyl_image(tau, n, points)?;
    let target = place_permutation_matrix(&Permutation::transposition(k, tau.0, tau.1)?, n);
    let diff = mismatches(&image, &target);
    let params = BTreeMap::from([
        ("family".to_string(), "gl".to_string()),
        ("n".to_string(), n.to_string()),
        ("k".to_string(), k.to_string()),
        ("points".to_string(), join_rats(points)),
        ("tau".to_string(), format!("({} {})", tau.0, tau.1)),
    ]);
    Ok(CheckReport::finish(
        "schur-weyl",
        params,
        diff == 0,
        "0 mismatched entries",
        format!("{diff} mismatched entries"),
        start,
    ))
}

/// For every ordered pair of transpositions, the product of their preimage
/// images equals the matrix of the composed permutation.
pub fn check_schur_weyl_products(n: usize, k: usize, points: &[Rat]) -> Result<CheckReport> {
    let start = Instant::now();
    if points.len() != k {
        return Err(Error::Arity {
            expected: k,
            found: points.len(),
        });
    }
    let taus: Vec<(usize, usize)> = (1..=k).flat_map(|r| (r + 1..=k).map(move |s| (r, s))).collect();
    let images = taus
        .iter()
        .map(|&t| schur_weyl_image(t, n, points))
        .collect::<Result<Vec<_>>>()?;
    let mut good = 0;
    for (a, ia) in taus.iter().zip(&images) {
        for (b, ib) in taus.iter().zip(&images) {
            let composed = Permutation::transposition(k, a.0, a.1)?.compose(&Permutation::transposition(k, b.0, b.1)?);
            if (ia * ib) == place_permutation_matrix(&composed, n) {
                good += 1;
            }
        }
    }
    let total = taus.len() * taus.len();
    let params = BTreeMap::from([
        ("family".to_string(), "gl".to_string()),
        ("n".to_string(), n.to_string()),
        ("k".to_string(), k.to_string()),
        ("points".to_string(), join_rats(points)),
    ]);
    Ok(CheckReport::finish(
        "schur-weyl-products",
        params,
        good == total,
        format!("{total} products"),
        format!("{good} products"),
        start,
    ))
}

/// Which invariant tensors feed the span and irreducibility checks: every
/// spanning family member of tensor degree `0..=max_tensor_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    pub max_tensor_degree: usize,
}

impl GeneratorFamily {
    pub fn new(max_tensor_degree: usize) -> Self {
        GeneratorFamily { max_tensor_degree }
    }

    /// With `m` the total number of boxes of the factor weights (the number
    /// of factors when weights are unknown): degree `m` for gl, `2m` for sp
    /// and so, whose tensors of degree `k` come from pairings of `2k` points.
    pub fn default_for(em: &EvaluationModule) -> Self {
        let boxes = if em.weights.is_empty() {
            em.d()
        } else {
            em.weights.iter().map(|w| w.size().unsigned_abs() as usize).sum()
        };
        let max_tensor_degree = match em.spec().family {
            Family::Gl => boxes,
            Family::Sp | Family::So => 2 * boxes,
        };
        GeneratorFamily { max_tensor_degree }
    }

    /// A linearly independent subfamily with the same span, per degree.
    pub fn tensors(&self, spec: &LieAlgebraSpec) -> Result<Vec<(String, InvariantTensor)>> {
        let mut out = Vec::new();
        for k in 0..=self.max_tensor_degree {
            out.extend(independent(fft_tensors(spec, k)?, spec.dim(), k));
        }
        Ok(out)
    }
}

fn independent(tensors: Vec<(String, InvariantTensor)>, dim: usize, k: usize) -> Vec<(String, InvariantTensor)> {
    let flat = |idx: &[usize]| idx.iter().fold(0, |acc, &i| acc * dim + i);
    let mut ech = RowEchelon::new(dim.pow(k as u32));
    tensors
        .into_iter()
        .filter(|(_, t)| {
            let v: Vec<(usize, Rat)> = t.terms().map(|(i, c)| (flat(i), c.clone())).collect();
            ech.insert_sparse(&v)
        })
        .collect()
}

/// Matrices of `θ(t^{n_1}, …, t^{n_k})` for every tensor of the family and
/// every degree tuple with entries `<= degree_cap`.
pub fn generator_images(em: &EvaluationModule, family: &GeneratorFamily, degree_cap: usize) -> Result<Vec<Mat>> {
    let mut cache: HashMap<Letter, SparseMat> = HashMap::new();
    let mut out = Vec::new();
    for (_, t) in family.tensors(em.spec())? {
        for degrees in degree_tuples(t.k, degree_cap) {
            let op = theta_monomial_operator(&t, &degrees)?;
            out.push(current_operator_matrix_cached(&op, em, &mut cache));
        }
    }
    Ok(out)
}

fn span_of(images: &[Mat], dim: usize) -> usize {
    let mut ech = RowEchelon::new(dim * dim);
    for m in images {
        ech.insert(m.entries());
    }
    ech.rank()
}

/// The span of the generator images against `dim End_g(W)`.
pub fn check_span_surjectivity(
    em: &EvaluationModule,
    degree_cap: usize,
    family: &GeneratorFamily,
) -> Result<CheckReport> {
    let start = Instant::now();
    em.require_distinct_points()?;
    let expected = repbuild::commutant_dimension(&em.carrier)?;
    let images = generator_images(em, family, degree_cap)?;
    let actual = span_of(&images, em.dim());
    let mut params = module_params(em);
    params.insert("degree_cap".into(), degree_cap.to_string());
    params.insert("max_tensor_degree".into(), family.max_tensor_degree.to_string());
    Ok(CheckReport::finish(
        "span",
        params,
        expected == actual,
        expected.to_string(),
        actual.to_string(),
        start,
    ))
}

/// Span dimensions for degree caps `0..=d`; passes iff they never decrease
/// and the value at `d` equals the value at `d - 1`.
pub fn check_span_losslessness(em: &EvaluationModule, family: &GeneratorFamily) -> Result<CheckReport> {
    let start = Instant::now();
    em.require_distinct_points()?;
    let dims = (0..=em.d())
        .map(|cap| Ok(span_of(&generator_images(em, family, cap)?, em.dim())))
        .collect::<Result<Vec<usize>>>()?;
    let monotone = dims.windows(2).all(|w| w[0] <= w[1]);
    let last = dims[dims.len() - 1];
    let at_default = dims[em.default_degree_cap()];
    let render = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut params = module_params(em);
    params.insert("max_tensor_degree".into(), family.max_tensor_degree.to_string());
    params.insert("span_by_cap".into(), render(&dims));
    Ok(CheckReport::finish(
        "span-losslessness",
        params,
        monotone && last == at_default,
        last.to_string(),
        at_default.to_string(),
        start,
    ))
}

/// For each isotypic component, the algebra generated by the generator images
/// restricted to `W[μ]^+` must be all of `End(W[μ]^+)`. Coincident points are
/// reported as a failure (the hypothesis is violated) with the closure
/// dimensions still recorded.
pub fn check_isotypic_irreducibility(
    em: &EvaluationModule,
    degree_cap: usize,
    family: &GeneratorFamily,
) -> Result<CheckReport> {
    let start = Instant::now();
    let images = generator_images(em, family, degree_cap)?;
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for comp in isotypic_decompose(&em.carrier)? {
        let hw = SubspaceCoords::new(comp.hwv_basis.clone())?;
        let restricted = images.iter().map(|m| hw.restrict(m)).collect::<Result<Vec<_>>>()?;
        let closure = algebra_closure(&restricted, comp.multiplicity)?;
        expected.push(format!("{}: {}", comp.mu, comp.multiplicity * comp.multiplicity));
        actual.push(format!("{}: {}", comp.mu, closure.len()));
    }
    let distinct = em.points_distinct();
    if !distinct {
        actual.insert(0, "points not distinct".to_string());
    }
    let mut params = module_params(em);
    params.insert("degree_cap".into(), degree_cap.to_string());
    params.insert("max_tensor_degree".into(), family.max_tensor_degree.to_string());
    params.insert("points_distinct".into(), distinct.to_string());
    Ok(CheckReport::finish(
        "irreducibility",
        params,
        distinct && expected == actual,
        expected.join("; "),
        actual.join("; "),
        start,
    ))
}

fn cycle_images(em: &EvaluationModule, max_cycle: usize, degree_cap: usize, sorted_only: bool) -> Result<Vec<Mat>> {
    let n = em.spec().n;
    let mut cache = HashMap::new();
    let mut out = Vec::new();
    for j in 1..=max_cycle {
        let theta = theta_cycle_gl(j, n);
        for degrees in degree_tuples(j, degree_cap) {
            if sorted_only && degrees.windows(2).any(|w| w[0] > w[1]) {
                continue;
            }
            let op = theta_monomial_operator(&theta, &degrees)?;
            out.push(current_operator_matrix_cached(&op, em, &mut cache));
        }
    }
    Ok(out)
}

/// The algebra generated by the cycle operators `θ_{σ_j}(n_1, …, n_j)`,
/// `j <= d`, against `dim End_g(W)`. The dimension reached with sorted degree
/// tuples only is recorded as a parameter.
pub fn check_cycle_generation(em: &EvaluationModule, degree_cap: usize) -> Result<CheckReport> {
    let start = Instant::now();
    if em.spec().family != Family::Gl {
        return Err(Error::UnsupportedFamily(em.spec().family));
    }
    em.require_distinct_points()?;
    let expected = repbuild::commutant_dimension(&em.carrier)?;
    let max_cycle = em.d();
    let full = algebra_closure(&cycle_images(em, max_cycle, degree_cap, false)?, em.dim())?.len();
    let sorted = algebra_closure(&cycle_images(em, max_cycle, degree_cap, true)?, em.dim())?.len();
    let mut params = module_params(em);
    params.insert("degree_cap".into(), degree_cap.to_string());
    params.insert("sorted_tuple_closure_dim".into(), sorted.to_string());
    Ok(CheckReport::finish(
        "cycle-generation",
        params,
        full == expected,
        expected.to_string(),
        full.to_string(),
        start,
    ))
}

/// The commutant of all currents `x(t^m)`, `m <= degree_cap`, is the scalars.
pub fn check_evaluation_irreducibility(em: &EvaluationModule, degree_cap: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let actual = current_algebra_commutant_dimension(em, degree_cap)?;
    let mut params = module_params(em);
    params.insert("degree_cap".into(), degree_cap.to_string());
    Ok(CheckReport::finish(
        "evaluation-irreducibility",
        params,
        actual == 1,
        "1",
        actual.to_string(),
        start,
    ))
}

/// Points `0, 1, …, d - 1`.
pub fn integer_points(d: usize) -> Vec<Rat> {
    (0..d).map(Rat::from).collect()
}

/// Rejects coincident points with the shared diagnostic.
pub fn require_distinct(points: &[Rat]) -> Result<()> {
    ensure_distinct(points)
}
