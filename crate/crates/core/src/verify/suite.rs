//! The full check matrix behind `verify all`, driven by a seeded generator.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::liealg::build_lie_algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// The complete matrix.
    Desk,
    /// A reduced matrix touching every check, for smoke runs.
    Quick,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Desk => "desk",
            Profile::Quick => "quick",
        })
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "desk" => Ok(Profile::Desk),
            "quick" => Ok(Profile::Quick),
            other => Err(Error::Parse(format!(
                "unknown profile '{other}' (expected desk or quick)"
            ))),
        }
    }
}

struct Knobs {
    gl_max_n: usize,
    gl_max_k: usize,
    sp_max_n: usize,
    so_max_n: usize,
    pair_max_k: usize,
    commutant_cases: usize,
    casimir_cases: usize,
    big_modules: bool,
}

impl Profile {
    fn knobs(self) -> Knobs {
        match self {
            Profile::Desk => Knobs {
                gl_max_n: 3,
                gl_max_k: 3,
                sp_max_n: 2,
                so_max_n: 4,
                pair_max_k: 2,
                commutant_cases: 50,
                casimir_cases: 10,
                big_modules: true,
            },
            Profile::Quick => Knobs {
                gl_max_n: 2,
                gl_max_k: 2,
                sp_max_n: 1,
                so_max_n: 3,
                pair_max_k: 2,
                commutant_cases: 3,
                casimir_cases: 1,
                big_modules: false,
            },
        }
    }
}

/// A uniformly drawn rational `a/b` with `|a| <= 6`, `1 <= b <= 4`.
pub fn random_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// A polynomial of degree `<= max_degree` with random rational coefficients.
pub fn random_poly(rng: &mut impl Rng, max_degree: usize) -> Poly {
    let deg = rng.gen_range(0..=max_degree);
    Poly::new((0..=deg).map(|_| random_rat(rng)).collect())
}

/// `d` pairwise distinct random rationals.
pub fn random_points(rng: &mut impl Rng, d: usize) -> Vec<Rat> {
    let mut pts: Vec<Rat> = Vec::with_capacity(d);
    while pts.len() < d {
        let p = random_rat(rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

fn standard_weight(n: usize) -> Weight {
    let mut w = vec![0; n];
    w[0] = 1;
    Weight(w)
}

fn wt(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn ad_invariance_reports(knobs: &Knobs, out: &mut Vec<CheckReport>) -> Result<()> {
    for n in 1..=knobs.gl_max_n {
        let spec = build_lie_algebra(Family::Gl, n)?;
        for k in 1..=knobs.gl_max_k {
            for sigma in Permutation::all(k) {
                let r = check_ad_invariance(&theta_sigma_gl(&sigma, n), &spec);
                out.push(r.with_param("sigma", sigma.to_string()));
            }
        }
    }
    let paired = (1..=knobs.sp_max_n)
        .map(|n| (Family::Sp, n))
        .chain((2..=knobs.so_max_n).map(|n| (Family::So, n)));
    for (family, n) in paired {
        let spec = build_lie_algebra(family, n)?;
        for k in 1..=knobs.pair_max_k {
            for sigma in Permutation::all(2 * k) {
                let t = match family {
                    Family::Sp => crate::invariants::theta_sigma_sp(&spec, &sigma)?,
                    _ => crate::invariants::psi_sigma_so(&spec, &sigma)?,
                };
                out.push(check_ad_invariance(&t, &spec).with_param("sigma", sigma.to_string()));
            }
        }
    }
    let all_specs = (1..=knobs.gl_max_n)
        .map(|n| (Family::Gl, n))
        .chain((1..=knobs.sp_max_n).map(|n| (Family::Sp, n)))
        .chain((2..=knobs.so_max_n).map(|n| (Family::So, n)));
    for (family, n) in all_specs {
        let spec = build_lie_algebra(family, n)?;
        out.push(check_ad_invariance(&casimir_tensor(&spec), &spec).with_param("tensor", "casimir"));
    }
    let gl2 = build_lie_algebra(Family::Gl, 2)?;
    let probe = InvariantTensor::from_terms(2, [(Rat::one(), vec![1, 1])]);
    out.push(
        check_ad_invariance(&probe, &gl2)
            .with_param("tensor", "E12⊗E12")
            .expecting_failure(),
    );
    Ok(())
}

/// `cases` randomized commutation checks per family at the sizes of the desk
/// profile: a random tensor from the spanning family (or the Casimir), random
/// polynomials of degree `<= 2`, and `V^{⊗d}` at `0, …, d-1`.
pub fn random_commutant_checks(cases: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let mut knobs = Profile::Desk.knobs();
    knobs.commutant_cases = cases;
    let mut out = Vec::new();
    commutant_reports(&knobs, &mut ChaCha8Rng::seed_from_u64(seed), &mut out)?;
    Ok(out)
}

/// The two-factor Casimir spot case followed by `cases` random `(P, Q)` of
/// degree `<= 3` at random distinct points for each desk-profile module.
pub fn random_casimir_checks(cases: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let mut knobs = Profile::Desk.knobs();
    knobs.casimir_cases = cases;
    let mut out = Vec::new();
    casimir_reports(&knobs, &mut ChaCha8Rng::seed_from_u64(seed), &mut out)?;
    Ok(out)
}

fn commutant_reports(knobs: &Knobs, rng: &mut ChaCha8Rng, out: &mut Vec<CheckReport>) -> Result<()> {
    let families = [
        (Family::Gl, 1..=knobs.gl_max_n, knobs.gl_max_k),
        (Family::Sp, 1..=knobs.sp_max_n, knobs.pair_max_k),
        (Family::So, 2..=knobs.so_max_n, knobs.pair_max_k),
    ];
    for (family, ns, max_k) in families {
        let specs = ns.map(|n| build_lie_algebra(family, n)).collect::<Result<Vec<_>>>()?;
        let mut pools = Vec::new();
        for spec in &specs {
            let mut pool = vec![casimir_tensor(spec)];
            for k in 1..=max_k {
                pool.extend(fft_tensors(spec, k)?.into_iter().map(|(_, t)| t));
            }
            pools.push(pool);
        }
        for _ in 0..knobs.commutant_cases {
            let i = rng.gen_range(0..specs.len());
            let spec = &specs[i];
            let theta = pools[i].choose(rng).expect("pool is nonempty").clone();
            let max_d = if spec.size <= 3 { 3 } else { 2 };
            let d = rng.gen_range(1..=max_d);
            let em = EvaluationModule::standard_power(spec, integer_points(d))?;
            let polys: Vec<Poly> = (0..theta.k).map(|_| random_poly(rng, 2)).collect();
            out.push(check_commutant(&theta, &polys, &em)?);
        }
    }
    Ok(())
}

fn casimir_reports(knobs: &Knobs, rng: &mut ChaCha8Rng, out: &mut Vec<CheckReport>) -> Result<()> {
    let gl2 = build_lie_algebra(Family::Gl, 2)?;
    let sp2 = build_lie_algebra(Family::Sp, 1)?;
    let spot = EvaluationModule::from_weights(&gl2, &[wt(&[1, 0]), wt(&[1, 0])], integer_points(2))?;
    out.push(check_casimir_formula(
        &spot,
        &Poly::monomial(1),
        &Poly::from_ints(&[1, 1]),
    )?);
    let mut cases = vec![
        (gl2.clone(), vec![wt(&[1, 0]), wt(&[1, 0])]),
        (gl2.clone(), vec![wt(&[2, 0]), wt(&[1, 0])]),
        (gl2.clone(), vec![wt(&[2, 1]), wt(&[1, 0])]),
        (sp2.clone(), vec![wt(&[1]), wt(&[1])]),
    ];
    if !knobs.big_modules {
        cases.truncate(1);
        cases.push((sp2, vec![wt(&[1]), wt(&[1])]));
    }
    for (spec, weights) in cases {
        for _ in 0..knobs.casimir_cases {
            let em = EvaluationModule::from_weights(&spec, &weights, random_points(rng, 2))?;
            let p = random_poly(rng, 3);
            let q = random_poly(rng, 3);
            out.push(check_casimir_formula(&em, &p, &q)?);
        }
    }
    Ok(())
}

fn schur_weyl_reports(knobs: &Knobs, out: &mut Vec<CheckReport>) -> Result<()> {
    let ns: &[usize] = if knobs.big_modules { &[2, 3] } else { &[2] };
    let mut point_sets = vec![integer_points(2), integer_points(3)];
    point_sets.push(vec![Rat::int(0), Rat::new(1, 2), Rat::new(7, 3)]);
    for &n in ns {
        for points in &point_sets {
            let k = points.len();
            for r in 1..=k {
                for s in r + 1..=k {
                    out.push(check_schur_weyl((r, s), n, k, points)?);
                }
            }
            out.push(check_schur_weyl_products(n, k, points)?);
        }
    }
    Ok(())
}

fn span_reports(knobs: &Knobs, out: &mut Vec<CheckReport>) -> Result<()> {
    let mut cases = vec![
        (Family::Gl, 2, 2),
        (Family::Gl, 2, 3),
        (Family::Sp, 1, 2),
        (Family::So, 3, 2),
    ];
    if knobs.big_modules {
        cases.insert(2, (Family::Gl, 3, 3));
    }
    for (family, n, d) in cases {
        let spec = build_lie_algebra(family, n)?;
        let em = EvaluationModule::standard_power(&spec, integer_points(d))?;
        let gens = GeneratorFamily::default_for(&em);
        out.push(check_span_surjectivity(&em, em.default_degree_cap(), &gens)?);
        if family != Family::Gl || n == 2 {
            out.push(check_span_losslessness(&em, &gens)?);
        }
    }
    Ok(())
}

fn irreducibility_reports(knobs: &Knobs, out: &mut Vec<CheckReport>) -> Result<()> {
    let gl2 = build_lie_algebra(Family::Gl, 2)?;
    let v = wt(&[1, 0]);
    let mut modules = vec![vec![v.clone(); 3]];
    if knobs.big_modules {
        modules.push(vec![wt(&[2, 0]), v.clone(), v.clone()]);
    }
    for weights in &modules {
        let em = EvaluationModule::from_weights(&gl2, weights, integer_points(3))?;
        out.push(check_isotypic_irreducibility(
            &em,
            em.default_degree_cap(),
            &GeneratorFamily::default_for(&em),
        )?);
    }
    let equal = EvaluationModule::from_weights(&gl2, &modules[0], vec![Rat::zero(); 3])?;
    let r = check_isotypic_irreducibility(&equal, 2, &GeneratorFamily::default_for(&equal))?;
    out.push(r.expecting_failure());
    Ok(())
}

fn cycle_reports(out: &mut Vec<CheckReport>) -> Result<()> {
    let gl2 = build_lie_algebra(Family::Gl, 2)?;
    for d in [2, 3] {
        let em = EvaluationModule::standard_power(&gl2, integer_points(d))?;
        out.push(check_cycle_generation(&em, em.default_degree_cap())?);
    }
    Ok(())
}

fn evaluation_reports(knobs: &Knobs, out: &mut Vec<CheckReport>) -> Result<()> {
    let mut cases: Vec<(Family, usize, Vec<Weight>)> = vec![
        (Family::Gl, 2, vec![wt(&[1, 0]); 2]),
        (Family::Gl, 2, vec![wt(&[1, 0]); 3]),
        (Family::Gl, 2, vec![wt(&[2, 0]), wt(&[1, 0])]),
        (Family::Sp, 1, vec![wt(&[1]); 2]),
        (Family::So, 3, vec![standard_weight(3); 2]),
    ];
    if knobs.big_modules {
        cases.extend([
            (Family::Gl, 3, vec![wt(&[1, 0, 0]); 3]),
            (Family::Gl, 2, vec![wt(&[2, 0]), wt(&[1, 0]), wt(&[1, 0])]),
            (Family::Sp, 1, vec![wt(&[1]); 3]),
            (Family::Sp, 2, vec![wt(&[1, 0]); 2]),
            (Family::So, 4, vec![standard_weight(4); 2]),
        ]);
    }
    for (family, n, weights) in &cases {
        let spec = build_lie_algebra(*family, *n)?;
        let em = EvaluationModule::from_weights(&spec, weights, integer_points(weights.len()))?;
        out.push(check_evaluation_irreducibility(&em, em.default_degree_cap())?);
    }
    let gl2 = build_lie_algebra(Family::Gl, 2)?;
    let coincident = EvaluationModule::from_weights(&gl2, &vec![wt(&[1, 0]); 2], vec![Rat::zero(); 2])?;
    out.push(check_evaluation_irreducibility(&coincident, 1)?.expecting_failure());
    Ok(())
}

/// Runs every check of the profile. Randomized inputs come from a ChaCha8
/// stream seeded with `seed`, so reports depend only on `(profile, seed)`
/// apart from `runtime_ms`.
pub fn run_suite(profile: Profile, seed: u64) -> Result<Vec<CheckReport>> {
    let knobs = profile.knobs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    ad_invariance_reports(&knobs, &mut out)?;
    commutant_reports(&knobs, &mut rng, &mut out)?;
    casimir_reports(&knobs, &mut rng, &mut out)?;
    schur_weyl_reports(&knobs, &mut out)?;
    span_reports(&knobs, &mut out)?;
    irreducibility_reports(&knobs, &mut out)?;
    cycle_reports(&mut out)?;
    evaluation_reports(&knobs, &mut out)?;
    Ok(out)
}
