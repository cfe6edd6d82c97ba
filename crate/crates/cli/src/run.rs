use repcur_core::currents::EvaluationModule;
use repcur_core::invariants::{casimir_tensor, psi_sigma_so, theta_sigma_gl, theta_sigma_sp};
use repcur_core::verify::{self, CheckReport, GeneratorFamily};
use repcur_core::{build_lie_algebra, run_suite, Family, InvariantTensor, LieAlgebraSpec, Permutation, Poly};

use crate::args::{Cap, CheckKind, RunConfig};
use crate::CliError;

fn tensor_for(spec: &LieAlgebraSpec, sigma: &Permutation) -> Result<InvariantTensor, CliError> {
    Ok(match spec.family {
        Family::Gl => theta_sigma_gl(sigma, spec.n),
        Family::Sp => theta_sigma_sp(spec, sigma)?,
        Family::So => psi_sigma_so(spec, sigma)?,
    })
}

/// The tensors named by the request: `--sigma`, every σ when only `--k` is
/// given, the Casimir otherwise.
fn requested_tensors(
    cfg: &RunConfig,
    spec: &LieAlgebraSpec,
    allow_all: bool,
) -> Result<Vec<(String, InvariantTensor)>, CliError> {
    if let Some(sigma) = &cfg.sigma {
        return Ok(vec![(sigma.to_string(), tensor_for(spec, sigma)?)]);
    }
    if let (true, Some(k)) = (allow_all, cfg.k) {
        let letters = if spec.family == Family::Gl { k } else { 2 * k };
        return Permutation::all(letters)
            .into_iter()
            .map(|s| Ok((s.to_string(), tensor_for(spec, &s)?)))
            .collect();
    }
    Ok(vec![("casimir".to_string(), casimir_tensor(spec))])
}

fn module(cfg: &RunConfig) -> Result<EvaluationModule, CliError> {
    let spec = build_lie_algebra(cfg.family, cfg.n)?;
    Ok(EvaluationModule::from_weights(&spec, &cfg.weights, cfg.points.clone())?)
}

fn generator_family(cfg: &RunConfig, em: &EvaluationModule) -> GeneratorFamily {
    match cfg.tensor_degree {
        Cap::Auto => GeneratorFamily::default_for(em),
        Cap::Fixed(k) => GeneratorFamily::new(k),
    }
}

fn polys_or(cfg: &RunConfig, default: Vec<Poly>) -> Vec<Poly> {
    cfg.polys.clone().unwrap_or(default)
}

/// Executes the requested check(s).
pub fn run(cfg: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    let (cap, _) = cfg.resolved_degree_cap();
    let reports = match cfg.command {
        CheckKind::All => run_suite(cfg.profile, cfg.seed)?,
        CheckKind::AdInvariance => {
            let spec = build_lie_algebra(cfg.family, cfg.n)?;
            requested_tensors(cfg, &spec, true)?
                .into_iter()
                .map(|(label, t)| verify::check_ad_invariance(&t, &spec).with_param("tensor", label))
                .collect()
        }
        CheckKind::Commutant => {
            let em = module(cfg)?;
            let mut out = Vec::new();
            for (label, t) in requested_tensors(cfg, em.spec(), false)? {
                let polys = polys_or(cfg, (0..t.k).map(Poly::monomial).collect());
                out.push(verify::check_commutant(&t, &polys, &em)?.with_param("tensor", label));
            }
            out
        }
        CheckKind::Casimir => {
            let em = module(cfg)?;
            let polys = polys_or(cfg, vec![Poly::monomial(1), Poly::from_ints(&[1, 1])]);
            if polys.len() != 2 {
                return Err(CliError::Usage(format!(
                    "casimir needs exactly 2 polynomials, got {}",
                    polys.len()
                )));
            }
            vec![verify::check_casimir_formula(&em, &polys[0], &polys[1])?]
        }
        CheckKind::SchurWeyl => {
            if cfg.family != Family::Gl {
                return Err(CliError::Usage("schur-weyl is defined for --family gl".into()));
            }
            let k = cfg.d();
            match cfg.tau {
                Some(tau) => vec![verify::check_schur_weyl(tau, cfg.n, k, &cfg.points)?],
                None => {
                    let mut out = Vec::new();
                    for r in 1..=k {
                        for s in r + 1..=k {
                            out.push(verify::check_schur_weyl((r, s), cfg.n, k, &cfg.points)?);
                        }
                    }
                    out.push(verify::check_schur_weyl_products(cfg.n, k, &cfg.points)?);
                    out
                }
            }
        }
        CheckKind::Span => {
            let em = module(cfg)?;
            vec![verify::check_span_surjectivity(&em, cap, &generator_family(cfg, &em))?]
        }
        CheckKind::Irreducibility => {
            let em = module(cfg)?;
            vec![verify::check_isotypic_irreducibility(
                &em,
                cap,
                &generator_family(cfg, &em),
            )?]
        }
        CheckKind::CycleGeneration => {
            let em = module(cfg)?;
            vec![verify::check_cycle_generation(&em, cap)?]
        }
        CheckKind::Evaluation => {
            let em = module(cfg)?;
            vec![verify::check_evaluation_irreducibility(&em, cap)?]
        }
    };
    Ok(if cfg.expect_fail {
        reports.into_iter().map(CheckReport::expecting_failure).collect()
    } else {
        reports
    })
}
