//! Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
//! Runs without the libtest harness so every line reaches the output.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use repcur_core::currents::EvaluationModule;
use repcur_core::invariants::{casimir_tensor, psi_sigma_so, theta_sigma_gl, theta_sigma_sp};
use repcur_core::repbuild;
use repcur_core::verify::suite::{random_casimir_checks, random_commutant_checks};
use repcur_core::verify::{self, integer_points, CheckReport, GeneratorFamily};
use repcur_core::{build_lie_algebra, Family, InvariantTensor, Permutation, Poly, Rat, Weight};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(reports: &[CheckReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{} failed: {:?} expected={} actual={}",
            r.check_name, r.parameters, r.expected, r.actual
        )),
    }
}

fn within(start: Instant, limit_s: u64) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(
        t < Duration::from_secs(limit_s),
        format!("took {t:?}, limit {limit_s}s"),
    )?;
    Ok(t)
}

fn ints(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| Rat::int(x)).collect()
}

fn e(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn ad_invariance() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for n in 1..=3 {
        let g = build_lie_algebra(Family::Gl, n).map_err(e)?;
        for k in 1..=3 {
            for s in Permutation::all(k) {
                reports.push(verify::check_ad_invariance(&theta_sigma_gl(&s, n), &g));
            }
        }
        reports.push(verify::check_ad_invariance(&casimir_tensor(&g), &g));
    }
    for n in 1..=2 {
        let g = build_lie_algebra(Family::Sp, n).map_err(e)?;
        for k in 1..=2 {
            for s in Permutation::all(2 * k) {
                reports.push(verify::check_ad_invariance(&theta_sigma_sp(&g, &s).map_err(e)?, &g));
            }
        }
        reports.push(verify::check_ad_invariance(&casimir_tensor(&g), &g));
    }
    for n in 2..=4 {
        let g = build_lie_algebra(Family::So, n).map_err(e)?;
        for k in 1..=2 {
            for s in Permutation::all(2 * k) {
                reports.push(verify::check_ad_invariance(&psi_sigma_so(&g, &s).map_err(e)?, &g));
            }
        }
        reports.push(verify::check_ad_invariance(&casimir_tensor(&g), &g));
    }
    all_pass(&reports)?;
    let g = build_lie_algebra(Family::Gl, 2).map_err(e)?;
    let probe = InvariantTensor::from_terms(2, [(Rat::one(), vec![1, 1])]);
    ensure(
        !verify::check_ad_invariance(&probe, &g).passed(),
        "E12⊗E12 probe passed",
    )?;
    let t = within(start, 60)?;
    Ok(format!(
        "{} tensors invariant, E12⊗E12 probe rejected, {t:.1?}",
        reports.len()
    ))
}

fn commutation() -> Outcome {
    let reports = random_commutant_checks(50, 2024).map_err(e)?;
    ensure(reports.len() == 150, format!("{} cases", reports.len()))?;
    all_pass(&reports)?;
    let counts: Vec<usize> = ["gl", "sp", "so"]
        .iter()
        .map(|f| reports.iter().filter(|r| r.parameters["family"] == *f).count())
        .collect();
    ensure(counts == [50, 50, 50], format!("per-family counts {counts:?}"))?;
    Ok("50 randomized cases per family commute with g".into())
}

fn casimir_formula() -> Outcome {
    let g = build_lie_algebra(Family::Gl, 2).map_err(e)?;
    let v = Weight(vec![1, 0]);
    let em = EvaluationModule::from_weights(&g, &[v.clone(), v], ints(&[0, 1])).map_err(e)?;
    let spot = verify::check_casimir_formula(&em, &Poly::monomial(1), &Poly::from_ints(&[1, 1])).map_err(e)?;
    ensure(spot.passed(), format!("spot case: {spot:?}"))?;
    ensure(
        spot.actual == "(2,0): 5; (1,1): 3",
        format!("spot scalars {}", spot.actual),
    )?;
    let reports = random_casimir_checks(10, 77).map_err(e)?;
    ensure(reports.len() == 41, format!("{} cases", reports.len()))?;
    all_pass(&reports)?;
    Ok(format!(
        "spot scalars {}; {} random (P,Q) cases exact",
        spot.actual,
        reports.len() - 1
    ))
}

fn schur_weyl() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    let point_sets = [
        ints(&[0, 1]),
        ints(&[0, 1, 2]),
        vec![Rat::int(0), Rat::new(1, 2), Rat::new(7, 3)],
    ];
    for n in [2, 3] {
        for pts in &point_sets {
            let k = pts.len();
            for r in 1..=k {
                for s in r + 1..=k {
                    reports.push(verify::check_schur_weyl((r, s), n, k, pts).map_err(e)?);
                }
            }
            reports.push(verify::check_schur_weyl_products(n, k, pts).map_err(e)?);
        }
    }
    all_pass(&reports)?;
    let t = within(start, 30)?;
    Ok(format!("{} transposition and product checks, {t:.1?}", reports.len()))
}

fn spanning() -> Outcome {
    // commutant dimensions from the independent linear solve
    let cases = [
        (Family::Gl, 2, 2, 2),
        (Family::Gl, 2, 3, 5),
        (Family::Gl, 3, 3, 6),
        (Family::Sp, 1, 2, 2),
        // V⊗V = V(2) ⊕ V(1) ⊕ V(0) for so(3), three summands of multiplicity one
        (Family::So, 3, 2, 3),
    ];
    let mut found = Vec::new();
    for (family, n, d, frozen) in cases {
        let g = build_lie_algebra(family, n).map_err(e)?;
        let em = EvaluationModule::standard_power(&g, integer_points(d)).map_err(e)?;
        let oracle = repbuild::commutant_dimension(&em.carrier).map_err(e)?;
        ensure(
            oracle == frozen,
            format!("{family}({n}) V^{d}: commutant {oracle}, frozen {frozen}"),
        )?;
        let fam = GeneratorFamily::default_for(&em);
        let r = verify::check_span_surjectivity(&em, d - 1, &fam).map_err(e)?;
        ensure(r.passed() && r.actual == frozen.to_string(), format!("{r:?}"))?;
        for cap in d..=d + 1 {
            let r = verify::check_span_surjectivity(&em, cap, &fam).map_err(e)?;
            ensure(
                r.actual == frozen.to_string(),
                format!("span changed at cap {cap}: {}", r.actual),
            )?;
        }
        found.push(format!("{} V^{d}={frozen}", g.name()));
    }
    Ok(format!(
        "span = commutant for {}; constant for caps d-1..d+1",
        found.join(" ")
    ))
}

fn isotypic_irreducibility() -> Outcome {
    let start = Instant::now();
    let g = build_lie_algebra(Family::Gl, 2).map_err(e)?;
    let v = Weight(vec![1, 0]);
    let modules = [vec![v.clone(); 3], vec![Weight(vec![2, 0]), v.clone(), v.clone()]];
    let mut parts = Vec::new();
    for ws in &modules {
        let em = EvaluationModule::from_weights(&g, ws, ints(&[0, 1, 2])).map_err(e)?;
        let r = verify::check_isotypic_irreducibility(&em, 2, &GeneratorFamily::default_for(&em)).map_err(e)?;
        ensure(r.passed(), format!("{r:?}"))?;
        parts.push(r.actual);
    }
    ensure(parts[0].contains("(2,1): 4"), format!("V^3 closure dims {}", parts[0]))?;
    let eq = EvaluationModule::from_weights(&g, &modules[0], ints(&[0, 0, 0])).map_err(e)?;
    let r = verify::check_isotypic_irreducibility(&eq, 2, &GeneratorFamily::default_for(&eq)).map_err(e)?;
    ensure(!r.passed() && r.actual.contains("(2,1): 1"), format!("control: {r:?}"))?;
    let t = within(start, 120)?;
    Ok(format!(
        "closure dims [{}] and [{}]; equal points give [{}], {t:.1?}",
        parts[0], parts[1], r.actual
    ))
}

fn cycle_generation() -> Outcome {
    let g = build_lie_algebra(Family::Gl, 2).map_err(e)?;
    let mut parts = Vec::new();
    for d in [2, 3] {
        let em = EvaluationModule::standard_power(&g, integer_points(d)).map_err(e)?;
        let r = verify::check_cycle_generation(&em, d - 1).map_err(e)?;
        let oracle = repbuild::commutant_dimension(&em.carrier).map_err(e)?;
        ensure(r.passed() && r.actual == oracle.to_string(), format!("{r:?}"))?;
        parts.push(format!(
            "V^{d}: {} (sorted tuples: {})",
            r.actual, r.parameters["sorted_tuple_closure_dim"]
        ));
    }
    Ok(parts.join("; "))
}

fn evaluation_irreducibility() -> Outcome {
    let w = |c: &[i64]| Weight(c.to_vec());
    let matrix: Vec<(Family, usize, Vec<Weight>)> = vec![
        (Family::Gl, 2, vec![w(&[1, 0]); 2]),
        (Family::Gl, 2, vec![w(&[1, 0]); 3]),
        (Family::Gl, 3, vec![w(&[1, 0, 0]); 3]),
        (Family::Gl, 2, vec![w(&[2, 0]), w(&[1, 0])]),
        (Family::Gl, 2, vec![w(&[2, 1]), w(&[1, 0])]),
        (Family::Gl, 2, vec![w(&[2, 0]), w(&[1, 0]), w(&[1, 0])]),
        (Family::Sp, 1, vec![w(&[1]); 2]),
        (Family::Sp, 1, vec![w(&[1]); 3]),
        (Family::Sp, 2, vec![w(&[1, 0]); 2]),
        (Family::So, 3, vec![w(&[1, 0, 0]); 2]),
        (Family::So, 4, vec![w(&[1, 0, 0, 0]); 2]),
    ];
    for (family, n, ws) in &matrix {
        let g = build_lie_algebra(*family, *n).map_err(e)?;
        let em = EvaluationModule::from_weights(&g, ws, integer_points(ws.len())).map_err(e)?;
        let r = verify::check_evaluation_irreducibility(&em, em.default_degree_cap()).map_err(e)?;
        ensure(r.passed(), format!("{r:?}"))?;
    }
    let g = build_lie_algebra(Family::Gl, 2).map_err(e)?;
    let eq = EvaluationModule::standard_power(&g, ints(&[1, 1])).map_err(e)?;
    let control = repcur_core::currents::current_algebra_commutant_dimension(&eq, 1).map_err(e)?;
    ensure(control > 1, format!("coincident control commutant {control}"))?;
    Ok(format!(
        "{} distinct-point modules have commutant 1; coincident control {control}",
        matrix.len()
    ))
}

fn strip_runtime(json: &str) -> Result<serde_json::Value, String> {
    let mut v: serde_json::Value = serde_json::from_str(json).map_err(e)?;
    for c in v["checks"].as_array_mut().ok_or("no checks array")? {
        c.as_object_mut().ok_or("check is not an object")?.remove("runtime_ms");
    }
    Ok(v)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(e)?;
    let mut outputs = Vec::new();
    let mut slowest = Duration::ZERO;
    for run in 0..2 {
        let start = Instant::now();
        let path = dir.path().join(format!("run{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_repcur"))
            .args(["verify", "all", "--profile", "desk", "--seed", "9", "--output"])
            .arg(&path)
            .env("REPCUR_MAX_DIM", "4096")
            .output()
            .map_err(e)?
            .status;
        ensure(status.code() == Some(0), format!("run {run} exited with {status}"))?;
        outputs.push(std::fs::read_to_string(&path).map_err(e)?);
        slowest = slowest.max(start.elapsed());
    }
    let (a, b) = (strip_runtime(&outputs[0])?, strip_runtime(&outputs[1])?);
    ensure(a == b, "reports differ beyond runtime_ms")?;
    let n = a["checks"].as_array().map_or(0, Vec::len);
    ensure(n >= 20, format!("only {n} checks"))?;
    ensure(
        slowest < Duration::from_secs(600),
        format!("a full run took {slowest:?}"),
    )?;
    Ok(format!(
        "{n} checks, identical JSON modulo runtime_ms, slowest run {slowest:.1?}"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("ad-invariance", ad_invariance),
        ("commutation", commutation),
        ("casimir formula", casimir_formula),
        ("schur-weyl preimages", schur_weyl),
        ("spanning", spanning),
        ("isotypic irreducibility", isotypic_irreducibility),
        ("cycle generation", cycle_generation),
        ("evaluation-module irreducibility", evaluation_irreducibility),
        ("report determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
