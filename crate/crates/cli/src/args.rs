use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use repcur_core::{Family, Permutation, Poly, Profile, Rat, Weight};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "repcur", version)]
#[command(about = "Exact checks on invariant tensors and current-algebra intertwiners")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one check, or the whole matrix with `all`
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    AdInvariance,
    Commutant,
    Casimir,
    SchurWeyl,
    Span,
    Irreducibility,
    CycleGeneration,
    /// Commutant of all currents on the module is the scalars
    Evaluation,
    All,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::AdInvariance => "ad-invariance",
            CheckKind::Commutant => "commutant",
            CheckKind::Casimir => "casimir",
            CheckKind::SchurWeyl => "schur-weyl",
            CheckKind::Span => "span",
            CheckKind::Irreducibility => "irreducibility",
            CheckKind::CycleGeneration => "cycle-generation",
            CheckKind::Evaluation => "evaluation",
            CheckKind::All => "all",
        }
    }

    fn needs_distinct_points(self) -> bool {
        matches!(
            self,
            CheckKind::Casimir | CheckKind::SchurWeyl | CheckKind::Span | CheckKind::CycleGeneration
        )
    }
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Which check to run
    #[arg(value_enum)]
    pub check: CheckKind,

    /// Lie algebra family: gl, sp or so
    #[arg(long, default_value = "gl")]
    pub family: String,

    /// Rank parameter: gl(n), sp(2n), so(n)
    #[arg(long, default_value_t = 2)]
    pub n: usize,

    /// Number of tensor factors, or tensor degree for ad-invariance
    #[arg(long)]
    pub k: Option<usize>,

    /// Highest weights of the factors, e.g. "2,0;1,0"
    #[arg(long)]
    pub weights: Option<String>,

    /// Evaluation points, e.g. "0,1,3/2"
    #[arg(long)]
    pub points: Option<String>,

    /// Permutation in cycle notation "(1 2)(3)" or a pair "r,s"
    #[arg(long)]
    pub sigma: Option<String>,

    /// Transposition "r,s" or "(r s)"
    #[arg(long)]
    pub tau: Option<String>,

    /// Polynomials as coefficient lists, lowest degree first: "0,1;1,1"
    #[arg(long)]
    pub polys: Option<String>,

    /// Highest monomial degree fed to the generators: auto (= d-1) or a number
    #[arg(long, default_value = "auto")]
    pub degree_cap: String,

    /// Highest invariant tensor degree for span and irreducibility checks
    #[arg(long, default_value = "auto")]
    pub tensor_degree: String,

    /// Write the JSON report here ("-" for stdout)
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Seed for randomized inputs
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Check matrix for `all`: desk or quick
    #[arg(long, default_value = "desk")]
    pub profile: String,

    /// The checks are expected to fail; invert their status
    #[arg(long)]
    pub expect_fail: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cap {
    Auto,
    Fixed(usize),
}

impl Cap {
    fn parse(flag: &str, s: &str) -> Result<Self, CliError> {
        if s.trim() == "auto" {
            return Ok(Cap::Auto);
        }
        s.trim()
            .parse()
            .map(Cap::Fixed)
            .map_err(|_| CliError::Usage(format!("{flag}: expected 'auto' or a number, got '{s}'")))
    }

    fn render(self) -> String {
        match self {
            Cap::Auto => "auto".into(),
            Cap::Fixed(c) => c.to_string(),
        }
    }
}

/// A validated request.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CheckKind,
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
    pub weights: Vec<Weight>,
    pub points: Vec<Rat>,
    pub sigma: Option<Permutation>,
    pub tau: Option<(usize, usize)>,
    pub polys: Option<Vec<Poly>>,
    pub degree_cap: Cap,
    pub tensor_degree: Cap,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub profile: Profile,
    pub expect_fail: bool,
}

impl RunConfig {
    /// Number of tensor factors.
    pub fn d(&self) -> usize {
        self.points.len()
    }

    /// Resolved monomial degree cap and how it was resolved.
    pub fn resolved_degree_cap(&self) -> (usize, String) {
        let d = self.d();
        match self.degree_cap {
            Cap::Fixed(c) => (c, format!("{c} (given)")),
            Cap::Auto => {
                let c = d.saturating_sub(1);
                (
                    c,
                    format!("{c} (auto: d-1; on {d} points every polynomial acts as its interpolant of degree < {d})"),
                )
            }
        }
    }

    /// Echo of the request for the report, all values as strings.
    pub fn record(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("command".to_string(), self.command.name().to_string());
        m.insert("seed".to_string(), self.seed.to_string());
        m.insert("expect_fail".to_string(), self.expect_fail.to_string());
        if self.command == CheckKind::All {
            m.insert("profile".to_string(), self.profile.to_string());
            return m;
        }
        m.insert("family".to_string(), self.family.to_string());
        m.insert("n".to_string(), self.n.to_string());
        if let Some(k) = self.k {
            m.insert("k".to_string(), k.to_string());
        }
        m.insert("weights".to_string(), repcur_core::verify::join_weights(&self.weights));
        m.insert("points".to_string(), repcur_core::verify::join_rats(&self.points));
        if let Some(s) = &self.sigma {
            m.insert("sigma".to_string(), s.to_string());
        }
        if let Some((r, s)) = self.tau {
            m.insert("tau".to_string(), format!("({r} {s})"));
        }
        if let Some(p) = &self.polys {
            let ps: Vec<String> = p.iter().map(|p| format!("[{p}]")).collect();
            m.insert("polys".to_string(), ps.join(" "));
        }
        m.insert("degree_cap".to_string(), self.resolved_degree_cap().1);
        m.insert("tensor_degree".to_string(), self.tensor_degree.render());
        m
    }
}

/// Comma-separated rationals. Each malformed token is named in the error.
pub fn parse_points(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Rat>()
                .map_err(|_| CliError::Usage(format!("malformed rational '{}' in --points", t.trim())))
        })
        .collect()
}

pub fn require_distinct(points: &[Rat]) -> Result<(), CliError> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(CliError::Usage(format!(
                "points must be pairwise distinct: '{p}' repeated"
            )));
        }
    }
    Ok(())
}

/// `"2,0;1,0"`: one weight per factor, checked against the family.
pub fn parse_weights(s: &str, family: Family, n: usize) -> Result<Vec<Weight>, CliError> {
    s.split(';')
        .map(|tok| {
            let tok = tok.trim();
            let w: Weight = tok
                .parse()
                .map_err(|e: repcur_core::Error| CliError::Usage(format!("{e} in --weights '{tok}'")))?;
            if w.0.len() != n {
                return Err(CliError::Usage(format!(
                    "weight '{tok}' has {} coordinates, expected {n}",
                    w.0.len()
                )));
            }
            match family {
                Family::So => {
                    let standard = w.0.iter().enumerate().all(|(i, &c)| c == i64::from(i == 0));
                    if !standard {
                        return Err(CliError::Usage(format!(
                            "weight '{tok}': only the standard module (1,0,...) is available for so"
                        )));
                    }
                }
                _ if !w.is_dominant(family) => {
                    return Err(CliError::Usage(format!("weight not dominant: '{tok}'")));
                }
                _ => {}
            }
            Ok(w)
        })
        .collect()
}

/// `"r,s"` or `"(r s)"`, 1-based, returned with `r < s`.
pub fn parse_tau(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("malformed transposition '{s}' (expected r,s or (r s))"));
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<usize> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [r, s] if r != s && r > 0 && s > 0 => Ok((r.min(s), r.max(s))),
        _ => Err(bad()),
    }
}

/// Cycle notation, or a bare pair `"r,s"` for a transposition, on `letters`.
pub fn parse_sigma(s: &str, letters: usize) -> Result<Permutation, CliError> {
    let t = s.trim();
    let perm = if t.starts_with('(') {
        Permutation::parse_cycles(t, letters)
    } else {
        let (r, q) = parse_tau(t)?;
        Permutation::transposition(letters, r, q)
    };
    perm.map_err(|e| CliError::Usage(format!("--sigma '{s}': {e}")))
}

fn max_entry(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
}

pub fn parse_polys(s: &str) -> Result<Vec<Poly>, CliError> {
    s.split(';')
        .map(|tok| {
            tok.trim()
                .parse::<Poly>()
                .map_err(|e| CliError::Usage(format!("{e} in --polys '{}'", tok.trim())))
        })
        .collect()
}

/// Clap parsing followed by validation against the requested check.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let Command::Verify(a) = cli.command;
    validate(a)
}

pub fn validate(a: VerifyArgs) -> Result<RunConfig, CliError> {
    let family: Family = a
        .family
        .parse()
        .map_err(|e: repcur_core::Error| CliError::Usage(e.to_string()))?;
    let profile: Profile = a
        .profile
        .parse()
        .map_err(|e: repcur_core::Error| CliError::Usage(e.to_string()))?;
    let min_n = if family == Family::So { 2 } else { 1 };
    if a.n < min_n {
        return Err(CliError::Usage(format!("--n {} is too small for {family}", a.n)));
    }
    let weights = a
        .weights
        .as_deref()
        .map(|w| parse_weights(w, family, a.n))
        .transpose()?;
    let mut points = a.points.as_deref().map(parse_points).transpose()?;
    if points.is_none() {
        let d = weights.as_ref().map(Vec::len).or(a.k).unwrap_or(2);
        points = Some((0..d).map(Rat::from).collect());
    }
    let points = points.unwrap_or_default();
    let weights = match weights {
        Some(w) => w,
        None => {
            let mut eps = vec![0; a.n];
            eps[0] = 1;
            vec![Weight(eps); points.len()]
        }
    };
    if a.check != CheckKind::All {
        if weights.len() != points.len() {
            return Err(CliError::Usage(format!(
                "{} weights but {} points: one point per factor is required",
                weights.len(),
                points.len()
            )));
        }
        if a.check.needs_distinct_points() {
            require_distinct(&points)?;
        }
    }
    let sigma = match &a.sigma {
        None => None,
        Some(s) => {
            let letters = match (family, a.k) {
                (Family::Gl, Some(k)) => k,
                (Family::Gl, None) => max_entry(s),
                (_, Some(k)) => 2 * k,
                (_, None) => max_entry(s).div_ceil(2) * 2,
            };
            Some(parse_sigma(s, letters)?)
        }
    };
    let tau = a.tau.as_deref().map(parse_tau).transpose()?;
    let polys = a.polys.as_deref().map(parse_polys).transpose()?;
    Ok(RunConfig {
        command: a.check,
        family,
        n: a.n,
        k: a.k,
        weights,
        points,
        sigma,
        tau,
        polys,
        degree_cap: Cap::parse("--degree-cap", &a.degree_cap)?,
        tensor_degree: Cap::parse("--tensor-degree", &a.tensor_degree)?,
        output: a.output,
        seed: a.seed,
        profile,
        expect_fail: a.expect_fail,
    })
}
