//! Command-line front end: argument types, safety limits and report rendering.
//!
//! Every command yields a [`Report`] holding a text rendering, a JSON value
//! and a pass flag; `main` prints one of the two and maps the flag to the exit
//! code (0 pass, 1 fail, 2 usage or limit error).

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exact::rational::{int, parse as parse_rational, to_text};
use crate::exact::{to_falling_factorial, FFExpansion, MultiPoly, RatAlpha};
use crate::hooktab::{self, HookTableau, PermutedTableau};
use crate::partitions::{multirect_grid, partitions_of, partitions_up_to, Partition};
use crate::shifted::{self, reconstruct_multirect, AlphaMode, DiagramFunction};
use crate::{jack, stanley, symfun, zonal};

#[derive(Debug, Parser)]
#[command(name = "jackff", version, about = "Jack characters in multirectangular coordinates")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Lift the default size limits.
    #[arg(long, global = true)]
    pub unbounded: bool,
    /// Fix α to a rational value instead of keeping it symbolic.
    #[arg(long, global = true, value_parser = parse_alpha)]
    pub alpha: Option<crate::exact::Rational>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jack polynomials, characters and Kostka numbers.
    #[command(subcommand)]
    Jack(JackCmd),
    /// Evaluate or expand shifted symmetric functions.
    #[command(subcommand)]
    Shifted(ShiftedCmd),
    /// Polynomial in multirectangular coordinates via the p* basis.
    Reconstruct(ReconstructArgs),
    /// α = 1 permutation formulas.
    #[command(subcommand)]
    Stanley(StanleyCmd),
    /// α = 2 pair-partition formulas.
    #[command(subcommand)]
    Zonal(ZonalCmd),
    /// Hook tableaux, permuted tableaux and the one-part expansion.
    #[command(subcommand)]
    Hooktab(HooktabCmd),
    /// Falling-factorial positivity of α^{|μ|-μ1}·J*_μ and Ko_μ.
    VerifyConjecture(SizeArgs),
    /// Run every cross-route equality.
    Crossval(CrossvalArgs),
}

#[derive(Debug, Subcommand)]
pub enum JackCmd {
    /// Monomial and power-sum expansions of J_λ.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
    },
    /// hatK(λ, τ).
    HatK {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        tau: Partition,
    },
    /// Character and Kostka tables for partitions of n.
    Tables {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Ch,
    Ko,
    Jstar,
    /// α^{|μ|-μ1}·J*_μ.
    JstarNormalized,
    /// Shifted Schur S*_μ.
    Schur,
}

impl Function {
    pub fn diagram_function(self, mu: &Partition) -> DiagramFunction {
        match self {
            Function::Ch => DiagramFunction::ch(mu),
            Function::Ko => DiagramFunction::ko(mu),
            Function::Jstar => DiagramFunction::jstar(mu),
            Function::JstarNormalized => DiagramFunction::jstar_normalized(mu),
            Function::Schur => DiagramFunction::shifted_schur(mu),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ShiftedCmd {
    /// F_μ(λ).
    Eval {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Coefficients of F_μ in the p* basis.
    Expand {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long, value_enum)]
    pub function: Function,
    #[arg(long, value_parser = parse_partition)]
    pub mu: Partition,
    #[arg(long)]
    pub d: usize,
    /// Keep α symbolic (the default; conflicts with --alpha).
    #[arg(long, conflicts_with = "alpha")]
    pub alpha_symbolic: bool,
    /// Also emit the falling-factorial expansion and its certificate.
    #[arg(long)]
    pub ff: bool,
}

#[derive(Debug, Subcommand)]
pub enum StanleyCmd {
    /// Ch_μ from the permutation formula.
    Ch(MuD),
    /// Ko_μ from the permutation formula.
    Ko(MuD),
    /// S*_μ from the permutation formula.
    Schur(MuD),
    /// B^μ_{S,T} ≥ 0 for all μ ⊢ k and set-partition pairs.
    VerifyB {
        #[arg(long)]
        k: usize,
    },
    /// Search for a negative Σ ε(τ) over σ ∈ 𝔖_S, τ ∈ 𝔖_T with στ ∈ 𝔖_U.
    Question35 {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZonalCmd {
    /// Shifted zonal polynomial Z*_μ.
    Zstar(MuD),
    /// Ch^{(2)}_μ.
    Ch2(MuD),
    /// Ko^{(2)}_μ.
    Ko2(MuD),
    /// Types of pairs of pair-partitions against (2k)!/(z_ν 2^{ℓ(ν)}).
    Census {
        #[arg(long)]
        k: usize,
    },
    /// Search for a negative α = 2 B-coefficient.
    B2 {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum HooktabCmd {
    /// Exhaustive bijection and four-way Ko_(k) check.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Ko_(k) in the falling-factorial basis from skeletons.
    Ff {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Step-by-step Ψ (or Φ with --permuted) on a tableau such as "* *^0 / *".
    Trace {
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        permuted: bool,
    },
}

#[derive(Debug, Args)]
pub struct MuD {
    #[arg(long, value_parser = parse_partition)]
    pub mu: Partition,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    #[arg(long, default_value_t = 5)]
    pub max_size: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct CrossvalArgs {
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Corrupt one reconstructed coefficient; the run must then fail.
    #[arg(long)]
    pub perturb: bool,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_alpha(s: &str) -> Result<crate::exact::Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

/// Resolved global options.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub jobs: Option<usize>,
    pub unbounded: bool,
    pub alpha: AlphaMode,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        RunConfig {
            format: cli.format,
            jobs: cli.jobs,
            unbounded: cli.unbounded,
            alpha: cli.alpha.clone().map_or(AlphaMode::Symbolic, AlphaMode::Value),
        }
    }

    fn limit(&self, what: &str, value: usize, max: usize) -> Result<(), CliError> {
        if value > max && !self.unbounded {
            return Err(CliError::Limit(format!("{what} = {value} exceeds {max}; pass --unbounded to run anyway")));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Compute(String),
}

macro_rules! compute_err {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Compute(e.to_string())
            }
        }
    )*};
}
compute_err!(
    crate::combinatorics::CombError,
    crate::shifted::ShiftedError,
    crate::exact::ExactError,
    crate::partitions::PartitionError,
    rayon::ThreadPoolBuildError
);

impl From<hooktab::HooktabError> for CliError {
    fn from(e: hooktab::HooktabError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub pass: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { pass: true, text, json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

/// Runs a parsed command on a thread pool sized by `--jobs`.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let cfg = RunConfig::from_cli(cli);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        pool = pool.num_threads(j.max(1));
    }
    pool.build()?.install(|| dispatch(&cli.command, &cfg))
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        Command::Jack(c) => cmd_jack(c, cfg),
        Command::Shifted(c) => cmd_shifted(c, cfg),
        Command::Reconstruct(a) => cmd_reconstruct(a, cfg),
        Command::Stanley(c) => cmd_stanley(c, cfg),
        Command::Zonal(c) => cmd_zonal(c, cfg),
        Command::Hooktab(c) => cmd_hooktab(c, cfg),
        Command::VerifyConjecture(a) => cmd_verify_conjecture(a.max_size, a.d, cfg),
        Command::Crossval(a) => cmd_crossval(a.max_size, a.d, a.perturb, cfg),
    }
}

fn poly_json(p: &MultiPoly) -> Value {
    p.to_json().unwrap_or_else(|_| Value::String(p.to_text()))
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn cmd_jack(cmd: &JackCmd, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        JackCmd::Expand { shape } => {
            cfg.limit("|shape|", shape.size(), 8)?;
            let m = jack::monomial_expansion(shape);
            let p = jack::powersum_expansion(shape);
            let mut text = format!("J_{shape}\n  monomial basis:\n");
            let mut mj = serde_json::Map::new();
            for (nu, c) in &m.coeffs {
                text.push_str(&format!("    m_{nu}: {c}\n"));
                mj.insert(nu.to_string(), json!(c.to_string()));
            }
            text.push_str("  power-sum basis:\n");
            let mut pj = serde_json::Map::new();
            for (nu, c) in &p.coeffs {
                text.push_str(&format!("    p_{nu}: {c}\n"));
                pj.insert(nu.to_string(), json!(c.to_string()));
            }
            Ok(Report::ok(
                text,
                json!({"shape": parts_json(shape), "monomial": mj, "powersum": pj}),
            ))
        }
        JackCmd::HatK { lambda, tau } => {
            cfg.limit("|λ|", lambda.size(), 8)?;
            let h = jack::hat_k(lambda, tau)?;
            Ok(Report::ok(
                format!("hatK({lambda}, {tau}) = {h}"),
                json!({"lambda": parts_json(lambda), "tau": parts_json(tau), "value": h.to_string()}),
            ))
        }
        JackCmd::Tables { n } => {
            cfg.limit("n", *n, 8)?;
            let ps = partitions_of(*n);
            let mut chars = Vec::new();
            let mut kostka = Vec::new();
            for l in &ps {
                chars.push(ps.iter().map(|t| symfun::character(l, t)).collect::<Result<Vec<_>, _>>()?);
                kostka.push(ps.iter().map(|t| symfun::kostka(l, t)).collect::<Result<Vec<_>, _>>()?);
            }
            let names: Vec<String> = ps.iter().map(ToString::to_string).collect();
            let mut text = format!("partitions of {n}: {}\ncharacters χ^λ(τ), rows λ, columns τ:\n", names.join(" "));
            for (l, row) in names.iter().zip(&chars) {
                text.push_str(&format!("  {l}: {row:?}\n"));
            }
            text.push_str("Kostka numbers K_{λ,τ}:\n");
            for (l, row) in names.iter().zip(&kostka) {
                text.push_str(&format!("  {l}: {row:?}\n"));
            }
            let parts: Vec<Value> = ps.iter().map(parts_json).collect();
            Ok(Report::ok(
                text,
                json!({"n": n, "partitions": parts, "characters": chars, "kostka": kostka}),
            ))
        }
    }
}

fn cmd_shifted(cmd: &ShiftedCmd, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        ShiftedCmd::Eval { function, mu, lambda } => {
            cfg.limit("|λ|", lambda.size(), 9)?;
            let v = cfg.alpha.specialize(&function.diagram_function(mu).eval(lambda))?;
            Ok(Report::ok(
                format!("{function:?}_{mu}({lambda}) = {v}"),
                json!({"function": format!("{function:?}").to_lowercase(), "mu": parts_json(mu),
                       "lambda": parts_json(lambda), "alpha": cfg.alpha.to_string(), "value": v.to_string()}),
            ))
        }
        ShiftedCmd::Expand { function, mu } => {
            cfg.limit("|μ|", mu.size(), 6)?;
            let f = function.diagram_function(mu);
            let e = shifted::expand_in_pstar(&f, mu.size(), &cfg.alpha)?;
            let mut text = format!("{} in the p* basis (α {}):\n", f.name, cfg.alpha);
            let mut terms = serde_json::Map::new();
            for (nu, c) in &e.coeffs {
                text.push_str(&format!("  p*_{nu}: {c}\n"));
                terms.insert(nu.to_string(), json!(c.to_string()));
            }
            Ok(Report::ok(text, json!({"function": f.name, "alpha": cfg.alpha.to_string(), "coeffs": terms})))
        }
    }
}

fn ff_report(poly: &MultiPoly) -> Result<(FFExpansion, crate::exact::Certificate), CliError> {
    let ff = to_falling_factorial(poly)?;
    let cert = ff.is_nonnegative();
    Ok((ff, cert))
}

fn cmd_reconstruct(a: &ReconstructArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.limit("|μ|", a.mu.size(), 6)?;
    cfg.limit("d", a.d, 3)?;
    let f = a.function.diagram_function(&a.mu);
    let poly = reconstruct_multirect(&f, a.d, &cfg.alpha)?;
    let mut text = format!("{}(r^p), d = {}, α {}:\n  {}\n", f.name, a.d, cfg.alpha, poly.to_text());
    let mut out = json!({"function": f.name, "mu": parts_json(&a.mu), "d": a.d,
                         "alpha": cfg.alpha.to_string(), "poly": poly_json(&poly)});
    let mut pass = true;
    if a.ff {
        let (ff, cert) = ff_report(&poly)?;
        text.push_str(&format!("falling-factorial basis:\n  {}\ncertificate: {cert}\n", ff.to_text()));
        out["ff"] = ff.to_json();
        out["certificate"] = cert.to_json();
        pass = cert.is_pass();
    }
    Ok(Report { pass, text, json: out })
}

fn poly_report(label: String, poly: &MultiPoly) -> Report {
    Report::ok(format!("{label}:\n  {}", poly.to_text()), json!({"name": label, "poly": poly_json(poly)}))
}

fn cmd_stanley(cmd: &StanleyCmd, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        StanleyCmd::Ch(m) | StanleyCmd::Ko(m) | StanleyCmd::Schur(m) => {
            cfg.limit("|μ|", m.mu.size(), 6)?;
            cfg.limit("d", m.d, 3)?;
            let (name, poly) = match cmd {
                StanleyCmd::Ch(_) => ("Ch", stanley::ch1_multirect(&m.mu, m.d)?),
                StanleyCmd::Ko(_) => ("Ko", stanley::ko_multirect_sym(&m.mu, m.d)?),
                _ => ("S*", stanley::shifted_schur_multirect(&m.mu, m.d)?),
            };
            Ok(poly_report(format!("{name}_{}(r^p) at α = 1, d = {}", m.mu, m.d), &poly))
        }
        StanleyCmd::VerifyB { k } => {
            cfg.limit("k", *k, 5)?;
            let r = stanley::verify_b(*k)?;
            let neg: Vec<Value> = r
                .negative
                .iter()
                .map(|(mu, s, t, b)| json!({"mu": parts_json(mu), "S": s.to_string(), "T": t.to_string(), "B": b}))
                .collect();
            let pass = r.negative.is_empty();
            let mut text = format!("B^μ_(S,T) for k = {k}: {} cases, {} negative\n", r.cases, r.negative.len());
            for (mu, s, t, b) in &r.negative {
                text.push_str(&format!("  μ = {mu}, S = {s}, T = {t}: {b}\n"));
            }
            text.push_str(if pass { "PASS" } else { "FAIL" });
            Ok(Report {
                pass,
                text,
                json: json!({"k": k, "cases": r.cases, "negative": neg, "status": if pass {"PASS"} else {"FAIL"}}),
            })
        }
        StanleyCmd::Question35 { k } => {
            cfg.limit("k", *k, 6)?;
            let (triples, hit) = stanley::question_bad_search(*k)?;
            let (text, found) = match &hit {
                None => (format!("k = {k}: {triples} triples, no negative sum"), Value::Null),
                Some((s, t, u, v)) => (
                    format!("k = {k}: {triples} triples; negative sum {v} at S = {s}, T = {t}, U = {u}"),
                    json!({"S": s.to_string(), "T": t.to_string(), "U": u.to_string(), "sum": v}),
                ),
            };
            Ok(Report::ok(text, json!({"k": k, "triples": triples, "negative": found})))
        }
    }
}

fn cmd_zonal(cmd: &ZonalCmd, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        ZonalCmd::Zstar(m) | ZonalCmd::Ch2(m) | ZonalCmd::Ko2(m) => {
            cfg.limit("d", m.d, 3)?;
            let (name, poly) = match cmd {
                ZonalCmd::Zstar(_) => ("Z*", zonal::zstar_multirect(&m.mu, m.d, cfg.unbounded)?),
                ZonalCmd::Ch2(_) => {
                    cfg.limit("|μ|", m.mu.size(), zonal::DEFAULT_MAX_K)?;
                    ("Ch", zonal::ch2_multirect(&m.mu, m.d)?)
                }
                _ => ("Ko", zonal::ko2_multirect(&m.mu, m.d, cfg.unbounded)?),
            };
            Ok(poly_report(format!("{name}_{}(r^p) at α = 2, d = {}", m.mu, m.d), &poly))
        }
        ZonalCmd::Census { k } => {
            cfg.limit("k", *k, zonal::DEFAULT_MAX_K)?;
            let census = zonal::type_census(*k)?;
            let mut pass = true;
            let mut text = format!("types of pairs of pair-partitions of [{}]:\n", 2 * k);
            let mut rows = Vec::new();
            for nu in partitions_of(*k) {
                let got = census.get(&nu).copied().unwrap_or(0);
                let want = zonal::type_census_formula(&nu);
                let ok = num_bigint::BigInt::from(got) == want;
                pass &= ok;
                text.push_str(&format!("  {nu}: {got} (formula {want}){}\n", if ok { "" } else { "  MISMATCH" }));
                rows.push(json!({"nu": parts_json(&nu), "count": got, "formula": want.to_string()}));
            }
            text.push_str(if pass { "PASS" } else { "FAIL" });
            Ok(Report { pass, text, json: json!({"k": k, "types": rows}) })
        }
        ZonalCmd::B2 { k } => {
            cfg.limit("k", *k, 3)?;
            let (cases, hit) = zonal::b2_search(*k)?;
            let (text, found) = match &hit {
                None => (format!("k = {k}: {cases} cases, no negative coefficient"), Value::Null),
                Some((mu, v, w, c)) => (
                    format!("k = {k}: {cases} cases; negative {} at μ = {mu}, V = {v}, W = {w}", to_text(c)),
                    json!({"mu": parts_json(mu), "V": v.to_string(), "W": w.to_string(), "value": to_text(c)}),
                ),
            };
            Ok(Report::ok(text, json!({"k": k, "cases": cases, "negative": found})))
        }
    }
}

fn cmd_hooktab(cmd: &HooktabCmd, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        HooktabCmd::Verify { max_size, max_k } => {
            cfg.limit("max-size", *max_size, 7)?;
            let r = hooktab::verify_bijection(*max_size, *max_k);
            let pass = r.passed();
            let mut text = format!(
                "Ψ/Φ and four-way Ko_(k) check, |λ| ≤ {max_size}, k ≤ {max_k}: {} cases, {} hook tableaux\n",
                r.cases, r.tableaux
            );
            for f in &r.failures {
                text.push_str(&format!("  {f}\n"));
            }
            text.push_str(if pass { "PASS" } else { "FAIL" });
            Ok(Report {
                pass,
                text,
                json: json!({"max_size": max_size, "max_k": max_k, "cases": r.cases,
                             "tableaux": r.tableaux, "failures": r.failures}),
            })
        }
        HooktabCmd::Ff { k, d } => {
            cfg.limit("k", *k, 7)?;
            cfg.limit("d", *d, 3)?;
            let ff = hooktab::ko_onepart_ff(*k, *d);
            let cert = ff.is_nonnegative();
            let text = format!("Ko_({k})(r^p), d = {d}, falling-factorial basis:\n  {}\ncertificate: {cert}", ff.to_text());
            Ok(Report {
                pass: cert.is_pass(),
                text,
                json: json!({"k": k, "d": d, "ff": ff.to_json(), "certificate": cert.to_json()}),
            })
        }
        HooktabCmd::Trace { tableau, permuted } => {
            let (input, output, steps) = if *permuted {
                let t: PermutedTableau = tableau.parse()?;
                let (h, steps) = hooktab::phi_trace(&t);
                (t.to_string(), h.to_string(), steps)
            } else {
                let t: HookTableau = tableau.parse()?;
                let (p, steps) = hooktab::psi_trace(&t);
                (t.to_string(), p.to_string(), steps)
            };
            let map = if *permuted { "Φ" } else { "Ψ" };
            let mut text = format!("{map} on {input}\n");
            for (i, s) in steps.iter().enumerate() {
                text.push_str(&format!(
                    "  step {}: active ({}, {}), rule ({}): {}\n",
                    i + 1,
                    s.active.row,
                    s.active.col,
                    s.rule,
                    s.state
                ));
            }
            text.push_str(&format!("result: {output}"));
            let js: Vec<Value> = steps
                .iter()
                .map(|s| json!({"rule": s.rule, "active": [s.active.row, s.active.col], "state": s.state}))
                .collect();
            Ok(Report::ok(text, json!({"map": map, "input": input, "steps": js, "result": output})))
        }
    }
}

/// One line of [`cmd_verify_conjecture`].
#[derive(Debug, Clone)]
pub struct ConjectureRow {
    pub mu: Partition,
    pub jstar: crate::exact::Certificate,
    pub ko: crate::exact::Certificate,
    /// For one-part μ: whether the skeleton expansion equals the reconstruction.
    pub onepart_match: Option<bool>,
}

impl ConjectureRow {
    pub fn passed(&self) -> bool {
        self.jstar.is_pass() && self.ko.is_pass() && self.onepart_match != Some(false)
    }
}

/// Falling-factorial certificates for `α^{|μ|-μ1}·J*_μ` and `Ko_μ` on `d`
/// rectangles, for every `1 ≤ |μ| ≤ max_size`.
pub fn conjecture_rows(max_size: usize, d: usize) -> Result<Vec<ConjectureRow>, CliError> {
    let mus: Vec<Partition> = (1..=max_size).flat_map(partitions_of).collect();
    mus.par_iter()
        .map(|mu| {
            let js = reconstruct_multirect(&DiagramFunction::jstar_normalized(mu), d, &AlphaMode::Symbolic)?;
            let ko = reconstruct_multirect(&DiagramFunction::ko(mu), d, &AlphaMode::Symbolic)?;
            let (_, jc) = ff_report(&js)?;
            let (ko_ff, kc) = ff_report(&ko)?;
            let onepart_match = (mu.len() == 1).then(|| hooktab::ko_onepart_ff(mu.size(), d) == ko_ff);
            Ok(ConjectureRow {
                mu: mu.clone(),
                jstar: jc,
                ko: kc,
                onepart_match,
            })
        })
        .collect()
}

fn cmd_verify_conjecture(max_size: usize, d: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.limit("max-size", max_size, 6)?;
    cfg.limit("d", d, 3)?;
    let rows = conjecture_rows(max_size, d)?;
    let pass = rows.iter().all(ConjectureRow::passed);
    let mut text = format!("falling-factorial positivity, |μ| ≤ {max_size}, d = {d}\n");
    let mut js = Vec::new();
    for r in &rows {
        let one = match r.onepart_match {
            None => String::new(),
            Some(b) => format!("  skeleton: {}", if b { "match" } else { "MISMATCH" }),
        };
        text.push_str(&format!("  μ = {}: J* {}  Ko {}{one}\n", r.mu, r.jstar, r.ko));
        js.push(json!({"mu": parts_json(&r.mu), "jstar": r.jstar.to_json(), "ko": r.ko.to_json(),
                       "onepart_match": r.onepart_match}));
    }
    text.push_str(if pass { "PASS" } else { "FAIL" });
    Ok(Report {
        pass,
        text,
        json: json!({"max_size": max_size, "d": d, "status": if pass {"PASS"} else {"FAIL"}, "rows": js}),
    })
}

/// `(check name, exact match)` for every cross-route equality.
pub fn crossval_checks(max_size: usize, d: usize, perturb: bool) -> Result<Vec<(String, bool)>, CliError> {
    let mut out = Vec::new();
    if d == 0 {
        return Ok(out);
    }
    let one = AlphaMode::one();
    let two = AlphaMode::Value(int(2));
    let mut first = true;
    for mu in (1..=max_size).flat_map(partitions_of) {
        let mut rec = reconstruct_multirect(&DiagramFunction::ch(&mu), d, &one)?;
        if perturb && first {
            let m = rec.terms().next().map(|(m, _)| m.clone()).expect("Ch is nonzero");
            rec.add_term(m, RatAlpha::one());
            first = false;
        }
        out.push((format!("Ch_{mu} α=1: permutations = reconstruction"), stanley::ch1_multirect(&mu, d)? == rec));
        let rec = reconstruct_multirect(&DiagramFunction::shifted_schur(&mu), d, &one)?;
        out.push((format!("S*_{mu}: permutations = reconstruction"), stanley::shifted_schur_multirect(&mu, d)? == rec));
        if mu.size() <= 4 {
            let rec = reconstruct_multirect(&DiagramFunction::ko(&mu), d, &one)?;
            out.push((format!("Ko_{mu} α=1: permutations = reconstruction"), stanley::ko_multirect_sym(&mu, d)? == rec));
        }
        if mu.size() <= 3 {
            let ch = reconstruct_multirect(&DiagramFunction::ch(&mu), d, &two)?;
            out.push((format!("Ch_{mu} α=2: pair-partitions = reconstruction"), zonal::ch2_multirect(&mu, d)? == ch));
            let js = reconstruct_multirect(&DiagramFunction::jstar(&mu), d, &two)?;
            out.push((format!("Z*_{mu}: pair-partitions = reconstruction"), zonal::zstar_multirect(&mu, d, false)? == js));
            let ko = reconstruct_multirect(&DiagramFunction::ko(&mu), d, &two)?;
            out.push((format!("Ko_{mu} α=2: pair-partitions = reconstruction"), zonal::ko2_multirect(&mu, d, false)? == ko));
        }
        // Symbolic reconstruction against direct evaluation on small diagrams.
        let sym = reconstruct_multirect(&DiagramFunction::ko(&mu), d, &AlphaMode::Symbolic)?;
        let direct = multirect_grid(d, 2).iter().all(|m| {
            shifted::eval_on(&sym, m) == RatAlpha::from_poly(jack::ko(&mu, &m.to_partition()))
        });
        out.push((format!("Ko_{mu}: reconstruction = direct evaluation"), direct));
    }
    for lambda in partitions_up_to(max_size) {
        for k in 1..=lambda.size() {
            let ks = jack::ko(&Partition::from_unsorted(vec![k]), &lambda);
            let ok = hooktab::ko_onepart_subsets(k, &lambda) == ks
                && hooktab::ko_onepart_tableaux(k, &lambda, hooktab::Family::Hook) == ks
                && hooktab::ko_onepart_tableaux(k, &lambda, hooktab::Family::Permuted) == ks;
            out.push((format!("Ko_({k})({lambda}): four-way agreement"), ok));
        }
    }
    Ok(out)
}

fn cmd_crossval(max_size: usize, d: usize, perturb: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.limit("max-size", max_size, 5)?;
    cfg.limit("d", d, 2)?;
    let checks = crossval_checks(max_size, d, perturb)?;
    let pass = checks.iter().all(|(_, ok)| *ok);
    let mut text = format!("cross-validation, |μ| ≤ {max_size}, d = {d}: {} checks\n", checks.len());
    for (name, ok) in &checks {
        if !ok {
            text.push_str(&format!("  MISMATCH {name}\n"));
        }
    }
    text.push_str(if pass { "PASS" } else { "FAIL" });
    let js: Vec<Value> = checks.iter().map(|(n, ok)| json!({"check": n, "match": ok})).collect();
    Ok(Report {
        pass,
        text,
        json: json!({"max_size": max_size, "d": d, "status": if pass {"PASS"} else {"FAIL"}, "checks": js}),
    })
}
