//! Batch front end: problem files, command dispatch and reports.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bigraded::{
    coefficients_via_cohomology, fit_bhattacharya, BhattPolynomial, Bigraded, CohomologyReport,
    RRClosure, DEFAULT_GRID, DEFAULT_K_MAX,
};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::field::DEFAULT_CHARACTERISTIC;
use crate::hilbert::{monomial_numerator, HilbertData};
use crate::ideal::Ideal;
use crate::poly::{PolyRing, Polynomial};
use crate::reductions::{
    e11_via_product, find_complete_reduction, is_joint_reduction, multiplicity, CompleteReduction,
    MixedMultiplicity, DEFAULT_N_MAX, DEFAULT_RETRIES,
};

pub const SCHEMA_VERSION: u32 = 1;
/// Below this characteristic random searches are likely to fail.
const SMALL_FIELD: u32 = 1009;
const NON_CM_WARNING: &str = "non-CM: cohomological coefficient formulas not applicable";

/// Parsed problem description; every field comes from the file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub characteristic: u32,
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    pub cohen_macaulay: bool,
    pub dimension: Option<usize>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(skip)]
    pub seed: Option<u64>,
    #[serde(skip)]
    pub grid: Option<u32>,
    #[serde(skip)]
    pub kmax: Option<u32>,
    #[serde(skip)]
    pub nmax: Option<u32>,
    #[serde(skip)]
    pub retries: Option<usize>,
}

/// Effective bounds after merging defaults, the file and flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    pub grid: u32,
    pub kmax: u32,
    pub nmax: u32,
    pub retries: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            grid: DEFAULT_GRID,
            kmax: DEFAULT_K_MAX,
            nmax: DEFAULT_N_MAX,
            retries: DEFAULT_RETRIES,
        }
    }
}

#[derive(Deserialize)]
struct ReportInput {
    problem: ProblemFile,
    config: Config,
}

impl ProblemFile {
    /// Reads either the key-value format or a JSON report (its problem and
    /// config sections).
    pub fn parse(text: &str) -> Result<ProblemFile> {
        if text.trim_start().starts_with('{') {
            let input: ReportInput = serde_json::from_str(text)
                .map_err(|e| Error::Validation(format!("report JSON: {e}")))?;
            let c = input.config;
            return Ok(ProblemFile {
                seed: Some(c.seed),
                grid: Some(c.grid),
                kmax: Some(c.kmax),
                nmax: Some(c.nmax),
                retries: Some(c.retries),
                ..input.problem
            });
        }
        let mut p = ProblemFile {
            characteristic: DEFAULT_CHARACTERISTIC,
            variables: Vec::new(),
            relations: Vec::new(),
            cohen_macaulay: false,
            dimension: None,
            i: Vec::new(),
            j: Vec::new(),
            seed: None,
            grid: None,
            kmax: None,
            nmax: None,
            retries: None,
        };
        let mut seen: Vec<String> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Validation(format!("line {}: {msg}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key = value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if seen.iter().any(|k| k == key) {
                return Err(bad(format!("duplicate key `{key}`")));
            }
            seen.push(key.to_string());
            let number = |v: &str| -> Result<u64> {
                v.parse()
                    .map_err(|_| bad(format!("`{key}` expects an integer, got `{v}`")))
            };
            match key {
                "characteristic" => {
                    p.characteristic = u32::try_from(number(value)?)
                        .map_err(|_| bad("characteristic out of range".into()))?
                }
                "variables" => {
                    p.variables = value
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect()
                }
                "relations" => p.relations = split_list(value),
                "cohen_macaulay" => {
                    p.cohen_macaulay = match value {
                        "true" | "yes" | "1" => true,
                        "false" | "no" | "0" => false,
                        _ => {
                            return Err(bad(format!(
                                "cohen_macaulay expects true or false, got `{value}`"
                            )))
                        }
                    }
                }
                "dimension" => p.dimension = Some(number(value)? as usize),
                "I" | "i" => p.i = split_list(value),
                "J" | "j" => p.j = split_list(value),
                "seed" => p.seed = Some(number(value)?),
                "grid" => p.grid = Some(number(value)? as u32),
                "kmax" => p.kmax = Some(number(value)? as u32),
                "nmax" => p.nmax = Some(number(value)? as u32),
                "retries" => p.retries = Some(number(value)? as usize),
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }
        if p.variables.is_empty() {
            return Err(Error::Validation("missing `variables`".into()));
        }
        if p.i.is_empty() || p.j.is_empty() {
            return Err(Error::Validation(
                "both `I` and `J` need at least one generator".into(),
            ));
        }
        Ok(p)
    }

    /// Merges bounds: flags beat the file, the file beats the defaults.
    pub fn config(&self, flags: &BoundFlags) -> Config {
        let d = Config::default();
        Config {
            seed: flags.seed.or(self.seed).unwrap_or(d.seed),
            grid: flags.grid.or(self.grid).unwrap_or(d.grid),
            kmax: flags.kmax.or(self.kmax).unwrap_or(d.kmax),
            nmax: flags.nmax.or(self.nmax).unwrap_or(d.nmax),
            retries: flags.retries.or(self.retries).unwrap_or(d.retries),
        }
    }
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// A problem turned into algebra.
pub struct Problem {
    pub ctx: Arc<RingContext>,
    pub i: Ideal,
    pub j: Ideal,
    /// Normalized echo of the input.
    pub echo: ProblemFile,
}

impl Problem {
    pub fn build(file: &ProblemFile) -> Result<Problem> {
        let names: Vec<&str> = file.variables.iter().map(String::as_str).collect();
        let ring = PolyRing::with_vars(file.characteristic, &names)?;
        let parse_all = |what: &str, list: &[String]| -> Result<Vec<Polynomial>> {
            list.iter()
                .map(|s| {
                    ring.parse(s).map_err(|e| match e {
                        Error::Syntax { position, message } => Error::Syntax {
                            position,
                            message: format!("in {what} `{s}`: {message}"),
                        },
                        other => other,
                    })
                })
                .collect()
        };
        let rels = parse_all("relations", &file.relations)?;
        let ig = parse_all("I", &file.i)?;
        let jg = parse_all("J", &file.j)?;
        let dimension = match file.dimension {
            Some(d) => d,
            None if rels.iter().all(Polynomial::is_homogeneous) => hilbert_dimension(&ring, &rels),
            None => {
                return Err(Error::Validation(
                    "`dimension` is required for non-homogeneous relations".into(),
                ))
            }
        };
        let echo = ProblemFile {
            characteristic: file.characteristic,
            variables: file.variables.clone(),
            relations: rels.iter().map(|f| ring.display(f)).collect(),
            cohen_macaulay: file.cohen_macaulay,
            dimension: Some(dimension),
            i: ig.iter().map(|f| ring.display(f)).collect(),
            j: jg.iter().map(|f| ring.display(f)).collect(),
            seed: None,
            grid: None,
            kmax: None,
            nmax: None,
            retries: None,
        };
        let ctx = RingContext::new(ring, rels, file.cohen_macaulay, dimension)?;
        let i = Ideal::new(&ctx, ig);
        let j = Ideal::new(&ctx, jg);
        Ok(Problem { ctx, i, j, echo })
    }

    fn require_bigraded(&self) -> Result<()> {
        if self.ctx.dimension() != 2 {
            return Err(Error::Validation(format!(
                "bigraded commands need a 2-dimensional ring, got dimension {}",
                self.ctx.dimension()
            )));
        }
        for (name, a) in [("I", &self.i), ("J", &self.j)] {
            if !a.is_m_primary() {
                return Err(Error::NotMPrimary(format!("{name} = {a}")));
            }
        }
        Ok(())
    }
}

fn hilbert_dimension(ring: &PolyRing, rels: &[Polynomial]) -> usize {
    let gb = crate::groebner::buchberger(ring, rels);
    HilbertData::from_numerator(monomial_numerator(&gb.leading_monomials()), ring.nvars()).dimension
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Table,
    Fit,
    Rr { a: u32, b: u32 },
    Cohomology { r: u32, s: u32, both_routes: bool },
    Reduction,
    Verify,
    Hilbert,
    Report,
}

impl Command {
    fn echo(&self) -> Value {
        match self {
            Command::Table => json!({"name": "table"}),
            Command::Fit => json!({"name": "fit"}),
            Command::Rr { a, b } => json!({"name": "rr", "a": a, "b": b}),
            Command::Cohomology { r, s, both_routes } => {
                json!({"name": "cohomology", "r": r, "s": s, "both_routes": both_routes})
            }
            Command::Reduction => json!({"name": "reduction"}),
            Command::Verify => json!({"name": "verify"}),
            Command::Hilbert => json!({"name": "hilbert"}),
            Command::Report => json!({"name": "report"}),
        }
    }

    fn uses_random_search(&self) -> bool {
        !matches!(self, Command::Table | Command::Fit | Command::Hilbert)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: Value,
    pub config: Config,
    pub problem: ProblemFile,
    pub results: Value,
    pub warnings: Vec<String>,
    #[serde(skip)]
    csv: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Grid-shaped results as a table; other results as key,value rows.
    pub fn to_csv(&self) -> String {
        if let Some(csv) = &self.csv {
            return csv.clone();
        }
        let mut out = String::from("key,value\n");
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                out.push_str(&format!("{k},{}\n", csv_field(&v.to_string())));
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Command-independent switches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub force: bool,
}

/// Runs one command.
pub fn run(
    command: &Command,
    problem: &Problem,
    config: &Config,
    options: Options,
) -> Result<Report> {
    let mut warnings = Vec::new();
    let ctx = &problem.ctx;
    if command.uses_random_search() && ctx.characteristic() < SMALL_FIELD {
        warnings.push(format!(
            "characteristic {} is small; random reduction search may fail",
            ctx.characteristic()
        ));
    }
    let non_cm = !ctx.cm_declared();
    let mut csv = None;
    let results = match command {
        Command::Hilbert => serde_json::to_value(ctx.hilbert_series()?).unwrap(),
        Command::Table => {
            problem.require_bigraded()?;
            let bg = Bigraded::new(&problem.i, &problem.j)?;
            let table = bg.table(config.grid)?;
            let mut rows = String::from("r,s,B\n");
            for r in 0..=table.grid {
                for s in 0..=table.grid {
                    rows.push_str(&format!("{r},{s},{}\n", table.get(r, s)));
                }
            }
            csv = Some(rows);
            serde_json::to_value(&table).unwrap()
        }
        Command::Fit => {
            problem.require_bigraded()?;
            let bg = Bigraded::new(&problem.i, &problem.j)?;
            let poly = bg.fit(config.grid)?;
            if non_cm {
                warnings.push(NON_CM_WARNING.into());
            }
            serde_json::to_value(poly).unwrap()
        }
        Command::Reduction => {
            problem.require_bigraded()?;
            let cr = reduction(problem, config)?;
            reduction_json(problem, &cr, config)?
        }
        Command::Rr { a, b } => {
            problem.require_bigraded()?;
            if a + b == 0 {
                return Err(Error::Validation("rr needs a + b >= 1".into()));
            }
            let bg = Bigraded::new(&problem.i, &problem.j)?;
            let cr = reduction(problem, config)?;
            let closure = bg.rr_closure(*a, *b, &cr, config.kmax)?;
            let oracle = bg.rr_closure_by_products(*a, *b, config.kmax)?;
            let mut v = closure_json(&closure);
            v["routes_agree"] = json!(oracle.ideal.equals(&closure.ideal)?);
            v["reduction"] = json!([ctx.display(&cr.z1), ctx.display(&cr.z2)]);
            v
        }
        Command::Cohomology { r, s, both_routes } => {
            problem.require_bigraded()?;
            if non_cm && !options.force {
                return Err(Error::RequiresCohenMacaulay(
                    "h1 and the closed h2 formula are proven only for Cohen-Macaulay rings; pass --force".into(),
                ));
            }
            if non_cm {
                warnings.push("non-CM: formula unproven here".into());
            }
            let bg = Bigraded::new(&problem.i, &problem.j)?;
            let cr = reduction(problem, config)?;
            let poly = bg.fit(fit_grid(config))?;
            let h1 = bg.h1(*r, *s, &cr, config.kmax, options.force)?;
            let h2 = bg.h2_formula(*r, *s, &poly, &cr, config.kmax, options.force)?;
            let mut v = json!({"r": r, "s": s, "h1": h1, "h2_formula": h2});
            if *both_routes {
                let limit = bg.h2_direct_limit(*r, *s, &cr, config.kmax)?;
                v["routes_agree"] = json!(limit.value == h2.value);
                v["h2_direct_limit"] = serde_json::to_value(limit).unwrap();
            }
            v
        }
        Command::Verify => {
            problem.require_bigraded()?;
            let (v, grid_csv) = verify(problem, config, &mut warnings)?;
            csv = Some(grid_csv);
            v
        }
        Command::Report => {
            problem.require_bigraded()?;
            let hilbert = if ctx.relations_homogeneous() {
                serde_json::to_value(ctx.hilbert_series()?).unwrap()
            } else {
                Value::Null
            };
            let bg = Bigraded::new(&problem.i, &problem.j)?;
            let table = bg.table(fit_grid(config))?;
            let cr = reduction(problem, config)?;
            let (mut v, grid_csv) = verify(problem, config, &mut warnings)?;
            csv = Some(grid_csv);
            v["hilbert"] = hilbert;
            v["table"] = serde_json::to_value(&table).unwrap();
            v["reduction"] = reduction_json(problem, &cr, config)?;
            v["multiplicities"] = json!({
                "I": multiplicity(&problem.i)?,
                "J": multiplicity(&problem.j)?,
                "IJ": multiplicity(&problem.i.product(&problem.j)?)?,
            });
            v
        }
    };
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: command.echo(),
        config: *config,
        problem: problem.echo.clone(),
        results,
        warnings,
        csv,
    })
}

fn fit_grid(config: &Config) -> u32 {
    config.grid.max(DEFAULT_GRID)
}

fn reduction(problem: &Problem, config: &Config) -> Result<CompleteReduction> {
    find_complete_reduction(
        &problem.i,
        &problem.j,
        config.seed,
        config.retries,
        config.nmax,
    )
}

fn reduction_json(problem: &Problem, cr: &CompleteReduction, config: &Config) -> Result<Value> {
    let d = |f: &Polynomial| problem.ctx.display(f);
    let joint_a = is_joint_reduction(&cr.x1, &cr.y2, &problem.i, &problem.j, config.nmax)?;
    let joint_b = is_joint_reduction(&cr.x2, &cr.y1, &problem.i, &problem.j, config.nmax)?;
    Ok(json!({
        "x1": d(&cr.x1), "x2": d(&cr.x2), "y1": d(&cr.y1), "y2": d(&cr.y2),
        "z1": d(&cr.z1), "z2": d(&cr.z2),
        "verified_n": cr.verified_n,
        "seed": cr.seed,
        "attempts": cr.attempts,
        "joint_reduction_x1_y2": joint_a,
        "joint_reduction_x2_y1": joint_b,
    }))
}

fn closure_json(c: &RRClosure) -> Value {
    json!({
        "a": c.a,
        "b": c.b,
        "generators": c.ideal.generators().iter().map(|g| c.ideal.ring().display(g)).collect::<Vec<_>>(),
        "colength": c.colength,
        "k_stab": c.k_stab,
        "is_closed": c.is_closed,
    })
}

fn cohomology_csv(report: &CohomologyReport) -> String {
    let mut out =
        String::from("r,s,B,P,rr_colength,h1,h2_formula,h2_limit,h2_k_stab,euler_residual\n");
    for c in &report.cells {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            c.r,
            c.s,
            c.b,
            c.p,
            c.rr_colength,
            c.h1,
            c.h2_formula,
            c.h2_limit,
            c.h2_k_stab,
            c.euler_residual
        ));
    }
    out
}

/// Euler residuals on the grid, coefficient formulas against the fit, and
/// the three routes to `e11`.
fn verify(
    problem: &Problem,
    config: &Config,
    warnings: &mut Vec<String>,
) -> Result<(Value, String)> {
    let ctx = &problem.ctx;
    let bg = Bigraded::new(&problem.i, &problem.j)?;
    let poly: BhattPolynomial = fit_bhattacharya(&bg.table(fit_grid(config))?)?;
    let cr = reduction(problem, config)?;
    let report = bg.euler_check(config.grid, &poly, &cr, config.kmax)?;
    if report.formulas_unproven {
        warnings.push(NON_CM_WARNING.into());
    }
    let residuals: Vec<Vec<i64>> = (0..=config.grid)
        .map(|r| {
            (0..=config.grid)
                .map(|s| report.cell(r, s).unwrap().euler_residual)
                .collect()
        })
        .collect();
    let coefficients = if config.grid >= 2 {
        let c = coefficients_via_cohomology(&report)?;
        let agree = [c.e00, c.e10, c.e01, c.e20, c.e02]
            == [poly.e00, poly.e10, poly.e01, poly.e20, poly.e02];
        json!({"via_cohomology": c, "agree_with_fit": agree})
    } else {
        warnings.push("grid < 2: coefficient formulas need the cells up to (2,0) and (0,2)".into());
        Value::Null
    };
    let joint = |a: &Polynomial, b: &Polynomial| -> Result<u64> {
        Ok(multiplicity(&Ideal::new(ctx, vec![a.clone(), b.clone()]))?.value)
    };
    let e11 = MixedMultiplicity {
        via_joint: joint(&cr.x1, &cr.y2)?,
        via_joint_swapped: joint(&cr.x2, &cr.y1)?,
        via_fit: poly.e11,
        via_product: e11_via_product(&problem.i, &problem.j)?,
    };
    let e11_agree = e11.via_joint == e11.via_joint_swapped
        && e11.via_joint as i64 == e11.via_fit
        && e11.via_fit == e11.via_product;
    let value = json!({
        "fit": poly,
        "residuals": residuals,
        "all_residuals_zero": report.max_abs_residual() == 0,
        "coefficients": coefficients,
        "e11": e11,
        "e11_routes_agree": e11_agree,
        "cohomology": report,
    });
    Ok((value, cohomology_csv(&report)))
}

/// Bounds that may appear both in the file and as flags.
#[derive(Args, Clone, Debug, Default)]
pub struct BoundFlags {
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub grid: Option<u32>,
    #[arg(long, global = true)]
    pub kmax: Option<u32>,
    #[arg(long, global = true)]
    pub nmax: Option<u32>,
    #[arg(long, global = true)]
    pub retries: Option<usize>,
}

#[derive(Parser, Debug)]
#[command(
    name = "bigrees",
    version,
    about = "Bhattacharya polynomials, reductions and bigraded local cohomology"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(flatten)]
    bounds: BoundFlags,
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    #[arg(long, global = true)]
    csv: bool,
    /// Evaluate formulas outside the Cohen-Macaulay setting.
    #[arg(long, global = true)]
    force: bool,
    /// Print the elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Bhattacharya table λ(R/I^rJ^s) on the grid.
    Table,
    /// Exact Bhattacharya polynomial.
    Fit,
    /// Ratliff-Rush closure of I^aJ^b.
    Rr {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// h1 and h2 at one bidegree.
    Cohomology {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        both_routes: bool,
    },
    /// Find and verify a complete reduction.
    Reduction,
    /// Euler residuals, coefficient formulas and mixed multiplicities.
    Verify,
    /// Hilbert series of S/L.
    Hilbert,
    /// Everything.
    Report,
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = std::time::Instant::now();
    let code = match execute(&cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if cli.timing {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    code
}

fn execute(cli: &Cli) -> Result<String> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Error::Validation("--input FILE is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    let file = ProblemFile::parse(&text)?;
    let config = file.config(&cli.bounds);
    let problem = Problem::build(&file)?;
    let command = match &cli.command {
        CliCommand::Table => Command::Table,
        CliCommand::Fit => Command::Fit,
        CliCommand::Rr { a, b } => Command::Rr { a: *a, b: *b },
        CliCommand::Cohomology { r, s, both_routes } => Command::Cohomology {
            r: *r,
            s: *s,
            both_routes: *both_routes,
        },
        CliCommand::Reduction => Command::Reduction,
        CliCommand::Verify => Command::Verify,
        CliCommand::Hilbert => Command::Hilbert,
        CliCommand::Report => Command::Report,
    };
    let report = run(&command, &problem, &config, Options { force: cli.force })?;
    Ok(if cli.csv {
        report.to_csv()
    } else {
        report.to_json()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
# k[x,y,z]/(x^2, xy), I = J = m
characteristic = 32003
variables = x, y, z
relations = x^2, x*y
cohen_macaulay = false
dimension = 2
I = x, y, z
J = x, y, z
";

    #[test]
    fn parses_key_value() {
        let p = ProblemFile::parse(EXAMPLE).unwrap();
        assert_eq!(p.variables, vec!["x", "y", "z"]);
        assert_eq!(p.relations, vec!["x^2", "x*y"]);
        assert_eq!(p.dimension, Some(2));
        assert_eq!(p.config(&BoundFlags::default()), Config::default());
        let flags = BoundFlags {
            grid: Some(3),
            ..Default::default()
        };
        assert_eq!(p.config(&flags).grid, 3);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(ProblemFile::parse("variables = x\nI = x\n").is_err());
        assert!(ProblemFile::parse("variables = x\nI = x\nJ = x\nfoo = 1\n").is_err());
        assert!(ProblemFile::parse("variables = x\nvariables = y\nI = x\nJ = x\n").is_err());
        let p = ProblemFile::parse("variables = x, y\nI = x, w\nJ = x, y\n").unwrap();
        assert!(matches!(Problem::build(&p), Err(Error::UnknownVariable(_))));
        let p = ProblemFile::parse("characteristic = 12\nvariables = x\nI = x\nJ = x\n").unwrap();
        assert_eq!(Problem::build(&p).err().unwrap().exit_code(), 2);
    }

    #[test]
    fn dimension_defaults_to_hilbert() {
        let p = ProblemFile::parse("variables = x, y\nI = x, y\nJ = x, y\n").unwrap();
        assert_eq!(Problem::build(&p).unwrap().ctx.dimension(), 2);
    }

    #[test]
    fn hilbert_command() {
        let problem = Problem::build(&ProblemFile::parse(EXAMPLE).unwrap()).unwrap();
        let rep = run(
            &Command::Hilbert,
            &problem,
            &Config::default(),
            Options::default(),
        )
        .unwrap();
        assert_eq!(rep.results["numerator"], json!([1, 1, -1]));
        assert_eq!(rep.results["e1"], json!(-1));
    }

    #[test]
    fn fit_warns_outside_cm() {
        let problem = Problem::build(&ProblemFile::parse(EXAMPLE).unwrap()).unwrap();
        let rep = run(
            &Command::Fit,
            &problem,
            &Config::default(),
            Options::default(),
        )
        .unwrap();
        assert_eq!(rep.results["e00"], json!(-1));
        assert_eq!(rep.warnings, vec![NON_CM_WARNING.to_string()]);
        let err = run(
            &Command::Cohomology {
                r: 0,
                s: 0,
                both_routes: false,
            },
            &problem,
            &Config::default(),
            Options::default(),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn not_m_primary_exit_code() {
        let p = ProblemFile::parse("variables = x, y\ncohen_macaulay = true\nI = x\nJ = x, y\n")
            .unwrap();
        let problem = Problem::build(&p).unwrap();
        let err = run(
            &Command::Table,
            &problem,
            &Config::default(),
            Options::default(),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn report_json_reparses() {
        let problem = Problem::build(&ProblemFile::parse(EXAMPLE).unwrap()).unwrap();
        let config = Config {
            grid: 2,
            ..Config::default()
        };
        let rep = run(&Command::Hilbert, &problem, &config, Options::default()).unwrap();
        let again = ProblemFile::parse(&rep.to_json()).unwrap();
        assert_eq!(again.config(&BoundFlags::default()), config);
        let problem2 = Problem::build(&again).unwrap();
        let rep2 = run(
            &Command::Hilbert,
            &problem2,
            &again.config(&BoundFlags::default()),
            Options::default(),
        )
        .unwrap();
        assert_eq!(rep.to_json(), rep2.to_json());
    }
}
