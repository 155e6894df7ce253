//! `flagj`: J-functions, descendant invariants and integrals on flag
//! manifolds from the command line. Output is JSON unless `--format table`.

pub mod cache;
pub mod config;
pub mod expr;
pub mod output;
pub mod suites;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use flagj_core::algebra::rational_to_string;
use flagj_core::gw::invariants_from_j;
use flagj_core::integrate::integrate;
use flagj_core::jfun::{j_function, window_stable, DegreeVector, Method};
use flagj_core::ring::{FlagShape, TowerRing};
use flagj_core::serial::{laurent_from_wire, laurent_to_wire, LaurentTermWire};
use serde::Serialize;
use thiserror::Error;

use cache::{Cache, CacheEntry, CacheKey, Lookup};
use config::Config;

pub const CACHE_ENV: &str = "FLAGJ_CACHE_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] flagj_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use flagj_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::InvalidShape(_)
                | E::InvalidDegree(_)
                | E::UnsupportedMethod(_)
                | E::Malformed(_)
                | E::NotWeylInvariant
                | E::Inhomogeneous
                | E::NotSymmetric,
            ) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "flagj", version, about = "Genus-zero J-functions of flag manifolds")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Result cache directory; overrides the FLAGJ_CACHE_DIR variable.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect a space: `grass:s,n`, `flag:a,b,...;n` or `lagrangian:n`.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// The degree-d coefficient of the J-function.
    Jfun {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        degree: Option<String>,
        #[arg(long)]
        method: Option<String>,
        /// Also confirm that widening the lift window changes nothing.
        #[arg(long)]
        check_window: bool,
    },
    /// One-point descendant invariants <tau_a(class)>_d.
    Invariant {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        degree: Option<String>,
        #[arg(long)]
        class: String,
    },
    /// Integral of a Weyl-invariant class over the space.
    Integrate {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        class: String,
    },
    /// Run a built-in verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
enum SpaceAction {
    Describe { spec: String },
}

struct Context {
    config: Config,
    cache: Option<Cache>,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct SpaceOut {
    space: String,
    flavor: String,
    dims: Vec<usize>,
    ambient: usize,
    tower_variables: Vec<String>,
    weyl_order: u64,
    positive_roots: Vec<String>,
    dim: usize,
    tower_dim: usize,
}

#[derive(Serialize)]
struct JfunOut {
    space: String,
    degree: Vec<i64>,
    terms: Vec<LaurentTermWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    window_stable: Option<bool>,
}

#[derive(Serialize)]
struct InvariantOut {
    a: i64,
    value: String,
}

#[derive(Serialize)]
struct IntegrateOut {
    value: String,
    degree: Option<u32>,
}

fn parse_shape(s: Option<String>, fallback: &Option<String>) -> Result<FlagShape, CliError> {
    let spec = s
        .or_else(|| fallback.clone())
        .ok_or_else(|| CliError::Usage("no --space given and none in the config file".into()))?;
    Ok(spec.parse()?)
}

fn parse_degree(shape: &FlagShape, s: Option<String>, fallback: &Option<String>) -> Result<DegreeVector, CliError> {
    let text = s
        .or_else(|| fallback.clone())
        .ok_or_else(|| CliError::Usage("no --degree given and none in the config file".into()))?;
    let d: DegreeVector = text.parse()?;
    Ok(DegreeVector::new(shape, &d.0)?)
}

fn root_name(shape: &FlagShape, coeffs: &[i64]) -> String {
    let pos = coeffs.iter().position(|&c| c == 1).expect("root has a +1 entry");
    let neg = coeffs.iter().position(|&c| c == -1).expect("root has a -1 entry");
    format!("{}-{}", shape.var_name(pos), shape.var_name(neg))
}

fn describe(shape: &FlagShape) -> SpaceOut {
    let ring = TowerRing::new(shape);
    SpaceOut {
        space: shape.to_string(),
        flavor: if shape.is_lagrangian() { "lagrangian" } else { "typea" }.into(),
        dims: shape.dims().to_vec(),
        ambient: shape.ambient(),
        tower_variables: (0..shape.num_vars()).map(|v| shape.var_name(v)).collect(),
        weyl_order: shape.weyl_order(),
        positive_roots: ring.roots().positive.iter().map(|r| root_name(shape, &r.0)).collect(),
        dim: shape.dim(),
        tower_dim: shape.tower_dim(),
    }
}

impl Context {
    /// `J_d` in wire form, through the cache when one is configured.
    fn j_terms(
        &mut self,
        shape: &FlagShape,
        d: &DegreeVector,
        method: Method,
    ) -> Result<Vec<LaurentTermWire>, CliError> {
        let resolved = method.resolve(shape);
        let key = CacheKey::new(shape.to_string(), &d.0, resolved.to_string());
        if let Some(cache) = &self.cache {
            match cache.load(&key) {
                Lookup::Hit(entry) => return Ok(entry.payload),
                Lookup::Miss => {}
                Lookup::Corrupt(why) => {
                    self.warnings
                        .push(format!("corrupt cache entry {} ({why}); recomputing", cache.path(&key).display()));
                }
            }
        }
        let payload = laurent_to_wire(&j_function(shape, d, resolved)?);
        if let Some(cache) = &self.cache {
            let entry = CacheEntry { key, payload: payload.clone() };
            if let Err(e) = cache.store(&entry) {
                self.warnings.push(format!("could not write cache entry: {e}"));
            }
        }
        Ok(payload)
    }

    fn execute(&mut self, command: Command) -> Result<(serde_json::Value, bool), CliError> {
        match command {
            Command::Space { action: SpaceAction::Describe { spec } } => {
                let shape: FlagShape = spec.parse()?;
                Ok((json(&describe(&shape)), true))
            }
            Command::Jfun { space, degree, method, check_window } => {
                let shape = parse_shape(space, &self.config.space)?;
                let d = parse_degree(&shape, degree, &self.config.degree)?;
                let method: Method = match method.or_else(|| self.config.method.clone()) {
                    Some(m) => m.parse().map_err(|_| CliError::Usage(format!("unknown method {m}")))?,
                    None => Method::Auto,
                };
                let terms = self.j_terms(&shape, &d, method)?;
                let window = if check_window { Some(window_stable(&shape, &d)?) } else { None };
                let ok = window.unwrap_or(true);
                let out = JfunOut { space: shape.to_string(), degree: d.0, terms, window_stable: window };
                Ok((json(&out), ok))
            }
            Command::Invariant { space, degree, class } => {
                let shape = parse_shape(space, &self.config.space)?;
                let d = parse_degree(&shape, degree, &self.config.degree)?;
                let ring = TowerRing::new(&shape);
                let gamma =
                    expr::parse_class_expr(&class, &ring).map_err(|e| CliError::Usage(format!("--class: {e}")))?;
                let terms = self.j_terms(&shape, &d, Method::Auto)?;
                let j = laurent_from_wire(shape.num_vars(), &terms)?;
                let records = invariants_from_j(&shape, &d, &j, &gamma)?;
                let out: Vec<InvariantOut> =
                    records.iter().map(|r| InvariantOut { a: r.a, value: rational_to_string(&r.value) }).collect();
                Ok((json(&out), true))
            }
            Command::Integrate { space, class } => {
                let shape = parse_shape(space, &self.config.space)?;
                let ring = TowerRing::new(&shape);
                let c = expr::parse_class_expr(&class, &ring).map_err(|e| CliError::Usage(format!("--class: {e}")))?;
                let res = integrate(&c)?;
                let out = IntegrateOut { value: rational_to_string(&res.value), degree: res.class_degree };
                Ok((json(&out), true))
            }
            Command::Verify { suite } => {
                let reports = suites::run_suite(&suite).ok_or_else(|| {
                    CliError::Usage(format!("unknown suite {suite}; one of {}", suites::SUITES.join(", ")))
                })?;
                let ok = reports.iter().all(|r| r.pass);
                Ok((json(&reports), ok))
            }
        }
    }
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("output serializes")
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match run_cli(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn run_cli(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let config = Config::load(&std::env::current_dir()?).map_err(CliError::Usage)?;
    let cache_dir = cli.cache_dir.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let cache = cache_dir.map(Cache::open).transpose()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let format = cli.format;
    let mut ctx = Context { config, cache, warnings: Vec::new() };
    let result = pool.install(|| ctx.execute(cli.command));
    for w in &ctx.warnings {
        writeln!(err, "warning: {w}")?;
    }
    let (value, ok) = result?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json renders"),
        Format::Table => output::render_table(&value),
    };
    writeln!(out, "{text}")?;
    Ok(if ok { 0 } else { 1 })
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
