//! The `nakayama-udr` command line: argument parsing, dispatch and output.

pub mod brauer;
pub mod record;

use crate::deformation::{udr_presentation, verify_lift_relations, verify_normalized, verify_presentation, UniversalLift};
use crate::error::{Error, Result};
use crate::nakayama::{projective_check, NakayamaSpec, UniserialModule};
use crate::oracle::{check_centralizer_lifting, check_representability, tangent_report, OracleCaps};
use crate::report::{Check, Report};
use crate::ring::{ArtinTestRing, CoefficientMode, SmallExtension};
use crate::structured::{j_ideal, presentation_context, verify_power_lemma};
use brauer::{brauer_check, BrauerTreeSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use record::{BrauerInput, InputEcho, ResultRecord};
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nakayama-udr", version, about = "Universal deformation rings of modules over self-injective Nakayama algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print passing checks too.
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Presentation of R(V) for one module.
    Ring(RingArgs),
    /// Presentations for every indecomposable module of N(e, l).
    Table(TableArgs),
    /// Run a verification grid.
    Verify(VerifyArgs),
    /// Brute-force checks of the deformation functor over finite test rings.
    Oracle(OracleArgs),
    /// Deformation rings for a Brauer tree algebra.
    Brauer(BrauerArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    /// Number of vertices.
    #[arg(long)]
    pub e: Option<usize>,
    /// Length of the indecomposable projectives.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Vertex of the top composition factor.
    #[arg(long, default_value_t = 1)]
    pub top: usize,
    /// Length of the module.
    #[arg(long)]
    pub len: Option<usize>,
}

impl ModuleArgs {
    fn module(&self) -> Result<UniserialModule> {
        let (Some(e), Some(ell), Some(len)) = (self.e, self.ell, self.len) else {
            return Err(Error::Domain("a module needs --e, --ell and --len".into()));
        };
        UniserialModule::new(NakayamaSpec::new(e, ell)?, self.top, len)
    }
}

#[derive(Debug, Clone, Args)]
pub struct ModeArgs {
    /// Work over F_p.
    #[arg(long)]
    pub p: Option<u64>,
    /// Work over Q.
    #[arg(long, conflicts_with = "p")]
    pub rational: bool,
}

impl ModeArgs {
    fn mode(&self, default: CoefficientMode) -> Result<CoefficientMode> {
        match (self.p, self.rational) {
            (Some(p), _) => CoefficientMode::Prime(p).validate(),
            (None, true) => Ok(CoefficientMode::Rational),
            (None, false) => Ok(default),
        }
    }
}

fn mode_name(mode: CoefficientMode) -> String {
    match mode {
        CoefficientMode::Integer => "integer".into(),
        CoefficientMode::Rational => "rational".into(),
        CoefficientMode::Prime(p) => format!("p={p}"),
    }
}

#[derive(Debug, Args)]
pub struct RingArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    #[command(flatten)]
    pub mode: ModeArgs,
    /// Number of edges of a Brauer tree (replaces --e/--ell/--len).
    #[arg(long, conflicts_with_all = ["e", "ell", "len"])]
    pub brauer_edges: Option<usize>,
    /// Multiplicity of the exceptional vertex.
    #[arg(long, requires = "brauer_edges")]
    pub multiplicity: Option<usize>,
    /// Distance d_V from the boundary of the stable component.
    #[arg(long, requires = "brauer_edges")]
    pub distance: Option<usize>,
    /// Also verify the universal lift.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub e: usize,
    #[arg(long)]
    pub ell: usize,
    #[command(flatten)]
    pub mode: ModeArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Grid {
    /// e <= 3, l <= 9.
    Small,
    /// e <= 4, l <= 12.
    Full,
}

impl Grid {
    fn bounds(self) -> (usize, usize) {
        match self {
            Grid::Small => (3, 9),
            Grid::Full => (4, 12),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verify every module in a grid of algebras.
    #[arg(long, value_enum)]
    pub grid: Option<Grid>,
    /// Verify the matrix-power lemma.
    #[arg(long)]
    pub power_lemma: bool,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 10)]
    pub nu_max: usize,
    /// Negative control: build the lifts over the smaller ideal J_n(m_V + 1).
    #[arg(long)]
    pub perturb: bool,
    #[command(flatten)]
    pub mode: ModeArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Test ring: field, dual-numbers, u3, u4, xy2 or xy-squares.
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    /// Compare |Def(V, F_p[eps])| with dim Ext^1.
    #[arg(long)]
    pub tangent: bool,
    /// Check the centralizer lifting property on the small-extension catalog.
    #[arg(long)]
    pub centralizer: bool,
    /// Largest number of candidates per enumeration.
    #[arg(long, default_value_t = 1 << 24)]
    pub cap: u64,
}

#[derive(Debug, Args)]
pub struct BrauerArgs {
    #[arg(long)]
    pub edges: usize,
    #[arg(long)]
    pub multiplicity: usize,
    /// One distance; all valid distances when omitted.
    #[arg(long)]
    pub distance: Option<usize>,
}

/// Exit code for a library error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap { .. } | Error::NotArtinianWithinBound { .. } => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn module_echo(command: &str, v: &UniserialModule, mode: String) -> InputEcho {
    InputEcho {
        command: command.into(),
        e: Some(v.spec().e()),
        ell: Some(v.spec().ell()),
        top: Some(v.top()),
        len: Some(v.len()),
        mode,
        ..Default::default()
    }
}

/// Folds a report into one check named `name`.
fn summarize(name: String, report: &Report) -> Check {
    let detail = match report.failures().next() {
        Some(c) => format!("{}: {}", c.name, c.detail),
        None => format!("{} checks", report.len()),
    };
    Check { name, pass: report.passed(), detail }
}

fn presentation_record(command: &str, v: &UniserialModule, mode: CoefficientMode) -> Result<ResultRecord> {
    let started = Instant::now();
    let pres = udr_presentation(v, mode)?;
    let mut rec = ResultRecord::new(module_echo(command, v, mode_name(mode))).with_presentation(&pres);
    rec.time("presentationMicros", started);
    Ok(rec)
}

pub fn cmd_ring(a: &RingArgs) -> Result<Vec<ResultRecord>> {
    let mode = a.mode.mode(CoefficientMode::Integer)?;
    let (v, tree) = match a.brauer_edges {
        Some(edges) => {
            let (Some(m), Some(d)) = (a.multiplicity, a.distance) else {
                return Err(Error::Domain("--brauer-edges needs --multiplicity and --distance".into()));
            };
            let tree = BrauerTreeSpec::new(edges, m)?;
            (tree.module_at(d)?, Some(BrauerInput { edges, multiplicity: m, distance: d }))
        }
        None => (a.module.module()?, None),
    };
    let mut rec = presentation_record("ring", &v, mode)?;
    rec.input.brauer = tree;
    let started = Instant::now();
    rec.add_report(verify_presentation(&v, mode)?);
    if let Some(b) = tree {
        rec.add_report(brauer_check(b.edges, b.multiplicity, b.distance)?);
    }
    if a.verify && !v.is_projective() {
        let norm = v.normalize()?.module;
        if norm.n() >= 1 {
            let lift_mode = if mode == CoefficientMode::Integer { CoefficientMode::Rational } else { mode };
            rec.add_report(verify_normalized(v.spec(), norm.n(), norm.i(), lift_mode)?);
        }
    }
    rec.time("verificationMicros", started);
    Ok(vec![rec])
}

pub fn cmd_table(a: &TableArgs) -> Result<Vec<ResultRecord>> {
    let mode = a.mode.mode(CoefficientMode::Integer)?;
    let spec = NakayamaSpec::new(a.e, a.ell)?;
    let mut out = Vec::new();
    for top in 1..=spec.e() {
        for len in 1..=spec.ell() {
            let v = UniserialModule::new(spec, top, len)?;
            let mut rec = presentation_record("table", &v, mode)?;
            if !v.is_projective() {
                let w = v.syzygy()?;
                let pw = udr_presentation(&w, mode)?;
                let same = rec.presentation.as_ref().map(|p| p.generators == pw.generator_strings()).unwrap_or(false);
                rec.checks.push(Check {
                    name: "Omega partner shares the presentation".into(),
                    pass: same && pw.n == v.normalize()?.module.n(),
                    detail: format!("Omega V = top {} len {}", w.top(), w.len()),
                });
            }
            out.push(rec);
        }
    }
    Ok(out)
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Vec<ResultRecord>> {
    let mode = a.mode.mode(CoefficientMode::Rational)?;
    let grid = match (a.grid, a.power_lemma) {
        (None, false) => Some(Grid::Small),
        (g, _) => g,
    };
    let mut rec = ResultRecord::new(InputEcho { command: "verify".into(), mode: mode_name(mode), ..Default::default() });
    if a.power_lemma {
        let started = Instant::now();
        for n in 1..=a.n_max {
            rec.checks.push(summarize(format!("power lemma n={n} nu<={}", a.nu_max), &verify_power_lemma(n, a.nu_max)?));
        }
        rec.time("powerLemmaMicros", started);
    }
    if let Some(g) = grid {
        let started = Instant::now();
        let (e_max, ell_max) = g.bounds();
        let p = match mode {
            CoefficientMode::Prime(p) => p,
            _ => 2,
        };
        for e in 1..=e_max {
            for ell in 2..=ell_max {
                let spec = NakayamaSpec::new(e, ell)?;
                rec.checks.push(summarize(format!("{spec}/projectives"), &projective_check(spec, p)?));
                let mut done = BTreeSet::new();
                for top in 1..=e {
                    for len in 1..ell {
                        let v = UniserialModule::new(spec, top, len)?;
                        rec.checks.push(summarize(format!("{spec}/top {top} len {len}"), &verify_presentation(&v, mode)?));
                        let norm = v.normalize()?.module;
                        let (n, i) = (norm.n(), norm.i());
                        if n == 0 || !done.insert((n, i)) {
                            continue;
                        }
                        let report = if a.perturb {
                            perturbed_relations(spec, n, i, mode)?
                        } else {
                            verify_normalized(spec, n, i, mode)?
                        };
                        rec.checks.push(summarize(format!("{spec}/lift n={n} i={i}"), &report));
                    }
                }
            }
        }
        rec.time("gridMicros", started);
    }
    Ok(vec![rec])
}

/// The lift relations over `J_n(m_V + 1)`, which must fail.
fn perturbed_relations(spec: NakayamaSpec, n: usize, i: usize, mode: CoefficientMode) -> Result<Report> {
    let ctx = presentation_context(n, mode);
    let m = crate::deformation::m_v(spec.mu(), spec.ell_prime(), i);
    let lift = UniversalLift::with_ideal(spec, n, i, &j_ideal(&ctx, m + 1)?)?;
    verify_lift_relations(&lift)
}

pub fn cmd_oracle(a: &OracleArgs) -> Result<Vec<ResultRecord>> {
    let v = a.module.module()?;
    let mode = CoefficientMode::Prime(a.p).validate()?;
    let caps = OracleCaps { candidates: a.cap, ..OracleCaps::default() };
    let mut rec = presentation_record("oracle", &v, mode)?;
    rec.input.ring = a.ring.clone();
    let pres = udr_presentation(&v, mode)?;
    let started = Instant::now();
    let rings = match (&a.ring, a.tangent || a.centralizer) {
        (Some(name), _) => vec![ArtinTestRing::by_name(name, a.p)?],
        (None, true) => Vec::new(),
        (None, false) => ArtinTestRing::catalog(a.p)?,
    };
    for r in &rings {
        rec.add_report(prefixed(r.name(), check_representability(&v, &pres, r, caps)?));
    }
    if a.tangent {
        if v.is_projective() {
            rec.checks.push(Check {
                name: "tangent dimension equals dim Ext^1".into(),
                pass: crate::oracle::tangent_dimension(&v, a.p, caps)? == 0,
                detail: "projective: no first-order deformations".into(),
            });
        } else {
            rec.add_report(tangent_report(&v, a.p, caps)?);
        }
    }
    if a.centralizer {
        for ext in SmallExtension::catalog(a.p)? {
            rec.add_report(check_centralizer_lifting(&v, &ext, caps)?);
        }
    }
    rec.time("oracleMicros", started);
    Ok(vec![rec])
}

fn prefixed(prefix: &str, report: Report) -> Report {
    let mut out = Report::new();
    out.extend_prefixed(prefix, report);
    out
}

pub fn cmd_brauer(a: &BrauerArgs) -> Result<Vec<ResultRecord>> {
    let tree = BrauerTreeSpec::new(a.edges, a.multiplicity)?;
    let distances: Vec<usize> = match a.distance {
        Some(d) => vec![d],
        None => (0..=tree.max_distance()).collect(),
    };
    let mut out = Vec::new();
    for d in distances {
        let v = tree.module_at(d)?;
        let mut rec = presentation_record("brauer", &v, CoefficientMode::Integer)?;
        rec.input.brauer = Some(BrauerInput { edges: a.edges, multiplicity: a.multiplicity, distance: d });
        rec.add_report(brauer_check(a.edges, a.multiplicity, d)?);
        out.push(rec);
    }
    Ok(out)
}

fn render_table_row(rec: &ResultRecord) -> String {
    let p = rec.presentation.as_ref().expect("table rows carry a presentation");
    let flag = match rec.checks.first() {
        Some(c) if c.pass => format!("  ~ {}", c.detail),
        Some(c) => format!("  FAIL {}", c.detail),
        None => "  projective".into(),
    };
    format!(
        "top {:>2} len {:>2}  n={} m_V={:<2} dim={:<3} {}{flag}",
        rec.input.top.unwrap_or(0),
        rec.input.len.unwrap_or(0),
        p.n,
        p.m_v.map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
        p.k_dimension,
        p.ring
    )
}

fn execute(cli: &Cli) -> Result<Vec<ResultRecord>> {
    match &cli.command {
        Command::Ring(a) => cmd_ring(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Brauer(a) => cmd_brauer(a),
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let records = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return error_code(&e);
        }
    };
    let written = if cli.json {
        let json = match records.as_slice() {
            [one] if !matches!(cli.command, Command::Table(_) | Command::Brauer(_)) => serde_json::to_string_pretty(one),
            many => serde_json::to_string_pretty(many),
        };
        writeln!(out, "{}", json.expect("records serialize"))
    } else if matches!(cli.command, Command::Table(_)) {
        let mut text = String::new();
        if let Some(r) = records.first() {
            text.push_str(&format!("N({}, {})  {} modules\n", r.input.e.unwrap_or(0), r.input.ell.unwrap_or(0), records.len()));
        }
        for r in &records {
            text.push_str(&render_table_row(r));
            text.push('\n');
        }
        write!(out, "{text}")
    } else {
        let verbose = cli.verbose || !matches!(cli.command, Command::Verify(_));
        let text: String = records.iter().map(|r| r.render(verbose)).collect();
        write!(out, "{text}")
    };
    if written.is_err() {
        return EXIT_FAILURE;
    }
    if records.iter().all(|r| r.passed()) {
        EXIT_PASS
    } else {
        EXIT_FAILURE
    }
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
