//! Command-line front end: homotopy tables, q-expansions, pairing matrices,
//! Anderson-dual tables and verification reports.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::adams::{
    anderson_dual_group, psi, verify_composition, verify_conjecture, verify_dual_operation, verify_self_duality,
    verify_theorem_b_with,
};
use crate::exactmath::InvertedSet;
use crate::ledger::TorsionLedger;
use crate::models::{witness, Element, ModelId, SpectrumModel};
use crate::qseries::{named_series, verify_tate_identities, SeriesDump, SERIES_NAMES};
use crate::report::OperationReport;
use crate::wpsline::{pairing_matrix, WpsConfig};

#[derive(Parser, Debug)]
#[command(name = "tmf-adams", version, about = "Adams operations on Tmf, KU, KO and Tmf(2), and their Anderson duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homotopy groups with basis labels and psi^n scalars
    Homotopy,
    /// q-expansion of a named Tate-curve series
    Qexp {
        #[arg(long, default_value = "delta")]
        series: String,
    },
    /// Serre pairing matrix at a weight
    Pairing {
        #[arg(long, default_value_t = 4)]
        w1: u32,
        #[arg(long, default_value_t = 6)]
        w2: u32,
        #[arg(long, default_value_t = 12, allow_hyphen_values = true)]
        weight: i64,
    },
    /// Anderson-dual groups against shifted homotopy
    Dualize,
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    TheoremB,
    DualOperation,
    Composition,
    SelfDuality,
    Conjecture,
    Tate,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Tmf,
    Ku,
    Ko,
    Tmf2,
    Tmf1,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = ModelArg::Tmf, global = true)]
    pub model: ModelArg,
    /// Level m of Tmf_1(m)
    #[arg(long, default_value_t = 5, global = true)]
    pub level: u64,
    /// Primes to invert, comma separated
    #[arg(long, value_delimiter = ',', global = true)]
    pub invert: Option<Vec<u64>>,
    #[arg(long, default_value_t = 5, allow_hyphen_values = true, global = true)]
    pub n: i64,
    /// Second operation index for the composition suite
    #[arg(long, default_value_t = 2, allow_hyphen_values = true, global = true)]
    pub m: i64,
    /// Degree window `lo..hi`
    #[arg(long, default_value = "-48..48", value_parser = parse_window, allow_hyphen_values = true, global = true)]
    pub window: (i64, i64),
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    pub precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Extra torsion ledger entries (JSON); defaults to $TMF_ADAMS_LEDGER
    #[arg(long, global = true)]
    pub ledger: Option<PathBuf>,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Output of one subcommand.
struct Output {
    json: serde_json::Value,
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
    notes: Vec<String>,
    failed: bool,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn cols(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn to_json<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("output serializes")
}

impl Common {
    fn model_id(&self) -> ModelId {
        match self.model {
            ModelArg::Tmf => ModelId::Tmf,
            ModelArg::Ku => ModelId::Ku,
            ModelArg::Ko => ModelId::Ko,
            ModelArg::Tmf2 => ModelId::Tmf2,
            ModelArg::Tmf1 => ModelId::Tmf1(self.level),
        }
    }

    /// `--invert` if given; otherwise `{2, 3}` and the primes of `n` for `Tmf`,
    /// nothing for the other models.
    fn base(&self) -> Result<InvertedSet, Failure> {
        match &self.invert {
            Some(p) => InvertedSet::new(p.iter().copied()).map_err(|e| Failure::Usage(e.to_string())),
            None if self.model == ModelArg::Tmf => {
                Ok(InvertedSet::inverting(6).union(&InvertedSet::inverting(self.n)))
            }
            None => Ok(InvertedSet::integers()),
        }
    }

    fn spectrum(&self) -> Result<SpectrumModel, Failure> {
        let ledger = TorsionLedger::with_overrides(self.ledger.as_deref()).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(SpectrumModel::new(self.model_id(), self.base()?).with_ledger(ledger))
    }
}

#[derive(Serialize)]
struct HomotopyRow {
    degree: i64,
    group: String,
    basis: Vec<String>,
    psi: Vec<String>,
}

fn homotopy(c: &Common) -> Result<Output, Failure> {
    let model = c.spectrum()?;
    // psi^n scalars may need n inverted
    let local = model.localized(&InvertedSet::inverting(c.n));
    let mut out = Vec::new();
    for k in c.window.0..=c.window.1 {
        let g = model.homotopy_group(k)?;
        let mut images = Vec::new();
        for b in &g.basis {
            let x = Element::basis(b, local.base());
            images.push(local.render(&psi(&local, c.n, &x)?));
        }
        out.push(HomotopyRow {
            degree: k,
            group: g.group.to_string(),
            basis: g.basis.iter().map(|b| b.label.clone()).collect(),
            psi: images,
        });
    }
    Ok(Output {
        json: to_json(&out),
        headers: cols(&["degree", "group", "basis", "psi"]),
        rows: out
            .iter()
            .map(|r| vec![r.degree.to_string(), r.group.clone(), r.basis.join("; "), r.psi.join("; ")])
            .collect(),
        notes: vec![format!("model {} over {}, psi^{}", model.id(), model.base(), c.n)],
        failed: false,
    })
}

fn qexp(c: &Common, name: &str) -> Result<Output, Failure> {
    let series = named_series(name, c.precision as usize)?
        .ok_or_else(|| Failure::Usage(format!("unknown series `{name}`; known: {}", SERIES_NAMES.join(", "))))?;
    let dump = SeriesDump::new(name, &series);
    Ok(Output {
        json: to_json(&dump),
        headers: cols(&["power", "coefficient"]),
        rows: dump.coeffs.iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect(),
        notes: vec![],
        failed: false,
    })
}

fn pairing(c: &Common, w1: u32, w2: u32, weight: i64) -> Result<Output, Failure> {
    if w1 == 0 || w2 == 0 {
        return Err(Failure::Usage("weights must be positive".into()));
    }
    let base = match &c.invert {
        Some(_) => c.base()?,
        None => InvertedSet::inverting(6),
    };
    let cfg = match (w1, w2) {
        (4, 6) => WpsConfig::elliptic(base),
        (2, 2) => WpsConfig::level_two(base),
        _ => WpsConfig::new(w1, w2, base),
    };
    let m = pairing_matrix(&cfg, weight)?;
    let mut rows = Vec::new();
    for (label, row) in m.rows.iter().zip(&m.entries) {
        let mut r = vec![label.clone()];
        r.extend(row.iter().map(|x| x.to_string()));
        rows.push(r);
    }
    let mut headers = cols(&["H0 \\ H1"]);
    headers.extend(m.cols.iter().cloned());
    Ok(Output {
        json: to_json(&m),
        headers,
        rows,
        notes: vec![format!("permutation matrix: {}", m.is_permutation())],
        failed: false,
    })
}

#[derive(Serialize)]
struct DualRow {
    degree: i64,
    anderson_dual: String,
    shifted: String,
    agrees: bool,
}

fn dualize(c: &Common) -> Result<Output, Failure> {
    let id = c.model_id();
    let wit = witness(id)?;
    if let ModelId::Tmf1(_) = id {
        let lambda = wit.lambda(c.n, &InvertedSet::integers())?;
        return Ok(Output {
            json: to_json(&wit),
            headers: cols(&["model", "shift", "witness degree", "witness", "lambda"]),
            rows: vec![vec![
                id.to_string(),
                wit.shift.to_string(),
                wit.witness_degree.to_string(),
                wit.element.clone(),
                lambda.to_string(),
            ]],
            notes: vec![],
            failed: false,
        });
    }
    let model = c.spectrum()?;
    let mut out = Vec::new();
    for k in c.window.0..=c.window.1 {
        let lhs = anderson_dual_group(&model, model.base(), k)?;
        let rhs = model.homotopy_group(k - wit.shift)?.group;
        out.push(DualRow {
            degree: k,
            anderson_dual: lhs.to_string(),
            shifted: rhs.to_string(),
            agrees: lhs == rhs,
        });
    }
    let failed = out.iter().any(|r| !r.agrees);
    Ok(Output {
        json: to_json(&out),
        headers: cols(&["degree", "pi_k I_A", "pi_{k-d}", "agrees"]),
        rows: out
            .iter()
            .map(|r| vec![r.degree.to_string(), r.anderson_dual.clone(), r.shifted.clone(), r.agrees.to_string()])
            .collect(),
        notes: vec![format!("model {} over {}, d = {}", model.id(), model.base(), wit.shift)],
        failed,
    })
}

fn verify(c: &Common, suite: Suite) -> Result<Output, Failure> {
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Tate,
            Suite::TheoremB,
            Suite::DualOperation,
            Suite::Composition,
            Suite::SelfDuality,
            Suite::Conjecture,
        ],
        s => vec![s],
    };
    let model = c.spectrum()?;
    let mut reports: Vec<OperationReport> = Vec::new();
    for s in suites {
        let r = match s {
            Suite::Tate => verify_tate_identities(c.precision as usize)?,
            Suite::TheoremB => verify_theorem_b_with(&model, c.n, c.window)?,
            Suite::DualOperation => verify_dual_operation(c.n, c.window)?,
            Suite::Composition => verify_composition(&model, c.m, c.n, c.window)?,
            Suite::SelfDuality => verify_self_duality(&model, model.base(), c.window)?,
            Suite::Conjecture => verify_conjecture(&model, c.n, c.window)?,
            Suite::All => unreachable!(),
        };
        reports.push(r);
    }
    let failed = reports.iter().any(|r| !r.passed());
    let json = match reports.as_slice() {
        [one] => to_json(one),
        many => to_json(&many),
    };
    let rows = reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |ch| {
                vec![
                    r.suite.clone(),
                    ch.degree.to_string(),
                    ch.basis.clone(),
                    ch.expected.clone(),
                    ch.got.clone(),
                    ch.status.to_string(),
                ]
            })
        })
        .collect();
    Ok(Output {
        json,
        headers: cols(&["suite", "degree", "basis", "expected", "got", "status"]),
        rows,
        notes: reports.iter().map(OperationReport::summary).collect(),
        failed,
    })
}

fn render(out: &Output, format: Format, w: &mut impl Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&out.json).expect("json value");
            writeln!(w, "{text}")
        }
        Format::Csv => {
            let mut wr = csv::Writer::from_writer(w);
            wr.write_record(&out.headers)?;
            for r in &out.rows {
                wr.write_record(r)?;
            }
            wr.flush()
        }
        Format::Table => {
            let mut width: Vec<usize> = out.headers.iter().map(|h| h.chars().count()).collect();
            for r in &out.rows {
                for (i, cell) in r.iter().enumerate() {
                    if i < width.len() {
                        width[i] = width[i].max(cell.chars().count());
                    }
                }
            }
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c:<w$}", w = width.get(i).copied().unwrap_or(0)))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(w, "{}", line(out.headers.iter().map(String::as_str).collect()))?;
            for r in &out.rows {
                writeln!(w, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
            for n in &out.notes {
                writeln!(w, "# {n}")?;
            }
            Ok(())
        }
    }
}

/// Runs the CLI on `argv` (including the program name), writing to `stdout`
/// and `stderr`. Returns the process exit code: 0 on success, 1 if any check
/// failed or the computation errored, 2 on flag errors.
pub fn run_with<I, T>(argv: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut text = e.render().to_string();
            if code == 2 && !text.contains("Usage:") {
                text = format!("{text}\n{}\n", Cli::command_usage());
            }
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    let c = &cli.common;
    let result = match &cli.command {
        Command::Homotopy => homotopy(c),
        Command::Qexp { series } => qexp(c, series),
        Command::Pairing { w1, w2, weight } => pairing(c, *w1, *w2, *weight),
        Command::Dualize => dualize(c),
        Command::Verify { suite } => verify(c, *suite),
    };
    match result {
        Ok(out) => {
            if render(&out, c.format, stdout).is_err() {
                return 1;
            }
            if c.format != Format::Table {
                for n in &out.notes {
                    let _ = writeln!(stderr, "{n}");
                }
            }
            i32::from(out.failed)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\n{}", Cli::command_usage());
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

impl Cli {
    fn command_usage() -> String {
        use clap::CommandFactory;
        Self::command().render_usage().to_string()
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tmf-adams").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn windows_parse() {
        assert_eq!(parse_window("-48..48"), Ok((-48, 48)));
        assert_eq!(parse_window("3..3"), Ok((3, 3)));
        assert!(parse_window("4..3").is_err());
        assert!(parse_window("4").is_err());
    }

    #[test]
    fn flag_errors_exit_two() {
        assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(call(&["homotopy", "--window", "5..1"]).0, 2);
        assert_eq!(call(&["qexp", "--precision", "0"]).0, 2);
        assert_eq!(call(&["homotopy", "--invert", "4"]).0, 2);
        assert_eq!(call(&["qexp", "--series", "zeta"]).0, 2);
        assert_eq!(call(&[]).0, 2);
    }

    #[test]
    fn homotopy_row_for_c4() {
        let (code, out, _) = call(&["homotopy", "--model", "tmf", "--invert", "2,3,5", "--window", "-24..24", "--n", "5"]);
        assert_eq!(code, 0);
        let row = out.lines().find(|l| l.starts_with("8 ")).unwrap();
        assert!(row.contains("c4") && row.contains("625*c4"), "{row}");
    }

    #[test]
    fn pairing_is_permutation() {
        let (code, out, _) = call(&["pairing", "--w1", "4", "--w2", "6", "--weight", "12", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["entries"], serde_json::json!([["1", "0"], ["0", "1"]]));
    }

    #[test]
    fn missing_primes_is_runtime_error() {
        let (code, _, err) = call(&["homotopy", "--invert", "5"]);
        assert_eq!(code, 1);
        assert!(err.contains("requires the primes"));
    }
}
