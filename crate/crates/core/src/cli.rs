//! Command-line front end. [`run`] returns the text to print and the exit
//! status instead of touching the process, so it can be driven from tests.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::campaign::{run_campaign, CampaignConfig};
use crate::diagram::PlanarDiagram;
use crate::error::Error;
use crate::hecke::{Basis, HeckeElement};
use crate::knitted::{eval_hecke, verify_theorem, KnittedDiagram};
use crate::laurent::{LaurentVZ, LaurentZ, PolyJson};
use crate::par;
use crate::skein::{extreme_coeffs, homfly_framed, mfw_check, mp_vanishing, parity_check};
use crate::table::render_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "knitweave", version, about = "Framed HOMFLY polynomials of braid closures and knitted diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Ppb,
    Npb,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Braid word, comma-separated signed generator indices
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["pd", "knitted"])]
    pub braid: Option<String>,
    /// Strand count for --braid (defaults to one more than the largest generator)
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
    /// PD code file
    #[arg(long, conflicts_with = "knitted")]
    pub pd: Option<PathBuf>,
    /// Knitted diagram JSON file
    #[arg(long)]
    pub knitted: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Framed and unframed HOMFLY polynomials with the Seifert-circle checks
    Homfly {
        #[command(flatten)]
        input: Input,
        /// Prefix a positive full twist to every braid box
        #[arg(long)]
        ft: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check H_-(D) = (-1)^(s-1) H_+(FT D) for a knitted diagram
    VerifyFt {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Perturb one side of the comparison (negative control)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Expand a braid word in the Hecke algebra
    HeckeExpand {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, value_enum, default_value_t = BasisArg::Ppb)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seeded randomized campaign over braid closures and knitted templates
    RandomTest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_boxes: usize,
        #[arg(long, default_value_t = 3)]
        max_strands: usize,
        #[arg(long, default_value_t = 4)]
        max_word_len: usize,
    },
    /// Render a polynomial JSON file (or `homfly --format json` output) as a grid
    Table {
        /// Input file; `-` reads standard input
        path: PathBuf,
    },
}

/// What a command produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, passed: bool) -> Self {
        Self { stdout, stderr: String::new(), code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED } }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {message}\n"), code: EXIT_BAD_INPUT }
    }
}

/// Parses `args` (program name first) and runs the command. `stdin` is read
/// only by `table -`.
pub fn run<I, S>(args: I, stdin: impl FnOnce() -> std::io::Result<String> + Send) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, ..Default::default() }
            } else {
                Outcome { stderr: text, code, ..Default::default() }
            };
        }
    };
    let threads = std::env::var("KNITWEAVE_THREADS").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    par::with_threads(threads, || execute(cli.command, stdin))
}

fn execute(command: Command, stdin: impl FnOnce() -> std::io::Result<String> + Send) -> Outcome {
    match command {
        Command::Homfly { input, ft, format } => cmd_homfly(&input, ft, format),
        Command::VerifyFt { input, format, inject_fault } => cmd_verify_ft(&input, format, inject_fault),
        Command::HeckeExpand { braid, strands, basis, format } => cmd_hecke_expand(&braid, strands, basis, format),
        Command::RandomTest { seed, count, max_boxes, max_strands, max_word_len } => {
            cmd_random_test(&CampaignConfig { seed, count, max_boxes, max_strands, max_word_len })
        }
        Command::Table { path } => {
            let text = if path.as_os_str() == "-" { stdin() } else { std::fs::read_to_string(&path) };
            match text {
                Ok(t) => cmd_table(&t),
                Err(e) => Outcome::input_error(format!("{}: {e}", path.display())),
            }
        }
    }
}

fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    let n = match strands {
        Some(n) => n,
        None => {
            let probe = BraidWord::parse(usize::MAX / 2, text)?;
            probe.letters().iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1)
        }
    };
    BraidWord::parse(n, text)
}

enum Source {
    Pd(PlanarDiagram),
    Knitted(KnittedDiagram),
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Source, Error> {
    if let Some(text) = &input.braid {
        return Ok(Source::Knitted(KnittedDiagram::braid_closure(&parse_braid(text, input.strands)?)));
    }
    if let Some(path) = &input.pd {
        return Ok(Source::Pd(PlanarDiagram::parse_pd(&read(path)?)?));
    }
    if let Some(path) = &input.knitted {
        return Ok(Source::Knitted(KnittedDiagram::from_json_str(&read(path)?)?));
    }
    Err(Error::Format("one of --braid, --pd or --knitted is required".into()))
}

fn z_json(p: &LaurentZ) -> Value {
    serde_json::to_value(LaurentVZ::from_z(p, 0).to_json()).expect("plain data")
}

/// `homfly`: polynomials, Seifert data and bound checks.
pub fn cmd_homfly(input: &Input, ft: bool, format: Format) -> Outcome {
    let computed = load(input).and_then(|src| match src {
        Source::Pd(d) => {
            if ft {
                return Err(Error::Format("--ft needs a braid or knitted input".into()));
            }
            let h = homfly_framed(&d)?;
            Ok((d, h))
        }
        Source::Knitted(k) => {
            let k = if ft { k.ft() } else { k };
            let d = k.compile()?;
            let h = eval_hecke(&k)?;
            Ok((d, h))
        }
    });
    let (d, framed) = match computed {
        Ok(x) => x,
        Err(e) => return Outcome::input_error(e),
    };
    let s = d.seifert_circles().count;
    let writhe = d.writhe();
    let components = d.component_count();
    let unframed = framed.shift(writhe, 0);
    let mfw = mfw_check(&framed, s);
    let parity = parity_check(&framed, s, components);
    let (h_minus, h_plus) = extreme_coeffs(&framed, s);
    let (plus_zero, minus_zero) = mp_vanishing(&d);
    let mp = (!plus_zero || h_plus.is_zero()) && (!minus_zero || h_minus.is_zero());
    let passed = mfw && parity && mp;
    let ok = |b: bool| if b { "ok" } else { "FAILED" };

    let stdout = match format {
        Format::Json => {
            let v = json!({
                "framed": framed.to_json(),
                "unframed": unframed.to_json(),
                "seifert_circles": s,
                "writhe": writhe,
                "components": components,
                "crossings": d.crossing_count(),
                "h_minus": z_json(&h_minus),
                "h_plus": z_json(&h_plus),
                "checks": {
                    "mfw": mfw,
                    "parity": parity,
                    "mp_predicts_h_plus_zero": plus_zero,
                    "mp_predicts_h_minus_zero": minus_zero,
                    "mp": mp,
                },
            });
            serde_json::to_string_pretty(&v).expect("plain data") + "\n"
        }
        Format::Text | Format::Table => {
            let mut out = String::new();
            if format == Format::Table {
                out += &format!("H (framed):\n{}\nP (unframed):\n{}\n", render_table(&framed), render_table(&unframed));
            } else {
                out += &format!("H = {framed}\nP = {unframed}\n");
            }
            out += &format!("seifert circles: {s}\nwrithe: {writhe}\ncomponents: {components}\n");
            out += &format!("H_- = {h_minus}\nH_+ = {h_plus}\n");
            out += &format!("mfw bound [{}, {}]: {}\n", 1 - s as i64, s as i64 - 1, ok(mfw));
            out += &format!("parity: {}\n", ok(parity));
            out += &format!(
                "mp: predicts H_+ = 0: {}, H_- = 0: {}; {}\n",
                if plus_zero { "yes" } else { "no" },
                if minus_zero { "yes" } else { "no" },
                ok(mp)
            );
            out
        }
    };
    Outcome::ok(stdout, passed)
}

/// `verify-ft`: the extreme-coefficient identity for a knitted diagram.
pub fn cmd_verify_ft(input: &Input, format: Format, inject_fault: bool) -> Outcome {
    let k = match load(input) {
        Ok(Source::Knitted(k)) => k,
        Ok(Source::Pd(_)) => return Outcome::input_error("verify-ft needs a braid or knitted input"),
        Err(e) => return Outcome::input_error(e),
    };
    let report = match verify_theorem(&k) {
        Ok(r) if inject_fault => r.with_fault(),
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let rhs = report.h_plus_ft.scale(&report.sign().into());
    let stdout = match format {
        Format::Json => {
            let v = json!({
                "seifert_circles": report.seifert_count,
                "sign": report.sign(),
                "h_minus": z_json(&report.h_minus),
                "h_plus_ft": z_json(&report.h_plus_ft),
                "fast_h_minus": z_json(&report.fast_h_minus),
                "identity_holds": report.identity_holds,
                "fast_path_agrees": report.fast_agrees,
                "pass": report.passed(),
            });
            serde_json::to_string_pretty(&v).expect("plain data") + "\n"
        }
        Format::Text | Format::Table => {
            let mut out = format!(
                "s(D) = {}\nsign = {}\nH_-(D) = {}\nH_+(FT D) = {}\nfast H_-(D) = {}\n",
                report.seifert_count,
                report.sign(),
                report.h_minus,
                report.h_plus_ft,
                report.fast_h_minus
            );
            if !report.identity_holds {
                out += &format!("difference H_-(D) - sign*H_+(FT D) = {}\n", &report.h_minus - &rhs);
            }
            if !report.fast_agrees {
                out += &format!("difference skein - fast = {}\n", &report.h_minus - &report.fast_h_minus);
            }
            out += if report.passed() { "PASS\n" } else { "FAIL\n" };
            out
        }
    };
    Outcome::ok(stdout, report.passed())
}

pub fn cmd_hecke_expand(braid: &str, strands: Option<usize>, basis: BasisArg, format: Format) -> Outcome {
    let word = match parse_braid(braid, strands) {
        Ok(w) => w,
        Err(e) => return Outcome::input_error(e),
    };
    let target = match basis {
        BasisArg::Ppb => Basis::Ppb,
        BasisArg::Npb => Basis::Npb,
    };
    let h = HeckeElement::expand_word(&word).convert(target);
    let stdout = match format {
        Format::Json => {
            let terms: Vec<Value> = h
                .iter()
                .map(|(w, c)| json!({"permutation": w.images(), "coeff": z_json(c)}))
                .collect();
            let name = if target == Basis::Ppb { "ppb" } else { "npb" };
            serde_json::to_string_pretty(&json!({"basis": name, "strands": h.strands(), "terms": terms})).expect("plain data")
                + "\n"
        }
        Format::Text | Format::Table => h.render(),
    };
    Outcome::ok(stdout, true)
}

pub fn cmd_random_test(cfg: &CampaignConfig) -> Outcome {
    let summary = run_campaign(cfg);
    Outcome::ok(summary.render(), summary.all_passed())
}

/// Accepts a bare polynomial `{"terms": [...]}` or `homfly --format json`
/// output, whose `framed` field is rendered.
pub fn cmd_table(text: &str) -> Outcome {
    let parsed: Result<Value, _> = serde_json::from_str(text);
    let value = match parsed {
        Ok(v) => v,
        Err(e) => return Outcome::input_error(format!("line {}, column {}: {e}", e.line(), e.column())),
    };
    let poly = if value.get("terms").is_some() { value } else { value.get("framed").cloned().unwrap_or(Value::Null) };
    let json: PolyJson = match serde_json::from_value(poly) {
        Ok(p) => p,
        Err(e) => return Outcome::input_error(format!("not a polynomial: {e}")),
    };
    match LaurentVZ::from_json(&json) {
        Ok(h) => Outcome::ok(render_table(&h), true),
        Err(e) => Outcome::input_error(e),
    }
}
