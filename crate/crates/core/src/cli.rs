//! Command implementations behind the `cpk` binary.
//!
//! [`run`] parses arguments, writes to the given sinks and returns the
//! process exit code: 0 on success, 1 for invalid input or a domain error,
//! 2 when an internal consistency check fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bundles::{SpecFile, SphereBundleSpec};
use crate::classify::{
    classify_report, delta1_equal, graded_stably_isomorphic, k_distinguishable, CAVEAT_STABLE,
};
use crate::cuntz::{parse_element, Degree};
use crate::fgab::{cokernel, kernel, smith_normal_form, IntMatrix};
use crate::pimsner::k_groups;
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "cpk",
    version,
    about = "K-theory invariants of Cuntz-Pimsner algebras of sphere bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// K_0 and K_1 of O_E for one bundle.
    Kgroups(SpecArgs),
    /// Full classification report for one bundle.
    Report(SpecArgs),
    /// Compare two bundles of the same rank over the same sphere.
    Classify(ClassifyArgs),
    /// Survey K-groups over a grid of ranks and K-class parameters.
    Table(TableArgs),
    /// Smith normal form of an integer matrix like "-2,0;-1,-2".
    Snf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Normal form or equality of Cuntz-algebra expressions.
    Cuntz(CuntzArgs),
}

fn big(s: &str) -> std::result::Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|_| format!("'{s}' is not an integer"))
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Sphere dimension n.
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub sphere: Option<BigInt>,
    /// Bundle rank d.
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub rank: Option<BigInt>,
    /// K-class parameter c in [E] = d + c·λ.
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub euler: Option<BigInt>,
    /// JSON spec file; overrides the inline flags.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

impl SpecArgs {
    pub fn resolve(&self) -> Result<SphereBundleSpec> {
        if let Some(path) = &self.spec {
            return SphereBundleSpec::from_file(path);
        }
        let sphere = self
            .sphere
            .clone()
            .ok_or_else(|| Error::Invalid("missing --sphere (or --spec)".into()))?;
        let rank = self
            .rank
            .clone()
            .ok_or_else(|| Error::Invalid("missing --rank (or --spec)".into()))?;
        Ok(SphereBundleSpec::new(
            sphere,
            rank,
            self.euler.clone().unwrap_or_default(),
        ))
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub a: SpecArgs,
    /// Sphere dimension of the second bundle (defaults to the first).
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub sphere_b: Option<BigInt>,
    /// Rank of the second bundle (defaults to the first).
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub rank_b: Option<BigInt>,
    /// K-class parameter of the second bundle (defaults to 0, the trivial class).
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub euler_b: Option<BigInt>,
    /// JSON spec file for the second bundle.
    #[arg(long)]
    pub spec_b: Option<PathBuf>,
}

impl ClassifyArgs {
    fn resolve(&self) -> Result<(SphereBundleSpec, SphereBundleSpec)> {
        let a = self.a.resolve()?;
        let b = match &self.spec_b {
            Some(path) => SphereBundleSpec::from_file(path)?,
            None => SphereBundleSpec::new(
                self.sphere_b
                    .clone()
                    .unwrap_or_else(|| a.sphere_dim().clone()),
                self.rank_b.clone().unwrap_or_else(|| a.rank().clone()),
                self.euler_b.clone().unwrap_or_default(),
            ),
        };
        Ok((a, b))
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest rank d (rows start at d = 2).
    #[arg(long, value_parser = big)]
    pub d_max: BigInt,
    /// Rows cover c in [-c_max, c_max].
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    pub c_max: BigInt,
    /// Sphere dimension.
    #[arg(long, value_parser = big, default_value = "4")]
    pub sphere: BigInt,
    /// Worker threads; 0 picks the number of CPUs.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct CuntzArgs {
    /// Number of generators.
    #[arg(long)]
    pub d: usize,
    /// Decide equality of exactly two expressions instead of normalizing.
    #[arg(long)]
    pub equal: bool,
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
    pub exprs: Vec<String>,
}

/// Failure modes of a command.
#[derive(Debug)]
pub enum Failure {
    Input(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Kgroups(spec) => cmd_kgroups(&spec.resolve()?, cli.format),
        Command::Report(spec) => cmd_report(&spec.resolve()?, cli.format),
        Command::Classify(args) => {
            let (a, b) = args.resolve()?;
            cmd_classify(&a, &b, cli.format)
        }
        Command::Table(args) => cmd_table(args, cli.format),
        Command::Snf { matrix } => cmd_snf(matrix, cli.format),
        Command::Cuntz(args) => cmd_cuntz(args, cli.format),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroupsRecord {
    #[serde(rename = "K0")]
    pub k0: String,
    #[serde(rename = "K1")]
    pub k1: String,
    pub note: String,
}

pub fn cmd_kgroups(spec: &SphereBundleSpec, format: Format) -> CmdResult {
    let k = k_groups(spec)?;
    Ok(match format {
        Format::Structured => json(&KGroupsRecord {
            k0: k.k0.to_string(),
            k1: k.k1.to_string(),
            note: k.note,
        }),
        Format::Human => format!(
            "bundle: {spec}\nK0 = {}\nK1 = {}\nnote: {}\n",
            k.k0, k.k1, k.note
        ),
    })
}

pub fn cmd_report(spec: &SphereBundleSpec, format: Format) -> CmdResult {
    let report = classify_report(spec)?;
    if report.k_distinguishable_from_trivial && report.k_groups.k0 == report.trivial_comparison.k0 {
        return Err(Failure::Internal(
            "distinguishability flag contradicts K0".into(),
        ));
    }
    let rec = report.to_record();
    Ok(match format {
        Format::Structured => json(&rec),
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "bundle: {spec}");
            let _ = writeln!(s, "k_class: {}", rec.k_class);
            let _ = writeln!(s, "K0 = {}", rec.k0);
            let _ = writeln!(s, "K1 = {}", rec.k1);
            let _ = writeln!(s, "note: {}", rec.note);
            let _ = writeln!(
                s,
                "delta1_matrix: [{}] base={}",
                rec.delta1_matrix, rec.delta1_base
            );
            let _ = writeln!(s, "trivial bundle K0 = {}", rec.trivial_k0);
            let _ = writeln!(
                s,
                "distinguishable_from_trivial: {}",
                rec.distinguishable_from_trivial
            );
            for c in &rec.caveats {
                let _ = writeln!(s, "caveat: {c}");
            }
            s
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub a: SpecFile,
    pub b: SpecFile,
    pub delta1_equal: bool,
    pub graded_stably_isomorphic: bool,
    pub k_distinguishable: bool,
    #[serde(rename = "K0_a")]
    pub k0_a: String,
    #[serde(rename = "K0_b")]
    pub k0_b: String,
    pub caveats: Vec<String>,
}

pub fn cmd_classify(a: &SphereBundleSpec, b: &SphereBundleSpec, format: Format) -> CmdResult {
    let d1 = delta1_equal(a, b)?;
    let iso = graded_stably_isomorphic(a, b)?;
    let dist = k_distinguishable(a, b)?;
    if d1 != iso || (dist && iso) {
        return Err(Failure::Internal(format!(
            "inconsistent verdicts: delta1_equal={d1} isomorphic={iso} distinguishable={dist}"
        )));
    }
    let mut caveats = vec![CAVEAT_STABLE.to_string()];
    if !dist {
        caveats.push(
            "equal K0 is inconclusive; the verdict rests on delta_1 and the K-class".to_string(),
        );
    }
    if !a.is_even_sphere() {
        caveats.push("odd sphere: every rank-d bundle has class d".to_string());
    }
    let rec = ClassifyRecord {
        a: a.into(),
        b: b.into(),
        delta1_equal: d1,
        graded_stably_isomorphic: iso,
        k_distinguishable: dist,
        k0_a: k_groups(a)?.k0.to_string(),
        k0_b: k_groups(b)?.k0.to_string(),
        caveats,
    };
    Ok(match format {
        Format::Structured => json(&rec),
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "A: {a}");
            let _ = writeln!(s, "B: {b}");
            let _ = writeln!(s, "K0(A) = {}, K0(B) = {}", rec.k0_a, rec.k0_b);
            let _ = writeln!(s, "delta1_equal: {d1}");
            let verdict = if iso { "isomorphic" } else { "not isomorphic" };
            let _ = writeln!(s, "graded_stably_isomorphic: {iso} ({verdict})");
            let _ = writeln!(s, "k_distinguishable: {dist}");
            for c in &rec.caveats {
                let _ = writeln!(s, "caveat: {c}");
            }
            s
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: String,
    pub c: String,
    pub k_class: String,
    #[serde(rename = "K0")]
    pub k0: String,
    pub gcd: String,
    pub distinguishable_from_trivial: bool,
}

fn table_row(sphere: &BigInt, d: &BigInt, c: &BigInt) -> Result<TableRow> {
    let report = classify_report(&SphereBundleSpec::new(sphere.clone(), d.clone(), c.clone()))?;
    Ok(TableRow {
        d: d.to_string(),
        c: c.to_string(),
        k_class: report.k_class.to_string(),
        k0: report.k_groups.k0.to_string(),
        gcd: (d - BigInt::one()).gcd(c).to_string(),
        distinguishable_from_trivial: report.k_distinguishable_from_trivial,
    })
}

/// Rows for `2 <= d <= d_max` and `|c| <= c_max` (only `c = 0` on odd
/// spheres), ordered by `d` then `c`.
pub fn table_rows(
    sphere: &BigInt,
    d_max: &BigInt,
    c_max: &BigInt,
    jobs: usize,
) -> Result<Vec<TableRow>> {
    let two = BigInt::from(2);
    if d_max < &two {
        return Err(Error::Invalid(format!(
            "--d-max must be at least 2, got {d_max}"
        )));
    }
    if c_max < &BigInt::from(0) {
        return Err(Error::Invalid(format!(
            "--c-max must be nonnegative, got {c_max}"
        )));
    }
    let d_hi = d_max
        .to_u64()
        .filter(|&d| d <= 1 << 16)
        .ok_or_else(|| Error::Invalid(format!("--d-max {d_max} is too large for a table")))?;
    let c_hi = c_max
        .to_i64()
        .filter(|&c| c <= 1 << 16)
        .ok_or_else(|| Error::Invalid(format!("--c-max {c_max} is too large for a table")))?;
    SphereBundleSpec::trivial(sphere.clone(), 2).validate()?;
    let c_range = if sphere.is_even() {
        -c_hi..=c_hi
    } else {
        0..=0
    };
    let cells: Vec<(BigInt, BigInt)> = (2..=d_hi)
        .flat_map(|d| {
            c_range
                .clone()
                .map(move |c| (BigInt::from(d), BigInt::from(c)))
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| {
        cells
            .par_iter()
            .map(|(d, c)| table_row(sphere, d, c))
            .collect()
    })
}

pub fn cmd_table(args: &TableArgs, format: Format) -> CmdResult {
    let rows = table_rows(&args.sphere, &args.d_max, &args.c_max, args.jobs)?;
    Ok(match format {
        Format::Structured => json(&rows),
        Format::Human => render_table(&rows),
    })
}

fn render_table(rows: &[TableRow]) -> String {
    let header = ["d", "c", "[E]", "K0", "gcd(d-1,c)", "distinguishable"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.d.clone(),
                r.c.clone(),
                r.k_class.clone(),
                r.k0.clone(),
                r.gcd.clone(),
                r.distinguishable_from_trivial.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |items: &[String]| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        let mut l = padded.join("  ").trim_end().to_string();
        l.push('\n');
        l
    };
    let mut s = line(&header.map(String::from));
    for row in &cells {
        s.push_str(&line(row));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfRecord {
    #[serde(rename = "U")]
    pub u: String,
    #[serde(rename = "D")]
    pub d: String,
    #[serde(rename = "V")]
    pub v: String,
    pub diagonal: Vec<String>,
    pub cokernel: String,
    pub kernel: String,
}

pub fn cmd_snf(text: &str, format: Format) -> CmdResult {
    let a: IntMatrix = text.parse()?;
    let snf = smith_normal_form(&a);
    let check = snf
        .u()
        .mul(&a)
        .and_then(|ua| ua.mul(snf.v()))
        .map_err(|e| Failure::Internal(e.to_string()))?;
    if &check != snf.d() {
        return Err(Failure::Internal("U·A·V differs from D".into()));
    }
    let diagonal: Vec<String> = snf.diagonal().iter().map(ToString::to_string).collect();
    let rec = SnfRecord {
        u: snf.u().to_string(),
        d: snf.d().to_string(),
        v: snf.v().to_string(),
        diagonal,
        cokernel: cokernel(&a).to_string(),
        kernel: kernel(&a).to_string(),
    };
    Ok(match format {
        Format::Structured => json(&rec),
        Format::Human => format!(
            "D = diag({})\nU = [{}]\nV = [{}]\ncokernel: {}\nkernel: {}\n",
            rec.diagonal.join(","),
            rec.u,
            rec.v,
            rec.cokernel,
            rec.kernel
        ),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuntzRecord {
    pub normal_form: String,
    pub degree: String,
}

pub fn cmd_cuntz(args: &CuntzArgs, format: Format) -> CmdResult {
    if args.equal {
        let [lhs, rhs] = args.exprs.as_slice() else {
            return Err(Error::Invalid(format!(
                "--equal takes exactly two expressions, got {}",
                args.exprs.len()
            ))
            .into());
        };
        let a = parse_element(args.d, lhs)?;
        let b = parse_element(args.d, rhs)?;
        let eq = a.equals(&b)?;
        if eq != (a.normal_form() == b.normal_form()) {
            return Err(Failure::Internal(
                "equality and normal forms disagree".into(),
            ));
        }
        return Ok(match format {
            Format::Structured => json(&serde_json::json!({ "equal": eq })),
            Format::Human => format!("{eq}\n"),
        });
    }
    let [expr] = args.exprs.as_slice() else {
        return Err(Error::Invalid("expected one expression (use --equal for two)".into()).into());
    };
    let nf = parse_element(args.d, expr)?.normal_form();
    let degree = match nf.degree() {
        Degree::Homogeneous(k) => k.to_string(),
        Degree::Mixed => "mixed".to_string(),
    };
    Ok(match format {
        Format::Structured => json(&CuntzRecord {
            normal_form: nf.to_string(),
            degree,
        }),
        Format::Human => format!("{nf}\n"),
    })
}
