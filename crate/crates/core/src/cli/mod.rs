//! The `tmh` command line: spec documents in, reports out.
//!
//! Exit codes: [`EXIT_OK`], [`EXIT_INPUT`] for I/O and parse errors,
//! [`EXIT_INVALID`] when a check on the data fails (including a non-generic
//! direction), [`EXIT_SCOPE`] when a computation is outside what is
//! supported.

pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::charpair::{validate, CharError, CharacteristicPair};
use crate::dim4::{self, Dim4Error};
use crate::exactlin::{parse_rational, RatVector};
use crate::genus::{self, GenusError};
use crate::mac::{self, MacError};
use crate::polytope::{place_holes_with, ScalePolicy};
use report::{ChiYSection, HomologySection, IntersectionSection, MomentAngleSection, Report, ReportError};
use spec::{BuildError, ComponentSpec, SpecDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SCOPE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tmh", version, about = "Invariants of torus manifolds over polytopes with holes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the geometry and the characteristic function.
    Validate { spec: PathBuf },
    /// χ_y genus with its top Chern number, signature and Todd genus.
    Invariants {
        spec: PathBuf,
        /// Generic direction, comma separated (overrides the spec's `nu`).
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Integral homology of a 4-dimensional torus manifold.
    Homology { spec: PathBuf },
    /// Intersection form on H_2 (at most one hole).
    Ring { spec: PathBuf },
    /// Place the pieces as holes inside the base and write the result.
    Fibersum {
        base: PathBuf,
        #[arg(required = true)]
        pieces: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        /// Fixed scale factor `p/q` for the pieces instead of automatic fitting.
        #[arg(long)]
        scale: Option<String>,
    },
    /// Kernel lattice, freeness and embedding coordinates.
    Mac {
        spec: PathBuf,
        /// A point of the polytope, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Everything above in one document.
    Report {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// An error with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

impl From<spec::SpecError> for Failure {
    fn from(e: spec::SpecError) -> Self {
        Failure::new(EXIT_INPUT, e)
    }
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Self {
        let code = match &e {
            BuildError::Char(CharError::Dimension(_) | CharError::LambdaCount { .. }) => EXIT_INPUT,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<CharError> for Failure {
    fn from(e: CharError) -> Self {
        Failure::new(EXIT_INVALID, e)
    }
}

impl From<GenusError> for Failure {
    fn from(e: GenusError) -> Self {
        let code = match &e {
            GenusError::Dimension { .. } => EXIT_INPUT,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<Dim4Error> for Failure {
    fn from(e: Dim4Error) -> Self {
        match e {
            Dim4Error::Char(c) => c.into(),
            Dim4Error::Genus(g) => g.into(),
            Dim4Error::Dimension(_) | Dim4Error::Scope(_) => Failure::new(EXIT_SCOPE, e),
            Dim4Error::Internal(_) => Failure::new(EXIT_INVALID, e),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Genus(g) => g.into(),
            ReportError::Dim4(d) => d.into(),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_INPUT, e)
}

/// Parses arguments (including the program name) and runs one command,
/// returning the exit code. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let rendered = e.render();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &std::path::Path) -> Result<(SpecDocument, CharacteristicPair), Failure> {
    let doc = SpecDocument::parse_file(path)?;
    let pair = doc.to_pair()?;
    Ok((doc, pair))
}

fn load_valid(path: &std::path::Path) -> Result<(SpecDocument, CharacteristicPair), Failure> {
    let (doc, pair) = load(path)?;
    let pair = pair.validated()?;
    Ok((doc, pair))
}

fn parse_ints(text: &str, what: &str) -> Result<Vec<BigInt>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Failure::new(EXIT_INPUT, format!("{what}: \"{}\" is not an integer", t.trim())))
        })
        .collect()
}

fn parse_point(text: &str) -> Result<RatVector, Failure> {
    text.split(',')
        .map(|t| {
            parse_rational(t)
                .ok_or_else(|| Failure::new(EXIT_INPUT, format!("--point: \"{}\" is not a rational", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(RatVector::new)
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Validate { spec } => {
            let (_, pair) = load(spec)?;
            let body = pair.body();
            let r = validate(&pair)?;
            writeln!(
                out,
                "valid: dimension {}, {} facets, {} vertices, {} holes, {} faces checked",
                body.dim(),
                body.facet_count(),
                body.vertex_count(),
                body.hole_count(),
                r.faces_checked
            )
            .map_err(io_failure)?;
        }
        Command::Invariants { spec, nu } => {
            let (doc, pair) = load_valid(spec)?;
            let nu = match nu {
                Some(t) => Some(parse_ints(t, "--nu")?),
                None => doc.nu.clone(),
            };
            let chi = genus::chi_y(&pair, nu.as_deref())?;
            write!(out, "{}", ChiYSection::new(&chi).to_text()).map_err(io_failure)?;
        }
        Command::Homology { spec } => {
            let (_, pair) = load_valid(spec)?;
            let h = dim4::homology_groups(&pair)?;
            write!(out, "{}", HomologySection::new(&h).to_text()).map_err(io_failure)?;
        }
        Command::Ring { spec } => {
            let (_, pair) = load_valid(spec)?;
            let data = dim4::intersection_form(&pair)?;
            write!(out, "{}", IntersectionSection::new(&pair, &data).to_text()).map_err(io_failure)?;
        }
        Command::Fibersum {
            base,
            pieces,
            output,
            scale,
        } => {
            let policy = match scale {
                Some(t) => ScalePolicy::Fixed(
                    parse_rational(t).ok_or_else(|| Failure::new(EXIT_INPUT, format!("--scale: \"{t}\" is not a rational")))?,
                ),
                None => ScalePolicy::Auto,
            };
            let doc = fiber_sum(base, pieces, &policy)?;
            let text = serde_json::to_string_pretty(&doc.to_json()).expect("documents serialize");
            std::fs::write(output, text + "\n")
                .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot write {}: {e}", output.display())))?;
            let pair = doc.to_pair()?.validated()?;
            writeln!(
                out,
                "wrote {}: {} facets, {} vertices, {} holes",
                output.display(),
                pair.body().facet_count(),
                pair.body().vertex_count(),
                pair.body().hole_count()
            )
            .map_err(io_failure)?;
        }
        Command::Mac { spec, point } => {
            let (_, pair) = load(spec)?;
            write!(out, "{}", MomentAngleSection::new(&pair).to_text()).map_err(io_failure)?;
            if let Some(p) = point {
                let x = parse_point(p)?;
                let d = mac::embedding_coordinates(&pair, &x).map_err(|e| match e {
                    MacError::Dimension { .. } => Failure::new(EXIT_INPUT, e),
                    MacError::Domain(_) => Failure::new(EXIT_INVALID, e),
                })?;
                writeln!(out, "  embedding coordinates at {x}: {d}").map_err(io_failure)?;
            }
        }
        Command::Report { spec, format } => {
            let (doc, pair) = load(spec)?;
            let report = Report::build(doc.name.clone(), pair, doc.nu.as_deref())?;
            match format {
                Format::Json => writeln!(out, "{}", report.to_json()),
                Format::Text => write!(out, "{}", report.to_text()),
            }
            .map_err(io_failure)?;
            if !report.validation.valid {
                return Ok(EXIT_INVALID);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Fiber sum of a hole-free base with hole-free pieces: each piece becomes a
/// hole, its facet labels prefixed `p1.`, `p2.`, ….
pub fn fiber_sum(
    base: &std::path::Path,
    pieces: &[PathBuf],
    policy: &ScalePolicy,
) -> Result<SpecDocument, Failure> {
    let (base_doc, base_pair) = load_valid(base)?;
    if !base_doc.holes.is_empty() {
        return Err(Failure::new(EXIT_SCOPE, "the base of a fiber sum must not have holes"));
    }
    let mut docs = Vec::new();
    for (i, path) in pieces.iter().enumerate() {
        let (doc, _) = load_valid(path)?;
        if !doc.holes.is_empty() {
            return Err(Failure::new(
                EXIT_SCOPE,
                format!("piece {} has holes; only convex pieces can be summed in", path.display()),
            ));
        }
        if doc.dimension != base_doc.dimension {
            return Err(Failure::new(
                EXIT_SCOPE,
                format!("piece {} has dimension {}, base has {}", path.display(), doc.dimension, base_doc.dimension),
            ));
        }
        docs.push(doc.with_label_prefix(&format!("p{}.", i + 1)));
    }
    let bodies = docs
        .iter()
        .map(|d| d.outer.build(d.dimension))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::new(EXIT_INVALID, e))?;
    let placed = place_holes_with(base_pair.body().outer(), &bodies, policy).map_err(|e| Failure::new(EXIT_INVALID, e))?;

    let mut characteristic = base_doc.characteristic.clone();
    for d in &docs {
        for (label, v) in &d.characteristic {
            if characteristic.insert(label.clone(), v.clone()).is_some() {
                return Err(Failure::new(EXIT_INPUT, format!("facet label \"{label}\" occurs twice")));
            }
        }
    }
    let names: Vec<String> = std::iter::once(&base_doc)
        .chain(&docs)
        .map(|d| d.name.clone().unwrap_or_else(|| "?".into()))
        .collect();
    Ok(SpecDocument {
        dimension: base_doc.dimension,
        name: Some(names.join(" # ")),
        description: Some(format!("fiber sum of {} with {} piece(s)", names[0], docs.len())),
        outer: base_doc.outer.clone(),
        holes: placed.holes().iter().map(ComponentSpec::from_polytope).collect(),
        characteristic,
        nu: None,
    })
}
