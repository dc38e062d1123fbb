//! The `flagtop` command line.
//!
//! Exit codes: 0 on success, 1 when a validation, bound, or suite check fails
//! (the report is still printed), 2 on usage or input errors. Data goes to
//! stdout; wall times and diagnostics go to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{self, BoundReport};
use crate::complex::SimplicialComplex;
use crate::constructions::{self, GjSpec};
use crate::enumerate::{self, ComplexClass};
use crate::error::Error;
use crate::io;
use crate::validators::{self, ClassificationReport};
use crate::verify::VerifySuite;

pub const THREADS_ENV: &str = "FLAGTOP_THREADS";
pub const FVECTOR_SCHEMA: &str = "flagtop.fvector.v1";
pub const BOUNDS_SCHEMA: &str = "flagtop.bounds.v1";
pub const ISO_SCHEMA: &str = "flagtop.iso.v1";
pub const ERROR_SCHEMA: &str = "flagtop.error.v1";

#[derive(Parser, Debug)]
#[command(name = "flagtop", version, about = "Flag simplicial complexes: build, validate, count, bound, enumerate")]
struct Cli {
    /// Worker threads for enumeration (overrides FLAGTOP_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a named complex in the facet text format.
    Construct(ConstructArgs),
    /// Classify a complex against every validator.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Exit 1 unless this verdict holds (repeatable).
        #[arg(long, value_enum)]
        require: Vec<Requirement>,
    },
    /// Print the f-vector.
    Fvector {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a bound on a complex; prints JSON reports.
    BoundCheck {
        file: PathBuf,
        /// 3dim, c-bound, facet-sums, or generic:<m>.
        #[arg(long)]
        theorem: String,
        /// Accepted for uniformity; output is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all isomorphism classes of a class on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
        /// Keep only complexes with this many edges.
        #[arg(long)]
        f1: Option<u64>,
        /// Directory for one facet file per class plus summary.json.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        /// Built-in suite id.
        #[arg(long, default_value = "paper-core")]
        suite: String,
        /// Load the suite from a manifest file instead.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two flag complexes are isomorphic.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: ConstructKind,
    /// Write JSON instead of the facet text format.
    #[arg(long, global = true)]
    json: bool,
    /// Output file (default stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ConstructKind {
    /// Cycle of length k.
    Cycle {
        #[arg(long)]
        k: usize,
    },
    /// Balanced join of m cycles on n vertices.
    J {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Suspension of the balanced join of m cycles on n − 2 vertices.
    Jstar {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Boundary of the d-dimensional cross-polytope.
    Cross {
        #[arg(long)]
        d: usize,
    },
    /// Union of joins of cycles from two partitions.
    Gj {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<usize>,
        /// Total vertex count; the partitions must sum to ⌊n/2⌋ and ⌈n/2⌉.
        #[arg(long)]
        n: Option<usize>,
        /// Skip the partition-sum check.
        #[arg(long)]
        unchecked_sums: bool,
    },
    /// (L1*L3) ∪ (L2*L3) ∪ (L1*L4) on four cycles.
    Remark {
        #[arg(long, value_delimiter = ',', num_args = 1, default_value = "4,4,4,4")]
        lengths: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Requirement {
    Flag,
    Pure,
    WeakPm,
    NormalPm,
    Eulerian,
    ClosedSurface,
    TwoSphere,
    #[value(name = "flag_3_manifold")]
    Flag3Manifold,
    OctahedralSphere,
    Connected,
}

impl Requirement {
    fn holds(self, r: &ClassificationReport) -> bool {
        let v = &r.verdicts;
        match self {
            Requirement::Flag => v.flag,
            Requirement::Pure => v.pure,
            Requirement::WeakPm => v.weak_pm,
            Requirement::NormalPm => v.normal_pm,
            Requirement::Eulerian => v.eulerian,
            Requirement::ClosedSurface => v.closed_surface,
            Requirement::TwoSphere => v.two_sphere,
            Requirement::Flag3Manifold => v.flag_3_manifold,
            Requirement::OctahedralSphere => v.octahedral_sphere,
            Requirement::Connected => v.connected,
        }
    }
}

/// Failure with its exit code; the message goes to stderr.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(2, e.to_string())
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit(2, e.to_string())
    }
}

type CmdResult = Result<i32, Exit>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let threads = cli.threads.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|s| s.parse().ok()));
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 2;
        }
    };
    match dispatch(cli.command, &pool, out, err) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Exit> {
    let text = fs::read_to_string(path).map_err(|e| Exit(2, format!("{}: {e}", path.display())))?;
    io::parse_any(&text).map_err(|e| Exit(2, format!("{}: {e}", path.display())))
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("plain data serializes");
    writeln!(out, "{text}")
}

fn dispatch(command: Command, pool: &rayon::ThreadPool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Construct(args) => construct(args, out),
        Command::Validate { file, json, require } => {
            let k = read_complex(&file)?;
            let report = validators::classify(&k);
            if json {
                json_line(out, &report)?;
            } else {
                write_table(out, &report)?;
            }
            let missing: Vec<String> = require.iter().filter(|r| !r.holds(&report)).map(|r| format!("{r:?}")).collect();
            if missing.is_empty() {
                Ok(0)
            } else {
                writeln!(err, "required verdicts failed: {}", missing.join(", "))?;
                Ok(1)
            }
        }
        Command::Fvector { file, json } => {
            let k = read_complex(&file)?;
            let f = k.f_vector();
            if json {
                #[derive(Serialize)]
                struct Out<'a> {
                    schema: &'static str,
                    n: usize,
                    dim: isize,
                    f_vector: &'a crate::complex::FVector,
                    reduced_euler_char: i64,
                }
                let o = Out {
                    schema: FVECTOR_SCHEMA,
                    n: k.vertex_count(),
                    dim: k.dim(),
                    f_vector: &f,
                    reduced_euler_char: f.reduced_euler_char(),
                };
                json_line(out, &o)?;
            } else {
                writeln!(out, "{f}")?;
            }
            Ok(0)
        }
        Command::BoundCheck { file, theorem, json: _ } => bound_check(&read_complex(&file)?, &theorem, out),
        Command::Enumerate { n, class, f1, out: dir, json } => {
            let class: ComplexClass = class.parse()?;
            let result = pool.install(|| enumerate::enumerate_class(n, class, f1))?;
            writeln!(err, "enumerated {} candidates in {:.3}s", result.candidates, result.wall_time.as_secs_f64())?;
            if let Some(dir) = dir {
                fs::create_dir_all(&dir)?;
                for (i, rep) in result.representatives.iter().enumerate() {
                    let comment = format!("{} n={} class {} f={}", class, n, i, rep.f_vector);
                    fs::write(
                        dir.join(format!("{class}_n{n}_{i:03}.cplx")),
                        io::write_facets(&rep.complex, Some(&comment)),
                    )?;
                }
                fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&result).expect("serializes") + "\n")?;
            }
            if json {
                json_line(out, &result)?;
            } else {
                writeln!(out, "{} n={} classes={} candidates={}", class, n, result.count, result.candidates)?;
                for (i, rep) in result.representatives.iter().enumerate() {
                    writeln!(out, "{i:3} f={}", rep.f_vector)?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite, manifest, json } => {
            let suite = match manifest {
                Some(path) => VerifySuite::parse(&fs::read_to_string(&path)?)?,
                None => VerifySuite::builtin(&suite)?,
            };
            let start = Instant::now();
            let report = pool.install(|| suite.run());
            for c in &report.checks {
                writeln!(err, "{:<24} {:.3}s", c.id, c.wall_time.as_secs_f64())?;
            }
            writeln!(err, "suite {} finished in {:.3}s", report.suite, start.elapsed().as_secs_f64())?;
            if json {
                json_line(out, &report)?;
            } else {
                for c in &report.checks {
                    writeln!(out, "{} {:<24} {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.claim)?;
                    for d in &c.details {
                        writeln!(out, "     {d}")?;
                    }
                }
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Iso { a, b, json } => {
            let (ka, kb) = (read_complex(&a)?, read_complex(&b)?);
            let iso = match enumerate::are_isomorphic(&ka, &kb) {
                Ok(iso) => iso,
                Err(e @ Error::Precondition(_)) => return Err(Exit(1, e.to_string())),
                Err(e) => return Err(e.into()),
            };
            if json {
                #[derive(Serialize)]
                struct Out {
                    schema: &'static str,
                    isomorphic: bool,
                }
                json_line(out, &Out { schema: ISO_SCHEMA, isomorphic: iso })?;
            } else {
                writeln!(out, "{}", if iso { "isomorphic" } else { "not isomorphic" })?;
            }
            Ok(if iso { 0 } else { 1 })
        }
    }
}

fn construct(args: ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let (k, label) = match args.kind {
        ConstructKind::Cycle { k } => (constructions::cycle(k)?, format!("cycle of length {k}")),
        ConstructKind::J { m, n } => (constructions::balanced_join(m, n)?, format!("J_{m}({n})")),
        ConstructKind::Jstar { m, n } => (constructions::suspended_join(m, n)?, format!("J_{m}*({n})")),
        ConstructKind::Cross { d } => {
            (constructions::cross_polytope_boundary(d)?, format!("boundary of the {d}-dimensional cross-polytope"))
        }
        ConstructKind::Gj { a, b, n, unchecked_sums } => {
            let spec = if unchecked_sums {
                GjSpec::unchecked_sums(a, b)?
            } else {
                let n = n.unwrap_or(a.iter().sum::<usize>() + b.iter().sum::<usize>());
                GjSpec::new(n, a, b)?
            };
            (constructions::gj(&spec)?, format!("GJ a={:?} b={:?}", spec.a, spec.b))
        }
        ConstructKind::Remark { lengths } => {
            let [l1, l2, l3, l4] = lengths[..] else {
                return Err(Exit(2, format!("--lengths needs four values, got {}", lengths.len())));
            };
            (
                constructions::remark_complex(l1, l2, l3, l4)?,
                format!("(L1*L3) ∪ (L2*L3) ∪ (L1*L4), lengths {lengths:?}"),
            )
        }
    };
    let text = if args.json { io::to_json(&k) + "\n" } else { io::write_facets(&k, Some(&label)) };
    match args.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct BoundOutput<'a> {
    schema: &'static str,
    theorem: &'a str,
    holds: bool,
    reports: Vec<BoundReport>,
}

#[derive(Serialize)]
struct ErrorOutput<'a> {
    schema: &'static str,
    theorem: &'a str,
    error: String,
}

fn bound_check(k: &SimplicialComplex, theorem: &str, out: &mut dyn Write) -> CmdResult {
    let reports = match theorem {
        "3dim" => bounds::check_upper_bound_3dim(k).map(|r| vec![r]),
        "c-bound" => bounds::check_lemma_c_bound(k).map(|r| vec![r]),
        "facet-sums" => bounds::facet_sums_sweep(k).map(|pairs| pairs.into_iter().flat_map(|(e, v)| [e, v]).collect()),
        other => match other.strip_prefix("generic:").and_then(|m| m.parse::<usize>().ok()) {
            Some(m) => bounds::check_generic_bound(k, m),
            None => {
                return Err(Exit(
                    2,
                    format!("unknown theorem {other:?}; expected 3dim, c-bound, facet-sums, generic:<m>"),
                ))
            }
        },
    };
    match reports {
        Ok(reports) => {
            let holds = reports.iter().all(|r| r.holds);
            json_line(out, &BoundOutput { schema: BOUNDS_SCHEMA, theorem, holds, reports })?;
            Ok(if holds { 0 } else { 1 })
        }
        Err(e @ (Error::Precondition(_) | Error::Dimension { .. })) => {
            json_line(out, &ErrorOutput { schema: ERROR_SCHEMA, theorem, error: e.to_string() })?;
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn write_table(out: &mut dyn Write, r: &ClassificationReport) -> std::io::Result<()> {
    writeln!(out, "{:<20}{}", "vertices", r.n)?;
    writeln!(out, "{:<20}{}", "dimension", r.dim)?;
    writeln!(out, "{:<20}{}", "f-vector", r.f_vector)?;
    writeln!(out, "{:<20}{}", "reduced euler char", r.reduced_euler_char)?;
    let v = &r.verdicts;
    let rows = [
        ("flag", v.flag),
        ("pure", v.pure),
        ("weak_pm", v.weak_pm),
        ("normal_pm", v.normal_pm),
        ("eulerian", v.eulerian),
        ("closed_surface", v.closed_surface),
        ("two_sphere", v.two_sphere),
        ("flag_3_manifold", v.flag_3_manifold),
        ("octahedral_sphere", v.octahedral_sphere),
        ("connected", v.connected),
    ];
    for (name, holds) in rows {
        let witness = r.witnesses.get(name).map(|w| serde_json::to_string(w).expect("serializes")).unwrap_or_default();
        let line = format!("{:<20}{:<5}{}", name, if holds { "yes" } else { "no" }, witness);
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}
