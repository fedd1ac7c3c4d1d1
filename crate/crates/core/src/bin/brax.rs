//! Command-line front end: generate facet families, compute invariants,
//! run the verification suites, realize coordinates, and export
//! artifacts. Exit codes: 0 success, 1 a check failed, 2 invalid
//! arguments or malformed input.

use braxtope::checks::{run_suite, CheckReport, Suite, SuiteTarget, Verdict};
use braxtope::document::{flag_map, Kind, PolytopeDocument};
use braxtope::error::Error;
use braxtope::generators::reference_comparand;
use braxtope::geometry::{realize_braxtope, RealizeOptions};
use braxtope::invariants::{braxtope_h_closed, h_from_f_simplicial};
use braxtope::lattice::{build_lattice, FaceLattice};
use braxtope::shelling::{colex_order, colex_shelling_props, pulling_triangulation, shallow_check};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "brax",
    about = "Braxtopes and related generalized simplices: generation, invariants, verification, exact realization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a facet family document (braxtope, multiplex, cyclic, rd-braxtope)
    Gen {
        kind: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute invariants of a document's face lattice
    Analyze {
        file: PathBuf,
        #[arg(long)]
        fvector: bool,
        #[arg(long)]
        flagvector: bool,
        #[arg(long)]
        hvector: bool,
        /// Print the flag vector side by side with the pyramid-over-bipyramid comparand
        #[arg(long)]
        compare_reference: bool,
    },
    /// Run verification suites against a document or generated parameters
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// all, prop1, braxial, shelling, geometry, or conjectures
        #[arg(long, default_value = "all")]
        suite: String,
        /// Emit the reports as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Compute exact rational coordinates whose hull reproduces the facets
    Realize {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the pulling triangulation cells J_i
    Triangulate {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        /// Also verify every triangulation face is shallow in the polytope
        #[arg(long)]
        check_shallow: bool,
    },
    /// Shell a document's facets in colex order, printing each minimal new face
    Shell {
        file: PathBuf,
        /// Colex facet order (the only supported order; accepted for explicitness)
        #[arg(long)]
        colex: bool,
    },
    /// Re-emit a document as JSON or as a facet-vertex incidence matrix
    Export {
        file: PathBuf,
        /// json or incidence
        #[arg(long)]
        format: String,
    },
}

/// Print one line to stdout, leaving with the conventional SIGPIPE
/// status if the reader has gone away (for example `brax export | head`).
macro_rules! say {
    ($($arg:tt)*) => { emit(format_args!($($arg)*), true) };
}

fn emit(args: std::fmt::Arguments, newline: bool) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let done = out
        .write_fmt(args)
        .and_then(|()| if newline { out.write_all(b"\n") } else { Ok(()) });
    if done.is_err() {
        std::process::exit(141);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Malformed input and bad parameters are usage errors (2); anything
/// that fails after a well-formed document is loaded is a check
/// failure (1).
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Json(_) | Error::Document(_) | Error::InvalidParams(_) => 2,
        _ => 1,
    }
}

fn realize_options() -> Result<RealizeOptions, Error> {
    match std::env::var("BRAX_SEED") {
        Ok(s) => {
            let seed = s.parse::<u64>().map_err(|_| {
                Error::InvalidParams(format!("BRAX_SEED must be an unsigned integer, got {s:?}"))
            })?;
            Ok(RealizeOptions { seed })
        }
        Err(_) => Ok(RealizeOptions::default()),
    }
}

fn load_document(path: &Path) -> Result<PolytopeDocument, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))?;
    PolytopeDocument::from_json(&text)
}

fn lattice_of(doc: &PolytopeDocument) -> Result<FaceLattice, Error> {
    build_lattice(doc.parameters.n + 1, &doc.facet_family()?)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Document(format!("cannot write {}: {e}", path.display()))),
        None => {
            emit(format_args!("{text}"), false);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen { kind, d, n, r, out } => {
            let kind: Kind = kind.parse()?;
            let doc = PolytopeDocument::generate(kind, r, d, n)?;
            write_or_print(out.as_deref(), &doc.to_json()?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            file,
            fvector,
            flagvector,
            hvector,
            compare_reference,
        } => {
            let doc = load_document(&file)?;
            analyze(&doc, fvector, flagvector, hvector, compare_reference)
        }
        Command::Verify {
            file,
            d,
            n,
            suite,
            json,
        } => {
            let suite: Suite = suite.parse()?;
            let target = match (file, d, n) {
                (Some(path), None, None) => {
                    let doc = load_document(&path)?;
                    let (d, n) = (doc.parameters.d, doc.parameters.n);
                    let realization = doc.realization()?;
                    SuiteTarget {
                        d,
                        n,
                        lattice: lattice_of(&doc)?,
                        realization,
                    }
                }
                (None, Some(d), Some(n)) => SuiteTarget::generated(d, n)?,
                _ => {
                    return Err(Error::InvalidParams(
                        "give either FILE or both --d and --n".into(),
                    ))
                }
            };
            let reports = run_suite(&target, suite, &realize_options()?)?;
            if json {
                say!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                print_reports(&reports);
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Realize { d, n, out } => {
            let real = realize_braxtope(d, n, &realize_options()?)?;
            let facet_count = braxtope::generators::braxtope_facets(d, n)?.len();
            match out {
                Some(path) => {
                    let doc = PolytopeDocument::generate(Kind::Braxtope, None, d, n)?
                        .with_realization(&real);
                    write_or_print(Some(&path), &doc.to_json()?)?;
                }
                None => {
                    for (i, point) in real.points().iter().enumerate() {
                        let coords: Vec<String> = point.iter().map(|c| c.to_string()).collect();
                        say!("x_{i} = ({})", coords.join(", "));
                    }
                }
            }
            say!(
                "{} points, {} facets, oracle-verified",
                real.vertex_count(),
                facet_count
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Triangulate { d, n, check_shallow } => {
            let delta = pulling_triangulation(d, n)?;
            for (i, cell) in delta.cells().iter().enumerate() {
                say!("J_{} = {cell}", i + 1);
            }
            if check_shallow {
                let lattice =
                    build_lattice(n + 1, &braxtope::generators::braxtope_facets(d, n)?)?;
                let witnesses = shallow_check(&lattice, &delta)?;
                if witnesses.is_empty() {
                    say!("shallow: true");
                } else {
                    say!("shallow: false");
                    for w in &witnesses {
                        say!(
                            "  face {} needs the {}-dimensional face {}",
                            w.face, w.container_dim, w.container
                        );
                    }
                    return Ok(ExitCode::FAILURE);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Shell { file, colex: _ } => {
            let doc = load_document(&file)?;
            let family = doc.facet_family()?;
            let lattice = lattice_of(&doc)?;
            let ordered = colex_order(family.facets());
            match colex_shelling_props(&lattice, &family) {
                Ok(minimal) => {
                    for (i, (facet, g)) in ordered.iter().zip(minimal.iter()).enumerate() {
                        say!("step {}: facet {facet}, G = {g}", i + 1);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::ColexProperty {
                    step,
                    property,
                    facet,
                }) => {
                    let what = match property {
                        'a' => "no unique minimal new face",
                        'b' => "minimal new face is not a simplex",
                        _ => "interval up to the facet is not Boolean",
                    };
                    say!("step {step}: facet {facet}: {what}");
                    Ok(ExitCode::FAILURE)
                }
                Err(e) => Err(e),
            }
        }
        Command::Export { file, format } => {
            let doc = load_document(&file)?;
            match format.as_str() {
                "json" => emit(format_args!("{}", doc.to_json()?), false),
                "incidence" => {
                    let family = doc.facet_family()?;
                    let n = doc.parameters.n;
                    for facet in colex_order(family.facets()) {
                        let row: Vec<&str> = (0..=n)
                            .map(|v| if facet.contains(v) { "1" } else { "0" })
                            .collect();
                        say!("{}", row.join(" "));
                    }
                }
                other => {
                    return Err(Error::InvalidParams(format!(
                        "unknown format {other:?}; expected json or incidence"
                    )))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn analyze(
    doc: &PolytopeDocument,
    fvector: bool,
    flagvector: bool,
    hvector: bool,
    compare_reference: bool,
) -> Result<ExitCode, Error> {
    let lattice = lattice_of(doc)?;
    let none_requested = !(fvector || flagvector || hvector || compare_reference);
    if fvector || none_requested {
        say!("f = {}", lattice.f_vector());
    }
    if flagvector {
        for (dims, count) in &lattice.flag_vector().0 {
            let key: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            say!("({}): {count}", key.join(", "));
        }
    }
    if hvector {
        let d = doc.parameters.d;
        let h = if doc.kind == Kind::Braxtope {
            braxtope_h_closed(d, doc.parameters.n)
        } else if lattice.is_simplicial() {
            h_from_f_simplicial(&lattice.f_vector(), d as usize)
        } else {
            return Err(Error::InvalidParams(
                "h-vector is defined here only for braxtopes and simplicial polytopes".into(),
            ));
        };
        say!("h = {h}");
    }
    if compare_reference {
        let (d, n) = (doc.parameters.d, doc.parameters.n);
        let comparand = build_lattice(n + 1, &reference_comparand(d, n)?)?;
        let ours = flag_map(&lattice.flag_vector());
        let theirs = flag_map(&comparand.flag_vector());
        let mut differing = 0usize;
        for (key, value) in &ours {
            let other = theirs.get(key).copied().unwrap_or(0);
            let mark = if *value == other { "equal" } else { "differs" };
            if *value != other {
                differing += 1;
            }
            say!("({key}): {value} {other} {mark}");
        }
        if differing == 0 {
            say!("flag vectors agree on all {} entries", ours.len());
        } else {
            say!("flag vectors differ on {differing} entries");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_reports(reports: &[CheckReport]) {
    for rep in reports {
        let verdict = match rep.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportOnly => "report-only",
        };
        let params = match rep.n {
            Some(n) => format!("d={} n={n}", rep.d),
            None => format!("d={}", rep.d),
        };
        say!("{verdict} {} ({params})", rep.name);
        if rep.verdict != Verdict::Pass {
            for w in &rep.witnesses {
                say!("  witness {w}");
            }
            for note in &rep.notes {
                say!("  note: {note}");
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    say!("{passed}/{} checks passed", reports.len());
}
