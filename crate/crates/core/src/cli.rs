//! The `skewbrace` command line. Reports are `key: value` lines on stdout.
//! Exit codes: 0 success, 1 domain or I/O error, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::automorphism::{brace_automorphisms_capped, nontrivial_witness, structured_aut_of_product_capped};
use crate::brace::SkewBrace;
use crate::construction::{product_brace_capped, ConstructionData};
use crate::error::Error;
use crate::families::{order24_rigid_brace, rigid_2p3_brace_capped, FamilyParams};
use crate::groups::small_groups;
use crate::io::{parse_brace, parse_construction, BraceFile, CONSTRUCTION_HEADER};
use crate::oracle::enumerate_braces_on;
use crate::search::DEFAULT_SEARCH_CAP;

/// Environment variable overriding the default search cap.
pub const CAP_ENV: &str = "SKEWBRACE_CAP";

#[derive(Parser, Debug)]
#[command(name = "skewbrace", version, about = "Exact computation with finite skew braces")]
struct Cli {
    /// Largest order for which searches and builders run.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a brace file.
    Verify { file: PathBuf },
    /// Automorphism group of a brace file, or of the product described by a
    /// construction file (structured search).
    Aut {
        file: PathBuf,
        /// Print every automorphism.
        #[arg(long)]
        list: bool,
    },
    /// Whether the automorphism group is trivial.
    Rigid { file: PathBuf },
    /// A verified non-trivial automorphism, when a sufficient condition holds.
    Witness { file: PathBuf },
    /// Structural summary.
    Info { file: PathBuf },
    /// Build the product brace of a construction file.
    Build {
        construction: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the rigid brace of order 24.
    #[command(name = "build-24")]
    Build24 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the rigid brace of order 2p^3.
    #[command(name = "build-2p3")]
    Build2p3 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        eps: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        d1: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        d2: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        d3: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        d4: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every skew brace of the given order (at most 8), one file per class.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Test two brace files for isomorphism.
    Isocheck { first: PathBuf, second: PathBuf },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Runs the CLI with the cap override taken from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(CAP_ENV).ok(), out, err)
}

pub fn run_with_env<I, T>(args: I, cap_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let cap = match (cli.cap, cap_env) {
        (Some(c), _) => c,
        (None, Some(v)) => match v.trim().parse() {
            Ok(c) => c,
            Err(_) => {
                let _ = writeln!(err, "error: {CAP_ENV} must be a non-negative integer, got `{v}`");
                return 2;
            }
        },
        (None, None) => DEFAULT_SEARCH_CAP,
    };
    match execute(cli.command, cap) {
        Ok(report) => {
            let _ = out.write_all(report.as_bytes());
            0
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn load_brace(path: &Path) -> std::result::Result<SkewBrace, Failure> {
    Ok(parse_brace(&read(path)?)?)
}

/// Writes the brace to `out` if given, else returns it as the report.
fn emit(brace: &SkewBrace, comment: &str, out: Option<PathBuf>) -> CmdResult {
    let text = BraceFile::new(brace.clone()).with_comment(comment).to_text();
    match out {
        Some(path) => {
            write_file(&path, &text)?;
            Ok(format!("order: {}\nwritten: {}\n", brace.order(), path.display()))
        }
        None => Ok(text),
    }
}

fn bool_line(s: &mut String, key: &str, v: bool) {
    let _ = writeln!(s, "{key}: {v}");
}

fn execute(cmd: Command, cap: usize) -> CmdResult {
    let mut s = String::new();
    match cmd {
        Command::Verify { file } => {
            let a = load_brace(&file)?;
            let _ = writeln!(s, "valid: true\norder: {}", a.order());
        }
        Command::Aut { file, list } => {
            let text = read(&file)?;
            let (order, auts, method) = if text.starts_with(CONSTRUCTION_HEADER) {
                let data = parse_construction(&text)?;
                let a = product_brace_capped(&data, cap)?;
                let res = structured_aut_of_product_capped(&data, &a, cap)?;
                (
                    a.order(),
                    res.automorphisms,
                    format!("structured ({:?})", res.characteristic),
                )
            } else {
                let a = parse_brace(&text)?;
                (a.order(), brace_automorphisms_capped(&a, cap)?, "search".to_string())
            };
            let _ = writeln!(s, "order: {order}\nmethod: {method}\naut_order: {}", auts.len());
            if list {
                for f in &auts {
                    let _ = writeln!(s, "map: {f}");
                }
            }
        }
        Command::Rigid { file } => {
            let a = load_brace(&file)?;
            let auts = brace_automorphisms_capped(&a, cap)?;
            let _ = writeln!(s, "order: {}\nrigid: {}", a.order(), auts.is_trivial());
        }
        Command::Witness { file } => {
            let a = load_brace(&file)?;
            let w = nontrivial_witness(&a)?;
            let _ = writeln!(s, "kind: {}", w.kind);
            if let Some(x) = w.element {
                let _ = writeln!(s, "element: {x}");
            }
            if let Some(m) = &w.map {
                let _ = writeln!(s, "map: {m}\nverified: true");
            }
        }
        Command::Info { file } => {
            let a = load_brace(&file)?;
            let pr = a.predicates();
            let _ = writeln!(s, "order: {}", a.order());
            bool_line(&mut s, "dot_abelian", a.dot().is_abelian());
            bool_line(&mut s, "circ_abelian", a.circ().is_abelian());
            bool_line(&mut s, "dot_nilpotent", pr.dot_nilpotent);
            bool_line(&mut s, "circ_nilpotent", pr.circ_nilpotent);
            bool_line(&mut s, "two_sided", pr.two_sided);
            bool_line(&mut s, "bi_skew", pr.bi_skew);
            bool_line(&mut s, "lambda_trivial", a.is_trivial());
            let _ = writeln!(s, "ker_lambda: {}", a.kernel_lambda().len());
            let _ = writeln!(s, "ker_rho: {}", a.kernel_rho().len());
            match brace_automorphisms_capped(&a, cap) {
                Ok(auts) => {
                    let _ = writeln!(s, "aut_order: {}", auts.len());
                }
                Err(Error::SearchCapExceeded { .. }) => {
                    let _ = writeln!(s, "aut_order: skipped (cap {cap})");
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Build { construction, out } => {
            let data: ConstructionData = parse_construction(&read(&construction)?)?;
            let a = product_brace_capped(&data, cap)?;
            return emit(&a, "product brace", out);
        }
        Command::Build24 { out } => {
            if 24 > cap {
                return Err(Error::SearchCapExceeded { n: 24, cap }.into());
            }
            return emit(&order24_rigid_brace(), "rigid brace of order 24", out);
        }
        Command::Build2p3 {
            p,
            eps,
            d1,
            d2,
            d3,
            d4,
            out,
        } => {
            let params = FamilyParams::new(p, eps, d1, d2, d3, d4)?;
            let a = rigid_2p3_brace_capped(&params, cap)?;
            let comment = format!("rigid brace of order 2p^3: p={p} eps={eps} d=({d1},{d2},{d3},{d4})");
            return emit(&a, &comment, out);
        }
        Command::Enumerate { order, out } => {
            std::fs::create_dir_all(&out).map_err(|e| Failure::Io(format!("cannot create {}: {e}", out.display())))?;
            s = enumerate_report(order, &out)?;
        }
        Command::Isocheck { first, second } => {
            let (a, b) = (load_brace(&first)?, load_brace(&second)?);
            match a.brace_isomorphic_capped(&b, cap)? {
                Some(f) => {
                    let _ = writeln!(s, "isomorphic: true\nmap: {f}");
                }
                None => bool_line(&mut s, "isomorphic", false),
            }
        }
    }
    Ok(s)
}

fn enumerate_report(order: usize, dir: &Path) -> std::result::Result<String, Failure> {
    let groups = small_groups(order);
    if groups.is_empty() {
        return Err(Error::SearchCapExceeded { n: order, cap: 8 }.into());
    }
    let mut summary = format!("order: {order}\n");
    let mut total = 0;
    let mut tallies = [0usize; 5];
    let mut histogram = std::collections::BTreeMap::new();
    for (name, g) in &groups {
        let corpus = enumerate_braces_on(g)?;
        for (i, (brace, label)) in corpus.iter().enumerate() {
            let text = BraceFile::new(brace.clone())
                .with_comment(format!("additive group {name}, class {i}"))
                .to_text();
            write_file(&dir.join(format!("{name}_{i}.brace")), &text)?;
            let pr = label.predicates;
            for (slot, v) in tallies.iter_mut().zip([
                label.lambda_trivial,
                pr.two_sided,
                pr.bi_skew,
                pr.circ_nilpotent,
                label.circ_abelian,
            ]) {
                *slot += usize::from(v);
            }
            *histogram.entry(label.aut_order).or_insert(0usize) += 1;
        }
        let _ = writeln!(summary, "group {name}: {}", corpus.len());
        total += corpus.len();
    }
    let _ = writeln!(summary, "total: {total}");
    for (key, v) in [
        "lambda_trivial",
        "two_sided",
        "bi_skew",
        "circ_nilpotent",
        "circ_abelian",
    ]
    .iter()
    .zip(tallies)
    {
        let _ = writeln!(summary, "{key}: {v}");
    }
    for (k, v) in histogram {
        let _ = writeln!(summary, "aut_order {k}: {v}");
    }
    write_file(&dir.join("summary.txt"), &summary)?;
    Ok(summary)
}
