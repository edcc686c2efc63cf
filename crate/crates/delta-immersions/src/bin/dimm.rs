//! Command-line front end: every library operation on JSON files.
//!
//! Boolean subcommands exit 0 (true) or 1 (false) and stay silent unless
//! `--verbose` is given; structural subcommands stream JSON or DOT to
//! stdout; all errors exit 2 with `E_...`-prefixed lines on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use delta_immersions::{
    are_conjugate, build_complex, check_immersion, coset_automaton, infer_map, is_covering,
    BaseComplex, CellMap, ClosureConfig, DeltaComplex, Error, Presentation, Result, SubmonoidSpec,
    Vertex, Word,
};

#[derive(Parser)]
#[command(
    name = "dimm",
    version,
    about = "Inverse-monoid toolkit for labeled delta-complexes"
)]
struct Cli {
    /// Print boolean answers to stdout.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every invariant of a complex file.
    Validate { file: PathBuf },

    /// Emit the canonical labeling: a fresh base complex and the
    /// relabeled complex.
    Labels { file: PathBuf },

    /// Decide whether two words are equal in the inverse monoid of a
    /// base complex.
    WordEq {
        base: PathBuf,
        w1: String,
        w2: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rounds: Option<u32>,
    },

    /// Decide whether the first word lies below the second in the
    /// natural partial order.
    WordLeq {
        base: PathBuf,
        w1: String,
        w2: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rounds: Option<u32>,
    },

    /// Print the Schützenberger automaton of a word.
    Schutz {
        base: PathBuf,
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rounds: Option<u32>,
    },

    /// Print the fundamental-group presentation of a base complex.
    Pi1 { base: PathBuf },

    /// Check that the label-preserving map between two complexes is an
    /// immersion.
    CheckImmersion {
        source: PathBuf,
        target: PathBuf,
        /// Vertex pair `v=u` seeding the map.
        #[arg(long)]
        at: Option<String>,
        /// Explicit cell map file overriding inference.
        #[arg(long)]
        map: Option<PathBuf>,
    },

    /// Check that the label-preserving map between two complexes is a
    /// covering.
    IsCovering {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        map: Option<PathBuf>,
    },

    /// Print the ω-coset automaton of the closed inverse submonoid
    /// generated by words at a vertex.
    CosetGraph {
        ambient: PathBuf,
        #[arg(long)]
        at: String,
        #[arg(long, num_args = 0..)]
        gens: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rounds: Option<u32>,
    },

    /// Build the complex of a closed inverse submonoid together with its
    /// immersion into the ambient complex.
    Build {
        ambient: PathBuf,
        #[arg(long)]
        at: String,
        #[arg(long, num_args = 0..)]
        gens: Vec<String>,
        /// Write the built complex here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the cell map of the immersion.
        #[arg(long)]
        map_out: Option<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rounds: Option<u32>,
    },

    /// Search for a word conjugating one submonoid onto another; prints
    /// the witness or `none`.
    Conjugate {
        ambient: PathBuf,
        #[arg(long)]
        at: String,
        #[arg(long, num_args = 0..)]
        gens_h: Vec<String>,
        #[arg(long, num_args = 0..)]
        gens_k: Vec<String>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rounds: Option<u32>,
    },
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            report_error(&e);
            ExitCode::from(2)
        }
    }
}

fn report_error(e: &Error) {
    match e {
        Error::InvalidComplex(d) if !d.items.is_empty() => {
            for item in &d.items {
                eprintln!("{}: {}", item.code.tag(), item.message);
            }
        }
        Error::NotAnImmersion(d) => {
            eprintln!("{}: the map is not an immersion", e.tag());
            for item in &d.items {
                eprintln!("{}: {}", item.code.tag(), item.message);
            }
        }
        _ => eprintln!("{}: {e}", e.tag()),
    }
}

fn load_complex(path: &Path) -> Result<DeltaComplex> {
    DeltaComplex::from_json_str(&fs::read_to_string(path)?)
}

fn load_valid_complex(path: &Path) -> Result<DeltaComplex> {
    let c = load_complex(path)?;
    let report = c.validate();
    if report.ok() {
        Ok(c)
    } else {
        Err(Error::InvalidComplex(report))
    }
}

fn load_base(path: &Path) -> Result<BaseComplex> {
    BaseComplex::new(load_complex(path)?)
}

fn closure_config(max_rounds: Option<u32>) -> ClosureConfig {
    ClosureConfig {
        max_rounds: max_rounds.unwrap_or(ClosureConfig::default().max_rounds),
    }
}

fn bool_exit(answer: bool, verbose: bool) -> ExitCode {
    if verbose {
        println!("{answer}");
    }
    if answer {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_words(c: &DeltaComplex, texts: &[String]) -> Result<Vec<Word>> {
    texts.iter().map(|t| c.alphabet().parse_word(t)).collect()
}

/// Loads the (source, target) pair of an immersion query and resolves
/// the cell map from `--map` or `--at`.
fn immersion_inputs(
    source: &Path,
    target: &Path,
    at: Option<&str>,
    map: Option<&Path>,
) -> Result<(DeltaComplex, DeltaComplex, CellMap)> {
    let target = load_valid_complex(target)?;
    let source = load_complex(source)?.relabel_over(target.alphabet())?;
    let report = source.validate();
    if !report.ok() {
        return Err(Error::InvalidComplex(report));
    }
    let pinned = at
        .map(|s| parse_vertex_pair(&source, &target, s))
        .transpose()?;
    let cell_map = match map {
        Some(path) => {
            let value: serde_json::Value = serde_json::from_str(&fs::read_to_string(path)?)?;
            let m = CellMap::from_json(&source, &target, &value)?;
            if let Some((v, u)) = pinned {
                if m.vertex_image(v) != u {
                    return Err(Error::SpecMismatch(format!(
                        "--map sends `{}` elsewhere than `{}`",
                        source.vertex_id(v),
                        target.vertex_id(u)
                    )));
                }
            }
            m
        }
        None => {
            let (v, u) = pinned
                .ok_or_else(|| Error::Schema("need either --at <v>=<u> or --map <file>".into()))?;
            infer_map(&source, &target, v, u)?
        }
    };
    Ok((source, target, cell_map))
}

fn parse_vertex_pair(
    source: &DeltaComplex,
    target: &DeltaComplex,
    text: &str,
) -> Result<(Vertex, Vertex)> {
    let (v, u) = text
        .split_once('=')
        .ok_or_else(|| Error::Schema(format!("expected <v>=<u>, got `{text}`")))?;
    Ok((source.vertex_named(v)?, target.vertex_named(u)?))
}

fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{content}\n"))?,
        None => println!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Validate { file } => {
            load_valid_complex(&file)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Labels { file } => {
            let c = load_complex(&file)?;
            let (base, relabeled) = c.canonical_labeling()?;
            let value = serde_json::json!({
                "base": serde_json::from_str::<serde_json::Value>(&base.complex().to_json_string())?,
                "complex": serde_json::from_str::<serde_json::Value>(&relabeled.to_json_string())?,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::WordEq {
            base,
            w1,
            w2,
            max_rounds,
        } => {
            let base = load_base(&base)?;
            let p = Presentation::new(&base);
            let u = base.alphabet().parse_word(&w1)?;
            let w = base.alphabet().parse_word(&w2)?;
            let answer = p.m_equal_with(&u, &w, &closure_config(max_rounds))?;
            Ok(bool_exit(answer, cli.verbose))
        }
        Cmd::WordLeq {
            base,
            w1,
            w2,
            max_rounds,
        } => {
            let base = load_base(&base)?;
            let p = Presentation::new(&base);
            let u = base.alphabet().parse_word(&w1)?;
            let w = base.alphabet().parse_word(&w2)?;
            let answer = p.m_leq_with(&u, &w, &closure_config(max_rounds))?;
            Ok(bool_exit(answer, cli.verbose))
        }
        Cmd::Schutz {
            base,
            word,
            format,
            max_rounds,
        } => {
            let base = load_base(&base)?;
            let p = Presentation::new(&base);
            let w = base.alphabet().parse_word(&word)?;
            let a = p.schutzenberger_with(&w, &closure_config(max_rounds))?;
            match format {
                Format::Dot => print!("{}", a.to_dot("schutzenberger")),
                Format::Json => println!("{}", serde_json::to_string_pretty(&a.to_json())?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Pi1 { base } => {
            let base = load_base(&base)?;
            println!("{}", base.pi1_presentation());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CheckImmersion {
            source,
            target,
            at,
            map,
        } => {
            let (source, target, f) =
                immersion_inputs(&source, &target, at.as_deref(), map.as_deref())?;
            let report = check_immersion(&f, &source, &target);
            if !report.ok() {
                eprintln!("{report}");
            }
            Ok(bool_exit(report.ok(), cli.verbose))
        }
        Cmd::IsCovering {
            source,
            target,
            at,
            map,
        } => {
            let (source, target, f) =
                immersion_inputs(&source, &target, at.as_deref(), map.as_deref())?;
            let answer = is_covering(&f, &source, &target)?;
            Ok(bool_exit(answer, cli.verbose))
        }
        Cmd::CosetGraph {
            ambient,
            at,
            gens,
            format,
            max_rounds,
        } => {
            let c = load_valid_complex(&ambient)?;
            let base = c.vertex_named(&at)?;
            let generators = parse_words(&c, &gens)?;
            let spec = SubmonoidSpec::new(&c, base, generators);
            let coset = coset_automaton(&spec, &closure_config(max_rounds))?;
            match format {
                Format::Dot => print!("{}", coset.to_dot("coset")),
                Format::Json => println!("{}", serde_json::to_string_pretty(&coset.to_json())?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Build {
            ambient,
            at,
            gens,
            out,
            map_out,
            max_rounds,
        } => {
            let c = load_valid_complex(&ambient)?;
            let base = c.vertex_named(&at)?;
            let generators = parse_words(&c, &gens)?;
            let spec = SubmonoidSpec::new(&c, base, generators);
            let lifted = build_complex(&spec, &closure_config(max_rounds))?;
            emit(out.as_deref(), &lifted.complex.to_json_string())?;
            if let Some(path) = map_out {
                let json = lifted.map.to_json(&lifted.complex, &c);
                fs::write(path, format!("{}\n", serde_json::to_string_pretty(&json)?))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Conjugate {
            ambient,
            at,
            gens_h,
            gens_k,
            max_rounds,
        } => {
            let c = load_valid_complex(&ambient)?;
            let base = c.vertex_named(&at)?;
            let h = SubmonoidSpec::new(&c, base, parse_words(&c, &gens_h)?);
            let k = SubmonoidSpec::new(&c, base, parse_words(&c, &gens_k)?);
            match are_conjugate(&h, &k, &closure_config(max_rounds))? {
                Some(witness) => {
                    println!("{}", c.alphabet().format_word(&witness));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("none");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}
