//! Command-line interface: expression parsing, problem files, subcommands
//! and deterministic textual reports.
//!
//! Exit codes: 0 success, 1 input error, 2 mathematical-precondition
//! failure (not Cohen-Macaulay, not torsion-free, ...), 3 internal
//! consistency error. Reports go to stdout and are byte-identical across
//! runs on the same input (random draws are seeded and the seed is
//! echoed); timings and diagnostics go to stderr.

pub mod parse;
pub mod problem;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::poly::Polynomial;
use crate::canonical::{ext_presentation, free_resolution};
use crate::error::{Error, Result};
use crate::frobroot::{
    fedder_f_injective, frobenius_root_ideal, nilpotency_analysis, star_closure, FrobeniusPair,
};
use crate::groebner::{ideal_sum, krull_dimension, Dimension, Ideal};
use crate::testideal::{parameter_test_ideal, CanonicalInput};
use problem::ProblemFile;

#[derive(Debug, Parser)]
#[command(
    name = "fsing",
    version,
    about = "Frobenius invariants of quotient rings over F_p"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis of an ideal from the problem file.
    Gb {
        file: PathBuf,
        /// Name of the ideal block to use.
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Krull dimension of R/I.
    Dim {
        file: PathBuf,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Frobenius root of an ideal.
    Root {
        file: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Star closure of an ideal with respect to a multiplier.
    Star {
        file: PathBuf,
        /// Multiplier expression; defaults to the file's [element u].
        #[arg(long)]
        u: Option<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Nilpotency chain, index of nilpotency and torsion-freeness.
    Nilpotency {
        file: PathBuf,
        /// Multiplier expression; defaults to the file's [element u].
        #[arg(long)]
        u: Option<String>,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Fedder criterion, treating the ideal's generators as a regular
    /// sequence.
    Fedder {
        file: PathBuf,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Minimal free resolution and Ext presentation.
    Ext {
        file: PathBuf,
        /// Cohomological degree; defaults to the codimension.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// Full parameter-test-ideal pipeline.
    TestIdeal {
        file: PathBuf,
        /// Ideal block holding extra canonical pre-image generators;
        /// defaults to the file's `[canonical]` block.
        #[arg(long, conflicts_with = "gorenstein")]
        canonical: Option<String>,
        /// Use J = (1) (Gorenstein / complete-intersection quotients).
        #[arg(long)]
        gorenstein: bool,
        /// Parameter test element expression; validated, then used as-is.
        #[arg(long)]
        c: Option<String>,
        /// Seed for the test-element draw when --c is absent.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "I")]
        ideal: String,
    },
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            print!("{report}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn load(path: &PathBuf) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    problem::parse_problem(&text)
}

fn named_ideal<'a>(pf: &'a ProblemFile, name: &str) -> Result<&'a Ideal> {
    pf.ideals.get(name).ok_or_else(|| Error::ProblemFile {
        message: format!("no [ideal {name}] block"),
        line: 0,
    })
}

fn named_element(pf: &ProblemFile, flag: &Option<String>, name: &str) -> Result<Polynomial> {
    if let Some(text) = flag {
        return parse::parse_polynomial(text, &pf.ring);
    }
    pf.elements
        .get(name)
        .cloned()
        .ok_or_else(|| Error::ProblemFile {
            message: format!("no [element {name}] block and no --{name} flag"),
            line: 0,
        })
}

/// A report is a list of key/value facts and named ideal sections; the
/// two formats render the same data.
struct Report {
    format: Format,
    out: String,
}

impl Report {
    fn new(format: Format) -> Self {
        Report {
            format,
            out: String::new(),
        }
    }

    fn fact(&mut self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Human => writeln!(self.out, "{key}: {value}").unwrap(),
            Format::Machine => writeln!(self.out, "{key}={value}").unwrap(),
        }
    }

    /// An ideal as its sorted reduced basis, one generator per line in
    /// human form, indexed keys in machine form.
    fn ideal(&mut self, key: &str, ideal: &Ideal) -> Result<()> {
        let gb = ideal.groebner()?;
        match self.format {
            Format::Human => {
                if !key.is_empty() {
                    writeln!(self.out, "{key}:").unwrap();
                }
                if gb.elements().is_empty() {
                    writeln!(self.out, "0").unwrap();
                }
                for g in gb.elements() {
                    writeln!(self.out, "{g}").unwrap();
                }
            }
            Format::Machine => {
                let key = if key.is_empty() { "ideal" } else { key };
                writeln!(self.out, "{key}.count={}", gb.elements().len()).unwrap();
                for (i, g) in gb.elements().iter().enumerate() {
                    writeln!(self.out, "{key}.{i}={g}").unwrap();
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> String {
        self.out
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let mut report = Report::new(cli.format);
    match &cli.command {
        Command::Gb { file, ideal } => {
            let pf = load(file)?;
            report.ideal("", named_ideal(&pf, ideal)?)?;
        }
        Command::Dim { file, ideal } => {
            let pf = load(file)?;
            match krull_dimension(named_ideal(&pf, ideal)?)? {
                Dimension::Empty => report.fact("dim", "empty"),
                Dimension::Finite(d) => report.fact("dim", d),
            }
        }
        Command::Root { file, e, ideal } => {
            let pf = load(file)?;
            let root = frobenius_root_ideal(named_ideal(&pf, ideal)?, *e)?;
            report.ideal("", &root)?;
        }
        Command::Star { file, u, e, ideal } => {
            let pf = load(file)?;
            let target = named_ideal(&pf, ideal)?;
            let multiplier = named_element(&pf, u, "u")?;
            let closed = star_closure(target, &multiplier, *e)?;
            report.ideal("", &closed)?;
        }
        Command::Nilpotency { file, u, ideal } => {
            let pf = load(file)?;
            let target = named_ideal(&pf, ideal)?;
            let multiplier = named_element(&pf, u, "u")?;
            let pair = FrobeniusPair::new(target.clone(), multiplier)?;
            let nil = nilpotency_analysis(&pair)?;
            report.fact("torsion_free", nil.torsion_free);
            report.fact("eta", nil.eta);
            report.fact("restatement_agrees", nil.restatement_agrees);
            for (k, link) in nil.chain.iter().enumerate() {
                let gens: Vec<String> = link
                    .groebner()?
                    .elements()
                    .iter()
                    .map(|g| g.to_string())
                    .collect();
                report.fact(&format!("chain.{}", k + 1), gens.join(", "));
            }
            report.ideal("nil_ideal", &nil.nil_ideal)?;
        }
        Command::Fedder { file, ideal } => {
            let pf = load(file)?;
            let target = named_ideal(&pf, ideal)?;
            let fedder = fedder_f_injective(target.generators())?;
            report.fact("f_injective", fedder.f_injective);
            report.fact("u", &fedder.multiplier);
        }
        Command::Ext { file, delta, ideal } => {
            let pf = load(file)?;
            let target = named_ideal(&pf, ideal)?;
            let delta = match delta {
                Some(d) => *d,
                None => {
                    let dim = krull_dimension(target)?
                        .finite()
                        .ok_or(Error::UnitIdeal("Ext presentation"))?;
                    pf.ring.nvars() - dim
                }
            };
            let resolution = free_resolution(target, pf.ring.nvars() + 1)?;
            report.fact("resolution_length", resolution.length());
            report.fact("resolution_complete", resolution.complete);
            let mut ranks = vec!["1".to_string()];
            ranks.extend(resolution.steps.iter().map(|s| s.cols().to_string()));
            report.fact("betti", ranks.join(" "));
            let presentation = ext_presentation(target, delta)?;
            report.fact("delta", delta);
            report.fact("ext_generators", presentation.rows());
            report.fact("ext_relations", presentation.cols());
            for r in 0..presentation.rows() {
                let row: Vec<String> = (0..presentation.cols())
                    .map(|c| presentation.entry(r, c).to_string())
                    .collect();
                report.fact(&format!("ext.{r}"), row.join(", "));
            }
        }
        Command::TestIdeal {
            file,
            canonical,
            gorenstein,
            c,
            seed,
            ideal,
        } => {
            let pf = load(file)?;
            let target = named_ideal(&pf, ideal)?;
            let canonical_input = if *gorenstein {
                CanonicalInput::Gorenstein
            } else {
                let raw = match canonical {
                    Some(name) => named_ideal(&pf, name)?.generators().to_vec(),
                    None => pf.canonical.clone().ok_or_else(|| Error::ProblemFile {
                        message: "no [canonical] block; pass --gorenstein or --canonical".into(),
                        line: 0,
                    })?,
                };
                // the pre-image always contains the defining ideal
                let preimage = ideal_sum(&Ideal::new(pf.ring.clone(), raw)?, target)?;
                CanonicalInput::Preimage(preimage)
            };
            let test_element = match c {
                Some(text) => Some(parse::parse_polynomial(text, &pf.ring)?),
                None => pf.elements.get("c").cloned(),
            };
            let result = parameter_test_ideal(target, canonical_input, test_element, *seed)?;
            report.fact("u", &result.multiplier);
            report.fact("c", &result.test_element);
            report.fact("seed", result.seed);
            report.fact("torsion_free", result.nilpotency.torsion_free);
            report.fact("eta", result.nilpotency.eta);
            report.ideal("star", &result.star)?;
            report.ideal("tau", &result.tau)?;
            report.fact("f_rational", result.f_rational);
            for (stage, duration) in &result.timings {
                eprintln!("timing {stage}: {duration:?}");
            }
        }
    }
    Ok(report.finish())
}
