//! Command-line front end.
//!
//! ```text
//! pcgauss collect   <pcp> <word>
//! pcgauss igs       <pcp> <word>...
//! pcgauss order     <pcp> <word>...
//! pcgauss index     <pcp> <word>...
//! pcgauss member    <pcp> <word> -- <word>...
//! pcgauss equal     <pcp> <word>... -- <word>...
//! pcgauss canonical <pcp> <word>...
//! pcgauss verify    <pcp> <word>...
//! ```
//!
//! `--machine` switches to tab-separated, line-stable output and `--bound`
//! caps the group order the `verify` oracle will enumerate. Exit status is 0
//! on success, 1 on parse or validation errors and 2 when `verify` finds a
//! mismatch.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::collect::{collect, Element};
use crate::error::Error;
use crate::igs::{igs_by_generators, subgroups_equal, Igs};
use crate::oracle::{self, FiniteGroupTable, DEFAULT_ENUMERATION_BOUND};
use crate::pcpres::{validate_inverse_tails, PcPresentation, Word};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Human,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Collect { word: String },
    Igs { gens: Vec<String> },
    Order { gens: Vec<String> },
    Index { gens: Vec<String> },
    Member { word: String, gens: Vec<String> },
    Equal { left: Vec<String>, right: Vec<String> },
    Canonical { gens: Vec<String> },
    Verify { gens: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub presentation: PathBuf,
    pub mode: OutputMode,
    pub bound: usize,
}

#[derive(Debug, Parser)]
#[command(name = "pcgauss", version, about = "Subgroups of polycyclic groups via induced generating sequences")]
struct Cli {
    /// Tab-separated, line-stable output.
    #[arg(long, global = true)]
    machine: bool,
    /// Largest group order the verify oracle will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    bound: usize,
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Print the normal form of a word.
    Collect { pcp: PathBuf, word: String },
    /// Print an igs of the subgroup generated by the words.
    Igs { pcp: PathBuf, gens: Vec<String> },
    /// Print the order of the subgroup.
    Order { pcp: PathBuf, gens: Vec<String> },
    /// Print the index of the subgroup.
    Index { pcp: PathBuf, gens: Vec<String> },
    /// Decide whether a word lies in the subgroup given after `--`.
    Member {
        pcp: PathBuf,
        word: String,
        #[arg(last = true)]
        gens: Vec<String>,
    },
    /// Decide whether two generator lists, separated by `--`, generate the same subgroup.
    Equal {
        pcp: PathBuf,
        left: Vec<String>,
        #[arg(last = true)]
        right: Vec<String>,
    },
    /// Print the canonical igs of the subgroup.
    Canonical { pcp: PathBuf, gens: Vec<String> },
    /// Check the computation against brute force (finite or free abelian groups).
    Verify { pcp: PathBuf, gens: Vec<String> },
}

/// Exit status and text produced by a request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

impl Request {
    pub fn from_args<I, T>(args: I) -> std::result::Result<Request, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let (presentation, command) = match cli.command {
            CliCommand::Collect { pcp, word } => (pcp, Command::Collect { word }),
            CliCommand::Igs { pcp, gens } => (pcp, Command::Igs { gens }),
            CliCommand::Order { pcp, gens } => (pcp, Command::Order { gens }),
            CliCommand::Index { pcp, gens } => (pcp, Command::Index { gens }),
            CliCommand::Member { pcp, word, gens } => (pcp, Command::Member { word, gens }),
            CliCommand::Equal { pcp, left, right } => (pcp, Command::Equal { left, right }),
            CliCommand::Canonical { pcp, gens } => (pcp, Command::Canonical { gens }),
            CliCommand::Verify { pcp, gens } => (pcp, Command::Verify { gens }),
        };
        let mode = if cli.machine { OutputMode::Machine } else { OutputMode::Human };
        Ok(Request { command, presentation, mode, bound: cli.bound })
    }
}

/// Parses arguments, runs the request, prints, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Request::from_args(args) {
        Ok(req) => {
            let outcome = run(&req);
            if outcome.status == 1 {
                eprint!("{}", outcome.output);
            } else {
                print!("{}", outcome.output);
            }
            outcome.status
        }
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                1
            } else {
                0
            }
        }
    }
}

pub fn run(req: &Request) -> Outcome {
    let result = PcPresentation::from_file(&req.presentation).and_then(|p| {
        let bad = validate_inverse_tails(&p);
        if !bad.is_empty() {
            let keys: Vec<String> = bad.iter().map(|(i, j)| format!("invconj {i} {j}")).collect();
            return Err(Error::Validation(format!("inconsistent {}", keys.join(", "))));
        }
        run_with(&Arc::new(p), req)
    });
    match result {
        Ok(outcome) => outcome,
        Err(e) => Outcome { status: 1, output: format!("error: {e}\n") },
    }
}

fn parse_element(pres: &Arc<PcPresentation>, word: &str) -> Result<Element> {
    let w: Word = word.parse()?;
    collect(pres, &w)
}

fn parse_elements(pres: &Arc<PcPresentation>, words: &[String]) -> Result<Vec<Element>> {
    words.iter().map(|w| parse_element(pres, w)).collect()
}

fn ok(output: String) -> Result<Outcome> {
    Ok(Outcome { status: 0, output })
}

fn format_igs(igs: &Igs, mode: OutputMode) -> String {
    let mut out = String::new();
    for (i, u) in igs.gens().iter().enumerate() {
        let s = u.stats();
        let lead = s.leading_exponent.expect("igs elements are nontrivial");
        let rel = s.relative_order.expect("igs elements are nontrivial");
        match mode {
            OutputMode::Machine => {
                let _ = writeln!(out, "{u}\t{}\t{lead}\t{rel}", s.depth);
            }
            OutputMode::Human => {
                let _ = writeln!(
                    out,
                    "u{} = {u}  (depth {}, lead {lead}, relorder {rel})",
                    i + 1,
                    s.depth
                );
            }
        }
    }
    if mode == OutputMode::Human && igs.is_empty() {
        out.push_str("trivial subgroup\n");
    }
    out
}

fn run_with(pres: &Arc<PcPresentation>, req: &Request) -> Result<Outcome> {
    match &req.command {
        Command::Collect { word } => ok(format!("{}\n", parse_element(pres, word)?)),
        Command::Igs { gens } => {
            let igs = igs_by_generators(pres, &parse_elements(pres, gens)?)?;
            ok(format_igs(&igs, req.mode))
        }
        Command::Canonical { gens } => {
            let igs = igs_by_generators(pres, &parse_elements(pres, gens)?)?;
            ok(format_igs(&igs.canonical(), req.mode))
        }
        Command::Order { gens } => {
            let igs = igs_by_generators(pres, &parse_elements(pres, gens)?)?;
            ok(format!("{}\n", igs.order()))
        }
        Command::Index { gens } => {
            let igs = igs_by_generators(pres, &parse_elements(pres, gens)?)?;
            ok(format!("{}\n", igs.index()))
        }
        Command::Member { word, gens } => {
            let g = parse_element(pres, word)?;
            let igs = igs_by_generators(pres, &parse_elements(pres, gens)?)?;
            ok(format!("{}\n", igs.contains(&g)?))
        }
        Command::Equal { left, right } => {
            let u = parse_elements(pres, left)?;
            let v = parse_elements(pres, right)?;
            ok(format!("{}\n", subgroups_equal(pres, &u, &v)?))
        }
        Command::Verify { gens } => verify(pres, &parse_elements(pres, gens)?, req),
    }
}

struct Report {
    lines: Vec<(bool, String)>,
}

impl Report {
    fn check(&mut self, pass: bool, what: String) {
        self.lines.push((pass, what));
    }
}

fn verify(pres: &Arc<PcPresentation>, gens: &[Element], req: &Request) -> Result<Outcome> {
    let igs = igs_by_generators(pres, gens)?;
    let mut report = Report { lines: Vec::new() };
    report.check(igs.verify(), "igs criterion".into());
    for g in gens {
        report.check(igs.contains(g)?, format!("generator {g} sifts into the igs"));
    }

    if pres.is_finite() {
        let table = FiniteGroupTable::new(pres, req.bound)?;
        let reference = oracle::enumerate_subgroup(pres, gens, req.bound)?;
        let mut sifted = HashSet::new();
        for g in table.elements() {
            if igs.contains(g)? {
                sifted.insert(g.clone());
            }
        }
        report.check(
            sifted == reference,
            format!("membership over all {} elements", table.order()),
        );
        let order = igs.order();
        report.check(
            order.finite() == Some(&reference.len().into()),
            format!("order {order} vs enumerated {}", reference.len()),
        );
        let index = igs.index();
        report.check(
            order.clone() * index.clone() == pres.group_order(),
            format!("order {order} x index {index} = {}", pres.group_order()),
        );
    } else if pres.is_free_abelian() {
        let n = pres.n();
        let matrix: Vec<Vec<BigInt>> = gens.iter().map(|g| g.exponents().to_vec()).collect();
        let hnf = oracle::hermite_normal_form(&matrix, n);
        let rows: Vec<Vec<BigInt>> =
            igs.canonical().gens().iter().map(|u| u.exponents().to_vec()).collect();
        report.check(rows == hnf.rows, "canonical igs equals the Hermite normal form".into());
        let index = igs.index();
        let expected = hnf.lattice_index(n);
        report.check(index == expected, format!("index {index} vs lattice index {expected}"));
    } else {
        return ok(format!(
            "SKIP: no oracle for infinite groups other than Z^n (igs criterion {})\n",
            if igs.verify() { "holds" } else { "FAILS" }
        ));
    }

    let all = report.lines.iter().all(|(p, _)| *p);
    let mut out = String::new();
    for (pass, what) in &report.lines {
        let tag = if *pass { "PASS" } else { "FAIL" };
        match req.mode {
            OutputMode::Machine => {
                let _ = writeln!(out, "{tag}\t{what}");
            }
            OutputMode::Human => {
                let _ = writeln!(out, "{tag}  {what}");
            }
        }
    }
    out.push_str(if all { "PASS\n" } else { "FAIL\n" });
    Ok(Outcome { status: if all { 0 } else { 2 }, output: out })
}
