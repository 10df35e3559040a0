//! Command-line surface: R-matrix evaluation with traces, insertion
//! tracing, 1dsum and Kostka tables, and verification sweeps.
//!
//! Exit codes: 0 success, 2 input/parse failure, 3 algorithm precondition
//! failure (and nonzero for failed verification sweeps).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crystalr::diagram::rmap_diagram_c;
use crystalr::element::{Family, OneRowElement, Partition};
use crystalr::error::Error;
use crystalr::kostka::kostka_fermionic;
use crystalr::letter::{word_from_str, word_to_string};
use crystalr::onedsum::{format_size_table, x_polynomial};
use crystalr::oracle::{BruteForce, EnergySeed, DEFAULT_VERTEX_CAP};
use crystalr::rmatrix::rmap;
use crystalr::tableau::{from_word, insert_letter, to_tableau, TwoRowTableau};

#[derive(Parser)]
#[command(name = "crystalr", version, about = "Combinatorial R matrices and 1dsums for one-row crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Insert,
    Diagram,
    Oracle,
}

#[derive(Args)]
struct ElementInputs {
    /// Left factor as a sorted word, e.g. "1 2 3" or "0 2b 0b"
    #[arg(long)]
    lhs: Option<String>,
    /// Right factor word
    #[arg(long)]
    rhs: Option<String>,
    /// Left factor as coordinates "x1,..,xn;xbarn,..,xbar1;l"
    #[arg(long)]
    lhs_coords: Option<String>,
    /// Right factor coordinates
    #[arg(long)]
    rhs_coords: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the R matrix B_l (x) B_k -> B_k (x) B_l
    Rmap {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        elements: ElementInputs,
        /// Show tableau or diagram snapshots
        #[arg(long)]
        trace: bool,
        /// Implementation to run
        #[arg(long, value_enum, default_value = "insert")]
        algo: Algo,
        /// With --algo oracle: dump the crystal graph
        #[arg(long)]
        dump_graph: bool,
        /// Emit a machine-readable record
        #[arg(long)]
        records: bool,
    },
    /// Column-insert a word into a one-row tableau
    Insert {
        #[arg(long)]
        n: usize,
        /// Destination one-row word
        #[arg(long)]
        target: String,
        /// Source word, inserted from its rightmost letter
        #[arg(long)]
        letters: String,
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate X_{lambda,mu}(t)
    Onedsum {
        #[arg(long)]
        n: usize,
        /// Partition lambda, e.g. "3,1" (empty for the empty partition)
        #[arg(long, default_value = "")]
        lambda: String,
        /// Partition mu, e.g. "2,1,1"
        #[arg(long)]
        mu: String,
        /// Also print the fermionic Kostka polynomial (|lambda| = |mu| only)
        #[arg(long)]
        kostka: bool,
    },
    /// Print the X_{lambda,mu}(t) tables for all mu up to a size
    Table {
        #[arg(long, default_value_t = 4)]
        max_mu_size: usize,
    },
    /// Sweep rule vs oracle (and diagram for c1) over capacity ranges
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        lmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_element(
    family: Family,
    n: usize,
    word: &Option<String>,
    coords: &Option<String>,
    side: &str,
) -> Result<OneRowElement, Error> {
    match (word, coords) {
        (Some(w), None) => {
            let word = word_from_str(w)?;
            let l = word.len();
            from_word(&word, family, n, l)
        }
        (None, Some(c)) => {
            let fields: Vec<&str> = c.split(';').collect();
            if fields.len() != 3 {
                return Err(Error::WordParse(format!(
                    "{side}: expected \"x1,..,xn;xbarn,..,xbar1;l\", got {c:?}"
                )));
            }
            let nums = |s: &str| -> Result<Vec<u32>, Error> {
                s.split(',')
                    .map(|v| v.trim().parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| Error::WordParse(format!("{side}: bad coordinate list {s:?}")))
            };
            let mut all = nums(fields[0])?;
            all.extend(nums(fields[1])?);
            let l: usize = fields[2]
                .trim()
                .parse()
                .map_err(|_| Error::WordParse(format!("{side}: bad capacity {:?}", fields[2])))?;
            OneRowElement::from_coords(family, n, l, &all)
        }
        _ => Err(Error::WordParse(format!(
            "{side}: provide exactly one of the word or coordinate forms"
        ))),
    }
}

fn word_of(b: &OneRowElement) -> String {
    word_to_string(&to_tableau(b))
}

fn render_tableau(t: &TwoRowTableau) -> String {
    let mut out = word_to_string(t.row1());
    if !t.row2().is_empty() {
        out.push('\n');
        out.push_str(&word_to_string(t.row2()));
    }
    out
}

fn run() -> Result<(), CliFailure> {
    let cli = Cli::parse();
    match cli.command {
        Command::Rmap { family, n, elements, trace, algo, dump_graph, records } => {
            let b1 = parse_element(family, n, &elements.lhs, &elements.lhs_coords, "lhs")
                .map_err(CliFailure::parse)?;
            let b2 = parse_element(family, n, &elements.rhs, &elements.rhs_coords, "rhs")
                .map_err(CliFailure::parse)?;
            let (left, right, energy, extra) = match algo {
                Algo::Insert => {
                    let res = rmap(&b1, &b2, trace).map_err(CliFailure::algo)?;
                    let mut extra = vec![
                        format!("z: {}", res.trace.z),
                        format!("l_prime: {}", res.trace.l_prime),
                        format!("k_prime: {}", res.trace.k_prime),
                        format!("m: {}", res.trace.m),
                    ];
                    if trace {
                        extra.push(format!("insertion tableau:\n{}", render_tableau(&res.trace.insertion)));
                        extra.push(format!("bumped: {}", word_to_string(&res.trace.bumped)));
                        for (i, snap) in res.trace.snapshots.iter().flatten().enumerate() {
                            extra.push(format!("T({i}):\n{}", render_tableau(snap)));
                        }
                    }
                    (res.image_left, res.image_right, res.energy, extra)
                }
                Algo::Diagram => {
                    let res = rmap_diagram_c(&b1, &b2, trace).map_err(CliFailure::algo)?;
                    let mut extra = Vec::new();
                    for block in res.trace.iter().flatten() {
                        extra.push(block.clone());
                    }
                    (res.image_left, res.image_right, res.energy, extra)
                }
                Algo::Oracle => {
                    let table = BruteForce::build(
                        family,
                        n,
                        b1.capacity(),
                        b2.capacity(),
                        EnergySeed::Anchor,
                        DEFAULT_VERTEX_CAP,
                    )
                    .map_err(CliFailure::algo)?;
                    let (c2, c1, h) = table.lookup(&b1, &b2);
                    let mut extra = Vec::new();
                    if dump_graph {
                        extra.push(table.dump());
                    }
                    (c2.clone(), c1.clone(), h, extra)
                }
            };
            if records {
                println!("family: {family}");
                println!("n: {n}");
                println!("lhs: {}", word_of(&b1));
                println!("rhs: {}", word_of(&b2));
                println!("image_lhs: {}", word_of(&left));
                println!("image_rhs: {}", word_of(&right));
                println!("energy: {energy}");
            } else {
                println!("{} (x) {}  ->  {} (x) {}", word_of(&b1), word_of(&b2), word_of(&left), word_of(&right));
                println!("H = {energy}");
            }
            for line in extra {
                println!("{line}");
            }
            Ok(())
        }
        Command::Insert { n, target, letters, trace } => {
            let target = word_from_str(&target).map_err(CliFailure::parse)?;
            let letters = word_from_str(&letters).map_err(CliFailure::parse)?;
            if target.windows(2).any(|w| w[0] > w[1]) {
                return Err(CliFailure::parse(Error::WordParse(
                    "target word must be weakly increasing".into(),
                )));
            }
            let mut acc = TwoRowTableau::from_row(&target);
            for (step, &letter) in letters.iter().rev().enumerate() {
                acc = insert_letter(&acc, letter, n as u32).map_err(CliFailure::algo)?;
                if trace {
                    println!("insert {letter} (step {}):", step + 1);
                    println!("{}", render_tableau(&acc));
                }
            }
            if !trace {
                println!("{}", render_tableau(&acc));
            }
            Ok(())
        }
        Command::Onedsum { n, lambda, mu, kostka } => {
            let lambda: Partition = lambda.parse().map_err(CliFailure::parse)?;
            let mu: Partition = mu.parse().map_err(CliFailure::parse)?;
            let poly = x_polynomial(&lambda, &mu, n).map_err(CliFailure::algo)?;
            println!("{poly}");
            if kostka {
                let k = kostka_fermionic(&lambda, &mu, n).map_err(CliFailure::algo)?;
                println!("kostka: {k}");
            }
            Ok(())
        }
        Command::Table { max_mu_size } => {
            for size in 2..=max_mu_size {
                let table = format_size_table(size).map_err(CliFailure::algo)?;
                println!("{table}");
            }
            Ok(())
        }
        Command::Verify { family, n, lmax, kmax } => {
            let mut failures = 0usize;
            for l in 1..=lmax {
                for k in 1..=kmax {
                    let table =
                        BruteForce::build(family, n, l, k, EnergySeed::Anchor, DEFAULT_VERTEX_CAP)
                            .map_err(CliFailure::algo)?;
                    let mut bad = None;
                    for (b1, b2) in table.pairs() {
                        let expected = table.lookup(b1, b2);
                        let rule = rmap(b1, b2, false).map_err(CliFailure::algo)?;
                        let rule_ok = (&rule.image_left, &rule.image_right, rule.energy)
                            == (expected.0, expected.1, expected.2);
                        let diagram_ok = if family == Family::C1 && l >= k {
                            let d = rmap_diagram_c(b1, b2, false).map_err(CliFailure::algo)?;
                            (&d.image_left, &d.image_right, d.energy)
                                == (expected.0, expected.1, expected.2)
                        } else {
                            true
                        };
                        if !(rule_ok && diagram_ok) {
                            bad = Some((b1.clone(), b2.clone()));
                            break;
                        }
                    }
                    let axiom = table.verify_energy_axiom();
                    match (&bad, axiom) {
                        (None, true) => println!("l={l} k={k}: ok ({} pairs)", table.left.len() * table.right.len()),
                        (Some((b1, b2)), _) => {
                            println!("l={l} k={k}: MISMATCH at {} (x) {}", word_of(b1), word_of(b2));
                            failures += 1;
                        }
                        (None, false) => {
                            println!("l={l} k={k}: energy axiom violated");
                            failures += 1;
                        }
                    }
                }
            }
            if failures == 0 {
                println!("all checks passed");
                Ok(())
            } else {
                Err(CliFailure { code: 1, message: format!("{failures} sweep(s) failed") })
            }
        }
    }
}

struct CliFailure {
    code: u8,
    message: String,
}

impl CliFailure {
    fn parse(e: Error) -> Self {
        CliFailure { code: 2, message: e.to_string() }
    }

    fn algo(e: Error) -> Self {
        let code = match e {
            Error::WordParse(_) | Error::InvalidPartition(_) => 2,
            _ => 3,
        };
        CliFailure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
