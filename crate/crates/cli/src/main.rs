use std::fs;
use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ingraph::automorphism::{aut_order, decompose_with, std_to_perm, DecomposeOptions, StandardAutomorphism};
use ingraph::field::Field;
use ingraph::graph::InclusionGraph;
use ingraph::search::SearchGraph;
use ingraph::{io, Error, ErrorKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod verify;

#[derive(Parser)]
#[command(name = "ingraph", version, about = "Subspace inclusion graphs over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Space {
    /// Field as p^m, optionally with a modulus override p^m:c0,c1,...,cm
    #[arg(long)]
    field: Field,
    /// Dimension of the ambient space
    #[arg(long)]
    n: usize,
}

impl Space {
    fn graph(&self) -> Result<InclusionGraph, Failure> {
        Ok(InclusionGraph::build(&self.field, self.n)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the vertex table and edge list of the graph
    Build {
        #[command(flatten)]
        space: Space,
        /// Output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Also write a Graphviz file
        #[arg(long)]
        dot: bool,
    },
    /// Check degrees, invariants and the automorphism group order
    Verify {
        #[command(flatten)]
        space: Space,
        /// Largest vertex count for which the exhaustive automorphism count runs
        #[arg(long, default_value_t = 100)]
        limit: usize,
        /// Largest group order for which the exhaustive automorphism count runs
        #[arg(long, default_value_t = 1_000_000)]
        max_order: u64,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Factor an automorphism given as a permutation file
    Decompose {
        #[command(flatten)]
        space: Space,
        /// Permutation file: `label -> label` or `i j` lines
        #[arg(long)]
        perm: PathBuf,
        /// Sample every field value of every coordinate pair and check the
        /// additive and multiplicative relations between them
        #[arg(long)]
        full_table: bool,
    },
    /// Write a random standard automorphism as a permutation file
    RandomAuto {
        #[command(flatten)]
        space: Space,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write index pairs instead of subspace labels
        #[arg(long)]
        indices: bool,
    },
    /// Count automorphisms by exhaustive search and compare with the formula
    AutCount {
        #[command(flatten)]
        space: Space,
        /// Stop after this many automorphisms
        #[arg(long)]
        limit: Option<u64>,
    },
}

/// Exit status 1 for a failed check, 2 for bad input.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e.kind() {
            ErrorKind::Integrity => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { space, out, dot } => build(&space, &out, dot),
        Command::Verify { space, limit, max_order, json } => {
            space.graph().and_then(|g| verify::run(&g, verify::Budget { vertices: limit, order: max_order }, json))
        }
        Command::Decompose { space, perm, full_table } => decompose(&space, &perm, full_table),
        Command::RandomAuto { space, seed, out, indices } => random_auto(&space, seed, out.as_deref(), indices),
        Command::AutCount { space, limit } => aut_count(&space, limit),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("ingraph: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ingraph: {msg}");
            ExitCode::from(2)
        }
    }
}

fn build(space: &Space, out: &Path, dot: bool) -> Result<(), Failure> {
    let g = space.graph()?;
    fs::create_dir_all(out)?;
    fs::write(out.join("vertices.tsv"), io::vertex_table(&g))?;
    fs::write(out.join("edges.txt"), io::edge_list(&g))?;
    if dot {
        fs::write(out.join("graph.dot"), io::dot(&g))?;
    }
    println!("vertices\t{}", g.vertex_count());
    println!("edges\t{}", g.edge_count());
    Ok(())
}

fn decompose(space: &Space, perm: &Path, full_table: bool) -> Result<(), Failure> {
    let g = space.graph()?;
    let text = fs::read_to_string(perm).map_err(|e| Failure::Usage(format!("{}: {e}", perm.display())))?;
    let sigma = io::parse_permutation(&g, &text)?;
    if let Err(v) = g.check_automorphism(&sigma) {
        let detail = match v {
            ingraph::Violation::Edge { u, v: w, .. } => {
                format!("{v}: [{}] and [{}]", g.vertex(u), g.vertex(w))
            }
            other => other.to_string(),
        };
        return Err(Failure::Check(format!("not an automorphism: {detail}")));
    }
    let d = decompose_with(&g, &sigma, DecomposeOptions { full_table })?;
    let verified = std_to_perm(&g, &d.standard)?.as_slice() == sigma.as_slice();
    print!("{}", io::standard_record(&d.standard, Some(verified)));
    // A file written by random-auto carries its ground truth in the header.
    if let Ok(truth) = io::parse_standard_record(g.field(), &comment_lines(&text)) {
        let matches = truth == d.standard;
        println!("expected\t{}", if matches { "match" } else { "mismatch" });
        if !matches {
            return Err(Failure::Check(format!("expected {truth}, recovered {}", d.standard)));
        }
    }
    if !verified {
        return Err(Failure::Check("recomposed permutation differs from the input".into()));
    }
    Ok(())
}

fn comment_lines(text: &str) -> String {
    text.lines().filter(|l| l.trim_start().starts_with('#')).collect::<Vec<_>>().join("\n")
}

fn random_auto(space: &Space, seed: u64, out: Option<&Path>, indices: bool) -> Result<(), Failure> {
    if space.n < 3 {
        return Err(Failure::Usage(format!("random-auto needs n >= 3, got {}", space.n)));
    }
    let g = space.graph()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = StandardAutomorphism::random(g.field(), space.n, &mut rng);
    let perm = std_to_perm(&g, &s)?;
    let mut text = format!("# random automorphism, field {}, n {}, seed {seed}\n", g.field(), space.n);
    for line in io::standard_record(&s, None).lines() {
        text.push_str(&format!("# {line}\n"));
    }
    text.push_str(&if indices { io::permutation_pairs(perm.as_slice()) } else { io::permutation_labels(&g, &perm) });
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn aut_count(space: &Space, limit: Option<u64>) -> Result<(), Failure> {
    let g = space.graph()?;
    let search = SearchGraph::new(g.adjacency())?;
    let mut count = 0u64;
    let mut truncated = false;
    search.for_each_automorphism(|_| {
        count += 1;
        if Some(count) == limit {
            truncated = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let field = g.field();
    let formula = aut_order(space.n, field.characteristic() as u64, field.degree())?;
    println!("oracle\t{count}{}", if truncated { "+" } else { "" });
    println!("formula\t{formula}");
    if truncated {
        println!("status\tskipped");
        return Ok(());
    }
    let pass = formula == count.into();
    println!("status\t{}", if pass { "pass" } else { "fail" });
    if pass {
        Ok(())
    } else {
        Err(Failure::Check(format!("oracle found {count} automorphisms, formula gives {formula}")))
    }
}
