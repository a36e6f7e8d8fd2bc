use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leafbox::gadgets::{
    build_sk, build_spider, build_tight_leaf_power_instance, build_tk, SpiderSpec,
};
use leafbox::random::{random_leaf_root, random_tree};
use leafbox::tree::TreeJson;
use leafbox::verify::{
    find_asteroidal_triple, is_chordal, is_interval_graph, verify_representation,
};
use leafbox::{
    build_box_rep, build_graph_from_leaf_root, build_leaf_power_box_rep, critical_clique_graph,
    power, BoxRep, Graph, LeafRoot, RootedTree, Verdict,
};
use serde_json::Value;

/// Box representations of tree powers and leaf powers.
///
/// Every INPUT/OUTPUT argument accepts `-` for standard input/output.
/// Exit status: 0 on success, 1 when a verification or recognition comes
/// out negative (the witness goes to standard output), 2 on bad input.
#[derive(Parser)]
#[command(name = "leafbox", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true, default_value = "-")]
    output: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a gadget tree, a random tree or a leaf root.
    #[command(subcommand)]
    Gen(Gen),
    /// k-th power of a graph.
    Power { graph: PathBuf, k: usize },
    /// (k+1)-box representation of the k-th power of a tree.
    Boxrep {
        tree: PathBuf,
        k: usize,
        /// Root to use; defaults to the tree JSON's root, else the smallest inner vertex.
        #[arg(long)]
        root: Option<usize>,
    },
    /// (k-1)-box representation of the graph of a k-leaf root.
    Leafrep {
        leaf_root: PathBuf,
        /// Emit the leaf power graph itself instead of its representation.
        #[arg(long)]
        graph: bool,
    },
    /// Check that a box representation realizes a graph exactly.
    Verify { graph: PathBuf, rep: PathBuf },
    /// Test a graph for a class; `at` succeeds when the graph is asteroidal-triple-free.
    Recognize { class: Class, graph: PathBuf },
    /// Critical clique graph; each vertex is labeled with its members.
    Ccgraph { graph: PathBuf },
    /// Re-emit a graph as JSON or DOT, or a box representation as CSV or SVG.
    Convert {
        format: Format,
        input: PathBuf,
        /// Graph whose labels name the SVG rectangles.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// S_k: w(k) legs of length k.
    Sk { k: usize },
    /// T_k: f(k) legs of length k+1.
    Tk { k: usize },
    /// Spider with L legs of D vertices each.
    Spider { legs: usize, length: usize },
    /// Uniform random labeled tree from a seeded Prüfer sequence.
    RandomTree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random k-leaf root: a random tree on INNER vertices plus pendant leaves.
    LeafRoot {
        inner: usize,
        k: usize,
        #[arg(long, default_value_t = 2)]
        max_pendants: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Leaf root of the k-leaf power built from T_{k-2}.
    Tight { k: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Interval,
    Chordal,
    At,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Svg,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure(format!("malformed {what}: {e}")))
}

/// A graph given as graph JSON, tree JSON (`parent` array) or DOT. The tree
/// JSON root comes back alongside.
fn read_graph(path: &PathBuf) -> Result<(Graph, Option<usize>), Failure> {
    let text = read_input(path)?;
    if !text.trim_start().starts_with('{') {
        return Ok((Graph::from_dot(&text)?, None));
    }
    let value: Value = parse_json(&text, "JSON")?;
    if value.get("parent").is_some() {
        let json: TreeJson = parse_json(&text, "tree JSON")?;
        let rt = RootedTree::try_from(&json)?;
        return Ok((rt.graph().clone(), Some(json.root)));
    }
    Ok((parse_json(&text, "graph JSON")?, None))
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(value)? + "\n")
}

/// Verdict JSON; a labeled graph also gets the witness vertices by label.
fn verdict_output(g: &Graph, verdict: &Verdict) -> Outcome {
    let mut value = serde_json::to_value(verdict)?;
    if let (Some(w), Some(_)) = (&verdict.witness, g.labels()) {
        let names: Vec<String> = w.vertices().into_iter().map(|v| g.label(v)).collect();
        value["witness_labels"] = names.into();
    }
    Ok((serde_json::to_string(&value)? + "\n", verdict.ok))
}

fn generate(cmd: &Gen) -> Outcome {
    let text = match *cmd {
        Gen::Sk { k } => json_line(&build_sk(k)?)?,
        Gen::Tk { k } => json_line(&build_tk(k)?)?,
        Gen::Spider { legs, length } => json_line(&build_spider(SpiderSpec {
            leg_count: legs,
            leg_length: length,
        })?)?,
        Gen::RandomTree { n, seed } => json_line(&random_tree(n, seed)?)?,
        Gen::LeafRoot {
            inner,
            k,
            max_pendants,
            seed,
        } => json_line(&random_leaf_root(inner, max_pendants, k, seed)?)?,
        Gen::Tight { k } => json_line(&build_tight_leaf_power_instance(k)?.0)?,
    };
    Ok((text, true))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen(cmd) => generate(cmd),
        Command::Power { graph, k } => {
            let (g, _) = read_graph(graph)?;
            Ok((json_line(&power(&g, *k)?)?, true))
        }
        Command::Boxrep { tree, k, root } => {
            let (t, json_root) = read_graph(tree)?;
            // a tree JSON rooted at a leaf is still a valid tree; fall back to the default root
            let root = root.or(json_root.filter(|&r| t.n() <= 2 || t.degree(r) >= 2));
            let rep: BoxRep = build_box_rep(&t, *k, root)?;
            Ok((json_line(&rep)?, true))
        }
        Command::Leafrep { leaf_root, graph } => {
            let lr: LeafRoot = parse_json(&read_input(leaf_root)?, "leaf root JSON")?;
            if *graph {
                return Ok((json_line(&build_graph_from_leaf_root(&lr))?, true));
            }
            let rep: BoxRep = build_leaf_power_box_rep(&lr)?;
            Ok((json_line(&rep)?, true))
        }
        Command::Verify { graph, rep } => {
            let (g, _) = read_graph(graph)?;
            let rep: BoxRep = parse_json(&read_input(rep)?, "box representation JSON")?;
            verdict_output(&g, &verify_representation(&g, &rep)?)
        }
        Command::Recognize { class, graph } => {
            let (g, _) = read_graph(graph)?;
            let verdict = match class {
                Class::Interval => is_interval_graph(&g),
                Class::Chordal => is_chordal(&g),
                Class::At => find_asteroidal_triple(&g).map_or_else(Verdict::pass, Verdict::fail),
            };
            verdict_output(&g, &verdict)
        }
        Command::Ccgraph { graph } => {
            let (g, _) = read_graph(graph)?;
            Ok((json_line(&critical_clique_graph(&g).0)?, true))
        }
        Command::Convert {
            format,
            input,
            labels,
        } => convert(*format, input, labels.as_ref()),
    }
}

fn convert(format: Format, input: &PathBuf, labels: Option<&PathBuf>) -> Outcome {
    let text = match format {
        Format::Json => json_line(&read_graph(input)?.0)?,
        Format::Dot => read_graph(input)?.0.to_dot(),
        Format::Csv => {
            let rep: BoxRep = parse_json(&read_input(input)?, "box representation JSON")?;
            rep.to_csv()
        }
        Format::Svg => {
            let rep: BoxRep = parse_json(&read_input(input)?, "box representation JSON")?;
            let names: Vec<String> = match labels {
                Some(path) => {
                    let (g, _) = read_graph(path)?;
                    (0..g.n()).map(|v| g.label(v)).collect()
                }
                None => (0..rep.len()).map(|v| v.to_string()).collect(),
            };
            leafbox::svg::to_svg(&rep, &names)?
        }
    };
    Ok((text, true))
}

fn write_output(path: &PathBuf, text: &str) -> io::Result<()> {
    if path.as_os_str() == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()
    } else {
        fs::write(path, text)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            if let Err(e) = write_output(&cli.output, &text) {
                eprintln!("leafbox: {}: {e}", cli.output.display());
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("leafbox: {}", msg.lines().next().unwrap_or("error"));
            ExitCode::from(2)
        }
    }
}
