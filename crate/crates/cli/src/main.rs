use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use csfkit::graph::canonical_form;
use csfkit::pairgen::{glue_rooted_trees, verify_p1, RootedTree};
use csfkit::rewrite::{combination_csf, path_split, triangle_split, wedge_split};
use csfkit::search::{search, SearchClass};
use csfkit::treedata::{reconstruct_from_pairs, reconstruct_from_theta, theta_tables, ThetaTable};
use csfkit::{
    chromatic_symmetric_function_with, extract_invariants, Combination, Csf, CsfConfig, Error, Graph,
};
use num_bigint::BigInt;
use sha2::{Digest, Sha256};

const EXIT_UNEQUAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

#[derive(Parser)]
#[command(name = "csfkit", version, about = "Chromatic symmetric functions in the power-sum basis")]
struct Cli {
    /// Largest edge count for subset enumeration (overrides CSFKIT_MAX_EDGES).
    #[arg(long, global = true)]
    max_edges: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print X_G, the chromatic polynomial at k, or the invariants read from X_G.
    Csf {
        /// Edge-list file, or a combination file with --combination.
        input: PathBuf,
        /// Print the polynomial (the default).
        #[arg(long, conflicts_with_all = ["chromatic", "report"])]
        poly: bool,
        /// Print the number of proper colourings with k colours.
        #[arg(long, value_name = "K")]
        chromatic: Option<u64>,
        /// Print the invariants recovered from the coefficients.
        #[arg(long, conflicts_with = "chromatic")]
        report: bool,
        /// Read lines "<coefficient> <edge-list path>" and sum their functions.
        #[arg(long)]
        combination: bool,
    },
    /// Compare the chromatic symmetric functions of two graphs.
    Equal { a: PathBuf, b: PathBuf },
    /// Apply one deletion identity to the named edges.
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum)]
        rule: Rule,
        /// Comma-separated edge indices: three for triangle and wedge, two for path.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        edges: Vec<usize>,
        /// Keep applying the triangle rule until every term is triangle-free.
        #[arg(long)]
        reduce: bool,
        /// Write each term to <dir>/term<i>.txt, plus <dir>/combination.txt.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Glue two rooted trees into a pair of unicyclic graphs with equal X.
    MakePair {
        tree1: PathBuf,
        root1: usize,
        tree2: PathBuf,
        root2: usize,
        /// Outputs go to <prefix>_h.txt and <prefix>_j.txt.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the singleton and pair θ-images of a tree.
    Theta {
        input: PathBuf,
        #[arg(long)]
        pairs_only: bool,
    },
    /// Rebuild a single-centroid tree from θ-data.
    Reconstruct {
        input: PathBuf,
        /// Use pair images only, ignoring any singleton lines.
        #[arg(long)]
        pairs_only: bool,
        /// Write the tree here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for non-isomorphic graphs with equal X among all graphs of a class.
    Search {
        n: usize,
        #[arg(long, value_enum, default_value = "tree")]
        class: ClassArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Triangle,
    Path,
    Wedge,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tree,
    Unicyclic,
    All,
}

impl From<ClassArg> for SearchClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Tree => SearchClass::Tree,
            ClassArg::Unicyclic => SearchClass::Unicyclic,
            ClassArg::All => SearchClass::All,
        }
    }
}

enum Failure {
    Core(Error),
    InFile(PathBuf, Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    Unequal,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?).map_err(|e| with_path(path, e))
}

fn with_path(path: &Path, e: Error) -> Failure {
    Failure::InFile(path.to_path_buf(), e)
}

fn checksum(x: &Csf) -> String {
    hex::encode(Sha256::digest(x.to_text().as_bytes()))
}

fn read_combination(path: &Path) -> Result<Combination, Failure> {
    let base = path.parent().unwrap_or(Path::new("."));
    let mut combination = Combination::new();
    for (i, line) in read(path)?.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| with_path(path, Error::Parse { line: i + 1, message });
        let (coef, file) = line
            .split_once(' ')
            .ok_or_else(|| bad(format!("expected \"<coefficient> <path>\", got {line:?}")))?;
        let c: BigInt = coef.parse().map_err(|_| bad(format!("bad coefficient {coef:?}")))?;
        combination.push(c, read_graph(&base.join(file))?);
    }
    Ok(combination)
}

fn cmd_csf(
    config: &CsfConfig,
    input: &Path,
    chromatic: Option<u64>,
    report: bool,
    combination: bool,
) -> Outcome {
    let x: Csf = if combination {
        combination_csf(&read_combination(input)?, config)?
    } else {
        chromatic_symmetric_function_with(&read_graph(input)?, config)?
    };
    if let Some(k) = chromatic {
        return Ok(format!("{}\n", x.specialize(k)));
    }
    if report {
        let r = extract_invariants(&x)?;
        let mut out = String::new();
        let matchings: Vec<String> = r.matching_counts.iter().map(ToString::to_string).collect();
        writeln!(out, "vertices {}", r.vertex_count).unwrap();
        writeln!(out, "edges {}", r.edge_count).unwrap();
        writeln!(out, "matchings {}", matchings.join(",")).unwrap();
        writeln!(out, "s22 {}", r.s22).unwrap();
        writeln!(out, "s3 {}", r.s3).unwrap();
        writeln!(out, "sum_squared_degrees {}", r.sum_squared_degrees).unwrap();
        writeln!(out, "triangles {}", r.triangle_count).unwrap();
        return Ok(out);
    }
    Ok(x.to_text())
}

fn cmd_equal(config: &CsfConfig, a: &Path, b: &Path) -> Outcome {
    let xa: Csf = chromatic_symmetric_function_with(&read_graph(a)?, config)?;
    let xb: Csf = chromatic_symmetric_function_with(&read_graph(b)?, config)?;
    if xa.degree() != xb.degree() {
        println!("DIFFER in vertex count: {} vs {}", xa.degree(), xb.degree());
        return Err(Failure::Unequal);
    }
    match xa.first_difference(&xb) {
        None => Ok("EQUAL\n".into()),
        Some((lambda, ca, cb)) => {
            println!("DIFFER at {lambda}: {ca} vs {cb}");
            Err(Failure::Unequal)
        }
    }
}

/// Splits triangles until none is left, merging isomorphic terms.
fn reduce_triangles(start: Combination) -> Combination {
    let mut pending: Vec<(BigInt, Graph)> = start.terms().to_vec();
    let mut done: Vec<(BigInt, Graph)> = Vec::new();
    while let Some((c, g)) = pending.pop() {
        match find_triangle(&g) {
            Some([a, b, t]) => {
                let split = triangle_split(&g, a, b, t).expect("found a triangle");
                for (d, h) in split.terms() {
                    pending.push((c.clone() * d, h.clone()));
                }
            }
            None => done.push((c, g)),
        }
    }
    let mut merged: Vec<(BigInt, Graph, csfkit::graph::CanonicalForm)> = Vec::new();
    for (c, g) in done {
        let form = canonical_form(&g);
        match merged.iter_mut().find(|(_, _, f)| *f == form) {
            Some(slot) => slot.0 += c,
            None => merged.push((c, form.to_graph(), form)),
        }
    }
    merged.sort_by(|a, b| a.2.cmp(&b.2));
    merged.into_iter().map(|(c, g, _)| (c, g)).collect()
}

fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        for w in 0..g.vertex_count() {
            if let (Some(a), Some(b)) = (g.edge_index(u, w), g.edge_index(v, w)) {
                return Some([i, a, b]);
            }
        }
    }
    None
}

fn cmd_decompose(
    config: &CsfConfig,
    input: &Path,
    rule: Rule,
    edges: &[usize],
    reduce: bool,
    out_dir: Option<&Path>,
) -> Outcome {
    let g = read_graph(input)?;
    let arity = if matches!(rule, Rule::Path) { 2 } else { 3 };
    if edges.len() != arity {
        return Err(Failure::Usage(format!("this rule takes {arity} edge indices, got {}", edges.len())));
    }
    let mut combination = match rule {
        Rule::Triangle => triangle_split(&g, edges[0], edges[1], edges[2])?,
        Rule::Path => path_split(&g, edges[0], edges[1])?,
        Rule::Wedge => wedge_split(&g, edges[0], edges[1], edges[2])?,
    };
    if reduce {
        combination = reduce_triangles(combination);
        let x: Csf = chromatic_symmetric_function_with(&g, config)?;
        if combination_csf(&combination, config)? != x {
            return Err(Failure::Core(Error::Precondition("reduction changed the function".into())));
        }
    }
    let mut out = String::new();
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_path_buf(), e))?;
            let mut local = String::new();
            for (i, (c, h)) in combination.terms().iter().enumerate() {
                let name = format!("term{}.txt", i + 1);
                let path = dir.join(&name);
                write(&path, &h.to_edge_list())?;
                writeln!(local, "{c} {name}").unwrap();
                writeln!(out, "{c} {}", path.display()).unwrap();
            }
            write(&dir.join("combination.txt"), &local)?;
        }
        None => {
            for (c, h) in combination.terms() {
                writeln!(out, "term {c}").unwrap();
                out.push_str(&h.to_edge_list());
            }
        }
    }
    Ok(out)
}

fn cmd_make_pair(config: &CsfConfig, t1: &Path, r1: usize, t2: &Path, r2: usize, out: &Path) -> Outcome {
    let a = RootedTree::new(read_graph(t1)?, r1)?;
    let b = RootedTree::new(read_graph(t2)?, r2)?;
    let pair = glue_rooted_trees(&a, &b);
    if let Err(f) = verify_p1(&pair.base, pair.u, pair.v, pair.w, pair.z, &pair.phi) {
        return Err(Failure::Core(Error::Precondition(f.to_string())));
    }
    let xh: Csf = chromatic_symmetric_function_with(&pair.h, config)?;
    let xj: Csf = chromatic_symmetric_function_with(&pair.j, config)?;
    if xh != xj {
        return Err(Failure::Core(Error::Precondition("glued graphs have different functions".into())));
    }
    let stem = out.to_string_lossy();
    let (ph, pj) = (PathBuf::from(format!("{stem}_h.txt")), PathBuf::from(format!("{stem}_j.txt")));
    write(&ph, &pair.h.to_edge_list())?;
    write(&pj, &pair.j.to_edge_list())?;
    Ok(format!(
        "{}\n{}\nsha256 {}\n",
        ph.display(),
        pj.display(),
        checksum(&xh)
    ))
}

fn cmd_theta(input: &Path, pairs_only: bool) -> Outcome {
    let table = theta_tables(&read_graph(input)?)?;
    Ok(if pairs_only { table.pairs_only() } else { table }.to_text())
}

fn cmd_reconstruct(input: &Path, pairs_only: bool, out: Option<&Path>) -> Outcome {
    let table = ThetaTable::parse_text(&read(input)?).map_err(|e| with_path(input, e))?;
    let rebuilt = if pairs_only || table.singletons().is_none() {
        reconstruct_from_pairs(&table.pairs_only())?
    } else {
        reconstruct_from_theta(&table)?
    };
    let text = rebuilt.tree.to_edge_list();
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok("CONSISTENT\n".into())
        }
        None => {
            eprintln!("CONSISTENT");
            Ok(text)
        }
    }
}

fn cmd_search(config: &CsfConfig, n: usize, class: ClassArg) -> Outcome {
    let report = search(n, class.into(), config)?;
    eprintln!("elapsed {:.3}s", report.elapsed.as_secs_f64());
    if matches!(class, ClassArg::Tree) && !report.groups.is_empty() {
        eprintln!("FLAG: non-isomorphic trees with equal functions found");
    }
    Ok(report.to_text())
}

fn run(cli: Cli) -> Outcome {
    let mut config = CsfConfig::from_env()?;
    if let Some(m) = cli.max_edges {
        config.max_edges = m;
    }
    match cli.command {
        Command::Csf {
            input,
            poly: _,
            chromatic,
            report,
            combination,
        } => cmd_csf(&config, &input, chromatic, report, combination),
        Command::Equal { a, b } => cmd_equal(&config, &a, &b),
        Command::Decompose {
            input,
            rule,
            edges,
            reduce,
            out_dir,
        } => cmd_decompose(&config, &input, rule, &edges, reduce, out_dir.as_deref()),
        Command::MakePair {
            tree1,
            root1,
            tree2,
            root2,
            out,
        } => cmd_make_pair(&config, &tree1, root1, &tree2, root2, &out),
        Command::Theta { input, pairs_only } => cmd_theta(&input, pairs_only),
        Command::Reconstruct { input, pairs_only, out } => cmd_reconstruct(&input, pairs_only, out.as_deref()),
        Command::Search { n, class } => cmd_search(&config, n, class),
    }
}

fn error_code(e: &Error) -> ExitCode {
    if e.is_resource_limit() {
        ExitCode::from(EXIT_RESOURCE)
    } else {
        ExitCode::from(EXIT_DATA)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Unequal) => ExitCode::from(EXIT_UNEQUAL),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(EXIT_DATA)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
        Err(Failure::InFile(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            error_code(&e)
        }
    }
}
