use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use operad_core::assoc::{f_vector, flip_graph, Dissection};
use operad_core::braid::{braids_equal, cable, garside_normal_form, BraidWord};
use operad_core::mosaic::{
    canonicalize, complex_json, dual_graph_dot, mosaic_compose, one_skeleton_dot, CellComplex,
    MarkedDissection, MAX_MARKS,
};
use operad_core::operad::{
    braid_bounds, mosaic_bounds, operad_axioms_check, FiniteEndOperad, LawReport,
};
use operad_core::topology::{betti_mod2, h1_with_tree, pi1_presentation, TreeChoice};

const MAX_MOSAIC_N: usize = 8;
const MAX_HOMOLOGY_N: usize = 7;
const MAX_FVECTOR_N: usize = 14;

#[derive(Parser)]
#[command(
    name = "operad",
    version,
    about = "Braids, associahedra and real moduli spaces, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Size {
    /// Number of marked points (polygon sides)
    #[arg(long)]
    n: usize,
    /// Allow sizes beyond the default range guard
    #[arg(long)]
    force: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Cells of the real moduli space
    #[command(subcommand)]
    Mosaic(MosaicCmd),
    /// Associahedra as polygon dissections
    #[command(subcommand)]
    Assoc(AssocCmd),
    /// Homology and fundamental group of the mosaic complex
    #[command(subcommand)]
    Topology(TopologyCmd),
    /// Braid words, normal forms and cabling
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Operad law checks
    #[command(subcommand)]
    Operad(OperadCmd),
    /// Export the mosaic complex (JSON, or DOT of the 1-skeleton)
    Export {
        #[command(flatten)]
        size: Size,
        /// With --format dot, draw the top-cell adjacency graph instead
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum MosaicCmd {
    /// Cell counts by dimension
    Cells {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
    /// Euler characteristic
    Euler {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
    /// Glue the output side of INNER onto the side of OUTER carrying MARK
    Compose {
        /// Marked dissection as JSON: {"n":4,"labels":[1,2,3,4],"diagonals":[]}
        #[arg(long)]
        outer: String,
        #[arg(long)]
        mark: usize,
        #[arg(long)]
        inner: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum AssocCmd {
    /// Face counts of the associahedron of the n-gon, by dimension
    Fvector {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
    /// Triangulations and diagonal flips
    Flipgraph {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct TreeArgs {
    /// Use a random spanning tree with this seed instead of BFS
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum TopologyCmd {
    /// Betti numbers over the two-element field
    Betti2 {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
    /// Presentation of the fundamental group from the 2-skeleton
    Pi1 {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        output: Output,
    },
    /// First integral homology
    H1 {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct WordArgs {
    #[arg(long)]
    strands: usize,
    /// Signed generator indices, e.g. "1 2 -1"
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Garside left normal form
    Nf {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether two words give the same braid
    Equal {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
        #[command(flatten)]
        output: Output,
    },
    /// Cable inner braids into the strands of the outer one
    Cable {
        #[command(flatten)]
        word: WordArgs,
        /// One per outer strand, as STRANDS:WORD, e.g. "2:1" or "1:"
        #[arg(long = "inner", allow_hyphen_values = true)]
        inners: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Instance {
    Braid,
    End,
    Mosaic,
}

#[derive(Subcommand)]
enum OperadCmd {
    /// Exhaustive unit and associativity checks at small size
    Check {
        #[arg(long, value_enum, default_value_t = Instance::Braid)]
        instance: Instance,
        #[command(flatten)]
        output: Output,
    },
}

enum Rendered {
    Json(Value),
    Text(String),
}

type Outcome = Result<Rendered, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("MOSAIC_THREADS")
        .ok()
        .and_then(|t| t.parse::<usize>().ok())
    {
        // a second initialisation only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    let (output, result) = run(cli.command);
    match result.and_then(|r| emit(&output, r)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(output: &Output, rendered: Rendered) -> Result<(), String> {
    let mut text = match rendered {
        Rendered::Json(v) => serde_json::to_string_pretty(&v).map_err(|e| e.to_string())?,
        Rendered::Text(t) => t,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn run(command: Command) -> (Output, Outcome) {
    match command {
        Command::Mosaic(MosaicCmd::Cells { size, output }) => {
            let r = cells(&size, output.format);
            (output, r)
        }
        Command::Mosaic(MosaicCmd::Euler { size, output }) => {
            let r = euler(&size, output.format);
            (output, r)
        }
        Command::Mosaic(MosaicCmd::Compose {
            outer,
            mark,
            inner,
            output,
        }) => {
            let r = compose(&outer, mark, &inner, output.format);
            (output, r)
        }
        Command::Assoc(AssocCmd::Fvector { size, output }) => {
            let r = fvector(&size, output.format);
            (output, r)
        }
        Command::Assoc(AssocCmd::Flipgraph { size, output }) => {
            let r = flipgraph(&size, output.format);
            (output, r)
        }
        Command::Topology(TopologyCmd::Betti2 { size, output }) => {
            let r = betti2(&size, output.format);
            (output, r)
        }
        Command::Topology(TopologyCmd::Pi1 { size, tree, output }) => {
            let r = pi1(&size, &tree, output.format);
            (output, r)
        }
        Command::Topology(TopologyCmd::H1 { size, tree, output }) => {
            let r = homology1(&size, &tree, output.format);
            (output, r)
        }
        Command::Braid(BraidCmd::Nf { word, output }) => {
            let r = nf(&word, output.format);
            (output, r)
        }
        Command::Braid(BraidCmd::Equal {
            word,
            other,
            output,
        }) => {
            let r = equal(&word, &other, output.format);
            (output, r)
        }
        Command::Braid(BraidCmd::Cable {
            word,
            inners,
            output,
        }) => {
            let r = cable_cmd(&word, &inners, output.format);
            (output, r)
        }
        Command::Operad(OperadCmd::Check { instance, output }) => {
            let r = check(instance, output.format);
            (output, r)
        }
        Command::Export { size, dual, output } => {
            let r = export(&size, dual, output.format);
            (output, r)
        }
    }
}

fn guard(size: &Size, max: usize, hard_max: usize) -> Result<usize, String> {
    let n = size.n;
    if n < 3 {
        return Err(format!("n = {n} is below 3"));
    }
    let limit = if size.force { hard_max } else { max };
    if n > limit {
        let hint = if size.force || n > hard_max {
            ""
        } else {
            " (use --force to go further)"
        };
        return Err(format!(
            "n = {n} exceeds the supported maximum {limit}{hint}"
        ));
    }
    Ok(n)
}

fn complex(size: &Size, max: usize) -> Result<CellComplex, String> {
    let n = guard(size, max, MAX_MARKS)?;
    CellComplex::build(n).map_err(|e| e.to_string())
}

fn no_dot(format: Format) -> Result<(), String> {
    if format == Format::Dot {
        Err("this command has no DOT output".to_string())
    } else {
        Ok(())
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cells(size: &Size, format: Format) -> Outcome {
    let c = complex(size, MAX_MOSAIC_N)?;
    Ok(match format {
        Format::Json => Rendered::Json(json!({ "n": c.n(), "counts": c.counts() })),
        Format::Text => Rendered::Text(join(&c.counts())),
        Format::Dot => Rendered::Text(one_skeleton_dot(&c)),
    })
}

fn euler(size: &Size, format: Format) -> Outcome {
    no_dot(format)?;
    let c = complex(size, MAX_MOSAIC_N)?;
    let chi = c.euler_characteristic();
    Ok(match format {
        Format::Text => Rendered::Text(chi.to_string()),
        _ => Rendered::Json(json!({ "n": c.n(), "euler_characteristic": chi })),
    })
}

fn parse_marked(text: &str) -> Result<MarkedDissection, String> {
    serde_json::from_str(text).map_err(|e| format!("bad marked dissection: {e}"))
}

fn compose(outer: &str, mark: usize, inner: &str, format: Format) -> Outcome {
    no_dot(format)?;
    let a = canonicalize(&parse_marked(outer)?);
    let b = canonicalize(&parse_marked(inner)?);
    let c = mosaic_compose(&a, mark, &b).map_err(|e| e.to_string())?;
    let rep = c.representative();
    Ok(match format {
        Format::Text => Rendered::Text(format!(
            "labels: {}\ndiagonals: {}",
            join(&rep.labels()),
            rep.diagonals()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(" ")
        )),
        _ => Rendered::Json(json!({ "dim": c.dim(), "cell": rep })),
    })
}

fn fvector(size: &Size, format: Format) -> Outcome {
    no_dot(format)?;
    let n = guard(size, MAX_FVECTOR_N, 20)?;
    let f = f_vector(n).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => Rendered::Text(join(&f)),
        _ => Rendered::Json(json!({ "n": n, "f_vector": f })),
    })
}

fn flipgraph(size: &Size, format: Format) -> Outcome {
    let n = guard(size, 10, 12)?;
    let (vertices, edges) = flip_graph(n).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => Rendered::Json(json!({ "n": n, "vertices": vertices, "edges": edges })),
        Format::Text => Rendered::Text(format!(
            "{} triangulations, {} flips",
            vertices.len(),
            edges.len()
        )),
        Format::Dot => {
            let mut out = String::from("graph flips {\n");
            for (i, t) in vertices.iter().enumerate() {
                out.push_str(&format!("  t{i} [label=\"{}\"];\n", diagonal_label(t)));
            }
            for (a, b) in &edges {
                out.push_str(&format!("  t{a} -- t{b};\n"));
            }
            out.push_str("}\n");
            Rendered::Text(out)
        }
    })
}

fn diagonal_label(d: &Dissection) -> String {
    d.diagonals()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn betti2(size: &Size, format: Format) -> Outcome {
    no_dot(format)?;
    let c = complex(size, MAX_HOMOLOGY_N)?;
    let b = betti_mod2(&c).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => Rendered::Text(join(&b)),
        _ => Rendered::Json(json!({ "n": c.n(), "betti_mod2": b })),
    })
}

fn tree_choice(tree: &TreeArgs) -> TreeChoice {
    tree.seed.map_or(TreeChoice::Bfs, TreeChoice::Random)
}

fn pi1(size: &Size, tree: &TreeArgs, format: Format) -> Outcome {
    no_dot(format)?;
    let c = complex(size, MAX_HOMOLOGY_N)?;
    let p = pi1_presentation(&c, tree_choice(tree)).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => Rendered::Text(p.to_text()),
        _ => Rendered::Json(json!({
            "n": c.n(),
            "generators": p.generators,
            "relations": p.relations,
            "generator_edges": p.generator_edges,
        })),
    })
}

fn homology1(size: &Size, tree: &TreeArgs, format: Format) -> Outcome {
    no_dot(format)?;
    let c = complex(size, MAX_HOMOLOGY_N)?;
    let g = h1_with_tree(&c, tree_choice(tree)).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => Rendered::Text(g.to_string()),
        _ => Rendered::Json(json!({
            "n": c.n(),
            "h1": g.to_string(),
            "rank": g.rank,
            "torsion": g.torsion,
        })),
    })
}

fn word(args: &WordArgs) -> Result<BraidWord, String> {
    BraidWord::parse(args.strands, &args.word).map_err(|e| e.to_string())
}

fn nf(args: &WordArgs, format: Format) -> Outcome {
    no_dot(format)?;
    let nf = garside_normal_form(&word(args)?);
    Ok(match format {
        Format::Text => {
            let factors: Vec<String> = nf
                .factors
                .iter()
                .map(|p| format!("[{}]", join(&p.to_one_based())))
                .collect();
            Rendered::Text(
                format!("Delta^{} {}", nf.delta_power, factors.join(" "))
                    .trim_end()
                    .to_string(),
            )
        }
        _ => Rendered::Json(serde_json::to_value(&nf).map_err(|e| e.to_string())?),
    })
}

fn equal(args: &WordArgs, other: &str, format: Format) -> Outcome {
    no_dot(format)?;
    let u = word(args)?;
    let v = BraidWord::parse(args.strands, other).map_err(|e| e.to_string())?;
    let eq = braids_equal(&u, &v).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => Rendered::Text(eq.to_string()),
        _ => Rendered::Json(json!({ "strands": args.strands, "equal": eq })),
    })
}

fn parse_inner(spec: &str) -> Result<BraidWord, String> {
    let (strands, letters) = spec
        .split_once(':')
        .ok_or_else(|| format!("inner braid {spec:?} is not of the form STRANDS:WORD"))?;
    let strands: usize = strands
        .trim()
        .parse()
        .map_err(|_| format!("bad strand count in {spec:?}"))?;
    BraidWord::parse(strands, letters).map_err(|e| e.to_string())
}

fn cable_cmd(args: &WordArgs, inners: &[String], format: Format) -> Outcome {
    no_dot(format)?;
    let outer = word(args)?;
    let inners = if inners.is_empty() {
        vec![BraidWord::identity(1); outer.strands()]
    } else {
        inners
            .iter()
            .map(|s| parse_inner(s))
            .collect::<Result<Vec<_>, _>>()?
    };
    let out = cable(&outer, &inners).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => Rendered::Text(join(out.letters())),
        _ => Rendered::Json(json!({ "strands": out.strands(), "word": out.letters() })),
    })
}

fn check(instance: Instance, format: Format) -> Outcome {
    no_dot(format)?;
    let reports: Vec<LawReport> = match instance {
        Instance::Braid => {
            operad_axioms_check(&operad_core::operad::BraidOperad, &braid_bounds(3, 2, 2))
        }
        Instance::Mosaic => {
            let bounds = mosaic_bounds(5, 7).map_err(|e| e.to_string())?;
            operad_axioms_check(&operad_core::operad::MosaicOperad, &bounds)
        }
        Instance::End => {
            let end = FiniteEndOperad::new(2).map_err(|e| e.to_string())?;
            let tables: Vec<_> = (0..=2).flat_map(|k| end.all_tables(k)).collect();
            let bounds = operad_core::operad::CheckBounds {
                outers: tables.clone(),
                inners: tables.clone(),
                max_result_arity: usize::MAX,
            };
            let mut reports = operad_axioms_check(&end, &bounds);
            reports.push(end.equivariance_check(&tables, &tables));
            reports
        }
    };
    Ok(match format {
        Format::Text => Rendered::Text(
            reports
                .iter()
                .map(|r| {
                    format!(
                        "{:<26} {:<8} {:?} ({} cases)",
                        r.law, r.instance, r.status, r.cases
                    )
                })
                .collect::<Vec<_>>()
                .join("\n"),
        ),
        _ => Rendered::Json(serde_json::to_value(&reports).map_err(|e| e.to_string())?),
    })
}

fn export(size: &Size, dual: bool, format: Format) -> Outcome {
    let c = complex(size, MAX_MOSAIC_N)?;
    Ok(match format {
        Format::Dot if dual => Rendered::Text(dual_graph_dot(&c)),
        Format::Dot => Rendered::Text(one_skeleton_dot(&c)),
        Format::Json => {
            Rendered::Json(serde_json::to_value(complex_json(&c)).map_err(|e| e.to_string())?)
        }
        Format::Text => return Err("export supports --format json or dot".to_string()),
    })
}
