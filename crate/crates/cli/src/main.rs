use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shifted_core::shapes::build_diagram;
use shifted_core::tableaux::tableau_with_diagonal;
use shifted_core::trees::construct_vertex_tableau;
use shifted_core::verify::{self, Grid, VerificationReport, VerifyConfig, DEFAULT_SEED};
use shifted_core::{count_by_gaps, enumerate_tableaux, enumerate_vertices, p_lambda, Partition};

/// Largest `n` enumerated without `--force`.
const SAFETY_CAP: usize = 6;

#[derive(Parser)]
#[command(name = "shifted", version, about = "Shifted standard tableaux, diagonal vectors and P_λ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List standard tableaux of D_λ with their diagonal vectors.
    Tableaux {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Stop after this many tableaux.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Tabulate N_λ: the number of tableaux per gap vector.
    Gaps {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Lattice points of P_λ, in lexicographic order.
    Points {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Vertices of P_λ and the forests they come from.
    Vertices {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also print a standard tableau with each vertex's diagonal.
        #[arg(long)]
        tableaux: bool,
    },
    /// Check a claim and print a report.
    Verify {
        claim: Claim,
        #[command(flatten)]
        opts: VerifyArgs,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated weakly decreasing parts, zero-padded to n.
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow n above the safety cap.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check a single shape instead of a grid.
    #[arg(long, requires = "lambda")]
    n: Option<usize>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_part: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random functionals per shape for the extremity check.
    #[arg(long, default_value_t = 500)]
    functionals: usize,
    /// Largest n for the forest counts.
    #[arg(long, default_value_t = 8)]
    count_max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    force: bool,
    /// Report wall-clock milliseconds (otherwise 0, so output is reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    Identity,
    Bijection,
    VertexCount,
    VertexExtremity,
    BkTreeVertices,
    Supports,
    SchurSymmetry,
    Catalan,
    Tiling,
    Roundtrip,
    TableauValidity,
    Constructed,
    All,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_partition(text: &str, n: usize) -> Result<Partition, Failure> {
    Partition::parse(text, n).map_err(|e| Failure::Usage(format!("invalid --lambda {text:?}: {e}")))
}

fn check_cap(n: usize, force: bool) -> Result<(), Failure> {
    if n > SAFETY_CAP && !force {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the safety cap of {SAFETY_CAP}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    format!("({})", join(xs, ","))
}

fn header(lambda: &Partition) -> Value {
    json!({ "n": lambda.n(), "lambda": lambda.parts() })
}

fn emit_json(out: &mut impl Write, mut doc: Value, key: &str, items: Vec<Value>) -> io::Result<()> {
    doc[key] = Value::Array(items);
    writeln!(out, "{doc}")
}

fn tableaux(out: &mut impl Write, shape: &ShapeArgs, limit: Option<usize>) -> Result<bool, Failure> {
    check_cap(shape.n, shape.force)?;
    let lambda = parse_partition(&shape.lambda, shape.n)?;
    let d = build_diagram(&lambda);
    let iter = enumerate_tableaux(&d).take(limit.unwrap_or(usize::MAX));
    match shape.format {
        Format::Json => {
            let items = iter
                .map(|t| json!({ "rows": t.rows(), "diag": t.diagonal().0 }))
                .collect();
            emit_json(out, header(&lambda), "tableaux", items)?;
        }
        Format::Tsv => {
            writeln!(out, "index\tdiag\trows")?;
            for (i, t) in iter.enumerate() {
                let rows: Vec<String> = t.rows().iter().map(|r| join(r, ",")).collect();
                writeln!(out, "{}\t{}\t{}", i + 1, join(&t.diagonal().0, ","), rows.join("/"))?;
            }
        }
        Format::Text => {
            let mut count = 0;
            for t in iter {
                count += 1;
                writeln!(out, "#{count} diag {}", t.diagonal())?;
                writeln!(out, "{t}")?;
            }
            writeln!(out, "{count} tableaux")?;
        }
    }
    Ok(true)
}

/// Counts as JSON numbers when they fit, otherwise as decimal strings.
fn count_json(c: &impl ToString) -> Value {
    let text = c.to_string();
    text.parse::<u64>().map(Value::from).unwrap_or(Value::String(text))
}

fn gaps(out: &mut impl Write, shape: &ShapeArgs) -> Result<bool, Failure> {
    check_cap(shape.n, shape.force)?;
    let lambda = parse_partition(&shape.lambda, shape.n)?;
    let table = count_by_gaps(&build_diagram(&lambda));
    let rows = table.counts.iter().map(|(g, c)| (g, g.to_diagonal(), c));
    match shape.format {
        Format::Json => {
            let items = rows
                .map(|(g, d, c)| json!({ "gaps": g.0, "diag": d.0, "count": count_json(c) }))
                .collect();
            let mut doc = header(&lambda);
            doc["total"] = count_json(&table.total());
            emit_json(out, doc, "gaps", items)?;
        }
        Format::Tsv => {
            writeln!(out, "gaps\tdiag\tcount")?;
            for (g, d, c) in rows {
                writeln!(out, "{}\t{}\t{c}", join(&g.0, ","), join(&d.0, ","))?;
            }
        }
        Format::Text => {
            for (g, d, c) in rows {
                writeln!(out, "{g} diag {d}: {c}")?;
            }
            writeln!(out, "{} gap vectors, {} tableaux", table.len(), table.total())?;
        }
    }
    Ok(true)
}

fn points(out: &mut impl Write, shape: &ShapeArgs) -> Result<bool, Failure> {
    check_cap(shape.n, shape.force)?;
    let lambda = parse_partition(&shape.lambda, shape.n)?;
    let points = p_lambda(&lambda).lattice_points();
    match shape.format {
        Format::Json => {
            let items = points.iter().map(|p| json!(p)).collect();
            emit_json(out, header(&lambda), "points", items)?;
        }
        Format::Tsv => {
            for p in &points {
                writeln!(out, "{}", join(p, "\t"))?;
            }
        }
        Format::Text => {
            for p in &points {
                writeln!(out, "{}", tuple(p))?;
            }
            writeln!(out, "{} lattice points", points.len())?;
        }
    }
    Ok(true)
}

fn vertices(out: &mut impl Write, shape: &ShapeArgs, with_tableaux: bool) -> Result<bool, Failure> {
    check_cap(shape.n, shape.force)?;
    let lambda = parse_partition(&shape.lambda, shape.n)?;
    let d = build_diagram(&lambda);
    let mut ok = true;
    let mut items = Vec::new();
    for v in enumerate_vertices(&lambda) {
        let in_family = v.in_tree_family(&lambda);
        let tableau = with_tableaux.then(|| match &v.tree {
            Some(tree) if in_family => construct_vertex_tableau(tree, &lambda).ok(),
            _ => tableau_with_diagonal(&d, &v.diagonal()),
        });
        let rows = tableau.map(|t| match t {
            Some(t) if t.is_standard() && t.diagonal() == v.diagonal() => Some(t.rows()),
            _ => {
                ok = false;
                None
            }
        });
        items.push((v, in_family, rows));
    }
    match shape.format {
        Format::Json => {
            let items = items
                .into_iter()
                .map(|(v, in_family, rows)| {
                    let mut item = json!({
                        "tree": v.tree.as_ref().map(|t| t.encoding()),
                        "forest": v.forest.encoding(),
                        "vertex": v.t,
                        "diag": v.diagonal().0,
                        "bk_tree": in_family,
                    });
                    if let Some(rows) = rows {
                        item["tableau"] = json!(rows);
                    }
                    item
                })
                .collect();
            emit_json(out, header(&lambda), "vertices", items)?;
        }
        Format::Tsv => {
            writeln!(out, "forest\ttree\tvertex\tdiag\tbk_tree{}", if with_tableaux { "\ttableau" } else { "" })?;
            for (v, in_family, rows) in items {
                let tree = v.tree.as_ref().map(|t| t.encoding()).unwrap_or_else(|| "-".into());
                let mut line = format!(
                    "{}\t{tree}\t{}\t{}\t{in_family}",
                    v.forest,
                    join(&v.t, ","),
                    join(&v.diagonal().0, ",")
                );
                if let Some(rows) = rows {
                    let rows = rows.map(|r| r.iter().map(|row| join(row, ",")).collect::<Vec<_>>().join("/"));
                    let _ = write!(line, "\t{}", rows.unwrap_or_else(|| "-".into()));
                }
                writeln!(out, "{line}")?;
            }
        }
        Format::Text => {
            let count = items.len();
            for (v, in_family, rows) in items {
                let tree = v.tree.as_ref().map(|t| format!(" tree {t}")).unwrap_or_default();
                let mark = if in_family { " [B_k]" } else { "" };
                writeln!(out, "forest {}{tree}{mark}: vertex {} diag {}", v.forest, tuple(&v.t), v.diagonal())?;
                match rows {
                    Some(Some(rows)) => {
                        for row in rows {
                            writeln!(out, "  {}", join(&row, " "))?;
                        }
                    }
                    Some(None) => writeln!(out, "  no standard tableau found")?,
                    None => {}
                }
            }
            writeln!(out, "{count} vertices")?;
        }
    }
    Ok(ok)
}

fn run_verify(out: &mut impl Write, claim: Claim, opts: &VerifyArgs) -> Result<bool, Failure> {
    let grid = match (&opts.n, &opts.lambda) {
        (Some(n), Some(text)) => {
            check_cap(*n, opts.force)?;
            Grid::Single(parse_partition(text, *n)?)
        }
        _ => {
            check_cap(opts.max_n, opts.force)?;
            Grid::Bounded { max_n: opts.max_n, max_part: opts.max_part }
        }
    };
    let config = VerifyConfig {
        grid,
        seed: opts.seed,
        count_max_n: opts.count_max_n,
        functionals: opts.functionals,
        ..VerifyConfig::default()
    };
    let g = &config.grid;
    let mut reports: Vec<VerificationReport> = match claim {
        Claim::Identity => vec![verify::verify_identity(g)],
        Claim::Bijection => vec![verify::verify_bijection(g)],
        Claim::VertexCount => vec![verify::verify_vertex_count(config.count_max_n)],
        Claim::VertexExtremity => vec![verify::verify_vertex_extremity(g, config.seed, config.functionals)],
        Claim::BkTreeVertices => vec![verify::verify_tree_family(g)],
        Claim::Supports => vec![verify::verify_supports(g, config.seed, config.families)],
        Claim::SchurSymmetry => vec![verify::verify_schur_symmetry(g, config.seed)],
        Claim::Catalan => vec![verify::verify_catalan(10)],
        Claim::Tiling => vec![verify::verify_tiling(7)],
        Claim::Roundtrip => vec![verify::verify_roundtrip(g)],
        Claim::TableauValidity => vec![verify::verify_tableau_validity(g)],
        Claim::Constructed => vec![verify::verify_constructed(g)],
        Claim::All => verify::verify_all(&config),
    };
    if !opts.timing {
        for r in &mut reports {
            r.ms = 0;
        }
    }
    for r in &reports {
        let status = if r.passed() { "pass" } else { "fail" };
        match opts.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))?,
            Format::Tsv => writeln!(out, "{}\t{status}\t{}\t{}", r.claim, r.ms, r.params)?,
            Format::Text => {
                writeln!(out, "{} {} {} ({} ms)", status.to_uppercase(), r.claim, r.params, r.ms)?;
                if let Some(w) = &r.witness {
                    writeln!(out, "  witness: {w}")?;
                }
            }
        }
    }
    Ok(reports.iter().all(VerificationReport::passed))
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, Failure> {
    match &cli.command {
        Command::Tableaux { shape, limit } => tableaux(out, shape, *limit),
        Command::Gaps { shape } => gaps(out, shape),
        Command::Points { shape } => points(out, shape),
        Command::Vertices { shape, tableaux } => vertices(out, shape, *tableaux),
        Command::Verify { claim, opts } => run_verify(out, *claim, opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
