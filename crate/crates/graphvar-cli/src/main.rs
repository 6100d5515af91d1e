//! Command-line front end: graph ingestion, family generation, and JSON or
//! text reporting for every computation in the library.
//!
//! Exit codes: 0 on success, 1 on domain/hypothesis errors (a single JSON
//! error object goes to standard error), 2 on usage errors.

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graphvar::cellule::{cellule_dimension, components_multipartite, delta, is_d_heavy};
use graphvar::graph::{ColoredVertexSet, GraphJson};
use graphvar::mcd::{girth_bound_check, irreducibility_range, mcd, McdMethod};
use graphvar::order::{maximal_cellules_known, CelluleOrder, Exactness};
use graphvar::partition::{enumerate_partitions, SetPartition};
use graphvar::suites;
use graphvar::tutte::{poincare_polynomial, tutte_deletion_contraction};
use graphvar::{Error, Graph, Result};

#[derive(Parser)]
#[command(
    name = "graphvar",
    about = "Combinatorial invariants of graph picture spaces",
    long_about = "Computes cellule dimensions, component classifications, Tutte and \
                  Poincare polynomials, and the minimum constraint dimension of a \
                  graph, with exact integer arithmetic throughout.\n\n\
                  Graphs are read as JSON ({\"n\": 4, \"edges\": [[0,1], ...]}, with an \
                  optional \"colors\" array) or generated with --gen family:params. \
                  The environment variable GRAPHVAR_MAX_EDGES may lower (never raise) \
                  the built-in size guards of the exhaustive scans."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct FormatArg {
    /// Output format (JSON is the default and is deterministic).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Graph JSON: a file path, or an inline document starting with '{'.
    #[arg(long, value_name = "PATH|JSON")]
    input: Option<String>,
    /// Generator spec: cycle:7, complete:5, multipartite:3,2,2,
    /// onion:2,2,2, or path:4.
    #[arg(long = "gen", value_name = "SPEC")]
    gen: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Flats,
    Ears,
    All,
}

impl From<MethodArg> for McdMethod {
    fn from(m: MethodArg) -> McdMethod {
        match m {
            MethodArg::Brute => McdMethod::Brute,
            MethodArg::Flats => McdMethod::Flats,
            MethodArg::Ears => McdMethod::Ears,
            MethodArg::All => McdMethod::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    SmallExhaustive,
    Multipartite,
    Onion,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and print its JSON document.
    Gen {
        /// Generator spec, e.g. cycle:7 or multipartite:3,2,2.
        spec: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Minimum constraint dimension with a witness.
    Mcd {
        #[command(flatten)]
        input: InputArgs,
        /// Algorithm; `all` cross-validates every applicable one.
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Length of a shortest cycle (infinity for forests).
    Girth {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Tutte polynomial by memoized deletion-contraction.
    Tutte {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Poincare polynomial of the d-dimensional picture space.
    Poincare {
        #[command(flatten)]
        input: InputArgs,
        /// Ambient dimension.
        #[arg(short)]
        d: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Irreducibility of the picture space, for one d or a range.
    Irreducible {
        #[command(flatten)]
        input: InputArgs,
        /// Single ambient dimension.
        #[arg(short, conflicts_with = "d_max")]
        d: Option<u32>,
        /// Check every dimension from 1 to this bound.
        #[arg(long = "d-max")]
        d_max: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Cellule dimensions d|pi| + (d-1)delta(pi, G).
    #[command(name = "cellule-dim")]
    CelluleDim {
        #[command(flatten)]
        input: InputArgs,
        /// Ambient dimension.
        #[arg(short)]
        d: u32,
        /// A partition as a restricted-growth string, e.g. 0,0,1,2
        /// (omit to list every partition).
        #[arg(long, value_name = "RGS")]
        partition: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Irreducible components of the picture space (partitions indexing
    /// the maximal cellule closures, with an exactness flag).
    Components {
        #[command(flatten)]
        input: InputArgs,
        /// Ambient dimension.
        #[arg(short)]
        d: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The known part of the cellule order, with certificates.
    Order {
        #[command(flatten)]
        input: InputArgs,
        /// Ambient dimension.
        #[arg(short)]
        d: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Whether the indiscrete cellule attains the maximum dimension.
    #[command(name = "d-heavy")]
    DHeavy {
        #[command(flatten)]
        input: InputArgs,
        /// Ambient dimension (at least 2).
        #[arg(short)]
        d: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a self-check suite; nonzero exit on any failure.
    Check {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Girth-bound report: mcd, girth, and the inequality between them.
    GirthBound {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(
                e.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return 0;
            }
            emit_error("usage", &e.to_string());
            return 2;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            emit_error(e.kind(), &e.to_string());
            1
        }
    }
}

fn emit_error(kind: &str, message: &str) {
    let obj = serde_json::json!({"error": {"kind": kind, "message": message}});
    eprintln!("{obj}");
}

// ---------------------------------------------------------------------------
// Input handling
// ---------------------------------------------------------------------------

fn parse_generator(spec: &str) -> Result<(Graph, Option<ColoredVertexSet>)> {
    let (family, params) = spec.split_once(':').ok_or_else(|| {
        Error::InvalidInput(format!("generator spec `{spec}` is not family:params"))
    })?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad generator parameter `{p}`")))
        })
        .collect::<Result<_>>()?;
    let one = |nums: &[usize]| -> Result<usize> {
        if nums.len() == 1 {
            Ok(nums[0])
        } else {
            Err(Error::InvalidInput(format!(
                "generator `{family}` takes exactly one parameter"
            )))
        }
    };
    match family {
        "cycle" => Ok((Graph::cycle(one(&nums)?)?, None)),
        "path" => Ok((Graph::path(one(&nums)?)?, None)),
        "complete" => Ok((Graph::complete(one(&nums)?)?, None)),
        "multipartite" => {
            let colors = ColoredVertexSet::from_counts(&nums)?;
            Ok((colors.graph(), Some(colors)))
        }
        "onion" => Ok((Graph::onion(&nums)?, None)),
        other => Err(Error::InvalidInput(format!(
            "unknown generator family `{other}` (expected cycle, path, complete, \
             multipartite, or onion)"
        ))),
    }
}

fn load_graph(input: &InputArgs) -> Result<(Graph, Option<ColoredVertexSet>)> {
    if let Some(spec) = &input.gen {
        return parse_generator(spec);
    }
    let source = input.input.as_ref().expect("clap group guarantees one");
    let text = if source.trim_start().starts_with('{') {
        source.clone()
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| Error::InvalidInput(format!("cannot read {source}: {e}")))?
    };
    let doc: GraphJson = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("bad graph JSON: {e}")))?;
    let (g, colors) = doc.into_parts()?;
    if let Some(c) = &colors {
        // The colors must describe this very graph.
        if c.graph() != g {
            return Err(Error::InvalidInput(
                "colors do not describe a complete multipartite structure \
                 matching the edge list"
                    .into(),
            ));
        }
    }
    Ok((g, colors))
}

fn parse_rgs(text: &str, n: usize) -> Result<SetPartition> {
    let cleaned = text.trim().trim_start_matches('[').trim_end_matches(']');
    let rgs: Vec<usize> = cleaned
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad partition entry `{p}`")))
        })
        .collect::<Result<_>>()?;
    if rgs.len() != n {
        return Err(Error::InvalidInput(format!(
            "partition has {} entries, the graph has {n} vertices",
            rgs.len()
        )));
    }
    SetPartition::from_rgs(&rgs)
}

// ---------------------------------------------------------------------------
// Output handling
// ---------------------------------------------------------------------------

fn print_output<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(value).expect("serializable output")
        ),
        Format::Text => println!("{}", text()),
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Gen { spec, format } => {
            let (g, colors) = parse_generator(&spec)?;
            let doc = match &colors {
                Some(c) => GraphJson::with_colors(&g, c),
                None => GraphJson::from_graph(&g),
            };
            print_output(format.format, &doc, || {
                format!(
                    "graph with {} vertices, {} edges: {:?}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.edges()
                )
            });
            Ok(0)
        }
        Command::Mcd {
            input,
            method,
            format,
        } => {
            let (g, _) = load_graph(&input)?;
            let result = mcd(&g, method.into())?;
            print_output(format.format, &result, || {
                format!(
                    "mcd = {} (method {}){}",
                    result.value,
                    result.method,
                    match &result.witness {
                        None => String::new(),
                        Some(w) => format!("; witness: {w:?}"),
                    }
                )
            });
            Ok(0)
        }
        Command::Girth { input, format } => {
            let (g, _) = load_graph(&input)?;
            let girth = g.girth();
            #[derive(Serialize)]
            struct Out {
                girth: graphvar::graph::ExtNat,
            }
            print_output(format.format, &Out { girth }, || format!("girth = {girth}"));
            Ok(0)
        }
        Command::Tutte { input, format } => {
            let (g, _) = load_graph(&input)?;
            let t = tutte_deletion_contraction(&g);
            print_output(format.format, &t, || format!("T(x, y) = {t}"));
            Ok(0)
        }
        Command::Poincare { input, d, format } => {
            let (g, _) = load_graph(&input)?;
            let p = poincare_polynomial(&g, d)?;
            print_output(format.format, &p, || format!("P(q) = {p}"));
            Ok(0)
        }
        Command::Irreducible {
            input,
            d,
            d_max,
            format,
        } => {
            let (g, _) = load_graph(&input)?;
            #[derive(Serialize)]
            struct Out {
                d: u32,
                irreducible: bool,
            }
            match (d, d_max) {
                (Some(d), None) => {
                    let range = irreducibility_range(&g, d)?;
                    let &(_, verdict) = range.last().expect("nonempty range");
                    print_output(
                        format.format,
                        &Out {
                            d,
                            irreducible: verdict,
                        },
                        || format!("d = {d}: {}", verdict_text(verdict)),
                    );
                }
                (None, Some(d_max)) => {
                    let range = irreducibility_range(&g, d_max)?;
                    let out: Vec<Out> = range
                        .iter()
                        .map(|&(d, irreducible)| Out { d, irreducible })
                        .collect();
                    print_output(format.format, &out, || {
                        range
                            .iter()
                            .map(|&(d, v)| format!("d = {d}: {}", verdict_text(v)))
                            .collect::<Vec<_>>()
                            .join("\n")
                    });
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "irreducible needs exactly one of -d or --d-max".into(),
                    ))
                }
            }
            Ok(0)
        }
        Command::CelluleDim {
            input,
            d,
            partition,
            format,
        } => {
            let (g, _) = load_graph(&input)?;
            #[derive(Serialize)]
            struct Out {
                partition: SetPartition,
                delta: usize,
                dimension: u64,
            }
            let rows = |pi: SetPartition| -> Out {
                Out {
                    delta: delta(&g, &pi),
                    dimension: cellule_dimension(&g, &pi, d),
                    partition: pi,
                }
            };
            match partition {
                Some(text) => {
                    let pi = parse_rgs(&text, g.vertex_count())?;
                    let out = rows(pi);
                    print_output(format.format, &out, || {
                        format!(
                            "dim of cellule {} = {} (delta = {})",
                            out.partition, out.dimension, out.delta
                        )
                    });
                }
                None => {
                    let out: Vec<Out> =
                        enumerate_partitions(g.vertex_count())?.map(rows).collect();
                    print_output(format.format, &out, || {
                        out.iter()
                            .map(|o| {
                                format!(
                                    "dim of cellule {} = {} (delta = {})",
                                    o.partition, o.dimension, o.delta
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("\n")
                    });
                }
            }
            Ok(0)
        }
        Command::Components { input, d, format } => {
            let (g, colors) = load_graph(&input)?;
            let (components, exactness) = match colors {
                Some(c) => (components_multipartite(&c, d)?, Exactness::Exact),
                None => maximal_cellules_known(&g, d)?,
            };
            #[derive(Serialize)]
            struct Out {
                exact: bool,
                count: usize,
                components: Vec<SetPartition>,
            }
            let out = Out {
                exact: exactness == Exactness::Exact,
                count: components.len(),
                components,
            };
            print_output(format.format, &out, || {
                let mut lines = vec![format!(
                    "{} component{} ({})",
                    out.count,
                    if out.count == 1 { "" } else { "s" },
                    if out.exact { "exact" } else { "heuristic upper set" }
                )];
                lines.extend(out.components.iter().map(|p| p.to_string()));
                lines.join("\n")
            });
            Ok(0)
        }
        Command::Order { input, d, format } => {
            let (g, _) = load_graph(&input)?;
            let order = CelluleOrder::new(&g, d)?;
            #[derive(Serialize)]
            struct Out {
                d: u32,
                partitions: Vec<SetPartition>,
                relations: Vec<graphvar::order::CelluleRelation>,
            }
            let out = Out {
                d,
                partitions: order.partitions().to_vec(),
                relations: order.relations(),
            };
            print_output(format.format, &out, || {
                out.relations
                    .iter()
                    .map(|r| {
                        format!(
                            "{} -> {}: {}{}",
                            r.pi,
                            r.sigma,
                            r.status.label(),
                            if r.certificate.is_empty() {
                                String::new()
                            } else {
                                format!(" ({})", r.certificate)
                            }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(0)
        }
        Command::DHeavy { input, d, format } => {
            let (g, _) = load_graph(&input)?;
            let heavy = is_d_heavy(&g, d)?;
            let n = g.vertex_count();
            let indiscrete = cellule_dimension(&g, &SetPartition::indiscrete(n), d);
            let mut max_dimension = 0;
            let mut max_partition = SetPartition::indiscrete(n);
            for pi in enumerate_partitions(n)? {
                let dim = cellule_dimension(&g, &pi, d);
                if dim > max_dimension {
                    max_dimension = dim;
                    max_partition = pi;
                }
            }
            #[derive(Serialize)]
            struct Out {
                d_heavy: bool,
                indiscrete_dimension: u64,
                max_dimension: u64,
                max_partition: SetPartition,
            }
            let out = Out {
                d_heavy: heavy,
                indiscrete_dimension: indiscrete,
                max_dimension,
                max_partition,
            };
            print_output(format.format, &out, || {
                format!(
                    "{}-heavy: {} (indiscrete dimension {}, maximum {} at {})",
                    d, out.d_heavy, out.indiscrete_dimension, out.max_dimension, out.max_partition
                )
            });
            Ok(0)
        }
        Command::Check { suite, format } => {
            let reports = match suite {
                SuiteArg::SmallExhaustive => vec![suites::suite_small_exhaustive()?],
                SuiteArg::Multipartite => vec![suites::suite_multipartite()?],
                SuiteArg::Onion => vec![suites::suite_onion()?],
                SuiteArg::All => suites::suite_all()?,
            };
            let all_passed = reports.iter().all(|r| r.passed);
            print_output(format.format, &reports, || {
                let mut lines = Vec::new();
                for r in &reports {
                    lines.push(format!(
                        "suite {}: {}",
                        r.suite,
                        if r.passed { "PASS" } else { "FAIL" }
                    ));
                    for l in &r.lines {
                        lines.push(format!(
                            "  [{}] {} - {}",
                            if l.pass { "PASS" } else { "FAIL" },
                            l.label,
                            l.detail
                        ));
                    }
                }
                lines.join("\n")
            });
            if all_passed {
                Ok(0)
            } else {
                emit_error("check_failed", "one or more checks failed; see report");
                Ok(1)
            }
        }
        Command::GirthBound { input, format } => {
            let (g, _) = load_graph(&input)?;
            let report = girth_bound_check(&g)?;
            print_output(format.format, &report, || {
                format!(
                    "mcd = {}, girth = {}, bound holds: {}",
                    report.mcd, report.girth, report.holds
                )
            });
            Ok(0)
        }
    }
}

fn verdict_text(irreducible: bool) -> &'static str {
    if irreducible {
        "irreducible"
    } else {
        "reducible"
    }
}
