//! Command-line front end: validation, certificate construction and
//! checking, orders, twin-width and FO queries, all over JSON files.
//!
//! Exit codes: 0 success, 1 a requested check failed (a structured report is
//! still printed), 2 bad input, 3 a brute-force size cap was hit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hgraph_core::builder::{build_proper_mixed_thin_with_report, circ_arc_to_if_proper_2mixed};
use hgraph_core::error::Error;
use hgraph_core::fixtures;
use hgraph_core::fo;
use hgraph_core::framework::HRepresentation;
use hgraph_core::json::{
    parse_json, GraphDto, MixedCertDto, RepresentationDto, SequenceDto, ThinCertDto,
};
use hgraph_core::order::{framework_order, vertex_order, EdgeOrderedForest, OrderedAdjacency};
use hgraph_core::properize::{properize, reduce_is_instance, ReduceOutcome};
use hgraph_core::tree_thin::forest_thin_order;
use hgraph_core::twinwidth::{bruteforce_twinwidth, validate_sequence};
use hgraph_core::width::{check_mixed_thin, check_proper_thin, check_thin};
use hgraph_core::Limits;

#[derive(Parser)]
#[command(
    name = "hgraph",
    about = "Representations over subdivided multigraphs: validators, width certificates and pipelines",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Thin,
    ProperThin,
    Mixed,
    ProperMixed,
    IfProperMixed,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a representation and report proper / non-crossing status.
    Validate {
        /// Representation JSON file.
        file: Option<PathBuf>,
        /// Use a named fixture instead of a file.
        #[arg(long)]
        fixture: Option<String>,
        /// Fail (exit 1) unless the family is proper.
        #[arg(long)]
        proper: bool,
        /// Fail (exit 1) unless the family is non-crossing.
        #[arg(long)]
        non_crossing: bool,
    },
    /// Build a proper mixed-thin certificate from a non-crossing representation.
    BuildMixedThin {
        file: Option<PathBuf>,
        #[arg(long)]
        fixture: Option<String>,
        /// Write the certificate here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Re-check the certificate before writing.
        #[arg(long)]
        verify: bool,
    },
    /// Check a thinness or mixed-thinness certificate against a graph.
    CheckCert {
        #[arg(long, value_enum)]
        kind: CertKind,
        graph: PathBuf,
        cert: PathBuf,
    },
    /// Thinness ordering for a representation over a forest.
    TreeThin {
        file: Option<PathBuf>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a representation into a proper one over an enlarged pattern.
    Properize {
        file: Option<PathBuf>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Independent-set reduction: answer outright or emit the proper instance.
    ReduceIs {
        file: Option<PathBuf>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(short)]
        k: usize,
    },
    /// Vertex order derived from a representation over a forest.
    Order {
        file: Option<PathBuf>,
        #[arg(long)]
        fixture: Option<String>,
        /// Also print the ordered adjacency matrix as bit rows.
        #[arg(long)]
        adjacency: bool,
    },
    /// Exact twin-width of a small graph.
    Tww {
        graph: PathBuf,
        /// Override the size cap for this run.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Validate a contraction sequence at a red-degree budget.
    CheckSeq {
        graph: PathBuf,
        seq: PathBuf,
        #[arg(short, allow_negative_numbers = true)]
        d: i64,
    },
    /// Evaluate a first-order formula or an encoded problem on a graph.
    Fo {
        graph: PathBuf,
        #[arg(long)]
        formula: Option<String>,
        /// independent_set | clique | dominating_set
        #[arg(long)]
        problem: Option<String>,
        #[arg(short)]
        k: Option<usize>,
    },
    /// End-to-end demo: representation -> certificate -> checker -> FO query.
    Demo {
        /// Currently `claw-c2`.
        name: String,
    },
    /// List fixtures, or print one by name.
    Fixtures {
        name: Option<String>,
        /// Write every fixture into this directory as <name>.json.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e.downcast_ref::<Error>() {
                Some(Error::ResourceLimit(_)) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load_rep(file: &Option<PathBuf>, fixture: &Option<String>) -> anyhow::Result<HRepresentation> {
    match (file, fixture) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let dto: RepresentationDto = parse_json(&text)?;
            Ok(dto.to_representation()?)
        }
        (None, Some(name)) => fixtures::by_name(name)
            .ok_or_else(|| anyhow::anyhow!("unknown fixture {name:?}; try `hgraph fixtures`")),
        _ => anyhow::bail!("provide exactly one of a file path or --fixture"),
    }
}

fn load_graph(path: &PathBuf) -> anyhow::Result<hgraph_core::SimpleGraph> {
    let text = std::fs::read_to_string(path)?;
    let dto: GraphDto = parse_json(&text)?;
    Ok(dto.to_simple()?)
}

fn emit(value: &Value, output: &Option<PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cmd: Command) -> anyhow::Result<ExitCode> {
    let limits = Limits::from_env()?;
    match cmd {
        Command::Validate {
            file,
            fixture,
            proper,
            non_crossing,
        } => {
            let rep = load_rep(&file, &fixture)?;
            let proper_viol = rep.proper_violation();
            let crossing_viol = rep.noncrossing_violation();
            let report = json!({
                "vertices": rep.len(),
                "framework_vertices": rep.framework().vertex_count(),
                "proper": proper_viol.is_none(),
                "proper_witness": proper_viol.as_ref().map(|(a, b)| json!({
                    "container": a, "contained": b
                })),
                "non_crossing": crossing_viol.is_none(),
                "crossing_witness": crossing_viol.as_ref().map(|w| json!({
                    "a": w.a, "b": w.b,
                    "disconnected_difference": w.a_minus_b.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                })),
            });
            emit(&report, &None)?;
            let failed =
                (proper && proper_viol.is_some()) || (non_crossing && crossing_viol.is_some());
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::BuildMixedThin {
            file,
            fixture,
            output,
            verify,
        } => {
            let rep = load_rep(&file, &fixture)?;
            let (cert, report) = build_proper_mixed_thin_with_report(&rep)?;
            if verify {
                if let Some(v) = check_mixed_thin(rep.intersection_graph(), &cert, true, false)? {
                    anyhow::bail!("certificate failed verification: {v:?}");
                }
            }
            let dto = MixedCertDto::from_certificate(&cert);
            let value = json!({
                "certificate": serde_json::to_value(&dto)?,
                "classes": report.class_count,
                "class_bound": report.class_bound,
                "fallback_pairs": report.fallback_pairs,
            });
            emit(&value, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckCert { kind, graph, cert } => {
            let g = load_graph(&graph)?;
            let text = std::fs::read_to_string(&cert)?;
            let (ok, detail): (bool, Value) = match kind {
                CertKind::Thin | CertKind::ProperThin => {
                    let dto: ThinCertDto = parse_json(&text)?;
                    let c = dto.to_certificate();
                    let viol = match kind {
                        CertKind::Thin => check_thin(&g, &c)?,
                        _ => check_proper_thin(&g, &c)?,
                    };
                    (
                        viol.is_none(),
                        viol.map_or(
                            Value::Null,
                            |v| json!({"r": v.r, "s": v.s, "t": v.t, "reversed": v.reversed}),
                        ),
                    )
                }
                CertKind::Mixed | CertKind::ProperMixed | CertKind::IfProperMixed => {
                    let dto: MixedCertDto = parse_json(&text)?;
                    let c = dto.to_certificate();
                    let (require_proper, inversion_free) = match kind {
                        CertKind::Mixed => (false, false),
                        CertKind::ProperMixed => (true, false),
                        _ => (true, true),
                    };
                    let viol = check_mixed_thin(&g, &c, require_proper, inversion_free)?;
                    (
                        viol.is_none(),
                        viol.map_or(Value::Null, |v| {
                            json!({"condition": v.condition, "pair": v.pair, "vertices": v.vertices})
                        }),
                    )
                }
            };
            emit(&json!({"valid": ok, "violation": detail}), &None)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::TreeThin {
            file,
            fixture,
            output,
        } => {
            let rep = load_rep(&file, &fixture)?;
            let cert = forest_thin_order(&rep)?;
            if let Some(v) = check_thin(rep.intersection_graph(), &cert)? {
                anyhow::bail!("internal error: built ordering is inconsistent at {v:?}");
            }
            let value = json!({
                "certificate": serde_json::to_value(ThinCertDto::from_certificate(&cert))?,
                "classes": cert.class_count(),
            });
            emit(&value, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Properize {
            file,
            fixture,
            output,
        } => {
            let rep = load_rep(&file, &fixture)?;
            let (k1, out) = properize(&rep)?;
            let value = json!({
                "k1": k1,
                "pattern_vertices": out.framework().base().vertices().len(),
                "representation": serde_json::to_value(RepresentationDto::from_representation(&out))?,
            });
            emit(&value, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ReduceIs { file, fixture, k } => {
            let rep = load_rep(&file, &fixture)?;
            match reduce_is_instance(&rep, k)? {
                ReduceOutcome::Yes { witness } => {
                    emit(&json!({"answer": "yes", "witness": witness}), &None)?;
                }
                ReduceOutcome::Reduced { k1, rep: rep2 } => {
                    emit(
                        &json!({
                            "answer": "reduced",
                            "k1": k1,
                            "k": k,
                            "instance": serde_json::to_value(RepresentationDto::from_representation(&rep2))?,
                        }),
                        &None,
                    )?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Order {
            file,
            fixture,
            adjacency,
        } => {
            let rep = load_rep(&file, &fixture)?;
            let eof = if fixture.as_deref() == Some("fig6") {
                fixtures::fig6().1
            } else {
                EdgeOrderedForest::from_forest(rep.framework().base().clone())?
            };
            let fo = framework_order(&rep, &eof)?;
            let order = vertex_order(&rep, &eof)?;
            let mut value = json!({
                "framework_order": fo.order.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "vertex_order": order,
            });
            if adjacency {
                let adj = OrderedAdjacency::from_graph(rep.intersection_graph(), &order)?;
                let rows: Vec<String> = (0..adj.bits.rows)
                    .map(|r| {
                        (0..adj.bits.cols)
                            .map(|c| if adj.bits.get(r, c) { '1' } else { '0' })
                            .collect()
                    })
                    .collect();
                value["adjacency"] = json!(rows);
            }
            emit(&value, &None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tww { graph, max_n } => {
            let g = load_graph(&graph)?;
            let cap = max_n.unwrap_or(limits.tww);
            let (d, seq) = bruteforce_twinwidth(&g, cap)?;
            emit(
                &json!({
                    "twin_width": d,
                    "sequence": serde_json::to_value(SequenceDto::from_sequence(&seq))?,
                }),
                &None,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckSeq { graph, seq, d } => {
            let g = load_graph(&graph)?;
            let text = std::fs::read_to_string(&seq)?;
            let dto: SequenceDto = parse_json(&text)?;
            let (ok, max_red) = validate_sequence(&g, &dto.to_sequence(), d)?;
            emit(
                &json!({"valid": ok, "max_red_degree": max_red, "budget": d}),
                &None,
            )?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Fo {
            graph,
            formula,
            problem,
            k,
        } => {
            let g = load_graph(&graph)?;
            let f = match (formula, problem) {
                (Some(text), None) => fo::parse(&text)?,
                (None, Some(kind)) => {
                    let kind = fo::ProblemKind::parse(&kind)?;
                    let k = k.ok_or_else(|| anyhow::anyhow!("--problem needs -k"))?;
                    fo::encode_problem(kind, k)
                }
                _ => anyhow::bail!("provide exactly one of --formula or --problem"),
            };
            let holds = fo::evaluate(&g, &f, limits.fo)?;
            emit(
                &json!({"formula": f.to_string(), "size": f.size(), "holds": holds}),
                &None,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Demo { name } => {
            if name != "claw-c2" {
                anyhow::bail!("unknown demo {name:?}; available: claw-c2");
            }
            let rep = fixtures::fig3_claw_c2();
            let (cert, report) = build_proper_mixed_thin_with_report(&rep)?;
            let g = rep.intersection_graph();
            if check_mixed_thin(g, &cert, true, false)?.is_some() {
                anyhow::bail!("demo certificate failed verification");
            }
            let circ = circ_arc_to_if_proper_2mixed(&rep)?;
            let query = fo::encode_problem(fo::ProblemKind::IndependentSet, 3);
            let holds = fo::evaluate(g, &query, limits.fo)?;
            emit(
                &json!({
                    "fixture": "fig3-claw",
                    "graph_vertices": g.vertices(),
                    "mixed_thin_classes": report.class_count,
                    "class_bound": report.class_bound,
                    "certificate_valid": true,
                    "inversion_free_classes": circ.class_count(),
                    "fo_query": query.to_string(),
                    "fo_answer": holds,
                }),
                &None,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { name, dump_dir } => {
            if let Some(dir) = dump_dir {
                std::fs::create_dir_all(&dir)?;
                for n in fixtures::FIXTURE_NAMES {
                    let rep = fixtures::by_name(n).expect("catalog name");
                    let dto = RepresentationDto::from_representation(&rep);
                    let path = dir.join(format!("{n}.json"));
                    std::fs::write(&path, serde_json::to_string_pretty(&dto)? + "\n")?;
                }
                emit(&json!({"written": fixtures::FIXTURE_NAMES}), &None)?;
                return Ok(ExitCode::SUCCESS);
            }
            match name {
                None => emit(&json!({"fixtures": fixtures::FIXTURE_NAMES}), &None)?,
                Some(n) => {
                    let rep = fixtures::by_name(&n)
                        .ok_or_else(|| anyhow::anyhow!("unknown fixture {n:?}"))?;
                    let dto = RepresentationDto::from_representation(&rep);
                    emit(&serde_json::to_value(&dto)?, &None)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
