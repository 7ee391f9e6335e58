//! pairdet: wreath determinants of finite group-subgroup pairs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 mathematical domain error (caps, divisibility, disconnected graphs).

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pairdet::exactalg::UniPoly;
use pairdet::groups::{parse_group_spec, parse_subgroup_spec, GroupOrdering, Structure, Transversal};
use pairdet::pairs::{
    theta_auto, theta_direct, theta_group_determinant, theta_separable, PairGraph, PairInstance,
    Specialization, ThetaMethod,
};
use pairdet::suites::run_suites;
use pairdet::symchar::{alon_tarsi, mn_character, omega, CycleType, Partition, Permutation};

#[derive(Parser)]
#[command(
    name = "pairdet",
    about = "Exact wreath determinants Θ(G,H,φ,f) for finite group-subgroup pairs",
    version
)]
struct Cli {
    /// Worker threads for the enumeration pool (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct PairArgs {
    /// Group spec: C<m>, D<m>, S<n>, A<n>, klein, or products like C3xC2xC2
    #[arg(long)]
    group: String,
    /// Subgroup spec: `elems:0,2` or `gens:...` (dihedral words s/t, cycle
    /// notation for permutation groups, element indices otherwise)
    #[arg(long)]
    subgroup: Option<String>,
    /// Ordering: standard | lex | homogeneous
    #[arg(long, default_value = "standard")]
    ordering: String,
    /// Specialization: principal | order | cayley | pairgraph
    #[arg(long, default_value = "principal")]
    specialization: String,
    /// Cayley generating set: `transpositions` or comma-separated element
    /// indices (symmetrized automatically when --symmetrize is given)
    #[arg(long)]
    gens: Option<String>,
    /// Close the Cayley set under inverses instead of erroring
    #[arg(long, default_value_t = false)]
    symmetrize: bool,
    /// Pair-graph connection set S (element indices)
    #[arg(long)]
    pairset: Option<String>,
    /// Output format: text | json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Θ(G, H, φ, f) of a group-subgroup pair
    Theta {
        #[command(flatten)]
        pair: PairArgs,
        /// Method: auto | direct | theorem | separable
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Ordinary group determinant Θ(G, f)
    Groupdet {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// ω^(kⁿ)(x) for a permutation of kn points
    Omega {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// 0-based images, comma separated
        #[arg(long)]
        perm: String,
    },
    /// Murnaghan-Nakayama character value χ^λ(μ)
    Char {
        /// Partition λ, comma separated parts
        #[arg(long)]
        lambda: String,
        /// Cycle type μ, comma separated parts
        #[arg(long)]
        mu: String,
    },
    /// Alon-Tarsi number AT(n), n ≤ 4
    AlonTarsi {
        #[arg(long)]
        n: usize,
    },
    /// Group-subgroup pair graph: DOT or JSON export plus Θ
    Pairgraph {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Run verification suites
    Verify {
        /// abelian | dihedral | symmetric | pairgraph | properties | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for the randomized property checks
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Run the full-depth (12- and 24-point) checks
        #[arg(long, default_value_t = false)]
        deep: bool,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain(e: impl ToString) -> CliError {
    CliError::Domain(e.to_string())
}

fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| usage(format!("bad index `{s}`"))))
        .collect()
}

struct Instance {
    inst: PairInstance,
}

fn build_instance(pair: &PairArgs) -> Result<Instance, CliError> {
    let group = parse_group_spec(&pair.group).map_err(usage)?;
    let sub_spec = pair
        .subgroup
        .as_deref()
        .ok_or_else(|| usage("--subgroup is required"))?;
    let subgroup = parse_subgroup_spec(&group, sub_spec).map_err(usage)?;
    let ordering = match pair.ordering.as_str() {
        "standard" => match group.structure() {
            Structure::CyclicProduct(_) => GroupOrdering::standard_abelian(&group).map_err(domain)?,
            Structure::Dihedral(_) => GroupOrdering::dihedral_standard(&group).map_err(domain)?,
            _ => GroupOrdering::by_index(&group),
        },
        "lex" => GroupOrdering::lex_symmetric(&group).map_err(domain)?,
        "homogeneous" => {
            let z = Transversal::minimal(&subgroup);
            let hseq = subgroup.elements().to_vec();
            GroupOrdering::homogeneous(&subgroup, &z, &hseq).map_err(domain)?
        }
        other => return Err(usage(format!("unknown ordering `{other}`"))),
    };
    let spec = match pair.specialization.as_str() {
        "principal" => Specialization::principal(&ordering),
        "order" => Specialization::order(&group),
        "cayley" => {
            let gens = pair
                .gens
                .as_deref()
                .ok_or_else(|| usage("--gens is required for the Cayley specialization"))?;
            if gens == "transpositions" {
                let perms = group
                    .perm_realization()
                    .ok_or_else(|| usage("`transpositions` needs a permutation group"))?;
                let degree = perms[0].degree();
                let mut t = Vec::new();
                for i in 0..degree {
                    for j in i + 1..degree {
                        t.push(Permutation::from_cycles(degree, &[vec![i, j]]).unwrap());
                    }
                }
                Specialization::cayley_ambient(&group, &t).map_err(domain)?
            } else {
                let idx = parse_indices(gens)?;
                Specialization::cayley(&group, &idx, pair.symmetrize).map_err(domain)?
            }
        }
        "pairgraph" => {
            // Θ for the pair-graph specialization is defined directly on the
            // H×G distance matrix (q^{d(h,g)}); `theta` intercepts it before
            // reaching here, so this only rejects e.g. groupdet usage.
            return Err(usage(
                "the pairgraph specialization applies to proper subgroup pairs;                  use `theta --specialization pairgraph` or the `pairgraph` subcommand",
            ));
        }
        other => return Err(usage(format!("unknown specialization `{other}`"))),
    };
    let inst = PairInstance::new(subgroup, ordering, spec).map_err(domain)?;
    Ok(Instance { inst })
}

fn poly_json(p: &UniPoly) -> serde_json::Value {
    json!({
        "variable": p.var_name(),
        "terms": p.terms().map(|(e, c)| json!({
            "num": serde_json::Number::from_string_unchecked(c.numer().to_string()),
            "den": serde_json::Number::from_string_unchecked(c.denom().to_string()),
            "exp": e,
        })).collect::<Vec<_>>(),
    })
}

fn emit_poly(
    p: &UniPoly,
    format: &str,
    meta: serde_json::Value,
) -> Result<(), CliError> {
    match format {
        "text" => println!("{p}"),
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "polynomial": poly_json(p),
                "meta": meta,
            }))
            .unwrap()
        ),
        other => return Err(usage(format!("unknown format `{other}`"))),
    }
    Ok(())
}

fn run() -> Result<u8, CliError> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match cli.command {
        Command::Theta { pair, method } => {
            let started = Instant::now();
            if pair.specialization == "pairgraph" {
                // wrdet_k of the H×G distance table; rows in subgroup element
                // order, columns in group element order
                let group = parse_group_spec(&pair.group).map_err(usage)?;
                let sub_spec = pair
                    .subgroup
                    .as_deref()
                    .ok_or_else(|| usage("--subgroup is required"))?;
                let subgroup = parse_subgroup_spec(&group, sub_spec).map_err(usage)?;
                let s = parse_indices(
                    pair.pairset
                        .as_deref()
                        .ok_or_else(|| usage("--pairset is required"))?,
                )?;
                let pg = PairGraph::new(&subgroup, &s).map_err(domain)?;
                let theta = pg.theta().map_err(domain)?;
                let meta = json!({
                    "m": group.size(),
                    "n": subgroup.order(),
                    "k": subgroup.index_in_parent(),
                    "method": "direct",
                    "millis": started.elapsed().as_millis() as u64,
                });
                emit_poly(&theta, &pair.format, meta)?;
                return Ok(0);
            }
            let wrapped = build_instance(&pair)?;
            let inst = &wrapped.inst;
            let (theta, used) = match method.as_str() {
                "auto" => theta_auto(inst).map_err(domain)?,
                "direct" => (theta_direct(inst).map_err(domain)?, ThetaMethod::Direct),
                "theorem" => {
                    let shape = pairdet::pairs::divisor_shape(inst).ok_or_else(|| {
                        domain("theorem method needs an abelian divisor-shaped pair under ord_st/spec_pr")
                    })?;
                    (
                        pairdet::pairs::theta_abelian_theorem(&shape.0, &shape.1)
                            .map_err(domain)?,
                        ThetaMethod::AbelianTheorem,
                    )
                }
                "separable" => {
                    let (t, _) = theta_separable(inst, None).map_err(domain)?;
                    (t, ThetaMethod::Separable)
                }
                other => return Err(usage(format!("unknown method `{other}`"))),
            };
            let meta = json!({
                "m": inst.m(),
                "n": inst.n(),
                "k": inst.k(),
                "method": used.to_string(),
                "millis": started.elapsed().as_millis() as u64,
            });
            emit_poly(&theta, &pair.format, meta)?;
            Ok(0)
        }
        Command::Groupdet { pair } => {
            let started = Instant::now();
            let group = parse_group_spec(&pair.group).map_err(usage)?;
            let mut pair_full = pair.clone();
            pair_full.subgroup = Some(format!(
                "elems:{}",
                (0..group.size())
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            let wrapped = build_instance(&pair_full)?;
            let inst = &wrapped.inst;
            let theta = theta_group_determinant(inst.group(), inst.spec()).map_err(domain)?;
            let meta = json!({
                "m": inst.m(),
                "n": inst.m(),
                "k": 1,
                "method": "determinant",
                "millis": started.elapsed().as_millis() as u64,
            });
            emit_poly(&theta, &pair.format, meta)?;
            Ok(0)
        }
        Command::Omega { k, n, perm } => {
            let images = parse_indices(&perm)?;
            let p = Permutation::from_images(images).map_err(usage)?;
            let value = omega(k, n, &p).map_err(domain)?;
            println!("{value}");
            Ok(0)
        }
        Command::Char { lambda, mu } => {
            let l = Partition::new(
                parse_indices(&lambda)?
                    .into_iter()
                    .map(|x| x as u32)
                    .collect(),
            );
            let m = CycleType(Partition::new(
                parse_indices(&mu)?.into_iter().map(|x| x as u32).collect(),
            ));
            let value = mn_character(&l, &m).map_err(domain)?;
            println!("{value}");
            Ok(0)
        }
        Command::AlonTarsi { n } => {
            let value = alon_tarsi(n).map_err(domain)?;
            println!("{value}");
            Ok(0)
        }
        Command::Pairgraph { pair } => {
            let group = parse_group_spec(&pair.group).map_err(usage)?;
            let sub_spec = pair
                .subgroup
                .as_deref()
                .ok_or_else(|| usage("--subgroup is required"))?;
            let subgroup = parse_subgroup_spec(&group, sub_spec).map_err(usage)?;
            let s = parse_indices(
                pair.pairset
                    .as_deref()
                    .ok_or_else(|| usage("--pairset is required"))?,
            )?;
            let pg = PairGraph::new(&subgroup, &s).map_err(domain)?;
            match pair.format.as_str() {
                "dot" => print!("{}", pg.to_dot()),
                "json" => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "graph": pg.to_json(),
                        "theta": poly_json(&pg.theta().map_err(domain)?),
                    }))
                    .unwrap()
                ),
                "text" => {
                    let theta = pg.theta().map_err(domain)?;
                    println!("{theta}");
                }
                other => return Err(usage(format!("unknown format `{other}`"))),
            }
            Ok(0)
        }
        Command::Verify { suite, seed, deep } => {
            let reports = run_suites(&suite, seed, deep).map_err(usage)?;
            let mut all_ok = true;
            for rep in &reports {
                for c in &rep.checks {
                    let status = if c.passed { "ok" } else { "FAIL" };
                    if !c.passed {
                        all_ok = false;
                    }
                    eprintln!("[{}] {:<55} {}", rep.suite, c.name, status);
                }
            }
            let js: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            println!("{}", serde_json::to_string_pretty(&js).unwrap());
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
