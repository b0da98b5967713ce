//! Command-line front end for the nilorb library: orbit queries, induction,
//! batch statistics, jet-equation emission, and exceptional-table access.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilorb::induction::{
    induce_a, induce_bcd, little_induced_counts, rc2_status, LeviShapeA, LeviShapeBcd, Rc2Evidence,
    Rc2Status,
};
use nilorb::jets::{jet_expand, matrix_power_jet_ideal, parse_polynomial};
use nilorb::rc::{rc1_status, Rc1Reason, Rc1Verdict};
use nilorb::rootsys::{RootKind, RootSystem};
use nilorb::{excdata, Algebra, EpsClass, Error, Orbit, Partition};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nilorb", version, about = "Nilpotent-orbit combinatorics toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit queries.
    Orbit {
        #[command(subcommand)]
        command: OrbitCommand,
    },
    /// Compute an induced orbit from a Levi datum.
    Induce(InduceArgs),
    /// Batch statistics.
    Stats {
        #[command(subcommand)]
        command: StatsCommand,
    },
    /// Jet-equation generation.
    Jet {
        #[command(subcommand)]
        command: JetCommand,
    },
    /// Exceptional-algebra orbit tables.
    Exceptional {
        #[command(subcommand)]
        command: ExceptionalCommand,
    },
    /// Levi subalgebra checks.
    Levi {
        #[command(subcommand)]
        command: LeviCommand,
    },
}

#[derive(Subcommand)]
enum OrbitCommand {
    /// Dimension, codimension, littleness, rigidity, and jet-criterion
    /// verdicts for one orbit (e.g. "sp4:2,2", "so8:3,2^2,1:I", "F4:A1").
    Info {
        orbit: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// All orbits of an algebra, optionally filtered.
    List {
        #[arg(long)]
        algebra: String,
        /// Keep only little orbits.
        #[arg(long)]
        little: bool,
        /// Keep only rigid orbits.
        #[arg(long)]
        rigid: bool,
        /// Keep only orbits with a proven all-orders jet certificate.
        #[arg(long)]
        rc2: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct InduceArgs {
    /// Ambient algebra, e.g. "sl6" or "so11".
    #[arg(long)]
    algebra: String,
    /// Levi shape: a composition "2,3,1" for sl_n, or "p1,..,pk:r"
    /// (gl blocks and base rank) for so_n/sp_n.
    #[arg(long)]
    levi: String,
    /// One partition per Levi factor (the zero orbit of a factor of size
    /// p is "1^p"); for so_n/sp_n the last entry is the base-factor orbit.
    #[arg(long, num_args = 1.., required = true)]
    orbits: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum StatsCommand {
    /// Per-n counts of induced-from-little orbits vs all orbits.
    LittleInduced {
        /// Family: "so" (rows n = 2..max-n) or "sp" (rows k = 1..max-n,
        /// counting sp_2k).
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum JetCommand {
    /// Expand a polynomial into jet components f^(0), ..., f^(m).
    Expand {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Jet ideal of X^d = 0 for the generic (optionally traceless) matrix.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        power: u32,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        traceless: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ExceptionalCommand {
    /// One table row by algebra and orbit label.
    Lookup {
        #[arg(long = "type")]
        algebra: String,
        #[arg(long)]
        label: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-run all internal consistency checks on the table data.
    Validate,
}

#[derive(Subcommand)]
enum LeviCommand {
    /// Whether the Levi on the given simple-root nodes has a semisimple
    /// part containing a regular semisimple element of the full algebra.
    CheckI {
        /// Root-system type: A, B, C, D, E6, E7, E8, F4, or G2.
        #[arg(long = "type")]
        kind: String,
        /// Rank (required for A/B/C/D, ignored otherwise).
        #[arg(long)]
        rank: Option<usize>,
        /// Simple-root nodes, 1-based Bourbaki, e.g. "1,3,4".
        #[arg(long)]
        subset: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn rc1_text(v: &Rc1Verdict) -> String {
    let reason = |r: &Rc1Reason| match r {
        Rc1Reason::Little => "little orbit".to_string(),
        Rc1Reason::Restriction(row) => format!("restriction registry row {row}"),
        Rc1Reason::SpecialCase2p => "square-zero orbit (2^p) in sl_2p".to_string(),
        Rc1Reason::ExceptionalTable => "exceptional data table".to_string(),
    };
    match v {
        Rc1Verdict::Yes(r) => format!("reducible ({})", reason(r)),
        Rc1Verdict::No(r) => format!("irreducible ({})", reason(r)),
        Rc1Verdict::Unknown => "unknown".to_string(),
    }
}

fn rc1_json(v: &Rc1Verdict) -> serde_json::Value {
    match v {
        Rc1Verdict::Yes(_) => json!({"verdict": "reducible", "detail": rc1_text(v)}),
        Rc1Verdict::No(_) => json!({"verdict": "irreducible", "detail": rc1_text(v)}),
        Rc1Verdict::Unknown => json!({"verdict": "unknown"}),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Orbit { command } => orbit_command(command),
        Command::Induce(args) => induce_command(args),
        Command::Stats { command } => stats_command(command),
        Command::Jet { command } => jet_command(command),
        Command::Exceptional { command } => exceptional_command(command),
        Command::Levi { command } => levi_command(command),
    }
}

fn orbit_command(command: OrbitCommand) -> Result<(), Error> {
    match command {
        OrbitCommand::Info { orbit, format } => {
            let o = Orbit::parse(&orbit)?;
            let rc1 = rc1_status(&o)?;
            let rc2 = rc2_status(&o)?;
            match format {
                Format::Json => {
                    let rc2_json = match &rc2 {
                        Rc2Status::ProvenAllM(Rc2Evidence::Classical(cert)) => {
                            json!({"verdict": "proven-all-orders", "certificate": cert.to_json()})
                        }
                        Rc2Status::ProvenAllM(Rc2Evidence::Exceptional(w)) => {
                            json!({"verdict": "proven-all-orders", "witness": w.to_string()})
                        }
                        Rc2Status::Unknown => json!({"verdict": "unknown"}),
                    };
                    let out = json!({
                        "orbit": o.to_string(),
                        "algebra": o.algebra().to_string(),
                        "dim": o.dim()?,
                        "codim": o.codim()?,
                        "little": o.is_little()?,
                        "rigid": o.is_rigid()?,
                        "rc1": rc1_json(&rc1),
                        "rc2": rc2_json,
                    });
                    println!("{out}");
                }
                _ => {
                    println!("orbit: {o}");
                    println!("dim: {}", o.dim()?);
                    println!("codim: {}", o.codim()?);
                    println!("little: {}", o.is_little()?);
                    println!("rigid: {}", o.is_rigid()?);
                    println!("rc1 (first jet scheme): {}", rc1_text(&rc1));
                    match &rc2 {
                        Rc2Status::ProvenAllM(Rc2Evidence::Classical(cert)) => {
                            println!("rc2 (all-orders): proven");
                            println!("certificate: {}", cert.to_json());
                        }
                        Rc2Status::ProvenAllM(Rc2Evidence::Exceptional(w)) => {
                            println!("rc2 (all-orders): proven");
                            println!("witness: {w}");
                        }
                        Rc2Status::Unknown => println!("rc2 (all-orders): unknown"),
                    }
                }
            }
            Ok(())
        }
        OrbitCommand::List {
            algebra,
            little,
            rigid,
            rc2,
            format,
        } => {
            let alg = Algebra::parse(&algebra)?;
            let mut rows = Vec::new();
            for o in nilorb::orbits::all_orbits(alg)? {
                if little && !o.is_little()? {
                    continue;
                }
                if rigid && !o.is_rigid()? {
                    continue;
                }
                if rc2 && !matches!(rc2_status(&o)?, Rc2Status::ProvenAllM(_)) {
                    continue;
                }
                rows.push((o.to_string(), o.dim()?));
            }
            match format {
                Format::Json => {
                    let out: Vec<_> = rows
                        .iter()
                        .map(|(name, dim)| json!({"orbit": name, "dim": dim}))
                        .collect();
                    println!("{}", json!(out));
                }
                _ => {
                    for (name, dim) in rows {
                        println!("{name}\tdim {dim}");
                    }
                }
            }
            Ok(())
        }
    }
}

fn induce_command(args: InduceArgs) -> Result<(), Error> {
    let alg = Algebra::parse(&args.algebra)?;
    let orbits: Vec<Partition> = args
        .orbits
        .iter()
        .map(|s| Partition::parse(s))
        .collect::<Result<_, _>>()?;
    let induced = match alg {
        Algebra::Sl(_) => {
            let composition: Vec<u32> = args
                .levi
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad composition entry {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            if composition.iter().sum::<u32>() != alg.partition_size().unwrap_or(0) {
                return Err(Error::SizeMismatch(format!(
                    "composition must sum to the rank of {alg}"
                )));
            }
            induce_a(&LeviShapeA { composition }, &orbits)?
        }
        Algebra::So(n) | Algebra::Sp(n) => {
            let (blocks_text, r_text) = args.levi.split_once(':').ok_or_else(|| {
                Error::Parse("so/sp Levi shape must be written blocks:r, e.g. 3:5".into())
            })?;
            let blocks: Vec<u32> = if blocks_text.is_empty() {
                Vec::new()
            } else {
                blocks_text
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad block size {t:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let r: u32 = r_text
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad base rank {r_text:?}")))?;
            let (gl_orbits, base) = orbits
                .split_last()
                .map(|(last, init)| (init.to_vec(), last.clone()))
                .ok_or_else(|| Error::Domain("at least the base orbit is required".into()))?;
            if gl_orbits.len() != blocks.len() {
                return Err(Error::SizeMismatch(
                    "need one orbit per gl block plus one base orbit".into(),
                ));
            }
            induce_bcd(n, alg.eps_class().unwrap(), &LeviShapeBcd { blocks, r }, &gl_orbits, &base)?
        }
        _ => {
            return Err(Error::Domain(
                "induction is implemented for the classical types".into(),
            ))
        }
    };
    match args.format {
        Format::Json => println!(
            "{}",
            json!({
                "algebra": alg.to_string(),
                "induced": induced.to_exp_string(),
                "parts": induced.parts(),
            })
        ),
        _ => println!("{}", induced.to_exp_string()),
    }
    Ok(())
}

fn stats_command(command: StatsCommand) -> Result<(), Error> {
    match command {
        StatsCommand::LittleInduced {
            family,
            max_n,
            format,
        } => {
            let eps = match family.as_str() {
                "so" => EpsClass::Plus,
                "sp" => EpsClass::Minus,
                other => {
                    return Err(Error::Parse(format!(
                        "family must be \"so\" or \"sp\", got {other:?}"
                    )))
                }
            };
            let max_row = if eps == EpsClass::Minus && max_n % 2 == 0 {
                // Accept either the rank bound k or the matrix size 2k.
                max_n / 2
            } else {
                max_n
            };
            let rows = little_induced_counts(max_row, eps)?;
            match format {
                Format::Csv => {
                    println!("n,induced,total");
                    for (n, induced, total) in rows {
                        println!("{n},{induced},{total}");
                    }
                }
                Format::Json => {
                    let out: Vec<_> = rows
                        .iter()
                        .map(|(n, i, t)| json!({"n": n, "induced": i, "total": t}))
                        .collect();
                    println!("{}", json!(out));
                }
                Format::Text => {
                    for (n, induced, total) in rows {
                        println!("{n}: {induced} induced of {total}");
                    }
                }
            }
            Ok(())
        }
    }
}

fn jet_command(command: JetCommand) -> Result<(), Error> {
    match command {
        JetCommand::Expand {
            poly,
            order,
            format,
        } => {
            let (f, vars) = parse_polynomial(&poly)?;
            let components = jet_expand(&f, order)?;
            match format {
                Format::Json => {
                    let out: Vec<_> = components.iter().map(|p| p.to_json(&vars)).collect();
                    println!("{}", json!(out));
                }
                _ => {
                    for (j, p) in components.iter().enumerate() {
                        println!("f^({j}) = {}", p.render(&vars));
                    }
                }
            }
            Ok(())
        }
        JetCommand::Matrix {
            n,
            power,
            order,
            traceless,
            format,
        } => {
            let (vars, gens) = matrix_power_jet_ideal(n, power, order, traceless)?;
            match format {
                Format::Json => {
                    let out: Vec<_> = gens.iter().map(|p| p.to_json(&vars)).collect();
                    println!("{}", json!(out));
                }
                _ => {
                    for g in &gens {
                        println!("{}", g.render(&vars));
                    }
                }
            }
            Ok(())
        }
    }
}

fn exceptional_command(command: ExceptionalCommand) -> Result<(), Error> {
    match command {
        ExceptionalCommand::Lookup {
            algebra,
            label,
            format,
        } => {
            let alg = Algebra::parse(&algebra)?;
            let rec = excdata::lookup(alg, &label)?;
            match format {
                Format::Json => {
                    let rc2 = match &rec.rc2 {
                        excdata::Rc2::Yes(w) => json!({"verdict": "yes", "witness": w.to_string()}),
                        excdata::Rc2::Unknown => json!({"verdict": "unknown"}),
                    };
                    let rc1 = match &rec.rc1 {
                        excdata::Rc1::Yes(excdata::Rc1Reason::Little) => {
                            json!({"verdict": "yes", "reason": "little"})
                        }
                        excdata::Rc1::Yes(excdata::Rc1Reason::Restriction { ambient, orbit }) => {
                            json!({
                                "verdict": "yes",
                                "reason": "restriction",
                                "ambient": ambient.to_string(),
                                "ambient_orbit": orbit,
                            })
                        }
                        excdata::Rc1::No => json!({"verdict": "no"}),
                    };
                    println!(
                        "{}",
                        json!({
                            "algebra": rec.algebra.to_string(),
                            "label": rec.label,
                            "characteristic": rec.characteristic,
                            "dim": rec.dim,
                            "little": rec.little,
                            "rigid": rec.rigid,
                            "rc1": rc1,
                            "rc2": rc2,
                        })
                    );
                }
                _ => {
                    println!("algebra: {}", rec.algebra);
                    println!("label: {}", rec.label);
                    let chars: Vec<String> =
                        rec.characteristic.iter().map(|c| c.to_string()).collect();
                    println!("characteristic: {}", chars.join(""));
                    println!("dim: {}", rec.dim);
                    println!("little: {}", rec.little);
                    println!("rigid: {}", rec.rigid);
                    match &rec.rc1 {
                        excdata::Rc1::Yes(excdata::Rc1Reason::Little) => {
                            println!("rc1: yes (little)")
                        }
                        excdata::Rc1::Yes(excdata::Rc1Reason::Restriction { ambient, orbit }) => {
                            println!("rc1: yes (restriction from {ambient} orbit {orbit})")
                        }
                        excdata::Rc1::No => println!("rc1: no"),
                    }
                    match &rec.rc2 {
                        excdata::Rc2::Yes(w) => println!("rc2: yes ({w})"),
                        excdata::Rc2::Unknown => println!("rc2: unknown"),
                    }
                }
            }
            Ok(())
        }
        ExceptionalCommand::Validate => {
            let violations = excdata::validate_tables();
            if violations.is_empty() {
                println!(
                    "ok: {} records, 0 violations (checksum {:#x})",
                    excdata::records().len(),
                    excdata::embedded_checksum()
                );
                Ok(())
            } else {
                for v in &violations {
                    eprintln!("{v}");
                }
                Err(Error::Domain(format!(
                    "{} validation violation(s)",
                    violations.len()
                )))
            }
        }
    }
}

fn levi_command(command: LeviCommand) -> Result<(), Error> {
    match command {
        LeviCommand::CheckI { kind, rank, subset } => {
            let kind = match (kind.to_ascii_uppercase().as_str(), rank) {
                ("A", Some(r)) => RootKind::A(r),
                ("B", Some(r)) => RootKind::B(r),
                ("C", Some(r)) => RootKind::C(r),
                ("D", Some(r)) => RootKind::D(r),
                ("A" | "B" | "C" | "D", None) => {
                    return Err(Error::Parse("classical types require --rank".into()))
                }
                ("E6", _) => RootKind::E6,
                ("E7", _) => RootKind::E7,
                ("E8", _) => RootKind::E8,
                ("F4", _) => RootKind::F4,
                ("G2", _) => RootKind::G2,
                (other, _) => {
                    return Err(Error::Parse(format!("unknown root-system type {other:?}")))
                }
            };
            let nodes: Vec<usize> = subset
                .split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad node index {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            let rs = RootSystem::new(kind)?;
            let ok = rs.levi_condition_i(&nodes)?;
            println!(
                "{kind} nodes {{{}}}: condition (i) {}",
                nodes
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                if ok { "holds" } else { "fails" }
            );
            Ok(())
        }
    }
}
