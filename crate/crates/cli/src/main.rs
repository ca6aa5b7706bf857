use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minvert::acceptance;
use minvert::affine::{singular_level_of_power_with, solve_affine_singular_with, Budget};
use minvert::chevalley::{build_lie_algebra, centralizer_dim, AlgElement, LieAlgebra};
use minvert::minimal_data::{central_charge, deligne_level, g_natural, k_natural, lisse_verdict, minimal_grading};
use minvert::rational::{fmt_q, parse_q};
use minvert::rootsys::{build_root_system, SimpleType, Weight};
use minvert::symmod::{theta_pairs, w_vector};
use minvert::tables::{build_table, emit_table, Format};
use minvert::LieError;

/// Minimal gradings, induced levels and singular vectors of affine vertex algebras.
#[derive(Parser)]
#[command(name = "minvert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic data of a simple type: h^vee, dimensions, grading, g^natural.
    Describe { ty: SimpleType },
    /// Pairs of positive roots summing to theta - theta_i.
    Pairs {
        ty: SimpleType,
        #[arg(long, default_value_t = 1)]
        summand: usize,
    },
    /// Level at which sigma(w_i)^(n+1) is singular, with the verified identity.
    Singular {
        ty: SimpleType,
        #[arg(long, default_value_t = 1)]
        summand: usize,
        #[arg(long, default_value_t = 0)]
        power: usize,
    },
    /// All singular vectors of a given weight and degree.
    Solve {
        ty: SimpleType,
        /// fundamental-weight coordinates, e.g. `0,1,0`
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        degree: usize,
    },
    /// Emit tables 1-4 (all of them when no id is given).
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: Option<u8>,
        #[arg(long)]
        json: bool,
    },
    /// Lisse and collapse verdicts at level p/q.
    Classify {
        ty: SimpleType,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Run the acceptance suite.
    CheckAll {
        #[arg(long)]
        budget: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        use LieError::*;
        match e {
            InvalidRank { .. }
            | UnknownType(_)
            | IndexOutOfRange { .. }
            | NotDominant(_)
            | WrongLength { .. }
            | NonDeligneType(_)
            | NoSuchSummand { .. }
            | Unsupported(_)
            | Parse(_)
            | BudgetExceeded { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn lie(ty: SimpleType) -> LieAlgebra {
    build_lie_algebra(&build_root_system(ty))
}

fn budget(explicit: Option<usize>) -> Budget {
    explicit.map(Budget::with_degree).unwrap_or_else(Budget::from_env)
}

fn describe(ty: SimpleType) -> Result<(), Failure> {
    let g = lie(ty);
    let rs = g.root_system();
    let d = minimal_grading(&g).dims();
    println!("type {ty}");
    println!("h_dual {}", rs.h_dual());
    println!("dim {}", g.dim());
    println!("dim O_min {}", g.dim() - centralizer_dim(&g, &AlgElement::basis(g.f_theta())));
    println!("theta {}", rs.theta());
    println!("grading dims {} {} {} {} {}", d[0], d[1], d[2], d[3], d[4]);
    for s in g_natural(&g)? {
        if s.dim() == 0 {
            continue;
        }
        println!("g{} {} dim {} level {}", s.index, s.kind, s.dim(), k_natural(&g, s.index)?);
    }
    if let Ok(k) = deligne_level(rs) {
        println!("deligne level {}", fmt_q(&k));
        println!("central charge there {}", fmt_q(&central_charge(rs, &k)?));
    }
    Ok(())
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Describe { ty } => describe(ty)?,
        Command::Pairs { ty, summand } => print!("{}", theta_pairs(&lie(ty), summand)?),
        Command::Singular { ty, summand, power } => {
            let g = lie(ty);
            let w = w_vector(&g, summand)?;
            println!("{}", singular_level_of_power_with(&g, &w, power, &budget(None))?);
        }
        Command::Solve { ty, weight, degree } => {
            let g = lie(ty);
            let mu = Weight::parse(&weight)?;
            let sols = solve_affine_singular_with(&g, &mu, degree, &budget(None))?;
            if sols.is_empty() {
                println!("no singular vectors of weight {} in degree {degree}", mu.fmt_fundamental());
            }
            for s in sols {
                println!("level {}", s.level_string());
                print!("{}", s.vector.render(&g));
            }
        }
        Command::Tables { id: Some(i), json } => {
            print!("{}", emit_table(i, if json { Format::Json } else { Format::Text })?);
        }
        Command::Tables { id: None, json: true } => {
            let all = (1..=4).map(|i| Ok(build_table(i)?.to_json())).collect::<Result<Vec<_>, LieError>>()?;
            println!("{}", serde_json::to_string_pretty(&all).expect("serializable"));
        }
        Command::Tables { id: None, json: false } => {
            let all = (1..=4).map(|i| emit_table(i, Format::Text)).collect::<Result<Vec<_>, LieError>>()?;
            print!("{}", all.join("\n"));
        }
        Command::Classify { ty, level } => {
            let k = parse_q(&level)?;
            let rs = build_root_system(ty);
            println!("{}", lisse_verdict(&rs, &k));
        }
        Command::CheckAll { budget: b } => {
            let reports = acceptance::run_all(&budget(b));
            for r in &reports {
                print!("{}", r.render());
            }
            let failed: Vec<String> = reports.iter().filter(|r| !r.passed).map(|r| r.id.to_string()).collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(format!("failed criteria: {}", failed.join(", "))));
            }
            println!("all {} criteria passed", reports.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
