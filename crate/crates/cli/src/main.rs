//! `nilclass2` — batch interface to the classification library.
//!
//! Exit codes: 0 ok, 1 domain error, 2 parse error, 3 reject,
//! 4 no catalog match, 5 ambiguous match.

use clap::{Args, Parser, Subcommand};
use nilclass2::classify::{classify, ClassifyError, ClassifyOutcome, RejectReason};
use nilclass2::extsquare::exterior_center;
use nilclass2::homology::{multiplier_formula, schur_multiplier_dim};
use nilclass2::io;
use nilclass2::pencil::fingerprint;
use nilclass2::{
    dimension, enumerate, make, random_invertible, FamilyParams, FamilyTag, FieldDescriptor,
    StructureConstants,
};
use std::fs;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_REJECT: u8 = 3;
const EXIT_NOMATCH: u8 = 4;
const EXIT_AMBIGUOUS: u8 = 5;

#[derive(Parser)]
#[command(name = "nilclass2", version, about = "Exact classification of class-two nilpotent Lie algebras with dim L² = 2", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity of an algebra file
    Validate { file: String },
    /// Classify an algebra as family ⊕ A(s)
    Classify {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// List or emit catalog entries
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Basic invariants (dimensions, class, stem flags)
    Info {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Pencil fingerprint (generic rank, drops, cross-restriction ranks)
    Fingerprint {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Schur multiplier: Chevalley–Eilenberg oracle vs closed formula
    Multiplier {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Exterior center, capability and unicentrality
    Excenter {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a seeded random change of basis
    Scramble {
        file: String,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Emit a seeded random class-two algebra with dim L² = 2
    Random {
        #[arg(long)]
        dimv: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = parse_field)]
        field: FieldDescriptor,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// All catalog entries of a given dimension
    List {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_parser = parse_field)]
        field: FieldDescriptor,
    },
    /// Write one catalog entry as an algebra file
    Emit {
        tag: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = parse_field)]
        field: FieldDescriptor,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    k1: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// ε for L622, as an exact coefficient (integer or a/b)
    #[arg(long)]
    eps: Option<String>,
    /// η for L672, as an exact coefficient (integer or a/b)
    #[arg(long)]
    eta: Option<String>,
}

fn parse_field(s: &str) -> Result<FieldDescriptor, String> {
    FieldDescriptor::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli.command))
}

fn load(file: &str) -> Result<StructureConstants, u8> {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{file}: {e}");
            return Err(EXIT_PARSE);
        }
    };
    io::parse(&text).map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })
}

fn write_out(path: &Option<String>, text: &str) -> u8 {
    match path {
        Some(p) => match fs::write(p, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("{p}: {e}");
                EXIT_DOMAIN
            }
        },
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn run(command: Command) -> u8 {
    match command {
        Command::Validate { file } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            match l.validate() {
                Ok(()) => {
                    println!("ok");
                    EXIT_OK
                }
                Err(v) => {
                    println!("{v}");
                    EXIT_DOMAIN
                }
            }
        }
        Command::Classify { file, json } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            cmd_classify(&l, json)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { dim, field } => {
                for (tag, params) in enumerate(dim, &field) {
                    println!("{}{}", tag.name(), params.render());
                }
                EXIT_OK
            }
            CatalogAction::Emit {
                tag,
                params,
                field,
                output,
            } => cmd_emit(&tag, &params, field, &output),
        },
        Command::Info { file, json } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let r = l.report();
            if json {
                print_json(&serde_json::json!({
                    "n": r.n,
                    "dim_derived": r.dim_derived,
                    "dim_center": r.dim_center,
                    "nilpotency_class": r.nilpotency_class,
                    "is_stem": r.is_stem,
                    "gen_heisenberg_rank": r.gen_heisenberg_rank,
                }));
            } else {
                let class = r
                    .nilpotency_class
                    .map_or("not nilpotent".to_string(), |c| c.to_string());
                println!(
                    "n: {}, dim L²: {}, dim Z: {}, class: {}, stem: {}, gen-Heisenberg rank: {}",
                    r.n,
                    r.dim_derived,
                    r.dim_center,
                    class,
                    r.is_stem,
                    r.gen_heisenberg_rank
                        .map_or("-".to_string(), |g| g.to_string())
                );
            }
            EXIT_OK
        }
        Command::Fingerprint { file, json } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            match fingerprint(&l) {
                Ok(fp) => {
                    if json {
                        print_json(&fp.to_json());
                    } else {
                        println!(
                            "n: {}, dimV: {}, generic rank: {}, drops: {:?}, cross: {:?}{}",
                            fp.n,
                            fp.dim_v,
                            fp.generic_rank,
                            fp.drops,
                            fp.cross,
                            if fp.nondrop_flag {
                                ", possible unresolved drop"
                            } else {
                                ""
                            }
                        );
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("{e}");
                    EXIT_DOMAIN
                }
            }
        }
        Command::Multiplier { file, json } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            cmd_multiplier(&l, json)
        }
        Command::Excenter { file, json } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            match exterior_center(&l) {
                Ok(report) => {
                    if json {
                        let basis: Vec<Vec<String>> = report
                            .basis
                            .basis_rows()
                            .iter()
                            .map(|row| row.iter().map(|s| s.to_canonical_string()).collect())
                            .collect();
                        print_json(&serde_json::json!({
                            "dim": report.basis.dim(),
                            "basis": basis,
                            "capable": report.is_capable,
                            "unicentral": report.is_unicentral,
                        }));
                    } else {
                        println!(
                            "dim {}, capable: {}, unicentral: {}",
                            report.basis.dim(),
                            report.is_capable,
                            report.is_unicentral
                        );
                        for row in report.basis.basis_rows() {
                            let coords: Vec<String> =
                                row.iter().map(|s| s.to_canonical_string()).collect();
                            println!("  [{}]", coords.join(", "));
                        }
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("{e}");
                    EXIT_DOMAIN
                }
            }
        }
        Command::Scramble { file, seed, output } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let s = random_invertible(l.n(), *l.field(), seed);
            match l.change_of_basis(&s) {
                Ok(m) => write_out(&output, &io::serialize(&m)),
                Err(e) => {
                    eprintln!("{e}");
                    EXIT_DOMAIN
                }
            }
        }
        Command::Random {
            dimv,
            seed,
            field,
            output,
        } => match StructureConstants::random_class2(dimv, field, seed) {
            Ok(l) => write_out(&output, &io::serialize(&l)),
            Err(e) => {
                eprintln!("{e}");
                EXIT_DOMAIN
            }
        },
    }
}

fn cmd_classify(l: &StructureConstants, json: bool) -> u8 {
    match classify(l) {
        Ok(ClassifyOutcome::Classified(result)) => {
            if json {
                print_json(&result.to_json());
            } else {
                println!("{}", result.render());
            }
            EXIT_OK
        }
        Ok(ClassifyOutcome::Reject(reason)) => {
            let detail = match reason {
                RejectReason::NotClass2 => {
                    let c = l
                        .nilpotency_class()
                        .map_or("∞".to_string(), |c| c.to_string());
                    format!("nilpotency class {c} ≠ 2")
                }
                RejectReason::DerivedDimNot2 => {
                    format!("dim L² = {} ≠ 2", l.derived_subalgebra().dim())
                }
            };
            if json {
                print_json(&serde_json::json!({"outcome": "reject", "reason": detail}));
            } else {
                println!("reject: {detail}");
            }
            EXIT_REJECT
        }
        Ok(ClassifyOutcome::NoMatch(reason)) => {
            if json {
                print_json(
                    &serde_json::json!({"outcome": "no_match", "reason": reason.to_string()}),
                );
            } else {
                println!("no match: {reason}");
            }
            EXIT_NOMATCH
        }
        Ok(ClassifyOutcome::Ambiguous(candidates)) => {
            let names: Vec<String> = candidates
                .iter()
                .map(|(t, p)| format!("{}{}", t.name(), p.render()))
                .collect();
            if json {
                print_json(&serde_json::json!({"outcome": "ambiguous", "candidates": names}));
            } else {
                println!("ambiguous: {}", names.join(", "));
            }
            EXIT_AMBIGUOUS
        }
        Err(ClassifyError::NotALieAlgebra(v)) => {
            eprintln!("{v}");
            EXIT_DOMAIN
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_DOMAIN
        }
    }
}

fn cmd_multiplier(l: &StructureConstants, json: bool) -> u8 {
    let oracle = schur_multiplier_dim(l);
    // the closed formula applies to pure H-family algebras; classification
    // identifies which one (if any) this file is
    let formula = match classify(l) {
        Ok(ClassifyOutcome::Classified(r)) if r.abelian_dim == 0 => {
            multiplier_formula(r.family, &r.params).ok()
        }
        _ => None,
    };
    if json {
        print_json(&serde_json::json!({
            "oracle": oracle,
            "formula": formula,
            "match": formula.map(|f| f == oracle),
        }));
    } else {
        match formula {
            Some(f) => println!("oracle: {oracle}, formula: {f}, match: {}", f == oracle),
            None => println!("oracle: {oracle}, formula: n/a, match: n/a"),
        }
    }
    EXIT_OK
}

fn cmd_emit(tag: &str, args: &ParamArgs, field: FieldDescriptor, output: &Option<String>) -> u8 {
    let Some(tag) = FamilyTag::parse(tag) else {
        eprintln!("unknown family {tag:?}");
        return EXIT_DOMAIN;
    };
    let mut params = FamilyParams {
        m: args.m,
        k: args.k,
        k1: args.k1,
        r: args.r,
        epsilon: None,
        eta: None,
    };
    if let Some(e) = &args.eps {
        match field.parse_element(e) {
            Ok(v) => params.epsilon = Some(v),
            Err(err) => {
                eprintln!("--eps: {err}");
                return EXIT_DOMAIN;
            }
        }
    }
    if let Some(e) = &args.eta {
        match field.parse_element(e) {
            Ok(v) => params.eta = Some(v),
            Err(err) => {
                eprintln!("--eta: {err}");
                return EXIT_DOMAIN;
            }
        }
    }
    match make(tag, &params, field) {
        Ok(l) => {
            debug_assert_eq!(Ok(l.n()), dimension(tag, &params));
            write_out(output, &io::serialize(&l))
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_DOMAIN
        }
    }
}
