use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use octsolve_core::canonical::{canonicalize, CanonicalForm, OrbitLabel};
use octsolve_core::fibpoly::parse_coefficients;
use octsolve_core::field::{Field, FieldSpec, PrimeField, Rationals, Reals};
use octsolve_core::octonion::Octonion;
use octsolve_core::oracle::verify_sweep;
use octsolve_core::radicals::{cbrt_octonion_real, sqrt_octonion};
use octsolve_core::solver::{solve, OrbitSet, SolutionSet};

/// Solve polynomial equations with scalar coefficients over split octonions.
///
/// Octonions are written as Zorn vector matrices `[a; u1,u2,u3; v1,v2,v3; b]`.
#[derive(Parser)]
#[command(name = "octsolve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a_n x^n + ... + a_1 x = c.
    Solve {
        #[command(flatten)]
        target: Target,
        /// Coefficients a_n,...,a_1, highest degree first.
        #[arg(long = "f", allow_hyphen_values = true)]
        poly: String,
        /// Also print the canonical form of c, its witness and the system used.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// All square roots of c.
    Sqrt {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
    },
    /// All real cube roots of c.
    Cbrt {
        #[arg(long, default_value = "r")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        json: bool,
    },
    /// Canonical orbit representative of c.
    Canon {
        #[command(flatten)]
        target: Target,
        /// Print the witness word.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the solver with exhaustive enumeration over GF(p).
    Verify {
        #[arg(long)]
        field: String,
        #[arg(long)]
        max_degree: usize,
        /// Allow the GF(5) sweep.
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Target {
    /// `q`, `r` or `gf:<p>`.
    #[arg(long)]
    field: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
}

fn parse_c<F: Field>(f: &F, s: &str) -> Result<Octonion<F::Elem>> {
    Octonion::parse(f, s).with_context(|| format!("cannot read octonion `{s}` over {}", f.name()))
}

fn print_solutions<F: Field>(f: &F, s: &SolutionSet<F::Elem>) {
    if s.is_empty() {
        println!("no solutions");
        return;
    }
    for x in &s.points {
        println!("{}", x.format(f));
    }
    match &s.orbits {
        OrbitSet::Labels(labels) => {
            for (l, m) in labels {
                println!("orbit O({}, {})", f.format(l), f.format(m));
            }
        }
        OrbitSet::Variety { fhat, mucheck } => {
            println!("orbits O(l, m) with {} = 0 and {} = 0", fhat.display(f, "l", "m"), mucheck.display(f, "l", "m"));
        }
    }
}

fn print_canonical<F: Field>(f: &F, cf: &CanonicalForm<F::Elem>, trace: bool) {
    match &cf.kind {
        OrbitLabel::Scalar(nu) => println!("scalar {}", f.format(nu)),
        OrbitLabel::Orbit { lambda, mu } => println!("orbit O({}, {})", f.format(lambda), f.format(mu)),
    }
    println!("representative {}", cf.representative.format(f));
    if trace {
        println!("witness {}", cf.witness.to_json(f));
    }
}

fn run_solve<F: Field>(f: &F, poly: &str, c: &str, trace: bool, as_json: bool) -> Result<bool> {
    let poly = parse_coefficients(f, poly).with_context(|| format!("cannot read coefficients `{poly}`"))?;
    let c = parse_c(f, c)?;
    let s = solve(f, &poly, &c)?;
    let cf = trace.then(|| canonicalize(f, &c));
    if as_json {
        let mut out = s.to_json(f);
        if let Some(cf) = &cf {
            out["canonical"] = cf.to_json(f);
            out["system"] = json!({
                "kind": s.system.map(|k| k.name()),
                "pairs": s.pairs.iter().map(|(l, m)| json!({ "lambda": f.to_json(l), "mu": f.to_json(m) })).collect::<Vec<_>>(),
                "diagnostics": s.diagnostics,
            });
        }
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        if let Some(cf) = &cf {
            print_canonical(f, cf, true);
            if let Some(kind) = s.system {
                println!("system {}", kind.name());
            }
            for d in &s.diagnostics {
                println!("dropped {d}");
            }
        }
        print_solutions(f, &s);
    }
    Ok(true)
}

fn run_sqrt<F: Field>(f: &F, c: &str, as_json: bool) -> Result<bool> {
    let c = parse_c(f, c)?;
    let r = sqrt_octonion(f, &c);
    let case = format!("{:?}", r.case);
    let s = r.into_solution_set();
    if as_json {
        let mut out = s.to_json(f);
        out["case"] = json!(case);
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("case {case}");
        print_solutions(f, &s);
    }
    Ok(true)
}

fn run_canon<F: Field>(f: &F, c: &str, trace: bool, as_json: bool) -> Result<bool> {
    let c = parse_c(f, c)?;
    let cf = canonicalize(f, &c);
    if as_json {
        let mut out = cf.to_json(f);
        if !trace {
            out.as_object_mut().expect("object").remove("witness");
        }
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        print_canonical(f, &cf, trace);
    }
    Ok(true)
}

fn with_field<R>(
    spec: &str,
    q: impl FnOnce(&Rationals) -> R,
    r: impl FnOnce(&Reals) -> R,
    p: impl FnOnce(&PrimeField) -> R,
) -> Result<R> {
    Ok(match spec.parse::<FieldSpec>()? {
        FieldSpec::Rationals => q(&Rationals),
        FieldSpec::Reals => r(&Reals::default()),
        FieldSpec::Prime(m) => p(&PrimeField::new(m)?),
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { target, poly, trace, json } => with_field(
            &target.field,
            |f| run_solve(f, &poly, &target.c, trace, json),
            |f| run_solve(f, &poly, &target.c, trace, json),
            |f| run_solve(f, &poly, &target.c, trace, json),
        )?,
        Command::Sqrt { target, json } => with_field(
            &target.field,
            |f| run_sqrt(f, &target.c, json),
            |f| run_sqrt(f, &target.c, json),
            |f| run_sqrt(f, &target.c, json),
        )?,
        Command::Canon { target, trace, json } => with_field(
            &target.field,
            |f| run_canon(f, &target.c, trace, json),
            |f| run_canon(f, &target.c, trace, json),
            |f| run_canon(f, &target.c, trace, json),
        )?,
        Command::Cbrt { field, c, json: as_json } => {
            if field.parse::<FieldSpec>()? != FieldSpec::Reals {
                bail!("cube roots are only available over r");
            }
            let f = Reals::default();
            let c = parse_c(&f, &c)?;
            let r = cbrt_octonion_real(&f, &c);
            let case = format!("{:?}", r.case);
            let s = r.into_solution_set();
            if as_json {
                let mut out = s.to_json(&f);
                out["case"] = json!(case);
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("case {case}");
                print_solutions(&f, &s);
            }
            Ok(true)
        }
        Command::Verify { field, max_degree, slow, json: as_json } => {
            let FieldSpec::Prime(p) = field.parse::<FieldSpec>()? else {
                bail!("verify needs a field gf:<p>");
            };
            if max_degree == 0 {
                bail!("--max-degree must be at least 1");
            }
            let rep = verify_sweep(p, max_degree, slow)?;
            let f = PrimeField::new(p)?;
            if as_json {
                println!("{}", serde_json::to_string_pretty(&rep.to_json(&f))?);
            } else {
                println!(
                    "GF({p}), degree <= {max_degree}: {} polynomials, {} targets: {}",
                    rep.polynomials,
                    rep.targets,
                    if rep.passed() { "PASS" } else { "FAIL" }
                );
                for (kind, n) in &rep.by_system {
                    println!("  {kind}: {n} non-scalar targets");
                }
                for cx in rep.mismatches.iter().chain(&rep.bound_violations) {
                    println!("  counterexample {}", cx.to_json(&f));
                }
                for e in &rep.errors {
                    println!("  error {e}");
                }
            }
            Ok(rep.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
