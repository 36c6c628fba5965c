//! Command-line front end: configure a ring and depth, run verification
//! suites with reproducible sampling, and explore single objects of the
//! model (orbit steps, point actions, expectations, domain classes).

use clap::{Args, Parser, Subcommand};
use ringdyn::clopen::{domain_classify, parse_clopen};
use ringdyn::config::{OutputMode, RunConfig};
use ringdyn::frac::{normal_form, GroupElement};
use ringdyn::profinite::{orbit_translation, theta_apply, ProfiniteApprox};
use ringdyn::report::SuiteReport;
use ringdyn::suite::{find, run_all, suite_names, SuiteContext};
use ringdyn::words::{check_ce_intertwine, CLMonomial};
use ringdyn::{Error, Result, RingId};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ringdyn",
    version,
    about = "Exact verification of the affine partial-action model of an integral domain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print their reports.
    Verify(VerifyArgs),
    /// Evaluate a single object of the model.
    #[command(subcommand)]
    Explore(ExploreCmd),
}

#[derive(Args)]
struct VerifyArgs {
    /// Ring token: Z, Zi, F2t, or F2.
    #[arg(long)]
    ring: String,
    /// Depth modulus, written as a product expression in the ring's element
    /// syntax (e.g. "2^3*3^2*5", "360", "t^3*(t+1)^2").
    #[arg(long)]
    depth: Option<String>,
    /// Scale of every randomized sweep.
    #[arg(long, default_value_t = 500)]
    samples: u64,
    /// Seed; it fully determines all sampling.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// One suite name, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Report format: json or text.
    #[arg(long, default_value = "json")]
    output: String,
}

#[derive(Subcommand)]
enum ExploreCmd {
    /// Construct the translation carrying a point into a clopen target, and
    /// apply it.
    Orbit {
        /// Ring token: Z, Zi, F2t, or F2.
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Point "r mod N".
        #[arg(long)]
        x: String,
        /// Clopen target: "{c, ...} mod m", "full", or "empty".
        #[arg(long)]
        target: String,
    },
    /// Apply one group element to one approximation, refining the precision
    /// once if the domain test cannot be decided.
    Theta {
        /// Ring token: Z, Zi, F2t, or F2.
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Group element "(p/q, a/b)".
        #[arg(long)]
        g: String,
        /// Point "r mod N".
        #[arg(long)]
        x: String,
    },
    /// Run both expectation routes and the intertwine check on a monomial
    /// tuple "m'',n,m,n',m'".
    Expect {
        /// Ring token: Z, Zi, F2t, or F2.
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long)]
        monomial: String,
    },
    /// Classify the domain of the action of a group element.
    Domain {
        /// Ring token: Z, Zi, F2t, or F2.
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Group element "(p/q, a/b)".
        #[arg(long)]
        g: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Explore(ExploreCmd::Orbit { ring, x, target }) => {
            parse_ring(&ring).and_then(|r| cmd_orbit(r, &x, &target))
        }
        Command::Explore(ExploreCmd::Theta { ring, g, x }) => {
            parse_ring(&ring).and_then(|r| cmd_theta(r, &g, &x))
        }
        Command::Explore(ExploreCmd::Expect { ring, monomial }) => {
            parse_ring(&ring).and_then(|r| cmd_expect(r, &monomial))
        }
        Command::Explore(ExploreCmd::Domain { ring, g }) => {
            parse_ring(&ring).and_then(|r| cmd_domain(r, &g))
        }
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Parse { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn parse_ring(token: &str) -> Result<RingId> {
    RingId::from_token(token).ok_or_else(|| Error::parse(token, 0, "unknown ring"))
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let ring = parse_ring(&args.ring)?;
    let output = OutputMode::from_token(&args.output)
        .ok_or_else(|| Error::parse(&args.output, 0, "unknown output mode"))?;
    let config = RunConfig::build(ring, args.depth.as_deref(), args.samples, args.seed, output)?;
    let ctx = SuiteContext { config: &config };
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        run_all(&ctx)
    } else {
        match find(&args.suite) {
            Some(s) => vec![s.run(&ctx)],
            None => {
                let known = suite_names().join(", ");
                return Err(Error::parse(
                    &args.suite,
                    0,
                    format!("unknown suite; expected all or one of {known}"),
                ));
            }
        }
    };
    match config.output {
        OutputMode::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"))
        }
        OutputMode::Text => {
            for r in &reports {
                print!("{}", r.render_text());
            }
        }
    }
    Ok(if reports.iter().all(|r| r.pass) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_orbit(ring: RingId, x: &str, target: &str) -> Result<ExitCode> {
    let x = ProfiniteApprox::parse(ring, x)?;
    let target = parse_clopen(ring, target)?;
    let (point, g) = match orbit_translation(&x, &target) {
        Ok(g) => (x, g),
        Err(Error::InsufficientPrecision) => {
            let refined = x.refine(target.modulus())?;
            println!(
                "refined precision by {} to {}",
                target.modulus(),
                refined.precision()
            );
            let g = orbit_translation(&refined, &target)?;
            (refined, g)
        }
        Err(e) => return Err(e),
    };
    let y = theta_apply(&g, &point)?;
    println!("g = {g}");
    println!("{y}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_theta(ring: RingId, g: &str, x: &str) -> Result<ExitCode> {
    let g = GroupElement::parse(ring, g)?;
    let x = ProfiniteApprox::parse(ring, x)?;
    let y = match theta_apply(&g, &x) {
        Ok(y) => y,
        Err(Error::InsufficientPrecision) => {
            let nf = normal_form(&g);
            let factor = nf.m.mul(&nf.mp);
            let refined = x.refine(&factor)?;
            println!("refined precision by {} to {}", factor, refined.precision());
            theta_apply(&g, &refined)?
        }
        Err(e) => return Err(e),
    };
    println!("{y}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_expect(ring: RingId, monomial: &str) -> Result<ExitCode> {
    let x = CLMonomial::parse(ring, monomial)?;
    let out = check_ce_intertwine(&x);
    let verdict = if out.pass { "pass" } else { "fail" };
    if out.lhs.is_zero() && out.rhs.is_zero() {
        println!("E∘Ψ = Ψ∘Θ = 0; {verdict}");
    } else {
        println!("E∘Ψ = {}", out.lhs);
        println!("Ψ∘Θ = {}", out.rhs);
        println!("{verdict}");
    }
    Ok(if out.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_domain(ring: RingId, g: &str) -> Result<ExitCode> {
    let g = GroupElement::parse(ring, g)?;
    println!("{}", domain_classify(&g));
    Ok(ExitCode::SUCCESS)
}
