mod commands;
mod context;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

use context::{CliError, Ctx, ModuleSel, VSel};
use report::{digest, Outcome, Report};

/// Exact degree-zero K-theory of Hopf-Galois extensions over finite fields.
#[derive(Parser)]
#[command(name = "hopfk", version)]
struct Cli {
    /// Seed for every randomized kernel.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Iteration bound for global dimension and resolutions.
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and build spec files.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Composition series of a module.
    Chop {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
    },
    /// Simples, PIMs and primitive idempotents.
    Pims { file: PathBuf },
    /// Cartan matrix and its Smith form.
    Cartan { file: PathBuf },
    /// Class of a projective module over the PIMs.
    K0Class {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
    },
    /// Composition multiplicities of a module.
    G0Class {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
    },
    /// Least m with m[1] in the image of the Cartan map of H.
    MinimalM { file: PathBuf },
    /// Projectives P, Q with [P] - [Q] = m[1].
    FindPq { file: PathBuf },
    /// Check the Hopf algebra axioms.
    HopfCheck { file: PathBuf },
    /// Check bijectivity of the Galois map.
    GaloisCheck { file: PathBuf },
    /// Basis of the coinvariant subalgebra.
    Coinvariants { file: PathBuf },
    /// The A-module M⊗V.
    Twist {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
        #[command(flatten)]
        v: VSel,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Induce a B-module to A.
    Induce {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Restrict an A-module to B.
    Restrict {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Certify Ind Res M ≅ M⊗H.
    VerifyPropA {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
    },
    /// Certify Ind(N⊗V) ≅ Ind(N)⊗V.
    VerifyPropB {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
        #[command(flatten)]
        v: VSel,
    },
    /// Build a crossed product B ∗ G.
    Crossed {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write the comodule algebra instead of the bare algebra.
        #[arg(long)]
        comodule: bool,
    },
    /// Resolve A-modules by modules that are projective over B.
    Resolve {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleSel,
    },
    /// Verify that the Cartan map of A has kernel and cokernel killed by m.
    VerifyTheorem {
        file: PathBuf,
        /// The coacting Hopf algebra, checked against the file.
        #[arg(long, value_name = "FILE", conflicts_with = "self_ext")]
        hopf: Option<PathBuf>,
        /// Treat a Hopf algebra as an extension of the ground field.
        #[arg(long = "self")]
        self_ext: bool,
    },
    /// Run the acceptance suite.
    Selftest,
}

impl Command {
    fn run(&self, ctx: &mut Ctx) -> Result<Outcome, CliError> {
        use Command::*;
        match self {
            Validate { files } => commands::validate(ctx, files),
            Chop { file, module } => commands::chop(ctx, file, module),
            Pims { file } => commands::pims(ctx, file),
            Cartan { file } => commands::cartan(ctx, file),
            K0Class { file, module } => commands::class(ctx, file, module, true),
            G0Class { file, module } => commands::class(ctx, file, module, false),
            MinimalM { file } => commands::minimal(ctx, file),
            FindPq { file } => commands::pq(ctx, file),
            HopfCheck { file } => commands::hopf_check(ctx, file),
            GaloisCheck { file } => commands::galois(ctx, file),
            Coinvariants { file } => commands::coinv(ctx, file),
            Twist { file, module, v, out } => commands::twist(ctx, file, module, v, out),
            Induce { file, module, out } => commands::induce(ctx, file, module, out),
            Restrict { file, module, out } => commands::restrict(ctx, file, module, out),
            VerifyPropA { file, module } => commands::prop_a(ctx, file, module),
            VerifyPropB { file, module, v } => commands::prop_b(ctx, file, module, v),
            Crossed { file, out, comodule } => commands::crossed(ctx, file, out, *comodule),
            Resolve { file, module } => commands::resolve(ctx, file, module),
            VerifyTheorem { file, hopf, self_ext } => commands::theorem(ctx, file, hopf, *self_ext),
            Selftest => commands::selftest(ctx),
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let matches = Cli::command().get_matches();
    let command = matches.subcommand_name().unwrap_or_default().to_string();
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    let start = Instant::now();
    let mut ctx = Ctx::new(cli.seed, cli.bound);
    let outcome = match cli.command.run(&mut ctx) {
        Ok(o) => o,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Failure(f)) => {
            let mut o = Outcome::default();
            o.fail(f.kind, f.message);
            o
        }
    };
    let report = Report {
        command,
        argv,
        seed: cli.seed,
        inputs_digest: digest(&ctx.inputs),
        outcome,
        elapsed_ms: start.elapsed().as_millis(),
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("JSON values serialize"));
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
