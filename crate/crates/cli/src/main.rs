mod commands;
mod outcome;
mod render;
mod targets;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use projring::{AlgebraSpec, Family, Result};

/// Builds the Hopf algebras 𝓗_n(q), H_n(0,q), H_n(p,q), their modules and projective class
/// rings, and checks the ring structure against the module computations.
#[derive(Parser, Debug)]
#[command(name = "projring", version)]
pub struct Cli {
    /// Algebra family: taft, taft-opp, tensor-taft or hpq.
    #[arg(long, global = true)]
    pub family: Option<Family>,
    /// Order of the root of unity q.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// Deformation parameter for hpq, in the cyclotomic text format (e.g. 0, 1, 2*q^2).
    #[arg(long, global = true)]
    pub p: Option<String>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the rendered result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Check closed forms symbolically only, without building modules.
    #[arg(long, global = true)]
    pub symbolic: bool,
    /// Include wall-clock time in the JSON envelope (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structure checks on the algebra itself.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// The simple modules and their projective covers.
    Modules {
        #[command(subcommand)]
        action: ModulesAction,
    },
    /// One product of basis classes, in closed form and computed.
    Fuse { a: String, b: String },
    /// The full fusion table, crosschecked.
    Table,
    /// Run one named verification target.
    Verify { target: String },
    /// Dump structure constants, modules or the fusion table.
    Export {
        #[arg(value_enum)]
        what: ExportKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebraAction {
    /// Hopf axioms, radical, Loewy length, integrals and blocks.
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum ModulesAction {
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    Structure,
    Modules,
    Table,
}

impl Cli {
    /// The algebra named by --family/--n/--p, or `fallback` when no family is given.
    pub fn spec_or(&self, fallback: impl FnOnce(usize) -> Result<AlgebraSpec>) -> Result<AlgebraSpec> {
        match self.family {
            None => fallback(self.n),
            Some(f) => AlgebraSpec::parse(f.as_str(), self.n, self.p.as_deref()),
        }
    }

    pub fn spec(&self) -> Result<AlgebraSpec> {
        self.spec_or(|_| Err(projring::Error::Usage("--family is required for this command".into())))
    }

    fn command_name(&self) -> String {
        match &self.command {
            Command::Algebra { .. } => "algebra verify".into(),
            Command::Modules { .. } => "modules list".into(),
            Command::Fuse { a, b } => format!("fuse {a} {b}"),
            Command::Table => "table".into(),
            Command::Verify { target } => format!("verify {target}"),
            Command::Export { what } => format!("export {}", what.to_possible_value().expect("named").get_name()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("projring: cannot size the thread pool: {e}");
        }
    }
    let start = Instant::now();
    let name = cli.command_name();
    let result = commands::run(&cli);
    let elapsed = cli.timing.then(|| start.elapsed());
    let (rendered, code) = match result {
        Ok(outcome) => {
            let code = if outcome.passed() { 0 } else { 1 };
            match render::render(&cli, &name, &outcome, elapsed) {
                Ok(s) => (s, code),
                Err(e) => (render::failure(&name, &e.to_string()), 2),
            }
        }
        Err(e) => (render::failure(&name, &e.to_string()), 2),
    };
    if let Err(e) = render::emit(&cli, &name, &rendered) {
        eprintln!("projring: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
