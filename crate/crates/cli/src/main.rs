use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context as _, Result};
use clap::{Args, Parser, Subcommand};
use permsym::{Complex64, Limits};
use permsym_cli::commands::{self, Context, Mode, SourceArgs};
use permsym_cli::format::{Format, Report};
use permsym_cli::input;

/// Permutation symmetry of identical particles: symmetric-group irreps,
/// Young-operator projection, density invariance and symmetry-dependent
/// energies.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on a
/// usage or input error.
#[derive(Parser, Debug)]
#[command(name = "permsym", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Output encoding; defaults to dot for `genealogy` and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Seed for every random choice; recorded in the report header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, default_value_t = Limits::DEFAULT.group_n)]
    max_group_n: usize,

    #[arg(long, global = true, default_value_t = Limits::DEFAULT.partition_n)]
    max_partition_n: usize,

    #[arg(long, global = true, default_value_t = Limits::DEFAULT.genealogy_n)]
    max_genealogy_n: usize,

    /// Largest configuration-space dimension M^N.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.config_dim)]
    max_config_dim: usize,

    /// Largest M^N for dense operators.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.dense_dim)]
    max_dense_dim: usize,
}

#[derive(Args, Debug)]
struct SourceOpts {
    /// JSON product-state spec: {"m", "orbitals", optional "diagram", "r", "t"}.
    input: Option<PathBuf>,
    /// One-particle basis size.
    #[arg(long)]
    m: Option<usize>,
    /// 1-based orbital per particle, e.g. 1,2,3.
    #[arg(long)]
    orbitals: Option<String>,
    /// Row lengths, e.g. 2,1.
    #[arg(long)]
    diagram: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the diagrams with n boxes and check Σ f² = n!.
    Diagrams { n: usize },
    /// List the standard tableaux of a diagram in matrix-index order.
    Tableaux { diagram: String },
    /// Print the representation matrix of a permutation (1-based one-line).
    Irrep {
        diagram: String,
        permutation: String,
    },
    /// Check representations, projection and density invariance for S_n.
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Random pairs per diagram in random mode.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Negate generator s_k in every representation.
        #[arg(long, hide = true)]
        inject_fault: Option<usize>,
    },
    /// Project a product state onto |[λ] r t⟩.
    Project {
        #[command(flatten)]
        source: SourceOpts,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Build the averaged density operator and check its invariance.
    Density {
        #[command(flatten)]
        source: SourceOpts,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Energies by trace and closed form from a Hamiltonian spec file.
    Energy {
        spec: PathBuf,
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Diagram genealogy graph up to n_max boxes.
    Genealogy { n_max: usize },
    /// Compare |Ψ|² and |P₁₂Ψ|² for Ψ = c1 Ψ_sym + c2 Ψ_anti.
    Probe {
        #[arg(long, allow_hyphen_values = true)]
        c1: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        c1_im: f64,
        #[arg(long, allow_hyphen_values = true)]
        c2: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        c2_im: f64,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value = "1,2")]
        orbitals: String,
    },
    /// Exchange statistics of a composite particle.
    Composite {
        #[arg(long)]
        fermions: u64,
        /// Total spin as 2s.
        #[arg(long, allow_hyphen_values = true)]
        twice_spin: Option<i64>,
        /// Also report the parafermi occupancy bound of this rank.
        #[arg(long)]
        parafermi_rank: Option<u32>,
    },
}

impl SourceOpts {
    fn into_args(self, r: Option<usize>, t: Option<usize>) -> Result<SourceArgs> {
        Ok(SourceArgs {
            spec: self.input.as_deref().map(input::read_json).transpose()?,
            m: self.m,
            orbitals: self
                .orbitals
                .as_deref()
                .map(input::parse_list)
                .transpose()?,
            diagram: self
                .diagram
                .as_deref()
                .map(input::parse_diagram)
                .transpose()?,
            r,
            t,
        })
    }
}

fn run(cli: Cli) -> Result<(Report, Format)> {
    let g = &cli.global;
    let ctx = Context {
        seed: g.seed,
        limits: Limits {
            group_n: g.max_group_n,
            partition_n: g.max_partition_n,
            genealogy_n: g.max_genealogy_n,
            config_dim: g.max_config_dim,
            dense_dim: g.max_dense_dim,
        },
    };
    let default_format = match cli.command {
        Command::Genealogy { .. } => Format::Dot,
        _ => Format::Json,
    };
    let report = match cli.command {
        Command::Diagrams { n } => commands::diagrams(&ctx, n)?,
        Command::Tableaux { diagram } => {
            commands::tableaux(&ctx, &input::parse_diagram(&diagram)?)?
        }
        Command::Irrep {
            diagram,
            permutation,
        } => {
            let d = input::parse_diagram(&diagram)?;
            let p = input::parse_permutation(&permutation)?;
            commands::irrep(&ctx, &d, &p)?
        }
        Command::Verify {
            n,
            mode,
            trials,
            inject_fault,
        } => commands::verify(&ctx, n, mode, trials, inject_fault)?,
        Command::Project { source, r, t } => commands::project(&ctx, source.into_args(r, t)?)?,
        Command::Density { source, t } => commands::density(&ctx, source.into_args(None, t)?)?,
        Command::Energy { spec, diagram, t } => {
            let spec = input::read_json(&spec)?;
            let diagram = diagram.as_deref().map(input::parse_diagram).transpose()?;
            commands::energy(&ctx, &spec, diagram, t)?
        }
        Command::Genealogy { n_max } => commands::genealogy(&ctx, n_max)?,
        Command::Probe {
            c1,
            c1_im,
            c2,
            c2_im,
            m,
            orbitals,
        } => commands::probe(
            &ctx,
            Complex64::new(c1, c1_im),
            Complex64::new(c2, c2_im),
            m,
            &input::parse_list(&orbitals)?,
        )?,
        Command::Composite {
            fermions,
            twice_spin,
            parafermi_rank,
        } => commands::composite(&ctx, fermions, twice_spin, parafermi_rank)?,
    };
    Ok((report, g.format.unwrap_or(default_format)))
}

fn emit(report: &Report, format: Format, output: Option<&PathBuf>) -> Result<()> {
    let text = report.render(format)?;
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = cli.global.output.clone();
    let result = run(cli).and_then(|(report, format)| {
        emit(&report, format, output.as_ref())?;
        Ok(report.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
