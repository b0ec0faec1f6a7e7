use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use netkappa::experiments::{
    builtin_scenarios, find_scenario, run_sweep, trend_statistics, SweepConfig, SweepOptions,
};
use netkappa::{
    analyze, edgelist, lemma2_diagnostic, lemma2_survey, ControllabilityReport, Error,
    GeneratorSpec, Matrix,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Controllability index of weighted leader-follower networks.
///
/// Vertex indices on the command line and in edge-list files are 1-based.
#[derive(Parser, Debug)]
#[command(name = "netkappa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze an edge-list file for a given leader set.
    Analyze {
        input: PathBuf,
        /// Comma-separated 1-based leader vertices, e.g. `5` or `1,4`.
        #[arg(long, short, required = true)]
        leaders: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Generate a network and write it as an edge list.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// Number of vertices (all families except barabasi-albert).
        #[arg(long, short = 'n')]
        order: Option<usize>,
        /// Edge probability (erdos-renyi) or rewiring probability (watts-strogatz).
        #[arg(long)]
        p: Option<f64>,
        /// Ring neighbours per side (watts-strogatz).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m0: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Orient a path from vertex 1 towards vertex n.
        #[arg(long)]
        directed: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Uniform weight perturbation amplitude applied to existing edges.
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        /// Output file; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run a built-in scenario or a TOML sweep configuration and write CSV.
    Sweep {
        /// Scenario name (see `list-scenarios`) or path to a `.toml` file.
        scenario: String,
        /// Output file; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Worker threads. 0 uses every core.
        #[arg(long, default_value_t = 1)]
        parallelism: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// List the built-in scenarios.
    ListScenarios {
        /// Print the named scenario as a TOML configuration instead.
        #[arg(long, value_name = "NAME")]
        config: Option<String>,
    },
    /// Survey cond_inf against the row-sum-ratio bound on random matrices.
    Lemma2 {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Complete,
    DenseRandom,
    #[value(alias = "er")]
    ErdosRenyi,
    #[value(alias = "ws")]
    WattsStrogatz,
    #[value(alias = "ba")]
    BarabasiAlbert,
}

/// Failure with its exit status: 1 usage, 2 input, 3 numerical.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Config(_) => 2,
            Error::NoConvergence(_) | Error::NonFinite { .. } | Error::TooFewPoints(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Analyze {
            input,
            leaders,
            format,
        } => cmd_analyze(&input, &leaders, format),
        Command::Generate {
            family,
            order,
            p,
            k,
            m0,
            m,
            t,
            directed,
            seed,
            noise,
            out,
        } => {
            let spec = generator_spec(family, order, p, k, m0, m, t, directed)?;
            cmd_generate(spec, seed, noise, out.as_deref())
        }
        Command::Sweep {
            scenario,
            out,
            parallelism,
            seed,
            trials,
        } => cmd_sweep(&scenario, out.as_deref(), parallelism, seed, trials),
        Command::ListScenarios { config } => cmd_list(config.as_deref()),
        Command::Lemma2 {
            order,
            samples,
            seed,
            format,
        } => cmd_lemma2(order, samples, seed, format),
    }
}

fn read_input(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn check_output(path: Option<&Path>) -> Outcome {
    let Some(path) = path else { return Ok(()) };
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    if !parent.is_dir() {
        return Err(Failure::input(format!(
            "output directory {} does not exist",
            parent.display()
        )));
    }
    if path.is_dir() {
        return Err(Failure::input(format!("{} is a directory", path.display())));
    }
    Ok(())
}

fn emit(text: &str, path: Option<&Path>) -> Outcome {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `5` or `1,4` into 0-based indices.
fn parse_leaders(list: &str, order: usize) -> std::result::Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for field in list.split(',') {
        let field = field.trim();
        let index: usize = field
            .parse()
            .map_err(|_| Failure::usage(format!("invalid leader `{field}`: expected a 1-based vertex index")))?;
        if index == 0 || index > order {
            return Err(Failure::usage(format!(
                "leader vertex {field} is out of range: the network has vertices 1..={order}"
            )));
        }
        out.push(index - 1);
    }
    Ok(out)
}

fn cmd_analyze(input: &Path, leaders: &str, format: Format) -> Outcome {
    let text = read_input(input)?;
    let net = edgelist::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", input.display())))?;
    let leaders = parse_leaders(leaders, net.order())?;
    let partition = net.partition(&leaders)?;
    let report = analyze(&partition)?;
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            println!("{json}");
        }
        Format::Table => print!("{}", report_table(&report)),
    }
    Ok(())
}

fn report_table(r: &ControllabilityReport) -> String {
    let mut s = String::new();
    let cond = if r.cond.is_finite() {
        format!("{:.4e}", r.cond)
    } else {
        "inf".to_string()
    };
    writeln!(s, "followers        {}", r.n_followers).unwrap();
    writeln!(s, "leaders          {}", r.n_leaders).unwrap();
    writeln!(s, "rank(Psi)        {} of {}", r.rank, r.n_followers).unwrap();
    writeln!(s, "controllable     {}", if r.exactly_controllable { "yes" } else { "no" }).unwrap();
    writeln!(s, "cond(Psi)        {cond}").unwrap();
    writeln!(s, "kappa            {:.4e}", r.kappa).unwrap();
    writeln!(s, "spectral radius  {:.6}", r.spectral_radius).unwrap();
    let eig: Vec<String> = r
        .spectrum_ff
        .values()
        .iter()
        .map(|z| {
            if z.im == 0.0 {
                format!("{:.6}", z.re)
            } else {
                format!("{:.6}{:+.6}i", z.re, z.im)
            }
        })
        .collect();
    writeln!(s, "eigenvalues      {}", eig.join(" ")).unwrap();
    s
}

#[allow(clippy::too_many_arguments)]
fn generator_spec(
    family: Family,
    order: Option<usize>,
    p: Option<f64>,
    k: Option<usize>,
    m0: Option<usize>,
    m: Option<usize>,
    t: Option<usize>,
    directed: bool,
) -> std::result::Result<GeneratorSpec, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::usage(format!("--{flag} is required for this family")));
    let spec = match family {
        Family::Path => GeneratorSpec::Path {
            order: need(order, "order")?,
            directed,
        },
        Family::Complete => GeneratorSpec::Complete {
            order: need(order, "order")?,
        },
        Family::DenseRandom => GeneratorSpec::DenseRandom {
            order: need(order, "order")?,
        },
        Family::ErdosRenyi => GeneratorSpec::ErdosRenyi {
            order: need(order, "order")?,
            p: p.ok_or_else(|| Failure::usage("--p is required for erdos-renyi"))?,
        },
        Family::WattsStrogatz => GeneratorSpec::WattsStrogatz {
            order: need(order, "order")?,
            k: need(k, "k")?,
            p: p.ok_or_else(|| Failure::usage("--p is required for watts-strogatz"))?,
        },
        Family::BarabasiAlbert => GeneratorSpec::BarabasiAlbert {
            m0: need(m0, "m0")?,
            m: need(m, "m")?,
            t: need(t, "t")?,
        },
    };
    if directed && !matches!(spec, GeneratorSpec::Path { .. }) {
        return Err(Failure::usage("--directed only applies to path"));
    }
    spec.validate()?;
    Ok(spec)
}

fn cmd_generate(spec: GeneratorSpec, seed: u64, noise: f64, out: Option<&Path>) -> Outcome {
    check_output(out)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let net = spec.generate(&mut rng)?.apply_noise(noise, &mut rng)?;
    emit(&edgelist::write(&net), out)
}

fn cmd_sweep(
    name: &str,
    out: Option<&Path>,
    parallelism: usize,
    seed: Option<u64>,
    trials: Option<usize>,
) -> Outcome {
    let path = Path::new(name);
    let mut scenario = if name.ends_with(".toml") || path.is_file() {
        let text = read_input(path)?;
        SweepConfig::from_toml(&text)
            .and_then(SweepConfig::into_scenario)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    } else {
        find_scenario(name)?
    };
    check_output(out)?;
    if let Some(s) = seed {
        scenario.base_seed = s;
    }
    if let Some(t) = trials {
        scenario.trials_per_point = t;
    }
    scenario.validate()?;
    let result = run_sweep(&scenario, &SweepOptions { parallelism })?;
    emit(&result.to_csv(), out)?;
    let mut summary = format!(
        "{}: {} points x {} trials in {:.2?}",
        scenario.name,
        result.points.len(),
        scenario.trials_per_point,
        result.elapsed
    );
    if let Ok(t) = trend_statistics(&result) {
        write!(
            summary,
            "; spearman {:.3}, argmax {}, saturating {}",
            t.spearman_rho, t.argmax_parameter, t.saturation_flag
        )
        .unwrap();
    }
    eprintln!("{summary}");
    Ok(())
}

fn cmd_list(config: Option<&str>) -> Outcome {
    if let Some(name) = config {
        let s = find_scenario(name)?;
        print!("{}", SweepConfig::from_scenario(&s).to_toml());
        return Ok(());
    }
    let all = builtin_scenarios();
    let width = all.iter().map(|s| s.name.len()).max().unwrap_or(0);
    for s in all {
        println!("{:width$}  {}", s.name, s.description);
    }
    Ok(())
}

fn cmd_lemma2(order: usize, samples: usize, seed: u64, format: Format) -> Outcome {
    let survey = lemma2_survey(order, samples, seed)?;
    let identity = lemma2_diagnostic(&Matrix::identity(2, 2))?;
    let diag = lemma2_diagnostic(&Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 10.0]))?;
    match format {
        Format::Json => {
            let json = serde_json::json!({
                "survey": survey,
                "counterexamples": {
                    "identity": identity,
                    "diag_1_10": diag,
                },
            });
            println!("{}", serde_json::to_string_pretty(&json).expect("serializes"));
        }
        Format::Table => {
            println!(
                "random {order}x{order} Uniform(0,1): {} of {} satisfy cond_inf >= gamma*N (rate {:.3})",
                survey.satisfied, survey.samples, survey.satisfied_rate
            );
            for (name, d) in [("identity", identity), ("diag(1,10)", diag)] {
                println!(
                    "{name:<11} gamma {:.4} bound {:.4} cond_inf {:.4} satisfied {}",
                    d.gamma, d.bound, d.cond_inf, d.satisfied
                );
            }
        }
    }
    Ok(())
}
