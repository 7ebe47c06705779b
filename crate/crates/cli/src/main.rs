use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use iwahori::components::{all_components, component_of, ComponentIndex};
use iwahori::kmweights::varpi;
use iwahori::polytope::{chamber_maxima, gaps_of, moment_polytope};
use iwahori::psi::{iwahori_leq, psi_by_oracle, psi_infinity, same_chamber_leq, PsiSet};
use iwahori::rops::{
    braid_check, braid_scan, check_table, covers, coweight_box, dim_orbit, r_closure, r_op,
    satisfies_cover_formula, simple_pair, table_for, BraidBucket,
};
use iwahori::selftest::{run_all, run_criterion, Options};
use iwahori::{Coweight, Error, Root, RootSystem};

#[derive(Parser)]
#[command(
    name = "iwahori",
    version,
    about = "Iwahori-orbit closures in affine Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Fundamental,
    Coroot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Filtration,
    Oracle,
    Rops,
}

#[derive(Args)]
struct Common {
    /// Cartan type, e.g. A2, B2, G2
    #[arg(long = "type", short = 't')]
    cartan: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Coordinates of coweight arguments
    #[arg(long, value_enum, default_value = "fundamental")]
    basis: Basis,
}

#[derive(Subcommand)]
enum Command {
    /// The closure set Ψ(λ)
    Psi {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "filtration")]
        method: Method,
    },
    /// Decide μ ≺ λ
    Order {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Apply R_α
    Rop {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Positive root in simple-root coordinates
        #[arg(long)]
        alpha: String,
    },
    /// Closure of λ under all R-operators
    Closure {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Dimension of the Iwahori orbit of λ
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Coweights covered by λ
    Covers {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Both sides of the braid relation at λ
    Braid {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Classify the braid relation over a box of coweights
    BraidScan {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box", default_value_t = 8)]
        radius: i64,
        /// Print the braid table with per-row check results
        #[arg(long)]
        emit_table: bool,
    },
    /// Component index κ of λ, or every component
    Component {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// The translation ρ̄_κ of λ, optionally of all of Ψ(λ)
    Translate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        kappa: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        psi: bool,
    },
    /// The level-one weight ϖ(λ)
    Varpi {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Moment polytope of Ψ(λ)
    Polytope {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Also print chamber maxima for this Weyl word (1-based, comma separated; empty for the identity)
        #[arg(long, allow_hyphen_values = true)]
        chamber: Option<String>,
    },
    /// Integral points of MP(λ) outside Ψ(λ), for one λ or a whole box
    GapScan {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long = "box", default_value_t = 3)]
        radius: i64,
    },
    /// Run the acceptance scans
    Selftest {
        #[arg(long = "box", default_value_t = 4)]
        radius: i64,
        /// Run a single criterion
        #[arg(long)]
        criterion: Option<usize>,
        /// Write the exploratory report (JSON) to this path
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

enum Failure {
    Library(Error),
    Io(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

struct Ctx {
    rs: RootSystem,
    basis: Basis,
}

impl Ctx {
    fn new(common: &Common) -> Result<Self, Error> {
        Ok(Ctx {
            rs: RootSystem::from_type_str(&common.cartan)?,
            basis: common.basis,
        })
    }

    fn coweight(&self, s: &str) -> Result<Coweight, Error> {
        let lambda = match self.basis {
            Basis::Fundamental => s.parse::<Coweight>()?,
            Basis::Coroot => self.rs.parse_coroot_coords(s)?,
        };
        self.rs.check_rank(lambda.rank())?;
        Ok(lambda)
    }

    fn root(&self, s: &str) -> Result<Root, Error> {
        let r: Root = s.trim_matches(|c| c == '[' || c == ']').parse()?;
        self.rs.check_positive_root(&r)?;
        Ok(r)
    }
}

fn coords(s: &BTreeSet<Coweight>) -> Vec<Vec<i64>> {
    s.iter().map(|m| m.0.clone()).collect()
}

fn lines<'a>(it: impl IntoIterator<Item = &'a Coweight>) -> String {
    it.into_iter().map(|m| format!("{m}\n")).collect()
}

fn emit(format: Format, text: String, value: serde_json::Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
    }
}

fn psi_text(p: &PsiSet) -> String {
    let mut out = String::new();
    for m in &p.members {
        match p.generation.get(m) {
            Some(g) if p.generation.len() > 1 => writeln!(out, "{m}\t{g}").unwrap(),
            _ => writeln!(out, "{m}").unwrap(),
        }
    }
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    let out = match cli.command {
        Command::Psi {
            common,
            lambda,
            method,
        } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let p = match method {
                Method::Filtration => psi_infinity(&ctx.rs, &lambda)?,
                Method::Oracle => psi_by_oracle(&ctx.rs, &lambda)?,
                Method::Rops => PsiSet {
                    members: r_closure(&ctx.rs, &lambda)?,
                    generation: [(lambda.clone(), 0)].into(),
                    base: lambda,
                },
            };
            emit(
                common.format.unwrap_or(Format::Json),
                psi_text(&p),
                p.to_json(),
            )
        }
        Command::Order { common, mu, lambda } => {
            let ctx = Ctx::new(&common)?;
            let mu = ctx.coweight(&mu)?;
            let lambda = ctx.coweight(&lambda)?;
            let leq = iwahori_leq(&ctx.rs, &mu, &lambda)?;
            let chamber = same_chamber_leq(&ctx.rs, &mu, &lambda);
            let mut text = format!("{leq}\n");
            if let Some(c) = chamber {
                writeln!(text, "same chamber: {c}").unwrap();
            }
            emit(
                common.format.unwrap_or(Format::Text),
                text,
                json!({"mu": mu.0, "lambda": lambda.0, "leq": leq, "same_chamber": chamber}),
            )
        }
        Command::Rop {
            common,
            lambda,
            alpha,
        } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let alpha = ctx.root(&alpha)?;
            let mu = r_op(&ctx.rs, &lambda, &alpha)?;
            emit(
                common.format.unwrap_or(Format::Text),
                format!("{mu}\n"),
                json!({"lambda": lambda.0, "alpha": alpha.0, "result": mu.0}),
            )
        }
        Command::Closure { common, lambda } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let set = r_closure(&ctx.rs, &lambda)?;
            emit(
                common.format.unwrap_or(Format::Text),
                lines(&set),
                json!({"lambda": lambda.0, "members": coords(&set)}),
            )
        }
        Command::Dim { common, lambda } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let d = dim_orbit(&ctx.rs, &lambda)?;
            emit(
                common.format.unwrap_or(Format::Text),
                format!("{d}\n"),
                json!({"lambda": lambda.0, "dim": d}),
            )
        }
        Command::Covers { common, lambda } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let cs = covers(&ctx.rs, &lambda)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (mu, alpha) in &cs {
                let d = dim_orbit(&ctx.rs, mu)?;
                let formula = satisfies_cover_formula(&ctx.rs, &lambda, mu);
                writeln!(text, "{mu}\tα={alpha}\tdim={d}").unwrap();
                rows.push(
                    json!({"mu": mu.0, "alpha": alpha.0, "dim": d, "cover_formula": formula}),
                );
            }
            emit(
                common.format.unwrap_or(Format::Text),
                text,
                json!({"lambda": lambda.0, "dim": dim_orbit(&ctx.rs, &lambda)?, "covers": rows}),
            )
        }
        Command::Braid {
            common,
            lambda,
            alpha,
            beta,
        } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let (a, b) = match (alpha, beta) {
                (Some(a), Some(b)) => (ctx.root(&a)?, ctx.root(&b)?),
                (None, None) => simple_pair(&ctx.rs)?,
                _ => {
                    return Err(
                        Error::Argument("give both --alpha and --beta, or neither".into()).into(),
                    )
                }
            };
            let rep = braid_check(&ctx.rs, &lambda, &a, &b)?;
            let mut text = String::new();
            writeln!(
                text,
                "pattern {} α={} β={}",
                rep.pattern, rep.root_pair.0, rep.root_pair.1
            )
            .unwrap();
            writeln!(text, "lhs {}", rep.lhs).unwrap();
            writeln!(text, "rhs {}", rep.rhs).unwrap();
            writeln!(text, "w(λ) {}", rep.w_lambda).unwrap();
            let bucket = match rep.bucket() {
                BraidBucket::Equal => "equal",
                BraidBucket::UnequalOnCriticalLine => "unequal-on-critical-line",
                BraidBucket::UnequalElsewhere => "unequal-elsewhere",
            };
            writeln!(text, "{bucket}").unwrap();
            emit(
                common.format.unwrap_or(Format::Text),
                text,
                serde_json::to_value(&rep).expect("json"),
            )
        }
        Command::BraidScan {
            common,
            radius,
            emit_table,
        } => {
            let ctx = Ctx::new(&common)?;
            let scan = braid_scan(&ctx.rs, radius)?;
            let mut text = String::new();
            let pattern = scan.pattern.expect("nonempty box");
            writeln!(
                text,
                "{} pattern, box [-{radius},{radius}]^2, {} points",
                pattern, scan.total
            )
            .unwrap();
            writeln!(text, "equal\t{}", scan.equal).unwrap();
            writeln!(
                text,
                "unequal-on-critical-line\t{}",
                scan.unequal_on_critical_line
            )
            .unwrap();
            writeln!(text, "unequal-elsewhere\t{}", scan.unequal_elsewhere.len()).unwrap();
            for mu in &scan.unequal_elsewhere {
                writeln!(text, "  {mu}").unwrap();
            }
            for (lines, n) in &scan.failures_by_lines {
                writeln!(text, "failures on {lines}\t{n}").unwrap();
            }
            let mut value = serde_json::to_value(&scan).expect("json");
            if emit_table {
                let rows = match table_for(pattern) {
                    Some(_) => check_table(&ctx.rs, radius)?,
                    None => Vec::new(),
                };
                writeln!(text, "\nrow\tconditions\tlhs\trhs\tpoints\tmismatches").unwrap();
                for r in &rows {
                    let rhs = if r.rhs.is_empty() { "=" } else { &r.rhs };
                    writeln!(
                        text,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.row,
                        r.conditions,
                        r.lhs,
                        rhs,
                        r.points,
                        r.mismatches.len()
                    )
                    .unwrap();
                }
                value["table"] = serde_json::to_value(&rows).expect("json");
            }
            emit(common.format.unwrap_or(Format::Text), text, value)
        }
        Command::Component { common, lambda } => {
            let ctx = Ctx::new(&common)?;
            let comps = match lambda {
                Some(l) => vec![component_of(&ctx.rs, &ctx.coweight(&l)?)?],
                None => all_components(&ctx.rs),
            };
            let text = comps
                .iter()
                .map(|c| format!("κ={}\tω̌={}\n", c.kappa, c.omega))
                .collect();
            emit(
                common.format.unwrap_or(Format::Text),
                text,
                serde_json::to_value(&comps).expect("json"),
            )
        }
        Command::Translate {
            common,
            kappa,
            lambda,
            psi,
        } => {
            let ctx = Ctx::new(&common)?;
            let comp = ComponentIndex::new(&ctx.rs, kappa)?;
            let lambda = ctx.coweight(&lambda)?;
            let image = comp.translate(&ctx.rs, &lambda)?;
            let mut text = format!("{image}\n");
            let mut value = json!({"kappa": kappa, "lambda": lambda.0, "image": image.0});
            if psi {
                let mapped: BTreeSet<Coweight> = psi_infinity(&ctx.rs, &lambda)?
                    .members
                    .iter()
                    .map(|m| comp.translate(&ctx.rs, m))
                    .collect::<Result<_, _>>()?;
                let target = psi_infinity(&ctx.rs, &image)?.members;
                writeln!(text, "image of Ψ equals Ψ of image: {}", mapped == target).unwrap();
                text.push_str(&lines(&mapped));
                value["psi_image"] = json!(coords(&mapped));
                value["bijective"] = json!(mapped == target);
            }
            emit(common.format.unwrap_or(Format::Text), text, value)
        }
        Command::Varpi { common, lambda } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let w = varpi(&ctx.rs, &lambda)?;
            emit(
                common.format.unwrap_or(Format::Text),
                format!("{w}\n"),
                w.to_json(),
            )
        }
        Command::Polytope {
            common,
            lambda,
            chamber,
        } => {
            let ctx = Ctx::new(&common)?;
            let lambda = ctx.coweight(&lambda)?;
            let mp = moment_polytope(&ctx.rs, &lambda)?;
            let gaps = match mp.facets() {
                Ok(_) => Some(gaps_of(&ctx.rs, &mp)?),
                Err(_) => None,
            };
            let mut value = mp.to_json(gaps.as_deref());
            let mut text = format!("dim {}\nvertices\n{}", mp.dim, lines(&mp.vertices));
            if let Some(h) = &mp.hull {
                text.push_str("facets\n");
                for f in h {
                    let n: Vec<String> = f.normal.iter().map(|x| x.to_string()).collect();
                    writeln!(text, "  ({}) · x <= {}", n.join(","), f.rhs).unwrap();
                }
            }
            if let Some(g) = &gaps {
                writeln!(text, "gaps {}", g.len()).unwrap();
                text.push_str(&lines(g));
            }
            if let Some(word) = chamber {
                let word: Vec<usize> = if word.trim().is_empty() {
                    Vec::new()
                } else {
                    word.split(',')
                        .map(|p| p.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| Error::Argument(format!("bad Weyl word {word:?}")))?
                };
                let y = ctx.rs.weyl_from_word(&word)?;
                let m = chamber_maxima(&ctx.rs, &lambda, &y)?;
                text.push_str("chamber maxima\n");
                text.push_str(&lines(&m));
                value["chamber_maxima"] = json!(coords(&m));
            }
            emit(common.format.unwrap_or(Format::Json), text, value)
        }
        Command::GapScan {
            common,
            lambda,
            radius,
        } => {
            let ctx = Ctx::new(&common)?;
            let lambdas = match lambda {
                Some(l) => vec![ctx.coweight(&l)?],
                None => coweight_box(ctx.rs.rank(), radius),
            };
            let mut text = String::new();
            let mut found = Vec::new();
            for l in &lambdas {
                let gaps = gaps_of(&ctx.rs, &moment_polytope(&ctx.rs, l)?)?;
                if !gaps.is_empty() {
                    writeln!(
                        text,
                        "{l}: {}",
                        gaps.iter()
                            .map(|g| format!("({g})"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                    .unwrap();
                    found.push(json!({"lambda": l.0, "gaps": gaps.iter().map(|g| g.0.clone()).collect::<Vec<_>>()}));
                }
            }
            writeln!(
                text,
                "{} of {} coweights have gaps",
                found.len(),
                lambdas.len()
            )
            .unwrap();
            emit(
                common.format.unwrap_or(Format::Text),
                text,
                json!({"scanned": lambdas.len(), "gaps": found}),
            )
        }
        Command::Selftest {
            radius,
            criterion,
            report,
            format,
        } => {
            if radius < 1 {
                return Err(Error::Argument("--box must be at least 1".into()).into());
            }
            let opts = Options::with_radius(radius);
            let (reports, explore) = match criterion {
                Some(i) => (vec![run_criterion(i, &opts)?], None),
                None => {
                    let (r, e) = run_all(&opts)?;
                    (r, Some(e))
                }
            };
            if let (Some(path), Some(e)) = (&report, &explore) {
                let body = serde_json::to_string_pretty(e).expect("json");
                std::fs::write(path, body + "\n")
                    .map_err(|err| Failure::Io(format!("{}: {err}", path.display())))?;
            }
            let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
            let out = emit(
                format.unwrap_or(Format::Text),
                text,
                json!({"options": opts, "criteria": reports}),
            );
            if reports.iter().any(|r| !r.passed) {
                print!("{out}");
                return Err(Failure::Counterexample);
            }
            out
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Library(e @ Error::Consistency(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Counterexample) => {
            eprintln!("selftest: at least one criterion failed");
            ExitCode::from(3)
        }
    }
}
