mod budget;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tmarkov::braid::{read_braid, write_braid, BraidWord};
use tmarkov::contact::{
    closure_indices, compare_closure, front_mu, front_tb, l_pq, parse_front, transversalize, Sign,
};
use tmarkov::garside::{conj_key, equal, normal_form, GarsideError};
use tmarkov::geometry::{
    bad_zones_with_tol, check_geometric_braid, check_transversal, local_model, model_grid,
    parse_curve, verify_model_identity, write_curve, SampledCurve, DEFAULT_TOLERANCE,
};
use tmarkov::moves::{
    apply_move_in, parse_certificate, write_certificate, Mode, Move, MoveCertificate,
};
use tmarkov::search::{alexander_poly, reduce_to_standard_unknot, search, SearchOutcome};
use tmarkov::Curve;

use budget::BudgetArgs;

#[derive(Parser)]
#[command(name = "tmarkov", version, about = "Braid calculus for transversal links")]
struct Cli {
    /// Seed recorded with search reports. The search itself is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form of a braid.
    Normalize { braid: PathBuf },
    /// Degree, self-linking, components and related invariants.
    Invariants { braid: PathBuf },
    /// Whether two braids are equal in B_n.
    Equal { a: PathBuf, b: PathBuf },
    /// Canonical conjugacy key.
    Conjkey {
        braid: PathBuf,
        #[arg(long, default_value_t = 5000)]
        sweep: usize,
    },
    /// Applies moves given as certificate step lines, e.g. "conj -2", "stab+".
    MovesApply {
        braid: PathBuf,
        #[arg(long = "move", value_name = "STEP", required = true)]
        moves: Vec<String>,
        #[arg(long, default_value = "transversal")]
        mode: Mode,
    },
    /// Replays a certificate.
    CertVerify { certificate: PathBuf },
    /// Searches for a certificate from A to B.
    Search {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "transversal")]
        mode: Mode,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Also write the certificate here on success.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Searches toward the standard unknot with the same self-linking.
    ReduceUnknot {
        braid: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Indices of the Legendrian unknot L_{p,q}.
    Lpq { p: u32, q: u32 },
    /// Indices of the closure of a positive braid along L_{p,q}.
    ClosureIndices { p: u32, q: u32, braid: PathBuf },
    /// tb and μ of a front diagram.
    Front { front: PathBuf },
    /// Transversality, geometric-braid and bad-zone checks on a curve file.
    GeomCheck {
        curve: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Samples the local model arc, or checks its identity on a grid.
    GeomModel {
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        tau: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        z0: f64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Print the identity error on a points×points grid instead.
        #[arg(long, value_name = "POINTS")]
        identity: Option<usize>,
        #[arg(long, default_value_t = 2.0)]
        extent: f64,
    },
}

/// Result of a command that ran to completion.
enum Verdict {
    True,
    False,
}

type CmdResult = Result<Verdict, String>;

fn read_text(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn braid(path: &Path) -> Result<BraidWord, String> {
    read_braid(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses one certificate step line against the current braid `at`.
fn parse_step(line: &str, at: &BraidWord, mode: Mode) -> Result<Move, String> {
    let text = format!("mode {}\nstart n={} : {at}\n{line}\nend n=1 :\n", mode.name(), at.strands());
    let cert = parse_certificate(&text).map_err(|e| format!("move `{line}`: {e}"))?;
    cert.steps.into_iter().next().ok_or_else(|| format!("move `{line}`: not a step"))
}

fn report_search(outcome: SearchOutcome, seed: u64, output: Option<&Path>) -> CmdResult {
    println!("status {}", outcome.status());
    println!("seed {seed}");
    match outcome {
        SearchOutcome::Found(cert) => {
            println!("markov_moves {}", cert.markov_moves());
            let text = write_certificate(&cert);
            print!("{text}");
            if let Some(p) = output {
                write_file(p, &text)?;
            }
            Ok(Verdict::True)
        }
        SearchOutcome::NotFoundWithinBudget { nodes } => {
            println!("nodes_tried {nodes}");
            Ok(Verdict::False)
        }
        SearchOutcome::PrunedInvariant(reason) => {
            println!("reason {reason}");
            Ok(Verdict::False)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Normalize { braid: path } => {
            let b = braid(&path)?;
            let nf = normal_form(&b);
            println!("{nf}");
            print!("{}", write_braid(&nf.to_word()));
            Ok(Verdict::True)
        }
        Command::Invariants { braid: path } => {
            let b = braid(&path)?;
            println!(
                "n={} deg={} sl={} components={}",
                b.strands(),
                b.degree(),
                b.self_linking(),
                b.components()
            );
            println!("euler={}", b.bennequin_surface_euler());
            let tbs: Vec<String> = b.component_tb_decomposition().iter().map(i64::to_string).collect();
            println!("component_sl={}", tbs.join(","));
            let lk = b.linking_matrix();
            for i in 0..lk.size() {
                let row: Vec<String> = (0..lk.size()).map(|j| lk.get(i, j).to_string()).collect();
                println!("lk[{i}]={}", row.join(","));
            }
            println!("alexander={}", alexander_poly(&b));
            Ok(Verdict::True)
        }
        Command::Equal { a, b } => {
            let (a, b) = (braid(&a)?, braid(&b)?);
            let same = equal(&a, &b).map_err(|e| e.to_string())?;
            println!("{same}");
            Ok(if same { Verdict::True } else { Verdict::False })
        }
        Command::Conjkey { braid: path, sweep } => {
            let b = braid(&path)?;
            match conj_key(&b, sweep) {
                Ok(key) => {
                    println!("{}", key.normal_form());
                    println!("conjugator {}", key.conjugator());
                    Ok(Verdict::True)
                }
                Err(e @ GarsideError::SweepBudgetExceeded { .. }) => Err(e.to_string()),
                Err(e) => Err(e.to_string()),
            }
        }
        Command::MovesApply { braid: path, moves, mode } => {
            let mut cur = braid(&path)?;
            for (k, line) in moves.iter().enumerate() {
                let m = parse_step(line, &cur, mode)?;
                match apply_move_in(&cur, &m, mode) {
                    Ok(next) => cur = next,
                    Err(e) => {
                        println!("illegal move {k} ({m}): {e}");
                        return Ok(Verdict::False);
                    }
                }
            }
            print!("{}", write_braid(&cur));
            Ok(Verdict::True)
        }
        Command::CertVerify { certificate } => {
            let text = read_text(&certificate)?;
            let cert: MoveCertificate =
                parse_certificate(&text).map_err(|e| format!("{}: {e}", certificate.display()))?;
            match cert.verify() {
                Ok(_) => {
                    println!("valid ({} steps, {} Markov moves)", cert.steps.len(), cert.markov_moves());
                    Ok(Verdict::True)
                }
                Err(e) => {
                    println!("invalid: {e}");
                    Ok(Verdict::False)
                }
            }
        }
        Command::Search { a, b, mode, budget, output } => {
            let (a, b) = (braid(&a)?, braid(&b)?);
            let budget = budget.resolve()?;
            let outcome = search(&a, &b, &budget, mode).map_err(|e| e.to_string())?;
            report_search(outcome, cli.seed, output.as_deref())
        }
        Command::ReduceUnknot { braid: path, budget, output } => {
            let b = braid(&path)?;
            let budget = budget.resolve()?;
            let outcome = reduce_to_standard_unknot(&b, &budget).map_err(|e| e.to_string())?;
            report_search(outcome, cli.seed, output.as_deref())
        }
        Command::Lpq { p, q } => {
            let l = l_pq(p, q);
            println!("{l}");
            println!(
                "sl+={} sl-={}",
                transversalize(&l, Sign::Plus),
                transversalize(&l, Sign::Minus)
            );
            Ok(Verdict::True)
        }
        Command::ClosureIndices { p, q, braid: path } => {
            let b = braid(&path)?;
            let spec = closure_indices(&l_pq(p, q), &b).map_err(|e| e.to_string())?;
            println!("{spec}");
            let cmp = compare_closure(p, q, &b).map_err(|e| e.to_string())?;
            println!("comparison {cmp}");
            Ok(Verdict::True)
        }
        Command::Front { front } => {
            let f = parse_front(&read_text(&front)?).map_err(|e| format!("{}: {e}", front.display()))?;
            print!("tb={}", front_tb(&f));
            match front_mu(&f) {
                Ok(mu) => println!(" mu={mu}"),
                Err(e) => println!(" mu=undefined ({e})"),
            }
            Ok(Verdict::True)
        }
        Command::GeomCheck { curve, tol } => {
            let c: Curve = parse_curve(&read_text(&curve)?).map_err(|e| format!("{}: {e}", curve.display()))?;
            let t = check_transversal(&c, tol).map_err(|e| e.to_string())?;
            println!("transversal {}", t.transversal);
            if let Some((k, i, m)) = t.worst {
                println!("min_margin {m:e} at component {k} sample {i}");
            }
            let braid_ok = match check_geometric_braid(&c, tol) {
                Ok(r) => {
                    let degree = r.degree.map_or("undefined".to_string(), |d| d.to_string());
                    println!("geometric_braid {} degree {degree}", r.is_braid);
                    r.is_braid
                }
                Err(e) => {
                    println!("geometric_braid false ({e})");
                    false
                }
            };
            let zones = bad_zones_with_tol(&c, tol);
            println!("bad_zones {}", zones.len());
            for (k, comp) in zones.components.iter().enumerate() {
                for z in comp {
                    let (s0, s1) = z.parameter_interval(c.components[k].len());
                    println!(
                        "zone component {k} s=[{s0:.6}, {s1:.6}] increment {:.6} {}",
                        z.increment,
                        if z.simple { "simple" } else { "non-simple" }
                    );
                }
            }
            Ok(if t.transversal && braid_ok { Verdict::True } else { Verdict::False })
        }
        Command::GeomModel { tau, z0, samples, identity, extent } => {
            if let Some(points) = identity {
                let err = verify_model_identity(&model_grid(points, extent));
                println!("max_error {err:e}");
                return Ok(if err < 1e-9 { Verdict::True } else { Verdict::False });
            }
            let arc = local_model(tau, z0, samples).map_err(|e| e.to_string())?;
            print!("{}", write_curve(&SampledCurve::new(vec![arc])));
            Ok(Verdict::True)
        }
    }
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
    match run(cli) {
        Ok(Verdict::True) => ExitCode::SUCCESS,
        Ok(Verdict::False) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
