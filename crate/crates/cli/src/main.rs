//! `qslift`: liftings of projective schemes from the command line.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use qslift_core::chart::ChartFile;
use qslift_core::groebner::{buchberger, verify_lifting};
use qslift_core::lifting::{lifting_gs, lifting_ms, membership, sample_liftings, stratum_chart, LiftingChart, LiftingProblem};
use qslift_core::parse::{parse_hilbert_poly, parse_ideal};
use qslift_core::{Error, FieldPoly, MonomialIdeal, Ring};

#[derive(Parser)]
#[command(name = "qslift", version, about = "Liftings of projective schemes via Groebner strata and marked bases")]
struct Cli {
    /// Worker threads for per-chart parallelism (1 runs sequentially).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis and initial ideal.
    Gb(IdealArg),
    /// Hilbert function table and Hilbert polynomial.
    Hilbert {
        #[command(flatten)]
        ideal: IdealArg,
        /// Last degree of the table.
        #[arg(long, default_value_t = 6)]
        upto: i64,
    },
    /// Quasi-stability verdict with Pommaret basis or a violating generator.
    QsCheck(IdealArg),
    /// Quasi-stable monomial liftings of in(I').
    Enumerate(ProblemArgs),
    /// Groebner-stratum charts.
    LiftingGs(ChartArgs),
    /// Marked-basis charts.
    LiftingMs(ChartArgs),
    /// Decides whether I is a lifting of I'.
    Verify {
        #[command(flatten)]
        ideal: IdealArg,
        /// The ideal I' in one variable less.
        #[arg(long)]
        against: String,
    },
    /// Membership of I in a chart file written by lifting-gs or lifting-ms.
    Member {
        #[command(flatten)]
        ideal: IdealArg,
        /// Chart file in the JSON format of `lifting-gs --json`
        #[arg(long)]
        chart: std::path::PathBuf,
        /// Index of the chart in the file; all charts when absent.
        #[arg(long)]
        index: Option<usize>,
    },
}

#[derive(Args)]
struct IdealArg {
    /// Comma-separated generators, or `-` for stdin.
    ideal: String,
    /// Number of variables; inferred from the largest index otherwise.
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args)]
struct ProblemArgs {
    /// Generators of the saturated ideal I', or `-` for stdin.
    iprime: String,
    /// Hilbert polynomial p of the liftings, e.g. `t^2+4t+1`.
    #[arg(long)]
    hp: String,
    /// Number of variables of I'; by default the least one where HP(I') = p(t) - p(t-1).
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args)]
struct ChartArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Sample liftings in every chart and verify them.
    #[arg(long)]
    self_check: bool,
    /// Seed for --self-check.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples per chart for --self-check.
    #[arg(long, default_value_t = 3)]
    samples: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        qslift_core::par::set_parallel(n > 1);
        #[cfg(feature = "parallel")]
        if n > 1 {
            // a second initialization only fails when a pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_text(arg: &str) -> Result<String, Error> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Error::Precondition(format!("reading stdin: {}", e)))?;
    Ok(s)
}

fn read_ideal(arg: &IdealArg) -> Result<(Ring, Vec<FieldPoly>), Error> {
    let (ring, gens) = parse_ideal(&read_text(&arg.ideal)?, arg.vars)?;
    if gens.is_empty() {
        eprintln!("warning: empty generator list, using the zero ideal");
    }
    Ok((ring, gens))
}

fn read_problem(args: &ProblemArgs) -> Result<LiftingProblem, Error> {
    let hp = parse_hilbert_poly(&args.hp)?;
    let (ring, gens) = parse_ideal(&read_text(&args.iprime)?, args.vars)?;
    let n = match args.vars {
        Some(n) => n,
        None => section_vars(&ring, &gens, &hp)?,
    };
    LiftingProblem::new(Ring::new(n + 1), &gens, hp)
}

/// Least number of variables, from the one implied by the generators, in
/// which `I'` has Hilbert polynomial `p(t) - p(t-1)`.
fn section_vars(ring: &Ring, gens: &[FieldPoly], hp: &qslift_core::HilbertPoly) -> Result<usize, Error> {
    let target = hp.delta();
    let first = ring.nvars().max(1);
    for n in first..first + 8 {
        if buchberger(&Ring::new(n), gens)?.hilbert_polynomial() == target {
            return Ok(n);
        }
    }
    Err(Error::NotAdmissible(format!(
        "no ring with at least {} variables gives I' the Hilbert polynomial {}; pass --vars",
        first, target
    )))
}

fn strings(ring: &Ring, polys: &[FieldPoly]) -> Vec<String> {
    polys.iter().map(|p| p.to_string_with(ring.names(), &[])).collect()
}

fn monomial_strings(ring: &Ring, j: &MonomialIdeal) -> Vec<String> {
    j.gens().iter().map(|m| m.display_with(ring.names()).to_string()).collect()
}

fn emit(cli: &Cli, value: Value, text: String) {
    let out = if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("json values serialize"))
    } else {
        text
    };
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    let _ = std::io::Write::write_all(&mut std::io::stdout().lock(), out.as_bytes());
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Gb(arg) => {
            let (ring, gens) = read_ideal(arg)?;
            let gb = buchberger(&ring, &gens)?;
            let basis = strings(&ring, gb.polys());
            let initial = monomial_strings(&ring, &gb.initial_ideal());
            let text = format!("basis: {}\ninitial: ({})\n", basis.join(", "), initial.join(", "));
            emit(cli, json!({"vars": ring.names(), "basis": basis, "initial": initial}), text);
        }
        Command::Hilbert { ideal, upto } => {
            let (ring, gens) = read_ideal(ideal)?;
            let gb = buchberger(&ring, &gens)?;
            let table: Vec<i64> = (0..=*upto).map(|t| gb.hilbert_function(t)).collect();
            let hp = gb.hilbert_polynomial();
            let mut text = String::new();
            for (t, h) in table.iter().enumerate() {
                text.push_str(&format!("h({}) = {}\n", t, h));
            }
            text.push_str(&format!("HP = {}\n", hp));
            emit(cli, json!({"vars": ring.names(), "hf": table, "hp": hp.to_string()}), text);
        }
        Command::QsCheck(arg) => {
            let (ring, gens) = read_ideal(arg)?;
            let mut terms = Vec::with_capacity(gens.len());
            for g in &gens {
                match g.terms() {
                    [(m, _)] => terms.push(m.clone()),
                    _ => {
                        return Err(Error::Precondition(format!(
                            "{} is not a term",
                            g.to_string_with(ring.names(), &[])
                        )))
                    }
                }
            }
            let j = MonomialIdeal::new(ring.nvars(), terms);
            let names = ring.names();
            match j.quasi_stability_witness() {
                None => {
                    let basis: Vec<String> = j
                        .pommaret_basis()?
                        .iter()
                        .map(|m| m.display_with(names).to_string())
                        .collect();
                    let text = format!("quasi-stable: true\npommaret basis: {}\n", basis.join(", "));
                    emit(cli, json!({"quasi_stable": true, "pommaret": basis}), text);
                }
                Some((g, v)) => {
                    let g = g.display_with(names).to_string();
                    let text = format!(
                        "quasi-stable: false\nwitness: no power of {} times {}/min({}) lies in the ideal\n",
                        names[v], g, g
                    );
                    emit(
                        cli,
                        json!({"quasi_stable": false, "witness": {"generator": g, "var": names[v]}}),
                        text,
                    );
                }
            }
        }
        Command::Enumerate(args) => {
            let problem = read_problem(args)?;
            let e = problem.enumerate()?;
            let ring = problem.ring();
            let liftings: Vec<Vec<String>> = e.liftings.iter().map(|j| monomial_strings(ring, j)).collect();
            let mut text = format!(
                "pool: {} saturated quasi-stable ideals (Gotzmann number {})\nliftings: {}\n",
                e.pool.len(),
                e.gotzmann,
                e.liftings.len()
            );
            for l in &liftings {
                text.push_str(&format!("  ({})\n", l.join(", ")));
            }
            emit(
                cli,
                json!({"vars": ring.names(), "pool": e.pool.len(), "gotzmann": e.gotzmann, "liftings": liftings}),
                text,
            );
        }
        Command::LiftingGs(args) | Command::LiftingMs(args) => {
            let marked = matches!(cli.command, Command::LiftingMs(_));
            let problem = read_problem(&args.problem)?;
            let charts = if marked { lifting_ms(&problem)? } else { lifting_gs(&problem)? };
            let file = ChartFile::new(&problem, &charts);
            if cli.json {
                let _ = std::io::Write::write_all(&mut std::io::stdout().lock(), format!("{}\n", file.to_json()).as_bytes());
            } else {
                print!("{}", charts_text(&file));
            }
            if args.self_check {
                self_check(&problem, &charts, args.seed, args.samples)?;
            }
        }
        Command::Verify { ideal, against } => {
            let (ring, gens) = read_ideal(ideal)?;
            let n = ring.nvars();
            if n < 2 {
                return Err(Error::Precondition("I needs at least two variables".into()));
            }
            let (_, iprime) = parse_ideal(&read_text(against)?, Some(n - 1))?;
            let r = verify_lifting(n, &gens, &iprime)?;
            let mut text = format!("lifting: {}\n", r.is_lifting);
            text.push_str(&format!("  I : x{} = I: {}\n", n - 1, r.saturated_and_generic));
            text.push_str(&format!("  section saturates to I': {}\n", r.section_saturates_to_iprime));
            if !r.is_xn_lifting {
                text.push_str(&format!("  note: not an x{}-lifting\n", n - 1));
            }
            text.push_str(&format!(
                "  HP(I) = {}, HP(I') = {}, delta HP(I) = HP(I'): {}\n",
                r.hp_i, r.hp_iprime, r.delta_ok
            ));
            emit(
                cli,
                json!({
                    "lifting": r.is_lifting,
                    "saturated_and_generic": r.saturated_and_generic,
                    "section_saturates_to_iprime": r.section_saturates_to_iprime,
                    "xn_lifting": r.is_xn_lifting,
                    "hp_i": r.hp_i.to_string(),
                    "hp_iprime": r.hp_iprime.to_string(),
                    "delta_ok": r.delta_ok,
                }),
                text,
            );
        }
        Command::Member { ideal, chart, index } => {
            let raw = std::fs::read_to_string(chart)
                .map_err(|e| Error::Precondition(format!("reading {}: {}", chart.display(), e)))?;
            let file = ChartFile::from_json(&raw)?;
            let ring = file.ring();
            let (_, gens) = parse_ideal(&read_text(&ideal.ideal)?, Some(ring.nvars()))?;
            let charts = file.charts()?;
            let picked: Vec<(usize, &LiftingChart)> = match index {
                Some(k) => vec![(*k, charts.get(*k).ok_or_else(|| Error::Precondition(format!("no chart {}", k)))?)],
                None => charts.iter().enumerate().collect(),
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for (k, c) in picked {
                let m = membership(&gens, c)?;
                let point: Option<Vec<String>> = m.point.as_ref().map(|p| p.iter().map(|x| x.to_string()).collect());
                text.push_str(&format!(
                    "chart {} ({}): member {} ({})\n",
                    k,
                    monomial_strings(&ring, &c.j).join(", "),
                    m.member,
                    m.reason
                ));
                if let (true, Some(p)) = (m.member, &point) {
                    let names = c.family.alphabet().names();
                    for (name, v) in names.iter().zip(p) {
                        if v != "0" {
                            text.push_str(&format!("  {} = {}\n", name, v));
                        }
                    }
                }
                rows.push(json!({"chart": k, "member": m.member, "reason": m.reason, "point": point}));
            }
            emit(cli, json!({"results": rows}), text);
        }
    }
    Ok(())
}

fn charts_text(file: &ChartFile) -> String {
    let mut out = format!("{} chart(s)\n", file.charts.len());
    for (k, c) in file.charts.iter().enumerate() {
        out.push_str(&format!("chart {}: J = ({})", k, c.j.join(", ")));
        if let Some(m) = c.m {
            out.push_str(&format!(", m = {}", m));
        }
        out.push('\n');
        out.push_str("  family:\n");
        for f in &c.family {
            let tail: Vec<String> = f
                .tail
                .iter()
                .map(|t| format!("({})*{}", t.coeff_poly, t.term))
                .collect();
            if tail.is_empty() {
                out.push_str(&format!("    {}\n", f.head));
            } else {
                out.push_str(&format!("    {} + {}\n", f.head, tail.join(" + ")));
            }
        }
        out.push_str(&format!("  constraints: {}\n", c.constraints.len()));
        for (g, tag) in c.constraints.iter().zip(&c.provenance) {
            out.push_str(&format!("    {}    [{}]\n", g, tag));
        }
    }
    out
}

/// Samples liftings in every stratum, verifies them, and checks that each
/// chart contains the samples of its monomial ideal.
fn self_check(problem: &LiftingProblem, charts: &[LiftingChart], seed: u64, samples: usize) -> Result<(), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = problem.ring().nvars();
    let iprime = problem.iprime().polys().to_vec();
    let mut failures = 0;
    for c in charts {
        let source = if c.is_marked() { stratum_chart(problem, &c.j)? } else { c.clone() };
        let lifts = sample_liftings(&source, &mut rng, samples, 4 * samples)?;
        let mut ok = 0;
        for gens in &lifts {
            let m = membership(gens, c)?;
            let good = match (m.member, m.point) {
                (true, Some(p)) => verify_lifting(n, c.lifting_at(&p)?.polys(), &iprime)?.is_lifting,
                _ => false,
            };
            if good {
                ok += 1;
            } else {
                failures += 1;
            }
        }
        eprintln!(
            "self-check {}: {}/{} sampled liftings verified",
            c.j,
            ok,
            lifts.len()
        );
    }
    if failures > 0 {
        return Err(Error::Precondition(format!("self-check: {} sample(s) failed", failures)));
    }
    Ok(())
}
