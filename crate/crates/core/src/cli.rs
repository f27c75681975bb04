//! The `blocklab` command line: argument parsing, dispatch, and the JSON
//! run report.
//!
//! Every subcommand prints one [`RunReport`] as JSON (to stdout, or to the
//! file named by `--report`) and a one-line summary on stderr. Exit codes:
//! 0 all checks passed, 1 a check failed or an expected witness is absent,
//! 2 usage or input error, 3 search budget exhausted.
//!
//! Structured arguments take inline JSON, `@path.json`, or for block
//! sequences the shorthand `units:a..b` for `(e_a, …, e_{b-1})`.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Field, Vector};
use crate::blockseq::BlockSeq;
use crate::error::{Budget, Error, Result, DEFAULT_STATE_CAP};
use crate::filters::{
    coarsen_intervals, density_probe, qpoint_check, spread_from_tail_diag, FilterBase,
    FinitePartition, IntervalSeq,
};
use crate::fin::{hindman_search, milliken_search, Coloring};
use crate::games::{named_strategy, outcome_of, play, replay, GameKind, Side, Transcript};
use crate::oscillation::{meets_every_block_subspace, osc_range, VectorPredicate};
use crate::sample;
use crate::verify::{self, Settings, Suite};
use crate::wire;

#[derive(Parser, Debug)]
#[command(
    name = "blocklab",
    version,
    about = "Finite-scale block sequence, FIN and filter-game experiments"
)]
struct Cli {
    /// Scalar field: gf<p>, q or q<height>
    #[arg(long, global = true)]
    field: Option<String>,
    /// Truncation: supports live in [0, trunc)
    #[arg(long, global = true, default_value_t = 6)]
    trunc: usize,
    /// Cap on states visited by exhaustive searches
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_CAP)]
    budget: u64,
    /// Where to write the JSON report; `-` is stdout
    #[arg(long, global = true, default_value = "-")]
    report: String,
    /// Seed for randomised suites and strategies
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run self-check suites
    Verify {
        /// algebra, blockseq, fin, oscillation, games, filters or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// First block sequence in FIN whose finite unions are monochromatic
    Hindman(SearchArgs),
    /// Like hindman, for colorings of block k-tuples
    Milliken {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = 2)]
        arity: usize,
    },
    /// Oscillation values attained on the span of a block sequence
    OscRange {
        /// Block sequence (default units:0..trunc)
        #[arg(long)]
        x: Option<String>,
    },
    /// Whether a vector set meets every length-d block subspace below X
    AsymptoticProbe {
        /// osc-even, osc-odd, all, none, or a JSON list of vectors
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Play or replay games
    Game {
        #[command(subcommand)]
        action: GameAction,
    },
    /// Build a spread witness for an interval sequence
    Spread {
        /// Interval sequence as JSON pairs, e.g. [[0,0],[1,2]]
        #[arg(long)]
        intervals: String,
        #[arg(long)]
        x: Option<String>,
        /// Filter base (default: the single generator X)
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 2)]
        rounds: usize,
    },
    /// Interval coarsening of a partition and q-point checks
    Qpoint {
        /// Partition JSON {"n":..,"cells":[..]}, or just the list of cells
        #[arg(long)]
        partition: String,
        /// Optional set to test, e.g. 0,3,5
        #[arg(long)]
        set: Option<String>,
    },
    /// Least length-d block sequence inside a vector set below each generator
    Density {
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// const, min-parity, card-parity, adjacency, or a JSON color table
    #[arg(long)]
    coloring: String,
    /// Universe bound N: sets live in [0, N)
    #[arg(long)]
    universe: usize,
    #[arg(long)]
    length: usize,
}

#[derive(Subcommand, Debug)]
enum GameAction {
    /// Play one round between two named strategies
    Play {
        /// asymptotic, gowers or restricted
        #[arg(long)]
        kind: String,
        #[arg(long)]
        ambient: Option<String>,
        /// Filter base, required for the restricted game
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 3)]
        rounds: usize,
        /// Strategy for I: const:<n>, tail, random or random:<seed>
        #[arg(long, default_value = "const:0")]
        s1: String,
        /// Strategy for II: canonical, random or random:<seed>
        #[arg(long, default_value = "canonical")]
        s2: String,
    },
    /// Re-validate a transcript (or a report containing one)
    Replay { file: String },
}

/// The machine-readable result of one invocation.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub cases_run: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Value>,
    pub wall_time_ms: u64,
    pub result: Value,
}

/// What a subcommand produced before timing and serialisation.
struct Outcome {
    cases: Vec<(bool, Option<Value>)>,
    result: Value,
    summary: String,
}

impl Outcome {
    fn single(
        ok: bool,
        counterexample: impl FnOnce() -> Value,
        result: Value,
        summary: String,
    ) -> Outcome {
        Outcome {
            cases: vec![(ok, (!ok).then(counterexample))],
            result,
            summary,
        }
    }
}

struct Ctx {
    field: Field,
    field_given: bool,
    trunc: usize,
    budget: Budget,
    seed: u64,
}

impl Ctx {
    fn check_field(&self, f: Field) -> Result<()> {
        if self.field_given && f != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: f.to_string(),
            });
        }
        Ok(())
    }
}

/// Reads an inline JSON value or `@file`.
fn load(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn parse_units(ctx: &Ctx, s: &str) -> Result<Option<BlockSeq>> {
    let Some(range) = s.strip_prefix("units:") else {
        return Ok(None);
    };
    let bad = || Error::Parse(format!("expected units:a..b, got {s:?}"));
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok(Some(BlockSeq::unit(ctx.field, a..b)))
}

fn block_seq_arg(ctx: &Ctx, arg: Option<&str>) -> Result<BlockSeq> {
    let Some(arg) = arg else {
        return Ok(BlockSeq::unit(ctx.field, 0..ctx.trunc));
    };
    if let Some(x) = parse_units(ctx, arg)? {
        return Ok(x);
    }
    let x: BlockSeq = wire::from_json(&load(arg)?)?;
    ctx.check_field(x.field())?;
    Ok(x)
}

fn base_arg(ctx: &Ctx, arg: Option<&str>, x: &BlockSeq) -> Result<FilterBase> {
    let single = |x: &BlockSeq| {
        FilterBase::new(
            x.field(),
            ctx.trunc.max(x.max_support().map_or(0, |m| m + 1)),
            vec![x.clone()],
            1,
        )
    };
    let Some(arg) = arg else {
        return single(x);
    };
    if let Some(g) = parse_units(ctx, arg)? {
        return single(&g);
    }
    // a full base, or a single block sequence as its only generator
    let text = load(arg)?;
    let b = match wire::from_json::<FilterBase>(&text) {
        Ok(b) => b,
        Err(e) => match wire::from_json::<BlockSeq>(&text) {
            Ok(g) => single(&g)?,
            Err(_) => return Err(e),
        },
    };
    ctx.check_field(b.field())?;
    Ok(b)
}

fn predicate_arg(arg: &str) -> Result<VectorPredicate> {
    if let Ok(p) = VectorPredicate::named(arg) {
        return Ok(p);
    }
    let vs: Vec<Vector> = wire::from_json(&load(arg)?)?;
    Ok(VectorPredicate::extensional("extensional", vs))
}

fn coloring_arg(arg: &str, bound: usize, arity: usize) -> Result<Coloring> {
    match Coloring::named(arg, bound, arity) {
        Err(Error::Parse(_)) => {
            let v: Value =
                serde_json::from_str(&load(arg)?).map_err(|e| Error::Parse(e.to_string()))?;
            Coloring::from_json(bound, arity, &v)
        }
        other => other,
    }
}

fn witness_json(w: &Option<(crate::fin::FinBlockSeq, u32)>) -> Value {
    match w {
        Some((a, c)) => json!({ "witness": a, "color": c }),
        None => json!({ "witness": null }),
    }
}

fn search(ctx: &Ctx, a: &SearchArgs, arity: Option<usize>) -> Result<Outcome> {
    let c = coloring_arg(&a.coloring, a.universe, arity.unwrap_or(1))?;
    let found = match arity {
        None => hindman_search(&c, a.length, &ctx.budget)?,
        Some(_) => milliken_search(&c, a.length, &ctx.budget)?,
    };
    let summary = match &found {
        Some((w, col)) => format!("witness {w} with color {col}"),
        None => format!("no witness of length {} in [0,{})", a.length, a.universe),
    };
    let result = witness_json(&found);
    Ok(Outcome::single(
        found.is_some(),
        || json!({ "absent": { "universe": a.universe, "length": a.length } }),
        result,
        summary,
    ))
}

fn game_play(
    ctx: &Ctx,
    kind: &str,
    ambient: Option<&str>,
    base: Option<&str>,
    rounds: usize,
    s1: &str,
    s2: &str,
) -> Result<Outcome> {
    let kind = GameKind::parse(kind)?;
    let x = block_seq_arg(ctx, ambient)?;
    let base = match (kind, base) {
        (GameKind::Restricted, b) => Some(base_arg(ctx, b, &x)?),
        _ => None,
    };
    let start = Transcript::new(kind, x, base)?;
    // a bare `random` draws its seed from --seed, per side
    let seeded = |spec: &str, side: u64| match spec {
        "random" => format!("random:{}", sample::derive_seed(ctx.seed, side)),
        _ => spec.to_string(),
    };
    let (p1, p2) = (
        named_strategy(&seeded(s1, 1), Side::I)?,
        named_strategy(&seeded(s2, 2), Side::II)?,
    );
    let t = play(&start, p1.as_ref(), p2.as_ref(), rounds)?;
    let illegal = replay(&t);
    let outcome = outcome_of(&t);
    let summary = format!("{} innings, outcome {outcome}", t.inning());
    let result = json!({ "transcript": t, "outcome": outcome });
    Ok(Outcome::single(
        illegal.is_none(),
        || json!({ "illegal": format!("{illegal:?}") }),
        result,
        summary,
    ))
}

fn game_replay(file: &str) -> Result<Outcome> {
    let text = load(&format!("@{file}"))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    // a bare transcript, or a report whose result carries one
    let tv = v
        .get("result")
        .and_then(|r| r.get("transcript"))
        .cloned()
        .unwrap_or(v);
    let t: Transcript = serde_json::from_value(tv).map_err(|e| Error::Parse(e.to_string()))?;
    let bad = replay(&t);
    let summary = match &bad {
        None => format!("{} moves, all legal", t.moves().len()),
        Some(b) => format!(
            "move {} (inning {}, {}) is illegal: {}",
            b.index, b.inning, b.side, b.reason
        ),
    };
    let cx = bad.as_ref().map(|b| json!({ "index": b.index, "inning": b.inning, "side": b.side.to_string(), "reason": b.reason }));
    let outcome = bad.is_none().then(|| outcome_of(&t));
    let result = json!({ "legal": bad.is_none(), "first_illegal": cx, "outcome": outcome });
    Ok(Outcome::single(
        bad.is_none(),
        || cx.clone().expect("failure has a move"),
        result,
        summary,
    ))
}

fn set_arg(s: &str) -> Result<BTreeSet<usize>> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    if s.trim().is_empty() {
        return Ok(BTreeSet::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad set element {p:?}")))
        })
        .collect()
}

fn qpoint(partition: &str, set: Option<&str>) -> Result<Outcome> {
    let text = load(partition)?;
    // a bare list of cells covers [0, max + 1)
    let p: FinitePartition = match serde_json::from_str::<Vec<Vec<usize>>>(&text) {
        Ok(cells) => {
            let n = cells.iter().flatten().max().map_or(0, |m| m + 1);
            FinitePartition::new(n, cells)?
        }
        Err(_) => wire::from_json(&text)?,
    };
    let j = coarsen_intervals(&p);
    let mut cases = Vec::new();
    let bad = verify::coarsen_holds(&p);
    cases.push((
        bad.is_none(),
        bad.as_ref()
            .map(|x| json!({ "separated_but_not_selector": x })),
    ));
    let mut result = json!({ "intervals": j });
    if let Some(s) = set {
        let x = set_arg(s)?;
        if let Some(&m) = x.iter().find(|&&m| m >= p.n()) {
            return Err(Error::Precondition(format!(
                "{m} lies outside [0,{})",
                p.n()
            )));
        }
        let hit = qpoint_check(&x, &p);
        result["set"] = json!(x);
        result["violating_cell"] = json!(hit);
        cases.push((hit.is_none(), hit.map(|m| json!({ "cell": m, "set": x }))));
    }
    let summary = format!("{} coarsened intervals", j.len());
    Ok(Outcome {
        cases,
        result,
        summary,
    })
}

fn run_command(ctx: &Ctx, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Verify { suite } => {
            let suites = Suite::parse_list(suite)?;
            let settings = Settings {
                field: ctx.field,
                truncation: ctx.trunc,
                seed: ctx.seed,
            };
            let reports = verify::run(&suites, &settings, &ctx.budget)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let result = json!(reports
                .iter()
                .map(|r| json!({ "suite": r.suite.name(), "case": r.name, "checks": r.checks, "passed": r.passed() }))
                .collect::<Vec<_>>());
            let summary = format!("{} cases, {failed} failed", reports.len());
            let cases = reports
                .into_iter()
                .map(|r| {
                    let ok = r.passed();
                    let cx = r.counterexample.map(
                        |c| json!({ "suite": r.suite.name(), "case": r.name, "counterexample": c }),
                    );
                    (ok, cx)
                })
                .collect();
            Ok(Outcome {
                cases,
                result,
                summary,
            })
        }
        Command::Hindman(a) => search(ctx, a, None),
        Command::Milliken { search: a, arity } => search(ctx, a, Some(*arity)),
        Command::OscRange { x } => {
            let x = block_seq_arg(ctx, x.as_deref())?;
            let r = osc_range(&x, &ctx.budget)?;
            let summary = format!("osc range {r:?}");
            Ok(Outcome {
                cases: vec![(true, None)],
                result: json!({ "X": x, "range": r }),
                summary,
            })
        }
        Command::AsymptoticProbe {
            predicate,
            x,
            depth,
        } => {
            let p = predicate_arg(predicate)?;
            let x = block_seq_arg(ctx, x.as_deref())?;
            let z = meets_every_block_subspace(&p, &x, *depth, &ctx.budget)?;
            let summary = match &z {
                None => format!(
                    "{} meets every length-{depth} block subspace below X",
                    p.name()
                ),
                Some(z) => format!("{z} spans a subspace avoiding {}", p.name()),
            };
            let result = json!({ "predicate": p.name(), "avoiding": z });
            Ok(Outcome::single(
                z.is_none(),
                || json!({ "avoiding": z }),
                result,
                summary,
            ))
        }
        Command::Game {
            action:
                GameAction::Play {
                    kind,
                    ambient,
                    base,
                    rounds,
                    s1,
                    s2,
                },
        } => game_play(
            ctx,
            kind,
            ambient.as_deref(),
            base.as_deref(),
            *rounds,
            s1,
            s2,
        ),
        Command::Game {
            action: GameAction::Replay { file },
        } => game_replay(file),
        Command::Spread {
            intervals,
            x,
            base,
            rounds,
        } => {
            let i: IntervalSeq = wire::from_json(&load(intervals)?)?;
            let x = block_seq_arg(ctx, x.as_deref())?;
            let b = base_arg(ctx, base.as_deref(), &x)?;
            match spread_from_tail_diag(&b, &x, &i, *rounds) {
                Ok(y) => {
                    let summary = format!("spread witness {y}");
                    Ok(Outcome {
                        cases: vec![(true, None)],
                        result: json!({ "Y": y }),
                        summary,
                    })
                }
                Err(e @ Error::Exhaustion { .. }) => {
                    let summary = e.to_string();
                    Ok(Outcome::single(
                        false,
                        || json!({ "error": e.to_string() }),
                        json!({ "Y": null }),
                        summary,
                    ))
                }
                Err(e) => Err(e),
            }
        }
        Command::Qpoint { partition, set } => qpoint(partition, set.as_deref()),
        Command::Density {
            predicate,
            base,
            depth,
        } => {
            let p = predicate_arg(predicate)?;
            let x = BlockSeq::unit(ctx.field, 0..ctx.trunc);
            let b = base_arg(ctx, base.as_deref(), &x)?;
            let found = density_probe(&p, &b, *depth, &ctx.budget)?;
            let cases: Vec<(bool, Option<Value>)> = found
                .iter()
                .enumerate()
                .map(|(k, z)| {
                    (
                        z.is_some(),
                        z.is_none()
                            .then(|| json!({ "generator": k, "absent": true })),
                    )
                })
                .collect();
            let summary = format!(
                "{} of {} generators have a witness",
                found.iter().filter(|z| z.is_some()).count(),
                found.len()
            );
            Ok(Outcome {
                cases,
                result: json!({ "predicate": p.name(), "witnesses": found }),
                summary,
            })
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Verify { .. } => "verify",
        Command::Hindman(_) => "hindman",
        Command::Milliken { .. } => "milliken",
        Command::OscRange { .. } => "osc-range",
        Command::AsymptoticProbe { .. } => "asymptotic-probe",
        Command::Game {
            action: GameAction::Play { .. },
        } => "game play",
        Command::Game {
            action: GameAction::Replay { .. },
        } => "game replay",
        Command::Spread { .. } => "spread",
        Command::Qpoint { .. } => "qpoint",
        Command::Density { .. } => "density",
    }
}

/// The command's own arguments as strings, for the report.
fn parameters(cli: &Cli, field: Field) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("field".into(), field.to_string());
    p.insert("trunc".into(), cli.trunc.to_string());
    p.insert("budget".into(), cli.budget.to_string());
    p.insert("seed".into(), cli.seed.to_string());
    let mut put = |k: &str, v: String| {
        p.insert(k.to_string(), v);
    };
    match &cli.command {
        Command::Verify { suite } => put("suite", suite.clone()),
        Command::Hindman(a) | Command::Milliken { search: a, .. } => {
            put("coloring", a.coloring.clone());
            put("universe", a.universe.to_string());
            put("length", a.length.to_string());
            if let Command::Milliken { arity, .. } = &cli.command {
                put("arity", arity.to_string());
            }
        }
        Command::OscRange { x } => put("x", x.clone().unwrap_or_default()),
        Command::AsymptoticProbe {
            predicate,
            x,
            depth,
        } => {
            put("predicate", predicate.clone());
            put("x", x.clone().unwrap_or_default());
            put("depth", depth.to_string());
        }
        Command::Game {
            action:
                GameAction::Play {
                    kind,
                    ambient,
                    base,
                    rounds,
                    s1,
                    s2,
                },
        } => {
            put("kind", kind.clone());
            put("ambient", ambient.clone().unwrap_or_default());
            put("base", base.clone().unwrap_or_default());
            put("rounds", rounds.to_string());
            put("s1", s1.clone());
            put("s2", s2.clone());
        }
        Command::Game {
            action: GameAction::Replay { file },
        } => put("file", file.clone()),
        Command::Spread {
            intervals,
            x,
            base,
            rounds,
        } => {
            put("intervals", intervals.clone());
            put("x", x.clone().unwrap_or_default());
            put("base", base.clone().unwrap_or_default());
            put("rounds", rounds.to_string());
        }
        Command::Qpoint { partition, set } => {
            put("partition", partition.clone());
            put("set", set.clone().unwrap_or_default());
        }
        Command::Density {
            predicate,
            base,
            depth,
        } => {
            put("predicate", predicate.clone());
            put("base", base.clone().unwrap_or_default());
            put("depth", depth.to_string());
        }
    }
    p
}

/// Exit code for an error that aborted a command.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => 3,
        Error::Exhaustion { .. }
        | Error::Verification(_)
        | Error::IllegalMove { .. }
        | Error::Extension { .. } => 1,
        _ => 2,
    }
}

fn emit(target: &str, report: &RunReport) -> std::io::Result<()> {
    let mut text = serde_json::to_string(report).expect("reports serialise");
    text.push('\n');
    if target == "-" {
        std::io::stdout().lock().write_all(text.as_bytes())
    } else {
        fs::write(target, text)
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let field: Field = match cli.field.as_deref().unwrap_or("gf2").parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: --field: {e}");
            return 2;
        }
    };
    let ctx = Ctx {
        field,
        field_given: cli.field.is_some(),
        trunc: cli.trunc,
        budget: Budget::new(cli.budget),
        seed: cli.seed,
    };
    let name = command_name(&cli.command);
    let started = Instant::now();
    let (outcome, code) = match run_command(&ctx, &cli.command) {
        Ok(o) => {
            let code = if o.cases.iter().all(|c| c.0) { 0 } else { 1 };
            (o, code)
        }
        Err(e) => {
            let code = exit_code(&e);
            let cases = if code == 1 {
                vec![(false, Some(json!({ "error": e.to_string() })))]
            } else {
                Vec::new()
            };
            (
                Outcome {
                    cases,
                    result: json!({ "error": e.to_string() }),
                    summary: format!("error: {e}"),
                },
                code,
            )
        }
    };
    let passed = outcome.cases.iter().filter(|c| c.0).count() as u64;
    let report = RunReport {
        command: name.to_string(),
        parameters: parameters(&cli, field),
        cases_run: outcome.cases.len() as u64,
        passed,
        failed: outcome.cases.len() as u64 - passed,
        counterexamples: outcome.cases.into_iter().filter_map(|c| c.1).collect(),
        wall_time_ms: started.elapsed().as_millis() as u64,
        result: outcome.result,
    };
    let status = match code {
        0 => "PASS",
        1 => "FAIL",
        3 => "BUDGET",
        _ => "ERROR",
    };
    eprintln!(
        "{name}: {status} ({}/{} cases passed) {}",
        report.passed, report.cases_run, outcome.summary
    );
    if let Err(e) = emit(&cli.report, &report) {
        eprintln!("error: --report {}: {e}", cli.report);
        return 2;
    }
    code
}
