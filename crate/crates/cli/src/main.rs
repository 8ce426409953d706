use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use coopgame::approx::{
    certified_region, certified_strong_solution, excluded_imputation_certificate, sample_weak_solution,
    strong_core_emptiness_witness, unbounded_weak_shapley_witness, ApproxError, ConceptValue, SolutionConcept,
};
use coopgame::incomplete::{
    e_coalitions, extension_w_a, extension_w_alpha_beta, extreme_v_k, extreme_v_t, is_extendable, n1_coalitions,
    ray_e_t, surplus_family_game, ExtensionClass, IncompleteError, MinimalIncompleteGame, WeightsA, WeightsAlphaBeta,
};
use coopgame::rational::{format_rational, parse_rational, to_f64};
use coopgame::solutions::{self, SolutionError};
use coopgame::verify::{self, VerifyConfig};
use coopgame::{Game, PayoffVector, Rational};

/// Exact solution concepts for cooperative games, complete and incomplete.
#[derive(Parser)]
#[command(name = "coopgame", version)]
struct Cli {
    /// Add non-authoritative decimal renderings next to rational fields.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership with violation witnesses.
    Classify { game: PathBuf },
    /// Evaluate a solution concept, or test a point against it.
    Solve {
        game: PathBuf,
        #[arg(long)]
        concept: Concept,
        /// JSON array of rationals (or {"x": [...]}) to test for membership.
        #[arg(long)]
        check_point: Option<PathBuf>,
    },
    /// Extendability, extreme games, or a weighted extension.
    Extend {
        ig: PathBuf,
        #[arg(long)]
        class: ExtensionClass,
        #[arg(long, conflicts_with = "weights")]
        list_extremes: bool,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Weak solution relative to the imputation set, or the strong solution.
    Approx {
        ig: PathBuf,
        #[arg(long)]
        class: ExtensionClass,
        #[arg(long)]
        concept: Concept,
        #[arg(long, value_enum, default_value = "certified")]
        mode: Mode,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Checkable witnesses for weak and strong solution claims.
    Witness {
        ig: PathBuf,
        #[arg(long = "type", value_enum)]
        kind: WitnessKind,
        /// One-based player.
        #[arg(long, default_value_t = 1)]
        player: usize,
        #[arg(long, default_value = "-1000000", allow_hyphen_values = true)]
        bound: String,
        /// `uniform`, a one-based player `k` for I^k, or a JSON file of weights.
        #[arg(long, default_value = "uniform")]
        alpha: String,
        #[arg(long, default_value = "shapley")]
        concept: Concept,
    },
    /// Run the seeded invariant suite.
    Verify {
        /// Player range, e.g. `3..5` or `4`.
        #[arg(long, default_value = "3..5")]
        n: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random instances per check and player count.
        #[arg(long, default_value_t = 4)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Certified,
    Sampled,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    UnboundedShapley,
    ExcludedImputation,
    StrongCoreEmpty,
}

#[derive(Clone, Copy)]
struct Concept(SolutionConcept);

impl std::str::FromStr for Concept {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Concept)
    }
}

enum Failure {
    Input(String),
    Precondition(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Precondition(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<IncompleteError> for Failure {
    fn from(e: IncompleteError) -> Self {
        match e {
            IncompleteError::Malformed(_)
            | IncompleteError::WrongLength { .. }
            | IncompleteError::InvalidPlayerCount(_)
            | IncompleteError::NotInN1(_)
            | IncompleteError::NotInE(_)
            | IncompleteError::NegativeWeight { .. }
            | IncompleteError::NotNormalized(_)
            | IncompleteError::PlayerOutOfRange(_) => Failure::Input(e.to_string()),
            IncompleteError::NotExtendable(_) => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<SolutionError> for Failure {
    fn from(e: SolutionError) -> Self {
        match e {
            SolutionError::DimensionMismatch { .. } | SolutionError::InvalidPermutation(_) => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<ApproxError> for Failure {
    fn from(e: ApproxError) -> Self {
        match e {
            ApproxError::Incomplete(inner) => inner.into(),
            ApproxError::Solution(inner) => inner.into(),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn rational_arg(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Input(e.to_string()))
}

fn read_point(path: &Path, n: usize) -> Result<PayoffVector, Failure> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum RawPoint {
        List(Vec<Value>),
        Keyed { x: Vec<Value> },
    }
    let entries = match parse_json::<RawPoint>(path)? {
        RawPoint::List(l) | RawPoint::Keyed { x: l } => l,
    };
    let values = entries
        .iter()
        .map(|v| match v {
            Value::String(s) => rational_arg(s),
            Value::Number(num) => rational_arg(&num.to_string()),
            other => Err(Failure::Input(format!("not a rational: {other}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != n {
        return Err(Failure::Input(format!("point has {} entries, game has {n} players", values.len())));
    }
    Ok(PayoffVector(values))
}

fn point_json(x: &PayoffVector) -> Value {
    json!(x.to_strings())
}

fn classify(path: &Path) -> Outcome {
    let game: Game = parse_json(path)?;
    Ok(json!({ "n": game.players(), "report": game.classify() }))
}

fn solve(path: &Path, concept: SolutionConcept, check_point: Option<&Path>) -> Outcome {
    let game: Game = parse_json(path)?;
    if let Some(p) = check_point {
        let x = read_point(p, game.players())?;
        let member = match concept {
            SolutionConcept::Kernel => solutions::is_in_kernel(&x, &game),
            SolutionConcept::Prekernel => solutions::is_in_prekernel(&x, &game),
            SolutionConcept::Core => solutions::is_in_core(&x, &game),
            SolutionConcept::Weber => solutions::weber_polytope(&game)?.contains(&x),
            one_point => match coopgame::approx::evaluate(&game, one_point)? {
                ConceptValue::Point(y) => y == x,
                _ => false,
            },
        };
        let mut out = json!({ "concept": concept.name(), "point": point_json(&x), "member": member });
        if concept == SolutionConcept::Core {
            if let Some(s) = solutions::core_violation(&x, &game) {
                out["violation"] = json!(s);
            }
        }
        return Ok(out);
    }
    let value = match concept {
        SolutionConcept::Kernel | SolutionConcept::Prekernel => {
            return Err(Failure::Input(format!(
                "{concept} is a set without a finite description; pass --check-point"
            )))
        }
        c => coopgame::approx::evaluate(&game, c)?,
    };
    if let ConceptValue::Undefined(reason) = &value {
        return Err(Failure::Precondition(reason.clone()));
    }
    Ok(json!({ "concept": concept.name(), "result": value.to_json() }))
}

fn game_entry(label: String, game: &Game) -> Value {
    json!({ "label": label, "game": game, "report": game.classify() })
}

fn extend(path: &Path, class: ExtensionClass, list_extremes: bool, weights: Option<&Path>) -> Outcome {
    let ig: MinimalIncompleteGame = parse_json(path)?;
    let n = ig.players();
    let extendable = is_extendable(&ig, class);
    let mut out = json!({ "class": class.label(), "extendable": extendable, "delta": format_rational(&ig.delta()) });
    if !list_extremes && weights.is_none() {
        return Ok(out);
    }
    if !extendable {
        return Err(IncompleteError::NotExtendable(class).into());
    }
    if let Some(w) = weights {
        let text = read(w)?;
        let game = match class {
            ExtensionClass::Positive => extension_w_a(&ig, &WeightsA::from_json(n, &text)?)?,
            ExtensionClass::OneConvex => extension_w_alpha_beta(&ig, &WeightsAlphaBeta::from_json(n, &text)?)?,
            ExtensionClass::Convex | ExtensionClass::Superadditive => {
                surplus_family_game(&ig, &WeightsA::from_json(n, &text)?)
            }
        };
        out["extension"] = json!(game);
        out["report"] = json!(game.classify());
        return Ok(out);
    }
    let mut extremes = Vec::new();
    let mut rays = Vec::new();
    let surplus = |t| surplus_family_game(&ig, &WeightsA::indicator(n, t).expect("t in N1"));
    match class {
        ExtensionClass::Positive => {
            for t in n1_coalitions(n) {
                extremes.push(game_entry(format!("v_{t}"), &extreme_v_t(&ig, t)?));
            }
        }
        ExtensionClass::OneConvex => {
            for k in 0..n {
                extremes.push(game_entry(format!("v^{}", k + 1), &extreme_v_k(&ig, k)?));
            }
            for t in e_coalitions(n) {
                rays.push(game_entry(format!("e_{t}"), &ray_e_t(n, t)?));
            }
        }
        ExtensionClass::Convex => {
            for t in n1_coalitions(n) {
                extremes.push(game_entry(format!("v_{t}"), &surplus(t)));
            }
        }
        ExtensionClass::Superadditive => {
            for t in n1_coalitions(n) {
                extremes.push(game_entry(format!("v_{t}"), &surplus(t)));
            }
            for k in 0..n {
                extremes.push(game_entry(format!("v^{}", k + 1), &extreme_v_k(&ig, k)?));
            }
        }
    }
    out["extremes"] = Value::Array(extremes);
    out["rays"] = Value::Array(rays);
    out["complete"] = json!(matches!(class, ExtensionClass::Positive | ExtensionClass::OneConvex));
    Ok(out)
}

fn approx(
    path: &Path,
    class: ExtensionClass,
    concept: SolutionConcept,
    mode: Mode,
    samples: usize,
    seed: u64,
) -> Outcome {
    let ig: MinimalIncompleteGame = parse_json(path)?;
    match mode {
        Mode::Certified => Ok(certified_region(&ig, class, concept)?.to_json()),
        Mode::Sampled => Ok(sample_weak_solution(&ig, class, concept, samples, seed)?.to_json()),
        Mode::Strong => {
            let strong = certified_strong_solution(&ig, class, concept)?;
            let out = strong.to_json(&ig, class);
            if out.get("verified") == Some(&Value::Bool(false)) {
                return Err(Failure::Verification("strong-solution certificate failed to verify".into()));
            }
            Ok(json!({ "kind": "strong", "class": class.label(), "concept": concept.name(), "solution": out }))
        }
    }
}

fn parse_alpha(text: &str, n: usize) -> Result<Vec<Rational>, Failure> {
    if text == "uniform" {
        return Ok(WeightsAlphaBeta::uniform(n).alpha().to_vec());
    }
    if let Ok(k) = text.parse::<usize>() {
        if k == 0 || k > n {
            return Err(Failure::Input(format!("player {k} out of range")));
        }
        return Ok(WeightsAlphaBeta::vertex(n, k - 1).alpha().to_vec());
    }
    let body = read(Path::new(text))?;
    Ok(WeightsAlphaBeta::from_json(n, &body)?.alpha().to_vec())
}

fn witness(path: &Path, kind: WitnessKind, player: usize, bound: &str, alpha: &str, concept: SolutionConcept) -> Outcome {
    let ig: MinimalIncompleteGame = parse_json(path)?;
    let n = ig.players();
    let one_based = |p: usize| {
        if p == 0 || p > n {
            Err(Failure::Input(format!("player {p} out of range 1..={n}")))
        } else {
            Ok(p - 1)
        }
    };
    let w = match kind {
        WitnessKind::UnboundedShapley => unbounded_weak_shapley_witness(&ig, one_based(player)?, &rational_arg(bound)?)?,
        WitnessKind::ExcludedImputation => excluded_imputation_certificate(&ig, concept, one_based(player)?)?,
        WitnessKind::StrongCoreEmpty => strong_core_emptiness_witness(&ig, &parse_alpha(alpha, n)?)?,
    };
    let out = w.to_json(&ig);
    if out["verified"] != Value::Bool(true) {
        return Err(Failure::Verification("witness failed exact re-evaluation".into()));
    }
    Ok(out)
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("bad player range `{text}`"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo < 2 || lo > hi || hi > 6 {
        return Err(Failure::Input(format!("player range `{text}` must lie within 2..6")));
    }
    Ok((lo, hi))
}

fn run_verify(n: &str, seed: u64, samples: usize) -> Outcome {
    let (min_players, max_players) = parse_range(n)?;
    let report = verify::run(&VerifyConfig {
        min_players,
        max_players,
        seed,
        samples,
    });
    let value = json!(report);
    if report.passed {
        Ok(value)
    } else {
        emit(&value);
        Err(Failure::Verification("invariant suite failed".into()))
    }
}

/// Adds `<key>_float` siblings for every field holding rationals.
fn add_floats(value: &mut Value) {
    fn as_float(v: &Value) -> Option<Value> {
        match v {
            Value::String(s) => parse_rational(s).ok().map(|r| json!(to_f64(&r))),
            Value::Array(items) if !items.is_empty() => items.iter().map(as_float).collect::<Option<Vec<_>>>().map(Value::Array),
            _ => None,
        }
    }
    match value {
        Value::Object(map) => {
            let mut extra = Map::new();
            for (k, v) in map.iter_mut() {
                let mask_key = k.bytes().all(|b| b.is_ascii_digit());
                if let Some(f) = as_float(v).filter(|_| !mask_key) {
                    extra.insert(format!("{k}_float"), f);
                } else {
                    add_floats(v);
                }
            }
            map.extend(extra);
        }
        Value::Array(items) => items.iter_mut().for_each(add_floats),
        _ => {}
    }
}

/// Pretty JSON on stdout; a closed pipe is not an error.
fn emit(value: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, value).and_then(|_| writeln!(out).map_err(serde_json::Error::io));
}

fn configure_threads() {
    if let Some(k) = std::env::var("COOP_APPROX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match &cli.command {
        Command::Classify { game } => classify(game),
        Command::Solve {
            game,
            concept,
            check_point,
        } => solve(game, concept.0, check_point.as_deref()),
        Command::Extend {
            ig,
            class,
            list_extremes,
            weights,
        } => extend(ig, *class, *list_extremes, weights.as_deref()),
        Command::Approx {
            ig,
            class,
            concept,
            mode,
            samples,
            seed,
        } => approx(ig, *class, concept.0, *mode, *samples, *seed),
        Command::Witness {
            ig,
            kind,
            player,
            bound,
            alpha,
            concept,
        } => witness(ig, *kind, *player, bound, alpha, concept.0),
        Command::Verify { n, seed, samples } => run_verify(n, *seed, *samples),
    };
    match result {
        Ok(mut value) => {
            if cli.float {
                add_floats(&mut value);
            }
            emit(&value);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{}", json!({ "error": failure.message(), "exit_code": failure.code() }));
            ExitCode::from(failure.code())
        }
    }
}
