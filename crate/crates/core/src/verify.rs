//! Seeded invariant suite spanning every module. The report is a pure
//! function of the configuration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::approx::{
    certified_strong_solution, certified_weak_relation_for, excluded_imputation_certificate, imputation_set,
    sample_weak_solution, strong_core_emptiness_witness, unbounded_weak_shapley_witness, ConceptValue,
    SolutionConcept, StrongSolution,
};
use crate::game::{Game, PayoffVector};
use crate::incomplete::{
    core_of_w_alpha_beta, extension_w_a, extension_w_alpha_beta, imputation_i_alpha, is_extendable,
    nucleolus_of_w_alpha_beta, shapley_of_w_a, shapley_of_w_alpha_beta, tau_of_w_a, tau_of_w_alpha_beta,
    weber_marginals_of_w_alpha_beta, ExtensionClass, MinimalIncompleteGame,
};
use crate::oracle::{
    brute_core_vertices, brute_nucleolus, brute_shapley, generate, random_incomplete_game, random_weights_a,
    random_weights_alpha_beta, DeltaSign, GameFamily, GeneratorSpec,
};
use crate::rational::{format_rational, Rational};
use crate::solutions::{self, marginal_vector, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub min_players: usize,
    pub max_players: usize,
    pub seed: u64,
    /// Random instances per check and player count.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            min_players: 3,
            max_players: 5,
            seed: 42,
            samples: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub players: (usize, usize),
    pub samples: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

type Outcome = Result<(), String>;
type Check = fn(&mut ChaCha8Rng, usize) -> Outcome;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn show(x: &PayoffVector) -> String {
    format!("({})", x.0.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

fn game_of(rng: &mut ChaCha8Rng, family: GameFamily, n: usize) -> Result<Game, String> {
    generate(&GeneratorSpec::new(family, n, rng.gen())).map_err(|e| e.to_string())
}

fn incomplete(rng: &mut ChaCha8Rng, n: usize) -> MinimalIncompleteGame {
    random_incomplete_game(rng, n, true, DeltaSign::Positive)
}

fn dividends_round_trip(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::Any, n)?;
    ensure(Game::from_dividends(&v.harsanyi_dividends()) == v, || "round trip changed the game".into())
}

fn shapley_matches_permutations(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::Any, n)?;
    let brute = brute_shapley(&v).map_err(|e| e.to_string())?;
    ensure(brute == solutions::shapley(&v), || format!("{} vs {}", show(&brute), show(&solutions::shapley(&v))))
}

fn nucleolus_matches_oracle(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::Superadditive, n)?;
    let a = solutions::nucleolus(&v).map_err(|e| e.to_string())?;
    let b = brute_nucleolus(&v).map_err(|e| e.to_string())?;
    ensure(a == b, || format!("{} vs {}", show(&a), show(&b)))
}

fn core_matches_oracle(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::Any, n)?;
    let a = solutions::core_polytope(&v).map_err(|e| e.to_string())?;
    let b = brute_core_vertices(&v).map_err(|e| e.to_string())?;
    ensure(a.same_hull(&b), || "core vertex sets differ".into())
}

fn closed_forms(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let ig = incomplete(rng, n);
    let a = random_weights_a(rng, n);
    let w_a = extension_w_a(&ig, &a).map_err(|e| e.to_string())?;
    ensure(shapley_of_w_a(&ig, &a).ok() == Some(solutions::shapley(&w_a)), || "Shapley of w_A".into())?;
    ensure(tau_of_w_a(&ig, &a).ok() == solutions::tau(&w_a).ok(), || "τ of w_A".into())?;
    let w = random_weights_alpha_beta(rng, n, 6);
    let game = extension_w_alpha_beta(&ig, &w).map_err(|e| e.to_string())?;
    let i_alpha = imputation_i_alpha(&ig, w.alpha()).map_err(|e| e.to_string())?;
    ensure(shapley_of_w_alpha_beta(&ig, &w).ok() == Some(solutions::shapley(&game)), || {
        "Shapley of w_{α,β}".into()
    })?;
    ensure(tau_of_w_alpha_beta(&ig, &w).ok().as_ref() == Some(&i_alpha), || "τ of w_{α,β}".into())?;
    ensure(solutions::tau(&game).ok().as_ref() == Some(&i_alpha), || "general τ of w_{α,β}".into())?;
    ensure(nucleolus_of_w_alpha_beta(&ig, &w).ok().as_ref() == Some(&i_alpha), || "η of w_{α,β}".into())?;
    ensure(solutions::nucleolus(&game).ok().as_ref() == Some(&i_alpha), || "general η of w_{α,β}".into())?;
    let core = core_of_w_alpha_beta(&ig, &w).map_err(|e| e.to_string())?;
    let brute = brute_core_vertices(&game).map_err(|e| e.to_string())?;
    ensure(core.same_hull(&brute), || "core of w_{α,β}".into())?;
    for sigma in Permutation::all(n) {
        let closed = weber_marginals_of_w_alpha_beta(&ig, &w, &sigma).map_err(|e| e.to_string())?;
        let direct = marginal_vector(&game, &sigma).map_err(|e| e.to_string())?;
        ensure(closed == direct, || format!("marginal vector for {:?}", sigma.order()))?;
    }
    Ok(())
}

fn convex_nucleolus_in_kernel(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::Convex, n)?;
    let x = solutions::nucleolus(&v).map_err(|e| e.to_string())?;
    ensure(solutions::is_in_prekernel(&x, &v) && solutions::is_in_kernel(&x, &v), || show(&x))
}

fn one_convex_nucleolus_is_tau(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::OneConvex, n)?;
    let x = solutions::nucleolus(&v).map_err(|e| e.to_string())?;
    let t = solutions::tau(&v).map_err(|e| e.to_string())?;
    ensure(x == t, || format!("{} vs {}", show(&x), show(&t)))
}

fn random_imputation(rng: &mut ChaCha8Rng, v: &Game) -> PayoffVector {
    let n = v.players();
    let surplus = v.grand_value() - v.singleton_values().iter().sum::<Rational>();
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=6)).collect();
    let total: i64 = weights.iter().sum::<i64>().max(1);
    let mut x: Vec<Rational> = (0..n)
        .map(|i| v.singleton_value(i) + &surplus * Rational::new(weights[i].into(), total.into()))
        .collect();
    if weights.iter().all(|&w| w == 0) {
        x[0] += surplus;
    }
    PayoffVector(x)
}

fn kernel_agrees_with_prekernel(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::Superadditive, n)?;
    let mut points = vec![solutions::nucleolus(&v).map_err(|e| e.to_string())?];
    points.extend((0..10).map(|_| random_imputation(rng, &v)));
    for x in points {
        ensure(solutions::is_in_kernel(&x, &v) == solutions::is_in_prekernel(&x, &v), || show(&x))?;
    }
    Ok(())
}

fn core_inside_weber(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let family = if rng.gen_bool(0.5) { GameFamily::Convex } else { GameFamily::Any };
    let v = game_of(rng, family, n)?;
    let core = solutions::core_polytope(&v).map_err(|e| e.to_string())?;
    let weber = solutions::weber_polytope(&v).map_err(|e| e.to_string())?;
    ensure(core.vertices().iter().all(|x| weber.contains(x)), || "core vertex outside Weber set".into())?;
    ensure(core.same_hull(&weber) == v.is_convex(), || "Core = Weber disagrees with convexity".into())
}

fn one_convex_core_vertices(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let v = game_of(rng, GameFamily::OneConvex, n)?;
    let b = v.upper_vector();
    let g = v.gap(v.grand_coalition());
    let allowed: Vec<PayoffVector> = (0..n)
        .map(|i| {
            let mut x = b.0.clone();
            x[i] -= &g;
            PayoffVector(x)
        })
        .collect();
    let core = brute_core_vertices(&v).map_err(|e| e.to_string())?;
    ensure(core.vertices().iter().all(|x| allowed.contains(x)), || "core vertex off b − g(N)e_i".into())
}

fn extensions_agree_and_classify(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let nonnegative = rng.gen_bool(0.7);
    let ig = random_incomplete_game(rng, n, nonnegative, DeltaSign::Any);
    for class in ExtensionClass::ALL {
        let extendable = is_extendable(&ig, class);
        let built = sample_weak_solution(&ig, class, SolutionConcept::Shapley, 1, rng.gen());
        ensure(built.is_ok() == extendable, || format!("{class}: predicate {extendable}"))?;
    }
    if is_extendable(&ig, ExtensionClass::Positive) {
        let w = extension_w_a(&ig, &random_weights_a(rng, n)).map_err(|e| e.to_string())?;
        ensure(ig.agrees_with(&w) && w.is_positive(), || "w_A".into())?;
    }
    if is_extendable(&ig, ExtensionClass::OneConvex) {
        let w = extension_w_alpha_beta(&ig, &random_weights_alpha_beta(rng, n, 5)).map_err(|e| e.to_string())?;
        ensure(ig.agrees_with(&w) && w.is_one_convex(), || "w_{α,β}".into())?;
    }
    Ok(())
}

fn weak_regions_respect_relations(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let ig = incomplete(rng, n);
    let imputations = imputation_set(&ig);
    let seed = rng.gen();
    // Kernel and prekernel samples are nucleoli, already covered by η.
    let concepts = SolutionConcept::ALL
        .into_iter()
        .filter(|c| !matches!(c, SolutionConcept::Kernel | SolutionConcept::Prekernel));
    for class in ExtensionClass::ALL {
        for concept in concepts.clone() {
            if !certified_weak_relation_for(&ig, class, concept).within_imputation_set() {
                continue;
            }
            let region = sample_weak_solution(&ig, class, concept, 8, seed).map_err(|e| e.to_string())?;
            for x in region.cloud() {
                ensure(imputations.contains(&x), || format!("{class} {concept}: {} outside I(v)", show(&x)))?;
            }
        }
    }
    Ok(())
}

fn excluded_imputations(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let ig = incomplete(rng, n);
    for concept in [SolutionConcept::Shapley, SolutionConcept::Tau, SolutionConcept::Prekernel] {
        for k in 0..n {
            let w = excluded_imputation_certificate(&ig, concept, k).map_err(|e| e.to_string())?;
            ensure(w.verify(&ig), || format!("{concept} k={}", k + 1))?;
        }
    }
    Ok(())
}

fn positive_core_fills_imputations(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let ig = incomplete(rng, n);
    let region = sample_weak_solution(&ig, ExtensionClass::Positive, SolutionConcept::Core, 1, rng.gen())
        .map_err(|e| e.to_string())?;
    ensure(region.hull().same_hull(&imputation_set(&ig)), || "core of v_N differs from I(v)".into())
}

fn strong_solutions_empty(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let ig = incomplete(rng, n);
    for class in ExtensionClass::ALL {
        for concept in SolutionConcept::ALL {
            match certified_strong_solution(&ig, class, concept).map_err(|e| e.to_string())? {
                StrongSolution::Empty(cert) => ensure(cert.verify(&ig, class), || format!("{class} {concept}"))?,
                StrongSolution::Unresolved { .. } if class == ExtensionClass::OneConvex && concept == SolutionConcept::Weber => {}
                other => return Err(format!("{class} {concept}: {other:?}")),
            }
        }
    }
    for _ in 0..4 {
        let alpha = random_weights_alpha_beta(rng, n, 0).alpha().to_vec();
        let w = strong_core_emptiness_witness(&ig, &alpha).map_err(|e| e.to_string())?;
        ensure(w.verify(&ig), || "strong core witness".into())?;
    }
    Ok(())
}

fn unbounded_shapley(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    if n < 4 {
        return Ok(());
    }
    let ig = incomplete(rng, n);
    let player = rng.gen_range(0..n);
    let bound = -Rational::from_integer(1_000_000.into());
    let w = unbounded_weak_shapley_witness(&ig, player, &bound).map_err(|e| e.to_string())?;
    ensure(w.verify(&ig), || format!("player {}", player + 1))
}

fn degenerate_families(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let ig = random_incomplete_game(rng, n, true, DeltaSign::Positive);
    let flat = MinimalIncompleteGame::new(ig.singletons().to_vec(), ig.singletons().iter().sum())
        .map_err(|e| e.to_string())?;
    let point = imputation_set(&flat);
    for concept in SolutionConcept::ALL {
        match certified_strong_solution(&flat, ExtensionClass::Positive, concept).map_err(|e| e.to_string())? {
            StrongSolution::Degenerate { value, .. } => {
                let ok = match &value {
                    ConceptValue::Point(x) => point.contains(x),
                    ConceptValue::Set(p) => p.same_hull(&point),
                    ConceptValue::Undefined(_) => concept == SolutionConcept::Tau,
                };
                ensure(ok, || format!("{concept} on the additive game"))?;
            }
            other => return Err(format!("{concept}: {other:?}")),
        }
    }
    // Two players: the extension is the known game itself.
    let pair = MinimalIncompleteGame::new(ig.singletons()[..2].to_vec(), ig.singletons()[..2].iter().sum::<Rational>() + ig.delta())
        .map_err(|e| e.to_string())?;
    for class in ExtensionClass::ALL {
        let s = certified_strong_solution(&pair, class, SolutionConcept::Core).map_err(|e| e.to_string())?;
        ensure(
            matches!(&s, StrongSolution::Degenerate { value: ConceptValue::Set(p), .. } if p.same_hull(&imputation_set(&pair))),
            || format!("{class}: two-player core"),
        )?;
    }
    Ok(())
}

const CHECKS: &[(&str, Check)] = &[
    ("dividend_round_trip", dividends_round_trip),
    ("shapley_vs_permutation_average", shapley_matches_permutations),
    ("nucleolus_vs_oracle", nucleolus_matches_oracle),
    ("core_vs_brute_vertices", core_matches_oracle),
    ("closed_forms_vs_general_path", closed_forms),
    ("convex_nucleolus_in_kernel", convex_nucleolus_in_kernel),
    ("one_convex_nucleolus_equals_tau", one_convex_nucleolus_is_tau),
    ("superadditive_kernel_equals_prekernel", kernel_agrees_with_prekernel),
    ("core_inside_weber", core_inside_weber),
    ("one_convex_core_vertices", one_convex_core_vertices),
    ("extensions_agree_and_classify", extensions_agree_and_classify),
    ("weak_regions_respect_relations", weak_regions_respect_relations),
    ("excluded_imputation_certificates", excluded_imputations),
    ("positive_core_fills_imputation_set", positive_core_fills_imputations),
    ("strong_solutions_empty", strong_solutions_empty),
    ("unbounded_weak_shapley", unbounded_shapley),
    ("degenerate_families", degenerate_families),
];

/// Runs every check for every player count in the configured range.
pub fn run(config: &VerifyConfig) -> VerificationReport {
    let ns: Vec<usize> = (config.min_players.max(2)..=config.max_players).collect();
    let checks: Vec<CheckResult> = CHECKS
        .par_iter()
        .enumerate()
        .map(|(id, &(name, check))| {
            let cases: Vec<(usize, usize)> = ns
                .iter()
                .flat_map(|&n| (0..config.samples).map(move |i| (n, i)))
                .collect();
            let failure = cases
                .par_iter()
                .map(|&(n, i)| {
                    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                    rng.set_stream(((id as u64) << 40) | ((n as u64) << 32) | i as u64);
                    check(&mut rng, n).map_err(|e| format!("n={n} case {i}: {e}"))
                })
                .collect::<Vec<_>>()
                .into_iter()
                .find_map(Result::err);
            CheckResult {
                name,
                passed: failure.is_none(),
                cases: cases.len(),
                failure,
            }
        })
        .collect();
    VerificationReport {
        seed: config.seed,
        players: (config.min_players, config.max_players),
        samples: config.samples,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
