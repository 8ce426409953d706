//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use coopgame::approx::{
    certified_strong_solution, certified_weak_relation_for, excluded_imputation_certificate, imputation_set,
    sample_weak_solution, strong_core_emptiness_witness, unbounded_weak_shapley_witness, ConceptValue,
    SolutionConcept, SolutionRegion, StrongSolution, Witness,
};
use coopgame::incomplete::{
    core_of_w_alpha_beta, extension_w_a, extension_w_alpha, extension_w_alpha_beta, extreme_v_k,
    imputation_i_alpha, imputation_i_k, is_extendable, nucleolus_of_w_alpha_beta, shapley_of_w_a,
    shapley_of_w_alpha_beta, surplus_family_game, tau_of_w_a, tau_of_w_alpha_beta,
    weber_marginals_of_w_alpha_beta, ExtensionClass, MinimalIncompleteGame, WeightsA,
};
use coopgame::oracle::{
    brute_core_vertices, brute_shapley, generate, random_incomplete_game, random_weights_a,
    random_weights_alpha_beta, DeltaSign, GameFamily, GeneratorSpec,
};
use coopgame::solutions::{self, marginal_vector, Permutation};
use coopgame::{Game, PayoffVector, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn rng(tag: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(20_241_015);
    r.set_stream(tag);
    r
}

fn game(rng: &mut ChaCha8Rng, family: GameFamily, n: usize) -> Result<Game, String> {
    generate(&GeneratorSpec::new(family, n, rng.gen())).map_err(|e| e.to_string())
}

fn positive_ig(rng: &mut ChaCha8Rng, n: usize) -> MinimalIncompleteGame {
    random_incomplete_game(rng, n, true, DeltaSign::Positive)
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn closed_forms() -> Outcome {
    let mut rng = rng(1);
    let mut draws = 0;
    for n in 3..=5 {
        for i in 0..200 {
            let ig = random_incomplete_game(&mut rng, n, true, DeltaSign::NonNegative);
            let a = random_weights_a(&mut rng, n);
            let w_a = extension_w_a(&ig, &a).map_err(err)?;
            ensure(shapley_of_w_a(&ig, &a).map_err(err)? == brute_shapley(&w_a).map_err(err)?, || {
                format!("n={n} draw {i}: Shapley of w_A")
            })?;
            ensure(tau_of_w_a(&ig, &a).ok() == solutions::tau(&w_a).ok(), || format!("n={n} draw {i}: τ of w_A"))?;

            let w = random_weights_alpha_beta(&mut rng, n, 6);
            let g = extension_w_alpha_beta(&ig, &w).map_err(err)?;
            let i_alpha = imputation_i_alpha(&ig, w.alpha()).map_err(err)?;
            ensure(shapley_of_w_alpha_beta(&ig, &w).map_err(err)? == brute_shapley(&g).map_err(err)?, || {
                format!("n={n} draw {i}: Shapley of w_(α,β)")
            })?;
            ensure(tau_of_w_alpha_beta(&ig, &w).map_err(err)? == i_alpha, || format!("n={n} draw {i}: τ closed form"))?;
            ensure(solutions::tau(&g).map_err(err)? == i_alpha, || format!("n={n} draw {i}: τ general"))?;
            ensure(nucleolus_of_w_alpha_beta(&ig, &w).map_err(err)? == i_alpha, || {
                format!("n={n} draw {i}: nucleolus closed form")
            })?;
            let core = brute_core_vertices(&g).map_err(err)?;
            ensure(core.vertices() == [i_alpha.clone()], || format!("n={n} draw {i}: brute core is not {{I^α}}"))?;
            ensure(core_of_w_alpha_beta(&ig, &w).map_err(err)?.same_hull(&core), || {
                format!("n={n} draw {i}: core closed form")
            })?;
            for sigma in Permutation::all(n) {
                ensure(
                    weber_marginals_of_w_alpha_beta(&ig, &w, &sigma).map_err(err)? == marginal_vector(&g, &sigma).map_err(err)?,
                    || format!("n={n} draw {i}: marginal vector {:?}", sigma.order()),
                )?;
            }
            draws += 1;
        }
    }
    Ok(format!("{draws} draws"))
}

fn random_imputation(rng: &mut ChaCha8Rng, v: &Game) -> PayoffVector {
    let n = v.players();
    let surplus = v.grand_value() - v.singleton_values().iter().sum::<Rational>();
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=6)).collect();
    let total = weights.iter().sum::<i64>();
    PayoffVector(
        (0..n)
            .map(|i| {
                let share = if total == 0 {
                    Rational::new(1.into(), (n as i64).into())
                } else {
                    Rational::new(weights[i].into(), total.into())
                };
                v.singleton_value(i) + &surplus * share
            })
            .collect(),
    )
}

fn coincidences() -> Outcome {
    let mut rng = rng(2);
    for i in 0..200 {
        let n = 2 + i % 4;
        let v = game(&mut rng, GameFamily::Convex, n)?;
        let x = solutions::nucleolus(&v).map_err(err)?;
        ensure(solutions::is_in_prekernel(&x, &v) && solutions::is_in_kernel(&x, &v), || {
            format!("convex game {i}: nucleolus outside the kernel")
        })?;
    }
    for i in 0..200 {
        let n = 2 + i % 4;
        let v = game(&mut rng, GameFamily::OneConvex, n)?;
        ensure(solutions::nucleolus(&v).map_err(err)? == solutions::tau(&v).map_err(err)?, || {
            format!("1-convex game {i}: nucleolus ≠ τ")
        })?;
    }
    let mut members = 0;
    for i in 0..200 {
        let n = 2 + i % 4;
        let v = game(&mut rng, GameFamily::Superadditive, n)?;
        let mut points = vec![solutions::nucleolus(&v).map_err(err)?];
        points.extend((1..50).map(|_| random_imputation(&mut rng, &v)));
        for x in &points {
            let k = solutions::is_in_kernel(x, &v);
            ensure(k == solutions::is_in_prekernel(x, &v), || format!("superadditive game {i}: predicates differ"))?;
            members += k as usize;
        }
    }
    Ok(format!("600 games, {members} kernel members among 10000 imputations"))
}

fn core_weber() -> Outcome {
    let mut rng = rng(3);
    let families = [GameFamily::Any, GameFamily::Superadditive, GameFamily::Convex, GameFamily::Positive, GameFamily::OneConvex];
    let mut convex = 0;
    for i in 0..200 {
        let n = 2 + i % 4;
        let v = game(&mut rng, families[i % families.len()], n)?;
        let core = solutions::core_polytope(&v).map_err(err)?;
        let weber = solutions::weber_polytope(&v).map_err(err)?;
        ensure(core.vertices().iter().all(|x| weber.contains(x)), || format!("game {i}: core vertex outside Weber"))?;
        let is_convex = v.classify().convex;
        ensure(core.same_hull(&weber) == is_convex, || format!("game {i}: Core = Weber is {}", !is_convex))?;
        convex += is_convex as usize;
    }
    for i in 0..200 {
        let n = 2 + i % 4;
        let v = game(&mut rng, GameFamily::OneConvex, n)?;
        let b = v.upper_vector();
        let g = v.gap(v.grand_coalition());
        let allowed: Vec<PayoffVector> = (0..n)
            .map(|k| {
                let mut x = b.0.clone();
                x[k] -= &g;
                PayoffVector(x)
            })
            .collect();
        let core = brute_core_vertices(&v).map_err(err)?;
        ensure(core.vertices().iter().all(|x| allowed.contains(x)), || format!("1-convex game {i}: stray vertex"))?;
    }
    Ok(format!("200 games ({convex} convex) + 200 1-convex games"))
}

fn weak_table() -> Outcome {
    let mut rng = rng(4);
    let mut points = 0;
    for n in 3..=4 {
        for _ in 0..3 {
            let ig = positive_ig(&mut rng, n);
            let base = imputation_set(&ig);
            let seed = rng.gen();
            // (a)
            for class in ExtensionClass::ALL {
                for concept in SolutionConcept::ALL {
                    if !certified_weak_relation_for(&ig, class, concept).within_imputation_set() {
                        continue;
                    }
                    let region = sample_weak_solution(&ig, class, concept, 10, seed).map_err(err)?;
                    for x in region.cloud() {
                        ensure(base.contains(&x), || format!("(a) n={n} {class} {concept}: point outside I(v)"))?;
                        points += 1;
                    }
                }
            }
            // (b)
            let vertices: Vec<PayoffVector> = (0..n).map(|k| imputation_i_k(&ig, k).unwrap()).collect();
            for concept in [SolutionConcept::Shapley, SolutionConcept::Tau, SolutionConcept::Prekernel] {
                let region = sample_weak_solution(&ig, ExtensionClass::Positive, concept, 60, seed).map_err(err)?;
                ensure(region.cloud().iter().all(|x| !vertices.contains(x)), || format!("(b) n={n} {concept} hit I^k"))?;
                for k in 0..n {
                    let w = excluded_imputation_certificate(&ig, concept, k).map_err(err)?;
                    ensure(w.verify(&ig), || format!("(b) n={n} {concept} k={}: certificate fails", k + 1))?;
                }
            }
            // (c)
            let region = sample_weak_solution(&ig, ExtensionClass::Positive, SolutionConcept::Core, 1, seed).map_err(err)?;
            let SolutionRegion::Sampled { points: sampled, .. } = &region else { unreachable!() };
            let v_n = surplus_family_game(&ig, &WeightsA::indicator(n, coopgame::Coalition::grand(n)).map_err(err)?);
            ensure(sampled[0].weights.build(&ig).map_err(err)? == v_n, || "(c) first sample is not v_N".into())?;
            ensure(region.hull().same_hull(&base), || format!("(c) n={n}: core hull ≠ I(v)"))?;
            // (e)
            for concept in [SolutionConcept::Tau, SolutionConcept::Nucleolus, SolutionConcept::Core] {
                let region = sample_weak_solution(&ig, ExtensionClass::OneConvex, concept, 40, seed).map_err(err)?;
                let SolutionRegion::Sampled { points: sampled, .. } = &region else { unreachable!() };
                for p in sampled {
                    let g = p.weights.build(&ig).map_err(err)?;
                    let alpha = solutions::nucleolus(&g).map_err(err)?;
                    let alpha = imputation_i_alpha(&ig, &weights_of(&ig, &alpha)).map_err(err)?;
                    let ok = match &p.value {
                        ConceptValue::Point(x) => *x == alpha,
                        ConceptValue::Set(s) => s.vertices() == [alpha.clone()],
                        ConceptValue::Undefined(_) => false,
                    };
                    ensure(ok, || format!("(e) n={n} {concept}: value is not {{I^α}}"))?;
                }
                ensure(region.hull().same_hull(&base), || format!("(e) n={n} {concept}: does not fill I(v)"))?;
            }
        }
    }
    // (d)
    let bound = -Rational::from_integer(1_000_000.into());
    for _ in 0..5 {
        let ig = positive_ig(&mut rng, 4);
        let player = rng.gen_range(0..4);
        let w = unbounded_weak_shapley_witness(&ig, player, &bound).map_err(err)?;
        let Witness::UnboundedShapley { extension, .. } = &w else { unreachable!() };
        ensure(extension.is_one_convex() && ig.agrees_with(extension), || "(d) witness is not a C1-extension".into())?;
        ensure(brute_shapley(extension).map_err(err)?[player] < bound, || "(d) φ_i not below −10⁶".into())?;
    }
    Ok(format!("(a)-(e), {points} sampled points"))
}

/// Recovers α from I^α.
fn weights_of(ig: &MinimalIncompleteGame, x: &PayoffVector) -> Vec<Rational> {
    let d = ig.delta();
    (0..ig.players()).map(|i| (&x[i] - ig.singleton(i)) / &d).collect()
}

fn strong_table() -> Outcome {
    let mut rng = rng(5);
    let mut certificates = 0;
    for n in 3..=5 {
        for _ in 0..2 {
            let ig = positive_ig(&mut rng, n);
            for class in ExtensionClass::ALL {
                for concept in SolutionConcept::ALL {
                    match certified_strong_solution(&ig, class, concept).map_err(err)? {
                        StrongSolution::Empty(cert) => {
                            ensure(cert.verify(&ig, class), || format!("n={n} {class} {concept}"))?;
                            certificates += 1;
                        }
                        StrongSolution::Unresolved { .. }
                            if class == ExtensionClass::OneConvex && concept == SolutionConcept::Weber =>
                        {
                            // W(v^1) = I(v); an interior α and a ray game both give other Weber sets.
                            let v1 = extreme_v_k(&ig, 0).map_err(err)?;
                            let w1 = solutions::weber_polytope(&v1).map_err(err)?;
                            ensure(w1.same_hull(&imputation_set(&ig)), || format!("n={n}: W(v^1) ≠ I(v)"))?;
                            let mut alpha = vec![Rational::from_integer(0.into()); n];
                            alpha[0] = Rational::new(1.into(), 2.into());
                            alpha[1] = Rational::new(1.into(), 3.into());
                            alpha[2] = Rational::new(1.into(), 6.into());
                            let inner = solutions::weber_polytope(&extension_w_alpha(&ig, &alpha).map_err(err)?).map_err(err)?;
                            ensure(!inner.same_hull(&w1), || format!("n={n}: W(w_α) = W(v^1)"))?;
                            certificates += 1;
                            if n >= 4 {
                                let bound = ig.singleton(0) - Rational::from_integer(1.into());
                                let w = unbounded_weak_shapley_witness(&ig, 0, &bound).map_err(err)?;
                                let Witness::UnboundedShapley { extension, .. } = &w else { unreachable!() };
                                let other = solutions::weber_polytope(extension).map_err(err)?;
                                ensure(ig.agrees_with(extension) && extension.is_one_convex(), || "ray game".into())?;
                                ensure(!other.same_hull(&w1), || format!("n={n}: Weber sets coincide"))?;
                                certificates += 1;
                            }
                        }
                        other => return Err(format!("n={n} {class} {concept}: {other:?}")),
                    }
                }
            }
            for _ in 0..20 {
                let alpha = random_weights_alpha_beta(&mut rng, n, 0).alpha().to_vec();
                let w = strong_core_emptiness_witness(&ig, &alpha).map_err(err)?;
                ensure(w.verify(&ig), || format!("n={n}: strong core witness"))?;
            }
        }
    }
    Ok(format!("{certificates} pairs of distinct extensions, 120 core witnesses"))
}

fn round_trips() -> Outcome {
    let mut rng = rng(6);
    for i in 0..1000 {
        let v = game(&mut rng, GameFamily::Any, 1 + i % 5)?;
        ensure(Game::from_dividends(&v.harsanyi_dividends()) == v, || format!("game {i}: dividends"))?;
    }
    let mut negatives = 0;
    for i in 0..125 {
        let n = 2 + i % 4;
        let nonnegative = rng.gen_bool(0.6);
        let ig = random_incomplete_game(&mut rng, n, nonnegative, DeltaSign::Any);
        for class in ExtensionClass::ALL {
            let zero = Rational::from_integer(0.into());
            let expected =
                ig.delta() >= zero && (class != ExtensionClass::Positive || ig.singletons().iter().all(|x| *x >= zero));
            ensure(is_extendable(&ig, class) == expected, || format!("pair {i} {class}: predicate"))?;
            let candidate = match class {
                ExtensionClass::OneConvex => extension_w_alpha(&ig, &vec![Rational::new(1.into(), (n as i64).into()); n])
                    .unwrap_or_else(|_| surplus_family_game(&ig, &WeightsA::uniform(n))),
                _ => surplus_family_game(&ig, &random_weights_a(&mut rng, n)),
            };
            ensure(ig.agrees_with(&candidate), || format!("pair {i} {class}: candidate disagrees on K"))?;
            ensure(class.contains(&candidate) == expected, || format!("pair {i} {class}: construct-and-classify"))?;
            let sampled = sample_weak_solution(&ig, class, SolutionConcept::Shapley, 3, i as u64);
            ensure(sampled.is_ok() == expected, || format!("pair {i} {class}: sampler"))?;
            if let Ok(SolutionRegion::Sampled { points, .. }) = sampled {
                for p in points {
                    let g = p.weights.build(&ig).map_err(err)?;
                    ensure(ig.agrees_with(&g) && class.contains(&g), || format!("pair {i} {class}: sampled extension"))?;
                }
            }
            negatives += !expected as usize;
        }
    }
    Ok(format!("1000 round trips, 500 pairs ({negatives} not extendable)"))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_coopgame"))
            .args(["verify", "--seed", "42"])
            .output()
            .map_err(err)
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.success(), || format!("verify exited with {}", a.status))?;
    ensure(a.stdout == b.stdout && !a.stdout.is_empty(), || "reports differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("closed-form equalities", closed_forms),
        ("coincidence theorems", coincidences),
        ("core and Weber structure", core_weber),
        ("weak solution table", weak_table),
        ("strong solution table", strong_table),
        ("structural round trips", round_trips),
        ("verify determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {} {name}: {e} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
