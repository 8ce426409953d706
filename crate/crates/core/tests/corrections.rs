//! Places where the textbook statements about minimal incomplete games do
//! not hold as usually stated, pinned down exactly.

use coopgame::approx::{
    certified_weak_relation, imputation_set, published_weak_relation, sample_weak_solution, SolutionConcept,
};
use coopgame::incomplete::{
    extension_w_alpha, extreme_v_k, imputation_i_k, shapley_of_w_alpha_beta, surplus_family_game,
    ExtensionClass, MinimalIncompleteGame, WeightsA, WeightsAlphaBeta,
};
use coopgame::oracle::{brute_shapley, random_incomplete_game, DeltaSign};
use coopgame::rational::{int, ratio};
use coopgame::solutions;
use coopgame::{Coalition, PayoffVector, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ig(singletons: &[i64], grand: i64) -> MinimalIncompleteGame {
    MinimalIncompleteGame::new(singletons.iter().map(|&x| int(x)).collect(), int(grand)).unwrap()
}

fn c(players: &[usize]) -> Coalition {
    Coalition::from_players(players.iter().map(|p| p - 1))
}

#[test]
fn vertex_games_are_one_convex_but_not_convex() {
    let g = ig(&[0, 0, 0], 1);
    let v1 = extreme_v_k(&g, 0).unwrap();
    assert!(v1.is_one_convex() && v1.is_superadditive());
    assert!(!v1.is_convex());
    // v({1,2}) + v({1,3}) = 2 > v(N) + v({1}) = 1
    assert_eq!(v1.value(c(&[1, 2])) + v1.value(c(&[1, 3])), int(2));
    let mixed = extension_w_alpha(&g, &[ratio(1, 2), ratio(1, 4), ratio(1, 4)]).unwrap();
    assert!(!mixed.is_convex());
}

#[test]
fn shapley_of_vertex_game_is_not_the_vertex_imputation() {
    let g = ig(&[0, 0, 0], 1);
    let phi = brute_shapley(&extreme_v_k(&g, 0).unwrap()).unwrap();
    assert_eq!(phi, PayoffVector(vec![ratio(2, 3), ratio(1, 6), ratio(1, 6)]));
    assert_ne!(phi, imputation_i_k(&g, 0).unwrap());
    let w = WeightsAlphaBeta::vertex(3, 0);
    assert_eq!(shapley_of_w_alpha_beta(&g, &w).unwrap(), phi);
}

#[test]
fn three_player_one_convex_shapley_values_stay_inside() {
    // Without rays φ(w_α) = v + Δ(1 + 3α)/6 keeps every player strictly
    // above its singleton value.
    let g = ig(&[1, 0, 2], 7);
    let region = sample_weak_solution(&g, ExtensionClass::OneConvex, SolutionConcept::Shapley, 40, 9).unwrap();
    let base = imputation_set(&g);
    let floor = g.delta() / Rational::from_integer(6.into());
    for x in region.cloud() {
        assert!(base.contains(&x));
        for i in 0..3 {
            assert!(&x[i] - g.singleton(i) >= floor);
        }
    }
}

#[test]
fn convex_extensions_never_reach_vertex_imputations() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=4 {
        let g = random_incomplete_game(&mut rng, n, false, DeltaSign::Positive);
        let n_r = Rational::from_integer((n as i64).into());
        let gap = g.delta() / n_r;
        for concept in [SolutionConcept::Shapley, SolutionConcept::Tau, SolutionConcept::Nucleolus] {
            let region = sample_weak_solution(&g, ExtensionClass::Convex, concept, 60, 3).unwrap();
            let cloud = region.cloud();
            for k in 0..n {
                let ik = imputation_i_k(&g, k).unwrap();
                assert!(!cloud.contains(&ik), "{concept} reached I^{}", k + 1);
                if concept == SolutionConcept::Shapley {
                    // player k's marginal to the empty coalition is v(k)
                    let d = coopgame::Polytope::from_points(n, cloud.clone()).linf_distance(&ik).unwrap();
                    assert!(d >= gap, "distance {d} below Δ/n");
                }
            }
        }
    }
}

#[test]
fn superadditive_shapley_values_with_all_but_one_at_singletons_force_zero_surplus() {
    // A player paid exactly v(i) by the Shapley value of a superadditive
    // game has every marginal equal to v(i).
    let g = ig(&[0, 0, 0], 3);
    let w = surplus_family_game(&g, &WeightsA::indicator(3, c(&[1, 2])).unwrap());
    let phi = solutions::shapley(&w);
    assert_eq!(phi[2], int(0));
    for sigma in solutions::Permutation::all(3) {
        assert_eq!(solutions::marginal_vector(&w, &sigma).unwrap()[2], int(0));
    }
    assert!(phi[0] < int(3) && phi[1] < int(3));
}

#[test]
fn relation_table_changes() {
    use coopgame::approx::RelationLabel::*;
    for concept in [
        SolutionConcept::Shapley,
        SolutionConcept::Tau,
        SolutionConcept::Nucleolus,
        SolutionConcept::Kernel,
        SolutionConcept::Prekernel,
    ] {
        assert_eq!(published_weak_relation(ExtensionClass::Convex, concept), EqualsImputationSet);
        assert_eq!(certified_weak_relation(ExtensionClass::Convex, concept), StrictSubset);
    }
    assert_eq!(published_weak_relation(ExtensionClass::Superadditive, SolutionConcept::Shapley), SupersetOrEqual);
    assert_eq!(certified_weak_relation(ExtensionClass::Superadditive, SolutionConcept::Shapley), StrictSubset);
    assert_eq!(certified_weak_relation(ExtensionClass::Superadditive, SolutionConcept::Weber), EqualsImputationSet);
    for concept in SolutionConcept::ALL {
        assert_eq!(
            published_weak_relation(ExtensionClass::Positive, concept),
            certified_weak_relation(ExtensionClass::Positive, concept)
        );
        assert_eq!(
            published_weak_relation(ExtensionClass::OneConvex, concept),
            certified_weak_relation(ExtensionClass::OneConvex, concept)
        );
    }
}
