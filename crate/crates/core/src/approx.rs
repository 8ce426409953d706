//! Weak and strong solutions of minimal incomplete games: the union and the
//! intersection of a solution concept over every extension in a class.
//!
//! Relations are hard-coded where they are theorems, sampled clouds give
//! empirical support, and witnesses carry enough data to be re-checked.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coalition::Coalition;
use crate::game::{linear_combination, Game, PayoffVector};
use crate::incomplete::{
    e_coalitions, extension_w_a, extension_w_alpha, extension_w_alpha_beta, extreme_v_k, imputation_i_alpha,
    imputation_i_k, is_extendable, n1_coalitions, shapley_of_w_alpha_beta, surplus_family_game, ExtensionClass,
    IncompleteError, MinimalIncompleteGame, WeightsA, WeightsAlphaBeta,
};
use crate::oracle::{brute_shapley, random_weights_a, random_weights_alpha_beta, MAX_BRUTE_SHAPLEY_PLAYERS};
use crate::polytope::{polytopes_intersect, Polytope};
use crate::rational::{format_rational, Rational};
use crate::solutions::{self, excess, SolutionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error(transparent)]
    Incomplete(#[from] IncompleteError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error("no rays exist for {0} players (need at least 4)")]
    NoRaysAvailable(usize),
    #[error("total excess is zero: the imputation set is a single point")]
    ZeroExcess,
    #[error("need at least {min} players, got {n}")]
    TooFewPlayers { n: usize, min: usize },
    #[error("concept {0} has no certificate of this kind")]
    UnsupportedConcept(SolutionConcept),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SolutionConcept {
    Shapley,
    Tau,
    Nucleolus,
    Kernel,
    Prekernel,
    Core,
    Weber,
}

impl SolutionConcept {
    pub const ALL: [SolutionConcept; 7] = [
        SolutionConcept::Shapley,
        SolutionConcept::Tau,
        SolutionConcept::Nucleolus,
        SolutionConcept::Kernel,
        SolutionConcept::Prekernel,
        SolutionConcept::Core,
        SolutionConcept::Weber,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolutionConcept::Shapley => "shapley",
            SolutionConcept::Tau => "tau",
            SolutionConcept::Nucleolus => "nucleolus",
            SolutionConcept::Kernel => "kernel",
            SolutionConcept::Prekernel => "prekernel",
            SolutionConcept::Core => "core",
            SolutionConcept::Weber => "weber",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SolutionConcept::Shapley => "φ",
            SolutionConcept::Tau => "τ",
            SolutionConcept::Nucleolus => "η",
            SolutionConcept::Kernel => "K",
            SolutionConcept::Prekernel => "K*",
            SolutionConcept::Core => "C",
            SolutionConcept::Weber => "W",
        }
    }

    /// Shapley, τ and nucleolus always return one point.
    pub fn is_one_point(self) -> bool {
        matches!(self, SolutionConcept::Shapley | SolutionConcept::Tau | SolutionConcept::Nucleolus)
    }
}

impl fmt::Display for SolutionConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolutionConcept {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SolutionConcept::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown solution concept `{s}`"))
    }
}

/// How a weak solution compares to the imputation set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RelationLabel {
    EqualsImputationSet,
    StrictSuperset,
    SupersetOrEqual,
    StrictSubset,
    Empty,
}

impl RelationLabel {
    pub fn symbol(self) -> &'static str {
        match self {
            RelationLabel::EqualsImputationSet => "=",
            RelationLabel::StrictSuperset => "⊋",
            RelationLabel::SupersetOrEqual => "⊇",
            RelationLabel::StrictSubset => "⊊",
            RelationLabel::Empty => "∅",
        }
    }

    /// Labels whose weak solution never leaves `I(v)`.
    pub fn within_imputation_set(self) -> bool {
        matches!(self, RelationLabel::EqualsImputationSet | RelationLabel::StrictSubset)
    }

    pub fn name(self) -> &'static str {
        match self {
            RelationLabel::EqualsImputationSet => "EqualsImputationSet",
            RelationLabel::StrictSuperset => "StrictSuperset",
            RelationLabel::SupersetOrEqual => "SupersetOrEqual",
            RelationLabel::StrictSubset => "StrictSubset",
            RelationLabel::Empty => "Empty",
        }
    }
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

use ExtensionClass as Class;
use RelationLabel::*;
use SolutionConcept as Sc;

/// The relation table as it is usually printed. Kept for comparison; rows
/// `C` and `S` contain entries that do not hold (see [`certified_weak_relation`]).
pub fn published_weak_relation(class: ExtensionClass, concept: SolutionConcept) -> RelationLabel {
    match (class, concept) {
        (Class::OneConvex, Sc::Shapley | Sc::Weber) => StrictSuperset,
        (Class::OneConvex, Sc::Prekernel) => SupersetOrEqual,
        (Class::OneConvex, _) => EqualsImputationSet,
        (Class::Superadditive, Sc::Shapley | Sc::Weber) => SupersetOrEqual,
        (Class::Superadditive, _) => EqualsImputationSet,
        (Class::Convex, _) => EqualsImputationSet,
        (Class::Positive, Sc::Core | Sc::Weber) => EqualsImputationSet,
        (Class::Positive, _) => StrictSubset,
    }
}

/// Relation of the weak solution to `I(v)` for `n ≥ 4` and `Δ > 0`.
///
/// Differs from the printed table in row `C` (φ, τ, η, K, K* are strict
/// subsets: `I^k` is never reached by a convex extension) and row `S`
/// (φ is a strict subset, W is equal).
pub fn certified_weak_relation(class: ExtensionClass, concept: SolutionConcept) -> RelationLabel {
    match (class, concept) {
        (Class::OneConvex, Sc::Shapley | Sc::Weber) => StrictSuperset,
        (Class::OneConvex, Sc::Prekernel) => SupersetOrEqual,
        (Class::OneConvex, _) => EqualsImputationSet,
        (Class::Superadditive, Sc::Shapley) => StrictSubset,
        (Class::Superadditive, _) => EqualsImputationSet,
        (Class::Convex | Class::Positive, Sc::Core | Sc::Weber) => EqualsImputationSet,
        (Class::Convex | Class::Positive, _) => StrictSubset,
    }
}

/// [`certified_weak_relation`] adjusted to the size and surplus of `ig`.
///
/// With `Δ = 0` the imputation set is one point; only 1-convex extensions
/// with rays (`n ≥ 4`) can leave it. With three players there are no rays,
/// so the 1-convex Shapley values fill a shrunken simplex and the marginal
/// vectors stay in `I(v)`. With two players the extension is unique.
pub fn certified_weak_relation_for(
    ig: &MinimalIncompleteGame,
    class: ExtensionClass,
    concept: SolutionConcept,
) -> RelationLabel {
    let n = ig.players();
    let one_convex_rays = class == Class::OneConvex && n >= 4;
    if ig.delta().is_zero() {
        return match concept {
            Sc::Shapley | Sc::Weber if one_convex_rays => StrictSuperset,
            Sc::Prekernel if one_convex_rays => SupersetOrEqual,
            _ => EqualsImputationSet,
        };
    }
    match n {
        1 => EqualsImputationSet,
        2 => match concept {
            Sc::Core | Sc::Weber => EqualsImputationSet,
            _ => StrictSubset,
        },
        3 => match (class, concept) {
            (Class::OneConvex, Sc::Shapley) => StrictSubset,
            (Class::OneConvex, Sc::Weber) => EqualsImputationSet,
            _ => certified_weak_relation(class, concept),
        },
        _ => certified_weak_relation(class, concept),
    }
}

/// `I(v) = conv{I^k}`; empty when `Δ < 0`.
pub fn imputation_set(ig: &MinimalIncompleteGame) -> Polytope {
    let n = ig.players();
    if ig.delta().is_negative() {
        return Polytope::empty(n);
    }
    Polytope::from_points(n, (0..n).map(|k| imputation_i_k(ig, k).expect("player in range")))
}

/// Exact test that `x` lies in the convex hull of `p`'s vertices plus its cone.
pub fn hull_membership(p: &Polytope, x: &PayoffVector) -> bool {
    p.contains(x)
}

/// A concept evaluated on one complete game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConceptValue {
    Point(PayoffVector),
    Set(Polytope),
    /// τ on a game that is not quasi-balanced.
    Undefined(String),
}

impl ConceptValue {
    /// Points contributed to a cloud: the value itself or the set's vertices.
    pub fn points(&self) -> Vec<PayoffVector> {
        match self {
            ConceptValue::Point(x) => vec![x.clone()],
            ConceptValue::Set(p) => p.vertices().to_vec(),
            ConceptValue::Undefined(_) => Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ConceptValue::Point(x) => json!({ "type": "point", "value": x.to_strings() }),
            ConceptValue::Set(p) => json!({ "type": "set", "vertices": p.to_json().vertices, "rays": p.to_json().rays }),
            ConceptValue::Undefined(reason) => json!({ "type": "undefined", "reason": reason }),
        }
    }
}

/// Evaluates `concept` on `v`. Kernel and prekernel are represented by the
/// nucleolus, which always belongs to both.
pub fn evaluate(v: &Game, concept: SolutionConcept) -> Result<ConceptValue, SolutionError> {
    Ok(match concept {
        Sc::Shapley => ConceptValue::Point(solutions::shapley(v)),
        Sc::Tau => match solutions::tau(v) {
            Ok(x) => ConceptValue::Point(x),
            Err(SolutionError::NotQuasiBalanced) => ConceptValue::Undefined("game is not quasi-balanced".into()),
            Err(e) => return Err(e),
        },
        Sc::Nucleolus | Sc::Kernel | Sc::Prekernel => ConceptValue::Point(solutions::nucleolus(v)?),
        Sc::Core => ConceptValue::Set(solutions::core_polytope(v)?),
        Sc::Weber => ConceptValue::Set(solutions::weber_polytope(v)?),
    })
}

/// Parameters of one sampled extension; replaying them rebuilds the game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionWeights {
    /// `w_A = Σ α_T v_T`.
    Positive(WeightsA),
    /// Additive plus `Δ Σ α_T u_T`; convex for any singleton signs.
    Surplus(WeightsA),
    /// `w_{α,β}`.
    OneConvex(WeightsAlphaBeta),
    /// `λ·surplus(A) + (1 − λ)·w_α`; superadditive.
    Mixture {
        lambda: Rational,
        surplus: WeightsA,
        alpha: Vec<Rational>,
    },
}

impl ExtensionWeights {
    pub fn build(&self, ig: &MinimalIncompleteGame) -> Result<Game, IncompleteError> {
        match self {
            ExtensionWeights::Positive(a) => extension_w_a(ig, a),
            ExtensionWeights::Surplus(a) => Ok(surplus_family_game(ig, a)),
            ExtensionWeights::OneConvex(w) => extension_w_alpha_beta(ig, w),
            ExtensionWeights::Mixture { lambda, surplus, alpha } => {
                let first = surplus_family_game(ig, surplus);
                let second = extension_w_alpha(ig, alpha)?;
                Ok(linear_combination(&[first, second], &[lambda.clone(), Rational::one() - lambda])
                    .expect("same player count"))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExtensionWeights::Positive(a) => json!({ "family": "positive", "weights": a.to_json() }),
            ExtensionWeights::Surplus(a) => json!({ "family": "surplus", "weights": a.to_json() }),
            ExtensionWeights::OneConvex(w) => json!({ "family": "one_convex", "weights": w.to_json() }),
            ExtensionWeights::Mixture { lambda, surplus, alpha } => json!({
                "family": "mixture",
                "lambda": format_rational(lambda),
                "surplus": surplus.to_json(),
                "alpha": alpha.iter().map(format_rational).collect::<Vec<_>>(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledPoint {
    pub index: usize,
    pub weights: ExtensionWeights,
    pub value: ConceptValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionRegion {
    Certified {
        class: ExtensionClass,
        concept: SolutionConcept,
        relation: RelationLabel,
        base: Polytope,
    },
    Sampled {
        class: ExtensionClass,
        concept: SolutionConcept,
        seed: u64,
        /// Convex and superadditive samples only cover known families.
        inner_approximation: bool,
        points: Vec<SampledPoint>,
    },
}

impl SolutionRegion {
    /// Every point produced by the samples, sorted and deduplicated.
    pub fn cloud(&self) -> Vec<PayoffVector> {
        match self {
            SolutionRegion::Certified { base, .. } => base.vertices().to_vec(),
            SolutionRegion::Sampled { points, .. } => {
                let mut all: Vec<PayoffVector> = points.iter().flat_map(|p| p.value.points()).collect();
                all.sort_by(|a, b| a.0.cmp(&b.0));
                all.dedup();
                all
            }
        }
    }

    /// Convex hull of the cloud.
    pub fn hull(&self) -> Polytope {
        let n = match self {
            SolutionRegion::Certified { base, .. } => base.dim(),
            SolutionRegion::Sampled { points, .. } => points
                .iter()
                .flat_map(|p| p.value.points())
                .map(|x| x.len())
                .next()
                .unwrap_or(0),
        };
        Polytope::from_points(n, self.cloud())
    }

    pub fn to_json(&self) -> Value {
        match self {
            SolutionRegion::Certified {
                class,
                concept,
                relation,
                base,
            } => json!({
                "kind": "certified",
                "class": class.label(),
                "concept": concept.name(),
                "relation": relation.name(),
                "symbol": relation.symbol(),
                "published": published_weak_relation(*class, *concept).name(),
                "vertices": base.to_json().vertices,
                "points": [],
            }),
            SolutionRegion::Sampled {
                class,
                concept,
                seed,
                inner_approximation,
                points,
            } => json!({
                "kind": "sampled",
                "class": class.label(),
                "concept": concept.name(),
                "seed": seed,
                "inner_approximation": inner_approximation,
                "vertices": self.cloud().iter().map(PayoffVector::to_strings).collect::<Vec<_>>(),
                "points": points.iter().map(|p| json!({
                    "index": p.index,
                    "weights": p.weights.to_json(),
                    "value": p.value.to_json(),
                })).collect::<Vec<_>>(),
            }),
        }
    }
}

pub fn certified_region(
    ig: &MinimalIncompleteGame,
    class: ExtensionClass,
    concept: SolutionConcept,
) -> Result<SolutionRegion, ApproxError> {
    if !is_extendable(ig, class) {
        return Err(IncompleteError::NotExtendable(class).into());
    }
    Ok(SolutionRegion::Certified {
        class,
        concept,
        relation: certified_weak_relation_for(ig, class, concept),
        base: imputation_set(ig),
    })
}

fn indicator(n: usize, t: Coalition) -> WeightsA {
    WeightsA::indicator(n, t).expect("coalition in N1")
}

fn random_lambda<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(0..=12).into(), 12.into())
}

fn random_alpha<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    random_weights_alpha_beta(rng, n, 0).alpha().to_vec()
}

/// Deterministic list of structured extensions for `class`, tried before
/// random draws: vertices of the family, then scaled rays.
fn structured_weights(ig: &MinimalIncompleteGame, class: ExtensionClass) -> Vec<ExtensionWeights> {
    let n = ig.players();
    match class {
        Class::Positive => n1_coalitions(n)
            .into_iter()
            .rev()
            .map(|t| ExtensionWeights::Positive(indicator(n, t)))
            .collect(),
        Class::Convex => n1_coalitions(n)
            .into_iter()
            .rev()
            .map(|t| ExtensionWeights::Surplus(indicator(n, t)))
            .collect(),
        Class::OneConvex => {
            let scale = ig.delta() + Rational::one();
            let mut out: Vec<ExtensionWeights> = (0..n)
                .map(|k| ExtensionWeights::OneConvex(WeightsAlphaBeta::vertex(n, k)))
                .collect();
            for t in e_coalitions(n) {
                let alpha = WeightsAlphaBeta::uniform(n).alpha().to_vec();
                let w = WeightsAlphaBeta::new(alpha, [(t, scale.clone())].into_iter().collect())
                    .expect("ray index in E");
                out.push(ExtensionWeights::OneConvex(w));
            }
            out
        }
        Class::Superadditive => {
            let grand = Coalition::grand(n);
            let mut out: Vec<ExtensionWeights> = n1_coalitions(n)
                .into_iter()
                .rev()
                .map(|t| ExtensionWeights::Surplus(indicator(n, t)))
                .collect();
            if n >= 2 {
                out.extend((0..n).map(|k| ExtensionWeights::Mixture {
                    lambda: Rational::zero(),
                    surplus: indicator(n, grand),
                    alpha: WeightsAlphaBeta::vertex(n, k).alpha().to_vec(),
                }));
            }
            out
        }
    }
}

fn random_weights<R: Rng>(rng: &mut R, ig: &MinimalIncompleteGame, class: ExtensionClass) -> ExtensionWeights {
    let n = ig.players();
    match class {
        Class::Positive => ExtensionWeights::Positive(random_weights_a(rng, n)),
        Class::Convex => ExtensionWeights::Surplus(random_weights_a(rng, n)),
        Class::OneConvex => {
            let max_beta = 3 * (ig.delta().ceil().to_integer().try_into().unwrap_or(i64::MAX / 8).max(1));
            ExtensionWeights::OneConvex(random_weights_alpha_beta(rng, n, max_beta))
        }
        Class::Superadditive => ExtensionWeights::Mixture {
            lambda: random_lambda(rng),
            surplus: random_weights_a(rng, n),
            alpha: random_alpha(rng, n),
        },
    }
}

/// Weights of sample `index`: the structured list first, then seeded draws
/// from stream `index` of `seed`.
pub fn sample_weights(ig: &MinimalIncompleteGame, class: ExtensionClass, seed: u64, index: usize) -> ExtensionWeights {
    let structured = structured_weights(ig, class);
    if let Some(w) = structured.get(index) {
        return w.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    random_weights(&mut rng, ig, class)
}

/// Samples `count` extensions of `class` and evaluates `concept` on each.
/// Deterministic for a given seed whatever the thread count.
pub fn sample_weak_solution(
    ig: &MinimalIncompleteGame,
    class: ExtensionClass,
    concept: SolutionConcept,
    count: usize,
    seed: u64,
) -> Result<SolutionRegion, ApproxError> {
    if !is_extendable(ig, class) {
        return Err(IncompleteError::NotExtendable(class).into());
    }
    if ig.players() < 2 {
        return Err(ApproxError::TooFewPlayers { n: ig.players(), min: 2 });
    }
    let points = (0..count)
        .into_par_iter()
        .map(|index| {
            let weights = sample_weights(ig, class, seed, index);
            let game = weights.build(ig)?;
            debug_assert!(class.contains(&game), "sampled game left its class");
            let value = evaluate(&game, concept)?;
            Ok(SampledPoint { index, weights, value })
        })
        .collect::<Result<Vec<_>, ApproxError>>()?;
    Ok(SolutionRegion::Sampled {
        class,
        concept,
        seed,
        inner_approximation: matches!(class, Class::Convex | Class::Superadditive),
        points,
    })
}

/// Why the intersection over all extensions is what it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongSolution {
    /// The class has a single extension.
    Degenerate { extension: Game, value: ConceptValue },
    /// Every extension has this value.
    Constant { value: ConceptValue, reason: &'static str },
    Empty(StrongCertificate),
    /// No certificate either way.
    Unresolved { reason: &'static str },
}

/// Where a one-point representative stands for a whole set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingletonBasis {
    /// The concept is one point by definition.
    OnePoint,
    /// Convex games: prekernel = kernel = {nucleolus}.
    Convex,
    /// Superadditive 1-convex games: prekernel = kernel = {nucleolus}.
    SuperadditiveOneConvex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongCertificate {
    /// Two extensions whose concept values are distinct single points.
    DistinctPoints {
        concept: SolutionConcept,
        basis: SingletonBasis,
        extensions: [Game; 2],
        values: [PayoffVector; 2],
    },
    /// Extensions whose solution sets share no point.
    DisjointSets {
        concept: SolutionConcept,
        extensions: Vec<Game>,
        sets: Vec<Polytope>,
    },
}

fn single_point(v: &Game, concept: SolutionConcept) -> Option<PayoffVector> {
    match evaluate(v, concept).ok()? {
        ConceptValue::Point(x) => Some(x),
        _ => None,
    }
}

impl StrongCertificate {
    /// Re-evaluates everything from the stored games.
    pub fn verify(&self, ig: &MinimalIncompleteGame, class: ExtensionClass) -> bool {
        match self {
            StrongCertificate::DistinctPoints {
                concept,
                basis,
                extensions,
                values,
            } => {
                let basis_holds = |w: &Game| match basis {
                    SingletonBasis::OnePoint => concept.is_one_point(),
                    SingletonBasis::Convex => w.is_convex(),
                    SingletonBasis::SuperadditiveOneConvex => w.is_superadditive() && w.is_one_convex(),
                };
                values[0] != values[1]
                    && extensions.iter().zip(values).all(|(w, x)| {
                        ig.agrees_with(w)
                            && class.contains(w)
                            && basis_holds(w)
                            && single_point(w, *concept).as_ref() == Some(x)
                            && (concept.is_one_point()
                                || (solutions::is_in_prekernel(x, w) && solutions::is_in_kernel(x, w)))
                    })
            }
            StrongCertificate::DisjointSets {
                concept,
                extensions,
                sets,
            } => {
                extensions.len() == sets.len()
                    && extensions.iter().zip(sets).all(|(w, p)| {
                        ig.agrees_with(w)
                            && class.contains(w)
                            && matches!(evaluate(w, *concept), Ok(ConceptValue::Set(q)) if q.same_hull(p))
                    })
                    && !polytopes_intersect(&sets.iter().collect::<Vec<_>>())
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            StrongCertificate::DistinctPoints {
                concept,
                basis,
                extensions,
                values,
            } => json!({
                "type": "distinct_points",
                "concept": concept.name(),
                "basis": basis,
                "extensions": extensions.iter().map(Game::to_json).collect::<Vec<_>>(),
                "values": values.iter().map(PayoffVector::to_strings).collect::<Vec<_>>(),
            }),
            StrongCertificate::DisjointSets {
                concept,
                extensions,
                sets,
            } => json!({
                "type": "disjoint_sets",
                "concept": concept.name(),
                "extensions": extensions.iter().map(Game::to_json).collect::<Vec<_>>(),
                "sets": sets.iter().map(Polytope::to_json).collect::<Vec<_>>(),
            }),
        }
    }
}

impl StrongSolution {
    pub fn is_empty(&self) -> bool {
        matches!(self, StrongSolution::Empty(_))
    }

    pub fn to_json(&self, ig: &MinimalIncompleteGame, class: ExtensionClass) -> Value {
        match self {
            StrongSolution::Degenerate { extension, value } => json!({
                "kind": "degenerate",
                "extension": extension.to_json(),
                "value": value.to_json(),
            }),
            StrongSolution::Constant { value, reason } => json!({
                "kind": "constant",
                "reason": reason,
                "value": value.to_json(),
            }),
            StrongSolution::Empty(cert) => json!({
                "kind": "empty",
                "certificate": cert.to_json(),
                "verified": cert.verify(ig, class),
            }),
            StrongSolution::Unresolved { reason } => json!({ "kind": "unresolved", "reason": reason }),
        }
    }
}

/// The unique extension when `n ≤ 2` or `Δ = 0`: additive below `N`.
fn only_extension(ig: &MinimalIncompleteGame) -> Game {
    let n = ig.players();
    let grand = Coalition::grand(n);
    Game::from_fn(n, |s| {
        if s == grand {
            ig.grand().clone()
        } else {
            s.players().map(|i| ig.singleton(i)).sum()
        }
    })
    .expect("valid player count")
}

fn extension_count_is_one(ig: &MinimalIncompleteGame, class: ExtensionClass) -> bool {
    let n = ig.players();
    n <= 2 || (ig.delta().is_zero() && (class != Class::OneConvex || n <= 3))
}

fn distinct(
    concept: SolutionConcept,
    basis: SingletonBasis,
    first: Game,
    second: Game,
) -> Result<StrongSolution, ApproxError> {
    let a = single_point(&first, concept).ok_or(ApproxError::UnsupportedConcept(concept))?;
    let b = single_point(&second, concept).ok_or(ApproxError::UnsupportedConcept(concept))?;
    Ok(StrongSolution::Empty(StrongCertificate::DistinctPoints {
        concept,
        basis,
        extensions: [first, second],
        values: [a, b],
    }))
}

fn disjoint(concept: SolutionConcept, extensions: Vec<Game>) -> Result<StrongSolution, ApproxError> {
    let sets = extensions
        .iter()
        .map(|w| match evaluate(w, concept)? {
            ConceptValue::Set(p) => Ok(p),
            _ => Err(ApproxError::UnsupportedConcept(concept)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StrongSolution::Empty(StrongCertificate::DisjointSets {
        concept,
        extensions,
        sets,
    }))
}

/// The strong solution `∩_{w} concept(w)` over the extensions in `class`,
/// with a certificate when it is empty.
pub fn certified_strong_solution(
    ig: &MinimalIncompleteGame,
    class: ExtensionClass,
    concept: SolutionConcept,
) -> Result<StrongSolution, ApproxError> {
    if !is_extendable(ig, class) {
        return Err(IncompleteError::NotExtendable(class).into());
    }
    let n = ig.players();
    if extension_count_is_one(ig, class) {
        let extension = only_extension(ig);
        let value = evaluate(&extension, concept)?;
        return Ok(StrongSolution::Degenerate { extension, value });
    }
    let basis = if concept.is_one_point() {
        SingletonBasis::OnePoint
    } else if class == Class::OneConvex {
        SingletonBasis::SuperadditiveOneConvex
    } else {
        SingletonBasis::Convex
    };
    if class == Class::OneConvex {
        if ig.delta().is_zero() {
            // n ≥ 4: τ = η = core = {v}, and v sits in every Weber set.
            let additive = only_extension(ig);
            return match concept {
                Sc::Shapley => {
                    let t = e_coalitions(n)[0];
                    let alpha = WeightsAlphaBeta::vertex(n, 0).alpha().to_vec();
                    let ray = WeightsAlphaBeta::new(alpha, [(t, Rational::one())].into_iter().collect())?;
                    distinct(concept, basis, additive, extension_w_alpha_beta(ig, &ray)?)
                }
                Sc::Prekernel => Ok(StrongSolution::Unresolved {
                    reason: "prekernels of 1-convex games with rays are not pinned down",
                }),
                Sc::Weber => Ok(StrongSolution::Constant {
                    value: ConceptValue::Point(imputation_i_k(ig, 0)?),
                    reason: "every core is {v} and cores lie in Weber sets",
                }),
                _ => Ok(StrongSolution::Constant {
                    value: evaluate(&additive, concept)?,
                    reason: "τ, nucleolus, kernel and core of every w_{α,β} equal I^α = v",
                }),
            };
        }
        let v0 = extreme_v_k(ig, 0)?;
        let v1 = extreme_v_k(ig, 1)?;
        return match concept {
            Sc::Core => disjoint(concept, vec![v0, v1]),
            // Every W(v^k) is all of I(v) and no disjoint family is known.
            Sc::Weber => Ok(StrongSolution::Unresolved {
                reason: "no family of 1-convex extensions with disjoint Weber sets is known",
            }),
            _ => distinct(concept, basis, v0, v1),
        };
    }
    let pair = |a: usize, b: usize| surplus_family_game(ig, &indicator(n, Coalition::from_players([a, b])));
    match concept {
        Sc::Core | Sc::Weber => disjoint(concept, vec![pair(0, 1), pair(0, 2), pair(1, 2)]),
        _ => distinct(concept, basis, pair(0, 1), pair(0, 2)),
    }
}

/// Machine-checkable evidence about weak and strong solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A 1-convex extension whose Shapley value gives `player` less than `bound`.
    UnboundedShapley {
        weights: WeightsAlphaBeta,
        extension: Game,
        player: usize,
        bound: Rational,
        value: Rational,
    },
    /// No positive extension has `concept` value `I^k`: each player `i ≠ k`
    /// gives a row `c_{i,T}` over `T ∈ N1` with `c ≥ 0`, and the concept
    /// value equals `I^k` only if `Σ_T α_T c_{i,T} = 0` for every row. Every
    /// column having a positive entry forces `α = 0`, contradicting `Σ α = 1`.
    ExcludedImputation {
        k: usize,
        concept: SolutionConcept,
        coalitions: Vec<Coalition>,
        rows: Vec<(usize, Vec<Rational>)>,
    },
    /// A positive extension whose core misses `I^α`.
    StrongCoreEmpty {
        alpha: Vec<Rational>,
        weights: WeightsA,
        extension: Game,
        coalition: Coalition,
        excess: Rational,
    },
}

/// Builds `w_{α,β}` with `φ_player < bound` from a single ray on a pair
/// containing `player`.
pub fn unbounded_weak_shapley_witness(
    ig: &MinimalIncompleteGame,
    player: usize,
    bound: &Rational,
) -> Result<Witness, ApproxError> {
    let n = ig.players();
    if player >= n {
        return Err(IncompleteError::PlayerOutOfRange(player).into());
    }
    if n < 4 {
        return Err(ApproxError::NoRaysAvailable(n));
    }
    if !is_extendable(ig, Class::OneConvex) {
        return Err(IncompleteError::NotExtendable(Class::OneConvex).into());
    }
    let other = if player == 0 { 1 } else { 0 };
    let alpha = WeightsAlphaBeta::vertex(n, other).alpha().to_vec();
    let base = shapley_of_w_alpha_beta(ig, &WeightsAlphaBeta::alpha_only(alpha.clone())?)?;
    let weights = if &base[player] < bound {
        WeightsAlphaBeta::alpha_only(alpha)?
    } else {
        // φ_i drops by β_S / (n(n−1)) for S = {i, other}.
        let scale = Rational::from_integer(((n * (n - 1)) as i64).into());
        let beta = scale * (&base[player] - bound) + Rational::one();
        let s = Coalition::from_players([player, other]);
        WeightsAlphaBeta::new(alpha, [(s, beta)].into_iter().collect())?
    };
    let extension = extension_w_alpha_beta(ig, &weights)?;
    let value = shapley_of_w_alpha_beta(ig, &weights)?[player].clone();
    Ok(Witness::UnboundedShapley {
        weights,
        extension,
        player,
        bound: bound.clone(),
        value,
    })
}

fn excluded_row(
    ig: &MinimalIncompleteGame,
    concept: SolutionConcept,
    k: usize,
    i: usize,
    t: Coalition,
) -> Result<Rational, ApproxError> {
    let n = ig.players();
    let v_t = extension_w_a(ig, &indicator(n, t))?;
    let size = Rational::from_integer((t.size() as i64).into());
    Ok(match concept {
        Sc::Shapley => &solutions::shapley(&v_t)[i] - ig.singleton(i),
        Sc::Tau => size * (&solutions::tau(&v_t)?[i] - ig.singleton(i)),
        Sc::Prekernel => -excess(Coalition::grand(n).without(i), &imputation_i_k(ig, k)?, &v_t),
        other => return Err(ApproxError::UnsupportedConcept(other)),
    })
}

/// Certificate that `I^k` is not the Shapley value, τ-value or a prekernel
/// point of any positive extension.
pub fn excluded_imputation_certificate(
    ig: &MinimalIncompleteGame,
    concept: SolutionConcept,
    k: usize,
) -> Result<Witness, ApproxError> {
    let n = ig.players();
    if k >= n {
        return Err(IncompleteError::PlayerOutOfRange(k).into());
    }
    if !matches!(concept, Sc::Shapley | Sc::Tau | Sc::Prekernel) {
        return Err(ApproxError::UnsupportedConcept(concept));
    }
    if !is_extendable(ig, Class::Positive) {
        return Err(IncompleteError::NotExtendable(Class::Positive).into());
    }
    if !ig.delta().is_positive() {
        return Err(ApproxError::ZeroExcess);
    }
    if n < 2 {
        return Err(ApproxError::TooFewPlayers { n, min: 2 });
    }
    let coalitions = n1_coalitions(n);
    let rows = (0..n)
        .filter(|&i| i != k)
        .map(|i| {
            let row = coalitions
                .iter()
                .map(|&t| excluded_row(ig, concept, k, i, t))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((i, row))
        })
        .collect::<Result<Vec<_>, ApproxError>>()?;
    Ok(Witness::ExcludedImputation {
        k,
        concept,
        coalitions,
        rows,
    })
}

/// The pair whose surplus game blocks `I^α`: `{1,2}` if `α_1 + α_2 < 1`,
/// else `{3,4}`, else the first pair with weight below one.
fn blocking_pair(alpha: &[Rational]) -> Option<Coalition> {
    let n = alpha.len();
    let below = |i: usize, j: usize| &alpha[i] + &alpha[j] < Rational::one();
    let preferred = [(0, 1), (2, 3)].into_iter().filter(|&(_, j)| j < n);
    preferred
        .chain((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        .find(|&(i, j)| below(i, j))
        .map(|(i, j)| Coalition::from_players([i, j]))
}

/// A positive extension `w_A` with `A` the indicator of a pair, whose core
/// excludes `I^α`.
pub fn strong_core_emptiness_witness(ig: &MinimalIncompleteGame, alpha: &[Rational]) -> Result<Witness, ApproxError> {
    let n = ig.players();
    if n < 3 {
        return Err(ApproxError::TooFewPlayers { n, min: 3 });
    }
    if !is_extendable(ig, Class::Positive) {
        return Err(IncompleteError::NotExtendable(Class::Positive).into());
    }
    if !ig.delta().is_positive() {
        return Err(ApproxError::ZeroExcess);
    }
    let x = imputation_i_alpha(ig, alpha)?;
    let coalition = blocking_pair(alpha).expect("three weights cannot pairwise sum to one");
    let weights = indicator(n, coalition);
    let extension = extension_w_a(ig, &weights)?;
    let excess = excess(coalition, &x, &extension);
    Ok(Witness::StrongCoreEmpty {
        alpha: alpha.to_vec(),
        weights,
        extension,
        coalition,
        excess,
    })
}

impl Witness {
    /// Re-derives every claimed quantity exactly.
    pub fn verify(&self, ig: &MinimalIncompleteGame) -> bool {
        match self {
            Witness::UnboundedShapley {
                weights,
                extension,
                player,
                bound,
                value,
            } => {
                let Ok(rebuilt) = extension_w_alpha_beta(ig, weights) else {
                    return false;
                };
                let phi = if extension.players() <= MAX_BRUTE_SHAPLEY_PLAYERS {
                    brute_shapley(extension).expect("within limit")
                } else {
                    solutions::shapley(extension)
                };
                &rebuilt == extension
                    && extension.is_one_convex()
                    && ig.agrees_with(extension)
                    && phi[*player] == *value
                    && value < bound
            }
            Witness::ExcludedImputation {
                k,
                concept,
                coalitions,
                rows,
            } => {
                let Ok(Witness::ExcludedImputation {
                    coalitions: c2,
                    rows: r2,
                    ..
                }) = excluded_imputation_certificate(ig, *concept, *k)
                else {
                    return false;
                };
                let nonnegative = rows.iter().all(|(_, r)| r.iter().all(|c| !c.is_negative()));
                let covered = (0..coalitions.len()).all(|j| rows.iter().any(|(_, r)| r[j].is_positive()));
                &c2 == coalitions && &r2 == rows && nonnegative && covered
            }
            Witness::StrongCoreEmpty {
                alpha,
                weights,
                extension,
                coalition,
                excess: claimed,
            } => {
                let Ok(x) = imputation_i_alpha(ig, alpha) else {
                    return false;
                };
                let Ok(rebuilt) = extension_w_a(ig, weights) else {
                    return false;
                };
                &rebuilt == extension
                    && extension.is_positive()
                    && ig.agrees_with(extension)
                    && excess(*coalition, &x, extension) == *claimed
                    && claimed.is_positive()
            }
        }
    }

    pub fn to_json(&self, ig: &MinimalIncompleteGame) -> Value {
        let verified = self.verify(ig);
        match self {
            Witness::UnboundedShapley {
                weights,
                extension,
                player,
                bound,
                value,
            } => json!({
                "kind": "unbounded_shapley",
                "player": player + 1,
                "bound": format_rational(bound),
                "value": format_rational(value),
                "weights": weights.to_json(),
                "extension": extension.to_json(),
                "verified": verified,
            }),
            Witness::ExcludedImputation {
                k,
                concept,
                coalitions,
                rows,
            } => json!({
                "kind": "excluded_imputation",
                "k": k + 1,
                "concept": concept.name(),
                "coalitions": coalitions,
                "rows": rows.iter().map(|(i, r)| json!({
                    "player": i + 1,
                    "coefficients": r.iter().map(format_rational).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "verified": verified,
            }),
            Witness::StrongCoreEmpty {
                alpha,
                weights,
                extension,
                coalition,
                excess,
            } => json!({
                "kind": "strong_core_empty",
                "alpha": alpha.iter().map(format_rational).collect::<Vec<_>>(),
                "weights": weights.to_json(),
                "extension": extension.to_json(),
                "coalition": coalition,
                "excess": format_rational(excess),
                "verified": verified,
            }),
        }
    }
}
