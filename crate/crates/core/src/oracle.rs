//! Brute-force reference implementations and seeded random generators.
//! Everything here is exponential and meant for small `n`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coalition::Coalition;
use crate::game::{Dividends, Game, PayoffVector};
use crate::incomplete::{
    e_coalitions, extension_w_alpha_beta, n1_coalitions, MinimalIncompleteGame, WeightsA, WeightsAlphaBeta,
};
use crate::lp::{LinearProgram, PivotRule};
use crate::polytope::Polytope;
use crate::rational::Rational;
use crate::solutions::{excess, marginal_vector, Permutation};

pub const MAX_BRUTE_SHAPLEY_PLAYERS: usize = 8;
pub const MAX_BRUTE_PLAYERS: usize = 6;
pub const REJECTION_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n} players exceeds the oracle limit of {max}")]
    TooManyPlayers { n: usize, max: usize },
    #[error("imputation set is empty")]
    EmptyImputationSet,
    #[error("no {family:?} game found after {attempts} attempts")]
    RejectionBudgetExhausted { family: GameFamily, attempts: usize },
    #[error("player count must be at least 1")]
    NoPlayers,
}

fn limit(n: usize, max: usize) -> Result<(), OracleError> {
    if n > max {
        Err(OracleError::TooManyPlayers { n, max })
    } else {
        Ok(())
    }
}

/// `(1/n!) Σ_σ m_σ`.
pub fn brute_shapley(v: &Game) -> Result<PayoffVector, OracleError> {
    let n = v.players();
    limit(n, MAX_BRUTE_SHAPLEY_PLAYERS)?;
    let mut acc = vec![Rational::zero(); n];
    let mut count = 0u64;
    for sigma in Permutation::all(n) {
        let m = marginal_vector(v, &sigma).expect("length matches");
        for (a, x) in acc.iter_mut().zip(m.0) {
            *a += x;
        }
        count += 1;
    }
    let count = Rational::from_integer(count.into());
    Ok(PayoffVector(acc.into_iter().map(|a| a / &count).collect()))
}

/// A square system of coalition rows (the last one is always `N`) with
/// `adj = d · M⁻¹`.
struct Basis {
    rows: Vec<Coalition>,
    adj: Vec<Vec<i64>>,
    det: i64,
}

/// Fraction-free Gauss–Jordan on `[M | I]`; returns `(d, d·M⁻¹)`.
fn integer_inverse(m: &[Vec<i64>]) -> Option<(i64, Vec<Vec<i64>>)> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
            r.extend((0..n).map(|j| i128::from(i == j)));
            r
        })
        .collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        let pivot = (k..n).find(|&r| a[r][k] != 0)?;
        a.swap(k, pivot);
        let pk = a[k][k];
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[i][k];
            for j in 0..2 * n {
                a[i][j] = (pk * a[i][j] - f * a[k][j]) / prev;
            }
        }
        prev = pk;
    }
    let d = prev;
    let adj = a
        .iter()
        .map(|row| row[n..].iter().map(|&x| x as i64).collect())
        .collect();
    Some((d as i64, adj))
}

fn indicator_row(s: Coalition, n: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(s.contains(i))).collect()
}

fn make_basis(chosen: &[Coalition], n: usize) -> Option<Basis> {
    let mut rows: Vec<Coalition> = chosen.to_vec();
    rows.push(Coalition::grand(n));
    let m: Vec<Vec<i64>> = rows.iter().map(|&s| indicator_row(s, n)).collect();
    let (det, adj) = integer_inverse(&m)?;
    Some(Basis { rows, adj, det })
}

fn proper_coalitions(n: usize) -> Vec<Coalition> {
    let grand = Coalition::grand(n);
    Coalition::all(n).skip(1).filter(|&s| s != grand).collect()
}

/// All nonsingular bases for `n ≤ 5`, computed once.
fn cached_bases(n: usize) -> &'static [Basis] {
    static CACHE: [OnceLock<Vec<Basis>>; 6] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    CACHE[n].get_or_init(|| {
        proper_coalitions(n)
            .into_iter()
            .combinations(n - 1)
            .filter_map(|chosen| make_basis(&chosen, n))
            .collect()
    })
}

/// Integer data of the core system scaled by a common denominator.
struct ScaledGame {
    n: usize,
    scale: BigInt,
    rhs: Vec<BigInt>,
}

impl ScaledGame {
    fn new(v: &Game) -> Self {
        let scale = v
            .values()
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let rhs = v
            .values()
            .iter()
            .map(|x| x.numer() * (&scale / x.denom()))
            .collect();
        ScaledGame {
            n: v.players(),
            scale,
            rhs,
        }
    }

    /// Vertex of the core at `basis`, if feasible.
    fn vertex(&self, basis: &Basis) -> Option<PayoffVector> {
        let n = self.n;
        let b: Vec<BigInt> = basis.rows.iter().map(|s| self.rhs[s.index()].clone()).collect();
        let x: Vec<BigInt> = (0..n)
            .map(|i| {
                basis.adj[i]
                    .iter()
                    .zip(&b)
                    .fold(BigInt::zero(), |acc, (a, bj)| acc + bj * BigInt::from(*a))
            })
            .collect();
        let d = BigInt::from(basis.det);
        let positive = d.is_positive();
        for s in Coalition::all(n).skip(1) {
            let lhs = s.players().fold(BigInt::zero(), |acc, i| acc + &x[i]);
            let diff = lhs - &d * &self.rhs[s.index()];
            if (positive && diff.is_negative()) || (!positive && diff.is_positive()) {
                return None;
            }
        }
        let denom = &d * &self.scale;
        Some(PayoffVector(
            x.into_iter().map(|xi| Rational::new(xi, denom.clone())).collect(),
        ))
    }
}

/// Core vertices by enumerating every square subsystem of the core
/// constraints that contains efficiency. Independent of the double
/// description code.
pub fn brute_core_vertices(v: &Game) -> Result<Polytope, OracleError> {
    let n = v.players();
    limit(n, MAX_BRUTE_PLAYERS)?;
    let scaled = ScaledGame::new(v);
    if n == 1 {
        return Ok(Polytope::point(PayoffVector(vec![v.grand_value().clone()])));
    }
    let points: Vec<PayoffVector> = if n <= 5 {
        cached_bases(n).iter().filter_map(|b| scaled.vertex(b)).collect()
    } else {
        proper_coalitions(n)
            .into_iter()
            .combinations(n - 1)
            .filter_map(|chosen| make_basis(&chosen, n))
            .filter_map(|b| scaled.vertex(&b))
            .collect()
    };
    Ok(Polytope::from_points(n, points))
}

/// Lexicographic excess minimization over the imputation set with payoffs
/// as free variables and the Dantzig pivot rule. Stops once the optimal
/// face is a single point, checked coordinate-wise.
pub fn brute_nucleolus(v: &Game) -> Result<PayoffVector, OracleError> {
    let n = v.players();
    limit(n, MAX_BRUTE_PLAYERS)?;
    let singles = v.singleton_values();
    let total: Rational = singles.iter().sum();
    if total > *v.grand_value() {
        return Err(OracleError::EmptyImputationSet);
    }
    let rule = PivotRule::Dantzig;
    let coalitions = proper_coalitions(n);
    let mut fixed: Vec<(Coalition, Rational)> = Vec::new();
    let mut open: Vec<Coalition> = coalitions.clone();

    // x_0..x_{n-1} free, t at index n (free).
    let base_lp = |fixed: &[(Coalition, Rational)]| {
        let mut lp = LinearProgram::new(n + 1);
        for j in 0..=n {
            lp.set_free(j);
        }
        let mut eff = vec![Rational::one(); n];
        eff.push(Rational::zero());
        lp.add_eq(eff, v.grand_value().clone());
        for (i, vi) in singles.iter().enumerate() {
            let mut row = vec![Rational::zero(); n + 1];
            row[i] = Rational::one();
            lp.add_ge(row, vi.clone());
        }
        for (s, e) in fixed {
            // x(S) = v(S) − e
            lp.add_eq(row_x(*s, n, Rational::zero()), v.value(*s) - e);
        }
        lp
    };

    loop {
        let mut lp = base_lp(&fixed);
        for &s in &open {
            // v(S) − x(S) ≤ t  ⇔  x(S) + t ≥ v(S)
            lp.add_ge(row_x(s, n, Rational::one()), v.value(s).clone());
        }
        let mut obj = vec![Rational::zero(); n + 1];
        obj[n] = Rational::one();
        lp.minimize(obj);
        let (level, point) = lp.solve_with(rule).optimal().expect("level LP is solvable");
        let x = PayoffVector(point[..n].to_vec());

        let mut face = base_lp(&fixed);
        for &s in &open {
            face.add_ge(row_x(s, n, Rational::zero()), v.value(s) - &level);
        }
        let mut newly = Vec::new();
        for &s in open.iter().filter(|&&s| excess(s, &x, v) == level) {
            let mut f = face.clone();
            // minimize e(S) ⇔ maximize x(S) ⇔ minimize −x(S)
            f.minimize(row_x(s, n, Rational::zero()).into_iter().map(|c| -c).collect());
            let (val, _) = f.solve_with(rule).optimal().expect("face is nonempty and bounded");
            if v.value(s) + val == level {
                newly.push(s);
            }
        }
        assert!(!newly.is_empty(), "a coalition is tight on the whole optimal face");
        open.retain(|s| !newly.contains(s));
        fixed.extend(newly.into_iter().map(|s| (s, level.clone())));

        let mut check = base_lp(&fixed);
        for &s in &open {
            check.add_ge(row_x(s, n, Rational::zero()), v.value(s) - &level);
        }
        if open.is_empty() || is_single_point(&check, n, rule) {
            return Ok(x);
        }
    }
}

fn row_x(s: Coalition, n: usize, t: Rational) -> Vec<Rational> {
    let mut row: Vec<Rational> = (0..n)
        .map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() })
        .collect();
    row.push(t);
    row
}

fn is_single_point(lp: &LinearProgram, n: usize, rule: PivotRule) -> bool {
    (0..n).all(|i| {
        let mut lo = lp.clone();
        let mut obj = vec![Rational::zero(); n + 1];
        obj[i] = Rational::one();
        lo.minimize(obj.clone());
        let mut hi = lp.clone();
        hi.minimize(obj.into_iter().map(|c| -c).collect());
        let (a, _) = lo.solve_with(rule).optimal().expect("bounded");
        let (b, _) = hi.solve_with(rule).optimal().expect("bounded");
        a == -b
    })
}

/// Family of games a generator draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameFamily {
    Any,
    Positive,
    Convex,
    Superadditive,
    OneConvex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: GameFamily,
    pub n: usize,
    pub seed: u64,
    /// Numerators are drawn from `-max_numerator..=max_numerator`.
    pub max_numerator: i64,
    /// Denominators are drawn from `1..=max_denominator`.
    pub max_denominator: i64,
}

impl GeneratorSpec {
    pub fn new(family: GameFamily, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            family,
            n,
            seed,
            max_numerator: 10,
            max_denominator: 4,
        }
    }
}

pub fn random_rational<R: Rng>(rng: &mut R, max_numerator: i64, max_denominator: i64) -> Rational {
    let num = rng.gen_range(-max_numerator..=max_numerator);
    let den = rng.gen_range(1..=max_denominator.max(1));
    Rational::new(num.into(), den.into())
}

fn random_nonnegative<R: Rng>(rng: &mut R, max_numerator: i64, max_denominator: i64) -> Rational {
    random_rational(rng, max_numerator, max_denominator).abs()
}

/// A random point of the open simplex: positive integers normalized.
pub fn random_simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<Rational> {
    let raw: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=100)).collect();
    let total: i64 = raw.iter().sum();
    raw.into_iter()
        .map(|x| Rational::new(x.into(), total.into()))
        .collect()
}

/// A random simplex point supported on a random nonempty subset.
pub fn random_sparse_simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<Rational> {
    let mut idx: Vec<usize> = (0..k).collect();
    idx.shuffle(rng);
    let support = rng.gen_range(1..=k);
    let weights = random_simplex(rng, support);
    let mut out = vec![Rational::zero(); k];
    for (j, w) in idx.into_iter().take(support).zip(weights) {
        out[j] = w;
    }
    out
}

pub fn random_weights_a<R: Rng>(rng: &mut R, n: usize) -> WeightsA {
    let all = n1_coalitions(n);
    let w = random_sparse_simplex(rng, all.len());
    WeightsA::new(n, all.into_iter().zip(w).collect()).expect("valid simplex weights")
}

pub fn random_weights_alpha_beta<R: Rng>(rng: &mut R, n: usize, max_beta: i64) -> WeightsAlphaBeta {
    let alpha = random_sparse_simplex(rng, n);
    let mut beta: BTreeMap<Coalition, Rational> = BTreeMap::new();
    for t in e_coalitions(n) {
        if rng.gen_bool(0.5) {
            beta.insert(t, random_nonnegative(rng, max_beta, 3));
        }
    }
    WeightsAlphaBeta::new(alpha, beta).expect("valid weights")
}

/// Constraints on a generated incomplete game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSign {
    Positive,
    NonNegative,
    Any,
}

pub fn random_incomplete_game<R: Rng>(
    rng: &mut R,
    n: usize,
    nonnegative_singletons: bool,
    delta: DeltaSign,
) -> MinimalIncompleteGame {
    let singletons: Vec<Rational> = (0..n)
        .map(|_| {
            let x = random_rational(rng, 6, 3);
            if nonnegative_singletons {
                x.abs()
            } else {
                x
            }
        })
        .collect();
    let sum: Rational = singletons.iter().sum();
    let d = match delta {
        DeltaSign::Positive => Rational::new(rng.gen_range(1..=20).into(), rng.gen_range(1..=3).into()),
        DeltaSign::NonNegative => random_nonnegative(rng, 12, 3),
        DeltaSign::Any => random_rational(rng, 12, 3),
    };
    MinimalIncompleteGame::new(singletons, sum + d).expect("n ≥ 1")
}

fn positive_dividends<R: Rng>(rng: &mut R, spec: &GeneratorSpec) -> Game {
    let d = Dividends::from_fn(spec.n, |_| {
        if rng.gen_bool(0.6) {
            random_nonnegative(rng, spec.max_numerator, spec.max_denominator)
        } else {
            Rational::zero()
        }
    })
    .expect("valid n");
    Game::from_dividends(&d)
}

fn signed_additive<R: Rng>(rng: &mut R, spec: &GeneratorSpec) -> Vec<Rational> {
    (0..spec.n)
        .map(|_| random_rational(rng, spec.max_numerator, spec.max_denominator))
        .collect()
}

/// Adds `c(S)` and `noise(S)` to every coalition of `base`.
fn shifted(base: &Game, c: &[Rational], noise: impl Fn(Coalition) -> Rational) -> Game {
    Game::from_fn(base.players(), |s| {
        base.value(s) + s.players().fold(Rational::zero(), |acc, i| acc + &c[i]) + noise(s)
    })
    .expect("valid n")
}

/// Seeded game of the requested family; the family is confirmed by the
/// class predicates before returning.
pub fn generate(spec: &GeneratorSpec) -> Result<Game, OracleError> {
    let n = spec.n;
    if n == 0 {
        return Err(OracleError::NoPlayers);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let game = match spec.family {
        GameFamily::Any => Game::from_fn(n, |_| random_rational(&mut rng, spec.max_numerator, spec.max_denominator))
            .expect("valid n"),
        GameFamily::Positive => positive_dividends(&mut rng, spec),
        GameFamily::Convex => {
            // positive + modular + symmetric supermodular, then a perturbation
            // off the known coalitions that is kept only if still convex
            let base = positive_dividends(&mut rng, spec);
            let c = signed_additive(&mut rng, spec);
            let steps: Vec<Rational> = (0..n)
                .map(|_| random_nonnegative(&mut rng, spec.max_numerator, spec.max_denominator))
                .collect();
            let mut f = vec![Rational::zero(); n + 1];
            let mut inc = Rational::zero();
            for k in 1..=n {
                inc += &steps[k - 1];
                f[k] = &f[k - 1] + &inc - &steps[0];
            }
            let convex = shifted(&base, &c, |s| f[s.size()].clone());
            let grand = Coalition::grand(n);
            let mut result = convex.clone();
            for _ in 0..REJECTION_BUDGET.min(64) {
                let noise: Vec<Rational> = Coalition::all(n)
                    .map(|s| {
                        if s.size() >= 2 && s != grand {
                            random_rational(&mut rng, 2, 4)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                let candidate = shifted(&convex, &vec![Rational::zero(); n], |s| noise[s.index()].clone());
                if candidate.is_convex() {
                    result = candidate;
                    break;
                }
            }
            result
        }
        GameFamily::Superadditive => {
            let base = positive_dividends(&mut rng, spec);
            let c = signed_additive(&mut rng, spec);
            let grand = Coalition::grand(n);
            let mut found = None;
            for attempt in 0..REJECTION_BUDGET {
                // noise amplitude shrinks to zero, where the candidate is
                // positive plus modular and thus superadditive
                let amp = (spec.max_numerator - (attempt as i64) / 8).max(0);
                let noise: Vec<Rational> = Coalition::all(n)
                    .map(|s| {
                        if s.size() >= 2 && s != grand && amp > 0 {
                            random_rational(&mut rng, amp, spec.max_denominator)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                let candidate = shifted(&base, &c, |s| noise[s.index()].clone());
                if candidate.is_superadditive() {
                    found = Some(candidate);
                    break;
                }
            }
            found.ok_or(OracleError::RejectionBudgetExhausted {
                family: spec.family,
                attempts: REJECTION_BUDGET,
            })?
        }
        GameFamily::OneConvex => {
            let ig = random_incomplete_game(&mut rng, n, false, DeltaSign::NonNegative);
            let w = random_weights_alpha_beta(&mut rng, n, spec.max_numerator);
            extension_w_alpha_beta(&ig, &w).expect("Δ ≥ 0")
        }
    };
    let ok = match spec.family {
        GameFamily::Any => true,
        GameFamily::Positive => game.is_positive(),
        GameFamily::Convex => game.is_convex(),
        GameFamily::Superadditive => game.is_superadditive(),
        GameFamily::OneConvex => game.is_one_convex(),
    };
    if ok {
        Ok(game)
    } else {
        Err(OracleError::RejectionBudgetExhausted {
            family: spec.family,
            attempts: 1,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::solutions;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn integer_inverse_is_adjugate() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]];
        let (d, adj) = integer_inverse(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let p: i64 = (0..3).map(|k| m[i][k] * adj[k][j]).sum();
                assert_eq!(p, if i == j { d } else { 0 });
            }
        }
        assert!(integer_inverse(&[vec![1, 1], vec![1, 1]]).is_none());
    }

    #[test]
    fn brute_shapley_examples() {
        let c = Coalition::from_players([0, 1]);
        let u = Game::unanimity(3, c).unwrap();
        assert_eq!(brute_shapley(&u).unwrap(), PayoffVector(vec![ratio(1, 2), ratio(1, 2), int(0)]));
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(brute_shapley(&add).unwrap(), PayoffVector(ints(&[3, -1, 2])));
    }

    #[test]
    fn brute_core_examples() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(brute_core_vertices(&add).unwrap().vertices(), &[PayoffVector(ints(&[3, -1, 2]))]);
        let mut values = vec![int(0); 8];
        for s in Coalition::all(3).filter(|s| s.size() >= 2) {
            values[s.index()] = int(1);
        }
        assert!(brute_core_vertices(&Game::new(3, values).unwrap()).unwrap().is_empty());
        for seed in 0..10 {
            let v = generate(&GeneratorSpec::new(GameFamily::Any, 4, seed)).unwrap();
            let dd = solutions::core_polytope(&v).unwrap();
            assert_eq!(brute_core_vertices(&v).unwrap().vertices(), dd.vertices(), "seed {seed}");
        }
    }

    #[test]
    fn brute_core_on_one_convex_games() {
        for seed in 0..10 {
            let v = generate(&GeneratorSpec::new(GameFamily::OneConvex, 4, seed)).unwrap();
            let b = v.upper_vector();
            let g = b.total() - v.grand_value();
            let core = brute_core_vertices(&v).unwrap();
            for x in core.vertices() {
                assert!((0..4).any(|i| {
                    let mut y = b.clone();
                    y.0[i] -= &g;
                    &y == x
                }));
            }
        }
    }

    #[test]
    fn brute_nucleolus_matches_main() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(brute_nucleolus(&add).unwrap(), PayoffVector(ints(&[3, -1, 2])));
        for seed in 0..15 {
            let v = generate(&GeneratorSpec::new(GameFamily::Any, 4, seed)).unwrap();
            match solutions::nucleolus(&v) {
                Ok(eta) => assert_eq!(brute_nucleolus(&v).unwrap(), eta, "seed {seed}"),
                Err(_) => assert_eq!(brute_nucleolus(&v), Err(OracleError::EmptyImputationSet)),
            }
        }
    }

    #[test]
    fn generators_respect_family_and_seed() {
        for family in [
            GameFamily::Any,
            GameFamily::Positive,
            GameFamily::Convex,
            GameFamily::Superadditive,
            GameFamily::OneConvex,
        ] {
            for n in 1..=5 {
                let spec = GeneratorSpec::new(family, n, 7);
                let a = generate(&spec).unwrap();
                assert_eq!(a, generate(&spec).unwrap());
            }
        }
        let p = generate(&GeneratorSpec::new(GameFamily::Positive, 4, 7)).unwrap();
        assert!(p.is_positive());
        let c = generate(&GeneratorSpec::new(GameFamily::OneConvex, 5, 1)).unwrap();
        assert!(c.is_one_convex());
    }

    #[test]
    fn convex_generator_produces_non_positive_games() {
        let non_positive = (0..40)
            .filter(|&seed| !generate(&GeneratorSpec::new(GameFamily::Convex, 4, seed)).unwrap().is_positive())
            .count();
        assert!(non_positive > 0);
        let non_convex = (0..40)
            .filter(|&seed| !generate(&GeneratorSpec::new(GameFamily::Superadditive, 4, seed)).unwrap().is_convex())
            .count();
        assert!(non_convex > 0);
    }

    #[test]
    fn simplex_points_are_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 1..6 {
            let s = random_sparse_simplex(&mut rng, k);
            assert_eq!(s.iter().sum::<Rational>(), int(1));
            assert!(s.iter().all(|x| !x.is_negative()));
        }
    }
}
