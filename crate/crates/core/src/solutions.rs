//! Classical solution concepts on complete games.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coalition::Coalition;
use crate::game::{Game, PayoffVector};
use crate::lp::{LinearProgram, PivotRule};
use crate::polytope::{HRep, Polytope};
use crate::rational::{factorial, Rational};

/// Vertex enumeration of cores and Weber sets is limited to this many players.
pub const MAX_POLYTOPE_PLAYERS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("no convex combination of the lower and upper vectors is efficient")]
    NotQuasiBalanced,
    #[error("imputation set is empty: singleton values exceed the grand coalition value")]
    EmptyImputationSet,
    #[error("maximal surplus needs two distinct players, got {0} twice")]
    SamePlayer(usize),
    #[error("{n} players exceeds the limit of {max} for this operation")]
    TooManyPlayers { n: usize, max: usize },
    #[error("payoff vector has {got} entries for a {expected}-player game")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

/// An ordering of the players; `order[k]` is the player in position `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<usize>,
}

impl Permutation {
    pub fn new(order: Vec<usize>) -> Result<Self, SolutionError> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &p in &order {
            if p >= n || seen[p] {
                return Err(SolutionError::InvalidPermutation(format!("{order:?}")));
            }
            seen[p] = true;
        }
        Ok(Permutation { order })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (0..n).collect(),
        }
    }

    /// All `n!` orderings, lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|order| Permutation { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, player: usize) -> usize {
        self.order.iter().position(|&p| p == player).expect("player in permutation")
    }

    /// Players ordered before `player`.
    pub fn predecessors(&self, player: usize) -> Coalition {
        Coalition::from_players(self.order[..self.position(player)].iter().copied())
    }
}

fn check_len(v: &Game, x: &PayoffVector) -> Result<(), SolutionError> {
    if x.len() == v.players() {
        Ok(())
    } else {
        Err(SolutionError::DimensionMismatch {
            expected: v.players(),
            got: x.len(),
        })
    }
}

/// `φ_i = Σ_{S⊆N∖i} s!(n−s−1)!/n! · (v(S∪i) − v(S))`.
pub fn shapley(v: &Game) -> PayoffVector {
    let n = v.players();
    let n_fact = Rational::from_integer(factorial(n));
    let weights: Vec<Rational> = (0..n)
        .map(|s| Rational::from_integer(factorial(s) * factorial(n - s - 1)) / &n_fact)
        .collect();
    let grand = v.grand_coalition();
    let phi = (0..n)
        .map(|i| {
            grand.without(i).subsets().fold(Rational::zero(), |acc, s| {
                acc + &weights[s.size()] * (v.value(s.with(i)) - v.value(s))
            })
        })
        .collect();
    PayoffVector(phi)
}

/// `m_i = v(P_i ∪ i) − v(P_i)` with `P_i` the predecessors of `i`.
pub fn marginal_vector(v: &Game, sigma: &Permutation) -> Result<PayoffVector, SolutionError> {
    if sigma.len() != v.players() {
        return Err(SolutionError::InvalidPermutation(format!(
            "length {} for {} players",
            sigma.len(),
            v.players()
        )));
    }
    let mut m = vec![Rational::zero(); v.players()];
    let mut before = Coalition::EMPTY;
    for &i in sigma.order() {
        let after = before.with(i);
        m[i] = v.value(after) - v.value(before);
        before = after;
    }
    Ok(PayoffVector(m))
}

/// The efficient point on the segment between the lower and upper vectors.
pub fn tau(v: &Game) -> Result<PayoffVector, SolutionError> {
    let a = v.lower_vector();
    let b = v.upper_vector();
    let grand = v.grand_value();
    let (a_total, b_total) = (a.total(), b.total());
    if a_total > *grand || *grand > b_total {
        return Err(SolutionError::NotQuasiBalanced);
    }
    if a_total == b_total {
        return if a == b && a_total == *grand {
            Ok(a)
        } else {
            Err(SolutionError::NotQuasiBalanced)
        };
    }
    // λ·a(N) + (1 − λ)·b(N) = v(N)
    let lambda = (&b_total - grand) / (&b_total - &a_total);
    if lambda.is_negative() || lambda > Rational::one() {
        return Err(SolutionError::NotQuasiBalanced);
    }
    let rest = Rational::one() - &lambda;
    Ok(PayoffVector(
        a.0.iter().zip(&b.0).map(|(ai, bi)| &lambda * ai + &rest * bi).collect(),
    ))
}

/// Closed form for convex games: `b` when `g(N) = 0`, otherwise
/// `b_i − g(N)/Σ_j g(j) · g(i)`.
pub fn tau_convex(v: &Game) -> PayoffVector {
    let b = v.upper_vector();
    let g_grand = b.total() - v.grand_value();
    if g_grand.is_zero() {
        return b;
    }
    let gaps: Vec<Rational> = (0..v.players())
        .map(|i| &b[i] - v.singleton_value(i))
        .collect();
    let g_sum: Rational = gaps.iter().fold(Rational::zero(), |acc, g| acc + g);
    PayoffVector(
        b.0.iter()
            .zip(&gaps)
            .map(|(bi, gi)| bi - &g_grand / &g_sum * gi)
            .collect(),
    )
}

/// Closed form for 1-convex games: `τ_i = b_i − g(N)/n`.
pub fn tau_one_convex(v: &Game) -> PayoffVector {
    let b = v.upper_vector();
    let share = (b.total() - v.grand_value()) / Rational::from_integer(v.players().into());
    PayoffVector(b.0.iter().map(|bi| bi - &share).collect())
}

/// `e(S, x) = v(S) − x(S)`.
pub fn excess(s: Coalition, x: &PayoffVector, v: &Game) -> Rational {
    v.value(s) - x.coalition_sum(s)
}

/// `s_ij(x) = max { e(S, x) : i ∈ S, j ∉ S }`.
pub fn max_surplus(i: usize, j: usize, x: &PayoffVector, v: &Game) -> Result<Rational, SolutionError> {
    check_len(v, x)?;
    if i == j {
        return Err(SolutionError::SamePlayer(i));
    }
    let rest = v.grand_coalition().without(i).without(j);
    Ok(rest
        .subsets()
        .map(|s| excess(s.with(i), x, v))
        .max()
        .expect("at least {i} is admissible"))
}

fn surplus_table(x: &PayoffVector, v: &Game) -> Vec<Vec<Rational>> {
    let n = v.players();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::zero()
                    } else {
                        max_surplus(i, j, x, v).expect("distinct players")
                    }
                })
                .collect()
        })
        .collect()
}

pub fn is_imputation(x: &PayoffVector, v: &Game) -> bool {
    x.len() == v.players()
        && x.total() == *v.grand_value()
        && (0..v.players()).all(|i| x[i] >= *v.singleton_value(i))
}

/// Preimputation with balanced pairwise surpluses.
pub fn is_in_prekernel(x: &PayoffVector, v: &Game) -> bool {
    if x.len() != v.players() || x.total() != *v.grand_value() {
        return false;
    }
    let s = surplus_table(x, v);
    let n = v.players();
    (0..n).all(|i| ((i + 1)..n).all(|j| s[i][j] == s[j][i]))
}

/// Imputation where a player may out-surplus another only if the other is
/// already held at its singleton value.
pub fn is_in_kernel(x: &PayoffVector, v: &Game) -> bool {
    if !is_imputation(x, v) {
        return false;
    }
    let s = surplus_table(x, v);
    let n = v.players();
    (0..n).all(|i| {
        (0..n).all(|j| {
            i == j || !((&s[i][j] - &s[j][i]) * (&x[j] - v.singleton_value(j))).is_positive()
        })
    })
}

/// First coalition with `x(S) < v(S)`, after checking efficiency.
pub fn core_violation(x: &PayoffVector, v: &Game) -> Option<Coalition> {
    if x.total() != *v.grand_value() {
        return Some(v.grand_coalition());
    }
    Coalition::all(v.players())
        .skip(1)
        .find(|&s| excess(s, x, v).is_positive())
}

pub fn is_in_core(x: &PayoffVector, v: &Game) -> bool {
    x.len() == v.players() && core_violation(x, v).is_none()
}

/// `{x : x(N) = v(N), x(S) ≥ v(S)}` with no vertex enumeration.
pub fn core_hrep(v: &Game) -> HRep {
    let n = v.players();
    let grand = v.grand_coalition();
    let indicator = |s: Coalition| -> Vec<Rational> {
        (0..n).map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() }).collect()
    };
    let mut h = HRep::new(n);
    h.add_equality(indicator(grand), v.grand_value().clone())
        .expect("dimension matches");
    for s in Coalition::all(n).skip(1).filter(|&s| s != grand) {
        h.add_inequality(indicator(s), v.value(s).clone())
            .expect("dimension matches");
    }
    h
}

/// V-representation of the core, with its H-representation attached.
/// 1-convex games use the closed form `conv{b − g(N)e_i}`.
pub fn core_polytope(v: &Game) -> Result<Polytope, SolutionError> {
    let n = v.players();
    if n > MAX_POLYTOPE_PLAYERS {
        return Err(SolutionError::TooManyPlayers {
            n,
            max: MAX_POLYTOPE_PLAYERS,
        });
    }
    let h = core_hrep(v);
    if v.is_one_convex() {
        let b = v.upper_vector();
        let g = b.total() - v.grand_value();
        let points = (0..n).map(|i| {
            let mut x = b.clone();
            x.0[i] -= &g;
            x
        });
        return Ok(Polytope::from_points(n, points).with_hrep(h));
    }
    Ok(h.to_vrep().expect("core constraints always have full column rank"))
}

/// Hull of all `n!` marginal vectors, deduplicated.
pub fn weber_polytope(v: &Game) -> Result<Polytope, SolutionError> {
    let n = v.players();
    if n > MAX_POLYTOPE_PLAYERS {
        return Err(SolutionError::TooManyPlayers {
            n,
            max: MAX_POLYTOPE_PLAYERS,
        });
    }
    let points = Permutation::all(n).map(|sigma| marginal_vector(v, &sigma).expect("length matches"));
    Ok(Polytope::from_points(n, points))
}

/// Excesses of all `2^n` coalitions, sorted non-increasingly. Profiles
/// compare lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExcessProfile(pub Vec<Rational>);

pub fn excess_profile(x: &PayoffVector, v: &Game) -> ExcessProfile {
    let mut e: Vec<Rational> = Coalition::all(v.players()).map(|s| excess(s, x, v)).collect();
    e.sort_by(|a, b| b.cmp(a));
    ExcessProfile(e)
}

pub fn nucleolus(v: &Game) -> Result<PayoffVector, SolutionError> {
    nucleolus_with(v, PivotRule::Bland)
}

/// Lexicographic minimization of the excess profile over the imputation
/// set by a sequence of exact LPs. Each level minimizes the largest
/// unsettled excess `t`; coalitions whose excess equals `t` on the whole
/// optimal face are fixed, together with every coalition whose indicator
/// becomes linearly dependent on the fixed ones.
pub fn nucleolus_with(v: &Game, rule: PivotRule) -> Result<PayoffVector, SolutionError> {
    let n = v.players();
    let singles = PayoffVector(v.singleton_values());
    let surplus = v.grand_value() - singles.total();
    if surplus.is_negative() {
        return Err(SolutionError::EmptyImputationSet);
    }
    if n == 1 {
        return Ok(PayoffVector(vec![v.grand_value().clone()]));
    }
    let grand = v.grand_coalition();
    let mut span = Span::new(n);
    span.insert(grand);
    let mut settled: Vec<(Coalition, Rational)> = Vec::new();
    let mut unsettled: Vec<Coalition> = Coalition::all(n).skip(1).filter(|&s| s != grand).collect();

    // Variables: y_i = x_i − v(i) ≥ 0 for i < n, then t (free).
    let indicator_y = |s: Coalition, t_coeff: i64| -> Vec<Rational> {
        let mut row: Vec<Rational> = (0..n)
            .map(|i| if s.contains(i) { -Rational::one() } else { Rational::zero() })
            .collect();
        row.push(Rational::from_integer(t_coeff.into()));
        row
    };
    // e(S, x) = v(S) − v_singles(S) − y(S)
    let base = |s: Coalition| v.value(s) - singles.coalition_sum(s);

    loop {
        let mut lp = LinearProgram::new(n + 1);
        lp.set_free(n);
        let mut obj = vec![Rational::zero(); n + 1];
        obj[n] = Rational::one();
        lp.minimize(obj);
        let mut efficiency = vec![Rational::one(); n];
        efficiency.push(Rational::zero());
        lp.add_eq(efficiency, surplus.clone());
        for (s, c) in &settled {
            // base(S) − y(S) = c
            lp.add_eq(indicator_y(*s, 0), c - base(*s));
        }
        for &s in &unsettled {
            // base(S) − y(S) ≤ t
            lp.add_le(indicator_y(s, -1), -base(s));
        }
        let (level, point) = lp
            .solve_with(rule)
            .optimal()
            .expect("level LP is feasible and bounded on a nonempty imputation set");
        let x = PayoffVector(
            (0..n).map(|i| &point[i] + &singles[i]).collect(),
        );
        let tight: Vec<Coalition> = unsettled.iter().copied().filter(|&s| excess(s, &x, v) == level).collect();
        let fixed: Vec<Coalition> = if tight.len() == 1 {
            tight
        } else {
            tight
                .into_iter()
                .filter(|&s| always_tight(v, n, &surplus, &settled, &unsettled, s, &level, rule, &base))
                .collect()
        };
        assert!(!fixed.is_empty(), "some coalition is tight on the whole optimal face");
        for s in fixed {
            settled.push((s, level.clone()));
            span.insert(s);
        }
        if span.rank() == n {
            return Ok(x);
        }
        unsettled.retain(|&s| !span.contains(s));
    }
}

/// Whether `target` has excess `level` at every point of the optimal face.
#[allow(clippy::too_many_arguments)]
fn always_tight(
    v: &Game,
    n: usize,
    surplus: &Rational,
    settled: &[(Coalition, Rational)],
    unsettled: &[Coalition],
    target: Coalition,
    level: &Rational,
    rule: PivotRule,
    base: &dyn Fn(Coalition) -> Rational,
) -> bool {
    let _ = v;
    let row = |s: Coalition| -> Vec<Rational> {
        (0..n)
            .map(|i| if s.contains(i) { -Rational::one() } else { Rational::zero() })
            .collect()
    };
    let mut lp = LinearProgram::new(n);
    // minimize e(target) ⇔ minimize −y(target)
    lp.minimize(row(target));
    lp.add_eq(vec![Rational::one(); n], surplus.clone());
    for (s, c) in settled {
        lp.add_eq(row(*s), c - base(*s));
    }
    for &s in unsettled {
        lp.add_le(row(s), level - base(s));
    }
    let (value, _) = lp.solve_with(rule).optimal().expect("optimal face is nonempty and bounded");
    value + base(target) == *level
}

/// Row-echelon basis of coalition indicator vectors.
struct Span {
    n: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    fn new(n: usize) -> Self {
        Span { n, rows: Vec::new() }
    }

    fn reduce(&self, s: Coalition) -> Vec<Rational> {
        let mut r: Vec<Rational> = (0..self.n)
            .map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() })
            .collect();
        for (pivot, e) in &self.rows {
            if !r[*pivot].is_zero() {
                let f = &r[*pivot] / &e[*pivot];
                for (x, y) in r.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    fn contains(&self, s: Coalition) -> bool {
        self.reduce(s).iter().all(Zero::is_zero)
    }

    fn insert(&mut self, s: Coalition) {
        let r = self.reduce(s);
        if let Some(pivot) = r.iter().position(|x| !x.is_zero()) {
            self.rows.push((pivot, r));
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().map(|p| p - 1))
    }

    fn pv(xs: &[Rational]) -> PayoffVector {
        PayoffVector(xs.to_vec())
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn example_game() -> Game {
        // v(1)=1, v(2)=v(3)=0, v(12)=2, v(13)=1, v(23)=1, v(N)=3
        Game::new(3, ints(&[0, 1, 0, 2, 0, 1, 1, 3])).unwrap()
    }

    /// Average of marginal vectors over all orderings.
    fn permutation_average(v: &Game) -> PayoffVector {
        let n = v.players();
        let mut acc = vec![Rational::zero(); n];
        let mut count = 0i64;
        for sigma in Permutation::all(n) {
            let m = marginal_vector(v, &sigma).unwrap();
            for (a, b) in acc.iter_mut().zip(m.0) {
                *a += b;
            }
            count += 1;
        }
        PayoffVector(acc.into_iter().map(|a| a / int(count)).collect())
    }

    #[test]
    fn shapley_examples() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert_eq!(shapley(&u12), pv(&[ratio(1, 2), ratio(1, 2), int(0)]));
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(shapley(&add), pv(&ints(&[3, -1, 2])));
        let v = example_game();
        let phi = shapley(&v);
        assert_eq!(phi, permutation_average(&v));
        // Dividends d1 = d12 = d23 = 1, all others 0.
        assert_eq!(phi, pv(&[ratio(3, 2), int(1), ratio(1, 2)]));
    }

    #[test]
    fn marginal_vector_examples() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let m = marginal_vector(&u12, &Permutation::identity(3)).unwrap();
        assert_eq!(m, pv(&ints(&[0, 1, 0])));
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        for sigma in Permutation::all(3) {
            assert_eq!(marginal_vector(&add, &sigma).unwrap(), pv(&ints(&[3, -1, 2])));
        }
        let single = Game::new(1, ints(&[0, 7])).unwrap();
        assert_eq!(marginal_vector(&single, &Permutation::identity(1)).unwrap(), pv(&ints(&[7])));
    }

    #[test]
    fn permutation_validation_and_predecessors() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.predecessors(1), c(&[1, 3]));
        assert_eq!(p.predecessors(2), Coalition::EMPTY);
        assert_eq!(Permutation::all(4).count(), 24);
    }

    #[test]
    fn tau_examples() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(tau(&add).unwrap(), pv(&ints(&[3, -1, 2])));
        // u_N: b = (1,1,1), a = (0,0,0), λ = 2/3.
        let un = Game::unanimity(3, Coalition::grand(3)).unwrap();
        let third = ratio(1, 3);
        assert_eq!(tau(&un).unwrap(), pv(&[third.clone(), third.clone(), third]));
        assert_eq!(tau_one_convex(&un), tau(&un).unwrap());
        assert_eq!(tau_convex(&un), tau(&un).unwrap());
    }

    #[test]
    fn tau_rejects_non_quasi_balanced() {
        // v(1) = v(2) = 1, v(N) = 1: b = (0, 0), a = (1, 1), so a(N) > v(N).
        let v = Game::new(2, ints(&[0, 1, 1, 1])).unwrap();
        assert_eq!(tau(&v), Err(SolutionError::NotQuasiBalanced));
    }

    #[test]
    fn excess_and_surplus() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let x = pv(&[ratio(1, 2), ratio(1, 2), int(0)]);
        assert_eq!(excess(Coalition::EMPTY, &x, &u12), int(0));
        assert_eq!(excess(c(&[1, 2]), &x, &u12), int(0));
        let v2 = Game::new(2, ints(&[0, 2, 1, 5])).unwrap();
        let y = pv(&ints(&[3, 2]));
        assert_eq!(max_surplus(0, 1, &y, &v2).unwrap(), excess(c(&[1]), &y, &v2));
        assert_eq!(max_surplus(1, 1, &y, &v2), Err(SolutionError::SamePlayer(1)));
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        let xc = pv(&ints(&[3, -1, 2]));
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(max_surplus(i, j, &xc, &add).unwrap(), int(0));
                }
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        let xc = pv(&ints(&[3, -1, 2]));
        assert!(is_in_prekernel(&xc, &add));
        assert!(is_in_kernel(&xc, &add));
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let x = pv(&ints(&[1, 0, 0]));
        // s_12 = max over S∋1, 2∉S: e({1}) = −1, e({1,3}) = −1 ; s_21 = e({2}) = 0.
        assert!(!is_in_prekernel(&x, &u12));
        let eta = nucleolus(&u12).unwrap();
        assert!(is_in_prekernel(&eta, &u12));
        assert!(is_in_kernel(&eta, &u12));
    }

    #[test]
    fn core_membership() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert!(is_in_core(&pv(&ints(&[3, -1, 2])), &add));
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert!(is_in_core(&pv(&[ratio(1, 2), ratio(1, 2), int(0)]), &u12));
        let bad = pv(&ints(&[0, 0, 1]));
        assert!(!is_in_core(&bad, &u12));
        assert_eq!(core_violation(&bad, &u12), Some(c(&[1, 2])));
    }

    #[test]
    fn core_polytope_examples() {
        let un2 = Game::unanimity(2, Coalition::grand(2)).unwrap();
        let core = core_polytope(&un2).unwrap();
        assert_eq!(core.vertices(), &[pv(&ints(&[0, 1])), pv(&ints(&[1, 0]))]);
        // Same via double description on the H-representation.
        let dd = core_hrep(&un2).to_vrep().unwrap();
        assert_eq!(dd.vertices(), core.vertices());

        let mut values = vec![int(0); 8];
        for s in Coalition::all(3).filter(|s| s.size() >= 2) {
            values[s.index()] = int(1);
        }
        let empty = Game::new(3, values).unwrap();
        assert!(core_polytope(&empty).unwrap().is_empty());
        assert!(!core_hrep(&empty).is_feasible());
    }

    #[test]
    fn weber_polytope_examples() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(weber_polytope(&add).unwrap().vertices(), &[pv(&ints(&[3, -1, 2]))]);
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let w = weber_polytope(&u12).unwrap();
        assert_eq!(w.vertices(), &[pv(&ints(&[0, 1, 0])), pv(&ints(&[1, 0, 0]))]);
        assert!(w.same_hull(&core_polytope(&u12).unwrap()));
    }

    #[test]
    fn nucleolus_examples() {
        let add = Game::additive(&ints(&[3, -1, 2])).unwrap();
        assert_eq!(nucleolus(&add).unwrap(), pv(&ints(&[3, -1, 2])));
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert_eq!(nucleolus(&u12).unwrap(), pv(&[ratio(1, 2), ratio(1, 2), int(0)]));
        let v = Game::new(2, ints(&[0, 2, 2, 1])).unwrap();
        assert_eq!(nucleolus(&v), Err(SolutionError::EmptyImputationSet));
        let one = Game::new(1, ints(&[0, 4])).unwrap();
        assert_eq!(nucleolus(&one).unwrap(), pv(&ints(&[4])));
    }

    #[test]
    fn nucleolus_of_empty_core_game() {
        // v = 1 on every coalition of size ≥ 2: symmetric, so η = (1/3, 1/3, 1/3).
        let mut values = vec![int(0); 8];
        for s in Coalition::all(3).filter(|s| s.size() >= 2) {
            values[s.index()] = int(1);
        }
        let v = Game::new(3, values).unwrap();
        let third = ratio(1, 3);
        assert_eq!(nucleolus(&v).unwrap(), pv(&[third.clone(), third.clone(), third]));
    }

    #[test]
    fn nucleolus_of_glove_like_game() {
        // Player 1 owns a left glove, players 2 and 3 right gloves: η = (1, 0, 0).
        let v = Game::from_fn(3, |s| {
            if s.contains(0) && (s.contains(1) || s.contains(2)) {
                int(1)
            } else {
                int(0)
            }
        })
        .unwrap();
        let eta = nucleolus(&v).unwrap();
        assert_eq!(eta, pv(&ints(&[1, 0, 0])));
        assert_eq!(nucleolus_with(&v, PivotRule::Dantzig).unwrap(), eta);
    }

    #[test]
    fn excess_profile_orders_lexicographically() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let eta = nucleolus(&u12).unwrap();
        let other = pv(&ints(&[1, 0, 0]));
        assert!(excess_profile(&eta, &u12) < excess_profile(&other, &u12));
        assert_eq!(excess_profile(&eta, &u12).0.len(), 8);
    }
}
