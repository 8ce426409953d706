//! Complete TU games: characteristic functions, the unanimity basis,
//! upper/lower vectors, the gap function and class membership.

use std::ops::Index;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::rational::{self, format_rational, Rational, RawRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("player count {0} outside 1..={MAX_PLAYERS}")]
    InvalidPlayerCount(usize),
    #[error("expected {expected} coalition values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("value of the empty coalition must be 0, got {0}")]
    NonzeroEmptyValue(String),
    #[error("coalition {0:?} must be nonempty")]
    EmptyCoalition(Coalition),
    #[error("coalition mask {mask} does not fit {n} players")]
    CoalitionOutOfRange { mask: u32, n: usize },
    #[error("games have different player counts ({0} vs {1})")]
    MismatchedPlayers(usize, usize),
    #[error("{0} games but {1} coefficients")]
    MismatchedCoefficients(usize, usize),
    #[error("linear combination of zero games")]
    EmptyCombination,
    #[error("invalid rational: {0}")]
    Rational(#[from] rational::ParseRationalError),
}

pub(crate) fn check_players(n: usize) -> Result<(), GameError> {
    if n == 0 || n > MAX_PLAYERS {
        Err(GameError::InvalidPlayerCount(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_coalition(c: Coalition, n: usize) -> Result<(), GameError> {
    if c.fits(n) {
        Ok(())
    } else {
        Err(GameError::CoalitionOutOfRange { mask: c.mask(), n })
    }
}

/// A payoff vector `x ∈ Qⁿ`, indexed by zero-based player.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PayoffVector(#[serde(with = "crate::rational::serde_rational_vec")] pub Vec<Rational>);

impl PayoffVector {
    pub fn new(values: Vec<Rational>) -> Self {
        PayoffVector(values)
    }

    pub fn zeros(n: usize) -> Self {
        PayoffVector(vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    /// `x(S) = Σ_{i∈S} x_i`.
    pub fn coalition_sum(&self, s: Coalition) -> Rational {
        s.players().fold(Rational::zero(), |acc, i| acc + &self.0[i])
    }

    pub fn total(&self) -> Rational {
        rational::sum(&self.0)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Index<usize> for PayoffVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for PayoffVector {
    fn from(v: Vec<Rational>) -> Self {
        PayoffVector(v)
    }
}

/// A complete TU game on `n` players with `v(∅) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    n: usize,
    values: Vec<Rational>,
}

impl Game {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, GameError> {
        check_players(n)?;
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(GameError::WrongLength {
                expected,
                got: values.len(),
            });
        }
        if !values[0].is_zero() {
            return Err(GameError::NonzeroEmptyValue(format_rational(&values[0])));
        }
        Ok(Game { n, values })
    }

    /// Builds `v(S) = f(S)` for every nonempty `S`; `v(∅)` is forced to 0.
    pub fn from_fn<F: FnMut(Coalition) -> Rational>(n: usize, mut f: F) -> Result<Self, GameError> {
        check_players(n)?;
        let values = Coalition::all(n)
            .map(|s| if s.is_empty() { Rational::zero() } else { f(s) })
            .collect();
        Ok(Game { n, values })
    }

    pub fn zero(n: usize) -> Result<Self, GameError> {
        Self::from_fn(n, |_| Rational::zero())
    }

    /// `v(S) = Σ_{i∈S} c_i`.
    pub fn additive(c: &[Rational]) -> Result<Self, GameError> {
        let x = PayoffVector(c.to_vec());
        Self::from_fn(c.len(), |s| x.coalition_sum(s))
    }

    /// The unanimity game `u_T`: 1 on supersets of `T`, 0 elsewhere.
    pub fn unanimity(n: usize, t: Coalition) -> Result<Self, GameError> {
        check_players(n)?;
        check_coalition(t, n)?;
        if t.is_empty() {
            return Err(GameError::EmptyCoalition(t));
        }
        Self::from_fn(n, |s| {
            if t.is_subset_of(s) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn players(&self) -> usize {
        self.n
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn value(&self, s: Coalition) -> &Rational {
        &self.values[s.index()]
    }

    pub fn grand_value(&self) -> &Rational {
        &self.values[self.values.len() - 1]
    }

    pub fn singleton_value(&self, player: usize) -> &Rational {
        &self.values[1 << player]
    }

    pub fn singleton_values(&self) -> Vec<Rational> {
        (0..self.n).map(|i| self.singleton_value(i).clone()).collect()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn scale(&self, factor: &Rational) -> Game {
        Game {
            n: self.n,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Möbius transform: `d_v(T) = Σ_{S⊆T} (−1)^{|T|−|S|} v(S)`.
    pub fn harsanyi_dividends(&self) -> Dividends {
        let mut d = self.values.clone();
        for bit in 0..self.n {
            let b = 1usize << bit;
            for mask in 0..d.len() {
                if mask & b != 0 {
                    let lower = d[mask ^ b].clone();
                    d[mask] -= lower;
                }
            }
        }
        Dividends { n: self.n, values: d }
    }

    /// `v = Σ_{T≠∅} d(T) u_T`. The entry at `∅` is ignored.
    pub fn from_dividends(dividends: &Dividends) -> Game {
        let mut v = dividends.values.clone();
        v[0] = Rational::zero();
        for bit in 0..dividends.n {
            let b = 1usize << bit;
            for mask in 0..v.len() {
                if mask & b != 0 {
                    let lower = v[mask ^ b].clone();
                    v[mask] += lower;
                }
            }
        }
        Game { n: dividends.n, values: v }
    }

    /// Upper vector `b_i = v(N) − v(N∖i)`.
    pub fn upper_vector(&self) -> PayoffVector {
        let grand = self.grand_coalition();
        PayoffVector(
            (0..self.n)
                .map(|i| self.grand_value() - self.value(grand.without(i)))
                .collect(),
        )
    }

    /// Gap `g(S) = b(S) − v(S)`.
    pub fn gap(&self, s: Coalition) -> Rational {
        self.upper_vector().coalition_sum(s) - self.value(s)
    }

    pub fn lower_vector(&self) -> PayoffVector {
        self.lower_vector_with(LowerVectorForm::Concession)
    }

    /// Lower vector `a_i = max_{S∋i} r(S, i)`, with the remainder `r` chosen by `form`.
    pub fn lower_vector_with(&self, form: LowerVectorForm) -> PayoffVector {
        let b = self.upper_vector();
        let grand = self.grand_coalition();
        let a = (0..self.n)
            .map(|i| {
                let me = Coalition::singleton(i);
                grand
                    .without(i)
                    .subsets()
                    .map(|rest| {
                        let s = rest.union(me);
                        let charged = match form {
                            LowerVectorForm::Concession => rest,
                            LowerVectorForm::Literal => s,
                        };
                        self.value(s) - b.coalition_sum(charged)
                    })
                    .max()
                    .expect("at least one coalition contains i")
            })
            .collect();
        PayoffVector(a)
    }

    pub fn is_superadditive(&self) -> bool {
        self.superadditivity_violation().is_none()
    }

    /// First disjoint pair `(S, T)` with `v(S) + v(T) > v(S ∪ T)`.
    pub fn superadditivity_violation(&self) -> Option<(Coalition, Coalition)> {
        for s in Coalition::all(self.n).skip(1) {
            for t in s.complement(self.n).subsets().skip(1) {
                if t < s {
                    continue;
                }
                if self.value(s) + self.value(t) > *self.value(s.union(t)) {
                    return Some((s, t));
                }
            }
        }
        None
    }

    pub fn is_convex(&self) -> bool {
        self.convexity_violation().is_none()
    }

    /// Supermodularity is checked through the equivalent local condition
    /// `v(S∪i) + v(S∪j) ≤ v(S∪{i,j}) + v(S)`; the returned pair
    /// `(S∪i, S∪j)` violates the pairwise inequality.
    pub fn convexity_violation(&self) -> Option<(Coalition, Coalition)> {
        for s in Coalition::all(self.n) {
            for i in 0..self.n {
                if s.contains(i) {
                    continue;
                }
                for j in (i + 1)..self.n {
                    if s.contains(j) {
                        continue;
                    }
                    let si = s.with(i);
                    let sj = s.with(j);
                    if self.value(si) + self.value(sj) > self.value(si.union(sj)) + self.value(s) {
                        return Some((si, sj));
                    }
                }
            }
        }
        None
    }

    pub fn is_positive(&self) -> bool {
        self.harsanyi_dividends().first_negative().is_none()
    }

    pub fn is_one_convex(&self) -> bool {
        self.one_convexity_violation().is_none()
    }

    pub fn one_convexity_violation(&self) -> Option<OneConvexViolation> {
        let b = self.upper_vector();
        let grand = self.grand_coalition();
        if b.total() < *self.grand_value() {
            return Some(OneConvexViolation::UpperVectorBelowGrand);
        }
        Coalition::all(self.n)
            .skip(1)
            .find(|&s| *self.value(s) > self.grand_value() - b.coalition_sum(grand.minus(s)))
            .map(OneConvexViolation::Coalition)
    }

    pub fn classify(&self) -> GameClassReport {
        let superadditive_witness = self.superadditivity_violation();
        let convex_witness = self.convexity_violation();
        let positive_witness = self.harsanyi_dividends().first_negative();
        let one_convex_witness = self.one_convexity_violation();
        GameClassReport {
            superadditive: superadditive_witness.is_none(),
            convex: convex_witness.is_none(),
            positive: positive_witness.is_none(),
            one_convex: one_convex_witness.is_none(),
            superadditive_witness,
            convex_witness,
            positive_witness,
            one_convex_witness,
        }
    }

    pub fn to_json(&self) -> GameJson {
        GameJson {
            n: self.n,
            values: self.values.iter().map(format_rational).collect(),
        }
    }
}

/// Pointwise `Σ_k coeffs[k] · games[k]`.
pub fn linear_combination(games: &[Game], coeffs: &[Rational]) -> Result<Game, GameError> {
    if games.len() != coeffs.len() {
        return Err(GameError::MismatchedCoefficients(games.len(), coeffs.len()));
    }
    let first = games.first().ok_or(GameError::EmptyCombination)?;
    let n = first.n;
    if let Some(g) = games.iter().find(|g| g.n != n) {
        return Err(GameError::MismatchedPlayers(n, g.n));
    }
    let mut values = vec![Rational::zero(); 1 << n];
    for (g, c) in games.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (acc, v) in values.iter_mut().zip(&g.values) {
            *acc += v * c;
        }
    }
    Ok(Game { n, values })
}

/// Which remainder the lower vector maximizes over coalitions `S ∋ i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LowerVectorForm {
    /// `v(S) − b(S∖i)`: what is left for `i` after paying everyone else
    /// in `S` their utopia payoff.
    #[default]
    Concession,
    /// `v(S) − b(S)`, charging `i` its own utopia payoff as well.
    Literal,
}

/// Harsanyi dividends indexed by coalition mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dividends {
    n: usize,
    values: Vec<Rational>,
}

impl Dividends {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, GameError> {
        check_players(n)?;
        if values.len() != 1 << n {
            return Err(GameError::WrongLength {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(Dividends { n, values })
    }

    pub fn from_fn<F: FnMut(Coalition) -> Rational>(n: usize, mut f: F) -> Result<Self, GameError> {
        check_players(n)?;
        Ok(Dividends {
            n,
            values: Coalition::all(n)
                .map(|t| if t.is_empty() { Rational::zero() } else { f(t) })
                .collect(),
        })
    }

    pub fn players(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: Coalition) -> &Rational {
        &self.values[t.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn first_negative(&self) -> Option<Coalition> {
        Coalition::all(self.n)
            .skip(1)
            .find(|t| self.values[t.index()].is_negative())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OneConvexViolation {
    /// `v(S) > v(N) − b(N∖S)`.
    Coalition(Coalition),
    /// `b(N) < v(N)`.
    UpperVectorBelowGrand,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameClassReport {
    pub superadditive: bool,
    pub convex: bool,
    pub positive: bool,
    pub one_convex: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub superadditive_witness: Option<(Coalition, Coalition)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convex_witness: Option<(Coalition, Coalition)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positive_witness: Option<Coalition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_convex_witness: Option<OneConvexViolation>,
}

/// Wire form `{"n": 3, "values": ["0", "1", ...]}` indexed by coalition mask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameJson {
    pub n: usize,
    pub values: Vec<String>,
}

#[derive(Deserialize)]
struct RawGame {
    n: usize,
    values: Vec<RawRational>,
}

impl Serialize for Game {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Game {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawGame::deserialize(d)?;
        let values = raw
            .values
            .into_iter()
            .map(RawRational::into_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Game::new(raw.n, values).map_err(serde::de::Error::custom)
    }
}
