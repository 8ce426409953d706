//! Minimal incomplete games: only `v(∅)`, `v(N)` and the singleton values
//! are known. Extension families, their generators and closed-form
//! solution values.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::game::{Game, PayoffVector};
use crate::polytope::Polytope;
use crate::rational::{binomial, format_rational, RawRational, Rational};
use crate::solutions::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncompleteError {
    #[error("player count must be between 1 and {MAX_PLAYERS}, got {0}")]
    InvalidPlayerCount(usize),
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("incomplete game has no {0} extension")]
    NotExtendable(ExtensionClass),
    #[error("coalition {0} is not in N1 (needs at least two players)")]
    NotInN1(Coalition),
    #[error("coalition {0} is not a ray index (sizes 2..=n-2)")]
    NotInE(Coalition),
    #[error("player {0} out of range")]
    PlayerOutOfRange(usize),
    #[error("negative weight {value} at {at}")]
    NegativeWeight { at: String, value: String },
    #[error("weights sum to {0}, expected 1")]
    NotNormalized(String),
    #[error("malformed weights: {0}")]
    Malformed(String),
}

/// Known values on `K = {∅, N} ∪ {{i}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalIncompleteGame {
    singletons: Vec<Rational>,
    grand: Rational,
}

impl MinimalIncompleteGame {
    pub fn new(singletons: Vec<Rational>, grand: Rational) -> Result<Self, IncompleteError> {
        let n = singletons.len();
        if n == 0 || n > MAX_PLAYERS {
            return Err(IncompleteError::InvalidPlayerCount(n));
        }
        Ok(MinimalIncompleteGame { singletons, grand })
    }

    /// The known part of a complete game.
    pub fn restrict(v: &Game) -> Self {
        MinimalIncompleteGame {
            singletons: v.singleton_values(),
            grand: v.grand_value().clone(),
        }
    }

    pub fn players(&self) -> usize {
        self.singletons.len()
    }

    pub fn singletons(&self) -> &[Rational] {
        &self.singletons
    }

    pub fn singleton(&self, i: usize) -> &Rational {
        &self.singletons[i]
    }

    pub fn grand(&self) -> &Rational {
        &self.grand
    }

    /// Total excess `Δ = v(N) − Σ v(i)`.
    pub fn delta(&self) -> Rational {
        self.singletons.iter().fold(self.grand.clone(), |acc, x| acc - x)
    }

    pub fn is_known(&self, s: Coalition) -> bool {
        s.is_empty() || s.size() == 1 || s == Coalition::grand(self.players())
    }

    /// Whether `w` takes the known values on `K`.
    pub fn agrees_with(&self, w: &Game) -> bool {
        w.players() == self.players()
            && *w.grand_value() == self.grand
            && (0..self.players()).all(|i| *w.singleton_value(i) == self.singletons[i])
    }

    fn singleton_sum(&self, s: Coalition) -> Rational {
        s.players().fold(Rational::zero(), |acc, i| acc + &self.singletons[i])
    }

    fn check_player(&self, k: usize) -> Result<(), IncompleteError> {
        if k < self.players() {
            Ok(())
        } else {
            Err(IncompleteError::PlayerOutOfRange(k))
        }
    }

    fn require(&self, class: ExtensionClass) -> Result<(), IncompleteError> {
        if is_extendable(self, class) {
            Ok(())
        } else {
            Err(IncompleteError::NotExtendable(class))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct IncompleteJson {
    n: usize,
    #[serde(with = "crate::rational::serde_rational_vec")]
    singletons: Vec<Rational>,
    #[serde(with = "crate::rational::serde_rational")]
    grand: Rational,
}

impl Serialize for MinimalIncompleteGame {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        IncompleteJson {
            n: self.players(),
            singletons: self.singletons.clone(),
            grand: self.grand.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinimalIncompleteGame {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = IncompleteJson::deserialize(d)?;
        if raw.n != raw.singletons.len() {
            return Err(serde::de::Error::custom(IncompleteError::WrongLength {
                expected: raw.n,
                got: raw.singletons.len(),
            }));
        }
        MinimalIncompleteGame::new(raw.singletons, raw.grand).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExtensionClass {
    #[serde(rename = "P")]
    Positive,
    #[serde(rename = "C")]
    Convex,
    #[serde(rename = "S")]
    Superadditive,
    #[serde(rename = "C1")]
    OneConvex,
}

impl ExtensionClass {
    pub const ALL: [ExtensionClass; 4] = [
        ExtensionClass::Positive,
        ExtensionClass::Convex,
        ExtensionClass::Superadditive,
        ExtensionClass::OneConvex,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ExtensionClass::Positive => "P",
            ExtensionClass::Convex => "C",
            ExtensionClass::Superadditive => "S",
            ExtensionClass::OneConvex => "C1",
        }
    }

    /// Class membership of a complete game.
    pub fn contains(self, w: &Game) -> bool {
        match self {
            ExtensionClass::Positive => w.is_positive(),
            ExtensionClass::Convex => w.is_convex(),
            ExtensionClass::Superadditive => w.is_superadditive(),
            ExtensionClass::OneConvex => w.is_one_convex(),
        }
    }
}

impl fmt::Display for ExtensionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ExtensionClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P" | "p" => Ok(ExtensionClass::Positive),
            "C" | "c" => Ok(ExtensionClass::Convex),
            "S" | "s" => Ok(ExtensionClass::Superadditive),
            "C1" | "c1" => Ok(ExtensionClass::OneConvex),
            other => Err(format!("unknown extension class `{other}` (expected P, C, S or C1)")),
        }
    }
}

/// `Δ ≥ 0`, and for positive extensions also `v(i) ≥ 0` for every player.
pub fn is_extendable(ig: &MinimalIncompleteGame, class: ExtensionClass) -> bool {
    if ig.delta().is_negative() {
        return false;
    }
    class != ExtensionClass::Positive || ig.singletons.iter().all(|x| !x.is_negative())
}

/// `N1 = {T : |T| ≥ 2}`.
pub fn n1_coalitions(n: usize) -> Vec<Coalition> {
    Coalition::all(n).filter(|t| t.size() >= 2).collect()
}

/// Ray indices `E`: coalitions of size `2..=n−2`.
pub fn e_coalitions(n: usize) -> Vec<Coalition> {
    Coalition::all(n)
        .filter(|t| t.size() >= 2 && t.size() + 2 <= n)
        .collect()
}

pub fn is_in_e(t: Coalition, n: usize) -> bool {
    t.fits(n) && t.size() >= 2 && t.size() + 2 <= n
}

fn is_in_n1(t: Coalition, n: usize) -> bool {
    t.fits(n) && t.size() >= 2
}

fn check_nonnegative(at: impl fmt::Display, value: &Rational) -> Result<(), IncompleteError> {
    if value.is_negative() {
        Err(IncompleteError::NegativeWeight {
            at: at.to_string(),
            value: format_rational(value),
        })
    } else {
        Ok(())
    }
}

fn check_sum_one<'a>(values: impl Iterator<Item = &'a Rational>) -> Result<(), IncompleteError> {
    let total = values.fold(Rational::zero(), |acc, x| acc + x);
    if total.is_one() {
        Ok(())
    } else {
        Err(IncompleteError::NotNormalized(format_rational(&total)))
    }
}

/// Checks that `alpha` is a point of the standard simplex over `n` players.
pub fn check_simplex(alpha: &[Rational], n: usize) -> Result<(), IncompleteError> {
    if alpha.len() != n {
        return Err(IncompleteError::WrongLength {
            expected: n,
            got: alpha.len(),
        });
    }
    for (i, a) in alpha.iter().enumerate() {
        check_nonnegative(format!("player {}", i + 1), a)?;
    }
    check_sum_one(alpha.iter())
}

/// Convex weights `α_T` over `N1`; absent coalitions weigh zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsA {
    n: usize,
    alpha: BTreeMap<Coalition, Rational>,
}

impl WeightsA {
    pub fn new(n: usize, alpha: BTreeMap<Coalition, Rational>) -> Result<Self, IncompleteError> {
        for (t, a) in &alpha {
            if !is_in_n1(*t, n) {
                return Err(IncompleteError::NotInN1(*t));
            }
            check_nonnegative(t, a)?;
        }
        check_sum_one(alpha.values())?;
        let alpha = alpha.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        Ok(WeightsA { n, alpha })
    }

    pub fn indicator(n: usize, t: Coalition) -> Result<Self, IncompleteError> {
        WeightsA::new(n, BTreeMap::from([(t, Rational::one())]))
    }

    pub fn uniform(n: usize) -> Self {
        let all = n1_coalitions(n);
        let w = Rational::new(1.into(), (all.len() as i64).into());
        WeightsA {
            n,
            alpha: all.into_iter().map(|t| (t, w.clone())).collect(),
        }
    }

    pub fn players(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: Coalition) -> Rational {
        self.alpha.get(&t).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero weights in mask order.
    pub fn support(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.alpha.iter().map(|(t, a)| (*t, a))
    }
}

/// Weights `α` over players and `β ≥ 0` over the ray indices `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsAlphaBeta {
    alpha: Vec<Rational>,
    beta: BTreeMap<Coalition, Rational>,
}

impl WeightsAlphaBeta {
    pub fn new(alpha: Vec<Rational>, beta: BTreeMap<Coalition, Rational>) -> Result<Self, IncompleteError> {
        let n = alpha.len();
        if n == 0 || n > MAX_PLAYERS {
            return Err(IncompleteError::InvalidPlayerCount(n));
        }
        check_simplex(&alpha, n)?;
        for (t, b) in &beta {
            if !is_in_e(*t, n) {
                return Err(IncompleteError::NotInE(*t));
            }
            check_nonnegative(t, b)?;
        }
        let beta = beta.into_iter().filter(|(_, b)| !b.is_zero()).collect();
        Ok(WeightsAlphaBeta { alpha, beta })
    }

    pub fn alpha_only(alpha: Vec<Rational>) -> Result<Self, IncompleteError> {
        WeightsAlphaBeta::new(alpha, BTreeMap::new())
    }

    /// `α = e_k`, `β = 0`.
    pub fn vertex(n: usize, k: usize) -> Self {
        let alpha = (0..n)
            .map(|i| if i == k { Rational::one() } else { Rational::zero() })
            .collect();
        WeightsAlphaBeta {
            alpha,
            beta: BTreeMap::new(),
        }
    }

    pub fn uniform(n: usize) -> Self {
        let w = Rational::new(1.into(), (n as i64).into());
        WeightsAlphaBeta {
            alpha: vec![w; n],
            beta: BTreeMap::new(),
        }
    }

    pub fn players(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    /// `β_T`, reading zero for every coalition outside `E`.
    pub fn beta_at(&self, t: Coalition) -> Rational {
        self.beta.get(&t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn beta_support(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.beta.iter().map(|(t, b)| (*t, b))
    }
}

type RawMap = BTreeMap<String, RawRational>;

#[derive(Deserialize)]
#[serde(untagged)]
enum RawAlpha {
    List(Vec<RawRational>),
    Map(RawMap),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeights {
    alpha: RawAlpha,
    #[serde(default)]
    beta: RawMap,
}

fn parse_map(raw: RawMap) -> Result<BTreeMap<Coalition, Rational>, IncompleteError> {
    raw.into_iter()
        .map(|(k, v)| {
            let mask: u32 = k
                .trim()
                .parse()
                .map_err(|_| IncompleteError::Malformed(format!("coalition key `{k}` is not a mask")))?;
            let value = v
                .into_rational()
                .map_err(|e| IncompleteError::Malformed(e.to_string()))?;
            Ok((Coalition::from_mask(mask), value))
        })
        .collect()
}

fn parse_list(raw: Vec<RawRational>) -> Result<Vec<Rational>, IncompleteError> {
    raw.into_iter()
        .map(|v| v.into_rational().map_err(|e| IncompleteError::Malformed(e.to_string())))
        .collect()
}

fn map_json(map: &BTreeMap<Coalition, Rational>) -> serde_json::Value {
    serde_json::Value::Object(
        map.iter()
            .map(|(t, a)| (t.mask().to_string(), format_rational(a).into()))
            .collect(),
    )
}

impl WeightsA {
    /// `{"alpha": {"<mask>": "p/q", ...}}`.
    pub fn from_json(n: usize, text: &str) -> Result<Self, IncompleteError> {
        let raw: RawWeights = serde_json::from_str(text).map_err(|e| IncompleteError::Malformed(e.to_string()))?;
        if !raw.beta.is_empty() {
            return Err(IncompleteError::Malformed("positive extensions take no beta".into()));
        }
        match raw.alpha {
            RawAlpha::Map(m) => WeightsA::new(n, parse_map(m)?),
            RawAlpha::List(_) => Err(IncompleteError::Malformed(
                "alpha must be keyed by coalition mask".into(),
            )),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "alpha": map_json(&self.alpha) })
    }
}

impl WeightsAlphaBeta {
    /// `{"alpha": [...] | {"<player mask>": ...}, "beta": {"<mask>": ...}}`.
    /// A keyed alpha must use singleton masks.
    pub fn from_json(n: usize, text: &str) -> Result<Self, IncompleteError> {
        let raw: RawWeights = serde_json::from_str(text).map_err(|e| IncompleteError::Malformed(e.to_string()))?;
        let alpha = match raw.alpha {
            RawAlpha::List(l) => parse_list(l)?,
            RawAlpha::Map(m) => {
                let mut alpha = vec![Rational::zero(); n];
                for (s, a) in parse_map(m)? {
                    if s.size() != 1 || !s.fits(n) {
                        return Err(IncompleteError::Malformed(format!("alpha key {s} is not a single player")));
                    }
                    alpha[s.players().next().expect("singleton")] = a;
                }
                alpha
            }
        };
        if alpha.len() != n {
            return Err(IncompleteError::WrongLength {
                expected: n,
                got: alpha.len(),
            });
        }
        WeightsAlphaBeta::new(alpha, parse_map(raw.beta)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let alpha: Vec<String> = self.alpha.iter().map(format_rational).collect();
        serde_json::json!({ "alpha": alpha, "beta": map_json(&self.beta) })
    }
}

/// Extreme positive extension: off `K`, `Σ_{i∈S} v(i) + Δ·[T ⊆ S]`.
pub fn extreme_v_t(ig: &MinimalIncompleteGame, t: Coalition) -> Result<Game, IncompleteError> {
    ig.require(ExtensionClass::Positive)?;
    if !is_in_n1(t, ig.players()) {
        return Err(IncompleteError::NotInN1(t));
    }
    let delta = ig.delta();
    Ok(from_rule(ig, |s| {
        let base = ig.singleton_sum(s);
        if t.is_subset_of(s) {
            base + &delta
        } else {
            base
        }
    }))
}

/// Builds a game from its values off `K`; known values are copied.
fn from_rule(ig: &MinimalIncompleteGame, mut off_k: impl FnMut(Coalition) -> Rational) -> Game {
    Game::from_fn(ig.players(), |s| {
        if s.is_empty() {
            Rational::zero()
        } else if s.size() == 1 {
            ig.singletons[s.players().next().expect("singleton")].clone()
        } else if s == Coalition::grand(ig.players()) {
            ig.grand.clone()
        } else {
            off_k(s)
        }
    })
    .expect("player count already validated")
}

/// `w_A = Σ_T α_T v_T`.
pub fn extension_w_a(ig: &MinimalIncompleteGame, a: &WeightsA) -> Result<Game, IncompleteError> {
    ig.require(ExtensionClass::Positive)?;
    check_weights_n(a.players(), ig.players())?;
    Ok(surplus_family_game(ig, a))
}

/// `Σ_T α_T (additive + Δ·u_T)` restricted to agree with `ig` on `K`. The
/// same formula as `w_A` without the sign condition on singletons: always
/// convex when `Δ ≥ 0`, positive only for nonnegative singletons.
pub fn surplus_family_game(ig: &MinimalIncompleteGame, a: &WeightsA) -> Game {
    let delta = ig.delta();
    from_rule(ig, |s| {
        let covered = a
            .support()
            .filter(|(t, _)| t.is_subset_of(s))
            .fold(Rational::zero(), |acc, (_, w)| acc + w);
        ig.singleton_sum(s) + &delta * covered
    })
}

fn check_weights_n(got: usize, expected: usize) -> Result<(), IncompleteError> {
    if got == expected {
        Ok(())
    } else {
        Err(IncompleteError::WrongLength { expected, got })
    }
}

/// Extreme 1-convex extension: for `|S| ≥ 2`, `Σ_{j∈S} v(j) + Δ·[k ∈ S]`.
pub fn extreme_v_k(ig: &MinimalIncompleteGame, k: usize) -> Result<Game, IncompleteError> {
    ig.require(ExtensionClass::OneConvex)?;
    ig.check_player(k)?;
    let delta = ig.delta();
    Ok(from_rule(ig, |s| {
        let base = ig.singleton_sum(s);
        if s.contains(k) {
            base + &delta
        } else {
            base
        }
    }))
}

/// `e_T`: `−1` on `T`, zero elsewhere.
pub fn ray_e_t(n: usize, t: Coalition) -> Result<Game, IncompleteError> {
    if n == 0 || n > MAX_PLAYERS {
        return Err(IncompleteError::InvalidPlayerCount(n));
    }
    if !is_in_e(t, n) {
        return Err(IncompleteError::NotInE(t));
    }
    Ok(Game::from_fn(n, |s| if s == t { -Rational::one() } else { Rational::zero() }).expect("valid n"))
}

/// `w_α`: off `K`, `Σ_{j∈S} (v(j) + α_j Δ)`.
pub fn extension_w_alpha(ig: &MinimalIncompleteGame, alpha: &[Rational]) -> Result<Game, IncompleteError> {
    let w = WeightsAlphaBeta::alpha_only(alpha.to_vec())?;
    extension_w_alpha_beta(ig, &w)
}

/// `w_{α,β}`: `w_α − Σ_{T∈E} β_T` at `T`.
pub fn extension_w_alpha_beta(ig: &MinimalIncompleteGame, w: &WeightsAlphaBeta) -> Result<Game, IncompleteError> {
    ig.require(ExtensionClass::OneConvex)?;
    check_weights_n(w.players(), ig.players())?;
    let share = share_vector(ig, w.alpha());
    Ok(from_rule(ig, |s| {
        s.players().fold(Rational::zero(), |acc, j| acc + &share[j]) - w.beta_at(s)
    }))
}

/// `v(i) + α_i Δ` per player.
fn share_vector(ig: &MinimalIncompleteGame, alpha: &[Rational]) -> Vec<Rational> {
    let delta = ig.delta();
    ig.singletons
        .iter()
        .zip(alpha)
        .map(|(v, a)| v + a * &delta)
        .collect()
}

/// `I^k`: `v(i)` for `i ≠ k`, `v(k) + Δ` for `k`.
pub fn imputation_i_k(ig: &MinimalIncompleteGame, k: usize) -> Result<PayoffVector, IncompleteError> {
    ig.check_player(k)?;
    Ok(PayoffVector(share_vector(ig, WeightsAlphaBeta::vertex(ig.players(), k).alpha())))
}

/// `I^α_i = v(i) + α_i Δ`.
pub fn imputation_i_alpha(ig: &MinimalIncompleteGame, alpha: &[Rational]) -> Result<PayoffVector, IncompleteError> {
    check_simplex(alpha, ig.players())?;
    Ok(PayoffVector(share_vector(ig, alpha)))
}

/// `φ_i(w_A) = v(i) + Δ Σ_{T∋i} α_T/|T|`.
pub fn shapley_of_w_a(ig: &MinimalIncompleteGame, a: &WeightsA) -> Result<PayoffVector, IncompleteError> {
    ig.require(ExtensionClass::Positive)?;
    check_weights_n(a.players(), ig.players())?;
    let delta = ig.delta();
    Ok(PayoffVector(
        (0..ig.players())
            .map(|i| {
                let share = a
                    .support()
                    .filter(|(t, _)| t.contains(i))
                    .fold(Rational::zero(), |acc, (t, w)| acc + w / Rational::from_integer((t.size() as i64).into()));
                &ig.singletons[i] + &delta * share
            })
            .collect(),
    ))
}

/// Shapley value of `w_{α,β}`:
/// `v(i) + Δ(1 + α_i n(n−2))/(n(n−1)) + (1/n)(Σ_{T∌i} β_T/C(n−1,t) − Σ_{T∋i} β_T/C(n−1,t−1))`.
/// The `Δ` term comes from `φ(v^k)`: `k` gets `(n−1)/n` of `Δ` and every
/// other player `1/(n(n−1))`, since joining `{k}` is worth `v(i) + Δ`.
pub fn shapley_of_w_alpha_beta(ig: &MinimalIncompleteGame, w: &WeightsAlphaBeta) -> Result<PayoffVector, IncompleteError> {
    ig.require(ExtensionClass::OneConvex)?;
    check_weights_n(w.players(), ig.players())?;
    let n = ig.players();
    if n == 1 {
        return Ok(PayoffVector(vec![ig.grand.clone()]));
    }
    let n_r = Rational::from_integer((n as i64).into());
    let inv_n = n_r.recip();
    let pairs = &n_r * (&n_r - Rational::one());
    let spread = &n_r * (&n_r - Rational::from_integer(2.into()));
    let delta = ig.delta();
    Ok(PayoffVector(
        (0..n)
            .map(|i| {
                let correction = w.beta_support().fold(Rational::zero(), |acc, (t, b)| {
                    let s = t.size();
                    if t.contains(i) {
                        acc - b / binomial(n - 1, s - 1)
                    } else {
                        acc + b / binomial(n - 1, s)
                    }
                });
                let share = (Rational::one() + &w.alpha()[i] * &spread) / &pairs;
                &ig.singletons[i] + &delta * share + &inv_n * correction
            })
            .collect(),
    ))
}

/// `τ_i(w_A) = v(i) + Δ (Σ_{T∋i} α_T) / (Σ_T α_T |T|)`.
pub fn tau_of_w_a(ig: &MinimalIncompleteGame, a: &WeightsA) -> Result<PayoffVector, IncompleteError> {
    ig.require(ExtensionClass::Positive)?;
    check_weights_n(a.players(), ig.players())?;
    let delta = ig.delta();
    let denom = a
        .support()
        .fold(Rational::zero(), |acc, (t, w)| acc + w * Rational::from_integer((t.size() as i64).into()));
    Ok(PayoffVector(
        (0..ig.players())
            .map(|i| {
                let num = a
                    .support()
                    .filter(|(t, _)| t.contains(i))
                    .fold(Rational::zero(), |acc, (_, w)| acc + w);
                &ig.singletons[i] + &delta * num / &denom
            })
            .collect(),
    ))
}

/// `τ(w_{α,β}) = I^α` for `n ≥ 3`. With two players the only extension
/// is the known game and `τ` splits `Δ` equally.
pub fn tau_of_w_alpha_beta(ig: &MinimalIncompleteGame, w: &WeightsAlphaBeta) -> Result<PayoffVector, IncompleteError> {
    ig.require(ExtensionClass::OneConvex)?;
    check_weights_n(w.players(), ig.players())?;
    if ig.players() == 2 {
        let half = ig.delta() / Rational::from_integer(2.into());
        return Ok(PayoffVector(ig.singletons.iter().map(|v| v + &half).collect()));
    }
    imputation_i_alpha(ig, w.alpha())
}

/// Equals the τ-value (1-convex games).
pub fn nucleolus_of_w_alpha_beta(ig: &MinimalIncompleteGame, w: &WeightsAlphaBeta) -> Result<PayoffVector, IncompleteError> {
    tau_of_w_alpha_beta(ig, w)
}

/// `{I^α}` for `n ≥ 3`; the whole imputation set for two players.
pub fn core_of_w_alpha_beta(ig: &MinimalIncompleteGame, w: &WeightsAlphaBeta) -> Result<Polytope, IncompleteError> {
    if ig.players() == 2 {
        ig.require(ExtensionClass::OneConvex)?;
        check_weights_n(w.players(), 2)?;
        let points = (0..2).map(|k| imputation_i_k(ig, k).expect("player in range"));
        return Ok(Polytope::from_points(2, points));
    }
    tau_of_w_alpha_beta(ig, w).map(Polytope::point)
}

/// Marginal vector of `w_{α,β}` for the ordering `sigma`, by cases on the
/// position of each player.
pub fn weber_marginals_of_w_alpha_beta(
    ig: &MinimalIncompleteGame,
    w: &WeightsAlphaBeta,
    sigma: &Permutation,
) -> Result<PayoffVector, IncompleteError> {
    ig.require(ExtensionClass::OneConvex)?;
    let n = ig.players();
    check_weights_n(w.players(), n)?;
    check_weights_n(sigma.len(), n)?;
    let delta = ig.delta();
    let alpha = w.alpha();
    let mut m = vec![Rational::zero(); n];
    let mut before = Coalition::EMPTY;
    for (pos, &i) in sigma.order().iter().enumerate() {
        let after = before.with(i);
        m[i] = match pos {
            0 => ig.singletons[i].clone(),
            1 => {
                let j = sigma.order()[0];
                &ig.singletons[i] + (&alpha[i] + &alpha[j]) * &delta - w.beta_at(after)
            }
            _ => &ig.singletons[i] + &alpha[i] * &delta + w.beta_at(before) - w.beta_at(after),
        };
        before = after;
    }
    Ok(PayoffVector(m))
}
