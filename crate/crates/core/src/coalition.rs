//! Coalitions as bitmasks over the player set.
//!
//! Player indices in the Rust API are zero-based: player `i` lives on bit
//! `i`. Serialized forms additionally carry the one-based player list.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Upper bound on the number of players. Class predicates enumerate pairs
/// of coalitions, so the work grows like `4^n`.
pub const MAX_PLAYERS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub const fn singleton(player: usize) -> Self {
        Coalition(1 << player)
    }

    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        Coalition(players.into_iter().fold(0, |m, p| m | (1 << p)))
    }

    pub const fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, player: usize) -> bool {
        self.0 & (1 << player) != 0
    }

    pub const fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub const fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub const fn minus(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub const fn with(self, player: usize) -> Self {
        Coalition(self.0 | (1 << player))
    }

    pub const fn without(self, player: usize) -> Self {
        Coalition(self.0 & !(1 << player))
    }

    pub fn complement(self, n: usize) -> Self {
        Coalition::grand(n).minus(self)
    }

    pub fn fits(self, n: usize) -> bool {
        n <= MAX_PLAYERS && (self.0 as u64) < (1u64 << n)
    }

    /// Zero-based members in increasing order.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask & (1 << i) != 0)
    }

    /// One-based members, the human-facing rendering.
    pub fn players_one_based(self) -> Vec<usize> {
        self.players().map(|p| p + 1).collect()
    }

    /// All `2^n` coalitions in mask order, starting with the empty one.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..(1u32 << n)).map(Coalition)
    }

    /// All subsets of `self` (including `∅` and `self`) in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Subsets {
    full: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(Coalition(cur))
    }
}

/// JSON rendering of a coalition: bitmask plus sorted one-based players.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalitionRepr {
    pub mask: u32,
    pub players: Vec<usize>,
}

impl From<Coalition> for CoalitionRepr {
    fn from(c: Coalition) -> Self {
        CoalitionRepr {
            mask: c.mask(),
            players: c.players_one_based(),
        }
    }
}

impl Serialize for Coalition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CoalitionRepr::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coalition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Mask(u32),
            Full { mask: u32 },
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Mask(m) | Raw::Full { mask: m } => Coalition(m),
        })
    }
}
