//! Exact solution concepts for transferable-utility cooperative games and
//! their approximations from minimal incomplete information.

pub mod approx;
pub mod coalition;
pub mod game;
pub mod incomplete;
pub mod lp;
pub mod oracle;
pub mod polytope;
pub mod rational;
pub mod solutions;
pub mod verify;

pub use coalition::{Coalition, MAX_PLAYERS};
pub use game::{linear_combination, Dividends, Game, GameClassReport, GameError, PayoffVector};
pub use polytope::{HRep, Polytope};
pub use rational::Rational;
