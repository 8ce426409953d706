//! Dense two-phase primal simplex over exact rationals.
//!
//! Used for nucleolus levels, hull membership and polytope intersection
//! tests. There are no tolerances: a reduced cost is negative or it is not.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// Entering/leaving variable selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Smallest-index rule; never cycles.
    #[default]
    Bland,
    /// Most negative reduced cost, falling back to Bland after a run of
    /// degenerate pivots.
    Dantzig,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize c·x` subject to linear constraints; each variable is either
/// free or nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    nonnegative: Vec<bool>,
    constraints: Vec<LinearConstraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn optimal(self) -> Option<(Rational, Vec<Rational>)> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

impl LinearProgram {
    /// All variables start nonnegative with a zero objective.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            objective: vec![Rational::zero(); num_vars],
            nonnegative: vec![true; num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.nonnegative[var] = false;
        self
    }

    pub fn minimize(&mut self, objective: Vec<Rational>) -> &mut Self {
        assert_eq!(objective.len(), self.num_vars());
        self.objective = objective;
        self
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars());
        self.constraints.push(LinearConstraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn add_le(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add(coeffs, Relation::Le, rhs)
    }

    pub fn add_ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add(coeffs, Relation::Ge, rhs)
    }

    pub fn add_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add(coeffs, Relation::Eq, rhs)
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn solve(&self) -> LpOutcome {
        self.solve_with(PivotRule::Bland)
    }

    pub fn solve_with(&self, rule: PivotRule) -> LpOutcome {
        let (mut tableau, columns) = self.standard_form();
        if !tableau.phase_one(rule) {
            return LpOutcome::Infeasible;
        }
        let mut cost = vec![Rational::zero(); tableau.width()];
        for (col, (var, sign)) in columns.iter().enumerate() {
            let c = &self.objective[*var];
            cost[col] = if *sign { c.clone() } else { -c };
        }
        if !tableau.optimize(&cost, rule) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); self.num_vars()];
        for (row, &col) in tableau.basis.iter().enumerate() {
            if let Some(&(var, sign)) = columns.get(col) {
                let v = tableau.rhs(row);
                if sign {
                    point[var] += v;
                } else {
                    point[var] -= v;
                }
            }
        }
        let value = self
            .objective
            .iter()
            .zip(&point)
            .fold(Rational::zero(), |acc, (c, x)| acc + c * x);
        LpOutcome::Optimal { value, point }
    }

    /// Builds the phase-one tableau. Returns it together with the mapping
    /// from structural tableau columns to `(variable, is_positive_part)`.
    fn standard_form(&self) -> (Tableau, Vec<(usize, bool)>) {
        let mut columns = Vec::new();
        for (var, &nonneg) in self.nonnegative.iter().enumerate() {
            columns.push((var, true));
            if !nonneg {
                columns.push((var, false));
            }
        }
        let structural = columns.len();
        let slack_count = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let m = self.constraints.len();

        // Decide which rows need an artificial variable before sizing the tableau.
        let mut needs_artificial = Vec::with_capacity(m);
        for c in &self.constraints {
            let negate = c.rhs.is_negative();
            let slack_positive = match c.relation {
                Relation::Le => !negate,
                Relation::Ge => negate,
                Relation::Eq => false,
            };
            needs_artificial.push(!slack_positive);
        }
        let artificial_count = needs_artificial.iter().filter(|&&a| a).count();
        let width = structural + slack_count + artificial_count;
        let first_artificial = structural + slack_count;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack_col = structural;
        let mut art_col = first_artificial;
        for (c, &artificial) in self.constraints.iter().zip(&needs_artificial) {
            let negate = c.rhs.is_negative();
            let mut row = vec![Rational::zero(); width + 1];
            for (col, &(var, sign)) in columns.iter().enumerate() {
                let a = &c.coeffs[var];
                if a.is_zero() {
                    continue;
                }
                let mut a = if sign { a.clone() } else { -a };
                if negate {
                    a = -a;
                }
                row[col] = a;
            }
            let mut slack_basic = None;
            match c.relation {
                Relation::Le | Relation::Ge => {
                    let unit = if c.relation == Relation::Le { 1 } else { -1 };
                    let unit = if negate { -unit } else { unit };
                    row[slack_col] = Rational::from_integer(unit.into());
                    if unit == 1 {
                        slack_basic = Some(slack_col);
                    }
                    slack_col += 1;
                }
                Relation::Eq => {}
            }
            row[width] = if negate { -&c.rhs } else { c.rhs.clone() };
            if artificial {
                row[art_col] = Rational::from_integer(1.into());
                basis.push(art_col);
                art_col += 1;
            } else {
                basis.push(slack_basic.expect("row without artificial has a unit slack"));
            }
            rows.push(row);
        }
        let tableau = Tableau {
            rows,
            basis,
            width,
            first_artificial,
            allow_artificial: true,
            obj: Vec::new(),
        };
        (tableau, columns)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
    first_artificial: usize,
    allow_artificial: bool,
    /// Reduced costs; the last entry is minus the objective value.
    obj: Vec<Rational>,
}

const DEGENERATE_RUN_LIMIT: usize = 50;

impl Tableau {
    fn width(&self) -> usize {
        self.width
    }

    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width]
    }

    fn is_artificial(&self, col: usize) -> bool {
        col >= self.first_artificial
    }

    /// Drives the artificial variables to zero. Returns false when the
    /// original system is infeasible.
    fn phase_one(&mut self, rule: PivotRule) -> bool {
        if self.first_artificial == self.width {
            return true;
        }
        let mut cost = vec![Rational::zero(); self.width];
        for c in cost.iter_mut().skip(self.first_artificial) {
            *c = Rational::from_integer(1.into());
        }
        let bounded = self.optimize(&cost, rule);
        debug_assert!(bounded, "phase one is bounded below by zero");
        if !self.obj[self.width].is_zero() {
            return false;
        }
        // Pivot remaining (zero-valued) artificials out of the basis, or drop
        // their rows when they are linearly dependent on the others.
        let mut row = 0;
        while row < self.rows.len() {
            if self.is_artificial(self.basis[row]) {
                let entering = (0..self.first_artificial).find(|&j| !self.rows[row][j].is_zero());
                match entering {
                    Some(j) => {
                        self.pivot(row, j);
                        row += 1;
                    }
                    None => {
                        self.rows.swap_remove(row);
                        self.basis.swap_remove(row);
                    }
                }
            } else {
                row += 1;
            }
        }
        self.allow_artificial = false;
        true
    }

    /// Runs the simplex method for `minimize cost·x`. Returns false when
    /// the problem is unbounded.
    fn optimize(&mut self, cost: &[Rational], rule: PivotRule) -> bool {
        let mut obj = vec![Rational::zero(); self.width + 1];
        obj[..self.width].clone_from_slice(cost);
        for (row, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (o, a) in obj.iter_mut().zip(&self.rows[row]) {
                if !a.is_zero() {
                    *o -= cb * a;
                }
            }
        }
        self.obj = obj;

        let mut degenerate_run = 0;
        loop {
            let use_bland = rule == PivotRule::Bland || degenerate_run >= DEGENERATE_RUN_LIMIT;
            let Some(entering) = self.entering(use_bland) else {
                return true;
            };
            let Some(leaving) = self.leaving(entering) else {
                return false;
            };
            if self.rhs(leaving).is_zero() {
                degenerate_run += 1;
            } else {
                degenerate_run = 0;
            }
            self.pivot(leaving, entering);
        }
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let candidates = (0..self.width)
            .filter(|&j| self.allow_artificial || !self.is_artificial(j))
            .filter(|&j| self.obj[j].is_negative());
        if bland {
            candidates.into_iter().next()
        } else {
            let mut best: Option<usize> = None;
            for j in candidates {
                match best {
                    Some(b) if self.obj[j] >= self.obj[b] => {}
                    _ => best = Some(j),
                }
            }
            best
        }
    }

    fn leaving(&self, entering: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (row, r) in self.rows.iter().enumerate() {
            let a = &r[entering];
            if !a.is_positive() {
                continue;
            }
            let ratio = &r[self.width] / a;
            let better = match &best {
                None => true,
                Some((b, q)) => ratio < *q || (ratio == *q && self.basis[row] < self.basis[*b]),
            };
            if better {
                best = Some((row, ratio));
            }
        }
        best.map(|(row, _)| row)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        let support: Vec<usize> = (0..=self.width)
            .filter(|&j| !self.rows[row][j].is_zero())
            .collect();
        for &j in &support {
            self.rows[row][j] /= &piv;
        }
        let pivot_row = std::mem::take(&mut self.rows[row]);
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let factor = r[col].clone();
            if factor.is_zero() {
                continue;
            }
            for &j in &support {
                r[j] -= &factor * &pivot_row[j];
            }
        }
        if !self.obj.is_empty() {
            let factor = self.obj[col].clone();
            if !factor.is_zero() {
                for &j in &support {
                    self.obj[j] -= &factor * &pivot_row[j];
                }
            }
        }
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_maximization() {
        // max 3x + 5y s.t. x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → (2, 6), value 36.
        for rule in [PivotRule::Bland, PivotRule::Dantzig] {
            let mut lp = LinearProgram::new(2);
            lp.minimize(v(&[-3, -5]))
                .add_le(v(&[1, 0]), int(4))
                .add_le(v(&[0, 2]), int(12))
                .add_le(v(&[3, 2]), int(18));
            let (value, point) = lp.solve_with(rule).optimal().unwrap();
            assert_eq!(value, int(-36));
            assert_eq!(point, v(&[2, 6]));
        }
    }

    #[test]
    fn free_variables_and_equalities() {
        // min x − y s.t. x + y = 1, x ≥ −2 (as constraint), y ≤ 3/2, x, y free.
        let mut lp = LinearProgram::new(2);
        lp.set_free(0).set_free(1);
        lp.minimize(v(&[1, -1]))
            .add_eq(v(&[1, 1]), int(1))
            .add_ge(v(&[1, 0]), int(-2))
            .add_le(v(&[0, 2]), int(3));
        let (value, point) = lp.solve().optimal().unwrap();
        assert_eq!(point, vec![ratio(-1, 2), ratio(3, 2)]);
        assert_eq!(value, int(-2));
    }

    #[test]
    fn detects_infeasibility() {
        let mut lp = LinearProgram::new(1);
        lp.add_ge(v(&[1]), int(2)).add_le(v(&[1]), int(1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unboundedness() {
        let mut lp = LinearProgram::new(2);
        lp.minimize(v(&[-1, 0])).add_ge(v(&[1, -1]), int(0));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut lp = LinearProgram::new(2);
        lp.minimize(v(&[1, 2]))
            .add_eq(v(&[1, 1]), int(2))
            .add_eq(v(&[2, 2]), int(4));
        let (value, point) = lp.solve().optimal().unwrap();
        assert_eq!(point, v(&[2, 0]));
        assert_eq!(value, int(2));
    }

    #[test]
    fn degenerate_problem_terminates_under_both_rules() {
        // Beale's classic cycling example for Dantzig without safeguards.
        let q = |a: i64, b: i64| ratio(a, b);
        for rule in [PivotRule::Bland, PivotRule::Dantzig] {
            let mut lp = LinearProgram::new(4);
            lp.minimize(vec![q(-3, 4), int(150), q(-1, 50), int(6)])
                .add_le(vec![q(1, 4), int(-60), q(-1, 25), int(9)], int(0))
                .add_le(vec![q(1, 2), int(-90), q(-1, 50), int(3)], int(0))
                .add_le(vec![int(0), int(0), int(1), int(0)], int(1));
            let (value, _) = lp.solve_with(rule).optimal().unwrap();
            assert_eq!(value, q(-1, 20));
        }
    }
}
