//! Polyhedra in payoff space: H-representations, V-representations,
//! vertex enumeration by the double description method, and LP-based
//! membership/intersection/distance queries on V-representations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::PayoffVector;
use crate::lp::{LinearProgram, LpOutcome};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("constraint has {got} coefficients, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("constraint system has a nontrivial lineality space; vertex enumeration needs a pointed polyhedron")]
    NotPointed,
}

/// `{x : a·x = b for equalities, a·x ≥ b for inequalities}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    dim: usize,
    equalities: Vec<(Vec<Rational>, Rational)>,
    inequalities: Vec<(Vec<Rational>, Rational)>,
}

impl HRep {
    pub fn new(dim: usize) -> Self {
        HRep {
            dim,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check(&self, a: &[Rational]) -> Result<(), PolytopeError> {
        if a.len() == self.dim {
            Ok(())
        } else {
            Err(PolytopeError::DimensionMismatch {
                expected: self.dim,
                got: a.len(),
            })
        }
    }

    pub fn add_equality(&mut self, a: Vec<Rational>, b: Rational) -> Result<&mut Self, PolytopeError> {
        self.check(&a)?;
        self.equalities.push((a, b));
        Ok(self)
    }

    /// Adds `a·x ≥ b`.
    pub fn add_inequality(&mut self, a: Vec<Rational>, b: Rational) -> Result<&mut Self, PolytopeError> {
        self.check(&a)?;
        self.inequalities.push((a, b));
        Ok(self)
    }

    pub fn equalities(&self) -> &[(Vec<Rational>, Rational)] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[(Vec<Rational>, Rational)] {
        &self.inequalities
    }

    pub fn contains(&self, x: &PayoffVector) -> bool {
        let dot = |a: &[Rational]| a.iter().zip(x.as_slice()).fold(Rational::zero(), |acc, (p, q)| acc + p * q);
        self.equalities.iter().all(|(a, b)| dot(a) == *b)
            && self.inequalities.iter().all(|(a, b)| dot(a) >= *b)
    }

    /// Exact LP feasibility of the system.
    pub fn is_feasible(&self) -> bool {
        let mut lp = LinearProgram::new(self.dim);
        for j in 0..self.dim {
            lp.set_free(j);
        }
        for (a, b) in &self.equalities {
            lp.add_eq(a.clone(), b.clone());
        }
        for (a, b) in &self.inequalities {
            lp.add_ge(a.clone(), b.clone());
        }
        lp.solve().is_feasible()
    }

    /// Vertex enumeration by the double description method on the
    /// homogenized cone `{(λ, x) : λ ≥ 0, a·x − bλ ≥ 0, a·x − bλ = 0}`.
    pub fn to_vrep(&self) -> Result<Polytope, PolytopeError> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut lambda = vec![Rational::zero(); self.dim + 1];
        lambda[0] = Rational::one();
        rows.push(integer_row(&lambda));
        let homogenize = |a: &[Rational], b: &Rational| {
            let mut r = Vec::with_capacity(self.dim + 1);
            r.push(-b);
            r.extend(a.iter().cloned());
            r
        };
        for (a, b) in &self.equalities {
            let r = homogenize(a, b);
            let neg: Vec<Rational> = r.iter().map(|x| -x).collect();
            rows.push(integer_row(&r));
            rows.push(integer_row(&neg));
        }
        for (a, b) in &self.inequalities {
            rows.push(integer_row(&homogenize(a, b)));
        }
        let rays = double_description(&rows, self.dim + 1)?;
        let mut vertices = BTreeSet::new();
        let mut directions = BTreeSet::new();
        for ray in rays {
            let lam = &ray[0];
            if lam.is_positive() {
                let lam = Rational::from_integer(lam.clone());
                vertices.insert(PayoffVector(
                    ray[1..]
                        .iter()
                        .map(|c| Rational::from_integer(c.clone()) / &lam)
                        .collect(),
                ));
            } else {
                directions.insert(PayoffVector(
                    ray[1..].iter().map(|c| Rational::from_integer(c.clone())).collect(),
                ));
            }
        }
        if vertices.is_empty() {
            return Ok(Polytope {
                dim: self.dim,
                vertices: Vec::new(),
                rays: Vec::new(),
                hrep: Some(self.clone()),
            });
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: vertices.into_iter().collect(),
            rays: directions.into_iter().collect(),
            hrep: Some(self.clone()),
        })
    }
}

/// Scales a rational row to a primitive integer row with the same direction.
fn integer_row(r: &[Rational]) -> Vec<BigInt> {
    let lcm = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = r.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(ints)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

/// Extreme rays of the pointed cone `{y : row·y ≥ 0 for every row}` in
/// dimension `dim`, each as a primitive integer vector.
fn double_description(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>, PolytopeError> {
    let basis_rows = independent_rows(rows, dim).ok_or(PolytopeError::NotPointed)?;

    // Initial simplicial cone: columns of the inverse of the basis block.
    let inverse = invert(&basis_rows.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>());
    let mut rays: Vec<(Vec<BigInt>, Bits)> = (0..dim)
        .map(|k| {
            let col: Vec<Rational> = (0..dim).map(|r| inverse[r][k].clone()).collect();
            let ray = integer_row(&col);
            let mut zeros = Bits::new(rows.len());
            for (pos, &row) in basis_rows.iter().enumerate() {
                if pos != k {
                    zeros.set(row);
                }
            }
            (ray, zeros)
        })
        .collect();

    let in_basis: BTreeSet<usize> = basis_rows.iter().copied().collect();
    for (idx, row) in rows.iter().enumerate() {
        if in_basis.contains(&idx) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|(r, _)| dot(row, r)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        if negative.is_empty() {
            for (k, (_, z)) in rays.iter_mut().enumerate() {
                if values[k].is_zero() {
                    z.set(idx);
                }
            }
            continue;
        }
        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let common = rays[p].1.and(&rays[q].1);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !rays[r].1.is_superset_of(&common));
                if !adjacent {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let combined: Vec<BigInt> = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(yq, yp)| vp * yq + &vq * yp)
                    .collect();
                let mut zeros = common;
                zeros.set(idx);
                created.push((primitive(combined), zeros));
            }
        }
        let mut next = Vec::with_capacity(rays.len() + created.len());
        for (k, (ray, mut zeros)) in rays.into_iter().enumerate() {
            if values[k].is_negative() {
                continue;
            }
            if values[k].is_zero() {
                zeros.set(idx);
            }
            next.push((ray, zeros));
        }
        next.extend(created);
        rays = next;
    }
    Ok(rays.into_iter().map(|(r, _)| r).collect())
}

/// Indices of `dim` linearly independent rows, or `None` if the rank is lower.
fn independent_rows(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<usize>> {
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r: Vec<Rational> = row.iter().map(|x| Rational::from_integer(x.clone())).collect();
        for (pivot, e) in &echelon {
            if !r[*pivot].is_zero() {
                let f = &r[*pivot] / &e[*pivot];
                for (x, y) in r.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pivot) = r.iter().position(|x| !x.is_zero()) {
            echelon.push((pivot, r));
            chosen.push(idx);
            if chosen.len() == dim {
                return Some(chosen);
            }
        }
    }
    None
}

/// Gauss–Jordan inverse of a nonsingular square integer matrix.
fn invert(m: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|x| Rational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("matrix is nonsingular");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// A polyhedron given by vertices and recession rays, optionally with the
/// H-representation it was enumerated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<PayoffVector>,
    rays: Vec<PayoffVector>,
    hrep: Option<HRep>,
}

impl Polytope {
    pub fn empty(dim: usize) -> Self {
        Polytope {
            dim,
            vertices: Vec::new(),
            rays: Vec::new(),
            hrep: None,
        }
    }

    pub fn point(x: PayoffVector) -> Self {
        Polytope {
            dim: x.len(),
            vertices: vec![x],
            rays: Vec::new(),
            hrep: None,
        }
    }

    /// Convex hull of `points`; duplicates are removed and the remaining
    /// points are kept in canonical (sorted) order.
    pub fn from_points<I: IntoIterator<Item = PayoffVector>>(dim: usize, points: I) -> Self {
        let set: BTreeSet<PayoffVector> = points.into_iter().collect();
        debug_assert!(set.iter().all(|p| p.len() == dim));
        Polytope {
            dim,
            vertices: set.into_iter().collect(),
            rays: Vec::new(),
            hrep: None,
        }
    }

    pub fn with_rays<I: IntoIterator<Item = PayoffVector>>(mut self, rays: I) -> Self {
        let set: BTreeSet<PayoffVector> = self.rays.drain(..).chain(rays).collect();
        self.rays = set.into_iter().collect();
        self
    }

    pub fn with_hrep(mut self, hrep: HRep) -> Self {
        self.hrep = Some(hrep);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[PayoffVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[PayoffVector] {
        &self.rays
    }

    pub fn hrep(&self) -> Option<&HRep> {
        self.hrep.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Exact LP test: is `x` a convex combination of the vertices plus a
    /// nonnegative combination of the rays?
    pub fn contains(&self, x: &PayoffVector) -> bool {
        if self.is_empty() || x.len() != self.dim {
            return false;
        }
        if self.vertices.iter().any(|v| v == x) {
            return true;
        }
        let k = self.vertices.len();
        let mut lp = LinearProgram::new(k + self.rays.len());
        lp.add_eq(
            (0..k + self.rays.len())
                .map(|j| if j < k { Rational::one() } else { Rational::zero() })
                .collect(),
            Rational::one(),
        );
        for coord in 0..self.dim {
            let coeffs = self
                .vertices
                .iter()
                .chain(&self.rays)
                .map(|p| p[coord].clone())
                .collect();
            lp.add_eq(coeffs, x[coord].clone());
        }
        lp.solve().is_feasible()
    }

    /// Drops points that lie in the hull of the others.
    pub fn extreme_points(&self) -> Polytope {
        let mut kept = self.vertices.clone();
        let mut i = 0;
        while i < kept.len() {
            let candidate = kept[i].clone();
            let others = Polytope {
                dim: self.dim,
                vertices: kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect(),
                rays: self.rays.clone(),
                hrep: None,
            };
            if !others.is_empty() && others.contains(&candidate) {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        Polytope {
            dim: self.dim,
            vertices: kept,
            rays: self.rays.clone(),
            hrep: self.hrep.clone(),
        }
    }

    /// Whether both V-representations describe the same bounded set.
    pub fn same_hull(&self, other: &Polytope) -> bool {
        if self.is_empty() || other.is_empty() {
            return self.is_empty() == other.is_empty();
        }
        self.vertices.iter().all(|v| other.contains(v)) && other.vertices.iter().all(|v| self.contains(v))
            && self.rays.is_empty()
            && other.rays.is_empty()
    }

    /// `min_y ‖x − y‖_∞` over `y` in the polytope, solved exactly.
    pub fn linf_distance(&self, x: &PayoffVector) -> Option<Rational> {
        if self.is_empty() {
            return None;
        }
        let k = self.vertices.len();
        let r = self.rays.len();
        let t = k + r;
        let mut lp = LinearProgram::new(t + 1);
        let mut objective = vec![Rational::zero(); t + 1];
        objective[t] = Rational::one();
        lp.minimize(objective);
        lp.add_eq(
            (0..=t).map(|j| if j < k { Rational::one() } else { Rational::zero() }).collect(),
            Rational::one(),
        );
        for coord in 0..self.dim {
            let mut up: Vec<Rational> = self.vertices.iter().chain(&self.rays).map(|p| p[coord].clone()).collect();
            up.push(-Rational::one());
            let mut down: Vec<Rational> = self.vertices.iter().chain(&self.rays).map(|p| p[coord].clone()).collect();
            down.push(Rational::one());
            lp.add_le(up, x[coord].clone());
            lp.add_ge(down, x[coord].clone());
        }
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            vertices: self.vertices.iter().map(PayoffVector::to_strings).collect(),
            rays: self.rays.iter().map(PayoffVector::to_strings).collect(),
        }
    }
}

/// Whether the given V-polytopes have a common point (exact LP).
pub fn polytopes_intersect(polys: &[&Polytope]) -> bool {
    let Some(first) = polys.first() else {
        return true;
    };
    if polys.iter().any(|p| p.is_empty()) {
        return false;
    }
    let dim = first.dim;
    let sizes: Vec<usize> = polys.iter().map(|p| p.vertices.len() + p.rays.len()).collect();
    let total: usize = sizes.iter().sum::<usize>() + dim;
    let mut lp = LinearProgram::new(total);
    for j in 0..dim {
        lp.set_free(j);
    }
    let mut offset = dim;
    for (p, &size) in polys.iter().zip(&sizes) {
        let k = p.vertices.len();
        let mut convexity = vec![Rational::zero(); total];
        for c in convexity.iter_mut().skip(offset).take(k) {
            *c = Rational::one();
        }
        lp.add_eq(convexity, Rational::one());
        for coord in 0..dim {
            let mut row = vec![Rational::zero(); total];
            row[coord] = -Rational::one();
            for (j, q) in p.vertices.iter().chain(&p.rays).enumerate() {
                row[offset + j] = q[coord].clone();
            }
            lp.add_eq(row, Rational::zero());
        }
        offset += size;
    }
    lp.solve().is_feasible()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
}

impl Serialize for Polytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
