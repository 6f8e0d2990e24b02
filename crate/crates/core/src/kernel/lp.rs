//! Exact rational linear programming: two-phase dense simplex with Bland's rule.

use num::{One, Signed, Zero};

use super::rational::{Point, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs . x  (relation)  bound`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub bound: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, bound: Rational) -> Self {
        Constraint { coeffs, relation, bound }
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self.coeffs.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        match self.relation {
            Relation::Le => lhs <= self.bound,
            Relation::Ge => lhs >= self.bound,
            Relation::Eq => lhs == self.bound,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// A linear program over free variables; individual variables may be marked nonnegative.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    constraints: Vec<Constraint>,
    objective: Vec<Rational>,
    sense: Sense,
    nonnegative: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, witness: Point },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal_value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize, sense: Sense, objective: Vec<Rational>) -> Self {
        LinearProgram { num_vars, constraints: Vec::new(), objective, sense, nonnegative: vec![false; num_vars] }
    }

    /// A program with a zero objective, for feasibility questions.
    pub fn feasibility(num_vars: usize) -> Self {
        Self::new(num_vars, Sense::Minimize, vec![Rational::zero(); num_vars])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, bound: Rational) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, bound });
        self
    }

    pub fn set_nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonnegative[var] = true;
        self
    }

    pub fn set_all_nonnegative(&mut self) -> &mut Self {
        self.nonnegative.iter_mut().for_each(|b| *b = true);
        self
    }

    pub fn is_nonnegative(&self, var: usize) -> bool {
        self.nonnegative[var]
    }

    fn validate(&self) -> Result<()> {
        if self.objective.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: self.objective.len() });
        }
        for c in &self.constraints {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch { expected: self.num_vars, found: c.coeffs.len() });
            }
        }
        Ok(())
    }

    /// `true` when `x` meets every constraint and sign restriction exactly.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && self.constraints.iter().all(|c| c.is_satisfied(x))
            && x.iter().zip(&self.nonnegative).all(|(v, &nn)| !nn || !v.is_negative())
    }

    pub fn solve(&self) -> Result<LpOutcome> {
        self.validate()?;
        Ok(Simplex::build(self).run(self))
    }
}

/// Solves `lp` exactly. Panics only on malformed dimensions; use [`LinearProgram::solve`] to get an error instead.
pub fn lp_solve(lp: &LinearProgram) -> LpOutcome {
    lp.solve().expect("malformed linear program")
}

struct Simplex {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Column pair (positive part, negative part) of every original variable.
    var_cols: Vec<(usize, Option<usize>)>,
    structural: usize,
    total: usize,
}

impl Simplex {
    fn build(lp: &LinearProgram) -> Simplex {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut next = 0;
        for v in 0..lp.num_vars {
            if lp.nonnegative[v] {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let slack_start = next;
        let num_slack = lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
        let structural = slack_start + num_slack;

        let mut rows = Vec::with_capacity(lp.constraints.len());
        let mut rhs = Vec::with_capacity(lp.constraints.len());
        let mut slack_of_row = Vec::with_capacity(lp.constraints.len());
        let mut slack = slack_start;
        for c in &lp.constraints {
            let mut row = vec![Rational::zero(); structural];
            for (v, a) in c.coeffs.iter().enumerate() {
                let (p, n) = var_cols[v];
                row[p] = a.clone();
                if let Some(n) = n {
                    row[n] = -a;
                }
            }
            let mut b = c.bound.clone();
            let slack_col = match c.relation {
                Relation::Le => {
                    row[slack] = Rational::one();
                    slack += 1;
                    Some(slack - 1)
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    Some(slack - 1)
                }
                Relation::Eq => None,
            };
            if b.is_negative() {
                row.iter_mut().for_each(|v| *v = -&*v);
                b = -b;
            }
            slack_of_row.push(slack_col.filter(|&s| row[s].is_one()));
            rows.push(row);
            rhs.push(b);
        }

        // Rows whose slack enters with +1 start basic on it; the rest get an artificial.
        let mut total = structural;
        let mut basis = Vec::with_capacity(rows.len());
        let needs_art: Vec<bool> = slack_of_row.iter().map(Option::is_none).collect();
        let num_art = needs_art.iter().filter(|&&b| b).count();
        for row in rows.iter_mut() {
            row.resize(structural + num_art, Rational::zero());
        }
        for (i, s) in slack_of_row.iter().enumerate() {
            match s {
                Some(s) => basis.push(*s),
                None => {
                    rows[i][total] = Rational::one();
                    basis.push(total);
                    total += 1;
                }
            }
        }
        Simplex { rows, rhs, basis, var_cols, structural, total }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, dj) in d.iter_mut().enumerate() {
                if !self.rows[i][j].is_zero() {
                    *dj = &*dj - &(&cost[b] * &self.rows[i][j]);
                }
            }
        }
        d
    }

    fn pivot(&mut self, r: usize, c: usize, d: &mut [Rational]) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
            self.rhs[i] = &self.rhs[i] - &(&f * &prhs);
        }
        if !d[c].is_zero() {
            let f = d[c].clone();
            for (v, p) in d.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule iterations over columns `< limit`. Returns false when unbounded.
    fn iterate(&mut self, d: &mut [Rational], limit: usize) -> bool {
        loop {
            let Some(enter) = (0..limit).find(|&j| d[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr || (ratio == lr && self.basis[i] < self.basis[li]) {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, enter, d),
            }
        }
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        // Phase one: drive the artificials to zero.
        if self.total > self.structural {
            let mut cost = vec![Rational::zero(); self.total];
            cost[self.structural..].iter_mut().for_each(|c| *c = Rational::one());
            let mut d = self.reduced_costs(&cost);
            self.iterate(&mut d, self.total);
            let infeasibility = self
                .basis
                .iter()
                .zip(&self.rhs)
                .filter(|(&b, _)| b >= self.structural)
                .fold(Rational::zero(), |acc, (_, v)| acc + v);
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.structural {
                    match (0..self.structural).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            let mut scratch = vec![Rational::zero(); self.total];
                            self.pivot(i, j, &mut scratch);
                            i += 1;
                        }
                        None => {
                            self.rows.remove(i);
                            self.rhs.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
            for row in self.rows.iter_mut() {
                row.truncate(self.structural);
            }
            self.total = self.structural;
        }

        // Phase two.
        let sign = match lp.sense {
            Sense::Minimize => Rational::one(),
            Sense::Maximize => -Rational::one(),
        };
        let mut cost = vec![Rational::zero(); self.total];
        for (v, c) in lp.objective.iter().enumerate() {
            let (p, n) = self.var_cols[v];
            cost[p] = c * &sign;
            if let Some(n) = n {
                cost[n] = -(c * &sign);
            }
        }
        let mut d = self.reduced_costs(&cost);
        if !self.iterate(&mut d, self.total) {
            return LpOutcome::Unbounded;
        }

        let mut col_value = vec![Rational::zero(); self.total];
        for (i, &b) in self.basis.iter().enumerate() {
            col_value[b] = self.rhs[i].clone();
        }
        let witness: Vec<Rational> = self
            .var_cols
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => &col_value[p] - &col_value[n],
                None => col_value[p].clone(),
            })
            .collect();
        let value = lp.objective.iter().zip(&witness).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        LpOutcome::Optimal { value, witness: Point(witness) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, ratio};

    #[test]
    fn min_x_at_least_three() {
        let mut lp = LinearProgram::new(1, Sense::Minimize, vec![rat(1)]);
        lp.add_constraint(vec![rat(1)], Relation::Ge, rat(3));
        match lp_solve(&lp) {
            LpOutcome::Optimal { value, witness } => {
                assert_eq!(value, rat(3));
                assert_eq!(witness, Point::from_ints(&[3]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1, Sense::Minimize, vec![rat(1)]);
        lp.add_constraint(vec![rat(1)], Relation::Ge, rat(3));
        lp.add_constraint(vec![rat(1)], Relation::Le, rat(2));
        assert_eq!(lp_solve(&lp), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(1, Sense::Maximize, vec![rat(1)]);
        lp.add_constraint(vec![rat(1)], Relation::Ge, rat(3));
        assert_eq!(lp_solve(&lp), LpOutcome::Unbounded);
    }

    // the GL2 system: p = (tau + 3s + 2, -tau - s - 2) in 2P, tau >= 0; eliminating by hand
    // leaves tau <= 2 - 3s, tau >= 0, so s <= 2/3.
    #[test]
    fn parametric_gl2_system() {
        // variables: tau, s
        let mut lp = LinearProgram::new(2, Sense::Maximize, vec![rat(0), rat(1)]);
        lp.set_nonnegative(0);
        // 2 + x + y >= 0 with x + y = 2s
        lp.add_constraint(vec![rat(0), rat(2)], Relation::Ge, rat(-2));
        // 2 - x - y >= 0
        lp.add_constraint(vec![rat(0), rat(2)], Relation::Le, rat(2));
        // 4 - x >= 0: tau + 3s <= 2
        lp.add_constraint(vec![rat(1), rat(3)], Relation::Le, rat(2));
        // 4 - y >= 0: -tau - s <= 6
        lp.add_constraint(vec![rat(-1), rat(-1)], Relation::Le, rat(6));
        match lp_solve(&lp) {
            LpOutcome::Optimal { value, witness } => {
                assert_eq!(value, ratio(2, 3));
                assert!(lp.is_feasible_point(&witness.0));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equality_rows_and_redundancy() {
        // x + y = 1, 2x + 2y = 2, minimise x - y with x, y >= 0
        let mut lp = LinearProgram::new(2, Sense::Minimize, vec![rat(1), rat(-1)]);
        lp.set_all_nonnegative();
        lp.add_constraint(vec![rat(1), rat(1)], Relation::Eq, rat(1));
        lp.add_constraint(vec![rat(2), rat(2)], Relation::Eq, rat(2));
        assert_eq!(lp_solve(&lp).optimal_value(), Some(&rat(-1)));
    }

    #[test]
    fn malformed_dimensions() {
        let mut lp = LinearProgram::new(2, Sense::Minimize, vec![rat(1), rat(0)]);
        lp.add_constraint(vec![rat(1)], Relation::Le, rat(1));
        assert!(matches!(lp.solve(), Err(Error::DimensionMismatch { .. })));
    }
}
