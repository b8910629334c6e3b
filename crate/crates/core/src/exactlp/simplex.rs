//! Phase-one simplex over the rationals with Bland's rule.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use super::{dot, Rational};

/// A system `A x = b`, `G x >= h` over free rational variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    vars: usize,
    equalities: Vec<(Vec<Rational>, Rational)>,
    inequalities: Vec<(Vec<Rational>, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Multipliers `y` (free, one per equality) and `z >= 0` (one per
/// inequality) with `y^T A + z^T G = 0` and `y^T b + z^T h = 1`.
///
/// Any feasible `x` would give `0 = (y^T A + z^T G) x >= y^T b + z^T h = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FarkasCertificate {
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub equalities: Vec<Rational>,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub inequalities: Vec<Rational>,
}

impl FarkasCertificate {
    /// Equality multipliers followed by inequality multipliers.
    pub fn multipliers(&self) -> Vec<Rational> {
        self.equalities.iter().chain(&self.inequalities).cloned().collect()
    }

    pub fn certifies(&self, sys: &LinearSystem) -> bool {
        if self.equalities.len() != sys.equalities.len()
            || self.inequalities.len() != sys.inequalities.len()
            || self.inequalities.iter().any(|z| z.is_negative())
        {
            return false;
        }
        let mut combo = vec![Rational::zero(); sys.vars];
        let mut rhs = Rational::zero();
        let rows = sys.equalities.iter().zip(&self.equalities);
        for ((a, b), y) in rows.chain(sys.inequalities.iter().zip(&self.inequalities)) {
            if y.is_zero() {
                continue;
            }
            for (c, x) in combo.iter_mut().zip(a) {
                *c += y * x;
            }
            rhs += y * b;
        }
        combo.iter().all(Zero::is_zero) && rhs.is_positive()
    }
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        LinearSystem { vars, ..Default::default() }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn equalities(&self) -> &[(Vec<Rational>, Rational)] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[(Vec<Rational>, Rational)] {
        &self.inequalities
    }

    /// Add `coeffs . x = rhs`. Panics if the row has the wrong length.
    pub fn add_equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars, "equality row length");
        self.equalities.push((coeffs, rhs));
    }

    /// Add `coeffs . x >= rhs`. Panics if the row has the wrong length.
    pub fn add_inequality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars, "inequality row length");
        self.inequalities.push((coeffs, rhs));
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.vars
            && self.equalities.iter().all(|(a, b)| dot(a, x) == *b)
            && self.inequalities.iter().all(|(a, b)| dot(a, x) >= *b)
    }

    pub fn solve(&self) -> Feasibility {
        solve_feasibility(self)
    }
}

/// Index of the single nonzero entry if it is positive.
fn single_positive(a: &[Rational]) -> Option<usize> {
    let mut found = None;
    for (j, x) in a.iter().enumerate() {
        if !x.is_zero() {
            if found.is_some() || x.is_negative() {
                return None;
            }
            found = Some(j);
        }
    }
    found
}

/// Decide feasibility of `sys` exactly.
///
/// Single-variable rows `c x_j >= h` with `c > 0` become lower bounds; the
/// other variables are split into positive and negative parts. Phase one
/// minimises the sum of artificials; the final simplex multipliers give the
/// Farkas certificate when the optimum is positive.
pub fn solve_feasibility(sys: &LinearSystem) -> Feasibility {
    let n = sys.vars;
    // (bound row, bound value)
    let mut bound: Vec<Option<(usize, Rational)>> = vec![None; n];
    let mut is_bound_row = vec![false; sys.inequalities.len()];
    for (r, (a, h)) in sys.inequalities.iter().enumerate() {
        if let Some(j) = single_positive(a) {
            is_bound_row[r] = true;
            let v = h / &a[j];
            if bound[j].as_ref().is_none_or(|(_, w)| v > *w) {
                bound[j] = Some((r, v));
            }
        }
    }
    let lower: Vec<Rational> =
        bound.iter().map(|b| b.as_ref().map_or_else(Rational::zero, |(_, v)| v.clone())).collect();

    // structural columns: (variable, negated)
    let mut columns: Vec<(usize, bool)> = Vec::new();
    for (j, b) in bound.iter().enumerate() {
        columns.push((j, false));
        if b.is_none() {
            columns.push((j, true));
        }
    }
    // general rows: Ok(eq index) or Err(ineq index)
    let general: Vec<core::result::Result<usize, usize>> = (0..sys.equalities.len())
        .map(Ok)
        .chain((0..sys.inequalities.len()).filter(|&r| !is_bound_row[r]).map(Err))
        .collect();
    let m = general.len();
    let ns = columns.len();
    let nslack = general.iter().filter(|g| g.is_err()).count();
    let art0 = ns + nslack;
    let width = art0 + m + 1;

    let row_of = |g: &core::result::Result<usize, usize>| match *g {
        Ok(e) => &sys.equalities[e],
        Err(i) => &sys.inequalities[i],
    };

    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut sigma: Vec<bool> = Vec::with_capacity(m); // true when negated
    let mut slack = ns;
    for (r, g) in general.iter().enumerate() {
        let (a, b) = row_of(g);
        let mut row = vec![Rational::zero(); width];
        for (c, &(j, neg)) in columns.iter().enumerate() {
            row[c] = if neg { -a[j].clone() } else { a[j].clone() };
        }
        if g.is_err() {
            row[slack] = -Rational::one();
            slack += 1;
        }
        row[art0 + r] = Rational::one();
        row[width - 1] = b - dot(a, &lower);
        let neg = row[width - 1].is_negative();
        if neg {
            for (c, x) in row.iter_mut().enumerate() {
                if c != art0 + r {
                    *x = -x.clone();
                }
            }
        }
        sigma.push(neg);
        t.push(row);
    }

    let mut basis: Vec<usize> = (art0..art0 + m).collect();
    // reduced costs for the phase-one objective, last entry is minus the objective
    let mut d = vec![Rational::zero(); width];
    for c in 0..width {
        if c >= art0 && c < art0 + m {
            continue;
        }
        let s = t.iter().fold(Rational::zero(), |acc, row| acc + &row[c]);
        d[c] = -s;
    }

    while let Some(e) = (0..width - 1).find(|&c| d[c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if !t[r][e].is_positive() {
                continue;
            }
            let ratio = &t[r][width - 1] / &t[r][e];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*l]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (r, _) = leave.expect("phase one is bounded below");
        pivot(&mut t, &mut d, r, e);
        basis[r] = e;
    }

    let objective = -d[width - 1].clone();
    if objective.is_zero() {
        let mut value = vec![Rational::zero(); width - 1];
        for (r, &b) in basis.iter().enumerate() {
            value[b] = t[r][width - 1].clone();
        }
        let mut x = lower;
        for (c, &(j, neg)) in columns.iter().enumerate() {
            if neg {
                x[j] -= &value[c];
            } else {
                x[j] += &value[c];
            }
        }
        debug_assert!(sys.satisfied_by(&x));
        return Feasibility::Feasible(x);
    }

    // y_r = 1 - d[artificial r]; multiplier on the original row is sigma_r y_r
    let mut eq = vec![Rational::zero(); sys.equalities.len()];
    let mut ineq = vec![Rational::zero(); sys.inequalities.len()];
    let mut combo = vec![Rational::zero(); n];
    for (r, g) in general.iter().enumerate() {
        let mut w = Rational::one() - &d[art0 + r];
        if sigma[r] {
            w = -w;
        }
        let (a, _) = row_of(g);
        for (c, x) in combo.iter_mut().zip(a) {
            *c += &w * x;
        }
        match *g {
            Ok(i) => eq[i] = w,
            Err(i) => ineq[i] = w,
        }
    }
    for (j, b) in bound.iter().enumerate() {
        if let Some((r, _)) = b {
            ineq[*r] = -combo[j].clone() / &sys.inequalities[*r].0[j];
        }
    }
    let mut cert = FarkasCertificate { equalities: eq, inequalities: ineq };
    let total = dot(&cert.multipliers(), &rhs_vector(sys));
    debug_assert!(total.is_positive());
    for y in cert.equalities.iter_mut().chain(cert.inequalities.iter_mut()) {
        *y /= &total;
    }
    debug_assert!(cert.certifies(sys));
    Feasibility::Infeasible(cert)
}

fn rhs_vector(sys: &LinearSystem) -> Vec<Rational> {
    sys.equalities.iter().chain(&sys.inequalities).map(|(_, b)| b.clone()).collect()
}

fn pivot(t: &mut [Vec<Rational>], d: &mut [Rational], r: usize, e: usize) {
    let inv = t[r][e].recip();
    for x in t[r].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let prow = core::mem::take(&mut t[r]);
    let nz: Vec<usize> = (0..prow.len()).filter(|&c| !prow[c].is_zero()).collect();
    let eliminate = |row: &mut [Rational]| {
        if row[e].is_zero() {
            return;
        }
        let f = row[e].clone();
        for &c in &nz {
            row[c] -= &f * &prow[c];
        }
    };
    for (i, row) in t.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(d);
    t[r] = prow;
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;

    fn row(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn feasible_box() {
        let mut s = LinearSystem::new(1);
        s.add_inequality(row(&[1]), int(0));
        s.add_inequality(row(&[-1]), int(-1));
        match s.solve() {
            Feasibility::Feasible(x) => assert!(s.satisfied_by(&x)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_pair_has_unit_certificate() {
        let mut s = LinearSystem::new(1);
        s.add_inequality(row(&[1]), int(1));
        s.add_inequality(row(&[-1]), int(0));
        match s.solve() {
            Feasibility::Infeasible(c) => {
                assert_eq!(c.multipliers(), [int(1), int(1)]);
                assert!(c.certifies(&s));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_system_is_feasible() {
        let s = LinearSystem::new(0);
        assert_eq!(s.solve(), Feasibility::Feasible(vec![]));
    }

    #[test]
    fn inconsistent_equalities() {
        let mut s = LinearSystem::new(2);
        s.add_equality(row(&[1, 1]), int(1));
        s.add_equality(row(&[2, 2]), int(3));
        match s.solve() {
            Feasibility::Infeasible(c) => assert!(c.certifies(&s)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bounds_and_general_rows_mix() {
        // x >= 2, y >= 1, x + y <= 2
        let mut s = LinearSystem::new(2);
        s.add_inequality(row(&[1, 0]), int(2));
        s.add_inequality(row(&[0, 3]), int(3));
        s.add_inequality(row(&[-1, -1]), int(-2));
        match s.solve() {
            Feasibility::Infeasible(c) => assert!(c.certifies(&s)),
            other => panic!("{other:?}"),
        }
        let mut s = LinearSystem::new(2);
        s.add_inequality(row(&[1, 0]), int(2));
        s.add_inequality(row(&[0, 3]), int(3));
        s.add_inequality(row(&[-1, -1]), int(-3));
        assert!(s.solve().is_feasible());
    }
}
