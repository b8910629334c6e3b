//! Slow reference implementations used to cross-check the main algorithms.
//!
//! None of these share code paths with what they check beyond the exact
//! arithmetic itself: feasibility by Fourier–Motzkin elimination instead of
//! the simplex method, partitions by trying every sign vector, and so on.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::embedding::PointConfiguration;
use crate::exactlp::{LinearSystem, Rational};
use crate::partitions::{common_hyperplane, realization_system};

/// Feasibility of `sys` by Fourier–Motzkin elimination, after using the
/// equalities to substitute variables away. Exponential; keep systems small.
pub fn fourier_motzkin_feasible(sys: &LinearSystem) -> bool {
    // rows a.x >= b stored as (a, b)
    let mut eqs: Vec<(Vec<Rational>, Rational)> = sys.equalities().to_vec();
    let mut rows: Vec<(Vec<Rational>, Rational)> = sys.inequalities().to_vec();
    let mut left: Vec<usize> = (0..sys.vars()).collect();
    while let Some((a, b)) = eqs.pop() {
        let Some(v) = left.iter().copied().find(|&v| !a[v].is_zero()) else {
            if !b.is_zero() {
                return false;
            }
            continue;
        };
        left.retain(|&x| x != v);
        // x_v = (b - sum_{u != v} a_u x_u) / a_v
        let substitute = |(c, e): &mut (Vec<Rational>, Rational)| {
            if c[v].is_zero() {
                return;
            }
            let f = &c[v] / &a[v];
            for (cu, au) in c.iter_mut().zip(&a) {
                *cu -= &f * au;
            }
            *e -= &f * &b;
        };
        eqs.iter_mut().for_each(substitute);
        rows.iter_mut().for_each(substitute);
    }
    while !left.is_empty() {
        rows = normalise(rows);
        // eliminate the variable producing the fewest new rows
        let cost = |v: usize| {
            let p = rows.iter().filter(|r| r.0[v].is_positive()).count();
            let n = rows.iter().filter(|r| r.0[v].is_negative()).count();
            p * n
        };
        let at = (0..left.len()).min_by_key(|&i| cost(left[i])).unwrap();
        let v = left.swap_remove(at);
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.0[v].is_positive() {
                pos.push(r);
            } else if r.0[v].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                // scale so the coefficients of v cancel
                let (sp, sn) = (-na[v].clone(), pa[v].clone());
                let a: Vec<Rational> = pa.iter().zip(na).map(|(x, y)| x * &sp + y * &sn).collect();
                let b = pb * &sp + nb * &sn;
                rest.push((a, b));
            }
        }
        rows = rest;
        if rows.iter().any(|(a, b)| b.is_positive() && a.iter().all(Zero::is_zero)) {
            return false;
        }
    }
    rows.iter().all(|(_, b)| !b.is_positive())
}

// scale each row so its largest coefficient has absolute value 1, then dedup
fn normalise(rows: Vec<(Vec<Rational>, Rational)>) -> Vec<(Vec<Rational>, Rational)> {
    let mut out: Vec<(Vec<Rational>, Rational)> = rows
        .into_iter()
        .map(|(a, b)| match a.iter().map(|x| x.abs()).max().filter(|m| !m.is_zero()) {
            Some(m) => (a.iter().map(|x| x / &m).collect(), b / m),
            None => (a, b),
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every `(on, above)` pair realised by some oriented hyperplane, found by
/// trying all `3^n` sign vectors.
pub fn partitions_brute_force(s: &PointConfiguration) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let n = s.len();
    let mut out = BTreeSet::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut on, mut above) = (Vec::new(), Vec::new());
        let mut c = code;
        for i in 0..n {
            match c % 3 {
                0 => on.push(i),
                1 => above.push(i),
                _ => {}
            }
            c /= 3;
        }
        let ok = if on.len() == n {
            common_hyperplane(s).is_some()
        } else {
            fourier_motzkin_feasible(&realization_system(s, &on, &above))
        };
        if ok {
            out.insert((on, above));
        }
    }
    out
}

/// Number of subsets `T` with `T = S ∩ H` for some open halfspace `H`
/// (including the empty set and `S`), by trying all `2^n` subsets.
pub fn halfspace_cut_count(s: &PointConfiguration) -> usize {
    let n = s.len();
    (0..1usize << n)
        .filter(|mask| {
            let above: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            fourier_motzkin_feasible(&realization_system(s, &[], &above))
        })
        .count()
}

/// Whether `p` is in the convex hull of `others`, by Fourier–Motzkin on the
/// separating functionals.
pub fn in_convex_hull(p: &[Rational], others: &[&[Rational]]) -> bool {
    // look for a separating (a, b): a.q <= b on others, a.p >= b + 1
    let d = p.len();
    let one = Rational::from_integer(1.into());
    let mut sys = LinearSystem::new(d + 1);
    for q in others {
        let mut row: Vec<Rational> = q.iter().map(|x| -x).collect();
        row.push(one.clone());
        sys.add_inequality(row, Rational::zero());
    }
    let mut row: Vec<Rational> = p.to_vec();
    row.push(-one.clone());
    sys.add_inequality(row, one);
    !fourier_motzkin_feasible(&sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;

    #[test]
    fn fm_small_systems() {
        let mut s = LinearSystem::new(1);
        s.add_inequality(alloc::vec![int(1)], int(1));
        s.add_inequality(alloc::vec![int(-1)], int(0));
        assert!(!fourier_motzkin_feasible(&s));
        let mut s = LinearSystem::new(2);
        s.add_equality(alloc::vec![int(1), int(1)], int(2));
        s.add_inequality(alloc::vec![int(1), int(-1)], int(0));
        assert!(fourier_motzkin_feasible(&s));
    }

    #[test]
    fn square_halfspace_count() {
        let pts = [[0, 0], [1, 0], [0, 1], [1, 1]];
        let s = PointConfiguration::new(2, pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect())
            .unwrap();
        // 2 (C(3,0) + C(3,1) + C(3,2)) = 14
        assert_eq!(halfspace_cut_count(&s), 14);
    }
}
