//! Explicit configurations and the extremal bounds on `g_k(n,d)`, the largest
//! number of edges of a k-uniform hypergraph on n vertices with a convex
//! embedding in `R^d`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::embedding::{barycenter, Hypergraph, PointConfiguration};
use crate::exactlp::{frac, int, Rational};
use crate::subsets::{binomial, combinations};
use crate::theorems::cd_complete;
use crate::{Error, Result};

fn invalid<T>(msg: alloc::string::String) -> Result<T> {
    Err(Error::InvalidArgument(msg))
}

/// Points `(t, t^2, ..., t^d)` for `t = 1..=n`.
pub fn cyclic_config(n: usize, d: usize) -> Result<PointConfiguration> {
    if n == 0 || d == 0 {
        return invalid(alloc::format!("cyclic configuration needs n, d >= 1, got n={n}, d={d}"));
    }
    let points = (1..=n as i64)
        .map(|t| {
            let mut p = Vec::with_capacity(d);
            let mut x = int(t);
            for _ in 0..d {
                p.push(x.clone());
                x *= int(t);
            }
            p
        })
        .collect();
    PointConfiguration::new(d, points)
}

/// The origin and the unit vectors of `R^d`.
pub fn simplex(d: usize) -> PointConfiguration {
    let mut points = vec![vec![Rational::zero(); d]];
    for i in 0..d {
        let mut p = vec![Rational::zero(); d];
        p[i] = Rational::one();
        points.push(p);
    }
    PointConfiguration::new(d, points).expect("simplex vertices are distinct")
}

/// The vertices of an `(n-2)`-simplex together with its barycenter.
pub fn simplex_with_barycenter(n: usize) -> Result<PointConfiguration> {
    if n < 3 {
        return invalid(alloc::format!("simplex with barycenter needs n >= 3, got {n}"));
    }
    let s = simplex(n - 2);
    let all: Vec<usize> = (0..n - 1).collect();
    let mut points = s.points().to_vec();
    points.push(barycenter(&s, &all));
    PointConfiguration::new(n - 2, points)
}

fn centered(p: &PointConfiguration) -> Vec<Vec<Rational>> {
    let all: Vec<usize> = (0..p.len()).collect();
    let c = barycenter(p, &all);
    p.points().iter().map(|x| x.iter().zip(&c).map(|(a, b)| a - b).collect()).collect()
}

/// `p ⊕ q`: `p` in the first coordinates and `q` in the last, each centred
/// at its barycenter so the two meet at the origin.
pub fn direct_sum(p: &PointConfiguration, q: &PointConfiguration) -> Result<PointConfiguration> {
    p.require_spanning()?;
    q.require_spanning()?;
    let (a, b) = (p.dim(), q.dim());
    let mut points = Vec::with_capacity(p.len() + q.len());
    for x in centered(p) {
        let mut y = x;
        y.resize(a + b, Rational::zero());
        points.push(y);
    }
    for x in centered(q) {
        let mut y = vec![Rational::zero(); a];
        y.extend(x);
        points.push(y);
    }
    PointConfiguration::new(a + b, points)
}

/// `p` in the first coordinates plus `r` apexes on fresh coordinate axes.
pub fn pyramid(p: &PointConfiguration, r: usize) -> Result<PointConfiguration> {
    let d = p.dim();
    let mut points: Vec<Vec<Rational>> = p
        .points()
        .iter()
        .map(|x| {
            let mut y = x.clone();
            y.resize(d + r, Rational::zero());
            y
        })
        .collect();
    for t in 0..r {
        let mut y = vec![Rational::zero(); d + r];
        y[d + t] = Rational::one();
        points.push(y);
    }
    PointConfiguration::new(d + r, points)
}

/// `d` parts of `n` points in `R^d` and the complete `d`-partite `k`-uniform
/// hypergraph on them. Part `t` is `{a e_t + a^2 e_d : a = 1..n}` where
/// `e_0 = -(e_1 + ... + e_{d-1})`. Vertex `t*n + (a-1)` is point `a` of part `t`.
pub fn multipartite_lift(d: usize, k: usize, n: usize) -> Result<(PointConfiguration, Hypergraph)> {
    if k == 0 || d <= k || n == 0 {
        return invalid(alloc::format!("multipartite lift needs 1 <= k < d and n >= 1, got d={d}, k={k}, n={n}"));
    }
    let mut points = Vec::with_capacity(d * n);
    for t in 0..d {
        for a in 1..=n as i64 {
            let mut p = vec![Rational::zero(); d];
            if t == 0 {
                for x in p.iter_mut().take(d - 1) {
                    *x = int(-a);
                }
            } else {
                p[t - 1] = int(a);
            }
            p[d - 1] = int(a * a);
            points.push(p);
        }
    }
    let mut edges = Vec::new();
    for parts in combinations(d, k) {
        // one vertex from each chosen part, odometer order
        let mut pick = vec![0usize; k];
        loop {
            edges.push(parts.iter().zip(&pick).map(|(&t, &a)| t * n + a).collect());
            let mut pos = k;
            while pos > 0 && pick[pos - 1] + 1 == n {
                pick[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            pick[pos - 1] += 1;
        }
    }
    let h = Hypergraph::new(d * n, k, edges)?;
    Ok((PointConfiguration::new(d, points)?, h))
}

/// `C(d,k) n^k`, the edge count of the multipartite lift.
pub fn multipartite_edge_count(d: usize, k: usize, n: usize) -> BigUint {
    binomial(d, k) * BigUint::from(n).pow(k as u32)
}

fn big(x: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// de Caen's bound on the Turán number `EX(n,k,l)`:
/// `(1 - (n-l+1)/(n-k+1) / C(l-1,k-1)) C(n,k)`.
pub fn de_caen_bound(n: usize, k: usize, l: usize) -> Result<Rational> {
    if k == 0 || k > l || l > n {
        return invalid(alloc::format!("de Caen bound needs 1 <= k <= l <= n, got n={n}, k={k}, l={l}"));
    }
    let ratio = frac((n - l + 1) as i64, (n - k + 1) as i64) / big(binomial(l - 1, k - 1));
    Ok((Rational::one() - ratio) * big(binomial(n, k)))
}

/// Largest `n` such that `K_n^(k)` has a convex embedding in `R^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Threshold {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(n) => write!(f, "{n}"),
            Threshold::Infinite => f.write_str("inf"),
        }
    }
}

pub fn n_kd(k: usize, d: usize) -> Result<Threshold> {
    if k == 0 || d == 0 {
        return invalid(alloc::format!("n_kd needs k, d >= 1, got k={k}, d={d}"));
    }
    Ok(if d == 1 {
        Threshold::Finite(if k == 1 { 2 } else { k })
    } else if d >= 2 * k {
        Threshold::Infinite
    } else if d + 3 >= 2 * k {
        Threshold::Finite(d + 2)
    } else {
        Threshold::Finite(d / 2 + k)
    })
}

/// `n_kd` recomputed from [`cd_complete`]: the largest `n >= k` with
/// `n = k` or `cd(n,k) <= d`, searching up to `limit`.
pub fn n_kd_from_cd(k: usize, d: usize, limit: usize) -> Threshold {
    let mut best = k;
    for n in k + 1..=limit {
        if cd_complete(n, k).is_ok_and(|c| c <= d) {
            best = n;
        }
    }
    if best == limit {
        Threshold::Infinite
    } else {
        Threshold::Finite(best)
    }
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, x| acc * BigUint::from(x))
}

/// `(C(d,k)/d^k, (1 - 1/C(n_kd, k-1))/k!)` for `k+1 <= d <= 2k-1`.
pub fn gamma_bounds(k: usize, d: usize) -> Result<(Rational, Rational)> {
    if d < k + 1 || d + 1 > 2 * k {
        return invalid(alloc::format!("gamma bounds need k+1 <= d <= 2k-1, got k={k}, d={d}"));
    }
    let lower = big(binomial(d, k)) / big(BigUint::from(d).pow(k as u32));
    let Threshold::Finite(m) = n_kd(k, d)? else { unreachable!("d < 2k") };
    let upper = (Rational::one() - Rational::one() / big(binomial(m, k - 1))) / big(factorial(k));
    Ok((lower, upper))
}

/// `2 (C(n-1,0) + ... + C(n-1,d))`, the number of subsets of `n` points in
/// general position in `R^d` cut out by halfspaces.
pub fn halfspace_upper_bound(n: usize, d: usize) -> Result<BigUint> {
    if n == 0 {
        return invalid("halfspace bound needs n >= 1".into());
    }
    Ok((0..=d).fold(BigUint::zero(), |acc, t| acc + binomial(n - 1, t)) * 2u32)
}

/// Upper and lower bounds on `g_k(n,d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Minimum of `C(n,k)`, the halfspace bound and de Caen's bound at `l = n_kd + 1`.
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub upper: Rational,
    /// Maximum of `C(min(n, n_kd), k)` and the multipartite lift on `floor(n/d)` points per part.
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub lower: Rational,
    pub n_kd: Threshold,
    /// Only for `k+1 <= d <= 2k-1`.
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub gamma: Option<(Rational, Rational)>,
}

pub fn bound_report(n: usize, k: usize, d: usize) -> Result<BoundReport> {
    if k == 0 || k > n || d == 0 {
        return invalid(alloc::format!("bounds need 1 <= k <= n and d >= 1, got n={n}, k={k}, d={d}"));
    }
    let threshold = n_kd(k, d)?;
    let all = big(binomial(n, k));
    let mut upper = all.clone().min(big(halfspace_upper_bound(n, d)?));
    let clique = match threshold {
        Threshold::Finite(m) => {
            if m < n {
                upper = upper.min(de_caen_bound(n, k, m + 1)?);
            }
            m.min(n)
        }
        Threshold::Infinite => n,
    };
    let mut lower = big(binomial(clique, k));
    if d > k && n >= d {
        lower = lower.max(big(multipartite_edge_count(d, k, n / d)));
    }
    let gamma = if d > k && d < 2 * k { Some(gamma_bounds(k, d)?) } else { None };
    Ok(BoundReport { n, k, d, upper, lower, n_kd: threshold, gamma })
}
