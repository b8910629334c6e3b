//! Cross-checking suites run by `convexdim selftest` and by the acceptance
//! tests. Every random trial draws from its own seeded stream, so results do
//! not depend on the number of worker threads.

use convexdim_core::constructions::{
    cyclic_config, de_caen_bound, gamma_bounds, halfspace_upper_bound, multipartite_edge_count,
    multipartite_lift, simplex_with_barycenter,
};
use convexdim_core::embedding::{
    barycenter, complement_homothety, is_convex_embedding, is_i_preserving, k_barycenters, skeleton,
    Hypergraph, Method, PointConfiguration,
};
use convexdim_core::exactlp::frac;
use convexdim_core::gale::{
    is_j_almost_neighborly_dual, is_j_almost_neighborly_primal, is_j_neighborly_dual,
    is_j_neighborly_primal, transform,
};
use convexdim_core::oracle::{halfspace_cut_count, partitions_brute_force};
use convexdim_core::partitions::{enumerate_partitions, verify_euler_relation, verify_vertex_bijection};
use convexdim_core::theorems::{cd_complete, characterize};
use convexdim_core::Rational;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::config::ConfigFile;
use crate::random::{generic_planar, mixed, rng_for};
use crate::tables::{self, Which};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Knobs shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub seed: u64,
    /// Negate the characterisation verdict, to see the harness catch it.
    pub inject_fault: bool,
}

type Trial = Result<(), (String, Option<PointConfiguration>)>;

fn run(name: &str, stream: u64, trials: usize, settings: Settings, f: impl Fn(&mut rand_chacha::ChaCha8Rng, usize, Settings) -> Trial + Sync) -> SuiteResult {
    let failures = (0..trials)
        .into_par_iter()
        .filter_map(|t| {
            let mut rng = rng_for(settings.seed, stream, t as u64);
            f(&mut rng, t, settings).err().map(|(detail, s)| Failure {
                trial: t,
                detail,
                config: s.as_ref().map(ConfigFile::from_configuration),
            })
        })
        .collect();
    SuiteResult { name: name.into(), trials, failures }
}

fn fail<T>(detail: String, s: &PointConfiguration) -> Result<T, (String, Option<PointConfiguration>)> {
    Err((detail, Some(s.clone())))
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>, s: &PointConfiguration) -> Result<T, (String, Option<PointConfiguration>)> {
    r.or_else(|e| fail(format!("error: {e}"), s))
}

/// `characterize` agrees with the face-by-face search, `n <= 7`, `i` in {0,1}.
pub fn characterization(trials: usize, settings: Settings) -> SuiteResult {
    run("characterization", 1, trials, settings, |rng, t, st| {
        let s = mixed(rng, t, 3..=7);
        let n = s.len();
        let k = rng.gen_range(1..n);
        let i = rng.gen_range(0..=1);
        let c = lift(characterize(&s, k, i), &s)?;
        let claimed = c.preserving() != st.inject_fault;
        let found = lift(is_i_preserving(&s, k, i), &s)?.preserving;
        if claimed != found {
            return fail(format!("k={k} i={i}: characterisation says {claimed} ({:?}), search says {found}", c.clauses), &s);
        }
        Ok(())
    })
}

/// Direct and Gale-side strict preservation agree on every face.
pub fn projection_lemma(trials: usize, settings: Settings) -> SuiteResult {
    run("projection-lemma", 2, trials, settings, |rng, t, _| {
        let s = mixed(rng, t, 3..=7);
        let n = s.len();
        let k = rng.gen_range(1..n);
        let direct = lift(skeleton(&s, k, n - 1, Method::Direct, false), &s)?;
        let gale = lift(skeleton(&s, k, n - 1, Method::Gale, false), &s)?;
        for (a, b) in direct.reports.iter().zip(&gale.reports) {
            if a.strictly_preserved != b.strictly_preserved {
                return fail(format!("k={k} face {:?}: direct {} gale {}", a.face, a.strictly_preserved, b.strictly_preserved), &s);
            }
        }
        Ok(())
    })
}

/// Primal and dual neighborliness agree for both predicates, `j <= 3`.
pub fn gale_duality(trials: usize, settings: Settings) -> SuiteResult {
    run("gale-duality", 3, trials, settings, |rng, t, _| {
        let s = mixed(rng, t, 3..=7);
        let g = lift(transform(&s), &s)?;
        for j in 0..=3 {
            let (p, d) = (is_j_neighborly_primal(&s, j).holds, is_j_neighborly_dual(&g, j).holds);
            if p != d {
                return fail(format!("{j}-neighborly: primal {p} dual {d}"), &s);
            }
            let (p, d) = (is_j_almost_neighborly_primal(&s, j).holds, is_j_almost_neighborly_dual(&g, j).holds);
            if p != d {
                return fail(format!("{j}-almost neighborly: primal {p} dual {d}"), &s);
            }
        }
        Ok(())
    })
}

/// Convex position of `k`- and `(n-k)`-barycenters agree, and the homothety
/// maps one set onto the other exactly.
pub fn symmetry(trials: usize, settings: Settings) -> SuiteResult {
    run("symmetry", 4, trials, settings, |rng, t, _| {
        let s = mixed(rng, t, 3..=7);
        let n = s.len();
        let k = rng.gen_range(1..n);
        let a = lift(is_convex_embedding(&s, &Hypergraph::complete(n, k)), &s)?.convex;
        let b = lift(is_convex_embedding(&s, &Hypergraph::complete(n, n - k)), &s)?.convex;
        if a != b {
            return fail(format!("k={k}: {a}, n-k: {b}"), &s);
        }
        let (center, ratio) = complement_homothety(&s, k);
        if ratio != frac(-(k as i64), (n - k) as i64) {
            return fail(format!("ratio {ratio}"), &s);
        }
        for bary in lift(k_barycenters(&s, k), &s)? {
            let rest: Vec<usize> = (0..n).filter(|x| !bary.subset.contains(x)).collect();
            let image: Vec<Rational> = bary.point.iter().zip(&center).map(|(x, c)| c + &ratio * (x - c)).collect();
            if image != barycenter(&s, &rest) {
                return fail(format!("homothety misses the complement of {:?}", bary.subset), &s);
            }
        }
        Ok(())
    })
}

/// On generic planar sets: vertex bijection and Euler relation for
/// `k` in {2,3}, and the enumerator against brute force for `n <= 7`.
pub fn partitions(trials: usize, settings: Settings) -> SuiteResult {
    run("partitions", 5, trials, settings, |rng, _, _| {
        let n = rng.gen_range(4..=8);
        let s = generic_planar(rng, n);
        for k in [2, 3] {
            if !lift(verify_vertex_bijection(&s, k), &s)? {
                return fail(format!("vertex bijection fails for k={k}"), &s);
            }
            let e = lift(verify_euler_relation(&s, k), &s)?;
            if !e.holds {
                return fail(format!("k={k}: faces {:?} partitions {:?}", e.faces, e.partitions), &s);
            }
        }
        if n <= 7 {
            let found: BTreeSet<(Vec<usize>, Vec<usize>)> =
                lift(enumerate_partitions(&s), &s)?.into_iter().map(|p| (p.on, p.above)).collect();
            if found != partitions_brute_force(&s) {
                return fail("enumerator differs from brute force".into(), &s);
            }
        }
        Ok(())
    })
}

/// Exhaustive halfspace-cut counts of generic planar 5-point sets meet the
/// upper bound exactly.
pub fn halfspace(trials: usize, settings: Settings) -> SuiteResult {
    run("halfspace", 6, trials, settings, |rng, _, _| {
        let s = generic_planar(rng, 5);
        let bound = halfspace_upper_bound(5, 2).expect("valid arguments");
        let count = halfspace_cut_count(&s);
        if bound != count.into() {
            return fail(format!("{count} cut subsets, bound {bound}"), &s);
        }
        Ok(())
    })
}

/// The configuration that realises `cd(K_n^(k))` for `2 <= k <= n-2`.
pub fn attaining_configuration(n: usize, k: usize) -> convexdim_core::Result<PointConfiguration> {
    if n >= 2 * k + 2 {
        cyclic_config(n, 2 * k)
    } else if (2 * k - 1..=2 * k + 1).contains(&n) {
        simplex_with_barycenter(n)
    } else {
        cyclic_config(n, 2 * n - 2 * k)
    }
}

fn deterministic(name: &str, checks: Vec<(String, bool)>) -> SuiteResult {
    let failures = checks
        .into_iter()
        .enumerate()
        .filter(|(_, (_, ok))| !ok)
        .map(|(trial, (detail, _))| Failure { trial, detail, config: None })
        .collect();
    SuiteResult { name: name.into(), trials: 0, failures }
}

/// The published tables regenerate exactly.
pub fn tables() -> SuiteResult {
    let mut checks = Vec::new();
    for (which, rows, cols, i) in [(Which::Cd, 1..=9, 2..=18, 0), (Which::D, 1..=9, 3..=18, 2), (Which::Nkd, 1..=7, 1..=14, 0)] {
        let (_, mismatches) = tables::diff(&tables::generate(which, rows, cols, i), &tables::published(which, i).unwrap());
        for m in &mismatches {
            checks.push((format!("{which:?} k={} column {}: expected {}, found {}", m.row, m.column, m.expected, m.found), false));
        }
        checks.push((format!("{which:?} table"), mismatches.is_empty()));
    }
    deterministic("tables", checks)
}

/// Every `(n, k)` with `4 <= n <= n_max`, `2 <= k <= n-2` has a convex
/// embedding in dimension `cd(K_n^(k))`.
pub fn attainment(n_max: usize) -> SuiteResult {
    let cases: Vec<(usize, usize)> = (4..=n_max).flat_map(|n| (2..=n - 2).map(move |k| (n, k))).collect();
    let checks = cases
        .into_par_iter()
        .map(|(n, k)| {
            let ok = attaining_configuration(n, k).is_ok_and(|s| {
                s.dim() == cd_complete(n, k).unwrap_or(0)
                    && is_convex_embedding(&s, &Hypergraph::complete(n, k)).is_ok_and(|r| r.convex)
            });
            (format!("n={n} k={k}"), ok)
        })
        .collect();
    deterministic("attainment", checks)
}

/// Multipartite lifts have `C(d,k) n^k` distinct barycenters, all vertices.
pub fn multipartite(cases: &[(usize, usize, usize)]) -> SuiteResult {
    let checks = cases
        .iter()
        .map(|&(d, k, n)| {
            let ok = multipartite_lift(d, k, n).is_ok_and(|(s, h)| {
                multipartite_edge_count(d, k, n) == h.edges.len().into()
                    && is_convex_embedding(&s, &h).is_ok_and(|r| r.convex)
            });
            (format!("(d,k,n)=({d},{k},{n})"), ok)
        })
        .collect();
    deterministic("multipartite", checks)
}

/// Closed-form bounds at their worked values.
pub fn bounds() -> SuiteResult {
    let checks = vec![
        ("gamma(2,3) = (1/3, 2/5)".to_string(), gamma_bounds(2, 3) == Ok((frac(1, 3), frac(2, 5)))),
        ("de Caen (10,3,5) = 105".to_string(), de_caen_bound(10, 3, 5) == Ok(frac(105, 1))),
        ("halfspace (5,2) = 22".to_string(), halfspace_upper_bound(5, 2) == Ok(22u32.into())),
    ];
    deterministic("bounds", checks)
}

/// Everything `selftest` runs, in order.
pub fn all(trials: usize, settings: Settings) -> Vec<SuiteResult> {
    vec![
        tables(),
        bounds(),
        multipartite(&[(3, 2, 2), (3, 2, 3), (4, 3, 1)]),
        attainment(7),
        characterization(trials, settings),
        projection_lemma(trials, settings),
        gale_duality(trials, settings),
        symmetry(trials, settings),
        partitions(trials, settings),
        halfspace(trials, settings),
    ]
}
