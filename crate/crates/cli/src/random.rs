//! Seeded random rational configurations.

use convexdim_core::constructions::simplex;
use convexdim_core::embedding::PointConfiguration;
use convexdim_core::exactlp::frac;
use convexdim_core::partitions::is_general_position;
use convexdim_core::Rational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Numerators are drawn from `-NUM..=NUM`, denominators from `1..=DEN`.
pub const NUM: i64 = 12;
pub const DEN: i64 = 4;

/// An independent stream for each `(seed, stream, index)`, so results do not
/// depend on the order trials run in.
pub fn rng_for(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(index) << 20);
    rng
}

pub fn rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-NUM..=NUM), rng.gen_range(1..=DEN))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Uniform,
    MomentCurve,
    SimplexPlusPoint,
}

pub const FAMILIES: [Family; 3] = [Family::Uniform, Family::MomentCurve, Family::SimplexPlusPoint];

/// `n` distinct points drawn uniformly from the rational grid, redrawn until
/// they affinely span `R^d`.
pub fn uniform(rng: &mut impl Rng, n: usize, d: usize) -> PointConfiguration {
    loop {
        let pts = (0..n).map(|_| (0..d).map(|_| rational(rng)).collect()).collect();
        if let Ok(s) = PointConfiguration::new(d, pts) {
            if s.spans() {
                return s;
            }
        }
    }
}

/// Points `(t, t^2, ..., t^d)` at distinct random rational parameters.
pub fn moment_curve(rng: &mut impl Rng, n: usize, d: usize) -> PointConfiguration {
    let mut ts: Vec<Rational> = Vec::new();
    while ts.len() < n {
        let t = frac(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    let pts = ts
        .iter()
        .map(|t| {
            let mut p = Vec::with_capacity(d);
            let mut x = t.clone();
            for _ in 0..d {
                p.push(x.clone());
                x *= t;
            }
            p
        })
        .collect();
    PointConfiguration::new(d, pts).expect("distinct parameters give distinct points")
}

/// A `d`-simplex plus `n - d - 1` further random points, shuffled.
pub fn simplex_plus_points(rng: &mut impl Rng, n: usize, d: usize) -> PointConfiguration {
    loop {
        let mut pts: Vec<Vec<Rational>> = simplex(d).points().to_vec();
        for p in &mut pts {
            for x in p.iter_mut() {
                *x *= Rational::from_integer(3.into());
            }
        }
        while pts.len() < n {
            pts.push((0..d).map(|_| frac(rng.gen_range(-2..=4), rng.gen_range(1..=3))).collect());
        }
        pts.shuffle(rng);
        if let Ok(s) = PointConfiguration::new(d, pts) {
            return s;
        }
    }
}

pub fn draw(rng: &mut impl Rng, family: Family, n: usize, d: usize) -> PointConfiguration {
    match family {
        Family::Uniform => uniform(rng, n, d),
        Family::MomentCurve => moment_curve(rng, n, d),
        Family::SimplexPlusPoint => simplex_plus_points(rng, n, d),
    }
}

/// A spanning configuration with `n` in `n_range` and `2 <= d <= n-1`, from a
/// family chosen by `index`.
pub fn mixed(rng: &mut impl Rng, index: usize, n_range: std::ops::RangeInclusive<usize>) -> PointConfiguration {
    let n = rng.gen_range(n_range);
    let d = rng.gen_range(2..=(n - 1).max(2));
    draw(rng, FAMILIES[index % FAMILIES.len()], n, d)
}

/// `n` points in the plane with no three collinear.
pub fn generic_planar(rng: &mut impl Rng, n: usize) -> PointConfiguration {
    loop {
        let s = uniform(rng, n, 2);
        if is_general_position(&s) {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a = uniform(&mut rng_for(5, 1, 3), 5, 3);
        let b = uniform(&mut rng_for(5, 1, 3), 5, 3);
        let c = uniform(&mut rng_for(5, 1, 4), 5, 3);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn families_have_the_requested_shape() {
        let mut rng = rng_for(1, 0, 0);
        for f in FAMILIES {
            for n in 4..=7 {
                for d in 2..n {
                    let s = draw(&mut rng, f, n, d);
                    assert_eq!((s.len(), s.dim()), (n, d));
                    assert!(s.spans());
                }
            }
        }
        assert!(is_general_position(&generic_planar(&mut rng, 7)));
    }
}
