mod common;

use common::rational;
use convexdim_core::exactlp::{
    interior_certificate, kernel_basis, rank, solve_feasibility, zero_in_interior,
    zero_in_relative_interior, Feasibility, LinearSystem, Matrix, Rational,
};
use convexdim_core::oracle::fourier_motzkin_feasible;
use num_traits::Zero;
use proptest::prelude::*;

fn system() -> impl Strategy<Value = LinearSystem> {
    (1usize..=3, 0usize..=2, 1usize..=4).prop_flat_map(|(vars, eqs, ineqs)| {
        let row = move || (prop::collection::vec(rational(), vars), rational());
        (
            Just(vars),
            prop::collection::vec(row(), eqs),
            prop::collection::vec(row(), ineqs),
        )
            .prop_map(|(vars, eqs, ineqs)| {
                let mut s = LinearSystem::new(vars);
                for (a, b) in eqs {
                    s.add_equality(a, b);
                }
                for (a, b) in ineqs {
                    s.add_inequality(a, b);
                }
                s
            })
    })
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(rational(), c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn outcome_is_certified_and_matches_elimination(sys in system()) {
        let fm = fourier_motzkin_feasible(&sys);
        match solve_feasibility(&sys) {
            Feasibility::Feasible(x) => {
                prop_assert!(sys.satisfied_by(&x));
                prop_assert!(fm);
            }
            Feasibility::Infeasible(c) => {
                prop_assert!(c.certifies(&sys));
                prop_assert!(!fm);
            }
        }
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            for i in 0..m.rows() {
                let s = m.row(i).iter().zip(v).fold(Rational::zero(), |a, (x, y)| a + x * y);
                prop_assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn interior_is_stable(
        vs in (1usize..=3).prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(rational(), d), 1..6))),
        shift in 0usize..6,
        scale in 1i64..5,
    ) {
        let (d, vs) = vs;
        let c = interior_certificate(&vs, d);
        prop_assert!(c.certifies(&vs, d));
        let inside = c.is_interior();
        if inside {
            prop_assert!(zero_in_relative_interior(&vs, d));
        }
        let mut moved = vs.clone();
        moved.rotate_left(shift % vs.len());
        let s = Rational::from_integer(scale.into());
        moved[0] = moved[0].iter().map(|x| x * &s).collect();
        prop_assert_eq!(zero_in_interior(&moved, d), inside);
    }
}
