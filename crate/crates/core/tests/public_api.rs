use num_complex::Complex;
use num_rational::BigRational;
use proptest::prelude::*;

use schurlang_core::local_factors::gamma_unramified;
use schurlang_core::partition::dim_schur;
use schurlang_core::rep_ring::{decompose_sum, dimension_of};
use schurlang_core::vinberg::unit_group;
use schurlang_core::{lr_coefficient, Partition, Scalar, UnitGroupDescriptor, UnramifiedParameter};

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_size, 0..4).prop_filter_map("too big", move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        (v.iter().sum::<u32>() <= max_size).then(|| Partition::new(v).unwrap())
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=4, -4i64..=4, 1i64..=4)
        .prop_filter("nonzero", |(a, _, c, _)| *a != 0 || *c != 0)
        .prop_map(|(a, b, c, d)| Complex::new(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_symmetric_and_conjugation_invariant(lam in partition(4), mu in partition(4)) {
        for nu in schurlang_core::partition::partitions_of(lam.size() + mu.size()) {
            let c = lr_coefficient(&lam, &mu, &nu);
            prop_assert_eq!(c, lr_coefficient(&mu, &lam, &nu));
            prop_assert_eq!(c, lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
        }
    }

    #[test]
    fn decomposition_dimension_adds_up(nu in partition(5), a in 0usize..=3, b in 0usize..=3) {
        let d = dimension_of(&decompose_sum(&nu, 2), &[a, b]).unwrap();
        prop_assert_eq!(d, dim_schur(&nu, a + b) as i128);
    }

    #[test]
    fn gamma_dual_substitute_is_an_involution(ws in prop::collection::vec(scalar(), 1..=2), nu in partition(2)) {
        let p = UnramifiedParameter::new(ws, 5).unwrap();
        let g = gamma_unramified(&p, &nu);
        prop_assert_eq!(g.dual_substitute().dual_substitute(), g);
    }

    #[test]
    fn unit_group_orders_multiply_to_n(lam in partition(8), n in 1usize..=8) {
        prop_assume!(lam.rows() <= n);
        let u: UnitGroupDescriptor = unit_group(&lam, n).unwrap();
        prop_assert_eq!(u.kernel_order * u.quotient_order, n);
        let json = serde_json::to_string(&u).unwrap();
        prop_assert_eq!(serde_json::from_str::<UnitGroupDescriptor>(&json).unwrap(), u);
    }
}
