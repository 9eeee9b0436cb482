//! Randomised properties at sizes well past the exhaustive range.

use crossings::dyck::DyckPath;
use crossings::perm::{contains_pattern, sum_compose, sum_decompose};
use crossings::stats::{crs, exc, fp, inv, lt_stat, nes, ut};
use crossings::theta::{gamma, phi, phi_inverse, psi, theta, theta_inverse, theta_pipeline};
use crossings::Involution;
use proptest::prelude::*;

fn perm(max: usize) -> impl Strategy<Value = Vec<u32>> {
    (0..=max).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

/// Coin flips bent into a Dyck path: an up is forced at height zero and a
/// down once all ups are spent.
fn dyck(max: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 2 * n).prop_map(move |flips| {
            let (mut ups, mut h) = (0, 0);
            let steps = flips
                .into_iter()
                .map(|f| {
                    let up = ups < n && (h == 0 || f);
                    if up {
                        ups += 1;
                        h += 1;
                    } else {
                        h -= 1;
                    }
                    up
                })
                .collect();
            DyckPath::new(steps).expect("balanced by construction")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn crossings_inversions_excedances_nestings(s in perm(60)) {
        prop_assert_eq!(crs(&s) + exc(&s) + 2 * nes(&s), inv(&s));
    }

    #[test]
    fn reverse_complement_shifts_crossings_by_upper_minus_lower_tops(s in perm(60)) {
        let want = crs(&s) as i64 + ut(&s) as i64 - lt_stat(&s) as i64;
        prop_assert_eq!(crs(&Involution::Rc.apply(&s)) as i64, want);
    }

    #[test]
    fn sum_decomposition_round_trips(s in perm(40)) {
        let parts = sum_decompose(&s);
        prop_assert_eq!(sum_compose(&parts).into_vec(), s);
    }

    #[test]
    fn dyck_coding_round_trips(d in dyck(40)) {
        let a = phi_inverse(&d);
        prop_assert!(!contains_pattern(&a, &[1, 3, 2]));
        prop_assert_eq!(phi(&a).unwrap(), d);
    }

    #[test]
    fn tunnels_read_off_fixed_points_and_excedances(d in dyck(40)) {
        let s = phi_inverse(&d);
        let c = d.tunnel_counts();
        prop_assert_eq!((fp(&s), exc(&s)), (c.tunnel_centered, c.tunnel_right));
        prop_assert_eq!(d.left_downs(), d.right_ups());
    }

    #[test]
    fn theta_on_large_avoiders(d in dyck(30)) {
        let a = phi_inverse(&d);
        let s = theta_inverse(&a).unwrap();
        prop_assert!(!contains_pattern(&s, &[3, 2, 1]));
        prop_assert_eq!(psi(&s).unwrap(), d);
        prop_assert_eq!(crs(&s), crs(&a));
        prop_assert_eq!(&theta(&s).unwrap(), &a);
        prop_assert_eq!(&theta_pipeline(&s).unwrap(), &a);
    }

    #[test]
    fn gamma_keeps_fixed_points_excedances_crossings(d in dyck(30)) {
        let s = theta_inverse(&phi_inverse(&d)).unwrap();
        let g = gamma(&s).unwrap();
        prop_assert!(!contains_pattern(&g, &[1, 3, 2]));
        prop_assert_eq!((fp(&g), exc(&g), crs(&g)), (fp(&s), exc(&s), crs(&s)));
    }
}
