use hives::bridge::{associate, associate_inverse, commute, hat, unhat};
use hives::category::candidate_weights;
use hives::hive::{enumerate_hives, DominantWeight, Hive};
use hives::verify::small_weights;
use proptest::prelude::*;

/// A hive of side `n` with parts at most 3, picked by indices into the enumeration.
fn arb_hive(n: usize) -> impl Strategy<Value = Hive> {
    let ws = small_weights(n, 3 * n, 3);
    let k = ws.len();
    (0..k, 0..k, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(move |(a, b, i, j)| {
        let nus = candidate_weights(&ws[a], &ws[b]);
        let nu = &nus[i.index(nus.len())];
        let hs = enumerate_hives(&ws[a], &ws[b], nu);
        // Every candidate with the right size need not carry a hive; fall back to λ + μ.
        if hs.is_empty() {
            let top: Vec<i64> = ws[a].parts().iter().zip(ws[b].parts()).map(|(x, y)| x + y).collect();
            enumerate_hives(&ws[a], &ws[b], &DominantWeight::new(top).unwrap()).remove(0)
        } else {
            hs[j.index(hs.len())].clone()
        }
    })
}

/// An outer hive composable with `inner`: its upper-left edge is the bottom edge of `inner`.
fn composable(inner: &Hive, pick: (usize, usize, usize)) -> Option<Hive> {
    let n = inner.n();
    let delta = inner.boundary().2;
    let ws = small_weights(n, 3 * n, 3);
    let lambda = &ws[pick.0 % ws.len()];
    let rhos = candidate_weights(lambda, &delta);
    let rho = &rhos[pick.1 % rhos.len()];
    let ms = enumerate_hives(lambda, &delta, rho);
    (!ms.is_empty()).then(|| ms[pick.2 % ms.len()].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutor_is_an_involution_swapping_edges(p in (2usize..=4).prop_flat_map(arb_hive)) {
        let star = commute(&p).unwrap();
        prop_assert_eq!(commute(&star).unwrap(), p.clone());
        let (l, m, v) = p.boundary();
        prop_assert_eq!(star.boundary(), (m, l, v));
    }

    #[test]
    fn associator_round_trips(inner in (2usize..=4).prop_flat_map(arb_hive), pick in any::<(usize, usize, usize)>()) {
        if let Some(outer) = composable(&inner, pick) {
            let (p, q) = associate(&outer, &inner).unwrap();
            let (m2, n2) = associate_inverse(&p, &q).unwrap();
            prop_assert_eq!(m2, outer.clone());
            prop_assert_eq!(n2, inner.clone());
            // Outer edges are carried over: P has edges (λ, μ, ·), Q has (·, ν, ρ).
            let (lambda, _, rho) = outer.boundary();
            let (mu, nu, _) = inner.boundary();
            prop_assert_eq!(&p.boundary().0, &lambda);
            prop_assert_eq!(&p.boundary().1, &mu);
            prop_assert_eq!(&q.boundary().1, &nu);
            prop_assert_eq!(&q.boundary().2, &rho);
            prop_assert_eq!(&q.boundary().0, &p.boundary().2);
        }
    }

    #[test]
    fn unhat_inverts_hat(p in (1usize..=4).prop_flat_map(arb_hive)) {
        let mu = p.boundary().1;
        prop_assert_eq!(unhat(&hat(p.array()).unwrap(), mu.parts()).unwrap(), p);
    }
}
