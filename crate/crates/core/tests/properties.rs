use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rowvac::ast::hat;
use rowvac::dynamics::{rowmotion, rowmotion_inverse, rowmotion_via_toggles, rowvacuation};
use rowvac::export::{format_antichain, parse_antichain};
use rowvac::roots::TypeDFolding;
use rowvac::weyl::GroupKind;
use rowvac::{Antichain, CartanType, RankedPoset, RootPoset, WeylElement};

/// Graded posets given level by level; each element above the bottom picks
/// a nonempty set of lower covers from the level below.
fn graded_poset() -> impl Strategy<Value = RankedPoset> {
    prop::collection::vec(1usize..4, 1..5)
        .prop_flat_map(|sizes| {
            let picks: Vec<_> = sizes
                .iter()
                .skip(1)
                .flat_map(|&n| std::iter::repeat_n(prop::collection::vec(any::<bool>(), 3), n))
                .collect();
            (Just(sizes), picks)
        })
        .prop_map(|(sizes, picks)| {
            let mut starts = vec![0];
            for s in &sizes {
                starts.push(starts.last().unwrap() + s);
            }
            let mut covers = Vec::new();
            let mut pick = picks.iter();
            for level in 1..sizes.len() {
                let below = sizes[level - 1];
                for y in starts[level]..starts[level + 1] {
                    let chosen = pick.next().unwrap();
                    let lower: Vec<usize> = (0..below).filter(|&k| chosen[k]).collect();
                    let lower = if lower.is_empty() { vec![0] } else { lower };
                    covers.extend(lower.into_iter().map(|k| (starts[level - 1] + k, y)));
                }
            }
            RankedPoset::from_covers(starts[sizes.len()], &covers).unwrap()
        })
}

fn antichain_of(p: &RankedPoset, pick: usize) -> Antichain {
    let all = p.antichains();
    all[pick % all.len()].clone()
}

proptest! {
    #[test]
    fn rowvacuation_is_an_involution(p in graded_poset(), pick in any::<usize>()) {
        let a = antichain_of(&p, pick);
        prop_assert_eq!(rowvacuation(&p, &rowvacuation(&p, &a)), a);
    }

    #[test]
    fn rowvacuation_conjugates_rowmotion(p in graded_poset(), pick in any::<usize>()) {
        let a = antichain_of(&p, pick);
        prop_assert_eq!(
            rowvacuation(&p, &rowmotion(&p, &a)),
            rowmotion_inverse(&p, &rowvacuation(&p, &a))
        );
    }

    #[test]
    fn rowmotion_agrees_with_any_toggle_order(p in graded_poset(), pick in any::<usize>(), seed in any::<u64>()) {
        let a = antichain_of(&p, pick);
        let order = p.random_linear_extension(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(p.is_linear_extension(&order));
        prop_assert_eq!(rowmotion_via_toggles(&p, &a, &order).unwrap(), rowmotion(&p, &a));
    }

    #[test]
    fn hat_is_symmetric_and_sized(n in 4usize..=6, pick in any::<usize>()) {
        let fold = TypeDFolding::new(n).unwrap();
        let d = &fold.d;
        let asymmetric: Vec<Antichain> = d
            .poset()
            .antichains()
            .into_iter()
            .filter(|a| d.delta_antichain(a).unwrap() != *a)
            .collect();
        let a = &asymmetric[pick % asymmetric.len()];
        let h = hat(&fold, a).unwrap().result;
        let ap = &fold.unfold.a;
        prop_assert_eq!(ap.eta_antichain(&h).unwrap(), h.clone());
        if !a.contains(d.simple(n - 1)) && !a.contains(d.simple(n)) {
            let eps = usize::from(ap.contains_any(&h, ap.subset_l().unwrap()));
            prop_assert_eq!(h.len() + 2, 2 * a.len() + eps);
        }
    }

    #[test]
    fn signed_permutations_form_a_group(perm in Just((1..=5).collect::<Vec<i32>>()).prop_shuffle(), signs in prop::collection::vec(any::<bool>(), 5)) {
        let images: Vec<i32> = perm.iter().zip(&signs).map(|(&x, &s)| if s { -x } else { x }).collect();
        let w = WeylElement::from_images(GroupKind::B, images).unwrap();
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert!(w.absolute_length() <= 5);
        let parsed = WeylElement::parse_cycles(GroupKind::B, 5, &w.to_cycle_string_with_fixed_points()).unwrap();
        prop_assert_eq!(parsed, w);
    }

    #[test]
    fn antichain_text_round_trips(t in prop::sample::select(vec![
        CartanType::A(5), CartanType::B(4), CartanType::C(4), CartanType::D(5), CartanType::G2, CartanType::F4,
    ]), pick in any::<usize>()) {
        let rp = RootPoset::new(t).unwrap();
        let a = antichain_of(rp.poset(), pick);
        prop_assert_eq!(parse_antichain(&rp, &format_antichain(&rp, &a)).unwrap(), a);
    }
}
