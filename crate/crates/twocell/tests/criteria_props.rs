use std::sync::Arc;

use proptest::prelude::*;
use twocell::criteria::{check_equalweights, check_one_relator_torsion, check_sc_weight, power_theorem, ScVariant};
use twocell::fixtures;
use twocell::word::{cyclic_reduce, period_exponent};
use twocell::{standard_complex, Complex2, Presentation, Weighting, Word};

fn cyclic_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![Just(1i64), Just(2), Just(-1), Just(-2)], 1..=max_len)
        .prop_map(|s| cyclic_reduce(&Word::from_signed(&s)))
        .prop_filter("nonempty, not a proper power", |w| !w.is_empty() && period_exponent(w).unwrap().1 == 1)
}

fn doubled(w: &Word) -> Word {
    Word::from_letters(w.letters().iter().flat_map(|&l| [l, l]))
}

proptest! {
    #[test]
    fn equal_weights_agrees_with_torsion_check(w in cyclic_word(5), extra in 0usize..4) {
        let n = (w.len().saturating_sub(1)).max(2) + extra;
        let v = check_equalweights(&w, n);
        prop_assert!(v.is_holds());
        let x = standard_complex(&Presentation::with_letters(2, vec![w.pow(n)]).unwrap());
        let t = check_one_relator_torsion(&x, &Weighting::unit(&x));
        prop_assert!(t.is_holds(), "{:?}", t);
    }

    #[test]
    fn power_bound_grows_with_a_long_word(a in cyclic_word(4), b in cyclic_word(4), c in cyclic_word(8)) {
        let base = power_theorem(&[a.clone(), b.clone()], None);
        let longer = power_theorem(&[a.clone(), b.clone(), c], None);
        let (Ok((n0, _)), Ok((n1, _))) = (base, longer) else { return Ok(()) };
        prop_assert!(n1 >= n0);
    }

    #[test]
    fn power_bound_scales(words in prop::collection::vec(cyclic_word(5), 1..4)) {
        let Ok((n, _)) = power_theorem(&words, None) else { return Ok(()) };
        let twice: Vec<Word> = words.iter().map(doubled).collect();
        let Ok((m, _)) = power_theorem(&twice, None) else { return Ok(()) };
        prop_assert!(m == 2 * n || m + 1 == 2 * n, "N = {n}, doubled N = {m}");
    }

    #[test]
    fn strict_implies_non_strict(pick in 0usize..10, seed in prop::collection::vec(0u64..4, 1..10)) {
        let x: Arc<Complex2> = Arc::new(standard_complex(&fixtures::presentation_suite()[pick]));
        let mut k = 0;
        let sides = (0..x.num_cells())
            .map(|c| {
                let mut s: Vec<u64> = (0..x.boundary_len(c)).map(|_| { k += 1; seed[k % seed.len()] }).collect();
                s[0] += 1;
                s
            })
            .collect();
        for w in [Weighting::unit(&x), Weighting::new(&x, sides).unwrap()] {
            for variant in [ScVariant::C6T3, ScVariant::C4T4] {
                if check_sc_weight(&x, &w, variant, true).is_holds() {
                    prop_assert!(check_sc_weight(&x, &w, variant, false).is_holds());
                }
            }
        }
    }
}

#[test]
fn nonorientable_surfaces() {
    for g in 2..=8 {
        let x = standard_complex(&fixtures::nonorientable_surface(g));
        let w = Weighting::unit(&x);
        let v = check_sc_weight(&x, &w, ScVariant::C4T4, false);
        assert!(v.is_holds() && v.conclusion.coherent(), "g = {g}");
        let strict = check_sc_weight(&x, &w, ScVariant::C4T4, true);
        assert_eq!(strict.is_holds(), g > 2, "g = {g}");
    }
}
