use std::sync::Arc;

use proptest::prelude::*;
use twocell::complex::{build_packet, compute_pieces};
use twocell::fixtures;
use twocell::{standard_complex, Complex2};

fn suite() -> Vec<Arc<Complex2>> {
    fixtures::presentation_suite().iter().map(|p| Arc::new(standard_complex(p))).collect()
}

fn random_complex() -> impl Strategy<Value = Arc<Complex2>> {
    let rel = prop::collection::vec(prop_oneof![Just(1i64), Just(2), Just(3), Just(-1), Just(-2), Just(-3)], 1..9);
    (prop::collection::vec(rel, 0..3), 1usize..4).prop_filter_map("cyclically reducible to nothing", |(rels, pow)| {
        let words: Vec<twocell::Word> = rels
            .iter()
            .map(|r| twocell::word::cyclic_reduce(&twocell::Word::from_signed(r)).pow(pow))
            .collect();
        if words.iter().any(|w| w.is_empty()) {
            return None;
        }
        twocell::Presentation::with_letters(3, words).ok().map(|p| Arc::new(standard_complex(&p)))
    })
}

#[test]
fn sides_count_boundary_positions() {
    for x in suite() {
        let sides: usize = (0..x.num_edges()).map(|e| x.sides_at(e).unwrap().len()).sum();
        let lengths: usize = (0..x.num_cells()).map(|c| x.boundary_len(c)).sum();
        assert_eq!(sides, lengths);
    }
}

#[test]
fn packets_have_the_right_shape() {
    for x in suite() {
        for c in 0..x.num_cells() {
            let (period, n) = x.cell_period(c).unwrap();
            let packet = build_packet(&x, c).unwrap();
            let y = packet.complex();
            assert_eq!((y.num_edges(), y.num_cells()), (n * period, n));
            assert!((0..y.num_edges()).all(|e| y.sides_at(e).unwrap().len() == n));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn side_total_matches_on_random_complexes(x in random_complex()) {
        let sides: usize = (0..x.num_edges()).map(|e| x.sides_at(e).unwrap().len()).sum();
        prop_assert_eq!(sides, x.total_sides());
    }

    #[test]
    fn piece_pairs_are_symmetric(x in random_complex()) {
        let t = compute_pieces(&x);
        for p in &t.pairs {
            prop_assert!(t.pairs.iter().any(|q| q.a == p.b && q.b == p.a && q.length == p.length));
        }
    }

    #[test]
    fn covers_grow_with_the_subpath(x in random_complex(), start in 0usize..40) {
        let t = compute_pieces(&x);
        for c in 0..x.num_cells() {
            let m = x.boundary_len(c);
            let s = start % m;
            let mut prev = Some(0);
            for len in 1..=m {
                let cur = t.min_cover(c, s, len).unwrap();
                match (prev, cur) {
                    (Some(a), Some(b)) => prop_assert!(a <= b),
                    (None, Some(_)) => prop_assert!(false, "cover appeared after a gap"),
                    _ => {}
                }
                prev = cur;
            }
        }
    }
}
