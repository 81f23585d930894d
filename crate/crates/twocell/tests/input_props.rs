use proptest::prelude::*;
use twocell::input::{InputFile, WeightSpec};

fn token() -> impl Strategy<Value = String> {
    (0usize..3, prop_oneof![Just(1i64), Just(2), Just(-1), Just(-3)]).prop_map(|(g, e)| {
        let name = ["a", "b", "c"][g];
        if e == 1 { name.to_string() } else { format!("{name}^{e}") }
    })
}

fn word_text() -> impl Strategy<Value = String> {
    prop::collection::vec(token(), 1..6).prop_map(|t| t.join(" "))
}

fn file_text() -> impl Strategy<Value = String> {
    (
        prop::collection::vec(word_text(), 0..3),
        prop::option::of((0usize..3, 0u64..5)),
        prop::collection::vec(prop::collection::vec(word_text(), 1..3), 0..3),
    )
        .prop_map(|(rels, gen_weight, lists)| {
            let mut s = String::from("# generated\ngens a b c\n");
            for r in &rels {
                s.push_str(&format!("rel {r}\n"));
            }
            if let Some((g, v)) = gen_weight {
                s.push_str(&format!("weights gen {} {v}\n", ["a", "b", "c"][g]));
            }
            for (i, l) in lists.iter().enumerate() {
                s.push_str(&format!("words L{i}: {}\n", l.join(", ")));
            }
            s
        })
}

proptest! {
    #[test]
    fn parse_serialize_round_trip(text in file_text()) {
        let Ok(f) = InputFile::parse(&text) else { return Ok(()) };
        let again = InputFile::parse(&f.serialize()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert_eq!(again.serialize(), f.serialize());
    }

    #[test]
    fn per_side_weights_round_trip(text in file_text(), w in prop::collection::vec(0u64..9, 1..12)) {
        let Ok(f) = InputFile::parse(&text) else { return Ok(()) };
        prop_assume!(!f.presentation.relators().is_empty());
        let sides: Vec<Vec<u64>> = f
            .presentation
            .relators()
            .iter()
            .map(|r| (0..r.len()).map(|i| w[i % w.len()]).collect())
            .collect();
        let f = InputFile { weights: WeightSpec::PerSide(sides), ..f };
        prop_assert_eq!(InputFile::parse(&f.serialize()).unwrap(), f);
    }
}
