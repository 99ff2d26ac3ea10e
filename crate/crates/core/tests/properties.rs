use std::sync::OnceLock;

use proptest::prelude::*;

use menger::corpus::{corpus, CorpusEntry};
use menger::enumeration::classify_subsets;
use menger::format::{parse_algebra, write_algebra};
use menger::principal::analysis;
use menger::term::TranslationClosure;
use menger::{
    check_relation_property, check_subset_property, parse_term, translation_closure,
    CongruenceKind, MengerAlgebra, Partition, RelationProperty, Subset, SubsetProperty, Validation,
};

struct Fixture {
    entry: CorpusEntry,
    closure: TranslationClosure,
}

impl std::fmt::Debug for Fixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.entry.name)
    }
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        corpus()
            .unwrap()
            .into_iter()
            .map(|entry| {
                let closure = translation_closure(&entry.algebra, 100_000).unwrap();
                Fixture { entry, closure }
            })
            .collect()
    })
}

fn fixture() -> impl Strategy<Value = &'static Fixture> {
    (0..fixtures().len()).prop_map(|i| &fixtures()[i])
}

/// A corpus algebra with a subset given by a mask.
fn with_subset() -> impl Strategy<Value = (&'static Fixture, Subset)> {
    fixture().prop_flat_map(|f| {
        let m = f.entry.algebra.size();
        (Just(f), 0u64..(1 << m)).prop_map(move |(f, mask)| (f, Subset::from_mask(m, mask)))
    })
}

/// A corpus algebra with a partition given by arbitrary labels.
fn with_partition() -> impl Strategy<Value = (&'static Fixture, Partition)> {
    fixture().prop_flat_map(|f| {
        let m = f.entry.algebra.size();
        (Just(f), proptest::collection::vec(0..m, m))
            .prop_map(|(f, labels): (_, Vec<usize>)| (f, Partition::from_labels(&labels)))
    })
}

fn with_permutation() -> impl Strategy<Value = (&'static Fixture, Vec<usize>)> {
    fixture().prop_flat_map(|f| {
        let m = f.entry.algebra.size();
        (Just(f), Just((0..m).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn naive_superassociative(alg: &MengerAlgebra) -> bool {
    let m = alg.size();
    let n = alg.rank();
    let p = alg.tuple_count();
    for f in 0..m {
        for gc in 0..p {
            let g = alg.decode_tuple(gc);
            for hc in 0..p {
                let h = alg.decode_tuple(hc);
                let lhs = alg.apply_tuple(alg.apply_tuple(f, &g), &h);
                let inner: Vec<usize> = (0..n).map(|i| alg.apply_tuple(g[i], &h)).collect();
                if lhs != alg.apply_tuple(f, &inner) {
                    return false;
                }
            }
        }
    }
    true
}

fn random_table(m: usize, rank: usize) -> impl Strategy<Value = MengerAlgebra> {
    let len = m.pow(rank as u32 + 1);
    proptest::collection::vec(0..m, len).prop_map(move |table| {
        let names: Vec<String> = (0..m).map(|i| format!("e{i}")).collect();
        MengerAlgebra::from_table(rank, &names, table, Validation::Defer).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn verification_matches_triple_loop(alg in prop_oneof![random_table(2, 1), random_table(3, 1), random_table(2, 2), random_table(3, 2), random_table(2, 3)]) {
        prop_assert_eq!(alg.verify_superassociativity().is_ok(), naive_superassociative(&alg));
    }

    #[test]
    fn star_is_a_monoid_acting_on_the_right(f in fixture(), seed in any::<[usize; 4]>()) {
        let alg = &f.entry.algebra;
        let b = alg.arg_count();
        let (x, y, z) = (seed[0] % b, seed[1] % b, seed[2] % b);
        let g = seed[3] % alg.size();
        prop_assert_eq!(alg.star_index(0, x), x);
        prop_assert_eq!(alg.star_index(x, 0), x);
        prop_assert_eq!(alg.star_index(alg.star_index(x, y), z), alg.star_index(x, alg.star_index(y, z)));
        prop_assert_eq!(alg.apply_index(g, alg.star_index(x, y)), alg.apply_index(alg.apply_index(g, x), y));
    }

    #[test]
    fn closure_is_composition_closed(f in fixture(), i in any::<usize>(), j in any::<usize>()) {
        let cl = &f.closure;
        let composed = cl.table(i % cl.len()).compose(cl.table(j % cl.len()));
        prop_assert!(cl.index_of(&composed).is_some());
    }

    #[test]
    fn closure_contains_elementary_steps(f in fixture(), u in any::<usize>(), w in any::<usize>(), i in any::<usize>()) {
        let alg = &f.entry.algebra;
        let m = alg.size();
        let u = u % m;
        let i = i % alg.rank();
        let mut args = alg.decode_tuple(w % alg.tuple_count());
        let table: Vec<usize> = (0..m)
            .map(|g| {
                args[i] = g;
                alg.apply_tuple(u, &args)
            })
            .collect();
        prop_assert!(f.closure.tables().iter().any(|t| t.images() == table.as_slice()));
    }

    #[test]
    fn witness_terms_round_trip(f in fixture(), i in any::<usize>()) {
        let alg = &f.entry.algebra;
        let term = f.closure.witness(i % f.closure.len());
        let text = menger::term::format_term(alg, term);
        let reparsed = parse_term(alg, &text).unwrap();
        prop_assert_eq!(reparsed.eval(alg), term.eval(alg));
    }

    #[test]
    fn regularity_equivalences((f, p) in with_partition()) {
        let alg = &f.entry.algebra;
        let holds = |prop| check_relation_property(alg, &p, prop).unwrap().holds();
        let slots = (0..alg.rank()).all(|i| holds(RelationProperty::IRegular(i)));
        prop_assert_eq!(holds(RelationProperty::VRegular), slots);
        prop_assert_eq!(
            holds(RelationProperty::Stable),
            holds(RelationProperty::LRegular) && holds(RelationProperty::VRegular)
        );
        prop_assert_eq!(
            holds(RelationProperty::VCancellative),
            menger::relations::check_v_cancellative_translations(&f.closure, &p).holds()
        );
    }

    #[test]
    fn l_ideal_iff_every_slot((f, h) in with_subset()) {
        let alg = &f.entry.algebra;
        let holds = |prop| check_subset_property(alg, &f.closure, &h, prop).unwrap().holds();
        let slots = (0..alg.rank()).all(|i| holds(SubsetProperty::IIdeal(i)));
        prop_assert_eq!(holds(SubsetProperty::LIdeal), slots);
    }

    #[test]
    fn principal_relations_are_congruences((f, h) in with_subset()) {
        let alg = &f.entry.algebra;
        for (kind, prop) in [
            (CongruenceKind::V, RelationProperty::VCongruence),
            (CongruenceKind::L, RelationProperty::LCongruence),
            (CongruenceKind::Full, RelationProperty::Congruence),
        ] {
            let a = analysis(alg, &f.closure, &h, kind).unwrap();
            prop_assert!(check_relation_property(alg, &a.partition, prop).unwrap().holds());
            prop_assert!(h.is_disjoint(&a.residue));
            prop_assert!(a.residue.is_empty() || a.partition.is_block(&a.residue));
        }
    }

    #[test]
    fn analyses_commute_with_relabelling((f, perm) in with_permutation(), mask in any::<u64>()) {
        let alg = &f.entry.algebra;
        let m = alg.size();
        let h = Subset::from_mask(m, mask & ((1u64 << m) - 1));
        let relabelled = alg.permuted(&perm).unwrap();
        let closure = translation_closure(&relabelled, 100_000).unwrap();
        let h2 = Subset::from_elements(m, h.iter().map(|e| perm[e])).unwrap();
        for kind in CongruenceKind::ALL {
            let a = analysis(alg, &f.closure, &h, kind).unwrap();
            let b = analysis(&relabelled, &closure, &h2, kind).unwrap();
            for x in 0..m {
                for y in 0..m {
                    prop_assert_eq!(a.partition.related(x, y), b.partition.related(perm[x], perm[y]));
                }
                prop_assert_eq!(a.residue.contains(x), b.residue.contains(perm[x]));
            }
        }
    }

    #[test]
    fn text_format_round_trips(f in fixture()) {
        let text = write_algebra(&f.entry.algebra);
        prop_assert_eq!(&parse_algebra(&text, Validation::Check).unwrap(), &f.entry.algebra);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classification_is_invariant_under_relabelling((f, perm) in with_permutation()) {
        let alg = &f.entry.algebra;
        let m = alg.size();
        let relabelled = alg.permuted(&perm).unwrap();
        let closure = translation_closure(&relabelled, 100_000).unwrap();
        let before = classify_subsets(alg, &f.closure).unwrap();
        let after = classify_subsets(&relabelled, &closure).unwrap();
        for row in &before {
            let image = Subset::from_elements(m, row.subset.iter().map(|e| perm[e])).unwrap();
            let other = &after[image.mask() as usize];
            prop_assert_eq!(&other.subset, &image);
            let mut renamed = row.clone();
            renamed.subset = image;
            prop_assert_eq!(&renamed, other);
        }
    }
}
