use std::collections::BTreeMap;

use proptest::prelude::*;
use treesym::pathtree::{phi_forward, psi_inverse, theta_map};
use treesym::symfunc::{complete, schur, Basis};
use treesym::{AbgdExpr, IntPartition, LabeledTree, PathTreeSequence, TreeShape, WeightPoly};

fn standard_tree(max: usize) -> impl Strategy<Value = LabeledTree> {
    (1..=max)
        .prop_flat_map(|n| {
            let shapes = TreeShape::all(n);
            let labels: Vec<u32> = (1..=n as u32).collect();
            (prop::sample::select(shapes), Just(labels).prop_shuffle())
        })
        .prop_map(|(shape, labels)| LabeledTree::new(shape, labels).unwrap())
}

fn word_tree(max: usize) -> impl Strategy<Value = LabeledTree> {
    (1..=max)
        .prop_flat_map(|n| (prop::sample::select(TreeShape::all(n)), prop::collection::vec(1u32..=3, n)))
        .prop_map(|(shape, labels)| LabeledTree::new(shape, labels).unwrap())
}

fn partition(max: usize) -> impl Strategy<Value = IntPartition> {
    (1..=max).prop_flat_map(|n| prop::sample::select(IntPartition::all(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phi_then_psi_is_identity(t in standard_tree(8)) {
        let s = phi_forward(&t);
        prop_assert_eq!(psi_inverse(&s), t.clone());
        let a = s.attributes();
        prop_assert_eq!(a.exponents, t.weight_exponents());
        prop_assert_eq!(a.canopy, t.shape().canopy());
    }

    #[test]
    fn phi_handles_repeated_labels(t in word_tree(7)) {
        let s = phi_forward(&t);
        prop_assert_eq!(s.attributes().inorder, t.inorder_word().to_vec());
        prop_assert_eq!(psi_inverse(&s), t);
    }

    #[test]
    fn sequence_text_round_trip(t in word_tree(7)) {
        let s = phi_forward(&t);
        let back: PathTreeSequence = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn tree_text_round_trip(t in word_tree(7)) {
        let back: LabeledTree = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn theta_keeps_weight_and_canopy(t in standard_tree(7)) {
        let s = phi_forward(&t);
        let p = theta_map(&s);
        prop_assert_eq!(p.augmented_weight().unwrap(), t.weight());
        prop_assert_eq!(p.canopy_word().unwrap(), t.shape().canopy());
    }

    #[test]
    fn tree_weight_degree(t in standard_tree(8)) {
        let e = t.weight_exponents();
        prop_assert_eq!(e.iter().map(|&x| x as usize).sum::<usize>(), t.len() - 1);
    }

    #[test]
    fn basis_elements_are_unit_vectors(lambda in partition(6)) {
        let unit = BTreeMap::from([(lambda.clone(), WeightPoly::one())]);
        prop_assert_eq!(complete(&lambda).to_basis(Basis::H).unwrap(), unit.clone());
        prop_assert_eq!(schur(&lambda).to_basis(Basis::S).unwrap(), unit);
    }

    #[test]
    fn abgd_text_round_trip(coeffs in prop::collection::vec(-5i64..=5, 4), exps in prop::collection::vec(0u16..=3, 16)) {
        let mut text = String::from("0");
        for (i, c) in coeffs.iter().enumerate() {
            let e = &exps[4 * i..4 * i + 4];
            let mono: String = ["α", "β", "γ", "δ"].iter().zip(e).map(|(s, k)| s.repeat(*k as usize)).collect();
            text.push_str(&format!(" + {c}{mono}").replace("+ -", "- "));
        }
        let p: AbgdExpr = text.parse().unwrap();
        let again: AbgdExpr = p.to_string().parse().unwrap();
        prop_assert_eq!(again, p);
    }
}
