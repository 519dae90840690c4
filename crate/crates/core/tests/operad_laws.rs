use operad_core::braid::{braids_equal, BraidWord, Permutation};
use operad_core::operad::{
    all_pass, arranged_tensor, braid_words_up_to, cable_functor_apply, groupoid_compose,
    is_morphism, operad_axioms_check, tensor_objects, CheckBounds, EndTable, FiniteEndOperad,
    GroupoidMorphism, Status,
};
use proptest::prelude::*;

fn end2() -> FiniteEndOperad {
    FiniteEndOperad::new(2).unwrap()
}

fn tables_up_to(arity: usize) -> Vec<EndTable> {
    (0..=arity).flat_map(|k| end2().all_tables(k)).collect()
}

#[test]
fn table_counts() {
    let e = end2();
    assert_eq!(e.all_tables(0).len(), 2);
    assert_eq!(e.all_tables(1).len(), 4);
    assert_eq!(e.all_tables(2).len(), 16);
    let three = FiniteEndOperad::new(3).unwrap();
    assert_eq!(three.all_tables(2).len(), 19683);
    assert!(FiniteEndOperad::new(5).is_err());
}

#[test]
fn and_with_identities() {
    let e = end2();
    let and = e.from_fn(2, |x| x[0] & x[1]);
    let id = e.from_fn(1, |x| x[0]);
    assert_eq!(e.end_compose(&and, &[id.clone(), id.clone()]).unwrap(), and);
    let not = e.from_fn(1, |x| 1 - x[0]);
    assert_eq!(e.end_compose(&id, std::slice::from_ref(&not)).unwrap(), not);
    assert!(e.end_compose(&and, &[id]).is_err());
}

#[test]
fn composite_tables_evaluate_pointwise() {
    // Evaluate the substitution directly from the definition and compare.
    let e = end2();
    let tables = tables_up_to(2);
    for f in tables.iter().filter(|t| t.arity == 2) {
        for g1 in &tables {
            for g2 in &tables {
                let c = e.end_compose(f, &[g1.clone(), g2.clone()]).unwrap();
                assert_eq!(c.arity, g1.arity + g2.arity);
                let total = g1.arity + g2.arity;
                for bits in 0..1u32 << total {
                    let args: Vec<u8> = (0..total)
                        .map(|i| ((bits >> (total - 1 - i)) & 1) as u8)
                        .collect();
                    let (a, b) = args.split_at(g1.arity);
                    let expected = e.eval(f, &[e.eval(g1, a), e.eval(g2, b)]);
                    assert_eq!(e.eval(&c, &args), expected);
                }
            }
        }
    }
}

#[test]
fn endomorphism_laws_exhaustive_on_two_points() {
    let e = end2();
    let tables = tables_up_to(2);
    let bounds = CheckBounds {
        outers: tables.clone(),
        inners: tables.clone(),
        max_result_arity: usize::MAX,
    };
    let reports = operad_axioms_check(&e, &bounds);
    assert!(all_pass(&reports), "{reports:?}");
    assert!(reports
        .iter()
        .all(|r| r.status == Status::Pass && r.cases > 0));
    let eq = e.equivariance_check(&tables, &tables);
    assert_eq!(eq.status, Status::Pass, "{eq:?}");
}

fn table(arity: usize) -> impl Strategy<Value = EndTable> {
    prop::collection::vec(0u8..2, 1usize << arity)
        .prop_map(move |values| end2().table(arity, values).unwrap())
}

proptest! {
    #[test]
    fn full_composition_is_associative(
        f in table(2),
        g in prop::collection::vec((0usize..=2).prop_flat_map(table), 2),
        h in prop::collection::vec((0usize..=2).prop_flat_map(table), 4),
    ) {
        let e = end2();
        let fg = e.end_compose(&f, &g).unwrap();
        let h = &h[..fg.arity];
        let lhs = e.end_compose(&fg, h).unwrap();
        let (h1, h2) = h.split_at(g[0].arity);
        let rhs = e.end_compose(&f, &[e.end_compose(&g[0], h1).unwrap(), e.end_compose(&g[1], h2).unwrap()]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(n: usize, prefix: Vec<usize>, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_zero_based(prefix).unwrap());
            return;
        }
        for v in (0..n).filter(|v| !prefix.contains(v)) {
            let mut next = prefix.clone();
            next.push(v);
            go(n, next, out);
        }
    }
    let mut out = Vec::new();
    go(n, Vec::new(), &mut out);
    out
}

#[test]
fn groupoid_laws_up_to_three_strands() {
    for n in 1..=3 {
        let objects = all_permutations(n);
        let words = braid_words_up_to(n, 2);
        let mut morphisms = Vec::new();
        for h in &objects {
            for g in &words {
                // exactly one target makes g a morphism out of h
                let targets: Vec<&Permutation> =
                    objects.iter().filter(|t| is_morphism(h, t, g)).collect();
                assert_eq!(targets.len(), 1);
                let m = GroupoidMorphism::from_source(h.clone(), g.clone()).unwrap();
                assert_eq!(&m.target, targets[0]);
                assert!(m.is_valid());
                morphisms.push(m);
            }
        }
        for a in &morphisms {
            let id_src = GroupoidMorphism::identity(a.source.clone());
            let id_tgt = GroupoidMorphism::identity(a.target.clone());
            assert!(groupoid_compose(&id_src, a).unwrap().equivalent(a).unwrap());
            assert!(groupoid_compose(a, &id_tgt).unwrap().equivalent(a).unwrap());
            let inv = a.inverse();
            assert!(inv.is_valid());
            assert!(groupoid_compose(a, &inv)
                .unwrap()
                .equivalent(&id_src)
                .unwrap());
            assert!(groupoid_compose(&inv, a)
                .unwrap()
                .equivalent(&id_tgt)
                .unwrap());
        }
        let sample: Vec<&GroupoidMorphism> = morphisms.iter().step_by(5).collect();
        for a in &sample {
            for b in sample.iter().filter(|b| b.source == a.target) {
                let ab = groupoid_compose(a, b).unwrap();
                assert!(ab.is_valid());
                for c in sample.iter().filter(|c| c.source == b.target) {
                    let left = groupoid_compose(&ab, c).unwrap();
                    let right = groupoid_compose(a, &groupoid_compose(b, c).unwrap()).unwrap();
                    assert!(left.equivalent(&right).unwrap());
                }
            }
            for b in sample.iter().filter(|b| b.source != a.target) {
                assert!(groupoid_compose(a, b).is_err());
            }
        }
    }
}

#[test]
fn crossing_inverse_is_a_morphism_back() {
    let e = Permutation::identity(2);
    let t = Permutation::transposition(2, 1);
    let inv = BraidWord::new(2, vec![-1]).unwrap();
    assert!(is_morphism(&t, &e, &inv));
    assert!(!is_morphism(&e, &e, &inv));
    let fwd =
        GroupoidMorphism::new(e.clone(), t.clone(), BraidWord::new(2, vec![1]).unwrap()).unwrap();
    let back = GroupoidMorphism::new(t, e.clone(), inv).unwrap();
    let round = groupoid_compose(&fwd, &back).unwrap();
    assert!(braids_equal(&round.element, &BraidWord::identity(2)).unwrap());
    assert_eq!(round.target, e);
}

/// Every (objects, inputs) pair for two inputs on at most two strands each,
/// inputs having at most `len` letters.
fn input_pairs(len: usize) -> Vec<(Vec<usize>, Vec<BraidWord>)> {
    let mut out = Vec::new();
    for m1 in 1..=2 {
        for m2 in 1..=2 {
            for b1 in braid_words_up_to(m1, len) {
                for b2 in braid_words_up_to(m2, len) {
                    out.push((vec![m1, m2], vec![b1.clone(), b2]));
                }
            }
        }
    }
    out
}

fn ids(objects: &[usize]) -> Vec<BraidWord> {
    objects.iter().map(|&m| BraidWord::identity(m)).collect()
}

#[test]
fn cable_functor_respects_composition_of_group_elements() {
    let objects2 = all_permutations(2);
    let words = braid_words_up_to(2, 2);
    for h in &objects2 {
        for ga in &words {
            let a = GroupoidMorphism::from_source(h.clone(), ga.clone()).unwrap();
            for gb in &words {
                let b = GroupoidMorphism::from_source(a.target.clone(), gb.clone()).unwrap();
                let ab = groupoid_compose(&a, &b).unwrap();
                for objects in [[1, 1], [1, 2], [2, 1], [2, 2]] {
                    let lhs = cable_functor_apply(&ab, &objects, &ids(&objects)).unwrap();
                    let rhs = cable_functor_apply(&a, &objects, &ids(&objects))
                        .unwrap()
                        .concat(&cable_functor_apply(&b, &objects, &ids(&objects)).unwrap())
                        .unwrap();
                    assert!(braids_equal(&lhs, &rhs).unwrap());
                    assert_eq!(lhs.strands(), tensor_objects(&objects));
                }
            }
        }
    }
}

#[test]
fn cable_functor_respects_composition_of_inputs() {
    let words = braid_words_up_to(2, 2);
    let pairs = input_pairs(1);
    for h in all_permutations(2) {
        for g in &words {
            let m = GroupoidMorphism::from_source(h.clone(), g.clone()).unwrap();
            for (objects, first) in &pairs {
                for (objects2, second) in pairs.iter().filter(|(o, _)| o == objects) {
                    assert_eq!(objects, objects2);
                    let composed: Vec<BraidWord> = first
                        .iter()
                        .zip(second)
                        .map(|(x, y)| x.concat(y).unwrap())
                        .collect();
                    let lhs = cable_functor_apply(&m, objects, &composed).unwrap();
                    let rhs = arranged_tensor(&m.source, first)
                        .unwrap()
                        .concat(&cable_functor_apply(&m, objects, second).unwrap())
                        .unwrap();
                    assert!(braids_equal(&lhs, &rhs).unwrap());
                }
            }
        }
    }
}

#[test]
fn cable_functor_is_natural() {
    let words = braid_words_up_to(2, 2);
    for h in all_permutations(2) {
        for g in &words {
            let m = GroupoidMorphism::from_source(h.clone(), g.clone()).unwrap();
            for (objects, inputs) in input_pairs(2) {
                let direct = cable_functor_apply(&m, &objects, &inputs).unwrap();
                let before = arranged_tensor(&m.source, &inputs)
                    .unwrap()
                    .concat(&cable_functor_apply(&m, &objects, &ids(&objects)).unwrap())
                    .unwrap();
                let after = cable_functor_apply(&m, &objects, &ids(&objects))
                    .unwrap()
                    .concat(&arranged_tensor(&m.target, &inputs).unwrap())
                    .unwrap();
                assert!(braids_equal(&direct, &before).unwrap());
                assert!(braids_equal(&direct, &after).unwrap(), "{m:?} {inputs:?}");
            }
        }
    }
}

#[test]
fn cable_functor_rejects_mismatched_inputs() {
    let m = GroupoidMorphism::identity(Permutation::identity(2));
    let b = [BraidWord::identity(2), BraidWord::identity(1)];
    assert!(cable_functor_apply(&m, &[1, 1], &b).is_err());
    assert!(cable_functor_apply(&m, &[2], &b[..1]).is_err());
}
