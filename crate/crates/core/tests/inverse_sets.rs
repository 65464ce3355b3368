mod common;

use common::{all_rings, elements, m, mat, semiprime_rings, z};
use regring::example::example_generators;
use regring::ginv::{
    iann_decomposition, idempotent_frame, inner_annihilator, inner_inverses, inner_inverses_param, inner_translate,
    inverse_report, outer_inverses, phi, ref_decomposition, ref_decomposition_sumset, reflexive_inverses,
    reflexive_via_product,
};
use regring::{build_example_ring, parse_element, render, ElemSet, Error, Ring};

fn residues(ring: &Ring, set: &ElemSet) -> Vec<String> {
    set.iter().map(|x| render(ring, &x)).collect()
}

#[test]
fn pinned_values() {
    let r = z(6);
    let three = r.scalar(3);
    assert_eq!(residues(&r, &inner_inverses(&r, &three).unwrap()), ["1", "3", "5"]);
    assert_eq!(residues(&r, &reflexive_inverses(&r, &three).unwrap()), ["3"]);

    let r = m(2, 2);
    let e11 = mat(&r, "1,0;0,0");
    assert_eq!(inner_inverses(&r, &e11).unwrap().len(), 8);
    assert_eq!(reflexive_inverses(&r, &e11).unwrap().len(), 4);

    let r = build_example_ring();
    let g = example_generators(&r).unwrap();
    assert_eq!(inner_inverses(&r, &g.a).unwrap().len(), 512);
    assert_eq!(inner_inverses(&r, &g.a).unwrap(), inner_inverses(&r, &g.b).unwrap());
    let refl = reflexive_inverses(&r, &g.a).unwrap();
    assert_eq!(refl.len(), 16);
    assert_eq!(refl.first(), Some(g.x.clone()));
    assert!(refl.contains(&parse_element(&r, "x + ax").unwrap()));
}

#[test]
fn count_law_everywhere() {
    for ring in all_rings() {
        for a in elements(&ring) {
            let inner = inner_inverses(&ring, &a).unwrap();
            if !inner.is_empty() {
                assert_eq!(inner.len(), inner_annihilator(&ring, &a).unwrap().len(), "{}", ring.describe());
            }
        }
    }
}

#[test]
fn parametrization_matches_scan_on_small_rings() {
    for ring in semiprime_rings() {
        for a in elements(&ring) {
            let inner = inner_inverses(&ring, &a).unwrap();
            for a0 in inner.iter() {
                assert_eq!(inner_inverses_param(&ring, &a, &a0).unwrap(), inner);
            }
        }
    }
}

#[test]
fn parametrization_rejects_non_witnesses() {
    let r = z(6);
    assert!(matches!(inner_inverses_param(&r, &r.scalar(3), &r.scalar(2)), Err(Error::NotInnerInverse)));
    let r = z(4);
    assert!(matches!(inner_inverses_param(&r, &r.scalar(2), &r.scalar(1)), Err(Error::NotInnerInverse)));
}

#[test]
fn phi_lands_in_ref_and_fixes_it() {
    for ring in all_rings() {
        for a in elements(&ring).into_iter().step_by(7) {
            let inner = inner_inverses(&ring, &a).unwrap();
            let refl = reflexive_inverses(&ring, &a).unwrap();
            for x in inner.iter().step_by(5) {
                let y = phi(&ring, &a, &x).unwrap();
                assert!(refl.contains(&y));
            }
            for y in refl.iter() {
                assert_eq!(phi(&ring, &a, &y).unwrap(), y);
            }
            match reflexive_via_product(&ring, &a) {
                Ok(set) => assert_eq!(set, refl),
                Err(e) => assert!(inner.is_empty() && matches!(e, Error::NotRegular)),
            }
        }
    }
}

#[test]
fn reflexive_is_inner_meet_outer() {
    for ring in all_rings() {
        for a in elements(&ring).into_iter().step_by(11) {
            let rep = inverse_report(&ring, &a).unwrap();
            assert_eq!(rep.reflexive, rep.inner.intersection(&rep.outer));
            assert_eq!(rep.outer, outer_inverses(&ring, &a).unwrap());
            assert_eq!(rep.witness, rep.inner.first());
        }
    }
}

#[test]
fn decompositions_hold() {
    for ring in all_rings() {
        for a in elements(&ring).into_iter().step_by(3) {
            let inner = inner_inverses(&ring, &a).unwrap();
            let refl = reflexive_inverses(&ring, &a).unwrap();
            for a0 in inner.iter().step_by(17) {
                assert!(idempotent_frame(&ring, &a, &a0).unwrap().holds_for(&ring, &a).unwrap());
                assert!(iann_decomposition(&ring, &a, &a0).unwrap().holds());
                assert_eq!(inner_translate(&ring, &a, &a0).unwrap(), inner);
            }
            if let Some(a0) = refl.first() {
                assert_eq!(ref_decomposition(&ring, &a, &a0).unwrap(), refl, "{}", ring.describe());
                assert!(refl.is_subset(&ref_decomposition_sumset(&ring, &a, &a0).unwrap()));
            }
        }
    }
}

#[test]
fn independent_sumset_is_strictly_larger_for_e11() {
    let r = m(2, 2);
    let e11 = mat(&r, "1,0;0,0");
    assert_eq!(ref_decomposition(&r, &e11, &e11).unwrap().len(), 4);
    assert_eq!(ref_decomposition_sumset(&r, &e11, &e11).unwrap().len(), 8);
}

#[test]
fn non_regular_elements_have_empty_sets() {
    let r = z(4);
    let two = r.scalar(2);
    assert!(inner_inverses(&r, &two).unwrap().is_empty());
    assert!(reflexive_inverses(&r, &two).unwrap().is_empty());
    let r = build_example_ring();
    let g = example_generators(&r).unwrap();
    let sum = r.add(&g.a, &g.b).unwrap();
    assert!(inner_inverses(&r, &sum).unwrap().is_empty());
}

#[test]
fn budget_is_enforced() {
    let r = m(3, 3).with_budget(1000);
    assert!(matches!(inner_inverses(&r, &r.one()), Err(Error::BudgetExceeded { .. })));
}
