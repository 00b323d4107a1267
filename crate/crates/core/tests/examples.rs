//! Worked examples, each checked against an independent computation where one exists.

use circbundle::oracle::{bfs_oracle_trivial, OracleConfig};
use circbundle::push::c_power_conjugation;
use circbundle::*;

fn ctx(g: usize, k: i64) -> BundleContext {
    BundleContext::new(g, k).unwrap()
}

fn el(s: &str) -> BundleElement {
    BundleElement::parse(s).unwrap()
}

#[test]
fn relator_is_z_to_the_k() {
    let c = ctx(2, 3);
    let x = c.parse("a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2").unwrap();
    assert_eq!(c.z_exponent(&x).unwrap(), 3);
    // The oracle derives the same word from one relator.
    assert_eq!(
        bfs_oracle_trivial(c.surface(), &x.word, &OracleConfig::default()).unwrap(),
        Some(1)
    );
}

#[test]
fn torus_commutation_rule() {
    let c = ctx(1, 2);
    assert!(c.elem_eq(&el("B1 A1"), &el("A1 B1 ~z ~z")));
    assert!(!c.elem_eq(&el("B1 A1"), &el("A1 B1")));
}

#[test]
fn relator_times_inverse_z_is_identity() {
    let c = ctx(2, 1);
    let x = c.relator_element().mul(&BundleElement::z_power(-1));
    assert!(c.elem_eq(&x, &BundleElement::identity()));
}

#[test]
fn z_exponents_and_non_central_words() {
    let c = ctx(2, 5);
    assert_eq!(c.z_exponent(&el("z z ~z")).unwrap(), 1);
    assert_eq!(c.z_exponent(&c.relator_element().inverse()).unwrap(), -5);
    assert!(matches!(
        c.z_exponent(&el("A1")),
        Err(Error::NotInCenter { .. })
    ));
    assert_eq!(
        bfs_oracle_trivial(
            c.surface(),
            &FreeWord::parse("a1", 2).unwrap(),
            &OracleConfig::default()
        )
        .unwrap(),
        None
    );
}

#[test]
fn pushing_around_the_relator_is_a_power_of_c_conjugation() {
    for (g, n) in [(2, -2), (3, -4), (4, -6)] {
        let table = PushTable::standard(g).unwrap();
        let p = table.push(&surface_relator(g)).unwrap();
        assert_eq!(p, c_power_conjugation(g, n), "genus {g}");
    }
}

#[test]
fn push_generators_fix_c_and_act_trivially_on_homology() {
    let table = PushTable::standard(3).unwrap();
    for e in table.entries() {
        assert!(e.forward.fixes_c());
        assert_eq!(e.forward.homology_matrix(), IntMatrix::identity(6));
    }
}

#[test]
fn sigma_of_push_is_inner_times_transvection() {
    let c = ctx(2, 3);
    let table = PushTable::standard(2).unwrap();
    let t = FreeWord::parse("a1", 2).unwrap();
    let s = sigma(&c, &table.push(&t).unwrap()).unwrap();
    let d = transvection(2, &abelianize(2, &t).scale(3)).unwrap();
    let d_inv = transvection(2, &abelianize(2, &t).scale(-3)).unwrap();
    assert!(s
        .compose(&d_inv)
        .is_inner_by(&c, &iota(&t), Conjugation::Left));
    assert!(s.endo_eq(&c, &inner(2, &iota(&t), Conjugation::Left).compose(&d)));
    // The other direction of conjugation does not satisfy the identity.
    assert!(!s.endo_eq(&c, &inner(2, &iota(&t), Conjugation::Right).compose(&d)));
}

#[test]
fn phi_examples() {
    let c = ctx(2, 2);
    let gamma = HomologyClass(vec![1, -2, 0, 3]);
    assert!(phi(&transvection(2, &gamma).unwrap()).surface_eq(c.surface(), &FreeEndo::identity(2)));
    let t = FreeWord::parse("a1 ~b2", 2).unwrap();
    let lifted = inner(2, &iota(&t), Conjugation::Left);
    assert!(phi(&lifted).surface_eq(
        c.surface(),
        &FreeEndo::conjugation(2, &t, Conjugation::Left)
    ));
    let table = PushTable::standard(2).unwrap();
    let f = table.push(&t).unwrap();
    assert!(phi(&sigma(&c, &f).unwrap()).surface_eq(c.surface(), &f));
}

#[test]
fn commutator_pushes_are_inner() {
    let c = ctx(2, 2);
    let table = PushTable::standard(2).unwrap();
    let t = commutator(
        &FreeWord::parse("a1", 2).unwrap(),
        &FreeWord::parse("b2", 2).unwrap(),
    );
    assert!(abelianize(2, &t).is_zero());
    let s = sigma(&c, &table.push(&t).unwrap()).unwrap();
    assert!(s.is_inner_by(&c, &iota(&t), Conjugation::Left));
}

#[test]
fn naive_lift_is_a_transvection() {
    let c = ctx(2, 1);
    let mut images = BundleEndo::identity(2).images().to_vec();
    images[0] = el("A1 z");
    let e = BundleEndo::new(2, images, el("z")).unwrap();
    assert!(e.preserves_bundle_relation(&c));
    assert!(e.endo_eq(&c, &transvection(2, &HomologyClass::basis(2, 1)).unwrap()));
    assert!(!e.endo_eq(&c, &BundleEndo::identity(2)));
}

#[test]
fn transvections_commute_with_inner_maps() {
    let c = ctx(3, -2);
    let d = transvection(3, &HomologyClass(vec![2, 0, -1, 1, 0, 3])).unwrap();
    let x = el("A1 B3 ~A2 z");
    let ci = inner(3, &x, Conjugation::Left);
    assert!(d.compose(&ci).endo_eq(&c, &ci.compose(&d)));
}

#[test]
fn genus_one_context_works_without_dehn() {
    let c = ctx(1, 1);
    let table = PushTable::standard(1).unwrap();
    let t = FreeWord::parse("a1 b1 b1", 1).unwrap();
    let s = sigma(&c, &table.push(&t).unwrap()).unwrap();
    let rhs = inner(1, &iota(&t), Conjugation::Left)
        .compose(&transvection(1, &abelianize(1, &t)).unwrap());
    assert!(s.endo_eq(&c, &rhs));
}
