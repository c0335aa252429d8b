//! Replays of the explicit computations behind Lemmas 3.5 to 3.9 and the
//! long-product identity of Proposition 3.3.

use pi_core::algebras::{AlgElement, FiniteAlgebra, MonoKey, Profile};
use pi_core::engine::{evaluate_ncpoly, is_identity, Model};
use pi_core::free_algebra::{family, multilinearize, parse, FamilySpec};
use pi_core::{QAlgElement, Rational};

fn term(row: u8, col: u8, mask: u64) -> QAlgElement {
    AlgElement::monomial(MonoKey::new(row, col, 0, mask), Rational::from(1))
}

fn a(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::parse(&format!("A(n={n})")).unwrap()
}

#[test]
fn lemma_f1_replay() {
    let e22 = term(1, 1, 0);
    let e12 = term(0, 1, 0);
    for m in 2..=7 {
        let f = family::<Rational>(&FamilySpec::new(1, m, None).unwrap()).unwrap();
        let v = evaluate_ncpoly(&a(2), &f, &[e22.clone(), e12.clone()]).unwrap();
        assert_eq!(v, e12, "m = {m}");
    }
}

#[test]
fn lemma_f2_replay() {
    // x1 = (1 + e1) e22, x2 = e12 + e2 e22
    let x1 = term(1, 1, 0).add(&term(1, 1, 0b1));
    let x2 = term(0, 1, 0).add(&term(1, 1, 0b10));
    let two = AlgElement::monomial(MonoKey::new(0, 1, 0, 0b11), Rational::from(2));
    for m in 4..=7 {
        let f = family::<Rational>(&FamilySpec::new(2, m, Some(2)).unwrap()).unwrap();
        let v = evaluate_ncpoly(&a(2), &f, &[x1.clone(), x2.clone()]).unwrap();
        assert_eq!(v, two, "m = {m}");
        assert_eq!(a(2).render(&v), "2e{1}e{2}e12");
    }
    let x3 = term(1, 1, 0b100);
    let x4 = term(1, 1, 0b1000);
    let four = AlgElement::monomial(MonoKey::new(0, 1, 0, 0b1111), Rational::from(4));
    for m in 6..=7 {
        let f = family::<Rational>(&FamilySpec::new(2, m, Some(4)).unwrap()).unwrap();
        let v = evaluate_ncpoly(&a(4), &f, &[x1.clone(), x2.clone(), x3.clone(), x4.clone()]).unwrap();
        assert_eq!(v, four, "m = {m}");
    }
}

#[test]
fn families_are_not_identities_of_a2() {
    let a2 = Model::algebra(a(2));
    let specs = [
        (1, 2, None),
        (1, 5, None),
        (2, 4, Some(2)),
        (2, 6, Some(2)),
        (3, 4, Some(3)),
        (3, 6, Some(3)),
        (4, 5, Some(3)),
        (4, 6, Some(3)),
        (5, 4, Some(4)),
        (5, 6, Some(4)),
    ];
    for (kind, m, i) in specs {
        let spec = FamilySpec::new(kind, m, i).unwrap();
        let f = multilinearize(&family::<Rational>(&spec).unwrap()).unwrap();
        let v = is_identity(&f, &a2).unwrap();
        assert!(!v.is_identity, "{spec}");
        assert!(v.witness.unwrap().replays(&f).unwrap(), "{spec}");
    }
}

#[test]
fn families_beyond_the_cutoff_vanish_on_a2() {
    // i ≥ n + 2 for u2, i ≥ n + 2 for u3/u4 and i ≥ n + 3 for u5
    let a2 = Model::algebra(a(2));
    for (kind, m, i) in [(2, 6, 4), (3, 6, 5), (5, 6, 6)] {
        let spec = FamilySpec::new(kind, m, Some(i)).unwrap();
        let f = multilinearize(&family::<Rational>(&spec).unwrap()).unwrap();
        assert!(is_identity(&f, &a2).unwrap().is_identity, "{spec}");
        assert!(!is_identity(&f, &Model::profile(Profile::A)).unwrap().is_identity, "{spec}");
    }
}

#[test]
fn long_product_identity() {
    let f = multilinearize(&parse::<Rational>("[x1,x2]*[x3,x4]*[x5,x6]").unwrap()).unwrap();
    assert!(is_identity(&f, &Model::algebra(a(2))).unwrap().is_identity);
    assert!(is_identity(&f, &Model::algebra(a(3))).unwrap().is_identity);
    assert!(!is_identity(&f, &Model::algebra(a(4))).unwrap().is_identity);
    assert!(!is_identity(&f, &Model::profile(Profile::A)).unwrap().is_identity);
}
