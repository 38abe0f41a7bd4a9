use palindromic::basis::{coords, expand, transition_matrix, BasisId, CoordinateVector};
use palindromic::poly::{int, Polynomial};
use palindromic::positivity::{b_product_convolution, is_unimodal, lambda_test};
use proptest::prelude::*;

/// `1 + q + ... + q^i`.
fn a_poly(i: usize) -> Polynomial {
    BasisId::A.element(i, 0)
}

#[test]
fn product_of_a_elements_has_unit_a_coordinates() {
    for i in 0..=15 {
        for j in 0..=15 {
            let h = a_poly(i).multiply(&a_poly(j));
            let c = coords(&h, i + j, BasisId::A).unwrap();
            for (k, e) in c.entries().iter().enumerate() {
                let want = if k <= i.min(j) { 1 } else { 0 };
                assert_eq!(*e, int(want), "A_{i} A_{j} at k={k}");
            }
        }
    }
}

#[test]
fn transition_matrices_compose_around_the_triangle() {
    use BasisId::*;
    for n in 0..=30 {
        let round = transition_matrix(n, S, A)
            .compose(&transition_matrix(n, A, B))
            .unwrap()
            .compose(&transition_matrix(n, B, S))
            .unwrap();
        assert!(round.is_identity(), "n={n}");
        assert!(transition_matrix(n, A, B).is_lower_triangular());
    }
}

#[test]
fn coords_carry_the_darga_they_were_asked_for() {
    let f: Polynomial = "q+4q^2+q^3".parse().unwrap();
    let c = coords(&f, 4, BasisId::B).unwrap();
    assert_eq!(c.darga(), 4);
    assert_eq!(c.entries().len(), 3);
    assert_eq!(expand(&c), f);
}

#[test]
fn wrong_darga_is_rejected() {
    let f: Polynomial = "1+4q+q^2".parse().unwrap();
    assert!(coords(&f, 3, BasisId::A).is_err());
}

fn lambda_poly() -> impl Strategy<Value = (Polynomial, usize)> {
    (0usize..12).prop_flat_map(|n| {
        prop::collection::vec(0i64..5, n / 2 + 1).prop_map(move |mut a| {
            a[0] += 1;
            (
                expand(&CoordinateVector::from_ints(n, BasisId::A, &a).unwrap()),
                n,
            )
        })
    })
}

fn b_positive_poly() -> impl Strategy<Value = (Polynomial, usize)> {
    (0usize..12).prop_flat_map(|n| {
        prop::collection::vec(0i64..5, n / 2 + 1).prop_map(move |mut b| {
            b[0] += 1;
            (
                expand(&CoordinateVector::from_ints(n, BasisId::B, &b).unwrap()),
                n,
            )
        })
    })
}

proptest! {
    #[test]
    fn lambda_polynomials_are_closed_under_products((f, n) in lambda_poly(), (g, m) in lambda_poly()) {
        let h = f.multiply(&g);
        prop_assert!(lambda_test(&h, n + m).unwrap().lambda);
        prop_assert!(is_unimodal(&h));
    }

    #[test]
    fn b_coordinates_multiply_by_convolution((f, n) in b_positive_poly(), (g, m) in b_positive_poly()) {
        let bf = coords(&f, n, BasisId::B).unwrap();
        let bg = coords(&g, m, BasisId::B).unwrap();
        let h = f.multiply(&g);
        prop_assert_eq!(b_product_convolution(&bf, &bg).unwrap(), coords(&h, n + m, BasisId::B).unwrap());
        prop_assert!(lambda_test(&h, n + m).unwrap().lambda);
    }
}

#[test]
fn products_near_the_machine_word_boundary_are_exact() {
    use palindromic::poly::Coefficient;
    for shift in [40u32, 60, 62, 63, 64, 90] {
        let big = Coefficient::from_integer(num_bigint::BigInt::from(1) << shift);
        let coeffs: Vec<Coefficient> = (0..300).map(|k| &big - int(k)).collect();
        let f = Polynomial::from_coeffs(0, coeffs);
        let h = f.multiply(&f);
        for x in [-2, 1, 3] {
            let x = int(x);
            assert_eq!(
                h.evaluate(&x),
                f.evaluate(&x) * f.evaluate(&x),
                "shift {shift}"
            );
        }
    }
}
