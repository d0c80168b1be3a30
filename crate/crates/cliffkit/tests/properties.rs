//! Property-based invariants of the algebra, representation and field layers.

use proptest::prelude::*;

use cliffkit::algebra::{blade_product, volume_element};
use cliffkit::field::{ideal_projection, is_single_column, nabla_a, nabla_a_componentwise, DHSpinor, EmField};
use cliffkit::num::{q, Entry, Field};
use cliffkit::quotient::epsilon_map;
use cliffkit::spinor::{find_primitive_idempotent, spinor_k_repr};
use cliffkit::{Blade, Cq, Multivector, Signature, Q};

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6).prop_map(q)
}

fn small_cq(complex: bool) -> impl Strategy<Value = Cq> {
    (-4i64..=4, -3i64..=3).prop_map(move |(re, im)| Cq::new(q(re), q(if complex { im } else { 0 })))
}

fn sig_strategy() -> impl Strategy<Value = Signature> {
    prop_oneof![
        (0usize..=3, 0usize..=3).prop_map(|(p, q)| Signature::real(p, q)),
        (1usize..=4).prop_map(Signature::complex),
    ]
}

fn mv_in(sig: Signature) -> impl Strategy<Value = Multivector> {
    let n = 1usize << sig.n();
    prop::collection::vec(small_cq(sig.is_complex()), n).prop_map(move |coeffs| {
        Multivector::from_terms(sig, coeffs.into_iter().enumerate().map(|(b, c)| (Blade(b as u32), c))).unwrap()
    })
}

fn sig_and_three() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    sig_strategy().prop_flat_map(|s| (mv_in(s), mv_in(s), mv_in(s)))
}

fn quad() -> impl Strategy<Value = [Q; 4]> {
    prop::array::uniform4(small_q())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative((a, b, c) in sig_and_three()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn product_distributes((a, b, c) in sig_and_three()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn involutions_respect_products((a, b, _c) in sig_and_three()) {
        // star is an automorphism, reversion and conjugation are antiautomorphisms
        prop_assert_eq!(a.mul(&b).grade_involution(), a.grade_involution().mul(&b.grade_involution()));
        prop_assert_eq!(a.mul(&b).reversion(), b.reversion().mul(&a.reversion()));
        prop_assert_eq!(a.mul(&b).conjugation(), b.conjugation().mul(&a.conjugation()));
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!(a.grade_involution().reversion(), a.conjugation());
    }

    #[test]
    fn blade_products_are_signed_blades(sig in sig_strategy(), x in 0u32..16, y in 0u32..16) {
        let mask = (1u32 << sig.n()) - 1;
        let (a, b) = (Blade(x & mask), Blade(y & mask));
        let (prod, sign) = blade_product(a, b, &sig).unwrap();
        prop_assert_eq!(prod, Blade(a.0 ^ b.0));
        prop_assert!(sign == 1 || sign == -1);
        let (back, sign2) = blade_product(b, a, &sig).unwrap();
        prop_assert_eq!(back, prod);
        prop_assert_eq!(sign * sign2, a.commutation(b));
    }

    #[test]
    fn volume_element_is_central_or_anticentral(sig in sig_strategy()) {
        let w = volume_element(sig);
        for i in 1..=sig.n() {
            let e = Multivector::generator(sig, i).unwrap();
            let (we, ew) = (w.mul(&e), e.mul(&w));
            if sig.n() % 2 == 1 {
                prop_assert_eq!(we, ew);
            } else {
                prop_assert_eq!(we, ew.neg());
            }
        }
    }

    #[test]
    fn epsilon_is_a_homomorphism(
        (a, b) in prop_oneof![Just(Signature::complex(3)), Just(Signature::real(2, 1)), Just(Signature::real(1, 0))]
            .prop_flat_map(|s| (mv_in(s), mv_in(s)))
    ) {
        let lhs = epsilon_map(&a.mul(&b)).unwrap();
        let rhs = epsilon_map(&a).unwrap().mul(&epsilon_map(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(epsilon_map(&a.add(&b)).unwrap(), epsilon_map(&a).unwrap().add(&epsilon_map(&b).unwrap()));
    }

    #[test]
    fn representation_is_multiplicative(
        (a, b) in prop_oneof![Just(Signature::real(1, 1)), Just(Signature::real(0, 2)), Just(Signature::real(1, 3)), Just(Signature::real(3, 0))]
            .prop_flat_map(|s| (mv_in(s), mv_in(s)))
    ) {
        let sig = *a.sig();
        let f = find_primitive_idempotent(sig).unwrap();
        let rep = spinor_k_repr(sig, &f, None).unwrap();
        // quaternion entries are expanded to complex 2×2 blocks
        let gens = rep.complex_generators();
        let size = gens[0].rows();
        let image = |m: &Multivector| {
            let mut acc = cliffkit::Mat::<Cq>::zeros(size, size);
            for (b, c) in m.terms() {
                let prod = b.indices().iter().fold(cliffkit::Mat::identity(size), |x, &i| x.mul(&gens[i - 1]));
                acc = acc.add(&prod.scale(c));
            }
            acc
        };
        prop_assert_eq!(image(&a.mul(&b)), image(&a).mul(&image(&b)));
    }

    #[test]
    fn nabla_a_is_bilinear(d1 in quad(), d2 in quad(), a in quad(), k in small_q()) {
        let sum: [Q; 4] = std::array::from_fn(|i| d1[i].clone() + d2[i].clone());
        let lhs = nabla_a(&sum, &a);
        let (f1, f2) = (nabla_a(&d1, &a), nabla_a(&d2, &a));
        let add = |x: &EmField, y: &EmField| EmField {
            scalar: x.scalar.clone() + y.scalar.clone(),
            e: std::array::from_fn(|i| x.e[i].clone() + y.e[i].clone()),
            h: std::array::from_fn(|i| x.h[i].clone() + y.h[i].clone()),
        };
        prop_assert_eq!(lhs, add(&f1, &f2));
        let scaled: [Q; 4] = std::array::from_fn(|i| a[i].clone() * k.clone());
        let f = nabla_a(&d1, &scaled);
        prop_assert_eq!(f.e.clone(), std::array::from_fn(|i| f1.e[i].clone() * k.clone()));
        prop_assert_eq!(f, nabla_a_componentwise(&d1, &scaled));
    }

    #[test]
    fn projection_is_a_single_column(c in prop::collection::vec(small_q(), 8)) {
        let s = DHSpinor::from_coeffs(&c).unwrap();
        let p = ideal_projection(&s);
        prop_assert!(is_single_column(&p.matrix));
        prop_assert_eq!(p.column, s.phi().to_vec());
        prop_assert_eq!(s.matrix(), s.pattern_matrix());
    }

    #[test]
    fn cq_field_axioms(a in small_cq(true), b in small_cq(true)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).mul(&b.inv().unwrap()), a);
        }
    }
}
