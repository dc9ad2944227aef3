use hilbfix_core::exactalg::{quantum_int, quantum_multinomial, rat, LaurentPoly, QuantumProduct};
use hilbfix_core::hilb::{is_very_stable, noneq_mult, very_stable_mult, virtual_mult};
use hilbfix_core::mirror::{chi_i, g_poly, renorm_character};
use hilbfix_core::partitions::{
    dominates, enumerate_multipartitions, moves_closure, partitions_of, theta_matrices, weak_compositions, Composition, Partition,
};
use hilbfix_core::surfaces::{surface, SurfaceId};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..8, -5i64..6), 0..5).prop_map(LaurentPoly::from_terms)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

proptest! {
    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &a), &LaurentPoly::zero());
    }

    #[test]
    fn exact_division_round_trips(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn multinomial_at_one(parts in prop::collection::vec(0u64..4, 1..4), a in 1u64..4) {
        let n: u64 = parts.iter().sum();
        let q = quantum_multinomial(n, &parts, a).unwrap();
        let expected = factorial(n) / parts.iter().map(|&k| factorial(k)).product::<BigInt>();
        prop_assert_eq!(q.at_one(), hilbfix_core::exactalg::Rational::from_integer(expected));
        prop_assert!(q.is_palindromic());
        prop_assert!(q.has_nonnegative_coeffs());
    }

    #[test]
    fn factored_and_expanded_agree(n in 1u64..6, a in 1u64..4, k in 1u64..4) {
        let qp = QuantumProduct::qint(n, a).plethystic_power(k);
        let p = hilbfix_core::exactalg::plethystic_power(&quantum_int(n, a).unwrap(), k);
        prop_assert!(qp.value_eq_poly(&p));
    }

    #[test]
    fn renorm_at_one_counts(weights in prop::collection::vec(0u64..5, 1..4), n in 0usize..4, b in 1u64..4) {
        // Every summand specializes to a multinomial; their total is c^n.
        let v = renorm_character(&weights, n, b);
        prop_assert_eq!(v.at_one(), rat((weights.len() as i64).pow(n as u32)));
        prop_assert_eq!(g_poly(n, weights.len()).at_one(), v.at_one());
    }

    #[test]
    fn theta_transpose_bijection(l in prop::collection::vec(0usize..4, 1..4), k in 1usize..4, idx in any::<prop::sample::Index>()) {
        let total: usize = l.iter().sum();
        let lc = Composition::new(l);
        let mc = idx.get(&weak_compositions(total, k)).clone();
        let forward = theta_matrices(&lc, &mc).unwrap();
        let backward = theta_matrices(&mc, &lc).unwrap();
        prop_assert_eq!(forward.len(), backward.len());
        for a in &forward {
            prop_assert_eq!(a.row_sums(), lc.parts.clone());
            prop_assert_eq!(a.col_sums(), mc.parts.clone());
            prop_assert!(backward.contains(&a.transpose()));
        }
    }
}

#[test]
fn partition_dominance_is_a_partial_order() {
    for n in 1..=6 {
        let ps = partitions_of(n);
        for a in &ps {
            assert!(a.dominates(a));
            for b in &ps {
                if a != b && a.dominates(b) {
                    assert!(!b.dominates(a));
                }
                for c in &ps {
                    if a.dominates(b) && b.dominates(c) {
                        assert!(a.dominates(c));
                    }
                }
            }
            assert_eq!(a.transpose().transpose(), *a);
        }
    }
}

#[test]
fn multipartition_dominance_is_a_partial_order_and_matches_moves() {
    for id in SurfaceId::PARABOLIC {
        let s = surface(id);
        for n in 1..=3 {
            let all = enumerate_multipartitions(s, n).unwrap();
            for a in &all {
                let closure = moves_closure(a, s);
                for b in &all {
                    let ab = dominates(a, b, s).unwrap();
                    assert_eq!(ab, closure.contains(b), "{} {} {}", s.name, a.describe(s), b.describe(s));
                    if a != b && ab {
                        assert!(!dominates(b, a, s).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn very_stable_multiplicities_are_polynomial_shadows() {
    for id in SurfaceId::ALL {
        let s = surface(id);
        for n in 1..=3 {
            for mp in enumerate_multipartitions(s, n).unwrap() {
                if !is_very_stable(s, &mp) {
                    continue;
                }
                let m = very_stable_mult(s, &mp).unwrap();
                assert!(virtual_mult(s, &mp).value_eq_poly(&m));
                assert!(m.is_palindromic());
                assert_eq!(m.coeff(0), rat(1));
                assert_eq!(m.at_one(), hilbfix_core::exactalg::Rational::from_integer(noneq_mult(s, &mp).unwrap()));
            }
        }
    }
}

#[test]
fn chi_at_one_is_noneq_multiplicity() {
    for id in SurfaceId::PARABOLIC {
        let s = surface(id);
        if s.e < 2 {
            continue;
        }
        for n in 1..=2 {
            for mp in enumerate_multipartitions(s, n).unwrap() {
                if mp.support().any(|(p, _)| !s.components[p].is_isolated()) {
                    continue;
                }
                let chi = chi_i(s, &mp).unwrap();
                let m = noneq_mult(s, &mp).unwrap();
                assert_eq!(chi.at_one(), hilbfix_core::exactalg::Rational::from_integer(m), "{}", mp.describe(s));
            }
        }
    }
}

#[test]
fn columns_are_transposed_rows() {
    for k in 1..6 {
        assert_eq!(Partition::column(k).transpose(), Partition::new(vec![k]));
    }
}
