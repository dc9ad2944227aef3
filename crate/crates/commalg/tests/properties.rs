use hilbfix_commalg::groebner::{ModuleRing, Position, TermOrder, Vector};
use hilbfix_commalg::linalg::{rank, SparseRow};
use hilbfix_commalg::mpoly::{Exp, MPoly, MAX_VARS};
use hilbfix_core::exactalg::rat;
use proptest::prelude::*;

fn poly(nvars: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, nvars), -3i64..=3), 1..4).prop_map(move |terms| {
        MPoly::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| {
                let mut x: Exp = [0; MAX_VARS];
                x[..nvars].copy_from_slice(&e);
                (x, rat(c))
            }),
        )
    })
}

fn orders(nvars: usize) -> Vec<TermOrder> {
    let all: Vec<usize> = (0..nvars).collect();
    vec![TermOrder::grevlex(nvars), TermOrder::block_grevlex(&[&all[..1], &all[1..]])]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ideal_bases_pass_the_audit(gens in prop::collection::vec(poly(3), 1..4), which in 0usize..2) {
        let ring = ModuleRing::new(3, orders(3)[which].clone(), Position::Pot);
        let vs: Vec<Vector> = gens.iter().filter(|p| !p.is_zero()).map(|p| ring.poly_vector(p)).collect();
        let gb = ring.groebner(&vs);
        prop_assert!(ring.audit(&gb));
        prop_assert!(ring.contains_all(&gb, &vs));
        // Every basis element lies in the ideal of the generators: re-running on the basis is idempotent.
        prop_assert_eq!(ring.groebner(&gb), gb);
    }

    #[test]
    fn module_bases_pass_the_audit(cols in prop::collection::vec((poly(2), poly(2), poly(2)), 1..4)) {
        let ring = ModuleRing::new(2, TermOrder::grevlex(2), Position::Pot);
        let vs: Vec<Vector> = cols.iter().map(|(a, b, c)| ring.vector(&[(0, a), (1, b), (2, c)])).filter(|v| !v.is_zero()).collect();
        let gb = ring.groebner(&vs);
        prop_assert!(ring.audit(&gb));
        prop_assert!(ring.contains_all(&gb, &vs));
    }

    #[test]
    fn polynomial_ring_laws(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn row_rank_equals_column_rank(m in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..5)) {
        let rows: Vec<SparseRow> = m.iter().map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, rat(*v))).collect()).collect();
        let cols: Vec<SparseRow> = (0..4).map(|j| m.iter().enumerate().filter(|(_, r)| r[j] != 0).map(|(i, r)| (i, rat(r[j]))).collect()).collect();
        prop_assert_eq!(rank(rows), rank(cols));
    }
}
