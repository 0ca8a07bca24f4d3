//! Identities that hold for every linear code, checked on random small codes.

use proptest::prelude::*;

use jacobi_designs::algebra::{Cyclotomic, FieldElement, FiniteField};
use jacobi_designs::codes::{composition, LinearCode};
use jacobi_designs::designs::colored_design_check;
use jacobi_designs::enumerators::{
    coefficient_order, complete_jacobi, cwe, macwilliams_scj, macwilliams_scwe, scwe, split_complete_jacobi,
    verify_decomposition, SplitSpec,
};

fn field(q: usize) -> FiniteField {
    FiniteField::with_order(q as u32).unwrap()
}

/// A random code of length 2..=6 and at most 3 generator rows over GF(2), GF(3) or GF(4).
fn code() -> impl Strategy<Value = LinearCode> {
    (prop_oneof![Just(2usize), Just(3), Just(4)], 2usize..=6, 1usize..=3).prop_flat_map(|(q, n, k)| {
        proptest::collection::vec(proptest::collection::vec(0..q, n), k).prop_map(move |rows| {
            let f = field(q);
            let rows: Vec<Vec<FieldElement>> =
                rows.into_iter().map(|r| r.into_iter().map(FieldElement::from_index).collect()).collect();
            LinearCode::from_generator(&f, &rows, n).unwrap()
        })
    })
}

fn halves(n: usize) -> SplitSpec {
    let h = n / 2;
    SplitSpec::new(n, vec![(1..=h).collect(), (h + 1..=n).collect()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transform_gives_the_dual(c in code()) {
        let hermitian_ok = c.field().is_square_order();
        for hermitian in [false, true] {
            if hermitian && !hermitian_ok {
                continue;
            }
            let dual = c.dual(hermitian).unwrap();
            let spec = halves(c.length());
            let w = scwe(&c, &spec).unwrap();
            let t = macwilliams_scwe(&w, c.size(), hermitian).unwrap();
            prop_assert_eq!(&t, &scwe(&dual, &spec).unwrap());
            prop_assert_eq!(macwilliams_scwe(&t, dual.size(), hermitian).unwrap(), w);
        }
    }

    #[test]
    fn split_jacobi_transform(c in code()) {
        let n = c.length();
        let spec = halves(n).with_refs(vec![vec![1], vec![n]]).unwrap();
        let dual = c.dual(false).unwrap();
        let p = split_complete_jacobi(&c, &spec).unwrap();
        prop_assert_eq!(macwilliams_scj(&p, c.size(), false).unwrap(), split_complete_jacobi(&dual, &spec).unwrap());
    }

    #[test]
    fn values_at_ones_count_words(c in code()) {
        let size = Cyclotomic::from_int(coefficient_order(c.field()), c.size() as i64);
        prop_assert_eq!(cwe(&c).evaluate_ones(), size.clone());
        prop_assert_eq!(complete_jacobi(&c, &[1, c.length()]).unwrap().evaluate_ones(), size);
    }

    #[test]
    fn decomposition_at_every_coordinate(c in code()) {
        let spec = halves(c.length());
        for (k, b) in spec.blocks().iter().enumerate() {
            for &i in b {
                let r = verify_decomposition(&c, &spec, k + 1, i).unwrap();
                prop_assert!(r.exact && r.averaged, "{:?}", r.first_difference);
            }
        }
    }

    #[test]
    fn dual_indicator_detects_the_dual(c in code(), seed in proptest::collection::vec(0usize..4, 6)) {
        let q = c.field().q();
        let v: Vec<FieldElement> = seed.iter().take(c.length()).map(|&a| FieldElement::from_index(a % q)).collect();
        let dual = c.dual(false).unwrap();
        let order = coefficient_order(c.field());
        let expect = Cyclotomic::from_int(order, dual.contains(&v) as i64);
        prop_assert_eq!(c.dual_indicator(&v, order).unwrap(), expect);
    }

    #[test]
    fn designs_count_their_blocks(c in code(), t in 1usize..=2) {
        prop_assume!(t <= c.length());
        let all: Vec<usize> = (1..=c.length()).collect();
        for s in c.compositions() {
            let blocks = c.words().iter().filter(|w| composition(c.field(), w, &all).unwrap() == s).count();
            // Counting and Jacobi coefficients are cross-checked inside.
            let r = colored_design_check(&c, &s, t).unwrap();
            prop_assert_eq!(r.block_count, blocks);
        }
    }
}
