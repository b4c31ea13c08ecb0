//! Randomized invariants for the exact linear algebra and module layers,
//! checked against brute-force oracles where the search space is finite.

mod common;

use common::{
    bruteforce_cardinality, bruteforce_cyclic_decomposition, enumerate_vectors,
    hom_count_bruteforce, tensor_cardinality_of_cyclics,
};
use freyd::{
    det, hom_module, kernel, snf, solve, tensor_product, FPModule, LinearSolver, Matrix,
    ModuleInvariants, RingElement, RingSpec,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
    })
}

fn is_unit_det(ring: &RingSpec, m: &Matrix) -> bool {
    let d = det(m);
    d == ring.one() || d == ring.neg(&ring.one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_diagonalizes_with_unimodular_transforms(rows in int_matrix(5, 9)) {
        let ring = RingSpec::integers();
        let a = Matrix::from_int_rows(&ring, &rows);
        let s = snf(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(is_unit_det(&ring, &s.u));
        prop_assert!(is_unit_det(&ring, &s.v));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[0] == BigInt::from(0) {
                prop_assert_eq!(w[1].clone(), BigInt::from(0));
            } else {
                prop_assert_eq!((w[1].clone() % w[0].clone() + w[0].clone()) % w[0].clone(), BigInt::from(0));
            }
        }
        for d in &diag {
            prop_assert!(*d >= BigInt::from(0));
        }
    }

    #[test]
    fn solving_recovers_planted_solutions(rows in int_matrix(4, 6), x in prop::collection::vec(-5i64..=5, 4), ring_pick in 0usize..4) {
        let ring = match ring_pick {
            0 => RingSpec::integers(),
            1 => RingSpec::integers_mod(12).unwrap(),
            2 => RingSpec::prime_field(5).unwrap(),
            _ => RingSpec::prime_product(vec![2, 3]).unwrap(),
        };
        let a = Matrix::from_int_rows(&ring, &rows);
        let planted: Vec<RingElement> = x.iter().take(a.cols).map(|&v| ring.from_i64(v)).collect();
        let b = a.mul_vec(&planted);
        let found = solve(&a, &b).expect("a planted solution exists");
        prop_assert_eq!(a.mul_vec(&found), b);
    }

    #[test]
    fn kernel_columns_annihilate(rows in int_matrix(4, 6), ring_pick in 0usize..4) {
        let ring = match ring_pick {
            0 => RingSpec::integers(),
            1 => RingSpec::integers_mod(8).unwrap(),
            2 => RingSpec::prime_field(3).unwrap(),
            _ => RingSpec::prime_product(vec![3, 5]).unwrap(),
        };
        let a = Matrix::from_int_rows(&ring, &rows);
        let k = kernel(&a);
        prop_assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn module_invariants_match_bruteforce_decomposition(rows in int_matrix(3, 4)) {
        let ring = RingSpec::integers_mod(4).unwrap();
        let rel = Matrix::from_int_rows(&ring, &rows);
        let m = FPModule::new(&ring, rel.rows, rel.clone());
        let expected = bruteforce_cyclic_decomposition(&m);
        match m.invariants() {
            ModuleInvariants::CyclicFactors { factors } => {
                let mut got: Vec<u64> = factors.iter().map(|f| f.try_into().unwrap()).collect();
                got.sort_unstable();
                prop_assert_eq!(got, expected);
            }
            other => prop_assert!(false, "unexpected invariants {:?}", other),
        }
    }

    #[test]
    fn tensor_cardinality_against_enumeration(rows in int_matrix(2, 4), cols in int_matrix(2, 4)) {
        let ring = RingSpec::integers_mod(4).unwrap();
        let a = Matrix::from_int_rows(&ring, &rows);
        let b = Matrix::from_int_rows(&ring, &cols);
        let m = FPModule::new(&ring, a.rows, a.clone());
        let n = FPModule::new(&ring, b.rows, b.clone());
        let t = tensor_product(&m, &n);
        prop_assert_eq!(t.cardinality().unwrap(), bruteforce_cardinality(&t));
    }
}

#[test]
fn kernel_spans_every_bruteforce_solution() {
    // Completeness of the kernel over finite rings: every enumerated
    // annihilated vector must be expressible in the kernel columns.
    for ring in [
        RingSpec::integers_mod(4).unwrap(),
        RingSpec::integers_mod(6).unwrap(),
        RingSpec::prime_field(2).unwrap(),
        RingSpec::prime_product(vec![2, 2]).unwrap(),
    ] {
        let a = Matrix::from_int_rows(&ring, &[vec![2, 1, 0], vec![0, 2, 2]]);
        let k = kernel(&a);
        let solver = LinearSolver::new(&k);
        for v in enumerate_vectors(&ring, 3) {
            let image = a.mul_vec(&v);
            if image.iter().all(|e| ring.is_zero(e)) {
                assert!(
                    solver.solve(&v).is_some(),
                    "kernel misses {v:?} over {ring}"
                );
            }
        }
    }
}

#[test]
fn hom_module_cardinalities_match_bruteforce() {
    let z4 = RingSpec::integers_mod(4).unwrap();
    let f2 = RingSpec::prime_field(2).unwrap();
    let cases: Vec<(RingSpec, Vec<Vec<i64>>, Vec<Vec<i64>>)> = vec![
        (z4.clone(), vec![vec![2]], vec![vec![0]]),
        (z4.clone(), vec![vec![2, 0], vec![0, 2]], vec![vec![2]]),
        (z4.clone(), vec![vec![2, 1], vec![0, 2]], vec![vec![2, 2]]),
        (z4, vec![vec![0, 2]], vec![vec![2, 0], vec![1, 2]]),
        (f2.clone(), vec![vec![0, 1], vec![0, 0]], vec![vec![1], vec![0]]),
        (f2, vec![vec![0]], vec![vec![0, 0]]),
    ];
    for (ring, mr, nr) in cases {
        let m_rel = Matrix::from_int_rows(&ring, &mr);
        let n_rel = Matrix::from_int_rows(&ring, &nr);
        let m = FPModule::new(&ring, m_rel.rows, m_rel.clone());
        let n = FPModule::new(&ring, n_rel.rows, n_rel.clone());
        let h = hom_module(&m, &n);
        assert_eq!(
            h.module().cardinality().unwrap(),
            hom_count_bruteforce(&m, &n),
            "hom({mr:?}, {nr:?}) over {ring}"
        );
    }
}

#[test]
fn tensor_of_cyclics_follows_gcd_rule() {
    let z = RingSpec::integers();
    for (a, b) in [(2u64, 4u64), (3, 4), (6, 4), (0, 5), (0, 0), (12, 18)] {
        let m = FPModule::cyclic(&z, a as i64);
        let n = FPModule::cyclic(&z, b as i64);
        let t = tensor_product(&m, &n);
        match tensor_cardinality_of_cyclics(&[a], &[b]) {
            Some(card) => assert_eq!(t.cardinality(), Some(card), "Z/{a} (x) Z/{b}"),
            None => assert_eq!(t.cardinality(), None, "Z/{a} (x) Z/{b} is infinite"),
        }
    }
}

#[test]
fn snf_of_frozen_examples() {
    let z = RingSpec::integers();
    let a = Matrix::from_int_rows(&z, &[vec![2, 4], vec![0, 6]]);
    assert_eq!(
        snf(&a).diagonal(),
        vec![BigInt::from(2), BigInt::from(6)]
    );
    let b = Matrix::from_int_rows(&z, &[vec![4, 0], vec![0, 6]]);
    assert_eq!(
        snf(&b).diagonal(),
        vec![BigInt::from(2), BigInt::from(12)]
    );
}
