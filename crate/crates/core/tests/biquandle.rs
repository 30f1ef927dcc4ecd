use vknotoid::biquandle::{BiquandleAxiom, FiniteBiquandle};
use vknotoid::data;
use vknotoid::ring::Modulus;

const ALEXANDER_Z5_PRINTED: [[usize; 10]; 5] = [
    [4, 1, 3, 5, 2, 4, 4, 4, 4, 4],
    [1, 3, 5, 2, 4, 3, 3, 3, 3, 3],
    [3, 5, 2, 4, 2, 2, 2, 2, 2, 2],
    [5, 2, 4, 1, 3, 1, 1, 1, 1, 1],
    [2, 4, 1, 3, 5, 5, 5, 5, 5, 5],
];

#[test]
fn alexander_matrix_differs_from_print_in_one_cell() {
    let x = FiniteBiquandle::alexander(Modulus::new(5).unwrap(), 2, 4).unwrap();
    let m = x.operation_matrix();
    let mut diffs = Vec::new();
    for (i, row) in ALEXANDER_Z5_PRINTED.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if m[i][j] != v {
                diffs.push((i + 1, j + 1, m[i][j], v));
            }
        }
    }
    assert_eq!(diffs, vec![(3, 5, 1, 2)]);
}

#[test]
fn alexander_formula_oracle() {
    // x ▷̲ y = 2x + 2y, x ▷̄ y = 4x on residues; label k is residue k mod 5
    let x = data::z5_alexander();
    for a in 0..5 {
        for b in 0..5 {
            let (ra, rb) = (a as i64 + 1, b as i64 + 1);
            assert_eq!((x.under(a, b) + 1) as i64 % 5, (2 * ra + 2 * rb) % 5);
            assert_eq!((x.over(a, b) + 1) as i64 % 5, (4 * ra) % 5);
        }
    }
}

#[test]
fn shipped_tables_match_affine_constructor() {
    let m3 = Modulus::new(3).unwrap();
    assert_eq!(data::z3_affine_t2_r1_c2(), FiniteBiquandle::affine(m3, 2, 1, 2).unwrap());
    assert_eq!(data::z3_affine_t2_r2_c1(), FiniteBiquandle::affine(m3, 2, 2, 1).unwrap());
    assert_eq!(data::z3_affine_t1_r1_c1(), FiniteBiquandle::affine(m3, 1, 1, 1).unwrap());
}

#[test]
fn example_tables_pass_axioms() {
    for x in [data::z5_alexander(), data::z3_affine_t2_r1_c2(), data::z3_affine_t2_r2_c1(), data::z3_affine_t1_r1_c1(), data::singleton()] {
        let r = x.verify_axioms();
        assert!(r.passed, "{:?}", r.violations);
    }
}

#[test]
fn every_single_entry_mutation_fails() {
    for x in [data::z5_alexander(), data::z3_affine_t2_r1_c2(), data::z3_affine_t2_r2_c1()] {
        let n = x.size();
        let m = x.operation_matrix();
        for row in 1..=n {
            for col in 1..=2 * n {
                for v in 1..=n {
                    if v == m[row - 1][col - 1] {
                        continue;
                    }
                    let y = x.with_entry(row, col, v).unwrap();
                    assert!(!y.verify_axioms().passed, "mutation ({row},{col})={v} passed");
                }
            }
        }
    }
}

#[test]
fn constant_tables_fail_invertibility() {
    let x = FiniteBiquandle::from_tables(vec![vec![0; 2]; 2], vec![vec![0; 2]; 2]).unwrap();
    let r = x.verify_axioms();
    assert!(!r.passed);
    assert!(r.violations.iter().any(|v| v.axiom == BiquandleAxiom::UnderColumn));
}

#[test]
fn parse_render_roundtrip() {
    let x = data::z5_alexander();
    assert_eq!(FiniteBiquandle::parse_operation_matrix(&x.render()).unwrap(), x);
    assert!(FiniteBiquandle::parse_operation_matrix("").is_err());
    assert!(FiniteBiquandle::parse_operation_matrix("1 2\n1 1").is_err());
}
