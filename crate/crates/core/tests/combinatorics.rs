//! Partition combinatorics against brute-force definitions.

use nilorbit::complex_orbits::{enumerate_nil_p, enumerate_orbits, is_nil_p};
use nilorbit::diagrams::{
    is_type_partition, partitions_of, transpose, type_collapse, CollapseKind, EpsSign, Partition,
};

const EPS: [EpsSign; 2] = [EpsSign::Plus, EpsSign::Minus];

fn rows_ok(rows: &Partition, kind: CollapseKind) -> bool {
    let bad = if kind == CollapseKind::C { 1 } else { 0 };
    rows.parts()
        .iter()
        .filter(|&&r| r % 2 == bad)
        .all(|&r| rows.parts().iter().filter(|&&x| x == r).count() % 2 == 0)
}

fn kinds_of_size(n: usize) -> Vec<CollapseKind> {
    if n % 2 == 1 {
        vec![CollapseKind::B]
    } else {
        vec![CollapseKind::C, CollapseKind::D]
    }
}

#[test]
fn collapse_is_the_unique_largest_dominated_partition() {
    for n in 0..=12 {
        let all = partitions_of(n);
        for kind in kinds_of_size(n) {
            let family: Vec<&Partition> = all.iter().filter(|p| rows_ok(p, kind)).collect();
            for rows in &all {
                let below: Vec<&Partition> = family.iter().copied().filter(|p| rows.dominates(p)).collect();
                let maxima: Vec<&Partition> = below
                    .iter()
                    .copied()
                    .filter(|p| !below.iter().any(|q| q != p && q.dominates(p)))
                    .collect();
                assert_eq!(maxima.len(), 1, "{rows} {kind:?}");
                assert_eq!(&type_collapse(rows, kind).unwrap(), maxima[0], "{rows} {kind:?}");
            }
        }
    }
}

#[test]
fn collapse_rejects_wrong_parity() {
    let p = Partition::new(vec![2, 1]).unwrap();
    assert!(type_collapse(&p, CollapseKind::C).is_err());
    assert!(type_collapse(&p, CollapseKind::D).is_err());
    let q = Partition::new(vec![3, 1, 1, 1]).unwrap();
    assert_eq!(type_collapse(&q, CollapseKind::C).unwrap().parts(), &[2, 2, 1, 1]);
}

#[test]
fn type_condition_matches_row_count() {
    for n in 0..=14 {
        for cols in partitions_of(n) {
            let rows = transpose(&cols);
            for eps in EPS {
                let bad = if eps == EpsSign::Plus { 0 } else { 1 };
                let expected = rows
                    .parts()
                    .iter()
                    .filter(|&&r| r % 2 == bad)
                    .all(|&r| rows.parts().iter().filter(|&&x| x == r).count() % 2 == 0);
                assert_eq!(is_type_partition(&cols, eps), expected, "{cols} eps {eps}");
            }
        }
    }
}

#[test]
fn transpose_is_an_involution() {
    for n in 0..=14 {
        for p in partitions_of(n) {
            let t = transpose(&p);
            assert_eq!(t.size(), n);
            assert_eq!(transpose(&t), p);
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    // nilpotent orbits of sp(2n) and so(m)
    let sp: Vec<usize> = (1..=5).map(|k| enumerate_orbits(EpsSign::Minus, 2 * k).len()).collect();
    assert_eq!(sp, [2, 4, 8, 14, 24]);
    let so_odd: Vec<usize> = (1..=5).map(|k| enumerate_orbits(EpsSign::Plus, 2 * k + 1).len()).collect();
    assert_eq!(so_odd, [2, 4, 7, 13, 21]);
}

#[test]
fn preferred_orbits_match_their_filter() {
    for n in 0..=12 {
        for eps in EPS {
            for parity in [0, 1] {
                let listed = enumerate_nil_p(eps, n, parity);
                let filtered: Vec<_> = enumerate_orbits(eps, n)
                    .into_iter()
                    .filter(|o| is_nil_p(o, parity))
                    .collect();
                assert_eq!(listed, filtered);
                for o in &listed {
                    let c = o.columns.parts();
                    assert!(c.iter().all(|x| x % 2 == parity as usize));
                }
            }
        }
    }
}
