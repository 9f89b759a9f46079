//! Independent reconstruction of the multiplication tables.
//!
//! The library grows each table through a prioritized rule dispatcher. These
//! tests rebuild the same tables from scratch along two different routes and
//! demand exact agreement:
//!
//! * the quaternion table from the Hamilton relations alone,
//! * every doubled table from the identities a doubling must satisfy, written
//!   as direct formulas over the smaller table rather than dispatch cases,
//! * the seven quaternionic triples inside the octonions.

use hurwitz::table::{build_table, Sign, SignedBasisRef, StructureTable};

fn plus(index: usize) -> SignedBasisRef {
    SignedBasisRef::new(Sign::Plus, index)
}

fn minus(index: usize) -> SignedBasisRef {
    SignedBasisRef::new(Sign::Minus, index)
}

fn shifted(entry: SignedBasisRef, m: usize) -> SignedBasisRef {
    SignedBasisRef::new(entry.sign, entry.index + m)
}

/// Product `e_j · e_k` in the doubling of `lower`, computed from the laws the
/// doubled algebra must obey. Writing g for the new generator `e_m` and p, q
/// for indices 1..m:
///
/// * `e_{p+m} = e_p·g` by construction, and g anticommutes with every
///   imaginary unit, so `g·e_p = −e_{p+m}`,
/// * every imaginary unit squares to −1,
/// * braiding: `p·(qg) = −(pq)·g` and `(qg)·p = (pq)·g` for p ≠ q,
/// * cancellation: `p·(pg) = −g`, `(pg)·p = g`, `g·(pg) = p`, `(pg)·g = −p`,
/// * two doubled units multiply back down: `(pg)·(qg) = q·p` for p ≠ q.
fn doubled_product(lower: &StructureTable, j: usize, k: usize) -> SignedBasisRef {
    let m = lower.dim();
    if j == 0 {
        return plus(k);
    }
    if k == 0 {
        return plus(j);
    }
    if j == k {
        return minus(0);
    }
    match (j < m, k < m) {
        (true, true) => lower.entry(j, k),
        (true, false) => {
            let q = k - m;
            if q == 0 {
                plus(j + m)
            } else if q == j {
                minus(m)
            } else {
                shifted(lower.entry(j, q).negated(), m)
            }
        }
        (false, true) => {
            let p = j - m;
            if p == 0 {
                minus(k + m)
            } else if p == k {
                plus(m)
            } else {
                shifted(lower.entry(k, p), m)
            }
        }
        (false, false) => {
            let (p, q) = (j - m, k - m);
            if p == 0 {
                plus(q)
            } else if q == 0 {
                minus(p)
            } else {
                lower.entry(q, p)
            }
        }
    }
}

#[test]
fn doublings_match_the_rule_built_tables() {
    for dim in [2usize, 4, 8, 16] {
        let lower = build_table(dim / 2).unwrap();
        let built = build_table(dim).unwrap();
        for j in 0..dim {
            for k in 0..dim {
                assert_eq!(
                    built.entry(j, k),
                    doubled_product(&lower, j, k),
                    "dim {dim} entry ({j}, {k}) diverges from the doubling laws"
                );
            }
        }
    }
}

#[test]
fn quaternions_follow_from_the_hamilton_relations() {
    // i² = j² = k² = ijk = −1 pins the whole table: ij = k, jk = i, ki = j,
    // reversed products negate, the unit is transparent.
    let mut expected = vec![vec![plus(0); 4]; 4];
    #[allow(clippy::needless_range_loop)]
    for k in 1..4 {
        expected[0][k] = plus(k);
        expected[k][0] = plus(k);
        expected[k][k] = minus(0);
    }
    for (a, b, c) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        expected[a][b] = plus(c);
        expected[b][a] = minus(c);
    }

    let built = build_table(4).unwrap();
    for (j, row) in expected.iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            assert_eq!(built.entry(j, k), *cell, "entry ({j}, {k})");
        }
    }
}

#[test]
fn octonion_imaginary_units_close_into_seven_quaternion_triples() {
    let t = build_table(8).unwrap();
    let mut triples = std::collections::BTreeSet::new();
    for a in 1..8 {
        for b in 1..8 {
            if a == b {
                continue;
            }
            let ab = t.entry(a, b);
            let c = ab.index;
            assert!(
                c != 0 && c != a && c != b,
                "product of distinct units is a third unit"
            );

            // each pair generates a copy of the quaternions: with
            // x = sign·e_c chosen so that e_a·e_b = x, the cycle closes as
            // e_b·x = e_a and x·e_a = e_b
            let bc = t.entry(b, c);
            assert_eq!(
                bc.sign.times(ab.sign),
                Sign::Plus,
                "e_b·(e_a e_b) = e_a at ({a}, {b})"
            );
            assert_eq!(bc.index, a);
            let ca = t.entry(c, a);
            assert_eq!(
                ca.sign.times(ab.sign),
                Sign::Plus,
                "(e_a e_b)·e_a = e_b at ({a}, {b})"
            );
            assert_eq!(ca.index, b);

            let mut triple = [a, b, c];
            triple.sort();
            triples.insert(triple);
        }
    }
    assert_eq!(
        triples.len(),
        7,
        "the imaginary units fall into exactly seven triples"
    );
}
