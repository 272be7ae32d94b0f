mod common;

use std::collections::VecDeque;

use common::{all_systems, e};
use proptest::prelude::*;
use unipat::{Error, RootSystem, RootType};

/// Reachability from `i` by repeatedly adding simple roots.
fn bfs_above(rs: &RootSystem, i: usize) -> Vec<bool> {
    let mut seen = vec![false; rs.len()];
    seen[i] = true;
    let mut queue = VecDeque::from([i]);
    while let Some(x) = queue.pop_front() {
        for &s in rs.simple_roots() {
            if let Some(y) = rs.root_sum(x, s) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

#[test]
fn leq_matches_simple_root_chains() {
    for rs in all_systems(8) {
        for i in 0..rs.len() {
            let reach = bfs_above(&rs, i);
            for (j, &above) in reach.iter().enumerate() {
                assert_eq!(rs.leq(i, j), above, "{} {i} {j}", rs.label());
            }
        }
    }
}

#[test]
fn sum_table_matches_coordinates() {
    for rs in all_systems(8) {
        for i in 0..rs.len() {
            for j in 0..rs.len() {
                let v: Vec<i32> = rs
                    .root(i)
                    .coords2x
                    .iter()
                    .zip(&rs.root(j).coords2x)
                    .map(|(a, b)| a + b)
                    .collect();
                assert_eq!(rs.root_sum(i, j), rs.index_of_coords2x(&v));
                assert_eq!(rs.root_sum(i, j), rs.root_sum(j, i));
            }
        }
    }
}

#[test]
fn root_counts() {
    let expected = |ty: RootType, n: usize| match ty {
        RootType::A => n * (n + 1) / 2,
        RootType::B | RootType::C => n * n,
        RootType::D => n * (n - 1),
        RootType::E6 => 36,
        RootType::E7 => 63,
        RootType::E8 => 120,
        RootType::F4 => 24,
        RootType::G2 => 6,
    };
    for rs in all_systems(8) {
        assert_eq!(
            rs.len(),
            expected(rs.root_type(), rs.rank()),
            "{}",
            rs.label()
        );
        assert_eq!(rs.simple_roots().len(), rs.rank());
        assert!(rs.simple_roots().iter().all(|&s| rs.height(s) == 1));
        let top = rs.highest_root();
        assert!((0..rs.len()).all(|i| rs.leq(i, top)));
    }
}

#[test]
fn ordering_is_by_height() {
    for rs in all_systems(8) {
        for i in 1..rs.len() {
            assert!(rs.height(i - 1) <= rs.height(i));
        }
        for i in 0..rs.len() {
            let c = &rs.root(i).coeffs;
            assert_eq!(rs.height(i), c.iter().sum::<u32>());
            assert_eq!(rs.index_of_coeffs(c), Some(i));
        }
    }
}

#[test]
fn hook_sizes() {
    for rs in all_systems(8) {
        for a in 0..rs.len() {
            let h = rs.hook(a);
            assert_eq!(h.len(), 1 + 2 * rs.decompositions(a).len());
            for &(x, y) in rs.decompositions(a) {
                assert!(x < y);
                assert_eq!(rs.root_sum(x, y), Some(a));
                assert_eq!(rs.hook_partner(a, x), Some(y));
                assert_eq!(rs.hook_partner(a, y), Some(x));
            }
        }
    }
}

#[test]
fn type_a_hooks() {
    for n in 1..=8 {
        let rs = RootSystem::new(RootType::A, n).unwrap();
        for i in 1..=n + 1 {
            for j in i + 1..=n + 1 {
                let a = e(&rs, &[(i, 1), (j, -1)]);
                let mut want = vec![a];
                for s in i + 1..j {
                    want.push(e(&rs, &[(i, 1), (s, -1)]));
                    want.push(e(&rs, &[(s, 1), (j, -1)]));
                }
                want.sort();
                assert_eq!(rs.hook(a).to_vec(), want);
            }
        }
    }
}

#[test]
fn type_b_hooks_of_long_first_row_roots() {
    for n in 2..=8 {
        let rs = RootSystem::new(RootType::B, n).unwrap();
        for i in 2..=n {
            let a = e(&rs, &[(1, 1), (i, 1)]);
            let mut want = vec![a, e(&rs, &[(1, 1)]), e(&rs, &[(i, 1)])];
            for s in 2..i {
                want.push(e(&rs, &[(1, 1), (s, -1)]));
                want.push(e(&rs, &[(s, 1), (i, 1)]));
            }
            for s in i + 1..=n {
                want.push(e(&rs, &[(1, 1), (s, 1)]));
                want.push(e(&rs, &[(1, 1), (s, -1)]));
                want.push(e(&rs, &[(i, 1), (s, -1)]));
                want.push(e(&rs, &[(i, 1), (s, 1)]));
            }
            want.sort();
            assert_eq!(rs.hook(a).to_vec(), want, "B{n} e1+e{i}");
        }
    }
}

#[test]
fn f4_numbering_follows_the_standard_table() {
    let rs = RootSystem::new(RootType::F4, 4).unwrap();
    let coeffs: [[u32; 4]; 24] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, 0],
        [0, 1, 1, 0],
        [0, 0, 1, 1],
        [1, 1, 1, 0],
        [0, 1, 2, 0],
        [0, 1, 1, 1],
        [1, 1, 2, 0],
        [1, 1, 1, 1],
        [0, 1, 2, 1],
        [1, 2, 2, 0],
        [1, 1, 2, 1],
        [0, 1, 2, 2],
        [1, 2, 2, 1],
        [1, 1, 2, 2],
        [1, 2, 3, 1],
        [1, 2, 2, 2],
        [1, 2, 3, 2],
        [1, 2, 4, 2],
        [1, 3, 4, 2],
        [2, 3, 4, 2],
    ];
    for (i, c) in coeffs.iter().enumerate() {
        assert_eq!(rs.root(i).coeffs, c.to_vec(), "alpha_{}", i + 1);
    }
    let by_coords = [
        (0, "e2-e3"),
        (2, "e4"),
        (3, "(e1-e2-e3-e4)/2"),
        (15, "e1-e2"),
        (19, "e1-e4"),
        (20, "e1"),
        (21, "e1+e4"),
        (23, "e1+e2"),
    ];
    for (i, s) in by_coords {
        assert_eq!(rs.parse_root(s).unwrap(), i, "{s}");
        assert_eq!(rs.format_root(i), s);
    }
    assert_eq!(rs.parse_root("(1,-1,-1,-1)/2").unwrap(), 3);
    assert_eq!(rs.parse_root("(1,1,1,1)/2").unwrap(), 18);
}

#[test]
fn e8_landmarks() {
    let rs = RootSystem::new(RootType::E8, 8).unwrap();
    assert_eq!(rs.height(rs.highest_root()), 29);
    assert_eq!(rs.decompositions(rs.highest_root()).len(), 28);
    assert_eq!(rs.root(68).coeffs, [1, 2, 2, 3, 2, 1, 0, 0]);
    assert_eq!(rs.format_root(68), "(e1+e2+e3+e4+e5-e6-e7+e8)/2");
    assert_eq!(rs.height(68), 11);
    // α_115 sits at height 24 with a hook of 47 roots.
    assert_eq!(rs.height(114), 24);
    assert_eq!(rs.hook(114).len(), 47);
    assert_eq!(rs.parse_root("alpha115").unwrap(), 114);
    assert_eq!(rs.parse_root(&rs.format_root(114)).unwrap(), 114);
    let per_height: Vec<usize> = (1..=29)
        .map(|h| (0..rs.len()).filter(|&i| rs.height(i) == h).count())
        .collect();
    assert_eq!(
        per_height,
        [8, 7, 7, 7, 7, 7, 7, 6, 6, 6, 6, 5, 5, 4, 4, 4, 4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1]
    );
}

#[test]
fn prime_hypotheses() {
    use unipat::PrimeHypothesis::*;
    assert_eq!(RootType::A.prime_hypothesis(), Any);
    assert_eq!(RootType::E8.prime_hypothesis(), Any);
    assert_eq!(RootType::B.prime_hypothesis(), GreaterThan(2));
    assert_eq!(RootType::F4.prime_hypothesis(), GreaterThan(2));
    assert_eq!(RootType::G2.prime_hypothesis(), GreaterThan(3));
}

#[test]
fn rejects_bad_inputs() {
    assert!(matches!(
        RootSystem::new(RootType::D, 3),
        Err(Error::InadmissibleRank { .. })
    ));
    assert!(matches!(
        RootSystem::new(RootType::E8, 7),
        Err(Error::InadmissibleRank { .. })
    ));
    assert!(matches!(
        "H3".parse::<RootType>(),
        Err(Error::UnknownType(_))
    ));
    let rs = RootSystem::new(RootType::A, 3).unwrap();
    assert!(matches!(rs.parse_root("e1+e2"), Err(Error::UnknownRoot(_))));
    assert!(matches!(rs.parse_root("7"), Err(Error::UnknownRoot(_))));
}

proptest! {
    #[test]
    fn format_parse_roundtrip(ty_idx in 0usize..9, rank in 1usize..=8, pick in 0usize..1000) {
        let ty = RootType::ALL[ty_idx];
        let rank = ty.fixed_rank().unwrap_or(rank.max(ty.min_rank()));
        let rs = RootSystem::new(ty, rank).unwrap();
        let i = pick % rs.len();
        prop_assert_eq!(rs.parse_root(&rs.format_root(i)).unwrap(), i);
        prop_assert_eq!(rs.parse_root(&(i + 1).to_string()).unwrap(), i);
    }

    #[test]
    fn leq_is_a_partial_order(ty_idx in 0usize..9, rank in 1usize..=8, a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let ty = RootType::ALL[ty_idx];
        let rank = ty.fixed_rank().unwrap_or(rank.max(ty.min_rank()));
        let rs = RootSystem::new(ty, rank).unwrap();
        let (a, b, c) = (a % rs.len(), b % rs.len(), c % rs.len());
        prop_assert!(rs.leq(a, a));
        if rs.leq(a, b) && rs.leq(b, a) {
            prop_assert_eq!(a, b);
        }
        if rs.leq(a, b) && rs.leq(b, c) {
            prop_assert!(rs.leq(a, c));
        }
        prop_assert_eq!(rs.up_set(a).contains(b), rs.leq(a, b));
        prop_assert_eq!(rs.down_set(a).contains(b), rs.leq(b, a));
    }
}

#[test]
fn exponents_and_coxeter_numbers() {
    for rs in all_systems(8) {
        let e = rs.exponents();
        let h = rs.coxeter_number();
        assert_eq!(e.len(), rs.rank(), "{}", rs.label());
        assert_eq!(e.iter().sum::<u32>() as usize, rs.len());
        assert_eq!(e[0], 1);
        assert_eq!(*e.last().unwrap(), h - 1);
        assert_eq!(h as usize * rs.rank(), 2 * rs.len());
    }
    let e8 = RootSystem::new(RootType::E8, 8).unwrap();
    assert_eq!(e8.exponents(), [1, 7, 11, 13, 17, 19, 23, 29]);
    let f4 = RootSystem::new(RootType::F4, 4).unwrap();
    assert_eq!(f4.exponents(), [1, 5, 7, 11]);
}
