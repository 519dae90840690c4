use num_bigint::BigInt;
use num_integer::Integer;
use operad_core::mosaic::enumerate_cells;
use operad_core::topology::{
    betti_mod2, h1, h1_with_tree, pi1_presentation, rank_mod2, smith_normal_form, spanning_tree,
    BitRow, IntegerMatrix, TreeChoice,
};
use proptest::prelude::*;

fn det(m: &[Vec<i128>]) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    (0..k)
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as ratios of successive gcds of k×k minors.
fn determinantal_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut divisors = vec![1i128];
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| (w[1] / w[0]) as i64).collect()
}

fn dense(max_rows: usize, max_cols: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-range..=range, c), r)
    })
}

proptest! {
    #[test]
    fn smith_form_matches_determinantal_divisors(m in dense(4, 4, 9)) {
        let snf = smith_normal_form(&IntegerMatrix::from_dense(m.clone()));
        prop_assert_eq!(snf.invariant_factors, determinantal_factors(&m));
    }

    #[test]
    fn smith_form_of_sparse_matrices(m in dense(4, 5, 2)) {
        let snf = smith_normal_form(&IntegerMatrix::from_dense(m.clone()));
        prop_assert_eq!(snf.invariant_factors, determinantal_factors(&m));
    }

    #[test]
    fn invariant_factors_divide_and_agree_with_bigint(m in dense(7, 7, 20)) {
        let snf = smith_normal_form(&IntegerMatrix::from_dense(m.clone()));
        for w in snf.invariant_factors.windows(2) {
            prop_assert!(w[0] > 0 && w[1] % w[0] == 0);
        }
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let big_snf = smith_normal_form(&IntegerMatrix::from_dense(big));
        let as_big: Vec<BigInt> = snf.invariant_factors.iter().map(|&v| BigInt::from(v)).collect();
        prop_assert_eq!(big_snf.invariant_factors, as_big);
        prop_assert_eq!(big_snf.rank, snf.rank);
    }

    #[test]
    fn packed_rank_matches_naive_elimination(bits in prop::collection::vec(prop::collection::vec(any::<bool>(), 70), 1..40)) {
        let cols = 70;
        let rows = bits.iter().map(|row| {
            let mut r = BitRow::zeros(cols);
            for (j, &b) in row.iter().enumerate() {
                if b {
                    r.flip(j);
                }
            }
            r
        });
        let mut m = bits.clone();
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| m[r][c]) {
                m.swap(rank, p);
                let pivot = m[rank].clone();
                for (r, row) in m.iter_mut().enumerate() {
                    if r != rank && row[c] {
                        row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
                    }
                }
                rank += 1;
            }
        }
        prop_assert_eq!(rank_mod2(rows, cols), rank);
    }
}

#[test]
fn rank_plus_nullity() {
    let m = IntegerMatrix::from_dense(vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.invariant_factors, determinantal_factors(&m.to_dense()));
    let z = IntegerMatrix::from_dense(vec![vec![1i64, 2, 3], vec![2, 4, 6]]);
    let s = smith_normal_form(&z);
    assert_eq!(s.rank + 2, z.cols());
}

#[test]
fn mod2_betti_satisfy_duality_and_euler() {
    for n in 4..=7 {
        let c = enumerate_cells(n).unwrap();
        let b = betti_mod2(&c).unwrap();
        assert_eq!(b[0], 1, "n={n}");
        let top = c.top_dim();
        for i in 0..=top {
            assert_eq!(b[i], b[top - i], "n={n} Poincaré duality mod 2");
        }
        let alt: i64 = b
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        assert_eq!(alt, c.euler_characteristic());
    }
}

#[test]
fn spanning_trees_span() {
    for n in 4..=6 {
        let c = enumerate_cells(n).unwrap();
        for choice in [
            TreeChoice::Bfs,
            TreeChoice::Random(1),
            TreeChoice::Random(99),
        ] {
            let tree = spanning_tree(&c, choice).unwrap();
            let v = c.cells(0).len();
            assert_eq!(tree.iter().filter(|&&t| t).count(), v - 1);
            // union-find over tree edges
            let mut parent: Vec<usize> = (0..v).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            for (e, &in_tree) in tree.iter().enumerate() {
                if in_tree {
                    let (a, b) = c.edge_endpoints(e);
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    assert_ne!(ra, rb, "cycle in tree");
                    parent[ra] = rb;
                }
            }
        }
    }
}

#[test]
fn presentation_shape() {
    for n in 4..=6 {
        let c = enumerate_cells(n).unwrap();
        let p = pi1_presentation(&c, TreeChoice::Bfs).unwrap();
        let counts = c.counts();
        assert_eq!(p.generators, counts[1] - counts[0] + 1);
        let two_cells = counts.get(2).copied().unwrap_or(0);
        assert_eq!(p.relations.len(), two_cells);
        assert_eq!(p.relation_matrix.rows(), two_cells);
        for (r, word) in p.relations.iter().enumerate() {
            let mut sums = vec![0i64; p.generators];
            for &l in word {
                sums[l.unsigned_abs() as usize - 1] += l.signum();
            }
            for (g, &s) in sums.iter().enumerate() {
                assert_eq!(p.relation_matrix.get(r, g), s);
            }
        }
    }
}

#[test]
fn h1_is_independent_of_the_spanning_tree() {
    for n in 4..=6 {
        let c = enumerate_cells(n).unwrap();
        let base = h1(&c).unwrap();
        for seed in [7, 2024, 31337] {
            assert_eq!(
                h1_with_tree(&c, TreeChoice::Random(seed)).unwrap(),
                base,
                "n={n} seed={seed}"
            );
        }
    }
}

#[test]
fn universal_coefficients_link_h1_and_mod2() {
    for n in 4..=6 {
        let c = enumerate_cells(n).unwrap();
        let g = h1(&c).unwrap();
        let b1 = betti_mod2(&c).unwrap()[1];
        let even = g.torsion.iter().filter(|d| *d % 2 == 0).count();
        assert_eq!(b1, g.rank + even, "n={n}");
    }
}

#[test]
fn small_cases() {
    let circle = enumerate_cells(4).unwrap();
    assert_eq!(h1(&circle).unwrap().to_string(), "Z^1");
    let surface = enumerate_cells(5).unwrap();
    assert_eq!(h1(&surface).unwrap().to_string(), "Z^4 + Z/2");
    let point = enumerate_cells(3).unwrap();
    assert_eq!(betti_mod2(&point).unwrap(), vec![1]);
    assert_eq!(h1(&point).unwrap().to_string(), "0");
}
