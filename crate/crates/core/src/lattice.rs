//! Integer lattices: Hermite normal form, membership, kernels and ranks.

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result has no zero rows, strictly increasing pivot columns, positive pivots
/// and entries above each pivot reduced into `[0, pivot)`. It is a canonical basis:
/// two families span the same lattice iff their forms are equal.
pub fn hnf(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let r = echelon(&mut m, ncols);
    m.truncate(r);
    m.into_iter().map(|row| row.into_iter().map(|x| x as i64).collect()).collect()
}

/// Brings `m` to reduced echelon form in the first `ncols` columns with unimodular
/// row operations. Returns the number of pivot rows (at the top).
fn echelon(m: &mut [Vec<i128>], ncols: usize) -> usize {
    let nrows = m.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        while let Some(p) = (r..nrows).filter(|&i| m[i][c] != 0).min_by_key(|&i| m[i][c].abs()) {
            m.swap(p, r);
            let mut done = true;
            for i in r + 1..nrows {
                if m[i][c] != 0 {
                    let f = m[i][c] / m[r][c];
                    let (top, rest) = m.split_at_mut(i);
                    for (x, y) in rest[0].iter_mut().zip(&top[r]) {
                        *x -= f * y;
                    }
                    if m[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            for x in m[r].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let f = m[i][c].div_euclid(m[r][c]);
            if f != 0 {
                let (top, rest) = m.split_at_mut(r);
                for (x, y) in top[i].iter_mut().zip(&rest[0]) {
                    *x -= f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Pivot column of each row of a Hermite normal form.
fn pivots(basis: &[Vec<i64>]) -> Vec<usize> {
    basis.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect()
}

/// Membership of `v` in the lattice with Hermite basis `basis`.
pub fn hnf_contains(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let mut w: Vec<i128> = v.iter().map(|&x| i128::from(x)).collect();
    for (row, p) in basis.iter().zip(pivots(basis)) {
        let piv = i128::from(row[p]);
        if w[p] % piv != 0 {
            return false;
        }
        let f = w[p] / piv;
        for (x, &y) in w.iter_mut().zip(row) {
            *x -= f * i128::from(y);
        }
    }
    w.iter().all(|&x| x == 0)
}

/// Integer basis of the left kernel `{x : x · m = 0}` of a `k × r` matrix.
pub fn left_kernel(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = m.len();
    if k == 0 {
        return Vec::new();
    }
    let r = m[0].len();
    let mut aug: Vec<Vec<i128>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut a: Vec<i128> = row.iter().map(|&x| i128::from(x)).collect();
            a.extend((0..k).map(|j| i128::from(i == j)));
            a
        })
        .collect();
    let rank = echelon(&mut aug, r);
    let kernel: Vec<Vec<i64>> = aug[rank..]
        .iter()
        .map(|row| row[r..].iter().map(|&x| x as i64).collect())
        .collect();
    hnf(&kernel)
}

/// Integer normals of the linear span of `vs`: a basis of `{n : n · v = 0 for all v}`.
pub fn span_normals(vs: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    // columns of the transpose are the vectors
    let t: Vec<Vec<i64>> = (0..dim).map(|i| vs.iter().map(|v| v[i]).collect()).collect();
    if vs.is_empty() {
        return (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
    }
    left_kernel(&t)
}

pub fn rank(vs: &[Vec<i64>]) -> usize {
    hnf(vs).len()
}

/// Basis of the intersection of the lattice `basis` with the subspace cut out by `normals`.
pub fn intersect_with_subspace(basis: &[Vec<i64>], normals: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if normals.is_empty() {
        return hnf(basis);
    }
    let m: Vec<Vec<i64>> = basis
        .iter()
        .map(|b| normals.iter().map(|n| dot(b, n)).collect())
        .collect();
    let ker = left_kernel(&m);
    let dim = basis.first().map_or(0, |b| b.len());
    let vecs: Vec<Vec<i64>> = ker
        .iter()
        .map(|x| {
            (0..dim)
                .map(|j| x.iter().zip(basis).map(|(c, b)| c * b[j]).sum())
                .collect()
        })
        .collect();
    hnf(&vecs)
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hnf_small() {
        let b = hnf(&[vec![2, 4], vec![1, 3]]);
        assert_eq!(b, vec![vec![1, 1], vec![0, 2]]);
        assert!(hnf_contains(&b, &[3, 7]));
        assert!(!hnf_contains(&b, &[0, 1]));
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6]]), 1);
    }

    #[test]
    fn kernel_and_normals() {
        let n = span_normals(&[vec![1, 0, 1], vec![0, 1, 1]], 3);
        assert_eq!(n.len(), 1);
        assert_eq!(dot(&n[0], &[1, 0, 1]), 0);
        assert_eq!(dot(&n[0], &[0, 1, 1]), 0);
        let meet = intersect_with_subspace(&[vec![1, 0], vec![0, 2]], &[vec![1, -1]]);
        assert_eq!(meet, vec![vec![2, 2]]);
    }

    proptest! {
        #[test]
        fn hnf_is_canonical(a in prop::collection::vec(prop::collection::vec(-6i64..6, 3), 1..5),
                            u in prop::collection::vec(-3i64..3, 4)) {
            let b = hnf(&a);
            // generators lie in the lattice, and so do integer combinations
            for row in &a {
                prop_assert!(hnf_contains(&b, row));
            }
            let mut comb = vec![0i64; 3];
            for (row, c) in a.iter().zip(&u) {
                for j in 0..3 { comb[j] += c * row[j]; }
            }
            prop_assert!(hnf_contains(&b, &comb));
            // adding a lattice element does not change the form
            let mut a2 = a.clone();
            a2.push(comb);
            prop_assert_eq!(hnf(&a2), b.clone());
            // basis rows are in the span of the generators
            prop_assert_eq!(hnf(&b), b);
        }
    }
}
