//! Test-only oracles. Nothing here calls the library's elimination,
//! polynomial or walk-counting code, so results can be compared against it.

#![allow(dead_code, clippy::needless_range_loop)]

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use windmill::{Digraph, Matrix, Rational};

pub type Grid = Vec<Vec<Rational>>;

pub fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn to_grid(a: &Matrix) -> Grid {
    (0..a.rows()).map(|i| a.row(i).to_vec()).collect()
}

pub fn from_grid(g: Grid) -> Matrix {
    Matrix::from_rows(g).unwrap()
}

pub fn grid_mul(a: &Grid, b: &Grid) -> Grid {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn grid_pow(a: &Grid, e: usize) -> Grid {
    let n = a.len();
    let mut out: Grid = (0..n)
        .map(|i| (0..n).map(|j| if i == j { r(1) } else { r(0) }).collect())
        .collect();
    for _ in 0..e {
        out = grid_mul(&out, a);
    }
    out
}

/// Reduced row echelon form over Q; returns the pivot columns.
pub fn rref(a: &mut Grid) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..cols {
                    let delta = &f * &a[row][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

pub fn gauss_rank(a: &Grid) -> usize {
    rref(&mut a.clone()).len()
}

pub fn gauss_inverse(a: &Grid) -> Option<Grid> {
    let n = a.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut aug: Grid = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..n).map(|j| if i == j { r(1) } else { r(0) }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the null space of `a` as column vectors.
pub fn null_space(a: &Grid) -> Vec<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut red = a.clone();
    let pivots = rref(&mut red);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![r(0); cols];
            v[free] = r(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -red[row][free].clone();
            }
            v
        })
        .collect()
}

/// Index from rank stabilisation, computed with plain Gaussian elimination.
pub fn oracle_index(a: &Grid) -> usize {
    let n = a.len();
    let mut k = 0;
    let mut power = grid_pow(a, 0);
    let mut rank = gauss_rank(&power);
    loop {
        let next = grid_mul(&power, a);
        let next_rank = gauss_rank(&next);
        if next_rank == rank {
            return k;
        }
        power = next;
        rank = next_rank;
        k += 1;
        assert!(k <= n);
    }
}

/// Drazin inverse through the core-nilpotent decomposition: with `k` the
/// index, `U = [basis of range(A^k) | basis of null(A^k)]` block-diagonalises
/// `A` as `diag(C, N)`, and `A^D = U diag(C⁻¹, 0) U⁻¹`.
pub fn core_nilpotent_drazin(a: &Grid) -> (Grid, usize) {
    let n = a.len();
    let k = oracle_index(a);
    let ak = grid_pow(a, k);
    let mut red = ak.clone();
    let range_cols = rref(&mut red);
    let mut basis: Vec<Vec<Rational>> = range_cols
        .iter()
        .map(|&c| (0..n).map(|i| ak[i][c].clone()).collect())
        .collect();
    let core_dim = basis.len();
    basis.extend(null_space(&ak));
    assert_eq!(
        basis.len(),
        n,
        "range and null space of A^k are complementary"
    );
    let u: Grid = (0..n)
        .map(|i| basis.iter().map(|v| v[i].clone()).collect())
        .collect();
    let u_inv = gauss_inverse(&u).expect("U is invertible");
    let block = grid_mul(&grid_mul(&u_inv, a), &u);
    let core: Grid = block[..core_dim]
        .iter()
        .map(|row| row[..core_dim].to_vec())
        .collect();
    let core_inv = gauss_inverse(&core).unwrap_or_default();
    let mut padded = vec![vec![r(0); n]; n];
    for i in 0..core_dim {
        for j in 0..core_dim {
            padded[i][j] = core_inv[i][j].clone();
        }
    }
    (grid_mul(&grid_mul(&u, &padded), &u_inv), k)
}

/// Counts walks by listing every one of them with plain DFS.
pub fn dfs_count(g: &Digraph, from: usize, to: usize, len: usize) -> u64 {
    if len == 0 {
        return u64::from(from == to);
    }
    g.edges()
        .filter(|&(a, _)| a == from)
        .map(|(_, b)| dfs_count(g, b, to, len - 1))
        .sum()
}

/// All walks of length `len` from `from` to `to`, by plain DFS.
pub fn dfs_walks(g: &Digraph, from: usize, to: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(g: &Digraph, path: &mut Vec<usize>, to: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        let here = *path.last().unwrap();
        if left == 0 {
            if here == to {
                out.push(path.clone());
            }
            return;
        }
        let next: Vec<usize> = g
            .edges()
            .filter(|&(a, _)| a == here)
            .map(|(_, b)| b)
            .collect();
        for b in next {
            path.push(b);
            go(g, path, to, left - 1, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![from], to, len, &mut out);
    out
}

/// Random small integer matrix of a randomly chosen kind: dense, low rank, or
/// `S·diag(C, N)·S⁻¹` with unimodular `S`, invertible `C` and strictly upper
/// triangular `N`. The last kind comes with its exact Drazin inverse.
pub fn random_matrix(rng: &mut impl Rng) -> (Matrix, Option<Matrix>) {
    let n = rng.gen_range(4..=6);
    match rng.gen_range(0..3) {
        0 => (random_integer(rng, n, n, 3), None),
        1 => {
            let k = rng.gen_range(0..n);
            let b = random_integer(rng, n, k, 2);
            let c = random_integer(rng, k, n, 2);
            let prod = if k == 0 {
                Matrix::zeros(n, n)
            } else {
                b.mul(&c).unwrap()
            };
            (prod, None)
        }
        _ => {
            let core = rng.gen_range(0..n);
            let c = loop {
                let c = random_integer(rng, core, core, 3);
                if gauss_rank(&to_grid(&c)) == core {
                    break c;
                }
            };
            let mut block = vec![vec![r(0); n]; n];
            let mut drazin_block = vec![vec![r(0); n]; n];
            let c_inv = gauss_inverse(&to_grid(&c)).unwrap_or_default();
            for i in 0..core {
                for j in 0..core {
                    block[i][j] = c.get(i, j).clone();
                    drazin_block[i][j] = c_inv[i][j].clone();
                }
            }
            for i in core..n {
                for j in i + 1..n {
                    block[i][j] = r(rng.gen_range(-2..=2));
                }
            }
            let s = random_unimodular(rng, n);
            let s_inv = gauss_inverse(&to_grid(&s)).unwrap();
            let a = grid_mul(&grid_mul(&to_grid(&s), &block), &s_inv);
            let ad = grid_mul(&grid_mul(&to_grid(&s), &drazin_block), &s_inv);
            (from_grid(a), Some(from_grid(ad)))
        }
    }
}

pub fn random_integer(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| r(rng.gen_range(-bound..=bound)))
}

/// Product of a few random elementary row operations; determinant 1.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut s = Matrix::identity(n);
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let f = rng.gen_range(-2..=2);
        let e = Matrix::from_fn(n, n, |a, b| {
            if a == b {
                r(1)
            } else if a == i && b == j {
                r(f)
            } else {
                r(0)
            }
        });
        s = e.mul(&s).unwrap();
    }
    s
}

/// Random permutation of `0..n`.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn is_one(x: &Rational) -> bool {
    x.is_one()
}
