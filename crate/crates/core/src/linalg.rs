//! Exact rank of sparse matrices over a prime field.

/// Sparse column: `(row, coefficient)` pairs sorted by row, coefficients in `[1, p)`.
pub type SparseColumn = Vec<(usize, u64)>;

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Reduces a signed coefficient into `[0, p)`.
pub(crate) fn reduce_signed(c: i64, p: u64) -> u64 {
    let r = c.rem_euclid(p as i64);
    r as u64
}

/// `a - factor * b` over F_p on sorted sparse vectors.
fn axpy(a: &[(usize, u64)], factor: u64, b: &[(usize, u64)], p: u64) -> SparseColumn {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = (p - mul_mod(factor, b[j].1, p)) % p;
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = (a[i].1 + p - mul_mod(factor, b[j].1, p)) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of the matrix whose columns are given, by column reduction on the
/// largest row index (the pivot), over F_p with `p` prime.
pub fn rank_mod_p(columns: Vec<SparseColumn>, p: u64) -> usize {
    debug_assert!(p >= 2);
    let mut pivots: std::collections::HashMap<usize, SparseColumn> =
        std::collections::HashMap::new();
    let mut rank = 0;
    for mut col in columns {
        col.retain(|&(_, c)| c % p != 0);
        for e in col.iter_mut() {
            e.1 %= p;
        }
        while let Some(&(low, c)) = col.last() {
            match pivots.get(&low) {
                Some(piv) => {
                    let (_, pc) = *piv.last().unwrap();
                    let factor = mul_mod(c, inv_mod(pc, p), p);
                    col = axpy(&col, factor, piv, p);
                }
                None => {
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_rank(rows: &[Vec<i64>], p: u64) -> usize {
        let mut m: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| reduce_signed(c, p)).collect())
            .collect();
        let (nr, nc) = (m.len(), m.first().map_or(0, |r| r.len()));
        let mut rank = 0;
        for c in 0..nc {
            if let Some(r) = (rank..nr).find(|&r| m[r][c] != 0) {
                m.swap(rank, r);
                let inv = inv_mod(m[rank][c], p);
                let pivot = m[rank].clone();
                for (rr, row) in m.iter_mut().enumerate() {
                    if rr != rank && row[c] != 0 {
                        let f = mul_mod(row[c], inv, p);
                        for (x, &y) in row.iter_mut().zip(&pivot) {
                            *x = (*x + p - mul_mod(f, y, p)) % p;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn columns_of(rows: &[Vec<i64>], p: u64) -> Vec<SparseColumn> {
        let nc = rows[0].len();
        (0..nc)
            .map(|c| {
                (0..rows.len())
                    .filter_map(|r| {
                        let v = reduce_signed(rows[r][c], p);
                        (v != 0).then_some((r, v))
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: singular mod 2, invertible mod 3.
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_mod_p(columns_of(&m, 2), 2), 1);
        assert_eq!(rank_mod_p(columns_of(&m, 3), 3), 2);
    }

    #[test]
    fn agrees_with_dense_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &p in &[2u64, 3, 32003] {
            for _ in 0..200 {
                let nr = rng.gen_range(1..7);
                let nc = rng.gen_range(1..7);
                let m: Vec<Vec<i64>> = (0..nr)
                    .map(|_| {
                        (0..nc)
                            .map(|_| {
                                if rng.gen_bool(0.5) {
                                    0
                                } else {
                                    rng.gen_range(-2..3)
                                }
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(rank_mod_p(columns_of(&m, p), p), dense_rank(&m, p));
            }
        }
    }
}
