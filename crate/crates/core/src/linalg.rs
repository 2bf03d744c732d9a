//! Exact linear algebra over Q(q) and over the integers.
//!
//! Two rank routines are provided. `rank_sparse_ratq` row-reduces sparse
//! rows over the field Q(q); canonical gcd-reduced entries keep growth in
//! check. `rank_sparse_bigint` is fraction-free elimination over Z for
//! rows cleared of denominators: the two-row update `v*R - w*P` never
//! leaves the integers, and dividing out the content of each row keeps
//! the entries near the size of the underlying minors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::coeff::RatQ;

/// Rank of a sparse matrix over Q(q), given as rows mapping column index
/// to a nonzero entry.
pub fn rank_sparse_ratq(rows: Vec<BTreeMap<usize, RatQ>>) -> usize {
    // pivots: col -> fully built pivot row, scaled so pivot entry is 1
    let mut pivots: BTreeMap<usize, BTreeMap<usize, RatQ>> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&col, _)) = row.iter().next() else { break };
            match pivots.get(&col) {
                Some(p) => {
                    let factor = row[&col].clone();
                    for (c, v) in p {
                        let delta = -(v * &factor);
                        match row.entry(*c) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                if !delta.is_zero() {
                                    e.insert(delta);
                                }
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let s = e.get() + &delta;
                                if s.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                        }
                    }
                }
                None => {
                    let inv = row[&col].inv();
                    let normalized: BTreeMap<usize, RatQ> =
                        row.iter().map(|(c, v)| (*c, v * &inv)).collect();
                    pivots.insert(col, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Divide a sparse integer row by the gcd of its entries.
fn make_primitive(row: &mut BTreeMap<usize, BigInt>) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.abs() == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() || g.abs() == BigInt::from(1) {
        return;
    }
    for v in row.values_mut() {
        *v = &*v / &g;
    }
}

/// Rank of a sparse integer matrix by fraction-free elimination: each
/// reduction replaces R by `(v*R - w*P)/content` for pivot row P with
/// pivot value v and matching entry w in R.
pub fn rank_sparse_bigint(rows: Vec<BTreeMap<usize, BigInt>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut row in rows {
        make_primitive(&mut row);
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&col, _)) = row.iter().next() else { break };
            match pivots.get(&col) {
                Some(p) => {
                    let v = p[&col].clone();
                    let w = row[&col].clone();
                    let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
                    for (c, x) in &row {
                        next.insert(*c, &v * x);
                    }
                    for (c, x) in p {
                        let delta = -(&w * x);
                        let e = next.entry(*c).or_insert_with(BigInt::zero);
                        *e += delta;
                    }
                    next.retain(|_, x| !x.is_zero());
                    make_primitive(&mut next);
                    row = next;
                }
                None => {
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Solve `M x = rhs` exactly over Q(q) for a sparse system with linearly
/// independent columns. `columns[j]` maps row index to the entry `M[i][j]`.
/// Returns `None` when the system is inconsistent. Free columns receive 0;
/// with independent columns any consistent system has that unique solution.
pub fn solve_sparse_ratq(
    columns: &[BTreeMap<usize, RatQ>],
    rhs: &BTreeMap<usize, RatQ>,
) -> Option<Vec<RatQ>> {
    // Transpose into equations: row index -> (col -> entry, rhs value).
    let mut eqs: BTreeMap<usize, (BTreeMap<usize, RatQ>, RatQ)> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col {
            eqs.entry(*i).or_insert_with(|| (BTreeMap::new(), RatQ::zero())).0.insert(j, v.clone());
        }
    }
    for (i, v) in rhs {
        eqs.entry(*i).or_insert_with(|| (BTreeMap::new(), RatQ::zero())).1 = v.clone();
    }
    let mut eqs: Vec<(BTreeMap<usize, RatQ>, RatQ)> = eqs.into_values().collect();

    let ncols = columns.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut next = 0usize;
    for col in 0..ncols {
        let Some(pi) = (next..eqs.len()).find(|&i| eqs[i].0.get(&col).map_or(false, |v| !v.is_zero()))
        else {
            continue;
        };
        eqs.swap(next, pi);
        // normalize pivot equation
        let inv = eqs[next].0[&col].inv();
        let (prow, prhs) = {
            let (m, r) = &mut eqs[next];
            for v in m.values_mut() {
                *v = &*v * &inv;
            }
            *r = &*r * &inv;
            (m.clone(), r.clone())
        };
        // eliminate from every other equation
        for i in 0..eqs.len() {
            if i == next {
                continue;
            }
            let Some(factor) = eqs[i].0.get(&col).cloned() else { continue };
            if factor.is_zero() {
                continue;
            }
            for (c, v) in &prow {
                let delta = -(v * &factor);
                match eqs[i].0.entry(*c) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !delta.is_zero() {
                            e.insert(delta);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &delta;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
            let new_rhs = &eqs[i].1 - &prhs * &factor;
            eqs[i].1 = new_rhs;
        }
        pivot_of_col[col] = Some(next);
        next += 1;
    }
    // inconsistent when a zero row has nonzero rhs
    for (m, r) in &eqs {
        if m.values().all(|v| v.is_zero()) && !r.is_zero() {
            return None;
        }
    }
    let mut solution = vec![RatQ::zero(); ncols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(i) = pivot {
            solution[col] = eqs[*i].1.clone();
        }
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> RatQ {
        RatQ::from_int(n)
    }

    #[test]
    fn sparse_rank() {
        let rows = vec![
            BTreeMap::from([(0, r(1)), (1, r(2))]),
            BTreeMap::from([(0, r(2)), (1, r(4))]),
            BTreeMap::from([(2, RatQ::q())]),
        ];
        assert_eq!(rank_sparse_ratq(rows), 2);
    }

    #[test]
    fn integer_rank() {
        let b = |n: i64| BigInt::from(n);
        let m = vec![
            BTreeMap::from([(0, b(2)), (1, b(4)), (2, b(1))]),
            BTreeMap::from([(0, b(1)), (1, b(2)), (2, b(3))]),
            BTreeMap::from([(0, b(3)), (1, b(6)), (2, b(4))]),
        ];
        assert_eq!(rank_sparse_bigint(m), 2);
        let id = vec![
            BTreeMap::from([(0, b(1))]),
            BTreeMap::from([(1, b(1))]),
        ];
        assert_eq!(rank_sparse_bigint(id), 2);
    }

    #[test]
    fn sparse_solve() {
        // columns of [[1,1],[0,q]], rhs (3, 2q) -> x = (1, 2)
        let cols = vec![
            BTreeMap::from([(0, r(1))]),
            BTreeMap::from([(0, r(1)), (1, RatQ::q())]),
        ];
        let rhs = BTreeMap::from([(0, r(3)), (1, RatQ::q() * r(2))]);
        let sol = solve_sparse_ratq(&cols, &rhs).unwrap();
        assert_eq!(sol, vec![r(1), r(2)]);

        // inconsistent system
        let cols = vec![BTreeMap::from([(0, r(1))])];
        let rhs = BTreeMap::from([(1, r(1))]);
        assert!(solve_sparse_ratq(&cols, &rhs).is_none());
    }
}
