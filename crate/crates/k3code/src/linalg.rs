//! Small exact linear algebra over a constructed field: rank and kernel of
//! dense matrices, used for conic/cubic interpolation systems and the
//! quintic evaluation matrix.

use crate::gf2::{FFElem, FieldCtx};

/// Row-reduces `rows` in place (each row of length `cols`) and returns the
/// rank.  Reduced rows end up in echelon order with pivot 1.
pub fn row_reduce(k: &FieldCtx, rows: &mut [Vec<FFElem>], cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = k.inverse(rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = k.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col];
                for c in col..cols {
                    let t = k.mul(f, rows[rank][c]);
                    rows[r][c] = k.add(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(k: &FieldCtx, mut rows: Vec<Vec<FFElem>>, cols: usize) -> usize {
    row_reduce(k, &mut rows, cols)
}

/// Basis of the right kernel of the matrix (rows × cols).
pub fn kernel(k: &FieldCtx, mut rows: Vec<Vec<FFElem>>, cols: usize) -> Vec<Vec<FFElem>> {
    let _ = row_reduce(k, &mut rows, cols);
    // Locate pivot columns.
    let mut pivot_of_col = vec![None; cols];
    let mut r = 0;
    for row in rows.iter() {
        if let Some(c) = (0..cols).find(|&c| !row[c].is_zero()) {
            pivot_of_col[c] = Some(r);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![FFElem::ZERO; cols];
        v[free] = FFElem::ONE;
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                // Pivot entry is 1, so the pivot variable equals the free
                // column entry of that row (char 2: subtraction = addition).
                v[c] = rows[pr][free];
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::canonical_field;

    #[test]
    fn kernel_of_singular_system() {
        let k = canonical_field(4).unwrap();
        let a = k.gen();
        // Rows (1, a, 0), (a, a², 0): rank 1 after scaling, kernel dim 2.
        let rows = vec![
            vec![FFElem::ONE, a, FFElem::ZERO],
            vec![a, k.mul(a, a), FFElem::ZERO],
        ];
        assert_eq!(rank(&k, rows.clone(), 3), 1);
        let ker = kernel(&k, rows.clone(), 3);
        assert_eq!(ker.len(), 2);
        for v in ker {
            for row in &rows {
                let mut acc = FFElem::ZERO;
                for (x, y) in row.iter().zip(&v) {
                    acc = k.add(acc, k.mul(*x, *y));
                }
                assert!(acc.is_zero());
            }
        }
    }
}
