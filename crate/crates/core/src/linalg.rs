//! Exact rank of small integer matrices.

/// Rank over the rationals via fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions are
/// exact. Entries are widened to `i128`; the matrices fed in here are tiny.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    debug_assert!(m.iter().all(|r| r.len() == ncols));

    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let v = pivot * *x - factor * p;
                debug_assert_eq!(v % prev_pivot, 0);
                *x = v / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}
