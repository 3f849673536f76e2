//! Packed GF(2) rows: one `u64` per row, bit `j` holds column `j`.
//!
//! Only used as a fast path; results agree with the generic elimination
//! in [`super::modp`].

/// Widest matrix the packed path handles.
pub const MAX_PACKED_COLS: usize = 64;

/// Pack the rows of a `rows x cols` GF(2) buffer (entries 0/1).
pub fn pack_rows(buf: &[u32], rows: usize, cols: usize) -> Vec<u64> {
    assert!(cols <= MAX_PACKED_COLS);
    (0..rows).map(|r| buf[r * cols..(r + 1) * cols].iter().enumerate().fold(0u64, |acc, (j, &v)| acc | (((v & 1) as u64) << j))).collect()
}

/// Rank of packed rows; the slice is used as scratch space.
pub fn rank_packed(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let row = rows[i];
        if row == 0 {
            continue;
        }
        let low = row & row.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= row;
            }
        }
        rank += 1;
    }
    rank
}
