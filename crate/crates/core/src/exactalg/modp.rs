//! In-place elimination kernels on row-major `u32` buffers modulo a prime.
//!
//! These are the hot loops of the exhaustive harnesses; they allocate nothing.

use super::field::{inv_mod, mul_mod};

#[inline]
fn sub_scaled_row(buf: &mut [u32], cols: usize, dst: usize, src: usize, from: usize, factor: u32, p: u32) {
    let (d, s) = if dst > src {
        let (lo, hi) = buf.split_at_mut(dst * cols);
        (&mut hi[..cols], &lo[src * cols..src * cols + cols])
    } else {
        let (lo, hi) = buf.split_at_mut(src * cols);
        (&mut lo[dst * cols..dst * cols + cols], &hi[..cols])
    };
    for c in from..cols {
        let v = mul_mod(factor, s[c], p);
        d[c] = if d[c] >= v { d[c] - v } else { d[c] + p - v };
    }
}

fn swap_rows(buf: &mut [u32], cols: usize, a: usize, b: usize) {
    if a != b {
        for c in 0..cols {
            buf.swap(a * cols + c, b * cols + c);
        }
    }
}

/// Rank of the `rows x cols` matrix in `buf`; `buf` is left in echelon form.
pub(crate) fn rank_in_place(buf: &mut [u32], rows: usize, cols: usize, p: u32) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| buf[r * cols + c] != 0) else {
            continue;
        };
        swap_rows(buf, cols, rank, piv);
        let inv = inv_mod(buf[rank * cols + c], p);
        for r in rank + 1..rows {
            let f = buf[r * cols + c];
            if f != 0 {
                sub_scaled_row(buf, cols, r, rank, c, mul_mod(f, inv, p), p);
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row-echelon form in place; returns pivot columns.
pub(crate) fn rref_in_place(buf: &mut [u32], rows: usize, cols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| buf[r * cols + c] != 0) else {
            continue;
        };
        swap_rows(buf, cols, rank, piv);
        let inv = inv_mod(buf[rank * cols + c], p);
        for x in &mut buf[rank * cols + c..rank * cols + cols] {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..rows {
            let f = buf[r * cols + c];
            if r != rank && f != 0 {
                sub_scaled_row(buf, cols, r, rank, c, f, p);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Determinant of the `n x n` matrix in `buf` (destroyed).
pub(crate) fn det_in_place(buf: &mut [u32], n: usize, p: u32) -> u32 {
    let mut det = 1u32;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| buf[r * n + c] != 0) else {
            return 0;
        };
        if piv != c {
            swap_rows(buf, n, c, piv);
            det = (p - det) % p;
        }
        let d = buf[c * n + c];
        det = mul_mod(det, d, p);
        let inv = inv_mod(d, p);
        for r in c + 1..n {
            let f = buf[r * n + c];
            if f != 0 {
                sub_scaled_row(buf, n, r, c, c, mul_mod(f, inv, p), p);
            }
        }
    }
    det
}

/// `dst[i] = a[i] + t * b[i] mod p`.
#[inline]
pub(crate) fn axpy_into(dst: &mut [u32], a: &[u32], t: u32, b: &[u32], p: u32) {
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = ((x as u64 + t as u64 * y as u64) % p as u64) as u32;
    }
}
