//! Allocation-free line predicates over GF(p) residue buffers.

use crate::exactalg::gf2::{rank_packed, MAX_PACKED_COLS};
use crate::exactalg::modp::{axpy_into, det_in_place, rank_in_place};
use crate::exactalg::Matrix;

/// A fixed direction `N` prepared for repeated checks against many `A`.
pub(crate) struct RawLine {
    p: u32,
    rows: usize,
    cols: usize,
    n: Vec<u32>,
    packed_n: Option<Vec<u64>>,
    rank_n: usize,
}

impl RawLine {
    /// `None` over the rationals.
    pub(crate) fn new(n: &Matrix) -> Option<RawLine> {
        let p = n.field().order()?;
        let raw = n.raw_mod()?.to_vec();
        let (rows, cols) = n.dims();
        let packed_n = (p == 2 && cols <= MAX_PACKED_COLS).then(|| crate::exactalg::gf2::pack_rows(&raw, rows, cols));
        Some(RawLine { p, rows, cols, n: raw, packed_n, rank_n: n.rank() })
    }

    /// Smallest `t` with `rank(A + tN) < cols`, if any.
    pub(crate) fn first_drop(&self, a: &[u32], scratch: &mut Vec<u32>) -> Option<u32> {
        if let Some(pn) = &self.packed_n {
            let pa = crate::exactalg::gf2::pack_rows(a, self.rows, self.cols);
            let mut buf = pa.clone();
            if rank_packed(&mut buf) < self.cols {
                return Some(0);
            }
            let mut buf: Vec<u64> = pa.iter().zip(pn).map(|(x, y)| x ^ y).collect();
            return (rank_packed(&mut buf) < self.cols).then_some(1);
        }
        scratch.resize(a.len(), 0);
        (0..self.p).find(|&t| {
            axpy_into(scratch, a, t, &self.n, self.p);
            rank_in_place(scratch, self.rows, self.cols, self.p) < self.cols
        })
    }

    pub(crate) fn full_rank(&self, a: &[u32], scratch: &mut Vec<u32>) -> bool {
        self.first_drop(a, scratch).is_none()
    }

    /// Whether `det(A + tN)` is a nonzero constant, decided from its values
    /// when `rank N < p` (the degree is at most `rank N`, so `p` values pin
    /// the polynomial down). Returns `None` when values cannot decide it.
    pub(crate) fn constant_det_by_values(&self, a: &[u32], scratch: &mut Vec<u32>) -> Option<bool> {
        if self.rank_n >= self.p as usize {
            return None;
        }
        scratch.resize(a.len(), 0);
        let mut first = None;
        for t in 0..self.p {
            axpy_into(scratch, a, t, &self.n, self.p);
            let d = det_in_place(scratch, self.rows, self.p);
            if d == 0 {
                return Some(false);
            }
            match first {
                None => first = Some(d),
                Some(f) if f != d => return Some(false),
                _ => {}
            }
        }
        Some(true)
    }
}
