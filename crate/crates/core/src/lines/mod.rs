//! Full-rank line predicates, side conditions and witness search.

mod certificate;
mod raw;
mod search;

pub use certificate::{class_name, rational_spot_points, Evidence, RankRow, WitnessCertificate};
pub use search::{constant_det_witness_search, witness_search, witness_search_parallel, SearchOutcome, SearchStatus, Strategy};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::polypencil::{classify_line, LineClass};
use certificate::{rank_table, same_shape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineVerdict {
    FullRank(WitnessCertificate),
    /// The smallest `t` (in root order) where the rank drops, and that rank.
    RankDrop {
        t: Scalar,
        rank: usize,
    },
}

impl LineVerdict {
    pub fn is_full_rank(&self) -> bool {
        matches!(self, LineVerdict::FullRank(_))
    }

    pub fn certificate(&self) -> Option<&WitnessCertificate> {
        match self {
            LineVerdict::FullRank(c) => Some(c),
            LineVerdict::RankDrop { .. } => None,
        }
    }
}

/// Does every matrix of `A + tN` have rank `p`?
///
/// Finite fields are decided by trying every `t`; over the rationals the
/// pencil is analysed formally.
pub fn line_full_rank(a: &Matrix, n: &Matrix) -> Result<LineVerdict> {
    same_shape(a, n)?;
    let p = a.ncols();
    if a.nrows() < p {
        return Err(Error::Hypothesis(format!("need rows >= cols, got {}x{p}", a.nrows())));
    }
    if a.field().is_finite() {
        let table = rank_table(a, n, a.field().elements()?)?;
        if let Some(row) = table.iter().find(|r| r.rank < p) {
            return Ok(LineVerdict::RankDrop { t: row.t.clone(), rank: row.rank });
        }
        return Ok(LineVerdict::FullRank(WitnessCertificate { a: a.clone(), n: n.clone(), evidence: Evidence::Table(table) }));
    }
    let analysis = classify_line(a, n)?;
    let drop_at = match &analysis.class {
        LineClass::HasRoot(t) => Some(t.clone()),
        LineClass::IdenticallyZero => Some(a.field().zero()),
        _ => None,
    };
    if let Some(t) = drop_at {
        let rank = a.add_scaled(&t, n)?.rank();
        return Ok(LineVerdict::RankDrop { t, rank });
    }
    let spot_checks = rank_table(a, n, rational_spot_points())?;
    Ok(LineVerdict::FullRank(WitnessCertificate { a: a.clone(), n: n.clone(), evidence: Evidence::Pencil { analysis, spot_checks } }))
}

fn square_pair(m: &Matrix, n: &Matrix) -> Result<()> {
    same_shape(m, n)?;
    if !m.is_square() {
        return Err(Error::NotSquare(m.nrows(), m.ncols()));
    }
    Ok(())
}

/// `rank [N | M K]` where the columns of `K` span `Ker N`.
fn stacked_rank(m: &Matrix, n: &Matrix) -> Result<(usize, usize, usize)> {
    square_pair(m, n)?;
    let k = n.kernel_basis();
    let image = m.mul(&k)?;
    Ok((n.hstack(&image)?.rank(), n.rank(), k.ncols()))
}

/// Does `M` map `Ker N` into `im N`?
pub fn maps_ker_into_im(m: &Matrix, n: &Matrix) -> Result<bool> {
    let (stacked, rank_n, _) = stacked_rank(m, n)?;
    Ok(stacked == rank_n)
}

/// Is the induced map `X in Ker N -> MX mod im N` non-injective?
pub fn ker_coker_noninjective(m: &Matrix, n: &Matrix) -> Result<bool> {
    let (stacked, rank_n, kernel_dim) = stacked_rank(m, n)?;
    Ok(stacked < rank_n + kernel_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{canonical_n, Field};

    #[test]
    fn line_examples() {
        let f = Field::gf2();
        let a = Matrix::from_rows(f, &[[0, 0], [1, 0], [0, 1]]);
        let n = canonical_n(f, 3, 2, 1).unwrap();
        let v = line_full_rank(&a, &n).unwrap();
        let cert = v.certificate().unwrap();
        assert!(cert.validate());
        assert_eq!(cert.table().iter().map(|r| r.rank).collect::<Vec<_>>(), vec![2, 2]);

        let v = line_full_rank(&Matrix::zeros(f, 3, 2), &n).unwrap();
        assert_eq!(v, LineVerdict::RankDrop { t: f.zero(), rank: 0 });

        let g3 = Field::gf3();
        let v = line_full_rank(&Matrix::identity(g3, 2), &Matrix::unit(g3, 2, 2, 0, 0)).unwrap();
        assert_eq!(v, LineVerdict::RankDrop { t: g3.from_i64(2), rank: 1 });

        let q = Field::Rational;
        let v = line_full_rank(&Matrix::zeros(q, 2, 2), &canonical_n(q, 2, 2, 1).unwrap()).unwrap();
        assert_eq!(v, LineVerdict::RankDrop { t: q.zero(), rank: 0 });
        assert!(line_full_rank(&Matrix::zeros(f, 2, 3), &Matrix::zeros(f, 2, 3)).is_err());
    }

    #[test]
    fn rational_certificate_roundtrip() {
        let q = Field::Rational;
        let a = Matrix::from_rows(q, &[[0, 0], [1, 0], [0, 1]]);
        let n = canonical_n(q, 3, 2, 1).unwrap();
        let cert = line_full_rank(&a, &n).unwrap().certificate().unwrap().clone();
        assert!(cert.validate());
        let back = WitnessCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn tampered_certificates_fail() {
        let f = Field::gf2();
        let a = Matrix::from_rows(f, &[[0, 1], [1, 0]]);
        let n = canonical_n(f, 2, 2, 1).unwrap();
        let mut cert = line_full_rank(&a, &n).unwrap().certificate().unwrap().clone();
        cert.a = Matrix::zeros(f, 2, 2);
        assert!(!cert.validate());
        let mut cert = line_full_rank(&a, &n).unwrap().certificate().unwrap().clone();
        if let Evidence::Table(rows) = &mut cert.evidence {
            rows.pop();
        }
        assert!(!cert.validate());
    }

    #[test]
    fn side_condition_examples() {
        let f = Field::gf2();
        for size in 2..5 {
            let n = canonical_n(f, size, size, size - 1).unwrap();
            assert!(maps_ker_into_im(&n, &n).unwrap());
            let corner = Matrix::unit(f, size, size, size - 1, size - 1);
            assert!(!maps_ker_into_im(&corner, &n).unwrap());
            assert!(maps_ker_into_im(&Matrix::unit(f, size, size, 0, size - 1), &n).unwrap());
            for r in 0..size {
                let n = canonical_n(f, size, size, r).unwrap();
                assert!(ker_coker_noninjective(&Matrix::zeros(f, size, size), &n).unwrap());
            }
        }
        assert!(maps_ker_into_im(&Matrix::zeros(f, 2, 3), &Matrix::zeros(f, 2, 3)).is_err());
    }
}
