use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::raw::RawLine;
use super::{line_full_rank, WitnessCertificate};
use crate::error::{Error, Result};
use crate::exactalg::Matrix;
use crate::polypencil::det_pencil;
use crate::spaces::{AffineSubspace, ElementCursor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Scan every member in element order.
    Exhaustive,
    /// Uniform samples from a seeded generator; never proves absence.
    Random { seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    WitnessFound,
    ExhaustedNoWitness,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub certificate: Option<WitnessCertificate>,
    /// Members tested. For exhaustive search this is the witness index plus
    /// one (or the member count), whatever the parallelism.
    pub cases_examined: u64,
    /// Element index of the witness (exhaustive search only).
    pub witness_index: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Acceptance {
    FullRankLine,
    ConstantDet,
}

fn check_inputs(space: &AffineSubspace, n: &Matrix) -> Result<usize> {
    let shape = space.shape();
    shape.check(n)?;
    if shape.rows < shape.cols {
        return Err(Error::Hypothesis(format!("need rows >= cols, got {}x{}", shape.rows, shape.cols)));
    }
    let rank = n.rank();
    if rank >= shape.cols {
        return Err(Error::Hypothesis(format!("direction has rank {rank}, must be below {}", shape.cols)));
    }
    shape.field.require_finite()?;
    Ok(rank)
}

struct Scanner<'a> {
    line: RawLine,
    n: &'a Matrix,
    acceptance: Acceptance,
}

impl Scanner<'_> {
    fn accepts(&self, cursor: &ElementCursor, scratch: &mut Vec<u32>) -> bool {
        let a = cursor.raw();
        if !self.line.full_rank(a, scratch) {
            return false;
        }
        match self.acceptance {
            Acceptance::FullRankLine => true,
            Acceptance::ConstantDet => match self.line.constant_det_by_values(a, scratch) {
                Some(v) => v,
                None => det_pencil(&cursor.matrix(), self.n).map(|g| g.is_nonzero_constant()).unwrap_or(false),
            },
        }
    }

    fn first_in(&self, space: &AffineSubspace, range: std::ops::Range<u64>) -> Result<Option<u64>> {
        let mut cursor = ElementCursor::new(space, range)?;
        let mut scratch = Vec::new();
        while let Some(i) = cursor.index() {
            if self.accepts(&cursor, &mut scratch) {
                return Ok(Some(i));
            }
            cursor.advance();
        }
        Ok(None)
    }
}

fn total_within_budget(space: &AffineSubspace, budget: u64) -> Result<u64> {
    match space.element_count() {
        Some(total) if total <= budget => Ok(total),
        _ => Err(Error::Budget { needed: format!("{}^{}", space.shape().field.order().unwrap_or(0), space.dim()), budget }),
    }
}

fn found(space: &AffineSubspace, n: &Matrix, index: u64, examined: u64, exhaustive: bool) -> Result<SearchOutcome> {
    let a = space.element_at(index)?;
    let certificate = line_full_rank(&a, n)?.certificate().cloned();
    debug_assert!(certificate.is_some());
    Ok(SearchOutcome {
        status: SearchStatus::WitnessFound,
        certificate,
        cases_examined: examined,
        witness_index: exhaustive.then_some(index),
    })
}

fn exhaustive(space: &AffineSubspace, n: &Matrix, acceptance: Acceptance, budget: u64, parallel: bool) -> Result<SearchOutcome> {
    let total = total_within_budget(space, budget)?;
    let scanner = Scanner { line: RawLine::new(n).expect("finite field checked"), n, acceptance };
    const CHUNK: u64 = 256;
    let hit = if parallel && total > CHUNK {
        let chunks = total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| scanner.first_in(space, c * CHUNK..((c + 1) * CHUNK).min(total)))
            .find_map_first(|r| match r {
                Ok(Some(i)) => Some(Ok(i)),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
    } else {
        scanner.first_in(space, 0..total)?
    };
    match hit {
        Some(i) => found(space, n, i, i + 1, true),
        None => {
            Ok(SearchOutcome { status: SearchStatus::ExhaustedNoWitness, certificate: None, cases_examined: total, witness_index: None })
        }
    }
}

fn random(space: &AffineSubspace, n: &Matrix, acceptance: Acceptance, seed: u64, samples: u64) -> Result<SearchOutcome> {
    let scanner = Scanner { line: RawLine::new(n).expect("finite field checked"), n, acceptance };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = space.element_count();
    let mut scratch = Vec::new();
    for drawn in 1..=samples {
        let index = match total {
            Some(t) => rand::Rng::gen_range(&mut rng, 0..t),
            None => return Err(Error::Budget { needed: "element index beyond u64".into(), budget: samples }),
        };
        let cursor = ElementCursor::new(space, index..index + 1)?;
        if scanner.accepts(&cursor, &mut scratch) {
            return found(space, n, index, drawn, false);
        }
    }
    Ok(SearchOutcome { status: SearchStatus::BudgetExhausted, certificate: None, cases_examined: samples, witness_index: None })
}

/// Look for `A` in `space` such that every matrix of `A + tN` has full
/// column rank.
///
/// `budget` caps the member count for exhaustive search and the number of
/// samples for random search. Requires a finite field, rows >= cols and
/// `rank N < cols`.
pub fn witness_search(space: &AffineSubspace, n: &Matrix, strategy: Strategy, budget: u64) -> Result<SearchOutcome> {
    check_inputs(space, n)?;
    match strategy {
        Strategy::Exhaustive => exhaustive(space, n, Acceptance::FullRankLine, budget, false),
        Strategy::Random { seed } => random(space, n, Acceptance::FullRankLine, seed, budget),
    }
}

/// Exhaustive search split over the current rayon pool. The reported
/// witness is the first in element order, as in the serial scan.
pub fn witness_search_parallel(space: &AffineSubspace, n: &Matrix, budget: u64) -> Result<SearchOutcome> {
    check_inputs(space, n)?;
    exhaustive(space, n, Acceptance::FullRankLine, budget, true)
}

/// Exhaustive search for `A` in a square affine space with `det(A + tN)`
/// a nonzero constant polynomial. Requires `rank N = n - 1`.
pub fn constant_det_witness_search(space: &AffineSubspace, n: &Matrix, budget: u64) -> Result<SearchOutcome> {
    let rank = check_inputs(space, n)?;
    let size = space.shape().rows;
    if space.shape().cols != size {
        return Err(Error::NotSquare(size, space.shape().cols));
    }
    if rank + 1 != size {
        return Err(Error::Hypothesis(format!("direction must have rank {}, has {rank}", size.saturating_sub(1))));
    }
    exhaustive(space, n, Acceptance::ConstantDet, budget, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{canonical_n, Field};
    use crate::spaces::{LinearSubspace, Shape, DEFAULT_ELEMENT_BUDGET};

    #[test]
    fn full_space_has_witness() {
        let f = Field::gf3();
        let shape = Shape::new(f, 3, 2);
        let n = canonical_n(f, 3, 2, 1).unwrap();
        let out = witness_search(&LinearSubspace::full(shape).to_affine(), &n, Strategy::Exhaustive, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(out.status, SearchStatus::WitnessFound);
        assert!(out.certificate.unwrap().validate());
    }

    #[test]
    fn constant_det_on_gf3_square() {
        let f = Field::gf3();
        let space = LinearSubspace::full(Shape::new(f, 2, 2)).to_affine();
        let n = canonical_n(f, 2, 2, 1).unwrap();
        let out = constant_det_witness_search(&space, &n, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(out.status, SearchStatus::WitnessFound);
        let a = &out.certificate.unwrap().a;
        assert!(det_pencil(a, &n).unwrap().is_nonzero_constant());
    }

    #[test]
    fn hypothesis_errors() {
        let f = Field::gf2();
        let space = LinearSubspace::full(Shape::new(f, 2, 2)).to_affine();
        let full_rank = Matrix::identity(f, 2);
        assert!(matches!(witness_search(&space, &full_rank, Strategy::Exhaustive, 100), Err(Error::Hypothesis(_))));
        assert!(matches!(constant_det_witness_search(&space, &Matrix::zeros(f, 2, 2), 100), Err(Error::Hypothesis(_))));
        let big = LinearSubspace::full(Shape::new(f, 4, 4)).to_affine();
        assert!(matches!(witness_search(&big, &Matrix::zeros(f, 4, 4), Strategy::Exhaustive, 100), Err(Error::Budget { .. })));
        let q = LinearSubspace::full(Shape::new(Field::Rational, 2, 2)).to_affine();
        assert!(matches!(
            witness_search(&q, &Matrix::zeros(Field::Rational, 2, 2), Strategy::Exhaustive, 100),
            Err(Error::InfiniteField(_))
        ));
    }

    #[test]
    fn zero_direction_reduces_to_rank() {
        let f = Field::gf2();
        let shape = Shape::new(f, 2, 2);
        let space = LinearSubspace::from_generators(shape, &[Matrix::unit(f, 2, 2, 0, 0)]).unwrap().to_affine();
        let out = witness_search(&space, &Matrix::zeros(f, 2, 2), Strategy::Exhaustive, 100).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNoWitness);
        assert_eq!(out.cases_examined, 2);
    }

    #[test]
    fn random_budget_semantics() {
        let f = Field::gf2();
        let shape = Shape::new(f, 3, 2);
        let sharp = LinearSubspace::from_generators(
            shape,
            &[Matrix::unit(f, 3, 2, 0, 0), Matrix::unit(f, 3, 2, 0, 1), Matrix::unit(f, 3, 2, 1, 1), Matrix::unit(f, 3, 2, 2, 1)],
        )
        .unwrap()
        .to_affine();
        let n = canonical_n(f, 3, 2, 1).unwrap();
        let out = witness_search(&sharp, &n, Strategy::Random { seed: 7 }, 5).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExhausted);
        assert_eq!(out.cases_examined, 5);
        let full = LinearSubspace::full(shape).to_affine();
        let a = witness_search(&full, &n, Strategy::Random { seed: 7 }, 1000).unwrap();
        let b = witness_search(&full, &n, Strategy::Random { seed: 7 }, 1000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.status, SearchStatus::WitnessFound);
    }
}
