//! Case enumeration and the per-case predicate.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{CaseOutcome, FailureRecord};
use super::spec::{CampaignSpec, Theorem};
use crate::error::{Error, Result};
use crate::exactalg::modp::{det_in_place, rank_in_place};
use crate::exactalg::{canonical_n, Field, Matrix};
use crate::lines::{constant_det_witness_search, ker_coker_noninjective, maps_ker_into_im, witness_search, SearchStatus, Strategy};
use crate::spaces::{
    count_subspaces, enumerate_affine, enumerate_subspaces, AffineEnumeration, AffineSubspace, ElementCursor, Shape, SubspaceEnumeration,
};

/// A case: one subspace of one codimension paired with one rank value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseId {
    pub index: u64,
    pub codim: usize,
    pub subspace: u64,
    pub rank: usize,
}

enum Spaces {
    Linear(SubspaceEnumeration),
    Affine(AffineEnumeration),
}

struct Block {
    codim: usize,
    start: u64,
    spaces: Spaces,
}

/// The ordered case list of a campaign: codimension ascending, then
/// subspace index, then rank.
pub(crate) struct CaseTable {
    spec: CampaignSpec,
    field: Field,
    blocks: Vec<Block>,
    ranks: u64,
    total: u64,
    directions: Vec<Matrix>,
}

impl CaseTable {
    pub(crate) fn new(spec: &CampaignSpec) -> Result<Self> {
        let field = spec.field()?;
        let shape = Shape::new(field, spec.n, spec.p);
        let ranks = (spec.rank_max - spec.rank_min + 1) as u64;
        let q = spec.q as u64;
        let mut blocks = Vec::new();
        let mut total = 0u64;
        for codim in spec.codim_min..=spec.codim_max {
            let mut count = count_subspaces(shape.ambient_dim(), codim, q);
            if spec.theorem.is_affine() {
                count *= num_bigint::BigUint::from(q).pow(codim as u32);
            }
            let size = (count * ranks).to_u64().and_then(|c| c.checked_add(total));
            let Some(next) = size else {
                return Err(Error::Budget { needed: "case count beyond u64".into(), budget: u64::MAX });
            };
            let spaces = if spec.theorem.is_affine() {
                Spaces::Affine(enumerate_affine(shape, codim)?)
            } else {
                Spaces::Linear(enumerate_subspaces(shape, codim)?)
            };
            blocks.push(Block { codim, start: total, spaces });
            total = next;
        }
        let directions = (spec.rank_min..=spec.rank_max)
            .map(|r| match spec.theorem {
                Theorem::Flanders => Ok(Matrix::zeros(field, spec.n, spec.p)),
                _ => canonical_n(field, spec.n, spec.p, r),
            })
            .collect::<Result<_>>()?;
        Ok(CaseTable { spec: spec.clone(), field, blocks, ranks, total, directions })
    }

    pub(crate) fn total(&self) -> u64 {
        self.total
    }

    pub(crate) fn id(&self, index: u64) -> CaseId {
        let block = self.blocks.iter().rev().find(|b| b.start <= index).expect("index in range");
        let local = index - block.start;
        CaseId { index, codim: block.codim, subspace: local / self.ranks, rank: self.spec.rank_min + (local % self.ranks) as usize }
    }

    fn space(&self, id: &CaseId) -> AffineSubspace {
        let block = self.blocks.iter().find(|b| b.codim == id.codim).expect("codim in range");
        match &block.spaces {
            Spaces::Linear(e) => e.get(id.subspace).to_affine(),
            Spaces::Affine(e) => e.get(id.subspace),
        }
    }

    pub(crate) fn evaluate(&self, id: &CaseId) -> Result<CaseOutcome> {
        let space = self.space(id);
        let n = &self.directions[id.rank - self.spec.rank_min];
        let outcome = check(&self.spec, &space, n, id.rank, true)?;
        if outcome != Check::Passed || self.spec.random_conjugates == 0 {
            return Ok(self.record(id, &space, n, outcome, None));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.spec.seed ^ id.index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        for k in 0..self.spec.random_conjugates {
            let p = random_invertible(self.field, self.spec.n, &mut rng)?;
            let q = random_invertible(self.field, self.spec.p, &mut rng)?;
            let moved = space.transform(&p, &q)?;
            let moved_n = crate::exactalg::equivalence_apply(&p, n, &q)?;
            let again = check(&self.spec, &moved, &moved_n, id.rank, false)?;
            if again != Check::Passed {
                return Ok(self.record(id, &moved, &moved_n, again, Some(k)));
            }
        }
        Ok(CaseOutcome::Passed)
    }

    fn record(&self, id: &CaseId, space: &AffineSubspace, n: &Matrix, check: Check, conjugate: Option<u32>) -> CaseOutcome {
        let diagnostics = match check {
            Check::Passed => return CaseOutcome::Passed,
            Check::Filtered => return CaseOutcome::Filtered,
            Check::Failed(msg) => match conjugate {
                Some(k) => format!("conjugate {k}: {msg}"),
                None => msg,
            },
        };
        CaseOutcome::Failed(Box::new(FailureRecord {
            case_index: id.index,
            codim: id.codim,
            rank: id.rank,
            in_hypothesis: self.spec.codim_in_hypothesis(id.codim),
            subspace: space.to_text(),
            direction: n.to_text(),
            diagnostics,
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Check {
    Passed,
    Filtered,
    Failed(String),
}

fn random_invertible<R: Rng>(field: Field, size: usize, rng: &mut R) -> Result<Matrix> {
    let q = field.require_finite()? as i64;
    loop {
        let m = Matrix::from_fn(field, size, size, |_, _| field.from_i64(rng.gen_range(0..q)));
        if m.rank() == size {
            return Ok(m);
        }
    }
}

/// Runs `f` over the members of `space` until it returns true.
fn any_member(space: &AffineSubspace, budget: u64, mut f: impl FnMut(&ElementCursor) -> bool) -> Result<bool> {
    let total = space
        .element_count()
        .filter(|&t| t <= budget)
        .ok_or_else(|| Error::Budget { needed: format!("{}^{}", space.shape().field, space.dim()), budget })?;
    let mut cursor = ElementCursor::new(space, 0..total)?;
    while cursor.index().is_some() {
        if f(&cursor) {
            return Ok(true);
        }
        cursor.advance();
    }
    Ok(false)
}

/// Does some member have `(n-1, n-1)` entry zero? With `N` canonical of rank
/// `n - 1`, that is the kernel-into-image condition.
fn corner_vanishes_somewhere(space: &AffineSubspace) -> bool {
    let coord = space.shape().ambient_dim() - 1;
    space.base().raw_mod().expect("finite field")[coord] == 0 || {
        let basis = space.linear().basis().raw_mod().expect("finite field");
        let m = space.shape().ambient_dim();
        (0..space.dim()).any(|i| basis[i * m + coord] != 0)
    }
}

/// Does some member have singular lower-right `(n - r)` block? With `N`
/// canonical of rank `r`, that is the non-injectivity condition.
fn lower_block_singular_somewhere(space: &AffineSubspace, r: usize, budget: u64) -> Result<bool> {
    let shape = space.shape();
    let (size, q) = (shape.rows, shape.field.require_finite()?);
    let k = size - r;
    let mut block = vec![0u32; k * k];
    any_member(space, budget, |c| {
        let a = c.raw();
        for i in 0..k {
            for j in 0..k {
                block[i * k + j] = a[(r + i) * size + r + j];
            }
        }
        det_in_place(&mut block, k, q) == 0
    })
}

fn check(spec: &CampaignSpec, space: &AffineSubspace, n: &Matrix, rank: usize, canonical: bool) -> Result<Check> {
    let budget = spec.element_budget;
    let shape = space.shape();
    if spec.theorem == Theorem::Flanders {
        if space.dim() <= shape.rows * rank {
            return Ok(Check::Filtered);
        }
        let q = shape.field.require_finite()?;
        let mut buf = Vec::new();
        let hit = any_member(space, budget, |c| {
            buf.clear();
            buf.extend_from_slice(c.raw());
            rank_in_place(&mut buf, shape.rows, shape.cols, q) > rank
        })?;
        return Ok(if hit { Check::Passed } else { Check::Failed(format!("every member has rank <= {rank}")) });
    }
    let side = match spec.theorem {
        Theorem::Main => true,
        Theorem::Square => {
            if canonical {
                lower_block_singular_somewhere(space, rank, budget)?
            } else {
                let mut hit = false;
                for m in space.elements(budget)? {
                    if ker_coker_noninjective(&m, n)? {
                        hit = true;
                        break;
                    }
                }
                hit
            }
        }
        _ => {
            if canonical {
                corner_vanishes_somewhere(space)
            } else {
                let mut hit = false;
                for m in space.elements(budget)? {
                    if maps_ker_into_im(&m, n)? {
                        hit = true;
                        break;
                    }
                }
                hit
            }
        }
    };
    if !side {
        return Ok(Check::Filtered);
    }
    let outcome = match spec.theorem {
        Theorem::Remark2Strong | Theorem::Remark2Conjecture => constant_det_witness_search(space, n, budget)?,
        _ => witness_search(space, n, Strategy::Exhaustive, budget)?,
    };
    Ok(match outcome.status {
        SearchStatus::WitnessFound => Check::Passed,
        _ => {
            let what = match spec.theorem {
                Theorem::Remark2Strong | Theorem::Remark2Conjecture => "constant nonzero det(A + tN)",
                _ => "full-rank line",
            };
            Check::Failed(format!("no member with {what} among {} members", outcome.cases_examined))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::LinearSubspace;

    #[test]
    fn case_ids_cover_blocks() {
        let spec = CampaignSpec::new(Theorem::Main, 2, 3, 2).codims(0..=1);
        let table = CaseTable::new(&spec).unwrap();
        // codim 0: 1 space, codim 1: 63 spaces; ranks 0 and 1
        assert_eq!(table.total(), 128);
        assert_eq!(table.id(0), CaseId { index: 0, codim: 0, subspace: 0, rank: 0 });
        assert_eq!(table.id(3), CaseId { index: 3, codim: 1, subspace: 0, rank: 1 });
        assert_eq!(table.id(127), CaseId { index: 127, codim: 1, subspace: 62, rank: 1 });
    }

    #[test]
    fn corner_condition_matches_generic() {
        let f = Field::gf2();
        let shape = Shape::new(f, 3, 3);
        let n = canonical_n(f, 3, 3, 2).unwrap();
        let aff = enumerate_affine(shape, 1).unwrap();
        for i in (0..aff.len()).step_by(97) {
            let s = aff.get(i);
            let generic = s.elements(1 << 10).unwrap().any(|m| maps_ker_into_im(&m, &n).unwrap());
            assert_eq!(corner_vanishes_somewhere(&s), generic, "space {i}");
        }
    }

    #[test]
    fn block_condition_matches_generic() {
        let f = Field::gf3();
        let shape = Shape::new(f, 2, 2);
        for r in 0..2 {
            let n = canonical_n(f, 2, 2, r).unwrap();
            let aff = enumerate_affine(shape, 2).unwrap();
            for s in aff.iter() {
                let generic = s.elements(100).unwrap().any(|m| ker_coker_noninjective(&m, &n).unwrap());
                assert_eq!(lower_block_singular_somewhere(&s, r, 100).unwrap(), generic);
            }
        }
    }

    #[test]
    fn flanders_filter_and_scan() {
        let f = Field::gf2();
        let spec = CampaignSpec::new(Theorem::Flanders, 2, 2, 2).ranks(1..=1);
        let full = LinearSubspace::full(Shape::new(f, 2, 2)).to_affine();
        assert_eq!(check(&spec, &full, &Matrix::zeros(f, 2, 2), 1, true).unwrap(), Check::Passed);
        let ext = crate::gallery::flanders_extremal(2, 2, 1, f).unwrap().to_affine();
        assert_eq!(check(&spec, &ext, &Matrix::zeros(f, 2, 2), 1, true).unwrap(), Check::Filtered);
    }
}
