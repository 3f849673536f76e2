use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::spaces::DEFAULT_ELEMENT_BUDGET;

/// Which statement a campaign checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Subspaces of dimension above `n r` contain a matrix of rank above `r`.
    Flanders,
    /// Linear subspaces of codimension at most `n - 2` contain a full-rank-line witness.
    Main,
    /// Square affine case with `rank N = n - 1` and the kernel-into-image side condition.
    Pencil,
    /// Square affine case with singular `N` and the non-injectivity side condition.
    Square,
    /// As `Pencil`, but the witness must have constant nonzero `det(A + tN)`; needs `q >= 3`.
    Remark2Strong,
    /// The constant-determinant statement over GF(2) for `n > 3`. Exploratory only.
    Remark2Conjecture,
}

impl Theorem {
    pub const ALL: [Theorem; 6] =
        [Theorem::Flanders, Theorem::Main, Theorem::Pencil, Theorem::Square, Theorem::Remark2Strong, Theorem::Remark2Conjecture];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Flanders => "flanders",
            Theorem::Main => "main",
            Theorem::Pencil => "pencil",
            Theorem::Square => "square",
            Theorem::Remark2Strong => "remark2-strong",
            Theorem::Remark2Conjecture => "remark2-conjecture",
        }
    }

    /// Affine subspaces (as opposed to linear ones) are quantified over.
    pub fn is_affine(self) -> bool {
        matches!(self, Theorem::Pencil | Theorem::Square | Theorem::Remark2Strong | Theorem::Remark2Conjecture)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::Hypothesis(format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Mode {
    Exhaustive,
    /// `count` cases drawn uniformly (with replacement) from the full case list.
    Sample {
        count: u64,
    },
}

/// Parameters of a verification campaign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSpec {
    pub theorem: Theorem,
    pub q: u32,
    pub n: usize,
    pub p: usize,
    pub codim_min: usize,
    pub codim_max: usize,
    /// Ranks of the canonical direction `N`; for `Flanders`, the rank bound `r`.
    pub rank_min: usize,
    pub rank_max: usize,
    pub mode: Mode,
    pub seed: u64,
    pub element_budget: u64,
    pub allow_out_of_hypothesis: bool,
    /// Extra `(P, Q)`-conjugated re-tests per passing case.
    pub random_conjugates: u32,
}

impl CampaignSpec {
    /// Defaults: exhaustive, the largest codimension range the theorem
    /// covers, every admissible rank, seed 0.
    pub fn new(theorem: Theorem, q: u32, n: usize, p: usize) -> Self {
        let (rank_min, rank_max) = default_ranks(theorem, n, p);
        let codim_max = match theorem {
            Theorem::Flanders => 1,
            _ => n.saturating_sub(2),
        };
        CampaignSpec {
            theorem,
            q,
            n,
            p,
            codim_min: 0,
            codim_max,
            rank_min,
            rank_max,
            mode: Mode::Exhaustive,
            seed: 0,
            element_budget: DEFAULT_ELEMENT_BUDGET,
            allow_out_of_hypothesis: false,
            random_conjugates: 0,
        }
    }

    pub fn codims(mut self, codims: RangeInclusive<usize>) -> Self {
        self.codim_min = *codims.start();
        self.codim_max = *codims.end();
        self
    }

    pub fn ranks(mut self, ranks: RangeInclusive<usize>) -> Self {
        self.rank_min = *ranks.start();
        self.rank_max = *ranks.end();
        self
    }

    pub fn sample(mut self, count: u64, seed: u64) -> Self {
        self.mode = Mode::Sample { count };
        self.seed = seed;
        self
    }

    pub fn allow_out_of_hypothesis(mut self, allow: bool) -> Self {
        self.allow_out_of_hypothesis = allow;
        self
    }

    pub fn field(&self) -> Result<Field> {
        Field::prime(self.q as u64)
    }

    /// Largest codimension covered by the statement.
    pub fn hypothesis_codim(&self) -> Option<usize> {
        match self.theorem {
            Theorem::Flanders => Some(self.n * self.p),
            _ => self.n.checked_sub(2),
        }
    }

    pub fn codim_in_hypothesis(&self, codim: usize) -> bool {
        self.theorem != Theorem::Remark2Conjecture && self.hypothesis_codim().is_some_and(|h| codim <= h)
    }

    /// Reject parameter combinations outside the theorem's hypotheses.
    /// Codimensions beyond the covered range pass only with the override.
    pub fn validate(&self) -> Result<()> {
        let field = self.field()?;
        let bad = |msg: String| Err(Error::Hypothesis(msg));
        if self.n < self.p {
            return bad(format!("need n >= p, got n={}, p={}", self.n, self.p));
        }
        if self.codim_min > self.codim_max || self.codim_max > self.n * self.p {
            return bad(format!("codimension range {}..={} invalid for {}x{}", self.codim_min, self.codim_max, self.n, self.p));
        }
        if self.rank_min > self.rank_max {
            return bad(format!("rank range {}..={} is empty", self.rank_min, self.rank_max));
        }
        let square = self.n == self.p;
        match self.theorem {
            Theorem::Flanders => {
                if self.rank_max > self.p {
                    return bad(format!("rank bound {} exceeds p={}", self.rank_max, self.p));
                }
            }
            Theorem::Main => {
                if self.p < 2 {
                    return bad(format!("need p >= 2, got {}", self.p));
                }
                if self.rank_max >= self.p {
                    return bad(format!("direction rank {} must be below p={}", self.rank_max, self.p));
                }
            }
            Theorem::Pencil | Theorem::Remark2Strong | Theorem::Remark2Conjecture | Theorem::Square => {
                if !square {
                    return bad(format!("{} needs square matrices, got {}x{}", self.theorem, self.n, self.p));
                }
                if self.n < 2 {
                    return bad(format!("{} needs n >= 2", self.theorem));
                }
                let fixed = self.theorem != Theorem::Square;
                if fixed && (self.rank_min != self.n - 1 || self.rank_max != self.n - 1) {
                    return bad(format!("{} needs rank N = n - 1 = {}", self.theorem, self.n - 1));
                }
                if self.rank_max >= self.n {
                    return bad(format!("direction must be singular, rank {} >= n", self.rank_max));
                }
            }
        }
        match self.theorem {
            Theorem::Remark2Strong if field.order() < Some(3) => {
                return bad("remark2-strong needs a field with at least 3 elements; over GF(2) the statement fails for n = 3 (use remark2-conjecture for n > 3)".into());
            }
            Theorem::Remark2Conjecture if self.q != 2 || self.n <= 3 => {
                return bad("remark2-conjecture is stated for q = 2 and n > 3".into());
            }
            _ => {}
        }
        let limit = self.hypothesis_codim();
        if limit.is_none_or(|h| self.codim_max > h) && !self.allow_out_of_hypothesis {
            return bad(format!(
                "codimension {} exceeds the covered bound {}; pass the out-of-hypothesis override to explore it",
                self.codim_max,
                limit.map_or("(none)".to_string(), |h| h.to_string())
            ));
        }
        Ok(())
    }
}

fn default_ranks(theorem: Theorem, n: usize, p: usize) -> (usize, usize) {
    match theorem {
        Theorem::Flanders => (p.saturating_sub(1), p.saturating_sub(1)),
        Theorem::Main => (0, p.saturating_sub(1)),
        Theorem::Square => (0, n.saturating_sub(1)),
        _ => (n.saturating_sub(1), n.saturating_sub(1)),
    }
}
