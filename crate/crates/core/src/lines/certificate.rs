use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar};
use crate::polypencil::{classify_line, LineClass, PencilAnalysis};

/// Rank of `A + tN` at one value of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankRow {
    pub t: Scalar,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Every field element with its rank (finite fields).
    Table(Vec<RankRow>),
    /// Formal analysis plus a spot-check table (rationals).
    Pencil { analysis: PencilAnalysis, spot_checks: Vec<RankRow> },
}

/// Checkable evidence that every matrix of `A + tN` has full column rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub a: Matrix,
    pub n: Matrix,
    pub evidence: Evidence,
}

/// Points at which rational certificates record ranks.
pub fn rational_spot_points() -> Vec<Scalar> {
    let q = Field::Rational;
    let mut pts: Vec<Scalar> = [0, 1, -1, 2, -2, 3, -3].iter().map(|&v| q.from_i64(v)).collect();
    pts.push(q.from_ratio(1, 2));
    pts.push(q.from_ratio(-1, 2));
    pts
}

pub(crate) fn rank_table(a: &Matrix, n: &Matrix, points: impl IntoIterator<Item = Scalar>) -> Result<Vec<RankRow>> {
    points.into_iter().map(|t| Ok(RankRow { rank: a.add_scaled(&t, n)?.rank(), t })).collect()
}

impl WitnessCertificate {
    /// Re-check the certificate from scratch with plain rank computations.
    pub fn validate(&self) -> bool {
        let p = self.a.ncols();
        let Ok(()) = same_shape(&self.a, &self.n) else {
            return false;
        };
        let replay = |rows: &[RankRow]| -> bool {
            rows.iter().all(|r| r.rank == p && self.a.add_scaled(&r.t, &self.n).map(|m| m.rank() == p).unwrap_or(false))
        };
        match &self.evidence {
            Evidence::Table(rows) => {
                let Ok(all) = self.a.field().elements() else {
                    return false;
                };
                let covered: Vec<Scalar> = rows.iter().map(|r| r.t.clone()).collect();
                all.collect::<Vec<_>>() == covered && replay(rows)
            }
            Evidence::Pencil { analysis, spot_checks } => {
                let Ok(fresh) = classify_line(&self.a, &self.n) else {
                    return false;
                };
                fresh == *analysis && analysis.class.is_full_rank() && replay(spot_checks)
            }
        }
    }

    pub fn table(&self) -> &[RankRow] {
        match &self.evidence {
            Evidence::Table(rows) => rows,
            Evidence::Pencil { spot_checks, .. } => spot_checks,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (polynomial, class) = match &self.evidence {
            Evidence::Table(_) => (None, None),
            Evidence::Pencil { analysis, .. } => (Some(analysis.polynomial.to_string()), Some(class_name(&analysis.class).to_string())),
        };
        let doc = CertificateJson {
            a: self.a.to_text(),
            n: self.n.to_text(),
            field: self.a.field().to_string(),
            table: self.table().iter().map(|r| TableJson { t: r.t.to_string(), rank: r.rank }).collect(),
            verdict: "full-rank".into(),
            polynomial,
            class,
        };
        serde_json::to_value(doc).expect("certificate serializes")
    }

    /// Rebuild a certificate from its JSON form. The pencil analysis of a
    /// rational certificate is recomputed rather than parsed.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: CertificateJson = serde_json::from_value(value.clone()).map_err(|e| Error::parse(0, e.to_string()))?;
        let a = Matrix::from_text(&doc.a)?;
        let n = Matrix::from_text(&doc.n)?;
        same_shape(&a, &n)?;
        let table = doc.table.iter().map(|r| Ok(RankRow { t: a.field().parse_scalar(&r.t)?, rank: r.rank })).collect::<Result<Vec<_>>>()?;
        let evidence = if a.field().is_finite() {
            Evidence::Table(table)
        } else {
            Evidence::Pencil { analysis: classify_line(&a, &n)?, spot_checks: table }
        };
        Ok(WitnessCertificate { a, n, evidence })
    }
}

pub(crate) fn same_shape(a: &Matrix, n: &Matrix) -> Result<()> {
    if a.field() != n.field() {
        return Err(Error::FieldMismatch(a.field(), n.field()));
    }
    if a.dims() != n.dims() {
        return Err(Error::shape(format!("{}x{}", a.nrows(), a.ncols()), format!("{}x{}", n.nrows(), n.ncols())));
    }
    Ok(())
}

pub fn class_name(c: &LineClass) -> &'static str {
    match c {
        LineClass::IdenticallyZero => "identically-zero",
        LineClass::ConstantNonzero => "constant-nonzero",
        LineClass::NonconstantRootFree => "nonconstant-no-root-in-K",
        LineClass::HasRoot(_) => "has-root-in-K",
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    t: String,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "N")]
    n: String,
    field: String,
    table: Vec<TableJson>,
    verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<String>,
}
