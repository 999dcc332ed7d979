//! JSON files read and written by the command-line tool.
//!
//! Matrix entries are always strings (`"3"`, `"-1/2"`) so rationals of any
//! size survive a round trip. Key order is the field order of the structs
//! below, and output is pretty-printed with a trailing newline, so identical
//! results serialize to identical bytes.

use finedecomp::{BlockForm, BlockKind, Decomposition, FieldSpec, Matrix, Outcome, VerifyReport};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"kind":"fp","p":7}` or `{"kind":"q"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDescriptor {
    Fp { p: u64 },
    Q,
}

impl FieldDescriptor {
    pub fn to_field(self) -> Result<FieldSpec, CliError> {
        Ok(match self {
            FieldDescriptor::Fp { p } => FieldSpec::prime(p)?,
            FieldDescriptor::Q => FieldSpec::rationals(),
        })
    }

    pub fn of(field: FieldSpec) -> Self {
        match field.modulus() {
            Some(p) => FieldDescriptor::Fp { p: p.into() },
            None => FieldDescriptor::Q,
        }
    }
}

/// Parses the `--field` flag: `fp:<p>` or `q`.
pub fn parse_field_flag(text: &str) -> Result<FieldSpec, CliError> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::rationals());
    }
    let p = text
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::Usage(format!("bad field `{text}`: expected fp:<p> or q")))?;
    Ok(FieldSpec::prime(p)?)
}

/// One matrix, optionally with the nilpotence bound `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldDescriptor,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl InstanceFile {
    pub fn from_matrix(m: &Matrix, k: Option<usize>) -> Self {
        let entries = (0..m.rows())
            .map(|i| m.row(i).iter().map(ToString::to_string).collect())
            .collect();
        InstanceFile {
            field: FieldDescriptor::of(m.field()),
            rows: m.rows(),
            cols: m.cols(),
            entries,
            k,
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        let field = self.field.to_field()?;
        if self.rows == 0 || self.cols == 0 {
            return Err(CliError::Parse("rows and cols must be positive".into()));
        }
        if self.entries.len() != self.rows {
            return Err(CliError::Parse(format!(
                "entries: expected {} rows, found {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(CliError::Parse(format!(
                    "entries[{i}]: expected {} columns, found {}",
                    self.cols,
                    row.len()
                )));
            }
            for (j, text) in row.iter().enumerate() {
                let s = field
                    .parse_scalar(text)
                    .map_err(|e| CliError::Parse(format!("entries[{i}][{j}] = {text:?}: {e}")))?;
                data.push(s);
            }
        }
        Ok(Matrix::from_entries(field, self.rows, self.cols, data)?)
    }
}

/// Parses an instance file into a matrix and its optional `k`.
pub fn parse_instance(text: &str) -> Result<(Matrix, Option<usize>), CliError> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok((file.to_matrix()?, file.k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Decomposed,
    Infeasible,
    Verified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    #[serde(rename = "rank_A")]
    pub rank_a: usize,
    #[serde(rename = "index_of_N", default, skip_serializing_if = "Option::is_none")]
    pub index_of_n: Option<usize>,
    pub n: usize,
    pub threshold_ceil_n_over_k: usize,
}

/// Output of `decompose` and `verify`. `U` and `N` are present only for
/// `decomposed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub status: Status,
    pub k: usize,
    #[serde(rename = "U", default, skip_serializing_if = "Option::is_none")]
    pub u: Option<InstanceFile>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<InstanceFile>,
    pub certificate: CertificateFile,
}

impl ResultFile {
    pub fn from_outcome(outcome: &Outcome) -> Self {
        match outcome {
            Outcome::Decomposed(d) => Self::from_decomposition(d),
            &Outcome::Infeasible { rank, n, k } => ResultFile {
                status: Status::Infeasible,
                k,
                u: None,
                n: None,
                certificate: CertificateFile {
                    rank_a: rank,
                    index_of_n: None,
                    n,
                    threshold_ceil_n_over_k: n.div_ceil(k),
                },
            },
        }
    }

    fn from_decomposition(d: &Decomposition) -> Self {
        let n = d.u.rows();
        ResultFile {
            status: Status::Decomposed,
            k: d.k,
            u: Some(InstanceFile::from_matrix(&d.u, None)),
            n: Some(InstanceFile::from_matrix(&d.n, None)),
            certificate: CertificateFile {
                rank_a: d.certificate.rank_a,
                index_of_n: Some(d.certificate.index_n),
                n,
                threshold_ceil_n_over_k: n.div_ceil(d.k),
            },
        }
    }

    pub fn from_report(a: &Matrix, k: usize, report: &VerifyReport) -> Self {
        let n = a.rows();
        ResultFile {
            status: if report.overall {
                Status::Verified
            } else {
                Status::Failed
            },
            k,
            u: None,
            n: None,
            certificate: CertificateFile {
                rank_a: a.rank(),
                index_of_n: report.index_of_n,
                n,
                threshold_ceil_n_over_k: n.div_ceil(k),
            },
        }
    }
}

pub fn parse_result(text: &str) -> Result<ResultFile, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

/// Canonical serialization shared by every file the tool writes.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data always serializes");
    out.push('\n');
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BlockFile {
    /// Companion of `q` with `q(0) != 0`; coefficients in ascending order.
    InvertibleCompanion {
        coeffs: Vec<String>,
    },
    ZeroOne,
    XPower {
        m: usize,
    },
}

/// Output of `canon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonFile {
    pub blocks: Vec<BlockFile>,
    pub transform: InstanceFile,
}

impl CanonFile {
    pub fn from_form(form: &BlockForm) -> Self {
        let blocks = form
            .blocks
            .iter()
            .map(|b| match b.kind() {
                BlockKind::InvertibleCompanion(q) => BlockFile::InvertibleCompanion {
                    coeffs: q.coeffs().iter().map(ToString::to_string).collect(),
                },
                BlockKind::ZeroOne => BlockFile::ZeroOne,
                BlockKind::XPower(m) => BlockFile::XPower { m: *m },
            })
            .collect();
        CanonFile {
            blocks,
            transform: InstanceFile::from_matrix(&form.transform, None),
        }
    }
}
