//! File formats: the JSON matrix schema shared by every subcommand, a CSV
//! alternative with `re+imj` tokens, and the JSON schemas for parameter
//! sets, Kraus sets, Bloch vectors and relaxation rates.
//!
//! JSON matrices are objects `{"rows": r, "cols": c, "data": [[[re, im],
//! ...], ...]}` with `data` a row-major array of rows; serialization uses
//! shortest round-trip float formatting, so write-then-read reproduces every
//! entry bit for bit.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context};
use serde::{Deserialize, Serialize};

use psdkit_core::relax::RelaxationRates;
use psdkit_core::schur::{Contraction, SchurParameterSet};
use psdkit_core::{Complex64, ComplexMatrix, Tolerance};

/// JSON schema of a dense complex matrix.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            data: (0..m.rows())
                .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> anyhow::Result<ComplexMatrix> {
        if self.data.len() != self.rows {
            bail!(
                "matrix JSON declares {} rows but data has {}",
                self.rows,
                self.data.len()
            );
        }
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.data.iter().enumerate() {
            if row.len() != self.cols {
                bail!(
                    "matrix JSON declares {} cols but row {} has {}",
                    self.cols,
                    i,
                    row.len()
                );
            }
            entries.extend(row.iter().map(|&[re, im]| Complex64::new(re, im)));
        }
        Ok(ComplexMatrix::new(self.rows, self.cols, entries))
    }
}

pub fn matrix_to_json_string(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("matrix serializes")
}

pub fn matrix_from_json_str(s: &str) -> anyhow::Result<ComplexMatrix> {
    let mj: MatrixJson = serde_json::from_str(s).context("parsing matrix JSON")?;
    mj.to_matrix()
}

/// Format one complex entry as a CSV token `re+imj` / `re-imj`.
pub fn format_complex_token(z: Complex64) -> String {
    if z.im >= 0.0 {
        format!("{}+{}j", z.re, z.im)
    } else {
        format!("{}-{}j", z.re, -z.im)
    }
}

/// Parse a CSV token: `re`, `imj`, or `re+imj` with either sign.
pub fn parse_complex_token(token: &str) -> anyhow::Result<Complex64> {
    let t = token.trim();
    if t.is_empty() {
        bail!("empty matrix token");
    }
    if let Some(body) = t.strip_suffix('j').or_else(|| t.strip_suffix('J')) {
        // Split at the last +/- that is not a leading sign or an exponent
        // sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
                split = Some(i);
                break;
            }
        }
        match split {
            Some(i) => {
                let re: f64 = body[..i]
                    .parse()
                    .with_context(|| format!("bad real part in {t:?}"))?;
                let sign = if bytes[i] as char == '-' { -1.0 } else { 1.0 };
                let imag_str = &body[i + 1..];
                let im: f64 = if imag_str.is_empty() {
                    1.0
                } else {
                    imag_str
                        .parse()
                        .with_context(|| format!("bad imaginary part in {t:?}"))?
                };
                Ok(Complex64::new(re, sign * im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else {
                    body.parse()
                        .with_context(|| format!("bad imaginary part in {t:?}"))?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().with_context(|| format!("bad real token {t:?}"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

pub fn matrix_to_csv(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&z| format_complex_token(z)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(text: &str) -> anyhow::Result<ComplexMatrix> {
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: anyhow::Result<Vec<Complex64>> =
            line.split(',').map(parse_complex_token).collect();
        rows.push(row?);
    }
    if rows.is_empty() {
        bail!("CSV matrix has no rows");
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        bail!("CSV matrix rows have unequal lengths");
    }
    Ok(ComplexMatrix::from_rows(&rows))
}

/// JSON schema of a Schur parameter set; `k` and `j` are 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsJson {
    pub d: usize,
    pub block: usize,
    #[serde(rename = "L")]
    pub roots: Vec<MatrixJson>,
    pub gamma: Vec<GammaEntryJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaEntryJson {
    pub k: usize,
    pub j: usize,
    pub value: MatrixJson,
}

impl ParamsJson {
    pub fn from_params(p: &SchurParameterSet) -> Self {
        ParamsJson {
            d: p.block_count(),
            block: p.block_dim(),
            roots: p.roots().iter().map(MatrixJson::from_matrix).collect(),
            gamma: p
                .gammas()
                .map(|(&(k, j), g)| GammaEntryJson {
                    k: k + 1,
                    j: j + 1,
                    value: MatrixJson::from_matrix(g.matrix()),
                })
                .collect(),
        }
    }

    pub fn to_params(&self, tol: &Tolerance) -> anyhow::Result<SchurParameterSet> {
        if self.roots.len() != self.d {
            bail!("parameter JSON declares d={} but has {} roots", self.d, self.roots.len());
        }
        let roots: anyhow::Result<Vec<ComplexMatrix>> =
            self.roots.iter().map(MatrixJson::to_matrix).collect();
        let mut gammas = Vec::new();
        for e in &self.gamma {
            if e.k == 0 || e.j == 0 {
                bail!("gamma indices are 1-based");
            }
            let c = Contraction::new(e.value.to_matrix()?, tol)
                .map_err(|err| anyhow!("gamma ({}, {}): {err}", e.k, e.j))?;
            gammas.push(((e.k - 1, e.j - 1), c));
        }
        SchurParameterSet::new(self.block, roots?, gammas)
            .map_err(|e| anyhow!("invalid parameter set: {e}"))
    }
}

/// JSON schema of a Kraus set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KrausJson {
    pub d_in: usize,
    pub d_out: usize,
    pub ops: Vec<MatrixJson>,
}

impl KrausJson {
    pub fn from_kraus(k: &psdkit_core::channel::KrausSet) -> Self {
        KrausJson {
            d_in: k.d_in(),
            d_out: k.d_out(),
            ops: k.ops().iter().map(MatrixJson::from_matrix).collect(),
        }
    }

    pub fn to_kraus(&self) -> anyhow::Result<psdkit_core::channel::KrausSet> {
        let ops: anyhow::Result<Vec<ComplexMatrix>> =
            self.ops.iter().map(MatrixJson::to_matrix).collect();
        psdkit_core::channel::KrausSet::new(self.d_in, self.d_out, ops?)
            .map_err(|e| anyhow!("invalid Kraus set: {e}"))
    }
}

/// Bloch coordinates on disk: either a bare array or `{"dim": d, "beta":
/// [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BetaJson {
    Bare(Vec<f64>),
    Tagged { dim: usize, beta: Vec<f64> },
}

impl BetaJson {
    pub fn coords(&self) -> &[f64] {
        match self {
            BetaJson::Bare(v) => v,
            BetaJson::Tagged { beta, .. } => beta,
        }
    }

    pub fn dim_hint(&self) -> Option<usize> {
        match self {
            BetaJson::Bare(_) => None,
            BetaJson::Tagged { dim, .. } => Some(*dim),
        }
    }
}

/// Symmetric rate table on disk: either a full square matrix or a map of
/// 1-based upper pairs `{"12": x, "13": x, ...}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RateTableJson {
    Pairs(BTreeMap<String, f64>),
    Matrix(Vec<Vec<f64>>),
}

impl RateTableJson {
    /// Expand to a full symmetric `n x n` table with zero diagonal.
    pub fn to_full(&self, n: usize) -> anyhow::Result<Vec<f64>> {
        match self {
            RateTableJson::Matrix(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    bail!("rate matrix must be {n} x {n}");
                }
                Ok(rows.iter().flatten().copied().collect())
            }
            RateTableJson::Pairs(map) => {
                let mut full = vec![0.0; n * n];
                for (key, &v) in map {
                    let (k, j) = parse_pair_key(key, n)?;
                    full[k * n + j] = v;
                    full[j * n + k] = v;
                }
                Ok(full)
            }
        }
    }
}

/// Parse a 1-based pair key such as `"12"` or `"3,4"` into 0-based indices.
fn parse_pair_key(key: &str, n: usize) -> anyhow::Result<(usize, usize)> {
    let (a, b) = if let Some((x, y)) = key.split_once(',') {
        (x.trim().parse::<usize>()?, y.trim().parse::<usize>()?)
    } else if key.len() == 2 && n <= 9 {
        let mut chars = key.chars();
        let x = chars.next().unwrap().to_digit(10).context("bad pair key")? as usize;
        let y = chars.next().unwrap().to_digit(10).context("bad pair key")? as usize;
        (x, y)
    } else {
        bail!("pair key {key:?} must be two digits or 'k,j'");
    };
    if a == 0 || b == 0 || a > n || b > n || a == b {
        bail!("pair key {key:?} out of range for {n} levels");
    }
    Ok((a - 1, b - 1))
}

/// JSON schema of a relaxation-rate file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatesJson {
    #[serde(default)]
    pub levels: Option<usize>,
    /// Population rates: full matrix, `gamma[k][n]` the rate from level
    /// `n+1` to `k+1`.
    #[serde(default)]
    pub gamma: Option<Vec<Vec<f64>>>,
    #[serde(default, rename = "Gamma_p")]
    pub gamma_p: Option<RateTableJson>,
    #[serde(rename = "Gamma_d")]
    pub gamma_d: RateTableJson,
}

impl RatesJson {
    pub fn to_rates(&self, default_levels: usize) -> anyhow::Result<RelaxationRates> {
        let n = self.levels.unwrap_or(default_levels);
        let gamma = match &self.gamma {
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    bail!("gamma must be {n} x {n}");
                }
                rows.iter().flatten().copied().collect()
            }
            None => vec![0.0; n * n],
        };
        let gamma_p = match &self.gamma_p {
            Some(t) => t.to_full(n)?,
            None => vec![0.0; n * n],
        };
        let gamma_d = self.gamma_d.to_full(n)?;
        RelaxationRates::new(n, gamma, gamma_p, gamma_d)
            .map_err(|e| anyhow!("invalid rates: {e}"))
    }
}
