//! Text formats: matrix documents in JSON and CSV, the `1,2;0,1` matrix
//! literal, and complex numbers written as `re,im`.
//!
//! Matrix entries are always written as decimal strings so that values
//! beyond 64 bits survive the round trip.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::dercat::EulerMatrix;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::partitions::{parse_list, subset_to_partition, BoxContext, Partition, SubsetIndex};
use crate::stokes::StokesMatrix;

/// A square matrix indexed by the box of `Gr(r, n)`, with its legend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub ctx: BoxContext,
    pub order: Vec<SubsetIndex>,
    pub partitions: Vec<Partition>,
    pub matrix: ExactMatrix,
}

impl MatrixDocument {
    pub fn new(ctx: BoxContext, order: Vec<SubsetIndex>, matrix: ExactMatrix) -> Result<Self> {
        if order.len() != matrix.rows() || !matrix.is_square() {
            return Err(Error::LengthMismatch { expected: order.len(), actual: matrix.rows() });
        }
        if order.iter().any(|k| k.len() != ctx.r || k.indices().last().is_some_and(|&x| x > ctx.n)) {
            return Err(Error::parse("order labels do not match the box"));
        }
        let partitions = order.iter().map(|k| subset_to_partition(k, ctx)).collect();
        Ok(MatrixDocument { ctx, order, partitions, matrix })
    }

    pub fn to_json_value(&self) -> Value {
        let order: Vec<&[usize]> = self.order.iter().map(|k| k.indices()).collect();
        let partitions: Vec<&[i64]> = self.partitions.iter().map(|p| p.parts()).collect();
        let matrix: Vec<Vec<String>> =
            self.matrix.iter_rows().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
        json!({
            "r": self.ctx.r,
            "n": self.ctx.n,
            "order": order,
            "partitions": partitions,
            "matrix": matrix,
        })
    }

    /// Compact JSON with sorted keys; identical input gives identical bytes.
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        let field = |name: &str| v.get(name).ok_or_else(|| Error::parse(format!("missing field {name:?}")));
        let as_usize = |x: &Value| -> Result<usize> {
            x.as_u64().map(|u| u as usize).ok_or_else(|| Error::parse("expected a nonnegative integer"))
        };
        let ctx = BoxContext::new(as_usize(field("r")?)?, as_usize(field("n")?)?)?;
        let order = field("order")?
            .as_array()
            .ok_or_else(|| Error::parse("order must be an array"))?
            .iter()
            .map(|k| {
                let idx = k
                    .as_array()
                    .ok_or_else(|| Error::parse("order entries must be arrays"))?
                    .iter()
                    .map(as_usize)
                    .collect::<Result<Vec<_>>>()?;
                SubsetIndex::new(idx, ctx.n)
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = field("matrix")?
            .as_array()
            .ok_or_else(|| Error::parse("matrix must be an array"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::parse("matrix rows must be arrays"))?
                    .iter()
                    .map(|x| x.as_str().ok_or_else(|| Error::parse("entries must be strings")).and_then(parse_bigint))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let doc = MatrixDocument::new(ctx, order, ExactMatrix::from_rows(rows)?)?;
        if let Some(parts) = v.get("partitions") {
            let listed: Vec<Vec<i64>> = serde_json::from_value(parts.clone()).map_err(|e| Error::parse(e.to_string()))?;
            if listed.iter().map(Vec::as_slice).ne(doc.partitions.iter().map(Partition::parts)) {
                return Err(Error::parse("partitions disagree with order"));
            }
        }
        Ok(doc)
    }

    /// Header row of subset labels, then one row per label.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.order.iter().map(|k| k.to_string()));
        w.write_record(&header).expect("writing to memory");
        for (k, row) in self.order.iter().zip(self.matrix.iter_rows()) {
            let mut rec = vec![k.to_string()];
            rec.extend(row.iter().map(|x| x.to_string()));
            w.write_record(&rec).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
    }

    /// Inverse of [`to_csv`](Self::to_csv). `r` is the label length and `n`
    /// the largest index, which always appears in the last label.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
        let mut records = reader.records();
        let header = records
            .next()
            .ok_or_else(|| Error::parse("empty csv"))?
            .map_err(|e| Error::parse(e.to_string()))?;
        let order: Vec<SubsetIndex> = header.iter().skip(1).map(str::parse).collect::<Result<_>>()?;
        let r = order.first().map_or(0, SubsetIndex::len);
        let n = order.iter().filter_map(|k| k.indices().last().copied()).max().unwrap_or(0);
        let ctx = BoxContext::new(r, n)?;
        let mut rows = Vec::with_capacity(order.len());
        for (i, rec) in records.enumerate() {
            let rec = rec.map_err(|e| Error::parse(e.to_string()))?;
            let label: SubsetIndex = rec.get(0).unwrap_or_default().parse()?;
            if order.get(i) != Some(&label) {
                return Err(Error::parse(format!("row {i} label {label} does not match header")));
            }
            rows.push(rec.iter().skip(1).map(parse_bigint).collect::<Result<Vec<_>>>()?);
        }
        MatrixDocument::new(ctx, order, ExactMatrix::from_rows(rows)?)
    }
}

impl From<&EulerMatrix> for MatrixDocument {
    fn from(e: &EulerMatrix) -> Self {
        let order = crate::partitions::enumerate_subsets(e.ctx);
        MatrixDocument { ctx: e.ctx, order, partitions: e.order.clone(), matrix: e.entries.clone() }
    }
}

impl From<&StokesMatrix> for MatrixDocument {
    fn from(s: &StokesMatrix) -> Self {
        let partitions = s.order.iter().map(|k| subset_to_partition(k, s.ctx)).collect();
        MatrixDocument { ctx: s.ctx, order: s.order.clone(), partitions, matrix: s.entries.clone() }
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix('-').unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(format!("bad integer {s:?}")));
    }
    t.parse().map_err(|_| Error::parse(format!("bad integer {s:?}")))
}

/// Parses a matrix literal: rows separated by `;`, entries by `,`.
pub fn parse_matrix_literal(s: &str) -> Result<ExactMatrix> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(ExactMatrix::zeros(0, 0));
    }
    let rows = s
        .split(';')
        .map(|row| row.split(',').map(parse_bigint).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows)
}

/// Parses `"re,im"` or a bare real `"re"`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let parse = |x: &str| -> Result<f64> {
        let v: f64 = x.trim().parse().map_err(|_| Error::parse(format!("bad number {x:?}")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::parse(format!("non-finite number {x:?}")))
        }
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(s)?, 0.0)),
    }
}

/// Parses a comma-separated list of 1-based indices.
pub fn parse_subset(s: &str) -> Result<SubsetIndex> {
    s.parse()
}

/// Parses a comma-separated partition; negative entries are rejected.
pub fn parse_partition(s: &str) -> Result<Partition> {
    Partition::new(parse_list::<i64>(s)?)
}
