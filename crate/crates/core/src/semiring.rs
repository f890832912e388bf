//! Vectors and matrices over the max-plus and min-plus semirings.
//!
//! Both semirings share the product `a ⊗ b = a + b`; they differ only in the
//! addition, `max` for [`Flavor::MaxPlus`] and `min` for [`Flavor::MinPlus`].
//! There is no `±∞` element, so neither semiring has an additive identity and
//! no identity matrix exists.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    MaxPlus,
    MinPlus,
}

impl Flavor {
    pub fn dual(self) -> Flavor {
        match self {
            Flavor::MaxPlus => Flavor::MinPlus,
            Flavor::MinPlus => Flavor::MaxPlus,
        }
    }

    /// The semiring addition: `max` or `min`.
    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Flavor::MaxPlus => a.max_of(b),
            Flavor::MinPlus => a.min_of(b),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::MaxPlus => "max-plus",
            Flavor::MinPlus => "min-plus",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "max-plus" => Ok(Flavor::MaxPlus),
            "min-plus" => Ok(Flavor::MinPlus),
            other => Err(format!("unknown flavor {other:?} (expected \"max-plus\" or \"min-plus\")")),
        }
    }
}

/// A point of ℝⁿ, `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropVector(Vec<Scalar>);

impl TropVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(TropVector(entries))
    }

    /// Convenience constructor for integer literals.
    ///
    /// Panics on an empty slice.
    pub fn from_ints(entries: &[i64]) -> Self {
        assert!(!entries.is_empty(), "TropVector needs at least one entry");
        TropVector(entries.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn negate(&self) -> TropVector {
        TropVector(self.0.iter().map(|v| -v).collect())
    }

    pub(crate) fn check_len(&self, other: &TropVector) -> Result<(), Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    pub(crate) fn zip_with(&self, other: &TropVector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<TropVector, Error> {
        self.check_len(other)?;
        Ok(TropVector(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect()))
    }

    /// Exact Euclidean combination `t·self + (1−t)·other`.
    pub fn affine(&self, t: &Scalar, other: &TropVector) -> Result<TropVector, Error> {
        self.zip_with(other, |a, b| Scalar::lerp(t, a, b))
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TropVector {
    type Err = Error;

    /// Parses comma-separated rationals, optionally wrapped in parentheses:
    /// `1,-1/2,0` or `(1,-1/2,0)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        if t.trim().is_empty() {
            return Err(Error::Empty);
        }
        let entries = t.split(',').map(str::parse).collect::<Result<Vec<Scalar>, _>>()?;
        TropVector::new(entries)
    }
}

impl<'a> IntoIterator for &'a TropVector {
    type Item = &'a Scalar;
    type IntoIter = std::slice::Iter<'a, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Dense `rows × cols` matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl TropMatrix {
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * m);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != m {
                return Err(Error::Ragged { row: i, expected: m, found: row.len() });
            }
            data.extend(row);
        }
        TropMatrix::from_row_major(n, m, data)
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[TropVector]) -> Result<Self, Error> {
        let n = columns.first().ok_or(Error::Empty)?.len();
        for c in columns {
            if c.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.len() });
            }
        }
        let m = columns.len();
        let data = (0..n)
            .flat_map(|i| columns.iter().map(move |c| c.get(i).clone()))
            .collect();
        TropMatrix::from_row_major(n, m, data)
    }

    /// Convenience constructor for integer literals. Panics when ragged or empty.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect();
        TropMatrix::from_rows(rows).expect("rectangular non-empty integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row_major(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> TropVector {
        TropVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<TropVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> TropMatrix {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        TropMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn negate(&self) -> TropMatrix {
        TropMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }

    /// `A ⊗ v` (or `A ⊠ v`) for a column vector `v`.
    pub fn apply(&self, flavor: Flavor, v: &TropVector) -> Result<TropVector, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let out = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|k| self.get(i, k) + v.get(k))
                    .reduce(|a, b| flavor.add(&a, &b))
                    .expect("cols >= 1")
            })
            .collect();
        Ok(TropVector(out))
    }

    /// `vᵀ ⊗ A` (or `vᵀ ⊠ A`) for a row vector `v`.
    pub fn apply_left(&self, flavor: Flavor, v: &TropVector) -> Result<TropVector, Error> {
        self.transpose().apply(flavor, v)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Componentwise `max` (MaxPlus) or `min` (MinPlus): the join or meet of
/// `x` and `y` in the coordinate order.
pub fn trop_add(flavor: Flavor, x: &TropVector, y: &TropVector) -> Result<TropVector, Error> {
    x.zip_with(y, |a, b| flavor.add(a, b))
}

/// Tropical scaling `λ ⊗ x`: adds `lambda` to every coordinate.
pub fn scale(lambda: &Scalar, x: &TropVector) -> TropVector {
    TropVector(x.iter().map(|v| v + lambda).collect())
}

/// `A ⊗ B` (MaxPlus) or `A ⊠ B` (MinPlus).
pub fn trop_mat_mul(flavor: Flavor, a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix, Error> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch { expected: a.cols, found: b.rows });
    }
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let entry = (0..a.cols)
                .map(|k| a.get(i, k) + b.get(k, j))
                .reduce(|p, q| flavor.add(&p, &q))
                .expect("inner dimension >= 1");
            data.push(entry);
        }
    }
    TropMatrix::from_row_major(a.rows, b.cols, data)
}

/// The coordinate partial order: `x ≤ y` iff `x_i ≤ y_i` for every `i`.
pub fn leq(x: &TropVector, y: &TropVector) -> Result<bool, Error> {
    x.check_len(y)?;
    Ok(x.iter().zip(y).all(|(a, b)| a <= b))
}

/// `−Aᵀ`. Swaps max-plus and min-plus structure: `−(A ⊗ B)ᵀ = (−Bᵀ) ⊠ (−Aᵀ)`.
pub fn negate_transpose(a: &TropMatrix) -> TropMatrix {
    a.transpose().negate()
}
