//! Small exact linear algebra: square integer matrices for the generator
//! actions, and a sparse rational row reduction for nullspaces. Everything
//! stays in exact arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// A square integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = IntMatrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(k, c);
                    if b != 0 {
                        let cell = &mut out.data[r * d + c];
                        *cell = cell
                            .checked_add(a.checked_mul(b).expect("matrix entry overflow"))
                            .expect("matrix entry overflow");
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; row/column index `(a, b)` maps to `a * other.dim + b`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let d1 = self.dim;
        let d2 = other.dim;
        let mut out = IntMatrix::zeros(d1 * d2);
        for r1 in 0..d1 {
            for c1 in 0..d1 {
                let a = self.get(r1, c1);
                if a == 0 {
                    continue;
                }
                for r2 in 0..d2 {
                    for c2 in 0..d2 {
                        let b = other.get(r2, c2);
                        if b != 0 {
                            out.set(r1 * d2 + r2, c1 * d2 + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Principal submatrix on `indices`, rows and columns relabeled in the
    /// given order.
    pub fn submatrix(&self, indices: &[usize]) -> IntMatrix {
        let d = indices.len();
        let mut out = IntMatrix::zeros(d);
        for (r, &ir) in indices.iter().enumerate() {
            for (c, &ic) in indices.iter().enumerate() {
                out.set(r, c, self.get(ir, ic));
            }
        }
        out
    }

    /// The unique nonzero row of column `col` when the column is a standard
    /// basis vector; `None` for a zero column.
    pub fn unit_column_target(&self, col: usize) -> Option<usize> {
        let mut target = None;
        for r in 0..self.dim {
            match self.get(r, col) {
                0 => {}
                1 if target.is_none() => target = Some(r),
                _ => panic!("column {col} is not a unit or zero column"),
            }
        }
        target
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c)).collect())
            .collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for row in self.to_rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Incremental sparse row reduction over the rationals. Rows are sparse
/// maps from variable index to coefficient; pivots are kept normalized
/// with leading coefficient 1.
pub struct RowReducer {
    nvars: usize,
    pivots: BTreeMap<usize, BTreeMap<usize, Rat>>,
}

impl RowReducer {
    pub fn new(nvars: usize) -> Self {
        RowReducer {
            nvars,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.nvars - self.pivots.len()
    }

    /// Reduces `row` against the current pivots; a surviving row becomes a
    /// new pivot. Returns true when the rank grew.
    pub fn insert(&mut self, mut row: BTreeMap<usize, Rat>) -> bool {
        row.retain(|_, v| !v.is_zero());
        while let Some((&col, _)) = row.iter().next() {
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = row.remove(&col).expect("leading entry present");
                    for (&c, v) in pivot {
                        if c == col {
                            continue;
                        }
                        let entry = row.entry(c).or_insert_with(Rat::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let lead = row.get(&col).expect("leading entry present").clone();
                    for v in row.values_mut() {
                        *v /= &lead;
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
        false
    }

    /// Basis of the solution space of all inserted rows, one dense vector
    /// per free variable.
    pub fn nullspace_basis(mut self) -> Vec<Vec<Rat>> {
        // Full back substitution so every pivot row mentions free
        // variables only.
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for &c in cols.iter().rev() {
            let prow = self.pivots[&c].clone();
            for (&c2, row2) in self.pivots.iter_mut() {
                if c2 >= c {
                    continue;
                }
                if let Some(factor) = row2.remove(&c) {
                    for (&pc, pv) in &prow {
                        if pc == c {
                            continue;
                        }
                        let entry = row2.entry(pc).or_insert_with(Rat::zero);
                        *entry -= &factor * pv;
                        if entry.is_zero() {
                            row2.remove(&pc);
                        }
                    }
                }
            }
        }
        let free: Vec<usize> = (0..self.nvars)
            .filter(|v| !self.pivots.contains_key(v))
            .collect();
        free.into_iter()
            .map(|f| {
                let mut x = vec![Rat::zero(); self.nvars];
                x[f] = Rat::one();
                for (&c, row) in &self.pivots {
                    if let Some(v) = row.get(&f) {
                        x[c] = -v.clone();
                    }
                }
                x
            })
            .collect()
    }
}

/// Nullspace basis of a sparse homogeneous system.
pub fn nullspace(rows: Vec<BTreeMap<usize, Rat>>, nvars: usize) -> Vec<Vec<Rat>> {
    let mut reducer = RowReducer::new(nvars);
    for row in rows {
        reducer.insert(row);
    }
    reducer.nullspace_basis()
}
