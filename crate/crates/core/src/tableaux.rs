//! Standard reverse composition tableaux (SRCTs), their skew analogues,
//! validation, exhaustive enumeration, descent data, column words, and the
//! box-adding/growth-word correspondence.
//!
//! An SRCT of shape `α ⊨ n` is a bijective filling of the reverse
//! composition diagram by `{1..n}` with
//!
//! 1. rows strictly decreasing left to right,
//! 2. the first column strictly increasing top to bottom,
//! 3. the triple rule: for rows `i < j`, if `τ(i,k) > τ(j,k+1)` then
//!    `τ(i,k+1)` exists and `τ(i,k+1) > τ(j,k+1)`.
//!
//! Skew fillings live on the cells of `α // β` only; inner cells count as
//! `∞` inside the triple rule and nowhere else.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::compositions::{Composition, SkewShapePair};
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("filling has {found} rows but the shape has {expected}")]
    RowCountMismatch { expected: usize, found: usize },
    #[error("row {row} holds {found} entries but the shape asks for {expected}")]
    ShapeMismatch { row: usize, expected: usize, found: usize },
    #[error("entries are not a bijection onto 1..={size}")]
    NotBijective { size: usize },
    #[error("row rule violated at cell ({row},{col}): rows must strictly decrease")]
    RowNotDecreasing { row: usize, col: usize },
    #[error("first-column rule violated at row {row}: entries must strictly increase")]
    FirstColumnNotIncreasing { row: usize },
    #[error("triple rule violated by cells ({},{}) and ({},{})", upper.0, upper.1, lower.0, lower.1)]
    TripleRule {
        upper: (usize, usize),
        lower: (usize, usize),
    },
}

/// Value of a diagram cell: absent, an inner (skew) cell, or an entry.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Absent,
    Inner,
    Entry(usize),
}

/// Shared validator for straight and skew fillings. `outer[i]`/`inner[i]`
/// are total/inner cells of row `i` (0-based); `rows` holds the skew
/// entries of each row, left to right.
fn validate_grid(outer: &[usize], inner: &[usize], rows: &[Vec<usize>]) -> Result<(), TableauError> {
    if rows.len() != outer.len() {
        return Err(TableauError::RowCountMismatch {
            expected: outer.len(),
            found: rows.len(),
        });
    }
    let mut size = 0;
    for (i, row) in rows.iter().enumerate() {
        let expected = outer[i] - inner[i];
        if row.len() != expected {
            return Err(TableauError::ShapeMismatch {
                row: i + 1,
                expected,
                found: row.len(),
            });
        }
        size += expected;
    }
    let mut seen = vec![false; size + 1];
    for row in rows {
        for &e in row {
            if e == 0 || e > size || seen[e] {
                return Err(TableauError::NotBijective { size });
            }
            seen[e] = true;
        }
    }

    let at = |r: usize, c: usize| -> Cell {
        if r == 0 || r > outer.len() || c == 0 || c > outer[r - 1] {
            Cell::Absent
        } else if c <= inner[r - 1] {
            Cell::Inner
        } else {
            Cell::Entry(rows[r - 1][c - inner[r - 1] - 1])
        }
    };

    // Rows strictly decrease across the skew entries.
    for (i, row) in rows.iter().enumerate() {
        for w in 1..row.len() {
            if row[w - 1] <= row[w] {
                return Err(TableauError::RowNotDecreasing {
                    row: i + 1,
                    col: inner[i] + w + 1,
                });
            }
        }
    }

    // First column strictly increases over the rows whose column-1 cell is
    // a genuine entry.
    let mut prev: Option<usize> = None;
    for r in 1..=outer.len() {
        if let Cell::Entry(e) = at(r, 1) {
            if let Some(p) = prev {
                if p >= e {
                    return Err(TableauError::FirstColumnNotIncreasing { row: r });
                }
            }
            prev = Some(e);
        }
    }

    // Triple rule, with inner cells read as infinity.
    for j in 2..=outer.len() {
        for c in 2..=outer[j - 1] {
            let b = match at(j, c) {
                Cell::Entry(b) => b,
                _ => continue,
            };
            for i in 1..j {
                let triggered = match at(i, c - 1) {
                    Cell::Absent => false,
                    Cell::Inner => true,
                    Cell::Entry(a) => a > b,
                };
                if !triggered {
                    continue;
                }
                let ok = match at(i, c) {
                    Cell::Absent => false,
                    Cell::Inner => true,
                    Cell::Entry(v) => v > b,
                };
                if !ok {
                    return Err(TableauError::TripleRule {
                        upper: (i, c - 1),
                        lower: (j, c),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Common surface of straight and skew SRCTs: entry geometry, flips'
/// raw material, descent data, and column words.
pub trait Tableau: Clone + PartialEq + Eq + std::hash::Hash {
    /// Number of entries.
    fn size(&self) -> usize;
    /// `(row, column)` of `entry`, 1-based.
    fn position_of(&self, entry: usize) -> (usize, usize);
    /// New filling with the entries `a` and `b` exchanged in place.
    fn swap_entries(&self, a: usize, b: usize) -> Self;
    /// First violated tableau rule, if any.
    fn validate(&self) -> Result<(), TableauError>;

    /// `des(τ) = {i : i+1 appears weakly right of i}`.
    fn descent_set(&self) -> BTreeSet<usize> {
        let n = self.size();
        let mut out = BTreeSet::new();
        for i in 1..n {
            if self.position_of(i + 1).1 >= self.position_of(i).1 {
                out.insert(i);
            }
        }
        out
    }

    /// `comp(τ) = comp(des(τ))`.
    fn descent_composition(&self) -> Composition {
        Composition::from_subset(&self.descent_set(), self.size())
            .expect("descent set lies in 1..n")
    }

    /// Column word: entries of each column top to bottom, columns left to
    /// right, read as a permutation in one-line notation.
    fn column_word(&self) -> Permutation {
        let n = self.size();
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&e| {
            let (r, c) = self.position_of(e);
            (c, r)
        });
        Permutation::from_word(order).expect("entries are a bijection")
    }

    /// Per-column standardizations `st_1(τ) … st_max(τ)`.
    fn standardized_column_word(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut cols: Vec<Vec<(usize, usize)>> = Vec::new();
        for e in 1..=n {
            let (r, c) = self.position_of(e);
            if cols.len() < c {
                cols.resize(c, Vec::new());
            }
            cols[c - 1].push((r, e));
        }
        cols.into_iter()
            .map(|mut col| {
                col.sort_unstable();
                let entries: Vec<usize> = col.iter().map(|&(_, e)| e).collect();
                standardize(&entries)
            })
            .collect()
    }
}

fn standardize(word: &[usize]) -> Vec<usize> {
    word.iter()
        .map(|&w| word.iter().filter(|&&v| v < w).count() + 1)
        .collect()
}

/// A standard reverse composition tableau of straight shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Srct {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl Srct {
    pub fn new(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let t = Srct { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)`, 1-based, if the cell exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row - 1).and_then(|r| r.get(col - 1)).copied()
    }
}

impl Tableau for Srct {
    fn size(&self) -> usize {
        self.shape.size()
    }

    fn position_of(&self, entry: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return (r + 1, c + 1);
            }
        }
        panic!("entry {entry} not present in tableau");
    }

    fn swap_entries(&self, a: usize, b: usize) -> Self {
        let mut rows = self.rows.clone();
        for row in &mut rows {
            for e in row.iter_mut() {
                if *e == a {
                    *e = b;
                } else if *e == b {
                    *e = a;
                }
            }
        }
        Srct {
            shape: self.shape.clone(),
            rows,
        }
    }

    fn validate(&self) -> Result<(), TableauError> {
        let inner = vec![0; self.shape.len()];
        validate_grid(self.shape.parts(), &inner, &self.rows)
    }
}

impl fmt::Display for Srct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl fmt::Debug for Srct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Srct[{self}]")
    }
}

/// A skew standard reverse composition tableau; `rows` holds the entries of
/// the skew cells only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewSrct {
    shape: SkewShapePair,
    rows: Vec<Vec<usize>>,
}

impl SkewSrct {
    pub fn new(shape: SkewShapePair, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let t = SkewSrct { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShapePair {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)`, 1-based; `None` on inner or absent cells.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let inner = self.shape.inner_len(row);
        if col <= inner {
            return None;
        }
        self.rows
            .get(row - 1)
            .and_then(|r| r.get(col - inner - 1))
            .copied()
    }
}

impl Tableau for SkewSrct {
    fn size(&self) -> usize {
        self.shape.size()
    }

    fn position_of(&self, entry: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return (r + 1, self.shape.inner_len(r + 1) + c + 1);
            }
        }
        panic!("entry {entry} not present in tableau");
    }

    fn swap_entries(&self, a: usize, b: usize) -> Self {
        let mut rows = self.rows.clone();
        for row in &mut rows {
            for e in row.iter_mut() {
                if *e == a {
                    *e = b;
                } else if *e == b {
                    *e = a;
                }
            }
        }
        SkewSrct {
            shape: self.shape.clone(),
            rows,
        }
    }

    fn validate(&self) -> Result<(), TableauError> {
        let outer = self.shape.outer().parts();
        let inner: Vec<usize> = (1..=outer.len()).map(|r| self.shape.inner_len(r)).collect();
        validate_grid(outer, &inner, &self.rows)
    }
}

impl fmt::Display for SkewSrct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl fmt::Debug for SkewSrct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewSrct[{self}]")
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, "|")?;
        }
        for (j, e) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
    }
    Ok(())
}

impl Serialize for Srct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Srct", 2)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Srct {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: Composition,
            rows: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Srct::new(raw.shape, raw.rows).map_err(D::Error::custom)
    }
}

impl Serialize for SkewSrct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SkewSrct", 3)?;
        s.serialize_field("shape", self.shape.outer())?;
        s.serialize_field("inner", self.shape.inner())?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SkewSrct {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: Composition,
            inner: Composition,
            rows: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let pair = SkewShapePair::new(raw.shape, raw.inner).map_err(D::Error::custom)?;
        SkewSrct::new(pair, raw.rows).map_err(D::Error::custom)
    }
}

/// Backtracking enumeration shared by the straight and skew cases: entries
/// are placed from `m` down to 1, always at the next free cell of some row,
/// so rows decrease by construction. Placements that break the first-column
/// or triple rule are pruned with the incremental checks below; every
/// produced filling is validated once more against the full rules.
fn enumerate_fillings(outer: &[usize], inner: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let k = outer.len();
    let counts: Vec<usize> = (0..k).map(|i| outer[i] - inner[i]).collect();
    let total: usize = counts.iter().sum();
    let mut fill = vec![0usize; k];
    let mut rows: Vec<Vec<usize>> = counts.iter().map(|&c| Vec::with_capacity(c)).collect();
    let mut out = Vec::new();

    fn place(
        e: usize,
        outer: &[usize],
        inner: &[usize],
        counts: &[usize],
        fill: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if e == 0 {
            out.push(rows.clone());
            return;
        }
        for i in 0..outer.len() {
            if fill[i] >= counts[i] {
                continue;
            }
            let col = inner[i] + fill[i] + 1;
            if col == 1 {
                // First-column entries grow downward, so every lower row
                // with a column-1 cell must already be started.
                if (i + 1..outer.len()).any(|j| inner[j] == 0 && fill[j] == 0) {
                    continue;
                }
            } else {
                // Placing e at (i, col) while some higher row is occupied
                // through exactly col-1 cells would violate the triple rule.
                if (0..i).any(|j| inner[j] + fill[j] == col - 1) {
                    continue;
                }
            }
            fill[i] += 1;
            rows[i].push(e);
            place(e - 1, outer, inner, counts, fill, rows, out);
            rows[i].pop();
            fill[i] -= 1;
        }
    }

    place(total, outer, inner, &counts, &mut fill, &mut rows, &mut out);
    out
}

fn column_word_key(outer_inner: &[(usize, usize)], rows: &[Vec<usize>]) -> Vec<usize> {
    // (column, row, entry) triples sorted give the column reading word.
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let inner = outer_inner[i].1;
        for (j, &e) in row.iter().enumerate() {
            cells.push((inner + j + 1, i + 1, e));
        }
    }
    cells.sort_unstable();
    cells.into_iter().map(|(_, _, e)| e).collect()
}

/// All SRCTs of shape `α`, each validated, sorted by column word.
pub fn enumerate_srct(shape: &Composition) -> Vec<Srct> {
    let inner = vec![0; shape.len()];
    let geometry: Vec<(usize, usize)> = shape.parts().iter().map(|&p| (p, 0)).collect();
    let mut fillings: Vec<(Vec<usize>, Vec<Vec<usize>>)> = enumerate_fillings(shape.parts(), &inner)
        .into_iter()
        .map(|rows| (column_word_key(&geometry, &rows), rows))
        .collect();
    fillings.sort();
    fillings
        .into_iter()
        .map(|(_, rows)| Srct::new(shape.clone(), rows).expect("enumerated filling is valid"))
        .collect()
}

/// All skew SRCTs of shape `α // β`, validated and sorted by column word.
pub fn enumerate_skew_srct(pair: &SkewShapePair) -> Vec<SkewSrct> {
    let outer = pair.outer().parts();
    let inner: Vec<usize> = (1..=outer.len()).map(|r| pair.inner_len(r)).collect();
    let geometry: Vec<(usize, usize)> = outer
        .iter()
        .zip(inner.iter())
        .map(|(&o, &i)| (o, i))
        .collect();
    let mut fillings: Vec<(Vec<usize>, Vec<Vec<usize>>)> = enumerate_fillings(outer, &inner)
        .into_iter()
        .map(|rows| (column_word_key(&geometry, &rows), rows))
        .collect();
    fillings.sort();
    fillings
        .into_iter()
        .map(|(_, rows)| SkewSrct::new(pair.clone(), rows).expect("enumerated filling is valid"))
        .collect()
}

/// The canonical tableau `τ_α`: row 1 holds `α_1, …, 2, 1` and row `i`
/// holds `x+α_i, …, x+1` with `x = α_1 + ⋯ + α_{i-1}`. It is the unique
/// SRCT of shape `α` with descent composition `α`.
pub fn canonical_tableau(shape: &Composition) -> Srct {
    let mut rows = Vec::with_capacity(shape.len());
    let mut x = 0;
    for &p in shape.parts() {
        rows.push((x + 1..=x + p).rev().collect());
        x += p;
    }
    Srct::new(shape.clone(), rows).expect("canonical tableau is a valid SRCT")
}

/// Box-adding operator `t_i`: `t_1` prefixes a part 1; for `i ≥ 2`, replace
/// the leftmost part equal to `i-1` by `i`, or vanish (`None`) when no such
/// part exists.
pub fn box_add(i: usize, alpha: &Composition) -> Option<Composition> {
    assert!(i >= 1, "box-adding operators are indexed from 1");
    if i == 1 {
        let mut parts = Vec::with_capacity(alpha.len() + 1);
        parts.push(1);
        parts.extend_from_slice(alpha.parts());
        return Some(Composition::new(parts).expect("parts positive"));
    }
    let pos = alpha.parts().iter().position(|&p| p == i - 1)?;
    let mut parts = alpha.parts().to_vec();
    parts[pos] = i;
    Some(Composition::new(parts).expect("parts positive"))
}

/// The growth word of an SRCT: letter `j` is the column of entry `j`.
/// Applying `t_{i_1} ⋯ t_{i_n}` to the empty composition, rightmost letter
/// first, rebuilds the shape.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GrowthWord {
    word: Vec<usize>,
}

impl GrowthWord {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `t_{i_1}(t_{i_2}(… t_{i_n}(∅)))`; `None` if any operator vanishes.
    pub fn apply(&self) -> Option<Composition> {
        let mut alpha = Composition::empty();
        for &i in self.word.iter().rev() {
            alpha = box_add(i, &alpha)?;
        }
        Some(alpha)
    }
}

pub fn growth_word(tableau: &Srct) -> GrowthWord {
    GrowthWord {
        word: (1..=tableau.size())
            .map(|e| tableau.position_of(e).1)
            .collect(),
    }
}
