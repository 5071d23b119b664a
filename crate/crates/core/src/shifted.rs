//! Shifted and truncated shifted reverse tableaux.
//!
//! The shifted reverse diagram of a strict reverse partition
//! `α = (α_1 < ⋯ < α_k)` has `α_i` cells in row `i`, each row starting one
//! cell left of the row above, so row `i` occupies columns
//! `k-i+1 … k-i+α_i`. A truncation `β` removes cells from the right ends
//! of the last `ℓ(β)` rows. Fillings decrease along rows and increase down
//! columns.
//!
//! Left-shifting the rows of a columns-increasing SRCT of strict reverse
//! partition shape by `i-1` cells lands exactly on these diagrams, which
//! turns class cardinalities into shifted tableau counts and closed-form
//! products (Catalan-style) into checks on both.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::classes::columns_increase;
use crate::compositions::Composition;
use crate::hecke::orbit;
use crate::tableaux::{canonical_tableau, Srct};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShiftedError {
    #[error("{0} is not a strict reverse partition (parts must strictly increase)")]
    NotStrict(Composition),
    #[error("truncation {beta} does not fit inside {alpha}")]
    BadTruncation { alpha: Composition, beta: Composition },
    #[error("left-shift of {0} is not a shifted reverse tableau")]
    NotShiftable(String),
    #[error("unmatched shifted tableau under the right-shift map: {0}")]
    Unmatched(String),
}

/// A (possibly truncated) shifted reverse diagram, stored as its cell set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedShape {
    alpha: Composition,
    beta: Option<Composition>,
    cells: Vec<(usize, usize)>,
}

impl ShiftedShape {
    pub fn new(alpha: Composition) -> Result<Self, ShiftedError> {
        Self::truncated(alpha, None)
    }

    pub fn new_truncated(alpha: Composition, beta: Composition) -> Result<Self, ShiftedError> {
        Self::truncated(alpha, Some(beta))
    }

    fn truncated(alpha: Composition, beta: Option<Composition>) -> Result<Self, ShiftedError> {
        if !alpha.parts().windows(2).all(|w| w[0] < w[1]) {
            return Err(ShiftedError::NotStrict(alpha));
        }
        let k = alpha.len();
        let trunc = |row: usize| -> usize {
            match &beta {
                Some(b) => {
                    let s = b.len();
                    if row + s > k {
                        // Row `row` (1-based) loses β_{row+s-k} cells.
                        b.parts()[row + s - k - 1]
                    } else {
                        0
                    }
                }
                None => 0,
            }
        };
        if let Some(b) = &beta {
            if !b.parts().windows(2).all(|w| w[0] < w[1]) {
                return Err(ShiftedError::NotStrict(b.clone()));
            }
            let s = b.len();
            let fits = s <= k
                && (1..=s).all(|i| b.parts()[s - i] <= alpha.parts()[k - i]);
            if !fits {
                return Err(ShiftedError::BadTruncation {
                    alpha,
                    beta: b.clone(),
                });
            }
        }
        let mut cells = Vec::new();
        for (i, &len) in alpha.parts().iter().enumerate() {
            let row = i + 1;
            let start = k - row + 1;
            for j in 0..len.saturating_sub(trunc(row)) {
                cells.push((row, start + j));
            }
        }
        Ok(ShiftedShape { alpha, beta, cells })
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn beta(&self) -> Option<&Composition> {
        self.beta.as_ref()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }
}

/// A bijective filling of a shifted shape: rows decrease left to right,
/// columns increase top to bottom. Entries are kept aligned with the
/// shape's cell list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ShiftedTableau {
    cells: Vec<((usize, usize), usize)>,
}

impl ShiftedTableau {
    pub fn cells(&self) -> &[((usize, usize), usize)] {
        &self.cells
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.cells
            .iter()
            .find(|&&((r, c), _)| r == row && c == col)
            .map(|&(_, e)| e)
    }
}

/// All fillings of `shape` with decreasing rows and increasing columns.
/// Entries `1..=n` are placed in increasing order; a cell can take the
/// next entry once its right neighbor and upper neighbor (the cells forced
/// to hold smaller values) are filled, so the recursion never dead-ends.
pub fn enumerate_shifted(shape: &ShiftedShape) -> Vec<ShiftedTableau> {
    let cells = shape.cells();
    let n = cells.len();
    let cell_set: HashSet<(usize, usize)> = cells.iter().copied().collect();
    let index: BTreeMap<(usize, usize), usize> = cells
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let mut filled = vec![0usize; n];
    let mut out = Vec::new();

    fn ready(
        cell: (usize, usize),
        cell_set: &HashSet<(usize, usize)>,
        index: &BTreeMap<(usize, usize), usize>,
        filled: &[usize],
    ) -> bool {
        let (r, c) = cell;
        let right = (r, c + 1);
        if cell_set.contains(&right) && filled[index[&right]] == 0 {
            return false;
        }
        let above = (r.wrapping_sub(1), c);
        if r > 1 && cell_set.contains(&above) && filled[index[&above]] == 0 {
            return false;
        }
        true
    }

    fn place(
        entry: usize,
        n: usize,
        cells: &[(usize, usize)],
        cell_set: &HashSet<(usize, usize)>,
        index: &BTreeMap<(usize, usize), usize>,
        filled: &mut Vec<usize>,
        out: &mut Vec<ShiftedTableau>,
    ) {
        if entry > n {
            out.push(ShiftedTableau {
                cells: cells
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (c, filled[i]))
                    .collect(),
            });
            return;
        }
        for i in 0..n {
            if filled[i] == 0 && ready(cells[i], cell_set, index, filled) {
                filled[i] = entry;
                place(entry + 1, n, cells, cell_set, index, filled, out);
                filled[i] = 0;
            }
        }
    }

    place(1, n, cells, &cell_set, &index, &mut filled, &mut out);
    out.sort();
    out
}

/// The columns-increasing class `E_α`, computed as the flip orbit of the
/// canonical tableau.
pub fn canonical_class_members(alpha: &Composition) -> Vec<Srct> {
    orbit(&canonical_tableau(alpha))
}

/// Verified bijection between `E_α` and the shifted reverse tableaux of
/// shape `α`, for a strict reverse partition `α`: shifting row `i` left by
/// `i-1` cells (and back) must match the two sets exactly.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub shape: Composition,
    pub pairs: Vec<(Srct, ShiftedTableau)>,
}

pub fn class_bijection(alpha: &Composition) -> Result<BijectionReport, ShiftedError> {
    let shape = ShiftedShape::new(alpha.clone())?;
    let class = canonical_class_members(alpha);
    let shifted = enumerate_shifted(&shape);
    let k = alpha.len();

    let mut pairs = Vec::with_capacity(class.len());
    let mut image: HashSet<ShiftedTableau> = HashSet::new();
    for member in &class {
        debug_assert!(columns_increase(member));
        let mut cells = Vec::new();
        for (i, row) in member.rows().iter().enumerate() {
            let target_row = i + 1;
            let start = k - target_row + 1;
            for (j, &e) in row.iter().enumerate() {
                cells.push(((target_row, start + j), e));
            }
        }
        cells.sort();
        let candidate = ShiftedTableau { cells };
        if !shifted.contains(&candidate) {
            return Err(ShiftedError::NotShiftable(member.to_string()));
        }
        image.insert(candidate.clone());
        pairs.push((member.clone(), candidate));
    }
    if image.len() != class.len() {
        return Err(ShiftedError::NotShiftable(format!(
            "left shift is not injective on E_{alpha}"
        )));
    }
    for t in &shifted {
        if !image.contains(t) {
            return Err(ShiftedError::Unmatched(format!("{t:?}")));
        }
    }
    Ok(BijectionReport {
        shape: alpha.clone(),
        pairs,
    })
}

/// Exact binomial coefficient.
fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

fn exact_div(numerator: BigUint, denominator: BigUint, what: &str) -> BigUint {
    let r = &numerator % &denominator;
    assert!(r.is_zero(), "{what} division must be exact");
    numerator / denominator
}

/// The `m`-th Catalan number `binom(2m, m) / (m+1)`.
pub fn catalan(m: usize) -> BigUint {
    exact_div(binomial(2 * m, m), BigUint::from(m + 1), "Catalan")
}

/// `g_m = binom(m+1, 2)! / Π_{0 ≤ i < j ≤ m}(i+j)`, the number of shifted
/// reverse tableaux of staircase shape `(1, 2, …, m)`. The division is
/// asserted exact.
pub fn staircase_shifted_count(m: usize) -> BigUint {
    let cells = m * (m + 1) / 2;
    let numerator = factorial(cells);
    let mut denominator = BigUint::one();
    for i in 0..=m {
        for j in i + 1..=m {
            denominator *= BigUint::from(i + j);
        }
    }
    exact_div(numerator, denominator, "staircase count")
}

/// Count families with a closed form or a delegated truncated count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CountFamily {
    /// `α = (3^k)`: `|E_α| = 2^(k-1)`.
    Threes { k: usize },
    /// `α = (1, 2, …, n, n)`: `|E_α| = g_{n+1} C_{n+1} C_{n-1} / (2 C_{2n-1})`.
    StaircaseDouble { n: usize },
    /// `α = (n^k)`: `|E_α|` equals the number of truncated shifted reverse
    /// tableaux of shape `δ_{[n+k-1,n]} \ δ_{k-1}`; the formula side is that
    /// truncated enumeration.
    Rectangle { n: usize, k: usize },
}

impl CountFamily {
    pub fn shape(&self) -> Composition {
        let parts = match *self {
            CountFamily::Threes { k } => vec![3; k],
            CountFamily::StaircaseDouble { n } => {
                let mut p: Vec<usize> = (1..=n).collect();
                p.push(n);
                p
            }
            CountFamily::Rectangle { n, k } => vec![n; k],
        };
        Composition::new(parts).expect("family parts are positive")
    }

    /// The predicted count.
    pub fn formula(&self) -> BigUint {
        match *self {
            CountFamily::Threes { k } => {
                assert!(k >= 1);
                BigUint::from(2usize).pow(k as u32 - 1)
            }
            CountFamily::StaircaseDouble { n } => {
                assert!(n >= 1);
                let numerator = staircase_shifted_count(n + 1) * catalan(n + 1) * catalan(n - 1);
                let denominator = BigUint::from(2usize) * catalan(2 * n - 1);
                exact_div(numerator, denominator, "closed-form")
            }
            CountFamily::Rectangle { n, k } => {
                assert!(n >= 1 && k >= 1);
                let outer = Composition::delta_interval(n + k - 1, n).expect("n+k-1 >= n");
                let shape = if k >= 2 {
                    let inner = Composition::delta_interval(k - 1, 1).expect("k-1 >= 1");
                    ShiftedShape::new_truncated(outer, inner).expect("truncation fits")
                } else {
                    ShiftedShape::new(outer).expect("strict shape")
                };
                BigUint::from(enumerate_shifted(&shape).len())
            }
        }
    }

    /// `|E_α|` by direct orbit enumeration.
    pub fn enumerated(&self) -> BigUint {
        BigUint::from(canonical_class_members(&self.shape()).len())
    }
}

/// Outcome of one formula-versus-enumeration comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub family: CountFamily,
    pub shape: Composition,
    pub formula: String,
    pub enumerated: String,
    pub matches: bool,
}

pub fn count_report(family: CountFamily) -> CountReport {
    let formula = family.formula();
    let enumerated = family.enumerated();
    CountReport {
        shape: family.shape(),
        matches: formula == enumerated,
        formula: formula.to_string(),
        enumerated: enumerated.to_string(),
        family,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shape_geometry() {
        let shape = ShiftedShape::new(comp(&[2, 4, 5])).unwrap();
        assert_eq!(shape.size(), 11);
        assert!(shape.cells().contains(&(1, 3)));
        assert!(shape.cells().contains(&(1, 4)));
        assert!(shape.cells().contains(&(2, 2)));
        assert!(shape.cells().contains(&(3, 1)));
        assert!(!shape.cells().contains(&(1, 2)));

        let truncated = ShiftedShape::new_truncated(comp(&[2, 4, 5]), comp(&[1, 2])).unwrap();
        assert_eq!(truncated.size(), 2 + 3 + 3);
        assert!(!truncated.cells().contains(&(2, 5)));
        assert!(!truncated.cells().contains(&(3, 4)));
        assert!(truncated.cells().contains(&(3, 3)));

        assert!(ShiftedShape::new(comp(&[2, 2])).is_err());
        assert!(ShiftedShape::new_truncated(comp(&[1, 2]), comp(&[3])).is_err());
    }

    #[test]
    fn displayed_fillings_are_enumerated() {
        let shape = ShiftedShape::new(comp(&[2, 4, 5])).unwrap();
        let all = enumerate_shifted(&shape);
        let displayed = ShiftedTableau {
            cells: vec![
                ((1, 3), 2),
                ((1, 4), 1),
                ((2, 2), 8),
                ((2, 3), 6),
                ((2, 4), 5),
                ((2, 5), 3),
                ((3, 1), 11),
                ((3, 2), 10),
                ((3, 3), 9),
                ((3, 4), 7),
                ((3, 5), 4),
            ],
        };
        assert!(all.contains(&displayed));

        let truncated = ShiftedShape::new_truncated(comp(&[2, 4, 5]), comp(&[1, 2])).unwrap();
        let all = enumerate_shifted(&truncated);
        let displayed = ShiftedTableau {
            cells: vec![
                ((1, 3), 2),
                ((1, 4), 1),
                ((2, 2), 5),
                ((2, 3), 4),
                ((2, 4), 3),
                ((3, 1), 8),
                ((3, 2), 7),
                ((3, 3), 6),
            ],
        };
        assert!(all.contains(&displayed));
    }

    #[test]
    fn small_shifted_counts() {
        let shape = ShiftedShape::new(comp(&[1, 2])).unwrap();
        assert_eq!(enumerate_shifted(&shape).len(), 1);
        // Staircase counts back the closed form for g.
        assert_eq!(
            enumerate_shifted(&ShiftedShape::new(comp(&[1, 2, 3])).unwrap()).len(),
            2
        );
        assert_eq!(
            enumerate_shifted(&ShiftedShape::new(comp(&[1, 2, 3, 4])).unwrap()).len(),
            12
        );
        assert_eq!(staircase_shifted_count(2), BigUint::from(1usize));
        assert_eq!(staircase_shifted_count(3), BigUint::from(2usize));
        assert_eq!(staircase_shifted_count(4), BigUint::from(12usize));
    }

    #[test]
    fn catalan_values() {
        let expected = [1usize, 1, 2, 5, 14, 42, 132];
        for (m, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(m), BigUint::from(c));
        }
    }

    #[test]
    fn bijection_examples() {
        let report = class_bijection(&comp(&[1, 2])).unwrap();
        assert_eq!(report.pairs.len(), 1);
        let report = class_bijection(&comp(&[2, 3, 4])).unwrap();
        assert_eq!(
            report.pairs.len(),
            enumerate_shifted(&ShiftedShape::new(comp(&[2, 3, 4])).unwrap()).len()
        );
        let report = class_bijection(&comp(&[5])).unwrap();
        assert_eq!(report.pairs.len(), 1);
    }

    #[test]
    fn bijection_sweep_small() {
        for n in 1..=8usize {
            for alpha in Composition::all(n) {
                if alpha.parts().windows(2).all(|w| w[0] < w[1]) {
                    assert!(class_bijection(&alpha).is_ok(), "{alpha}");
                }
            }
        }
    }

    #[test]
    fn rectangle_counts_match_truncated_enumeration() {
        // |E_(n^k)| against the truncated strip count, for nk <= 10. The
        // identity needs n >= 2 (or k = 1): for n = 1 the strip degenerates
        // to k unconstrained cells while |E_(1^k)| = 1.
        for n in 1..=10usize {
            for k in 1..=10usize {
                if n * k > 10 || (n == 1 && k > 1) {
                    continue;
                }
                let report = count_report(CountFamily::Rectangle { n, k });
                assert!(report.matches, "n={n}, k={k}: {report:?}");
            }
        }
    }

    #[test]
    fn staircase_double_closed_form_small() {
        for n in 1..=3usize {
            let report = count_report(CountFamily::StaircaseDouble { n });
            assert!(report.matches, "n={n}: {report:?}");
        }
    }

    #[test]
    fn count_family_examples() {
        let threes1 = count_report(CountFamily::Threes { k: 1 });
        assert!(threes1.matches);
        assert_eq!(threes1.formula, "1");

        let threes2 = count_report(CountFamily::Threes { k: 2 });
        assert!(threes2.matches);
        assert_eq!(threes2.formula, "2");

        let stair2 = count_report(CountFamily::StaircaseDouble { n: 2 });
        assert!(stair2.matches);
        assert_eq!(stair2.formula, "1");

        let stair3 = count_report(CountFamily::StaircaseDouble { n: 3 });
        assert!(stair3.matches);
        assert_eq!(stair3.formula, "4");

        let rect = count_report(CountFamily::Rectangle { n: 2, k: 2 });
        assert!(rect.matches);
        assert_eq!(rect.formula, "1");
    }
}
