//! Formal quasisymmetric functions by their basis coefficients.
//!
//! Everything here is a finitely supported integer vector indexed by
//! compositions: the fundamental basis `F_α` carries the tableau
//! expansions (quasisymmetric Schur `S_α`, canonical `C_α`, and skew
//! `S_{α//β}` functions), and the monomial basis `M_β` is the common
//! ground on which the semistandard-tableau Schur oracle checks the
//! refinement `s_λ = Σ_{β̃=λ} S_β`. No polynomial-in-variables form exists
//! anywhere; coefficients are exact machine integers with overflow checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::classes::columns_increase;
use crate::compositions::{Composition, SkewShapePair};
use crate::tableaux::{enumerate_skew_srct, enumerate_srct, Tableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QsymError {
    #[error("{0} is not a partition (parts must weakly decrease)")]
    NotAPartition(Composition),
}

/// Sparse integer expansion in the monomial basis.
pub type MonomialMap = BTreeMap<Composition, i64>;

/// A homogeneous quasisymmetric function in the fundamental basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QSymF {
    degree: usize,
    coeffs: BTreeMap<Composition, i64>,
}

impl QSymF {
    pub fn zero(degree: usize) -> Self {
        QSymF {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit: `F_∅ = 1` in degree 0.
    pub fn one() -> Self {
        let mut f = QSymF::zero(0);
        f.add_term(Composition::empty(), 1);
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: i64) {
        assert_eq!(
            alpha.size(),
            self.degree,
            "term F_({alpha}) breaks homogeneity of degree {}",
            self.degree
        );
        let entry = self.coeffs.entry(alpha).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.coeffs.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&mut self, other: &QSymF) {
        assert_eq!(self.degree, other.degree, "degrees differ");
        for (alpha, &c) in &other.coeffs {
            self.add_term(alpha.clone(), c);
        }
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.coeffs.iter().map(|(a, &c)| (a, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of all fundamental coefficients; for tableau-generated
    /// expansions this is the number of tableaux.
    pub fn mass(&self) -> i64 {
        self.coeffs
            .values()
            .fold(0i64, |acc, &c| acc.checked_add(c).expect("mass overflow"))
    }

    /// Expansion into the monomial basis via `F_α = Σ_{set(β) ⊇ set(α)} M_β`.
    pub fn to_monomial(&self) -> MonomialMap {
        let mut out = MonomialMap::new();
        for (alpha, &c) in &self.coeffs {
            for (beta, m) in fundamental_to_monomial(alpha) {
                let entry = out.entry(beta).or_insert(0);
                *entry = entry
                    .checked_add(m.checked_mul(c).expect("coefficient overflow"))
                    .expect("coefficient overflow");
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "F({alpha})")?;
            first = false;
        }
        Ok(())
    }
}

/// `F_α = Σ M_β` over all `β` of the same size whose subset refines
/// `set(α)`, i.e. `set(β) ⊇ set(α)`.
pub fn fundamental_to_monomial(alpha: &Composition) -> MonomialMap {
    let n = alpha.size();
    let mut out = MonomialMap::new();
    if n == 0 {
        out.insert(Composition::empty(), 1);
        return out;
    }
    let base = alpha.set_of();
    let rest: Vec<usize> = (1..n).filter(|v| !base.contains(v)).collect();
    for mask in 0u64..(1u64 << rest.len()) {
        let mut set = base.clone();
        for (bit, &v) in rest.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                set.insert(v);
            }
        }
        let beta = Composition::from_subset(&set, n).expect("subset in range");
        out.insert(beta, 1);
    }
    out
}

/// `S_α = Σ_{τ ∈ SRCT(α)} F_{comp(τ)}`.
pub fn quasisymmetric_schur(alpha: &Composition) -> QSymF {
    let mut out = QSymF::zero(alpha.size());
    for t in enumerate_srct(alpha) {
        out.add_term(t.descent_composition(), 1);
    }
    out
}

/// `C_α`: the same sum restricted to SRCTs whose columns increase top to
/// bottom (the class of the canonical tableau).
pub fn canonical_qsym(alpha: &Composition) -> QSymF {
    let mut out = QSymF::zero(alpha.size());
    for t in enumerate_srct(alpha) {
        if columns_increase(&t) {
            out.add_term(t.descent_composition(), 1);
        }
    }
    out
}

/// `S_{α//β} = Σ_{τ ∈ SRCT(α//β)} F_{comp(τ)}`.
pub fn skew_quasisymmetric_schur(pair: &SkewShapePair) -> QSymF {
    let mut out = QSymF::zero(pair.size());
    for t in enumerate_skew_srct(pair) {
        out.add_term(t.descent_composition(), 1);
    }
    out
}

/// Monomial expansion of the Schur function `s_λ` computed from scratch:
/// the coefficient of `M_α` is the number of semistandard Young tableaux of
/// shape `λ` with exactly `α_i` copies of `i` (weakly increasing rows,
/// strictly increasing columns), counted by direct enumeration. This is the
/// independent oracle against the tableau route.
pub fn schur_monomial_oracle(lambda: &Composition) -> Result<MonomialMap, QsymError> {
    if !lambda.parts().windows(2).all(|w| w[0] >= w[1]) {
        return Err(QsymError::NotAPartition(lambda.clone()));
    }
    let n = lambda.size();
    let mut out = MonomialMap::new();
    for content in Composition::all(n) {
        let count = ssyt_count(lambda.parts(), content.parts());
        if count > 0 {
            out.insert(content, count);
        }
    }
    if n == 0 {
        out.insert(Composition::empty(), 1);
    }
    Ok(out)
}

/// Number of SSYT of the given shape using exactly `content[v-1]` copies
/// of each value `v`.
fn ssyt_count(shape: &[usize], content: &[usize]) -> i64 {
    let rows = shape.len();
    if rows == 0 {
        return 1;
    }
    let values = content.len();
    // Column-strict fillings need at least `rows` distinct values.
    if values < rows {
        return 0;
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut remaining = content.to_vec();

    fn fill(
        shape: &[usize],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        row: usize,
        col: usize,
    ) -> i64 {
        if row == shape.len() {
            return 1;
        }
        let (next_row, next_col) = if col + 1 < shape[row] {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let min_left = if col > 0 { grid[row][col - 1] } else { 1 };
        let min_above = if row > 0 && shape[row - 1] > col {
            grid[row - 1][col] + 1
        } else {
            1
        };
        let lo = min_left.max(min_above);
        let mut total = 0i64;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[row][col] = v;
            total += fill(shape, grid, remaining, next_row, next_col);
            remaining[v - 1] += 1;
        }
        total
    }

    fill(shape, &mut grid, &mut remaining, 0, 0)
}

/// Verifies `s_λ = Σ_{β̃ = λ} S_β` by expanding the right-hand side to the
/// monomial basis and comparing with [`schur_monomial_oracle`].
pub fn schur_expansion_check(lambda: &Composition) -> Result<bool, QsymError> {
    let oracle = schur_monomial_oracle(lambda)?;
    let n = lambda.size();
    let mut sum = QSymF::zero(n);
    for beta in Composition::all(n) {
        if &beta.underlying_partition() == lambda {
            sum.add(&quasisymmetric_schur(&beta));
        }
    }
    Ok(sum.to_monomial() == oracle)
}

/// The matrix of `{C_α}` over `{F_α}`, rows and columns sorted descending
/// under `▶`; upper unitriangularity is what makes the canonical functions
/// a basis.
#[derive(Clone, Debug, Serialize)]
pub struct TransitionMatrix {
    pub order: Vec<Composition>,
    pub entries: Vec<Vec<i64>>,
    pub upper_unitriangular: bool,
}

pub fn canonical_transition_matrix(n: usize) -> TransitionMatrix {
    let mut order = Composition::all(n);
    order.sort_by(|a, b| b.cmp_btr(a));
    let entries: Vec<Vec<i64>> = order
        .iter()
        .map(|alpha| {
            let c = canonical_qsym(alpha);
            order.iter().map(|beta| c.coeff(beta)).collect()
        })
        .collect();
    let dim = order.len();
    let upper_unitriangular = (0..dim).all(|r| {
        entries[r][r] == 1 && (0..r).all(|c| entries[r][c] == 0)
    });
    TransitionMatrix {
        order,
        entries,
        upper_unitriangular,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::equivalence_classes;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn f(pairs: &[(&[usize], i64)], degree: usize) -> QSymF {
        let mut out = QSymF::zero(degree);
        for (parts, c) in pairs {
            out.add_term(comp(parts), *c);
        }
        out
    }

    #[test]
    fn fundamental_to_monomial_examples() {
        let m = fundamental_to_monomial(&comp(&[1, 2]));
        assert_eq!(m.len(), 2);
        assert_eq!(m[&comp(&[1, 2])], 1);
        assert_eq!(m[&comp(&[1, 1, 1])], 1);

        let all = fundamental_to_monomial(&comp(&[4]));
        assert_eq!(all.len(), Composition::all(4).len());
        assert!(all.values().all(|&c| c == 1));

        let ones = fundamental_to_monomial(&comp(&[1, 1, 1]));
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[&comp(&[1, 1, 1])], 1);
    }

    #[test]
    fn quasisymmetric_schur_examples() {
        assert_eq!(
            quasisymmetric_schur(&comp(&[2, 1, 3])),
            f(&[(&[2, 1, 3], 1), (&[2, 2, 2], 1), (&[1, 2, 1, 2], 1)], 6)
        );
        assert_eq!(
            quasisymmetric_schur(&comp(&[5])),
            f(&[(&[5], 1)], 5)
        );
        assert_eq!(
            quasisymmetric_schur(&comp(&[1, 2])),
            f(&[(&[1, 2], 1)], 3)
        );
        assert_eq!(quasisymmetric_schur(&Composition::empty()), QSymF::one());
    }

    #[test]
    fn canonical_expansion_of_324() {
        let c = canonical_qsym(&comp(&[3, 2, 4]));
        let expected = f(
            &[
                (&[3, 2, 4], 1),
                (&[3, 1, 2, 3], 1),
                (&[3, 1, 3, 2], 1),
                (&[3, 2, 2, 2], 1),
                (&[3, 3, 3], 1),
                (&[2, 2, 2, 3], 1),
                (&[2, 2, 1, 2, 2], 1),
                (&[1, 3, 2, 3], 1),
                (&[1, 3, 1, 2, 2], 1),
            ],
            9,
        );
        assert_eq!(c, expected);
    }

    #[test]
    fn canonical_equals_schur_for_simple_shapes() {
        for n in 1..=6 {
            for alpha in Composition::all(n) {
                if alpha.is_simple() {
                    assert_eq!(
                        canonical_qsym(&alpha),
                        quasisymmetric_schur(&alpha),
                        "{alpha}"
                    );
                }
            }
        }
        assert_eq!(canonical_qsym(&comp(&[4])), f(&[(&[4], 1)], 4));
    }

    #[test]
    fn skew_examples() {
        let alpha = comp(&[2, 1, 3]);
        let trivial = SkewShapePair::new(alpha.clone(), alpha.clone()).unwrap();
        assert_eq!(skew_quasisymmetric_schur(&trivial), QSymF::one());

        let straight = SkewShapePair::straight(alpha.clone());
        assert_eq!(
            skew_quasisymmetric_schur(&straight),
            quasisymmetric_schur(&alpha)
        );

        let pair = SkewShapePair::new(comp(&[3, 4, 2, 3]), comp(&[2, 1, 3])).unwrap();
        let skew = skew_quasisymmetric_schur(&pair);
        assert!(skew.coeff(&comp(&[1, 2, 1, 2])) >= 1);
    }

    #[test]
    fn schur_oracle_examples() {
        let m = schur_monomial_oracle(&comp(&[1, 1])).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[&comp(&[1, 1])], 1);

        let m = schur_monomial_oracle(&comp(&[2, 1])).unwrap();
        assert_eq!(m[&comp(&[2, 1])], 1);
        assert_eq!(m[&comp(&[1, 2])], 1);
        assert_eq!(m[&comp(&[1, 1, 1])], 2);
        assert_eq!(m.len(), 3);

        let m = schur_monomial_oracle(&comp(&[4])).unwrap();
        assert_eq!(m.len(), Composition::all(4).len());
        assert!(m.values().all(|&c| c == 1));

        assert!(schur_monomial_oracle(&comp(&[1, 2])).is_err());
    }

    #[test]
    fn schur_expansion_examples() {
        assert!(schur_expansion_check(&comp(&[2, 1])).unwrap());
        assert!(schur_expansion_check(&comp(&[5])).unwrap());
        for n in 0..=5 {
            for lambda in Composition::partitions(n) {
                assert!(schur_expansion_check(&lambda).unwrap(), "{lambda}");
            }
        }
    }

    #[test]
    fn transition_matrix_small() {
        let t1 = canonical_transition_matrix(1);
        assert_eq!(t1.entries, vec![vec![1]]);
        assert!(t1.upper_unitriangular);

        let t2 = canonical_transition_matrix(2);
        assert_eq!(t2.order, vec![comp(&[2]), comp(&[1, 1])]);
        assert_eq!(t2.entries, vec![vec![1, 0], vec![0, 1]]);
        assert!(t2.upper_unitriangular);

        for n in 1..=6 {
            assert!(canonical_transition_matrix(n).upper_unitriangular, "n={n}");
        }
    }

    #[test]
    fn f_alpha_has_coefficient_one_in_c_alpha() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                assert_eq!(canonical_qsym(&alpha).coeff(&alpha), 1, "{alpha}");
            }
        }
    }

    #[test]
    fn class_sums_refine_quasisymmetric_schur() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                let mut sum = QSymF::zero(n);
                for class in equivalence_classes(&alpha) {
                    for member in class.members() {
                        sum.add_term(member.descent_composition(), 1);
                    }
                }
                assert_eq!(sum, quasisymmetric_schur(&alpha), "{alpha}");
            }
        }
    }

    #[test]
    fn coproduct_shadow_mass_identity() {
        // |SRCT(α)| = Σ_β |SRCT(α//β)| · |SRCT(β)| over β ⊨ n-m, β <=_c α.
        for n in 0..=6usize {
            for alpha in Composition::all(n) {
                let total = quasisymmetric_schur(&alpha).mass();
                for m in 0..=n {
                    let mut sum = 0i64;
                    for beta in Composition::all(n - m) {
                        if beta.lc_leq(&alpha) {
                            let pair = SkewShapePair::new(alpha.clone(), beta.clone()).unwrap();
                            sum += skew_quasisymmetric_schur(&pair).mass()
                                * quasisymmetric_schur(&beta).mass();
                        }
                    }
                    assert_eq!(sum, total, "alpha={alpha}, m={m}");
                }
            }
        }
    }

    #[test]
    fn degree_mismatch_panics() {
        let result = std::panic::catch_unwind(|| {
            let mut q = QSymF::zero(3);
            q.add_term(comp(&[2, 2]), 1);
        });
        assert!(result.is_err());
    }
}
