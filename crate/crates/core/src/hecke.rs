//! The 0-Hecke operators `π_i` on (skew) SRCTs.
//!
//! For `1 ≤ i ≤ n-1` the flip `π_i` fixes a tableau when `i` is not a
//! descent, kills it when `i` is an attacking descent, and otherwise
//! exchanges `i` and `i+1` — which always lands on another valid SRCT. The
//! operators satisfy the 0-Hecke relations `π_i² = π_i`, the braid
//! relation, and far commutation, so words in them are well defined.

use std::collections::HashSet;

use serde::Serialize;

use crate::compositions::Composition;
use crate::tableaux::{enumerate_srct, Srct, Tableau};

/// Outcome of one flip: zero is an absorbing value, not an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FlipResult<T> {
    Unchanged,
    Zero,
    Swapped(T),
}

impl<T> FlipResult<T> {
    pub fn is_zero(&self) -> bool {
        matches!(self, FlipResult::Zero)
    }

    pub fn swapped(self) -> Option<T> {
        match self {
            FlipResult::Swapped(t) => Some(t),
            _ => None,
        }
    }
}

/// Whether `i` is a descent of `t`: `i+1` appears weakly right of `i`.
pub fn is_descent<T: Tableau>(i: usize, t: &T) -> bool {
    t.position_of(i + 1).1 >= t.position_of(i).1
}

/// Whether `i` and `i+1` attack: same column, or adjacent columns with
/// `i+1` strictly southeast of `i`.
pub fn is_attacking<T: Tableau>(i: usize, t: &T) -> bool {
    let (ri, ci) = t.position_of(i);
    let (rj, cj) = t.position_of(i + 1);
    ci == cj || (cj == ci + 1 && rj > ri)
}

/// The flip `π_i`.
pub fn pi<T: Tableau>(i: usize, t: &T) -> FlipResult<T> {
    assert!(
        i >= 1 && i < t.size(),
        "generator index {i} out of range for size {}",
        t.size()
    );
    if !is_descent(i, t) {
        return FlipResult::Unchanged;
    }
    if is_attacking(i, t) {
        return FlipResult::Zero;
    }
    let swapped = t.swap_entries(i, i + 1);
    if let Err(e) = swapped.validate() {
        panic!("non-attacking descent flip produced an invalid SRCT: {e}");
    }
    FlipResult::Swapped(swapped)
}

/// Applies generators left to right; `None` encodes the absorbed zero.
pub fn apply_word<T: Tableau>(word: &[usize], t: &T) -> Option<T> {
    let mut current = t.clone();
    for &i in word {
        match pi(i, &current) {
            FlipResult::Unchanged => {}
            FlipResult::Zero => return None,
            FlipResult::Swapped(next) => current = next,
        }
    }
    Some(current)
}

/// `π_{w_k} ⋯ π_{w_1}(t)` for `word = [w_1, …, w_k]` (left-to-right
/// application, zero absorbing).
pub fn pi_word<T: Tableau>(word: &[usize], t: &T) -> FlipResult<T> {
    match apply_word(word, t) {
        None => FlipResult::Zero,
        Some(result) if result == *t => FlipResult::Unchanged,
        Some(result) => FlipResult::Swapped(result),
    }
}

/// Forward closure of `{t}` under swapped flips, in column-word order.
pub fn orbit<T: Tableau + std::hash::Hash>(t: &T) -> Vec<T> {
    let n = t.size();
    let mut seen: HashSet<T> = HashSet::new();
    let mut frontier = vec![t.clone()];
    seen.insert(t.clone());
    while let Some(current) = frontier.pop() {
        for i in 1..n {
            if let FlipResult::Swapped(next) = pi(i, &current) {
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    let mut out: Vec<T> = seen.into_iter().collect();
    out.sort_by_key(|t| t.column_word().word().to_vec());
    out
}

/// One relation instance that failed on a concrete tableau.
#[derive(Clone, Debug, Serialize)]
pub struct RelationWitness {
    pub shape: Composition,
    pub tableau: Srct,
    pub relation: RelationKind,
}

#[derive(Clone, Debug, Serialize)]
pub enum RelationKind {
    Idempotence(usize),
    FarCommutation(usize, usize),
    Braid(usize),
}

/// Checks `π_i² = π_i`, `π_iπ_j = π_jπ_i` for `|i-j| ≥ 2`, and the braid
/// relation on every SRCT of shape `alpha`; reports the first failure.
pub fn verify_hecke_relations(alpha: &Composition) -> Result<(), Box<RelationWitness>> {
    let n = alpha.size();
    for t in enumerate_srct(alpha) {
        let witness = |relation: RelationKind| {
            Box::new(RelationWitness {
                shape: alpha.clone(),
                tableau: t.clone(),
                relation,
            })
        };
        for i in 1..n {
            if apply_word(&[i, i], &t) != apply_word(&[i], &t) {
                return Err(witness(RelationKind::Idempotence(i)));
            }
            for j in i + 2..n {
                if apply_word(&[i, j], &t) != apply_word(&[j, i], &t) {
                    return Err(witness(RelationKind::FarCommutation(i, j)));
                }
            }
            if i + 1 < n && apply_word(&[i, i + 1, i], &t) != apply_word(&[i + 1, i, i + 1], &t) {
                return Err(witness(RelationKind::Braid(i)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::tableaux::canonical_tableau;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn srct(shape: &[usize], rows: &[&[usize]]) -> Srct {
        Srct::new(comp(shape), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sample_tableau_3423() -> Srct {
        srct(
            &[3, 4, 2, 3],
            &[&[5, 4, 2], &[9, 7, 6, 3], &[10, 1], &[12, 11, 8]],
        )
    }

    #[test]
    fn attacking_descents_of_sample() {
        let t = sample_tableau_3423();
        let descents = t.descent_set();
        let attacking: Vec<usize> = descents
            .iter()
            .copied()
            .filter(|&i| is_attacking(i, &t))
            .collect();
        assert_eq!(attacking, vec![2, 7, 9, 10]);
        assert!(!is_attacking(1, &t));
        assert!(!is_attacking(5, &t));
        // i+1 immediately left of i in the same row is never attacking.
        let canon = canonical_tableau(&comp(&[3, 2]));
        assert!(!is_attacking(2, &canon));
    }

    #[test]
    fn pi_on_sample_tableau() {
        let t = sample_tableau_3423();
        assert_eq!(
            pi(5, &t),
            FlipResult::Swapped(srct(
                &[3, 4, 2, 3],
                &[&[6, 4, 2], &[9, 7, 5, 3], &[10, 1], &[12, 11, 8]]
            ))
        );
        assert_eq!(
            pi(1, &t),
            FlipResult::Swapped(srct(
                &[3, 4, 2, 3],
                &[&[5, 4, 1], &[9, 7, 6, 3], &[10, 2], &[12, 11, 8]]
            ))
        );
        assert_eq!(pi(2, &t), FlipResult::Zero);
        for i in [3, 4, 6, 8, 11] {
            assert_eq!(pi(i, &t), FlipResult::Unchanged);
        }
    }

    #[test]
    fn canonical_tableau_fixed_off_its_descents() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                let canon = canonical_tableau(&alpha);
                let set = alpha.set_of();
                for i in 1..n {
                    let result = pi(i, &canon);
                    if !set.contains(&i) {
                        assert_eq!(result, FlipResult::Unchanged, "{alpha}, i={i}");
                    } else {
                        // Zero or Unchanged leaves the canonical tableau as is;
                        // a swapped result starts its class's flip chain.
                        match result {
                            FlipResult::Swapped(next) => assert_ne!(next, canon),
                            FlipResult::Zero | FlipResult::Unchanged => {}
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pi_word_basics() {
        let t = sample_tableau_3423();
        assert_eq!(pi_word(&[], &t), FlipResult::Unchanged);
        for i in 1..t.size() {
            assert_eq!(apply_word(&[i, i], &t), apply_word(&[i], &t));
        }
    }

    #[test]
    fn braid_relation_exhaustive_small() {
        for n in 1..=6 {
            for alpha in Composition::all(n) {
                for t in enumerate_srct(&alpha) {
                    for i in 1..n.saturating_sub(1) {
                        assert_eq!(
                            apply_word(&[i, i + 1, i], &t),
                            apply_word(&[i + 1, i, i + 1], &t),
                            "{alpha}, {t}, i={i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn relations_reports() {
        assert!(verify_hecke_relations(&comp(&[3, 2, 4])).is_ok());
        assert!(verify_hecke_relations(&comp(&[5])).is_ok());
        assert!(verify_hecke_relations(&comp(&[2, 2])).is_ok());
    }

    #[test]
    fn flips_raise_length_by_one() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                for t in enumerate_srct(&alpha) {
                    let l = t.column_word().length();
                    for i in t.descent_set() {
                        if let FlipResult::Swapped(next) = pi(i, &t) {
                            assert!(next.validate().is_ok());
                            assert_eq!(next.column_word().length(), l + 1);
                            assert_eq!(next.column_word(), t.column_word().left_multiply(i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn flips_preserve_standardized_column_word() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                for t in enumerate_srct(&alpha) {
                    for i in 1..n {
                        if let FlipResult::Swapped(next) = pi(i, &t) {
                            assert_eq!(
                                next.standardized_column_word(),
                                t.standardized_column_word()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_word_independence() {
        // Words in the flips depend only on the permutation they present:
        // two reduced words of the same σ act identically on every tableau.
        for n in 1..=6usize {
            let tableaux: Vec<Srct> = Composition::all(n)
                .iter()
                .flat_map(enumerate_srct)
                .collect();
            for sigma in all_permutations(n) {
                if sigma.length() > 5 {
                    continue;
                }
                let w1 = sigma.reduced_word();
                let w2 = sigma.reduced_word_greedy_max();
                if w1 == w2 {
                    continue;
                }
                for t in &tableaux {
                    assert_eq!(apply_word(&w1, t), apply_word(&w2, t), "{sigma:?} on {t}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let source = canonical_tableau(&comp(&[3, 2, 4]));
        assert_eq!(orbit(&source).len(), 9);
        let sink = srct(&[3, 2, 4], &[&[4, 3, 1], &[7, 5], &[9, 8, 6, 2]]);
        assert_eq!(orbit(&sink), vec![sink.clone()]);
        let single = canonical_tableau(&comp(&[6]));
        assert_eq!(orbit(&single), vec![single.clone()]);
    }
}
