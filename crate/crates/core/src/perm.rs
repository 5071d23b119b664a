//! Permutations of `{1..n}` in one-line notation, inversion sets, and
//! reduced words for the left weak Bruhat order.
//!
//! Inversions are position pairs `(p, q)` with `p < q` and `σ(p) > σ(q)`;
//! the left weak order is inversion-set containment, and multiplying on the
//! left by the adjacent transposition `s_i` (which exchanges the values `i`
//! and `i+1`) adds or removes exactly one inversion.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("word is not a permutation of 1..={n}: {word:?}")]
    NotBijective { n: usize, word: Vec<usize> },
    #[error("permutations act on different sets ({left} vs {right} letters)")]
    SizeMismatch { left: usize, right: usize },
}

/// A permutation stored as its one-line word `σ(1) σ(2) … σ(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijective { n, word });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ(pos)` for 1-based `pos`.
    pub fn apply(&self, pos: usize) -> usize {
        self.word[pos - 1]
    }

    /// 1-based position of `value` in the one-line word.
    pub fn position_of(&self, value: usize) -> usize {
        self.word
            .iter()
            .position(|&v| v == value)
            .expect("value in range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `Inv(σ) = {(p, q) : p < q, σ(p) > σ(q)}` as 1-based position pairs.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.word.len();
        let mut out = BTreeSet::new();
        for p in 0..n {
            for q in p + 1..n {
                if self.word[p] > self.word[q] {
                    out.insert((p + 1, q + 1));
                }
            }
        }
        out
    }

    /// Coxeter length `l(σ) = |Inv(σ)|`.
    pub fn length(&self) -> usize {
        let n = self.word.len();
        let mut count = 0;
        for p in 0..n {
            for q in p + 1..n {
                if self.word[p] > self.word[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            word: (1..=self.n()).map(|p| self.apply(other.apply(p))).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            word[v - 1] = pos + 1;
        }
        Permutation { word }
    }

    /// `s_i ∘ self`: exchanges the values `i` and `i+1` in the one-line word.
    pub fn left_multiply(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        let p = self.position_of(i) - 1;
        let q = self.position_of(i + 1) - 1;
        word.swap(p, q);
        Permutation { word }
    }

    /// Left weak Bruhat order: `self <=_L other` iff `Inv(self) ⊆ Inv(other)`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.inversions().is_subset(&other.inversions()))
    }

    /// A reduced word for `self`, returned in application order: applying
    /// `s_{w[0]}` then `s_{w[1]}` … to the identity yields `self`. Peels the
    /// smallest position descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_by(|word| {
            (0..word.len() - 1).find(|&i| word[i] > word[i + 1])
        })
    }

    /// Like [`reduced_word`](Self::reduced_word) but peels the largest
    /// position descent; usually yields a different reduced word.
    pub fn reduced_word_greedy_max(&self) -> Vec<usize> {
        self.reduced_word_by(|word| {
            (0..word.len() - 1).rev().find(|&i| word[i] > word[i + 1])
        })
    }

    fn reduced_word_by(&self, pick: impl Fn(&[usize]) -> Option<usize>) -> Vec<usize> {
        // Removing a position descent right-multiplies by s_i, which peels
        // the first-applied letter, so the letters come out in application
        // order already.
        let mut word = self.word.clone();
        let mut letters = Vec::new();
        while let Some(i) = pick(&word) {
            word.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// All permutations of `{1..n}` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(remaining: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation {
                word: prefix.clone(),
            });
            return;
        }
        for idx in 0..remaining.len() {
            let v = remaining.remove(idx);
            prefix.push(v);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}
