//! Finite posets: the flip order on an equivalence class, intervals in the
//! left weak Bruhat order, the isomorphism between the two, lattice
//! verification, and rank statistics.
//!
//! Elements are labeled by column words, so a class's flip poset and the
//! Bruhat interval between its source and sink column words can be compared
//! literally, with no isomorphism search.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::classes::{equivalence_classes, SrctClass};
use crate::compositions::Composition;
use crate::hecke::{is_attacking, pi, FlipResult};
use crate::perm::Permutation;
use crate::tableaux::Tableau;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover ({lower},{upper}) references a missing element")]
    BadCover { lower: usize, upper: usize },
    #[error("cover relation has a directed cycle")]
    Cyclic,
    #[error("rank function disagrees with cover ({lower},{upper})")]
    BadRank { lower: usize, upper: usize },
    #[error("operation needs a graded poset")]
    NotGraded,
    #[error("operation needs a unique bottom and top, found {bottoms} and {tops}")]
    NotBounded { bottoms: usize, tops: usize },
    #[error("endpoints are incomparable in the weak order")]
    Incomparable,
}

/// A finite poset presented by its cover relations, optionally graded.
#[derive(Clone, Debug, Serialize)]
pub struct FinitePoset {
    #[serde(rename = "elements")]
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    ranks: Option<Vec<usize>>,
}

impl FinitePoset {
    pub fn new(
        labels: Vec<String>,
        mut covers: Vec<(usize, usize)>,
        ranks: Option<Vec<usize>>,
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        covers.sort_unstable();
        covers.dedup();
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(PosetError::BadCover { lower: a, upper: b });
            }
        }
        // Kahn's algorithm; leftovers mean a directed cycle, which would
        // contradict antisymmetry of the intended order.
        let mut indegree = vec![0usize; n];
        for &(_, b) in &covers {
            indegree[b] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(a, b) in &covers {
                if a == v {
                    indegree[b] -= 1;
                    if indegree[b] == 0 {
                        queue.push(b);
                    }
                }
            }
        }
        if seen != n {
            return Err(PosetError::Cyclic);
        }
        if let Some(r) = &ranks {
            for &(a, b) in &covers {
                if r[b] != r[a] + 1 {
                    return Err(PosetError::BadRank { lower: a, upper: b });
                }
            }
        }
        Ok(FinitePoset {
            labels,
            covers,
            ranks,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn ranks(&self) -> Option<&[usize]> {
        self.ranks.as_deref()
    }

    /// Reflexive-transitive closure of the covers: `leq[a][b]` iff `a <= b`.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            up[a].push(b);
        }
        let mut leq = vec![vec![false; n]; n];
        for (start, row) in leq.iter_mut().enumerate() {
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if row[v] {
                    continue;
                }
                row[v] = true;
                stack.extend(up[v].iter().copied());
            }
        }
        leq
    }

    pub fn bottoms(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, b) in &self.covers {
            has_lower[b] = true;
        }
        (0..self.len()).filter(|&v| !has_lower[v]).collect()
    }

    pub fn tops(&self) -> Vec<usize> {
        let mut has_upper = vec![false; self.len()];
        for &(a, _) in &self.covers {
            has_upper[a] = true;
        }
        (0..self.len()).filter(|&v| !has_upper[v]).collect()
    }

    /// Graphviz rendering, covers drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for (i, label) in self.labels.iter().enumerate() {
            let rank = self
                .ranks
                .as_ref()
                .map(|r| format!(" (rank {})", r[i]))
                .unwrap_or_default();
            out.push_str(&format!("  n{i} [label=\"{label}{rank}\"];\n"));
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// The flip order on a class: covers are single flips, ranked by how many
/// inversions the column word gained over the source.
pub fn flip_poset(class: &SrctClass) -> FinitePoset {
    let members = class.members();
    let index: HashMap<Vec<usize>, usize> = members
        .iter()
        .enumerate()
        .map(|(i, t)| (t.column_word().word().to_vec(), i))
        .collect();
    let base = class.source().column_word().length();
    let mut covers = Vec::new();
    let mut ranks = Vec::with_capacity(members.len());
    for (i, t) in members.iter().enumerate() {
        ranks.push(t.column_word().length() - base);
        for d in t.descent_set() {
            if let FlipResult::Swapped(next) = pi(d, t) {
                let j = index[&next.column_word().word().to_vec()];
                covers.push((i, j));
            }
        }
    }
    let labels = members.iter().map(|t| t.column_word().to_string()).collect();
    FinitePoset::new(labels, covers, Some(ranks)).expect("flips are acyclic and graded")
}

/// The interval `[lower, upper]` in the left weak Bruhat order, graded by
/// length above `lower`. Rejects incomparable endpoints.
pub fn bruhat_interval(
    lower: &Permutation,
    upper: &Permutation,
) -> Result<FinitePoset, PosetError> {
    let comparable = lower
        .bruhat_leq(upper)
        .map_err(|_| PosetError::Incomparable)?;
    if !comparable {
        return Err(PosetError::Incomparable);
    }
    let n = lower.n();
    let upper_inv = upper.inversions();
    let mut elements: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![lower.clone()];
    elements.insert(lower.clone());
    while let Some(sigma) = frontier.pop() {
        for i in 1..n {
            if sigma.position_of(i) < sigma.position_of(i + 1) {
                let tau = sigma.left_multiply(i);
                if tau.inversions().is_subset(&upper_inv) && elements.insert(tau.clone()) {
                    frontier.push(tau);
                }
            }
        }
    }
    let mut sorted: Vec<Permutation> = elements.into_iter().collect();
    sorted.sort_by_key(|s| (s.length(), s.word().to_vec()));
    let index: HashMap<&Permutation, usize> =
        sorted.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let base = lower.length();
    let mut covers = Vec::new();
    for (i, sigma) in sorted.iter().enumerate() {
        for g in 1..n {
            if sigma.position_of(g) < sigma.position_of(g + 1) {
                let tau = sigma.left_multiply(g);
                if let Some(&j) = index.get(&tau) {
                    covers.push((i, j));
                }
            }
        }
    }
    let ranks = sorted.iter().map(|s| s.length() - base).collect();
    let labels = sorted.iter().map(Permutation::to_string).collect();
    FinitePoset::new(labels, covers, Some(ranks))
}

/// Verifies the poset isomorphism between a class under flips and the weak
/// Bruhat interval from its source to its sink column word: the column-word
/// labeling must match elements and covers exactly, in both directions.
pub fn verify_interval_iso(class: &SrctClass) -> bool {
    let flips = flip_poset(class);
    let interval = match bruhat_interval(
        &class.source().column_word(),
        &class.sink().column_word(),
    ) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let flip_elems: BTreeSet<&String> = flips.labels().iter().collect();
    let int_elems: BTreeSet<&String> = interval.labels().iter().collect();
    if flip_elems != int_elems {
        return false;
    }
    let pairs = |p: &FinitePoset| -> BTreeSet<(String, String)> {
        p.covers()
            .iter()
            .map(|&(a, b)| (p.labels()[a].clone(), p.labels()[b].clone()))
            .collect()
    };
    pairs(&flips) == pairs(&interval)
}

/// Exhaustive meet/join check. Requires a graded poset with a unique
/// bottom and top.
pub fn is_lattice(poset: &FinitePoset) -> Result<bool, PosetError> {
    if poset.ranks().is_none() {
        return Err(PosetError::NotGraded);
    }
    let bottoms = poset.bottoms();
    let tops = poset.tops();
    if bottoms.len() != 1 || tops.len() != 1 {
        return Err(PosetError::NotBounded {
            bottoms: bottoms.len(),
            tops: tops.len(),
        });
    }
    let leq = poset.leq_matrix();
    let n = poset.len();
    let has_extremum = |candidates: Vec<usize>, meet: bool| -> bool {
        // A meet is a common lower bound above all others; dually for joins.
        candidates.iter().any(|&z| {
            candidates
                .iter()
                .all(|&w| if meet { leq[w][z] } else { leq[z][w] })
        })
    };
    for x in 0..n {
        for y in x + 1..n {
            let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
            if !has_extremum(lower, true) {
                return Ok(false);
            }
            let upper: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
            if !has_extremum(upper, false) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of elements per rank. Rejects non-graded input.
pub fn rank_vector(poset: &FinitePoset) -> Result<Vec<usize>, PosetError> {
    let ranks = poset.ranks().ok_or(PosetError::NotGraded)?;
    let max = ranks.iter().copied().max().unwrap_or(0);
    let mut out = vec![0usize; max + 1];
    for &r in ranks {
        out[r] += 1;
    }
    Ok(out)
}

pub fn is_rank_symmetric(v: &[usize]) -> bool {
    v.iter().eq(v.iter().rev())
}

pub fn is_rank_unimodal(v: &[usize]) -> bool {
    let mut decreased = false;
    for w in v.windows(2) {
        if w[1] < w[0] {
            decreased = true;
        } else if w[1] > w[0] && decreased {
            return false;
        }
    }
    true
}

/// Rank statistics of one class poset, for the rank-unimodality sweep.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRankStats {
    pub shape: Composition,
    pub st: String,
    pub size: usize,
    pub rank_vector: Vec<usize>,
    pub rank_symmetric: bool,
    pub rank_unimodal: bool,
}

/// Rank vectors of every class poset for every shape of size up to
/// `max_n`. Non-unimodal instances are reported in the output, never
/// filtered; the conjecture they would refute stays a conjecture.
pub fn rank_unimodality_sweep(max_n: usize) -> Vec<ClassRankStats> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for alpha in Composition::all(n) {
            for class in equivalence_classes(&alpha) {
                let poset = flip_poset(&class);
                let vector = rank_vector(&poset).expect("flip posets are graded");
                out.push(ClassRankStats {
                    shape: alpha.clone(),
                    st: class.st_key(),
                    size: class.len(),
                    rank_symmetric: is_rank_symmetric(&vector),
                    rank_unimodal: is_rank_unimodal(&vector),
                    rank_vector: vector,
                });
            }
        }
    }
    out
}

/// Sink tableaux have attacking descents only, so a one-element poset is
/// the degenerate case; used by a few sanity checks.
pub fn class_is_singleton(class: &SrctClass) -> bool {
    class.len() == 1 && class.source() == class.sink() && {
        let t = class.source();
        t.descent_set().iter().all(|&i| is_attacking(i, t))
    }
}
