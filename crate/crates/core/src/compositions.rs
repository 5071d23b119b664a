//! Compositions, their reverse composition diagrams, and the reverse
//! composition poset `L_c`.
//!
//! A composition `α = (α_1, …, α_k)` of `n` is an ordered list of positive
//! integers summing to `n`. Its reverse composition diagram has `α_i`
//! left-justified cells in row `i` from the top. This module carries the
//! subset/composition bijection, removable nodes, the simple/complex
//! classification, the `▶` total order, and the cover relation of `L_c`
//! (prefix a part 1, or add 1 to the leftmost part of its size).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parts must be positive, found 0 at part {index}")]
    ZeroPart { index: usize },
    #[error("invalid composition at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("subset value {value} must lie strictly between 0 and {size}")]
    SubsetOutOfRange { value: usize, size: usize },
    #[error("compositions have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("delta interval needs a >= b >= 1, got a={a}, b={b}")]
    BadInterval { a: usize, b: usize },
    #[error("inner shape ({inner}) is not <=_c the outer shape ({outer})")]
    NotSkewPair { inner: String, outer: String },
}

/// An ordered list of positive integers; the empty list is the unique
/// composition of size 0. Immutable value object with structural equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CompositionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::ZeroPart { index });
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length `ℓ(α)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Size `|α|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partial-sum subset `set(α) = {α_1, α_1+α_2, …} ⊆ [n-1]`.
    pub fn set_of(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`set_of`](Self::set_of): the composition `comp(S)` of `n`
    /// whose partial sums are exactly `S`. Rejects values outside `1..n`.
    pub fn from_subset(set: &BTreeSet<usize>, n: usize) -> Result<Self, CompositionError> {
        for &v in set {
            if v == 0 || v >= n {
                return Err(CompositionError::SubsetOutOfRange { value: v, size: n });
            }
        }
        if n == 0 {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &v in set {
            parts.push(v - prev);
            prev = v;
        }
        parts.push(n - prev);
        Ok(Composition { parts })
    }

    /// Rows with a removable node, as `(row, column)` pairs (1-based): row 1
    /// always, and any row `i ≥ 2` with `α_i ≥ 2` and no earlier part equal
    /// to `α_i - 1`.
    pub fn removable_parts(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (idx, &p) in self.parts.iter().enumerate() {
            let removable = if idx == 0 {
                true
            } else {
                p >= 2 && !self.parts[..idx].contains(&(p - 1))
            };
            if removable {
                out.push((idx + 1, p));
            }
        }
        out
    }

    /// All compositions `α⁻` obtained by removing a removable node; these
    /// are exactly the lower covers of `α` in the reverse composition poset.
    pub fn removable_reductions(&self) -> Vec<Composition> {
        self.removable_parts()
            .into_iter()
            .map(|(row, _)| {
                let mut parts = self.parts.clone();
                if parts[row - 1] == 1 {
                    parts.remove(row - 1);
                } else {
                    parts[row - 1] -= 1;
                }
                Composition { parts }
            })
            .collect()
    }

    /// A composition is simple when every pair `α_i ≥ α_j ≥ 2` with `i < j`
    /// has some intermediate part equal to `α_j - 1`; otherwise complex.
    pub fn is_simple(&self) -> bool {
        let k = self.parts.len();
        for i in 0..k {
            for j in i + 1..k {
                if self.parts[i] >= self.parts[j] && self.parts[j] >= 2 {
                    let target = self.parts[j] - 1;
                    if !self.parts[i + 1..j].contains(&target) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The parts rearranged weakly decreasing (`α̃`).
    pub fn underlying_partition(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    /// The total order `▶` on compositions of equal size: `α ▶ β` when
    /// `α̃ >_lex β̃`, or `α̃ = β̃` and `α >_lex β`. Returns `Greater` for `α ▶ β`.
    ///
    /// Panics if the sizes differ.
    pub fn cmp_btr(&self, other: &Composition) -> Ordering {
        assert_eq!(
            self.size(),
            other.size(),
            "cmp_btr compares compositions of equal size only"
        );
        let lp = self.underlying_partition();
        let rp = other.underlying_partition();
        lp.parts
            .cmp(&rp.parts)
            .then_with(|| self.parts.cmp(&other.parts))
    }

    /// Upper covers in the reverse composition poset: prefix a part 1, or
    /// add 1 to each part that is the leftmost part of its size.
    pub fn lc_covers(&self) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut prefixed = Vec::with_capacity(self.parts.len() + 1);
        prefixed.push(1);
        prefixed.extend_from_slice(&self.parts);
        out.push(Composition { parts: prefixed });
        for k in 0..self.parts.len() {
            if !self.parts[..k].contains(&self.parts[k]) {
                let mut parts = self.parts.clone();
                parts[k] += 1;
                out.push(Composition { parts });
            }
        }
        out
    }

    /// Whether `self <=_c other` in the reverse composition poset, decided by
    /// a memoized breadth-first search over upper covers.
    pub fn lc_leq(&self, other: &Composition) -> bool {
        let sn = self.size();
        let on = other.size();
        if sn > on {
            return false;
        }
        if sn == on {
            return self == other;
        }
        lc_reachable(self, on).contains(other)
    }

    /// The strict reverse partition `δ_{[a,b]} = (b, b+1, …, a)`.
    pub fn delta_interval(a: usize, b: usize) -> Result<Self, CompositionError> {
        if b == 0 || a < b {
            return Err(CompositionError::BadInterval { a, b });
        }
        Ok(Composition {
            parts: (b..=a).collect(),
        })
    }

    /// All compositions of `n`, sorted lexicographically by parts.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0u64..(1u64 << (n - 1)) {
            let set: BTreeSet<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
            out.push(Composition::from_subset(&set, n).expect("subset within range"));
        }
        out.sort();
        out
    }

    /// All partitions of `n` (weakly decreasing compositions), lex-sorted.
    pub fn partitions(n: usize) -> Vec<Composition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

type ReachMemo = Mutex<HashMap<(Composition, usize), Arc<HashSet<Composition>>>>;

static LC_MEMO: OnceLock<ReachMemo> = OnceLock::new();

/// Set of compositions of size exactly `n` reachable upward from `beta`.
fn lc_reachable(beta: &Composition, n: usize) -> Arc<HashSet<Composition>> {
    let memo = LC_MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (beta.clone(), n);
    if let Some(hit) = memo.lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let mut level: HashSet<Composition> = HashSet::new();
    level.insert(beta.clone());
    for _ in beta.size()..n {
        let mut next = HashSet::new();
        for comp in &level {
            next.extend(comp.lc_covers());
        }
        level = next;
    }
    let result = Arc::new(level);
    memo.lock()
        .unwrap()
        .insert(key, Arc::clone(&result));
    result
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    /// Parses "3,2,4"; the empty string (or all-whitespace) is the empty
    /// composition. Errors carry the byte offset of the offending token.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            let trimmed = token.trim();
            match trimmed.parse::<usize>() {
                Ok(0) => {
                    return Err(CompositionError::Parse {
                        offset,
                        message: "parts must be positive".into(),
                    })
                }
                Ok(p) => parts.push(p),
                Err(e) => {
                    return Err(CompositionError::Parse {
                        offset,
                        message: format!("expected a positive integer, got {trimmed:?} ({e})"),
                    })
                }
            }
            offset += token.len() + 1;
        }
        Ok(Composition { parts })
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Composition::new(parts).map_err(D::Error::custom)
    }
}

/// A skew reverse composition shape `α // β` with `β <=_c α`; the inner
/// shape is drawn bottom-left-justified inside the outer one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShapePair {
    outer: Composition,
    inner: Composition,
}

impl SkewShapePair {
    pub fn new(outer: Composition, inner: Composition) -> Result<Self, CompositionError> {
        if !inner.lc_leq(&outer) {
            return Err(CompositionError::NotSkewPair {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShapePair { outer, inner })
    }

    pub fn straight(outer: Composition) -> Self {
        SkewShapePair {
            outer,
            inner: Composition::empty(),
        }
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    /// Number of skew cells, `|α| - |β|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Length of the inner prefix of row `row` (1-based). Row `i` of the
    /// inner shape sits in row `ℓ(α) - ℓ(β) + i` of the outer shape.
    pub fn inner_len(&self, row: usize) -> usize {
        let offset = self.outer.len() - self.inner.len();
        if row > offset {
            self.inner.parts()[row - offset - 1]
        } else {
            0
        }
    }
}

impl fmt::Display for SkewShapePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}//{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShapePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn set_of_examples() {
        assert_eq!(
            comp(&[3, 4, 3, 2]).set_of(),
            BTreeSet::from([3, 7, 10])
        );
        assert_eq!(comp(&[5]).set_of(), BTreeSet::new());
        assert_eq!(comp(&[1, 1, 1]).set_of(), BTreeSet::from([1, 2]));
        assert_eq!(Composition::empty().set_of(), BTreeSet::new());
    }

    #[test]
    fn from_subset_examples() {
        assert_eq!(
            Composition::from_subset(&BTreeSet::from([3, 7, 10]), 12).unwrap(),
            comp(&[3, 4, 3, 2])
        );
        assert_eq!(
            Composition::from_subset(&BTreeSet::new(), 5).unwrap(),
            comp(&[5])
        );
        assert_eq!(
            Composition::from_subset(&BTreeSet::from([1, 2, 5, 8, 9, 11]), 12).unwrap(),
            comp(&[1, 1, 3, 3, 1, 2, 1])
        );
    }

    #[test]
    fn from_subset_rejects_out_of_range() {
        for bad in [0usize, 5, 6] {
            let set = BTreeSet::from([bad]);
            assert!(Composition::from_subset(&set, 5).is_err(), "value {bad}");
        }
    }

    #[test]
    fn set_comp_roundtrip_exhaustive() {
        for n in 0..=10usize {
            for alpha in Composition::all(n) {
                assert_eq!(
                    Composition::from_subset(&alpha.set_of(), n).unwrap(),
                    alpha
                );
            }
            if n >= 1 {
                for mask in 0u64..(1 << (n - 1)) {
                    let set: BTreeSet<usize> =
                        (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
                    let alpha = Composition::from_subset(&set, n).unwrap();
                    assert_eq!(alpha.set_of(), set);
                }
            }
        }
    }

    #[test]
    fn removable_parts_examples() {
        let rows: Vec<usize> = comp(&[3, 4, 3, 2])
            .removable_parts()
            .iter()
            .map(|&(r, _)| r)
            .collect();
        assert_eq!(rows, vec![1, 3, 4]);
        assert_eq!(
            comp(&[3, 4, 3, 2]).removable_parts(),
            vec![(1, 3), (3, 3), (4, 2)]
        );
        assert_eq!(comp(&[2, 1, 3]).removable_parts(), vec![(1, 2)]);
        assert_eq!(comp(&[7]).removable_parts(), vec![(1, 7)]);
    }

    #[test]
    fn removable_parts_nonempty() {
        for n in 1..=8 {
            for alpha in Composition::all(n) {
                assert!(!alpha.removable_parts().is_empty(), "{alpha}");
            }
        }
    }

    #[test]
    fn simple_examples() {
        assert!(comp(&[2, 5, 6]).is_simple());
        assert!(comp(&[4, 1, 2, 3, 4]).is_simple());
        assert!(comp(&[1]).is_simple());
        assert!(!comp(&[2, 2]).is_simple());
        assert!(!comp(&[3, 1, 3]).is_simple());
        assert!(!comp(&[5, 1, 2, 4]).is_simple());
    }

    #[test]
    fn simple_closed_under_removals() {
        // Removing any removable node from a simple composition stays simple.
        for n in 1..=8 {
            for alpha in Composition::all(n) {
                if !alpha.is_simple() {
                    continue;
                }
                for reduction in alpha.removable_reductions() {
                    assert!(reduction.is_simple(), "{alpha} -> {reduction}");
                }
            }
        }
    }

    #[test]
    fn underlying_partition_examples() {
        assert_eq!(comp(&[3, 2, 4]).underlying_partition(), comp(&[4, 3, 2]));
        assert_eq!(Composition::empty().underlying_partition(), Composition::empty());
        assert_eq!(comp(&[1, 2, 2]).underlying_partition(), comp(&[2, 2, 1]));
    }

    #[test]
    fn btr_examples() {
        assert_eq!(comp(&[2]).cmp_btr(&comp(&[1, 1])), Ordering::Greater);
        assert_eq!(comp(&[2, 1]).cmp_btr(&comp(&[1, 2])), Ordering::Greater);
        assert_eq!(comp(&[2, 1]).cmp_btr(&comp(&[2, 1])), Ordering::Equal);
    }

    #[test]
    fn btr_total_order_exhaustive() {
        for n in 0..=8 {
            let comps = Composition::all(n);
            for a in &comps {
                for b in &comps {
                    let ab = a.cmp_btr(b);
                    let ba = b.cmp_btr(a);
                    assert_eq!(ab, ba.reverse(), "{a} vs {b}");
                    assert_eq!(ab == Ordering::Equal, a == b, "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn lc_covers_examples() {
        let covers: BTreeSet<Composition> = comp(&[1, 2]).lc_covers().into_iter().collect();
        assert_eq!(
            covers,
            BTreeSet::from([comp(&[1, 1, 2]), comp(&[2, 2]), comp(&[1, 3])])
        );
        assert_eq!(Composition::empty().lc_covers(), vec![comp(&[1])]);
        assert!(comp(&[1, 1, 3]).lc_covers().contains(&comp(&[2, 1, 3])));
    }

    #[test]
    fn lc_leq_examples() {
        // (1) < (2) < (1,2) < (1,1,2) < (1,1,3) < (2,1,3) is a saturated chain.
        assert!(comp(&[1]).lc_leq(&comp(&[2, 1, 3])));
        assert!(comp(&[2, 1, 3]).lc_leq(&comp(&[3, 4, 2, 3])));
        assert!(!comp(&[2]).lc_leq(&comp(&[1, 1])));
        assert!(!comp(&[1, 1]).lc_leq(&comp(&[1, 2])));
        assert!(comp(&[1, 2]).lc_leq(&comp(&[1, 2])));
        assert!(Composition::empty().lc_leq(&comp(&[2, 1])));
    }

    #[test]
    fn lc_leq_agrees_with_downward_removals() {
        // Dual route: reachability via upper covers must agree with
        // reachability via removable-node deletions from above.
        for n in 0..=7 {
            for alpha in Composition::all(n) {
                let mut down: HashSet<Composition> = HashSet::new();
                let mut frontier = vec![alpha.clone()];
                down.insert(alpha.clone());
                while let Some(gamma) = frontier.pop() {
                    for red in gamma.removable_reductions() {
                        if down.insert(red.clone()) {
                            frontier.push(red);
                        }
                    }
                }
                for m in 0..=n {
                    for beta in Composition::all(m) {
                        assert_eq!(
                            beta.lc_leq(&alpha),
                            down.contains(&beta),
                            "beta={beta} alpha={alpha}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn delta_interval_examples() {
        assert_eq!(
            Composition::delta_interval(4, 3).unwrap(),
            comp(&[3, 4])
        );
        assert_eq!(
            Composition::delta_interval(3, 1).unwrap(),
            comp(&[1, 2, 3])
        );
        assert_eq!(Composition::delta_interval(5, 5).unwrap(), comp(&[5]));
        assert!(Composition::delta_interval(2, 3).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,2,4".parse::<Composition>().unwrap(), comp(&[3, 2, 4]));
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(comp(&[3, 2, 4]).to_string(), "3,2,4");
        assert_eq!(Composition::empty().to_string(), "");
        let err = "3,x,4".parse::<Composition>().unwrap_err();
        match err {
            CompositionError::Parse { offset, .. } => assert_eq!(offset, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn skew_pair_validation() {
        assert!(SkewShapePair::new(comp(&[3, 4, 2, 3]), comp(&[2, 1, 3])).is_ok());
        assert!(SkewShapePair::new(comp(&[1, 1]), comp(&[2])).is_err());
        let pair = SkewShapePair::new(comp(&[3, 4, 2, 3]), comp(&[2, 1, 3])).unwrap();
        assert_eq!(pair.size(), 6);
        assert_eq!(pair.inner_len(1), 0);
        assert_eq!(pair.inner_len(2), 2);
        assert_eq!(pair.inner_len(3), 1);
        assert_eq!(pair.inner_len(4), 3);
    }

    #[test]
    fn serde_forms() {
        let alpha = comp(&[3, 2, 4]);
        let json = serde_json::to_string(&alpha).unwrap();
        assert_eq!(json, "[3,2,4]");
        let back: Composition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, alpha);
        assert!(serde_json::from_str::<Composition>("[3,0,4]").is_err());
        let pair = SkewShapePair::new(comp(&[3, 4, 2, 3]), comp(&[2, 1, 3])).unwrap();
        assert_eq!(
            serde_json::to_string(&pair).unwrap(),
            r#"{"outer":[3,4,2,3],"inner":[2,1,3]}"#
        );
    }

    proptest! {
        #[test]
        fn prop_set_comp_roundtrip(parts in proptest::collection::vec(1usize..9, 0..8)) {
            let alpha = Composition::new(parts).unwrap();
            let n = alpha.size();
            prop_assert_eq!(Composition::from_subset(&alpha.set_of(), n).unwrap(), alpha);
        }

        #[test]
        fn prop_parse_roundtrip(parts in proptest::collection::vec(1usize..50, 0..10)) {
            let alpha = Composition::new(parts).unwrap();
            prop_assert_eq!(alpha.to_string().parse::<Composition>().unwrap(), alpha);
        }
    }
}
