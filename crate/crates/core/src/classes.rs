//! Equivalence classes of SRCTs under equality of standardized column
//! words, with their source/sink structure.
//!
//! Two SRCTs of the same shape are equivalent when their per-column
//! standardizations agree; flips never leave a class. Each class contains a
//! unique source tableau (no incoming flips) and a unique sink tableau (no
//! outgoing flips), and its distinguished removable nodes — removable nodes
//! holding their column's minimum — depend only on the class. The entry 1
//! of the source sits in the smallest distinguished column, the entry 1 of
//! the sink in the largest.

use std::collections::{BTreeSet, HashMap};

use crate::compositions::Composition;
use crate::hecke::is_attacking;
use crate::tableaux::{enumerate_srct, Srct, Tableau};

/// One equivalence class: members in column-word order, the verified
/// unique source and sink, and the distinguished removable columns.
#[derive(Clone, Debug)]
pub struct SrctClass {
    st: Vec<Vec<usize>>,
    members: Vec<Srct>,
    source: Srct,
    sink: Srct,
    drn: BTreeSet<usize>,
}

impl SrctClass {
    pub fn st(&self) -> &[Vec<usize>] {
        &self.st
    }

    pub fn members(&self) -> &[Srct] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn source(&self) -> &Srct {
        &self.source
    }

    pub fn sink(&self) -> &Srct {
        &self.sink
    }

    /// Columns holding a distinguished removable node.
    pub fn drn(&self) -> &BTreeSet<usize> {
        &self.drn
    }

    pub fn shape(&self) -> &Composition {
        self.source.shape()
    }

    /// Class key: the standardized column word flattened with column
    /// separators (unambiguous because column lengths weakly decrease).
    pub fn st_key(&self) -> String {
        st_key(&self.st)
    }
}

pub fn st_key(st: &[Vec<usize>]) -> String {
    st.iter()
        .map(|col| {
            col.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// A source tableau has every non-descent `i` with `i+1` immediately to the
/// left of `i`; no flip produces it.
pub fn is_source(t: &Srct) -> bool {
    let n = t.size();
    for i in 1..n {
        let (ri, ci) = t.position_of(i);
        let (rj, cj) = t.position_of(i + 1);
        let descent = cj >= ci;
        if !descent && !(rj == ri && cj + 1 == ci) {
            return false;
        }
    }
    true
}

/// A sink tableau has every descent attacking; no flip leaves it.
pub fn is_sink(t: &Srct) -> bool {
    t.descent_set().iter().all(|&i| is_attacking(i, t))
}

/// Columns of the removable nodes of `t` holding their column's minimum.
pub fn distinguished_removable_columns(t: &Srct) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (row, col) in t.shape().removable_parts() {
        let entry = t.entry(row, col).expect("removable cell exists");
        let col_min = (1..=t.shape().len())
            .filter_map(|r| t.entry(r, col))
            .min()
            .expect("column is nonempty");
        if entry == col_min {
            out.insert(col);
        }
    }
    out
}

/// Partitions `SRCT(α)` by standardized column word. Classes are listed by
/// the column word of their sources; members stay in column-word order.
///
/// Panics if a class fails to contain exactly one source and one sink or
/// if the distinguished removable nodes vary across a class — either event
/// would falsify the uniqueness facts this module is built on.
pub fn equivalence_classes(alpha: &Composition) -> Vec<SrctClass> {
    let mut groups: HashMap<Vec<Vec<usize>>, Vec<Srct>> = HashMap::new();
    for t in enumerate_srct(alpha) {
        groups.entry(t.standardized_column_word()).or_default().push(t);
    }
    let mut classes: Vec<SrctClass> = groups
        .into_iter()
        .map(|(st, members)| {
            let sources: Vec<&Srct> = members.iter().filter(|t| is_source(t)).collect();
            let sinks: Vec<&Srct> = members.iter().filter(|t| is_sink(t)).collect();
            assert_eq!(
                sources.len(),
                1,
                "class {} of shape {alpha} has {} sources",
                st_key(&st),
                sources.len()
            );
            assert_eq!(
                sinks.len(),
                1,
                "class {} of shape {alpha} has {} sinks",
                st_key(&st),
                sinks.len()
            );
            let drn = distinguished_removable_columns(&members[0]);
            for member in &members[1..] {
                assert_eq!(
                    distinguished_removable_columns(member),
                    drn,
                    "distinguished removable nodes vary inside class {}",
                    st_key(&st)
                );
            }
            let source = sources[0].clone();
            let sink = sinks[0].clone();
            SrctClass {
                st,
                members,
                source,
                sink,
                drn,
            }
        })
        .collect();
    classes.sort_by_key(|c| c.source.column_word().word().to_vec());
    classes
}

/// The class containing the canonical tableau `τ_α`; its members are
/// exactly the SRCTs whose columns increase top to bottom.
pub fn canonical_class(alpha: &Composition) -> SrctClass {
    let canon = crate::tableaux::canonical_tableau(alpha);
    let st = canon.standardized_column_word();
    equivalence_classes(alpha)
        .into_iter()
        .find(|c| c.st == st)
        .expect("canonical tableau lies in some class")
}

/// Whether every column of `t` increases top to bottom.
pub fn columns_increase(t: &Srct) -> bool {
    let shape = t.shape();
    let max_col = shape.parts().iter().copied().max().unwrap_or(0);
    for col in 1..=max_col {
        let mut prev = None;
        for row in 1..=shape.len() {
            if let Some(e) = t.entry(row, col) {
                if let Some(p) = prev {
                    if p >= e {
                        return false;
                    }
                }
                prev = Some(e);
            }
        }
    }
    true
}
