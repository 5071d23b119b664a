//! Explicit 0-Hecke modules as matrices.
//!
//! A module is an ordered basis of (skew) SRCTs together with one 0/1
//! matrix per generator realizing the flips. The basis is sorted by
//! (inversion count of the column word, then column word), a linear
//! extension of the flip order since every flip adds exactly one
//! inversion; each generator therefore maps a basis vector to zero, itself,
//! or a strictly later basis vector, which is the filtration underlying the
//! characteristic computation. All linear algebra is exact.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::classes::{equivalence_classes, SrctClass};
use crate::compositions::{Composition, SkewShapePair};
use crate::hecke::{pi, FlipResult};
use crate::linalg::{nullspace, rat, IntMatrix, Rat, RowReducer};
use crate::qsym::QSymF;
use crate::tableaux::{enumerate_skew_srct, enumerate_srct, SkewSrct, Srct, Tableau};

/// An ordered SRCT basis with one matrix per generator `π_i`.
#[derive(Clone, Debug)]
pub struct HeckeModule<T> {
    entries: usize,
    basis: Vec<T>,
    comps: Vec<Composition>,
    gens: Vec<IntMatrix>,
}

impl<T: Tableau + std::hash::Hash> HeckeModule<T> {
    fn build(mut basis: Vec<T>, entries: usize) -> Self {
        basis.sort_by_key(|t| {
            let w = t.column_word();
            (w.length(), w.word().to_vec())
        });
        let index: HashMap<T, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let dim = basis.len();
        let gen_count = entries.saturating_sub(1);
        let mut gens = Vec::with_capacity(gen_count);
        for i in 1..=gen_count {
            let mut matrix = IntMatrix::zeros(dim);
            for (j, t) in basis.iter().enumerate() {
                match pi(i, t) {
                    FlipResult::Unchanged => matrix.set(j, j, 1),
                    FlipResult::Zero => {}
                    FlipResult::Swapped(next) => {
                        let k = *index.get(&next).unwrap_or_else(|| {
                            panic!("flip π_{i} left the module basis; the basis is not flip-closed")
                        });
                        matrix.set(k, j, 1);
                    }
                }
            }
            gens.push(matrix);
        }
        let comps = basis.iter().map(Tableau::descent_composition).collect();
        HeckeModule {
            entries,
            basis,
            comps,
            gens,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of the tableaux in the basis (the `n` of `H_n(0)`).
    pub fn entries(&self) -> usize {
        self.entries
    }

    pub fn basis(&self) -> &[T] {
        &self.basis
    }

    pub fn gens(&self) -> &[IntMatrix] {
        &self.gens
    }

    /// Matrix of `π_i`, 1-based.
    pub fn generator(&self, i: usize) -> &IntMatrix {
        &self.gens[i - 1]
    }

    pub fn index_of(&self, t: &T) -> Option<usize> {
        self.basis.iter().position(|b| b == t)
    }

    /// Quasisymmetric characteristic: the sum of `F_{comp(τ)}` over the
    /// basis, read off the one-dimensional filtration quotients.
    pub fn characteristic(&self) -> QSymF {
        let mut out = QSymF::zero(self.entries);
        for comp in &self.comps {
            out.add_term(comp.clone(), 1);
        }
        out
    }

    /// Matrix-level check of the 0-Hecke relations.
    pub fn verify_relations(&self) -> Result<(), String> {
        let gens = &self.gens;
        let count = gens.len();
        for i in 0..count {
            if gens[i].mul(&gens[i]) != gens[i] {
                return Err(format!("idempotence fails for generator {}", i + 1));
            }
            for j in i + 2..count {
                if gens[i].mul(&gens[j]) != gens[j].mul(&gens[i]) {
                    return Err(format!(
                        "far commutation fails for generators {},{}",
                        i + 1,
                        j + 1
                    ));
                }
            }
            if i + 1 < count {
                let lhs = gens[i].mul(&gens[i + 1]).mul(&gens[i]);
                let rhs = gens[i + 1].mul(&gens[i]).mul(&gens[i + 1]);
                if lhs != rhs {
                    return Err(format!("braid relation fails at generator {}", i + 1));
                }
            }
        }
        Ok(())
    }

    /// Every generator sends a basis vector to zero, itself, or a strictly
    /// later basis vector.
    pub fn filtration_compatible(&self) -> bool {
        self.gens.iter().all(|a| {
            (0..self.dim()).all(|col| match a.unit_column_target(col) {
                None => true,
                Some(row) => row >= col,
            })
        })
    }

    /// Indices reachable from `start` by repeated generator application.
    #[cfg(test)]
    fn reachable_from(&self, start: usize) -> HashSet<usize> {
        let mut seen = HashSet::from([start]);
        let mut frontier = vec![start];
        while let Some(j) = frontier.pop() {
            for a in &self.gens {
                if let Some(k) = a.unit_column_target(j) {
                    if seen.insert(k) {
                        frontier.push(k);
                    }
                }
            }
        }
        seen
    }
}

/// The module `S_α` on all of `SRCT(α)`.
pub fn build_module(alpha: &Composition) -> HeckeModule<Srct> {
    HeckeModule::build(enumerate_srct(alpha), alpha.size())
}

/// The class submodule `S_{α,E}` on one equivalence class.
pub fn build_class_module(class: &SrctClass) -> HeckeModule<Srct> {
    HeckeModule::build(class.members().to_vec(), class.shape().size())
}

/// The skew module `S_{α//β}` on all of `SRCT(α//β)`.
pub fn build_skew_module(pair: &SkewShapePair) -> HeckeModule<SkewSrct> {
    HeckeModule::build(enumerate_skew_srct(pair), pair.size())
}

/// A basis of `{M : M A_i = A_i M for all i}` over the rationals; each
/// element is a dense `dim × dim` matrix, row major.
#[derive(Clone, Debug)]
pub struct CommutantBasis {
    matrix_dim: usize,
    mats: Vec<Vec<Rat>>,
}

impl CommutantBasis {
    pub fn dimension(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn mats(&self) -> &[Vec<Rat>] {
        &self.mats
    }

    pub fn entry(&self, which: usize, row: usize, col: usize) -> &Rat {
        &self.mats[which][row * self.matrix_dim + col]
    }
}

/// Solves `M A_i = A_i M` for all generators by sparse rational row
/// reduction. Each generator is a partial permutation (unit or zero
/// columns), so every scalar equation touches only a handful of the
/// `dim²` unknowns.
pub fn commutant<T: Tableau + std::hash::Hash>(module: &HeckeModule<T>) -> CommutantBasis {
    let d = module.dim();
    let var = |r: usize, c: usize| r * d + c;
    let mut rows: Vec<BTreeMap<usize, Rat>> = Vec::new();
    for a in module.gens() {
        let phi: Vec<Option<usize>> = (0..d).map(|c| a.unit_column_target(c)).collect();
        let mut preimage: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (c, target) in phi.iter().enumerate() {
            if let Some(r) = target {
                preimage[*r].push(c);
            }
        }
        for (r, pre) in preimage.iter().enumerate() {
            for (c, &phi_c) in phi.iter().enumerate() {
                // (A M)[r][c] - (M A)[r][c] = Σ_{φ(k)=r} M[k][c] - M[r][φ(c)].
                let mut row: BTreeMap<usize, Rat> = BTreeMap::new();
                for &k in pre {
                    *row.entry(var(k, c)).or_insert_with(|| rat(0)) += rat(1);
                }
                if let Some(t) = phi_c {
                    *row.entry(var(r, t)).or_insert_with(|| rat(0)) -= rat(1);
                }
                row.retain(|_, v| !num_traits::Zero::is_zero(v));
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    CommutantBasis {
        matrix_dim: d,
        mats: nullspace(rows, d * d),
    }
}

/// Commutant dimension of a module cyclically generated by basis vector
/// `generator`: an endomorphism is determined by the image `x` of the
/// generator, and `x` ranges over the solutions of the transport
/// consistency system. Stops as soon as the dimension is pinned to 1,
/// which keeps large tableau-cyclic modules cheap.
fn cyclic_commutant_dimension<T: Tableau + std::hash::Hash>(
    module: &HeckeModule<T>,
    generator: usize,
) -> usize {
    let d = module.dim();
    // Partial-function matrices: transport[j][c] = Some(r) when the word
    // carrying the generator to basis vector j maps e_c to e_r.
    let identity: Vec<Option<usize>> = (0..d).map(Some).collect();
    let mut transport: Vec<Option<Vec<Option<usize>>>> = vec![None; d];
    transport[generator] = Some(identity);
    let mut order = vec![generator];
    let mut head = 0;
    while head < order.len() {
        let j = order[head];
        head += 1;
        for a in module.gens() {
            if let Some(k) = a.unit_column_target(j) {
                if k != j && transport[k].is_none() {
                    let t_j = transport[j].as_ref().expect("visited").clone();
                    let composed: Vec<Option<usize>> = (0..d)
                        .map(|c| t_j[c].and_then(|r| a.unit_column_target(r)))
                        .collect();
                    transport[k] = Some(composed);
                    order.push(k);
                }
            }
        }
    }
    assert_eq!(
        order.len(),
        d,
        "module is not cyclic from the chosen generator"
    );

    let mut reducer = RowReducer::new(d);
    let empty: Vec<Option<usize>> = vec![None; d];
    for &j in &order {
        let t_j = transport[j].as_ref().expect("visited");
        for a in module.gens() {
            let lhs: Vec<Option<usize>> = (0..d)
                .map(|c| t_j[c].and_then(|r| a.unit_column_target(r)))
                .collect();
            let rhs: &Vec<Option<usize>> = match a.unit_column_target(j) {
                None => &empty,
                Some(k) if k == j => t_j,
                Some(k) => transport[k].as_ref().expect("reached in BFS"),
            };
            let mut rows: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
            for c in 0..d {
                if let Some(r) = lhs[c] {
                    *rows.entry(r).or_default().entry(c).or_insert_with(|| rat(0)) += rat(1);
                }
                if let Some(r) = rhs[c] {
                    *rows.entry(r).or_default().entry(c).or_insert_with(|| rat(0)) -= rat(1);
                }
            }
            for (_, row) in rows {
                reducer.insert(row);
            }
            if reducer.rank() + 1 == d {
                // The identity endomorphism always survives, so the
                // solution space has dimension exactly 1.
                return 1;
            }
        }
    }
    d - reducer.rank()
}

/// Direct sum decomposition of `S_α` into class blocks: every class's
/// coordinate subspace must be invariant under every generator.
#[derive(Clone, Debug, Serialize)]
pub struct DirectSumReport {
    pub shape: Composition,
    pub block_sizes: Vec<usize>,
    pub ok: bool,
}

pub fn direct_sum_check(alpha: &Composition) -> DirectSumReport {
    let module = build_module(alpha);
    let classes = equivalence_classes(alpha);
    let dim = module.dim();
    let mut assigned: Vec<Option<usize>> = vec![None; dim];
    let mut ok = true;
    for (ci, class) in classes.iter().enumerate() {
        for member in class.members() {
            match module.index_of(member) {
                Some(idx) => {
                    ok &= assigned[idx].is_none();
                    assigned[idx] = Some(ci);
                }
                None => ok = false,
            }
        }
    }
    ok &= assigned.iter().all(Option::is_some);
    for a in module.gens() {
        for col in 0..dim {
            if let Some(row) = a.unit_column_target(col) {
                ok &= assigned[row] == assigned[col];
            }
        }
    }
    let block_sizes: Vec<usize> = classes.iter().map(SrctClass::len).collect();
    ok &= block_sizes.iter().sum::<usize>() == dim;
    DirectSumReport {
        shape: alpha.clone(),
        block_sizes,
        ok,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum IndecomposabilityVerdict {
    Indecomposable,
    Decomposable,
    Inconclusive,
}

/// Decomposable when at least two classes split the module; indecomposable
/// when the commutant is one-dimensional; inconclusive when neither
/// certificate applies.
pub fn indecomposability_verdict(alpha: &Composition) -> IndecomposabilityVerdict {
    let classes = equivalence_classes(alpha);
    if classes.len() >= 2 {
        return IndecomposabilityVerdict::Decomposable;
    }
    let module = build_module(alpha);
    let commutant_dim = if module.dim() <= 48 {
        commutant(&module).dimension()
    } else {
        let source = module
            .index_of(classes[0].source())
            .expect("source tableau lies in the basis");
        cyclic_commutant_dimension(&module, source)
    };
    if commutant_dim == 1 {
        IndecomposabilityVerdict::Indecomposable
    } else {
        IndecomposabilityVerdict::Inconclusive
    }
}

#[derive(Debug, Error, Clone, Serialize)]
#[error("restriction check failed for shape {shape}, m={m}: {detail}")]
pub struct RestrictionError {
    pub shape: Composition,
    pub m: usize,
    pub detail: String,
}

/// Verified block decomposition of `S_α` under the subalgebra that skips
/// generator `π_m`.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub shape: Composition,
    pub m: usize,
    /// One entry per inner shape `β`: (β, block dimension).
    pub blocks: Vec<(Composition, usize)>,
}

/// Splits `τ` at `m`: the entries `> m` occupy a bottom-left straight
/// shape `β` (their row prefixes), the entries `≤ m` a skew shape `α//β`.
fn split_counts(t: &Srct, m: usize) -> Option<Vec<usize>> {
    let mut counts = Vec::with_capacity(t.rows().len());
    for row in t.rows() {
        let count = row.iter().filter(|&&e| e > m).count();
        // Rows decrease, so the large entries must form a prefix.
        if row[..count].iter().any(|&e| e <= m) {
            return None;
        }
        counts.push(count);
    }
    Some(counts)
}

/// Partitions the basis of `S_α` by the shape of the sub-tableau on
/// entries `> m`, then verifies each block is invariant under every
/// generator except `π_m` and intertwines, via `τ ↦ (τ_{≤m}, τ_{>m})`,
/// with the tensor product of the skew module `S_{α//β}` and `S_β`.
pub fn restrict_and_verify(
    alpha: &Composition,
    m: usize,
) -> Result<RestrictionReport, RestrictionError> {
    let n = alpha.size();
    assert!(m <= n, "restriction point m={m} exceeds n={n}");
    let err = |detail: String| RestrictionError {
        shape: alpha.clone(),
        m,
        detail,
    };
    let module = build_module(alpha);

    // Assign each basis element its inner shape β.
    let mut blocks: BTreeMap<Composition, Vec<usize>> = BTreeMap::new();
    for (idx, t) in module.basis().iter().enumerate() {
        let counts = split_counts(t, m)
            .ok_or_else(|| err(format!("entries > {m} are not row prefixes in {t}")))?;
        let first = counts.iter().position(|&c| c > 0).unwrap_or(counts.len());
        if counts[first..].contains(&0) {
            return Err(err(format!(
                "rows holding entries > {m} are not a bottom suffix in {t}"
            )));
        }
        let beta = Composition::new(counts[first..].to_vec()).expect("parts positive");
        blocks.entry(beta).or_default().push(idx);
    }

    let mut report_blocks = Vec::new();
    for (beta, indices) in &blocks {
        let pair = SkewShapePair::new(alpha.clone(), beta.clone()).map_err(|e| {
            err(format!("inner shape {beta} is not below {alpha} in L_c: {e}"))
        })?;
        let skew_module = build_skew_module(&pair);
        let straight_module = build_module(beta);
        if indices.len() != skew_module.dim() * straight_module.dim() {
            return Err(err(format!(
                "block {beta} has dimension {} but the tensor product has {}",
                indices.len(),
                skew_module.dim() * straight_module.dim()
            )));
        }

        // θ: block member -> (skew index, straight index).
        let offset = alpha.len() - beta.len();
        let mut labeled: Vec<(usize, usize, usize)> = Vec::with_capacity(indices.len());
        for &idx in indices {
            let t = &module.basis()[idx];
            let counts = split_counts(t, m).expect("checked above");
            let skew_rows: Vec<Vec<usize>> = t
                .rows()
                .iter()
                .zip(&counts)
                .map(|(row, &c)| row[c..].to_vec())
                .collect();
            let straight_rows: Vec<Vec<usize>> = t.rows()[offset..]
                .iter()
                .zip(&counts[offset..])
                .map(|(row, &c)| row[..c].iter().map(|&e| e - m).collect())
                .collect();
            let skew = SkewSrct::new(pair.clone(), skew_rows)
                .map_err(|e| err(format!("τ≤{m} of {t} is not a skew SRCT: {e}")))?;
            let straight = Srct::new(beta.clone(), straight_rows)
                .map_err(|e| err(format!("τ>{m} of {t} is not an SRCT of shape {beta}: {e}")))?;
            let s_idx = skew_module
                .index_of(&skew)
                .ok_or_else(|| err(format!("skew part of {t} missing from S_{pair}")))?;
            let b_idx = straight_module
                .index_of(&straight)
                .ok_or_else(|| err(format!("straight part of {t} missing from S_{beta}")))?;
            labeled.push((s_idx, b_idx, idx));
        }
        let distinct: HashSet<(usize, usize)> =
            labeled.iter().map(|&(s, b, _)| (s, b)).collect();
        if distinct.len() != labeled.len() {
            return Err(err(format!("θ is not injective on block {beta}")));
        }

        // Invariance of the block under every generator except π_m.
        let index_set: HashSet<usize> = indices.iter().copied().collect();
        for i in (1..n).filter(|&i| i != m) {
            for &idx in indices {
                if let Some(target) = module.generator(i).unit_column_target(idx) {
                    if !index_set.contains(&target) {
                        return Err(err(format!(
                            "π_{i} maps block {beta} outside itself at basis index {idx}"
                        )));
                    }
                }
            }
        }

        // Intertwining: after sorting by (skew, straight) labels, the
        // restricted action is exactly the Kronecker action.
        labeled.sort_unstable();
        let sorted_indices: Vec<usize> = labeled.iter().map(|&(_, _, idx)| idx).collect();
        for i in (1..n).filter(|&i| i != m) {
            let restricted = module.generator(i).submatrix(&sorted_indices);
            let expected = if i < m {
                skew_module
                    .generator(i)
                    .kron(&IntMatrix::identity(straight_module.dim()))
            } else {
                IntMatrix::identity(skew_module.dim()).kron(straight_module.generator(i - m))
            };
            if restricted != expected {
                return Err(err(format!(
                    "π_{i} on block {beta} differs from the tensor-product action"
                )));
            }
        }
        report_blocks.push((beta.clone(), indices.len()));
    }

    Ok(RestrictionReport {
        shape: alpha.clone(),
        m,
        blocks: report_blocks,
    })
}

/// Branching: removing the smallest entry decomposes `S_α` over
/// `H_{n-1}(0)` into the modules of the removable-node reductions.
#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub shape: Composition,
    pub dim: usize,
    pub reduction_dims: Vec<(Composition, usize)>,
    pub ok: bool,
}

impl BranchingReport {
    pub fn passed(&self) -> bool {
        self.ok
    }
}

pub fn branching_check(alpha: &Composition) -> BranchingReport {
    let dim = enumerate_srct(alpha).len();
    let reduction_dims: Vec<(Composition, usize)> = alpha
        .removable_reductions()
        .into_iter()
        .map(|r| {
            let d = enumerate_srct(&r).len();
            (r, d)
        })
        .collect();
    let dims_ok = reduction_dims.iter().map(|&(_, d)| d).sum::<usize>() == dim;

    // Restricting at m = 1 leaves the entry-1 cell as a one-cell skew part;
    // the blocks are indexed by the reductions α⁻ and each must realize
    // the straight module S_{α⁻} through θ.
    let blocks_ok = match restrict_and_verify(alpha, 1) {
        Ok(report) => {
            let block_shapes: HashSet<Composition> =
                report.blocks.iter().map(|(b, _)| b.clone()).collect();
            let reductions: HashSet<Composition> =
                reduction_dims.iter().map(|(r, _)| r.clone()).collect();
            block_shapes == reductions
                && report
                    .blocks
                    .iter()
                    .all(|(b, size)| *size == enumerate_srct(b).len())
        }
        Err(_) => false,
    };

    BranchingReport {
        shape: alpha.clone(),
        dim,
        reduction_dims,
        ok: dims_ok && blocks_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::canonical_class;
    use crate::qsym::{canonical_qsym, quasisymmetric_schur, skew_quasisymmetric_schur};

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn module_22_matrices() {
        let module = build_module(&comp(&[2, 2]));
        assert_eq!(module.dim(), 2);
        // Basis order: [[2,1],[4,3]] has the shorter column word.
        assert_eq!(module.basis()[0].rows(), &[vec![2, 1], vec![4, 3]]);
        assert_eq!(module.basis()[1].rows(), &[vec![3, 2], vec![4, 1]]);
        let e11 = {
            let mut m = IntMatrix::zeros(2);
            m.set(0, 0, 1);
            m
        };
        let e22 = {
            let mut m = IntMatrix::zeros(2);
            m.set(1, 1, 1);
            m
        };
        assert_eq!(module.generator(1), &e11);
        assert_eq!(module.generator(2), &e22);
        assert_eq!(module.generator(3), &e11);
    }

    #[test]
    fn single_row_module_is_trivial() {
        let module = build_module(&comp(&[5]));
        assert_eq!(module.dim(), 1);
        for a in module.gens() {
            assert_eq!(a, &IntMatrix::identity(1));
        }
    }

    #[test]
    fn module_relations_and_filtration() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                let module = build_module(&alpha);
                assert!(module.verify_relations().is_ok(), "{alpha}");
                assert!(module.filtration_compatible(), "{alpha}");
                for class in equivalence_classes(&alpha) {
                    let block = build_class_module(&class);
                    assert!(block.verify_relations().is_ok(), "{alpha}");
                    assert!(block.filtration_compatible(), "{alpha}");
                }
            }
        }
    }

    #[test]
    fn characteristic_examples() {
        let alpha = comp(&[2, 1, 3]);
        let module = build_module(&alpha);
        assert_eq!(module.dim(), 3);
        assert_eq!(module.characteristic(), quasisymmetric_schur(&alpha));

        let class = canonical_class(&comp(&[3, 2, 4]));
        let class_module = build_class_module(&class);
        assert_eq!(class_module.characteristic(), canonical_qsym(&comp(&[3, 2, 4])));

        let pair = SkewShapePair::new(alpha.clone(), alpha.clone()).unwrap();
        let skew = build_skew_module(&pair);
        assert_eq!(skew.dim(), 1);
        assert_eq!(skew.characteristic(), QSymF::one());
    }

    #[test]
    fn skew_module_characteristics_match_expansions() {
        for n in 1..=6 {
            for alpha in Composition::all(n) {
                for m in 0..=n {
                    for beta in Composition::all(m) {
                        if beta.lc_leq(&alpha) {
                            let pair =
                                SkewShapePair::new(alpha.clone(), beta.clone()).unwrap();
                            let module = build_skew_module(&pair);
                            assert!(module.verify_relations().is_ok(), "{pair}");
                            assert!(module.filtration_compatible(), "{pair}");
                            assert_eq!(
                                module.characteristic(),
                                skew_quasisymmetric_schur(&pair)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn characteristic_is_additive_over_classes() {
        for n in 1..=6 {
            for alpha in Composition::all(n) {
                let mut sum = QSymF::zero(n);
                for class in equivalence_classes(&alpha) {
                    sum.add(&build_class_module(&class).characteristic());
                }
                assert_eq!(sum, build_module(&alpha).characteristic(), "{alpha}");
            }
        }
    }

    #[test]
    fn class_modules_are_generated_by_their_source() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                for class in equivalence_classes(&alpha) {
                    let module = build_class_module(&class);
                    let source = module.index_of(class.source()).unwrap();
                    assert_eq!(module.reachable_from(source).len(), module.dim());
                }
            }
        }
    }

    #[test]
    fn direct_sum_examples() {
        let report = direct_sum_check(&comp(&[2, 2]));
        assert!(report.ok);
        assert_eq!(report.block_sizes, vec![1, 1]);

        let trivial = direct_sum_check(&comp(&[4]));
        assert!(trivial.ok);
        assert_eq!(trivial.block_sizes, vec![1]);

        for n in 1..=6 {
            for alpha in Composition::all(n) {
                let report = direct_sum_check(&alpha);
                assert!(report.ok, "{alpha}");
                if alpha.is_simple() {
                    assert_eq!(report.block_sizes.len(), 1, "{alpha}");
                }
            }
        }
    }

    #[test]
    fn commutant_examples() {
        let two = commutant(&build_module(&comp(&[2, 2])));
        assert_eq!(two.dimension(), 2);

        let one_dim = commutant(&build_module(&comp(&[3])));
        assert_eq!(one_dim.dimension(), 1);

        let simple = commutant(&build_module(&comp(&[2, 1, 3])));
        assert_eq!(simple.dimension(), 1);
    }

    #[test]
    fn commutant_basis_elements_commute() {
        for alpha in [comp(&[2, 2]), comp(&[2, 1, 3]), comp(&[1, 3, 2])] {
            let module = build_module(&alpha);
            let basis = commutant(&module);
            let d = basis.matrix_dim();
            for which in 0..basis.dimension() {
                for a in module.gens() {
                    for r in 0..d {
                        for c in 0..d {
                            let mut lhs = rat(0);
                            let mut rhs = rat(0);
                            for k in 0..d {
                                lhs += rat(a.get(r, k)) * basis.entry(which, k, c).clone();
                                rhs += basis.entry(which, r, k).clone() * rat(a.get(k, c));
                            }
                            assert_eq!(lhs, rhs, "{alpha}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            indecomposability_verdict(&comp(&[2, 2])),
            IndecomposabilityVerdict::Decomposable
        );
        assert_eq!(
            indecomposability_verdict(&comp(&[2, 1, 3])),
            IndecomposabilityVerdict::Indecomposable
        );
        for n in 1..=5 {
            for alpha in Composition::all(n) {
                let expected = if alpha.is_simple() {
                    IndecomposabilityVerdict::Indecomposable
                } else {
                    IndecomposabilityVerdict::Decomposable
                };
                assert_eq!(indecomposability_verdict(&alpha), expected, "{alpha}");
            }
        }
    }

    #[test]
    fn verdict_for_simple_256_uses_cyclic_route() {
        assert_eq!(
            indecomposability_verdict(&comp(&[2, 5, 6])),
            IndecomposabilityVerdict::Indecomposable
        );
    }

    #[test]
    fn cyclic_dimension_agrees_with_full_commutant() {
        for n in 1..=6 {
            for alpha in Composition::all(n) {
                if !alpha.is_simple() {
                    continue;
                }
                let module = build_module(&alpha);
                let class = canonical_class(&alpha);
                let source = module.index_of(class.source()).unwrap();
                assert_eq!(
                    cyclic_commutant_dimension(&module, source),
                    commutant(&module).dimension(),
                    "{alpha}"
                );
            }
        }
    }

    #[test]
    fn restriction_trivial_ends() {
        let alpha = comp(&[2, 1, 3]);
        let at_zero = restrict_and_verify(&alpha, 0).unwrap();
        assert_eq!(at_zero.blocks, vec![(alpha.clone(), 3)]);
        let at_n = restrict_and_verify(&alpha, 6).unwrap();
        assert_eq!(at_n.blocks, vec![(Composition::empty(), 3)]);
    }

    #[test]
    fn restriction_sweep_small() {
        for n in 0..=5 {
            for alpha in Composition::all(n) {
                for m in 0..=n {
                    let report = restrict_and_verify(&alpha, m);
                    assert!(report.is_ok(), "{alpha}, m={m}: {report:?}");
                }
            }
        }
    }

    #[test]
    fn branching_examples() {
        let report = branching_check(&comp(&[2, 1, 3]));
        assert!(report.ok);
        assert_eq!(report.dim, 3);
        assert_eq!(report.reduction_dims, vec![(comp(&[1, 1, 3]), 3)]);

        let single = branching_check(&comp(&[4]));
        assert!(single.ok);
        assert_eq!(single.reduction_dims, vec![(comp(&[3]), 1)]);

        for n in 1..=6 {
            for alpha in Composition::all(n) {
                assert!(branching_check(&alpha).ok, "{alpha}");
            }
        }
    }
}
