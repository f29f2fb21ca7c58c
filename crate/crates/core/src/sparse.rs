//! Sparse vector/matrix primitives and the small dense kernels every model touches.
//!
//! Feature vectors are stored as sorted coordinate lists; all pair kernels are
//! merge-joins over the sorted index arrays, and the factor kernel is a
//! gather-scale-accumulate over columns of the dense factor matrix. Exact
//! zeros are pruned at construction and after arithmetic; near-zeros are kept
//! so arithmetic stays bit-stable.

use crate::error::{Error, Result};

pub type FeatureId = u32;
pub type ItemId = u32;
pub type UserId = u32;

/// A sparse feature vector: strictly increasing indices, parallel values,
/// no stored zeros.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SparseVector {
    indices: Vec<FeatureId>,
    values: Vec<f64>,
}

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from (index, value) pairs. Pairs are sorted; exact zeros are
    /// dropped; duplicate indices or non-finite values are rejected.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (FeatureId, f64)>) -> Result<Self> {
        let mut pairs: Vec<(FeatureId, f64)> = pairs.into_iter().collect();
        pairs.sort_by_key(|&(i, _)| i);
        let mut indices = Vec::with_capacity(pairs.len());
        let mut values = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            if !v.is_finite() {
                return Err(Error::Dimension(format!(
                    "non-finite value {v} at feature {i}"
                )));
            }
            if indices.last() == Some(&i) {
                return Err(Error::Dimension(format!("duplicate feature index {i}")));
            }
            if v != 0.0 {
                indices.push(i);
                values.push(v);
            }
        }
        Ok(Self { indices, values })
    }

    pub fn from_dense(dense: &[f64]) -> Self {
        let mut indices = Vec::new();
        let mut values = Vec::new();
        for (i, &v) in dense.iter().enumerate() {
            if v != 0.0 {
                indices.push(i as FeatureId);
                values.push(v);
            }
        }
        Self { indices, values }
    }

    /// Internal constructor for kernel outputs that are sorted and pruned by
    /// construction.
    pub(crate) fn from_sorted_unchecked(indices: Vec<FeatureId>, values: Vec<f64>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(values.iter().all(|&v| v != 0.0));
        debug_assert_eq!(indices.len(), values.len());
        Self { indices, values }
    }

    pub fn indices(&self) -> &[FeatureId] {
        &self.indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (FeatureId, f64)> + '_ {
        self.indices.iter().copied().zip(self.values.iter().copied())
    }

    pub fn get(&self, index: FeatureId) -> f64 {
        match self.indices.binary_search(&index) {
            Ok(pos) => self.values[pos],
            Err(_) => 0.0,
        }
    }

    /// Largest stored index, if any. Rows of an `ItemFeatureMatrix` keep
    /// max_index < n_features.
    pub fn max_index(&self) -> Option<FeatureId> {
        self.indices.last().copied()
    }

    pub fn to_dense(&self, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n];
        for (i, v) in self.iter() {
            out[i as usize] = v;
        }
        out
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Vector scaled by a constant; exact zero scale yields the empty vector.
    pub fn scaled(&self, s: f64) -> Self {
        if s == 0.0 {
            return Self::new();
        }
        Self {
            indices: self.indices.clone(),
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }
}

/// Merge-join dot product. Disjoint supports yield 0; no allocation
/// proportional to the nominal dimension.
pub fn sparse_dot(a: &SparseVector, b: &SparseVector) -> f64 {
    let mut acc = 0.0;
    let (mut ia, mut ib) = (0, 0);
    while ia < a.indices.len() && ib < b.indices.len() {
        match a.indices[ia].cmp(&b.indices[ib]) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => {
                acc += a.values[ia] * b.values[ib];
                ia += 1;
                ib += 1;
            }
        }
    }
    acc
}

/// Σ_k w_k · a_k · b_k over shared indices; the kernel behind diagonal
/// similarity terms.
pub fn weighted_hadamard_dot(a: &SparseVector, b: &SparseVector, w: &[f64]) -> Result<f64> {
    let bound = |v: &SparseVector| v.max_index().map_or(0, |m| m as usize + 1);
    if bound(a) > w.len() || bound(b) > w.len() {
        return Err(Error::Dimension(format!(
            "weight vector has length {} but vectors index up to {}",
            w.len(),
            bound(a).max(bound(b)) - 1
        )));
    }
    let mut acc = 0.0;
    let (mut ia, mut ib) = (0, 0);
    while ia < a.indices.len() && ib < b.indices.len() {
        match a.indices[ia].cmp(&b.indices[ib]) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => {
                acc += w[a.indices[ia] as usize] * a.values[ia] * b.values[ib];
                ia += 1;
                ib += 1;
            }
        }
    }
    Ok(acc)
}

/// a − b with exact-zero results pruned.
pub fn sparse_sub(a: &SparseVector, b: &SparseVector) -> SparseVector {
    let mut indices = Vec::with_capacity(a.nnz() + b.nnz());
    let mut values = Vec::with_capacity(a.nnz() + b.nnz());
    let mut push = |i: FeatureId, v: f64| {
        if v != 0.0 {
            indices.push(i);
            values.push(v);
        }
    };
    let (mut ia, mut ib) = (0, 0);
    while ia < a.indices.len() && ib < b.indices.len() {
        match a.indices[ia].cmp(&b.indices[ib]) {
            std::cmp::Ordering::Less => {
                push(a.indices[ia], a.values[ia]);
                ia += 1;
            }
            std::cmp::Ordering::Greater => {
                push(b.indices[ib], -b.values[ib]);
                ib += 1;
            }
            std::cmp::Ordering::Equal => {
                push(a.indices[ia], a.values[ia] - b.values[ib]);
                ia += 1;
                ib += 1;
            }
        }
    }
    for k in ia..a.indices.len() {
        push(a.indices[k], a.values[k]);
    }
    for k in ib..b.indices.len() {
        push(b.indices[k], -b.values[k]);
    }
    SparseVector::from_sorted_unchecked(indices, values)
}

/// Elementwise product a ⊙ b; support is the intersection of supports.
pub fn sparse_hadamard(a: &SparseVector, b: &SparseVector) -> SparseVector {
    let mut indices = Vec::new();
    let mut values = Vec::new();
    let (mut ia, mut ib) = (0, 0);
    while ia < a.indices.len() && ib < b.indices.len() {
        match a.indices[ia].cmp(&b.indices[ib]) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => {
                let v = a.values[ia] * b.values[ib];
                if v != 0.0 {
                    indices.push(a.indices[ia]);
                    values.push(v);
                }
                ia += 1;
                ib += 1;
            }
        }
    }
    SparseVector::from_sorted_unchecked(indices, values)
}

/// Dense h × n_F factor matrix; column p is the latent factor of feature p.
/// Stored column-major so per-feature columns are contiguous.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseFactorMatrix {
    h: usize,
    n_features: usize,
    entries: Vec<f64>,
}

impl DenseFactorMatrix {
    pub fn zeros(h: usize, n_features: usize) -> Self {
        Self {
            h,
            n_features,
            entries: vec![0.0; h * n_features],
        }
    }

    /// Build from column-major entries (column p at `entries[p*h..(p+1)*h]`).
    pub fn from_columns(h: usize, n_features: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != h * n_features {
            return Err(Error::Dimension(format!(
                "factor matrix expects {} entries, got {}",
                h * n_features,
                entries.len()
            )));
        }
        if !entries.iter().all(|v| v.is_finite()) {
            return Err(Error::Dimension("non-finite factor entry".into()));
        }
        Ok(Self {
            h,
            n_features,
            entries,
        })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn n_features(&self) -> usize {
        self.n_features
    }

    pub fn column(&self, p: FeatureId) -> &[f64] {
        let p = p as usize;
        &self.entries[p * self.h..(p + 1) * self.h]
    }

    pub fn column_mut(&mut self, p: FeatureId) -> &mut [f64] {
        let p = p as usize;
        &mut self.entries[p * self.h..(p + 1) * self.h]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks_exact(self.h.max(1))
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|v| v.is_finite())
    }
}

/// V·x for sparse x: Σ_{k ∈ support(x)} x_k · v_k. Cost O(nnz(x)·h).
pub fn factor_times_sparse(v: &DenseFactorMatrix, x: &SparseVector) -> Result<Vec<f64>> {
    if let Some(m) = x.max_index() {
        if m as usize >= v.n_features {
            return Err(Error::Dimension(format!(
                "vector indexes feature {m} but factor matrix has {} features",
                v.n_features
            )));
        }
    }
    let mut out = vec![0.0; v.h];
    for (k, xv) in x.iter() {
        let col = v.column(k);
        for (o, c) in out.iter_mut().zip(col) {
            *o += xv * c;
        }
    }
    Ok(out)
}

/// Item feature matrix F: one sparse row per item, all indices < n_features.
#[derive(Debug, Clone, PartialEq)]
pub struct ItemFeatureMatrix {
    n_features: usize,
    rows: Vec<SparseVector>,
}

impl ItemFeatureMatrix {
    pub fn from_rows(n_features: usize, rows: Vec<SparseVector>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if let Some(m) = row.max_index() {
                if m as usize >= n_features {
                    return Err(Error::Dimension(format!(
                        "item {i} indexes feature {m} but n_features = {n_features}"
                    )));
                }
            }
        }
        Ok(Self { n_features, rows })
    }

    pub fn n_items(&self) -> usize {
        self.rows.len()
    }

    pub fn n_features(&self) -> usize {
        self.n_features
    }

    pub fn row(&self, item: ItemId) -> &SparseVector {
        &self.rows[item as usize]
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVector::nnz).sum()
    }

    /// Copy with every non-empty row scaled to unit L2 norm.
    pub fn l2_normalized(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let n = r.l2_norm();
                if n > 0.0 {
                    r.scaled(1.0 / n)
                } else {
                    r.clone()
                }
            })
            .collect();
        Self {
            n_features: self.n_features,
            rows,
        }
    }
}

/// Elementwise sum of the listed items' feature vectors (the user profile
/// vector f_u when called on R_u⁺).
pub fn accumulate_user_vector(
    features: &ItemFeatureMatrix,
    items: &[ItemId],
) -> Result<SparseVector> {
    for &i in items {
        if i as usize >= features.n_items() {
            return Err(Error::Dimension(format!(
                "item id {i} out of range (n_items = {})",
                features.n_items()
            )));
        }
    }
    let mut pairs: Vec<(FeatureId, f64)> = Vec::new();
    for &i in items {
        pairs.extend(features.row(i).iter());
    }
    pairs.sort_by_key(|&(i, _)| i);
    let mut indices = Vec::new();
    let mut values = Vec::new();
    for (i, v) in pairs {
        if indices.last() == Some(&i) {
            *values.last_mut().unwrap() += v;
        } else {
            indices.push(i);
            values.push(v);
        }
    }
    // prune exact-zero sums
    let mut out_i = Vec::with_capacity(indices.len());
    let mut out_v = Vec::with_capacity(values.len());
    for (i, v) in indices.into_iter().zip(values) {
        if v != 0.0 {
            out_i.push(i);
            out_v.push(v);
        }
    }
    Ok(SparseVector::from_sorted_unchecked(out_i, out_v))
}

/// Binary user-item preferences: per-user sorted positive sets R_u⁺ and
/// optional explicit negative sets. Membership only, no rating values.
#[derive(Debug, Clone, PartialEq)]
pub struct PreferenceData {
    n_users: usize,
    n_items: usize,
    positives: Vec<Vec<ItemId>>,
    negatives: Vec<Vec<ItemId>>,
}

impl PreferenceData {
    pub fn new(
        n_users: usize,
        n_items: usize,
        mut positives: Vec<Vec<ItemId>>,
        mut negatives: Vec<Vec<ItemId>>,
    ) -> Result<Self> {
        if positives.len() != n_users {
            return Err(Error::Dimension(format!(
                "expected {n_users} positive sets, got {}",
                positives.len()
            )));
        }
        if negatives.is_empty() {
            negatives = vec![Vec::new(); n_users];
        }
        if negatives.len() != n_users {
            return Err(Error::Dimension(format!(
                "expected {n_users} negative sets, got {}",
                negatives.len()
            )));
        }
        for (u, (pos, neg)) in positives.iter_mut().zip(negatives.iter_mut()).enumerate() {
            pos.sort_unstable();
            pos.dedup();
            neg.sort_unstable();
            neg.dedup();
            for &i in pos.iter().chain(neg.iter()) {
                if i as usize >= n_items {
                    return Err(Error::Dimension(format!(
                        "user {u}: item id {i} out of range (n_items = {n_items})"
                    )));
                }
            }
            if !disjoint_sorted(pos, neg) {
                return Err(Error::Dimension(format!(
                    "user {u}: positives and explicit negatives overlap"
                )));
            }
        }
        Ok(Self {
            n_users,
            n_items,
            positives,
            negatives,
        })
    }

    pub fn n_users(&self) -> usize {
        self.n_users
    }

    pub fn n_items(&self) -> usize {
        self.n_items
    }

    pub fn positives(&self, u: UserId) -> &[ItemId] {
        &self.positives[u as usize]
    }

    pub fn explicit_negatives(&self, u: UserId) -> &[ItemId] {
        &self.negatives[u as usize]
    }

    pub fn is_positive(&self, u: UserId, i: ItemId) -> bool {
        self.positives[u as usize].binary_search(&i).is_ok()
    }

    /// Total number of stored positive preferences, nnz(R).
    pub fn n_preferences(&self) -> usize {
        self.positives.iter().map(Vec::len).sum()
    }

    pub fn has_explicit_negatives(&self) -> bool {
        self.negatives.iter().any(|n| !n.is_empty())
    }

    /// View restricted to items for which `keep` returns true; users are
    /// retained even when their restricted sets are empty.
    pub fn restrict_items(&self, keep: impl Fn(ItemId) -> bool) -> Self {
        let filter = |sets: &Vec<Vec<ItemId>>| {
            sets.iter()
                .map(|s| s.iter().copied().filter(|&i| keep(i)).collect())
                .collect()
        };
        Self {
            n_users: self.n_users,
            n_items: self.n_items,
            positives: filter(&self.positives),
            negatives: filter(&self.negatives),
        }
    }

    /// Items appearing in any positive or explicit negative set, sorted.
    pub fn items_in_use(&self) -> Vec<ItemId> {
        let mut items: Vec<ItemId> = self
            .positives
            .iter()
            .chain(self.negatives.iter())
            .flatten()
            .copied()
            .collect();
        items.sort_unstable();
        items.dedup();
        items
    }
}

fn disjoint_sorted(a: &[ItemId], b: &[ItemId]) -> bool {
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() && ib < b.len() {
        match a[ia].cmp(&b[ib]) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(pairs: &[(u32, f64)]) -> SparseVector {
        SparseVector::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn dot_single_shared_index() {
        let a = sv(&[(0, 1.0), (2, 3.0)]);
        let b = sv(&[(2, 2.0)]);
        assert_eq!(sparse_dot(&a, &b), 6.0);
    }

    #[test]
    fn dot_empty_vector_is_zero() {
        let a = SparseVector::new();
        let b = sv(&[(1, 4.0), (7, -2.0)]);
        assert_eq!(sparse_dot(&a, &b), 0.0);
        assert_eq!(sparse_dot(&b, &a), 0.0);
    }

    #[test]
    fn dot_matches_dense_oracle() {
        let a = sv(&[(1, 2.0), (4, -1.0)]);
        let b = sv(&[(1, 0.5), (4, 2.0)]);
        assert_eq!(sparse_dot(&a, &b), -1.0);
        let (da, db) = (a.to_dense(8), b.to_dense(8));
        let dense: f64 = da.iter().zip(&db).map(|(x, y)| x * y).sum();
        assert_eq!(sparse_dot(&a, &b), dense);
    }

    #[test]
    fn weighted_dot_identity_and_zero_weights() {
        let a = sv(&[(0, 1.0), (3, 2.0)]);
        let b = sv(&[(0, 4.0), (3, -1.0)]);
        let ones = vec![1.0; 4];
        let zeros = vec![0.0; 4];
        assert_eq!(
            weighted_hadamard_dot(&a, &b, &ones).unwrap(),
            sparse_dot(&a, &b)
        );
        assert_eq!(weighted_hadamard_dot(&a, &b, &zeros).unwrap(), 0.0);
    }

    #[test]
    fn weighted_dot_hand_value() {
        let a = sv(&[(0, 2.0)]);
        let b = sv(&[(0, 3.0)]);
        assert_eq!(weighted_hadamard_dot(&a, &b, &[0.5]).unwrap(), 3.0);
    }

    #[test]
    fn weighted_dot_rejects_short_weights() {
        let a = sv(&[(5, 1.0)]);
        let b = sv(&[(5, 1.0)]);
        assert!(weighted_hadamard_dot(&a, &b, &[1.0; 3]).is_err());
    }

    #[test]
    fn sub_self_is_empty() {
        let a = sv(&[(0, 1.0), (9, -4.0)]);
        assert!(sparse_sub(&a, &a).is_empty());
    }

    #[test]
    fn sub_disjoint_supports() {
        let a = sv(&[(0, 1.0)]);
        let b = sv(&[(1, 1.0)]);
        assert_eq!(sparse_sub(&a, &b), sv(&[(0, 1.0), (1, -1.0)]));
    }

    #[test]
    fn sub_overlapping_matches_dense() {
        let a = sv(&[(0, 1.0), (1, 2.0)]);
        let b = sv(&[(1, 2.0), (2, 3.0)]);
        assert_eq!(sparse_sub(&a, &b), sv(&[(0, 1.0), (2, -3.0)]));
    }

    #[test]
    fn hadamard_intersects_supports() {
        let a = sv(&[(0, 2.0), (1, 3.0)]);
        let b = sv(&[(1, 4.0), (2, 5.0)]);
        assert_eq!(sparse_hadamard(&a, &b), sv(&[(1, 12.0)]));
    }

    #[test]
    fn factor_times_empty_is_zero() {
        let v = DenseFactorMatrix::zeros(3, 4);
        assert_eq!(
            factor_times_sparse(&v, &SparseVector::new()).unwrap(),
            vec![0.0; 3]
        );
    }

    #[test]
    fn factor_times_single_support_gathers_column() {
        let mut v = DenseFactorMatrix::zeros(2, 3);
        v.column_mut(1).copy_from_slice(&[0.5, -2.0]);
        let x = sv(&[(1, 3.0)]);
        assert_eq!(factor_times_sparse(&v, &x).unwrap(), vec![1.5, -6.0]);
    }

    #[test]
    fn factor_times_out_of_range_errors() {
        let v = DenseFactorMatrix::zeros(2, 3);
        let x = sv(&[(3, 1.0)]);
        assert!(factor_times_sparse(&v, &x).is_err());
    }

    #[test]
    fn accumulate_empty_and_singleton() {
        let f = ItemFeatureMatrix::from_rows(4, vec![sv(&[(0, 1.0), (2, 2.0)]), sv(&[(2, 5.0)])])
            .unwrap();
        assert!(accumulate_user_vector(&f, &[]).unwrap().is_empty());
        assert_eq!(&accumulate_user_vector(&f, &[0]).unwrap(), f.row(0));
    }

    #[test]
    fn accumulate_overlapping_matches_dense_sum() {
        let f = ItemFeatureMatrix::from_rows(4, vec![sv(&[(0, 1.0), (2, 2.0)]), sv(&[(2, 5.0)])])
            .unwrap();
        let got = accumulate_user_vector(&f, &[0, 1]).unwrap();
        let mut dense = vec![0.0; 4];
        for r in [0u32, 1] {
            for (i, v) in f.row(r).iter() {
                dense[i as usize] += v;
            }
        }
        assert_eq!(got.to_dense(4), dense);
    }

    #[test]
    fn accumulate_invalid_item_errors() {
        let f = ItemFeatureMatrix::from_rows(4, vec![sv(&[(0, 1.0)])]).unwrap();
        assert!(accumulate_user_vector(&f, &[2]).is_err());
    }

    #[test]
    fn from_pairs_rejects_duplicates_and_nonfinite() {
        assert!(SparseVector::from_pairs([(1, 1.0), (1, 2.0)]).is_err());
        assert!(SparseVector::from_pairs([(0, f64::NAN)]).is_err());
        assert!(SparseVector::from_pairs([(0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn from_pairs_prunes_zeros_and_sorts() {
        let v = SparseVector::from_pairs([(4, 1.0), (1, 0.0), (0, 2.0)]).unwrap();
        assert_eq!(v, sv(&[(0, 2.0), (4, 1.0)]));
    }

    #[test]
    fn preference_data_rejects_overlap_and_range() {
        assert!(PreferenceData::new(1, 3, vec![vec![0, 1]], vec![vec![1]]).is_err());
        assert!(PreferenceData::new(1, 3, vec![vec![5]], vec![]).is_err());
        let p = PreferenceData::new(2, 3, vec![vec![2, 0], vec![]], vec![vec![1], vec![]]).unwrap();
        assert_eq!(p.positives(0), &[0, 2]);
        assert!(p.is_positive(0, 2));
        assert!(!p.is_positive(1, 0));
        assert_eq!(p.n_preferences(), 2);
        assert_eq!(p.items_in_use(), vec![0, 1, 2]);
    }

    #[test]
    fn restrict_items_keeps_users() {
        let p = PreferenceData::new(2, 4, vec![vec![0, 3], vec![1]], vec![]).unwrap();
        let r = p.restrict_items(|i| i < 2);
        assert_eq!(r.n_users(), 2);
        assert_eq!(r.positives(0), &[0]);
        assert_eq!(r.positives(1), &[1]);
    }

    fn arb_sparse(n_f: u32, max_nnz: usize) -> impl Strategy<Value = SparseVector> {
        proptest::collection::btree_map(0..n_f, -1.0f64..1.0, 0..=max_nnz)
            .prop_map(|m| SparseVector::from_pairs(m).unwrap())
    }

    proptest! {
        #[test]
        fn dot_is_symmetric(a in arb_sparse(64, 16), b in arb_sparse(64, 16)) {
            prop_assert_eq!(sparse_dot(&a, &b), sparse_dot(&b, &a));
        }

        #[test]
        fn weighted_dot_is_symmetric(
            a in arb_sparse(32, 12),
            b in arb_sparse(32, 12),
            w in proptest::collection::vec(-2.0f64..2.0, 32),
        ) {
            prop_assert_eq!(
                weighted_hadamard_dot(&a, &b, &w).unwrap(),
                weighted_hadamard_dot(&b, &a, &w).unwrap()
            );
        }

        #[test]
        fn sub_matches_dense(a in arb_sparse(32, 12), b in arb_sparse(32, 12)) {
            let got = sparse_sub(&a, &b).to_dense(32);
            let (da, db) = (a.to_dense(32), b.to_dense(32));
            let want: Vec<f64> = da.iter().zip(&db).map(|(x, y)| x - y).collect();
            prop_assert_eq!(got, want);
        }

        #[test]
        fn factor_times_matches_dense_matvec(
            x in arb_sparse(64, 16),
            cols in proptest::collection::vec(-1.0f64..1.0, 3 * 64),
        ) {
            let v = DenseFactorMatrix::from_columns(3, 64, cols).unwrap();
            let got = factor_times_sparse(&v, &x).unwrap();
            let dx = x.to_dense(64);
            for r in 0..3 {
                let want: f64 = (0..64).map(|p| v.column(p as u32)[r] * dx[p]).sum();
                prop_assert!((got[r] - want).abs() <= 1e-12);
            }
        }
    }
}
