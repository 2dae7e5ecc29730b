use std::collections::BTreeMap;

use crate::arith::scalar::Scalar;

/// Sparse vector keyed by basis labels.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Incremental row echelon form over `Q(i)`.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `v` after elimination against the current pivots.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v: SparseVec<K> = v.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect();
        let mut done: SparseVec<K> = BTreeMap::new();
        while let Some((k, c)) = v.pop_first() {
            match self.pivots.get(&k) {
                None => {
                    done.insert(k, c);
                }
                Some(row) => {
                    for (rk, rc) in row.iter().skip(1) {
                        let e = v.entry(rk.clone()).or_default();
                        *e -= &(&c * rc);
                        if e.is_zero() {
                            v.remove(rk);
                        }
                    }
                }
            }
        }
        done
    }

    /// Adds `v`; returns true when it was independent of the previous rows.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.first_key_value() else {
            return false;
        };
        let inv = c.inv().expect("nonzero pivot");
        let lead = lead.clone();
        let row: SparseVec<K> = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn exact_rank<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
