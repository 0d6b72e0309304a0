//! Sparse exact linear algebra over a field: incremental row echelon form
//! with combination tracking.

use std::collections::BTreeMap;

use crate::scalars::Field;

pub type SparseVec<K, F> = BTreeMap<K, F>;

/// `v[k] <- v[k] + c`, dropping a cancelled entry.
pub fn add_entry<K: Ord, F: Field>(v: &mut SparseVec<K, F>, k: K, c: &F) {
    if c.is_zero() {
        return;
    }
    match v.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add_ref(c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// `v <- v + c * w`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone, F: Field>(v: &mut SparseVec<K, F>, c: &F, w: &SparseVec<K, F>) {
    for (k, x) in w {
        let add = c.mul_ref(x);
        match v.get_mut(k) {
            Some(e) => {
                let s = e.add_ref(&add);
                if s.is_zero() {
                    v.remove(k);
                } else {
                    *e = s;
                }
            }
            None => {
                if !add.is_zero() {
                    v.insert(k.clone(), add);
                }
            }
        }
    }
}

pub fn scale_vec<K: Ord + Clone, F: Field>(v: &SparseVec<K, F>, c: &F) -> SparseVec<K, F> {
    v.iter()
        .map(|(k, x)| (k.clone(), x.mul_ref(c)))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

#[derive(Clone, Debug)]
struct Pivot<K, F> {
    vec: SparseVec<K, F>,
    /// The pivot vector as a combination of inserted vectors, by label.
    combo: SparseVec<usize, F>,
}

/// Row echelon form keyed by the largest entry of each stored vector.
#[derive(Clone, Debug)]
pub struct Echelon<K, F> {
    pivots: BTreeMap<K, Pivot<K, F>>,
    inserted: usize,
}

impl<K: Ord + Clone, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of vectors inserted so far; the next insert gets this label.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` by leading entries; returns the remainder and the
    /// combination (by label) that was subtracted.
    fn reduce_leading(&self, v: &SparseVec<K, F>) -> (SparseVec<K, F>, SparseVec<usize, F>) {
        let mut cur = v.clone();
        let mut coords = SparseVec::new();
        while let Some((k, c)) = cur.last_key_value() {
            let Some(p) = self.pivots.get(k) else { break };
            let c = c.clone();
            axpy(&mut cur, &c.neg_ref(), &p.vec);
            axpy(&mut coords, &c, &p.combo);
        }
        (cur, coords)
    }

    /// Inserts `v` under the next label. Returns `None` if `v` was independent
    /// of the stored span, otherwise its coordinates in the earlier labels.
    pub fn insert(&mut self, v: &SparseVec<K, F>) -> Option<SparseVec<usize, F>> {
        let label = self.inserted;
        self.inserted += 1;
        let (cur, coords) = self.reduce_leading(v);
        let Some((k, lead)) = cur.last_key_value() else {
            return Some(coords);
        };
        let inv = lead.inverse().expect("nonzero leading entry");
        let k = k.clone();
        let mut combo = scale_vec(&coords, &inv.neg_ref());
        add_entry(&mut combo, label, &inv);
        self.pivots.insert(
            k,
            Pivot {
                vec: scale_vec(&cur, &inv),
                combo,
            },
        );
        None
    }

    /// Coordinates of `v` in the inserted labels, if `v` lies in the span.
    pub fn express(&self, v: &SparseVec<K, F>) -> Option<SparseVec<usize, F>> {
        let (cur, coords) = self.reduce_leading(v);
        cur.is_empty().then_some(coords)
    }

    /// Fully reduces `v`: no remaining entry sits at a pivot key.
    pub fn reduce_fully(&self, v: &SparseVec<K, F>) -> SparseVec<K, F> {
        let mut cur = v.clone();
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => cur.keys().next_back().cloned(),
                Some(b) => cur.range(..b.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(p) = self.pivots.get(&k) {
                let c = cur[&k].clone();
                axpy(&mut cur, &c.neg_ref(), &p.vec);
            }
            bound = Some(k);
        }
        cur
    }
}

/// Kernel of the linear map sending basis vector `j` to `columns[j]`.
pub fn kernel<K: Ord + Clone, F: Field>(columns: &[SparseVec<K, F>]) -> Vec<SparseVec<usize, F>> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Some(coords) = ech.insert(col) {
            let mut v = scale_vec(&coords, &F::one().neg_ref());
            v.insert(j, F::one());
            out.push(v);
        }
    }
    out
}

/// Rank of a set of vectors.
pub fn rank<K: Ord + Clone, F: Field>(rows: &[SparseVec<K, F>]) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Dense square matrix helpers (small sizes only).
pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = F::zero();
                    for (t, bt) in b.iter().enumerate() {
                        s.add_assign_ref(&a[i][t].mul_ref(&bt[j]));
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Null space of a dense matrix acting on column vectors.
pub fn dense_kernel<F: Field>(a: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let columns: Vec<SparseVec<usize, F>> = (0..ncols)
        .map(|j| {
            a.iter()
                .enumerate()
                .filter(|(_, row)| !row[j].is_zero())
                .map(|(i, row)| (i, row[j].clone()))
                .collect()
        })
        .collect();
    kernel(&columns)
        .into_iter()
        .map(|v| {
            (0..ncols)
                .map(|j| v.get(&j).cloned().unwrap_or_else(F::zero))
                .collect()
        })
        .collect()
}
