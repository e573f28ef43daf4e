//! Process-wide table of computed Jack and shifted Jack polynomials.
//!
//! Entries are keyed by `(family, r, d, partition)`. Two threads may compute
//! the same entry concurrently; both results are identical and the first
//! insert wins.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::rational::Rational;
use crate::sympoly::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Jack polynomial `P_m(z; d/2)`.
    P,
    /// Shifted (interpolation) Jack polynomial.
    Pip,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::Pip => "Pip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    pub family: Family,
    pub r: usize,
    pub d: Rational,
    pub partition: Partition,
}

type Table = RwLock<HashMap<Key, Arc<SymPoly>>>;

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn get(key: &Key) -> Option<Arc<SymPoly>> {
    table().read().expect("memo lock").get(key).cloned()
}

/// Inserts `value` unless an entry exists; returns the stored value.
pub fn insert(key: Key, value: SymPoly) -> Arc<SymPoly> {
    let mut t = table().write().expect("memo lock");
    t.entry(key).or_insert_with(|| Arc::new(value)).clone()
}

pub fn get_or_try_insert<E>(
    key: Key,
    compute: impl FnOnce() -> std::result::Result<SymPoly, E>,
) -> std::result::Result<Arc<SymPoly>, E> {
    if let Some(v) = get(&key) {
        return Ok(v);
    }
    let value = compute()?;
    Ok(insert(key, value))
}

/// Entries for one family, `r` and `d`, sorted by partition.
pub fn entries(family: Family, r: usize, d: &Rational) -> Vec<(Partition, Arc<SymPoly>)> {
    let t = table().read().expect("memo lock");
    let mut v: Vec<_> = t
        .iter()
        .filter(|(k, _)| k.family == family && k.r == r && &k.d == d)
        .map(|(k, p)| (k.partition.clone(), p.clone()))
        .collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

/// Drops every memoized entry.
pub fn clear() {
    table().write().expect("memo lock").clear();
}

/// Every memoized entry, in a stable order.
pub fn all_entries() -> Vec<(Key, Arc<SymPoly>)> {
    let t = table().read().expect("memo lock");
    let mut v: Vec<_> = t.iter().map(|(k, p)| (k.clone(), p.clone())).collect();
    v.sort_by(|a, b| {
        (a.0.family, a.0.r, &a.0.d, &a.0.partition).cmp(&(b.0.family, b.0.r, &b.0.d, &b.0.partition))
    });
    v
}
