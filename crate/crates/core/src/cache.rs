//! Size-bounded memoization shared across threads.
//!
//! Each lookup and insert takes the lock once, so they behave atomically.
//! Two threads may both miss on the same key and compute it; the results are
//! identical and the second insert just overwrites the first.

use std::hash::Hash;
use std::num::NonZeroUsize;
use std::sync::Mutex;

use lru::LruCache;

/// Default number of entries kept by each global cache.
pub const DEFAULT_CAPACITY: usize = 1_000_000;

pub struct MemoCache<K: Hash + Eq, V: Clone> {
    inner: Mutex<LruCache<K, V>>,
}

impl<K: Hash + Eq, V: Clone> MemoCache<K, V> {
    pub fn new(capacity: usize) -> Self {
        MemoCache {
            inner: Mutex::new(LruCache::new(cap(capacity))),
        }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.inner.lock().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: K, value: V) {
        self.inner.lock().unwrap().put(key, value);
    }

    /// Looks up `key`, computing and storing it on a miss. The lock is not
    /// held while `compute` runs, so recursive use is fine.
    pub fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let v = compute();
        self.insert(key, v.clone());
        v
    }

    pub fn resize(&self, capacity: usize) {
        self.inner.lock().unwrap().resize(cap(capacity));
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.inner.lock().unwrap().clear();
    }
}

fn cap(capacity: usize) -> NonZeroUsize {
    NonZeroUsize::new(capacity.max(1)).unwrap()
}

/// Resizes every global memo cache in the crate.
pub fn set_capacity(capacity: usize) {
    crate::lr::cache_resize(capacity);
    crate::characters::cache_resize(capacity);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evicts_least_recently_used() {
        let c: MemoCache<u32, u32> = MemoCache::new(2);
        c.insert(1, 10);
        c.insert(2, 20);
        assert_eq!(c.get(&1), Some(10));
        c.insert(3, 30);
        assert_eq!(c.get(&2), None);
        assert_eq!(c.get(&1), Some(10));
        assert_eq!(c.get_or_insert_with(4, || 40), 40);
        assert_eq!(c.len(), 2);
        c.resize(1);
        assert_eq!(c.len(), 1);
    }
}
