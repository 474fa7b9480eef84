//! Operation counters for scaling measurements.
//!
//! Each [`FieldTower`](crate::FieldTower) owns one set of counters; every
//! multiplication in L and every nontrivial Frobenius application in L bumps
//! them. They never influence results.

use std::sync::atomic::{AtomicU64, Ordering};

#[derive(Debug, Default)]
pub struct OpCounters {
    frobenius: AtomicU64,
    l_muls: AtomicU64,
}

/// A snapshot of [`OpCounters`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Applications of `c -> c^{q^t}` with `t != 0 mod n`.
    pub frobenius: u64,
    /// Multiplications in L.
    pub l_muls: u64,
}

impl OpCounts {
    pub fn since(&self, earlier: &OpCounts) -> OpCounts {
        OpCounts {
            frobenius: self.frobenius - earlier.frobenius,
            l_muls: self.l_muls - earlier.l_muls,
        }
    }
}

impl OpCounters {
    #[inline]
    pub(crate) fn frobenius(&self) {
        self.frobenius.fetch_add(1, Ordering::Relaxed);
    }

    #[inline]
    pub(crate) fn l_mul(&self) {
        self.l_muls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> OpCounts {
        OpCounts {
            frobenius: self.frobenius.load(Ordering::Relaxed),
            l_muls: self.l_muls.load(Ordering::Relaxed),
        }
    }

    pub fn reset(&self) {
        self.frobenius.store(0, Ordering::Relaxed);
        self.l_muls.store(0, Ordering::Relaxed);
    }
}
