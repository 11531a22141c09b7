//! Vertex lower bound for tori of type `m × k`.

use crate::error::{Error, Result};

fn half_up(m: i64) -> i64 {
    (m + 1) / 2
}

fn check(m: i64, k: i64) -> Result<()> {
    if m < 3 || m > k {
        return Err(Error::InvalidType { m, k });
    }
    Ok(())
}

/// `2⌈m/2⌉² + (k − 2⌈m/2⌉)·m + 1`.
pub fn lower_bound(m: i64, k: i64) -> Result<i64> {
    check(m, k)?;
    let c = half_up(m);
    Ok(2 * c * c + (k - 2 * c) * m + 1)
}

/// Whether `(m−3)k + 2⌈m/2⌉² − 2⌈m/2⌉m + 3 > 0`, i.e. the bound exceeds `3k − 2`.
pub fn bound_strict_gap(m: i64, k: i64) -> Result<bool> {
    check(m, k)?;
    let c = half_up(m);
    Ok((m - 3) * k + 2 * c * c - 2 * c * m + 3 > 0)
}
