//! Binomial arithmetic and the core threshold `t(k, r)`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Exact binomial coefficient with the convention `binom(n, k) = 0` for `k > n`.
///
/// Intermediate products use 128-bit arithmetic; a result that does not fit
/// in `u64` is reported as an overflow error, never wrapped.
pub fn binom(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::overflow(format!("binom({n}, {k})")))?;
        // Exact at every step: the running value is binom(n, i) times (n - i),
        // which binom(n, i+1) divides evenly.
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::overflow(format!("binom({n}, {k})")))
}

/// The largest integer `t` with `binom(t-1, r-1) <= k`, equivalently the
/// unique `t` with `binom(t-1, r-1) <= k < binom(t, r-1)`.
///
/// Found by a linear scan up from `t = r`. For `r = 2` this is `k + 1`.
pub fn threshold_t(k: usize, r: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidParams(format!("k >= 1 violated (k={k})")));
    }
    if r < 2 {
        return Err(Error::InvalidParams(format!("r >= 2 violated (r={r})")));
    }
    let mut t = r as u64;
    loop {
        match binom(t, r as u64 - 1) {
            Ok(c) if c <= k as u64 => t += 1,
            // Either binom(t, r-1) > k, or it overflows u64 and in particular
            // exceeds k; both terminate the scan.
            _ => return Ok(t as usize),
        }
    }
}

/// A parameter triple `(n, k, r)` together with its derived threshold `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
}

impl Params {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self> {
        let t = threshold_t(k, r)?;
        Ok(Params { n, k, r, t })
    }

    /// True when the parameters pin the edge-connectivity of every
    /// k-edge-maximal hypergraph to exactly `k`: `n >= t` suffices when
    /// `binom(t-1, r-1) = k`, and `n >= t + 1` is needed otherwise.
    pub fn forces_exact_connectivity(&self) -> bool {
        let core = binom(self.t as u64 - 1, self.r as u64 - 1).unwrap_or(u64::MAX);
        if core == self.k as u64 {
            self.n >= self.t
        } else {
            self.n > self.t
        }
    }
}
