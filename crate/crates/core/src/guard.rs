//! Enumeration guards.
//!
//! Brute-force oracles refuse inputs whose search space exceeds a fixed
//! limit. Setting `MODCOUNT_GUARD_OVERRIDE` to an integer raises every limit
//! to at least that value.

use crate::{Error, Result};

pub const OVERRIDE_VAR: &str = "MODCOUNT_GUARD_OVERRIDE";

/// Search-space limit for coloring enumeration (`q^n`).
pub const COLORING_SPACE: u128 = 100_000_000;
/// Edge limit for subset enumeration over `2^m` edge sets.
pub const SUBSET_EDGES: u32 = 25;
/// Node budget for per-boundary gadget enumeration.
pub const GADGET_NODES: u128 = 100_000_000;

pub fn effective(default: u128) -> u128 {
    match std::env::var(OVERRIDE_VAR).ok().and_then(|s| s.trim().parse::<u128>().ok()) {
        Some(v) if v > default => v,
        _ => default,
    }
}

pub(crate) fn check_space(what: &str, space: Option<u128>, default: u128) -> Result<()> {
    let limit = effective(default);
    match space {
        Some(s) if s <= limit => Ok(()),
        Some(s) => Err(Error::Capacity(format!("{what}: search space {s} exceeds guard {limit}"))),
        None => Err(Error::Capacity(format!("{what}: search space overflows guard {limit}"))),
    }
}

/// Subset enumeration over `m` edges is allowed when `2^m` is within the
/// guard derived from [`SUBSET_EDGES`].
pub(crate) fn check_subsets(what: &str, m: usize) -> Result<()> {
    let space = if m < 127 { Some(1u128 << m) } else { None };
    check_space(what, space, 1u128 << SUBSET_EDGES)
}
