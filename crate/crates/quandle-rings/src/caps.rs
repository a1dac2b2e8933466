//! Size caps that keep the exhaustive searches desk-scale.

/// Limits on the exhaustive searches.
///
/// All enumeration entry points take a `Caps` and refuse (with a
/// `SizeLimit` error) to start a search whose state space exceeds the
/// corresponding cap, rather than running away.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest quandle order accepted by the automorphism backtracker.
    pub automorphism_max_n: usize,
    /// Largest map-space size `|P|^|Q|` accepted by the homomorphism search.
    pub hom_search_max: u64,
    /// Largest order accepted by exhaustive quandle-table enumeration.
    pub enumerate_max_n: usize,
    /// Largest box size `(2B+1)^k` accepted by the idempotent and
    /// Diophantine box sweeps.
    pub box_sweep_max: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            automorphism_max_n: 8,
            hom_search_max: 10_000_000,
            enumerate_max_n: 5,
            box_sweep_max: 10_000_000,
        }
    }
}

impl Caps {
    /// Caps with every search bound set to `limit` (orders stay at their
    /// defaults). Used by the CLI to honor a global size-cap override.
    pub fn with_search_limit(limit: u64) -> Self {
        Caps {
            hom_search_max: limit,
            box_sweep_max: limit,
            ..Caps::default()
        }
    }

    /// `base^exp` if it stays within `cap`, else `None`.
    pub(crate) fn checked_pow_within(base: u64, exp: u32, cap: u64) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..exp {
            acc = acc.checked_mul(base)?;
            if acc > cap {
                return None;
            }
        }
        Some(acc)
    }
}
