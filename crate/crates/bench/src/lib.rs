//! Parameter grids shared by the benchmarks.

/// All `(s, n)` with `1 <= s <= n <= n_max`.
pub fn sn_grid(n_max: u32) -> Vec<(u32, u32)> {
    (1..=n_max)
        .flat_map(|n| (1..=n).map(move |s| (s, n)))
        .collect()
}

/// All `(n, k, s)` with `1 <= s <= n <= n_max`, `k <= k_max`.
pub fn nks_grid(n_max: u32, k_max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 0..=k_max {
            out.extend((1..=n).map(|s| (n, k, s)));
        }
    }
    out
}
