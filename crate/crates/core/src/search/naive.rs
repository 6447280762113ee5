//! Plain enumeration of every subset of a window. No pruning, no symmetry,
//! no neighbour tables: contacts come straight from the pairwise form.

use super::SearchError;
use crate::hexlattice::{is_contact, HexCoord, Window};

/// Largest number of subsets the oracle agrees to enumerate.
pub const NAIVE_SUBSET_CAP: u128 = 10_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

pub fn naive_oracle(n: usize, window: &Window) -> Result<usize, SearchError> {
    naive_oracle_containing(n, window, &[])
}

/// Best contact count over all `n`-subsets of `window` that contain every
/// site in `required`.
pub fn naive_oracle_containing(n: usize, window: &Window, required: &[HexCoord]) -> Result<usize, SearchError> {
    if n == 0 {
        return Err(SearchError::NoBalls);
    }
    let sites: Vec<HexCoord> = window.sites().collect();
    if sites.len() < n {
        return Err(SearchError::WindowTooSmall { n, sites: sites.len() });
    }
    if let Some(&p) = required.iter().find(|p| !window.contains(**p)) {
        return Err(SearchError::OutsideWindow(p));
    }
    let fixed: Vec<HexCoord> = {
        let mut f = required.to_vec();
        f.sort();
        f.dedup();
        f
    };
    if fixed.len() > n {
        return Err(SearchError::InitialSize { expected: n, found: fixed.len() });
    }
    let pool: Vec<HexCoord> = sites.into_iter().filter(|p| !fixed.contains(p)).collect();
    let pick = n - fixed.len();
    let subsets = binomial(pool.len(), pick);
    if subsets > NAIVE_SUBSET_CAP {
        return Err(SearchError::EnumerationTooLarge { subsets, cap: NAIVE_SUBSET_CAP });
    }

    let count_pairs = |a: &[HexCoord], b: &[HexCoord]| -> usize {
        a.iter().map(|&p| b.iter().filter(|&&q| is_contact(p, q)).count()).sum()
    };
    let base = count_pairs(&fixed, &fixed) / 2;
    // contacts of each pool site with the fixed part, and among pool sites
    let to_fixed: Vec<usize> = pool.iter().map(|&p| count_pairs(&[p], &fixed)).collect();
    let contact: Vec<Vec<bool>> = pool.iter().map(|&p| pool.iter().map(|&q| is_contact(p, q)).collect()).collect();

    let mut best = 0;
    let mut idx: Vec<usize> = (0..pick).collect();
    loop {
        let mut c = base;
        for (a, &x) in idx.iter().enumerate() {
            c += to_fixed[x];
            for &y in &idx[a + 1..] {
                c += contact[x][y] as usize;
            }
        }
        best = best.max(c);
        // next combination in lexicographic order
        let mut t = pick;
        loop {
            if t == 0 {
                return Ok(best);
            }
            t -= 1;
            if idx[t] != t + pool.len() - pick {
                break;
            }
            if t == 0 {
                return Ok(best);
            }
        }
        idx[t] += 1;
        for u in t + 1..pick {
            idx[u] = idx[u - 1] + 1;
        }
    }
}
