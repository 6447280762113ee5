//! Greedy growth: add the free site touching the most balls, one at a time.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Deadline, SearchError, SearchParams, SearchResult, SiteGraph, Status};
use crate::hexlattice::pair_form;
use crate::packing::{canonicalize, CanonicalForm, Configuration};

/// Grows `start` to `n` sites. Among the free sites with the most contacts,
/// the most compact choice (smallest summed form value to the current balls)
/// wins, then the one giving the lexicographically smallest canonical form;
/// sites that still tie are equivalent and `rng` picks one of them.
pub(crate) fn grow_sites(graph: &SiteGraph, start: &[u32], n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut members = start.to_vec();
    let mut member = vec![false; graph.len()];
    let mut touch = vec![0u8; graph.len()];
    for &s in &members {
        member[s as usize] = true;
        for &t in &graph.adj[s as usize] {
            touch[t as usize] += 1;
        }
    }
    while members.len() < n {
        let top =
            (0..graph.len()).filter(|&s| !member[s]).map(|s| touch[s]).max().expect("window has room for n sites");
        let top_sites: Vec<u32> =
            (0..graph.len() as u32).filter(|&s| !member[s as usize] && touch[s as usize] == top).collect();
        let spreads: Vec<u64> = top_sites
            .iter()
            .map(|&s| {
                let p = graph.window.site(s as usize);
                members.iter().map(|&m| pair_form(p, graph.window.site(m as usize)).0).sum()
            })
            .collect();
        let tightest = spreads.iter().min().copied();
        let mut best_form: Option<CanonicalForm> = None;
        let mut tied: Vec<u32> = Vec::new();
        for (s, spread) in top_sites.into_iter().zip(spreads) {
            if Some(spread) != tightest {
                continue;
            }
            members.push(s);
            let form = canonicalize(&graph.coords(&members));
            members.pop();
            match best_form.as_ref().map(|b| form.cmp(b)) {
                None | Some(std::cmp::Ordering::Less) => {
                    best_form = Some(form);
                    tied = vec![s];
                }
                Some(std::cmp::Ordering::Equal) => tied.push(s),
                Some(std::cmp::Ordering::Greater) => {}
            }
        }
        let &pick = tied.choose(rng).expect("at least one candidate");
        member[pick as usize] = true;
        members.push(pick);
        for &t in &graph.adj[pick as usize] {
            touch[t as usize] += 1;
        }
    }
    members
}

/// Greedy construction from `params.initial` (or the window centre).
pub fn greedy_grow(params: &SearchParams) -> Result<SearchResult, SearchError> {
    params.check_size()?;
    let deadline = Deadline::new(None);
    let graph = SiteGraph::new(params.window);
    let start = match &params.initial {
        Some(cfg) => {
            cfg.validate()?;
            if cfg.len() > params.n {
                return Err(SearchError::InitialSize { expected: params.n, found: cfg.len() });
            }
            graph.indices_of(cfg)?
        }
        None => vec![params.window.index_of(params.window.center()).expect("centre is inside") as u32],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let sites = grow_sites(&graph, &start, params.n, &mut rng);
    let best = Configuration::new(graph.coords(&sites));
    let count = graph.count_edges(&sites);
    Ok(SearchResult {
        best_count: count,
        witnesses: vec![best.canonical()],
        best,
        status: Status::HeuristicLowerBound,
        nodes_explored: (params.n - start.len()) as u64,
        elapsed: deadline.elapsed(),
        provenance: format!("greedy window={} seed={}", params.window, params.seed),
        truncated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexlattice::{HexCoord, Window};
    use crate::search::{naive_oracle, Algorithm};

    #[test]
    fn single_ball() {
        let p = SearchParams::new(1, Window::new(3, 3, 3).unwrap(), Algorithm::Greedy);
        let r = greedy_grow(&p).unwrap();
        assert_eq!(r.best_count, 0);
        assert_eq!(r.best.centers, vec![HexCoord::new(1, 1, 1)]);
        assert_eq!(r.status, Status::HeuristicLowerBound);
    }

    #[test]
    fn thirteen_from_a_centre_ball() {
        let w = Window::new(5, 5, 5).unwrap();
        let p = SearchParams::new(13, w, Algorithm::Greedy).initial(Configuration::new(vec![w.center()]));
        let r = greedy_grow(&p).unwrap();
        assert_eq!(r.best.contact_count().unwrap(), r.best_count);
        assert_eq!(r.best_count, 36);
    }

    #[test]
    fn never_beats_the_oracle() {
        for (i, j, k) in [(3, 3, 1), (3, 3, 2), (2, 3, 2), (3, 2, 2)] {
            let w = Window::new(i, j, k).unwrap();
            for n in 1..=5.min(w.site_count()) {
                let g = greedy_grow(&SearchParams::new(n, w, Algorithm::Greedy)).unwrap();
                assert!(g.best_count <= naive_oracle(n, &w).unwrap());
            }
        }
    }

    #[test]
    fn initial_is_validated() {
        let w = Window::new(2, 2, 1).unwrap();
        let outside = Configuration::new(vec![HexCoord::new(5, 0, 0)]);
        let p = SearchParams::new(2, w, Algorithm::Greedy).initial(outside);
        assert!(matches!(greedy_grow(&p), Err(SearchError::OutsideWindow(_))));
        let big = Configuration::new(vec![HexCoord::new(0, 0, 0), HexCoord::new(1, 0, 0)]);
        let p = SearchParams::new(1, w, Algorithm::Greedy).initial(big);
        assert!(matches!(greedy_grow(&p), Err(SearchError::InitialSize { .. })));
    }
}
