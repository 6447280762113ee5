//! Simulated annealing over single-ball relocations.
//!
//! Each restart runs its own chain from a greedy (or given) start with a
//! geometric temperature schedule and Metropolis acceptance on the change in
//! contact count. Restart `r` draws from stream `r` of a ChaCha generator
//! seeded with the search seed, so results do not depend on thread count.

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::greedy::grow_sites;
use super::{with_pool, Deadline, SearchError, SearchParams, SearchResult, SiteGraph, Status};
use crate::packing::{CanonicalForm, Configuration};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnealSchedule {
    /// Proposals per restart.
    pub steps: u64,
    pub t_start: f64,
    pub t_end: f64,
    /// Probability of proposing a site next to another ball rather than a
    /// uniformly random free site.
    pub adjacent_bias: f64,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule { steps: 400_000, t_start: 2.0, t_end: 0.1, adjacent_bias: 0.95 }
    }
}

struct Chain {
    best: Vec<u32>,
    best_count: usize,
    truncated: bool,
}

fn run_chain(
    graph: &SiteGraph,
    init: Vec<u32>,
    sched: &AnnealSchedule,
    rng: &mut ChaCha8Rng,
    deadline: &Deadline,
) -> Chain {
    let n = init.len();
    let sites = graph.len();
    let mut pos = init;
    let mut member = vec![false; sites];
    let mut touch = vec![0i32; sites];
    for &s in &pos {
        member[s as usize] = true;
        for &t in &graph.adj[s as usize] {
            touch[t as usize] += 1;
        }
    }
    let mut cur = graph.count_edges(&pos) as i64;
    let mut chain = Chain { best: pos.clone(), best_count: cur as usize, truncated: false };
    if sites == n || n == 0 || sched.steps == 0 {
        return chain;
    }
    let cooling = (sched.t_end / sched.t_start).ln();
    for step in 0..sched.steps {
        if step % 1024 == 0 && deadline.expired() {
            chain.truncated = true;
            break;
        }
        let temp = sched.t_start * (cooling * step as f64 / sched.steps as f64).exp();
        let b = rng.gen_range(0..n);
        let from = pos[b];
        let to = if rng.gen::<f64>() < sched.adjacent_bias {
            let anchor = pos[rng.gen_range(0..n)];
            let adj = &graph.adj[anchor as usize];
            adj[rng.gen_range(0..adj.len())]
        } else {
            rng.gen_range(0..sites as u32)
        };
        if member[to as usize] {
            continue;
        }
        let linked = graph.adj[from as usize].contains(&to) as i32;
        let delta = touch[to as usize] - linked - touch[from as usize];
        if delta < 0 && rng.gen::<f64>() >= (delta as f64 / temp).exp() {
            continue;
        }
        member[from as usize] = false;
        for &t in &graph.adj[from as usize] {
            touch[t as usize] -= 1;
        }
        member[to as usize] = true;
        for &t in &graph.adj[to as usize] {
            touch[t as usize] += 1;
        }
        pos[b] = to;
        cur += delta as i64;
        if cur as usize > chain.best_count {
            chain.best_count = cur as usize;
            chain.best.clone_from(&pos);
        }
    }
    chain
}

/// Annealing from `params.initial` when given (completed greedily if it has
/// fewer than `n` balls), otherwise from a greedy start. The result is never
/// worse than the starting configuration.
pub fn anneal(params: &SearchParams) -> Result<SearchResult, SearchError> {
    params.check_size()?;
    let deadline = Deadline::new(params.budget);
    let graph = SiteGraph::new(params.window);
    let given = match &params.initial {
        Some(cfg) => {
            cfg.validate()?;
            if cfg.len() > params.n {
                return Err(SearchError::InitialSize { expected: params.n, found: cfg.len() });
            }
            Some(graph.indices_of(cfg)?)
        }
        None => None,
    };
    let centre = params.window.index_of(params.window.center()).expect("centre is inside") as u32;
    let restarts = params.restarts.max(1);
    let mut sched = params.schedule;
    if params.budget == Some(Duration::ZERO) {
        sched.steps = 0;
    }

    let one = |r: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(r as u64);
        let start = given.clone().unwrap_or_else(|| vec![centre]);
        let init = grow_sites(&graph, &start, params.n, &mut rng);
        let chain = run_chain(&graph, init, &sched, &mut rng, &deadline);
        let form = Configuration::new(graph.coords(&chain.best)).canonical();
        (chain, form, r)
    };
    let mut chains: Vec<(Chain, CanonicalForm, usize)> = with_pool(params.threads, || {
        if params.threads == 1 {
            (0..restarts).map(one).collect()
        } else {
            (0..restarts).into_par_iter().map(one).collect()
        }
    });
    chains.sort_by(|a, b| b.0.best_count.cmp(&a.0.best_count).then_with(|| a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let best_count = chains[0].0.best_count;
    let mut witnesses: Vec<CanonicalForm> =
        chains.iter().filter(|c| c.0.best_count == best_count).map(|c| c.1.clone()).collect();
    witnesses.dedup();
    let truncated = chains.iter().any(|c| c.0.truncated);
    let best = Configuration::new(graph.coords(&chains[0].0.best));
    Ok(SearchResult {
        best_count,
        best,
        witnesses,
        status: Status::HeuristicLowerBound,
        nodes_explored: sched.steps * restarts as u64,
        elapsed: deadline.elapsed(),
        provenance: format!(
            "anneal window={} seed={} restarts={} steps={} t_start={} t_end={} adjacent_bias={} init={}",
            params.window,
            params.seed,
            restarts,
            sched.steps,
            sched.t_start,
            sched.t_end,
            sched.adjacent_bias,
            if given.is_some() { "given" } else { "greedy" },
        ),
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::embedded;
    use crate::hexlattice::Window;
    use crate::search::{naive_oracle, Algorithm};

    #[test]
    fn zero_budget_keeps_initial() {
        let e = embedded(20).unwrap();
        let w = Window::new(4, 4, 3).unwrap();
        let p = SearchParams::new(20, w, Algorithm::Anneal).initial(e.configuration.clone()).budget(Duration::ZERO);
        let r = anneal(&p).unwrap();
        assert_eq!(r.best, e.configuration);
        assert_eq!(r.best_count, 64);
    }

    #[test]
    fn never_worse_than_initial() {
        let e = embedded(20).unwrap();
        let w = Window::new(4, 4, 3).unwrap();
        let sched = AnnealSchedule { steps: 5_000, ..Default::default() };
        let p = SearchParams::new(20, w, Algorithm::Anneal).initial(e.configuration).restarts(2).schedule(sched);
        assert!(anneal(&p).unwrap().best_count >= 64);
    }

    #[test]
    fn small_instance_reaches_oracle() {
        let w = Window::new(3, 3, 2).unwrap();
        let sched = AnnealSchedule { steps: 20_000, ..Default::default() };
        let p = SearchParams::new(4, w, Algorithm::Anneal).seed(3).restarts(2).schedule(sched);
        assert_eq!(anneal(&p).unwrap().best_count, naive_oracle(4, &w).unwrap());
    }

    #[test]
    fn restarts_are_thread_independent() {
        let w = Window::new(4, 4, 3).unwrap();
        let sched = AnnealSchedule { steps: 20_000, ..Default::default() };
        let base = SearchParams::new(12, w, Algorithm::Anneal).seed(11).restarts(4).schedule(sched);
        let a = anneal(&base.clone().threads(1)).unwrap();
        let b = anneal(&base.threads(3)).unwrap();
        assert_eq!(a.best, b.best);
        assert_eq!(a.witnesses, b.witnesses);
    }
}
