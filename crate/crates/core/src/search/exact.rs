//! Exact in-window maximisation by branch-and-bound.
//!
//! Sizes are solved in increasing order `m = 1..=n`, so the optimum for `r`
//! balls is known when bounding how many edges `r` still-unplaced balls can
//! form among themselves.
//!
//! Each size is first searched over connected sets only, growing a set one
//! adjacent site at a time. Every connected set can be built that way (peel
//! off a non-cut vertex), so the connected optimum is exact. A disconnected
//! set splits into a component of some size `a` plus the rest, which bounds
//! its value by `conn(a) + opt(m - a)`. When the connected optimum reaches that
//! bound for every split, it is the in-window optimum; otherwise the size is
//! re-solved by an include/exclude search over all subsets.
//!
//! Partial sets are deduplicated up to the symmetries of the window itself
//! (lattice symmetries that map the box onto itself). Those preserve
//! adjacency inside the window, so a rejected set has an equivalent set whose
//! completions were explored.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use dashmap::DashSet;
use rayon::prelude::*;

use super::{place_in_window, with_pool, Deadline, SearchError, SearchParams, SearchResult, SiteGraph, Status};
use crate::hexlattice::{HexCoord, SymmetryOp, Window, COORDINATION};
use crate::packing::{canonicalize, CanonicalForm, Configuration};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Deduplicate partial sets under the window's symmetries.
    pub symmetry_reduction: bool,
    /// Search connected sets first; when off every size goes straight to
    /// the subset search.
    pub connected_growth: bool,
    /// Keep every node cut by the bound at the final size.
    pub record_prunes: bool,
    /// Keep at most this many (smallest) witnesses.
    pub max_witnesses: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { symmetry_reduction: true, connected_growth: true, record_prunes: false, max_witnesses: 256 }
    }
}

/// A partial set discarded by the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedNode {
    pub sites: Vec<HexCoord>,
    pub bound: usize,
    pub incumbent: usize,
}

#[derive(Debug, Clone)]
pub struct ExactOutcome {
    pub result: SearchResult,
    /// `profile[m]`: in-window optimum for `m` balls, `m = 0..=n`.
    pub profile: Vec<usize>,
    /// `connected_profile[m]`: optimum over connected sets (0 where not searched).
    pub connected_profile: Vec<usize>,
    /// Sizes that needed the subset search.
    pub subset_fallbacks: Vec<usize>,
    pub pruned: Vec<PrunedNode>,
}

pub fn exact_max_contacts(params: &SearchParams) -> Result<SearchResult, SearchError> {
    exact_search(params, &ExactOptions::default()).map(|o| o.result)
}

/// Lattice symmetries mapping `window` onto itself, as permutations of site
/// indices. The identity comes first.
pub fn window_stabilizer(window: &Window) -> Vec<Vec<u32>> {
    let sites: Vec<HexCoord> = window.sites().collect();
    let mut perms: Vec<Vec<u32>> = Vec::new();
    for g in SymmetryOp::point_group() {
        let img: Vec<HexCoord> = sites.iter().map(|&p| g.apply(p)).collect();
        let min = |f: fn(&HexCoord) -> i64| img.iter().map(f).min().unwrap_or(0);
        let (di, dj, dk) =
            (window.origin.i - min(|p| p.i), window.origin.j - min(|p| p.j), window.origin.k - min(|p| p.k));
        if dk % 2 != 0 {
            continue;
        }
        let perm: Option<Vec<u32>> =
            img.iter().map(|p| window.index_of(p.offset(di, dj, dk)).map(|x| x as u32)).collect();
        if let Some(perm) = perm {
            if !perms.contains(&perm) {
                perms.push(perm);
            }
        }
    }
    perms
}

#[derive(Clone)]
struct State {
    members: Vec<u32>,
    member: Vec<bool>,
    touch: Vec<u8>,
    edges: usize,
}

impl State {
    fn new(sites: usize) -> Self {
        State { members: Vec::new(), member: vec![false; sites], touch: vec![0; sites], edges: 0 }
    }

    fn add(&mut self, graph: &SiteGraph, s: u32) {
        self.edges += self.touch[s as usize] as usize;
        self.member[s as usize] = true;
        self.members.push(s);
        for &t in &graph.adj[s as usize] {
            self.touch[t as usize] += 1;
        }
    }

    fn pop(&mut self, graph: &SiteGraph) {
        let s = self.members.pop().expect("pop on empty state");
        self.member[s as usize] = false;
        for &t in &graph.adj[s as usize] {
            self.touch[t as usize] -= 1;
        }
        self.edges -= self.touch[s as usize] as usize;
    }
}

struct Witnesses {
    count: usize,
    forms: BTreeSet<CanonicalForm>,
    cap: usize,
}

impl Witnesses {
    fn offer(&mut self, value: usize, form: impl FnOnce() -> CanonicalForm) {
        if value < self.count {
            return;
        }
        if value > self.count {
            self.count = value;
            self.forms.clear();
        }
        self.forms.insert(form());
        if self.forms.len() > self.cap {
            self.forms.pop_last();
        }
    }
}

struct Ctx<'a> {
    graph: &'a SiteGraph,
    perms: &'a [Vec<u32>],
    target: usize,
    /// Optimum for every size below `target`.
    profile: &'a [usize],
    incumbent: AtomicUsize,
    visited: DashSet<Box<[u32]>>,
    nodes: &'a AtomicU64,
    aborted: &'a AtomicBool,
    deadline: Deadline,
    witnesses: Option<Mutex<Witnesses>>,
    prunes: Option<Mutex<Vec<PrunedNode>>>,
    parallel: bool,
}

const PARALLEL_DEPTH: usize = 2;

impl Ctx<'_> {
    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if (n == 1 || n.is_multiple_of(4096)) && self.deadline.expired() {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn key(&self, members: &[u32]) -> Box<[u32]> {
        let mut best: Vec<u32> = members.to_vec();
        best.sort_unstable();
        let mut buf = Vec::with_capacity(members.len());
        for p in &self.perms[1..] {
            buf.clear();
            buf.extend(members.iter().map(|&s| p[s as usize]));
            buf.sort_unstable();
            if buf < best {
                std::mem::swap(&mut buf, &mut best);
            }
        }
        best.into_boxed_slice()
    }

    /// Edges so far, plus what `r` more balls can add: each brings at most its
    /// touch count towards the current set, they form at most `profile[r]`
    /// edges among themselves, and the `t`-th ball has at most `min(12, t-1)`
    /// earlier neighbours.
    fn upper_bound(&self, st: &State, eligible_from: u32) -> usize {
        let m = st.members.len();
        let r = self.target - m;
        if r == 0 {
            return st.edges;
        }
        if m == 0 {
            return usize::MAX;
        }
        let mut hist = [0usize; COORDINATION + 1];
        for s in eligible_from as usize..st.touch.len() {
            if !st.member[s] {
                hist[st.touch[s] as usize] += 1;
            }
        }
        let mut left = r;
        let mut toward = 0;
        for t in (1..=COORDINATION).rev() {
            let take = hist[t].min(left);
            toward += take * t;
            left -= take;
            if left == 0 {
                break;
            }
        }
        let slots: usize = (m + 1..=self.target).map(|t| (t - 1).min(COORDINATION)).sum();
        st.edges + (toward + self.profile[r]).min(slots)
    }

    fn offer_leaf(&self, st: &State, extra: Option<u32>, value: usize) {
        if value < self.incumbent.load(Ordering::Relaxed) {
            return;
        }
        self.incumbent.fetch_max(value, Ordering::Relaxed);
        if let Some(w) = &self.witnesses {
            let form = || {
                let mut sites = st.members.clone();
                sites.extend(extra);
                canonicalize(&self.graph.coords(&sites))
            };
            w.lock().expect("witness lock").offer(value, form);
        }
    }

    fn record_prune(&self, st: &State, bound: usize, incumbent: usize) {
        if let Some(p) = &self.prunes {
            p.lock().expect("prune lock").push(PrunedNode { sites: self.graph.coords(&st.members), bound, incumbent });
        }
    }

    fn candidates(&self, st: &State) -> Vec<u32> {
        if st.members.is_empty() {
            return (0..self.graph.len() as u32).collect();
        }
        let mut c: Vec<u32> = st
            .members
            .iter()
            .flat_map(|&s| self.graph.adj[s as usize].iter().copied())
            .filter(|&t| !st.member[t as usize])
            .collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    fn grow(&self, st: &mut State, depth: usize) {
        if !self.tick() {
            return;
        }
        let cands = self.candidates(st);
        if st.members.len() + 1 == self.target {
            for c in cands {
                if st.members.is_empty() && !self.visited.insert(self.key(&[c])) {
                    continue;
                }
                self.offer_leaf(st, Some(c), st.edges + st.touch[c as usize] as usize);
            }
            return;
        }
        let mut spawned = Vec::new();
        for c in cands {
            st.add(self.graph, c);
            if self.visited.insert(self.key(&st.members)) {
                let bound = self.upper_bound(st, 0);
                let inc = self.incumbent.load(Ordering::Relaxed);
                if bound < inc {
                    self.record_prune(st, bound, inc);
                } else if self.parallel && depth < PARALLEL_DEPTH {
                    spawned.push(st.clone());
                } else {
                    self.grow(st, depth + 1);
                }
            }
            st.pop(self.graph);
        }
        if !spawned.is_empty() {
            spawned.into_par_iter().for_each(|mut child| self.grow(&mut child, depth + 1));
        }
    }

    /// Include/exclude over sites in index order; no connectivity assumed.
    fn subsets(&self, st: &mut State, pos: u32) {
        if !self.tick() {
            return;
        }
        if st.members.len() == self.target {
            self.offer_leaf(st, None, st.edges);
            return;
        }
        let r = self.target - st.members.len();
        if (self.graph.len() as u32 - pos) < r as u32 {
            return;
        }
        let bound = self.upper_bound(st, pos);
        let inc = self.incumbent.load(Ordering::Relaxed);
        if bound < inc {
            self.record_prune(st, bound, inc);
            return;
        }
        st.add(self.graph, pos);
        self.subsets(st, pos + 1);
        st.pop(self.graph);
        self.subsets(st, pos + 1);
    }
}

struct SizeRun {
    value: usize,
    witnesses: Vec<CanonicalForm>,
    pruned: Vec<PrunedNode>,
}

#[allow(clippy::too_many_arguments)]
fn solve_size(
    graph: &SiteGraph,
    perms: &[Vec<u32>],
    profile: &[usize],
    target: usize,
    floor: usize,
    connected: bool,
    last: bool,
    opts: &ExactOptions,
    nodes: &AtomicU64,
    aborted: &AtomicBool,
    deadline: Deadline,
    parallel: bool,
) -> SizeRun {
    let ctx = Ctx {
        graph,
        perms,
        target,
        profile,
        incumbent: AtomicUsize::new(floor),
        visited: DashSet::new(),
        nodes,
        aborted,
        deadline,
        witnesses: last
            .then(|| Mutex::new(Witnesses { count: 0, forms: BTreeSet::new(), cap: opts.max_witnesses.max(1) })),
        prunes: (last && opts.record_prunes).then(|| Mutex::new(Vec::new())),
        parallel: parallel && connected,
    };
    let mut st = State::new(graph.len());
    if connected {
        ctx.grow(&mut st, 0);
    } else {
        ctx.subsets(&mut st, 0);
    }
    let value = ctx.incumbent.load(Ordering::Relaxed);
    let witnesses = ctx
        .witnesses
        .map(|w| {
            let w = w.into_inner().expect("witness lock");
            if w.count == value {
                w.forms.into_iter().collect()
            } else {
                Vec::new()
            }
        })
        .unwrap_or_default();
    let pruned = ctx.prunes.map(|p| p.into_inner().expect("prune lock")).unwrap_or_default();
    SizeRun { value, witnesses, pruned }
}

pub fn exact_search(params: &SearchParams, opts: &ExactOptions) -> Result<ExactOutcome, SearchError> {
    params.check_size()?;
    let n = params.n;
    let graph = SiteGraph::new(params.window);
    let perms = if opts.symmetry_reduction {
        window_stabilizer(&params.window)
    } else {
        vec![(0..graph.len() as u32).collect()]
    };
    let deadline = Deadline::new(params.budget);
    let nodes = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let parallel = params.threads != 1;

    let mut profile = vec![0usize; n + 1];
    let mut conn = vec![0usize; n + 1];
    let mut fallbacks = Vec::new();
    let mut last_run = None;

    with_pool(params.threads, || {
        for m in 1..=n {
            let last = m == n;
            let mut run = None;
            if opts.connected_growth {
                // a connected set plus one adjacent free site is still connected
                let floor = if m > 1 { conn[m - 1] + 1 } else { 0 };
                let r = solve_size(
                    &graph, &perms, &profile, m, floor, true, last, opts, &nodes, &aborted, deadline, parallel,
                );
                conn[m] = r.value;
                let split_bound = (1..m).map(|a| conn[a] + profile[m - a]).max().unwrap_or(0);
                if r.value >= split_bound {
                    run = Some(r);
                }
            }
            let r = match run {
                Some(r) => r,
                None => {
                    if opts.connected_growth {
                        fallbacks.push(m);
                    }
                    let floor = profile[m - 1];
                    solve_size(&graph, &perms, &profile, m, floor, false, last, opts, &nodes, &aborted, deadline, false)
                }
            };
            if aborted.load(Ordering::Relaxed) {
                return Err(SearchError::Incomplete {
                    budget: params.budget.unwrap_or_default(),
                    nodes: nodes.load(Ordering::Relaxed),
                    best_so_far: r.value,
                });
            }
            profile[m] = r.value;
            if last {
                last_run = Some(r);
            }
        }
        Ok(())
    })?;

    let run = last_run.expect("n >= 1 runs at least one size");
    let best =
        run.witnesses.first().and_then(|w| place_in_window(w, &params.window)).unwrap_or_else(Configuration::default);
    let result = SearchResult {
        best_count: run.value,
        best,
        witnesses: run.witnesses,
        status: Status::OptimalInWindow,
        nodes_explored: nodes.load(Ordering::Relaxed),
        elapsed: deadline.elapsed(),
        provenance: format!(
            "exact window={} symmetry={} connected_growth={}",
            params.window,
            if opts.symmetry_reduction { "on" } else { "off" },
            if opts.connected_growth { "on" } else { "off" },
        ),
        truncated: false,
    };
    Ok(ExactOutcome { result, profile, connected_profile: conn, subset_fallbacks: fallbacks, pruned: run.pruned })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{naive_oracle, Algorithm};

    fn params(n: usize, i: i64, j: i64, k: i64) -> SearchParams {
        SearchParams::new(n, Window::new(i, j, k).unwrap(), Algorithm::Exact)
    }

    #[test]
    fn tiny_instances() {
        let r = exact_max_contacts(&params(1, 3, 3, 2)).unwrap();
        assert_eq!(r.best_count, 0);
        assert_eq!(r.status, Status::OptimalInWindow);
        assert_eq!(exact_max_contacts(&params(2, 2, 1, 1)).unwrap().best_count, 1);
        let r = exact_max_contacts(&params(4, 3, 3, 2)).unwrap();
        assert_eq!(r.best_count, 6);
        assert!(!r.witnesses.is_empty());
        assert_eq!(r.best.contact_count().unwrap(), 6);
    }

    #[test]
    fn window_too_small() {
        assert_eq!(exact_max_contacts(&params(3, 2, 1, 1)), Err(SearchError::WindowTooSmall { n: 3, sites: 2 }));
    }

    #[test]
    fn stabilizer_of_square_windows_swaps_axes() {
        let w = Window::new(3, 3, 2).unwrap();
        let perms = window_stabilizer(&w);
        assert_eq!(perms[0], (0..18).collect::<Vec<u32>>());
        assert!(perms.len() >= 2);
        let swap: Vec<u32> = w.sites().map(|p| w.index_of(HexCoord::new(p.j, p.i, p.k)).unwrap() as u32).collect();
        assert!(perms.contains(&swap));
        assert_eq!(window_stabilizer(&Window::new(3, 2, 2).unwrap()).len(), 1);
    }

    #[test]
    fn fallback_matches_connected_route() {
        let p = params(5, 3, 3, 2);
        let conn = exact_search(&p, &ExactOptions::default()).unwrap();
        let sub = exact_search(&p, &ExactOptions { connected_growth: false, ..Default::default() }).unwrap();
        assert_eq!(conn.profile, sub.profile);
        assert_eq!(conn.result.witnesses, sub.result.witnesses);
        assert_eq!(conn.result.best_count, naive_oracle(5, &p.window).unwrap());
    }

    #[test]
    fn zero_budget_reports_incomplete() {
        let p = params(9, 4, 4, 3).budget(std::time::Duration::ZERO);
        assert!(matches!(exact_max_contacts(&p), Err(SearchError::Incomplete { .. })));
    }
}
