//! Maximal-contact search over the sites of a [`Window`].
//!
//! * [`exact_max_contacts`]: branch-and-bound that proves the in-window optimum.
//! * [`naive_oracle`]: plain enumeration of every subset, used to check the above.
//! * [`greedy_grow`] and [`anneal`]: heuristics for sizes where a proof is out of reach.
//! * [`local_maximality_check`]: single-relocation audit of a given configuration.

mod anneal;
mod exact;
mod greedy;
mod local;
mod naive;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::hexlattice::{neighbors, HexCoord, Window};
use crate::packing::{CanonicalForm, Configuration, PackingError};

pub use anneal::{anneal, AnnealSchedule};
pub use exact::{exact_max_contacts, exact_search, window_stabilizer, ExactOptions, ExactOutcome, PrunedNode};
pub use greedy::greedy_grow;
pub use local::{local_maximality_check, LocalAudit, Relocation};
pub use naive::{naive_oracle, naive_oracle_containing, NAIVE_SUBSET_CAP};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("ball count must be at least 1")]
    NoBalls,
    #[error("window holds {sites} sites, cannot place {n} balls")]
    WindowTooSmall { n: usize, sites: usize },
    #[error("search incomplete: budget of {budget:?} exhausted after {nodes} nodes (best so far {best_so_far})")]
    Incomplete { budget: Duration, nodes: u64, best_so_far: usize },
    #[error("naive enumeration needs {subsets} subsets, above the cap of {cap}")]
    EnumerationTooLarge { subsets: u128, cap: u128 },
    #[error("initial configuration has {found} balls, expected at most {expected}")]
    InitialSize { expected: usize, found: usize },
    #[error("site {0} lies outside the search window")]
    OutsideWindow(HexCoord),
    #[error(transparent)]
    Packing(#[from] PackingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Exact,
    Greedy,
    Anneal,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Exact => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Anneal => "anneal",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Algorithm::Exact),
            "greedy" => Ok(Algorithm::Greedy),
            "anneal" => Ok(Algorithm::Anneal),
            other => Err(format!("unknown algorithm `{other}` (expected exact, greedy or anneal)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    pub n: usize,
    pub window: Window,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Wall-clock cap. `None` means unlimited.
    pub budget: Option<Duration>,
    pub restarts: usize,
    pub initial: Option<Configuration>,
    /// Worker threads; 1 runs everything on the calling thread, 0 uses all cores.
    pub threads: usize,
    pub schedule: AnnealSchedule,
}

impl SearchParams {
    pub fn new(n: usize, window: Window, algorithm: Algorithm) -> Self {
        SearchParams {
            n,
            window,
            algorithm,
            seed: 0,
            budget: None,
            restarts: 8,
            initial: None,
            threads: 1,
            schedule: AnnealSchedule::default(),
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn budget(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn initial(mut self, cfg: Configuration) -> Self {
        self.initial = Some(cfg);
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn schedule(mut self, schedule: AnnealSchedule) -> Self {
        self.schedule = schedule;
        self
    }

    pub(crate) fn check_size(&self) -> Result<(), SearchError> {
        if self.n == 0 {
            return Err(SearchError::NoBalls);
        }
        let sites = self.window.site_count();
        if sites < self.n {
            return Err(SearchError::WindowTooSmall { n: self.n, sites });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    OptimalInWindow,
    HeuristicLowerBound,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::OptimalInWindow => "optimal-in-window",
            Status::HeuristicLowerBound => "heuristic-lower-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_count: usize,
    /// One realisation of the best value, inside the window.
    pub best: Configuration,
    /// Distinct canonical forms reaching `best_count`, sorted.
    pub witnesses: Vec<CanonicalForm>,
    pub status: Status,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Algorithm and the parameter values it ran with.
    pub provenance: String,
    /// A heuristic stopped on the wall-clock cap before its step limit.
    pub truncated: bool,
}

impl SearchResult {
    /// Summary lines that depend only on the search inputs (no timings).
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("best_count\t{}\n", self.best_count));
        out.push_str(&format!("status\t{}\n", self.status));
        out.push_str(&format!("witnesses\t{}\n", self.witnesses.len()));
        out.push_str(&format!("provenance\t{}\n", self.provenance));
        out
    }
}

/// Window sites with their in-window neighbour lists.
#[derive(Debug, Clone)]
pub(crate) struct SiteGraph {
    pub window: Window,
    pub adj: Vec<Vec<u32>>,
}

impl SiteGraph {
    pub fn new(window: Window) -> Self {
        let adj = window
            .sites()
            .map(|p| {
                let mut v: Vec<u32> =
                    neighbors(p).into_iter().filter_map(|q| window.index_of(q).map(|x| x as u32)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        SiteGraph { window, adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn coords(&self, sites: &[u32]) -> Vec<HexCoord> {
        sites.iter().map(|&s| self.window.site(s as usize)).collect()
    }

    pub fn indices_of(&self, cfg: &Configuration) -> Result<Vec<u32>, SearchError> {
        cfg.centers
            .iter()
            .map(|&c| self.window.index_of(c).map(|x| x as u32).ok_or(SearchError::OutsideWindow(c)))
            .collect()
    }

    pub fn count_edges(&self, sites: &[u32]) -> usize {
        let mut member = vec![false; self.len()];
        for &s in sites {
            member[s as usize] = true;
        }
        sites.iter().map(|&s| self.adj[s as usize].iter().filter(|&&t| member[t as usize]).count()).sum::<usize>() / 2
    }
}

/// Wall-clock guard shared by the search routines.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Deadline {
    start: Instant,
    budget: Option<Duration>,
}

impl Deadline {
    pub fn new(budget: Option<Duration>) -> Self {
        Deadline { start: Instant::now(), budget }
    }

    pub fn expired(&self) -> bool {
        self.budget.is_some_and(|b| self.start.elapsed() >= b)
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

pub(crate) fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Runs the algorithm named in `params`.
pub fn run(params: &SearchParams) -> Result<SearchResult, SearchError> {
    match params.algorithm {
        Algorithm::Exact => exact_max_contacts(params),
        Algorithm::Greedy => greedy_grow(params),
        Algorithm::Anneal => anneal(params),
    }
}

/// Places a canonical form back inside `window`, choosing the placement with
/// the smallest sorted site list so the choice does not depend on how the
/// form was found.
pub(crate) fn place_in_window(form: &CanonicalForm, window: &Window) -> Option<Configuration> {
    use crate::hexlattice::SymmetryOp;
    let mut best: Option<Vec<usize>> = None;
    for g in SymmetryOp::point_group() {
        let img: Vec<HexCoord> = form.centers().iter().map(|&p| g.apply(p)).collect();
        let Some(first) = img.first() else { return Some(Configuration::default()) };
        let (mut lo, mut hi) = (*first, *first);
        for p in &img {
            lo = HexCoord::new(lo.i.min(p.i), lo.j.min(p.j), lo.k.min(p.k));
            hi = HexCoord::new(hi.i.max(p.i), hi.j.max(p.j), hi.k.max(p.k));
        }
        let o = window.origin;
        let [ei, ej, ek] = window.extents;
        for dk in (o.k - lo.k)..=(o.k + ek - 1 - hi.k) {
            if dk % 2 != 0 {
                continue;
            }
            for dj in (o.j - lo.j)..=(o.j + ej - 1 - hi.j) {
                for di in (o.i - lo.i)..=(o.i + ei - 1 - hi.i) {
                    let mut idx: Vec<usize> =
                        img.iter().filter_map(|p| window.index_of(p.offset(di, dj, dk))).collect();
                    if idx.len() != img.len() {
                        continue;
                    }
                    idx.sort_unstable();
                    if best.as_ref().is_none_or(|b| idx < *b) {
                        best = Some(idx);
                    }
                }
            }
        }
    }
    best.map(|idx| Configuration::new(idx.into_iter().map(|s| window.site(s)).collect()))
}
