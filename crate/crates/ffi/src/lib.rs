//! C interface to `hcpack`.
//!
//! Configurations and search results cross the boundary as opaque handles
//! that the caller releases with the matching `*_free` function. Fallible
//! calls return an [`HcpStatus`]; the message for the most recent failure on
//! the calling thread is available from [`hcp_last_error`]. Panics never
//! unwind into C: they are caught and reported as `HCP_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use hcpack::corpus::{self, parse_configuration, serialize_configuration};
use hcpack::hexlattice::Window;
use hcpack::search::{self, Algorithm, AnnealSchedule, SearchError, SearchParams, SearchResult, Status};
use hcpack::{Configuration, HexCoord};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DuplicateCenter = 3,
    Parse = 4,
    OutOfRange = 5,
    WindowTooSmall = 6,
    SearchIncomplete = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcpAlgorithm {
    Exact = 0,
    Greedy = 1,
    Anneal = 2,
}

/// Lattice site in hexagonal coordinates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HcpCoord {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcpPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Contact between balls `a < b`, 1-based.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HcpEdge {
    pub a: usize,
    pub b: usize,
}

/// Search settings. Start from [`hcp_search_params_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HcpSearchParams {
    pub n: usize,
    /// Window extents along i, j, k.
    pub window: [i64; 3],
    pub algorithm: HcpAlgorithm,
    pub seed: u64,
    /// Wall-clock cap in seconds; negative means none.
    pub budget_seconds: f64,
    pub restarts: usize,
    /// Annealing proposals per restart.
    pub steps: u64,
    /// 0 uses every core, 1 runs single-threaded.
    pub threads: usize,
    /// Optional starting configuration (borrowed, may be null).
    pub initial: *const HcpConfiguration,
}

/// Opaque configuration handle.
pub struct HcpConfiguration {
    inner: Configuration,
}

/// Opaque search result handle.
pub struct HcpSearchResult {
    inner: SearchResult,
}

impl From<HcpCoord> for HexCoord {
    fn from(c: HcpCoord) -> Self {
        HexCoord::new(c.i, c.j, c.k)
    }
}

impl From<HexCoord> for HcpCoord {
    fn from(c: HexCoord) -> Self {
        HcpCoord { i: c.i, j: c.j, k: c.k }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("interior nul removed"));
}

fn fail(status: HcpStatus, msg: impl std::fmt::Display) -> HcpStatus {
    set_error(msg.to_string());
    status
}

fn guard(f: impl FnOnce() -> HcpStatus) -> HcpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == HcpStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(HcpStatus::Panic, "internal panic"),
    }
}

fn search_status(e: &SearchError) -> HcpStatus {
    match e {
        SearchError::WindowTooSmall { .. } => HcpStatus::WindowTooSmall,
        SearchError::Incomplete { .. } => HcpStatus::SearchIncomplete,
        SearchError::Packing(_) => HcpStatus::DuplicateCenter,
        SearchError::OutsideWindow(_) => HcpStatus::OutOfRange,
        _ => HcpStatus::InvalidArgument,
    }
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hcp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn hcp_status_name(status: HcpStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HcpStatus::Ok => c"ok",
        HcpStatus::NullPointer => c"null pointer",
        HcpStatus::InvalidArgument => c"invalid argument",
        HcpStatus::DuplicateCenter => c"duplicate center",
        HcpStatus::Parse => c"parse error",
        HcpStatus::OutOfRange => c"out of range",
        HcpStatus::WindowTooSmall => c"window too small",
        HcpStatus::SearchIncomplete => c"search incomplete",
        HcpStatus::BufferTooSmall => c"buffer too small",
        HcpStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// Integer form of a pair; 12 exactly for touching balls.
#[no_mangle]
pub extern "C" fn hcp_pair_form(a: HcpCoord, b: HcpCoord) -> u64 {
    hcpack::pair_form(a.into(), b.into()).0
}

#[no_mangle]
pub extern "C" fn hcp_is_contact(a: HcpCoord, b: HcpCoord) -> bool {
    hcpack::is_contact(a.into(), b.into())
}

#[no_mangle]
pub extern "C" fn hcp_to_cartesian(c: HcpCoord) -> HcpPoint {
    let p = hcpack::to_cartesian(c.into());
    HcpPoint { x: p.x, y: p.y, z: p.z }
}

/// Empty configuration.
#[no_mangle]
pub extern "C" fn hcp_config_new() -> *mut HcpConfiguration {
    boxed(HcpConfiguration { inner: Configuration::new(Vec::new()) })
}

/// Configuration from `len` coordinates. Repeated sites are rejected.
///
/// # Safety
/// `coords` must point to `len` readable values (or be null with `len == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_from_coords(
    coords: *const HcpCoord,
    len: usize,
    out: *mut *mut HcpConfiguration,
) -> HcpStatus {
    guard(|| {
        if out.is_null() || (coords.is_null() && len > 0) {
            return fail(HcpStatus::NullPointer, "null argument");
        }
        let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(coords, len) };
        let cfg = Configuration::new(slice.iter().map(|&c| c.into()).collect());
        if let Err(e) = cfg.validate() {
            return fail(HcpStatus::DuplicateCenter, e);
        }
        *out = boxed(HcpConfiguration { inner: cfg });
        HcpStatus::Ok
    })
}

/// Parses `.hexcfg` text (one `i j k` per line, `#` comments).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_parse(text: *const c_char, out: *mut *mut HcpConfiguration) -> HcpStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(HcpStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(HcpStatus::Parse, "text is not UTF-8");
        };
        match parse_configuration(s) {
            Ok(cfg) => {
                *out = boxed(HcpConfiguration { inner: cfg });
                HcpStatus::Ok
            }
            Err(corpus::ParseError::Packing(e)) => fail(HcpStatus::DuplicateCenter, e),
            Err(e) => fail(HcpStatus::Parse, e),
        }
    })
}

/// Reference configuration for `n` balls, `20 <= n <= 27`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_reference(n: usize, out: *mut *mut HcpConfiguration) -> HcpStatus {
    guard(|| {
        if out.is_null() {
            return fail(HcpStatus::NullPointer, "null argument");
        }
        match corpus::embedded(n) {
            Ok(e) => {
                *out = boxed(HcpConfiguration { inner: e.configuration });
                HcpStatus::Ok
            }
            Err(e) => fail(HcpStatus::OutOfRange, e),
        }
    })
}

/// Releases a configuration. Null is ignored.
///
/// # Safety
/// `cfg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_free(cfg: *mut HcpConfiguration) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Appends a ball; fails if the site is already occupied.
///
/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_push(cfg: *mut HcpConfiguration, c: HcpCoord) -> HcpStatus {
    guard(|| {
        let Some(cfg) = cfg.as_mut() else {
            return fail(HcpStatus::NullPointer, "null configuration");
        };
        let p: HexCoord = c.into();
        if let Some(at) = cfg.inner.centers.iter().position(|&q| q == p) {
            return fail(HcpStatus::DuplicateCenter, format!("{p} is already ball F{}", at + 1));
        }
        cfg.inner.centers.push(p);
        HcpStatus::Ok
    })
}

/// Number of balls; 0 for null.
///
/// # Safety
/// `cfg` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_len(cfg: *const HcpConfiguration) -> usize {
    cfg.as_ref().map_or(0, |c| c.inner.len())
}

/// Ball `index` (0-based).
///
/// # Safety
/// `cfg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_get(cfg: *const HcpConfiguration, index: usize, out: *mut HcpCoord) -> HcpStatus {
    guard(|| {
        let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        match cfg.inner.centers.get(index) {
            Some(&p) => {
                *out = p.into();
                HcpStatus::Ok
            }
            None => fail(HcpStatus::OutOfRange, format!("index {index} outside 0..{}", cfg.inner.len())),
        }
    })
}

/// # Safety
/// `cfg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_contact_count(cfg: *const HcpConfiguration, out: *mut usize) -> HcpStatus {
    guard(|| {
        let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        match cfg.inner.contact_count() {
            Ok(c) => {
                *out = c;
                HcpStatus::Ok
            }
            Err(e) => fail(HcpStatus::DuplicateCenter, e),
        }
    })
}

/// Writes the sorted contact list into `buf`. `count` always receives the
/// number of contacts; if it exceeds `cap` nothing is written and
/// `HCP_STATUS_BUFFER_TOO_SMALL` is returned. `buf` may be null when `cap` is 0.
///
/// # Safety
/// `cfg` must be a live handle, `buf` must have room for `cap` edges and
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_edges(
    cfg: *const HcpConfiguration,
    buf: *mut HcpEdge,
    cap: usize,
    count: *mut usize,
) -> HcpStatus {
    guard(|| {
        let (Some(cfg), false) = (cfg.as_ref(), count.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        let graph = match cfg.inner.contact_graph() {
            Ok(g) => g,
            Err(e) => return fail(HcpStatus::DuplicateCenter, e),
        };
        *count = graph.edges.len();
        if graph.edges.len() > cap {
            return fail(HcpStatus::BufferTooSmall, format!("{} edges, room for {cap}", graph.edges.len()));
        }
        if buf.is_null() && cap > 0 {
            return fail(HcpStatus::NullPointer, "null buffer");
        }
        for (slot, &(a, b)) in graph.edges.iter().enumerate() {
            *buf.add(slot) = HcpEdge { a, b };
        }
        HcpStatus::Ok
    })
}

/// Writes the `.hexcfg` text plus a terminating nul into `buf`. `needed`
/// receives the full size including the nul.
///
/// # Safety
/// `cfg` must be a live handle, `buf` must have room for `cap` bytes and
/// `needed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_config_serialize(
    cfg: *const HcpConfiguration,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> HcpStatus {
    guard(|| {
        let (Some(cfg), false) = (cfg.as_ref(), needed.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        let text = serialize_configuration(&cfg.inner);
        *needed = text.len() + 1;
        if text.len() + 1 > cap {
            return fail(HcpStatus::BufferTooSmall, format!("{} bytes needed, room for {cap}", text.len() + 1));
        }
        if buf.is_null() {
            return fail(HcpStatus::NullPointer, "null buffer");
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        HcpStatus::Ok
    })
}

/// Recomputes the contacts of reference configuration `n` and compares them
/// with the listed ones.
///
/// # Safety
/// `exact_match` and `computed_count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_verify_reference(
    n: usize,
    exact_match: *mut bool,
    computed_count: *mut usize,
) -> HcpStatus {
    guard(|| {
        if exact_match.is_null() || computed_count.is_null() {
            return fail(HcpStatus::NullPointer, "null argument");
        }
        match corpus::embedded(n) {
            Ok(e) => {
                let r = corpus::verify_entry(&e);
                *exact_match = r.is_exact();
                *computed_count = r.computed_count;
                HcpStatus::Ok
            }
            Err(e) => fail(HcpStatus::OutOfRange, e),
        }
    })
}

/// Defaults: one ball, 3x3x3 window, exact search, seed 0, no budget,
/// 8 restarts, the default annealing length, single-threaded.
#[no_mangle]
pub extern "C" fn hcp_search_params_default() -> HcpSearchParams {
    HcpSearchParams {
        n: 1,
        window: [3, 3, 3],
        algorithm: HcpAlgorithm::Exact,
        seed: 0,
        budget_seconds: -1.0,
        restarts: 8,
        steps: AnnealSchedule::default().steps,
        threads: 1,
        initial: ptr::null(),
    }
}

/// Runs a search. On success `*out` receives a result handle.
///
/// # Safety
/// `params` must be readable, `params->initial` a live handle or null, and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_search(params: *const HcpSearchParams, out: *mut *mut HcpSearchResult) -> HcpStatus {
    guard(|| {
        let (Some(p), false) = (params.as_ref(), out.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        let window = match Window::new(p.window[0], p.window[1], p.window[2]) {
            Ok(w) => w,
            Err(e) => return fail(HcpStatus::InvalidArgument, e),
        };
        let algorithm = match p.algorithm {
            HcpAlgorithm::Exact => Algorithm::Exact,
            HcpAlgorithm::Greedy => Algorithm::Greedy,
            HcpAlgorithm::Anneal => Algorithm::Anneal,
        };
        let mut sp = SearchParams::new(p.n, window, algorithm)
            .seed(p.seed)
            .restarts(p.restarts)
            .threads(p.threads)
            .schedule(AnnealSchedule { steps: p.steps, ..AnnealSchedule::default() });
        if p.budget_seconds >= 0.0 {
            match Duration::try_from_secs_f64(p.budget_seconds) {
                Ok(d) => sp = sp.budget(d),
                Err(e) => return fail(HcpStatus::InvalidArgument, e),
            }
        } else if p.budget_seconds.is_nan() {
            return fail(HcpStatus::InvalidArgument, "budget is NaN");
        }
        if let Some(init) = p.initial.as_ref() {
            sp = sp.initial(init.inner.clone());
        }
        match search::run(&sp) {
            Ok(r) => {
                *out = boxed(HcpSearchResult { inner: r });
                HcpStatus::Ok
            }
            Err(e) => fail(search_status(&e), e),
        }
    })
}

/// Releases a result. Null is ignored.
///
/// # Safety
/// `res` must come from [`hcp_search`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hcp_result_free(res: *mut HcpSearchResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// # Safety
/// `res` must be a live handle or null (gives 0).
#[no_mangle]
pub unsafe extern "C" fn hcp_result_best_count(res: *const HcpSearchResult) -> usize {
    res.as_ref().map_or(0, |r| r.inner.best_count)
}

/// True when the value is proven optimal within the window.
///
/// # Safety
/// `res` must be a live handle or null (gives false).
#[no_mangle]
pub unsafe extern "C" fn hcp_result_is_optimal(res: *const HcpSearchResult) -> bool {
    res.as_ref().is_some_and(|r| r.inner.status == Status::OptimalInWindow)
}

/// # Safety
/// `res` must be a live handle or null (gives 0).
#[no_mangle]
pub unsafe extern "C" fn hcp_result_nodes_explored(res: *const HcpSearchResult) -> u64 {
    res.as_ref().map_or(0, |r| r.inner.nodes_explored)
}

/// # Safety
/// `res` must be a live handle or null (gives 0).
#[no_mangle]
pub unsafe extern "C" fn hcp_result_witness_count(res: *const HcpSearchResult) -> usize {
    res.as_ref().map_or(0, |r| r.inner.witnesses.len())
}

/// Copy of the best configuration, placed in the search window.
///
/// # Safety
/// `res` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_result_best(res: *const HcpSearchResult, out: *mut *mut HcpConfiguration) -> HcpStatus {
    guard(|| {
        let (Some(r), false) = (res.as_ref(), out.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        *out = boxed(HcpConfiguration { inner: r.inner.best.clone() });
        HcpStatus::Ok
    })
}

/// Copy of witness `index` in canonical placement.
///
/// # Safety
/// `res` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_result_witness(
    res: *const HcpSearchResult,
    index: usize,
    out: *mut *mut HcpConfiguration,
) -> HcpStatus {
    guard(|| {
        let (Some(r), false) = (res.as_ref(), out.is_null()) else {
            return fail(HcpStatus::NullPointer, "null argument");
        };
        match r.inner.witnesses.get(index) {
            Some(f) => {
                *out = boxed(HcpConfiguration { inner: f.to_configuration() });
                HcpStatus::Ok
            }
            None => fail(HcpStatus::OutOfRange, format!("witness {index} of {}", r.inner.witnesses.len())),
        }
    })
}
