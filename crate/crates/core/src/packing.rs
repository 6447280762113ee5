//! Ball configurations, their contact graphs, and canonical forms.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::hexlattice::{neighbors, HexCoord, LatticeMap, SymmetryOp};

/// Two balls placed on the same site. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DuplicateCenter {
    pub first: usize,
    pub second: usize,
    pub site: HexCoord,
}

impl fmt::Display for DuplicateCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "balls F{} and F{} share centre {}", self.first, self.second, self.site)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PackingError {
    #[error("duplicate centres: {}", list_duplicates(.0))]
    Duplicates(Vec<DuplicateCenter>),
}

fn list_duplicates(d: &[DuplicateCenter]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// An ordered list of ball centres; position `t` holds ball `F(t+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Configuration {
    pub centers: Vec<HexCoord>,
}

impl Configuration {
    pub fn new(centers: Vec<HexCoord>) -> Self {
        Configuration { centers }
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// Every repeated centre, reported against its first occurrence.
    pub fn validate(&self) -> Result<(), PackingError> {
        let mut seen: HashMap<HexCoord, usize> = HashMap::with_capacity(self.len());
        let mut dups = Vec::new();
        for (idx, &c) in self.centers.iter().enumerate() {
            if let Some(&first) = seen.get(&c) {
                dups.push(DuplicateCenter { first: first + 1, second: idx + 1, site: c });
            } else {
                seen.insert(c, idx);
            }
        }
        if dups.is_empty() {
            Ok(())
        } else {
            Err(PackingError::Duplicates(dups))
        }
    }

    pub fn map<M: LatticeMap + ?Sized>(&self, op: &M) -> Configuration {
        Configuration::new(self.centers.iter().map(|&p| op.map_site(p)).collect())
    }

    pub fn contact_graph(&self) -> Result<ContactGraph, PackingError> {
        build_contact_graph(self)
    }

    pub fn contact_count(&self) -> Result<usize, PackingError> {
        contact_count(self)
    }

    pub fn canonical(&self) -> CanonicalForm {
        canonicalize(&self.centers)
    }
}

impl From<Vec<HexCoord>> for Configuration {
    fn from(centers: Vec<HexCoord>) -> Self {
        Configuration::new(centers)
    }
}

/// Tangent pairs `(a, b)` with `1 <= a < b <= n`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContactGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl ContactGraph {
    pub fn count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of ball `F(t+1)` at position `t`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }
}

pub fn build_contact_graph(cfg: &Configuration) -> Result<ContactGraph, PackingError> {
    cfg.validate()?;
    let index: HashMap<HexCoord, usize> = cfg.centers.iter().enumerate().map(|(t, &c)| (c, t)).collect();
    let mut edges = Vec::new();
    for (a, &c) in cfg.centers.iter().enumerate() {
        for q in neighbors(c) {
            if let Some(&b) = index.get(&q) {
                if a < b {
                    edges.push((a + 1, b + 1));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(ContactGraph { n: cfg.len(), edges })
}

pub fn contact_count(cfg: &Configuration) -> Result<usize, PackingError> {
    build_contact_graph(cfg).map(|g| g.count())
}

/// Orbit-minimal representative of a set of sites under the symmetry
/// subgroup together with in-layer translations and two-layer lifts.
///
/// Centres are sorted in `(k, j, i)` order with the first one pinned at
/// `[0, 0, 0]` or `[0, 0, 1]` depending on its layer parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CanonicalForm(Vec<HexCoord>);

impl CanonicalForm {
    pub fn centers(&self) -> &[HexCoord] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_configuration(&self) -> Configuration {
        Configuration::new(self.0.clone())
    }
}

fn normalize_translation(points: &mut [HexCoord]) {
    points.sort_unstable();
    let Some(&m) = points.first() else { return };
    let dk = m.k - m.parity();
    for p in points.iter_mut() {
        *p = p.offset(-m.i, -m.j, -dk);
    }
}

pub fn canonicalize(points: &[HexCoord]) -> CanonicalForm {
    let mut best: Option<Vec<HexCoord>> = None;
    let mut buf = Vec::with_capacity(points.len());
    for g in SymmetryOp::point_group() {
        buf.clear();
        buf.extend(points.iter().map(|&p| g.apply(p)));
        normalize_translation(&mut buf);
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    CanonicalForm(best.unwrap_or_default())
}
