//! The hexagonal close packing lattice in integer hexagonal coordinates.
//!
//! A site `[i, j, k]` lives in layer `k`. Inside a layer the centres sit on the
//! planar triangular grid spanned by `(2, 0)` and `(1, √3)`; odd layers are
//! shifted by `(1, √(1/3))` and consecutive layers are `√(8/3)` apart, which
//! gives the A-B-A-B stacking with unit-radius balls.
//!
//! Every tangency decision goes through [`pair_form`], an integer quadratic
//! form equal to three times the squared Cartesian distance. Two distinct sites
//! are never closer than distance 2, so any set of distinct sites is a packing.

use std::fmt;

use thiserror::Error;

/// Form value of two touching balls (distance 2, squared distance 4, times 3).
pub const CONTACT_FORM: u64 = 12;

/// Number of lattice neighbours of every site.
pub const COORDINATION: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("window extents must be positive, got {0}x{1}x{2}")]
    EmptyWindow(i64, i64, i64),
    #[error("symmetry sample is empty")]
    EmptySample,
}

/// A lattice site in hexagonal coordinates.
///
/// Ordering is lexicographic on `(k, j, i)`: layer first, then row, then column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct HexCoord {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl HexCoord {
    pub const ORIGIN: HexCoord = HexCoord { i: 0, j: 0, k: 0 };

    pub const fn new(i: i64, j: i64, k: i64) -> Self {
        HexCoord { i, j, k }
    }

    /// 0 for the unshifted (even) layers, 1 for the shifted (odd) ones.
    #[inline]
    pub fn parity(self) -> i64 {
        self.k.rem_euclid(2)
    }

    #[inline]
    pub fn offset(self, di: i64, dj: i64, dk: i64) -> Self {
        HexCoord::new(self.i + di, self.j + dj, self.k + dk)
    }

    #[inline]
    fn key(self) -> (i64, i64, i64) {
        (self.k, self.j, self.i)
    }
}

impl PartialOrd for HexCoord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HexCoord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for HexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.i, self.j, self.k)
    }
}

impl From<[i64; 3]> for HexCoord {
    fn from(v: [i64; 3]) -> Self {
        HexCoord::new(v[0], v[1], v[2])
    }
}

/// Cartesian position of a ball centre, in units of the ball radius.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CartPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CartPoint {
    pub fn distance(self, other: CartPoint) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

pub fn to_cartesian(p: HexCoord) -> CartPoint {
    let par = p.parity() as f64;
    CartPoint {
        x: (2 * p.i + p.j) as f64 + par,
        y: 3f64.sqrt() * p.j as f64 + par * (1.0f64 / 3.0).sqrt(),
        z: p.k as f64 * (8.0f64 / 3.0).sqrt(),
    }
}

/// Three times the squared Cartesian distance between two sites, computed
/// exactly in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormValue(pub u64);

impl FormValue {
    #[inline]
    pub fn is_contact(self) -> bool {
        self.0 == CONTACT_FORM
    }
}

#[inline]
pub fn pair_form(a: HexCoord, b: HexCoord) -> FormValue {
    let dp = a.parity() - b.parity();
    let dx = 2 * (a.i - b.i) + (a.j - b.j) + dp;
    let dy = 3 * (a.j - b.j) + dp;
    let dk = a.k - b.k;
    FormValue((3 * dx * dx + dy * dy + 8 * dk * dk) as u64)
}

#[inline]
pub fn is_contact(a: HexCoord, b: HexCoord) -> bool {
    pair_form(a, b).is_contact()
}

/// Neighbour offsets `(di, dj, dk)`, indexed by the parity of the source layer.
pub const NEIGHBOR_OFFSETS: [[(i64, i64, i64); COORDINATION]; 2] = [
    [
        (1, 0, 0),
        (-1, 0, 0),
        (0, 1, 0),
        (0, -1, 0),
        (1, -1, 0),
        (-1, 1, 0),
        (0, 0, 1),
        (-1, 0, 1),
        (0, -1, 1),
        (0, 0, -1),
        (-1, 0, -1),
        (0, -1, -1),
    ],
    [
        (1, 0, 0),
        (-1, 0, 0),
        (0, 1, 0),
        (0, -1, 0),
        (1, -1, 0),
        (-1, 1, 0),
        (0, 0, 1),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, -1),
        (1, 0, -1),
        (0, 1, -1),
    ],
];

pub fn neighbors(p: HexCoord) -> [HexCoord; COORDINATION] {
    let table = &NEIGHBOR_OFFSETS[p.parity() as usize];
    let mut out = [p; COORDINATION];
    for (slot, &(di, dj, dk)) in out.iter_mut().zip(table) {
        *slot = p.offset(di, dj, dk);
    }
    out
}

/// A box of sites `origin + [0, I) x [0, J) x [0, K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub origin: HexCoord,
    pub extents: [i64; 3],
}

impl Window {
    pub fn new(i: i64, j: i64, k: i64) -> Result<Self, LatticeError> {
        Self::with_origin(HexCoord::ORIGIN, [i, j, k])
    }

    pub fn with_origin(origin: HexCoord, extents: [i64; 3]) -> Result<Self, LatticeError> {
        if extents.iter().any(|&e| e <= 0) {
            return Err(LatticeError::EmptyWindow(extents[0], extents[1], extents[2]));
        }
        Ok(Window { origin, extents })
    }

    /// Bounding box of `points` grown by `margin` sites on every side.
    /// Returns `None` for an empty point set.
    pub fn around(points: &[HexCoord], margin: i64) -> Option<Self> {
        let first = points.first()?;
        let (mut lo, mut hi) = ([first.i, first.j, first.k], [first.i, first.j, first.k]);
        for p in points {
            for (axis, v) in [p.i, p.j, p.k].into_iter().enumerate() {
                lo[axis] = lo[axis].min(v);
                hi[axis] = hi[axis].max(v);
            }
        }
        let origin = HexCoord::new(lo[0] - margin, lo[1] - margin, lo[2] - margin);
        let extents = [0, 1, 2].map(|a| hi[a] - lo[a] + 1 + 2 * margin);
        Some(Window { origin, extents })
    }

    pub fn site_count(&self) -> usize {
        self.extents.iter().product::<i64>() as usize
    }

    pub fn contains(&self, p: HexCoord) -> bool {
        let rel = [p.i - self.origin.i, p.j - self.origin.j, p.k - self.origin.k];
        rel.iter().zip(&self.extents).all(|(&r, &e)| (0..e).contains(&r))
    }

    /// Position of `p` in the `(k, j, i)` enumeration order.
    pub fn index_of(&self, p: HexCoord) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        let [ei, ej, _] = self.extents;
        let (ri, rj, rk) = (p.i - self.origin.i, p.j - self.origin.j, p.k - self.origin.k);
        Some(((rk * ej + rj) * ei + ri) as usize)
    }

    pub fn site(&self, index: usize) -> HexCoord {
        let [ei, ej, _] = self.extents;
        let idx = index as i64;
        self.origin.offset(idx % ei, (idx / ei) % ej, idx / (ei * ej))
    }

    pub fn sites(&self) -> impl Iterator<Item = HexCoord> + '_ {
        (0..self.site_count()).map(move |n| self.site(n))
    }

    /// The site closest to the middle of the box.
    pub fn center(&self) -> HexCoord {
        let [ei, ej, ek] = self.extents;
        self.origin.offset((ei - 1) / 2, (ej - 1) / 2, (ek - 1) / 2)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.extents;
        write!(f, "{i}x{j}x{k}")?;
        if self.origin != HexCoord::ORIGIN {
            write!(f, "@{}", self.origin)?;
        }
        Ok(())
    }
}

/// All sites of `w` in lexicographic `(k, j, i)` order.
pub fn enum_window(w: &Window) -> Vec<HexCoord> {
    w.sites().collect()
}

/// Generators of the symmetry subgroup used throughout the crate.
///
/// In-plane rotations and the mirror act about the vertical axis through the
/// origin site; that axis also passes through a hollow of every odd layer, so
/// both layer classes map onto themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// In-layer translation by a lattice vector.
    Translate { di: i64, dj: i64 },
    /// Vertical translation by `2 * layers` layers.
    Lift { layers: i64 },
    /// `k -> -k`.
    NegateLayers,
    /// In-layer rotation by 120 degrees.
    Rotate120,
    /// Mirror `x -> -x` in every layer.
    Mirror,
}

impl Generator {
    #[inline]
    pub fn apply(self, p: HexCoord) -> HexCoord {
        let par = p.parity();
        match self {
            Generator::Translate { di, dj } => p.offset(di, dj, 0),
            Generator::Lift { layers } => p.offset(0, 0, 2 * layers),
            Generator::NegateLayers => HexCoord::new(p.i, p.j, -p.k),
            Generator::Rotate120 => HexCoord::new(-p.i - p.j - par, p.i, p.k),
            Generator::Mirror => HexCoord::new(-p.i - p.j - par, p.j, p.k),
        }
    }

    fn label(self) -> String {
        match self {
            Generator::Translate { di, dj } => format!("T({di},{dj})"),
            Generator::Lift { layers } => format!("L({layers})"),
            Generator::NegateLayers => "N".into(),
            Generator::Rotate120 => "R".into(),
            Generator::Mirror => "M".into(),
        }
    }
}

/// Anything that moves lattice sites around.
pub trait LatticeMap {
    fn map_site(&self, p: HexCoord) -> HexCoord;
}

impl<F: Fn(HexCoord) -> HexCoord> LatticeMap for F {
    fn map_site(&self, p: HexCoord) -> HexCoord {
        self(p)
    }
}

/// A word in the generators, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetryOp {
    pub label: String,
    steps: Vec<Generator>,
}

impl SymmetryOp {
    pub fn identity() -> Self {
        SymmetryOp { label: "id".into(), steps: Vec::new() }
    }

    pub fn from_steps(steps: Vec<Generator>) -> Self {
        let label = if steps.is_empty() {
            "id".to_string()
        } else {
            steps.iter().map(|g| g.label()).collect::<Vec<_>>().join("*")
        };
        SymmetryOp { label, steps }
    }

    pub fn steps(&self) -> &[Generator] {
        &self.steps
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SymmetryOp) -> SymmetryOp {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        SymmetryOp::from_steps(steps)
    }

    pub fn apply(&self, p: HexCoord) -> HexCoord {
        self.steps.iter().fold(p, |q, g| g.apply(q))
    }

    /// The generating set: unit translations, a two-layer lift, layer
    /// negation, the 120 degree rotation and the mirror.
    pub fn generators() -> Vec<SymmetryOp> {
        [
            Generator::Translate { di: 1, dj: 0 },
            Generator::Translate { di: 0, dj: 1 },
            Generator::Lift { layers: 1 },
            Generator::NegateLayers,
            Generator::Rotate120,
            Generator::Mirror,
        ]
        .into_iter()
        .map(|g| SymmetryOp::from_steps(vec![g]))
        .collect()
    }

    /// The twelve translation-free elements `N^c R^a M^b`.
    pub fn point_group() -> Vec<SymmetryOp> {
        let mut out = Vec::with_capacity(12);
        for negate in [false, true] {
            for rot in 0..3 {
                for mirror in [false, true] {
                    let mut steps = Vec::new();
                    if mirror {
                        steps.push(Generator::Mirror);
                    }
                    steps.extend(std::iter::repeat_n(Generator::Rotate120, rot));
                    if negate {
                        steps.push(Generator::NegateLayers);
                    }
                    out.push(SymmetryOp::from_steps(steps));
                }
            }
        }
        out
    }
}

impl LatticeMap for SymmetryOp {
    fn map_site(&self, p: HexCoord) -> HexCoord {
        self.apply(p)
    }
}

/// Checks that `op` preserves the form on every sampled pair.
pub fn validate_symmetry<M: LatticeMap + ?Sized>(
    op: &M,
    sample: &[(HexCoord, HexCoord)],
) -> Result<bool, LatticeError> {
    if sample.is_empty() {
        return Err(LatticeError::EmptySample);
    }
    Ok(sample.iter().all(|&(a, b)| pair_form(op.map_site(a), op.map_site(b)) == pair_form(a, b)))
}
