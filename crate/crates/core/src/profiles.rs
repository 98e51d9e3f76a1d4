//! Profiles, contours and dimension windows on the lattice cylinder.
//!
//! Coordinates: a lattice vertex is `(c, h)` with `c + h` odd, column `c`
//! sitting over vertex `c mod n` of the circle, and `(c + n, h + n - 2k)` is
//! identified with `(c, h)`. Arrows go down one unit: `x` from `(c-1, h)` to
//! `(c, h-1)` crosses edge `c`, `y` from `(c, h)` to `(c-1, h-1)`.
//!
//! A contour of shape `I` is the height function `f_I` with `f_I(0) = 0`,
//! stepping down across edges in `I` and up across the others, shifted down
//! by twice its offset.
//!
//! A window stores `rows x n` values. Row `r` of column `c` is the vertex at
//! height `B(c) - 1 - 2r`, where `B = f_{1..k}`. So the value there counts the
//! contours lying strictly above it.

use std::fmt;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subsets::{cyclic_interval, KSubset};

/// Height `f_I(c)` of the contour of shape `I` with `f_I(0) = 0`, for any integer column.
pub fn height(i: &KSubset, c: i64) -> i64 {
    let n = i.n() as i64;
    let q = c.div_euclid(n);
    let r = c.rem_euclid(n);
    let partial: i64 = (1..=r).map(|e| if i.contains(e) { -1 } else { 1 }).sum();
    partial + q * (n - 2 * i.k() as i64)
}

fn heights(i: &KSubset) -> Vec<i64> {
    let mut out = Vec::with_capacity(i.n() + 1);
    let mut h = 0;
    out.push(h);
    for e in 1..=i.n() {
        h += if i.contains(e as i64) { -1 } else { 1 };
        out.push(h);
    }
    out
}

fn base(k: usize, n: usize) -> KSubset {
    cyclic_interval(n, k, n).expect("n is a valid index")
}

/// A contour: the shape gives the down-steps, the offset a downward shift in units of 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contour {
    pub shape: KSubset,
    pub offset: i64,
}

impl Contour {
    /// Heights at columns `0..=n`.
    pub fn heights(&self) -> Vec<i64> {
        heights(&self.shape)
            .into_iter()
            .map(|h| h - 2 * self.offset)
            .collect()
    }
}

/// An ordered stack of contour shapes, top first, with offsets normalised so
/// the top offset is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    n: usize,
    k: usize,
    layers: Vec<KSubset>,
    offsets: Vec<i64>,
}

impl Profile {
    pub fn empty(k: usize, n: usize) -> Self {
        Profile {
            n,
            k,
            layers: Vec::new(),
            offsets: Vec::new(),
        }
    }

    /// Validates shapes and the weak ordering of successive contours.
    pub fn new(layers: Vec<KSubset>, offsets: Vec<i64>) -> Result<Self> {
        if layers.len() != offsets.len() {
            return Err(Error::Profile(format!(
                "{} layers but {} offsets",
                layers.len(),
                offsets.len()
            )));
        }
        let Some(first) = layers.first() else {
            return Err(Error::Profile("use Profile::empty for rank 0".into()));
        };
        let (n, k) = (first.n(), first.k());
        if let Some(bad) = layers.iter().find(|l| l.n() != n || l.k() != k) {
            return Err(Error::Profile(format!(
                "layer {bad} does not match k={k}, n={n}"
            )));
        }
        let top = offsets[0];
        let p = Profile {
            n,
            k,
            layers,
            offsets: offsets.iter().map(|o| o - top).collect(),
        };
        for (j, pair) in p.contours().windows(2).enumerate() {
            if gap(&pair[0], &pair[1]) < 0 {
                return Err(Error::Profile(format!(
                    "layer {} rises above layer {}",
                    j + 2,
                    j + 1
                )));
            }
        }
        Ok(p)
    }

    /// Stacks the layers minimally: each contour sits as high as it can while
    /// staying weakly below the previous one.
    pub fn stacked(layers: Vec<KSubset>) -> Result<Self> {
        let Some(first) = layers.first() else {
            return Err(Error::Profile("no layers".into()));
        };
        let mut offsets = vec![0];
        let mut prev = Contour {
            shape: first.clone(),
            offset: 0,
        };
        for l in &layers[1..] {
            if l.n() != first.n() || l.k() != first.k() {
                return Err(Error::Profile(format!("layer {l} does not match")));
            }
            let ph = prev.heights();
            let lh = heights(l);
            let o = (0..first.n())
                .map(|c| (lh[c] - ph[c]).div_euclid(2))
                .max()
                .unwrap_or(0);
            offsets.push(o);
            prev = Contour {
                shape: l.clone(),
                offset: o,
            };
        }
        Profile::new(layers, offsets)
    }

    /// Parses `"137|125|124|238"` (minimal stacking) or `"137:0|125:0|124:1|238:1"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(['|', '/']).map(str::trim).collect();
        let with_offsets = parts.iter().filter(|p| p.contains(':')).count();
        if with_offsets == 0 {
            let layers = parts
                .iter()
                .map(|p| KSubset::parse(p, n))
                .collect::<Result<Vec<_>>>()?;
            return Profile::stacked(layers);
        }
        if with_offsets != parts.len() {
            return Err(Error::Parse(
                "give an offset for every layer or for none".into(),
            ));
        }
        let mut layers = Vec::new();
        let mut offsets = Vec::new();
        for p in parts {
            let (l, o) = p.split_once(':').expect("checked above");
            layers.push(KSubset::parse(l, n)?);
            offsets.push(
                o.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("offset {o:?}: {e}")))?,
            );
        }
        Profile::new(layers, offsets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[KSubset] {
        &self.layers
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn contours(&self) -> Vec<Contour> {
        self.layers
            .iter()
            .zip(&self.offsets)
            .map(|(s, &o)| Contour {
                shape: s.clone(),
                offset: o,
            })
            .collect()
    }

    /// Layers and offsets, e.g. `137:0|125:0|124:1|238:1`.
    pub fn to_string_with_offsets(&self) -> String {
        self.layers
            .iter()
            .zip(&self.offsets)
            .map(|(l, o)| format!("{l}:{o}"))
            .join("|")
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.layers.iter().join("|"))
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Profile({}; n={})",
            self.to_string_with_offsets(),
            self.n
        )
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Profile", 2)?;
        st.serialize_field("layers", &self.layers)?;
        st.serialize_field("offsets", &self.offsets)?;
        st.end()
    }
}

/// `min_c (upper(c) - lower(c))`; negative when the contours cross.
fn gap(upper: &Contour, lower: &Contour) -> i64 {
    let (u, l) = (upper.heights(), lower.heights());
    (0..upper.shape.n()).map(|c| u[c] - l[c]).min().unwrap_or(0)
}

/// Values on a `rows x n` piece of the cylinder cover.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DimWindow {
    n: usize,
    k: usize,
    values: Vec<Vec<u32>>,
}

impl DimWindow {
    /// Checks row lengths and that every column is non-decreasing downwards.
    pub fn new(k: usize, n: usize, values: Vec<Vec<u32>>) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Window(format!("need 0 < k < n, got k={k}, n={n}")));
        }
        if let Some((r, row)) = values.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::Window(format!(
                "row {r} has {} entries, expected {n}",
                row.len()
            )));
        }
        for c in 0..n {
            if let Some(r) = (1..values.len()).find(|&r| values[r][c] < values[r - 1][c]) {
                return Err(Error::Window(format!(
                    "column {c} decreases between rows {} and {r}",
                    r - 1
                )));
            }
        }
        Ok(DimWindow { n, k, values })
    }

    pub fn zero(k: usize, n: usize, rows: usize) -> Self {
        DimWindow {
            n,
            k,
            values: vec![vec![0; n]; rows],
        }
    }

    /// Builds a window from lattice points `(c, h, value)` of the cover.
    ///
    /// Columns are reduced mod `n` using the cylinder identification. In each
    /// column, rows above the topmost given point are 0 and rows below the
    /// lowest are the rank (the largest value given). Gaps between given
    /// points, and conflicting values for one vertex, are errors. The result
    /// is placed so the topmost nonzero row is row 1.
    pub fn from_lattice_points(k: usize, n: usize, points: &[(i64, i64, u32)]) -> Result<Self> {
        let b = heights(&base(k, n));
        let ni = n as i64;
        let shift = ni - 2 * k as i64;
        let mut cols: Vec<std::collections::BTreeMap<i64, u32>> = vec![Default::default(); n];
        for &(c, h, v) in points {
            if (c + h).rem_euclid(2) != 1 {
                return Err(Error::Window(format!("({c}, {h}) is not a lattice vertex")));
            }
            let q = c.div_euclid(ni);
            let c0 = c.rem_euclid(ni) as usize;
            let h0 = h - q * shift;
            let level = (b[c0] - 1 - h0) / 2;
            if let Some(&old) = cols[c0].get(&level) {
                if old != v {
                    return Err(Error::Window(format!(
                        "conflicting values {old} and {v} at ({c}, {h})"
                    )));
                }
            }
            cols[c0].insert(level, v);
        }
        let rank = points.iter().map(|p| p.2).max().unwrap_or(0);
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for (c, col) in cols.iter().enumerate() {
            let keys: Vec<i64> = col.keys().copied().collect();
            let Some(&last) = keys.last() else {
                return Err(Error::Window(format!("column {c} has no points")));
            };
            if keys.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(Error::Window(format!("gap inside column {c}")));
            }
            hi = hi.max(last);
            if let Some((&l, _)) = col.iter().find(|(_, &v)| v > 0) {
                lo = lo.min(l);
            }
        }
        if lo == i64::MAX {
            return Ok(DimWindow::zero(k, n, 2));
        }
        // one zero row on top, one full row at the bottom
        let top = lo - 1;
        let rows = (hi + 1 - top + 1) as usize;
        let mut values = vec![vec![0u32; n]; rows];
        for (c, col) in cols.iter().enumerate() {
            let first = *col.keys().next().expect("nonempty");
            let last = *col.keys().last().expect("nonempty");
            for (r, row) in values.iter_mut().enumerate() {
                let level = top + r as i64;
                row[c] = if level < first {
                    0
                } else if level > last {
                    rank
                } else {
                    col[&level]
                };
            }
        }
        DimWindow::new(k, n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Vec<u32>] {
        &self.values
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.values[r][c]
    }

    /// Value of the bottom row, which must be constant.
    pub fn rank(&self) -> Result<u32> {
        let Some(bottom) = self.values.last() else {
            return Ok(0);
        };
        if bottom.iter().any(|&v| v != bottom[0]) {
            return Err(Error::Window("bottom row is not constant".into()));
        }
        if self.values[0].iter().any(|&v| v != 0) {
            return Err(Error::Window("top row is not zero".into()));
        }
        Ok(bottom[0])
    }

    /// Pointwise sum of windows of the same size.
    pub fn sum(parts: &[DimWindow]) -> Option<DimWindow> {
        let first = parts.first()?;
        let mut out = first.clone();
        for p in &parts[1..] {
            if p.n != out.n || p.rows() != out.rows() {
                return None;
            }
            for (ro, rp) in out.values.iter_mut().zip(&p.values) {
                for (a, b) in ro.iter_mut().zip(rp) {
                    *a += b;
                }
            }
        }
        Some(out)
    }

    /// Depth of contour `j` (1-based) in each column: the first row with value at least `j`.
    fn depths(&self, j: u32) -> Vec<i64> {
        (0..self.n)
            .map(|c| {
                (0..self.rows())
                    .find(|&r| self.values[r][c] >= j)
                    .expect("bottom row equals the rank") as i64
            })
            .collect()
    }
}

impl fmt::Debug for DimWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DimWindow k={} n={} [", self.k, self.n)?;
        for row in &self.values {
            writeln!(f, "  {}", row.iter().join(" "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for DimWindow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// One contour per rank level, top first, with absolute offsets.
pub fn contours_of(d: &DimWindow) -> Result<Vec<Contour>> {
    let rank = d.rank()?;
    let (n, k) = (d.n, d.k);
    let b = heights(&base(k, n));
    let mut out = Vec::with_capacity(rank as usize);
    for j in 1..=rank {
        let depth = d.depths(j);
        let f: Vec<i64> = (0..=n).map(|c| b[c] - 2 * depth[c % n]).collect();
        let mut down = Vec::new();
        for c in 1..=n {
            match f[c] - f[c - 1] {
                -1 => down.push(c),
                1 => {}
                s => {
                    return Err(Error::Window(format!(
                        "contour {j} jumps by {s} across edge {c}"
                    )))
                }
            }
        }
        out.push(Contour {
            shape: KSubset::new(n, down)?,
            offset: depth[0],
        });
    }
    Ok(out)
}

pub fn profile_of(d: &DimWindow) -> Result<Profile> {
    let cs = contours_of(d)?;
    if cs.is_empty() {
        return Ok(Profile::empty(d.k, d.n));
    }
    let (layers, offsets) = cs.into_iter().map(|c| (c.shape, c.offset)).unzip();
    Profile::new(layers, offsets)
}

/// Depth of every contour of `p` in every column, before placement.
fn raw_depths(p: &Profile) -> Vec<Vec<i64>> {
    let b = heights(&base(p.k, p.n));
    p.contours()
        .iter()
        .map(|c| {
            let h = c.heights();
            (0..p.n).map(|col| (b[col] - h[col]) / 2).collect()
        })
        .collect()
}

/// The window of `p`, placed so that the top contour first reaches row 1.
pub fn dimvec_of(p: &Profile, rows: usize) -> Result<DimWindow> {
    if p.rank() == 0 {
        return Ok(DimWindow::zero(p.k, p.n, rows));
    }
    let depths = raw_depths(p);
    let s = 1 - depths[0].iter().min().expect("n > 0");
    let needed = (depths.iter().flatten().max().expect("n > 0") + s + 1) as usize;
    if rows < needed {
        return Err(Error::RowsTooSmall { needed, have: rows });
    }
    let mut values = vec![vec![0u32; p.n]; rows];
    for (r, row) in values.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = depths.iter().filter(|d| d[c] + s <= r as i64).count() as u32;
        }
    }
    DimWindow::new(p.k, p.n, values)
}

/// Smallest number of rows that [`dimvec_of`] accepts for `p`.
pub fn rows_needed(p: &Profile) -> usize {
    if p.rank() == 0 {
        return 1;
    }
    let depths = raw_depths(p);
    let s = 1 - depths[0].iter().min().expect("n > 0");
    (depths.iter().flatten().max().expect("n > 0") + s + 1) as usize
}

/// True iff every adjacent pair of contours touches somewhere, so no circular
/// lattice path fits between them.
pub fn is_close_packed(p: &Profile) -> bool {
    p.contours().windows(2).all(|w| gap(&w[0], &w[1]) == 0)
}

/// Splits `d` at every pinch point into summands whose pointwise sum is `d`.
pub fn pinch_decompose(d: &DimWindow) -> Result<Vec<DimWindow>> {
    let cs = contours_of(d)?;
    if cs.len() <= 1 {
        return Ok(vec![d.clone()]);
    }
    let mut runs: Vec<Vec<u32>> = vec![vec![1]];
    for j in 1..cs.len() {
        if gap(&cs[j - 1], &cs[j]) > 0 {
            runs.push(Vec::new());
        }
        runs.last_mut().expect("nonempty").push(j as u32 + 1);
    }
    if runs.len() == 1 {
        return Ok(vec![d.clone()]);
    }
    let depths: Vec<Vec<i64>> = (1..=cs.len() as u32).map(|j| d.depths(j)).collect();
    runs.iter()
        .map(|run| {
            let values = (0..d.rows())
                .map(|r| {
                    (0..d.n)
                        .map(|c| {
                            run.iter()
                                .filter(|&&j| depths[j as usize - 1][c] <= r as i64)
                                .count() as u32
                        })
                        .collect()
                })
                .collect();
            DimWindow::new(d.k, d.n, values)
        })
        .collect()
}

/// Factors of the generic filtration, submodule end (bottom contour) first.
pub fn generic_factors(p: &Profile) -> Vec<KSubset> {
    p.layers.iter().rev().cloned().collect()
}

/// The distinct cyclic rotations of the layer list, each restacked minimally.
pub fn cyclic_reorderings(p: &Profile) -> Vec<Profile> {
    if p.rank() == 0 {
        return vec![p.clone()];
    }
    let r = p.rank();
    (0..r)
        .map(|s| {
            let layers = (0..r).map(|i| p.layers[(i + s) % r].clone()).collect();
            Profile::stacked(layers).expect("layers share n and k")
        })
        .unique()
        .collect()
}
