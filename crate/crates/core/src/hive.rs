//! Triangular integer arrays on the lattice triangle of side `n`, the rhombus
//! inequalities, boundary weights and exhaustive enumeration of hive sets.
//!
//! Points are `(x, y, z)` with `x + y + z = n`. Row `k` (counted from the top)
//! holds the points with `z = n - k`, left to right by increasing `y`; the top
//! point is `(0, 0, n)`, the bottom-left `(n, 0, 0)`, the bottom-right `(0, n, 0)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrianglePoint {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl TrianglePoint {
    pub fn new(x: usize, y: usize, z: usize) -> Self {
        TrianglePoint { x, y, z }
    }

    /// Point from signed coordinates, `None` if it falls outside the triangle of side `n`.
    pub fn checked(n: usize, x: i64, y: i64, z: i64) -> Option<Self> {
        if x < 0 || y < 0 || z < 0 || (x + y + z) as usize != n {
            return None;
        }
        Some(TrianglePoint::new(x as usize, y as usize, z as usize))
    }

    pub fn row(&self) -> usize {
        self.x + self.y
    }
}

impl fmt::Display for TrianglePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// All points of the triangle in row-major display order.
pub fn triangle_points(n: usize) -> impl Iterator<Item = TrianglePoint> {
    (0..=n).flat_map(move |k| (0..=k).map(move |y| TrianglePoint::new(k - y, y, n - k)))
}

/// A weakly decreasing integer sequence. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Malformed(format!(
                "weight {:?} is not weakly decreasing",
                parts
            )));
        }
        Ok(DominantWeight(parts))
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts, `|λ|`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.iter().all(|&p| p >= 0)
    }

    /// Every weakly decreasing sequence of length `n` with entries in `lo..=hi`.
    pub fn enumerate(n: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
        fn go(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
            if cur.len() == n {
                out.push(DominantWeight(cur.clone()));
                return;
            }
            let top = cur.last().copied().unwrap_or(hi);
            for v in (lo..=top).rev() {
                cur.push(v);
                go(n, lo, hi, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if lo <= hi {
            go(n, lo, hi, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    /// Partitions with at most `n` parts (padded with zeros) and total size `size`.
    pub fn partitions_of(n: usize, size: i64) -> Vec<DominantWeight> {
        DominantWeight::enumerate(n, 0, size.max(0))
            .into_iter()
            .filter(|w| w.size() == size)
            .collect()
    }

    pub fn prefix_sums(&self) -> Vec<i64> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(0);
        for &p in &self.0 {
            acc += p;
            out.push(acc);
        }
        out
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad weight entry {:?}: {}", p, e)))
            })
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(parts)
    }
}

/// A total integer labelling of the triangle of side `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleArray {
    n: usize,
    values: Vec<i64>,
}

pub fn point_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

impl TriangleArray {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != point_count(n) {
            return Err(Error::Malformed(format!(
                "triangle of side {} needs {} values, got {}",
                n,
                point_count(n),
                values.len()
            )));
        }
        Ok(TriangleArray { n, values })
    }

    pub fn zeros(n: usize) -> Self {
        TriangleArray {
            n,
            values: vec![0; point_count(n)],
        }
    }

    /// Builds from display rows, top row first; row `k` must hold `k + 1` entries.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Malformed("no rows".into()));
        }
        let n = rows.len() - 1;
        let mut values = Vec::with_capacity(point_count(n));
        for (k, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != k + 1 {
                return Err(Error::Malformed(format!(
                    "row {} has {} entries, expected {}",
                    k,
                    row.len(),
                    k + 1
                )));
            }
            values.extend_from_slice(row);
        }
        TriangleArray::new(n, values)
    }

    pub fn from_fn(n: usize, f: impl FnMut(TrianglePoint) -> i64) -> Self {
        TriangleArray {
            n,
            values: triangle_points(n).map(f).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    fn index(&self, p: TrianglePoint) -> usize {
        debug_assert_eq!(p.x + p.y + p.z, self.n, "point {} off triangle {}", p, self.n);
        let k = p.x + p.y;
        k * (k + 1) / 2 + p.y
    }

    pub fn get(&self, p: TrianglePoint) -> i64 {
        self.values[self.index(p)]
    }

    pub fn at(&self, x: usize, y: usize, z: usize) -> i64 {
        self.get(TrianglePoint::new(x, y, z))
    }

    /// Value at signed coordinates, `None` off the triangle.
    pub fn try_at(&self, x: i64, y: i64, z: i64) -> Option<i64> {
        TrianglePoint::checked(self.n, x, y, z).map(|p| self.get(p))
    }

    pub fn set(&mut self, p: TrianglePoint, v: i64) {
        let i = self.index(p);
        self.values[i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..=self.n)
            .map(|k| {
                let start = k * (k + 1) / 2;
                self.values[start..start + k + 1].to_vec()
            })
            .collect()
    }

    pub fn top(&self) -> i64 {
        self.at(0, 0, self.n)
    }

    pub fn shifted(&self, c: i64) -> TriangleArray {
        TriangleArray {
            n: self.n,
            values: self.values.iter().map(|v| v + c).collect(),
        }
    }
}

impl fmt::Display for TriangleArray {
    /// Text format: `n`, then the rows top to bottom.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for TriangleArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad side length: {}", e)))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|v| {
                        v.parse::<i64>()
                            .map_err(|e| Error::Parse(format!("bad entry {:?}: {}", v, e)))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n + 1 {
            return Err(Error::Parse(format!(
                "expected {} rows for n = {}, got {}",
                n + 1,
                n,
                rows.len()
            )));
        }
        TriangleArray::from_rows(&rows)
    }
}

/// Which of the three rhombus orientations an inequality belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhombusFamily {
    /// Horizontal, leaning right.
    First,
    /// Horizontal, leaning left.
    Second,
    /// Vertical.
    Third,
}

/// A unit rhombus: the obtuse pair sums to at least the acute pair on a hive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rhombus {
    pub family: RhombusFamily,
    pub obtuse: [TrianglePoint; 2],
    pub acute: [TrianglePoint; 2],
}

impl Rhombus {
    pub fn slack(&self, p: &TriangleArray) -> i64 {
        p.get(self.obtuse[0]) + p.get(self.obtuse[1]) - p.get(self.acute[0]) - p.get(self.acute[1])
    }
}

/// Every unit rhombus of the triangle of side `n`.
pub fn rhombi(n: usize) -> Vec<Rhombus> {
    let mut out = Vec::new();
    let pt = |x: i64, y: i64, z: i64| TrianglePoint::checked(n, x, y, z);
    for p in triangle_points(n) {
        let (x, y, z) = (p.x as i64, p.y as i64, p.z as i64);
        let candidates = [
            (
                RhombusFamily::First,
                [(x, y + 1, z - 1)],
                [(x + 1, y, z - 1), (x - 1, y + 1, z)],
            ),
            (
                RhombusFamily::Second,
                [(x + 1, y, z - 1)],
                [(x, y + 1, z - 1), (x + 1, y - 1, z)],
            ),
            (
                RhombusFamily::Third,
                [(x + 1, y - 1, z)],
                [(x + 1, y, z - 1), (x, y - 1, z + 1)],
            ),
        ];
        for (family, [o], [a0, a1]) in candidates {
            if let (Some(o), Some(a0), Some(a1)) = (pt(o.0, o.1, o.2), pt(a0.0, a0.1, a0.2), pt(a1.0, a1.1, a1.2)) {
                out.push(Rhombus {
                    family,
                    obtuse: [p, o],
                    acute: [a0, a1],
                });
            }
        }
    }
    out
}

fn holds(p: &TriangleArray, families: &[RhombusFamily]) -> bool {
    rhombi(p.n())
        .iter()
        .filter(|r| families.contains(&r.family))
        .all(|r| r.slack(p) >= 0)
}

/// All three rhombus families hold.
pub fn check_hive(p: &TriangleArray) -> bool {
    holds(
        p,
        &[RhombusFamily::First, RhombusFamily::Second, RhombusFamily::Third],
    )
}

/// Only the two horizontal families hold.
pub fn check_quasi_hive(p: &TriangleArray) -> bool {
    holds(p, &[RhombusFamily::First, RhombusFamily::Second])
}

/// Subtracts the top value from every entry.
pub fn normalize(p: &TriangleArray) -> TriangleArray {
    p.shifted(-p.top())
}

/// Bottom, upper-left and upper-right difference sequences `(λ, μ, ν)`.
///
/// The raw differences are returned even when they fail to be weakly
/// decreasing, so this does not go through [`DominantWeight::new`].
pub fn boundary_raw(p: &TriangleArray) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    let n = p.n();
    let lambda = (1..=n)
        .map(|k| p.at(n - k, k, 0) - p.at(n - k + 1, k - 1, 0))
        .collect();
    let mu = (1..=n)
        .map(|k| p.at(k, 0, n - k) - p.at(k - 1, 0, n - k + 1))
        .collect();
    let nu = (1..=n)
        .map(|k| p.at(0, k, n - k) - p.at(0, k - 1, n - k + 1))
        .collect();
    (lambda, mu, nu)
}

pub fn boundary(p: &TriangleArray) -> Result<(DominantWeight, DominantWeight, DominantWeight)> {
    let (l, m, v) = boundary_raw(p);
    Ok((
        DominantWeight::new(l)?,
        DominantWeight::new(m)?,
        DominantWeight::new(v)?,
    ))
}

/// A normalized array satisfying the hive condition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hive(TriangleArray);

impl Hive {
    /// Checks the hive condition and normalizes to top value zero.
    pub fn new(p: TriangleArray) -> Result<Self> {
        if !check_hive(&p) {
            let bad = rhombi(p.n())
                .into_iter()
                .find(|r| r.slack(&p) < 0)
                .expect("failing rhombus");
            return Err(Error::NotHive(format!(
                "{:?} rhombus at obtuse {} {} fails",
                bad.family, bad.obtuse[0], bad.obtuse[1]
            )));
        }
        Ok(Hive(normalize(&p)))
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Hive::new(TriangleArray::from_rows(rows)?)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn array(&self) -> &TriangleArray {
        &self.0
    }

    pub fn into_array(self) -> TriangleArray {
        self.0
    }

    pub fn boundary(&self) -> (DominantWeight, DominantWeight, DominantWeight) {
        boundary(&self.0).expect("hive boundaries are weakly decreasing")
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.0.rows()
    }
}

impl fmt::Display for Hive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A normalized array satisfying the two horizontal rhombus families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiHive(TriangleArray);

impl QuasiHive {
    pub fn new(p: TriangleArray) -> Result<Self> {
        if !check_quasi_hive(&p) {
            return Err(Error::NotQuasiHive);
        }
        Ok(QuasiHive(normalize(&p)))
    }

    pub fn array(&self) -> &TriangleArray {
        &self.0
    }
}

/// The boundary values of a hive in `HIVE_{λμ}^ν`, top normalized to zero.
/// `None` when the corner values are inconsistent (`|λ| + |μ| != |ν|`).
pub fn boundary_values(
    lambda: &DominantWeight,
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Option<Vec<(TrianglePoint, i64)>> {
    let n = lambda.len();
    if mu.len() != n || nu.len() != n || lambda.size() + mu.size() != nu.size() {
        return None;
    }
    let (ls, ms, ns) = (lambda.prefix_sums(), mu.prefix_sums(), nu.prefix_sums());
    let mut out = Vec::with_capacity(3 * n);
    for k in 0..=n {
        out.push((TrianglePoint::new(k, 0, n - k), ms[k]));
        out.push((TrianglePoint::new(0, k, n - k), ns[k]));
        out.push((TrianglePoint::new(n - k, k, 0), ms[n] + ls[k]));
    }
    Some(out)
}

/// The set `HIVE_{λμ}^ν`, by depth-first search over interior values.
///
/// Points are visited in display order; each rhombus is checked at its last
/// visited vertex, and for interior points those rhombi give both a lower and
/// an upper bound, so the search is finite.
pub fn enumerate_hives(
    lambda: &DominantWeight,
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Vec<Hive> {
    let n = lambda.len();
    let Some(bvals) = boundary_values(lambda, mu, nu) else {
        return Vec::new();
    };
    let mut arr = TriangleArray::zeros(n);
    let mut fixed = vec![false; point_count(n)];
    for (p, v) in bvals {
        arr.set(p, v);
        let k = p.row();
        fixed[k * (k + 1) / 2 + p.y] = true;
    }
    let order: Vec<TrianglePoint> = triangle_points(n).collect();
    let closing = closing_rhombi(n, &order);
    let mut out = Vec::new();
    search(0, &order, &fixed, &closing, &mut arr, &mut out);
    out
}

/// For each point in `order`, the rhombi whose last vertex (in that order) it is,
/// split into lower-bound (point is obtuse) and upper-bound (point is acute) roles.
struct Closing {
    lower: Vec<[TrianglePoint; 3]>,
    upper: Vec<[TrianglePoint; 3]>,
}

fn closing_rhombi(n: usize, order: &[TrianglePoint]) -> Vec<Closing> {
    let pos = |p: &TrianglePoint| {
        let k = p.row();
        k * (k + 1) / 2 + p.y
    };
    let mut out: Vec<Closing> = order
        .iter()
        .map(|_| Closing {
            lower: Vec::new(),
            upper: Vec::new(),
        })
        .collect();
    for r in rhombi(n) {
        let all = [r.obtuse[0], r.obtuse[1], r.acute[0], r.acute[1]];
        let last = *all.iter().max_by_key(|p| pos(p)).unwrap();
        let slot = &mut out[pos(&last)];
        if r.obtuse.contains(&last) {
            // last + other_obtuse >= a0 + a1
            let other = if r.obtuse[0] == last { r.obtuse[1] } else { r.obtuse[0] };
            slot.lower.push([r.acute[0], r.acute[1], other]);
        } else {
            // last <= o0 + o1 - other_acute
            let other = if r.acute[0] == last { r.acute[1] } else { r.acute[0] };
            slot.upper.push([r.obtuse[0], r.obtuse[1], other]);
        }
    }
    out
}

fn search(
    idx: usize,
    order: &[TrianglePoint],
    fixed: &[bool],
    closing: &[Closing],
    arr: &mut TriangleArray,
    out: &mut Vec<Hive>,
) {
    if idx == order.len() {
        out.push(Hive(normalize(arr)));
        return;
    }
    let c = &closing[idx];
    let lo = c
        .lower
        .iter()
        .map(|[a, b, o]| arr.get(*a) + arr.get(*b) - arr.get(*o))
        .max();
    let hi = c
        .upper
        .iter()
        .map(|[a, b, o]| arr.get(*a) + arr.get(*b) - arr.get(*o))
        .min();
    let p = order[idx];
    if fixed[idx] {
        let v = arr.get(p);
        if lo.is_some_and(|lo| v < lo) || hi.is_some_and(|hi| v > hi) {
            return;
        }
        search(idx + 1, order, fixed, closing, arr, out);
        return;
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        unreachable!("interior point {} without two-sided bounds", p);
    };
    for v in lo..=hi {
        arr.set(p, v);
        search(idx + 1, order, fixed, closing, arr, out);
    }
}
