//! The bounded spacetime `[0,n] x [0,n] x Z`, its even lattice, partial states
//! and the modified octahedron recurrence.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hive::{normalize, rhombi, triangle_points, TriangleArray, TrianglePoint};

/// A point of the even lattice. Field order makes the derived `Ord` sort by time first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub t: i64,
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64, t: i64) -> Self {
        LatticePoint { t, x, y }
    }

    pub fn is_even(&self) -> bool {
        (self.x + self.y + self.t).rem_euclid(2) == 0
    }

    pub fn in_column(&self, n: usize) -> bool {
        let n = n as i64;
        (0..=n).contains(&self.x) && (0..=n).contains(&self.y)
    }

    fn offset(&self, dx: i64, dy: i64, dt: i64) -> LatticePoint {
        LatticePoint::new(self.x + dx, self.y + dy, self.t + dt)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.t)
    }
}

/// Direction of evolution. Backward evolution is the same rule with `t` negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }
}

/// A partial integer labelling of the lattice over the square of side `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacetimeState {
    n: usize,
    values: BTreeMap<LatticePoint, i64>,
}

impl SpacetimeState {
    pub fn new(n: usize) -> Self {
        SpacetimeState {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: LatticePoint) -> Option<i64> {
        self.values.get(&p).copied()
    }

    pub fn require(&self, p: LatticePoint) -> Result<i64> {
        self.get(p).ok_or(Error::MissingDependency(p))
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.values.contains_key(&p)
    }

    /// Stores a value; the point must be on the lattice.
    pub fn insert(&mut self, p: LatticePoint, v: i64) -> Result<()> {
        if !p.is_even() || !p.in_column(self.n) {
            return Err(Error::Malformed(format!("{} is not a lattice point for n = {}", p, self.n)));
        }
        self.values.insert(p, v);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (LatticePoint, i64)> + '_ {
        self.values.iter().map(|(p, v)| (*p, *v))
    }

    /// Labels the image of `e` with the values of `p`. A point that is already
    /// labelled must agree, which is how two seeds sharing an edge are glued.
    pub fn seed(&mut self, e: &SectionEmbedding, p: &TriangleArray) -> Result<()> {
        if e.n() != p.n() || e.n() != self.n {
            return Err(Error::Malformed("embedding and triangle sizes differ".into()));
        }
        for q in triangle_points(self.n) {
            let lp = e.image(q);
            let v = p.get(q);
            match self.get(lp) {
                Some(old) if old != v => {
                    return Err(Error::EdgeMismatch(format!(
                        "{} already holds {}, seed wants {}",
                        lp, old, v
                    )))
                }
                _ => self.insert(lp, v)?,
            }
        }
        Ok(())
    }
}

/// The value at `p` dictated by the recurrence, reading the layer one step
/// behind `p` (in direction `dir`) and the point two steps behind.
pub fn step_value_dir(f: &SpacetimeState, p: LatticePoint, dir: Direction) -> Result<i64> {
    let n = f.n() as i64;
    if n == 0 {
        return Err(Error::Unsupported("the recurrence needs n >= 1".into()));
    }
    if !p.is_even() || !p.in_column(f.n()) {
        return Err(Error::Malformed(format!("{} is not a lattice point for n = {}", p, n)));
    }
    let s = dir.sign();
    let nb = |dx: i64, dy: i64| f.require(p.offset(dx, dy, -s));
    let below = f.require(p.offset(0, 0, -2 * s))?;
    let (x, y) = (p.x, p.y);
    let x_inner = 0 < x && x < n;
    let y_inner = 0 < y && y < n;
    let top = match (x_inner, y_inner) {
        (true, true) => (nb(1, 0)? + nb(-1, 0)?).max(nb(0, 1)? + nb(0, -1)?),
        (true, false) => nb(1, 0)? + nb(-1, 0)?,
        (false, true) => nb(0, 1)? + nb(0, -1)?,
        (false, false) => {
            let dx = if x == 0 { 1 } else { -1 };
            let dy = if y == 0 { 1 } else { -1 };
            nb(dx, 0)? + nb(0, dy)?
        }
    };
    Ok(top - below)
}

pub fn step_value(f: &SpacetimeState, p: LatticePoint) -> Result<i64> {
    step_value_dir(f, p, Direction::Forward)
}

fn evolve_dir(f: &SpacetimeState, targets: &[LatticePoint], dir: Direction) -> Result<SpacetimeState> {
    let mut out = f.clone();
    let mut order: Vec<LatticePoint> = targets.to_vec();
    order.sort();
    if dir == Direction::Backward {
        order.reverse();
    }
    for p in order {
        if out.contains(p) {
            continue;
        }
        let v = step_value_dir(&out, p, dir)?;
        out.insert(p, v)?;
    }
    Ok(out)
}

/// Extends `f` to every target, layer by layer in increasing time.
pub fn evolve(f: &SpacetimeState, targets: &[LatticePoint]) -> Result<SpacetimeState> {
    evolve_dir(f, targets, Direction::Forward)
}

/// Extends `f` to every target, layer by layer in decreasing time.
pub fn evolve_backward(f: &SpacetimeState, targets: &[LatticePoint]) -> Result<SpacetimeState> {
    evolve_dir(f, targets, Direction::Backward)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingRole {
    Input,
    Output,
    Stage,
}

/// An injective map from the triangle of side `n` into the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionEmbedding {
    n: usize,
    role: EmbeddingRole,
    images: Vec<LatticePoint>,
}

impl SectionEmbedding {
    pub fn new(n: usize, role: EmbeddingRole, map: impl Fn(TrianglePoint) -> LatticePoint) -> Result<Self> {
        let images: Vec<LatticePoint> = triangle_points(n).map(map).collect();
        if let Some(bad) = images.iter().find(|p| !p.is_even() || !p.in_column(n)) {
            return Err(Error::Malformed(format!("embedding hits non-lattice point {}", bad)));
        }
        let mut sorted = images.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed("embedding is not injective".into()));
        }
        Ok(SectionEmbedding { n, role, images })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn role(&self) -> EmbeddingRole {
        self.role
    }

    pub fn image(&self, p: TrianglePoint) -> LatticePoint {
        let k = p.row();
        self.images[k * (k + 1) / 2 + p.y]
    }

    pub fn images(&self) -> &[LatticePoint] {
        &self.images
    }
}

/// `f` composed with `e`, without normalization.
pub fn read_section_raw(f: &SpacetimeState, e: &SectionEmbedding) -> Result<TriangleArray> {
    let values = e
        .images()
        .iter()
        .map(|&p| f.require(p))
        .collect::<Result<Vec<_>>>()?;
    TriangleArray::new(e.n(), values)
}

/// `f` composed with `e`, normalized at the top vertex.
pub fn read_section(f: &SpacetimeState, e: &SectionEmbedding) -> Result<TriangleArray> {
    Ok(normalize(&read_section_raw(f, e)?))
}

/// Checks every unit rhombus whose image under `e` is a parallelogram in spacetime.
/// For flat sections that is every rhombus; bent sections skip the ones they fold.
pub fn check_section_hive_condition(f: &SpacetimeState, e: &SectionEmbedding) -> Result<bool> {
    let key = |p: LatticePoint| [p.x, p.y, p.t];
    for r in rhombi(e.n()) {
        let [o0, o1] = r.obtuse.map(|p| e.image(p));
        let [a0, a1] = r.acute.map(|p| e.image(p));
        let (so, sa) = (key(o0), key(o1));
        let (ta, tb) = (key(a0), key(a1));
        let flat = (0..3).all(|i| so[i] + sa[i] == ta[i] + tb[i]);
        if !flat {
            continue;
        }
        if f.require(o0)? + f.require(o1)? < f.require(a0)? + f.require(a1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lattice points of the tetrahedron `|x - y| <= t <= n - |n - x - y|`.
pub fn tetrahedron(n: usize) -> Vec<LatticePoint> {
    let n = n as i64;
    let mut out = Vec::new();
    for t in 0..=n {
        for x in 0..=n {
            for y in 0..=n {
                let p = LatticePoint::new(x, y, t);
                if p.is_even() && (x - y).abs() <= t && t <= n - (n - x - y).abs() {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Lattice points of the quarter octahedron `x + y <= t <= 2n - x - y`.
pub fn quarter_octahedron(n: usize) -> Vec<LatticePoint> {
    let n = n as i64;
    let mut out = Vec::new();
    for t in 0..=2 * n {
        for x in 0..=n {
            for y in 0..=n {
                let p = LatticePoint::new(x, y, t);
                if p.is_even() && x + y <= t && t <= 2 * n - x - y {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Horizontal slices of `f` over `region`: one block per time with header
/// `t=k`, rows by decreasing `y`, columns by increasing `x`, `.` where the
/// region has no point. Cells are right-aligned to a common width.
pub fn render_slices(f: &SpacetimeState, region: &[LatticePoint]) -> Result<String> {
    let n = f.n() as i64;
    let mut by_t: BTreeMap<i64, BTreeMap<(i64, i64), i64>> = BTreeMap::new();
    for &p in region {
        by_t.entry(p.t).or_default().insert((p.x, p.y), f.require(p)?);
    }
    let width = by_t
        .values()
        .flat_map(|m| m.values())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut blocks = Vec::new();
    for (t, layer) in &by_t {
        let mut block = format!("t={}\n", t);
        for y in (0..=n).rev() {
            let cells: Vec<String> = (0..=n)
                .map(|x| match layer.get(&(x, y)) {
                    Some(v) => format!("{:>w$}", v, w = width),
                    None => format!("{:>w$}", ".", w = width),
                })
                .collect();
            block.push_str(&cells.join(" "));
            block.push('\n');
        }
        blocks.push(block);
    }
    Ok(blocks.join("\n"))
}
