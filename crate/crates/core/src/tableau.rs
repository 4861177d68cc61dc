//! Semistandard skew tableaux in the letters `1..=n`, Gelfand-Tsetlin patterns,
//! jeu de taquin, row insertion, recording tableaux and Bender-Knuth moves.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Shapes are weakly decreasing part lists; trailing zeros are insignificant.
pub type Shape = Vec<usize>;

fn trim(mut s: Shape) -> Shape {
    while s.last() == Some(&0) {
        s.pop();
    }
    s
}

fn pad(s: &[usize], len: usize) -> Shape {
    let mut out = s.to_vec();
    out.resize(len.max(s.len()), 0);
    out
}

/// Parts of a non-negative dominant weight as a shape.
pub fn shape_of(parts: &[i64]) -> Result<Shape> {
    if parts.iter().any(|&p| p < 0) {
        return Err(Error::Unsupported(format!(
            "tableaux need non-negative parts, got {:?}",
            parts
        )));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Malformed(format!("{:?} is not a partition", parts)));
    }
    Ok(parts.iter().map(|&p| p as usize).collect())
}

/// A semistandard filling of a skew diagram. Row `r` occupies columns
/// `inner[r]..inner[r] + rows[r].len()` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewTableau {
    n: usize,
    inner: Shape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(n: usize, inner: Shape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let len = inner.len().max(rows.len());
        let mut inner = pad(&inner, len);
        let mut rows = rows;
        rows.resize(len, Vec::new());
        while rows.last().is_some_and(|r| r.is_empty()) && inner.last() == Some(&0) {
            rows.pop();
            inner.pop();
        }
        let t = SkewTableau { n, inner, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn straight(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        SkewTableau::new(n, Vec::new(), rows)
    }

    /// The empty tableau of rank `n`.
    pub fn empty(n: usize) -> Self {
        SkewTableau {
            n,
            inner: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let outer = self.outer();
        if self.inner.windows(2).any(|w| w[0] < w[1]) || outer.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Malformed(format!(
                "shape {:?}/{:?} is not a skew diagram",
                outer, self.inner
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.iter().any(|&a| a == 0 || a > self.n) {
                return Err(Error::Malformed(format!("row {} has a letter outside 1..={}", r + 1, self.n)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Malformed(format!("row {} is not weakly increasing", r + 1)));
            }
        }
        for r in 1..self.rows.len() {
            for c in self.inner[r]..outer[r] {
                if let Some(above) = self.cell(r - 1, c) {
                    if above >= self.cell(r, c).unwrap() {
                        return Err(Error::Malformed(format!(
                            "column {} is not strictly increasing at row {}",
                            c + 1,
                            r + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn outer(&self) -> Shape {
        self.inner
            .iter()
            .zip(&self.rows)
            .map(|(i, r)| i + r.len())
            .collect()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&i| i == 0)
    }

    /// Outer shape padded with zeros to `n` parts.
    pub fn shape(&self) -> Shape {
        pad(&trim(self.outer()), self.n)
    }

    /// Entry at 0-based `(row, column)`.
    pub fn cell(&self, r: usize, c: usize) -> Option<usize> {
        let row = self.rows.get(r)?;
        let i = self.inner[r];
        if c < i {
            return None;
        }
        row.get(c - i).copied()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Multiplicity of each letter `1..=n`.
    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.n];
        for &a in self.rows.iter().flatten() {
            w[a - 1] += 1;
        }
        w
    }

    fn columns(&self) -> usize {
        self.outer().into_iter().max().unwrap_or(0)
    }

    /// Per column: +1 if it holds `i + 1`, -1 if it holds `i` (both cancel).
    fn column_signs(&self, i: usize) -> Vec<i64> {
        let mut s = vec![0i64; self.columns()];
        for (r, row) in self.rows.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                let c = self.inner[r] + k;
                if a == i + 1 {
                    s[c] += 1;
                } else if a == i {
                    s[c] -= 1;
                }
            }
        }
        s
    }

    /// Suffix sums `h_i(j)` for each column `j`, then the empty suffix.
    fn h_profile(&self, i: usize) -> Vec<i64> {
        let s = self.column_signs(i);
        let mut h = vec![0i64; s.len() + 1];
        for j in (0..s.len()).rev() {
            h[j] = h[j + 1] + s[j];
        }
        h
    }

    /// The empty prefix, then prefix sums `k_i(j)` for each column `j`.
    fn k_profile(&self, i: usize) -> Vec<i64> {
        let s = self.column_signs(i);
        let mut k = vec![0i64; s.len() + 1];
        for j in 0..s.len() {
            k[j + 1] = k[j] - s[j];
        }
        k
    }

    fn check_index(&self, i: usize) {
        assert!(i >= 1 && i < self.n, "crystal index {} out of range 1..{}", i, self.n);
    }

    pub fn epsilon(&self, i: usize) -> usize {
        self.check_index(i);
        *self.h_profile(i).iter().max().unwrap() as usize
    }

    pub fn phi(&self, i: usize) -> usize {
        self.check_index(i);
        *self.k_profile(i).iter().max().unwrap() as usize
    }

    fn replace_in_column(&self, c: usize, from: usize, to: usize) -> SkewTableau {
        let mut out = self.clone();
        for (r, row) in out.rows.iter_mut().enumerate() {
            let i = self.inner[r];
            if c >= i && c - i < row.len() && row[c - i] == from {
                row[c - i] = to;
                return out;
            }
        }
        unreachable!("column {} holds no {}", c, from)
    }

    /// `e_i`: the `i + 1` in the rightmost column maximizing `h_i` becomes `i`.
    pub fn raise(&self, i: usize) -> Option<SkewTableau> {
        self.check_index(i);
        let h = self.h_profile(i);
        let eps = *h.iter().max().unwrap();
        if eps == 0 {
            return None;
        }
        let a = (0..h.len() - 1).rev().find(|&j| h[j] == eps).unwrap();
        Some(self.replace_in_column(a, i + 1, i))
    }

    /// `f_i`: the `i` in the leftmost column maximizing `k_i` becomes `i + 1`.
    pub fn lower(&self, i: usize) -> Option<SkewTableau> {
        self.check_index(i);
        let k = self.k_profile(i);
        let phi = *k.iter().max().unwrap();
        if phi == 0 {
            return None;
        }
        let b = (1..k.len()).find(|&j| k[j] == phi).unwrap() - 1;
        Some(self.replace_in_column(b, i, i + 1))
    }
}

impl fmt::Display for SkewTableau {
    /// Rows top-down; a row without boxes is written `-`. Skew tableaux get
    /// an `inner:` header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        if !self.is_straight() {
            let parts: Vec<String> = trim(self.inner.clone()).iter().map(|p| p.to_string()).collect();
            writeln!(f, "inner: {}", parts.join(" "))?;
        }
        for row in &self.rows {
            if row.is_empty() {
                writeln!(f, "-")?;
            } else {
                let cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
                writeln!(f, "{}", cells.join(" "))?;
            }
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = Error;

    /// Accepts optional `n:` and `inner:` header lines before the rows.
    /// Without `n:` the rank is the largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let parse_list = |l: &str| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("bad entry {:?}: {}", t, e))))
                .collect::<Result<Vec<usize>>>()
        };
        let mut n = None;
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("n:") {
                n = Some(rest.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad rank: {}", e)))?);
            } else if let Some(rest) = line.strip_prefix("inner:") {
                inner = parse_list(rest)?;
            } else if line == "-" {
                rows.push(Vec::new());
            } else {
                rows.push(parse_list(line)?);
            }
        }
        let n = n.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(0));
        SkewTableau::new(n, inner, rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `b_λ`: row `i` filled with `i`.
pub fn highest_tableau(lambda: &[usize], n: usize) -> SkewTableau {
    let rows = lambda
        .iter()
        .enumerate()
        .map(|(r, &len)| vec![r + 1; len])
        .collect();
    SkewTableau::straight(n, rows).expect("b_lambda is semistandard")
}

/// `c_λ`: a column of height `h` holds `n - h + 1, …, n`.
pub fn lowest_tableau(lambda: &[usize], n: usize) -> SkewTableau {
    let lambda = trim(lambda.to_vec());
    let rows = (0..lambda.len())
        .map(|r| {
            (0..lambda[r])
                .map(|c| {
                    let height = lambda.iter().filter(|&&l| l > c).count();
                    n - height + r + 1
                })
                .collect()
        })
        .collect();
    SkewTableau::straight(n, rows).expect("c_lambda is semistandard")
}

/// A Gelfand-Tsetlin pattern: row `i` (1-based) holds `T(i,1..=i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::InvalidGt(format!("row {} has {} entries", i + 1, row.len())));
            }
        }
        for i in 1..rows.len() {
            for j in 0..i {
                if !(rows[i][j] >= rows[i - 1][j] && rows[i - 1][j] >= rows[i][j + 1]) {
                    return Err(Error::InvalidGt(format!(
                        "rows {} and {} do not interlace at position {}",
                        i,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `T(i, j)`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    fn try_get(&self, i: usize, j: usize) -> Option<i64> {
        if i == 0 || j == 0 || j > i || i > self.n() {
            None
        } else {
            Some(self.get(i, j))
        }
    }

    /// The bottom row, the shape of the corresponding tableau.
    pub fn base(&self) -> Vec<i64> {
        self.rows.last().cloned().unwrap_or_default()
    }

    /// Differences of consecutive row sums.
    pub fn weight(&self) -> Vec<i64> {
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        (0..sums.len())
            .map(|i| sums[i] - if i == 0 { 0 } else { sums[i - 1] })
            .collect()
    }

    /// Every pattern with the given bottom row.
    pub fn enumerate(base: &[i64]) -> Vec<GtPattern> {
        fn below(row: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            let j = cur.len();
            if j + 1 == row.len() {
                out.push(cur.clone());
                return;
            }
            for v in row[j + 1]..=row[j] {
                cur.push(v);
                below(row, cur, out);
                cur.pop();
            }
        }
        fn go(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
            let top = rows.last().unwrap().clone();
            if top.len() == 1 {
                let mut r = rows.clone();
                r.reverse();
                out.push(GtPattern { rows: r });
                return;
            }
            let mut next = Vec::new();
            below(&top, &mut Vec::new(), &mut next);
            for row in next {
                rows.push(row);
                go(rows, out);
                rows.pop();
            }
        }
        if base.is_empty() {
            return vec![GtPattern { rows: Vec::new() }];
        }
        let mut out = Vec::new();
        go(&mut vec![base.to_vec()], &mut out);
        out
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for GtPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|v| v.parse::<i64>().map_err(|e| Error::Parse(format!("bad entry {:?}: {}", v, e))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GtPattern::new(rows)
    }
}

/// `T(i, j)` = number of entries `<= i` in row `j`.
pub fn gt_from_tableau(t: &SkewTableau) -> Result<GtPattern> {
    if !t.is_straight() {
        return Err(Error::Unsupported("GT patterns need a straight shape".into()));
    }
    let n = t.n();
    if t.rows().len() > n {
        return Err(Error::Malformed(format!("{} rows exceed rank {}", t.rows().len(), n)));
    }
    let rows = (1..=n)
        .map(|i| {
            (1..=i)
                .map(|j| {
                    t.rows()
                        .get(j - 1)
                        .map_or(0, |row| row.iter().filter(|&&a| a <= i).count() as i64)
                })
                .collect()
        })
        .collect();
    GtPattern::new(rows)
}

pub fn tableau_from_gt(g: &GtPattern) -> Result<SkewTableau> {
    if g.rows().iter().flatten().any(|&v| v < 0) {
        return Err(Error::Unsupported("GT pattern with negative entries has no tableau".into()));
    }
    let n = g.n();
    let rows = (1..=n)
        .map(|j| {
            let mut row = Vec::new();
            for i in j..=n {
                let prev = if i == j { 0 } else { g.get(i - 1, j) };
                row.extend(std::iter::repeat_n(i, (g.get(i, j) - prev) as usize));
            }
            row
        })
        .collect();
    SkewTableau::straight(n, rows)
}

/// Every semistandard tableau of shape `lambda` in letters `1..=n`.
pub fn all_tableaux(lambda: &[usize], n: usize) -> Vec<SkewTableau> {
    if trim(lambda.to_vec()).len() > n {
        return Vec::new();
    }
    let base: Vec<i64> = pad(lambda, n).iter().map(|&p| p as i64).collect();
    GtPattern::enumerate(&base)
        .iter()
        .map(|g| tableau_from_gt(g).expect("non-negative pattern"))
        .collect()
}

/// `T ⋆ U`: `U` up and to the right of `T`.
pub fn star(t: &SkewTableau, u: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_straight() || !u.is_straight() {
        return Err(Error::Unsupported("star product needs straight shapes".into()));
    }
    let offset = t.rows().first().map_or(0, Vec::len);
    let mut inner = vec![offset; u.rows().len()];
    inner.extend(std::iter::repeat_n(0, t.rows().len()));
    let rows = u.rows().iter().chain(t.rows()).cloned().collect();
    SkewTableau::new(t.n().max(u.n()), inner, rows)
}

/// `(outer, inner)` with trailing zeros removed.
pub type ShapePair = (Shape, Shape);

/// Rectifies by jeu de taquin, always sliding into the inner corner of the
/// lowest row that still has inner boxes. Returns the shapes before and after
/// every slide.
pub fn jdt_rectify(s: &SkewTableau) -> (SkewTableau, Vec<ShapePair>) {
    let mut inner = s.inner.clone();
    let mut grid: Vec<Vec<Option<usize>>> = s
        .rows
        .iter()
        .zip(&inner)
        .map(|(row, &i)| std::iter::repeat_n(None, i).chain(row.iter().map(|&a| Some(a))).collect())
        .collect();
    let shapes = |grid: &Vec<Vec<Option<usize>>>, inner: &Shape| -> ShapePair {
        (trim(grid.iter().map(Vec::len).collect()), trim(inner.clone()))
    };
    let mut trace = vec![shapes(&grid, &inner)];
    while let Some(r0) = inner.iter().rposition(|&i| i > 0) {
        inner[r0] -= 1;
        let (mut r, mut c) = (r0, inner[r0]);
        loop {
            let right = grid[r].get(c + 1).copied().flatten();
            let below = grid.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            match (right, below) {
                (None, None) => break,
                (Some(a), Some(b)) if b > a => {
                    grid[r][c] = Some(a);
                    c += 1;
                }
                (Some(a), None) => {
                    grid[r][c] = Some(a);
                    c += 1;
                }
                (_, Some(b)) => {
                    grid[r][c] = Some(b);
                    r += 1;
                }
            }
        }
        debug_assert_eq!(c + 1, grid[r].len());
        grid[r].pop();
        trace.push(shapes(&grid, &inner));
    }
    let rows = grid
        .into_iter()
        .map(|row| row.into_iter().map(|a| a.expect("rectified")).collect())
        .collect();
    let out = SkewTableau::straight(s.n, rows).expect("jeu de taquin preserves semistandardness");
    (out, trace)
}

/// Row bumping of a single letter into a straight tableau.
pub fn row_insert(t: &SkewTableau, a: usize) -> Result<SkewTableau> {
    if !t.is_straight() {
        return Err(Error::Unsupported("row insertion needs a straight shape".into()));
    }
    let mut rows = t.rows.clone();
    let mut x = a;
    let mut r = 0;
    loop {
        if r >= t.n() {
            return Err(Error::RowOverflow(t.n()));
        }
        if r == rows.len() {
            rows.push(vec![x]);
            break;
        }
        match rows[r].iter().position(|&b| b > x) {
            Some(p) => {
                x = std::mem::replace(&mut rows[r][p], x);
                r += 1;
            }
            None => {
                rows[r].push(x);
                break;
            }
        }
    }
    SkewTableau::straight(t.n(), rows)
}

/// `[J^n, …, J^0]`: `J^n = T`, and `J^{k-1}` inserts row `k` of `U` into `J^k`.
pub fn jdt_stages(t: &SkewTableau, u: &SkewTableau) -> Result<Vec<SkewTableau>> {
    let n = t.n();
    let mut stages = vec![t.clone()];
    let mut cur = t.clone();
    for k in (1..=n).rev() {
        if let Some(row) = u.rows().get(k - 1) {
            for &a in row {
                cur = row_insert(&cur, a)?;
            }
        }
        stages.push(cur.clone());
    }
    Ok(stages)
}

/// `R(T, U)(i, j) = Σ_{r≥j} λ^{i-j+1}_r - Σ_{r≥j+1} λ^{i-j}_r` with `λ^k` the shape of `J^k`.
pub fn recording_tableau(t: &SkewTableau, u: &SkewTableau) -> Result<GtPattern> {
    let n = t.n();
    let stages = jdt_stages(t, u)?;
    // stages[0] is J^n, so J^k is stages[n - k].
    let shape = |k: usize| -> Shape { stages[n - k].shape() };
    let tail = |s: &Shape, from: usize| -> i64 { s.iter().skip(from - 1).map(|&p| p as i64).sum() };
    let rows = (1..=n)
        .map(|i| {
            (1..=i)
                .map(|j| tail(&shape(i - j + 1), j) - tail(&shape(i - j), j + 1))
                .collect()
        })
        .collect();
    GtPattern::new(rows)
}

/// The Bender-Knuth move `s_i` reflecting row `i` within its interlacing bounds.
pub fn bender_knuth(g: &GtPattern, i: usize) -> Result<GtPattern> {
    let n = g.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let mut rows = g.rows.clone();
    for j in 1..=i {
        let lo = [g.try_get(i + 1, j + 1), g.try_get(i - 1, j)].into_iter().flatten().max().unwrap();
        let hi = [g.try_get(i + 1, j), g.try_get(i - 1, j - 1)].into_iter().flatten().min().unwrap();
        rows[i - 1][j - 1] = lo + hi - g.get(i, j);
    }
    GtPattern::new(rows)
}

/// `ξ = s_1 (s_2 s_1) ⋯ (s_{n-1} ⋯ s_1)`, rightmost factor applied first.
pub fn schutzenberger(g: &GtPattern) -> GtPattern {
    let mut out = g.clone();
    for top in (1..g.n()).rev() {
        for i in 1..=top {
            out = bender_knuth(&out, i).expect("index in range");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tab(n: usize, rows: &[&[usize]]) -> SkewTableau {
        SkewTableau::straight(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn gt(rows: &[&[i64]]) -> GtPattern {
        GtPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn gt_bijection_example() {
        let t = tab(4, &[&[1, 1, 2, 2], &[2, 3, 3], &[4]]);
        let g = gt(&[&[2], &[4, 1], &[4, 3, 0], &[4, 3, 1, 0]]);
        assert_eq!(gt_from_tableau(&t).unwrap(), g);
        assert_eq!(tableau_from_gt(&g).unwrap(), t);
        assert_eq!(t.weight(), vec![2, 3, 2, 1]);
        assert_eq!(g.weight(), vec![2, 3, 2, 1]);
    }

    #[test]
    fn gt_of_empty_and_highest() {
        assert_eq!(gt_from_tableau(&SkewTableau::empty(3)).unwrap(), gt(&[&[0], &[0, 0], &[0, 0, 0]]));
        let b = highest_tableau(&[3, 1, 0], 3);
        assert_eq!(b.weight(), vec![3, 1, 0]);
        assert_eq!(gt_from_tableau(&b).unwrap(), gt(&[&[3], &[3, 1], &[3, 1, 0]]));
        assert!(tableau_from_gt(&gt(&[&[0], &[0, -1]])).is_err());
    }

    #[test]
    fn weight_of_small_tableau() {
        assert_eq!(tab(3, &[&[1, 3], &[2]]).weight(), vec![1, 1, 1]);
    }

    #[test]
    fn crystal_operators_on_example() {
        let t = tab(2, &[&[1, 1, 1, 2, 2], &[2, 2]]);
        assert_eq!(t.h_profile(1), vec![1, 1, 1, 2, 1, 0]);
        assert_eq!(t.k_profile(1), vec![0, 0, 0, 1, 0, -1]);
        assert_eq!(t.epsilon(1), 2);
        assert_eq!(t.phi(1), 1);
        assert_eq!(t.raise(1).unwrap(), tab(2, &[&[1, 1, 1, 1, 2], &[2, 2]]));
        assert_eq!(t.lower(1).unwrap(), tab(2, &[&[1, 1, 2, 2, 2], &[2, 2]]));
    }

    /// ε and φ by counting how often the operator applies.
    fn count(t: &SkewTableau, i: usize, up: bool) -> usize {
        let mut c = 0;
        let mut cur = t.clone();
        while let Some(next) = if up { cur.raise(i) } else { cur.lower(i) } {
            cur = next;
            c += 1;
        }
        c
    }

    fn partitions(n: usize, max_size: usize) -> Vec<Shape> {
        fn go(n: usize, left: usize, cap: usize, cur: &mut Shape, out: &mut Vec<Shape>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for p in (0..=cap.min(left)).rev() {
                cur.push(p);
                go(n, left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_size, max_size, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn crystal_axioms_exhaustive_rank3() {
        for lambda in partitions(3, 6) {
            for t in all_tableaux(&lambda, 3) {
                let w = t.weight();
                for i in 1..3 {
                    let (e, f) = (t.epsilon(i), t.phi(i));
                    assert_eq!(f as i64 - e as i64, w[i - 1] - w[i]);
                    assert_eq!(e, count(&t, i, true));
                    assert_eq!(f, count(&t, i, false));
                    if let Some(r) = t.raise(i) {
                        let rw = r.weight();
                        assert_eq!(rw[i - 1], w[i - 1] + 1);
                        assert_eq!(rw[i], w[i] - 1);
                        assert_eq!(r.lower(i).unwrap(), t);
                        assert_eq!(r.shape(), t.shape());
                    }
                    if let Some(l) = t.lower(i) {
                        assert_eq!(l.raise(i).unwrap(), t);
                    }
                }
            }
        }
        for i in 1..3 {
            assert!(highest_tableau(&[2, 1, 0], 3).raise(i).is_none());
        }
    }

    #[test]
    fn highest_and_lowest_tableaux() {
        let c = lowest_tableau(&[2, 1, 0], 3);
        assert_eq!(c, tab(3, &[&[2, 3], &[3]]));
        for i in 1..3 {
            assert!(c.lower(i).is_none());
        }
        assert_eq!(lowest_tableau(&[3, 1], 3), tab(3, &[&[2, 3, 3], &[3]]));
    }

    #[test]
    fn enumeration_counts() {
        // dim V_(2,1,0) = 8 and dim V_(2,0) for gl_2 = 3.
        assert_eq!(all_tableaux(&[2, 1, 0], 3).len(), 8);
        assert_eq!(all_tableaux(&[2, 0], 2).len(), 3);
        assert_eq!(all_tableaux(&[1, 1, 1, 1], 3).len(), 0);
    }

    #[test]
    fn star_example_and_identity() {
        let t = tab(3, &[&[1, 3], &[2]]);
        let u = tab(3, &[&[1, 2], &[2], &[3]]);
        let s = star(&t, &u).unwrap();
        assert_eq!(s.inner(), &[2, 2, 2, 0, 0]);
        assert_eq!(s.outer(), vec![4, 3, 3, 2, 1]);
        assert_eq!(s.rows(), &[vec![1, 2], vec![2], vec![3], vec![1, 3], vec![2]]);
        assert_eq!(star(&t, &SkewTableau::empty(3)).unwrap(), t);
        let w: Vec<i64> = t.weight().iter().zip(u.weight()).map(|(a, b)| a + b).collect();
        assert_eq!(s.weight(), w);
    }

    #[test]
    fn jdt_examples() {
        let s = SkewTableau::new(2, vec![2], vec![vec![1], vec![1, 2]]).unwrap();
        let (j, trace) = jdt_rectify(&s);
        assert_eq!(j, tab(2, &[&[1, 1], &[2]]));
        assert_eq!(trace.len(), 3);
        assert_eq!(trace[0], (vec![3, 2], vec![2]));
        assert_eq!(trace[2], (vec![2, 1], vec![]));

        let t = tab(3, &[&[1, 3], &[2]]);
        let (j, trace) = jdt_rectify(&t);
        assert_eq!(j, t);
        assert_eq!(trace.len(), 1);

        let u = tab(3, &[&[1, 2], &[2], &[3]]);
        let (j, _) = jdt_rectify(&star(&t, &u).unwrap());
        assert_eq!(j, tab(3, &[&[1, 1, 2], &[2, 2, 3], &[3]]));
    }

    #[test]
    fn row_insertion_stages() {
        let t = tab(3, &[&[1, 3], &[2]]);
        let u = tab(3, &[&[1, 2], &[2], &[3]]);
        assert_eq!(row_insert(&t, 3).unwrap(), tab(3, &[&[1, 3, 3], &[2]]));
        assert_eq!(row_insert(&tab(3, &[&[1, 3, 3], &[2]]), 2).unwrap(), tab(3, &[&[1, 2, 3], &[2, 3]]));
        assert_eq!(row_insert(&SkewTableau::empty(3), 2).unwrap(), tab(3, &[&[2]]));
        let stages = jdt_stages(&t, &u).unwrap();
        assert_eq!(
            stages,
            vec![
                t.clone(),
                tab(3, &[&[1, 3, 3], &[2]]),
                tab(3, &[&[1, 2, 3], &[2, 3]]),
                tab(3, &[&[1, 1, 2], &[2, 2, 3], &[3]]),
            ]
        );
        let shapes: Vec<Shape> = stages.iter().map(SkewTableau::shape).collect();
        assert_eq!(shapes, vec![vec![2, 1, 0], vec![3, 1, 0], vec![3, 2, 0], vec![3, 3, 1]]);
        assert_eq!(jdt_stages(&t, &SkewTableau::empty(3)).unwrap(), vec![t.clone(); 4]);
        assert_eq!(row_insert(&tab(1, &[&[1]]), 1).unwrap(), tab(1, &[&[1, 1]]));
    }

    #[test]
    fn invalid_fillings_are_rejected() {
        assert!(SkewTableau::straight(2, vec![vec![2], vec![2]]).is_err());
        assert!(SkewTableau::straight(2, vec![vec![2, 1]]).is_err());
        assert!(row_insert(&tab(2, &[&[1], &[2]]), 3).is_err());
    }

    #[test]
    fn recording_tableau_examples() {
        let t = tab(3, &[&[1, 3], &[2]]);
        let u = tab(3, &[&[1, 2], &[2], &[3]]);
        assert_eq!(recording_tableau(&t, &u).unwrap(), gt(&[&[1], &[2, 1], &[2, 1, 0]]));
        // With nothing inserted every stage has shape λ, so R is the pattern of b_λ.
        assert_eq!(
            recording_tableau(&t, &SkewTableau::empty(3)).unwrap(),
            gt_from_tableau(&highest_tableau(&[2, 1, 0], 3)).unwrap()
        );
    }

    /// Row insertion tracked through partial-sum arrays instead of bumping.
    fn lambda_arrays(t: &SkewTableau) -> Vec<Vec<i64>> {
        let n = t.n();
        (0..=n)
            .map(|i| {
                (1..=n + 1)
                    .map(|j| {
                        t.rows()
                            .iter()
                            .skip(j - 1)
                            .map(|row| row.iter().filter(|&&a| a <= i).count() as i64)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn row_insertion_matches_partial_sum_recurrence() {
        let n = 3;
        for lambda in partitions(n, 4) {
            for t in all_tableaux(&lambda, n) {
                for len in 0..=3usize {
                    let mut seqs = vec![vec![]];
                    for _ in 0..len {
                        seqs = seqs
                            .into_iter()
                            .flat_map(|s: Vec<usize>| {
                                let lo = s.last().copied().unwrap_or(1);
                                (lo..=n).map(move |a| {
                                    let mut s2 = s.clone();
                                    s2.push(a);
                                    s2
                                })
                            })
                            .collect();
                    }
                    for seq in seqs {
                        let mut t2 = t.clone();
                        for &a in &seq {
                            t2 = row_insert(&t2, a).unwrap();
                        }
                        let l = lambda_arrays(&t);
                        let l2 = lambda_arrays(&t2);
                        for i in 1..=n {
                            let alpha: i64 = seq.iter().filter(|&&a| a <= i).count() as i64;
                            assert_eq!(l2[i][0], l[i][0] + alpha);
                            for j in 1..=n {
                                let rhs = (l[i][j - 1] + l2[i - 1][j]).min(l[i][j] + l2[i - 1][j - 1]) - l[i - 1][j - 1];
                                assert_eq!(l2[i][j], rhs, "{:?} <- {:?}", t, seq);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bender_knuth_example_chain() {
        let g = gt(&[&[1], &[3, 1], &[4, 2, 0]]);
        let g1 = bender_knuth(&g, 1).unwrap();
        assert_eq!(g1, gt(&[&[3], &[3, 1], &[4, 2, 0]]));
        let g2 = bender_knuth(&g1, 2).unwrap();
        assert_eq!(g2, gt(&[&[3], &[4, 1], &[4, 2, 0]]));
        let g3 = bender_knuth(&g2, 1).unwrap();
        assert_eq!(g3, gt(&[&[2], &[4, 1], &[4, 2, 0]]));
        assert_eq!(schutzenberger(&g), g3);
        assert!(bender_knuth(&g, 3).is_err());
        assert!(bender_knuth(&g, 0).is_err());
    }

    #[test]
    fn schutzenberger_sends_highest_to_lowest_and_is_involutive() {
        for lambda in partitions(3, 6) {
            let b = gt_from_tableau(&highest_tableau(&lambda, 3)).unwrap();
            assert_eq!(tableau_from_gt(&schutzenberger(&b)).unwrap(), lowest_tableau(&lambda, 3));
            for t in all_tableaux(&lambda, 3) {
                let g = gt_from_tableau(&t).unwrap();
                let x = schutzenberger(&g);
                assert_eq!(schutzenberger(&x), g);
                let mut rev = g.weight();
                rev.reverse();
                assert_eq!(x.weight(), rev);
            }
        }
    }

    #[test]
    fn text_formats_round_trip() {
        let s = star(&tab(3, &[&[1, 3], &[2]]), &tab(3, &[&[1, 2], &[2], &[3]])).unwrap();
        let text = s.to_string();
        assert_eq!(text, "n: 3\ninner: 2 2 2\n1 2\n2\n3\n1 3\n2\n");
        assert_eq!(text.parse::<SkewTableau>().unwrap(), s);
        assert_eq!("1 1\n2".parse::<SkewTableau>().unwrap(), tab(2, &[&[1, 1], &[2]]));
        let g = gt(&[&[2], &[4, 1], &[4, 3, 0], &[4, 3, 1, 0]]);
        assert_eq!(g.to_string().parse::<GtPattern>().unwrap(), g);
        assert!("1\n0 2".parse::<GtPattern>().is_err());
        assert!("2 1\n1".parse::<SkewTableau>().is_err());
    }

    fn arb_gt(n: usize, max: i64) -> impl Strategy<Value = GtPattern> {
        proptest::collection::vec(0..=max, n).prop_flat_map(move |mut base| {
            base.sort_unstable_by(|a, b| b.cmp(a));
            let all = GtPattern::enumerate(&base);
            (0..all.len()).prop_map(move |k| all[k].clone())
        })
    }

    proptest! {
        #[test]
        fn bender_knuth_is_an_involution(g in arb_gt(4, 4), i in 1usize..4) {
            let once = bender_knuth(&g, i).unwrap();
            prop_assert_eq!(bender_knuth(&once, i).unwrap(), g.clone());
            for (k, row) in once.rows().iter().enumerate() {
                if k + 1 != i {
                    prop_assert_eq!(row, &g.rows()[k]);
                }
            }
        }

        #[test]
        fn gt_tableau_round_trip(g in arb_gt(4, 3)) {
            let t = tableau_from_gt(&g).unwrap();
            prop_assert_eq!(gt_from_tableau(&t).unwrap(), g.clone());
            prop_assert_eq!(t.weight(), g.weight());
        }

        #[test]
        fn star_weight_is_additive(a in arb_gt(3, 3), b in arb_gt(3, 3)) {
            let t = tableau_from_gt(&a).unwrap();
            let u = tableau_from_gt(&b).unwrap();
            let s = star(&t, &u).unwrap();
            let w: Vec<i64> = t.weight().iter().zip(u.weight()).map(|(x, y)| x + y).collect();
            prop_assert_eq!(s.weight(), w);
            let (j, _) = jdt_rectify(&s);
            prop_assert_eq!(j, jdt_stages(&t, &u).unwrap().last().unwrap().clone());
        }
    }
}
