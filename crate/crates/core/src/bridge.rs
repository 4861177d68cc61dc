//! Hives as GT patterns, and the associator and commutor on hives computed by
//! running the octahedron recurrence through a tetrahedron or a quarter octahedron.

use crate::error::{Error, Result};
use crate::hive::{check_hive, normalize, triangle_points, Hive, QuasiHive, TriangleArray, TrianglePoint};
use crate::spacetime::{
    check_section_hive_condition, evolve, evolve_backward, quarter_octahedron, read_section_raw, render_slices,
    step_value, tetrahedron, EmbeddingRole, LatticePoint, SectionEmbedding, SpacetimeState,
};
use crate::tableau::GtPattern;

/// `P̂(i,j) = P(i-j, j, n-i) - P(i-j+1, j-1, n-i)`: differences along each row.
pub fn hat(p: &TriangleArray) -> Result<GtPattern> {
    GtPattern::new(hat_rows(p))
}

/// The row differences without checking interlacing.
pub fn hat_rows(p: &TriangleArray) -> Vec<Vec<i64>> {
    let n = p.n();
    (1..=n)
        .map(|i| {
            (1..=i)
                .map(|j| p.at(i - j, j, n - i) - p.at(i - j + 1, j - 1, n - i))
                .collect()
        })
        .collect()
}

/// `P̃(i,j) = P(j, n-i, i-j) - P(j-1, n-i, i-j+1)`: the same construction read
/// from the upper-right edge.
pub fn tilde(p: &TriangleArray) -> Result<GtPattern> {
    let n = p.n();
    GtPattern::new(
        (1..=n)
            .map(|i| {
                (1..=i)
                    .map(|j| p.at(j, n - i, i - j) - p.at(j - 1, n - i, i - j + 1))
                    .collect()
            })
            .collect(),
    )
}

/// The hive with upper-left edge `μ` whose row differences are `t`. Rejects
/// patterns that do not give a hive, i.e. patterns that are not `μ`-dominant.
pub fn unhat(t: &GtPattern, mu: &[i64]) -> Result<Hive> {
    let n = t.n();
    if mu.len() != n {
        return Err(Error::Malformed(format!("pattern has {} rows but μ has {} parts", n, mu.len())));
    }
    let mut p = TriangleArray::zeros(n);
    let mut left = 0;
    for i in 0..=n {
        if i > 0 {
            left += mu[i - 1];
        }
        p.set(TrianglePoint::new(i, 0, n - i), left);
        for j in 1..=i {
            let v = p.at(i - j + 1, j - 1, n - i) + t.get(i, j);
            p.set(TrianglePoint::new(i - j, j, n - i), v);
        }
    }
    if !check_hive(&p) {
        let parts: Vec<String> = mu.iter().map(|m| m.to_string()).collect();
        return Err(Error::NotDominant(parts.join(",")));
    }
    Hive::new(p)
}

fn embedding(n: usize, role: EmbeddingRole, f: impl Fn(i64, i64, i64) -> (i64, i64, i64)) -> SectionEmbedding {
    SectionEmbedding::new(n, role, |p| {
        let (x, y, t) = f(p.x as i64, p.y as i64, p.z as i64);
        LatticePoint::new(x, y, t)
    })
    .expect("fixed embeddings land on the lattice")
}

/// The outer hive `M` on the seed section: `(x,y,z) ↦ (x, n-z, y)`.
pub fn outer_input(n: usize) -> SectionEmbedding {
    let m = n as i64;
    embedding(n, EmbeddingRole::Input, |x, y, z| (x, m - z, y))
}

/// The inner hive `N` on the seed section: `(x,y,z) ↦ (n-z, y, x)`.
pub fn inner_input(n: usize) -> SectionEmbedding {
    let m = n as i64;
    embedding(n, EmbeddingRole::Input, |x, y, z| (m - z, y, x))
}

/// `P` on the top of the tetrahedron: `(x,y,z) ↦ (n-y, n-z, n-x)`.
pub fn first_output(n: usize) -> SectionEmbedding {
    let m = n as i64;
    embedding(n, EmbeddingRole::Output, |x, y, z| (m - y, m - z, m - x))
}

/// `Q` on the top of the tetrahedron: `(x,y,z) ↦ (x, y, n-z)`.
pub fn second_output(n: usize) -> SectionEmbedding {
    let m = n as i64;
    embedding(n, EmbeddingRole::Output, |x, y, z| (x, y, m - z))
}

/// `r^k`: `(x, n-z, y)` for `x <= k` and `(x, y+k, n-k-z)` for `x >= k`.
pub fn stage_embedding(n: usize, k: usize) -> SectionEmbedding {
    let (m, k) = (n as i64, k as i64);
    for p in triangle_points(n) {
        if p.x as i64 == k {
            let (x, y, z) = (p.x as i64, p.y as i64, p.z as i64);
            debug_assert_eq!((x, m - z, y), (x, y + k, m - k - z), "stage branches disagree at x = k");
        }
    }
    embedding(n, EmbeddingRole::Stage, move |x, y, z| {
        if x <= k {
            (x, m - z, y)
        } else {
            (x, y + k, m - k - z)
        }
    })
}

/// The associator state: two hives seeded on the bottom of the tetrahedron and
/// evolved to its top. Values are kept as seeded, so printed outputs carry the
/// absolute values of the inputs.
#[derive(Debug, Clone)]
pub struct AssociatorRun {
    n: usize,
    state: SpacetimeState,
}

fn shared_edge_error(what: &str, k: usize, a: i64, b: i64) -> Error {
    Error::EdgeMismatch(format!("{} differ at position {}: {} vs {}", what, k, a, b))
}

impl AssociatorRun {
    /// Seeds `M ∈ HIVE_{λδ}^ρ` and `N ∈ HIVE_{μν}^δ` and evolves forward. `N` is
    /// shifted by a constant so the shared `δ` edge agrees in absolute value.
    pub fn forward(m: &TriangleArray, n_hive: &TriangleArray) -> Result<AssociatorRun> {
        let n = m.n();
        if n_hive.n() != n {
            return Err(Error::Malformed("hives of different size".into()));
        }
        for (name, h) in [("M", m), ("N", n_hive)] {
            if !check_hive(h) {
                return Err(Error::NotHive(format!("{} fails a rhombus inequality", name)));
            }
        }
        let inner = n_hive.shifted(m.top() - n_hive.top());
        for k in 0..=n {
            let (a, b) = (m.at(k, 0, n - k), inner.at(0, k, n - k));
            if a != b {
                return Err(shared_edge_error("upper-left edge of M and upper-right edge of N", k, a, b));
            }
        }
        let mut state = SpacetimeState::new(n);
        state.seed(&outer_input(n), m)?;
        state.seed(&inner_input(n), &inner)?;
        let state = evolve(&state, &tetrahedron(n))?;
        Ok(AssociatorRun { n, state })
    }

    /// Seeds `P ∈ HIVE_{λμ}^γ` and `Q ∈ HIVE_{γν}^ρ` on the top and evolves backward.
    pub fn backward(p: &TriangleArray, q: &TriangleArray) -> Result<AssociatorRun> {
        let n = p.n();
        if q.n() != n {
            return Err(Error::Malformed("hives of different size".into()));
        }
        for (name, h) in [("P", p), ("Q", q)] {
            if !check_hive(h) {
                return Err(Error::NotHive(format!("{} fails a rhombus inequality", name)));
            }
        }
        let second = q.shifted(p.top() - q.at(n, 0, 0));
        for k in 0..=n {
            let (a, b) = (p.at(0, k, n - k), second.at(n - k, k, 0));
            if a != b {
                return Err(shared_edge_error("upper-right edge of P and bottom edge of Q", k, a, b));
            }
        }
        let mut state = SpacetimeState::new(n);
        state.seed(&first_output(n), p)?;
        state.seed(&second_output(n), &second)?;
        let state = evolve_backward(&state, &tetrahedron(n))?;
        Ok(AssociatorRun { n, state })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn state(&self) -> &SpacetimeState {
        &self.state
    }

    fn read(&self, e: &SectionEmbedding) -> TriangleArray {
        read_section_raw(&self.state, e).expect("the tetrahedron is fully labelled")
    }

    pub fn outer_raw(&self) -> TriangleArray {
        self.read(&outer_input(self.n))
    }

    pub fn inner_raw(&self) -> TriangleArray {
        self.read(&inner_input(self.n))
    }

    pub fn p_raw(&self) -> TriangleArray {
        self.read(&first_output(self.n))
    }

    pub fn q_raw(&self) -> TriangleArray {
        self.read(&second_output(self.n))
    }

    /// `[Q^n, …, Q^0]`, read through the stage embeddings.
    pub fn stages_raw(&self) -> Vec<TriangleArray> {
        (0..=self.n).rev().map(|k| self.read(&stage_embedding(self.n, k))).collect()
    }

    /// Every section read from this state, with a label.
    pub fn sections(&self) -> Vec<(String, SectionEmbedding)> {
        let n = self.n;
        let mut out = vec![
            ("M".to_string(), outer_input(n)),
            ("N".to_string(), inner_input(n)),
            ("P".to_string(), first_output(n)),
            ("Q".to_string(), second_output(n)),
        ];
        out.extend((0..=n).map(|k| (format!("Q^{}", k), stage_embedding(n, k))));
        out
    }

    /// Labels of sections whose flat rhombi fail the hive condition.
    pub fn section_failures(&self) -> Vec<String> {
        self.sections()
            .into_iter()
            .filter(|(_, e)| !check_section_hive_condition(&self.state, e).unwrap_or(false))
            .map(|(l, _)| l)
            .collect()
    }

    pub fn slices(&self) -> String {
        render_slices(&self.state, &tetrahedron(self.n)).expect("the tetrahedron is fully labelled")
    }
}

/// `(M, N) ↦ (P, Q)`, normalized.
pub fn associate(m: &Hive, n: &Hive) -> Result<(Hive, Hive)> {
    let run = AssociatorRun::forward(m.array(), n.array())?;
    Ok((Hive::new(run.p_raw())?, Hive::new(run.q_raw())?))
}

/// `(P, Q) ↦ (M, N)`, normalized.
pub fn associate_inverse(p: &Hive, q: &Hive) -> Result<(Hive, Hive)> {
    let run = AssociatorRun::backward(p.array(), q.array())?;
    Ok((Hive::new(run.outer_raw())?, Hive::new(run.inner_raw())?))
}

/// The quasi-hives `Q^n, …, Q^0` interpolating between `M` and `Q`.
pub fn assoc_stages(m: &Hive, n: &Hive) -> Result<Vec<QuasiHive>> {
    let run = AssociatorRun::forward(m.array(), n.array())?;
    run.stages_raw().into_iter().map(QuasiHive::new).collect()
}

/// A standard embedding `(x,y,z) ↦ (x, y, h(z))` with `h(0) = n` and unit steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardEmbedding {
    h: Vec<i64>,
}

impl StandardEmbedding {
    pub fn new(h: Vec<i64>) -> Result<Self> {
        let n = h.len().checked_sub(1).ok_or_else(|| Error::Malformed("empty height function".into()))?;
        if h[0] != n as i64 || h.windows(2).any(|w| (w[0] - w[1]).abs() != 1) {
            return Err(Error::Malformed(format!("{:?} is not a standard height function", h)));
        }
        Ok(StandardEmbedding { h })
    }

    /// `h(z) = n - z`, the bottom face of the quarter octahedron.
    pub fn bottom(n: usize) -> Self {
        StandardEmbedding {
            h: (0..=n).map(|z| (n - z) as i64).collect(),
        }
    }

    /// `h(z) = n + z`, the top face.
    pub fn top(n: usize) -> Self {
        StandardEmbedding {
            h: (0..=n).map(|z| (n + z) as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.h.len() - 1
    }

    pub fn heights(&self) -> &[i64] {
        &self.h
    }

    pub fn embedding(&self) -> SectionEmbedding {
        let h = self.h.clone();
        embedding(self.n(), EmbeddingRole::Stage, move |x, y, z| (x, y, h[z as usize]))
    }

    pub fn is_flippable(&self, i: usize) -> bool {
        let n = self.n();
        if i == 0 {
            return n >= 1 && self.h[n - 1] == self.h[n] + 1;
        }
        if i >= n {
            return false;
        }
        let z = n - i;
        self.h[z + 1] == self.h[z] + 1 && self.h[z - 1] == self.h[z] + 1
    }

    /// `τ_i`: the layer `z = n - i` moves up by two.
    pub fn flipped(&self, i: usize) -> Result<StandardEmbedding> {
        if !self.is_flippable(i) {
            return Err(Error::NotFlippable(i));
        }
        let mut h = self.h.clone();
        h[self.n() - i] += 2;
        Ok(StandardEmbedding { h })
    }
}

/// The indices `0, 1, …, n-1, 0, …, n-2, …, 0` taking the bottom face to the top.
pub fn flip_sequence(n: usize) -> Vec<usize> {
    (1..=n).rev().flat_map(|top| 0..top).collect()
}

/// `t_i`: with `mq` placed on the image of `r`, apply one octahedron step at
/// every point of the layer `z = n - i` and read the new layer.
pub fn flip(mq: &TriangleArray, r: &StandardEmbedding, i: usize) -> Result<(TriangleArray, StandardEmbedding)> {
    let n = r.n();
    if mq.n() != n {
        return Err(Error::Malformed("quasi-hive and embedding sizes differ".into()));
    }
    let next = r.flipped(i)?;
    let mut state = SpacetimeState::new(n);
    state.seed(&r.embedding(), mq)?;
    let z = n - i;
    let mut out = mq.clone();
    for p in triangle_points(n).filter(|p| p.z == z) {
        let lp = LatticePoint::new(p.x as i64, p.y as i64, next.h[z]);
        out.set(p, step_value(&state, lp)?);
    }
    Ok((out, next))
}

/// The commutor state: a hive on the bottom face of the quarter octahedron,
/// evolved to its top.
#[derive(Debug, Clone)]
pub struct CommutorRun {
    n: usize,
    state: SpacetimeState,
}

/// `(x,y,z) ↦ (z, x, n-y)` onto the bottom face.
pub fn commutor_input(n: usize) -> SectionEmbedding {
    let m = n as i64;
    embedding(n, EmbeddingRole::Input, |x, y, z| (z, x, m - y))
}

/// `(x,y,z) ↦ (x, y, n+z)` from the top face.
pub fn commutor_output(n: usize) -> SectionEmbedding {
    let m = n as i64;
    embedding(n, EmbeddingRole::Output, |x, y, z| (x, y, m + z))
}

impl CommutorRun {
    pub fn new(p: &TriangleArray) -> Result<CommutorRun> {
        if !check_hive(p) {
            return Err(Error::NotHive("input fails a rhombus inequality".into()));
        }
        let n = p.n();
        let mut state = SpacetimeState::new(n);
        state.seed(&commutor_input(n), p)?;
        let state = evolve(&state, &quarter_octahedron(n))?;
        Ok(CommutorRun { n, state })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn state(&self) -> &SpacetimeState {
        &self.state
    }

    pub fn star_raw(&self) -> TriangleArray {
        read_section_raw(&self.state, &commutor_output(self.n)).expect("the region is fully labelled")
    }

    /// The standard embeddings visited by the flip sequence, bottom to top.
    pub fn embeddings(&self) -> Vec<StandardEmbedding> {
        let mut r = StandardEmbedding::bottom(self.n);
        let mut out = vec![r.clone()];
        for i in flip_sequence(self.n) {
            r = r.flipped(i).expect("the flip sequence is always flippable");
            out.push(r.clone());
        }
        out
    }

    /// The quasi-hives read through each standard embedding, from the rotated
    /// input to `P★`.
    pub fn stages_raw(&self) -> Vec<TriangleArray> {
        self.embeddings()
            .iter()
            .map(|r| read_section_raw(&self.state, &r.embedding()).expect("standard sections lie in the region"))
            .collect()
    }

    pub fn sections(&self) -> Vec<(String, SectionEmbedding)> {
        let mut out = vec![
            ("P".to_string(), commutor_input(self.n)),
            ("P*".to_string(), commutor_output(self.n)),
        ];
        out.extend(
            self.embeddings()
                .into_iter()
                .map(|r| (format!("h={:?}", r.heights()), r.embedding())),
        );
        out
    }

    pub fn section_failures(&self) -> Vec<String> {
        self.sections()
            .into_iter()
            .filter(|(_, e)| !check_section_hive_condition(&self.state, e).unwrap_or(false))
            .map(|(l, _)| l)
            .collect()
    }

    pub fn slices(&self) -> String {
        render_slices(&self.state, &quarter_octahedron(self.n)).expect("the region is fully labelled")
    }

    /// Checks `f(u,v) = f(u,0) + f(0,v) - f(0,0)` on the two boundary faces
    /// `y = 0` and `x = 0`, unfolded into one square.
    pub fn boundary_is_additive(&self) -> bool {
        let n = self.n as i64;
        let unfolded = |u: i64, v: i64| -> i64 {
            // u >= v lies on the face y = 0, u <= v on x = 0.
            let p = if u >= v {
                LatticePoint::new(u - v, 0, u + v)
            } else {
                LatticePoint::new(0, v - u, u + v)
            };
            self.state.get(p).expect("boundary point in region")
        };
        (0..=n).all(|u| (0..=n).all(|v| unfolded(u, v) == unfolded(u, 0) + unfolded(0, v) - unfolded(0, 0)))
    }
}

/// `P ↦ P★`, normalized.
pub fn commute(p: &Hive) -> Result<Hive> {
    Hive::new(CommutorRun::new(p.array())?.star_raw())
}

/// `P★` keeping the input's absolute values.
pub fn commute_raw(p: &TriangleArray) -> Result<TriangleArray> {
    Ok(CommutorRun::new(p)?.star_raw())
}

/// Normalized equality of two arrays.
pub fn same_hive(a: &TriangleArray, b: &TriangleArray) -> bool {
    normalize(a) == normalize(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::{boundary, enumerate_hives, DominantWeight};
    use crate::tableau::{bender_knuth, gt_from_tableau, jdt_stages, schutzenberger, tableau_from_gt};

    fn arr(rows: &[&[i64]]) -> TriangleArray {
        TriangleArray::from_rows(rows).unwrap()
    }

    fn m() -> TriangleArray {
        arr(&[&[0], &[2, 3], &[4, 5, 6], &[5, 7, 8, 8]])
    }

    fn n() -> TriangleArray {
        arr(&[&[0], &[1, 2], &[1, 3, 4], &[1, 3, 4, 5]])
    }

    fn p_com() -> TriangleArray {
        arr(&[&[0], &[4, 4], &[6, 7, 7], &[6, 8, 8, 8]])
    }

    fn gt(rows: &[&[i64]]) -> GtPattern {
        GtPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hat_and_tilde_examples() {
        assert_eq!(hat(&m()).unwrap(), gt(&[&[1], &[1, 1], &[2, 1, 0]]));
        assert_eq!(hat(&n()).unwrap(), gt(&[&[1], &[2, 1], &[2, 1, 1]]));
        assert_eq!(hat(&TriangleArray::zeros(3)).unwrap(), gt(&[&[0], &[0, 0], &[0, 0, 0]]));
        assert_eq!(tilde(&p_com()).unwrap(), gt(&[&[1], &[3, 1], &[4, 2, 0]]));
        assert_eq!(tilde(&TriangleArray::zeros(2)).unwrap(), gt(&[&[0], &[0, 0]]));
    }

    #[test]
    fn tilde_base_is_mu() {
        for h in enumerate_hives(&w(&[2, 1, 0]), &w(&[2, 1, 1]), &w(&[3, 3, 1])) {
            let (_, mu, _) = boundary(h.array()).unwrap();
            assert_eq!(tilde(h.array()).unwrap().base(), mu.parts());
        }
    }

    #[test]
    fn unhat_examples() {
        let mh = hat(&m()).unwrap();
        assert_eq!(unhat(&mh, &[2, 2, 1]).unwrap().array(), &m());
        // b_λ gives the hive of HIVE_{λμ}^{λ+μ}.
        let b = gt(&[&[2], &[2, 1], &[2, 1, 0]]);
        let h = unhat(&b, &[1, 1, 0]).unwrap();
        assert_eq!(h.boundary(), (w(&[2, 1, 0]), w(&[1, 1, 0]), w(&[3, 2, 0])));
        assert_eq!(enumerate_hives(&w(&[2, 1, 0]), &w(&[1, 1, 0]), &w(&[3, 2, 0])), vec![h]);
        // A pattern that is not (1,1,1)-dominant.
        assert!(matches!(unhat(&gt(&[&[0], &[1, 0], &[1, 0, 0]]), &[1, 1, 1]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn associator_example() {
        let run = AssociatorRun::forward(&m(), &n()).unwrap();
        assert_eq!(run.p_raw(), arr(&[&[1], &[3, 4], &[4, 6, 7], &[5, 7, 8, 8]]));
        assert_eq!(run.q_raw(), arr(&[&[0], &[1, 3], &[1, 4, 6], &[1, 4, 7, 8]]));
        let (p, q) = associate(&Hive::new(m()).unwrap(), &Hive::new(n()).unwrap()).unwrap();
        assert_eq!(p.rows(), vec![vec![0], vec![2, 3], vec![3, 5, 6], vec![4, 6, 7, 7]]);
        assert_eq!(q.array(), &run.q_raw());
        assert!(run.section_failures().is_empty());
    }

    #[test]
    fn associator_slices() {
        let run = AssociatorRun::forward(&m(), &n()).unwrap();
        let expected = "\
t=0
. . . 5
. . 4 .
. 2 . .
0 . . .

t=1
. . 7 .
. 5 . 4
3 . 3 .
. 1 . .

t=2
. 8 . .
6 . 6 .
. 4 . 3
. . 1 .

t=3
8 . . .
. 7 . .
. . 4 .
. . . 1
";
        assert_eq!(run.slices(), expected);
    }

    #[test]
    fn associator_inverse_recovers_inputs() {
        let p = arr(&[&[1], &[3, 4], &[4, 6, 7], &[5, 7, 8, 8]]);
        let q = arr(&[&[0], &[1, 3], &[1, 4, 6], &[1, 4, 7, 8]]);
        let back = AssociatorRun::backward(&p, &q).unwrap();
        assert_eq!(back.outer_raw(), m());
        assert_eq!(back.inner_raw(), n());
        let (mm, nn) = associate_inverse(&Hive::new(p).unwrap(), &Hive::new(q).unwrap()).unwrap();
        assert_eq!((mm.array(), nn.array()), (&m(), &n()));
    }

    #[test]
    fn associator_rejects_mismatched_edges() {
        let other = arr(&[&[0], &[1, 1], &[1, 2, 2], &[1, 2, 3, 3]]);
        assert!(matches!(AssociatorRun::forward(&m(), &other), Err(Error::EdgeMismatch(_))));
        let bad = arr(&[&[0], &[1, 1], &[1, 3, 1], &[0, 0, 0, 0]]);
        assert!(matches!(AssociatorRun::forward(&m(), &bad), Err(Error::NotHive(_))));
    }

    #[test]
    fn associator_on_small_sides() {
        let one = arr(&[&[0], &[2, 3]]);
        let inner = arr(&[&[0], &[1, 2]]);
        let run = AssociatorRun::forward(&one, &inner).unwrap();
        assert!(check_hive(&run.p_raw()) && check_hive(&run.q_raw()));
        let zero = arr(&[&[4]]);
        let run = AssociatorRun::forward(&zero, &zero).unwrap();
        assert_eq!(run.p_raw(), zero);
    }

    #[test]
    fn associator_stages_example() {
        let run = AssociatorRun::forward(&m(), &n()).unwrap();
        let stages = run.stages_raw();
        assert_eq!(
            stages,
            vec![
                m(),
                arr(&[&[0], &[2, 3], &[4, 5, 6], &[4, 7, 8, 8]]),
                arr(&[&[0], &[2, 3], &[3, 5, 6], &[3, 6, 8, 8]]),
                run.q_raw(),
            ]
        );
        let t = tableau_from_gt(&hat(&m()).unwrap()).unwrap();
        let u = tableau_from_gt(&hat(&n()).unwrap()).unwrap();
        let js = jdt_stages(&t, &u).unwrap();
        for (q, j) in stages.iter().zip(&js) {
            assert_eq!(hat(q).unwrap(), gt_from_tableau(j).unwrap());
            assert!(crate::hive::check_quasi_hive(q));
        }
    }

    #[test]
    fn commutor_example() {
        let run = CommutorRun::new(&p_com()).unwrap();
        assert_eq!(run.star_raw(), arr(&[&[-2], &[0, 2], &[0, 4, 5], &[0, 4, 6, 6]]));
        assert!(run.section_failures().is_empty());
        assert!(run.boundary_is_additive());
        let expected = "\
t=0
 .  .  .  .
 .  .  .  .
 .  .  .  .
 8  .  .  .

t=1
 .  .  .  .
 .  .  .  .
 8  .  .  .
 .  7  .  .

t=2
 .  .  .  .
 8  .  .  .
 .  7  .  .
 7  .  4  .

t=3
 6  .  .  .
 .  6  .  .
 7  .  4  .
 .  4  .  0

t=4
 .  .  .  .
 5  .  .  .
 .  4  .  .
 4  .  0  .

t=5
 .  .  .  .
 .  .  .  .
 2  .  .  .
 .  0  .  .

t=6
 .  .  .  .
 .  .  .  .
 .  .  .  .
-2  .  .  .
";
        assert_eq!(run.slices(), expected);
    }

    #[test]
    fn commutor_flip_stages() {
        let run = CommutorRun::new(&p_com()).unwrap();
        let stages = run.stages_raw();
        let expected = vec![
            arr(&[&[8], &[7, 8], &[4, 7, 8], &[0, 4, 6, 6]]),
            arr(&[&[7], &[7, 8], &[4, 7, 8], &[0, 4, 6, 6]]),
            arr(&[&[7], &[4, 7], &[4, 7, 8], &[0, 4, 6, 6]]),
            arr(&[&[7], &[4, 7], &[0, 4, 5], &[0, 4, 6, 6]]),
            arr(&[&[4], &[4, 7], &[0, 4, 5], &[0, 4, 6, 6]]),
            arr(&[&[4], &[0, 2], &[0, 4, 5], &[0, 4, 6, 6]]),
            arr(&[&[-2], &[0, 2], &[0, 4, 5], &[0, 4, 6, 6]]),
        ];
        assert_eq!(stages, expected);
        assert_eq!(flip_sequence(3), vec![0, 1, 2, 0, 1, 0]);
        let embeddings = run.embeddings();
        for (k, i) in flip_sequence(3).into_iter().enumerate() {
            let (next, r) = flip(&stages[k], &embeddings[k], i).unwrap();
            assert_eq!(next, stages[k + 1]);
            assert_eq!(r, embeddings[k + 1]);
            let before = hat(&stages[k]).unwrap();
            let after = hat(&next).unwrap();
            if i == 0 {
                assert_eq!(after, before);
            } else {
                assert_eq!(after, bender_knuth(&before, i).unwrap());
            }
        }
        assert_eq!(embeddings.last().unwrap(), &StandardEmbedding::top(3));
        assert!(matches!(flip(&stages[0], &embeddings[0], 1), Err(Error::NotFlippable(1))));
    }

    #[test]
    fn double_flip_restores_the_quasi_hive() {
        let run = CommutorRun::new(&p_com()).unwrap();
        let stages = run.stages_raw();
        let embeddings = run.embeddings();
        for (k, i) in flip_sequence(3).into_iter().enumerate() {
            let (once, _) = flip(&stages[k], &embeddings[k], i).unwrap();
            let (twice, _) = flip(&once, &embeddings[k], i).unwrap();
            assert_eq!(twice, stages[k]);
        }
    }

    #[test]
    fn commutor_is_schutzenberger_of_tilde() {
        let p = Hive::new(p_com()).unwrap();
        let star = commute(&p).unwrap();
        assert_eq!(hat(star.array()).unwrap(), schutzenberger(&tilde(p.array()).unwrap()));
        assert_eq!(commute(&star).unwrap(), p);
        let (l, mu, nu) = p.boundary();
        assert_eq!(star.boundary(), (mu, l, nu));
        assert_eq!(commute(&Hive::new(TriangleArray::zeros(3)).unwrap()).unwrap().array(), &TriangleArray::zeros(3));
    }

    #[test]
    fn standard_embedding_validation() {
        assert!(StandardEmbedding::new(vec![3, 2, 2, 1]).is_err());
        assert!(StandardEmbedding::new(vec![2, 2, 1, 0]).is_err());
        let r = StandardEmbedding::bottom(3);
        assert!(r.is_flippable(0));
        assert!(!r.is_flippable(1) && !r.is_flippable(2) && !r.is_flippable(3));
        assert_eq!(r.flipped(0).unwrap().heights(), &[3, 2, 1, 2]);
    }
}
