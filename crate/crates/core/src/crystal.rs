//! gl_n crystals: the tableau crystals `B_λ`, tensor products of them, the
//! Schützenberger involution on any such crystal and the crystal commutor.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::tableau::{gt_from_tableau, schutzenberger, tableau_from_gt, SkewTableau};

/// The structure maps of a gl_n crystal. Indices run over `1..rank()`.
pub trait Crystal: Clone + Eq + Ord {
    fn rank(&self) -> usize;
    fn weight(&self) -> Vec<i64>;
    fn epsilon(&self, i: usize) -> usize;
    fn phi(&self, i: usize) -> usize;
    fn raise(&self, i: usize) -> Option<Self>;
    fn lower(&self, i: usize) -> Option<Self>;

    fn is_highest(&self) -> bool {
        (1..self.rank()).all(|i| self.epsilon(i) == 0)
    }

    fn is_lowest(&self) -> bool {
        (1..self.rank()).all(|i| self.phi(i) == 0)
    }
}

impl Crystal for SkewTableau {
    fn rank(&self) -> usize {
        self.n()
    }
    fn weight(&self) -> Vec<i64> {
        SkewTableau::weight(self)
    }
    fn epsilon(&self, i: usize) -> usize {
        SkewTableau::epsilon(self, i)
    }
    fn phi(&self, i: usize) -> usize {
        SkewTableau::phi(self, i)
    }
    fn raise(&self, i: usize) -> Option<Self> {
        SkewTableau::raise(self, i)
    }
    fn lower(&self, i: usize) -> Option<Self> {
        SkewTableau::lower(self, i)
    }
}

/// `t_1 ⊗ t_2 ⊗ ⋯ ⊗ t_m`, bracketed from the left. Bracketing is immaterial:
/// the crystal associator is the identity on underlying tuples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorElement {
    factors: Vec<SkewTableau>,
}

impl TensorElement {
    pub fn new(factors: Vec<SkewTableau>) -> Self {
        assert!(!factors.is_empty(), "a tensor element needs a factor");
        let n = factors[0].n();
        assert!(factors.iter().all(|f| f.n() == n), "factors of different rank");
        TensorElement { factors }
    }

    pub fn pair(a: SkewTableau, b: SkewTableau) -> Self {
        TensorElement::new(vec![a, b])
    }

    pub fn factors(&self) -> &[SkewTableau] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<SkewTableau> {
        self.factors
    }

    /// Concatenation `x ⊗ y`.
    pub fn concat(&self, other: &TensorElement) -> TensorElement {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        TensorElement::new(f)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> TensorElement {
        TensorElement::new(self.factors[range].to_vec())
    }

    /// `(ε_i, φ_i)` of every left prefix `t_1 ⊗ ⋯ ⊗ t_k`, using
    /// `ε(a⊗b) = ε(b) + max(0, ε(a) - φ(b))` and `φ(a⊗b) = φ(a) + max(0, φ(b) - ε(a))`.
    fn prefix_string(&self, i: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc: Option<(usize, usize)> = None;
        for f in &self.factors {
            let (e, p) = (f.epsilon(i), f.phi(i));
            let next = match acc {
                None => (e, p),
                Some((ea, pa)) => (e + ea.saturating_sub(p), pa + p.saturating_sub(ea)),
            };
            out.push(next);
            acc = Some(next);
        }
        out
    }

    /// Which factor `e_i` (or `f_i`) acts on, descending the left-nested bracketing.
    fn acting_factor(&self, i: usize, raising: bool) -> usize {
        let prefix = self.prefix_string(i);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let eps_prefix = prefix[k - 1].0;
            let phi_last = self.factors[k].phi(i);
            let goes_left = if raising { eps_prefix > phi_last } else { eps_prefix >= phi_last };
            if !goes_left {
                break;
            }
            k -= 1;
        }
        k
    }

    fn apply(&self, i: usize, raising: bool) -> Option<TensorElement> {
        let k = self.acting_factor(i, raising);
        let f = &self.factors[k];
        let moved = if raising { f.raise(i)? } else { f.lower(i)? };
        let mut factors = self.factors.clone();
        factors[k] = moved;
        Some(TensorElement { factors })
    }
}

impl Crystal for TensorElement {
    fn rank(&self) -> usize {
        self.factors[0].n()
    }

    fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.rank()];
        for f in &self.factors {
            for (a, b) in w.iter_mut().zip(f.weight()) {
                *a += b;
            }
        }
        w
    }

    fn epsilon(&self, i: usize) -> usize {
        self.prefix_string(i).last().unwrap().0
    }

    fn phi(&self, i: usize) -> usize {
        self.prefix_string(i).last().unwrap().1
    }

    fn raise(&self, i: usize) -> Option<Self> {
        self.apply(i, true)
    }

    fn lower(&self, i: usize) -> Option<Self> {
        self.apply(i, false)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|t| {
                let rows: Vec<String> = t
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(""))
                    .collect();
                format!("[{}]", rows.join("/"))
            })
            .collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

/// `ε_i(T) <= μ_i - μ_{i+1}` for every `i`.
pub fn is_mu_dominant(t: &SkewTableau, mu: &[i64]) -> bool {
    (1..t.n()).all(|i| (t.epsilon(i) as i64) <= mu[i - 1] - mu[i])
}

/// Raises with the smallest applicable index until highest weight. Returns the
/// highest weight element and the indices used, in order.
pub fn raise_to_highest<C: Crystal>(x: &C) -> (C, Vec<usize>) {
    let mut cur = x.clone();
    let mut path = Vec::new();
    while let Some((i, next)) = (1..cur.rank()).find_map(|i| cur.raise(i).map(|y| (i, y))) {
        path.push(i);
        cur = next;
    }
    (cur, path)
}

/// Lowers with the smallest applicable index until lowest weight.
pub fn lower_to_lowest<C: Crystal>(x: &C) -> C {
    let mut cur = x.clone();
    while let Some(next) = (1..cur.rank()).find_map(|i| cur.lower(i)) {
        cur = next;
    }
    cur
}

/// The Schützenberger involution of the component of `x`: transport the raising
/// path to the lowest weight element with `i` replaced by `n - i`.
pub fn xi_general<C: Crystal>(x: &C) -> C {
    let n = x.rank();
    let (top, path) = raise_to_highest(x);
    let mut cur = lower_to_lowest(&top);
    for &i in path.iter().rev() {
        cur = cur.raise(n - i).expect("mirrored path stays inside the component");
    }
    cur
}

/// On `B_λ` itself, through Bender-Knuth moves on GT patterns.
pub fn xi_tableau(t: &SkewTableau) -> SkewTableau {
    tableau_from_gt(&schutzenberger(&gt_from_tableau(t).expect("straight tableau")))
        .expect("non-negative pattern")
}

/// The crystal commutor `a ⊗ b ↦ ξ(ξ(b) ⊗ ξ(a))`, where `a` is the first
/// `split` factors and `b` the rest.
pub fn sigma_crystal(x: &TensorElement, split: usize) -> TensorElement {
    let a = x.slice(0..split);
    let b = x.slice(split..x.factors().len());
    xi_general(&xi_general(&b).concat(&xi_general(&a)))
}

/// The connected component of `x`, by breadth-first search over all `e_i`, `f_i`.
pub fn component<C: Crystal>(x: &C) -> BTreeSet<C> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([x.clone()]);
    seen.insert(x.clone());
    while let Some(y) = queue.pop_front() {
        for i in 1..y.rank() {
            for z in [y.raise(i), y.lower(i)].into_iter().flatten() {
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    seen
}

/// All tensor products of the given factor lists.
pub fn all_tensors(factor_sets: &[Vec<SkewTableau>]) -> Vec<TensorElement> {
    let mut out: Vec<Vec<SkewTableau>> = vec![Vec::new()];
    for set in factor_sets {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                set.iter().map(move |t| {
                    let mut p = prefix.clone();
                    p.push(t.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(TensorElement::new).collect()
}
