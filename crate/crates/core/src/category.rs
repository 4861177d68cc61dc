//! The category of hive-graded sets: objects, the tensor product built from
//! hive sets, the associator and commutor on elements, and the comparison with
//! tableau crystals.

use std::collections::BTreeMap;
use std::fmt;

use crate::bridge::{associate, associate_inverse, commute, hat};
use crate::crystal::{all_tensors, raise_to_highest, sigma_crystal, Crystal, TensorElement};
use crate::error::{Error, Result};
use crate::hive::{enumerate_hives, DominantWeight, Hive};
use crate::tableau::{all_tableaux, highest_tableau, shape_of, tableau_from_gt, SkewTableau};

/// An element label: an opaque atom, or a triple `(a, b, P)` in a tensor product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Atom(String),
    Product(Box<Label>, Box<Label>, Hive),
}

impl Label {
    pub fn atom(s: &str) -> Label {
        Label::Atom(s.to_string())
    }

    pub fn product(a: Label, b: Label, p: Hive) -> Label {
        Label::Product(Box::new(a), Box::new(b), p)
    }

    fn parts(&self) -> Result<(&Label, &Label, &Hive)> {
        match self {
            Label::Product(a, b, p) => Ok((a, b, p)),
            Label::Atom(s) => Err(Error::Malformed(format!("{} is not a tensor element", s))),
        }
    }

    pub fn hive(&self) -> Option<&Hive> {
        match self {
            Label::Product(_, _, p) => Some(p),
            Label::Atom(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => write!(f, "{}", s),
            Label::Product(a, b, p) => {
                let rows: Vec<String> = p
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                write!(f, "({}, {}, [{}])", a, b, rows.join(" / "))
            }
        }
    }
}

/// A finite set of labels for each of finitely many dominant weights.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HiveObject {
    support: BTreeMap<DominantWeight, Vec<Label>>,
}

impl HiveObject {
    pub fn new() -> Self {
        HiveObject::default()
    }

    /// `L(λ)`: one atom at weight `λ`.
    pub fn irreducible(lambda: &DominantWeight, name: &str) -> Self {
        let mut o = HiveObject::new();
        o.insert(lambda.clone(), Label::atom(name));
        o
    }

    pub fn insert(&mut self, weight: DominantWeight, label: Label) {
        let set = self.support.entry(weight).or_default();
        if !set.contains(&label) {
            set.push(label);
            set.sort();
        }
    }

    pub fn get(&self, weight: &DominantWeight) -> &[Label] {
        self.support.get(weight).map_or(&[], Vec::as_slice)
    }

    pub fn weights(&self) -> impl Iterator<Item = &DominantWeight> {
        self.support.keys().filter(move |w| !self.support[*w].is_empty())
    }

    pub fn elements(&self) -> Vec<(DominantWeight, Label)> {
        self.support
            .iter()
            .flat_map(|(w, ls)| ls.iter().map(move |l| (w.clone(), l.clone())))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.support.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weight_of(&self, label: &Label) -> Option<&DominantWeight> {
        self.support.iter().find(|(_, ls)| ls.contains(label)).map(|(w, _)| w)
    }
}

/// Candidate weights `ν` of `V_λ ⊗ V_μ`: the right size and within the extreme parts.
pub fn candidate_weights(lambda: &DominantWeight, mu: &DominantWeight) -> Vec<DominantWeight> {
    let n = lambda.len();
    if n == 0 {
        return vec![DominantWeight::zero(0)];
    }
    let hi = lambda.parts()[0] + mu.parts()[0];
    let lo = lambda.parts()[n - 1] + mu.parts()[n - 1];
    let size = lambda.size() + mu.size();
    DominantWeight::enumerate(n, lo, hi)
        .into_iter()
        .filter(|w| w.size() == size)
        .collect()
}

/// `(A ⊗ B)_ν = ⋃ A_λ × B_μ × HIVE_{λμ}^ν`.
pub fn tensor_objects(a: &HiveObject, b: &HiveObject) -> HiveObject {
    let mut out = HiveObject::new();
    for (lambda, xs) in &a.support {
        for (mu, ys) in &b.support {
            for nu in candidate_weights(lambda, mu) {
                let hives = enumerate_hives(lambda, mu, &nu);
                for x in xs {
                    for y in ys {
                        for p in &hives {
                            out.insert(nu.clone(), Label::product(x.clone(), y.clone(), p.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// A weight-preserving map between the label sets of two objects.
#[derive(Debug, Clone)]
pub struct HiveMorphism {
    images: BTreeMap<Label, Label>,
}

impl HiveMorphism {
    /// Tabulates `f` on every element of `source`, checking that images lie in
    /// `target` at the same weight.
    pub fn from_fn(
        source: &HiveObject,
        target: &HiveObject,
        f: impl Fn(&Label) -> Result<Label>,
    ) -> Result<HiveMorphism> {
        let mut images = BTreeMap::new();
        for (w, l) in source.elements() {
            let img = f(&l)?;
            if !target.get(&w).contains(&img) {
                return Err(Error::Malformed(format!("{} is not in the target at weight {}", img, w)));
            }
            images.insert(l, img);
        }
        Ok(HiveMorphism { images })
    }

    pub fn apply(&self, l: &Label) -> Option<&Label> {
        self.images.get(l)
    }

    pub fn is_bijective_onto(&self, target: &HiveObject) -> bool {
        let mut imgs: Vec<&Label> = self.images.values().collect();
        imgs.sort();
        imgs.dedup();
        imgs.len() == self.images.len() && imgs.len() == target.len()
    }
}

/// `α: (a, (b, c, N), M) ↦ ((a, b, P), c, Q)`.
pub fn alpha(x: &Label) -> Result<Label> {
    let (a, bc, m) = x.parts()?;
    let (b, c, n) = bc.parts()?;
    let (p, q) = associate(m, n)?;
    Ok(Label::product(Label::product(a.clone(), b.clone(), p), c.clone(), q))
}

/// `α⁻¹: ((a, b, P), c, Q) ↦ (a, (b, c, N), M)`.
pub fn alpha_inverse(x: &Label) -> Result<Label> {
    let (ab, c, q) = x.parts()?;
    let (a, b, p) = ab.parts()?;
    let (m, n) = associate_inverse(p, q)?;
    Ok(Label::product(a.clone(), Label::product(b.clone(), c.clone(), n), m))
}

/// `σ: (a, b, P) ↦ (b, a, P★)`.
pub fn sigma(x: &Label) -> Result<Label> {
    let (a, b, p) = x.parts()?;
    Ok(Label::product(b.clone(), a.clone(), commute(p)?))
}

/// `f ⊗ 1`.
pub fn on_left(x: &Label, f: impl Fn(&Label) -> Result<Label>) -> Result<Label> {
    let (a, b, p) = x.parts()?;
    Ok(Label::product(f(a)?, b.clone(), p.clone()))
}

/// `1 ⊗ f`.
pub fn on_right(x: &Label, f: impl Fn(&Label) -> Result<Label>) -> Result<Label> {
    let (a, b, p) = x.parts()?;
    Ok(Label::product(a.clone(), f(b)?, p.clone()))
}

/// Both sides of the braid relation applied to `x ∈ A ⊗ (B ⊗ C)`; both land in `(C ⊗ B) ⊗ A`.
///
/// Left: `(σ ⊗ 1) α (1 ⊗ σ) α⁻¹ (σ ⊗ 1) α`. Right: `α (1 ⊗ σ) α⁻¹ (σ ⊗ 1) α (1 ⊗ σ)`.
pub fn yang_baxter_sides(x: &Label) -> Result<(Label, Label)> {
    let mut l = alpha(x)?;
    l = on_left(&l, sigma)?;
    l = alpha_inverse(&l)?;
    l = on_right(&l, sigma)?;
    l = alpha(&l)?;
    l = on_left(&l, sigma)?;

    let mut r = on_right(x, sigma)?;
    r = alpha(&r)?;
    r = on_left(&r, sigma)?;
    r = alpha_inverse(&r)?;
    r = on_right(&r, sigma)?;
    r = alpha(&r)?;
    Ok((l, r))
}

/// `(inner, outer)` hive witnesses of an element `((c, b, J), a, K)`.
pub fn witnesses(x: &Label) -> Result<(Hive, Hive)> {
    let (cb, _, outer) = x.parts()?;
    let (_, _, inner) = cb.parts()?;
    Ok((inner.clone(), outer.clone()))
}

/// Both sides of the braid relation on `(a, (b, c, N), M)` with atoms, as hive pairs.
pub fn yang_baxter_hives(m: &Hive, n: &Hive) -> Result<((Hive, Hive), (Hive, Hive))> {
    let x = Label::product(
        Label::atom("a"),
        Label::product(Label::atom("b"), Label::atom("c"), n.clone()),
        m.clone(),
    );
    let (l, r) = yang_baxter_sides(&x)?;
    Ok((witnesses(&l)?, witnesses(&r)?))
}

/// Outcome of checking the coboundary axioms elementwise.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoboundaryReport {
    pub involution_checked: usize,
    pub involution_failures: usize,
    pub compound_checked: usize,
    pub compound_failures: usize,
}

impl CoboundaryReport {
    pub fn passed(&self) -> bool {
        self.involution_failures == 0 && self.compound_failures == 0
    }
}

/// `σ_{B,A} σ_{A,B} = 1` on `A ⊗ B`, and
/// `(σ_{B,C} ⊗ 1) σ_{A,B⊗C} = α_{C,B,A} (1 ⊗ σ_{A,B}) σ_{A⊗B,C} α_{A,B,C}` on `A ⊗ (B ⊗ C)`.
pub fn coboundary_check(a: &HiveObject, b: &HiveObject, c: &HiveObject) -> Result<CoboundaryReport> {
    let mut report = CoboundaryReport::default();
    for (_, x) in tensor_objects(a, b).elements() {
        report.involution_checked += 1;
        if sigma(&sigma(&x)?)? != x {
            report.involution_failures += 1;
        }
    }
    for (_, x) in tensor_objects(a, &tensor_objects(b, c)).elements() {
        report.compound_checked += 1;
        let lhs = on_left(&sigma(&x)?, sigma)?;
        let mut rhs = alpha(&x)?;
        rhs = sigma(&rhs)?;
        rhs = on_right(&rhs, sigma)?;
        rhs = alpha(&rhs)?;
        if lhs != rhs {
            report.compound_failures += 1;
        }
    }
    Ok(report)
}

/// Elements of `B_{λ_1} ⊗ ⋯ ⊗ B_{λ_k}` killed by every `e_i`, with weight `ν`.
pub fn highest_weight_elements(shapes: &[Vec<usize>], n: usize, nu: &[i64]) -> Vec<TensorElement> {
    let sets: Vec<Vec<SkewTableau>> = shapes.iter().map(|s| all_tableaux(s, n)).collect();
    all_tensors(&sets)
        .into_iter()
        .filter(|x| x.weight() == nu && x.is_highest())
        .collect()
}

/// `T[b]`: the image of `T ∈ B_λ` under `B_λ ≅` the component of the highest
/// weight element `b`. The raising path from `T` to `b_λ` is replayed downward from `b`.
pub fn transport<C: Crystal>(t: &SkewTableau, b: &C) -> Result<C> {
    let (top, path) = raise_to_highest(t);
    if top.weight() != b.weight() || !b.is_highest() {
        return Err(Error::Malformed("transport target is not a matching highest weight element".into()));
    }
    let mut cur = b.clone();
    for &i in path.iter().rev() {
        cur = cur
            .lower(i)
            .ok_or_else(|| Error::Malformed(format!("lowering f_{} leaves the component", i)))?;
    }
    Ok(cur)
}

/// `φ(a, b, P) = P̂[a] ⊗ b`, for `a` a highest weight element standing for the
/// atom of `A` and `b` the crystal element standing for the atom of `B`.
pub fn phi(a: &TensorElement, b: &TensorElement, p: &Hive) -> Result<TensorElement> {
    let t = tableau_from_gt(&hat(p.array())?)?;
    Ok(transport(&t, a)?.concat(b))
}

/// `Ψ(A) = ⋃ A_λ × B_λ` as a flat list of crystal elements tagged by label.
pub fn psi(a: &HiveObject) -> Result<Vec<(Label, SkewTableau)>> {
    let mut out = Vec::new();
    for (w, l) in a.elements() {
        let shape = shape_of(w.parts())?;
        for t in all_tableaux(&shape, w.len()) {
            out.push((l.clone(), t));
        }
    }
    Ok(out)
}

fn b_elem(w: &DominantWeight) -> Result<TensorElement> {
    Ok(TensorElement::new(vec![highest_tableau(&shape_of(w.parts())?, w.len())]))
}

/// The associativity square on `x = (a, (b, c, N), M)` over irreducibles:
/// `φ` of `α(x)` against `φ` of `x`, both flattened.
pub fn associativity_square(m: &Hive, n: &Hive) -> Result<(TensorElement, TensorElement)> {
    let (lambda, _, _) = m.boundary();
    let (mu, nu, _) = n.boundary();
    let (p, q) = associate(m, n)?;
    let (a, b, c) = (b_elem(&lambda)?, b_elem(&mu)?, b_elem(&nu)?);
    let before = phi(&a, &phi(&b, &c, n)?, m)?;
    let after = phi(&phi(&a, &b, &p)?, &c, &q)?;
    Ok((after, before))
}

/// The commutativity square on `(a, b, P)` over irreducibles: `φ(σ(x))` against
/// the crystal commutor applied to `φ(x)`.
pub fn commutativity_square(p: &Hive) -> Result<(TensorElement, TensorElement)> {
    let (lambda, mu, _) = p.boundary();
    let (a, b) = (b_elem(&lambda)?, b_elem(&mu)?);
    let via_hives = phi(&b, &a, &commute(p)?)?;
    let via_crystals = sigma_crystal(&phi(&a, &b, p)?, 1);
    Ok((via_hives, via_crystals))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrMethod {
    Hive,
    Crystal,
}

/// `c_{λμ}^ν`, counted as hives or as highest weight elements of `B_λ ⊗ B_μ`.
pub fn lr_count(lambda: &DominantWeight, mu: &DominantWeight, nu: &DominantWeight, method: LrMethod) -> Result<usize> {
    let n = lambda.len();
    if mu.len() != n || nu.len() != n {
        return Err(Error::Malformed("weights of different lengths".into()));
    }
    match method {
        LrMethod::Hive => Ok(enumerate_hives(lambda, mu, nu).len()),
        LrMethod::Crystal => {
            let (l, m) = (shape_of(lambda.parts())?, shape_of(mu.parts())?);
            shape_of(nu.parts())?;
            if lambda.size() + mu.size() != nu.size() {
                return Ok(0);
            }
            Ok(highest_weight_elements(&[l, m], n, nu.parts()).len())
        }
    }
}
