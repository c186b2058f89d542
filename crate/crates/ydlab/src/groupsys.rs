//! Finite groups, fusion maps and the transitive system of pair groups.
//!
//! A system over groups `G_0, ..., G_{k-1}` assigns to indices `a, b` the pair
//! group `G_{a,b} = G_b × G_a`, written `(α, β)` with `α ∈ G_b`, `β ∈ G_a`,
//! and carrying the fusion map `j_{a,b}: G_a → G_b`. Products in every table
//! are compositions: `table[a][b]` is the index of `a ∘ b`.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, YdError};
use crate::par::{self, Execution};
use crate::report::{Check, Counterexample, VerificationReport};

/// Groups above this order are sampled rather than enumerated.
pub const EXHAUSTIVE_MAX_ORDER: usize = 12;
pub const SAMPLES: usize = 1000;
pub const MAX_ORDER: usize = 24;
pub const MAX_GROUPS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    unit: usize,
    inverse: Vec<usize>,
}

/// On-disk form of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
    pub name: String,
}

impl FiniteGroup {
    /// Validates closure, the unit, inverses and associativity.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        let bad = |why: String| YdError::MalformedInput(format!("group {name}: {why}"));
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n) {
            return Err(bad("table is not square".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) || unit >= n {
            return Err(bad("entry out of range".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            if mul(unit, a) != a || mul(a, unit) != a {
                return Err(bad(format!("{unit} is not a unit at {a}")));
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mul(a, b) == unit && mul(b, a) == unit)
                .ok_or_else(|| bad(format!("{a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, order: n, table: flat, unit, inverse })
    }

    pub fn from_file(f: &GroupFile) -> Result<Self> {
        if f.table.len() != f.order {
            return Err(YdError::MalformedInput(format!(
                "group {}: order {} but {} rows",
                f.name,
                f.order,
                f.table.len()
            )));
        }
        Self::new(f.name.clone(), f.table.clone(), f.unit)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            table: self.table.chunks(self.order).map(<[usize]>::to_vec).collect(),
            unit: self.unit,
            name: self.name.clone(),
        }
    }

    /// Builds a group from a table over elements already known to form a
    /// group under `op`, indexing them in the given order.
    pub fn from_elements<T, F>(name: impl Into<String>, elems: &[T], op: F) -> Result<Self>
    where
        T: PartialEq,
        F: Fn(&T, &T) -> T,
    {
        let idx = |x: &T| elems.iter().position(|e| e == x);
        let mut table = vec![vec![0; elems.len()]; elems.len()];
        for (i, a) in elems.iter().enumerate() {
            for (k, b) in elems.iter().enumerate() {
                table[i][k] = idx(&op(a, b))
                    .ok_or_else(|| YdError::MalformedInput("elements not closed under product".into()))?;
            }
        }
        let unit = (0..elems.len())
            .find(|&u| (0..elems.len()).all(|a| table[u][a] == a && table[a][u] == a))
            .ok_or_else(|| YdError::MalformedInput("no unit element".into()))?;
        Self::new(name, table, unit)
    }

    /// The group generated by permutations of `0..degree`; element 0 is the identity.
    /// Composition `(p ∘ q)[i] = p[q[i]]`.
    pub fn from_permutations(name: impl Into<String>, gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(0, Vec::len);
        let id: Vec<usize> = (0..degree).collect();
        let compose = |p: &Vec<usize>, q: &Vec<usize>| q.iter().map(|&i| p[i]).collect::<Vec<_>>();
        let mut elems = vec![id];
        let mut k = 0;
        while k < elems.len() {
            for g in gens {
                let next = compose(g, &elems[k]);
                if !elems.contains(&next) {
                    elems.push(next);
                    if elems.len() > MAX_ORDER * 8 {
                        return Err(YdError::ClosureTooLarge { cap: MAX_ORDER * 8 });
                    }
                }
            }
            k += 1;
        }
        Self::from_elements(name, &elems, compose)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(format!("Z{n}"), table, 0).expect("cyclic group")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]]).expect("S3")
    }

    /// Symmetries of a square acting on its vertices.
    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]]).expect("D4")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Product of a word of elements, left to right.
    pub fn prod(&self, word: &[usize]) -> usize {
        word.iter().fold(self.unit, |acc, &x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn check(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(YdError::GroupMismatch(format!("{a} is not an element of {}", self.name)))
        }
    }
}

/// A group isomorphism `j: source → target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionMap {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
    preimages: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionFile {
    pub source: String,
    pub target: String,
    pub images: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl FusionMap {
    /// Refuses anything but a verified isomorphism. Groups of different
    /// orders have no fusion map at all, reported as [`YdError::EmptyHom`].
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if source.order != target.order {
            return Err(YdError::EmptyHom(format!(
                "{} (order {}) and {} (order {}) are not isomorphic",
                source.name, source.order, target.name, target.order
            )));
        }
        let j = Self::from_images_unchecked(source, target, images)?;
        if let Some(bad) = j.homomorphism_violation() {
            return Err(YdError::PreconditionFailed(format!(
                "fusion map {} -> {} is not an isomorphism: {bad}",
                j.source.name, j.target.name
            )));
        }
        Ok(j)
    }

    /// Skips the isomorphism check; only shape and bijectivity of indices are
    /// enforced. [`verify_system_axioms`] still checks the homomorphism law.
    pub fn from_images_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self> {
        if images.len() != source.order || images.iter().any(|&x| x >= target.order) {
            return Err(YdError::MalformedInput(format!(
                "fusion map {} -> {} has images of the wrong shape",
                source.name, target.name
            )));
        }
        let mut preimages = vec![usize::MAX; target.order];
        for (a, &b) in images.iter().enumerate() {
            if preimages[b] != usize::MAX {
                return Err(YdError::PreconditionFailed(format!(
                    "fusion map {} -> {} is not injective",
                    source.name, target.name
                )));
            }
            preimages[b] = a;
        }
        if preimages.contains(&usize::MAX) {
            return Err(YdError::PreconditionFailed(format!(
                "fusion map {} -> {} is not surjective",
                source.name, target.name
            )));
        }
        Ok(FusionMap { source, target, images, preimages })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let images: Vec<usize> = (0..g.order).collect();
        FusionMap { source: g.clone(), target: g, preimages: images.clone(), images }
    }

    /// Conjugation `x ↦ c x c⁻¹` as a fusion map from `g` to itself.
    pub fn inner(g: Arc<FiniteGroup>, c: usize) -> Result<Self> {
        g.check(c)?;
        let images = (0..g.order).map(|x| g.prod(&[c, x, g.inv(c)])).collect();
        Self::new(g.clone(), g, images)
    }

    fn homomorphism_violation(&self) -> Option<String> {
        if self.images[self.source.unit] != self.target.unit {
            return Some("unit not preserved".into());
        }
        for a in 0..self.source.order {
            for b in 0..self.source.order {
                if self.images[self.source.mul(a, b)] != self.target.mul(self.images[a], self.images[b]) {
                    return Some(format!("j({a}·{b}) != j({a})·j({b})"));
                }
            }
        }
        None
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn apply_inv(&self, b: usize) -> usize {
        self.preimages[b]
    }

    pub fn inverse(&self) -> FusionMap {
        FusionMap {
            source: self.target.clone(),
            target: self.source.clone(),
            images: self.preimages.clone(),
            preimages: self.images.clone(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FusionMap) -> Result<FusionMap> {
        if !same_group(&self.target, &next.source) {
            return Err(YdError::GroupMismatch(format!(
                "cannot follow a map into {} by a map out of {}",
                self.target.name, next.source.name
            )));
        }
        let images = self.images.iter().map(|&a| next.images[a]).collect();
        Self::from_images_unchecked(self.source.clone(), next.target.clone(), images)
    }

    pub fn to_file(&self) -> FusionFile {
        FusionFile {
            source: self.source.name.clone(),
            target: self.target.name.clone(),
            images: self.images.clone(),
            name: None,
        }
    }
}

/// An element `(α, β)` of a pair group `G′ × G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedPair {
    pub left: usize,
    pub right: usize,
}

impl GradedPair {
    pub fn new(left: usize, right: usize) -> Self {
        GradedPair { left, right }
    }
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_pair(p: GradedPair, j: &FusionMap) -> Result<()> {
    j.target.check(p.left)?;
    j.source.check(p.right)
}

/// `(α,β)*(γ,δ) = (αγ, δ·j⁻¹(γ⁻¹)·β·j⁻¹(γ))` in `G′ × G` for `j: G → G′`.
pub fn pair_product(p: GradedPair, q: GradedPair, j: &FusionMap) -> Result<GradedPair> {
    check_pair(p, j)?;
    check_pair(q, j)?;
    let (g1, g) = (&j.target, &j.source);
    Ok(GradedPair {
        left: g1.mul(p.left, q.left),
        right: g.prod(&[q.right, j.apply_inv(g1.inv(q.left)), p.right, j.apply_inv(q.left)]),
    })
}

/// `(α,β)⁻¹ = (α⁻¹, j⁻¹(α)·β⁻¹·j⁻¹(α⁻¹))`.
pub fn pair_inverse(p: GradedPair, j: &FusionMap) -> Result<GradedPair> {
    check_pair(p, j)?;
    let (g1, g) = (&j.target, &j.source);
    Ok(GradedPair {
        left: g1.inv(p.left),
        right: g.prod(&[j.apply_inv(p.left), g.inv(p.right), j.apply_inv(g1.inv(p.left))]),
    })
}

pub fn pair_unit(j: &FusionMap) -> GradedPair {
    GradedPair::new(j.target.unit, j.source.unit)
}

/// `(α,β) ∈ G″×G′`, `(γ,δ) ∈ G′×G` give `(α·j′(γ), δ·j⁻¹(γ⁻¹βγ)) ∈ G″×G`.
pub fn transitive_product(
    p: GradedPair,
    q: GradedPair,
    j: &FusionMap,
    j2: &FusionMap,
) -> Result<GradedPair> {
    if !same_group(&j.target, &j2.source) {
        return Err(YdError::GroupMismatch(format!(
            "middle groups {} and {} differ",
            j.target.name, j2.source.name
        )));
    }
    check_pair(p, j2)?;
    check_pair(q, j)?;
    let g1 = &j.target;
    Ok(GradedPair {
        left: j2.target.mul(p.left, j2.apply(q.left)),
        right: j.source.mul(q.right, j.apply_inv(g1.prod(&[g1.inv(q.left), p.right, q.left]))),
    })
}

/// `(α,β) ∈ G″×G ↦ ((α, j(β)), (j′⁻¹(α), β))`.
pub fn project_pi(p: GradedPair, j: &FusionMap, j2: &FusionMap) -> Result<(GradedPair, GradedPair)> {
    if !same_group(&j.target, &j2.source) {
        return Err(YdError::GroupMismatch(format!(
            "middle groups {} and {} differ",
            j.target.name, j2.source.name
        )));
    }
    j2.target.check(p.left)?;
    j.source.check(p.right)?;
    Ok((
        GradedPair::new(p.left, j.apply(p.right)),
        GradedPair::new(j2.apply_inv(p.left), p.right),
    ))
}

/// `a * p * a⁻¹` in `G′ × G`, by the closed formula
/// `(αγα⁻¹, j⁻¹(α)β⁻¹δ j⁻¹(γ⁻¹)β j⁻¹(γα⁻¹))`.
pub fn conjugate_grading(a: GradedPair, p: GradedPair, j: &FusionMap) -> Result<GradedPair> {
    check_pair(a, j)?;
    check_pair(p, j)?;
    let (g1, g) = (&j.target, &j.source);
    let (al, be, ga, de) = (a.left, a.right, p.left, p.right);
    Ok(GradedPair {
        left: g1.prod(&[al, ga, g1.inv(al)]),
        right: g.prod(&[
            j.apply_inv(al),
            g.inv(be),
            de,
            j.apply_inv(g1.inv(ga)),
            be,
            j.apply_inv(g1.mul(ga, g1.inv(al))),
        ]),
    })
}

/// A directed chain of groups with fusion maps between neighbours.
#[derive(Debug, Clone)]
pub struct GradedGroupSystem {
    name: String,
    groups: Vec<Arc<FiniteGroup>>,
    fusions: Vec<FusionMap>,
    derived: Vec<Vec<FusionMap>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub name: String,
    pub groups: Vec<String>,
    pub fusions: Vec<String>,
}

impl GradedGroupSystem {
    /// `fusions[i]` must map `groups[i]` to `groups[i + 1]`.
    pub fn new(name: impl Into<String>, groups: Vec<Arc<FiniteGroup>>, fusions: Vec<FusionMap>) -> Result<Self> {
        let name = name.into();
        if groups.is_empty() {
            return Err(YdError::MalformedInput(format!("system {name} has no groups")));
        }
        if fusions.len() + 1 != groups.len() {
            return Err(YdError::MalformedInput(format!(
                "system {name}: {} groups need {} fusion maps, got {}",
                groups.len(),
                groups.len() - 1,
                fusions.len()
            )));
        }
        for (i, f) in fusions.iter().enumerate() {
            if *f.source != *groups[i] || *f.target != *groups[i + 1] {
                return Err(YdError::GroupMismatch(format!(
                    "system {name}: fusion {i} does not connect {} to {}",
                    groups[i].name,
                    groups[i + 1].name
                )));
            }
        }
        let k = groups.len();
        let mut derived = Vec::with_capacity(k);
        for a in 0..k {
            let mut row = Vec::with_capacity(k);
            for b in 0..k {
                let mut j = FusionMap::identity(groups[a].clone());
                if a < b {
                    for f in &fusions[a..b] {
                        j = j.then(f)?;
                    }
                } else {
                    for f in fusions[b..a].iter().rev() {
                        j = j.then(&f.inverse())?;
                    }
                }
                row.push(j);
            }
            derived.push(row);
        }
        Ok(GradedGroupSystem { name, groups, fusions, derived })
    }

    /// The same group repeated `len` times with identity fusions.
    pub fn constant(name: impl Into<String>, g: Arc<FiniteGroup>, len: usize) -> Result<Self> {
        let fusions = (1..len).map(|_| FusionMap::identity(g.clone())).collect();
        Self::new(name, vec![g; len], fusions)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn groups(&self) -> &[Arc<FiniteGroup>] {
        &self.groups
    }

    pub fn fusions(&self) -> &[FusionMap] {
        &self.fusions
    }

    /// `j_{a,b}: G_a → G_b`.
    pub fn fusion(&self, a: usize, b: usize) -> &FusionMap {
        &self.derived[a][b]
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Order of `G_{a,b}`.
    pub fn pair_order(&self, a: usize, b: usize) -> usize {
        self.groups[a].order * self.groups[b].order
    }

    /// Element number `i` of `G_{a,b}`.
    pub fn pair(&self, a: usize, i: usize) -> GradedPair {
        let n = self.groups[a].order;
        GradedPair::new(i / n, i % n)
    }
}

/// How a quantified identity is evaluated.
#[derive(Clone, Copy)]
enum Coverage {
    Exhaustive,
    Sampled(u64),
}

// Failing assignment as (coordinate, lhs, rhs).
type Failure = (Vec<usize>, String, String);

fn forall<F>(exec: Execution, coverage: Coverage, stream: u64, sizes: &[usize], pred: F) -> Option<Failure>
where
    F: Fn(&[usize]) -> Option<(String, String)> + Sync + Send,
{
    const MAX_ARITY: usize = 4;
    assert!(sizes.len() <= MAX_ARITY);
    let decode = |mut i: usize| {
        let mut t = [0; MAX_ARITY];
        for (slot, &s) in t[..sizes.len()].iter_mut().zip(sizes).rev() {
            *slot = i % s;
            i /= s;
        }
        t
    };
    match coverage {
        Coverage::Exhaustive => {
            let total: usize = sizes.iter().product();
            par::find_first(exec, total, |i| {
                let t = decode(i);
                let t = &t[..sizes.len()];
                pred(t).map(|(l, r)| (t.to_vec(), l, r))
            })
        }
        Coverage::Sampled(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let samples: Vec<Vec<usize>> =
                (0..SAMPLES).map(|_| sizes.iter().map(|&s| rng.gen_range(0..s)).collect()).collect();
            par::find_first(exec, samples.len(), |i| pred(&samples[i]).map(|(l, r)| (samples[i].clone(), l, r)))
        }
    }
}

fn show(p: GradedPair) -> String {
    format!("({}, {})", p.left, p.right)
}

fn differ<T: PartialEq + std::fmt::Debug>(l: T, r: T) -> Option<(String, String)> {
    if l == r {
        None
    } else {
        Some((format!("{l:?}"), format!("{r:?}")))
    }
}

/// Checks the axioms of a transitive system of groups with projections.
pub fn verify_system_axioms(sys: &GradedGroupSystem, seed: u64) -> Result<VerificationReport> {
    verify_system_axioms_with(sys, seed, Execution::default())
}

pub fn verify_system_axioms_with(
    sys: &GradedGroupSystem,
    seed: u64,
    exec: Execution,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = sys.len();
    if k > MAX_GROUPS || sys.groups.iter().any(|g| g.order > MAX_ORDER) {
        return Err(YdError::ClosureTooLarge { cap: MAX_ORDER });
    }
    let coverage = if sys.groups.iter().all(|g| g.order <= EXHAUSTIVE_MAX_ORDER) {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled(seed)
    };
    let mut report = VerificationReport::new(format!("group system {}", sys.name));
    if let Coverage::Sampled(s) = coverage {
        report.seed = Some(s);
        report.note(format!("orders above {EXHAUSTIVE_MAX_ORDER}: {SAMPLES} random samples per index tuple"));
    }

    let j = |a: usize, b: usize| sys.fusion(a, b);
    let g = |a: usize| &sys.groups[a];
    let code = |a: usize, p: GradedPair| p.left * g(a).order + p.right;
    // Exhaustive runs read both products from tables filled once per index tuple.
    let tables = matches!(coverage, Coverage::Exhaustive);
    let ptab: Vec<Vec<GradedPair>> = if tables {
        par::map_indices(exec, k * k, |ab| {
            let (a, b) = (ab / k, ab % k);
            let n = sys.pair_order(a, b);
            (0..n * n).map(|i| pair_product(sys.pair(a, i / n), sys.pair(a, i % n), j(a, b)).expect("in range")).collect()
        })
    } else {
        vec![]
    };
    let ttab: Vec<Vec<GradedPair>> = if tables {
        par::map_indices(exec, k * k * k, |abc| {
            let (a, b, c) = (abc / (k * k), abc / k % k, abc % k);
            let m = sys.pair_order(a, b);
            (0..sys.pair_order(b, c) * m)
                .map(|i| transitive_product(sys.pair(b, i / m), sys.pair(a, i % m), j(a, b), j(b, c)).expect("in range"))
                .collect()
        })
    } else {
        vec![]
    };
    // Product in G_{a,b}.
    let pmul = |a: usize, b: usize, x: GradedPair, y: GradedPair| {
        if tables {
            ptab[a * k + b][code(a, x) * sys.pair_order(a, b) + code(a, y)]
        } else {
            pair_product(x, y, j(a, b)).expect("in range")
        }
    };
    let pinv = |a: usize, b: usize, x: GradedPair| pair_inverse(x, j(a, b)).expect("in range");
    // Transitive product G_{b,c} × G_{a,b} → G_{a,c}.
    let tmul = |a: usize, b: usize, c: usize, x: GradedPair, y: GradedPair| {
        if tables {
            ttab[(a * k + b) * k + c][code(b, x) * sys.pair_order(a, b) + code(a, y)]
        } else {
            transitive_product(x, y, j(a, b), j(b, c)).expect("in range")
        }
    };
    let pi = |a: usize, b: usize, c: usize, w: GradedPair| project_pi(w, j(a, b), j(b, c)).expect("in range");
    let unit = |a: usize, b: usize| GradedPair::new(g(b).unit, g(a).unit);
    let idx = |n: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out.into_iter().flat_map(|t| (0..k).map(move |i| [t.clone(), vec![i]].concat())).collect();
        }
        out
    };
    let mut stream = 0u64;
    let mut run = |label: &str, arity: usize, sizes: &dyn Fn(&[usize]) -> Vec<usize>, pred: &(dyn Fn(&[usize], &[usize]) -> Option<(String, String)> + Sync)| {
        let mut found = None;
        for ids in idx(arity) {
            stream += 1;
            if let Some((t, l, r)) = forall(exec, coverage, stream, &sizes(&ids), |t| pred(&ids, t)) {
                found = Some(Counterexample { coordinate: [ids.clone(), t].concat(), lhs: l, rhs: r });
                break;
            }
        }
        match found {
            None => Check::pass(label),
            Some(cx) => Check::fail(label, cx),
        }
    };

    // Coherence of the directed system, including the supplied maps themselves.
    let mut coherence = None;
    for (i, f) in sys.fusions.iter().enumerate() {
        if let Some(v) = f.homomorphism_violation() {
            coherence = Some(Counterexample { coordinate: vec![i], lhs: v, rhs: "homomorphism".into() });
            break;
        }
    }
    'outer: for a in 0..k {
        if coherence.is_some() {
            break;
        }
        if j(a, a).images != (0..g(a).order).collect::<Vec<_>>() {
            coherence = Some(Counterexample { coordinate: vec![a, a], lhs: "j_aa".into(), rhs: "id".into() });
            break;
        }
        for b in 0..k {
            if j(a, b).images != j(b, a).preimages {
                coherence = Some(Counterexample { coordinate: vec![a, b], lhs: "j_ab".into(), rhs: "j_ba^-1".into() });
                break 'outer;
            }
            for c in 0..k {
                let composite = j(a, b).then(j(b, c))?;
                if composite.images != j(a, c).images {
                    coherence = Some(Counterexample {
                        coordinate: vec![a, b, c],
                        lhs: format!("{:?}", j(a, c).images),
                        rhs: format!("{:?}", composite.images),
                    });
                    break 'outer;
                }
            }
        }
    }
    report.push(match coherence {
        None => Check::pass("fusion-coherence"),
        Some(cx) => Check::fail("fusion-coherence", cx),
    });

    report.push(run(
        "pair-group",
        2,
        &|ids| vec![sys.pair_order(ids[0], ids[1]); 3],
        &|ids, t| {
            let (a, b) = (ids[0], ids[1]);
            let (x, y, z) = (sys.pair(a, t[0]), sys.pair(a, t[1]), sys.pair(a, t[2]));
            let e = unit(a, b);
            if pmul(a, b, e, x) != x || pmul(a, b, x, e) != x {
                return Some((show(x), "unit law".into()));
            }
            if pmul(a, b, x, pinv(a, b, x)) != e || pmul(a, b, pinv(a, b, x), x) != e {
                return Some((show(x), "inverse law".into()));
            }
            differ(pmul(a, b, pmul(a, b, x, y), z), pmul(a, b, x, pmul(a, b, y, z)))
        },
    ));

    report.push(run(
        "transitive-associativity",
        4,
        &|ids| vec![sys.pair_order(ids[2], ids[3]), sys.pair_order(ids[1], ids[2]), sys.pair_order(ids[0], ids[1])],
        &|ids, t| {
            let (a, b, c, d) = (ids[0], ids[1], ids[2], ids[3]);
            let (x, y, z) = (sys.pair(c, t[0]), sys.pair(b, t[1]), sys.pair(a, t[2]));
            let left = tmul(a, b, d, tmul(b, c, d, x, y), z);
            let right = tmul(a, c, d, x, tmul(a, b, c, y, z));
            if left != right {
                return differ(left, right);
            }
            // Closed form with j = j_ab, j′ = j_bc, j″ = j_cd.
            let (ga, gb, gc, gd) = (g(a), g(b), g(c), g(d));
            let (al, be, ga_, de, mu, nu) = (x.left, x.right, y.left, y.right, z.left, z.right);
            let inner = j(c, b).apply(gc.prod(&[gc.inv(ga_), be, ga_]));
            let closed = GradedPair::new(
                gd.prod(&[al, j(c, d).apply(ga_), j(b, d).apply(mu)]),
                ga.mul(nu, j(b, a).apply(gb.prod(&[gb.inv(mu), de, inner, mu]))),
            );
            differ(left, closed)
        },
    ));

    report.push(run(
        "unit-laws",
        3,
        &|ids| vec![sys.pair_order(ids[0], ids[2])],
        &|ids, t| {
            let (a, b, c) = (ids[0], ids[1], ids[2]);
            let x = sys.pair(a, t[0]);
            if tmul(a, c, c, unit(c, c), x) != x {
                return Some((show(tmul(a, c, c, unit(c, c), x)), show(x)));
            }
            if tmul(a, a, c, x, unit(a, a)) != x {
                return Some((show(tmul(a, a, c, x, unit(a, a))), show(x)));
            }
            differ(tmul(a, b, c, unit(b, c), unit(a, b)), unit(a, c))
        },
    ));

    report.push(run(
        "transitive-matches-pair-product",
        1,
        &|ids| vec![sys.pair_order(ids[0], ids[0]); 2],
        &|ids, t| {
            let a = ids[0];
            let (x, y) = (sys.pair(a, t[0]), sys.pair(a, t[1]));
            differ(tmul(a, a, a, x, y), pmul(a, a, x, y))
        },
    ));

    report.push(run(
        "conjugation-compatibility",
        3,
        &|ids| vec![sys.pair_order(ids[0], ids[2]), sys.pair_order(ids[1], ids[2]), sys.pair_order(ids[0], ids[1])],
        &|ids, t| {
            let (a, b, c) = (ids[0], ids[1], ids[2]);
            let (w, be, al) = (sys.pair(a, t[0]), sys.pair(b, t[1]), sys.pair(a, t[2]));
            let (w1, w2) = pi(a, b, c, w);
            let lhs = pmul(a, c, pmul(a, c, w, tmul(a, b, c, be, al)), pinv(a, c, w));
            let rhs = tmul(a, b, c, pmul(b, c, w1, be), pmul(a, b, al, pinv(a, b, w2)));
            differ(lhs, rhs)
        },
    ));

    report.push(run(
        "coassociativity",
        4,
        &|ids| vec![sys.pair_order(ids[0], ids[3])],
        &|ids, t| {
            let (a, b, c, d) = (ids[0], ids[1], ids[2], ids[3]);
            let w = sys.pair(a, t[0]);
            let (w1, w2) = pi(a, b, d, w);
            let (w11, w12) = pi(b, c, d, w1);
            let (v1, v2) = pi(a, c, d, w);
            let (v21, v22) = pi(a, b, c, v2);
            differ((w11, w12, w2), (v1, v21, v22))
        },
    ));

    report.push(run(
        "counit-law",
        3,
        &|ids| vec![sys.pair_order(ids[0], ids[2])],
        &|ids, t| {
            let (a, b, c) = (ids[0], ids[1], ids[2]);
            let w = sys.pair(a, t[0]);
            let (w1, w2) = pi(a, b, c, w);
            if tmul(a, b, c, w1, unit(a, b)) != w {
                return Some((show(tmul(a, b, c, w1, unit(a, b))), show(w)));
            }
            differ(tmul(a, b, c, unit(b, c), w2), w)
        },
    ));

    report.push(run(
        "antipode-rule",
        3,
        &|ids| vec![sys.pair_order(ids[0], ids[2])],
        &|ids, t| {
            let (a, b, c) = (ids[0], ids[1], ids[2]);
            let w = sys.pair(a, t[0]);
            let (w1, w2) = pi(a, b, c, w);
            differ(tmul(a, b, c, pinv(b, c, w1), w2), unit(a, c))
        },
    ));

    report.push(run(
        "pi-homomorphism",
        3,
        &|ids| vec![sys.pair_order(ids[0], ids[2]); 2],
        &|ids, t| {
            let (a, b, c) = (ids[0], ids[1], ids[2]);
            let (x, y) = (sys.pair(a, t[0]), sys.pair(a, t[1]));
            let (x1, x2) = pi(a, b, c, x);
            let (y1, y2) = pi(a, b, c, y);
            differ(pi(a, b, c, pmul(a, c, x, y)), (pmul(b, c, x1, y1), pmul(a, b, x2, y2)))
        },
    ));

    report.push(run(
        "degenerate-projections",
        2,
        &|ids| vec![sys.pair_order(ids[0], ids[1])],
        &|ids, t| {
            // π^{c,b,b} has first leg id and π^{b,b,a} has second leg id.
            let (a, b) = (ids[0], ids[1]);
            let w = sys.pair(a, t[0]);
            if pi(a, a, b, w).0 != w {
                return Some((show(pi(a, a, b, w).0), show(w)));
            }
            if pi(a, b, b, w).1 != w {
                return Some((show(pi(a, b, b, w).1), show(w)));
            }
            if a == b {
                return differ(pi(a, a, a, w), (w, w));
            }
            None
        },
    ));

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Names → groups, for resolving system files.
pub fn build_system(file: &SystemFile, groups: &HashMap<String, Arc<FiniteGroup>>, fusions: &HashMap<String, FusionMap>) -> Result<GradedGroupSystem> {
    let gs = file
        .groups
        .iter()
        .map(|n| groups.get(n).cloned().ok_or_else(|| YdError::MalformedInput(format!("unknown group {n}"))))
        .collect::<Result<Vec<_>>>()?;
    let fs = file
        .fusions
        .iter()
        .map(|n| fusions.get(n).cloned().ok_or_else(|| YdError::MalformedInput(format!("unknown fusion {n}"))))
        .collect::<Result<Vec<_>>>()?;
    GradedGroupSystem::new(file.name.clone(), gs, fs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric3())
    }

    #[test]
    fn catalog_groups() {
        assert_eq!(FiniteGroup::cyclic(6).order(), 6);
        assert!(FiniteGroup::cyclic(6).is_abelian());
        assert_eq!(s3().order(), 6);
        assert!(!s3().is_abelian());
        let d4 = FiniteGroup::dihedral4();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::new("x", vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(FiniteGroup::new("x", vec![vec![0, 1]], 0).is_err());
        assert!(FiniteGroup::new("x", vec![], 0).is_err());
    }

    #[test]
    fn pair_product_examples() {
        let z6 = Arc::new(FiniteGroup::cyclic(6));
        let id = FusionMap::identity(z6.clone());
        let e = pair_unit(&id);
        let p = GradedPair::new(4, 5);
        assert_eq!(pair_product(e, p, &id).unwrap(), p);
        assert_eq!(pair_product(GradedPair::new(2, 3), GradedPair::new(5, 4), &id).unwrap(), GradedPair::new(1, 1));
        assert_eq!(pair_inverse(GradedPair::new(2, 3), &id).unwrap(), GradedPair::new(4, 3));
        assert!(pair_product(GradedPair::new(6, 0), e, &id).is_err());
    }

    #[test]
    fn pair_group_s3_against_search() {
        let g = s3();
        let j = FusionMap::inner(g.clone(), 1).unwrap();
        let n = g.order();
        let e = pair_unit(&j);
        for a in 0..n {
            for b in 0..n {
                let p = GradedPair::new(a, b);
                let found: Vec<GradedPair> = (0..n * n)
                    .map(|i| GradedPair::new(i / n, i % n))
                    .filter(|q| pair_product(p, *q, &j).unwrap() == e && pair_product(*q, p, &j).unwrap() == e)
                    .collect();
                assert_eq!(found, vec![pair_inverse(p, &j).unwrap()]);
                for c in 0..n {
                    let a2 = GradedPair::new(c, (a + c) % n);
                    let direct = pair_product(a2, pair_product(p, pair_inverse(a2, &j).unwrap(), &j).unwrap(), &j).unwrap();
                    assert_eq!(conjugate_grading(a2, p, &j).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn transitive_product_boundary_values() {
        let g = s3();
        let j = FusionMap::inner(g.clone(), 2).unwrap();
        let j2 = FusionMap::inner(g.clone(), 3).unwrap();
        let e = GradedPair::new(g.unit(), g.unit());
        for x in 0..6 {
            for y in 0..6 {
                let p = GradedPair::new(x, y);
                assert_eq!(transitive_product(e, p, &j, &j2).unwrap(), GradedPair::new(j2.apply(x), y));
                assert_eq!(transitive_product(p, e, &j, &j2).unwrap(), GradedPair::new(x, j.apply_inv(y)));
            }
        }
        let z6 = Arc::new(FiniteGroup::cyclic(6));
        let id = FusionMap::identity(z6);
        let r = transitive_product(GradedPair::new(1, 2), GradedPair::new(3, 5), &id, &id).unwrap();
        assert_eq!(r, GradedPair::new(4, 1));
    }

    #[test]
    fn projection_examples() {
        let g = s3();
        let id = FusionMap::identity(g.clone());
        for x in 0..6 {
            for y in 0..6 {
                let p = GradedPair::new(x, y);
                assert_eq!(project_pi(p, &id, &id).unwrap(), (p, p));
                let (p1, p2) = project_pi(p, &id, &id).unwrap();
                let e = GradedPair::new(0, 0);
                assert_eq!(transitive_product(p1, e, &id, &id).unwrap(), p);
                assert_eq!(transitive_product(e, p2, &id, &id).unwrap(), p);
            }
        }
        let e = GradedPair::new(0, 0);
        assert_eq!(project_pi(e, &id, &id).unwrap(), (e, e));
    }

    #[test]
    fn fusion_maps() {
        let g = s3();
        let z6 = Arc::new(FiniteGroup::cyclic(6));
        let d4 = Arc::new(FiniteGroup::dihedral4());
        assert!(matches!(FusionMap::new(g.clone(), d4, (0..6).collect()), Err(YdError::EmptyHom(_))));
        // Same order, but S3 and Z6 are not isomorphic: no bijection passes.
        assert!(FusionMap::new(g.clone(), z6, (0..6).collect()).is_err());
        let inner = FusionMap::inner(g.clone(), 1).unwrap();
        assert_eq!(inner.then(&inner.inverse()).unwrap(), FusionMap::identity(g));
    }

    #[test]
    fn trivial_system_passes() {
        let sys = GradedGroupSystem::constant("triv", Arc::new(FiniteGroup::trivial()), 3).unwrap();
        let r = verify_system_axioms(&sys, 0).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn bad_fusion_is_reported() {
        let z6 = Arc::new(FiniteGroup::cyclic(6));
        // Bijective but not a homomorphism.
        let bad = FusionMap::from_images_unchecked(z6.clone(), z6.clone(), vec![0, 2, 1, 3, 4, 5]).unwrap();
        let sys = GradedGroupSystem::new("bad", vec![z6.clone(), z6], vec![bad]).unwrap();
        let r = verify_system_axioms(&sys, 0).unwrap();
        assert!(!r.passed());
        assert!(!r.check("fusion-coherence").unwrap().passed);
    }

    #[test]
    fn oversized_systems_are_refused() {
        let big = Arc::new(FiniteGroup::cyclic(25));
        let sys = GradedGroupSystem::constant("big", big, 1).unwrap();
        assert!(matches!(verify_system_axioms(&sys, 0), Err(YdError::ClosureTooLarge { .. })));
        let sys = GradedGroupSystem::constant("long", Arc::new(FiniteGroup::trivial()), 5).unwrap();
        assert!(matches!(verify_system_axioms(&sys, 0), Err(YdError::ClosureTooLarge { .. })));
    }

    #[test]
    fn sampled_mode_records_seed() {
        let g = Arc::new(FiniteGroup::cyclic(13));
        let sys = GradedGroupSystem::constant("z13", g, 2).unwrap();
        let r = verify_system_axioms(&sys, 7).unwrap();
        assert_eq!(r.seed, Some(7));
        assert!(r.passed(), "{r}");
    }
}
