//! Bialgebras with a distributive law λ, their 0-automorphisms and λ-families.
//!
//! Maps act on tensor powers with the flat-index convention of
//! [`crate::exactmat`]; `μ: F⊗F → F`, `Δ: F → F⊗F`, `λ: F⊗F → F⊗F`.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Result, YdError};
use crate::exactmat::{ExactScalar, LinMap};
use crate::groupsys::FiniteGroup;
use crate::report::{map_check, run_checks, Check, CheckFn, Counterexample, VerificationReport};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimonad {
    name: String,
    dim: usize,
    mult: LinMap,
    unit: LinMap,
    comult: LinMap,
    counit: LinMap,
    lambda: LinMap,
    antipode: Option<LinMap>,
    braided: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BimonadFile {
    pub name: String,
    pub dim: usize,
    pub mult: LinMap,
    pub unit: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LinMap>,
    #[serde(default)]
    pub braided: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<LinMap>,
}

fn shape(what: &str, m: &LinMap, cod: usize, dom: usize) -> Result<()> {
    if m.shape() == (cod, dom) {
        Ok(())
    } else {
        Err(YdError::MalformedInput(format!(
            "{what} must be {cod}x{dom}, got {}x{}",
            m.cod(),
            m.dom()
        )))
    }
}

impl Bimonad {
    /// Checks shapes only; the axioms are checked by [`verify_bimonad`].
    /// With `lambda = None` the braided λ `h⊗k ↦ h₍₁₎k ⊗ h₍₂₎` is used.
    pub fn new(
        name: impl Into<String>,
        mult: LinMap,
        unit: LinMap,
        comult: LinMap,
        counit: LinMap,
        lambda: Option<LinMap>,
        antipode: Option<LinMap>,
    ) -> Result<Self> {
        let n = mult.cod();
        shape("mult", &mult, n, n * n)?;
        shape("unit", &unit, n, 1)?;
        shape("comult", &comult, n * n, n)?;
        shape("counit", &counit, 1, n)?;
        if let Some(l) = &lambda {
            shape("lambda", l, n * n, n * n)?;
        }
        if let Some(s) = &antipode {
            shape("antipode", s, n, n)?;
        }
        let braided = lambda.is_none();
        let lambda = match lambda {
            Some(l) => l,
            None => braided_lambda_raw(&mult, &comult, &LinMap::identity(n)),
        };
        Ok(Bimonad { name: name.into(), dim: n, mult, unit, comult, counit, lambda, antipode, braided })
    }

    pub fn from_file(f: &BimonadFile) -> Result<Self> {
        if f.lambda.is_none() && !f.braided {
            return Err(YdError::MalformedInput(format!(
                "bimonad {}: lambda missing and braided is false",
                f.name
            )));
        }
        let b = Self::new(
            f.name.clone(),
            f.mult.clone(),
            f.unit.clone(),
            f.comult.clone(),
            f.counit.clone(),
            f.lambda.clone(),
            f.antipode.clone(),
        )?;
        if b.dim != f.dim {
            return Err(YdError::MalformedInput(format!(
                "bimonad {}: dim {} but structure maps have dim {}",
                f.name, f.dim, b.dim
            )));
        }
        Ok(b)
    }

    pub fn to_file(&self) -> BimonadFile {
        BimonadFile {
            name: self.name.clone(),
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            lambda: if self.braided { None } else { Some(self.lambda.clone()) },
            braided: self.braided,
            antipode: self.antipode.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn lambda(&self) -> &LinMap {
        &self.lambda
    }

    pub fn antipode(&self) -> Option<&LinMap> {
        self.antipode.as_ref()
    }

    pub fn is_braided(&self) -> bool {
        self.braided
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.dim)
    }

    /// Same structure with a different λ, as a non-braided bimonad.
    pub fn with_lambda(&self, lambda: LinMap) -> Result<Self> {
        shape("lambda", &lambda, self.dim * self.dim, self.dim * self.dim)?;
        Ok(Bimonad { lambda, braided: false, ..self.clone() })
    }

    /// Same structure with `Δ` replaced; λ is kept as stored.
    pub fn with_comult(&self, comult: LinMap) -> Result<Self> {
        shape("comult", &comult, self.dim * self.dim, self.dim)?;
        Ok(Bimonad { comult, ..self.clone() })
    }

    pub fn with_mult(&self, mult: LinMap) -> Result<Self> {
        shape("mult", &mult, self.dim, self.dim * self.dim)?;
        Ok(Bimonad { mult, ..self.clone() })
    }

    /// `λ_α = (α⊗id)∘λ∘(id⊗α⁻¹)`; every member of a λ-family is built this way.
    pub fn lambda_at(&self, alpha: &LinMap, alpha_inv: &LinMap) -> Result<LinMap> {
        LinMap::chain(&[&alpha.kron(&self.id()), &self.lambda, &self.id().kron(alpha_inv)])
    }

    /// Left multiplication `L_c = μ∘(c⊗id)` by an element `c: k → F`.
    pub fn left_mult(&self, c: &LinMap) -> Result<LinMap> {
        self.mult.compose(&c.kron(&self.id()))
    }

    /// Product of two elements given as columns.
    pub fn product(&self, a: &LinMap, b: &LinMap) -> Result<LinMap> {
        self.mult.compose(&a.kron(b))
    }

    fn conv_legs(&self, u: &LinMap) -> Result<(LinMap, LinMap, LinMap)> {
        let n = self.dim;
        let pick = |d: usize, big: &LinMap, what: &str| match d {
            d if d == n => Ok(big.clone()),
            1 => Ok(LinMap::identity(1)),
            _ => Err(YdError::DimensionMismatch(format!("{what} of dim {d} is neither 1 nor {n}"))),
        };
        let m = pick(u.cod(), &self.mult, "codomain")?;
        let d = pick(u.dom(), &self.comult, "domain")?;
        let unit = pick(u.cod(), &self.unit, "codomain")?.compose(&pick(u.dom(), &self.counit, "domain")?)?;
        Ok((m, d, unit))
    }

    /// Convolution `u * v = μ∘(u⊗v)∘Δ` of maps between `F` and `k` (either end
    /// may be `k`, in which case its μ or Δ is the identity of `k`).
    pub fn convolve(&self, u: &LinMap, v: &LinMap) -> Result<LinMap> {
        if u.shape() != v.shape() {
            return Err(YdError::DimensionMismatch("convolution of maps of different shapes".into()));
        }
        let (m, d, _) = self.conv_legs(u)?;
        LinMap::chain(&[&m, &u.kron(v), &d])
    }

    /// The unit `η∘ε` of the convolution algebra that `u` lives in.
    pub fn convolution_unit(&self, like: &LinMap) -> Result<LinMap> {
        Ok(self.conv_legs(like)?.2)
    }

    /// Solves `u * x = unit` exactly and confirms `x * u = unit`.
    pub fn convolution_inverse(&self, u: &LinMap) -> Result<LinMap> {
        let (cod, dom) = u.shape();
        let unit = self.convolution_unit(u)?;
        let k = cod * dom;
        let mut system = LinMap::zeros(k, k);
        for e in 0..k {
            let mut basis = LinMap::zeros(cod, dom);
            basis.set(e / dom, e % dom, ExactScalar::one());
            let image = self.convolve(u, &basis)?;
            for (r, v) in image.entries().iter().enumerate() {
                system.set(r, e, v.clone());
            }
        }
        let rhs = LinMap::new(k, 1, unit.entries().to_vec())?;
        let x = system.solve(&rhs)?;
        let x = LinMap::new(cod, dom, x.entries().to_vec())?;
        if self.convolve(&x, u)? != unit {
            return Err(YdError::NotInvertible);
        }
        Ok(x)
    }

    /// The trivial bialgebra `k`.
    pub fn trivial() -> Self {
        let one = LinMap::identity(1);
        Self::new("k", one.clone(), one.clone(), one.clone(), one.clone(), None, Some(one)).expect("k")
    }

    /// The group algebra of `Z_2` on the basis `1, g`.
    pub fn group_algebra_z2() -> Self {
        let mult = structure_mult(2, |a, b| vec![(1, (a + b) % 2)]);
        let comult = structure_comult(2, |a| vec![(1, a, a)]);
        Self::new(
            "cyclic2",
            mult,
            LinMap::basis(2, 0),
            comult,
            LinMap::from_ints(&[[1, 1]]),
            None,
            Some(LinMap::identity(2)),
        )
        .expect("QZ2")
    }

    /// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`
    /// with `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
    pub fn sweedler() -> Self {
        let mult = structure_mult(4, |a, b| match (a, b) {
            (0, b) => vec![(1, b)],
            (a, 0) => vec![(1, a)],
            (1, 1) => vec![(1, 0)],
            (1, 2) => vec![(1, 3)],
            (1, 3) => vec![(1, 2)],
            (2, 1) => vec![(-1, 3)],
            (3, 1) => vec![(-1, 2)],
            _ => vec![],
        });
        let comult = structure_comult(4, |a| match a {
            0 => vec![(1, 0, 0)],
            1 => vec![(1, 1, 1)],
            2 => vec![(1, 2, 0), (1, 1, 2)],
            _ => vec![(1, 3, 1), (1, 0, 3)],
        });
        let antipode = LinMap::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]);
        Self::new(
            "sweedler",
            mult,
            LinMap::basis(4, 0),
            comult,
            LinMap::from_ints(&[[1, 1, 0, 0]]),
            None,
            Some(antipode),
        )
        .expect("H4")
    }
}

/// `μ` from a rule giving `e_a·e_b` as a list of `(coefficient, basis index)`.
pub fn structure_mult(n: usize, rule: impl Fn(usize, usize) -> Vec<(i64, usize)>) -> LinMap {
    let mut m = LinMap::zeros(n, n * n);
    for a in 0..n {
        for b in 0..n {
            for (c, k) in rule(a, b) {
                m.set(k, a * n + b, m.get(k, a * n + b) + &ExactScalar::from_int(c));
            }
        }
    }
    m
}

/// `Δ` from a rule giving `Δe_a` as a list of `(coefficient, left, right)`.
pub fn structure_comult(n: usize, rule: impl Fn(usize) -> Vec<(i64, usize, usize)>) -> LinMap {
    let mut m = LinMap::zeros(n * n, n);
    for a in 0..n {
        for (c, l, r) in rule(a) {
            m.set(l * n + r, a, m.get(l * n + r, a) + &ExactScalar::from_int(c));
        }
    }
    m
}

/// `φ_c` on Sweedler's algebra: fixes `1, g` and scales `x, gx` by `c`.
pub fn sweedler_phi(c: ExactScalar) -> LinMap {
    let mut m = LinMap::identity(4);
    m.set(2, 2, c.clone());
    m.set(3, 3, c);
    m
}

fn braided_lambda_raw(mult: &LinMap, comult: &LinMap, alpha: &LinMap) -> LinMap {
    let n = alpha.cod();
    let id = LinMap::identity(n);
    LinMap::chain(&[
        &mult.kron(&id),
        &alpha.kron(&LinMap::flip(n, n)),
        &comult.kron(&id),
    ])
    .expect("shapes fixed by construction")
}

/// `λ_α(h⊗k) = α(h₍₁₎)k ⊗ h₍₂₎`, i.e. `(μ⊗id)∘(α⊗flip)∘(Δ⊗id)`.
pub fn braided_lambda(b: &Bimonad, alpha: &ZeroAutomorphism) -> Result<LinMap> {
    if alpha.map.cod() != b.dim {
        return Err(YdError::DimensionMismatch(format!(
            "automorphism of dim {} on bimonad {} of dim {}",
            alpha.map.cod(),
            b.name,
            b.dim
        )));
    }
    Ok(braided_lambda_raw(&b.mult, &b.comult, &alpha.map))
}

/// `λ_α = (μ⊗id)∘(α⊗τ)∘(Δ⊗id)` for a `τ: F⊗F → F⊗F` that is itself a
/// 1-cell for both distributive laws. `alpha` may be any linear map.
pub fn lambda_from_tau(b: &Bimonad, tau: &LinMap, alpha: &LinMap) -> Result<LinMap> {
    let n = b.dim;
    shape("tau", tau, n * n, n * n)?;
    shape("alpha", alpha, n, n)?;
    let laws = distributive_law_checks(b, b, n, tau, tau);
    if let Some(c) = laws.iter().find(|c| !c.passed) {
        return Err(YdError::PreconditionFailed(format!("tau fails {}", c.label)));
    }
    LinMap::chain(&[&b.mult.kron(&b.id()), &alpha.kron(tau), &b.comult.kron(&b.id())])
}

/// Sides of `ψ∘(μ′⊗id_X) = (id_X⊗μ)∘(ψ⊗id_F)∘(id_F′⊗ψ)` for `ψ: F′⊗X → X⊗F`.
pub fn monadic_mult_sides(fp: &Bimonad, f: &Bimonad, m: usize, psi: &LinMap) -> Result<(LinMap, LinMap)> {
    let x = LinMap::identity(m);
    let lhs = psi.compose(&fp.mult.kron(&x))?;
    let rhs = LinMap::chain(&[&x.kron(&f.mult), &psi.kron(&f.id()), &fp.id().kron(psi)])?;
    Ok((lhs, rhs))
}

/// Sides of `ψ∘(η′⊗id_X) = id_X⊗η`.
pub fn monadic_unit_sides(fp: &Bimonad, f: &Bimonad, m: usize, psi: &LinMap) -> Result<(LinMap, LinMap)> {
    let x = LinMap::identity(m);
    Ok((psi.compose(&fp.unit.kron(&x))?, x.kron(&f.unit)))
}

/// Sides of `(id_F′⊗φ)∘(φ⊗id_F)∘(id_X⊗Δ) = (Δ′⊗id_X)∘φ` for `φ: X⊗F → F′⊗X`.
pub fn comonadic_comult_sides(fp: &Bimonad, f: &Bimonad, m: usize, phi: &LinMap) -> Result<(LinMap, LinMap)> {
    let x = LinMap::identity(m);
    let lhs = LinMap::chain(&[&fp.id().kron(phi), &phi.kron(&f.id()), &x.kron(&f.comult)])?;
    let rhs = fp.comult.kron(&x).compose(phi)?;
    Ok((lhs, rhs))
}

/// Sides of `(ε′⊗id_X)∘φ = id_X⊗ε`.
pub fn comonadic_counit_sides(fp: &Bimonad, f: &Bimonad, m: usize, phi: &LinMap) -> Result<(LinMap, LinMap)> {
    let x = LinMap::identity(m);
    Ok((fp.counit.kron(&x).compose(phi)?, x.kron(&f.counit)))
}

/// The four distributive laws for a carrier of dimension `m`, evaluated eagerly.
pub(crate) fn distributive_law_checks(fp: &Bimonad, f: &Bimonad, m: usize, psi: &LinMap, phi: &LinMap) -> Vec<Check> {
    let eval = |label: &str, r: Result<(LinMap, LinMap)>| match r {
        Ok((l, r)) => Check::maps(label, &l, &r),
        Err(e) => Check::error(label, e.to_string()),
    };
    vec![
        eval("monadic-mult", monadic_mult_sides(fp, f, m, psi)),
        eval("monadic-unit", monadic_unit_sides(fp, f, m, psi)),
        eval("comonadic-comult", comonadic_comult_sides(fp, f, m, phi)),
        eval("comonadic-counit", comonadic_counit_sides(fp, f, m, phi)),
    ]
}

/// Checks the bialgebra axioms, the compatibilities with λ and both
/// distributive laws for `(F, λ)`.
pub fn verify_bimonad(b: &Bimonad) -> VerificationReport {
    let (id_owned, one_owned) = (b.id(), LinMap::identity(1));
    let (id, one) = (&id_owned, &one_owned);
    let (mu, eta, delta, eps, lam) = (&b.mult, &b.unit, &b.comult, &b.counit, &b.lambda);
    let mut checks: Vec<CheckFn> = vec![
        map_check("mult-associativity", || {
            Ok((mu.compose(&mu.kron(id))?, mu.compose(&id.kron(mu))?))
        }),
        map_check("mult-unit-left", || Ok((mu.compose(&eta.kron(id))?, id.clone()))),
        map_check("mult-unit-right", || Ok((mu.compose(&id.kron(eta))?, id.clone()))),
        map_check("comult-coassociativity", || {
            Ok((delta.kron(id).compose(delta)?, id.kron(delta).compose(delta)?))
        }),
        map_check("counit-left", || Ok((eps.kron(id).compose(delta)?, id.clone()))),
        map_check("counit-right", || Ok((id.kron(eps).compose(delta)?, id.clone()))),
        map_check("mu-delta-compatibility", || {
            let rhs = LinMap::chain(&[&id.kron(mu), &lam.kron(id), &id.kron(delta)])?;
            Ok((delta.compose(mu)?, rhs))
        }),
        map_check("counit-multiplicative", || Ok((eps.kron(eps), eps.compose(mu)?))),
        map_check("unit-comultiplicative", || Ok((delta.compose(eta)?, eta.kron(eta)))),
        map_check("counit-unit", || Ok((eps.compose(eta)?, one.clone()))),
        map_check("lambda-monadic-mult", || monadic_mult_sides(b, b, b.dim, lam)),
        map_check("lambda-monadic-unit", || monadic_unit_sides(b, b, b.dim, lam)),
        map_check("lambda-comonadic-comult", || comonadic_comult_sides(b, b, b.dim, lam)),
        map_check("lambda-comonadic-counit", || comonadic_counit_sides(b, b, b.dim, lam)),
    ];
    if let Some(s) = &b.antipode {
        let unit = eta.compose(eps).expect("shapes");
        let u2 = unit.clone();
        checks.push(map_check("antipode-left", move || {
            Ok((LinMap::chain(&[mu, &s.kron(id), delta])?, unit.clone()))
        }));
        checks.push(map_check("antipode-right", move || {
            Ok((LinMap::chain(&[mu, &id.kron(s), delta])?, u2.clone()))
        }));
    }
    run_checks(format!("bimonad {}", b.name), checks)
}

/// An invertible endomorphism that is an algebra map, a coalgebra map and
/// compatible with λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroAutomorphism {
    owner: Arc<Bimonad>,
    map: LinMap,
    inverse: LinMap,
}

impl ZeroAutomorphism {
    /// Runs [`verify_zero_automorphism`] and refuses a failing map.
    pub fn new(owner: Arc<Bimonad>, map: LinMap) -> Result<Self> {
        let report = verify_zero_automorphism(&owner, &map)?;
        if let Some(c) = report.checks.iter().find(|c| !c.passed) {
            return Err(YdError::PreconditionFailed(format!(
                "not a 0-automorphism of {}: {} fails",
                owner.name, c.label
            )));
        }
        let inverse = map.inverse()?;
        Ok(ZeroAutomorphism { owner, map, inverse })
    }

    pub fn identity(owner: Arc<Bimonad>) -> Self {
        let map = owner.id();
        ZeroAutomorphism { owner, inverse: map.clone(), map }
    }

    pub fn owner(&self) -> &Arc<Bimonad> {
        &self.owner
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    pub fn inverse(&self) -> &LinMap {
        &self.inverse
    }

    pub fn inverted(&self) -> ZeroAutomorphism {
        ZeroAutomorphism { owner: self.owner.clone(), map: self.inverse.clone(), inverse: self.map.clone() }
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &ZeroAutomorphism) -> Result<ZeroAutomorphism> {
        Ok(ZeroAutomorphism {
            owner: self.owner.clone(),
            map: self.map.compose(&other.map)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.map == self.owner.id()
    }
}

/// Checks invertibility, the algebra-map and coalgebra-map identities and
/// `(α⁻¹⊗id)∘λ∘(α⊗id) = (id⊗α)∘λ∘(id⊗α⁻¹)`.
pub fn verify_zero_automorphism(b: &Bimonad, m: &LinMap) -> Result<VerificationReport> {
    shape("automorphism", m, b.dim, b.dim)?;
    let start = Instant::now();
    let inv = match m.inverse() {
        Ok(inv) => inv,
        Err(_) => {
            let mut r = VerificationReport::new(format!("0-automorphism of {}", b.name));
            r.push(Check::fail(
                "invertible",
                Counterexample { coordinate: vec![], lhs: "singular".into(), rhs: "invertible".into() },
            ));
            r.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(r);
        }
    };
    let id = b.id();
    let (inv, id) = (&inv, &id);
    let checks: Vec<CheckFn> = vec![
        Box::new(|| Check::pass("invertible")),
        map_check("algebra-map-mult", move || Ok((m.compose(&b.mult)?, b.mult.compose(&m.kron(m))?))),
        map_check("algebra-map-unit", move || Ok((m.compose(&b.unit)?, b.unit.clone()))),
        map_check("coalgebra-map-comult", move || Ok((b.comult.compose(m)?, m.kron(m).compose(&b.comult)?))),
        map_check("coalgebra-map-counit", move || Ok((b.counit.compose(m)?, b.counit.clone()))),
        map_check("lambda-compatibility", move || {
            Ok((
                LinMap::chain(&[&inv.kron(id), &b.lambda, &m.kron(id)])?,
                LinMap::chain(&[&id.kron(m), &b.lambda, &id.kron(inv)])?,
            ))
        }),
    ];
    let mut r = run_checks(format!("0-automorphism of {}", b.name), checks);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// A finite group of 0-automorphisms with its multiplication table.
/// Element 0 is the identity; `table.mul(a, b)` is the index of `a ∘ b`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    owner: Arc<Bimonad>,
    elements: Vec<ZeroAutomorphism>,
    table: Arc<FiniteGroup>,
    index: HashMap<LinMap, usize>,
}

impl AutGroup {
    pub fn trivial(owner: Arc<Bimonad>) -> Self {
        group_closure(&owner, &[], 1).expect("trivial closure")
    }

    pub fn owner(&self) -> &Arc<Bimonad> {
        &self.owner
    }

    pub fn elements(&self) -> &[ZeroAutomorphism] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ZeroAutomorphism {
        &self.elements[i]
    }

    pub fn table(&self) -> &Arc<FiniteGroup> {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &LinMap) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of `a`, or a [`YdError::GroupMismatch`] naming the group.
    pub fn locate(&self, a: &ZeroAutomorphism) -> Result<usize> {
        if *a.owner != *self.owner {
            return Err(YdError::GroupMismatch(format!(
                "automorphism of {} used with the group of {}",
                a.owner.name, self.owner.name
            )));
        }
        self.index_of(&a.map).ok_or_else(|| {
            YdError::GroupMismatch(format!("automorphism is outside the working set of {}", self.owner.name))
        })
    }
}

/// Closes `gens` and their inverses under composition, deduplicating by exact
/// equality. Fails once more than `cap` elements have been produced.
pub fn group_closure(b: &Arc<Bimonad>, gens: &[LinMap], cap: usize) -> Result<AutGroup> {
    let mut steps = Vec::new();
    for g in gens {
        let a = ZeroAutomorphism::new(b.clone(), g.clone())?;
        steps.push(a.inverted());
        steps.push(a);
    }
    let mut elements = vec![ZeroAutomorphism::identity(b.clone())];
    let mut index: HashMap<LinMap, usize> = HashMap::from([(b.id(), 0)]);
    let mut k = 0;
    while k < elements.len() {
        for s in &steps {
            let next = s.then_after(&elements[k])?;
            if !index.contains_key(&next.map) {
                if elements.len() >= cap {
                    return Err(YdError::ClosureTooLarge { cap });
                }
                index.insert(next.map.clone(), elements.len());
                elements.push(next);
            }
        }
        k += 1;
    }
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for (a, x) in elements.iter().enumerate() {
        for (c, y) in elements.iter().enumerate() {
            let p = x.map.compose(&y.map)?;
            table[a][c] = *index.get(&p).ok_or_else(|| {
                YdError::PreconditionFailed("working set not closed under composition".into())
            })?;
        }
    }
    let table = Arc::new(FiniteGroup::new(format!("Aut0({})", b.name), table, 0)?);
    Ok(AutGroup { owner: b.clone(), elements, table, index })
}

/// `λ_α` for every `α` of a finite automorphism group, indexed like the group.
#[derive(Debug, Clone)]
pub struct LambdaFamily {
    group: Arc<AutGroup>,
    members: Vec<LinMap>,
}

impl LambdaFamily {
    pub fn new(group: Arc<AutGroup>) -> Result<Self> {
        let b = group.owner.clone();
        let members = group
            .elements
            .iter()
            .map(|a| b.lambda_at(&a.map, &a.inverse))
            .collect::<Result<Vec<_>>>()?;
        Ok(LambdaFamily { group, members })
    }

    /// Replaces one member, e.g. to test that the verifier notices.
    pub fn with_member(mut self, i: usize, lambda: LinMap) -> Self {
        self.members[i] = lambda;
        self
    }

    pub fn group(&self) -> &Arc<AutGroup> {
        &self.group
    }

    pub fn member(&self, i: usize) -> &LinMap {
        &self.members[i]
    }

    pub fn members(&self) -> &[LinMap] {
        &self.members
    }
}

/// Checks the identities relating the members of a λ-family, over all
/// pairs of elements, plus the distributive laws for each member.
pub fn verify_lambda_consequences(fam: &LambdaFamily) -> Result<VerificationReport> {
    let grp = &fam.group;
    let b = &grp.owner;
    if fam.members[0] != b.lambda {
        return Err(YdError::PreconditionFailed("family member at the identity differs from λ".into()));
    }
    let n = grp.order();
    let t = &grp.table;
    let id = b.id();
    let lam = &b.lambda;
    let a = |i: usize| &grp.elements[i].map;
    let ai = |i: usize| &grp.elements[i].inverse;
    let l = |i: usize| &fam.members[i];
    type Sides = Result<(LinMap, LinMap)>;
    let rules: Vec<(&str, Box<dyn Fn(usize, usize) -> Sides + Send + Sync>)> = vec![
        ("lambda-alpha-beta", Box::new(|x, y| {
            Ok((l(t.mul(x, y)).clone(), LinMap::chain(&[&a(x).kron(ai(y)), lam, &a(y).kron(ai(x))])?))
        })),
        ("l1", Box::new(|x, _| Ok((l(x).clone(), LinMap::chain(&[&a(x).kron(&id), lam, &id.kron(ai(x))])?)))),
        ("l2", Box::new(|x, _| Ok((l(x).clone(), LinMap::chain(&[&id.kron(ai(x)), lam, &a(x).kron(&id)])?)))),
        ("l3", Box::new(|x, y| {
            Ok((l(t.mul(x, y)).clone(), LinMap::chain(&[&a(x).kron(&id), l(y), &id.kron(ai(x))])?))
        })),
        ("l3'", Box::new(|x, y| {
            Ok((id.kron(a(y)).compose(l(t.mul(x, y)))?, l(x).compose(&a(y).kron(&id))?))
        })),
        ("l3''", Box::new(|x, y| {
            Ok((l(t.mul(x, y)).compose(&id.kron(a(x)))?, a(x).kron(&id).compose(l(y))?))
        })),
        ("l4", Box::new(|x, y| {
            Ok((l(t.mul(x, y)).clone(), LinMap::chain(&[&id.kron(ai(y)), l(x), &a(y).kron(&id)])?))
        })),
        ("l5", Box::new(|x, _| Ok((lam.compose(&a(x).kron(&id))?, id.kron(a(x)).compose(l(x))?)))),
        ("l6", Box::new(|x, _| Ok((l(x).compose(&ai(x).kron(&id))?, id.kron(ai(x)).compose(lam)?)))),
        ("l7", Box::new(|x, _| Ok((lam.compose(&id.kron(ai(x)))?, ai(x).kron(&id).compose(l(x))?)))),
        ("l8", Box::new(|x, y| {
            let w = ai(x).compose(a(y))?;
            Ok((l(x).compose(&w.kron(&id))?, id.kron(&w).compose(l(y))?))
        })),
    ];
    let mut checks: Vec<CheckFn> = rules
        .iter()
        .map(|(label, rule)| -> CheckFn {
            let label = *label;
            Box::new(move || {
                for x in 0..n {
                    for y in 0..n {
                        match rule(x, y) {
                            Ok((lhs, rhs)) => {
                                if let Some(d) = lhs.first_difference(&rhs) {
                                    return Check::fail(
                                        label,
                                        Counterexample {
                                            coordinate: vec![x, y, d.row, d.col],
                                            lhs: d.lhs.to_string(),
                                            rhs: d.rhs.to_string(),
                                        },
                                    );
                                }
                            }
                            Err(e) => return Check::error(label, e.to_string()),
                        }
                    }
                }
                Check::pass(label)
            })
        })
        .collect();
    checks.push(Box::new(move || {
        let label = "distributive-laws";
        for x in 0..n {
            for c in distributive_law_checks(b, b, b.dim, l(x), l(x)) {
                if let Some(mut cx) = c.counterexample {
                    cx.coordinate.insert(0, x);
                    return Check::fail(label, cx);
                }
            }
        }
        Check::pass(label)
    }));
    let mut report = run_checks(format!("lambda family of {}", b.name), checks);
    report.note("coordinates are (alpha, beta, row, col) with alpha, beta indexing the working set");
    Ok(report)
}
