//! Convolution of 2-cells, pairs in involution and the isomorphisms they
//! induce between graded components.
//!
//! A character `f: F′ → k` is a `1×n′` row, a grouplike `g: k → F′` an `n′×1`
//! column. The 2-cell `gf: F′ → F′`, `h ↦ f(h)·g`, is the matrix product `g∘f`.

use std::sync::Arc;
use std::time::Instant;

use crate::bimonad::{distributive_law_checks, Bimonad, ZeroAutomorphism};
use crate::error::{Result, YdError};
use crate::exactmat::LinMap;
use crate::report::{map_check, run_checks, Check, CheckFn, Counterexample, VerificationReport};
use crate::ydcat::{verify_yd, GradedYDObject, HomGroups};

/// `u * v = μ∘(u⊗v)∘Δ`; either end may be `k`.
pub fn convolution(b: &Bimonad, u: &LinMap, v: &LinMap) -> Result<LinMap> {
    b.convolve(u, v)
}

/// Exact solve of `u * x = η∘ε`, confirmed on the other side.
pub fn convolution_inverse(b: &Bimonad, u: &LinMap) -> Result<LinMap> {
    b.convolution_inverse(u)
}

fn mismatch(what: &str, b: &Bimonad, m: &LinMap, cod: usize, dom: usize) -> Result<()> {
    if m.shape() == (cod, dom) {
        Ok(())
    } else {
        Err(YdError::DimensionMismatch(format!(
            "{what} over {} must be {cod}x{dom}, got {}x{}",
            b.name(),
            m.cod(),
            m.dom()
        )))
    }
}

/// An algebra map `f: F′ → k` with its convolution inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    owner: Arc<Bimonad>,
    row: LinMap,
    conv_inverse: LinMap,
}

impl Character {
    pub fn new(owner: Arc<Bimonad>, row: LinMap) -> Result<Self> {
        mismatch("character", &owner, &row, 1, owner.dim())?;
        character_violation(&owner, &row)?;
        let conv_inverse = owner.convolution_inverse(&row)?;
        if let Some(s) = owner.antipode() {
            if row.compose(s)? != conv_inverse {
                return Err(YdError::PreconditionFailed("f∘S differs from the solved inverse".into()));
            }
        }
        Ok(Character { owner, row, conv_inverse })
    }

    /// Skips every check; verifiers re-check characters they are handed.
    pub fn raw(owner: Arc<Bimonad>, row: LinMap, conv_inverse: LinMap) -> Self {
        Character { owner, row, conv_inverse }
    }

    /// The counit, the unit of the character group.
    pub fn counit(owner: Arc<Bimonad>) -> Self {
        let e = owner.counit().clone();
        Character { owner, row: e.clone(), conv_inverse: e }
    }

    pub fn owner(&self) -> &Arc<Bimonad> {
        &self.owner
    }

    pub fn row(&self) -> &LinMap {
        &self.row
    }

    pub fn conv_inverse(&self) -> &LinMap {
        &self.conv_inverse
    }
}

fn character_violation(b: &Bimonad, row: &LinMap) -> Result<()> {
    if row.compose(b.mult())? != row.kron(row) {
        return Err(YdError::PreconditionFailed("character is not multiplicative".into()));
    }
    if row.compose(b.unit())? != LinMap::identity(1) {
        return Err(YdError::PreconditionFailed("character does not send 1 to 1".into()));
    }
    Ok(())
}

/// A coalgebra map `g: k → F′` with its convolution inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrouplikeElement {
    owner: Arc<Bimonad>,
    col: LinMap,
    conv_inverse: LinMap,
}

impl GrouplikeElement {
    pub fn new(owner: Arc<Bimonad>, col: LinMap) -> Result<Self> {
        mismatch("grouplike", &owner, &col, owner.dim(), 1)?;
        grouplike_violation(&owner, &col)?;
        let conv_inverse = owner.convolution_inverse(&col)?;
        if let Some(s) = owner.antipode() {
            if s.compose(&col)? != conv_inverse {
                return Err(YdError::PreconditionFailed("S∘g differs from the solved inverse".into()));
            }
        }
        Ok(GrouplikeElement { owner, col, conv_inverse })
    }

    /// Skips every check; verifiers re-check grouplikes they are handed.
    pub fn raw(owner: Arc<Bimonad>, col: LinMap, conv_inverse: LinMap) -> Self {
        GrouplikeElement { owner, col, conv_inverse }
    }

    pub fn unit(owner: Arc<Bimonad>) -> Self {
        let e = owner.unit().clone();
        GrouplikeElement { owner, col: e.clone(), conv_inverse: e }
    }

    pub fn owner(&self) -> &Arc<Bimonad> {
        &self.owner
    }

    pub fn col(&self) -> &LinMap {
        &self.col
    }

    pub fn conv_inverse(&self) -> &LinMap {
        &self.conv_inverse
    }
}

fn grouplike_violation(b: &Bimonad, col: &LinMap) -> Result<()> {
    if b.comult().compose(col)? != col.kron(col) {
        return Err(YdError::PreconditionFailed("g is not grouplike: Δg != g⊗g".into()));
    }
    if b.counit().compose(col)? != LinMap::identity(1) {
        return Err(YdError::PreconditionFailed("g is not grouplike: ε(g) != 1".into()));
    }
    Ok(())
}

/// Data for the twisted pair `(f, g)` and the grading `(α, β)` it is meant to
/// match, with `β̃ = jβj⁻¹ ∈ G(F′)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionPair {
    pub f: Character,
    pub g: GrouplikeElement,
    pub alpha: ZeroAutomorphism,
    pub beta: ZeroAutomorphism,
    pub beta_tilde: ZeroAutomorphism,
}

impl InvolutionPair {
    /// `F = F′` and `β̃ = β`.
    pub fn endo(f: Character, g: GrouplikeElement, alpha: ZeroAutomorphism, beta: ZeroAutomorphism) -> Result<Self> {
        Self::new(f, g, alpha, beta.clone(), beta)
    }

    /// `β̃` read off through the fusion map of `hom`.
    pub fn with_fusion(
        f: Character,
        g: GrouplikeElement,
        alpha: ZeroAutomorphism,
        beta: ZeroAutomorphism,
        hom: &HomGroups,
    ) -> Result<Self> {
        let b = hom.source().locate(&beta)?;
        let bt = hom.target().element(hom.fusion().apply(b)).clone();
        Self::new(f, g, alpha, beta, bt)
    }

    pub fn new(
        f: Character,
        g: GrouplikeElement,
        alpha: ZeroAutomorphism,
        beta: ZeroAutomorphism,
        beta_tilde: ZeroAutomorphism,
    ) -> Result<Self> {
        let fp = f.owner.clone();
        if *g.owner != *fp || **alpha.owner() != *fp || **beta_tilde.owner() != *fp {
            return Err(YdError::MalformedInput("f, g, alpha and beta~ must live on the same bimonad".into()));
        }
        Ok(InvolutionPair { f, g, alpha, beta, beta_tilde })
    }

    pub fn target(&self) -> &Arc<Bimonad> {
        &self.f.owner
    }

    pub fn source(&self) -> &Arc<Bimonad> {
        self.beta.owner()
    }

    /// `g⁻¹f` and `gf⁻¹` as endomorphisms of `F′`.
    fn decorations(&self) -> Result<(LinMap, LinMap)> {
        Ok((self.g.conv_inverse.compose(&self.f.row)?, self.g.col.compose(&self.f.conv_inverse)?))
    }
}

/// The three equivalent forms of the pairing condition and their agreement.
pub fn check_involution_pair(p: &InvolutionPair) -> Result<VerificationReport> {
    let start = Instant::now();
    let fp = p.target().clone();
    let (gif, gfi) = p.decorations()?;
    let (a, bt) = (p.alpha.map(), p.beta_tilde.map());
    let conv = |u: &LinMap, v: &LinMap| fp.convolve(u, v);
    let checks: Vec<CheckFn> = vec![
        map_check("form-conjugate", || Ok((a.clone(), conv(&conv(&gif, bt)?, &gfi)?))),
        map_check("form-left", || Ok((conv(a, &gif)?, conv(&gif, bt)?))),
        map_check("form-right", || Ok((conv(&gfi, a)?, conv(bt, &gfi)?))),
    ];
    let mut r = run_checks(format!("pair in involution over {}", fp.name()), checks);
    let verdicts: Vec<bool> = r.checks.iter().map(|c| c.passed).collect();
    if verdicts.iter().all(|&v| v == verdicts[0]) {
        r.push(Check::pass("forms-agree"));
    } else {
        r.push(Check::fail(
            "forms-agree",
            Counterexample { coordinate: vec![], lhs: format!("{verdicts:?}"), rhs: "all equal".into() },
        ));
    }
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// `λ_u = (μ⊗id)∘(u⊗τ)∘(Δ⊗id)` for an arbitrary endomorphism `u`.
fn tau_lambda(b: &Bimonad, tau: &LinMap, u: &LinMap) -> Result<LinMap> {
    LinMap::chain(&[&b.mult().kron(&b.id()), &u.kron(tau), &b.comult().kron(&b.id())])
}

/// `(f⊗id)∘Δ`, i.e. `h ↦ f(h₍₁₎)h₍₂₎`.
fn smear(b: &Bimonad, f: &LinMap) -> Result<LinMap> {
    f.kron(&b.id()).compose(b.comult())
}

/// The two chains that move `f` and `g` through `λ′_β̃` when every `λ′_u` of
/// `F′` has the form `(μ⊗id)∘(u⊗τ)∘(Δ⊗id)`.
pub fn lambda_helper_identities(p: &InvolutionPair, tau: &LinMap) -> Result<VerificationReport> {
    let fp = p.target().clone();
    character_violation(&fp, &p.f.row)?;
    grouplike_violation(&fp, &p.g.col)?;
    let id = fp.id();
    let form = crate::bimonad::lambda_from_tau(&fp, tau, &id)?;
    if form != *fp.lambda() {
        return Err(YdError::PreconditionFailed(format!("lambda of {} is not induced by the given tau", fp.name())));
    }
    let (gif, gfi) = p.decorations()?;
    let (a, bt) = (p.alpha.map(), p.beta_tilde.map());
    let lam = |u: &LinMap| tau_lambda(&fp, tau, u);
    let lg = fp.left_mult(&p.g.col)?;
    let lgi = fp.left_mult(&p.g.conv_inverse)?;
    let (sf, sfi) = (smear(&fp, &p.f.row)?, smear(&fp, &p.f.conv_inverse)?);
    let (lam_a, lam_bt) = (lam(a)?, lam(bt)?);
    let (fpr, lamr, idr) = (&fp, &lam_bt, &id);
    let checks: Vec<CheckFn> = vec![
        map_check("tau-form-alpha", || Ok((fpr.lambda_at(a, p.alpha.inverse())?, lam_a.clone()))),
        map_check("tau-form-beta-tilde", || Ok((fpr.lambda_at(bt, p.beta_tilde.inverse())?, lamr.clone()))),
        map_check("LB", || {
            let lhs = LinMap::chain(&[&idr.kron(&sfi), lamr, &idr.kron(&lg)])?;
            Ok((lhs, lam(&fpr.convolve(bt, &gfi)?)?))
        }),
        map_check("LA1", || {
            let lhs = LinMap::chain(&[&lgi.kron(idr), lamr, &sf.kron(idr)])?;
            Ok((lhs, lam(&fpr.convolve(&gif, bt)?)?))
        }),
        map_check("LA2", || Ok((lam(&fpr.convolve(&gif, bt)?)?, lam(&fpr.convolve(a, &gif)?)?))),
        map_check("LA3", || {
            let rhs = LinMap::chain(&[&idr.kron(&sf), &lam_a, &idr.kron(&lgi)])?;
            Ok((lam(&fpr.convolve(a, &gif)?)?, rhs))
        }),
    ];
    let mut r = run_checks(format!("lambda helper identities over {}", fp.name()), checks);
    r.note("LB: g-smeared lambda_beta~ against lambda_{beta~*gf^-1}; LA1-LA3: the chain ending in lambda_alpha");
    Ok(r)
}

fn require_pair(p: &InvolutionPair) -> Result<()> {
    character_violation(p.target(), &p.f.row)?;
    grouplike_violation(p.target(), &p.g.col)?;
    let r = check_involution_pair(p)?;
    if let Some(bad) = r.failed_labels().first() {
        return Err(YdError::PreconditionFailed(format!("not a pair in involution: {bad} fails")));
    }
    Ok(())
}

fn require_grading(obj: &GradedYDObject, alpha: &ZeroAutomorphism, beta: &ZeroAutomorphism) -> Result<()> {
    if obj.alpha() != alpha || obj.beta() != beta {
        return Err(YdError::PreconditionFailed("object lies in a different graded component".into()));
    }
    Ok(())
}

/// `(α, β)`-graded objects to `(e, e)`-graded ones:
/// `ψ ↦ (id⊗β)∘ψ∘(P⊗id)` with `P = (f⁻¹⊗id)∘Δ′∘β̃⁻¹`, `φ ↦ (L_g⊗id)∘φ`.
pub fn iso_forward(p: &InvolutionPair, obj: &GradedYDObject) -> Result<GradedYDObject> {
    require_pair(p)?;
    require_grading(obj, &p.alpha, &p.beta)?;
    let fp = p.target();
    let x = LinMap::identity(obj.xdim());
    let pre = smear(fp, &p.f.conv_inverse)?.compose(p.beta_tilde.inverse())?;
    let psi = LinMap::chain(&[&x.kron(p.beta.map()), obj.psi(), &pre.kron(&x)])?;
    let phi = fp.left_mult(&p.g.col)?.kron(&x).compose(obj.phi())?;
    let (a, b) = (ZeroAutomorphism::identity(fp.clone()), ZeroAutomorphism::identity(obj.source().clone()));
    GradedYDObject::new(obj.name.clone(), obj.source().clone(), fp.clone(), obj.xdim(), psi, phi, a, b)
}

/// Inverse of [`iso_forward`]: `ψ ↦ (id⊗β⁻¹)∘ψ∘(Q⊗id)` with
/// `Q = β̃∘(f⊗id)∘Δ′`, `φ ↦ (L_g⁻¹⊗id)∘φ`.
pub fn iso_backward(p: &InvolutionPair, obj: &GradedYDObject) -> Result<GradedYDObject> {
    require_pair(p)?;
    if !obj.is_trivially_graded() {
        return Err(YdError::PreconditionFailed("object is not in the (e, e) component".into()));
    }
    let fp = p.target();
    let x = LinMap::identity(obj.xdim());
    let pre = p.beta_tilde.map().compose(&smear(fp, &p.f.row)?)?;
    let psi = LinMap::chain(&[&x.kron(p.beta.inverse()), obj.psi(), &pre.kron(&x)])?;
    let phi = fp.left_mult(&p.g.conv_inverse)?.kron(&x).compose(obj.phi())?;
    GradedYDObject::new(
        obj.name.clone(),
        obj.source().clone(),
        fp.clone(),
        obj.xdim(),
        psi,
        phi,
        p.alpha.clone(),
        p.beta.clone(),
    )
}

/// Braiding-like data on a carrier `X = k^m`: `τ_FX: F′⊗X → X⊗F`,
/// `τ_XF: X⊗F → F′⊗X` and the self-crossings `τ_FF`, `τ_F′F′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauData {
    pub xdim: usize,
    pub tau_fx: LinMap,
    pub tau_xf: LinMap,
    pub tau_ff: LinMap,
    pub tau_fpfp: LinMap,
}

impl TauData {
    /// Every crossing a flip; needs `dim F = dim F′ = n`.
    pub fn flips(n: usize, m: usize) -> Self {
        TauData {
            xdim: m,
            tau_fx: LinMap::flip(n, m),
            tau_xf: LinMap::flip(m, n),
            tau_ff: LinMap::flip(n, n),
            tau_fpfp: LinMap::flip(n, n),
        }
    }
}

/// Every hypothesis of the τ-construction, in order, as checks.
pub fn tau_preconditions(f: &Bimonad, fp: &Bimonad, t: &TauData, p: &InvolutionPair) -> Vec<Check> {
    let (n, np, m) = (f.dim(), fp.dim(), t.xdim);
    let shapes = [
        ("tau_FX", &t.tau_fx, m * n, np * m),
        ("tau_XF", &t.tau_xf, np * m, m * n),
        ("tau_FF", &t.tau_ff, n * n, n * n),
        ("tau_F'F'", &t.tau_fpfp, np * np, np * np),
    ];
    for (what, map, c, d) in shapes {
        if map.shape() != (c, d) {
            return vec![Check::error("shapes", format!("{what} must be {c}x{d}"))];
        }
    }
    let (x, idf, idfp) = (LinMap::identity(m), f.id(), fp.id());
    let mut out = distributive_law_checks(fp, f, m, &t.tau_fx, &t.tau_xf);
    for c in &mut out {
        c.label = format!("tau-{}", c.label);
    }
    let eval = |label: &str, r: Result<(LinMap, LinMap)>| match r {
        Ok((l, r)) => Check::maps(label, &l, &r),
        Err(e) => Check::error(label, e.to_string()),
    };
    out.push(eval("involutive", t.tau_xf.compose(&t.tau_fx).map(|l| (l, LinMap::identity(np * m)))));
    out.push(eval(
        "YBE",
        (|| {
            let lhs = LinMap::chain(&[&idfp.kron(&t.tau_fx), &t.tau_fpfp.kron(&x), &idfp.kron(&t.tau_xf)])?;
            let rhs = LinMap::chain(&[&t.tau_xf.kron(&idf), &x.kron(&t.tau_ff), &t.tau_fx.kron(&idf)])?;
            Ok((lhs, rhs))
        })(),
    ));
    out.push(eval(
        "nat-beta",
        (|| {
            Ok((
                t.tau_fx.compose(&p.beta_tilde.map().kron(&x))?,
                x.kron(p.beta.map()).compose(&t.tau_fx)?,
            ))
        })(),
    ));
    out.push(eval(
        "nat-g-inverse",
        (|| Ok((t.tau_fpfp.compose(&idfp.kron(&p.g.conv_inverse))?, p.g.conv_inverse.kron(&idfp))))(),
    ));
    out.push(eval("nat-f", (|| Ok((idfp.kron(&p.f.row).compose(&t.tau_fpfp)?, p.f.row.kron(&idfp))))()));
    out
}

/// `ψ = τ_FX∘((f⊗id)Δ′⊗id_X)`, `φ = (L_g⁻¹⊗id)∘τ_XF`, graded `(α, β)`.
pub fn yd_from_tau_pair(name: &str, t: &TauData, p: &InvolutionPair) -> Result<GradedYDObject> {
    let (f, fp) = (p.source().clone(), p.target().clone());
    if let Some(bad) = tau_preconditions(&f, &fp, t, p).into_iter().find(|c| !c.passed) {
        return Err(YdError::PreconditionFailed(bad.label));
    }
    require_pair(p)?;
    let x = LinMap::identity(t.xdim);
    let psi = t.tau_fx.compose(&smear(&fp, &p.f.row)?.kron(&x))?;
    let phi = fp.left_mult(&p.g.conv_inverse)?.kron(&x).compose(&t.tau_xf)?;
    let obj = GradedYDObject::new(name, f, fp, t.xdim, psi, phi, p.alpha.clone(), p.beta.clone())?;
    let r = verify_yd(&obj);
    if let Some(bad) = r.failed_labels().first() {
        return Err(YdError::PreconditionFailed(format!("constructed object fails {bad}")));
    }
    Ok(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactmat::q;
    use crate::ydcat::YDMorphism;

    struct H4 {
        h: Arc<Bimonad>,
        id: ZeroAutomorphism,
        phi: ZeroAutomorphism,
    }

    fn h4() -> H4 {
        let grp = catalog::sweedler_group();
        H4 { h: grp.owner().clone(), id: grp.element(0).clone(), phi: grp.element(1).clone() }
    }

    fn eps_g(s: &H4, alpha: &ZeroAutomorphism, beta: &ZeroAutomorphism) -> InvolutionPair {
        let g = GrouplikeElement::new(s.h.clone(), LinMap::basis(4, 1)).unwrap();
        InvolutionPair::endo(Character::counit(s.h.clone()), g, alpha.clone(), beta.clone()).unwrap()
    }

    fn eps_eta(s: &H4, a: &ZeroAutomorphism) -> InvolutionPair {
        InvolutionPair::endo(Character::counit(s.h.clone()), GrouplikeElement::unit(s.h.clone()), a.clone(), a.clone())
            .unwrap()
    }

    #[test]
    fn convolution_examples() {
        let s = h4();
        let h = &s.h;
        let unit = h.convolution_unit(&h.id()).unwrap();
        let u = sweedler_phi_like();
        assert_eq!(convolution(h, &u, &unit).unwrap(), u);
        assert_eq!(convolution(h, &h.id(), h.antipode().unwrap()).unwrap(), unit);
        // (g⁻¹ε * id * gε)(h) = g h g, which is S² on H4.
        let g = LinMap::basis(4, 1);
        let gf = g.compose(h.counit()).unwrap();
        let conj = convolution(h, &convolution(h, &gf, &h.id()).unwrap(), &gf).unwrap();
        let s2 = h.antipode().unwrap().compose(h.antipode().unwrap()).unwrap();
        assert_eq!(conj, s2);
        assert_eq!(conj, *s.phi.map());
        assert_eq!(convolution_inverse(h, h.counit()).unwrap(), *h.counit());
        assert_eq!(convolution_inverse(h, &g).unwrap(), g);
    }

    fn sweedler_phi_like() -> LinMap {
        LinMap::from_ints(&[[1, 2, 0, 0], [0, 1, 0, 3], [0, 0, -1, 0], [5, 0, 0, 1]])
    }

    #[test]
    fn characters_and_grouplikes() {
        let z2 = Arc::new(Bimonad::group_algebra_z2());
        let sign = Character::new(z2.clone(), LinMap::from_ints(&[[1, -1]])).unwrap();
        assert_eq!(sign.conv_inverse(), sign.row());
        assert!(Character::new(z2.clone(), LinMap::from_ints(&[[1, 2]])).is_err());
        let s = h4();
        assert!(GrouplikeElement::new(s.h.clone(), LinMap::basis(4, 2)).is_err());
    }

    #[test]
    fn obvious_pairs() {
        let s = h4();
        for a in [&s.id, &s.phi] {
            let r = check_involution_pair(&eps_eta(&s, a)).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = check_involution_pair(&eps_g(&s, &s.phi, &s.id)).unwrap();
        assert!(r.passed(), "{r}");
        let r = check_involution_pair(&eps_g(&s, &s.id, &s.id)).unwrap();
        assert_eq!(r.failed_labels(), vec!["form-conjugate", "form-left", "form-right"]);
        assert!(r.check("forms-agree").unwrap().passed);
    }

    #[test]
    fn helper_identities() {
        let s = h4();
        let tau = LinMap::flip(4, 4);
        assert!(lambda_helper_identities(&eps_eta(&s, &s.id), &tau).unwrap().passed());
        let r = lambda_helper_identities(&eps_g(&s, &s.phi, &s.id), &tau).unwrap();
        assert!(r.passed(), "{r}");
        let mut p = eps_g(&s, &s.phi, &s.id);
        p.g = GrouplikeElement::raw(s.h.clone(), LinMap::basis(4, 2), LinMap::basis(4, 2));
        assert!(matches!(lambda_helper_identities(&p, &tau), Err(YdError::PreconditionFailed(_))));
    }

    #[test]
    fn isomorphisms_round_trip() {
        let s = h4();
        let p = eps_eta(&s, &s.id);
        let reg = catalog::sweedler_object("regular", s.id.clone(), s.id.clone()).unwrap();
        assert_eq!(iso_forward(&p, &reg).unwrap(), reg);
        assert_eq!(iso_backward(&p, &reg).unwrap(), reg);
        let p = eps_g(&s, &s.phi, &s.id);
        let anti = catalog::sweedler_object("antiYD", s.phi.clone(), s.id.clone()).unwrap();
        let fwd = iso_forward(&p, &anti).unwrap();
        assert!(fwd.is_trivially_graded());
        assert!(verify_yd(&fwd).passed());
        assert_eq!(iso_backward(&p, &fwd).unwrap(), anti);
        for name in ["unit", "sign", "regular", "adjoint"] {
            let o = catalog::sweedler_object(name, s.id.clone(), s.id.clone()).unwrap();
            let back = iso_backward(&p, &o).unwrap();
            assert!(verify_yd(&back).passed(), "{name}");
            assert_eq!((back.alpha(), back.beta()), (&s.phi, &s.id));
            assert_eq!(iso_forward(&p, &back).unwrap(), o);
        }
        assert!(iso_forward(&p, &catalog::sweedler_object("unit", s.id.clone(), s.id.clone()).unwrap()).is_err());
    }

    #[test]
    fn morphisms_survive_the_isomorphism() {
        let s = h4();
        let p = eps_g(&s, &s.phi, &s.id);
        let o = catalog::sweedler_object("regular", s.id.clone(), s.id.clone()).unwrap();
        let map = LinMap::identity(4).scale(&q(-2));
        let back = iso_backward(&p, &o).unwrap();
        let z = YDMorphism { src: back.clone(), dst: back, map };
        assert!(crate::ydcat::verify_morphism(&z).unwrap().passed());
    }

    #[test]
    fn tau_construction() {
        let k = Arc::new(Bimonad::trivial());
        let kid = ZeroAutomorphism::identity(k.clone());
        let p = InvolutionPair::endo(Character::counit(k.clone()), GrouplikeElement::unit(k.clone()), kid.clone(), kid)
            .unwrap();
        let o = yd_from_tau_pair("line", &TauData::flips(1, 1), &p).unwrap();
        assert_eq!(o, GradedYDObject::identity(k).named("line"));
        let s = h4();
        let p = eps_g(&s, &s.phi, &s.id);
        let o = yd_from_tau_pair("tau", &TauData::flips(4, 4), &p).unwrap();
        assert_eq!((o.alpha(), o.beta()), (&s.phi, &s.id));
        let mut bad = TauData::flips(4, 4);
        bad.tau_ff = bad.tau_ff.scale(&q(-1));
        assert_eq!(yd_from_tau_pair("bad", &bad, &p), Err(YdError::PreconditionFailed("YBE".into())));
    }
}
