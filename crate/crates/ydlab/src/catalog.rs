//! Standard bimonads, automorphism groups and YD objects used by the bundled
//! workspaces and the test suites.

use std::sync::Arc;

use crate::bimonad::{group_closure, sweedler_phi, AutGroup, Bimonad, ZeroAutomorphism, DEFAULT_CLOSURE_CAP};
use crate::error::{Result, YdError};
use crate::exactmat::{q, LinMap};
use crate::ydcat::{build_yd_from_action_coaction, GradedYDObject};

/// `{id, φ₋₁}` on Sweedler's algebra.
pub fn sweedler_group() -> Arc<AutGroup> {
    let h = Arc::new(Bimonad::sweedler());
    Arc::new(group_closure(&h, &[sweedler_phi(q(-1))], DEFAULT_CLOSURE_CAP).expect("phi_-1 has order 2"))
}

pub fn cyclic2_group() -> Arc<AutGroup> {
    Arc::new(AutGroup::trivial(Arc::new(Bimonad::group_algebra_z2())))
}

pub fn trivial_group() -> Arc<AutGroup> {
    Arc::new(AutGroup::trivial(Arc::new(Bimonad::trivial())))
}

/// Coaction `y ↦ y₍₁₎S(y₍₃₎) ⊗ y₍₂₎` of a Hopf algebra on itself.
pub fn coadjoint_coaction(b: &Bimonad) -> Result<LinMap> {
    let s = b.antipode().ok_or_else(|| YdError::PreconditionFailed(format!("{} has no antipode", b.name())))?;
    let n = b.dim();
    let id = b.id();
    let delta2 = b.comult().kron(&id).compose(b.comult())?;
    LinMap::chain(&[
        &b.mult().kron(&id),
        &LinMap::permute(&[n, n, n], &[0, 2, 1]),
        &id.kron(&id).kron(s),
        &delta2,
    ])
}

/// Action `h⊗y ↦ h₍₁₎ y S(h₍₂₎)` of a Hopf algebra on itself.
pub fn adjoint_action(b: &Bimonad) -> Result<LinMap> {
    let s = b.antipode().ok_or_else(|| YdError::PreconditionFailed(format!("{} has no antipode", b.name())))?;
    let n = b.dim();
    let id = b.id();
    LinMap::chain(&[
        b.mult(),
        &b.mult().kron(&id),
        &id.kron(&id).kron(s),
        &LinMap::permute(&[n, n, n], &[0, 2, 1]),
        &b.comult().kron(&id),
    ])
}

/// Action and coaction of the named Sweedler module.
///
/// `unit`: `k` with `ε` and `1⊗−`; `sign`: `k` with `g ↦ −1` and `g⊗−`;
/// `regular`: `μ` with the coadjoint coaction; `adjoint`: the adjoint action
/// with `Δ`; `antiYD`: `k` with `ε` and `g⊗−`.
pub fn sweedler_module(name: &str) -> Result<(LinMap, LinMap)> {
    let h = Bimonad::sweedler();
    let g = LinMap::basis(4, 1);
    Ok(match name {
        "unit" => (h.counit().clone(), h.unit().clone()),
        "sign" => (LinMap::from_ints(&[[1, -1, 0, 0]]), g),
        "regular" => (h.mult().clone(), coadjoint_coaction(&h)?),
        "adjoint" => (adjoint_action(&h)?, h.comult().clone()),
        "antiYD" => (h.counit().clone(), g),
        _ => return Err(YdError::MalformedInput(format!("no Sweedler module named {name}"))),
    })
}

pub const SWEEDLER_OBJECTS: [&str; 5] = ["unit", "sign", "regular", "adjoint", "antiYD"];

pub fn sweedler_object(name: &str, alpha: ZeroAutomorphism, beta: ZeroAutomorphism) -> Result<GradedYDObject> {
    let (act, coact) = sweedler_module(name)?;
    build_yd_from_action_coaction(name, alpha.owner().clone(), &act, &coact, alpha, beta)
}

/// One-dimensional `QZ₂` modules `sign_c` (character `g ↦ c`) and the
/// regular module with trivial coaction. Suffix `_g` puts the line in degree `g`.
pub fn cyclic2_module(name: &str) -> Result<(LinMap, LinMap)> {
    let b = Bimonad::group_algebra_z2();
    let (chi, rest) = match name.split_once('_') {
        Some((c, "g")) => (c, LinMap::basis(2, 1)),
        None => (name, LinMap::basis(2, 0)),
        _ => return Err(YdError::MalformedInput(format!("no QZ2 module named {name}"))),
    };
    Ok(match chi {
        "plus" => (b.counit().clone(), rest),
        "minus" => (LinMap::from_ints(&[[1, -1]]), rest),
        "regular" if rest == LinMap::basis(2, 0) => (b.mult().clone(), b.unit().kron(&LinMap::identity(2))),
        _ => return Err(YdError::MalformedInput(format!("no QZ2 module named {name}"))),
    })
}

pub const CYCLIC2_OBJECTS: [&str; 5] = ["plus", "minus", "plus_g", "minus_g", "regular"];

pub fn cyclic2_object(name: &str) -> Result<GradedYDObject> {
    let (act, coact) = cyclic2_module(name)?;
    let b = Arc::new(Bimonad::group_algebra_z2());
    let id = ZeroAutomorphism::identity(b.clone());
    build_yd_from_action_coaction(name, b, &act, &coact, id.clone(), id)
}

/// `(k, η, ε): F → k`. The mirror cell `k → F` would need `ηε = id_F`.
pub fn to_unit(f: Arc<Bimonad>) -> GradedYDObject {
    let k = Arc::new(Bimonad::trivial());
    let (a, b) = (ZeroAutomorphism::identity(k.clone()), ZeroAutomorphism::identity(f.clone()));
    GradedYDObject::new(format!("{}->k", f.name()), f.clone(), k, 1, f.unit().clone(), f.counit().clone(), a, b)
        .expect("shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ydcat::verify_yd;

    #[test]
    fn modules_are_yd_at_identity() {
        let g = sweedler_group();
        let id = g.element(0).clone();
        for name in ["unit", "sign", "regular", "adjoint"] {
            let o = sweedler_object(name, id.clone(), id.clone()).unwrap();
            assert!(verify_yd(&o).passed(), "{name}: {}", verify_yd(&o));
        }
        for name in CYCLIC2_OBJECTS {
            let o = cyclic2_object(name).unwrap();
            assert!(verify_yd(&o).passed(), "{name}");
        }
    }

    #[test]
    fn regular_coaction_is_not_yd_with_regular_action() {
        let h = Arc::new(Bimonad::sweedler());
        let id = ZeroAutomorphism::identity(h.clone());
        let o = build_yd_from_action_coaction("naive", h.clone(), h.mult(), h.comult(), id.clone(), id).unwrap();
        assert!(!verify_yd(&o).check("twisted-YD").unwrap().passed);
    }

    #[test]
    fn cross_cell_to_k() {
        for f in [Bimonad::sweedler(), Bimonad::group_algebra_z2()] {
            let f = Arc::new(f);
            assert!(verify_yd(&to_unit(f.clone())).passed());
            // The reversed cell k → F fails the YD condition: it would force ηε = id.
            let k = Arc::new(Bimonad::trivial());
            let rev = GradedYDObject::new(
                "rev",
                k.clone(),
                f.clone(),
                1,
                f.counit().clone(),
                f.unit().clone(),
                ZeroAutomorphism::identity(f.clone()),
                ZeroAutomorphism::identity(k),
            )
            .unwrap();
            let r = verify_yd(&rev);
            assert!(!r.check("twisted-YD").unwrap().passed);
            assert_eq!(r.failed_labels(), vec!["twisted-YD"]);
        }
    }
}
