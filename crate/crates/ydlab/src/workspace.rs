//! Named registries loaded from a JSON manifest.
//!
//! Every manifest section is a list whose entries are either inline objects
//! or paths (relative to the manifest) of files holding one object. Loading
//! checks every axiom eagerly and stops at the first violation.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bimonad::{
    group_closure, verify_bimonad, verify_zero_automorphism, AutGroup, Bimonad, BimonadFile, ZeroAutomorphism,
    DEFAULT_CLOSURE_CAP,
};
use crate::error::{Result, YdError};
use crate::exactmat::LinMap;
use crate::groupsys::{build_system, FiniteGroup, FusionFile, FusionMap, GradedGroupSystem, GroupFile, SystemFile};
use crate::involution::{check_involution_pair, Character, GrouplikeElement, InvolutionPair};
use crate::report::VerificationReport;
use crate::ydcat::{verify_yd, GradedYDObject, HomGroups, YDObjectFile};

pub const BUNDLED: [(&str, &str); 4] = [
    ("trivial", include_str!("../workspaces/trivial.json")),
    ("sweedler", include_str!("../workspaces/sweedler.json")),
    ("cyclic2", include_str!("../workspaces/cyclic2.json")),
    ("groups", include_str!("../workspaces/groups.json")),
];

pub const DEFAULT_MANIFEST: &str = "ydlab.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry<T> {
    Path(String),
    Inline(T),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutomorphismFile {
    pub name: String,
    pub bimonad: String,
    pub map: LinMap,
}

/// The working group of a bimonad: the closure of the named automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroupFile {
    pub bimonad: String,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedObjectFile {
    pub name: String,
    #[serde(flatten)]
    pub object: YDObjectFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairFile {
    pub name: String,
    pub bimonad_source: String,
    pub bimonad_target: String,
    pub f: LinMap,
    pub g: LinMap,
    pub alpha: String,
    pub beta: String,
    #[serde(default = "identity_name")]
    pub fusion: String,
}

fn identity_name() -> String {
    "identity".into()
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub groups: Vec<Entry<GroupFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bimonads: Vec<Entry<BimonadFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub automorphisms: Vec<Entry<AutomorphismFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aut_groups: Vec<Entry<AutGroupFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fusions: Vec<Entry<FusionFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub systems: Vec<Entry<SystemFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<Entry<NamedObjectFile>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<Entry<PairFile>>,
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub bimonads: BTreeMap<String, Arc<Bimonad>>,
    /// Keyed by `(bimonad, automorphism)`; every bimonad has `id`.
    pub automorphisms: BTreeMap<(String, String), ZeroAutomorphism>,
    pub aut_groups: BTreeMap<String, Arc<AutGroup>>,
    pub groups: HashMap<String, Arc<FiniteGroup>>,
    pub fusions: HashMap<String, FusionMap>,
    pub systems: BTreeMap<String, GradedGroupSystem>,
    pub objects: BTreeMap<String, GradedYDObject>,
    pub pairs: BTreeMap<String, InvolutionPair>,
}

fn integrity(path: &str, r: &VerificationReport) -> Result<()> {
    match r.failed_labels().first() {
        Some(l) => Err(YdError::IntegrityError { path: path.into(), identity: (*l).into() }),
        None => Ok(()),
    }
}

fn at(path: &str, e: YdError) -> YdError {
    match e {
        YdError::MalformedInput(m) => YdError::MalformedInput(format!("{path}: {m}")),
        other => other,
    }
}

fn resolve<T: DeserializeOwned + Clone>(base: Option<&Path>, section: &str, i: usize, e: &Entry<T>) -> Result<(String, T)> {
    match e {
        Entry::Inline(t) => Ok((format!("{section}[{i}]"), t.clone())),
        Entry::Path(p) => {
            let full = match base {
                Some(b) => b.join(p),
                None => PathBuf::from(p),
            };
            let text = std::fs::read_to_string(&full).map_err(|e| YdError::Io(format!("{}: {e}", full.display())))?;
            let t = serde_json::from_str(&text)
                .map_err(|e| YdError::MalformedInput(format!("{}: {e}", full.display())))?;
            Ok((full.display().to_string(), t))
        }
    }
}

impl Workspace {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn load(manifest_path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(manifest_path)
            .map_err(|e| YdError::Io(format!("{}: {e}", manifest_path.display())))?;
        let m: Manifest = serde_json::from_str(&text)
            .map_err(|e| YdError::MalformedInput(format!("{}: {e}", manifest_path.display())))?;
        let mut ws = Workspace::empty();
        ws.absorb(&m, manifest_path.parent())?;
        Ok(ws)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: Manifest = serde_json::from_str(text).map_err(|e| YdError::MalformedInput(e.to_string()))?;
        let mut ws = Workspace::empty();
        ws.absorb(&m, None)?;
        Ok(ws)
    }

    pub fn bundled(name: &str) -> Result<Self> {
        let text = BUNDLED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| *t)
            .ok_or_else(|| YdError::MalformedInput(format!("no bundled workspace named {name}")))?;
        Self::from_json(text)
    }

    /// Every bundled workspace merged into one.
    pub fn all_bundled() -> Result<Self> {
        let mut ws = Workspace::empty();
        for (_, text) in BUNDLED {
            let m: Manifest = serde_json::from_str(text).map_err(|e| YdError::MalformedInput(e.to_string()))?;
            ws.absorb(&m, None)?;
        }
        Ok(ws)
    }

    /// `location` names a bundled workspace or a path; a directory path means
    /// its `ydlab.json`. Without one, `./ydlab.json` if present, else every bundled workspace.
    pub fn open(location: Option<&str>) -> Result<Self> {
        match location {
            Some(s) if BUNDLED.iter().any(|(n, _)| *n == s) => Self::bundled(s),
            Some(s) => {
                let p = Path::new(s);
                if p.is_dir() {
                    Self::load(&p.join(DEFAULT_MANIFEST))
                } else {
                    Self::load(p)
                }
            }
            None if Path::new(DEFAULT_MANIFEST).exists() => Self::load(Path::new(DEFAULT_MANIFEST)),
            None => Self::all_bundled(),
        }
    }

    fn absorb(&mut self, m: &Manifest, base: Option<&Path>) -> Result<()> {
        for (i, e) in m.groups.iter().enumerate() {
            let (path, f) = resolve(base, "groups", i, e)?;
            let g = FiniteGroup::from_file(&f).map_err(|e| at(&path, e))?;
            self.insert_group(&path, Arc::new(g))?;
        }
        for (i, e) in m.bimonads.iter().enumerate() {
            let (path, f) = resolve(base, "bimonads", i, e)?;
            let b = Bimonad::from_file(&f).map_err(|e| at(&path, e))?;
            integrity(&path, &verify_bimonad(&b))?;
            match self.bimonads.get(b.name()) {
                Some(old) if **old == b => continue,
                Some(_) => return Err(YdError::MalformedInput(format!("{path}: bimonad {} defined twice", b.name()))),
                None => {}
            }
            let b = Arc::new(b);
            self.automorphisms.insert((b.name().into(), "id".into()), ZeroAutomorphism::identity(b.clone()));
            self.bimonads.insert(b.name().into(), b);
        }
        for (i, e) in m.automorphisms.iter().enumerate() {
            let (path, f) = resolve(base, "automorphisms", i, e)?;
            let b = self.bimonad(&f.bimonad).map_err(|e| at(&path, e))?;
            integrity(&path, &verify_zero_automorphism(&b, &f.map).map_err(|e| at(&path, e))?)?;
            let key = (f.bimonad.clone(), f.name.clone());
            if self.automorphisms.contains_key(&key) {
                return Err(YdError::MalformedInput(format!("{path}: automorphism {} defined twice", f.name)));
            }
            self.automorphisms.insert(key, ZeroAutomorphism::new(b, f.map)?);
        }
        for (i, e) in m.aut_groups.iter().enumerate() {
            let (path, f) = resolve(base, "aut_groups", i, e)?;
            let b = self.bimonad(&f.bimonad).map_err(|e| at(&path, e))?;
            let gens = f
                .generators
                .iter()
                .map(|g| self.automorphism(&f.bimonad, g).map(|a| a.map().clone()))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| at(&path, e))?;
            let grp = Arc::new(group_closure(&b, &gens, DEFAULT_CLOSURE_CAP)?);
            self.insert_group(&path, grp.table().clone())?;
            self.aut_groups.insert(f.bimonad.clone(), grp);
        }
        let missing: Vec<String> =
            self.bimonads.keys().filter(|b| !self.aut_groups.contains_key(*b)).cloned().collect();
        for b in missing {
            let grp = Arc::new(AutGroup::trivial(self.bimonads[&b].clone()));
            self.insert_group(&b, grp.table().clone())?;
            self.aut_groups.insert(b, grp);
        }
        for (i, e) in m.fusions.iter().enumerate() {
            let (path, f) = resolve(base, "fusions", i, e)?;
            let name = f.name.clone().ok_or_else(|| YdError::MalformedInput(format!("{path}: fusion map needs a name")))?;
            let s = self.group(&f.source).map_err(|e| at(&path, e))?;
            let t = self.group(&f.target).map_err(|e| at(&path, e))?;
            let j = FusionMap::new(s, t, f.images.clone()).map_err(|e| at(&path, e))?;
            self.fusions.insert(name, j);
        }
        for (i, e) in m.systems.iter().enumerate() {
            let (path, f) = resolve(base, "systems", i, e)?;
            let sys = build_system(&f, &self.groups, &self.fusions).map_err(|e| at(&path, e))?;
            self.systems.insert(f.name.clone(), sys);
        }
        for (i, e) in m.objects.iter().enumerate() {
            let (path, f) = resolve(base, "objects", i, e)?;
            let obj = self.object_from_file(&f.name, &f.object).map_err(|e| at(&path, e))?;
            integrity(&path, &verify_yd(&obj))?;
            if self.objects.insert(f.name.clone(), obj).is_some() {
                return Err(YdError::MalformedInput(format!("{path}: object {} defined twice", f.name)));
            }
        }
        for (i, e) in m.pairs.iter().enumerate() {
            let (path, f) = resolve(base, "pairs", i, e)?;
            let p = self.pair_from_file(&f).map_err(|e| at(&path, e))?;
            integrity(&path, &check_involution_pair(&p)?)?;
            self.pairs.insert(f.name.clone(), p);
        }
        Ok(())
    }

    fn insert_group(&mut self, path: &str, g: Arc<FiniteGroup>) -> Result<()> {
        match self.groups.get(g.name()) {
            Some(old) if **old != *g => {
                Err(YdError::MalformedInput(format!("{path}: group {} defined twice", g.name())))
            }
            _ => {
                self.groups.insert(g.name().into(), g);
                Ok(())
            }
        }
    }

    pub fn bimonad(&self, name: &str) -> Result<Arc<Bimonad>> {
        self.bimonads.get(name).cloned().ok_or_else(|| YdError::MalformedInput(format!("unknown bimonad {name}")))
    }

    pub fn group(&self, name: &str) -> Result<Arc<FiniteGroup>> {
        self.groups.get(name).cloned().ok_or_else(|| YdError::MalformedInput(format!("unknown group {name}")))
    }

    pub fn automorphism(&self, bimonad: &str, name: &str) -> Result<ZeroAutomorphism> {
        self.automorphisms
            .get(&(bimonad.to_string(), name.to_string()))
            .cloned()
            .ok_or_else(|| YdError::MalformedInput(format!("unknown automorphism {name} of {bimonad}")))
    }

    /// Name of a registered automorphism with this map, if any.
    pub fn automorphism_name(&self, a: &ZeroAutomorphism) -> Result<String> {
        self.automorphisms
            .iter()
            .find(|((b, _), x)| b == a.owner().name() && x.map() == a.map())
            .map(|((_, n), _)| n.clone())
            .ok_or_else(|| YdError::MalformedInput(format!("automorphism of {} has no registered name", a.owner().name())))
    }

    pub fn aut_group(&self, bimonad: &str) -> Result<Arc<AutGroup>> {
        self.aut_groups
            .get(bimonad)
            .cloned()
            .ok_or_else(|| YdError::MalformedInput(format!("unknown bimonad {bimonad}")))
    }

    pub fn object(&self, name: &str) -> Result<GradedYDObject> {
        self.objects.get(name).cloned().ok_or_else(|| YdError::MalformedInput(format!("unknown object {name}")))
    }

    pub fn pair(&self, name: &str) -> Result<InvolutionPair> {
        self.pairs.get(name).cloned().ok_or_else(|| YdError::MalformedInput(format!("unknown pair {name}")))
    }

    /// Working groups for 1-cells `source → target`. Distinct bimonads need a
    /// registered fusion map between their groups unless both are trivial.
    pub fn hom(&self, source: &str, target: &str) -> Result<HomGroups> {
        let (s, t) = (self.aut_group(source)?, self.aut_group(target)?);
        if source == target {
            return Ok(HomGroups::endo(s));
        }
        if s.order() != t.order() {
            return Err(YdError::EmptyHom(format!(
                "working groups of {source} (order {}) and {target} (order {}) are not isomorphic",
                s.order(),
                t.order()
            )));
        }
        let mut names: Vec<&String> = self.fusions.keys().collect();
        names.sort();
        for n in names {
            let j = &self.fusions[n];
            if **j.source() == **s.table() && **j.target() == **t.table() {
                return HomGroups::new(s, t, j.clone());
            }
        }
        let j = FusionMap::new(s.table().clone(), t.table().clone(), vec![0]);
        match j {
            Ok(j) if s.order() == 1 => HomGroups::new(s, t, j),
            _ => Err(YdError::GroupMismatch(format!("no fusion map registered from {source} to {target}"))),
        }
    }

    pub fn object_from_file(&self, name: &str, f: &YDObjectFile) -> Result<GradedYDObject> {
        let s = self.bimonad(&f.source)?;
        let t = self.bimonad(&f.target)?;
        let alpha = self.automorphism(&f.target, &f.alpha)?;
        let beta = self.automorphism(&f.source, &f.beta)?;
        GradedYDObject::new(name, s, t, f.xdim, f.psi.clone(), f.phi.clone(), alpha, beta)
    }

    pub fn object_to_file(&self, o: &GradedYDObject) -> Result<YDObjectFile> {
        Ok(YDObjectFile {
            source: o.source().name().into(),
            target: o.target().name().into(),
            xdim: o.xdim(),
            psi: o.psi().clone(),
            phi: o.phi().clone(),
            alpha: self.automorphism_name(o.alpha())?,
            beta: self.automorphism_name(o.beta())?,
        })
    }

    pub fn pair_from_file(&self, f: &PairFile) -> Result<InvolutionPair> {
        let fp = self.bimonad(&f.bimonad_target)?;
        let alpha = self.automorphism(&f.bimonad_target, &f.alpha)?;
        let beta = self.automorphism(&f.bimonad_source, &f.beta)?;
        let ch = Character::new(fp.clone(), f.f.clone())?;
        let g = GrouplikeElement::new(fp, f.g.clone())?;
        if f.fusion == "identity" {
            if f.bimonad_source != f.bimonad_target {
                return Err(YdError::MalformedInput("identity fusion needs equal bimonads".into()));
            }
            return InvolutionPair::endo(ch, g, alpha, beta);
        }
        let j = self.fusions.get(&f.fusion).ok_or_else(|| YdError::MalformedInput(format!("unknown fusion {}", f.fusion)))?;
        let hom = HomGroups::new(self.aut_group(&f.bimonad_source)?, self.aut_group(&f.bimonad_target)?, j.clone())?;
        InvolutionPair::with_fusion(ch, g, alpha, beta, &hom)
    }
}

/// Indented JSON that keeps arrays of scalars (matrix rows) on one line.
pub fn to_json_pretty<T: Serialize>(v: &T) -> Result<String> {
    fn scalar(v: &serde_json::Value) -> bool {
        !matches!(v, serde_json::Value::Array(_) | serde_json::Value::Object(_))
    }
    fn go(v: &serde_json::Value, depth: usize, out: &mut String) {
        use serde_json::Value;
        let pad = "  ".repeat(depth + 1);
        match v {
            Value::Array(xs) if xs.iter().all(scalar) => out.push_str(&Value::Array(xs.clone()).to_string()),
            Value::Array(xs) => {
                out.push_str("[\n");
                for (i, x) in xs.iter().enumerate() {
                    out.push_str(&pad);
                    go(x, depth + 1, out);
                    out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(depth));
                out.push(']');
            }
            Value::Object(m) => {
                out.push_str("{\n");
                for (i, (k, x)) in m.iter().enumerate() {
                    out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                    go(x, depth + 1, out);
                    out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(depth));
                out.push('}');
            }
            other => out.push_str(&other.to_string()),
        }
    }
    let v = serde_json::to_value(v).map_err(|e| YdError::MalformedInput(e.to_string()))?;
    let mut out = String::new();
    go(&v, 0, &mut out);
    out.push('\n');
    Ok(out)
}

/// The manifest of a bundled workspace, rebuilt from the catalog.
pub fn catalog_manifest(name: &str) -> Result<Manifest> {
    use crate::bimonad::sweedler_phi;
    use crate::catalog;
    use crate::exactmat::{q, ExactScalar};
    let obj = |name: &str, o: &GradedYDObject, alpha: &str, beta: &str| {
        Entry::Inline(NamedObjectFile {
            name: name.into(),
            object: YDObjectFile {
                source: o.source().name().into(),
                target: o.target().name().into(),
                xdim: o.xdim(),
                psi: o.psi().clone(),
                phi: o.phi().clone(),
                alpha: alpha.into(),
                beta: beta.into(),
            },
        })
    };
    let pair = |name: &str, b: &Bimonad, g: LinMap, alpha: &str, beta: &str| {
        Entry::Inline(PairFile {
            name: name.into(),
            bimonad_source: b.name().into(),
            bimonad_target: b.name().into(),
            f: b.counit().clone(),
            g,
            alpha: alpha.into(),
            beta: beta.into(),
            fusion: identity_name(),
        })
    };
    let k = Bimonad::trivial();
    let mut m = Manifest::default();
    match name {
        "trivial" => {
            m.bimonads.push(Entry::Inline(k.to_file()));
            m.objects.push(obj("k_unit", &GradedYDObject::identity(Arc::new(k.clone())), "id", "id"));
            m.pairs.push(pair("k_eps_eta", &k, k.unit().clone(), "id", "id"));
        }
        "sweedler" => {
            let grp = catalog::sweedler_group();
            let h = grp.owner().clone();
            m.bimonads.push(Entry::Inline(h.to_file()));
            for (n, c) in [
                ("phi_neg1", q(-1)),
                ("phi_2", q(2)),
                ("phi_neg3", q(-3)),
                ("phi_half", ExactScalar::ratio(1, 2)),
            ] {
                m.automorphisms.push(Entry::Inline(AutomorphismFile {
                    name: n.into(),
                    bimonad: h.name().into(),
                    map: sweedler_phi(c),
                }));
            }
            m.aut_groups.push(Entry::Inline(AutGroupFile { bimonad: h.name().into(), generators: vec!["phi_neg1".into()] }));
            let (id, phi) = (grp.element(0).clone(), grp.element(1).clone());
            for n in ["unit", "sign", "regular", "adjoint"] {
                m.objects.push(obj(n, &catalog::sweedler_object(n, id.clone(), id.clone())?, "id", "id"));
            }
            m.objects.push(obj("antiYD", &catalog::sweedler_object("antiYD", phi, id)?, "phi_neg1", "id"));
            m.pairs.push(pair("eps_g", &h, LinMap::basis(4, 1), "phi_neg1", "id"));
            m.pairs.push(pair("eps_eta", &h, h.unit().clone(), "id", "id"));
            m.pairs.push(pair("eps_eta_neg1", &h, h.unit().clone(), "phi_neg1", "phi_neg1"));
        }
        "cyclic2" => {
            let z2 = Arc::new(Bimonad::group_algebra_z2());
            m.bimonads.push(Entry::Inline(k.to_file()));
            m.bimonads.push(Entry::Inline(z2.to_file()));
            for n in catalog::CYCLIC2_OBJECTS {
                let label = if n == "regular" { "regular_z2" } else { n };
                m.objects.push(obj(label, &catalog::cyclic2_object(n)?, "id", "id"));
            }
            m.objects.push(obj("z2_to_k", &catalog::to_unit(z2.clone()), "id", "id"));
            m.pairs.push(pair("z2_eps_eta", &z2, z2.unit().clone(), "id", "id"));
            m.pairs.push(pair("z2_eps_g", &z2, LinMap::basis(2, 1), "id", "id"));
        }
        "groups" => {
            for g in [FiniteGroup::cyclic(6), FiniteGroup::symmetric3(), FiniteGroup::dihedral4()] {
                let g = Arc::new(g);
                let n = g.name().to_string();
                let id = FusionMap::identity(g.clone()).to_file();
                let inner = FusionMap::inner(g.clone(), 1)?.to_file();
                m.fusions.push(Entry::Inline(FusionFile { name: Some(format!("{n}_id")), ..id }));
                m.fusions.push(Entry::Inline(FusionFile { name: Some(format!("{n}_inner")), ..inner }));
                m.systems.push(Entry::Inline(SystemFile {
                    name: format!("{}_chain", n.to_lowercase()),
                    groups: vec![n.clone(); 3],
                    fusions: vec![format!("{n}_inner"), format!("{n}_id")],
                }));
                m.groups.push(Entry::Inline(g.to_file()));
            }
        }
        _ => return Err(YdError::MalformedInput(format!("no bundled workspace named {name}"))),
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `YDLAB_REGENERATE=1 cargo test bundled_json` rewrites the bundled files.
    #[test]
    fn bundled_json_matches_catalog() {
        for (name, text) in BUNDLED {
            let expect = catalog_manifest(name).unwrap();
            if std::env::var("YDLAB_REGENERATE").is_ok() {
                let out = to_json_pretty(&expect).unwrap();
                std::fs::write(format!("{}/workspaces/{name}.json", env!("CARGO_MANIFEST_DIR")), out).unwrap();
                continue;
            }
            let got: Manifest = serde_json::from_str(text).unwrap();
            assert_eq!(got, expect, "{name}");
        }
    }

    #[test]
    fn empty_manifest() {
        let ws = Workspace::from_json("{}").unwrap();
        assert!(ws.bimonads.is_empty() && ws.objects.is_empty());
    }

    #[test]
    fn bundled_workspaces_load() {
        for (name, _) in BUNDLED {
            Workspace::bundled(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        let all = Workspace::all_bundled().unwrap();
        assert!(all.objects.contains_key("regular"));
        assert!(all.pairs.contains_key("eps_g"));
    }

    #[test]
    fn non_reduced_rationals_canonicalize() {
        let ws = Workspace::bundled("sweedler").unwrap();
        let text = BUNDLED[1].1.replacen("\"-1\"", "\"-2/2\"", 1).replacen("\"1\"", "\"4/4\"", 1);
        assert_ne!(text, BUNDLED[1].1);
        let ws2 = Workspace::from_json(&text).unwrap();
        assert_eq!(ws.bimonads, ws2.bimonads);
        assert_eq!(ws.automorphisms, ws2.automorphisms);
    }

    #[test]
    fn corrupted_bimonad_names_the_identity() {
        let mut f = Bimonad::sweedler().to_file();
        f.comult.set(4 + 2, 2, crate::exactmat::q(0));
        let m = Manifest { bimonads: vec![Entry::Inline(f)], ..Manifest::default() };
        let text = serde_json::to_string(&m).unwrap();
        match Workspace::from_json(&text) {
            Err(YdError::IntegrityError { path, identity }) => {
                assert_eq!(path, "bimonads[0]");
                assert_eq!(identity, "counit-left");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn files_on_disk() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("h4.json"), serde_json::to_string(&Bimonad::sweedler().to_file()).unwrap()).unwrap();
        std::fs::write(dir.path().join("ydlab.json"), r#"{"bimonads": ["h4.json"]}"#).unwrap();
        let ws = Workspace::open(Some(dir.path().to_str().unwrap())).unwrap();
        assert!(ws.bimonads.contains_key("sweedler"));
        std::fs::write(dir.path().join("ydlab.json"), r#"{"bimonads": ["missing.json"]}"#).unwrap();
        assert!(matches!(Workspace::open(Some(dir.path().to_str().unwrap())), Err(YdError::Io(_))));
        std::fs::write(dir.path().join("ydlab.json"), r#"{"bimonads": [], "extra": 1}"#).unwrap();
        assert!(matches!(Workspace::open(Some(dir.path().to_str().unwrap())), Err(YdError::MalformedInput(_))));
    }

    #[test]
    fn homs_between_bimonads() {
        let ws = Workspace::all_bundled().unwrap();
        assert!(matches!(ws.hom("sweedler", "k"), Err(YdError::EmptyHom(_))));
        assert!(ws.hom("cyclic2", "k").is_ok());
        assert_eq!(ws.hom("sweedler", "sweedler").unwrap().pair_order(), 4);
    }
}
