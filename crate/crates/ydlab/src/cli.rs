//! The `ydlab` command line: argument parsing, dispatch and report output.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 for
//! input errors. [`dispatch`] never touches the process environment, so it
//! can be driven directly from tests.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bimonad::{verify_bimonad, verify_lambda_consequences, verify_zero_automorphism, LambdaFamily};
use crate::error::{Result, YdError};
use crate::exactmat::LinMap;
use crate::groupsys::{pair_inverse, pair_product, transitive_product, verify_system_axioms_with, GradedPair};
use crate::involution::{
    check_involution_pair, iso_backward, iso_forward, lambda_helper_identities, tau_preconditions, yd_from_tau_pair,
    TauData,
};
use crate::bimonad::{monadic_mult_sides, monadic_unit_sides};
use crate::par::Execution;
use crate::report::{Check, Counterexample, VerificationReport};
use crate::workspace::{to_json_pretty, Workspace};
use crate::ydcat::{
    apply_phi, classify_grading, compose_yd, twist_psi, verify_phi_monoidal, verify_yd, GradedYDObject, HomGroups,
    TwistMode,
};

#[derive(Debug, Parser)]
#[command(name = "ydlab", version, about = "Exact checks for graded Yetter-Drinfel'd objects over bialgebras")]
pub struct Cli {
    /// Bundled workspace name, manifest file, or directory with ydlab.json.
    #[arg(long, global = true)]
    pub workspace: Option<String>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Source,
    Target,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bialgebra axioms, λ-compatibilities and both distributive laws.
    VerifyBimonad { name: String },
    /// A 0-automorphism, or with --family the λ-family of the working group.
    VerifyAut {
        bimonad: String,
        aut: Option<String>,
        #[arg(long)]
        family: bool,
    },
    /// Axioms of a graded group system.
    GroupAxioms {
        system: String,
        #[arg(long)]
        sequential: bool,
    },
    /// Distributive laws and the twisted YD condition, optionally regraded.
    VerifyYd {
        #[arg(long)]
        object: String,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Every grading of the working groups at which an object is YD.
    Classify {
        #[arg(long)]
        object: String,
    },
    /// Composite X·Y of two stored objects.
    Compose {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Twisted ψ of an object and its monadic laws.
    Twist {
        #[arg(long)]
        object: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        aut: String,
    },
    /// Laws of the twisting functors on an object, and monoidality with --with.
    PhiLaws {
        #[arg(long)]
        object: String,
        #[arg(long)]
        with: Option<String>,
    },
    /// The three forms of a pair in involution; --helpers adds the λ identities.
    InvolutionCheck {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        helpers: bool,
    },
    /// Moves an object between the (α, β) and (e, e) components.
    Iso {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Builds an object from flip crossings on k^m and a pair in involution.
    TauBuild {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        xdim: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
/// `env_workspace` stands in for `YDLAB_WORKSPACE`.
pub fn dispatch(argv: &[String], env_workspace: Option<String>) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = match e.kind() {
                ErrorKind::InvalidSubcommand => {
                    let cmd = argv.iter().skip(1).find(|a| !a.starts_with('-')).cloned().unwrap_or_default();
                    format!("error: {}\n{e}", YdError::UnknownCommand(cmd))
                }
                _ => e.to_string(),
            };
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match run(cli, env_workspace) {
        Ok(report) => {
            let stdout = if json {
                serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
            } else {
                format!("{report}\n")
            };
            Outcome { code: report.exit_code(), stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn run(cli: Cli, env_workspace: Option<String>) -> Result<VerificationReport> {
    let ws = Workspace::open(cli.workspace.as_deref().or(env_workspace.as_deref()))?;
    let seed = cli.seed;
    match cli.command {
        Command::VerifyBimonad { name } => Ok(verify_bimonad(&*ws.bimonad(&name)?)),
        Command::VerifyAut { bimonad, aut, family } => {
            if family {
                let fam = LambdaFamily::new(ws.aut_group(&bimonad)?)?;
                return verify_lambda_consequences(&fam);
            }
            let aut = aut.ok_or_else(|| YdError::MalformedInput("name an automorphism or pass --family".into()))?;
            let a = ws.automorphism(&bimonad, &aut)?;
            let mut r = verify_zero_automorphism(&*ws.bimonad(&bimonad)?, a.map())?;
            r.subject = format!("0-automorphism {aut} of {bimonad}");
            Ok(r)
        }
        Command::GroupAxioms { system, sequential } => {
            let sys = ws.systems.get(&system).ok_or_else(|| YdError::MalformedInput(format!("unknown system {system}")))?;
            let exec = if sequential { Execution::Sequential } else { Execution::default() };
            verify_system_axioms_with(sys, seed, exec)
        }
        Command::VerifyYd { object, alpha, beta } => {
            let mut o = ws.object(&object)?;
            let a = match alpha {
                Some(n) => ws.automorphism(o.target().name(), &n)?,
                None => o.alpha().clone(),
            };
            let b = match beta {
                Some(n) => ws.automorphism(o.source().name(), &n)?,
                None => o.beta().clone(),
            };
            o = o.with_grading(a, b)?;
            let mut r = verify_yd(&o);
            r.note(format!("grading ({}, {})", ws.automorphism_name(o.alpha())?, ws.automorphism_name(o.beta())?));
            Ok(r)
        }
        Command::Classify { object } => {
            let o = ws.object(&object)?;
            let hom = ws.hom(o.source().name(), o.target().name())?;
            let pool: Vec<_> = (0..hom.pair_order()).map(|i| hom.automorphisms(hom.pair(i))).collect::<Result<_>>()?;
            let hits = classify_grading(&o, &pool);
            let names = hits
                .iter()
                .map(|(a, b)| Ok(json!([ws.automorphism_name(a)?, ws.automorphism_name(b)?])))
                .collect::<Result<Vec<_>>>()?;
            let mut r = VerificationReport::new(format!("gradings of {object}"));
            r.note(format!("{} of {} pairs in the working groups pass", hits.len(), pool.len()));
            r.data = Some(json!({ "gradings": names }));
            Ok(r)
        }
        Command::Compose { left, right, output } => {
            let (x, y) = (ws.object(&left)?, ws.object(&right)?);
            let hx = ws.hom(x.source().name(), x.target().name())?;
            let hy = ws.hom(y.source().name(), y.target().name())?;
            let xy = compose_yd(&x, &y, &hx, &hy)?;
            let mut r = verify_yd(&xy);
            let expect = transitive_product(hx.grading(&x)?, hy.grading(&y)?, hy.fusion(), hx.fusion())?;
            let got = hy.then(&hx)?.grading(&xy)?;
            r.push(pair_check("grading-law", got, expect));
            write_object(&ws, &xy, output.as_ref(), &mut r)?;
            Ok(r)
        }
        Command::Twist { object, mode, aut } => {
            let o = ws.object(&object)?;
            let hom = ws.hom(o.source().name(), o.target().name())?;
            let (mode, owner) = match mode {
                Mode::Source => (TwistMode::Source, o.source().name().to_string()),
                Mode::Target => (TwistMode::Target, o.target().name().to_string()),
            };
            let psi = twist_psi(&o, mode, &ws.automorphism(&owner, &aut)?, &hom)?;
            let mut r = VerificationReport::new(format!("twisted psi of {object}"));
            let (fp, f, m) = (o.target(), o.source(), o.xdim());
            let (l, rr) = monadic_mult_sides(fp, f, m, &psi)?;
            r.push(Check::maps("monadic-mult", &l, &rr));
            let (l, rr) = monadic_unit_sides(fp, f, m, &psi)?;
            r.push(Check::maps("monadic-unit", &l, &rr));
            r.data = Some(json!({ "psi": psi }));
            Ok(r)
        }
        Command::PhiLaws { object, with } => phi_laws(&ws, &object, with.as_deref()),
        Command::InvolutionCheck { pair, helpers } => {
            let p = ws.pair(&pair)?;
            let mut r = check_involution_pair(&p)?;
            if helpers {
                let n = p.target().dim();
                for c in lambda_helper_identities(&p, &LinMap::flip(n, n))?.checks {
                    r.push(c);
                }
            }
            r.subject = format!("pair {pair}");
            Ok(r)
        }
        Command::Iso { pair, object, direction, output } => {
            let p = ws.pair(&pair)?;
            let o = ws.object(&object)?;
            let (out, back) = match direction {
                Direction::Forward => {
                    let out = iso_forward(&p, &o)?;
                    let back = iso_backward(&p, &out)?;
                    (out, back)
                }
                Direction::Backward => {
                    let out = iso_backward(&p, &o)?;
                    let back = iso_forward(&p, &out)?;
                    (out, back)
                }
            };
            let mut r = verify_yd(&out);
            let component = match direction {
                Direction::Forward => out.is_trivially_graded(),
                Direction::Backward => out.alpha() == &p.alpha && out.beta() == &p.beta,
            };
            r.push(if component { Check::pass("component") } else { Check::error("component", "wrong grading") });
            r.push(if back == o { Check::pass("round-trip") } else { Check::error("round-trip", "inverse differs") });
            let default = PathBuf::from(format!("{object}.{}.json", if direction == Direction::Forward { "forward" } else { "backward" }));
            write_object(&ws, &out, Some(output.as_ref().unwrap_or(&default)), &mut r)?;
            Ok(r)
        }
        Command::TauBuild { pair, xdim, output } => {
            let p = ws.pair(&pair)?;
            let (f, fp) = (p.source().clone(), p.target().clone());
            if f.dim() != fp.dim() {
                return Err(YdError::DimensionMismatch("flip crossings need bimonads of equal dimension".into()));
            }
            let t = TauData::flips(fp.dim(), xdim.unwrap_or(fp.dim()));
            let mut r = VerificationReport::new(format!("tau construction from {pair}"));
            for c in tau_preconditions(&f, &fp, &t, &p) {
                r.push(c);
            }
            if r.passed() {
                let o = yd_from_tau_pair(&format!("tau_{pair}"), &t, &p)?;
                for c in verify_yd(&o).checks {
                    r.push(c);
                }
                write_object(&ws, &o, output.as_ref(), &mut r)?;
            }
            Ok(r)
        }
    }
}

fn pair_check(label: &str, got: GradedPair, expect: GradedPair) -> Check {
    if got == expect {
        Check::pass(label)
    } else {
        Check::fail(
            label,
            Counterexample {
                coordinate: vec![],
                lhs: format!("({}, {})", got.left, got.right),
                rhs: format!("({}, {})", expect.left, expect.right),
            },
        )
    }
}

fn write_object(ws: &Workspace, o: &GradedYDObject, path: Option<&PathBuf>, r: &mut VerificationReport) -> Result<()> {
    let Some(path) = path else { return Ok(()) };
    let text = to_json_pretty(&ws.object_to_file(o)?)?;
    std::fs::write(path, text).map_err(|e| YdError::Io(format!("{}: {e}", path.display())))?;
    r.note(format!("wrote {}", path.display()));
    Ok(())
}

fn first_failure(label: &str, coord: Vec<usize>, l: &GradedYDObject, r: &GradedYDObject) -> Option<Check> {
    let diff = if l.psi() != r.psi() {
        Some(("psi", l.psi(), r.psi()))
    } else if l.phi() != r.phi() {
        Some(("phi", l.phi(), r.phi()))
    } else {
        None
    };
    if let Some((what, a, b)) = diff {
        let d = a.first_difference(b)?;
        let mut coordinate = coord;
        coordinate.extend([d.row, d.col]);
        return Some(Check::fail(
            label,
            Counterexample { coordinate, lhs: format!("{what} {}", d.lhs), rhs: format!("{what} {}", d.rhs) },
        ));
    }
    if l.alpha() != r.alpha() || l.beta() != r.beta() {
        return Some(Check::fail(label, Counterexample { coordinate: coord, lhs: "grading".into(), rhs: "grading".into() }));
    }
    None
}

/// Φ_(e,e) = id, the group-map law, invertibility and well-definedness over
/// the whole pair group; with `with`, monoidality over every pair.
pub fn phi_laws(ws: &Workspace, object: &str, with: Option<&str>) -> Result<VerificationReport> {
    let o = ws.object(object)?;
    let hom = ws.hom(o.source().name(), o.target().name())?;
    let mut r = phi_laws_for(&o, &hom)?;
    if let Some(y) = with {
        let y = ws.object(y)?;
        let hy = ws.hom(y.source().name(), y.target().name())?;
        r.push(phi_monoidal_check(&o, &y, &hom, &hy)?);
    }
    r.note("coordinates are pair indices in the working groups, then row and column");
    Ok(r)
}

pub fn phi_laws_for(o: &GradedYDObject, hom: &HomGroups) -> Result<VerificationReport> {
    let n = hom.pair_order();
    let j = hom.fusion();
    let mut r = VerificationReport::new(format!("twisting functors on {}", o.name));
    let e = GradedPair::new(0, 0);
    let id = apply_phi(e, o, hom)?;
    r.push(first_failure("phi-identity", vec![0], &id, o).unwrap_or_else(|| Check::pass("phi-identity")));
    let images: Vec<GradedYDObject> = (0..n).map(|i| apply_phi(hom.pair(i), o, hom)).collect::<Result<_>>()?;
    let mut group_map = Check::pass("phi-group-map");
    'outer: for a in 0..n {
        for b in 0..n {
            let ab = pair_product(hom.pair(a), hom.pair(b), j)?;
            let lhs = apply_phi(ab, o, hom)?;
            let rhs = apply_phi(hom.pair(a), &images[b], hom)?;
            if let Some(c) = first_failure("phi-group-map", vec![a, b], &lhs, &rhs) {
                group_map = c;
                break 'outer;
            }
        }
    }
    r.push(group_map);
    let mut inverse = Check::pass("phi-inverse");
    let mut defined = Check::pass("phi-preserves-yd");
    for (i, img) in images.iter().enumerate() {
        let back = apply_phi(pair_inverse(hom.pair(i), j)?, img, hom)?;
        if inverse.passed {
            if let Some(c) = first_failure("phi-inverse", vec![i], &back, o) {
                inverse = c;
            }
        }
        if defined.passed {
            let v = verify_yd(img);
            if let Some(bad) = v.checks.into_iter().find(|c| !c.passed) {
                let mut cx = bad.counterexample.unwrap_or(Counterexample { coordinate: vec![], lhs: String::new(), rhs: String::new() });
                cx.coordinate.insert(0, i);
                cx.lhs = format!("{}: {}", bad.label, cx.lhs);
                defined = Check::fail("phi-preserves-yd", cx);
            }
        }
    }
    r.push(inverse);
    r.push(defined);
    Ok(r)
}

/// Monoidality of Φ on `x·y` for every pair of `G″ × G`, as one check.
pub fn phi_monoidal_check(x: &GradedYDObject, y: &GradedYDObject, hx: &HomGroups, hy: &HomGroups) -> Result<Check> {
    let hxy = hy.then(hx)?;
    for i in 0..hxy.pair_order() {
        let rep = verify_phi_monoidal(hxy.pair(i), x, y, hx, hy)?;
        if let Some(bad) = rep.checks.into_iter().find(|c| !c.passed) {
            let mut cx = bad.counterexample.unwrap_or(Counterexample { coordinate: vec![], lhs: String::new(), rhs: String::new() });
            cx.coordinate.insert(0, i);
            cx.lhs = format!("{}: {}", bad.label, cx.lhs);
            return Ok(Check::fail("phi-monoidal", cx));
        }
    }
    Ok(Check::pass("phi-monoidal"))
}
