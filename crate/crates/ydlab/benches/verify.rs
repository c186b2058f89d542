//! Parallel against sequential execution on the data-parallel kernels.
//!
//! Without the `parallel` feature both variants run the sequential path.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ydlab::catalog::sweedler_object;
use ydlab::bimonad::{Bimonad, ZeroAutomorphism};
use ydlab::groupsys::{verify_system_axioms_with, FiniteGroup, FusionMap, GradedGroupSystem};
use ydlab::par::Execution;
use ydlab::ydcat::{compose_yd, HomGroups};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn group_axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("group-axioms");
    group.sample_size(10);
    let systems = [
        ("s3", Arc::new(FiniteGroup::symmetric3())),
        ("d4", Arc::new(FiniteGroup::dihedral4())),
    ];
    for (name, g) in systems {
        let j = FusionMap::inner(g.clone(), 1).unwrap();
        let sys = GradedGroupSystem::new(name, vec![g.clone(), g.clone()], vec![j]).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &sys, |b, sys| {
                b.iter(|| verify_system_axioms_with(sys, 0, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn matrix_products(c: &mut Criterion) {
    // Twisted YD sides of a 16-dimensional composite are 1024 x 1024.
    let h = Arc::new(Bimonad::sweedler());
    let id = ZeroAutomorphism::identity(h.clone());
    let x = sweedler_object("regular", id.clone(), id.clone()).unwrap();
    let hom = HomGroups::trivial(h.clone(), h.clone());
    let xx = compose_yd(&x, &x, &hom, &hom).unwrap();
    let psi = xx.psi().clone();
    let lift = psi.kron(&h.id());
    let mut group = c.benchmark_group("compose");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "psi16-x-id"), |b| b.iter(|| lift.compose_with(&lift, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, group_axioms, matrix_products);
criterion_main!(benches);
