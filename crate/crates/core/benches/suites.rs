use std::hint::black_box;
use std::sync::Arc;

use braided_twist::catalog::{self, Params};
use braided_twist::exec;
use braided_twist::hopf::suite::check_hopf_axioms;
use braided_twist::twist::suite::{check_braided_axioms, check_schauenburg};
use braided_twist::twist::twist;
use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

fn modes(c: &mut Criterion, name: &str, run: impl Fn() + Copy) {
    let mut g = c.benchmark_group(name);
    g.sample_size(10);
    for (label, seq) in [("parallel", false), ("sequential", true)] {
        g.bench_function(label, |b| {
            exec::set_sequential(seq);
            b.iter_batched(|| (), |_| run(), BatchSize::PerIteration);
        });
    }
    exec::set_sequential(false);
    g.finish();
}

fn suq2(c: &mut Criterion) {
    modes(c, "suq2/hopf", || {
        let e = catalog::build("suq2", &Params::default()).unwrap();
        black_box(check_hopf_axioms(&e.hopf, 3).unwrap());
    });
    modes(c, "suq2/braided", || {
        let e = catalog::build("suq2", &Params::default()).unwrap();
        let t = twist(e.hopf.clone(), "u").unwrap();
        black_box(check_braided_axioms(&t, 3).unwrap());
    });
    modes(c, "double-torus/schauenburg", || {
        let e = catalog::build("double-torus", &Params::default()).unwrap();
        let t = twist(e.hopf.clone() as Arc<_>, "u").unwrap();
        black_box(check_schauenburg(&t, 3).unwrap());
    });
}

criterion_group!(benches, suq2);
criterion_main!(benches);
