use groupwidth::generators::{generate_circle, generate_torus, presentation_complex};
use groupwidth::homology::FieldSpec;
use groupwidth::search::{anneal_min, exhaustive_min, AnnealParams, SearchResult};

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

fn same_across_pools(f: impl Fn() -> SearchResult + Sync) {
    let one = in_pool(1, &f);
    for threads in [2, 4, 7] {
        assert_eq!(in_pool(threads, &f), one, "{threads} threads");
    }
}

#[test]
fn exhaustive_results_do_not_depend_on_workers() {
    let t23 = generate_torus(2, 3).unwrap();
    let t24 = generate_torus(2, 4).unwrap();
    let hex = generate_circle(6).unwrap();
    let moore = presentation_complex(1, &[vec![1, 1, 1]]).unwrap();
    same_across_pools(|| exhaustive_min(t23.complex(), FieldSpec::Rationals, None).unwrap());
    same_across_pools(|| exhaustive_min(t24.complex(), FieldSpec::Rationals, None).unwrap());
    same_across_pools(|| exhaustive_min(&hex, FieldSpec::Rationals, None).unwrap());
    same_across_pools(|| exhaustive_min(&moore, FieldSpec::prime(3).unwrap(), None).unwrap());
}

#[test]
fn annealing_results_do_not_depend_on_workers() {
    let t24 = generate_torus(2, 4).unwrap();
    let hex = generate_circle(6).unwrap();
    same_across_pools(|| anneal_min(t24.complex(), FieldSpec::Rationals, &AnnealParams::with_seed(7)).unwrap());
    same_across_pools(|| anneal_min(&hex, FieldSpec::Rationals, &AnnealParams::with_seed(11)).unwrap());
}

#[test]
fn annealing_is_reproducible_from_the_seed() {
    let t24 = generate_torus(2, 4).unwrap();
    let p = AnnealParams { steps: 500, restarts: 2, ..AnnealParams::with_seed(3) };
    let a = anneal_min(t24.complex(), FieldSpec::Rationals, &p).unwrap();
    let b = anneal_min(t24.complex(), FieldSpec::Rationals, &p).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.seed, Some(3));
}
