// The benchmarks unwrap on these; keep them loadable.
use injective_core::corpus;

#[test]
fn benchmarked_fixtures_exist() {
    for name in ["petersen", "heawood", "bipartite-cubic", "outerplanar-twin", "k4-7", "prism"] {
        assert!(corpus::get(name).is_ok(), "{name}");
    }
}
