macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;
    };
}

example!(partitions, "../examples/partitions.rs");
example!(jack_polynomials, "../examples/jack_polynomials.rs");
example!(shifted_jack, "../examples/shifted_jack.rs");
example!(generating_series, "../examples/generating_series.rs");
example!(bernoulli, "../examples/bernoulli.rs");
example!(multiple_bernoulli, "../examples/multiple_bernoulli.rs");
example!(closed_forms, "../examples/closed_forms.rs");
example!(verify_theorems, "../examples/verify_theorems.rs");

#[test]
fn every_example_runs() {
    partitions::run_example().unwrap();
    jack_polynomials::run_example().unwrap();
    shifted_jack::run_example().unwrap();
    generating_series::run_example().unwrap();
    bernoulli::run_example().unwrap();
    multiple_bernoulli::run_example().unwrap();
    closed_forms::run_example().unwrap();
    verify_theorems::run_example().unwrap();
}
