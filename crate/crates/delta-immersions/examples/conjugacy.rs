//! Conjugacy of closed inverse submonoids classifies basepoint changes:
//! the submonoids {1, aa', a²a⁻²} and {1, aa', a'a, aa⁻²a} are
//! conjugate by `a` but not isomorphic, while the trivial submonoid is
//! conjugate to nothing larger.
//!
//! ```bash
//! cargo run --example conjugacy
//! ```

use delta_immersions::{
    are_conjugate, build_complex, complex_isomorphic, samples, ClosureConfig, SubmonoidSpec, Vertex,
};

fn main() {
    let bouquet = samples::bouquet(&["a"]);
    let c = bouquet.complex();
    let al = c.alphabet().clone();
    let cfg = ClosureConfig::default();
    let gens =
        |texts: &[&str]| -> Vec<_> { texts.iter().map(|t| al.parse_word(t).unwrap()).collect() };

    let h = SubmonoidSpec::new(c, Vertex(0), gens(&["a a a' a'"]));
    let k = SubmonoidSpec::new(c, Vertex(0), gens(&["a a'", "a' a"]));
    match are_conjugate(&h, &k, &cfg).unwrap() {
        Some(m) => println!("H and K conjugate by `{}`", al.format_word(&m)),
        None => println!("H and K not conjugate"),
    }

    // conjugate submonoids share their complex up to basepoint
    let dh = build_complex(&h, &cfg).unwrap();
    let dk = build_complex(&k, &cfg).unwrap();
    println!(
        "complexes isomorphic ignoring basepoints: {}",
        complex_isomorphic(&dh.complex, &dk.complex, None).is_some()
    );
    println!(
        "complexes isomorphic with pinned basepoints: {}",
        complex_isomorphic(&dh.complex, &dk.complex, Some((dh.base, dk.base))).is_some()
    );

    let trivial = SubmonoidSpec::new(c, Vertex(0), Vec::new());
    let single = SubmonoidSpec::new(c, Vertex(0), gens(&["a a'"]));
    match are_conjugate(&trivial, &single, &cfg).unwrap() {
        Some(m) => println!("unexpected witness `{}`", al.format_word(&m)),
        None => println!("{{1}} and <a a'> are not conjugate"),
    }
}
