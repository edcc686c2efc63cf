//! Lifting a closed inverse submonoid to its complex: the submonoid
//! generated by `a a` over the one-loop bouquet yields the connected
//! double cover, and the lift is a covering map.
//!
//! ```bash
//! cargo run --example build_cover
//! ```

use delta_immersions::{
    build_complex, complex_isomorphic, is_covering, samples, ClosureConfig, SubmonoidSpec, Vertex,
};

fn main() {
    let bouquet = samples::bouquet(&["a"]);
    let c = bouquet.complex();
    let spec = SubmonoidSpec::new(c, Vertex(0), vec![c.alphabet().parse_word("a a").unwrap()]);
    let lifted = build_complex(&spec, &ClosureConfig::default()).unwrap();

    println!("lifted complex:\n{}", lifted.complex.to_json_string());
    println!(
        "\nbase vertex {} maps to {}",
        lifted.complex.vertex_id(lifted.base),
        c.vertex_id(lifted.map.vertex_image(lifted.base)),
    );
    println!(
        "covering map: {}",
        is_covering(&lifted.map, &lifted.complex, c).unwrap()
    );
    let cover = samples::double_cover();
    println!(
        "isomorphic to the double cover: {}",
        complex_isomorphic(&lifted.complex, &cover, None).is_some()
    );

    // the loop monoid of the lift is exactly the submonoid
    let al = c.alphabet();
    for text in ["a a", "a a'", "a", "a a a"] {
        let word = al.parse_word(text).unwrap();
        println!(
            "  `{text}`: in submonoid {} / loops at lift base {}",
            lifted.coset.contains(&word),
            lifted.complex.loop_contains(lifted.base, &word),
        );
    }
}
