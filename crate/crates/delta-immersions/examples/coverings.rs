//! Immersion and covering detection: the double cover of the bouquet is
//! a covering, a single edge immerses without covering, and the
//! labeling map of the triangle is an immersion into its base.
//!
//! ```bash
//! cargo run --example coverings
//! ```

use delta_immersions::{check_immersion, infer_map, is_covering, samples};

fn main() {
    let bouquet = samples::bouquet(&["a"]).complex().clone();
    let pt = bouquet.vertex_named("pt").unwrap();

    let cover = samples::double_cover();
    let f = infer_map(&cover, &bouquet, cover.vertex_named("A0").unwrap(), pt).unwrap();
    println!(
        "double cover -> bouquet: immersion {} covering {}",
        check_immersion(&f, &cover, &bouquet).ok(),
        is_covering(&f, &cover, &bouquet).unwrap(),
    );

    let path = samples::path_complex();
    let g = infer_map(&path, &bouquet, path.vertex_named("A").unwrap(), pt).unwrap();
    println!(
        "single edge -> bouquet: immersion {} covering {}",
        check_immersion(&g, &path, &bouquet).ok(),
        is_covering(&g, &path, &bouquet).unwrap(),
    );

    let triangle = samples::triangle();
    let base = samples::triangle_base().complex().clone();
    let h = infer_map(
        &triangle,
        &base,
        triangle.vertex_named("A").unwrap(),
        base.vertex_named("pt").unwrap(),
    )
    .unwrap();
    println!(
        "triangle -> base: immersion {} covering {}",
        check_immersion(&h, &triangle, &base).ok(),
        is_covering(&h, &triangle, &base).unwrap(),
    );
}
