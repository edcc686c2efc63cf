//! Building and validating Δ-complexes, boundary labels, and the
//! partial action of words on 0-cells.
//!
//! ```bash
//! cargo run --example delta_complexes
//! ```

use delta_immersions::{samples, ComplexBuilder};

fn main() {
    // a triangle with three distinct vertices, labeled over the base
    let t = samples::triangle();
    let report = t.validate();
    println!("triangle valid: {}", report.ok());

    let cell = t.cell_by_id(2, "T").unwrap();
    println!(
        "boundary label of T: {}",
        t.alphabet().format_word(&t.boundary_label(cell).unwrap())
    );
    println!("root of T: {}", t.vertex_id(t.root(cell)));

    let a = t.vertex_named("A").unwrap();
    for text in ["x", "x y", "x y z'", "rho", "z z'"] {
        let word = t.alphabet().parse_word(text).unwrap();
        match t.act(a, &word) {
            Some(v) => println!("A . {text:8} = {}", t.vertex_id(v)),
            None => println!("A . {text:8} undefined"),
        }
    }

    // an unlabeled complex gets a canonical labeling: every cell its own
    // letter, all 0-cells collapsed to the base point
    let mut b = ComplexBuilder::new("pair_of_edges");
    b.vertex("P").vertex("Q");
    b.cell(1, "e1", &["Q", "P"], None);
    b.cell(1, "e2", &["Q", "P"], None);
    let c = b.build().unwrap();
    let (base, relabeled) = c.canonical_labeling().unwrap();
    println!(
        "\ncanonical base of two parallel edges: {} vertex, {} loops",
        base.vertex_count(),
        base.cell_count(1)
    );
    println!("relabeled complex:\n{}", relabeled.to_json_string());
}
