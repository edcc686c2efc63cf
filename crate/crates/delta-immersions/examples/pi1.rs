//! Fundamental-group presentations: the maximum group image of the
//! inverse monoid of a base complex kills every boundary relator.
//!
//! ```bash
//! cargo run --example pi1
//! ```

use delta_immersions::samples;

fn main() {
    println!("torus        {}", samples::torus_base().pi1_presentation());
    println!(
        "triangle     {}",
        samples::triangle_base().pi1_presentation()
    );
    println!(
        "free on a,b  {}",
        samples::bouquet(&["a", "b"]).pi1_presentation()
    );
    println!(
        "tetrahedron  {}",
        samples::tetrahedron_base().pi1_presentation()
    );
}
