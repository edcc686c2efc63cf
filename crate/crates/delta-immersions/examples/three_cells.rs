//! Dimension three: boundary labels of 3-cells thread through the
//! `[v0,v1]` edge, and lifting the submonoid generated by the 3-cell
//! letter of the collapsed tetrahedron recovers the genuine
//! four-vertex tetrahedron boundary.
//!
//! ```bash
//! cargo run --example three_cells
//! ```

use delta_immersions::{
    build_complex, check_immersion, is_covering, samples, ClosureConfig, Presentation,
    SubmonoidSpec, Vertex,
};

fn main() {
    let ball = samples::three_cell_base();
    let tau = ball.cell_by_id(3, "tau").unwrap();
    println!(
        "boundary label of the one-edge 3-cell: {}",
        ball.alphabet()
            .format_word(&ball.boundary_label(tau).unwrap())
    );

    let tetra = samples::tetrahedron_base();
    let tau = tetra.cell_by_id(3, "tau").unwrap();
    println!(
        "boundary label of the tetrahedral 3-cell: {}",
        tetra
            .alphabet()
            .format_word(&tetra.boundary_label(tau).unwrap())
    );

    // A(tau) unrolls the whole boundary 2-sphere
    let p = Presentation::new(&tetra);
    let a = p
        .schutzenberger(&tetra.alphabet().parse_word("tau").unwrap())
        .unwrap();
    println!(
        "A(tau) has {} vertices and {} positive edges",
        a.vertex_count(),
        a.positive_edges().len()
    );

    // lifting <tau> over the one-vertex tetrahedron separates the four
    // vertices again
    let c = tetra.complex();
    let spec = SubmonoidSpec::new(c, Vertex(0), vec![c.alphabet().parse_word("tau").unwrap()]);
    let lifted = build_complex(&spec, &ClosureConfig::default()).unwrap();
    println!(
        "lift of <tau>: {} vertices, {} edges, {} triangles, {} three-cells",
        lifted.complex.cell_count(0),
        lifted.complex.cell_count(1),
        lifted.complex.cell_count(2),
        lifted.complex.cell_count(3),
    );
    println!(
        "valid {} / immersion {} / covering {}",
        lifted.complex.validate().ok(),
        check_immersion(&lifted.map, &lifted.complex, c).ok(),
        is_covering(&lifted.map, &lifted.complex, c).unwrap(),
    );
}
