//! Ready-made complexes used throughout the docs, examples, and tests.

use crate::complex::{BaseComplex, ComplexBuilder, DeltaComplex};

/// One vertex with a loop per edge letter; the free case.
pub fn bouquet(xs: &[&str]) -> BaseComplex {
    let mut b = ComplexBuilder::new("bouquet");
    b.vertex("pt");
    for x in xs {
        b.cell(1, x, &["pt", "pt"], None);
    }
    b.build_base().expect("bouquet is a base complex")
}

/// One vertex, edges `x, y, z`, one 2-cell with boundary `x y z'`.
pub fn triangle_base() -> BaseComplex {
    let mut b = ComplexBuilder::new("triangle_base");
    b.vertex("pt");
    b.cell(1, "x", &["pt", "pt"], None);
    b.cell(1, "y", &["pt", "pt"], None);
    b.cell(1, "z", &["pt", "pt"], None);
    b.cell(2, "rho", &["y", "z", "x"], None);
    b.build_base().expect("triangle base")
}

/// The standard two-triangle torus: edges `a, b, c`, 2-cells
/// `U = [b, c, a]` and `L = [a, c, b]`.
pub fn torus_base() -> BaseComplex {
    let mut b = ComplexBuilder::new("torus_base");
    b.vertex("pt");
    b.cell(1, "a", &["pt", "pt"], None);
    b.cell(1, "b", &["pt", "pt"], None);
    b.cell(1, "c", &["pt", "pt"], None);
    b.cell(2, "U", &["b", "c", "a"], None);
    b.cell(2, "L", &["a", "c", "b"], None);
    b.build_base().expect("torus base")
}

/// The boundary-plus-interior of a 3-simplex collapsed to one vertex:
/// six edges, four triangles, one 3-cell.
pub fn tetrahedron_base() -> BaseComplex {
    let mut b = ComplexBuilder::new("tetrahedron_base");
    b.vertex("pt");
    for x in ["x01", "x02", "x03", "x12", "x13", "x23"] {
        b.cell(1, x, &["pt", "pt"], None);
    }
    b.cell(2, "f0", &["x23", "x13", "x12"], None);
    b.cell(2, "f1", &["x23", "x03", "x02"], None);
    b.cell(2, "f2", &["x13", "x03", "x01"], None);
    b.cell(2, "f3", &["x12", "x02", "x01"], None);
    b.cell(3, "tau", &["f0", "f1", "f2", "f3"], None);
    b.build_base().expect("tetrahedron base")
}

/// The smallest 3-dimensional base: one edge, one 2-cell with boundary
/// `x x x'`, one 3-cell with all four faces equal.
pub fn three_cell_base() -> BaseComplex {
    let mut b = ComplexBuilder::new("three_cell_base");
    b.vertex("pt");
    b.cell(1, "x", &["pt", "pt"], None);
    b.cell(2, "rho", &["x", "x", "x"], None);
    b.cell(3, "tau", &["rho", "rho", "rho", "rho"], None);
    b.build_base().expect("three cell base")
}

/// Three vertices spanning one 2-cell, labeled over [`triangle_base`].
pub fn triangle() -> DeltaComplex {
    let mut b = ComplexBuilder::new("triangle");
    b.vertex("A").vertex("B").vertex("C");
    b.edge("x", "A", "B", "x");
    b.edge("y", "B", "C", "y");
    b.edge("z", "A", "C", "z");
    b.cell(2, "T", &["y", "z", "x"], Some("rho"));
    b.build()
        .expect("triangle complex")
        .relabel_over(triangle_base().alphabet())
        .expect("triangle labels")
}

/// The `n`-cycle cover of the one-loop bouquet: `a`-edges
/// `A0 → A1 → ... → A0`.
pub fn cycle_cover(n: usize) -> DeltaComplex {
    assert!(n >= 1);
    let mut b = ComplexBuilder::new("cycle");
    for i in 0..n {
        b.vertex(&format!("A{i}"));
    }
    for i in 0..n {
        let from = format!("A{i}");
        let to = format!("A{}", (i + 1) % n);
        b.cell(1, &format!("a{i}"), &[&to, &from], Some("a"));
    }
    b.build()
        .expect("cycle cover")
        .relabel_over(bouquet(&["a"]).alphabet())
        .expect("cycle labels")
}

/// The connected double cover of the one-loop bouquet.
pub fn double_cover() -> DeltaComplex {
    cycle_cover(2)
}

/// A single `a`-edge `A → B` over the one-loop bouquet; an immersion
/// that is not a covering.
pub fn path_complex() -> DeltaComplex {
    let mut b = ComplexBuilder::new("path");
    b.vertex("A").vertex("B");
    b.edge("a", "A", "B", "a");
    b.build()
        .expect("path complex")
        .relabel_over(bouquet(&["a"]).alphabet())
        .expect("path labels")
}
