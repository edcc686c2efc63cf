//! Shared helpers for the integration and acceptance suites.

#![allow(dead_code)]

use std::path::PathBuf;

use delta_immersions::{samples, Alphabet, CellRef, DeltaComplex, Letter, Vertex, Word};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn w(alphabet: &Alphabet, text: &str) -> Word {
    alphabet.parse_word(text).unwrap()
}

pub fn words(alphabet: &Alphabet, texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| w(alphabet, t)).collect()
}

/// The corpus bases, by name.
pub fn corpus_bases() -> Vec<(&'static str, delta_immersions::BaseComplex)> {
    vec![
        ("bouquet_a", samples::bouquet(&["a"])),
        ("bouquet_ab", samples::bouquet(&["a", "b"])),
        ("triangle_base", samples::triangle_base()),
        ("torus_base", samples::torus_base()),
        ("tetrahedron_base", samples::tetrahedron_base()),
        ("three_cell_base", samples::three_cell_base()),
    ]
}

/// The corpus `(complex, vertex, generators)` triples feeding the coset
/// and lifting suites.
pub fn corpus_triples() -> Vec<(String, DeltaComplex, &'static str, Vec<&'static str>)> {
    let mut out: Vec<(String, DeltaComplex, &'static str, Vec<&'static str>)> = Vec::new();
    let mut push = |name: &str, c: DeltaComplex, at: &'static str, gens: Vec<&'static str>| {
        out.push((format!("{name} at {at} gens {gens:?}"), c, at, gens));
    };

    let triangle = samples::triangle();
    push("triangle", triangle.clone(), "A", vec!["rho"]);
    push("triangle", triangle.clone(), "A", vec!["x y z'"]);
    push("triangle", triangle.clone(), "A", vec!["rho", "x y z'"]);
    push("triangle", triangle.clone(), "B", vec!["y z' x"]);
    push("triangle", triangle.clone(), "A", vec![]);

    let tb = samples::triangle_base().complex().clone();
    push("triangle_base", tb.clone(), "pt", vec!["x"]);
    push("triangle_base", tb.clone(), "pt", vec!["rho"]);
    push("triangle_base", tb.clone(), "pt", vec!["x", "y"]);
    push("triangle_base", tb.clone(), "pt", vec!["x y z'"]);

    let ba = samples::bouquet(&["a"]).complex().clone();
    push("bouquet_a", ba.clone(), "pt", vec!["a a"]);
    push("bouquet_a", ba.clone(), "pt", vec!["a a a' a'"]);
    push("bouquet_a", ba.clone(), "pt", vec!["a a'", "a' a"]);
    push("bouquet_a", ba.clone(), "pt", vec!["a a a"]);

    let bab = samples::bouquet(&["a", "b"]).complex().clone();
    push("bouquet_ab", bab.clone(), "pt", vec!["a", "b"]);
    push("bouquet_ab", bab.clone(), "pt", vec!["a b a' b'"]);
    push("bouquet_ab", bab.clone(), "pt", vec!["a a", "b"]);
    push("bouquet_ab", bab.clone(), "pt", vec!["b' a b"]);

    let torus = samples::torus_base().complex().clone();
    push("torus_base", torus.clone(), "pt", vec!["a"]);
    push("torus_base", torus.clone(), "pt", vec!["U"]);
    push(
        "torus_base",
        torus.clone(),
        "pt",
        vec!["a a", "U", "a U a'"],
    );
    push("torus_base", torus.clone(), "pt", vec!["U", "L"]);

    let tetra = samples::tetrahedron_base().complex().clone();
    push("tetrahedron_base", tetra.clone(), "pt", vec!["tau"]);
    push("tetrahedron_base", tetra.clone(), "pt", vec!["f0", "x01"]);

    let ball = samples::three_cell_base().complex().clone();
    push("three_cell_base", ball.clone(), "pt", vec!["tau"]);
    push("three_cell_base", ball, "pt", vec!["rho x"]);

    out
}

/// The 1-cell of `cell`'s boundary spanned by simplex vertices `v_i` and
/// `v_j` (`i < j`), found by peeling off the other faces.
pub fn simplex_edge(c: &DeltaComplex, cell: CellRef, i: usize, j: usize) -> CellRef {
    assert!(i < j && j <= cell.dim);
    if cell.dim == 1 {
        return cell;
    }
    let m = (0..=cell.dim)
        .rev()
        .find(|&m| m != i && m != j)
        .expect("dim >= 2 leaves a free index");
    let face = c.face(cell, m);
    let (i2, j2) = (i - usize::from(i > m), j - usize::from(j > m));
    simplex_edge(c, face, i2, j2)
}

/// All closed walks of length 1..=`max_len` at simplex vertex 0 on the
/// boundary 1-skeleton of `cell`, rendered as label words.
pub fn boundary_paths(c: &DeltaComplex, cell: CellRef, max_len: usize) -> Vec<Word> {
    let k = cell.dim;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Word)> = vec![(0, Word::empty())];
    while let Some((at, word)) = stack.pop() {
        if word.len() >= max_len {
            continue;
        }
        for next in 0..=k {
            if next == at {
                continue;
            }
            let (i, j, inverted) = if at < next {
                (at, next, false)
            } else {
                (next, at, true)
            };
            let edge = simplex_edge(c, cell, i, j);
            let letter = c.label(edge).expect("corpus cells are labeled");
            let letter = if inverted { letter.inverse() } else { letter };
            let mut w2 = word.clone();
            w2.push(letter);
            if next == 0 {
                out.push(w2.clone());
            }
            stack.push((next, w2));
        }
    }
    out
}

/// All closed generalized walks of length 1..=`max_len` at simplex
/// vertex 0: edge moves plus boundary faces of dimension >= 2 inserted
/// at their roots.
pub fn generalized_boundary_paths(c: &DeltaComplex, cell: CellRef, max_len: usize) -> Vec<Word> {
    let k = cell.dim;
    // face i of the simplex is rooted at vertex 0 for i != 0, vertex 1
    // for i = 0; only faces of dimension >= 2 join generalized paths
    let mut face_moves: Vec<(usize, Letter)> = Vec::new();
    if k >= 3 {
        for i in 0..=k {
            let root = usize::from(i == 0);
            let label = c.label(c.face(cell, i)).expect("corpus cells are labeled");
            face_moves.push((root, label));
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Word)> = vec![(0, Word::empty())];
    while let Some((at, word)) = stack.pop() {
        if word.len() >= max_len {
            continue;
        }
        for next in 0..=k {
            if next == at {
                continue;
            }
            let (i, j, inverted) = if at < next {
                (at, next, false)
            } else {
                (next, at, true)
            };
            let edge = simplex_edge(c, cell, i, j);
            let letter = c.label(edge).expect("corpus cells are labeled");
            let letter = if inverted { letter.inverse() } else { letter };
            let mut w2 = word.clone();
            w2.push(letter);
            if next == 0 {
                out.push(w2.clone());
            }
            stack.push((next, w2));
        }
        for &(root, label) in &face_moves {
            if root != at {
                continue;
            }
            let mut w2 = word.clone();
            w2.push(label);
            if at == 0 {
                out.push(w2.clone());
            }
            stack.push((at, w2));
        }
    }
    out
}

/// Every word of length <= `max_len` whose action at `v` stays defined,
/// via depth-first extension (definedness is prefix-closed).
pub fn defined_words_at(c: &DeltaComplex, v: Vertex, max_len: usize) -> Vec<(Word, Vertex)> {
    let letters: Vec<Letter> = c.alphabet().letters().collect();
    let mut out = vec![(Word::empty(), v)];
    let mut frontier = vec![(Word::empty(), v)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, at) in &frontier {
            for &l in &letters {
                if let Some(target) = c.act(*at, &Word::from_letter(l)) {
                    let mut w2 = word.clone();
                    w2.push(l);
                    next.push((w2, target));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
