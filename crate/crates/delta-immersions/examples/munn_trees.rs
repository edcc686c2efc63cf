//! Munn trees decide the word problem of the free inverse monoid: two
//! words are equal iff their folded path automata are isomorphic as
//! birooted trees.
//!
//! ```bash
//! cargo run --example munn_trees
//! ```

use delta_immersions::{munn_tree, samples, Presentation};

fn main() {
    let bouquet = samples::bouquet(&["x", "y"]);
    let alphabet = bouquet.alphabet().clone();
    let p = Presentation::new(&bouquet);

    let pairs = [
        ("x x' x", "x"),
        ("x x'", "x' x"),
        ("x x' y", "y y' x x' y"),
        ("x y y' x'", "x x'"),
    ];
    for (a, b) in pairs {
        let wa = alphabet.parse_word(a).unwrap();
        let wb = alphabet.parse_word(b).unwrap();
        let by_trees = munn_tree(&alphabet, &wa)
            .unwrap()
            .birooted_isomorphic(&munn_tree(&alphabet, &wb).unwrap());
        let by_monoid = p.m_equal(&wa, &wb).unwrap();
        assert_eq!(by_trees, by_monoid);
        println!("{a:14} = {b:14} ? {by_trees}");
    }

    // the tree of x x' is a single edge with both roots at the tail
    let tree = munn_tree(&alphabet, &alphabet.parse_word("x x'").unwrap()).unwrap();
    println!("\nMunn tree of `x x'` as DOT:\n{}", tree.to_dot("munn"));
}
