//! ω-coset automata of closed inverse submonoids of the free inverse
//! monoid on one letter, including the two classic conjugate ones.
//!
//! ```bash
//! cargo run --example coset_graphs
//! ```

use delta_immersions::{coset_automaton, samples, ClosureConfig, SubmonoidSpec, Vertex};

fn main() {
    let bouquet = samples::bouquet(&["a"]);
    let c = bouquet.complex();
    let al = c.alphabet().clone();
    let cfg = ClosureConfig::default();

    // H = {1, aa', aaa'a'}: generated by a^2 a^-2
    let h_spec = SubmonoidSpec::new(c, Vertex(0), vec![al.parse_word("a a a' a'").unwrap()]);
    let h = coset_automaton(&h_spec, &cfg).unwrap();
    println!("coset automaton of <a a a' a'>:");
    for v in 0..h.automaton.vertex_count() {
        println!("  coset {v}: reached by `{}`", al.format_word(h.rep(v)));
    }
    for text in ["1", "a a'", "a a a' a'", "a", "a' a"] {
        let word = al.parse_word(text).unwrap();
        println!("  contains {text:10} ? {}", h.contains(&word));
    }

    // K = {1, aa', a'a, aa'a'a}: generated by the two trivial idempotents
    let k_spec = SubmonoidSpec::new(
        c,
        Vertex(0),
        vec![
            al.parse_word("a a'").unwrap(),
            al.parse_word("a' a").unwrap(),
        ],
    );
    let k = coset_automaton(&k_spec, &cfg).unwrap();
    println!("\ncoset automaton of <a a', a' a> as DOT:");
    print!("{}", k.to_dot("coset"));
}
