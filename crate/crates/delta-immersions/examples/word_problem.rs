//! The word problem in the inverse monoid of a base complex with a
//! 2-cell: Schützenberger automata make equality and the natural
//! partial order decidable.
//!
//! ```bash
//! cargo run --example word_problem
//! ```

use delta_immersions::{samples, Presentation};

fn main() {
    // one vertex, edges x, y, z, and a 2-cell rho with boundary x y z'
    let base = samples::triangle_base();
    let p = Presentation::new(&base);
    let al = p.alphabet().clone();

    println!("defining relations:");
    for (lhs, rhs) in p.relations() {
        println!("  {} = {}", al.format_word(lhs), al.format_word(rhs));
    }

    let rho = al.parse_word("rho").unwrap();
    let bl = al.parse_word("x y z'").unwrap();
    println!(
        "\nrho = rho * bl(rho)  ? {}",
        p.m_equal(&rho, &rho.concat(&bl)).unwrap()
    );
    println!("rho <= x y z'        ? {}", p.m_leq(&rho, &bl).unwrap());
    println!("x y z' <= rho        ? {}", p.m_leq(&bl, &rho).unwrap());
    println!("rho idempotent       ? {}", p.is_idempotent(&rho).unwrap());

    // the automaton of rho: the triangle skeleton plus a rho loop
    let a = p.schutzenberger(&rho).unwrap();
    println!("\nA(rho) as DOT:\n{}", a.to_dot("schutzenberger"));
}
