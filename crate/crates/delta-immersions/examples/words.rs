//! Alphabets and words: parsing, printing, and the involution.
//!
//! ```bash
//! cargo run --example words
//! ```

use delta_immersions::Alphabet;

fn main() {
    // two edge letters and one 2-dimensional cell letter
    let alphabet = Alphabet::new(vec!["x", "y"], vec![("rho", 2)]).unwrap();

    for text in ["x y' rho", "1", "x x' x", "rho'"] {
        let word = alphabet.parse_word(text).unwrap();
        println!(
            "{text:10} parses to {:12} inverse {}",
            alphabet.format_word(&word),
            alphabet.format_word(&word.inverse()),
        );
    }

    // the involution is anti-homomorphic
    let u = alphabet.parse_word("x y").unwrap();
    let v = alphabet.parse_word("y' rho").unwrap();
    let uv = u.concat(&v);
    assert_eq!(uv.inverse(), v.inverse().concat(&u.inverse()));
    println!(
        "(u v)' = v' u': {} -> {}",
        alphabet.format_word(&uv),
        alphabet.format_word(&uv.inverse()),
    );

    // cell letters are self-inverse, so `rho'` normalizes to `rho`
    let rho = alphabet.parse_word("rho'").unwrap();
    assert_eq!(alphabet.format_word(&rho), "rho");
}
