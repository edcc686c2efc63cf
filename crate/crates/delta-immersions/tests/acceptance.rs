//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use delta_immersions::{
    are_conjugate, build_complex, check_immersion, complex_isomorphic, coset_automaton,
    coset_automaton_detailed, infer_map, is_covering, samples, ClosureConfig, CosetAutomaton,
    DeltaComplex, Letter, Presentation, SubmonoidSpec, Vertex, Word,
};

use common::{
    boundary_paths, corpus_bases, corpus_triples, fixture, generalized_boundary_paths, words,
};

fn cfg() -> ClosureConfig {
    ClosureConfig::default()
}

// ---------------------------------------------------------------- 1

/// Free-inverse-monoid words over two letters, coded 0..4 with the
/// involution flipping the low bit.
fn code_inverse(word: &[u8]) -> Vec<u8> {
    word.iter().rev().map(|&c| c ^ 1).collect()
}

fn enumerate_codes(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &frontier {
            for c in 0..4u8 {
                let mut w2 = word.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn idempotent_shape(seg: &[u8]) -> bool {
    seg.len() % 2 == 0 && code_inverse(&seg[..seg.len() / 2]) == seg[seg.len() / 2..]
}

/// One-step rewrites inside the universe: cancel or insert `w w⁻¹ w = w`
/// and commute adjacent factors of shape `v v⁻¹`.
fn oracle_neighbors(word: &[u8], universe_len: usize) -> Vec<Vec<u8>> {
    let n = word.len();
    let mut out = Vec::new();
    for i in 0..n {
        for m in 1..=(n - i) / 3 {
            let (a, b, c) = (
                &word[i..i + m],
                &word[i + m..i + 2 * m],
                &word[i + 2 * m..i + 3 * m],
            );
            if a == c && code_inverse(a) == b {
                let mut w2 = word[..i + m].to_vec();
                w2.extend_from_slice(&word[i + 3 * m..]);
                out.push(w2);
            }
        }
        for m in 1..=n - i {
            if n + 2 * m > universe_len {
                break;
            }
            let seg = &word[i..i + m];
            let mut w2 = word[..i + m].to_vec();
            w2.extend(code_inverse(seg));
            w2.extend_from_slice(seg);
            w2.extend_from_slice(&word[i + m..]);
            out.push(w2);
        }
        for m1 in 1..=n - i {
            if !idempotent_shape(&word[i..i + m1]) {
                continue;
            }
            for m2 in 1..=n - i - m1 {
                if !idempotent_shape(&word[i + m1..i + m1 + m2]) {
                    continue;
                }
                let mut w2 = word[..i].to_vec();
                w2.extend_from_slice(&word[i + m1..i + m1 + m2]);
                w2.extend_from_slice(&word[i..i + m1]);
                w2.extend_from_slice(&word[i + m1 + m2..]);
                out.push(w2);
            }
        }
    }
    out
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut v: u32) -> u32 {
        while self.0[v as usize] != v {
            let up = self.0[self.0[v as usize] as usize];
            self.0[v as usize] = up;
            v = up;
        }
        v
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a as usize] = b;
        }
    }
}

#[test]
fn criterion_01_fim_oracle_equivalence() {
    const PAIR_LEN: usize = 5;
    const UNIVERSE_LEN: usize = 5;
    let start = Instant::now();

    let universe = enumerate_codes(UNIVERSE_LEN);
    let index: std::collections::HashMap<&[u8], u32> = universe
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i as u32))
        .collect();
    let mut classes = UnionFind::new(universe.len());
    for (i, word) in universe.iter().enumerate() {
        for neighbor in oracle_neighbors(word, UNIVERSE_LEN) {
            let j = index[neighbor.as_slice()];
            classes.union(i as u32, j);
        }
    }

    let base = samples::bouquet(&["a", "b"]);
    let p = Presentation::new(&base);
    let al = p.alphabet();
    let letters = [
        al.letter("a").unwrap(),
        al.letter("a").unwrap().inverse(),
        al.letter("b").unwrap(),
        al.letter("b").unwrap().inverse(),
    ];
    let small: Vec<usize> = (0..universe.len())
        .filter(|&i| universe[i].len() <= PAIR_LEN)
        .collect();
    let as_word =
        |codes: &[u8]| Word::from_letters(codes.iter().map(|&c| letters[c as usize]).collect());

    let mut pairs = 0u64;
    for (pos, &i) in small.iter().enumerate() {
        let wi = as_word(&universe[i]);
        for &j in &small[pos..] {
            let wj = as_word(&universe[j]);
            let monoid_equal = p.m_equal(&wi, &wj).unwrap();
            let oracle_equal = classes.find(i as u32) == classes.find(j as u32);
            assert_eq!(
                monoid_equal,
                oracle_equal,
                "disagreement on ({:?}, {:?})",
                al.format_word(&wi),
                al.format_word(&wj),
            );
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "oracle comparison took {elapsed:?}, budget is 5 minutes"
    );
    println!(
        "criterion 1 (free inverse monoid oracle, {pairs} pairs in {:.1}s): PASS",
        elapsed.as_secs_f64()
    );
}

// ---------------------------------------------------------------- 2

#[test]
fn criterion_02_defining_relations_hold() {
    let mut checks = 0;
    for (name, base) in [
        ("triangle", samples::triangle_base()),
        ("torus", samples::torus_base()),
        ("tetrahedron", samples::tetrahedron_base()),
    ] {
        let p = Presentation::new(&base);
        let al = p.alphabet().clone();
        for (pname, _) in al.p_entries() {
            let letter = al.letter(pname).unwrap();
            let rho = Word::from_letter(letter);
            let bl = base.boundary_label_of(letter).unwrap();
            assert!(
                p.m_equal(&rho, &rho.concat(&bl)).unwrap(),
                "{name}: `{pname}` != `{pname}`*bl"
            );
            assert!(
                p.m_leq(&rho, &bl).unwrap(),
                "{name}: `{pname}` not below bl"
            );
            checks += 1;
        }
    }
    println!("criterion 2 (defining relations on {checks} cells): PASS");
}

// ---------------------------------------------------------------- 3

#[test]
fn criterion_03_boundary_path_suites() {
    let complexes: Vec<DeltaComplex> = vec![
        samples::triangle_base().complex().clone(),
        samples::torus_base().complex().clone(),
        samples::tetrahedron_base().complex().clone(),
        samples::three_cell_base().complex().clone(),
        samples::triangle(),
    ];
    let mut paths = 0u64;
    let mut generalized = 0u64;
    for c in &complexes {
        let base = c.induced_base().unwrap();
        let p = Presentation::new(&base);
        for dim in 2..=c.dimension().min(3) {
            for cell in c.cell_refs(dim) {
                let label = Word::from_letter(c.label(cell).unwrap());
                let automaton = p.schutzenberger(&label).unwrap();
                for path in boundary_paths(c, cell, 8) {
                    assert!(
                        automaton.accepts(&path),
                        "{}: cell `{}` not below path `{}`",
                        c.name(),
                        c.cell_id(cell),
                        c.alphabet().format_word(&path),
                    );
                    paths += 1;
                }
                for path in generalized_boundary_paths(c, cell, 6) {
                    assert!(
                        automaton.accepts(&path),
                        "{}: cell `{}` not below generalized path `{}`",
                        c.name(),
                        c.cell_id(cell),
                        c.alphabet().format_word(&path),
                    );
                    generalized += 1;
                }
            }
        }
    }
    println!(
        "criterion 3 (boundary paths: {paths} plain <=8, {generalized} generalized <=6): PASS"
    );
}

// ---------------------------------------------------------------- 4

fn random_word(rng: &mut ChaCha8Rng, letters: &[Letter], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect(),
    )
}

#[test]
fn criterion_04_idempotents_commute() {
    let mut total = 0;
    for (seed, (_, base)) in corpus_bases().into_iter().enumerate() {
        let p = Presentation::new(&base);
        let letters: Vec<Letter> = p.alphabet().letters().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FF_EE00 + seed as u64);
        for _ in 0..500 {
            let u = random_word(&mut rng, &letters, 4);
            let v = random_word(&mut rng, &letters, 4);
            let e = u.concat(&u.inverse());
            let f = v.concat(&v.inverse());
            assert!(
                p.m_equal(&e.concat(&f), &f.concat(&e)).unwrap(),
                "idempotents failed to commute for u=`{}` v=`{}` over {}",
                p.alphabet().format_word(&u),
                p.alphabet().format_word(&v),
                base.name(),
            );
            total += 1;
        }
    }
    println!("criterion 4 (idempotent commutation, {total} random pairs): PASS");
}

// ---------------------------------------------------------------- 5

/// `contains(Γ_H, w) ⇔ loop_contains(D, v, w)` for every word of length
/// up to `depth`, decided over the synchronized state graph.
fn membership_coherent(
    gamma: &CosetAutomaton,
    d: &DeltaComplex,
    base: Vertex,
    depth: usize,
) -> bool {
    let letters: Vec<Letter> = d.alphabet().letters().collect();
    type State = (Option<u32>, Option<u32>);
    let agree = |s: &State, gamma: &CosetAutomaton, base: Vertex| {
        (s.0 == Some(gamma.automaton.start())) == (s.1 == Some(base.0))
    };
    let start: State = (Some(gamma.automaton.start()), Some(base.0));
    if !agree(&start, gamma, base) {
        return false;
    }
    let mut seen: HashSet<State> = HashSet::from([start]);
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for &(g, v) in &frontier {
            for &l in &letters {
                let g2 = g.and_then(|g| gamma.automaton.step(g, l));
                let v2 = v.and_then(|v| d.act(Vertex(v), &Word::from_letter(l)).map(|x| x.0));
                let state = (g2, v2);
                if state == (None, None) {
                    continue;
                }
                if !agree(&state, gamma, base) {
                    return false;
                }
                if seen.insert(state) {
                    next.push(state);
                }
            }
        }
        frontier = next;
    }
    true
}

#[test]
fn criterion_05_lifted_complexes() {
    let triples = corpus_triples();
    assert!(triples.len() >= 20, "need at least 20 corpus triples");
    for (name, c, at, gens) in &triples {
        let vertex = c.vertex_named(at).unwrap();
        let spec = SubmonoidSpec::new(c, vertex, words(c.alphabet(), gens));
        let lifted = build_complex(&spec, &cfg()).unwrap_or_else(|e| panic!("{name}: {e}"));
        let report = lifted.complex.validate();
        assert!(report.ok(), "{name}: invalid lift\n{report}");
        let base = c.induced_base().unwrap();
        let labeling = lifted.complex.check_labeling(&base);
        assert!(labeling.ok(), "{name}: bad labeling\n{labeling}");
        let immersion = check_immersion(&lifted.map, &lifted.complex, c);
        assert!(immersion.ok(), "{name}: not an immersion\n{immersion}");
        assert_eq!(lifted.map.vertex_image(lifted.base), vertex, "{name}");
        assert!(
            membership_coherent(&lifted.coset, &lifted.complex, lifted.base, 6),
            "{name}: membership disagrees with the lifted loop monoid"
        );
    }
    println!(
        "criterion 5 (lifted complexes on {} corpus triples): PASS",
        triples.len()
    );
}

// ---------------------------------------------------------------- 6

fn conjugate_generators(gens: &[Word], m: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = gens
        .iter()
        .map(|g| m.inverse().concat(g).concat(m))
        .collect();
    out.push(m.inverse().concat(m));
    out
}

/// A random word from the base vertex whose coset-automaton run lands
/// on a vertex lying over the base point of the ambient complex.
fn random_loop_word(
    rng: &mut ChaCha8Rng,
    gamma: &CosetAutomaton,
    c: &DeltaComplex,
    u: Vertex,
) -> Word {
    let over_u: Vec<u32> = (0..gamma.automaton.vertex_count())
        .filter(|&t| c.act(u, gamma.rep(t)) == Some(u))
        .collect();
    assert!(!over_u.is_empty());
    for _ in 0..100 {
        let len = rng.gen_range(0..=8);
        let mut at = gamma.automaton.start();
        let mut word = Word::empty();
        for _ in 0..len {
            let options = gamma.automaton.out_labels(at);
            if options.is_empty() {
                break;
            }
            let (letter, targets) = &options[rng.gen_range(0..options.len())];
            word.push(*letter);
            at = targets[0];
        }
        if over_u.contains(&at) {
            return word;
        }
    }
    gamma.rep(over_u[rng.gen_range(0..over_u.len())]).clone()
}

#[test]
fn criterion_06_conjugacy() {
    // the documented pair over the one-loop bouquet
    let bouquet = samples::bouquet(&["a"]);
    let c = bouquet.complex();
    let al = c.alphabet();
    let h = SubmonoidSpec::new(c, Vertex(0), words(al, &["a a a' a'"]));
    let k = SubmonoidSpec::new(c, Vertex(0), words(al, &["a a'", "a' a"]));
    let witness = are_conjugate(&h, &k, &cfg()).unwrap().unwrap();
    assert_eq!(al.format_word(&witness), "a");

    let torus = samples::torus_base().complex().clone();
    let triangle = samples::triangle();
    let bab = samples::bouquet(&["a", "b"]).complex().clone();
    let cases: Vec<(&str, &DeltaComplex, &str, Vec<&str>)> = vec![
        ("bouquet_a", c, "pt", vec!["a a a' a'"]),
        ("bouquet_a", c, "pt", vec!["a a"]),
        ("bouquet_ab", &bab, "pt", vec!["a b a' b'"]),
        ("torus", &torus, "pt", vec!["U"]),
        ("triangle", &triangle, "A", vec!["rho", "x y z'"]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0006);
    let mut trials = 0;
    for (name, ambient, at, gens) in cases {
        let u = ambient.vertex_named(at).unwrap();
        let generators = words(ambient.alphabet(), &gens);
        let h = SubmonoidSpec::new(ambient, u, generators.clone());
        let gamma = coset_automaton(&h, &cfg()).unwrap();
        for _ in 0..10 {
            let m = random_loop_word(&mut rng, &gamma, ambient, u);
            let k = SubmonoidSpec::new(ambient, u, conjugate_generators(&generators, &m));
            let witness = are_conjugate(&h, &k, &cfg()).unwrap();
            assert!(
                witness.is_some(),
                "{name}: no witness for m=`{}`",
                ambient.alphabet().format_word(&m)
            );
            let dh = build_complex(&h, &cfg()).unwrap();
            let dk = build_complex(&k, &cfg()).unwrap();
            assert!(
                complex_isomorphic(&dh.complex, &dk.complex, None).is_some(),
                "{name}: complexes differ for m=`{}`",
                ambient.alphabet().format_word(&m)
            );
            trials += 1;
        }
    }
    println!("criterion 6 (conjugacy, witness `a` plus {trials} random conjugates): PASS");
}

// ---------------------------------------------------------------- 7

/// Idempotent-fullness oracle: search words of length <= 6 that loop at
/// the image vertex, fail to loop at the source vertex, and denote
/// idempotents. Fullness holds iff none exists.
fn fullness_oracle(
    source: &DeltaComplex,
    target: &DeltaComplex,
    v: Vertex,
    fv: Vertex,
    p: &Presentation,
) -> bool {
    let letters: Vec<Letter> = target.alphabet().letters().collect();
    fn search(
        letters: &[Letter],
        source: &DeltaComplex,
        target: &DeltaComplex,
        v: Vertex,
        fv: Vertex,
        p: &Presentation,
        stack: &mut Vec<Letter>,
        cpos: Vertex,
        dpos: Option<Vertex>,
    ) -> bool {
        if !stack.is_empty() && cpos == fv && dpos != Some(v) {
            let word = Word::from_letters(stack.clone());
            if p.is_idempotent(&word).unwrap() {
                return false;
            }
        }
        if stack.len() == 6 {
            return true;
        }
        for &l in letters {
            let step = Word::from_letter(l);
            if let Some(c2) = target.act(cpos, &step) {
                let d2 = dpos.and_then(|d| source.act(d, &step));
                stack.push(l);
                let full = search(letters, source, target, v, fv, p, stack, c2, d2);
                stack.pop();
                if !full {
                    return false;
                }
            }
        }
        true
    }
    search(
        &letters,
        source,
        target,
        v,
        fv,
        p,
        &mut Vec::new(),
        fv,
        Some(v),
    )
}

#[test]
fn criterion_07_covering_criterion_cross_check() {
    // named immersions plus every lifted complex from the corpus triples
    let mut cases: Vec<(String, DeltaComplex, DeltaComplex, &str, &str)> = vec![
        (
            "triangle labeling".into(),
            samples::triangle(),
            samples::triangle_base().complex().clone(),
            "A",
            "pt",
        ),
        (
            "double cover".into(),
            samples::double_cover(),
            samples::bouquet(&["a"]).complex().clone(),
            "A0",
            "pt",
        ),
        (
            "path into bouquet".into(),
            samples::path_complex(),
            samples::bouquet(&["a"]).complex().clone(),
            "A",
            "pt",
        ),
        (
            "triple cover".into(),
            samples::cycle_cover(3),
            samples::bouquet(&["a"]).complex().clone(),
            "A0",
            "pt",
        ),
        (
            "torus identity".into(),
            samples::torus_base().complex().clone(),
            samples::torus_base().complex().clone(),
            "pt",
            "pt",
        ),
        (
            "tetrahedron identity".into(),
            samples::tetrahedron_base().complex().clone(),
            samples::tetrahedron_base().complex().clone(),
            "pt",
            "pt",
        ),
    ];
    let mut expected: Vec<Option<bool>> = vec![
        Some(false),
        Some(true),
        Some(false),
        Some(true),
        Some(true),
        Some(true),
    ];
    let mut lifted_sources: Vec<(String, DeltaComplex, DeltaComplex, Vertex, Vertex)> = Vec::new();
    for (name, c, at, gens) in corpus_triples() {
        let vertex = c.vertex_named(at).unwrap();
        let spec = SubmonoidSpec::new(&c, vertex, words(c.alphabet(), &gens));
        let lifted = build_complex(&spec, &cfg()).unwrap();
        lifted_sources.push((name, lifted.complex, c.clone(), lifted.base, vertex));
    }

    let mut agreements = 0;
    let mut run_case = |name: &str,
                        source: &DeltaComplex,
                        target: &DeltaComplex,
                        v: Vertex,
                        u: Vertex,
                        expect: Option<bool>| {
        let f = infer_map(source, target, v, u).unwrap_or_else(|e| panic!("{name}: {e}"));
        let report = check_immersion(&f, source, target);
        assert!(report.ok(), "{name}: not an immersion\n{report}");
        let star = is_covering(&f, source, target).unwrap();
        let base = target.induced_base().unwrap();
        let p = Presentation::new(&base);
        let oracle = fullness_oracle(source, target, v, f.vertex_image(v), &p);
        assert_eq!(
            star, oracle,
            "{name}: star-surjectivity and idempotent fullness disagree"
        );
        if let Some(e) = expect {
            assert_eq!(star, e, "{name}: unexpected covering verdict");
        }
        agreements += 1;
    };

    for ((name, source, target, v, u), expect) in cases.drain(..).zip(expected.drain(..)) {
        let v = source.vertex_named(v).unwrap();
        let u = target.vertex_named(u).unwrap();
        run_case(&name, &source, &target, v, u, expect);
    }
    for (name, source, target, v, u) in &lifted_sources {
        run_case(name, source, target, *v, *u, None);
    }
    println!("criterion 7 (covering vs fullness oracle on {agreements} immersions): PASS");
}

// ---------------------------------------------------------------- 8

#[test]
fn criterion_08_fundamental_group_presentations() {
    assert_eq!(
        samples::torus_base().pi1_presentation(),
        "⟨a, b, c | a b c', b a c'⟩"
    );
    assert_eq!(
        samples::bouquet(&["a", "b"]).pi1_presentation(),
        "⟨a, b | ⟩"
    );
    println!("criterion 8 (fundamental group presentations): PASS");
}

// ---------------------------------------------------------------- 9

#[test]
fn criterion_09_closures_stabilize_quickly() {
    let mut worst = 0;
    for (_, base) in corpus_bases() {
        let p = Presentation::new(&base);
        let al = p.alphabet().clone();
        for (pname, _) in al.p_entries() {
            let letter = al.letter(pname).unwrap();
            let rho = Word::from_letter(letter);
            let bl = base.boundary_label_of(letter).unwrap();
            for word in [rho.clone(), bl.clone(), rho.concat(&bl)] {
                let (_, stats) = p.schutzenberger_detailed(&word, &cfg()).unwrap();
                worst = worst.max(stats.rounds);
                assert!(
                    stats.rounds <= 20,
                    "A({}) took {} rounds",
                    al.format_word(&word),
                    stats.rounds
                );
            }
        }
    }
    for (name, c, at, gens) in corpus_triples() {
        let vertex = c.vertex_named(at).unwrap();
        let spec = SubmonoidSpec::new(&c, vertex, words(c.alphabet(), &gens));
        let (_, stats) = coset_automaton_detailed(&spec, &cfg()).unwrap();
        worst = worst.max(stats.rounds);
        assert!(stats.rounds <= 20, "{name} took {} rounds", stats.rounds);
    }
    println!("criterion 9 (all corpus closures stabilize, worst {worst} rounds <= 20): PASS");
}

// ---------------------------------------------------------------- 10

#[test]
fn criterion_10_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_dimm");
    let f = |name: &str| fixture(name).to_string_lossy().into_owned();
    let commands: Vec<Vec<String>> = vec![
        vec!["validate".into(), f("triangle.json")],
        vec!["labels".into(), f("triangle.json")],
        vec![
            "word-eq".into(),
            f("triangle_base.json"),
            "rho".into(),
            "rho x y z'".into(),
        ],
        vec![
            "word-leq".into(),
            f("triangle_base.json"),
            "rho".into(),
            "x y z'".into(),
        ],
        vec!["schutz".into(), f("triangle_base.json"), "rho".into()],
        vec![
            "schutz".into(),
            f("torus_base.json"),
            "U".into(),
            "--format".into(),
            "json".into(),
        ],
        vec!["pi1".into(), f("torus_base.json")],
        vec![
            "check-immersion".into(),
            f("double_cover.json"),
            f("bouquet_a.json"),
            "--at".into(),
            "A0=pt".into(),
            "--verbose".into(),
        ],
        vec![
            "is-covering".into(),
            f("double_cover.json"),
            f("bouquet_a.json"),
            "--at".into(),
            "A0=pt".into(),
            "--verbose".into(),
        ],
        vec![
            "is-covering".into(),
            f("path_a.json"),
            f("bouquet_a.json"),
            "--at".into(),
            "A=pt".into(),
            "--verbose".into(),
        ],
        vec![
            "coset-graph".into(),
            f("bouquet_a.json"),
            "--at".into(),
            "pt".into(),
            "--gens".into(),
            "a a a' a'".into(),
        ],
        vec![
            "coset-graph".into(),
            f("triangle.json"),
            "--at".into(),
            "A".into(),
            "--gens".into(),
            "rho".into(),
            "--format".into(),
            "json".into(),
        ],
        vec![
            "build".into(),
            f("triangle.json"),
            "--at".into(),
            "A".into(),
            "--gens".into(),
            "rho".into(),
        ],
        vec![
            "build".into(),
            f("tetrahedron_base.json"),
            "--at".into(),
            "pt".into(),
            "--gens".into(),
            "tau".into(),
        ],
        vec![
            "conjugate".into(),
            f("bouquet_a.json"),
            "--at".into(),
            "pt".into(),
            "--gens-h".into(),
            "a a a' a'".into(),
            "--gens-k".into(),
            "a a'".into(),
            "a' a".into(),
        ],
    ];
    for args in &commands {
        let run = || Command::new(bin).args(args).output().expect("spawn dimm");
        let first = run();
        let second = run();
        assert_eq!(
            first.stdout, second.stdout,
            "stdout differs across runs for {args:?}"
        );
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "exit code differs across runs for {args:?}"
        );
        assert_ne!(first.status.code(), Some(2), "command failed: {args:?}");
    }
    println!(
        "criterion 10 (byte-identical stdout across {} CLI invocations): PASS",
        commands.len()
    );
}
