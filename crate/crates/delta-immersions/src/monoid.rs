//! The presented inverse monoid of a base complex.
//!
//! The presentation has generators `X ∪ P` and, for each cell letter
//! `ρ`, the relations `ρ = ρρ` and `ρ = ρ·bl(ρ)` where `bl` is the
//! boundary label. Words are compared through their Schützenberger
//! automata, computed by alternating full folding sweeps with full
//! expansion sweeps until nothing changes:
//!
//!   * fold the automaton;
//!   * for every relation side pair `(r, s)` in both directions and
//!     every vertex `p` with an `r`-labeled run `p → q` but no
//!     `s`-labeled run `p → q`, sew a fresh path spelling `s` from `p`
//!     to `q`.
//!
//! A round with zero expansions after folding is the fixed point. The
//! automaton accepting `{u : u >= w}` is then `A(w)`, so equality is
//! mutual acceptance and the natural partial order is one-sided
//! acceptance. With `P` empty this reduces to Munn trees.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::automaton::InverseAutomaton;
use crate::complex::BaseComplex;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Safety bound for the closure. Everything in the test corpus
/// stabilizes within 20 rounds; the default guards pathological inputs.
#[derive(Clone, Copy, Debug)]
pub struct ClosureConfig {
    pub max_rounds: u32,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig { max_rounds: 10_000 }
    }
}

/// How a closure run went.
#[derive(Clone, Copy, Debug)]
pub struct ClosureStats {
    /// Rounds executed, counting the final round that found nothing.
    pub rounds: u32,
    /// Total paths sewn.
    pub expansions: u64,
}

/// Alternates folding and expansion sweeps until a fixed point.
pub(crate) fn close(
    seed: InverseAutomaton,
    relations: &[(Word, Word)],
    cfg: &ClosureConfig,
) -> Result<(InverseAutomaton, ClosureStats)> {
    // dedup relation sides; expansions are applied in both directions
    let mut sides: Vec<Word> = Vec::new();
    let side_index = |w: &Word, sides: &mut Vec<Word>| -> usize {
        match sides.iter().position(|s| s == w) {
            Some(i) => i,
            None => {
                sides.push(w.clone());
                sides.len() - 1
            }
        }
    };
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (l, r) in relations {
        let li = side_index(l, &mut sides);
        let ri = side_index(r, &mut sides);
        if li != ri {
            pairs.push((li, ri));
            pairs.push((ri, li));
        }
    }

    let mut a = seed;
    let mut total: u64 = 0;
    for round in 1..=cfg.max_rounds {
        a = a.fold();
        let mut sews: Vec<(u32, usize, u32)> = Vec::new();
        let mut seen: std::collections::HashSet<(u32, usize, u32)> = Default::default();
        for p in 0..a.vertex_count() {
            for &(ri, si) in &pairs {
                if let Some(q) = a.run_from(p, &sides[ri]) {
                    if a.run_from(p, &sides[si]) != Some(q) && seen.insert((p, si, q)) {
                        sews.push((p, si, q));
                    }
                }
            }
        }
        if sews.is_empty() {
            return Ok((
                a,
                ClosureStats {
                    rounds: round,
                    expansions: total,
                },
            ));
        }
        total += sews.len() as u64;
        for (p, si, q) in sews {
            a.sew_path(p, &sides[si], q);
        }
    }
    Err(Error::ClosureBudgetExceeded {
        rounds: cfg.max_rounds,
    })
}

/// The Munn tree of a word over `X ∪ X⁻¹`: the folded path automaton.
/// Decides equality in the free inverse monoid.
pub fn munn_tree(alphabet: &Alphabet, w: &Word) -> Result<InverseAutomaton> {
    if let Some(&l) = w.iter().find(|l| l.is_p()) {
        return Err(Error::PLetterPresent(alphabet.name(l).to_string()));
    }
    Ok(InverseAutomaton::linear(alphabet, w).fold())
}

/// The presentation attached to a base complex.
#[derive(Clone, Debug)]
pub struct Presentation {
    base: BaseComplex,
    relations: Vec<(Word, Word)>,
}

impl Presentation {
    /// Collects the relations `ρ = ρρ` and `ρ = ρ·bl(ρ)` for every cell
    /// letter of the base.
    pub fn new(base: &BaseComplex) -> Self {
        let alphabet = base.alphabet().clone();
        let mut relations = Vec::new();
        for (name, _) in alphabet.p_entries() {
            let letter = alphabet.letter(name).unwrap();
            let rho = Word::from_letter(letter);
            let bl = base
                .boundary_label_of(letter)
                .expect("base cells have boundary labels");
            relations.push((rho.clone(), rho.concat(&rho)));
            relations.push((rho.clone(), rho.concat(&bl)));
        }
        Presentation {
            base: base.clone(),
            relations,
        }
    }

    pub fn base(&self) -> &BaseComplex {
        &self.base
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.base.alphabet()
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    /// The Schützenberger automaton `A(w)`, accepting `{u : u >= w}`.
    pub fn schutzenberger(&self, w: &Word) -> Result<InverseAutomaton> {
        self.schutzenberger_with(w, &ClosureConfig::default())
    }

    pub fn schutzenberger_with(&self, w: &Word, cfg: &ClosureConfig) -> Result<InverseAutomaton> {
        Ok(self.schutzenberger_detailed(w, cfg)?.0)
    }

    pub fn schutzenberger_detailed(
        &self,
        w: &Word,
        cfg: &ClosureConfig,
    ) -> Result<(InverseAutomaton, ClosureStats)> {
        close(
            InverseAutomaton::linear(self.alphabet(), w),
            &self.relations,
            cfg,
        )
    }

    /// Word problem: `u = w` iff each word is accepted by the other's
    /// automaton.
    pub fn m_equal(&self, u: &Word, w: &Word) -> Result<bool> {
        self.m_equal_with(u, w, &ClosureConfig::default())
    }

    pub fn m_equal_with(&self, u: &Word, w: &Word, cfg: &ClosureConfig) -> Result<bool> {
        Ok(self.schutzenberger_with(u, cfg)?.accepts(w)
            && self.schutzenberger_with(w, cfg)?.accepts(u))
    }

    /// Natural partial order: `u <= w` iff `A(u)` accepts `w`.
    pub fn m_leq(&self, u: &Word, w: &Word) -> Result<bool> {
        self.m_leq_with(u, w, &ClosureConfig::default())
    }

    pub fn m_leq_with(&self, u: &Word, w: &Word, cfg: &ClosureConfig) -> Result<bool> {
        Ok(self.schutzenberger_with(u, cfg)?.accepts(w))
    }

    pub fn is_idempotent(&self, w: &Word) -> Result<bool> {
        self.is_idempotent_with(w, &ClosureConfig::default())
    }

    pub fn is_idempotent_with(&self, w: &Word, cfg: &ClosureConfig) -> Result<bool> {
        self.m_equal_with(w, &w.concat(w), cfg)
    }
}

/// Memo table from canonical word text to Schützenberger automaton.
/// Behaves as if each automaton were computed once; safe to share
/// across threads.
#[derive(Default)]
pub struct SchutzCache {
    map: Mutex<HashMap<String, Arc<InverseAutomaton>>>,
}

impl SchutzCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn automaton(&self, p: &Presentation, w: &Word) -> Result<Arc<InverseAutomaton>> {
        let key = p.alphabet().format_word(w);
        if let Some(hit) = self.map.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let built = Arc::new(p.schutzenberger(w)?);
        let mut guard = self.map.lock().unwrap();
        Ok(guard.entry(key).or_insert(built).clone())
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
