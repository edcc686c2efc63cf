//! ω-coset automata of finitely generated closed inverse submonoids,
//! conjugacy, and the lifted complex with its immersion.
//!
//! A submonoid is specified by finitely many generator words that
//! stabilize a vertex of an ambient labeled complex; the machinery
//! realizes the smallest closed inverse submonoid containing them. Its
//! coset automaton is the fold/expand closure of the generator flower,
//! and the lifted complex is built over that automaton dimension by
//! dimension.

use std::collections::HashMap;

use crate::automaton::InverseAutomaton;
use crate::complex::{CellRef, DeltaComplex, Vertex};
use crate::error::{Error, Result};
use crate::immersion::CellMap;
use crate::monoid::{close, ClosureConfig, ClosureStats, Presentation};
use crate::word::{Letter, Word};

/// A finitely generated closed inverse submonoid of the loop monoid at
/// `base`: the smallest closed inverse submonoid containing the
/// generators.
#[derive(Clone, Debug)]
pub struct SubmonoidSpec<'c> {
    pub ambient: &'c DeltaComplex,
    pub base: Vertex,
    pub generators: Vec<Word>,
}

impl<'c> SubmonoidSpec<'c> {
    pub fn new(ambient: &'c DeltaComplex, base: Vertex, generators: Vec<Word>) -> Self {
        SubmonoidSpec {
            ambient,
            base,
            generators,
        }
    }

    fn check_generators(&self) -> Result<()> {
        for g in &self.generators {
            if self.ambient.act(self.base, g) != Some(self.base) {
                return Err(Error::NotInLoopMonoid {
                    generator: self.ambient.alphabet().format_word(g),
                    vertex: self.ambient.vertex_id(self.base).to_string(),
                });
            }
        }
        Ok(())
    }
}

/// The ω-coset automaton: a folded automaton whose language is the
/// submonoid, with a shortlex-minimal representative word per vertex.
#[derive(Clone, Debug)]
pub struct CosetAutomaton {
    pub automaton: InverseAutomaton,
    pub reps: Vec<Word>,
}

impl CosetAutomaton {
    /// Membership in the submonoid.
    pub fn contains(&self, w: &Word) -> bool {
        self.automaton.accepts(w)
    }

    pub fn rep(&self, v: u32) -> &Word {
        &self.reps[v as usize]
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.automaton.to_dot(name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = self.automaton.to_json();
        let reps: Vec<String> = self
            .reps
            .iter()
            .map(|w| self.automaton.alphabet().format_word(w))
            .collect();
        value["reps"] = serde_json::json!(reps);
        value
    }
}

fn representatives(a: &InverseAutomaton) -> Vec<Word> {
    // vertex ids are breadth-first discovery indices, so scanning them in
    // order with labels ascending yields shortlex-minimal representatives
    let mut reps: Vec<Option<Word>> = vec![None; a.vertex_count() as usize];
    reps[a.start() as usize] = Some(Word::empty());
    for v in 0..a.vertex_count() {
        let rep = reps[v as usize].clone().expect("vertices in BFS order");
        for (letter, targets) in a.out_labels(v) {
            let t = targets[0];
            if reps[t as usize].is_none() {
                let mut w = rep.clone();
                w.push(letter);
                reps[t as usize] = Some(w);
            }
        }
    }
    reps.into_iter().map(Option::unwrap).collect()
}

pub fn coset_automaton(spec: &SubmonoidSpec, cfg: &ClosureConfig) -> Result<CosetAutomaton> {
    Ok(coset_automaton_detailed(spec, cfg)?.0)
}

/// Fold/expand closure of the generator flower, with closure statistics.
pub fn coset_automaton_detailed(
    spec: &SubmonoidSpec,
    cfg: &ClosureConfig,
) -> Result<(CosetAutomaton, ClosureStats)> {
    spec.check_generators()?;
    let base = spec.ambient.induced_base()?;
    let presentation = Presentation::new(&base);
    let flower = InverseAutomaton::flower(spec.ambient.alphabet(), &spec.generators);
    let (automaton, stats) = close(flower, presentation.relations(), cfg)?;
    let reps = representatives(&automaton);
    Ok((CosetAutomaton { automaton, reps }, stats))
}

/// Searches for a witness `m` conjugating one submonoid onto the other:
/// a word stabilizing the shared base vertex of the ambient complex such
/// that rebasing the first coset automaton at the vertex reached by `m`
/// gives the second. Returns the shortlex-least witness.
pub fn are_conjugate(
    h: &SubmonoidSpec,
    k: &SubmonoidSpec,
    cfg: &ClosureConfig,
) -> Result<Option<Word>> {
    if !std::ptr::eq(h.ambient, k.ambient) || h.base != k.base {
        return Err(Error::SpecMismatch(
            "conjugacy needs a shared ambient complex and base vertex".into(),
        ));
    }
    let gamma_h = coset_automaton(h, cfg)?;
    let gamma_k = coset_automaton(k, cfg)?;
    for t in 0..gamma_h.automaton.vertex_count() {
        let rep = gamma_h.rep(t);
        if h.ambient.act(h.base, rep) != Some(h.base) {
            continue;
        }
        if gamma_h
            .automaton
            .rebase(t)
            .birooted_isomorphic(&gamma_k.automaton)
        {
            return Ok(Some(rep.clone()));
        }
    }
    Ok(None)
}

/// The complex lifted from a coset automaton, together with the
/// immersion into the ambient complex and the base vertex.
#[derive(Clone, Debug)]
pub struct LiftedComplex {
    pub complex: DeltaComplex,
    pub map: CellMap,
    pub base: Vertex,
    pub coset: CosetAutomaton,
}

pub fn build_complex(spec: &SubmonoidSpec, cfg: &ClosureConfig) -> Result<LiftedComplex> {
    Ok(build_complex_detailed(spec, cfg)?.0)
}

/// Builds the unique complex over the coset automaton: vertices are the
/// cosets, positive edges become 1-cells, and each cell-letter loop is
/// filled by the lift of the unique ambient cell with that label at the
/// image vertex, dimension by dimension.
pub fn build_complex_detailed(
    spec: &SubmonoidSpec,
    cfg: &ClosureConfig,
) -> Result<(LiftedComplex, ClosureStats)> {
    let (coset, stats) = coset_automaton_detailed(spec, cfg)?;
    let ambient = spec.ambient;
    let alphabet = ambient.alphabet();
    let gamma = &coset.automaton;
    let n = gamma.vertex_count();

    // vertex images under the immersion, propagated along edges
    let mut image0: Vec<Option<u32>> = vec![None; n as usize];
    image0[gamma.start() as usize] = Some(spec.base.0);
    for v in 0..n {
        let fv = image0[v as usize].expect("vertices in BFS order");
        for (letter, targets) in gamma.out_labels(v) {
            let t = targets[0];
            if letter.is_p() {
                continue;
            }
            let step = ambient.out_step(fv, letter).ok_or_else(|| {
                Error::LiftFailure(format!(
                    "no `{}` step at `{}` in the ambient complex",
                    alphabet.token(letter),
                    ambient.vertex_id(Vertex(fv))
                ))
            })?;
            match image0[t as usize] {
                None => image0[t as usize] = Some(step),
                Some(known) if known == step => {}
                Some(_) => {
                    return Err(Error::LiftFailure(
                        "inconsistent vertex images along the coset automaton".into(),
                    ))
                }
            }
        }
    }
    let image0: Vec<u32> = image0.into_iter().map(Option::unwrap).collect();

    let mut raw: Vec<Vec<crate::complex::RawCell>> = Vec::new();
    let mut assignment: Vec<Vec<u32>> = Vec::new();

    // 0-cells named by coset index
    raw.push(
        (0..n)
            .map(|v| crate::complex::RawCell {
                id: format!("v{v}"),
                faces: Vec::new(),
                label: None,
            })
            .collect(),
    );
    assignment.push(image0.clone());

    // cells of D rooted at (vertex, label), per dimension
    let mut rooted: HashMap<(u32, Letter), String> = HashMap::new();
    let mut edge_cells: Vec<crate::complex::RawCell> = Vec::new();
    let mut edge_assign: Vec<u32> = Vec::new();
    for v in 0..n {
        for (letter, targets) in gamma.out_labels(v) {
            if letter.is_p() || letter.is_inverted() {
                continue;
            }
            let t = targets[0];
            let id = format!("e{}", edge_cells.len());
            rooted.insert((v, letter), id.clone());
            edge_cells.push(crate::complex::RawCell {
                id,
                faces: vec![format!("v{t}"), format!("v{v}")],
                label: Some(alphabet.name(letter).to_string()),
            });
            let ambient_edge = *ambient
                .cells_rooted(image0[v as usize], letter)
                .first()
                .ok_or_else(|| {
                    Error::LiftFailure(format!(
                        "no `{}` edge at `{}` in the ambient complex",
                        alphabet.name(letter),
                        ambient.vertex_id(Vertex(image0[v as usize]))
                    ))
                })?;
            edge_assign.push(ambient_edge);
        }
    }
    raw.push(edge_cells);
    assignment.push(edge_assign);

    for dim in 2..=ambient.dimension() {
        let mut layer: Vec<crate::complex::RawCell> = Vec::new();
        let mut layer_assign: Vec<u32> = Vec::new();
        for v in 0..n {
            for (letter, _) in gamma.out_labels(v) {
                if alphabet.p_dimension(letter) != Some(dim) {
                    continue;
                }
                let fv = image0[v as usize];
                let candidates = ambient.cells_rooted(fv, letter);
                let ambient_cell = match candidates {
                    [] => {
                        return Err(Error::LiftFailure(format!(
                            "no {dim}-cell labeled `{}` is rooted at `{}`",
                            alphabet.name(letter),
                            ambient.vertex_id(Vertex(fv))
                        )))
                    }
                    [c] => CellRef { dim, idx: *c },
                    _ => {
                        return Err(Error::AmbiguousCell(format!(
                            "several {dim}-cells labeled `{}` rooted at `{}`",
                            alphabet.name(letter),
                            ambient.vertex_id(Vertex(fv))
                        )))
                    }
                };
                // faces: d_i sits at v for i >= 1; d_0 sits past the
                // [v0,v1] edge of the ambient cell
                let mut faces = vec![String::new(); dim + 1];
                for i in 1..=dim {
                    let face_label = ambient
                        .label(ambient.face(ambient_cell, i))
                        .expect("ambient cells are labeled");
                    faces[i] = rooted.get(&(v, face_label)).cloned().ok_or_else(|| {
                        Error::LiftFailure(format!(
                            "missing face labeled `{}` at coset v{v}",
                            alphabet.name(face_label)
                        ))
                    })?;
                }
                let edge_letter = ambient
                    .label(base_edge(ambient, ambient_cell))
                    .expect("ambient cells are labeled");
                let w1 = gamma.step(v, edge_letter).ok_or_else(|| {
                    Error::LiftFailure(format!(
                        "no `{}` step at coset v{v}",
                        alphabet.name(edge_letter)
                    ))
                })?;
                let d0_label = ambient
                    .label(ambient.face(ambient_cell, 0))
                    .expect("ambient cells are labeled");
                faces[0] = rooted.get(&(w1, d0_label)).cloned().ok_or_else(|| {
                    Error::LiftFailure(format!(
                        "missing face labeled `{}` at coset v{w1}",
                        alphabet.name(d0_label)
                    ))
                })?;

                let id = format!("c{dim}_{}", layer.len());
                rooted.insert((v, letter), id.clone());
                layer.push(crate::complex::RawCell {
                    id,
                    faces,
                    label: Some(alphabet.name(letter).to_string()),
                });
                layer_assign.push(ambient_cell.idx);
            }
        }
        raw.push(layer);
        assignment.push(layer_assign);
    }

    let complex =
        DeltaComplex::assemble(format!("{}_H", ambient.name()), raw, Some(alphabet.clone()))?;
    assignment.truncate(complex.dimension() + 1);
    let lifted = LiftedComplex {
        complex,
        map: CellMap::new(assignment),
        base: Vertex(gamma.start()),
        coset,
    };
    Ok((lifted, stats))
}

fn base_edge(c: &DeltaComplex, cell: CellRef) -> CellRef {
    let mut f = cell;
    for m in (2..=cell.dim).rev() {
        f = c.face(f, m);
    }
    f
}
