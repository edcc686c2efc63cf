//! Δ-complexes as semi-simplicial face tables.
//!
//! A complex stores, per dimension, cells with an ordered face list
//! `[d0, ..., dk]` (face `d_i` omits simplex vertex `v_i`) and an optional
//! label over a one-vertex base complex. The simplex vertices of a cell
//! are recovered recursively; `vertex(C, 0)` is the root. Edges are
//! directed from their root, so the 1-skeleton is an edge-labeled digraph
//! and words act on 0-cells by partial injections.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{is_identifier, Alphabet, Letter, Word};

/// Index of a 0-cell.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(pub u32);

/// Reference to a cell: dimension plus index within that dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CellRef {
    pub dim: usize,
    pub idx: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagnosticCode {
    FaceIdentity,
    RootCoherence,
    Disconnected,
    MissingLabel,
    FaceLabel,
    LabelClash,
    AlphabetMismatch,
    MapTotal,
    MapLabel,
    MapFace,
    LocalInjectivity,
}

impl DiagnosticCode {
    pub fn tag(self) -> &'static str {
        match self {
            DiagnosticCode::FaceIdentity => "E_FACE_IDENTITY",
            DiagnosticCode::RootCoherence => "E_ROOT_COHERENCE",
            DiagnosticCode::Disconnected => "E_DISCONNECTED",
            DiagnosticCode::MissingLabel => "E_MISSING_LABEL",
            DiagnosticCode::FaceLabel => "E_FACE_LABEL",
            DiagnosticCode::LabelClash => "E_LABEL_CLASH",
            DiagnosticCode::AlphabetMismatch => "E_ALPHABET",
            DiagnosticCode::MapTotal => "E_MAP_TOTAL",
            DiagnosticCode::MapLabel => "E_MAP_LABEL",
            DiagnosticCode::MapFace => "E_MAP_FACE",
            DiagnosticCode::LocalInjectivity => "E_LOCAL_INJECTIVITY",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
}

/// A list of invariant violations; empty means valid.
#[derive(Clone, Debug, Default)]
pub struct Diagnostics {
    pub items: Vec<Diagnostic>,
}

impl Diagnostics {
    pub fn ok(&self) -> bool {
        self.items.is_empty()
    }

    pub(crate) fn push(&mut self, code: DiagnosticCode, message: String) {
        self.items.push(Diagnostic { code, message });
    }

    pub fn first_tag(&self) -> Option<&'static str> {
        self.items.first().map(|d| d.code.tag())
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.items.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", d.code.tag(), d.message)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Cell {
    id: String,
    faces: Vec<u32>,
    label: Option<Letter>,
}

/// A finite Δ-complex, optionally labeled over a base complex.
#[derive(Clone, Debug)]
pub struct DeltaComplex {
    name: String,
    alphabet: Alphabet,
    cells: Vec<Vec<Cell>>,
    id_index: Vec<HashMap<String, u32>>,
    // simplex vertices of each cell: verts[dim][idx][i]
    verts: Vec<Vec<Vec<u32>>>,
    // vertex moves under edge letters (both orientations)
    out: HashMap<(u32, Letter), Vec<u32>>,
    // cells keyed by (root vertex, label); for inverted edge letters the
    // key vertex is the head
    rooted: HashMap<(u32, Letter), Vec<u32>>,
}

#[derive(Clone, Debug)]
pub(crate) struct RawCell {
    pub id: String,
    pub faces: Vec<String>,
    pub label: Option<String>,
}

fn induce_alphabet(raw: &[Vec<RawCell>]) -> Result<Alphabet> {
    let mut dims: BTreeMap<String, usize> = BTreeMap::new();
    for (dim, cells) in raw.iter().enumerate().skip(1) {
        for cell in cells {
            if let Some(label) = &cell.label {
                match dims.get(label) {
                    None => {
                        dims.insert(label.clone(), dim);
                    }
                    Some(&d) if d == dim => {}
                    Some(&d) => {
                        return Err(Error::Schema(format!(
                            "label `{label}` is used at dimensions {d} and {dim}"
                        )))
                    }
                }
            }
        }
    }
    let xs: Vec<String> = dims
        .iter()
        .filter(|(_, &d)| d == 1)
        .map(|(n, _)| n.clone())
        .collect();
    let mut ps: Vec<(String, usize)> = dims
        .iter()
        .filter(|(_, &d)| d >= 2)
        .map(|(n, &d)| (n.clone(), d))
        .collect();
    ps.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Alphabet::new(xs, ps)
}

impl DeltaComplex {
    pub(crate) fn assemble(
        name: String,
        raw: Vec<Vec<RawCell>>,
        alphabet: Option<Alphabet>,
    ) -> Result<DeltaComplex> {
        let mut raw = raw;
        while raw.len() > 1 && raw.last().is_some_and(Vec::is_empty) {
            raw.pop();
        }
        if raw.is_empty() || raw[0].is_empty() {
            return Err(Error::Schema("a complex needs at least one 0-cell".into()));
        }
        for (dim, cells) in raw.iter().enumerate() {
            if dim == 0 {
                continue;
            }
            if cells.is_empty() && raw[dim..].iter().any(|c| !c.is_empty()) {
                return Err(Error::Schema(format!("dimension {dim} has no cells")));
            }
        }

        let alphabet = match alphabet {
            Some(a) => a,
            None => induce_alphabet(&raw)?,
        };

        let mut id_index: Vec<HashMap<String, u32>> = Vec::with_capacity(raw.len());
        for (dim, cells) in raw.iter().enumerate() {
            let mut map = HashMap::new();
            for (i, cell) in cells.iter().enumerate() {
                if map.insert(cell.id.clone(), i as u32).is_some() {
                    return Err(Error::Schema(format!(
                        "duplicate {dim}-cell id `{}`",
                        cell.id
                    )));
                }
            }
            id_index.push(map);
        }

        let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(raw.len());
        for (dim, raw_cells) in raw.iter().enumerate() {
            let mut layer = Vec::with_capacity(raw_cells.len());
            for rc in raw_cells {
                if dim == 0 {
                    if !rc.faces.is_empty() {
                        return Err(Error::Schema(format!(
                            "0-cell `{}` must not list faces",
                            rc.id
                        )));
                    }
                    if rc.label.is_some() {
                        return Err(Error::Schema(format!(
                            "0-cell `{}` must not carry a label",
                            rc.id
                        )));
                    }
                    layer.push(Cell {
                        id: rc.id.clone(),
                        faces: Vec::new(),
                        label: None,
                    });
                    continue;
                }
                if rc.faces.len() != dim + 1 {
                    return Err(Error::Schema(format!(
                        "{dim}-cell `{}` lists {} faces; expected {}",
                        rc.id,
                        rc.faces.len(),
                        dim + 1
                    )));
                }
                let mut faces = Vec::with_capacity(dim + 1);
                for fid in &rc.faces {
                    let idx =
                        id_index[dim - 1]
                            .get(fid)
                            .copied()
                            .ok_or_else(|| Error::UnknownCell {
                                dim: dim - 1,
                                id: fid.clone(),
                            })?;
                    faces.push(idx);
                }
                let label = match &rc.label {
                    None => None,
                    Some(name) => {
                        let letter = alphabet
                            .letter(name)
                            .ok_or_else(|| Error::UnknownLetter(name.clone()))?;
                        let letter_dim = alphabet.p_dimension(letter).unwrap_or(1);
                        if letter_dim != dim {
                            return Err(Error::Schema(format!(
                                "{dim}-cell `{}` is labeled `{name}`, a dimension-{letter_dim} letter",
                                rc.id
                            )));
                        }
                        Some(letter)
                    }
                };
                layer.push(Cell {
                    id: rc.id.clone(),
                    faces,
                    label,
                });
            }
            cells.push(layer);
        }

        // simplex-vertex table
        let mut verts: Vec<Vec<Vec<u32>>> = Vec::with_capacity(cells.len());
        verts.push((0..cells[0].len() as u32).map(|i| vec![i]).collect());
        for dim in 1..cells.len() {
            let mut layer = Vec::with_capacity(cells[dim].len());
            for cell in &cells[dim] {
                let mut vs = Vec::with_capacity(dim + 1);
                for i in 0..dim {
                    vs.push(verts[dim - 1][cell.faces[dim] as usize][i]);
                }
                vs.push(verts[dim - 1][cell.faces[0] as usize][dim - 1]);
                layer.push(vs);
            }
            verts.push(layer);
        }

        let mut out: HashMap<(u32, Letter), Vec<u32>> = HashMap::new();
        let mut rooted: HashMap<(u32, Letter), Vec<u32>> = HashMap::new();
        for dim in 1..cells.len() {
            for (idx, cell) in cells[dim].iter().enumerate() {
                let Some(label) = cell.label else { continue };
                if dim == 1 {
                    let tail = verts[1][idx][0];
                    let head = verts[1][idx][1];
                    out.entry((tail, label)).or_default().push(head);
                    out.entry((head, label.inverse())).or_default().push(tail);
                    rooted.entry((tail, label)).or_default().push(idx as u32);
                    rooted
                        .entry((head, label.inverse()))
                        .or_default()
                        .push(idx as u32);
                } else {
                    let root = verts[dim][idx][0];
                    rooted.entry((root, label)).or_default().push(idx as u32);
                }
            }
        }

        Ok(DeltaComplex {
            name,
            alphabet,
            cells,
            id_index,
            verts,
            out,
            rooted,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    pub fn cell_refs(&self, dim: usize) -> impl Iterator<Item = CellRef> {
        (0..self.cell_count(dim) as u32).map(move |idx| CellRef { dim, idx })
    }

    pub fn cell_id(&self, cell: CellRef) -> &str {
        &self.cells[cell.dim][cell.idx as usize].id
    }

    pub fn cell_by_id(&self, dim: usize, id: &str) -> Option<CellRef> {
        self.id_index
            .get(dim)?
            .get(id)
            .map(|&idx| CellRef { dim, idx })
    }

    pub fn label(&self, cell: CellRef) -> Option<Letter> {
        self.cells[cell.dim][cell.idx as usize].label
    }

    /// The `i`-th face of a cell of dimension at least 1.
    pub fn face(&self, cell: CellRef, i: usize) -> CellRef {
        CellRef {
            dim: cell.dim - 1,
            idx: self.cells[cell.dim][cell.idx as usize].faces[i],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.cells[0].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.vertex_count() as u32).map(Vertex)
    }

    pub fn vertex_named(&self, id: &str) -> Result<Vertex> {
        self.id_index[0]
            .get(id)
            .map(|&i| Vertex(i))
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn vertex_id(&self, v: Vertex) -> &str {
        &self.cells[0][v.0 as usize].id
    }

    /// The image of simplex vertex `v_i` under the cell's characteristic
    /// map.
    pub fn vertex(&self, cell: CellRef, i: usize) -> Result<Vertex> {
        if i > cell.dim {
            return Err(Error::IndexOutOfRange {
                id: self.cell_id(cell).to_string(),
                index: i,
                dim: cell.dim,
            });
        }
        Ok(Vertex(self.verts[cell.dim][cell.idx as usize][i]))
    }

    /// The root: the image of the minimal simplex vertex.
    pub fn root(&self, cell: CellRef) -> Vertex {
        Vertex(self.verts[cell.dim][cell.idx as usize][0])
    }

    pub(crate) fn cells_rooted(&self, v: u32, letter: Letter) -> &[u32] {
        self.rooted.get(&(v, letter)).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn out_step(&self, v: u32, letter: Letter) -> Option<u32> {
        self.out.get(&(v, letter)).and_then(|t| t.first()).copied()
    }

    /// The edge `[v0, v1]` of a cell of dimension >= 2.
    fn base_edge(&self, cell: CellRef) -> CellRef {
        let mut f = cell;
        for m in (2..=cell.dim).rev() {
            f = self.face(f, m);
        }
        f
    }

    fn label_or_err(&self, cell: CellRef) -> Result<Letter> {
        self.label(cell)
            .ok_or_else(|| Error::MissingLabel(self.cell_id(cell).to_string()))
    }

    /// The word read around the boundary of a cell of dimension >= 2: for
    /// a 2-cell the label of the path `(v0, v1, v2, v0)`, in higher
    /// dimensions the face-label sequence conjugated through the `[v0,v1]`
    /// edge.
    pub fn boundary_label(&self, cell: CellRef) -> Result<Word> {
        let k = cell.dim;
        if k < 2 {
            return Err(Error::DimensionTooLow {
                id: self.cell_id(cell).to_string(),
                dim: k,
            });
        }
        let mut word = Word::empty();
        if k == 2 {
            word.push(self.label_or_err(self.face(cell, 2))?);
            word.push(self.label_or_err(self.face(cell, 0))?);
            word.push(self.label_or_err(self.face(cell, 1))?.inverse());
            return Ok(word);
        }
        for i in (1..=k).rev() {
            word.push(self.label_or_err(self.face(cell, i))?);
        }
        let e = self.label_or_err(self.base_edge(cell))?;
        word.push(e);
        word.push(self.label_or_err(self.face(cell, 0))?);
        word.push(e.inverse());
        Ok(word)
    }

    /// The partial action of a word on a 0-cell: edge letters move along
    /// the unique matching edge, a cell letter fixes the vertex exactly
    /// when a cell with that label is rooted there.
    pub fn act(&self, v: Vertex, w: &Word) -> Option<Vertex> {
        assert!((v.0 as usize) < self.vertex_count());
        let mut cur = v.0;
        for &l in w.iter() {
            if l.is_p() {
                if self.cells_rooted(cur, l).is_empty() {
                    return None;
                }
            } else {
                cur = self.out_step(cur, l)?;
            }
        }
        Some(Vertex(cur))
    }

    /// Membership in the loop monoid at `v`: does `w` stabilize `v`?
    pub fn loop_contains(&self, v: Vertex, w: &Word) -> bool {
        self.act(v, w) == Some(v)
    }

    fn structural_diagnostics(&self, diags: &mut Diagnostics) {
        // face identities d_i d_j = d_{j-1} d_i for i < j
        for dim in 2..=self.dimension() {
            for cell in self.cell_refs(dim) {
                let id = self.cell_id(cell);
                for j in 1..=dim {
                    for i in 0..j {
                        let a = self.face(self.face(cell, j), i);
                        let b = self.face(self.face(cell, i), j - 1);
                        if a != b {
                            diags.push(
                                DiagnosticCode::FaceIdentity,
                                format!(
                                    "{dim}-cell `{id}`: d{i}(d{j}(`{id}`)) = `{}` but d{}(d{i}(`{id}`)) = `{}`",
                                    self.cell_id(a),
                                    j - 1,
                                    self.cell_id(b),
                                ),
                            );
                        }
                    }
                }
            }
        }
        // root coherence
        for dim in 2..=self.dimension() {
            for cell in self.cell_refs(dim) {
                let id = self.cell_id(cell);
                let root = self.root(cell);
                for i in 1..=dim {
                    let fr = self.root(self.face(cell, i));
                    if fr != root {
                        diags.push(
                            DiagnosticCode::RootCoherence,
                            format!(
                                "{dim}-cell `{id}`: face d{i} `{}` is rooted at `{}`, expected `{}`",
                                self.cell_id(self.face(cell, i)),
                                self.vertex_id(fr),
                                self.vertex_id(root),
                            ),
                        );
                    }
                }
                let d0root = self.root(self.face(cell, 0));
                let v1 = Vertex(self.verts[dim][cell.idx as usize][1]);
                if d0root != v1 {
                    diags.push(
                        DiagnosticCode::RootCoherence,
                        format!(
                            "{dim}-cell `{id}`: face d0 `{}` is rooted at `{}`, expected `{}`",
                            self.cell_id(self.face(cell, 0)),
                            self.vertex_id(d0root),
                            self.vertex_id(v1),
                        ),
                    );
                }
            }
        }
        // connectivity of the 1-skeleton
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        if self.dimension() >= 1 {
            for e in 0..self.cells[1].len() {
                let a = find(&mut parent, self.verts[1][e][0] as usize);
                let b = find(&mut parent, self.verts[1][e][1] as usize);
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        for v in 1..n {
            if find(&mut parent, v) != root {
                diags.push(
                    DiagnosticCode::Disconnected,
                    format!(
                        "1-skeleton is disconnected: `{}` is not reachable from `{}`",
                        self.vertex_id(Vertex(v as u32)),
                        self.vertex_id(Vertex(0))
                    ),
                );
            }
        }
    }

    fn label_diagnostics(&self, diags: &mut Diagnostics) {
        for dim in 1..=self.dimension() {
            for cell in self.cell_refs(dim) {
                if self.label(cell).is_none() {
                    diags.push(
                        DiagnosticCode::MissingLabel,
                        format!("{dim}-cell `{}` has no label", self.cell_id(cell)),
                    );
                }
            }
        }
        // cells with equal labels must have equal face labels
        for dim in 2..=self.dimension() {
            let mut seen: HashMap<Letter, CellRef> = HashMap::new();
            for cell in self.cell_refs(dim) {
                let Some(label) = self.label(cell) else {
                    continue;
                };
                match seen.get(&label) {
                    None => {
                        seen.insert(label, cell);
                    }
                    Some(&first) => {
                        for i in 0..=dim {
                            let la = self.label(self.face(cell, i));
                            let lb = self.label(self.face(first, i));
                            if la != lb {
                                diags.push(
                                    DiagnosticCode::FaceLabel,
                                    format!(
                                        "{dim}-cells `{}` and `{}` share label `{}` but disagree on face d{i}",
                                        self.cell_id(first),
                                        self.cell_id(cell),
                                        self.alphabet.name(label),
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
        self.injectivity_diagnostics(diags);
    }

    fn injectivity_diagnostics(&self, diags: &mut Diagnostics) {
        // at most one cell per (dimension, label, vertex index, vertex)
        for dim in 1..=self.dimension() {
            let mut buckets: HashMap<(Letter, usize, u32), CellRef> = HashMap::new();
            for cell in self.cell_refs(dim) {
                let Some(label) = self.label(cell) else {
                    continue;
                };
                for i in 0..=dim {
                    let v = self.verts[dim][cell.idx as usize][i];
                    match buckets.get(&(label, i, v)) {
                        None => {
                            buckets.insert((label, i, v), cell);
                        }
                        Some(&other) if other != cell => {
                            diags.push(
                                DiagnosticCode::LabelClash,
                                format!(
                                    "vertex `{}`: {dim}-cells `{}` and `{}` both carry label `{}` at vertex index {i}",
                                    self.vertex_id(Vertex(v)),
                                    self.cell_id(other),
                                    self.cell_id(cell),
                                    self.alphabet.name(label),
                                ),
                            );
                        }
                        _ => {}
                    }
                }
            }
        }
    }

    /// Checks every complex invariant; empty diagnostics means valid.
    pub fn validate(&self) -> Diagnostics {
        let mut diags = Diagnostics::default();
        self.structural_diagnostics(&mut diags);
        self.label_diagnostics(&mut diags);
        diags
    }

    /// Checks that the labeling is drawn from `base`: faces of a labeled
    /// cell carry the labels of the base cell's faces, and labels are
    /// deterministic at every vertex.
    pub fn check_labeling(&self, base: &BaseComplex) -> Diagnostics {
        let mut diags = Diagnostics::default();
        if self.alphabet != *base.alphabet() {
            diags.push(
                DiagnosticCode::AlphabetMismatch,
                "labels are not drawn from the base alphabet".to_string(),
            );
            return diags;
        }
        for dim in 1..=self.dimension() {
            for cell in self.cell_refs(dim) {
                let Some(label) = self.label(cell) else {
                    diags.push(
                        DiagnosticCode::MissingLabel,
                        format!("{dim}-cell `{}` has no label", self.cell_id(cell)),
                    );
                    continue;
                };
                if dim < 2 {
                    continue;
                }
                let base_cell = base.cell_of_letter(label);
                for i in 0..=dim {
                    let expected = base.complex().label(base.complex().face(base_cell, i));
                    let got = self.label(self.face(cell, i));
                    if got != expected {
                        diags.push(
                            DiagnosticCode::FaceLabel,
                            format!(
                                "{dim}-cell `{}` labeled `{}`: face d{i} `{}` does not match the base cell's face label",
                                self.cell_id(cell),
                                self.alphabet.name(label),
                                self.cell_id(self.face(cell, i)),
                            ),
                        );
                    }
                }
            }
        }
        self.injectivity_diagnostics(&mut diags);
        diags
    }

    /// The labeling obtained by identifying all 0-cells and giving every
    /// cell its own label. Ignores any labels already present.
    pub fn canonical_labeling(&self) -> Result<(BaseComplex, DeltaComplex)> {
        let mut structural = Diagnostics::default();
        self.structural_diagnostics(&mut structural);
        if !structural.ok() {
            return Err(Error::InvalidComplex(structural));
        }

        let mut taken: HashMap<String, ()> = HashMap::new();
        let mut fresh: Vec<Vec<String>> = vec![Vec::new()]; // dims >= 1 used
        for dim in 1..=self.dimension() {
            let mut layer = Vec::new();
            for cell in self.cell_refs(dim) {
                let mut candidate = sanitize_name(self.cell_id(cell));
                while taken.contains_key(&candidate) {
                    candidate.push('_');
                }
                taken.insert(candidate.clone(), ());
                layer.push(candidate);
            }
            fresh.push(layer);
        }

        let xs: Vec<String> = fresh.get(1).cloned().unwrap_or_default();
        let mut ps: Vec<(String, usize)> = Vec::new();
        for dim in 2..=self.dimension() {
            for name in &fresh[dim] {
                ps.push((name.clone(), dim));
            }
        }
        let alphabet = Alphabet::new(xs, ps)?;

        let mut raw = self.to_raw();
        for dim in 1..=self.dimension() {
            for cell in self.cell_refs(dim) {
                raw[dim][cell.idx as usize].label = Some(fresh[dim][cell.idx as usize].clone());
            }
        }
        let relabeled = DeltaComplex::assemble(self.name.clone(), raw, Some(alphabet.clone()))?;

        let pt = self.cell_id(CellRef { dim: 0, idx: 0 }).to_string();
        let mut base_raw: Vec<Vec<RawCell>> = vec![vec![RawCell {
            id: pt.clone(),
            faces: Vec::new(),
            label: None,
        }]];
        for dim in 1..=self.dimension() {
            let mut layer = Vec::new();
            for cell in self.cell_refs(dim) {
                let faces = if dim == 1 {
                    vec![pt.clone(), pt.clone()]
                } else {
                    (0..=dim)
                        .map(|i| fresh[dim - 1][self.face(cell, i).idx as usize].clone())
                        .collect()
                };
                layer.push(RawCell {
                    id: fresh[dim][cell.idx as usize].clone(),
                    faces,
                    label: Some(fresh[dim][cell.idx as usize].clone()),
                });
            }
            base_raw.push(layer);
        }
        let base = BaseComplex::new(DeltaComplex::assemble(
            format!("{}_base", self.name),
            base_raw,
            Some(alphabet),
        )?)?;
        Ok((base, relabeled))
    }

    /// Reconstructs the base complex this labeling is drawn over. Needs
    /// every cell labeled and every cell letter in use.
    pub fn induced_base(&self) -> Result<BaseComplex> {
        let mut diags = Diagnostics::default();
        self.label_diagnostics(&mut diags);
        if !diags.ok() {
            return Err(Error::InvalidComplex(diags));
        }
        let pt = self.cell_id(CellRef { dim: 0, idx: 0 }).to_string();
        let mut base_raw: Vec<Vec<RawCell>> = vec![vec![RawCell {
            id: pt.clone(),
            faces: Vec::new(),
            label: None,
        }]];
        let max_dim = self
            .alphabet
            .p_entries()
            .map(|(_, d)| d)
            .max()
            .unwrap_or(if self.alphabet.x_count() > 0 { 1 } else { 0 });
        for _ in 1..=max_dim {
            base_raw.push(Vec::new());
        }
        for x in self.alphabet.x_names() {
            base_raw[1].push(RawCell {
                id: x.to_string(),
                faces: vec![pt.clone(), pt.clone()],
                label: Some(x.to_string()),
            });
        }
        for (name, dim) in self.alphabet.p_entries() {
            let letter = self.alphabet.letter(name).unwrap();
            let witness = self
                .cell_refs(dim)
                .find(|&c| self.label(c) == Some(letter))
                .ok_or_else(|| {
                    Error::Schema(format!(
                        "cell letter `{name}` labels no cell; base complex is undetermined"
                    ))
                })?;
            let faces = (0..=dim)
                .map(|i| {
                    self.label(self.face(witness, i))
                        .map(|l| self.alphabet.name(l).to_string())
                        .ok_or_else(|| {
                            Error::MissingLabel(self.cell_id(self.face(witness, i)).to_string())
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            base_raw[dim].push(RawCell {
                id: name.to_string(),
                faces,
                label: Some(name.to_string()),
            });
        }
        BaseComplex::new(DeltaComplex::assemble(
            format!("{}_base", self.name),
            base_raw,
            Some(self.alphabet.clone()),
        )?)
    }

    /// The same complex with labels re-resolved against another alphabet.
    pub fn relabel_over(&self, alphabet: &Alphabet) -> Result<DeltaComplex> {
        let raw = self.to_raw();
        DeltaComplex::assemble(self.name.clone(), raw, Some(alphabet.clone()))
    }

    fn to_raw(&self) -> Vec<Vec<RawCell>> {
        (0..=self.dimension())
            .map(|dim| {
                self.cell_refs(dim)
                    .map(|cell| RawCell {
                        id: self.cell_id(cell).to_string(),
                        faces: (0..if dim == 0 { 0 } else { dim + 1 })
                            .map(|i| self.cell_id(self.face(cell, i)).to_string())
                            .collect(),
                        label: self.label(cell).map(|l| self.alphabet.name(l).to_string()),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_json_str(text: &str) -> Result<DeltaComplex> {
        let file: ComplexFile = serde_json::from_str(text)?;
        let mut raw: Vec<Vec<RawCell>> = vec![Vec::new(); file.dimension + 1];
        for (key, entries) in file.cells {
            let dim: usize = key
                .parse()
                .map_err(|_| Error::Schema(format!("bad dimension key `{key}`")))?;
            if dim > file.dimension {
                return Err(Error::Schema(format!(
                    "dimension key {dim} exceeds declared dimension {}",
                    file.dimension
                )));
            }
            raw[dim] = entries
                .into_iter()
                .map(|e| RawCell {
                    id: e.id,
                    faces: e.faces.unwrap_or_default(),
                    label: e.label,
                })
                .collect();
        }
        if raw[file.dimension].is_empty() {
            return Err(Error::Schema(format!(
                "declared dimension {} has no cells",
                file.dimension
            )));
        }
        DeltaComplex::assemble(file.name, raw, None)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&FileRepr(self)).expect("complex serialization")
    }
}

fn sanitize_name(id: &str) -> String {
    let mut s: String = id
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    if !is_identifier(&s) {
        s.insert(0, 'c');
    }
    s
}

#[derive(Deserialize)]
struct ComplexFile {
    #[serde(default)]
    name: String,
    dimension: usize,
    cells: BTreeMap<String, Vec<CellEntry>>,
}

#[derive(Serialize, Deserialize)]
struct CellEntry {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

struct FileRepr<'a>(&'a DeltaComplex);

impl Serialize for FileRepr<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Complex", 3)?;
        st.serialize_field("name", self.0.name())?;
        st.serialize_field("dimension", &self.0.dimension())?;
        st.serialize_field("cells", &CellsRepr(self.0))?;
        st.end()
    }
}

struct CellsRepr<'a>(&'a DeltaComplex);

impl Serialize for CellsRepr<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.0;
        let mut map = serializer.serialize_map(Some(c.dimension() + 1))?;
        for dim in 0..=c.dimension() {
            let entries: Vec<CellEntry> = c
                .cell_refs(dim)
                .map(|cell| CellEntry {
                    id: c.cell_id(cell).to_string(),
                    faces: if dim == 0 {
                        None
                    } else {
                        Some(
                            (0..=dim)
                                .map(|i| c.cell_id(c.face(cell, i)).to_string())
                                .collect(),
                        )
                    },
                    label: c.label(cell).map(|l| c.alphabet.name(l).to_string()),
                })
                .collect();
            map.serialize_entry(&dim.to_string(), &entries)?;
        }
        map.end()
    }
}

/// A one-vertex complex whose cells are labeled by their own ids; the
/// labeling target for every labeled complex.
#[derive(Clone, Debug)]
pub struct BaseComplex {
    complex: DeltaComplex,
    x_cells: Vec<u32>,
    p_cells: Vec<CellRef>,
}

impl BaseComplex {
    /// Wraps a complex with exactly one 0-cell. Missing labels default to
    /// cell ids; present labels must equal them. The alphabet is rebuilt
    /// in declared cell order.
    pub fn new(c: DeltaComplex) -> Result<BaseComplex> {
        if c.vertex_count() != 1 {
            return Err(Error::BaseShape(format!(
                "expected exactly one 0-cell, found {}",
                c.vertex_count()
            )));
        }
        let mut raw = c.to_raw();
        for (dim, layer) in raw.iter_mut().enumerate().skip(1) {
            for cell in layer {
                match &cell.label {
                    None => cell.label = Some(cell.id.clone()),
                    Some(l) if *l == cell.id => {}
                    Some(l) => {
                        return Err(Error::BaseShape(format!(
                        "{dim}-cell `{}` is labeled `{l}`; base cells are labeled by their own ids",
                        cell.id
                    )))
                    }
                }
            }
        }
        let xs: Vec<String> = raw.get(1).map_or(Vec::new(), |layer| {
            layer.iter().map(|c| c.id.clone()).collect()
        });
        let mut ps: Vec<(String, usize)> = Vec::new();
        for (dim, layer) in raw.iter().enumerate().skip(2) {
            for cell in layer {
                ps.push((cell.id.clone(), dim));
            }
        }
        let alphabet = Alphabet::new(xs, ps)?;
        let complex = DeltaComplex::assemble(c.name.clone(), raw, Some(alphabet))?;
        let report = complex.validate();
        if !report.ok() {
            return Err(Error::InvalidComplex(report));
        }

        let mut x_cells = Vec::new();
        for i in 0..complex.cell_count(1) {
            x_cells.push(i as u32);
        }
        let mut p_cells = Vec::new();
        for (name, dim) in complex.alphabet.p_entries() {
            let name = name.to_string();
            let cell = complex
                .cell_by_id(dim, &name)
                .expect("base cell ids are alphabet names");
            p_cells.push(cell);
        }
        Ok(BaseComplex {
            complex,
            x_cells,
            p_cells,
        })
    }

    pub fn complex(&self) -> &DeltaComplex {
        &self.complex
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.complex.alphabet()
    }

    /// The single 0-cell.
    pub fn base_vertex(&self) -> Vertex {
        Vertex(0)
    }

    /// The cell labeled by a letter.
    pub fn cell_of_letter(&self, letter: Letter) -> CellRef {
        if letter.is_p() {
            self.p_cells[letter.index()]
        } else {
            CellRef {
                dim: 1,
                idx: self.x_cells[letter.index()],
            }
        }
    }

    /// Boundary label of the cell carrying a cell letter.
    pub fn boundary_label_of(&self, letter: Letter) -> Result<Word> {
        self.complex.boundary_label(self.cell_of_letter(letter))
    }

    /// Group presentation of the fundamental group: generators `X`,
    /// one relator per 2-cell boundary label.
    pub fn pi1_presentation(&self) -> String {
        let gens: Vec<&str> = self.alphabet().x_names().collect();
        let mut relators = Vec::new();
        for (name, dim) in self.alphabet().p_entries() {
            if dim != 2 {
                continue;
            }
            let letter = self.alphabet().letter(name).unwrap();
            let bl = self
                .boundary_label_of(letter)
                .expect("base 2-cells have boundary labels");
            relators.push(self.alphabet().format_word(&bl));
        }
        format!("⟨{} | {}⟩", gens.join(", "), relators.join(", "))
    }
}

impl std::ops::Deref for BaseComplex {
    type Target = DeltaComplex;

    fn deref(&self) -> &DeltaComplex {
        &self.complex
    }
}

/// Incremental construction of a complex from ids.
pub struct ComplexBuilder {
    name: String,
    raw: Vec<Vec<RawCell>>,
}

impl ComplexBuilder {
    pub fn new(name: &str) -> Self {
        ComplexBuilder {
            name: name.to_string(),
            raw: Vec::new(),
        }
    }

    fn layer(&mut self, dim: usize) -> &mut Vec<RawCell> {
        while self.raw.len() <= dim {
            self.raw.push(Vec::new());
        }
        &mut self.raw[dim]
    }

    pub fn vertex(&mut self, id: &str) -> &mut Self {
        self.layer(0).push(RawCell {
            id: id.to_string(),
            faces: Vec::new(),
            label: None,
        });
        self
    }

    /// An edge from `from` to `to`; the face list is `[to, from]`.
    pub fn edge(&mut self, id: &str, from: &str, to: &str, label: &str) -> &mut Self {
        self.cell(1, id, &[to, from], Some(label))
    }

    pub fn cell(&mut self, dim: usize, id: &str, faces: &[&str], label: Option<&str>) -> &mut Self {
        self.layer(dim).push(RawCell {
            id: id.to_string(),
            faces: faces.iter().map(|s| s.to_string()).collect(),
            label: label.map(str::to_string),
        });
        self
    }

    pub fn build(&self) -> Result<DeltaComplex> {
        DeltaComplex::assemble(self.name.clone(), self.raw.clone(), None)
    }

    pub fn build_over(&self, alphabet: &Alphabet) -> Result<DeltaComplex> {
        DeltaComplex::assemble(self.name.clone(), self.raw.clone(), Some(alphabet.clone()))
    }

    /// Builds and wraps as a base complex; unlabeled cells are labeled by
    /// their ids.
    pub fn build_base(&self) -> Result<BaseComplex> {
        BaseComplex::new(self.build()?)
    }
}
