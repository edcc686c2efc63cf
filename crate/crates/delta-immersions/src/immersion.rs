//! Cell maps between labeled complexes: inference, immersion checking,
//! covering detection, and basepoint-free isomorphism.
//!
//! A cell map assigns to each source cell a target cell of the same
//! dimension, commuting with faces and preserving labels. It is an
//! immersion when additionally no two distinct source cells with the
//! same image share a vertex index at any vertex, and a covering when
//! every labeled star of the target lifts through every fiber vertex.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::complex::{CellRef, DeltaComplex, DiagnosticCode, Diagnostics, Vertex};
use crate::error::{Error, Result};
use crate::word::Letter;

/// Per-dimension assignment of source cell indices to target cell
/// indices. Interpreted against a fixed (source, target) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMap {
    assignment: Vec<Vec<u32>>,
}

impl CellMap {
    pub fn new(assignment: Vec<Vec<u32>>) -> Self {
        CellMap { assignment }
    }

    pub fn dimensions(&self) -> usize {
        self.assignment.len() - 1
    }

    pub fn image(&self, cell: CellRef) -> CellRef {
        CellRef {
            dim: cell.dim,
            idx: self.assignment[cell.dim][cell.idx as usize],
        }
    }

    pub fn vertex_image(&self, v: Vertex) -> Vertex {
        Vertex(self.assignment[0][v.0 as usize])
    }

    /// JSON object `{"0": {src: dst, ...}, "1": ...}` keyed by cell ids.
    pub fn to_json(&self, source: &DeltaComplex, target: &DeltaComplex) -> serde_json::Value {
        let mut dims = serde_json::Map::new();
        for (dim, layer) in self.assignment.iter().enumerate() {
            let mut entries = BTreeMap::new();
            for (idx, &img) in layer.iter().enumerate() {
                entries.insert(
                    source
                        .cell_id(CellRef {
                            dim,
                            idx: idx as u32,
                        })
                        .to_string(),
                    target.cell_id(CellRef { dim, idx: img }).to_string(),
                );
            }
            dims.insert(dim.to_string(), serde_json::json!(entries));
        }
        serde_json::Value::Object(dims)
    }

    pub fn from_json(
        source: &DeltaComplex,
        target: &DeltaComplex,
        value: &serde_json::Value,
    ) -> Result<CellMap> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Schema("map file must be a JSON object".into()))?;
        let mut assignment: Vec<Vec<u32>> = Vec::new();
        for dim in 0..=source.dimension() {
            let layer_in = obj
                .get(&dim.to_string())
                .and_then(|v| v.as_object())
                .ok_or_else(|| Error::Schema(format!("map file is missing dimension {dim}")))?;
            let mut layer = vec![u32::MAX; source.cell_count(dim)];
            for (src_id, dst_id) in layer_in {
                let src = source
                    .cell_by_id(dim, src_id)
                    .ok_or_else(|| Error::UnknownCell {
                        dim,
                        id: src_id.clone(),
                    })?;
                let dst_id = dst_id
                    .as_str()
                    .ok_or_else(|| Error::Schema("map entries must be strings".into()))?;
                let dst = target
                    .cell_by_id(dim, dst_id)
                    .ok_or_else(|| Error::UnknownCell {
                        dim,
                        id: dst_id.to_string(),
                    })?;
                layer[src.idx as usize] = dst.idx;
            }
            if let Some(missing) = layer.iter().position(|&v| v == u32::MAX) {
                return Err(Error::Schema(format!(
                    "map file does not cover {dim}-cell `{}`",
                    source.cell_id(CellRef {
                        dim,
                        idx: missing as u32
                    })
                )));
            }
            assignment.push(layer);
        }
        Ok(CellMap { assignment })
    }
}

/// Composite `g ∘ f` of `f : A → B` and `g : B → C`.
pub fn compose(f: &CellMap, g: &CellMap) -> CellMap {
    let assignment = f
        .assignment
        .iter()
        .enumerate()
        .map(|(dim, layer)| {
            layer
                .iter()
                .map(|&mid| g.assignment[dim][mid as usize])
                .collect()
        })
        .collect();
    CellMap { assignment }
}

/// The unique label-preserving cell map with `f(v) = u`, extended over
/// edges by matching labels and over higher cells by matching labels at
/// roots. Fails when some step has no label-matching target cell or the
/// result does not commute with faces.
pub fn infer_map(
    source: &DeltaComplex,
    target: &DeltaComplex,
    v: Vertex,
    u: Vertex,
) -> Result<CellMap> {
    if source.alphabet() != target.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let mut m0: Vec<Option<u32>> = vec![None; source.vertex_count()];
    let mut m1: Vec<Option<u32>> = vec![None; source.cell_count(1)];
    m0[v.0 as usize] = Some(u.0);
    let mut queue = VecDeque::from([v.0]);
    while let Some(p) = queue.pop_front() {
        let fp = m0[p as usize].unwrap();
        for dir in source.alphabet().letters().filter(|l| !l.is_p()) {
            for &edge in source.cells_rooted(p, dir) {
                let image_edge = match target.cells_rooted(fp, dir).first() {
                    Some(&e) => e,
                    None => {
                        return Err(Error::NoSuchMap(format!(
                            "vertex `{}` has no `{}` edge matching `{}` at `{}`",
                            target.vertex_id(Vertex(fp)),
                            target.alphabet().token(dir),
                            source.cell_id(CellRef { dim: 1, idx: edge }),
                            source.vertex_id(Vertex(p)),
                        )))
                    }
                };
                match m1[edge as usize] {
                    Some(known) if known != image_edge => {
                        return Err(Error::NoSuchMap(format!(
                            "edge `{}` cannot map to two different cells",
                            source.cell_id(CellRef { dim: 1, idx: edge })
                        )))
                    }
                    _ => m1[edge as usize] = Some(image_edge),
                }
                // propagate the far endpoint: head for a positive step,
                // tail for an inverted one
                let far_index = usize::from(!dir.is_inverted());
                let far_src = source
                    .vertex(CellRef { dim: 1, idx: edge }, far_index)
                    .unwrap()
                    .0;
                let far_dst = target
                    .vertex(
                        CellRef {
                            dim: 1,
                            idx: image_edge,
                        },
                        far_index,
                    )
                    .unwrap()
                    .0;
                match m0[far_src as usize] {
                    Some(known) if known != far_dst => {
                        return Err(Error::NoSuchMap(format!(
                            "vertex `{}` cannot map to two different vertices",
                            source.vertex_id(Vertex(far_src))
                        )))
                    }
                    Some(_) => {}
                    None => {
                        m0[far_src as usize] = Some(far_dst);
                        queue.push_back(far_src);
                    }
                }
            }
        }
    }
    if let Some(missing) = m0.iter().position(Option::is_none) {
        return Err(Error::NoSuchMap(format!(
            "vertex `{}` is not reachable from `{}`",
            source.vertex_id(Vertex(missing as u32)),
            source.vertex_id(v)
        )));
    }
    if let Some(missing) = m1.iter().position(Option::is_none) {
        return Err(Error::NoSuchMap(format!(
            "edge `{}` has no label",
            source.cell_id(CellRef {
                dim: 1,
                idx: missing as u32
            })
        )));
    }

    let mut assignment: Vec<Vec<u32>> = Vec::with_capacity(source.dimension() + 1);
    assignment.push(m0.into_iter().map(Option::unwrap).collect());
    if source.dimension() >= 1 {
        assignment.push(m1.into_iter().map(Option::unwrap).collect());
    }
    for dim in 2..=source.dimension() {
        let mut layer = Vec::with_capacity(source.cell_count(dim));
        for cell in source.cell_refs(dim) {
            let label = source.label(cell).ok_or_else(|| {
                Error::NoSuchMap(format!("cell `{}` has no label", source.cell_id(cell)))
            })?;
            let root_image = assignment[0][source.root(cell).0 as usize];
            let image = match target.cells_rooted(root_image, label).first() {
                Some(&c) => c,
                None => {
                    return Err(Error::NoSuchMap(format!(
                        "no {dim}-cell labeled `{}` is rooted at `{}`",
                        target.alphabet().name(label),
                        target.vertex_id(Vertex(root_image)),
                    )))
                }
            };
            layer.push(image);
        }
        assignment.push(layer);
    }
    let map = CellMap { assignment };

    // the extension is forced; verify it actually commutes with faces
    for dim in 1..=source.dimension() {
        for cell in source.cell_refs(dim) {
            for i in 0..=dim {
                if map.image(source.face(cell, i)) != target.face(map.image(cell), i) {
                    return Err(Error::NoSuchMap(format!(
                        "face d{i} of `{}` does not commute with the map",
                        source.cell_id(cell)
                    )));
                }
            }
        }
    }
    Ok(map)
}

/// Immersion test: the cell map invariants plus local injectivity at
/// every source vertex. Empty diagnostics means `f` is an immersion.
pub fn check_immersion(f: &CellMap, source: &DeltaComplex, target: &DeltaComplex) -> Diagnostics {
    let mut diags = Diagnostics::default();
    if source.alphabet() != target.alphabet() {
        diags.push(
            DiagnosticCode::AlphabetMismatch,
            "source and target are labeled over different alphabets".into(),
        );
        return diags;
    }
    if f.assignment.len() != source.dimension() + 1 {
        diags.push(
            DiagnosticCode::MapTotal,
            format!(
                "map covers {} dimensions, source has {}",
                f.assignment.len(),
                source.dimension() + 1
            ),
        );
        return diags;
    }
    for dim in 0..=source.dimension() {
        if f.assignment[dim].len() != source.cell_count(dim) {
            diags.push(
                DiagnosticCode::MapTotal,
                format!("map is not total on {dim}-cells"),
            );
            return diags;
        }
        if dim > target.dimension() {
            diags.push(
                DiagnosticCode::MapTotal,
                format!("target has no {dim}-cells"),
            );
            return diags;
        }
        for cell in source.cell_refs(dim) {
            if f.assignment[dim][cell.idx as usize] as usize >= target.cell_count(dim) {
                diags.push(
                    DiagnosticCode::MapTotal,
                    format!(
                        "{dim}-cell `{}` maps outside the target",
                        source.cell_id(cell)
                    ),
                );
                return diags;
            }
        }
    }
    for dim in 1..=source.dimension() {
        for cell in source.cell_refs(dim) {
            let image = f.image(cell);
            if source.label(cell) != target.label(image) {
                diags.push(
                    DiagnosticCode::MapLabel,
                    format!(
                        "{dim}-cell `{}` maps to `{}` with a different label",
                        source.cell_id(cell),
                        target.cell_id(image)
                    ),
                );
            }
            for i in 0..=dim {
                if f.image(source.face(cell, i)) != target.face(image, i) {
                    diags.push(
                        DiagnosticCode::MapFace,
                        format!(
                            "face d{i} of `{}` does not commute with the map",
                            source.cell_id(cell)
                        ),
                    );
                }
            }
        }
    }
    // local injectivity: distinct cells with equal images may not share a
    // vertex index at any vertex
    for dim in 1..=source.dimension() {
        let mut buckets: HashMap<(u32, usize, u32), CellRef> = HashMap::new();
        for cell in source.cell_refs(dim) {
            let image = f.image(cell);
            for i in 0..=dim {
                let v = source.vertex(cell, i).unwrap();
                match buckets.get(&(image.idx, i, v.0)) {
                    None => {
                        buckets.insert((image.idx, i, v.0), cell);
                    }
                    Some(&other) if other != cell => {
                        diags.push(
                            DiagnosticCode::LocalInjectivity,
                            format!(
                                "vertex `{}`: {dim}-cells `{}` and `{}` share image `{}` and vertex index {i}",
                                source.vertex_id(v),
                                source.cell_id(other),
                                source.cell_id(cell),
                                target.cell_id(image),
                            ),
                        );
                    }
                    _ => {}
                }
            }
        }
    }
    diags
}

/// Covering test: an immersion is a covering iff it is star-surjective
/// at every source vertex, i.e. every cell of the target incident to the
/// image vertex lifts at the required vertex index.
pub fn is_covering(f: &CellMap, source: &DeltaComplex, target: &DeltaComplex) -> Result<bool> {
    let report = check_immersion(f, source, target);
    if !report.ok() {
        return Err(Error::NotAnImmersion(report));
    }
    // source stars: (vertex, dim, label, index) present?
    let mut stars: HashSet<(u32, usize, Letter, usize)> = HashSet::new();
    for dim in 1..=source.dimension() {
        for cell in source.cell_refs(dim) {
            let label = source.label(cell).expect("immersion sources are labeled");
            for i in 0..=dim {
                stars.insert((source.vertex(cell, i).unwrap().0, dim, label, i));
            }
        }
    }
    for v in source.vertices() {
        let fv = f.vertex_image(v);
        for dim in 1..=target.dimension() {
            for cell in target.cell_refs(dim) {
                let Some(label) = target.label(cell) else {
                    continue;
                };
                for i in 0..=dim {
                    if target.vertex(cell, i).unwrap() == fv
                        && !stars.contains(&(v.0, dim, label, i))
                    {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Label-preserving isomorphism between two complexes, matching the
/// pinned vertices when given, otherwise trying every vertex of the
/// first complex against a fixed vertex of the second.
pub fn complex_isomorphic(
    d1: &DeltaComplex,
    d2: &DeltaComplex,
    pinned: Option<(Vertex, Vertex)>,
) -> Option<CellMap> {
    if d1.alphabet() != d2.alphabet() || d1.dimension() != d2.dimension() {
        return None;
    }
    for dim in 0..=d1.dimension() {
        if d1.cell_count(dim) != d2.cell_count(dim) {
            return None;
        }
    }
    let candidates: Vec<(Vertex, Vertex)> = match pinned {
        Some(pair) => vec![pair],
        None => d1.vertices().map(|v| (v, Vertex(0))).collect(),
    };
    for (v, u) in candidates {
        let Ok(map) = infer_map(d1, d2, v, u) else {
            continue;
        };
        // bijective on every dimension makes the forced map an isomorphism
        let bijective = (0..=d1.dimension()).all(|dim| {
            let mut seen = vec![false; d2.cell_count(dim)];
            for cell in d1.cell_refs(dim) {
                let img = map.image(cell).idx as usize;
                if seen[img] {
                    return false;
                }
                seen[img] = true;
            }
            true
        });
        if bijective && check_immersion(&map, d1, d2).ok() {
            return Some(map);
        }
    }
    None
}
