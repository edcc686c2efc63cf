//! Birooted edge-labeled automata over `X ∪ P`, with folding.
//!
//! Edges carry their involutive closure implicitly: adding `p --x--> q`
//! also records `q --x'--> p`, and cell-letter edges are symmetric. An
//! automaton is *folded* once no vertex has two edges with the same label
//! leaving it (equivalently, entering it); folded automata are
//! deterministic and co-deterministic, so a run is determined by its
//! start vertex and its label.

use std::collections::{BTreeMap, VecDeque};

use crate::word::{Alphabet, Letter, Word};

/// A birooted graph labeled over an alphabet, possibly not yet folded.
#[derive(Clone, Debug)]
pub struct InverseAutomaton {
    alphabet: Alphabet,
    // adjacency with both orientations materialized; targets sorted
    adj: Vec<BTreeMap<Letter, Vec<u32>>>,
    start: u32,
    end: u32,
    folded: bool,
}

impl InverseAutomaton {
    fn with_vertices(alphabet: Alphabet, n: u32, start: u32, end: u32) -> Self {
        InverseAutomaton {
            alphabet,
            adj: vec![BTreeMap::new(); n as usize],
            start,
            end,
            folded: false,
        }
    }

    /// Builds an automaton from explicit edges. Inverted edge letters are
    /// normalized; the involutive closure is added automatically.
    pub fn from_parts(
        alphabet: &Alphabet,
        vertices: u32,
        edges: &[(u32, Letter, u32)],
        start: u32,
        end: u32,
    ) -> Self {
        let mut a = Self::with_vertices(alphabet.clone(), vertices, start, end);
        for &(src, letter, dst) in edges {
            a.add_edge(src, letter, dst);
        }
        a
    }

    /// The path automaton of a word: `|w|` edges spelling `w` from start
    /// to end. Not folded.
    pub fn linear(alphabet: &Alphabet, w: &Word) -> Self {
        let n = w.len() as u32 + 1;
        let mut a = Self::with_vertices(alphabet.clone(), n, 0, w.len() as u32);
        for (i, &l) in w.iter().enumerate() {
            a.add_edge(i as u32, l, i as u32 + 1);
        }
        a
    }

    /// One base vertex with a petal spelling each generator from base to
    /// base. Not folded.
    pub fn flower(alphabet: &Alphabet, generators: &[Word]) -> Self {
        let mut a = Self::with_vertices(alphabet.clone(), 1, 0, 0);
        for w in generators {
            if w.is_empty() {
                continue;
            }
            let mut cur = 0;
            for (i, &l) in w.iter().enumerate() {
                let next = if i + 1 == w.len() { 0 } else { a.push_vertex() };
                a.add_edge(cur, l, next);
                cur = next;
            }
        }
        a
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> u32 {
        self.adj.len() as u32
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn end(&self) -> u32 {
        self.end
    }

    pub fn is_folded(&self) -> bool {
        self.folded
    }

    fn push_vertex(&mut self) -> u32 {
        self.adj.push(BTreeMap::new());
        self.adj.len() as u32 - 1
    }

    fn insert_half_edge(&mut self, src: u32, letter: Letter, dst: u32) {
        let targets = self.adj[src as usize].entry(letter).or_default();
        if let Err(pos) = targets.binary_search(&dst) {
            targets.insert(pos, dst);
        }
    }

    /// Adds an edge together with its inverse orientation.
    pub fn add_edge(&mut self, src: u32, letter: Letter, dst: u32) {
        let (src, dst, letter) = if letter.is_inverted() {
            (dst, src, letter.positive())
        } else {
            (src, dst, letter)
        };
        self.insert_half_edge(src, letter, dst);
        self.insert_half_edge(dst, letter.inverse(), src);
        self.folded = false;
    }

    /// Appends a fresh path spelling `w` from `from` to `to`.
    pub(crate) fn sew_path(&mut self, from: u32, w: &Word, to: u32) {
        debug_assert!(!w.is_empty());
        let mut cur = from;
        for (i, &l) in w.iter().enumerate() {
            let next = if i + 1 == w.len() {
                to
            } else {
                self.push_vertex()
            };
            self.add_edge(cur, l, next);
            cur = next;
        }
    }

    /// True when no vertex has two distinct targets under one label.
    pub fn is_deterministic(&self) -> bool {
        self.adj
            .iter()
            .all(|m| m.values().all(|targets| targets.len() <= 1))
    }

    /// Positive edges `(src, letter, dst)`: edge letters in positive
    /// orientation, cell-letter edges reported once.
    pub fn positive_edges(&self) -> Vec<(u32, Letter, u32)> {
        let mut out = Vec::new();
        for (v, map) in self.adj.iter().enumerate() {
            for (&l, targets) in map {
                for &t in targets {
                    if l.is_inverted() {
                        continue;
                    }
                    if l.is_p() && t < v as u32 {
                        continue; // reported from the smaller endpoint
                    }
                    out.push((v as u32, l, t));
                }
            }
        }
        out
    }

    /// Follows `w` from `v`; `None` when the run dies. Requires a folded
    /// automaton.
    pub fn run_from(&self, v: u32, w: &Word) -> Option<u32> {
        assert!(self.folded, "run on an unfolded automaton");
        assert!((v as usize) < self.adj.len());
        let mut cur = v;
        for &l in w.iter() {
            cur = *self.adj[cur as usize].get(&l)?.first()?;
        }
        Some(cur)
    }

    /// Single deterministic step, if defined.
    pub fn step(&self, v: u32, l: Letter) -> Option<u32> {
        assert!(self.folded, "run on an unfolded automaton");
        self.adj[v as usize]
            .get(&l)
            .and_then(|t| t.first())
            .copied()
    }

    /// Language membership: does `w` label a path from start to end?
    pub fn accepts(&self, w: &Word) -> bool {
        self.run_from(self.start, w) == Some(self.end)
    }

    /// The same automaton with both roots moved to `v`.
    pub fn rebase(&self, v: u32) -> Self {
        assert!((v as usize) < self.adj.len());
        let mut a = self.clone();
        a.start = v;
        a.end = v;
        a
    }

    /// Quotient by the least congruence making the automaton deterministic
    /// and co-deterministic. Roots map to the images of the old roots and
    /// vertices are renumbered in breadth-first discovery order from the
    /// start root, exploring labels in canonical order, so the result does
    /// not depend on the order of edge identifications.
    pub fn fold(&self) -> InverseAutomaton {
        let n = self.adj.len();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        let mut table: Vec<BTreeMap<Letter, u32>> = vec![BTreeMap::new(); n];
        let mut pending: VecDeque<(u32, u32)> = VecDeque::new();

        fn find(parent: &mut [u32], mut v: u32) -> u32 {
            while parent[v as usize] != v {
                let up = parent[parent[v as usize] as usize];
                parent[v as usize] = up;
                v = up;
            }
            v
        }

        fn attach(
            table: &mut [BTreeMap<Letter, u32>],
            parent: &mut [u32],
            pending: &mut VecDeque<(u32, u32)>,
            root: u32,
            letter: Letter,
            target: u32,
        ) {
            let target = find(parent, target);
            match table[root as usize].entry(letter) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(target);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let cur = find(parent, *e.get());
                    *e.get_mut() = cur;
                    if cur != target {
                        pending.push_back((cur, target));
                    }
                }
            }
        }

        for v in 0..n as u32 {
            for (&l, targets) in &self.adj[v as usize] {
                for &t in targets {
                    attach(&mut table, &mut parent, &mut pending, v, l, t);
                }
            }
        }

        while let Some((a, b)) = pending.pop_front() {
            let a = find(&mut parent, a);
            let b = find(&mut parent, b);
            if a == b {
                continue;
            }
            let (keep, drop) = if table[a as usize].len() > table[b as usize].len()
                || (table[a as usize].len() == table[b as usize].len() && a < b)
            {
                (a, b)
            } else {
                (b, a)
            };
            parent[drop as usize] = keep;
            let dropped = std::mem::take(&mut table[drop as usize]);
            for (l, t) in dropped {
                attach(&mut table, &mut parent, &mut pending, keep, l, t);
            }
        }

        // canonical breadth-first renumbering from the start root
        let root = find(&mut parent, self.start);
        let mut index: Vec<Option<u32>> = vec![None; n];
        let mut order: Vec<u32> = Vec::new();
        index[root as usize] = Some(0);
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let neighbors: Vec<u32> = table[v as usize].values().copied().collect();
            for t in neighbors {
                let t = find(&mut parent, t);
                if index[t as usize].is_none() {
                    index[t as usize] = Some(order.len() as u32);
                    order.push(t);
                }
            }
        }
        debug_assert_eq!(
            order.len(),
            (0..n as u32).filter(|&v| find(&mut parent, v) == v).count(),
            "folded automaton must be connected"
        );

        let mut folded = InverseAutomaton {
            alphabet: self.alphabet.clone(),
            adj: vec![BTreeMap::new(); order.len()],
            start: index[root as usize].unwrap(),
            end: 0,
            folded: true,
        };
        let end_rep = find(&mut parent, self.end);
        folded.end = index[end_rep as usize].unwrap();
        for (new_v, &old_rep) in order.iter().enumerate() {
            let entries: Vec<(Letter, u32)> = table[old_rep as usize]
                .iter()
                .map(|(&l, &t)| (l, t))
                .collect();
            for (l, t) in entries {
                let t = find(&mut parent, t);
                folded.adj[new_v].insert(l, vec![index[t as usize].unwrap()]);
            }
        }
        folded
    }

    /// Label-preserving isomorphism matching start to start and end to
    /// end, decided by a synchronized breadth-first traversal. Both
    /// automata must be folded.
    pub fn birooted_isomorphic(&self, other: &InverseAutomaton) -> bool {
        assert!(
            self.folded && other.folded,
            "isomorphism needs folded automata"
        );
        if self.alphabet != other.alphabet || self.adj.len() != other.adj.len() {
            return false;
        }
        let mut image: Vec<Option<u32>> = vec![None; self.adj.len()];
        image[self.start as usize] = Some(other.start);
        let mut queue = VecDeque::from([self.start]);
        while let Some(v) = queue.pop_front() {
            let w = image[v as usize].unwrap();
            let mv = &self.adj[v as usize];
            let mw = &other.adj[w as usize];
            if mv.len() != mw.len() {
                return false;
            }
            for ((&la, ta), (&lb, tb)) in mv.iter().zip(mw.iter()) {
                if la != lb {
                    return false;
                }
                let (ta, tb) = (ta[0], tb[0]);
                match image[ta as usize] {
                    Some(known) => {
                        if known != tb {
                            return false;
                        }
                    }
                    None => {
                        image[ta as usize] = Some(tb);
                        queue.push_back(ta);
                    }
                }
            }
        }
        if image.iter().any(Option::is_none) {
            return false;
        }
        image[self.end as usize] == Some(other.end)
    }

    /// Graphviz DOT text. The start vertex is drawn as a double circle,
    /// the end vertex with a bold border; cell-letter edges are rendered
    /// undirected.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut s = String::new();
        s.push_str(&format!("digraph {graph_name} {{\n"));
        s.push_str("  rankdir=LR;\n");
        for v in 0..self.adj.len() as u32 {
            let shape = if v == self.start {
                "doublecircle"
            } else {
                "circle"
            };
            if v == self.end {
                s.push_str(&format!("  {v} [shape={shape}, style=bold];\n"));
            } else {
                s.push_str(&format!("  {v} [shape={shape}];\n"));
            }
        }
        for (src, l, dst) in self.positive_edges() {
            let label = self.alphabet.name(l);
            if l.is_p() {
                s.push_str(&format!(
                    "  {src} -> {dst} [label=\"{label}\", dir=none];\n"
                ));
            } else {
                s.push_str(&format!("  {src} -> {dst} [label=\"{label}\"];\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    /// JSON value mirroring the automaton fields.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .positive_edges()
            .into_iter()
            .map(|(src, l, dst)| {
                serde_json::json!({
                    "from": src,
                    "label": self.alphabet.name(l),
                    "to": dst,
                })
            })
            .collect();
        let ps: Vec<serde_json::Value> = self
            .alphabet
            .p_entries()
            .map(|(n, d)| serde_json::json!({"name": n, "dimension": d}))
            .collect();
        serde_json::json!({
            "vertices": (0..self.adj.len() as u32).collect::<Vec<u32>>(),
            "start": self.start,
            "end": self.end,
            "edges": edges,
            "alphabet": {
                "x": self.alphabet.x_names().collect::<Vec<_>>(),
                "p": ps,
            },
        })
    }

    /// Out-degree map of a vertex in canonical label order, for
    /// inspection in tests.
    pub fn out_labels(&self, v: u32) -> Vec<(Letter, Vec<u32>)> {
        self.adj[v as usize]
            .iter()
            .map(|(&l, t)| (l, t.clone()))
            .collect()
    }
}
