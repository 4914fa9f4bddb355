//! Canonical encodings of multigraphs.
//!
//! The encoding is the lexicographically least lower-triangular multiplicity
//! matrix over all vertex orderings that sort vertices by a local signature
//! (degree, loop count, neighbour count). The backtracking search prunes any
//! partial ordering whose rows already exceed the best encoding found.
//! Exponential in the worst case; intended for graphs with a handful of edges.

use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_be_bytes()).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.num_vertices() == h.num_vertices()
        && g.num_edges() == h.num_edges()
        && canonical_form(g) == canonical_form(h)
}

/// The canonical form together with one ordering achieving it
/// (`order[position] = vertex`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.num_vertices();
    let mult = g.multiplicities();
    let signature = |v: usize| -> [u32; 3] {
        let neighbours = (0..n).filter(|&w| w != v && mult[v][w] > 0).count();
        [g.degree(v) as u32, mult[v][v], neighbours as u32]
    };
    let sigs: Vec<[u32; 3]> = (0..n).map(signature).collect();
    let mut sorted = sigs.clone();
    sorted.sort();

    let mut header = vec![n as u32, g.num_edges() as u32];
    header.extend(sorted.iter().flatten());

    let mut search = Search {
        mult: &mult,
        sigs: &sigs,
        sorted: &sorted,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        rows: Vec::with_capacity(n * (n + 1) / 2),
        best: None,
    };
    search.run();
    let (rows, order) = search.best.unwrap_or_default();
    header.extend(rows);
    (CanonicalForm(header), order)
}

struct Search<'a> {
    mult: &'a [Vec<u32>],
    sigs: &'a [[u32; 3]],
    sorted: &'a [[u32; 3]],
    used: Vec<bool>,
    order: Vec<usize>,
    rows: Vec<u32>,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self) {
        let k = self.order.len();
        if k == self.sigs.len() {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.rows < *b,
            };
            if better {
                self.best = Some((self.rows.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..self.sigs.len() {
            if self.used[v] || self.sigs[v] != self.sorted[k] {
                continue;
            }
            let mark = self.rows.len();
            for &p in &self.order {
                self.rows.push(self.mult[v][p]);
            }
            self.rows.push(self.mult[v][v]);
            let prune = match &self.best {
                Some((b, _)) => self.rows.as_slice() > &b[..self.rows.len()],
                None => false,
            };
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.rows.truncate(mark);
        }
    }
}
