//! Canonical labeling by iterative partition refinement with backtracking
//! individualization, a total-order canonical key, and a brute-force
//! permutation oracle for cross-checking on small orders.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order the canonical labeler accepts.
pub const MAX_CANON_ORDER: usize = 16;

const MAX_PAIRS: usize = MAX_CANON_ORDER * (MAX_CANON_ORDER - 1) / 2;

/// Total-order key identifying an isomorphism class: the order plus the
/// upper-triangle bit pattern of the canonically relabeled graph, packed in
/// graph6 column order (first pair in the most significant position so that
/// integer comparison matches bit-string comparison).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    order: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Reconstructs the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let mut g = Graph::new(n).expect("order <= 16");
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if self.bits >> (MAX_PAIRS - 1 - idx) & 1 == 1 {
                    g.add_edge(u, v).expect("valid pair");
                }
                idx += 1;
            }
        }
        g
    }

    pub fn to_graph6(&self) -> String {
        self.to_graph().to_graph6().expect("order <= 16 encodes")
    }
}

fn key_under_labeling(g: &Graph, pos_to_vertex: &[usize]) -> u128 {
    let n = g.order();
    let mut bits = 0u128;
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(pos_to_vertex[u], pos_to_vertex[v]) {
                bits |= 1u128 << (MAX_PAIRS - 1 - idx);
            }
            idx += 1;
        }
    }
    bits
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<u128>,
    best_labeling: Vec<usize>, // position -> original vertex
    // union-find over vertices, merged on discovered automorphisms; used
    // for orbit pruning at the root branching node only, where the whole
    // automorphism group acts
    orbit: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn find(&mut self, v: usize) -> usize {
        if self.orbit[v] != v {
            self.orbit[v] = self.find(self.orbit[v]);
        }
        self.orbit[v]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.orbit[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Splits every cell by neighbor counts against every cell until stable.
    fn refine(&self, cells: &mut Vec<u64>) {
        loop {
            let mut changed = false;
            'outer: for target_idx in 0..cells.len() {
                if cells[target_idx].count_ones() <= 1 {
                    continue;
                }
                for splitter_idx in 0..cells.len() {
                    let splitter = cells[splitter_idx];
                    let target = cells[target_idx];
                    // group target vertices by count of neighbors in splitter
                    let mut groups: Vec<(u32, u64)> = Vec::new();
                    for v in VertexSet(target).iter() {
                        let c = (self.g.row(v) & splitter).count_ones();
                        match groups.iter_mut().find(|(gc, _)| *gc == c) {
                            Some((_, mask)) => *mask |= 1u64 << v,
                            None => groups.push((c, 1u64 << v)),
                        }
                    }
                    if groups.len() > 1 {
                        groups.sort_by_key(|&(c, _)| c);
                        cells.splice(
                            target_idx..=target_idx,
                            groups.into_iter().map(|(_, mask)| mask),
                        );
                        changed = true;
                        continue 'outer;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn search(&mut self, cells: Vec<u64>, depth: usize) {
        if let Some(cell_idx) = cells.iter().position(|c| c.count_ones() > 1) {
            let members: Vec<usize> = VertexSet(cells[cell_idx]).iter().collect();
            let mut tried: Vec<usize> = Vec::new();
            for v in members {
                if depth == 0 {
                    // at the root the full automorphism group acts, so one
                    // representative per discovered orbit suffices
                    let root = self.find(v);
                    let mut seen = false;
                    for i in 0..tried.len() {
                        let w = tried[i];
                        if self.find(w) == root {
                            seen = true;
                            break;
                        }
                    }
                    if seen {
                        continue;
                    }
                    tried.push(v);
                }
                let mut next = cells.clone();
                let rest = cells[cell_idx] & !(1u64 << v);
                next.splice(cell_idx..=cell_idx, [1u64 << v, rest]);
                self.refine(&mut next);
                self.search(next, depth + 1);
            }
        } else {
            let labeling: Vec<usize> = cells
                .iter()
                .map(|c| c.trailing_zeros() as usize)
                .collect();
            let key = key_under_labeling(self.g, &labeling);
            match self.best {
                None => {
                    self.best = Some(key);
                    self.best_labeling = labeling;
                }
                Some(best) if key < best => {
                    self.best = Some(key);
                    self.best_labeling = labeling;
                }
                Some(best) if key == best => {
                    // two labelings with equal keys compose to an automorphism
                    let mut perm = vec![0usize; self.n];
                    for pos in 0..self.n {
                        perm[self.best_labeling[pos]] = labeling[pos];
                    }
                    for v in 0..self.n {
                        self.union(v, perm[v]);
                    }
                }
                _ => {}
            }
        }
    }
}

/// Canonicalization result: the key plus a labeling that realizes it.
fn canonicalize(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_CANON_ORDER,
        });
    }
    if n == 0 {
        return Ok((CanonicalForm { order: 0, bits: 0 }, Vec::new()));
    }
    let mut searcher = Searcher {
        g,
        n,
        best: None,
        best_labeling: Vec::new(),
        orbit: (0..n).collect(),
    };
    let mut cells = vec![VertexSet::full(n).0];
    searcher.refine(&mut cells);
    searcher.search(cells, 0);
    let bits = searcher.best.expect("at least one leaf");
    // perm maps original vertex -> canonical position
    let mut perm = vec![0usize; n];
    for (pos, &v) in searcher.best_labeling.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { order: n as u8, bits }, perm))
}

/// Canonical key of the isomorphism class of `g` (order <= 16).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonicalize(g).map(|(form, _)| form)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonicalize(g)?;
    Ok(g.relabel(&perm))
}

/// Key and relabeled copy in one pass; the enumerator's workhorse.
pub fn canonical_pair(g: &Graph) -> Result<(CanonicalForm, Graph)> {
    let (form, perm) = canonicalize(g)?;
    Ok((form, g.relabel(&perm)))
}

/// Isomorphism test via canonical key equality.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Reference isomorphism test by trying every vertex permutation. Only
/// sensible for small orders; the cross-check anchor for [`are_isomorphic`].
pub fn are_isomorphic_bruteforce(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut found = false;
    permute(&mut perm, n, &mut |p| {
        if !found && &g.relabel(p) == h {
            found = true;
        }
    });
    found
}

// Heap's algorithm.
fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k {
        permute(items, k - 1, f);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blow_up, c5_blowup, complete_graph, cycle_graph};

    #[test]
    fn self_complementary_five_cycle() {
        let c5 = cycle_graph(5).unwrap();
        let co = c5.complement();
        assert!(are_isomorphic_bruteforce(&c5, &co));
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&co).unwrap()
        );
    }

    #[test]
    fn distinguishes_triangle_from_path() {
        let k3 = complete_graph(3).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&p3).unwrap());
        assert!(!are_isomorphic(&k3, &p3).unwrap());
    }

    #[test]
    fn relabeling_invariance() {
        let g = crate::constructions::z_graph(8).unwrap();
        let form = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..8).collect();
        perm.rotate_left(3);
        perm.swap(0, 5);
        assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), form);
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let g = crate::constructions::z_graph(7).unwrap();
        let c = canonical_graph(&g).unwrap();
        assert!(are_isomorphic_bruteforce(&g, &c));
        assert_eq!(
            canonical_form(&c).unwrap(),
            canonical_form(&g).unwrap()
        );
        // the canonical graph reproduces its own key
        let form = canonical_form(&g).unwrap();
        assert_eq!(form.to_graph(), c);
    }

    #[test]
    fn iso_examples() {
        assert!(are_isomorphic(&c5_blowup(1).unwrap(), &cycle_graph(5).unwrap()).unwrap());
        let mut k4_minus = complete_graph(4).unwrap();
        k4_minus.remove_edge(0, 1).unwrap();
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!are_isomorphic(&k4_minus, &p4).unwrap());
        let b = blow_up(&complete_graph(2).unwrap(), 3).unwrap();
        let k33 = crate::constructions::join(&Graph::new(3).unwrap(), &Graph::new(3).unwrap())
            .unwrap();
        assert!(are_isomorphic(&b, &k33).unwrap());
    }

    #[test]
    fn order_limit() {
        let g = Graph::new(17).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn symmetric_graphs_canonize() {
        // high-automorphism cases exercise the orbit pruning
        for g in [
            Graph::new(8).unwrap(),
            complete_graph(8).unwrap(),
            blow_up(&complete_graph(2).unwrap(), 4).unwrap(),
            c5_blowup(2).unwrap(),
        ] {
            let form = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.reverse();
            assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), form);
        }
    }

    #[test]
    fn bruteforce_agreement_order_up_to_5() {
        // all graphs on 4 vertices, pairwise: canonical equality must match
        // the permutation oracle
        let mut graphs = Vec::new();
        for bits in 0u32..64 {
            let mut g = Graph::new(4).unwrap();
            let mut idx = 0;
            for v in 0..4 {
                for u in 0..v {
                    if bits >> idx & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            graphs.push(g);
        }
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    are_isomorphic(a, b).unwrap(),
                    are_isomorphic_bruteforce(a, b),
                    "disagreement on {a:?} vs {b:?}"
                );
            }
        }
    }
}
