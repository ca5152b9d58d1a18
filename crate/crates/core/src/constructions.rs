//! Constructors for the graph families the verification campaigns exercise:
//! cycles, complete graphs, complete-minus-an-edge, joins, k-blow-ups and the
//! `Z_n` family (a clique missing one edge, with a pendant triangle attached
//! by two edges).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OrderTooSmall { order: n, min: 3 });
    }
    let mut g = Graph::new(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for v in 0..n {
        for u in 0..v {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_n` with the edge between vertices 0 and 1 deleted. The missing pair
/// (0, 1) is the distinguished attachment pair used by [`z_graph`].
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, min: 2 });
    }
    let mut g = complete_graph(n)?;
    g.remove_edge(0, 1)?;
    Ok(g)
}

/// Disjoint union of `g` and `h` plus all edges between the two sides.
/// Vertices of `g` keep their indices; vertices of `h` are shifted by `|g|`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order() + h.order();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut out = Graph::new(n)?;
    for v in 0..g.order() {
        for u in 0..v {
            if g.has_edge(u, v) {
                out.add_edge(u, v)?;
            }
        }
    }
    let off = g.order();
    for v in 0..h.order() {
        for u in 0..v {
            if h.has_edge(u, v) {
                out.add_edge(off + u, off + v)?;
            }
        }
    }
    for a in 0..g.order() {
        for b in 0..h.order() {
            out.add_edge(a, off + b)?;
        }
    }
    Ok(out)
}

/// k-blow-up of `base`: every vertex becomes `k` mutually non-adjacent
/// copies, and copies are adjacent exactly when the originals were.
/// Copy `i` of base vertex `u` gets index `u*k + i`.
pub fn blow_up(base: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::MultiplicityOutOfRange { q: k, max: MAX_ORDER });
    }
    let n = base.order() * k;
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut g = Graph::new(n)?;
    for v in 0..base.order() {
        for u in 0..v {
            if base.has_edge(u, v) {
                for i in 0..k {
                    for j in 0..k {
                        g.add_edge(u * k + i, v * k + j)?;
                    }
                }
            }
        }
    }
    Ok(g)
}

/// Blow-up of the 5-cycle: order `5q`, `2q`-regular and triangle-free.
pub fn c5_blowup(q: usize) -> Result<Graph> {
    if !(1..=12).contains(&q) {
        return Err(Error::MultiplicityOutOfRange { q, max: 12 });
    }
    blow_up(&cycle_graph(5)?, q)
}

/// The `Z_n` family: vertices `0..n-3` form `K_{n-3}` minus the edge {0, 1},
/// vertices `n-3, n-2, n-1` form a triangle, and the two parts are connected
/// by the edges {0, n-3} and {1, n-2}.
pub fn z_graph(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(Error::OrderTooSmall { order: n, min: 7 });
    }
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut g = Graph::new(n)?;
    for v in 0..n - 3 {
        for u in 0..v {
            if (u, v) != (0, 1) {
                g.add_edge(u, v)?;
            }
        }
    }
    g.add_edge(n - 3, n - 2)?;
    g.add_edge(n - 2, n - 1)?;
    g.add_edge(n - 1, n - 3)?;
    g.add_edge(0, n - 3)?;
    g.add_edge(1, n - 2)?;
    Ok(g)
}
