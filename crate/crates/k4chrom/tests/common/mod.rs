//! Shared test oracles, written independently of the library's closed
//! forms so the two routes can disagree.

use k4chrom::k4homeo::SimpleGraph;

/// Lengths of every simple cycle of `g`, ascending, by exhaustive path
/// search. Each cycle is enumerated from its smallest vertex and recorded
/// in exactly one direction, so multiplicities are exact.
pub fn all_cycle_lengths(g: &SimpleGraph) -> Vec<u64> {
    let order = g.order();
    let mut adjacency = vec![Vec::new(); order];
    for &(u, v) in g.edges() {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut lengths = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; order];
    for root in 0..order {
        path.push(root);
        on_path[root] = true;
        extend(root, &adjacency, &mut path, &mut on_path, &mut lengths);
        on_path[root] = false;
        path.pop();
    }
    lengths.sort_unstable();
    lengths
}

fn extend(
    root: usize,
    adjacency: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    lengths: &mut Vec<u64>,
) {
    let v = *path.last().unwrap();
    for &w in &adjacency[v] {
        if w == root {
            // A closed walk of length 2 is the same edge twice, not a cycle.
            // Record each genuine cycle in one direction only.
            if path.len() >= 3 && path[1] < *path.last().unwrap() {
                lengths.push(path.len() as u64);
            }
        } else if w > root && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            extend(root, adjacency, path, on_path, lengths);
            on_path[w] = false;
            path.pop();
        }
    }
}
