//! Strongly connected components of a vertex-filtered graph.

use crate::game::Vertex;

/// Tarjan's algorithm, iterative. Only vertices with `keep(v)` take part and
/// `succ(v)` lists candidate successors, which are filtered by `keep` as
/// well. Returns a component id per vertex (`usize::MAX` for dropped
/// vertices); ids are assigned in reverse topological order.
pub fn components<'a, K, S>(n: usize, keep: K, succ: S) -> Vec<usize>
where
    K: Fn(Vertex) -> bool,
    S: Fn(Vertex) -> &'a [Vertex],
{
    const NONE: usize = usize::MAX;
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut comp = vec![NONE; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    // (vertex, next successor position)
    let mut work: Vec<(Vertex, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if !keep(root) || index[root] != NONE {
            continue;
        }
        work.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = work.last_mut() {
            let out = succ(v);
            if *pos < out.len() {
                let w = out[*pos];
                *pos += 1;
                if !keep(w) {
                    continue;
                }
                if index[w] == NONE {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}
