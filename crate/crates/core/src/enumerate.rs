//! Exhaustive enumeration of small games up to vertex relabelling.
//!
//! A game over `n` vertices is a label sequence (owner and color per vertex)
//! plus a successor mask per vertex. The canonical representative of an
//! isomorphism class minimises the label sequence first and the mask
//! sequence second, lexicographically. Canonical label sequences are sorted,
//! so only sorted label sequences are generated, and the mask sequence is
//! checked against the permutations that fix the labels.

use crate::game::{Color, ParityGame, Player, Vertex};

/// The games with `vertices` vertices, colors from `colors`, and at most
/// `max_out` distinct successors per vertex (self-loops and sinks included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGameSpace {
    pub vertices: usize,
    pub colors: Vec<Color>,
    pub max_out: usize,
}

impl SmallGameSpace {
    pub fn new(vertices: usize, colors: Vec<Color>, max_out: usize) -> Self {
        assert!(vertices <= 6, "enumeration is meant for tiny games");
        assert!(!colors.is_empty());
        Self {
            vertices,
            colors,
            max_out,
        }
    }

    /// Calls `visit` once per isomorphism class.
    pub fn for_each_canonical(&self, mut visit: impl FnMut(&ParityGame)) {
        let n = self.vertices;
        let masks: Vec<u32> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize <= self.max_out)
            .collect();
        let perms = permutations(n);
        let permuted_mask: Vec<Vec<u32>> = perms
            .iter()
            .map(|p| {
                (0u32..1 << n)
                    .map(|m| (0..n).filter(|&w| m >> w & 1 == 1).fold(0, |acc, w| acc | 1 << p[w]))
                    .collect()
            })
            .collect();

        let label_count = 2 * self.colors.len();
        let mut labels = vec![0usize; n];
        loop {
            let stabilizer: Vec<usize> = (0..perms.len())
                .filter(|&i| (0..n).all(|v| labels[perms[i][v]] == labels[v]))
                .collect();
            self.masks_for(&labels, &masks, &perms, &permuted_mask, &stabilizer, &mut visit);
            // Next non-decreasing label sequence.
            let Some(pos) = (0..n).rev().find(|&i| labels[i] + 1 < label_count) else {
                return;
            };
            let next = labels[pos] + 1;
            for l in &mut labels[pos..] {
                *l = next;
            }
        }
    }

    fn masks_for(
        &self,
        labels: &[usize],
        masks: &[u32],
        perms: &[Vec<usize>],
        permuted_mask: &[Vec<u32>],
        stabilizer: &[usize],
        visit: &mut impl FnMut(&ParityGame),
    ) {
        let n = self.vertices;
        let mut digits = vec![0usize; n];
        let mut current = vec![0u32; n];
        let mut permuted = vec![0u32; n];
        loop {
            for v in 0..n {
                current[v] = masks[digits[v]];
            }
            let canonical = stabilizer.iter().all(|&i| {
                let (p, pm) = (&perms[i], &permuted_mask[i]);
                for v in 0..n {
                    permuted[p[v]] = pm[current[v] as usize];
                }
                permuted >= current
            });
            if canonical {
                visit(&self.build(labels, &current));
            }
            // Odometer, last position fastest.
            let mut pos = n;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < masks.len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    pub fn count_canonical(&self) -> usize {
        let mut count = 0;
        self.for_each_canonical(|_| count += 1);
        count
    }

    fn build(&self, labels: &[usize], masks: &[u32]) -> ParityGame {
        let n = self.vertices;
        let owner = labels
            .iter()
            .map(|l| if l % 2 == 0 { Player::Even } else { Player::Odd })
            .collect();
        let colors = labels.iter().map(|l| self.colors[l / 2]).collect();
        let lists = masks
            .iter()
            .map(|m| (0..n).filter(|&w| m >> w & 1 == 1).collect::<Vec<Vertex>>())
            .collect();
        ParityGame::from_successors(owner, colors, lists).expect("enumerated edges are in range")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q: Vec<usize> = p.iter().map(|&x| if x >= slot { x + 1 } else { x }).collect();
            q.push(slot);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        let mut all = permutations(3);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn single_vertex_classes() {
        // owner x color x {sink, loop}
        assert_eq!(SmallGameSpace::new(1, vec![1, 2], 1).count_canonical(), 8);
    }

    #[test]
    fn two_vertex_classes_by_burnside() {
        // Letters: 2 owners x 1 color x 4 successor sets = 8 per vertex,
        // 64 labelled games. The swap fixes a game iff vertex 1 is vertex 0
        // with successors swapped, giving 8 fixed games: (64 + 8) / 2 = 36.
        assert_eq!(SmallGameSpace::new(2, vec![0], 2).count_canonical(), 36);
    }
}
