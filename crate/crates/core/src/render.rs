//! ASCII arc diagrams: vertices on a baseline, one text row per nesting level.
//!
//! ```text
//! .---------.
//! | .-. .-. |
//! 1 2 3 4 5 6
//! ```
//!
//! Parallel edges are drawn as separate nested arcs.

use crate::opgraph::OuterplanarGraph;

const GAP: usize = 1;

struct Copy {
    from: usize,
    to: usize,
    class: usize,
    k: u32,
    height: usize,
}

pub fn render(g: &OuterplanarGraph) -> String {
    let mut copies: Vec<Copy> = g
        .arcs()
        .iter()
        .enumerate()
        .flat_map(|(class, a)| {
            (0..a.multiplicity).map(move |k| Copy {
                from: a.from,
                to: a.to,
                class,
                k,
                height: 1,
            })
        })
        .collect();

    // shorter spans first, so every nested copy is settled before its parent
    copies.sort_by_key(|c| (c.to - c.from, c.class, c.k));
    for n in 0..copies.len() {
        let (done, rest) = copies.split_at_mut(n);
        let c = &mut rest[0];
        c.height = 1 + done
            .iter()
            .filter(|b| c.from <= b.from && b.to <= c.to)
            .map(|b| b.height)
            .max()
            .unwrap_or(0);
    }

    // edge ends at each vertex, left to right: arcs arriving from the left innermost first,
    // then arcs leaving to the right outermost first
    let n = g.vertex_count();
    let mut ends: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut incoming: Vec<usize> = (0..copies.len()).filter(|&c| copies[c].to == v).collect();
        incoming.sort_by_key(|&c| (std::cmp::Reverse(copies[c].from), copies[c].height));
        let mut outgoing: Vec<usize> = (0..copies.len()).filter(|&c| copies[c].from == v).collect();
        outgoing.sort_by_key(|&c| {
            (
                std::cmp::Reverse(copies[c].to),
                std::cmp::Reverse(copies[c].height),
            )
        });
        ends.push(incoming.into_iter().chain(outgoing).collect());
    }

    let labels: Vec<String> = (0..n).map(|v| g.label(v).to_string()).collect();
    let mut start = vec![0usize; n];
    let mut col = 0;
    for v in 0..n {
        start[v] = col;
        let slots = ends[v].len().max(1);
        let width = if ends[v].is_empty() {
            labels[v].len()
        } else {
            2 * slots - 1
        };
        col += width.max(labels[v].len()) + GAP;
    }
    let width = col.saturating_sub(GAP);

    let mut left = vec![0usize; copies.len()];
    let mut right = vec![0usize; copies.len()];
    for v in 0..n {
        for (slot, &c) in ends[v].iter().enumerate() {
            let x = start[v] + 2 * slot;
            if copies[c].from == v {
                left[c] = x;
            } else {
                right[c] = x;
            }
        }
    }

    let top = copies.iter().map(|c| c.height).max().unwrap_or(0);
    let mut lines = Vec::with_capacity(top + 1);
    for h in (1..=top).rev() {
        let mut row = vec![' '; width];
        for (c, copy) in copies.iter().enumerate() {
            if copy.height == h {
                for cell in &mut row[left[c]..=right[c]] {
                    *cell = '-';
                }
                row[left[c]] = '.';
                row[right[c]] = '.';
            } else if copy.height > h {
                row[left[c]] = '|';
                row[right[c]] = '|';
            }
        }
        lines.push(row.into_iter().collect::<String>().trim_end().to_string());
    }
    let mut base = vec![' '; width];
    for v in 0..n {
        for (i, ch) in labels[v].chars().enumerate() {
            base[start[v] + i] = ch;
        }
    }
    lines.push(base.into_iter().collect::<String>().trim_end().to_string());
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(rooted: bool, n: usize, arcs: &[(usize, usize, u32)]) -> OuterplanarGraph {
        OuterplanarGraph::from_labels(rooted, n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn single_arc() {
        assert_eq!(render(&graph(false, 2, &[(1, 2, 1)])), ".-.\n1 2");
    }

    #[test]
    fn nested_matching() {
        let g = graph(false, 6, &[(1, 2, 1), (4, 5, 1), (3, 6, 1)]);
        assert_eq!(render(&g), "    .-----.\n.-. | .-. |\n1 2 3 4 5 6");
    }

    #[test]
    fn triangle() {
        let g = graph(false, 3, &[(1, 2, 1), (1, 3, 1), (2, 3, 1)]);
        assert_eq!(render(&g), ".---------.\n| .-. .-. |\n1   2   3");
    }

    #[test]
    fn parallel_edges_stack() {
        let g = graph(false, 2, &[(1, 2, 2)]);
        assert_eq!(render(&g), ".-----.\n| .-. |\n1   2");
    }

    #[test]
    fn isolated_vertices() {
        let g = graph(true, 3, &[]);
        assert_eq!(render(&g), "0 1 2");
    }
}
