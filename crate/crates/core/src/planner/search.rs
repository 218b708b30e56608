use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::planner::VisibilityGraph;

#[derive(Clone, Copy, PartialEq)]
struct Entry {
    f: f64,
    node: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on f, ties broken by node index for determinism
        other.f.total_cmp(&self.f).then(other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A* from start to goal with the straight-line heuristic. Returns the node
/// sequence and its length.
pub fn shortest_path(graph: &VisibilityGraph) -> Option<(Vec<usize>, f64)> {
    let (start, goal) = (VisibilityGraph::START, VisibilityGraph::GOAL);
    let target = graph.nodes[goal];
    let n = graph.nodes.len();
    let mut dist = vec![f64::INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    let mut closed = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[start] = 0.0;
    heap.push(Entry { f: graph.nodes[start].distance(target), node: start });

    while let Some(Entry { node, .. }) = heap.pop() {
        if closed[node] {
            continue;
        }
        if node == goal {
            let mut seq = vec![goal];
            let mut cur = goal;
            while cur != start {
                cur = parent[cur];
                seq.push(cur);
            }
            seq.reverse();
            return Some((seq, dist[goal]));
        }
        closed[node] = true;
        for &(next, w) in &graph.adjacency[node] {
            let g = dist[node] + w;
            if g < dist[next] {
                dist[next] = g;
                parent[next] = node;
                heap.push(Entry { f: g + graph.nodes[next].distance(target), node: next });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use crate::planner::{build_visibility_graph, ConvexPolygon};
    use petgraph::algo::dijkstra;
    use petgraph::graph::UnGraph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dijkstra_length(g: &VisibilityGraph) -> Option<f64> {
        let mut pg = UnGraph::<(), f64>::new_undirected();
        let ids: Vec<_> = (0..g.nodes.len()).map(|_| pg.add_node(())).collect();
        for (i, adj) in g.adjacency.iter().enumerate() {
            for &(j, w) in adj {
                if i < j {
                    pg.add_edge(ids[i], ids[j], w);
                }
            }
        }
        let d = dijkstra(&pg, ids[VisibilityGraph::START], Some(ids[VisibilityGraph::GOAL]), |e| *e.weight());
        d.get(&ids[VisibilityGraph::GOAL]).copied()
    }

    #[test]
    fn detours_around_square() {
        let sq = ConvexPolygon::new(vec![
            Point2::new(4., -1.),
            Point2::new(6., -1.),
            Point2::new(6., 1.),
            Point2::new(4., 1.),
        ])
        .unwrap();
        let g = build_visibility_graph(Point2::new(0., 0.), Point2::new(10., 0.), &[sq], [-1., -5., 11., 5.]);
        let (seq, len) = shortest_path(&g).unwrap();
        assert_eq!(seq.len(), 4);
        let expect = 2.0 * 17f64.sqrt() + 2.0;
        assert!((len - expect).abs() < 1e-12);
    }

    #[test]
    fn walled_off_goal_has_no_path() {
        let wall = ConvexPolygon::new(vec![
            Point2::new(4., -10.),
            Point2::new(6., -10.),
            Point2::new(6., 10.),
            Point2::new(4., 10.),
        ])
        .unwrap();
        let g = build_visibility_graph(Point2::new(0., 0.), Point2::new(10., 0.), &[wall], [0., -5., 10., 5.]);
        assert!(shortest_path(&g).is_none());
        assert!(dijkstra_length(&g).is_none());
    }

    #[test]
    fn matches_dijkstra_on_random_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let obstacles: Vec<ConvexPolygon> = (0..rng.gen_range(1..8))
                .filter_map(|_| {
                    let c = Point2::new(rng.gen_range(1.0..19.0), rng.gen_range(1.0..19.0));
                    let pts: Vec<Point2> = (0..6)
                        .map(|_| c + Point2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                        .collect();
                    ConvexPolygon::hull(&pts).ok()
                })
                .collect();
            let start = Point2::new(rng.gen_range(0.0..20.0), rng.gen_range(0.0..20.0));
            let goal = Point2::new(rng.gen_range(0.0..20.0), rng.gen_range(0.0..20.0));
            let g = build_visibility_graph(start, goal, &obstacles, [0., 0., 20., 20.]);
            let astar = shortest_path(&g).map(|(_, l)| l);
            let oracle = dijkstra_length(&g);
            match (astar, oracle) {
                (Some(a), Some(b)) => assert!((a - b).abs() <= 1e-9 * b.max(1.0), "{a} vs {b}"),
                (None, None) => {}
                other => panic!("disagreement {other:?}"),
            }
        }
    }
}
