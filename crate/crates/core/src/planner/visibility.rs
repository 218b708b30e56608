use crate::geom::Point2;
use crate::planner::ConvexPolygon;

/// Depth a segment must reach inside an obstacle before it counts as blocked.
pub const INTERIOR_MARGIN: f64 = 1e-9;

/// Undirected graph over start, goal and obstacle vertices. Node 0 is the
/// start and node 1 the goal.
#[derive(Clone, Debug)]
pub struct VisibilityGraph {
    pub nodes: Vec<Point2>,
    pub adjacency: Vec<Vec<(usize, f64)>>,
}

impl VisibilityGraph {
    pub const START: usize = 0;
    pub const GOAL: usize = 1;

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub fn is_visible(a: Point2, b: Point2, obstacles: &[ConvexPolygon]) -> bool {
    let scale = 1.0 + a.x.abs().max(a.y.abs()).max(b.x.abs()).max(b.y.abs());
    !obstacles
        .iter()
        .any(|o| o.segment_enters_interior(a, b, INTERIOR_MARGIN * scale))
}

/// Builds the graph. Vertices outside `bounds` (`[xmin, ymin, xmax, ymax]`)
/// or strictly inside another obstacle are not nodes.
pub fn build_visibility_graph(
    start: Point2,
    goal: Point2,
    obstacles: &[ConvexPolygon],
    bounds: [f64; 4],
) -> VisibilityGraph {
    let in_bounds =
        |p: Point2| p.x >= bounds[0] && p.x <= bounds[2] && p.y >= bounds[1] && p.y <= bounds[3];
    let mut nodes = vec![start, goal];
    for (k, poly) in obstacles.iter().enumerate() {
        for &v in poly.vertices() {
            let buried = obstacles
                .iter()
                .enumerate()
                .any(|(j, o)| j != k && o.contains_strictly(v, INTERIOR_MARGIN));
            if in_bounds(v) && !buried {
                nodes.push(v);
            }
        }
    }
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if is_visible(nodes[i], nodes[j], obstacles) {
                let w = nodes[i].distance(nodes[j]);
                adjacency[i].push((j, w));
                adjacency[j].push((i, w));
            }
        }
    }
    VisibilityGraph { nodes, adjacency }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn square_blocks_straight_line() {
        let sq = ConvexPolygon::new(vec![p(4., -1.), p(6., -1.), p(6., 1.), p(4., 1.)]).unwrap();
        let g = build_visibility_graph(p(0., 0.), p(10., 0.), &[sq], [-1., -5., 11., 5.]);
        assert_eq!(g.nodes.len(), 6);
        assert!(!g.adjacency[0].iter().any(|&(j, _)| j == 1));
        // adjacent corners see each other along the edge, opposite corners do not
        let see = |a: usize, b: usize| g.adjacency[a].iter().any(|&(j, _)| j == b);
        assert!(see(2, 3));
        assert!(!see(2, 4));
    }

    #[test]
    fn out_of_bounds_vertices_dropped() {
        let sq = ConvexPolygon::new(vec![p(4., -10.), p(6., -10.), p(6., 1.), p(4., 1.)]).unwrap();
        let g = build_visibility_graph(p(0., 0.), p(10., 0.), &[sq], [-1., -5., 11., 5.]);
        assert_eq!(g.nodes.len(), 4);
    }

    #[test]
    fn open_field_connects_start_and_goal() {
        let g = build_visibility_graph(p(0., 0.), p(1., 1.), &[], [0., 0., 1., 1.]);
        assert_eq!(g.edge_count(), 1);
    }
}
