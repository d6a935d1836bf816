//! Triangulated samples of the unit 2-sphere: an icosahedron, optionally
//! subdivided, with all vertices projected back onto the sphere. Feeding the
//! vertex cloud through the epsilon graph and the Whitney complex recovers
//! the surface triangulation whenever the threshold separates mesh edges
//! from all other pairwise distances.

use std::collections::BTreeMap;

use crate::complex::PointCloud;
use crate::error::Result;

/// A triangle mesh on points of the unit sphere.
#[derive(Debug, Clone)]
pub struct TriangleMesh {
    pub points: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 3]>,
}

impl TriangleMesh {
    /// Undirected edge list derived from the faces.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = std::collections::BTreeSet::new();
        for f in &self.faces {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
                set.insert((a.min(b), a.max(b)));
            }
        }
        set.into_iter().collect()
    }

    pub fn point_cloud(&self) -> Result<PointCloud> {
        PointCloud::new(self.points.iter().map(|p| p.to_vec()).collect())
    }

    /// (largest mesh-edge length, smallest non-edge pairwise distance).
    /// Any threshold strictly between them makes the epsilon graph reproduce
    /// the mesh edges exactly.
    pub fn distance_window(&self) -> (f64, f64) {
        let edges: std::collections::BTreeSet<(usize, usize)> = self.edges().into_iter().collect();
        let mut max_edge = 0.0f64;
        let mut min_non_edge = f64::INFINITY;
        let n = self.points.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let d = dist(&self.points[i], &self.points[j]);
                if edges.contains(&(i, j)) {
                    max_edge = max_edge.max(d);
                } else {
                    min_non_edge = min_non_edge.min(d);
                }
            }
        }
        (max_edge, min_non_edge)
    }
}

fn dist(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

fn normalize(p: [f64; 3]) -> [f64; 3] {
    let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    [p[0] / n, p[1] / n, p[2] / n]
}

/// The regular icosahedron inscribed in the unit sphere.
pub fn icosahedron() -> TriangleMesh {
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let raw: [[f64; 3]; 12] = [
        [-1.0, phi, 0.0],
        [1.0, phi, 0.0],
        [-1.0, -phi, 0.0],
        [1.0, -phi, 0.0],
        [0.0, -1.0, phi],
        [0.0, 1.0, phi],
        [0.0, -1.0, -phi],
        [0.0, 1.0, -phi],
        [phi, 0.0, -1.0],
        [phi, 0.0, 1.0],
        [-phi, 0.0, -1.0],
        [-phi, 0.0, 1.0],
    ];
    let faces = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    TriangleMesh {
        points: raw.into_iter().map(normalize).collect(),
        faces,
    }
}

/// Subdivides every face into four by projected edge midpoints, `levels`
/// times. Level s has 10 * 4^s + 2 vertices.
pub fn icosphere(levels: usize) -> TriangleMesh {
    let mut mesh = icosahedron();
    for _ in 0..levels {
        mesh = subdivide(&mesh);
    }
    mesh
}

fn subdivide(mesh: &TriangleMesh) -> TriangleMesh {
    let mut points = mesh.points.clone();
    let mut midpoints: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut faces = Vec::with_capacity(mesh.faces.len() * 4);
    let mut midpoint = |a: usize, b: usize, points: &mut Vec<[f64; 3]>| -> usize {
        let key = (a.min(b), a.max(b));
        *midpoints.entry(key).or_insert_with(|| {
            let p = normalize([
                (points[a][0] + points[b][0]) / 2.0,
                (points[a][1] + points[b][1]) / 2.0,
                (points[a][2] + points[b][2]) / 2.0,
            ]);
            points.push(p);
            points.len() - 1
        })
    };
    for &[a, b, c] in &mesh.faces {
        let ab = midpoint(a, b, &mut points);
        let bc = midpoint(b, c, &mut points);
        let ca = midpoint(c, a, &mut points);
        faces.push([a, ab, ca]);
        faces.push([b, bc, ab]);
        faces.push([c, ca, bc]);
        faces.push([ab, bc, ca]);
    }
    TriangleMesh { points, faces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::betti;

    #[test]
    fn icosahedron_counts_and_window() {
        let mesh = icosahedron();
        assert_eq!(mesh.points.len(), 12);
        assert_eq!(mesh.faces.len(), 20);
        assert_eq!(mesh.edges().len(), 30);
        let (max_edge, min_non_edge) = mesh.distance_window();
        assert!((max_edge - 1.0514622242382672).abs() < 1e-12);
        assert!((min_non_edge - 1.7013016167040798).abs() < 1e-12);
        // every point on the unit sphere
        for p in &mesh.points {
            let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            assert!((r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn one_subdivision_counts() {
        let mesh = icosphere(1);
        assert_eq!(mesh.points.len(), 42);
        assert_eq!(mesh.faces.len(), 80);
        assert_eq!(mesh.edges().len(), 120);
        let (max_edge, min_non_edge) = mesh.distance_window();
        assert!(max_edge < 0.62 && 0.62 < min_non_edge);
    }

    #[test]
    fn pipeline_recovers_the_sphere() {
        let mesh = icosahedron();
        let pc = mesh.point_cloud().unwrap();
        let g = pc.epsilon_graph(1.1).unwrap();
        assert_eq!(g.edge_count(), 30);
        let k = g.whitney_complex(None);
        assert_eq!(k.f_vector(), vec![12, 30, 20]);
        assert_eq!(k.euler_characteristic(), 2);
        assert_eq!(betti(&k).b, vec![1, 0, 1]);
    }

    #[test]
    fn below_threshold_gives_isolated_points() {
        let mesh = icosahedron();
        let pc = mesh.point_cloud().unwrap();
        let g = pc.epsilon_graph(0.5).unwrap();
        assert_eq!(g.edge_count(), 0);
        let k = g.whitney_complex(None);
        assert_eq!(k.euler_characteristic(), 12);
    }
}
