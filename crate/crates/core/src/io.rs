//! File formats: JSON schemas for complexes, graphs, point clouds, vertex
//! maps, and configurations, plus debug export of matrices and reports.
//!
//! Readers validate on the way in (strict JSON already rejects NaN and
//! infinity literals; point coordinates are re-checked anyway) and writers
//! emit the same shapes back.

use serde::{Deserialize, Serialize};

use crate::complex::{Graph, PointCloud, SimplicialComplex};
use crate::curvature::{catalog_lookup, FixedPointConfiguration};
use crate::error::{Error, Result};
use crate::lefschetz::{Automorphism, LefschetzReport};

/// `{"facets": [[0,1,2], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexJson {
    pub facets: Vec<Vec<usize>>,
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(&self.facets)
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        Self {
            facets: k.facets_external(),
        }
    }
}

/// `{"n": 6, "edges": [[0,1], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// `{"points": [[x,y,z], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointCloudJson {
    pub points: Vec<Vec<f64>>,
}

impl PointCloudJson {
    pub fn to_point_cloud(&self) -> Result<PointCloud> {
        PointCloud::new(self.points.clone())
    }

    pub fn from_point_cloud(pc: &PointCloud) -> Self {
        Self {
            points: pc.points().to_vec(),
        }
    }
}

/// `{"perm": [img0, img1, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismJson {
    pub perm: Vec<usize>,
}

impl AutomorphismJson {
    pub fn to_automorphism(&self, k: &SimplicialComplex) -> Result<Automorphism> {
        Automorphism::from_vertex_map(k, self.perm.clone())
    }
}

/// `{"ambient_dim": 6, "components": [{"label": "S2"}, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub ambient_dim: usize,
    pub components: Vec<ComponentJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentJson {
    pub label: String,
}

impl ConfigurationJson {
    pub fn to_configuration(&self) -> Result<FixedPointConfiguration> {
        let components = self
            .components
            .iter()
            .map(|c| catalog_lookup(&c.label, self.ambient_dim))
            .collect::<Result<Vec<_>>>()?;
        FixedPointConfiguration::new(self.ambient_dim, components)
    }
}

/// Sparse triplet export: `{"rows": r, "cols": c, "entries": [[i,j,v], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl MatrixJson {
    pub fn from_matrix(m: &nalgebra::DMatrix<i64>) -> Self {
        let mut entries = Vec::new();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if m[(i, j)] != 0 {
                    entries.push((i, j, m[(i, j)]));
                }
            }
        }
        Self {
            rows: m.nrows(),
            cols: m.ncols(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<nalgebra::DMatrix<i64>> {
        let mut m = nalgebra::DMatrix::zeros(self.rows, self.cols);
        for &(i, j, v) in &self.entries {
            if i >= self.rows || j >= self.cols {
                return Err(Error::InvalidInput(format!(
                    "matrix entry ({i}, {j}) outside {}x{}",
                    self.rows, self.cols
                )));
            }
            m[(i, j)] = v;
        }
        Ok(m)
    }
}

/// JSON shape of a Lefschetz verification report. Fixed simplices are listed
/// as `[vertex list, index]` pairs in canonical simplex order, heat values as
/// `[t, value]` pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LefschetzReportJson {
    pub lefschetz_number: i64,
    pub index_sum: i64,
    pub indices: Vec<(Vec<usize>, i64)>,
    pub heat: Vec<(f64, f64)>,
    pub verdict: bool,
}

impl LefschetzReportJson {
    pub fn from_report(report: &LefschetzReport) -> Self {
        Self {
            lefschetz_number: report.lefschetz_number,
            index_sum: report.index_sum,
            indices: report
                .indices
                .iter()
                .map(|(s, i)| (s.vertices().to_vec(), *i))
                .collect(),
            heat: report.heat_values.clone(),
            verdict: report.verdict,
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::octahedron;
    use crate::hodge::boundary_matrix;

    #[test]
    fn complex_json_round_trip() {
        let k = octahedron();
        let json = ComplexJson::from_complex(&k);
        assert_eq!(json.facets.len(), 8);
        let back = json.to_complex().unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn graph_json_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let json = GraphJson::from_graph(&g);
        let back = json.to_graph().unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn strict_json_rejects_non_finite() {
        let err = serde_json::from_str::<PointCloudJson>(r#"{"points": [[NaN, 0.0]]}"#);
        assert!(err.is_err());
        let err = serde_json::from_str::<PointCloudJson>(r#"{"points": [[Infinity]]}"#);
        assert!(err.is_err());
    }

    #[test]
    fn matrix_json_round_trip() {
        let b = boundary_matrix(&octahedron(), 2).unwrap().matrix;
        let json = MatrixJson::from_matrix(&b);
        assert_eq!(json.rows, 12);
        assert_eq!(json.cols, 8);
        // each triangle column has exactly 3 nonzero entries
        assert_eq!(json.entries.len(), 24);
        assert_eq!(json.to_matrix().unwrap(), b);
    }

    #[test]
    fn matrix_json_rejects_out_of_range() {
        let json = MatrixJson {
            rows: 2,
            cols: 2,
            entries: vec![(2, 0, 1)],
        };
        assert!(json.to_matrix().is_err());
    }

    #[test]
    fn configuration_json_reads_labels() {
        let json: ConfigurationJson = serde_json::from_str(
            r#"{"ambient_dim": 6, "components": [{"label":"S2"},{"label":"S2"},{"label":"pt"},{"label":"pt"}]}"#,
        )
        .unwrap();
        let cfg = json.to_configuration().unwrap();
        assert_eq!(cfg.implied_euler(), 6);
        let bad: ConfigurationJson =
            serde_json::from_str(r#"{"ambient_dim": 6, "components": [{"label":"XYZ"}]}"#).unwrap();
        assert!(matches!(
            bad.to_configuration(),
            Err(Error::UnknownManifoldLabel(_))
        ));
    }
}
