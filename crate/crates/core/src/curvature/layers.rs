use alloc::vec;
use alloc::vec::Vec;

use super::{CurvatureError, Pattern};
use crate::graph::{FaceId, HalfEdgeMap, VertexId};
use crate::tilings::op_p;

/// Faces at least this large force every other vertex to be flat.
pub const BIG_FACE_DEGREE: usize = 43;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerKind {
    Triangle,
    Square,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub kind: LayerKind,
    pub faces: Vec<FaceId>,
}

/// The big face `σ` with the shells of faces peeled off around it.
///
/// Face ids refer to the input map, or to `P` of it when `hexagon_preimage` is set;
/// `P` keeps the ids of unselected faces so `big_face` is valid in both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub big_face: FaceId,
    pub big_face_degree: usize,
    /// `layers[m - 1]` is `L_m`: the uncovered faces sharing an edge with `L_{m-1}`.
    pub layers: Vec<Layer>,
    pub covered_vertices: Vec<VertexId>,
    pub hexagon_preimage: bool,
}

pub fn large_face_structure(map: &HalfEdgeMap) -> Result<Option<LayerDecomposition>, CurvatureError> {
    let big: Vec<FaceId> = (0..map.face_count()).filter(|&f| map.face_degree(f) >= BIG_FACE_DEGREE).collect();
    let sigma = match big.as_slice() {
        [] => return Ok(None),
        [f] => *f,
        _ => return Err(CurvatureError::MultipleBigFaces { faces: big }),
    };
    let k = map.face_degree(sigma);

    let hexagonal_ring = map.face(sigma).iter().any(|&x| {
        map.is_interior(x)
            && Pattern::new(map.incident_faces(x).map(|f| map.face_degree(f)).collect())
                .is_ok_and(|p| p.degrees() == [3, 6, k])
    });
    let expanded;
    let work = if hexagonal_ring {
        let hexagons: Vec<FaceId> = (0..map.face_count()).filter(|&f| map.face_degree(f) == 6).collect();
        expanded = op_p(map, &hexagons).expect("selection holds hexagons only");
        &expanded
    } else {
        map
    };

    let layers = peel(work, sigma)?;
    let mut covered: Vec<VertexId> = work.face(sigma).to_vec();
    for layer in &layers {
        for &f in &layer.faces {
            covered.extend_from_slice(work.face(f));
        }
    }
    covered.sort_unstable();
    covered.dedup();

    Ok(Some(LayerDecomposition {
        big_face: sigma,
        big_face_degree: k,
        layers,
        covered_vertices: covered,
        hexagon_preimage: hexagonal_ring,
    }))
}

fn peel(map: &HalfEdgeMap, sigma: FaceId) -> Result<Vec<Layer>, CurvatureError> {
    let mut covered = vec![false; map.face_count()];
    covered[sigma] = true;
    let mut shell = vec![sigma];
    let mut layers = Vec::new();
    loop {
        let mut next = Vec::new();
        for &f in &shell {
            for h in map.face_half_edges(f) {
                if let Some(t) = map.twin(h) {
                    let g = map.half_edge(t).face;
                    if !covered[g] {
                        covered[g] = true;
                        next.push(g);
                    }
                }
            }
        }
        if next.is_empty() {
            return Ok(layers);
        }
        next.sort_unstable_by_key(|&f| (map.face(f).iter().min().copied(), f));
        let kind = match map.face_degree(next[0]) {
            3 => LayerKind::Triangle,
            4 => LayerKind::Square,
            _ => return Err(CurvatureError::MixedLayer { layer: layers.len() + 1 }),
        };
        let want = if kind == LayerKind::Triangle { 3 } else { 4 };
        if next.iter().any(|&f| map.face_degree(f) != want) {
            return Err(CurvatureError::MixedLayer { layer: layers.len() + 1 });
        }
        layers.push(Layer { kind, faces: next.clone() });
        shell = next;
    }
}
