//! Recognizing duals of planar chordal graphs without fixing an embedding.

use serde::{Deserialize, Serialize};

use super::{is_chordal, planarity_embed, ChordalityReport, PlanarError, Planarity};
use crate::graph::{format, GraphError, Multigraph};
use crate::matroid::Matroid;

/// One block of the series-reduced graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceReport {
    pub edge_ids: Vec<usize>,
    /// Elements and rank of the simplified cocycle matroid.
    pub elements: usize,
    pub rank: usize,
    pub supersolvable: bool,
    /// Chain of modular flats as edge ids, when supersolvable.
    pub modular_chain: Option<Vec<Vec<usize>>>,
    pub forced_roots: Option<Vec<usize>>,
    pub planar: bool,
    /// Simple dual of an embedding of the piece, in graph6.
    pub dual_graph6: Option<String>,
    pub dual_chordality: Option<ChordalityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualChordalReport {
    pub dual_of_planar_chordal: bool,
    pub planar: bool,
    pub pieces: Vec<PieceReport>,
    /// Every planar piece has a chordal dual exactly when it is supersolvable.
    pub certificate_agrees: bool,
}

/// Series-reduces `g`, splits it into blocks and tests each simplified
/// cocycle matroid for supersolvability. Planar pieces also get an explicit
/// dual whose chordality is recorded as a certificate.
pub fn is_dual_of_planar_chordal(g: &Multigraph) -> Result<DualChordalReport, PlanarError> {
    if let Some(&b) = g.bridges().iter().next() {
        return Err(GraphError::HasBridge(b).into());
    }
    let reduced = g.series_reduce()?;
    let mut pieces = Vec::new();
    for piece in reduced.blocks() {
        let m = Matroid::cocycle(&piece)?.simplify();
        let ss = m.supersolvable()?;
        let (planar, dual_graph6, dual_chordality) = match planarity_embed(&piece) {
            Planarity::Planar(e) => {
                let h = e.dual()?.underlying_simple();
                let chord = is_chordal(&h);
                (true, format::to_graph6(&h).ok(), Some(chord))
            }
            Planarity::NonPlanar(_) => (false, None, None),
        };
        pieces.push(PieceReport {
            edge_ids: piece.edge_ids(),
            elements: m.size(),
            rank: m.rank(),
            supersolvable: ss.supersolvable,
            modular_chain: ss.chain,
            forced_roots: ss.forced_roots,
            planar,
            dual_graph6,
            dual_chordality,
        });
    }
    let certificate_agrees = pieces.iter().all(|p| match &p.dual_chordality {
        Some(c) => c.chordal == p.supersolvable,
        None => !p.supersolvable,
    });
    Ok(DualChordalReport {
        dual_of_planar_chordal: pieces.iter().all(|p| p.supersolvable),
        planar: pieces.iter().all(|p| p.planar),
        pieces,
        certificate_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn k4_is_its_own_chordal_dual() {
        let r = is_dual_of_planar_chordal(&complete(4)).unwrap();
        assert!(r.dual_of_planar_chordal && r.certificate_agrees);
        let h = format::parse_graph6(r.pieces[0].dual_graph6.as_deref().unwrap().as_bytes()).unwrap();
        assert!(h.is_isomorphic(&complete(4)));
    }

    #[test]
    fn negative_examples() {
        for g in [petersen(), figure_one(), cube(), prism(5), wheel(6), theta(4)] {
            let r = is_dual_of_planar_chordal(&g).unwrap();
            assert!(!r.dual_of_planar_chordal);
            assert!(r.certificate_agrees);
        }
        assert!(!is_dual_of_planar_chordal(&petersen()).unwrap().planar);
    }

    #[test]
    fn positive_examples() {
        for g in [prism(3), wheel(3), theta(3), cycle(5), bouquet(2), complete(1)] {
            let r = is_dual_of_planar_chordal(&g).unwrap();
            assert!(r.dual_of_planar_chordal, "{g:?}");
            assert!(r.certificate_agrees);
        }
    }

    #[test]
    fn bridges_are_rejected() {
        assert!(matches!(
            is_dual_of_planar_chordal(&path(3)),
            Err(PlanarError::Graph(GraphError::HasBridge(_)))
        ));
    }
}
