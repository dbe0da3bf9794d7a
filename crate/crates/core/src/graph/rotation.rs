use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RotationError {
    #[error("rotation map covers {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("vertex {vertex} has {found} ports but degree {expected}")]
    PortCount {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("port {port} of vertex {vertex} points at {target}, which is not a neighbour")]
    NotAnEdge {
        vertex: usize,
        port: usize,
        target: usize,
    },
    #[error("port {port} of vertex {vertex} is not mapped back by its partner")]
    NotInvolution { vertex: usize, port: usize },
    #[error("two ports of vertex {vertex} lead to neighbour {target}")]
    RepeatedNeighbor { vertex: usize, target: usize },
}

/// Port labelling of a graph: `rotate(x, i) = (y, j)` means the edge
/// leaving `x` through port `i` enters `y` through port `j`.
///
/// Ports are 0-based and each vertex uses ports `0..deg(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMap {
    ports: Vec<Vec<(usize, usize)>>,
}

impl RotationMap {
    /// Wraps a raw table; call [`RotationMap::validate`] before trusting it.
    pub fn from_ports(ports: Vec<Vec<(usize, usize)>>) -> Self {
        RotationMap { ports }
    }

    pub fn vertex_count(&self) -> usize {
        self.ports.len()
    }

    pub fn port_count(&self, x: usize) -> usize {
        self.ports[x].len()
    }

    pub fn rotate(&self, x: usize, port: usize) -> (usize, usize) {
        self.ports[x][port]
    }

    pub fn ports(&self, x: usize) -> &[(usize, usize)] {
        &self.ports[x]
    }

    /// Port at `x` whose edge leads to `y`, if any.
    pub fn port_towards(&self, x: usize, y: usize) -> Option<usize> {
        self.ports[x].iter().position(|&(t, _)| t == y)
    }

    /// Checks that the map is an involution whose ports at each vertex are a
    /// bijection onto the incident edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), RotationError> {
        if self.ports.len() != g.vertex_count() {
            return Err(RotationError::VertexCount {
                expected: g.vertex_count(),
                found: self.ports.len(),
            });
        }
        for (x, ports) in self.ports.iter().enumerate() {
            if ports.len() != g.degree(x) {
                return Err(RotationError::PortCount {
                    vertex: x,
                    expected: g.degree(x),
                    found: ports.len(),
                });
            }
            let mut targets: Vec<usize> = Vec::with_capacity(ports.len());
            for (i, &(y, j)) in ports.iter().enumerate() {
                if !g.has_edge(x, y) {
                    return Err(RotationError::NotAnEdge {
                        vertex: x,
                        port: i,
                        target: y,
                    });
                }
                if self.ports[y].get(j) != Some(&(x, i)) {
                    return Err(RotationError::NotInvolution { vertex: x, port: i });
                }
                targets.push(y);
            }
            targets.sort_unstable();
            if let Some(w) = targets.windows(2).find(|w| w[0] == w[1]) {
                return Err(RotationError::RepeatedNeighbor {
                    vertex: x,
                    target: w[0],
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn c4_rotation() -> RotationMap {
        // port 0 = forward, port 1 = backward
        RotationMap::from_ports(
            (0..4)
                .map(|x| vec![((x + 1) % 4, 1), ((x + 3) % 4, 0)])
                .collect(),
        )
    }

    #[test]
    fn valid_map_is_accepted() {
        let rot = c4_rotation();
        assert_eq!(rot.validate(&c4()), Ok(()));
        assert_eq!(rot.port_towards(0, 3), Some(1));
        let g = c4().with_rotation_map(rot).unwrap();
        assert!(g.rotation_map().is_some());
    }

    #[test]
    fn broken_involution_is_rejected() {
        let mut ports: Vec<Vec<(usize, usize)>> = (0..4)
            .map(|x| vec![((x + 1) % 4, 1), ((x + 3) % 4, 0)])
            .collect();
        ports[0][0] = (1, 0);
        assert_eq!(
            RotationMap::from_ports(ports).validate(&c4()),
            Err(RotationError::NotInvolution { vertex: 0, port: 0 })
        );
    }

    #[test]
    fn wrong_shape_is_rejected() {
        let rot = RotationMap::from_ports(vec![vec![]; 3]);
        assert!(matches!(rot.validate(&c4()), Err(RotationError::VertexCount { .. })));
        let mut ports: Vec<Vec<(usize, usize)>> = (0..4)
            .map(|x| vec![((x + 1) % 4, 1), ((x + 3) % 4, 0)])
            .collect();
        ports[2][0] = (0, 0);
        assert!(matches!(
            RotationMap::from_ports(ports).validate(&c4()),
            Err(RotationError::NotAnEdge { vertex: 2, .. })
        ));
    }
}
