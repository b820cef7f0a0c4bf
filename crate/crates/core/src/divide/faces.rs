//! Capped combinatorial map and face tracing.
//!
//! The disk exterior is collapsed to one auxiliary boundary vertex whose
//! rotation is the reversed boundary stub order. Ports (vertex attachment
//! points in rotation order) double as darts: the dart of port `p` is the
//! directed edge leaving `p`. Faces are the orbits of `p -> rot_prev(edge(p))`,
//! which walks each face with the face on the left.
//!
//! Circle branches with no visits get an artificial 2-valent marker vertex so
//! an embedded circle still has a rotation system.

use crate::error::DivideError;

use super::{BranchKind, DivideMap, StubEnd};

pub type PortId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Crossing with 1-based id.
    Crossing(usize),
    /// Marker on a visit-free circle branch (branch index, 0-based).
    Marker(usize),
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Curve segment between two consecutive visits of one branch
    /// (0-based branch index, 0-based position of the segment).
    Segment { branch: usize, index: usize },
    /// Segment from an interval endpoint to the boundary vertex.
    Stub { branch: usize, end: StubEnd },
    /// Loop edge of a visit-free circle.
    FreeCircle { branch: usize },
}

#[derive(Debug, Clone)]
pub struct CappedMap {
    /// vertex of each port
    port_vertex: Vec<VertexKind>,
    /// rotation successor (counterclockwise next port at the same vertex)
    rot_next: Vec<PortId>,
    rot_prev: Vec<PortId>,
    /// other end of the edge at this port
    opposite: Vec<PortId>,
    edge_kind: Vec<EdgeKind>,
    /// ports of crossing c (1-based): 4*(c-1) + slot
    crossing_count: usize,
}

impl CappedMap {
    pub fn build(divide: &DivideMap) -> Self {
        let crossings = divide.crossings();
        let markers: Vec<usize> = divide
            .branches()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.kind == BranchKind::Circle && b.visits.is_empty())
            .map(|(i, _)| i)
            .collect();
        let stub_count = divide.boundary().len();
        let port_count = 4 * crossings + 2 * markers.len() + stub_count;

        let mut port_vertex = vec![VertexKind::Boundary; port_count];
        let mut rot_next = vec![usize::MAX; port_count];
        let mut rot_prev = vec![usize::MAX; port_count];
        let mut opposite = vec![usize::MAX; port_count];
        let mut edge_kind = vec![EdgeKind::FreeCircle { branch: usize::MAX }; port_count];

        for c in 0..crossings {
            for s in 0..4 {
                let p = 4 * c + s;
                port_vertex[p] = VertexKind::Crossing(c + 1);
                rot_next[p] = 4 * c + (s + 1) % 4;
                rot_prev[p] = 4 * c + (s + 3) % 4;
            }
        }
        let marker_base = 4 * crossings;
        let mut marker_port = std::collections::HashMap::new();
        for (k, &b) in markers.iter().enumerate() {
            let p0 = marker_base + 2 * k;
            marker_port.insert(b, p0);
            for p in [p0, p0 + 1] {
                port_vertex[p] = VertexKind::Marker(b);
            }
            rot_next[p0] = p0 + 1;
            rot_next[p0 + 1] = p0;
            rot_prev[p0] = p0 + 1;
            rot_prev[p0 + 1] = p0;
        }
        // boundary vertex rotation: the reversed stub order. Seen from the
        // capping vertex outside the disk, counterclockwise is the disk's
        // clockwise, so the reversal realizes the capping.
        let stub_base = marker_base + 2 * markers.len();
        let mut stub_port = std::collections::HashMap::new();
        if stub_count > 0 {
            let rev: Vec<_> = divide.boundary().iter().rev().collect();
            for (i, s) in rev.iter().enumerate() {
                let p = stub_base + i;
                stub_port.insert((s.branch, s.end), p);
                rot_next[p] = stub_base + (i + 1) % stub_count;
                rot_prev[p] = stub_base + (i + stub_count - 1) % stub_count;
            }
        }

        let crossing_port = |crossing: usize, slot: u8| 4 * (crossing - 1) + slot as usize;
        let mut connect = |a: PortId, b: PortId, kind: EdgeKind| {
            debug_assert_eq!(opposite[a], usize::MAX, "port used twice");
            debug_assert_eq!(opposite[b], usize::MAX, "port used twice");
            opposite[a] = b;
            opposite[b] = a;
            edge_kind[a] = kind;
            edge_kind[b] = kind;
        };

        for (bi, branch) in divide.branches().iter().enumerate() {
            let vs = &branch.visits;
            match branch.kind {
                BranchKind::Interval => {
                    if vs.is_empty() {
                        connect(
                            stub_port[&(bi + 1, StubEnd::Start)],
                            stub_port[&(bi + 1, StubEnd::End)],
                            EdgeKind::Segment { branch: bi, index: 0 },
                        );
                    } else {
                        connect(
                            stub_port[&(bi + 1, StubEnd::Start)],
                            crossing_port(vs[0].crossing, vs[0].slot),
                            EdgeKind::Stub { branch: bi, end: StubEnd::Start },
                        );
                        for i in 0..vs.len() - 1 {
                            connect(
                                crossing_port(vs[i].crossing, vs[i].exit_slot()),
                                crossing_port(vs[i + 1].crossing, vs[i + 1].slot),
                                EdgeKind::Segment { branch: bi, index: i + 1 },
                            );
                        }
                        let last = vs.len() - 1;
                        connect(
                            crossing_port(vs[last].crossing, vs[last].exit_slot()),
                            stub_port[&(bi + 1, StubEnd::End)],
                            EdgeKind::Stub { branch: bi, end: StubEnd::End },
                        );
                    }
                }
                BranchKind::Circle => {
                    if vs.is_empty() {
                        let p0 = marker_port[&bi];
                        connect(p0, p0 + 1, EdgeKind::FreeCircle { branch: bi });
                    } else {
                        for i in 0..vs.len() {
                            let j = (i + 1) % vs.len();
                            connect(
                                crossing_port(vs[i].crossing, vs[i].exit_slot()),
                                crossing_port(vs[j].crossing, vs[j].slot),
                                EdgeKind::Segment { branch: bi, index: i },
                            );
                        }
                    }
                }
            }
        }

        debug_assert!(opposite.iter().all(|&p| p != usize::MAX));
        CappedMap { port_vertex, rot_next, rot_prev, opposite, edge_kind, crossing_count: crossings }
    }

    pub fn port_count(&self) -> usize {
        self.port_vertex.len()
    }

    pub fn vertex_count(&self) -> usize {
        let markers = self
            .port_vertex
            .iter()
            .filter(|v| matches!(v, VertexKind::Marker(_)))
            .count()
            / 2;
        let has_boundary = self.port_vertex.iter().any(|v| matches!(v, VertexKind::Boundary));
        self.crossing_count + markers + usize::from(has_boundary)
    }

    pub fn edge_count(&self) -> usize {
        self.port_vertex.len() / 2
    }

    pub fn vertex_of(&self, p: PortId) -> VertexKind {
        self.port_vertex[p]
    }

    pub fn opposite(&self, p: PortId) -> PortId {
        self.opposite[p]
    }

    pub fn rot_next(&self, p: PortId) -> PortId {
        self.rot_next[p]
    }

    pub fn edge_kind_at(&self, p: PortId) -> EdgeKind {
        self.edge_kind[p]
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_count
    }

    /// Port of a crossing slot.
    pub fn crossing_port(&self, crossing: usize, slot: u8) -> PortId {
        4 * (crossing - 1) + slot as usize
    }

    /// Next dart of the face walk: cross the edge, back up one step of the
    /// rotation.
    fn face_next(&self, p: PortId) -> PortId {
        self.rot_prev[self.opposite[p]]
    }

    /// Is the whole map one connected component (via edges and rotations)?
    fn is_connected(&self) -> bool {
        let n = self.port_vertex.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(p) = stack.pop() {
            for q in [self.opposite[p], self.rot_next[p]] {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        // the boundary vertex is portless when there are no stubs, so port
        // connectivity is exactly map connectivity
        seen.into_iter().all(|s| s)
    }
}

/// Faces of the capped map, each a cyclic port walk. Interior faces are the
/// divide's regions; the rest touch the disk boundary.
#[derive(Debug, Clone)]
pub struct FaceSet {
    map: CappedMap,
    faces: Vec<Vec<PortId>>,
    face_of_port: Vec<FaceId>,
    boundary_touching: Vec<bool>,
    /// interior faces in canonical order (sorted by smallest port)
    interior: Vec<FaceId>,
}

impl FaceSet {
    pub fn map(&self) -> &CappedMap {
        &self.map
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_ports(&self, f: FaceId) -> &[PortId] {
        &self.faces[f]
    }

    pub fn face_of_port(&self, p: PortId) -> FaceId {
        self.face_of_port[p]
    }

    pub fn is_boundary_touching(&self, f: FaceId) -> bool {
        self.boundary_touching[f]
    }

    /// Interior faces in canonical order.
    pub fn interior(&self) -> &[FaceId] {
        &self.interior
    }

    /// Canonical region index (0-based) of an interior face.
    pub fn region_index(&self, f: FaceId) -> Option<usize> {
        self.interior.iter().position(|&g| g == f)
    }
}

/// Trace the faces of the capped map and check that the divide really lives
/// in the disk: the map must be connected with Euler characteristic 2.
pub fn validate_planarity(divide: &DivideMap) -> Result<FaceSet, DivideError> {
    let map = CappedMap::build(divide);
    let n = map.port_count();

    let mut face_of_port = vec![usize::MAX; n];
    let mut faces: Vec<Vec<PortId>> = Vec::new();
    for start in 0..n {
        if face_of_port[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut p = start;
        loop {
            face_of_port[p] = id;
            walk.push(p);
            p = map.face_next(p);
            if p == start {
                break;
            }
        }
        faces.push(walk);
    }

    let v = map.vertex_count() as i64;
    let e = map.edge_count() as i64;
    let f = faces.len() as i64;
    let chi = v - e + f;
    let connected = map.is_connected();
    // the empty divide is vacuously planar; everything else must cap to a sphere
    if v > 0 && (chi != 2 || !connected) {
        return Err(DivideError::NonPlanar { chi, connected });
    }

    let mut boundary_touching = vec![false; faces.len()];
    let has_stubs = !divide.boundary().is_empty();
    if has_stubs {
        for (id, walk) in faces.iter().enumerate() {
            if walk.iter().any(|&p| matches!(map.vertex_of(p), VertexKind::Boundary)) {
                boundary_touching[id] = true;
            }
        }
    } else if !faces.is_empty() {
        // No stubs: the rotation system alone cannot say which face holds the
        // disk boundary. Pick the face through the canonically smallest port.
        boundary_touching[face_of_port[0]] = true;
    }

    let mut interior: Vec<FaceId> =
        (0..faces.len()).filter(|&f| !boundary_touching[f]).collect();
    interior.sort_by_key(|&f| *faces[f].iter().min().unwrap());

    Ok(FaceSet { map, faces, face_of_port, boundary_touching, interior })
}

/// The interior faces in canonical order, as plain ids.
pub fn interior_regions(fs: &FaceSet) -> Vec<FaceId> {
    fs.interior().to_vec()
}

/// A single-interval divide is reducible when a chord of the disk can cross
/// it in exactly one point with double points on both sides. Combinatorially:
/// some internal segment of the interval has a boundary-touching face on both
/// of its sides.
pub fn is_reducible_interval(divide: &DivideMap, fs: &FaceSet) -> bool {
    assert_eq!(divide.branches().len(), 1);
    assert_eq!(divide.branches()[0].kind, BranchKind::Interval);
    let map = fs.map();
    for p in 0..map.port_count() {
        if p > map.opposite(p) {
            continue; // one port per edge
        }
        if let EdgeKind::Segment { .. } = map.edge_kind_at(p) {
            let q = map.opposite(p);
            let internal = matches!(map.vertex_of(p), VertexKind::Crossing(_))
                && matches!(map.vertex_of(q), VertexKind::Crossing(_));
            if internal
                && fs.is_boundary_touching(fs.face_of_port(p))
                && fs.is_boundary_touching(fs.face_of_port(q))
            {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divide::parse_divide;
    use crate::samples;

    #[test]
    fn loop1_faces() {
        let m = samples::loop1();
        let fs = validate_planarity(&m).unwrap();
        assert_eq!(fs.face_count(), 3);
        assert_eq!(fs.interior().len(), 1);
        // the loop region is the monogon at the corner between slots 1 and 2
        let loop_face = fs.interior()[0];
        assert_eq!(fs.face_ports(loop_face), &[1]);
    }

    #[test]
    fn arc0_faces() {
        let m = samples::arc0();
        let fs = validate_planarity(&m).unwrap();
        assert_eq!(fs.face_count(), 2);
        assert_eq!(fs.interior().len(), 0);
    }

    #[test]
    fn quad4_faces() {
        let m = samples::quad4();
        let fs = validate_planarity(&m).unwrap();
        assert_eq!(fs.face_count(), 6);
        assert_eq!(fs.interior().len(), 5);
    }

    #[test]
    fn free_circle_is_planar() {
        let m = parse_divide("divide ring\ncrossings 0\nbranch circle:\n").unwrap();
        let fs = validate_planarity(&m).unwrap();
        assert_eq!(fs.face_count(), 2);
        assert_eq!(fs.interior().len(), 1);
    }

    #[test]
    fn two_free_circles_are_ambiguous() {
        let m =
            parse_divide("divide rings\ncrossings 0\nbranch circle:\nbranch circle:\n").unwrap();
        assert!(matches!(
            validate_planarity(&m),
            Err(DivideError::NonPlanar { connected: false, .. })
        ));
    }

    #[test]
    fn mirror_loop_is_planar() {
        let m = parse_divide(
            "divide mirror\ncrossings 1\nbranch interval: 1.0 1.3\nboundary: b1.start b1.end\n",
        )
        .unwrap();
        let fs = validate_planarity(&m).unwrap();
        assert_eq!(fs.interior().len(), 1);
    }

    #[test]
    fn loop1_is_irreducible() {
        let m = samples::loop1();
        let fs = validate_planarity(&m).unwrap();
        assert!(!is_reducible_interval(&m, &fs));
    }
}
