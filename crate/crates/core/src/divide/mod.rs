//! Divides as combinatorial maps.
//!
//! A divide is a generic immersed system of intervals and circles in the unit
//! disk. We encode it as a rotation system: every double point is a vertex
//! with four germ slots `0,1,2,3` in counterclockwise order, slots `{0,2}`
//! carry one strand passage and `{1,3}` the other. Interval branches also
//! record the counterclockwise order of their endpoint stubs on the boundary
//! circle. Planarity is a check on this data, not a search.

mod canonical;
mod coloring;
mod faces;
mod parse;

pub use canonical::{canonical_code, SymmetrySet};
pub use coloring::{
    adjacency_blocks, checkerboard, stats, AdjacencyBlocks, DivideStats, RegionColoring, Sign,
};
pub use faces::{interior_regions, is_reducible_interval, validate_planarity, FaceId, FaceSet};
pub use parse::parse_divide;

use crate::error::DivideError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchKind {
    Interval,
    Circle,
}

/// One passage of a strand through a crossing: the crossing id (1-based) and
/// the entry slot. The strand leaves through slot `(slot + 2) % 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    pub crossing: usize,
    pub slot: u8,
}

impl Visit {
    pub fn exit_slot(&self) -> u8 {
        (self.slot + 2) % 4
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub kind: BranchKind,
    pub visits: Vec<Visit>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StubEnd {
    Start,
    End,
}

/// Endpoint stub of an interval branch on the boundary circle.
/// `branch` is the 1-based index into the branch list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stub {
    pub branch: usize,
    pub end: StubEnd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivideMap {
    name: String,
    crossings: usize,
    branches: Vec<Branch>,
    boundary: Vec<Stub>,
}

impl DivideMap {
    /// Build a divide and check the structural invariants: every crossing is
    /// visited exactly twice, once through an even slot and once through an
    /// odd slot, and the boundary stub list matches the interval branches.
    pub fn new(
        name: impl Into<String>,
        crossings: usize,
        branches: Vec<Branch>,
        boundary: Vec<Stub>,
    ) -> Result<Self, DivideError> {
        let map = DivideMap { name: name.into(), crossings, branches, boundary };
        map.check_structure()?;
        Ok(map)
    }

    fn check_structure(&self) -> Result<(), DivideError> {
        let mut even = vec![0usize; self.crossings];
        let mut odd = vec![0usize; self.crossings];
        for b in &self.branches {
            for v in &b.visits {
                if v.crossing == 0 || v.crossing > self.crossings {
                    return Err(DivideError::Slot(format!(
                        "crossing {} out of range 1..={}",
                        v.crossing, self.crossings
                    )));
                }
                if v.slot > 3 {
                    return Err(DivideError::Slot(format!("slot {} out of range 0..=3", v.slot)));
                }
                if v.slot % 2 == 0 {
                    even[v.crossing - 1] += 1;
                } else {
                    odd[v.crossing - 1] += 1;
                }
            }
        }
        for c in 0..self.crossings {
            if even[c] != 1 || odd[c] != 1 {
                return Err(DivideError::Slot(format!(
                    "crossing {} must be visited exactly once through slots {{0,2}} and once through {{1,3}}; got {} and {}",
                    c + 1,
                    even[c],
                    odd[c]
                )));
            }
        }
        // boundary stubs: each interval branch start/end exactly once, circles none
        let mut expected = std::collections::BTreeSet::new();
        for (i, b) in self.branches.iter().enumerate() {
            if b.kind == BranchKind::Interval {
                expected.insert((i + 1, StubEnd::Start));
                expected.insert((i + 1, StubEnd::End));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for s in &self.boundary {
            if s.branch == 0 || s.branch > self.branches.len() {
                return Err(DivideError::Stub(format!("stub refers to unknown branch {}", s.branch)));
            }
            if self.branches[s.branch - 1].kind != BranchKind::Interval {
                return Err(DivideError::Stub(format!(
                    "stub refers to circle branch {}; circles have no endpoints",
                    s.branch
                )));
            }
            if !seen.insert((s.branch, s.end)) {
                return Err(DivideError::Stub(format!(
                    "stub b{}.{} listed twice",
                    s.branch,
                    match s.end {
                        StubEnd::Start => "start",
                        StubEnd::End => "end",
                    }
                )));
            }
        }
        if seen != expected {
            return Err(DivideError::Stub(
                "boundary must list start and end of every interval branch exactly once".into(),
            ));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn crossings(&self) -> usize {
        self.crossings
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn boundary(&self) -> &[Stub] {
        &self.boundary
    }

    pub fn interval_count(&self) -> usize {
        self.branches.iter().filter(|b| b.kind == BranchKind::Interval).count()
    }

    pub fn circle_count(&self) -> usize {
        self.branches.iter().filter(|b| b.kind == BranchKind::Circle).count()
    }

    /// Number of link components: twice the circles plus the intervals.
    pub fn link_components(&self) -> usize {
        2 * self.circle_count() + self.interval_count()
    }

    /// Is the curve itself connected as a 1-complex? Branches are glued at
    /// shared crossings; a branch with no visits is its own component.
    pub fn is_connected(&self) -> bool {
        let n = self.branches.len() + self.crossings;
        if n == 0 {
            return false;
        }
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for (i, b) in self.branches.iter().enumerate() {
            for v in &b.visits {
                let a = find(&mut dsu, i);
                let c = find(&mut dsu, self.branches.len() + v.crossing - 1);
                dsu[a] = c;
            }
        }
        let root = find(&mut dsu, 0);
        (1..n).all(|x| find(&mut dsu, x) == root)
    }

    /// Mirror image: reverses every rotation (slot `s` becomes `(4 - s) % 4`)
    /// and the boundary order.
    pub fn reflect(&self) -> Self {
        let branches = self
            .branches
            .iter()
            .map(|b| Branch {
                kind: b.kind,
                visits: b
                    .visits
                    .iter()
                    .map(|v| Visit { crossing: v.crossing, slot: (4 - v.slot) % 4 })
                    .collect(),
            })
            .collect();
        let mut boundary = self.boundary.clone();
        boundary.reverse();
        DivideMap { name: self.name.clone(), crossings: self.crossings, branches, boundary }
    }

    /// Reverse the traversal of one branch. Entry slots become the former
    /// exit slots; interval endpoints swap.
    pub fn reverse_branch(&self, idx: usize) -> Self {
        let mut branches = self.branches.clone();
        let b = &mut branches[idx];
        b.visits.reverse();
        for v in &mut b.visits {
            v.slot = v.exit_slot();
        }
        let boundary = self
            .boundary
            .iter()
            .map(|s| {
                if s.branch == idx + 1 {
                    Stub {
                        branch: s.branch,
                        end: match s.end {
                            StubEnd::Start => StubEnd::End,
                            StubEnd::End => StubEnd::Start,
                        },
                    }
                } else {
                    *s
                }
            })
            .collect();
        DivideMap { name: self.name.clone(), crossings: self.crossings, branches, boundary }
    }

    /// Rotate the starting visit of a circle branch by `k` positions.
    pub fn rotate_circle(&self, idx: usize, k: usize) -> Self {
        let mut out = self.clone();
        let b = &mut out.branches[idx];
        assert_eq!(b.kind, BranchKind::Circle);
        if !b.visits.is_empty() {
            let len = b.visits.len();
            b.visits.rotate_left(k % len);
        }
        out
    }

    /// Rotate the boundary stub sequence by `k` positions.
    pub fn rotate_boundary(&self, k: usize) -> Self {
        let mut boundary = self.boundary.clone();
        if !boundary.is_empty() {
            boundary.rotate_left(k % boundary.len());
        }
        DivideMap { boundary, ..self.clone() }
    }

    /// Reorder branches; `perm[new] = old`. Stub branch indices are renamed.
    pub fn permute_branches(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.branches.len());
        let branches: Vec<Branch> = perm.iter().map(|&old| self.branches[old].clone()).collect();
        let mut rename = vec![0usize; self.branches.len() + 1];
        for (new, &old) in perm.iter().enumerate() {
            rename[old + 1] = new + 1;
        }
        let boundary = self
            .boundary
            .iter()
            .map(|s| Stub { branch: rename[s.branch], end: s.end })
            .collect();
        DivideMap {
            name: self.name.clone(),
            crossings: self.crossings,
            branches,
            boundary,
        }
    }

    /// Rename crossings; `perm[old-1] = new-1`.
    pub fn relabel_crossings(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.crossings);
        let mut out = self.clone();
        for b in &mut out.branches {
            for v in &mut b.visits {
                v.crossing = perm[v.crossing - 1] + 1;
            }
        }
        out
    }

    /// Rotate the slot labels of one crossing by `r` quarter turns.
    pub fn rotate_slots(&self, crossing: usize, r: u8) -> Self {
        let mut out = self.clone();
        for b in &mut out.branches {
            for v in &mut b.visits {
                if v.crossing == crossing {
                    v.slot = (v.slot + r) % 4;
                }
            }
        }
        out
    }

    /// Serialize back to the DIV file format.
    pub fn to_div(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("divide {}\n", self.name));
        out.push_str(&format!("crossings {}\n", self.crossings));
        for b in &self.branches {
            let kind = match b.kind {
                BranchKind::Interval => "interval",
                BranchKind::Circle => "circle",
            };
            let visits: Vec<String> =
                b.visits.iter().map(|v| format!("{}.{}", v.crossing, v.slot)).collect();
            if visits.is_empty() {
                out.push_str(&format!("branch {kind}:\n"));
            } else {
                out.push_str(&format!("branch {kind}: {}\n", visits.join(" ")));
            }
        }
        if !self.boundary.is_empty() {
            let stubs: Vec<String> = self
                .boundary
                .iter()
                .map(|s| {
                    format!(
                        "b{}.{}",
                        s.branch,
                        match s.end {
                            StubEnd::Start => "start",
                            StubEnd::End => "end",
                        }
                    )
                })
                .collect();
            out.push_str(&format!("boundary: {}\n", stubs.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn structure_rejects_triple_visit() {
        let b = Branch {
            kind: BranchKind::Interval,
            visits: vec![
                Visit { crossing: 1, slot: 0 },
                Visit { crossing: 1, slot: 1 },
                Visit { crossing: 1, slot: 2 },
            ],
        };
        let boundary =
            vec![Stub { branch: 1, end: StubEnd::Start }, Stub { branch: 1, end: StubEnd::End }];
        assert!(matches!(
            DivideMap::new("bad", 1, vec![b], boundary),
            Err(DivideError::Slot(_))
        ));
    }

    #[test]
    fn connectivity() {
        assert!(samples::loop1().is_connected());
        assert!(samples::arc0().is_connected());
        assert!(samples::quad4().is_connected());
        // two disjoint chords share no crossing
        let b = |()| Branch { kind: BranchKind::Interval, visits: vec![] };
        let map = DivideMap::new(
            "chords",
            0,
            vec![b(()), b(())],
            vec![
                Stub { branch: 1, end: StubEnd::Start },
                Stub { branch: 1, end: StubEnd::End },
                Stub { branch: 2, end: StubEnd::Start },
                Stub { branch: 2, end: StubEnd::End },
            ],
        )
        .unwrap();
        assert!(!map.is_connected());
    }

    #[test]
    fn reversal_is_involutive() {
        let m = samples::loop1();
        let r = m.reverse_branch(0).reverse_branch(0);
        assert_eq!(m, r);
    }

    #[test]
    fn reflection_is_involutive() {
        let m = samples::quad4();
        assert_eq!(m, m.reflect().reflect());
    }

    #[test]
    fn div_round_trip() {
        for m in [samples::arc0(), samples::loop1(), samples::quad4(), samples::e8()] {
            let text = m.to_div();
            let back = parse_divide(&text).unwrap();
            assert_eq!(m, back);
        }
    }
}
