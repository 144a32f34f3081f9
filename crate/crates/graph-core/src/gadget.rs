use std::collections::BTreeMap;

use crate::Graph;

/// A reduced graph together with the vertex-role map and the exact integer
/// parameters needed to translate the target problem's answer back.
///
/// Role names are strings like `"z_out[0]"`, `"A"`, `"C[2][1]"`, `"p[3]"`,
/// `"v_copy[5]"`; every vertex of the gadget carries exactly one role and
/// the map is injective. Recovery parameters are reproducible from the
/// source instance alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: BTreeMap<String, u32>,
    pub recovery: BTreeMap<String, u64>,
}

impl GadgetGraph {
    /// Looks up a role, panicking on absence: gadget builders declare every
    /// role they emit, so a miss is a construction bug.
    pub fn role(&self, name: &str) -> u32 {
        *self
            .roles
            .get(name)
            .unwrap_or_else(|| panic!("gadget has no role {name:?}"))
    }

    pub fn recovery(&self, name: &str) -> u64 {
        *self
            .recovery
            .get(name)
            .unwrap_or_else(|| panic!("gadget has no recovery parameter {name:?}"))
    }

    /// Checks that roles cover every vertex exactly once.
    pub fn roles_are_total_and_injective(&self) -> bool {
        let n = self.graph.vertex_count() as usize;
        if self.roles.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in self.roles.values() {
            if v as usize >= n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }
}
