use serde::{Deserialize, Serialize};

/// One oracle probe of a binary-search reduction. Single searches install
/// one weight and read one count; simultaneous per-vertex searches install
/// one weight per vertex and read one boolean per vertex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum ProbeRecord {
    Count { probe: u64, answer: u64 },
    Positives { probes: Vec<u64>, answers: Vec<bool> },
}

/// The probe sequence of a binary-search reduction; its length is the
/// oracle-call count and must stay within `ceil(log2(interval)) + 1`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BinarySearchTranscript {
    pub probes: Vec<ProbeRecord>,
}

impl BinarySearchTranscript {
    pub fn calls(&self) -> usize {
        self.probes.len()
    }

    /// The call bound `ceil(log2(search_space)) + 1` for a search over
    /// `search_space` consecutive integer candidates.
    pub fn call_bound(search_space: u64) -> usize {
        let mut bound = 1usize;
        let mut span = 1u64;
        while span < search_space {
            span *= 2;
            bound += 1;
        }
        bound
    }
}
