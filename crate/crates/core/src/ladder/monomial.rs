use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The normally ordered basis element `a†^creators a^annihilators`.
///
/// On the graph side this is the one-vertex graph with `creators` white
/// (outgoing) spots and `annihilators` gray (ingoing) spots.
///
/// Ordering is the canonical term order: higher total degree first, then
/// more creators first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalMonomial {
    #[serde(rename = "r")]
    pub creators: u32,
    #[serde(rename = "s")]
    pub annihilators: u32,
}

impl NormalMonomial {
    pub const IDENTITY: NormalMonomial = NormalMonomial {
        creators: 0,
        annihilators: 0,
    };

    pub const fn new(creators: u32, annihilators: u32) -> Self {
        NormalMonomial {
            creators,
            annihilators,
        }
    }

    /// `a`
    pub const fn annihilator() -> Self {
        NormalMonomial::new(0, 1)
    }

    /// `a†`
    pub const fn creator() -> Self {
        NormalMonomial::new(1, 0)
    }

    pub fn degree(&self) -> u64 {
        self.creators as u64 + self.annihilators as u64
    }

    pub fn is_identity(&self) -> bool {
        *self == NormalMonomial::IDENTITY
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then(other.creators.cmp(&self.creators))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Γ^(r,s)`
impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ^({},{})", self.creators, self.annihilators)
    }
}
