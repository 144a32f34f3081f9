use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// A shortest-path distance: either an exact finite weight or unreachable.
///
/// `Inf` compares greater than every finite value, so `min`/`max` and sort
/// orders behave as expected.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u64),
    Inf,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn is_inf(self) -> bool {
        matches!(self, Dist::Inf)
    }

    /// The finite value, panicking on `Inf`.
    pub fn unwrap(self) -> u64 {
        match self {
            Dist::Finite(w) => w,
            Dist::Inf => panic!("unwrap on Dist::Inf"),
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Dist::Finite(w) => Some(w),
            Dist::Inf => None,
        }
    }

    /// Subtracts an exact offset, panicking if the distance is smaller.
    /// `Inf` stays `Inf`.
    pub fn saturating_shift_down(self, offset: u64) -> Dist {
        match self {
            Dist::Finite(w) => {
                assert!(w >= offset, "distance {w} below recovery offset {offset}");
                Dist::Finite(w - offset)
            }
            Dist::Inf => Dist::Inf,
        }
    }
}

impl Add for Dist {
    type Output = Dist;

    fn add(self, rhs: Dist) -> Dist {
        match (self, rhs) {
            (Dist::Finite(a), Dist::Finite(b)) => Dist::Finite(a + b),
            _ => Dist::Inf,
        }
    }
}

impl Add<u64> for Dist {
    type Output = Dist;

    fn add(self, rhs: u64) -> Dist {
        self + Dist::Finite(rhs)
    }
}

impl From<u64> for Dist {
    fn from(w: u64) -> Dist {
        Dist::Finite(w)
    }
}

impl fmt::Debug for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(w) => write!(f, "{w}"),
            Dist::Inf => write!(f, "inf"),
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// JSON: finite values as numbers, unreachable as the string "inf".
impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(w) => serializer.serialize_u64(*w),
            Dist::Inf => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dist {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Dist, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Dist;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dist, E> {
                Ok(Dist::Finite(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Dist, E> {
                if v == "inf" {
                    Ok(Dist::Inf)
                } else {
                    Err(E::custom(format!("unexpected distance string {v:?}")))
                }
            }
        }
        deserializer.deserialize_any(V)
    }
}
