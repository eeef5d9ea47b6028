use serde::{Deserialize, Serialize};
use std::fmt;

use super::curve::Curve;
use crate::surface_model::PointId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Plain,
    Notched,
}

/// An arc up to isotopy, identified by its canonical crossing sequence with
/// the model's reference triangulation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlainArc {
    /// Endpoints in the order of `code`.
    pub ends: [PointId; 2],
    pub code: Curve,
    /// Fingerprint of the reference triangulation.
    pub frame: u64,
}

impl PlainArc {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    pub fn has_end(&self, p: PointId) -> bool {
        self.ends.contains(&p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TaggedArc {
    pub arc: PlainArc,
    /// Tags aligned with `arc.ends`.
    pub tags: [Tag; 2],
}

impl TaggedArc {
    pub fn plain(arc: PlainArc) -> Self {
        TaggedArc {
            arc,
            tags: [Tag::Plain; 2],
        }
    }

    pub fn ends(&self) -> [PointId; 2] {
        self.arc.ends
    }

    pub fn is_loop(&self) -> bool {
        self.arc.is_loop()
    }

    /// Tag at endpoint `p`, if `p` is an endpoint.
    pub fn tag_at(&self, p: PointId) -> Option<Tag> {
        (0..2)
            .find(|&i| self.arc.ends[i] == p)
            .map(|i| self.tags[i])
    }

    pub fn is_plain(&self) -> bool {
        self.tags == [Tag::Plain; 2]
    }

    pub fn with_tag_at(&self, p: PointId, tag: Tag) -> TaggedArc {
        let mut out = self.clone();
        for i in 0..2 {
            if out.arc.ends[i] == p {
                out.tags[i] = tag;
            }
        }
        out
    }
}

impl fmt::Display for TaggedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |x: Tag| if x == Tag::Plain { "" } else { "*" };
        write!(
            f,
            "{}{}-{}{} [{} crossings]",
            self.arc.ends[0],
            t(self.tags[0]),
            self.arc.ends[1],
            t(self.tags[1]),
            self.arc.code.crossings()
        )
    }
}

/// Drops tags.
pub fn untag(a: &TaggedArc) -> PlainArc {
    a.arc.clone()
}
