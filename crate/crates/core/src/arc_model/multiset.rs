use serde::Serialize;

use super::model::ArcFamilyModel;
use super::tagged::{PlainArc, TaggedArc};
use super::ArcError;

/// Finite multiset kept as a sorted list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Multiset<T: Ord>(Vec<T>);

pub type ArcMultiset = Multiset<TaggedArc>;
pub type PlainMultiset = Multiset<PlainArc>;

impl<T: Ord + Clone> Multiset<T> {
    pub fn new(mut items: Vec<T>) -> Self {
        items.sort();
        Multiset(items)
    }

    pub fn empty() -> Self {
        Multiset(Vec::new())
    }

    pub fn items(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, x: &T) -> usize {
        self.0.iter().filter(|y| *y == x).count()
    }

    /// Distinct members with multiplicities.
    pub fn distinct(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize)> = Vec::new();
        for x in &self.0 {
            match out.last_mut() {
                Some((y, k)) if y == x => *k += 1,
                _ => out.push((x.clone(), 1)),
            }
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Self::new(v)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }
}

impl ArcMultiset {
    pub fn is_compatible(&self, model: &ArcFamilyModel) -> Result<bool, ArcError> {
        let d = self.distinct();
        for i in 0..d.len() {
            for j in i..d.len() {
                if !model.compatible(&d[i].0, &d[j].0)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl PlainMultiset {
    pub fn is_compatible(&self, model: &ArcFamilyModel) -> bool {
        let d = self.distinct();
        (0..d.len()).all(|i| (i..d.len()).all(|j| model.int_a_plain(&d[i].0, &d[j].0) == 0))
    }
}
