//! Enumeration of multisets of pairwise compatible items.

/// Non-decreasing index lists of length at most `max_degree` whose members
/// are pairwise compatible (each with itself too), the empty list first.
/// Stops after `limit` lists; the flag reports truncation.
pub fn compatible_multisets(
    n: usize,
    max_degree: u32,
    compat: impl Fn(usize, usize) -> bool,
    limit: Option<usize>,
) -> (Vec<Vec<usize>>, bool) {
    let mut out = vec![Vec::new()];
    let mut cur = Vec::new();
    let limit = limit.unwrap_or(usize::MAX);
    let truncated = grow(
        n,
        max_degree as usize,
        &compat,
        &mut cur,
        0,
        &mut out,
        limit,
    );
    (out, truncated)
}

fn grow(
    n: usize,
    max: usize,
    compat: &impl Fn(usize, usize) -> bool,
    cur: &mut Vec<usize>,
    from: usize,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> bool {
    if cur.len() == max {
        return false;
    }
    for i in from..n {
        if !compat(i, i) || !cur.iter().all(|&j| compat(i, j)) {
            continue;
        }
        if out.len() >= limit {
            return true;
        }
        cur.push(i);
        out.push(cur.clone());
        let stop = grow(n, max, compat, cur, i, out, limit);
        cur.pop();
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_with_everything_compatible() {
        // Multisets of size <= 2 from 3 items: 1 + 3 + 6.
        let (m, t) = compatible_multisets(3, 2, |_, _| true, None);
        assert_eq!(m.len(), 10);
        assert!(!t);
    }

    #[test]
    fn respects_compatibility_and_limit() {
        let (m, _) = compatible_multisets(3, 2, |i, j| i == j || i + j != 1, None);
        assert!(!m.contains(&vec![0, 1]));
        let (m, t) = compatible_multisets(3, 2, |_, _| true, Some(4));
        assert_eq!(m.len(), 4);
        assert!(t);
    }
}
