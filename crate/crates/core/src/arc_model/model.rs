use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};

use super::cover::Cover;
use super::curve::Curve;
use super::enumerate::simple_curves;
use super::tagged::{PlainArc, Tag, TaggedArc};
use super::ArcError;
use crate::intersection::crossing::{int_a_curves, loop_triangles};
use crate::surface_model::{standard_triangulation, IdealTriangulation, MarkedSurface, PointId};

pub type PlainId = usize;
pub type ArcId = usize;

/// Cluster as positions of arcs in the tagged universe.
pub type Cluster = Vec<ArcId>;

/// Enumerated arcs of a disk-family surface together with their pairwise
/// compatibility.
#[derive(Debug, Clone)]
pub struct ArcFamilyModel {
    frame: IdealTriangulation,
    key: u64,
    max_crossings: usize,
    complete: bool,
    plain: Vec<PlainArc>,
    plain_index: HashMap<Curve, PlainId>,
    int_a: Vec<u32>,
    /// Loop triangle counts, zero rows for non-loops.
    int_b: Vec<u32>,
    /// For loops cutting out a once-punctured monogon: the enclosed arc.
    monogon: Vec<Option<PlainId>>,
    /// Wrapping loop of a puncture-incident arc, keyed by (arc, puncture).
    wraps: HashMap<(PlainId, PointId), PlainId>,
    tagged: Vec<TaggedArc>,
    tagged_index: HashMap<TaggedArc, ArcId>,
    compat: Vec<bool>,
}

pub fn frame_key(frame: &IdealTriangulation) -> u64 {
    let mut h = DefaultHasher::new();
    frame.triangles().hash(&mut h);
    frame.surface().descriptor().boundary.hash(&mut h);
    h.finish()
}

/// Crossing cap that captures every arc of a finite-type disk.
pub fn default_cap(surface: &MarkedSurface) -> usize {
    let n = surface.rank();
    if surface.punctures() <= 1 {
        2 * n + 2
    } else {
        n
    }
}

/// Enumerates the tagged arcs of a disk-family surface relative to its
/// standard strong admissible triangulation.
pub fn enumerate_arcs(surface: &MarkedSurface) -> Result<ArcFamilyModel, ArcError> {
    if !surface.is_disk_family() {
        return Err(ArcError::UnsupportedSurface(surface.to_string()));
    }
    let frame = standard_triangulation(surface)?;
    ArcFamilyModel::new(frame, default_cap(surface))
}

impl ArcFamilyModel {
    pub fn new(frame: IdealTriangulation, max_crossings: usize) -> Result<Self, ArcError> {
        let surface = frame.surface().clone();
        if !surface.is_disk_family() {
            return Err(ArcError::UnsupportedSurface(surface.to_string()));
        }
        let key = frame_key(&frame);
        let curves = simple_curves(&frame, max_crossings);
        let plain: Vec<PlainArc> = curves
            .into_iter()
            .map(|code| PlainArc {
                ends: code.ends(&frame),
                code,
                frame: key,
            })
            .collect();
        let plain_index: HashMap<Curve, PlainId> = plain
            .iter()
            .enumerate()
            .map(|(i, a)| (a.code.clone(), i))
            .collect();
        let np = plain.len();
        let mut int_a = vec![0u32; np * np];
        for i in 0..np {
            for j in i + 1..np {
                let x = int_a_curves(&frame, &plain[i].code, &plain[j].code);
                int_a[i * np + j] = x;
                int_a[j * np + i] = x;
            }
        }
        let mut int_b = vec![0u32; np * np];
        for i in 0..np {
            if !plain[i].is_loop() {
                continue;
            }
            for j in 0..np {
                int_b[i * np + j] = loop_triangles(&frame, &plain[i].code, &plain[j].code);
            }
        }
        let mut wraps = HashMap::new();
        let mut monogon = vec![None; np];
        for (i, a) in plain.iter().enumerate() {
            if a.is_loop() {
                continue;
            }
            for k in 0..2 {
                let p = a.ends[k];
                if !surface.is_puncture(p) {
                    continue;
                }
                let Some(w) = wrap_curve(&frame, &a.code, k == 1) else {
                    continue;
                };
                if let Some(&j) = plain_index.get(&w) {
                    wraps.insert((i, p), j);
                    monogon[j] = Some(i);
                }
            }
        }
        // A wrapping loop crosses twice as many reference arcs as the arc it
        // wraps, so a truncated universe still detects every such loop.
        let mut tagged = Vec::new();
        for (i, a) in plain.iter().enumerate() {
            if monogon[i].is_some() {
                continue;
            }
            let choices = |p: PointId| {
                if surface.is_puncture(p) {
                    vec![Tag::Plain, Tag::Notched]
                } else {
                    vec![Tag::Plain]
                }
            };
            if a.is_loop() {
                for t in choices(a.ends[0]) {
                    tagged.push(TaggedArc {
                        arc: plain[i].clone(),
                        tags: [t, t],
                    });
                }
            } else {
                for t0 in choices(a.ends[0]) {
                    for t1 in choices(a.ends[1]) {
                        tagged.push(TaggedArc {
                            arc: plain[i].clone(),
                            tags: [t0, t1],
                        });
                    }
                }
            }
        }
        let tagged_index: HashMap<TaggedArc, ArcId> = tagged
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let complete = surface.punctures() <= 1;
        let mut model = ArcFamilyModel {
            frame,
            key,
            max_crossings,
            complete,
            plain,
            plain_index,
            int_a,
            int_b,
            monogon,
            wraps,
            tagged,
            tagged_index,
            compat: Vec::new(),
        };
        let nt = model.tagged.len();
        let mut compat = vec![false; nt * nt];
        for i in 0..nt {
            for j in i..nt {
                let c = model.compatible_unchecked(&model.tagged[i], &model.tagged[j]);
                compat[i * nt + j] = c;
                compat[j * nt + i] = c;
            }
        }
        model.compat = compat;
        Ok(model)
    }

    pub fn frame(&self) -> &IdealTriangulation {
        &self.frame
    }

    pub fn surface(&self) -> &MarkedSurface {
        self.frame.surface()
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    pub fn max_crossings(&self) -> usize {
        self.max_crossings
    }

    /// False when the universe was cut off by the crossing cap.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn rank(&self) -> usize {
        self.frame.arc_count()
    }

    pub fn plain_arcs(&self) -> &[PlainArc] {
        &self.plain
    }

    pub fn arcs(&self) -> &[TaggedArc] {
        &self.tagged
    }

    pub fn arc(&self, id: ArcId) -> &TaggedArc {
        &self.tagged[id]
    }

    pub fn arc_id(&self, a: &TaggedArc) -> Option<ArcId> {
        self.tagged_index.get(a).copied()
    }

    pub fn plain_id(&self, a: &PlainArc) -> Option<PlainId> {
        self.plain_index.get(&a.code).copied()
    }

    /// Plain arc for a curve given in any orientation.
    pub fn plain_of_curve(&self, c: &Curve) -> PlainArc {
        let code = c.clone().canonical(&self.frame).0;
        PlainArc {
            ends: code.ends(&self.frame),
            code,
            frame: self.key,
        }
    }

    /// Tagged arc from a curve with tags aligned to the curve's own ends.
    pub fn tagged_of_curve(&self, c: &Curve, tags: [Tag; 2]) -> TaggedArc {
        let (code, rev) = c.clone().canonical(&self.frame);
        let tags = if rev { [tags[1], tags[0]] } else { tags };
        TaggedArc {
            arc: PlainArc {
                ends: code.ends(&self.frame),
                code,
                frame: self.key,
            },
            tags,
        }
    }

    /// Reference arc `e` as a plain arc.
    pub fn frame_arc(&self, e: crate::surface_model::EdgeId) -> PlainArc {
        self.plain_of_curve(&Curve::along_edge(&self.frame, e))
    }

    pub fn is_monogon_loop(&self, a: &PlainArc) -> bool {
        match self.plain_id(a) {
            Some(i) => self.monogon[i].is_some(),
            None => self.monogon_loop_direct(a),
        }
    }

    fn monogon_loop_direct(&self, a: &PlainArc) -> bool {
        self.unwrap_direct(a).is_some()
    }

    // A loop cutting out a once-punctured monogon wraps an arc crossing at
    // most half as many reference arcs, so that arc is enumerated.
    fn unwrap_direct(&self, a: &PlainArc) -> Option<(usize, PointId)> {
        if !a.is_loop() {
            return None;
        }
        self.plain.iter().enumerate().find_map(|(i, b)| {
            if b.is_loop() {
                return None;
            }
            (0..2)
                .find(|&k| {
                    self.surface().is_puncture(b.ends[k])
                        && b.ends[1 - k] == a.ends[0]
                        && wrap_curve(&self.frame, &b.code, k == 1).as_ref() == Some(&a.code)
                })
                .map(|k| (i, b.ends[k]))
        })
    }

    fn check(&self, a: &PlainArc) -> Result<(), ArcError> {
        if a.frame != self.key {
            return Err(ArcError::SurfaceMismatch);
        }
        Ok(())
    }

    /// Crossing number of two plain arcs, from the table when possible.
    pub fn int_a_plain(&self, a: &PlainArc, b: &PlainArc) -> u32 {
        match (self.plain_id(a), self.plain_id(b)) {
            (Some(i), Some(j)) => self.int_a[i * self.plain.len() + j],
            _ => int_a_curves(&self.frame, &a.code, &b.code),
        }
    }

    /// Number of loop triangles counted by `Int^B(a|b)`.
    pub fn int_b_plain(&self, a: &PlainArc, b: &PlainArc) -> u32 {
        if !a.is_loop() {
            return 0;
        }
        match (self.plain_id(a), self.plain_id(b)) {
            (Some(i), Some(j)) => self.int_b[i * self.plain.len() + j],
            _ => loop_triangles(&self.frame, &a.code, &b.code),
        }
    }

    fn compatible_unchecked(&self, a: &TaggedArc, b: &TaggedArc) -> bool {
        if self.int_a_plain(&a.arc, &b.arc) != 0 {
            return false;
        }
        if a.arc == b.arc {
            return a.tags[0] == b.tags[0] || a.tags[1] == b.tags[1];
        }
        for p in a.arc.ends {
            if let (Some(x), Some(y)) = (a.tag_at(p), b.tag_at(p)) {
                if x != y {
                    return false;
                }
            }
        }
        true
    }

    /// Compatibility of tagged arcs: disjoint curves, and tags agreeing at
    /// shared ends unless the curves coincide.
    pub fn compatible(&self, a: &TaggedArc, b: &TaggedArc) -> Result<bool, ArcError> {
        self.check(&a.arc)?;
        self.check(&b.arc)?;
        if let (Some(i), Some(j)) = (self.arc_id(a), self.arc_id(b)) {
            return Ok(self.compat[i * self.tagged.len() + j]);
        }
        Ok(self.compatible_unchecked(a, b))
    }

    pub fn compatible_ids(&self, i: ArcId, j: ArcId) -> bool {
        self.compat[i * self.tagged.len() + j]
    }

    /// The plain and the notched-at-the-puncture versions of a
    /// puncture-incident arc.
    pub fn conjugate_pair_of(&self, a: &TaggedArc) -> Result<(TaggedArc, TaggedArc), ArcError> {
        if a.is_loop() {
            return Err(ArcError::IsLoop);
        }
        let punct: Vec<PointId> = a
            .ends()
            .into_iter()
            .filter(|&p| self.surface().is_puncture(p))
            .collect();
        if punct.len() != 1 {
            return Err(ArcError::NotPunctureIncident);
        }
        let p = punct[0];
        Ok((a.with_tag_at(p, Tag::Plain), a.with_tag_at(p, Tag::Notched)))
    }

    /// Loop based at the other end of a notched-at-`P` arc, enclosing `P`
    /// and the arc.
    pub fn wrapping_loop(&self, notched: &TaggedArc) -> Result<PlainArc, ArcError> {
        self.check(&notched.arc)?;
        if notched.is_loop() {
            return Err(ArcError::NotEligible("loop".into()));
        }
        let k = match notched.tags {
            [Tag::Plain, Tag::Notched] => 1,
            [Tag::Notched, Tag::Plain] => 0,
            _ => return Err(ArcError::NotEligible("need exactly one notched end".into())),
        };
        Ok(self.wrap(&notched.arc, notched.arc.ends[k]))
    }

    /// Wrapping loop of `a` around its endpoint `p`.
    pub fn wrap(&self, a: &PlainArc, p: PointId) -> PlainArc {
        if let Some(i) = self.plain_id(a) {
            if let Some(&j) = self.wraps.get(&(i, p)) {
                return self.plain[j].clone();
            }
        }
        let k = if a.ends[1] == p { 1 } else { 0 };
        let w = wrap_curve(&self.frame, &a.code, k == 1).expect("arc to a puncture wraps");
        self.plain_of_curve(&w)
    }

    /// The arc enclosed by a once-punctured-monogon loop, with its puncture.
    pub fn unwrap_loop(&self, l: &PlainArc) -> Option<(PlainArc, PointId)> {
        let Some(j) = self.plain_id(l) else {
            return self
                .unwrap_direct(l)
                .map(|(i, p)| (self.plain[i].clone(), p));
        };
        let i = self.monogon[j]?;
        let a = &self.plain[i];
        let p = if a.ends[0] == l.ends[0] {
            a.ends[1]
        } else {
            a.ends[0]
        };
        Some((a.clone(), p))
    }

    /// All maximal compatible sets, each sorted, in lexicographic order.
    pub fn geometric_clusters(&self) -> Result<Vec<Cluster>, ArcError> {
        if !self.complete {
            return Err(ArcError::Incomplete);
        }
        let n = self.tagged.len();
        let words = n.div_ceil(64);
        let mut adj = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && self.compat[i * n + j] {
                    adj[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut all = vec![0u64; words];
        for i in 0..n {
            all[i / 64] |= 1 << (i % 64);
        }
        let mut out = Vec::new();
        bron_kerbosch(&adj, &mut Vec::new(), all, vec![0u64; words], &mut out);
        for c in out.iter_mut() {
            c.sort_unstable();
        }
        out.sort();
        Ok(out)
    }

    /// Replaces the arc at `position` by the unique other arc completing the
    /// remaining ones to a maximal compatible set.
    pub fn geometric_flip(&self, cluster: &[ArcId], position: usize) -> Result<Cluster, ArcError> {
        let old = cluster[position];
        let rest: Vec<ArcId> = cluster
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != position)
            .map(|(_, &a)| a)
            .collect();
        let cands: Vec<ArcId> = (0..self.tagged.len())
            .filter(|&x| x != old && !rest.contains(&x))
            .filter(|&x| rest.iter().all(|&r| self.compatible_ids(x, r)))
            .collect();
        match cands.as_slice() {
            [x] => {
                let mut out = cluster.to_vec();
                out[position] = *x;
                Ok(out)
            }
            _ => Err(ArcError::NoExchange(cands.len())),
        }
    }

    /// Punctures as a map to the arcs ending there.
    pub fn arcs_at(&self) -> BTreeMap<PointId, Vec<ArcId>> {
        let mut m: BTreeMap<PointId, Vec<ArcId>> = BTreeMap::new();
        for (i, a) in self.tagged.iter().enumerate() {
            for p in a.ends() {
                let v = m.entry(p).or_default();
                if v.last() != Some(&i) {
                    v.push(i);
                }
            }
        }
        m
    }
}

fn bron_kerbosch(
    adj: &[Vec<u64>],
    r: &mut Vec<usize>,
    p: Vec<u64>,
    x: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    let empty = |v: &[u64]| v.iter().all(|&w| w == 0);
    if empty(&p) && empty(&x) {
        out.push(r.clone());
        return;
    }
    let bits = |v: &[u64]| -> Vec<usize> {
        let mut o = Vec::new();
        for (wi, &w) in v.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                o.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        o
    };
    let union: Vec<u64> = p.iter().zip(&x).map(|(a, b)| a | b).collect();
    let pivot = bits(&union)
        .into_iter()
        .max_by_key(|&u| {
            p.iter()
                .zip(&adj[u])
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
        })
        .expect("non-empty");
    let cands: Vec<usize> = bits(
        &p.iter()
            .zip(&adj[pivot])
            .map(|(a, b)| a & !b)
            .collect::<Vec<_>>(),
    );
    let mut p = p;
    let mut x = x;
    for v in cands {
        r.push(v);
        let np = p.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
        let nx = x.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
}

/// Loop around the puncture at one end of `c` (the far end when
/// `at_end`), based at the other end.
pub fn wrap_curve(frame: &IdealTriangulation, c: &Curve, at_end: bool) -> Option<Curve> {
    let c = if at_end { c.clone() } else { c.reversed() };
    let mut cov = Cover::new(frame);
    let lift = cov.embed_fresh(&c);
    let (_, cn) = c.end_corner();
    let p = frame.corner(c.end_corner().0, cn);
    let deg = frame.degree(p);
    let mut node = *lift.nodes.last().expect("non-empty");
    let mut corner = cn;
    for _ in 0..deg {
        let side = (corner + 2) % 3;
        let (_, j) = frame.glue(cov.node(node).tri, side)?;
        node = cov.cross(node, side)?;
        corner = j;
    }
    debug_assert_eq!(cov.node(node).verts[corner as usize], lift.end);
    let turned = cov.embed(&c, c.len() - 1, node);
    let g = cov.geodesic((lift.nodes[0], lift.start), (turned.nodes[0], turned.start))?;
    Some(g.canonical(frame).0)
}
