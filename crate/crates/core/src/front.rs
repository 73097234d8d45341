//! Exact combinatorial front diagrams: closed oriented polylines in the
//! qz-plane (ambient `Plane`) or on the qz-cylinder (ambient `Cylinder`,
//! horizontal coordinate modulo 1), over rational coordinates.
//!
//! Cusps are direction-reversal vertices. Conventions, pinned by the tests:
//!
//! * at a crossing the strand of smaller slope is in front (the slope of a
//!   front is the fibre coordinate, and smaller slope means nearer strand
//!   under the standard resolution);
//! * crossing sign is `sign det(t_over, t_under)` of the traversal tangents;
//! * a cusp is "down" when the traversal enters on the upper branch, "up"
//!   otherwise; `c_plus` counts down cusps, `c_minus` up cusps;
//! * `tb = writhe - #cusps / 2`, `rot = (c_minus - c_plus) / 2`; a positive
//!   stabilization inserts two up cusps, so it maps `(tb, rot)` to
//!   `(tb - 1, rot + 1)`.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pt {
    pub h: Rat,
    pub v: Rat,
}

impl Pt {
    pub fn new(h: Rat, v: Rat) -> Self {
        Pt { h, v }
    }

    pub fn of(hn: i64, hd: i64, vn: i64, vd: i64) -> Self {
        Pt::new(rat(hn, hd), rat(vn, vd))
    }

    fn shifted_h(&self, k: &BigInt) -> Pt {
        Pt::new(&self.h + Rat::from(k.clone()), self.v.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    Plane,
    Cylinder,
}

/// One closed oriented polyline. Vertices are stored in the lift: traversal
/// runs through the list in order, and the closing segment connects the last
/// vertex to the first vertex shifted horizontally by `winding` (so `winding`
/// is the signed number of times the component wraps the cylinder; it must be
/// 0 in the plane).
#[derive(Debug, Clone, PartialEq)]
pub struct FrontComponent {
    pub vertices: Vec<Pt>,
    pub winding: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrontDiagram {
    pub ambient: Ambient,
    pub components: Vec<FrontComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices { component: usize, count: usize },
    NonzeroPlaneWinding { component: usize },
    NonMonotoneSegment { component: usize, segment: usize },
    DegenerateCusp { component: usize, vertex: usize },
    NonGenericIncidence { a: (usize, usize), b: (usize, usize) },
    TriplePoint { a: (usize, usize), b: (usize, usize) },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::TooFewVertices { component, count } => {
                write!(f, "component {component} has only {count} vertices (need >= 3)")
            }
            Violation::NonzeroPlaneWinding { component } => {
                write!(f, "plane component {component} has nonzero winding")
            }
            Violation::NonMonotoneSegment { component, segment } => write!(
                f,
                "segment {segment} of component {component} is vertical (horizontal coordinate not strictly monotone)"
            ),
            Violation::DegenerateCusp { component, vertex } => write!(
                f,
                "cusp at vertex {vertex} of component {component} has equal branch slopes"
            ),
            Violation::NonGenericIncidence { a, b } => write!(
                f,
                "non-generic incidence between segment {:?} and segment {:?} (touching endpoint or overlap)",
                a, b
            ),
            Violation::TriplePoint { a, b } => write!(
                f,
                "triple point: crossings of segment pairs {:?} and {:?} coincide",
                a, b
            ),
        }
    }
}

/// A transverse double point of the front.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossingData {
    pub position: Pt,
    /// (component, segment) of the front strand (smaller slope).
    pub over: (usize, usize),
    pub under: (usize, usize),
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspDir {
    Up,
    Down,
}

#[derive(Debug, Clone)]
pub struct CuspInfo {
    pub vertex: usize,
    pub dir: CuspDir,
}

/// Everything derivable from the diagram in one pass: validation violations,
/// crossings, and per-component cusp lists.
#[derive(Debug, Clone)]
pub struct DiagramAnalysis {
    pub violations: Vec<Violation>,
    pub crossings: Vec<CrossingData>,
    pub cusps: Vec<Vec<CuspInfo>>,
}

#[derive(Debug, Clone)]
struct Segment {
    comp: usize,
    idx: usize,
    a: Pt,
    b: Pt,
}

impl Segment {
    fn dh(&self) -> Rat {
        &self.b.h - &self.a.h
    }

    fn dv(&self) -> Rat {
        &self.b.v - &self.a.v
    }

    fn slope(&self) -> Rat {
        self.dv() / self.dh()
    }

    fn h_lo(&self) -> &Rat {
        if self.a.h <= self.b.h {
            &self.a.h
        } else {
            &self.b.h
        }
    }

    fn h_hi(&self) -> &Rat {
        if self.a.h <= self.b.h {
            &self.b.h
        } else {
            &self.a.h
        }
    }

    /// Vertical coordinate at a given h (requires h within the span).
    fn v_at(&self, h: &Rat) -> Rat {
        &self.a.v + (h - &self.a.h) * self.slope()
    }

    fn shifted(&self, k: &BigInt) -> Segment {
        Segment {
            comp: self.comp,
            idx: self.idx,
            a: self.a.shifted_h(k),
            b: self.b.shifted_h(k),
        }
    }
}

fn cross(ax: &Rat, ay: &Rat, bx: &Rat, by: &Rat) -> Rat {
    ax * by - ay * bx
}

impl FrontComponent {
    pub fn segment_count(&self) -> usize {
        self.vertices.len()
    }

    fn segment(&self, comp: usize, i: usize) -> Segment {
        let n = self.vertices.len();
        let a = self.vertices[i].clone();
        let b = if i + 1 < n {
            self.vertices[i + 1].clone()
        } else {
            Pt::new(
                &self.vertices[0].h + Rat::from(BigInt::from(self.winding)),
                self.vertices[0].v.clone(),
            )
        };
        Segment { comp, idx: i, a, b }
    }

    pub fn reversed(&self) -> FrontComponent {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        FrontComponent {
            vertices,
            winding: -self.winding,
        }
    }

    pub fn translated(&self, dh: &Rat, dv: &Rat) -> FrontComponent {
        FrontComponent {
            vertices: self
                .vertices
                .iter()
                .map(|p| Pt::new(&p.h + dh, &p.v + dv))
                .collect(),
            winding: self.winding,
        }
    }
}

impl FrontDiagram {
    pub fn new(ambient: Ambient, components: Vec<FrontComponent>) -> Self {
        FrontDiagram { ambient, components }
    }

    fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for (ci, c) in self.components.iter().enumerate() {
            for i in 0..c.segment_count() {
                out.push(c.segment(ci, i));
            }
        }
        out
    }

    pub fn translated(&self, dh: &Rat, dv: &Rat) -> FrontDiagram {
        FrontDiagram {
            ambient: self.ambient,
            components: self
                .components
                .iter()
                .map(|c| c.translated(dh, dv))
                .collect(),
        }
    }
}

/// Whether two segments of one component are consecutive in the traversal,
/// given that the second was shifted by `k` deck translations. `n` is the
/// segment count and `w` the component winding.
fn traversal_adjacent(i: usize, j: usize, k: &BigInt, n: usize, w: i64) -> bool {
    if i == j {
        return false;
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    if hi == lo + 1 {
        return k.is_zero();
    }
    if lo == 0 && hi == n - 1 {
        // Closing wrap: segment n-1 ends at vertex 0 shifted by the winding.
        let wanted = BigInt::from(if i < j { -w } else { w });
        return *k == wanted;
    }
    false
}

enum PairKind {
    Nothing,
    Crossing(Pt),
    Touching,
    Overlap,
}

/// Classifies the incidence of two segments (in common lift coordinates).
fn classify_pair(s1: &Segment, s2: &Segment) -> PairKind {
    let d1h = s1.dh();
    let d1v = s1.dv();
    let d2h = s2.dh();
    let d2v = s2.dv();
    let den = cross(&d1h, &d1v, &d2h, &d2v);
    let wh = &s2.a.h - &s1.a.h;
    let wv = &s2.a.v - &s1.a.v;
    if den.is_zero() {
        if cross(&wh, &wv, &d1h, &d1v).is_zero() {
            // Collinear: overlap iff the h-intervals share more than a point.
            let lo = s1.h_lo().max(s2.h_lo());
            let hi = s1.h_hi().min(s2.h_hi());
            if lo < hi {
                return PairKind::Overlap;
            }
            if lo == hi {
                return PairKind::Touching;
            }
        }
        return PairKind::Nothing;
    }
    let t = cross(&wh, &wv, &d2h, &d2v) / &den;
    let u = cross(&wh, &wv, &d1h, &d1v) / &den;
    let zero = Rat::zero();
    let one = Rat::one();
    if t < zero || t > one || u < zero || u > one {
        return PairKind::Nothing;
    }
    if t > zero && t < one && u > zero && u < one {
        let p = Pt::new(&s1.a.h + &t * &d1h, &s1.a.v + &t * &d1v);
        return PairKind::Crossing(p);
    }
    PairKind::Touching
}

fn crossing_record(s1: &Segment, s2: &Segment, pos: Pt, ambient: Ambient) -> CrossingData {
    let (over, under) = if s1.slope() < s2.slope() {
        (s1, s2)
    } else {
        (s2, s1)
    };
    let det = cross(&over.dh(), &over.dv(), &under.dh(), &under.dv());
    let sign = if det.is_positive() { 1 } else { -1 };
    let position = match ambient {
        Ambient::Plane => pos,
        Ambient::Cylinder => {
            let fl = pos.h.floor();
            Pt::new(&pos.h - fl, pos.v)
        }
    };
    CrossingData {
        position,
        over: (over.comp, over.idx),
        under: (under.comp, under.idx),
        sign,
    }
}

/// Deck-translation range of segment `s2` that can meet segment `s1`.
fn shift_range(s1: &Segment, s2: &Segment) -> (BigInt, BigInt) {
    let lo = (s1.h_lo() - s2.h_hi()).ceil().to_integer();
    let hi = (s1.h_hi() - s2.h_lo()).floor().to_integer();
    (lo, hi)
}

fn cusp_scan(d: &FrontDiagram) -> (Vec<Vec<CuspInfo>>, Vec<Violation>) {
    let mut all = Vec::new();
    let mut violations = Vec::new();
    for (ci, c) in d.components.iter().enumerate() {
        let n = c.segment_count();
        let mut cusps = Vec::new();
        if n < 3 {
            all.push(cusps);
            continue;
        }
        for j in 0..n {
            let incoming = c.segment(ci, (j + n - 1) % n);
            let outgoing = c.segment(ci, j);
            let din = incoming.dh();
            let dout = outgoing.dh();
            if din.is_zero() || dout.is_zero() {
                continue; // reported as NonMonotoneSegment elsewhere
            }
            if din.is_positive() == dout.is_positive() {
                continue;
            }
            let s_in = incoming.slope();
            let s_out = outgoing.slope();
            if s_in == s_out {
                violations.push(Violation::DegenerateCusp {
                    component: ci,
                    vertex: j,
                });
                continue;
            }
            // Branches extend right ('<') when the outgoing segment moves
            // right; the incoming branch is upper iff its slope is larger
            // ('<') resp. smaller ('>').
            let incoming_upper = if dout.is_positive() {
                s_in > s_out
            } else {
                s_in < s_out
            };
            let dir = if incoming_upper { CuspDir::Down } else { CuspDir::Up };
            cusps.push(CuspInfo { vertex: j, dir });
        }
        all.push(cusps);
    }
    (all, violations)
}

/// Full validation + crossing extraction in one pass.
pub fn analyze(d: &FrontDiagram) -> DiagramAnalysis {
    let mut violations = Vec::new();
    for (ci, c) in d.components.iter().enumerate() {
        if c.vertices.len() < 3 {
            violations.push(Violation::TooFewVertices {
                component: ci,
                count: c.vertices.len(),
            });
        }
        if d.ambient == Ambient::Plane && c.winding != 0 {
            violations.push(Violation::NonzeroPlaneWinding { component: ci });
        }
        for i in 0..c.segment_count() {
            if c.segment(ci, i).dh().is_zero() {
                violations.push(Violation::NonMonotoneSegment {
                    component: ci,
                    segment: i,
                });
            }
        }
    }
    let (cusps, mut cusp_violations) = cusp_scan(d);
    violations.append(&mut cusp_violations);

    let segs = d.segments();
    let mut crossings: Vec<CrossingData> = Vec::new();
    for i in 0..segs.len() {
        for j in i..segs.len() {
            let s1 = &segs[i];
            let s2 = &segs[j];
            if s1.dh().is_zero() || s2.dh().is_zero() {
                continue;
            }
            let shifts: Vec<BigInt> = match d.ambient {
                Ambient::Plane => {
                    if i == j {
                        continue;
                    }
                    vec![BigInt::zero()]
                }
                Ambient::Cylinder => {
                    let (lo, hi) = shift_range(s1, s2);
                    let mut ks = Vec::new();
                    let mut k = lo;
                    while k <= hi {
                        // For a segment against its own deck translates, k and
                        // -k describe the same incidence; keep k >= 1 only.
                        if i != j || k.is_positive() {
                            ks.push(k.clone());
                        }
                        k += 1;
                    }
                    ks
                }
            };
            for k in shifts {
                let s2k = s2.shifted(&k);
                let same = s1.comp == s2k.comp;
                let adjacent = same
                    && traversal_adjacent(
                        s1.idx,
                        s2k.idx,
                        &k,
                        d.components[s1.comp].segment_count(),
                        d.components[s1.comp].winding,
                    );
                match classify_pair(s1, &s2k) {
                    PairKind::Nothing => {}
                    PairKind::Crossing(p) => {
                        crossings.push(crossing_record(s1, &s2k, p, d.ambient));
                    }
                    PairKind::Touching => {
                        if !adjacent {
                            violations.push(Violation::NonGenericIncidence {
                                a: (s1.comp, s1.idx),
                                b: (s2k.comp, s2k.idx),
                            });
                        }
                    }
                    PairKind::Overlap => {
                        if !adjacent {
                            violations.push(Violation::NonGenericIncidence {
                                a: (s1.comp, s1.idx),
                                b: (s2k.comp, s2k.idx),
                            });
                        }
                        // Adjacent overlap shows up as a degenerate cusp.
                    }
                }
            }
        }
    }
    crossings.sort_by(|x, y| {
        (&x.position.h, &x.position.v, x.over, x.under).cmp(&(
            &y.position.h,
            &y.position.v,
            y.over,
            y.under,
        ))
    });
    for w in crossings.windows(2) {
        if w[0].position == w[1].position {
            violations.push(Violation::TriplePoint {
                a: (w[0].over.0, w[0].over.1),
                b: (w[1].over.0, w[1].over.1),
            });
        }
    }
    DiagramAnalysis {
        violations,
        crossings,
        cusps,
    }
}

/// Violations of the diagram invariants; empty iff the diagram is valid.
pub fn validate(d: &FrontDiagram) -> Vec<Violation> {
    analyze(d).violations
}

fn checked_analysis(d: &FrontDiagram) -> Result<DiagramAnalysis> {
    let a = analyze(d);
    if a.violations.is_empty() {
        Ok(a)
    } else {
        Err(Error::InvalidDiagram(a.violations))
    }
}

/// Transverse double points, deterministically ordered by position.
pub fn crossings(d: &FrontDiagram) -> Result<Vec<CrossingData>> {
    Ok(checked_analysis(d)?.crossings)
}

pub(crate) fn invariants_from(a: &DiagramAnalysis, c: usize) -> (i64, i64) {
    let writhe: i64 = a
        .crossings
        .iter()
        .filter(|x| x.over.0 == c && x.under.0 == c)
        .map(|x| x.sign as i64)
        .sum();
    let ups = a.cusps[c].iter().filter(|k| k.dir == CuspDir::Up).count() as i64;
    let downs = a.cusps[c].iter().filter(|k| k.dir == CuspDir::Down).count() as i64;
    let tb = writhe - (ups + downs) / 2;
    let rot = (ups - downs) / 2;
    (tb, rot)
}

/// `(tb, rot)` of one component, from writhe and signed cusp counts. On the
/// cylinder these are the jet-space invariants directly.
pub fn classical_invariants(d: &FrontDiagram, c: usize) -> Result<(i64, i64)> {
    if c >= d.components.len() {
        return Err(Error::InvalidInput(format!("no component {c}")));
    }
    let a = checked_analysis(d)?;
    Ok(invariants_from(&a, c))
}

pub(crate) fn linking_from(a: &DiagramAnalysis, c1: usize, c2: usize) -> i64 {
    let total: i64 = a
        .crossings
        .iter()
        .filter(|x| {
            (x.over.0 == c1 && x.under.0 == c2) || (x.over.0 == c2 && x.under.0 == c1)
        })
        .map(|x| x.sign as i64)
        .sum();
    debug_assert!(total % 2 == 0, "closed fronts cross evenly");
    total / 2
}

/// Linking number of two components: half the signed inter-component
/// crossing count.
pub fn linking_number(d: &FrontDiagram, c1: usize, c2: usize) -> Result<i64> {
    if c1 == c2 {
        return Err(Error::InvalidInput("linking_number needs c1 != c2".into()));
    }
    if c1 >= d.components.len() || c2 >= d.components.len() {
        return Err(Error::InvalidInput("component index out of range".into()));
    }
    let a = checked_analysis(d)?;
    Ok(linking_from(&a, c1, c2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabSign {
    Positive,
    Negative,
}

/// Horizontal interval on a segment that is free of incidences, chosen as
/// the middle half of the widest crossing-free gap.
fn free_interval(d: &FrontDiagram, seg: &Segment) -> Option<(Rat, Rat)> {
    // Collect h-coordinates of every contact of `seg` with other segments.
    let mut blocked: Vec<Rat> = Vec::new();
    for other in d.segments() {
        if other.dh().is_zero() {
            return None;
        }
        let shifts: Vec<BigInt> = match d.ambient {
            Ambient::Plane => vec![BigInt::zero()],
            Ambient::Cylinder => {
                let (lo, hi) = shift_range(seg, &other);
                let mut ks = Vec::new();
                let mut k = lo;
                while k <= hi {
                    ks.push(k.clone());
                    k += 1;
                }
                ks
            }
        };
        for k in shifts {
            if other.comp == seg.comp && other.idx == seg.idx && k.is_zero() {
                continue;
            }
            let o = other.shifted(&k);
            match classify_pair(seg, &o) {
                PairKind::Crossing(p) => blocked.push(p.h),
                PairKind::Touching | PairKind::Overlap => {
                    // Endpoint contacts of adjacent segments sit at the
                    // segment boundary; treat as blocking the boundary only.
                }
                PairKind::Nothing => {}
            }
        }
    }
    let lo = seg.h_lo().clone();
    let hi = seg.h_hi().clone();
    blocked.push(lo.clone());
    blocked.push(hi.clone());
    blocked.sort();
    blocked.dedup();
    let mut best: Option<(Rat, Rat)> = None;
    for w in blocked.windows(2) {
        let width = &w[1] - &w[0];
        if best
            .as_ref()
            .map(|(a, b)| &width > &(b - a))
            .unwrap_or(true)
        {
            best = Some((w[0].clone(), w[1].clone()));
        }
    }
    let (g0, g1) = best?;
    let width = &g1 - &g0;
    if width.is_zero() {
        return None;
    }
    let quarter = width / rat(4, 1);
    Some((&g0 + &quarter, &g1 - &quarter))
}

/// Smallest vertical distance from `seg` (over `[lo, hi]`) to other segments
/// strictly on the given side (+1 above, -1 below). `None` when unobstructed.
fn side_clearance(
    d: &FrontDiagram,
    seg: &Segment,
    lo: &Rat,
    hi: &Rat,
    side: i8,
) -> Option<Rat> {
    let mut best: Option<Rat> = None;
    for other in d.segments() {
        let shifts: Vec<BigInt> = match d.ambient {
            Ambient::Plane => vec![BigInt::zero()],
            Ambient::Cylinder => {
                let (a, b) = shift_range(seg, &other);
                let mut ks = Vec::new();
                let mut k = a;
                while k <= b {
                    ks.push(k.clone());
                    k += 1;
                }
                ks
            }
        };
        for k in shifts {
            if other.comp == seg.comp && other.idx == seg.idx && k.is_zero() {
                continue;
            }
            let o = other.shifted(&k);
            let jlo = lo.max(o.h_lo()).clone();
            let jhi = hi.min(o.h_hi()).clone();
            if jlo >= jhi {
                continue;
            }
            for h in [&jlo, &jhi] {
                let dv = o.v_at(h) - seg.v_at(h);
                let dist = if side > 0 { dv.clone() } else { -dv.clone() };
                if dist.is_positive() {
                    if best.as_ref().map(|b| &dist < b).unwrap_or(true) {
                        best = Some(dist);
                    }
                }
            }
        }
    }
    best
}

/// Inserts a stabilization zigzag into component `c`: two new cusps, both up
/// for `Positive` (rot + 1) and both down for `Negative` (rot - 1); tb drops
/// by 1, the link type and all linking numbers are unchanged.
pub fn stabilize(d: &FrontDiagram, c: usize, sign: StabSign) -> Result<FrontDiagram> {
    if c >= d.components.len() {
        return Err(Error::InvalidInput(format!("no component {c}")));
    }
    checked_analysis(d)?;
    let comp = &d.components[c];
    let mut order: Vec<usize> = (0..comp.segment_count()).collect();
    order.sort_by(|&a, &b| {
        let ea = comp.segment(c, a).dh().abs();
        let eb = comp.segment(c, b).dh().abs();
        eb.cmp(&ea).then(a.cmp(&b))
    });
    let side: i8 = match sign {
        StabSign::Positive => 1,
        StabSign::Negative => -1,
    };
    for si in order {
        let seg = comp.segment(c, si);
        let Some((ilo, ihi)) = free_interval(d, &seg) else {
            continue;
        };
        let width = &ihi - &ilo;
        if !width.is_positive() {
            continue;
        }
        let clearance = side_clearance(d, &seg, &ilo, &ihi, side)
            .unwrap_or_else(|| Rat::one());
        let delta = clearance / rat(4, 1);
        let u = &width / rat(4, 1);
        // Entry-side boundary first, in traversal order.
        let (e0, dir) = if seg.dh().is_positive() {
            (ilo.clone(), Rat::one())
        } else {
            (ihi.clone(), -Rat::one())
        };
        let at = |steps: i64| -> Rat { &e0 + &dir * &u * rat(steps, 1) };
        let sd = if side > 0 { delta.clone() } else { -delta.clone() };
        let t1 = at(0);
        let t2 = at(1);
        let t3 = at(2);
        let t4 = at(4);
        let new_pts = vec![
            Pt::new(t1.clone(), seg.v_at(&t1)),
            Pt::new(t3.clone(), seg.v_at(&t3) + &sd),
            Pt::new(t2.clone(), seg.v_at(&t2) + &sd * rat(2, 1)),
            Pt::new(t4.clone(), seg.v_at(&t4)),
        ];
        let mut out = d.clone();
        let verts = &mut out.components[c].vertices;
        let insert_at = si + 1; // works for the closing segment too (appends)
        for (off, p) in new_pts.into_iter().enumerate() {
            verts.insert(insert_at + off, p);
        }
        return Ok(out);
    }
    Err(Error::InvalidDiagram(vec![]))
}

// ---------------------------------------------------------------------------
// front-v1 JSON

#[derive(Serialize, Deserialize)]
struct FrontV1 {
    ambient: String,
    components: Vec<CompV1>,
}

#[derive(Serialize, Deserialize)]
struct CompV1 {
    winding: i64,
    vertices: Vec<[i64; 4]>,
}

fn rat_parts(r: &Rat) -> Result<(i64, i64)> {
    let n = i64::try_from(r.numer().clone())
        .map_err(|_| Error::InvalidInput("coordinate numerator exceeds i64".into()))?;
    let d = i64::try_from(r.denom().clone())
        .map_err(|_| Error::InvalidInput("coordinate denominator exceeds i64".into()))?;
    Ok((n, d))
}

impl FrontDiagram {
    /// Serializes to the front-v1 JSON format:
    /// `{"ambient": "plane"|"cylinder", "components":
    ///   [{"winding": n, "vertices": [[h_num, h_den, v_num, v_den], ...]}]}`.
    pub fn to_front_v1(&self) -> Result<serde_json::Value> {
        let mut comps = Vec::new();
        for c in &self.components {
            let mut vs = Vec::new();
            for p in &c.vertices {
                let (hn, hd) = rat_parts(&p.h)?;
                let (vn, vd) = rat_parts(&p.v)?;
                vs.push([hn, hd, vn, vd]);
            }
            comps.push(CompV1 {
                winding: c.winding,
                vertices: vs,
            });
        }
        let v1 = FrontV1 {
            ambient: match self.ambient {
                Ambient::Plane => "plane".into(),
                Ambient::Cylinder => "cylinder".into(),
            },
            components: comps,
        };
        Ok(serde_json::to_value(v1).expect("front-v1 serialization cannot fail"))
    }

    pub fn from_front_v1(value: &serde_json::Value) -> Result<FrontDiagram> {
        let v1: FrontV1 = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("front-v1 parse error: {e}")))?;
        let ambient = match v1.ambient.as_str() {
            "plane" => Ambient::Plane,
            "cylinder" => Ambient::Cylinder,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown ambient {other:?} (want \"plane\" or \"cylinder\")"
                )))
            }
        };
        let mut components = Vec::new();
        for c in v1.components {
            let mut vertices = Vec::new();
            for [hn, hd, vn, vd] in c.vertices {
                if hd == 0 || vd == 0 {
                    return Err(Error::InvalidInput("zero denominator in vertex".into()));
                }
                vertices.push(Pt::of(hn, hd, vn, vd));
            }
            components.push(FrontComponent {
                vertices,
                winding: c.winding,
            });
        }
        Ok(FrontDiagram {
            ambient,
            components,
        })
    }
}

// ---------------------------------------------------------------------------
// Fixed templates

/// The standard two-cusp unknot front (a lens), tb = -1, rot = 0, scaled to
/// width `w >= 4`.
pub fn standard_unknot_sized(w: i64) -> FrontDiagram {
    let w = w.max(4);
    FrontDiagram::new(
        Ambient::Plane,
        vec![FrontComponent {
            vertices: vec![
                Pt::of(0, 1, 0, 1),
                Pt::of(w / 2, 1, w / 4, 1),
                Pt::of(w, 1, 0, 1),
                Pt::of(w / 2, 1, -w / 4, 1),
            ],
            winding: 0,
        }],
    )
}

pub fn standard_unknot() -> FrontDiagram {
    standard_unknot_sized(4)
}

/// Figure-eight shaped unknot front: one negative crossing, two cusps,
/// tb = -2, rot = 1.
pub fn figure_eight() -> FrontDiagram {
    FrontDiagram::new(
        Ambient::Plane,
        vec![FrontComponent {
            vertices: vec![
                Pt::of(0, 1, 0, 1),
                Pt::of(1, 1, 2, 1),
                Pt::of(5, 1, -2, 1),
                Pt::of(6, 1, 0, 1),
                Pt::of(5, 1, 2, 1),
                Pt::of(1, 1, -2, 1),
            ],
            winding: 0,
        }],
    )
}

/// The zero section of the cylinder: winding 1, no cusps, no crossings,
/// tb = 0, rot = 0 in the jet-space conventions.
pub fn cylinder_zero_section() -> FrontDiagram {
    FrontDiagram::new(
        Ambient::Cylinder,
        vec![FrontComponent {
            vertices: vec![Pt::of(0, 1, 0, 1), Pt::of(1, 3, 0, 1), Pt::of(2, 3, 0, 1)],
            winding: 1,
        }],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lens_is_valid_and_maximal() {
        let d = standard_unknot();
        assert!(validate(&d).is_empty());
        assert!(crossings(&d).unwrap().is_empty());
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-1, 0));
    }

    #[test]
    fn vertical_segment_is_rejected() {
        let d = FrontDiagram::new(
            Ambient::Plane,
            vec![FrontComponent {
                vertices: vec![
                    Pt::of(0, 1, 0, 1),
                    Pt::of(2, 1, 1, 1),
                    Pt::of(2, 1, -1, 1),
                ],
                winding: 0,
            }],
        );
        assert!(validate(&d)
            .iter()
            .any(|v| matches!(v, Violation::NonMonotoneSegment { .. })));
    }

    #[test]
    fn shared_vertex_is_rejected() {
        let mut d = standard_unknot();
        let mut c2 = d.components[0].translated(&rat(0, 1), &rat(3, 1));
        c2.vertices[0] = Pt::of(0, 1, 0, 1); // coincides with component 0
        d.components.push(c2);
        assert!(validate(&d)
            .iter()
            .any(|v| matches!(v, Violation::NonGenericIncidence { .. })));
    }

    #[test]
    fn figure_eight_template() {
        let d = figure_eight();
        assert!(validate(&d).is_empty());
        let xs = crossings(&d).unwrap();
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].sign, -1);
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-2, 1));
    }

    #[test]
    fn stabilize_tracks_invariants() {
        let d = standard_unknot();
        let d1 = stabilize(&d, 0, StabSign::Positive).unwrap();
        assert!(validate(&d1).is_empty());
        assert_eq!(classical_invariants(&d1, 0).unwrap(), (-2, 1));
        let d2 = stabilize(&d1, 0, StabSign::Negative).unwrap();
        assert_eq!(classical_invariants(&d2, 0).unwrap(), (-3, 0));
    }

    #[test]
    fn stabilize_commutes_on_invariants() {
        let d = standard_unknot();
        let pm = stabilize(&stabilize(&d, 0, StabSign::Positive).unwrap(), 0, StabSign::Negative)
            .unwrap();
        let mp = stabilize(&stabilize(&d, 0, StabSign::Negative).unwrap(), 0, StabSign::Positive)
            .unwrap();
        assert_eq!(
            classical_invariants(&pm, 0).unwrap(),
            classical_invariants(&mp, 0).unwrap()
        );
    }

    #[test]
    fn translation_invariance() {
        let d = figure_eight();
        let t = d.translated(&rat(7, 3), &rat(-5, 2));
        assert_eq!(
            classical_invariants(&d, 0).unwrap(),
            classical_invariants(&t, 0).unwrap()
        );
    }

    #[test]
    fn cylinder_zero_section_invariants() {
        let d = cylinder_zero_section();
        assert!(validate(&d).is_empty(), "{:?}", validate(&d));
        assert_eq!(classical_invariants(&d, 0).unwrap(), (0, 0));
    }

    #[test]
    fn cylinder_deck_rotation_invariance() {
        let d = cylinder_zero_section();
        let d1 = stabilize(&d, 0, StabSign::Positive).unwrap();
        let r = d1.translated(&rat(1, 1), &rat(0, 1));
        assert_eq!(
            classical_invariants(&d1, 0).unwrap(),
            classical_invariants(&r, 0).unwrap()
        );
        assert_eq!(classical_invariants(&d1, 0).unwrap(), (-1, 1));
    }

    #[test]
    fn cylinder_translates_cross() {
        // Two parallel zero sections at different heights never cross; a
        // once-stabilized section and a flat one cross twice.
        let d = cylinder_zero_section();
        let mut two = d.clone();
        two.components
            .push(d.components[0].translated(&rat(1, 7), &rat(1, 1)));
        assert!(validate(&two).is_empty());
        assert_eq!(linking_number(&two, 0, 1).unwrap(), 0);
    }

    #[test]
    fn front_v1_round_trip() {
        let d = stabilize(&figure_eight(), 0, StabSign::Negative).unwrap();
        let v = d.to_front_v1().unwrap();
        let back = FrontDiagram::from_front_v1(&v).unwrap();
        assert_eq!(d, back);
    }
}
