//! Constructions of front diagrams realizing prescribed classical invariants:
//! stabilized unknots, Legendrian push-offs, meridional loop insertion, the
//! positive torus-braid cable template, and the two (-1)-cable templates.
//! Every construction is verified against the front-diagram computations
//! before it is returned.

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::front::{
    analyze, classical_invariants, invariants_from, linking_from, rat, Ambient, FrontComponent,
    FrontDiagram, Pt, Rat, StabSign,
};
use crate::ranges::{realizable, unknot_realizable, LinkInvariants};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Unknot,
    PositiveCable,
    MinusOneCable,
}

/// A construction request: which template family, aiming at which invariants.
/// The `Unknot` family uses only `(tb1, rot1)` of the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub target: LinkInvariants,
    pub family: Family,
}

fn stabilize_times(
    d: &FrontDiagram,
    c: usize,
    pos: i64,
    neg: i64,
) -> Result<FrontDiagram> {
    let mut out = d.clone();
    for _ in 0..pos {
        out = crate::front::stabilize(&out, c, StabSign::Positive)?;
    }
    for _ in 0..neg {
        out = crate::front::stabilize(&out, c, StabSign::Negative)?;
    }
    Ok(out)
}

/// Single plane unknot front with the given invariants, built from the
/// two-cusp lens by `(-tb-1+rot)/2` positive and `(-tb-1-rot)/2` negative
/// stabilizations. `extra_width` widens the base lens to leave room for
/// later insertions.
pub fn unknot_front_sized(tb: i64, rot: i64, extra_width: i64) -> Result<FrontDiagram> {
    if !unknot_realizable(tb, rot) {
        return Err(Error::NotRealizable(format!(
            "(tb, rot) = ({tb}, {rot}) is not realizable by a Legendrian unknot"
        )));
    }
    let pos = (-tb - 1 + rot) / 2;
    let neg = (-tb - 1 - rot) / 2;
    let width = 8 * (1 + pos + neg + extra_width.max(0));
    let base = crate::front::standard_unknot_sized(width);
    stabilize_times(&base, 0, pos, neg)
}

pub fn unknot_front(tb: i64, rot: i64) -> Result<FrontDiagram> {
    unknot_front_sized(tb, rot, 0)
}

fn bbox_height(d: &FrontDiagram) -> Rat {
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for c in &d.components {
        for p in &c.vertices {
            if lo.as_ref().map(|x| &p.v < x).unwrap_or(true) {
                lo = Some(p.v.clone());
            }
            if hi.as_ref().map(|x| &p.v > x).unwrap_or(true) {
                hi = Some(p.v.clone());
            }
        }
    }
    match (lo, hi) {
        (Some(a), Some(b)) => b - a,
        _ => Rat::one(),
    }
}

/// Adds a parallel copy of component `c`, displaced vertically (the contact
/// framing). For `reverse` the copy is traversed backwards. Invariants of the
/// copy: `tb' = tb`, `rot' = ±rot`, and `lk(c, c') = ∓tb` (upper signs for an
/// unreversed copy).
pub fn legendrian_pushoff(d: &FrontDiagram, c: usize, reverse: bool) -> Result<FrontDiagram> {
    if c >= d.components.len() {
        return Err(Error::InvalidInput(format!("no component {c}")));
    }
    let (tb, rot) = classical_invariants(d, c)?;
    let want_rot = if reverse { -rot } else { rot };
    let want_lk = if reverse { -tb } else { tb };
    let mut eps = bbox_height(d).max(Rat::one()) / rat(16, 1);
    for _ in 0..64 {
        let mut cand = d.clone();
        let mut copy = d.components[c].translated(&Rat::zero(), &eps);
        if reverse {
            copy = copy.reversed();
        }
        cand.components.push(copy);
        let idx = cand.components.len() - 1;
        let a = analyze(&cand);
        if a.violations.is_empty()
            && invariants_from(&a, idx) == (tb, want_rot)
            && linking_from(&a, c, idx) == want_lk
        {
            return Ok(cand);
        }
        eps = eps / rat(2, 1);
    }
    Err(Error::TemplateMismatch(
        "no displacement found for a clean parallel copy".into(),
    ))
}

struct LoopSite {
    seg_around: usize,
    seg_target: usize,
    /// Window [lo, hi] in h, strictly inside both segments.
    window: (Rat, Rat),
    /// Free depth below the around-strand within the window.
    depth: Rat,
}

fn v_on(comp: &FrontComponent, ci: usize, seg: usize, h: &Rat) -> Rat {
    let s = segment_of(comp, ci, seg);
    s.1 + (h - &s.0) * s.4
}

/// (a_h, a_v, b_h, b_v, slope) of a segment.
fn segment_of(comp: &FrontComponent, _ci: usize, i: usize) -> (Rat, Rat, Rat, Rat, Rat) {
    let n = comp.vertices.len();
    let a = comp.vertices[i].clone();
    let b = if i + 1 < n {
        comp.vertices[i + 1].clone()
    } else {
        Pt::new(
            &comp.vertices[0].h + Rat::from(BigInt::from(comp.winding)),
            comp.vertices[0].v.clone(),
        )
    };
    let slope = (&b.v - &a.v) / (&b.h - &a.h);
    (a.h, a.v, b.h, b.v, slope)
}

fn span(comp: &FrontComponent, ci: usize, i: usize) -> (Rat, Rat) {
    let (ah, _, bh, _, _) = segment_of(comp, ci, i);
    if ah <= bh {
        (ah, bh)
    } else {
        (bh, ah)
    }
}

/// Finds a hosting site for a meridional loop: a window where `c_target` runs
/// strictly above `c_around` with an empty band between them, no crossings,
/// and free depth below the around-strand.
fn find_loop_site(d: &FrontDiagram, c_around: usize, c_target: usize) -> Result<LoopSite> {
    if d.ambient != Ambient::Plane {
        return Err(Error::TemplateMismatch(
            "meridional loops are a plane template".into(),
        ));
    }
    let a = analyze(d);
    if !a.violations.is_empty() {
        return Err(Error::InvalidDiagram(a.violations));
    }
    let around = &d.components[c_around];
    let target = &d.components[c_target];
    let mut best: Option<(Rat, LoopSite)> = None;
    for sa in 0..around.vertices.len() {
        let (alo, ahi) = span(around, c_around, sa);
        for st in 0..target.vertices.len() {
            let (tlo, thi) = span(target, c_target, st);
            let lo = alo.clone().max(tlo.clone());
            let hi = ahi.clone().min(thi.clone());
            if lo >= hi {
                continue;
            }
            // Crossing events on either hosting segment inside [lo, hi].
            let mut events = vec![lo.clone(), hi.clone()];
            for x in &a.crossings {
                let involved = [x.over, x.under].iter().any(|&(ci, si)| {
                    (ci == c_around && si == sa) || (ci == c_target && si == st)
                });
                if involved && x.position.h > lo && x.position.h < hi {
                    events.push(x.position.h.clone());
                }
            }
            events.sort();
            events.dedup();
            for gap in events.windows(2) {
                let gw = &gap[1] - &gap[0];
                if !gw.is_positive() {
                    continue;
                }
                let margin = &gw / rat(8, 1);
                let wlo = &gap[0] + &margin;
                let whi = &gap[1] - &margin;
                let width = &whi - &wlo;
                if best
                    .as_ref()
                    .map(|(bw, _)| &width <= bw)
                    .unwrap_or(false)
                {
                    continue;
                }
                // Target strictly above around throughout the window.
                let g_lo = v_on(target, c_target, st, &wlo) - v_on(around, c_around, sa, &wlo);
                let g_hi = v_on(target, c_target, st, &whi) - v_on(around, c_around, sa, &whi);
                if !g_lo.is_positive() || !g_hi.is_positive() {
                    continue;
                }
                // Scan all other segments: the band must be empty, and we
                // take the free depth below the around-strand.
                let mut depth: Option<Rat> = None;
                let mut clean = true;
                'scan: for (ci, comp) in d.components.iter().enumerate() {
                    for si in 0..comp.vertices.len() {
                        if (ci == c_around && si == sa) || (ci == c_target && si == st) {
                            continue;
                        }
                        let (slo, shi) = span(comp, ci, si);
                        let jlo = wlo.clone().max(slo);
                        let jhi = whi.clone().min(shi);
                        if jlo >= jhi {
                            continue;
                        }
                        for h in [&jlo, &jhi] {
                            let vo = v_on(comp, ci, si, h);
                            let va = v_on(around, c_around, sa, h);
                            let vt = v_on(target, c_target, st, h);
                            if vo > va && vo < vt {
                                clean = false;
                                break 'scan;
                            }
                            if vo <= va {
                                let gap_below = &va - &vo;
                                if !gap_below.is_positive() {
                                    clean = false;
                                    break 'scan;
                                }
                                if depth.as_ref().map(|x| &gap_below < x).unwrap_or(true) {
                                    depth = Some(gap_below);
                                }
                            }
                        }
                    }
                }
                if !clean {
                    continue;
                }
                let depth = depth.unwrap_or_else(|| g_lo.clone().min(g_hi.clone()));
                best = Some((
                    width,
                    LoopSite {
                        seg_around: sa,
                        seg_target: st,
                        window: (wlo.clone(), whi.clone()),
                        depth,
                    },
                ));
            }
        }
    }
    best.map(|(_, s)| s).ok_or_else(|| {
        Error::TemplateMismatch(
            "no parallel run of the target above the companion with free depth".into(),
        )
    })
}

/// Inserts one meridional loop of `c_target` around `c_around`: four new
/// cusps (two up, two down), two new positive crossings with the companion
/// strand, no new self-crossings. Effect: tb(target) -= 2, rot unchanged,
/// lk += 1.
pub fn add_meridional_loop(
    d: &FrontDiagram,
    c_around: usize,
    c_target: usize,
) -> Result<FrontDiagram> {
    if c_around == c_target || c_around >= d.components.len() || c_target >= d.components.len() {
        return Err(Error::InvalidInput("need two distinct components".into()));
    }
    let before = analyze(d);
    if !before.violations.is_empty() {
        return Err(Error::InvalidDiagram(before.violations));
    }
    let (tb0, rot0) = invariants_from(&before, c_target);
    let lk0 = linking_from(&before, c_around, c_target);
    let site = find_loop_site(d, c_around, c_target)?;
    let around = &d.components[c_around];
    let target = &d.components[c_target];
    let (wlo, whi) = site.window.clone();
    let (ah, _, bh, _, _) = segment_of(target, c_target, site.seg_target);
    let rightward = ah < bh;
    let (e0, e1) = if rightward {
        (wlo.clone(), whi.clone())
    } else {
        (whi.clone(), wlo.clone())
    };
    let at = |num: i64, den: i64| -> Rat { &e0 + (&e1 - &e0) * rat(num, den) };
    let t_line = |h: &Rat| v_on(target, c_target, site.seg_target, h);
    let a_line = |h: &Rat| v_on(around, c_around, site.seg_around, h);
    let g = |h: &Rat| t_line(h) - a_line(h);
    let depth = &site.depth;

    // Traversal order: junction, descend cusp, plunge cusp (below the
    // companion), deep cusp, rise cusp (inside the band), junction.
    let hs = [
        at(0, 1),
        at(1, 2),
        at(5, 16),
        at(3, 4),
        at(5, 8),
        at(1, 1),
    ];
    let vs = [
        t_line(&hs[0]),
        t_line(&hs[1]) - g(&hs[1]) / rat(8, 1),
        a_line(&hs[2]) - depth / rat(4, 1),
        a_line(&hs[3]) - depth / rat(2, 1),
        a_line(&hs[4]) + g(&hs[4]) / rat(4, 1),
        t_line(&hs[5]),
    ];
    let mut out = d.clone();
    let verts = &mut out.components[c_target].vertices;
    for (off, (h, v)) in hs.into_iter().zip(vs.into_iter()).enumerate() {
        verts.insert(site.seg_target + 1 + off, Pt::new(h, v));
    }
    let after = analyze(&out);
    if !after.violations.is_empty() {
        return Err(Error::TemplateMismatch(format!(
            "loop insertion produced an invalid diagram: {:?}",
            after.violations
        )));
    }
    let (tb1, rot1) = invariants_from(&after, c_target);
    let lk1 = linking_from(&after, c_around, c_target);
    if (tb1, rot1, lk1) != (tb0 - 2, rot0, lk0 + 1) {
        return Err(Error::TemplateMismatch(format!(
            "loop insertion changed invariants to tb {tb1}, rot {rot1}, lk {lk1} (expected tb {}, rot {rot0}, lk {})",
            tb0 - 2,
            lk0 + 1
        )));
    }
    Ok(out)
}

/// The positive (p, q) torus knot as the closure of the q-strand braid with
/// p(q-1) positive crossings, closed by q right and q left cusps.
fn torus_braid_component(p: i64, q: i64) -> FrontComponent {
    let qs = q as usize;
    let n_cross = (p * (q - 1)) as usize;
    let w = n_cross as i64 + 1;
    // Per-strand braid paths, indexed by entry level - 1.
    let mut paths: Vec<Vec<Pt>> = (1..=q).map(|i| vec![Pt::of(0, 1, i, 1)]).collect();
    let mut strand_at_level: Vec<usize> = (0..qs).collect();
    for t in 1..=n_cross {
        let c = ((t - 1) % (qs - 1)) + 1; // levels c, c+1 cross
        let sa = strand_at_level[c - 1];
        let sb = strand_at_level[c];
        let (tl, tr) = (rat(4 * t as i64 - 1, 4), rat(4 * t as i64 + 1, 4));
        paths[sa].push(Pt::new(tl.clone(), rat(c as i64, 1)));
        paths[sa].push(Pt::new(tr.clone(), rat(c as i64 + 1, 1)));
        paths[sb].push(Pt::new(tl, rat(c as i64 + 1, 1)));
        paths[sb].push(Pt::new(tr, rat(c as i64, 1)));
        strand_at_level.swap(c - 1, c);
    }
    let mut exit_of_entry = vec![0usize; qs];
    for (level0, &strand) in strand_at_level.iter().enumerate() {
        exit_of_entry[strand] = level0 + 1;
    }
    let mut vertices: Vec<Pt> = Vec::new();
    let mut entry = 1usize;
    loop {
        vertices.append(&mut paths[entry - 1].clone());
        let j = exit_of_entry[entry - 1] as i64;
        // Rightward extension, descender to the right cusp, return strand,
        // left cusp, ascender back to the next entry level.
        vertices.push(Pt::of(w + j - 1, 1, j, 1));
        vertices.push(Pt::of(w + 3 * j - 1, 1, -j, 1));
        vertices.push(Pt::of(-(3 * j - 1), 1, -j, 1));
        if j == 1 {
            break; // the closing segment is the final ascender
        }
        vertices.push(Pt::of(-(j - 1), 1, j, 1));
        entry = j as usize;
    }
    FrontComponent {
        vertices,
        winding: 0,
    }
}

/// Meridional companion: a four-vertex lens around the q return strands of
/// the braid template, oriented for lk = +q; tb = -1, rot = 0.
fn companion_lens(q: i64, braid_width: i64) -> FrontComponent {
    let h0 = rat(braid_width, 2);
    let r = rat(3 * braid_width, 8);
    let v0 = rat(-5, 8);
    FrontComponent {
        vertices: vec![
            Pt::new(&h0 - &r, v0.clone()),
            Pt::new(h0.clone(), rat(1, 4)),
            Pt::new(&h0 + &r, v0),
            Pt::new(h0, rat(-2 * q - 1, 2)),
        ],
        winding: 0,
    }
}

/// Two-component diagram: the maximal positive (p, q) torus cable
/// (tb = pq - p - q, rot = 0) with a meridional unknot companion carrying
/// `(-m, rot1)`; lk = q. Component 0 is the companion.
pub fn positive_cable_front(p: i64, q: i64, m: i64, rot1: i64) -> Result<FrontDiagram> {
    if p < 1 || q < 2 {
        return Err(Error::NotRealizable(format!(
            "positive cable template needs p >= 1, q >= 2, got ({p}, {q})"
        )));
    }
    if crate::gcd(p, q) != 1 {
        return Err(Error::NonCoprime { p, q });
    }
    if !unknot_realizable(-m, rot1) {
        return Err(Error::NotRealizable(format!(
            "(-{m}, {rot1}) is not a realizable unknot"
        )));
    }
    let braid = torus_braid_component(p, q);
    let lens = companion_lens(q, p * (q - 1) + 1);
    let base = FrontDiagram::new(Ambient::Plane, vec![lens, braid]);
    let pos = (m - 1 + rot1) / 2;
    let neg = (m - 1 - rot1) / 2;
    stabilize_times(&base, 0, pos, neg)
}

/// Two-component diagram realizing a (-1, q)-cable tuple, by the front
/// constructions: for m < q the companion is drawn first and the cable is its
/// reversed push-off with q - m meridional loops; for m >= q the cable peak
/// is drawn first and the companion is a stabilized reversed push-off of it.
/// Component 0 is the companion (tb1 = -m), component 1 the cable.
pub fn minus_one_cable_front(
    q: i64,
    m: i64,
    rot1: i64,
    tb2: i64,
    rot2: i64,
) -> Result<FrontDiagram> {
    let target = LinkInvariants {
        p: -1,
        q,
        tb1: -m,
        rot1,
        tb2,
        rot2,
        normalized: true,
    };
    if q < 2 {
        return Err(Error::NotRealizable("cable templates need q >= 2".into()));
    }
    let (ok, label) = realizable(&target)?;
    if !ok {
        return Err(Error::NotRealizable(format!("{target:?}")));
    }
    if label.swapped {
        // Only the swapped view realizes the tuple: build with the roles
        // interchanged, then put the components back in (L1, L2) order.
        let d = minus_one_cable_front(q, -tb2, rot2, -m, rot1)?;
        let mut comps = d.components;
        comps.swap(0, 1);
        return Ok(FrontDiagram::new(Ambient::Plane, comps));
    }
    if m < q {
        // mp + q > 0: single peak (p rot1, m - 2q).
        let peak_rot = -rot1;
        let peak_tb = m - 2 * q;
        let s = peak_tb - tb2;
        let pos = (s + rot2 - peak_rot) / 2;
        let neg = s - pos;
        let loops = q - m;
        let base = unknot_front_sized(-m, rot1, 4 * loops + s + 2)?;
        let mut d = legendrian_pushoff(&base, 0, true)?;
        for _ in 0..loops {
            d = add_meridional_loop(&d, 0, 1)?;
        }
        stabilize_times(&d, 1, pos, neg)
    } else {
        // m >= q: peaks at tb2 = -q with rot2 = -f, |rot1 - f| <= m - q.
        let pks = crate::ranges::peaks(-1, q, m, rot1)?;
        let top = -q;
        let s = top - tb2;
        let pk = pks
            .iter()
            .filter(|pk| {
                let d = rot2 - pk.rot2;
                d.abs() <= s && (d - s).rem_euclid(2) == 0
            })
            .min_by_key(|pk| ((rot2 - pk.rot2).abs(), pk.rot2))
            .copied()
            .ok_or_else(|| Error::NotRealizable(format!("{target:?}")))?;
        let pos2 = (s + rot2 - pk.rot2) / 2;
        let neg2 = s - pos2;
        let k = rot1 + pk.rot2;
        let n1 = (m - q + k) / 2;
        let n2 = (m - q - k) / 2;
        let base = unknot_front_sized(-q, pk.rot2, n1 + n2 + pos2 + neg2 + 2)?;
        let d = legendrian_pushoff(&base, 0, true)?;
        let d = stabilize_times(&d, 1, n1, n2)?;
        let d = stabilize_times(&d, 0, pos2, neg2)?;
        let mut comps = d.components;
        comps.swap(0, 1);
        Ok(FrontDiagram::new(Ambient::Plane, comps))
    }
}

/// Builds the diagram for a construction request and verifies the computed
/// invariants against the target before returning it.
pub fn build(spec: &ConstructionSpec) -> Result<FrontDiagram> {
    let t = &spec.target;
    let d = match spec.family {
        Family::Unknot => unknot_front(t.tb1, t.rot1)?,
        Family::PositiveCable => {
            if t.p < 1 {
                return Err(Error::Unsupported(format!(
                    "positive cable family needs p >= 1, got {}",
                    t.p
                )));
            }
            let (ok, _) = realizable(t)?;
            if !ok {
                return Err(Error::NotRealizable(format!("{t:?}")));
            }
            let top = crate::ranges::max_tb2(t.p, t.q, t.m())?;
            let s = top - t.tb2;
            let pos = (s + t.rot2) / 2;
            let neg = s - pos;
            let d = positive_cable_front(t.p, t.q, t.m(), t.rot1)?;
            stabilize_times(&d, 1, pos, neg)?
        }
        Family::MinusOneCable => {
            if t.p != -1 {
                return Err(Error::Unsupported(format!(
                    "the (-1)-cable family needs p = -1, got {} (cables with p <= -2 have no front template here)",
                    t.p
                )));
            }
            minus_one_cable_front(t.q, t.m(), t.rot1, t.tb2, t.rot2)?
        }
    };
    verify_build(&d, spec)?;
    Ok(d)
}

fn verify_build(d: &FrontDiagram, spec: &ConstructionSpec) -> Result<()> {
    let a = analyze(d);
    if !a.violations.is_empty() {
        return Err(Error::TemplateMismatch(format!(
            "construction invalid: {:?}",
            a.violations
        )));
    }
    let t = &spec.target;
    match spec.family {
        Family::Unknot => {
            let got = invariants_from(&a, 0);
            if got != (t.tb1, t.rot1) {
                return Err(Error::TemplateMismatch(format!(
                    "unknot invariants {got:?} != ({}, {})",
                    t.tb1, t.rot1
                )));
            }
        }
        Family::PositiveCable | Family::MinusOneCable => {
            let got1 = invariants_from(&a, 0);
            let got2 = invariants_from(&a, 1);
            let lk = linking_from(&a, 0, 1);
            if got1 != (t.tb1, t.rot1) || got2 != (t.tb2, t.rot2) || lk != t.q {
                return Err(Error::TemplateMismatch(format!(
                    "cable invariants L1 {got1:?}, L2 {got2:?}, lk {lk} != targets ({}, {}), ({}, {}), {}",
                    t.tb1, t.rot1, t.tb2, t.rot2, t.q
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{crossings, linking_number, validate};

    #[test]
    fn unknot_front_examples() {
        let d = unknot_front(-1, 0).unwrap();
        assert_eq!(d.components[0].vertices.len(), 4);
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-1, 0));

        let d = unknot_front(-3, 0).unwrap();
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-3, 0));
        // Zigzag stabilizations add no crossings; cusp count is -2 tb.
        assert!(crossings(&d).unwrap().is_empty());
        let a = analyze(&d);
        assert_eq!(a.cusps[0].len() as i64, 6);

        assert!(matches!(unknot_front(-2, 0), Err(Error::NotRealizable(_))));
        assert!(matches!(unknot_front(0, 1), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn pushoff_reversed_links_m() {
        for m in 1..=3 {
            let base = unknot_front(-m, if m % 2 == 0 { 1 } else { 0 }).unwrap();
            let d = legendrian_pushoff(&base, 0, true).unwrap();
            assert!(validate(&d).is_empty());
            let (tb1, rot1) = classical_invariants(&d, 0).unwrap();
            let (tb2, rot2) = classical_invariants(&d, 1).unwrap();
            assert_eq!(tb2, tb1);
            assert_eq!(rot2, -rot1);
            assert_eq!(linking_number(&d, 0, 1).unwrap(), m);
        }
    }

    #[test]
    fn pushoff_unreversed_links_tb() {
        let base = unknot_front(-1, 0).unwrap();
        let d = legendrian_pushoff(&base, 0, false).unwrap();
        assert_eq!(linking_number(&d, 0, 1).unwrap(), -1);
        assert_eq!(crossings(&d).unwrap().len(), 2);
    }

    #[test]
    fn meridional_loop_deltas() {
        let base = unknot_front(-2, 1).unwrap();
        let d = legendrian_pushoff(&base, 0, true).unwrap();
        let d1 = add_meridional_loop(&d, 0, 1).unwrap();
        assert_eq!(classical_invariants(&d1, 1).unwrap(), (-4, -1));
        assert_eq!(linking_number(&d1, 0, 1).unwrap(), 3);
        // Twice more: tb drops by 2 each, lk rises by 1 each, rot constant.
        let d2 = add_meridional_loop(&d1, 0, 1).unwrap();
        let d3 = add_meridional_loop(&d2, 0, 1).unwrap();
        assert_eq!(classical_invariants(&d3, 1).unwrap(), (-8, -1));
        assert_eq!(linking_number(&d3, 0, 1).unwrap(), 5);
    }

    #[test]
    fn positive_cable_trefoil() {
        let d = positive_cable_front(3, 2, 1, 0).unwrap();
        assert!(validate(&d).is_empty());
        assert_eq!(classical_invariants(&d, 1).unwrap(), (1, 0));
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-1, 0));
        assert_eq!(linking_number(&d, 0, 1).unwrap(), 2);
    }

    #[test]
    fn positive_cable_various() {
        for (p, q) in [(1i64, 2i64), (2, 3), (3, 4), (1, 5)] {
            let d = positive_cable_front(p, q, 2, 1).unwrap();
            assert_eq!(
                classical_invariants(&d, 1).unwrap(),
                (p * q - p - q, 0),
                "(p,q)=({p},{q})"
            );
            assert_eq!(classical_invariants(&d, 0).unwrap(), (-2, 1));
            assert_eq!(linking_number(&d, 0, 1).unwrap(), q);
        }
    }

    #[test]
    fn minus_one_cable_b1_example() {
        // (q, m) = (3, 1), rot1 = 0, peak: tb2 = m - 2q = -5, rot2 = 0.
        let d = minus_one_cable_front(3, 1, 0, -5, 0).unwrap();
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-1, 0));
        assert_eq!(classical_invariants(&d, 1).unwrap(), (-5, 0));
        assert_eq!(linking_number(&d, 0, 1).unwrap(), 3);
    }

    #[test]
    fn minus_one_cable_b2iii_example() {
        // (q, m) = (2, 4), rot1 = 1, rot2 = -1: k = 0, n1 = n2 = 1.
        let d = minus_one_cable_front(2, 4, 1, -2, -1).unwrap();
        assert_eq!(classical_invariants(&d, 0).unwrap(), (-4, 1));
        assert_eq!(classical_invariants(&d, 1).unwrap(), (-2, -1));
        assert_eq!(linking_number(&d, 0, 1).unwrap(), 2);
    }

    #[test]
    fn build_dispatches_and_verifies() {
        let target = LinkInvariants {
            p: 3,
            q: 2,
            tb1: -1,
            rot1: 0,
            tb2: -1,
            rot2: 0,
            normalized: true,
        };
        let d = build(&ConstructionSpec {
            target,
            family: Family::PositiveCable,
        })
        .unwrap();
        assert_eq!(classical_invariants(&d, 1).unwrap(), (-1, 0));

        let bad = ConstructionSpec {
            target: LinkInvariants {
                p: -3,
                ..target
            },
            family: Family::MinusOneCable,
        };
        assert!(matches!(build(&bad), Err(Error::Unsupported(_))));
    }
}
