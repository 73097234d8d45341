//! Realizability of classical invariants for oriented cable links: an unknot
//! `L1` together with a curve `L2` in the class `p*mu + q*lambda` on the
//! boundary of a tubular neighbourhood of `L1`, where `q = lk(L1, L2)`.
//!
//! Everything here is exact integer arithmetic. The realizable set of
//! `(rot2, tb2)` pairs for fixed `(p, q, tb1, rot1)` is a union of downward
//! cones ("mountain range") hanging from finitely many peaks at the maximal
//! Thurston-Bennequin invariant.

use serde::{Deserialize, Serialize};

use crate::{gcd, Error, Result};

/// Classical invariants of an oriented two-component cable link.
///
/// `m := -tb1` is the notation used throughout for the companion unknot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkInvariants {
    pub p: i64,
    pub q: i64,
    pub tb1: i64,
    pub rot1: i64,
    pub tb2: i64,
    pub rot2: i64,
    pub normalized: bool,
}

impl LinkInvariants {
    /// Builds an unnormalized tuple, checking coprimality only.
    pub fn new(p: i64, q: i64, tb1: i64, rot1: i64, tb2: i64, rot2: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::NonCoprime { p, q });
        }
        Ok(LinkInvariants {
            p,
            q,
            tb1,
            rot1,
            tb2,
            rot2,
            normalized: q >= 0,
        })
    }

    pub fn m(&self) -> i64 {
        -self.tb1
    }
}

/// Orientation normalization: when `q < 0`, reverse the orientation of `L2`.
/// This negates the class of `L2` (so `(p, q) -> (-p, -q)`) and the rotation
/// number of `L2`; `rot1` and both tb values are unchanged.
pub fn normalize(raw: LinkInvariants) -> Result<LinkInvariants> {
    if gcd(raw.p, raw.q) != 1 {
        return Err(Error::NonCoprime { p: raw.p, q: raw.q });
    }
    let mut inv = raw;
    if inv.q < 0 {
        inv.p = -inv.p;
        inv.q = -inv.q;
        inv.rot2 = -inv.rot2;
    }
    inv.normalized = true;
    Ok(inv)
}

/// Whether a Legendrian unknot with the given invariants exists: any negative
/// tb, rotation in `{tb+1, tb+3, ..., -tb-1}`.
pub fn unknot_realizable(tb: i64, rot: i64) -> bool {
    tb <= -1 && rot.abs() <= -tb - 1 && (tb + rot).rem_euclid(2) == 1
}

/// Case labels partitioning the classification by `(q, sign p, m p + q, |p| vs q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// q = 0: split pair of unknots.
    C1Q0,
    /// q = 1: Hopf link.
    C2Q1,
    /// q >= 2, p > 0: positive torus knot companion.
    C3aPos,
    /// q >= 2, p < 0, mp + q > 0.
    C3b1,
    /// q >= 2, p < 0, mp + q <= 0, |p| > q.
    C3b2i,
    /// q >= 2, p < -1, mp + q <= 0, |p| < q.
    C3b2ii,
    /// q >= 2, p = -1, m >= q.
    C3b2iii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseLabel {
    pub case: Case,
    /// For p = -1 the roles of the two components may be interchanged; set
    /// when the tuple was accepted with `L1` viewed as the cable of `L2`.
    pub swapped: bool,
}

impl CaseLabel {
    fn plain(case: Case) -> Self {
        CaseLabel {
            case,
            swapped: false,
        }
    }
}

/// The case of the (p, q, m) data, for normalized q.
pub fn case_of(p: i64, q: i64, m: i64) -> Case {
    match q {
        0 => Case::C1Q0,
        1 => Case::C2Q1,
        _ => {
            if p > 0 {
                Case::C3aPos
            } else if m * p + q > 0 {
                Case::C3b1
            } else if -p > q {
                Case::C3b2i
            } else if p == -1 {
                Case::C3b2iii
            } else {
                Case::C3b2ii
            }
        }
    }
}

/// Maximal Thurston-Bennequin invariant of `L2` in a Legendrian realization:
/// `pq - p - q` for p > 0 (independent of m), `pq - max(mp + q, 0)` for p < 0.
pub fn max_tb2(p: i64, q: i64, m: i64) -> Result<i64> {
    if q < 2 {
        return Err(Error::OutOfDomain(format!("max_tb2 requires q >= 2, got {q}")));
    }
    if p == 0 || m < 1 {
        return Err(Error::OutOfDomain(format!(
            "max_tb2 requires p != 0 and m >= 1, got p = {p}, m = {m}"
        )));
    }
    if p > 0 {
        Ok(p * q - p - q)
    } else {
        Ok(p * q - (m * p + q).max(0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CouplingParam {
    #[serde(rename = "f_{a+1}(mu)")]
    FAPlus1Mu,
    #[serde(rename = "f_T(mu)")]
    FTMu,
}

/// Coupling data attached to a peak in the cases where the rotation numbers of
/// the two components constrain each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coupling {
    pub param_name: CouplingParam,
    pub param_value: i64,
    /// Slack remaining in the coupling inequality; >= 0 on a valid peak.
    pub constraint_slack: i64,
}

/// A maximal-tb rotation number, with optional coupling certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peak {
    pub rot2: i64,
    pub coupling: Option<Coupling>,
}

/// The peak rotation numbers of `L2` at `tb2 = max_tb2(p, q, m)`, for a
/// companion unknot with invariants `(-m, rot1)`.
///
/// Case dispatch:
/// * p > 0: single peak rot2 = 0;
/// * p < 0, mp + q > 0: single peak rot2 = p * rot1;
/// * p < 0, |p| > q: `±(p + (2l+1) q)` for `0 <= l < -(p+q)/q`, uncoupled;
/// * p < -1, |p| < q, write q = a|p| + b: the two branches
///   `rot2 = p f - p - b` for `f` in `{-a+2, ..., a}` and
///   `rot2 = p f + p + b` for `f` in `{-a, ..., a-2}` (step 2), each kept only
///   if `|rot1 - f| <= m - a - 1`;
/// * p = -1, m >= q: `rot2 = -f` for `f` in `{-q+1, -q+3, ..., q-1}` with
///   `|rot1 - f| <= m - q`.
pub fn peaks(p: i64, q: i64, m: i64, rot1: i64) -> Result<Vec<Peak>> {
    if q < 2 {
        return Err(Error::OutOfDomain(format!("peaks requires q >= 2, got {q}")));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NonCoprime { p, q });
    }
    if !unknot_realizable(-m, rot1) {
        return Err(Error::OutOfDomain(format!(
            "(-{m}, {rot1}) is not a realizable unknot"
        )));
    }
    let mut out: Vec<Peak> = Vec::new();
    match case_of(p, q, m) {
        Case::C3aPos => out.push(Peak {
            rot2: 0,
            coupling: None,
        }),
        Case::C3b1 => out.push(Peak {
            rot2: p * rot1,
            coupling: None,
        }),
        Case::C3b2i => {
            // |p| > q: rot2 in {±(p + (2l+1) q)} for 0 <= l < -(p+q)/q,
            // no coupling with rot1.
            let mut l = 0;
            while p + (l + 1) * q < 0 {
                let v = p + (2 * l + 1) * q;
                out.push(Peak {
                    rot2: v,
                    coupling: None,
                });
                out.push(Peak {
                    rot2: -v,
                    coupling: None,
                });
                l += 1;
            }
        }
        Case::C3b2ii => {
            let ap = -p;
            let a = q / ap;
            let b = q - a * ap;
            debug_assert!(b > 0 && b < ap && m >= a + 1);
            let slack_of = |f: i64| (m - a - 1) - (rot1 - f).abs();
            // Branch with f_T(lambda) = |p| - 1.
            let mut f = -a + 2;
            while f <= a {
                if slack_of(f) >= 0 {
                    out.push(Peak {
                        rot2: p * f - p - b,
                        coupling: Some(Coupling {
                            param_name: CouplingParam::FAPlus1Mu,
                            param_value: f,
                            constraint_slack: slack_of(f),
                        }),
                    });
                }
                f += 2;
            }
            // Branch with f_T(lambda) = 1 - |p|.
            let mut f = -a;
            while f <= a - 2 {
                if slack_of(f) >= 0 {
                    out.push(Peak {
                        rot2: p * f + p + b,
                        coupling: Some(Coupling {
                            param_name: CouplingParam::FAPlus1Mu,
                            param_value: f,
                            constraint_slack: slack_of(f),
                        }),
                    });
                }
                f += 2;
            }
        }
        Case::C3b2iii => {
            let mut f = -q + 1;
            while f <= q - 1 {
                let slack = (m - q) - (rot1 - f).abs();
                if slack >= 0 {
                    out.push(Peak {
                        rot2: -f,
                        coupling: Some(Coupling {
                            param_name: CouplingParam::FTMu,
                            param_value: f,
                            constraint_slack: slack,
                        }),
                    });
                }
                f += 2;
            }
        }
        Case::C1Q0 | Case::C2Q1 => unreachable!("q >= 2 checked above"),
    }
    out.sort_by_key(|pk| pk.rot2);
    out.dedup_by_key(|pk| pk.rot2);
    Ok(out)
}

/// Whether `(rot, tb)` lies in the downward stabilization cone of a peak at
/// `(peak_rot, peak_tb)`: depth `s = peak_tb - tb >= 0`, `|rot - peak_rot| <= s`,
/// and matching parity (each stabilization shifts rot by ±1).
pub fn in_cone(peak_rot: i64, peak_tb: i64, rot: i64, tb: i64) -> bool {
    let s = peak_tb - tb;
    s >= 0 && (rot - peak_rot).abs() <= s && (rot - peak_rot - s).rem_euclid(2) == 0
}

fn component2_in_range(p: i64, q: i64, m: i64, rot1: i64, tb2: i64, rot2: i64) -> Result<bool> {
    if !unknot_realizable(-m, rot1) {
        return Ok(false);
    }
    let top = max_tb2(p, q, m)?;
    if tb2 > top || (tb2 + rot2).rem_euclid(2) != 1 {
        return Ok(false);
    }
    let pks = peaks(p, q, m, rot1)?;
    Ok(pks.iter().any(|pk| in_cone(pk.rot2, top, rot2, tb2)))
}

/// The complete realizability predicate for normalized tuples.
///
/// For q = 0 and q = 1 both components independently take any unknot values.
/// For q >= 2 the pair `(rot2, tb2)` must lie in the mountain range determined
/// by `(p, q, m, rot1)`. For p = -1 the link is a cable either way around, so
/// the predicate is also tried with the roles of the components interchanged,
/// accepting if either view succeeds (the `swapped` flag records which).
pub fn realizable(inv: &LinkInvariants) -> Result<(bool, CaseLabel)> {
    if gcd(inv.p, inv.q) != 1 {
        return Err(Error::NonCoprime { p: inv.p, q: inv.q });
    }
    if !inv.normalized || inv.q < 0 {
        return Err(Error::NotNormalized);
    }
    let m = inv.m();
    let label = CaseLabel::plain(case_of(inv.p, inv.q, m.max(1)));
    let unknot1 = unknot_realizable(inv.tb1, inv.rot1);
    if inv.q <= 1 {
        return Ok((unknot1 && unknot_realizable(inv.tb2, inv.rot2), label));
    }
    if unknot1 && component2_in_range(inv.p, inv.q, m, inv.rot1, inv.tb2, inv.rot2)? {
        return Ok((true, label));
    }
    if inv.p == -1 {
        let m2 = -inv.tb2;
        if unknot_realizable(inv.tb2, inv.rot2)
            && m2 >= 1
            && component2_in_range(inv.p, inv.q, m2, inv.rot2, inv.tb1, inv.rot1)?
        {
            let swapped_label = CaseLabel {
                case: case_of(inv.p, inv.q, m2),
                swapped: true,
            };
            return Ok((true, swapped_label));
        }
    }
    Ok((false, label))
}

/// The materialized mountain range: all realizable `(rot2, tb2)` pairs with
/// `tb2 >= floor`, as an explicit point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MountainRange {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub rot1: i64,
    pub floor: i64,
    pub max_tb2: i64,
    pub peaks: Vec<Peak>,
    /// Points as `(rot2, tb2)`, ordered by descending tb2 then ascending rot2.
    pub points: Vec<(i64, i64)>,
}

pub fn mountain_range(p: i64, q: i64, m: i64, rot1: i64, floor: i64) -> Result<MountainRange> {
    let top = max_tb2(p, q, m)?;
    if floor > top {
        return Err(Error::OutOfDomain(format!(
            "floor {floor} above the maximal tb {top}"
        )));
    }
    let pks = peaks(p, q, m, rot1)?;
    let mut points = Vec::new();
    let mut tb = top;
    while tb >= floor {
        let s = top - tb;
        let mut rots: Vec<i64> = Vec::new();
        for pk in &pks {
            let mut r = pk.rot2 - s;
            while r <= pk.rot2 + s {
                rots.push(r);
                r += 2;
            }
        }
        rots.sort_unstable();
        rots.dedup();
        for r in rots {
            points.push((r, tb));
        }
        tb -= 1;
    }
    Ok(MountainRange {
        p,
        q,
        m,
        rot1,
        floor,
        max_tb2: top,
        peaks: pks,
        points,
    })
}

impl MountainRange {
    pub fn contains(&self, rot2: i64, tb2: i64) -> bool {
        self.points.binary_search_by(|(r, t)| {
            // Same ordering as construction: tb descending, rot ascending.
            t.cmp(&tb2).reverse().then(r.cmp(&rot2))
        }).is_ok()
    }

    /// ASCII dot plot, peaks marked '^', other realizable pairs 'o'.
    pub fn ascii_plot(&self) -> String {
        use std::fmt::Write;
        let (rmin, rmax) = self
            .points
            .iter()
            .fold((i64::MAX, i64::MIN), |(lo, hi), &(r, _)| (lo.min(r), hi.max(r)));
        let mut out = String::new();
        let peak_rots: Vec<i64> = self.peaks.iter().map(|p| p.rot2).collect();
        let mut tb = self.max_tb2;
        while tb >= self.floor {
            let _ = write!(out, "tb {tb:>5} |");
            for r in rmin..=rmax {
                let here = self.contains(r, tb);
                let c = if here && tb == self.max_tb2 && peak_rots.contains(&r) {
                    '^'
                } else if here {
                    'o'
                } else {
                    ' '
                };
                out.push(c);
            }
            out.push('\n');
            tb -= 1;
        }
        let _ = write!(out, "rot      |");
        for r in rmin..=rmax {
            out.push(if r == 0 {
                '0'
            } else if r % 5 == 0 {
                '+'
            } else {
                '.'
            });
        }
        out.push('\n');
        let _ = write!(out, "          (rot from {rmin} to {rmax})");
        out.push('\n');
        out
    }
}

/// Gap sizes between adjacent peak rotation numbers.
///
/// For |p| > q write |p| = a q + b (0 < b < q): gaps `(2b, 2(q-b))`.
/// For |p| < q, p < -1 write q = a|p| + b (0 < b < |p|): gaps `(2b, 2(|p|-b))`.
pub fn neighbor_peak_gaps(p: i64, q: i64) -> Result<(i64, i64)> {
    if q < 2 || p >= 0 {
        return Err(Error::OutOfDomain(
            "peak gaps are defined for q >= 2 and p < 0".into(),
        ));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NonCoprime { p, q });
    }
    let ap = -p;
    if ap > q {
        let b = ap % q;
        Ok((2 * b, 2 * (q - b)))
    } else if ap > 1 && ap < q {
        let b = q % ap;
        Ok((2 * b, 2 * (ap - b)))
    } else {
        Err(Error::OutOfDomain(
            "peak gaps require |p| > q or 1 < |p| < q".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(p: i64, q: i64, tb1: i64, rot1: i64, tb2: i64, rot2: i64) -> LinkInvariants {
        normalize(LinkInvariants::new(p, q, tb1, rot1, tb2, rot2).unwrap()).unwrap()
    }

    #[test]
    fn normalize_reverses_second_component() {
        let raw = LinkInvariants::new(3, -2, -1, 1, -6, 1).unwrap();
        let n = normalize(raw).unwrap();
        assert_eq!((n.p, n.q, n.rot1, n.rot2), (-3, 2, 1, -1));
        assert_eq!((n.tb1, n.tb2), (-1, -6));
        assert!(n.normalized);
    }

    #[test]
    fn normalize_identity_when_q_nonnegative() {
        let raw = LinkInvariants::new(3, 2, -1, 0, 1, 0).unwrap();
        let n = normalize(raw).unwrap();
        assert_eq!(n, LinkInvariants { normalized: true, ..raw });
    }

    #[test]
    fn normalize_rejects_noncoprime() {
        assert!(matches!(
            LinkInvariants::new(2, 4, -1, 0, 0, 0),
            Err(Error::NonCoprime { .. })
        ));
    }

    #[test]
    fn unknot_range() {
        assert!(unknot_realizable(-1, 0));
        assert!(unknot_realizable(-3, 2));
        assert!(!unknot_realizable(-3, 3));
        assert!(!unknot_realizable(-2, 0));
        assert!(!unknot_realizable(0, 1));
    }

    #[test]
    fn max_tb2_values() {
        for m in 1..=5 {
            assert_eq!(max_tb2(3, 2, m).unwrap(), 1);
        }
        assert_eq!(max_tb2(-1, 3, 1).unwrap(), -5);
        assert_eq!(max_tb2(-3, 2, 1).unwrap(), -6);
        assert!(max_tb2(3, 1, 1).is_err());
    }

    #[test]
    fn peaks_examples() {
        let pk = peaks(-3, 2, 1, 0).unwrap();
        assert_eq!(pk.iter().map(|p| p.rot2).collect::<Vec<_>>(), vec![-1, 1]);

        let pk = peaks(-1, 3, 1, 0).unwrap();
        assert_eq!(pk.iter().map(|p| p.rot2).collect::<Vec<_>>(), vec![0]);
        assert_eq!(max_tb2(-1, 3, 1).unwrap(), -5);

        let pk = peaks(-1, 2, 4, 1).unwrap();
        assert_eq!(pk.iter().map(|p| p.rot2).collect::<Vec<_>>(), vec![-1, 1]);
        assert_eq!(max_tb2(-1, 2, 4).unwrap(), -2);
    }

    #[test]
    fn peaks_positive_case_single_zero() {
        for (p, q) in [(3, 2), (2, 3), (1, 4)] {
            let pk = peaks(p, q, 2, 1).unwrap();
            assert_eq!(pk.len(), 1);
            assert_eq!(pk[0].rot2, 0);
        }
    }

    #[test]
    fn peaks_case_b1_tracks_rot1() {
        // p = -2, q = 5, m = 1: mp + q = 3 > 0.
        let pk = peaks(-2, 5, 2, 1).unwrap();
        assert_eq!(pk.iter().map(|p| p.rot2).collect::<Vec<_>>(), vec![-2]);
    }

    #[test]
    fn realizable_examples() {
        assert_eq!(
            realizable(&inv(3, 2, -1, 0, 1, 0)).unwrap(),
            (true, CaseLabel::plain(Case::C3aPos))
        );
        assert!(!realizable(&inv(3, 2, -1, 0, 1, 2)).unwrap().0);
        assert!(realizable(&inv(-3, 2, -1, 0, -7, 0)).unwrap().0);
    }

    #[test]
    fn realizable_rejects_unnormalized() {
        let raw = LinkInvariants::new(3, -2, -1, 0, 1, 0).unwrap();
        assert!(matches!(realizable(&raw), Err(Error::NotNormalized)));
    }

    #[test]
    fn realizable_q0_and_q1_are_split_unknot_conditions() {
        assert!(realizable(&inv(1, 0, -1, 0, -4, 3)).unwrap().0);
        assert!(!realizable(&inv(1, 0, -1, 0, -4, 4)).unwrap().0);
        assert!(realizable(&inv(5, 1, -2, -1, -3, 0)).unwrap().0);
        assert!(!realizable(&inv(5, 1, -2, 0, -3, 0)).unwrap().0);
    }

    #[test]
    fn realizable_p_minus_one_role_swap() {
        // tb1 = -1 > -q forces the swapped view: L1 as cable of L2 is the
        // b1 case with m2 = 3 < q = 4... here instead take tb2 shallow.
        // (q, m) = (2, 3): view 1 peak set at tb2 = -2; a tuple with tb2 = -1
        // fails view 1 but tb1 = -3 <= -q can carry the cable structure.
        let t = inv(-1, 2, -3, 0, -1, 0);
        let (ok, label) = realizable(&t).unwrap();
        assert!(ok);
        assert!(label.swapped);
        // The same tuple with roles already in view-1 order.
        let t = inv(-1, 2, -1, 0, -3, 0);
        let (ok, label) = realizable(&t).unwrap();
        assert!(ok);
        assert!(!label.swapped);
    }

    #[test]
    fn mountain_range_negative_trefoil_companion() {
        let mr = mountain_range(-3, 2, 1, 0, -8).unwrap();
        assert_eq!(mr.max_tb2, -6);
        assert_eq!(mr.peaks.iter().map(|p| p.rot2).collect::<Vec<_>>(), vec![-1, 1]);
        assert!(mr.contains(0, -7));
        assert!(mr.contains(-1, -6) && mr.contains(1, -6));
        assert!(!mr.contains(0, -6));
        assert_eq!(
            mr.points,
            vec![
                (-1, -6),
                (1, -6),
                (-2, -7),
                (0, -7),
                (2, -7),
                (-3, -8),
                (-1, -8),
                (1, -8),
                (3, -8),
            ]
        );
    }

    #[test]
    fn mountain_range_positive_trefoil() {
        let mr = mountain_range(3, 2, 1, 0, -1).unwrap();
        let expect: Vec<(i64, i64)> =
            vec![(0, 1), (-1, 0), (1, 0), (-2, -1), (0, -1), (2, -1)];
        assert_eq!(mr.points, expect);
    }

    #[test]
    fn mountain_range_width_below_single_peak() {
        let mr = mountain_range(3, 2, 1, 0, -5).unwrap();
        for s in 0..=6 {
            let tb = 1 - s;
            if tb < -5 {
                break;
            }
            let width = mr.points.iter().filter(|&&(_, t)| t == tb).count() as i64;
            assert_eq!(width, s + 1);
        }
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(neighbor_peak_gaps(-3, 2).unwrap(), (2, 2));
        assert_eq!(neighbor_peak_gaps(-5, 2).unwrap(), (2, 2));
        assert_eq!(neighbor_peak_gaps(-2, 5).unwrap(), (2, 2));
        assert_eq!(neighbor_peak_gaps(-7, 3).unwrap(), (2, 4));
        assert!(neighbor_peak_gaps(-1, 3).is_err());
    }

    #[test]
    fn gaps_match_actual_peak_spacing() {
        for (p, q) in [(-5i64, 2i64), (-7, 2), (-7, 3), (-3, 7), (-2, 5), (-4, 9)] {
            if gcd(p, q) != 1 {
                continue;
            }
            // Large m with rot1 = 0 so couplings never bind.
            let m = 4 * q + 4 * (-p);
            let rots: Vec<i64> = peaks(p, q, m - 1, 0)
                .unwrap()
                .iter()
                .map(|pk| pk.rot2)
                .collect();
            let (g1, g2) = neighbor_peak_gaps(p, q).unwrap();
            for w in rots.windows(2) {
                let gap = w[1] - w[0];
                assert!(
                    gap == g1 || gap == g2,
                    "(p,q)=({p},{q}): gap {gap} not in {{{g1},{g2}}}, peaks {rots:?}"
                );
            }
        }
    }

    #[test]
    fn parity_holds_on_all_peaks() {
        for p in [-9i64, -5, -4, -3, -2, -1, 1, 2, 3, 5] {
            for q in 2..=9i64 {
                if gcd(p, q) != 1 {
                    continue;
                }
                for m in 1..=8 {
                    let top = max_tb2(p, q, m).unwrap();
                    let mut rot1 = -m + 1;
                    while rot1 <= m - 1 {
                        for pk in peaks(p, q, m, rot1).unwrap() {
                            assert_eq!((top + pk.rot2).rem_euclid(2), 1);
                        }
                        rot1 += 2;
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_symmetry_of_peak_sets() {
        for (p, q, m) in [(-3i64, 2i64, 3i64), (-2, 5, 4), (-1, 3, 5), (3, 4, 2), (-5, 3, 2)] {
            let mut rot1 = -m + 1;
            while rot1 <= m - 1 {
                let a: Vec<i64> = peaks(p, q, m, rot1).unwrap().iter().map(|x| x.rot2).collect();
                let mut b: Vec<i64> = peaks(p, q, m, -rot1)
                    .unwrap()
                    .iter()
                    .map(|x| -x.rot2)
                    .collect();
                b.sort_unstable();
                assert_eq!(a, b, "(p,q,m,rot1)=({p},{q},{m},{rot1})");
                rot1 += 2;
            }
        }
    }
}
