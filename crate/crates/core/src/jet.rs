//! Invariant translation between the one-jet space of the circle and the
//! complement of a maximal-tb unknot in the three-sphere, the torus-knot
//! decision procedure in the jet space, and transverse classification via
//! self-linking numbers.
//!
//! A Legendrian knot in the jet space homotopic to `n` times the generator
//! maps to a cable of the complement's core unknot `K0` (which has tb = -1,
//! rot = 0); the invariants translate by `tb -> tb - n^2`, `rot -> rot`.

use serde::{Deserialize, Serialize};

use crate::classifier::{classify_cable, Verdict};
use crate::ranges::{
    max_tb2, normalize, peaks, unknot_realizable, LinkInvariants,
};
use crate::{gcd, Error, Result};

/// Classical invariants of an oriented Legendrian torus knot in the jet space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JetKnotInvariants {
    /// Homotopy class (multiples of the generator of the fundamental group).
    pub n: i64,
    /// Cable slope of the image torus knot; coprime to n.
    pub p: i64,
    pub tb: i64,
    pub rot: i64,
}

/// Transverse link / knot invariants. `sl1` is absent in the jet case, where
/// the companion is the fixed core unknot (self-linking -1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransverseInvariants {
    pub p: i64,
    pub q: i64,
    pub sl1: Option<i64>,
    pub sl2: i64,
}

/// Translates jet-space invariants to the cable tuple in the sphere and
/// normalizes (an input with n < 0 comes out with the second component's
/// orientation reversed: q = -n, p and rot negated).
pub fn jet_to_sphere(k: &JetKnotInvariants) -> Result<LinkInvariants> {
    if gcd(k.p, k.n) != 1 {
        return Err(Error::NonCoprime { p: k.p, q: k.n });
    }
    let raw = LinkInvariants {
        p: k.p,
        q: k.n,
        tb1: -1,
        rot1: 0,
        tb2: k.tb - k.n * k.n,
        rot2: k.rot,
        normalized: k.n >= 0,
    };
    normalize(raw)
}

/// Inverts the two translation formulas on a normalized cable tuple whose
/// companion is the core unknot. Round-trips `jet_to_sphere` exactly for
/// n >= 0; an n < 0 input round-trips to its reversed representative
/// `(n, p, tb, rot) -> (-n, -p, tb, -rot)`.
pub fn sphere_to_jet(inv: &LinkInvariants) -> Result<JetKnotInvariants> {
    if inv.tb1 != -1 || inv.rot1 != 0 {
        return Err(Error::InvalidInput(format!(
            "not a jet-space image: companion invariants ({}, {}) != (-1, 0)",
            inv.tb1, inv.rot1
        )));
    }
    Ok(JetKnotInvariants {
        n: inv.q,
        p: inv.p,
        tb: inv.tb2 + inv.q * inv.q,
        rot: inv.rot2,
    })
}

/// Theorem-level comparison of two oriented Legendrian torus knots in the jet
/// space: delegate to the cable classifier on the translated tuples. With the
/// companion fixed at tb = -1, the p = -1 role interchange never applies.
pub fn classify_jet(a: &JetKnotInvariants, b: &JetKnotInvariants) -> Result<Verdict> {
    let ia = jet_to_sphere(a)?;
    let ib = jet_to_sphere(b)?;
    classify_cable(&ia, &ib)
}

/// Maximal tb of a Legendrian (p, n) torus knot in the jet space, n >= 2.
pub fn jet_max_tb(n: i64, p: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::OutOfDomain(format!("jet_max_tb requires n >= 2, got {n}")));
    }
    if gcd(p, n) != 1 || p == 0 {
        return Err(Error::NonCoprime { p, q: n });
    }
    Ok(max_tb2(p, n, 1)? + n * n)
}

/// Self-linking number of the positive transverse push-off.
pub fn transverse_from_legendrian(tb: i64, rot: i64) -> i64 {
    tb - rot
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlStatus {
    Realizable,
    No,
    /// Only reachable below the given floor.
    BelowFloor,
}

/// Self-linking values of the companion unknot: any odd sl <= -1, realized by
/// `(tb, rot) = (-m, -m - sl)` for every m >= (1 - sl)/2.
fn sl_unknot_ok(sl: i64) -> bool {
    sl <= -1 && sl.rem_euclid(2) == 1
}

/// One directed view of cable transverse realizability: the companion has
/// self-linking `sl_comp`, the cable component must reach `sl_cab`. The floor
/// bounds the second component's tb: in the direct view the cable is the
/// second component (its stabilization depth is capped), in the swapped view
/// (p = -1 only) the companion is (so its tb = -m is capped instead).
/// Searches all compatible companion representatives
/// `(tb, rot) = (-m, -m - sl_comp)`; the peak data stabilizes once m is large
/// enough, so the search range below is exhaustive.
fn sl_view(
    p: i64,
    q: i64,
    sl_comp: i64,
    sl_cab: i64,
    floor: i64,
    companion_is_second: bool,
) -> Result<SlStatus> {
    if !sl_unknot_ok(sl_comp) || sl_cab.rem_euclid(2) != 1 {
        return Ok(SlStatus::No);
    }
    let m_min = (1 - sl_comp) / 2;
    let m_max = m_min + 2 * q + 2 * p.abs() + 2;
    let mut below_floor_only = false;
    for m in m_min..=m_max {
        let rot1 = -m - sl_comp;
        if !unknot_realizable(-m, rot1) {
            continue;
        }
        let top = max_tb2(p, q, m)?;
        for pk in peaks(p, q, m, rot1)? {
            // Stabilizations move sl by 0 (negative) or -2 (positive).
            let sl_peak = top - pk.rot2;
            if sl_cab > sl_peak {
                continue;
            }
            let deep_enough = if companion_is_second {
                -m >= floor
            } else {
                (sl_peak - sl_cab) / 2 <= top - floor
            };
            if deep_enough {
                return Ok(SlStatus::Realizable);
            }
            below_floor_only = true;
        }
    }
    Ok(if below_floor_only {
        SlStatus::BelowFloor
    } else {
        SlStatus::No
    })
}

/// Whether `(sl1, sl2)` arises from a realizable Legendrian cable tuple with
/// `tb2 >= floor` (both role assignments for p = -1). Errors with
/// `FloorTooShallow` when the only candidates sit below the floor.
pub fn transverse_cable_realizable(
    p: i64,
    q: i64,
    sl1: i64,
    sl2: i64,
    floor: i64,
) -> Result<bool> {
    if gcd(p, q) != 1 {
        return Err(Error::NonCoprime { p, q });
    }
    if q < 0 {
        return Err(Error::NotNormalized);
    }
    if q <= 1 {
        return Ok(sl_unknot_ok(sl1) && sl_unknot_ok(sl2));
    }
    let direct = sl_view(p, q, sl1, sl2, floor, false)?;
    let swapped = if p == -1 {
        sl_view(p, q, sl2, sl1, floor, true)?
    } else {
        SlStatus::No
    };
    match (direct, swapped) {
        (SlStatus::Realizable, _) | (_, SlStatus::Realizable) => Ok(true),
        (SlStatus::BelowFloor, _) | (_, SlStatus::BelowFloor) => {
            Err(Error::FloorTooShallow { floor })
        }
        _ => Ok(false),
    }
}

/// Jet-space transverse realizability: the companion is the fixed core unknot
/// (m = 1, rot = 0), and the jet self-linking is offset by n^2.
pub fn transverse_jet_realizable(n: i64, p: i64, sl: i64, floor: i64) -> Result<bool> {
    if gcd(p, n) != 1 {
        return Err(Error::NonCoprime { p, q: n });
    }
    let q = n.abs();
    let pp = if n < 0 { -p } else { p };
    let sl_image = sl - n * n;
    if q <= 1 {
        return Ok(sl_unknot_ok(sl_image));
    }
    if sl_image.rem_euclid(2) != 1 {
        return Ok(false);
    }
    let top = max_tb2(pp, q, 1)?;
    let mut below = false;
    for pk in peaks(pp, q, 1, 0)? {
        let sl_peak = top - pk.rot2;
        if sl_image > sl_peak {
            continue;
        }
        let pos = (sl_peak - sl_image) / 2;
        if pos <= top - floor {
            return Ok(true);
        }
        below = true;
    }
    if below {
        Err(Error::FloorTooShallow { floor })
    } else {
        Ok(false)
    }
}

/// Maximal realizable sl2 for the cable family at fixed sl1, or for the jet
/// family when `sl1` is `None` (then returned in jet coordinates).
pub fn max_sl2(p: i64, q: i64, sl1: Option<i64>) -> Result<i64> {
    match sl1 {
        None => {
            let q_abs = q.abs();
            let pp = if q < 0 { -p } else { p };
            if q_abs <= 1 {
                return Ok(-1 + q * q);
            }
            let top = max_tb2(pp, q_abs, 1)?;
            let best = peaks(pp, q_abs, 1, 0)?
                .iter()
                .map(|pk| top - pk.rot2)
                .max()
                .expect("peak set is nonempty");
            Ok(best + q * q)
        }
        Some(sl1) => {
            if !sl_unknot_ok(sl1) {
                return Err(Error::OutOfDomain(format!(
                    "sl1 = {sl1} is not a transverse unknot value"
                )));
            }
            if q <= 1 {
                return Ok(-1);
            }
            let m_min = (1 - sl1) / 2;
            let m_max = m_min + 2 * q + 2 * p.abs() + 2;
            let mut best = i64::MIN;
            for m in m_min..=m_max {
                let rot1 = -m - sl1;
                if !unknot_realizable(-m, rot1) {
                    continue;
                }
                let top = max_tb2(p, q, m)?;
                for pk in peaks(p, q, m, rot1)? {
                    best = best.max(top - pk.rot2);
                }
            }
            if p == -1 {
                // Swapped view: sl2 is the companion's value; scan odd values
                // from -1 down until they can no longer beat the direct bound.
                let deep = -(1i64 << 40);
                let mut v = -1;
                while v > best {
                    if sl_view(p, q, v, sl1, deep, true)? == SlStatus::Realizable {
                        return Ok(v);
                    }
                    v -= 2;
                }
            }
            Ok(best)
        }
    }
}

/// Default enumeration floor: a fixed multiple of the peak spread below the
/// maximal tb, deep enough that every realizable sl value at or above the
/// projection maximum is visible (each stabilization moves sl by 0 or -2).
pub fn default_transverse_floor(p: i64, q: i64, sl1: Option<i64>) -> Result<i64> {
    if q.abs() <= 1 {
        return Ok(-24);
    }
    let (m_lo, m_hi, q_norm, p_norm) = match sl1 {
        None => (1, 1, q.abs(), if q < 0 { -p } else { p }),
        Some(sl1) => {
            if q < 0 {
                return Err(Error::NotNormalized);
            }
            let m_min = (1 - sl1) / 2;
            (m_min, m_min + 2 * q + 2 * p.abs() + 2, q, p)
        }
    };
    let mut floor = i64::MAX;
    for m in m_lo..=m_hi {
        let rot1 = match sl1 {
            None => 0,
            Some(sl1) => -m - sl1,
        };
        if !unknot_realizable(-m, rot1) {
            continue;
        }
        let top = max_tb2(p_norm, q_norm, m)?;
        let pks = peaks(p_norm, q_norm, m, rot1)?;
        let spread = pks.last().unwrap().rot2 - pks.first().unwrap().rot2;
        floor = floor.min(top - 4 * (spread + 2));
    }
    Ok(floor)
}

/// Transverse classification: two realizable transverse links of this family
/// are transversely isotopic exactly when their oriented link types and
/// self-linking numbers agree.
pub fn transverse_realizable_and_classify(
    a: &TransverseInvariants,
    b: &TransverseInvariants,
    floor: i64,
) -> Result<Verdict> {
    use crate::classifier::Outcome;
    let check = |t: &TransverseInvariants| -> Result<bool> {
        match t.sl1 {
            Some(sl1) => transverse_cable_realizable(t.p, t.q, sl1, t.sl2, floor),
            None => transverse_jet_realizable(t.q, t.p, t.sl2, floor),
        }
    };
    let ok_a = check(a)?;
    let ok_b = check(b)?;
    if !ok_a || !ok_b {
        let which = match (ok_a, ok_b) {
            (false, false) => "both tuples are",
            (false, true) => "the first tuple is",
            _ => "the second tuple is",
        };
        return Ok(Verdict {
            outcome: Outcome::NotRealizable,
            reason: format!("{which} not realizable by a transverse link of this family"),
            witness: None,
        });
    }
    // Oriented type: compare q (and p when it is a link-type invariant).
    let norm = |t: &TransverseInvariants| -> (i64, i64) {
        if t.q < 0 {
            (-t.p, -t.q)
        } else {
            (t.p, t.q)
        }
    };
    let (pa, qa) = norm(a);
    let (pb, qb) = norm(b);
    if qa != qb || (qa >= 2 && pa != pb) {
        return Ok(Verdict {
            outcome: Outcome::NotIsotopic,
            reason: format!(
                "oriented link types differ: (p, q) = ({pa}, {qa}) vs ({pb}, {qb})"
            ),
            witness: None,
        });
    }
    if a.sl1.or(Some(-1)) != b.sl1.or(Some(-1)) || a.sl2 != b.sl2 {
        return Ok(Verdict {
            outcome: Outcome::NotIsotopic,
            reason: format!(
                "self-linking numbers differ: ({:?}, {}) vs ({:?}, {})",
                a.sl1, a.sl2, b.sl1, b.sl2
            ),
            witness: None,
        });
    }
    Ok(Verdict {
        outcome: Outcome::Isotopic,
        reason: "oriented link types and self-linking numbers agree".into(),
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::Outcome;

    #[test]
    fn translation_examples() {
        let k = JetKnotInvariants { n: 2, p: 3, tb: 5, rot: 0 };
        let s = jet_to_sphere(&k).unwrap();
        assert_eq!((s.p, s.q, s.tb1, s.rot1, s.tb2, s.rot2), (3, 2, -1, 0, 1, 0));

        let k = JetKnotInvariants { n: 2, p: -3, tb: -2, rot: 1 };
        let s = jet_to_sphere(&k).unwrap();
        assert_eq!((s.p, s.q, s.tb2, s.rot2), (-3, 2, -6, 1));

        let k = JetKnotInvariants { n: 0, p: 1, tb: -1, rot: 0 };
        let s = jet_to_sphere(&k).unwrap();
        assert_eq!(s.q, 0);
    }

    #[test]
    fn round_trip_nonnegative_n() {
        for (n, p, tb, rot) in [(2i64, 3i64, 5i64, 0i64), (3, -2, -1, 2), (0, 1, -3, 0), (5, 4, 1, -2)] {
            let k = JetKnotInvariants { n, p, tb, rot };
            let back = sphere_to_jet(&jet_to_sphere(&k).unwrap()).unwrap();
            assert_eq!(back, k);
        }
    }

    #[test]
    fn round_trip_negative_n_reverses() {
        let k = JetKnotInvariants { n: -2, p: 3, tb: 5, rot: 1 };
        let back = sphere_to_jet(&jet_to_sphere(&k).unwrap()).unwrap();
        assert_eq!(back, JetKnotInvariants { n: 2, p: -3, tb: 5, rot: -1 });
    }

    #[test]
    fn classify_jet_examples() {
        let a = JetKnotInvariants { n: 2, p: -3, tb: -2, rot: 1 };
        let b = JetKnotInvariants { n: 2, p: -3, tb: -2, rot: -1 };
        assert_eq!(classify_jet(&a, &a).unwrap().outcome, Outcome::Isotopic);
        assert_eq!(classify_jet(&a, &b).unwrap().outcome, Outcome::NotIsotopic);

        let c = JetKnotInvariants { n: 2, p: 3, tb: 6, rot: 0 };
        assert_eq!(classify_jet(&c, &c).unwrap().outcome, Outcome::NotRealizable);
    }

    #[test]
    fn jet_max_tb_values() {
        assert_eq!(jet_max_tb(2, 3).unwrap(), 5);
        assert_eq!(jet_max_tb(2, -3).unwrap(), -2);
        assert_eq!(jet_max_tb(3, -1).unwrap(), 4);
        assert!(jet_max_tb(1, 2).is_err());
    }

    #[test]
    fn sl_from_legendrian() {
        assert_eq!(transverse_from_legendrian(-1, 0), -1);
        assert_eq!(transverse_from_legendrian(1, 0), 1);
        assert_eq!(transverse_from_legendrian(-6, 1), -7);
    }

    #[test]
    fn transverse_cable_examples() {
        assert!(transverse_cable_realizable(3, 2, -1, 1, -20).unwrap());
        assert!(!transverse_cable_realizable(3, 2, -1, 2, -20).unwrap());
        assert_eq!(max_sl2(3, 2, Some(-1)).unwrap(), 1);
    }

    #[test]
    fn transverse_classify_self() {
        let a = TransverseInvariants { p: 3, q: 2, sl1: Some(-1), sl2: 1 };
        let v = transverse_realizable_and_classify(&a, &a, -20).unwrap();
        assert_eq!(v.outcome, Outcome::Isotopic);
    }

    #[test]
    fn floor_too_shallow_is_reported() {
        // sl2 = -1 needs one positive stabilization below the (3,2) peak
        // (sl drops from 1 to -1 at tb2 = 0), invisible with the floor at 1.
        let r = transverse_cable_realizable(3, 2, -1, -1, 1);
        assert!(matches!(r, Err(Error::FloorTooShallow { .. })));
        assert!(transverse_cable_realizable(3, 2, -1, -1, -3).unwrap());
    }

    #[test]
    fn jet_transverse_matches_translation() {
        // n = 2, p = 3: max jet tb = 5 at rot 0: max sl = 5.
        assert!(transverse_jet_realizable(2, 3, 5, -20).unwrap());
        assert!(!transverse_jet_realizable(2, 3, 7, -20).unwrap());
        assert_eq!(max_sl2(3, 2, None).unwrap(), 5);
        // Odd n flips the parity through the n^2 offset.
        assert!(transverse_jet_realizable(3, 2, 2 + 9 - 2 - 3, -20).unwrap());
    }
}
