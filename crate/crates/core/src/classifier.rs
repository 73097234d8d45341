//! Decision procedure for Legendrian isotopy of cable links: two oriented
//! links of this family are Legendrian isotopic exactly when their oriented
//! link types and classical invariants agree. Realizable tuples below the
//! maximal tb come with destabilization witnesses: the set of peaks from
//! which the tuple is reached by stabilizations.

use serde::{Deserialize, Serialize};

use crate::ranges::{
    self, case_of, max_tb2, peaks, realizable, LinkInvariants, Peak,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Isotopic,
    NotIsotopic,
    NotRealizable,
    OutOfScope,
}

/// One way of destabilizing to a peak: `pos + neg = max_tb2 - tb2` and
/// `rot2 = peak.rot2 + pos - neg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub peak: Peak,
    pub pos_stabs: i64,
    pub neg_stabs: i64,
}

/// All peaks reaching the tuple. When `swapped` is set (possible only for
/// p = -1), the entries describe destabilizations of the first component,
/// with `(rot, tb)` read as `(rot1, tb1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizationWitness {
    pub swapped: bool,
    pub max_tb: i64,
    pub entries: Vec<WitnessEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub reason: String,
    pub witness: Option<DestabilizationWitness>,
}

fn witness_in_view(
    p: i64,
    q: i64,
    m: i64,
    rot1: i64,
    tb2: i64,
    rot2: i64,
    swapped: bool,
) -> Result<DestabilizationWitness> {
    let top = max_tb2(p, q, m)?;
    let s = top - tb2;
    let mut entries = Vec::new();
    for pk in peaks(p, q, m, rot1)? {
        let d = rot2 - pk.rot2;
        if d.abs() <= s && (d - s).rem_euclid(2) == 0 {
            entries.push(WitnessEntry {
                peak: pk,
                pos_stabs: (s + d) / 2,
                neg_stabs: (s - d) / 2,
            });
        }
    }
    Ok(DestabilizationWitness {
        swapped,
        max_tb: top,
        entries,
    })
}

/// Destabilization certificate for a realizable tuple with q >= 2.
pub fn destabilization_witness(inv: &LinkInvariants) -> Result<DestabilizationWitness> {
    let (ok, label) = realizable(inv)?;
    if !ok || inv.q < 2 {
        return Err(Error::NotRealizable(format!(
            "no destabilization witness: tuple {:?} not realizable with q >= 2",
            inv
        )));
    }
    if label.swapped {
        witness_in_view(inv.p, inv.q, -inv.tb2, inv.rot2, inv.tb1, inv.rot1, true)
    } else {
        witness_in_view(inv.p, inv.q, inv.m(), inv.rot1, inv.tb2, inv.rot2, false)
    }
}

/// Theorem-level comparison of two normalized tuples.
///
/// Link-type agreement: q must match always; p must match for q >= 2 (for
/// q = 0 coprimality forces p = ±1 and the pair is split, for q = 1 every p
/// gives the Hopf link, so p carries no link-type information there).
pub fn classify_cable(a: &LinkInvariants, b: &LinkInvariants) -> Result<Verdict> {
    let (ok_a, _) = realizable(a)?;
    let (ok_b, _) = realizable(b)?;
    if !ok_a || !ok_b {
        let which = match (ok_a, ok_b) {
            (false, false) => "both tuples are",
            (false, true) => "the first tuple is",
            _ => "the second tuple is",
        };
        return Ok(Verdict {
            outcome: Outcome::NotRealizable,
            reason: format!("{which} not realizable by a Legendrian cable link"),
            witness: None,
        });
    }
    if a.q != b.q {
        return Ok(Verdict {
            outcome: Outcome::NotIsotopic,
            reason: format!(
                "oriented link types differ: lk(L1, L2) = {} vs {}",
                a.q, b.q
            ),
            witness: None,
        });
    }
    if a.q >= 2 && a.p != b.p {
        return Ok(Verdict {
            outcome: Outcome::NotIsotopic,
            reason: format!("oriented link types differ: p = {} vs {}", a.p, b.p),
            witness: None,
        });
    }
    let ta = (a.tb1, a.rot1, a.tb2, a.rot2);
    let tb = (b.tb1, b.rot1, b.tb2, b.rot2);
    if ta != tb {
        return Ok(Verdict {
            outcome: Outcome::NotIsotopic,
            reason: format!("classical invariants differ: {ta:?} vs {tb:?}"),
            witness: None,
        });
    }
    let witness = if a.q >= 2 {
        Some(destabilization_witness(a)?)
    } else {
        None
    };
    Ok(Verdict {
        outcome: Outcome::Isotopic,
        reason: "oriented link types and classical invariants agree".into(),
        witness,
    })
}

/// Number of stabilizations after which the cones of two peaks first merge,
/// when the peaks are adjacent (rotation gap 2b or 2(q-b) resp. 2(|p|-b)).
/// Non-adjacent peaks merge via intermediate peaks and yield `None`.
pub fn peak_identification(
    p: i64,
    q: i64,
    m: i64,
    rot1: i64,
    peak_a: &Peak,
    peak_b: &Peak,
) -> Result<Option<i64>> {
    match case_of(p, q, m) {
        ranges::Case::C3b2i | ranges::Case::C3b2ii => {}
        other => {
            return Err(Error::OutOfDomain(format!(
                "peak identification applies to cases 3(b2-i)/3(b2-ii), got {other:?}"
            )))
        }
    }
    let pks = peaks(p, q, m, rot1)?;
    for pk in [peak_a, peak_b] {
        if !pks.iter().any(|x| x.rot2 == pk.rot2) {
            return Err(Error::OutOfDomain(format!(
                "rot2 = {} is not a peak of (p, q, m, rot1) = ({p}, {q}, {m}, {rot1})",
                pk.rot2
            )));
        }
    }
    let gap = (peak_a.rot2 - peak_b.rot2).abs();
    if gap == 0 {
        return Ok(Some(0));
    }
    let (g1, g2) = ranges::neighbor_peak_gaps(p, q)?;
    if gap == g1 || gap == g2 {
        Ok(Some(gap / 2))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranges::normalize;

    fn inv(p: i64, q: i64, tb1: i64, rot1: i64, tb2: i64, rot2: i64) -> LinkInvariants {
        normalize(LinkInvariants::new(p, q, tb1, rot1, tb2, rot2).unwrap()).unwrap()
    }

    #[test]
    fn classify_reflexive_on_peak() {
        let a = inv(3, 2, -1, 0, 1, 0);
        let v = classify_cable(&a, &a).unwrap();
        assert_eq!(v.outcome, Outcome::Isotopic);
        let w = v.witness.unwrap();
        assert_eq!(w.entries.len(), 1);
        assert_eq!(
            (w.entries[0].pos_stabs, w.entries[0].neg_stabs),
            (0, 0)
        );
    }

    #[test]
    fn classify_distinguishes_peaks() {
        let a = inv(-3, 2, -1, 0, -6, 1);
        let b = inv(-3, 2, -1, 0, -6, -1);
        let v = classify_cable(&a, &b).unwrap();
        assert_eq!(v.outcome, Outcome::NotIsotopic);
    }

    #[test]
    fn classify_rejects_unrealizable() {
        let a = inv(3, 2, -1, 0, 2, 1);
        let v = classify_cable(&a, &a).unwrap();
        assert_eq!(v.outcome, Outcome::NotRealizable);
    }

    #[test]
    fn classify_hopf_links_ignore_p() {
        let a = inv(2, 1, -1, 0, -2, 1);
        let b = inv(7, 1, -1, 0, -2, 1);
        assert_eq!(classify_cable(&a, &b).unwrap().outcome, Outcome::Isotopic);
        let c = inv(7, 1, -1, 0, -2, -1);
        assert_eq!(classify_cable(&a, &c).unwrap().outcome, Outcome::NotIsotopic);
    }

    #[test]
    fn witness_two_entries_in_valley() {
        let w = destabilization_witness(&inv(-3, 2, -1, 0, -7, 0)).unwrap();
        assert_eq!(w.max_tb, -6);
        assert_eq!(w.entries.len(), 2);
        assert_eq!(
            w.entries
                .iter()
                .map(|e| (e.peak.rot2, e.pos_stabs, e.neg_stabs))
                .collect::<Vec<_>>(),
            vec![(-1, 1, 0), (1, 0, 1)]
        );
    }

    #[test]
    fn witness_below_single_positive_peak() {
        let w = destabilization_witness(&inv(3, 2, -1, 0, -1, 0)).unwrap();
        assert_eq!(w.entries.len(), 1);
        assert_eq!(
            (w.entries[0].peak.rot2, w.entries[0].pos_stabs, w.entries[0].neg_stabs),
            (0, 1, 1)
        );
    }

    #[test]
    fn witness_soundness() {
        for inv_case in [
            inv(-3, 2, -2, 1, -9, 2),
            inv(-1, 4, -5, 2, -8, -1),
            inv(2, 5, -3, 0, -4, 1),
        ] {
            if !realizable(&inv_case).unwrap().0 {
                continue;
            }
            let w = destabilization_witness(&inv_case).unwrap();
            assert!(!w.entries.is_empty());
            let (rot, tb) = if w.swapped {
                (inv_case.rot1, inv_case.tb1)
            } else {
                (inv_case.rot2, inv_case.tb2)
            };
            for e in &w.entries {
                assert_eq!(e.peak.rot2 + e.pos_stabs - e.neg_stabs, rot);
                assert_eq!(w.max_tb - e.pos_stabs - e.neg_stabs, tb);
                assert!(e.pos_stabs >= 0 && e.neg_stabs >= 0);
            }
        }
    }

    #[test]
    fn swapped_witness_reads_first_component() {
        let t = inv(-1, 2, -4, 1, -1, 0);
        let (ok, label) = realizable(&t).unwrap();
        assert!(ok && label.swapped);
        let w = destabilization_witness(&t).unwrap();
        assert!(w.swapped);
        for e in &w.entries {
            assert_eq!(e.peak.rot2 + e.pos_stabs - e.neg_stabs, t.rot1);
            assert_eq!(w.max_tb - e.pos_stabs - e.neg_stabs, t.tb1);
        }
    }

    #[test]
    fn peak_identification_examples() {
        let pks = peaks(-3, 2, 1, 0).unwrap();
        let (lo, hi) = (pks[0], pks[1]);
        assert_eq!(peak_identification(-3, 2, 1, 0, &hi, &lo).unwrap(), Some(1));
        assert_eq!(peak_identification(-3, 2, 1, 0, &hi, &hi).unwrap(), Some(0));

        let pks5 = peaks(-5, 2, 1, 0).unwrap();
        assert_eq!(
            pks5.iter().map(|p| p.rot2).collect::<Vec<_>>(),
            vec![-3, -1, 1, 3]
        );
        let minus1 = pks5[1];
        let plus3 = pks5[3];
        assert_eq!(
            peak_identification(-5, 2, 1, 0, &plus3, &minus1).unwrap(),
            None
        );
    }
}
