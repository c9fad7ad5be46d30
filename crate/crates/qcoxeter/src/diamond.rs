//! The diamond property as an executable search: direct-diamond testing, the
//! dominant-case witness construction, the anti-dominant tandem-gallery
//! iteration, the intermediate reduction, certificates with independent
//! replay verification, and a brute-force breadth-first oracle.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::geometry::{
    dist_vertex_region, infinite_gallery_word, is_umbrella, Alcove, Chamber, Gallery,
    GeometryError, MarkedAlcove, Region,
};
use crate::group::{GroupContext, GroupElement};
use crate::linalg::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Intermediate,
    Antidominant,
    DominantShortcut,
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Phase::Intermediate => "intermediate",
            Phase::Antidominant => "antidominant",
            Phase::DominantShortcut => "dominant-shortcut",
        };
        write!(f, "{}", s)
    }
}

/// One recorded conjugation step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranscriptStep {
    pub conjugator: usize,
    pub element: GroupElement,
    pub length: u64,
    pub phase: Phase,
}

/// The witness data of the main theorem, replayable from the original element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondCertificate {
    pub original: GroupElement,
    pub conjugators: Vec<usize>,
    pub witness: usize,
    pub final_element: GroupElement,
    pub transcript: Vec<TranscriptStep>,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// override for the anti-dominant iteration cap
    pub max_iter: Option<u64>,
    /// proof-shadowing assertions (umbrella and progress measures)
    pub instrument: bool,
    /// alcove cap for instrumented distance computations
    pub bfs_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_iter: None,
            instrument: true,
            bfs_cap: 500_000,
        }
    }
}

#[derive(Debug, Error)]
pub enum DiamondError {
    #[error("the element is a translation; the theorem requires w outside the translation subgroup")]
    TranslationInput,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("iteration cap {cap} exceeded; this contradicts the theorem and signals a bug")]
    IterationCap { cap: u64 },
    #[error("invariant violated during search: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// First violated certificate condition, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("certificate original does not match the element")]
    OriginalMismatch,
    #[error("length not preserved at conjugation step {0}")]
    LengthNotPreserved(usize),
    #[error("replayed element does not match the certificate final element")]
    FinalMismatch,
    #[error("left multiplication by the witness does not increase length")]
    WitnessLeftLength,
    #[error("right multiplication by the witness does not increase length")]
    WitnessRightLength,
    #[error("conjugation by the witness fixes the final element")]
    WitnessFixes,
}

/// Tests all three direct-diamond conditions and cross-checks the unified
/// single-inequality form.
pub fn has_direct_diamond(ctx: &GroupContext, w: &GroupElement, s: usize) -> bool {
    let gen = ctx.delta_aff(s);
    let lw = ctx.length(w);
    let sw = ctx.compose(&gen, w);
    let ws = ctx.compose(w, &gen);
    let sws = ctx.compose(&sw, &gen);
    let three = ctx.length(&sw) > lw && ctx.length(&ws) > lw && sws != *w;
    let unified = ctx.length(&sws) > lw;
    assert_eq!(three, unified, "the two direct-diamond formulations disagree");
    three
}

/// Constructive witness for elements sending the base alcove into the
/// dominant chamber: pick the first chamber wall of the rotated cone that
/// separates the rotated base alcove from the base alcove.
pub fn dominant_case_witness(ctx: &GroupContext, w: &GroupElement) -> Result<usize, DiamondError> {
    if ctx.is_translation(w) {
        return Err(DiamondError::TranslationInput);
    }
    let rs = &ctx.roots;
    let w_alcove = Alcove::of_element(ctx, w);
    if !Chamber::dominant(rs).contains_alcove(rs, &w_alcove) {
        return Err(DiamondError::Precondition(
            "the image of the base alcove is not dominant",
        ));
    }
    let u = GroupElement {
        translation: Point::zero(rs.rank),
        torsion: vec![0; ctx.lattice.torsion_orders.len()],
        finite: w.finite.clone(),
    };
    let base = Alcove::base(rs);
    let u_alcove = Alcove::of_element(ctx, &u);
    for j in 1..=rs.rank {
        let wall = crate::geometry::Hyperplane { root: j - 1, level: 0 };
        let image = crate::geometry::map_hyperplane(ctx, &u, wall);
        if u_alcove.side_of(image) != base.side_of(image) {
            assert!(
                has_direct_diamond(ctx, w, j),
                "constructed witness fails the direct-diamond conditions"
            );
            return Ok(j);
        }
    }
    Err(DiamondError::InvariantViolated(
        "no chamber wall separates the rotated alcove".into(),
    ))
}

fn certificate(
    original: GroupElement,
    conjugators: Vec<usize>,
    witness: usize,
    final_element: GroupElement,
    transcript: Vec<TranscriptStep>,
) -> DiamondCertificate {
    DiamondCertificate {
        original,
        conjugators,
        witness,
        final_element,
        transcript,
    }
}

/// Anti-dominant case: either the base alcove already lies in the chamber of
/// the moved marking (direct witness through the swapped frame), or iterate
/// length-preserving conjugations along the cycled translation word until a
/// direct diamond appears.
pub fn antidominant_search(
    ctx: &GroupContext,
    w: &GroupElement,
    opts: &SearchOptions,
) -> Result<DiamondCertificate, DiamondError> {
    if ctx.is_translation(w) {
        return Err(DiamondError::TranslationInput);
    }
    let rs = &ctx.roots;
    let w_origin = ctx.act_on_point(w, &Point::zero(rs.rank));
    for root in &rs.positive_roots {
        if w_origin.pair(&root.pairings).is_positive() {
            return Err(DiamondError::Precondition(
                "the image of the origin is not anti-dominant",
            ));
        }
    }

    let marked = MarkedAlcove::of_element(ctx, w);
    let chamber_b = marked.chamber(rs)?;
    if chamber_b.contains_alcove(rs, &Alcove::base(rs)) {
        // swapped frame: the witness for the inverse element transfers back
        let witness = dominant_case_witness(ctx, &ctx.inverse(w))?;
        assert!(has_direct_diamond(ctx, w, witness));
        let step = TranscriptStep {
            conjugator: witness,
            element: w.clone(),
            length: ctx.length(w),
            phase: Phase::DominantShortcut,
        };
        return Ok(certificate(w.clone(), vec![], witness, w.clone(), vec![step]));
    }

    let word = infinite_gallery_word(ctx);
    let lw = ctx.length(w);
    let cap = opts
        .max_iter
        .unwrap_or(16 * (lw + 2) * word.len() as u64);

    let mut cur = w.clone();
    let mut conjugators = Vec::new();
    let mut transcript = Vec::new();

    // instrumented tandem galleries in the original frame
    let mut a_marked = MarkedAlcove::base(ctx);
    let mut prefix = ctx.identity();
    let mut b_alcoves = vec![Alcove::of_element(ctx, w)];

    for i in 0..cap {
        let s = word[(i as usize) % word.len()];
        if opts.instrument {
            let sw = ctx.compose(&ctx.delta_aff(s), &cur);
            if ctx.length(&sw) <= ctx.length(&cur) {
                return Err(DiamondError::InvariantViolated(format!(
                    "umbrella side condition fails at step {}",
                    i
                )));
            }
        }
        if has_direct_diamond(ctx, &cur, s) {
            let cert = certificate(w.clone(), conjugators, s, cur, transcript);
            return Ok(cert);
        }
        let gen = ctx.delta_aff(s);
        let next = ctx.compose(&ctx.compose(&gen, &cur), &gen);
        if ctx.length(&next) != lw {
            return Err(DiamondError::InvariantViolated(format!(
                "conjugation at step {} is not length-preserving",
                i
            )));
        }
        conjugators.push(s);
        cur = next;
        transcript.push(TranscriptStep {
            conjugator: s,
            element: cur.clone(),
            length: lw,
            phase: Phase::Antidominant,
        });

        if opts.instrument {
            a_marked = a_marked.reflect(rs, s);
            prefix = ctx.compose(&prefix, &ctx.delta_aff(s));
            let b_next = Alcove::of_element(ctx, &ctx.compose(w, &prefix));
            b_alcoves.push(b_next);
            // running pair distance stays the original length
            let pair_d = a_marked.alcove.distance(b_alcoves.last().unwrap());
            if pair_d != lw {
                return Err(DiamondError::InvariantViolated(format!(
                    "tandem pair distance {} differs from length {}",
                    pair_d, lw
                )));
            }
            // induction conclusion: the running B-gallery is an umbrella over
            // the next labeled wall of the A-gallery
            let next_wall = a_marked.labeling[word[((i + 1) as usize) % word.len()]];
            let gallery = Gallery::new(b_alcoves.clone())?;
            if !is_umbrella(rs, &gallery, &a_marked.alcove, next_wall)? {
                return Err(DiamondError::InvariantViolated(format!(
                    "umbrella invariant fails after step {}",
                    i
                )));
            }
        }
    }
    Err(DiamondError::IterationCap { cap })
}

/// Result of the intermediate phase.
#[derive(Clone, Debug)]
pub enum IntermediateOutcome {
    /// the moved origin reached the closed anti-dominant chamber
    Reduced {
        conjugators: Vec<usize>,
        element: GroupElement,
        transcript: Vec<TranscriptStep>,
    },
    /// a length increase appeared mid-loop, which is already a direct witness
    DirectWitness {
        conjugators: Vec<usize>,
        element: GroupElement,
        witness: usize,
        transcript: Vec<TranscriptStep>,
    },
}

/// Repeatedly conjugate by simple reflections whose base wall misses the
/// moved origin until the moved origin is anti-dominant, returning early when
/// a conjugation increases length.
pub fn intermediate_reduction(
    ctx: &GroupContext,
    w: &GroupElement,
    opts: &SearchOptions,
) -> Result<IntermediateOutcome, DiamondError> {
    if ctx.is_translation(w) {
        return Err(DiamondError::TranslationInput);
    }
    let rs = &ctx.roots;
    let opp = Region::Chamber(Chamber::antidominant(rs));
    let mut cur = w.clone();
    let mut conjugators = Vec::new();
    let mut transcript = Vec::new();
    let cap = 10_000u64;
    for _ in 0..cap {
        let origin = ctx.act_on_point(&cur, &Point::zero(rs.rank));
        let lw = ctx.length(&cur);
        let mut chosen = None;
        for j in 1..=rs.rank {
            if origin.pair(&rs.positive_roots[j - 1].pairings).is_zero() {
                continue;
            }
            let sw = ctx.compose(&ctx.delta_aff(j), &cur);
            if ctx.length(&sw) > lw {
                chosen = Some(j);
                break;
            }
        }
        let Some(j) = chosen else {
            // the moved origin is weakly anti-dominant
            for root in &rs.positive_roots {
                if origin.pair(&root.pairings).is_positive() {
                    return Err(DiamondError::InvariantViolated(
                        "empty conjugation set but the origin is not anti-dominant".into(),
                    ));
                }
            }
            return Ok(IntermediateOutcome::Reduced {
                conjugators,
                element: cur,
                transcript,
            });
        };
        let gen = ctx.delta_aff(j);
        let next = ctx.compose(&ctx.compose(&gen, &cur), &gen);
        if ctx.length(&next) > lw {
            assert!(has_direct_diamond(ctx, &cur, j));
            return Ok(IntermediateOutcome::DirectWitness {
                conjugators,
                element: cur,
                witness: j,
                transcript,
            });
        }
        if ctx.length(&next) != lw {
            return Err(DiamondError::InvariantViolated(
                "intermediate conjugation decreased length".into(),
            ));
        }
        if opts.instrument {
            let before = dist_vertex_region(rs, &origin, &opp, opts.bfs_cap)?;
            let next_origin = ctx.act_on_point(&next, &Point::zero(rs.rank));
            let after = dist_vertex_region(rs, &next_origin, &opp, opts.bfs_cap)?;
            if after >= before {
                return Err(DiamondError::InvariantViolated(format!(
                    "progress measure did not decrease ({} -> {})",
                    before, after
                )));
            }
        }
        conjugators.push(j);
        cur = next;
        transcript.push(TranscriptStep {
            conjugator: j,
            element: cur.clone(),
            length: lw,
            phase: Phase::Intermediate,
        });
    }
    Err(DiamondError::IterationCap { cap })
}

/// The main theorem as an algorithm: intermediate reduction followed by the
/// anti-dominant search; the returned certificate replays cleanly.
pub fn find_diamond(
    ctx: &GroupContext,
    w: &GroupElement,
    opts: &SearchOptions,
) -> Result<DiamondCertificate, DiamondError> {
    if ctx.is_translation(w) {
        return Err(DiamondError::TranslationInput);
    }
    let cert = match intermediate_reduction(ctx, w, opts)? {
        IntermediateOutcome::DirectWitness {
            conjugators,
            element,
            witness,
            transcript,
        } => certificate(w.clone(), conjugators, witness, element, transcript),
        IntermediateOutcome::Reduced {
            conjugators,
            element,
            mut transcript,
        } => {
            let tail = antidominant_search(ctx, &element, opts)?;
            let mut all = conjugators;
            all.extend(tail.conjugators.iter().copied());
            transcript.extend(tail.transcript.iter().cloned());
            certificate(w.clone(), all, tail.witness, tail.final_element, transcript)
        }
    };
    debug_assert_eq!(verify_certificate(ctx, w, &cert), Ok(()));
    Ok(cert)
}

/// Independent replay of a certificate using only composition, length, and
/// equality.
pub fn verify_certificate(
    ctx: &GroupContext,
    w: &GroupElement,
    cert: &DiamondCertificate,
) -> Result<(), CertificateViolation> {
    if cert.original != *w {
        return Err(CertificateViolation::OriginalMismatch);
    }
    let target = ctx.length(w);
    let mut g = w.clone();
    for (i, &s) in cert.conjugators.iter().enumerate() {
        let gen = ctx.delta_aff(s);
        g = ctx.compose(&ctx.compose(&gen, &g), &gen);
        if ctx.length(&g) != target {
            return Err(CertificateViolation::LengthNotPreserved(i));
        }
    }
    if g != cert.final_element {
        return Err(CertificateViolation::FinalMismatch);
    }
    let s = ctx.delta_aff(cert.witness);
    let sg = ctx.compose(&s, &g);
    if ctx.length(&sg) <= target {
        return Err(CertificateViolation::WitnessLeftLength);
    }
    let gs = ctx.compose(&g, &s);
    if ctx.length(&gs) <= target {
        return Err(CertificateViolation::WitnessRightLength);
    }
    let sgs = ctx.compose(&sg, &s);
    if sgs == g {
        return Err(CertificateViolation::WitnessFixes);
    }
    Ok(())
}

/// Outcome of the breadth-first oracle over the lateral-conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteForceOutcome {
    Found {
        element: GroupElement,
        witness: usize,
        depth: u64,
        explored: usize,
    },
    CapExhausted {
        explored: usize,
    },
    /// the whole class was explored without a witness; this would falsify the
    /// theorem and must abort any test run
    ClassExhaustedNoWitness {
        class_size: usize,
    },
}

/// Breadth-first search over length-preserving simple conjugations, checking
/// every visited element for a direct diamond.
pub fn brute_force_diamond(
    ctx: &GroupContext,
    w: &GroupElement,
    node_cap: usize,
) -> Result<BruteForceOutcome, DiamondError> {
    if ctx.is_translation(w) {
        return Err(DiamondError::TranslationInput);
    }
    let lw = ctx.length(w);
    let mut depth: HashMap<GroupElement, u64> = HashMap::new();
    depth.insert(w.clone(), 0);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(g) = queue.pop_front() {
        let d = depth[&g];
        for s in 0..ctx.delta_aff_count() {
            if has_direct_diamond(ctx, &g, s) {
                return Ok(BruteForceOutcome::Found {
                    element: g,
                    witness: s,
                    depth: d,
                    explored: depth.len(),
                });
            }
        }
        for s in 0..ctx.delta_aff_count() {
            let gen = ctx.delta_aff(s);
            let conj = ctx.compose(&ctx.compose(&gen, &g), &gen);
            if ctx.length(&conj) == lw && !depth.contains_key(&conj) {
                if depth.len() >= node_cap {
                    return Ok(BruteForceOutcome::CapExhausted {
                        explored: depth.len(),
                    });
                }
                depth.insert(conj.clone(), d + 1);
                queue.push_back(conj);
            }
        }
    }
    Ok(BruteForceOutcome::ClassExhaustedNoWitness {
        class_size: depth.len(),
    })
}

/// The lateral-conjugacy class as a set, up to the node cap.
#[derive(Clone, Debug)]
pub struct LateralClass {
    pub elements: BTreeSet<GroupElement>,
    pub complete: bool,
}

pub fn lateral_class(ctx: &GroupContext, w: &GroupElement, node_cap: usize) -> LateralClass {
    let lw = ctx.length(w);
    let mut elements = BTreeSet::new();
    elements.insert(w.clone());
    let mut queue = VecDeque::from([w.clone()]);
    let mut complete = true;
    while let Some(g) = queue.pop_front() {
        for s in 0..ctx.delta_aff_count() {
            let gen = ctx.delta_aff(s);
            let conj = ctx.compose(&ctx.compose(&gen, &g), &gen);
            if ctx.length(&conj) == lw && !elements.contains(&conj) {
                if elements.len() >= node_cap {
                    complete = false;
                    continue;
                }
                elements.insert(conj.clone());
                queue.push_back(conj);
            }
        }
    }
    LateralClass { elements, complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::LatticeSpec;
    use crate::linalg::rat;
    use crate::rootsys::{build_root_system, CartanDatum, Family};

    fn ctx(family: Family, rank: usize, coweight: bool) -> GroupContext {
        let rs = build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap();
        let lat = if coweight {
            LatticeSpec::coweight(&rs)
        } else {
            LatticeSpec::adjoint(&rs)
        };
        GroupContext::new(rs, lat, 2000).unwrap()
    }

    #[test]
    fn direct_diamond_basics() {
        let c = ctx(Family::A, 1, false);
        // the identity never has the property
        for s in 0..2 {
            assert!(!has_direct_diamond(ctx_ref(&c), &c.identity(), s));
        }
        // s_aff has it at s1
        assert!(has_direct_diamond(&c, &c.delta_aff(0), 1));
        // length + 2 forces it
        let w = c.delta_aff(1);
        let sws = c.compose(&c.compose(&c.delta_aff(0), &w), &c.delta_aff(0));
        assert_eq!(c.length(&sws), c.length(&w) + 2);
        assert!(has_direct_diamond(&c, &w, 0));
        // conjugating the translation s0*s1 fixes it: no witness there
        let t = c.compose(&c.delta_aff(0), &c.delta_aff(1));
        assert!(c.is_translation(&t));
        assert!(!has_direct_diamond(&c, &t, 0));
        assert!(!has_direct_diamond(&c, &t, 1));
    }

    fn ctx_ref(c: &GroupContext) -> &GroupContext {
        c
    }

    #[test]
    fn c2_commuting_generator_fails_at_affine() {
        let c = ctx(Family::C, 2, false);
        // find the finite generator commuting with the affine one
        let s0 = c.delta_aff(0);
        let commuting: Vec<usize> = (1..=2)
            .filter(|&j| {
                let s = c.delta_aff(j);
                c.compose(&s, &s0) == c.compose(&s0, &s)
            })
            .collect();
        assert_eq!(commuting.len(), 1);
        let j = commuting[0];
        let w = c.delta_aff(j);
        assert!(!has_direct_diamond(&c, &w, 0), "conjugation by the affine generator fixes w");
        // the theorem still applies
        let cert = find_diamond(&c, &w, &SearchOptions::default()).unwrap();
        assert_eq!(verify_certificate(&c, &w, &cert), Ok(()));
        let oracle = brute_force_diamond(&c, &w, 50_000).unwrap();
        assert!(matches!(oracle, BruteForceOutcome::Found { .. }));
    }

    #[test]
    fn dominant_witness_a1() {
        let c = ctx(Family::A, 1, false);
        // s_aff = t_{coroot} s_1 maps the base alcove into the dominant chamber
        let w = c.delta_aff(0);
        let s = dominant_case_witness(&c, &w).unwrap();
        assert_eq!(s, 1);
        assert!(has_direct_diamond(&c, &w, s));
        let sws = c.compose(&c.compose(&c.delta_aff(s), &w), &c.delta_aff(s));
        assert_eq!(c.length(&sws), 3);
        // precondition rejection: a bare finite reflection is not dominant
        assert!(matches!(
            dominant_case_witness(&c, &c.delta_aff(1)),
            Err(DiamondError::Precondition(_))
        ));
        // translations rejected
        let t = c.translation(&Point::from_i64(&[1]));
        assert!(matches!(
            dominant_case_witness(&c, &t),
            Err(DiamondError::TranslationInput)
        ));
    }

    #[test]
    fn antidominant_search_a1_finite_reflection() {
        let c = ctx(Family::A, 1, false);
        let w = c.delta_aff(1);
        // w(0) = 0 is weakly anti-dominant and w is not a translation
        let cert = antidominant_search(&c, &w, &SearchOptions::default()).unwrap();
        assert_eq!(verify_certificate(&c, &w, &cert), Ok(()));
        assert!(cert.conjugators.len() <= 2);
        for step in &cert.transcript {
            if step.phase == Phase::Antidominant {
                assert_eq!(step.length, c.length(&w));
            }
        }
    }

    #[test]
    fn intermediate_reduction_examples() {
        let c = ctx(Family::C, 2, false);
        // a rotation fixing the origin: the conjugation set is empty
        let w = c.compose(&c.delta_aff(1), &c.delta_aff(2));
        match intermediate_reduction(&c, &w, &SearchOptions::default()).unwrap() {
            IntermediateOutcome::Reduced { conjugators, element, .. } => {
                assert!(conjugators.is_empty());
                assert_eq!(element, w);
            }
            IntermediateOutcome::DirectWitness { .. } => panic!("expected empty reduction"),
        }
        // translations are rejected
        let t = c.translation(&Point::from_i64(&[1, 0]));
        assert!(matches!(
            intermediate_reduction(&c, &t, &SearchOptions::default()),
            Err(DiamondError::TranslationInput)
        ));
    }

    #[test]
    fn find_diamond_rejects_translations() {
        let c = ctx(Family::A, 1, false);
        let t = c.translation(&Point::from_i64(&[1]));
        assert!(matches!(
            find_diamond(&c, &t, &SearchOptions::default()),
            Err(DiamondError::TranslationInput)
        ));
        let torsion_ctx = {
            let rs = build_root_system(CartanDatum::new(Family::A, 1).unwrap()).unwrap();
            GroupContext::new(rs.clone(), LatticeSpec::adjoint(&rs).with_torsion(vec![2]), 2000).unwrap()
        };
        let tau = torsion_ctx.torsion_element(vec![1]);
        assert!(matches!(
            find_diamond(&torsion_ctx, &tau, &SearchOptions::default()),
            Err(DiamondError::TranslationInput)
        ));
    }

    #[test]
    fn exhaustive_small_a2() {
        let c = ctx(Family::A, 2, false);
        let opts = SearchOptions::default();
        for w in c.group_ball(4) {
            if c.is_translation(&w) {
                continue;
            }
            let cert = find_diamond(&c, &w, &opts).unwrap();
            assert_eq!(verify_certificate(&c, &w, &cert), Ok(()));
            // conjugacy preserves the omega class
            assert_eq!(
                c.omega_projection(&cert.final_element),
                c.omega_projection(&cert.original)
            );
            match brute_force_diamond(&c, &w, 50_000).unwrap() {
                BruteForceOutcome::Found { .. } => {}
                other => panic!("oracle failed on {:?}: {:?}", w, other),
            }
            let class = lateral_class(&c, &w, 50_000);
            assert!(class.complete);
            assert!(class.elements.contains(&cert.final_element));
        }
    }

    #[test]
    fn tampered_certificates_fail() {
        let c = ctx(Family::C, 2, false);
        let w = c.delta_aff(1);
        let cert = find_diamond(&c, &w, &SearchOptions::default()).unwrap();
        // wrong original
        assert_eq!(
            verify_certificate(&c, &c.delta_aff(2), &cert),
            Err(CertificateViolation::OriginalMismatch)
        );
        // swap the witness for a generator that commutes with the final element
        let final_el = &cert.final_element;
        let commuting = (0..c.delta_aff_count()).find(|&s| {
            let gen = c.delta_aff(s);
            let sws = c.compose(&c.compose(&gen, final_el), &gen);
            sws == *final_el
        });
        if let Some(s) = commuting {
            let mut bad = cert.clone();
            bad.witness = s;
            assert!(verify_certificate(&c, &w, &bad).is_err());
        }
        // corrupt the final element
        let mut bad = cert.clone();
        bad.final_element = c.identity();
        assert_eq!(
            verify_certificate(&c, &w, &bad),
            Err(CertificateViolation::FinalMismatch)
        );
    }

    #[test]
    fn translation_lateral_class_is_weyl_orbit() {
        let c = ctx(Family::A, 2, false);
        let lambda = c.roots.rho_check.scale(&rat(2));
        let t = c.translation(&lambda);
        let class = lateral_class(&c, &t, 50_000);
        assert!(class.complete);
        let orbit: BTreeSet<GroupElement> = c
            .finite_weyl_elements()
            .iter()
            .map(|u| c.translation(&u.apply_point(&lambda)))
            .collect();
        assert_eq!(class.elements, orbit);
    }

    #[test]
    fn identity_lateral_class() {
        let c = ctx(Family::A, 2, false);
        let class = lateral_class(&c, &c.identity(), 100);
        assert_eq!(class.elements.len(), 1);
    }

    #[test]
    fn g2_moderate_elements() {
        let c = ctx(Family::G, 2, false);
        let opts = SearchOptions::default();
        for seed in 0..20u64 {
            let w = c.random_element(5, seed);
            if c.is_translation(&w) {
                continue;
            }
            let cert = find_diamond(&c, &w, &opts).unwrap();
            assert_eq!(verify_certificate(&c, &w, &cert), Ok(()));
            for step in &cert.transcript {
                if step.phase != Phase::DominantShortcut {
                    assert_eq!(step.length, c.length(&w));
                }
            }
        }
    }
}
