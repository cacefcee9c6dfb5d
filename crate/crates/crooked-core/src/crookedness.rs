//! Canonical crooked maps, crookedness deciders, and the certificate
//! calculus.
//!
//! A simplicial map `s: I_m -> I_n` is *crooked* when for every pair of
//! vertices `i <= j` there are intermediate vertices `i <= j' <= i' <= j`
//! whose values nearly swap the endpoint values: `s(j')` is adjacent to
//! `s(j)` and `s(i')` is adjacent to `s(i)` (adjacent means differing by at
//! most one). Crooked surjections force maximal zig-zagging and are the
//! combinatorial engine behind hereditarily indecomposable limits.
//!
//! The minimal crooked surjection onto `I_n` is the canonical map `c_n`,
//! whose domain size `crn(n)` obeys the Pell recursion
//! `crn(n) = 2 crn(n-1) + crn(n-2)`. Because `crn` grows like `(1+sqrt 2)^n`,
//! this module offers both gated materialization and lazy point evaluation
//! by recursive block descent (`O(n)` per query, any depth).
//!
//! For geometric realizations the module provides the sandwich decider: the
//! realization of a crooked `s` is `eps`-crooked for every `eps > 1/n`,
//! while `eps`-crookedness at some `eps <= 3/(2n)` forces `s` itself to be
//! crooked. Inside the gap `(1/n, 3/(2n)]` the decider honestly answers
//! `Indeterminate`. Certificates of `eps`-crookedness can be propagated
//! through composition and perturbation and replayed from their recorded
//! provenance.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{rat_serde, Modulus, PLMap, Rat, SimplicialMap};
use crate::DEFAULT_MEMORY_BOUND;

/// Errors raised by canonical-map construction and certificate propagation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrookednessError {
    /// Materialization refused: the domain would exceed the memory bound.
    #[error("c_{n} has {size} edges, above the materialization bound {bound}")]
    TooLarge {
        /// Requested level.
        n: usize,
        /// Domain size `crn(n)`.
        size: BigInt,
        /// Configured bound.
        bound: u64,
    },
    /// A lazy evaluation index lies outside `0..=crn(n)`.
    #[error("index {index} out of range for c_{n} (domain 0..={size})")]
    IndexOutOfRange {
        /// Requested level.
        n: usize,
        /// Offending index.
        index: BigInt,
        /// Domain size `crn(n)`.
        size: BigInt,
    },
    /// The provided modulus does not witness the claimed continuity.
    #[error("modulus mismatch: delta({eps}) = {delta} is below the certificate epsilon {cert_eps}")]
    ModulusMismatch {
        /// Target epsilon for the composite.
        eps: String,
        /// What the modulus yields at that epsilon.
        delta: String,
        /// The inner certificate's epsilon.
        cert_eps: String,
    },
    /// The perturbation distance does not meet the claimed bound.
    #[error("distance too large: sup distance {dist} is not below the claimed delta {delta}")]
    DistanceTooLarge {
        /// Measured sup distance.
        dist: String,
        /// Claimed strict bound.
        delta: String,
    },
}

// ---------------------------------------------------------------------------
// The Pell recursion crn
// ---------------------------------------------------------------------------

/// Memoized table of the Pell-recursion values
/// `crn(0) = 0`, `crn(1) = 1`, `crn(n) = 2 crn(n-1) + crn(n-2)`.
///
/// Initialization extends lazily and is safe under concurrent readers.
#[derive(Debug)]
pub struct CrnTable {
    values: RwLock<Vec<BigInt>>,
}

impl Default for CrnTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CrnTable {
    /// Creates a table seeded with the base cases.
    pub fn new() -> Self {
        Self {
            values: RwLock::new(vec![BigInt::zero(), BigInt::one()]),
        }
    }

    /// The exact value `crn(n)`.
    pub fn crn(&self, n: usize) -> BigInt {
        {
            let values = self.values.read().expect("lock poisoned");
            if let Some(v) = values.get(n) {
                return v.clone();
            }
        }
        let mut values = self.values.write().expect("lock poisoned");
        while values.len() <= n {
            let next = 2 * &values[values.len() - 1] + &values[values.len() - 2];
            values.push(next);
        }
        values[n].clone()
    }

    /// `crn(n)` as `u64` when it fits below `bound`, else `None`.
    pub fn crn_below(&self, n: usize, bound: u64) -> Option<u64> {
        let v = self.crn(n);
        if v <= BigInt::from(bound) {
            Some(u64::try_from(&v).expect("checked against bound"))
        } else {
            None
        }
    }
}

/// Convenience wrapper: the exact value `crn(n)` from a fresh table.
pub fn crn(n: usize) -> BigInt {
    CrnTable::new().crn(n)
}

// ---------------------------------------------------------------------------
// The canonical crooked maps c_n
// ---------------------------------------------------------------------------

/// Materializes the canonical crooked surjection `c_n: I_{crn(n)} -> I_n`
/// (or its reversal `c'_n(i) = c_n(crn(n) - i)`), using the default memory
/// bound.
///
/// The recursion: `c_0` and `c_1` are identities, and for `n >= 2` the map
/// is the concatenation of `c_{n-1}` (into levels `0..n-1`), the reversal
/// `c'_{n-2}` shifted up by one, and another copy of `c_{n-1}` shifted up by
/// one.
pub fn canonical_crooked(n: usize, reversed: bool) -> Result<SimplicialMap, CrookednessError> {
    canonical_crooked_bounded(n, reversed, DEFAULT_MEMORY_BOUND)
}

/// [`canonical_crooked`] with an explicit materialization bound on the
/// domain size `crn(n)`.
pub fn canonical_crooked_bounded(
    n: usize,
    reversed: bool,
    bound: u64,
) -> Result<SimplicialMap, CrookednessError> {
    let table = CrnTable::new();
    if table.crn_below(n, bound).is_none() {
        return Err(CrookednessError::TooLarge {
            n,
            size: table.crn(n),
            bound,
        });
    }
    // Build bottom-up; keep only the two previous levels.
    let mut prev: Vec<usize> = vec![0]; // c_0
    let mut cur: Vec<usize> = vec![0, 1]; // c_1
    if n == 0 {
        return Ok(SimplicialMap::from_checked(0, prev));
    }
    for _level in 2..=n {
        let mut next: Vec<usize> =
            Vec::with_capacity(cur.len() + prev.len() + cur.len() - 2);
        next.extend_from_slice(&cur);
        // Reversed c_{level-2}, shifted up by one; shares its first vertex
        // (value level-1) with the last vertex of the first block.
        next.extend(prev.iter().rev().skip(1).map(|&v| v + 1));
        // Second copy of c_{level-1}, shifted up by one; shares its first
        // vertex (value 1) with the last vertex of the middle block.
        next.extend(cur.iter().skip(1).map(|&v| v + 1));
        prev = std::mem::take(&mut cur);
        cur = next;
    }
    if reversed {
        cur.reverse();
    }
    Ok(SimplicialMap::from_checked(n, cur))
}

/// Lazily evaluates `c_n(i)` (or `c'_n(i)` when `reversed`) by recursive
/// block descent, `O(n)` time per query, without materializing the map.
pub fn eval_point(
    table: &CrnTable,
    n: usize,
    i: &BigInt,
    reversed: bool,
) -> Result<usize, CrookednessError> {
    let size = table.crn(n);
    if i.is_negative() || *i > size {
        return Err(CrookednessError::IndexOutOfRange {
            n,
            index: i.clone(),
            size,
        });
    }
    let mut level = n;
    let mut idx = if reversed { &size - i } else { i.clone() };
    let mut offset = 0usize;
    loop {
        match level {
            0 => return Ok(offset),
            1 => {
                return Ok(offset + usize::try_from(&idx).expect("idx in 0..=1"));
            }
            _ => {
                let b1 = table.crn(level - 1);
                let b2 = &b1 + table.crn(level - 2);
                if idx <= b1 {
                    level -= 1;
                } else if idx <= b2 {
                    // Middle block: reversed c_{level-2} shifted up by one;
                    // un-reverse the index inside the block.
                    idx = &b2 - &idx;
                    level -= 2;
                    offset += 1;
                } else {
                    idx -= &b2;
                    level -= 1;
                    offset += 1;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Crookedness decision
// ---------------------------------------------------------------------------

/// Outcome of the combinatorial crookedness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrookedCheck {
    /// Every vertex pair admits the required back-and-forth witnesses.
    Crooked,
    /// A concrete violating pair `(i, j)`: no `i <= j' <= i' <= j` has
    /// `s(j')` adjacent to `s(j)` and `s(i')` adjacent to `s(i)`.
    NotCrooked {
        /// The violating pair.
        pair: (usize, usize),
    },
}

impl CrookedCheck {
    /// Whether the map was found crooked.
    pub fn is_crooked(&self) -> bool {
        matches!(self, CrookedCheck::Crooked)
    }
}

/// Decides crookedness of a simplicial map, returning a concrete violating
/// pair on failure.
///
/// The algorithm precomputes, for every vertex position and every codomain
/// value `v`, the next position whose value is adjacent to `v`. A pair
/// `(i, j)` then has a witness `i <= j' <= i' <= j` if and only if the
/// earliest admissible `j'` (greedy choice, which maximizes the room left
/// for `i'`) is followed by an admissible `i'` within `j`. This is an exact
/// decision of the quantifier in `O(m^2)` after `O(m n)` preprocessing; the
/// literal four-fold loop is kept as [`is_crooked_oracle`] for
/// cross-checking.
pub fn is_crooked(s: &SimplicialMap) -> CrookedCheck {
    let values = s.values();
    let m = s.domain_size();
    let n = s.codomain_size();
    const NONE: usize = usize::MAX;
    // next[i * (n + 1) + v] = least position >= i whose value is adjacent
    // to v, or NONE.
    let width = n + 1;
    let mut next = vec![NONE; (m + 1) * width];
    let mut row = vec![NONE; width];
    for i in (0..=m).rev() {
        let v = values[i];
        let lo = v.saturating_sub(1);
        let hi = (v + 1).min(n);
        for w in lo..=hi {
            row[w] = i;
        }
        next[i * width..(i + 1) * width].copy_from_slice(&row);
    }
    for i in 0..=m {
        for j in i + 1..=m {
            let jp = next[i * width + values[j]];
            if jp > j {
                return CrookedCheck::NotCrooked { pair: (i, j) };
            }
            let ip = next[jp * width + values[i]];
            if ip > j {
                return CrookedCheck::NotCrooked { pair: (i, j) };
            }
        }
    }
    CrookedCheck::Crooked
}

/// The direct quantifier check, a literal `O(m^4)` transcription of the
/// definition. Used as a brute-force oracle; agrees with [`is_crooked`] on
/// every instance (tested exhaustively at desk scale).
pub fn is_crooked_oracle(s: &SimplicialMap) -> CrookedCheck {
    let values = s.values();
    let m = s.domain_size();
    let adj = |a: usize, b: usize| a.abs_diff(b) <= 1;
    for i in 0..=m {
        for j in i..=m {
            let mut found = false;
            'witness: for jp in i..=j {
                if !adj(values[jp], values[j]) {
                    continue;
                }
                for ip in jp..=j {
                    if adj(values[ip], values[i]) {
                        found = true;
                        break 'witness;
                    }
                }
            }
            if !found {
                return CrookedCheck::NotCrooked { pair: (i, j) };
            }
        }
    }
    CrookedCheck::Crooked
}

// ---------------------------------------------------------------------------
// The epsilon-crookedness sandwich
// ---------------------------------------------------------------------------

/// Three-valued verdict for epsilon-crookedness of a realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrookedVerdict {
    /// The realization is certified `eps`-crooked (`s` crooked and
    /// `eps > 1/n`).
    Certified {
        /// The certified epsilon.
        epsilon: Rat,
    },
    /// The realization is refuted (`s` not crooked and `eps <= 3/(2n)`),
    /// with the combinatorial counterexample pair.
    Refuted {
        /// The refuted epsilon.
        epsilon: Rat,
        /// Violating vertex pair of the combinatorial check.
        pair: (usize, usize),
    },
    /// The sandwich does not decide: `eps` lies in the open-closed gap
    /// `(1/n, 3/(2n)]` on the undecided side. Refining the same map over a
    /// finer grid shrinks the window but never closes it.
    Indeterminate {
        /// The unresolved window `(1/n, 3/(2n)]`.
        window: (Rat, Rat),
    },
}

/// Decides `eps`-crookedness of the realization of `s` via the sandwich:
/// a crooked `s` certifies every `eps > 1/n`, while a non-crooked `s`
/// refutes every `eps <= 1/n` (such an `eps` is in particular at most
/// `3/(2n)`, where the converse sandwich direction applies). Queries that
/// fall in neither decided region answer `Indeterminate` with the gap
/// window `(1/n, 3/(2n)]`. Requires codomain `I_n` with `n >= 1`.
pub fn eps_crooked_decide(s: &SimplicialMap, eps: &Rat) -> CrookedVerdict {
    let n = s.codomain_size();
    assert!(n >= 1, "sandwich needs a codomain with at least one edge");
    let lower = Rat::new(BigInt::one(), BigInt::from(n)); // 1/n
    let upper = Rat::new(BigInt::from(3), BigInt::from(2 * n)); // 3/(2n)
    match is_crooked(s) {
        CrookedCheck::Crooked if *eps > lower => CrookedVerdict::Certified {
            epsilon: eps.clone(),
        },
        CrookedCheck::NotCrooked { pair } if *eps <= lower => CrookedVerdict::Refuted {
            epsilon: eps.clone(),
            pair,
        },
        _ => CrookedVerdict::Indeterminate {
            window: (lower, upper),
        },
    }
}

// ---------------------------------------------------------------------------
// Certificates and their propagation calculus
// ---------------------------------------------------------------------------

/// How an epsilon-crookedness certificate was derived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Provenance {
    /// Direct combinatorial check of a simplicial map into `I_n` plus the
    /// sandwich (`eps > 1/n`).
    CombinatorialCheck {
        /// Codomain size of the checked map.
        n: usize,
    },
    /// `g` eps-crooked implies `g ∘ f` eps-crooked for any pre-composed `f`.
    ComposeLeft {
        /// Certificate for the outer map `g`.
        from: Box<CrookednessCertificate>,
    },
    /// `g` (eps, delta)-continuous and `f` delta-crooked imply `g ∘ f`
    /// eps-crooked.
    ComposeRight {
        /// The modulus of the outer map `g` used as the witness.
        modulus: Modulus,
        /// Certificate for the inner map `f`.
        from: Box<CrookednessCertificate>,
    },
    /// `f` eps-crooked and `g` within sup distance `delta` imply `g`
    /// (eps + 2 delta)-crooked.
    Perturbation {
        /// The sup-distance bound used.
        #[serde(with = "rat_serde")]
        delta: Rat,
        /// Certificate for the nearby map `f`.
        from: Box<CrookednessCertificate>,
    },
}

/// A replayable record that a named map is `epsilon`-crooked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrookednessCertificate {
    /// Reference label of the certified map.
    pub subject: String,
    /// The certified epsilon bound.
    #[serde(with = "rat_serde")]
    pub epsilon: Rat,
    /// Derivation record; replaying it re-derives an epsilon bound at most
    /// [`Self::epsilon`].
    pub provenance: Provenance,
}

impl CrookednessCertificate {
    /// Certificate from a direct combinatorial check: `s` must be crooked
    /// and `epsilon > 1/n`. Panics if the sandwich does not certify (the
    /// caller should have run [`eps_crooked_decide`] first).
    pub fn from_check(subject: impl Into<String>, s: &SimplicialMap, epsilon: Rat) -> Self {
        match eps_crooked_decide(s, &epsilon) {
            CrookedVerdict::Certified { epsilon } => Self {
                subject: subject.into(),
                epsilon,
                provenance: Provenance::CombinatorialCheck {
                    n: s.codomain_size(),
                },
            },
            other => panic!("combinatorial check did not certify: {other:?}"),
        }
    }

    /// Rule: an eps-crooked `g` makes any composite `g ∘ f` eps-crooked.
    pub fn compose_left(&self, subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            epsilon: self.epsilon.clone(),
            provenance: Provenance::ComposeLeft {
                from: Box::new(self.clone()),
            },
        }
    }

    /// Rule: if `g` is `(eps, delta)`-continuous (witnessed by `modulus`)
    /// and this certificate shows `f` delta-crooked with the certificate's
    /// epsilon at most `delta = modulus.delta(eps)`, then `g ∘ f` is
    /// eps-crooked.
    pub fn compose_right(
        &self,
        subject: impl Into<String>,
        modulus: &Modulus,
        eps: &Rat,
    ) -> Result<Self, CrookednessError> {
        let delta = modulus.delta(eps);
        if self.epsilon > delta {
            return Err(CrookednessError::ModulusMismatch {
                eps: crate::interval::rat_to_string(eps),
                delta: crate::interval::rat_to_string(&delta),
                cert_eps: crate::interval::rat_to_string(&self.epsilon),
            });
        }
        Ok(Self {
            subject: subject.into(),
            epsilon: eps.clone(),
            provenance: Provenance::ComposeRight {
                modulus: modulus.clone(),
                from: Box::new(self.clone()),
            },
        })
    }

    /// Rule: if this certificate shows `f` eps-crooked and
    /// `sup_dist(f, g) < delta`, then `g` is `(eps + 2 delta)`-crooked.
    /// The distance is measured exactly on the given maps.
    pub fn perturb(
        &self,
        subject: impl Into<String>,
        f: &PLMap,
        g: &PLMap,
        delta: &Rat,
    ) -> Result<Self, CrookednessError> {
        let dist = f.sup_dist(g);
        if dist >= *delta {
            return Err(CrookednessError::DistanceTooLarge {
                dist: crate::interval::rat_to_string(&dist),
                delta: crate::interval::rat_to_string(delta),
            });
        }
        Ok(Self {
            subject: subject.into(),
            epsilon: &self.epsilon + delta * Rat::from_integer(BigInt::from(2)),
            provenance: Provenance::Perturbation {
                delta: delta.clone(),
                from: Box::new(self.clone()),
            },
        })
    }

    /// Replays the provenance chain and re-derives the epsilon bound it
    /// justifies. Always at most the stored [`Self::epsilon`].
    pub fn replayed_epsilon(&self) -> Rat {
        match &self.provenance {
            Provenance::CombinatorialCheck { .. } => self.epsilon.clone(),
            Provenance::ComposeLeft { from } => from.replayed_epsilon(),
            Provenance::ComposeRight { modulus, from } => {
                // The smallest eps with modulus.delta(eps) >= the inner
                // bound: eps = lipschitz * delta (capped by the stored eps
                // for constant maps, whose delta is the full interval).
                let inner = from.replayed_epsilon();
                let l = modulus.lipschitz();
                let derived = inner * l;
                if derived.is_zero() || derived > self.epsilon {
                    self.epsilon.clone()
                } else {
                    derived
                }
            }
            Provenance::Perturbation { delta, from } => {
                from.replayed_epsilon() + delta * Rat::from_integer(BigInt::from(2))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::rat;

    /// Independent iterative evaluation of `c_n(i)` using an explicit block
    /// stack instead of the arithmetic descent in [`eval_point`].
    fn eval_point_stack(table: &CrnTable, n: usize, i: &BigInt) -> usize {
        #[derive(Clone, Copy)]
        struct Frame {
            level: usize,
            reversed: bool,
            offset: usize,
        }
        let mut frame = Frame {
            level: n,
            reversed: false,
            offset: 0,
        };
        let mut idx = i.clone();
        loop {
            if frame.reversed {
                idx = table.crn(frame.level) - &idx;
                frame.reversed = false;
            }
            match frame.level {
                0 => return frame.offset,
                1 => return frame.offset + usize::try_from(&idx).unwrap(),
                _ => {
                    let b1 = table.crn(frame.level - 1);
                    let b2 = &b1 + table.crn(frame.level - 2);
                    if idx <= b1 {
                        frame.level -= 1;
                    } else if idx <= b2 {
                        idx -= &b1;
                        frame = Frame {
                            level: frame.level - 2,
                            reversed: true,
                            offset: frame.offset + 1,
                        };
                    } else {
                        idx -= &b2;
                        frame.level -= 1;
                        frame.offset += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn crn_base_and_chain() {
        let t = CrnTable::new();
        let got: Vec<BigInt> = (0..=5).map(|n| t.crn(n)).collect();
        let want: Vec<BigInt> = [0, 1, 2, 5, 12, 29].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want);
        assert_eq!(t.crn(24), BigInt::from(543_339_720u64));
    }

    #[test]
    fn crn_growth() {
        let t = CrnTable::new();
        assert!(t.crn(2) >= 2 * t.crn(1));
        for n in 2..=30 {
            assert!(t.crn(n + 1) > 2 * t.crn(n));
        }
    }

    #[test]
    fn canonical_c3() {
        let c3 = canonical_crooked(3, false).unwrap();
        assert_eq!(c3.values(), &[0, 1, 2, 1, 2, 3]);
        assert!(c3.is_surjective());
    }

    #[test]
    fn canonical_c5_matches_figure() {
        let c5 = canonical_crooked(5, false).unwrap();
        let want: Vec<usize> = vec![
            0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 3,
            4, 5,
        ];
        assert_eq!(c5.values(), &want[..]);
    }

    #[test]
    fn canonical_reversed() {
        let c4 = canonical_crooked(4, false).unwrap();
        let c4r = canonical_crooked(4, true).unwrap();
        let t = CrnTable::new();
        let m = usize::try_from(&t.crn(4)).unwrap();
        for i in 0..=m {
            assert_eq!(c4r.value(i), c4.value(m - i));
        }
    }

    #[test]
    fn canonical_respects_bound() {
        let err = canonical_crooked_bounded(10, false, 100).unwrap_err();
        assert!(matches!(err, CrookednessError::TooLarge { n: 10, .. }));
    }

    #[test]
    fn eval_point_matches_materialized() {
        let t = CrnTable::new();
        for n in 0..=10 {
            let c = canonical_crooked(n, false).unwrap();
            for i in 0..=c.domain_size() {
                let v = eval_point(&t, n, &BigInt::from(i), false).unwrap();
                assert_eq!(v, c.value(i), "c_{n}({i})");
                let vr = eval_point(&t, n, &BigInt::from(i), true).unwrap();
                assert_eq!(vr, c.value(c.domain_size() - i), "c'_{n}({i})");
            }
        }
    }

    #[test]
    fn eval_point_endpoints_at_depth_24() {
        let t = CrnTable::new();
        assert_eq!(eval_point(&t, 24, &BigInt::zero(), false).unwrap(), 0);
        assert_eq!(eval_point(&t, 24, &t.crn(24), false).unwrap(), 24);
    }

    #[test]
    fn eval_point_rejects_out_of_range() {
        let t = CrnTable::new();
        let err = eval_point(&t, 3, &BigInt::from(6), false).unwrap_err();
        assert!(matches!(err, CrookednessError::IndexOutOfRange { .. }));
    }

    #[test]
    fn eval_point_implementations_agree_on_c24() {
        use rand::{Rng, SeedableRng};
        let t = CrnTable::new();
        let size = t.crn(24);
        let size_u64 = u64::try_from(&size).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC24);
        for _ in 0..10_000 {
            let i = BigInt::from(rng.gen_range(0..=size_u64));
            assert_eq!(
                eval_point(&t, 24, &i, false).unwrap(),
                eval_point_stack(&t, 24, &i)
            );
        }
    }

    #[test]
    fn is_crooked_identity_cases() {
        assert!(is_crooked(&SimplicialMap::identity(2)).is_crooked());
        assert_eq!(
            is_crooked(&SimplicialMap::identity(3)),
            CrookedCheck::NotCrooked { pair: (0, 3) }
        );
    }

    #[test]
    fn is_crooked_canonical_small() {
        for n in 0..=8 {
            let c = canonical_crooked(n, false).unwrap();
            assert!(is_crooked(&c).is_crooked(), "c_{n}");
            assert!(is_crooked(&c.reversed()).is_crooked(), "c'_{n}");
        }
    }

    #[test]
    fn oracle_agrees_on_canonical_and_random() {
        use rand::{Rng, SeedableRng};
        for n in 0..=6 {
            let c = canonical_crooked(n, false).unwrap();
            assert_eq!(is_crooked(&c), is_crooked_oracle(&c));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(1..=60);
            let mut vals: Vec<i64> = vec![rng.gen_range(0..=n)];
            for _ in 0..m {
                let prev = *vals.last().unwrap();
                let step = rng.gen_range(-1..=1i64);
                vals.push((prev + step).clamp(0, n));
            }
            let s = SimplicialMap::build(n as usize, &vals).unwrap();
            assert_eq!(is_crooked(&s), is_crooked_oracle(&s), "map {vals:?}");
        }
    }

    #[test]
    fn sandwich_verdicts() {
        let c5 = canonical_crooked(5, false).unwrap();
        assert_eq!(
            eps_crooked_decide(&c5, &rat(1, 4)),
            CrookedVerdict::Certified { epsilon: rat(1, 4) }
        );
        let id3 = SimplicialMap::identity(3);
        assert_eq!(
            eps_crooked_decide(&id3, &rat(1, 3)),
            CrookedVerdict::Refuted {
                epsilon: rat(1, 3),
                pair: (0, 3)
            }
        );
        assert_eq!(
            eps_crooked_decide(&id3, &rat(2, 5)),
            CrookedVerdict::Indeterminate {
                window: (rat(1, 3), rat(1, 2))
            }
        );
        // A crooked map queried at eps exactly 1/n is also undecided.
        assert_eq!(
            eps_crooked_decide(&c5, &rat(1, 5)),
            CrookedVerdict::Indeterminate {
                window: (rat(1, 5), rat(3, 10))
            }
        );
    }

    #[test]
    fn certificate_compose_left() {
        let c5 = canonical_crooked(5, false).unwrap();
        let g = CrookednessCertificate::from_check("c5", &c5, rat(1, 5) + rat(1, 100));
        let gf = g.compose_left("c5 ∘ f");
        assert_eq!(gf.epsilon, g.epsilon);
        assert_eq!(gf.replayed_epsilon(), g.epsilon);
    }

    #[test]
    fn certificate_compose_right() {
        let c5 = canonical_crooked(5, false).unwrap();
        let f = CrookednessCertificate::from_check("f", &c5, rat(21, 100));
        // g with Lipschitz 2 is (eps, eps/2)-continuous.
        let g_mod = Modulus::from_lipschitz(rat(2, 1));
        let gf = f.compose_right("g ∘ f", &g_mod, &rat(1, 2)).unwrap();
        assert_eq!(gf.epsilon, rat(1, 2));
        assert!(gf.replayed_epsilon() <= gf.epsilon);
        // Too-weak inner certificate is rejected: delta(1/3) = 1/6 < 21/100.
        let err = f.compose_right("g ∘ f", &g_mod, &rat(1, 3)).unwrap_err();
        assert!(matches!(err, CrookednessError::ModulusMismatch { .. }));
    }

    #[test]
    fn certificate_perturb() {
        let c5 = canonical_crooked(5, false).unwrap();
        let f = c5.realize();
        // Perturb one interior value slightly.
        let mut pts = f.points().to_vec();
        pts[3].1 += rat(1, 200);
        let g = PLMap::new(pts).unwrap();
        let cert_f = CrookednessCertificate::from_check("f", &c5, rat(1, 4));
        let cert_g = cert_f.perturb("g", &f, &g, &rat(1, 100)).unwrap();
        assert_eq!(cert_g.epsilon, rat(1, 4) + rat(2, 100));
        assert_eq!(cert_g.replayed_epsilon(), cert_g.epsilon);
        let err = cert_f.perturb("g", &f, &g, &rat(1, 400)).unwrap_err();
        assert!(matches!(err, CrookednessError::DistanceTooLarge { .. }));
    }

    #[test]
    fn certificate_serialization_round_trip() {
        let c5 = canonical_crooked(5, false).unwrap();
        let cert = CrookednessCertificate::from_check("c5", &c5, rat(1, 4))
            .compose_left("c5 ∘ q");
        let json = serde_json::to_string(&cert).unwrap();
        let back: CrookednessCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
