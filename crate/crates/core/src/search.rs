//! Random-walk search over Majorana codes.
//!
//! The walk keeps `N_stab − 1` stored generators (parity is implicit) and at
//! every step picks a uniformly random 4-subset of modes {i, j, k, l}. Each
//! stored generator with odd overlap on the subset is multiplied by
//! γ_iγ_jγ_kγ_l. The map is linear, preserves the overlap form and is its own
//! inverse, so the stored list always describes a valid code with the same
//! `N_stab`. After every step the code is tested against the target distance.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::MajoranaCode;
use crate::distance::{columns_distinct, D6ColumnCheck};
use crate::error::{Error, Result};
use crate::f2::{replace_bits, weight_masks, MajoranaOperator, ReplacementMask, MAX_MODES};

/// Parameters of one walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkParams {
    pub nmaj: usize,
    pub nstab: usize,
    pub target_distance: u32,
    pub steps: u64,
    pub seed: u64,
}

impl WalkParams {
    pub fn new(nmaj: usize, nstab: usize, target_distance: u32, steps: u64, seed: u64) -> Self {
        Self {
            nmaj,
            nstab,
            target_distance,
            steps,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::WalkParams(msg));
        if self.nmaj % 2 == 1 || self.nmaj < 4 || self.nmaj > MAX_MODES {
            return bad(format!(
                "nmaj must be even and within 4..={MAX_MODES}, got {}",
                self.nmaj
            ));
        }
        if self.nstab < 2 {
            return bad(format!("nstab must be at least 2, got {}", self.nstab));
        }
        if 2 * (self.nstab - 1) > self.nmaj {
            return bad(format!(
                "2(nstab-1) = {} exceeds nmaj = {}",
                2 * (self.nstab - 1),
                self.nmaj
            ));
        }
        let k = self.nmaj as i64 / 2 - self.nstab as i64;
        if k < 0 {
            return bad(format!("K = nmaj/2 - nstab = {k} is negative"));
        }
        match self.target_distance {
            4 => {}
            6 if k >= 1 => {}
            6 => return bad("distance-6 search needs K >= 1 logicals to track".into()),
            d => return bad(format!("target distance must be 4 or 6, got {d}")),
        }
        if self.steps == 0 {
            return bad("steps must be positive".into());
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.nmaj / 2 - self.nstab
    }
}

/// All `C(nmaj, 4)` replacement masks, shared between walks on the same size.
pub fn replacement_masks(nmaj: usize) -> Arc<[u64]> {
    weight_masks(nmaj, 4).into()
}

/// Walk state: the stored list, tracked logicals, RNG and step counter.
#[derive(Clone, Debug)]
pub struct WalkState {
    nmaj: usize,
    target_distance: u32,
    stored: Vec<u64>,
    logicals: Vec<u64>,
    rng: ChaCha8Rng,
    steps: u64,
    masks: Arc<[u64]>,
    d6: D6ColumnCheck,
}

/// Initial walk state: stored list γ1γ2, γ3γ4, …, plus (for distance 6)
/// a logical basis of that initial code.
pub fn init_walk(p: &WalkParams) -> Result<WalkState> {
    init_walk_with_masks(p, replacement_masks(p.nmaj))
}

pub fn init_walk_with_masks(p: &WalkParams, masks: Arc<[u64]>) -> Result<WalkState> {
    p.validate()?;
    let stored: Vec<u64> = (0..p.nstab - 1).map(|t| 0b11u64 << (2 * t)).collect();
    let logicals = if p.target_distance == 6 {
        MajoranaCode::from_raw(p.nmaj, &stored)
            .logical_basis()
            .bits()
    } else {
        Vec::new()
    };
    Ok(WalkState {
        nmaj: p.nmaj,
        target_distance: p.target_distance,
        stored,
        logicals,
        rng: ChaCha8Rng::seed_from_u64(p.seed),
        steps: 0,
        masks,
        d6: D6ColumnCheck::new(),
    })
}

impl WalkState {
    pub fn nmaj(&self) -> usize {
        self.nmaj
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn stored_bits(&self) -> &[u64] {
        &self.stored
    }

    pub fn logical_bits(&self) -> &[u64] {
        &self.logicals
    }

    /// Snapshot of the current code.
    pub fn code(&self) -> MajoranaCode {
        MajoranaCode::from_raw(self.nmaj, &self.stored)
    }

    pub fn logical_operators(&self) -> Vec<MajoranaOperator> {
        self.logicals
            .iter()
            .map(|&b| MajoranaOperator::from_bits(self.nmaj, b).expect("bits within nmaj"))
            .collect()
    }

    /// One step with a uniformly drawn mask; returns the mask used.
    #[inline]
    pub fn step(&mut self) -> u64 {
        let mask = self.masks[self.rng.gen_range(0..self.masks.len())];
        self.apply_mask(mask);
        self.steps += 1;
        mask
    }

    /// Applies a specific mask to every stored generator and tracked logical
    /// and counts it as a step.
    pub fn step_with(&mut self, mask: &ReplacementMask) -> Result<()> {
        if mask.nmaj() != self.nmaj {
            return Err(Error::LengthMismatch {
                left: self.nmaj,
                right: mask.nmaj(),
            });
        }
        self.apply_mask(mask.bits());
        self.steps += 1;
        Ok(())
    }

    #[inline(always)]
    fn apply_mask(&mut self, mask: u64) {
        for g in self.stored.iter_mut().chain(self.logicals.iter_mut()) {
            *g = replace_bits(*g, mask);
        }
    }

    /// Whether the current code passes the target distance test.
    #[inline]
    pub fn passes(&mut self) -> bool {
        match self.target_distance {
            4 => columns_distinct(self.nmaj, &self.stored),
            _ => self.d6.passes(self.nmaj, &self.stored, &self.logicals),
        }
    }
}

/// Free-function form of [`WalkState::step`].
pub fn walk_step(s: &mut WalkState) -> u64 {
    s.step()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    Exhausted,
}

/// Result of one walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub found_code: Option<MajoranaCode>,
    pub steps_taken: u64,
    pub seed: u64,
}

/// Runs one walk until the target check passes or the step budget is spent.
pub fn run_walk(p: &WalkParams) -> Result<SearchOutcome> {
    let mut state = init_walk(p)?;
    Ok(drive(&mut state, p, &|| false))
}

fn drive(state: &mut WalkState, p: &WalkParams, abort: &dyn Fn() -> bool) -> SearchOutcome {
    const ABORT_POLL: u64 = 1 << 16;
    while state.steps < p.steps {
        state.step();
        if state.passes() {
            return SearchOutcome {
                status: SearchStatus::Found,
                found_code: Some(state.code()),
                steps_taken: state.steps,
                seed: p.seed,
            };
        }
        if state.steps.is_multiple_of(ABORT_POLL) && abort() {
            break;
        }
    }
    SearchOutcome {
        status: SearchStatus::Exhausted,
        found_code: None,
        steps_taken: state.steps,
        seed: p.seed,
    }
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for run `index` of a campaign.
pub fn run_seed(master_seed: u64, index: u64) -> u64 {
    splitmix64(master_seed ^ splitmix64(index))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CampaignOptions {
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Report only runs up to and including the first successful run index.
    pub stop_early: bool,
}

/// Per-run entry of a campaign report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    pub status: SearchStatus,
    pub steps_taken: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub code: Option<Vec<String>>,
}

/// Campaign-level parameters (per-run seeds are derived, not stored here).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub nmaj: usize,
    pub nstab: usize,
    pub k: usize,
    pub target_distance: u32,
    pub steps: u64,
}

/// Aggregated result of many independent walks.
///
/// Wall time is kept for display but excluded from the serialized report so
/// that reports are byte-identical for identical inputs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub params: CampaignParams,
    pub master_seed: u64,
    pub runs: usize,
    pub stop_early: bool,
    pub successes: usize,
    pub total_steps: u64,
    pub outcomes: Vec<RunRecord>,
    #[serde(skip)]
    pub wall_time: Duration,
    #[serde(skip)]
    pub found_codes: Vec<(usize, MajoranaCode)>,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Runs `runs` independent walks from fresh initial states.
///
/// Run `i` uses seed [`run_seed`]`(master_seed, i)`. The report is ordered by
/// run index and does not depend on thread count or scheduling.
pub fn run_campaign(
    p: &WalkParams,
    runs: usize,
    master_seed: u64,
    opts: CampaignOptions,
) -> Result<CampaignReport> {
    p.validate()?;
    let start = Instant::now();
    let masks = replacement_masks(p.nmaj);
    let first_success = AtomicUsize::new(usize::MAX);

    let work = |i: usize| -> Option<SearchOutcome> {
        if opts.stop_early && i > first_success.load(Ordering::Relaxed) {
            return None;
        }
        let rp = WalkParams {
            seed: run_seed(master_seed, i as u64),
            ..*p
        };
        let mut state = init_walk_with_masks(&rp, masks.clone()).expect("params validated");
        let abort = || opts.stop_early && i > first_success.load(Ordering::Relaxed);
        let out = drive(&mut state, &rp, &abort);
        if out.status == SearchStatus::Found && opts.stop_early {
            first_success.fetch_min(i, Ordering::Relaxed);
        }
        Some(out)
    };

    let results: Vec<Option<SearchOutcome>> = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::WalkParams(format!("thread pool: {e}")))?
            .install(|| (0..runs).into_par_iter().map(work).collect()),
        None => (0..runs).into_par_iter().map(work).collect(),
    };

    let cutoff = if opts.stop_early {
        first_success.load(Ordering::Relaxed)
    } else {
        usize::MAX
    };
    let mut outcomes = Vec::new();
    let mut found_codes = Vec::new();
    for (run, out) in results.into_iter().enumerate() {
        if run > cutoff {
            break;
        }
        let out = out.expect("runs up to the first success always execute");
        let code = out.found_code.as_ref().map(|c| c.canonicalized());
        if let Some(c) = &code {
            found_codes.push((run, c.clone()));
        }
        outcomes.push(RunRecord {
            run,
            seed: out.seed,
            status: out.status,
            steps_taken: out.steps_taken,
            code: code.map(|c| c.stored().iter().map(|g| g.to_string()).collect()),
        });
    }
    let successes = found_codes.len();
    let total_steps = outcomes.iter().map(|o| o.steps_taken).sum();
    Ok(CampaignReport {
        params: CampaignParams {
            nmaj: p.nmaj,
            nstab: p.nstab,
            k: p.k(),
            target_distance: p.target_distance,
            steps: p.steps,
        },
        master_seed,
        runs,
        stop_early: opts.stop_early,
        successes,
        total_steps,
        outcomes,
        wall_time: start.elapsed(),
        found_codes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{brute_force_distance, passes_d4_check, DistanceResult};
    use crate::f2::overlap_bit;

    #[test]
    fn init_examples() {
        let s = init_walk(&WalkParams::new(16, 5, 4, 10, 1)).unwrap();
        let gens: Vec<String> = s.code().stored().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens[0], "1100000000000000");
        assert_eq!(gens[1], "0011000000000000");
        assert_eq!(gens.len(), 4);
        assert!(s.logical_bits().is_empty());

        let s = init_walk(&WalkParams::new(20, 9, 6, 10, 1)).unwrap();
        assert_eq!(s.stored_bits().len(), 8);
        assert_eq!(s.logical_bits().len(), 2);

        let err = init_walk(&WalkParams::new(8, 5, 4, 10, 1)).unwrap_err();
        assert!(err.to_string().contains("negative"), "{err}");
    }

    #[test]
    fn params_rejections() {
        for p in [
            WalkParams::new(9, 3, 4, 1, 0),
            WalkParams::new(16, 1, 4, 1, 0),
            WalkParams::new(16, 8, 6, 1, 0),
            WalkParams::new(16, 5, 5, 1, 0),
            WalkParams::new(16, 5, 4, 0, 0),
            WalkParams::new(66, 5, 4, 1, 0),
        ] {
            assert!(p.validate().is_err(), "{p:?}");
        }
    }

    #[test]
    fn step_with_commuting_mask_leaves_generators() {
        let mut s = init_walk(&WalkParams::new(16, 5, 4, 10, 1)).unwrap();
        let before = s.stored_bits().to_vec();
        // modes 1,2,3,4 overlap γ1γ2 and γ3γ4 in two modes each
        s.step_with(&ReplacementMask::new(16, [0, 1, 2, 3]).unwrap())
            .unwrap();
        assert_eq!(s.stored_bits(), &before[..]);
        assert_eq!(s.steps(), 1);
    }

    #[test]
    fn double_step_is_identity() {
        let mut s = init_walk(&WalkParams::new(20, 9, 6, 10, 7)).unwrap();
        for _ in 0..50 {
            s.step();
        }
        let snapshot = (s.stored_bits().to_vec(), s.logical_bits().to_vec());
        let m = ReplacementMask::new(20, [2, 5, 11, 19]).unwrap();
        s.step_with(&m).unwrap();
        s.step_with(&m).unwrap();
        assert_eq!(
            (s.stored_bits().to_vec(), s.logical_bits().to_vec()),
            snapshot
        );
    }

    #[test]
    fn three_masks_swap_modes_one_and_five() {
        let n = 6;
        let masks = [[0, 1, 2, 3], [1, 2, 3, 4], [0, 1, 2, 3]]
            .map(|m| ReplacementMask::new(n, m).unwrap().bits());
        for v in 0u64..(1 << n) {
            let out = masks.iter().fold(v, |acc, &m| replace_bits(acc, m));
            let b0 = v & 1;
            let b4 = (v >> 4) & 1;
            let swapped = (v & !0b10001) | (b0 << 4) | b4;
            assert_eq!(out, swapped, "v={v:06b}");
        }
    }

    #[test]
    fn walk_is_deterministic() {
        let p = WalkParams::new(16, 5, 4, 20_000, 42);
        assert_eq!(run_walk(&p).unwrap(), run_walk(&p).unwrap());
    }

    #[test]
    fn found_codes_pass_checks() {
        let p = WalkParams::new(16, 5, 4, 2_000_000, 3);
        let out = run_walk(&p).unwrap();
        if let Some(c) = out.found_code {
            assert!(passes_d4_check(c.stored()));
            assert_eq!(
                brute_force_distance(&c, 6).unwrap(),
                DistanceResult::Exact(4)
            );
        }
    }

    #[test]
    fn small_negative_never_succeeds() {
        let p = WalkParams::new(10, 4, 4, 20_000, 5);
        assert_eq!(run_walk(&p).unwrap().status, SearchStatus::Exhausted);
    }

    #[test]
    fn tracked_logicals_stay_valid() {
        let mut s = init_walk(&WalkParams::new(20, 9, 6, 10, 11)).unwrap();
        for _ in 0..500 {
            s.step();
            let code = s.code();
            for &l in s.logical_bits() {
                assert!(code.stored_bits().iter().all(|&g| !overlap_bit(g, l)));
            }
        }
        let lb = crate::code::LogicalBasis {
            x_ops: s.logical_operators()[..1].to_vec(),
            z_ops: s.logical_operators()[1..].to_vec(),
        };
        assert!(lb.check(&s.code()).is_empty());
    }

    #[test]
    fn seeds_differ_per_run() {
        let seeds: std::collections::BTreeSet<u64> = (0..1000).map(|i| run_seed(9, i)).collect();
        assert_eq!(seeds.len(), 1000);
    }

    #[test]
    fn stop_early_truncates() {
        let p = WalkParams::new(16, 5, 4, 300_000, 0);
        let full = run_campaign(&p, 6, 123, CampaignOptions::default()).unwrap();
        let early = run_campaign(
            &p,
            6,
            123,
            CampaignOptions {
                threads: Some(2),
                stop_early: true,
            },
        )
        .unwrap();
        match full
            .outcomes
            .iter()
            .position(|o| o.status == SearchStatus::Found)
        {
            Some(first) => {
                assert_eq!(early.outcomes.len(), first + 1);
                assert_eq!(early.outcomes[..], full.outcomes[..=first]);
            }
            None => assert_eq!(early.outcomes, full.outcomes),
        }
    }
}
