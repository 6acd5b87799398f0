//! Seeded property corpus over random connected graphs.
//!
//! Each trial draws a connected G(n, p) sample and checks, against the
//! direct 3-path oracle: the non-covered-edge characterization is
//! equivalent to being a 3-covering for a random candidate set; the exact
//! minimum cover is valid; supersets of coverings stay coverings; and valid
//! coverings satisfy the distance bound (nothing farther than 2, distance-2
//! vertices pendant).
//!
//! Determinism contract: the per-trial seed depends only on the master seed
//! and the trial index, never on scheduling, so any counterexample can be
//! replayed from the command line arguments alone.

use crate::covering::{
    characterization_holds, check_distance_theorems, is_3_covering, min_3_covering_exact,
    CoverSet,
};
use crate::families::sample_gnp;
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edge probabilities cycled through by the corpus.
pub const DEFAULT_EDGE_PROBS: [f64; 3] = [0.15, 0.3, 0.5];

/// Smallest sampled vertex count. On one or two vertices the non-covered
/// edge characterization degenerates (a lone edge fits no permitted shape
/// even though no 3-path exists), so the corpus starts at 3.
pub const MIN_CORPUS_N: usize = 3;

const CONNECT_RETRIES: usize = 1000;

/// Mixes a master seed and a trial index into the per-trial RNG seed
/// (splitmix64 finalizer).
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    let mut z = master ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws a connected G(n, p) sample, redrawing disconnected ones (bounded
/// retries; statistically unreachable for the corpus parameters).
pub fn sample_connected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    for _ in 0..CONNECT_RETRIES {
        let g = sample_gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected G({n}, {p}) sample within {CONNECT_RETRIES} redraws");
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub trials: u64,
    pub seed: u64,
    pub max_n: usize,
    pub edge_probs: Vec<f64>,
}

impl VerifyConfig {
    pub fn new(trials: u64, seed: u64, max_n: usize) -> VerifyConfig {
        assert!(max_n >= MIN_CORPUS_N, "max_n must be at least {MIN_CORPUS_N}");
        VerifyConfig {
            trials,
            seed,
            max_n,
            edge_probs: DEFAULT_EDGE_PROBS.to_vec(),
        }
    }
}

/// A failed check, with everything needed to replay it.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub trial: u64,
    pub property: &'static str,
    pub graph: Graph,
    pub cover: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyStats {
    pub property: &'static str,
    pub checked: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutcome {
    pub trials: u64,
    pub stats: Vec<PropertyStats>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyOutcome {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub const PROP_EQUIVALENCE: &str = "edge-characterization-equivalence";
pub const PROP_MIN_COVER_VALID: &str = "exact-min-cover-valid";
pub const PROP_MONOTONICITY: &str = "covering-monotonicity";
pub const PROP_DISTANCE_MIN: &str = "distance-bound-min-cover";
pub const PROP_DISTANCE_SUPERSET: &str = "distance-bound-superset";

const PROPERTIES: [&str; 5] = [
    PROP_EQUIVALENCE,
    PROP_MIN_COVER_VALID,
    PROP_MONOTONICITY,
    PROP_DISTANCE_MIN,
    PROP_DISTANCE_SUPERSET,
];

struct Recorder {
    stats: Vec<PropertyStats>,
    counterexamples: Vec<Counterexample>,
}

impl Recorder {
    fn record(
        &mut self,
        property: &'static str,
        ok: bool,
        trial: u64,
        graph: &Graph,
        cover: &CoverSet,
        detail: impl FnOnce() -> String,
    ) {
        let entry = self
            .stats
            .iter_mut()
            .find(|s| s.property == property)
            .expect("property registered");
        entry.checked += 1;
        if !ok {
            entry.failures += 1;
            self.counterexamples.push(Counterexample {
                trial,
                property,
                graph: graph.clone(),
                cover: cover.members().to_vec(),
                detail: detail(),
            });
        }
    }
}

/// Runs the corpus sequentially in trial order.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyOutcome {
    let mut rec = Recorder {
        stats: PROPERTIES
            .iter()
            .map(|&property| PropertyStats { property, checked: 0, failures: 0 })
            .collect(),
        counterexamples: Vec::new(),
    };

    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, trial));
        let n = rng.gen_range(MIN_CORPUS_N..=cfg.max_n);
        let p = cfg.edge_probs[rng.gen_range(0..cfg.edge_probs.len())];
        let g = sample_connected_gnp(&mut rng, n, p);

        // Random candidate set: the characterization must agree with the
        // 3-path oracle whether or not the candidate is a covering.
        let candidate = CoverSet::three(
            g.vertices().filter(|_| rng.gen_bool(0.5)),
            n,
        )
        .expect("candidate in range");
        let is_covering = is_3_covering(&g, &candidate);
        let holds = characterization_holds(&g, &candidate).expect("graph is connected");
        rec.record(
            PROP_EQUIVALENCE,
            is_covering == holds,
            trial,
            &g,
            &candidate,
            || format!("is-3-covering {is_covering}, characterization {holds}"),
        );

        let min_cover = min_3_covering_exact(&g);
        let min_valid = is_3_covering(&g, &min_cover);
        rec.record(PROP_MIN_COVER_VALID, min_valid, trial, &g, &min_cover, || {
            "branch-and-bound result fails the 3-path oracle".to_string()
        });
        if !min_valid {
            continue;
        }

        let distance_min = check_distance_theorems(&g, &min_cover).expect("valid covering");
        rec.record(PROP_DISTANCE_MIN, distance_min.pass, trial, &g, &min_cover, || {
            format!("witnesses: {:?}", distance_min.witnesses)
        });

        let superset = CoverSet::three(
            g.vertices()
                .filter(|&v| min_cover.contains(v) || rng.gen_bool(0.3)),
            n,
        )
        .expect("superset in range");
        let superset_valid = is_3_covering(&g, &superset);
        rec.record(PROP_MONOTONICITY, superset_valid, trial, &g, &superset, || {
            "superset of a covering is not a covering".to_string()
        });
        if superset_valid {
            let distance_sup = check_distance_theorems(&g, &superset).expect("valid covering");
            rec.record(
                PROP_DISTANCE_SUPERSET,
                distance_sup.pass,
                trial,
                &g,
                &superset,
                || format!("witnesses: {:?}", distance_sup.witnesses),
            );
        }
    }

    VerifyOutcome {
        trials: cfg.trials,
        stats: rec.stats,
        counterexamples: rec.counterexamples,
    }
}
