use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::trial_rng;

use super::registry::{lookup, IdentitySpec};
use super::{BuildError, Ctx, Equation, HarnessError, Params, Scalar};

/// A trial gives up after this many guard hits per requested trial.
pub const GUARD_FACTOR: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Debug, Clone)]
pub struct VerifyRequest {
    pub name: String,
    /// Applied on top of the identity's defaults for `mode`.
    pub params: Params,
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub bound: u64,
    /// Size of the trial pool; `None` uses rayon's global pool.
    pub workers: Option<usize>,
}

impl VerifyRequest {
    pub fn new(name: &str, mode: Mode) -> Self {
        VerifyRequest { name: name.to_string(), params: Params::default(), mode, trials: 20, seed: 0, bound: 40, workers: None }
    }

    pub fn with_params(mut self, pairs: &[(&str, usize)]) -> Self {
        self.params = Params::from_pairs(pairs);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub equation: String,
    pub assignment: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, usize>,
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub bound: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

pub fn verify(req: &VerifyRequest) -> Result<VerificationReport, HarnessError> {
    run(req, false)
}

/// Checks `lhs = -rhs` instead. Passing here as well as in [`verify`] means
/// both sides vanish, so a sign in the statement carries no information.
pub fn verify_negated(req: &VerifyRequest) -> Result<VerificationReport, HarnessError> {
    run(req, true)
}

fn run(req: &VerifyRequest, negate: bool) -> Result<VerificationReport, HarnessError> {
    let spec = lookup(&req.name)?;
    let params = spec.resolve(req.mode, &req.params)?;
    let (trials, failures) = match req.mode {
        Mode::Symbolic => (1, symbolic(spec, &params, negate)?),
        Mode::Numeric => {
            if req.trials == 0 {
                return Err(spec.invalid("numeric mode needs at least one trial"));
            }
            (req.trials, numeric(spec, &params, req, negate)?)
        }
    };
    Ok(VerificationReport {
        identity: spec.name.to_string(),
        params: params.0,
        mode: req.mode,
        trials,
        seed: req.seed,
        bound: req.bound,
        passed: failures.is_empty(),
        failures,
    })
}

fn compare<T: Scalar>(trial: usize, eqs: Vec<Equation<T>>, cx: &Ctx<T>, negate: bool) -> Vec<Failure> {
    let assignment: Vec<(String, String)> = cx
        .point()
        .iter()
        .map(|(id, v)| (cx.table().name(id).unwrap_or("?").to_string(), v.to_string()))
        .collect();
    eqs.into_iter()
        .filter_map(|eq| {
            let rhs = if negate { eq.rhs.neg() } else { eq.rhs };
            (eq.lhs != rhs).then(|| Failure {
                trial,
                equation: eq.label,
                assignment: assignment.clone(),
                lhs: eq.lhs.render(cx.table()),
                rhs: rhs.render(cx.table()),
            })
        })
        .collect()
}

fn symbolic(spec: &IdentitySpec, params: &Params, negate: bool) -> Result<Vec<Failure>, HarnessError> {
    let mut cx = Ctx::symbolic();
    match (spec.symbolic)(params, &mut cx) {
        Ok(eqs) => Ok(compare(0, eqs, &cx, negate)),
        Err(BuildError::Invalid(reason)) => Err(spec.invalid(reason)),
        Err(BuildError::Guard) => Err(spec.invalid("a denominator vanishes identically")),
    }
}

fn numeric_trial(
    spec: &IdentitySpec,
    params: &Params,
    req: &VerifyRequest,
    trial: usize,
    negate: bool,
) -> Result<Vec<Failure>, HarnessError> {
    let draws = GUARD_FACTOR * req.trials;
    let mut rng = trial_rng(req.seed, trial as u64);
    for _ in 0..draws {
        let mut cx = Ctx::numeric(rng, req.bound);
        match (spec.numeric)(params, &mut cx) {
            Ok(eqs) => return Ok(compare(trial, eqs, &cx, negate)),
            Err(BuildError::Invalid(reason)) => return Err(spec.invalid(reason)),
            Err(BuildError::Guard) => rng = cx.into_rng().expect("numeric context owns a generator"),
        }
    }
    Err(HarnessError::GuardExhaustion { identity: spec.name.to_string(), trial, draws })
}

fn numeric(
    spec: &IdentitySpec,
    params: &Params,
    req: &VerifyRequest,
    negate: bool,
) -> Result<Vec<Failure>, HarnessError> {
    let go = || -> Vec<Result<Vec<Failure>, HarnessError>> {
        (0..req.trials).into_par_iter().map(|t| numeric_trial(spec, params, req, t, negate)).collect()
    };
    let results = match req.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| HarnessError::Config(e.to_string()))?
            .install(go),
        None => go(),
    };
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(failures)
}

fn default_mode() -> Mode {
    Mode::Numeric
}

fn default_trials() -> usize {
    20
}

fn default_bound() -> u64 {
    40
}

/// One `[[identity]]` block of a campaign file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignEntry {
    pub name: String,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_bound")]
    pub bound: u64,
    #[serde(default)]
    pub params: BTreeMap<String, usize>,
    /// Overrides the seed derived from the campaign seed.
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    #[serde(default)]
    pub seed: u64,
    pub workers: Option<usize>,
    #[serde(default)]
    pub identity: Vec<CampaignEntry>,
}

impl CampaignConfig {
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The request for entry `index`; its seed is the entry's own or the
    /// campaign seed offset by the index.
    pub fn request(&self, index: usize) -> VerifyRequest {
        let e = &self.identity[index];
        VerifyRequest {
            name: e.name.clone(),
            params: Params(e.params.clone()),
            mode: e.mode,
            trials: e.trials,
            seed: e.seed.unwrap_or_else(|| self.seed.wrapping_add(index as u64)),
            bound: e.bound,
            workers: self.workers,
        }
    }
}

/// Runs every entry in order.
pub fn campaign(config: &CampaignConfig) -> Result<Vec<VerificationReport>, HarnessError> {
    (0..config.identity.len()).map(|i| verify(&config.request(i))).collect()
}

pub fn campaign_json(reports: &[VerificationReport]) -> String {
    let mut text = serde_json::to_string_pretty(reports).expect("reports serialize");
    text.push('\n');
    text
}
