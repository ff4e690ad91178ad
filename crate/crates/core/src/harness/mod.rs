//! Registry of every identity, built once per scalar type, plus the symbolic
//! and numeric verifiers and the campaign runner on top of it.
//!
//! Builders are generic over [`Scalar`]. Instantiated at [`RatFunc`] they
//! produce both sides as rational functions in indeterminates, and equality
//! compares cross-multiplied numerators. Instantiated at [`Rational`] every
//! variable is a random rational drawn on first use, and a vanishing
//! denominator aborts the build with [`BuildError::Guard`] so the caller can
//! redraw.

mod identities;
mod registry;
mod run;

use std::collections::BTreeMap;
use std::marker::PhantomData;

use crate::algebra::{
    random_rational, Assignment, Field, Polynomial, RatFunc, Rational, TrialRng, VarId, VariableTable,
};

pub use registry::{lookup, registry, IdentitySpec, SYMBOLIC_DIM_CAP};
pub use run::{
    campaign, campaign_json, verify, verify_negated, CampaignConfig, CampaignEntry, Failure, Mode,
    VerificationReport, VerifyRequest, GUARD_FACTOR,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("invalid parameters for {identity}: {reason}")]
    InvalidParams { identity: String, reason: String },
    #[error("{identity}: trial {trial} hit a guard on {draws} consecutive draws")]
    GuardExhaustion { identity: String, trial: usize, draws: usize },
    #[error("campaign config: {0}")]
    Config(String),
}

/// Why a builder stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    /// A denominator or inverted quantity vanished at this point.
    Guard,
    /// The parameters are outside the identity's range.
    Invalid(String),
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for BuildError {
            fn from(e: $t) -> Self {
                BuildError::Invalid(e.to_string())
            }
        }
    )*};
}
invalid_from!(
    crate::vandermonde::VandermondeError,
    crate::linalg::LinalgError,
    crate::symfunc::SymfuncError,
    crate::lr::LrError
);

/// Integer parameters of one instance, keyed by name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(pub BTreeMap<String, usize>);

impl Params {
    pub fn from_pairs(pairs: &[(&str, usize)]) -> Self {
        Params(pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect())
    }

    /// Parameter value; builders only ask for keys the registry declares.
    pub fn get(&self, key: &str) -> usize {
        self.0.get(key).copied().unwrap_or(0)
    }
}

/// One side-by-side claim `lhs = rhs` inside an identity instance.
#[derive(Debug, Clone)]
pub struct Equation<T> {
    pub label: String,
    pub lhs: T,
    pub rhs: T,
}

impl<T> Equation<T> {
    pub fn new(label: impl Into<String>, lhs: T, rhs: T) -> Self {
        Equation { label: label.into(), lhs, rhs }
    }
}

/// Scalars the identities are instantiated at.
pub trait Scalar: Field {
    /// The value of variable `id`, which the context has already registered.
    fn variable(point: &Assignment, id: VarId) -> Self;
    /// A polynomial over registered variables, as a scalar.
    fn lift(point: &Assignment, p: &Polynomial) -> Self;
    fn render(&self, table: &VariableTable) -> String;
}

impl Scalar for Rational {
    fn variable(point: &Assignment, id: VarId) -> Self {
        point.get(id).expect("numeric variables are drawn on registration").clone()
    }
    fn lift(point: &Assignment, p: &Polynomial) -> Self {
        p.eval(point).expect("numeric variables are drawn on registration")
    }
    fn render(&self, _: &VariableTable) -> String {
        self.to_string()
    }
}

impl Scalar for RatFunc {
    fn variable(_: &Assignment, id: VarId) -> Self {
        RatFunc::from_poly(Polynomial::var(id))
    }
    fn lift(_: &Assignment, p: &Polynomial) -> Self {
        RatFunc::from_poly(p.clone())
    }
    fn render(&self, table: &VariableTable) -> String {
        self.display(table).to_string()
    }
}

/// Variable registry for one build. In numeric mode each variable gets a
/// random rational the first time it is named.
pub struct Ctx<T> {
    table: VariableTable,
    point: Assignment,
    draw: Option<(TrialRng, u64)>,
    _scalar: PhantomData<T>,
}

impl<T: Scalar> Ctx<T> {
    pub fn symbolic() -> Self {
        Ctx { table: VariableTable::new(), point: Assignment::new(), draw: None, _scalar: PhantomData }
    }

    pub fn numeric(rng: TrialRng, bound: u64) -> Self {
        Ctx { table: VariableTable::new(), point: Assignment::new(), draw: Some((rng, bound)), _scalar: PhantomData }
    }

    /// Hands the generator back so a redraw continues the same stream.
    pub fn into_rng(self) -> Option<TrialRng> {
        self.draw.map(|(rng, _)| rng)
    }

    pub fn id(&mut self, name: &str) -> VarId {
        let id = self.table.var(name);
        if let Some((rng, bound)) = self.draw.as_mut() {
            if self.point.get(id).is_none() {
                self.point.set(id, random_rational(rng, *bound));
            }
        }
        id
    }

    pub fn ids(&mut self, prefix: &str, len: usize) -> Vec<VarId> {
        (1..=len).map(|i| self.id(&format!("{prefix}{i}"))).collect()
    }

    pub fn var(&mut self, name: &str) -> T {
        let id = self.id(name);
        T::variable(&self.point, id)
    }

    /// `prefix1 .. prefix{len}`.
    pub fn vec(&mut self, prefix: &str, len: usize) -> Vec<T> {
        (1..=len).map(|i| self.var(&format!("{prefix}{i}"))).collect()
    }

    pub fn lift(&self, p: &Polynomial) -> T {
        T::lift(&self.point, p)
    }

    pub fn div(&self, a: &T, b: &T) -> Result<T, BuildError> {
        if b.is_zero() {
            return Err(BuildError::Guard);
        }
        Ok(a.exact_div(b).expect("division by a nonzero field element"))
    }

    pub fn inv(&self, a: &T) -> Result<T, BuildError> {
        self.div(&T::one(), a)
    }

    pub fn table(&self) -> &VariableTable {
        &self.table
    }

    pub fn point(&self) -> &Assignment {
        &self.point
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Identities whose two sides vanish at the default instances.
    const VANISHING: [&str; 4] = ["plucker", "plucker_vw", "special_pf", "special_hyppf"];

    fn run(name: &str, mode: Mode, params: &[(&str, usize)]) -> (bool, bool) {
        let req = VerifyRequest::new(name, mode).with_params(params);
        (verify(&req).unwrap().passed, verify_negated(&req).unwrap().passed)
    }

    #[test]
    fn every_identity_symbolic() {
        for spec in registry() {
            let (plain, negated) = run(spec.name, Mode::Symbolic, &[]);
            assert!(plain, "{}", spec.name);
            assert_eq!(negated, VANISHING.contains(&spec.name), "{} negated", spec.name);
        }
    }

    #[test]
    fn every_identity_numeric() {
        for spec in registry() {
            let (plain, negated) = run(spec.name, Mode::Numeric, &[]);
            assert!(plain, "{}", spec.name);
            assert_eq!(negated, VANISHING.contains(&spec.name), "{} negated", spec.name);
        }
    }

    #[test]
    fn sign_factors_are_load_bearing() {
        let cases: [(&str, Mode, &[(&str, usize)]); 6] = [
            ("main1", Mode::Symbolic, &[("n", 2)]),
            ("main1", Mode::Numeric, &[("n", 4), ("p", 1), ("q", 0)]),
            ("rel_uw1", Mode::Symbolic, &[("n", 2)]),
            ("rel_uw1", Mode::Numeric, &[("n", 4)]),
            ("minor_Dr", Mode::Symbolic, &[("r", 2)]),
            ("minor_Dr", Mode::Symbolic, &[("r", 3)]),
        ];
        for (name, mode, params) in cases {
            assert_eq!(run(name, mode, params), (true, false), "{name} {params:?}");
        }
    }

    #[test]
    fn larger_symbolic_instances() {
        let cases: [(&str, &[(&str, usize)]); 5] = [
            ("det_dodgson", &[("n", 3)]),
            ("pf_dodgson", &[("n", 3)]),
            ("rel_v1", &[("p", 2), ("q", 1)]),
            ("rel_fv", &[("p", 2), ("q", 1)]),
            ("rel_gh", &[("p", 2), ("q", 1)]),
        ];
        for (name, params) in cases {
            assert_eq!(run(name, Mode::Symbolic, params), (true, false), "{name} {params:?}");
        }
    }

    #[test]
    fn special_pf_nonvanishing_branch() {
        for name in ["special_pf", "special_hyppf"] {
            assert_eq!(run(name, Mode::Symbolic, &[("m", 1), ("r", 1)]), (true, false), "{name}");
            assert_eq!(run(name, Mode::Symbolic, &[("m", 2), ("r", 1)]), (true, false), "{name}");
        }
    }

    #[test]
    fn minimal_instances() {
        assert!(run("cauchy", Mode::Symbolic, &[("n", 1)]).0);
        let zeros = [("n", 1), ("p", 0), ("q", 0), ("r", 0), ("s", 0)];
        assert!(run("main2", Mode::Symbolic, &zeros).0);
        let main2 = VerifyRequest { trials: 25, ..VerifyRequest::new("main2", Mode::Numeric) };
        assert!(verify(&main2).unwrap().passed);
    }

    #[test]
    fn request_errors() {
        assert!(matches!(verify(&VerifyRequest::new("nope", Mode::Symbolic)), Err(HarnessError::UnknownIdentity(_))));
        let bad_key = VerifyRequest::new("cauchy", Mode::Symbolic).with_params(&[("k", 1)]);
        assert!(matches!(verify(&bad_key), Err(HarnessError::InvalidParams { .. })));
        let too_big = VerifyRequest::new("cauchy", Mode::Symbolic).with_params(&[("n", 9)]);
        assert!(matches!(verify(&too_big), Err(HarnessError::InvalidParams { .. })));
        let no_trials = VerifyRequest { trials: 0, ..VerifyRequest::new("cauchy", Mode::Numeric) };
        assert!(matches!(verify(&no_trials), Err(HarnessError::InvalidParams { .. })));
        let out_of_range = VerifyRequest::new("rel_v1", Mode::Symbolic).with_params(&[("p", 1), ("q", 2)]);
        assert!(matches!(verify(&out_of_range), Err(HarnessError::InvalidParams { .. })));
    }

    #[test]
    fn guard_exhaustion() {
        // bound 1 draws only -1, 0, 1, so some x_i + x_j almost always vanishes
        let req = VerifyRequest { trials: 1, bound: 1, ..VerifyRequest::new("schur", Mode::Numeric) }
            .with_params(&[("n", 6)]);
        assert!(matches!(verify(&req), Err(HarnessError::GuardExhaustion { draws: 100, .. })));
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let base = VerifyRequest::new("main2", Mode::Numeric);
        let one = verify(&VerifyRequest { workers: Some(1), ..base.clone() }).unwrap();
        let four = verify(&VerifyRequest { workers: Some(4), ..base }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn campaign_config_round_trip() {
        let cfg = CampaignConfig::parse(
            "seed = 5\n[[identity]]\nname = \"cauchy\"\nmode = \"symbolic\"\nparams = { n = 2 }\n\n[[identity]]\nname = \"schur\"\ntrials = 3\n",
        )
        .unwrap();
        assert_eq!(cfg.request(1).seed, 6);
        let reports = campaign(&cfg).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| r.passed));
        assert_eq!(campaign_json(&reports), campaign_json(&campaign(&cfg).unwrap()));
        assert!(campaign(&CampaignConfig::parse("").unwrap()).unwrap().is_empty());
        assert!(matches!(CampaignConfig::parse("[[identity]]\nbogus = 1"), Err(HarnessError::Config(_))));
    }

    #[test]
    fn registry_is_complete() {
        let names: Vec<_> = registry().iter().map(|s| s.name).collect();
        assert_eq!(names.len(), 45);
        assert!(names.contains(&"main2"));
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }
}
