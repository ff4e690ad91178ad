use std::sync::OnceLock;

use crate::algebra::{RatFunc, Rational};

use super::identities::{self as id, Built};
use super::{Ctx, HarnessError, Mode, Params};

/// Symbolic runs are refused above this matrix dimension.
pub const SYMBOLIC_DIM_CAP: usize = 8;

type Builder<T> = fn(&Params, &mut Ctx<T>) -> Built<T>;

/// One registered identity with its default instances.
pub struct IdentitySpec {
    pub name: &'static str,
    pub label: &'static str,
    pub symbolic_defaults: &'static [(&'static str, usize)],
    pub numeric_defaults: &'static [(&'static str, usize)],
    dim: fn(&Params) -> usize,
    pub(crate) numeric: Builder<Rational>,
    pub(crate) symbolic: Builder<RatFunc>,
}

impl IdentitySpec {
    pub fn defaults(&self, mode: Mode) -> Params {
        match mode {
            Mode::Symbolic => Params::from_pairs(self.symbolic_defaults),
            Mode::Numeric => Params::from_pairs(self.numeric_defaults),
        }
    }

    pub fn param_names(&self) -> impl Iterator<Item = &'static str> {
        self.numeric_defaults.iter().map(|&(k, _)| k)
    }

    /// Defaults for `mode` with `overrides` applied; unknown keys and
    /// symbolic instances above the size cap are rejected.
    pub fn resolve(&self, mode: Mode, overrides: &Params) -> Result<Params, HarnessError> {
        let mut params = self.defaults(mode);
        for (k, &v) in &overrides.0 {
            if !self.param_names().any(|name| name == k) {
                return Err(self.invalid(format!("unknown parameter {k:?}")));
            }
            params.0.insert(k.clone(), v);
        }
        let dim = self.dim(&params);
        if mode == Mode::Symbolic && dim > SYMBOLIC_DIM_CAP {
            return Err(self.invalid(format!(
                "matrix dimension {dim} exceeds the symbolic cap {SYMBOLIC_DIM_CAP}; use numeric mode"
            )));
        }
        Ok(params)
    }

    /// Largest matrix dimension the instance builds.
    pub fn dim(&self, params: &Params) -> usize {
        (self.dim)(params)
    }

    pub(crate) fn invalid(&self, reason: impl Into<String>) -> HarnessError {
        HarnessError::InvalidParams { identity: self.name.to_string(), reason: reason.into() }
    }
}

macro_rules! entry {
    ($name:literal, $f:ident, $label:literal, [$($sk:ident = $sv:expr),*], [$($nk:ident = $nv:expr),*], $dim:expr) => {
        IdentitySpec {
            name: $name,
            label: $label,
            symbolic_defaults: &[$((stringify!($sk), $sv)),*],
            numeric_defaults: &[$((stringify!($nk), $nv)),*],
            dim: $dim,
            numeric: id::$f::<Rational>,
            symbolic: id::$f::<RatFunc>,
        }
    };
}

fn g(p: &Params, k: &str) -> usize {
    p.get(k)
}

fn build() -> Vec<IdentitySpec> {
    vec![
        entry!("cauchy", cauchy, "Cauchy's determinant identity", [n = 2], [n = 4], |p| g(p, "n")),
        entry!("schur", schur, "Schur's Pfaffian identity", [n = 2], [n = 3], |p| 2 * g(p, "n")),
        entry!("special1", special1, "determinant of (b_j - a_i)/(y_j - x_i)", [n = 2], [n = 4], |p| 2 * g(p, "n")),
        entry!(
            "special2",
            special2,
            "Pfaffian of (a_j - a_i)(b_j - b_i)/(x_j - x_i)",
            [n = 2],
            [n = 3],
            |p| 2 * g(p, "n")
        ),
        entry!(
            "main1",
            main1,
            "Cauchy-type determinant of generalized Vandermonde entries",
            [n = 2, p = 1, q = 0],
            [n = 2, p = 1, q = 2],
            |p| 2 * g(p, "n") + g(p, "p") + g(p, "q")
        ),
        entry!(
            "main2",
            main2,
            "Schur-type Pfaffian of products of generalized Vandermonde entries",
            [n = 2, p = 1, q = 0, r = 0, s = 0],
            [n = 2, p = 1, q = 1, r = 1, s = 1],
            |p| 2 * g(p, "n") + (g(p, "p") + g(p, "q")).max(g(p, "r") + g(p, "s"))
        ),
        entry!(
            "main3",
            main3,
            "Cauchy-type determinant of W entries over (y_j - x_i)(1 - x_i y_j)",
            [n = 2, p = 0],
            [n = 2, p = 1],
            |p| 2 * g(p, "n") + g(p, "p")
        ),
        entry!(
            "main4",
            main4,
            "Schur-type Pfaffian of W entries over (x_j - x_i)(1 - x_i x_j)",
            [n = 2, p = 0, q = 0],
            [n = 2, p = 1, q = 1],
            |p| 2 * g(p, "n") + g(p, "p").max(g(p, "q"))
        ),
        entry!(
            "cauchy1",
            cauchy1,
            "Cauchy-type determinant of staircase Schur functions",
            [n = 2, k = 1],
            [n = 3, k = 2],
            |p| g(p, "n").max(2 + g(p, "k"))
        ),
        entry!(
            "schur1",
            schur1,
            "Schur-type Pfaffian of staircase Schur functions",
            [n = 2, k = 1, l = 0],
            [n = 2, k = 1, l = 2],
            |p| 2 * g(p, "n")
        ),
        entry!(
            "prop_n2",
            prop_n2,
            "four-point Pfaffian of generalized Vandermonde products",
            [p = 1, q = 0, r = 0, s = 0],
            [p = 1, q = 1, r = 1, s = 0],
            |p| 4 + (g(p, "p") + g(p, "q")).max(g(p, "r") + g(p, "s"))
        ),
        entry!("rel_v1", rel_v1, "reduction of V^{p,q} to V^{p-1,q}", [p = 1, q = 1], [p = 3, q = 2], |p| g(p, "p")
            + g(p, "q")),
        entry!("rel_v2", rel_v2, "V^{p,q}(x;a) against V^{q,p}(x;1/a)", [p = 1, q = 1], [p = 3, q = 3], |p| g(p, "p")
            + g(p, "q")),
        entry!("det_dodgson", det_dodgson, "Desnanot-Jacobi formula", [n = 2], [n = 6], |p| g(p, "n")),
        entry!("pf_dodgson", pf_dodgson, "Pfaffian Desnanot-Jacobi formula", [n = 2], [n = 4], |p| 2 * g(p, "n")),
        entry!(
            "homog1",
            homog1,
            "homogeneous version of the Schur-type Pfaffian",
            [n = 2, p = 0, q = 0, r = 0, s = 0],
            [n = 2, p = 1, q = 1, r = 0, s = 0],
            |p| 2 * g(p, "n") + (g(p, "p") + g(p, "q")).max(g(p, "r") + g(p, "s"))
        ),
        entry!(
            "homog2",
            homog2,
            "homogeneous version of the Cauchy-type determinant",
            [n = 2, p = 0, q = 0],
            [n = 2, p = 1, q = 1],
            |p| 2 * g(p, "n") + g(p, "p") + g(p, "q")
        ),
        entry!("pf_det", pf_det, "Pfaffian of a block anti-diagonal skew matrix", [m = 2, n = 2], [m = 3, n = 3], |p| 2
            * g(p, "n")),
        entry!("rel_uv1", rel_uv1, "U^{p,q} as a rescaled V^{p,q}", [p = 1, q = 1], [p = 2, q = 3], |p| g(p, "p")
            + g(p, "q")),
        entry!("rel_uv2", rel_uv2, "V^{p,q} as U^{p,q} with unit first coordinates", [p = 1, q = 1], [p = 3, q = 3], |p| {
            g(p, "p") + g(p, "q")
        }),
        entry!("rel_uw1", rel_uw1, "W^{2n} as U^{n,n}", [n = 2], [n = 3], |p| 2 * g(p, "n")),
        entry!("rel_uw2", rel_uw2, "W^{2n+1} as U^{n,n+1}", [n = 1], [n = 2], |p| 2 * g(p, "n") + 1),
        entry!(
            "variation1",
            variation1,
            "Cauchy-type determinant of the partition sums F",
            [n = 2, p = 0, q = 0],
            [n = 2, p = 1, q = 1],
            |p| 2 * g(p, "n") + g(p, "p") + g(p, "q")
        ),
        entry!(
            "variation2",
            variation2,
            "Schur-type Pfaffian of the partition sums F",
            [n = 2, p = 0, q = 0, r = 0, s = 0],
            [n = 1, p = 1, q = 1, r = 1, s = 1],
            |p| 2 * g(p, "n") + (g(p, "p") + g(p, "q")).max(g(p, "r") + g(p, "s"))
        ),
        entry!("sundquist", sundquist, "Sundquist's Pfaffian identity", [n = 2], [n = 3], |p| 2 * g(p, "n")),
        entry!("rel_fv", rel_fv, "F^{p,q} through V^{p,q} and U^{p,q}", [p = 1, q = 1], [p = 3, q = 2], |p| g(p, "p")
            + g(p, "q")),
        entry!("rel_gh", rel_gh, "G^{p,q} and H^{p,q} through F^{p,q}", [p = 1, q = 1], [p = 3, q = 2], |p| g(p, "p")
            + g(p, "q")),
        entry!("littlewood", littlewood, "Littlewood's formula", [n = 2], [n = 5], |p| g(p, "n")),
        entry!("cauchy_binet", cauchy_binet, "Cauchy-Binet formula", [n = 2, N = 3], [n = 3, N = 5], |p| g(p, "N")
            .max(g(p, "n"))),
        entry!("minor_Dr", minor_dr, "maximal minors of the band matrix D_r", [r = 3], [r = 4], |p| 2 * g(p, "r")
            + 2),
        entry!("minor_BC", minor_bc, "maximal minors of the band matrices B_r and C_r", [r = 3], [r = 4], |p| 2
            * g(p, "r")
            + 2),
        entry!(
            "another1",
            another1,
            "Cauchy-type determinant of 1/V^{p+1,q+1}",
            [n = 2, p = 0, q = 0],
            [n = 2, p = 1, q = 1],
            |p| g(p, "n").max(g(p, "p") + g(p, "q") + 2)
        ),
        entry!(
            "another2",
            another2,
            "Cauchy-type determinant of 1/W^{p+2}",
            [n = 2, p = 0],
            [n = 2, p = 1],
            |p| g(p, "n").max(g(p, "p") + 2)
        ),
        entry!("plucker", plucker, "three-term Plucker relation", [m = 2], [m = 4], |p| g(p, "m") + 4),
        entry!(
            "plucker_vw",
            plucker_vw,
            "quadratic relations among generalized Vandermonde determinants",
            [p = 1, q = 0],
            [p = 2, q = 1],
            |p| g(p, "p") + g(p, "q") + 2
        ),
        entry!(
            "special_pf",
            special_pf,
            "Pfaffian of (x_j^m - x_i^m)^2/(x_j - x_i)",
            [m = 1, r = 2],
            [m = 2, r = 2],
            |p| 2 * g(p, "m") * g(p, "r")
        ),
        entry!(
            "special_hyppf",
            special_hyppf,
            "hyperpfaffian of Vandermonde products",
            [m = 1, r = 2],
            [m = 2, r = 2],
            |p| 2 * g(p, "m") * g(p, "r")
        ),
        entry!("hyper_v", hyper_v, "V^{n,n} expressed by a hyperpfaffian", [n = 2], [n = 4], |p| 2 * g(p, "n")),
        entry!("hyper_u", hyper_u, "U^{n,n} expressed by a hyperpfaffian", [n = 2], [n = 4], |p| 2 * g(p, "n")),
        entry!("compo", compo, "composition of hyperpfaffians", [n = 2, r = 2], [n = 4, r = 2], |p| g(p, "n")
            * g(p, "r")),
        entry!(
            "det_schur",
            det_schur,
            "Cauchy-type determinant of rectangular Schur functions",
            [n = 2, p = 0, q = 1, e = 0],
            [n = 2, p = 1, q = 1, e = 1],
            |p| g(p, "n")
        ),
        entry!(
            "pf_schur",
            pf_schur,
            "Schur-type Pfaffian of rectangular Schur functions",
            [n = 2, p = 0, q = 0, r = 0, s = 0, e = 1, f = 0],
            [n = 2, p = 1, q = 1, r = 0, s = 1, e = 1, f = 1],
            |p| 2 * g(p, "n")
        ),
        entry!(
            "pf_schur2",
            pf_schur2,
            "Pfaffian of complete homogeneous products",
            [n = 1, e = 1, f = 1, p = 1, r = 0],
            [n = 2, e = 1, f = 1, p = 1, r = 1],
            |p| 2 * g(p, "n")
        ),
        entry!(
            "pf_schur3",
            pf_schur3,
            "sub-Pfaffians of B and products of rectangular Schur functions",
            [n = 1, e = 1, f = 1, zc = 1, wc = 1],
            [n = 2, e = 1, f = 1, zc = 2, wc = 2],
            |p| 2 * g(p, "n") + g(p, "e") + g(p, "f")
        ),
        entry!("minor_sum", minor_sum, "minor-summation formula", [n = 1, N = 4], [n = 2, N = 6], |p| g(p, "N")),
    ]
}

/// Every identity, in a fixed order.
pub fn registry() -> &'static [IdentitySpec] {
    static REGISTRY: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn lookup(name: &str) -> Result<&'static IdentitySpec, HarnessError> {
    registry().iter().find(|s| s.name == name).ok_or_else(|| HarnessError::UnknownIdentity(name.to_string()))
}
