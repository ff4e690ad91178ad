//! Acceptance run: one PASS/FAIL line per criterion, exact equality only.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use gvpf::algebra::{random_rational, seeded_rng, Polynomial, Rational, Ring, VarId, VariableTable};
use gvpf::harness::{
    campaign, campaign_json, registry, verify, CampaignConfig, Mode, VerifyRequest,
};
use gvpf::linalg::{block_permutations, det, hyperpfaffian, pfaffian, AlternatingTensor, SkewMatrix};
use gvpf::lr::{b_coeff, lr_bruteforce, lr_rectangle_theorem, lr_via_pfaffian};
use gvpf::symfunc::{h_complete, schur, schur_bialternant, Partition};

type Outcome = Result<String, String>;

fn passes(name: &str, mode: Mode, params: &[(&str, usize)], trials: usize) -> Result<(), String> {
    let req = VerifyRequest { trials, seed: 11, ..VerifyRequest::new(name, mode) }.with_params(params);
    match verify(&req) {
        Ok(r) if r.passed => Ok(()),
        Ok(r) => Err(format!("{name} {params:?}: {} failing equations, first {:?}", r.failures.len(), r.failures[0])),
        Err(e) => Err(format!("{name} {params:?}: {e}")),
    }
}

fn suite(mode: Mode, trials: usize) -> Outcome {
    let specs = registry();
    if specs.len() < 38 {
        return Err(format!("only {} identities registered", specs.len()));
    }
    for spec in specs {
        passes(spec.name, mode, &[], trials)?;
    }
    Ok(format!("{} identities", specs.len()))
}

fn c1_symbolic() -> Outcome {
    suite(Mode::Symbolic, 1).map(|s| format!("{s} pass symbolically at their minimal parameters"))
}

fn c2_numeric() -> Outcome {
    suite(Mode::Numeric, 20).map(|s| format!("{s} pass 20 guarded random-rational trials each"))
}

fn c3_lr() -> Outcome {
    let mut cells = 0;
    for n in 1..=2 {
        for e in 0..=2 {
            for f in 0..=2 {
                for lam in Partition::all_in_box(2 * n, e + f) {
                    for mu in Partition::all_in_box(n, e) {
                        let brute = lr_bruteforce(&lam, &mu, &Partition::rectangle(n, f));
                        let pf = lr_via_pfaffian(&lam, n, e, f, &mu).map_err(|x| x.to_string())?;
                        let thm = lr_rectangle_theorem(&lam, n, e, f, &mu).map_err(|x| x.to_string())?;
                        if pf != brute || thm != brute {
                            return Err(format!("n={n} e={e} f={f} λ={lam} μ={mu}: {brute} {pf} {thm}"));
                        }
                        cells += 1;
                    }
                }
            }
        }
    }
    Ok(format!("tableau count, sub-Pfaffian of B and rectangle theorem agree on {cells} cells"))
}

fn c4_bkl() -> Outcome {
    let mut checked = 0;
    for (n, e, f) in [(1, 0, 0), (1, 1, 1), (2, 1, 0), (2, 1, 1)] {
        let mut t = VariableTable::new();
        let (x, y) = (t.var("x"), t.var("y"));
        let z = t.vector("z", 2);
        let w = t.vector("w", 2);
        let xz: Vec<VarId> = [x, y].iter().chain(&z).copied().collect();
        let xw: Vec<VarId> = [x, y].iter().chain(&w).copied().collect();
        let generator = &(&(&Polynomial::var(y) - &Polynomial::var(x)) * &h_complete((e + n - 1) as i64, &xz))
            * &h_complete((f + n - 1) as i64, &xw);
        let dim = e + f + 2 * n;
        for k in 0..dim {
            for l in 0..dim {
                if b_coeff(k, l, n, e, f, &z, &w) != generator.coefficient_in(&[x, y], &[k as u32, l as u32]) {
                    return Err(format!("(n,e,f)=({n},{e},{f}) b_{k}{l}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("closed form equals the extracted coefficient for {checked} entries"))
}

fn c5_pfaffian() -> Outcome {
    let mut rng = seeded_rng(5);
    for i in 0..100 {
        let dim = 2 + i % 7;
        let a = SkewMatrix::from_fn(dim, |_, _| random_rational(&mut rng, 20));
        let pf = pfaffian(&a);
        let d = det(&a.to_matrix()).map_err(|e| e.to_string())?;
        if pf.mul(&pf) != d {
            return Err(format!("Pf² ≠ det on random matrix {i} (dim {dim})"));
        }
    }
    let mut t = VariableTable::new();
    let a = SkewMatrix::from_fn(4, |i, j| Polynomial::var(t.var(&format!("a{}{}", i + 1, j + 1))));
    let e = |i: usize, j: usize| a.get(i, j);
    let expansion = &(&(&e(0, 1) * &e(2, 3)) - &(&e(0, 2) * &e(1, 3))) + &(&e(0, 3) * &e(1, 2));
    if pfaffian(&a) != expansion {
        return Err("4x4 Pfaffian differs from the three-term expansion".into());
    }
    passes("minor_sum", Mode::Numeric, &[], 50)?;
    passes("cauchy_binet", Mode::Numeric, &[], 50)?;
    Ok("Pf² = det on 100 random matrices, 4x4 expansion, minor summation and Cauchy-Binet on 50 instances".into())
}

fn c6_hyper() -> Outcome {
    let words: BTreeSet<Vec<usize>> = block_permutations(2, 2).into_iter().map(|(w, _)| w).collect();
    let listed: BTreeSet<Vec<usize>> =
        [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2], [1, 2, 0, 3], [1, 3, 0, 2], [2, 3, 0, 1]]
            .into_iter()
            .map(|w| w.to_vec())
            .collect();
    if words != listed {
        return Err(format!("E_(4,2) = {words:?}"));
    }
    let mut t = VariableTable::new();
    let a = SkewMatrix::from_fn(6, |i, j| Polynomial::var(t.var(&format!("a{}{}", i + 1, j + 1))));
    let tensor = AlternatingTensor::from_fn(2, 6, |idx| a.get(idx[0], idx[1]));
    if hyperpfaffian(&tensor).map_err(|e| e.to_string())? != pfaffian(&a) {
        return Err("order-2 hyperpfaffian differs from the Pfaffian".into());
    }
    for r in [2, 3] {
        passes("compo", Mode::Symbolic, &[("n", 2), ("r", r)], 1)?;
    }
    passes("hyper_v", Mode::Symbolic, &[("n", 2)], 1)?;
    passes("hyper_u", Mode::Symbolic, &[("n", 2)], 1)?;
    Ok("|E_(4,2)| = 6 as listed, Pf^[2] = Pf, composition factor at (2,2) and (2,3), V and U forms at n=2".into())
}

fn c7_minors() -> Outcome {
    for r in 1..=3 {
        passes("minor_Dr", Mode::Symbolic, &[("r", r)], 1)?;
        passes("minor_BC", Mode::Symbolic, &[("r", r)], 1)?;
    }
    for n in 1..=4 {
        passes("littlewood", Mode::Symbolic, &[("n", n)], 1)?;
    }
    Ok("D_r, B_r, C_r minor scans for r ≤ 3 and Littlewood's formula for n ≤ 4".into())
}

fn c8_schur() -> Outcome {
    for nvars in [3, 4] {
        let vars: Vec<VarId> = (0..nvars).collect();
        for lam in Partition::all_in_box(3, 4) {
            if schur_bialternant(&lam, &vars) != schur(&lam, &vars) {
                return Err(format!("bialternant ≠ Jacobi-Trudi for {lam} in {nvars} variables"));
            }
        }
    }
    let vars: Vec<VarId> = (0..6).collect();
    let by_size: Vec<Vec<(Partition, Polynomial)>> = (0..=6)
        .map(|k| Partition::of_size(k).into_iter().map(|p| (p.clone(), schur(&p, &vars))).collect())
        .collect();
    let mut products = 0;
    for total in 0..=6 {
        for a in 0..=total {
            for (mu, smu) in &by_size[a] {
                for (nu, snu) in &by_size[total - a] {
                    let mut expansion = Polynomial::zero();
                    for (lam, slam) in &by_size[total] {
                        let c = lr_bruteforce(lam, mu, nu);
                        if c > 0 {
                            expansion = &expansion + &slam.scale(&Rational::from_integer(c.into()));
                        }
                    }
                    if smu * snu != expansion {
                        return Err(format!("s_{mu} s_{nu} ≠ Σ c s_λ"));
                    }
                    products += 1;
                }
            }
        }
    }
    Ok(format!("bialternant = Jacobi-Trudi on □(3,4) in 3 and 4 variables, {products} products expand by LR"))
}

fn c9_determinism() -> Outcome {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../campaigns/desk.toml");
    let mut cfg = CampaignConfig::load(&path).map_err(|e| e.to_string())?;
    let first = campaign_json(&campaign(&cfg).map_err(|e| e.to_string())?);
    cfg.workers = Some(1);
    let second = campaign_json(&campaign(&cfg).map_err(|e| e.to_string())?);
    if first != second {
        return Err("replay produced a different report".into());
    }
    Ok(format!("desk campaign replays byte-identically ({} bytes)", first.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("symbolic suite", c1_symbolic),
        ("numeric suite", c2_numeric),
        ("LR cross-validation", c3_lr),
        ("b_kl closed form", c4_bkl),
        ("Pfaffian correctness", c5_pfaffian),
        ("hyperpfaffian", c6_hyper),
        ("band minors and Littlewood", c7_minors),
        ("Schur sanity", c8_schur),
        ("determinism", c9_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
