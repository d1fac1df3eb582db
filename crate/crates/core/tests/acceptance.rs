//! End-to-end acceptance run: one PASS/FAIL line per criterion, with its runtime budget.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use anyon_rg::exact_oracle::{ground_state, DenseOperator, MajoranaOracle, OracleInput};
use anyon_rg::fusion_chain::{verify_fusion_relations, Boundary, FusionBasis, FusionCategoryData, Label};
use anyon_rg::majorana_rep::{
    conjugate_action, ground_state_bogoliubov, ground_state_momentum, ising_hamiltonian, separate_pair, BraidSign,
    Direction, GroundStateCache, LatticeSpec, SignedSiteMap,
};
use anyon_rg::rg_flow::{
    chiral_correlators_cached, compose_flow, convergence_series, fit_normalization, flow_covariance_cached,
    infinite_volume_two_point, scaling_limit_two_point, Attachment, RefinementSpec,
};
use anyon_rg::tl_diagram::{verify_braid_relations, verify_relations, TlAlgebra};
use num_complex::Complex64;

type Outcome = anyon_rg::Result<(bool, String)>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn coarse() -> LatticeSpec<f64> {
    LatticeSpec::new(0, 0.125, 8).unwrap()
}

fn spec(depth: u32, attachment: Attachment, braid: BraidSign) -> RefinementSpec<f64> {
    RefinementSpec::new(coarse(), depth, attachment, braid).unwrap()
}

/// Pairs `(x, y)` of distinct Majoranas on a ring of `n`, with their cyclic distance.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y, (y + n - x) % n)))
}

fn algebra_suite() -> Outcome {
    let mut worst_symbolic = 0.0f64;
    for n in 2..=8 {
        worst_symbolic = worst_symbolic.max(verify_relations(&TlAlgebra::symbolic(), n, 0.0)?.max_residual());
    }
    let mut worst_matrix = 0.0f64;
    for half in 1..=6 {
        let oracle = MajoranaOracle::new(LatticeSpec::new(0, 1.0, half)?)?;
        let n = 2 * half;
        let e: Vec<DenseOperator<f64>> = (0..n).map(|x| oracle.build(OracleInput::TlWord(&[x]))).collect::<Result<_, _>>()?;
        for x in 0..n {
            worst_matrix = worst_matrix.max(e[x].mul(&e[x]).max_abs_diff(&e[x].scale(c(2f64.sqrt()))));
        }
        for (x, y, gap) in pairs(n) {
            if n >= 3 && (gap == 1 || gap == n - 1) {
                worst_matrix = worst_matrix.max(e[x].mul(&e[y]).mul(&e[x]).max_abs_diff(&e[x]));
            } else if gap >= 2 && gap <= n - 2 {
                worst_matrix = worst_matrix.max(e[x].mul(&e[y]).max_abs_diff(&e[y].mul(&e[x])));
            }
        }
    }
    let mut worst_fusion = 0.0f64;
    let mut checked = 0;
    for k in [2, 3] {
        let data = FusionCategoryData::<f64>::su2(k)?;
        for n in 3..=10 {
            let mut boundaries = vec![Boundary::Periodic];
            boundaries.extend((0..=k).map(|r| Boundary::Fixed { left: Label::VACUUM, right: Label(r) }));
            for b in boundaries {
                let basis = FusionBasis::new(k, n, b)?;
                if basis.dim() == 0 {
                    continue;
                }
                worst_fusion = worst_fusion.max(verify_fusion_relations(&data, &basis, 1e-10)?.max_residual());
                checked += 1;
            }
        }
    }
    let pass = worst_symbolic == 0.0 && worst_matrix < 1e-10 && worst_fusion < 1e-10;
    Ok((pass, format!("symbolic {worst_symbolic:e}, majorana {worst_matrix:.1e}, fusion {worst_fusion:.1e} over {checked} chains")))
}

fn braiding_suite() -> Outcome {
    let mut worst_symbolic = 0.0f64;
    for n in 2..=6 {
        worst_symbolic = worst_symbolic.max(verify_braid_relations(&TlAlgebra::symbolic(), n, 0.0)?.max_residual());
    }
    let mut worst = 0.0f64;
    for half in 2..=5 {
        let lat = LatticeSpec::new(0, 1.0, half)?;
        let oracle = MajoranaOracle::new(lat)?;
        let n = lat.site_count();
        let braids: Vec<Vec<DenseOperator<f64>>> = [BraidSign::Direct, BraidSign::Inverse]
            .iter()
            .map(|&s| (0..n).map(|x| oracle.build(OracleInput::BraidWord(&[(x, s)]))).collect())
            .collect::<Result<_, _>>()?;
        let psi: Vec<_> = (0..n).map(|x| oracle.psi(x)).collect::<Result<_, _>>()?;
        for (si, sign) in [BraidSign::Direct, BraidSign::Inverse].into_iter().enumerate() {
            let b = &braids[si];
            for x in 0..n {
                worst = worst.max(b[x].unitarity_defect());
                let y = (x + 1) % n;
                worst = worst.max(b[x].mul(&b[y]).mul(&b[x]).max_abs_diff(&b[y].mul(&b[x]).mul(&b[y])));
                let map = conjugate_action(&lat, &SignedSiteMap::identity(n), x, sign)?;
                for z in 0..n {
                    let (w, s) = map.apply(z);
                    let lhs = b[x].mul(&psi[z]).mul(&b[x].adjoint());
                    worst = worst.max(lhs.max_abs_diff(&psi[w].scale(c(s as f64))));
                }
            }
        }
        let e: Vec<_> = (0..n).map(|x| oracle.build(OracleInput::TlWord(&[x]))).collect::<Result<Vec<_>, _>>()?;
        for x in 0..n {
            for m in 2..n.min(5) {
                for dir in [Direction::Left, Direction::Right] {
                    let Ok((_, q)) = separate_pair(&lat, x, m, dir, BraidSign::Direct) else { continue };
                    let u = (1..m).fold(DenseOperator::identity(oracle.dim()), |u, j| {
                        let site = if dir == Direction::Right { x + j } else { x - j };
                        braids[0][site].mul(&u)
                    });
                    worst = worst.max(u.mul(&e[x]).mul(&u.adjoint()).max_abs_diff(&oracle.quadratic(&q)?));
                }
            }
        }
    }
    Ok((worst_symbolic == 0.0 && worst < 1e-12, format!("symbolic {worst_symbolic:e}, matrices {worst:.1e}")))
}

fn ground_state_agreement() -> Outcome {
    let mut worst = 0.0f64;
    for half in 2..=16 {
        let lat = LatticeSpec::new(0, 1.0, half)?;
        let mom = ground_state_momentum(&lat)?;
        worst = worst.max(mom.max_abs_diff(&ground_state_bogoliubov(&lat)?)?);
        if half <= 6 {
            let oracle = MajoranaOracle::new(lat)?;
            let dense = ground_state(&oracle, &oracle.quadratic(&ising_hamiltonian(&lat, 1.0))?)?;
            worst = worst.max((mom.gamma() - &dense.covariance).amax());
        }
    }
    Ok((worst < 1e-10, format!("max entrywise deviation {worst:.1e} over 4..32 Majoranas")))
}

fn rg_flow_reproduction() -> Outcome {
    let cache = GroundStateCache::new();
    let mut closed = 0.0f64;
    for m in 0..=6 {
        for attachment in [Attachment::Left, Attachment::Right] {
            closed = closed.max(flow_covariance_cached(&spec(m, attachment, BraidSign::Direct), &cache)?.route_discrepancy());
        }
    }
    let mut semigroup = 0.0f64;
    for m1 in 0..=3 {
        for m2 in 0..=3 {
            let outer = spec(m1, Attachment::Right, BraidSign::Direct);
            let inner_spec = RefinementSpec { coarse: outer.block_lattice(), depth: m2, ..outer };
            let inner = flow_covariance_cached(&inner_spec, &cache)?;
            let direct = flow_covariance_cached(&spec(m1 + m2, Attachment::Right, BraidSign::Direct), &cache)?;
            semigroup = semigroup.max(compose_flow(&outer, &inner)?.max_abs_diff(direct.state())?);
        }
    }
    Ok((closed < 1e-10 && semigroup < 1e-10, format!("closed form {closed:.1e}, semigroup {semigroup:.1e}")))
}

fn scaling_limit() -> Outcome {
    let cache = GroundStateCache::new();
    let top = spec(10, Attachment::Right, BraidSign::Direct);
    let l = coarse().half_sites() as f64;
    let offsets: Vec<isize> = [0.125, 0.25, 0.5].iter().map(|f| (l * f).round() as isize).collect();
    let fit = fit_normalization(&top, &offsets, &cache)?;
    let mut pass = fit.max_relative_residual < 1e-3;
    let mut detail = format!("c = {:.9}, residual at M=10 {:.1e}; rates", fit.c, fit.max_relative_residual);
    for &d in &offsets {
        let series = convergence_series(&top, d, &(1..=8).collect::<Vec<_>>(), fit.c, &cache)?;
        pass &= (series.rate - 0.25).abs() <= 0.2 * 0.25;
        detail.push_str(&format!(" {:.3}", series.rate));
    }
    Ok((pass, detail))
}

fn infinite_volume() -> Outcome {
    let cache = GroundStateCache::new();
    let fit = fit_normalization(&spec(10, Attachment::Right, BraidSign::Direct), &[1, 2, 4], &cache)?;
    let d = 1.0;
    let mut detail = String::from("ratio at L/d");
    let mut last = f64::NAN;
    for ratio in [10.0, 100.0, 1000.0] {
        let half_length = ratio * d;
        let circle = scaling_limit_two_point(d, half_length, fit.c)?;
        let line = infinite_volume_two_point(d, fit.c * half_length)?;
        last = circle.im / line.im;
        detail.push_str(&format!(" {ratio}: {last:.7}"));
        if ratio == 100.0 {
            detail.push_str(" (checked)");
            if (last - 1.0).abs() >= 1e-3 {
                return Ok((false, detail));
            }
        }
    }
    Ok(((last - 1.0).abs() < 1e-3, detail))
}

fn chirality() -> Outcome {
    let cache = GroundStateCache::new();
    let d = coarse().half_sites() / 4;
    let ratio = chiral_correlators_cached(&spec(10, Attachment::Right, BraidSign::Direct), d, 0, &cache)?.cross_ratio();
    let mut swap = 0.0f64;
    for m in [0, 2, 5, 10] {
        for (x, y) in [(d, 0), (3, 7), (12, 5)] {
            for braid in [BraidSign::Direct, BraidSign::Inverse] {
                let left = chiral_correlators_cached(&spec(m, Attachment::Left, braid), x, y, &cache)?;
                let right = chiral_correlators_cached(&spec(m, Attachment::Right, braid.inverse()), x, y, &cache)?;
                swap = swap.max(left.max_abs_diff(&right.swapped()));
            }
        }
    }
    Ok((ratio < 0.05 && swap == 0.0, format!("cross ratio at d = L/4, M = 10: {ratio:.2e}; swap residual {swap:e}")))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let runs: &[&[&str]] = &[
        &["verify", "--seed", "7"],
        &["flow", "--depth-M", "4"],
        &["chirality", "--depth-M", "3", "--format", "json"],
        &["correlator", "--depth-M", "3", "--separations=-2,1,3"],
        &["gs", "--half-length", "4"],
    ];
    let mut mismatched = Vec::new();
    for args in runs {
        let mut outputs = Vec::new();
        for attempt in 0..2 {
            let path = dir.path().join(format!("{}-{attempt}", args[0]));
            let status = Command::new(env!("CARGO_BIN_EXE_anyonrg"))
                .args(*args)
                .arg("--out")
                .arg(&path)
                .env("ANYONRG_THREADS", if attempt == 0 { "1" } else { "4" })
                .status()
                .expect("spawn anyonrg");
            outputs.push((status.code(), std::fs::read(&path).unwrap_or_default()));
        }
        if outputs[0].0 != Some(0) || outputs[0] != outputs[1] || outputs[0].1.is_empty() {
            mismatched.push(args[0]);
        }
    }
    Ok((mismatched.is_empty(), format!("{} commands, 1 vs 4 threads; mismatched: {mismatched:?}", runs.len())))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 algebra suite", Duration::from_secs(30), algebra_suite),
        ("2 braiding suite", Duration::from_secs(10), braiding_suite),
        ("3 ground-state agreement", Duration::from_secs(60), ground_state_agreement),
        ("4 rg-flow reproduction", Duration::from_secs(60), rg_flow_reproduction),
        ("5 scaling limit", Duration::from_secs(300), scaling_limit),
        ("6 infinite volume", Duration::from_secs(10), infinite_volume),
        ("7 chirality", Duration::from_secs(120), chirality),
        ("8 determinism", Duration::from_secs(600), determinism),
    ];
    let mut all = true;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok((ok, detail)) => (ok && elapsed <= budget, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= pass;
        println!(
            "{} criterion {name}: {detail} [{:.2}s of {}s]",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
