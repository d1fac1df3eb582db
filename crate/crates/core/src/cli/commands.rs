use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::RunConfig;
use super::table::{num, Table};
use crate::exact_oracle::{ground_state, DenseOperator, MajoranaOracle, OracleInput};
use crate::fusion_chain::{verify_fusion_relations, Boundary, FusionBasis, FusionCategoryData, Label};
use crate::majorana_rep::{
    conjugate_action, ground_state_bogoliubov, ground_state_momentum, ising_hamiltonian, separate_pair, BraidSign,
    Direction, GroundStateCache, LatticeSpec, SignedSiteMap,
};
use crate::rg_flow::{
    abel_closed_form, braided_correlator_cached, chiral_correlators_cached, fit_normalization,
    flow_covariance_cached, Attachment, Chirality, RefinementSpec,
};
use crate::tl_diagram::{random_word, reduced_words, verify_braid_relations, verify_relations, Letter, RelationReport, TlAlgebra};
use crate::{Error, Result};

/// Depth at which the global normalization of the scaling limit is fitted.
pub const NORMALIZATION_DEPTH: u32 = 10;
/// Macroscopic separations `d / L` used by the normalization fit.
pub const NORMALIZATION_FRACTIONS: [f64; 3] = [0.125, 0.25, 0.5];

/// Outcome of a command: the table to write and whether every check passed.
pub struct CommandOutput {
    pub table: Table,
    pub passed: bool,
}

fn ok(table: Table) -> CommandOutput {
    CommandOutput { table, passed: true }
}

fn kauffman_a(cfg: &RunConfig) -> Complex64 {
    Complex64::from_polar(1.0, cfg.kauffman_a * std::f64::consts::PI)
}

/// Appends one row per check of `report` under `suite`.
fn report_rows(table: &mut Table, suite: &str, size: usize, report: &RelationReport, tol: f64) {
    for c in &report.checks {
        let idx: Vec<String> = c.indices.iter().map(|i| i.to_string()).collect();
        table.push(vec![
            json!(suite),
            json!(size),
            json!(c.relation),
            json!(idx.join(" ")),
            num(c.residual),
            num(tol),
            json!(c.passed),
        ]);
    }
}

fn single(table: &mut Table, suite: &str, size: usize, relation: &str, residual: f64, tol: f64) {
    let mut r = RelationReport::default();
    r.push(relation, Vec::new(), residual, tol);
    report_rows(table, suite, size, &r, tol);
}

pub fn verify(cfg: &RunConfig) -> Result<CommandOutput> {
    let mut t = Table::new(vec!["suite", "size", "relation", "indices", "residual", "tolerance", "passed"]);
    t.note("size: strands (diagram suites), anyons (fusion), Majoranas (free-fermion and oracle suites)");
    t.note("residual: max entrywise deviation; passed iff residual <= tolerance");

    // Exact diagram algebra over Z[A, A^-1].
    let symbolic = TlAlgebra::symbolic();
    for n in 2..=8 {
        report_rows(&mut t, "tl_symbolic", n, &verify_relations(&symbolic, n, 0.0)?, 0.0);
    }
    for n in 2..=5 {
        report_rows(&mut t, "braid_symbolic", n, &verify_braid_relations(&symbolic, n, 0.0)?, 0.0);
    }

    // Numeric diagram algebra at the chosen A, optionally with a corrupted loop factor.
    let a = kauffman_a(cfg);
    let mut numeric = TlAlgebra::at(a);
    if let Some(d) = cfg.delta_override {
        numeric = numeric.with_compose_loop_factor(Complex64::new(d, 0.0));
    }
    let tol = 1e-10;
    for n in 2..=6 {
        report_rows(&mut t, "tl_numeric", n, &verify_relations(&numeric, n, tol)?, tol);
        report_rows(&mut t, "braid_numeric", n, &verify_braid_relations(&numeric, n, tol)?, tol);
    }

    // Fusion chain at level k.
    let data = FusionCategoryData::<f64>::su2(cfg.k)?;
    let want = 2.0 * (std::f64::consts::PI / (cfg.k as f64 + 2.0)).cos();
    single(&mut t, "fusion", 0, "d_sigma = 2cos(pi/(k+2))", (data.sigma_dimension() - want).abs(), 1e-12);
    single(&mut t, "fusion", 0, "F F^T = 1", data.orthogonality_residual(), 1e-12);
    if cfg.k <= 6 {
        single(&mut t, "fusion", 0, "pentagon", data.pentagon_residual(), 1e-10);
    }
    for n in 3..=10 {
        let basis = FusionBasis::new(cfg.k, n, Boundary::Periodic)?;
        if basis.dim() == 0 || basis.dim() > 400 {
            continue;
        }
        report_rows(&mut t, "fusion_periodic", n, &verify_fusion_relations(&data, &basis, tol)?, tol);
    }
    for n in 3..=8 {
        let fixed = Boundary::Fixed { left: Label::VACUUM, right: Label((n % 2) as u32) };
        let basis = FusionBasis::new(cfg.k, n, fixed)?;
        if basis.dim() == 0 {
            continue;
        }
        report_rows(&mut t, "fusion_fixed", n, &verify_fusion_relations(&data, &basis, tol)?, tol);
    }

    majorana_suites(cfg, &mut t, &numeric)?;

    let passed = t.rows.iter().all(|r| r[6] == Value::Bool(true));
    Ok(CommandOutput { table: t, passed })
}

fn majorana_suites(cfg: &RunConfig, t: &mut Table, numeric: &TlAlgebra<Complex64>) -> Result<()> {
    let tol = 1e-10;
    let tight = 1e-12;
    for half in 1..=6 {
        let lat = LatticeSpec::new(0, 1.0, half)?;
        let n = lat.site_count();
        let oracle = MajoranaOracle::new(lat)?;
        let gens: Vec<DenseOperator<f64>> =
            (0..n).map(|x| oracle.build(OracleInput::TlWord(&[x]))).collect::<Result<_>>()?;
        let mut rep = RelationReport::default();
        let delta = Complex64::new(2f64.sqrt(), 0.0);
        for x in 0..n {
            rep.push("e_x^2 = sqrt2 e_x", vec![x], gens[x].mul(&gens[x]).max_abs_diff(&gens[x].scale(delta)), tol);
            if n >= 3 {
                let y = (x + 1) % n;
                rep.push("e_x e_y e_x = e_x (|x-y| = 1)", vec![x, y], gens[x].mul(&gens[y]).mul(&gens[x]).max_abs_diff(&gens[x]), tol);
                rep.push("e_y e_x e_y = e_y (|x-y| = 1)", vec![x, y], gens[y].mul(&gens[x]).mul(&gens[y]).max_abs_diff(&gens[y]), tol);
            }
            for y in x + 2..n {
                if (y + 1) % n == x {
                    continue;
                }
                rep.push("e_x e_y = e_y e_x (|x-y| >= 2)", vec![x, y], gens[x].mul(&gens[y]).max_abs_diff(&gens[y].mul(&gens[x])), tol);
            }
            let b = oracle.build(OracleInput::BraidWord(&[(x, BraidSign::Direct)]))?;
            rep.push("b_x b_x^* = 1", vec![x], b.unitarity_defect(), tight);
            let map = conjugate_action(&lat, &SignedSiteMap::identity(n), x, BraidSign::Direct)?;
            let mut worst: f64 = 0.0;
            for y in 0..n {
                let (z, s) = map.apply(y);
                let lhs = b.mul(&oracle.psi(y)?).mul(&b.adjoint());
                worst = worst.max(lhs.max_abs_diff(&oracle.psi(z)?.scale(Complex64::new(s as f64, 0.0))));
            }
            rep.push("b_x psi b_x^* = signed site map", vec![x], worst, tight);
            if n >= 3 {
                let y = (x + 1) % n;
                let l = oracle.build(OracleInput::BraidWord(&[(x, BraidSign::Direct), (y, BraidSign::Direct), (x, BraidSign::Direct)]))?;
                let r = oracle.build(OracleInput::BraidWord(&[(y, BraidSign::Direct), (x, BraidSign::Direct), (y, BraidSign::Direct)]))?;
                rep.push("b_x b_y b_x = b_y b_x b_y", vec![x, y], l.max_abs_diff(&r), tight);
            }
        }
        for x in 0..n {
            for m in 2..=4 {
                for dir in [Direction::Left, Direction::Right] {
                    let Ok((_, q)) = separate_pair(&lat, x, m, dir, BraidSign::Direct) else { continue };
                    let mut u = DenseOperator::identity(oracle.dim());
                    for j in 1..m {
                        let site = if dir == Direction::Right { x + j } else { x - j };
                        u = oracle.build(OracleInput::BraidWord(&[(site, BraidSign::Direct)]))?.mul(&u);
                    }
                    let conj = u.mul(&gens[x]).mul(&u.adjoint());
                    rep.push("separate_pair = matrix conjugation", vec![x, m], conj.max_abs_diff(&oracle.quadratic(&q)?), tight);
                }
            }
        }
        report_rows(t, "majorana_matrix", n, &rep, tol);

        // Ground states: momentum sum, Bogoliubov and dense diagonalization.
        let mom = ground_state_momentum(&lat)?;
        let bog = ground_state_bogoliubov(&lat)?;
        let h = oracle.quadratic(&ising_hamiltonian(&lat, 1.0))?;
        let dense = ground_state(&oracle, &h)?;
        single(t, "ground_state", n, "momentum = Bogoliubov", mom.max_abs_diff(&bog)?, tol);
        single(t, "ground_state", n, "momentum = dense oracle", (mom.gamma() - &dense.covariance).amax(), tol);
        single(t, "ground_state", n, "Gamma^T Gamma = 1", mom.purity_defect(), tol);
    }
    for half in [8, 12, 16] {
        let lat = LatticeSpec::new(0, 1.0, half)?;
        let mom = ground_state_momentum(&lat)?;
        let bog = ground_state_bogoliubov(&lat)?;
        single(t, "ground_state", lat.site_count(), "momentum = Bogoliubov", mom.max_abs_diff(&bog)?, tol);
    }

    // Seeded homomorphism check: random generator words evaluated as diagrams and as matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let lat = LatticeSpec::new(0, 1.0, 4)?;
    let oracle = MajoranaOracle::new(lat)?;
    let mut rep = RelationReport::default();
    for strands in [3usize, 4, 5, 6] {
        let words = reduced_words(strands);
        for trial in 0..4 {
            let word = random_word(&mut rng, strands, 6, false);
            let sites: Vec<usize> = word
                .iter()
                .map(|l| match l {
                    Letter::Generator(i) => i - 1,
                    Letter::Braid(i, _) => i - 1,
                })
                .collect();
            let element = numeric.word(strands, &word)?;
            let mut lhs = DenseOperator::zeros(oracle.dim());
            for (p, c) in element.terms() {
                let w: Vec<usize> = words[p].iter().map(|i| i - 1).collect();
                lhs = lhs.add(&oracle.build(OracleInput::TlWord(&w))?.scale(*c));
            }
            let rhs = oracle.build(OracleInput::TlWord(&sites))?;
            rep.push("diagram word = matrix word", vec![strands, trial], lhs.max_abs_diff(&rhs), tol);
        }
    }
    report_rows(t, "homomorphism", lat.site_count(), &rep, tol);
    Ok(())
}

fn refinement(cfg: &RunConfig, depth: u32, attachment: Attachment, braid: BraidSign) -> Result<RefinementSpec<f64>> {
    RefinementSpec::new(cfg.lattice()?, depth, attachment, braid)
}

/// Coarse site pair `(i, j)` with `i - j = d`, both on the lattice.
fn pair_for(lat: &LatticeSpec<f64>, d: isize) -> Result<(usize, usize)> {
    let n = lat.site_count() as isize;
    if d == 0 {
        return Err(Error::InvalidSeparation("separation 0 is a coincident point".into()));
    }
    if d.abs() >= n {
        return Err(Error::InvalidSeparation(format!("separation {d} does not fit on {n} sites")));
    }
    Ok(if d > 0 { (d as usize, 0) } else { (0, (-d) as usize) })
}

/// Frozen amplitude `c` of the scaling limit for the configured coarse lattice.
pub fn frozen_normalization(cfg: &RunConfig, cache: &GroundStateCache<f64>) -> Result<(f64, Vec<isize>)> {
    let spec = refinement(cfg, NORMALIZATION_DEPTH, cfg.attachment, BraidSign::Direct)?;
    let l = spec.coarse.half_sites() as f64;
    let mut offsets: Vec<isize> = NORMALIZATION_FRACTIONS.iter().map(|f| ((l * f).round() as isize).max(1)).collect();
    offsets.dedup();
    let fit = fit_normalization(&spec, &offsets, cache)?;
    Ok((fit.c, offsets))
}

pub fn flow(cfg: &RunConfig) -> Result<CommandOutput> {
    let lat = cfg.lattice()?;
    let cache = GroundStateCache::new();
    for &d in &cfg.separations {
        pair_for(&lat, d)?;
    }
    let (c, offsets) = frozen_normalization(cfg, &cache)?;
    let mut t = Table::new(vec![
        "depth_M", "separation", "distance", "re", "im", "closed_form_im", "limit_im", "relative_error",
    ]);
    t.note("separation: coarse lattice steps D; distance: d = D * eps_N in units of the base spacing convention");
    t.note("re, im: omega_M(psi_{x+d} psi_x); closed_form_im: momentum-sum closed form of the same value");
    t.note(format!("limit_im: c / (2 sin(pi d / 2L)) with c = {c} fitted at depth {NORMALIZATION_DEPTH} on offsets {offsets:?}"));
    for m in 0..=cfg.depth_m {
        let spec = refinement(cfg, m, cfg.attachment, BraidSign::Direct)?;
        let f = flow_covariance_cached(&spec, &cache)?;
        for &d in &cfg.separations {
            let (i, j) = pair_for(&lat, d)?;
            let im = f.entry(i, j);
            let closed = f.closed_form()[(i, j)];
            let theta = std::f64::consts::PI * d as f64 / lat.half_sites() as f64;
            let limit = c * abel_closed_form(theta);
            t.push(vec![
                json!(m),
                json!(d),
                num(d as f64 * lat.spacing()),
                num(0.0),
                num(im),
                num(closed),
                num(limit),
                num(((im - limit) / limit).abs()),
            ]);
        }
    }
    Ok(ok(t))
}

pub fn chirality(cfg: &RunConfig) -> Result<CommandOutput> {
    let lat = cfg.lattice()?;
    let cache = GroundStateCache::new();
    let mut t = Table::new(vec![
        "attachment", "braid", "depth_M", "separation", "pp_re", "pp_im", "pm_re", "pm_im", "mp_re", "mp_im", "mm_re",
        "mm_im", "cross_ratio",
    ]);
    t.note("entries: 2^M <psi_{s|x+d} psi_{s'|x}> for s, s' in {p = +, m = -}; psi_{+-} = (psi_2z -+ beta psi_2z+1)/sqrt2");
    t.note("beta = +1 for braid = direct, -1 for inverse; cross_ratio = |pm| / max(|pp|, |mm|)");
    for attachment in [Attachment::Left, Attachment::Right] {
        for braid in [BraidSign::Direct, BraidSign::Inverse] {
            for m in 0..=cfg.depth_m {
                let spec = refinement(cfg, m, attachment, braid)?;
                for &d in &cfg.separations {
                    let (i, j) = pair_for(&lat, d)?;
                    let tab = chiral_correlators_cached(&spec, i, j, &cache)?;
                    let mut row = vec![
                        json!(match attachment {
                            Attachment::Left => "left",
                            Attachment::Right => "right",
                        }),
                        json!(match braid {
                            BraidSign::Direct => "direct",
                            BraidSign::Inverse => "inverse",
                        }),
                        json!(m),
                        json!(d),
                    ];
                    for s in Chirality::BOTH {
                        for u in Chirality::BOTH {
                            let v = tab.get(s, u);
                            row.push(num(v.re));
                            row.push(num(v.im));
                        }
                    }
                    row.push(num(tab.cross_ratio()));
                    t.push(row);
                }
            }
        }
    }
    Ok(ok(t))
}

pub fn correlator(cfg: &RunConfig) -> Result<CommandOutput> {
    let lat = cfg.lattice()?;
    let cache = GroundStateCache::new();
    let n = lat.site_count() as isize;
    let origin = lat.half_sites() as isize;
    let mut t = Table::new(vec!["depth_M", "x", "y", "separation", "re", "im"]);
    t.note("x, y: coarse site indices (position = eps_N (index - l_N)); value: omega_M of the braided-apart generator");
    for m in 0..=cfg.depth_m {
        let spec = refinement(cfg, m, cfg.attachment, BraidSign::Direct)?;
        for &d in &cfg.separations {
            let y = origin + d;
            if d == 0 || y < 0 || y >= n {
                return Err(Error::InvalidSeparation(format!("separation {d} leaves the chain from site {origin}")));
            }
            let v = braided_correlator_cached(&spec, origin as usize, y as usize, &cache)?;
            t.push(vec![json!(m), json!(origin), json!(y), json!(d), num(v.re), num(v.im)]);
        }
    }
    Ok(ok(t))
}

pub fn gs(cfg: &RunConfig) -> Result<CommandOutput> {
    let lat = cfg.lattice()?;
    if lat.site_count() > 1024 {
        return Err(Error::Config(format!("{} sites is too many for a covariance dump", lat.site_count())));
    }
    let mom = ground_state_momentum(&lat)?;
    let bog = ground_state_bogoliubov(&lat)?;
    let mut t = Table::new(vec!["x", "y", "position_x", "position_y", "gamma", "gamma_bogoliubov"]);
    t.note("gamma: Gamma_xy = -i(<psi_x psi_y> - delta_xy) from the momentum sum; gamma_bogoliubov: same from diagonalization");
    let n = lat.site_count();
    for x in 0..n {
        for y in 0..n {
            t.push(vec![
                json!(x),
                json!(y),
                num(lat.position(x)),
                num(lat.position(y)),
                num(mom.gamma()[(x, y)]),
                num(bog.gamma()[(x, y)]),
            ]);
        }
    }
    Ok(ok(t))
}
