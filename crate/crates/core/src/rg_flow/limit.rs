use num_complex::Complex;
use serde::Serialize;

use super::flow::flow_covariance_cached;
use super::spec::RefinementSpec;
use crate::majorana_rep::GroundStateCache;
use crate::{Error, Real, Result};

/// Closed form of the Abel-summed series `sum_{m>=0} sin((m + 1/2) theta)`: `1 / (2 sin(theta/2))`.
pub fn abel_closed_form<T: Real>(theta: T) -> T {
    T::one() / (T::lit(2.0) * (theta * T::lit(0.5)).sin())
}

/// `sum_{m>=0} sin((m+1/2) theta) r^{m+1/2}` in closed form: `Im(r^{1/2} e^{i theta/2} / (1 - r e^{i theta}))`.
pub fn abel_regularized_exact<T: Real>(theta: T, r: T) -> T {
    let polar = |rho: T, phi: T| Complex::new(rho * phi.cos(), rho * phi.sin());
    let half = polar(r.sqrt(), theta * T::lit(0.5));
    let denom = Complex::new(T::one(), T::zero()) - polar(r, theta);
    (half / denom).im
}

/// Same series summed term by term until `r^m` drops below machine precision.
///
/// Uses a rotation recurrence for the phase, resynchronized every 4096 terms, with
/// compensated summation.
pub fn abel_regularized_series<T: Real>(theta: T, r: T) -> T {
    assert!(r > T::zero() && r < T::one(), "regulator must lie in (0, 1)");
    let log_r = r.ln();
    let cutoff = T::eps() * T::lit(1e-3);
    let (step_s, step_c) = (theta.sin(), theta.cos());
    let (mut acc, mut comp) = (T::zero(), T::zero());
    let (mut s, mut c, mut amp) = (T::zero(), T::one(), T::one());
    let mut m: usize = 0;
    loop {
        if m.is_multiple_of(4096) {
            let phase = (T::of_usize(m) + T::lit(0.5)) * theta;
            s = phase.sin();
            c = phase.cos();
            amp = ((T::of_usize(m) + T::lit(0.5)) * log_r).exp();
            if amp < cutoff {
                break;
            }
        }
        let term = s * amp - comp;
        let next = acc + term;
        comp = (next - acc) - term;
        acc = next;
        let ns = s * step_c + c * step_s;
        c = c * step_c - s * step_s;
        s = ns;
        amp *= r;
        m += 1;
    }
    acc
}

/// Outcome of the regulated evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct AbelEstimate {
    pub value: f64,
    pub regulators: Vec<f64>,
    pub raw: Vec<f64>,
}

/// Abel sum extrapolated to `r -> 1`: term-by-term sums at `1 - h, 1 - 2h, 1 - 4h` combined by
/// Richardson extrapolation in `h`.
pub fn abel_extrapolated<T: Real>(theta: T, h: T) -> AbelEstimate {
    let hs = [h, h * T::lit(2.0), h * T::lit(4.0)];
    let raw: Vec<T> = hs.iter().map(|&hh| abel_regularized_series(theta, T::one() - hh)).collect();
    // Richardson tableau for f(h) = f0 + a h + b h^2.
    let r1 = raw[0] * T::lit(2.0) - raw[1];
    let r2 = raw[1] * T::lit(2.0) - raw[2];
    let value = (r1 * T::lit(4.0) - r2) / T::lit(3.0);
    AbelEstimate {
        value: value.to_f64(),
        regulators: hs.iter().map(|&x| (T::one() - x).to_f64()).collect(),
        raw: raw.iter().map(|x| x.to_f64()).collect(),
    }
}

/// Partial sums `S_K = sum_{m<K} sin((m + 1/2) theta)` for `K = 1..=count`.
pub fn partial_sums<T: Real>(theta: T, count: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(count);
    let mut acc = T::zero();
    for m in 0..count {
        acc += ((T::of_usize(m) + T::lit(0.5)) * theta).sin();
        out.push(acc);
    }
    out
}

/// Cesaro mean of the first `count` partial sums.
pub fn cesaro_mean<T: Real>(theta: T, count: usize) -> T {
    let sums = partial_sums(theta, count);
    sums.iter().fold(T::zero(), |a, &b| a + b) / T::of_usize(count)
}

fn check_separation<T: Real>(d: T) -> Result<()> {
    if d == T::zero() {
        return Err(Error::CoincidentPoints);
    }
    Ok(())
}

/// Scaling limit on the circle of circumference `2L`: `<psi_x psi_y> = i c / (2 sin(pi d / 2L))`.
pub fn scaling_limit_two_point<T: Real>(d: T, half_length: T, normalization: T) -> Result<Complex<T>> {
    check_separation(d)?;
    if d.abs() >= half_length * T::lit(2.0) {
        return Err(Error::InvalidSeparation(format!("|x - y| = {d} not below 2L = {}", half_length * T::lit(2.0))));
    }
    let theta = T::pi() * d / half_length;
    Ok(Complex::new(T::zero(), normalization * abel_closed_form(theta)))
}

/// Infinite-volume limit `<psi_x psi_y> = i kappa / (pi d)`, with `kappa = c L` the amplitude
/// shared with the circle form.
pub fn infinite_volume_two_point<T: Real>(d: T, kappa: T) -> Result<Complex<T>> {
    check_separation(d)?;
    Ok(Complex::new(T::zero(), kappa / (T::pi() * d)))
}

/// `omega(sqrt 2 e_x - 1) = <i psi_{x+eps} psi_x>` evaluated with the infinite-volume two-point function.
pub fn infinite_volume_generator<T: Real>(x: T, spacing: T, kappa: T) -> Result<Complex<T>> {
    let w = infinite_volume_two_point((x + spacing) - x, kappa)?;
    Ok(Complex::new(T::zero(), T::one()) * w)
}

/// Least-squares fit of the single global amplitude `c`.
#[derive(Clone, Debug, Serialize)]
pub struct Normalization {
    pub c: f64,
    pub depth: u32,
    pub offsets: Vec<isize>,
    pub max_relative_residual: f64,
}

/// Fits `Gamma_M(D) ~ c / (2 sin(pi D / 2 l_N))` at the given coarse offsets.
pub fn fit_normalization<T: Real>(spec: &RefinementSpec<T>, offsets: &[isize], cache: &GroundStateCache<T>) -> Result<Normalization> {
    let flow = flow_covariance_cached(spec, cache)?;
    let l = spec.coarse.half_sites();
    let n = spec.coarse.site_count() as isize;
    let mut num = T::zero();
    let mut den = T::zero();
    let mut samples = Vec::new();
    for &d in offsets {
        if d <= 0 || d >= n {
            return Err(Error::InvalidSeparation(format!("offset {d} outside 1..{n}")));
        }
        let y = flow.entry(d as usize, 0);
        let f = abel_closed_form(T::pi() * T::of_isize(d) / T::of_usize(l));
        num += y * f;
        den += f * f;
        samples.push((y, f));
    }
    let c = num / den;
    let resid = samples.iter().fold(T::zero(), |m, &(y, f)| m.max(((y - c * f) / y).abs()));
    Ok(Normalization { c: c.to_f64(), depth: spec.depth, offsets: offsets.to_vec(), max_relative_residual: resid.to_f64() })
}

/// Convergence of one separation towards the frozen limit.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceSeries {
    pub offset: isize,
    pub depths: Vec<u32>,
    pub errors: Vec<f64>,
    /// Fitted ratio of consecutive errors; `1/4` for the expected rate.
    pub rate: f64,
}

/// Errors `|Gamma_M(D) - c / (2 sin(pi D / 2 l_N))|` for the given depths, with the
/// log-linear fit of their decay per step.
pub fn convergence_series<T: Real>(
    spec: &RefinementSpec<T>,
    offset: isize,
    depths: &[u32],
    c: T,
    cache: &GroundStateCache<T>,
) -> Result<ConvergenceSeries> {
    let l = spec.coarse.half_sites();
    let limit = c * abel_closed_form(T::pi() * T::of_isize(offset) / T::of_usize(l));
    let mut errors = Vec::with_capacity(depths.len());
    for &m in depths {
        let flow = flow_covariance_cached(&spec.with_depth(m), cache)?;
        errors.push((flow.entry(offset as usize, 0) - limit).abs().to_f64());
    }
    let xs: Vec<f64> = depths.iter().map(|&m| m as f64).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(ConvergenceSeries { offset, depths: depths.to_vec(), errors, rate: (sxy / sxx).exp() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abel_regularization_agrees_with_closed_forms() {
        for theta in [0.3f64, 1.0, 2.0, 3.0, -1.2] {
            let r = 0.999;
            assert!((abel_regularized_series(theta, r) - abel_regularized_exact(theta, r)).abs() < 1e-9);
            let est = abel_extrapolated(theta, 1e-6);
            assert!((est.value - abel_closed_form(theta)).abs() < 1e-8, "theta = {theta}: {est:?}");
        }
    }

    #[test]
    fn cesaro_mean_converges() {
        let theta = 0.7f64;
        let err = (cesaro_mean(theta, 200_000) - abel_closed_form(theta)).abs();
        assert!(err < 1e-4);
        let s = partial_sums(theta, 10);
        let k = 10.0;
        assert!((s[9] - (k * theta / 2.0).sin().powi(2) / (theta / 2.0).sin()).abs() < 1e-12);
    }

    #[test]
    fn limits_are_odd_and_agree_at_large_volume() {
        let c = 0.25f64;
        let l = 1.0;
        for d in [0.1, 0.5, 1.3] {
            let a = scaling_limit_two_point(d, l, c).unwrap();
            let b = scaling_limit_two_point(-d, l, c).unwrap();
            assert!((a + b).norm() < 1e-15);
        }
        let big = 100.0;
        let ratio = scaling_limit_two_point(1.0, big, c).unwrap().im / infinite_volume_two_point(1.0, c * big).unwrap().im;
        assert!((ratio - 1.0).abs() < 1e-3);
        assert!(matches!(scaling_limit_two_point(0.0, l, c), Err(Error::CoincidentPoints)));
        assert!(infinite_volume_two_point(0.0, 1.0).is_err());
        assert!(scaling_limit_two_point(2.5, l, c).is_err());
    }

    #[test]
    fn generator_limit_is_translation_invariant() {
        let base = infinite_volume_generator(0.0, 0.125, 0.3).unwrap();
        for x in [-3.0, 0.5, 7.25] {
            assert!((infinite_volume_generator(x, 0.125, 0.3).unwrap() - base).norm() < 1e-12);
        }
    }
}
