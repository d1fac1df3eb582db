use nalgebra::RealField;

/// Real scalar type used by every numerical module.
pub trait Real: RealField + Copy + Send + Sync + std::fmt::Display + 'static {
    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    fn of_usize(n: usize) -> Self {
        nalgebra::convert(n as f64)
    }

    fn of_isize(n: isize) -> Self {
        nalgebra::convert(n as f64)
    }

    fn to_f64(self) -> f64;

    /// Modulus of a complex number with components of this type.
    fn cabs(z: num_complex::Complex<Self>) -> Self {
        z.re.hypot(z.im)
    }

    /// Machine epsilon of the type.
    fn eps() -> Self;
}

impl Real for f32 {
    fn to_f64(self) -> f64 {
        self as f64
    }

    fn eps() -> Self {
        f32::EPSILON
    }
}

impl Real for f64 {
    fn to_f64(self) -> f64 {
        self
    }

    fn eps() -> Self {
        f64::EPSILON
    }
}
