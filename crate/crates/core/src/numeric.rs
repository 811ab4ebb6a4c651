//! Small floating-point helpers shared by the spectral and Randić code.

/// Compensated (Neumaier) summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Sum {
    total: f64,
    carry: f64,
}

impl Sum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.total + x;
        if libm::fabs(self.total) >= libm::fabs(x) {
            self.carry += (self.total - t) + x;
        } else {
            self.carry += (x - t) + self.total;
        }
        self.total = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.total + self.carry
    }
}

pub(crate) fn sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut s = Sum::default();
    for v in values {
        s.add(v);
    }
    s.value()
}

/// `base^alpha` for a positive integer base.
///
/// Integral exponents go through `powi` so that integer-valued indices stay
/// exact; everything else is `exp2(alpha * log2(base))`.
pub(crate) fn degree_pow(base: u64, alpha: f64) -> f64 {
    if alpha == 0.0 {
        return 1.0;
    }
    if libm::trunc(alpha) == alpha && libm::fabs(alpha) <= 64.0 {
        return powi(base as f64, alpha as i32);
    }
    libm::exp2(alpha * libm::log2(base as f64))
}

fn powi(base: f64, exp: i32) -> f64 {
    let mut result = 1.0;
    let mut b = base;
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    if exp < 0 {
        1.0 / result
    } else {
        result
    }
}

/// Shannon entropy in bits of `weights / sum(weights)`, with 0·log 0 = 0.
pub(crate) fn shannon_bits(weights: &[f64]) -> f64 {
    let total = sum(weights.iter().copied());
    let mut acc = Sum::default();
    for &w in weights {
        if w > 0.0 {
            let p = w / total;
            acc.add(-p * libm::log2(p));
        }
    }
    acc.value()
}
