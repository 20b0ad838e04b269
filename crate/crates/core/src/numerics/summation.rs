//! Compensated accumulation.

use std::ops::AddAssign;

use super::ComplexValue;

/// Kahan–Babuška–Neumaier running sum of `f64` values.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl AddAssign<f64> for NeumaierSum {
    #[inline]
    fn add_assign(&mut self, rhs: f64) {
        let t = self.sum + rhs;
        if self.sum.abs() >= rhs.abs() {
            self.compensation += (self.sum - t) + rhs;
        } else {
            self.compensation += (rhs - t) + self.sum;
        }
        self.sum = t;
    }
}

/// Component-wise compensated sum of complex values.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re.value(), self.im.value())
    }
}

impl AddAssign<ComplexValue> for CompensatedSum {
    #[inline]
    fn add_assign(&mut self, rhs: ComplexValue) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl FromIterator<ComplexValue> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = ComplexValue>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc += v;
        }
        acc
    }
}
