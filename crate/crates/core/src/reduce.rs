//! Deterministic accumulation of per-place logarithms.
//!
//! Terms are evaluated in parallel but collected in place order, then summed
//! sequentially with Neumaier compensation, so results do not depend on the
//! number of worker threads.

use rayon::prelude::*;

use crate::{ComplexValue, Result};

#[derive(Debug, Clone, Copy, Default)]
struct Neumaier {
    sum: f64,
    carry: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Compensated running sum of complex numbers.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    re: Neumaier,
    im: Neumaier,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, z: ComplexValue) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub(crate) fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re.value(), self.im.value())
    }
}

/// `f` applied to every item, in item order.
pub(crate) fn ordered_map<T, F>(items: &[T], f: F) -> Result<Vec<ComplexValue>>
where
    T: Sync,
    F: Fn(&T) -> Result<ComplexValue> + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Prefix sums of `terms` at each boundary: entry `j` is the sum of the
/// terms whose key is `< bounds[j]`. Keys and bounds must be ascending.
pub(crate) fn prefix_sums_at(keys: &[u64], terms: &[ComplexValue], bounds: &[u64]) -> Vec<ComplexValue> {
    debug_assert_eq!(keys.len(), terms.len());
    let mut out = Vec::with_capacity(bounds.len());
    let mut acc = CompensatedSum::default();
    let mut i = 0;
    for &bound in bounds {
        while i < keys.len() && keys[i] < bound {
            acc.add(terms[i]);
            i += 1;
        }
        out.push(acc.value());
    }
    out
}

/// Compensated sum of `terms` in order.
pub(crate) fn ordered_sum(terms: &[ComplexValue]) -> ComplexValue {
    let mut acc = CompensatedSum::default();
    for &t in terms {
        acc.add(t);
    }
    acc.value()
}
