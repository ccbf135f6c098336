//! Graded dimensions, read as Laurent polynomials in `q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Degree to dimension map; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    entries: BTreeMap<i64, usize>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_degrees<I: IntoIterator<Item = i64>>(degrees: I) -> Self {
        let mut g = Self::new();
        for d in degrees {
            g.add(d, 1);
        }
        g
    }

    pub fn add(&mut self, degree: i64, dim: usize) {
        if dim > 0 {
            *self.entries.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: i64) -> usize {
        self.entries.get(&degree).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<i64, usize> {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplies every degree by `factor`.
    pub fn rescale(&self, factor: i64) -> Self {
        GradedDims { entries: self.entries.iter().map(|(&d, &v)| (d * factor, v)).collect() }
    }

    /// Product of the Laurent polynomials.
    pub fn mul(&self, other: &GradedDims) -> GradedDims {
        let mut g = GradedDims::new();
        for (&a, &x) in &self.entries {
            for (&b, &y) in &other.entries {
                g.add(a + b, x * y);
            }
        }
        g
    }

    /// `1 + q^step + ... + q^{step (k-1)}`.
    pub fn q_integer(k: usize, step: i64) -> GradedDims {
        GradedDims::from_degrees((0..k as i64).map(|i| i * step))
    }

    /// `Π_{k=1}^n (1 + q^step + ... + q^{step (k-1)})`.
    pub fn q_factorial(n: usize, step: i64) -> GradedDims {
        (1..=n).fold(GradedDims::from_degrees([0]), |acc, k| acc.mul(&Self::q_integer(k, step)))
    }

    /// Gaussian binomial `[N choose n]` in `q^step`, from the q-Pascal rule
    /// `[N, n] = [N-1, n-1] + q^{step n} [N-1, n]`.
    pub fn q_binomial(big_n: usize, n: usize, step: i64) -> GradedDims {
        if n > big_n {
            return GradedDims::new();
        }
        let mut table: Vec<Vec<GradedDims>> = vec![vec![GradedDims::new(); n + 1]; big_n + 1];
        for m in 0..=big_n {
            table[m][0] = GradedDims::from_degrees([0]);
            for k in 1..=n.min(m) {
                let mut g = table[m - 1][k - 1].clone();
                let shifted = table[m - 1][k].mul(&GradedDims::from_degrees([step * k as i64]));
                for (&d, &v) in shifted.entries() {
                    g.add(d, v);
                }
                table[m][k] = g;
            }
        }
        table[big_n][n].clone()
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(&d, &v)| {
                let q = match d {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{}", d),
                };
                match (v, q.is_empty()) {
                    (_, true) => v.to_string(),
                    (1, false) => q,
                    _ => format!("{}{}", v, q),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
