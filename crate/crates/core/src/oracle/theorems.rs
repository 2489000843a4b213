//! Endomorphism laws checked on every endomorphism of a small finite module.

use super::finite::{compose, image_of_matrix, kernel_of_matrix, FiniteModule, Matrix, Subspace};
use crate::error::Result;

/// Tallies and violations from [`check_endo_theorems`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EndoTheoremReport {
    pub endos: usize,
    /// Endomorphisms with `ker f ≠ ker f²`.
    pub non_reductive: usize,
    /// Endomorphisms whose kernel is essential.
    pub essential_kernels: usize,
    /// One non-reductive endomorphism, if any.
    pub non_reductive_example: Option<Matrix>,
    pub violations: Vec<String>,
}

impl EndoTheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn power(m: &FiniteModule, f: &Matrix, k: usize) -> Matrix {
    (0..k).fold(m.identity(), |acc, _| compose(f, &acc))
}

/// For every endomorphism `f` of `m`: the kernels of `f^k` stabilize by
/// `k = dim`, the stable power is reductive and satisfies rank-nullity with
/// the whole module as tectonics, an essential kernel forces nilpotency, and
/// on a simple module every nonzero endomorphism is invertible.
pub fn check_endo_theorems(m: &FiniteModule) -> Result<EndoTheoremReport> {
    let endos = m.enumerate_endos()?;
    let submodules = m.enumerate_submodules()?;
    let d = m.dim();
    let full = Subspace::full(d);
    let mut report = EndoTheoremReport {
        endos: endos.len(),
        ..Default::default()
    };
    for f in &endos {
        let mut bad: Vec<&str> = Vec::new();

        let kernels: Vec<Subspace> = (0..=d + 2)
            .map(|k| kernel_of_matrix(&power(m, f, k)))
            .collect();
        let Some(n0) = (1..=d.max(1)).find(|&k| kernels[k] == kernels[k + 1]) else {
            report.violations.push(format!("kernels of powers do not stabilize: f = {f:?}"));
            continue;
        };
        let fk = power(m, f, n0);
        let (ker, im) = (&kernels[n0], image_of_matrix(&fk));
        if ker.intersect(&im).dim() != 0 {
            bad.push("stable power is not reductive");
        }
        if ker.dim() + im.dim() != d || ker.sum(&im) != full {
            bad.push("rank-nullity fails at the stable power");
        }

        let essential = submodules
            .iter()
            .filter(|s| s.dim() > 0)
            .all(|s| s.intersect(&kernels[1]).dim() > 0);
        if essential {
            report.essential_kernels += 1;
            if power(m, f, d) != m.zero_map() {
                bad.push("essential kernel but not nilpotent");
            }
        }

        if d == 1 && *f != m.zero_map() && kernels[1].dim() != 0 {
            bad.push("nonzero endomorphism of a simple module is not invertible");
        }

        if kernels[1] != kernels[2] {
            report.non_reductive += 1;
            if report.non_reductive_example.is_none() {
                report.non_reductive_example = Some(f.clone());
            }
        }
        report
            .violations
            .extend(bad.into_iter().map(|what| format!("{what}: f = {f:?}")));
    }
    Ok(report)
}
