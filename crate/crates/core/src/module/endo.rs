use super::MonomialModule;
use crate::error::Result;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ordinal::Ordinal;

/// Kernel, image and lengths of multiplication by a monomial `r` on `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoAnalysis {
    pub r: Monomial,
    pub kernel: MonomialModule,
    pub image: MonomialModule,
    /// Length of `M`.
    pub mu: Ordinal,
    /// Length of the kernel.
    pub kappa: Ordinal,
    /// Length of the image.
    pub theta: Ordinal,
    /// `ker r = ker r²`, equivalently kernel and image meet trivially.
    pub reductive: bool,
    /// `mu = kappa ⊕ theta`.
    pub satisfies_rank_nullity: bool,
    /// Least `k ≥ 1` with `r^k` reductive.
    pub reductive_power: u32,
    /// Rank-nullity for `r^k` at `k = reductive_power`.
    pub rank_nullity_at_reductive_power: bool,
    /// Length of `ker r^k + r^k M` at the reductive power.
    pub tectonics_length: Ordinal,
    /// Least `k` with `r^k M = 0`, if any.
    pub nilpotency_index: Option<u32>,
    pub nilpotent: bool,
    pub monic: bool,
    pub open_image: bool,
}

impl MonomialModule {
    /// `((J : r^k) ∩ I)/J`.
    pub fn mult_kernel(&self, r: &Monomial, k: u32) -> Result<MonomialModule> {
        let colon = self.j().colon_monomial(&r.pow(k))?;
        self.submodule(colon.intersect(self.i())?)
    }

    /// `(r^k·I + J)/J`.
    pub fn mult_image(&self, r: &Monomial, k: u32) -> Result<MonomialModule> {
        self.submodule(self.i().scale(&r.pow(k)).sum(self.j())?)
    }

    /// Powers of `r` past this bound act like the bound itself on colons by
    /// `J` and on membership in `J`.
    fn power_bound(&self) -> u32 {
        self.j().max_exponents().into_iter().max().unwrap_or(0).max(1)
    }

    /// Analysis of the multiplication endomorphism `a ↦ r·a`.
    pub fn mult_endo(&self, r: &Monomial) -> Result<EndoAnalysis> {
        let kernel = self.mult_kernel(r, 1)?;
        let image = self.mult_image(r, 1)?;
        let (mu, kappa, theta) = (self.length(), kernel.length(), image.length());

        let bound = self.power_bound();
        let mut reductive_power = 1;
        let mut ker_k = kernel.clone();
        loop {
            let next = self.mult_kernel(r, reductive_power + 1)?;
            if next == ker_k || reductive_power > bound {
                break;
            }
            ker_k = next;
            reductive_power += 1;
        }
        let im_k = self.mult_image(r, reductive_power)?;
        let (kappa_k, theta_k) = (ker_k.length(), im_k.length());
        let tectonics = self.sum(&ker_k, &im_k)?;

        let nilpotency_index = if self.is_zero() {
            Some(0)
        } else {
            (1..=bound).find(|&k| self.j().contains(&self.i().scale(&r.pow(k))))
        };

        Ok(EndoAnalysis {
            r: r.clone(),
            reductive: reductive_power == 1,
            satisfies_rank_nullity: mu == kappa.shuffle_sum(&theta),
            reductive_power,
            rank_nullity_at_reductive_power: mu == kappa_k.shuffle_sum(&theta_k),
            tectonics_length: tectonics.length(),
            nilpotent: nilpotency_index.is_some(),
            nilpotency_index,
            monic: kernel.is_zero(),
            open_image: theta == mu,
            kernel,
            image,
            mu,
            kappa,
            theta,
        })
    }

    /// Whether multiplication by `r` is injective, decided through the
    /// associated primes: `r` is regular iff it lies in none of them.
    pub fn is_regular_element(&self, r: &Monomial) -> bool {
        let support = r.support_mask();
        self.ass().iter().all(|p| p.mask() & support == 0)
    }

    /// `r^k·I ⊆ J`.
    pub fn power_kills(&self, r: &Monomial, k: u32) -> bool {
        self.j().contains(&self.i().scale(&r.pow(k)))
    }
}

impl EndoAnalysis {
    /// The kernel is open in `M`.
    pub fn kernel_open(&self) -> bool {
        self.kappa == self.mu
    }

    /// The transfinite rank-nullity bounds `θ + κ ≤ μ ≤ θ ⊕ κ`.
    pub fn within_rank_nullity_bounds(&self) -> bool {
        self.theta.ord_sum(&self.kappa) <= self.mu && self.mu <= self.theta.shuffle_sum(&self.kappa)
    }

    /// The kernel ideal of `r` as a submodule presentation.
    pub fn kernel_ideal(&self) -> &MonomialIdeal {
        self.kernel.i()
    }
}
