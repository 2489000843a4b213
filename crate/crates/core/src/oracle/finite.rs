//! Finite-length modules over F₂, with vectors packed into `u32` bitmasks.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::monomial::{box_monomials, Monomial, MonomialIdeal};

/// Largest dimension a vector can have.
pub const MAX_DIM: usize = 32;
/// Default guard for full submodule enumeration.
pub const DEFAULT_ENUM_DIM: usize = 8;
/// Guard for the longest-chain search, which only walks the cover graph.
pub const CHAIN_DIM: usize = 16;
/// Guard for endomorphism enumeration.
pub const ENDO_DIM: usize = 5;

/// `DEFAULT_ENUM_DIM`, unless overridden by `ORDLEN_MAX_DIM`.
pub fn enum_dim_limit() -> usize {
    std::env::var("ORDLEN_MAX_DIM")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&d| d > 0)
        .unwrap_or(DEFAULT_ENUM_DIM)
        .min(MAX_DIM)
}

/// A linear map, stored as the images of the basis vectors.
pub type Matrix = Vec<u32>;

pub fn apply(a: &[u32], v: u32) -> u32 {
    let mut out = 0;
    let mut bits = v;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        out ^= a[k];
        bits &= bits - 1;
    }
    out
}

/// `a ∘ b`.
pub fn compose(a: &[u32], b: &[u32]) -> Matrix {
    b.iter().map(|&col| apply(a, col)).collect()
}

/// A subspace in reduced echelon form: each basis vector has a distinct
/// leading bit that is clear in all the others, so equal subspaces have
/// equal bases.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<u32>,
}

fn lead(v: u32) -> u32 {
    1 << (31 - v.leading_zeros())
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace::default()
    }

    pub fn full(dim: usize) -> Self {
        Subspace::span((0..dim).map(|k| 1 << k))
    }

    pub fn span(vectors: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Subspace::zero();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// The canonical representative of `v` modulo this subspace.
    pub fn reduce(&self, mut v: u32) -> u32 {
        for &b in &self.basis {
            if v & lead(b) != 0 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v`; returns false when it was already inside.
    pub fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let l = lead(v);
        for b in &mut self.basis {
            if *b & l != 0 {
                *b ^= v;
            }
        }
        self.basis.push(v);
        self.basis.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for &b in &other.basis {
            s.insert(b);
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // Zassenhaus: reduce pairs (a, a) and (b, 0); the rows with zero
        // left half carry the intersection in their right half.
        let mut rows: Vec<(u32, u32)> = self.basis.iter().map(|&a| (a, a)).collect();
        rows.extend(other.basis.iter().map(|&b| (b, 0)));
        let mut pivots: Vec<(u32, u32)> = Vec::new();
        let mut out = Subspace::zero();
        for (mut l, mut r) in rows {
            for &(pl, pr) in &pivots {
                if l & lead(pl) != 0 {
                    l ^= pl;
                    r ^= pr;
                }
            }
            if l != 0 {
                pivots.push((l, r));
            } else if r != 0 {
                out.insert(r);
            }
        }
        out
    }
}

/// Kernel of the linear map sending basis vector `k` to `images[k]`.
pub fn kernel_of(images: &[u128]) -> Subspace {
    let mut pivots: Vec<(u128, u32)> = Vec::new();
    let mut out = Subspace::zero();
    for (k, &img) in images.iter().enumerate() {
        let (mut l, mut r) = (img, 1u32 << k);
        for &(pl, pr) in &pivots {
            let top = 1u128 << (127 - pl.leading_zeros());
            if l & top != 0 {
                l ^= pl;
                r ^= pr;
            }
        }
        if l != 0 {
            pivots.push((l, r));
            pivots.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        } else {
            out.insert(r);
        }
    }
    out
}

pub fn kernel_of_matrix(a: &[u32]) -> Subspace {
    kernel_of(&a.iter().map(|&c| c as u128).collect::<Vec<_>>())
}

pub fn image_of_matrix(a: &[u32]) -> Subspace {
    Subspace::span(a.iter().copied())
}

/// A finite-dimensional F₂-vector space with commuting variable actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    dim: usize,
    action: Vec<Matrix>,
    labels: Vec<Monomial>,
}

impl FiniteModule {
    pub fn new(dim: usize, action: Vec<Matrix>, labels: Vec<Monomial>) -> Result<Self> {
        // the socle computation packs one reduced image per variable into a u128
        let limit = if action.is_empty() { MAX_DIM } else { MAX_DIM.min(128 / action.len()) };
        if dim > limit {
            return Err(Error::Guard {
                what: "module dimension",
                value: dim,
                limit,
            });
        }
        Ok(FiniteModule { dim, action, labels })
    }

    /// `R/J` over F₂ for an Artinian monomial ideal `J`, with the standard
    /// monomials as basis. Membership is decided by divisibility only.
    pub fn from_artinian(j: &MonomialIdeal) -> Result<Self> {
        let n = j.n();
        let mut bounds = vec![0u32; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            *b = j
                .gens()
                .iter()
                .filter(|g| (0..n).all(|k| k == i || g.exp(k) == 0))
                .map(|g| g.exp(i))
                .min()
                .ok_or(Error::NotArtinian(i))?;
        }
        let in_j = |m: &Monomial| j.gens().iter().any(|g| g.divides(m));
        let labels: Vec<Monomial> = box_monomials(&bounds).filter(|m| !in_j(m)).collect();
        if labels.len() > MAX_DIM {
            return Err(Error::Guard {
                what: "module dimension",
                value: labels.len(),
                limit: MAX_DIM,
            });
        }
        let index: HashMap<&Monomial, usize> =
            labels.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let action = (0..n)
            .map(|i| {
                let x = Monomial::var(n, i);
                labels
                    .iter()
                    .map(|m| index.get(&m.mul(&x)).map_or(0, |&k| 1u32 << k))
                    .collect()
            })
            .collect();
        FiniteModule::new(labels.len(), action, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn identity(&self) -> Matrix {
        (0..self.dim).map(|k| 1 << k).collect()
    }

    pub fn zero_map(&self) -> Matrix {
        vec![0; self.dim]
    }

    pub fn actions_commute(&self) -> bool {
        self.action.iter().all(|a| {
            self.action
                .iter()
                .all(|b| compose(a, b) == compose(b, a))
        })
    }

    /// The submodule generated by `seeds`.
    pub fn closure(&self, seeds: &Subspace) -> Subspace {
        let mut s = seeds.clone();
        let mut queue: VecDeque<u32> = seeds.basis().iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for a in &self.action {
                let w = apply(a, v);
                if s.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        s
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|&v| self.action.iter().all(|a| s.contains(apply(a, v))))
    }

    /// `{v : x_i·v ∈ n for all i}`, the preimage of the socle of `M/n`.
    fn socle_over(&self, n: &Subspace) -> Subspace {
        let shift = self.dim.max(1);
        let images: Vec<u128> = (0..self.dim)
            .map(|k| {
                self.action
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (i, a)| {
                        acc | ((n.reduce(a[k]) as u128) << (i * shift))
                    })
            })
            .collect();
        kernel_of(&images)
    }

    /// Submodules covering `n`: `n + F·v` for each line of `socle(M/n)`.
    pub fn covers(&self, n: &Subspace) -> Vec<Subspace> {
        let s = self.socle_over(n);
        let mut quotient_basis: Vec<u32> = Vec::new();
        let mut seen = n.clone();
        for &b in s.basis() {
            if seen.insert(b) {
                quotient_basis.push(b);
            }
        }
        let t = quotient_basis.len();
        (1u64..(1 << t))
            .map(|c| {
                let v = (0..t)
                    .filter(|&k| c >> k & 1 == 1)
                    .fold(0, |acc, k| acc ^ quotient_basis[k]);
                let mut cover = n.clone();
                cover.insert(v);
                cover
            })
            .collect()
    }

    fn guard(&self, what: &'static str, limit: usize) -> Result<()> {
        if self.dim > limit {
            return Err(Error::Guard {
                what,
                value: self.dim,
                limit,
            });
        }
        Ok(())
    }

    /// Every submodule, sorted by dimension and then basis.
    pub fn enumerate_submodules(&self) -> Result<Vec<Subspace>> {
        self.guard("submodule enumeration dimension", enum_dim_limit())?;
        let mut found: BTreeSet<(usize, Subspace)> = BTreeSet::new();
        let mut queue = VecDeque::from([Subspace::zero()]);
        found.insert((0, Subspace::zero()));
        while let Some(n) = queue.pop_front() {
            for c in self.covers(&n) {
                if found.insert((c.dim(), c.clone())) {
                    queue.push_back(c);
                }
            }
        }
        Ok(found.into_iter().map(|(_, s)| s).collect())
    }

    /// Number of steps in the longest strictly increasing chain of
    /// submodules from `0` to `M`, found by walking covers.
    pub fn longest_chain(&self) -> Result<usize> {
        self.guard("chain search dimension", CHAIN_DIM)?;
        let mut memo = HashMap::new();
        Ok(self.chain_from(&Subspace::zero(), &mut memo))
    }

    fn chain_from(&self, n: &Subspace, memo: &mut HashMap<Subspace, usize>) -> usize {
        if n.dim() == self.dim {
            return 0;
        }
        if let Some(&v) = memo.get(n) {
            return v;
        }
        let best = self
            .covers(n)
            .iter()
            .map(|c| 1 + self.chain_from(c, memo))
            .max()
            .unwrap_or(0);
        memo.insert(n.clone(), best);
        best
    }

    /// All linear maps commuting with every action matrix.
    pub fn enumerate_endos(&self) -> Result<Vec<Matrix>> {
        self.guard("endomorphism enumeration dimension", ENDO_DIM)?;
        let d = self.dim;
        // unknown (r, s) is the entry of row r, column s: bit r of f(e_s)
        let unknown = |r: usize, s: usize| 1u64 << (r * d + s);
        let mut rows: Vec<u64> = Vec::new();
        for a in &self.action {
            for k in 0..d {
                for r in 0..d {
                    // bit r of f(a e_k) + a(f e_k)
                    let mut row = 0u64;
                    for s in 0..d {
                        if a[k] >> s & 1 == 1 {
                            row ^= unknown(r, s);
                        }
                        if a[s] >> r & 1 == 1 {
                            row ^= unknown(s, k);
                        }
                    }
                    if row != 0 {
                        rows.push(row);
                    }
                }
            }
        }
        let solutions = nullspace(&rows, d * d);
        let count = solutions.len();
        Ok((0u64..(1 << count))
            .map(|c| {
                let bits = (0..count)
                    .filter(|&k| c >> k & 1 == 1)
                    .fold(0u64, |acc, k| acc ^ solutions[k]);
                (0..d)
                    .map(|s| {
                        (0..d)
                            .filter(|&r| bits & unknown(r, s) != 0)
                            .fold(0u32, |acc, r| acc | 1 << r)
                    })
                    .collect()
            })
            .collect())
    }
}

/// Basis of `{x : row·x = 0 for every row}` over F₂ in `width` unknowns.
fn nullspace(rows: &[u64], width: usize) -> Vec<u64> {
    let mut reduced: Vec<u64> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for &row in rows {
        let mut r = row;
        for (p, &col) in reduced.iter().zip(&pivot_cols) {
            if r >> col & 1 == 1 {
                r ^= p;
            }
        }
        if r == 0 {
            continue;
        }
        let col = r.trailing_zeros() as usize;
        for p in reduced.iter_mut() {
            if *p >> col & 1 == 1 {
                *p ^= r;
            }
        }
        reduced.push(r);
        pivot_cols.push(col);
    }
    (0..width)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut x = 1u64 << free;
            for (p, &col) in reduced.iter().zip(&pivot_cols) {
                if p >> free & 1 == 1 {
                    x |= 1 << col;
                }
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn artinian(n: usize, gens: &[&[u32]]) -> FiniteModule {
        FiniteModule::from_artinian(&MonomialIdeal::from_exps(n, gens).unwrap()).unwrap()
    }

    #[test]
    fn subspace_basics() {
        let a = Subspace::span([0b011, 0b110]);
        let b = Subspace::span([0b101, 0b110]);
        assert_eq!(a, b);
        assert!(a.contains(0b101));
        assert!(!a.contains(0b001));
        let c = Subspace::span([0b001, 0b010]);
        assert_eq!(a.intersect(&c), Subspace::span([0b011]));
        assert_eq!(a.sum(&c), Subspace::full(3));
        assert_eq!(kernel_of_matrix(&[0b01, 0b01, 0b10]), Subspace::span([0b011]));
    }

    #[test]
    fn submodules_of_small_modules() {
        let m2 = artinian(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(m2.dim(), 3);
        assert!(m2.actions_commute());
        assert_eq!(m2.enumerate_submodules().unwrap().len(), 6);
        assert_eq!(m2.longest_chain().unwrap(), 3);

        let simple = artinian(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(simple.enumerate_submodules().unwrap().len(), 2);
        assert_eq!(simple.longest_chain().unwrap(), 1);

        let zero = FiniteModule::from_artinian(&MonomialIdeal::unit(2)).unwrap();
        assert_eq!(zero.enumerate_submodules().unwrap(), vec![Subspace::zero()]);
        assert_eq!(zero.longest_chain().unwrap(), 0);

        let m = artinian(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(m.longest_chain().unwrap(), 4);
    }

    #[test]
    fn enumerated_submodules_are_closed_and_complete() {
        let m = artinian(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let subs = m.enumerate_submodules().unwrap();
        assert!(subs.iter().all(|s| m.is_submodule(s)));
        // every subspace is the span of some set of vectors
        let mut brute = BTreeSet::new();
        for mask in 0u32..(1 << (1 << m.dim())) {
            let s = Subspace::span((0..(1u32 << m.dim())).filter(|v| mask >> v & 1 == 1));
            if m.is_submodule(&s) {
                brute.insert(s);
            }
        }
        let all: BTreeSet<Subspace> = subs.into_iter().collect();
        assert_eq!(brute, all);
    }

    #[test]
    fn non_artinian_is_rejected() {
        let j = MonomialIdeal::from_exps(2, &[&[2, 0]]).unwrap();
        assert!(FiniteModule::from_artinian(&j).is_err());
    }

    #[test]
    fn endomorphisms_commute_with_action() {
        let m2 = artinian(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let endos = m2.enumerate_endos().unwrap();
        assert!(endos.iter().all(|f| m2
            .action()
            .iter()
            .all(|a| compose(f, a) == compose(a, f))));
        assert!(endos.contains(&m2.identity()));
        assert!(endos.contains(&m2.action()[0]));
        // brute force over all 2^9 linear maps
        let brute = (0u32..(1 << 9))
            .map(|c| (0..3).map(|k| c >> (3 * k) & 0b111).collect::<Matrix>())
            .filter(|f| m2.action().iter().all(|a| compose(f, a) == compose(a, f)))
            .count();
        assert_eq!(brute, endos.len());
    }
}
