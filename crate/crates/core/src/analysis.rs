//! Subtree counts, harmonic numbers and the NN/EBCS ratio report.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::instance::CpInstance;
use crate::star::{solve_ebcs_exact, solve_nn_exact, Biclique, NnInstance, NnSolution};

/// Exact rational with arbitrary-precision parts, always reduced.
pub type Rational = BigRational;

/// `p/q`, including `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `H_n = Σ_{i=1}^n 1/i`; `H_0 = 0`.
pub fn harmonic(n: usize) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, i| {
        acc + Rational::new(BigInt::one(), BigInt::from(i))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeCountReport {
    /// Connected subtrees whose topmost vertex is `v`.
    pub per_vertex_rooted: Vec<BigUint>,
    pub total: BigUint,
    pub height: usize,
    /// `log₂` of the bound, i.e. `2^{h+1}`.
    pub bound_log2: BigUint,
}

impl SubtreeCountReport {
    /// `2^{2^{h+1}}`, materialized only while it has at most `max_bits` bits.
    pub fn bound(&self, max_bits: u64) -> Option<BigUint> {
        let bits = u64::try_from(&self.bound_log2).ok()?;
        (bits < max_bits).then(|| BigUint::one() << bits)
    }

    /// `total ≤ 2^{2^{h+1}}`, decided from bit lengths.
    pub fn within_bound(&self) -> bool {
        // total ≤ 2^k  ⇔  total.bits() ≤ k, or total is exactly 2^k
        let bits = BigUint::from(self.total.bits());
        bits <= self.bound_log2 || (bits == &self.bound_log2 + 1u32 && self.total.count_ones() == 1)
    }
}

/// Counts connected subtrees of a rooted binary tree:
/// `f(v) = Π_{c child of v} (1 + f(c))`, total `Σ_v f(v)`.
pub fn count_subtrees(inst: &CpInstance, root: usize) -> Result<SubtreeCountReport> {
    inst.rooted(root)?.ensure_binary()?;
    count_connected_subtrees(inst, root)
}

/// Same count without the binary restriction; the recurrence holds for any
/// rooted tree, only the `2^{2^{h+1}}` bound is binary-specific.
pub fn count_connected_subtrees(inst: &CpInstance, root: usize) -> Result<SubtreeCountReport> {
    let rooted = inst.rooted(root)?;
    let mut f = vec![BigUint::zero(); inst.n()];
    for &v in rooted.order.iter().rev() {
        f[v] = rooted.children[v]
            .iter()
            .fold(BigUint::one(), |acc, &c| acc * (BigUint::one() + &f[c]));
    }
    let total = f.iter().sum();
    let height = rooted.height();
    Ok(SubtreeCountReport {
        per_vertex_rooted: f,
        total,
        height,
        bound_log2: BigUint::one() << (height + 1),
    })
}

#[derive(Debug, Clone)]
pub struct RatioReport {
    pub ebcs: usize,
    pub nn: usize,
    /// `nn / ebcs`; `None` when the graph has no edges.
    pub ratio: Option<Rational>,
    /// `H_{|U|}`.
    pub h_bound: Rational,
    /// `ebcs ≤ nn ≤ H_{|U|} · ebcs`.
    pub sandwich_ok: bool,
    pub biclique: Biclique,
    pub nn_solution: NnSolution,
}

pub fn ratio_experiment(g: &NnInstance) -> Result<RatioReport> {
    let biclique = solve_ebcs_exact(g)?;
    let nn_solution = solve_nn_exact(g)?;
    let ebcs = biclique.edge_count();
    let nn = nn_solution.cost;
    let h_bound = harmonic(g.n_u());
    let ratio = (ebcs > 0).then(|| Rational::new(BigInt::from(nn), BigInt::from(ebcs)));
    let sandwich_ok = ebcs <= nn && Rational::from_integer(BigInt::from(nn)) <= &h_bound * BigInt::from(ebcs);
    Ok(RatioReport {
        ebcs,
        nn,
        ratio,
        h_bound,
        sandwich_ok,
        biclique,
        nn_solution,
    })
}
