//! Closed-form anti-Ramsey values. All arithmetic is exact integer arithmetic.

use serde::{Deserialize, Serialize};

use crate::counts::{binomial2, h_count, h_prime_count, turan_count};
use crate::error::{arg, Error, Result};
use crate::graph::turan_class_sizes;

/// Parameters shared by the formulas. `q` is only read by [`ar_h_prime`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaParams {
    pub n: u64,
    pub p: u64,
    pub k: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

impl FormulaParams {
    pub fn new(n: u64, p: u64, k: u64) -> Self {
        FormulaParams { n, p, k, q: None }
    }

    pub fn with_q(self, q: u64) -> Self {
        FormulaParams { q: Some(q), ..self }
    }

    fn check(&self) -> Result<()> {
        if self.p < 2 || self.k < 2 {
            return arg(format!("need p >= 2 and k >= 2, got p = {}, k = {}", self.p, self.k));
        }
        if self.q == Some(0) {
            return arg("q must be >= 1");
        }
        Ok(())
    }
}

/// Which closed form to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formula {
    /// `t(n, p) + 1`, the value for `K_{p+2}`.
    Clique,
    /// `h'(n, p, k-1) + q`.
    HPrime,
    /// `h(n, p, k-1) + 1`.
    H,
    /// `h'(n, p, k-1) + C(k-2, 2) + 1`, for `k K_{p+1}`.
    DisjointCliques,
    /// `⌊(n-1)/2⌋ ⌈(n-1)/2⌉ + n + 1`.
    Petersen,
    /// `t(n, p) + Σ ⌊(k-2) n_i / 2⌋ + p` over the Turán class sizes `n_i`.
    Gadget,
}

impl Formula {
    pub const ALL: [Formula; 6] = [
        Formula::Clique,
        Formula::HPrime,
        Formula::H,
        Formula::DisjointCliques,
        Formula::Petersen,
        Formula::Gadget,
    ];

    /// Command-line identifier.
    pub fn id(self) -> &'static str {
        match self {
            Formula::Clique => "1.4",
            Formula::HPrime => "1.8i",
            Formula::H => "1.8ii",
            Formula::DisjointCliques => "cliques",
            Formula::Petersen => "petersen",
            Formula::Gadget => "1.12",
        }
    }

    pub fn from_id(id: &str) -> Option<Formula> {
        Self::ALL.into_iter().find(|f| f.id() == id)
    }

    pub fn eval(self, params: &FormulaParams) -> Result<u64> {
        let FormulaParams { n, p, k, .. } = *params;
        match self {
            Formula::Clique => ar_clique(n, p),
            Formula::HPrime => ar_h_prime(params),
            Formula::H => ar_h(params),
            Formula::DisjointCliques => ar_disjoint_cliques(n, p, k),
            Formula::Petersen => ar_petersen(n),
            Formula::Gadget => ar_gadget(n, p, k),
        }
    }
}

/// `t(n, p) + 1`.
pub fn ar_clique(n: u64, p: u64) -> Result<u64> {
    if p < 1 {
        return arg("p must be >= 1");
    }
    Ok(turan_count(n, p)? + 1)
}

/// `h'(n, p, k-1) + q`.
pub fn ar_h_prime(params: &FormulaParams) -> Result<u64> {
    params.check()?;
    let q = params.q.ok_or_else(|| Error::Argument("this formula needs q".into()))?;
    Ok(h_prime_count(params.n, params.p, params.k - 1)? + q)
}

/// `h(n, p, k-1) + 1`.
pub fn ar_h(params: &FormulaParams) -> Result<u64> {
    params.check()?;
    Ok(h_count(params.n, params.p, params.k - 1)? + 1)
}

/// `h'(n, p, k-1) + C(k-2, 2) + 1`.
pub fn ar_disjoint_cliques(n: u64, p: u64, k: u64) -> Result<u64> {
    FormulaParams::new(n, p, k).check()?;
    Ok(h_prime_count(n, p, k - 1)? + binomial2(k - 2) + 1)
}

/// `⌊(n-1)/2⌋ ⌈(n-1)/2⌉ + n + 1`, for `n >= 10`.
pub fn ar_petersen(n: u64) -> Result<u64> {
    if n < 10 {
        return arg(format!("need n >= 10, got {n}"));
    }
    let m = n - 1;
    Ok((m / 2) * m.div_ceil(2) + n + 1)
}

/// `t(n, p) + Σ ⌊(k-2) n_i / 2⌋ + p` with `n_i` the class sizes of `T(n, p)`.
pub fn ar_gadget(n: u64, p: u64, k: u64) -> Result<u64> {
    FormulaParams::new(n, p, k).check()?;
    let sizes = turan_class_sizes(n as usize, p as usize)?;
    let gadgets: u64 = sizes.iter().map(|&s| (k - 2) * s as u64 / 2).sum();
    Ok(turan_count(n, p)? + gadgets + p)
}
