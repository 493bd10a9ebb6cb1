//! Password-space arithmetic: free and rooted tree enumeration, reference
//! count tables, the per-graph and per-class password counts and their
//! strength in bits.

mod tables;
mod trees;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

pub use tables::{lookup_counts, CountKind};
pub use trees::{count_rooted_trees, enumerate_trees, FreeTrees, TREE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("order {p} is outside 1..={cap}")]
    Capacity { p: usize, cap: usize },
    #[error("no {kind} entry for order {p}")]
    Lookup { kind: CountKind, p: usize },
    #[error("every product term in the bracket is zero")]
    DegenerateParams,
    #[error("palette size {0} is below 2")]
    Palette(u32),
    #[error("class size must be positive")]
    EmptyClass,
    #[error("cannot read `{0}` as a count")]
    BadCount(String),
    #[error("exponent {0} is too large")]
    Exponent(u64),
}

/// Terms of the bracket `a_c n_c + a_l n_l + a_set n_set` and the palette
/// `k_c` raised to the exponent (by default `p + q`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceParams {
    /// Number of colouring types.
    pub a_c: BigUint,
    /// Distinct colourings per type.
    pub n_c: BigUint,
    /// Number of labelling types.
    pub a_l: BigUint,
    /// Distinct labellings per type.
    pub n_l: BigUint,
    /// Number of set-labelling types.
    pub a_set: BigUint,
    /// Distinct set-labellings per type.
    pub n_set: BigUint,
    pub k_c: u32,
    /// Overrides `p + q`.
    pub exponent: Option<u64>,
}

impl Default for SpaceParams {
    fn default() -> Self {
        SpaceParams {
            a_c: BigUint::zero(),
            n_c: BigUint::zero(),
            a_l: BigUint::zero(),
            n_l: BigUint::zero(),
            a_set: BigUint::zero(),
            n_set: BigUint::zero(),
            k_c: 2,
            exponent: None,
        }
    }
}

impl SpaceParams {
    /// One labelling type with `n_l` labellings.
    pub fn labellings(n_l: BigUint) -> Self {
        SpaceParams { a_l: BigUint::one(), n_l, ..Self::default() }
    }

    pub fn with_exponent(mut self, e: u64) -> Self {
        self.exponent = Some(e);
        self
    }

    fn bracket(&self) -> BigUint {
        &self.a_c * &self.n_c + &self.a_l * &self.n_l + &self.a_set * &self.n_set
    }
}

/// An exact count with its base-2 logarithm.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceCount {
    pub count: BigUint,
    pub bits: f64,
}

impl SpaceCount {
    fn new(count: BigUint) -> Self {
        let bits = log2(&count);
        SpaceCount { count, bits }
    }
}

impl fmt::Display for SpaceCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n~2^{:.8}", self.count, self.bits)
    }
}

/// `log2(x)` from the top 64 bits, so it stays accurate for huge counts.
pub fn log2(x: &BigUint) -> f64 {
    let n = x.bits();
    if n <= 64 {
        return (x.iter_u64_digits().next().unwrap_or(0) as f64).log2();
    }
    let shift = n - 64;
    let top = (x >> shift).iter_u64_digits().next().unwrap();
    (top as f64).log2() + shift as f64
}

/// `k_c^e * [a_c n_c + a_l n_l + a_set n_set]` for one `(p, q)`-graph.
pub fn gpw_count_graph(p: u64, q: u64, params: &SpaceParams) -> Result<SpaceCount, SpaceError> {
    gpw_count_class(p, q, &BigUint::one(), params)
}

/// [`gpw_count_graph`] times the number `n_pq` of graphs in the class.
pub fn gpw_count_class(p: u64, q: u64, n_pq: &BigUint, params: &SpaceParams) -> Result<SpaceCount, SpaceError> {
    if params.k_c < 2 {
        return Err(SpaceError::Palette(params.k_c));
    }
    if n_pq.is_zero() {
        return Err(SpaceError::EmptyClass);
    }
    let bracket = params.bracket();
    if bracket.is_zero() {
        return Err(SpaceError::DegenerateParams);
    }
    let e = params.exponent.unwrap_or(p + q);
    let e = u32::try_from(e).map_err(|_| SpaceError::Exponent(e))?;
    let power = BigUint::from(params.k_c).pow(e);
    Ok(SpaceCount::new(n_pq * power * bracket))
}

/// Number of gracefully labelled graphs with `q` edges, which is `q!`.
pub fn sheppard_count(q: u64) -> BigUint {
    factorial(q)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Reads `106`, `10!`, `2^18` or products of those joined by `*`.
pub fn parse_count(s: &str) -> Result<BigUint, SpaceError> {
    let bad = || SpaceError::BadCount(s.to_string());
    let mut acc = BigUint::one();
    for term in s.split('*') {
        let term = term.trim();
        let v = if let Some(n) = term.strip_suffix('!') {
            factorial(n.trim().parse().map_err(|_| bad())?)
        } else if let Some((b, e)) = term.split_once('^') {
            let b: BigUint = b.trim().parse().map_err(|_| bad())?;
            b.pow(e.trim().parse::<u32>().map_err(|_| bad())?)
        } else {
            term.parse().map_err(|_| bad())?
        };
        acc *= v;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn empty_graph_counts_one() {
        let c = gpw_count_graph(0, 0, &SpaceParams::labellings(big(1))).unwrap();
        assert_eq!(c.count, big(1));
        assert_eq!(c.bits, 0.0);
    }

    #[test]
    fn doubling_palette() {
        let mut params = SpaceParams::labellings(big(7));
        let a = gpw_count_graph(3, 2, &params).unwrap().count;
        params.k_c = 4;
        let b = gpw_count_graph(3, 2, &params).unwrap().count;
        assert_eq!(b, a * big(32));
    }

    #[test]
    fn errors() {
        let zero = SpaceParams::default();
        assert_eq!(gpw_count_graph(2, 1, &zero), Err(SpaceError::DegenerateParams));
        let one = SpaceParams::labellings(big(1));
        assert_eq!(gpw_count_class(2, 1, &big(0), &one), Err(SpaceError::EmptyClass));
        let mono = SpaceParams { k_c: 1, ..one };
        assert_eq!(gpw_count_graph(2, 1, &mono), Err(SpaceError::Palette(1)));
    }

    #[test]
    fn log2_of_large_values() {
        assert_eq!(log2(&big(1024)), 10.0);
        let x = BigUint::one() << 200u32;
        assert_eq!(log2(&x), 200.0);
        assert!((log2(&(x * big(3))) - (200.0 + 3f64.log2())).abs() < 1e-12);
    }

    #[test]
    fn count_expressions() {
        assert_eq!(parse_count("10!").unwrap(), big(3628800));
        assert_eq!(parse_count("106 * 2^18 * 10!").unwrap(), big(100834423603200));
        assert!(parse_count("ten").is_err());
        assert_eq!(sheppard_count(3), big(6));
    }

    #[test]
    fn display_has_eight_places() {
        let c = gpw_count_graph(0, 3, &SpaceParams::labellings(big(1))).unwrap();
        assert_eq!(c.to_string(), "8\n~2^3.00000000");
    }
}
