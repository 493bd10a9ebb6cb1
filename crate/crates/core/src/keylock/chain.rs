use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{authenticate, total_labels, KeyLockError, KeyLockPair};
use crate::graph::{Labelling, Rule, TopsnutGpw};
use crate::labelling::{dual_labelling, verify_vertex_labels, LabellingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    /// `k_{i+1} = g(k_i)`.
    Recursive,
    /// `k_{j+1} = g(k_{j-1}, k_j)`: the step applied to `k_j`, checked
    /// against `k_{j-1}`.
    Fibonacci,
}

impl FromStr for ChainKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recursive" => Ok(ChainKind::Recursive),
            "fibonacci" => Ok(ChainKind::Fibonacci),
            _ => Err(format!("unknown chain kind `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainStep {
    /// [`dual_labelling`].
    Dual,
    /// Every edge label `x` in {1, 2, 3} becomes `x mod 3 + 1`.
    Mod3Shift,
    /// Every vertex label `x` becomes `bound - x`; edge labels are re-induced.
    LabelComplement { bound: u64 },
}

impl fmt::Display for ChainStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainStep::Dual => f.write_str("dual"),
            ChainStep::Mod3Shift => f.write_str("mod3-shift"),
            ChainStep::LabelComplement { bound } => write!(f, "label-complement:{bound}"),
        }
    }
}

impl FromStr for ChainStep {
    type Err = String;

    /// `dual`, `mod3-shift` or `label-complement:BOUND`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            None if s == "dual" => Ok(ChainStep::Dual),
            None if s == "mod3-shift" => Ok(ChainStep::Mod3Shift),
            Some(("label-complement", b)) => {
                b.parse().map(|bound| ChainStep::LabelComplement { bound }).map_err(|_| format!("bad bound `{b}`"))
            }
            _ => Err(format!("unknown chain step `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSpec {
    pub kind: ChainKind,
    pub m: usize,
    pub step: ChainStep,
}

/// The start of a chain. A pair seeds a Fibonacci chain with both elements
/// and supplies the rule used for the compatibility flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainSeed {
    Single(TopsnutGpw),
    Pair(KeyLockPair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainElement {
    pub gpw: TopsnutGpw,
    /// For Fibonacci elements produced from a pair seed: whether the element
    /// opens against the element two places back under the pair's rule.
    pub compatible: Option<bool>,
}

/// Keeps the rule tag only if the new labels still satisfy it.
fn retag(gpw: &TopsnutGpw, labels: &[u64]) -> Result<TopsnutGpw, KeyLockError> {
    let mut rule = gpw.rule();
    if let Some(kind) = LabellingKind::from_rule(rule) {
        if !verify_vertex_labels(gpw.graph(), labels, kind).unwrap_or(false) {
            rule = Rule::Free;
        }
    }
    Ok(TopsnutGpw::from_vertex_labels(gpw.graph().clone(), labels, rule)?)
}

fn apply(step: ChainStep, gpw: &TopsnutGpw) -> Result<TopsnutGpw, KeyLockError> {
    let fail = |reason: String| KeyLockError::Step { step: step.to_string(), reason };
    match step {
        ChainStep::Dual => Ok(dual_labelling(gpw)?),
        ChainStep::LabelComplement { bound } => {
            let labels = total_labels(gpw)?;
            if let Some(&x) = labels.iter().find(|&&x| x > bound) {
                return Err(fail(format!("label {x} exceeds {bound}")));
            }
            let comp: Vec<u64> = labels.iter().map(|&x| bound - x).collect();
            retag(gpw, &comp)
        }
        ChainStep::Mod3Shift => {
            let mut l = Labelling::new(gpw.rule());
            for (v, x) in gpw.labelling().vertex_labels() {
                l.set_vertex(v, x);
            }
            for e in gpw.graph().edges() {
                match gpw.edge_label(e) {
                    Some(x @ 1..=3) => l.set_edge(e, x % 3 + 1),
                    Some(x) => return Err(fail(format!("edge {e} has label {x} outside 1..=3"))),
                    None => return Err(fail(format!("edge {e} is unlabelled"))),
                }
            }
            Ok(TopsnutGpw::new(gpw.graph().clone(), l)?)
        }
    }
}

/// Builds a chain of exactly `spec.m` elements.
pub fn build_chain(seed: &ChainSeed, spec: &ChainSpec) -> Result<Vec<ChainElement>, KeyLockError> {
    if spec.m == 0 {
        return Err(KeyLockError::EmptyChain);
    }
    let plain = |gpw: TopsnutGpw| ChainElement { gpw, compatible: None };
    let (first, second, rule) = match seed {
        ChainSeed::Single(k) => (k.clone(), None, None),
        ChainSeed::Pair(p) => (p.key.clone(), Some(p.lock.clone()), Some(p.rule)),
    };
    let mut chain = vec![plain(first)];
    match spec.kind {
        ChainKind::Recursive => {
            while chain.len() < spec.m {
                let next = apply(spec.step, &chain.last().unwrap().gpw)?;
                chain.push(plain(next));
            }
        }
        ChainKind::Fibonacci => {
            if spec.m > 1 {
                let second = match second {
                    Some(s) => s,
                    None => apply(spec.step, &chain[0].gpw)?,
                };
                chain.push(plain(second));
            }
            while chain.len() < spec.m {
                let j = chain.len() - 1;
                let next = apply(spec.step, &chain[j].gpw)?;
                let compatible = rule.map(|rule| {
                    let pair = KeyLockPair { key: chain[j - 1].gpw.clone(), lock: next.clone(), rule };
                    authenticate(&pair).unwrap_or(false)
                });
                chain.push(ChainElement { gpw: next, compatible });
            }
        }
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, Graph};
    use crate::keylock::AuthRule;

    fn key() -> TopsnutGpw {
        TopsnutGpw::from_vertex_labels(Graph::path(3), &[0, 1, 4], Rule::TwinOddGraceful).unwrap()
    }

    #[test]
    fn dual_chain_alternates() {
        let spec = ChainSpec { kind: ChainKind::Recursive, m: 3, step: ChainStep::Dual };
        let c = build_chain(&ChainSeed::Single(key()), &spec).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[2].gpw, c[0].gpw);
        assert_eq!(c[1].gpw.vertex_labels().unwrap(), vec![4, 3, 0]);
    }

    #[test]
    fn mod3_chain_has_period_three() {
        let mut l = Labelling::new(Rule::Free);
        l.set_edge(Edge::new(0, 1), 1);
        l.set_edge(Edge::new(1, 2), 3);
        let g = TopsnutGpw::new(Graph::path(3), l).unwrap();
        let spec = ChainSpec { kind: ChainKind::Recursive, m: 4, step: ChainStep::Mod3Shift };
        let c = build_chain(&ChainSeed::Single(g), &spec).unwrap();
        assert_eq!(c[3].gpw, c[0].gpw);
        assert_ne!(c[1].gpw, c[0].gpw);
        let wide = TopsnutGpw::from_vertex_labels(Graph::path(2), &[0, 5], Rule::Free).unwrap();
        assert!(matches!(build_chain(&ChainSeed::Single(wide), &spec), Err(KeyLockError::Step { .. })));
    }

    #[test]
    fn fibonacci_is_deterministic() {
        let lock = TopsnutGpw::from_vertex_labels(Graph::path(3), &[2, 3, 0], Rule::TwinOddGraceful).unwrap();
        let seed = ChainSeed::Pair(KeyLockPair { key: key(), lock, rule: AuthRule::TwinOddGraceful });
        let spec = ChainSpec { kind: ChainKind::Fibonacci, m: 5, step: ChainStep::LabelComplement { bound: 4 } };
        let a = build_chain(&seed, &spec).unwrap();
        let b = build_chain(&seed, &spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert!(a[..2].iter().all(|e| e.compatible.is_none()));
        assert!(a[2..].iter().all(|e| e.compatible.is_some()));
    }

    #[test]
    fn step_parsing() {
        assert_eq!("label-complement:9".parse(), Ok(ChainStep::LabelComplement { bound: 9 }));
        assert_eq!("dual".parse(), Ok(ChainStep::Dual));
        assert!("flip".parse::<ChainStep>().is_err());
    }
}
