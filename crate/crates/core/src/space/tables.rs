use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::SpaceError;

/// `(p, G_p)`: graphs of order `p`.
const GRAPHS: &[(usize, &str)] = &[
    (6, "156"),
    (7, "1044"),
    (8, "12346"),
    (9, "274668"),
    (10, "12005168"),
    (11, "1018997864"),
    (12, "165091172592"),
    (13, "50502031367952"),
    (14, "29054155657235488"),
    (15, "31426485969804308768"),
    (16, "64001015704527557894928"),
    (17, "245935864153532932683719776"),
    (18, "1787577725145611700547878190848"),
    (19, "24637809253125004524383007491432768"),
    (20, "645490122795799841856164638490742749440"),
    (21, "32220272899808983433502244253755283616097664"),
    (22, "3070846483094144300637568517187105410586657814272"),
    (23, "559946939699792080597976380819462179812276348458981632"),
    (24, "195704906302078447922174862416726256004122075267063365754368"),
];

/// `(p, t_p, T_p)`: free and rooted trees, as published (including the
/// `T_6 = 2` misprint; the true value is 20).
const TREES: &[(usize, u64, u64)] = &[
    (6, 6, 2),
    (7, 11, 48),
    (8, 23, 115),
    (9, 47, 286),
    (10, 106, 719),
    (11, 235, 1842),
    (12, 551, 4766),
    (13, 1301, 12486),
    (14, 3159, 32973),
    (15, 7741, 87811),
    (16, 19320, 235381),
    (17, 48629, 634847),
    (18, 123867, 1721159),
    (19, 317955, 4688676),
    (20, 823065, 12826228),
    (21, 2144505, 35221832),
    (22, 5623756, 97055181),
    (23, 14828074, 268282855),
    (24, 39299897, 743724984),
    (25, 104636890, 2067174645),
    (26, 279793450, 5759636510),
];

/// `(p, digraphs, connected digraphs)`.
const DIGRAPHS: &[(usize, u64, u64)] = &[
    (1, 1, 1),
    (2, 3, 2),
    (3, 16, 13),
    (4, 218, 199),
    (5, 9608, 9364),
    (6, 1540944, 1530843),
    (7, 882033440, 880471142),
    (8, 1793359192848, 1792473955306),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    Graphs,
    Trees,
    RootedTrees,
    Digraphs,
    ConnectedDigraphs,
}

impl CountKind {
    pub const ALL: [CountKind; 5] = [
        CountKind::Graphs,
        CountKind::Trees,
        CountKind::RootedTrees,
        CountKind::Digraphs,
        CountKind::ConnectedDigraphs,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CountKind::Graphs => "graphs",
            CountKind::Trees => "trees",
            CountKind::RootedTrees => "rooted-trees",
            CountKind::Digraphs => "digraphs",
            CountKind::ConnectedDigraphs => "connected-digraphs",
        }
    }

    /// Orders the table covers.
    pub fn range(self) -> std::ops::RangeInclusive<usize> {
        match self {
            CountKind::Graphs => 6..=24,
            CountKind::Trees | CountKind::RootedTrees => 6..=26,
            CountKind::Digraphs | CountKind::ConnectedDigraphs => 1..=8,
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CountKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| format!("unknown table `{s}`"))
    }
}

/// The tabulated value for order `p`.
pub fn lookup_counts(p: usize, kind: CountKind) -> Result<BigUint, SpaceError> {
    let missing = || SpaceError::Lookup { kind, p };
    match kind {
        CountKind::Graphs => GRAPHS
            .iter()
            .find(|r| r.0 == p)
            .map(|r| r.1.parse().expect("table entries are integers"))
            .ok_or_else(missing),
        CountKind::Trees | CountKind::RootedTrees => {
            let r = TREES.iter().find(|r| r.0 == p).ok_or_else(missing)?;
            Ok(BigUint::from(if kind == CountKind::Trees { r.1 } else { r.2 }))
        }
        CountKind::Digraphs | CountKind::ConnectedDigraphs => {
            let r = DIGRAPHS.iter().find(|r| r.0 == p).ok_or_else(missing)?;
            Ok(BigUint::from(if kind == CountKind::Digraphs { r.1 } else { r.2 }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(lookup_counts(6, CountKind::Graphs).unwrap(), BigUint::from(156u32));
        assert_eq!(lookup_counts(4, CountKind::Digraphs).unwrap(), BigUint::from(218u32));
        assert_eq!(lookup_counts(5, CountKind::ConnectedDigraphs).unwrap(), BigUint::from(9364u32));
        assert_eq!(lookup_counts(10, CountKind::RootedTrees).unwrap(), BigUint::from(719u32));
        assert_eq!(lookup_counts(24, CountKind::Graphs).unwrap().to_string().len(), 60);
    }

    #[test]
    fn out_of_range() {
        for kind in CountKind::ALL {
            let (lo, hi) = kind.range().into_inner();
            assert!(lookup_counts(lo, kind).is_ok());
            assert!(lookup_counts(hi, kind).is_ok());
            assert_eq!(lookup_counts(hi + 1, kind), Err(SpaceError::Lookup { kind, p: hi + 1 }));
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in CountKind::ALL {
            assert_eq!(kind.as_str().parse(), Ok(kind));
        }
    }
}
