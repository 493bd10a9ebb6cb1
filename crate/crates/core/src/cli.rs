//! The `topsnut` command line. Every subcommand reads the text formats of
//! the library (graph, embedding, colouring, pair) from files, `-` meaning
//! stdin, and writes plain text.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use crate::authd::{parse_template_pool, serve, Authd, Store};
use crate::coloring::{
    kempe_classes, klein_edge_coloring, search_colorings, shift_mod3, verify_mod3_group, Mod3EdgeLabelling,
    VertexColoring,
};
use crate::graph::{parse_graph_text, to_graph_text, Edge, Graph, Rule, TopsnutGpw, Vertex};
use crate::keylock::{
    authenticate, build_chain, derive_alphanumeric, enumerate_locks, AuthRule, ChainKind, ChainSeed, ChainSpec,
    ChainStep, KeyLockPair,
};
use crate::labelling::{
    count_labellings, dual_labelling, is_perfect_labelling_graph, search_labellings, verify_labelling, LabellingKind,
    SearchBudget,
};
use crate::planar::{
    edge_identify, flip_edge, offspring_vertex, parse_embedding, recursive_mpg, single_edge_paste, split_vertex,
    to_embedding_text, FacePolicy, Piece,
};
use crate::space::{
    count_rooted_trees, enumerate_trees, gpw_count_class, gpw_count_graph, lookup_counts, parse_count, sheppard_count,
    CountKind, SpaceParams, TREE_CAP,
};

#[derive(Debug, Parser)]
#[command(name = "topsnut", version, about = "Graph labellings and key/lock graphical passwords")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a labelled graph against a labelling kind.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value = "graceful")]
        kind: LabellingKind,
    },
    /// List labellings of a graph, one label vector per line.
    Search {
        graph: PathBuf,
        #[arg(long, default_value = "graceful")]
        kind: LabellingKind,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        /// Backtracking node budget.
        #[arg(long)]
        nodes: Option<u64>,
    },
    /// Count labellings of a graph.
    Count {
        graph: PathBuf,
        #[arg(long, default_value = "graceful")]
        kind: LabellingKind,
    },
    /// Print the dual labelling.
    Dual {
        graph: PathBuf,
        #[arg(long, default_value = "free")]
        rule: Rule,
    },
    /// Do the graph and all its connected subgraphs admit the kind?
    Perfect {
        graph: PathBuf,
        #[arg(long, default_value = "graceful")]
        kind: LabellingKind,
    },
    /// List proper colourings, one colour vector per line.
    Colorings {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        k: u8,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Partition the proper colourings into Kempe classes.
    KempeClasses {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        k: u8,
    },
    /// Klein-four edge colouring induced by a proper 4-colouring.
    Klein {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Check the mod-3 law on the Klein labelling and its two shifts.
    Mod3Verify {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Maximal planar graph operations.
    Mpg {
        #[command(subcommand)]
        op: MpgOp,
    },
    /// Authenticate a key/lock pair file.
    TwinVerify { pair: PathBuf },
    /// All twin locks for a key on the candidate graphs.
    Locks {
        key: PathBuf,
        #[arg(long)]
        candidates: PathBuf,
    },
    /// Read a password off a walk on a labelled embedding.
    DerivePw {
        embedding: PathBuf,
        #[arg(long, value_delimiter = ',')]
        walk: Vec<Vertex>,
    },
    /// Build a chain from a labelled graph or a pair file.
    Chain {
        seed: PathBuf,
        #[arg(long, default_value = "recursive")]
        kind: ChainKind,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value = "dual")]
        step: ChainStep,
    },
    /// Password-space arithmetic.
    Space {
        #[command(subcommand)]
        op: SpaceOp,
    },
    /// Run the authentication service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        /// `TOPSNUT_STORE`, when set, takes precedence.
        #[arg(long, default_value = "topsnut-users.jsonl")]
        store: PathBuf,
        /// Template pool: graph blocks separated by `---` lines.
        #[arg(long)]
        templates: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MpgOp {
    /// Stack `n` vertices onto a triangle.
    Gen {
        #[arg(long)]
        n: usize,
        /// `newest`, `first-inner` or `seed:N`.
        #[arg(long, default_value = "newest")]
        policy: String,
    },
    Flip {
        embedding: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        edge: (Vertex, Vertex),
    },
    Split(VertexOp),
    Offspring(VertexOp),
    /// Identify an outer edge of one embedding with an outer edge of another.
    Paste {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        edge_g: (Vertex, Vertex),
        #[arg(long, value_parser = parse_pair)]
        edge_h: (Vertex, Vertex),
    },
    /// Glue three piece files (left, right, bottom).
    Identify {
        tl: PathBuf,
        tr: PathBuf,
        tb: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct VertexOp {
    pub embedding: PathBuf,
    #[arg(long)]
    pub vertex: Vertex,
    #[arg(long)]
    pub j: usize,
}

#[derive(Debug, Subcommand)]
pub enum SpaceOp {
    /// Count (or list) the trees of order `p`.
    Trees {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        list: bool,
    },
    Rooted {
        #[arg(long)]
        p: usize,
    },
    Lookup {
        #[arg(long)]
        kind: CountKind,
        #[arg(long)]
        p: usize,
    },
    Sheppard {
        #[arg(long)]
        q: u64,
    },
    /// Password count for one `(p, q)`-graph.
    Mgraph(Bracket),
    /// Password count for a whole class of `(p, q)`-graphs.
    Mclass {
        #[command(flatten)]
        bracket: Bracket,
        /// Class size; defaults to the number of trees of order `p`.
        #[arg(long)]
        n_pq: Option<String>,
    },
}

/// Count expressions: `106`, `10!`, `2^18`, products with `*`. Each `a_*`
/// defaults to 1 when its `n_*` is given.
#[derive(Debug, Args)]
pub struct Bracket {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub a_c: Option<String>,
    #[arg(long)]
    pub n_c: Option<String>,
    #[arg(long)]
    pub a_l: Option<String>,
    #[arg(long)]
    pub n_l: Option<String>,
    #[arg(long)]
    pub a_set: Option<String>,
    #[arg(long)]
    pub n_set: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub k_c: u32,
    /// Exponent of `k_c`; defaults to `p + q`.
    #[arg(long)]
    pub exp: Option<u64>,
}

impl Bracket {
    fn params(&self) -> Result<SpaceParams> {
        let term = |a: &Option<String>, n: &Option<String>| -> Result<(BigUint, BigUint)> {
            let n = n.as_deref().map(parse_count).transpose()?;
            let a = match (a, &n) {
                (Some(a), _) => parse_count(a)?,
                (None, Some(_)) => 1u32.into(),
                (None, None) => 0u32.into(),
            };
            Ok((a, n.unwrap_or_default()))
        };
        let (a_c, n_c) = term(&self.a_c, &self.n_c)?;
        let (a_l, n_l) = term(&self.a_l, &self.n_l)?;
        let (a_set, n_set) = term(&self.a_set, &self.n_set)?;
        Ok(SpaceParams { a_c, n_c, a_l, n_l, a_set, n_set, k_c: self.k_c, exponent: self.exp })
    }
}

fn parse_pair(s: &str) -> Result<(Vertex, Vertex), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `u,v`, found `{s}`"))?;
    let n = |t: &str| t.trim().parse::<Vertex>().map_err(|e| format!("`{t}`: {e}"));
    Ok((n(a)?, n(b)?))
}

fn read(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_gpw(path: &PathBuf, rule: Rule) -> Result<TopsnutGpw> {
    parse_graph_text(&read(path)?, rule).with_context(|| format!("parsing {}", path.display()))
}

/// Blocks of a multi-graph file, split on `---` lines.
fn blocks(text: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            out.push(String::new());
        } else {
            let cur = out.last_mut().unwrap();
            cur.push_str(line);
            cur.push('\n');
        }
    }
    out.retain(|b| b.lines().any(|l| !l.trim().is_empty() && !l.trim().starts_with('#')));
    out
}

/// `v color` lines; every vertex must appear once.
pub fn parse_coloring(text: &str, g: &Graph, k: u8) -> Result<VertexColoring> {
    let mut colors: BTreeMap<Vertex, u8> = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(v), Some(c), None) = (it.next(), it.next(), it.next()) else {
            bail!("line {}: expected `v color`", n + 1);
        };
        let v: Vertex = v.parse().with_context(|| format!("line {}", n + 1))?;
        let c: u8 = c.parse().with_context(|| format!("line {}", n + 1))?;
        if colors.insert(v, c).is_some() {
            bail!("line {}: vertex {v} coloured twice", n + 1);
        }
    }
    if colors.keys().copied().ne(g.vertices()) {
        bail!("colouring must list each of the {} vertices once", g.order());
    }
    Ok(VertexColoring::new(g, colors.into_values().collect(), k)?)
}

pub fn coloring_text(c: &VertexColoring) -> String {
    c.colors().iter().enumerate().map(|(v, c)| format!("{v} {c}\n")).collect()
}

/// Pair file: the key graph, a `---` line, the lock graph, and a
/// `rule: TAG` line (default `twin-odd-graceful`).
pub fn parse_pair_text(text: &str) -> Result<KeyLockPair> {
    let mut rule = AuthRule::TwinOddGraceful;
    let mut rest = String::new();
    for line in text.lines() {
        match line.trim().strip_prefix("rule:") {
            Some(tag) => rule = tag.parse()?,
            None => {
                rest.push_str(line);
                rest.push('\n');
            }
        }
    }
    let b = blocks(&rest);
    let [key, lock] = &b[..] else {
        bail!("a pair file holds exactly two graphs, found {}", b.len());
    };
    let graph_rule = if rule == AuthRule::TwinOddGraceful { Rule::TwinOddGraceful } else { Rule::Free };
    Ok(KeyLockPair {
        key: parse_graph_text(key, graph_rule).context("key graph")?,
        lock: parse_graph_text(lock, graph_rule).context("lock graph")?,
        rule,
    })
}

/// Piece file: embedding text plus `corners: a b c` and `colors: c0 c1 ...`.
pub fn parse_piece(text: &str) -> Result<Piece> {
    let mut corners = None;
    let mut colors = None;
    let mut rest = String::new();
    for line in text.lines() {
        let t = line.trim();
        if let Some(c) = t.strip_prefix("corners:") {
            let v: Vec<Vertex> = c.split_whitespace().map(str::parse).collect::<Result<_, _>>()?;
            corners = Some(<[Vertex; 3]>::try_from(v).map_err(|_| anyhow!("corners need three vertices"))?);
        } else if let Some(c) = t.strip_prefix("colors:") {
            colors = Some(c.split_whitespace().map(str::parse).collect::<Result<Vec<u8>, _>>()?);
        } else {
            rest.push_str(line);
            rest.push('\n');
        }
    }
    let embedding = parse_embedding(&rest)?;
    let coloring =
        VertexColoring::new(embedding.graph(), colors.ok_or_else(|| anyhow!("piece has no `colors:` line"))?, 4)?;
    let corners = corners.ok_or_else(|| anyhow!("piece has no `corners:` line"))?;
    Ok(Piece { embedding, coloring, corners })
}

pub fn piece_text(p: &Piece) -> String {
    let cs: Vec<String> = p.coloring.colors().iter().map(u8::to_string).collect();
    let [a, b, c] = p.corners;
    format!("{}corners: {a} {b} {c}\ncolors: {}\n", to_embedding_text(&p.embedding), cs.join(" "))
}

fn policy(s: &str) -> Result<FacePolicy> {
    Ok(match s {
        "newest" => FacePolicy::Newest,
        "first-inner" => FacePolicy::FirstInner,
        _ => match s.strip_prefix("seed:") {
            Some(n) => FacePolicy::Seeded(n.parse().context("seed")?),
            None => bail!("unknown policy `{s}`"),
        },
    })
}

fn labels_line(labels: &[u64]) -> String {
    labels.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// Labelled embedding: the embedding format, whose graph part may carry
/// vertex labels.
fn read_labelled_embedding(path: &PathBuf) -> Result<(crate::planar::PlanarEmbedding, TopsnutGpw)> {
    let text = read(path)?;
    let emb = parse_embedding(&text)?;
    let graph_part: String =
        text.lines().filter(|l| !l.split('#').next().unwrap_or("").contains(':')).map(|l| format!("{l}\n")).collect();
    let gpw = parse_graph_text(&graph_part, Rule::Free)?;
    Ok((emb, gpw))
}

/// Parses `args` and runs the command, writing to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    execute(cli.command, out)
}

pub fn execute(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Verify { graph, kind } => {
            let gpw = read_gpw(&graph, kind.rule())?;
            let ok = verify_labelling(&gpw, kind)?;
            writeln!(out, "{}", if ok { "valid" } else { "invalid" })?;
        }
        Command::Search { graph, kind, limit, nodes } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            let mut budget = SearchBudget::solutions(limit);
            if let Some(n) = nodes {
                budget.node_limit = n;
            }
            let res = search_labellings(&g, kind, budget)?;
            for l in &res.found {
                let labels: Vec<u64> = g.vertices().map(|v| l.vertex(v).unwrap()).collect();
                writeln!(out, "{}", labels_line(&labels))?;
            }
            if !res.complete {
                writeln!(out, "# node budget exhausted after {} nodes", res.nodes)?;
            }
        }
        Command::Count { graph, kind } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            writeln!(out, "{}", count_labellings(&g, kind)?)?;
        }
        Command::Dual { graph, rule } => {
            let gpw = read_gpw(&graph, rule)?;
            write!(out, "{}", to_graph_text(&dual_labelling(&gpw)?))?;
        }
        Command::Perfect { graph, kind } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            writeln!(out, "{}", is_perfect_labelling_graph(&g, kind)?)?;
        }
        Command::Colorings { graph, k, limit } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            let budget = limit.map_or(SearchBudget::UNLIMITED, SearchBudget::solutions);
            for c in search_colorings(&g, k, budget)?.found {
                let line: Vec<String> = c.colors().iter().map(u8::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Command::KempeClasses { graph, k } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            let res = kempe_classes(&g, k)?;
            writeln!(out, "classes: {}", res.classes.len())?;
            let sizes: Vec<String> = res.classes.iter().map(|c| c.len().to_string()).collect();
            writeln!(out, "sizes: {}", sizes.join(" "))?;
            writeln!(out, "kempe graph: {}", res.is_kempe_graph)?;
        }
        Command::Klein { graph, coloring } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            let c = parse_coloring(&read(&coloring)?, &g, 4)?;
            for (e, x) in klein_edge_coloring(&g, &c)?.iter() {
                let (u, v) = e.ends();
                writeln!(out, "{u} {v} {x}")?;
            }
        }
        Command::Mod3Verify { graph, coloring } => {
            let g = read_gpw(&graph, Rule::Free)?.into_parts().0;
            let c = parse_coloring(&read(&coloring)?, &g, 4)?;
            let h1 = Mod3EdgeLabelling::from(&klein_edge_coloring(&g, &c)?);
            let h2 = shift_mod3(&h1);
            let h3 = shift_mod3(&h2);
            let ok = verify_mod3_group(&h1, &h2, &h3)?;
            writeln!(out, "{}", if ok { "holds" } else { "fails" })?;
        }
        Command::Mpg { op } => mpg(op, out)?,
        Command::TwinVerify { pair } => {
            let pair = parse_pair_text(&read(&pair)?)?;
            let ok = authenticate(&pair)?;
            writeln!(out, "{} under {}", if ok { "accepted" } else { "rejected" }, pair.rule)?;
        }
        Command::Locks { key, candidates } => {
            let key = read_gpw(&key, Rule::TwinOddGraceful)?;
            let cands: Vec<Graph> = blocks(&read(&candidates)?)
                .iter()
                .map(|b| Ok(parse_graph_text(b, Rule::Free)?.into_parts().0))
                .collect::<Result<_>>()?;
            let locks = enumerate_locks(&key, &cands)?;
            for (i, l) in locks.iter().enumerate() {
                if i > 0 {
                    writeln!(out, "---")?;
                }
                write!(out, "{}", to_graph_text(l))?;
            }
            writeln!(out, "# {} locks", locks.len())?;
        }
        Command::DerivePw { embedding, walk } => {
            let (emb, gpw) = read_labelled_embedding(&embedding)?;
            writeln!(out, "{}", derive_alphanumeric(&emb, &gpw, &walk)?)?;
        }
        Command::Chain { seed, kind, m, step } => {
            let text = read(&seed)?;
            let seed = if blocks(&text).len() == 2 {
                ChainSeed::Pair(parse_pair_text(&text)?)
            } else {
                ChainSeed::Single(parse_graph_text(&text, Rule::Free)?)
            };
            let chain = build_chain(&seed, &ChainSpec { kind, m, step })?;
            for (i, el) in chain.iter().enumerate() {
                if i > 0 {
                    writeln!(out, "---")?;
                }
                if let Some(c) = el.compatible {
                    writeln!(out, "# compatible: {c}")?;
                }
                write!(out, "{}", to_graph_text(&el.gpw))?;
            }
        }
        Command::Space { op } => space(op, out)?,
        Command::Serve { port, host, store, templates } => {
            let store = std::env::var_os("TOPSNUT_STORE").map_or(store, PathBuf::from);
            let pool = match templates {
                Some(t) => parse_template_pool(&read(&t)?)?,
                None => Vec::new(),
            };
            let svc = Arc::new(Authd::new(Store::open(&store)?, pool)?);
            let addr = SocketAddr::new(host, port);
            writeln!(out, "listening on {addr}, store {}", store.display())?;
            out.flush()?;
            tokio::runtime::Runtime::new()?.block_on(serve(svc, addr))?;
        }
    }
    Ok(())
}

fn mpg(op: MpgOp, out: &mut dyn Write) -> Result<()> {
    let emb = match op {
        MpgOp::Gen { n, policy: p } => recursive_mpg(n, &policy(&p)?)?,
        MpgOp::Flip { embedding, edge } => flip_edge(&parse_embedding(&read(&embedding)?)?, Edge::new(edge.0, edge.1))?,
        MpgOp::Split(VertexOp { embedding, vertex, j }) => {
            split_vertex(&parse_embedding(&read(&embedding)?)?, vertex, j)?
        }
        MpgOp::Offspring(VertexOp { embedding, vertex, j }) => {
            offspring_vertex(&parse_embedding(&read(&embedding)?)?, vertex, j)?
        }
        MpgOp::Paste { g, h, edge_g, edge_h } => {
            single_edge_paste(&parse_embedding(&read(&g)?)?, edge_g, &parse_embedding(&read(&h)?)?, edge_h)?
        }
        MpgOp::Identify { tl, tr, tb } => {
            let [a, b, c] = [tl, tr, tb].map(|p| read(&p).and_then(|t| parse_piece(&t)));
            let piece = edge_identify(&a?, &b?, &c?)?;
            write!(out, "{}", piece_text(&piece))?;
            return Ok(());
        }
    };
    write!(out, "{}", to_embedding_text(&emb))?;
    Ok(())
}

fn space(op: SpaceOp, out: &mut dyn Write) -> Result<()> {
    match op {
        SpaceOp::Trees { p, list } => {
            let mut n = 0usize;
            for t in enumerate_trees(p)? {
                if list {
                    if n > 0 {
                        writeln!(out, "---")?;
                    }
                    write!(out, "{}", to_graph_text(&TopsnutGpw::unlabelled(t)))?;
                }
                n += 1;
            }
            if list {
                writeln!(out, "# {n} trees")?;
            } else {
                writeln!(out, "{n}")?;
            }
        }
        SpaceOp::Rooted { p } => writeln!(out, "{}", count_rooted_trees(p))?,
        SpaceOp::Lookup { kind, p } => writeln!(out, "{}", lookup_counts(p, kind)?)?,
        SpaceOp::Sheppard { q } => writeln!(out, "{}", sheppard_count(q))?,
        SpaceOp::Mgraph(b) => writeln!(out, "{}", gpw_count_graph(b.p, b.q, &b.params()?)?)?,
        SpaceOp::Mclass { bracket: b, n_pq } => {
            let n_pq = match n_pq {
                Some(s) => parse_count(&s)?,
                None => {
                    let p = usize::try_from(b.p)?;
                    if (1..=TREE_CAP).contains(&p) {
                        enumerate_trees(p)?.count().into()
                    } else {
                        lookup_counts(p, CountKind::Trees)?
                    }
                }
            };
            writeln!(out, "{}", gpw_count_class(b.p, b.q, &n_pq, &b.params()?)?)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> String {
        let mut out = Vec::new();
        run(std::iter::once("topsnut").chain(args.iter().copied()), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn space_commands() {
        assert_eq!(run_str(&["space", "trees", "--p", "10"]), "106\n");
        assert_eq!(run_str(&["space", "lookup", "--kind", "graphs", "--p", "6"]), "156\n");
        assert_eq!(
            run_str(&["space", "mclass", "--p", "10", "--q", "9", "--n-l", "10!", "--exp", "18"]),
            "100834423603200\n~2^46.51898157\n"
        );
    }

    #[test]
    fn pair_and_piece_formats() {
        let pair = parse_pair_text("2 1\n0 1\n0 0\n1 1\n---\n2 1\n0 1\n0 1\n1 2\nrule: twin-odd-graceful\n").unwrap();
        assert!(authenticate(&pair).unwrap());
        assert!(parse_pair_text("2 1\n0 1\n").is_err());
        let g = Graph::path(2);
        let c = parse_coloring("0 1\n1 2\n", &g, 4).unwrap();
        assert_eq!(coloring_text(&c), "0 1\n1 2\n");
        assert!(parse_coloring("0 1\n", &g, 4).is_err());
    }

    #[test]
    fn mpg_gen_round_trips() {
        let text = run_str(&["mpg", "gen", "--n", "3"]);
        let emb = parse_embedding(&text).unwrap();
        assert_eq!((emb.order(), emb.size()), (6, 12));
    }
}
