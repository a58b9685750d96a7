//! Explicit paths in the Seifert Surgery Network and subgraph export.
//!
//! Path builders return the move-by-move route between a family vertex and a
//! torus-knot (or unknot) surgery. EMI and EMII paths start at the family
//! vertex and end on the torus/unknot side; EMIII paths run the other way,
//! from the torus/unknot anchor through Hopf-pair twists to the family
//! vertex, because that is the direction in which the slope bookkeeping is
//! determined. Every intermediate vertex on EMI/EMII paths is re-derived
//! from the closed-form constructors rather than accumulated.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{
    em1_vertex, em2_vertex, em3_trivializable, Em3Case, KnotId, Slope, SurgeryVertex,
};
use crate::rational::ExtendedRational;
use crate::twist::{decompose, HopfComponent, HopfPairState, TwistStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeiferterName {
    CA,
    CB,
    Meridian,
}

impl fmt::Display for SeiferterName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeiferterName::CA => write!(f, "c_a"),
            SeiferterName::CB => write!(f, "c_b"),
            SeiferterName::Meridian => write!(f, "meridian"),
        }
    }
}

/// One network edge: a twist along a seiferter, along the annular pair
/// `(c_c, c_d)`, or along one component of a Hopf pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistMove {
    Seiferter { name: SeiferterName, count: BigInt },
    AnnularPair { count: BigInt },
    HopfPair { component: HopfComponent, count: BigInt },
}

impl TwistMove {
    pub fn count(&self) -> &BigInt {
        match self {
            TwistMove::Seiferter { count, .. }
            | TwistMove::AnnularPair { count }
            | TwistMove::HopfPair { count, .. } => count,
        }
    }
}

impl fmt::Display for TwistMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistMove::Seiferter { name, count } => write!(f, "{name}({count:+})"),
            TwistMove::AnnularPair { count } => write!(f, "(c_c,c_d)({count:+})"),
            TwistMove::HopfPair { component, count } => {
                write!(f, "hopf_{component}({count:+})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub mov: TwistMove,
    pub vertex: SurgeryVertex,
}

/// A path in the network: a start vertex and the moves with the vertex
/// reached after each move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkPath {
    pub start: SurgeryVertex,
    pub steps: Vec<PathStep>,
}

impl NetworkPath {
    pub fn end(&self) -> &SurgeryVertex {
        self.steps.last().map(|s| &s.vertex).unwrap_or(&self.start)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "start": self.start.to_json(),
            "moves": self
                .steps
                .iter()
                .map(|s| json!({"move": s.mov.to_string(), "to": s.vertex.to_json()}))
                .collect::<Vec<_>>(),
            "end": self.end().id(),
        })
    }
}

impl fmt::Display for NetworkPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start.id())?;
        for s in &self.steps {
            write!(f, " --{}--> {}", s.mov, s.vertex.id())?;
        }
        Ok(())
    }
}

/// Path from `(K(l,n,p), γ)` (or `γ-1`) to `(O, 0)` (or `(O, -1)`): an
/// `n`-twist along `c_a` (or `p`-twist along `c_b`) into the hub
/// `(K(l,0,0), ·)`, then a `(-l)`-twist along the annular pair `(c_c, c_d)`.
pub fn em1_path(l: i64, n: i64, p: i64, minus_one: bool) -> Result<NetworkPath> {
    let start = em1_vertex(l, n, p, minus_one)?.vertex;
    let mut steps = Vec::new();
    if n != 0 {
        steps.push(PathStep {
            mov: TwistMove::Seiferter { name: SeiferterName::CA, count: n.into() },
            vertex: em1_vertex(l, 0, 0, minus_one)?.vertex,
        });
    } else if p != 0 {
        steps.push(PathStep {
            mov: TwistMove::Seiferter { name: SeiferterName::CB, count: p.into() },
            vertex: em1_vertex(l, 0, 0, minus_one)?.vertex,
        });
    }
    if l != 0 {
        steps.push(PathStep {
            mov: TwistMove::AnnularPair { count: BigInt::from(-l) },
            vertex: em1_vertex(0, 0, 0, minus_one)?.vertex,
        });
    }
    Ok(NetworkPath { start, steps })
}

/// Path from `(K(l,m,n,p), γ)` (or `γ-1`) to `(T(l,1-l), l(1-l))` (or the
/// slope-1 variant): a first seiferter twist into `(K(l,m,0,0), ·)`, then
/// `m-1` stairs `(c_b, -1)` / `(c_a, +1)` descending in `m`; each stair
/// passes through `K(l,m,0,1) = K(l,m-1,1,0)`. Requires `m >= 1`.
pub fn em2_path(l: i64, m: i64, n: i64, p: i64, minus_one: bool) -> Result<NetworkPath> {
    if m < 1 {
        return Err(Error::StairRange(m));
    }
    let start = em2_vertex(l, m, n, p, minus_one)?.vertex;
    let mut steps = Vec::new();
    if n != 0 {
        steps.push(PathStep {
            mov: TwistMove::Seiferter { name: SeiferterName::CA, count: n.into() },
            vertex: em2_vertex(l, m, 0, 0, minus_one)?.vertex,
        });
    } else if p != 0 {
        steps.push(PathStep {
            mov: TwistMove::Seiferter { name: SeiferterName::CB, count: p.into() },
            vertex: em2_vertex(l, m, 0, 0, minus_one)?.vertex,
        });
    }
    for j in (2..=m).rev() {
        steps.push(PathStep {
            mov: TwistMove::Seiferter { name: SeiferterName::CB, count: (-1).into() },
            vertex: em2_vertex(l, j, 0, 1, minus_one)?.vertex,
        });
        steps.push(PathStep {
            mov: TwistMove::Seiferter { name: SeiferterName::CA, count: 1.into() },
            vertex: em2_vertex(l, j - 1, 0, 0, minus_one)?.vertex,
        });
    }
    Ok(NetworkPath { start, steps })
}

/// Anchor of an EMIII surgery in the network: the torus/unknot vertex the
/// path grows from, and the pair of surgeries remaining on the Hopf pair.
///
/// Case (i) (`a3 = 1/n`): anchor `(T(n,1-n), n(1-n)-1)`, remaining pair
/// `(-α1/(β1+(n-1)α1) - 1, -α2/β2 - 1)` on the components `(a, b)`.
/// Case (ii) (`a1 = 1/p`, possibly after interchanging `a1`, `a2`): anchor
/// `(O, p-1)`, remaining pair `(-α2/β2, β3/α3 + p)` on `(b, c)`.
/// The trivializing identity forces the pair determinant to be ±1.
pub fn em3_anchor(
    a1: &ExtendedRational,
    a2: &ExtendedRational,
    a3: &ExtendedRational,
) -> Result<(SurgeryVertex, HopfPairState)> {
    let case = em3_trivializable(a1, a2, a3)?.ok_or(Error::NoTrivializingCase)?;
    let (start, pair) = match &case {
        Em3Case::CaseI { n } => {
            let start = SurgeryVertex::new(
                KnotId::Torus { p: n.clone(), q: BigInt::one() - n },
                Slope::Rational(ExtendedRational::from(n * (BigInt::one() - n) - 1)),
            );
            let first = ExtendedRational::new(
                -(a1.denom() + n * a1.numer()),
                a1.denom() + (n - 1) * a1.numer(),
            )?;
            let second = ExtendedRational::new(
                -(a2.numer() + a2.denom()),
                a2.denom().clone(),
            )?;
            (start, HopfPairState::new(first, second))
        }
        Em3Case::CaseII { p, swapped } => {
            let other = if *swapped { a1 } else { a2 };
            let start = SurgeryVertex::new(
                KnotId::Unknot,
                Slope::Rational(ExtendedRational::from(p - 1)),
            );
            let pair = HopfPairState::new(other.neg(), a3.recip().plus_int(p.clone()));
            (start, pair)
        }
    };
    let det = pair.determinant();
    if !det.abs().is_one() {
        // unreachable when em3_trivializable holds; kept as a hard check
        return Err(Error::NonUnimodularPair(det.to_string()));
    }
    Ok((start, pair))
}

/// Path from the torus/unknot anchor of an EMIII surgery to the family
/// vertex, through alternate Hopf-pair twists. Interior vertices carry only
/// the evolving pair; the terminal vertex is the EMIII surgery with its
/// symbolic slope.
pub fn em3_path(
    a1: &ExtendedRational,
    a2: &ExtendedRational,
    a3: &ExtendedRational,
) -> Result<NetworkPath> {
    let (start, pair) = em3_anchor(a1, a2, a3)?;
    let seq = decompose(&pair)?;
    let terminal = SurgeryVertex::new(
        KnotId::Em3 { a1: a1.clone(), a2: a2.clone(), a3: a3.clone() },
        Slope::Gamma,
    );
    let mut steps = Vec::new();
    let mut st = pair;
    let total = seq.len();
    for (i, TwistStep { component, count }) in seq.steps().iter().cloned().enumerate() {
        st = match component {
            HopfComponent::A => crate::twist::hopf_twist_a(&st, count.clone()),
            HopfComponent::B => crate::twist::hopf_twist_b(&st, count.clone()),
        };
        let vertex = if i + 1 == total {
            terminal.clone()
        } else {
            SurgeryVertex::new(
                KnotId::HopfIntermediate { a: st.a_coeff.clone(), b: st.b_coeff.clone() },
                Slope::Unlabeled,
            )
        };
        steps.push(PathStep { mov: TwistMove::HopfPair { component, count }, vertex });
    }
    Ok(NetworkPath { start, steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Em1,
    Em2,
}

/// Inclusive integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: i64,
    pub hi: i64,
}

impl ParamRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Parameter grid for a network subgraph. `m` is EMII-only.
#[derive(Debug, Clone)]
pub struct GraphSpec {
    pub family: GraphFamily,
    pub l: ParamRange,
    pub m: ParamRange,
    pub n: ParamRange,
    pub p: ParamRange,
    /// Include the slope-1 vertex family as well (adds meridian edges where
    /// both unknot vertices are present).
    pub minus_one: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub mov: TwistMove,
}

/// A subgraph of the network with deterministic node and edge order.
#[derive(Debug, Clone)]
pub struct NetworkGraph {
    nodes: Vec<SurgeryVertex>,
    edges: Vec<GraphEdge>,
}

impl NetworkGraph {
    pub fn nodes(&self) -> &[SurgeryVertex] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph seifert_surgery_network {\n");
        for v in &self.nodes {
            out.push_str(&format!("    \"{}\";\n", v.id()));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "    \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.nodes[e.from].id(),
                self.nodes[e.to].id(),
                e.mov
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes.iter().map(SurgeryVertex::to_json).collect::<Vec<_>>(),
            "edges": self
                .edges
                .iter()
                .map(|e| json!({
                    "from": self.nodes[e.from].id(),
                    "to": self.nodes[e.to].id(),
                    "move": e.mov.to_string(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

/// Sort key: family parameters, then the slope variant.
type NodeKey = (i64, i64, i64, i64, u8);

struct GraphBuilder {
    index: BTreeMap<NodeKey, (usize, SurgeryVertex)>,
    next: usize,
}

impl GraphBuilder {
    fn new() -> Self {
        Self { index: BTreeMap::new(), next: 0 }
    }

    fn add(&mut self, key: NodeKey, vertex: SurgeryVertex) -> usize {
        let next = &mut self.next;
        self.index
            .entry(key)
            .or_insert_with(|| {
                let id = *next;
                *next += 1;
                (id, vertex)
            })
            .0
    }

    fn get(&self, key: &NodeKey) -> Option<usize> {
        self.index.get(key).map(|(i, _)| *i)
    }

    /// Nodes in key order, with edge endpoints remapped accordingly.
    fn finish(self, edges: Vec<GraphEdge>) -> NetworkGraph {
        let mut remap = vec![0usize; self.index.len()];
        let mut nodes = Vec::with_capacity(self.index.len());
        for (sorted_pos, (_, (insert_id, vertex))) in self.index.into_iter().enumerate() {
            remap[insert_id] = sorted_pos;
            nodes.push(vertex);
        }
        let mut edges: Vec<GraphEdge> = edges
            .into_iter()
            .map(|e| GraphEdge { from: remap[e.from], to: remap[e.to], mov: e.mov })
            .collect();
        edges.sort_by(|a, b| (a.from, a.to).cmp(&(b.from, b.to)));
        NetworkGraph { nodes, edges }
    }
}

/// Builds the lattice subgraph spanned by the parameter ranges: vertices for
/// every in-range tuple with `n·p = 0`, single-twist `c_a`/`c_b` edges
/// between lattice neighbours, and for EMI the single annular twist from
/// each hub `(K(±1,0,0), ·)` to the unknot vertex it reaches (added even
/// when `l = 0` is outside the range). Meridian edges join `(O, m)` and
/// `(O, m-1)` when both are present.
pub fn build_graph(spec: &GraphSpec) -> Result<NetworkGraph> {
    let need_m = matches!(spec.family, GraphFamily::Em2);
    if spec.l.is_empty() || spec.n.is_empty() || spec.p.is_empty() || (need_m && spec.m.is_empty())
    {
        return Err(Error::EmptyRange);
    }
    let variants: &[bool] = if spec.minus_one { &[false, true] } else { &[false] };
    let mut builder = GraphBuilder::new();
    let mut edges = Vec::new();

    match spec.family {
        GraphFamily::Em1 => {
            let vertex = |l: i64, n: i64, p: i64, mo: bool| em1_vertex(l, n, p, mo);
            for &mo in variants {
                let var = mo as u8;
                // lattice nodes
                for l in spec.l.iter() {
                    for n in spec.n.iter() {
                        for p in spec.p.iter() {
                            if n != 0 && p != 0 {
                                continue;
                            }
                            builder.add((l, n, p, 0, var), vertex(l, n, p, mo)?.vertex);
                        }
                    }
                }
                // c_a edges: (l, n, 0) -> (l, n-1, 0) by a +1 twist
                for l in spec.l.iter() {
                    if spec.p.contains(0) {
                        for n in spec.n.iter() {
                            if n > spec.n.lo {
                                let from = builder.get(&(l, n, 0, 0, var)).unwrap();
                                let to = builder.get(&(l, n - 1, 0, 0, var)).unwrap();
                                edges.push(GraphEdge {
                                    from,
                                    to,
                                    mov: TwistMove::Seiferter {
                                        name: SeiferterName::CA,
                                        count: 1.into(),
                                    },
                                });
                            }
                        }
                    }
                    // c_b edges: (l, 0, p) -> (l, 0, p-1)
                    if spec.n.contains(0) {
                        for p in spec.p.iter() {
                            if p > spec.p.lo {
                                let from = builder.get(&(l, 0, p, 0, var)).unwrap();
                                let to = builder.get(&(l, 0, p - 1, 0, var)).unwrap();
                                edges.push(GraphEdge {
                                    from,
                                    to,
                                    mov: TwistMove::Seiferter {
                                        name: SeiferterName::CB,
                                        count: 1.into(),
                                    },
                                });
                            }
                        }
                    }
                }
                // annular edges along the hub line (l, 0, 0) -> (l+1, 0, 0)
                if spec.n.contains(0) && spec.p.contains(0) {
                    for l in spec.l.iter() {
                        if spec.l.contains(l + 1) {
                            let from = builder.get(&(l, 0, 0, 0, var)).unwrap();
                            let to = builder.get(&(l + 1, 0, 0, 0, var)).unwrap();
                            edges.push(GraphEdge {
                                from,
                                to,
                                mov: TwistMove::AnnularPair { count: 1.into() },
                            });
                        }
                    }
                    // hubs at l = ±1 reach the unknot by a single twist even
                    // when l = 0 is outside the range
                    for l in [-1i64, 1] {
                        if spec.l.contains(l) && !spec.l.contains(0) {
                            let from = builder.get(&(l, 0, 0, 0, var)).unwrap();
                            let to = builder.add((0, 0, 0, 0, var), vertex(0, 0, 0, mo)?.vertex);
                            edges.push(GraphEdge {
                                from,
                                to,
                                mov: TwistMove::AnnularPair { count: (-l).into() },
                            });
                        }
                    }
                }
            }
            // meridian edge (O, -1) -> (O, 0) when both unknot vertices exist
            if let (Some(from), Some(to)) =
                (builder.get(&(0, 0, 0, 0, 1)), builder.get(&(0, 0, 0, 0, 0)))
            {
                edges.push(GraphEdge {
                    from,
                    to,
                    mov: TwistMove::Seiferter { name: SeiferterName::Meridian, count: 1.into() },
                });
            }
        }
        GraphFamily::Em2 => {
            for &mo in variants {
                let var = mo as u8;
                for l in spec.l.iter() {
                    for m in spec.m.iter() {
                        for n in spec.n.iter() {
                            for p in spec.p.iter() {
                                if n != 0 && p != 0 {
                                    continue;
                                }
                                builder.add((l, m, n, p, var), em2_vertex(l, m, n, p, mo)?.vertex);
                            }
                        }
                        if spec.p.contains(0) {
                            for n in spec.n.iter() {
                                if n > spec.n.lo {
                                    let from = builder.get(&(l, m, n, 0, var)).unwrap();
                                    let to = builder.get(&(l, m, n - 1, 0, var)).unwrap();
                                    edges.push(GraphEdge {
                                        from,
                                        to,
                                        mov: TwistMove::Seiferter {
                                            name: SeiferterName::CA,
                                            count: 1.into(),
                                        },
                                    });
                                }
                            }
                        }
                        if spec.n.contains(0) {
                            for p in spec.p.iter() {
                                if p > spec.p.lo {
                                    let from = builder.get(&(l, m, 0, p, var)).unwrap();
                                    let to = builder.get(&(l, m, 0, p - 1, var)).unwrap();
                                    edges.push(GraphEdge {
                                        from,
                                        to,
                                        mov: TwistMove::Seiferter {
                                            name: SeiferterName::CB,
                                            count: 1.into(),
                                        },
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(builder.finish(edges))
}

/// Renders the subgraph in the requested format.
pub fn export_graph(spec: &GraphSpec, format: GraphFormat) -> Result<String> {
    let graph = build_graph(spec)?;
    Ok(match format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => serde_json::to_string_pretty(&graph.to_json()).unwrap() + "\n",
    })
}
