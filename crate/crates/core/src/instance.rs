//! The temporal interval instance data model.

use std::collections::HashMap;

use crate::conflict::WindowSemantics;
use crate::error::{Error, Result};
use crate::graph::StaticGraph;
use crate::interval::recognize_unit_interval;
use crate::rational::Rational;

/// A closed interval `[left, right]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub left: Rational,
    pub right: Rational,
}

impl Interval {
    pub fn new(left: Rational, right: Rational) -> Self {
        Interval { left, right }
    }

    pub fn length(&self) -> Rational {
        self.right - self.left
    }

    /// Closed intervals: touching endpoints intersect.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// One closed interval per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalModel {
    intervals: Vec<Interval>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if let Some(v) = intervals.iter().position(|iv| iv.left > iv.right) {
            return Err(Error::InvertedInterval { vertex: v });
        }
        Ok(IntervalModel { intervals })
    }

    /// Convenience constructor from `(left, right)` pairs.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        IntervalModel::new(pairs.into_iter().map(|(l, r)| Interval::new(l, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    /// The intersection graph, computed by a left-endpoint sweep.
    pub fn graph(&self) -> StaticGraph {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.intervals[a].left.cmp(&self.intervals[b].left).then(a.cmp(&b)));
        let mut g = StaticGraph::empty(n);
        for (i, &u) in order.iter().enumerate() {
            let right = self.intervals[u].right;
            for &v in &order[i + 1..] {
                if self.intervals[v].left > right {
                    break;
                }
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The common interval length, if every interval has the same length.
    pub fn unit_length(&self) -> Option<Rational> {
        let first = self.intervals.first()?.length();
        self.intervals
            .iter()
            .all(|iv| iv.length() == first)
            .then_some(first)
    }

    pub fn restrict(&self, keep: &[usize]) -> IntervalModel {
        IntervalModel {
            intervals: keep.iter().map(|&v| self.intervals[v]).collect(),
        }
    }
}

/// A layer given either geometrically or as an abstract graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Layer {
    Model(IntervalModel),
    Edges(StaticGraph),
}

impl Layer {
    pub fn graph(&self) -> StaticGraph {
        match self {
            Layer::Model(m) => m.graph(),
            Layer::Edges(g) => g.clone(),
        }
    }

    fn restrict(&self, keep: &[usize]) -> Layer {
        match self {
            Layer::Model(m) => Layer::Model(m.restrict(keep)),
            Layer::Edges(g) => Layer::Edges(g.induced(keep)),
        }
    }

    fn vertex_count(&self) -> usize {
        match self {
            Layer::Model(m) => m.len(),
            Layer::Edges(g) => g.n(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Model,
    Edges,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Model => "model",
            Mode::Edges => "edges",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: String,
    pub weight: Rational,
}

impl Vertex {
    pub fn new(name: impl Into<String>) -> Self {
        Vertex {
            name: name.into(),
            weight: Rational::ONE,
        }
    }

    pub fn weighted(name: impl Into<String>, weight: Rational) -> Self {
        Vertex {
            name: name.into(),
            weight,
        }
    }
}

/// A temporal graph with `tau` layers over a shared weighted vertex set,
/// together with the window length `delta` and the target size `k`.
///
/// Values are immutable once built; every constructor validates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalIntervalInstance {
    vertices: Vec<Vertex>,
    delta: usize,
    k: usize,
    layers: Vec<Layer>,
    mode: Mode,
    unit: bool,
    semantics: WindowSemantics,
}

impl TemporalIntervalInstance {
    /// Validates and builds an instance. `unit` declares that every layer
    /// is a unit interval layer; it is checked, never inferred.
    pub fn new(
        vertices: Vec<Vertex>,
        delta: usize,
        k: usize,
        layers: Vec<Layer>,
        unit: bool,
    ) -> Result<Self> {
        let tau = layers.len();
        if tau == 0 {
            return Err(Error::InvalidParameter("tau must be positive".into()));
        }
        if delta == 0 || delta > tau {
            return Err(Error::DeltaOutOfRange { delta, tau });
        }
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.name.is_empty() || v.name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidParameter(format!("invalid vertex name `{}`", v.name)));
            }
            if v.weight.is_negative() {
                return Err(Error::NegativeWeight(i));
            }
            if seen.insert(v.name.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(v.name.clone()));
            }
        }
        let mode = match &layers[0] {
            Layer::Model(_) => Mode::Model,
            Layer::Edges(_) => Mode::Edges,
        };
        let n = vertices.len();
        for layer in &layers {
            let same_mode = matches!(
                (mode, layer),
                (Mode::Model, Layer::Model(_)) | (Mode::Edges, Layer::Edges(_))
            );
            if !same_mode {
                return Err(Error::InvalidParameter("layers mix model and edges mode".into()));
            }
            if layer.vertex_count() != n {
                return Err(Error::VertexCountMismatch {
                    left: n,
                    right: layer.vertex_count(),
                });
            }
        }
        if unit {
            for (t, layer) in layers.iter().enumerate() {
                match layer {
                    Layer::Model(m) => {
                        if !m.is_empty() && m.unit_length().is_none() {
                            return Err(Error::UnitViolated {
                                layer: t + 1,
                                reason: "intervals have different lengths".into(),
                            });
                        }
                    }
                    Layer::Edges(g) => {
                        if let Err(failure) = recognize_unit_interval(g) {
                            return Err(Error::UnitViolated {
                                layer: t + 1,
                                reason: failure.to_string(),
                            });
                        }
                    }
                }
            }
        }
        Ok(TemporalIntervalInstance {
            vertices,
            delta,
            k,
            layers,
            mode,
            unit,
            semantics: WindowSemantics::default(),
        })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn tau(&self) -> usize {
        self.layers.len()
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v].name
    }

    pub fn weight(&self, v: usize) -> Rational {
        self.vertices[v].weight
    }

    pub fn weights(&self) -> Vec<Rational> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    pub fn total_weight(&self, set: &[usize]) -> Rational {
        set.iter().map(|&v| self.vertices[v].weight).sum()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Window semantics used when building the conflict graph. Runtime
    /// setting only; not part of the file format.
    pub fn semantics(&self) -> WindowSemantics {
        self.semantics
    }

    pub fn with_semantics(mut self, semantics: WindowSemantics) -> Self {
        self.semantics = semantics;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Resolves vertex names to sorted, deduplicated indices.
    pub fn resolve<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        let mut out = names
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn names(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&v| self.vertices[v].name.clone()).collect()
    }

    /// Layer `t` (1-based) as a static graph. In model mode two vertices are
    /// adjacent iff their closed intervals intersect.
    pub fn layer_graph(&self, t: usize) -> Result<StaticGraph> {
        if t == 0 || t > self.tau() {
            return Err(Error::LayerOutOfRange {
                index: t,
                tau: self.tau(),
            });
        }
        Ok(self.layers[t - 1].graph())
    }

    pub fn layer_graphs(&self) -> Vec<StaticGraph> {
        self.layers.iter().map(Layer::graph).collect()
    }

    /// The temporal graph induced by `V \ removed`. Indices are re-densified
    /// in the original order; names are retained.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut drop = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !drop[v]).collect();
        Ok(self.induce(&keep))
    }

    pub fn remove_named<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let idx = self.resolve(names)?;
        self.remove_vertices(&idx)
    }

    /// Sub-instance on `keep` (in the given order).
    pub fn induce(&self, keep: &[usize]) -> Self {
        TemporalIntervalInstance {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            delta: self.delta,
            k: self.k,
            layers: self.layers.iter().map(|l| l.restrict(keep)).collect(),
            mode: self.mode,
            unit: self.unit,
            semantics: self.semantics,
        }
    }
}
