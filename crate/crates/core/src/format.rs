//! The line-oriented `tis 1` instance file format.
//!
//! ```text
//! tis 1
//! mode model
//! n 2
//! tau 1
//! delta 1
//! k 1
//! unit true
//! vertex a
//! vertex b 3/2
//! layer 1
//! interval a 0 1
//! interval b 1 2
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::StaticGraph;
use crate::instance::{Interval, IntervalModel, Layer, Mode, TemporalIntervalInstance, Vertex};
use crate::rational::Rational;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let content = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            column: content[..s].chars().count() + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

enum RawLayer {
    Intervals(Vec<(usize, usize, String, Rational, Rational)>),
    Edges(Vec<(usize, usize, String, String)>),
}

/// Parses and fully validates an instance file.
pub fn parse_instance(text: &str) -> Result<TemporalIntervalInstance> {
    let mut saw_magic = false;
    let mut header: BTreeMap<&'static str, (usize, usize, String)> = BTreeMap::new();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut layers: BTreeMap<usize, RawLayer> = BTreeMap::new();
    let mut current: Option<usize> = None;
    let mut mode: Option<Mode> = None;

    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let tokens = tokenize(line);
        let Some(first) = tokens.first() else { continue };
        let arity = |want: usize| -> Result<()> {
            if tokens.len() != want {
                let col = tokens.get(want).map_or(first.column, |t| t.column);
                return Err(syntax(
                    lineno,
                    col,
                    format!("`{}` expects {} argument(s)", first.text, want - 1),
                ));
            }
            Ok(())
        };
        if !saw_magic {
            if first.text != "tis" || tokens.len() != 2 || tokens[1].text != "1" {
                return Err(syntax(lineno, first.column, "expected header `tis 1`"));
            }
            saw_magic = true;
            continue;
        }
        match first.text {
            key @ ("mode" | "n" | "tau" | "delta" | "k" | "unit") => {
                arity(2)?;
                if !vertices.is_empty() || !layers.is_empty() {
                    return Err(syntax(lineno, first.column, format!("`{key}` must precede vertices and layers")));
                }
                let key: &'static str = match key {
                    "mode" => "mode",
                    "n" => "n",
                    "tau" => "tau",
                    "delta" => "delta",
                    "k" => "k",
                    _ => "unit",
                };
                let value = tokens[1].text.to_string();
                if key == "mode" {
                    mode = Some(match value.as_str() {
                        "model" => Mode::Model,
                        "edges" => Mode::Edges,
                        _ => return Err(syntax(lineno, tokens[1].column, "mode must be `model` or `edges`")),
                    });
                }
                if header.insert(key, (lineno, tokens[1].column, value)).is_some() {
                    return Err(syntax(lineno, first.column, format!("duplicate `{key}` line")));
                }
            }
            "vertex" => {
                if tokens.len() != 2 && tokens.len() != 3 {
                    return Err(syntax(lineno, first.column, "`vertex` expects a name and an optional weight"));
                }
                if !layers.is_empty() {
                    return Err(syntax(lineno, first.column, "vertices must precede layers"));
                }
                let weight = match tokens.get(2) {
                    Some(tok) => {
                        let w: Rational = tok
                            .text
                            .parse()
                            .map_err(|e: crate::rational::ParseRationalError| syntax(lineno, tok.column, e.to_string()))?;
                        if w.is_negative() {
                            return Err(syntax(lineno, tok.column, "weights must be nonnegative"));
                        }
                        w
                    }
                    None => Rational::ONE,
                };
                let name = tokens[1].text;
                if vertices.iter().any(|v| v.name == name) {
                    return Err(Error::DuplicateVertex(name.to_string()));
                }
                vertices.push(Vertex::weighted(name, weight));
            }
            "layer" => {
                arity(2)?;
                let t: usize = tokens[1]
                    .text
                    .parse()
                    .map_err(|_| syntax(lineno, tokens[1].column, "layer index must be a positive integer"))?;
                if t == 0 {
                    return Err(syntax(lineno, tokens[1].column, "layer indices start at 1"));
                }
                let raw = match mode {
                    Some(Mode::Model) => RawLayer::Intervals(Vec::new()),
                    Some(Mode::Edges) => RawLayer::Edges(Vec::new()),
                    None => return Err(syntax(lineno, first.column, "`mode` must be declared before layers")),
                };
                if layers.insert(t, raw).is_some() {
                    return Err(syntax(lineno, tokens[1].column, format!("layer {t} declared twice")));
                }
                current = Some(t);
            }
            "interval" => {
                arity(4)?;
                let Some(t) = current else {
                    return Err(syntax(lineno, first.column, "`interval` outside of a layer"));
                };
                let Some(RawLayer::Intervals(list)) = layers.get_mut(&t) else {
                    return Err(syntax(lineno, first.column, "`interval` lines require `mode model`"));
                };
                let parse = |tok: &Token<'_>| -> Result<Rational> {
                    tok.text
                        .parse()
                        .map_err(|e: crate::rational::ParseRationalError| syntax(lineno, tok.column, e.to_string()))
                };
                let left = parse(&tokens[2])?;
                let right = parse(&tokens[3])?;
                if left > right {
                    return Err(syntax(lineno, tokens[2].column, "left endpoint exceeds right endpoint"));
                }
                list.push((lineno, tokens[1].column, tokens[1].text.to_string(), left, right));
            }
            "edge" => {
                arity(3)?;
                let Some(t) = current else {
                    return Err(syntax(lineno, first.column, "`edge` outside of a layer"));
                };
                let Some(RawLayer::Edges(list)) = layers.get_mut(&t) else {
                    return Err(syntax(lineno, first.column, "`edge` lines require `mode edges`"));
                };
                if tokens[1].text == tokens[2].text {
                    return Err(syntax(lineno, tokens[2].column, "self-loops are not allowed"));
                }
                list.push((lineno, tokens[1].column, tokens[1].text.to_string(), tokens[2].text.to_string()));
            }
            other => {
                return Err(syntax(lineno, first.column, format!("unknown directive `{other}`")));
            }
        }
    }

    if !saw_magic {
        return Err(syntax(1, 1, "expected header `tis 1`"));
    }
    let required = |key: &'static str| -> Result<&(usize, usize, String)> {
        header
            .get(key)
            .ok_or_else(|| syntax(1, 1, format!("missing `{key}` line")))
    };
    let int = |key: &'static str| -> Result<usize> {
        let (line, col, value) = required(key)?;
        value
            .parse()
            .map_err(|_| syntax(*line, *col, format!("`{key}` must be a nonnegative integer")))
    };
    let mode = mode.ok_or_else(|| syntax(1, 1, "missing `mode` line"))?;
    let n = int("n")?;
    let tau = int("tau")?;
    let delta = int("delta")?;
    let k = int("k")?;
    let unit = match header.get("unit") {
        Some((line, col, v)) => match v.as_str() {
            "true" => true,
            "false" => false,
            _ => return Err(syntax(*line, *col, "`unit` must be `true` or `false`")),
        },
        None => mode == Mode::Model,
    };
    if tau == 0 {
        let (line, col, _) = required("tau")?;
        return Err(syntax(*line, *col, "tau must be positive"));
    }
    if vertices.len() != n {
        let (line, col, _) = required("n")?;
        return Err(syntax(*line, *col, format!("declared n = {n} but found {} vertices", vertices.len())));
    }
    if layers.len() != tau || layers.keys().any(|&t| t > tau) {
        return Err(Error::LayerCount {
            expected: tau,
            found: layers.len(),
        });
    }
    if delta == 0 || delta > tau {
        return Err(Error::DeltaOutOfRange { delta, tau });
    }

    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.name.as_str(), i)).collect();
    let lookup = |line: usize, col: usize, name: &str| -> Result<usize> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| syntax(line, col, format!("unknown vertex `{name}`")))
    };

    let mut built = Vec::with_capacity(tau);
    for (t, raw) in layers {
        match raw {
            RawLayer::Intervals(list) => {
                let mut slots: Vec<Option<Interval>> = vec![None; n];
                for (line, col, name, left, right) in list {
                    let v = lookup(line, col, &name)?;
                    if slots[v].replace(Interval::new(left, right)).is_some() {
                        return Err(syntax(line, col, format!("second interval for `{name}` in layer {t}")));
                    }
                }
                if let Some(v) = slots.iter().position(Option::is_none) {
                    return Err(syntax(1, 1, format!("layer {t} has no interval for `{}`", vertices[v].name)));
                }
                let model = IntervalModel::new(slots.into_iter().map(Option::unwrap).collect())?;
                built.push(Layer::Model(model));
            }
            RawLayer::Edges(list) => {
                let mut g = StaticGraph::empty(n);
                for (line, col, a, b) in list {
                    let u = lookup(line, col, &a)?;
                    let v = lookup(line, col, &b)?;
                    if g.has_edge(u, v) {
                        return Err(syntax(line, col, format!("duplicate edge `{a} {b}` in layer {t}")));
                    }
                    g.add_edge(u, v);
                }
                built.push(Layer::Edges(g));
            }
        }
    }
    TemporalIntervalInstance::new(vertices, delta, k, built, unit)
}

/// Canonical serialization: vertices in declaration order, layers
/// ascending, interval and edge lines sorted lexicographically by name.
pub fn serialize_instance(inst: &TemporalIntervalInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tis 1");
    let _ = writeln!(out, "mode {}", inst.mode().as_str());
    let _ = writeln!(out, "n {}", inst.n());
    let _ = writeln!(out, "tau {}", inst.tau());
    let _ = writeln!(out, "delta {}", inst.delta());
    let _ = writeln!(out, "k {}", inst.k());
    let _ = writeln!(out, "unit {}", inst.is_unit());
    for v in inst.vertices() {
        if v.weight == Rational::ONE {
            let _ = writeln!(out, "vertex {}", v.name);
        } else {
            let _ = writeln!(out, "vertex {} {}", v.name, v.weight);
        }
    }
    for (t, layer) in inst.layers().iter().enumerate() {
        let _ = writeln!(out, "layer {}", t + 1);
        match layer {
            Layer::Model(m) => {
                let mut lines: Vec<(&str, Interval)> = m
                    .intervals()
                    .iter()
                    .enumerate()
                    .map(|(v, iv)| (inst.name(v), *iv))
                    .collect();
                lines.sort_by(|a, b| a.0.cmp(b.0));
                for (name, iv) in lines {
                    let _ = writeln!(out, "interval {} {} {}", name, iv.left, iv.right);
                }
            }
            Layer::Edges(g) => {
                for (a, b) in sorted_named_edges(inst, g) {
                    let _ = writeln!(out, "edge {a} {b}");
                }
            }
        }
    }
    out
}

/// Edges as name pairs, each pair ordered, the list sorted.
pub fn sorted_named_edges<'a>(inst: &'a TemporalIntervalInstance, g: &StaticGraph) -> Vec<(&'a str, &'a str)> {
    let mut edges: Vec<(&str, &str)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (inst.name(u), inst.name(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();
    edges
}
