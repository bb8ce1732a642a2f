//! Plain-text formats.
//!
//! A group block is `order n`, then `n` rows of the multiplication table,
//! then an optional `name <label>` line. A homomorphism is one line of
//! images. A reflexive graph (or cat¹-group) is a group block followed by
//! `s: ...` and `t: ...`. A crossed module is the block of `T`, the block of
//! `G`, a `d: ...` line for `∂`, and one line per element of `G` giving its
//! permutation of `T`. Blank lines and lines starting with `#` are ignored.
//! Writers emit the canonical form, which parses back to an identical value
//! and re-serializes byte for byte.

use std::fmt::Write as _;

use crate::action::Action;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::rgraph::ReflexiveGraph;
use crate::xmod::CrossedModule;

/// What a file turned out to contain.
#[derive(Clone, Debug)]
pub enum Document {
    Group(FiniteGroup),
    Graph(ReflexiveGraph),
    CrossedModule(CrossedModule),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Graph(_) => "reflexive_graph",
            Document::CrossedModule(_) => "crossed_module",
        }
    }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.items.last().map_or(1, |(n, _)| n + 1);
        let item = self.peek().ok_or_else(|| Error::Parse { line: last, message: format!("expected {what}") })?;
        self.pos += 1;
        Ok(item)
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some((line, l)) => Err(Error::Parse { line, message: format!("unexpected trailing line {l:?}") }),
        }
    }
}

fn parse_indices(line: usize, text: &str, expected: usize) -> Result<Vec<usize>> {
    let values = text
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line, message: format!("not an index: {t:?}") }))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != expected {
        return Err(Error::Parse { line, message: format!("expected {expected} indices, found {}", values.len()) });
    }
    Ok(values)
}

fn labelled<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    text.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(':'))
        .ok_or_else(|| Error::Parse { line, message: format!("expected a `{key}:` line") })
}

fn read_group(lines: &mut Lines) -> Result<FiniteGroup> {
    let (line, header) = lines.next("`order n`")?;
    let n = header
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse { line, message: format!("expected `order n`, found {header:?}") })?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, row) = lines.next("a table row")?;
        rows.push(parse_indices(line, row, n)?);
    }
    let mut group = FiniteGroup::new(rows)?;
    if let Some((_, l)) = lines.peek() {
        if let Some(name) = l.strip_prefix("name ") {
            lines.pos += 1;
            group = group.with_name(name.trim());
        }
    }
    Ok(group)
}

fn write_group(out: &mut String, g: &FiniteGroup) {
    let _ = writeln!(out, "order {}", g.order());
    for a in g.elements() {
        out.push_str(&join_indices(g.row(a).iter().copied()));
        out.push('\n');
    }
    if let Some(name) = g.name() {
        let _ = writeln!(out, "name {name}");
    }
}

fn join_indices(values: impl IntoIterator<Item = usize>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let mut lines = Lines::new(text);
    let g = read_group(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

pub fn write_group_string(g: &FiniteGroup) -> String {
    let mut out = String::new();
    write_group(&mut out, g);
    out
}

/// A homomorphism file: one line of `|domain|` images.
pub fn parse_hom(text: &str, domain: &FiniteGroup, codomain: &FiniteGroup) -> Result<GroupHom> {
    let mut lines = Lines::new(text);
    let (line, l) = lines.next("a line of images")?;
    let map = parse_indices(line, l, domain.order())?;
    lines.finish()?;
    GroupHom::new(domain.clone(), codomain.clone(), map)
}

pub fn write_hom_string(h: &GroupHom) -> String {
    join_indices(h.map().iter().copied()) + "\n"
}

fn read_endo_line(lines: &mut Lines, key: &str, g: &FiniteGroup) -> Result<Vec<usize>> {
    let (line, l) = lines.next(&format!("a `{key}:` line"))?;
    parse_indices(line, labelled(line, l, key)?, g.order())
}

pub fn parse_graph(text: &str) -> Result<ReflexiveGraph> {
    let mut lines = Lines::new(text);
    let g = read_group(&mut lines)?;
    let s = read_endo_line(&mut lines, "s", &g)?;
    let t = read_endo_line(&mut lines, "t", &g)?;
    lines.finish()?;
    ReflexiveGraph::from_maps(&g, s, t)
}

pub fn write_graph_string(r: &ReflexiveGraph) -> String {
    let mut out = write_group_string(r.carrier());
    let _ = writeln!(out, "s: {}", join_indices(r.s().map().iter().copied()));
    let _ = writeln!(out, "t: {}", join_indices(r.t().map().iter().copied()));
    out
}

pub fn parse_crossed_module(text: &str) -> Result<CrossedModule> {
    let mut lines = Lines::new(text);
    let top = read_group(&mut lines)?;
    let bottom = read_group(&mut lines)?;
    let (line, l) = lines.next("a `d:` line")?;
    let d = parse_indices(line, labelled(line, l, "d")?, top.order())?;
    let boundary = GroupHom::new(top.clone(), bottom.clone(), d)?;
    let mut perms = Vec::with_capacity(bottom.order());
    for _ in 0..bottom.order() {
        let (line, l) = lines.next("an action row")?;
        perms.push(parse_indices(line, l, top.order())?);
    }
    lines.finish()?;
    let action = Action::new(bottom, top, perms)?;
    CrossedModule::new(boundary, action)
}

pub fn write_crossed_module_string(m: &CrossedModule) -> String {
    let mut out = write_group_string(m.top());
    write_group(&mut out, m.bottom());
    let _ = writeln!(out, "d: {}", join_indices(m.boundary().map().iter().copied()));
    for p in m.action().perms() {
        out.push_str(&join_indices(p.iter().copied()));
        out.push('\n');
    }
    out
}

/// Parses any supported file, deciding the kind from its shape: a `d:` line
/// marks a crossed module, an `s:` line a reflexive graph.
pub fn parse_document(text: &str) -> Result<Document> {
    let has = |key: &str| text.lines().map(str::trim).any(|l| l.strip_prefix(key).is_some_and(|r| r.starts_with(':')));
    if has("d") {
        parse_crossed_module(text).map(Document::CrossedModule)
    } else if has("s") || has("t") {
        parse_graph(text).map(Document::Graph)
    } else {
        parse_group(text).map(Document::Group)
    }
}

/// File name used for a group when a catalog is exported.
pub fn catalog_file_name(index: usize, g: &FiniteGroup) -> String {
    format!("{index:03}_{}.grp", g.label().replace(|c: char| !c.is_ascii_alphanumeric(), "_"))
}

/// Reads every `*.grp` file of a directory, in file-name order.
pub fn read_catalog_dir(dir: &std::path::Path) -> Result<Vec<FiniteGroup>> {
    let io_err = |e: std::io::Error| Error::Parse { line: 0, message: format!("{}: {e}", dir.display()) };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io_err)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(io_err)?;
            parse_group(&text).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", p.display()) },
                other => other,
            })
        })
        .collect()
}
