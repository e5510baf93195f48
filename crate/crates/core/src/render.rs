//! SVG drawings of the symmetric diagrams of Type A and Type B expansions.
//!
//! Both shapes are drawn as 4-plats: four parallel tracks, twist regions
//! between adjacent tracks, and caps closing the ends. Odd positions twist the
//! middle pair of tracks, even positions an outer pair. The symmetry axis is
//! always the horizontal line `y = 0`:
//!
//! - Type A runs left to right with the axis between the middle tracks. Odd
//!   positions sit on the axis; an even entry `a` is split into `a/2` twists
//!   on the top pair and `a/2` mirrored twists on the bottom pair.
//! - Type B runs top to bottom and the palindrome is mirrored across the
//!   axis, which cuts through the central twist region.
//!
//! # Style sheet
//!
//! Coordinates are integers in multiples of [`Style::unit`] (`u`): tracks sit
//! `2u` apart, each crossing occupies a `2u × 2u` cell, and the under strand
//! is broken by a gap of `Style::gap` on each side of the crossing point.
//! A positive twist (`sign = +`) puts the over strand on the diagonal running
//! from the lower-index track at the cell's entry side to the higher-index
//! track at its exit side (the `\` diagonal in screen coordinates). Odd
//! positions use that sign directly, even positions the opposite one, which
//! makes all-positive expansions alternating.
//!
//! A half-rotation about the axis reflects the picture (`y ↦ −y`) and swaps
//! over and under. Under that convention the drawing is invariant: every
//! crossing at `(x, y)` with a `\` over strand has a partner at `(x, −y)` with
//! a `\` over strand, and strands and caps map onto themselves.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::contfrac::{ContinuedFraction, ExpansionClass};
use crate::error::{Error, Result};

/// Where a twist box sits relative to the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    OnAxis,
    Above,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistBox {
    /// 1-based position of the entry this box comes from.
    pub position: usize,
    pub crossings: u64,
    /// `+1` or `−1`, the sign of the entry.
    pub sign: i8,
    pub placement: Placement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramLayout {
    pub cf: ContinuedFraction,
    pub class: ExpansionClass,
    pub boxes: Vec<TwistBox>,
}

impl DiagramLayout {
    pub fn on_axis_crossings(&self) -> u64 {
        self.boxes
            .iter()
            .filter(|b| b.placement == Placement::OnAxis)
            .map(|b| b.crossings)
            .sum()
    }

    pub fn total_crossings(&self) -> u64 {
        self.boxes.iter().map(|b| b.crossings).sum()
    }

    /// The combinatorial 4-plat behind the drawing.
    pub fn plat(&self) -> Plat {
        let entries = self.cf.entries();
        let n = entries.len();
        let mut columns = Vec::new();
        for (i, &a) in entries.iter().enumerate() {
            let odd_position = i % 2 == 0;
            let positive = (a > 0) == odd_position;
            let count = a.unsigned_abs();
            match (self.class, odd_position) {
                (ExpansionClass::TypeA, false) => {
                    for _ in 0..count / 2 {
                        columns.push(vec![
                            PlatCrossing { track: 0, positive, entry: i + 1 },
                            PlatCrossing { track: 2, positive, entry: i + 1 },
                        ]);
                    }
                }
                (_, odd) => {
                    let track = if odd { 1 } else { 0 };
                    for _ in 0..count {
                        columns.push(vec![PlatCrossing { track, positive, entry: i + 1 }]);
                    }
                }
            }
        }
        let end_caps = if n.is_multiple_of(2) {
            [(1, 2), (0, 3)]
        } else {
            [(0, 1), (2, 3)]
        };
        Plat {
            columns,
            start_caps: [(0, 1), (2, 3)],
            end_caps,
        }
    }
}

/// Lays out the symmetric diagram of a Type A or Type B expansion.
pub fn layout(cf: &ContinuedFraction) -> Result<DiagramLayout> {
    let entries = cf.entries();
    let n = entries.len();
    let class = cf.classify();
    let reject = |reason| Error::NotSymmetric {
        cf: cf.to_bracket_string(),
        reason,
    };
    let sign = |a: i64| if a > 0 { 1 } else { -1 };
    let mut boxes = Vec::new();
    match class {
        ExpansionClass::TypeA => {
            for (i, &a) in entries.iter().enumerate() {
                let mut b = TwistBox {
                    position: i + 1,
                    crossings: a.unsigned_abs(),
                    sign: sign(a),
                    placement: Placement::OnAxis,
                };
                if i % 2 == 1 {
                    b.crossings /= 2;
                    boxes.push(TwistBox { placement: Placement::Above, ..b });
                    boxes.push(TwistBox { placement: Placement::Below, ..b });
                } else {
                    boxes.push(b);
                }
            }
        }
        ExpansionClass::TypeB => {
            let centre = n / 2;
            for (i, &a) in entries.iter().enumerate() {
                boxes.push(TwistBox {
                    position: i + 1,
                    crossings: a.unsigned_abs(),
                    sign: sign(a),
                    placement: match i.cmp(&centre) {
                        core::cmp::Ordering::Less => Placement::Above,
                        core::cmp::Ordering::Equal => Placement::OnAxis,
                        core::cmp::Ordering::Greater => Placement::Below,
                    },
                });
            }
        }
        ExpansionClass::Neither => {
            return Err(reject(if n.is_multiple_of(2) {
                "even length but an even-position entry is odd"
            } else if !entries.iter().eq(entries.iter().rev()) {
                "odd length but not a signed palindrome"
            } else {
                "palindrome with an even central entry"
            }));
        }
    }
    Ok(DiagramLayout {
        cf: cf.clone(),
        class,
        boxes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlatCrossing {
    /// The crossing twists tracks `track` and `track + 1`.
    pub track: usize,
    /// Over strand runs from `track` to `track + 1`.
    pub positive: bool,
    /// 1-based entry position it belongs to.
    pub entry: usize,
}

/// A 4-plat: columns of crossings on disjoint track pairs, closed by caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plat {
    pub columns: Vec<Vec<PlatCrossing>>,
    pub start_caps: [(usize, usize); 2],
    pub end_caps: [(usize, usize); 2],
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Over arc and the two under arcs meeting at one crossing.
type ArcTriple = (usize, usize, usize);

impl Plat {
    pub fn crossing_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Traces the diagram: returns the number of link components, the number
    /// of arcs, and one arc triple per crossing.
    fn trace(&self) -> (usize, usize, Vec<ArcTriple>) {
        let mut arcs = UnionFind(Vec::new());
        let mut comps = UnionFind(Vec::new());
        let fresh = |arcs: &mut UnionFind, comps: &mut UnionFind| {
            comps.add();
            arcs.add()
        };
        let mut slots = [0usize; 4];
        for (a, b) in self.start_caps {
            let id = fresh(&mut arcs, &mut comps);
            slots[a] = id;
            slots[b] = id;
        }
        let mut raw = Vec::new();
        for column in &self.columns {
            for x in column {
                let (top, bottom) = (slots[x.track], slots[x.track + 1]);
                let out = fresh(&mut arcs, &mut comps);
                if x.positive {
                    // top strand passes over to track + 1; bottom is cut
                    slots[x.track + 1] = top;
                    slots[x.track] = out;
                    comps.union(bottom, out);
                    raw.push((top, bottom, out));
                } else {
                    slots[x.track] = bottom;
                    slots[x.track + 1] = out;
                    comps.union(top, out);
                    raw.push((bottom, top, out));
                }
            }
        }
        for (a, b) in self.end_caps {
            arcs.union(slots[a], slots[b]);
            comps.union(slots[a], slots[b]);
        }
        let ids = arcs.0.len();
        let mut comp_roots: Vec<usize> = (0..ids).map(|i| comps.find(i)).collect();
        comp_roots.sort_unstable();
        comp_roots.dedup();
        let mut index = vec![usize::MAX; ids];
        let mut n_arcs = 0;
        for i in 0..ids {
            let r = arcs.find(i);
            if index[r] == usize::MAX {
                index[r] = n_arcs;
                n_arcs += 1;
            }
        }
        let triples = raw
            .into_iter()
            .map(|(o, u1, u2)| {
                (index[arcs.find(o)], index[arcs.find(u1)], index[arcs.find(u2)])
            })
            .collect();
        (comp_roots.len(), n_arcs, triples)
    }

    pub fn components(&self) -> usize {
        self.trace().0
    }

    /// Knot determinant `|Δ(−1)|` from the Fox colouring matrix. `None` for
    /// links and crossingless diagrams.
    pub fn determinant(&self) -> Option<u64> {
        let (components, n_arcs, triples) = self.trace();
        let n = triples.len();
        if components != 1 || n == 0 || n_arcs != n {
            return None;
        }
        let mut m = vec![vec![0i128; n]; n];
        for (row, &(o, u1, u2)) in triples.iter().enumerate() {
            m[row][o] += 2;
            m[row][u1] -= 1;
            m[row][u2] -= 1;
        }
        // any first minor; drop row 0 and column 0
        let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
        Some(bareiss_determinant(minor).unsigned_abs() as u64)
    }
}

/// Fraction-free Gaussian elimination.
fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Drawing parameters. Output is a pure function of the layout and style.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Style {
    /// Half the track spacing, in SVG user units.
    pub unit: i64,
    /// Distance from the crossing point to each end of the under-strand gap,
    /// measured along each axis.
    pub gap: i64,
    pub margin: i64,
    pub stroke_width: u32,
    pub strand_color: String,
    pub axis_color: String,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            unit: 20,
            gap: 6,
            margin: 20,
            stroke_width: 3,
            strand_color: String::from("#000000"),
            axis_color: String::from("#d62728"),
        }
    }
}

type Point = (i64, i64);

#[derive(Default)]
struct Canvas {
    strands: Vec<String>,
    crossings: Vec<String>,
    min: Point,
    max: Point,
}

impl Canvas {
    fn extend(&mut self, (x, y): Point) {
        self.min = (self.min.0.min(x), self.min.1.min(y));
        self.max = (self.max.0.max(x), self.max.1.max(y));
    }

    fn line(&mut self, a: Point, b: Point) {
        self.extend(a);
        self.extend(b);
        self.strands.push(format!(
            r#"<line class="strand" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            a.0, a.1, b.0, b.1
        ));
    }

    fn cap(&mut self, a: Point, c1: Point, c2: Point, b: Point) {
        for p in [a, c1, c2, b] {
            self.extend(p);
        }
        self.strands.push(format!(
            r#"<path class="strand" d="M {} {} C {} {} {} {} {} {}"/>"#,
            a.0, a.1, c1.0, c1.1, c2.0, c2.1, b.0, b.1
        ));
    }

    /// `lo`/`hi` are the ends of the `\` diagonal, `lo` the upper-left one;
    /// `anti_lo`/`anti_hi` the `/` diagonal's lower-left and upper-right ends.
    fn crossing(&mut self, lo: Point, hi: Point, backslash_over: bool, gap: i64, meta: &str) {
        let centre = ((lo.0 + hi.0) / 2, (lo.1 + hi.1) / 2);
        let anti_lo = (lo.0, hi.1);
        let anti_hi = (hi.0, lo.1);
        self.extend(lo);
        self.extend(hi);
        let (over, under) = if backslash_over {
            ((lo, hi), (anti_lo, anti_hi))
        } else {
            ((anti_lo, anti_hi), (lo, hi))
        };
        let towards = |p: Point| {
            (
                centre.0 + gap * (p.0 - centre.0).signum(),
                centre.1 + gap * (p.1 - centre.1).signum(),
            )
        };
        let (u1, u2) = under;
        let mut s = format!(r#"<g class="crossing" {meta}>"#);
        let _ = write!(
            s,
            r#"<line class="over" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            over.0 .0, over.0 .1, over.1 .0, over.1 .1
        );
        for (end, near) in [(u1, towards(u1)), (u2, towards(u2))] {
            let _ = write!(
                s,
                r#"<line class="under" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                end.0, end.1, near.0, near.1
            );
        }
        s.push_str("</g>");
        self.crossings.push(s);
    }
}

fn crossing_meta(x: &PlatCrossing, on_axis: bool) -> String {
    format!(
        r#"data-entry="{}" data-sign="{}" data-axis="{}""#,
        x.entry,
        if x.positive { '+' } else { '-' },
        if on_axis { "on" } else { "off" }
    )
}

/// Renders a laid-out diagram as a standalone SVG 1.1 document.
pub fn to_svg(lay: &DiagramLayout, style: &Style) -> String {
    let plat = lay.plat();
    let u = style.unit;
    let tracks = [-3 * u, -u, u, 3 * u];
    let cols = plat.columns.len() as i64;
    let ctrl_small = 4 * u / 3;
    let ctrl_big = 4 * u;
    let centre_entry = lay.cf.len() / 2 + 1;
    let on_axis = |x: &PlatCrossing| match lay.class {
        ExpansionClass::TypeA => x.track == 1,
        _ => x.entry == centre_entry,
    };
    // Drawing coordinates in "plat space": `along` runs with the columns,
    // `across` with the tracks. Type A maps (along, across) ↦ (x, y), Type B
    // transposes so the palindrome mirrors across y = 0.
    let vertical = lay.class == ExpansionClass::TypeB;
    let start = if vertical { -cols * u } else { 0 };
    let map = |along: i64, across: i64| -> Point {
        if vertical {
            (across, along)
        } else {
            (along, across)
        }
    };
    let mut canvas = Canvas::default();

    // straight runs of idle tracks, merged across consecutive columns
    for (t, &y) in tracks.iter().enumerate() {
        let mut run: Option<i64> = None;
        for (j, column) in plat.columns.iter().enumerate() {
            let x = start + 2 * u * j as i64;
            let busy = column.iter().any(|c| c.track == t || c.track + 1 == t);
            match (busy, run) {
                (false, None) => run = Some(x),
                (true, Some(x0)) => {
                    canvas.line(map(x0, y), map(x, y));
                    run = None;
                }
                _ => {}
            }
        }
        if let Some(x0) = run {
            canvas.line(map(x0, y), map(start + 2 * u * cols, y));
        }
    }

    for (j, column) in plat.columns.iter().enumerate() {
        let x = start + 2 * u * j as i64;
        for c in column {
            let (a, b) = (map(x, tracks[c.track]), map(x + 2 * u, tracks[c.track + 1]));
            // both embeddings send the (entry, low track) corner to the upper left
            canvas.crossing(a, b, c.positive, style.gap, &crossing_meta(c, on_axis(c)));
        }
    }

    let end = start + 2 * u * cols;
    for (caps, at, dir) in [(plat.start_caps, start, -1), (plat.end_caps, end, 1)] {
        for (a, b) in caps {
            let reach = if b - a == 1 { ctrl_small } else { ctrl_big };
            let (ya, yb) = (tracks[a], tracks[b]);
            canvas.cap(
                map(at, ya),
                map(at + dir * reach, ya),
                map(at + dir * reach, yb),
                map(at, yb),
            );
        }
    }

    let m = style.margin;
    let (min, max) = (canvas.min, canvas.max);
    let half_height = (-min.1).max(max.1) + m;
    let (x0, width) = (min.0 - m, max.0 - min.0 + 2 * m);
    let height = 2 * half_height;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="yes"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="{x0} {} {width} {height}">"#,
        -half_height
    );
    let _ = writeln!(out, "<title>{} {}</title>", lay.cf, lay.class);
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{x0}" y1="0" x2="{}" y2="0" stroke="{}" stroke-width="1" stroke-dasharray="6 4"/>"#,
        x0 + width,
        style.axis_color
    );
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke="{}" stroke-width="{}" stroke-linecap="round">"#,
        style.strand_color, style.stroke_width
    );
    for s in canvas.strands.iter().chain(&canvas.crossings) {
        let _ = writeln!(out, "{s}");
    }
    out.push_str("</g>\n</svg>\n");
    out
}
