use std::collections::BTreeMap;

use c2knot_core::render::{layout, to_svg, Style};
use c2knot_core::solver::enumerate_type_ab;
use c2knot_core::ContinuedFraction;

#[derive(Debug, Default)]
struct Parsed {
    axis_lines: usize,
    /// (centre x, centre y, over strand is `\`) → multiplicity
    crossings: BTreeMap<(i64, i64, bool), usize>,
    on_axis: usize,
    /// normalised point lists of strand lines and caps
    strands: BTreeMap<Vec<(i64, i64)>, usize>,
}

fn num(node: roxmltree::Node, attr: &str) -> i64 {
    node.attribute(attr).unwrap().parse().unwrap()
}

fn normalise(points: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    let rev: Vec<_> = points.iter().rev().copied().collect();
    points.min(rev)
}

fn parse(svg: &str) -> Parsed {
    let doc = roxmltree::Document::parse(svg).expect("well-formed XML");
    let mut out = Parsed::default();
    for node in doc.descendants().filter(|n| n.is_element()) {
        match (node.tag_name().name(), node.attribute("class")) {
            ("line", Some("axis")) => {
                assert_eq!((num(node, "y1"), num(node, "y2")), (0, 0));
                out.axis_lines += 1;
            }
            ("line", Some("strand")) => {
                let pts = vec![(num(node, "x1"), num(node, "y1")), (num(node, "x2"), num(node, "y2"))];
                *out.strands.entry(normalise(pts)).or_default() += 1;
            }
            ("path", Some("strand")) => {
                let nums: Vec<i64> = node
                    .attribute("d")
                    .unwrap()
                    .split_whitespace()
                    .filter_map(|t| t.parse().ok())
                    .collect();
                let pts = nums.chunks(2).map(|c| (c[0], c[1])).collect();
                *out.strands.entry(normalise(pts)).or_default() += 1;
            }
            ("g", Some("crossing")) => {
                let over = node
                    .children()
                    .find(|c| c.attribute("class") == Some("over"))
                    .unwrap();
                let (x1, y1, x2, y2) = (num(over, "x1"), num(over, "y1"), num(over, "x2"), num(over, "y2"));
                let backslash = (x2 - x1).signum() == (y2 - y1).signum();
                *out.crossings.entry(((x1 + x2) / 2, (y1 + y2) / 2, backslash)).or_default() += 1;
                if node.attribute("data-axis") == Some("on") {
                    out.on_axis += 1;
                }
            }
            _ => {}
        }
    }
    out
}

fn check(cf: &ContinuedFraction) {
    let lay = layout(cf).unwrap();
    let svg = to_svg(&lay, &Style::default());
    let parsed = parse(&svg);
    assert_eq!(parsed.axis_lines, 1);
    assert_eq!(parsed.crossings.values().sum::<usize>() as u64, cf.crossing_sum(), "{cf}");
    assert_eq!(parsed.on_axis as u64, lay.on_axis_crossings(), "{cf}");
    let mirrored: BTreeMap<_, _> = parsed
        .crossings
        .iter()
        .map(|(&(x, y, b), &n)| ((x, -y, b), n))
        .collect();
    assert_eq!(mirrored, parsed.crossings, "{cf}");
    let mirrored: BTreeMap<_, _> = parsed
        .strands
        .iter()
        .map(|(pts, &n)| (normalise(pts.iter().map(|&(x, y)| (x, -y)).collect()), n))
        .collect();
    assert_eq!(mirrored, parsed.strands, "{cf}");
}

#[test]
fn all_small_expansions_draw_symmetrically() {
    for t in 1..=8 {
        for cf in enumerate_type_ab(t) {
            check(&cf);
        }
    }
}

#[test]
fn on_axis_counts() {
    let cf = |v: &[i64]| ContinuedFraction::from_slice(v).unwrap();
    let a = cf(&[3, -4, 1, 2, -5, 2]);
    assert_eq!(parse(&to_svg(&layout(&a).unwrap(), &Style::default())).on_axis, 9);
    let b = cf(&[2, -1, 5, -1, 2]);
    assert_eq!(parse(&to_svg(&layout(&b).unwrap(), &Style::default())).on_axis, 5);
}
