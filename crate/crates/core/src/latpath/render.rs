//! Text and SVG pictures of a path together with its demarcation and
//! marking paths.

use std::fmt::Write as _;

use super::marking::{demarcation, marking_path};
use super::{extend_pair, statistic, LatticePath, Step};
use crate::error::Result;

const CELL: usize = 24;
const MARGIN: usize = 20;

/// Lattice-point picture. `C` is drawn with `#`, the marking path with `m`
/// (or `@` where it meets `C`), the demarcation path with `:` and `L` with
/// `-`. Row 0 is at the bottom.
pub fn render_ascii(path: &LatticePath, lower: &LatticePath) -> Result<String> {
    let (c, l) = extend_pair(path, lower)?;
    let dem = demarcation(path, lower)?;
    let mar = marking_path(path, lower)?;
    let st = statistic(path, lower)?;
    let (width, height) = c.endpoint();
    let (lw, lh) = l.endpoint();
    let (w, h) = (width.max(lw), height.max(lh));

    let mut grid = vec![vec!['.'; w + 1]; h + 1];
    let paint = |pts: Vec<(usize, usize)>, ch: char, grid: &mut Vec<Vec<char>>| {
        for (x, y) in pts {
            let cell = &mut grid[y][x];
            *cell = match (*cell, ch) {
                ('#', 'm') | ('@', _) => '@',
                _ => ch,
            };
        }
    };
    paint(l.points(), '-', &mut grid);
    paint(dem.points(), ':', &mut grid);
    paint(c.points(), '#', &mut grid);
    paint(mar.points(), 'm', &mut grid);

    let mut out = String::new();
    for y in (0..=h).rev() {
        let row: String = grid[y].iter().flat_map(|&ch| [ch, ' ']).collect();
        writeln!(out, "{y:>3} {}", row.trim_end()).unwrap();
    }
    writeln!(out, "C   {}", path.word()).unwrap();
    writeln!(out, "L   {}", lower.word()).unwrap();
    writeln!(out, "dem {}", dem.word()).unwrap();
    writeln!(out, "mar {}", mar.word()).unwrap();
    writeln!(out, "marked {}", mar.marked()).unwrap();
    writeln!(out, "st {st}").unwrap();
    Ok(out)
}

/// SVG picture with the unmarked east steps of `C` labelled by position.
pub fn render_svg(path: &LatticePath, lower: &LatticePath) -> Result<String> {
    let (c, l) = extend_pair(path, lower)?;
    let dem = demarcation(path, lower)?;
    let mar = marking_path(path, lower)?;
    let st = statistic(path, lower)?;
    let (w, h) = {
        let (a, b) = c.endpoint();
        let (x, y) = l.endpoint();
        (a.max(x), b.max(y))
    };
    let px = |x: usize| MARGIN + x * CELL;
    let py = |y: usize| MARGIN + (h - y) * CELL;
    let polyline = |pts: &[(usize, usize)]| -> String {
        pts.iter()
            .map(|&(x, y)| format!("{},{}", px(x), py(y)))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}">"#,
        2 * MARGIN + w * CELL,
        2 * MARGIN + h * CELL
    )
    .unwrap();
    for x in 0..=w {
        writeln!(
            out,
            r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#ddd"/>"##,
            px(x),
            py(0),
            py(h)
        )
        .unwrap();
    }
    for y in 0..=h {
        writeln!(
            out,
            r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#ddd"/>"##,
            py(y),
            px(0),
            px(w)
        )
        .unwrap();
    }
    let layers = [
        ("lower", l.points(), "#999", ""),
        ("dem", dem.points(), "#2a7", r#" stroke-dasharray="4 3""#),
        ("path", c.points(), "#000", ""),
        ("mar", mar.points(), "#c33", ""),
    ];
    for (class, pts, color, extra) in layers {
        writeln!(
            out,
            r#"<polyline class="{class}" points="{}" fill="none" stroke="{color}" stroke-width="2"{extra}/>"#,
            polyline(&pts)
        )
        .unwrap();
    }
    let (mut x, mut y) = (0, 0);
    for (i, s) in path.steps().iter().enumerate() {
        match s {
            Step::East => {
                if st.contains(i as u32 + 1) {
                    writeln!(
                        out,
                        r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{}</text>"#,
                        px(x) + CELL / 2,
                        py(y) - 4,
                        i + 1
                    )
                    .unwrap();
                }
                x += 1;
            }
            Step::North => y += 1,
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
