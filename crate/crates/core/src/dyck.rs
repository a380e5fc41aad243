//! Text rendering of the Dyck diagram of a semigroup.
//!
//! Cells are two characters wide. Ramification cells of a profile column are
//! drawn `::`, cells above the path in a Betti column that gains rank are
//! drawn `##`, and the path itself uses box-drawing characters.

use std::collections::BTreeMap;

use crate::semigroup::{DyckStep, NumericalSemigroup};
use crate::severi::CodimReport;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Empty,
    Ramification,
    Beyond,
}

pub fn render(sg: &NumericalSemigroup, report: Option<&CodimReport>) -> String {
    let path = sg.dyck_path();
    let g = path.genus as usize;
    if g == 0 {
        return "(empty diagram: genus 0)\n".to_string();
    }

    // cells[col][row], both 0-based from the bottom left
    let mut cells = vec![vec![Cell::Empty; g]; g];
    let column_of: BTreeMap<u64, usize> = path
        .columns
        .iter()
        .enumerate()
        .map(|(k, c)| (c.member, k))
        .collect();
    if let Some(report) = report {
        for (i, &r) in report.profile.iter().enumerate() {
            if let Some(&k) = column_of.get(&r) {
                let grey = (r as usize).saturating_sub(i + 1).min(g);
                for row in cells[k].iter_mut().take(grey) {
                    *row = Cell::Ramification;
                }
            }
        }
        for b in report.betti_b.iter().filter(|b| b.phi >= 1) {
            if let Some(&k) = column_of.get(&b.element) {
                let height = g - path.columns[k].squares_above as usize;
                for row in cells[k].iter_mut().skip(height) {
                    *row = Cell::Beyond;
                }
            }
        }
    }

    // Edges touching each lattice vertex: (left, right, down, up).
    let mut vertex = vec![vec![[false; 4]; g + 1]; g + 1];
    let mut horizontal = vec![vec![false; g]; g + 1];
    let mut vertical = vec![vec![false; g + 1]; g];
    let (mut x, mut y) = (0usize, 0usize);
    for step in &path.steps {
        match step {
            DyckStep::Right => {
                horizontal[y][x] = true;
                vertex[y][x][1] = true;
                vertex[y][x + 1][0] = true;
                x += 1;
            }
            DyckStep::Up => {
                vertical[y][x] = true;
                vertex[y][x][3] = true;
                vertex[y + 1][x][2] = true;
                y += 1;
            }
        }
    }

    let mut out = String::new();
    for y in (0..=g).rev() {
        for x in 0..=g {
            out.push(vertex_char(vertex[y][x]));
            if x < g {
                out.push_str(if horizontal[y][x] { "──" } else { "  " });
            }
        }
        out.push('\n');
        if y == 0 {
            break;
        }
        let row = y - 1;
        for x in 0..=g {
            out.push(if vertical[row][x] { '│' } else { ' ' });
            if x < g {
                out.push_str(match cells[x][row] {
                    Cell::Empty => "  ",
                    Cell::Ramification => "::",
                    Cell::Beyond => "##",
                });
            }
        }
        out.push('\n');
    }

    out.push_str("columns:");
    for c in &path.columns {
        out.push_str(&format!(" {}", c.member));
    }
    out.push('\n');
    if let Some(report) = report {
        for b in &report.betti_b {
            let k = column_of[&b.element] + 1;
            out.push_str(&format!(
                "betti {} (column {k}): classes {}, phi {}, rho {}\n",
                b.element, b.class_count, b.phi, b.rho
            ));
        }
        out.push_str(":: ramification, ## beyond ramification\n");
    }
    out
}

fn vertex_char(edges: [bool; 4]) -> char {
    match edges {
        [true, true, false, false] => '─',
        [false, false, true, true] => '│',
        [false, true, false, true] => '└',
        [true, false, false, true] => '┘',
        [false, true, true, false] => '┌',
        [true, false, true, false] => '┐',
        [false, true, false, false] => '╶',
        [true, false, false, false] => '╴',
        [false, false, false, true] => '╵',
        [false, false, true, false] => '╷',
        _ => '·',
    }
}
