use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Grid, Window};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    pub points: Vec<[f64; 2]>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ContourSet {
    pub polylines: Vec<Polyline>,
}

impl ContourSet {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("contours serialize")
    }

    pub fn vertex_count(&self) -> usize {
        self.polylines.iter().map(|p| p.points.len()).sum()
    }
}

// Edge ids: 2·(j·w + i) is the horizontal edge right of sample (i, j),
// 2·(j·w + i) + 1 the vertical edge below it.
fn h_edge(i: usize, j: usize, w: usize) -> usize {
    2 * (j * w + i)
}

fn v_edge(i: usize, j: usize, w: usize) -> usize {
    2 * (j * w + i) + 1
}

fn crossing(grid: &Grid, window: &Window, edge: usize, iso: f64) -> [f64; 2] {
    let w = grid.width;
    let base = edge / 2;
    let (i, j) = (base % w, base / w);
    let (i2, j2) = if edge.is_multiple_of(2) { (i + 1, j) } else { (i, j + 1) };
    let (va, vb) = (grid.get(i, j), grid.get(i2, j2));
    let (xa, ya) = window.sample(i, j, grid.width, grid.height);
    let (xb, yb) = window.sample(i2, j2, grid.width, grid.height);
    let t = if vb == va { 0.5 } else { (iso - va) / (vb - va) };
    [xa + t * (xb - xa), ya + t * (yb - ya)]
}

/// Iso-contour extraction with the 16-case cell table and linear
/// interpolation along cell edges. Saddle cells are disambiguated by the
/// mean of their four corners.
pub fn marching_squares(grid: &Grid, window: &Window, iso: f64) -> ContourSet {
    let (w, h) = (grid.width, grid.height);
    let mut adjacency: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut link = |a: usize, b: usize| {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    };
    for j in 0..h.saturating_sub(1) {
        for i in 0..w.saturating_sub(1) {
            let corners = [
                grid.get(i, j),
                grid.get(i + 1, j),
                grid.get(i + 1, j + 1),
                grid.get(i, j + 1),
            ];
            if corners.iter().any(|v| v.is_nan()) {
                continue;
            }
            let above: Vec<bool> = corners.iter().map(|&v| v >= iso).collect();
            let case = above
                .iter()
                .enumerate()
                .fold(0u8, |acc, (k, &a)| acc | ((a as u8) << k));
            let top = h_edge(i, j, w);
            let right = v_edge(i + 1, j, w);
            let bottom = h_edge(i, j + 1, w);
            let left = v_edge(i, j, w);
            match case {
                0 | 15 => {}
                1 | 14 => link(left, top),
                2 | 13 => link(top, right),
                3 | 12 => link(left, right),
                4 | 11 => link(right, bottom),
                6 | 9 => link(top, bottom),
                7 | 8 => link(left, bottom),
                5 | 10 => {
                    let center_above = corners.iter().sum::<f64>() / 4.0 >= iso;
                    // corners of the minority sign at the center get cut off
                    let cut_tl_br = (case == 5) != center_above;
                    if cut_tl_br {
                        link(left, top);
                        link(right, bottom);
                    } else {
                        link(top, right);
                        link(left, bottom);
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    let mut visited: BTreeSet<usize> = BTreeSet::new();
    let mut polylines = Vec::new();
    let walk = |start: usize, visited: &mut BTreeSet<usize>| -> (Vec<usize>, bool) {
        let mut chain = vec![start];
        visited.insert(start);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adjacency[&cur]
                .iter()
                .copied()
                .find(|&e| e != prev && !visited.contains(&e));
            match next {
                Some(e) => {
                    visited.insert(e);
                    chain.push(e);
                    prev = cur;
                    cur = e;
                }
                None => {
                    let closed = chain.len() > 2 && adjacency[&cur].contains(&start);
                    return (chain, closed);
                }
            }
        }
    };
    // open chains start at their endpoints, then the remaining cycles
    let endpoints: Vec<usize> = adjacency
        .iter()
        .filter(|(_, n)| n.len() == 1)
        .map(|(&e, _)| e)
        .collect();
    let all: Vec<usize> = adjacency.keys().copied().collect();
    for start in endpoints.into_iter().chain(all) {
        if visited.contains(&start) {
            continue;
        }
        let (chain, closed) = walk(start, &mut visited);
        if chain.len() < 2 {
            continue;
        }
        polylines.push(Polyline {
            points: chain
                .iter()
                .map(|&e| crossing(grid, window, e, iso))
                .collect(),
            closed,
        });
    }
    ContourSet { polylines }
}
