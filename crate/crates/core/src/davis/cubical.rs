use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::homology::{BettiVector, ChainComplex};
use crate::simplicial::SimplicialComplex;

/// One cube of a cubical complex.
#[derive(Clone, Debug)]
pub struct Cell {
    pub label: String,
    pub dim: usize,
    /// Codimension-one faces with incidence signs, `2 * dim` entries.
    pub faces: Vec<(usize, i64)>,
    /// Vertex cells of this cube, sorted.
    pub vertices: Vec<usize>,
}

/// A finite cubical complex. Cells are stored in order of dimension.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    cells: Vec<Cell>,
    by_dim: Vec<Vec<usize>>,
    position: Vec<usize>,
}

#[derive(Serialize)]
struct CellRow<'a> {
    id: usize,
    dim: usize,
    label: &'a str,
    faces: Vec<usize>,
    vertices: Vec<usize>,
}

impl CubicalComplex {
    /// Assembles a complex from cells whose face and vertex lists already
    /// refer to indices in `cells`; cells must be sorted by dimension.
    pub(crate) fn from_cells(cells: Vec<Cell>) -> Self {
        let top = cells.iter().map(|c| c.dim).max().map_or(0, |d| d + 1);
        let mut by_dim = vec![Vec::new(); top];
        let mut position = vec![0; cells.len()];
        for (i, c) in cells.iter().enumerate() {
            position[i] = by_dim[c.dim].len();
            by_dim[c.dim].push(i);
            debug_assert!(c.faces.len() == 2 * c.dim, "cube faces");
        }
        CubicalComplex { cells, by_dim, position }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cell ids of dimension `k`.
    pub fn cells_of_dim(&self, k: usize) -> &[usize] {
        self.by_dim.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 1
    }

    /// Number of cells per dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Cellular chain complex with cube orientations from coordinate order.
    pub fn chain_complex(&self) -> Result<ChainComplex> {
        let sizes = self.cell_counts();
        let boundaries = self
            .by_dim
            .iter()
            .enumerate()
            .map(|(k, ids)| {
                if k == 0 {
                    return Vec::new();
                }
                ids.iter()
                    .map(|&id| {
                        let mut acc: HashMap<usize, i64> = HashMap::new();
                        for &(f, s) in &self.cells[id].faces {
                            *acc.entry(self.position[f]).or_insert(0) += s;
                        }
                        let mut col: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
                        col.sort_unstable();
                        col
                    })
                    .collect()
            })
            .collect();
        ChainComplex::new(sizes, boundaries)
    }

    pub fn betti(&self) -> Result<BettiVector> {
        Ok(BettiVector::from_counts(&self.chain_complex()?.betti_numbers()))
    }

    /// Link of a vertex: one link vertex per edge at `v`, one simplex per
    /// cube containing `v` (spanned by its edges at `v`).
    pub fn vertex_link(&self, v: usize) -> SimplicialComplex {
        let incident: Vec<usize> = (0..self.cells.len())
            .filter(|&c| self.cells[c].dim > 0 && self.cells[c].vertices.binary_search(&v).is_ok())
            .collect();
        let edges: Vec<usize> = incident.iter().copied().filter(|&c| self.cells[c].dim == 1).collect();
        let labels: Vec<String> = edges.iter().map(|&e| self.cells[e].label.clone()).collect();
        let simplices = incident
            .iter()
            .map(|&c| {
                let verts = &self.cells[c].vertices;
                (0..edges.len())
                    .filter(|&i| self.cells[edges[i]].vertices.iter().all(|x| verts.binary_search(x).is_ok()))
                    .collect()
            })
            .collect();
        SimplicialComplex::from_indexed(labels, simplices)
    }

    /// Links of every vertex, keyed by vertex cell id.
    pub fn vertex_links(&self) -> Vec<(usize, SimplicialComplex)> {
        self.cells_of_dim(0).iter().map(|&v| (v, self.vertex_link(v))).collect()
    }

    /// Gromov's condition: every vertex link is a flag complex.
    pub fn npc_check(&self) -> bool {
        self.cells_of_dim(0).iter().all(|&v| self.vertex_link(v).is_flag())
    }

    /// JSON cell list.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<CellRow> = self
            .cells
            .iter()
            .enumerate()
            .map(|(id, c)| CellRow {
                id,
                dim: c.dim,
                label: &c.label,
                faces: c.faces.iter().map(|&(f, _)| f).collect(),
                vertices: c.vertices.clone(),
            })
            .collect();
        serde_json::json!({ "format": "cubical", "cells": rows })
    }

    /// Plain-text export: a header, the vertex labels, then one line per
    /// positive-dimensional cell listing its dimension and vertex ids.
    pub fn to_off(&self) -> String {
        let verts = self.cells_of_dim(0);
        let index: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let higher: Vec<&Cell> = self.cells.iter().filter(|c| c.dim > 0).collect();
        let mut out = format!("CUBICAL\n{} {}\n", verts.len(), higher.len());
        for &v in verts {
            out.push_str(&self.cells[v].label);
            out.push('\n');
        }
        for c in higher {
            let ids: Vec<String> = c.vertices.iter().map(|v| index[v].to_string()).collect();
            out.push_str(&format!("{} {}\n", c.dim, ids.join(" ")));
        }
        out
    }

    /// Order complex of the face poset (the barycentric model); vertices
    /// are cells, simplices are chains of faces.
    pub fn order_complex(&self) -> SimplicialComplex {
        let labels = self.cells.iter().map(|c| c.label.clone()).collect();
        let mut chains = Vec::new();
        let mut stack = Vec::new();
        let mut has_coface = vec![false; self.cells.len()];
        for c in &self.cells {
            for &(f, _) in &c.faces {
                has_coface[f] = true;
            }
        }
        for id in (0..self.cells.len()).filter(|&i| !has_coface[i]) {
            self.descend(id, &mut stack, &mut chains);
        }
        SimplicialComplex::from_indexed(labels, chains)
    }

    fn descend(&self, id: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        stack.push(id);
        if self.cells[id].faces.is_empty() {
            out.push(stack.clone());
        } else {
            for &(f, _) in &self.cells[id].faces {
                self.descend(f, stack, out);
            }
        }
        stack.pop();
    }
}
